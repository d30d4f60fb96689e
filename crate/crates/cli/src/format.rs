//! JSON serialization of polynomials.
//!
//! A polynomial is an array of terms in canonical order, each
//! `{"c": "numerator/denominator", "m": {"x": [[i,e],...], "y": [...],
//! "z": [...]}}` with the family arrays sorted by index.

use schubert_core::poly::{Dyadic, Family, Monomial, Polynomial, VariableId};
use serde_json::{json, Value};

pub fn poly_to_json(p: &Polynomial) -> Value {
    let mut terms = Vec::new();
    for (mono, coeff) in p.terms() {
        let mut x = Vec::new();
        let mut y = Vec::new();
        let mut z = Vec::new();
        for &(v, e) in mono.factors() {
            let pair = json!([v.index, e]);
            match v.family {
                Family::X => x.push(pair),
                Family::Y => y.push(pair),
                Family::Z => z.push(pair),
            }
        }
        terms.push(json!({
            "c": format!("{}/{}", coeff.numerator(), coeff.denominator()),
            "m": { "x": x, "y": y, "z": z },
        }));
    }
    Value::Array(terms)
}

fn parse_coefficient(s: &str) -> Result<Dyadic, String> {
    let (num_str, den_str) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: num_bigint::BigInt = num_str
        .parse()
        .map_err(|_| format!("bad numerator {:?}", num_str))?;
    let den: num_bigint::BigInt = den_str
        .parse()
        .map_err(|_| format!("bad denominator {:?}", den_str))?;
    if den <= num_bigint::BigInt::from(0) {
        return Err(format!("denominator must be positive: {:?}", s));
    }
    let tz = den.trailing_zeros().unwrap_or(0);
    if den.clone() >> tz != num_bigint::BigInt::from(1) {
        return Err(format!("denominator is not a power of two: {:?}", s));
    }
    Ok(Dyadic::new(num, tz as u32))
}

fn family_pairs(v: &Value, family: Family, out: &mut Vec<(VariableId, u32)>) -> Result<(), String> {
    let arr = v.as_array().ok_or("family entry must be an array")?;
    for pair in arr {
        let pair = pair.as_array().ok_or("exponent entry must be [index, exp]")?;
        if pair.len() != 2 {
            return Err("exponent entry must be [index, exp]".into());
        }
        let idx = pair[0].as_u64().ok_or("index must be a positive integer")? as u32;
        let exp = pair[1].as_u64().ok_or("exponent must be a positive integer")? as u32;
        if idx == 0 || exp == 0 {
            return Err("indices and exponents must be positive".into());
        }
        out.push((VariableId::new(family, idx), exp));
    }
    Ok(())
}

pub fn poly_from_json(v: &Value) -> Result<Polynomial, String> {
    let terms = v.as_array().ok_or("polynomial must be an array of terms")?;
    let mut out = Polynomial::zero();
    for term in terms {
        let obj = term.as_object().ok_or("term must be an object")?;
        let c = obj
            .get("c")
            .and_then(Value::as_str)
            .ok_or("term is missing the coefficient string")?;
        let coeff = parse_coefficient(c)?;
        let m = obj.get("m").ok_or("term is missing the monomial")?;
        let mobj = m.as_object().ok_or("monomial must be an object")?;
        let mut pairs = Vec::new();
        for (key, family) in [("x", Family::X), ("y", Family::Y), ("z", Family::Z)] {
            if let Some(arr) = mobj.get(key) {
                family_pairs(arr, family, &mut pairs)?;
            }
        }
        out.add_term(Monomial::from_factors(pairs), coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = Polynomial::x(1)
            .sub(&Polynomial::y(2))
            .mul(&Polynomial::z(1))
            .add(&Polynomial::one())
            .scale_pow2(-1);
        let v = poly_to_json(&p);
        let q = poly_from_json(&v).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn rejects_non_dyadic_denominator() {
        assert!(parse_coefficient("1/3").is_err());
        assert!(parse_coefficient("5/4").is_ok());
        assert!(parse_coefficient("7").is_ok());
    }
}
