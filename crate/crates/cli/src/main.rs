//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
//! error, 3 precondition failure (incompatible pair, rank too small,
//! element outside the group).

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schubert_cli::format::poly_to_json;
use schubert_cli::verify::{self, Bounds};
use schubert_core::nilcoxeter::{
    schubert_a, schubert_b, schubert_c, schubert_d, stanley_e, stanley_f,
};
use schubert_core::poly::Polynomial;
use schubert_core::shapes::{
    grassmannian_a, grassmannian_c, grassmannian_d, is_compatible_pair_a, is_compatible_pair_c,
    is_compatible_pair_d, parse_partition, skew_element_a, skew_element_c, skew_element_d,
    skew_pairs_a, skew_pairs_c, skew_pairs_d, Partition, ShapeType, TypedShape,
};
use schubert_core::tableaux::{
    bitableaux, stanley_e_tableau, stanley_f_tableau, tableau_eta, tableau_schur, tableau_theta,
    tritableaux_c, tritableaux_d, SkewTableau,
};
use schubert_core::weyl::{evaluate_word, parse_window, parse_word, GroupTag, SignedPermutation};

#[derive(Parser)]
#[command(
    name = "schubert",
    about = "Double Schubert polynomials of the classical types, by nilCoxeter expansion and by tableau enumeration",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute a Schubert polynomial or Stanley function.
    Compute(ComputeArgs),
    /// Enumerate the tableaux behind a tableau formula.
    Tableaux(TableauxArgs),
    /// Exhaustively compare the two computation methods.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LieType {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Nilcoxeter,
    Tableau,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ComputeArgs {
    /// Lie type of the polynomial.
    #[arg(long = "type", value_enum)]
    lie_type: LieType,
    /// Element as a comma-separated reduced word (B for the box letter).
    #[arg(long)]
    word: Option<String>,
    /// Element in window notation, e.g. 2,4,7,-5,-1,3,6.
    #[arg(long)]
    element: Option<String>,
    /// Outer shape as comma-separated parts (0 or empty for the empty shape).
    #[arg(long)]
    shape: Option<String>,
    /// Type flag of the outer shape (type D only).
    #[arg(long = "shape-type")]
    shape_type: Option<u8>,
    /// Inner shape for a skew pair.
    #[arg(long = "inner-shape")]
    inner_shape: Option<String>,
    /// Type flag of the inner shape (type D only).
    #[arg(long = "inner-shape-type")]
    inner_shape_type: Option<u8>,
    /// Grassmannian descent: k in types B/C/D, m in type A.
    #[arg(long, default_value_t = 0)]
    k: u32,
    /// Rank of the ambient group (defaults to the smallest valid rank).
    #[arg(long)]
    n: Option<usize>,
    /// Number of z-variables kept (types B/C/D).
    #[arg(long = "z", default_value_t = 2)]
    z: usize,
    /// Computation method.
    #[arg(long, value_enum, default_value = "nilcoxeter")]
    method: Method,
    /// Output format.
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Compute the Stanley function instead of the Schubert polynomial.
    #[arg(long, default_value_t = false)]
    stanley: bool,
}

#[derive(Args)]
struct TableauxArgs {
    #[arg(long = "type", value_enum)]
    lie_type: LieType,
    #[arg(long)]
    shape: String,
    #[arg(long = "shape-type")]
    shape_type: Option<u8>,
    #[arg(long = "inner-shape")]
    inner_shape: Option<String>,
    #[arg(long = "inner-shape-type")]
    inner_shape_type: Option<u8>,
    /// Grassmannian descent: k in types C/D, m in type A.
    #[arg(long, default_value_t = 0)]
    k: u32,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "z", default_value_t = 2)]
    z: usize,
    /// Print only the histogram of tableau counts.
    #[arg(long = "count-only", default_value_t = false)]
    count_only: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Bounding shape for the sweep.
    #[arg(long, default_value = "4,3,2,1")]
    bound: String,
    /// Largest k for types C and D.
    #[arg(long = "max-k", default_value_t = 2)]
    max_k: u32,
    /// Largest Grassmannian descent for type A.
    #[arg(long = "max-m-a", default_value_t = 3)]
    max_m_a: usize,
    /// Ambient rank for types C and D.
    #[arg(long, default_value_t = 4)]
    n: usize,
    #[arg(long = "z", default_value_t = 2)]
    z: usize,
}

enum CmdError {
    /// Malformed input text: exit 2.
    Parse(String),
    /// Valid input that violates a precondition: exit 3.
    Precondition(String),
}

impl CmdError {
    fn exit(self) -> ExitCode {
        match self {
            CmdError::Parse(msg) => {
                eprintln!("error: {}", msg);
                ExitCode::from(2)
            }
            CmdError::Precondition(msg) => {
                eprintln!("error: {}", msg);
                ExitCode::from(3)
            }
        }
    }
}

fn tag_of(t: LieType) -> GroupTag {
    match t {
        LieType::A => GroupTag::TypeA,
        LieType::B | LieType::C => GroupTag::TypeBC,
        LieType::D => GroupTag::TypeD,
    }
}

fn parse_shape_arg(s: &str) -> Result<Partition, CmdError> {
    parse_partition(s).map_err(|e| CmdError::Parse(format!("bad shape {:?}: {}", s, e)))
}

fn typed_shape_arg(
    shape: &Partition,
    ty: Option<u8>,
    k: u32,
    what: &str,
) -> Result<TypedShape, CmdError> {
    let ty = match ty {
        Some(v) => ShapeType::from_u8(v)
            .ok_or_else(|| CmdError::Parse(format!("{} type must be 0, 1, or 2", what)))?,
        None => {
            if k > 0 && shape.parts().contains(&k) {
                ShapeType::One
            } else {
                ShapeType::Zero
            }
        }
    };
    TypedShape::new(shape.clone(), ty, k)
        .map_err(|e| CmdError::Precondition(format!("invalid {}: {}", what, e)))
}

/// The element plus, when a shape route was taken or found, the shape
/// pair driving the tableau formula.
struct Resolved {
    w: SignedPermutation,
    pair_c: Option<(Partition, Partition)>,
    pair_d: Option<(TypedShape, TypedShape)>,
    pair_a: Option<(Partition, Partition)>,
}

fn resolve_element(args: &ComputeArgs) -> Result<Resolved, CmdError> {
    let tag = tag_of(args.lie_type);
    if let Some(word) = &args.word {
        let letters = parse_word(word, tag)
            .map_err(|e| CmdError::Parse(format!("bad word {:?}: {}", word, e)))?;
        let w = evaluate_word(&letters, tag)
            .map_err(|e| CmdError::Parse(format!("bad word {:?}: {}", word, e)))?;
        return Ok(Resolved { w, pair_c: None, pair_d: None, pair_a: None });
    }
    if let Some(window) = &args.element {
        let w = parse_window(window, tag)
            .map_err(|e| CmdError::Parse(format!("bad element {:?}: {}", window, e)))?;
        return Ok(Resolved { w, pair_c: None, pair_d: None, pair_a: None });
    }
    let shape_str = args
        .shape
        .as_ref()
        .ok_or_else(|| CmdError::Parse("provide --word or --shape".into()))?;
    let lambda = parse_shape_arg(shape_str)?;
    let inner = match &args.inner_shape {
        Some(s) => parse_shape_arg(s)?,
        None => Partition::empty(),
    };
    match args.lie_type {
        LieType::A => {
            let m = args.k as usize;
            if m == 0 {
                return Err(CmdError::Parse(
                    "type A shapes need --k (the Grassmannian descent m)".into(),
                ));
            }
            if !is_compatible_pair_a(&lambda, &inner, m) {
                return Err(CmdError::Precondition(format!(
                    "({}, {}) is not a compatible pair for m={}",
                    lambda, inner, m
                )));
            }
            let w = skew_element_a(&lambda, &inner, m)
                .map_err(|e| CmdError::Precondition(e.to_string()))?;
            Ok(Resolved { w, pair_c: None, pair_d: None, pair_a: Some((lambda, inner)) })
        }
        LieType::B | LieType::C => {
            if !is_compatible_pair_c(&lambda, &inner, args.k) {
                return Err(CmdError::Precondition(format!(
                    "({}, {}) is not a compatible pair for k={}",
                    lambda, inner, args.k
                )));
            }
            let w = skew_element_c(&lambda, &inner, args.k)
                .map_err(|e| CmdError::Precondition(e.to_string()))?;
            Ok(Resolved { w, pair_c: Some((lambda, inner)), pair_d: None, pair_a: None })
        }
        LieType::D => {
            let lam = typed_shape_arg(&lambda, args.shape_type, args.k, "outer shape")?;
            let mu = typed_shape_arg(&inner, args.inner_shape_type, args.k, "inner shape")?;
            if !is_compatible_pair_d(&lam, &mu, args.k) {
                return Err(CmdError::Precondition(format!(
                    "({}, {}) is not a compatible pair for k={}",
                    lam, mu, args.k
                )));
            }
            let w = skew_element_d(&lam, &mu, args.k)
                .map_err(|e| CmdError::Precondition(e.to_string()))?;
            Ok(Resolved { w, pair_c: None, pair_d: Some((lam, mu)), pair_a: None })
        }
    }
}

fn search_bound(w: &SignedPermutation, k: u32) -> Partition {
    let len = w.length() as u32;
    let side = len + k + 1;
    Partition::new(vec![side; (len + 1) as usize]).expect("constant parts")
}

fn compute_by_tableau(
    args: &ComputeArgs,
    resolved: &Resolved,
    n: usize,
) -> Result<Polynomial, CmdError> {
    let w = &resolved.w;
    let to_pre = |e: schubert_core::tableaux::TableauError| CmdError::Precondition(e.to_string());
    match args.lie_type {
        LieType::A => {
            let (lambda, mu) = match &resolved.pair_a {
                Some(pair) => pair.clone(),
                None => skew_pairs_a(w, args.k as usize, &search_bound(w, args.k))
                    .into_iter()
                    .next()
                    .ok_or_else(|| {
                        CmdError::Precondition(format!(
                            "{} is not a skew element for m={} within the search bound",
                            w, args.k
                        ))
                    })?,
            };
            tableau_schur(&lambda, &mu, args.k as usize, n).map_err(to_pre)
        }
        LieType::B | LieType::C => {
            let (lambda, mu) = match &resolved.pair_c {
                Some(pair) => pair.clone(),
                None => skew_pairs_c(w, args.k, &search_bound(w, args.k))
                    .into_iter()
                    .next()
                    .ok_or_else(|| {
                        CmdError::Precondition(format!(
                            "{} is not a skew element for k={} within the search bound",
                            w, args.k
                        ))
                    })?,
            };
            let n = n.max(grassmannian_c(&lambda, args.k).map_err(|e| CmdError::Precondition(e.to_string()))?.min_rank());
            let p = if args.stanley {
                stanley_f_tableau(&lambda, &mu, args.k, args.z).map_err(to_pre)?
            } else {
                tableau_theta(&lambda, &mu, args.k, n, args.z).map_err(to_pre)?
            };
            Ok(if args.lie_type == LieType::B {
                p.scale_pow2(-(w.neg_count() as i64))
            } else {
                p
            })
        }
        LieType::D => {
            let (lambda, mu) = match &resolved.pair_d {
                Some(pair) => pair.clone(),
                None => skew_pairs_d(w, args.k, &search_bound(w, args.k))
                    .into_iter()
                    .next()
                    .ok_or_else(|| {
                        CmdError::Precondition(format!(
                            "{} is not a skew element for k={} within the search bound",
                            w, args.k
                        ))
                    })?,
            };
            let n = n.max(grassmannian_d(&lambda, args.k).map_err(|e| CmdError::Precondition(e.to_string()))?.min_rank());
            if args.stanley {
                stanley_e_tableau(&lambda, &mu, args.k, args.z).map_err(to_pre)
            } else {
                tableau_eta(&lambda, &mu, args.k, n, args.z).map_err(to_pre)
            }
        }
    }
}

fn compute_by_nilcoxeter(
    args: &ComputeArgs,
    resolved: &Resolved,
    n: usize,
) -> Result<Polynomial, CmdError> {
    let w = &resolved.w;
    let to_pre = |e: schubert_core::nilcoxeter::NilCoxeterError| {
        CmdError::Precondition(e.to_string())
    };
    match args.lie_type {
        LieType::A => {
            if args.stanley {
                return Err(CmdError::Parse(
                    "Stanley functions are defined for types B/C (F) and D (E)".into(),
                ));
            }
            schubert_a(w, n).map_err(to_pre)
        }
        LieType::B => {
            if args.stanley {
                return stanley_f(w, args.z).map_err(to_pre);
            }
            schubert_b(w, n, args.z).map_err(to_pre)
        }
        LieType::C => {
            if args.stanley {
                return stanley_f(w, args.z).map_err(to_pre);
            }
            schubert_c(w, n, args.z).map_err(to_pre)
        }
        LieType::D => {
            if args.stanley {
                return stanley_e(w, args.z).map_err(to_pre);
            }
            schubert_d(w, n, args.z).map_err(to_pre)
        }
    }
}

fn cmd_compute(args: ComputeArgs) -> Result<(), CmdError> {
    if args.lie_type == LieType::A && args.stanley {
        return Err(CmdError::Parse(
            "Stanley functions are defined for types B/C (F) and D (E)".into(),
        ));
    }
    let resolved = resolve_element(&args)?;
    let min_n = resolved.w.min_rank().max(1);
    let n = match args.n {
        Some(n) => {
            if n < min_n {
                return Err(CmdError::Precondition(format!(
                    "rank n={} is too small for {}",
                    n, resolved.w
                )));
            }
            n
        }
        None => min_n,
    };
    let poly = match args.method {
        Method::Nilcoxeter => compute_by_nilcoxeter(&args, &resolved, n)?,
        Method::Tableau => compute_by_tableau(&args, &resolved, n)?,
    };
    match args.format {
        Format::Text => println!("{}", poly),
        Format::Json => println!("{}", poly_to_json(&poly)),
    }
    Ok(())
}

struct Summary {
    total: usize,
    plain: usize,
    marked: usize,
    histogram: BTreeMap<u32, usize>,
}

fn summarize(tableaux: &[SkewTableau]) -> Summary {
    let mut summary = Summary {
        total: tableaux.len(),
        plain: 0,
        marked: 0,
        histogram: BTreeMap::new(),
    };
    for t in tableaux {
        if t.has_double_primed() {
            summary.marked += 1;
            *summary.histogram.entry(t.n_stat).or_insert(0) += 1;
        } else {
            summary.plain += 1;
        }
    }
    summary
}

fn cmd_tableaux(args: TableauxArgs) -> Result<(), CmdError> {
    let lambda = parse_shape_arg(&args.shape)?;
    let inner = match &args.inner_shape {
        Some(s) => parse_shape_arg(s)?,
        None => Partition::empty(),
    };
    let to_pre = |e: schubert_core::tableaux::TableauError| CmdError::Precondition(e.to_string());
    let list = match args.lie_type {
        LieType::A => {
            let m = args.k as usize;
            if m == 0 {
                return Err(CmdError::Parse(
                    "type A tableaux need --k (the Grassmannian descent m)".into(),
                ));
            }
            let n = match args.n {
                Some(n) => n,
                None => grassmannian_a(&lambda, m)
                    .map_err(|e| CmdError::Precondition(e.to_string()))?
                    .min_rank()
                    .max(1),
            };
            bitableaux(&lambda, &inner, m, n).map_err(to_pre)?
        }
        LieType::B => {
            return Err(CmdError::Parse(
                "tableaux are enumerated for types A, C, and D; use C for the type B rescaling"
                    .into(),
            ));
        }
        LieType::C => {
            let n = match args.n {
                Some(n) => n,
                None => grassmannian_c(&lambda, args.k)
                    .map_err(|e| CmdError::Precondition(e.to_string()))?
                    .min_rank()
                    .max(1),
            };
            tritableaux_c(&lambda, &inner, args.k, n, args.z).map_err(to_pre)?
        }
        LieType::D => {
            let lam = typed_shape_arg(&lambda, args.shape_type, args.k, "outer shape")?;
            let mu = typed_shape_arg(&inner, args.inner_shape_type, args.k, "inner shape")?;
            let n = match args.n {
                Some(n) => n,
                None => grassmannian_d(&lam, args.k)
                    .map_err(|e| CmdError::Precondition(e.to_string()))?
                    .min_rank()
                    .max(1),
            };
            tritableaux_d(&lam, &mu, args.k, n, args.z).map_err(to_pre)?
        }
    };
    let summary = summarize(&list);
    match args.format {
        Format::Json => {
            let mut hist = serde_json::Map::new();
            for (n, count) in &summary.histogram {
                hist.insert(n.to_string(), serde_json::json!(count));
            }
            let mut value = serde_json::json!({
                "total": summary.total,
                "without_double_primed": summary.plain,
                "with_double_primed": summary.marked,
                "histogram": hist,
            });
            if !args.count_only {
                let rendered: Vec<serde_json::Value> = list
                    .iter()
                    .map(|t| {
                        serde_json::json!({
                            "rows": t.render().split('\n').collect::<Vec<_>>(),
                            "n": t.n_stat,
                            "weight": format!("{}", t.weight_polynomial()),
                        })
                    })
                    .collect();
                value["tableaux"] = serde_json::Value::Array(rendered);
            }
            println!("{}", value);
        }
        Format::Text => {
            if !args.count_only {
                for t in &list {
                    println!("{}", t.render());
                    println!("weight: {}", t.weight_polynomial());
                    println!();
                }
            }
            println!("total: {}", summary.total);
            if args.lie_type != LieType::A {
                println!("without double-primed: {}", summary.plain);
                println!("with double-primed: {}", summary.marked);
                for (n, count) in summary.histogram.iter().rev() {
                    println!("  n={}: {}", n, count);
                }
            }
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, CmdError> {
    let bound = parse_shape_arg(&args.bound)?;
    let bounds = Bounds {
        bound,
        max_k: args.max_k,
        max_m_a: args.max_m_a,
        n: args.n,
        z: args.z,
    };
    let outcome = verify::run(&bounds);
    println!("type A: {} instances", outcome.a_instances);
    println!("type C: {} instances", outcome.c_instances);
    println!("type D: {} instances", outcome.d_instances);
    if outcome.ok() {
        println!("OK, {} instances", outcome.total());
        Ok(true)
    } else {
        for m in &outcome.mismatches {
            println!("MISMATCH: {}", m.description);
        }
        println!("FAIL, {} mismatches", outcome.mismatches.len());
        Ok(false)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Compute(args) => match cmd_compute(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => e.exit(),
        },
        Cmd::Tableaux(args) => match cmd_tableaux(args) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => e.exit(),
        },
        Cmd::Verify(args) => match cmd_verify(args) {
            Ok(true) => ExitCode::SUCCESS,
            Ok(false) => ExitCode::from(1),
            Err(e) => e.exit(),
        },
    }
}
