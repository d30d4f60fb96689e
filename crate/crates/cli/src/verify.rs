//! The verification harness: exhaustively compares tableau sums against
//! nilCoxeter extraction over a bounded grid of compatible pairs, in all
//! three tableau types.

use schubert_core::nilcoxeter::{schubert_a, schubert_c, schubert_d};
use schubert_core::shapes::{
    grassmannian_a, grassmannian_c, grassmannian_d, is_compatible_pair_a, is_compatible_pair_c,
    is_compatible_pair_d, k_strict_in, partitions_between, partitions_in, skew_element_a,
    skew_element_c, skew_element_d, typed_in, Partition,
};
use schubert_core::tableaux::{tableau_eta, tableau_schur, tableau_theta};

#[derive(Clone, Debug)]
pub struct Bounds {
    /// Outer shapes range over subshapes of this partition.
    pub bound: Partition,
    /// Largest k for types C and D.
    pub max_k: u32,
    /// Largest Grassmannian descent for type A.
    pub max_m_a: usize,
    /// Rank of the ambient group for types C and D; pairs whose outer
    /// element does not fit are skipped.
    pub n: usize,
    /// Number of z-variables.
    pub z: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            bound: Partition::new(vec![4, 3, 2, 1]).expect("valid partition"),
            max_k: 2,
            max_m_a: 3,
            n: 4,
            z: 2,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Mismatch {
    pub description: String,
}

#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub a_instances: usize,
    pub c_instances: usize,
    pub d_instances: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Outcome {
    pub fn total(&self) -> usize {
        self.a_instances + self.c_instances + self.d_instances
    }

    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs the full tableau-versus-nilCoxeter sweep. Stops collecting after
/// the first few mismatches to keep reports small.
pub fn run(bounds: &Bounds) -> Outcome {
    let mut out = Outcome::default();
    run_type_a(bounds, &mut out);
    run_type_c(bounds, &mut out);
    run_type_d(bounds, &mut out);
    out
}

const MISMATCH_CAP: usize = 5;

fn run_type_a(bounds: &Bounds, out: &mut Outcome) {
    for m in 1..=bounds.max_m_a {
        for lam in partitions_in(&bounds.bound) {
            if lam.len() > m {
                continue;
            }
            let w_lam = grassmannian_a(&lam, m).expect("length checked");
            let n = w_lam.min_rank().max(1);
            for mu in partitions_between(&Partition::empty(), &lam, None) {
                if !is_compatible_pair_a(&lam, &mu, m) {
                    continue;
                }
                let w = skew_element_a(&lam, &mu, m).expect("compatible pair");
                let tab = tableau_schur(&lam, &mu, m, n).expect("compatible pair");
                let nil = schubert_a(&w, n).expect("element fits");
                out.a_instances += 1;
                if tab != nil && out.mismatches.len() < MISMATCH_CAP {
                    out.mismatches.push(Mismatch {
                        description: format!(
                            "type A m={} lambda={} mu={}: tableau {} != nilcoxeter {}",
                            m, lam, mu, tab, nil
                        ),
                    });
                }
            }
        }
    }
}

fn run_type_c(bounds: &Bounds, out: &mut Outcome) {
    for k in 0..=bounds.max_k {
        for lam in k_strict_in(&bounds.bound, k) {
            let w_lam = grassmannian_c(&lam, k).expect("k-strict");
            if !w_lam.fits_rank(bounds.n) {
                continue;
            }
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                if !is_compatible_pair_c(&lam, &mu, k) {
                    continue;
                }
                let w = skew_element_c(&lam, &mu, k).expect("compatible pair");
                let tab =
                    tableau_theta(&lam, &mu, k, bounds.n, bounds.z).expect("compatible pair");
                let nil = schubert_c(&w, bounds.n, bounds.z).expect("element fits");
                out.c_instances += 1;
                if tab != nil && out.mismatches.len() < MISMATCH_CAP {
                    out.mismatches.push(Mismatch {
                        description: format!(
                            "type C k={} lambda={} mu={}: tableau {} != nilcoxeter {}",
                            k, lam, mu, tab, nil
                        ),
                    });
                }
            }
        }
    }
}

fn run_type_d(bounds: &Bounds, out: &mut Outcome) {
    for k in 1..=bounds.max_k {
        for lam in typed_in(&bounds.bound, k) {
            let w_lam = grassmannian_d(&lam, k).expect("typed shape");
            if !w_lam.fits_rank(bounds.n) {
                continue;
            }
            for mu in typed_in(&lam.shape.clone(), k) {
                if !lam.shape.contains(&mu.shape) || !is_compatible_pair_d(&lam, &mu, k) {
                    continue;
                }
                let w = skew_element_d(&lam, &mu, k).expect("compatible pair");
                let tab = tableau_eta(&lam, &mu, k, bounds.n, bounds.z).expect("compatible pair");
                let nil = schubert_d(&w, bounds.n, bounds.z).expect("element fits");
                out.d_instances += 1;
                if tab != nil && out.mismatches.len() < MISMATCH_CAP {
                    out.mismatches.push(Mismatch {
                        description: format!(
                            "type D k={} lambda={} mu={}: tableau {} != nilcoxeter {}",
                            k, lam, mu, tab, nil
                        ),
                    });
                }
            }
        }
    }
}
