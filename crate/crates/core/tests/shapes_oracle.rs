//! Shape-level oracles: bijection round trips, strip predicates against
//! word criteria, the box characterizations against the word
//! definitions, and intermediate-shape counts against reduced
//! factorization counts.

use schubert_core::shapes::{
    ell_k, grassmannian_a, grassmannian_c, grassmannian_d, intermediate_count_c,
    intermediate_count_d, is_compatible_pair_c, is_compatible_pair_d, is_k_horizontal_strip,
    is_typed_k_horizontal_strip, is_typed_x_strip_d, is_typed_x_strip_d_boxes,
    is_typed_y_strip_d, is_typed_y_strip_d_boxes, is_x_strip_c, is_x_strip_c_boxes,
    is_y_strip_c, is_y_strip_c_boxes, k_strict_in, partitions_between, partitions_in,
    shape_a, shape_c, shape_d, skew_element_c, skew_element_d, typed_in, Partition,
};
use schubert_core::weyl::{is_unimodal, left_factors};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

#[test]
fn round_trip_a() {
    let bound = p(&[4, 4, 4, 4]);
    for lam in partitions_in(&bound) {
        for m in lam.len().max(1)..=4 {
            let w = grassmannian_a(&lam, m).unwrap();
            if lam.is_empty() {
                assert!(w.is_identity());
                continue;
            }
            let (shape, descent) = shape_a(&w).unwrap();
            assert_eq!(shape, lam);
            assert_eq!(descent, m);
            assert_eq!(w.length() as u32, lam.size());
        }
    }
}

#[test]
fn round_trip_c_small() {
    let bound = p(&[4, 3, 2, 1]);
    for k in 0..=3 {
        for lam in k_strict_in(&bound, k) {
            let w = grassmannian_c(&lam, k).unwrap();
            assert_eq!(shape_c(&w, k), Some(lam.clone()), "k={} lam={}", k, lam);
            assert_eq!(w.length() as u32, lam.size());
        }
    }
}

#[test]
fn round_trip_d_small() {
    let bound = p(&[4, 3, 2, 1]);
    for k in 1..=3 {
        for lam in typed_in(&bound, k) {
            let w = grassmannian_d(&lam, k).unwrap();
            assert_eq!(shape_d(&w, k), Some(lam.clone()), "k={} lam={}", k, lam);
            assert_eq!(w.length() as u32, lam.size());
        }
    }
}

#[test]
fn strip_iff_unimodal_c_small() {
    let bound = p(&[4, 3, 2]);
    for k in 0..=2 {
        for lam in k_strict_in(&bound, k) {
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                let strip = is_k_horizontal_strip(&lam, &mu, k);
                let word = is_compatible_pair_c(&lam, &mu, k)
                    && is_unimodal(&skew_element_c(&lam, &mu, k).unwrap());
                assert_eq!(strip, word, "k={} lam={} mu={}", k, lam, mu);
            }
        }
    }
}

#[test]
fn strip_iff_unimodal_d_small() {
    let bound = p(&[4, 3, 2]);
    for k in 1..=2 {
        for lam in typed_in(&bound, k) {
            for mu in typed_in(&lam.shape.clone(), k) {
                if !lam.shape.contains(&mu.shape) {
                    continue;
                }
                let strip = is_typed_k_horizontal_strip(&lam, &mu, k);
                let word = is_compatible_pair_d(&lam, &mu, k)
                    && is_unimodal(&skew_element_d(&lam, &mu, k).unwrap());
                assert_eq!(strip, word, "k={} lam={} mu={}", k, lam, mu);
            }
        }
    }
}

#[test]
fn xy_strips_word_def_equals_box_characterization_c() {
    let bound = p(&[4, 3, 2]);
    for k in 0..=2 {
        for lam in k_strict_in(&bound, k) {
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                assert_eq!(
                    is_x_strip_c(&lam, &mu, k),
                    is_x_strip_c_boxes(&lam, &mu, k),
                    "x, k={} lam={} mu={}",
                    k,
                    lam,
                    mu
                );
                assert_eq!(
                    is_y_strip_c(&lam, &mu, k),
                    is_y_strip_c_boxes(&lam, &mu, k),
                    "y, k={} lam={} mu={}",
                    k,
                    lam,
                    mu
                );
            }
        }
    }
}

#[test]
fn xy_strips_word_def_equals_box_characterization_d() {
    let bound = p(&[4, 3, 2]);
    for k in 1..=2 {
        for lam in typed_in(&bound, k) {
            for mu in typed_in(&lam.shape.clone(), k) {
                if !lam.shape.contains(&mu.shape) {
                    continue;
                }
                assert_eq!(
                    is_typed_x_strip_d(&lam, &mu, k),
                    is_typed_x_strip_d_boxes(&lam, &mu, k),
                    "x, k={} lam={} mu={}",
                    k,
                    lam,
                    mu
                );
                assert_eq!(
                    is_typed_y_strip_d(&lam, &mu, k),
                    is_typed_y_strip_d_boxes(&lam, &mu, k),
                    "y, k={} lam={} mu={}",
                    k,
                    lam,
                    mu
                );
            }
        }
    }
}

#[test]
fn strips_are_compatible_pairs() {
    let bound = p(&[4, 3, 2]);
    for k in 0..=2 {
        for lam in k_strict_in(&bound, k) {
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                if is_k_horizontal_strip(&lam, &mu, k) {
                    assert!(is_compatible_pair_c(&lam, &mu, k));
                    let w = skew_element_c(&lam, &mu, k).unwrap();
                    assert_eq!(w.length() as u32, lam.size() - mu.size());
                }
            }
        }
    }
}

#[test]
fn intermediate_counts_match_factorizations_c() {
    let bound = p(&[4, 3, 2]);
    for k in 0..=2 {
        for lam in k_strict_in(&bound, k) {
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                if let Some(count) = intermediate_count_c(&lam, &mu, k) {
                    let w = skew_element_c(&lam, &mu, k).unwrap();
                    let factorizations = left_factors(&w).len() as u64;
                    assert_eq!(count, factorizations, "k={} lam={} mu={}", k, lam, mu);
                }
            }
        }
    }
}

#[test]
fn intermediate_counts_match_factorizations_d() {
    let bound = p(&[3, 2, 1]);
    for k in 1..=2 {
        for lam in typed_in(&bound, k) {
            for mu in typed_in(&lam.shape.clone(), k) {
                if !lam.shape.contains(&mu.shape) {
                    continue;
                }
                if let Some(count) = intermediate_count_d(&lam, &mu, k) {
                    let w = skew_element_d(&lam, &mu, k).unwrap();
                    let factorizations = left_factors(&w).len() as u64;
                    assert_eq!(count, factorizations, "k={} lam={} mu={}", k, lam, mu);
                }
            }
        }
    }
}

#[test]
fn ell_k_counts_long_parts() {
    assert_eq!(ell_k(&p(&[8, 4, 2, 1]), 3), 2);
    assert_eq!(ell_k(&p(&[3, 1]), 1), 1);
    assert_eq!(ell_k(&Partition::empty(), 0), 0);
}
