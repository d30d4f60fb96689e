//! Acceptance suite: one test per criterion, exact arithmetic
//! throughout (equality, no tolerances).

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use schubert_cli::verify::{self, Bounds};
use schubert_core::nilcoxeter::{schubert_b, schubert_c, schubert_d};
use schubert_core::poly::{Family, Polynomial};
use schubert_core::shapes::{
    ell_k, epsilon, grassmannian_c, grassmannian_d, is_compatible_pair_c, is_k_horizontal_strip,
    is_typed_k_horizontal_strip, is_typed_x_strip_d, is_typed_x_strip_d_boxes, is_typed_y_strip_d,
    is_typed_y_strip_d_boxes, is_x_strip_c, is_x_strip_c_boxes, is_y_strip_c, is_y_strip_c_boxes,
    k_strict_in, partitions_between, partitions_in, shape_c, shape_d, skew_element_c,
    skew_element_d, typed_in, Partition, ShapeType, TypedShape,
};
use schubert_core::tableaux::{
    double_schur_determinant, tableau_eta, tableau_schur, tableau_theta, tritableaux_c,
    tritableaux_d, SkewTableau,
};
use schubert_core::weyl::{all_elements, is_unimodal, GroupTag, SignedPermutation};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn ts(parts: &[u32], ty: u8, k: u32) -> TypedShape {
    TypedShape::new(p(parts), ShapeType::from_u8(ty).unwrap(), k).unwrap()
}

fn y_zero(poly: &Polynomial) -> Polynomial {
    poly.zero_family(Family::Y)
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_schubert"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 output"),
        out.status.code().unwrap_or(-1),
    )
}

fn split_counts(tableaux: &[SkewTableau]) -> (usize, usize, BTreeMap<u32, usize>) {
    let plain = tableaux.iter().filter(|t| !t.has_double_primed()).count();
    let marked: Vec<_> = tableaux.iter().filter(|t| t.has_double_primed()).collect();
    let mut hist = BTreeMap::new();
    for t in &marked {
        *hist.entry(t.n_stat).or_insert(0usize) += 1;
    }
    (plain, marked.len(), hist)
}

#[test]
fn criterion_01_type_c_worked_example() {
    let start = Instant::now();
    let lam = p(&[3, 1]);
    let empty = Partition::empty();
    let k = 1;
    let n = 3;
    let m = 2;

    let w = grassmannian_c(&lam, k).unwrap();
    assert_eq!(w.window(), &[3, -2, 1]);

    // the two methods agree
    let by_tableau = tableau_theta(&lam, &empty, k, n, m).unwrap();
    let by_nilcoxeter = schubert_c(&w, n, m).unwrap();
    assert_eq!(by_tableau, by_nilcoxeter);

    // and agree byte-for-byte through the CLI
    let base = [
        "compute", "--type", "C", "--shape", "3,1", "--k", "1", "--n", "3", "--z", "2",
    ];
    let (out_nil, code_nil) = run_cli(&base);
    let mut tab_args = base.to_vec();
    tab_args.extend(["--method", "tableau"]);
    let (out_tab, code_tab) = run_cli(&tab_args);
    assert_eq!(code_nil, 0);
    assert_eq!(code_tab, 0);
    assert_eq!(out_nil, out_tab);

    // the displayed identity in terms of single theta polynomials
    let theta = |shape: &Partition| {
        let w = grassmannian_c(shape, k).unwrap();
        y_zero(&schubert_c(&w, n, m).unwrap())
    };
    let y1 = Polynomial::y(1);
    let expect = theta(&lam)
        .sub(&y1.mul(&theta(&p(&[2, 1]))))
        .add(&y1.pow(2).mul(&theta(&p(&[2]))));
    assert_eq!(by_nilcoxeter, expect);

    // tableau census: twelve without double-primed letters, sixteen with,
    // split 1/7/8 by the component statistic
    let all = tritableaux_c(&lam, &empty, k, n, m).unwrap();
    let (plain, marked, hist) = split_counts(&all);
    assert_eq!(plain, 12);
    assert_eq!(marked, 16);
    assert_eq!(hist.get(&3), Some(&1));
    assert_eq!(hist.get(&2), Some(&7));
    assert_eq!(hist.get(&1), Some(&8));

    assert!(start.elapsed() < Duration::from_secs(5), "runtime budget");
}

#[test]
fn criterion_02_type_d_worked_examples() {
    let start = Instant::now();
    let k = 1;
    let n = 3;
    let m = 2;
    let empty = TypedShape::empty();

    let eta = |shape: &TypedShape| {
        let w = grassmannian_d(shape, k).unwrap();
        y_zero(&schubert_d(&w, n, m).unwrap())
    };
    let y1 = Polynomial::y(1);
    let y2 = Polynomial::y(2);

    // type 1: counts 13 + 14 with component split 2/12
    let lam1 = ts(&[3, 1], 1, k);
    let w1 = grassmannian_d(&lam1, k).unwrap();
    assert_eq!(w1.window(), &[2, -3, -1]);
    let all1 = tritableaux_d(&lam1, &empty, k, n, m).unwrap();
    let (plain1, marked1, hist1) = split_counts(&all1);
    assert_eq!(plain1, 13);
    assert_eq!(marked1, 14);
    assert_eq!(hist1.get(&1), Some(&2));
    assert_eq!(hist1.get(&0), Some(&12));
    let full1 = schubert_d(&w1, n, m).unwrap();
    assert_eq!(full1, tableau_eta(&lam1, &empty, k, n, m).unwrap());
    let expect1 = eta(&lam1).sub(&y1.add(&y2).mul(&eta(&ts(&[2, 1], 1, k))));
    assert_eq!(full1, expect1);

    // type 2: counts 6 + 23 with component split 3/20
    let lam2 = ts(&[3, 1], 2, k);
    let w2 = grassmannian_d(&lam2, k).unwrap();
    assert_eq!(w2.window(), &[-2, -3, 1]);
    let all2 = tritableaux_d(&lam2, &empty, k, n, m).unwrap();
    let (plain2, marked2, hist2) = split_counts(&all2);
    assert_eq!(plain2, 6);
    assert_eq!(marked2, 23);
    assert_eq!(hist2.get(&1), Some(&3));
    assert_eq!(hist2.get(&0), Some(&20));
    let full2 = schubert_d(&w2, n, m).unwrap();
    assert_eq!(full2, tableau_eta(&lam2, &empty, k, n, m).unwrap());
    // the six-term expansion
    let expect2 = eta(&lam2)
        .sub(&y1.mul(&eta(&ts(&[3], 0, k))))
        .sub(&y1.add(&y2).mul(&eta(&ts(&[2, 1], 2, k))))
        .add(&y1.pow(2).mul(&eta(&ts(&[2], 0, k))))
        .add(&y1.mul(&y2).mul(&eta(&ts(&[1, 1], 2, k))))
        .sub(&y1.pow(2).mul(&y2).mul(&eta(&ts(&[1], 2, k))));
    assert_eq!(full2, expect2);

    assert!(start.elapsed() < Duration::from_secs(5), "runtime budget");
}

#[test]
fn criterion_03_bijection_goldens_and_round_trips() {
    // golden windows
    let w = grassmannian_c(&p(&[8, 4, 2, 1]), 3).unwrap();
    let expect =
        SignedPermutation::from_window(vec![2, 4, 7, -5, -1, 3, 6], GroupTag::TypeBC).unwrap();
    assert_eq!(w, expect);

    let lam = ts(&[7, 4, 3, 2], 2, 3);
    let wd = grassmannian_d(&lam, 3).unwrap();
    let expect_d =
        SignedPermutation::from_window(vec![-3, 6, 7, -5, -2, -1, 4, 8], GroupTag::TypeD).unwrap();
    assert_eq!(wd, expect_d);

    // exhaustive round trips inside (6,5,4,3)
    let bound = p(&[6, 5, 4, 3]);
    for k in 0..=3 {
        for shape in k_strict_in(&bound, k) {
            let w = grassmannian_c(&shape, k).unwrap();
            assert_eq!(shape_c(&w, k).as_ref(), Some(&shape), "k={} {}", k, shape);
            assert_eq!(w.length() as u32, shape.size());
        }
    }
    for k in 1..=3 {
        for typed in typed_in(&bound, k) {
            let w = grassmannian_d(&typed, k).unwrap();
            assert_eq!(shape_d(&w, k).as_ref(), Some(&typed), "k={} {}", k, typed);
            assert_eq!(w.length() as u32, typed.size());
        }
    }
}

#[test]
fn criterion_04_oracle_equivalence_sweep() {
    let start = Instant::now();
    let outcome = verify::run(&Bounds::default());
    for m in &outcome.mismatches {
        eprintln!("{}", m.description);
    }
    assert!(outcome.ok());
    assert!(outcome.a_instances >= 200, "type A: {}", outcome.a_instances);
    assert!(outcome.c_instances >= 200, "type C: {}", outcome.c_instances);
    assert!(outcome.d_instances >= 200, "type D: {}", outcome.d_instances);
    assert!(
        start.elapsed() < Duration::from_secs(600),
        "runtime budget"
    );
}

#[test]
fn criterion_05_characterizations_and_unimodality() {
    let bound = p(&[5, 4, 3, 2]);
    for k in 0..=3 {
        for lam in k_strict_in(&bound, k) {
            for mu in partitions_between(&Partition::empty(), &lam, Some(k)) {
                let strip = is_k_horizontal_strip(&lam, &mu, k);
                let compat = is_compatible_pair_c(&lam, &mu, k);
                let uni =
                    compat && is_unimodal(&skew_element_c(&lam, &mu, k).unwrap());
                assert_eq!(strip, uni, "strip/unimodal k={} {} {}", k, lam, mu);
                assert_eq!(
                    is_x_strip_c(&lam, &mu, k),
                    is_x_strip_c_boxes(&lam, &mu, k),
                    "x k={} {} {}",
                    k,
                    lam,
                    mu
                );
                assert_eq!(
                    is_y_strip_c(&lam, &mu, k),
                    is_y_strip_c_boxes(&lam, &mu, k),
                    "y k={} {} {}",
                    k,
                    lam,
                    mu
                );
            }
        }
    }
    for k in 1..=3 {
        for lam in typed_in(&bound, k) {
            for mu in typed_in(&lam.shape.clone(), k) {
                if !lam.shape.contains(&mu.shape) {
                    continue;
                }
                let strip = is_typed_k_horizontal_strip(&lam, &mu, k);
                let compat = schubert_core::shapes::is_compatible_pair_d(&lam, &mu, k);
                let uni =
                    compat && is_unimodal(&skew_element_d(&lam, &mu, k).unwrap());
                assert_eq!(strip, uni, "strip/unimodal k={} {} {}", k, lam, mu);
                assert_eq!(
                    is_typed_x_strip_d(&lam, &mu, k),
                    is_typed_x_strip_d_boxes(&lam, &mu, k),
                    "x k={} {} {}",
                    k,
                    lam,
                    mu
                );
                assert_eq!(
                    is_typed_y_strip_d(&lam, &mu, k),
                    is_typed_y_strip_d_boxes(&lam, &mu, k),
                    "y k={} {} {}",
                    k,
                    lam,
                    mu
                );
            }
        }
    }
}

struct TableRow {
    before: &'static [i32],
    mu: (&'static [u32], usize, u8, bool),
    after: &'static [i32],
    lam: (&'static [u32], usize, u8, bool),
}

fn check_table_row(row: &TableRow, generator: schubert_core::weyl::Generator) {
    let k = 2;
    let before =
        SignedPermutation::from_window(row.before.to_vec(), GroupTag::TypeD).unwrap();
    let after = SignedPermutation::from_window(row.after.to_vec(), GroupTag::TypeD).unwrap();
    assert_eq!(before.left_multiply(generator).unwrap(), after);
    for (w, (shape, lk, ty, eps_odd)) in [(before, row.mu), (after, row.lam)] {
        let typed = shape_d(&w, k).expect("table elements are 2-Grassmannian");
        assert_eq!(typed.shape, p(shape));
        assert_eq!(ell_k(&typed.shape, k), lk);
        assert_eq!(typed.ty.as_u8(), ty);
        assert_eq!(epsilon(&typed, k) % 2 == 1, eps_odd);
    }
}

#[test]
fn criterion_06_statistics_table_reproduction() {
    use schubert_core::weyl::Generator;
    // upper block: u and s_1 u
    let upper = [
        TableRow {
            before: &[1, 3, 2, 4],
            mu: (&[1], 0, 0, false),
            after: &[2, 3, 1, 4],
            lam: (&[2], 0, 1, true),
        },
        TableRow {
            before: &[-2, 3, -1, 4],
            mu: (&[2], 0, 2, false),
            after: &[-1, 3, -2, 4],
            lam: (&[3], 1, 0, true),
        },
        TableRow {
            before: &[-3, 4, -1, 2],
            mu: (&[2, 2], 0, 2, false),
            after: &[-3, 4, -2, 1],
            lam: (&[3, 2], 1, 2, true),
        },
        TableRow {
            before: &[-1, 4, -3, 2],
            mu: (&[4, 1], 1, 0, true),
            after: &[-2, 4, -3, 1],
            lam: (&[4, 2], 1, 2, true),
        },
        TableRow {
            before: &[2, 4, -3, -1],
            mu: (&[4, 2], 1, 1, false),
            after: &[1, 4, -3, -2],
            lam: (&[4, 3], 2, 0, false),
        },
    ];
    for row in &upper {
        check_table_row(row, Generator::S(1));
    }
    // lower block: v and s_box v
    let lower = [
        TableRow {
            before: &[1, 3, 2, 4],
            mu: (&[1], 0, 0, false),
            after: &[-2, 3, -1, 4],
            lam: (&[2], 0, 2, false),
        },
        TableRow {
            before: &[2, 3, 1, 4],
            mu: (&[2], 0, 1, true),
            after: &[-1, 3, -2, 4],
            lam: (&[3], 1, 0, true),
        },
        TableRow {
            before: &[3, 4, 1, 2],
            mu: (&[2, 2], 0, 1, true),
            after: &[3, 4, -2, -1],
            lam: (&[3, 2], 1, 1, false),
        },
        TableRow {
            before: &[-1, 4, -3, 2],
            mu: (&[4, 1], 1, 0, true),
            after: &[2, 4, -3, -1],
            lam: (&[4, 2], 1, 1, false),
        },
        TableRow {
            before: &[-2, 4, -3, 1],
            mu: (&[4, 2], 1, 2, true),
            after: &[1, 4, -3, -2],
            lam: (&[4, 3], 2, 0, false),
        },
    ];
    for row in &lower {
        check_table_row(row, Generator::Box);
    }
    // companion-element observation on the lower block: with epsilon(mu)
    // odd, epsilon(lambda) is even or type(mu) = 1; with epsilon(mu)
    // even, epsilon(lambda) is even and type(mu) = 0
    for row in &lower {
        let (_, _, mu_ty, mu_odd) = row.mu;
        let (_, _, _, lam_odd) = row.lam;
        if mu_odd {
            assert!(!lam_odd || mu_ty == 1);
        } else {
            assert!(!lam_odd && mu_ty == 0);
        }
    }
}

#[test]
fn criterion_07_stability_and_symmetry() {
    let m = 2;
    // stability under raising the ambient rank
    for n in 1..=3usize {
        for w in all_elements(GroupTag::TypeBC, n) {
            assert_eq!(
                schubert_c(&w, n, m).unwrap(),
                schubert_c(&w, n + 1, m).unwrap(),
                "type C w={}",
                w
            );
        }
        for w in all_elements(GroupTag::TypeA, n) {
            assert_eq!(
                schubert_core::nilcoxeter::schubert_a(&w, n.max(1)).unwrap(),
                schubert_core::nilcoxeter::schubert_a(&w, n + 1).unwrap(),
                "type A w={}",
                w
            );
        }
        for w in all_elements(GroupTag::TypeD, n) {
            assert_eq!(
                schubert_d(&w, n, m).unwrap(),
                schubert_d(&w, n + 1, m).unwrap(),
                "type D w={}",
                w
            );
        }
    }
    // the alphabet-swap symmetry
    for w in all_elements(GroupTag::TypeBC, 3) {
        let lhs = schubert_c(&w, 3, m).unwrap();
        let inv = schubert_c(&w.inverse(), 3, m).unwrap();
        let mut map = BTreeMap::new();
        for v in inv.variables() {
            match v.family {
                Family::X => {
                    map.insert(v, Polynomial::y(v.index).neg());
                }
                Family::Y => {
                    map.insert(v, Polynomial::x(v.index).neg());
                }
                Family::Z => {}
            }
        }
        assert_eq!(lhs, inv.substitute(&map), "w={}", w);
    }
}

#[test]
fn criterion_08_q_function_complement_identity() {
    for n in 1..=3usize {
        let delta: Vec<u32> = (1..=n as u32).rev().collect();
        let lam = p(&delta);
        for mu in partitions_between(&Partition::empty(), &lam, Some(0)) {
            if !is_compatible_pair_c(&lam, &mu, 0) {
                continue;
            }
            let w = skew_element_c(&lam, &mu, 0).unwrap();
            // complement of the parts of mu in {1, ..., n}
            let mut parts: Vec<u32> = (1..=n as u32)
                .filter(|v| !mu.parts().contains(v))
                .collect();
            parts.sort_by(|a, b| b.cmp(a));
            let mu_vee = p(&parts);
            let w_vee = grassmannian_c(&mu_vee, 0).unwrap();
            assert_eq!(w.inverse(), w_vee, "n={} mu={}", n, mu);
            for m in 1..=2usize {
                let lhs = schubert_c(&w, n, m).unwrap();
                let q = schubert_c(&w_vee, n, m).unwrap();
                assert!(!q.uses_family(Family::X), "Grassmannian side is x-free");
                let mut map = BTreeMap::new();
                for v in q.variables() {
                    if v.family == Family::Y {
                        map.insert(v, Polynomial::x(v.index).neg());
                    }
                }
                assert_eq!(lhs, q.substitute(&map), "n={} m={} mu={}", n, m, mu);
            }
        }
    }
}

#[test]
fn criterion_09_type_b_rescaling() {
    let elements = all_elements(GroupTag::TypeBC, 3);
    assert!(elements.len() >= 20);
    for w in &elements {
        let c = schubert_c(w, 3, 1).unwrap();
        let b = schubert_b(w, 3, 1).unwrap();
        assert_eq!(b, c.scale_pow2(-(w.neg_count() as i64)), "w={}", w);
        let manual = w.window().iter().filter(|&&v| v < 0).count();
        assert_eq!(w.neg_count(), manual);
    }
    // the sign-count example element
    let w = SignedPermutation::from_window(
        vec![-3, 6, 7, -5, -2, -1, 4, 8],
        GroupTag::TypeBC,
    )
    .unwrap();
    assert_eq!(w.neg_count(), 4);
}

#[test]
fn criterion_10_determinant_cross_check() {
    for m in 1..=3usize {
        for lam in partitions_in(&p(&[3, 3, 3])) {
            if lam.len() > m {
                continue;
            }
            let w = schubert_core::shapes::grassmannian_a(&lam, m).unwrap();
            let n = w.min_rank().max(m).max(1);
            assert_eq!(
                double_schur_determinant(&lam, m).unwrap(),
                tableau_schur(&lam, &Partition::empty(), m, n).unwrap(),
                "m={} lam={}",
                m,
                lam
            );
        }
    }
}
