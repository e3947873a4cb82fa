use std::sync::OnceLock;

use knotforge::algebra::{Coeff, ConstMatrix, Fp, LaurentPoly, Prime, Rational, RationalFn};
use knotforge::diagram::{parse_pd, PdCode};
use knotforge::presentation::{two_bridge, wirtinger, GroupPresentation};
use knotforge::reps::{enumerate_sl2, fp_matrix, verify_representation, RepSearchConfig, Representation};
use knotforge::twisted::{
    even_symun_quick_obstructions, genus_lower_bound, higher_alexander, twisted_alexander, TwistedPolynomial,
};
use num_rational::BigRational;
use proptest::prelude::*;

fn table_pd(name: &str) -> PdCode {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knots.csv");
    let text = std::fs::read_to_string(path).unwrap();
    let line = text.lines().find(|l| l.starts_with(&format!("{name},"))).unwrap();
    parse_pd(line.split_once(',').unwrap().1.trim_matches('"')).unwrap()
}

struct Case {
    pres: GroupPresentation,
    reps: Vec<Representation<Fp>>,
}

fn cases() -> &'static Vec<Case> {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut out = Vec::new();
        for name in ["3_1", "4_1", "6_1"] {
            let w = wirtinger(&table_pd(name));
            for p in [5, 7] {
                let reps = enumerate_sl2(&w, &RepSearchConfig::new(Prime::new(p).unwrap())).unwrap();
                out.push(Case { pres: w.deficiency_one().unwrap(), reps });
            }
        }
        out
    })
}

fn sl2(p: Prime, a: u32, b: u32, c: u32) -> Option<ConstMatrix<Fp>> {
    // [[a, b], [c, (1 + bc) / a]]
    let (a, b, c) = (Fp::new(p, a as i64), Fp::new(p, b as i64), Fp::new(p, c as i64));
    let d = a.inv()?.mul(&Fp::new(p, 1).add(&b.mul(&c)));
    ConstMatrix::from_rows(vec![vec![a, b], vec![c, d]]).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn wada_invariant_under_column_choice_and_conjugation(
        case in 0usize..6, idx in any::<prop::sample::Index>(), a in 1u32..7, b in 0u32..7, c in 0u32..7,
    ) {
        let case = &cases()[case];
        prop_assume!(!case.reps.is_empty());
        let rho = &case.reps[idx.index(case.reps.len())];
        prop_assert!(verify_representation(&case.pres, rho, true).unwrap());
        let base = twisted_alexander(&case.pres, rho, None).unwrap();
        for j in 1..case.pres.n_gens() {
            prop_assert!(twisted_alexander(&case.pres, rho, Some(j)).unwrap().equal_up_to_units(&base));
        }
        let p = rho.ctx();
        let Some(g) = sl2(p, a % p.get(), b, c) else { return Ok(()); };
        let conj = rho.conjugate(&g).unwrap();
        prop_assert!(twisted_alexander(&case.pres, &conj, None).unwrap().equal_up_to_units(&base));
    }
}

#[test]
fn every_enumerated_rep_is_nonabelian_and_special() {
    for case in cases() {
        assert!(!case.reps.is_empty());
        for r in &case.reps {
            assert!(!r.is_abelian());
            assert!(verify_representation(&case.pres, r, true).unwrap());
        }
    }
}

#[test]
fn higher_alexander_polynomials_divide_each_other() {
    for name in ["3_1", "4_1", "6_1", "8_10", "8_20", "9_1", "10_99", "10_137"] {
        let pd = table_pd(name);
        let n = wirtinger(&pd).n_gens();
        let mut prev = higher_alexander(&pd, 1).unwrap();
        for k in 2..=4.min(n) {
            let next = higher_alexander(&pd, k).unwrap();
            assert!(prev.div_exact(&next).is_some(), "{name}: ideal {k} does not divide ideal {}", k - 1);
            prev = next;
        }
    }
}

fn rho0() -> (Prime, ConstMatrix<Fp>, ConstMatrix<Fp>) {
    let p = Prime::new(7).unwrap();
    (p, fp_matrix(p, &[&[0, 1], &[6, 4]]).unwrap(), fp_matrix(p, &[&[0, 2], &[3, 4]]).unwrap())
}

#[test]
fn rho0_on_the_two_bridge_presentation() {
    let (p, x, y) = rho0();
    let pres = two_bridge(9, 5).unwrap();
    let rho = Representation::new(vec![x.clone(), y.clone()]).unwrap();
    assert!(verify_representation(&pres, &rho, true).unwrap());
    let tp = twisted_alexander(&pres, &rho, None).unwrap();
    assert!(tp.value.as_poly().is_some_and(|f| f.equal_up_to_units(&LaurentPoly::one(&p))));
    assert_eq!(x.char_det(1).canonicalize(), LaurentPoly::parse(&p, "1 + 3*t + t^2").unwrap());
    assert_eq!(genus_lower_bound(&tp).unwrap(), BigRational::new(1.into(), 2.into()));

    let mut rows = y.rows();
    rows[0][1] = rows[0][1].add(&Fp::new(p, 1));
    let bad = Representation::new(vec![x, ConstMatrix::from_rows(rows).unwrap()]).unwrap();
    assert!(!verify_representation(&pres, &bad, false).unwrap());
}

#[test]
fn genus_bound_from_the_trivial_rep() {
    for (name, genus) in [("3_1", 1), ("4_1", 1), ("9_1", 4)] {
        let w = wirtinger(&table_pd(name)).deficiency_one().unwrap();
        let tp: TwistedPolynomial<Rational> = twisted_alexander(&w, &Representation::trivial(&(), w.n_gens()), None).unwrap();
        assert_eq!(genus_lower_bound(&tp).unwrap(), BigRational::from_integer(genus.into()));
    }
}

#[test]
fn quick_obstructions() {
    let k = table_pd("11a_201");
    let q = even_symun_quick_obstructions(&k, &table_pd("6_1"), None);
    assert!(q.all_pass());
    let q = even_symun_quick_obstructions(&k, &table_pd("9_1"), None);
    assert!(!q.alexander_square);
    assert_eq!((q.deg_k, q.deg_candidate), (4, 8));
    let q = even_symun_quick_obstructions(&table_pd("6_1"), &PdCode::unknot(), None);
    assert!(!q.degree_divisible_by_4);
    assert_eq!(q.deg_k, 2);
}

// An abelian rep splits into two characters t -> lambda^{±1} t, so its
// polynomial is Delta(lambda t) Delta(t / lambda) / ((lambda t - 1)(t / lambda - 1))
// and has degree 2 deg Delta - 2, never the degree 2 of the target.
#[test]
fn abelian_reps_of_11a_201_cannot_reach_the_target() {
    let p = Prime::new(7).unwrap();
    let w = wirtinger(&table_pd("11a_201"));
    let cfg = RepSearchConfig { nonabelian_only: false, ..RepSearchConfig::new(p) };
    let reps = enumerate_sl2(&w, &cfg).unwrap();
    let pres = w.deficiency_one().unwrap();
    let abelian: Vec<_> = reps.iter().filter(|r| r.is_abelian()).collect();
    assert!(!abelian.is_empty());
    let target = LaurentPoly::parse(&p, "1 + 3*t + t^2").unwrap();
    for r in abelian {
        let tp = twisted_alexander(&pres, r, None).unwrap();
        assert_eq!(tp.degree().unwrap(), 2 * 4 - 2);
        assert!(!tp.value.equal_up_to_units(&RationalFn::from_poly(target.clone())));
    }
}
