use knotforge::algebra::{reduce_fraction, Coeff, Fp, Integer, LaurentPoly, PolyMatrix, Prime, Rational};
use proptest::prelude::*;

fn f5() -> Prime {
    Prime::new(5).unwrap()
}

fn cofactor_det<R: Coeff>(m: &PolyMatrix<R>) -> LaurentPoly<R> {
    let n = m.rows();
    if n == 0 {
        return LaurentPoly::one(m.ctx());
    }
    let mut acc = LaurentPoly::zero(m.ctx());
    for j in 0..n {
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&c| c != j).collect();
        let term = m.get(0, j).mul(&cofactor_det(&m.submatrix(&rows, &cols)));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

fn fp_poly(low: i64, cs: Vec<u32>) -> LaurentPoly<Fp> {
    let p = f5();
    LaurentPoly::from_coeffs(&p, low, cs.into_iter().map(|c| Fp::new(p, c as i64)).collect())
}

fn fp_matrix() -> impl Strategy<Value = PolyMatrix<Fp>> {
    (1usize..=6).prop_flat_map(|n| {
        prop::collection::vec(
            (prop::sample::select(vec![0i64, 0, 0, -1, 1]), prop::collection::vec(0u32..5, 0..=3)),
            n * n,
        )
        .prop_map(move |entries| {
            let mut it = entries.into_iter();
            PolyMatrix::from_fn(&f5(), n, n, |_, _| {
                let (low, cs) = it.next().unwrap();
                fp_poly(low, cs)
            })
        })
    })
}

fn int_poly() -> impl Strategy<Value = LaurentPoly<Integer>> {
    (-3i64..3, prop::collection::vec(-6i64..=6, 0..=5))
        .prop_map(|(low, cs)| LaurentPoly::from_i64s(&(), low, &cs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn determinant_matches_cofactor_oracle(m in fp_matrix()) {
        let oracle = cofactor_det(&m);
        prop_assert_eq!(m.det().unwrap(), oracle.clone());
        prop_assert_eq!(m.det_bareiss().unwrap(), oracle);
    }

    #[test]
    fn integer_bareiss_matches_cofactor(entries in prop::collection::vec(int_poly(), 16)) {
        let m = PolyMatrix::from_fn(&(), 4, 4, |i, j| entries[4 * i + j].clone());
        prop_assert_eq!(m.det().unwrap(), cofactor_det(&m));
    }

    #[test]
    fn canonicalize_is_unit_invariant_over_fp(
        low in -4i64..4,
        cs in prop::collection::vec(0u32..5, 0..6),
        u in 1u32..5,
        k in -5i64..5,
    ) {
        let f = fp_poly(low, cs);
        let unit = LaurentPoly::monomial(Fp::new(f5(), u as i64), k);
        prop_assert_eq!(f.canonicalize(), f.mul(&unit).canonicalize());
    }

    #[test]
    fn canonicalize_is_unit_invariant_over_z(f in int_poly(), neg in any::<bool>(), k in -5i64..5) {
        let unit = LaurentPoly::monomial(Integer::from(if neg { -1 } else { 1 }), k);
        let g = f.mul(&unit);
        prop_assert_eq!(f.canonicalize(), g.canonicalize());
        prop_assert!(f.equal_up_to_units(&g));
    }

    #[test]
    fn gcd_divides_and_is_maximal(a in int_poly(), b in int_poly(), c in int_poly()) {
        let x = a.mul(&c);
        let y = b.mul(&c);
        let g = x.gcd(&y);
        if !g.is_zero() {
            prop_assert!(x.div_exact(&g).is_some());
            prop_assert!(y.div_exact(&g).is_some());
            if !c.is_zero() {
                prop_assert!(g.div_exact(&c.canonicalize()).is_some());
            }
        }
    }

    #[test]
    fn reduced_fractions_preserve_value(a in int_poly(), b in int_poly()) {
        prop_assume!(!b.is_zero());
        let q = |p: &LaurentPoly<Integer>| p.map_coeffs(&(), |c| Rational::from(c));
        let r = reduce_fraction(&q(&a), &q(&b)).unwrap();
        prop_assert_eq!(r.num().mul(&q(&b)), r.den().mul(&q(&a)));
        prop_assert_eq!(r.den().min_deg(), Some(0));
        prop_assert!(r.den().lead().unwrap().is_one());
        prop_assert!(r.num().gcd(r.den()).is_constant());
    }
    #[test]
    fn determinant_row_operations(m in fp_matrix(), a in 0usize..6, b in 0usize..6, low in -1i64..=1, cs in prop::collection::vec(0u32..5, 0..=2)) {
        let n = m.rows();
        let (a, b) = (a % n, b % n);
        prop_assume!(a != b);
        let d = m.det().unwrap();
        let f = fp_poly(low, cs);
        let swapped = PolyMatrix::from_fn(&f5(), n, n, |i, j| {
            let r = if i == a { b } else if i == b { a } else { i };
            m.get(r, j).clone()
        });
        prop_assert_eq!(swapped.det().unwrap(), d.neg());
        let added = PolyMatrix::from_fn(&f5(), n, n, |i, j| {
            if i == a { m.get(a, j).add(&f.mul(m.get(b, j))) } else { m.get(i, j).clone() }
        });
        prop_assert_eq!(added.det().unwrap(), d);
    }

    #[test]
    fn ring_axioms_over_z(a in int_poly(), b in int_poly(), c in int_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.sub(&a), LaurentPoly::zero(&()));
        if !b.is_zero() {
            prop_assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        }
    }
}
