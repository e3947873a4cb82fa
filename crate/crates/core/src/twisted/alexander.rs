use num_bigint::BigUint;

use super::fox::alexander_matrix;
use crate::algebra::{gcd_polys, Coeff, Integer, LaurentPoly, PolyMatrix, Rational};
use crate::diagram::PdCode;
use crate::error::{Error, Result};
use crate::presentation::{wirtinger, GroupPresentation};

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Canonical gcd of all `size x size` minors, computed directly. The gcd
/// of no minors is 0 and the empty minor is 1.
pub fn minors_gcd<R: Coeff>(m: &PolyMatrix<R>, size: usize) -> LaurentPoly<R> {
    let ctx = m.ctx().clone();
    if size == 0 {
        return LaurentPoly::one(&ctx);
    }
    let mut g = LaurentPoly::zero(&ctx);
    let rows = combinations(m.rows(), size);
    let cols = combinations(m.cols(), size);
    for r in &rows {
        for c in &cols {
            let d = m.submatrix(r, c).det().expect("square minor");
            g = gcd_polys(&ctx, &[g, d]);
            if g.is_unit() {
                return g;
            }
        }
    }
    g
}

/// Gcd of the `size`-minors, after eliminating unit entries. Clearing the
/// row and column of a unit pivot lowers the minor size by one without
/// changing the ideal the minors generate.
pub fn elementary_ideal_gcd<R: Coeff>(m: &PolyMatrix<R>, mut size: usize) -> LaurentPoly<R> {
    let ctx = m.ctx().clone();
    let mut a: Vec<Vec<LaurentPoly<R>>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect()).collect();
    let mut ncols = m.cols();
    while size > 0 {
        a.retain(|row| row.iter().any(|x| !x.is_zero()));
        let Some((pi, pj)) = a.iter().enumerate().find_map(|(i, row)| row.iter().position(|x| x.is_unit()).map(|j| (i, j)))
        else {
            break;
        };
        let pivot_row = a.swap_remove(pi);
        let (c, k) = pivot_row[pj].unit_part().unwrap();
        let inv = LaurentPoly::monomial(c.inv().unwrap(), -k);
        for row in a.iter_mut() {
            if row[pj].is_zero() {
                continue;
            }
            let q = row[pj].mul(&inv);
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = x.sub(&q.mul(y));
                }
            }
        }
        for row in a.iter_mut() {
            row.remove(pj);
        }
        ncols -= 1;
        size -= 1;
    }
    let reduced = PolyMatrix::from_fn(&ctx, a.len(), ncols, |i, j| a[i][j].clone());
    minors_gcd(&reduced, size)
}

/// Alexander matrix of a Wirtinger presentation with the last relator
/// removed.
fn knot_matrix<R: Coeff>(ctx: &R::Ctx, pres: &GroupPresentation) -> PolyMatrix<R> {
    let m = alexander_matrix::<R>(ctx, pres);
    let rows: Vec<usize> = (0..m.rows().saturating_sub(1)).collect();
    let cols: Vec<usize> = (0..m.cols()).collect();
    m.submatrix(&rows, &cols)
}

/// Alexander polynomial over the integers: canonical gcd of the maximal
/// minors of the abelianized Fox matrix.
pub fn classical_alexander(pd: &PdCode) -> LaurentPoly<Integer> {
    let pres = wirtinger(pd);
    let m = knot_matrix::<Integer>(&(), &pres);
    let delta = elementary_ideal_gcd(&m, pres.n_gens() - 1).canonicalize();
    let at_one = delta.eval(&Integer::from(1)).unwrap();
    assert!(
        at_one == Integer::from(1) || at_one == Integer::from(-1),
        "Alexander polynomial of a knot must be ±1 at t = 1"
    );
    delta
}

/// `k`-th Alexander polynomial over the rationals: canonical gcd of the
/// `(N - k)`-minors. It is 1 once `k` reaches the number of generators.
pub fn higher_alexander(pd: &PdCode, k: usize) -> Result<LaurentPoly<Rational>> {
    if k == 0 {
        return Err(Error::Domain("the index of an elementary ideal starts at 1".into()));
    }
    let pres = wirtinger(pd);
    let n = pres.n_gens();
    if k >= n {
        return Ok(LaurentPoly::one(&()));
    }
    let m = knot_matrix::<Rational>(&(), &pres);
    Ok(elementary_ideal_gcd(&m, n - k).canonicalize())
}

/// `|Δ(-1)|`.
pub fn knot_determinant(pd: &PdCode) -> BigUint {
    let v = classical_alexander(pd).eval(&Integer::from(-1)).unwrap();
    v.0.magnitude().clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn z(s: &str) -> LaurentPoly<Integer> {
        LaurentPoly::parse(&(), s).unwrap()
    }

    #[test]
    fn small_knots() {
        let trefoil = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap();
        assert_eq!(classical_alexander(&trefoil), z("1 - t + t^2"));
        assert_eq!(classical_alexander(&trefoil.mirror()), z("1 - t + t^2"));
        assert_eq!(knot_determinant(&trefoil), BigUint::from(3u32));
        assert_eq!(classical_alexander(&PdCode::unknot()), z("1"));
        assert_eq!(knot_determinant(&PdCode::unknot()), BigUint::from(1u32));
        assert_eq!(higher_alexander(&trefoil, 2).unwrap(), LaurentPoly::one(&()));
        assert!(higher_alexander(&trefoil, 0).is_err());
        let kink = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(classical_alexander(&kink), z("1"));
    }

    #[test]
    fn elimination_agrees_with_all_minors() {
        let k = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
        let pres = wirtinger(&k);
        let m = knot_matrix::<Integer>(&(), &pres);
        for size in 1..=3 {
            assert_eq!(elementary_ideal_gcd(&m, size), minors_gcd(&m, size));
        }
        assert_eq!(classical_alexander(&k), z("1 - 3*t + t^2"));
    }
}
