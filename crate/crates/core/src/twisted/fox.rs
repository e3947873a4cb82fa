use crate::algebra::{Coeff, ConstMatrix, Field, LaurentPoly, PolyMatrix};
use crate::presentation::{GroupPresentation, GroupRingElt, Word};
use crate::reps::Representation;

/// `Φ(g) = ρ(g) t^{α(g)}` for a group element given as a word, with every
/// generator sent to `t`.
pub fn phi_word<F: Field>(rep: &Representation<F>, w: &Word) -> (ConstMatrix<F>, i64) {
    (rep.eval_word(w), w.exponent_sum())
}

/// `Φ` extended linearly to the free group ring, as a `d x d` block.
pub fn phi_ring<F: Field>(rep: &Representation<F>, x: &GroupRingElt) -> Vec<Vec<LaurentPoly<F>>> {
    let ctx = rep.ctx();
    let d = rep.dim();
    let mut block = vec![vec![LaurentPoly::zero(&ctx); d]; d];
    for (w, c) in x.terms() {
        let (m, e) = phi_word(rep, w);
        let c = F::from_i64(&ctx, c);
        for (i, row) in block.iter_mut().enumerate() {
            for (j, entry) in row.iter_mut().enumerate() {
                *entry = entry.add(&LaurentPoly::monomial(m.get(i, j).mul(&c), e));
            }
        }
    }
    block
}

/// Twisted Alexander matrix: block `(i, j)` is `Φ(∂r_i/∂x_j)`.
///
/// Fox derivatives are expanded letter by letter: `x_j` at a position with
/// prefix `u` contributes `u`, and `x_j^-1` contributes `-u x_j^-1`.
pub fn twisted_matrix<F: Field>(pres: &GroupPresentation, rep: &Representation<F>) -> PolyMatrix<F> {
    let ctx = rep.ctx();
    let d = rep.dim();
    let n = pres.n_gens();
    let rels = pres.relators();
    let inverses: Vec<ConstMatrix<F>> = rep.matrices().iter().map(|m| m.inverse().unwrap()).collect();
    let mut m = PolyMatrix::zeros(&ctx, d * rels.len(), d * n);
    let one = F::one(&ctx);
    let minus = one.neg();
    for (i, r) in rels.iter().enumerate() {
        let mut prefix = ConstMatrix::identity(&ctx, d);
        let mut e = 0i64;
        for l in r.letters() {
            let g = l.gen;
            let (contrib, sign) = if l.inv {
                prefix = prefix.mul(&inverses[g]);
                e -= 1;
                (&prefix, &minus)
            } else {
                (&prefix, &one)
            };
            for a in 0..d {
                for b in 0..d {
                    let c = contrib.get(a, b);
                    if c.is_zero() {
                        continue;
                    }
                    let (ri, ci) = (d * i + a, d * g + b);
                    let v = m.get(ri, ci).add(&LaurentPoly::monomial(c.mul(sign), e));
                    m.set(ri, ci, v);
                }
            }
            if !l.inv {
                prefix = prefix.mul(rep.matrix(g));
                e += 1;
            }
        }
    }
    m
}

/// Abelianized Fox matrix over any coefficient ring: entry `(i, j)` is the
/// image of `∂r_i/∂x_j` under `x_k ↦ t`.
pub fn alexander_matrix<R: Coeff>(ctx: &R::Ctx, pres: &GroupPresentation) -> PolyMatrix<R> {
    let rels = pres.relators();
    let mut m = PolyMatrix::zeros(ctx, rels.len(), pres.n_gens());
    for (i, r) in rels.iter().enumerate() {
        let mut e = 0i64;
        for l in r.letters() {
            let term = if l.inv {
                e -= 1;
                LaurentPoly::monomial(R::from_i64(ctx, -1), e)
            } else {
                e += 1;
                LaurentPoly::monomial(R::one(ctx), e - 1)
            };
            let v = m.get(i, l.gen).add(&term);
            m.set(i, l.gen, v);
        }
    }
    m
}
