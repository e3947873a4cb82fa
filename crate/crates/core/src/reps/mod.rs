//! Matrix representations of finitely presented groups and the search for
//! SL(2, F_p) representations of knot groups.

mod file;
mod sl2;

pub use file::RepFile;
pub use sl2::{enumerate_sl2, enumerate_sl2_summary, extend_from_seeds, EnumerationSummary, RepSearchConfig};

use crate::algebra::{ConstMatrix, Field, Fp, Prime};
use crate::error::{Error, Result};
use crate::presentation::{GeneratorMap, GroupPresentation, Word};

/// One invertible matrix per generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation<F: Field> {
    matrices: Vec<ConstMatrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn new(matrices: Vec<ConstMatrix<F>>) -> Result<Self> {
        let Some(first) = matrices.first() else {
            return Err(Error::InvalidRepresentation("no matrices".into()));
        };
        let d = first.dim();
        if matrices.iter().any(|m| m.dim() != d) {
            return Err(Error::DimensionMismatch("matrices of different sizes".into()));
        }
        if matrices.iter().any(|m| m.inverse().is_none()) {
            return Err(Error::InvalidRepresentation("singular matrix".into()));
        }
        Ok(Representation { matrices })
    }

    /// Every generator sent to the `1x1` identity.
    pub fn trivial(ctx: &F::Ctx, n_gens: usize) -> Self {
        Representation { matrices: vec![ConstMatrix::identity(ctx, 1); n_gens] }
    }

    pub fn matrices(&self) -> &[ConstMatrix<F>] {
        &self.matrices
    }

    pub fn matrix(&self, g: usize) -> &ConstMatrix<F> {
        &self.matrices[g]
    }

    pub fn n_gens(&self) -> usize {
        self.matrices.len()
    }

    pub fn dim(&self) -> usize {
        self.matrices[0].dim()
    }

    pub fn ctx(&self) -> F::Ctx {
        self.matrices[0].ctx()
    }

    pub fn eval_word(&self, w: &Word) -> ConstMatrix<F> {
        let mut acc = ConstMatrix::identity(&self.ctx(), self.dim());
        for l in w.letters() {
            let m = &self.matrices[l.gen];
            acc = acc.mul(&if l.inv { m.inverse().unwrap() } else { m.clone() });
        }
        acc
    }

    /// `g ρ g^-1` on every generator.
    pub fn conjugate(&self, g: &ConstMatrix<F>) -> Result<Self> {
        let gi = g.inverse().ok_or_else(|| Error::InvalidRepresentation("singular conjugator".into()))?;
        Ok(Representation { matrices: self.matrices.iter().map(|m| g.mul(m).mul(&gi)).collect() })
    }

    /// Whether the image is abelian.
    pub fn is_abelian(&self) -> bool {
        let ms = &self.matrices;
        (0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| ms[i].commutes_with(&ms[j])))
    }

    /// The representation `ρ ∘ φ` of the source of `φ`.
    pub fn pullback(&self, phi: &GeneratorMap) -> Self {
        Representation { matrices: phi.images.iter().map(|w| self.eval_word(w)).collect() }
    }
}

/// Whether every relator evaluates to the identity; with `special`, also
/// whether every matrix has determinant one.
pub fn verify_representation<F: Field>(
    pres: &GroupPresentation,
    rep: &Representation<F>,
    special: bool,
) -> Result<bool> {
    if rep.n_gens() != pres.n_gens() {
        return Err(Error::DimensionMismatch(format!(
            "{} matrices for {} generators",
            rep.n_gens(),
            pres.n_gens()
        )));
    }
    if special && rep.matrices.iter().any(|m| !m.det().is_one()) {
        return Ok(false);
    }
    Ok(pres.relators().iter().all(|r| rep.eval_word(r).is_identity()))
}

/// Pull `rho` back along `phi` and check the result on `source`.
pub fn lamm_pullback<F: Field>(
    phi: &GeneratorMap,
    source: &GroupPresentation,
    rho: &Representation<F>,
) -> Result<Representation<F>> {
    let out = rho.pullback(phi);
    if out.n_gens() != source.n_gens() {
        return Err(Error::DimensionMismatch("map does not match the source presentation".into()));
    }
    if let Some(i) = source.relators().iter().position(|r| !out.eval_word(r).is_identity()) {
        return Err(Error::InvalidRepresentation(format!(
            "relator {} of the source does not map to the identity",
            i + 1
        )));
    }
    Ok(out)
}

/// Matrix over `F_p` from small integers, reduced mod `p`.
pub fn fp_matrix(p: Prime, rows: &[&[i64]]) -> Result<ConstMatrix<Fp>> {
    ConstMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Fp::new(p, x)).collect()).collect())
}

/// At least `n` representations, in a fixed order: the given ones first,
/// then their conjugates by the elementary matrices `[[1, j], [0, 1]]` and
/// `[[1, 0], [j, 1]]` for `j = 1, 2, ..` until `n` distinct ones are
/// collected or the conjugates are exhausted.
pub fn fill_with_conjugates(reps: &[Representation<Fp>], n: usize) -> Vec<Representation<Fp>> {
    let mut out: Vec<Representation<Fp>> = Vec::new();
    for r in reps {
        if !out.contains(r) {
            out.push(r.clone());
        }
    }
    let Some(first) = reps.first() else { return out };
    let p = first.ctx();
    for j in 1..p.get() as i64 {
        for g in [fp_matrix(p, &[&[1, j], &[0, 1]]), fp_matrix(p, &[&[1, 0], &[j, 1]])] {
            let g = g.expect("2x2 rows");
            for r in reps {
                if out.len() >= n {
                    return out;
                }
                let c = r.conjugate(&g).expect("elementary matrices are invertible");
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;
    use crate::presentation::wirtinger;

    #[test]
    fn filled_list_is_valid_and_distinct() {
        let pres = wirtinger(&parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap());
        let p = Prime::new(5).unwrap();
        let classes = enumerate_sl2(&pres, &RepSearchConfig::new(p)).unwrap();
        let filled = fill_with_conjugates(&classes[..1], 5);
        assert_eq!(filled.len(), 5);
        assert_eq!(filled[0], classes[0]);
        for (i, r) in filled.iter().enumerate() {
            assert!(verify_representation(&pres, r, true).unwrap());
            assert!(!filled[..i].contains(r));
        }
        assert!(fill_with_conjugates(&[], 5).is_empty());
    }
}
