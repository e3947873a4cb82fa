use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;

use super::alexander::{classical_alexander, knot_determinant};
use super::wada::{twisted_alexander, TwistedPolynomial};
use crate::algebra::{Field, Fp, RationalFn};
use crate::diagram::{PdCode, SymUnionSpec};
use crate::error::{Error, Result};
use crate::presentation::{build_symun_presentation, lift_to_pieces, wirtinger};
use crate::reps::{enumerate_sl2_summary, lamm_pullback, verify_representation, RepSearchConfig, Representation};

/// Both sides of the symmetric-union identity for one representation of
/// the partial knot group.
#[derive(Clone, Debug)]
pub struct TheoremReport<F: Field> {
    /// Twisted polynomial of the union for the pulled-back representation.
    pub lhs: TwistedPolynomial<F>,
    /// Twisted polynomial of the partial knot.
    pub partial: TwistedPolynomial<F>,
    /// `partial^2 * det(ρ(μ_D) t - I)`.
    pub rhs: RationalFn<F>,
    pub equal: bool,
    pub deg_lhs: i64,
    pub deg_partial: i64,
    pub d: usize,
    /// `deg lhs = 2 deg partial + d`.
    pub degree_identity: bool,
    /// The pulled-back representation sends the union longitude to 1.
    pub longitude_killed: bool,
}

/// Compare the twisted polynomial of an even symmetric union, for `ρ_D ∘ φ_D`,
/// with `Δ_{K_D, ρ_D}^2 det(ρ_D(μ_D) t - I)`. The representation is given
/// on the Wirtinger generators (arcs) of the partial diagram.
pub fn verify_theorem<F: Field>(spec: &SymUnionSpec, rho: &Representation<F>) -> Result<TheoremReport<F>> {
    let pres = build_symun_presentation(spec)?;
    let w = wirtinger(&spec.partial);
    if !verify_representation(&w, rho, false)? {
        return Err(Error::InvalidRepresentation("not a representation of the partial knot group".into()));
    }
    let on_pieces = Representation::new(lift_to_pieces(rho.matrices(), &pres.piece_arc))?;
    if !verify_representation(&pres.partial, &on_pieces, false)? {
        return Err(Error::InvalidRepresentation("lift to the cut diagram failed".into()));
    }
    let pulled = lamm_pullback(&pres.phi, &pres.union, &on_pieces)?;
    let longitude_killed = pres.union.longitude().map(|l| pulled.eval_word(l).is_identity()).unwrap_or(false);
    let lhs = twisted_alexander(&pres.union, &pulled, None)?;
    let partial = twisted_alexander(&w.deficiency_one()?, rho, None)?;
    let factor = RationalFn::from_poly(rho.matrix(w.meridian()).char_det(1));
    let rhs = partial.value.pow(2).mul(&factor).canonicalize();
    let d = rho.dim();
    let deg_lhs = lhs.degree()?;
    let deg_partial = partial.degree()?;
    Ok(TheoremReport {
        equal: lhs.value.equal_up_to_units(&rhs),
        degree_identity: deg_lhs == 2 * deg_partial + d as i64,
        lhs,
        partial,
        rhs,
        deg_lhs,
        deg_partial,
        d,
        longitude_killed,
    })
}

/// `(deg Δ / d + 1) / 2`; the genus is at least its ceiling.
pub fn genus_lower_bound<F: Field>(delta: &TwistedPolynomial<F>) -> Result<BigRational> {
    let deg = delta.degree()?;
    Ok((BigRational::new(BigInt::from(deg), BigInt::from(delta.d as i64)) + BigRational::from_integer(1.into()))
        / BigRational::from_integer(2.into()))
}

/// Necessary conditions for `K` to be an even symmetric union with the
/// given partial knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuickChecks {
    /// `Δ_K ≐ Δ_cand^2`.
    pub alexander_square: bool,
    /// `deg Δ_K ≡ 0 (mod 4)`.
    pub degree_divisible_by_4: bool,
    /// `det K = (det cand)^2`.
    pub determinant_square: bool,
    /// When `deg Δ_K = 2 g(K)` for the supplied genus: whether `g(K)` is
    /// even. `None` when no genus was supplied or the equality fails.
    pub genus_parity: Option<bool>,
    pub deg_k: i64,
    pub deg_candidate: i64,
}

impl QuickChecks {
    pub fn all_pass(&self) -> bool {
        self.alexander_square && self.degree_divisible_by_4 && self.determinant_square && self.genus_parity != Some(false)
    }
}

pub fn even_symun_quick_obstructions(k: &PdCode, candidate: &PdCode, genus: Option<u64>) -> QuickChecks {
    let dk = classical_alexander(k);
    let dc = classical_alexander(candidate);
    let deg_k = dk.span().unwrap();
    let det_c = knot_determinant(candidate);
    QuickChecks {
        alexander_square: dk.equal_up_to_units(&dc.mul(&dc)),
        degree_divisible_by_4: deg_k % 4 == 0,
        determinant_square: knot_determinant(k) == &det_c * &det_c,
        genus_parity: genus.filter(|&g| deg_k == 2 * g as i64).map(|g| g % 2 == 0),
        deg_k,
        deg_candidate: dc.span().unwrap(),
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionVerdict {
    /// No enumerated representation reproduces the target.
    pub obstructed: bool,
    pub target: RationalFn<Fp>,
    /// Twisted polynomial of every enumerated representation, in order.
    pub polynomials: Vec<TwistedPolynomial<Fp>>,
    /// Indices of representations whose polynomial equals the target.
    pub matches: Vec<usize>,
    pub reps: Vec<Representation<Fp>>,
    pub slice_nonabelian: usize,
    pub gl2_classes: usize,
    pub sl2_classes: usize,
    /// SL(2, F_p)-conjugacy classes of all representations, abelian ones
    /// included.
    pub sl2_classes_all: usize,
}

/// Search the nonabelian SL(2, F_p) representations of `K` for one whose
/// twisted polynomial equals `Δ_{cand, ρ}^2 det(ρ(μ) t - I)`. If there is
/// none, `K` has no even symmetric union presentation with this partial
/// knot, since the pulled-back representation would be among them.
pub fn even_symun_obstruction(
    k: &PdCode,
    candidate: &PdCode,
    rho: &Representation<Fp>,
    cfg: &RepSearchConfig,
) -> Result<ObstructionVerdict> {
    Ok(even_symun_obstruction_many(k, candidate, std::slice::from_ref(rho), cfg)?.remove(0))
}

/// [`even_symun_obstruction`] for several representations of the
/// candidate, enumerating the representations of `K` once.
pub fn even_symun_obstruction_many(
    k: &PdCode,
    candidate: &PdCode,
    rhos: &[Representation<Fp>],
    cfg: &RepSearchConfig,
) -> Result<Vec<ObstructionVerdict>> {
    let wc = wirtinger(candidate);
    let dc = wc.deficiency_one()?;
    let mut targets = Vec::with_capacity(rhos.len());
    for rho in rhos {
        if rho.ctx() != cfg.p {
            return Err(Error::DomainMismatch);
        }
        let partial = twisted_alexander(&dc, rho, None)?;
        let factor = RationalFn::from_poly(rho.matrix(wc.meridian()).char_det(1));
        targets.push(partial.value.pow(2).mul(&factor).canonicalize());
    }
    let wk = wirtinger(k);
    let summary = enumerate_sl2_summary(&wk, cfg)?;
    let pres = wk.deficiency_one()?;
    let polynomials: Vec<TwistedPolynomial<Fp>> =
        summary.reps.par_iter().map(|r| twisted_alexander(&pres, r, None)).collect::<Result<_>>()?;
    Ok(targets
        .into_iter()
        .map(|target| {
            let matches: Vec<usize> = polynomials
                .iter()
                .enumerate()
                .filter(|(_, t)| t.value.equal_up_to_units(&target))
                .map(|(i, _)| i)
                .collect();
            ObstructionVerdict {
                obstructed: matches.is_empty(),
                target,
                polynomials: polynomials.clone(),
                matches,
                reps: summary.reps.clone(),
                slice_nonabelian: summary.slice_nonabelian,
                gl2_classes: summary.gl2_classes,
                sl2_classes: summary.sl2_classes,
                sl2_classes_all: summary.sl2_classes_all,
            }
        })
        .collect())
}

/// The `d = 1` case of the identity: `Δ_K ≐ Δ_{K_D}^2` and
/// `det K = (det K_D)^2` for the union built from the PD code.
pub fn alexander_square_check(spec: &SymUnionSpec) -> Result<(bool, bool)> {
    let k = crate::diagram::symmetric_union_pd(spec)?;
    let dk = classical_alexander(&k);
    let dd = classical_alexander(&spec.partial);
    let det_d = knot_determinant(&spec.partial);
    Ok((dk.equal_up_to_units(&dd.mul(&dd)), knot_determinant(&k) == &det_d * &det_d))
}
