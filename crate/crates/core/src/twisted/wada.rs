use std::fmt;

use super::fox::twisted_matrix;
use crate::algebra::{reduce_fraction, Field, RationalFn};
use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;
use crate::reps::{verify_representation, Representation};

/// Twisted Alexander polynomial, in canonical form up to units.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPolynomial<F: Field> {
    pub value: RationalFn<F>,
    pub d: usize,
}

impl<F: Field> TwistedPolynomial<F> {
    /// Degree of the numerator minus that of the denominator.
    pub fn degree(&self) -> Result<i64> {
        self.value.degree().ok_or_else(|| Error::Domain("zero polynomial has no degree".into()))
    }

    pub fn equal_up_to_units(&self, o: &Self) -> bool {
        self.value.equal_up_to_units(&o.value)
    }
}

impl<F: Field> fmt::Display for TwistedPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `det A_{x_j} / det Φ(x_j - 1)` for a deficiency-one presentation, where
/// `A_{x_j}` is the twisted Alexander matrix without the block column of
/// `x_j`. By default `j` is the first generator.
pub fn twisted_alexander<F: Field>(
    pres: &GroupPresentation,
    rep: &Representation<F>,
    drop_column: Option<usize>,
) -> Result<TwistedPolynomial<F>> {
    if pres.deficiency() != 1 {
        return Err(Error::MalformedPresentation(format!(
            "deficiency {} where 1 is needed",
            pres.deficiency()
        )));
    }
    if !verify_representation(pres, rep, false)? {
        return Err(Error::InvalidRepresentation("a relator does not map to the identity".into()));
    }
    let j = drop_column.unwrap_or(0);
    if j >= pres.n_gens() {
        return Err(Error::DimensionMismatch(format!("no generator x{}", j + 1)));
    }
    let d = rep.dim();
    let a = twisted_matrix(pres, rep);
    let rows: Vec<usize> = (0..a.rows()).collect();
    let cols: Vec<usize> = (0..a.cols()).filter(|c| c / d != j).collect();
    let num = a.submatrix(&rows, &cols).det()?;
    let den = rep.matrix(j).char_det(1);
    let value = reduce_fraction(&num, &den)?.canonicalize();
    Ok(TwistedPolynomial { value, d })
}
