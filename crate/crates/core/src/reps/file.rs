use serde::{Deserialize, Serialize};

use super::{verify_representation, Representation};
use crate::algebra::{ConstMatrix, Fp, Prime};
use crate::error::{Error, Result};
use crate::presentation::GroupPresentation;

/// JSON form `{"p": 7, "generators": [[[a, b], [c, d]], ...]}` with
/// residues in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepFile {
    pub p: u64,
    pub generators: Vec<Vec<Vec<u64>>>,
}

impl RepFile {
    pub fn from_rep(rep: &Representation<Fp>) -> Self {
        let generators = rep
            .matrices()
            .iter()
            .map(|m| m.rows().into_iter().map(|r| r.into_iter().map(|x| x.value() as u64).collect()).collect())
            .collect();
        RepFile { p: rep.ctx().get() as u64, generators }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("representation file: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }

    /// The matrices, without reference to a presentation.
    pub fn matrices(&self) -> Result<Representation<Fp>> {
        let p = Prime::new(self.p)?;
        let mut ms = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if g.iter().flatten().any(|&x| x >= self.p) {
                return Err(Error::InvalidRepresentation(format!("matrix {} has an entry outside [0, p)", i + 1)));
            }
            let rows = g.iter().map(|r| r.iter().map(|&x| Fp::new(p, x as i64)).collect()).collect();
            ms.push(ConstMatrix::from_rows(rows)?);
        }
        Representation::new(ms)
    }

    /// The matrices, checked to define a representation of `pres`.
    pub fn to_rep(&self, pres: &GroupPresentation) -> Result<Representation<Fp>> {
        let rep = self.matrices()?;
        if !verify_representation(pres, &rep, false)? {
            return Err(Error::InvalidRepresentation("a relator does not map to the identity".into()));
        }
        Ok(rep)
    }
}
