use serde::{Deserialize, Serialize};

use super::{HopfSuperData, Tensor};
use crate::cyclo::{Cyclo, ScalarJson};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Serialized form. `antipode[i]` lists the coordinates of `S(e_i)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HopfJson {
    pub name: String,
    pub conductor: u32,
    pub dim: usize,
    pub parity: Vec<u8>,
    pub labels: Vec<String>,
    pub unit: Vec<ScalarJson>,
    pub counit: Vec<ScalarJson>,
    pub mult: Vec<(usize, usize, usize, ScalarJson)>,
    pub comult: Vec<(usize, usize, usize, ScalarJson)>,
    pub antipode: Vec<Vec<ScalarJson>>,
}

impl HopfJson {
    pub fn from_hopf(h: &HopfSuperData) -> Result<Self> {
        let n = h.conductor;
        let sc = |c: &Cyclo| c.to_json(n);
        let vec = |v: &[Cyclo]| v.iter().map(sc).collect::<Result<Vec<_>>>();
        let d = h.dim;
        let mut mult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in h.mult_basis(i, j) {
                    mult.push((i, j, *k, sc(c)?));
                }
            }
        }
        let mut comult = Vec::new();
        for i in 0..d {
            for (j, k, c) in h.comult_basis(i) {
                comult.push((i, *j, *k, sc(c)?));
            }
        }
        let antipode = (0..d).map(|i| vec(&h.antipode.col(i))).collect::<Result<Vec<_>>>()?;
        Ok(HopfJson {
            name: h.name.clone(),
            conductor: n,
            dim: d,
            parity: h.parity.clone(),
            labels: h.labels.clone(),
            unit: vec(&h.unit)?,
            counit: vec(&h.counit)?,
            mult,
            comult,
            antipode,
        })
    }

    pub fn to_hopf(&self) -> Result<HopfSuperData> {
        let d = self.dim;
        let sc = Cyclo::from_json;
        let vec = |v: &[ScalarJson]| v.iter().map(sc).collect::<Result<Vec<_>>>();
        let oob = |what: &str| Error::Invalid(format!("{} index out of range", what));
        let mut mult = vec![vec![Cyclo::zero(); d]; d * d];
        for (i, j, k, c) in &self.mult {
            if *i >= d || *j >= d || *k >= d {
                return Err(oob("mult"));
            }
            mult[i * d + j][*k] += &sc(c)?;
        }
        let mut comult = vec![Tensor::zeros(d, d); d];
        for (i, j, k, c) in &self.comult {
            if *i >= d || *j >= d || *k >= d {
                return Err(oob("comult"));
            }
            comult[*i].add_at(*j, *k, &sc(c)?);
        }
        if self.antipode.len() != d {
            return Err(Error::DimensionMismatch("antipode".into()));
        }
        let mut s = Matrix::zeros(d, d);
        for (i, row) in self.antipode.iter().enumerate() {
            if row.len() != d {
                return Err(Error::DimensionMismatch("antipode".into()));
            }
            for (k, c) in row.iter().enumerate() {
                s.set(k, i, sc(c)?);
            }
        }
        HopfSuperData::from_parts(
            self.name.clone(),
            self.conductor,
            self.parity.clone(),
            self.labels.clone(),
            vec(&self.unit)?,
            vec(&self.counit)?,
            mult,
            comult,
            s,
        )
    }
}

impl HopfSuperData {
    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&HopfJson::from_hopf(self)?)?)
    }

    pub fn from_json_str(s: &str) -> Result<HopfSuperData> {
        let j: HopfJson = serde_json::from_str(s)?;
        j.to_hopf()
    }
}
