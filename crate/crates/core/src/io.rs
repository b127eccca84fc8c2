//! JSON formats for spaces, preorders and lattices.
//!
//! ```json
//! {"n": 2, "opens": [[], [1], [0, 1]]}
//! {"n": 2, "subbasis": [[1]]}
//! {"n": 3, "leq": [[0, 1], [1, 2]]}
//! {"m": 3, "leq": [[0, 1], [1, 2]]}
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frames::FinLattice;
use crate::spaces::{alexandroff_space, build_space, FinSpace, PointSet, Preorder, MAX_POINTS};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subbasis: Option<Vec<Vec<usize>>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PreorderJson {
    pub n: usize,
    pub leq: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub m: usize,
    pub leq: Vec<(usize, usize)>,
}

/// Any of the three input formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Space(FinSpace),
    Lattice(FinLattice),
}

fn to_set(n: usize, xs: &[usize]) -> Result<PointSet> {
    if n > MAX_POINTS {
        return Err(Error::TooManyPoints {
            size: n,
            limit: MAX_POINTS,
        });
    }
    xs.iter()
        .map(|&x| {
            if x < n {
                Ok(x)
            } else {
                Err(Error::PointOutOfRange { point: x, n })
            }
        })
        .collect()
}

impl SpaceJson {
    pub fn build(&self) -> Result<FinSpace> {
        let sets = |v: &Vec<Vec<usize>>| -> Result<Vec<PointSet>> {
            v.iter().map(|xs| to_set(self.n, xs)).collect()
        };
        match (&self.opens, &self.subbasis) {
            (Some(o), None) => FinSpace::from_opens(self.n, &sets(o)?),
            (None, Some(s)) => build_space(self.n, &sets(s)?),
            _ => Err(Error::Input(
                "a space needs exactly one of `opens` and `subbasis`".into(),
            )),
        }
    }

    /// The space with its full list of opens.
    pub fn from_space(space: &FinSpace) -> SpaceJson {
        SpaceJson {
            n: space.n(),
            opens: Some(space.opens().iter().map(|u| u.iter().collect()).collect()),
            subbasis: None,
        }
    }
}

impl PreorderJson {
    /// With `reject_non_transitive`, input that is not already transitive
    /// is an error instead of being closed.
    pub fn build(&self, reject_non_transitive: bool) -> Result<Preorder> {
        Preorder::from_pairs(self.n, &self.leq, !reject_non_transitive)
    }
}

impl LatticeJson {
    pub fn build(&self) -> Result<FinLattice> {
        FinLattice::from_pairs(self.m, &self.leq)
    }
}

pub fn parse_space(json: &str) -> Result<FinSpace> {
    serde_json::from_str::<SpaceJson>(json)?.build()
}

pub fn parse_preorder(json: &str, reject_non_transitive: bool) -> Result<Preorder> {
    serde_json::from_str::<PreorderJson>(json)?.build(reject_non_transitive)
}

pub fn parse_lattice(json: &str) -> Result<FinLattice> {
    serde_json::from_str::<LatticeJson>(json)?.build()
}

/// Dispatches on the keys present: `m` is a lattice, `n` with `leq` a
/// preorder (read as its Alexandroff space), otherwise a space.
pub fn parse_instance(json: &str, reject_non_transitive: bool) -> Result<Instance> {
    let value: serde_json::Value = serde_json::from_str(json)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Input("expected a JSON object".into()))?;
    if obj.contains_key("m") {
        Ok(Instance::Lattice(
            serde_json::from_value::<LatticeJson>(value)?.build()?,
        ))
    } else if obj.contains_key("leq") {
        let p = serde_json::from_value::<PreorderJson>(value)?.build(reject_non_transitive)?;
        Ok(Instance::Space(alexandroff_space(&p)))
    } else {
        Ok(Instance::Space(
            serde_json::from_value::<SpaceJson>(value)?.build()?,
        ))
    }
}
