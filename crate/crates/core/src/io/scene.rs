//! JSON scene files describing a presentation.
//!
//! ```json
//! {
//!   "torus_rank": 1,
//!   "variables": [{ "name": "x", "weight": [1] }, { "name": "y", "weight": [-1] }],
//!   "gens1": [{ "name": "w1", "weight": [1], "differential": "x^2*y" }],
//!   "gens2": [],
//!   "options": { "order": "grevlex", "seed": 0 }
//! }
//! ```

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::{MonomialOrder, Polynomial};
use crate::cdga::{validate_presentation, Gen1, Gen2, GradedCdga, GradedVariable, Weight};
use crate::error::{Error, Result};

use super::parser::parse_polynomial;
use super::printer::format_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scene {
    pub torus_rank: usize,
    pub variables: Vec<SceneVariable>,
    #[serde(default)]
    pub gens1: Vec<SceneGen1>,
    #[serde(default)]
    pub gens2: Vec<SceneGen2>,
    #[serde(default)]
    pub options: SceneOptions,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneVariable {
    pub name: String,
    pub weight: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneGen1 {
    pub name: String,
    pub weight: Vec<i64>,
    pub differential: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneGen2 {
    pub name: String,
    pub weight: Vec<i64>,
    pub differential: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    Lex,
    #[default]
    Grevlex,
}

impl OrderName {
    pub fn order(self, nvars: usize) -> MonomialOrder {
        match self {
            OrderName::Lex => MonomialOrder::lex(nvars),
            OrderName::Grevlex => MonomialOrder::grevlex(nvars),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderName>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth_fuse: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Scene {
    pub fn from_json(src: &str) -> Result<Scene> {
        serde_json::from_str(src).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    /// Builds the presentation, checking weight lengths and parsing every
    /// differential, without running the presentation checks.
    pub fn to_cdga_unchecked(&self) -> Result<GradedCdga> {
        let k = self.torus_rank;
        let check_len = |name: &str, w: &[i64]| {
            if w.len() == k {
                Ok(Weight(w.to_vec()))
            } else {
                Err(Error::Schema(format!(
                    "`{name}` has a weight of length {}, but torus_rank is {k}",
                    w.len()
                )))
            }
        };
        let vars = self
            .variables
            .iter()
            .map(|v| Ok(GradedVariable::new(v.name.clone(), 0, check_len(&v.name, &v.weight)?)))
            .collect::<Result<Vec<_>>>()?;
        let ring = GradedCdga::ring_of(&vars);
        let gens1 = self
            .gens1
            .iter()
            .map(|g| {
                Ok(Gen1 {
                    var: GradedVariable::new(g.name.clone(), 1, check_len(&g.name, &g.weight)?),
                    differential: parse_polynomial(&g.differential, &ring)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let gens2 = self
            .gens2
            .iter()
            .map(|g| {
                let differential = g
                    .differential
                    .iter()
                    .map(|(t, src)| Ok((t.clone(), parse_polynomial(src, &ring)?)))
                    .collect::<Result<BTreeMap<_, _>>>()?
                    .into_iter()
                    .filter(|(_, c): &(String, Polynomial)| !c.is_zero())
                    .collect();
                Ok(Gen2 {
                    var: GradedVariable::new(g.name.clone(), 2, check_len(&g.name, &g.weight)?),
                    differential,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GradedCdga::new(k, vars, gens1, gens2))
    }

    /// Builds and validates the presentation.
    pub fn to_cdga(&self) -> Result<GradedCdga> {
        let x = self.to_cdga_unchecked()?;
        let report = validate_presentation(&x);
        if report.passed() {
            Ok(x)
        } else {
            let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
            Err(Error::Validation(msg.join("; ")))
        }
    }

    /// Scene text for a presentation; differentials are printed in grevlex
    /// over the declared variable order.
    pub fn from_cdga(x: &GradedCdga, options: SceneOptions) -> Scene {
        let order = MonomialOrder::grevlex(x.ring().len());
        let text = |p: &Polynomial| format_polynomial(p, &order);
        Scene {
            torus_rank: x.torus_rank(),
            variables: x
                .ring_vars()
                .iter()
                .map(|v| SceneVariable { name: v.name.clone(), weight: v.weight.0.clone() })
                .collect(),
            gens1: x
                .gens1()
                .iter()
                .map(|g| SceneGen1 {
                    name: g.var.name.clone(),
                    weight: g.var.weight.0.clone(),
                    differential: text(&g.differential),
                })
                .collect(),
            gens2: x
                .gens2()
                .iter()
                .map(|g| SceneGen2 {
                    name: g.var.name.clone(),
                    weight: g.var.weight.0.clone(),
                    differential: g.differential.iter().map(|(t, c)| (t.clone(), text(c))).collect(),
                })
                .collect(),
            options,
        }
    }
}

/// Reads a scene file, returning the raw bytes alongside (for digests).
pub fn read_scene(path: &Path) -> Result<(Scene, Vec<u8>)> {
    let bytes = std::fs::read(path)?;
    let src = std::str::from_utf8(&bytes).map_err(|e| Error::Schema(format!("scene is not UTF-8: {e}")))?;
    Ok((Scene::from_json(src)?, bytes))
}

pub fn load_scene(path: &Path) -> Result<GradedCdga> {
    read_scene(path)?.0.to_cdga()
}
