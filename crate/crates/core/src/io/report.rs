//! Canonical JSON reports.

use std::collections::BTreeMap;

use serde::Serialize;
use serde::ser::{SerializeSeq, Serializer};
use sha2::{Digest, Sha256};

use crate::algebra::{Ideal, MonomialOrder, Polynomial};
use crate::blowup::{Chart, ReesPresentation, ReesRelation};
use crate::cdga::{classical_truncation, Excluded, GradedCdga, SubtorusBasis, Weight};
use crate::reduction::{InvariantCheck, ObstructionReport, ReductionNode};
use crate::torus::StabilizerReport;

use super::printer::format_polynomial;
use super::scene::{Scene, SceneOptions};

fn text(p: &Polynomial) -> String {
    format_polynomial(p, &MonomialOrder::grevlex(p.ring().len()))
}

pub fn ser_poly<S: Serializer>(p: &Polynomial, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&text(p))
}

pub fn ser_poly_vec<S: Serializer>(ps: &[Polynomial], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(ps.len()))?;
    for p in ps {
        seq.serialize_element(&text(p))?;
    }
    seq.end()
}

pub fn ser_poly_matrix<S: Serializer>(rows: &[Vec<Polynomial>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for row in rows {
        seq.serialize_element(&row.iter().map(text).collect::<Vec<_>>())?;
    }
    seq.end()
}

/// Envelope shared by every command output.
#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    /// SHA-256 of the scene file bytes.
    pub input_digest: String,
    pub result: T,
}

impl<T: Serialize> ReportDocument<T> {
    pub fn new(command: &str, input: &[u8], result: T) -> Self {
        ReportDocument {
            tool: "kirwan",
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_string(),
            input_digest: hex::encode(Sha256::digest(input)),
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Reduced Gröbner basis in grevlex, printed and sorted.
pub fn canonical_generators(ideal: &Ideal) -> Vec<String> {
    let order = MonomialOrder::grevlex(ideal.ring().len());
    let mut out: Vec<String> = ideal.basis().iter().map(|p| format_polynomial(p, &order)).collect();
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExcludedRecord {
    Nothing,
    Everything,
    Locus { generators: Vec<String> },
}

impl From<&Excluded> for ExcludedRecord {
    fn from(e: &Excluded) -> Self {
        match e {
            Excluded::Nothing => ExcludedRecord::Nothing,
            Excluded::Everything => ExcludedRecord::Everything,
            Excluded::Locus(i) => ExcludedRecord::Locus { generators: canonical_generators(i) },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CdgaRecord {
    #[serde(flatten)]
    pub presentation: Scene,
    pub truncation: Vec<String>,
    pub excluded: ExcludedRecord,
}

impl From<&GradedCdga> for CdgaRecord {
    fn from(x: &GradedCdga) -> Self {
        CdgaRecord {
            presentation: Scene::from_cdga(x, SceneOptions::default()),
            truncation: canonical_generators(&classical_truncation(x)),
            excluded: x.excluded().into(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChartRecord {
    pub id: String,
    pub center: String,
    pub exceptional: String,
    pub exceptional_weight: Weight,
    pub slopes: BTreeMap<String, String>,
    pub subtorus: SubtorusBasis,
    pub fully_unstable: bool,
    pub cdga: CdgaRecord,
}

impl From<&Chart> for ChartRecord {
    fn from(c: &Chart) -> Self {
        ChartRecord {
            id: c.id(),
            center: c.center.clone(),
            exceptional: c.exceptional.clone(),
            exceptional_weight: c.exceptional_weight.clone(),
            slopes: c.slopes.clone(),
            subtorus: c.subtorus.clone(),
            fully_unstable: c.fully_unstable,
            cdga: c.cdga.as_record(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReesRecord {
    pub subtorus: SubtorusBasis,
    pub ring: Vec<String>,
    pub t_inv: String,
    /// Homogeneous variable -> ring variable it lifts.
    pub homog_vars: BTreeMap<String, String>,
    pub lambda: crate::blowup::LambdaMatrix,
    pub relations: Vec<ReesRelation>,
}

impl From<&ReesPresentation> for ReesRecord {
    fn from(r: &ReesPresentation) -> Self {
        ReesRecord {
            subtorus: r.subtorus.clone(),
            ring: r.ring.names().to_vec(),
            t_inv: r.t_inv.clone(),
            homog_vars: r.homog_vars.iter().map(|(v, x)| (v.name.clone(), x.clone())).collect(),
            lambda: r.lambda.clone(),
            relations: r.relations.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BranchRecord {
    pub subtorus: SubtorusBasis,
    pub center: CdgaRecord,
    pub saturation: Vec<String>,
    pub certified: bool,
    pub charts: Vec<ChartRecord>,
    /// Node ids of the reduced (not fully unstable) charts.
    pub children: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeRecord {
    pub id: String,
    pub depth: usize,
    pub cdga: CdgaRecord,
    pub stabilizer: StabilizerReport,
    pub branches: Vec<BranchRecord>,
    pub leaf_report: Option<ObstructionReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeafRecord {
    pub id: String,
    pub excluded: ExcludedRecord,
    pub report: ObstructionReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub blowups: usize,
    pub dm_charts: usize,
    pub fully_unstable_charts: usize,
    pub height: usize,
    pub certified: bool,
    pub checks_passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TreeRecord {
    pub summary: Summary,
    pub nodes: Vec<NodeRecord>,
    pub leaves: Vec<LeafRecord>,
    pub checks: Vec<InvariantCheck>,
}

impl GradedCdga {
    pub fn as_record(&self) -> CdgaRecord {
        self.into()
    }
}

pub fn summarize(tree: &ReductionNode) -> Summary {
    let nodes = tree.nodes();
    Summary {
        blowups: nodes.iter().map(|n| n.branches.len()).sum(),
        dm_charts: tree.leaves().iter().filter(|l| l.depth > 0).count(),
        fully_unstable_charts: nodes.iter().flat_map(|n| n.children()).filter(|c| c.chart.fully_unstable).count(),
        height: tree.height(),
        certified: tree.certified(),
        checks_passed: tree.all_checks().iter().all(|c| c.passed),
    }
}

pub fn leaf_records(tree: &ReductionNode) -> Vec<LeafRecord> {
    tree.leaves()
        .into_iter()
        .map(|n| LeafRecord {
            id: n.id.clone(),
            excluded: n.cdga.excluded().into(),
            report: n.leaf_report.clone().expect("leaves carry reports"),
        })
        .collect()
}

pub fn tree_record(tree: &ReductionNode) -> TreeRecord {
    let nodes = tree
        .nodes()
        .into_iter()
        .map(|n| NodeRecord {
            id: n.id.clone(),
            depth: n.depth,
            cdga: n.cdga.as_record(),
            stabilizer: n.stabilizer.clone(),
            branches: n
                .branches
                .iter()
                .map(|b| BranchRecord {
                    subtorus: b.subtorus.clone(),
                    center: b.center.as_record(),
                    saturation: canonical_generators(&b.saturation),
                    certified: b.certified,
                    charts: b.children.iter().map(|c| (&c.chart).into()).collect(),
                    children: b.children.iter().filter_map(|c| c.node.as_ref().map(|n| n.id.clone())).collect(),
                })
                .collect(),
            leaf_report: n.leaf_report.clone(),
        })
        .collect();
    TreeRecord {
        summary: summarize(tree),
        nodes,
        leaves: leaf_records(tree),
        checks: tree.all_checks().into_iter().cloned().collect(),
    }
}
