use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::algebra::Ideal;
use crate::blowup::{crosscheck_truncation, kirwan_charts, Chart};
use crate::cdga::{fixed_locus, validate_presentation, GradedCdga, SubtorusBasis};
use crate::error::{Error, Result};
use crate::torus::{saturation_ideal_partial, stabilizer_stratification, StabilizerReport, DEFAULT_DEGREE_CAP, DEFAULT_VARIABLE_CAP};

use super::checks::{dagger_check, quasi_smooth_check};
use super::obstruction::{leaf_report, ObstructionReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReductionConfig {
    pub depth_fuse: usize,
    pub variable_cap: usize,
    pub degree_cap: u32,
    pub seed: u64,
}

impl Default for ReductionConfig {
    fn default() -> Self {
        ReductionConfig {
            depth_fuse: 8,
            variable_cap: DEFAULT_VARIABLE_CAP,
            degree_cap: DEFAULT_DEGREE_CAP,
            seed: 0,
        }
    }
}

/// Outcome of one invariant assertion made while building the tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    /// Node or chart the check was made on.
    pub subject: String,
    pub passed: bool,
}

/// Blow-up of a node along one maximal subtorus.
#[derive(Clone, Debug)]
pub struct Branch {
    pub subtorus: SubtorusBasis,
    pub center: GradedCdga,
    pub saturation: Ideal,
    /// False when the saturation generators may be incomplete.
    pub certified: bool,
    pub children: Vec<Child>,
}

#[derive(Clone, Debug)]
pub struct Child {
    pub chart: Chart,
    /// `None` for fully unstable charts, which are kept but not reduced.
    pub node: Option<ReductionNode>,
}

#[derive(Clone, Debug)]
pub struct ReductionNode {
    pub id: String,
    pub depth: usize,
    pub cdga: GradedCdga,
    pub stabilizer: StabilizerReport,
    pub branches: Vec<Branch>,
    pub leaf_report: Option<ObstructionReport>,
    pub checks: Vec<InvariantCheck>,
}

impl ReductionNode {
    pub fn is_leaf(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn children(&self) -> impl Iterator<Item = &Child> {
        self.branches.iter().flat_map(|b| b.children.iter())
    }

    /// Depth-first, parents before children.
    pub fn nodes(&self) -> Vec<&ReductionNode> {
        let mut out = vec![self];
        for c in self.children() {
            if let Some(n) = &c.node {
                out.extend(n.nodes());
            }
        }
        out
    }

    pub fn leaves(&self) -> Vec<&ReductionNode> {
        self.nodes().into_iter().filter(|n| n.is_leaf()).collect()
    }

    pub fn height(&self) -> usize {
        self.children()
            .filter_map(|c| c.node.as_ref())
            .map(|n| n.height() + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn all_checks(&self) -> Vec<&InvariantCheck> {
        self.nodes().into_iter().flat_map(|n| n.checks.iter()).collect()
    }

    pub fn certified(&self) -> bool {
        self.branches
            .iter()
            .all(|b| b.certified && b.children.iter().all(|c| c.node.as_ref().map_or(true, ReductionNode::certified)))
    }
}

/// Iterated Kirwan blow-up until every stabilizer on the semistable locus is
/// finite.
pub fn stabilizer_reduce(x: &GradedCdga, config: &ReductionConfig) -> Result<ReductionNode> {
    let report = validate_presentation(x);
    if !report.passed() {
        let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::Validation(msg.join("; ")));
    }
    reduce_node(x, "root".into(), 0, config)
}

fn node_seed(seed: u64, id: &str) -> u64 {
    let digest = Sha256::new().chain_update(seed.to_le_bytes()).chain_update(id.as_bytes()).finalize();
    u64::from_le_bytes(digest[..8].try_into().expect("eight bytes"))
}

fn reduce_node(x: &GradedCdga, id: String, depth: usize, config: &ReductionConfig) -> Result<ReductionNode> {
    if depth > config.depth_fuse {
        return Err(Error::DepthExceeded(config.depth_fuse));
    }
    let stabilizer = stabilizer_stratification(x, config.variable_cap)?;
    if stabilizer.max_dim == 0 {
        let leaf = leaf_report(x, true, node_seed(config.seed, &id))?;
        return Ok(ReductionNode {
            id,
            depth,
            cdga: x.clone(),
            stabilizer,
            branches: Vec::new(),
            leaf_report: Some(leaf),
            checks: Vec::new(),
        });
    }

    let many = stabilizer.maximal_subtori.len() > 1;
    let mut checks = Vec::new();
    let mut branches = Vec::with_capacity(stabilizer.maximal_subtori.len());
    for (b, h) in stabilizer.maximal_subtori.iter().enumerate() {
        let prefix = if many { format!("{id}#{b}") } else { id.clone() };
        let center = fixed_locus(x, h)?;
        let saturation = saturation_ideal_partial(x, h, config.degree_cap)?;
        let charts = kirwan_charts(x, h, &saturation.ideal)?;
        let dagger_parent = dagger_check(x, h);
        let mut edge_checks = Vec::new();
        for chart in &charts {
            let subject = format!("{prefix}/{}", chart.center);
            edge_checks.push(InvariantCheck { name: "chart-valid", subject: subject.clone(), passed: validate_presentation(&chart.cdga).passed() });
            edge_checks.push(InvariantCheck { name: "truncation-crosscheck", subject: subject.clone(), passed: crosscheck_truncation(chart, x, h) });
            if quasi_smooth_check(x) {
                edge_checks.push(InvariantCheck { name: "quasi-smooth-preserved", subject: subject.clone(), passed: quasi_smooth_check(&chart.cdga) });
            }
            if dagger_parent {
                let full = SubtorusBasis::full(x.torus_rank());
                edge_checks.push(InvariantCheck {
                    name: "dagger-preserved",
                    subject,
                    passed: !dagger_check(x, &full) || dagger_check(&chart.cdga, &full),
                });
            }
        }
        checks.extend(edge_checks);

        let children = charts
            .into_par_iter()
            .map(|chart| {
                let child_id = format!("{prefix}/{}", chart.center);
                let node = if chart.fully_unstable {
                    None
                } else {
                    let n = reduce_node(&chart.cdga, child_id.clone(), depth + 1, config)?;
                    if n.stabilizer.max_dim >= stabilizer.max_dim {
                        return Err(Error::StrictDecreaseViolated {
                            parent: stabilizer.max_dim,
                            child: n.stabilizer.max_dim,
                            chart: child_id,
                        });
                    }
                    Some(n)
                };
                Ok(Child { chart: chart.with_parent(prefix.clone()), node })
            })
            .collect::<Result<Vec<_>>>()?;
        for c in &children {
            if let Some(n) = &c.node {
                checks.push(InvariantCheck { name: "strict-decrease", subject: n.id.clone(), passed: true });
            }
        }
        branches.push(Branch {
            subtorus: h.clone(),
            center,
            saturation: saturation.ideal,
            certified: saturation.certified,
            children,
        });
    }
    Ok(ReductionNode {
        id,
        depth,
        cdga: x.clone(),
        stabilizer,
        branches,
        leaf_report: None,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Polynomial;
    use crate::cdga::{from_invariant_function, GradedVariable, Weight};

    fn vars(ws: &[(&str, i64)]) -> Vec<GradedVariable> {
        ws.iter().map(|(n, w)| GradedVariable::new(*n, 0, Weight(vec![*w]))).collect()
    }

    #[test]
    fn hyperbolic_plane_needs_one_blowup() {
        let x = GradedCdga::new(1, vars(&[("x", 1), ("y", -1)]), vec![], vec![]);
        let tree = stabilizer_reduce(&x, &ReductionConfig::default()).unwrap();
        assert_eq!(tree.height(), 1);
        let leaves = tree.leaves();
        assert_eq!(leaves.len(), 2);
        for leaf in leaves {
            assert!(leaf.leaf_report.as_ref().unwrap().dm);
            let r = leaf.cdga.ring();
            let other = (0..r.len()).find(|&i| r.name(i) != "xi").unwrap();
            assert!(leaf.cdga.excluded_ideal().equals(&Ideal::of_vars(r, &[other])));
        }
        assert!(tree.all_checks().iter().all(|c| c.passed));
    }

    #[test]
    fn darboux_leaves_have_vdim_zero() {
        let vs = vars(&[("x", 1), ("y", -1)]);
        let r = GradedCdga::ring_of(&vs);
        let f = &Polynomial::var(&r, 0).pow(2) * &Polynomial::var(&r, 1).pow(2);
        let x = from_invariant_function(&vs, &f).unwrap();
        let tree = stabilizer_reduce(&x, &ReductionConfig::default()).unwrap();
        assert_eq!(tree.height(), 1);
        for leaf in tree.leaves() {
            let rep = leaf.leaf_report.as_ref().unwrap();
            assert_eq!(rep.vdim, 0);
            assert_eq!(rep.e_ranks, Some((1, 1)));
        }
    }

    #[test]
    fn positive_weights_are_fully_unstable() {
        let x = GradedCdga::new(1, vars(&[("x", 1), ("y", 1)]), vec![], vec![]);
        let tree = stabilizer_reduce(&x, &ReductionConfig::default()).unwrap();
        assert!(tree.children().all(|c| c.chart.fully_unstable && c.node.is_none()));
        assert_eq!(tree.leaves().len(), 0);
    }

    #[test]
    fn rank_zero_is_a_single_leaf() {
        let vs = vec![GradedVariable::new("a", 0, Weight(vec![]))];
        let tree = stabilizer_reduce(&GradedCdga::new(0, vs, vec![], vec![]), &ReductionConfig::default()).unwrap();
        assert!(tree.is_leaf());
    }

    #[test]
    fn node_seeds_differ_by_id() {
        assert_ne!(node_seed(1, "root"), node_seed(1, "root/x"));
        assert_eq!(node_seed(1, "root"), node_seed(1, "root"));
    }
}
