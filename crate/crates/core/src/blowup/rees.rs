use serde::Serialize;

use crate::algebra::{Ideal, MonomialOrder, Polynomial, Ring};
use crate::cdga::{validate_presentation, GradedCdga, GradedVariable, SubtorusBasis};
use crate::error::{Error, Result};
use crate::torus::moving_indices;

use super::charts::{dagger_check_detail, Chart};
use super::lambda::{lambda_matrix, LambdaMatrix};

/// One relation of the extended Rees algebra presentation, graded by
/// homological degree and by homogeneous (`t`-) degree.
#[derive(Clone, Debug, Serialize)]
pub struct ReesRelation {
    pub homological_degree: u8,
    pub homogeneous_degree: i32,
    /// Generator or variable this relation comes from.
    pub source: String,
    #[serde(serialize_with = "crate::io::report::ser_poly")]
    pub expression: Polynomial,
}

/// Presentation of the extended Rees algebra of the fixed locus of a subtorus:
/// the base ring adjoined `t⁻¹` (homogeneous degree -1) and one `v_j` per
/// moving ring variable (homogeneous degree 1).
///
/// Expressions live in the ring `[base ring, t⁻¹, v..., degree-1 generators]`;
/// degree-1 generators only occur linearly.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    pub base: GradedCdga,
    pub subtorus: SubtorusBasis,
    pub ring: Ring,
    pub t_inv: String,
    /// `(v_j, x_j)` pairs: the homogeneous variable and the moving ring
    /// variable it lifts.
    pub homog_vars: Vec<(GradedVariable, String)>,
    pub lambda: LambdaMatrix,
    pub relations: Vec<ReesRelation>,
}

impl ReesPresentation {
    pub fn relations_of(&self, homological: u8, homogeneous: i32) -> impl Iterator<Item = &ReesRelation> {
        self.relations
            .iter()
            .filter(move |r| r.homological_degree == homological && r.homogeneous_degree == homogeneous)
    }

    /// Homological-degree-0 part of the presentation on the affine piece
    /// where `v_center = 1`, written in a chart ring `[ξ, slopes, fixed]`
    /// laid out like [`super::blowup_charts`] (`x_center -> ξ`, `x_i -> ξ u_i`,
    /// `t⁻¹ -> ξ`, `v_i -> u_i`).
    pub fn chart_ideal(&self, chart: &Chart) -> Result<Ideal> {
        let (center, chart_ring, slopes) = (&chart.center, chart.cdga.ring(), &chart.slopes);
        let xi = chart.exceptional_poly();
        let lookup = |n: &str| Polynomial::var_named(chart_ring, n).ok_or_else(|| Error::UnknownVariable(n.into()));
        let mut images = Vec::with_capacity(self.ring.len());
        for name in self.ring.names() {
            let img = if name == center {
                xi.clone()
            } else if let Some(s) = slopes.get(name) {
                &xi * &lookup(s)?
            } else if *name == self.t_inv {
                xi.clone()
            } else if let Some((_, x)) = self.homog_vars.iter().find(|(v, _)| &v.name == name) {
                if x == center {
                    Polynomial::one(chart_ring)
                } else {
                    lookup(&slopes[x])?
                }
            } else if self.base.gen1(name).is_some() {
                // degree-1 generators do not enter degree-0 relations
                Polynomial::zero(chart_ring)
            } else {
                lookup(name)?
            };
            images.push(img);
        }
        let mut gens = Vec::new();
        for r in self.relations.iter().filter(|r| r.homological_degree == 0) {
            gens.push(r.expression.substitute(&images, chart_ring));
        }
        let moving_h = &self.subtorus;
        for g in self.base.gens1().iter().filter(|g| moving_h.fixes(&g.var.weight)) {
            let lifted = g.differential.embed_by_name(&self.ring)?;
            gens.push(lifted.substitute(&images, chart_ring));
        }
        Ok(Ideal::new(chart_ring, gens))
    }
}

/// Extended Rees algebra presentation of the fixed locus of `h` inside `x`.
///
/// * `(0, 0)`: `t⁻¹ v_j - x_j` for each moving ring variable,
/// * `(0, 1)`: `Σ_k λ_ik v_k` for each moving degree-1 generator, where
///   `d(w_i) = Σ_k λ_ik x_k`,
/// * `(1, 1)`: `Σ_{k,l} β_kl v_l w_k` for each degree-2 generator with
///   coefficients `c_k = Σ_l β_kl x_l` on moving targets (all targets when the
///   generator itself moves).
pub fn rees_presentation(x: &GradedCdga, h: &SubtorusBasis, order: &MonomialOrder) -> Result<ReesPresentation> {
    let report = validate_presentation(x);
    if !report.passed() {
        let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidPresentation(msg.join("; ")));
    }
    if let Err(name) = dagger_check_detail(x, h) {
        return Err(Error::DaggerViolation(name));
    }
    let moving = moving_indices(x, h);
    let base_ring = x.ring();
    let mut taken: Vec<String> = base_ring.names().to_vec();
    taken.extend(x.gens1().iter().map(|g| g.var.name.clone()));
    taken.extend(x.gens2().iter().map(|g| g.var.name.clone()));
    let t_inv = base_ring.fresh_name("tinv", &taken);
    taken.push(t_inv.clone());
    let mut homog_vars = Vec::with_capacity(moving.len());
    for (j, &i) in moving.iter().enumerate() {
        let name = base_ring.fresh_name(&format!("v{}", j + 1), &taken);
        taken.push(name.clone());
        homog_vars.push((GradedVariable::new(name, 0, x.ring_vars()[i].weight.clone()), base_ring.name(i).to_string()));
    }
    let mut names: Vec<String> = base_ring.names().to_vec();
    names.push(t_inv.clone());
    names.extend(homog_vars.iter().map(|(v, _)| v.name.clone()));
    names.extend(x.gens1().iter().map(|g| g.var.name.clone()));
    let ring = Ring::new(&names);
    let shift: Vec<Option<usize>> = (0..base_ring.len()).map(Some).collect();
    let lift = |p: &Polynomial| p.embed(&ring, &shift);
    let var = |n: &str| Polynomial::var_named(&ring, n).expect("Rees variable");

    let mut relations = Vec::new();
    for ((v, xname), &i) in homog_vars.iter().zip(&moving) {
        relations.push(ReesRelation {
            homological_degree: 0,
            homogeneous_degree: 0,
            source: xname.clone(),
            expression: &(&var(&t_inv) * &var(&v.name)) - &lift(&Polynomial::var(base_ring, i)),
        });
    }

    let gs: Vec<Polynomial> = moving.iter().map(|&i| Polynomial::var(base_ring, i)).collect();
    let moving_gens1: Vec<_> = x.gens1().iter().filter(|g| !h.fixes(&g.var.weight)).collect();
    let fs: Vec<Polynomial> = moving_gens1.iter().map(|g| g.differential.clone()).collect();
    let lambda = lambda_matrix(&fs, &gs, order)?;
    let v_of = |j: usize| var(&homog_vars[j].0.name);
    for (g, row) in moving_gens1.iter().zip(&lambda.entries) {
        let mut expr = Polynomial::zero(&ring);
        for (j, coeff) in row.iter().enumerate() {
            expr = &expr + &(&lift(coeff) * &v_of(j));
        }
        relations.push(ReesRelation {
            homological_degree: 0,
            homogeneous_degree: 1,
            source: g.var.name.clone(),
            expression: expr,
        });
    }

    for e in x.gens2() {
        let moving_e = !h.fixes(&e.var.weight);
        let mut expr = Polynomial::zero(&ring);
        for (target, c) in &e.differential {
            let target_moving = x.gen1(target).is_some_and(|w| !h.fixes(&w.var.weight));
            if !(moving_e || target_moving) {
                continue;
            }
            let (betas, rem) = c.divide_by_list(&gs, order);
            if !rem.is_zero() {
                return Err(Error::DaggerViolation(e.var.name.clone()));
            }
            for (j, beta) in betas.iter().enumerate() {
                expr = &expr + &(&(&lift(beta) * &v_of(j)) * &var(target));
            }
        }
        if !expr.is_zero() {
            relations.push(ReesRelation {
                homological_degree: 1,
                homogeneous_degree: 1,
                source: e.var.name.clone(),
                expression: expr,
            });
        }
    }

    Ok(ReesPresentation {
        base: x.clone(),
        subtorus: h.clone(),
        ring,
        t_inv,
        homog_vars,
        lambda,
        relations,
    })
}
