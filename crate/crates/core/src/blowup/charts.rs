use std::collections::BTreeMap;

use crate::algebra::{Ideal, Monomial, Polynomial, Ring};
use crate::cdga::{validate_presentation, Excluded, Gen1, Gen2, GradedCdga, GradedVariable, SubtorusBasis, Weight};
use crate::error::{Error, Result};
use crate::reduction::dagger_check;
use crate::torus::moving_indices;

/// One affine piece of an equivariant blow-up along the fixed locus of a
/// subtorus: the piece where the center variable generates the exceptional
/// divisor.
#[derive(Clone, Debug)]
pub struct Chart {
    /// Identifier of the presentation this chart was cut from.
    pub parent: String,
    /// Parent ring variable inverted on this chart.
    pub center: String,
    /// Chart variable cutting out the exceptional divisor.
    pub exceptional: String,
    pub exceptional_weight: Weight,
    /// Parent moving variable -> chart slope variable.
    pub slopes: BTreeMap<String, String>,
    pub subtorus: SubtorusBasis,
    pub cdga: GradedCdga,
    pub fully_unstable: bool,
}

impl Chart {
    pub fn id(&self) -> String {
        if self.parent.is_empty() {
            self.center.clone()
        } else {
            format!("{}/{}", self.parent, self.center)
        }
    }

    pub fn with_parent(mut self, parent: impl Into<String>) -> Self {
        self.parent = parent.into();
        self
    }

    pub fn exceptional_poly(&self) -> Polynomial {
        Polynomial::var_named(self.cdga.ring(), &self.exceptional).expect("exceptional variable in chart ring")
    }
}

/// Chart variables sit at the positions of the parent variables they replace.
struct Layout {
    ring: Ring,
    ring_vars: Vec<GradedVariable>,
    center: usize,
    moving: Vec<usize>,
    slopes: BTreeMap<String, String>,
}

impl Layout {
    fn new(x: &GradedCdga, moving: &[usize], center: usize) -> Layout {
        let mut taken: Vec<String> = x.ring().names().to_vec();
        taken.extend(x.gens1().iter().map(|g| g.var.name.clone()));
        taken.extend(x.gens2().iter().map(|g| g.var.name.clone()));
        let xi_weight = x.ring_vars()[center].weight.clone();
        let mut ring_vars = Vec::with_capacity(x.ring_vars().len());
        let mut slopes = BTreeMap::new();
        for (i, v) in x.ring_vars().iter().enumerate() {
            let var = if i == center {
                let name = x.ring().fresh_name("xi", &taken);
                GradedVariable::new(name, 0, xi_weight.clone())
            } else if moving.contains(&i) {
                let name = x.ring().fresh_name(&format!("u_{}", v.name), &taken);
                slopes.insert(v.name.clone(), name.clone());
                GradedVariable::new(name, 0, v.weight.sub(&xi_weight))
            } else {
                v.clone()
            };
            taken.push(var.name.clone());
            ring_vars.push(var);
        }
        Layout {
            ring: GradedCdga::ring_of(&ring_vars),
            ring_vars,
            center,
            moving: moving.to_vec(),
            slopes,
        }
    }

    /// Pullback `x_center -> ξ`, `x_i -> ξ u_i`: on exponents, the ξ slot
    /// collects the total moving degree.
    fn pull(&self, p: &Polynomial) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            p.terms().map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e[self.center] = self.moving.iter().map(|&i| m.exponents()[i]).sum();
                (Monomial::from_exponents(e), c.clone())
            }),
        )
    }

    fn divide_xi(&self, p: &Polynomial, what: &str) -> Result<Polynomial> {
        let xi = Polynomial::var(&self.ring, self.center);
        p.exact_divide(&xi)
            .map_err(|_| Error::NotDivisible(format!("{what} is not divisible by the exceptional equation")))
    }

    fn images(&self, nparent: usize) -> Vec<Polynomial> {
        (0..nparent)
            .map(|i| {
                let v = Polynomial::var(&self.ring, i);
                if i != self.center && self.moving.contains(&i) {
                    &v * &Polynomial::var(&self.ring, self.center)
                } else {
                    v
                }
            })
            .collect()
    }
}

fn chart_for(x: &GradedCdga, h: &SubtorusBasis, moving: &[usize], center: usize) -> Result<Chart> {
    let lay = Layout::new(x, moving, center);
    let xi_weight = x.ring_vars()[center].weight.clone();
    let is_moving = |w: &Weight| !h.fixes(w);

    let gens1 = x
        .gens1()
        .iter()
        .map(|g| {
            let pulled = lay.pull(&g.differential);
            if is_moving(&g.var.weight) {
                Ok(Gen1 {
                    var: GradedVariable::new(g.var.name.clone(), 1, g.var.weight.sub(&xi_weight)),
                    differential: lay.divide_xi(&pulled, &format!("d({})", g.var.name))?,
                })
            } else {
                Ok(Gen1 {
                    var: g.var.clone(),
                    differential: pulled,
                })
            }
        })
        .collect::<Result<Vec<_>>>()?;

    let xi = Polynomial::var(&lay.ring, center);
    let gens2 = x
        .gens2()
        .iter()
        .map(|e| {
            let moving_e = is_moving(&e.var.weight);
            let mut differential = BTreeMap::new();
            for (target, c) in &e.differential {
                let target_moving = x.gen1(target).is_some_and(|w| is_moving(&w.var.weight));
                let mut coeff = lay.pull(c);
                if target_moving {
                    coeff = &coeff * &xi;
                }
                if moving_e {
                    coeff = lay.divide_xi(&coeff, &format!("coefficient of {target} in d({})", e.var.name))?;
                }
                if !coeff.is_zero() {
                    differential.insert(target.clone(), coeff);
                }
            }
            let weight = if moving_e {
                e.var.weight.sub(&xi_weight)
            } else {
                e.var.weight.clone()
            };
            Ok(Gen2 {
                var: GradedVariable::new(e.var.name.clone(), 2, weight),
                differential,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let images = lay.images(x.ring_vars().len());
    let excluded = x.excluded().map(&lay.ring, |p| p.substitute(&images, &lay.ring));
    let cdga = GradedCdga::new(x.torus_rank(), lay.ring_vars.clone(), gens1, gens2).with_excluded(excluded);
    Ok(Chart {
        parent: String::new(),
        center: x.ring().name(center).to_string(),
        exceptional: lay.ring.name(center).to_string(),
        exceptional_weight: xi_weight,
        slopes: lay.slopes,
        subtorus: h.clone(),
        fully_unstable: cdga.excluded().is_everything(),
        cdga,
    })
}

/// Affine charts of the equivariant blow-up of `x` along the fixed locus of
/// `h`, one per moving ring variable, ordered by center name. The parent's
/// excluded locus is pulled back.
pub fn blowup_charts(x: &GradedCdga, h: &SubtorusBasis) -> Result<Vec<Chart>> {
    let report = validate_presentation(x);
    if !report.passed() {
        let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidPresentation(msg.join("; ")));
    }
    if let Err(name) = dagger_check_detail(x, h) {
        return Err(Error::DaggerViolation(name));
    }
    let moving = moving_indices(x, h);
    if moving.is_empty() {
        return Err(Error::InvalidPresentation("the subtorus moves no ring variable; nothing to blow up".into()));
    }
    let mut centers = moving.clone();
    centers.sort_by(|&a, &b| x.ring().name(a).cmp(x.ring().name(b)));
    centers.into_iter().map(|c| chart_for(x, h, &moving, c)).collect()
}

/// Kirwan charts: blow-up charts with the strict transform of the saturation
/// `V(j)` added to the excluded locus. `j = (0)` marks every chart as fully
/// unstable.
pub fn kirwan_charts(x: &GradedCdga, h: &SubtorusBasis, j: &Ideal) -> Result<Vec<Chart>> {
    let charts = blowup_charts(x, h)?;
    charts
        .into_iter()
        .map(|mut chart| {
            let ring = chart.cdga.ring().clone();
            let strict = if j.is_zero() {
                Excluded::Everything
            } else {
                let images = chart_images(x, &chart);
                let pulled = j.map(&ring, |p| p.substitute(&images, &ring));
                Excluded::vanishing_of(pulled).saturate(&chart.exceptional_poly())
            };
            let excluded = chart.cdga.excluded().union(&strict);
            chart.fully_unstable = excluded.is_everything();
            chart.cdga = chart.cdga.clone().with_excluded(excluded);
            Ok(chart)
        })
        .collect()
}

/// Images of the parent ring variables in the chart ring, rebuilt from the
/// chart's naming data.
pub fn chart_images(parent: &GradedCdga, chart: &Chart) -> Vec<Polynomial> {
    let ring = chart.cdga.ring();
    let xi = chart.exceptional_poly();
    parent
        .ring()
        .names()
        .iter()
        .map(|name| {
            if *name == chart.center {
                xi.clone()
            } else if let Some(slope) = chart.slopes.get(name) {
                &xi * &Polynomial::var_named(ring, slope).expect("slope variable")
            } else {
                Polynomial::var_named(ring, name).expect("fixed variable kept by name")
            }
        })
        .collect()
}

/// `Err(name)` for the first moving degree-2 generator whose differential
/// survives on the fixed locus.
pub(crate) fn dagger_check_detail(x: &GradedCdga, h: &SubtorusBasis) -> std::result::Result<(), String> {
    if dagger_check(x, h) {
        return Ok(());
    }
    let moving = moving_indices(x, h);
    let bad = x
        .gens2()
        .iter()
        .find(|e| !h.fixes(&e.var.weight) && e.differential.values().any(|c| !c.kill_vars(&moving).is_zero()))
        .map(|e| e.var.name.clone())
        .unwrap_or_default();
    Err(bad)
}
