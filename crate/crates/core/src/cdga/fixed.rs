use super::{validate_presentation, Gen1, Gen2, GradedCdga, GradedVariable, SubtorusBasis};
use crate::algebra::Polynomial;
use crate::error::{Error, Result};

/// Partitions `items` into those fixed by `h` and those moved by it.
pub fn weight_split<'a>(items: &'a [GradedVariable], h: &SubtorusBasis) -> (Vec<&'a GradedVariable>, Vec<&'a GradedVariable>) {
    items.iter().partition(|v| h.fixes(&v.weight))
}

/// Derived fixed locus of the subtorus `h`: keep the fixed generators, set
/// moving ring variables to zero and drop terms through moving degree-1
/// generators.
pub fn fixed_locus(x: &GradedCdga, h: &SubtorusBasis) -> Result<GradedCdga> {
    let report = validate_presentation(x);
    if !report.passed() {
        let msg: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Error::InvalidPresentation(msg.join("; ")));
    }
    let ring_vars: Vec<GradedVariable> = x.ring_vars().iter().filter(|v| h.fixes(&v.weight)).cloned().collect();
    let target = GradedCdga::ring_of(&ring_vars);
    let moving: Vec<usize> = (0..x.ring_vars().len())
        .filter(|&i| !h.fixes(&x.ring_vars()[i].weight))
        .collect();
    let mut map = vec![None; x.ring_vars().len()];
    let mut j = 0;
    for (i, slot) in map.iter_mut().enumerate() {
        if !moving.contains(&i) {
            *slot = Some(j);
            j += 1;
        }
    }
    let restrict = |p: &Polynomial| p.kill_vars(&moving).embed(&target, &map);

    let gens1: Vec<Gen1> = x
        .gens1()
        .iter()
        .filter(|g| h.fixes(&g.var.weight))
        .map(|g| Gen1 {
            var: g.var.clone(),
            differential: restrict(&g.differential),
        })
        .collect();
    let gens2: Vec<Gen2> = x
        .gens2()
        .iter()
        .filter(|g| h.fixes(&g.var.weight))
        .map(|g| Gen2 {
            var: g.var.clone(),
            differential: g
                .differential
                .iter()
                .filter(|(t, _)| gens1.iter().any(|w| &w.var.name == *t))
                .map(|(t, c)| (t.clone(), restrict(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        })
        .collect();
    let excluded = x.excluded().map(&target, restrict);
    Ok(GradedCdga::new(x.torus_rank(), ring_vars, gens1, gens2).with_excluded(excluded))
}
