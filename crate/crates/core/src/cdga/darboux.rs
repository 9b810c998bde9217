use std::collections::BTreeMap;

use super::{Gen1, Gen2, GradedCdga, GradedVariable, Weight};
use crate::algebra::{MonomialOrder, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::io::printer::format_monomial;

/// Darboux-shape presentation of the derived critical locus of a torus
/// invariant function `f`: one degree-1 generator per partial derivative and
/// one degree-2 generator per torus factor, recording the infinitesimal
/// action.
pub fn from_invariant_function(vars: &[GradedVariable], f: &Polynomial) -> Result<GradedCdga> {
    let ring = GradedCdga::ring_of(vars);
    let f = f.embed_by_name(&ring)?;
    let k = vars.first().map_or(0, |v| v.weight.rank());
    let probe = GradedCdga::new(k, vars.to_vec(), vec![], vec![]);
    for (m, _) in f.sorted_terms(&MonomialOrder::grevlex(ring.len())) {
        let w = probe.monomial_weight(m);
        if !w.is_zero() {
            return Err(Error::NotInvariant {
                monomial: format_monomial(m, &ring),
                weight: w.0,
            });
        }
    }

    let names: Vec<String> = vars.iter().map(|v| v.name.clone()).collect();
    let mut taken = names.clone();
    let mut gens1 = Vec::with_capacity(vars.len());
    for (i, v) in vars.iter().enumerate() {
        let name = ring.fresh_name(&format!("w{}", i + 1), &taken);
        taken.push(name.clone());
        gens1.push(Gen1 {
            var: GradedVariable::new(name, 1, v.weight.neg()),
            differential: f.derivative(i),
        });
    }
    let mut gens2 = Vec::with_capacity(k);
    for a in 0..k {
        let name = ring.fresh_name(&format!("e{}", a + 1), &taken);
        taken.push(name.clone());
        let mut differential = BTreeMap::new();
        for (i, v) in vars.iter().enumerate() {
            let wa = v.weight.0[a];
            if wa != 0 {
                let c = Polynomial::var(&ring, i).scale(&Rational::from_integer(wa.into()));
                differential.insert(gens1[i].var.name.clone(), c);
            }
        }
        gens2.push(Gen2 {
            var: GradedVariable::new(name, 2, Weight::zero(k)),
            differential,
        });
    }
    Ok(GradedCdga::new(k, vars.to_vec(), gens1, gens2))
}
