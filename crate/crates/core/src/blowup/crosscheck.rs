use crate::algebra::Polynomial;
use crate::cdga::{classical_truncation, GradedCdga, SubtorusBasis};

use super::charts::{chart_images, Chart};

/// Compares the chart's classical truncation with the intrinsic blow-up of the
/// parent's truncation: `φ(f)` for weight-fixed generators and `φ(f)/ξ` for
/// moving ones. Returns `false` if a moving generator is not divisible by `ξ`.
pub fn crosscheck_truncation(chart: &Chart, parent: &GradedCdga, h: &SubtorusBasis) -> bool {
    let ring = chart.cdga.ring();
    let images = chart_images(parent, chart);
    let xi = chart.exceptional_poly();
    let mut gens = Vec::new();
    for f in classical_truncation(parent).generators() {
        let pulled = f.substitute(&images, ring);
        if polynomial_is_fixed(parent, f, h) {
            gens.push(pulled);
        } else {
            match pulled.exact_divide(&xi) {
                Ok(q) => gens.push(q),
                Err(_) => return false,
            }
        }
    }
    let intrinsic = crate::algebra::Ideal::new(ring, gens);
    intrinsic.equals(&classical_truncation(&chart.cdga))
}

/// A weight-homogeneous polynomial is fixed when any one of its monomials is.
fn polynomial_is_fixed(x: &GradedCdga, f: &Polynomial, h: &SubtorusBasis) -> bool {
    f.terms()
        .next()
        .map_or(true, |(m, _)| h.fixes(&x.monomial_weight(m)))
}
