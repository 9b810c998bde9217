use std::collections::BTreeSet;

use serde::Serialize;

use super::{GradedCdga, Weight};
use crate::algebra::{MonomialOrder, Polynomial};
use crate::io::printer::{format_monomial, format_polynomial};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    NameCollision { name: String },
    WeightLength { name: String, expected: usize, found: usize },
    WrongDegree { name: String, declared: u8, expected: u8 },
    WeightInhomogeneous { generator: String, term: String, expected: Weight, found: Weight },
    UnknownTarget { generator: String, target: String },
    NonzeroDSquared { generator: String, value: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NameCollision { name } => write!(f, "name `{name}` is used more than once"),
            Violation::WeightLength { name, expected, found } => {
                write!(f, "`{name}` has a weight of length {found}, expected {expected}")
            }
            Violation::WrongDegree { name, declared, expected } => {
                write!(f, "`{name}` is declared in degree {declared} but listed in degree {expected}")
            }
            Violation::WeightInhomogeneous { generator, term, expected, found } => write!(
                f,
                "differential of `{generator}` is not weight-homogeneous: term {term} has weight {found}, expected {expected}"
            ),
            Violation::UnknownTarget { generator, target } => {
                write!(f, "differential of `{generator}` refers to unknown degree-1 generator `{target}`")
            }
            Violation::NonzeroDSquared { generator, value } => {
                write!(f, "d^2 of `{generator}` is {value}, not zero")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_presentation(x: &GradedCdga) -> ValidationReport {
    let mut violations = Vec::new();
    let k = x.torus_rank();
    let order = MonomialOrder::grevlex(x.ring().len());

    let mut seen = BTreeSet::new();
    let all = x
        .ring_vars()
        .iter()
        .map(|v| (v, 0u8))
        .chain(x.gens1().iter().map(|g| (&g.var, 1)))
        .chain(x.gens2().iter().map(|g| (&g.var, 2)));
    for (v, deg) in all {
        if !seen.insert(v.name.clone()) {
            violations.push(Violation::NameCollision { name: v.name.clone() });
        }
        if v.weight.rank() != k {
            violations.push(Violation::WeightLength {
                name: v.name.clone(),
                expected: k,
                found: v.weight.rank(),
            });
        }
        if v.degree != deg {
            violations.push(Violation::WrongDegree {
                name: v.name.clone(),
                declared: v.degree,
                expected: deg,
            });
        }
    }
    if !violations.is_empty() {
        // weights of the wrong length make the remaining checks meaningless
        return ValidationReport { violations };
    }

    let check_homogeneous = |generator: &str, p: &Polynomial, expected: &Weight, out: &mut Vec<Violation>| {
        for (m, _) in p.sorted_terms(&order) {
            let found = x.monomial_weight(m);
            if &found != expected {
                out.push(Violation::WeightInhomogeneous {
                    generator: generator.to_string(),
                    term: format_monomial(m, x.ring()),
                    expected: expected.clone(),
                    found,
                });
                break;
            }
        }
    };

    for g in x.gens1() {
        check_homogeneous(&g.var.name, &g.differential, &g.var.weight, &mut violations);
    }
    for e in x.gens2() {
        let mut d2 = Polynomial::zero(x.ring());
        for (target, coeff) in &e.differential {
            let Some(w) = x.gen1(target) else {
                violations.push(Violation::UnknownTarget {
                    generator: e.var.name.clone(),
                    target: target.clone(),
                });
                continue;
            };
            let expected = e.var.weight.sub(&w.var.weight);
            check_homogeneous(&e.var.name, coeff, &expected, &mut violations);
            d2 = &d2 + &(coeff * &w.differential);
        }
        if !d2.is_zero() {
            violations.push(Violation::NonzeroDSquared {
                generator: e.var.name.clone(),
                value: format_polynomial(&d2, &order),
            });
        }
    }
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdga::{from_invariant_function, Gen1, Gen2, GradedVariable};
    use std::collections::BTreeMap;

    fn xy_vars() -> Vec<GradedVariable> {
        vec![
            GradedVariable::new("x", 0, Weight(vec![1])),
            GradedVariable::new("y", 0, Weight(vec![-1])),
        ]
    }

    #[test]
    fn darboux_passes() {
        let vars = xy_vars();
        let r = GradedCdga::ring_of(&vars);
        let f = &Polynomial::var(&r, 0).pow(2) * &Polynomial::var(&r, 1).pow(2);
        let d = from_invariant_function(&vars, &f).unwrap();
        assert!(validate_presentation(&d).passed());
    }

    #[test]
    fn inhomogeneous_differential_fails() {
        let vars = xy_vars();
        let r = GradedCdga::ring_of(&vars);
        let x = GradedCdga::new(
            1,
            vars,
            vec![Gen1 {
                var: GradedVariable::new("w", 1, Weight(vec![0])),
                differential: Polynomial::var(&r, 0),
            }],
            vec![],
        );
        let rep = validate_presentation(&x);
        assert!(matches!(rep.violations[..], [Violation::WeightInhomogeneous { .. }]));
    }

    #[test]
    fn nonzero_d_squared_fails() {
        let vars = vec![
            GradedVariable::new("x", 0, Weight(vec![0])),
            GradedVariable::new("y", 0, Weight(vec![0])),
        ];
        let r = GradedCdga::ring_of(&vars);
        let x = GradedCdga::new(
            1,
            vars,
            vec![Gen1 {
                var: GradedVariable::new("w1", 1, Weight(vec![0])),
                differential: Polynomial::var(&r, 1),
            }],
            vec![Gen2 {
                var: GradedVariable::new("e", 2, Weight(vec![0])),
                differential: BTreeMap::from([("w1".to_string(), Polynomial::var(&r, 0))]),
            }],
        );
        let rep = validate_presentation(&x);
        assert_eq!(
            rep.violations,
            vec![Violation::NonzeroDSquared { generator: "e".into(), value: "x*y".into() }]
        );
    }

    #[test]
    fn name_collisions_are_reported() {
        let vars = xy_vars();
        let r = GradedCdga::ring_of(&vars);
        let x = GradedCdga::new(
            1,
            vars,
            vec![Gen1 {
                var: GradedVariable::new("x", 1, Weight(vec![0])),
                differential: Polynomial::zero(&r),
            }],
            vec![],
        );
        assert_eq!(validate_presentation(&x).violations, vec![Violation::NameCollision { name: "x".into() }]);
    }
}
