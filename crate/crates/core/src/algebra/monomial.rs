use std::cmp::Ordering;

/// Exponent vector over the variables of a ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| b.checked_sub(*a))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i)
    }
}

/// Term orders on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Graded reverse lex on the first `block` variables of the precedence,
    /// tie-broken by graded reverse lex on the rest. An elimination order for
    /// the first block.
    Elimination { block: usize },
}

/// A monomial order together with a variable precedence. `precedence[0]` is
/// the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::GrevLex,
            precedence: (0..nvars).collect(),
        }
    }

    /// Eliminates `vars` (ring indices); remaining variables keep their
    /// declared order.
    pub fn elimination(nvars: usize, vars: &[usize]) -> Self {
        let mut precedence: Vec<usize> = vars.to_vec();
        precedence.extend((0..nvars).filter(|i| !vars.contains(i)));
        MonomialOrder {
            kind: OrderKind::Elimination { block: vars.len() },
            precedence,
        }
    }

    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Self {
        MonomialOrder { kind, precedence }
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    /// Integer key whose lexicographic order is this monomial order. The map
    /// is linear and injective, so `key(a*b) = key(a) + key(b)`.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = m.exponents();
        let grevlex = |vars: &[usize], out: &mut Vec<i64>| {
            out.push(vars.iter().map(|&i| e[i] as i64).sum());
            out.extend(vars.iter().rev().map(|&i| -(e[i] as i64)));
        };
        let mut out = Vec::with_capacity(e.len() + 2);
        match self.kind {
            OrderKind::Lex => out.extend(self.precedence.iter().map(|&i| e[i] as i64)),
            OrderKind::GrevLex => grevlex(&self.precedence, &mut out),
            OrderKind::Elimination { block } => {
                grevlex(&self.precedence[..block], &mut out);
                grevlex(&self.precedence[block..], &mut out);
            }
        }
        out
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}
