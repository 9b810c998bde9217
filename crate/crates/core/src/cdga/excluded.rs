use crate::algebra::{Ideal, Polynomial, Ring};

/// Closed locus removed from a chart (the unstable part).
///
/// As an ideal, `Nothing` is written `(0)` and `Everything` is written `(1)`;
/// a proper nonzero ideal `I` removes `V(I)`.
#[derive(Clone, Debug)]
pub enum Excluded {
    Nothing,
    Locus(Ideal),
    Everything,
}

impl Excluded {
    /// Interprets `ideal` as the removed locus `V(ideal)`.
    pub fn vanishing_of(ideal: Ideal) -> Excluded {
        if ideal.is_zero() {
            Excluded::Everything
        } else if ideal.is_unit() {
            Excluded::Nothing
        } else {
            Excluded::Locus(ideal)
        }
    }

    /// Reads the ideal convention back: `(0)` nothing, `(1)` everything.
    pub fn from_ideal(ideal: Ideal) -> Excluded {
        if ideal.is_zero() {
            Excluded::Nothing
        } else if ideal.is_unit() {
            Excluded::Everything
        } else {
            Excluded::Locus(ideal)
        }
    }

    pub fn as_ideal(&self, ring: &Ring) -> Ideal {
        match self {
            Excluded::Nothing => Ideal::zero(ring),
            Excluded::Everything => Ideal::unit(ring),
            Excluded::Locus(i) => i.clone(),
        }
    }

    pub fn is_everything(&self) -> bool {
        matches!(self, Excluded::Everything)
    }

    pub fn is_nothing(&self) -> bool {
        matches!(self, Excluded::Nothing)
    }

    /// Preimage under a ring map (total transform).
    pub fn map(&self, target: &Ring, f: impl Fn(&Polynomial) -> Polynomial) -> Excluded {
        match self {
            Excluded::Locus(i) => Excluded::vanishing_of(i.map(target, f)),
            Excluded::Nothing => Excluded::Nothing,
            Excluded::Everything => Excluded::Everything,
        }
    }

    pub fn union(&self, other: &Excluded) -> Excluded {
        match (self, other) {
            (Excluded::Everything, _) | (_, Excluded::Everything) => Excluded::Everything,
            (Excluded::Nothing, o) | (o, Excluded::Nothing) => o.clone(),
            (Excluded::Locus(a), Excluded::Locus(b)) => Excluded::vanishing_of(a.product(b)),
        }
    }

    /// Closure of the part of the locus off `V(f)`.
    pub fn saturate(&self, f: &Polynomial) -> Excluded {
        match self {
            Excluded::Locus(i) => Excluded::vanishing_of(i.saturate(f)),
            other => other.clone(),
        }
    }

    /// Is `point` (given as values of the ring variables) outside the locus?
    pub fn avoids(&self, point: &[crate::algebra::Rational]) -> bool {
        use num_traits::Zero;
        match self {
            Excluded::Nothing => true,
            Excluded::Everything => false,
            Excluded::Locus(i) => i.generators().iter().any(|g| !g.evaluate(point).is_zero()),
        }
    }

    pub fn same_locus(&self, other: &Excluded) -> bool {
        match (self, other) {
            (Excluded::Nothing, Excluded::Nothing) | (Excluded::Everything, Excluded::Everything) => true,
            (Excluded::Locus(a), Excluded::Locus(b)) => a.ring() == b.ring() && a.equals(b),
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conventions_round_trip() {
        let r = Ring::new(&["x", "y"]);
        assert!(Excluded::from_ideal(Ideal::zero(&r)).is_nothing());
        assert!(Excluded::from_ideal(Ideal::unit(&r)).is_everything());
        assert!(Excluded::vanishing_of(Ideal::zero(&r)).is_everything());
        assert!(Excluded::vanishing_of(Ideal::unit(&r)).is_nothing());
        let axis = Excluded::vanishing_of(Ideal::of_vars(&r, &[0]));
        assert!(axis.as_ideal(&r).equals(&Ideal::of_vars(&r, &[0])));
    }

    #[test]
    fn union_is_product() {
        let r = Ring::new(&["x", "y"]);
        let a = Excluded::vanishing_of(Ideal::of_vars(&r, &[0]));
        let b = Excluded::vanishing_of(Ideal::of_vars(&r, &[1]));
        let u = a.union(&b);
        let xy = &Polynomial::var(&r, 0) * &Polynomial::var(&r, 1);
        assert!(u.as_ideal(&r).equals(&Ideal::new(&r, vec![xy])));
        assert!(a.union(&Excluded::Nothing).same_locus(&a));
        assert!(a.union(&Excluded::Everything).is_everything());
    }
}
