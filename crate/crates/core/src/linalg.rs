//! Small exact linear algebra over the rationals, used for weight lattices and
//! generic ranks.

use num_traits::{Signed, Zero};

use crate::algebra::Rational;

/// Row-reduces in place and returns the pivot columns.
pub fn row_reduce(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    row_reduce(&mut m).len()
}

pub fn to_rational(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    rank(&to_rational(rows))
}

/// Basis of the rational kernel `{h : rows · h = 0}` in `ncols` dimensions,
/// scaled to primitive integer vectors, in reduced echelon shape so equal
/// kernels give equal bases.
pub fn integer_kernel(rows: &[Vec<i64>], ncols: usize) -> Vec<Vec<i64>> {
    let mut m = to_rational(rows);
    let pivots = row_reduce(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::from_integer(1.into());
            for (row, &p) in m.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    canonical_span(&mut basis)
}

/// Canonical primitive-integer basis of the span of `vectors`.
pub fn canonical_integer_span(vectors: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let mut m = to_rational(vectors);
    canonical_span(&mut m)
}

fn canonical_span(m: &mut Vec<Vec<Rational>>) -> Vec<Vec<i64>> {
    row_reduce(m);
    m.iter().map(|r| primitive_integer(r)).collect()
}

fn primitive_integer(v: &[Rational]) -> Vec<i64> {
    use num_integer::Integer;
    let mut l = num_bigint::BigInt::from(1);
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<num_bigint::BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = num_bigint::BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    let sign_flip = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            let y = if sign_flip { -y } else { y };
            i64::try_from(y).expect("lattice entry fits in i64")
        })
        .collect()
}
