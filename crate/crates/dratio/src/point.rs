//! Projective rational points in canonical integer coordinates, and the
//! exhaustive enumeration of affine points below a height bound.

use std::fmt;

use num::{BigInt, Integer, One, Signed, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointError {
    #[error("the zero vector is not a projective point")]
    ZeroVector,
}

/// A point of Pⁿ(Q) stored as coprime integers with the first nonzero
/// coordinate positive, so structural equality is equality of points.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: Vec<BigInt>,
}

impl ProjPoint {
    pub fn new(coords: Vec<BigInt>) -> Result<Self, PointError> {
        if coords.iter().all(|c| c.is_zero()) {
            return Err(PointError::ZeroVector);
        }
        let mut g = BigInt::zero();
        for c in &coords {
            g = g.gcd(c);
        }
        let first_nonzero_negative = coords
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if first_nonzero_negative {
            g = -g;
        }
        let coords = coords.into_iter().map(|c| c / &g).collect();
        Ok(ProjPoint { coords })
    }

    pub fn from_rationals(coords: &[Rational]) -> Result<Self, PointError> {
        let mut lcm = BigInt::one();
        for c in coords {
            lcm = lcm.lcm(c.denom());
        }
        let ints = coords
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        Self::new(ints)
    }

    /// Affine point `(x_1, ..., x_n)` as `[x_1 : ... : x_n : 1]` cleared to
    /// canonical integers.
    pub fn from_affine(coords: &[Rational]) -> Self {
        let mut ext = coords.to_vec();
        ext.push(Rational::one());
        Self::from_rationals(&ext).expect("affine point has a nonzero coordinate")
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Affine coordinates in the chart where the last coordinate is
    /// nonzero; `None` on the hyperplane at infinity.
    pub fn to_affine(&self) -> Option<Vec<Rational>> {
        let last = self.coords.last()?;
        if last.is_zero() {
            return None;
        }
        Some(
            self.coords[..self.coords.len() - 1]
                .iter()
                .map(|c| Rational::new(c.clone(), last.clone()))
                .collect(),
        )
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords.last().map(|c| c.is_zero()).unwrap_or(false)
    }

    pub fn max_abs(&self) -> BigInt {
        self.coords
            .iter()
            .map(|c| c.abs())
            .max()
            .expect("nonempty coordinates")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Iterator over every affine point of Aⁿ(Q) whose canonical projective
/// coordinates satisfy `max |c_i| <= bound`: integer tuples
/// `(a_1, ..., a_n, c)` with `c >= 1` and overall gcd 1, each point exactly
/// once.
pub fn affine_points_up_to(dim: usize, bound: u64) -> AffinePointIter {
    assert!(dim >= 1 && bound >= 1);
    let mut tuple = vec![-(bound as i64); dim];
    tuple.push(1);
    AffinePointIter {
        bound: bound as i64,
        tuple,
        done: false,
    }
}

pub struct AffinePointIter {
    bound: i64,
    tuple: Vec<i64>,
    done: bool,
}

impl AffinePointIter {
    fn advance(&mut self) {
        // Odometer: numerators run over [-bound, bound], denominator over
        // [1, bound].
        for i in 0..self.tuple.len() {
            let lo = if i == self.tuple.len() - 1 { 1 } else { -self.bound };
            if self.tuple[i] < self.bound {
                self.tuple[i] += 1;
                return;
            }
            self.tuple[i] = lo;
        }
        self.done = true;
    }
}

impl Iterator for AffinePointIter {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if self.done {
                return None;
            }
            let tuple = self.tuple.clone();
            self.advance();
            let mut g: i64 = 0;
            for &v in &tuple {
                g = gcd_i64(g, v);
            }
            if g == 1 {
                return Some(tuple);
            }
        }
    }
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn canonical_form_reduces_and_fixes_sign() {
        let p = ProjPoint::new(vec![big(-4), big(6), big(-2)]).unwrap();
        assert_eq!(p.coords(), &[big(2), big(-3), big(1)]);
        let q = ProjPoint::new(vec![big(0), big(-5), big(0)]).unwrap();
        assert_eq!(q.coords(), &[big(0), big(1), big(0)]);
    }

    #[test]
    fn scaling_gives_equal_points() {
        let p = ProjPoint::new(vec![big(2), big(4), big(1)]).unwrap();
        let q = ProjPoint::new(vec![big(6), big(12), big(3)]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn affine_clears_denominators() {
        let p = ProjPoint::from_affine(&[
            Rational::new(big(3), big(5)),
            Rational::from_integer(big(2)),
        ]);
        assert_eq!(p.coords(), &[big(3), big(10), big(5)]);
    }

    #[test]
    fn enumeration_counts_each_point_once() {
        // Height bound 2 in A^1: fractions a/c with max(|a|, c) <= 2:
        // 0, 1, -1, 2, -2, 1/2, -1/2.
        let pts: Vec<Vec<i64>> = affine_points_up_to(1, 2).collect();
        assert_eq!(pts.len(), 7);
        let zero = ProjPoint::new(vec![big(0), big(1)]).unwrap();
        assert!(pts
            .iter()
            .map(|t| ProjPoint::new(t.iter().map(|&v| big(v)).collect()).unwrap())
            .any(|p| p == zero));
    }

    #[test]
    fn enumeration_respects_bound() {
        for t in affine_points_up_to(2, 3) {
            assert!(t.iter().all(|&v| v.abs() <= 3));
            assert!(*t.last().unwrap() >= 1);
        }
    }
}
