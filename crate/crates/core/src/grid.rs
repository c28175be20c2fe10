//! Exact points of Q(ω), ω = exp(iπ/3).
//!
//! A point `x + y·√3·i` is stored as the rational pair `(x, y)`. The
//! Eisenstein integers are exactly the points with `x + y` and `x - y` both
//! integral; in the basis `{1, ω}` such a point is `a + b·ω` with `b = 2y`,
//! `a = x - y`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A unit direction `ω^e`, `e ∈ Z/6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Direction(u8);

impl Direction {
    pub fn new(e: i64) -> Self {
        Direction(e.rem_euclid(6) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn rotate(self, k: i64) -> Self {
        Direction::new(self.0 as i64 + k)
    }

    /// `ω^e` as a grid point.
    pub fn unit(self) -> GridPoint {
        let (x2, y2) = match self.0 {
            0 => (2, 0),
            1 => (1, 1),
            2 => (-1, 1),
            3 => (-2, 0),
            4 => (-1, -1),
            _ => (1, -1),
        };
        GridPoint::new(q_frac(x2, 2), q_frac(y2, 2))
    }

    /// `2·Re(ω^e)`.
    pub fn twice_re(self) -> i64 {
        [2, 1, -1, -2, -1, 1][self.0 as usize]
    }

    /// `(2/√3)·Im(ω^e)`.
    pub fn scaled_im(self) -> i64 {
        [0, 1, 1, 0, -1, -1][self.0 as usize]
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω^{}", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: Q,
    /// Coefficient of `√3·i`.
    pub y: Q,
}

impl GridPoint {
    pub fn new(x: Q, y: Q) -> Self {
        GridPoint { x, y }
    }

    pub fn origin() -> Self {
        GridPoint::new(Q::zero(), Q::zero())
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        GridPoint::new(q(x), q(y))
    }

    /// Eisenstein integer `a + b·ω`.
    pub fn from_eisenstein(a: &BigInt, b: &BigInt) -> Self {
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let bq = BigRational::from_integer(b.clone());
        GridPoint::new(BigRational::from_integer(a.clone()) + &bq * &half, bq * half)
    }

    pub fn scale(&self, s: &Q) -> Self {
        GridPoint::new(&self.x * s, &self.y * s)
    }

    /// Multiplication by `ω`.
    pub fn times_omega(&self) -> Self {
        let three = q(3);
        let half = q_frac(1, 2);
        GridPoint::new((&self.x - &self.y * &three) * &half, (&self.x + &self.y) * half)
    }

    pub fn rotate(&self, d: Direction) -> Self {
        let mut p = self.clone();
        for _ in 0..d.exponent() {
            p = p.times_omega();
        }
        p
    }

    pub fn conj(&self) -> Self {
        GridPoint::new(self.x.clone(), -self.y.clone())
    }

    /// `(a, b)` with `self = a + b·ω`, when `self` is an Eisenstein integer.
    pub fn eisenstein(&self) -> Option<(BigInt, BigInt)> {
        let s = &self.x + &self.y;
        let d = &self.x - &self.y;
        if !s.is_integer() || !d.is_integer() {
            return None;
        }
        let b = (&self.y + &self.y).to_integer();
        let a = d.to_integer();
        Some((a, b))
    }

    pub fn is_eisenstein(&self) -> bool {
        self.eisenstein().is_some()
    }

    /// Residue of an Eisenstein integer modulo 2, as an index in `0..4`.
    pub fn residue_class(&self) -> Option<u8> {
        let (a, b) = self.eisenstein()?;
        let two = BigInt::from(2);
        let ra = a.mod_floor(&two);
        let rb = b.mod_floor(&two);
        Some(2 * u8::from(!ra.is_zero()) + u8::from(!rb.is_zero()))
    }

    /// `x1·y2 - x2·y1`. The true cross product `Im(conj(self)·other)` is this
    /// value times `√3`.
    pub fn cross(&self, other: &GridPoint) -> Q {
        &self.x * &other.y - &other.x * &self.y
    }

    /// Squared modulus `x² + 3y²`.
    pub fn norm(&self) -> Q {
        &self.x * &self.x + q(3) * &self.y * &self.y
    }

    pub fn to_f64(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        (
            self.x.to_f64().unwrap_or(f64::NAN),
            self.y.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt(),
        )
    }
}

impl Add for &GridPoint {
    type Output = GridPoint;
    fn add(self, o: &GridPoint) -> GridPoint {
        GridPoint::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl Sub for &GridPoint {
    type Output = GridPoint;
    fn sub(self, o: &GridPoint) -> GridPoint {
        GridPoint::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Neg for &GridPoint {
    type Output = GridPoint;
    fn neg(self) -> GridPoint {
        GridPoint::new(-self.x.clone(), -self.y.clone())
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}·√3i)", self.x, self.y)
    }
}

impl Serialize for GridPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("GridPoint", 2)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("ys3", &self.y.to_string())?;
        st.end()
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(v: &Q) -> i8 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_powers() {
        let mut p = GridPoint::from_ints(1, 0);
        for e in 0..6 {
            assert_eq!(p, Direction::new(e).unit());
            p = p.times_omega();
        }
        assert_eq!(p, GridPoint::from_ints(1, 0));
    }

    #[test]
    fn eisenstein_round_trip() {
        for a in -3..4 {
            for b in -3..4 {
                let p = GridPoint::from_eisenstein(&BigInt::from(a), &BigInt::from(b));
                assert_eq!(p.eisenstein(), Some((BigInt::from(a), BigInt::from(b))));
            }
        }
        assert!(!GridPoint::new(q_frac(1, 2), q(0)).is_eisenstein());
    }

    #[test]
    fn unit_vectors_have_norm_one() {
        for e in 0..6 {
            assert_eq!(Direction::new(e).unit().norm(), q(1));
        }
    }
}
