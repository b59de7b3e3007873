//! Points of extended Euclidean space R^n ∪ {∞} and small vector helpers.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A point of n-dimensional Euclidean space, n >= 1. Coordinates are
/// dimensionless Euclidean units and must be finite.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(pub Vec<f64>);

/// Shorthand for a 2D point.
pub fn pt2(x: f64, y: f64) -> Point {
    Point(vec![x, y])
}

impl Point {
    pub fn new(coords: Vec<f64>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(vec![0.0; dim])
    }

    /// The i-th standard basis vector (0-indexed) in the given dimension.
    pub fn axis(dim: usize, i: usize) -> Self {
        let mut c = vec![0.0; dim];
        c[i] = 1.0;
        Point(c)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn is_finite_coords(&self) -> bool {
        !self.0.is_empty() && self.0.iter().all(|c| c.is_finite())
    }

    pub fn dot(&self, other: &Point) -> f64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.dot(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist(&self, other: &Point) -> f64 {
        self.sub(other).norm()
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn add(&self, other: &Point) -> Point {
        Point(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: f64) -> Point {
        Point(self.0.iter().map(|a| a * k).collect())
    }

    /// Point on the segment from `self` to `other` at parameter `t` in [0, 1].
    pub fn lerp(&self, other: &Point, t: f64) -> Point {
        Point(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + t * (b - a))
                .collect(),
        )
    }

    /// Unit vector in the direction of `self`, or `None` for the zero vector.
    pub fn unit(&self) -> Option<Point> {
        let n = self.norm();
        if n > 0.0 {
            Some(self.scale(1.0 / n))
        } else {
            None
        }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of R^n or the point at infinity; the universal argument type for
/// cross-ratios.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ExtendedPoint {
    Finite(Point),
    Infinity,
}

impl ExtendedPoint {
    pub fn finite(coords: Vec<f64>) -> Self {
        ExtendedPoint::Finite(Point(coords))
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, ExtendedPoint::Infinity)
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            ExtendedPoint::Finite(p) => Some(p.dim()),
            ExtendedPoint::Infinity => None,
        }
    }

    pub fn as_finite(&self) -> Option<&Point> {
        match self {
            ExtendedPoint::Finite(p) => Some(p),
            ExtendedPoint::Infinity => None,
        }
    }
}

impl From<Point> for ExtendedPoint {
    fn from(p: Point) -> Self {
        ExtendedPoint::Finite(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_vector_ops() {
        let a = pt2(1.0, 2.0);
        let b = pt2(4.0, 6.0);
        assert_eq!(a.dist(&b), 5.0);
        assert_eq!(a.add(&b), pt2(5.0, 8.0));
        assert_eq!(b.sub(&a), pt2(3.0, 4.0));
        assert_eq!(a.lerp(&b, 0.5), pt2(2.5, 4.0));
        assert_eq!(Point::axis(3, 2), Point(vec![0.0, 0.0, 1.0]));
    }

    #[test]
    fn unit_of_zero_is_none() {
        assert!(Point::zero(2).unit().is_none());
        let u = pt2(0.0, 3.0).unit().unwrap();
        assert!((u.norm() - 1.0).abs() < 1e-15);
    }
}
