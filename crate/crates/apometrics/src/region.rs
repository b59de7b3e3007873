//! A small CSG region algebra over Euclidean primitives.
//!
//! Membership is pure and total for finite query points. `Difference(A, B)`
//! removes the *closure* of `B`: the subtrahend is evaluated with non-strict
//! inequalities at the primitive leaves.

use crate::point::Point;
use serde_json::json;
use std::fmt;
use std::sync::Arc;

type Predicate = Arc<dyn Fn(&Point) -> bool + Send + Sync>;
/// Maps a polar angle in [0, π] to a boundary point (2D regions only).
type PolarBoundary = Arc<dyn Fn(f64) -> Option<Point> + Send + Sync>;

/// An implicitly defined region: a membership predicate plus a non-strict
/// variant used when the region appears under a closure, an optional
/// bounding ball, and an optional 2D polar boundary sampler.
pub struct ImplicitRegion {
    pub name: String,
    pub params: serde_json::Value,
    member: Predicate,
    member_closed: Predicate,
    pub bounding_ball: Option<(Point, f64)>,
    pub polar_boundary: Option<PolarBoundary>,
}

impl fmt::Debug for ImplicitRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ImplicitRegion")
            .field("name", &self.name)
            .finish()
    }
}

/// A CSG tree over open Euclidean primitives.
#[derive(Clone, Debug)]
pub enum Region {
    FullSpace,
    EmptySet,
    OpenBall {
        center: Point,
        radius: f64,
    },
    /// `{z : z·normal < offset}` with `|normal| = 1`.
    OpenHalfSpace {
        normal: Point,
        offset: f64,
    },
    ComplementOfClosedBall {
        center: Point,
        radius: f64,
    },
    Implicit(Arc<ImplicitRegion>),
    Intersection(Vec<Region>),
    Union(Vec<Region>),
    Difference(Box<Region>, Box<Region>),
}

/// Axis-aligned bounding box with one extent per coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct Aabb {
    pub min: Point,
    pub max: Point,
}

impl Aabb {
    pub fn new(min: Point, max: Point) -> Self {
        assert_eq!(min.dim(), max.dim());
        Aabb { min, max }
    }

    pub fn dim(&self) -> usize {
        self.min.dim()
    }

    pub fn center(&self) -> Point {
        self.min.lerp(&self.max, 0.5)
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.coords()
            .iter()
            .enumerate()
            .all(|(i, &c)| c >= self.min.0[i] && c <= self.max.0[i])
    }

    /// Scales all extents about the center by `factor`.
    pub fn inflate(&self, factor: f64) -> Aabb {
        let c = self.center();
        Aabb {
            min: c.add(&self.min.sub(&c).scale(factor)),
            max: c.add(&self.max.sub(&c).scale(factor)),
        }
    }

    /// Expands the shorter sides so every extent equals the longest one.
    pub fn squarify(&self) -> Aabb {
        let c = self.center();
        let half = self
            .max
            .sub(&self.min)
            .coords()
            .iter()
            .cloned()
            .fold(0.0_f64, f64::max)
            / 2.0;
        let n = self.dim();
        Aabb {
            min: c.sub(&Point(vec![half; n])),
            max: c.add(&Point(vec![half; n])),
        }
    }

    pub fn include_point(&mut self, p: &Point) {
        for i in 0..self.dim() {
            self.min.0[i] = self.min.0[i].min(p.0[i]);
            self.max.0[i] = self.max.0[i].max(p.0[i]);
        }
    }

    pub fn include_ball(&mut self, center: &Point, radius: f64) {
        for i in 0..self.dim() {
            self.min.0[i] = self.min.0[i].min(center.0[i] - radius);
            self.max.0[i] = self.max.0[i].max(center.0[i] + radius);
        }
    }

    pub fn from_balls(balls: &[(Point, f64)]) -> Option<Aabb> {
        let first = balls.first()?;
        let mut b = Aabb {
            min: first.0.clone(),
            max: first.0.clone(),
        };
        for (c, r) in balls {
            b.include_ball(c, *r);
        }
        Some(b)
    }

    pub fn sample_uniform(&self, rng: &mut rand_chacha::ChaCha8Rng) -> Point {
        use rand::Rng;
        Point(
            (0..self.dim())
                .map(|i| rng.gen_range(self.min.0[i]..=self.max.0[i]))
                .collect(),
        )
    }
}

impl Region {
    pub fn open_ball(center: Point, radius: f64) -> Region {
        assert!(radius > 0.0, "ball radius must be positive");
        Region::OpenBall { center, radius }
    }

    /// `{z : z·normal < offset}`; the normal is renormalized.
    pub fn half_space(normal: Point, offset: f64) -> Region {
        let n = normal.norm();
        assert!(n > 0.0, "half-space normal must be nonzero");
        Region::OpenHalfSpace {
            normal: normal.scale(1.0 / n),
            offset: offset / n,
        }
    }

    pub fn complement_of_closed_ball(center: Point, radius: f64) -> Region {
        assert!(radius > 0.0, "ball radius must be positive");
        Region::ComplementOfClosedBall { center, radius }
    }

    pub fn implicit(
        name: &str,
        params: serde_json::Value,
        member: Predicate,
        member_closed: Predicate,
        bounding_ball: Option<(Point, f64)>,
        polar_boundary: Option<PolarBoundary>,
    ) -> Region {
        Region::Implicit(Arc::new(ImplicitRegion {
            name: name.to_string(),
            params,
            member,
            member_closed,
            bounding_ball,
            polar_boundary,
        }))
    }

    pub fn intersection(children: Vec<Region>) -> Region {
        if children.is_empty() {
            Region::FullSpace
        } else {
            Region::Intersection(children)
        }
    }

    pub fn union(children: Vec<Region>) -> Region {
        if children.is_empty() {
            Region::EmptySet
        } else {
            Region::Union(children)
        }
    }

    pub fn difference(left: Region, right: Region) -> Region {
        Region::Difference(Box::new(left), Box::new(right))
    }

    /// Strict membership.
    pub fn contains(&self, z: &Point) -> bool {
        match self {
            Region::FullSpace => true,
            Region::EmptySet => false,
            Region::OpenBall { center, radius } => z.dist(center) < *radius,
            Region::OpenHalfSpace { normal, offset } => z.dot(normal) < *offset,
            Region::ComplementOfClosedBall { center, radius } => z.dist(center) > *radius,
            Region::Implicit(im) => (im.member)(z),
            Region::Intersection(cs) => cs.iter().all(|c| c.contains(z)),
            Region::Union(cs) => cs.iter().any(|c| c.contains(z)),
            Region::Difference(a, b) => a.contains(z) && !b.contains_closed(z),
        }
    }

    /// Non-strict membership: primitive inequalities become `<=`/`>=`. On
    /// nodes it is applied compositionally, which over-approximates the true
    /// closure on intersections and differences.
    pub fn contains_closed(&self, z: &Point) -> bool {
        match self {
            Region::FullSpace => true,
            Region::EmptySet => false,
            Region::OpenBall { center, radius } => z.dist(center) <= *radius,
            Region::OpenHalfSpace { normal, offset } => z.dot(normal) <= *offset,
            Region::ComplementOfClosedBall { center, radius } => z.dist(center) >= *radius,
            Region::Implicit(im) => (im.member_closed)(z),
            Region::Intersection(cs) => cs.iter().all(|c| c.contains_closed(z)),
            Region::Union(cs) => cs.iter().any(|c| c.contains_closed(z)),
            Region::Difference(a, b) => a.contains_closed(z) && !b.contains(z),
        }
    }

    /// Collects the balls carried by primitive leaves (including subtrahends
    /// and implicit bounding hints). Half-spaces contribute nothing.
    pub fn collect_balls(&self, out: &mut Vec<(Point, f64)>) {
        match self {
            Region::OpenBall { center, radius }
            | Region::ComplementOfClosedBall { center, radius } => {
                out.push((center.clone(), *radius));
            }
            Region::Implicit(im) => {
                if let Some((c, r)) = &im.bounding_ball {
                    out.push((c.clone(), *r));
                }
            }
            Region::Intersection(cs) | Region::Union(cs) => {
                for c in cs {
                    c.collect_balls(out);
                }
            }
            Region::Difference(a, b) => {
                a.collect_balls(out);
                b.collect_balls(out);
            }
            Region::OpenHalfSpace { .. } | Region::FullSpace | Region::EmptySet => {}
        }
    }

    /// Bounding box of all primitive balls scaled by `margin` about its
    /// center, or `None` when the region carries no balls at all.
    pub fn suggested_box(&self, margin: f64) -> Option<Aabb> {
        let mut balls = Vec::new();
        self.collect_balls(&mut balls);
        Aabb::from_balls(&balls).map(|b| b.inflate(margin))
    }

    /// Dimension inferred from the leaves, if any leaf carries one.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Region::OpenBall { center, .. } | Region::ComplementOfClosedBall { center, .. } => {
                Some(center.dim())
            }
            Region::OpenHalfSpace { normal, .. } => Some(normal.dim()),
            Region::Implicit(im) => im.bounding_ball.as_ref().map(|(c, _)| c.dim()),
            Region::Intersection(cs) | Region::Union(cs) => cs.iter().find_map(|c| c.dim()),
            Region::Difference(a, b) => a.dim().or_else(|| b.dim()),
            Region::FullSpace | Region::EmptySet => None,
        }
    }

    /// Serializes the tree to the JSON region schema.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Region::FullSpace => json!({"type": "full_space"}),
            Region::EmptySet => json!({"type": "empty_set"}),
            Region::OpenBall { center, radius } => json!({
                "type": "open_ball", "center": center.coords(), "radius": radius
            }),
            Region::OpenHalfSpace { normal, offset } => json!({
                "type": "open_half_space", "normal": normal.coords(), "offset": offset
            }),
            Region::ComplementOfClosedBall { center, radius } => json!({
                "type": "complement_of_closed_ball",
                "center": center.coords(), "radius": radius
            }),
            Region::Implicit(im) => json!({
                "type": "implicit", "name": im.name, "params": im.params
            }),
            Region::Intersection(cs) => json!({
                "type": "intersection",
                "children": cs.iter().map(|c| c.to_json()).collect::<Vec<_>>()
            }),
            Region::Union(cs) => json!({
                "type": "union",
                "children": cs.iter().map(|c| c.to_json()).collect::<Vec<_>>()
            }),
            Region::Difference(a, b) => json!({
                "type": "difference", "left": a.to_json(), "right": b.to_json()
            }),
        }
    }
}
