//! Exact low-level geometry: cross-ratios with infinity conventions,
//! Apollonian spheres and sublevel sets, and the ice-cream cone hull.

use crate::error::{Error, Result};
use crate::point::{ExtendedPoint, Point};
use crate::region::Region;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

/// The boundary locus of an Apollonian sublevel set: a Euclidean sphere or,
/// in the ratio-1 case, a hyperplane `{z : z·normal = offset}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum SphereOrPlane {
    Sphere { center: Point, radius: f64 },
    Plane { normal: Point, offset: f64 },
}

impl SphereOrPlane {
    /// Deterministically samples `count` points on the locus. Spheres are
    /// sampled along seeded great-circle directions; planes along a line
    /// through the base point spanned by an in-plane direction.
    pub fn sample_points(&self, count: usize, seed: u64) -> Vec<Point> {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        match self {
            SphereOrPlane::Sphere { center, radius } => {
                let n = center.dim();
                (0..count)
                    .map(|k| {
                        let dir = if n == 2 {
                            let theta =
                                2.0 * std::f64::consts::PI * (k as f64 + 0.5) / count as f64;
                            Point(vec![theta.cos(), theta.sin()])
                        } else {
                            random_unit(&mut rng, n)
                        };
                        center.add(&dir.scale(*radius))
                    })
                    .collect()
            }
            SphereOrPlane::Plane { normal, offset } => {
                let n = normal.dim();
                let base = normal.scale(*offset);
                (0..count)
                    .map(|k| {
                        // direction orthogonal to the normal
                        let mut d = if n == 2 {
                            Point(vec![-normal.0[1], normal.0[0]])
                        } else {
                            loop {
                                let v = random_unit(&mut rng, n);
                                let w = v.sub(&normal.scale(v.dot(normal)));
                                if let Some(u) = w.unit() {
                                    break u;
                                }
                            }
                        };
                        let t = 10.0 * ((k as f64 + 0.5) / count as f64 - 0.5);
                        if n == 2 && k % 2 == 1 {
                            d = d.scale(-1.0);
                        }
                        base.add(&d.scale(t))
                    })
                    .collect()
            }
        }
    }
}

fn random_unit(rng: &mut rand_chacha::ChaCha8Rng, dim: usize) -> Point {
    use rand::Rng;
    loop {
        let v = Point(
            (0..dim)
                .map(|_| rng.gen_range(-1.0..1.0))
                .collect::<Vec<f64>>(),
        );
        if v.norm_sq() > 1e-4 {
            return v.unit().unwrap();
        }
    }
}

/// The cross-ratio `|a,b,c,d| = |a−c||b−d| / (|a−b||c−d|)` of four points of
/// extended space. A factor whose pair contains the point at infinity is
/// replaced by its limit: the two distances involving ∞ cancel, so e.g.
/// `|∞,b,c,d| = |b−d|/|c−d|`.
pub fn cross_ratio(
    a: &ExtendedPoint,
    b: &ExtendedPoint,
    c: &ExtendedPoint,
    d: &ExtendedPoint,
) -> Result<f64> {
    let args = [a, b, c, d];
    let infinities = args.iter().filter(|p| p.is_infinity()).count();
    if infinities > 1 {
        return Err(Error::DegenerateCrossRatio);
    }
    let mut dim: Option<usize> = None;
    for p in &args {
        if let Some(n) = p.dim() {
            match dim {
                None => dim = Some(n),
                Some(m) if m != n => return Err(Error::DimensionMismatch(m, n)),
                _ => {}
            }
        }
    }

    // Each distance factor evaluates to 1 when one of its arguments is ∞;
    // the two affected factors then sit on opposite sides of the fraction
    // and their ratio tends to 1.
    let edist = |p: &ExtendedPoint, q: &ExtendedPoint| -> f64 {
        match (p, q) {
            (ExtendedPoint::Finite(u), ExtendedPoint::Finite(v)) => u.dist(v),
            _ => 1.0,
        }
    };

    let num = edist(a, c) * edist(b, d);
    let den = edist(a, b) * edist(c, d);
    if den == 0.0 {
        return Err(Error::DegenerateCrossRatio);
    }
    Ok(num / den)
}

/// The locus `{z : c|x−z| = |y−z|}`: for `c != 1` the sphere with center
/// `(y − c²x)/(1−c²)` and radius `c|x−y|/|1−c²|`, for `c = 1` the
/// perpendicular-bisector plane of the segment `[x, y]`.
pub fn apollonian_boundary(x: &Point, y: &Point, c: f64) -> Result<SphereOrPlane> {
    check_pair(x, y)?;
    if !(c > 0.0) || !c.is_finite() {
        return Err(Error::InadmissibleParameters(format!(
            "ratio must be a positive real, got {c}"
        )));
    }
    if c == 1.0 {
        let normal = y.sub(x).unit().expect("x != y");
        let offset = normal.dot(&x.lerp(y, 0.5));
        Ok(SphereOrPlane::Plane { normal, offset })
    } else {
        let denom = 1.0 - c * c;
        let center = y.sub(&x.scale(c * c)).scale(1.0 / denom);
        let radius = c * x.dist(y) / denom.abs();
        Ok(SphereOrPlane::Sphere { center, radius })
    }
}

/// The Apollonian sublevel set `{z : r|x−z| < |y−z|}`. It always contains
/// `x` and never `y`; it is an open ball for `r > 1`, an open half-space for
/// `r = 1` and the complement of a closed ball for `r < 1`.
pub fn apollonian_sublevel(x: &Point, y: &Point, r: f64) -> Result<Region> {
    check_pair(x, y)?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InadmissibleParameters(format!(
            "ratio must be a positive real, got {r}"
        )));
    }
    match apollonian_boundary(x, y, r)? {
        SphereOrPlane::Plane { normal, offset } => Ok(Region::half_space(normal, offset)),
        SphereOrPlane::Sphere { center, radius } => {
            if r > 1.0 {
                Ok(Region::open_ball(center, radius))
            } else {
                Ok(Region::complement_of_closed_ball(center, radius))
            }
        }
    }
}

/// The open set `{z : r|x−z| > |y−z|}`, the interior of the complement of
/// [`apollonian_sublevel`]. It always contains `y` and never `x`.
pub fn apollonian_superlevel(x: &Point, y: &Point, r: f64) -> Result<Region> {
    check_pair(x, y)?;
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::InadmissibleParameters(format!(
            "ratio must be a positive real, got {r}"
        )));
    }
    match apollonian_boundary(x, y, r)? {
        SphereOrPlane::Plane { normal, offset } => {
            Ok(Region::half_space(normal.scale(-1.0), -offset))
        }
        SphereOrPlane::Sphere { center, radius } => {
            if r > 1.0 {
                Ok(Region::complement_of_closed_ball(center, radius))
            } else {
                Ok(Region::open_ball(center, radius))
            }
        }
    }
}

/// Truncated-cone description of the union of Apollonian balls along a
/// segment: apex at `x`, axis toward `y`, half-angle `arcsin r`, radial
/// bound `|x−y|/sqrt(1−r²)`, capped by the Euclidean ball bounded by the
/// Apollonian sphere of `(x, y, r)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cone2Description {
    pub apex: Point,
    pub axis: Point,
    pub half_angle: f64,
    pub length_bound: f64,
    pub cap_center: Point,
    pub cap_radius: f64,
}

/// Builds the "ice cream cone": the union over `t ∈ (0, 1]` of the Euclidean
/// balls bounded by the Apollonian spheres of `(x, x + t(y−x), r)`, equal to
/// the open truncated cone plus the cap ball.
pub fn cone_hull(x: &Point, y: &Point, r: f64) -> Result<(Cone2Description, Region)> {
    check_pair(x, y)?;
    if !(r > 0.0 && r < 1.0) {
        return Err(Error::RadiusOutOfRange);
    }
    let axis = y.sub(x).unit().expect("x != y");
    let half_angle = r.asin();
    let cos_half = (1.0 - r * r).sqrt();
    let length_bound = x.dist(y) / cos_half;

    let (cap_center, cap_radius) = match apollonian_boundary(x, y, r)? {
        SphereOrPlane::Sphere { center, radius } => (center, radius),
        SphereOrPlane::Plane { .. } => unreachable!("r != 1"),
    };

    let desc = Cone2Description {
        apex: x.clone(),
        axis: axis.clone(),
        half_angle,
        length_bound,
        cap_center: cap_center.clone(),
        cap_radius,
    };

    let apex = x.clone();
    let apex2 = x.clone();
    let axis1 = axis.clone();
    let axis2 = axis.clone();
    let sector_strict = move |z: &Point| {
        let v = z.sub(&apex);
        let d = v.norm();
        d > 0.0 && d < length_bound && v.dot(&axis1) > d * cos_half
    };
    let sector_closed = move |z: &Point| {
        let v = z.sub(&apex2);
        let d = v.norm();
        d <= length_bound && v.dot(&axis2) >= d * cos_half
    };
    let sector = Region::implicit(
        "cone-sector",
        serde_json::json!({
            "apex": x.coords(),
            "axis": axis.coords(),
            "half_angle": half_angle,
            "length_bound": length_bound,
        }),
        Arc::new(sector_strict),
        Arc::new(sector_closed),
        Some((x.clone(), length_bound)),
        None,
    );
    let cap = Region::open_ball(cap_center, cap_radius);
    Ok((desc, Region::union(vec![sector, cap])))
}

fn check_pair(x: &Point, y: &Point) -> Result<()> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if !x.is_finite_coords() || !y.is_finite_coords() {
        return Err(Error::InadmissibleParameters(
            "points must have finite coordinates".into(),
        ));
    }
    if x == y {
        return Err(Error::CoincidentPoints);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::pt2;

    fn ep(x: f64, y: f64) -> ExtendedPoint {
        ExtendedPoint::finite(vec![x, y])
    }

    #[test]
    fn cross_ratio_collinear_points() {
        // |a−c||b−d| / (|a−b||c−d|) on 0, e1, 2e1, 3e1
        let v = cross_ratio(&ep(0.0, 0.0), &ep(1.0, 0.0), &ep(2.0, 0.0), &ep(3.0, 0.0)).unwrap();
        assert!((v - 4.0).abs() < 1e-15);
    }

    #[test]
    fn cross_ratio_infinity_first_argument() {
        let v = cross_ratio(
            &ExtendedPoint::Infinity,
            &ep(0.0, 0.0),
            &ep(1.0, 0.0),
            &ep(2.0, 0.0),
        )
        .unwrap();
        assert!((v - 2.0).abs() < 1e-15);
    }

    #[test]
    fn cross_ratio_infinity_limits_match_finite_limits() {
        // push one argument far away and compare with the ∞ convention
        let far = ep(1e9, 3e8);
        let (b, c, d) = (ep(0.3, -0.2), ep(1.4, 0.5), ep(-2.0, 1.0));
        let lim = cross_ratio(&far, &b, &c, &d).unwrap();
        let conv = cross_ratio(&ExtendedPoint::Infinity, &b, &c, &d).unwrap();
        assert!((lim - conv).abs() / conv < 1e-6);
        // fourth argument at infinity: limit |a−c|/|a−b|
        let lim = cross_ratio(&b, &c, &d, &far).unwrap();
        let conv = cross_ratio(&b, &c, &d, &ExtendedPoint::Infinity).unwrap();
        assert!((lim - conv).abs() / conv < 1e-6);
    }

    #[test]
    fn cross_ratio_coincident_first_third_is_zero() {
        let a = ep(0.7, -0.1);
        let v = cross_ratio(&a, &ep(2.0, 0.0), &a, &ep(0.0, 3.0)).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn cross_ratio_degenerate_denominator() {
        let a = ep(0.0, 0.0);
        let c = ep(1.0, 0.0);
        assert!(matches!(
            cross_ratio(&a, &a, &c, &ep(2.0, 0.0)),
            Err(Error::DegenerateCrossRatio)
        ));
        assert!(matches!(
            cross_ratio(&a, &c, &c, &c),
            Err(Error::DegenerateCrossRatio)
        ));
    }

    #[test]
    fn cross_ratio_dimension_mismatch() {
        let a = ExtendedPoint::finite(vec![0.0, 0.0, 0.0]);
        assert!(matches!(
            cross_ratio(&a, &ep(1.0, 0.0), &ep(2.0, 0.0), &ep(3.0, 0.0)),
            Err(Error::DimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn boundary_sphere_for_ratio_two() {
        let s = apollonian_boundary(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 2.0).unwrap();
        match s {
            SphereOrPlane::Sphere { center, radius } => {
                assert!(center.dist(&pt2(-1.0 / 3.0, 0.0)) < 1e-15);
                assert!((radius - 2.0 / 3.0).abs() < 1e-15);
            }
            _ => panic!("expected a sphere"),
        }
    }

    #[test]
    fn boundary_plane_for_ratio_one() {
        let s = apollonian_boundary(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 1.0).unwrap();
        match s {
            SphereOrPlane::Plane { normal, offset } => {
                assert!(normal.dist(&pt2(1.0, 0.0)) < 1e-15);
                assert!((offset - 0.5).abs() < 1e-15);
            }
            _ => panic!("expected a plane"),
        }
    }

    #[test]
    fn boundary_sphere_for_ratio_half() {
        let s = apollonian_boundary(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 0.5).unwrap();
        match s {
            SphereOrPlane::Sphere { center, radius } => {
                assert!(center.dist(&pt2(4.0 / 3.0, 0.0)) < 1e-14);
                assert!((radius - 2.0 / 3.0).abs() < 1e-14);
            }
            _ => panic!("expected a sphere"),
        }
    }

    #[test]
    fn boundary_locus_satisfies_defining_equation() {
        let x = pt2(0.3, -0.7);
        let y = pt2(1.1, 0.4);
        for &c in &[0.25, 0.8, 1.0, 1.7, 5.0] {
            let locus = apollonian_boundary(&x, &y, c).unwrap();
            for z in locus.sample_points(90, 7) {
                let res = (c * x.dist(&z) - y.dist(&z)).abs();
                assert!(res < 1e-9 * (1.0 + x.dist(&y)), "c={c} residual {res}");
            }
        }
    }

    #[test]
    fn sublevel_shapes_and_membership() {
        let x = pt2(0.0, 0.0);
        let y = pt2(1.0, 0.0);

        let b = apollonian_sublevel(&x, &y, 2.0).unwrap();
        assert!(b.contains(&x));
        assert!(!b.contains(&y));
        assert!(matches!(b, Region::OpenBall { .. }));

        let h = apollonian_sublevel(&x, &y, 1.0).unwrap();
        assert!(h.contains(&pt2(0.49, 5.0)));
        assert!(!h.contains(&pt2(0.51, -5.0)));
        assert!(matches!(h, Region::OpenHalfSpace { .. }));

        let c = apollonian_sublevel(&x, &y, 0.5).unwrap();
        assert!(c.contains(&pt2(10.0, 0.0)));
        assert!(c.contains(&x));
        assert!(!c.contains(&y));
        assert!(matches!(c, Region::ComplementOfClosedBall { .. }));
    }

    #[test]
    fn superlevel_is_opposite_side() {
        let x = pt2(0.0, 0.0);
        let y = pt2(1.0, 0.0);
        for &r in &[0.5, 1.0, 2.0] {
            let s = apollonian_superlevel(&x, &y, r).unwrap();
            assert!(s.contains(&y), "r={r}");
            assert!(!s.contains(&x), "r={r}");
        }
    }

    #[test]
    fn coincident_points_rejected() {
        let x = pt2(0.5, 0.5);
        assert!(matches!(
            apollonian_boundary(&x, &x, 2.0),
            Err(Error::CoincidentPoints)
        ));
        assert!(matches!(
            apollonian_sublevel(&x, &x, 2.0),
            Err(Error::CoincidentPoints)
        ));
    }

    #[test]
    fn cone_description_values() {
        let (desc, region) = cone_hull(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 0.5).unwrap();
        assert!((desc.half_angle - std::f64::consts::FRAC_PI_6).abs() < 1e-15);
        assert!((desc.length_bound - 2.0 / 3.0_f64.sqrt()).abs() < 1e-15);
        // interior sector point
        assert!(region.contains(&pt2(0.5, 0.1)));
        // fails the radial bound and sits exactly on the cap sphere
        assert!(!region.contains(&pt2(2.0, 0.0)));
        // cap interior beyond the sector bound
        assert!(region.contains(&pt2(1.5, 0.0)));
        // apex itself is excluded: every ball in the union avoids x
        assert!(!region.contains(&pt2(0.0, 0.0)));
    }

    #[test]
    fn cone_requires_ratio_in_unit_interval() {
        assert!(matches!(
            cone_hull(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 1.0),
            Err(Error::RadiusOutOfRange)
        ));
        assert!(matches!(
            cone_hull(&pt2(0.0, 0.0), &pt2(1.0, 0.0), 0.0),
            Err(Error::RadiusOutOfRange)
        ));
    }

    #[test]
    fn cone_matches_union_of_balls_on_grid() {
        use rand::{Rng, SeedableRng};
        let x = pt2(-0.2, 0.4);
        let y = pt2(1.3, -0.5);
        let r = 0.6;
        let (_, region) = cone_hull(&x, &y, r).unwrap();
        let t_grid: Vec<f64> = (1..=400).map(|k| k as f64 / 400.0).collect();
        let spheres: Vec<(Point, f64)> = t_grid
            .iter()
            .map(|&t| {
                let z = x.lerp(&y, t);
                match apollonian_boundary(&x, &z, r).unwrap() {
                    SphereOrPlane::Sphere { center, radius } => (center, radius),
                    _ => unreachable!(),
                }
            })
            .collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        for _ in 0..2000 {
            let q = pt2(rng.gen_range(-1.5..3.0), rng.gen_range(-2.0..2.0));
            let in_union = spheres.iter().any(|(c, rad)| q.dist(c) < *rad);
            // skip a thin band around both boundaries
            let margin = 2e-3;
            let near_union_boundary = spheres
                .iter()
                .any(|(c, rad)| (q.dist(c) - *rad).abs() < margin);
            let near_region_boundary = {
                let eps = 1e-3;
                let probes = [
                    pt2(q.0[0] + eps, q.0[1]),
                    pt2(q.0[0] - eps, q.0[1]),
                    pt2(q.0[0], q.0[1] + eps),
                    pt2(q.0[0], q.0[1] - eps),
                ];
                let m = region.contains(&q);
                probes.iter().any(|p| region.contains(p) != m)
            };
            if near_union_boundary || near_region_boundary {
                continue;
            }
            checked += 1;
            assert_eq!(region.contains(&q), in_union, "at {q}");
        }
        assert!(checked > 1000);
    }
}
