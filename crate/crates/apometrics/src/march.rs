//! 2D boundary extraction by marching squares on the membership field.
//!
//! Vertices are placed at grid-edge midpoints, so every emitted vertex lies
//! within one grid cell of the true boundary.

use crate::error::{Error, Result};
use crate::point::{pt2, Point};
use crate::region::{Aabb, Region};
use std::collections::HashMap;

/// A chain of 2D vertices; `closed` means the last vertex connects back to
/// the first.
#[derive(Clone, Debug)]
pub struct Polyline {
    pub points: Vec<Point>,
    pub closed: bool,
}

/// Grid edge carrying a contour vertex. `horizontal` edges join node
/// (ix, iy) to (ix+1, iy); vertical edges join (ix, iy) to (ix, iy+1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct EdgeId {
    ix: u32,
    iy: u32,
    horizontal: bool,
}

fn fallback_box() -> Aabb {
    Aabb::new(pt2(-1.5, -1.5), pt2(1.5, 1.5))
}

/// Traces the boundary of a 2D region on a uniform grid derived from the
/// region's primitive balls (inflated by 20%), at `resolution` cells per
/// side.
pub fn region_boundary_2d(region: &Region, resolution: usize) -> Result<Vec<Polyline>> {
    if let Some(d) = region.dim() {
        if d != 2 {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                got: d,
            });
        }
    }
    if matches!(region, Region::EmptySet | Region::FullSpace) {
        return Ok(Vec::new());
    }
    let bbox = region
        .suggested_box(1.2)
        .map(|b| b.squarify())
        .unwrap_or_else(fallback_box);
    region_boundary_2d_in_box(region, resolution, &bbox)
}

/// Same, on an explicit box (used by the renderer so several regions share
/// one world frame).
pub fn region_boundary_2d_in_box(
    region: &Region,
    resolution: usize,
    bbox: &Aabb,
) -> Result<Vec<Polyline>> {
    if bbox.dim() != 2 {
        return Err(Error::UnsupportedDimension {
            expected: 2,
            got: bbox.dim(),
        });
    }
    if let Some(d) = region.dim() {
        if d != 2 {
            return Err(Error::UnsupportedDimension {
                expected: 2,
                got: d,
            });
        }
    }
    assert!(resolution >= 2, "resolution must be at least 2");
    let res = resolution;
    let (x0, y0) = (bbox.min.0[0], bbox.min.0[1]);
    let (dx, dy) = (
        (bbox.max.0[0] - x0) / res as f64,
        (bbox.max.0[1] - y0) / res as f64,
    );

    let node = |ix: usize, iy: usize| pt2(x0 + ix as f64 * dx, y0 + iy as f64 * dy);
    let mut field = vec![false; (res + 1) * (res + 1)];
    for iy in 0..=res {
        for ix in 0..=res {
            field[iy * (res + 1) + ix] = region.contains(&node(ix, iy));
        }
    }
    let at = |ix: usize, iy: usize| field[iy * (res + 1) + ix];

    // segments between edge midpoints, one or two per cell
    let mut segments: Vec<(EdgeId, EdgeId)> = Vec::new();
    for iy in 0..res {
        for ix in 0..res {
            let bl = at(ix, iy);
            let br = at(ix + 1, iy);
            let tr = at(ix + 1, iy + 1);
            let tl = at(ix, iy + 1);
            let mask = (bl as u8) | (br as u8) << 1 | (tr as u8) << 2 | (tl as u8) << 3;
            if mask == 0 || mask == 15 {
                continue;
            }
            let (ix32, iy32) = (ix as u32, iy as u32);
            let bottom = EdgeId {
                ix: ix32,
                iy: iy32,
                horizontal: true,
            };
            let top = EdgeId {
                ix: ix32,
                iy: iy32 + 1,
                horizontal: true,
            };
            let left = EdgeId {
                ix: ix32,
                iy: iy32,
                horizontal: false,
            };
            let right = EdgeId {
                ix: ix32 + 1,
                iy: iy32,
                horizontal: false,
            };
            match mask {
                1 => segments.push((left, bottom)),
                2 => segments.push((bottom, right)),
                3 => segments.push((left, right)),
                4 => segments.push((top, right)),
                6 => segments.push((bottom, top)),
                7 => segments.push((left, top)),
                8 => segments.push((left, top)),
                9 => segments.push((bottom, top)),
                11 => segments.push((top, right)),
                12 => segments.push((left, right)),
                13 => segments.push((bottom, right)),
                14 => segments.push((left, bottom)),
                5 | 10 => {
                    // saddle: resolve with the cell-center sample
                    let center = pt2(x0 + (ix as f64 + 0.5) * dx, y0 + (iy as f64 + 0.5) * dy);
                    let cin = region.contains(&center);
                    let diag_in = (mask == 5) == cin;
                    if diag_in {
                        // band along the in-diagonal
                        if mask == 5 {
                            segments.push((bottom, right));
                            segments.push((left, top));
                        } else {
                            segments.push((left, bottom));
                            segments.push((top, right));
                        }
                    } else if mask == 5 {
                        segments.push((left, bottom));
                        segments.push((top, right));
                    } else {
                        segments.push((bottom, right));
                        segments.push((left, top));
                    }
                }
                _ => unreachable!(),
            }
        }
    }

    // chain segments into polylines; adjacency is looked up by edge id so
    // the walk order is deterministic
    let mut adjacency: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (i, (a, b)) in segments.iter().enumerate() {
        adjacency.entry(*a).or_default().push(i);
        adjacency.entry(*b).or_default().push(i);
    }
    let midpoint = |e: &EdgeId| -> Point {
        if e.horizontal {
            pt2(
                x0 + (e.ix as f64 + 0.5) * dx,
                y0 + e.iy as f64 * dy,
            )
        } else {
            pt2(
                x0 + e.ix as f64 * dx,
                y0 + (e.iy as f64 + 0.5) * dy,
            )
        }
    };

    let mut used = vec![false; segments.len()];
    let mut polylines = Vec::new();
    for start in 0..segments.len() {
        if used[start] {
            continue;
        }
        used[start] = true;
        let (a0, b0) = segments[start];
        let mut chain = vec![a0, b0];
        // extend forward from the tail
        loop {
            let tail = *chain.last().unwrap();
            if chain.len() > 2 && tail == chain[0] {
                break;
            }
            let next = adjacency[&tail].iter().find(|&&i| !used[i]).copied();
            match next {
                Some(i) => {
                    used[i] = true;
                    let (a, b) = segments[i];
                    chain.push(if a == tail { b } else { a });
                }
                None => break,
            }
        }
        let closed = chain.len() > 2 && chain[0] == *chain.last().unwrap();
        if closed {
            chain.pop();
        } else {
            // extend backward from the head
            loop {
                let head = chain[0];
                let next = adjacency[&head].iter().find(|&&i| !used[i]).copied();
                match next {
                    Some(i) => {
                        used[i] = true;
                        let (a, b) = segments[i];
                        chain.insert(0, if a == head { b } else { a });
                    }
                    None => break,
                }
            }
        }
        polylines.push(Polyline {
            points: chain.iter().map(midpoint).collect(),
            closed,
        });
    }
    Ok(polylines)
}

/// Even-odd point-in-polygon test (vertices in order, closed implicitly).
pub fn point_in_polygon(p: &Point, vertices: &[Point]) -> bool {
    let (px, py) = (p.0[0], p.0[1]);
    let mut inside = false;
    let n = vertices.len();
    for i in 0..n {
        let (x1, y1) = (vertices[i].0[0], vertices[i].0[1]);
        let j = (i + 1) % n;
        let (x2, y2) = (vertices[j].0[0], vertices[j].0[1]);
        if (y1 > py) != (y2 > py) {
            let xint = x1 + (py - y1) / (y2 - y1) * (x2 - x1);
            if px < xint {
                inside = !inside;
            }
        }
    }
    inside
}
