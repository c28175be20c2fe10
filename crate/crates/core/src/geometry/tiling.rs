//! Tiling integer-sided nice polygons by unit equilateral triangles.
//!
//! A polygon with an acute corner loses an equilateral triangle there whose
//! side is the shorter of the two sides at the corner; a hexagon loses a
//! trapezoidal strip along one side. Both moves leave a smaller nice polygon,
//! and a triangle of side `s` is cut into `s²` unit triangles directly.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use super::realize::PolygonChain;
use crate::grid::{q, Direction, GridPoint, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TriangleOrientation {
    /// Two vertices on the lower horizontal line.
    Up,
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitTriangle {
    /// Counterclockwise.
    pub vertices: [GridPoint; 3],
    pub orientation: TriangleOrientation,
}

impl UnitTriangle {
    fn new(a: GridPoint, b: GridPoint, c: GridPoint) -> Self {
        let ys = [&a.y, &b.y, &c.y];
        let min = ys.iter().min().unwrap();
        let low = ys.iter().filter(|y| *y == min).count();
        let orientation = if low == 2 {
            TriangleOrientation::Up
        } else {
            TriangleOrientation::Down
        };
        UnitTriangle {
            vertices: [a, b, c],
            orientation,
        }
    }

    pub fn centroid(&self) -> GridPoint {
        let [a, b, c] = &self.vertices;
        (&(a + b) + c).scale(&Q::new(1.into(), 3.into()))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TilingError {
    #[error("side {side} has non-integer length {length}")]
    NonInteger { side: usize, length: String },
    #[error("side {side} has length too large to tile")]
    TooLarge { side: usize },
    #[error("polygon is not a nice convex polygon after reduction")]
    Malformed,
}

/// `area / (√3/4)`: the area in units of one unit triangle, by the shoelace
/// formula.
pub fn triarea(chain: &PolygonChain) -> Q {
    let n = chain.points.len();
    let twice: Q = (0..n)
        .map(|i| chain.points[i].cross(&chain.points[(i + 1) % n]))
        .fold(Q::zero(), |a, b| a + b);
    twice * q(2)
}

/// Unit triangles tiling an integer-sided chain.
pub fn unit_triangulate(chain: &PolygonChain) -> Result<Vec<UnitTriangle>, TilingError> {
    let mut sides = Vec::with_capacity(chain.len());
    for (i, s) in chain.sides.iter().enumerate() {
        if !s.length.is_integer() {
            return Err(TilingError::NonInteger {
                side: i,
                length: s.length.to_string(),
            });
        }
        let l = s
            .length
            .to_integer()
            .to_i64()
            .ok_or(TilingError::TooLarge { side: i })?;
        sides.push((s.direction, l));
    }
    let mut out = Vec::new();
    tile(chain.points[0].clone(), sides, &mut out)?;
    Ok(out)
}

fn step(p: &GridPoint, d: Direction, len: i64) -> GridPoint {
    p + &d.unit().scale(&Q::from_integer(BigInt::from(len)))
}

/// Equilateral triangle with first side from `p` in direction `d`.
fn tile_triangle(p: &GridPoint, d: Direction, s: i64, out: &mut Vec<UnitTriangle>) {
    let u = d.unit();
    let v = d.rotate(1).unit();
    for i in 0..s {
        for j in 0..s - i {
            let base = &step(p, d, i) + &v.scale(&q(j));
            let bu = &base + &u;
            let bv = &base + &v;
            if i + j + 1 < s {
                let buv = &bu + &v;
                out.push(UnitTriangle::new(bu.clone(), buv, bv.clone()));
            }
            out.push(UnitTriangle::new(base, bu, bv));
        }
    }
}

fn tile(start: GridPoint, sides: Vec<(Direction, i64)>, out: &mut Vec<UnitTriangle>) -> Result<(), TilingError> {
    let sides: Vec<(Direction, i64)> = sides.into_iter().filter(|s| s.1 > 0).collect();
    let k = sides.len();
    let ext = |i: usize| (sides[(i + 1) % k].0.exponent() as i64 - sides[i].0.exponent() as i64).rem_euclid(6);
    if k < 3 || (0..k).any(|i| !(1..=2).contains(&ext(i))) {
        return Err(TilingError::Malformed);
    }
    if k == 3 {
        tile_triangle(&start, sides[0].0, sides[0].1, out);
        return Ok(());
    }
    let mut points = Vec::with_capacity(k);
    let mut p = start.clone();
    for (d, l) in &sides {
        points.push(p.clone());
        p = step(&p, *d, *l);
    }

    // Acute corner i sits between side i and side i + 1.
    let acute = (0..k)
        .filter(|&i| ext(i) == 2)
        .min_by_key(|&i| (sides[i].1.min(sides[(i + 1) % k].1), i));
    if let Some(i) = acute {
        let j = (i + 1) % k;
        let s = sides[i].1.min(sides[j].1);
        let (ui, uj) = (sides[i].0, sides[j].0);
        let corner = &points[j];
        let a = step(corner, ui, -s);
        tile_triangle(&a, ui, s, out);
        let mut rest = vec![(ui, sides[i].1 - s), (ui.rotate(1), s), (uj, sides[j].1 - s)];
        rest.extend((2..k).map(|m| sides[(i + m) % k]));
        return tile(points[i].clone(), rest, out);
    }

    // All corners obtuse: a hexagon. Cut a strip along side 0.
    let h = sides[1].1.min(sides[5].1);
    let (u0, l0) = sides[0];
    let (u1, u5) = (sides[1].0, sides[5].0);
    let p1 = &points[1];
    let top_right = step(p1, u1, h);
    let strip = vec![(u0, l0), (u1, h), (u0.rotate(3), l0 + h), (u5, h)];
    tile(points[0].clone(), strip, out)?;
    let rest = vec![
        (u1, sides[1].1 - h),
        sides[2],
        sides[3],
        sides[4],
        (u5, sides[5].1 - h),
        (u0, l0 + h),
    ];
    tile(top_right, rest, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::realize::ChainSide;
    use crate::labeling::CornerKind;

    fn chain(sides: &[(i64, i64)]) -> PolygonChain {
        let mut points = Vec::new();
        let mut p = GridPoint::origin();
        let mut cs = Vec::new();
        for &(e, l) in sides {
            points.push(p.clone());
            p = step(&p, Direction::new(e), l);
            cs.push(ChainSide {
                edge: 0,
                direction: Direction::new(e),
                length: q(l),
                start_face: 0,
                end_face: 0,
            });
        }
        PolygonChain {
            polygon: 0,
            color: crate::emg::PolygonColor::White,
            sides: cs,
            angles: vec![CornerKind::Obtuse; sides.len()],
            points,
        }
    }

    #[test]
    fn counts() {
        let hex = chain(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (5, 1)]);
        assert_eq!(unit_triangulate(&hex).unwrap().len(), 6);
        assert_eq!(triarea(&hex), q(6));
        let tri = chain(&[(0, 1), (2, 1), (4, 1)]);
        assert_eq!(unit_triangulate(&tri).unwrap().len(), 1);
        let para = chain(&[(0, 2), (1, 1), (3, 2), (4, 1)]);
        assert_eq!(unit_triangulate(&para).unwrap().len(), 4);
        assert_eq!(triarea(&para), q(4));
        let trap = chain(&[(0, 2), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(unit_triangulate(&trap).unwrap().len(), 3);
    }
}
