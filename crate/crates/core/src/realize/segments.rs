//! Closed-segment covers of the plane, with `X` the union of the segments.

use std::fmt;

use super::rational::{int, midpoint, Rational};
use crate::code::{check_n, Code};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }

    fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    fn along(&self, d: &Point, t: &Rational) -> Point {
        Point::new(&self.x + &d.x * t, &self.y + &d.y * t)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn cross(a: &Point, b: &Point) -> Rational {
    &a.x * &b.y - &a.y * &b.x
}

fn dot(a: &Point, b: &Point) -> Rational {
    &a.x * &b.x + &a.y * &b.y
}

/// The closed segment `[a, b]` with `a ≠ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    fn dir(&self) -> Point {
        self.b.sub(&self.a)
    }

    fn at(&self, t: &Rational) -> Point {
        self.a.along(&self.dir(), t)
    }

    pub fn contains(&self, p: &Point) -> bool {
        let d = self.dir();
        let v = p.sub(&self.a);
        if cross(&v, &d) != int(0) {
            return false;
        }
        let t = dot(&v, &d);
        t >= int(0) && t <= dot(&d, &d)
    }

    /// Parameters in `[0, 1]` along `self` where `other` starts or stops
    /// meeting it: a crossing point, or both ends of a collinear overlap.
    fn meeting_params(&self, other: &Segment) -> Vec<Rational> {
        let (d, e) = (self.dir(), other.dir());
        let w = other.a.sub(&self.a);
        let denom = cross(&d, &e);
        let zero = int(0);
        let one = int(1);
        if denom != zero {
            let t = cross(&w, &e) / &denom;
            let s = cross(&w, &d) / &denom;
            return if t >= zero && t <= one && s >= zero && s <= one {
                vec![t]
            } else {
                vec![]
            };
        }
        if cross(&w, &d) != zero {
            return vec![];
        }
        let dd = dot(&d, &d);
        let t0 = dot(&w, &d) / &dd;
        let t1 = dot(&other.b.sub(&self.a), &d) / &dd;
        let (lo, hi) = if t0 <= t1 { (t0, t1) } else { (t1, t0) };
        let lo = lo.max(zero);
        let hi = hi.min(one);
        if lo > hi {
            vec![]
        } else {
            vec![lo, hi]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentCover {
    segments: Vec<Segment>,
}

impl SegmentCover {
    pub fn new(ends: Vec<(Point, Point)>) -> Result<Self> {
        check_n(ends.len())
            .map_err(|_| Error::InvalidCover(format!("{} sets, need 1..=64", ends.len())))?;
        let segments = ends
            .into_iter()
            .enumerate()
            .map(|(k, (a, b))| {
                if a == b {
                    Err(Error::DegenerateSegment(k + 1))
                } else {
                    Ok(Segment { a, b })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { segments })
    }

    pub fn k(&self) -> usize {
        self.segments.len()
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    /// Multiplies every coordinate by `factor > 0`.
    pub fn scaled(&self, factor: &Rational) -> Result<Self> {
        if factor <= &int(0) {
            return Err(Error::InvalidCover("scale factor must be positive".into()));
        }
        let scale = |p: &Point| Point::new(&p.x * factor, &p.y * factor);
        Self::new(
            self.segments
                .iter()
                .map(|s| (scale(&s.a), scale(&s.b)))
                .collect(),
        )
    }

    fn mask_at(&self, p: &Point) -> u64 {
        self.segments
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(p))
            .fold(0u64, |acc, (k, _)| acc | 1 << k)
    }

    /// Masks seen along segment `i`.
    fn scan(&self, i: usize) -> Vec<u64> {
        let seg = &self.segments[i];
        let mut ts = vec![int(0), int(1)];
        for (j, other) in self.segments.iter().enumerate() {
            if j != i {
                ts.extend(seg.meeting_params(other));
            }
        }
        ts.sort();
        ts.dedup();
        let mut masks = Vec::with_capacity(2 * ts.len());
        for (k, t) in ts.iter().enumerate() {
            masks.push(self.mask_at(&seg.at(t)));
            if let Some(next) = ts.get(k + 1) {
                masks.push(self.mask_at(&seg.at(&midpoint(t, next))));
            }
        }
        masks
    }
}

/// Edges of a convex `k`-gon on the parabola vertices `p_j = (j, j²)`,
/// `j = 0..k−1`. `U_i` joins `p_{i−1}` and `p_i`, with `U_k` the closing edge
/// back to `p_0`.
pub fn cr_k_polygon(k: usize) -> Result<SegmentCover> {
    if k < 3 {
        return Err(Error::Family(format!(
            "polygon realization needs k >= 3, got {k}"
        )));
    }
    let p = |j: usize| Point::new(int(j as i64), int((j * j) as i64));
    SegmentCover::new((0..k).map(|i| (p(i), p((i + 1) % k))).collect())
}

/// The code realized by the segments over their union. Along each segment
/// the membership pattern only changes at points where another segment
/// starts or stops meeting it, so those points and the midpoints between
/// them cover every cell.
pub fn code_of_segments(u: &SegmentCover) -> Code {
    use rayon::prelude::*;
    let masks: Vec<u64> = (0..u.k())
        .into_par_iter()
        .flat_map_iter(|i| u.scan(i))
        .collect();
    Code::from_masks(u.k(), masks).expect("every sample lies on a segment")
}
