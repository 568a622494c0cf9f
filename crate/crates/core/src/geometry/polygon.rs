use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lp::Halfspace;
use crate::qcp::BoundingBox;

pub type Point2 = [f64; 2];

#[inline]
pub fn cross(o: Point2, a: Point2, b: Point2) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Twice the signed area; positive for counterclockwise order.
pub fn signed_area2(vertices: &[Point2]) -> f64 {
    let n = vertices.len();
    (0..n)
        .map(|i| {
            let (a, b) = (vertices[i], vertices[(i + 1) % n]);
            a[0] * b[1] - a[1] * b[0]
        })
        .sum()
}

/// A convex polygon, counterclockwise. May be degenerate (a segment or a
/// single point) when it comes from a tight intersection.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexPolygon {
    vertices: Vec<Point2>,
}

impl ConvexPolygon {
    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn area(&self) -> f64 {
        0.5 * signed_area2(&self.vertices)
    }

    pub fn is_degenerate(&self) -> bool {
        self.vertices.len() < 3
    }

    pub fn centroid(&self) -> Point2 {
        let n = self.vertices.len() as f64;
        let (sx, sy) = self
            .vertices
            .iter()
            .fold((0.0, 0.0), |(x, y), p| (x + p[0], y + p[1]));
        [sx / n, sy / n]
    }

    /// Inner halfplanes of the edges (empty for degenerate polygons).
    pub fn halfplanes(&self) -> Vec<Halfspace> {
        if self.is_degenerate() {
            return Vec::new();
        }
        let n = self.vertices.len();
        (0..n)
            .filter_map(|i| Halfspace::left_of(self.vertices[i], self.vertices[(i + 1) % n]).ok())
            .collect()
    }

    pub fn contains(&self, p: Point2, eps: f64) -> bool {
        match self.vertices.len() {
            0 => false,
            1 => {
                let v = self.vertices[0];
                libm::hypot(v[0] - p[0], v[1] - p[1]) <= eps
            }
            2 => segment_distance(p, self.vertices[0], self.vertices[1]) <= eps,
            n => (0..n).all(|i| {
                let a = self.vertices[i];
                let b = self.vertices[(i + 1) % n];
                let len = libm::hypot(b[0] - a[0], b[1] - a[1]);
                cross(a, b, p) >= -eps * len
            }),
        }
    }

    pub fn bounding_box(&self, pad: f64) -> Result<BoundingBox> {
        BoundingBox::around(self.vertices.iter().map(|p| p.as_slice()), pad)
    }
}

fn segment_distance(p: Point2, a: Point2, b: Point2) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1]];
    let len2 = ab[0] * ab[0] + ab[1] * ab[1];
    let t = if len2 > 0.0 {
        (((p[0] - a[0]) * ab[0] + (p[1] - a[1]) * ab[1]) / len2).clamp(0.0, 1.0)
    } else {
        0.0
    };
    let q = [a[0] + t * ab[0], a[1] + t * ab[1]];
    libm::hypot(p[0] - q[0], p[1] - q[1])
}

fn box_polygon(bbox: &BoundingBox) -> Vec<Point2> {
    let (lo, hi) = (bbox.lo(), bbox.hi());
    vec![
        [lo[0], lo[1]],
        [hi[0], lo[1]],
        [hi[0], hi[1]],
        [lo[0], hi[1]],
    ]
}

/// Keeps the part of `poly` where `h.slack >= -eps` (Sutherland-Hodgman).
fn clip(poly: &[Point2], h: &Halfspace, eps: f64) -> Vec<Point2> {
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    if n == 0 {
        return out;
    }
    let s: Vec<f64> = poly.iter().map(|p| h.signed_distance(p)).collect();
    for i in 0..n {
        let j = (i + 1) % n;
        let (pi, pj) = (poly[i], poly[j]);
        let (si, sj) = (s[i], s[j]);
        if si >= -eps {
            out.push(pi);
        }
        if (si >= -eps) != (sj >= -eps) && n > 1 {
            let t = si / (si - sj);
            out.push([pi[0] + t * (pj[0] - pi[0]), pi[1] + t * (pj[1] - pi[1])]);
        }
    }
    out
}

fn cleanup(poly: Vec<Point2>, eps: f64) -> Vec<Point2> {
    let mut out: Vec<Point2> = Vec::with_capacity(poly.len());
    for p in poly {
        if out
            .last()
            .is_none_or(|q: &Point2| (p[0] - q[0]).abs() > eps || (p[1] - q[1]).abs() > eps)
        {
            out.push(p);
        }
    }
    while out.len() > 1 {
        let (f, l) = (out[0], out[out.len() - 1]);
        if (f[0] - l[0]).abs() <= eps && (f[1] - l[1]).abs() <= eps {
            out.pop();
        } else {
            break;
        }
    }
    // drop collinear vertices
    let mut changed = true;
    while changed && out.len() > 2 {
        changed = false;
        let n = out.len();
        for i in 0..n {
            let (a, b, c) = (out[(i + n - 1) % n], out[i], out[(i + 1) % n]);
            let scale = (c[0] - a[0]).abs().max((c[1] - a[1]).abs()).max(1.0);
            if cross(a, b, c).abs() <= eps * scale {
                out.remove(i);
                changed = true;
                break;
            }
        }
    }
    out
}

/// Intersection of 2D halfplanes clipped to `bbox`, or `None` when empty.
pub fn halfplane_intersection(
    halfplanes: &[Halfspace],
    bbox: &BoundingBox,
) -> Result<Option<ConvexPolygon>> {
    if bbox.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: bbox.dim(),
        });
    }
    let scale = bbox.diameter().max(1.0);
    let eps = 1e-12 * scale;
    let mut poly = box_polygon(bbox);
    for h in halfplanes {
        if h.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                found: h.dim(),
            });
        }
        poly = clip(&poly, h, eps);
        if poly.is_empty() {
            return Ok(None);
        }
    }
    let vertices = cleanup(poly, eps);
    Ok((!vertices.is_empty()).then_some(ConvexPolygon { vertices }))
}

/// A simple counterclockwise polygon with a nonempty kernel.
#[derive(Debug, Clone, PartialEq)]
pub struct StarPolygon {
    vertices: Vec<Point2>,
    kernel: ConvexPolygon,
}

impl StarPolygon {
    pub fn new(vertices: Vec<Point2>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidPolygon("fewer than three vertices".into()));
        }
        if signed_area2(&vertices) <= 0.0 {
            return Err(Error::InvalidPolygon(
                "vertices must be counterclockwise".into(),
            ));
        }
        if !is_simple(&vertices) {
            return Err(Error::InvalidPolygon("polygon is not simple".into()));
        }
        let kernel = kernel_of(&vertices)?;
        Ok(Self { vertices, kernel })
    }

    pub fn vertices(&self) -> &[Point2] {
        &self.vertices
    }

    pub fn kernel(&self) -> &ConvexPolygon {
        &self.kernel
    }

    /// Inner halfplanes of all edges; their intersection is the kernel.
    pub fn edge_halfplanes(&self) -> Vec<Halfspace> {
        edge_halfplanes(&self.vertices)
    }

    /// Whether the segment from `p` to vertex `i` stays inside the polygon.
    pub fn sees_vertex(&self, p: Point2, i: usize) -> bool {
        let target = self.vertices[i];
        let n = self.vertices.len();
        (0..n).all(|e| {
            let (a, b) = (self.vertices[e], self.vertices[(e + 1) % n]);
            if e == i || (e + 1) % n == i {
                return true;
            }
            !segments_cross(p, target, a, b)
        })
    }
}

fn edge_halfplanes(vertices: &[Point2]) -> Vec<Halfspace> {
    let n = vertices.len();
    (0..n)
        .filter_map(|i| Halfspace::left_of(vertices[i], vertices[(i + 1) % n]).ok())
        .collect()
}

fn kernel_of(vertices: &[Point2]) -> Result<ConvexPolygon> {
    let bbox = BoundingBox::around(vertices.iter().map(|p| p.as_slice()), 1e-9)?;
    match halfplane_intersection(&edge_halfplanes(vertices), &bbox)? {
        Some(k) => Ok(k),
        None => Err(Error::NotStarShaped),
    }
}

/// Kernel of a star-shaped polygon.
pub fn polygon_kernel(p: &StarPolygon) -> ConvexPolygon {
    p.kernel.clone()
}

/// Proper crossing of segments `pq` and `ab` (touching does not count).
fn segments_cross(p: Point2, q: Point2, a: Point2, b: Point2) -> bool {
    let d1 = cross(p, q, a);
    let d2 = cross(p, q, b);
    let d3 = cross(a, b, p);
    let d4 = cross(a, b, q);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn is_simple(v: &[Point2]) -> bool {
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            if j == i + 1 || (i == 0 && j == n - 1) {
                continue;
            }
            let (a, b) = (v[i], v[(i + 1) % n]);
            let (c, d) = (v[j], v[(j + 1) % n]);
            if segments_cross(a, b, c, d) {
                return false;
            }
        }
    }
    true
}
