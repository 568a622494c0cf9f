use alloc::format;
use alloc::vec::Vec;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::geometry::{cross, Point2, StarPolygon};
use crate::lp::seb_basis;
use crate::qcp::{NestedConvexFamily, QcpProblem, QuasiconvexFunction};
use crate::smooth::{minimize, SolverConfig};

/// A planar triangle mesh with counterclockwise triangles.
#[derive(Debug, Clone, PartialEq)]
pub struct TriMesh {
    pub vertices: Vec<Point2>,
    pub triangles: Vec<[usize; 3]>,
    /// Vertices that must not move (typically the boundary).
    pub fixed: Vec<bool>,
}

impl TriMesh {
    pub fn new(
        vertices: Vec<Point2>,
        triangles: Vec<[usize; 3]>,
        fixed: Vec<bool>,
    ) -> Result<Self> {
        if fixed.len() != vertices.len() {
            return Err(Error::InvalidMesh(format!(
                "{} fixed flags for {} vertices",
                fixed.len(),
                vertices.len()
            )));
        }
        for (t, tri) in triangles.iter().enumerate() {
            if tri.iter().any(|&i| i >= vertices.len()) {
                return Err(Error::InvalidMesh(format!(
                    "triangle {t} has an invalid index"
                )));
            }
            let [a, b, c] = tri.map(|i| vertices[i]);
            if !(cross(a, b, c) > 0.0) {
                return Err(Error::InvalidMesh(format!(
                    "triangle {t} is not counterclockwise with positive area"
                )));
            }
        }
        Ok(Self {
            vertices,
            triangles,
            fixed,
        })
    }

    fn corners(&self, t: usize) -> [Point2; 3] {
        self.triangles[t].map(|i| self.vertices[i])
    }

    /// Largest quality value over all triangles.
    pub fn worst_quality(&self, m: QualityMeasure) -> f64 {
        (0..self.triangles.len())
            .map(|t| {
                let [a, b, c] = self.corners(t);
                triangle_quality(m, a, b, c)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The triangles around `v`, each rotated so that `v` comes first.
    fn star(&self, v: usize) -> Vec<[usize; 3]> {
        self.triangles
            .iter()
            .filter_map(|t| {
                let k = t.iter().position(|&i| i == v)?;
                Some([t[k], t[(k + 1) % 3], t[(k + 2) % 3]])
            })
            .collect()
    }

    /// The polygon left by removing `v`, as a cycle of vertex indices, or
    /// `None` if `v` is on the boundary.
    pub fn link(&self, v: usize) -> Option<Vec<usize>> {
        let star = self.star(v);
        let first = star.first()?;
        let mut cycle = alloc::vec![first[1]];
        let mut cur = first[2];
        while cur != first[1] {
            if cycle.len() > star.len() {
                return None;
            }
            cycle.push(cur);
            cur = star.iter().find(|t| t[1] == cur)?[2];
        }
        (cycle.len() == star.len()).then_some(cycle)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QualityMeasure {
    /// Largest interior angle, in degrees.
    MaxAngle,
    /// Largest ratio of a side to its altitude.
    AspectRatio,
    Perimeter,
    /// Radius of the smallest enclosing circle.
    Circumradius,
    /// Negated `4√3 area / Σ side²`; `-1` for the equilateral triangle.
    BankSmith,
}

fn area2(a: Point2, b: Point2, c: Point2) -> f64 {
    cross(a, b, c)
}

fn len2(a: Point2, b: Point2) -> f64 {
    (a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2)
}

/// Interior angle at `a` of triangle `abc`, in degrees.
fn angle_at(a: Point2, b: Point2, c: Point2) -> f64 {
    let (u, v) = ([b[0] - a[0], b[1] - a[1]], [c[0] - a[0], c[1] - a[1]]);
    (u[0] * v[1] - u[1] * v[0])
        .abs()
        .atan2(u[0] * v[0] + u[1] * v[1])
        .to_degrees()
}

/// Quality of triangle `abc` (smaller is better); `+∞` unless the triangle
/// is counterclockwise with positive area.
pub fn triangle_quality(m: QualityMeasure, a: Point2, b: Point2, c: Point2) -> f64 {
    let area2 = area2(a, b, c);
    if !(area2 > 0.0) {
        return f64::INFINITY;
    }
    let (ab, bc, ca) = (len2(a, b), len2(b, c), len2(c, a));
    match m {
        QualityMeasure::MaxAngle => angle_at(a, b, c)
            .max(angle_at(b, c, a))
            .max(angle_at(c, a, b)),
        QualityMeasure::AspectRatio => ab.max(bc).max(ca) / area2,
        QualityMeasure::Perimeter => ab.sqrt() + bc.sqrt() + ca.sqrt(),
        QualityMeasure::Circumradius => {
            seb_basis(&[&a[..], &b[..], &c[..]]).map_or(f64::INFINITY, |(_, r)| r)
        }
        QualityMeasure::BankSmith => -(3.0.sqrt() * 2.0 * area2) / (ab + bc + ca),
    }
}

/// Quality pieces of the triangle `(p, a, b)` as functions of the free
/// corner `p`. Measures that are a maximum of simpler terms are split so
/// that every piece is smooth.
fn pieces(m: QualityMeasure, a: Point2, b: Point2) -> Vec<QuasiconvexFunction> {
    type Piece = fn(Point2, Point2, Point2) -> f64;
    let parts: Vec<Piece> = match m {
        QualityMeasure::MaxAngle => alloc::vec![
            |p, a, b| angle_at(p, a, b),
            |p, a, b| angle_at(a, b, p),
            |p, a, b| angle_at(b, p, a),
        ],
        QualityMeasure::AspectRatio => {
            alloc::vec![|p, a, _| len2(p, a), |_, a, b| len2(a, b), |p, _, b| len2(
                b, p
            ),]
        }
        _ => alloc::vec![|_, _, _| 0.0],
    };
    parts
        .into_iter()
        .map(|part| {
            let f = move |x: &[f64]| {
                let p = [x[0], x[1]];
                let area2 = area2(p, a, b);
                if !(area2 > 0.0) {
                    return f64::INFINITY;
                }
                match m {
                    QualityMeasure::MaxAngle => part(p, a, b),
                    QualityMeasure::AspectRatio => part(p, a, b) / area2,
                    _ => triangle_quality(m, p, a, b),
                }
            };
            let g = f;
            QuasiconvexFunction::new(2, f).with_surrogate(move |x| {
                let h = 1e-7 * (1.0 + x[0].abs().max(x[1].abs()));
                [0, 1]
                    .map(|k| {
                        let (mut lo, mut hi) = ([x[0], x[1]], [x[0], x[1]]);
                        lo[k] -= h;
                        hi[k] += h;
                        -(g(&hi) - g(&lo)) / (2.0 * h)
                    })
                    .to_vec()
            })
        })
        .collect()
}

/// Best position for vertex `v` inside the kernel of its star, or `None`
/// when `v` is fixed, on the boundary, or its star has no kernel.
pub fn relocate_vertex(
    mesh: &TriMesh,
    v: usize,
    m: QualityMeasure,
    config: &SolverConfig,
) -> Result<Option<Point2>> {
    if v >= mesh.vertices.len() {
        return Err(Error::InvalidMesh(format!("vertex {v} does not exist")));
    }
    if mesh.fixed[v] {
        return Ok(None);
    }
    let Some(cycle) = mesh.link(v) else {
        return Ok(None);
    };
    let polygon = match StarPolygon::new(cycle.iter().map(|&i| mesh.vertices[i]).collect()) {
        Ok(p) => p,
        Err(Error::NotStarShaped | Error::InvalidPolygon(_)) => return Ok(None),
        Err(e) => return Err(e),
    };
    let star = mesh.star(v);
    let objectives: Vec<QuasiconvexFunction> = star
        .iter()
        .flat_map(|t| pieces(m, mesh.vertices[t[1]], mesh.vertices[t[2]]))
        .collect();
    let constraints = polygon
        .edge_halfplanes()
        .into_iter()
        .map(NestedConvexFamily::from_halfspace)
        .collect();
    let problem = QcpProblem::new(
        objectives,
        constraints,
        polygon.kernel().bounding_box(1e-9)?,
    )?;
    let start = mesh.vertices[v];
    if !problem.is_feasible(&start) {
        return Ok(None);
    }
    let before = problem.objective(&start);
    let (value, _) = minimize(&problem, &start, config)?;
    if !(value.level <= before) {
        return Ok(Some(start));
    }
    Ok(Some([value.point[0], value.point[1]]))
}

/// One vertex move made by [`smooth_mesh_traced`].
#[derive(Debug, Clone, PartialEq)]
pub struct Relocation {
    pub vertex: usize,
    pub from: Point2,
    pub to: Point2,
    /// Global worst quality after the move.
    pub worst: f64,
}

pub fn smooth_mesh(
    mesh: &TriMesh,
    m: QualityMeasure,
    passes: usize,
    config: &SolverConfig,
) -> Result<TriMesh> {
    smooth_mesh_traced(mesh, m, passes, config).map(|(mesh, _)| mesh)
}

/// Sweeps the free vertices in index order `passes` times, relocating each
/// one. Stops early once a full pass improves the worst quality by less
/// than `config.tolerance`.
pub fn smooth_mesh_traced(
    mesh: &TriMesh,
    m: QualityMeasure,
    passes: usize,
    config: &SolverConfig,
) -> Result<(TriMesh, Vec<Relocation>)> {
    let mut mesh = mesh.clone();
    let mut log = Vec::new();
    let mut worst = mesh.worst_quality(m);
    for _ in 0..passes {
        let start = worst;
        for v in 0..mesh.vertices.len() {
            let Some(to) = relocate_vertex(&mesh, v, m, config)? else {
                continue;
            };
            let from = mesh.vertices[v];
            mesh.vertices[v] = to;
            let after = mesh.worst_quality(m);
            if !(after <= worst) {
                mesh.vertices[v] = from;
                continue;
            }
            worst = after;
            log.push(Relocation {
                vertex: v,
                from,
                to,
                worst,
            });
        }
        if start - worst < config.tolerance {
            break;
        }
    }
    Ok((mesh, log))
}

/// A `rings × segments` triangulated strip bent into a half annulus with
/// radii 1..2, interior vertices perturbed by up to `jitter` (deterministic
/// in `seed`). Boundary vertices are fixed.
pub fn arch_mesh(rings: usize, segments: usize, jitter: f64, seed: u64) -> Result<TriMesh> {
    use rand::{Rng, SeedableRng};
    if rings < 1 || segments < 1 {
        return Err(Error::InvalidParameter(
            "arch needs at least one ring and segment".into(),
        ));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let cols = segments + 1;
    let mut vertices = Vec::new();
    let mut fixed = Vec::new();
    for r in 0..=rings {
        let radius = 1.0 + r as f64 / rings as f64;
        for s in 0..cols {
            let t = core::f64::consts::PI * (1.0 - s as f64 / segments as f64);
            let boundary = r == 0 || r == rings || s == 0 || s == segments;
            let (dx, dy) = if boundary {
                (0.0, 0.0)
            } else {
                (
                    rng.random_range(-jitter..=jitter),
                    rng.random_range(-jitter..=jitter),
                )
            };
            vertices.push([radius * t.cos() + dx, radius * t.sin() + dy]);
            fixed.push(boundary);
        }
    }
    let mut triangles = Vec::new();
    for r in 0..rings {
        for s in 0..segments {
            let (a, b) = (r * cols + s, r * cols + s + 1);
            let (c, d) = (a + cols, b + cols);
            triangles.push([a, b, d]);
            triangles.push([a, d, c]);
        }
    }
    TriMesh::new(vertices, triangles, fixed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const EQ: [Point2; 3] = [[0.0, 0.0], [1.0, 0.0], [0.5, 0.8660254037844386]];

    #[test]
    fn quality_examples() {
        let bs = triangle_quality(QualityMeasure::BankSmith, EQ[0], EQ[1], EQ[2]);
        assert!((bs + 1.0).abs() < 1e-12);
        let right = triangle_quality(
            QualityMeasure::BankSmith,
            [0.0, 0.0],
            [1.0, 0.0],
            [0.0, 1.0],
        );
        assert!((right + 4.0 * 3.0.sqrt() * 0.5 / 4.0).abs() < 1e-12);
        assert!(
            (triangle_quality(QualityMeasure::MaxAngle, EQ[0], EQ[1], EQ[2]) - 60.0).abs() < 1e-9
        );
        let ar = triangle_quality(
            QualityMeasure::AspectRatio,
            [0.0, 0.0],
            [1.0, 0.0],
            [0.5, 0.5],
        );
        // the slanted side gives (0.25 + y²)/y = 1 at y = 0.5; the base gives 2
        let slanted = len2([0.0, 0.0], [0.5, 0.5]) / area2([0.0, 0.0], [1.0, 0.0], [0.5, 0.5]);
        assert!((slanted - 1.0).abs() < 1e-12);
        assert!((ar - 2.0).abs() < 1e-12);
        let r = triangle_quality(
            QualityMeasure::Circumradius,
            [0.0, 0.0],
            [2.0, 0.0],
            [1.0, 0.1],
        );
        assert!((r - 1.0).abs() < 1e-12);
        assert!(
            (triangle_quality(
                QualityMeasure::Perimeter,
                [0.0, 0.0],
                [3.0, 0.0],
                [0.0, 4.0]
            ) - 12.0)
                .abs()
                < 1e-12
        );
        assert_eq!(
            triangle_quality(QualityMeasure::MaxAngle, [0.0, 0.0], [1.0, 0.0], [2.0, 0.0]),
            f64::INFINITY
        );
    }

    fn hexagon_star(center: Point2) -> TriMesh {
        let mut vertices = vec![center];
        for i in 0..6 {
            let t = i as f64 * core::f64::consts::PI / 3.0;
            vertices.push([t.cos(), t.sin()]);
        }
        let triangles = (0..6).map(|i| [0, 1 + i, 1 + (i + 1) % 6]).collect();
        let mut fixed = vec![true; 7];
        fixed[0] = false;
        TriMesh::new(vertices, triangles, fixed).unwrap()
    }

    #[test]
    fn symmetric_star_stays_put() {
        let mesh = hexagon_star([0.0, 0.0]);
        for m in [
            QualityMeasure::MaxAngle,
            QualityMeasure::AspectRatio,
            QualityMeasure::Perimeter,
            QualityMeasure::Circumradius,
            QualityMeasure::BankSmith,
        ] {
            let p = relocate_vertex(&mesh, 0, m, &SolverConfig::default())
                .unwrap()
                .unwrap();
            assert!(p[0].hypot(p[1]) < 1e-6, "{m:?} {p:?}");
        }
    }

    #[test]
    fn perturbed_vertex_returns_to_center() {
        let mesh = hexagon_star([0.2, -0.1]);
        for m in [
            QualityMeasure::MaxAngle,
            QualityMeasure::BankSmith,
            QualityMeasure::AspectRatio,
        ] {
            let p = relocate_vertex(&mesh, 0, m, &SolverConfig::default())
                .unwrap()
                .unwrap();
            assert!(p[0].hypot(p[1]) < 1e-5, "{m:?} {p:?}");
        }
    }

    #[test]
    fn relocation_matches_kernel_grid_search() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut vertices = vec![[0.1, 0.05]];
        for i in 0..7 {
            let t = i as f64 * core::f64::consts::TAU / 7.0 + rng.random_range(-0.2..0.2);
            let r = rng.random_range(0.8..1.3);
            vertices.push([r * t.cos(), r * t.sin()]);
        }
        let triangles = (0..7).map(|i| [0, 1 + i, 1 + (i + 1) % 7]).collect();
        let mut fixed = vec![true; 8];
        fixed[0] = false;
        let mesh = TriMesh::new(vertices, triangles, fixed).unwrap();
        let cycle = mesh.link(0).unwrap();
        let poly = StarPolygon::new(cycle.iter().map(|&i| mesh.vertices[i]).collect()).unwrap();
        for m in [QualityMeasure::MaxAngle, QualityMeasure::BankSmith] {
            let p = relocate_vertex(&mesh, 0, m, &SolverConfig::default())
                .unwrap()
                .unwrap();
            assert!(poly.kernel().contains(p, 1e-9));
            let local = |x: Point2| {
                let mut t = mesh.clone();
                t.vertices[0] = x;
                t.worst_quality(m)
            };
            let bb = poly.kernel().bounding_box(0.0).unwrap();
            let mut best = f64::INFINITY;
            for i in 0..200 {
                for j in 0..200 {
                    let x = [
                        bb.lo()[0] + (bb.hi()[0] - bb.lo()[0]) * (i as f64 + 0.5) / 200.0,
                        bb.lo()[1] + (bb.hi()[1] - bb.lo()[1]) * (j as f64 + 0.5) / 200.0,
                    ];
                    if poly.kernel().contains(x, 0.0) {
                        best = best.min(local(x));
                    }
                }
            }
            assert!(local(p) <= best + 1e-3, "{m:?}: {} vs {best}", local(p));
        }
    }

    #[test]
    fn link_of_boundary_vertex_is_open() {
        let mesh = hexagon_star([0.0, 0.0]);
        assert!(mesh.link(1).is_none());
        assert_eq!(mesh.link(0).unwrap().len(), 6);
    }

    #[test]
    fn arch_smoothing_is_monotone() {
        let mesh = arch_mesh(2, 10, 0.08, 1).unwrap();
        assert_eq!(mesh.fixed.iter().filter(|f| !**f).count(), 9);
        let before = mesh.worst_quality(QualityMeasure::MaxAngle);
        let (out, log) =
            smooth_mesh_traced(&mesh, QualityMeasure::MaxAngle, 5, &SolverConfig::default())
                .unwrap();
        let mut last = before;
        for r in &log {
            assert!(r.worst <= last);
            last = r.worst;
        }
        assert!(out.worst_quality(QualityMeasure::MaxAngle) < before);
        for (i, f) in out.fixed.iter().enumerate() {
            if *f {
                assert_eq!(out.vertices[i], mesh.vertices[i]);
            }
        }
        assert!(TriMesh::new(
            out.vertices.clone(),
            out.triangles.clone(),
            out.fixed.clone()
        )
        .is_ok());
    }

    #[test]
    fn rejects_bad_meshes() {
        assert!(TriMesh::new(vec![[0.0, 0.0]], vec![[0, 1, 2]], vec![false]).is_err());
        let cw = TriMesh::new(
            vec![[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]],
            vec![[0, 1, 2]],
            vec![true; 3],
        );
        assert!(cw.is_err());
    }
}
