//! Triangle meshes of surfaces and polylines of singular loci, with
//! Wavefront OBJ and CSV output.
//!
//! Grids are row-major: vertex `i * nv + j` sits at `(u_i, v_j)`. Files are
//! written to a temporary file next to the target and renamed into place.
//! Coordinates use the shortest representation that reads back to the same
//! `f64`.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use thiserror::Error;

use crate::helicoid::{HelicoidError, HelicoidalSurface, PointCausality};
use crate::minkowski::Vec3M;
use crate::singularity::{classify_cuspidal_edge, CuspType, SingularityError};
use crate::tolerance::ToleranceSpec;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("need at least 2 samples along {axis}, got {n}")]
    TooFewSamples { axis: &'static str, n: usize },
    #[error("invalid {axis} range [{min}, {max}]")]
    BadRange { axis: &'static str, min: f64, max: f64 },
    #[error("at (u, v) = ({u}, {v}): {source}")]
    Eval {
        u: f64,
        v: f64,
        #[source]
        source: HelicoidError,
    },
    #[error(transparent)]
    Singularity(#[from] SingularityError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Obj {
        path: PathBuf,
        line: usize,
        message: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeshVertex {
    pub position: Vec3M,
    pub causal: PointCausality,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceMesh {
    pub nu: usize,
    pub nv: usize,
    pub vertices: Vec<MeshVertex>,
    pub faces: Vec<[usize; 3]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingularLocus {
    pub u0: f64,
    pub cusp_type: CuspType,
    /// `(v, r(u0, v))` samples.
    pub points: Vec<(f64, Vec3M)>,
}

/// `n ≥ 2` evenly spaced values from `min` to `max`, both included.
pub fn linspace(min: f64, max: f64, n: usize) -> Vec<f64> {
    let step = (max - min) / (n - 1) as f64;
    (0..n)
        .map(|k| if k == n - 1 { max } else { min + k as f64 * step })
        .collect()
}

fn check_range(axis: &'static str, [min, max]: [f64; 2], n: usize) -> Result<(), MeshError> {
    if n < 2 {
        return Err(MeshError::TooFewSamples { axis, n });
    }
    if !(min.is_finite() && max.is_finite() && min < max) {
        return Err(MeshError::BadRange { axis, min, max });
    }
    Ok(())
}

pub fn sample_mesh(
    s: &HelicoidalSurface,
    u_range: [f64; 2],
    v_range: [f64; 2],
    nu: usize,
    nv: usize,
    tol: &ToleranceSpec,
) -> Result<SurfaceMesh, MeshError> {
    check_range("u", u_range, nu)?;
    check_range("v", v_range, nv)?;
    let us = linspace(u_range[0], u_range[1], nu);
    let vs = linspace(v_range[0], v_range[1], nv);
    let rows: Vec<Vec<MeshVertex>> = us
        .par_iter()
        .map(|&u| {
            let err = |source| MeshError::Eval { u, v: vs[0], source };
            let causal = s.causal_character_at(u, vs[0], tol).map_err(err)?;
            vs.iter()
                .map(|&v| {
                    let position = s.eval(u, v).map_err(|source| MeshError::Eval { u, v, source })?;
                    Ok(MeshVertex { position, causal })
                })
                .collect()
        })
        .collect::<Result<_, MeshError>>()?;
    let vertices: Vec<MeshVertex> = rows.into_iter().flatten().collect();

    let mut faces = Vec::with_capacity(2 * (nu - 1) * (nv - 1));
    for i in 0..nu - 1 {
        for j in 0..nv - 1 {
            let p00 = i * nv + j;
            let (p01, p10, p11) = (p00 + 1, p00 + nv, p00 + nv + 1);
            faces.push([p00, p10, p11]);
            faces.push([p00, p11, p01]);
        }
    }
    Ok(SurfaceMesh {
        nu,
        nv,
        vertices,
        faces,
    })
}

/// The curve `v ↦ r(u0, v)` through a singular point, tagged with its
/// cuspidal-edge type.
pub fn singular_locus(
    s: &HelicoidalSurface,
    u0: f64,
    v_range: [f64; 2],
    n: usize,
    tol: &ToleranceSpec,
) -> Result<SingularLocus, MeshError> {
    check_range("v", v_range, n)?;
    let report = classify_cuspidal_edge(s, u0, tol)?;
    let points = linspace(v_range[0], v_range[1], n)
        .into_iter()
        .map(|v| Ok((v, s.eval(u0, v).map_err(|source| MeshError::Eval { u: u0, v, source })?)))
        .collect::<Result<_, MeshError>>()?;
    Ok(SingularLocus {
        u0,
        cusp_type: report.cusp_type(),
        points,
    })
}

fn push_vertex(out: &mut String, p: Vec3M) {
    let _ = writeln!(out, "v {:e} {:e} {:e}", p.x1, p.x2, p.x3);
}

pub fn mesh_to_obj(mesh: &SurfaceMesh) -> String {
    let mut out = String::new();
    for v in &mesh.vertices {
        push_vertex(&mut out, v.position);
    }
    for [i, j, k] in &mesh.faces {
        let _ = writeln!(out, "f {} {} {}", i + 1, j + 1, k + 1);
    }
    out
}

pub fn locus_to_obj(locus: &SingularLocus) -> String {
    let mut out = String::new();
    for (_, p) in &locus.points {
        push_vertex(&mut out, *p);
    }
    out
}

fn csv_string<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

/// Sidecar with columns `vertex_index,tag`.
pub fn causal_csv(mesh: &SurfaceMesh) -> String {
    let rows = mesh
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| vec![i.to_string(), v.causal.as_str().to_string()]);
    csv_string(&["vertex_index", "tag"], rows)
}

/// Columns `u,v,x,y,z,type`; the type field is quoted since it contains
/// commas.
pub fn locus_csv(locus: &SingularLocus) -> String {
    let tag = locus.cusp_type.edge_label();
    let rows = locus.points.iter().map(|(v, p)| {
        let mut row: Vec<String> = [locus.u0, *v, p.x1, p.x2, p.x3]
            .iter()
            .map(|x| format!("{x:e}"))
            .collect();
        row.push(tag.clone());
        row
    });
    csv_string(&["u", "v", "x", "y", "z", "type"], rows)
}

/// Writes `contents` through a temporary file in the target directory.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), MeshError> {
    let io_err = |source| MeshError::Io {
        path: path.to_path_buf(),
        source,
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(contents.as_bytes()).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

pub fn export_obj(mesh: &SurfaceMesh, path: &Path) -> Result<(), MeshError> {
    write_atomic(path, &mesh_to_obj(mesh))
}

pub fn export_locus_obj(locus: &SingularLocus, path: &Path) -> Result<(), MeshError> {
    write_atomic(path, &locus_to_obj(locus))
}

pub fn export_causal_csv(mesh: &SurfaceMesh, path: &Path) -> Result<(), MeshError> {
    write_atomic(path, &causal_csv(mesh))
}

pub fn export_locus_csv(locus: &SingularLocus, path: &Path) -> Result<(), MeshError> {
    write_atomic(path, &locus_csv(locus))
}

/// Vertices and faces of an OBJ file; records other than `v` and `f` are
/// skipped, and faces must be triangles.
pub fn parse_obj(src: &str, path: &Path) -> Result<(Vec<Vec3M>, Vec<[usize; 3]>), MeshError> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (n, line) in src.lines().enumerate() {
        let fail = |message: String| MeshError::Obj {
            path: path.to_path_buf(),
            line: n + 1,
            message,
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("v") => {
                let xs: Vec<f64> = fields
                    .take(3)
                    .map(|f| f.parse().map_err(|_| fail(format!("bad coordinate `{f}`"))))
                    .collect::<Result<_, _>>()?;
                let [x, y, z] = xs[..] else {
                    return Err(fail("vertex needs 3 coordinates".into()));
                };
                vertices.push(Vec3M::new(x, y, z).map_err(|e| fail(e.to_string()))?);
            }
            Some("f") => {
                let idx: Vec<usize> = fields
                    .map(|f| {
                        let first = f.split('/').next().unwrap_or(f);
                        match first.parse::<usize>() {
                            Ok(i) if i >= 1 => Ok(i - 1),
                            _ => Err(fail(format!("bad vertex index `{f}`"))),
                        }
                    })
                    .collect::<Result<_, _>>()?;
                let [i, j, k] = idx[..] else {
                    return Err(fail(format!("expected a triangle, got {} indices", idx.len())));
                };
                faces.push([i, j, k]);
            }
            _ => {}
        }
    }
    if let Some(bad) = faces.iter().flatten().find(|&&i| i >= vertices.len()) {
        return Err(MeshError::Obj {
            path: path.to_path_buf(),
            line: 0,
            message: format!("vertex index {} out of range", bad + 1),
        });
    }
    Ok((vertices, faces))
}

pub fn import_obj(path: &Path) -> Result<(Vec<Vec3M>, Vec<[usize; 3]>), MeshError> {
    let src = std::fs::read_to_string(path).map_err(|source| MeshError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_obj(&src, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::helicoid::SurfaceKind;
    use crate::legendre::LegendreCurve;
    use std::f64::consts::PI;

    fn tol() -> ToleranceSpec {
        ToleranceSpec::default()
    }

    fn spacelike_screw() -> HelicoidalSurface {
        let c = LegendreCurve::parse(
            "u*cosh(u)-sinh(u)",
            "u*sinh(u)-cosh(u)+1",
            "cosh(u)",
            "sinh(u)",
            [-2.0, 2.0],
            &tol(),
        )
        .unwrap();
        HelicoidalSurface::new(c, 1.0, SurfaceKind::Type1).unwrap()
    }

    fn timelike_screw() -> HelicoidalSurface {
        let c = LegendreCurve::parse("u^2/2", "u^3/3", "u/sqrt(1-u^2)", "1/sqrt(1-u^2)", [-0.9, 0.9], &tol()).unwrap();
        HelicoidalSurface::new(c, 1.0, SurfaceKind::Type2).unwrap()
    }

    #[test]
    fn counts() {
        let m = sample_mesh(&spacelike_screw(), [-2.0, 2.0], [-PI, PI], 4, 4, &tol()).unwrap();
        assert_eq!((m.vertices.len(), m.faces.len()), (16, 18));
        let m = sample_mesh(&spacelike_screw(), [-2.0, 2.0], [-PI, PI], 2, 2, &tol()).unwrap();
        assert_eq!((m.vertices.len(), m.faces.len()), (4, 2));
        assert!(sample_mesh(&spacelike_screw(), [-2.0, 2.0], [-PI, PI], 1, 4, &tol()).is_err());
    }

    #[test]
    fn grid_vertex_value() {
        let m = sample_mesh(&timelike_screw(), [-0.9, 0.9], [-2.0, 2.0], 7, 5, &tol()).unwrap();
        // u = 0.9 is the last row, v = 0 the middle column
        let p = m.vertices[6 * 5 + 2].position;
        assert!((p.x1 - 0.405).abs() < 1e-15 && p.x2 == 0.0 && (p.x3 - 0.243).abs() < 1e-15);
    }

    #[test]
    fn faces_are_valid() {
        let m = sample_mesh(&spacelike_screw(), [-2.0, 2.0], [-PI, PI], 5, 7, &tol()).unwrap();
        for f in &m.faces {
            assert!(f.iter().all(|&i| i < m.vertices.len()));
            assert!(f[0] != f[1] && f[1] != f[2] && f[0] != f[2]);
        }
    }

    #[test]
    fn locus_on_the_axis() {
        let l = singular_locus(&spacelike_screw(), 0.0, [-PI, PI], 9, &tol()).unwrap();
        assert_eq!(l.cusp_type, CuspType::Cusp25);
        for (v, p) in &l.points {
            assert_eq!(p.to_array(), [*v, 0.0, 0.0]);
        }
        let l = singular_locus(&timelike_screw(), 0.0, [-2.0, 2.0], 2, &tol()).unwrap();
        assert_eq!(l.points.len(), 2);
        assert_eq!(l.points[1].1.to_array(), [0.0, 0.0, 2.0]);
        assert!(singular_locus(&spacelike_screw(), 0.0, [-PI, PI], 0, &tol()).is_err());
        assert!(matches!(
            singular_locus(&spacelike_screw(), 0.5, [-PI, PI], 4, &tol()),
            Err(MeshError::Singularity(SingularityError::NotSingular(_)))
        ));
    }

    #[test]
    fn locus_matches_mesh_vertices() {
        let s = spacelike_screw();
        let m = sample_mesh(&s, [-2.0, 2.0], [-PI, PI], 5, 6, &tol()).unwrap();
        let l = singular_locus(&s, 0.0, [-PI, PI], 6, &tol()).unwrap();
        for (j, (_, p)) in l.points.iter().enumerate() {
            assert_eq!(m.vertices[2 * 6 + j].position, *p);
        }
        assert_eq!(m.vertices[2 * 6].causal, PointCausality::Degenerate);
    }

    #[test]
    fn obj_round_trip() {
        let m = sample_mesh(&spacelike_screw(), [-2.0, 2.0], [-PI, PI], 6, 5, &tol()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("mesh.obj");
        export_obj(&m, &path).unwrap();
        let (vs, fs) = import_obj(&path).unwrap();
        assert_eq!(fs, m.faces);
        for (a, b) in vs.iter().zip(&m.vertices) {
            assert_eq!(*a, b.position);
        }
    }

    #[test]
    fn single_triangle_obj() {
        let m = SurfaceMesh {
            nu: 0,
            nv: 0,
            vertices: [[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]
                .map(|p| MeshVertex {
                    position: Vec3M::from(p),
                    causal: PointCausality::Spacelike,
                })
                .to_vec(),
            faces: vec![[0, 1, 2]],
        };
        let obj = mesh_to_obj(&m);
        assert_eq!(obj.lines().filter(|l| l.starts_with("v ")).count(), 3);
        assert_eq!(
            obj.lines().filter(|l| l.starts_with("f ")).collect::<Vec<_>>(),
            ["f 1 2 3"]
        );
    }

    #[test]
    fn csv_layout() {
        let l = singular_locus(&spacelike_screw(), 0.0, [0.0, 1.0], 2, &tol()).unwrap();
        let csv = locus_csv(&l);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "u,v,x,y,z,type");
        assert_eq!(lines[2], "0e0,1e0,1e0,0e0,0e0,\"(2,5)-cuspidal-edge\"");

        let m = sample_mesh(&spacelike_screw(), [-1.0, 1.0], [0.0, 1.0], 3, 2, &tol()).unwrap();
        let side = causal_csv(&m);
        assert!(side.starts_with("vertex_index,tag\n0,"));
        assert!(side.contains("\n2,degenerate\n"));
    }

    #[test]
    fn malformed_obj() {
        let p = Path::new("x.obj");
        assert!(parse_obj("v 1 2\n", p).is_err());
        assert!(parse_obj("v 1 2 3\nf 1 2 4\n", p).is_err());
        assert!(parse_obj("v 1 2 3\nf 1 1\n", p).is_err());
        let (vs, fs) = parse_obj("# c\nv 1 2 3\nv 0 0 0\nv 1 1 1\nf 1/1 2/2 3/3\n", p).unwrap();
        assert_eq!((vs.len(), fs), (3, vec![[0, 1, 2]]));
    }
}
