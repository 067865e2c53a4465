//! Spectral drawings: minimal-energy orthogonal embeddings of a graph.
//!
//! A drawing of `m` nodes in `ℝⁿ` is an `m × n` matrix whose rows are the
//! node positions. Its energy is `½ Σ w_ij ‖ρ_i − ρ_j‖²`, which equals
//! `tr(Rᵀ L R)`; the signed variant uses `‖ρ_i − sgn(w_ij) ρ_j‖²` and `L̄`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use ndarray::{s, Array2};

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::{self, LaplacianKind};

/// Row `i` holds the coordinates of node `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct DrawingMatrix {
    coords: Array2<f64>,
}

/// A computed drawing with the eigenvalues it was built from.
#[derive(Debug, Clone)]
pub struct Drawing {
    pub matrix: DrawingMatrix,
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    pub signed: bool,
}

/// How a balanced signed graph should be laid out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignedLayout {
    #[default]
    Nonbipartite,
    /// Two-dimensional layout with the bipartition on two parallel lines.
    Bipartite,
}

impl DrawingMatrix {
    pub fn new(coords: Array2<f64>) -> Self {
        DrawingMatrix { coords }
    }

    pub fn coords(&self) -> &Array2<f64> {
        &self.coords
    }

    pub fn dimension(&self) -> usize {
        self.coords.ncols()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("node");
        for k in 1..=self.dimension() {
            let _ = write!(out, ",x{k}");
        }
        out.push('\n');
        for (i, row) in self.coords.rows().into_iter().enumerate() {
            let _ = write!(out, "{}", i + 1);
            for x in row {
                let _ = write!(out, ",{x}");
            }
            out.push('\n');
        }
        out
    }
}

/// `tr(Rᵀ L R)`, or `tr(Rᵀ L̄ R)` when `signed`.
pub fn energy(g: &Graph, r: &DrawingMatrix, signed: bool) -> Result<f64> {
    let m = g.node_count();
    if r.coords.nrows() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: r.coords.nrows(),
        });
    }
    let d = g.degrees(signed);
    let mut l = -g.weights();
    l.diag_mut().assign(&d);
    let trace = r.coords.t().dot(&l).dot(&r.coords).diag().sum();
    debug_assert!({
        let e = edge_energy(g, r, signed)?;
        (e - trace).abs() <= 1e-10 * e.abs().max(trace.abs()).max(1.0)
    });
    Ok(trace)
}

/// Energy as the sum over edges of weighted squared lengths.
pub fn edge_energy(g: &Graph, r: &DrawingMatrix, signed: bool) -> Result<f64> {
    let m = g.node_count();
    if r.coords.nrows() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: r.coords.nrows(),
        });
    }
    let x = &r.coords;
    Ok(g.edges()
        .into_iter()
        .map(|(i, j, w)| {
            let t = if signed { w.signum() } else { 1.0 };
            let len2: f64 = (0..x.ncols())
                .map(|k| (x[[i, k]] - t * x[[j, k]]).powi(2))
                .sum();
            if signed {
                w.abs() * len2
            } else {
                w * len2
            }
        })
        .sum())
}

/// Minimal-energy balanced orthogonal drawing of a connected unsigned
/// graph in `ℝⁿ`, built from the eigenvectors `u₂ … u_{n+1}` of `L`.
pub fn spectral_drawing(g: &Graph, n: usize, tol: f64) -> Result<Drawing> {
    g.require_unsigned()?;
    g.require_connected()?;
    let m = g.node_count();
    if n == 0 || n + 1 > m {
        return Err(Error::DimensionTooLarge { dim: n, nodes: m });
    }
    let l = laplacian::laplacian(g, LaplacianKind::Unnormalized)?;
    let eig = eigen::sym_eigen(&l.matrix, tol)?;
    build(g, &eig, 1, n, false)
}

/// Orthogonal drawing of a connected signed graph built from `L̄`.
///
/// Unbalanced graphs use `u₁ … u_n`. Balanced graphs use `u₂ … u_{n+1}`,
/// or `u₁, u₂` for the two-dimensional bipartite layout.
pub fn signed_drawing(g: &Graph, n: usize, layout: SignedLayout, tol: f64) -> Result<Drawing> {
    let m = g.node_count();
    if m < 3 {
        return Err(Error::TooFewNodes { nodes: m, min: 3 });
    }
    if !g.has_negative_weights() {
        return Err(Error::NoNegativeEdges);
    }
    let balanced = laplacian::is_balanced(g)?.balanced;
    let first = match (balanced, layout) {
        (false, SignedLayout::Nonbipartite) => 0,
        (false, SignedLayout::Bipartite) => return Err(Error::NotBalanced),
        (true, SignedLayout::Nonbipartite) => 1,
        (true, SignedLayout::Bipartite) => {
            if n != 2 {
                return Err(Error::DimensionTooLarge { dim: n, nodes: m });
            }
            0
        }
    };
    if n == 0 || first + n > m {
        return Err(Error::DimensionTooLarge { dim: n, nodes: m });
    }
    let l = laplacian::laplacian(g, LaplacianKind::SignedUnnormalized)?;
    let eig = eigen::sym_eigen(&l.matrix, tol)?;
    build(g, &eig, first, n, true)
}

fn build(
    g: &Graph,
    eig: &eigen::SymmetricEigen,
    first: usize,
    n: usize,
    signed: bool,
) -> Result<Drawing> {
    let coords = eig.vectors.slice(s![.., first..first + n]).to_owned();
    let eigenvalues = eig.values.slice(s![first..first + n]).to_vec();
    let matrix = DrawingMatrix::new(coords);
    let energy = energy(g, &matrix, signed)?;
    Ok(Drawing {
        matrix,
        eigenvalues,
        energy,
        signed,
    })
}

const VIEW: f64 = 1000.0;
const MARGIN: f64 = 50.0;

const STYLE: &str = "\
    .edge { stroke: #3060c0; stroke-width: 2; }\n\
    .edge.negative { stroke: #d03030; stroke-dasharray: 8 4; }\n\
    .node { fill: #202020; stroke: #ffffff; stroke-width: 1.5; }\n";

/// SVG of the drawing projected onto columns `cols` (0-based).
///
/// Coordinates are mapped affinely into a 1000×1000 view box with equal
/// scale on both axes. Negative edges carry the class `edge negative`.
pub fn render_svg(r: &DrawingMatrix, g: &Graph, cols: (usize, usize)) -> Result<String> {
    let m = g.node_count();
    let x = r.coords();
    if x.nrows() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: x.nrows(),
        });
    }
    let dim = x.ncols();
    if cols.0 >= dim || cols.1 >= dim {
        return Err(Error::DimensionMismatch {
            expected: cols.0.max(cols.1) + 1,
            found: dim,
        });
    }
    let px: Vec<f64> = x.column(cols.0).to_vec();
    let py: Vec<f64> = x.column(cols.1).to_vec();
    let (xmin, xmax) = bounds(&px);
    let (ymin, ymax) = bounds(&py);
    let span = (xmax - xmin).max(ymax - ymin);
    let scale = if span > 0.0 {
        (VIEW - 2.0 * MARGIN) / span
    } else {
        0.0
    };
    let xc = (xmin + xmax) / 2.0;
    let yc = (ymin + ymax) / 2.0;
    let map = |i: usize| {
        (
            VIEW / 2.0 + (px[i] - xc) * scale,
            VIEW / 2.0 - (py[i] - yc) * scale,
        )
    };

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{VIEW}" height="{VIEW}" viewBox="0 0 {VIEW} {VIEW}">"#
    );
    let _ = writeln!(out, "  <style>\n{STYLE}  </style>");
    for (i, j, w) in g.edges() {
        let (x1, y1) = map(i);
        let (x2, y2) = map(j);
        let class = if w < 0.0 { "edge negative" } else { "edge" };
        let _ = writeln!(
            out,
            r#"  <line class="{class}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}"/>"#
        );
    }
    for i in 0..m {
        let (cx, cy) = map(i);
        let _ = writeln!(
            out,
            r#"  <circle class="node" cx="{cx:.3}" cy="{cy:.3}" r="8"><title>{}</title></circle>"#,
            i + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

fn bounds(v: &[f64]) -> (f64, f64) {
    v.iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        })
}

/// Writes the drawing as SVG. Two-dimensional drawings give one file at
/// `path`; higher dimensions give the projections onto columns 1-2 (at
/// `path`) and 1-3 (at `<stem>-13.svg` next to it).
pub fn emit_svg(r: &DrawingMatrix, g: &Graph, path: &Path) -> Result<Vec<PathBuf>> {
    let dim = r.dimension();
    if dim < 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: dim,
        });
    }
    if dim > 3 {
        log::warn!("drawing has {dim} dimensions; only columns 1-3 are rendered");
    }
    let mut written = vec![path.to_path_buf()];
    std::fs::write(path, render_svg(r, g, (0, 1))?)?;
    if dim >= 3 {
        let stem = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("drawing");
        let second = path.with_file_name(format!("{stem}-13.svg"));
        std::fs::write(&second, render_svg(r, g, (0, 2))?)?;
        written.push(second);
    }
    Ok(written)
}
