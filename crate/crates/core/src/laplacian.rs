//! Laplacian matrices, quadratic forms and balance of signed graphs.

use std::collections::VecDeque;

use ndarray::{Array1, Array2};

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default relative tolerance for counting zero eigenvalues.
pub const DEFAULT_KERNEL_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaplacianKind {
    /// `L = D − W`.
    Unnormalized,
    /// `L_sym = D^{-1/2} L D^{-1/2}`.
    Sym,
    /// `L_rw = D^{-1} L`; not symmetric.
    Rw,
    /// `L̄ = D̄ − W` with `D̄` built from `|W|`.
    SignedUnnormalized,
    /// `D̄^{-1/2} L̄ D̄^{-1/2}`.
    SignedSym,
}

impl LaplacianKind {
    pub fn is_signed(self) -> bool {
        matches!(
            self,
            LaplacianKind::SignedUnnormalized | LaplacianKind::SignedSym
        )
    }

    pub fn is_symmetric(self) -> bool {
        self != LaplacianKind::Rw
    }

    fn is_normalized(self) -> bool {
        matches!(
            self,
            LaplacianKind::Sym | LaplacianKind::Rw | LaplacianKind::SignedSym
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaplacianMatrix {
    pub kind: LaplacianKind,
    pub matrix: Array2<f64>,
    /// `D` or `D̄`, whichever the kind is built from.
    pub degrees: Array1<f64>,
}

/// Result of the balance test on a connected signed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// `±1` per node when balanced; every edge satisfies
    /// `sgn(w_ij) = x_i x_j`.
    pub bipartition: Option<Vec<i8>>,
}

pub fn laplacian(g: &Graph, kind: LaplacianKind) -> Result<LaplacianMatrix> {
    let signed = kind.is_signed();
    if !signed {
        g.require_unsigned()?;
    }
    let d = g.degrees(signed);
    let mut l = -g.weights();
    l.diag_mut().assign(&d);

    if kind.is_normalized() {
        if let Some(i) = d.iter().position(|&x| x <= 0.0) {
            return Err(Error::IsolatedVertex(i));
        }
        let m = g.node_count();
        let s = d.mapv(f64::sqrt);
        for i in 0..m {
            for j in 0..m {
                l[[i, j]] /= if kind == LaplacianKind::Rw {
                    d[i]
                } else {
                    s[i] * s[j]
                };
            }
        }
    }
    Ok(LaplacianMatrix {
        kind,
        matrix: l,
        degrees: d,
    })
}

/// `½ Σ w_ij (x_i − x_j)²`, or `½ Σ |w_ij| (x_i − sgn(w_ij) x_j)²` when
/// `signed` is set.
pub fn quadratic_form(g: &Graph, x: &Array1<f64>, signed: bool) -> Result<f64> {
    let m = g.node_count();
    if x.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: x.len(),
        });
    }
    Ok(g.edges()
        .into_iter()
        .map(|(i, j, w)| {
            if signed {
                let diff = x[i] - w.signum() * x[j];
                w.abs() * diff * diff
            } else {
                w * (x[i] - x[j]) * (x[i] - x[j])
            }
        })
        .sum())
}

/// Number of eigenvalues not exceeding `tol` times the largest one.
pub fn kernel_dimension(lap: &LaplacianMatrix, tol: f64) -> Result<usize> {
    if !lap.kind.is_symmetric() {
        return Err(Error::Precondition(
            "kernel_dimension needs a symmetric Laplacian",
        ));
    }
    let values = eigen::sym_eigen(&lap.matrix, eigen::DEFAULT_TOL)?.values;
    let top = values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    Ok(values.iter().filter(|&&v| v <= tol * top).count())
}

/// Breadth-first sign propagation from node 1.
pub fn is_balanced(g: &Graph) -> Result<BalanceReport> {
    g.require_connected()?;
    let m = g.node_count();
    let w = g.weights();
    let mut s = vec![0i8; m];
    s[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..m {
            let x = w[[i, j]];
            if x == 0.0 {
                continue;
            }
            let want = if x > 0.0 { s[i] } else { -s[i] };
            if s[j] == 0 {
                s[j] = want;
                queue.push_back(j);
            } else if s[j] != want {
                return Ok(BalanceReport {
                    balanced: false,
                    bipartition: None,
                });
            }
        }
    }
    Ok(BalanceReport {
        balanced: true,
        bipartition: Some(s),
    })
}

/// Given a bipartition `x` of a balanced graph, returns `|W|` as a graph
/// together with `X = diag(x)`, so that `L̄ = X 𝓛 X` where `𝓛` is the
/// Laplacian of the returned graph.
pub fn unsign_conjugation(g: &Graph, x: &[i8]) -> Result<(Graph, Array2<f64>)> {
    let m = g.node_count();
    if x.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: x.len(),
        });
    }
    if x.iter().any(|&v| v != 1 && v != -1) {
        return Err(Error::Precondition("bipartition entries must be +1 or -1"));
    }
    for (i, j, w) in g.edges() {
        let sign = if w > 0.0 { 1 } else { -1 };
        if sign != x[i] * x[j] {
            return Err(Error::InconsistentBipartition { i, j });
        }
    }
    let diag = Array1::from_iter(x.iter().map(|&v| f64::from(v)));
    Ok((g.abs(), Array2::from_diag(&diag)))
}
