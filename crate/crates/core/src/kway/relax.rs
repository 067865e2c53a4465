use ndarray::{Array1, Array2};

use super::Mode;
use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::laplacian::{self, LaplacianKind};

/// Frobenius norm the relaxed solution is rescaled to.
pub const Z_NORM: f64 = 100.0;

/// Solution of the relaxed K-way problem.
#[derive(Debug, Clone)]
pub struct ContinuousSolution {
    /// `N × K`, rescaled so that `‖Z‖_F = Z_NORM`.
    pub z: Array2<f64>,
    pub mode: Mode,
    /// `‖Z‖_F` before rescaling.
    pub frobenius_norm: f64,
    /// The `K` smallest eigenvalues, ascending.
    pub eigenvalues: Array1<f64>,
}

impl ContinuousSolution {
    /// Optimal value of the relaxed problem, `ν₁ + … + ν_K`.
    pub fn relaxation_value(&self) -> f64 {
        self.eigenvalues.sum()
    }

    /// `Z` at its original scale.
    pub fn unscaled(&self) -> Array2<f64> {
        &self.z * (self.frobenius_norm / Z_NORM)
    }
}

pub fn solve_relaxed(g: &Graph, k: usize, mode: Mode, tol: f64) -> Result<ContinuousSolution> {
    let n = g.node_count();
    if k < 2 || k > n {
        return Err(Error::InvalidK { k, min: 2, max: n });
    }
    let kind = match mode {
        Mode::Ncut => {
            g.require_unsigned()?;
            g.require_connected()?;
            LaplacianKind::Sym
        }
        Mode::SignedNcut => LaplacianKind::SignedSym,
        Mode::Rcut => {
            g.require_unsigned()?;
            LaplacianKind::Unnormalized
        }
        Mode::SignedRcut => LaplacianKind::SignedUnnormalized,
    };
    let lap = laplacian::laplacian(g, kind)?;
    let (eigenvalues, mut z) = eigen::smallest_k(&lap.matrix, k, tol)?;
    if mode.uses_volume() {
        for (i, mut row) in z.rows_mut().into_iter().enumerate() {
            row /= lap.degrees[i].sqrt();
        }
    }
    let frobenius_norm = eigen::frobenius_norm(&z);
    z *= Z_NORM / frobenius_norm;
    Ok(ContinuousSolution {
        z,
        mode,
        frobenius_norm,
        eigenvalues,
    })
}
