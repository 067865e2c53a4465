//! Two-way normalized cuts.
//!
//! The relaxed problem is solved by the second eigenvector of `L_sym`.
//! Rounding maps the continuous vector `Z` to an indicator taking the
//! value `a` on `A` and `-βa` on `Ā`, where `β = α/(d − α)`,
//! `α = vol(A)` and `d = vol(V)`. This choice makes the indicator
//! `D`-orthogonal to the all-ones vector. Entries of `Z` that are zero are
//! placed one at a time, in ascending index order, on whichever side gives
//! the closer indicator.

use ndarray::Array1;

use crate::eigen;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSubset};
use crate::laplacian::{self, LaplacianKind};

/// Entries of `Z` with magnitude at most this fraction of `max |Z_i|`
/// are treated as zero.
pub const ZERO_TOL: f64 = 1e-10;

/// Discrete two-way solution: `a` on `A`, `-β·a` on `Ā`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoWayIndicator {
    pub a: f64,
    pub beta: f64,
    pub in_a: Vec<bool>,
}

impl TwoWayIndicator {
    pub fn to_vector(&self) -> Array1<f64> {
        Array1::from_iter(
            self.in_a
                .iter()
                .map(|&inside| if inside { self.a } else { -self.beta * self.a }),
        )
    }
}

#[derive(Debug, Clone)]
pub struct RelaxedTwoWay {
    /// `D^{-1/2} Y` for the unit eigenvector `Y` of `ν₂`.
    pub z: Array1<f64>,
    pub nu2: f64,
}

#[derive(Debug, Clone)]
pub struct TwoWayResult {
    pub a: NodeSubset,
    pub ncut: f64,
    pub z: Array1<f64>,
    pub x: TwoWayIndicator,
    /// `‖X − Z‖₂`.
    pub residual: f64,
}

impl TwoWayResult {
    pub fn partition(&self) -> (NodeSubset, NodeSubset) {
        (self.a.clone(), self.a.complement())
    }
}

/// `cut(A)·(1/vol(A) + 1/vol(Ā))`.
pub fn ncut2_value(g: &Graph, a: &NodeSubset) -> Result<f64> {
    g.require_unsigned()?;
    let ac = a.complement();
    if a.is_empty() || ac.is_empty() {
        return Err(Error::DegenerateSubset);
    }
    let va = g.volume(a, false);
    let vc = g.volume(&ac, false);
    if va <= 0.0 || vc <= 0.0 {
        return Err(Error::DegenerateSubset);
    }
    Ok(g.cut(a) * (1.0 / va + 1.0 / vc))
}

pub fn solve_relaxed_2way(g: &Graph, tol: f64) -> Result<RelaxedTwoWay> {
    g.require_unsigned()?;
    let m = g.node_count();
    if m < 2 {
        return Err(Error::TooFewNodes { nodes: m, min: 2 });
    }
    g.require_connected()?;
    let lap = laplacian::laplacian(g, LaplacianKind::Sym)?;
    let eig = eigen::sym_eigen(&lap.matrix, tol)?;
    let y = eig.vectors.column(1);
    let z = Array1::from_iter((0..m).map(|i| y[i] / lap.degrees[i].sqrt()));
    Ok(RelaxedTwoWay {
        z,
        nu2: eig.values[1],
    })
}

/// Returns `-Z` when the positive entries of `Z` are more spread around
/// their mean than the negative ones, and `Z` otherwise.
pub fn orient_sign(z: &Array1<f64>) -> Array1<f64> {
    let spread = |pick: fn(f64) -> bool| {
        let part: Vec<f64> = z.iter().copied().filter(|&v| pick(v)).collect();
        if part.is_empty() {
            return 0.0;
        }
        let mean = part.iter().sum::<f64>() / part.len() as f64;
        part.iter().map(|v| (v - mean).powi(2)).sum::<f64>().sqrt()
    };
    if spread(|v| v > 0.0) > spread(|v| v < 0.0) {
        -z
    } else {
        z.clone()
    }
}

struct Candidate {
    x: TwoWayIndicator,
    residual: f64,
}

fn candidate(
    d: &Array1<f64>,
    total: f64,
    z: &Array1<f64>,
    znorm: f64,
    in_a: Vec<bool>,
) -> Option<Candidate> {
    let alpha: f64 = in_a
        .iter()
        .zip(d.iter())
        .filter(|(&inside, _)| inside)
        .map(|(_, &di)| di)
        .sum();
    if alpha <= 0.0 || alpha >= total {
        return None;
    }
    let beta = alpha / (total - alpha);
    let na = in_a.iter().filter(|&&b| b).count() as f64;
    let nb = in_a.len() as f64 - na;
    let a = znorm / (na + beta * beta * nb).sqrt();
    let x = TwoWayIndicator { a, beta, in_a };
    let residual = (&x.to_vector() - z).mapv(|v| v * v).sum().sqrt();
    Some(Candidate { x, residual })
}

/// Rounds a continuous solution to a two-way indicator.
pub fn round_2way(g: &Graph, z: &Array1<f64>) -> Result<TwoWayResult> {
    g.require_unsigned()?;
    let m = g.node_count();
    if z.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: z.len(),
        });
    }
    let zmax = z.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let zero = ZERO_TOL * zmax;
    let in_a: Vec<bool> = z.iter().map(|&v| v > zero).collect();
    let zeros: Vec<usize> = (0..m).filter(|&i| z[i].abs() <= zero).collect();
    if in_a.iter().all(|&b| !b) || in_a.iter().all(|&b| b) {
        return Err(Error::AllOneSide);
    }

    let d = g.degrees(false);
    let total = d.sum();
    let znorm = z.dot(z).sqrt();
    let mut best = candidate(&d, total, z, znorm, in_a).ok_or(Error::DegenerateSubset)?;
    for i in zeros {
        let mut trial = best.x.in_a.clone();
        trial[i] = true;
        if let Some(c) = candidate(&d, total, z, znorm, trial) {
            if c.residual < best.residual {
                best = c;
            }
        }
    }

    let a = NodeSubset::from_mask(best.x.in_a.clone());
    let ncut = ncut2_value(g, &a)?;
    Ok(TwoWayResult {
        a,
        ncut,
        z: z.clone(),
        x: best.x,
        residual: best.residual,
    })
}

/// Relaxation, sign orientation and rounding in one call.
pub fn ncut2(g: &Graph, tol: f64) -> Result<TwoWayResult> {
    let relaxed = solve_relaxed_2way(g, tol)?;
    round_2way(g, &orient_sign(&relaxed.z))
}
