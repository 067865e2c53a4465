//! K-way clustering by normalized, signed normalized, ratio and signed
//! ratio cuts.
//!
//! A partition into `K` blocks is represented by an `N × K` indicator
//! matrix `X` with one nonzero per row. The relaxed problem drops the
//! discreteness of `X`; its solution `Z` comes from the `K` smallest
//! eigenvectors of a Laplacian. The discrete answer is recovered by
//! alternating between the nearest indicator to `ZQ` (PODX) and the best
//! transform `Q = RΛ` for a fixed indicator (PODR).

mod first_column;
mod init;
mod pipeline;
mod relax;
mod rounding;

pub use first_column::first_column_rotation;
pub use init::{
    flip_columns, init_rotation_r1, init_rotation_r2, rescale_variant, Rescale, Rescaled,
};
pub use pipeline::{cluster, ClusterOptions, InitCandidate, InitStrategy, KWayResult, StopReason};
pub use relax::{solve_relaxed, ContinuousSolution, Z_NORM};
pub use rounding::{
    fit_diagonal, podr, podx, repair_empty_columns, row_argmax, DiagonalFit, PodrScaling,
};

use std::fmt;
use std::str::FromStr;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeSubset, SignFilter};

/// The cut criterion being minimized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Ncut,
    Rcut,
    SignedNcut,
    SignedRcut,
}

impl Mode {
    pub fn is_signed(self) -> bool {
        matches!(self, Mode::SignedNcut | Mode::SignedRcut)
    }

    /// Whether block sizes are measured by volume rather than cardinality.
    pub fn uses_volume(self) -> bool {
        matches!(self, Mode::Ncut | Mode::SignedNcut)
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Ncut => "ncut",
            Mode::Rcut => "rcut",
            Mode::SignedNcut => "sncut",
            Mode::SignedRcut => "srcut",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "ncut" => Ok(Mode::Ncut),
            "rcut" => Ok(Mode::Rcut),
            "sncut" => Ok(Mode::SignedNcut),
            "srcut" => Ok(Mode::SignedRcut),
            other => Err(format!("unknown mode '{other}'")),
        }
    }
}

/// Assignment of each node to one of `k` nonempty blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    labels: Vec<usize>,
    k: usize,
}

impl Partition {
    /// `labels[i]` is the 0-based block of node `i`.
    pub fn new(labels: Vec<usize>, k: usize) -> Result<Self> {
        let mut seen = vec![false; k];
        for (node, &label) in labels.iter().enumerate() {
            if label >= k {
                return Err(Error::InvalidLabel { node, label, k });
            }
            seen[label] = true;
        }
        if let Some(j) = seen.iter().position(|&s| !s) {
            return Err(Error::EmptyBlock(j));
        }
        Ok(Partition { labels, k })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn node_count(&self) -> usize {
        self.labels.len()
    }

    pub fn blocks(&self) -> Vec<NodeSubset> {
        (0..self.k)
            .map(|j| NodeSubset::from_mask(self.labels.iter().map(|&l| l == j).collect()))
            .collect()
    }

    /// Blocks as sorted member lists, themselves sorted; equal for
    /// partitions that differ only by block numbering.
    pub fn canonical_blocks(&self) -> Vec<Vec<usize>> {
        let mut b: Vec<Vec<usize>> = self.blocks().iter().map(|s| s.members().to_vec()).collect();
        b.sort();
        b
    }
}

/// An `N × K` matrix with exactly one nonzero per row, the same value
/// within each column, and no zero column.
#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorMatrix {
    x: Array2<f64>,
    labels: Vec<usize>,
    scales: Vec<f64>,
}

impl IndicatorMatrix {
    pub fn from_partition(p: &Partition, scales: &[f64]) -> Result<Self> {
        if scales.len() != p.k() {
            return Err(Error::DimensionMismatch {
                expected: p.k(),
                found: scales.len(),
            });
        }
        if scales.iter().any(|&a| a == 0.0 || !a.is_finite()) {
            return Err(Error::Precondition(
                "indicator scales must be finite and nonzero",
            ));
        }
        let mut x = Array2::<f64>::zeros((p.node_count(), p.k()));
        for (i, &l) in p.labels().iter().enumerate() {
            x[[i, l]] = scales[l];
        }
        Ok(IndicatorMatrix {
            x,
            labels: p.labels().to_vec(),
            scales: scales.to_vec(),
        })
    }

    /// Every block scaled by the same `a`.
    pub fn uniform(p: &Partition, a: f64) -> Result<Self> {
        Self::from_partition(p, &vec![a; p.k()])
    }

    pub fn from_matrix(x: Array2<f64>) -> Result<Self> {
        let (n, k) = x.dim();
        let mut labels = Vec::with_capacity(n);
        for (i, row) in x.rows().into_iter().enumerate() {
            let nz: Vec<usize> = (0..k).filter(|&j| row[j] != 0.0).collect();
            if nz.len() != 1 {
                return Err(Error::InvalidLabel {
                    node: i,
                    label: nz.len(),
                    k,
                });
            }
            labels.push(nz[0]);
        }
        let p = Partition::new(labels, k)?;
        let mut scales = vec![0.0; k];
        for (i, &l) in p.labels().iter().enumerate() {
            if scales[l] == 0.0 {
                scales[l] = x[[i, l]];
            } else if (x[[i, l]] - scales[l]).abs() > 1e-12 * scales[l].abs() {
                return Err(Error::Precondition(
                    "indicator columns must be constant on their support",
                ));
            }
        }
        Self::from_partition(&p, &scales)
    }

    pub fn matrix(&self) -> &Array2<f64> {
        &self.x
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn scales(&self) -> &[f64] {
        &self.scales
    }

    pub fn partition(&self) -> Partition {
        Partition {
            labels: self.labels.clone(),
            k: self.scales.len(),
        }
    }
}

/// `Q = R·Λ` with `R` a `K × K` matrix (orthogonal except for the greedy
/// row-selection initializer) and `Λ` diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformQ {
    pub r: Array2<f64>,
    pub lambda: Array1<f64>,
}

impl TransformQ {
    pub fn identity(k: usize) -> Self {
        TransformQ {
            r: Array2::eye(k),
            lambda: Array1::ones(k),
        }
    }

    pub fn rotation(r: Array2<f64>) -> Self {
        let k = r.ncols();
        TransformQ {
            r,
            lambda: Array1::ones(k),
        }
    }

    pub fn matrix(&self) -> Array2<f64> {
        &self.r * &self.lambda
    }
}

fn check_nodes(g: &Graph, n: usize) -> Result<()> {
    if n != g.node_count() {
        return Err(Error::DimensionMismatch {
            expected: g.node_count(),
            found: n,
        });
    }
    Ok(())
}

/// Value of the cut criterion on a partition.
///
/// `ncut = Σ cut(A_j)/vol(A_j)`; the signed variants add
/// `2·links⁻(A_j, A_j)` to each numerator and measure volume with `|W|`;
/// the ratio variants divide by `|A_j|` instead.
pub fn objective(g: &Graph, p: &Partition, mode: Mode) -> Result<f64> {
    check_nodes(g, p.node_count())?;
    if !mode.is_signed() {
        g.require_unsigned()?;
    }
    let mut total = 0.0;
    for (j, block) in p.blocks().iter().enumerate() {
        if block.is_empty() {
            return Err(Error::EmptyBlock(j));
        }
        let mut numerator = g.cut(block);
        if mode.is_signed() {
            numerator += 2.0 * g.links(block, block, SignFilter::NegativeOnly);
        }
        let denominator = if mode.uses_volume() {
            g.volume(block, mode.is_signed())
        } else {
            block.len() as f64
        };
        if denominator <= 0.0 {
            return Err(Error::ZeroVolume(j));
        }
        total += numerator / denominator;
    }
    Ok(total)
}

/// `Σ_j (Xʲ)ᵀ 𝕃 Xʲ / (Xʲ)ᵀ 𝔻 Xʲ` with `𝕃` the (signed) Laplacian and `𝔻`
/// the matching degree matrix, or the identity for ratio modes.
pub fn rayleigh_sum(g: &Graph, x: &IndicatorMatrix, mode: Mode) -> Result<f64> {
    let xm = x.matrix();
    check_nodes(g, xm.nrows())?;
    if !mode.is_signed() {
        g.require_unsigned()?;
    }
    let d = g.degrees(mode.is_signed());
    let mut l = -g.weights();
    l.diag_mut().assign(&d);
    let mut total = 0.0;
    for (j, col) in xm.columns().into_iter().enumerate() {
        let num = col.dot(&l.dot(&col));
        let den: f64 = if mode.uses_volume() {
            col.iter().zip(d.iter()).map(|(v, di)| v * v * di).sum()
        } else {
            col.dot(&col)
        };
        if den <= 0.0 {
            return Err(Error::ZeroVolume(j));
        }
        total += num / den;
    }
    Ok(total)
}

/// Angle between the lines spanned by `x` and `y`, in `[0, π/2]`.
pub fn projective_distance(x: &Array1<f64>, y: &Array1<f64>) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            expected: x.len(),
            found: y.len(),
        });
    }
    let nx = x.dot(x).sqrt();
    let ny = y.dot(y).sqrt();
    if nx == 0.0 || ny == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok((x.dot(y).abs() / (nx * ny)).clamp(0.0, 1.0).acos())
}
