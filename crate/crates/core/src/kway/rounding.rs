use ndarray::{Array1, Array2};

use super::{IndicatorMatrix, Partition, TransformQ};
use crate::eigen;
use crate::error::{Error, Result};

/// How PODR fits the diagonal factor of `Q = RΛ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PodrScaling {
    /// Fit `Λ` against `ZR` after the Procrustes step.
    #[default]
    Diagonal,
    /// Keep `Λ = I`.
    RotationOnly,
}

/// Outcome of fitting a diagonal `Λ` minimizing `‖X − ZΛ‖_F`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalFit {
    /// `λ_j = (ZᵀX)_jj / ‖Zʲ‖²` before the singularity check.
    pub raw: Array1<f64>,
    /// `raw`, or all ones when some `|λ_j|` is below the threshold.
    pub lambda: Array1<f64>,
    pub fell_back: bool,
}

const SINGULAR_LAMBDA: f64 = 1e-9;

/// Leftmost column attaining the row maximum, for each row.
pub fn row_argmax(y: &Array2<f64>) -> Vec<usize> {
    y.rows()
        .into_iter()
        .map(|row| {
            let mut best = 0;
            for j in 1..row.len() {
                if row[j] > row[best] {
                    best = j;
                }
            }
            best
        })
        .collect()
}

/// Fills empty blocks: while some block is empty, the first node of the
/// leftmost largest block moves to the leftmost empty block.
pub fn repair_empty_columns(labels: &[usize], k: usize) -> Result<Vec<usize>> {
    let n = labels.len();
    if k > n {
        return Err(Error::InvalidK { k, min: 1, max: n });
    }
    let mut labels = labels.to_vec();
    loop {
        let mut counts = vec![0usize; k];
        for &l in &labels {
            counts[l] += 1;
        }
        let Some(empty) = counts.iter().position(|&c| c == 0) else {
            return Ok(labels);
        };
        let max = *counts.iter().max().expect("k >= 1");
        let donor = counts.iter().position(|&c| c == max).expect("max exists");
        let node = labels
            .iter()
            .position(|&l| l == donor)
            .expect("donor nonempty");
        labels[node] = empty;
    }
}

/// Nearest indicator to `ZQ`, scaled so that `‖X‖_F = ‖Z‖_F`.
pub fn podx(z: &Array2<f64>, q: &TransformQ) -> Result<IndicatorMatrix> {
    let y = z.dot(&q.matrix());
    let k = y.ncols();
    let labels = repair_empty_columns(&row_argmax(&y), k)?;
    let a = eigen::frobenius_norm(z) / (z.nrows() as f64).sqrt();
    IndicatorMatrix::uniform(&Partition::new(labels, k)?, a)
}

/// Diagonal `Λ` minimizing `‖X − ZΛ‖_F`, with the identity substituted
/// when the fit is singular.
pub fn fit_diagonal(z: &Array2<f64>, x: &Array2<f64>) -> DiagonalFit {
    let k = z.ncols();
    let raw = Array1::from_iter((0..k).map(|j| {
        let zj = z.column(j);
        zj.dot(&x.column(j)) / zj.dot(&zj)
    }));
    let fell_back = raw
        .iter()
        .any(|l| !l.is_finite() || l.abs() < SINGULAR_LAMBDA);
    let lambda = if fell_back {
        Array1::ones(k)
    } else {
        raw.clone()
    };
    DiagonalFit {
        raw,
        lambda,
        fell_back,
    }
}

/// Best transform for a fixed indicator: the Procrustes rotation
/// `R = UVᵀ` from `ZᵀX = UΣVᵀ`, then `Λ` fitted against `ZR`.
pub fn podr(x: &IndicatorMatrix, z: &Array2<f64>, scaling: PodrScaling) -> Result<TransformQ> {
    let xm = x.matrix();
    if xm.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            expected: z.ncols(),
            found: xm.ncols(),
        });
    }
    let svd = eigen::svd(&z.t().dot(xm), eigen::DEFAULT_TOL)?;
    let r = svd.u.dot(&svd.v.t());
    let lambda = match scaling {
        PodrScaling::RotationOnly => Array1::ones(r.ncols()),
        PodrScaling::Diagonal => fit_diagonal(&z.dot(&r), xm).lambda,
    };
    Ok(TransformQ { r, lambda })
}
