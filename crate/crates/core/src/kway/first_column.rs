use ndarray::{Array1, Array2};

use super::{IndicatorMatrix, TransformQ};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Orthogonal `R` whose first column is `(√(α_j/d))_j`, where `α_j` is the
/// volume of block `j` and `d` the total volume.
///
/// When every column of `X` has the same `D`-norm `c`, the first column of
/// `XR` is the constant vector `c/√d`. The remaining columns come from the
/// Householder reflection exchanging `e₁` and the first column.
pub fn first_column_rotation(x: &IndicatorMatrix, g: &Graph) -> Result<TransformQ> {
    g.require_unsigned()?;
    let xm = x.matrix();
    if xm.nrows() != g.node_count() {
        return Err(Error::DimensionMismatch {
            expected: g.node_count(),
            found: xm.nrows(),
        });
    }
    let k = xm.ncols();
    let deg = g.degrees(false);
    let total = deg.sum();

    let mut alpha = Array1::<f64>::zeros(k);
    for (i, &l) in x.labels().iter().enumerate() {
        alpha[l] += deg[i];
    }
    let dnorms: Vec<f64> = (0..k).map(|j| x.scales()[j].powi(2) * alpha[j]).collect();
    let c2 = dnorms[0];
    if total <= 0.0 || alpha.iter().any(|&a| a <= 0.0) {
        return Err(Error::Precondition("every block needs positive volume"));
    }
    if dnorms.iter().any(|&v| (v - c2).abs() > 1e-9 * c2) {
        return Err(Error::Precondition(
            "columns of X must share the same D-norm",
        ));
    }

    let r1 = alpha.mapv(|a| (a / total).sqrt());
    let mut v = -&r1;
    v[0] += 1.0;
    let vv = v.dot(&v);
    let mut r = Array2::<f64>::eye(k);
    if vv > 1e-30 {
        for i in 0..k {
            for j in 0..k {
                r[[i, j]] -= 2.0 * v[i] * v[j] / vv;
            }
        }
    }
    Ok(TransformQ::rotation(r))
}
