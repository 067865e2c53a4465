use ndarray::{Array1, Array2, Axis};

use super::TransformQ;
use crate::eigen;
use crate::error::{Error, Result};

/// Ways of deforming `Z` before the first rounding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rescale {
    /// Use `Z` as is.
    None,
    /// Scale columns so rows of `ZΛ` sum to 1 in the least-squares sense.
    RowSum,
    /// Scale columns so rows of `ZΛ` have unit length in the
    /// least-squares sense.
    RowNormLs,
    /// Divide every row by its Euclidean norm.
    #[default]
    RowNormalize,
}

impl Rescale {
    pub fn name(self) -> &'static str {
        match self {
            Rescale::None => "none",
            Rescale::RowSum => "rowsum",
            Rescale::RowNormLs => "rownorm-ls",
            Rescale::RowNormalize => "rownorm",
        }
    }
}

impl std::str::FromStr for Rescale {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Rescale::None),
            "rowsum" => Ok(Rescale::RowSum),
            "rownorm-ls" => Ok(Rescale::RowNormLs),
            "rownorm" => Ok(Rescale::RowNormalize),
            other => Err(format!("unknown rescale method '{other}'")),
        }
    }
}

/// Output of [`rescale_variant`].
#[derive(Debug, Clone)]
pub struct Rescaled {
    pub z: Array2<f64>,
    /// Column factors `λ`; all ones for row normalization or after a
    /// fallback.
    pub column_scale: Array1<f64>,
    /// The least-squares system was singular and `Λ = I` was used.
    pub fell_back: bool,
}

const ROWSUM_MIN_LAMBDA: f64 = 1e-6;
const ROWNORM_MIN_RATIO: f64 = 1e-6;
const RANK_TOL: f64 = 1e-12;

/// Rotation `R₁` diagonalizing `ZᵀZ`, so the columns of `ZR₁` are
/// orthogonal.
pub fn init_rotation_r1(z: &Array2<f64>) -> Result<TransformQ> {
    let eig = eigen::sym_eigen(&z.t().dot(z), eigen::DEFAULT_TOL)?;
    let top = eig.values[eig.values.len() - 1];
    if top <= 0.0 || eig.values[0] <= RANK_TOL * top {
        return Err(Error::RankDeficient);
    }
    Ok(TransformQ::rotation(eig.vectors))
}

/// Greedy choice of `K` rows of `Z` that are as orthogonal as possible,
/// starting from row `first_row`. The columns of `R` are the chosen rows,
/// normalized. Rows are removed from the pool once chosen, and zero rows
/// are never chosen.
pub fn init_rotation_r2(z: &Array2<f64>, first_row: usize) -> Result<TransformQ> {
    let (n, k) = z.dim();
    let norms: Vec<f64> = z.rows().into_iter().map(|r| r.dot(&r).sqrt()).collect();
    let mut available: Vec<bool> = norms.iter().map(|&x| x > 0.0).collect();
    let start = (first_row..n)
        .chain(0..first_row)
        .find(|&i| available[i])
        .ok_or(Error::RankDeficient)?;

    let mut chosen = vec![start];
    available[start] = false;
    let mut c = Array1::<f64>::zeros(n);
    while chosen.len() < k {
        let last = z.row(*chosen.last().expect("nonempty"));
        c += &z.dot(&last).mapv(f64::abs);
        let next = (0..n)
            .filter(|&i| available[i])
            .min_by(|&a, &b| c[a].total_cmp(&c[b]).then(a.cmp(&b)))
            .ok_or(Error::RankDeficient)?;
        chosen.push(next);
        available[next] = false;
    }

    let mut r = Array2::<f64>::zeros((k, k));
    for (col, &row) in chosen.iter().enumerate() {
        r.column_mut(col).assign(&(&z.row(row) / norms[row]));
    }
    Ok(TransformQ::rotation(r))
}

pub fn rescale_variant(z: &Array2<f64>, method: Rescale) -> Rescaled {
    let k = z.ncols();
    let identity = |fell_back| Rescaled {
        z: z.clone(),
        column_scale: Array1::ones(k),
        fell_back,
    };
    match method {
        Rescale::None => identity(false),
        Rescale::RowNormalize => {
            let mut out = z.clone();
            for mut row in out.rows_mut() {
                let norm = row.dot(&row).sqrt();
                if norm > 0.0 {
                    row /= norm;
                }
            }
            Rescaled {
                z: out,
                column_scale: Array1::ones(k),
                fell_back: false,
            }
        }
        Rescale::RowSum => match row_sum_lambda(z) {
            Some(lambda) => Rescaled {
                z: z * &lambda,
                column_scale: lambda,
                fell_back: false,
            },
            None => identity(true),
        },
        Rescale::RowNormLs => match row_norm_lambda(z) {
            Some(lambda) => Rescaled {
                z: z * &lambda,
                column_scale: lambda,
                fell_back: false,
            },
            None => identity(true),
        },
    }
}

/// `λ = (ZᵀZ)⁻¹ Zᵀ 1`.
fn row_sum_lambda(z: &Array2<f64>) -> Option<Array1<f64>> {
    let eig = eigen::sym_eigen(&z.t().dot(z), eigen::DEFAULT_TOL).ok()?;
    let top = eig.values[eig.values.len() - 1];
    if top <= 0.0 || eig.values[0] <= RANK_TOL * top {
        return None;
    }
    let rhs = z.sum_axis(Axis(0));
    let coeffs = eig.vectors.t().dot(&rhs) / &eig.values;
    let lambda = eig.vectors.dot(&coeffs);
    if lambda
        .iter()
        .any(|l| l.abs() < ROWSUM_MIN_LAMBDA || !l.is_finite())
    {
        return None;
    }
    Some(lambda)
}

/// `λ_j = √μ_j` with `μ = (Z∘Z)⁺ 1`.
fn row_norm_lambda(z: &Array2<f64>) -> Option<Array1<f64>> {
    let sq = z.mapv(|v| v * v);
    let svd = eigen::svd(&sq, eigen::DEFAULT_TOL).ok()?;
    let smax = svd.s.iter().cloned().fold(0.0, f64::max);
    let k = z.ncols();
    let ones = Array1::<f64>::ones(z.nrows());
    let ut1 = svd.u.t().dot(&ones);
    let mut coeffs = Array1::<f64>::zeros(k);
    for j in 0..k {
        if svd.s[j] > RANK_TOL * smax {
            coeffs[j] = ut1[j] / svd.s[j];
        }
    }
    let mu = svd.v.dot(&coeffs);
    let top = mu.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if top.is_nan() || top <= 0.0 || mu.iter().any(|&m| m <= ROWNORM_MIN_RATIO * top) {
        return None;
    }
    Some(mu.mapv(f64::sqrt))
}

/// Negates every column whose mean is negative; returns the flipped matrix
/// and the diagonal of `R_p`.
pub fn flip_columns(zr: &Array2<f64>) -> (Array2<f64>, Array1<f64>) {
    let n = zr.nrows().max(1) as f64;
    let signs = Array1::from_iter(zr.columns().into_iter().map(|col| {
        let mean = col.sum() / n;
        let scale = col.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if mean < -1e-12 * scale {
            -1.0
        } else {
            1.0
        }
    }));
    (zr * &signs, signs)
}
