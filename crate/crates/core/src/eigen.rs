//! Dense symmetric eigendecomposition and singular value decomposition.
//!
//! Both routines are cyclic Jacobi methods. The symmetric solver applies
//! two-sided rotations until every off-diagonal entry is below
//! `tol * ‖S‖_F`; the SVD is the one-sided (Hestenes) variant that
//! orthogonalizes columns. Results are made deterministic by a sign rule:
//! the largest-magnitude component of each eigenvector (each left singular
//! vector for the SVD) is positive, ties going to the lowest index.

use ndarray::{Array1, Array2, Axis};

use crate::error::{Error, Result};

/// Default relative convergence tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Sweep cap for both Jacobi iterations.
pub const MAX_SWEEPS: usize = 100;

/// Relative symmetry tolerance accepted by [`sym_eigen`].
const SYMMETRY_TOL: f64 = 1e-12;

/// Components within this relative distance of the maximum magnitude count
/// as tied for the sign rule.
const SIGN_TIE_TOL: f64 = 1e-9;

/// Eigenvalues in ascending order with matching orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct SymmetricEigen {
    pub values: Array1<f64>,
    /// Column `k` is the unit eigenvector for `values[k]`.
    pub vectors: Array2<f64>,
}

/// `M = U · diag(S) · Vᵀ` with `U`, `V` square orthogonal and `S` descending.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: Array2<f64>,
    pub s: Array1<f64>,
    pub v: Array2<f64>,
}

impl Svd {
    /// Number of singular values above `tol * s_max`.
    pub fn rank(&self, tol: f64) -> usize {
        let smax = self.s.iter().cloned().fold(0.0, f64::max);
        self.s.iter().filter(|&&s| s > tol * smax).count()
    }
}

pub fn frobenius_norm(m: &Array2<f64>) -> f64 {
    m.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Eigendecomposition of a symmetric matrix.
pub fn sym_eigen(s: &Array2<f64>, tol: f64) -> Result<SymmetricEigen> {
    let n = square_dim(s)?;
    let norm = frobenius_norm(s);
    for i in 0..n {
        for j in 0..n {
            if !s[[i, j]].is_finite() {
                return Err(Error::NonFinite { i, j });
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if (s[[i, j]] - s[[j, i]]).abs() > SYMMETRY_TOL * norm {
                return Err(Error::NotSymmetric { i, j });
            }
        }
    }

    let mut a = (s + &s.t()) * 0.5;
    let mut v = Array2::<f64>::eye(n);
    let threshold = tol * norm;

    let mut converged = false;
    for _ in 0..=MAX_SWEEPS {
        if max_off_diagonal(&a) <= threshold {
            converged = true;
            // Final polishing sweep.
            jacobi_sweep(&mut a, &mut v);
            break;
        }
        jacobi_sweep(&mut a, &mut v);
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let diag = a.diag().to_owned();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));

    let values = Array1::from_iter(order.iter().map(|&k| diag[k]));
    let mut vectors = Array2::<f64>::zeros((n, n));
    for (dst, &src) in order.iter().enumerate() {
        vectors.column_mut(dst).assign(&v.column(src));
    }
    for k in 0..n {
        if sign_needs_flip(vectors.column(k).iter().copied()) {
            vectors.column_mut(k).mapv_inplace(|x| -x);
        }
    }
    Ok(SymmetricEigen { values, vectors })
}

fn jacobi_sweep(a: &mut Array2<f64>, v: &mut Array2<f64>) {
    let n = a.nrows();
    for p in 0..n {
        for q in p + 1..n {
            let apq = a[[p, q]];
            if apq == 0.0 {
                continue;
            }
            let theta = (a[[q, q]] - a[[p, p]]) / (2.0 * apq);
            let t = if theta.abs() > 1e150 {
                0.5 / theta
            } else {
                theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
            };
            let c = 1.0 / (t * t + 1.0).sqrt();
            let sn = t * c;
            for k in 0..n {
                let akp = a[[k, p]];
                let akq = a[[k, q]];
                a[[k, p]] = c * akp - sn * akq;
                a[[k, q]] = sn * akp + c * akq;
            }
            for k in 0..n {
                let apk = a[[p, k]];
                let aqk = a[[q, k]];
                a[[p, k]] = c * apk - sn * aqk;
                a[[q, k]] = sn * apk + c * aqk;
            }
            a[[p, q]] = 0.0;
            a[[q, p]] = 0.0;
            for k in 0..n {
                let vkp = v[[k, p]];
                let vkq = v[[k, q]];
                v[[k, p]] = c * vkp - sn * vkq;
                v[[k, q]] = sn * vkp + c * vkq;
            }
        }
    }
}

fn max_off_diagonal(a: &Array2<f64>) -> f64 {
    let n = a.nrows();
    let mut m = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                m = m.max(a[[i, j]].abs());
            }
        }
    }
    m
}

/// True when the largest-magnitude component (lowest index among near ties)
/// is negative.
pub(crate) fn sign_needs_flip(values: impl Iterator<Item = f64> + Clone) -> bool {
    let max = values.clone().fold(0.0f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return false;
    }
    values
        .into_iter()
        .find(|x| x.abs() >= max * (1.0 - SIGN_TIE_TOL))
        .map(|x| x < 0.0)
        .unwrap_or(false)
}

fn square_dim(s: &Array2<f64>) -> Result<usize> {
    let (r, c) = s.dim();
    if r != c {
        return Err(Error::NotSquare { rows: r, cols: c });
    }
    Ok(r)
}

/// Singular value decomposition of an arbitrary real matrix.
pub fn svd(m: &Array2<f64>, tol: f64) -> Result<Svd> {
    let (rows, cols) = m.dim();
    let mut out = if rows >= cols {
        svd_tall(m, tol)?
    } else {
        let t = svd_tall(&m.t().to_owned(), tol)?;
        Svd {
            u: t.v,
            s: t.s,
            v: t.u,
        }
    };
    let k = rows.min(cols);
    for j in 0..rows {
        if sign_needs_flip(out.u.column(j).iter().copied()) {
            out.u.column_mut(j).mapv_inplace(|x| -x);
            if j < k {
                out.v.column_mut(j).mapv_inplace(|x| -x);
            }
        }
    }
    Ok(out)
}

/// One-sided Jacobi for `rows >= cols`.
fn svd_tall(m: &Array2<f64>, tol: f64) -> Result<Svd> {
    let (rows, cols) = m.dim();
    let mut a = m.clone();
    let mut v = Array2::<f64>::eye(cols);

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for i in 0..cols {
            for j in i + 1..cols {
                let ci = a.column(i);
                let cj = a.column(j);
                let alpha = ci.dot(&ci);
                let beta = cj.dot(&cj);
                let gamma = ci.dot(&cj);
                if alpha == 0.0 || beta == 0.0 || gamma.abs() <= tol * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let zeta = (beta - alpha) / (2.0 * gamma);
                let t = if zeta.abs() > 1e150 {
                    0.5 / zeta
                } else {
                    zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                rotate_columns(&mut a, i, j, c, s);
                rotate_columns(&mut v, i, j, c, s);
            }
        }
        if !rotated {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence { sweeps: MAX_SWEEPS });
    }

    let norms: Vec<f64> = a.axis_iter(Axis(1)).map(|c| c.dot(&c).sqrt()).collect();
    let mut order: Vec<usize> = (0..cols).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));

    let smax = order.first().map(|&i| norms[i]).unwrap_or(0.0);
    let zero_cut = smax * f64::EPSILON * (rows.max(cols) as f64);

    let mut s = Array1::<f64>::zeros(cols);
    let mut vs = Array2::<f64>::zeros((cols, cols));
    let mut u = Array2::<f64>::zeros((rows, rows));
    let mut filled = vec![false; rows];
    for (dst, &src) in order.iter().enumerate() {
        s[dst] = norms[src];
        vs.column_mut(dst).assign(&v.column(src));
        if norms[src] > zero_cut {
            u.column_mut(dst).assign(&(&a.column(src) / norms[src]));
            filled[dst] = true;
        }
    }
    complete_orthonormal(&mut u, &mut filled);
    Ok(Svd { u, s, v: vs })
}

fn rotate_columns(m: &mut Array2<f64>, i: usize, j: usize, c: f64, s: f64) {
    for k in 0..m.nrows() {
        let x = m[[k, i]];
        let y = m[[k, j]];
        m[[k, i]] = c * x - s * y;
        m[[k, j]] = s * x + c * y;
    }
}

/// Fills the unmarked columns of `u` with unit vectors orthogonal to all
/// marked ones, drawing candidates from the standard basis.
fn complete_orthonormal(u: &mut Array2<f64>, filled: &mut [bool]) {
    let n = u.nrows();
    let mut candidate = 0;
    for slot in 0..n {
        if filled[slot] {
            continue;
        }
        while candidate < n {
            let mut e = Array1::<f64>::zeros(n);
            e[candidate] = 1.0;
            candidate += 1;
            for _ in 0..2 {
                for (k, _) in filled.iter().enumerate().filter(|(_, &f)| f) {
                    let col = u.column(k);
                    let proj = col.dot(&e);
                    e.scaled_add(-proj, &col);
                }
            }
            let norm = e.dot(&e).sqrt();
            if norm > 1e-6 {
                u.column_mut(slot).assign(&(e / norm));
                filled[slot] = true;
                break;
            }
        }
    }
}

/// Rayleigh quotient `xᵀSx / xᵀx`.
pub fn rayleigh(s: &Array2<f64>, x: &Array1<f64>) -> Result<f64> {
    let n = square_dim(s)?;
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    let xx = x.dot(x);
    if xx == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(x.dot(&s.dot(x)) / xx)
}

/// The `k` smallest eigenvalues and their eigenvectors.
pub fn smallest_k(s: &Array2<f64>, k: usize, tol: f64) -> Result<(Array1<f64>, Array2<f64>)> {
    let n = square_dim(s)?;
    if k == 0 || k > n {
        return Err(Error::InvalidK { k, min: 1, max: n });
    }
    let eig = sym_eigen(s, tol)?;
    let values = eig.values.slice(ndarray::s![..k]).to_owned();
    let vectors = eig.vectors.slice(ndarray::s![.., ..k]).to_owned();
    Ok((values, vectors))
}
