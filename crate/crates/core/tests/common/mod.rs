//! Helpers shared by the integration tests: seeded random instances,
//! orthogonal matrices, exhaustive partition enumeration and printed
//! reference data.

#![allow(dead_code)]

pub mod printed;

use ndarray::{Array1, Array2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use speclap::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn weight(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.5..3.0)
}

/// Random unsigned graph where each pair is an edge with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, m: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if rng.random_bool(p) {
                edges.push((i, j, weight(rng)));
            }
        }
    }
    Graph::from_edges(m, &edges).unwrap()
}

/// Random connected unsigned graph: a random spanning tree plus extra
/// edges with probability `p`.
pub fn random_connected(rng: &mut ChaCha8Rng, m: usize, p: f64) -> Graph {
    let mut w = Array2::<f64>::zeros((m, m));
    for i in 1..m {
        let j = rng.random_range(0..i);
        let x = weight(rng);
        w[[i, j]] = x;
        w[[j, i]] = x;
    }
    for i in 0..m {
        for j in i + 1..m {
            if w[[i, j]] == 0.0 && rng.random_bool(p) {
                let x = weight(rng);
                w[[i, j]] = x;
                w[[j, i]] = x;
            }
        }
    }
    Graph::new(w).unwrap()
}

/// Random connected signed graph with each edge negative with
/// probability `q`, guaranteed to contain at least one negative edge.
pub fn random_signed(rng: &mut ChaCha8Rng, m: usize, p: f64, q: f64) -> Graph {
    let base = random_connected(rng, m, p);
    let mut w = base.weights().clone();
    let edges = base.edges();
    let forced = rng.random_range(0..edges.len());
    for (k, (i, j, x)) in edges.into_iter().enumerate() {
        if k == forced || rng.random_bool(q) {
            w[[i, j]] = -x;
            w[[j, i]] = -x;
        }
    }
    Graph::new(w).unwrap()
}

/// Random connected balanced signed graph and its bipartition.
pub fn random_balanced(rng: &mut ChaCha8Rng, m: usize, p: f64) -> (Graph, Vec<i8>) {
    let base = random_connected(rng, m, p);
    let mut x: Vec<i8> = (0..m)
        .map(|_| if rng.random_bool(0.5) { 1 } else { -1 })
        .collect();
    x[0] = 1;
    if x.iter().all(|&s| s == 1) {
        x[m - 1] = -1;
    }
    let mut w = base.weights().clone();
    for (i, j, v) in base.edges() {
        let s = f64::from(x[i] * x[j]);
        w[[i, j]] = s * v;
        w[[j, i]] = s * v;
    }
    (Graph::new(w).unwrap(), x)
}

pub fn gaussian_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Array2<f64> {
    Array2::from_shape_fn((rows, cols), |_| rng.sample(StandardNormal))
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Array2<f64> {
    let a = gaussian_matrix(rng, n, n);
    (&a + &a.t()) * 0.5
}

/// Modified Gram–Schmidt on the columns of `a`.
pub fn orthonormalize(mut a: Array2<f64>) -> Array2<f64> {
    let n = a.ncols();
    for j in 0..n {
        for _ in 0..2 {
            for i in 0..j {
                let qi = a.column(i).to_owned();
                let proj = qi.dot(&a.column(j));
                a.column_mut(j).scaled_add(-proj, &qi);
            }
        }
        let norm = a.column(j).dot(&a.column(j)).sqrt();
        a.column_mut(j).mapv_inplace(|v| v / norm);
    }
    a
}

/// `m × n` matrix with orthonormal columns.
pub fn random_orthonormal(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Array2<f64> {
    orthonormalize(gaussian_matrix(rng, m, n))
}

/// Orthonormal columns that are also orthogonal to the all-ones vector.
pub fn random_balanced_orthonormal(rng: &mut ChaCha8Rng, m: usize, n: usize) -> Array2<f64> {
    let mut a = gaussian_matrix(rng, m, n);
    for mut col in a.columns_mut() {
        let mean = col.sum() / m as f64;
        col.mapv_inplace(|v| v - mean);
    }
    orthonormalize(a)
}

pub fn random_unit(rng: &mut ChaCha8Rng, n: usize) -> Array1<f64> {
    let v: Array1<f64> = Array1::from_shape_fn(n, |_| rng.sample(StandardNormal));
    let norm = v.dot(&v).sqrt();
    v / norm
}

/// Every labelling of `n` nodes into exactly `k` nonempty blocks, each
/// partition listed once (restricted growth strings).
pub fn partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(
        i: usize,
        n: usize,
        k: usize,
        used: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            if used == k {
                out.push(cur.clone());
            }
            return;
        }
        if k - used > n - i {
            return;
        }
        for l in 0..(used + 1).min(k) {
            cur.push(l);
            rec(i + 1, n, k, used.max(l + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut Vec::new(), &mut out);
    out
}

pub fn max_abs(a: &Array2<f64>) -> f64 {
    a.iter().fold(0.0f64, |m, v| m.max(v.abs()))
}

/// Sum of the `p`-th powers of the eigenvalues, computed as `tr(Mᵖ)`.
pub fn power_traces(m: &Array2<f64>, upto: usize) -> Vec<f64> {
    let mut p = m.clone();
    let mut out = vec![p.diag().sum()];
    for _ in 1..upto {
        p = p.dot(m);
        out.push(p.diag().sum());
    }
    out
}
