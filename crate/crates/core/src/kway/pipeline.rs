use ndarray::Array2;

use super::init::{flip_columns, init_rotation_r1, init_rotation_r2, rescale_variant, Rescale};
use super::relax::{solve_relaxed, ContinuousSolution};
use super::rounding::{podr, podx, PodrScaling};
use super::{objective, IndicatorMatrix, Mode, Partition, TransformQ};
use crate::eigen;
use crate::error::Result;
use crate::graph::Graph;

/// The four starting points for the alternation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitCandidate {
    /// Rescaled `Z` with `R = I`.
    Relaxed,
    /// Rescaled `Z` with the greedy row rotation.
    RelaxedGreedy,
    /// Rescaled `ZR₁` with `R = I`.
    Diagonalized,
    /// Rescaled `ZR₁` with the greedy row rotation.
    DiagonalizedGreedy,
}

impl InitCandidate {
    pub const ALL: [InitCandidate; 4] = [
        InitCandidate::Relaxed,
        InitCandidate::RelaxedGreedy,
        InitCandidate::Diagonalized,
        InitCandidate::DiagonalizedGreedy,
    ];

    fn diagonalized(self) -> bool {
        matches!(
            self,
            InitCandidate::Diagonalized | InitCandidate::DiagonalizedGreedy
        )
    }

    fn greedy(self) -> bool {
        matches!(
            self,
            InitCandidate::RelaxedGreedy | InitCandidate::DiagonalizedGreedy
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitStrategy {
    /// Try every candidate and keep the one closest to its indicator.
    #[default]
    Best,
    Only(InitCandidate),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClusterOptions {
    pub rescale: Rescale,
    pub init: InitStrategy,
    /// Also try each candidate with negative-mean columns negated.
    pub flip: bool,
    pub podr_scaling: PodrScaling,
    pub max_iters: usize,
    /// Starting row of the greedy rotation.
    pub greedy_first_row: usize,
    pub eigen_tol: f64,
}

impl Default for ClusterOptions {
    fn default() -> Self {
        ClusterOptions {
            rescale: Rescale::RowNormalize,
            init: InitStrategy::Best,
            flip: true,
            podr_scaling: PodrScaling::Diagonal,
            max_iters: 100,
            greedy_first_row: 0,
            eigen_tol: eigen::DEFAULT_TOL,
        }
    }
}

/// Why the alternation ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopReason {
    /// PODX returned the same assignment twice in a row.
    Repeated,
    /// The residual did not decrease.
    Stalled,
    MaxIters,
}

#[derive(Debug, Clone)]
pub struct KWayResult {
    pub partition: Partition,
    pub objective: f64,
    pub x: IndicatorMatrix,
    pub z: ContinuousSolution,
    pub q: TransformQ,
    /// Number of PODX steps performed.
    pub iterations: usize,
    /// `‖X − ZQ‖_F` of the returned pair.
    pub residual: f64,
    pub stop: StopReason,
    pub initial: InitCandidate,
    pub initial_flipped: bool,
    /// The start was built from row-normalized `Z`, which need not solve
    /// the relaxed problem.
    pub deformed_init: bool,
    /// Residual after every PODX and PODR step, in order.
    pub trace: Vec<f64>,
}

const DECREASE_TOL: f64 = 1e-12;

fn residual(x: &IndicatorMatrix, z: &Array2<f64>, q: &TransformQ) -> f64 {
    eigen::frobenius_norm(&(x.matrix() - &z.dot(&q.matrix())))
}

struct Start {
    candidate: InitCandidate,
    flipped: bool,
    q: TransformQ,
    score: f64,
}

/// Scale-free distance between `Y` and its nearest indicator.
fn start_score(y: &Array2<f64>) -> Result<f64> {
    let ny = eigen::frobenius_norm(y);
    let x = podx(y, &TransformQ::identity(y.ncols()))?;
    Ok(eigen::frobenius_norm(&(x.matrix() - y)) / ny)
}

fn starts(z1: &Array2<f64>, opts: &ClusterOptions) -> Result<Vec<Start>> {
    let k = z1.ncols();
    let wanted: Vec<InitCandidate> = match opts.init {
        InitStrategy::Best => InitCandidate::ALL.to_vec(),
        InitStrategy::Only(c) => vec![c],
    };
    let r1 = if wanted.iter().any(|c| c.diagonalized()) {
        match init_rotation_r1(z1) {
            Ok(q) => Some(q.r),
            Err(e) if opts.init != InitStrategy::Best => return Err(e),
            Err(_) => None,
        }
    } else {
        None
    };

    let mut out = Vec::new();
    for cand in wanted {
        let base_rot = if cand.diagonalized() {
            match &r1 {
                Some(r) => r.clone(),
                None => continue,
            }
        } else {
            Array2::eye(k)
        };
        let resc = rescale_variant(&z1.dot(&base_rot), opts.rescale);
        let rot = if cand.greedy() {
            init_rotation_r2(&resc.z, opts.greedy_first_row)?.r
        } else {
            Array2::eye(k)
        };
        let q0 = (&base_rot * &resc.column_scale).dot(&rot);
        let y = resc.z.dot(&rot);
        let mut best = Start {
            candidate: cand,
            flipped: false,
            score: start_score(&y)?,
            q: TransformQ::rotation(q0.clone()),
        };
        if opts.flip {
            let (yp, signs) = flip_columns(&y);
            if signs.iter().any(|&s| s < 0.0) {
                let score = start_score(&yp)?;
                if score < best.score {
                    best = Start {
                        candidate: cand,
                        flipped: true,
                        score,
                        q: TransformQ::rotation(&q0 * &signs),
                    };
                }
            }
        }
        out.push(best);
    }
    Ok(out)
}

/// Full K-way pipeline: relaxation, initialization and PODX/PODR
/// alternation.
pub fn cluster(g: &Graph, k: usize, mode: Mode, opts: &ClusterOptions) -> Result<KWayResult> {
    let sol = solve_relaxed(g, k, mode, opts.eigen_tol)?;
    let z = &sol.z;

    let mut best_start: Option<Start> = None;
    for s in starts(z, opts)? {
        if best_start.as_ref().is_none_or(|b| s.score < b.score) {
            best_start = Some(s);
        }
    }
    let start = best_start.expect("at least one initial candidate");

    let mut q = start.q.clone();
    let mut trace = Vec::new();
    let mut prev_labels: Option<Vec<usize>> = None;
    let mut phi_prev = f64::INFINITY;
    let mut best: Option<(IndicatorMatrix, TransformQ, f64)> = None;
    let mut iterations = 0;
    let stop = loop {
        let x = podx(z, &q)?;
        iterations += 1;
        let phi = residual(&x, z, &q);
        trace.push(phi);
        let repeated = prev_labels.as_deref() == Some(x.labels());
        let stalled = !repeated && phi > phi_prev - DECREASE_TOL;
        if !stalled && best.as_ref().is_none_or(|b| phi <= b.2) {
            best = Some((x.clone(), q.clone(), phi));
        }
        if repeated {
            break StopReason::Repeated;
        }
        if stalled {
            break StopReason::Stalled;
        }
        if iterations >= opts.max_iters {
            break StopReason::MaxIters;
        }
        let q_next = podr(&x, z, opts.podr_scaling)?;
        let phi_r = residual(&x, z, &q_next);
        trace.push(phi_r);
        if phi_r <= phi {
            best = Some((x.clone(), q_next.clone(), phi_r));
        }
        q = q_next;
        phi_prev = phi_r;
        prev_labels = Some(x.labels().to_vec());
    };

    let (x, q, residual) = best.expect("first step always recorded");
    let partition = x.partition();
    let objective = objective(g, &partition, mode)?;
    Ok(KWayResult {
        partition,
        objective,
        x,
        z: sol,
        q,
        iterations,
        residual,
        stop,
        initial: start.candidate,
        initial_flipped: start.flipped,
        deformed_init: opts.rescale == Rescale::RowNormalize,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn cliques_are_recovered() {
        let mut edges = Vec::new();
        for b in 0..3 {
            for i in 0..4 {
                for j in i + 1..4 {
                    edges.push((4 * b + i, 4 * b + j, 1.0));
                }
            }
        }
        edges.push((3, 4, 0.01));
        edges.push((7, 8, 0.01));
        let g = Graph::from_edges(12, &edges).unwrap();
        let r = cluster(&g, 3, Mode::Ncut, &ClusterOptions::default()).unwrap();
        assert_eq!(
            r.partition.canonical_blocks(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7], vec![8, 9, 10, 11]]
        );
    }

    #[test]
    fn disconnected_cliques_with_ratio_cut() {
        let g = Graph::from_edges(
            6,
            &[
                (0, 1, 1.0),
                (0, 2, 1.0),
                (1, 2, 1.0),
                (3, 4, 1.0),
                (3, 5, 1.0),
                (4, 5, 1.0),
            ],
        )
        .unwrap();
        let r = cluster(&g, 2, Mode::Rcut, &ClusterOptions::default()).unwrap();
        assert_eq!(r.objective, 0.0);
        assert_eq!(
            r.partition.canonical_blocks(),
            vec![vec![0, 1, 2], vec![3, 4, 5]]
        );
    }

    #[test]
    fn default_run_on_w1() {
        let r = cluster(&gallery::w1(), 4, Mode::Ncut, &ClusterOptions::default()).unwrap();
        assert_eq!(
            r.partition.canonical_blocks(),
            vec![vec![0, 1, 3], vec![2, 5], vec![4, 8], vec![6, 7]]
        );
        assert!(r.deformed_init);
        assert!(r.trace.windows(2).all(|w| w[1] <= w[0] + 1e-9));
    }
}
