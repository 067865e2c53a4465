mod common;

use ndarray::{Array1, Array2};
use proptest::prelude::*;

use speclap::eigen::{self, DEFAULT_TOL};
use speclap::kway::{self, ClusterOptions, IndicatorMatrix, Mode, Partition, PodrScaling};
use speclap::laplacian::{self, LaplacianKind};
use speclap::ncut2::{self, ncut2_value};
use speclap::{gallery, Graph, NodeSubset};

fn graph_strategy(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max, any::<u64>()).prop_map(|(m, seed)| {
        let mut rng = common::rng(seed);
        common::random_connected(&mut rng, m, 0.35)
    })
}

fn symmetric_strategy() -> impl Strategy<Value = Array2<f64>> {
    (1usize..=9, any::<u64>())
        .prop_map(|(n, seed)| common::random_symmetric(&mut common::rng(seed), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigendecomposition_reconstructs(a in symmetric_strategy()) {
        let e = eigen::sym_eigen(&a, DEFAULT_TOL).unwrap();
        let n = a.nrows();
        let back = e.vectors.dot(&Array2::from_diag(&e.values)).dot(&e.vectors.t());
        let scale = eigen::frobenius_norm(&a).max(1.0);
        prop_assert!(common::max_abs(&(&back - &a)) <= 1e-10 * scale);
        let gram = e.vectors.t().dot(&e.vectors);
        prop_assert!(common::max_abs(&(&gram - &Array2::<f64>::eye(n))) <= 1e-10);
        prop_assert!(e.values.windows(2).into_iter().all(|w| w[0] <= w[1]));
        for col in e.vectors.columns() {
            let big = col.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let first = col.iter().position(|v| v.abs() >= big * (1.0 - 1e-9)).unwrap();
            prop_assert!(col[first] > 0.0);
        }
    }

    #[test]
    fn svd_reconstructs((r, c, seed) in (1usize..=7, 1usize..=7, any::<u64>())) {
        let a = common::gaussian_matrix(&mut common::rng(seed), r, c);
        let s = eigen::svd(&a, DEFAULT_TOL).unwrap();
        let mut sigma = Array2::<f64>::zeros((r, c));
        for (i, &v) in s.s.iter().enumerate() {
            sigma[[i, i]] = v;
        }
        prop_assert!(common::max_abs(&(s.u.dot(&sigma).dot(&s.v.t()) - &a)) <= 1e-10);
        prop_assert!(common::max_abs(&(s.u.t().dot(&s.u) - Array2::<f64>::eye(r))) <= 1e-10);
        prop_assert!(common::max_abs(&(s.v.t().dot(&s.v) - Array2::<f64>::eye(c))) <= 1e-10);
        prop_assert!(s.s.windows(2).into_iter().all(|w| w[0] >= w[1]));
    }

    #[test]
    fn ncut_objective_matches_rayleigh_sum(g in graph_strategy(4, 10), k in 2usize..=4, seed in any::<u64>()) {
        let m = g.node_count();
        prop_assume!(k <= m);
        let mut rng = common::rng(seed);
        let labels: Vec<usize> = (0..m).map(|i| if i < k { i } else { rand::Rng::random_range(&mut rng, 0..k) }).collect();
        let p = Partition::new(labels, k).unwrap();
        let scales: Vec<f64> = (0..k).map(|j| 0.5 + j as f64).collect();
        let x = IndicatorMatrix::from_partition(&p, &scales).unwrap();
        for mode in [Mode::Ncut, Mode::Rcut] {
            let obj = kway::objective(&g, &p, mode).unwrap();
            let ray = kway::rayleigh_sum(&g, &x, mode).unwrap();
            prop_assert!((obj - ray).abs() <= 1e-10 * obj.max(1.0));
        }
    }

    #[test]
    fn two_way_rounding_is_scale_invariant(g in graph_strategy(4, 10), c in 0.1f64..50.0) {
        let relaxed = ncut2::solve_relaxed_2way(&g, DEFAULT_TOL).unwrap();
        let a = ncut2::round_2way(&g, &relaxed.z).unwrap();
        let b = ncut2::round_2way(&g, &(&relaxed.z * c)).unwrap();
        prop_assert_eq!(a.a.mask(), b.a.mask());
        prop_assert!(a.ncut >= relaxed.nu2 - 1e-9);
    }

    #[test]
    fn ratio_cut_identity_on_pipeline_output(g in graph_strategy(5, 10), k in 2usize..=3) {
        let r = kway::cluster(&g, k, Mode::Rcut, &ClusterOptions::default()).unwrap();
        let p = &r.partition;
        let recomputed: f64 = p.blocks().iter().map(|b| g.cut(b) / b.len() as f64).sum();
        prop_assert!((recomputed - r.objective).abs() <= 1e-9);
        prop_assert!(r.trace.windows(2).all(|w| w[1] <= w[0] + 1e-9));
    }
}

#[test]
fn two_way_indicator_normalizations_are_conjugate() {
    // Three scalings of x = (a on A, −βa elsewhere) with β = vol(A)/vol(Ā).
    let g = gallery::w1();
    let d = g.degrees(false);
    let a = NodeSubset::new(9, [0, 1, 3]).unwrap();
    let alpha = g.volume(&a, false);
    let total = d.sum();
    let beta = alpha / (total - alpha);
    for scale in [1.0, 1.0 / (alpha * (1.0 + beta)).sqrt(), 1.0 / alpha.sqrt()] {
        let x =
            Array1::from_iter((0..9).map(|i| if a.contains(i) { scale } else { -beta * scale }));
        assert!(x.dot(&d).abs() <= 1e-12);
        let l = laplacian::laplacian(&g, LaplacianKind::Unnormalized)
            .unwrap()
            .matrix;
        let q = x.dot(&l.dot(&x)) / x.dot(&(&x * &d));
        assert!((q - ncut2_value(&g, &a).unwrap()).abs() <= 1e-12);
    }
}

#[test]
fn relaxation_lower_bounds_two_way_ncut() {
    let mut rng = common::rng(11);
    for _ in 0..30 {
        let m = rand::Rng::random_range(&mut rng, 4..=12);
        let g = common::random_connected(&mut rng, m, 0.3);
        let nu2 = ncut2::solve_relaxed_2way(&g, DEFAULT_TOL).unwrap().nu2;
        let mut best = f64::INFINITY;
        for mask in 1..(1u32 << (m - 1)) {
            let a = NodeSubset::from_mask((0..m).map(|i| mask >> i & 1 == 1).collect());
            best = best.min(ncut2_value(&g, &a).unwrap());
        }
        assert!(best >= nu2 - 1e-9, "optimum {best} below ν₂ {nu2}");
        let got = ncut2::ncut2(&g, DEFAULT_TOL).unwrap().ncut;
        assert!(got >= best - 1e-12);
    }
}

#[test]
fn normalized_spectrum_bounds() {
    let mut rng = common::rng(12);
    for _ in 0..50 {
        let m = rand::Rng::random_range(&mut rng, 3..=10);
        let g = common::random_connected(&mut rng, m, 0.3);
        let v = eigen::sym_eigen(
            &laplacian::laplacian(&g, LaplacianKind::Sym).unwrap().matrix,
            DEFAULT_TOL,
        )
        .unwrap()
        .values;
        let bound = m as f64 / (m as f64 - 1.0);
        if g.edge_count() < m * (m - 1) / 2 {
            assert!(v[1] <= 1.0 + 1e-10, "ν₂ = {} above 1", v[1]);
        }
        assert!(v[1] > 1e-10);
        assert!(v[m - 1] >= bound - 1e-10);
    }
    let k = gallery::complete(7);
    let v = eigen::sym_eigen(
        &laplacian::laplacian(&k, LaplacianKind::Sym).unwrap().matrix,
        DEFAULT_TOL,
    )
    .unwrap()
    .values;
    assert!((v[1] - 7.0 / 6.0).abs() <= 1e-12);
}

#[test]
fn podr_never_increases_the_residual() {
    let mut rng = common::rng(13);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 5..=12);
        let k = rand::Rng::random_range(&mut rng, 2..=4);
        let z = common::gaussian_matrix(&mut rng, n, k);
        let q0 = kway::TransformQ::rotation(common::random_orthonormal(&mut rng, k, k));
        let x = kway::podx(&z, &q0).unwrap();
        let before = eigen::frobenius_norm(&(x.matrix() - &z.dot(&q0.matrix())));
        for scaling in [PodrScaling::RotationOnly, PodrScaling::Diagonal] {
            let q = kway::podr(&x, &z, scaling).unwrap();
            let after = eigen::frobenius_norm(&(x.matrix() - &z.dot(&q.matrix())));
            assert!(after <= before + 1e-9, "{scaling:?}: {after} > {before}");
        }
    }
}

#[test]
fn seven_cycles_balance() {
    assert!(
        !laplacian::is_balanced(&gallery::negative_seven_cycle())
            .unwrap()
            .balanced
    );
    assert!(
        !laplacian::is_balanced(&gallery::seven_cycle_one_negative())
            .unwrap()
            .balanced
    );
    let mut w = gallery::ring(7).weights().clone();
    for (i, j) in [(0, 1), (1, 2)] {
        w[[i, j]] = -1.0;
        w[[j, i]] = -1.0;
    }
    assert!(
        laplacian::is_balanced(&Graph::new(w).unwrap())
            .unwrap()
            .balanced
    );
}
