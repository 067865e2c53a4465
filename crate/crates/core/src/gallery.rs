//! Small named graphs with known spectra, handy for examples and tests.
//!
//! Node numbering in the descriptions is 1-based.

use ndarray::{array, Array2};

use crate::graph::Graph;

fn from_unit_edges(m: usize, one_based: &[(usize, usize)], weight: f64) -> Graph {
    let edges: Vec<_> = one_based
        .iter()
        .map(|&(i, j)| (i - 1, j - 1, weight))
        .collect();
    Graph::from_edges(m, &edges).expect("gallery graphs are valid")
}

/// Five nodes, seven unit edges; degrees (2, 4, 3, 3, 2).
pub fn g1_five_node() -> Graph {
    let a: Array2<f64> = array![
        [0., 1., 1., 0., 0.],
        [1., 0., 1., 1., 1.],
        [1., 1., 0., 1., 0.],
        [0., 1., 1., 0., 1.],
        [0., 1., 0., 1., 0.]
    ];
    Graph::new(a).expect("valid")
}

/// Four nodes with weights 3 and 6; degrees (12, 6, 9, 9).
pub fn four_node_w() -> Graph {
    let w: Array2<f64> = array![
        [0., 3., 6., 3.],
        [3., 0., 0., 3.],
        [6., 0., 0., 3.],
        [3., 3., 3., 0.]
    ];
    Graph::new(w).expect("valid")
}

/// The 4-cycle 1-2-4-3-1; its Laplacian spectrum is (0, 2, 2, 4).
pub fn square() -> Graph {
    from_unit_edges(4, &[(1, 2), (1, 3), (2, 4), (3, 4)], 1.0)
}

/// Path on `m` nodes with unit weights.
pub fn path(m: usize) -> Graph {
    let edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    from_unit_edges(m, &edges, 1.0)
}

/// Cycle on `m ≥ 3` nodes with unit weights.
pub fn ring(m: usize) -> Graph {
    let mut edges: Vec<_> = (1..m).map(|i| (i, i + 1)).collect();
    edges.push((1, m));
    from_unit_edges(m, &edges, 1.0)
}

/// Complete graph on `m` nodes with unit weights.
pub fn complete(m: usize) -> Graph {
    let mut w = Array2::<f64>::ones((m, m));
    w.diag_mut().fill(0.0);
    Graph::new(w).expect("valid")
}

/// Nine-node unit-weight graph used for the K-way clustering walkthrough.
/// Its best 4-way normalized cut is {7,8}, {5,9}, {1,2,4}, {3,6}.
pub fn w1() -> Graph {
    from_unit_edges(
        9,
        &[
            (1, 2),
            (1, 4),
            (2, 5),
            (3, 6),
            (4, 5),
            (5, 9),
            (6, 9),
            (7, 8),
            (8, 9),
        ],
        1.0,
    )
}

fn signed_from_laplacian(lbar: Array2<f64>) -> Graph {
    let mut w = -lbar;
    w.diag_mut().fill(0.0);
    Graph::new(w).expect("valid")
}

/// Balanced signed graph on nine nodes with bipartition
/// {1,2,4,7,8} / {3,5,6,9}.
pub fn signed_g1() -> Graph {
    signed_from_laplacian(array![
        [2., -1., 0., -1., 0., 0., 0., 0., 0.],
        [-1., 5., 1., -1., 1., 0., 0., -1., 0.],
        [0., 1., 3., 0., -1., -1., 0., 0., 0.],
        [-1., -1., 0., 5., 1., 0., -1., -1., 0.],
        [0., 1., -1., 1., 6., -1., 0., 1., -1.],
        [0., 0., -1., 0., -1., 4., 0., 1., -1.],
        [0., 0., 0., -1., 0., 0., 2., -1., 0.],
        [0., -1., 0., -1., 1., 1., -1., 6., 1.],
        [0., 0., 0., 0., -1., -1., 0., 1., 3.]
    ])
}

/// [`signed_g1`] with the signs of edges {2,4} and {2,5} swapped, which
/// creates a cycle with three negative edges; unbalanced.
pub fn signed_g2() -> Graph {
    signed_from_laplacian(array![
        [2., -1., 0., -1., 0., 0., 0., 0., 0.],
        [-1., 5., 1., 1., -1., 0., 0., -1., 0.],
        [0., 1., 3., 0., -1., -1., 0., 0., 0.],
        [-1., 1., 0., 5., 1., 0., -1., -1., 0.],
        [0., -1., -1., 1., 6., -1., 0., 1., -1.],
        [0., 0., -1., 0., -1., 4., 0., 1., -1.],
        [0., 0., 0., -1., 0., 0., 2., -1., 0.],
        [0., -1., 0., -1., 1., 1., -1., 6., 1.],
        [0., 0., 0., 0., -1., -1., 0., 1., 3.]
    ])
}

/// The 7-cycle with every edge weighted −1.
pub fn negative_seven_cycle() -> Graph {
    let mut edges: Vec<_> = (1..7).map(|i| (i, i + 1)).collect();
    edges.push((1, 7));
    from_unit_edges(7, &edges, -1.0)
}

/// The unit 7-cycle with the single edge {1,2} made negative.
pub fn seven_cycle_one_negative() -> Graph {
    let mut g = ring(7).weights().clone();
    g[[0, 1]] = -1.0;
    g[[1, 0]] = -1.0;
    Graph::new(g).expect("valid")
}
