//! Reference matrices, spectra and iterates for the gallery graphs,
//! rounded to four decimals. Assignments are 1-based block numbers.

#![allow(clippy::approx_constant)]

use ndarray::{array, Array2};

/// Laplacian of the five-node example graph.
pub fn l_g1_five() -> Array2<f64> {
    array![
        [2., -1., -1., 0., 0.],
        [-1., 4., -1., -1., -1.],
        [-1., -1., 3., -1., 0.],
        [0., -1., -1., 3., -1.],
        [0., -1., 0., -1., 2.]
    ]
}

/// Signed Laplacian of the balanced nine-node graph.
pub fn lbar_1() -> Array2<f64> {
    array![
        [2., -1., 0., -1., 0., 0., 0., 0., 0.],
        [-1., 5., 1., -1., 1., 0., 0., -1., 0.],
        [0., 1., 3., 0., -1., -1., 0., 0., 0.],
        [-1., -1., 0., 5., 1., 0., -1., -1., 0.],
        [0., 1., -1., 1., 6., -1., 0., 1., -1.],
        [0., 0., -1., 0., -1., 4., 0., 1., -1.],
        [0., 0., 0., -1., 0., 0., 2., -1., 0.],
        [0., -1., 0., -1., 1., 1., -1., 6., 1.],
        [0., 0., 0., 0., -1., -1., 0., 1., 3.]
    ]
}

/// Signed Laplacian of the unbalanced nine-node graph.
pub fn lbar_2() -> Array2<f64> {
    array![
        [2., -1., 0., -1., 0., 0., 0., 0., 0.],
        [-1., 5., 1., 1., -1., 0., 0., -1., 0.],
        [0., 1., 3., 0., -1., -1., 0., 0., 0.],
        [-1., 1., 0., 5., 1., 0., -1., -1., 0.],
        [0., -1., -1., 1., 6., -1., 0., 1., -1.],
        [0., 0., -1., 0., -1., 4., 0., 1., -1.],
        [0., 0., 0., -1., 0., 0., 2., -1., 0.],
        [0., -1., 0., -1., 1., 1., -1., 6., 1.],
        [0., 0., 0., 0., -1., -1., 0., 1., 3.]
    ]
}

pub const LBAR_1_SPECTRUM: [f64; 9] = [
    0.0, 1.4790, 1.7513, 2.7883, 4.3570, 4.8815, 6.2158, 7.2159, 7.3112,
];
pub const LBAR_2_SPECTRUM: [f64; 9] = [
    0.5175, 1.5016, 1.7029, 2.7058, 3.7284, 4.9604, 5.6026, 7.0888, 8.1921,
];

/// Relaxed solution for the nine-node graph with K = 4 (`‖Z‖_F = 100`).
pub fn w1_z() -> Array2<f64> {
    array![
        [-21.3146, -0.0000, 19.4684, -15.4303],
        [-4.1289, 0.0000, 16.7503, -15.4303],
        [-21.3146, 32.7327, -19.4684, -15.4303],
        [-4.1289, -0.0000, 16.7503, -15.4303],
        [19.7150, 0.0000, 9.3547, -15.4303],
        [-4.1289, 23.1455, -16.7503, -15.4303],
        [-21.3146, -32.7327, -19.4684, -15.4303],
        [-4.1289, -23.1455, -16.7503, -15.4303],
        [19.7150, -0.0000, -9.3547, -15.4303]
    ]
}

/// Initial transform (first initialization method).
pub fn w1_q1() -> Array2<f64> {
    array![
        [0.0, 0.6109, -0.3446, -0.7128],
        [-1.0000, 0.0000, 0.0000, -0.0000],
        [0.0000, 0.5724, 0.8142, 0.0969],
        [-0.0000, 0.5470, -0.4672, 0.6947]
    ]
}

pub fn w1_q2() -> Array2<f64> {
    array![
        [-0.0803, 0.8633, -0.4518, -0.2102],
        [-0.6485, 0.1929, 0.1482, 0.7213],
        [-0.5424, 0.0876, 0.5546, -0.6250],
        [-0.5281, -0.4581, -0.6829, -0.2119]
    ]
}

pub fn w1_q3() -> Array2<f64> {
    array![
        [-0.3201, 0.7992, -0.3953, -0.3201],
        [-0.7071, -0.0000, 0.0000, 0.7071],
        [-0.4914, -0.0385, 0.7181, -0.4914],
        [-0.3951, -0.5998, -0.5728, -0.3951]
    ]
}

pub const W1_X1: [usize; 9] = [3, 3, 4, 3, 2, 3, 1, 1, 1];
pub const W1_X2: [usize; 9] = [3, 3, 4, 3, 2, 4, 1, 1, 2];

/// Final K = 4 blocks, 1-based node ids.
pub const W1_FINAL_BLOCKS: [&[usize]; 4] = [&[7, 8], &[5, 9], &[1, 2, 4], &[3, 6]];

/// Initial `Z*Q` for K = 5.
pub fn w1_k5_zq() -> Array2<f64> {
    array![
        [-5.7716, -27.5934, 0.0000, -9.3618, -0.0000],
        [5.5839, -20.2099, -29.7044, -1.2471, -0.0000],
        [-2.3489, 1.1767, -0.0000, -29.5880, -29.7044],
        [5.5839, -20.2099, 29.7044, -1.2471, 0.0000],
        [21.6574, -7.2879, 0.0000, 8.1289, 0.0000],
        [8.5287, 4.5433, -0.0000, -18.6493, -21.0042],
        [-2.3489, 1.1767, -0.0000, -29.5880, 29.7044],
        [8.5287, 4.5433, -0.0000, -18.6493, 21.0042],
        [23.3020, 6.5363, -0.0000, -1.5900, -0.0000]
    ]
}

pub const W1_K5_X1: [usize; 9] = [3, 1, 2, 3, 1, 1, 5, 5, 1];
pub const W1_K5_X2: [usize; 9] = [3, 4, 2, 3, 1, 1, 5, 5, 1];

/// Counterexample for the diagonal fit: `ZᵀX` has a zero diagonal entry.
pub fn diag_fit_counterexample_x() -> Array2<f64> {
    array![[1., 0.], [0., 1.], [1., 0.]]
}

pub fn diag_fit_counterexample_z() -> Array2<f64> {
    array![[1., 1.], [1., 0.], [1., -1.]]
}

/// 1-based sides of the balanced nine-node graph.
pub const G1_SIDES: [&[usize]; 2] = [&[1, 2, 4, 7, 8], &[3, 5, 6, 9]];
