//! Weighted (possibly signed) undirected graphs and their combinatorics.

use std::collections::VecDeque;

use ndarray::{Array1, Array2};

use crate::error::{Error, Result};

/// An undirected graph on `m` nodes given by a symmetric weight matrix
/// with zero diagonal. Negative weights make the graph signed.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    w: Array2<f64>,
}

/// A set of nodes of a graph with `universe` nodes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSubset {
    mask: Vec<bool>,
    members: Vec<usize>,
}

/// Which weights [`Graph::links`] accumulates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignFilter {
    All,
    PositiveOnly,
    /// Sums `-w_ij` over negative weights, so the result is nonnegative.
    NegativeOnly,
}

/// Connected components labelled `0..count` in first-visit order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrientedEdge {
    pub source: usize,
    pub target: usize,
    pub weight: f64,
}

/// A graph with one chosen direction per edge.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedGraph {
    base: Graph,
    edges: Vec<OrientedEdge>,
}

/// Node-by-edge incidence matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceMatrix {
    b: Array2<f64>,
}

impl Graph {
    /// Validates and wraps a weight matrix. Asymmetric input, a nonzero
    /// diagonal or non-finite entries are rejected.
    pub fn new(w: Array2<f64>) -> Result<Self> {
        let (rows, cols) = w.dim();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        if rows == 0 {
            return Err(Error::EmptyGraph);
        }
        for i in 0..rows {
            for j in 0..rows {
                if !w[[i, j]].is_finite() {
                    return Err(Error::NonFinite { i, j });
                }
            }
            if w[[i, i]] != 0.0 {
                return Err(Error::NonZeroDiagonal(i));
            }
            for j in i + 1..rows {
                if w[[i, j]] != w[[j, i]] {
                    return Err(Error::NotSymmetric { i, j });
                }
            }
        }
        Ok(Graph { w })
    }

    /// Builds a graph from `(W + Wᵀ)/2`.
    pub fn symmetrize(w: &Array2<f64>) -> Result<Self> {
        let (rows, cols) = w.dim();
        if rows != cols {
            return Err(Error::NotSquare { rows, cols });
        }
        Graph::new((w + &w.t()) * 0.5)
    }

    /// Builds a graph from 0-based weighted edges.
    pub fn from_edges(m: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut w = Array2::<f64>::zeros((m, m));
        let mut seen = Array2::from_elem((m, m), false);
        for &(i, j, x) in edges {
            for idx in [i, j] {
                if idx >= m {
                    return Err(Error::IndexOutOfRange { index: idx, len: m });
                }
            }
            if i == j {
                return Err(Error::NonZeroDiagonal(i));
            }
            if seen[[i, j]] {
                return Err(Error::DuplicateEdge {
                    i: i.min(j),
                    j: i.max(j),
                });
            }
            seen[[i, j]] = true;
            seen[[j, i]] = true;
            w[[i, j]] = x;
            w[[j, i]] = x;
        }
        Graph::new(w)
    }

    /// Graph with `m` nodes and no edges.
    pub fn empty(m: usize) -> Result<Self> {
        Graph::new(Array2::zeros((m, m)))
    }

    pub fn node_count(&self) -> usize {
        self.w.nrows()
    }

    pub fn weights(&self) -> &Array2<f64> {
        &self.w
    }

    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.w[[i, j]]
    }

    /// Edges `(i, j, w_ij)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize, f64)> {
        let m = self.node_count();
        let mut out = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                let x = self.w[[i, j]];
                if x != 0.0 {
                    out.push((i, j, x));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn has_negative_weights(&self) -> bool {
        self.w.iter().any(|&x| x < 0.0)
    }

    /// First negative edge `(i, j)` with `i < j`, if any.
    pub(crate) fn first_negative_edge(&self) -> Option<(usize, usize)> {
        self.edges()
            .into_iter()
            .find(|e| e.2 < 0.0)
            .map(|(i, j, _)| (i, j))
    }

    /// Fails with `NegativeWeightInUnsignedMode` on the first negative edge.
    pub(crate) fn require_unsigned(&self) -> Result<()> {
        match self.first_negative_edge() {
            Some((i, j)) => Err(Error::NegativeWeightInUnsignedMode { i, j }),
            None => Ok(()),
        }
    }

    /// The graph with every weight replaced by its absolute value.
    pub fn abs(&self) -> Graph {
        Graph {
            w: self.w.mapv(f64::abs),
        }
    }

    /// Row sums of `W`, or of `|W|` when `signed` is set.
    pub fn degrees(&self, signed: bool) -> Array1<f64> {
        let m = self.node_count();
        Array1::from_iter((0..m).map(|i| {
            self.w
                .row(i)
                .iter()
                .map(|&x| if signed { x.abs() } else { x })
                .sum::<f64>()
        }))
    }

    pub fn volume(&self, a: &NodeSubset, signed: bool) -> f64 {
        self.check_subset(a);
        let d = self.degrees(signed);
        a.members().iter().map(|&i| d[i]).sum()
    }

    pub fn links(&self, a: &NodeSubset, b: &NodeSubset, filter: SignFilter) -> f64 {
        self.check_subset(a);
        self.check_subset(b);
        let mut total = 0.0;
        for &i in a.members() {
            for &j in b.members() {
                let x = self.w[[i, j]];
                total += match filter {
                    SignFilter::All => x,
                    SignFilter::PositiveOnly if x > 0.0 => x,
                    SignFilter::NegativeOnly if x < 0.0 => -x,
                    _ => 0.0,
                };
            }
        }
        total
    }

    /// `links(A, A)`.
    pub fn assoc(&self, a: &NodeSubset) -> f64 {
        self.links(a, a, SignFilter::All)
    }

    /// Total absolute weight of edges with exactly one endpoint in `a`.
    /// For unsigned graphs this is `links(A, Ā)`.
    pub fn cut(&self, a: &NodeSubset) -> f64 {
        self.check_subset(a);
        let mut total = 0.0;
        for &i in a.members() {
            for j in 0..self.node_count() {
                if !a.contains(j) {
                    total += self.w[[i, j]].abs();
                }
            }
        }
        total
    }

    pub fn connected_components(&self) -> Components {
        let m = self.node_count();
        let mut labels = vec![usize::MAX; m];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for root in 0..m {
            if labels[root] != usize::MAX {
                continue;
            }
            labels[root] = count;
            queue.push_back(root);
            while let Some(i) = queue.pop_front() {
                for (j, label) in labels.iter_mut().enumerate() {
                    if self.w[[i, j]] != 0.0 && *label == usize::MAX {
                        *label = count;
                        queue.push_back(j);
                    }
                }
            }
            count += 1;
        }
        Components { labels, count }
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count == 1
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let c = self.connected_components().count;
        if c > 1 {
            return Err(Error::Disconnected { components: c });
        }
        Ok(())
    }

    /// Canonical orientation: every edge `{i, j}` with `i < j` points from
    /// `i` to `j`, edges in lexicographic order.
    pub fn orient(&self) -> OrientedGraph {
        let edges = self
            .edges()
            .into_iter()
            .map(|(source, target, weight)| OrientedEdge {
                source,
                target,
                weight,
            })
            .collect();
        OrientedGraph {
            base: self.clone(),
            edges,
        }
    }

    /// 0/1 matrix with a one wherever `w_ij ≠ 0`.
    pub fn adjacency_matrix(&self) -> Array2<f64> {
        self.w.mapv(|x| if x != 0.0 { 1.0 } else { 0.0 })
    }

    fn check_subset(&self, a: &NodeSubset) {
        assert_eq!(
            a.universe(),
            self.node_count(),
            "subset is defined over {} nodes but the graph has {}",
            a.universe(),
            self.node_count()
        );
    }
}

impl NodeSubset {
    /// Subset of `0..universe`; indices must be in range and distinct.
    pub fn new(universe: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; universe];
        for i in indices {
            if i >= universe {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    len: universe,
                });
            }
            if mask[i] {
                return Err(Error::DuplicateIndex(i));
            }
            mask[i] = true;
        }
        Ok(Self::from_mask(mask))
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
            .collect();
        NodeSubset { mask, members }
    }

    pub fn full(universe: usize) -> Self {
        Self::from_mask(vec![true; universe])
    }

    pub fn empty(universe: usize) -> Self {
        Self::from_mask(vec![false; universe])
    }

    pub fn complement(&self) -> Self {
        Self::from_mask(self.mask.iter().map(|b| !b).collect())
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn universe(&self) -> usize {
        self.mask.len()
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }
}

impl OrientedGraph {
    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    /// Incidence matrix of the orientation. Edge `(i, j)` with `w > 0`
    /// gets `+√w` in row `i` and `-√w` in row `j`; with `w < 0` (signed
    /// only) both rows get `+√(-w)`.
    pub fn incidence_matrix(&self, signed: bool) -> Result<IncidenceMatrix> {
        let m = self.base.node_count();
        let mut b = Array2::<f64>::zeros((m, self.edges.len()));
        for (k, e) in self.edges.iter().enumerate() {
            if e.weight > 0.0 {
                let r = e.weight.sqrt();
                b[[e.source, k]] = r;
                b[[e.target, k]] = -r;
            } else {
                if !signed {
                    return Err(Error::NegativeWeightInUnsignedMode {
                        i: e.source,
                        j: e.target,
                    });
                }
                let r = (-e.weight).sqrt();
                b[[e.source, k]] = r;
                b[[e.target, k]] = r;
            }
        }
        Ok(IncidenceMatrix { b })
    }
}

impl IncidenceMatrix {
    pub fn matrix(&self) -> &Array2<f64> {
        &self.b
    }

    /// `B·Bᵀ`, which equals the (signed) Laplacian.
    pub fn gram(&self) -> Array2<f64> {
        self.b.dot(&self.b.t())
    }
}
