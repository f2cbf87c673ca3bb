//! Graph and incidence-configuration views of (0,1)-matrices.
//!
//! A configuration of type `n_kappa` is a linear incidence structure on `n`
//! points and `n` lines, `kappa` of each through each; its incidence matrix
//! is exactly a J₂-free (0,1)-matrix with all row and column sums `kappa`.
//! The configuration graph joins non-collinear point pairs and its adjacency
//! matrix is `theta` of the incidence matrix. The neighbourhood-geometry
//! operation goes the other way: it reinterprets an adjacency matrix as an
//! incidence matrix, which is legal exactly when the graph is C₄-free.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{is_j2_free, BinMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryError {
    /// Adjacency matrices must be symmetric.
    Asymmetric,
    /// Adjacency matrices must have a zero diagonal.
    NonzeroDiagonal,
    /// Incidence matrices need equal constant row and column sums.
    IrregularIncidence,
    /// Incidence matrices must be J₂-free (two points on two common lines).
    NotLinear,
    /// The graph contains a 4-cycle, so reinterpreting its adjacency matrix
    /// as an incidence structure would create a digon.
    Digon { points: (usize, usize) },
}

impl fmt::Display for GeometryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryError::Asymmetric => write!(f, "matrix is not symmetric"),
            GeometryError::NonzeroDiagonal => write!(f, "diagonal is not zero"),
            GeometryError::IrregularIncidence => {
                write!(f, "row and column sums are not one constant")
            }
            GeometryError::NotLinear => write!(f, "matrix is not J2-free"),
            GeometryError::Digon { points } => write!(
                f,
                "vertices {} and {} share two neighbours, giving a digon",
                points.0, points.1
            ),
        }
    }
}

impl core::error::Error for GeometryError {}

/// Simple undirected graph backed by a symmetric zero-diagonal [`BinMatrix`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: BinMatrix,
}

impl Graph {
    pub fn new(adj: BinMatrix) -> Result<Self, GeometryError> {
        if !adj.is_symmetric() {
            return Err(GeometryError::Asymmetric);
        }
        if !adj.has_zero_diagonal() {
            return Err(GeometryError::NonzeroDiagonal);
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.n()
    }

    pub fn adjacency(&self) -> &BinMatrix {
        &self.adj
    }

    pub fn into_adjacency(self) -> BinMatrix {
        self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj.degree(v)
    }

    pub fn degree_sequence(&self) -> Vec<u32> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// `Some(kappa)` when the graph is regular.
    pub fn regularity(&self) -> Option<u32> {
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// BFS distances from `v`; `u32::MAX` marks unreachable vertices.
    fn distances(&self, v: usize) -> Vec<u32> {
        let n = self.n();
        let mut dist = vec![u32::MAX; n];
        let mut queue = Vec::with_capacity(n);
        dist[v] = 0;
        queue.push(v);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let mut nbrs = self.adj.row_mask(u);
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push(w);
                }
            }
        }
        dist
    }
}

/// Incidence configuration of type `n_kappa`: rows are points, columns are
/// lines, J₂-free and `kappa`-regular both ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    incidence: BinMatrix,
    kappa: u32,
}

impl Configuration {
    pub fn new(incidence: BinMatrix) -> Result<Self, GeometryError> {
        let kappa = incidence
            .constant_sum()
            .ok_or(GeometryError::IrregularIncidence)?;
        if !is_j2_free(&incidence) {
            return Err(GeometryError::NotLinear);
        }
        Ok(Configuration { incidence, kappa })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.incidence.n()
    }

    #[inline]
    pub fn kappa(&self) -> u32 {
        self.kappa
    }

    pub fn incidence(&self) -> &BinMatrix {
        &self.incidence
    }

    /// Deficiency `n - kappa^2 + kappa - 1`: the number of points not
    /// collinear with a given point.
    pub fn deficiency(&self) -> i64 {
        crate::matrix::delta(self.n(), self.kappa as i64)
    }
}

/// Configuration graph (non-collinearity graph): vertices are the points,
/// edges the non-collinear pairs. Its adjacency matrix is `theta` of the
/// incidence matrix, and the graph is `deficiency`-regular.
pub fn configuration_graph(c: &Configuration) -> Graph {
    let n = c.n();
    let inc = c.incidence();
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in 0..n {
            // distinct points are non-collinear exactly when no line holds
            // both, i.e. the incidence rows share no column
            if i != j && inc.common_count(i, j) == 0 {
                rows[i] |= 1 << j;
            }
        }
    }
    let adj = BinMatrix::from_row_masks(n, rows).expect("order preserved");
    debug_assert_eq!(
        adj.to_int(),
        crate::matrix::theta(&inc.to_int()).expect("configurations have constant sums")
    );
    Graph::new(adj).expect("theta of an incidence matrix is symmetric, zero diagonal")
}

/// Neighbourhood geometry: reinterprets the adjacency matrix as an incidence
/// matrix (points and blocks are two copies of the vertex set). Defined
/// exactly when the graph is C₄-free; otherwise the offending pair is
/// reported as a digon.
pub fn neighbourhood_geometry(g: &Graph) -> Result<Configuration, GeometryError> {
    let adj = g.adjacency();
    for i in 0..g.n() {
        for j in i + 1..g.n() {
            if adj.common_count(i, j) >= 2 {
                return Err(GeometryError::Digon { points: (i, j) });
            }
        }
    }
    Configuration::new(adj.clone())
}

/// True when the neighbourhood geometry of `g` exists, i.e. `g` is C₄-free,
/// equivalently its adjacency matrix is J₂-free.
pub fn is_n_admissible(g: &Graph) -> bool {
    is_j2_free(g.adjacency())
}

/// Length of a shortest cycle; `None` for forests.
pub fn girth(g: &Graph) -> Option<u32> {
    // For each edge, the shortest cycle through it is 1 + the distance
    // between its endpoints in the graph without that edge.
    let n = g.n();
    let mut best: Option<u32> = None;
    let mut adj = g.adjacency().clone();
    for u in 0..n {
        for v in u + 1..n {
            if !adj.get(u, v) {
                continue;
            }
            adj.set(u, v, false);
            adj.set(v, u, false);
            let stripped = Graph { adj: adj.clone() };
            let d = stripped.distances(u)[v];
            adj.set(u, v, true);
            adj.set(v, u, true);
            if d != u32::MAX {
                let cycle = d + 1;
                if best.map_or(true, |b| cycle < b) {
                    best = Some(cycle);
                }
            }
        }
    }
    best
}

/// Largest eccentricity; `None` when the graph is disconnected.
pub fn diameter(g: &Graph) -> Option<u32> {
    let mut best = 0;
    for v in 0..g.n() {
        for d in g.distances(v) {
            if d == u32::MAX {
                return None;
            }
            best = best.max(d);
        }
    }
    Some(best)
}

/// True when every vertex lies within distance 2 of `v`.
pub fn is_centre_radius2(g: &Graph, v: usize) -> bool {
    g.distances(v).iter().all(|&d| d <= 2)
}

/// Exact triangle counts by brute force over all vertex triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCensus {
    pub total: u64,
    pub per_vertex: Vec<u32>,
}

pub fn triangle_census(g: &Graph) -> TriangleCensus {
    let n = g.n();
    let adj = g.adjacency();
    let mut total = 0u64;
    let mut per_vertex = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if !adj.get(i, j) {
                continue;
            }
            for k in j + 1..n {
                if adj.get(i, k) && adj.get(j, k) {
                    total += 1;
                    per_vertex[i] += 1;
                    per_vertex[j] += 1;
                    per_vertex[k] += 1;
                }
            }
        }
    }
    TriangleCensus { total, per_vertex }
}

/// Terwilliger test: the graph is non-complete and for every vertex pair at
/// distance exactly 2 the common neighbourhood induces a clique of size
/// exactly `mu`.
pub fn is_terwilliger(g: &Graph, mu: u32) -> bool {
    let n = g.n();
    let adj = g.adjacency();
    let complete = (0..n).all(|v| g.degree(v) as usize == n - 1);
    if complete {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if adj.get(u, v) {
                continue;
            }
            let common = adj.row_mask(u) & adj.row_mask(v);
            if common == 0 {
                continue; // distance > 2 (or disconnected)
            }
            if common.count_ones() != mu {
                return false;
            }
            // the common neighbourhood must induce a clique
            let mut rest = common;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let mut others = rest;
                while others != 0 {
                    let b = others.trailing_zeros() as usize;
                    others &= others - 1;
                    if !adj.get(a, b) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// True when the configuration admits the self-polarity `p_i <-> l_i`
/// without absolute elements, i.e. its incidence matrix is symmetric with a
/// zero diagonal.
pub fn has_polarity_form(c: &Configuration) -> bool {
    c.incidence().is_symmetric() && c.incidence().has_zero_diagonal()
}
