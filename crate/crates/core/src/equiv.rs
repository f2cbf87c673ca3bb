//! Permutations acting on matrices by conjugation, and an exact canonical
//! form for (0,1)-matrices under simultaneous row/column permutation.
//!
//! Two matrices `A`, `B` are p-equivalent when `B = S⁻¹AS` for a permutation
//! matrix `S`. The convention fixed here (and relied upon by every test):
//! `conjugate(A, pi)[i][j] = A[pi⁻¹(i)][pi⁻¹(j)]`, i.e. `pi` sends the row
//! index of `A` to the row index of the result.
//!
//! The canonizer treats a matrix as a directed graph with loops (ordered
//! pairs), so asymmetric matrices canonize with the same machinery. It
//! refines an ordered partition by in/out counts until equitable, then
//! backtracks over the remaining cells, returning the lexicographically
//! smallest row-major bit string among the refinement-respecting
//! relabellings. The refinement and cell ordering use only label-free
//! invariants, so the result is constant on conjugation orbits; no hashing
//! shortcuts are involved.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::matrix::{BinMatrix, IntMatrix, MatrixError};

/// Bijection on `{0, …, n-1}` with matrix action by conjugation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds from the image table `i -> image[i]`, checking bijectivity.
    pub fn from_image(image: Vec<usize>) -> Result<Self, MatrixError> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(MatrixError::BadOrder { n });
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut image: Vec<usize> = (0..n).collect();
        image.swap(a, b);
        Permutation { image }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.image.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Permutation { image: inv }
    }

    /// Composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, MatrixError> {
        if self.n() != other.n() {
            return Err(MatrixError::OrderMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&v| self.image[v]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }
}

impl fmt::Display for Permutation {
    /// One-line cycle notation; fixed points are omitted, the identity
    /// prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut wrote = false;
        for start in 0..n {
            if seen[start] || self.image[start] == start {
                continue;
            }
            wrote = true;
            write!(f, "({start}")?;
            let mut cur = self.image[start];
            seen[start] = true;
            while cur != start {
                seen[cur] = true;
                write!(f, " {cur}")?;
                cur = self.image[cur];
            }
            write!(f, ")")?;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `S⁻¹AS` for the permutation matrix `S` of `pi`:
/// `result[i][j] = A[pi⁻¹(i)][pi⁻¹(j)]`.
pub fn conjugate(a: &IntMatrix, pi: &Permutation) -> Result<IntMatrix, MatrixError> {
    if a.n() != pi.n() {
        return Err(MatrixError::OrderMismatch {
            left: a.n(),
            right: pi.n(),
        });
    }
    let inv = pi.inverse();
    let n = a.n();
    let mut out = IntMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            out.set(i, j, a.get(inv.apply(i), inv.apply(j)));
        }
    }
    Ok(out)
}

/// Bit-matrix variant of [`conjugate`].
pub fn conjugate_bin(a: &BinMatrix, pi: &Permutation) -> Result<BinMatrix, MatrixError> {
    if a.n() != pi.n() {
        return Err(MatrixError::OrderMismatch {
            left: a.n(),
            right: pi.n(),
        });
    }
    let inv = pi.inverse();
    let n = a.n();
    let mut rows = vec![0u64; n];
    for i in 0..n {
        let src = a.row_mask(inv.apply(i));
        let mut row = 0u64;
        for j in 0..n {
            row |= ((src >> inv.apply(j)) & 1) << j;
        }
        rows[i] = row;
    }
    BinMatrix::from_row_masks(n, rows)
}

/// Canonical representative together with the permutation that reaches it.
#[derive(Clone, Debug)]
pub struct CanonicalCertificate {
    pub canonical: BinMatrix,
    /// `conjugate_bin(input, witness) == canonical`.
    pub witness: Permutation,
}

/// Exact canonical form under conjugation; total, and constant on
/// conjugation orbits.
pub fn canonical_form(a: &BinMatrix) -> CanonicalCertificate {
    let mut canon = Canonizer::new(a);
    canon.run();
    let (matrix, order) = canon.best.expect("search always reaches a leaf");
    // order[pos] = original vertex; the witness maps original -> position.
    let sigma = Permutation { image: order };
    let witness = sigma.inverse();
    debug_assert_eq!(conjugate_bin(a, &witness).unwrap(), matrix);
    CanonicalCertificate {
        canonical: matrix,
        witness,
    }
}

/// Decides p-equivalence; `Some(pi)` carries a verified witness with
/// `conjugate_bin(a, pi) == b`.
pub fn p_equivalent(a: &BinMatrix, b: &BinMatrix) -> Option<Permutation> {
    if a.n() != b.n() {
        return None;
    }
    // Cheap exact screen before canonizing: the multiset of
    // (row sum, column sum, diagonal) triples is conjugation-invariant.
    let mut pa = vertex_invariants(a);
    let mut pb = vertex_invariants(b);
    pa.sort_unstable();
    pb.sort_unstable();
    if pa != pb {
        return None;
    }
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.canonical != cb.canonical {
        return None;
    }
    // conj(a, wa) = conj(b, wb)  =>  b = conj(a, wb⁻¹ ∘ wa)
    let witness = cb.witness.inverse().compose(&ca.witness).expect("same order");
    debug_assert_eq!(conjugate_bin(a, &witness).unwrap(), *b);
    Some(witness)
}

fn vertex_invariants(a: &BinMatrix) -> Vec<(u32, u32, bool, u32)> {
    // the fourth component counts closed out-out wedges at v (twice the
    // triangle count when the matrix is symmetric); it is label-free, so it
    // may seed the canonizer's initial partition
    (0..a.n())
        .map(|v| {
            let row = a.row_mask(v);
            let mut wedges = 0;
            let mut nbrs = row;
            while nbrs != 0 {
                let u = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                wedges += (row & a.row_mask(u)).count_ones();
            }
            (a.degree(v), a.col_mask(v).count_ones(), a.get(v, v), wedges)
        })
        .collect()
}

/// Ordered-partition search state.
struct Canonizer<'a> {
    a: &'a BinMatrix,
    cols: Vec<u64>,
    n: usize,
    best: Option<(BinMatrix, Vec<usize>)>,
}

impl<'a> Canonizer<'a> {
    fn new(a: &'a BinMatrix) -> Self {
        let n = a.n();
        let cols = (0..n).map(|j| a.col_mask(j)).collect();
        Canonizer {
            a,
            cols,
            n,
            best: None,
        }
    }

    fn run(&mut self) {
        let mut invs = vertex_invariants(self.a);
        // initial cells grouped by invariant, ordered by invariant value
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&v| invs[v]);
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for v in order {
            match cells.last_mut() {
                Some(cell) if invs[cell[0]] == invs[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        invs.clear();
        self.search(cells);
    }

    fn search(&mut self, mut cells: Vec<Vec<usize>>) {
        self.refine(&mut cells);
        if cells.iter().all(|c| c.len() == 1) {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            self.offer(order);
            return;
        }
        if self.quotient_constant(&cells) {
            // every completion yields the same matrix
            let order: Vec<usize> = cells.iter().flatten().copied().collect();
            self.offer(order);
            return;
        }
        // branch on the smallest non-singleton cell (earliest on ties)
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
            .expect("non-discrete");
        let members = cells[target].clone();
        for &v in &members {
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (idx, cell) in cells.iter().enumerate() {
                if idx == target {
                    child.push(vec![v]);
                    child.push(cell.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(cell.clone());
                }
            }
            self.search(child);
        }
    }

    /// Refines to an equitable ordered partition. Cells split by the vector
    /// of (out-count, in-count) signatures towards every cell, sub-cells
    /// ordered by signature; both are label-free, so refinement commutes
    /// with conjugation.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect();
            // signature of v: per cell, out-count and in-count packed into
            // one word (counts fit in 7 bits each at order <= 64)
            let sig = |v: usize| -> Vec<u32> {
                masks
                    .iter()
                    .map(|&m| {
                        ((self.a.row_mask(v) & m).count_ones() << 7)
                            | (self.cols[v] & m).count_ones()
                    })
                    .collect()
            };
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut tagged: Vec<(Vec<u32>, usize)> =
                    cell.iter().map(|&v| (sig(v), v)).collect();
                tagged.sort();
                let mut groups: Vec<Vec<usize>> = Vec::new();
                let mut prev: Option<&[u32]> = None;
                for (s, v) in tagged.iter() {
                    if prev == Some(s.as_slice()) {
                        groups.last_mut().expect("prev set").push(*v);
                    } else {
                        groups.push(vec![*v]);
                        prev = Some(s.as_slice());
                    }
                }
                if groups.len() > 1 {
                    split = true;
                }
                next.extend(groups);
            }
            *cells = next;
            if !split {
                return;
            }
        }
    }

    /// True when every cell pair induces a constant submatrix (diagonal
    /// handled separately), so the within-cell order cannot matter.
    fn quotient_constant(&self, cells: &[Vec<usize>]) -> bool {
        for cu in cells {
            for cw in cells {
                let mut val: Option<bool> = None;
                let mut diag: Option<bool> = None;
                for &u in cu {
                    for &w in cw {
                        let e = self.a.get(u, w);
                        if u == w {
                            match diag {
                                None => diag = Some(e),
                                Some(d) if d == e => {}
                                _ => return false,
                            }
                        } else {
                            match val {
                                None => val = Some(e),
                                Some(x) if x == e => {}
                                _ => return false,
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Evaluates the leaf labelled by `order[pos] = vertex`, keeping the
    /// smallest row-major bit string.
    fn offer(&mut self, order: Vec<usize>) {
        let n = self.n;
        let mut rows = vec![0u64; n];
        for (i, &u) in order.iter().enumerate() {
            let src = self.a.row_mask(u);
            let mut row = 0u64;
            for (j, &w) in order.iter().enumerate() {
                row |= ((src >> w) & 1) << j;
            }
            rows[i] = row;
        }
        let candidate = BinMatrix::from_row_masks(n, rows).expect("order in range");
        match &self.best {
            Some((best, _)) if *best <= candidate => {}
            _ => self.best = Some((candidate, order)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::matrix::{theta, theta_iterate};
    use crate::testgen;

    #[test]
    fn conjugate_by_identity() {
        let a = corpus::named("petersen_hs").unwrap().matrix;
        let id = Permutation::identity(10);
        assert_eq!(conjugate_bin(&a, &id).unwrap(), a);
    }

    #[test]
    fn conjugate_moves_an_entry() {
        let a = BinMatrix::from_row_masks(2, vec![0b10, 0b00]).unwrap(); // 1 at (0,1)
        let swap = Permutation::transposition(2, 0, 1);
        let b = conjugate_bin(&a, &swap).unwrap();
        let expect = BinMatrix::from_row_masks(2, vec![0b00, 0b01]).unwrap(); // 1 at (1,0)
        assert_eq!(b, expect);
    }

    #[test]
    fn conjugating_a_solution_stays_a_solution() {
        let a = corpus::named("petersen_hs").unwrap().matrix;
        let mut rng = testgen::SplitMix64::new(7);
        for _ in 0..20 {
            let pi = testgen::permutation(10, &mut rng);
            let b = conjugate_bin(&a, &pi).unwrap();
            let bi = b.to_int();
            assert_eq!(theta(&bi).unwrap(), bi);
        }
    }

    #[test]
    fn canonical_constant_on_orbits() {
        let a = corpus::named("a2_t2").unwrap().matrix;
        let base = canonical_form(&a);
        assert_eq!(conjugate_bin(&a, &base.witness).unwrap(), base.canonical);
        let mut rng = testgen::SplitMix64::new(99);
        for _ in 0..100 {
            let pi = testgen::permutation(10, &mut rng);
            let b = conjugate_bin(&a, &pi).unwrap();
            let cert = canonical_form(&b);
            assert_eq!(cert.canonical, base.canonical);
            assert_eq!(conjugate_bin(&b, &cert.witness).unwrap(), cert.canonical);
        }
    }

    #[test]
    fn canonical_is_idempotent() {
        let a = corpus::named("a1_t1").unwrap().matrix;
        let c1 = canonical_form(&a).canonical;
        let c2 = canonical_form(&c1).canonical;
        assert_eq!(c1, c2);
    }

    #[test]
    fn canonical_handles_degenerate_matrices() {
        // all-ones, empty, and identity have full symmetric groups
        for m in [
            BinMatrix::from_row_masks(6, vec![0b111111; 6]).unwrap(),
            BinMatrix::zero(6).unwrap(),
            BinMatrix::from_row_masks(3, vec![0b001, 0b010, 0b100]).unwrap(),
        ] {
            let cert = canonical_form(&m);
            assert_eq!(cert.canonical, m);
        }
    }

    #[test]
    fn t1_and_t2_are_not_equivalent() {
        // independent oracle: triangle counts differ (2 vs 3), so the two
        // matrices cannot be conjugate
        use crate::geometry::{triangle_census, Graph};
        let a1 = corpus::named("a1_t1").unwrap().matrix;
        let a2 = corpus::named("a2_t2").unwrap().matrix;
        let t1 = triangle_census(&Graph::new(a1.clone()).unwrap());
        let t2 = triangle_census(&Graph::new(a2.clone()).unwrap());
        assert_eq!(t1.total, 2);
        assert_eq!(t2.total, 3);
        assert_ne!(
            canonical_form(&a1).canonical,
            canonical_form(&a2).canonical
        );
        assert!(p_equivalent(&a1, &a2).is_none());
    }

    #[test]
    fn theta_of_t1_is_the_petersen_graph() {
        let a1 = corpus::named("a1_t1").unwrap().matrix;
        let pet = corpus::named("petersen_hs").unwrap().matrix;
        let th = BinMatrix::from_int(&theta(&a1.to_int()).unwrap()).unwrap();
        assert_ne!(th, a1);
        let w = p_equivalent(&th, &pet).expect("theta(A1) is a Petersen labelling");
        assert_eq!(conjugate_bin(&th, &w).unwrap(), pet);
    }

    #[test]
    fn p_equivalent_self_gives_identity_class_witness() {
        let a = corpus::named("c5_hs").unwrap().matrix;
        let w = p_equivalent(&a, &a).unwrap();
        assert_eq!(conjugate_bin(&a, &w).unwrap(), a);
    }

    #[test]
    fn scrambled_cycle_is_equivalent() {
        // C5 in cycle order 0-1-2-3-4-0 vs the HS-form labelling
        let mut m = BinMatrix::zero(5).unwrap();
        for i in 0..5 {
            let j = (i + 1) % 5;
            m.set(i, j, true);
            m.set(j, i, true);
        }
        let hs = corpus::named("c5_hs").unwrap().matrix;
        assert_eq!(
            canonical_form(&m).canonical,
            canonical_form(&hs).canonical
        );
    }

    #[test]
    fn agrees_with_factorial_scan_on_small_orders() {
        let mut rng = testgen::SplitMix64::new(2024);
        for trial in 0..200 {
            let n = 2 + (trial % 6);
            let a = testgen::random_bin(n, &mut rng);
            let b = if trial % 3 == 0 {
                let pi = testgen::permutation(n, &mut rng);
                conjugate_bin(&a, &pi).unwrap()
            } else {
                testgen::random_bin(n, &mut rng)
            };
            let fast = p_equivalent(&a, &b);
            let slow = testgen::brute_force_p_equivalent(&a, &b);
            assert_eq!(fast.is_some(), slow.is_some(), "disagreement at trial {trial}");
            if let Some(w) = fast {
                assert_eq!(conjugate_bin(&a, &w).unwrap(), b);
            }
        }
    }

    #[test]
    fn equivalence_relation_on_random_triples() {
        let mut rng = testgen::SplitMix64::new(5150);
        for _ in 0..40 {
            let n = 3 + (rng.below(5) as usize);
            let a = testgen::random_bin(n, &mut rng);
            let b = conjugate_bin(&a, &testgen::permutation(n, &mut rng)).unwrap();
            let c = conjugate_bin(&b, &testgen::permutation(n, &mut rng)).unwrap();
            assert!(p_equivalent(&a, &a).is_some());
            assert_eq!(p_equivalent(&a, &b).is_some(), p_equivalent(&b, &a).is_some());
            assert!(p_equivalent(&a, &b).is_some() && p_equivalent(&b, &c).is_some());
            assert!(p_equivalent(&a, &c).is_some());
        }
    }

    #[test]
    fn solution_invariance_under_conjugation() {
        let a2 = corpus::named("a2_t2").unwrap().matrix;
        let mut rng = testgen::SplitMix64::new(17);
        for _ in 0..10 {
            let pi = testgen::permutation(10, &mut rng);
            let b = conjugate_bin(&a2, &pi).unwrap().to_int();
            assert_eq!(theta_iterate(&b, 3).unwrap(), b);
            assert_ne!(theta(&b).unwrap(), b);
        }
    }
}
