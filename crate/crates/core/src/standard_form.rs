//! Standard forms `S(P)` of adjacency matrices anchored at a radius-2
//! centre, and their Hoffman–Singleton normalisations.
//!
//! For a `kappa`-regular C₄-free graph on `kappa²+1` vertices with a vertex
//! `v0` lying in no triangle, label the neighbours of `v0` as `v_1 … v_k`
//! and the remaining `kappa(kappa-1)` vertices family by family as the
//! other neighbours `v_{i,1} … v_{i,kappa-1}` of each `v_i`. The adjacency
//! matrix then takes the block shape
//!
//! ```text
//!   0    | 1…1 | 0……0
//!   1    |  0  |  K          K = I_k ⊗ (1 … 1)
//!   ⋮    | Kᵀ  |  P
//! ```
//!
//! where `P` is symmetric of order `kappa²-kappa` with row and column sums
//! `kappa-1`, viewed as a `kappa × kappa` grid of blocks of order
//! `kappa-1`. An HS-form additionally has every diagonal block zero and
//! identity blocks in the first block row and column of `P`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::equiv::Permutation;
use crate::geometry::{triangle_census, Graph};
use crate::matrix::{is_j2_free, BinMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormError {
    /// `P` failed a precondition (order, symmetry, diagonal, sums).
    BadP(&'static str),
    /// Input is not a `kappa`-regular C₄-free graph on `kappa²+1` vertices.
    NotCandidate(&'static str),
    /// Every vertex lies in a triangle, so no anchor vertex exists.
    NoCentre,
    /// No relabelling reaches the zero-diagonal/identity block pattern.
    NotHs,
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::BadP(why) => write!(f, "invalid P block: {why}"),
            FormError::NotCandidate(why) => write!(f, "not decomposable: {why}"),
            FormError::NoCentre => {
                write!(f, "every vertex lies in a triangle; no radius-2 anchor")
            }
            FormError::NotHs => write!(f, "no relabelling reaches an HS-form"),
        }
    }
}

impl core::error::Error for FormError {}

/// A standard form: `kappa`, the block matrix `P`, and the assembled
/// `(kappa²+1)`-order matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardForm {
    kappa: usize,
    p: BinMatrix,
    assembled: BinMatrix,
}

impl StandardForm {
    #[inline]
    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn p(&self) -> &BinMatrix {
        &self.p
    }

    pub fn assembled(&self) -> &BinMatrix {
        &self.assembled
    }

    /// Block `P_{ij}` (0-indexed) of order `kappa - 1`.
    pub fn p_block(&self, i: usize, j: usize) -> BinMatrix {
        let q = self.kappa - 1;
        let mut out = BinMatrix::zero(q).expect("small order");
        for r in 0..q {
            for c in 0..q {
                if self.p.get(i * q + r, j * q + c) {
                    out.set(r, c, true);
                }
            }
        }
        out
    }

    /// Recognises an assembled standard form and splits off `P`; `None`
    /// when the block skeleton does not match exactly.
    pub fn from_assembled(a: &BinMatrix) -> Option<StandardForm> {
        let n = a.n();
        let kappa = (2usize..).find(|k| k * k + 1 >= n).filter(|k| k * k + 1 == n)?;
        let q = kappa - 1;
        let d = kappa * q;

        // row 0: exactly v_1 … v_kappa
        let middles = ((1u64 << (kappa + 1)) - 1) & !1;
        if a.row_mask(0) != middles {
            return None;
        }
        // middle rows: v_0 plus the own family, nothing else
        for i in 1..=kappa {
            let fam_start = 1 + kappa + (i - 1) * q;
            let fam = (((1u64 << q) - 1) << fam_start) | 1;
            if a.row_mask(i) != fam {
                return None;
            }
        }
        // bottom rows: exactly one middle bit (the own v_i), no v_0 bit
        let mut p_rows = vec![0u64; d];
        for s in 0..d {
            let row = a.row_mask(1 + kappa + s);
            let fam = s / q;
            if row & ((1 << (kappa + 1)) - 1) != 1 << (1 + fam) {
                return None;
            }
            p_rows[s] = row >> (1 + kappa);
        }
        let p = BinMatrix::from_row_masks(d, p_rows).ok()?;
        if !p.is_symmetric() || !p.has_zero_diagonal() || p.constant_sum() != Some(q as u32) {
            return None;
        }
        Some(StandardForm {
            kappa,
            p,
            assembled: a.clone(),
        })
    }
}

/// True when the block has at most one 1 in each row and each column.
pub fn is_partial_permutation(b: &BinMatrix) -> bool {
    (0..b.n()).all(|i| b.degree(i) <= 1 && b.col_mask(i).count_ones() <= 1)
}

/// True when the block is a full permutation matrix.
pub fn is_full_permutation(b: &BinMatrix) -> bool {
    (0..b.n()).all(|i| b.degree(i) == 1 && b.col_mask(i).count_ones() == 1)
}

pub fn is_zero_block(b: &BinMatrix) -> bool {
    (0..b.n()).all(|i| b.row_mask(i) == 0)
}

/// Builds the standard form from a valid `P`: symmetric, zero diagonal,
/// order `kappa²-kappa`, all row and column sums `kappa-1`.
pub fn assemble(p: &BinMatrix, kappa: usize) -> Result<StandardForm, FormError> {
    if kappa < 2 {
        return Err(FormError::BadP("kappa must be at least 2"));
    }
    let q = kappa - 1;
    let d = kappa * q;
    if p.n() != d {
        return Err(FormError::BadP("P must have order kappa^2 - kappa"));
    }
    if !p.is_symmetric() {
        return Err(FormError::BadP("P must be symmetric"));
    }
    if !p.has_zero_diagonal() {
        return Err(FormError::BadP("P must have a zero diagonal"));
    }
    if p.constant_sum() != Some(q as u32) {
        return Err(FormError::BadP("P must have row and column sums kappa - 1"));
    }

    let n = kappa * kappa + 1;
    let mut rows = vec![0u64; n];
    rows[0] = ((1u64 << (kappa + 1)) - 1) & !1;
    for i in 1..=kappa {
        let fam_start = 1 + kappa + (i - 1) * q;
        rows[i] = (((1u64 << q) - 1) << fam_start) | 1;
    }
    for s in 0..d {
        let fam = s / q;
        rows[1 + kappa + s] = (1 << (1 + fam)) | (p.row_mask(s) << (1 + kappa));
    }
    let assembled = BinMatrix::from_row_masks(n, rows).expect("order in range");
    Ok(StandardForm {
        kappa,
        p: p.clone(),
        assembled,
    })
}

/// Structural Hoffman–Singleton form test: exact standard-form skeleton,
/// zero diagonal blocks, and identity blocks in the first block row and
/// column of `P`.
pub fn is_hs_form(a: &BinMatrix) -> bool {
    let Some(form) = StandardForm::from_assembled(a) else {
        return false;
    };
    hs_blocks_ok(&form)
}

fn hs_blocks_ok(form: &StandardForm) -> bool {
    let kappa = form.kappa;
    for i in 0..kappa {
        if !is_zero_block(&form.p_block(i, i)) {
            return false;
        }
    }
    for j in 1..kappa {
        let b = form.p_block(0, j);
        let q = form.kappa - 1;
        let identity = (0..q).all(|r| b.row_mask(r) == 1 << r);
        if !identity {
            return false;
        }
        // symmetry of P makes the first block column the transpose
    }
    true
}

/// Decomposition result: the standard form plus the relabelling witness
/// (`conjugate_bin(input, witness) == form.assembled()`).
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub form: StandardForm,
    pub witness: Permutation,
}

/// Decomposes the adjacency matrix of a `kappa`-regular C₄-free graph on
/// `kappa²+1` vertices into a standard form.
///
/// Anchors are the vertices lying in no triangle (for such graphs these are
/// exactly the radius-2 centres). Every admissible anchor and every
/// labelling freedom (order of the families, order inside each family) is
/// evaluated and the assembled matrix with the lexicographically smallest
/// row-major bit string is kept, so the result is a deterministic,
/// conjugation-invariant representative.
pub fn decompose(a: &BinMatrix) -> Result<Decomposition, FormError> {
    let graph =
        Graph::new(a.clone()).map_err(|_| FormError::NotCandidate("not an adjacency matrix"))?;
    let kappa = graph
        .regularity()
        .ok_or(FormError::NotCandidate("graph is not regular"))? as usize;
    if kappa < 2 {
        return Err(FormError::NotCandidate("degree must be at least 2"));
    }
    if a.n() != kappa * kappa + 1 {
        return Err(FormError::NotCandidate("order must be kappa^2 + 1"));
    }
    if !is_j2_free(a) {
        return Err(FormError::NotCandidate("graph contains a 4-cycle"));
    }

    let census = triangle_census(&graph);
    let centres: Vec<usize> = (0..a.n())
        .filter(|&v| census.per_vertex[v] == 0)
        .collect();
    if centres.is_empty() {
        return Err(FormError::NoCentre);
    }

    let q = kappa - 1;
    let d = kappa * q;
    let family_orders = permutations(kappa);
    let member_orders = permutations(q);

    let mut best: Option<(BinMatrix, Vec<usize>)> = None;
    let mut second = vec![Vec::new(); kappa];
    let mut flat = vec![0usize; d];

    for &v0 in &centres {
        let nbrs: Vec<usize> = mask_vertices(a.row_mask(v0));
        debug_assert_eq!(nbrs.len(), kappa);
        for fam_order in &family_orders {
            for (fi, &oi) in fam_order.iter().enumerate() {
                let vi = nbrs[oi];
                second[fi] = mask_vertices(a.row_mask(vi) & !(1u64 << v0));
                debug_assert_eq!(second[fi].len(), q);
            }
            // mixed-radix sweep over the per-family member orders
            let total: usize = member_orders.len().pow(kappa as u32);
            for combo in 0..total {
                let mut idx = combo;
                for fi in 0..kappa {
                    let ord = &member_orders[idx % member_orders.len()];
                    idx /= member_orders.len();
                    for (t, &o) in ord.iter().enumerate() {
                        flat[fi * q + t] = second[fi][o];
                    }
                }
                let mut p_rows = vec![0u64; d];
                for s in 0..d {
                    let src = a.row_mask(flat[s]);
                    let mut row = 0u64;
                    for (t, &w) in flat.iter().enumerate() {
                        row |= ((src >> w) & 1) << t;
                    }
                    p_rows[s] = row;
                }
                let p = BinMatrix::from_row_masks(d, p_rows).expect("small order");
                if best.as_ref().map_or(true, |(bp, _)| p < *bp) {
                    let mut sigma = Vec::with_capacity(a.n());
                    sigma.push(v0);
                    sigma.extend(fam_order.iter().map(|&oi| nbrs[oi]));
                    sigma.extend_from_slice(&flat);
                    best = Some((p, sigma));
                }
            }
        }
    }

    let (p, sigma) = best.expect("centres is non-empty");
    let form = assemble(&p, kappa).expect("extracted P is valid");
    let witness = Permutation::from_image(sigma)
        .expect("labelling is a bijection")
        .inverse();
    Ok(Decomposition { form, witness })
}

/// Normalises a standard form to an HS-form when one is reachable.
///
/// An input already in HS-form is returned unchanged. Otherwise the
/// relabelling freedoms that preserve the skeleton are searched: a family
/// with zero diagonal block is moved first, the remaining families and the
/// first family's members are reordered freely, and each other family's
/// member order is then forced by requiring an identity block. Among the
/// relabellings that satisfy the HS predicate the lexicographically
/// smallest assembled matrix is returned.
pub fn to_hs_form(s: &StandardForm) -> Result<StandardForm, FormError> {
    if hs_blocks_ok(s) {
        return Ok(s.clone());
    }
    let kappa = s.kappa;
    let q = kappa - 1;
    let d = kappa * q;

    // relabelling can never zero a nonzero diagonal block
    if (0..kappa).any(|i| !is_zero_block(&s.p_block(i, i))) {
        return Err(FormError::NotHs);
    }

    let rest_orders = permutations(kappa - 1);
    let member_orders = permutations(q);
    let mut best: Option<BinMatrix> = None;

    for first in 0..kappa {
        let others: Vec<usize> = (0..kappa).filter(|&f| f != first).collect();
        for rest in &rest_orders {
            let fam_order: Vec<usize> = core::iter::once(first)
                .chain(rest.iter().map(|&i| others[i]))
                .collect();
            'member: for first_members in &member_orders {
                // position -> original P index, family by family
                let mut flat = vec![usize::MAX; d];
                for (t, &o) in first_members.iter().enumerate() {
                    flat[t] = fam_order[0] * q + o;
                }
                // force P'_{0,j} = I: position r of family j must hold the
                // unique neighbour (inside that family) of the r-th member
                // of the first family
                for (jpos, &fam) in fam_order.iter().enumerate().skip(1) {
                    let mut taken = 0u64;
                    for r in 0..q {
                        let row = s.p.row_mask(flat[r]);
                        let in_block = (row >> (fam * q)) & ((1 << q) - 1);
                        if in_block.count_ones() != 1 || taken & in_block != 0 {
                            continue 'member;
                        }
                        taken |= in_block;
                        flat[jpos * q + r] = fam * q + in_block.trailing_zeros() as usize;
                    }
                }
                let mut p_rows = vec![0u64; d];
                for s_idx in 0..d {
                    let src = s.p.row_mask(flat[s_idx]);
                    let mut row = 0u64;
                    for (t, &w) in flat.iter().enumerate() {
                        row |= ((src >> w) & 1) << t;
                    }
                    p_rows[s_idx] = row;
                }
                let p = BinMatrix::from_row_masks(d, p_rows).expect("small order");
                let candidate = assemble(&p, kappa).expect("relabelled P stays valid");
                if !hs_blocks_ok(&candidate) {
                    continue;
                }
                if best.as_ref().map_or(true, |b| candidate.assembled < *b) {
                    best = Some(candidate.assembled.clone());
                }
            }
        }
    }

    match best {
        Some(assembled) => {
            Ok(StandardForm::from_assembled(&assembled).expect("candidate is standard"))
        }
        None => Err(FormError::NotHs),
    }
}

fn mask_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// All permutations of `{0..k}` in lexicographic order.
fn permutations(k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // next_permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..k).rev().find(|&j| cur[j] > cur[i]).expect("exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
