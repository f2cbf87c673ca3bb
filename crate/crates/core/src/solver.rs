//! Orbit analysis under repeated `theta`, exhaustive classification of the
//! fixed-point classes for small `kappa`, and the integer sweep for the
//! deficiency fixed-point equation.
//!
//! The classification enumerates candidate standard forms `S(P)` row by row
//! over the block matrix `P` (symmetric mirroring, at most one 1 per row
//! and column of every block, no shared column between rows of the same
//! family, at most one shared column across families). These constraints
//! are exactly J₂-freeness of the assembled matrix, so every solution class
//! is met: a solution is symmetric, zero-diagonal and J₂-free, and for
//! `kappa <= 4` owns a triangle-free vertex, hence a standard form.
//! Completed candidates are tested for `theta^m(S) = S` and deduplicated by
//! canonical form.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::equiv::canonical_form;
use crate::matrix::{BinMatrix, MatrixError};
use crate::standard_form::{decompose, to_hs_form};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolverError {
    /// Classification is implemented for `kappa` in 2..=4 (census: 2..=3).
    UnsupportedKappa { kappa: usize },
    /// `m` must lie in 1..=8.
    UnsupportedM { m: u32 },
    /// Orbit input must be a (0,1)-matrix with constant row and column sums.
    NotInClass,
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::UnsupportedKappa { kappa } => {
                write!(f, "kappa = {kappa} is outside the supported range")
            }
            SolverError::UnsupportedM { m } => {
                write!(f, "m = {m} is outside 1..=8")
            }
            SolverError::NotInClass => {
                write!(f, "input is not a (0,1)-matrix with constant sums")
            }
        }
    }
}

impl core::error::Error for SolverError {}

impl From<MatrixError> for SolverError {
    fn from(_: MatrixError) -> Self {
        SolverError::NotInClass
    }
}

/// One step of `theta` specialised to (0,1)-matrices with constant sums:
/// the result has zero diagonal and off-diagonal entries `1 - common(i,j)`,
/// so it stays a (0,1)-matrix exactly when the input is J₂-free.
pub(crate) fn theta_binary(a: &BinMatrix) -> Option<BinMatrix> {
    debug_assert!(a.constant_sum().is_some());
    let n = a.n();
    let mut rows = vec![0u64; n];
    for i in 0..n {
        for j in i + 1..n {
            match a.common_count(i, j) {
                0 => {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                1 => {}
                _ => return None,
            }
        }
    }
    Some(BinMatrix::from_row_masks(n, rows).expect("order preserved"))
}

/// The trace of repeated `theta` applications.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    /// The iterates that stayed inside the (0,1) class, input first.
    pub iterates: Vec<BinMatrix>,
    pub outcome: OrbitOutcome,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitOutcome {
    /// The iteration entered a cycle: iterate `preperiod + period` equals
    /// iterate `preperiod`.
    Cycle { preperiod: usize, period: usize },
    /// Iterate `step` left the (0,1) class; once out it can never return,
    /// so no cycle through the input exists.
    LeftClass { step: usize },
    /// Inconclusive after `steps` applications.
    StepLimit { steps: usize },
}

impl OrbitReport {
    pub fn period(&self) -> Option<usize> {
        match self.outcome {
            OrbitOutcome::Cycle { period, .. } => Some(period),
            _ => None,
        }
    }

    pub fn preperiod(&self) -> Option<usize> {
        match self.outcome {
            OrbitOutcome::Cycle { preperiod, .. } => Some(preperiod),
            _ => None,
        }
    }

    pub fn leaves_class_at(&self) -> Option<usize> {
        match self.outcome {
            OrbitOutcome::LeftClass { step } => Some(step),
            _ => None,
        }
    }

    /// Fixed point of `theta^m` for the given `m`.
    pub fn solves(&self, m: u32) -> bool {
        matches!(
            self.outcome,
            OrbitOutcome::Cycle { preperiod: 0, period } if m as usize % period == 0
        )
    }
}

/// Iterates `theta` from a (0,1)-matrix with constant sums until the orbit
/// closes, an iterate leaves the class, or `max_steps` is exhausted.
///
/// Leaving the class is conclusive: an iterate with an entry outside {0,1}
/// forces strictly negative diagonal entries ever after, so the orbit can
/// never return to the (0,1) input.
pub fn orbit(a: &BinMatrix, max_steps: usize) -> Result<OrbitReport, SolverError> {
    if a.constant_sum().is_none() {
        return Err(SolverError::NotInClass);
    }
    let mut iterates = vec![a.clone()];
    let mut index: BTreeMap<BinMatrix, usize> = BTreeMap::new();
    index.insert(a.clone(), 0);
    let mut cur = a.clone();
    for step in 1..=max_steps {
        match theta_binary(&cur) {
            None => {
                return Ok(OrbitReport {
                    iterates,
                    outcome: OrbitOutcome::LeftClass { step },
                });
            }
            Some(next) => {
                if let Some(&first) = index.get(&next) {
                    return Ok(OrbitReport {
                        iterates,
                        outcome: OrbitOutcome::Cycle {
                            preperiod: first,
                            period: step - first,
                        },
                    });
                }
                index.insert(next.clone(), step);
                iterates.push(next.clone());
                cur = next;
            }
        }
    }
    Ok(OrbitReport {
        iterates,
        outcome: OrbitOutcome::StepLimit { steps: max_steps },
    })
}

/// Exact test of `theta^m(A) = A`; false for inputs outside the class.
pub fn is_solution(a: &BinMatrix, m: u32) -> bool {
    if m == 0 || a.constant_sum().is_none() {
        return false;
    }
    let mut cur = a.clone();
    for step in 1..=m {
        match theta_binary(&cur) {
            None => return false,
            Some(next) => cur = next,
        }
        if cur == *a {
            // first return at `step`: the fundamental period divides m or
            // the equation fails
            return m % step == 0;
        }
    }
    false
}

/// A p-equivalence class of solutions of `theta^m(A) = A`.
#[derive(Debug, Clone)]
pub struct SolutionClass {
    /// Canonical form of the class (sort key and identity).
    pub canonical: BinMatrix,
    /// HS-form representative when one is reachable, otherwise the
    /// deterministic standard form.
    pub representative: BinMatrix,
    pub kappa: usize,
    pub m: u32,
    pub fundamental_period: usize,
    pub names: Vec<&'static str>,
}

const MAX_M: u32 = 8;

fn check_kappa_m(kappa: usize, m: u32) -> Result<(), SolverError> {
    if !(2..=4).contains(&kappa) {
        return Err(SolverError::UnsupportedKappa { kappa });
    }
    if !(1..=MAX_M).contains(&m) {
        return Err(SolverError::UnsupportedM { m });
    }
    Ok(())
}

/// Complete list of p-equivalence classes of (0,1)-matrices with constant
/// sums `kappa` on `kappa²+1` rows solving `theta^m(A) = A`, for
/// `kappa` in 2..=4 and `m` in 1..=8. Deterministic: classes are sorted by
/// canonical form.
pub fn classify(kappa: usize, m: u32) -> Result<Vec<SolutionClass>, SolverError> {
    let solutions = solutions_in_roots(kappa, m, 0, 1)?;
    Ok(classes_from_solutions(kappa, m, &solutions))
}

/// Number of first-row branches of the standard-form search; used to split
/// the tree across workers.
pub fn root_count(kappa: usize) -> Result<usize, SolverError> {
    check_kappa_m(kappa, 1)?;
    let cfg = PSearch::new(kappa);
    Ok(cfg.row_candidates_at_root().len())
}

/// Runs the standard-form search over the root branches with index
/// congruent to `offset` modulo `stride`, returning the raw solution
/// matrices found (not yet deduplicated).
pub fn solutions_in_roots(
    kappa: usize,
    m: u32,
    offset: usize,
    stride: usize,
) -> Result<Vec<BinMatrix>, SolverError> {
    check_kappa_m(kappa, m)?;
    assert!(stride > 0 && offset < stride);
    let mut search = PSearch::new(kappa);
    let mut out = Vec::new();
    search.run(offset, stride, &mut |s| {
        if is_solution(s, m) {
            out.push(s.clone());
        }
    });
    Ok(out)
}

/// Deduplicates raw solutions by canonical form and wraps them as classes;
/// the output is independent of the order and multiplicity of `solutions`.
pub fn classes_from_solutions(
    kappa: usize,
    m: u32,
    solutions: &[BinMatrix],
) -> Vec<SolutionClass> {
    let mut canon: BTreeSet<BinMatrix> = BTreeSet::new();
    for s in solutions {
        canon.insert(canonical_form(s).canonical);
    }
    let corpus_names: Vec<(&'static str, BinMatrix)> = [
        ("c5_hs", &["c5"][..]),
        ("petersen_hs", &["petersen", "desargues"][..]),
        ("a2_t2", &["t2_10_3F"][..]),
        ("s_1971", &["cfg_1971"][..]),
    ]
    .iter()
    .flat_map(|(file, names)| {
        let matrix = crate::corpus::named(file).expect("corpus name").matrix;
        if matrix.n() == kappa * kappa + 1 {
            let c = canonical_form(&matrix).canonical;
            names.iter().map(move |&n| (n, c.clone())).collect()
        } else {
            Vec::new()
        }
    })
    .collect();

    canon
        .into_iter()
        .map(|canonical| {
            let report = orbit(&canonical, MAX_M as usize + 1).expect("solutions are in class");
            let fundamental_period = report.period().expect("solutions cycle through the input");
            debug_assert_eq!(report.preperiod(), Some(0));
            let representative = match decompose(&canonical) {
                Ok(dec) => match to_hs_form(&dec.form) {
                    Ok(hs) => hs.assembled().clone(),
                    Err(_) => dec.form.assembled().clone(),
                },
                // unreachable for kappa <= 4 solutions; keep the canonical
                // matrix rather than fail
                Err(_) => canonical.clone(),
            };
            let names = corpus_names
                .iter()
                .filter(|(_, c)| *c == canonical)
                .map(|(n, _)| *n)
                .collect();
            SolutionClass {
                canonical,
                representative,
                kappa,
                m,
                fundamental_period,
                names,
            }
        })
        .collect()
}

/// Row-by-row enumeration of the block matrices `P` whose assembled
/// standard form is a J₂-free adjacency matrix.
struct PSearch {
    kappa: usize,
    q: usize,
    d: usize,
    rows: Vec<u32>,
    forced: Vec<u32>,
    used: Vec<u32>,
    scratch: Vec<u32>,
}

impl PSearch {
    fn new(kappa: usize) -> Self {
        let q = kappa - 1;
        let d = kappa * q;
        PSearch {
            kappa,
            q,
            d,
            rows: vec![0; d],
            forced: vec![0; d],
            used: vec![0; kappa],
            scratch: Vec::new(),
        }
    }

    #[inline]
    fn block_mask(&self, f: usize) -> u32 {
        (((1u32 << self.q) - 1) << (f * self.q)) & self.full_mask()
    }

    #[inline]
    fn full_mask(&self) -> u32 {
        (1u32 << self.d) - 1
    }

    /// Candidate completions for row `r`: bits in columns above `r`, at
    /// most one per block, avoiding blocks already hit by the forced
    /// prefix and columns used by committed same-family rows.
    fn candidates(&self, r: usize, need: usize) -> Vec<u32> {
        let fam = r / self.q;
        let mut allowed = self.full_mask() & !((1u32 << (r + 1)) - 1) & !self.used[fam];
        for g in 0..self.kappa {
            if self.forced[r] & self.block_mask(g) != 0 {
                allowed &= !self.block_mask(g);
            }
        }
        let mut out = Vec::new();
        // product over blocks in order; deterministic ascending generation
        fn gen(
            cfg: &PSearch,
            g: usize,
            chosen: u32,
            picked: usize,
            need: usize,
            allowed: u32,
            out: &mut Vec<u32>,
        ) {
            if picked == need {
                out.push(chosen);
                return;
            }
            if g == cfg.kappa || cfg.kappa - g < need - picked {
                return;
            }
            // skip this block
            gen(cfg, g + 1, chosen, picked, need, allowed, out);
            // or pick one of its columns
            let mut cols = allowed & cfg.block_mask(g);
            while cols != 0 {
                let c = cols & cols.wrapping_neg();
                cols &= cols - 1;
                gen(cfg, g + 1, chosen | c, picked + 1, need, allowed, out);
            }
        }
        gen(self, 0, 0, 0, need, allowed, &mut out);
        out.sort_unstable();
        out
    }

    fn row_candidates_at_root(&self) -> Vec<u32> {
        self.candidates(0, self.q)
    }

    fn run(&mut self, offset: usize, stride: usize, visit: &mut dyn FnMut(&BinMatrix)) {
        let roots = self.row_candidates_at_root();
        for (idx, &mask) in roots.iter().enumerate() {
            if idx % stride != offset {
                continue;
            }
            if self.commit(0, mask) {
                self.descend(1, visit);
            }
            self.undo(0, mask);
        }
    }

    fn descend(&mut self, r: usize, visit: &mut dyn FnMut(&BinMatrix)) {
        if r == self.d {
            let s = self.assemble_current();
            visit(&s);
            return;
        }
        let fam = r / self.q;
        if self.forced[r] & self.used[fam] != 0 {
            return; // same-family rows would share a column
        }
        let have = self.forced[r].count_ones() as usize;
        debug_assert!(have <= self.q);
        let need = self.q - have;
        let cands = self.candidates(r, need);
        for mask in cands {
            let full = self.forced[r] | mask;
            if !self.cross_family_ok(r, full) {
                continue;
            }
            if self.commit(r, full) {
                self.descend(r + 1, visit);
            }
            self.undo(r, full);
        }
    }

    /// Rows in different families may share at most one column (a second
    /// shared column is a J₂ inside `P`).
    fn cross_family_ok(&self, r: usize, full: u32) -> bool {
        let fam = r / self.q;
        for t in 0..r {
            if t / self.q != fam && (full & self.rows[t]).count_ones() > 1 {
                return false;
            }
        }
        true
    }

    /// Installs the row, mirrors its bits into the forced prefixes of later
    /// rows, and checks that every later row can still be completed.
    /// Returns false (leaving state installed for `undo`) when the
    /// look-ahead fails.
    fn commit(&mut self, r: usize, full: u32) -> bool {
        let fam = r / self.q;
        self.rows[r] = full;
        self.used[fam] |= full;
        let mut above = full & !((1u32 << (r + 1)) - 1);
        while above != 0 {
            let c = above.trailing_zeros() as usize;
            above &= above - 1;
            self.forced[c] |= 1 << r;
        }
        for s in r + 1..self.d {
            let have = self.forced[s].count_ones() as usize;
            if have > self.q {
                return false;
            }
            let need = self.q - have;
            if need == 0 {
                continue;
            }
            let sfam = s / self.q;
            // a future bit of row s sits either in its own choice (columns
            // above s) or arrives as the mirror of an uncommitted row
            // between r and s picking column s — so every column above r
            // except s itself is still open
            let open = self.full_mask() & !((1u32 << (r + 1)) - 1) & !(1u32 << s);
            let mut supply = 0;
            for g in 0..self.kappa {
                if self.forced[s] & self.block_mask(g) != 0 {
                    continue;
                }
                if self.block_mask(g) & open & !self.used[sfam] != 0 {
                    supply += 1;
                }
            }
            if supply < need {
                return false;
            }
        }
        true
    }

    fn undo(&mut self, r: usize, full: u32) {
        let fam = r / self.q;
        let mut above = full & !((1u32 << (r + 1)) - 1);
        while above != 0 {
            let c = above.trailing_zeros() as usize;
            above &= above - 1;
            self.forced[c] &= !(1 << r);
        }
        self.used[fam] &= !full;
        self.rows[r] = 0;
    }

    /// Builds the assembled standard form for the current complete `P`.
    fn assemble_current(&mut self) -> BinMatrix {
        let kappa = self.kappa;
        let q = self.q;
        let n = kappa * kappa + 1;
        self.scratch.clear();
        let mut rows = vec![0u64; n];
        rows[0] = ((1u64 << (kappa + 1)) - 1) & !1;
        for i in 1..=kappa {
            let fam_start = 1 + kappa + (i - 1) * q;
            rows[i] = (((1u64 << q) - 1) << fam_start) | 1;
        }
        for s in 0..self.d {
            let famv = s / q;
            rows[1 + kappa + s] = (1 << (1 + famv)) | ((self.rows[s] as u64) << (1 + kappa));
        }
        BinMatrix::from_row_masks(n, rows).expect("order in range")
    }
}

/// Isomorph-free census cross-check: enumerates every `kappa`-regular
/// C₄-free graph on `kappa²+1` vertices (for `kappa` in 2..=3) by orderly
/// row-by-row generation — neighbours of vertex 0 are `1..=kappa` and new
/// vertices are numbered in first-touch scan order — then collects the
/// canonical forms of the solutions per `m`. Entry `m-1` of the result
/// holds the solution classes of `theta^m(A) = A`.
///
/// This route is independent of the standard-form argument (it never looks
/// at centres or block structures), so comparing its class counts against
/// [`classify`] cross-checks the completeness of both searches.
pub fn census_solution_classes(
    kappa: usize,
    m_max: u32,
) -> Result<Vec<BTreeSet<BinMatrix>>, SolverError> {
    if !(2..=3).contains(&kappa) {
        return Err(SolverError::UnsupportedKappa { kappa });
    }
    if !(1..=MAX_M).contains(&m_max) {
        return Err(SolverError::UnsupportedM { m: m_max });
    }
    let n = kappa * kappa + 1;
    let mut census = Census {
        n,
        kappa,
        rows: vec![0; n],
        forced: vec![0; n],
        per_m: vec![BTreeSet::new(); m_max as usize],
        m_max,
    };
    census.rows[0] = ((1u32 << (kappa + 1)) - 1) & !1;
    for v in 1..=kappa {
        census.forced[v] = 1;
    }
    census.fill(1, kappa);
    Ok(census.per_m)
}

struct Census {
    n: usize,
    kappa: usize,
    rows: Vec<u32>,
    forced: Vec<u32>,
    per_m: Vec<BTreeSet<BinMatrix>>,
    m_max: u32,
}

impl Census {
    fn fill(&mut self, r: usize, seen_max: usize) {
        if r == self.n {
            self.record();
            return;
        }
        // first-touch numbering: labels form a prefix, so an untouched row
        // may only be the next fresh label
        let seen_max = if r > seen_max {
            debug_assert_eq!(r, seen_max + 1);
            r
        } else {
            seen_max
        };
        let have = self.forced[r].count_ones() as usize;
        if have > self.kappa {
            return;
        }
        let need = self.kappa - have;
        let max_new = (self.n - 1 - seen_max).min(need);
        for new_count in 0..=max_new {
            let new_mask = (((1u32 << new_count) - 1) << (seen_max + 1)) & !0;
            let old_pool: Vec<usize> = (r + 1..=seen_max).collect();
            let take_old = need - new_count;
            self.choose_old(r, seen_max, &old_pool, 0, 0u32, take_old, new_mask, new_count);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn choose_old(
        &mut self,
        r: usize,
        seen_max: usize,
        pool: &[usize],
        from: usize,
        picked: u32,
        left: usize,
        new_mask: u32,
        new_count: usize,
    ) {
        if left == 0 {
            self.try_row(r, seen_max, picked | new_mask, new_count);
            return;
        }
        if pool.len() - from < left {
            return;
        }
        for idx in from..pool.len() {
            self.choose_old(
                r,
                seen_max,
                pool,
                idx + 1,
                picked | (1 << pool[idx]),
                left - 1,
                new_mask,
                new_count,
            );
        }
    }

    fn try_row(&mut self, r: usize, seen_max: usize, extra: u32, new_count: usize) {
        let full = self.forced[r] | extra;
        debug_assert_eq!(full.count_ones() as usize, self.kappa);
        // C4-freeness against every committed row
        for t in 0..r {
            if (full & self.rows[t]).count_ones() > 1 {
                return;
            }
        }
        self.rows[r] = full;
        let mut above = extra;
        while above != 0 {
            let c = above.trailing_zeros() as usize;
            above &= above - 1;
            self.forced[c] |= 1 << r;
        }
        // degree feasibility for every open row: missing bits come from the
        // row's own choice or from mirrors of rows after r, so columns
        // above r (bar the diagonal) are all still open
        let mut ok = true;
        for s in r + 1..self.n {
            let have = self.forced[s].count_ones() as usize;
            if have > self.kappa || self.kappa - have > self.n - 2 - r {
                ok = false;
                break;
            }
        }
        if ok {
            self.fill(r + 1, seen_max + new_count);
        }
        let mut above = extra;
        while above != 0 {
            let c = above.trailing_zeros() as usize;
            above &= above - 1;
            self.forced[c] &= !(1 << r);
        }
        self.rows[r] = 0;
    }

    fn record(&mut self) {
        let rows: Vec<u64> = self.rows.iter().map(|&r| r as u64).collect();
        let a = BinMatrix::from_row_masks(self.n, rows).expect("order in range");
        // fundamental period by first return, if any within the cap
        let mut cur = a.clone();
        let mut period = None;
        for step in 1..=self.m_max {
            match theta_binary(&cur) {
                None => break,
                Some(next) => cur = next,
            }
            if cur == a {
                period = Some(step);
                break;
            }
        }
        if let Some(p) = period {
            let canon = canonical_form(&a).canonical;
            for m in 1..=self.m_max {
                if m % p == 0 {
                    self.per_m[(m - 1) as usize].insert(canon.clone());
                }
            }
        }
    }
}

/// One solution of the deficiency fixed-point equation
/// `delta_n^m(kappa) = kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DioSolution {
    pub n: usize,
    pub m: u32,
    pub kappa: i64,
}

/// Sweep result, partitioned into the two known families and the
/// exceptions, which the sweep reports rather than asserts away.
#[derive(Debug, Clone, Default)]
pub struct DioSweep {
    /// `n = kappa² + 1` (any `m`).
    pub family_one: Vec<DioSolution>,
    /// `n = (kappa-1)² + 2` with even `m`.
    pub family_two: Vec<DioSolution>,
    pub exceptions: Vec<DioSolution>,
}

/// Brute-force enumeration of all `(n, m, kappa)` with
/// `n <= n_max`, `1 <= m <= m_max`, `|kappa| <= kappa_abs` such that
/// iterating `x -> n - x² + x - 1` for `m` steps returns to `kappa`.
pub fn dio_sweep(n_max: usize, m_max: u32, kappa_abs: i64) -> DioSweep {
    let mut out = DioSweep::default();
    // beyond this magnitude the iteration strictly escapes, so no cycle
    // can pass through such a value
    let bail = 1_000_000i64.max(2 * n_max as i64 + 2);
    for n in 1..=n_max {
        for kappa in -kappa_abs..=kappa_abs {
            let mut x = kappa;
            let mut diverged = false;
            for m in 1..=m_max {
                if x.abs() > bail {
                    diverged = true;
                    break;
                }
                x = n as i64 - x * x + x - 1;
                if x == kappa {
                    let sol = DioSolution { n, m, kappa };
                    if n as i64 == kappa * kappa + 1 {
                        out.family_one.push(sol);
                    } else if n as i64 == (kappa - 1) * (kappa - 1) + 2 && m % 2 == 0 {
                        out.family_two.push(sol);
                    } else {
                        out.exceptions.push(sol);
                    }
                }
            }
            let _ = diverged;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::matrix::{theta, IntMatrix};

    fn named(n: &str) -> BinMatrix {
        corpus::named(n).unwrap().matrix
    }

    #[test]
    fn theta_binary_matches_exact_theta() {
        for name in ["c5_hs", "petersen_hs", "a1_t1", "a2_t2", "s_1971"] {
            let a = named(name);
            let fast = theta_binary(&a).expect("corpus matrices are J2-free");
            let exact = theta(&a.to_int()).unwrap();
            assert_eq!(fast.to_int(), exact, "{name}");
        }
    }

    #[test]
    fn orbit_of_petersen_is_a_fixed_point() {
        let report = orbit(&named("petersen_hs"), 8).unwrap();
        assert_eq!(
            report.outcome,
            OrbitOutcome::Cycle {
                preperiod: 0,
                period: 1
            }
        );
    }

    #[test]
    fn orbit_of_t2_has_period_three() {
        let report = orbit(&named("a2_t2"), 8).unwrap();
        assert_eq!(
            report.outcome,
            OrbitOutcome::Cycle {
                preperiod: 0,
                period: 3
            }
        );
        assert_eq!(report.iterates.len(), 3);
    }

    #[test]
    fn orbit_of_t1_stabilises_after_one_step() {
        let report = orbit(&named("a1_t1"), 8).unwrap();
        assert_eq!(
            report.outcome,
            OrbitOutcome::Cycle {
                preperiod: 1,
                period: 1
            }
        );
    }

    #[test]
    fn orbit_rejects_irregular_input() {
        let mut m = BinMatrix::zero(3).unwrap();
        m.set(0, 1, true);
        assert_eq!(orbit(&m, 4), Err(SolverError::NotInClass));
    }

    #[test]
    fn orbit_step_limit_is_loud() {
        let report = orbit(&named("a2_t2"), 2).unwrap();
        assert_eq!(report.outcome, OrbitOutcome::StepLimit { steps: 2 });
    }

    #[test]
    fn solution_tests_on_t2() {
        let a2 = named("a2_t2");
        assert!(is_solution(&a2, 3));
        assert!(!is_solution(&a2, 1));
        assert!(is_solution(&a2, 6));
        assert!(!is_solution(&a2, 4));
    }

    #[test]
    fn left_class_never_returns() {
        // run theta in exact arithmetic well past the point where the orbit
        // leaves the (0,1) class and confirm it never returns to the input
        let mut m = BinMatrix::zero(6).unwrap();
        for i in 0..6 {
            for d in [1usize, 2, 3] {
                m.set(i, (i + d) % 6, true);
            }
        }
        // dense 3-regular circulant contains J2, so it leaves at step 1
        let report = orbit(&m, 8).unwrap();
        assert_eq!(report.outcome, OrbitOutcome::LeftClass { step: 1 });
        let a: IntMatrix = m.to_int();
        let mut cur = a.clone();
        for _ in 0..6 {
            cur = theta(&cur).unwrap();
            assert_ne!(cur, a);
        }
    }

    #[test]
    fn classify_kappa_two() {
        let classes = classify(2, 1).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].fundamental_period, 1);
        assert_eq!(classes[0].names, vec!["c5"]);
        let c5 = canonical_form(&named("c5_hs")).canonical;
        assert_eq!(classes[0].canonical, c5);
        // a period-1 class solves every m
        let classes5 = classify(2, 5).unwrap();
        assert_eq!(classes5.len(), 1);
    }

    #[test]
    fn classify_kappa_three_fixed_points() {
        let classes = classify(3, 1).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(
            classes[0].canonical,
            canonical_form(&named("petersen_hs")).canonical
        );
        assert!(classes[0].names.contains(&"petersen"));
    }

    #[test]
    fn classify_kappa_three_m_three() {
        let classes = classify(3, 3).unwrap();
        assert_eq!(classes.len(), 2);
        let mut periods: Vec<usize> =
            classes.iter().map(|c| c.fundamental_period).collect();
        periods.sort_unstable();
        assert_eq!(periods, vec![1, 3]);
        let t2 = canonical_form(&named("a2_t2")).canonical;
        assert!(classes.iter().any(|c| c.canonical == t2));
    }

    #[test]
    fn classify_outputs_are_closed_under_theta() {
        for (kappa, m) in [(2usize, 1u32), (3, 3)] {
            let classes = classify(kappa, m).unwrap();
            let canons: BTreeSet<BinMatrix> =
                classes.iter().map(|c| c.canonical.clone()).collect();
            for class in &classes {
                let image = theta_binary(&class.canonical).expect("solutions are J2-free");
                assert!(canons.contains(&canonical_form(&image).canonical));
            }
        }
    }

    #[test]
    fn divisor_classes_are_contained() {
        let m6 = classify(3, 6).unwrap();
        for d in [1u32, 2, 3] {
            for class in classify(3, d).unwrap() {
                assert!(
                    m6.iter().any(|c| c.canonical == class.canonical),
                    "class for m={d} missing at m=6"
                );
            }
        }
    }

    #[test]
    fn census_matches_classify_for_kappa_two() {
        let census = census_solution_classes(2, 4).unwrap();
        for m in 1..=4u32 {
            let classes = classify(2, m).unwrap();
            assert_eq!(census[(m - 1) as usize].len(), classes.len());
        }
    }

    #[test]
    fn dio_sweep_families() {
        let sweep = dio_sweep(20, 4, 5);
        assert!(sweep
            .family_one
            .iter()
            .any(|s| s.n == 10 && s.kappa == 3 && s.m == 1));
        assert!(sweep
            .family_two
            .iter()
            .any(|s| s.n == 11 && s.kappa == 4 && s.m == 2));
        // negative kappa fixed points are family one as well
        assert!(sweep
            .family_one
            .iter()
            .any(|s| s.n == 10 && s.kappa == -3));
        assert!(sweep.exceptions.is_empty());
    }

    #[test]
    fn unsupported_parameters_are_rejected() {
        assert!(matches!(
            classify(5, 1),
            Err(SolverError::UnsupportedKappa { kappa: 5 })
        ));
        assert!(matches!(
            classify(3, 0),
            Err(SolverError::UnsupportedM { m: 0 })
        ));
        assert!(matches!(
            classify(3, 9),
            Err(SolverError::UnsupportedM { m: 9 })
        ));
        assert!(matches!(
            census_solution_classes(4, 2),
            Err(SolverError::UnsupportedKappa { kappa: 4 })
        ));
    }
}
