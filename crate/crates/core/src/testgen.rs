//! Deterministic generators and independent oracles used by the test and
//! verification suites. Nothing here is part of the mathematical surface of
//! the crate; it exists so that randomized property checks are reproducible
//! from a single seed on any platform.

use alloc::vec;
use alloc::vec::Vec;

use crate::equiv::{conjugate_bin, Permutation};
use crate::matrix::{BinMatrix, IntMatrix};

/// SplitMix64: tiny, seedable, platform-independent. Good enough for test
/// data; not a cryptographic generator.
#[derive(Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        // rejection sampling keeps the distribution exact
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Uniform random permutation (Fisher–Yates).
pub fn permutation(n: usize, rng: &mut SplitMix64) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.below(i as u64 + 1) as usize;
        image.swap(i, j);
    }
    Permutation::from_image(image).expect("shuffle is a bijection")
}

/// Random (0,1)-matrix with independent fair entries (loops allowed).
pub fn random_bin(n: usize, rng: &mut SplitMix64) -> BinMatrix {
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let rows = (0..n).map(|_| rng.next_u64() & mask).collect();
    BinMatrix::from_row_masks(n, rows).expect("masked rows")
}

/// Random integer matrix with all row and column sums equal to `kappa`:
/// starts from `kappa` times a cyclic shift and applies `moves` random
/// square moves `a[i][j] += 1, a[i][l] -= 1, a[k][j] -= 1, a[k][l] += 1`,
/// each of which preserves every row and column sum.
pub fn z_matrix(n: usize, kappa: i64, moves: usize, rng: &mut SplitMix64) -> IntMatrix {
    assert!(n >= 2);
    let mut a = IntMatrix::zero(n);
    for i in 0..n {
        a.set(i, (i + 1) % n, kappa);
    }
    for _ in 0..moves {
        let i = rng.below(n as u64) as usize;
        let k = loop {
            let k = rng.below(n as u64) as usize;
            if k != i {
                break k;
            }
        };
        let j = rng.below(n as u64) as usize;
        let l = loop {
            let l = rng.below(n as u64) as usize;
            if l != j {
                break l;
            }
        };
        a.set(i, j, a.get(i, j) + 1);
        a.set(i, l, a.get(i, l) - 1);
        a.set(k, j, a.get(k, j) - 1);
        a.set(k, l, a.get(k, l) + 1);
    }
    a
}

/// Random (0,1)-matrix with all row and column sums equal to `kappa`
/// (`0 < kappa < n`): starts from the sum of `kappa` distinct cyclic shifts
/// and applies switch moves that stay inside the class.
pub fn d_matrix(n: usize, kappa: usize, moves: usize, rng: &mut SplitMix64) -> BinMatrix {
    assert!(kappa > 0 && kappa < n);
    let mut a = BinMatrix::zero(n).expect("order in range");
    for i in 0..n {
        for t in 1..=kappa {
            a.set(i, (i + t) % n, true);
        }
    }
    let mut done = 0;
    let mut attempts = 0;
    while done < moves && attempts < moves * 40 {
        attempts += 1;
        let i = rng.below(n as u64) as usize;
        let k = rng.below(n as u64) as usize;
        let j = rng.below(n as u64) as usize;
        let l = rng.below(n as u64) as usize;
        if i == k || j == l {
            continue;
        }
        if a.get(i, j) && a.get(k, l) && !a.get(i, l) && !a.get(k, j) {
            a.set(i, j, false);
            a.set(k, l, false);
            a.set(i, l, true);
            a.set(k, j, true);
            done += 1;
        }
    }
    a
}

/// Factorial-scan equivalence oracle: backtracking over all assignments
/// `sigma(position) = original vertex` with incremental consistency checks.
/// Independent of the canonical-form machinery; intended for `n <= 8`.
pub fn brute_force_p_equivalent(a: &BinMatrix, b: &BinMatrix) -> Option<Permutation> {
    if a.n() != b.n() {
        return None;
    }
    let n = a.n();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        a: &BinMatrix,
        b: &BinMatrix,
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        k: usize,
    ) -> bool {
        let n = a.n();
        if k == n {
            return true;
        }
        for v in 0..n {
            if used[v] {
                continue;
            }
            // b[k][t] must equal a[v][sigma(t)] and b[t][k] = a[sigma(t)][v]
            let ok = (0..=k).all(|t| {
                let s = if t == k { v } else { sigma[t] };
                b.get(k, t) == a.get(v, s) && b.get(t, k) == a.get(s, v)
            });
            if ok {
                sigma[k] = v;
                used[v] = true;
                if extend(a, b, sigma, used, k + 1) {
                    return true;
                }
                used[v] = false;
                sigma[k] = usize::MAX;
            }
        }
        false
    }
    if extend(a, b, &mut sigma, &mut used, 0) {
        // b[i][j] = a[sigma(i)][sigma(j)], so the witness is sigma⁻¹.
        let pi = Permutation::from_image(sigma).expect("bijection").inverse();
        debug_assert_eq!(conjugate_bin(a, &pi).unwrap(), *b);
        Some(pi)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_matrix_keeps_sums() {
        let mut rng = SplitMix64::new(1);
        for _ in 0..50 {
            let n = 2 + rng.below(8) as usize;
            let kappa = rng.below(9) as i64 - 4;
            let a = z_matrix(n, kappa, 3 * n, &mut rng);
            assert_eq!(a.constant_sum(), Some(kappa));
        }
    }

    #[test]
    fn d_matrix_stays_binary_with_sums() {
        let mut rng = SplitMix64::new(2);
        for _ in 0..50 {
            let n = 4 + rng.below(8) as usize;
            let kappa = 1 + rng.below(n as u64 - 1) as usize;
            let a = d_matrix(n, kappa, 4 * n, &mut rng);
            assert_eq!(a.constant_sum(), Some(kappa as u32));
        }
    }

    #[test]
    fn shuffles_are_bijections() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let p = permutation(9, &mut rng);
            let q = p.inverse();
            assert!(p.compose(&q).unwrap().is_identity());
        }
    }
}
