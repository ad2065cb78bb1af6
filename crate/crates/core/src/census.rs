//! Oriented spanning tree counts.
//!
//! `kappa(g, w)` is the number of spanning trees of `g` in which every edge
//! points toward the root `w`. It is computed as the principal minor of the
//! Laplacian at `w` (directed Matrix-Tree theorem) with fraction-free integer
//! elimination. [`enumerate_arborescences`] lists the same trees by brute
//! force and serves as an independent check.

use std::mem;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::DirectedMultigraph;

/// Default bound on the number of choice functions the enumerator may visit.
pub const DEFAULT_ARBORESCENCE_CAP: u64 = 10_000_000;

/// Exact determinant by Bareiss elimination. The empty matrix has
/// determinant 1.
pub fn determinant_exact(matrix: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = matrix.len();
    if let Some((row, r)) = matrix.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::NonSquare {
            rows: n,
            row,
            cols: r.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = matrix.to_vec();
    let mut negate = false;
    let mut previous = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        let (upper, lower) = m.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            let factor = mem::take(&mut row[k]);
            for j in k + 1..n {
                let value = &row[j] * pivot - &factor * &pivot_row[j];
                // Sylvester's identity guarantees the division is exact.
                row[j] = value / &previous;
            }
        }
        previous = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// Number of spanning trees of `g` oriented toward `root`.
pub fn kappa(g: &DirectedMultigraph, root: usize) -> Result<BigUint> {
    g.ensure_strongly_connected()?;
    if root >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{root}")));
    }
    minor_count(&g.laplacian().principal_minor(root))
}

fn minor_count(minor: &[Vec<BigInt>]) -> Result<BigUint> {
    let det = determinant_exact(minor)?;
    debug_assert!(!det.is_negative());
    Ok(det.magnitude().clone())
}

/// Tree counts for every root, in vertex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KappaVector {
    counts: Vec<BigUint>,
}

impl KappaVector {
    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn get(&self, v: usize) -> &BigUint {
        &self.counts[v]
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.counts
    }
}

pub fn kappa_vector(g: &DirectedMultigraph) -> Result<KappaVector> {
    g.ensure_strongly_connected()?;
    let laplacian = g.laplacian();
    let counts = (0..g.vertex_count())
        .map(|w| minor_count(&laplacian.principal_minor(w)))
        .collect::<Result<Vec<_>>>()?;
    Ok(KappaVector { counts })
}

/// Lists every spanning tree oriented toward `root` as a sorted set of edge
/// ids. The list is sorted lexicographically.
///
/// Every way of choosing one outgoing edge at each non-root vertex is tried
/// and kept when all vertices reach the root by following their choices.
pub fn enumerate_arborescences(
    g: &DirectedMultigraph,
    root: usize,
    cap: u64,
) -> Result<Vec<Vec<usize>>> {
    g.ensure_strongly_connected()?;
    if root >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{root}")));
    }
    let n = g.vertex_count();
    let others: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let size = others.iter().fold(1u128, |acc, &v| {
        acc.saturating_mul(g.out_edges(v).len() as u128)
    });
    if size > cap as u128 {
        return Err(Error::SearchSpaceTooLarge {
            size: size.to_string(),
            cap,
        });
    }

    let mut found = Vec::new();
    let mut digits = vec![0usize; others.len()];
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n];
    loop {
        for (slot, &v) in others.iter().enumerate() {
            parent[v] = g.edges()[g.out_edges(v)[digits[slot]]].head;
        }
        if reaches_root(&parent, root, &mut state) {
            let mut set: Vec<usize> = others
                .iter()
                .enumerate()
                .map(|(slot, &v)| g.out_edges(v)[digits[slot]])
                .collect();
            set.sort_unstable();
            found.push(set);
        }
        // Odometer increment.
        let mut slot = 0;
        loop {
            if slot == others.len() {
                found.sort();
                return Ok(found);
            }
            digits[slot] += 1;
            if digits[slot] < g.out_edges(others[slot]).len() {
                break;
            }
            digits[slot] = 0;
            slot += 1;
        }
    }
}

/// Whether following `parent` from every vertex ends at `root`.
fn reaches_root(parent: &[usize], root: usize, state: &mut [u8]) -> bool {
    const UNKNOWN: u8 = 0;
    const ACTIVE: u8 = 1;
    const DONE: u8 = 2;
    state.fill(UNKNOWN);
    state[root] = DONE;
    let mut path = Vec::new();
    for start in 0..parent.len() {
        let mut v = start;
        while state[v] == UNKNOWN {
            state[v] = ACTIVE;
            path.push(v);
            v = parent[v];
        }
        if state[v] == ACTIVE {
            return false;
        }
        for u in path.drain(..) {
            state[u] = DONE;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    fn g2() -> DirectedMultigraph {
        DirectedMultigraph::build(&["a", "b"], &[("a", "b"), ("b", "a"), ("b", "a")]).unwrap()
    }

    fn c3() -> DirectedMultigraph {
        DirectedMultigraph::from_index_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn t3() -> DirectedMultigraph {
        DirectedMultigraph::from_index_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)])
            .unwrap()
    }

    fn loop_graph() -> DirectedMultigraph {
        DirectedMultigraph::build(&["a"], &[("a", "a")]).unwrap()
    }

    /// Leibniz expansion, used only as a reference.
    fn leibniz(matrix: &[Vec<BigInt>]) -> BigInt {
        fn go(matrix: &[Vec<BigInt>], row: usize, used: &mut Vec<bool>, sign: bool) -> BigInt {
            let n = matrix.len();
            if row == n {
                return if sign { -BigInt::one() } else { BigInt::one() };
            }
            let mut total = BigInt::zero();
            for col in 0..n {
                if used[col] || matrix[row][col].is_zero() {
                    continue;
                }
                let inversions = used[col + 1..].iter().filter(|&&u| u).count();
                used[col] = true;
                let rest = go(matrix, row + 1, used, sign ^ (inversions % 2 == 1));
                used[col] = false;
                total += &matrix[row][col] * rest;
            }
            total
        }
        go(matrix, 0, &mut vec![false; matrix.len()], false)
    }

    #[test]
    fn determinant_fixtures() {
        assert_eq!(determinant_exact(&[]).unwrap(), BigInt::one());
        assert_eq!(determinant_exact(&m(&[&[2]])).unwrap(), BigInt::from(2));
        assert_eq!(
            determinant_exact(&m(&[&[1, -1], &[-2, 2]])).unwrap(),
            BigInt::zero()
        );
        assert_eq!(
            determinant_exact(&m(&[&[0, 1], &[1, 0]])).unwrap(),
            BigInt::from(-1)
        );
        assert!(matches!(
            determinant_exact(&m(&[&[1, 2]])).unwrap_err(),
            Error::NonSquare { .. }
        ));
    }

    #[test]
    fn determinant_matches_leibniz() {
        let mut seed = 0x1234_5678u64;
        for n in 1..=5 {
            for _ in 0..40 {
                let matrix: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                seed = seed
                                    .wrapping_mul(6364136223846793005)
                                    .wrapping_add(1442695040888963407);
                                BigInt::from(((seed >> 33) % 7) as i64 - 3)
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(
                    determinant_exact(&matrix).unwrap(),
                    leibniz(&matrix),
                    "{matrix:?}"
                );
            }
        }
    }

    #[test]
    fn kappa_fixtures() {
        assert_eq!(kappa(&loop_graph(), 0).unwrap(), BigUint::one());
        assert_eq!(kappa(&g2(), 0).unwrap(), BigUint::from(2u8));
        assert_eq!(kappa(&g2(), 1).unwrap(), BigUint::one());
        for v in 0..3 {
            assert_eq!(kappa(&t3(), v).unwrap(), BigUint::from(3u8));
        }
        let one_way = DirectedMultigraph::build(&["a", "b"], &[("a", "b")]).unwrap();
        assert!(matches!(
            kappa(&one_way, 0),
            Err(Error::NotStronglyConnected { .. })
        ));
    }

    #[test]
    fn kappa_vector_fixtures() {
        let ones = |n: usize, k: u8| vec![BigUint::from(k); n];
        assert_eq!(kappa_vector(&c3()).unwrap().counts(), ones(3, 1).as_slice());
        assert_eq!(
            kappa_vector(&g2()).unwrap().counts(),
            &[BigUint::from(2u8), BigUint::one()]
        );
        assert_eq!(kappa_vector(&t3()).unwrap().counts(), ones(3, 3).as_slice());
    }

    #[test]
    fn enumeration_fixtures() {
        assert_eq!(
            enumerate_arborescences(&g2(), 0, DEFAULT_ARBORESCENCE_CAP).unwrap(),
            vec![vec![1], vec![2]]
        );
        assert_eq!(
            enumerate_arborescences(&g2(), 1, DEFAULT_ARBORESCENCE_CAP).unwrap(),
            vec![vec![0]]
        );
        for v in 0..3 {
            assert_eq!(
                enumerate_arborescences(&c3(), v, DEFAULT_ARBORESCENCE_CAP)
                    .unwrap()
                    .len(),
                1
            );
            assert_eq!(
                enumerate_arborescences(&t3(), v, DEFAULT_ARBORESCENCE_CAP)
                    .unwrap()
                    .len(),
                3
            );
        }
        assert_eq!(
            enumerate_arborescences(&loop_graph(), 0, DEFAULT_ARBORESCENCE_CAP).unwrap(),
            vec![Vec::<usize>::new()]
        );
    }

    #[test]
    fn enumeration_respects_cap() {
        assert_eq!(
            enumerate_arborescences(&t3(), 0, 3).unwrap_err(),
            Error::SearchSpaceTooLarge {
                size: "4".into(),
                cap: 3
            }
        );
    }

    #[test]
    fn loops_never_enter_trees() {
        let g = DirectedMultigraph::from_index_edges(2, &[(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(
            enumerate_arborescences(&g, 0, DEFAULT_ARBORESCENCE_CAP).unwrap(),
            vec![vec![2]]
        );
        assert_eq!(kappa(&g, 0).unwrap(), BigUint::one());
    }
}
