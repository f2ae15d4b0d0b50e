//! Dimension and degree of monomial ideals by exhaustive coordinate-subspace
//! enumeration. Instances here stay tiny (at most 2m+2 <= 12 variables), so
//! brute force doubles as the oracle.

use crate::error::{AlgError, AlgResult};

const MAX_ENUM_VARS: usize = 24;

fn support(e: &[u32]) -> u64 {
    let mut s = 0u64;
    for (i, &p) in e.iter().enumerate() {
        if p > 0 {
            s |= 1 << i;
        }
    }
    s
}

/// Dimension of the zero set of the monomial ideal: the largest subset S of
/// variables such that no generator's support lies inside S (the coordinate
/// subspace spanned by S misses every generator). Empty generator list gives
/// n; a constant generator gives -1 (empty zero set).
pub fn monomial_ideal_dimension(gens: &[Vec<u32>], n_vars: usize) -> i64 {
    assert!(n_vars <= MAX_ENUM_VARS, "subset enumeration too large");
    if gens.is_empty() {
        return n_vars as i64;
    }
    let supports: Vec<u64> = gens.iter().map(|e| support(e)).collect();
    if supports.iter().any(|&s| s == 0) {
        return -1;
    }
    let mut best: i64 = -1;
    for mask in 0u64..(1 << n_vars) {
        if supports.iter().any(|&s| s & mask == s) {
            continue;
        }
        best = best.max(mask.count_ones() as i64);
    }
    best
}

/// Facet count of the zero set of a squarefree monomial ideal: enumerates the
/// independent subsets, returns (dimension, number of independent subsets of
/// maximal size). The maximal independent subsets are exactly the maximal
/// coordinate subspaces of the zero set, so the second component is the
/// geometric degree when the ideal is radical of this combinatorial shape.
pub fn squarefree_ideal_degree(gens: &[Vec<u32>], n_vars: usize) -> AlgResult<(i64, u64)> {
    assert!(n_vars <= MAX_ENUM_VARS, "subset enumeration too large");
    for e in gens {
        if e.iter().any(|&p| p >= 2) {
            return Err(AlgError::NonSquarefree(format!("{e:?}")));
        }
    }
    if gens.is_empty() {
        return Ok((n_vars as i64, 1));
    }
    let supports: Vec<u64> = gens.iter().map(|e| support(e)).collect();
    if supports.iter().any(|&s| s == 0) {
        return Ok((-1, 0));
    }
    let mut best: i64 = -1;
    let mut count = 0u64;
    for mask in 0u64..(1 << n_vars) {
        if supports.iter().any(|&s| s & mask == s) {
            continue;
        }
        let size = mask.count_ones() as i64;
        if size > best {
            best = size;
            count = 1;
        } else if size == best {
            count += 1;
        }
    }
    Ok((best, count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_basic() {
        assert_eq!(monomial_ideal_dimension(&[vec![1]], 1), 0);
        assert_eq!(monomial_ideal_dimension(&[], 3), 3);
        // two disjoint quadric supports in 6 variables leave 4 free axes
        let gens = vec![vec![1, 0, 0, 1, 0, 0], vec![0, 1, 0, 0, 1, 0]];
        assert_eq!(monomial_ideal_dimension(&gens, 6), 4);
        // a unit in the ideal empties the zero set
        assert_eq!(monomial_ideal_dimension(&[vec![0, 0]], 2), -1);
    }

    #[test]
    fn squarefree_degree_basic() {
        let gens = vec![vec![1, 0, 0, 1, 0, 0], vec![0, 1, 0, 0, 1, 0]];
        assert_eq!(squarefree_ideal_degree(&gens, 6).unwrap(), (4, 4));
        assert_eq!(
            squarefree_ideal_degree(&[vec![1, 1]], 2).unwrap(),
            (1, 2)
        );
        assert!(matches!(
            squarefree_ideal_degree(&[vec![2, 0]], 2),
            Err(AlgError::NonSquarefree(_))
        ));
    }

    #[test]
    fn squarefree_degree_pair_pattern() {
        // pairs {j, m+1+j} for j = 1..m in 2m+2 variables: degree 2^m
        for m in 1..=5usize {
            let n = 2 * m + 2;
            let gens: Vec<Vec<u32>> = (0..m)
                .map(|j| {
                    let mut e = vec![0u32; n];
                    e[j] = 1;
                    e[m + 1 + j] = 1;
                    e
                })
                .collect();
            let (dim, deg) = squarefree_ideal_degree(&gens, n).unwrap();
            assert_eq!(dim, (m + 2) as i64);
            assert_eq!(deg, 1 << m);
        }
    }
}
