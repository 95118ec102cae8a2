//! Slow, obviously-correct reference implementations.
//!
//! Everything here recomputes results with `Vec<bool>` grids, index loops,
//! and message-space enumeration so the test suites can cross-check the
//! packed kernels against an independent code path. None of it is used by
//! the production routines.

use crate::qc2code::TwoGenQC;

/// Schoolbook product in `F2[x]/(x^n - 1)` on coefficient slices.
pub fn mul_mod_xn_minus_one(a: &[bool], b: &[bool], n: usize) -> Vec<bool> {
    let mut out = vec![false; n];
    for (i, &ai) in a.iter().enumerate() {
        if !ai {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj {
                out[(i + j) % n] ^= true;
            }
        }
    }
    out
}

/// Textbook Gauss-Jordan elimination; returns the reduced form and pivots.
pub fn row_reduce(mut m: Vec<Vec<bool>>) -> (Vec<Vec<bool>>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows {
            break;
        }
        let Some(p) = (next..rows).find(|&r| m[r][col]) else { continue };
        m.swap(p, next);
        for r in 0..rows {
            if r != next && m[r][col] {
                for c in 0..cols {
                    let x = m[next][c];
                    m[r][c] ^= x;
                }
            }
        }
        pivots.push(col);
        next += 1;
    }
    (m, pivots)
}

pub fn rank(m: Vec<Vec<bool>>) -> usize {
    row_reduce(m).1.len()
}

/// Symplectic weight by direct pair inspection.
pub fn symplectic_weight(u: &[bool]) -> usize {
    let n = u.len() / 2;
    (0..n).filter(|&i| u[i] || u[n + i]).count()
}

/// Symplectic inner product by the defining sum.
pub fn symplectic_inner(u: &[bool], w: &[bool]) -> bool {
    let n = u.len() / 2;
    let mut acc = false;
    for i in 0..n {
        acc ^= u[i] & w[n + i];
        acc ^= u[n + i] & w[i];
    }
    acc
}

/// The raw (unreduced) generator rows of a two-generator quasi-cyclic code
/// as bool grids: shifts of `([v·g1], [g1])` then shifts of `([g2], [v·g2])`.
pub fn generator_rows(code: &TwoGenQC) -> Vec<Vec<bool>> {
    let n = code.n();
    let to_bools = |p: &crate::algebra::BinaryPolynomial| -> Vec<bool> {
        (0..n).map(|i| p.coeff(i)).collect()
    };
    let g1 = to_bools(code.g1());
    let g2 = to_bools(code.g2());
    let v = to_bools(code.v());
    let vg1 = mul_mod_xn_minus_one(&v, &g1, n);
    let vg2 = mul_mod_xn_minus_one(&v, &g2, n);
    let d1 = code.g1().degree().unwrap_or(0);
    let d2 = code.g2().degree().unwrap_or(0);
    let mut rows = Vec::new();
    let shift = |p: &[bool], s: usize| -> Vec<bool> {
        (0..n).map(|i| p[(i + n - s) % n]).collect()
    };
    for s in 0..n - d1 {
        let mut row = shift(&vg1, s);
        row.extend(shift(&g1, s));
        rows.push(row);
    }
    for s in 0..n - d2 {
        let mut row = shift(&g2, s);
        row.extend(shift(&vg2, s));
        rows.push(row);
    }
    rows
}

/// Enumerate every codeword by odometer over the raw message space (one bit
/// per generator row, plain binary counting order) and return the minimum
/// symplectic weight with a witness. Panics if the space is empty.
///
/// Deliberately distinct from the production path: raw rows instead of an
/// echelon basis, counting order instead of Gray order, and the pair-loop
/// weight above.
pub fn min_symplectic_distance(code: &TwoGenQC) -> (usize, Vec<bool>) {
    let rows = generator_rows(code);
    let k = rows.len();
    assert!(k <= 26, "naive enumeration limited to 2^26 messages");
    let width = 2 * code.n();
    let mut best: Option<(usize, Vec<bool>)> = None;
    for msg in 1u64..1 << k {
        let mut word = vec![false; width];
        for (r, row) in rows.iter().enumerate() {
            if msg >> r & 1 == 1 {
                for (w, &b) in word.iter_mut().zip(row) {
                    *w ^= b;
                }
            }
        }
        if word.iter().all(|&b| !b) {
            continue; // dependent rows can cancel
        }
        let ws = symplectic_weight(&word);
        if best.as_ref().is_none_or(|(b, _)| ws < *b) {
            best = Some((ws, word));
        }
    }
    best.expect("code has a nonzero codeword")
}

/// Exact histogram of symplectic weights over all codewords (including the
/// zero word), by the same odometer enumeration over an independent basis.
pub fn weight_histogram(code: &TwoGenQC) -> Vec<u64> {
    let all = generator_rows(code);
    let (reduced, pivots) = row_reduce(all);
    let rows = &reduced[..pivots.len()];
    let k = rows.len();
    assert!(k <= 26, "naive enumeration limited to 2^26 messages");
    let mut counts = vec![0u64; code.n() + 1];
    for msg in 0u64..1 << k {
        let mut word = vec![false; 2 * code.n()];
        for (r, row) in rows.iter().enumerate() {
            if msg >> r & 1 == 1 {
                for (w, &b) in word.iter_mut().zip(row) {
                    *w ^= b;
                }
            }
        }
        counts[symplectic_weight(&word)] += 1;
    }
    counts
}

/// A basis of the full symplectic dual of the row space of `rows`, found by
/// solving the linear system `⟨row_i, x⟩_s = 0` with plain elimination.
pub fn symplectic_dual_basis(rows: &[Vec<bool>], n: usize) -> Vec<Vec<bool>> {
    let width = 2 * n;
    // constraint matrix: row i is the symplectic partner of generator row i
    let mut system: Vec<Vec<bool>> = rows
        .iter()
        .map(|r| {
            let mut c = vec![false; width];
            for j in 0..n {
                c[j] = r[n + j];
                c[n + j] = r[j];
            }
            c
        })
        .collect();
    // eliminate to find free columns, then back-substitute a kernel basis
    let rows_count = system.len();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut next = 0;
    for col in 0..width {
        if next == rows_count {
            break;
        }
        let Some(p) = (next..rows_count).find(|&r| system[r][col]) else { continue };
        system.swap(p, next);
        for r in 0..rows_count {
            if r != next && system[r][col] {
                for c in 0..width {
                    let x = system[next][c];
                    system[r][c] ^= x;
                }
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in (0..width).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![false; width];
        v[free] = true;
        for &(r, c) in &pivots {
            if system[r][free] {
                v[c] = true;
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naive_mul_wraps() {
        // x * x^2 = 1 mod x^3 - 1
        let x = vec![false, true, false];
        let x2 = vec![false, false, true];
        assert_eq!(mul_mod_xn_minus_one(&x, &x2, 3), vec![true, false, false]);
    }

    #[test]
    fn naive_symplectic_weight_pairs() {
        let u = vec![true, false, true, false, false, true, true, false];
        assert_eq!(symplectic_weight(&u), 3);
        assert_eq!(symplectic_weight(&vec![false; 8]), 0);
    }

    #[test]
    fn dual_basis_is_orthogonal_and_complementary() {
        let rows = vec![
            vec![true, false, false, false, false, false],
            vec![false, true, false, false, false, false],
        ];
        let dual = symplectic_dual_basis(&rows, 3);
        assert_eq!(dual.len(), 4); // 2n - rank
        for d in &dual {
            for r in &rows {
                assert!(!symplectic_inner(d, r));
            }
        }
    }
}
