//! Littlewood–Richardson coefficients by direct tableau counting.
//!
//! This engine shares nothing with the Pieri/Giambelli path: it counts
//! semistandard fillings of the skew shape `ν/λ` with content `μ` whose
//! reverse reading word is a lattice word. It is kept as a second, slower
//! multiplication engine so that every Chern integral can be computed twice.

use super::{Basis, Partition2};

/// `c^ν_{λμ}` for partitions given as weakly decreasing row lengths.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], nu: &[u32]) -> u64 {
    let rows = nu.len().max(lambda.len());
    let row = |p: &[u32], r: usize| p.get(r).copied().unwrap_or(0);
    if (0..rows).any(|r| row(lambda, r) > row(nu, r)) {
        return 0;
    }
    let size = |p: &[u32]| p.iter().sum::<u32>();
    if size(lambda) + size(mu) != size(nu) {
        return 0;
    }
    // cells in reverse reading order: top row first, right to left
    let mut cells = Vec::new();
    for r in 0..rows {
        for c in (row(lambda, r)..row(nu, r)).rev() {
            cells.push((r, c));
        }
    }
    let letters = mu.iter().filter(|&&m| m > 0).count();
    let mut filling = vec![vec![0u32; row(nu, 0) as usize]; rows];
    let mut counts = vec![0u32; letters + 1];
    let ctx = Search {
        lambda,
        mu,
        cells: &cells,
        letters,
    };
    ctx.count(0, &mut filling, &mut counts)
}

struct Search<'a> {
    lambda: &'a [u32],
    mu: &'a [u32],
    cells: &'a [(usize, u32)],
    letters: usize,
}

impl Search<'_> {
    fn in_skew(&self, filling: &[Vec<u32>], r: usize, c: u32) -> Option<u32> {
        let lam = self.lambda.get(r).copied().unwrap_or(0);
        match filling.get(r).and_then(|row| row.get(c as usize)) {
            Some(&v) if c >= lam && v > 0 => Some(v),
            _ => None,
        }
    }

    fn count(&self, at: usize, filling: &mut Vec<Vec<u32>>, counts: &mut Vec<u32>) -> u64 {
        if at == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[at];
        let mut total = 0;
        for v in 1..=self.letters as u32 {
            let vi = v as usize;
            if counts[vi] >= self.mu[vi - 1] {
                continue;
            }
            // lattice condition on the reading word
            if vi > 1 && counts[vi] + 1 > counts[vi - 1] {
                continue;
            }
            // rows weakly increase left to right; the right neighbour is already placed
            if let Some(right) = self.in_skew(filling, r, c + 1) {
                if v > right {
                    continue;
                }
            }
            // columns strictly increase downwards
            if r > 0 {
                if let Some(above) = self.in_skew(filling, r - 1, c) {
                    if v <= above {
                        continue;
                    }
                }
            }
            filling[r][c as usize] = v;
            counts[vi] += 1;
            total += self.count(at + 1, filling, counts);
            counts[vi] -= 1;
            filling[r][c as usize] = 0;
        }
        total
    }
}

/// Structure constants of `σ_λ · σ_μ` in Gr(2,n) from LR coefficients.
pub fn product(basis: &Basis, lambda: Partition2, mu: Partition2) -> Vec<i64> {
    let mut out = vec![0i64; basis.len()];
    let target = lambda.size() + mu.size();
    for (i, nu) in basis.partitions().iter().enumerate() {
        if nu.size() != target {
            continue;
        }
        out[i] = lr_coefficient(&[lambda.a, lambda.b], &[mu.a, mu.b], &[nu.a, nu.b]) as i64;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_coefficients() {
        // s_1 · s_1 = s_2 + s_11
        assert_eq!(lr_coefficient(&[1], &[1], &[2]), 1);
        assert_eq!(lr_coefficient(&[1], &[1], &[1, 1]), 1);
        // s_21 · s_21 contains s_321 with coefficient 2
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[4, 2]), 1);
        assert_eq!(lr_coefficient(&[2, 1], &[2, 1], &[2, 2, 2]), 1);
        // containment and size
        assert_eq!(lr_coefficient(&[3], &[1], &[2, 2]), 0);
        assert_eq!(lr_coefficient(&[1], &[1], &[3]), 0);
    }
}
