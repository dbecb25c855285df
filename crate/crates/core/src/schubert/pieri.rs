//! Production multiplication: Pieri's rule for special classes, plus the
//! rank-two Giambelli identity `σ_{a,b} = σ_a·σ_b − σ_{a+1}·σ_{b−1}` to
//! reduce a general factor to special ones.

use super::{Basis, Partition2};

/// `σ_λ · σ_p` in Gr(2,n) as a list of partitions (all multiplicities are one).
///
/// Adds a horizontal strip of `p` boxes to `λ` inside the `2 × width` box.
pub fn pieri(width: u32, lambda: Partition2, p: u32) -> Vec<Partition2> {
    let total = lambda.a + lambda.b + p;
    let mut out = Vec::new();
    // horizontal strip: b ≤ b' ≤ a ≤ a' ≤ width
    for b2 in lambda.b..=lambda.a {
        if b2 > total {
            break;
        }
        let a2 = total - b2;
        if a2 >= lambda.a && a2 <= width && a2 >= b2 {
            out.push(Partition2::new(a2, b2));
        }
    }
    out
}

/// Multiply an integer vector in the Schubert basis by `σ_p`.
fn pieri_vec(basis: &Basis, v: &[i64], p: u32) -> Vec<i64> {
    let mut out = vec![0i64; v.len()];
    for (i, &c) in v.iter().enumerate() {
        if c == 0 {
            continue;
        }
        for nu in pieri(basis.width(), basis.partition(i), p) {
            out[basis.index(nu)] += c;
        }
    }
    out
}

/// Structure constants of `σ_λ · σ_μ`, as a dense integer vector.
pub fn product(basis: &Basis, lambda: Partition2, mu: Partition2) -> Vec<i64> {
    let mut start = vec![0i64; basis.len()];
    start[basis.index(lambda)] = 1;
    if mu.b == 0 {
        return pieri_vec(basis, &start, mu.a);
    }
    let first = pieri_vec(basis, &pieri_vec(basis, &start, mu.a), mu.b);
    let second = pieri_vec(basis, &pieri_vec(basis, &start, mu.a + 1), mu.b - 1);
    first.iter().zip(&second).map(|(x, y)| x - y).collect()
}
