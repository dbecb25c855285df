//! Betti numbers of a smooth hypersurface in projective space.
//!
//! Deliberately self-contained: nothing here touches the Grassmannian code,
//! so agreement with the derived `P_Y` is an independent confirmation.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::ring::TPoly;
use crate::{Error, Result};

fn binomial(n: u32, j: u32) -> BigInt {
    (0..j).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Poincaré polynomial of a smooth degree-`d` hypersurface in `ℙ^N`.
///
/// Off the middle it looks like `ℙ^{N−1}`; the middle comes from
/// `χ = d · [h^{N−1}] (1+h)^{N+1} (1+dh)^{−1}`.
pub fn hypersurface_poincare_oracle(d: u32, ambient_dim: u32) -> Result<TPoly> {
    if d == 0 || ambient_dim < 2 {
        return Err(Error::InvalidParameter(format!(
            "hypersurface of degree {d} in P^{ambient_dim}: need d >= 1, N >= 2"
        )));
    }
    let dim = ambient_dim - 1;
    let neg_d = -BigInt::from(d);
    let mut coefficient = BigInt::zero();
    for j in 0..=dim {
        coefficient += binomial(ambient_dim + 1, j) * neg_d.pow(dim - j);
    }
    let euler = coefficient * d;

    let len = 2 * dim as usize + 1;
    let mut b = vec![BigInt::zero(); len];
    for j in (0..len).step_by(2) {
        b[j] = BigInt::one();
    }
    b[dim as usize] = BigInt::zero();
    let off_middle: BigInt = b.iter().step_by(2).sum();
    b[dim as usize] = if dim % 2 == 0 {
        euler - off_middle
    } else {
        off_middle - euler
    };
    TPoly::from_betti(&b)
}

/// Degree of the locus of degenerate skew forms on an `n`-dimensional space,
/// i.e. forms of rank at most `n − 2` (n even) or `n − 3` (n odd).
///
/// Harris–Tu: for rank ≤ 2r on `N` dimensions, with `c = N − 2r − 1`,
/// `deg = 2^{−c} Π_{i<c} C(N+i, 2r+2i+1) / C(2i+1, i)`.
pub fn degenerate_forms_degree(n: u32) -> Result<BigInt> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("n = {n} is below 4")));
    }
    let half_rank = (n - 2) / 2;
    let c = n - 2 * half_rank - 1;
    let mut num = BigInt::one();
    let mut den = BigInt::one() << c;
    for i in 0..c {
        num *= binomial(n + i, 2 * half_rank + 2 * i + 1);
        den *= binomial(2 * i + 1, i);
    }
    if !(&num % &den).is_zero() {
        return Err(Error::IdentityViolated(format!(
            "degree of degenerate forms for n = {n} is not integral: {num}/{den}"
        )));
    }
    Ok(num / den)
}
