//! The Cayley trick at the level of Poincaré polynomials.

use super::projective_poincare;
use crate::ring::{LPoly, TPoly};
use crate::{Error, Result};

/// Poincaré polynomial of the hypersurface `X_w ⊂ ℙ(E)` cut out by a section
/// `w` of a rank-`r` bundle `E → U`, given the zero locus `S` of `w`:
/// `P(X_w) = P(S)·t^{2(r−1)} + P(U)·P(ℙ^{r−2})`.
///
/// `S` has dimension `dim U − r` and must be palindromic about it; an empty
/// `S` is the zero polynomial.
pub fn cayley_trick_class(
    base_class: &LPoly,
    zero_locus: &TPoly,
    base: &TPoly,
    r: u32,
) -> Result<TPoly> {
    if r < 2 {
        return Err(Error::InvalidParameter(format!("bundle rank {r}; need r >= 2")));
    }
    let realized = base_class.to_poincare()?;
    if &realized != base {
        return Err(Error::InvalidParameter(format!(
            "the base class realizes to {realized}, not {base}"
        )));
    }
    let dim_base = base
        .degree()
        .ok_or_else(|| Error::InvalidParameter("empty base".into()))?
        / 2;
    if !base.is_palindromic(dim_base) {
        return Err(Error::InvalidParameter(format!(
            "P(U) = {base} is not palindromic about {dim_base}"
        )));
    }
    let consistent = if dim_base < r {
        zero_locus.is_zero()
    } else {
        zero_locus.is_zero() || zero_locus.is_palindromic(dim_base - r)
    };
    if !consistent {
        return Err(Error::InvalidParameter(format!(
            "P(S) = {zero_locus} is not the Poincaré polynomial of a smooth \
             projective variety of dimension dim U − r = {}",
            dim_base as i64 - r as i64
        )));
    }
    let total = &zero_locus.shift(2 * (r - 1)) + &(base * &projective_poincare(r as i64 - 2));
    let centre = dim_base + r - 2;
    if !total.is_palindromic(centre) {
        return Err(Error::IdentityViolated(format!(
            "P(X_w) = {total} is not palindromic about {centre}"
        )));
    }
    Ok(total)
}
