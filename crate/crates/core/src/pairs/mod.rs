//! Pfaffian–Grassmannian pairs `(X, Y)`: parameters, the Cayley-hypersurface
//! relation in K₀(Var), and the Poincaré polynomials it pins down.
//!
//! `X = Gr(2,n) ∩ ℙ(U)` and `Y = Pf ∩ ℙ(U^⊥)` are never represented as
//! 𝕃-polynomials. All relation arithmetic happens on Poincaré realizations.

mod cayley;
mod oracle;
mod report;
mod status;

pub use cayley::cayley_trick_class;
pub use oracle::{degenerate_forms_degree, hypersurface_poincare_oracle};
pub use report::{
    exit_code_for, pair_report, pair_report_with_checks, CheckId, CheckOutcome, CheckStatus, Finding, PairContext,
    PairReport, REPORT_SCHEMA_VERSION,
};
pub use status::{
    check_cork02, check_l_equivalence, in_lemma_range, main_theorem_status, nl_status,
    transcendental_basis, MainTheorem, NlStatus, TranscendentalBasis,
};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chern::{check_section, euler_characteristic_with};
use crate::ring::{projective_class, LPoly, Poly, TPoly};
use crate::schubert::{
    betti, grassmannian_class, hyperplane_section_class, twist_exponent, ClassMethod, Engine,
    SchubertRing,
};
use crate::{Error, Result};

/// `Gr(2,n)` cut by `k` general Plücker hyperplanes, with no partner attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearSection {
    pub n: u32,
    pub k: u32,
}

impl LinearSection {
    /// Accepts `0 <= k <= 2(n−2)`.
    pub fn new(n: u32, k: u32) -> Result<Self> {
        check_section(n, k)?;
        Ok(LinearSection { n, k })
    }

    pub fn dim(&self) -> u32 {
        2 * (self.n - 2) - self.k
    }
}

/// Largest `k` for which a general `ℙ(U^⊥)` misses the singular locus of `Pf`.
pub fn max_smooth_k(n: u32) -> u32 {
    if n % 2 == 0 {
        6
    } else {
        10
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PGPair {
    pub n: u32,
    pub k: u32,
    pub dim_x: i64,
    pub dim_y: i64,
    /// Exponent of the 𝕃-twist on the Pfaffian side.
    pub s: u32,
    /// Half the dimension gap, `(dim X − dim Y)/2`.
    pub m: i64,
    pub smooth_range: bool,
}

impl PGPair {
    pub fn section(&self) -> LinearSection {
        LinearSection {
            n: self.n,
            k: self.k,
        }
    }

    pub fn dim_x(&self) -> u32 {
        self.dim_x as u32
    }

    pub fn dim_y(&self) -> u32 {
        self.dim_y as u32
    }
}

pub fn make_pair(n: u32, k: u32) -> Result<PGPair> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("n = {n}; need n >= 4")));
    }
    if k == 0 {
        return Err(Error::InvalidParameter("k = 0; need k >= 1".into()));
    }
    let max_k = max_smooth_k(n);
    if k > max_k {
        return Err(Error::OutOfSmoothRange { n, k, max_k });
    }
    let dim_x = 2 * (n as i64 - 2) - k as i64;
    let dim_y = if n % 2 == 0 { k as i64 - 2 } else { k as i64 - 4 };
    if dim_x < 0 || dim_y < 0 {
        return Err(Error::NegativeDimension {
            n,
            k,
            dim_x,
            dim_y,
        });
    }
    let s = twist_exponent(n);
    let m = (dim_x - dim_y) / 2;
    debug_assert_eq!(m, s as i64 - k as i64 + 1);
    Ok(PGPair {
        n,
        k,
        dim_x,
        dim_y,
        s,
        m,
        smooth_range: true,
    })
}

/// Classes of the two kinds of fibre of `Q → ℙ(U^⊥)`: a hyperplane section
/// and a Schubert divisor.
pub fn fiber_classes(n: u32) -> Result<(LPoly, LPoly)> {
    let f1 = hyperplane_section_class(n)?;
    let f2 = &f1 + &LPoly::lefschetz_pow(twist_exponent(n));
    Ok((f1, f2))
}

fn realize(class: &LPoly) -> TPoly {
    class
        .to_poincare()
        .expect("effective classes have nonnegative coefficients")
}

/// `P(ℙ^r)`, zero for `r < 0`.
fn projective_poincare(r: i64) -> TPoly {
    realize(&projective_class(r))
}

fn require_palindromic(p: &TPoly, dim: u32, what: &str) -> Result<()> {
    if p.is_palindromic(dim) {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "{what} = {p} is not palindromic about {dim}"
        )))
    }
}

/// `P(Q)` through the Grassmannian projection: `P(Gr)·P(ℙ^{k−2}) + P_X·t^{2(k−1)}`.
pub fn q_class_grassmannian_side(section: LinearSection, px: &TPoly) -> Result<TPoly> {
    require_palindromic(px, section.dim(), "P_X")?;
    let gr = realize(&grassmannian_class(section.n, ClassMethod::ProductFormula)?);
    let k = section.k as i64;
    Ok(&(&gr * &projective_poincare(k - 2)) + &px.shift(2 * (section.k - 1)))
}

/// `P(Q)` through the projection to `ℙ(U^⊥)`: `P(ℙ^{k−1})·P(H(2,n)) + P_Y·t^{2s}`.
pub fn q_class_pfaffian_side(pair: &PGPair, py: &TPoly) -> Result<TPoly> {
    let h = realize(&hyperplane_section_class(pair.n)?);
    Ok(&(&projective_poincare(pair.k as i64 - 1) * &h) + &py.shift(2 * pair.s))
}

/// Solve the K₀ relation for `P_Y`, then check the result looks like the
/// Poincaré polynomial of a smooth connected projective variety of dimension `dim Y`.
pub fn derive_poincare_y(pair: &PGPair, px: &TPoly) -> Result<TPoly> {
    let easy = q_class_grassmannian_side(pair.section(), px)?;
    let h = realize(&hyperplane_section_class(pair.n)?);
    let known = &projective_poincare(pair.k as i64 - 1) * &h;
    let rest: Poly = easy.as_poly() - known.as_poly();
    let quotient = rest.div_exact(&Poly::monomial(2 * pair.s, 1))?;
    let py = TPoly::try_from_poly(quotient)?;
    let dim_y = pair.dim_y();
    if !py.is_palindromic(dim_y) {
        return Err(Error::IdentityViolated(format!(
            "derived P_Y = {py} is not palindromic about {dim_y}"
        )));
    }
    if py.degree() != Some(2 * dim_y) {
        return Err(Error::IdentityViolated(format!(
            "derived P_Y = {py} does not have degree {}",
            2 * dim_y
        )));
    }
    // a positive-dimensional complete intersection is connected; in dimension
    // zero Y is a finite set of points
    let b0 = py.betti(0);
    if (dim_y > 0 && !b0.is_one()) || b0.is_zero() {
        return Err(Error::IdentityViolated(format!(
            "derived P_Y = {py} has b_0 = {b0}"
        )));
    }
    Ok(py)
}

/// Poincaré polynomial of `X`: ambient Betti numbers below the middle, duality
/// above it, and the middle forced by the Euler characteristic.
pub fn poincare_x(section: LinearSection) -> Result<TPoly> {
    poincare_x_with(
        &SchubertRing::new(section.n, Engine::PieriGiambelli)?,
        section.k,
    )
}

pub fn poincare_x_with(ring: &SchubertRing, k: u32) -> Result<TPoly> {
    let n = ring.n();
    let d = check_section(n, k)?;
    let euler = euler_characteristic_with(ring, k)?;
    let mut b = vec![BigInt::zero(); 2 * d as usize + 1];
    for j in 0..d {
        let below = BigInt::from(betti(n, j)?);
        b[j as usize] = below.clone();
        b[(2 * d - j) as usize] = below;
    }
    let off_middle: BigInt = b
        .iter()
        .enumerate()
        .map(|(j, bj)| if j % 2 == 0 { bj.clone() } else { -bj })
        .sum();
    let middle = if d % 2 == 0 {
        &euler - &off_middle
    } else {
        &off_middle - &euler
    };
    let inconsistent = |detail: String| Error::InconsistentEuler { n, k, detail };
    if middle.is_negative() {
        return Err(inconsistent(format!("χ = {euler} forces b_{d} = {middle}")));
    }
    if d % 2 == 1 && !(&middle % 2u32).is_zero() {
        return Err(inconsistent(format!(
            "odd middle degree {d} with odd Betti number {middle}"
        )));
    }
    let ambient = BigInt::from(betti(n, d)?);
    if middle < ambient {
        return Err(inconsistent(format!(
            "b_{d} = {middle} is smaller than the ambient {ambient}"
        )));
    }
    b[d as usize] = middle;
    TPoly::from_betti(&b)
}

/// Middle Betti number of `X` minus that of the ambient Grassmannian.
pub fn variable_betti(section: LinearSection) -> Result<BigInt> {
    let px = poincare_x(section)?;
    variable_betti_of(section, &px)
}

pub(crate) fn variable_betti_of(section: LinearSection, px: &TPoly) -> Result<BigInt> {
    let d = section.dim();
    Ok(px.betti(d) - BigInt::from(betti(section.n, d)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(b: &[i64]) -> TPoly {
        TPoly::from_betti(b).unwrap()
    }

    #[test]
    fn pair_parameters() {
        let p = make_pair(7, 7).unwrap();
        assert_eq!((p.dim_x, p.dim_y, p.s, p.m), (3, 3, 6, 0));
        let p = make_pair(8, 4).unwrap();
        assert_eq!((p.dim_x, p.dim_y, p.s, p.m), (8, 2, 6, 3));
        assert!(matches!(
            make_pair(6, 7),
            Err(Error::OutOfSmoothRange { max_k: 6, .. })
        ));
        assert!(matches!(
            make_pair(4, 1),
            Err(Error::NegativeDimension { dim_y: -1, .. })
        ));
        assert!(matches!(make_pair(3, 1), Err(Error::InvalidParameter(_))));
        assert!(matches!(make_pair(6, 0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn fibres_of_gr24() {
        let (f1, f2) = fiber_classes(4).unwrap();
        assert_eq!(f1, LPoly::from_coeffs(&[1, 1, 1, 1]));
        assert_eq!(f2, LPoly::from_coeffs(&[1, 1, 2, 1]));
    }

    #[test]
    fn empty_projective_space_for_k1() {
        let s = LinearSection::new(5, 1).unwrap();
        let px = poincare_x(s).unwrap();
        assert_eq!(q_class_grassmannian_side(s, &px).unwrap(), px);
    }

    #[test]
    fn quadric_threefold() {
        let s = LinearSection::new(4, 1).unwrap();
        assert_eq!(poincare_x(s).unwrap(), t(&[1, 0, 1, 0, 1, 0, 1]));
        assert_eq!(variable_betti(s).unwrap(), BigInt::from(0));
    }

    #[test]
    fn calabi_yau_threefold() {
        let px = poincare_x(LinearSection::new(7, 7).unwrap()).unwrap();
        assert_eq!(px, t(&[1, 0, 1, 102, 1, 0, 1]));
        let pair = make_pair(7, 7).unwrap();
        assert_eq!(derive_poincare_y(&pair, &px).unwrap(), px);
    }

    #[test]
    fn genus_eight_threefold_and_cubic() {
        let px = t(&[1, 0, 1, 10, 1, 0, 1]);
        assert_eq!(poincare_x(LinearSection::new(6, 5).unwrap()).unwrap(), px);
        let pair = make_pair(6, 5).unwrap();
        assert_eq!(derive_poincare_y(&pair, &px).unwrap(), px);
        assert_eq!(variable_betti(pair.section()).unwrap(), BigInt::from(10));
    }

    #[test]
    fn k3_and_cubic_fourfold() {
        let pair = make_pair(6, 6).unwrap();
        let px = poincare_x(pair.section()).unwrap();
        assert_eq!(px, t(&[1, 0, 22, 0, 1]));
        assert_eq!(
            derive_poincare_y(&pair, &px).unwrap(),
            t(&[1, 0, 1, 0, 23, 0, 1, 0, 1])
        );
    }

    #[test]
    fn points_in_dimension_zero() {
        for n in [4u32, 6, 8, 10] {
            let pair = make_pair(n, 2).unwrap();
            let px = poincare_x(pair.section()).unwrap();
            let py = derive_poincare_y(&pair, &px).unwrap();
            assert_eq!(py, t(&[n as i64 / 2]));
        }
    }

    #[test]
    fn eightfold_and_quartic() {
        let pair = make_pair(8, 4).unwrap();
        let px = poincare_x(pair.section()).unwrap();
        assert_eq!(px.betti(8), BigInt::from(24));
        assert_eq!(
            px.betti_numbers().iter().step_by(2).take(4).cloned().collect::<Vec<_>>(),
            vec![BigInt::from(1), BigInt::from(1), BigInt::from(2), BigInt::from(2)]
        );
        assert_eq!(variable_betti(pair.section()).unwrap(), BigInt::from(21));
        assert_eq!(derive_poincare_y(&pair, &px).unwrap(), t(&[1, 0, 22, 0, 1]));
    }

    #[test]
    fn wrong_input_is_rejected() {
        let pair = make_pair(6, 6).unwrap();
        // not palindromic
        assert!(matches!(
            derive_poincare_y(&pair, &t(&[1, 0, 22, 0, 2])),
            Err(Error::InvalidParameter(_))
        ));
        // wrong dimension
        assert!(derive_poincare_y(&pair, &t(&[1, 0, 1])).is_err());
    }

    #[test]
    fn relation_holds_both_ways() {
        for (n, k) in [(6, 3), (7, 5), (8, 6), (9, 9)] {
            let pair = make_pair(n, k).unwrap();
            let px = poincare_x(pair.section()).unwrap();
            let py = derive_poincare_y(&pair, &px).unwrap();
            assert_eq!(
                q_class_grassmannian_side(pair.section(), &px).unwrap(),
                q_class_pfaffian_side(&pair, &py).unwrap()
            );
        }
    }
}
