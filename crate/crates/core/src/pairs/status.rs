//! Which pairs the structural results cover.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{derive_poincare_y, poincare_x, variable_betti_of, LinearSection, PGPair};
use crate::ring::projective_class;
use crate::schubert::{grassmannian_class, hyperplane_section_class, ClassMethod};
use crate::{Error, Result};

/// Pairs for which the variable Betti number of `X` is tied to the middle of `Y`.
pub fn in_lemma_range(n: u32, k: u32) -> bool {
    if n % 2 == 0 {
        matches!(k, 2 | 4)
    } else {
        matches!(k, 2 | 4 | 6)
    }
}

/// `dim H_var(X) = b_{dim Y}(Y) − 1`, with `P_Y` derived from the relation.
pub fn check_cork02(pair: &PGPair) -> Result<bool> {
    if !in_lemma_range(pair.n, pair.k) {
        return Err(Error::NotInLemmaRange {
            n: pair.n,
            k: pair.k,
        });
    }
    let px = poincare_x(pair.section())?;
    let py = derive_poincare_y(pair, &px)?;
    let var = variable_betti_of(pair.section(), &px)?;
    Ok(var == py.betti(pair.dim_y()) - 1)
}

/// `[ℙ^{n−1}]·[H(2,n)] = [ℙ^{n−2}]·[Gr(2,n)]` for odd `n`.
pub fn check_l_equivalence(n: u32) -> Result<bool> {
    if n % 2 == 0 || n < 5 {
        return Err(Error::InvalidParameter(format!(
            "n = {n}; the identity is stated for odd n >= 5"
        )));
    }
    let lhs = &projective_class(n as i64 - 1) * &hyperplane_section_class(n)?;
    let rhs = &projective_class(n as i64 - 2) * &grassmannian_class(n, ClassMethod::Cells)?;
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NlStatus {
    Satisfied,
    /// Not known to hold. Never read as a failure.
    Unknown,
}

/// Membership in the list of pairs known to satisfy the Noether–Lefschetz condition.
pub fn nl_status(n: u32, k: u32) -> NlStatus {
    let known = k % 2 == 1
        || (n % 2 == 0 && n >= 8 && k == 4)
        || (n % 2 == 1 && n >= 7 && k == 6)
        || (n, k) == (6, 6)
        || (n, k) == (7, 8);
    if known {
        NlStatus::Satisfied
    } else {
        NlStatus::Unknown
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MainTheorem {
    Applies,
    NotCovered,
    HypothesisFails,
}

/// How much `variable_betti > 0` says about transcendental cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TranscendentalBasis {
    /// Odd-dimensional `X`: all middle cohomology is variable and transcendental.
    OddDimensionUnconditional,
    /// Even-dimensional `X`: variable classes are transcendental only under (NL).
    EvenDimensionConditionalOnNl,
}

pub fn transcendental_basis(k: u32) -> TranscendentalBasis {
    if k % 2 == 1 {
        TranscendentalBasis::OddDimensionUnconditional
    } else {
        TranscendentalBasis::EvenDimensionConditionalOnNl
    }
}

/// Whether the motivic comparison theorem covers `X`, with nonzero variable
/// middle cohomology standing in for nonzero transcendental cohomology.
pub fn main_theorem_status(section: LinearSection) -> Result<MainTheorem> {
    let px = poincare_x(section)?;
    let var = variable_betti_of(section, &px)?;
    if var.is_zero() {
        return Ok(MainTheorem::HypothesisFails);
    }
    let (n, k) = (section.n, section.k);
    let in_range = k <= 6 || (n, k) == (7, 7);
    if in_range && nl_status(n, k) == NlStatus::Satisfied {
        Ok(MainTheorem::Applies)
    } else {
        Ok(MainTheorem::NotCovered)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::make_pair;

    #[test]
    fn nl_catalogue() {
        assert_eq!(nl_status(9, 5), NlStatus::Satisfied);
        assert_eq!(nl_status(8, 4), NlStatus::Satisfied);
        assert_eq!(nl_status(6, 4), NlStatus::Unknown);
        assert_eq!(nl_status(6, 6), NlStatus::Satisfied);
        assert_eq!(nl_status(7, 8), NlStatus::Satisfied);
        assert_eq!(nl_status(7, 6), NlStatus::Satisfied);
        assert_eq!(nl_status(5, 6), NlStatus::Unknown);
        assert_eq!(nl_status(9, 8), NlStatus::Unknown);
    }

    #[test]
    fn l_equivalence() {
        assert!(check_l_equivalence(5).unwrap());
        assert!(check_l_equivalence(7).unwrap());
        assert!(matches!(check_l_equivalence(6), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn variable_betti_lemma() {
        assert!(check_cork02(&make_pair(8, 4).unwrap()).unwrap());
        assert!(check_cork02(&make_pair(7, 6).unwrap()).unwrap());
        assert!(matches!(
            check_cork02(&make_pair(7, 7).unwrap()),
            Err(Error::NotInLemmaRange { n: 7, k: 7 })
        ));
    }

    #[test]
    fn theorem_coverage() {
        let status = |n, k| main_theorem_status(LinearSection::new(n, k).unwrap()).unwrap();
        assert_eq!(status(7, 7), MainTheorem::Applies);
        assert_eq!(status(10, 5), MainTheorem::Applies);
        assert_eq!(status(4, 1), MainTheorem::HypothesisFails);
        assert_eq!(status(6, 4), MainTheorem::NotCovered);
        assert_eq!(status(7, 8), MainTheorem::NotCovered);
    }
}
