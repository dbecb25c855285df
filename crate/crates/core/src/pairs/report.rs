//! Everything known about one pair, with every named check and its outcome.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{
    cayley_trick_class, check_l_equivalence, derive_poincare_y, fiber_classes,
    degenerate_forms_degree, hypersurface_poincare_oracle, in_lemma_range, main_theorem_status, make_pair, nl_status,
    poincare_x, q_class_grassmannian_side, q_class_pfaffian_side, transcendental_basis,
    variable_betti_of, MainTheorem, NlStatus, PGPair, TranscendentalBasis,
};
use crate::chern::{euler_characteristic_with, euler_from_moments, middle_hodge, HodgeSummary};
use crate::ring::{projective_class, LPoly, Poly, TPoly};
use crate::schubert::{
    grassmannian_class, hyperplane_section_class, hyperplane_section_class_lefschetz,
    schubert_divisor_class, table, ClassMethod, Engine, SchubertRing,
};
use crate::{Diagnostic, Error, Result};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CheckId {
    #[serde(rename = "hyperplane_section_class")]
    HyperplaneSectionClass,
    #[serde(rename = "fiber_classes")]
    FiberClasses,
    #[serde(rename = "make_pair")]
    MakePair,
    #[serde(rename = "poincare_x")]
    PoincareX,
    #[serde(rename = "q_class_grassmannian_side")]
    QClass,
    #[serde(rename = "derive_poincare_y")]
    DerivePoincareY,
    #[serde(rename = "hypersurface_poincare_oracle")]
    HypersurfaceOracle,
    #[serde(rename = "check_l_equivalence")]
    LEquivalence,
    #[serde(rename = "check_cork02")]
    Cork02,
    #[serde(rename = "middle_hodge")]
    MiddleHodge,
    #[serde(rename = "engine_agreement")]
    EngineAgreement,
    #[serde(rename = "cayley_trick_class")]
    CayleyTrick,
}

impl CheckId {
    pub const ALL: [CheckId; 12] = [
        CheckId::HyperplaneSectionClass,
        CheckId::FiberClasses,
        CheckId::MakePair,
        CheckId::PoincareX,
        CheckId::QClass,
        CheckId::DerivePoincareY,
        CheckId::HypersurfaceOracle,
        CheckId::LEquivalence,
        CheckId::Cork02,
        CheckId::MiddleHodge,
        CheckId::EngineAgreement,
        CheckId::CayleyTrick,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::HyperplaneSectionClass => "hyperplane_section_class",
            CheckId::FiberClasses => "fiber_classes",
            CheckId::MakePair => "make_pair",
            CheckId::PoincareX => "poincare_x",
            CheckId::QClass => "q_class_grassmannian_side",
            CheckId::DerivePoincareY => "derive_poincare_y",
            CheckId::HypersurfaceOracle => "hypersurface_poincare_oracle",
            CheckId::LEquivalence => "check_l_equivalence",
            CheckId::Cork02 => "check_cork02",
            CheckId::MiddleHodge => "middle_hodge",
            CheckId::EngineAgreement => "engine_agreement",
            CheckId::CayleyTrick => "cayley_trick_class",
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == s || c.name().strip_prefix("check_") == Some(s))
            .ok_or_else(|| {
                let known: Vec<_> = CheckId::ALL.iter().map(|c| c.name()).collect();
                Error::InvalidParameter(format!(
                    "unknown check `{s}`; known checks: {}",
                    known.join(", ")
                ))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The check does not apply to this pair.
    Skip,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skip => "skip",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: CheckId,
    pub status: CheckStatus,
    pub detail: String,
    /// Set when the check failed because a computation raised an error.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<Diagnostic>,
}

/// A stated motivic decomposition compared against the derived Betti numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub statement: String,
    /// Betti numbers the statement predicts, read literally.
    pub literal: TPoly,
    pub derived: TPoly,
    /// Whether the comparison ignores a sum of Tate twists.
    pub up_to_tate: bool,
    pub agrees: bool,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairReport {
    pub schema_version: u32,
    pub pair: PGPair,
    pub poincare_x: TPoly,
    pub poincare_y: TPoly,
    #[serde(with = "crate::json_int")]
    pub variable_betti: BigInt,
    pub hodge: HodgeSummary,
    pub nl_status: NlStatus,
    pub main_theorem: MainTheorem,
    pub transcendental_basis: TranscendentalBasis,
    pub checks: Vec<CheckOutcome>,
    pub findings: Vec<Finding>,
}

impl PairReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn check(&self, id: CheckId) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == id)
    }

    /// 0 when nothing failed, 3 if a failure came from an internal
    /// inconsistency, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        exit_code_for(&self.checks)
    }
}

pub fn exit_code_for<'a>(checks: impl IntoIterator<Item = &'a CheckOutcome>) -> i32 {
    let mut code = 0;
    for c in checks {
        if c.status == CheckStatus::Fail {
            match &c.error {
                Some(d) if d.exit_code == 3 => return 3,
                _ => code = 1,
            }
        }
    }
    code
}

/// Per-pair values computed on first use and shared by all checks.
pub struct PairContext {
    pair: PGPair,
    px: OnceLock<Result<TPoly>>,
    py: OnceLock<Result<TPoly>>,
    hodge: OnceLock<Result<HodgeSummary>>,
}

fn cloned<T: Clone>(r: &Result<T>) -> Result<&T> {
    r.as_ref().map_err(Clone::clone)
}

fn realize(class: &LPoly) -> Result<TPoly> {
    class.to_poincare()
}

impl PairContext {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        Ok(PairContext {
            pair: make_pair(n, k)?,
            px: OnceLock::new(),
            py: OnceLock::new(),
            hodge: OnceLock::new(),
        })
    }

    pub fn pair(&self) -> &PGPair {
        &self.pair
    }

    pub fn poincare_x(&self) -> Result<&TPoly> {
        cloned(self.px.get_or_init(|| poincare_x(self.pair.section())))
    }

    pub fn poincare_y(&self) -> Result<&TPoly> {
        cloned(self.py.get_or_init(|| {
            let px = self.poincare_x()?;
            derive_poincare_y(&self.pair, px)
        }))
    }

    pub fn hodge(&self) -> Result<&HodgeSummary> {
        cloned(
            self.hodge
                .get_or_init(|| middle_hodge(self.pair.n, self.pair.k)),
        )
    }

    pub fn variable_betti(&self) -> Result<BigInt> {
        variable_betti_of(self.pair.section(), self.poincare_x()?)
    }

    pub fn run(&self, id: CheckId) -> CheckOutcome {
        let (status, detail, error) = match self.evaluate(id) {
            Ok(Verdict::Pass(d)) => (CheckStatus::Pass, d, None),
            Ok(Verdict::Fail(d)) => (CheckStatus::Fail, d, None),
            Ok(Verdict::Skip(d)) => (CheckStatus::Skip, d, None),
            Err(e) => (CheckStatus::Fail, e.to_string(), Some(Diagnostic::from(&e))),
        };
        CheckOutcome {
            name: id,
            status,
            detail,
            error,
        }
    }

    fn evaluate(&self, id: CheckId) -> Result<Verdict> {
        let PGPair { n, k, .. } = self.pair;
        match id {
            CheckId::HyperplaneSectionClass => {
                let cells = grassmannian_class(n, ClassMethod::Cells)?;
                let product = grassmannian_class(n, ClassMethod::ProductFormula)?;
                let h = hyperplane_section_class(n)?;
                let h_betti = hyperplane_section_class_lefschetz(n)?;
                Ok(Verdict::from_bool(
                    cells == product && h == h_betti,
                    format!("[Gr(2,{n})] = {cells}; [H(2,{n})] = {h}"),
                ))
            }
            CheckId::FiberClasses => {
                let (f1, f2) = fiber_classes(n)?;
                let twist = LPoly::lefschetz_pow(self.pair.s);
                let ok = &f2 - &f1 == twist && f1 == hyperplane_section_class_lefschetz(n)?;
                Ok(Verdict::from_bool(ok, format!("F1 = {f1}; F2 = {f2}")))
            }
            CheckId::MakePair => {
                let p = &self.pair;
                let ok = p.m == p.s as i64 - p.k as i64 + 1 && 2 * p.m == p.dim_x - p.dim_y;
                Ok(Verdict::from_bool(
                    ok,
                    format!("dim X = {}, dim Y = {}, s = {}, m = {}", p.dim_x, p.dim_y, p.s, p.m),
                ))
            }
            CheckId::PoincareX => {
                let px = self.poincare_x()?;
                let d = self.pair.dim_x();
                let stray_odd = px
                    .betti_numbers()
                    .iter()
                    .enumerate()
                    .any(|(j, b)| j % 2 == 1 && j as u32 != d && !b.is_zero());
                let euler = &self.hodge()?.euler_char;
                let ok = px.is_palindromic(d) && !stray_odd && &px.euler_characteristic() == euler;
                Ok(Verdict::from_bool(ok, format!("P_X = {px}, χ = {euler}")))
            }
            CheckId::QClass => {
                let px = self.poincare_x()?;
                let py = self.poincare_y()?;
                let easy = q_class_grassmannian_side(self.pair.section(), px)?;
                let hard = q_class_pfaffian_side(&self.pair, py)?;
                Ok(Verdict::from_bool(easy == hard, format!("P(Q) = {easy}")))
            }
            CheckId::DerivePoincareY => {
                let py = self.poincare_y()?;
                let d = self.pair.dim_y();
                if d == 0 {
                    // a linear section of the degenerate locus of complementary dimension
                    let count = py.betti(0);
                    let degree = degenerate_forms_degree(n)?;
                    let ok = py.degree() == Some(0) && count == degree;
                    return Ok(Verdict::from_bool(
                        ok,
                        format!("P_Y = {py}: {count} points, degree of the degenerate locus {degree}"),
                    ));
                }
                let top = py.betti(2 * d);
                let ok = py.is_palindromic(d) && py.betti(0).is_one() && top.is_one();
                Ok(Verdict::from_bool(ok, format!("P_Y = {py}")))
            }
            CheckId::HypersurfaceOracle => {
                if n % 2 == 1 || self.pair.dim_y < 1 {
                    return Ok(Verdict::Skip(
                        "Y is a hypersurface of positive dimension only for even n and k >= 3".into(),
                    ));
                }
                let oracle = hypersurface_poincare_oracle(n / 2, k - 1)?;
                let py = self.poincare_y()?;
                Ok(Verdict::from_bool(
                    &oracle == py,
                    format!("degree {} hypersurface in P^{}: {oracle}", n / 2, k - 1),
                ))
            }
            CheckId::LEquivalence => {
                if n % 2 == 0 {
                    return Ok(Verdict::Skip("stated for odd n".into()));
                }
                let identity = check_l_equivalence(n)?;
                if n != k {
                    return Ok(Verdict::from_bool(
                        identity,
                        format!("[P^{}][H(2,{n})] = [P^{}][Gr(2,{n})]", n - 1, n - 2),
                    ));
                }
                let px = self.poincare_x()?;
                let py = self.poincare_y()?;
                Ok(Verdict::from_bool(
                    identity && px == py,
                    format!("class identity {identity}; P_X = {px}, P_Y = {py}"),
                ))
            }
            CheckId::Cork02 => {
                if !in_lemma_range(n, k) {
                    return Ok(Verdict::Skip(format!("k = {k} is outside the lemma's list")));
                }
                let var = self.variable_betti()?;
                let middle_y = self.poincare_y()?.betti(self.pair.dim_y());
                Ok(Verdict::from_bool(
                    var == &middle_y - 1,
                    format!("variable Betti {var}, b_mid(Y) = {middle_y}"),
                ))
            }
            CheckId::MiddleHodge => {
                let hodge = self.hodge()?;
                hodge.check().map_err(Error::IdentityViolated)?;
                let ring = SchubertRing::new(n, Engine::PieriGiambelli)?;
                let via_moments = euler_from_moments(&ring, k)?;
                let px = self.poincare_x()?;
                let ok = via_moments == hodge.euler_char
                    && hodge.middle_betti == px.betti(self.pair.dim_x());
                Ok(Verdict::from_bool(
                    ok,
                    format!(
                        "χ = {} (moments {via_moments}), middle Hodge {}",
                        hodge.euler_char,
                        join(&hodge.middle_hodge)
                    ),
                ))
            }
            CheckId::EngineAgreement => {
                let production = table(n, Engine::PieriGiambelli);
                let tableaux = table(n, Engine::LittlewoodRichardson);
                let same_table = production.entries() == tableaux.entries();
                let lr_ring = SchubertRing::new(n, Engine::LittlewoodRichardson)?;
                let lr_euler = euler_characteristic_with(&lr_ring, k)?;
                let euler = &self.hodge()?.euler_char;
                Ok(Verdict::from_bool(
                    same_table && &lr_euler == euler,
                    format!("tables agree: {same_table}; χ = {euler} vs {lr_euler}"),
                ))
            }
            CheckId::CayleyTrick => self.cayley(),
        }
    }

    fn cayley(&self) -> Result<Verdict> {
        let PGPair { n, k, .. } = self.pair;
        if k < 2 {
            return Ok(Verdict::Skip("needs a bundle of rank >= 2".into()));
        }
        let gr = grassmannian_class(n, ClassMethod::Cells)?;
        let p_gr = realize(&gr)?;
        let px = self.poincare_x()?;
        let z = cayley_trick_class(&gr, px, &p_gr, k)?;
        let q = q_class_grassmannian_side(self.pair.section(), px)?;
        // Z is an ample divisor in Gr × P^{k−1}: below the middle it has the
        // Betti numbers of the product
        let product = &p_gr * &realize(&projective_class(k as i64 - 1))?;
        let dim_z = 2 * (n - 2) + k - 2;
        let lefschetz = (0..dim_z).all(|j| z.betti(j) == product.betti(j));
        Ok(Verdict::from_bool(
            z == q && lefschetz,
            format!("P(Z) = {z}, palindromic about {dim_z}"),
        ))
    }

    /// Stated decompositions for this pair, compared with the derived Betti numbers.
    pub fn findings(&self) -> Result<Vec<Finding>> {
        let PGPair { n, k, .. } = self.pair;
        let px = self.poincare_x()?;
        let py = self.poincare_y()?;
        let t = |j: u32| TPoly::from_betti(&[1]).map(|one| one.shift(j));
        let mut out = vec![self.singular_fibre()?];
        match (n, k) {
            (6, 5) | (7, 7) => out.push(exact(
                "h(X) ≅ h(Y)".into(),
                px.clone(),
                py.clone(),
            )),
            (6, 6) => {
                let literal = &(&px.shift(2) + &t(0)?) + &t(8)?;
                let mut f = exact("h(Y) ≅ h(X)(−1) ⊕ 𝟙 ⊕ 𝟙(−4)".into(), literal, py.clone());
                if !f.agrees {
                    f.note = format!(
                        "literal count gives b_4(Y) = {}, derived b_4(Y) = {}; the statement \
                         appears to omit one summand 𝟙(−2). Both computations are left as they are.",
                        f.literal.betti(4),
                        f.derived.betti(4)
                    );
                }
                out.push(f);
            }
            (8, 4) => out.push(up_to_tate(
                "h(X) ≅ h(S)(−3) ⊕ ⊕𝟙(∗), S the quartic K3 surface Y".into(),
                py.shift(6),
                px.clone(),
            )),
            (10, 5) => {
                let odd = Poly::from_terms(
                    py.as_poly()
                        .terms()
                        .filter(|(j, _)| j % 2 == 1)
                        .map(|(j, c)| (j, c.clone())),
                );
                out.push(up_to_tate(
                    "h(X) ≅ t(Y)(−4) ⊕ ⊕𝟙(∗), Y the quintic threefold".into(),
                    TPoly::try_from_poly(odd)?.shift(8),
                    px.clone(),
                ));
            }
            _ => {}
        }
        Ok(out)
    }

    /// The singular fibre read as a Schubert divisor, against `[H(2,n)] + 𝕃^s`.
    fn singular_fibre(&self) -> Result<Finding> {
        let n = self.pair.n;
        let (_, f2) = fiber_classes(n)?;
        let mut f = exact(
            format!("[F2] = [Gr(2,{n})] − L^{}", 2 * n - 4),
            realize(&schubert_divisor_class(n)?)?,
            realize(&f2)?,
        );
        if !f.agrees {
            f.note = format!(
                "the degenerate forms over Y have rank {}, so the singular fibre is a \
                 Schubert divisor only when that rank is 2 (n <= 5); the cell count \
                 differs from [H(2,{n})] + L^{} by {}, while [H(2,{n})] + L^{} reproduces the \
                 independent hypersurface Betti numbers of Y",
                if n % 2 == 0 { n - 2 } else { n - 3 },
                self.pair.s,
                &schubert_divisor_class(n)? - &f2,
                self.pair.s,
            );
        }
        Ok(f)
    }

    pub fn report(&self, checks: &[CheckId]) -> Result<PairReport> {
        let section = self.pair.section();
        Ok(PairReport {
            schema_version: REPORT_SCHEMA_VERSION,
            pair: self.pair,
            poincare_x: self.poincare_x()?.clone(),
            poincare_y: self.poincare_y()?.clone(),
            variable_betti: self.variable_betti()?,
            hodge: self.hodge()?.clone(),
            nl_status: nl_status(self.pair.n, self.pair.k),
            main_theorem: main_theorem_status(section)?,
            transcendental_basis: transcendental_basis(self.pair.k),
            checks: checks.iter().map(|&id| self.run(id)).collect(),
            findings: self.findings()?,
        })
    }
}

fn exact(statement: String, literal: TPoly, derived: TPoly) -> Finding {
    Finding {
        agrees: literal == derived,
        statement,
        literal,
        derived,
        up_to_tate: false,
        note: String::new(),
    }
}

/// `derived − literal` must be a nonnegative combination of even powers of `t`.
fn up_to_tate(statement: String, literal: TPoly, derived: TPoly) -> Finding {
    let diff = derived.as_poly() - literal.as_poly();
    let agrees = diff
        .terms()
        .all(|(j, c)| j % 2 == 0 && !c.is_negative());
    Finding {
        statement,
        literal,
        derived,
        up_to_tate: true,
        agrees,
        note: String::new(),
    }
}

fn join(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

impl Verdict {
    fn from_bool(ok: bool, detail: String) -> Verdict {
        if ok {
            Verdict::Pass(detail)
        } else {
            Verdict::Fail(detail)
        }
    }
}

/// Full report with every registered check.
pub fn pair_report(n: u32, k: u32) -> Result<PairReport> {
    pair_report_with_checks(n, k, &CheckId::ALL)
}

pub fn pair_report_with_checks(n: u32, k: u32, checks: &[CheckId]) -> Result<PairReport> {
    PairContext::new(n, k)?.report(checks)
}
