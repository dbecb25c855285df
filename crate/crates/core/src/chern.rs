//! Characteristic classes on Gr(2,n) and invariants of its linear sections.
//!
//! Throughout, `X = Gr(2,n) ∩ H₁ ∩ … ∩ H_k` is a smooth complete intersection
//! of Plücker hyperplanes, of dimension `d = 2(n−2) − k`. Its tangent class is
//! handled on the Grassmannian itself: `T_X = T_Gr − k·O(1)` restricted, and
//! integrals over `X` become integrals over Gr against `σ₁^k`.
//!
//! The χ_y genus is evaluated exactly at `y = 0, 1, …, d` through the
//! normalized Hirzebruch series and recovered by Lagrange interpolation, so
//! its value at `y = −1` is an honest cross-check against the Euler
//! characteristic computed directly from the top Chern class.

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::schubert::{betti, ChowClass, Engine, SchubertRing};
use crate::series::{chi_y_series, Series};
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Chern classes `c₁ … c_rank` of a (possibly virtual) bundle; `c₀ = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChernData {
    pub rank: u32,
    pub classes: Vec<ChowClass>,
}

impl ChernData {
    /// `c_i`, zero outside `1..=rank`, one for `i = 0`.
    pub fn c(&self, i: u32, ring: &SchubertRing) -> ChowClass {
        match i {
            0 => ring.one(),
            _ => self
                .classes
                .get(i as usize - 1)
                .cloned()
                .unwrap_or_else(|| ring.zero()),
        }
    }

    /// The total Chern class `1 + c₁ + … + c_rank`.
    pub fn total(&self, ring: &SchubertRing) -> ChowClass {
        self.classes.iter().fold(ring.one(), |acc, c| &acc + c)
    }

    fn ambient(&self) -> Option<u32> {
        self.classes.first().map(ChowClass::ambient_n)
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// `c(S^∨) = 1 + σ₁ + σ_{1,1}` and `c(Q) = c(S)^{-1}`.
pub fn tautological_chern(ring: &SchubertRing) -> (ChernData, ChernData) {
    let n = ring.n();
    let s_dual = ChernData {
        rank: 2,
        classes: vec![ring.sigma(1, 0), ring.sigma(1, 1)],
    };
    // c(S) = 1 − σ₁ + σ_{1,1}; invert the nilpotent part
    let z = &ring.sigma(1, 1) - &ring.sigma(1, 0);
    let mut inverse = ring.one();
    let mut power = ring.one();
    for _ in 0..ring.dim() {
        power = -&ring.mul_unchecked(&power, &z);
        inverse = &inverse + &power;
    }
    let quotient = ChernData {
        rank: n - 2,
        classes: (1..=n - 2).map(|i| inverse.component(i)).collect(),
    };
    (s_dual, quotient)
}

/// Power sums `p_0 … p_upto` of the Chern roots, by Newton's identities.
pub fn power_sums(bundle: &ChernData, ring: &SchubertRing, upto: u32) -> Vec<ChowClass> {
    let mut p: Vec<ChowClass> = vec![ring.one().scale(&rat(bundle.rank as i64))];
    for m in 1..=upto {
        // p_m = Σ_{i=1}^{m−1} (−1)^{i−1} e_i p_{m−i} + (−1)^{m−1} m e_m
        let mut acc = bundle.c(m, ring).scale(&rat(if m % 2 == 1 { m as i64 } else { -(m as i64) }));
        for i in 1..m.min(bundle.rank + 1) {
            let term = ring.mul_unchecked(&bundle.c(i, ring), &p[(m - i) as usize]);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        p.push(acc);
    }
    p
}

/// Inverse of [`power_sums`]: elementary symmetric functions from power sums.
pub fn from_power_sums(rank: u32, p: &[ChowClass], ring: &SchubertRing) -> ChernData {
    let mut e: Vec<ChowClass> = vec![ring.one()];
    for m in 1..=rank {
        // m e_m = Σ_{i=1}^m (−1)^{i−1} e_{m−i} p_i
        let mut acc = ring.zero();
        for i in 1..=m {
            let Some(pi) = p.get(i as usize) else { break };
            let term = ring.mul_unchecked(&e[(m - i) as usize], pi);
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        e.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(m))));
    }
    ChernData {
        rank,
        classes: e.split_off(1),
    }
}

/// `c(E ⊗ F)` through the splitting principle.
///
/// Power sums of the roots `x_i + y_j` are `Σ_l C(m,l) p_l(E) p_{m−l}(F)`.
pub fn tensor_chern(e: &ChernData, f: &ChernData, ring: &SchubertRing) -> Result<ChernData> {
    for side in [e, f] {
        if let Some(n) = side.ambient() {
            if n != ring.n() {
                return Err(Error::AmbientMismatch {
                    left: ring.n(),
                    right: n,
                });
            }
        }
    }
    let rank = e.rank * f.rank;
    let upto = rank.min(ring.dim());
    let pe = power_sums(e, ring, upto);
    let pf = power_sums(f, ring, upto);
    let mut p = Vec::with_capacity(upto as usize + 1);
    for m in 0..=upto {
        let mut acc = ring.zero();
        for l in 0..=m {
            let c = BigRational::from_integer(binomial(BigInt::from(m), BigInt::from(l)));
            let term = ring.mul_unchecked(&pe[l as usize], &pf[(m - l) as usize]);
            acc = &acc + &term.scale(&c);
        }
        p.push(acc);
    }
    let mut out = from_power_sums(upto, &p, ring);
    out.rank = rank;
    Ok(out)
}

/// `c(T_Gr) = c(S^∨ ⊗ Q)`.
pub fn tangent_chern(ring: &SchubertRing) -> ChernData {
    let (s_dual, q) = tautological_chern(ring);
    tensor_chern(&s_dual, &q, ring).expect("tautological bundles share the ring")
}

pub(crate) fn check_section(n: u32, k: u32) -> Result<u32> {
    crate::schubert::check_n(n)?;
    let top = 2 * (n - 2);
    if k > top {
        return Err(Error::InvalidParameter(format!(
            "Gr(2,{n}) cut by {k} hyperplanes is empty (at most {top} allowed)"
        )));
    }
    Ok(top - k)
}

fn to_integer(v: &BigRational, what: &str) -> Result<BigInt> {
    if v.is_integer() {
        Ok(v.to_integer())
    } else {
        Err(Error::IdentityViolated(format!("{what} is not integral: {v}")))
    }
}

/// Everything about Gr(2,n) that the section invariants reuse across `k`.
struct SectionData {
    /// `∫ σ₁^m c(T_Gr)` for `m = 0..=dim`.
    euler_moments: Vec<BigRational>,
    /// Row `y`: `∫ σ₁^m · Π T̃_y(roots of T_Gr)` for `y = 0..=dim`.
    genus_moments: Vec<Vec<BigRational>>,
}

static SECTION_DATA: Memo<(u32, Engine), SectionData> = Memo::new();

fn moments(ring: &SchubertRing, class: &ChowClass) -> Vec<BigRational> {
    let h = ring.hyperplane();
    let mut v = class.clone();
    let mut out = Vec::with_capacity(ring.dim() as usize + 1);
    for _ in 0..=ring.dim() {
        out.push(v.integrate());
        v = ring.mul_unchecked(&v, &h);
    }
    out
}

fn section_data(ring: &SchubertRing) -> std::sync::Arc<SectionData> {
    SECTION_DATA.get_or_init(&(ring.n(), ring.engine()), || {
        let tangent = tangent_chern(ring);
        let dim = ring.dim();
        let len = dim as usize + 1;
        let euler_moments = moments(ring, &tangent.total(ring));
        let p = power_sums(&tangent, ring, dim);
        let genus_moments = (0..=dim as i64)
            .map(|y| {
                let log_f = chi_y_series(&rat(y), len).log();
                // z = Σ_j b_j p_j, then exp(z) by Horner
                let mut z = ring.zero();
                for j in 1..len {
                    if !log_f.coeff(j).is_zero() {
                        z = &z + &p[j].scale(log_f.coeff(j));
                    }
                }
                let mut e = ring.one();
                for m in (1..=dim).rev() {
                    let step = ring.mul_unchecked(&z, &e).scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
                    e = &ring.one() + &step;
                }
                moments(ring, &e)
            })
            .collect();
        SectionData {
            euler_moments,
            genus_moments,
        }
    })
}

/// χ_top of `X = Gr(2,n) ∩ H₁ ∩ … ∩ H_k`, as `∫ c(T_Gr) σ₁^k (1+σ₁)^{−k}`.
pub fn euler_characteristic_ci(n: u32, k: u32) -> Result<BigInt> {
    euler_characteristic_with(&SchubertRing::new(n, Engine::PieriGiambelli)?, k)
}

pub fn euler_characteristic_with(ring: &SchubertRing, k: u32) -> Result<BigInt> {
    check_section(ring.n(), k)?;
    let h = ring.hyperplane();
    // (1+σ₁)^{-k} = Σ_j C(−k, j) σ₁^j, truncated at the top degree
    let mut normal_inverse = ring.zero();
    let mut h_pow = ring.one();
    for j in 0..=ring.dim() {
        let c = signed_binomial(-(k as i64), j);
        normal_inverse = &normal_inverse + &h_pow.scale(&BigRational::from_integer(c));
        h_pow = ring.mul_unchecked(&h_pow, &h);
    }
    let total = tangent_chern(ring).total(ring);
    let integrand = ring.mul_unchecked(&ring.mul_unchecked(&total, &normal_inverse), &ring.pow(&h, k));
    to_integer(&integrand.integrate(), "Euler characteristic")
}

/// `C(a, j)` for a possibly negative integer `a`.
fn signed_binomial(a: i64, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..j as i64 {
        num *= BigInt::from(a - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// The χ_y genus `Σ_p χ(Ω^p_X) y^p`, lowest degree first.
pub fn chi_y_ci(n: u32, k: u32) -> Result<Vec<BigInt>> {
    chi_y_with(&SchubertRing::new(n, Engine::PieriGiambelli)?, k)
}

pub fn chi_y_with(ring: &SchubertRing, k: u32) -> Result<Vec<BigInt>> {
    let d = check_section(ring.n(), k)?;
    let data = section_data(ring);
    let len = ring.dim() as usize + 1;
    let mut values = Vec::with_capacity(d as usize + 1);
    for y in 0..=d as i64 {
        // σ₁^k · T̃_y(σ₁)^{-k} as a series in σ₁
        let normal = chi_y_series(&rat(y), len).inverse().pow(k).shift(k as usize);
        let row = &data.genus_moments[y as usize];
        let v = normal
            .coeffs()
            .iter()
            .zip(row)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
        values.push((rat(y), v));
    }
    let coeffs = interpolate(&values);
    coeffs
        .iter()
        .enumerate()
        .map(|(degree, c)| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegralGenus {
                    degree,
                    value: c.to_string(),
                })
            }
        })
        .collect()
}

/// Euler characteristic from the cached moments `∫ σ₁^m c(T_Gr)` and the
/// scalar series `h^k (1+h)^{-k}`; a second route to [`euler_characteristic_with`].
pub fn euler_from_moments(ring: &SchubertRing, k: u32) -> Result<BigInt> {
    check_section(ring.n(), k)?;
    let data = section_data(ring);
    let len = ring.dim() as usize + 1;
    let inv = Series::new(vec![BigRational::one(), BigRational::one()], len)
        .inverse()
        .pow(k)
        .shift(k as usize);
    let v = inv
        .coeffs()
        .iter()
        .zip(&data.euler_moments)
        .fold(BigRational::zero(), |acc, (a, b)| acc + a * b);
    to_integer(&v, "Euler characteristic")
}

/// Lagrange interpolation through `(x_i, y_i)`; coefficients lowest degree first.
fn interpolate(points: &[(BigRational, BigRational)]) -> Vec<BigRational> {
    let m = points.len();
    let mut out = vec![BigRational::zero(); m];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial Π_{j≠i} (x − x_j)/(x_i − x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (t, c) in basis.iter().enumerate() {
                next[t + 1] += c;
                next[t] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (t, c) in basis.iter().enumerate() {
            out[t] += c * &scale;
        }
    }
    while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Evaluate an integer polynomial (lowest degree first).
pub fn eval_poly(coeffs: &[BigInt], y: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * y + c)
}

/// Euler characteristic, χ_y genus, and the middle row of the Hodge diamond.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeSummary {
    #[serde(with = "crate::json_int")]
    pub euler_char: BigInt,
    #[serde(with = "crate::json_int::vec")]
    pub chi_y: Vec<BigInt>,
    #[serde(with = "crate::json_int")]
    pub middle_betti: BigInt,
    /// `h^{p, d−p}` for `p = 0..=d`.
    #[serde(with = "crate::json_int::vec")]
    pub middle_hodge: Vec<BigInt>,
}

impl HodgeSummary {
    /// The type invariants; returns the first violated one.
    pub fn check(&self) -> std::result::Result<(), String> {
        let at_minus_one = eval_poly(&self.chi_y, &BigInt::from(-1));
        if at_minus_one != self.euler_char {
            return Err(format!(
                "χ_y(−1) = {at_minus_one} differs from χ = {}",
                self.euler_char
            ));
        }
        let rev: Vec<_> = self.middle_hodge.iter().rev().cloned().collect();
        if rev != self.middle_hodge {
            return Err("middle Hodge numbers are not symmetric".into());
        }
        if let Some(neg) = self.middle_hodge.iter().find(|h| h.is_negative()) {
            return Err(format!("negative Hodge number {neg}"));
        }
        let sum: BigInt = self.middle_hodge.iter().sum();
        if sum != self.middle_betti {
            return Err(format!(
                "Σ h^(p,d−p) = {sum} differs from middle Betti {}",
                self.middle_betti
            ));
        }
        Ok(())
    }

    /// `h^{p, d−p}`, zero outside the range.
    pub fn h(&self, p: usize) -> BigInt {
        self.middle_hodge.get(p).cloned().unwrap_or_default()
    }
}

/// Middle Hodge numbers of `X`, assuming the off-middle cohomology is that of
/// Gr(2,n) (weak Lefschetz below the middle, duality above).
pub fn middle_hodge(n: u32, k: u32) -> Result<HodgeSummary> {
    middle_hodge_with(&SchubertRing::new(n, Engine::PieriGiambelli)?, k)
}

pub fn middle_hodge_with(ring: &SchubertRing, k: u32) -> Result<HodgeSummary> {
    let n = ring.n();
    let d = check_section(n, k)?;
    let chi_y = chi_y_with(ring, k)?;
    let euler_char = euler_characteristic_with(ring, k)?;
    let chi_p = |p: u32| chi_y.get(p as usize).cloned().unwrap_or_default();
    let sign = |e: u32| if e % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let mut middle = Vec::with_capacity(d as usize + 1);
    for p in 0..=d {
        let h = if 2 * p == d {
            sign(p) * chi_p(p)
        } else {
            // χ^p = (−1)^p h^{p,p} + (−1)^{d−p} h^{p,d−p}
            let q = if 2 * p < d { p } else { d - p };
            let tate = BigInt::from(betti(n, 2 * q)?);
            sign(d - p) * (chi_p(p) - sign(p) * tate)
        };
        middle.push(h);
    }
    let summary = HodgeSummary {
        euler_char,
        chi_y,
        middle_betti: middle.iter().sum(),
        middle_hodge: middle,
    };
    summary.check().map_err(Error::IdentityViolated)?;
    Ok(summary)
}
