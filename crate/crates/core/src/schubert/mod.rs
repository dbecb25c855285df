//! The Chow ring of Gr(2,n) in the Schubert basis.
//!
//! Schubert classes `σ_{a,b}` are indexed by partitions `a ≥ b ≥ 0` that fit
//! in the `2 × (n−2)` box; `σ_{a,b}` has codimension `a + b`. Products are
//! read from a multiplication table built once per `(n, engine)` and shared
//! afterwards.

pub mod lr;
pub mod pieri;

use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::ring::{projective_class, LPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Bumped whenever table contents could change; invalidates disk caches.
pub const ENGINE_VERSION: u32 = 1;

/// A partition with at most two rows, `a ≥ b ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition2 {
    pub a: u32,
    pub b: u32,
}

impl Partition2 {
    /// Panics unless `a >= b`.
    pub fn new(a: u32, b: u32) -> Self {
        assert!(a >= b, "partition ({a},{b}) is not weakly decreasing");
        Partition2 { a, b }
    }

    pub fn try_new(a: u32, b: u32) -> Result<Self> {
        if a >= b {
            Ok(Partition2 { a, b })
        } else {
            Err(Error::InvalidParameter(format!(
                "partition ({a},{b}) is not weakly decreasing"
            )))
        }
    }

    pub fn size(self) -> u32 {
        self.a + self.b
    }

    /// Complement in the `2 × width` box: the Poincaré-dual index.
    pub fn dual(self, width: u32) -> Partition2 {
        Partition2::new(width - self.b, width - self.a)
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b == 0 {
            write!(f, "σ{}", self.a)
        } else {
            write!(f, "σ{},{}", self.a, self.b)
        }
    }
}

/// Which algorithm fills the multiplication table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Engine {
    PieriGiambelli,
    LittlewoodRichardson,
}

impl Engine {
    pub const ALL: [Engine; 2] = [Engine::PieriGiambelli, Engine::LittlewoodRichardson];

    pub fn name(self) -> &'static str {
        match self {
            Engine::PieriGiambelli => "pieri_giambelli",
            Engine::LittlewoodRichardson => "littlewood_richardson",
        }
    }
}

/// Indexing of the Schubert basis of Gr(2,n).
///
/// `(a,b)` sits at `a(a+1)/2 + b`.
#[derive(Clone, Debug)]
pub struct Basis {
    n: u32,
    parts: Vec<Partition2>,
}

impl Basis {
    pub fn new(n: u32) -> Self {
        let width = n - 2;
        let parts = (0..=width)
            .flat_map(|a| (0..=a).map(move |b| Partition2::new(a, b)))
            .collect();
        Basis { n, parts }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn width(&self) -> u32 {
        self.n - 2
    }

    pub fn dim(&self) -> u32 {
        2 * (self.n - 2)
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn index(&self, p: Partition2) -> usize {
        (p.a * (p.a + 1) / 2 + p.b) as usize
    }

    pub fn partition(&self, i: usize) -> Partition2 {
        self.parts[i]
    }

    pub fn partitions(&self) -> &[Partition2] {
        &self.parts
    }

    pub fn contains(&self, p: Partition2) -> bool {
        p.a <= self.width()
    }
}

/// Products of pairs of basis classes for one Gr(2,n).
#[derive(Debug)]
pub struct MultTable {
    basis: Basis,
    engine: Engine,
    /// Indexed by `pair_slot(i, j)` for `i <= j`; `(result index, coefficient)`.
    products: Vec<Vec<(u32, i64)>>,
}

fn pair_slot(i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    j * (j + 1) / 2 + i
}

impl MultTable {
    pub fn build(n: u32, engine: Engine) -> Self {
        let basis = Basis::new(n);
        let len = basis.len();
        let mut products = vec![Vec::new(); len * (len + 1) / 2];
        for j in 0..len {
            for i in 0..=j {
                let (l, m) = (basis.partition(i), basis.partition(j));
                if l.size() + m.size() > basis.dim() {
                    continue;
                }
                let dense = match engine {
                    Engine::PieriGiambelli => pieri::product(&basis, l, m),
                    Engine::LittlewoodRichardson => lr::product(&basis, l, m),
                };
                products[pair_slot(i, j)] = dense
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != 0)
                    .map(|(k, c)| (k as u32, c))
                    .collect();
            }
        }
        MultTable {
            basis,
            engine,
            products,
        }
    }

    pub fn n(&self) -> u32 {
        self.basis.n
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn product(&self, i: usize, j: usize) -> &[(u32, i64)] {
        &self.products[pair_slot(i, j)]
    }

    /// All table entries as `(λ, μ, [(ν, c)])` with `λ ≤ μ` in basis order.
    pub fn entries(&self) -> Vec<TableEntry> {
        let len = self.basis.len();
        let mut out = Vec::with_capacity(self.products.len());
        for j in 0..len {
            for i in 0..=j {
                out.push(TableEntry {
                    lambda: self.basis.partition(i),
                    mu: self.basis.partition(j),
                    terms: self
                        .product(i, j)
                        .iter()
                        .map(|&(k, c)| (self.basis.partition(k as usize), c))
                        .collect(),
                });
            }
        }
        out
    }

    /// Rebuild a table from its entries; every pair must appear exactly once.
    pub fn from_entries(n: u32, engine: Engine, entries: &[TableEntry]) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!("Gr(2,{n}) needs n >= 4")));
        }
        let basis = Basis::new(n);
        let len = basis.len();
        let mut products: Vec<Option<Vec<(u32, i64)>>> = vec![None; len * (len + 1) / 2];
        for e in entries {
            for p in [e.lambda, e.mu].iter().chain(e.terms.iter().map(|(p, _)| p)) {
                if !basis.contains(*p) || p.a < p.b {
                    return Err(Error::Cache(format!("partition {p} outside Gr(2,{n})")));
                }
            }
            let slot = pair_slot(basis.index(e.lambda), basis.index(e.mu));
            if products[slot].is_some() {
                return Err(Error::Cache(format!(
                    "duplicate entry for {} * {}",
                    e.lambda, e.mu
                )));
            }
            let target = e.lambda.size() + e.mu.size();
            if e.terms.iter().any(|(p, _)| p.size() != target) {
                return Err(Error::Cache(format!(
                    "entry for {} * {} is not homogeneous",
                    e.lambda, e.mu
                )));
            }
            products[slot] = Some(
                e.terms
                    .iter()
                    .map(|(p, c)| (basis.index(*p) as u32, *c))
                    .collect(),
            );
        }
        let products = products
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Cache(format!("table for Gr(2,{n}) is incomplete")))?;
        Ok(MultTable {
            basis,
            engine,
            products,
        })
    }
}

/// One row of an exported multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub lambda: Partition2,
    pub mu: Partition2,
    pub terms: Vec<(Partition2, i64)>,
}

static TABLES: Memo<(u32, Engine), MultTable> = Memo::new();

/// The shared table for `(n, engine)`, building it on first use.
pub fn table(n: u32, engine: Engine) -> Arc<MultTable> {
    TABLES.get_or_init(&(n, engine), || MultTable::build(n, engine))
}

/// The table if it has already been built or installed.
pub fn cached_table(n: u32, engine: Engine) -> Option<Arc<MultTable>> {
    TABLES.get(&(n, engine))
}

/// Seed the registry with a prebuilt table. Returns false if one was already present.
pub fn install_table(t: MultTable) -> bool {
    TABLES.insert(&(t.n(), t.engine()), t)
}

/// A handle on the Chow ring of Gr(2,n) with a fixed multiplication engine.
#[derive(Clone, Debug)]
pub struct SchubertRing {
    table: Arc<MultTable>,
}

impl SchubertRing {
    pub fn new(n: u32, engine: Engine) -> Result<Self> {
        check_n(n)?;
        Ok(SchubertRing {
            table: table(n, engine),
        })
    }

    pub fn n(&self) -> u32 {
        self.table.n()
    }

    pub fn engine(&self) -> Engine {
        self.table.engine()
    }

    pub fn basis(&self) -> &Basis {
        self.table.basis()
    }

    /// Complex dimension `2(n−2)`.
    pub fn dim(&self) -> u32 {
        self.basis().dim()
    }

    pub fn zero(&self) -> ChowClass {
        ChowClass::zero(self.n())
    }

    pub fn one(&self) -> ChowClass {
        self.sigma(0, 0)
    }

    /// `σ_{a,b}`, or zero if the partition leaves the box.
    pub fn sigma(&self, a: u32, b: u32) -> ChowClass {
        ChowClass::sigma(self.n(), a, b)
    }

    /// The Plücker hyperplane class `σ_1`.
    pub fn hyperplane(&self) -> ChowClass {
        self.sigma(1, 0)
    }

    pub fn multiply(&self, x: &ChowClass, y: &ChowClass) -> Result<ChowClass> {
        for c in [x, y] {
            if c.n != self.n() {
                return Err(Error::AmbientMismatch {
                    left: self.n(),
                    right: c.n,
                });
            }
        }
        Ok(self.mul_unchecked(x, y))
    }

    /// Product for classes already known to live in this ring.
    pub(crate) fn mul_unchecked(&self, x: &ChowClass, y: &ChowClass) -> ChowClass {
        // clear denominators once, accumulate over ℤ, divide at the end
        let (xn, xd) = integral_form(&x.coeffs);
        let (yn, yd) = integral_form(&y.coeffs);
        let degs: Vec<u32> = self.basis().partitions().iter().map(|p| p.size()).collect();
        let top = self.dim();
        let mut acc = vec![BigInt::zero(); xn.len()];
        for (i, xi) in xn.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in yn.iter().enumerate() {
                if yj.is_zero() || degs[i] + degs[j] > top {
                    continue;
                }
                let prod = xi * yj;
                for &(k, c) in self.table.product(i, j) {
                    acc[k as usize] += &prod * c;
                }
            }
        }
        let denom = xd * yd;
        ChowClass {
            n: self.n(),
            coeffs: acc
                .into_iter()
                .map(|v| BigRational::new(v, denom.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, x: &ChowClass, e: u32) -> ChowClass {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul_unchecked(&out, x);
        }
        out
    }

    /// Degree: the coefficient of the point class `σ_{n−2,n−2}`.
    pub fn integrate(&self, x: &ChowClass) -> BigRational {
        x.integrate()
    }
}

fn integral_form(coeffs: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let denom = coeffs
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let nums = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                BigInt::zero()
            } else {
                c.numer() * (&denom / c.denom())
            }
        })
        .collect();
    (nums, denom)
}

pub(crate) fn check_n(n: u32) -> Result<()> {
    if n < 4 {
        Err(Error::InvalidParameter(format!(
            "Gr(2,{n}) requires n >= 4"
        )))
    } else {
        Ok(())
    }
}

/// A rational combination of Schubert classes of Gr(2,n).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ChowClass {
    n: u32,
    coeffs: Vec<BigRational>,
}

impl ChowClass {
    pub fn zero(n: u32) -> Self {
        ChowClass {
            n,
            coeffs: vec![BigRational::zero(); Basis::new(n).len()],
        }
    }

    pub fn sigma(n: u32, a: u32, b: u32) -> Self {
        let mut c = ChowClass::zero(n);
        if a <= n - 2 && a >= b {
            let basis = Basis::new(n);
            c.coeffs[basis.index(Partition2::new(a, b))] = BigRational::one();
        }
        c
    }

    /// Build from explicit terms; partitions outside the box are dropped.
    pub fn from_terms(n: u32, terms: impl IntoIterator<Item = (Partition2, BigRational)>) -> Self {
        let basis = Basis::new(n);
        let mut c = ChowClass::zero(n);
        for (p, v) in terms {
            if basis.contains(p) {
                c.coeffs[basis.index(p)] += v;
            }
        }
        c
    }

    pub fn ambient_n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, p: Partition2) -> BigRational {
        let basis = Basis::new(self.n);
        if basis.contains(p) {
            self.coeffs[basis.index(p)].clone()
        } else {
            BigRational::zero()
        }
    }

    /// Nonzero terms in basis order.
    pub fn terms(&self) -> Vec<(Partition2, BigRational)> {
        let basis = Basis::new(self.n);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (basis.partition(i), c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The homogeneous component of codimension `d`.
    pub fn component(&self, d: u32) -> ChowClass {
        let basis = Basis::new(self.n);
        ChowClass {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if basis.partition(i).size() == d {
                        c.clone()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        }
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms().iter().all(|(p, _)| p.size() == d)
    }

    /// Constant (codimension-zero) coefficient.
    pub fn constant_term(&self) -> BigRational {
        self.coeffs[0].clone()
    }

    pub fn integrate(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn scale(&self, by: &BigRational) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    fn zip_with(&self, rhs: &ChowClass, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> ChowClass {
        assert_eq!(self.n, rhs.n, "ambient mismatch in ChowClass arithmetic");
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn checked_add(&self, rhs: &ChowClass) -> Result<ChowClass> {
        if self.n != rhs.n {
            return Err(Error::AmbientMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        Ok(self + rhs)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (p, c)) in terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{p}")?;
            } else if p.size() == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c}){p}")?;
            }
        }
        Ok(())
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, rhs: &ChowClass) -> ChowClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, rhs: &ChowClass) -> ChowClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        ChowClass {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// Product with the production (Pieri/Giambelli) engine.
///
/// Panics on an ambient mismatch; use [`multiply`] for the checked form.
impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, rhs: &ChowClass) -> ChowClass {
        multiply(self, rhs).expect("ambient mismatch in ChowClass product")
    }
}

/// Graded product in the Chow ring; components above the top degree vanish.
pub fn multiply(x: &ChowClass, y: &ChowClass) -> Result<ChowClass> {
    if x.n != y.n {
        return Err(Error::AmbientMismatch {
            left: x.n,
            right: y.n,
        });
    }
    SchubertRing::new(x.n, Engine::PieriGiambelli)?.multiply(x, y)
}

pub fn integrate(x: &ChowClass) -> BigRational {
    x.integrate()
}

/// How to compute `[Gr(2,n)]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassMethod {
    /// Sum `𝕃^{a+b}` over the Schubert cells.
    Cells,
    /// The parity-dependent product of a projective space with an even sum.
    ProductFormula,
}

/// `Σ_{j=0}^{⌊(n−2)/2⌋} 𝕃^{2j}`, the even-power factor of the product formulas.
pub fn sum_even(n: u32) -> LPoly {
    let top = n.saturating_sub(2) / 2;
    (0..=top).fold(LPoly::zero(), |acc, j| &acc + &LPoly::lefschetz_pow(2 * j))
}

pub fn grassmannian_class(n: u32, method: ClassMethod) -> Result<LPoly> {
    check_n(n)?;
    Ok(match method {
        ClassMethod::Cells => Basis::new(n)
            .partitions()
            .iter()
            .fold(LPoly::zero(), |acc, p| &acc + &LPoly::lefschetz_pow(p.size())),
        ClassMethod::ProductFormula => {
            let proj = if n % 2 == 0 { n - 2 } else { n - 1 };
            &projective_class(proj as i64) * &sum_even(n)
        }
    })
}

/// The exponent `s` in `[F₂] = [H(2,n)] + 𝕃^s`: `n−2` for even `n`, `n−1` for odd.
pub fn twist_exponent(n: u32) -> u32 {
    if n % 2 == 0 {
        n - 2
    } else {
        n - 1
    }
}

/// `[H(2,n)]` for a smooth Plücker hyperplane section, by its product formula.
pub fn hyperplane_section_class(n: u32) -> Result<LPoly> {
    check_n(n)?;
    let proj = if n % 2 == 0 { n - 3 } else { n - 2 };
    Ok(&projective_class(proj as i64) * &sum_even(n))
}

/// `[Gr(2,n)] − 𝕃^{2n−4}`: every Schubert cell except the open one.
pub fn schubert_divisor_class(n: u32) -> Result<LPoly> {
    let gr = grassmannian_class(n, ClassMethod::Cells)?;
    Ok(&gr - &LPoly::lefschetz_pow(2 * n - 4))
}

/// `[Gr(2,n)] − 𝕃^{2n−4} − 𝕃^s`: what `[H(2,n)]` would be if the singular
/// hyperplane section with twist `𝕃^s` were a Schubert divisor. That holds
/// for `n ≤ 5` only; see [`hyperplane_section_class_lefschetz`].
pub fn hyperplane_section_class_via_divisor(n: u32) -> Result<LPoly> {
    Ok(&schubert_divisor_class(n)? - &LPoly::lefschetz_pow(twist_exponent(n)))
}

/// `[H(2,n)]` assembled from Betti numbers alone: cells of Gr(2,n) below the
/// middle, Poincaré duality above it, nothing in the odd middle degree.
pub fn hyperplane_section_class_lefschetz(n: u32) -> Result<LPoly> {
    check_n(n)?;
    let dim = 2 * n - 5;
    let counts: Vec<u64> = (0..=dim)
        .map(|i| {
            let below = if 2 * i < dim { i } else { dim - i };
            betti(n, 2 * below)
        })
        .collect::<Result<_>>()?;
    Ok(LPoly::from_coeffs(&counts))
}

/// `b_j(Gr(2,n))`: the number of cells of real codimension `j`.
pub fn betti(n: u32, j: u32) -> Result<u64> {
    check_n(n)?;
    if j % 2 == 1 {
        return Ok(0);
    }
    let i = j / 2;
    Ok(Basis::new(n)
        .partitions()
        .iter()
        .filter(|p| p.size() == i)
        .count() as u64)
}
