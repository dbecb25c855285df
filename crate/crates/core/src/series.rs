//! Truncated power series with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `Σ_{j<len} c_j x^j`, everything of degree `>= len` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<BigRational>,
}

impl Series {
    pub fn new(mut coeffs: Vec<BigRational>, len: usize) -> Self {
        coeffs.resize(len, BigRational::zero());
        Series { coeffs }
    }

    pub fn one(len: usize) -> Self {
        Series::new(vec![BigRational::one()], len)
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, j: usize) -> &BigRational {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn mul(&self, rhs: &Series) -> Series {
        let len = self.len().min(rhs.len());
        let mut out = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Series { coeffs: out }
    }

    pub fn scale(&self, by: &BigRational) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * by).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Series {
        let c0 = &self.coeffs[0];
        assert!(!c0.is_zero(), "series with zero constant term is not invertible");
        let len = self.len();
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        out.push(c0.recip());
        for m in 1..len {
            let mut acc = BigRational::zero();
            for j in 1..=m {
                acc += &self.coeffs[j] * &out[m - j];
            }
            out.push(-acc / c0);
        }
        Series { coeffs: out }
    }

    /// Logarithm of a series with constant term one.
    pub fn log(&self) -> Series {
        assert!(self.coeffs[0].is_one(), "log needs constant term 1");
        // (log f)' = f'/f
        let len = self.len();
        let deriv = Series::new(
            (1..len)
                .map(|j| &self.coeffs[j] * BigRational::from_integer(BigInt::from(j)))
                .collect(),
            len,
        );
        let q = deriv.mul(&self.inverse());
        let mut out = vec![BigRational::zero(); len];
        for j in 1..len {
            out[j] = &q.coeffs[j - 1] / BigRational::from_integer(BigInt::from(j));
        }
        Series { coeffs: out }
    }

    /// Exponential of a series with zero constant term.
    pub fn exp(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "exp needs constant term 0");
        let len = self.len();
        // E' = f' E  ⇒  m·e_m = Σ_{j=1}^m j·f_j·e_{m−j}
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        out.push(BigRational::one());
        for m in 1..len {
            let mut acc = BigRational::zero();
            for j in 1..=m {
                acc += &self.coeffs[j] * BigRational::from_integer(BigInt::from(j)) * &out[m - j];
            }
            out.push(acc / BigRational::from_integer(BigInt::from(m)));
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, e: u32) -> Series {
        (0..e).fold(Series::one(self.len()), |acc, _| acc.mul(self))
    }

    /// Multiply by `x^by`, dropping what falls off the end.
    pub fn shift(&self, by: usize) -> Series {
        let len = self.len();
        let mut out = vec![BigRational::zero(); len];
        for j in 0..len.saturating_sub(by) {
            out[j + by] = self.coeffs[j].clone();
        }
        Series { coeffs: out }
    }

    /// Substitute `x ↦ c·x`.
    pub fn rescale(&self, c: &BigRational) -> Series {
        let mut power = BigRational::one();
        let mut out = Vec::with_capacity(self.len());
        for a in &self.coeffs {
            out.push(a * &power);
            power *= c;
        }
        Series { coeffs: out }
    }
}

/// `x / (1 − e^{−x})` to `len` terms (the Todd series).
pub fn todd_series(len: usize) -> Series {
    // (1 − e^{−x})/x = Σ_j (−1)^j x^j / (j+1)!
    let mut coeffs = Vec::with_capacity(len);
    let mut fact = BigInt::one();
    for j in 0..len {
        fact *= BigInt::from(j + 1);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        coeffs.push(BigRational::new(BigInt::from(sign), fact.clone()));
    }
    Series::new(coeffs, len).inverse()
}

/// Hirzebruch's normalized χ_y series `x(1+y)/(1−e^{−x(1+y)}) − x·y` at a fixed `y`.
pub fn chi_y_series(y: &BigRational, len: usize) -> Series {
    let one_plus_y = BigRational::one() + y;
    let mut s = todd_series(len).rescale(&one_plus_y);
    if len > 1 {
        let c1 = s.coeffs[1].clone() - y;
        s.coeffs[1] = c1;
    }
    s
}
