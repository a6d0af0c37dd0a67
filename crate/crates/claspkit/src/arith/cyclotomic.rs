use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, One, Zero};

use super::laurent::{dense_div_rem, LaurentPoly, Var};

/// The `n`-th cyclotomic polynomial as an ordinary polynomial in `q`,
/// computed by dividing `x^n - 1` by the product of all lower-order
/// cyclotomic polynomials at divisors of `n`. Monic with integer
/// coefficients.
pub fn cyclotomic_poly(n: u32) -> LaurentPoly {
    let mut cache: HashMap<u32, LaurentPoly> = HashMap::new();
    cyclotomic_memo(n, &mut cache)
}

fn cyclotomic_memo(n: u32, cache: &mut HashMap<u32, LaurentPoly>) -> LaurentPoly {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = LaurentPoly::var_pow(Var::Q, n as i64) - LaurentPoly::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_memo(d, cache);
            p = p
                .checked_div_q(&phi_d)
                .expect("cyclotomic division is exact");
        }
    }
    cache.insert(n, p.clone());
    p
}

/// An element of `Q[x] / (Phi_n)`, i.e. the field generated by an abstract
/// primitive `n`-th root of unity. The coefficient vector has fixed length
/// `deg Phi_n` so zero-testing is exact and structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(order: u32) -> Self {
        let deg = cyclotomic_degree(order);
        CyclotomicNumber {
            order,
            coeffs: vec![BigRational::zero(); deg],
        }
    }

    pub fn one(order: u32) -> Self {
        let mut x = Self::zero(order);
        x.coeffs[0] = BigRational::one();
        x
    }

    /// The residue class of `x^k` for any integer `k` (negative exponents use
    /// `x^n = 1`).
    pub fn root_power(order: u32, k: i64) -> Self {
        let n = order as i64;
        let r = k.rem_euclid(n) as usize;
        let mut raw = vec![BigRational::zero(); r + 1];
        raw[r] = BigRational::one();
        Self::reduce(order, raw)
    }

    /// Image of a `q`-only Laurent polynomial under `q -> zeta_n`.
    pub fn from_q_poly(x: &LaurentPoly, order: u32) -> Self {
        assert!(x.is_q_only(), "cyclotomic evaluation needs a q-only input");
        let n = order as i64;
        let mut raw = vec![BigRational::zero(); order as usize];
        for (exps, coeff) in x.terms() {
            let r = exps[0].rem_euclid(n) as usize;
            raw[r] = &raw[r] + coeff;
        }
        Self::reduce(order, raw)
    }

    fn reduce(order: u32, raw: Vec<BigRational>) -> Self {
        let (_, phi) = cyclotomic_poly(order).to_dense_q();
        let (_, rem) = dense_div_rem(&raw, &phi);
        let deg = phi.len() - 1;
        let mut coeffs = vec![BigRational::zero(); deg];
        for (i, c) in rem.into_iter().enumerate().take(deg) {
            coeffs[i] = c;
        }
        CyclotomicNumber { order, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

fn cyclotomic_degree(order: u32) -> usize {
    let (_, dense) = cyclotomic_poly(order).to_dense_q();
    dense.len() - 1
}

impl Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        CyclotomicNumber {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        assert_eq!(self.order, rhs.order, "mixed cyclotomic orders");
        let mut raw = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] = &raw[i + j] + a * b;
                }
            }
        }
        CyclotomicNumber::reduce(self.order, raw)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let poly = LaurentPoly::from_dense_q(0, &self.coeffs);
        write!(f, "{} (mod Phi_{})", poly, self.order)
    }
}

/// Image of a `q`-only Laurent polynomial at a fixed primitive `2l`-th root
/// of unity, reduced modulo `Phi_{2l}`. Zero-testing on the result is exact.
pub fn cyc_eval(x: &LaurentPoly, ell: u32) -> CyclotomicNumber {
    assert!(ell >= 3, "specialization needs l >= 3");
    CyclotomicNumber::from_q_poly(x, 2 * ell)
}
