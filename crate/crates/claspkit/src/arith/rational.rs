use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::LaurentPoly;
use crate::{Error, Result};

/// A univariate rational function in `q`, held in canonical form.
///
/// Canonicalization shifts numerator and denominator to ordinary polynomials,
/// reduces by their gcd over the rationals, and then normalizes the
/// denominator to be monic with nonzero constant term (any net power of `q`
/// is carried by the numerator). Equality of canonical forms is therefore
/// plain structural equality and coincides with cross-multiplication
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Clear denominators and divide by the content, returning the primitive
/// integer polynomial (positive leading coefficient) together with the
/// rational scale, so that `v = scale * primitive` coefficientwise.
fn to_primitive_scaled(v: &[BigRational]) -> (BigRational, Vec<BigInt>) {
    let deg = match v.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return (BigRational::one(), Vec::new()),
    };
    let mut common = BigInt::one();
    for c in &v[..=deg] {
        common = num::integer::lcm(common, c.denom().clone());
    }
    let mut ints: Vec<BigInt> = v[..=deg]
        .iter()
        .map(|c| c.numer() * (&common / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num::integer::gcd(content, c.clone());
    }
    if ints.last().map(|c| c.is_negative()).unwrap_or(false) {
        content = -content;
    }
    for c in &mut ints {
        *c = &*c / &content;
    }
    (BigRational::new(content, common), ints)
}

/// Exact quotient of integer polynomials; the divisor must divide evenly
/// (guaranteed for a gcd of primitive polynomials).
fn dense_div_exact_int(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor");
    let mut rem: Vec<BigInt> = num.to_vec();
    let nd = rem.len() - 1;
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for i in (dd..=nd).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let factor = &rem[i] / lead;
        debug_assert_eq!(&factor * lead, rem[i], "exact division");
        let offset = i - dd;
        for (j, dc) in den.iter().enumerate() {
            rem[offset + j] = &rem[offset + j] - &factor * dc;
        }
        quot[offset] = factor;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// One step of pseudo-division over the integers: returns the pseudo
/// remainder of `num` by `den` (no fractions introduced).
fn pseudo_rem(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    let lead = den.last().expect("nonzero divisor").clone();
    let mut rem: Vec<BigInt> = num.to_vec();
    loop {
        let nd = match rem.iter().rposition(|c| !c.is_zero()) {
            Some(d) => d,
            None => return Vec::new(),
        };
        if nd < dd {
            rem.truncate(nd + 1);
            return rem;
        }
        let factor = rem[nd].clone();
        for c in rem.iter_mut() {
            *c = &*c * &lead;
        }
        let offset = nd - dd;
        for (j, dc) in den.iter().enumerate() {
            rem[offset + j] = &rem[offset + j] - &factor * dc;
        }
    }
}

/// A word-sized prime for the trivial-gcd filter.
const FILTER_PRIME: u64 = 2_147_483_647;

/// Euclidean gcd degree over `F_p`. Returns `None` when a leading
/// coefficient vanishes mod `p` (inconclusive), otherwise whether the gcd is
/// constant — which certifies a trivial gcd over the rationals.
fn gcd_is_constant_mod_p(a: &[BigInt], b: &[BigInt]) -> Option<bool> {
    let p = FILTER_PRIME;
    let reduce = |v: &[BigInt]| -> Vec<u64> {
        let bp = BigInt::from(p);
        v.iter()
            .map(|c| {
                let r = ((c % &bp) + &bp) % &bp;
                u64::try_from(r).expect("reduced below p")
            })
            .collect()
    };
    let mut x = reduce(a);
    let mut y = reduce(b);
    if *x.last()? == 0 || *y.last()? == 0 {
        return None;
    }
    let mulmod = |u: u64, v: u64| (u as u128 * v as u128 % p as u128) as u64;
    let powmod = |mut base: u64, mut exp: u64| {
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = mulmod(acc, base);
            }
            base = mulmod(base, base);
            exp >>= 1;
        }
        acc
    };
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    while !y.is_empty() {
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
            continue;
        }
        // x <- x mod y over F_p.
        let inv_lead = powmod(*y.last().expect("nonempty"), p - 2);
        while x.len() >= y.len() && !x.is_empty() {
            let factor = mulmod(*x.last().expect("nonempty"), inv_lead);
            let offset = x.len() - y.len();
            for (i, &c) in y.iter().enumerate() {
                let sub = mulmod(factor, c);
                let idx = offset + i;
                x[idx] = (x[idx] + p - sub) % p;
            }
            trim(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
        trim(&mut y);
    }
    Some(x.len() <= 1)
}

/// Primitive gcd of two primitive integer polynomials through a primitive
/// pseudo-remainder sequence. A single modular image short-circuits the
/// (common) coprime case.
fn int_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let primitive = |v: Vec<BigInt>| -> Vec<BigInt> {
        let deg = match v.iter().rposition(|c| !c.is_zero()) {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut content = BigInt::zero();
        for c in &v[..=deg] {
            content = num::integer::gcd(content, c.clone());
        }
        if v[deg].is_negative() {
            content = -content;
        }
        v[..=deg].iter().map(|c| c / &content).collect()
    };
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    if !x.is_empty() && !y.is_empty() {
        if let Some(true) = gcd_is_constant_mod_p(&x, &y) {
            return vec![BigInt::one()];
        }
    }
    while !y.is_empty() {
        let rem = primitive(pseudo_rem(&x, &y));
        x = y;
        y = rem;
    }
    x
}

impl RationalFunction {
    /// Build `num / den` in canonical form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        assert!(
            num.is_q_only() && den.is_q_only(),
            "rational functions are univariate in q"
        );
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            });
        }
        let (nshift, ndense) = num.to_dense_q();
        let (dshift, ddense) = den.to_dense_q();
        // All heavy polynomial work happens over the integers; rationals
        // only reappear as a per-coefficient scale at the end.
        let (nscale, nprim) = to_primitive_scaled(&ndense);
        let (dscale, dprim) = to_primitive_scaled(&ddense);
        let g = int_gcd(&nprim, &dprim);
        let (nred, dred) = if g.len() <= 1 {
            (nprim, dprim)
        } else {
            (dense_div_exact_int(&nprim, &g), dense_div_exact_int(&dprim, &g))
        };
        // Make the reduced denominator monic; the numerator absorbs the scale
        // and the net q-power.
        let dlead = dred.last().expect("nonzero denominator").clone();
        let num_scale = nscale / (dscale * BigRational::from_integer(dlead.clone()));
        let nfinal: Vec<BigRational> = nred
            .iter()
            .map(|c| BigRational::from_integer(c.clone()) * &num_scale)
            .collect();
        let dfinal: Vec<BigRational> = dred
            .iter()
            .map(|c| BigRational::new(c.clone(), dlead.clone()))
            .collect();
        Ok(RationalFunction {
            num: LaurentPoly::from_dense_q(nshift - dshift, &nfinal),
            den: LaurentPoly::from_dense_q(0, &dfinal),
        })
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::new(p, LaurentPoly::one()).expect("unit denominator")
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the denominator is the constant 1.
    pub fn is_polynomial(&self) -> bool {
        self.den == LaurentPoly::one()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Cross-multiplication equality; agrees with `==` on canonical forms.
    pub fn eq_cross(&self, rhs: &Self) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// The bar involution `q -> q^{-1}`, recanonicalized.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar()).expect("nonzero denominator")
    }

    /// Exact value at `q = 1` (denominator must not vanish there).
    pub fn eval_at_one(&self) -> Option<BigRational> {
        let d = self.den.coeff_sum();
        if d.is_zero() {
            return None;
        }
        Some(self.num.coeff_sum() / d)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero denominator")
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Leading-coefficient sign bookkeeping for display purposes.
impl RationalFunction {
    /// Splits off an overall sign so the highest-degree numerator
    /// coefficient is positive. Returns `(sign, |self|)`.
    pub fn sign_split(&self) -> (i64, RationalFunction) {
        if self.is_zero() {
            return (1, self.clone());
        }
        let lead = self
            .num
            .terms()
            .last()
            .map(|(_, c)| c.clone())
            .expect("nonzero numerator");
        if lead.is_negative() {
            (-1, -self)
        } else {
            (1, self.clone())
        }
    }
}
