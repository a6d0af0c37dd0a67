//! Balanced quantum integers, concrete and with symbolic exponents.
//!
//! `[n]_{q^l} = (q^{ln} - q^{-ln}) / (q^l - q^{-l})` is always realized in
//! balanced form, directly as the Laurent polynomial
//! `q^{l(n-1)} + q^{l(n-3)} + ... + q^{-l(n-1)}`. For identity proving, the
//! symbolic variant keeps `q^a` and `q^b` as the variables `A` and `B` and
//! works with unreduced numerator/denominator pairs compared by
//! cross-multiplication.

use std::ops::{Add, Mul, Neg, Sub};

use num::BigRational;

use crate::arith::{LaurentPoly, Var};

/// A quantum integer argument together with the `v = q^level` twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QInt {
    pub n: i64,
    pub level: u32,
}

impl QInt {
    pub fn realize(self) -> LaurentPoly {
        qint(self.n, self.level)
    }
}

/// The balanced quantum integer `[n]_{q^level}` as an exact Laurent
/// polynomial. Satisfies `[-n] = -[n]`, `[0] = 0`, `[1] = 1`.
pub fn qint(n: i64, level: u32) -> LaurentPoly {
    let l = level as i64;
    assert!(l >= 1, "level must be positive");
    if n == 0 {
        return LaurentPoly::zero();
    }
    if n < 0 {
        return -qint(-n, level);
    }
    let mut acc = LaurentPoly::zero();
    for i in 0..n {
        acc = acc + LaurentPoly::var_pow(Var::Q, l * (n - 1 - 2 * i));
    }
    acc
}

/// The linear exponent form `ca*a + cb*b + c0` of a symbolic quantum integer
/// argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymExponent {
    pub ca: i64,
    pub cb: i64,
    pub c0: i64,
}

impl SymExponent {
    pub fn new(ca: i64, cb: i64, c0: i64) -> Self {
        SymExponent { ca, cb, c0 }
    }

    /// Shift the weight argument `(a, b) -> (a + da, b + db)`.
    pub fn shifted(self, da: i64, db: i64) -> Self {
        SymExponent {
            ca: self.ca,
            cb: self.cb,
            c0: self.c0 + self.ca * da + self.cb * db,
        }
    }

    /// The concrete argument at a specific `(a, b)`.
    pub fn eval(self, a: i64, b: i64) -> i64 {
        self.ca * a + self.cb * b + self.c0
    }

    /// The numerator `A^{l ca} B^{l cb} q^{l c0} - A^{-l ca} B^{-l cb} q^{-l c0}`
    /// of the symbolic quantum integer `[ca*a + cb*b + c0]_{q^l}`.
    pub fn balanced_numerator(self, level: u32) -> LaurentPoly {
        let l = level as i64;
        let pos = LaurentPoly::monomial(
            [l * self.c0, l * self.ca, l * self.cb],
            BigRational::from_integer(1.into()),
        );
        let neg = LaurentPoly::monomial(
            [-l * self.c0, -l * self.ca, -l * self.cb],
            BigRational::from_integer(1.into()),
        );
        pos - neg
    }
}

/// An unreduced quotient of three-variable Laurent polynomials. This is the
/// value type of symbolic quantum-integer expressions; two fractions are
/// compared by cross-multiplication, never by multivariate reduction.
#[derive(Debug, Clone)]
pub struct SymFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl SymFraction {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator in symbolic fraction");
        SymFraction { num, den }
    }

    /// The symbolic quantum integer `[ca*a + cb*b + c0]_{q^level}` as the
    /// pair (balanced numerator, `q^l - q^{-l}`).
    pub fn qint(exp: SymExponent, level: u32) -> Self {
        let l = level as i64;
        SymFraction {
            num: exp.balanced_numerator(level),
            den: LaurentPoly::var_pow(Var::Q, l) - LaurentPoly::var_pow(Var::Q, -l),
        }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        SymFraction {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Self {
        Self::new(num, den)
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
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

    pub fn inv(&self) -> Self {
        assert!(!self.num.is_zero(), "inverting the zero fraction");
        SymFraction {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn div(&self, rhs: &Self) -> Self {
        self * &rhs.inv()
    }

    /// Cross-multiplication equality in the three-variable Laurent ring.
    pub fn eq_cross(&self, rhs: &Self) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// The cross-multiplied difference `num*rhs.den - rhs.num*den`; zero
    /// exactly when the fractions agree.
    pub fn cross_difference(&self, rhs: &Self) -> LaurentPoly {
        &(&self.num * &rhs.den) - &(&rhs.num * &self.den)
    }

    /// Substitute `A -> q^a`, `B -> q^b` in both components.
    pub fn substitute(&self, a: i64, b: i64) -> (LaurentPoly, LaurentPoly) {
        (
            self.num.substitute(Var::A, a).substitute(Var::B, b),
            self.den.substitute(Var::A, a).substitute(Var::B, b),
        )
    }
}

impl Add for &SymFraction {
    type Output = SymFraction;
    fn add(self, rhs: &SymFraction) -> SymFraction {
        SymFraction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Sub for &SymFraction {
    type Output = SymFraction;
    fn sub(self, rhs: &SymFraction) -> SymFraction {
        SymFraction {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl Mul for &SymFraction {
    type Output = SymFraction;
    fn mul(self, rhs: &SymFraction) -> SymFraction {
        SymFraction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl Neg for &SymFraction {
    type Output = SymFraction;
    fn neg(self) -> SymFraction {
        SymFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for SymFraction {
            type Output = SymFraction;
            fn $method(self, rhs: SymFraction) -> SymFraction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&SymFraction> for SymFraction {
            type Output = SymFraction;
            fn $method(self, rhs: &SymFraction) -> SymFraction {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for SymFraction {
    type Output = SymFraction;
    fn neg(self) -> SymFraction {
        -&self
    }
}

/// Factor a `q`-only Laurent polynomial as `coeff * q^shift * prod [n_i]`,
/// greedily splitting off the largest plausible quantum integer. Returns
/// `None` when no such factorization exists.
fn factor_into_qints(p: &LaurentPoly) -> Option<(BigRational, i64, Vec<i64>)> {
    if p.is_zero() || !p.is_q_only() {
        return None;
    }
    let mut f = p.clone();
    let mut factors: Vec<i64> = Vec::new();
    loop {
        let lo = f.min_exp(Var::Q).expect("nonzero");
        let hi = f.max_exp(Var::Q).expect("nonzero");
        let span = hi - lo;
        if span == 0 {
            let coeff = f.coeff(&[lo, 0, 0]);
            factors.sort_unstable_by(|x, y| y.cmp(x));
            return Some((coeff, lo, factors));
        }
        if span % 2 != 0 {
            return None;
        }
        let mut n = span / 2 + 1;
        loop {
            if n < 2 {
                return None;
            }
            if let Some(quot) = f.checked_div_q(&qint(n, 1)) {
                factors.push(n);
                f = quot;
                break;
            }
            n -= 1;
        }
    }
}

fn render_factored(num: &LaurentPoly, den: &LaurentPoly) -> Option<String> {
    let (cn, sn, nf) = factor_into_qints(num)?;
    let (cd, sd, df) = factor_into_qints(den)?;
    if sn != sd {
        return None;
    }
    let coeff = cn / cd;
    let mut out = String::new();
    if coeff == -BigRational::from_integer(1.into()) {
        out.push('-');
    } else if coeff != BigRational::from_integer(1.into()) {
        out.push_str(&format!("{}*", coeff));
    }
    if nf.is_empty() {
        out.push('1');
    } else {
        for n in &nf {
            out.push_str(&format!("[{}]", n));
        }
    }
    if !df.is_empty() {
        out.push('/');
        if df.len() == 1 {
            out.push_str(&format!("[{}]", df[0]));
        } else {
            out.push('(');
            for m in &df {
                out.push_str(&format!("[{}]", m));
            }
            out.push(')');
        }
    }
    Some(out)
}

/// Render a rational function as a quantum-integer expression like
/// `-[4]/[2]` or `[6][5]/([3][2])` when an exact factorization into
/// balanced quantum integers exists. Canonical forms sometimes cancel
/// common cyclotomic factors, so small rescale products are tried before
/// giving up.
pub fn render_qint_expression(value: &crate::arith::RationalFunction) -> Option<String> {
    if value.is_zero() {
        return Some("0".to_string());
    }
    if let Some(s) = render_factored(value.num(), value.den()) {
        return Some(s);
    }
    let singles = [2i64, 3, 4, 5, 6];
    let mut rescues: Vec<LaurentPoly> = singles.iter().map(|&k| qint(k, 1)).collect();
    for (i, &k1) in singles.iter().enumerate() {
        for &k2 in &singles[i..] {
            rescues.push(&qint(k1, 1) * &qint(k2, 1));
        }
    }
    for m in rescues {
        let num = value.num() * &m;
        let den = value.den() * &m;
        if let Some(s) = render_factored(&num, &den) {
            return Some(s);
        }
    }
    None
}
