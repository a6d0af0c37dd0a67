use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// The three variables a polynomial may mention, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    Q,
    A,
    B,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::Q, Var::A, Var::B];

    fn index(self) -> usize {
        match self {
            Var::Q => 0,
            Var::A => 1,
            Var::B => 2,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::A => "A",
            Var::B => "B",
        }
    }
}

/// Exponent vector in the fixed variable order `(q, A, B)`.
pub type ExpVec = [i64; 3];

/// A multivariate Laurent polynomial with exact rational coefficients.
///
/// The term map is canonical: no stored coefficient is zero, and two values
/// are equal exactly when their term maps are equal. Terms iterate in
/// lexicographic order on the exponent vector `(q, A, B)`, ascending, which
/// fixes the serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<ExpVec, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert([0, 0, 0], c);
        }
        LaurentPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// The monomial `coeff * q^e0 A^e1 B^e2`.
    pub fn monomial(exps: ExpVec, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exps, coeff);
        }
        LaurentPoly { terms }
    }

    /// `v^k` with coefficient one.
    pub fn var_pow(v: Var, k: i64) -> Self {
        let mut exps = [0i64; 3];
        exps[v.index()] = k;
        Self::monomial(exps, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &ExpVec) -> BigRational {
        self.terms.get(exps).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The set of variables that actually occur with nonzero exponent.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|v| self.terms.keys().any(|e| e[v.index()] != 0))
            .collect()
    }

    /// True when no `A` or `B` exponent occurs.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| e[1] == 0 && e[2] == 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| *e == [0, 0, 0])
    }

    fn insert_term(terms: &mut BTreeMap<ExpVec, BigRational>, exps: ExpVec, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Replace `var^k` by `q^{power*k}` everywhere; the variable no longer
    /// occurs in the result.
    pub fn substitute(&self, var: Var, power: i64) -> Self {
        assert!(var != Var::Q, "cannot substitute the base variable q");
        let i = var.index();
        let mut terms = BTreeMap::new();
        for (exps, coeff) in &self.terms {
            let mut new_exps = *exps;
            new_exps[0] += power * new_exps[i];
            new_exps[i] = 0;
            Self::insert_term(&mut terms, new_exps, coeff.clone());
        }
        LaurentPoly { terms }
    }

    /// The bar involution `v -> v^{-1}` applied to every variable.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([-e[0], -e[1], -e[2]], c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients, i.e. the exact value at `q = A = B = 1`.
    pub fn coeff_sum(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    pub fn min_exp(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|e| e[v.index()]).min()
    }

    pub fn max_exp(&self, v: Var) -> Option<i64> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    /// Dense coefficient vector of a `q`-only polynomial, shifted so that the
    /// minimal exponent sits at index 0. Returns `(min_exp, coeffs)`.
    ///
    /// Panics if the polynomial mentions `A` or `B`.
    pub fn to_dense_q(&self) -> (i64, Vec<BigRational>) {
        assert!(self.is_q_only(), "expected a polynomial in q only");
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = self.min_exp(Var::Q).unwrap();
        let hi = self.max_exp(Var::Q).unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (exps, c) in &self.terms {
            coeffs[(exps[0] - lo) as usize] = c.clone();
        }
        (lo, coeffs)
    }

    /// Rebuild a `q`-only polynomial from a dense coefficient vector whose
    /// index 0 corresponds to `q^shift`.
    pub fn from_dense_q(shift: i64, coeffs: &[BigRational]) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                terms.insert([shift + i as i64, 0, 0], c.clone());
            }
        }
        LaurentPoly { terms }
    }

    /// Exact division, when the divisor divides this polynomial in the
    /// Laurent ring over `q` alone. Returns `None` on a nonzero remainder.
    pub fn checked_div_q(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (ns, num) = self.to_dense_q();
        let (ds, den) = divisor.to_dense_q();
        let (quot, rem) = dense_div_rem(&num, &den);
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_dense_q(ns - ds, &quot))
    }
}

/// Classical dense division with remainder over the rationals.
/// Both outputs are untrimmed; callers check the remainder for exactness.
pub(crate) fn dense_div_rem(
    num: &[BigRational],
    den: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    let ddeg = den
        .iter()
        .rposition(|c| !c.is_zero())
        .expect("division by zero polynomial");
    let lead = &den[ddeg];
    let mut rem: Vec<BigRational> = num.to_vec();
    let ndeg = match rem.iter().rposition(|c| !c.is_zero()) {
        Some(d) => d,
        None => return (Vec::new(), Vec::new()),
    };
    if ndeg < ddeg {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); ndeg - ddeg + 1];
    for i in (ddeg..=ndeg).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let factor = &rem[i] / lead;
        let offset = i - ddeg;
        for (j, dc) in den.iter().enumerate().take(ddeg + 1) {
            let delta = &factor * dc;
            rem[offset + j] = &rem[offset + j] - delta;
        }
        quot[offset] = factor;
    }
    (quot, rem)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (exps, coeff) in &rhs.terms {
            LaurentPoly::insert_term(&mut terms, *exps, coeff.clone());
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (exps, coeff) in &rhs.terms {
            LaurentPoly::insert_term(&mut terms, *exps, -coeff.clone());
        }
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let exps = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                LaurentPoly::insert_term(&mut terms, exps, c1 * c2);
            }
        }
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, coeff) in &self.terms {
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = *exps == [0, 0, 0];
            if mag != BigRational::one() || is_const {
                write!(f, "{}", mag)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut wrote_var = false;
            for v in Var::ALL {
                let e = exps[v.index()];
                if e == 0 {
                    continue;
                }
                if wrote_var {
                    write!(f, "*")?;
                }
                if e == 1 {
                    write!(f, "{}", v.symbol())?;
                } else {
                    write!(f, "{}^{}", v.symbol(), e)?;
                }
                wrote_var = true;
            }
        }
        Ok(())
    }
}

/// Wire format: one record per term, in the canonical term order.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermRecord {
    exponents: Vec<i64>,
    coeff_num: String,
    coeff_den: String,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(exps, coeff)| TermRecord {
                exponents: exps.to_vec(),
                coeff_num: coeff.numer().to_string(),
                coeff_den: coeff.denom().to_string(),
            })
            .collect();
        records.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        let mut terms = BTreeMap::new();
        for r in records {
            if r.exponents.len() != 3 {
                return Err(D::Error::custom("expected 3 exponents per term"));
            }
            let num: BigInt = r
                .coeff_num
                .parse()
                .map_err(|_| D::Error::custom("bad coefficient numerator"))?;
            let den: BigInt = r
                .coeff_den
                .parse()
                .map_err(|_| D::Error::custom("bad coefficient denominator"))?;
            if den.is_zero() {
                return Err(D::Error::custom("zero coefficient denominator"));
            }
            let exps = [r.exponents[0], r.exponents[1], r.exponents[2]];
            LaurentPoly::insert_term(&mut terms, exps, BigRational::new(num, den));
        }
        Ok(LaurentPoly { terms })
    }
}
