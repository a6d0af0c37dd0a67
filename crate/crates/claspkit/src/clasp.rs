//! Local intersection forms kappa: the seven-weight recursion, the closed
//! forms, symbolic identity certificates, the Weyl-orbit product formula,
//! and clasp expansion certificates with root-of-unity existence checks.
//!
//! Every non-dominant weight `mu` of a fundamental representation carries a
//! recursion for `kappa_{(a,b), mu}`; the recursions are grounded by
//! `kappa_{lambda, w_a} = 1` on dominant weights and by the convention that
//! `kappa^{-1}` is zero whenever `mu` falls outside the tensor decomposition
//! set `S_{lambda, a}`. The closed forms solve the recursions uniquely; this
//! module implements both sides independently so they can be played against
//! each other, exactly.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{cyc_eval, LaurentPoly, RationalFunction};
use crate::c2::{pairing, phi_set, Root, Weight, RHO};
use crate::qnum::{qint, SymExponent, SymFraction};
use crate::rep::{fund_index_of, in_s_set, s_set, FundIndex};
use crate::{Error, Result};

/// A kappa table key: a dominant weight paired with a weight of one of the
/// fundamental representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KappaKey {
    pub lambda: Weight,
    pub mu: Weight,
}

impl KappaKey {
    pub fn new(lambda: Weight, mu: Weight) -> Self {
        KappaKey { lambda, mu }
    }

    /// The fundamental representation `mu` belongs to; the zero weight
    /// belongs to the 5-dimensional one.
    pub fn fund_index(&self) -> Option<FundIndex> {
        fund_index_of(self.mu)
    }
}

impl fmt::Display for KappaKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kappa[{}, {}]", self.lambda, self.mu)
    }
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Structured closed form: `sign * prod num / (den_const * prod den)`,
/// every factor a level-1 quantum integer in a linear form of `(a, b)`.
#[derive(Debug, Clone)]
pub struct ClosedForm {
    pub sign: i64,
    pub num: Vec<SymExponent>,
    pub den: Vec<SymExponent>,
    /// Extra constant quantum-integer factor in the denominator, if any.
    pub den_const: Option<i64>,
}

/// The closed form attached to a non-dominant fundamental weight, or the
/// constant 1 on dominant ones. `None` for weights outside both
/// representations.
pub fn closed_form(mu: Weight) -> Option<ClosedForm> {
    let e = SymExponent::new;
    let form = match (mu.a, mu.b) {
        (1, 0) | (0, 1) => ClosedForm { sign: 1, num: vec![], den: vec![], den_const: None },
        (-1, 1) => ClosedForm {
            sign: -1,
            num: vec![e(1, 0, 1)],
            den: vec![e(1, 0, 0)],
            den_const: None,
        },
        (2, -1) => ClosedForm {
            sign: -1,
            num: vec![e(0, 2, 2)],
            den: vec![e(0, 2, 0)],
            den_const: None,
        },
        (0, 0) => ClosedForm {
            sign: 1,
            num: vec![e(1, 0, 2), e(1, 2, 4)],
            den: vec![e(1, 0, 0), e(1, 2, 2)],
            den_const: Some(2),
        },
        (1, -1) => ClosedForm {
            sign: 1,
            num: vec![e(1, 2, 3), e(0, 2, 2)],
            den: vec![e(1, 2, 2), e(0, 2, 0)],
            den_const: None,
        },
        (-2, 1) => ClosedForm {
            sign: -1,
            num: vec![e(1, 0, 1), e(2, 2, 4)],
            den: vec![e(1, 0, -1), e(2, 2, 2)],
            den_const: None,
        },
        (-1, 0) => ClosedForm {
            sign: -1,
            num: vec![e(2, 2, 4), e(1, 2, 3), e(1, 0, 1)],
            den: vec![e(2, 2, 2), e(1, 2, 2), e(1, 0, 0)],
            den_const: None,
        },
        (0, -1) => ClosedForm {
            sign: 1,
            num: vec![e(2, 2, 4), e(1, 2, 3), e(0, 2, 2)],
            den: vec![e(2, 2, 2), e(1, 2, 1), e(0, 2, 0)],
            den_const: None,
        },
        _ => return None,
    };
    Some(form)
}

impl ClosedForm {
    /// Concrete value at `lambda = (a, b)`.
    pub fn eval(&self, lambda: Weight) -> RationalFunction {
        let mut num = LaurentPoly::from_int(self.sign);
        for f in &self.num {
            num = num * qint(f.eval(lambda.a, lambda.b), 1);
        }
        let mut den = LaurentPoly::one();
        if let Some(k) = self.den_const {
            den = den * qint(k, 1);
        }
        for f in &self.den {
            den = den * qint(f.eval(lambda.a, lambda.b), 1);
        }
        RationalFunction::new(num, den).expect("closed-form denominator is nonzero in domain")
    }

    /// Symbolic value with the weight argument shifted by `(da, db)`.
    pub fn sym(&self, da: i64, db: i64) -> SymFraction {
        let mut out = SymFraction::from_poly(LaurentPoly::from_int(self.sign));
        for f in &self.num {
            out = out * SymFraction::qint(f.shifted(da, db), 1);
        }
        if let Some(k) = self.den_const {
            out = out.div(&SymFraction::from_poly(qint(k, 1)));
        }
        for f in &self.den {
            out = out.div(&SymFraction::qint(f.shifted(da, db), 1));
        }
        out
    }

    /// Human-readable uncancelled rendering at `lambda`, e.g.
    /// `[6][5][4]/([4][3][2])`.
    pub fn render(&self, lambda: Weight) -> String {
        let mut out = String::new();
        if self.sign < 0 {
            out.push('-');
        }
        if self.num.is_empty() {
            out.push('1');
        } else {
            for f in &self.num {
                out.push_str(&format!("[{}]", f.eval(lambda.a, lambda.b)));
            }
        }
        let mut den: Vec<i64> = Vec::new();
        if let Some(k) = self.den_const {
            den.push(k);
        }
        den.extend(self.den.iter().map(|f| f.eval(lambda.a, lambda.b)));
        if !den.is_empty() {
            out.push('/');
            if den.len() == 1 {
                out.push_str(&format!("[{}]", den[0]));
            } else {
                out.push('(');
                for m in &den {
                    out.push_str(&format!("[{}]", m));
                }
                out.push(')');
            }
        }
        out
    }
}

/// Closed-form kappa. Errors with `OutOfDomain` when `mu` is not in
/// `S_{lambda}`; inside the domain no denominator factor vanishes.
pub fn kappa_closed(lambda: Weight, mu: Weight) -> Result<RationalFunction> {
    if !in_s_set(lambda, mu) {
        return Err(Error::OutOfDomain(lambda.a, lambda.b, mu.a, mu.b));
    }
    Ok(closed_form(mu).expect("mu is a fundamental weight").eval(lambda))
}

/// Total inverse: zero outside the domain, `1/kappa` inside.
pub fn kappa_inv_closed(lambda: Weight, mu: Weight) -> RationalFunction {
    if !in_s_set(lambda, mu) {
        return RationalFunction::zero();
    }
    kappa_closed(lambda, mu)
        .expect("in-domain key")
        .inv()
        .expect("closed forms are nonzero")
}

// ---------------------------------------------------------------------------
// Recursive evaluation
// ---------------------------------------------------------------------------

/// The constant quantum-integer coefficients appearing in the recursions.
#[derive(Debug, Clone)]
struct RecursionConstants {
    two: RationalFunction,
    four_over_two: RationalFunction,
    five_over_two: RationalFunction,
    /// Circle value of the 4-dimensional generator: `[6][2]/[3]`.
    circle_short: RationalFunction,
    /// Circle value of the 5-dimensional generator: `[6][5]/([3][2])`.
    circle_long: RationalFunction,
    inv_two_sq: RationalFunction,
}

impl Default for RecursionConstants {
    fn default() -> Self {
        let rf = |num: LaurentPoly, den: LaurentPoly| {
            RationalFunction::new(num, den).expect("nonzero denominator")
        };
        RecursionConstants {
            two: RationalFunction::from_poly(qint(2, 1)),
            four_over_two: rf(qint(4, 1), qint(2, 1)),
            five_over_two: rf(qint(5, 1), qint(2, 1)),
            circle_short: rf(&qint(6, 1) * &qint(2, 1), qint(3, 1)),
            circle_long: rf(&qint(6, 1) * &qint(5, 1), &qint(3, 1) * &qint(2, 1)),
            inv_two_sq: rf(LaurentPoly::one(), &qint(2, 1) * &qint(2, 1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KappaMode {
    Closed,
    Recursive,
}

#[derive(Debug, Clone)]
enum Slot {
    InProgress,
    Done(RationalFunction),
}

/// Memoized kappa evaluator. In `Recursive` mode values are computed through
/// the recursions, grounded only by the initial conditions; in `Closed` mode
/// through the closed forms. The dependency order of the recursions is
/// well-founded, so `CycleDetected` can only fire on an implementation bug.
#[derive(Debug)]
pub struct KappaTable {
    mode: KappaMode,
    memo: HashMap<KappaKey, Slot>,
    consts: RecursionConstants,
}

impl KappaTable {
    pub fn new(mode: KappaMode) -> Self {
        KappaTable {
            mode,
            memo: HashMap::new(),
            consts: RecursionConstants::default(),
        }
    }

    pub fn mode(&self) -> KappaMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// Seed a precomputed value, e.g. from a cache file. The key must be in
    /// domain; the value is trusted.
    pub fn seed(&mut self, key: KappaKey, value: RationalFunction) -> Result<()> {
        if !in_s_set(key.lambda, key.mu) {
            return Err(Error::OutOfDomain(key.lambda.a, key.lambda.b, key.mu.a, key.mu.b));
        }
        self.memo.insert(key, Slot::Done(value));
        Ok(())
    }

    /// Read-only lookup of an already-computed value. Any number of threads
    /// may call this on a shared table; fills require exclusive access.
    pub fn get(&self, lambda: Weight, mu: Weight) -> Option<&RationalFunction> {
        match self.memo.get(&KappaKey::new(lambda, mu)) {
            Some(Slot::Done(v)) => Some(v),
            _ => None,
        }
    }

    /// All computed entries, sorted by `(a, b, mu)` for deterministic output.
    pub fn entries(&self) -> Vec<(KappaKey, RationalFunction)> {
        let mut out: Vec<(KappaKey, RationalFunction)> = self
            .memo
            .iter()
            .filter_map(|(k, slot)| match slot {
                Slot::Done(v) => Some((*k, v.clone())),
                Slot::InProgress => None,
            })
            .collect();
        out.sort_by_key(|(k, _)| (k.lambda.a, k.lambda.b, k.mu.a, k.mu.b));
        out
    }

    pub fn kappa(&mut self, lambda: Weight, mu: Weight) -> Result<RationalFunction> {
        if !in_s_set(lambda, mu) {
            return Err(Error::OutOfDomain(lambda.a, lambda.b, mu.a, mu.b));
        }
        let key = KappaKey::new(lambda, mu);
        match self.memo.get(&key) {
            Some(Slot::Done(v)) => return Ok(v.clone()),
            Some(Slot::InProgress) => {
                return Err(Error::CycleDetected(lambda.a, lambda.b, mu.a, mu.b))
            }
            None => {}
        }
        self.memo.insert(key, Slot::InProgress);
        let value = match self.mode {
            KappaMode::Closed => kappa_closed(lambda, mu)?,
            KappaMode::Recursive => self.eval_recursive(lambda, mu)?,
        };
        self.memo.insert(key, Slot::Done(value.clone()));
        Ok(value)
    }

    /// Total inverse in the active mode: zero outside the domain.
    pub fn kappa_inv(&mut self, lambda: Weight, mu: Weight) -> Result<RationalFunction> {
        if !lambda.is_dominant() || !in_s_set(lambda, mu) {
            return Ok(RationalFunction::zero());
        }
        self.kappa(lambda, mu)?
            .inv()
            .map_err(|_| Error::DivisionByZero)
    }

    /// One correction term `kappa^{-1}(inv) * kappa(k)`. The kappa factor is
    /// only touched when the inverse is nonzero, so out-of-cone arguments
    /// behind a vanishing inverse are never evaluated.
    fn guarded(
        &mut self,
        inv: (Weight, Weight),
        k: (Weight, Weight),
    ) -> Result<RationalFunction> {
        let i = self.kappa_inv(inv.0, inv.1)?;
        if i.is_zero() {
            return Ok(RationalFunction::zero());
        }
        Ok(&i * &self.kappa(k.0, k.1)?)
    }

    fn eval_recursive(&mut self, lambda: Weight, mu: Weight) -> Result<RationalFunction> {
        let (a, b) = (lambda.a, lambda.b);
        let w = Weight::new;
        let c = self.consts.clone();
        let value = match (mu.a, mu.b) {
            (1, 0) | (0, 1) => RationalFunction::one(),
            (-1, 1) => -&c.two - self.kappa_inv(w(a - 1, b), w(-1, 1))?,
            (2, -1) => -&c.four_over_two - self.kappa_inv(w(a, b - 1), w(2, -1))?,
            (0, 0) => {
                &c.five_over_two
                    - &self.guarded((w(a - 1, b), w(-1, 1)), (w(a - 2, b + 1), w(2, -1)))?
                    - self.kappa_inv(w(a - 1, b), w(1, -1))?
            }
            (1, -1) => {
                &c.five_over_two
                    - &self.guarded((w(a, b - 1), w(2, -1)), (w(a + 2, b - 2), w(-1, 1)))?
                    - &c.inv_two_sq * &self.kappa_inv(w(a, b - 1), w(0, 0))?
            }
            (-1, 0) => {
                -&c.circle_short
                    - &self.kappa_inv(w(a - 1, b), w(-1, 0))?
                    - &self.guarded((w(a - 1, b), w(-1, 1)), (w(a - 2, b + 1), w(1, -1)))?
                    - &self.guarded((w(a - 1, b), w(1, -1)), (w(a, b - 1), w(-1, 1)))?
            }
            (-2, 1) => {
                // Both remaining factors live at (a-1, b), inside the domain
                // whenever mu = (-2, 1) is.
                let k1 = self.kappa(w(a - 1, b), w(-1, 1))?;
                let term1 = &c.five_over_two * &k1;
                let inner = -&c.two - self.kappa_inv(w(a - 2, b), w(-1, 1))?;
                let term2 = &(&inner * &k1) * &self.kappa_inv(w(a - 1, b), w(-1, 0))?;
                let i = self.kappa_inv(w(a - 2, b), w(-1, 1))?;
                let term3 = if i.is_zero() {
                    RationalFunction::zero()
                } else {
                    let k3 = self.kappa(w(a - 2, b + 1), w(0, 0))?;
                    &(&(&k3 * &i) * &i) * &self.kappa_inv(w(a - 1, b), w(-1, 1))?
                };
                term1 - term2 - term3
            }
            (0, -1) => {
                &c.circle_long
                    - &self.kappa_inv(w(a, b - 1), w(0, -1))?
                    - &self.guarded((w(a, b - 1), w(2, -1)), (w(a + 2, b - 2), w(-2, 1)))?
                    - &self.guarded((w(a, b - 1), w(0, 0)), (w(a, b - 1), w(0, 0)))?
                    - &self.guarded((w(a, b - 1), w(-2, 1)), (w(a - 2, b), w(2, -1)))?
            }
            _ => return Err(Error::UnknownWeight(mu.a, mu.b)),
        };
        Ok(value)
    }
}

/// Recursive kappa against a caller-provided table.
pub fn kappa_recursive(
    lambda: Weight,
    mu: Weight,
    table: &mut KappaTable,
) -> Result<RationalFunction> {
    assert_eq!(table.mode(), KappaMode::Recursive);
    table.kappa(lambda, mu)
}

/// The in-domain `mu` keys at a dominant weight, 4-dimensional weights
/// first, in the fixed weight-list order.
pub fn in_domain_mus(lambda: Weight) -> Result<Vec<Weight>> {
    let mut out = s_set(lambda, FundIndex::One)?;
    out.extend(s_set(lambda, FundIndex::Two)?);
    Ok(out)
}

// ---------------------------------------------------------------------------
// Numeric cross-check
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridMismatch {
    pub lambda: Weight,
    pub mu: Weight,
    pub recursive: RationalFunction,
    pub closed: RationalFunction,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub a_max: i64,
    pub b_max: i64,
    pub comparisons: usize,
    pub mismatches: Vec<GridMismatch>,
}

impl VerificationReport {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the recursive and closed evaluators on every in-domain key of the
/// grid `0 <= a <= a_max`, `0 <= b <= b_max`. The two paths share nothing
/// but the initial conditions.
pub fn verify_recursion_numeric(a_max: i64, b_max: i64) -> VerificationReport {
    let mut table = KappaTable::new(KappaMode::Recursive);
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            let lambda = Weight::new(a, b);
            for mu in in_domain_mus(lambda).expect("dominant grid point") {
                let rec = table.kappa(lambda, mu).expect("in-domain key");
                let clo = kappa_closed(lambda, mu).expect("in-domain key");
                comparisons += 1;
                if rec != clo {
                    mismatches.push(GridMismatch { lambda, mu, recursive: rec, closed: clo });
                }
            }
        }
    }
    VerificationReport { a_max, b_max, comparisons, mismatches }
}

// ---------------------------------------------------------------------------
// Symbolic certificates
// ---------------------------------------------------------------------------

/// An unreduced three-variable fraction, recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymPair {
    pub num: LaurentPoly,
    pub den: LaurentPoly,
}

impl From<&SymFraction> for SymPair {
    fn from(f: &SymFraction) -> Self {
        SymPair { num: f.num().clone(), den: f.den().clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertStatus {
    Verified,
    Failed,
}

/// The outcome of substituting the closed forms into one recursion on its
/// generic stratum and clearing denominators in `Z[A^{+-1}, B^{+-1}, q^{+-1}]`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityCertificate {
    pub recursion_id: u8,
    pub stratum: String,
    pub lhs: SymPair,
    pub rhs: SymPair,
    /// Cross-multiplied difference `lhs.num * rhs.den - rhs.num * lhs.den`;
    /// identically zero exactly when the identity holds.
    pub difference: LaurentPoly,
    pub status: CertStatus,
}

impl IdentityCertificate {
    pub fn verified(&self) -> bool {
        self.status == CertStatus::Verified
    }
}

/// Symbolic constants mirrored from `RecursionConstants`.
#[derive(Debug, Clone)]
pub(crate) struct SymbolicConstants {
    pub two: SymFraction,
    pub four_over_two: SymFraction,
    pub five_over_two: SymFraction,
    pub circle_short: SymFraction,
    pub circle_long: SymFraction,
    pub inv_two_sq: SymFraction,
}

impl Default for SymbolicConstants {
    fn default() -> Self {
        SymbolicConstants {
            two: SymFraction::from_poly(qint(2, 1)),
            four_over_two: SymFraction::from_ratio(qint(4, 1), qint(2, 1)),
            five_over_two: SymFraction::from_ratio(qint(5, 1), qint(2, 1)),
            circle_short: SymFraction::from_ratio(&qint(6, 1) * &qint(2, 1), qint(3, 1)),
            circle_long: SymFraction::from_ratio(
                &qint(6, 1) * &qint(5, 1),
                &qint(3, 1) * &qint(2, 1),
            ),
            inv_two_sq: SymFraction::from_ratio(LaurentPoly::one(), &qint(2, 1) * &qint(2, 1)),
        }
    }
}

/// Closed form of `mu` with the weight argument shifted by `(da, db)`,
/// as a symbolic fraction.
fn rs(mu: (i64, i64), da: i64, db: i64) -> SymFraction {
    closed_form(Weight::new(mu.0, mu.1))
        .expect("fundamental weight")
        .sym(da, db)
}

pub(crate) fn recursion_certificate_with(
    which: u8,
    c: &SymbolicConstants,
) -> IdentityCertificate {
    let (lhs, rhs, stratum) = match which {
        1 => (
            rs((-1, 1), 0, 0),
            -&c.two - rs((-1, 1), -1, 0).inv(),
            "a >= 2",
        ),
        2 => (
            rs((2, -1), 0, 0),
            -&c.four_over_two - rs((2, -1), 0, -1).inv(),
            "b >= 2",
        ),
        3 => (
            rs((0, 0), 0, 0),
            &c.five_over_two
                - &(rs((-1, 1), -1, 0).inv() * rs((2, -1), -2, 1))
                - rs((1, -1), -1, 0).inv(),
            "a >= 2 && b >= 1",
        ),
        4 => (
            rs((1, -1), 0, 0),
            &c.five_over_two
                - &(rs((2, -1), 0, -1).inv() * rs((-1, 1), 2, -2))
                - &c.inv_two_sq * &rs((0, 0), 0, -1).inv(),
            "a >= 1 && b >= 2",
        ),
        5 => (
            rs((-1, 0), 0, 0),
            -&c.circle_short
                - &rs((-1, 0), -1, 0).inv()
                - &(rs((-1, 1), -1, 0).inv() * rs((1, -1), -2, 1))
                - &(rs((1, -1), -1, 0).inv() * rs((-1, 1), 0, -1)),
            "a >= 2 && b >= 1",
        ),
        6 => {
            let k1 = rs((-1, 1), -1, 0);
            let inner = -&c.two - rs((-1, 1), -2, 0).inv();
            let lhs = rs((-2, 1), 0, 0);
            let rhs = &(&c.five_over_two * &k1)
                - &(&(&inner * &k1) * &rs((-1, 0), -1, 0).inv())
                - &rs((0, 0), -2, 1)
                    .div(&(&(&rs((-1, 1), -2, 0) * &rs((-1, 1), -2, 0)) * &k1));
            (lhs, rhs, "a >= 3")
        }
        7 => (
            rs((0, -1), 0, 0),
            &(&(&c.circle_long - &rs((0, -1), 0, -1).inv())
                - &(rs((2, -1), 0, -1).inv() * rs((-2, 1), 2, -2)))
                - &(&SymFraction::one() + &(rs((-2, 1), 0, -1).inv() * rs((2, -1), -2, 0))),
            "a >= 2 && b >= 2",
        ),
        _ => panic!("recursion index must be 1..=7"),
    };
    let difference = lhs.cross_difference(&rhs);
    let status = if difference.is_zero() {
        CertStatus::Verified
    } else {
        CertStatus::Failed
    };
    IdentityCertificate {
        recursion_id: which,
        stratum: stratum.to_string(),
        lhs: SymPair::from(&lhs),
        rhs: SymPair::from(&rhs),
        difference,
        status,
    }
}

/// Substitute the closed forms into recursion `which` (1..=7), restricted to
/// the generic stratum where every referenced inverse is nonzero, and verify
/// the resulting identity exactly in the three-variable Laurent ring.
/// Boundary strata are covered by `verify_recursion_numeric`.
pub fn verify_recursion_symbolic(which: u8) -> IdentityCertificate {
    recursion_certificate_with(which, &SymbolicConstants::default())
}

// ---------------------------------------------------------------------------
// Weyl-orbit product formula
// ---------------------------------------------------------------------------

/// The eight extremal fundamental-representation weights (all nine minus the
/// zero weight).
pub fn extremal_weights() -> [Weight; 8] {
    [
        Weight::new(1, 0),
        Weight::new(-1, 1),
        Weight::new(1, -1),
        Weight::new(-1, 0),
        Weight::new(0, 1),
        Weight::new(2, -1),
        Weight::new(-2, 1),
        Weight::new(0, -1),
    ]
}

/// The sign relating the orbit product to the closed form. Derived once by
/// comparing the two at the generic point `(3, 3)` and frozen; it is not
/// `(-1)^{length(d)}` (that fails at `(-2, 1)`).
pub fn corollary_sign(varpi: Weight) -> Result<i64> {
    match (varpi.a, varpi.b) {
        (1, 0) | (0, 1) | (1, -1) | (0, -1) => Ok(1),
        (-1, 1) | (2, -1) | (-2, 1) | (-1, 0) => Ok(-1),
        _ => Err(Error::UnknownWeight(varpi.a, varpi.b)),
    }
}

/// The linear form `(alpha^vee, lambda + varpi + rho)` in `(a, b)`, encoded
/// for the symbolic ring. `varpi = 0` gives the `lambda + rho` pairing.
fn pairing_form(alpha: &Root, varpi: Weight) -> SymExponent {
    let (x, y) = alpha.coroot_eps();
    SymExponent::new(x, x + y, x * (varpi.a + varpi.b + 2) + y * (varpi.b + 1))
}

/// The unsigned Weyl-orbit product over the inversion set of `d_varpi`,
/// together with the frozen sign; `sign * product = kappa_closed`.
pub fn corollary_product(lambda: Weight, varpi: Weight) -> Result<(RationalFunction, i64)> {
    lambda.require_dominant()?;
    if !extremal_weights().contains(&varpi) {
        return Err(Error::UnknownWeight(varpi.a, varpi.b));
    }
    if !(lambda + varpi).is_dominant() {
        return Err(Error::OutOfDomain(lambda.a, lambda.b, varpi.a, varpi.b));
    }
    let sign = corollary_sign(varpi)?;
    let mut num = LaurentPoly::one();
    let mut den = LaurentPoly::one();
    for alpha in phi_set(varpi)? {
        let level = alpha.length.level();
        let top = pairing(&alpha, lambda + RHO);
        let bottom = pairing(&alpha, lambda + varpi + RHO);
        if bottom <= 0 {
            return Err(Error::OutOfDomain(lambda.a, lambda.b, varpi.a, varpi.b));
        }
        num = num * qint(top, level);
        den = den * qint(bottom, level);
    }
    Ok((RationalFunction::new(num, den)?, sign))
}

/// Certificate for one extremal weight: the orbit product with its sign
/// equals the closed form, verified symbolically after the `A`/`B`
/// substitution.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorollaryCertificate {
    pub varpi: Weight,
    pub stratum: String,
    pub lhs: SymPair,
    pub rhs: SymPair,
    pub difference: LaurentPoly,
    pub status: CertStatus,
}

impl CorollaryCertificate {
    pub fn verified(&self) -> bool {
        self.status == CertStatus::Verified
    }
}

pub fn verify_corollary_symbolic(varpi: Weight) -> Result<CorollaryCertificate> {
    if !extremal_weights().contains(&varpi) {
        return Err(Error::UnknownWeight(varpi.a, varpi.b));
    }
    let sign = corollary_sign(varpi)?;
    let mut product = SymFraction::from_poly(LaurentPoly::from_int(sign));
    for alpha in phi_set(varpi)? {
        let level = alpha.length.level();
        product = product * SymFraction::qint(pairing_form(&alpha, Weight::ZERO), level);
        product = product.div(&SymFraction::qint(pairing_form(&alpha, varpi), level));
    }
    let closed = closed_form(varpi).expect("extremal weight").sym(0, 0);
    let difference = product.cross_difference(&closed);
    let status = if difference.is_zero() {
        CertStatus::Verified
    } else {
        CertStatus::Failed
    };
    Ok(CorollaryCertificate {
        varpi,
        stratum: "lambda + varpi dominant".to_string(),
        lhs: SymPair::from(&product),
        rhs: SymPair::from(&closed),
        difference,
        status,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorollaryGridReport {
    pub comparisons: usize,
    pub mismatches: Vec<(Weight, Weight)>,
}

impl CorollaryGridReport {
    pub fn all_equal(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Check `sign * product = kappa_closed` for every extremal weight over the
/// grid, skipping keys whose shifted weight leaves the dominant cone.
pub fn verify_corollary_numeric(a_max: i64, b_max: i64) -> CorollaryGridReport {
    let mut comparisons = 0;
    let mut mismatches = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            let lambda = Weight::new(a, b);
            for varpi in extremal_weights() {
                if !(lambda + varpi).is_dominant() || !in_s_set(lambda, varpi) {
                    continue;
                }
                let (product, sign) = corollary_product(lambda, varpi).expect("domain checked");
                let closed = kappa_closed(lambda, varpi).expect("domain checked");
                let signed = if sign < 0 { -&product } else { product };
                comparisons += 1;
                if signed != closed {
                    mismatches.push((lambda, varpi));
                }
            }
        }
    }
    CorollaryGridReport { comparisons, mismatches }
}

// ---------------------------------------------------------------------------
// Clasp expansion certificates and existence at roots of unity
// ---------------------------------------------------------------------------

/// One correction term of a clasp expansion step.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorrectionRecord {
    pub mu: Weight,
    pub kappa: RationalFunction,
    pub child: Weight,
}

/// One step of the expansion: the clasp at `from` is tensored by a
/// fundamental letter, and corrections are subtracted for every non-dominant
/// admissible weight.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpansionStep {
    pub from: Weight,
    pub letter: FundIndex,
    pub corrections: Vec<CorrectionRecord>,
}

/// The full tree of recursion steps from the empty word to the target,
/// carrying every kappa coefficient met along the way.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaspExpansionCertificate {
    pub target: Weight,
    pub path: Vec<FundIndex>,
    pub steps: Vec<ExpansionStep>,
}

/// How to walk from the empty word to the target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathPolicy {
    /// All 4-dimensional letters first, then all 5-dimensional ones.
    OnesThenTwos,
    Custom(Vec<FundIndex>),
}

impl PathPolicy {
    fn resolve(&self, target: Weight) -> Result<Vec<FundIndex>> {
        match self {
            PathPolicy::OnesThenTwos => {
                let mut path = vec![FundIndex::One; target.a as usize];
                path.extend(vec![FundIndex::Two; target.b as usize]);
                Ok(path)
            }
            PathPolicy::Custom(path) => {
                let sum = path.iter().fold(Weight::ZERO, |acc, l| acc + l.weight());
                if sum != target {
                    return Err(Error::BadPath(path.iter().map(|l| l.digit()).collect()));
                }
                Ok(path.clone())
            }
        }
    }
}

/// Build the expansion certificate for a dominant target along the given
/// path. Each step from `lambda` by the letter `a` records a correction for
/// every `mu` in `S_{lambda, a}` other than the dominant fundamental weight,
/// with its closed-form kappa.
pub fn expansion_certificate(
    target: Weight,
    policy: &PathPolicy,
) -> Result<ClaspExpansionCertificate> {
    target.require_dominant()?;
    let path = policy.resolve(target)?;
    let mut steps = Vec::with_capacity(path.len());
    let mut from = Weight::ZERO;
    for &letter in &path {
        let mut corrections = Vec::new();
        for mu in s_set(from, letter)? {
            if mu == letter.weight() {
                continue;
            }
            corrections.push(CorrectionRecord {
                mu,
                kappa: kappa_closed(from, mu)?,
                child: from + mu,
            });
        }
        steps.push(ExpansionStep { from, letter, corrections });
        from = from + letter.weight();
    }
    debug_assert_eq!(from, target);
    Ok(ClaspExpansionCertificate { target, path, steps })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VanishingPart {
    Numerator,
    Denominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingKappa {
    pub lambda: Weight,
    pub mu: Weight,
    pub vanishing: VanishingPart,
}

/// Existence of the target clasp at a primitive `2l`-th root of unity, read
/// off the expansion certificate: the clasp survives specialization exactly
/// when every kappa on the path has nonvanishing numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExistenceReport {
    pub target: Weight,
    pub ell: u32,
    pub exists: bool,
    pub failing: Option<FailingKappa>,
}

pub fn clasp_exists_at(target: Weight, ell: u32, policy: &PathPolicy) -> Result<ExistenceReport> {
    if ell < 3 {
        return Err(Error::EllTooSmall(ell));
    }
    let cert = expansion_certificate(target, policy)?;
    for step in &cert.steps {
        for corr in &step.corrections {
            let vanishing = if cyc_eval(corr.kappa.num(), ell).is_zero() {
                Some(VanishingPart::Numerator)
            } else if cyc_eval(corr.kappa.den(), ell).is_zero() {
                Some(VanishingPart::Denominator)
            } else {
                None
            };
            if let Some(vanishing) = vanishing {
                return Ok(ExistenceReport {
                    target,
                    ell,
                    exists: false,
                    failing: Some(FailingKappa { lambda: step.from, mu: corr.mu, vanishing }),
                });
            }
        }
    }
    Ok(ExistenceReport { target, ell, exists: true, failing: None })
}

// ---------------------------------------------------------------------------
// Wire records
// ---------------------------------------------------------------------------

/// One serialized kappa table entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KappaRecord {
    pub a: i64,
    pub b: i64,
    pub mu: [i64; 2],
    pub value: RationalFunction,
}

impl KappaRecord {
    pub fn new(lambda: Weight, mu: Weight, value: RationalFunction) -> Self {
        KappaRecord { a: lambda.a, b: lambda.b, mu: [mu.a, mu.b], value }
    }

    pub fn key(&self) -> KappaKey {
        KappaKey::new(Weight::new(self.a, self.b), Weight::new(self.mu[0], self.mu[1]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Var;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    fn rf(num: LaurentPoly, den: LaurentPoly) -> RationalFunction {
        RationalFunction::new(num, den).unwrap()
    }

    #[test]
    fn closed_form_anchors() {
        // kappa_{(1,0), (-1,1)} = -[2]
        assert_eq!(
            kappa_closed(w(1, 0), w(-1, 1)).unwrap(),
            RationalFunction::from_poly(-qint(2, 1))
        );
        // Dominant mu always gives 1.
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(kappa_closed(w(a, b), w(1, 0)).unwrap(), RationalFunction::one());
                assert_eq!(kappa_closed(w(a, b), w(0, 1)).unwrap(), RationalFunction::one());
            }
        }
        // kappa_{(0,1), (2,-1)} = -[4]/[2] = -[2]_{q^2}
        let v = kappa_closed(w(0, 1), w(2, -1)).unwrap();
        assert_eq!(v, rf(-qint(4, 1), qint(2, 1)));
        assert_eq!(v, RationalFunction::from_poly(-qint(2, 2)));
    }

    #[test]
    fn out_of_domain_keys() {
        assert_eq!(
            kappa_closed(w(3, 0), w(1, -1)),
            Err(Error::OutOfDomain(3, 0, 1, -1))
        );
        assert_eq!(
            kappa_closed(w(1, 2), w(-2, 1)),
            Err(Error::OutOfDomain(1, 2, -2, 1))
        );
    }

    #[test]
    fn total_inverse() {
        // Zero outside the domain per the initial conditions.
        for a in 0..6 {
            assert!(kappa_inv_closed(w(a, 0), w(1, -1)).is_zero());
        }
        for b in 0..6 {
            assert!(kappa_inv_closed(w(1, b), w(-2, 1)).is_zero());
        }
        // Inside: the reciprocal. 1 / (-[2]) at (1, 0).
        assert_eq!(
            kappa_inv_closed(w(1, 0), w(-1, 1)),
            rf(-LaurentPoly::one(), qint(2, 1))
        );
    }

    #[test]
    fn recursive_base_cases() {
        let mut table = KappaTable::new(KappaMode::Recursive);
        // Recursion for (-1, 1) at (1, 0): the correction vanishes by the
        // initial condition.
        assert_eq!(
            table.kappa(w(1, 0), w(-1, 1)).unwrap(),
            RationalFunction::from_poly(-qint(2, 1))
        );
        // Recursion for (2, -1) at (0, 1).
        assert_eq!(
            table.kappa(w(0, 1), w(2, -1)).unwrap(),
            rf(-qint(4, 1), qint(2, 1))
        );
        // Recursion for (0, 0) at (1, 1) agrees with the closed form
        // [3][7]/([2][1][5]).
        assert_eq!(
            table.kappa(w(1, 1), w(0, 0)).unwrap(),
            rf(&qint(3, 1) * &qint(7, 1), &qint(2, 1) * &qint(5, 1))
        );
    }

    #[test]
    fn grid_agreement_small() {
        let report = verify_recursion_numeric(8, 8);
        assert!(report.all_equal(), "mismatches: {:?}", report.mismatches);
        assert!(report.comparisons > 7 * 36);
    }

    #[test]
    fn grid_skips_initial_condition_rows() {
        // Along b = 0 the keys (1,-1), (2,-1), (0,-1) are out of domain.
        for a in 0..=6 {
            let mus = in_domain_mus(w(a, 0)).unwrap();
            assert!(!mus.contains(&w(1, -1)));
            assert!(!mus.contains(&w(2, -1)));
            assert!(!mus.contains(&w(0, -1)));
        }
        let report = verify_recursion_numeric(1, 1);
        assert!(report.all_equal());
        // At (0,0) only the two dominant keys are in domain.
        assert_eq!(in_domain_mus(w(0, 0)).unwrap(), vec![w(1, 0), w(0, 1)]);
    }

    #[test]
    fn symbolic_certificates_verify() {
        for which in 1..=7 {
            let cert = verify_recursion_symbolic(which);
            assert!(
                cert.verified(),
                "recursion {} difference {}",
                which,
                cert.difference
            );
            assert!(cert.difference.is_zero());
        }
    }

    #[test]
    fn first_certificate_specializes_correctly() {
        // Spot-check the first certificate by substituting A -> q^a.
        let cert = verify_recursion_symbolic(1);
        for a in 2..8 {
            let lnum = cert.lhs.num.substitute(Var::A, a);
            let lden = cert.lhs.den.substitute(Var::A, a);
            let rnum = cert.rhs.num.substitute(Var::A, a);
            let rden = cert.rhs.den.substitute(Var::A, a);
            assert_eq!(&lnum * &rden, &rnum * &lden, "a = {}", a);
        }
    }

    #[test]
    fn perturbed_constant_fails() {
        // Negative control: nudging one recursion constant must produce a
        // nonzero difference polynomial.
        let c = SymbolicConstants {
            five_over_two: SymFraction::from_ratio(&qint(5, 1) + &LaurentPoly::one(), qint(2, 1)),
            ..Default::default()
        };
        let cert = recursion_certificate_with(3, &c);
        assert!(!cert.verified());
        assert!(!cert.difference.is_zero());
    }

    #[test]
    fn corollary_products() {
        // varpi = (-1, 1): product [a+1]/[a], sign -1.
        for (a, b) in [(1, 0), (2, 3), (5, 1)] {
            let (product, sign) = corollary_product(w(a, b), w(-1, 1)).unwrap();
            assert_eq!(sign, -1);
            assert_eq!(product, rf(qint(a + 1, 1), qint(a, 1)));
        }
        // varpi = (-2, 1): [a+1][2a+2b+4] / ([a-1][2a+2b+2]), sign -1.
        let (a, b) = (3, 2);
        let (product, sign) = corollary_product(w(a, b), w(-2, 1)).unwrap();
        assert_eq!(sign, -1);
        assert_eq!(
            product,
            rf(
                &qint(a + 1, 1) * &qint(2 * a + 2 * b + 4, 1),
                &qint(a - 1, 1) * &qint(2 * a + 2 * b + 2, 1)
            )
        );
        // Dominant varpi: empty product.
        let (product, sign) = corollary_product(w(4, 4), w(1, 0)).unwrap();
        assert_eq!((product, sign), (RationalFunction::one(), 1));
        // Out of domain when lambda + varpi leaves the cone.
        assert!(corollary_product(w(0, 0), w(-1, 1)).is_err());
    }

    #[test]
    fn corollary_grid_and_symbolic() {
        let report = verify_corollary_numeric(10, 10);
        assert!(report.all_equal(), "mismatches: {:?}", report.mismatches);
        for varpi in extremal_weights() {
            let cert = verify_corollary_symbolic(varpi).unwrap();
            assert!(cert.verified(), "varpi = {}", varpi);
        }
    }

    #[test]
    fn sign_table_matches_generic_point_derivation() {
        // The frozen signs are exactly what comparison against the closed
        // form at (3, 3) produces.
        let lambda = w(3, 3);
        for varpi in extremal_weights() {
            let (product, sign) = corollary_product(lambda, varpi).unwrap();
            let closed = kappa_closed(lambda, varpi).unwrap();
            let derived = if product == closed {
                1
            } else {
                assert_eq!(-&product, closed);
                -1
            };
            assert_eq!(sign, derived, "varpi = {}", varpi);
        }
    }

    #[test]
    fn kappa_is_bar_symmetric() {
        for a in 0..=10 {
            for b in 0..=10 {
                for mu in in_domain_mus(w(a, b)).unwrap() {
                    let v = kappa_closed(w(a, b), mu).unwrap();
                    assert_eq!(v.bar(), v, "lambda=({},{}), mu={}", a, b, mu);
                }
            }
        }
    }

    #[test]
    fn memoized_grid_has_no_cycles() {
        // A cycle would surface as CycleDetected; the full grid must fill.
        let mut table = KappaTable::new(KappaMode::Recursive);
        for a in 0..=10 {
            for b in 0..=10 {
                for mu in in_domain_mus(w(a, b)).unwrap() {
                    table.kappa(w(a, b), mu).unwrap();
                }
            }
        }
        assert!(table.len() >= 7 * 81);
    }

    #[test]
    fn sharded_and_shared_tables_agree() {
        // Grid work may shard by (a, b) with independent tables or reuse one
        // shared table; the values are identical either way.
        let mut shared = KappaTable::new(KappaMode::Recursive);
        for a in 0..=5 {
            for b in 0..=5 {
                for mu in in_domain_mus(w(a, b)).unwrap() {
                    let mut fresh = KappaTable::new(KappaMode::Recursive);
                    let from_fresh = fresh.kappa(w(a, b), mu).unwrap();
                    let from_shared = shared.kappa(w(a, b), mu).unwrap();
                    assert_eq!(from_fresh, from_shared);
                    assert_eq!(shared.get(w(a, b), mu), Some(&from_fresh));
                }
            }
        }
    }

    #[test]
    fn expansion_certificates() {
        // (1, 0): one step, no corrections.
        let cert = expansion_certificate(w(1, 0), &PathPolicy::OnesThenTwos).unwrap();
        assert_eq!(cert.steps.len(), 1);
        assert!(cert.steps[0].corrections.is_empty());

        // (0, 2): the second step corrects against (2,-1) and (0,-1) with
        // kappa values -[4]/[2] and [6][5][4]/([4][3][2]).
        let cert = expansion_certificate(w(0, 2), &PathPolicy::OnesThenTwos).unwrap();
        assert_eq!(cert.steps.len(), 2);
        assert!(cert.steps[0].corrections.is_empty());
        let mus: Vec<Weight> = cert.steps[1].corrections.iter().map(|c| c.mu).collect();
        assert_eq!(mus, vec![w(2, -1), w(0, -1)]);
        assert_eq!(cert.steps[1].corrections[0].kappa, rf(-qint(4, 1), qint(2, 1)));
        let expect = rf(
            &(&qint(6, 1) * &qint(5, 1)) * &qint(4, 1),
            &(&qint(4, 1) * &qint(3, 1)) * &qint(2, 1),
        );
        assert_eq!(cert.steps[1].corrections[1].kappa, expect);

        // (2, 1) along 1,1,2: correction lists of sizes 0, 2, 2 by pruning.
        let path = PathPolicy::Custom(vec![FundIndex::One, FundIndex::One, FundIndex::Two]);
        let cert = expansion_certificate(w(2, 1), &path).unwrap();
        let sizes: Vec<usize> = cert.steps.iter().map(|s| s.corrections.len()).collect();
        assert_eq!(sizes, vec![0, 2, 2]);

        // A path that does not reach the target is rejected.
        let bad = PathPolicy::Custom(vec![FundIndex::One]);
        assert!(matches!(
            expansion_certificate(w(2, 1), &bad),
            Err(Error::BadPath(_))
        ));
    }

    #[test]
    fn certificate_corrections_match_s_set() {
        for target in [w(3, 2), w(2, 3)] {
            let cert = expansion_certificate(target, &PathPolicy::OnesThenTwos).unwrap();
            for step in &cert.steps {
                let mut expect = s_set(step.from, step.letter).unwrap();
                expect.retain(|&mu| mu != step.letter.weight());
                let got: Vec<Weight> = step.corrections.iter().map(|c| c.mu).collect();
                assert_eq!(got, expect);
                for corr in &step.corrections {
                    assert!(!corr.kappa.is_zero());
                    assert_eq!(corr.kappa, kappa_closed(step.from, corr.mu).unwrap());
                    assert_eq!(corr.child, step.from + corr.mu);
                }
            }
        }
    }

    #[test]
    fn existence_at_roots_of_unity() {
        let policy = PathPolicy::OnesThenTwos;
        assert_eq!(
            clasp_exists_at(w(1, 0), 2, &policy),
            Err(Error::EllTooSmall(2))
        );
        // Trivial certificate: exists at every l.
        for ell in 3..=9 {
            assert!(clasp_exists_at(w(1, 0), ell, &policy).unwrap().exists);
        }
        // (0, 2) at l = 5 fails: [5] kills the numerator of
        // kappa_{(0,1), (0,-1)}.
        let report = clasp_exists_at(w(0, 2), 5, &policy).unwrap();
        assert!(!report.exists);
        let failing = report.failing.unwrap();
        assert_eq!((failing.lambda, failing.mu), (w(0, 1), w(0, -1)));
        assert_eq!(failing.vanishing, VanishingPart::Numerator);
        // (1, 1) at l = 5 fails through kappa_{(1,0),(0,0)} = [5]/[2]; at
        // l = 6 every kappa on the path is invertible, so the clasp exists.
        let report = clasp_exists_at(w(1, 1), 5, &policy).unwrap();
        assert!(!report.exists);
        assert_eq!(report.failing.unwrap().lambda, w(1, 0));
        assert!(clasp_exists_at(w(1, 1), 6, &policy).unwrap().exists);
    }

    #[test]
    fn kappa_record_round_trip() {
        let value = kappa_closed(w(2, 1), w(0, 0)).unwrap();
        let record = KappaRecord::new(w(2, 1), w(0, 0), value.clone());
        let json = serde_json::to_string(&record).unwrap();
        let back: KappaRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, record);
        assert_eq!(back.key(), KappaKey::new(w(2, 1), w(0, 0)));
        assert_eq!(back.value, value);
    }
}
