//! The C2 weight lattice, positive roots, Weyl group, and dominance order.
//!
//! Weights are written in fundamental-weight coordinates `(a, b)` for
//! `a*w1 + b*w2`. The epsilon-coordinate view uses `w1 = e1` and
//! `w2 = e1 + e2`, so `(a, b)` reads as `(a + b, b)`. Simple roots are
//! `alpha1 = e1 - e2` (short) and `alpha2 = 2 e2` (long).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A point `a*w1 + b*w2` of the weight lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { a: 0, b: 0 };

    pub fn new(a: i64, b: i64) -> Self {
        Weight { a, b }
    }

    /// Epsilon coordinates `(a + b, b)`.
    pub fn eps(self) -> (i64, i64) {
        (self.a + self.b, self.b)
    }

    pub fn from_eps(x: i64, y: i64) -> Self {
        Weight { a: x - y, b: y }
    }

    pub fn is_dominant(self) -> bool {
        self.a >= 0 && self.b >= 0
    }

    pub fn require_dominant(self) -> Result<Self> {
        if self.is_dominant() {
            Ok(self)
        } else {
            Err(Error::NotDominant(self.a, self.b))
        }
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, rhs: Weight) -> Weight {
        Weight::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, rhs: Weight) -> Weight {
        Weight::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.a, -self.b)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Half the sum of positive roots, i.e. `w1 + w2`.
pub const RHO: Weight = Weight { a: 1, b: 1 };

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RootLength {
    Short,
    Long,
}

impl RootLength {
    /// The level `l(alpha)` twisting quantum integers: 1 for short roots,
    /// 2 for long roots.
    pub fn level(self) -> u32 {
        match self {
            RootLength::Short => 1,
            RootLength::Long => 2,
        }
    }
}

/// A root in epsilon coordinates with its length class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub eps: (i64, i64),
    pub length: RootLength,
}

impl Root {
    /// The four positive roots: `alpha1`, `alpha2`, `alpha1 + alpha2`, and
    /// `2 alpha1 + alpha2`.
    pub fn positive() -> [Root; 4] {
        [
            Root { eps: (1, -1), length: RootLength::Short },
            Root { eps: (0, 2), length: RootLength::Long },
            Root { eps: (1, 1), length: RootLength::Short },
            Root { eps: (2, 0), length: RootLength::Long },
        ]
    }

    pub fn simple_short() -> Root {
        Self::positive()[0]
    }

    pub fn simple_long() -> Root {
        Self::positive()[1]
    }

    /// Coroot `2 alpha / (alpha, alpha)` in epsilon coordinates. Short roots
    /// have squared length 2, long roots 4.
    pub fn coroot_eps(self) -> (i64, i64) {
        match self.length {
            RootLength::Short => self.eps,
            RootLength::Long => (self.eps.0 / 2, self.eps.1 / 2),
        }
    }

    pub fn is_positive(self) -> bool {
        Root::positive().iter().any(|r| r.eps == self.eps)
    }

    pub fn is_negative(self) -> bool {
        Root::positive()
            .iter()
            .any(|r| (-r.eps.0, -r.eps.1) == self.eps)
    }
}

/// `(alpha^vee, x)` with the standard inner product in epsilon coordinates.
pub fn pairing(alpha: &Root, x: Weight) -> i64 {
    let (c1, c2) = alpha.coroot_eps();
    let (x1, x2) = x.eps();
    c1 * x1 + c2 * x2
}

/// `mu <= lambda` in dominance order: `lambda - mu` is a nonnegative integer
/// combination of the simple roots.
pub fn dominance_leq(mu: Weight, lambda: Weight) -> bool {
    let d = lambda - mu;
    // alpha1 = 2w1 - w2 and alpha2 = -2w1 + 2w2, so the coefficients are
    // c1 = da + db and c2 = (da + 2 db) / 2.
    let c1 = d.a + d.b;
    let twice_c2 = d.a + 2 * d.b;
    c1 >= 0 && twice_c2 >= 0 && twice_c2 % 2 == 0
}

/// A Weyl group generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Gen {
    S,
    T,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S => write!(f, "s"),
            Gen::T => write!(f, "t"),
        }
    }
}

/// An element of the C2 Weyl group, as its 2x2 integer action on `(a, b)`
/// coordinates together with a reduced word. Equality and hashing use only
/// the matrix; the word is recomputed canonically by breadth-first search
/// when elements are composed.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WeylElement {
    mat: [[i64; 2]; 2],
    word: Vec<Gen>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for WeylElement {}

impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { mat: [[1, 0], [0, 1]], word: Vec::new() }
    }

    /// `s(w1) = -w1 + w2`, `s(w2) = w2`.
    pub fn gen_s() -> Self {
        WeylElement { mat: [[-1, 0], [1, 1]], word: vec![Gen::S] }
    }

    /// `t(w1) = w1`, `t(w2) = 2w1 - w2`.
    pub fn gen_t() -> Self {
        WeylElement { mat: [[1, 2], [0, -1]], word: vec![Gen::T] }
    }

    pub fn from_gen(g: Gen) -> Self {
        match g {
            Gen::S => Self::gen_s(),
            Gen::T => Self::gen_t(),
        }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.mat
    }

    /// Function composition: `(self * rhs)(x) = self(rhs(x))`.
    pub fn compose(&self, rhs: &WeylElement) -> WeylElement {
        let a = self.mat;
        let b = rhs.mat;
        let mat = [
            [
                a[0][0] * b[0][0] + a[0][1] * b[1][0],
                a[0][0] * b[0][1] + a[0][1] * b[1][1],
            ],
            [
                a[1][0] * b[0][0] + a[1][1] * b[1][0],
                a[1][0] * b[0][1] + a[1][1] * b[1][1],
            ],
        ];
        let mut out = WeylElement { mat, word: Vec::new() };
        out.word = canonical_word(&out);
        out
    }

    pub fn act(&self, x: Weight) -> Weight {
        Weight::new(
            self.mat[0][0] * x.a + self.mat[0][1] * x.b,
            self.mat[1][0] * x.a + self.mat[1][1] * x.b,
        )
    }

    /// Action on a root through the epsilon-coordinate view; the length
    /// class is Weyl-invariant.
    pub fn act_root(&self, alpha: Root) -> Root {
        let w = Weight::from_eps(alpha.eps.0, alpha.eps.1);
        let img = self.act(w);
        Root { eps: img.eps(), length: alpha.length }
    }

    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "1".to_string()
        } else {
            self.word.iter().map(|g| g.to_string()).collect()
        }
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

fn canonical_word(target: &WeylElement) -> Vec<Gen> {
    for w in weyl_group() {
        if w.mat == target.mat {
            return w.word;
        }
    }
    unreachable!("matrix is not in the Weyl group");
}

/// All eight elements, enumerated by breadth-first search from the identity
/// so each carries a reduced word. The order is deterministic: by word
/// length, with `s` explored before `t`. First hits in this order are what
/// `d_min` relies on for minimality.
pub fn weyl_group() -> Vec<WeylElement> {
    let mul = |m: [[i64; 2]; 2], n: [[i64; 2]; 2]| -> [[i64; 2]; 2] {
        [
            [
                m[0][0] * n[0][0] + m[0][1] * n[1][0],
                m[0][0] * n[0][1] + m[0][1] * n[1][1],
            ],
            [
                m[1][0] * n[0][0] + m[1][1] * n[1][0],
                m[1][0] * n[0][1] + m[1][1] * n[1][1],
            ],
        ]
    };
    let gen_mat = |g: Gen| match g {
        Gen::S => [[-1, 0], [1, 1]],
        Gen::T => [[1, 2], [0, -1]],
    };
    let mut seen: HashSet<[[i64; 2]; 2]> = HashSet::new();
    let mut out: Vec<WeylElement> = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(WeylElement { mat: [[1, 0], [0, 1]], word: Vec::new() });
    while let Some(w) = queue.pop_front() {
        if !seen.insert(w.mat) {
            continue;
        }
        out.push(w.clone());
        for g in [Gen::S, Gen::T] {
            let mat = mul(gen_mat(g), w.mat);
            let mut word = vec![g];
            word.extend_from_slice(&w.word);
            queue.push_back(WeylElement { mat, word });
        }
    }
    out
}

/// The nine weights of the two fundamental representations, the only valid
/// inputs for `d_min` and `phi_set`.
pub fn fundamental_rep_weights() -> [Weight; 9] {
    [
        Weight::new(1, 0),
        Weight::new(-1, 1),
        Weight::new(1, -1),
        Weight::new(-1, 0),
        Weight::new(0, 1),
        Weight::new(2, -1),
        Weight::new(0, 0),
        Weight::new(-2, 1),
        Weight::new(0, -1),
    ]
}

/// The minimal-length Weyl element taking `varpi` to a dominant weight.
pub fn d_min(varpi: Weight) -> Result<WeylElement> {
    if !fundamental_rep_weights().contains(&varpi) {
        return Err(Error::UnknownWeight(varpi.a, varpi.b));
    }
    // Breadth-first order guarantees the first hit has minimal length.
    for w in weyl_group() {
        if w.act(varpi).is_dominant() {
            return Ok(w);
        }
    }
    unreachable!("every weight has a dominant Weyl translate");
}

/// The inversion set `{alpha in Phi+ : d_varpi(alpha) in Phi-}`, ordered as
/// in `Root::positive`. Its size equals the word length of `d_min(varpi)`.
pub fn phi_set(varpi: Weight) -> Result<Vec<Root>> {
    let d = d_min(varpi)?;
    Ok(Root::positive()
        .into_iter()
        .filter(|alpha| d.act_root(*alpha).is_negative())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_actions() {
        let s = WeylElement::gen_s();
        let t = WeylElement::gen_t();
        assert_eq!(s.act(Weight::new(1, 0)), Weight::new(-1, 1));
        assert_eq!(s.act(Weight::new(0, 1)), Weight::new(0, 1));
        assert_eq!(t.act(Weight::new(1, 0)), Weight::new(1, 0));
        assert_eq!(t.act(Weight::new(0, 1)), Weight::new(2, -1));
    }

    #[test]
    fn longest_element_is_minus_one() {
        let s = WeylElement::gen_s();
        let t = WeylElement::gen_t();
        let w0 = s.compose(&t).compose(&s).compose(&t);
        let x = Weight::new(3, 2);
        assert_eq!(w0.act(x), -x);
    }

    #[test]
    fn group_has_order_eight() {
        let group = weyl_group();
        assert_eq!(group.len(), 8);
        let s = WeylElement::gen_s();
        let t = WeylElement::gen_t();
        assert_eq!(s.compose(&s), WeylElement::identity());
        assert_eq!(t.compose(&t), WeylElement::identity());
        let st = s.compose(&t);
        let mut p = WeylElement::identity();
        for _ in 0..4 {
            p = p.compose(&st);
        }
        assert_eq!(p, WeylElement::identity());
    }

    #[test]
    fn inversion_count_equals_length() {
        for w in weyl_group() {
            let inversions = Root::positive()
                .into_iter()
                .filter(|alpha| w.act_root(*alpha).is_negative())
                .count();
            assert_eq!(inversions, w.length(), "element {}", w);
        }
    }

    #[test]
    fn minimal_dominating_elements() {
        let cases = [
            ((1, 0), "1"),
            ((-1, 1), "s"),
            ((1, -1), "st"),
            ((-1, 0), "sts"),
            ((0, 1), "1"),
            ((2, -1), "t"),
            ((0, 0), "1"),
            ((-2, 1), "ts"),
            ((0, -1), "tst"),
        ];
        for ((a, b), word) in cases {
            let d = d_min(Weight::new(a, b)).unwrap();
            assert_eq!(d.word_string(), word, "weight ({}, {})", a, b);
            assert!(d.act(Weight::new(a, b)).is_dominant());
        }
        assert_eq!(
            d_min(Weight::new(3, 3)),
            Err(Error::UnknownWeight(3, 3))
        );
    }

    #[test]
    fn no_shorter_element_dominates() {
        for varpi in fundamental_rep_weights() {
            let d = d_min(varpi).unwrap();
            for w in weyl_group() {
                if w.act(varpi).is_dominant() {
                    assert!(w.length() >= d.length(), "weight {}", varpi);
                }
            }
        }
    }

    #[test]
    fn inversion_sets() {
        let alpha_s = Root::simple_short();
        let alpha_t = Root::simple_long();
        let s = WeylElement::gen_s();
        let t = WeylElement::gen_t();
        let st = s.compose(&t);
        let ts = t.compose(&s);

        assert_eq!(phi_set(Weight::new(-1, 1)).unwrap(), vec![alpha_s]);
        assert_eq!(phi_set(Weight::new(2, -1)).unwrap(), vec![alpha_t]);
        let set = phi_set(Weight::new(1, -1)).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.contains(&alpha_t) && set.contains(&t.act_root(alpha_s)));
        let set = phi_set(Weight::new(-2, 1)).unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.contains(&alpha_s) && set.contains(&s.act_root(alpha_t)));
        let set = phi_set(Weight::new(-1, 0)).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&alpha_s));
        assert!(set.contains(&s.act_root(alpha_t)));
        assert!(set.contains(&st.act_root(alpha_s)));
        let set = phi_set(Weight::new(0, -1)).unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&alpha_t));
        assert!(set.contains(&t.act_root(alpha_s)));
        assert!(set.contains(&ts.act_root(alpha_t)));
        assert!(phi_set(Weight::new(1, 0)).unwrap().is_empty());

        for varpi in fundamental_rep_weights() {
            let d = d_min(varpi).unwrap();
            assert_eq!(phi_set(varpi).unwrap().len(), d.length());
        }
    }

    #[test]
    fn pairings() {
        let roots = Root::positive();
        assert_eq!(pairing(&roots[0], RHO), 1);
        assert_eq!(pairing(&roots[1], RHO), 1);
        assert_eq!(pairing(&roots[2], RHO), 3);
        assert_eq!(pairing(&roots[3], RHO), 2);
        // (alpha1+alpha2)^vee against lambda + rho is a + 2b + 3.
        for (a, b) in [(0, 0), (2, 1), (5, 3)] {
            let lam = Weight::new(a, b);
            assert_eq!(pairing(&roots[2], lam + RHO), a + 2 * b + 3);
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(Weight::ZERO, Weight::new(2, 0)));
        assert!(!dominance_leq(Weight::new(1, 0), Weight::new(0, 1)));
        let lam = Weight::new(4, 7);
        assert!(dominance_leq(lam, lam));
    }

    #[test]
    fn dominance_is_a_partial_order() {
        let grid: Vec<Weight> = (0..20)
            .flat_map(|a| (0..20).map(move |b| Weight::new(a, b)))
            .collect();
        for &x in &grid {
            assert!(dominance_leq(x, x));
        }
        // Antisymmetry and transitivity on a deterministic sample of triples.
        let sample: Vec<Weight> = grid.iter().copied().step_by(7).collect();
        for &x in &sample {
            for &y in &sample {
                if dominance_leq(x, y) && dominance_leq(y, x) {
                    assert_eq!(x, y);
                }
                for &z in &sample {
                    if dominance_leq(x, y) && dominance_leq(y, z) {
                        assert!(dominance_leq(x, z));
                    }
                }
            }
        }
    }
}
