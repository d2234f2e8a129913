use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::Fp;
use super::point::EvaluationPoint;
use crate::error::{arg, EgcError, Result};

/// Sort key for the order 1 ≺ 2 ≺ ... ≺ -2 ≺ -1 ≺ 0.
fn prec_key(i: i64) -> (u8, i64) {
    if i >= 1 {
        (0, i)
    } else {
        (1, i)
    }
}

pub fn prec(i: i64, j: i64) -> bool {
    prec_key(i) < prec_key(j)
}

/// A factor `β(y_i ⊖ y_j)` with `i ≺ j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrahamFactor {
    i: i64,
    j: i64,
}

impl GrahamFactor {
    pub fn new(i: i64, j: i64) -> Result<Self> {
        if !prec(i, j) {
            return arg(format!("factor ({i},{j}) violates {i} ≺ {j}"));
        }
        Ok(GrahamFactor { i, j })
    }

    pub fn i(&self) -> i64 {
        self.i
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    /// 1 when `0 < i < j`, 2 when `i < j <= 0`, 3 when `j <= 0 < i`.
    pub fn kind(&self) -> u8 {
        match (self.i >= 1, self.j >= 1) {
            (true, true) => 1,
            (false, false) => 2,
            _ => 3,
        }
    }

    fn key(&self) -> (u8, i64, i64) {
        (self.kind(), self.i, self.j)
    }

    /// Image under ω₁: `(i, j) -> (1 - j, 1 - i)`.
    pub fn omega1(&self) -> GrahamFactor {
        GrahamFactor { i: 1 - self.j, j: 1 - self.i }
    }

    /// `y_i ⊖ y_j` (without the β).
    pub fn eval(&self, pt: &EvaluationPoint) -> Result<Fp> {
        pt.yy(self.i, self.j)
    }
}

pub fn omega1_factor(f: GrahamFactor) -> GrahamFactor {
    f.omega1()
}

impl PartialOrd for GrahamFactor {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for GrahamFactor {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.key().cmp(&o.key())
    }
}

fn y_name(i: i64) -> String {
    if i >= 0 {
        format!("y{i}")
    } else {
        format!("y{{{i}}}")
    }
}

impl fmt::Display for GrahamFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "β({}⊖{})", y_name(self.i), y_name(self.j))
    }
}

/// Sorted multiset of factors times `β^beta_shift`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrahamMonomial {
    factors: Vec<GrahamFactor>,
    beta_shift: i64,
}

impl GrahamMonomial {
    pub fn new(mut factors: Vec<GrahamFactor>, beta_shift: i64) -> Self {
        factors.sort();
        GrahamMonomial { factors, beta_shift }
    }

    pub fn one() -> Self {
        Self::default()
    }

    pub fn factors(&self) -> &[GrahamFactor] {
        &self.factors
    }

    pub fn beta_shift(&self) -> i64 {
        self.beta_shift
    }

    pub fn degree(&self) -> usize {
        self.factors.len()
    }

    pub fn mul(&self, o: &GrahamMonomial) -> GrahamMonomial {
        let mut f = self.factors.clone();
        f.extend_from_slice(&o.factors);
        GrahamMonomial::new(f, self.beta_shift + o.beta_shift)
    }

    pub fn omega1(&self) -> GrahamMonomial {
        GrahamMonomial::new(self.factors.iter().map(|f| f.omega1()).collect(), self.beta_shift)
    }

    /// `β^{beta_shift + |factors|} ∏ (y_i ⊖ y_j)`.
    pub fn eval(&self, pt: &EvaluationPoint) -> Result<Fp> {
        let mut acc = pt.beta.powi(self.beta_shift + self.factors.len() as i64)?;
        for f in &self.factors {
            acc *= f.eval(pt)?;
        }
        Ok(acc)
    }

    /// Multiplicity of each distinct factor.
    pub fn multiplicities(&self) -> BTreeMap<GrahamFactor, usize> {
        let mut m = BTreeMap::new();
        for f in &self.factors {
            *m.entry(*f).or_insert(0) += 1;
        }
        m
    }
}

impl fmt::Display for GrahamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.beta_shift != 0 {
            write!(f, "β^{}·", self.beta_shift)?;
        }
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for x in &self.factors {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Nonnegative combination of Graham monomials. The represented coefficient is
/// `β^{-normalization_beta_exp}` times the sum of the terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GrahamSum {
    pub normalization_beta_exp: i64,
    terms: BTreeMap<GrahamMonomial, u64>,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    factors: Vec<[i64; 2]>,
    mult: u64,
    #[serde(default, skip_serializing_if = "is_zero")]
    beta_shift: i64,
}

fn is_zero(v: &i64) -> bool {
    *v == 0
}

#[derive(Serialize, Deserialize)]
struct SumJson {
    normalization_beta_exp: i64,
    monomials: Vec<MonomialJson>,
}

impl GrahamSum {
    pub fn zero(normalization_beta_exp: i64) -> Self {
        GrahamSum { normalization_beta_exp, terms: BTreeMap::new() }
    }

    pub fn one(normalization_beta_exp: i64) -> Self {
        let mut s = Self::zero(normalization_beta_exp);
        s.add(GrahamMonomial::one(), 1);
        s
    }

    pub fn add(&mut self, m: GrahamMonomial, mult: u64) {
        if mult > 0 {
            *self.terms.entry(m).or_insert(0) += mult;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GrahamMonomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul(&self, o: &GrahamSum) -> GrahamSum {
        let mut out = GrahamSum::zero(self.normalization_beta_exp + o.normalization_beta_exp);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add(a.mul(b), ca * cb);
            }
        }
        out
    }

    pub fn omega1(&self) -> GrahamSum {
        let mut out = GrahamSum::zero(self.normalization_beta_exp);
        for (m, &c) in &self.terms {
            out.add(m.omega1(), c);
        }
        out
    }

    /// Monomials written as factor pair lists, for compact comparisons.
    pub fn monomial_lists(&self) -> Vec<(Vec<(i64, i64)>, u64)> {
        self.terms
            .iter()
            .map(|(m, &c)| (m.factors.iter().map(|f| (f.i, f.j)).collect(), c))
            .collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_json_struct()).expect("plain data")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_struct()).expect("plain data")
    }

    fn to_json_struct(&self) -> SumJson {
        SumJson {
            normalization_beta_exp: self.normalization_beta_exp,
            monomials: self
                .terms
                .iter()
                .map(|(m, &c)| MonomialJson {
                    factors: m.factors.iter().map(|f| [f.i, f.j]).collect(),
                    mult: c,
                    beta_shift: m.beta_shift,
                })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: SumJson = serde_json::from_str(s).map_err(|e| EgcError::Argument(e.to_string()))?;
        let mut out = GrahamSum::zero(raw.normalization_beta_exp);
        for m in raw.monomials {
            let factors = m.factors.iter().map(|&[i, j]| GrahamFactor::new(i, j)).collect::<Result<Vec<_>>>()?;
            out.add(GrahamMonomial::new(factors, m.beta_shift), m.mult);
        }
        Ok(out)
    }
}

impl fmt::Display for GrahamSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| if c == 1 { m.to_string() } else { format!("{c}·{m}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Evaluates the terms (without the `β^{-L}` normalization).
pub fn eval_graham(sum: &GrahamSum, pt: &EvaluationPoint) -> Result<Fp> {
    let mut acc = pt.zero();
    for (m, &c) in &sum.terms {
        acc += Fp::new(c, pt.prime()) * m.eval(pt)?;
    }
    Ok(acc)
}

/// The coefficient itself: `β^{-L}` times [`eval_graham`].
pub fn eval_graham_normalized(sum: &GrahamSum, pt: &EvaluationPoint) -> Result<Fp> {
    Ok(eval_graham(sum, pt)? * pt.beta.powi(-sum.normalization_beta_exp)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::field::DEFAULT_PRIME;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn prec_examples() {
        assert!(prec(1, 2));
        assert!(prec(5, -3));
        assert!(prec(-1, 0));
        assert!(!prec(0, -1));
        assert!(!prec(3, 3));
    }

    #[test]
    fn factor_types() {
        assert_eq!(GrahamFactor::new(1, 2).unwrap().kind(), 1);
        assert_eq!(GrahamFactor::new(-1, 0).unwrap().kind(), 2);
        assert_eq!(GrahamFactor::new(2, 0).unwrap().kind(), 3);
        assert!(GrahamFactor::new(0, 1).is_err());
    }

    #[test]
    fn omega_factor_examples() {
        let f = GrahamFactor::new(1, 2).unwrap().omega1();
        assert_eq!((f.i(), f.j()), (-1, 0));
        let f = GrahamFactor::new(2, 0).unwrap().omega1();
        assert_eq!((f.i(), f.j()), (1, -1));
    }

    #[test]
    fn omega_factor_involution_and_types() {
        for i in -10..=10 {
            for j in -10..=10 {
                let Ok(f) = GrahamFactor::new(i, j) else { continue };
                let g = f.omega1();
                assert!(prec(g.i(), g.j()));
                assert_eq!(g.omega1(), f);
                let expect = match f.kind() {
                    1 => 2,
                    2 => 1,
                    k => k,
                };
                assert_eq!(g.kind(), expect);
            }
        }
    }

    #[test]
    fn omega_factor_matches_ring_map_at_random_points() {
        // ω₁(y_i ⊖ y_j) is y_i ⊖ y_j evaluated at the ω₁ point.
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let pt = EvaluationPoint::random(DEFAULT_PRIME, -4, 5, &mut rng).unwrap();
            let i = rng.gen_range(-4..=5);
            let j = rng.gen_range(-4..=5);
            let Ok(f) = GrahamFactor::new(i, j) else { continue };
            let lhs = f.eval(&pt.omega1().unwrap()).unwrap();
            let rhs = f.omega1().eval(&pt).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn eval_examples() {
        let p = 101;
        let pt0 = EvaluationPoint::new(p, Fp::one(p));
        assert!(eval_graham(&GrahamSum::zero(0), &pt0).unwrap().is_zero());
        assert_eq!(eval_graham(&GrahamSum::one(0), &pt0).unwrap(), Fp::one(p));
        let mut s = GrahamSum::zero(0);
        s.add(GrahamMonomial::new(vec![GrahamFactor::new(1, 2).unwrap()], 0), 1);
        let mut pt = EvaluationPoint::new(p, Fp::one(p));
        pt.set_y(1, Fp::new(3, p));
        pt.set_y(2, Fp::new(1, p));
        assert_eq!(eval_graham(&s, &pt).unwrap(), Fp::one(p));
        let mut zb = pt.clone();
        zb.beta = Fp::zero(p);
        assert!(eval_graham(&s, &zb).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip_and_sorting() {
        let mut s = GrahamSum::zero(3);
        let f = |i, j| GrahamFactor::new(i, j).unwrap();
        s.add(GrahamMonomial::new(vec![f(2, 0), f(1, 2)], 0), 2);
        s.add(GrahamMonomial::new(vec![], 1), 1);
        let js = s.to_json();
        assert_eq!(GrahamSum::from_json(&js).unwrap(), s);
        assert!(js.contains("[[1,2],[2,0]]"));
        assert_eq!(s.to_string(), "β^1·1 + 2·β(y1⊖y2)β(y2⊖y0)");
    }

    #[test]
    fn structural_equality_agrees_with_evaluation() {
        let f = |i, j| GrahamFactor::new(i, j).unwrap();
        let mut a = GrahamSum::zero(0);
        a.add(GrahamMonomial::new(vec![f(1, 2), f(3, -1)], 0), 1);
        let mut b = GrahamSum::zero(0);
        b.add(GrahamMonomial::new(vec![f(3, -1), f(1, 2)], 0), 1);
        let mut c = GrahamSum::zero(0);
        c.add(GrahamMonomial::new(vec![f(1, 3), f(3, -1)], 0), 1);
        assert_eq!(a, b);
        assert_ne!(a, c);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut differ = false;
        for _ in 0..5 {
            let pt = EvaluationPoint::random(DEFAULT_PRIME, -2, 4, &mut rng).unwrap();
            assert_eq!(eval_graham(&a, &pt).unwrap(), eval_graham(&b, &pt).unwrap());
            differ |= eval_graham(&a, &pt).unwrap() != eval_graham(&c, &pt).unwrap();
        }
        assert!(differ);
    }
}
