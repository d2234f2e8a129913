use std::collections::BTreeMap;

use rand::Rng;

use super::field::Fp;
use crate::error::{EgcError, Result};

/// `a ⊖ b = (a - b) / (1 + βb)`.
pub fn ominus(a: Fp, b: Fp, beta: Fp) -> Result<Fp> {
    let den = Fp::one(a.modulus()) + beta * b;
    Ok((a - b) * den.inv().map_err(|_| EgcError::Evaluation(format!("1 + β·{b} vanishes")))?)
}

/// `⊖a = 0 ⊖ a`.
pub fn ominus_unary(a: Fp, beta: Fp) -> Result<Fp> {
    ominus(Fp::zero(a.modulus()), a, beta)
}

const RESAMPLE_LIMIT: usize = 64;

/// Values of β, x and y in a prime field; unassigned indices read as 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint {
    p: u64,
    pub beta: Fp,
    x: BTreeMap<i64, Fp>,
    y: BTreeMap<i64, Fp>,
}

impl EvaluationPoint {
    pub fn new(p: u64, beta: Fp) -> Self {
        EvaluationPoint { p, beta, x: BTreeMap::new(), y: BTreeMap::new() }
    }

    /// Random β (nonzero), with x and y random on `[lo, hi]` and zero elsewhere.
    pub fn random<R: Rng>(p: u64, lo: i64, hi: i64, rng: &mut R) -> Result<Self> {
        for _ in 0..RESAMPLE_LIMIT {
            let beta = Fp::new(rng.gen_range(1..p), p);
            let mut pt = EvaluationPoint::new(p, beta);
            for i in lo..=hi {
                pt.x.insert(i, Fp::new(rng.gen_range(0..p), p));
                pt.y.insert(i, Fp::new(rng.gen_range(0..p), p));
            }
            if pt.denominators_ok() {
                return Ok(pt);
            }
        }
        Err(EgcError::Evaluation("could not sample a point with nonzero denominators".into()))
    }

    /// As [`random`](Self::random) but with a prescribed β.
    pub fn random_with_beta<R: Rng>(p: u64, beta: Fp, lo: i64, hi: i64, rng: &mut R) -> Result<Self> {
        for _ in 0..RESAMPLE_LIMIT {
            let mut pt = EvaluationPoint::new(p, beta);
            for i in lo..=hi {
                pt.x.insert(i, Fp::new(rng.gen_range(0..p), p));
                pt.y.insert(i, Fp::new(rng.gen_range(0..p), p));
            }
            if pt.denominators_ok() {
                return Ok(pt);
            }
        }
        Err(EgcError::Evaluation("could not sample a point with nonzero denominators".into()))
    }

    pub fn denominators_ok(&self) -> bool {
        let one = Fp::one(self.p);
        self.x.values().chain(self.y.values()).all(|&v| !(one + self.beta * v).is_zero())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn zero(&self) -> Fp {
        Fp::zero(self.p)
    }

    pub fn one(&self) -> Fp {
        Fp::one(self.p)
    }

    pub fn x(&self, i: i64) -> Fp {
        self.x.get(&i).copied().unwrap_or(Fp::zero(self.p))
    }

    pub fn y(&self, j: i64) -> Fp {
        self.y.get(&j).copied().unwrap_or(Fp::zero(self.p))
    }

    pub fn set_x(&mut self, i: i64, v: Fp) {
        self.x.insert(i, v);
    }

    pub fn set_y(&mut self, j: i64, v: Fp) {
        self.y.insert(j, v);
    }

    /// Smallest interval holding every nonzero assignment.
    pub fn support(&self) -> Option<(i64, i64)> {
        let keys = self
            .x
            .iter()
            .chain(self.y.iter())
            .filter(|(_, v)| !v.is_zero())
            .map(|(&k, _)| k);
        let (mut lo, mut hi) = (i64::MAX, i64::MIN);
        for k in keys {
            lo = lo.min(k);
            hi = hi.max(k);
        }
        (lo <= hi).then_some((lo, hi))
    }

    /// `x_i ⊖ y_j` at this point.
    pub fn xy(&self, i: i64, j: i64) -> Result<Fp> {
        ominus(self.x(i), self.y(j), self.beta)
    }

    /// `y_i ⊖ y_j` at this point.
    pub fn yy(&self, i: i64, j: i64) -> Result<Fp> {
        ominus(self.y(i), self.y(j), self.beta)
    }

    /// The substitution `x -> y`.
    pub fn x_to_y(&self) -> Self {
        EvaluationPoint { p: self.p, beta: self.beta, x: self.y.clone(), y: self.y.clone() }
    }

    /// `x_i := y_{f(i)}` for `i` in `[lo, hi]`, zero elsewhere.
    pub fn x_from_y<F: Fn(i64) -> i64>(&self, lo: i64, hi: i64, f: F) -> Self {
        let x = (lo..=hi).map(|i| (i, self.y(f(i)))).filter(|(_, v)| !v.is_zero()).collect();
        EvaluationPoint { p: self.p, beta: self.beta, x, y: self.y.clone() }
    }

    /// Keeps x only at positive indices.
    pub fn x_positive(&self) -> Self {
        let x = self.x.iter().filter(|(&k, _)| k >= 1).map(|(&k, &v)| (k, v)).collect();
        EvaluationPoint { p: self.p, beta: self.beta, x, y: self.y.clone() }
    }

    /// Keeps x only at nonpositive indices.
    pub fn x_nonpositive(&self) -> Self {
        let x = self.x.iter().filter(|(&k, _)| k <= 0).map(|(&k, &v)| (k, v)).collect();
        EvaluationPoint { p: self.p, beta: self.beta, x, y: self.y.clone() }
    }

    /// Point `P'` with `f(P') = ω₁(f)(P)`: `x'_i = ⊖x_{1-i}`, `y'_i = ⊖y_{1-i}`.
    pub fn omega1(&self) -> Result<Self> {
        let flip = |m: &BTreeMap<i64, Fp>| -> Result<BTreeMap<i64, Fp>> {
            m.iter().map(|(&k, &v)| Ok((1 - k, ominus_unary(v, self.beta)?))).collect()
        };
        Ok(EvaluationPoint { p: self.p, beta: self.beta, x: flip(&self.x)?, y: flip(&self.y)? })
    }

    /// Point `P'` with `x'_k = x_{k+shift}`, `y'_k = y_{k+shift}`.
    pub fn shifted(&self, shift: i64) -> Self {
        let mv = |m: &BTreeMap<i64, Fp>| m.iter().map(|(&k, &v)| (k - shift, v)).collect();
        EvaluationPoint { p: self.p, beta: self.beta, x: mv(&self.x), y: mv(&self.y) }
    }

    /// Swaps the x values at `i` and `j`.
    pub fn swap_x(&self, i: i64, j: i64) -> Self {
        let mut out = self.clone();
        let (a, b) = (self.x(i), self.x(j));
        out.x.insert(i, b);
        out.x.insert(j, a);
        out
    }
}
