use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use super::field::Fp;
use crate::error::{arg, Result};

/// Upper bound on the variable count of a [`SparsePoly`].
pub const MAX_VARS: usize = 12;

type Exp = [u8; MAX_VARS];

/// Polynomial in `x_1..x_n` over a prime field.
#[derive(Clone)]
pub struct SparsePoly {
    n: usize,
    p: u64,
    terms: HashMap<Exp, Fp>,
}

impl SparsePoly {
    pub fn zero(n: usize, p: u64) -> Result<Self> {
        if n > MAX_VARS {
            return arg(format!("{n} variables exceeds the limit of {MAX_VARS}"));
        }
        Ok(SparsePoly { n, p, terms: HashMap::new() })
    }

    pub fn constant(n: usize, c: Fp) -> Result<Self> {
        let mut s = Self::zero(n, c.modulus())?;
        s.add_term([0; MAX_VARS], c);
        Ok(s)
    }

    /// `x_i` (1-based).
    pub fn var(n: usize, i: usize, p: u64) -> Result<Self> {
        if i == 0 || i > n {
            return arg(format!("variable x_{i} outside x_1..x_{n}"));
        }
        let mut s = Self::zero(n, p)?;
        let mut e = [0; MAX_VARS];
        e[i - 1] = 1;
        s.add_term(e, Fp::one(p));
        Ok(s)
    }

    /// Monomial with exponents `exps` and coefficient `c`.
    pub fn monomial(n: usize, exps: &[u8], c: Fp) -> Result<Self> {
        if exps.len() > n {
            return arg("exponent vector longer than variable count");
        }
        let mut s = Self::zero(n, c.modulus())?;
        let mut e = [0; MAX_VARS];
        e[..exps.len()].copy_from_slice(exps);
        s.add_term(e, c);
        Ok(s)
    }

    /// Random polynomial with up to `terms` monomials of per-variable degree `<= max_deg`.
    pub fn random<R: Rng>(n: usize, p: u64, terms: usize, max_deg: u8, rng: &mut R) -> Result<Self> {
        let mut s = Self::zero(n, p)?;
        for _ in 0..terms {
            let mut e = [0; MAX_VARS];
            for slot in e.iter_mut().take(n) {
                *slot = rng.gen_range(0..=max_deg);
            }
            s.add_term(e, Fp::new(rng.gen_range(1..p), p));
        }
        Ok(s)
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, e: Exp, c: Fp) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert(Fp::zero(self.p));
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (&e, &c) in &o.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, o: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (&e, &c) in &o.terms {
            out.add_term(e, -c);
        }
        out
    }

    pub fn scale(&self, c: Fp) -> SparsePoly {
        let mut out = SparsePoly { n: self.n, p: self.p, terms: HashMap::new() };
        if c.is_zero() {
            return out;
        }
        for (&e, &v) in &self.terms {
            out.terms.insert(e, v * c);
        }
        out
    }

    pub fn mul(&self, o: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly { n: self.n.max(o.n), p: self.p, terms: HashMap::new() };
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &o.terms {
                let mut e = [0; MAX_VARS];
                for k in 0..MAX_VARS {
                    e[k] = ea[k] + eb[k];
                }
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Multiplies by `a·x_i + b` (1-based `i`).
    pub fn mul_linear(&self, i: usize, a: Fp, b: Fp) -> SparsePoly {
        let mut out = SparsePoly { n: self.n, p: self.p, terms: HashMap::with_capacity(self.terms.len() * 2) };
        for (&e, &c) in &self.terms {
            let mut e2 = e;
            e2[i - 1] += 1;
            out.add_term(e2, c * a);
            out.add_term(e, c * b);
        }
        out
    }

    /// Evaluates at `x_k = xs[k-1]`.
    pub fn eval(&self, xs: &[Fp]) -> Fp {
        let mut acc = Fp::zero(self.p);
        for (e, &c) in &self.terms {
            let mut t = c;
            for (k, &d) in e.iter().enumerate().take(self.n) {
                if d > 0 {
                    t *= xs[k].pow(d as u64);
                }
            }
            acc += t;
        }
        acc
    }

    /// Same polynomial over more variables.
    pub fn widen(&self, n: usize) -> Result<SparsePoly> {
        if n > MAX_VARS || n < self.n {
            return arg(format!("cannot widen {} variables to {n}", self.n));
        }
        Ok(SparsePoly { n, p: self.p, terms: self.terms.clone() })
    }

    /// Coefficient list sorted by exponent, for deterministic comparison.
    pub fn sorted_terms(&self) -> Vec<(Vec<u8>, u64)> {
        let mut v: Vec<(Vec<u8>, u64)> =
            self.terms.iter().map(|(e, c)| (e[..self.n].to_vec(), c.value())).collect();
        v.sort();
        v
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i >= self.n {
            return arg(format!("operator index {i} outside 1..{}", self.n));
        }
        Ok(())
    }
}

impl PartialEq for SparsePoly {
    fn eq(&self, o: &Self) -> bool {
        self.p == o.p && self.terms == o.terms
    }
}

impl Eq for SparsePoly {}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly(n={}, {:?})", self.n, self.sorted_terms())
    }
}

/// `∂_i f = (f - s_i f) / (x_i - x_{i+1})`, computed monomial by monomial.
pub fn divided_difference(f: &SparsePoly, i: usize) -> Result<SparsePoly> {
    f.check_index(i)?;
    let (a, b) = (i - 1, i);
    let mut out = SparsePoly { n: f.n, p: f.p, terms: HashMap::new() };
    for (e, &c) in &f.terms {
        let (d, g) = (e[a], e[b]);
        if d == g {
            continue;
        }
        let (base, m, sign) = if d > g { (g, d - g, c) } else { (d, g - d, -c) };
        for k in 0..m {
            let mut e2 = *e;
            e2[a] = base + m - 1 - k;
            e2[b] = base + k;
            out.add_term(e2, sign);
        }
    }
    Ok(out)
}

/// `π_i f = ∂_i((1 + β x_i) f)`; satisfies `π_i² = β π_i`.
pub fn isobaric(f: &SparsePoly, i: usize, beta: Fp) -> Result<SparsePoly> {
    f.check_index(i)?;
    divided_difference(&f.mul_linear(i, beta, Fp::one(f.p)), i)
}

/// `π̄_i f = ∂_i((1 + β x_{i+1}) f)`; satisfies `π̄_i² = -β π̄_i` and lowers the
/// double Grothendieck polynomials built from `x ⊖ y` factors.
pub fn isobaric_next(f: &SparsePoly, i: usize, beta: Fp) -> Result<SparsePoly> {
    f.check_index(i)?;
    divided_difference(&f.mul_linear(i + 1, beta, Fp::one(f.p)), i)
}
