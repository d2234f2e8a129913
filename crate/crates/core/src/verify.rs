//! Randomized and exhaustive verification suites.
//!
//! Every check compares two independently computed sides. Failures are
//! collected into the report instead of aborting the run, and the report is
//! laid out in a fixed order so equal seeds give byte-identical output.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{diagonal_split, flag_split, is_compatible, skew_props, Flag, Partition, SkewShape};
use crate::edelman_greene::{
    chi_flags, j_coefficient, j_minus, j_plus, pi_algorithm, structure_violations, Case, Oracle,
};
use crate::error::{arg, EgcError, Result};
use crate::grothendieck::{
    all_reduced_words, backstable_approx, g_eval, grothendieck_poly, grothendieck_poly_with_word, shift_for,
    stabilization_p0,
};
use crate::permutations::{all_in_window, Permutation};
use crate::ring::{
    divided_difference, eval_graham, eval_graham_normalized, is_prime, isobaric, isobaric_next, EvaluationPoint, Fp,
    GrahamSum, SparsePoly, DEFAULT_PRIME,
};
use crate::tableaux::{
    enumerate, merge, omega1_tableau, omega1_tableau_inverse, r_weight_eval, split, weight_eval, EnumSpec,
    SetValuedTableau, Sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Decompose,
    Pi,
    Gvex,
    Theorem,
    Omega,
    Ring,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::Decompose, Suite::Pi, Suite::Gvex, Suite::Theorem, Suite::Omega, Suite::Ring];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Decompose => "decompose",
            Suite::Pi => "pi",
            Suite::Gvex => "gvex",
            Suite::Theorem => "theorem",
            Suite::Omega => "omega",
            Suite::Ring => "ring",
        }
    }

    /// `"all"` expands to every suite.
    pub fn parse_list(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.split(',').map(str::parse).collect()
    }
}

impl FromStr for Suite {
    type Err = EgcError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| EgcError::Argument(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bounds and randomness shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub prime: u64,
    pub seed: u64,
    /// Random points per instance.
    pub trials: usize,
    /// Support of the random points (and of the tableau value window).
    pub window: (i64, i64),
    pub max_size: usize,
    pub flag_range: (i64, i64),
    /// Worker threads; 0 lets rayon decide.
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            prime: DEFAULT_PRIME,
            seed: 0,
            trials: 5,
            window: (-2, 3),
            max_size: 3,
            flag_range: (-2, 3),
            jobs: 0,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.prime) || self.prime >= 1 << 62 {
            return arg(format!("{} is not a prime below 2^62", self.prime));
        }
        if self.trials == 0 {
            return arg("trials must be at least 1");
        }
        if self.window.0 > self.window.1 {
            return arg(format!("empty window {}:{}", self.window.0, self.window.1));
        }
        if self.flag_range.0 > self.flag_range.1 {
            return arg(format!("empty flag range {}:{}", self.flag_range.0, self.flag_range.1));
        }
        Ok(())
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub instances: usize,
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub records: BTreeMap<String, serde_json::Value>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
    pub discrepancies: usize,
    pub pass: bool,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}

/// FNV-1a, used to give every check its own stable ChaCha stream.
fn stream_id(name: &str) -> u64 {
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

/// Generator for instance `index` of the named check.
pub fn rng_for(seed: u64, check: &str, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream_id(check));
    rng.set_word_pos((index as u128) << 32);
    rng
}

fn points(cfg: &VerifyConfig, check: &str, index: usize, window: (i64, i64)) -> Result<Vec<EvaluationPoint>> {
    let mut rng = rng_for(cfg.seed, check, index);
    (0..cfg.trials).map(|_| EvaluationPoint::random(cfg.prime, window.0, window.1, &mut rng)).collect()
}

/// Runs `f` on every instance in parallel; errors become failures.
fn run_check<T, K, F>(name: &str, items: &[T], key: K, f: F) -> CheckReport
where
    T: Sync,
    K: Fn(&T) -> String + Sync,
    F: Fn(usize, &T) -> Result<Vec<String>> + Sync,
{
    let failures: Vec<String> = items
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, it)| {
            let k = key(it);
            let msgs = f(i, it).unwrap_or_else(|e| vec![format!("error: {e}")]);
            msgs.into_iter().map(move |m| format!("{k}: {m}"))
        })
        .collect();
    CheckReport { name: name.into(), instances: items.len(), failures, records: BTreeMap::new() }
}

fn mismatch(what: &str, k: usize, a: Fp, b: Fp) -> Option<String> {
    (a != b).then(|| format!("{what} differs at point {k}: {} vs {}", a.value(), b.value()))
}

type Pair = (Partition, Flag);

fn pair_key(p: &Pair) -> String {
    format!("λ={} φ={}", p.0, p.1)
}

/// All `(λ, φ)` with `|λ| ≤ max_size` and flag entries in `range`.
pub fn pairs(max_size: usize, range: (i64, i64), compatible_only: bool) -> Vec<Pair> {
    let mut out = Vec::new();
    for lambda in Partition::all_up_to(max_size) {
        for phi in Flag::all_in_range(lambda.len(), range.0, range.1) {
            if !compatible_only || is_compatible(&lambda, &phi).unwrap_or(false) {
                out.push((lambda.clone(), phi));
            }
        }
    }
    out
}

fn count(shape: SkewShape, flag: &Flag, sign: Sign, window: (i64, i64)) -> Result<usize> {
    Ok(enumerate(&EnumSpec::new(shape, Some(flag.clone()), sign, window)?)?.count())
}

fn disconnected(outer: &Partition, inner: &Partition) -> Result<bool> {
    Ok(skew_props(&SkewShape::new(outer.clone(), inner.clone())?).is_disconnected)
}

/// Split/merge round trip and exact counts for the ± decomposition of flagged tableaux.
pub fn check_decomposition(cfg: &VerifyConfig) -> CheckReport {
    let items = pairs(cfg.max_size, cfg.flag_range, false);
    let w = cfg.window;
    run_check("decomposition-bijection", &items, pair_key, |_, (lambda, phi)| {
        let (minus, plus) = flag_split(phi);
        let mut out = Vec::new();
        let spec = EnumSpec::new(SkewShape::straight(lambda.clone()), Some(phi.clone()), Sign::Any, w)?;
        let mut lhs = 0usize;
        for t in enumerate(&spec)? {
            lhs += 1;
            let (m, p) = split(&t)?;
            let (nu, mu) = (m.shape().outer(), p.shape().inner());
            if merge(&m, &p)? != t {
                out.push(format!("merge(split({t})) differs"));
            }
            if !m.respects_flag(&minus) || !p.respects_flag(&plus) || !nu.contains(mu) || !disconnected(nu, mu)? {
                out.push(format!("split({t}) leaves the target set"));
            }
        }
        let mut rhs = 0usize;
        for nu in lambda.subpartitions() {
            let cm = count(SkewShape::straight(nu.clone()), &minus, Sign::NonPositive, w)?;
            if cm == 0 {
                continue;
            }
            let mut cp = 0;
            for mu in nu.subpartitions() {
                if disconnected(&nu, &mu)? {
                    cp += count(SkewShape::new(lambda.clone(), mu)?, &plus, Sign::Positive, w)?;
                }
            }
            rhs += cm * cp;
        }
        if lhs != rhs {
            out.push(format!("tableau count {lhs} vs decomposition count {rhs}"));
        }
        Ok(out)
    })
}

/// `G^φ_λ = Σ_ν G^{φ⁻}_ν a^{λ,φ⁺}_ν` at random points.
pub fn check_flagged_g(cfg: &VerifyConfig) -> CheckReport {
    let name = "flagged-G";
    let items = pairs(cfg.max_size, cfg.flag_range, false);
    run_check(name, &items, pair_key, |i, (lambda, phi)| {
        let (minus, plus) = flag_split(phi);
        let mut out = Vec::new();
        for (k, pt) in points(cfg, name, i, cfg.window)?.into_iter().enumerate() {
            let lhs = g_eval(&SkewShape::straight(lambda.clone()), Some(phi), Sign::Any, &pt, None)?;
            let mut oracle = Oracle::new(pt.clone())?;
            let mut rhs = pt.zero();
            for nu in lambda.subpartitions() {
                let gm = g_eval(&SkewShape::straight(nu.clone()), Some(&minus), Sign::NonPositive, &pt, None)?;
                rhs += gm * oracle.a_plus(lambda, &plus, &nu)?;
            }
            out.extend(mismatch("G", k, lhs, rhs));
        }
        Ok(out)
    })
}

/// `G^φ_λ = Σ_ρ a^{λ,φ}_ρ G_ρ(x₋)` for compatible pairs, with `a` from the oracle.
pub fn check_general_a(cfg: &VerifyConfig) -> CheckReport {
    let name = "general-a";
    let items = pairs(cfg.max_size, cfg.flag_range, true);
    run_check(name, &items, pair_key, |i, (lambda, phi)| {
        let mut out = Vec::new();
        for (k, pt) in points(cfg, name, i, cfg.window)?.into_iter().enumerate() {
            let lhs = g_eval(&SkewShape::straight(lambda.clone()), Some(phi), Sign::Any, &pt, None)?;
            let mut oracle = Oracle::new(pt.clone())?;
            let mut rhs = pt.zero();
            for rho in lambda.subpartitions() {
                let g = g_eval(&SkewShape::straight(rho.clone()), None, Sign::NonPositive, &pt, None)?;
                rhs += oracle.a_general(lambda, phi, &rho)? * g;
            }
            out.extend(mismatch("G", k, lhs, rhs));
        }
        Ok(out)
    })
}

type SkewCase = (Partition, Flag, Partition);

fn skew_key(c: &SkewCase) -> String {
    format!("λ={} φ={} μ={}", c.0, c.1, c.2)
}

/// Compatible nonnegative `(λ, φ)` with every `μ ⊆ λ` leaving no diagonal cell.
fn diagonal_free_cases(cfg: &VerifyConfig) -> Vec<SkewCase> {
    let range = (cfg.flag_range.0.max(0), cfg.flag_range.1.max(0));
    let mut out = Vec::new();
    for (lambda, phi) in pairs(cfg.max_size, range, true) {
        for mu in lambda.subpartitions() {
            let skew = SkewShape::new(lambda.clone(), mu.clone()).expect("μ ⊆ λ");
            if !skew_props(&skew).has_diagonal_cell {
                out.push((lambda.clone(), phi.clone(), mu));
            }
        }
    }
    out
}

fn positive_window(cfg: &VerifyConfig) -> (i64, i64) {
    (cfg.window.0, cfg.window.1.max(cfg.flag_range.1 + 1))
}

/// The π identity on the lower part, and equality of every intermediate χ step.
pub fn check_pi(cfg: &VerifyConfig) -> Vec<CheckReport> {
    let items = diagonal_free_cases(cfg);
    let win = positive_window(cfg);
    let lower = run_check("pi-lower-diagonal", &items, skew_key, |i, (lambda, phi, mu)| {
        let (_, down) = diagonal_split(&SkewShape::new(lambda.clone(), mu.clone())?)?;
        let pis = pi_algorithm(lambda, phi)?;
        let chis = chi_flags(lambda, phi)?;
        let mut out = Vec::new();
        for (k, pt) in points(cfg, "pi-lower-diagonal", i, win)?.into_iter().enumerate() {
            let lhs = g_eval(&down, Some(phi), Sign::Positive, &pt.x_to_y(), None)?;
            for (step, (pi, chi)) in pis.iter().zip(&chis).enumerate() {
                let moved = pt.x_from_y(1, win.1, |v| pi.apply(v));
                let rhs = g_eval(&down, Some(chi), Sign::Positive, &moved, None)?;
                out.extend(mismatch(&format!("step {step}"), k, lhs, rhs));
            }
        }
        Ok(out)
    });
    let factor = run_check("diagonal-factorization", &items, skew_key, |i, (lambda, phi, mu)| {
        let skew = SkewShape::new(lambda.clone(), mu.clone())?;
        let (up, down) = diagonal_split(&skew)?;
        let mut out = Vec::new();
        for (k, pt) in points(cfg, "diagonal-factorization", i, win)?.into_iter().enumerate() {
            let pt = pt.x_to_y();
            let whole = g_eval(&skew, Some(phi), Sign::Positive, &pt, None)?;
            let parts = g_eval(&up, Some(phi), Sign::Positive, &pt, None)? * g_eval(&down, Some(phi), Sign::Positive, &pt, None)?;
            out.extend(mismatch("product", k, whole, parts));
        }
        Ok(out)
    });
    vec![lower, factor]
}

/// Symmetry in `x_k, x_{k+1}` whenever `k` is not a flag entry.
pub fn check_flag_symmetry(cfg: &VerifyConfig) -> CheckReport {
    let range = (cfg.flag_range.0.max(0), cfg.flag_range.1.max(0));
    let mut items = Vec::new();
    for (lambda, phi) in pairs(cfg.max_size, range, false) {
        for mu in lambda.subpartitions() {
            items.push((lambda.clone(), phi.clone(), mu));
        }
    }
    let win = positive_window(cfg);
    run_check("flag-symmetry", &items, skew_key, |i, (lambda, phi, mu)| {
        let skew = SkewShape::new(lambda.clone(), mu.clone())?;
        let top = phi.max().unwrap_or(0);
        let mut out = Vec::new();
        for (k, pt) in points(cfg, "flag-symmetry", i, win)?.into_iter().enumerate() {
            let base = g_eval(&skew, Some(phi), Sign::Positive, &pt, None)?;
            for s in (1..=top).filter(|s| !phi.bounds().contains(s)) {
                let swapped = g_eval(&skew, Some(phi), Sign::Positive, &pt.swap_x(s, s + 1), None)?;
                out.extend(mismatch(&format!("swap {s}"), k, base, swapped));
            }
        }
        Ok(out)
    })
}

fn all_tableaux(lambda: &Partition, window: (i64, i64)) -> Result<Vec<SetValuedTableau>> {
    Ok(enumerate(&EnumSpec::new(SkewShape::straight(lambda.clone()), None, Sign::Any, window)?)?.collect())
}

/// Per-tableau ω₁ weight identity and the round trip through row-strict tableaux.
pub fn check_omega_weight(cfg: &VerifyConfig) -> CheckReport {
    let items = Partition::all_up_to(cfg.max_size);
    run_check("omega-weight", &items, |l| format!("λ={l}"), |i, lambda| {
        let pts = points(cfg, "omega-weight", i, cfg.window)?;
        let flipped = pts.iter().map(EvaluationPoint::omega1).collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for t in all_tableaux(lambda, cfg.window)? {
            let o = omega1_tableau(&t);
            if omega1_tableau_inverse(&o) != t {
                out.push(format!("round trip fails on {t}"));
            }
            for (k, (pt, fl)) in pts.iter().zip(&flipped).enumerate() {
                out.extend(mismatch(&format!("weight of {t}"), k, r_weight_eval(&o, pt)?, weight_eval(&t, fl)?));
            }
        }
        Ok(out)
    })
}

/// ω₁ carries positive `φ`-flagged tableaux exactly onto reverse-flagged ones.
pub fn check_omega_reverse_flag(cfg: &VerifyConfig) -> CheckReport {
    let range = (cfg.flag_range.0.max(0), cfg.flag_range.1.max(0));
    let items = pairs(cfg.max_size, range, false);
    let w = (cfg.window.0.min(1 - range.1), cfg.window.1.max(range.1));
    run_check("omega-reverse-flag", &items, pair_key, |_, (lambda, phi)| {
        let mut out = Vec::new();
        for t in all_tableaux(lambda, w)? {
            let positive = t.cells().all(|(_, _, s)| s[0] >= 1) && t.respects_flag(phi);
            if positive != omega1_tableau(&t).respects_reverse_flag(phi) {
                out.push(format!("{t} breaks the correspondence"));
            }
        }
        Ok(out)
    })
}

/// ω₁ on Graham sums agrees with ω₁ on points, and ω₁ is an involution on points.
pub fn check_omega_graham(cfg: &VerifyConfig) -> CheckReport {
    let items = pairs(cfg.max_size.min(4), cfg.flag_range, true);
    run_check("omega-graham", &items, pair_key, |i, (lambda, phi)| {
        let pts = points(cfg, "omega-graham", i, cfg.window)?;
        let mut out = Vec::new();
        for (k, pt) in pts.iter().enumerate() {
            let fl = pt.omega1()?;
            if fl.omega1()? != *pt {
                out.push(format!("ω₁ is not an involution at point {k}"));
            }
            for rho in lambda.subpartitions() {
                let j = j_coefficient(lambda, phi, &rho)?;
                out.extend(mismatch(&format!("ρ={rho}"), k, eval_graham(&j.omega1(), pt)?, eval_graham(&j, &fl)?));
            }
        }
        Ok(out)
    })
}

/// Structural positivity, vanishing laws, the oracle cross-check and the β = 0 leading term.
pub fn check_theorem(cfg: &VerifyConfig) -> Vec<CheckReport> {
    let items = pairs(cfg.max_size, cfg.flag_range, true);
    let structure = run_check("structure", &items, pair_key, |_, (lambda, phi)| {
        let case = Case::of(lambda, phi);
        let mut out = Vec::new();
        for rho in lambda.subpartitions() {
            let j = j_coefficient(lambda, phi, &rho)?;
            out.extend(structure_violations(&j, case).into_iter().map(|v| format!("ρ={rho}: {v}")));
        }
        Ok(out)
    });
    let vanishing = run_check("vanishing", &items, pair_key, |_, (lambda, phi)| {
        let (minus, plus) = flag_split(phi);
        let mut out = Vec::new();
        for nu in lambda.subpartitions() {
            let skew = SkewShape::new(lambda.clone(), nu.clone())?;
            let dead = skew.cells().iter().any(|&(r, c)| r == c || plus.get(r) == 0);
            if dead && !j_plus(lambda, &plus, &nu)?.is_zero() {
                out.push(format!("j⁺ at ν={nu} should vanish"));
            }
            if !is_compatible(&nu, &minus.truncated(nu.len()))? {
                continue;
            }
            for rho in nu.subpartitions() {
                let skew = SkewShape::new(nu.clone(), rho.clone())?;
                let dead = skew.cells().iter().any(|&(r, c)| r == c || minus.get(r) == 0);
                if dead && !j_minus(&nu, &minus, &rho)?.is_zero() {
                    out.push(format!("j⁻ at ν={nu} ρ={rho} should vanish"));
                }
            }
        }
        Ok(out)
    });
    let span = cfg.max_size as i64 + 1;
    let win = (cfg.window.0.min(cfg.flag_range.0 - span), cfg.window.1.max(cfg.flag_range.1 + span));
    let cross = run_check("cross-representation", &items, pair_key, |i, (lambda, phi)| {
        let subs = lambda.subpartitions();
        let js = subs.iter().map(|rho| j_coefficient(lambda, phi, rho)).collect::<Result<Vec<_>>>()?;
        let mut out = Vec::new();
        for (k, pt) in points(cfg, "cross-representation", i, win)?.into_iter().enumerate() {
            let mut oracle = Oracle::new(pt.x_to_y())?;
            for (rho, j) in subs.iter().zip(&js) {
                let lhs = eval_graham_normalized(j, &pt)?;
                out.extend(mismatch(&format!("ρ={rho}"), k, lhs, oracle.a_general(lambda, phi, rho)?));
            }
        }
        Ok(out)
    });
    let beta_zero = run_check("beta-zero-leading", &items, pair_key, |i, (lambda, phi)| {
        let mut rng = rng_for(cfg.seed, "beta-zero-leading", i);
        let pt = EvaluationPoint::random_with_beta(cfg.prime, Fp::zero(cfg.prime), cfg.window.0, cfg.window.1, &mut rng)?;
        let mut out = Vec::new();
        for rho in Partition::all_of_size(lambda.size()) {
            let v = eval_graham_normalized(&j_coefficient(lambda, phi, &rho)?, &pt)?;
            let want = if rho == *lambda { pt.one() } else { pt.zero() };
            out.extend(mismatch(&format!("ρ={rho}"), 0, v, want));
        }
        Ok(out)
    });
    vec![structure, vanishing, cross, beta_zero]
}

/// Backstable approximation against the flagged tableau sum, for every vexillary
/// permutation supported in the window, with the observed stabilization shift.
pub fn check_gvex(cfg: &VerifyConfig) -> Vec<CheckReport> {
    let perms: Vec<Permutation> =
        all_in_window(cfg.window.0, cfg.window.1).into_iter().filter(Permutation::is_vexillary).collect();
    let key = |w: &Permutation| w.to_string();
    let results: Vec<Result<(Vec<String>, Option<i64>)>> = perms
        .par_iter()
        .enumerate()
        .map(|(i, w)| {
            let pts = points(cfg, "gvex", i, cfg.window)?;
            let csf = w.code_shape_flag()?;
            let shape = SkewShape::straight(csf.shape.clone());
            let p = pts.iter().map(|pt| shift_for(w, pt)).max().unwrap_or(0);
            let mut out = Vec::new();
            for (k, pt) in pts.iter().enumerate() {
                let lhs = backstable_approx(w, p, pt)?;
                let rhs = g_eval(&shape, Some(&csf.flag), Sign::Any, pt, None)?;
                out.extend(mismatch("backstable", k, lhs, rhs));
            }
            Ok((out, stabilization_p0(w, &pts, p + 1)?))
        })
        .collect();
    let mut gvex = CheckReport { name: "gvex".into(), instances: perms.len(), failures: vec![], records: BTreeMap::new() };
    for (w, r) in perms.iter().zip(results) {
        match r {
            Ok((fails, p0)) => {
                gvex.failures.extend(fails.into_iter().map(|m| format!("{}: {m}", key(w))));
                gvex.records.insert(key(w), serde_json::json!(p0));
            }
            Err(e) => gvex.failures.push(format!("{}: error: {e}", key(w))),
        }
    }
    let grass: Vec<Partition> = Partition::all_up_to(cfg.max_size)
        .into_iter()
        .filter(|l| {
            let w = Permutation::from_partition(l);
            w.window().is_none_or(|(lo, hi)| lo >= cfg.window.0 && hi <= cfg.window.1)
        })
        .collect();
    let grassmannian = run_check("grassmannian", &grass, |l| format!("λ={l}"), |i, lambda| {
        let w = Permutation::from_partition(lambda);
        let shape = SkewShape::straight(lambda.clone());
        let mut out = Vec::new();
        for (k, pt) in points(cfg, "grassmannian", i, cfg.window)?.into_iter().enumerate() {
            let lhs = backstable_approx(&w, shift_for(&w, &pt), &pt)?;
            let rhs = g_eval(&shape, None, Sign::NonPositive, &pt, None)?;
            out.extend(mismatch("G_λ(x₋)", k, lhs, rhs));
        }
        Ok(out)
    });
    vec![gvex, grassmannian]
}

/// Nil-Hecke relations for ∂, π and π̄ on random sparse polynomials in 4 variables.
pub fn check_operator_algebra(cfg: &VerifyConfig, polys: usize) -> CheckReport {
    type Op = fn(&SparsePoly, usize, Fp) -> Result<SparsePoly>;
    fn dd(f: &SparsePoly, i: usize, _: Fp) -> Result<SparsePoly> {
        divided_difference(f, i)
    }
    let items: Vec<usize> = (0..polys).collect();
    run_check("operator-algebra", &items, |i| format!("poly {i}"), |i, _| {
        let mut rng = rng_for(cfg.seed, "operator-algebra", i);
        let f = SparsePoly::random(4, cfg.prime, 6, 3, &mut rng)?;
        let beta = Fp::new(rand::Rng::gen_range(&mut rng, 1..cfg.prime), cfg.prime);
        let mut out = Vec::new();
        for (name, op, sq) in
            [("∂", dd as Op, Fp::zero(cfg.prime)), ("π", isobaric as Op, beta), ("π̄", isobaric_next as Op, -beta)]
        {
            for a in 1..=3 {
                let once = op(&f, a, beta)?;
                if op(&once, a, beta)? != once.scale(sq) {
                    out.push(format!("{name}_{a} squared relation"));
                }
            }
            for a in 1..=2 {
                let l = op(&op(&op(&f, a + 1, beta)?, a, beta)?, a + 1, beta)?;
                let r = op(&op(&op(&f, a, beta)?, a + 1, beta)?, a, beta)?;
                if l != r {
                    out.push(format!("{name} braid relation at {a}"));
                }
            }
            if op(&op(&f, 1, beta)?, 3, beta)? != op(&op(&f, 3, beta)?, 1, beta)? {
                out.push(format!("{name}_1 and {name}_3 do not commute"));
            }
        }
        Ok(out)
    })
}

/// Every reduced word of `w⁻¹w₀` gives the same polynomial, for all `w ∈ S_4`.
pub fn check_word_independence(cfg: &VerifyConfig) -> CheckReport {
    let items = all_in_window(1, 4);
    run_check("reduced-word-independence", &items, |w| w.to_string(), |i, w| {
        let mut rng = rng_for(cfg.seed, "reduced-word-independence", i);
        let pt = EvaluationPoint::random(cfg.prime, 1, 4, &mut rng)?;
        let reference = grothendieck_poly(w, 4, &pt)?;
        let v = w.inverse().compose(&crate::grothendieck::longest(4));
        let mut out = Vec::new();
        for word in all_reduced_words(&v) {
            if grothendieck_poly_with_word(w, 4, &word, &pt)? != reference {
                out.push(format!("word {word:?} disagrees"));
            }
        }
        Ok(out)
    })
}

/// Field sanity and the JSON round trip of coefficients.
pub fn check_ring(cfg: &VerifyConfig) -> CheckReport {
    let items = pairs(cfg.max_size.min(4), cfg.flag_range, true);
    run_check("graham-json", &items, pair_key, |i, (lambda, phi)| {
        let mut rng = rng_for(cfg.seed, "graham-json", i);
        let pt = EvaluationPoint::random(cfg.prime, cfg.window.0, cfg.window.1, &mut rng)?;
        let mut out = Vec::new();
        for rho in lambda.subpartitions() {
            let j = j_coefficient(lambda, phi, &rho)?;
            let back = GrahamSum::from_json(&j.to_json())?;
            if back != j {
                out.push(format!("ρ={rho}: JSON round trip changed the sum"));
            }
            let b = pt.beta;
            let lhs = eval_graham_normalized(&j, &pt)? * b.powi(j.normalization_beta_exp)?;
            out.extend(mismatch(&format!("ρ={rho} normalization"), 0, lhs, eval_graham(&j, &pt)?));
        }
        Ok(out)
    })
}

/// The checks making up one suite.
pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<CheckReport> {
    match suite {
        Suite::Decompose => vec![check_decomposition(cfg), check_flagged_g(cfg), check_general_a(cfg)],
        Suite::Pi => {
            let mut v = check_pi(cfg);
            v.push(check_flag_symmetry(cfg));
            v
        }
        Suite::Gvex => check_gvex(cfg),
        Suite::Theorem => check_theorem(cfg),
        Suite::Omega => vec![check_omega_weight(cfg), check_omega_reverse_flag(cfg), check_omega_graham(cfg)],
        Suite::Ring => vec![check_operator_algebra(cfg, 100), check_word_independence(cfg), check_ring(cfg)],
    }
}

/// Runs the suites on a pool of `cfg.jobs` threads.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Result<Report> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| EgcError::Internal(format!("thread pool: {e}")))?;
    let mut sorted = suites.to_vec();
    sorted.sort();
    sorted.dedup();
    let suites: Vec<SuiteReport> = pool.install(|| {
        sorted.iter().map(|&s| SuiteReport { suite: s.name().into(), checks: run_suite(s, cfg) }).collect()
    });
    let discrepancies = suites.iter().flat_map(|s| &s.checks).map(|c| c.failures.len()).sum();
    Ok(Report { config: cfg.clone(), suites, discrepancies, pass: discrepancies == 0 })
}
