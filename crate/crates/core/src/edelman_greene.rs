//! Graham-positive assembly of flagged double β-Edelman–Greene coefficients,
//! together with an independent evaluation oracle built from skew flagged
//! Grothendieck sums.

use std::collections::HashMap;
use std::fmt;

use serde_json::json;

use crate::combinatorics::{
    compatible_flag, delta_seq, diagonal_split, durfee, flag_split, is_compatible, psi_flag, skew_props, xi_flag, DeltaSeq, Flag,
    Partition, SkewShape,
};
use crate::error::{arg, domain, EgcError, Result};
use crate::grothendieck::g_eval;
use crate::permutations::Permutation;
use crate::ring::{EvaluationPoint, Fp, GrahamFactor, GrahamMonomial, GrahamSum};
use crate::tableaux::{enumerate, EnumSpec, SetValuedTableau, Sign};

/// Which refined case applies, read off the sign of `φ_q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Case {
    One,
    Two,
    Both,
}

impl Case {
    pub fn of(lambda: &Partition, phi: &Flag) -> Case {
        let q = durfee(lambda);
        if q == 0 {
            return Case::Both;
        }
        match phi.get(q) {
            v if v < 0 => Case::One,
            v if v > 0 => Case::Two,
            _ => Case::Both,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Case::One => "1",
            Case::Two => "2",
            Case::Both => "both",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn require_contained(outer: &Partition, inner: &Partition) -> Result<()> {
    if outer.contains(inner) {
        Ok(())
    } else {
        arg(format!("{inner} is not contained in {outer}"))
    }
}

fn require_compatible(lambda: &Partition, phi: &Flag) -> Result<()> {
    if is_compatible(lambda, phi)? {
        Ok(())
    } else {
        arg(format!("{lambda} and {phi} are not compatible"))
    }
}

/// The partition `ν` through which every contribution to `j^{λ,φ}_ρ` factors,
/// or `None` when the coefficient vanishes structurally.
pub fn unique_nu(lambda: &Partition, phi: &Flag, rho: &Partition) -> Result<Option<Partition>> {
    require_compatible(lambda, phi)?;
    require_contained(lambda, rho)?;
    let skew = SkewShape::new(lambda.clone(), rho.clone())?;
    if skew.cells().iter().any(|&(r, c)| r == c || phi.get(r) == 0) {
        return Ok(None);
    }
    let parts = (1..=lambda.len()).map(|i| if phi.get(i) < 0 { lambda.part(i) } else { rho.part(i) }).collect();
    Partition::from_padded(parts).map(Some).map_err(|e| EgcError::Internal(format!("nu is not a partition: {e}")))
}

fn require_nonnegative(phi: &Flag) -> Result<()> {
    match phi.min() {
        Some(m) if m < 0 => arg(format!("flag {phi} has a negative entry")),
        _ => Ok(()),
    }
}

/// `π_0, ..., π_ℓ` as permutations of `1..=max φ`.
pub fn pi_algorithm(lambda: &Partition, phi: &Flag) -> Result<Vec<Permutation>> {
    require_nonnegative(phi)?;
    let psi = psi_flag(lambda, phi)?;
    let delta = delta_seq(lambda, phi)?;
    let n = phi.max().unwrap_or(0).max(1);
    let mut cur: Vec<i64> = (1..=n).collect();
    let mut out = vec![Permutation::identity()];
    for i in 1..=lambda.len() {
        let (p, d) = (psi.get(i), delta.get(i));
        if p > 0 && d > 0 {
            let start = cur
                .iter()
                .position(|&v| v == 1)
                .ok_or_else(|| EgcError::Internal("value 1 missing".into()))?;
            let block: Vec<i64> = cur.drain(start..start + d as usize).collect();
            if block != (1..=d).collect::<Vec<_>>() {
                return Err(EgcError::Internal(format!("values 1..{d} are not consecutive at step {i}")));
            }
            if (p as usize) < start {
                return Err(EgcError::Internal(format!("step {i} would move the block left")));
            }
            let tail = cur.split_off(p as usize);
            cur.extend(block);
            cur.extend(tail);
        }
        out.push(Permutation::from_oneline(1, &cur)?);
    }
    Ok(out)
}

/// `χ^(i) = (ψ_1, ..., ψ_i, φ_{i+1}, ..., φ_ℓ)` for `i = 0..=ℓ`.
pub fn chi_flags(lambda: &Partition, phi: &Flag) -> Result<Vec<Flag>> {
    require_nonnegative(phi)?;
    let psi = psi_flag(lambda, phi)?;
    let n = lambda.len();
    (0..=n)
        .map(|i| Flag::new((1..=n).map(|r| if r <= i { psi.get(r) } else { phi.get(r) }).collect()))
        .collect()
}

/// The tableaux indexing one monomial of `j⁺`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub mu: Partition,
    pub upper: SetValuedTableau,
    pub lower: SetValuedTableau,
}

fn positive_tableaux(shape: &SkewShape, flag: &Flag) -> Result<Vec<SetValuedTableau>> {
    let hi = flag.max().unwrap_or(0).max(1);
    enumerate(&EnumSpec::new(shape.clone(), Some(flag.clone()), Sign::Positive, (1, hi))?).map(|it| it.collect())
}

fn factor(i: i64, j: i64) -> Result<GrahamFactor> {
    GrahamFactor::new(i, j).map_err(|e| EgcError::Internal(format!("non-positive factor: {e}")))
}

/// `phi` itself when compatible with `lambda`, otherwise an equivalent compatible flag.
/// Equivalent flags cap every cell of every skew shape inside `lambda` identically.
fn representative(lambda: &Partition, phi: &Flag) -> Result<Flag> {
    if is_compatible(lambda, phi)? {
        Ok(phi.clone())
    } else {
        compatible_flag(lambda, phi)
    }
}

/// Every monomial of `j^{λ,φ⁺}_ν` with the tableaux it comes from.
pub fn j_plus_witnessed(lambda: &Partition, phi_plus: &Flag, nu: &Partition) -> Result<Vec<(GrahamMonomial, Witness)>> {
    require_nonnegative(phi_plus)?;
    require_contained(lambda, nu)?;
    let phi_plus = &representative(lambda, &phi_plus.truncated(lambda.len()))?;
    require_nonnegative(phi_plus)?;
    let pi = pi_algorithm(lambda, phi_plus)?.pop().expect("π_0 is always present");
    let psi = psi_flag(lambda, phi_plus)?;
    let norm = (lambda.size() - nu.size()) as i64;
    let mut out = Vec::new();
    for mu in nu.subpartitions() {
        if !skew_props(&SkewShape::new(nu.clone(), mu.clone())?).is_disconnected {
            continue;
        }
        let skew = SkewShape::new(lambda.clone(), mu.clone())?;
        if skew.cells().iter().any(|&(r, c)| r == c || phi_plus.get(r) == 0) {
            continue;
        }
        let (up, down) = diagonal_split(&skew)?;
        let uppers = positive_tableaux(&up, phi_plus)?;
        if uppers.is_empty() {
            continue;
        }
        let lowers = positive_tableaux(&down, &psi)?;
        let shift = (nu.size() - mu.size()) as i64 - skew.size() as i64 + norm;
        if shift != 0 {
            return Err(EgcError::Internal(format!("β-shift {shift} for μ = {mu}")));
        }
        for tu in &uppers {
            let upf = tu.factor_pairs().into_iter().map(|(i, j)| factor(i, j)).collect::<Result<Vec<_>>>()?;
            for tl in &lowers {
                let mut fs = upf.clone();
                for (r, c, set) in tl.cells() {
                    for &i in set {
                        fs.push(factor(pi.apply(i), i + c as i64 - r as i64)?);
                    }
                }
                let w = Witness { mu: mu.clone(), upper: tu.clone(), lower: tl.clone() };
                out.push((GrahamMonomial::new(fs, shift), w));
            }
        }
    }
    Ok(out)
}

/// `j^{λ,φ⁺}_ν` with normalization exponent `|λ| - |ν|`.
pub fn j_plus(lambda: &Partition, phi_plus: &Flag, nu: &Partition) -> Result<GrahamSum> {
    let mut sum = GrahamSum::zero((lambda.size() - nu.size()) as i64);
    for (m, _) in j_plus_witnessed(lambda, phi_plus, nu)? {
        sum.add(m, 1);
    }
    Ok(sum)
}

/// `j^{ν,φ⁻}_ρ`, computed on the conjugate side and mapped back by ω₁.
pub fn j_minus(nu: &Partition, phi_minus: &Flag, rho: &Partition) -> Result<GrahamSum> {
    if phi_minus.max().is_some_and(|m| m > 0) {
        return arg(format!("flag {phi_minus} has a positive entry"));
    }
    require_contained(nu, rho)?;
    let xi = xi_flag(nu, phi_minus)?;
    Ok(j_plus(&nu.conjugate(), &xi, &rho.conjugate())?.omega1())
}

/// Intermediate data of one `(λ, φ, ρ)` instance.
#[derive(Clone, Debug)]
pub struct PipelineContext {
    pub lambda: Partition,
    pub phi: Flag,
    pub rho: Partition,
    pub q: usize,
    pub nu: Option<Partition>,
    pub phi_minus: Flag,
    pub phi_plus: Flag,
    pub psi: Flag,
    pub delta: DeltaSeq,
    pub pi_seq: Vec<Permutation>,
    pub chi_seq: Vec<Flag>,
}

impl PipelineContext {
    pub fn new(lambda: &Partition, phi: &Flag, rho: &Partition) -> Result<Self> {
        let nu = unique_nu(lambda, phi, rho)?;
        let (phi_minus, phi_plus) = flag_split(phi);
        Ok(PipelineContext {
            lambda: lambda.clone(),
            phi: phi.clone(),
            rho: rho.clone(),
            q: durfee(lambda),
            nu,
            psi: psi_flag(lambda, &phi_plus)?,
            delta: delta_seq(lambda, &phi_plus)?,
            pi_seq: pi_algorithm(lambda, &phi_plus)?,
            chi_seq: chi_flags(lambda, &phi_plus)?,
            phi_minus,
            phi_plus,
        })
    }

    pub fn case(&self) -> Case {
        Case::of(&self.lambda, &self.phi)
    }

    pub fn normalization(&self) -> i64 {
        self.lambda.size() as i64 - self.rho.size() as i64
    }

    pub fn coefficient(&self) -> Result<GrahamSum> {
        let Some(nu) = &self.nu else {
            return Ok(GrahamSum::zero(self.normalization()));
        };
        let minus = j_minus(nu, &self.phi_minus, &self.rho)?;
        let plus = j_plus(&self.lambda, &self.phi_plus, nu)?;
        Ok(minus.mul(&plus))
    }

    /// GrahamSum JSON extended with the instance metadata.
    pub fn to_json(&self, sum: &GrahamSum) -> serde_json::Value {
        with_metadata(sum, &self.lambda, &self.phi, &self.rho, self.nu.as_ref())
    }
}

fn with_metadata(
    sum: &GrahamSum,
    lambda: &Partition,
    phi: &Flag,
    rho: &Partition,
    nu: Option<&Partition>,
) -> serde_json::Value {
    let mut v = sum.to_json_value();
    let obj = v.as_object_mut().expect("GrahamSum serializes to an object");
    obj.insert("lambda".into(), json!(lambda.parts()));
    obj.insert("phi".into(), json!(phi.bounds()));
    obj.insert("rho".into(), json!(rho.parts()));
    obj.insert("nu".into(), json!(nu.map(|n| n.parts().to_vec())));
    obj.insert("q".into(), json!(durfee(lambda)));
    obj.insert("case".into(), json!(Case::of(lambda, phi).as_str()));
    v
}

/// [`j_coefficient`] with its JSON report (`nu` is null when the coefficient vanishes structurally).
pub fn j_report(lambda: &Partition, phi: &Flag, rho: &Partition) -> Result<(GrahamSum, serde_json::Value)> {
    require_compatible(lambda, phi)?;
    if !lambda.contains(rho) {
        let zero = GrahamSum::zero(lambda.size() as i64 - rho.size() as i64);
        let v = with_metadata(&zero, lambda, phi, rho, None);
        return Ok((zero, v));
    }
    let ctx = PipelineContext::new(lambda, phi, rho)?;
    let sum = ctx.coefficient()?;
    let v = ctx.to_json(&sum);
    Ok((sum, v))
}

/// `j^{λ,φ}_ρ` as a Graham-positive sum; zero when `ρ ⊄ λ` or the coefficient
/// vanishes structurally.
pub fn j_coefficient(lambda: &Partition, phi: &Flag, rho: &Partition) -> Result<GrahamSum> {
    require_compatible(lambda, phi)?;
    if !lambda.contains(rho) {
        return Ok(GrahamSum::zero(lambda.size() as i64 - rho.size() as i64));
    }
    PipelineContext::new(lambda, phi, rho)?.coefficient()
}

/// `j^w_ρ` for vexillary `w`, through a compatible representative of its flag.
pub fn j_of_permutation(w: &Permutation, rho: &Partition) -> Result<GrahamSum> {
    if !w.is_vexillary() {
        return domain(format!("{w} contains the pattern 2143; the tableau formula covers vexillary permutations only"));
    }
    let csf = w.code_shape_flag()?;
    let phi = compatible_flag(&csf.shape, &csf.flag)?;
    j_coefficient(&csf.shape, &phi, rho)
}

/// Violations of the refined positivity structure, one message each.
pub fn structure_violations(sum: &GrahamSum, case: Case) -> Vec<String> {
    let mut out = Vec::new();
    let (mut kind1, mut kind2) = (false, false);
    for (m, _) in sum.terms() {
        if m.beta_shift() != 0 {
            out.push(format!("monomial {m} has β-exponent {} for {} factors", m.degree() as i64 + m.beta_shift(), m.degree()));
        }
        for (f, k) in m.multiplicities() {
            let cap = if f.kind() == 3 { 2 } else { 1 };
            if k > cap {
                out.push(format!("factor {f} of type {} appears {k} times in {m}", f.kind()));
            }
            kind1 |= f.kind() == 1;
            kind2 |= f.kind() == 2;
        }
    }
    if kind1 && kind2 {
        out.push("coefficient mixes type 1 and type 2 factors".into());
    }
    if kind1 && case != Case::Two {
        out.push(format!("type 1 factor in case {case}"));
    }
    if kind2 && case != Case::One {
        out.push(format!("type 2 factor in case {case}"));
    }
    out
}

/// Cache key: outer shape, inner shape, flag, and whether the flipped point is used.
type OracleKey = (Vec<usize>, Vec<usize>, Vec<i64>, bool);

/// Direct evaluation of the expansion coefficients `a` from skew flagged
/// Grothendieck sums, memoized per point.
pub struct Oracle {
    pt: EvaluationPoint,
    omega: EvaluationPoint,
    cache: HashMap<OracleKey, Fp>,
}

impl Oracle {
    pub fn new(pt: EvaluationPoint) -> Result<Self> {
        let omega = pt.omega1()?;
        Ok(Oracle { pt, omega, cache: HashMap::new() })
    }

    pub fn point(&self) -> &EvaluationPoint {
        &self.pt
    }

    fn g_pos(&mut self, shape: &SkewShape, flag: &Flag, flipped: bool) -> Result<Fp> {
        let key = (shape.outer().parts().to_vec(), shape.inner().parts().to_vec(), flag.bounds().to_vec(), flipped);
        if let Some(&v) = self.cache.get(&key) {
            return Ok(v);
        }
        let pt = if flipped { &self.omega } else { &self.pt };
        let v = g_eval(shape, Some(flag), Sign::Positive, pt, None)?;
        self.cache.insert(key, v);
        Ok(v)
    }

    fn a_plus_at(&mut self, lambda: &Partition, phi_plus: &Flag, nu: &Partition, flipped: bool) -> Result<Fp> {
        let mut acc = self.pt.zero();
        for mu in nu.subpartitions() {
            if !skew_props(&SkewShape::new(nu.clone(), mu.clone())?).is_disconnected {
                continue;
            }
            let g = self.g_pos(&SkewShape::new(lambda.clone(), mu.clone())?, phi_plus, flipped)?;
            acc += self.pt.beta.pow((nu.size() - mu.size()) as u64) * g;
        }
        Ok(acc)
    }

    /// `a^{λ,φ⁺}_ν`: flagged positive-alphabet sums over disconnected `ν/μ`.
    pub fn a_plus(&mut self, lambda: &Partition, phi_plus: &Flag, nu: &Partition) -> Result<Fp> {
        require_nonnegative(phi_plus)?;
        require_contained(lambda, nu)?;
        self.a_plus_at(lambda, phi_plus, nu, false)
    }

    /// `a^{ν,φ⁻}_ρ = ω₁(a^{ν',ξ(ν)}_{ρ'})`.
    pub fn a_minus(&mut self, nu: &Partition, phi_minus: &Flag, rho: &Partition) -> Result<Fp> {
        require_contained(nu, rho)?;
        let xi = xi_flag(nu, phi_minus)?;
        self.a_plus_at(&nu.conjugate(), &xi, &rho.conjugate(), true)
    }

    /// `a^{λ,φ}_ρ = Σ_ν a^{ν,φ⁻}_ρ a^{λ,φ⁺}_ν`.
    pub fn a_general(&mut self, lambda: &Partition, phi: &Flag, rho: &Partition) -> Result<Fp> {
        require_compatible(lambda, phi)?;
        let (minus, plus) = flag_split(phi);
        let mut acc = self.pt.zero();
        for nu in lambda.subpartitions() {
            if !nu.contains(rho) {
                continue;
            }
            let ap = self.a_plus(lambda, &plus, &nu)?;
            if !is_compatible(&nu, &minus.truncated(nu.len()))? {
                if !ap.is_zero() {
                    return Err(EgcError::Internal(format!("a⁺ nonzero at ν = {nu} with incompatible φ⁻")));
                }
                continue;
            }
            acc += self.a_minus(&nu, &minus, rho)? * ap;
        }
        Ok(acc)
    }
}

/// `j^{λ,φ}_ρ` at `pt` through the oracle: `a^{λ,φ}_ρ` after `x ↦ y`.
pub fn j_oracle_eval(lambda: &Partition, phi: &Flag, rho: &Partition, pt: &EvaluationPoint) -> Result<Fp> {
    if !lambda.contains(rho) {
        return Ok(pt.zero());
    }
    Oracle::new(pt.x_to_y())?.a_general(lambda, phi, rho)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{eval_graham_normalized, DEFAULT_PRIME};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn f(v: &[i64]) -> Flag {
        Flag::new(v.to_vec()).unwrap()
    }

    fn lists(s: &GrahamSum) -> Vec<(Vec<(i64, i64)>, u64)> {
        s.monomial_lists()
    }

    #[test]
    fn pi_fixture() {
        let lambda = p(&[4, 4, 4, 4, 4, 2, 1]);
        let pis = pi_algorithm(&lambda, &f(&[3, 4, 4, 5, 6, 6, 8])).unwrap();
        assert_eq!(pis[5].oneline(1, 8), vec![6, 1, 2, 3, 4, 5, 7, 8]);
        assert_eq!(pis[6].oneline(1, 8), vec![6, 3, 4, 5, 1, 2, 7, 8]);
        assert_eq!(pis[7].oneline(1, 8), vec![6, 3, 4, 5, 7, 8, 1, 2]);
        assert!(pis[..5].iter().all(Permutation::is_identity));
        let literal = pi_algorithm(&lambda, &f(&[3, 4, 4, 5, 6, 6, 6])).unwrap();
        assert_eq!(literal[7], literal[6]);
    }

    #[test]
    fn pi_small() {
        let pis = pi_algorithm(&p(&[1, 1]), &f(&[1, 2])).unwrap();
        assert!(pis[1].is_identity());
        assert_eq!(pis[2].oneline(1, 3), vec![2, 1, 3]);
        let pis = pi_algorithm(&p(&[3, 3]), &f(&[1, 2])).unwrap();
        assert!(pis.iter().all(Permutation::is_identity));
        assert!(pi_algorithm(&p(&[1]), &f(&[-1])).is_err());
    }

    #[test]
    fn chi_endpoints() {
        let lambda = p(&[1, 1]);
        let phi = f(&[1, 2]);
        let chi = chi_flags(&lambda, &phi).unwrap();
        assert_eq!(chi[0], phi);
        assert_eq!(chi[1], f(&[0, 2]));
        assert_eq!(chi[2], psi_flag(&lambda, &phi).unwrap());
    }

    #[test]
    fn unique_nu_fixtures() {
        let lambda = p(&[7, 4, 2, 2, 1]);
        let nu = unique_nu(&lambda, &f(&[-1, 0, 1, 2, 4]), &p(&[5, 4, 2, 1, 1])).unwrap();
        assert_eq!(nu, Some(p(&[7, 4, 2, 1, 1])));
        let nu = unique_nu(&lambda, &f(&[-2, -1, 1, 2, 3]), &p(&[4, 2, 2, 1])).unwrap();
        assert_eq!(nu, Some(p(&[7, 4, 2, 1])));
        assert_eq!(unique_nu(&p(&[1]), &f(&[0]), &Partition::empty()).unwrap(), None);
        assert!(unique_nu(&p(&[1]), &f(&[0]), &p(&[2])).is_err());
    }

    #[test]
    fn j_plus_examples() {
        assert_eq!(lists(&j_plus(&p(&[2]), &f(&[1]), &p(&[1])).unwrap()), vec![(vec![(1, 2)], 1)]);
        assert_eq!(lists(&j_plus(&p(&[1, 1]), &f(&[1, 2]), &p(&[1])).unwrap()), vec![(vec![(2, 0)], 1)]);
        assert_eq!(lists(&j_plus(&p(&[1]), &f(&[1]), &p(&[1])).unwrap()), vec![(vec![], 1)]);
    }

    #[test]
    fn j_minus_examples() {
        assert_eq!(lists(&j_minus(&p(&[1, 1]), &f(&[-2, -1]), &p(&[1])).unwrap()), vec![(vec![(-1, 0)], 1)]);
        assert_eq!(lists(&j_minus(&p(&[1]), &f(&[-1]), &p(&[1])).unwrap()), vec![(vec![], 1)]);
        let column = j_minus(&p(&[1, 1]), &f(&[-2, -1]), &p(&[1, 1])).unwrap();
        assert_eq!(lists(&column), vec![(vec![], 1), (vec![(-1, 0)], 1)]);
        let below = j_minus(&p(&[2, 1]), &f(&[-1, 0]), &p(&[2, 1])).unwrap();
        assert_eq!(lists(&below), vec![(vec![], 1), (vec![(1, 0)], 1)]);
        assert_eq!(lists(&j_minus(&p(&[1]), &f(&[0]), &p(&[1])).unwrap()), vec![(vec![], 1)]);
    }

    #[test]
    fn j_coefficient_examples() {
        let s = j_coefficient(&p(&[2]), &f(&[1]), &p(&[1])).unwrap();
        assert_eq!(lists(&s), vec![(vec![(1, 2)], 1)]);
        assert_eq!(s.normalization_beta_exp, 1);
        let s = j_coefficient(&p(&[1, 1]), &f(&[-2, -1]), &p(&[1])).unwrap();
        assert_eq!(lists(&s), vec![(vec![(-1, 0)], 1)]);
        assert!(j_coefficient(&p(&[1]), &f(&[0]), &Partition::empty()).unwrap().is_zero());
        assert!(j_coefficient(&p(&[1]), &f(&[0]), &p(&[1, 1])).unwrap().is_zero());
        assert!(j_coefficient(&p(&[2, 1]), &f(&[0, 3]), &p(&[1])).is_err());
    }

    #[test]
    fn incompatible_conjugate_flag_uses_representative() {
        // ξ((3,1)) = (0,3,3) is not compatible with (2,1,1)
        let lambda = p(&[3, 1]);
        let phi = f(&[-3, 0]);
        let xi = xi_flag(&lambda, &f(&[-3, 0])).unwrap();
        assert!(!is_compatible(&lambda.conjugate(), &xi).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for rho in lambda.subpartitions() {
            let j = j_coefficient(&lambda, &phi, &rho).unwrap();
            for _ in 0..3 {
                let pt = EvaluationPoint::random(DEFAULT_PRIME, -6, 6, &mut rng).unwrap();
                let lhs = eval_graham_normalized(&j, &pt).unwrap();
                assert_eq!(lhs, j_oracle_eval(&lambda, &phi, &rho, &pt).unwrap(), "ρ = {rho}");
            }
        }
    }

    #[test]
    fn witnesses_rebuild_monomials() {
        let lambda = p(&[3, 1, 1]);
        let phi = f(&[1, 2, 3]);
        let nu = p(&[2, 1]);
        let terms = j_plus_witnessed(&lambda, &phi, &nu).unwrap();
        assert!(!terms.is_empty());
        for (m, w) in &terms {
            assert!(w.upper.respects_flag(&phi));
            assert_eq!(m.degree(), w.upper.element_count() + w.lower.element_count());
            assert!(nu.contains(&w.mu));
        }
    }

    #[test]
    fn permutation_examples() {
        let w = Permutation::from_shape_flag(&p(&[2]), &f(&[1])).unwrap();
        assert_eq!(lists(&j_of_permutation(&w, &p(&[1])).unwrap()), vec![(vec![(1, 2)], 1)]);
        let s0 = Permutation::simple(0);
        assert_eq!(lists(&j_of_permutation(&s0, &p(&[1])).unwrap()), vec![(vec![], 1)]);
        let bad = Permutation::from_word(&[2, 0, 1, -1]);
        assert!(matches!(j_of_permutation(&bad, &p(&[1])), Err(EgcError::Domain(_))));
    }

    #[test]
    fn metadata_json() {
        let lambda = p(&[7, 4, 2, 2, 1]);
        let ctx = PipelineContext::new(&lambda, &f(&[-1, 0, 1, 2, 4]), &p(&[5, 4, 2, 1, 1])).unwrap();
        let v = ctx.to_json(&ctx.coefficient().unwrap());
        assert_eq!(v["nu"], json!([7, 4, 2, 1, 1]));
        assert_eq!(v["q"], json!(2));
        assert_eq!(v["case"], json!("both"));
        assert_eq!(v["normalization_beta_exp"], json!(3));
    }

    #[test]
    fn oracle_agrees_on_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let cases = [
            (p(&[2]), f(&[1]), p(&[1])),
            (p(&[1, 1]), f(&[-2, -1]), p(&[1])),
            (p(&[1, 1]), f(&[1, 2]), p(&[1])),
            (p(&[2, 1]), f(&[-1, 1]), p(&[1])),
            (p(&[2, 2]), f(&[1, 2]), p(&[1])),
            (p(&[3, 1]), f(&[-1, 2]), p(&[2])),
            (p(&[2, 1]), f(&[-1, 0]), p(&[2, 1])),
            (p(&[2, 1]), f(&[0, 1]), p(&[2, 1])),
            (p(&[3, 2, 1]), f(&[-1, 1, 2]), p(&[2, 1])),
        ];
        for (lambda, phi, rho) in cases {
            let j = j_coefficient(&lambda, &phi, &rho).unwrap();
            for _ in 0..5 {
                let pt = EvaluationPoint::random(DEFAULT_PRIME, -5, 6, &mut rng).unwrap();
                let lhs = eval_graham_normalized(&j, &pt).unwrap();
                let rhs = j_oracle_eval(&lambda, &phi, &rho, &pt).unwrap();
                assert_eq!(lhs, rhs, "{lambda} {phi} {rho}");
            }
        }
    }

    #[test]
    fn structure_on_small_sweep() {
        for lambda in Partition::all_up_to(3) {
            for phi in Flag::all_in_range(lambda.len(), -2, 2) {
                if !is_compatible(&lambda, &phi).unwrap() {
                    continue;
                }
                for rho in lambda.subpartitions() {
                    let j = j_coefficient(&lambda, &phi, &rho).unwrap();
                    let v = structure_violations(&j, Case::of(&lambda, &phi));
                    assert!(v.is_empty(), "{lambda} {phi} {rho}: {v:?}");
                }
            }
        }
    }
}
