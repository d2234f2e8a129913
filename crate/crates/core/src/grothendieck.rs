//! Tableau-defined flagged double stable Grothendieck functions (evaluated at a
//! point), double Grothendieck polynomials from isobaric divided differences,
//! and their backstable approximations.

use std::collections::HashMap;

use crate::combinatorics::{Flag, Partition, SkewShape};
use crate::error::{arg, domain, EgcError, Result};
use crate::permutations::Permutation;
use crate::ring::{isobaric_next, EvaluationPoint, Fp, SparsePoly, MAX_VARS};
use crate::tableaux::Sign;

struct CellPlan {
    col: usize,
    lo: i64,
    hi: i64,
    left: bool,
    up: bool,
    /// Columns whose frontier value is still read by a later cell.
    live: Vec<usize>,
    /// `x_i ⊖ y_{i+c-r}` for `i` in `lo..=hi`.
    e: Vec<Fp>,
}

/// Per-cell value range outside which some factor is `0 ⊖ 0`.
fn live_range(support: (i64, i64), r: usize, c: usize) -> (i64, i64) {
    let d = c as i64 - r as i64;
    (support.0 - d.max(0), support.1 + (-d).max(0))
}

/// `Σ_T wt(T)` over semistandard set-valued tableaux of `shape` with the given flag and sign.
///
/// Variables unassigned in `pt` are zero, so only finitely many tableaux contribute.
/// When `window` is given it must contain every value that can contribute.
pub fn g_eval(
    shape: &SkewShape,
    flag: Option<&Flag>,
    sign: Sign,
    pt: &EvaluationPoint,
    window: Option<(i64, i64)>,
) -> Result<Fp> {
    if let Some(f) = flag {
        if f.len() < shape.last_occupied_row() {
            return arg(format!("flag {f} does not cover the rows of {shape}"));
        }
    }
    if shape.is_empty() {
        return Ok(pt.one());
    }
    let Some(support) = pt.support() else {
        return Ok(pt.zero());
    };
    let (slo, shi) = sign.bounds();
    let cells = shape.cells();
    let mut plans = Vec::with_capacity(cells.len());
    for &(r, c) in &cells {
        let (llo, lhi) = live_range(support, r, c);
        let lo = llo.max(slo);
        let mut hi = lhi.min(shi);
        if let Some(f) = flag {
            hi = hi.min(f.get(r));
        }
        if let Some((wlo, whi)) = window {
            if lo <= hi && (wlo > lo || whi < hi) {
                return arg(format!(
                    "window [{wlo},{whi}] is insufficient: cell ({r},{c}) needs values in [{lo},{hi}]"
                ));
            }
        }
        let d = c as i64 - r as i64;
        let e = (lo..=hi).map(|i| pt.xy(i, i + d)).collect::<Result<Vec<_>>>()?;
        let inner_r = shape.inner().part(r);
        let mut live: Vec<usize> = (inner_r + 1..c).collect();
        live.extend((c..=shape.outer().part(r)).filter(|&j| r > 1 && shape.contains_cell(r - 1, j)));
        plans.push(CellPlan {
            col: c,
            lo,
            hi,
            left: c > 1 && shape.contains_cell(r, c - 1),
            up: r > 1 && shape.contains_cell(r - 1, c),
            live,
            e,
        });
    }
    let mut dp = Dp { plans, beta: pt.beta, one: pt.one(), memo: HashMap::new() };
    let frontier = vec![None; shape.outer().part(1) + 2];
    Ok(dp.sum(0, &frontier))
}

struct Dp {
    plans: Vec<CellPlan>,
    beta: Fp,
    one: Fp,
    memo: HashMap<(usize, Vec<Option<i64>>), Fp>,
}

impl Dp {
    fn sum(&mut self, k: usize, frontier: &[Option<i64>]) -> Fp {
        if k == self.plans.len() {
            return self.one;
        }
        let plan = &self.plans[k];
        let mut key_front = vec![None; frontier.len()];
        for &j in &plan.live {
            key_front[j] = frontier[j];
        }
        let key = (k, key_front);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut a = plan.lo;
        if plan.left {
            a = a.max(frontier[plan.col - 1].expect("left neighbour filled"));
        }
        if plan.up {
            a = a.max(frontier[plan.col].expect("upper neighbour filled") + 1);
        }
        let (lo, hi, col, beta) = (plan.lo, plan.hi, plan.col, self.beta);
        let e: Vec<Fp> = if a <= hi { plan.e[(a - lo) as usize..].to_vec() } else { Vec::new() };
        let mut total = Fp::zero(self.one.modulus());
        // sets with minimum ≥ a and maximum M contribute e_M ∏_{a ≤ i < M} (1 + β e_i)
        let mut prefix = self.one;
        let mut child = frontier.to_vec();
        for (t, &em) in e.iter().enumerate() {
            let term = em * prefix;
            if !term.is_zero() {
                child[col] = Some(a + t as i64);
                total += term * self.sum(k + 1, &child);
            }
            prefix *= self.one + beta * em;
        }
        self.memo.insert(key, total);
        total
    }
}

/// Brute-force counterpart of [`g_eval`] through explicit enumeration.
pub fn g_eval_enumerated(
    shape: &SkewShape,
    flag: Option<&Flag>,
    sign: Sign,
    pt: &EvaluationPoint,
    window: (i64, i64),
) -> Result<Fp> {
    let spec = crate::tableaux::EnumSpec::new(shape.clone(), flag.cloned(), sign, window)?;
    let mut acc = pt.zero();
    for t in crate::tableaux::enumerate(&spec)? {
        acc += crate::tableaux::weight_eval(&t, pt)?;
    }
    Ok(acc)
}

/// `w₀` of `S_n` acting on `1..=n`.
pub fn longest(n: usize) -> Permutation {
    let n = n as i64;
    Permutation::from_oneline(1, &(1..=n).rev().collect::<Vec<_>>()).expect("reversal is a permutation")
}

/// Every reduced word of `w`.
pub fn all_reduced_words(w: &Permutation) -> Vec<Vec<i64>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for d in w.descents() {
        for mut word in all_reduced_words(&w.times_simple(d)) {
            word.push(d);
            out.push(word);
        }
    }
    out
}

fn linear_xy(pt: &EvaluationPoint, j: i64) -> Result<(Fp, Fp)> {
    let yj = pt.y(j);
    let inv = (pt.one() + pt.beta * yj)
        .inv()
        .map_err(|_| EgcError::Evaluation(format!("1 + β·y_{j} vanishes")))?;
    Ok((inv, -(yj * inv)))
}

/// `π̄_{i_1} ∘ … ∘ π̄_{i_k}` applied to `f`, with letters shifted by `offset`.
pub fn apply_isobaric_word(f: &SparsePoly, word: &[i64], offset: i64, beta: Fp) -> Result<SparsePoly> {
    let mut g = f.clone();
    for &i in word.iter().rev() {
        let local = i - offset;
        if local < 1 {
            return arg(format!("operator index {i} below the variable range"));
        }
        g = isobaric_next(&g, local as usize, beta)?;
    }
    Ok(g)
}

fn check_support(w: &Permutation, n: usize) -> Result<()> {
    if let Some((lo, hi)) = w.window() {
        if lo < 1 || hi > n as i64 {
            return arg(format!("{w} is not supported in 1..{n}"));
        }
    }
    Ok(())
}

/// `∏_{i+j ≤ n} (x_i ⊖ y_j)` with y and β taken from `pt`.
fn top_product(n: usize, pt: &EvaluationPoint) -> Result<SparsePoly> {
    let mut f = SparsePoly::constant(n, pt.one())?;
    for i in 1..n {
        for j in 1..=n - i {
            let (a, b) = linear_xy(pt, j as i64)?;
            f = f.mul_linear(i, a, b);
        }
    }
    Ok(f)
}

/// Double Grothendieck polynomial of `w` in `x_1..x_n`, using the given reduced word of `w⁻¹w₀`.
pub fn grothendieck_poly_with_word(
    w: &Permutation,
    n: usize,
    word: &[i64],
    pt: &EvaluationPoint,
) -> Result<SparsePoly> {
    check_support(w, n)?;
    let v = w.inverse().compose(&longest(n));
    if Permutation::from_word(word) != v || word.len() != v.length() {
        return arg(format!("{word:?} is not a reduced word for {v}"));
    }
    apply_isobaric_word(&top_product(n, pt)?, word, 0, pt.beta)
}

/// Double Grothendieck polynomial of `w ∈ S_n` in `x_1..x_n`, y and β evaluated at `pt`.
pub fn grothendieck_poly(w: &Permutation, n: usize, pt: &EvaluationPoint) -> Result<SparsePoly> {
    check_support(w, n)?;
    let v = w.inverse().compose(&longest(n));
    grothendieck_poly_with_word(w, n, &v.reduced_word(), pt)
}

/// Dominant permutation whose code is `lambda`.
pub fn dominant(lambda: &Partition) -> Permutation {
    let code = lambda.parts().iter().enumerate().map(|(i, &c)| (i as i64 + 1, c)).collect();
    Permutation::from_code(&code)
}

fn inversions(w: &Permutation) -> Vec<(i64, i64)> {
    let Some((lo, hi)) = w.window() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in a + 1..=hi {
            if w.apply(a) > w.apply(b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Smallest dominant `u` with `ℓ(w⁻¹u) = ℓ(u) − ℓ(w)`; ties broken by lexicographic code.
pub fn dominant_above(w: &Permutation) -> Result<Permutation> {
    let Some((lo, hi)) = w.window() else {
        return Ok(Permutation::identity());
    };
    if lo < 1 {
        return arg(format!("{w} is not supported on positive integers"));
    }
    let n = hi as usize;
    // right weak order compares inverted value pairs
    let inv = inversions(&w.inverse());
    let stair = n * (n - 1) / 2;
    for size in w.length()..=stair {
        for lambda in Partition::all_of_size(size) {
            let fits = lambda.len() < n && lambda.parts().iter().enumerate().all(|(i, &c)| c < n - i);
            if !fits {
                continue;
            }
            let u = dominant(&lambda);
            let ui = u.inverse();
            if inv.iter().all(|&(a, b)| ui.apply(a) > ui.apply(b)) {
                return Ok(u);
            }
        }
    }
    Err(EgcError::Internal(format!("no dominant permutation above {w}")))
}

/// Evaluates `∏_{cells} (x_i ⊖ y_j)` then `π_word`, keeping symbolic only the variables the word touches.
fn eval_from_product(
    cells: &[(usize, usize)],
    word: &[i64],
    pt: &EvaluationPoint,
) -> Result<Fp> {
    let Some(&lo) = word.iter().min() else {
        let mut acc = pt.one();
        for &(i, j) in cells {
            acc *= pt.xy(i as i64, j as i64)?;
        }
        return Ok(acc);
    };
    let hi = word.iter().max().unwrap() + 1;
    let m = (hi - lo + 1) as usize;
    if m > MAX_VARS {
        return arg(format!("operator word touches {m} variables, limit is {MAX_VARS}"));
    }
    let offset = lo - 1;
    let mut f = SparsePoly::constant(m, pt.one())?;
    for &(i, j) in cells {
        let i = i as i64;
        if (lo..=hi).contains(&i) {
            let (a, b) = linear_xy(pt, j as i64)?;
            f = f.mul_linear((i - offset) as usize, a, b);
        } else {
            f = f.scale(pt.xy(i, j as i64)?);
        }
    }
    let g = apply_isobaric_word(&f, word, offset, pt.beta)?;
    let xs: Vec<Fp> = (lo..=hi).map(|k| pt.x(k)).collect();
    Ok(g.eval(&xs))
}

/// `𝔊_w` at `pt` for `w` supported on positive integers, started from a dominant permutation.
pub fn grothendieck_eval(w: &Permutation, pt: &EvaluationPoint) -> Result<Fp> {
    let u = dominant_above(w)?;
    let v = w.inverse().compose(&u);
    debug_assert_eq!(v.length() + w.length(), u.length());
    let lambda = u.shape();
    eval_from_product(&lambda.cells(), &v.reduced_word(), pt)
}

/// `𝔊_w` at `pt` through the longest element of `S_n`.
pub fn grothendieck_eval_longest(w: &Permutation, n: usize, pt: &EvaluationPoint) -> Result<Fp> {
    check_support(w, n)?;
    let v = w.inverse().compose(&longest(n));
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
    eval_from_product(&cells, &v.reduced_word(), pt)
}

/// Smallest `p` with `ι^p(w)` supported on positive integers.
pub fn min_shift(w: &Permutation) -> i64 {
    w.window().map_or(0, |(lo, _)| (1 - lo).max(0))
}

/// `γ^{-p} 𝔊_{ι^p(w)}` evaluated at `pt`.
pub fn backstable_approx(w: &Permutation, p: i64, pt: &EvaluationPoint) -> Result<Fp> {
    if p < min_shift(w) {
        return arg(format!("shift {p} too small: {w} needs at least {}", min_shift(w)));
    }
    grothendieck_eval(&w.iota(p), &pt.shifted(-p))
}

/// Compares the backstable approximation with the flagged tableau function of `(λ(w), φ(w))`.
pub fn gvex_check(w: &Permutation, pt: &EvaluationPoint, p: i64) -> Result<bool> {
    if !w.is_vexillary() {
        return domain(format!("{w} is not vexillary"));
    }
    let csf = w.code_shape_flag()?;
    let lhs = backstable_approx(w, p, pt)?;
    let rhs = g_eval(&SkewShape::straight(csf.shape), Some(&csf.flag), Sign::Any, pt, None)?;
    Ok(lhs == rhs)
}

/// Shift sufficient for the point: the smallest `p` such that every variable assigned
/// in `pt` lands on a positive index and `ι^p(w)` is supported on positive integers.
pub fn shift_for(w: &Permutation, pt: &EvaluationPoint) -> i64 {
    let from_point = pt.support().map_or(0, |(lo, _)| (1 - lo).max(0));
    from_point.max(min_shift(w))
}

/// Least `p ≥ min_shift(w)` from which the approximations agree through `p_max`.
pub fn stabilization_p0(w: &Permutation, pts: &[EvaluationPoint], p_max: i64) -> Result<Option<i64>> {
    let p_min = min_shift(w);
    if p_max < p_min {
        return Ok(None);
    }
    let values = (p_min..=p_max)
        .map(|p| pts.iter().map(|pt| backstable_approx(w, p, pt)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let last = values.last().unwrap();
    let mut p0 = p_max;
    for (k, v) in values.iter().enumerate().rev() {
        if v != last {
            break;
        }
        p0 = p_min + k as i64;
    }
    Ok(Some(p0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutations::all_in_window;
    use crate::ring::{divided_difference, isobaric, DEFAULT_PRIME};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn f(v: &[i64]) -> Flag {
        Flag::new(v.to_vec()).unwrap()
    }

    fn points(seed: u64, lo: i64, hi: i64, k: usize) -> Vec<EvaluationPoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..k).map(|_| EvaluationPoint::random(DEFAULT_PRIME, lo, hi, &mut rng).unwrap()).collect()
    }

    #[test]
    fn empty_shape_is_one() {
        let pt = &points(1, -2, 2, 1)[0];
        let s = SkewShape::straight(Partition::empty());
        assert_eq!(g_eval(&s, None, Sign::Any, pt, None).unwrap(), pt.one());
    }

    #[test]
    fn dp_matches_enumeration() {
        let shapes = [
            SkewShape::straight(p(&[2, 1])),
            SkewShape::straight(p(&[1, 1, 1])),
            SkewShape::straight(p(&[2, 2])),
            SkewShape::new(p(&[3, 2, 1]), p(&[2, 1])).unwrap(),
            SkewShape::new(p(&[2, 2, 1]), p(&[1])).unwrap(),
            SkewShape::new(p(&[3, 1]), p(&[2])).unwrap(),
        ];
        for (k, pt) in points(3, 0, 1, 3).iter().enumerate() {
            for s in &shapes {
                let n = s.outer().len();
                let flags: Vec<Option<Flag>> =
                    vec![None, Some(Flag::new(vec![2; n]).unwrap()), Some(Flag::new((0..n as i64).collect()).unwrap())];
                for fl in &flags {
                    for sign in [Sign::Any, Sign::Positive, Sign::NonPositive] {
                        let w = (1 - s.outer().part(1) as i64, n as i64);
                        let dp = g_eval(s, fl.as_ref(), sign, pt, None).unwrap();
                        let bf = g_eval_enumerated(s, fl.as_ref(), sign, pt, w).unwrap();
                        assert_eq!(dp, bf, "point {k} shape {s} flag {fl:?} {sign:?}");
                        assert_eq!(g_eval(s, fl.as_ref(), sign, pt, Some(w)).unwrap(), dp);
                    }
                }
            }
        }
    }

    #[test]
    fn insufficient_window_rejected() {
        let pt = &points(5, -2, 2, 1)[0];
        let s = SkewShape::straight(p(&[2]));
        let err = g_eval(&s, None, Sign::Any, pt, Some((0, 2))).unwrap_err();
        assert!(matches!(err, EgcError::Argument(_)));
    }

    #[test]
    fn lower_diagonal_single_column() {
        // shape (1,1)/(1), flag (1,2), positive, x -> y: y₂ ⊖ y₀
        let s = SkewShape::new(p(&[1, 1]), p(&[1])).unwrap();
        for pt in points(7, -2, 3, 5) {
            let q = pt.x_to_y();
            let got = g_eval(&s, Some(&f(&[1, 2])), Sign::Positive, &q, None).unwrap();
            let a = q.yy(1, 0).unwrap();
            let b = q.yy(2, 1).unwrap();
            assert_eq!(got, a + b + q.beta * a * b);
            assert_eq!(got, q.yy(2, 0).unwrap());
        }
    }

    #[test]
    fn diagonal_factorization_example() {
        let lam = p(&[2, 1, 1]);
        let phi = f(&[2, 2, 3]);
        let s = SkewShape::new(lam.clone(), p(&[1])).unwrap();
        let (up, down) = crate::combinatorics::diagonal_split(&s).unwrap();
        assert_eq!(up.inner(), &p(&[1, 1, 1]));
        assert_eq!(down.inner(), &p(&[2]));
        for pt in points(11, -2, 4, 5) {
            let pt = pt.x_positive();
            let g = |sh: &SkewShape| g_eval(sh, Some(&phi), Sign::Positive, &pt, None).unwrap();
            assert_eq!(g(&s), g(&up) * g(&down));
        }
    }

    #[test]
    fn operator_relations_on_random_polynomials() {
        type Op = fn(&SparsePoly, usize, Fp) -> Result<SparsePoly>;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let beta = Fp::new(123_456_789, DEFAULT_PRIME);
        for _ in 0..30 {
            let g = SparsePoly::random(4, DEFAULT_PRIME, 5, 3, &mut rng).unwrap();
            let d1 = divided_difference(&g, 1).unwrap();
            assert!(divided_difference(&d1, 1).unwrap().is_zero());
            for (op, sq) in [(isobaric as Op, beta), (isobaric_next as Op, -beta)] {
                let p1 = op(&g, 1, beta).unwrap();
                assert_eq!(op(&p1, 1, beta).unwrap(), p1.scale(sq));
                let a = op(&op(&op(&g, 2, beta).unwrap(), 1, beta).unwrap(), 2, beta).unwrap();
                let b = op(&op(&op(&g, 1, beta).unwrap(), 2, beta).unwrap(), 1, beta).unwrap();
                assert_eq!(a, b);
                let c = op(&op(&g, 1, beta).unwrap(), 3, beta).unwrap();
                let d = op(&op(&g, 3, beta).unwrap(), 1, beta).unwrap();
                assert_eq!(c, d);
            }
        }
    }

    #[test]
    fn longest_element_is_top_product() {
        let pt = &points(2, 1, 4, 1)[0];
        let w0 = longest(3);
        let g = grothendieck_poly(&w0, 3, pt).unwrap();
        let xs = [pt.x(1), pt.x(2), pt.x(3)];
        let expect = pt.xy(1, 1).unwrap() * pt.xy(1, 2).unwrap() * pt.xy(2, 1).unwrap();
        assert_eq!(g.eval(&xs), expect);
    }

    #[test]
    fn simple_reflection_is_single_factor_and_stable() {
        let pt = &points(4, 1, 5, 1)[0];
        let s1 = Permutation::simple(1);
        for n in 2..=5 {
            let g = grothendieck_poly(&s1, n, pt).unwrap();
            let xs: Vec<Fp> = (1..=n as i64).map(|k| pt.x(k)).collect();
            assert_eq!(g.eval(&xs), pt.xy(1, 1).unwrap(), "n = {n}");
        }
        let g3 = grothendieck_poly(&s1, 3, pt).unwrap();
        let g4 = grothendieck_poly(&s1, 4, pt).unwrap();
        assert_eq!(g3.widen(4).unwrap(), g4);
    }

    #[test]
    fn beta_zero_recovers_schubert_top_class() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..5 {
            let pt = EvaluationPoint::random_with_beta(DEFAULT_PRIME, Fp::zero(DEFAULT_PRIME), 1, 3, &mut rng).unwrap();
            let g = grothendieck_poly(&longest(3), 3, &pt).unwrap();
            let xs = [pt.x(1), pt.x(2), pt.x(3)];
            let expect = (pt.x(1) - pt.y(1)) * (pt.x(1) - pt.y(2)) * (pt.x(2) - pt.y(1));
            assert_eq!(g.eval(&xs), expect);
        }
    }

    #[test]
    fn reduced_word_independence_s4() {
        let pt = &points(6, 1, 4, 1)[0];
        let w0 = longest(4);
        for w in all_in_window(1, 4) {
            let v = w.inverse().compose(&w0);
            let words = all_reduced_words(&v);
            let first = grothendieck_poly_with_word(&w, 4, &words[0], pt).unwrap();
            for word in &words[1..] {
                assert_eq!(grothendieck_poly_with_word(&w, 4, word, pt).unwrap(), first, "{w} {word:?}");
            }
        }
        assert_eq!(all_reduced_words(&w0).len(), 16);
    }

    #[test]
    fn dominant_route_matches_longest_route() {
        for pt in points(12, 1, 5, 2) {
            for n in [4usize, 5] {
                for w in all_in_window(1, n as i64) {
                    let a = grothendieck_eval(&w, &pt).unwrap();
                    let b = grothendieck_eval_longest(&w, n, &pt).unwrap();
                    assert_eq!(a, b, "{w}");
                }
            }
        }
    }

    #[test]
    fn dominant_above_is_dominant_and_length_additive() {
        for w in all_in_window(1, 5) {
            let u = dominant_above(&w).unwrap();
            let v = w.inverse().compose(&u);
            assert_eq!(v.length() + w.length(), u.length());
            let code: Vec<usize> = (1..=6).map(|k| u.code().get(&k).copied().unwrap_or(0)).collect();
            assert!(code.windows(2).all(|c| c[0] >= c[1]), "{u}");
        }
    }

    #[test]
    fn backstable_examples() {
        let pt = &points(13, -2, 2, 1)[0];
        let s0 = Permutation::simple(0);
        assert!(backstable_approx(&s0, 0, pt).is_err());
        assert_eq!(backstable_approx(&s0, 1, pt).unwrap(), pt.xy(0, 0).unwrap());
        let s2 = Permutation::simple(2);
        assert_eq!(backstable_approx(&s2, 0, pt).unwrap(), grothendieck_eval(&s2, pt).unwrap());
    }

    #[test]
    fn gvex_small_cases() {
        let s0 = Permutation::simple(0);
        let non_vex = Permutation::from_word(&[2, 0, 1, -1]);
        for pt in points(21, -2, 2, 5) {
            let sp = shift_for(&s0, &pt);
            assert!(gvex_check(&s0, &pt, sp).unwrap());
            assert!(matches!(gvex_check(&non_vex, &pt, 5), Err(EgcError::Domain(_))));
        }
    }

    #[test]
    fn gvex_worked_permutation() {
        let w = Permutation::from_oneline(1, &[3, 4, 5, 1, 6, 2]).unwrap();
        for pt in points(22, -4, 6, 5) {
            assert!(gvex_check(&w, &pt, shift_for(&w, &pt)).unwrap());
        }
    }

    #[test]
    fn kgrassmannian_small() {
        for lam in Partition::all_up_to(3) {
            let w = Permutation::from_partition(&lam);
            for pt in points(31, -2, 2, 3) {
                let lhs = g_eval(&SkewShape::straight(lam.clone()), None, Sign::NonPositive, &pt, None).unwrap();
                let rhs = backstable_approx(&w, shift_for(&w, &pt), &pt).unwrap();
                assert_eq!(lhs, rhs, "{lam}");
            }
        }
    }

    #[test]
    fn flag_symmetry_swaps() {
        // flag (1,4) omits 2 and 3: symmetric in x₂, x₃, x₄
        let s = SkewShape::straight(p(&[2, 2]));
        let phi = f(&[1, 4]);
        for pt in points(41, -1, 5, 5) {
            let base = pt.x_positive();
            let g0 = g_eval(&s, Some(&phi), Sign::Positive, &base, None).unwrap();
            for (i, j) in [(2, 3), (3, 4), (2, 4)] {
                let g1 = g_eval(&s, Some(&phi), Sign::Positive, &base.swap_x(i, j), None).unwrap();
                assert_eq!(g0, g1);
            }
            let g1 = g_eval(&s, Some(&phi), Sign::Positive, &base.swap_x(1, 2), None).unwrap();
            assert_ne!(g0, g1);
        }
    }
}
