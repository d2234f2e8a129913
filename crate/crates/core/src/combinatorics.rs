//! Partitions, flags, skew shapes and the flag-derived sequences used by the pipeline.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{arg, domain, EgcError, Result};

/// Weakly decreasing positive parts, stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return arg(format!("partition parts must be positive: {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return arg(format!("partition parts must be weakly decreasing: {parts:?}"));
        }
        Ok(Partition(parts))
    }

    /// Accepts trailing zeros and drops them.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `r` (1-based), zero beyond the length.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return 0;
        }
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        conjugate(self)
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && self.part(r) >= c
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        SkewShape::straight(self.clone()).cells()
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of size at most `n`, by size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn rec(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::from_padded(cur.clone()).expect("bounded parts"));
                return;
            }
            for p in 0..=outer[i].min(max) {
                cur.push(p);
                rec(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = EgcError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for Partition {
    type Err = EgcError;
    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_list::<usize>(s)?;
        Partition::from_padded(parts)
    }
}

/// Weakly increasing integer row bounds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Flag(Vec<i64>);

impl Flag {
    pub fn new(bounds: Vec<i64>) -> Result<Self> {
        if bounds.windows(2).any(|w| w[0] > w[1]) {
            return arg(format!("flag must be weakly increasing: {bounds:?}"));
        }
        Ok(Flag(bounds))
    }

    pub fn bounds(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Bound of row `r` (1-based).
    pub fn get(&self, r: usize) -> i64 {
        self.0[r - 1]
    }

    pub fn truncated(&self, n: usize) -> Flag {
        Flag(self.0[..n.min(self.0.len())].to_vec())
    }

    pub fn max(&self) -> Option<i64> {
        self.0.last().copied()
    }

    pub fn min(&self) -> Option<i64> {
        self.0.first().copied()
    }

    /// Every weakly increasing flag of length `len` with entries in `[lo, hi]`.
    pub fn all_in_range(len: usize, lo: i64, hi: i64) -> Vec<Flag> {
        fn rec(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Flag>) {
            if cur.len() == len {
                out.push(Flag(cur.clone()));
                return;
            }
            let start = cur.last().copied().unwrap_or(lo);
            for v in start..=hi {
                cur.push(v);
                rec(len, lo, hi, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(len, lo, hi, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Flag> for Vec<i64> {
    fn from(f: Flag) -> Self {
        f.0
    }
}

impl TryFrom<Vec<i64>> for Flag {
    type Error = EgcError;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Flag::new(v)
    }
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", join(&self.0))
    }
}

impl FromStr for Flag {
    type Err = EgcError;
    fn from_str(s: &str) -> Result<Self> {
        Flag::new(parse_list::<i64>(s)?)
    }
}

/// Nonnegative, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSeq(Vec<i64>);

impl DeltaSeq {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, r: usize) -> i64 {
        self.0[r - 1]
    }
}

/// Cells of `outer` not in `inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Structural facts about a skew shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewProps {
    pub has_diagonal_cell: bool,
    pub is_disconnected: bool,
    pub rows_occupied: BTreeSet<usize>,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return arg(format!("inner {inner} is not contained in outer {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape { outer, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn contains_cell(&self, r: usize, c: usize) -> bool {
        self.outer.has_cell(r, c) && !self.inner.has_cell(r, c)
    }

    /// Row-major list of cells.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size());
        for r in 1..=self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                v.push((r, c));
            }
        }
        v
    }

    /// Column range `(first, last)` of row `r`, if nonempty.
    pub fn row_range(&self, r: usize) -> Option<(usize, usize)> {
        let (a, b) = (self.inner.part(r) + 1, self.outer.part(r));
        (a <= b).then_some((a, b))
    }

    pub fn last_occupied_row(&self) -> usize {
        (1..=self.outer.len()).rev().find(|&r| self.row_range(r).is_some()).unwrap_or(0)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape { outer: self.outer.conjugate(), inner: self.inner.conjugate() }
    }

    pub fn props(&self) -> SkewProps {
        skew_props(self)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

pub fn conjugate(lambda: &Partition) -> Partition {
    let first = lambda.part(1);
    Partition((1..=first).map(|c| lambda.0.iter().filter(|&&p| p >= c).count()).collect())
}

pub fn is_compatible(lambda: &Partition, phi: &Flag) -> Result<bool> {
    if lambda.len() != phi.len() {
        return arg(format!("flag length {} differs from partition length {}", phi.len(), lambda.len()));
    }
    Ok((1..lambda.len()).all(|i| {
        phi.get(i + 1) - phi.get(i) <= lambda.part(i) as i64 - lambda.part(i + 1) as i64 + 1
    }))
}

fn require_compatible(lambda: &Partition, phi: &Flag) -> Result<()> {
    if is_compatible(lambda, phi)? {
        Ok(())
    } else {
        arg(format!("{lambda} and {phi} are not compatible"))
    }
}

/// Returns `(phi_minus, phi_plus)`.
pub fn flag_split(phi: &Flag) -> (Flag, Flag) {
    (
        Flag(phi.0.iter().map(|&v| v.min(0)).collect()),
        Flag(phi.0.iter().map(|&v| v.max(0)).collect()),
    )
}

pub fn psi_flag(lambda: &Partition, phi: &Flag) -> Result<Flag> {
    require_compatible(lambda, phi)?;
    let v: Vec<i64> = (1..=lambda.len())
        .map(|i| (i as i64 - lambda.part(i) as i64).min(phi.get(i)))
        .collect();
    Flag::new(v).map_err(|e| EgcError::Internal(format!("psi not monotone: {e}")))
}

pub fn delta_seq(lambda: &Partition, phi: &Flag) -> Result<DeltaSeq> {
    let psi = psi_flag(lambda, phi)?;
    let d: Vec<i64> = phi.0.iter().zip(&psi.0).map(|(a, b)| a - b).collect();
    if d.iter().any(|&x| x < 0) || d.windows(2).any(|w| w[0] < w[1]) {
        return Err(EgcError::Internal(format!("delta sequence {d:?} not weakly decreasing")));
    }
    Ok(DeltaSeq(d))
}

/// Flag for the conjugate of `nu` with entries `-phi_minus[nu'_i]`.
pub fn xi_flag(nu: &Partition, phi_minus: &Flag) -> Result<Flag> {
    if phi_minus.0.iter().any(|&v| v > 0) {
        return arg(format!("flag {phi_minus} has a positive entry"));
    }
    if phi_minus.len() < nu.len() {
        return arg(format!("flag {phi_minus} shorter than {nu}"));
    }
    let conj = nu.conjugate();
    let raw: Vec<i64> = conj.0.iter().map(|&len| -phi_minus.get(len)).collect();
    Flag::new(raw)
}

pub fn skew_props(shape: &SkewShape) -> SkewProps {
    let cells = shape.cells();
    let has_diagonal_cell = cells.iter().any(|&(r, c)| r == c);
    let is_disconnected = cells
        .iter()
        .all(|&(r, c)| !shape.contains_cell(r, c + 1) && !shape.contains_cell(r + 1, c));
    let rows_occupied = cells.iter().map(|&(r, _)| r).collect();
    SkewProps { has_diagonal_cell, is_disconnected, rows_occupied }
}

/// Splits a diagonal-free skew shape into its strictly-upper (`c > r`) and strictly-lower parts.
pub fn diagonal_split(shape: &SkewShape) -> Result<(SkewShape, SkewShape)> {
    if skew_props(shape).has_diagonal_cell {
        return domain(format!("{shape} has a cell on the diagonal"));
    }
    let (lambda, mu) = (&shape.outer, &shape.inner);
    let n = lambda.len();
    let mu_up: Vec<usize> = (1..=n).map(|r| mu.part(r).max(lambda.part(r).min(r - 1))).collect();
    let mu_down: Vec<usize> =
        (1..=n).map(|r| if lambda.part(r) > r { lambda.part(r) } else { mu.part(r) }).collect();
    let up = SkewShape::new(lambda.clone(), Partition::from_padded(mu_up)?)?;
    let down = SkewShape::new(lambda.clone(), Partition::from_padded(mu_down)?)?;
    Ok((up, down))
}

pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> bool {
    if lambda.size() != mu.size() {
        return false;
    }
    let n = lambda.len().max(mu.len());
    let (mut a, mut b) = (0, 0);
    for i in 1..=n {
        a += lambda.part(i);
        b += mu.part(i);
        if a > b {
            return false;
        }
    }
    true
}

/// Largest `q` with `(q,q)` a cell of `lambda`, or 0.
pub fn durfee(lambda: &Partition) -> usize {
    (1..=lambda.len()).take_while(|&r| lambda.part(r) >= r).last().unwrap_or(0)
}

/// Effective per-cell upper bounds implied by a flag under column strictness.
pub fn flag_caps(lambda: &Partition, phi: &Flag) -> Result<Vec<Vec<i64>>> {
    if phi.len() < lambda.len() {
        return arg(format!("flag {phi} shorter than {lambda}"));
    }
    let mut caps: Vec<Vec<i64>> = (1..=lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    for r in (1..=lambda.len()).rev() {
        for c in 1..=lambda.part(r) {
            let mut cap = phi.get(r);
            if lambda.has_cell(r + 1, c) {
                cap = cap.min(caps[r][c - 1] - 1);
            }
            caps[r - 1][c - 1] = cap;
        }
    }
    Ok(caps)
}

/// A compatible flag equivalent to `phi`, preferring equal bounds on equal parts.
/// Rows whose bound is pinned by the caps keep it; the others may match the row
/// below or sit one lower.
pub fn compatible_flag(lambda: &Partition, phi: &Flag) -> Result<Flag> {
    let caps = flag_caps(lambda, phi)?;
    let n = lambda.len();
    let phi = phi.truncated(n);
    // free[r-1] = lowest admissible bound when row r is not pinned
    let free: Vec<Option<i64>> = (1..=n)
        .map(|r| {
            if r < n && lambda.part(r) == lambda.part(r + 1) {
                let m = caps[r][lambda.part(r) - 1] - 1;
                (phi.get(r) >= m).then_some(m)
            } else {
                None
            }
        })
        .collect();
    fn rec(r: usize, lambda: &Partition, phi: &Flag, free: &[Option<i64>], out: &mut Vec<i64>) -> bool {
        if r == 0 {
            return true;
        }
        let below = out.last().copied();
        let options: Vec<i64> = match (free[r - 1], below) {
            (Some(m), Some(b)) => [b, b - 1].into_iter().filter(|&v| v >= m).collect(),
            _ => vec![phi.get(r)],
        };
        for v in options {
            if let Some(b) = below {
                let slack = lambda.part(r) as i64 - lambda.part(r + 1) as i64 + 1;
                if v > b || b - v > slack {
                    continue;
                }
            }
            out.push(v);
            if rec(r - 1, lambda, phi, free, out) {
                return true;
            }
            out.pop();
        }
        false
    }
    let mut rev = Vec::with_capacity(n);
    if !rec(n, lambda, &phi, &free, &mut rev) {
        return domain(format!("no compatible flag is equivalent to {phi} for {lambda}"));
    }
    rev.reverse();
    let out = Flag::new(rev)?;
    if flag_caps(lambda, &out)? != caps {
        return Err(EgcError::Internal(format!("{out} is not equivalent to {phi}")));
    }
    Ok(out)
}

/// True iff both flags give the same flagged tableau set for `lambda`.
pub fn flags_equivalent(lambda: &Partition, a: &Flag, b: &Flag) -> Result<bool> {
    Ok(flag_caps(lambda, a)? == flag_caps(lambda, b)?)
}

pub(crate) fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Parses "a,b,c"; the empty string is the empty list.
pub fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<T>().map_err(|_| EgcError::Argument(format!("cannot parse {t:?} in {s:?}"))))
        .collect()
}
