//! Flagged set-valued semistandard tableaux, their weights, the sign split, and
//! row-strict-decreasing tableaux.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{Flag, Partition, SkewShape};
use crate::error::{arg, domain, EgcError, Result};
use crate::ring::{EvaluationPoint, Fp};

/// Restriction on the sign of the values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    NonPositive,
    Any,
}

impl Sign {
    pub fn bounds(self) -> (i64, i64) {
        match self {
            Sign::Positive => (1, i64::MAX),
            Sign::NonPositive => (i64::MIN, 0),
            Sign::Any => (i64::MIN, i64::MAX),
        }
    }
}

/// A skew-shaped filling by nonempty finite sets. Entries follow the row-major cell order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Filling {
    shape: SkewShape,
    entries: Vec<Vec<i64>>,
}

/// Semistandard set-valued tableau.
pub type SetValuedTableau = Filling;

impl Filling {
    fn raw(shape: SkewShape, entries: Vec<Vec<i64>>) -> Result<Self> {
        if entries.len() != shape.size() {
            return arg(format!("{} entries for a shape with {} cells", entries.len(), shape.size()));
        }
        for e in &entries {
            if e.is_empty() || e.windows(2).any(|w| w[0] >= w[1]) {
                return arg(format!("entry {e:?} is not a nonempty increasing set"));
            }
        }
        Ok(Filling { shape, entries })
    }

    /// Builds a semistandard tableau; entries in row-major cell order.
    pub fn new(shape: SkewShape, entries: Vec<Vec<i64>>) -> Result<Self> {
        let t = Self::raw(shape, entries)?;
        if !t.is_semistandard() {
            return arg(format!("{t} is not semistandard"));
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Filling { shape: SkewShape::straight(Partition::empty()), entries: Vec::new() }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `(r, c, entry)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, &[i64])> {
        self.shape.cells().into_iter().zip(self.entries.iter()).map(|((r, c), e)| (r, c, e.as_slice()))
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&[i64]> {
        if !self.shape.contains_cell(r, c) {
            return None;
        }
        let mut idx = 0;
        for rr in 1..r {
            if let Some((a, b)) = self.shape.row_range(rr) {
                idx += b - a + 1;
            }
        }
        idx += c - self.shape.inner().part(r) - 1;
        Some(&self.entries[idx])
    }

    pub fn element_count(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn is_semistandard(&self) -> bool {
        self.cells().all(|(r, c, e)| {
            let mx = *e.last().unwrap();
            let right_ok = self.get(r, c + 1).is_none_or(|n| mx <= n[0]);
            let down_ok = self.get(r + 1, c).is_none_or(|n| mx < n[0]);
            right_ok && down_ok
        })
    }

    /// Entries strictly decrease along rows and weakly decrease down columns.
    pub fn is_row_strict_decreasing(&self) -> bool {
        self.cells().all(|(r, c, e)| {
            let mn = e[0];
            let right_ok = self.get(r, c + 1).is_none_or(|n| mn > *n.last().unwrap());
            let down_ok = self.get(r + 1, c).is_none_or(|n| mn >= *n.last().unwrap());
            right_ok && down_ok
        })
    }

    pub fn respects_flag(&self, flag: &Flag) -> bool {
        self.cells().all(|(r, _, e)| r <= flag.len() && *e.last().unwrap() <= flag.get(r))
    }

    /// Every `(value, value + c - r)` pair in the filling.
    pub fn factor_pairs(&self) -> Vec<(i64, i64)> {
        self.cells()
            .flat_map(|(r, c, e)| e.iter().map(move |&i| (i, i + c as i64 - r as i64)))
            .collect()
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut rows = Vec::new();
        for r in 1..=self.shape.outer().len() {
            let mut toks: Vec<String> = (1..=self.shape.inner().part(r)).map(|_| ".".to_string()).collect();
            for c in self.shape.inner().part(r) + 1..=self.shape.outer().part(r) {
                let e = self.get(r, c).unwrap();
                toks.push(format!("{{{}}}", e.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")));
            }
            rows.push(toks.join(" "));
        }
        write!(f, "{}", rows.join(" ; "))
    }
}

impl fmt::Debug for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Filling[{self}]")
    }
}

impl Filling {
    /// Parses the text format without checking any ordering condition.
    pub fn parse_unchecked(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let (mut outer, mut inner, mut entries) = (Vec::new(), Vec::new(), Vec::new());
        for row in s.split(';') {
            let mut n_inner = 0;
            let mut n_cells = 0;
            for tok in row.split_whitespace() {
                if tok == "." || tok == "·" {
                    if n_cells > 0 {
                        return arg(format!("inner placeholder after a filled cell in {row:?}"));
                    }
                    n_inner += 1;
                    continue;
                }
                let body = tok
                    .strip_prefix('{')
                    .and_then(|t| t.strip_suffix('}'))
                    .ok_or_else(|| EgcError::Argument(format!("bad cell {tok:?}")))?;
                let vals = crate::combinatorics::parse_list::<i64>(body)?;
                entries.push(vals);
                n_cells += 1;
            }
            outer.push(n_inner + n_cells);
            inner.push(n_inner);
        }
        let shape = SkewShape::new(Partition::from_padded(outer)?, Partition::from_padded(inner)?)?;
        Self::raw(shape, entries)
    }
}

impl FromStr for Filling {
    type Err = EgcError;
    fn from_str(s: &str) -> Result<Self> {
        let t = Self::parse_unchecked(s)?;
        if !t.is_semistandard() {
            return arg(format!("{t} is not semistandard"));
        }
        Ok(t)
    }
}

/// Filling with rows strictly decreasing and columns weakly decreasing.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RowStrictDecreasingTableau(Filling);

impl RowStrictDecreasingTableau {
    pub fn new(shape: SkewShape, entries: Vec<Vec<i64>>) -> Result<Self> {
        let t = Filling::raw(shape, entries)?;
        if !t.is_row_strict_decreasing() {
            return arg(format!("{t} is not row-strict-decreasing"));
        }
        Ok(RowStrictDecreasingTableau(t))
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn shape(&self) -> &SkewShape {
        &self.0.shape
    }

    /// Column `j` entries all at least `1 - flag_j`, all nonpositive.
    pub fn respects_reverse_flag(&self, flag: &Flag) -> bool {
        self.0.cells().all(|(_, c, e)| c <= flag.len() && e[0] >= 1 - flag.get(c) && *e.last().unwrap() <= 0)
    }
}

impl fmt::Display for RowStrictDecreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn conjugate_filling(t: &Filling) -> Filling {
    let shape = t.shape.conjugate();
    let entries = shape
        .cells()
        .into_iter()
        .map(|(r, c)| {
            let mut e: Vec<i64> = t.get(c, r).expect("transposed cell").iter().map(|&i| 1 - i).collect();
            e.sort_unstable();
            e
        })
        .collect();
    Filling { shape, entries }
}

/// Conjugate, then `i -> 1 - i`.
pub fn omega1_tableau(t: &SetValuedTableau) -> RowStrictDecreasingTableau {
    RowStrictDecreasingTableau(conjugate_filling(t))
}

pub fn omega1_tableau_inverse(t: &RowStrictDecreasingTableau) -> SetValuedTableau {
    conjugate_filling(&t.0)
}

/// `β^{-cells} ∏ β (x_i ⊖ y_{i+c-r})`, written without inverting β.
pub fn weight_eval(t: &SetValuedTableau, pt: &EvaluationPoint) -> Result<Fp> {
    let mut acc = pt.one();
    for (r, c, e) in t.cells() {
        acc *= pt.beta.pow(e.len() as u64 - 1);
        for &i in e {
            acc *= pt.xy(i, i + c as i64 - r as i64)?;
        }
    }
    Ok(acc)
}

/// `β^{-cells} ∏ β (y_{i+c-r} ⊖ x_i)`.
pub fn r_weight_eval(t: &RowStrictDecreasingTableau, pt: &EvaluationPoint) -> Result<Fp> {
    let mut acc = pt.one();
    for (r, c, e) in t.0.cells() {
        acc *= pt.beta.pow(e.len() as u64 - 1);
        for &i in e {
            acc *= crate::ring::ominus(pt.y(i + c as i64 - r as i64), pt.x(i), pt.beta)?;
        }
    }
    Ok(acc)
}

/// Splits a straight-shape tableau into its nonpositive and positive parts.
pub fn split(t: &SetValuedTableau) -> Result<(SetValuedTableau, SetValuedTableau)> {
    if !t.shape.is_straight() {
        return domain(format!("split needs a straight shape, got {}", t.shape));
    }
    let lambda = t.shape.outer();
    let n = lambda.len();
    let mut nu = vec![0; n];
    let mut mu = vec![0; n];
    for (r, _, e) in t.cells() {
        if e[0] <= 0 {
            nu[r - 1] += 1;
        }
        if *e.last().unwrap() <= 0 {
            mu[r - 1] += 1;
        }
    }
    let nu_shape = SkewShape::straight(Partition::from_padded(nu)?);
    let plus_shape = SkewShape::new(lambda.clone(), Partition::from_padded(mu)?)?;
    let minus_entries = nu_shape
        .cells()
        .into_iter()
        .map(|(r, c)| t.get(r, c).unwrap().iter().copied().filter(|&v| v <= 0).collect())
        .collect();
    let plus_entries = plus_shape
        .cells()
        .into_iter()
        .map(|(r, c)| t.get(r, c).unwrap().iter().copied().filter(|&v| v >= 1).collect())
        .collect();
    Ok((Filling::new(nu_shape, minus_entries)?, Filling::new(plus_shape, plus_entries)?))
}

/// Inverse of [`split`].
pub fn merge(minus: &SetValuedTableau, plus: &SetValuedTableau) -> Result<SetValuedTableau> {
    if !minus.shape.is_straight() {
        return domain(format!("negative part has skew shape {}", minus.shape));
    }
    if minus.entries.iter().flatten().any(|&v| v > 0) {
        return domain("negative part has a positive value");
    }
    if plus.entries.iter().flatten().any(|&v| v <= 0) {
        return domain("positive part has a nonpositive value");
    }
    let nu = minus.shape.outer();
    let (lambda, mu) = (plus.shape.outer(), plus.shape.inner());
    if !nu.contains(mu) {
        return domain(format!("inner shape {mu} is not contained in {nu}"));
    }
    let lambda = if plus.shape.is_empty() && lambda.is_empty() { nu } else { lambda };
    if !lambda.contains(nu) {
        return domain(format!("{nu} is not contained in {lambda}"));
    }
    let overlap = SkewShape::new(nu.clone(), mu.clone())?;
    if !overlap.props().is_disconnected {
        return domain(format!("{overlap} is not disconnected"));
    }
    let shape = SkewShape::straight(lambda.clone());
    let entries = shape
        .cells()
        .into_iter()
        .map(|(r, c)| {
            let mut e: Vec<i64> = minus.get(r, c).unwrap_or(&[]).to_vec();
            e.extend_from_slice(plus.get(r, c).unwrap_or(&[]));
            e
        })
        .collect::<Vec<_>>();
    if entries.iter().any(Vec::is_empty) {
        return domain("some cell of the merged shape is empty");
    }
    let t = Filling::raw(shape, entries)?;
    if !t.is_semistandard() {
        return domain(format!("merged filling {t} is not semistandard"));
    }
    Ok(t)
}

/// Enumeration request: shape, optional flag, sign, and a finite value window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub shape: SkewShape,
    pub flag: Option<Flag>,
    pub sign: Sign,
    pub window: (i64, i64),
}

impl EnumSpec {
    pub fn new(shape: SkewShape, flag: Option<Flag>, sign: Sign, window: (i64, i64)) -> Result<Self> {
        let spec = EnumSpec { shape, flag, sign, window };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.window.0 > self.window.1 {
            return arg(format!("empty window {:?}", self.window));
        }
        if let Some(f) = &self.flag {
            if f.len() < self.shape.last_occupied_row() {
                return arg(format!("flag {f} does not cover the rows of {}", self.shape));
            }
        }
        Ok(())
    }

    /// Value bounds shared by every cell of row `r` (before neighbour constraints).
    fn row_bounds(&self, r: usize) -> (i64, i64) {
        let (slo, shi) = self.sign.bounds();
        let mut hi = self.window.1.min(shi);
        if let Some(f) = &self.flag {
            hi = hi.min(f.get(r));
        }
        (self.window.0.max(slo), hi)
    }
}

/// Streams every tableau matching an [`EnumSpec`], row-major and lexicographic on entry sets.
pub struct TableauIter {
    shape: SkewShape,
    cells: Vec<(usize, usize)>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    cur: Vec<Vec<i64>>,
    started: bool,
    done: bool,
}

pub fn enumerate(spec: &EnumSpec) -> Result<TableauIter> {
    spec.validate()?;
    let cells = spec.shape.cells();
    let index = |r: usize, c: usize| cells.iter().position(|&x| x == (r, c));
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    let mut left = Vec::new();
    let mut up = Vec::new();
    for &(r, c) in &cells {
        let (a, b) = spec.row_bounds(r);
        lo.push(a);
        hi.push(b);
        left.push(if c > 1 { index(r, c - 1) } else { None });
        up.push(if r > 1 { index(r - 1, c) } else { None });
    }
    Ok(TableauIter {
        shape: spec.shape.clone(),
        cells,
        lo,
        hi,
        left,
        up,
        cur: Vec::new(),
        started: false,
        done: false,
    })
}

/// Successor of `s` among nonempty subsets of `[.., hi]` in lexicographic order of sorted sequences.
fn next_set(s: &[i64], hi: i64) -> Option<Vec<i64>> {
    let mut v = s.to_vec();
    let last = *v.last().unwrap();
    if last < hi {
        v.push(last + 1);
        return Some(v);
    }
    v.pop();
    let x = v.last_mut()?;
    *x += 1;
    Some(v)
}

impl TableauIter {
    fn first(&self, k: usize) -> Option<Vec<i64>> {
        let mut a = self.lo[k];
        if let Some(j) = self.left[k] {
            a = a.max(*self.cur[j].last().unwrap());
        }
        if let Some(j) = self.up[k] {
            a = a.max(*self.cur[j].last().unwrap() + 1);
        }
        (a <= self.hi[k]).then(|| vec![a])
    }

    fn bump(&mut self) -> bool {
        while let Some(s) = self.cur.pop() {
            let k = self.cur.len();
            if let Some(ns) = next_set(&s, self.hi[k]) {
                self.cur.push(ns);
                return true;
            }
        }
        false
    }

    fn forward(&mut self) -> bool {
        while self.cur.len() < self.cells.len() {
            match self.first(self.cur.len()) {
                Some(s) => self.cur.push(s),
                None => {
                    if !self.bump() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

impl Iterator for TableauIter {
    type Item = SetValuedTableau;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.forward()
        } else {
            self.bump() && self.forward()
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(Filling { shape: self.shape.clone(), entries: self.cur.clone() })
    }
}
