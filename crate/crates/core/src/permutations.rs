//! Finite-support permutations of the integers.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::combinatorics::{flags_equivalent, is_compatible, join, Flag, Partition};
use crate::error::{arg, domain, EgcError, Result};

/// Bijection of Z moving finitely many points, stored on its minimal support window.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    lo: i64,
    img: Vec<i64>,
}

/// Code, shape and (for vexillary input) flag of a permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeShapeFlag {
    /// Nonzero code entries `k -> c_k`.
    pub code: BTreeMap<i64, usize>,
    pub shape: Partition,
    pub flag: Flag,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation { lo: 0, img: Vec::new() }
    }

    /// `s_i`, swapping `i` and `i+1`.
    pub fn simple(i: i64) -> Self {
        Permutation { lo: i, img: vec![i + 1, i] }
    }

    /// Builds from the images of `base, base+1, ...`.
    pub fn from_oneline(base: i64, images: &[i64]) -> Result<Self> {
        let n = images.len() as i64;
        let mut seen = vec![false; images.len()];
        for &v in images {
            let idx = v - base;
            if idx < 0 || idx >= n || seen[idx as usize] {
                return arg(format!("{images:?} is not a permutation of {base}..{}", base + n - 1));
            }
            seen[idx as usize] = true;
        }
        Ok(Self::canonical(base, images.to_vec()))
    }

    fn canonical(base: i64, mut img: Vec<i64>) -> Self {
        let mut lo = base;
        let mut start = 0;
        while start < img.len() && img[start] == lo + start as i64 {
            start += 1;
        }
        if start == img.len() {
            return Self::identity();
        }
        let mut end = img.len();
        while img[end - 1] == base + end as i64 - 1 {
            end -= 1;
        }
        img.truncate(end);
        img.drain(..start);
        lo += start as i64;
        Permutation { lo, img }
    }

    /// Minimal window containing the support, `None` for the identity.
    pub fn window(&self) -> Option<(i64, i64)> {
        (!self.img.is_empty()).then(|| (self.lo, self.lo + self.img.len() as i64 - 1))
    }

    pub fn is_identity(&self) -> bool {
        self.img.is_empty()
    }

    pub fn apply(&self, k: i64) -> i64 {
        let idx = k - self.lo;
        if idx >= 0 && (idx as usize) < self.img.len() {
            self.img[idx as usize]
        } else {
            k
        }
    }

    /// Images of `lo..=hi`.
    pub fn oneline(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).map(|k| self.apply(k)).collect()
    }

    fn span_with(&self, other: &Permutation) -> Option<(i64, i64)> {
        match (self.window(), other.window()) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a),
            (Some(a), Some(b)) => Some((a.0.min(b.0), a.1.max(b.1))),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        match self.span_with(other) {
            None => Self::identity(),
            Some((lo, hi)) => {
                Self::canonical(lo, (lo..=hi).map(|k| self.apply(other.apply(k))).collect())
            }
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut img = vec![0; self.img.len()];
        for (idx, &v) in self.img.iter().enumerate() {
            img[(v - self.lo) as usize] = self.lo + idx as i64;
        }
        Permutation { lo: self.lo, img }
    }

    /// `self ∘ s_i`: swaps the images at positions `i` and `i+1`.
    pub fn times_simple(&self, i: i64) -> Permutation {
        let (lo, hi) = match self.window() {
            None => (i, i + 1),
            Some((a, b)) => (a.min(i), b.max(i + 1)),
        };
        let mut img = self.oneline(lo, hi);
        img.swap((i - lo) as usize, (i + 1 - lo) as usize);
        Self::canonical(lo, img)
    }

    pub fn length(&self) -> usize {
        let v = &self.img;
        let mut n = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    n += 1;
                }
            }
        }
        n
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<i64> {
        (0..self.img.len().saturating_sub(1))
            .filter(|&a| self.img[a] > self.img[a + 1])
            .map(|a| self.lo + a as i64)
            .collect()
    }

    /// Reduced word built by stripping the smallest descent on the right.
    pub fn reduced_word(&self) -> Vec<i64> {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(&i) = w.descents().first() {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        rev
    }

    pub fn is_vexillary(&self) -> bool {
        let v = &self.img;
        let n = v.len();
        for j in 0..n {
            for k in j + 1..n {
                if v[j] >= v[k] {
                    continue;
                }
                let lowest_i = v[..j].iter().filter(|&&x| v[j] < x && x < v[k]).min();
                let highest_l = v[k + 1..].iter().filter(|&&x| x < v[k]).max();
                if let (Some(a), Some(b)) = (lowest_i, highest_l) {
                    if a < b {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Nonzero code entries `k -> |I_k|` and the matching `p_k = min I_k - 1`.
    pub fn code_with_p(&self) -> BTreeMap<i64, (usize, i64)> {
        let mut out = BTreeMap::new();
        let v = &self.img;
        for a in 0..v.len() {
            let later: Vec<usize> = (a + 1..v.len()).filter(|&b| v[b] < v[a]).collect();
            if let Some(&first) = later.first() {
                out.insert(self.lo + a as i64, (later.len(), self.lo + first as i64 - 1));
            }
        }
        out
    }

    pub fn code(&self) -> BTreeMap<i64, usize> {
        self.code_with_p().into_iter().map(|(k, (c, _))| (k, c)).collect()
    }

    pub fn shape(&self) -> Partition {
        let mut parts: Vec<usize> = self.code().into_values().collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive code")
    }

    pub fn code_shape_flag(&self) -> Result<CodeShapeFlag> {
        if !self.is_vexillary() {
            return domain(format!("{self} is not vexillary, so it has no flag"));
        }
        let cp = self.code_with_p();
        let mut ps: Vec<i64> = cp.values().map(|&(_, p)| p).collect();
        ps.sort_unstable();
        Ok(CodeShapeFlag {
            code: cp.iter().map(|(&k, &(c, _))| (k, c)).collect(),
            shape: self.shape(),
            flag: Flag::new(ps)?,
        })
    }

    /// Image under `s_i -> s_{-i}`, i.e. `k -> 1 - w(1 - k)`.
    pub fn neg(&self) -> Permutation {
        match self.window() {
            None => Self::identity(),
            Some((lo, hi)) => {
                let (a, b) = (1 - hi, 1 - lo);
                Self::canonical(a, (a..=b).map(|k| 1 - self.apply(1 - k)).collect())
            }
        }
    }

    /// `iota^n`: `k -> w(k - n) + n`.
    pub fn iota(&self, n: i64) -> Permutation {
        Permutation { lo: self.lo + n, img: self.img.iter().map(|v| v + n).collect() }
    }

    /// The 0-Grassmannian permutation of `lambda`.
    pub fn from_partition(lambda: &Partition) -> Permutation {
        let conj = lambda.conjugate();
        let (lo, hi) = (1 - lambda.len() as i64, conj.len() as i64);
        let img = (lo..=hi)
            .map(|i| {
                if i <= 0 {
                    i + lambda.part((1 - i) as usize) as i64
                } else {
                    i - conj.part(i as usize) as i64
                }
            })
            .collect();
        Self::canonical(lo, img)
    }

    /// The permutation with the given nonzero code entries.
    pub fn from_code(code: &BTreeMap<i64, usize>) -> Permutation {
        let Some((&a, _)) = code.iter().next() else {
            return Self::identity();
        };
        let b = code.iter().map(|(&k, &c)| k + c as i64).max().unwrap();
        let mut avail: Vec<i64> = (a..=b).collect();
        let img = (a..=b).map(|k| avail.remove(code.get(&k).copied().unwrap_or(0))).collect();
        Self::canonical(a, img)
    }

    /// The vexillary permutation with shape `lambda` and flag equivalent to `phi`.
    pub fn from_shape_flag(lambda: &Partition, phi: &Flag) -> Result<Permutation> {
        if !is_compatible(lambda, phi)? {
            return arg(format!("{lambda} and {phi} are not compatible"));
        }
        // Top row first: each part goes to the largest free position not exceeding its flag.
        let mut code: BTreeMap<i64, usize> = BTreeMap::new();
        for r in 1..=lambda.len() {
            let mut k = phi.get(r);
            while code.contains_key(&k) {
                k -= 1;
            }
            code.insert(k, lambda.part(r));
        }
        let w = Self::from_code(&code);
        let csf = w.code_shape_flag()?;
        if csf.shape != *lambda || !flags_equivalent(lambda, &csf.flag, phi)? {
            return Err(EgcError::Internal(format!(
                "placement for {lambda}, {phi} produced {w} with shape {} and flag {}",
                csf.shape, csf.flag
            )));
        }
        Ok(w)
    }

    /// Demazure product `self * v`.
    pub fn hecke_product(&self, v: &Permutation) -> Permutation {
        let mut w = self.clone();
        for i in v.reduced_word() {
            let ws = w.times_simple(i);
            if ws.length() > w.length() {
                w = ws;
            }
        }
        w
    }

    pub fn from_word(word: &[i64]) -> Permutation {
        word.iter().fold(Self::identity(), |w, &i| w.times_simple(i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.window() {
            None => write!(f, "id"),
            Some((lo, _)) => write!(f, "[{}]@{lo}", join(&self.img)),
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Permutation", 2)?;
        st.serialize_field("base", &self.window().map(|w| w.0).unwrap_or(1))?;
        st.serialize_field("oneline", &self.img)?;
        st.end()
    }
}

/// All permutations of `lo..=hi`, in lexicographic order of one-line notation.
pub fn all_in_window(lo: i64, hi: i64) -> Vec<Permutation> {
    let mut cur: Vec<i64> = (lo..=hi).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation::canonical(lo, cur.clone()));
        // next lexicographic permutation
        let n = cur.len();
        if n < 2 {
            break;
        }
        let Some(i) = (0..n - 1).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}
