//! Length vectors: per-pair lower bounds on distances inside a vertex set.
//!
//! A vector over a support X assigns each unordered pair of X a bound in
//! `[1, lim]`. Only vectors whose entries satisfy all triangle inequalities
//! are meaningful as table keys (a bound system violating them is
//! unreachable by actual distances), so enumeration yields exactly those.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::VertexId;

pub type Bound = u16;

/// Number of unordered pairs over k positions.
pub fn pair_count(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// Index of position pair (i, j), i < j, in lexicographic order.
pub fn pair_index(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

/// Inverse of `pair_index`.
pub fn pair_at(k: usize, mut idx: usize) -> (usize, usize) {
    for i in 0..k {
        let row = k - i - 1;
        if idx < row {
            return (i, i + 1 + idx);
        }
        idx -= row;
    }
    panic!("pair index {idx} out of range for k = {k}");
}

/// Check every triangle inequality over `entries` (pair-indexed over k
/// positions): for positions x < a < b, the three bounds on (x,a), (x,b),
/// (a,b) must each be at most the sum of the other two.
pub fn satisfies_triangle(entries: &[Bound], k: usize) -> bool {
    debug_assert_eq!(entries.len(), pair_count(k));
    for a in 1..k {
        for b in a + 1..k {
            let zab = entries[pair_index(k, a, b)] as u32;
            for x in 0..a {
                let xa = entries[pair_index(k, x, a)] as u32;
                let xb = entries[pair_index(k, x, b)] as u32;
                if zab > xa + xb || xa > zab + xb || xb > zab + xa {
                    return false;
                }
            }
        }
    }
    true
}

/// Per-pair bounds over a sorted support of vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LengthVector {
    support: Arc<[VertexId]>,
    entries: Box<[Bound]>,
    lim: Bound,
}

impl LengthVector {
    pub fn new(support: Arc<[VertexId]>, entries: Vec<Bound>, lim: Bound) -> Result<LengthVector> {
        check_support(&support)?;
        if entries.len() != pair_count(support.len()) {
            return Err(Error::argument(format!(
                "expected {} entries for a support of {}, got {}",
                pair_count(support.len()),
                support.len(),
                entries.len()
            )));
        }
        if entries.iter().any(|&e| e < 1 || e > lim) {
            return Err(Error::argument(format!("entries must lie in [1, {lim}]")));
        }
        Ok(LengthVector {
            support,
            entries: entries.into_boxed_slice(),
            lim,
        })
    }

    pub fn all_ones(support: Arc<[VertexId]>, lim: Bound) -> Result<LengthVector> {
        let n = pair_count(support.len());
        LengthVector::new(support, vec![1; n], lim)
    }

    pub fn support(&self) -> &[VertexId] {
        &self.support
    }

    pub fn support_arc(&self) -> Arc<[VertexId]> {
        Arc::clone(&self.support)
    }

    pub fn entries(&self) -> &[Bound] {
        &self.entries
    }

    pub fn lim(&self) -> Bound {
        self.lim
    }

    fn position(&self, v: VertexId) -> Result<usize> {
        self.support
            .binary_search(&v)
            .map_err(|_| Error::argument(format!("vertex {v} not in support")))
    }

    pub fn get(&self, a: VertexId, b: VertexId) -> Result<Bound> {
        let i = self.position(a)?;
        let j = self.position(b)?;
        if i == j {
            return Err(Error::argument(format!("pair ({a}, {b}) is degenerate")));
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        Ok(self.entries[pair_index(self.support.len(), i, j)])
    }

    pub fn is_triangle(&self) -> bool {
        satisfies_triangle(&self.entries, self.support.len())
    }

    /// True when every entry of `self` is at most the matching entry of
    /// `other` (so any cut meeting `other` also meets `self`).
    pub fn dominates(&self, other: &LengthVector) -> Result<bool> {
        if self.support != other.support || self.lim != other.lim {
            return Err(Error::argument(
                "domination compares vectors over one support and limit",
            ));
        }
        Ok(self
            .entries
            .iter()
            .zip(other.entries.iter())
            .all(|(a, b)| a <= b))
    }

    /// Restriction to a subset of the support.
    pub fn contract(&self, target: &[VertexId]) -> Result<LengthVector> {
        check_support(target)?;
        let k = target.len();
        let mut entries = Vec::with_capacity(pair_count(k));
        for i in 0..k {
            for j in i + 1..k {
                entries.push(self.get(target[i], target[j])?);
            }
        }
        LengthVector::new(Arc::from(target), entries, self.lim)
    }

    /// All triangle-satisfying one-vertex extensions of `self` by `v`, in
    /// lexicographic order of the extended entry arrays.
    pub fn augmentations(&self, v: VertexId) -> Result<AugmentStream> {
        if self.support.binary_search(&v).is_ok() {
            return Err(Error::argument(format!("vertex {v} already in support")));
        }
        Ok(AugmentStream::new(self, v))
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.support.len();
        write!(f, "{{")?;
        let mut first = true;
        for i in 0..k {
            for j in i + 1..k {
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(
                    f,
                    "({},{}):{}",
                    self.support[i],
                    self.support[j],
                    self.entries[pair_index(k, i, j)]
                )?;
            }
        }
        write!(f, "}}")
    }
}

fn check_support(support: &[VertexId]) -> Result<()> {
    if support.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::argument(
            "support must be sorted and duplicate-free",
        ));
    }
    Ok(())
}

/// For each pair position p = (a, b), the earlier-indexed pair positions
/// (x,a), (x,b) over all x < a. Every position triple is checked exactly
/// once, at its lexicographically last member.
fn triangle_closers(k: usize) -> Vec<Vec<(u32, u32)>> {
    let pairs = pair_count(k);
    let mut tri = vec![Vec::new(); pairs];
    for a in 1..k {
        for b in a + 1..k {
            let p = pair_index(k, a, b);
            for x in 0..a {
                tri[p].push((pair_index(k, x, a) as u32, pair_index(k, x, b) as u32));
            }
        }
    }
    tri
}

/// Lazy lexicographic enumeration of all triangle-satisfying vectors over a
/// support. Backtracking with interval pruning: at each position the
/// feasible values form an interval determined by the completed prefix.
pub struct VectorStream {
    support: Arc<[VertexId]>,
    lim: Bound,
    pairs: usize,
    tri: Vec<Vec<(u32, u32)>>,
    entries: Vec<Bound>,
    hi: Vec<Bound>,
    state: StreamState,
}

#[derive(PartialEq)]
enum StreamState {
    Fresh,
    Running,
    Done,
}

pub fn enumerate_vectors(support: &[VertexId], lim: Bound) -> Result<VectorStream> {
    check_support(support)?;
    if lim < 1 {
        return Err(Error::argument("limit must be at least 1"));
    }
    let k = support.len();
    let pairs = pair_count(k);
    Ok(VectorStream {
        support: Arc::from(support),
        lim,
        pairs,
        tri: triangle_closers(k),
        entries: vec![0; pairs],
        hi: vec![0; pairs],
        state: StreamState::Fresh,
    })
}

impl VectorStream {
    /// Feasible interval at position p given the prefix; empty when hi < lo.
    fn bounds_at(&self, p: usize) -> (u32, u32) {
        let mut lo = 1u32;
        let mut hi = self.lim as u32;
        for &(q1, q2) in &self.tri[p] {
            let x = self.entries[q1 as usize] as u32;
            let y = self.entries[q2 as usize] as u32;
            lo = lo.max(x.abs_diff(y));
            hi = hi.min(x + y);
        }
        (lo, hi)
    }

    fn descend_from(&mut self, mut p: usize) -> bool {
        loop {
            if p == self.pairs {
                return true;
            }
            let (lo, hi) = self.bounds_at(p);
            if lo <= hi {
                self.entries[p] = lo as Bound;
                self.hi[p] = hi as Bound;
                p += 1;
            } else if p == 0 {
                return false;
            } else {
                match self.bump(p - 1) {
                    Some(q) => p = q,
                    None => return false,
                }
            }
        }
    }

    fn bump(&mut self, mut p: usize) -> Option<usize> {
        loop {
            if self.entries[p] < self.hi[p] {
                self.entries[p] += 1;
                return Some(p + 1);
            }
            if p == 0 {
                return None;
            }
            p -= 1;
        }
    }

    /// Advance to the next vector; the current entries are then valid.
    pub fn step(&mut self) -> bool {
        match self.state {
            StreamState::Done => false,
            StreamState::Fresh => {
                self.state = StreamState::Running;
                if self.pairs == 0 {
                    // A support of size <= 1 has exactly one (empty) vector.
                    return true;
                }
                if self.descend_from(0) {
                    true
                } else {
                    self.state = StreamState::Done;
                    false
                }
            }
            StreamState::Running => {
                if self.pairs == 0 {
                    self.state = StreamState::Done;
                    return false;
                }
                let ok = match self.bump(self.pairs - 1) {
                    Some(q) => self.descend_from(q),
                    None => false,
                };
                if !ok {
                    self.state = StreamState::Done;
                }
                ok
            }
        }
    }

    pub fn current(&self) -> &[Bound] {
        &self.entries
    }
}

impl Iterator for VectorStream {
    type Item = LengthVector;

    fn next(&mut self) -> Option<LengthVector> {
        if self.step() {
            Some(LengthVector {
                support: Arc::clone(&self.support),
                entries: self.entries.clone().into_boxed_slice(),
                lim: self.lim,
            })
        } else {
            None
        }
    }
}

/// Count of triangle-satisfying vectors over k positions without
/// materializing them.
pub fn count_vectors(k: usize, lim: Bound) -> Result<u64> {
    let support: Vec<VertexId> = (1..=k).collect();
    let mut stream = enumerate_vectors(&support, lim)?;
    let mut count = 0u64;
    while stream.step() {
        count += 1;
    }
    Ok(count)
}

/// One-vertex extensions of a base vector, lexicographic over the extended
/// arrays. The new entries pair the added vertex with each base vertex; the
/// feasible interval for each comes from the base entries and the earlier
/// new entries.
pub struct AugmentStream {
    support: Arc<[VertexId]>,
    lim: Bound,
    /// For each slot of the extended array: Ok(base index) or Err(new slot).
    layout: Vec<std::result::Result<usize, usize>>,
    base: Box<[Bound]>,
    /// Per new slot j, constraints (earlier new slot i, base bound between
    /// the two partnered vertices).
    cons: Vec<Vec<(usize, u32)>>,
    news: Vec<Bound>,
    hi: Vec<Bound>,
    state: StreamState,
}

impl AugmentStream {
    fn new(base: &LengthVector, v: VertexId) -> AugmentStream {
        let old = base.support();
        let k = old.len();
        let mut support: Vec<VertexId> = old.to_vec();
        let at = support.partition_point(|&x| x < v);
        support.insert(at, v);
        let kk = k + 1;
        // Partners of v in extended-index order coincide with ascending
        // vertex order of the base support.
        let mut layout = Vec::with_capacity(pair_count(kk));
        for i in 0..kk {
            for j in i + 1..kk {
                if i == at || j == at {
                    let partner = if i == at { j } else { i };
                    let old_pos = if partner > at { partner - 1 } else { partner };
                    layout.push(Err(old_pos));
                } else {
                    let oi = if i > at { i - 1 } else { i };
                    let oj = if j > at { j - 1 } else { j };
                    layout.push(Ok(pair_index(k, oi, oj)));
                }
            }
        }
        let mut cons = vec![Vec::new(); k];
        for j in 0..k {
            for i in 0..j {
                let bound = base.entries[pair_index(k, i, j)] as u32;
                cons[j].push((i, bound));
            }
        }
        AugmentStream {
            support: Arc::from(support),
            lim: base.lim,
            layout,
            base: base.entries.clone(),
            cons,
            news: vec![0; k],
            hi: vec![0; k],
            state: StreamState::Fresh,
        }
    }

    fn bounds_at(&self, j: usize) -> (u32, u32) {
        let mut lo = 1u32;
        let mut hi = self.lim as u32;
        for &(i, b) in &self.cons[j] {
            let x = self.news[i] as u32;
            lo = lo.max(x.abs_diff(b));
            hi = hi.min(x + b);
        }
        (lo, hi)
    }

    fn descend_from(&mut self, mut p: usize) -> bool {
        let slots = self.news.len();
        loop {
            if p == slots {
                return true;
            }
            let (lo, hi) = self.bounds_at(p);
            if lo <= hi {
                self.news[p] = lo as Bound;
                self.hi[p] = hi as Bound;
                p += 1;
            } else if p == 0 {
                return false;
            } else {
                match self.bump(p - 1) {
                    Some(q) => p = q,
                    None => return false,
                }
            }
        }
    }

    fn bump(&mut self, mut p: usize) -> Option<usize> {
        loop {
            if self.news[p] < self.hi[p] {
                self.news[p] += 1;
                return Some(p + 1);
            }
            if p == 0 {
                return None;
            }
            p -= 1;
        }
    }

    fn step(&mut self) -> bool {
        let slots = self.news.len();
        match self.state {
            StreamState::Done => false,
            StreamState::Fresh => {
                self.state = StreamState::Running;
                if slots == 0 {
                    return true;
                }
                if self.descend_from(0) {
                    true
                } else {
                    self.state = StreamState::Done;
                    false
                }
            }
            StreamState::Running => {
                if slots == 0 {
                    self.state = StreamState::Done;
                    return false;
                }
                let ok = match self.bump(slots - 1) {
                    Some(q) => self.descend_from(q),
                    None => false,
                };
                if !ok {
                    self.state = StreamState::Done;
                }
                ok
            }
        }
    }
}

impl Iterator for AugmentStream {
    type Item = LengthVector;

    fn next(&mut self) -> Option<LengthVector> {
        if !self.step() {
            return None;
        }
        let entries: Vec<Bound> = self
            .layout
            .iter()
            .map(|slot| match slot {
                Ok(old) => self.base[*old],
                Err(new) => self.news[*new],
            })
            .collect();
        Some(LengthVector {
            support: Arc::clone(&self.support),
            entries: entries.into_boxed_slice(),
            lim: self.lim,
        })
    }
}

/// Materialized, lexicographically sorted list of every triangle-satisfying
/// vector over k positions. Tables over equal-sized bags share one space.
#[derive(Debug)]
pub struct KeySpace {
    k: usize,
    lim: Bound,
    pairs: usize,
    count: usize,
    data: Vec<Bound>,
}

impl KeySpace {
    /// Enumerate and materialize; refuses once more than `cap` vectors
    /// exist.
    pub fn build(k: usize, lim: Bound, cap: u64) -> Result<KeySpace> {
        let support: Vec<VertexId> = (1..=k.max(1)).collect();
        let support = &support[..k];
        let mut stream = enumerate_vectors(support, lim)?;
        let pairs = pair_count(k);
        let mut data = Vec::new();
        let mut count = 0u64;
        while stream.step() {
            count += 1;
            if count > cap {
                return Err(Error::Resource {
                    message: format!(
                        "vector space over {k} vertices with limit {lim} is too large"
                    ),
                    needed: count as u128,
                    cap: cap as u128,
                });
            }
            data.extend_from_slice(stream.current());
        }
        Ok(KeySpace {
            k,
            lim,
            pairs,
            count: count as usize,
            data,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lim(&self) -> Bound {
        self.lim
    }

    pub fn pairs(&self) -> usize {
        self.pairs
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn entry(&self, idx: usize) -> &[Bound] {
        &self.data[idx * self.pairs..(idx + 1) * self.pairs]
    }

    /// Binary search by entry array.
    pub fn find(&self, key: &[Bound]) -> Option<usize> {
        if self.pairs == 0 {
            return if key.is_empty() && self.count == 1 {
                Some(0)
            } else {
                None
            };
        }
        let mut lo = 0usize;
        let mut hi = self.count;
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            match self.entry(mid).cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent filter: raw odometer over [1, lim]^pairs plus a direct
    /// triple-loop triangle test.
    fn brute_vectors(k: usize, lim: Bound) -> Vec<Vec<Bound>> {
        let pairs = pair_count(k);
        let mut out = Vec::new();
        let mut cur = vec![1 as Bound; pairs];
        loop {
            let ok = (0..k).all(|x| {
                (0..k).all(|a| {
                    (0..k).all(|b| {
                        if x == a || x == b || a >= b {
                            return true;
                        }
                        let (p, q) = (x.min(a), x.max(a));
                        let (r, s) = (x.min(b), x.max(b));
                        let xa = cur[pair_index(k, p, q)] as u32;
                        let xb = cur[pair_index(k, r, s)] as u32;
                        let ab = cur[pair_index(k, a, b)] as u32;
                        ab <= xa + xb
                    })
                })
            });
            if ok {
                out.push(cur.clone());
            }
            let mut p = pairs;
            loop {
                if p == 0 {
                    return out;
                }
                p -= 1;
                if cur[p] < lim {
                    cur[p] += 1;
                    for e in cur[p + 1..].iter_mut() {
                        *e = 1;
                    }
                    break;
                }
            }
        }
    }

    fn collect(k: usize, lim: Bound) -> Vec<Vec<Bound>> {
        let support: Vec<VertexId> = (1..=k).collect();
        enumerate_vectors(&support, lim)
            .unwrap()
            .map(|v| v.entries().to_vec())
            .collect()
    }

    #[test]
    fn pair_index_roundtrip() {
        for k in 1..7 {
            for idx in 0..pair_count(k) {
                let (i, j) = pair_at(k, idx);
                assert_eq!(pair_index(k, i, j), idx);
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_filter() {
        for k in 0..=4 {
            for lim in 1..=4 {
                assert_eq!(
                    collect(k, lim),
                    brute_vectors(k, lim),
                    "k={k} lim={lim}"
                );
            }
        }
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_vectors(3, 2).unwrap(), 8);
        assert_eq!(count_vectors(3, 3).unwrap(), 24);
        assert_eq!(count_vectors(4, 4).unwrap(), 2030);
        assert_eq!(count_vectors(2, 5).unwrap(), 5);
        assert_eq!(count_vectors(1, 7).unwrap(), 1);
        assert_eq!(count_vectors(0, 3).unwrap(), 1);
    }

    #[test]
    fn enumeration_is_sorted_and_bracketed() {
        let vecs = collect(4, 3);
        assert!(vecs.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(vecs.first().unwrap(), &vec![1, 1, 1, 1, 1, 1]);
        assert_eq!(vecs.last().unwrap(), &vec![3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn get_and_display() {
        let v = LengthVector::new(Arc::from(vec![2, 5, 9]), vec![1, 2, 3], 3).unwrap();
        assert_eq!(v.get(2, 5).unwrap(), 1);
        assert_eq!(v.get(9, 2).unwrap(), 2);
        assert_eq!(v.get(5, 9).unwrap(), 3);
        assert!(v.get(2, 2).is_err());
        assert!(v.get(2, 7).is_err());
        assert_eq!(v.to_string(), "{(2,5):1, (2,9):2, (5,9):3}");
    }

    #[test]
    fn domination() {
        let s: Arc<[VertexId]> = Arc::from(vec![1, 2, 3]);
        let a = LengthVector::new(Arc::clone(&s), vec![1, 2, 2], 3).unwrap();
        let b = LengthVector::new(Arc::clone(&s), vec![2, 2, 3], 3).unwrap();
        assert!(a.dominates(&b).unwrap());
        assert!(!b.dominates(&a).unwrap());
        assert!(a.dominates(&a).unwrap());
        let other = LengthVector::new(Arc::from(vec![1, 2, 4]), vec![1, 1, 1], 3).unwrap();
        assert!(a.dominates(&other).is_err());
    }

    #[test]
    fn contraction_picks_pairs() {
        let v = LengthVector::new(Arc::from(vec![1, 3, 7]), vec![2, 3, 4], 4).unwrap();
        let c = v.contract(&[1, 7]).unwrap();
        assert_eq!(c.support(), &[1, 7]);
        assert_eq!(c.entries(), &[3]);
        let whole = v.contract(&[1, 3, 7]).unwrap();
        assert_eq!(whole, v);
        assert!(v.contract(&[1, 4]).is_err());
    }

    #[test]
    fn contraction_preserves_triangle() {
        let support: Vec<VertexId> = vec![1, 2, 3, 4];
        for v in enumerate_vectors(&support, 3).unwrap() {
            let c = v.contract(&[1, 2, 4]).unwrap();
            assert!(c.is_triangle());
        }
    }

    #[test]
    fn augmentations_match_filter() {
        // Extensions of [1] over {1,2} by vertex 3, limit 3: brute-check.
        let base = LengthVector::new(Arc::from(vec![1, 2]), vec![1], 3).unwrap();
        let got: Vec<Vec<Bound>> = base
            .augmentations(3)
            .unwrap()
            .map(|v| v.entries().to_vec())
            .collect();
        let mut expect = Vec::new();
        for e13 in 1..=3 as Bound {
            for e23 in 1..=3 as Bound {
                if satisfies_triangle(&[1, e13, e23], 3) {
                    expect.push(vec![1, e13, e23]);
                }
            }
        }
        assert_eq!(got, expect);
        assert_eq!(got.len(), 7);
    }

    #[test]
    fn augmentations_every_extension_contracts_back() {
        let base = LengthVector::new(Arc::from(vec![2, 6]), vec![2], 4).unwrap();
        // Insert in the middle of the support.
        let all: Vec<LengthVector> = base.augmentations(4).unwrap().collect();
        for v in &all {
            assert_eq!(v.support(), &[2, 4, 6]);
            assert!(v.is_triangle());
            assert_eq!(v.contract(&[2, 6]).unwrap(), base);
        }
        // Count agrees with filtering all 3-vertex vectors on the base entry.
        let expect = enumerate_vectors(&[2, 4, 6], 4)
            .unwrap()
            .filter(|v| v.get(2, 6).unwrap() == 2)
            .count();
        assert_eq!(all.len(), expect);
    }

    #[test]
    fn augmentation_of_singleton() {
        let base = LengthVector::new(Arc::from(vec![5]), vec![], 3).unwrap();
        let got: Vec<LengthVector> = base.augmentations(2).unwrap().collect();
        assert_eq!(got.len(), 3);
        assert_eq!(got[0].entries(), &[1]);
        assert_eq!(got[2].entries(), &[3]);
        assert!(base.augmentations(5).is_err());
    }

    #[test]
    fn keyspace_lookup() {
        let ks = KeySpace::build(4, 3, 1 << 20).unwrap();
        assert_eq!(ks.len(), count_vectors(4, 3).unwrap() as usize);
        for idx in 0..ks.len() {
            assert_eq!(ks.find(ks.entry(idx)), Some(idx));
        }
        assert_eq!(ks.find(&[1, 1, 1, 1, 1, 1]), Some(0));
        assert_eq!(ks.find(&[1, 1, 1, 1, 1, 3]), None);
    }

    #[test]
    fn keyspace_cap_refusal() {
        match KeySpace::build(3, 3, 10) {
            Err(Error::Resource { cap, .. }) => assert_eq!(cap, 10),
            other => panic!("expected resource refusal, got {other:?}"),
        }
    }

    #[test]
    fn keyspace_trivial_supports() {
        let ks = KeySpace::build(1, 5, 100).unwrap();
        assert_eq!(ks.len(), 1);
        assert_eq!(ks.entry(0), &[] as &[Bound]);
        assert_eq!(ks.find(&[]), Some(0));
    }

    #[test]
    fn rejects_bad_support_and_entries() {
        assert!(enumerate_vectors(&[3, 1], 2).is_err());
        assert!(enumerate_vectors(&[1, 1], 2).is_err());
        assert!(enumerate_vectors(&[1, 2], 0).is_err());
        assert!(LengthVector::new(Arc::from(vec![1, 2]), vec![3], 2).is_err());
        assert!(LengthVector::new(Arc::from(vec![1, 2]), vec![0], 2).is_err());
        assert!(LengthVector::new(Arc::from(vec![1, 2]), vec![1, 1], 2).is_err());
    }
}
