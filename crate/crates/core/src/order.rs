//! Finite posets, meet-semilattices with a least element, and the order
//! relations lifted to subsets of the carrier.
//!
//! Elements are identified by their declaration index. Every structure is
//! immutable once built; the order is stored as a dense boolean matrix.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A subset of the carrier, kept sorted by declaration index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(Vec<usize>);

impl ElemSet {
    pub fn empty() -> Self {
        ElemSet(Vec::new())
    }

    pub fn singleton(x: usize) -> Self {
        ElemSet(vec![x])
    }

    /// The full carrier `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        ElemSet((0..n).collect())
    }

    pub fn from_mask(mask: u64, n: usize) -> Self {
        (0..n).filter(|i| mask >> i & 1 == 1).collect()
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// The unique member, if this is a singleton.
    pub fn as_single(&self) -> Option<usize> {
        match self.0.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.iter().any(|x| other.contains(x))
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.iter().all(|x| other.contains(x))
    }
}

impl FromIterator<usize> for ElemSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        ElemSet(v)
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// A finite partially ordered set with named elements.
#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, usize>,
    leq: Vec<bool>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Poset")
            .field("names", &self.names)
            .field("covers", &self.cover_pairs())
            .finish()
    }
}

fn index_names(names: &[String]) -> Result<HashMap<String, usize>> {
    if names.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::InvalidName(name.clone()));
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateElement(name.clone()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds the poset whose order is the reflexive-transitive closure of
    /// `covers`, each pair being `(lower, upper)`.
    pub fn build<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let index = index_names(&names)?;
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownName(s.as_ref().to_owned()))
        };
        let mut pairs = Vec::with_capacity(covers.len());
        for (lo, hi) in covers {
            pairs.push((lookup(lo)?, lookup(hi)?));
        }
        Self::from_index_covers(names, index, &pairs)
    }

    /// Like [`Poset::build`] but with covers given as index pairs.
    pub fn from_covers(names: Vec<String>, covers: &[(usize, usize)]) -> Result<Self> {
        let index = index_names(&names)?;
        if let Some(&(lo, hi)) = covers
            .iter()
            .find(|&&(lo, hi)| lo >= names.len() || hi >= names.len())
        {
            return Err(Error::UnknownName(format!("#{}", lo.max(hi))));
        }
        Self::from_index_covers(names, index, covers)
    }

    fn from_index_covers(
        names: Vec<String>,
        index: HashMap<String, usize>,
        covers: &[(usize, usize)],
    ) -> Result<Self> {
        let n = names.len();
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(lo, hi) in covers {
            leq[lo * n + hi] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
                }
            }
        }
        Ok(Poset { names, index, leq })
    }

    /// Builds a poset from a full order relation, validating that it is a
    /// partial order.
    pub fn from_relation(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let index = index_names(&names)?;
        let n = names.len();
        let mut m = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = leq(i, j);
            }
        }
        for i in 0..n {
            if !m[i * n + i] {
                return Err(Error::NotPartialOrder(format!("`{}` ≰ itself", names[i])));
            }
            for j in 0..n {
                if i != j && m[i * n + j] && m[j * n + i] {
                    return Err(Error::CycleDetected(names[i].clone(), names[j].clone()));
                }
                for k in 0..n {
                    if m[i * n + j] && m[j * n + k] && !m[i * n + k] {
                        return Err(Error::NotPartialOrder(format!(
                            "not transitive at `{}`, `{}`, `{}`",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        Ok(Poset {
            names,
            index,
            leq: m,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.names.len() + j]
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// Hasse diagram edges `(lower, upper)` in declaration order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.lt(i, j) && !(0..n).any(|k| self.lt(i, k) && self.lt(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// `Max A`: members of `a` with nothing in `a` strictly above them.
    pub fn max_elements(&self, a: &ElemSet) -> ElemSet {
        a.iter()
            .filter(|&x| !a.iter().any(|y| self.lt(x, y)))
            .collect()
    }

    /// `A ≤ B`: every member of `a` lies below every member of `b`.
    pub fn set_leq(&self, a: &ElemSet, b: &ElemSet) -> bool {
        a.iter().all(|x| b.iter().all(|y| self.leq(x, y)))
    }

    /// `A ≤₁ B`: every member of `a` lies below some member of `b`.
    pub fn leq1(&self, a: &ElemSet, b: &ElemSet) -> bool {
        a.iter().all(|x| b.iter().any(|y| self.leq(x, y)))
    }

    /// `A ≈₁ B`.
    pub fn approx1(&self, a: &ElemSet, b: &ElemSet) -> bool {
        self.leq1(a, b) && self.leq1(b, a)
    }

    pub fn is_antichain(&self, a: &ElemSet) -> bool {
        let m = a.members();
        m.iter().enumerate().all(|(k, &x)| {
            m[k + 1..]
                .iter()
                .all(|&y| !self.leq(x, y) && !self.leq(y, x))
        })
    }

    /// Principal up-set `[x)`.
    pub fn up_set(&self, x: usize) -> ElemSet {
        (0..self.len()).filter(|&y| self.leq(x, y)).collect()
    }

    pub fn down_set(&self, x: usize) -> ElemSet {
        (0..self.len()).filter(|&y| self.leq(y, x)).collect()
    }

    /// Renders a set by element names, e.g. `{a,c}`.
    pub fn render(&self, a: &ElemSet) -> String {
        let inner: Vec<&str> = a.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", inner.join(","))
    }
}

/// A finite meet-semilattice with least element `0`.
#[derive(Clone, PartialEq, Eq)]
pub struct MeetSemilattice {
    poset: Poset,
    meet: Vec<usize>,
    bottom: usize,
    top: Option<usize>,
    maximal: ElemSet,
    label: String,
}

impl fmt::Debug for MeetSemilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MeetSemilattice")
            .field("label", &self.label)
            .field("poset", &self.poset)
            .finish()
    }
}

impl MeetSemilattice {
    /// Validates that every pair has a greatest lower bound and that a least
    /// element exists.
    pub fn from_poset(poset: Poset) -> Result<Self> {
        let n = poset.len();
        let down_size: Vec<usize> = (0..n).map(|x| poset.down_set(x).len()).collect();
        let mut meet = vec![0; n * n];
        for i in 0..n {
            meet[i * n + i] = i;
            for j in i + 1..n {
                let lower = (0..n).filter(|&k| poset.leq(k, i) && poset.leq(k, j));
                // the glb, if it exists, is the lower bound with the largest down-set
                let cand = lower.clone().max_by_key(|&k| down_size[k]);
                let glb = cand.filter(|&g| lower.clone().all(|k| poset.leq(k, g)));
                let g = glb.ok_or_else(|| {
                    Error::NoMeet(poset.name(i).to_owned(), poset.name(j).to_owned())
                })?;
                meet[i * n + j] = g;
                meet[j * n + i] = g;
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| poset.leq(b, x)))
            .ok_or(Error::NoBottom)?;
        let top = (0..n).find(|&t| (0..n).all(|x| poset.leq(x, t)));
        let maximal = poset.max_elements(&ElemSet::full(n));
        Ok(MeetSemilattice {
            poset,
            meet,
            bottom,
            top,
            maximal,
            label: String::new(),
        })
    }

    /// Convenience for `Poset::build` followed by [`MeetSemilattice::from_poset`].
    pub fn build<S: AsRef<str>>(names: &[S], covers: &[(S, S)]) -> Result<Self> {
        Self::from_poset(Poset::build(names, covers)?)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn is_bounded(&self) -> bool {
        self.top.is_some()
    }

    /// `Max S`.
    pub fn maximal(&self) -> &ElemSet {
        &self.maximal
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    #[inline]
    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j]
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.poset.leq(i, j)
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn names(&self) -> &[String] {
        self.poset.names()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.poset.index_of(name)
    }

    /// Looks up each name, failing on the first unknown one.
    pub fn set_of<S: AsRef<str>>(&self, names: &[S]) -> Result<ElemSet> {
        names
            .iter()
            .map(|s| {
                self.index_of(s.as_ref())
                    .ok_or_else(|| Error::UnknownName(s.as_ref().to_owned()))
            })
            .collect()
    }

    /// `A ∧ B = {a ∧ b | a ∈ A, b ∈ B}`.
    pub fn set_meet(&self, a: &ElemSet, b: &ElemSet) -> ElemSet {
        a.iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .map(|(x, y)| self.meet(x, y))
            .collect()
    }

    pub fn max_elements(&self, a: &ElemSet) -> ElemSet {
        self.poset.max_elements(a)
    }

    pub fn set_leq(&self, a: &ElemSet, b: &ElemSet) -> bool {
        self.poset.set_leq(a, b)
    }

    pub fn leq1(&self, a: &ElemSet, b: &ElemSet) -> bool {
        self.poset.leq1(a, b)
    }

    pub fn approx1(&self, a: &ElemSet, b: &ElemSet) -> bool {
        self.poset.approx1(a, b)
    }

    pub fn is_antichain(&self, a: &ElemSet) -> bool {
        self.poset.is_antichain(a)
    }

    pub fn render(&self, a: &ElemSet) -> String {
        self.poset.render(a)
    }
}
