//! Congruences as index partitions: closure, joins and meets, the exhaustive
//! lattice used as an oracle, quotients.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::greens::{classes_of, renumber};
use crate::semigroup::FiniteSemigroup;
use crate::witness::{Verdict, Witness};

/// Default bound on `|S|` for [`enumerate_congruences`].
pub const ENUMERATION_CAP: usize = 8;

/// A partition of `0..n`. Class ids are numbered by least member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    class_of: Vec<usize>,
    class_count: usize,
}

#[derive(Serialize)]
struct Classes<'a> {
    classes: &'a [Vec<usize>],
}

impl Serialize for Congruence {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        Classes {
            classes: &self.classes(),
        }
        .serialize(ser)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns whether two classes were merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.0[hi] = lo;
        true
    }

    fn into_partition(mut self) -> Congruence {
        let raw: Vec<usize> = (0..self.0.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&raw)
    }
}

impl Congruence {
    /// Partition whose classes are the fibres of `labels`.
    pub fn from_labels(labels: &[usize]) -> Self {
        let class_of = renumber(labels);
        let class_count = class_of.iter().copied().max().map_or(0, |m| m + 1);
        Congruence {
            class_of,
            class_count,
        }
    }

    pub fn equality(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn universal(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    /// Validates that `classes` partition `0..order` and respect the product.
    pub fn from_classes(s: &FiniteSemigroup, classes: &[Vec<usize>]) -> Result<Self> {
        let n = s.order();
        let mut labels = vec![usize::MAX; n];
        for (c, class) in classes.iter().enumerate() {
            for &x in class {
                if x >= n {
                    return Err(Error::IndexOutOfRange { index: x, order: n });
                }
                if labels[x] != usize::MAX {
                    return Err(Error::NotCongruence(format!("{x} lies in two classes")));
                }
                labels[x] = c;
            }
        }
        if let Some(x) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::NotCongruence(format!("{x} lies in no class")));
        }
        let c = Self::from_labels(&labels);
        c.check(s)?;
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        classes_of(&self.class_of)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    pub fn is_equality(&self) -> bool {
        self.class_count == self.len()
    }

    pub fn is_universal(&self) -> bool {
        self.class_count <= 1
    }

    /// Compatibility with left and right multiplication.
    pub fn check(&self, s: &FiniteSemigroup) -> Result<()> {
        let reps = self.representatives();
        for x in s.elements() {
            let r = reps[self.class_of[x]];
            if r == x {
                continue;
            }
            for t in s.elements() {
                if !self.related(s.mul(x, t), s.mul(r, t)) {
                    return Err(Error::NotCongruence(format!(
                        "{x} ~ {r} but {x}*{t} and {r}*{t} are separated"
                    )));
                }
                if !self.related(s.mul(t, x), s.mul(t, r)) {
                    return Err(Error::NotCongruence(format!(
                        "{x} ~ {r} but {t}*{x} and {t}*{r} are separated"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn is_congruence(&self, s: &FiniteSemigroup) -> bool {
        self.check(s).is_ok()
    }

    /// Least member of each class.
    pub fn representatives(&self) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.class_count];
        for (x, &c) in self.class_of.iter().enumerate() {
            if reps[c] == usize::MAX {
                reps[c] = x;
            }
        }
        reps
    }

    /// Intersection of partitions.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        let n = self.len();
        let pairs: Vec<usize> = (0..n)
            .map(|x| self.class_of[x] * n + other.class_of[x])
            .collect();
        Self::from_labels(&pairs)
    }

    /// Equivalence join; the join of two congruences is a congruence.
    pub fn join(&self, other: &Congruence) -> Congruence {
        let mut uf = UnionFind::new(self.len());
        for part in [self, other] {
            let reps = part.representatives();
            for x in 0..self.len() {
                uf.union(x, reps[part.class_of[x]]);
            }
        }
        uf.into_partition()
    }

    /// `self ⊆ other` as relations.
    pub fn refines(&self, other: &Congruence) -> bool {
        let reps = self.representatives();
        (0..self.len()).all(|x| other.related(x, reps[self.class_of[x]]))
    }
}

/// Least congruence containing `pairs`.
pub fn congruence_closure(s: &FiniteSemigroup, pairs: &[(usize, usize)]) -> Congruence {
    let mut uf = UnionFind::new(s.order());
    let mut pending: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in pairs {
        if uf.union(a, b) {
            pending.push((a, b));
        }
    }
    while let Some((a, b)) = pending.pop() {
        for &g in s.generators() {
            for (x, y) in [(s.mul(a, g), s.mul(b, g)), (s.mul(g, a), s.mul(g, b))] {
                if uf.union(x, y) {
                    pending.push((x, y));
                }
            }
        }
    }
    uf.into_partition()
}

/// All congruences of `s`, from the equality relation down to the universal one.
pub fn enumerate_congruences(s: &FiniteSemigroup) -> Result<Vec<Congruence>> {
    enumerate_congruences_capped(s, ENUMERATION_CAP)
}

pub fn enumerate_congruences_capped(s: &FiniteSemigroup, cap: usize) -> Result<Vec<Congruence>> {
    if s.order() > cap {
        return Err(Error::CapExceeded(cap));
    }
    let n = s.order();
    let mut principal: Vec<Congruence> = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            principal.push(congruence_closure(s, &[(a, b)]));
        }
    }
    principal.sort();
    principal.dedup();
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut all = vec![Congruence::equality(n)];
    seen.insert(all[0].clone());
    for p in &principal {
        let current = all.len();
        for i in 0..current {
            let j = all[i].join(p);
            if seen.insert(j.clone()) {
                all.push(j);
            }
        }
    }
    // Finest first: decreasing class count, then labels.
    all.sort_by(|a, b| {
        (b.class_count, &a.class_of).cmp(&(a.class_count, &b.class_of))
    });
    Ok(all)
}

/// Every class that is a subsemigroup satisfies `member`.
pub fn is_v_congruence(
    s: &FiniteSemigroup,
    cong: &Congruence,
    member: &dyn Fn(&FiniteSemigroup) -> bool,
) -> Verdict {
    for class in cong.classes() {
        if !s.is_closed(&class) {
            continue;
        }
        let sub = s.subsemigroup(&class).expect("closed class");
        if !member(&sub.semigroup) {
            return Verdict::no(Witness::Class {
                elements: class,
                reason: "subsemigroup class outside the variety",
            });
        }
    }
    Verdict::yes()
}

/// A quotient semigroup and the projection onto it.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub semigroup: FiniteSemigroup,
    /// `map[s]` is the class of `s`.
    pub map: Vec<usize>,
}

pub fn quotient(s: &FiniteSemigroup, cong: &Congruence) -> Quotient {
    let reps = cong.representatives();
    let k = cong.class_count();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(cong.class_of(s.mul(a, b)));
        }
    }
    let identity = s.identity().map(|e| cong.class_of(e));
    let semigroup = FiniteSemigroup::from_flat(k, table, identity)
        .expect("quotient by a congruence is a semigroup");
    Quotient {
        semigroup,
        map: cong.labels().to_vec(),
    }
}

/// The kernel congruence of a morphism given as an element map.
pub fn kernel(map: &[usize]) -> Congruence {
    Congruence::from_labels(map)
}
