//! Concrete finite semigroups given by their multiplication table.
//!
//! Elements are the dense indices `0..order`. Every constructor validates the
//! table: entries in range and associativity (Light's test over a generating
//! set, which is exact once the set generates the semigroup).

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::error::{Error, Result};

/// Default bound on the size of a generated semigroup.
pub const DEFAULT_CAP: usize = 100_000;

/// Shortest words over generator labels, one per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWords {
    pub labels: Vec<String>,
    /// `words[s]` lists label indices; the empty word names the identity.
    pub words: Vec<Vec<usize>>,
}

impl GenWords {
    pub fn spell(&self, s: usize) -> String {
        spell(&self.labels, &self.words[s])
    }
}

/// Concatenate labels; multi-character labels are separated by spaces.
pub fn spell(labels: &[String], word: &[usize]) -> String {
    let sep = if labels.iter().all(|l| l.chars().count() == 1) {
        ""
    } else {
        " "
    };
    word.iter()
        .map(|&i| labels[i].as_str())
        .collect::<Vec<_>>()
        .join(sep)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteSemigroup {
    order: usize,
    table: Vec<usize>,
    identity: Option<usize>,
    generators: Vec<usize>,
    gen_words: Option<GenWords>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from rows of its Cayley table (`table[s][t] = s*t`).
    ///
    /// When `identity` is `None` the table is scanned for one.
    pub fn from_cayley_table(
        order: usize,
        table: &[Vec<usize>],
        identity: Option<usize>,
    ) -> Result<Self> {
        if table.len() != order {
            return Err(Error::DimensionMismatch {
                expected: order,
                found: table.len(),
            });
        }
        let mut flat = Vec::with_capacity(order * order);
        for row in table {
            if row.len() != order {
                return Err(Error::DimensionMismatch {
                    expected: order,
                    found: row.len(),
                });
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat(order, flat, identity)
    }

    /// Same as [`from_cayley_table`](Self::from_cayley_table) on a row-major table.
    pub fn from_flat(order: usize, table: Vec<usize>, identity: Option<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        if table.len() != order * order {
            return Err(Error::DimensionMismatch {
                expected: order * order,
                found: table.len(),
            });
        }
        if let Some(&bad) = table.iter().find(|&&x| x >= order) {
            return Err(Error::IndexOutOfRange { index: bad, order });
        }
        let generators = greedy_generators(order, &table);
        let s = FiniteSemigroup {
            order,
            table,
            identity: None,
            generators,
            gen_words: None,
        };
        s.check_associative()?;
        s.with_identity(identity)
    }

    fn with_identity(mut self, identity: Option<usize>) -> Result<Self> {
        match identity {
            Some(e) => {
                if e >= self.order {
                    return Err(Error::IndexOutOfRange {
                        index: e,
                        order: self.order,
                    });
                }
                if !self.is_identity(e) {
                    return Err(Error::NotIdentity(e));
                }
                self.identity = Some(e);
            }
            None => self.identity = (0..self.order).find(|&e| self.is_identity(e)),
        }
        Ok(self)
    }

    /// Closure of `generators` under composition of transformations of
    /// `{0..degree-1}`, acting on the right: `q·(st) = (q·s)·t`.
    ///
    /// The result is the semigroup generated (no identity is adjoined).
    pub fn from_transformations(
        degree: usize,
        generators: &[(String, Vec<usize>)],
        cap: usize,
    ) -> Result<Self> {
        Ok(TransformationSemigroup::generate(degree, generators, false, cap)?.semigroup)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, s: usize, t: usize) -> usize {
        self.table[s * self.order + t]
    }

    pub fn row(&self, s: usize) -> &[usize] {
        &self.table[s * self.order..(s + 1) * self.order]
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// A generating set. Every element is a left-bracketed product of these.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn gen_words(&self) -> Option<&GenWords> {
        self.gen_words.as_ref()
    }

    /// Product of a sequence of elements; `None` for the empty sequence.
    pub fn product(&self, elements: impl IntoIterator<Item = usize>) -> Option<usize> {
        elements.into_iter().reduce(|a, b| self.mul(a, b))
    }

    pub fn is_idempotent(&self, s: usize) -> bool {
        self.mul(s, s) == s
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&s| self.is_idempotent(s)).collect()
    }

    fn is_identity(&self, e: usize) -> bool {
        self.elements()
            .all(|s| self.mul(e, s) == s && self.mul(s, e) == s)
    }

    /// The zero element, if any.
    pub fn zero(&self) -> Option<usize> {
        self.elements()
            .find(|&z| self.elements().all(|s| self.mul(z, s) == z && self.mul(s, z) == z))
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|s| (s + 1..self.order).all(|t| self.mul(s, t) == self.mul(t, s)))
    }

    /// `s^k` for `k >= 1`.
    pub fn pow(&self, s: usize, k: usize) -> usize {
        assert!(k >= 1);
        (1..k).fold(s, |acc, _| self.mul(acc, s))
    }

    /// The unique idempotent power of `s`.
    pub fn idempotent_power(&self, s: usize) -> usize {
        let mut x = s;
        loop {
            if self.is_idempotent(x) {
                return x;
            }
            x = self.mul(x, s);
        }
    }

    /// Index and period of the monogenic subsemigroup generated by `s`.
    pub fn index_period(&self, s: usize) -> (usize, usize) {
        let mut seen = HashMap::new();
        let mut x = s;
        let mut k = 1;
        loop {
            if let Some(&first) = seen.get(&x) {
                return (first, k - first);
            }
            seen.insert(x, k);
            x = self.mul(x, s);
            k += 1;
        }
    }

    /// Light's associativity test against the generating set.
    fn check_associative(&self) -> Result<()> {
        for &g in &self.generators {
            for x in self.elements() {
                let xg = self.mul(x, g);
                for y in self.elements() {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::NotAssociative(x, g, y));
                    }
                }
            }
        }
        Ok(())
    }

    /// `S^1`: the semigroup itself when it is a monoid, otherwise `S` with a
    /// new identity appended as index `order`.
    pub fn adjoin_identity(&self) -> FiniteSemigroup {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.order;
        let m = n + 1;
        let mut table = vec![0; m * m];
        for s in 0..m {
            for t in 0..m {
                table[s * m + t] = match (s == n, t == n) {
                    (true, _) => t,
                    (_, true) => s,
                    _ => self.mul(s, t),
                };
            }
        }
        let mut generators = self.generators.clone();
        generators.push(n);
        let gen_words = self.gen_words.as_ref().map(|gw| {
            let mut words = gw.words.clone();
            words.push(Vec::new());
            GenWords {
                labels: gw.labels.clone(),
                words,
            }
        });
        FiniteSemigroup {
            order: m,
            table,
            identity: Some(n),
            generators,
            gen_words,
        }
    }

    /// The subsemigroup on `elements` (must be closed under multiplication).
    pub fn subsemigroup(&self, elements: &[usize]) -> Result<Subsemigroup> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        let mut local = vec![usize::MAX; self.order];
        for (i, &s) in elements.iter().enumerate() {
            if s >= self.order {
                return Err(Error::IndexOutOfRange {
                    index: s,
                    order: self.order,
                });
            }
            local[s] = i;
        }
        let k = elements.len();
        let mut table = Vec::with_capacity(k * k);
        for &s in &elements {
            for &t in &elements {
                let st = self.mul(s, t);
                if local[st] == usize::MAX {
                    return Err(Error::NotClosed(s, t));
                }
                table.push(local[st]);
            }
        }
        let semigroup = FiniteSemigroup::from_flat(k, table, None)?;
        Ok(Subsemigroup {
            semigroup,
            elements,
        })
    }

    /// Whether `elements` is closed under multiplication.
    pub fn is_closed(&self, elements: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &s in elements {
            member[s] = true;
        }
        elements
            .iter()
            .all(|&s| elements.iter().all(|&t| member[self.mul(s, t)]))
    }

    /// Checks that `map` is a morphism into `target`.
    pub fn check_morphism(&self, target: &FiniteSemigroup, map: &[usize]) -> Result<()> {
        if map.len() != self.order {
            return Err(Error::DimensionMismatch {
                expected: self.order,
                found: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.order) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                order: target.order,
            });
        }
        for s in self.elements() {
            for t in self.elements() {
                if map[self.mul(s, t)] != target.mul(map[s], map[t]) {
                    return Err(Error::NotMorphism(s, t));
                }
            }
        }
        Ok(())
    }
}

/// A subsemigroup together with its embedding into the ambient semigroup.
#[derive(Clone, Debug)]
pub struct Subsemigroup {
    pub semigroup: FiniteSemigroup,
    /// `elements[i]` is the ambient index of local element `i` (sorted).
    pub elements: Vec<usize>,
}

/// Greedy generating set: scan in index order, keeping every element not yet
/// reachable by right multiplication from the kept ones.
fn greedy_generators(order: usize, table: &[usize]) -> Vec<usize> {
    let mut reached = vec![false; order];
    let mut gens: Vec<usize> = Vec::new();
    for s in 0..order {
        if reached[s] {
            continue;
        }
        gens.push(s);
        // Re-run the closure from scratch: new generator may extend old words.
        reached.iter_mut().for_each(|r| *r = false);
        let mut queue: VecDeque<usize> = VecDeque::new();
        for &g in &gens {
            if !reached[g] {
                reached[g] = true;
                queue.push_back(g);
            }
        }
        while let Some(x) = queue.pop_front() {
            for &g in &gens {
                let y = table[x * order + g];
                if !reached[y] {
                    reached[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    gens
}

/// Breadth-first closure of a generating set under an associative product.
pub(crate) struct Closure<T> {
    pub elements: Vec<T>,
    pub semigroup: FiniteSemigroup,
}

pub(crate) fn close<T, F>(
    labels: Vec<String>,
    gens: &[T],
    identity: Option<T>,
    mul: F,
    cap: usize,
) -> Result<Closure<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut g = Growing {
        index: HashMap::new(),
        elements: Vec::new(),
        words: Vec::new(),
        parent: Vec::new(),
        cap,
    };
    let mut gen_elem = vec![0usize; gens.len()];
    let identity_idx = match identity {
        Some(e) => Some(g.push(e, Vec::new(), None)?),
        None => None,
    };
    for (gi, x) in gens.iter().enumerate() {
        gen_elem[gi] = g.push(x.clone(), vec![gi], identity_idx.map(|e| (e, gi)))?;
    }
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    while next < g.elements.len() {
        let x = g.elements[next].clone();
        let mut row = Vec::with_capacity(gens.len());
        for (gi, a) in gens.iter().enumerate() {
            let mut w = g.words[next].clone();
            w.push(gi);
            row.push(g.push(mul(&x, a), w, Some((next, gi)))?);
        }
        right.push(row);
        next += 1;
    }
    let Growing {
        elements,
        words,
        parent,
        ..
    } = g;

    let n = elements.len();
    let mut table = vec![0usize; n * n];
    // t in discovery order; each non-root t = u*g with u discovered earlier.
    for t in 0..n {
        match parent[t] {
            None if Some(t) == identity_idx => {
                for s in 0..n {
                    table[s * n + t] = s;
                }
            }
            None => {
                let gi = words[t][0];
                for s in 0..n {
                    table[s * n + t] = right[s][gi];
                }
            }
            Some((u, gi)) => {
                for s in 0..n {
                    table[s * n + t] = right[table[s * n + u]][gi];
                }
            }
        }
    }
    let mut generators: Vec<usize> = gen_elem.clone();
    generators.sort_unstable();
    generators.dedup();
    let semigroup = FiniteSemigroup {
        order: n,
        table,
        identity: identity_idx,
        generators,
        gen_words: Some(GenWords { labels, words }),
    };
    semigroup.check_associative()?;
    let semigroup = semigroup.with_identity(identity_idx)?;
    Ok(Closure {
        elements,
        semigroup,
    })
}

struct Growing<T> {
    index: HashMap<T, usize>,
    elements: Vec<T>,
    words: Vec<Vec<usize>>,
    /// `parent[t] = (u, g)` when `t = u * gens[g]`; `None` for roots.
    parent: Vec<Option<(usize, usize)>>,
    cap: usize,
}

impl<T: Clone + Eq + Hash> Growing<T> {
    fn push(&mut self, x: T, word: Vec<usize>, parent: Option<(usize, usize)>) -> Result<usize> {
        if let Some(&i) = self.index.get(&x) {
            return Ok(i);
        }
        if self.elements.len() >= self.cap {
            return Err(Error::CapExceeded(self.cap));
        }
        let i = self.elements.len();
        self.index.insert(x.clone(), i);
        self.elements.push(x);
        self.words.push(word);
        self.parent.push(parent);
        Ok(i)
    }
}

/// A transformation semigroup that keeps the underlying maps.
#[derive(Clone, Debug)]
pub struct TransformationSemigroup {
    pub degree: usize,
    pub semigroup: FiniteSemigroup,
    /// `maps[s][q]` is the image of state `q` under element `s`.
    pub maps: Vec<Vec<usize>>,
}

impl TransformationSemigroup {
    /// Closure of the labelled generators; with `monoid` the identity map is
    /// element 0 even if it is not generated.
    pub fn generate(
        degree: usize,
        generators: &[(String, Vec<usize>)],
        monoid: bool,
        cap: usize,
    ) -> Result<Self> {
        for (label, map) in generators {
            if map.len() != degree {
                return Err(Error::InvalidAutomaton(format!(
                    "generator {label} has {} images, expected {degree}",
                    map.len()
                )));
            }
            if let Some(&q) = map.iter().find(|&&q| q >= degree) {
                return Err(Error::IndexOutOfRange {
                    index: q,
                    order: degree,
                });
            }
        }
        if generators.is_empty() && !monoid {
            return Err(Error::InvalidAutomaton("no generators".into()));
        }
        let labels = generators.iter().map(|(l, _)| l.clone()).collect();
        let maps: Vec<Vec<usize>> = generators.iter().map(|(_, m)| m.clone()).collect();
        let identity = monoid.then(|| (0..degree).collect::<Vec<_>>());
        let closure = close(labels, &maps, identity, |a, b| compose(a, b), cap)?;
        Ok(TransformationSemigroup {
            degree,
            semigroup: closure.semigroup,
            maps: closure.elements,
        })
    }

    pub fn rank(&self, s: usize) -> usize {
        let mut img = self.maps[s].clone();
        img.sort_unstable();
        img.dedup();
        img.len()
    }

    pub fn is_constant(&self, s: usize) -> bool {
        self.rank(s) <= 1
    }
}

/// Left-to-right composition: first `a`, then `b`.
pub fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().map(|&q| b[q]).collect()
}
