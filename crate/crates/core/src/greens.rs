//! Green's relations, computed as strongly connected components of the right,
//! left and two-sided Cayley graphs over a generating set.

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::error::{Error, Result};
use crate::group::SubgroupTable;
use crate::semigroup::FiniteSemigroup;
use crate::witness::{Verdict, Witness};

#[derive(Clone, Debug)]
pub struct GreensStructure {
    /// Class id of each element; ids are numbered by least member.
    pub r_of: Vec<usize>,
    pub l_of: Vec<usize>,
    pub j_of: Vec<usize>,
    pub h_of: Vec<usize>,
    pub r_classes: Vec<Vec<usize>>,
    pub l_classes: Vec<Vec<usize>>,
    pub j_classes: Vec<Vec<usize>>,
    pub h_classes: Vec<Vec<usize>>,
    /// `j_le[a][b]` iff `J_a <= J_b`.
    j_le: Vec<Vec<bool>>,
    /// Whether each J-class contains an idempotent.
    pub regular: Vec<bool>,
    pub idempotents: Vec<usize>,
}

enum Side {
    Right,
    Left,
    Both,
}

fn components(s: &FiniteSemigroup, side: Side) -> Vec<usize> {
    let n = s.order();
    let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, n * s.generators().len() * 2);
    let nodes: Vec<_> = (0..n).map(|_| g.add_node(())).collect();
    for x in 0..n {
        for &a in s.generators() {
            if matches!(side, Side::Right | Side::Both) {
                g.add_edge(nodes[x], nodes[s.mul(x, a)], ());
            }
            if matches!(side, Side::Left | Side::Both) {
                g.add_edge(nodes[x], nodes[s.mul(a, x)], ());
            }
        }
    }
    let mut raw = vec![0; n];
    for (c, comp) in tarjan_scc(&g).into_iter().enumerate() {
        for v in comp {
            raw[v.index()] = c;
        }
    }
    renumber(&raw)
}

/// Relabels class ids in order of first appearance.
pub(crate) fn renumber(raw: &[usize]) -> Vec<usize> {
    let mut map = std::collections::HashMap::new();
    raw.iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

pub(crate) fn classes_of(of: &[usize]) -> Vec<Vec<usize>> {
    let k = of.iter().copied().max().map_or(0, |m| m + 1);
    let mut classes = vec![Vec::new(); k];
    for (x, &c) in of.iter().enumerate() {
        classes[c].push(x);
    }
    classes
}

impl GreensStructure {
    pub fn new(s: &FiniteSemigroup) -> Self {
        let n = s.order();
        let r_of = components(s, Side::Right);
        let l_of = components(s, Side::Left);
        let j_of = components(s, Side::Both);
        let pairs: Vec<usize> = (0..n).map(|x| r_of[x] * n + l_of[x]).collect();
        let h_of = renumber(&pairs);

        let j_classes = classes_of(&j_of);
        let k = j_classes.len();
        // Reachability between J-classes: J_x <= J_y iff x lies in S^1 y S^1.
        let mut j_le = vec![vec![false; k]; k];
        for b in 0..k {
            let mut stack = vec![b];
            j_le[b][b] = true;
            while let Some(c) = stack.pop() {
                for &x in &j_classes[c] {
                    for &a in s.generators() {
                        for y in [s.mul(x, a), s.mul(a, x)] {
                            let d = j_of[y];
                            if !j_le[d][b] {
                                j_le[d][b] = true;
                                stack.push(d);
                            }
                        }
                    }
                }
            }
        }
        let idempotents = s.idempotents();
        let mut regular = vec![false; k];
        for &e in &idempotents {
            regular[j_of[e]] = true;
        }
        GreensStructure {
            r_classes: classes_of(&r_of),
            l_classes: classes_of(&l_of),
            h_classes: classes_of(&h_of),
            j_classes,
            r_of,
            l_of,
            j_of,
            h_of,
            j_le,
            regular,
            idempotents,
        }
    }

    pub fn j_count(&self) -> usize {
        self.j_classes.len()
    }

    /// `J_a <= J_b` for J-class ids.
    pub fn j_le(&self, a: usize, b: usize) -> bool {
        self.j_le[a][b]
    }

    pub fn regular_j_classes(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.j_count()).filter(|&j| self.regular[j])
    }

    pub fn is_regular_element(&self, x: usize) -> bool {
        self.regular[self.j_of[x]]
    }

    /// R-class ids inside a J-class, in order of least member.
    pub fn r_classes_in(&self, j: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.j_classes[j].iter().map(|&x| self.r_of[x]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    pub fn l_classes_in(&self, j: usize) -> Vec<usize> {
        let mut ids: Vec<usize> = self.j_classes[j].iter().map(|&x| self.l_of[x]).collect();
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// `e <= f` in the natural order on idempotents: `ef = fe = e`.
    pub fn idempotent_le(s: &FiniteSemigroup, e: usize, f: usize) -> bool {
        s.mul(e, f) == e && s.mul(f, e) == e
    }

    /// The J-class that lies below every other one.
    pub fn minimal_j_class(&self) -> usize {
        (0..self.j_count())
            .find(|&a| (0..self.j_count()).all(|b| self.j_le(a, b)))
            .expect("a finite semigroup has a minimal ideal")
    }
}

pub fn greens(s: &FiniteSemigroup) -> GreensStructure {
    GreensStructure::new(s)
}

/// `H_e` with identity `e`.
pub fn maximal_subgroup(s: &FiniteSemigroup, g: &GreensStructure, e: usize) -> Result<SubgroupTable> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    SubgroupTable::from_subset(s, &g.h_classes[g.h_of[e]])
}

/// `eSe` with identity `e`.
pub fn local_monoid(s: &FiniteSemigroup, e: usize) -> Result<crate::semigroup::Subsemigroup> {
    if !s.is_idempotent(e) {
        return Err(Error::NotIdempotent(e));
    }
    let elems: Vec<usize> = s.elements().map(|x| s.mul(s.mul(e, x), e)).collect();
    s.subsemigroup(&elems)
}

/// `S ⊇ S^2 ⊇ ...` up to and including the first repeated power.
pub fn power_ideals(s: &FiniteSemigroup) -> Vec<Vec<usize>> {
    let mut chain = vec![s.elements().collect::<Vec<_>>()];
    loop {
        let last = chain.last().unwrap();
        let next = product_set(s, last, &s.elements().collect::<Vec<_>>());
        if &next == last {
            return chain;
        }
        chain.push(next);
    }
}

/// `S^k` for `k >= 1`.
pub fn power(s: &FiniteSemigroup, k: usize) -> Vec<usize> {
    let chain = power_ideals(s);
    chain[(k - 1).min(chain.len() - 1)].clone()
}

/// `{ab : a in A, b in B}`, sorted.
pub fn product_set(s: &FiniteSemigroup, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut member = vec![false; s.order()];
    for &x in a {
        for &y in b {
            member[s.mul(x, y)] = true;
        }
    }
    (0..s.order()).filter(|&x| member[x]).collect()
}

pub fn minimal_ideal(_s: &FiniteSemigroup, g: &GreensStructure) -> Vec<usize> {
    g.j_classes[g.minimal_j_class()].clone()
}

pub fn is_simple(g: &GreensStructure) -> bool {
    g.j_count() == 1
}

/// A zero, a nonzero product, and no ideals besides `{0}` and `S`.
pub fn is_0_simple(s: &FiniteSemigroup, g: &GreensStructure) -> bool {
    let Some(z) = s.zero() else { return false };
    s.order() > 1
        && g.j_count() == 2
        && s.elements().any(|x| s.elements().any(|y| s.mul(x, y) != z))
}

/// Local groups whose maximal subgroups satisfy `group_ok`.
///
/// A semigroup is a local group iff it contains no two distinct idempotents
/// `e < f`. The witness is the least such pair, or the least idempotent whose
/// maximal subgroup fails `group_ok`.
pub fn is_local_group(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    group_ok: &dyn Fn(&SubgroupTable) -> bool,
) -> Verdict {
    if let Some(w) = semilattice_pair(s, g) {
        return Verdict::no(w);
    }
    for &e in &g.idempotents {
        let h = maximal_subgroup(s, g, e).expect("idempotent");
        if !group_ok(&h) {
            return Verdict::no(Witness::Subgroup {
                idempotent: e,
                order: h.order(),
                reason: "maximal subgroup outside the group variety",
            });
        }
    }
    debug_assert!(local_monoids_are_groups(s, g));
    debug_assert!(power_equals_minimal_ideal(s, g));
    Verdict::yes()
}

/// The least pair of idempotents `lower < upper`, if any.
pub fn semilattice_pair(s: &FiniteSemigroup, g: &GreensStructure) -> Option<Witness> {
    for &f in &g.idempotents {
        for &e in &g.idempotents {
            if e != f && GreensStructure::idempotent_le(s, e, f) {
                return Some(Witness::Semilattice { upper: f, lower: e });
            }
        }
    }
    None
}

/// Every local monoid `eSe` is a group.
pub fn local_monoids_are_groups(s: &FiniteSemigroup, g: &GreensStructure) -> bool {
    g.idempotents.iter().all(|&e| {
        let h = &g.h_classes[g.h_of[e]];
        s.elements()
            .all(|x| h.binary_search(&s.mul(s.mul(e, x), e)).is_ok())
    })
}

/// `S^n` (for `n = |S|`) is a simple semigroup.
pub fn power_is_simple(s: &FiniteSemigroup) -> bool {
    let sn = power(s, s.order());
    let sub = s.subsemigroup(&sn).expect("powers are ideals");
    is_simple(&greens(&sub.semigroup))
}

/// `S^n` equals the minimal ideal.
pub fn power_equals_minimal_ideal(s: &FiniteSemigroup, g: &GreensStructure) -> bool {
    power(s, s.order()) == minimal_ideal(s, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn full_transformation_monoid_on_two_points() {
        let t2 = corpus::t2();
        let g = greens(&t2);
        // Elements: 0 = id, 1 = swap, 2 = const0, 3 = const1.
        assert_eq!(g.j_classes, vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(g.r_of[2], g.r_of[3]);
        assert_ne!(g.l_of[2], g.l_of[3]);
        assert!(g.regular.iter().all(|&r| r));
        assert!(g.j_le(1, 0) && !g.j_le(0, 1));
        let h = maximal_subgroup(&t2, &g, 0).unwrap();
        assert_eq!(h.carrier(), &[0, 1]);
        assert_eq!(maximal_subgroup(&t2, &g, 2).unwrap().order(), 1);
        assert!(matches!(maximal_subgroup(&t2, &g, 1), Err(Error::NotIdempotent(1))));
    }

    #[test]
    fn brandt_monoid_b2() {
        let b2 = corpus::b2();
        let g = greens(&b2);
        assert_eq!(g.j_count(), 2);
        let z = b2.zero().unwrap();
        let top = g.j_of[(0..5).find(|&x| x != z).unwrap()];
        assert_eq!(g.j_classes[top].len(), 4);
        assert!(g.regular[top]);
        assert_eq!(g.r_classes_in(top).len(), 2);
        assert_eq!(g.l_classes_in(top).len(), 2);
        assert!(g.h_classes.iter().all(|h| h.len() == 1));
        assert_eq!(minimal_ideal(&b2, &g), vec![z]);
        assert!(is_0_simple(&b2, &g));
        assert!(!is_simple(&g));
    }

    #[test]
    fn groups_are_simple() {
        for s in [corpus::cyclic(4), corpus::s3()] {
            let g = greens(&s);
            assert!(is_simple(&g));
            assert_eq!(g.h_classes.len(), 1);
        }
    }

    #[test]
    fn rectangular_band_and_u1() {
        let rb = corpus::rectangular_band(2, 2);
        let g = greens(&rb);
        assert!(is_simple(&g));
        assert_eq!(minimal_ideal(&rb, &g).len(), 4);
        assert_eq!(maximal_subgroup(&rb, &g, 0).unwrap().order(), 1);
        assert_eq!(local_monoid(&rb, 0).unwrap().elements, vec![0]);
        assert!(is_local_group(&rb, &g, &|h| h.is_trivial()).holds);

        let u1 = corpus::u1();
        let g = greens(&u1);
        assert_eq!(minimal_ideal(&u1, &g), vec![0]);
        assert!(!is_simple(&g));
        assert_eq!(local_monoid(&u1, 1).unwrap().elements, vec![0, 1]);
        assert_eq!(
            is_local_group(&u1, &g, &|h| h.is_trivial()).witness,
            Some(Witness::Semilattice { upper: 1, lower: 0 })
        );
    }

    #[test]
    fn local_group_with_p_group_predicate() {
        let z4 = corpus::cyclic(4);
        let g = greens(&z4);
        assert!(is_local_group(&z4, &g, &|h| h.is_p_group(2)).holds);
        assert!(!is_local_group(&z4, &g, &|h| h.is_p_group(3)).holds);
    }

    #[test]
    fn power_chains() {
        let z3 = corpus::cyclic(3);
        assert_eq!(power_ideals(&z3), vec![vec![0, 1, 2]]);
        let null = corpus::null2();
        let chain = power_ideals(&null);
        assert_eq!(chain.last().unwrap(), &vec![null.zero().unwrap()]);
        // A monoid equals its own square.
        let m = crate::semigroup::TransformationSemigroup::generate(
            3,
            &[("a".into(), vec![0, 0, 2]), ("b".into(), vec![0, 1, 1])],
            true,
            100,
        )
        .unwrap()
        .semigroup;
        assert_eq!(power_ideals(&m).len(), 1);
        let g = greens(&m);
        assert_eq!(minimal_ideal(&m, &g), vec![4]);
    }

    #[test]
    fn monogenic_index_two_period_one() {
        let m = corpus::monogenic_a3_a2();
        let chain = power_ideals(&m);
        assert_eq!(chain.len(), 2);
        assert_eq!(chain[1], vec![1]);
    }

    /// Principal ideals computed as explicit sets.
    fn ideal_oracle(s: &FiniteSemigroup) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<Vec<usize>>) {
        let s1: Vec<Option<usize>> = std::iter::once(None).chain(s.elements().map(Some)).collect();
        let times = |a: Option<usize>, b: usize| a.map_or(b, |a| s.mul(a, b));
        let times_r = |b: usize, a: Option<usize>| a.map_or(b, |a| s.mul(b, a));
        let set = |v: Vec<usize>| {
            let mut v = v;
            v.sort_unstable();
            v.dedup();
            v
        };
        let right = s.elements().map(|x| set(s1.iter().map(|&u| times_r(x, u)).collect())).collect();
        let left = s.elements().map(|x| set(s1.iter().map(|&u| times(u, x)).collect())).collect();
        let two = s
            .elements()
            .map(|x| {
                set(s1
                    .iter()
                    .flat_map(|&u| s1.iter().map(move |&v| (u, v)))
                    .map(|(u, v)| times_r(times(u, x), v))
                    .collect())
            })
            .collect();
        (right, left, two)
    }

    #[test]
    fn scc_classes_match_principal_ideals() {
        for (_, s) in corpus::standard() {
            let g = greens(&s);
            let (right, left, two) = ideal_oracle(&s);
            for x in s.elements() {
                for y in s.elements() {
                    assert_eq!(g.r_of[x] == g.r_of[y], right[x] == right[y]);
                    assert_eq!(g.l_of[x] == g.l_of[y], left[x] == left[y]);
                    assert_eq!(g.j_of[x] == g.j_of[y], two[x] == two[y]);
                    let le = two[y].contains(&x);
                    assert_eq!(g.j_le(g.j_of[x], g.j_of[y]), le);
                }
            }
        }
    }
}
