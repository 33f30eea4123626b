//! Finite groups sitting inside a semigroup (maximal subgroups and their
//! subgroups), stored with local indices `0..order`.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupTable {
    /// Ambient element of each local index, sorted increasingly.
    carrier: Vec<usize>,
    identity: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl SubgroupTable {
    /// The group on `elements` under the ambient product.
    pub fn from_subset(s: &FiniteSemigroup, elements: &[usize]) -> Result<Self> {
        let mut carrier = elements.to_vec();
        carrier.sort_unstable();
        carrier.dedup();
        let k = carrier.len();
        let local = |x: usize| carrier.binary_search(&x).ok();
        let mut table = Vec::with_capacity(k * k);
        for &a in &carrier {
            for &b in &carrier {
                let ab = s.mul(a, b);
                table.push(local(ab).ok_or(Error::NotClosed(a, b))?);
            }
        }
        let identity = (0..k)
            .find(|&e| (0..k).all(|x| table[e * k + x] == x && table[x * k + e] == x))
            .ok_or(Error::NotMonoid)?;
        let mut inverse = vec![usize::MAX; k];
        for x in 0..k {
            inverse[x] = (0..k)
                .find(|&y| table[x * k + y] == identity && table[y * k + x] == identity)
                .ok_or(Error::NotRegular(carrier[x]))?;
        }
        Ok(SubgroupTable {
            carrier,
            identity,
            table,
            inverse,
        })
    }

    /// A semigroup that is a group, with carrier `0..order`.
    pub fn from_group(s: &FiniteSemigroup) -> Result<Self> {
        Self::from_subset(s, &s.elements().collect::<Vec<_>>())
    }

    pub fn order(&self) -> usize {
        self.carrier.len()
    }

    /// Ambient elements, indexed by local index.
    pub fn carrier(&self) -> &[usize] {
        &self.carrier
    }

    /// Ambient index of the identity.
    pub fn identity(&self) -> usize {
        self.carrier[self.identity]
    }

    pub fn local_identity(&self) -> usize {
        self.identity
    }

    /// Local index of an ambient element.
    pub fn position(&self, ambient: usize) -> Option<usize> {
        self.carrier.binary_search(&ambient).ok()
    }

    pub fn contains(&self, ambient: usize) -> bool {
        self.position(ambient).is_some()
    }

    /// Ambient inverse of an ambient element of the group.
    pub fn inverse(&self, ambient: usize) -> Option<usize> {
        self.position(ambient)
            .map(|x| self.carrier[self.inverse[x]])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|a| self.element_order(a))
            .fold(1, |acc, o| acc.lcm(&o))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order() as u64, p)
    }

    /// Subgroup generated by local elements (sorted local indices).
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut conj: Vec<usize> = Vec::new();
        for &g in gens {
            for h in self.elements() {
                conj.push(self.mul(self.mul(self.inv(h), g), h));
            }
        }
        conj.sort_unstable();
        conj.dedup();
        self.generated(&conj)
    }

    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        subset.iter().for_each(|&x| member[x] = true);
        member[self.identity]
            && subset
                .iter()
                .all(|&a| member[self.inv(a)] && subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    pub fn is_normal(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        subset.iter().for_each(|&x| member[x] = true);
        self.is_subgroup(subset)
            && subset.iter().all(|&n| {
                self.elements()
                    .all(|g| member[self.mul(self.mul(self.inv(g), n), g)])
            })
    }

    /// Left coset id `gN` for each local element; ids numbered by least member.
    pub fn cosets(&self, normal: &[usize]) -> Vec<usize> {
        let mut id = vec![usize::MAX; self.order()];
        let mut next = 0;
        for g in self.elements() {
            if id[g] != usize::MAX {
                continue;
            }
            for &n in normal {
                id[self.mul(g, n)] = next;
            }
            next += 1;
        }
        id
    }

    /// Exponent of `G/N`.
    pub fn quotient_exponent(&self, normal: &[usize]) -> usize {
        let mut member = vec![false; self.order()];
        normal.iter().for_each(|&x| member[x] = true);
        self.elements()
            .map(|g| {
                let mut x = g;
                let mut k = 1;
                while !member[x] {
                    x = self.mul(x, g);
                    k += 1;
                }
                k
            })
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Whether `G/N` is abelian, i.e. every commutator lies in `N`.
    pub fn quotient_is_abelian(&self, normal: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        normal.iter().for_each(|&x| member[x] = true);
        self.elements().all(|a| {
            self.elements().all(|b| {
                let c = self.mul(
                    self.mul(self.inv(a), self.inv(b)),
                    self.mul(a, b),
                );
                member[c]
            })
        })
    }

    /// `O_p(G)`, the largest normal `p`-subgroup, as sorted local indices.
    ///
    /// An element lies in `O_p(G)` exactly when the normal closure of the
    /// cyclic group it generates is a `p`-group.
    pub fn largest_normal_p_subgroup(&self, p: u64) -> Vec<usize> {
        let good: Vec<usize> = self
            .elements()
            .filter(|&x| {
                is_power_of(self.element_order(x) as u64, p)
                    && is_power_of(self.normal_closure(&[x]).len() as u64, p)
            })
            .collect();
        self.generated(&good)
    }

    /// The subgroup on local indices `subset`, keeping ambient labels.
    pub fn restrict(&self, subset: &[usize]) -> SubgroupTable {
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        let k = subset.len();
        let pos = |x: usize| subset.binary_search(&x).expect("subset is a subgroup");
        let mut table = Vec::with_capacity(k * k);
        for &a in &subset {
            for &b in &subset {
                table.push(pos(self.mul(a, b)));
            }
        }
        SubgroupTable {
            carrier: subset.iter().map(|&x| self.carrier[x]).collect(),
            identity: pos(self.identity),
            table,
            inverse: subset.iter().map(|&x| pos(self.inv(x))).collect(),
        }
    }

    /// The group as a standalone semigroup on local indices.
    pub fn as_semigroup(&self) -> FiniteSemigroup {
        FiniteSemigroup::from_flat(self.order(), self.table.clone(), Some(self.identity))
            .expect("group tables are associative")
    }
}

/// `n == p^k` for some `k >= 0`.
pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n % p == 0 {
        n /= p;
    }
    n == 1
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// The cyclic group `Z/n` as a table with identity 0.
pub fn cyclic_group(n: usize) -> FiniteSemigroup {
    let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteSemigroup::from_flat(n, table, Some(0)).expect("cyclic table")
}

/// The symmetric group on three points, elements listed as permutations in
/// lexicographic order, composition left to right. Element 0 is the identity.
pub fn symmetric_group_3() -> FiniteSemigroup {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let mut table = Vec::with_capacity(36);
    for a in &perms {
        for b in &perms {
            table.push(idx([b[a[0]], b[a[1]], b[a[2]]]));
        }
    }
    FiniteSemigroup::from_flat(6, table, Some(0)).expect("S3 table")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(s: &FiniteSemigroup) -> SubgroupTable {
        SubgroupTable::from_group(s).unwrap()
    }

    #[test]
    fn cyclic_orders_and_exponents() {
        let z6 = group(&cyclic_group(6));
        assert_eq!(z6.exponent(), 6);
        assert_eq!(z6.element_order(2), 3);
        assert!(z6.is_abelian());
        assert_eq!(z6.largest_normal_p_subgroup(2), vec![0, 3]);
        assert_eq!(z6.largest_normal_p_subgroup(3), vec![0, 2, 4]);
        assert_eq!(z6.largest_normal_p_subgroup(5), vec![0]);
    }

    #[test]
    fn largest_normal_p_subgroups_of_s3() {
        let s3 = group(&symmetric_group_3());
        assert!(!s3.is_abelian());
        assert_eq!(s3.largest_normal_p_subgroup(2), vec![0]);
        // The 3-cycles are elements 3 and 4.
        assert_eq!(s3.largest_normal_p_subgroup(3), vec![0, 3, 4]);
        assert!(s3.is_normal(&[0, 3, 4]));
        assert!(!s3.is_normal(&[0, 1]));
        assert!(s3.quotient_is_abelian(&[0, 3, 4]));
        assert_eq!(s3.quotient_exponent(&[0, 3, 4]), 2);
        assert_eq!(s3.cosets(&[0, 3, 4]), vec![0, 1, 1, 0, 0, 1]);
    }

    #[test]
    fn z4_is_a_2_group() {
        let z4 = group(&cyclic_group(4));
        assert!(z4.is_p_group(2));
        assert_eq!(z4.largest_normal_p_subgroup(2).len(), 4);
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(1), None);
        assert!(is_prime(7) && !is_prime(9));
        assert!(is_power_of(1, 3) && is_power_of(27, 3) && !is_power_of(12, 2));
    }
}
