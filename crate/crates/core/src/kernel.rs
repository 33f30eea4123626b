//! Local monoids of the kernel category of a monoid morphism.

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

/// The local monoid at the object `(n_left, n_right)` of the kernel category
/// of `phi: S -> T`.
///
/// Arrows are the `m` with `n_left (m phi) = n_left` and `(m phi) n_right =
/// n_right`; two arrows are identified when `a m b = a m' b` for every `a` in
/// the preimage of `n_left` and `b` in the preimage of `n_right`.
pub fn kernel_category_local_monoid(
    s: &FiniteSemigroup,
    t: &FiniteSemigroup,
    phi: &[usize],
    n_left: usize,
    n_right: usize,
) -> Result<FiniteSemigroup> {
    s.check_morphism(t, phi)?;
    let (Some(one), Some(t_one)) = (s.identity(), t.identity()) else {
        return Err(Error::NotMonoid);
    };
    if phi[one] != t_one {
        return Err(Error::NotMonoid);
    }
    let mut hit = vec![false; t.order()];
    phi.iter().for_each(|&x| hit[x] = true);
    if let Some(miss) = hit.iter().position(|&h| !h) {
        return Err(Error::NotSurjective(miss));
    }
    for n in [n_left, n_right] {
        if n >= t.order() {
            return Err(Error::IndexOutOfRange {
                index: n,
                order: t.order(),
            });
        }
    }
    let left_pre: Vec<usize> = s.elements().filter(|&m| phi[m] == n_left).collect();
    let right_pre: Vec<usize> = s.elements().filter(|&m| phi[m] == n_right).collect();
    let loops: Vec<usize> = s
        .elements()
        .filter(|&m| t.mul(n_left, phi[m]) == n_left && t.mul(phi[m], n_right) == n_right)
        .collect();
    let signature = |m: usize| -> Vec<usize> {
        left_pre
            .iter()
            .flat_map(|&a| right_pre.iter().map(move |&b| s.mul(s.mul(a, m), b)))
            .collect()
    };
    let mut sigs: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![usize::MAX; s.order()];
    let mut reps: Vec<usize> = Vec::new();
    for &m in &loops {
        let sig = signature(m);
        let c = match sigs.iter().position(|x| *x == sig) {
            Some(c) => c,
            None => {
                sigs.push(sig);
                reps.push(m);
                sigs.len() - 1
            }
        };
        class_of[m] = c;
    }
    let k = reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &reps {
        for &b in &reps {
            table.push(class_of[s.mul(a, b)]);
        }
    }
    FiniteSemigroup::from_flat(k, table, Some(class_of[one]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn identity_morphism_collapses_every_local_monoid() {
        let t2 = corpus::t2();
        let id: Vec<usize> = t2.elements().collect();
        for nl in 0..4 {
            for nr in 0..4 {
                let k = kernel_category_local_monoid(&t2, &t2, &id, nl, nr).unwrap();
                assert_eq!(k.order(), 1);
            }
        }
    }

    #[test]
    fn morphism_to_trivial_monoid_recovers_the_monoid() {
        let triv = corpus::trivial();
        for m in [corpus::t2(), corpus::cyclic(2), corpus::b2_1()] {
            let phi = vec![0; m.order()];
            let k = kernel_category_local_monoid(&m, &triv, &phi, 0, 0).unwrap();
            assert_eq!(k.order(), m.order());
        }
    }

    #[test]
    fn rejects_non_monoids_and_bad_maps() {
        let b2 = corpus::b2();
        let triv = corpus::trivial();
        assert!(matches!(
            kernel_category_local_monoid(&b2, &triv, &[0; 5], 0, 0),
            Err(Error::NotMonoid)
        ));
        let z2 = corpus::cyclic(2);
        assert!(matches!(
            kernel_category_local_monoid(&triv, &z2, &[0], 0, 0),
            Err(Error::NotSurjective(1))
        ));
        assert!(matches!(
            kernel_category_local_monoid(&z2, &z2, &[1, 1], 0, 0),
            Err(Error::NotMorphism(..))
        ));
    }
}
