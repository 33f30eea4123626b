//! Generalized group mapping (GGM) congruences attached to a regular J-class.
//!
//! For a regular J-class `J` with maximal subgroup `G_J = R_1 ∩ L_1`, pick
//! `r_a` with `s ↦ r_a s` a bijection `R_a → R_1` for every R-class `R_a ⊆ J`
//! and `l_b` with `s ↦ s l_b` a bijection `L_b → L_1`. Then `s ≡ t` when for
//! all `x ∈ R_a, y ∈ L_b` in `J` either both `xsy, xty` leave `J`, or both
//! stay and `r_a xsy l_b N = r_a xty l_b N`.

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::greens::GreensStructure;
use crate::group::SubgroupTable;
use crate::semigroup::FiniteSemigroup;

/// The choices entering the GGM congruence of one J-class.
#[derive(Clone, Debug)]
pub struct GgmCoordinates {
    pub j_class: usize,
    /// Idempotent of `G_J`; `R_1 = R_e` and `L_1 = L_e`.
    pub idempotent: usize,
    pub base_group: SubgroupTable,
    /// R-class ids of `J` and the matching `r_a`.
    pub r_classes: Vec<usize>,
    pub r_coords: Vec<usize>,
    pub l_classes: Vec<usize>,
    pub l_coords: Vec<usize>,
}

/// Coordinates plus a normal subgroup `N` of `G_J`, in ambient indices.
#[derive(Clone, Debug)]
pub struct GgmData {
    pub coords: GgmCoordinates,
    pub normal_subgroup: Vec<usize>,
}

fn regular_class(g: &GreensStructure, j: usize) -> Result<()> {
    if j >= g.j_count() {
        return Err(Error::IndexOutOfRange {
            index: j,
            order: g.j_count(),
        });
    }
    if !g.regular[j] {
        return Err(Error::NotRegular(j));
    }
    Ok(())
}

/// Elements `x` of `J` for which `s ↦ x s` maps the R-class `from` onto the
/// R-class of `e` bijectively.
pub fn valid_r_coords(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    j: usize,
    e: usize,
    from: usize,
) -> Vec<usize> {
    let target = g.r_of[e];
    let domain = &g.r_classes[from];
    g.j_classes[j]
        .iter()
        .copied()
        .filter(|&x| is_bijection(domain.iter().map(|&t| s.mul(x, t)), &g.r_of, target, g.r_classes[target].len()))
        .collect()
}

/// Elements `y` of `J` with `s ↦ s y` a bijection from L-class `from` onto `L_e`.
pub fn valid_l_coords(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    j: usize,
    e: usize,
    from: usize,
) -> Vec<usize> {
    let target = g.l_of[e];
    let domain = &g.l_classes[from];
    g.j_classes[j]
        .iter()
        .copied()
        .filter(|&y| is_bijection(domain.iter().map(|&t| s.mul(t, y)), &g.l_of, target, g.l_classes[target].len()))
        .collect()
}

fn is_bijection(
    image: impl Iterator<Item = usize>,
    class_of: &[usize],
    target: usize,
    target_size: usize,
) -> bool {
    let mut img: Vec<usize> = Vec::new();
    for x in image {
        if class_of[x] != target {
            return false;
        }
        img.push(x);
    }
    let len = img.len();
    img.sort_unstable();
    img.dedup();
    img.len() == len && len == target_size
}

impl GgmCoordinates {
    /// The least idempotent of the least R-class, and least valid `r_a`, `l_b`.
    pub fn canonical(s: &FiniteSemigroup, g: &GreensStructure, j: usize) -> Result<Self> {
        regular_class(g, j)?;
        let first_r = g.r_classes_in(j)[0];
        let e = g.r_classes[first_r]
            .iter()
            .copied()
            .find(|&x| s.is_idempotent(x))
            .expect("every R-class of a regular J-class has an idempotent");
        Self::at_idempotent(s, g, j, e, |_, c| c[0], |_, c| c[0])
    }

    /// Coordinates based at `e`, choosing `r_a` and `l_b` from the valid
    /// candidates with the given selectors.
    pub fn at_idempotent(
        s: &FiniteSemigroup,
        g: &GreensStructure,
        j: usize,
        e: usize,
        mut pick_r: impl FnMut(usize, &[usize]) -> usize,
        mut pick_l: impl FnMut(usize, &[usize]) -> usize,
    ) -> Result<Self> {
        regular_class(g, j)?;
        if !s.is_idempotent(e) {
            return Err(Error::NotIdempotent(e));
        }
        if g.j_of[e] != j {
            return Err(Error::InvalidCoordinates(format!("{e} is not in J-class {j}")));
        }
        let base_group = SubgroupTable::from_subset(s, &g.h_classes[g.h_of[e]])?;
        let r_classes = g.r_classes_in(j);
        let l_classes = g.l_classes_in(j);
        let r_coords = r_classes
            .iter()
            .map(|&a| pick_r(a, &valid_r_coords(s, g, j, e, a)))
            .collect();
        let l_coords = l_classes
            .iter()
            .map(|&b| pick_l(b, &valid_l_coords(s, g, j, e, b)))
            .collect();
        Ok(GgmCoordinates {
            j_class: j,
            idempotent: e,
            base_group,
            r_classes,
            r_coords,
            l_classes,
            l_coords,
        })
    }

    /// Rejects coordinates that do not satisfy the bijection conditions.
    pub fn validate(&self, s: &FiniteSemigroup, g: &GreensStructure) -> Result<()> {
        for (&a, &r) in self.r_classes.iter().zip(&self.r_coords) {
            if !valid_r_coords(s, g, self.j_class, self.idempotent, a).contains(&r) {
                return Err(Error::InvalidCoordinates(format!("r-coordinate {r} for R-class {a}")));
            }
        }
        for (&b, &l) in self.l_classes.iter().zip(&self.l_coords) {
            if !valid_l_coords(s, g, self.j_class, self.idempotent, b).contains(&l) {
                return Err(Error::InvalidCoordinates(format!("l-coordinate {l} for L-class {b}")));
            }
        }
        Ok(())
    }

    fn r_coord(&self, r_class: usize) -> usize {
        self.r_coords[self.r_classes.binary_search(&r_class).expect("R-class of J")]
    }

    fn l_coord(&self, l_class: usize) -> usize {
        self.l_coords[self.l_classes.binary_search(&l_class).expect("L-class of J")]
    }
}

impl GgmData {
    /// Checks that `normal` is a normal subgroup of `G_J`.
    pub fn new(coords: GgmCoordinates, normal: &[usize]) -> Result<Self> {
        let local: Option<Vec<usize>> = normal
            .iter()
            .map(|&x| coords.base_group.position(x))
            .collect();
        match local {
            Some(l) if coords.base_group.is_normal(&l) => {
                let mut normal_subgroup = normal.to_vec();
                normal_subgroup.sort_unstable();
                normal_subgroup.dedup();
                Ok(GgmData {
                    coords,
                    normal_subgroup,
                })
            }
            _ => Err(Error::NotNormal),
        }
    }

    /// The congruence `≡_(J, G_J, N)`.
    pub fn congruence(&self, s: &FiniteSemigroup, g: &GreensStructure) -> Congruence {
        let c = &self.coords;
        let j = c.j_class;
        let group = &c.base_group;
        let local_n: Vec<usize> = self
            .normal_subgroup
            .iter()
            .map(|&x| group.position(x).unwrap())
            .collect();
        let coset = group.cosets(&local_n);
        let members = &g.j_classes[j];
        // For x in J, left factor r_a x; for y in J, right factor y l_b.
        let left: Vec<usize> = members
            .iter()
            .map(|&x| s.mul(c.r_coord(g.r_of[x]), x))
            .collect();
        let right: Vec<usize> = members
            .iter()
            .map(|&y| s.mul(y, c.l_coord(g.l_of[y])))
            .collect();
        let k = members.len();
        let signatures: Vec<Vec<usize>> = s
            .elements()
            .map(|t| {
                let mut sig = Vec::with_capacity(k * k);
                for (xi, &x) in members.iter().enumerate() {
                    let xt = s.mul(x, t);
                    for (yi, &y) in members.iter().enumerate() {
                        if g.j_of[s.mul(xt, y)] != j {
                            sig.push(usize::MAX);
                            continue;
                        }
                        // r_a x t y l_b = (r_a x) t (y l_b) lies in G_J.
                        let h = s.mul(s.mul(left[xi], t), right[yi]);
                        let pos = group
                            .position(h)
                            .expect("r_a xty l_b lies in the maximal subgroup");
                        sig.push(coset[pos]);
                    }
                }
                sig
            })
            .collect();
        let mut ids: std::collections::HashMap<&Vec<usize>, usize> = Default::default();
        let labels: Vec<usize> = signatures
            .iter()
            .map(|sig| {
                let next = ids.len();
                *ids.entry(sig).or_insert(next)
            })
            .collect();
        let cong = Congruence::from_labels(&labels);
        debug_assert!(cong.is_congruence(s));
        cong
    }
}

/// GGM congruence with canonical coordinates; `normal` lists ambient elements.
pub fn ggm_congruence(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    j: usize,
    normal: &[usize],
) -> Result<Congruence> {
    let coords = GgmCoordinates::canonical(s, g, j)?;
    Ok(GgmData::new(coords, normal)?.congruence(s, g))
}

/// Whether `s` acts faithfully on the left and on the right of its
/// (0-)minimal ideal.
pub fn is_ggm(s: &FiniteSemigroup, g: &GreensStructure) -> bool {
    if s.order() == 1 {
        return true;
    }
    match s.zero() {
        None => acts_faithfully(s, &g.j_classes[g.minimal_j_class()]),
        Some(z) => {
            let zj = g.j_of[z];
            (0..g.j_count())
                .filter(|&j| j != zj)
                .filter(|&j| (0..g.j_count()).all(|b| b == j || b == zj || !g.j_le(b, j)))
                .any(|j| {
                    let mut ideal = g.j_classes[j].clone();
                    ideal.push(z);
                    acts_faithfully(s, &ideal)
                })
        }
    }
}

fn acts_faithfully(s: &FiniteSemigroup, ideal: &[usize]) -> bool {
    let left: Vec<Vec<usize>> = s
        .elements()
        .map(|t| ideal.iter().map(|&x| s.mul(t, x)).collect())
        .collect();
    let right: Vec<Vec<usize>> = s
        .elements()
        .map(|t| ideal.iter().map(|&x| s.mul(x, t)).collect())
        .collect();
    let distinct = |v: &Vec<Vec<usize>>| {
        let mut w = v.clone();
        w.sort();
        w.dedup();
        w.len() == v.len()
    };
    distinct(&left) && distinct(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruence::quotient;
    use crate::corpus;
    use crate::greens::greens;

    #[test]
    fn group_with_whole_normal_subgroup_is_universal() {
        let z4 = corpus::cyclic(4);
        let g = greens(&z4);
        assert!(ggm_congruence(&z4, &g, 0, &[0, 1, 2, 3]).unwrap().is_universal());
        assert!(ggm_congruence(&z4, &g, 0, &[0]).unwrap().is_equality());
        assert_eq!(
            ggm_congruence(&z4, &g, 0, &[0, 2]).unwrap().classes(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert!(matches!(ggm_congruence(&z4, &g, 0, &[0, 1]), Err(Error::NotNormal)));
    }

    #[test]
    fn b2_is_already_ggm() {
        let b2 = corpus::b2();
        let g = greens(&b2);
        let top = g.j_of[0];
        assert!(ggm_congruence(&b2, &g, top, &[0]).unwrap().is_equality());
        assert!(is_ggm(&b2, &g));
    }

    #[test]
    fn t2_top_class() {
        let t2 = corpus::t2();
        let g = greens(&t2);
        let c = ggm_congruence(&t2, &g, g.j_of[0], &[0]).unwrap();
        assert_eq!(c.classes(), vec![vec![0], vec![1], vec![2, 3]]);
        let q = quotient(&t2, &c);
        assert!(is_ggm(&q.semigroup, &greens(&q.semigroup)));
        assert!(matches!(
            GgmCoordinates::canonical(&t2, &g, 7),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn non_regular_class_is_rejected() {
        let m = corpus::monogenic_a3_a2();
        let g = greens(&m);
        assert!(matches!(
            ggm_congruence(&m, &g, g.j_of[0], &[]),
            Err(Error::NotRegular(_))
        ));
    }

    #[test]
    fn ggm_examples() {
        for s in [corpus::cyclic(3), corpus::s3(), corpus::trivial(), corpus::u1(), corpus::b2_1()] {
            assert!(is_ggm(&s, &greens(&s)));
        }
        // Both elements of the null semigroup act as zero.
        assert!(!is_ggm(&corpus::null2(), &greens(&corpus::null2())));
        // Right multiplication cannot separate the two left zeros.
        assert!(!is_ggm(&corpus::left_zero(2), &greens(&corpus::left_zero(2))));
    }
}
