//! The Rhodes radical: the meet of the GGM congruences of all regular
//! J-classes with `N` the unipotent radical of `G_J`, and the brute-force
//! largest-`LG_K`-congruence oracle it is checked against.

use crate::congruence::{enumerate_congruences, is_v_congruence, quotient, Congruence, Quotient};
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ggm::{GgmCoordinates, GgmData};
use crate::greens::{greens, is_local_group, GreensStructure};
use crate::group::SubgroupTable;
use crate::semigroup::FiniteSemigroup;
use crate::witness::Verdict;

/// Trivial in characteristic zero, `O_p(G)` in characteristic `p`.
pub fn unipotent_radical(g: &SubgroupTable, field: &FieldSpec) -> SubgroupTable {
    match field.characteristic() {
        0 => g.restrict(&[g.local_identity()]),
        p => g.restrict(&g.largest_normal_p_subgroup(p)),
    }
}

/// Membership of a group in `G_K`: trivial groups, or `p`-groups in
/// characteristic `p`.
pub fn in_gk(g: &SubgroupTable, field: &FieldSpec) -> bool {
    match field.characteristic() {
        0 => g.is_trivial(),
        p => g.is_p_group(p),
    }
}

pub fn is_lg_k(s: &FiniteSemigroup, field: &FieldSpec) -> Verdict {
    is_lg_k_with(s, &greens(s), field)
}

pub fn is_lg_k_with(s: &FiniteSemigroup, g: &GreensStructure, field: &FieldSpec) -> Verdict {
    is_local_group(s, g, &|h| in_gk(h, field))
}

#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub congruence: Congruence,
    /// One entry per regular J-class, in J-class order.
    pub per_j_class: Vec<(GgmData, Congruence)>,
}

pub fn rhodes_radical(s: &FiniteSemigroup, field: &FieldSpec) -> RadicalResult {
    rhodes_radical_with(s, &greens(s), field)
}

pub fn rhodes_radical_with(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    field: &FieldSpec,
) -> RadicalResult {
    let mut congruence = Congruence::equality(s.order());
    let mut first = true;
    let mut per_j_class = Vec::new();
    for j in g.regular_j_classes() {
        let coords = GgmCoordinates::canonical(s, g, j).expect("regular class");
        let n = unipotent_radical(&coords.base_group, field);
        let data = GgmData::new(coords, n.carrier()).expect("unipotent radical is normal");
        let c = data.congruence(s, g);
        congruence = if first { c.clone() } else { congruence.meet(&c) };
        first = false;
        per_j_class.push((data, c));
    }
    RadicalResult {
        congruence,
        per_j_class,
    }
}

/// The largest `LG_K`-congruence among all congruences of `s`.
pub fn rhodes_radical_oracle(s: &FiniteSemigroup, field: &FieldSpec) -> Result<Congruence> {
    let lattice = enumerate_congruences(s)?;
    let good: Vec<&Congruence> = lattice
        .iter()
        .filter(|c| is_v_congruence(s, c, &|t| is_lg_k(t, field).holds).holds)
        .collect();
    let maximal: Vec<&Congruence> = good
        .iter()
        .copied()
        .filter(|c| !good.iter().any(|d| d != c && c.refines(d)))
        .collect();
    match maximal.as_slice() {
        [only] => Ok((*only).clone()),
        other => Err(Error::NoLargest(other.len())),
    }
}

pub fn radical_quotient(s: &FiniteSemigroup, field: &FieldSpec) -> Quotient {
    quotient(s, &rhodes_radical(s, field).congruence)
}

/// Decides `S ∈ LG_K ⓜ V` through the radical quotient.
pub fn malcev_member(
    s: &FiniteSemigroup,
    field: &FieldSpec,
    member: &dyn Fn(&FiniteSemigroup) -> bool,
) -> bool {
    member(&radical_quotient(s, field).semigroup)
}
