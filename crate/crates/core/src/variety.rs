//! Membership in named varieties of finite semigroups, and the
//! representability classification built on the radical quotient.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::greens::{greens, is_local_group, GreensStructure};
use crate::group::{is_prime, SubgroupTable};
use crate::radical::{in_gk, radical_quotient};
use crate::semigroup::FiniteSemigroup;
use crate::witness::{Verdict, Witness};

#[derive(Clone, Debug, PartialEq)]
pub enum VarietyId {
    Trivial,
    /// Semilattices.
    Sl,
    Band,
    Com,
    Groups,
    Ab,
    /// `p`-groups.
    Gp(u64),
    /// Abelian groups whose exponent `e` has `x^e - 1` split over `K`.
    AbK(FieldSpec),
    /// Semilattices of groups from `Ab_K`; the diagonalizable semigroups.
    DK(FieldSpec),
    SlJoinAbK(FieldSpec),
    DS,
    DA,
    DO,
    /// `DO` with all subgroups abelian (of split exponent when a field is given).
    DOcapAbBar(Option<FieldSpec>),
    LGK(FieldSpec),
    LI,
    /// `E(S)` generates a subsemigroup whose subgroups are `p`-groups.
    EGbarP(u64),
    /// Aperiodic semigroups.
    A,
    DGbarP(u64),
    /// `D(Gbar_p ⓜ Ab_K) ∩ E Gbar_p` for a field of characteristic `p`.
    DGpMalAbKCapEGbarP(FieldSpec),
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VarietyId::*;
        match self {
            Trivial => f.write_str("Trivial"),
            Sl => f.write_str("Sl"),
            Band => f.write_str("Band"),
            Com => f.write_str("Com"),
            Groups => f.write_str("Groups"),
            Ab => f.write_str("Ab"),
            Gp(p) => write!(f, "Gp@{p}"),
            AbK(k) => write!(f, "AbK@{k}"),
            DK(k) => write!(f, "DK@{k}"),
            SlJoinAbK(k) => write!(f, "SlJoinAbK@{k}"),
            DS => f.write_str("DS"),
            DA => f.write_str("DA"),
            DO => f.write_str("DO"),
            DOcapAbBar(None) => f.write_str("DOcapAbBar"),
            DOcapAbBar(Some(k)) => write!(f, "DOcapAbBar@{k}"),
            LGK(k) => write!(f, "LGK@{k}"),
            LI => f.write_str("LI"),
            EGbarP(p) => write!(f, "EGbar@{p}"),
            A => f.write_str("A"),
            DGbarP(p) => write!(f, "DGbar@{p}"),
            DGpMalAbKCapEGbarP(k) => write!(f, "DGpMalAbKcapEGbar@{k}"),
        }
    }
}

impl FromStr for VarietyId {
    type Err = Error;

    /// `Name` or `Name@param`, the parameter being a field or a prime.
    fn from_str(s: &str) -> Result<Self> {
        use VarietyId::*;
        let s = s.trim();
        let (name, param) = match s.split_once('@') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let field = || -> Result<FieldSpec> {
            param
                .ok_or_else(|| Error::MissingParameter(name.to_string()))?
                .parse()
        };
        let prime = || -> Result<u64> {
            let p = param.ok_or_else(|| Error::MissingParameter(name.to_string()))?;
            match p.parse::<u64>() {
                Ok(p) if is_prime(p) => Ok(p),
                _ => Err(Error::InvalidVariety(s.to_string())),
            }
        };
        let plain = |v: VarietyId| {
            if param.is_some() {
                Err(Error::InvalidVariety(s.to_string()))
            } else {
                Ok(v)
            }
        };
        match name {
            "Trivial" | "I" => plain(Trivial),
            "Sl" => plain(Sl),
            "Band" | "B" => plain(Band),
            "Com" => plain(Com),
            "Groups" | "G" => plain(Groups),
            "Ab" => plain(Ab),
            "Gp" => Ok(Gp(prime()?)),
            "AbK" => Ok(AbK(field()?)),
            "DK" => Ok(DK(field()?)),
            "SlJoinAbK" => Ok(SlJoinAbK(field()?)),
            "DS" => plain(DS),
            "DA" => plain(DA),
            "DO" => plain(DO),
            "DOcapAbBar" => Ok(DOcapAbBar(param.map(str::parse).transpose()?)),
            "LGK" => Ok(LGK(field()?)),
            "LI" => plain(LI),
            "EGbar" | "EGbarP" => Ok(EGbarP(prime()?)),
            "A" => plain(A),
            "DGbar" | "DGbarP" => Ok(DGbarP(prime()?)),
            "DGpMalAbKcapEGbar" | "DGpMalAbK_capEGbarP" => {
                let k = field()?;
                if k.characteristic() == 0 {
                    return Err(Error::InvalidVariety(s.to_string()));
                }
                Ok(DGpMalAbKCapEGbarP(k))
            }
            _ => Err(Error::InvalidVariety(s.to_string())),
        }
    }
}

fn non_commuting_pair(s: &FiniteSemigroup) -> Option<Witness> {
    for a in s.elements() {
        for b in a + 1..s.order() {
            if s.mul(a, b) != s.mul(b, a) {
                return Some(Witness::Pair {
                    left: a,
                    right: b,
                    reason: "elements do not commute",
                });
            }
        }
    }
    None
}

fn non_idempotent(s: &FiniteSemigroup) -> Option<Witness> {
    s.elements()
        .find(|&x| !s.is_idempotent(x))
        .map(|x| Witness::Element {
            element: x,
            reason: "not idempotent",
        })
}

/// A group is a single H-class.
fn not_group(g: &GreensStructure) -> Option<Witness> {
    g.h_classes.get(1).map(|h| Witness::Element {
        element: h[0],
        reason: "semigroup has more than one H-class",
    })
}

/// Maximal subgroups in order of their idempotent.
fn subgroups(s: &FiniteSemigroup, g: &GreensStructure) -> Vec<(usize, SubgroupTable)> {
    g.idempotents
        .iter()
        .map(|&e| {
            let h = SubgroupTable::from_subset(s, &g.h_classes[g.h_of[e]]).expect("H_e is a group");
            (e, h)
        })
        .collect()
}

fn first_bad_subgroup(
    s: &FiniteSemigroup,
    g: &GreensStructure,
    ok: impl Fn(&SubgroupTable) -> bool,
    reason: &'static str,
) -> Option<Witness> {
    subgroups(s, g)
        .into_iter()
        .find(|(_, h)| !ok(h))
        .map(|(e, h)| Witness::Subgroup {
            idempotent: e,
            order: h.order(),
            reason,
        })
}

fn abelian_split(h: &SubgroupTable, k: &FieldSpec) -> bool {
    h.is_abelian() && k.splits(h.exponent() as u64)
}

/// The least element outside every subgroup.
fn not_completely_regular(s: &FiniteSemigroup) -> Option<Witness> {
    s.elements()
        .find(|&x| s.mul(x, s.idempotent_power(x)) != x)
        .map(|x| Witness::Element {
            element: x,
            reason: "not in a subgroup",
        })
}

/// The least regular J-class that is not closed under multiplication.
fn regular_class_not_closed(s: &FiniteSemigroup, g: &GreensStructure) -> Option<Witness> {
    for j in g.regular_j_classes() {
        let class = &g.j_classes[j];
        for &a in class {
            for &b in class {
                if g.j_of[s.mul(a, b)] != j {
                    return Some(Witness::JClass {
                        j_class: j,
                        elements: class.clone(),
                        reason: "regular J-class is not a subsemigroup",
                    });
                }
            }
        }
    }
    None
}

fn regular_class_failing(
    g: &GreensStructure,
    ok: impl Fn(usize) -> bool,
    reason: &'static str,
) -> Option<Witness> {
    g.regular_j_classes().find(|&j| !ok(j)).map(|j| Witness::JClass {
        j_class: j,
        elements: g.j_classes[j].clone(),
        reason,
    })
}

/// Commutative, `x^(e+1) = x` with `e` the lcm of the subgroup exponents,
/// and `x^e - 1` split over `K`.
fn diagonalizable(s: &FiniteSemigroup, g: &GreensStructure, k: &FieldSpec) -> Option<Witness> {
    if let Some(w) = non_commuting_pair(s) {
        return Some(w);
    }
    if let Some(w) = not_completely_regular(s) {
        return Some(w);
    }
    let e = subgroups(s, g)
        .iter()
        .fold(1u64, |acc, (_, h)| num_integer::lcm(acc, h.exponent() as u64));
    debug_assert!(s.elements().all(|x| s.mul(x, s.pow(x, e as usize)) == x));
    if !k.splits(e) {
        return Some(Witness::Splitting { exponent: e });
    }
    None
}

/// Closure of the idempotents under multiplication.
fn idempotent_generated(s: &FiniteSemigroup, g: &GreensStructure) -> Vec<usize> {
    let mut member = vec![false; s.order()];
    let mut elems: Vec<usize> = g.idempotents.clone();
    elems.iter().for_each(|&e| member[e] = true);
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &e in &g.idempotents {
            let y = s.mul(x, e);
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

fn e_gbar_p(s: &FiniteSemigroup, g: &GreensStructure, p: u64) -> Option<Witness> {
    let gen = idempotent_generated(s, g);
    let sub = s.subsemigroup(&gen).expect("closed by construction");
    let sg = greens(&sub.semigroup);
    first_bad_subgroup(&sub.semigroup, &sg, |h| h.is_p_group(p), "subgroup of <E(S)> is not a p-group")
        .map(|w| match w {
            Witness::Subgroup {
                idempotent,
                order,
                reason,
            } => Witness::Subgroup {
                idempotent: sub.elements[idempotent],
                order,
                reason,
            },
            w => w,
        })
}

/// `G/O_p(G)` is abelian of split exponent.
fn gp_malcev_abk(h: &SubgroupTable, k: &FieldSpec) -> bool {
    let p = k.characteristic();
    let n = h.largest_normal_p_subgroup(p);
    h.quotient_is_abelian(&n) && k.splits(h.quotient_exponent(&n) as u64)
}

pub fn variety_member(s: &FiniteSemigroup, v: &VarietyId) -> Verdict {
    variety_member_with(s, &greens(s), v)
}

pub fn variety_member_with(s: &FiniteSemigroup, g: &GreensStructure, v: &VarietyId) -> Verdict {
    use VarietyId::*;
    let w = match v {
        Trivial => (s.order() > 1).then(|| Witness::Element {
            element: 1,
            reason: "more than one element",
        }),
        Sl => non_commuting_pair(s).or_else(|| non_idempotent(s)),
        Band => non_idempotent(s),
        Com => non_commuting_pair(s),
        Groups => not_group(g),
        Ab => not_group(g).or_else(|| non_commuting_pair(s)),
        Gp(p) => not_group(g).or_else(|| {
            first_bad_subgroup(s, g, |h| h.is_p_group(*p), "order is not a power of p")
        }),
        AbK(k) => not_group(g).or_else(|| {
            first_bad_subgroup(s, g, |h| abelian_split(h, k), "not abelian of split exponent")
        }),
        DK(k) | SlJoinAbK(k) => diagonalizable(s, g, k),
        DS => regular_class_not_closed(s, g),
        DA => regular_class_not_closed(s, g).or_else(|| {
            regular_class_failing(
                g,
                |j| g.j_classes[j].iter().all(|&x| s.is_idempotent(x)),
                "regular J-class contains a non-idempotent",
            )
        }),
        DO => regular_class_not_closed(s, g).or_else(|| orthodox_failure(s, g)),
        DOcapAbBar(k) => regular_class_not_closed(s, g)
            .or_else(|| orthodox_failure(s, g))
            .or_else(|| {
                first_bad_subgroup(
                    s,
                    g,
                    |h| h.is_abelian() && k.as_ref().is_none_or(|k| k.splits(h.exponent() as u64)),
                    "subgroup is not abelian of split exponent",
                )
            }),
        LGK(k) => return is_local_group(s, g, &|h| in_gk(h, k)),
        LI => return is_local_group(s, g, &|h| h.is_trivial()),
        EGbarP(p) => e_gbar_p(s, g, *p),
        A => first_bad_subgroup(s, g, |h| h.is_trivial(), "non-trivial subgroup"),
        DGbarP(p) => regular_class_not_closed(s, g).or_else(|| {
            first_bad_subgroup(s, g, |h| h.is_p_group(*p), "subgroup is not a p-group")
        }),
        DGpMalAbKCapEGbarP(k) => regular_class_not_closed(s, g)
            .or_else(|| {
                first_bad_subgroup(
                    s,
                    g,
                    |h| gp_malcev_abk(h, k),
                    "G/O_p(G) is not abelian of split exponent",
                )
            })
            .or_else(|| e_gbar_p(s, g, k.characteristic())),
    };
    w.into()
}

/// The idempotents of each regular J-class form a subsemigroup.
fn orthodox_failure(s: &FiniteSemigroup, g: &GreensStructure) -> Option<Witness> {
    regular_class_failing(
        g,
        |j| {
            let es: Vec<usize> = g.j_classes[j]
                .iter()
                .copied()
                .filter(|&x| s.is_idempotent(x))
                .collect();
            es.iter()
                .all(|&a| es.iter().all(|&b| s.is_idempotent(s.mul(a, b))))
        },
        "idempotents of the regular J-class are not closed",
    )
}

#[derive(Clone, Debug, Serialize)]
pub struct RepReport {
    pub field: String,
    pub diagonalizable: bool,
    pub unidiagonalizable: bool,
    pub triangularizable: bool,
    pub unitriangularizable: bool,
    pub basic: bool,
    pub split_basic: bool,
    pub radical_quotient_order: usize,
    /// Failure witnesses keyed by flag name, in flag order.
    pub witnesses: Vec<(String, Witness)>,
}

pub fn classify_representability(s: &FiniteSemigroup, field: &FieldSpec) -> RepReport {
    let g = greens(s);
    let q = radical_quotient(s, field).semigroup;
    let qg = greens(&q);
    let wrap = |v: Verdict| -> Verdict {
        match v.witness {
            Some(w) => Verdict::no(Witness::Quotient {
                order: q.order(),
                inner: Box::new(w),
            }),
            None => v,
        }
    };
    let checks = [
        ("diagonalizable", variety_member_with(s, &g, &VarietyId::DK(field.clone()))),
        ("unidiagonalizable", variety_member_with(s, &g, &VarietyId::Sl)),
        (
            "triangularizable",
            wrap(variety_member_with(&q, &qg, &VarietyId::DK(field.clone()))),
        ),
        ("unitriangularizable", wrap(variety_member_with(&q, &qg, &VarietyId::Sl))),
        (
            "basic",
            wrap(variety_member_with(&q, &qg, &VarietyId::SlJoinAbK(FieldSpec::C))),
        ),
    ];
    let flag = |i: usize| checks[i].1.holds;
    let mut witnesses: Vec<(String, Witness)> = checks
        .iter()
        .filter_map(|(name, v)| v.witness.clone().map(|w| (name.to_string(), w)))
        .collect();
    if let Some(w) = &checks[2].1.witness {
        witnesses.push(("split_basic".into(), w.clone()));
    }
    RepReport {
        field: field.to_string(),
        diagonalizable: flag(0),
        unidiagonalizable: flag(1),
        triangularizable: flag(2),
        unitriangularizable: flag(3),
        basic: flag(4),
        split_basic: flag(2),
        radical_quotient_order: q.order(),
        witnesses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn v(s: &str) -> VarietyId {
        s.parse().unwrap()
    }

    fn k(s: &str) -> FieldSpec {
        s.parse().unwrap()
    }

    #[test]
    fn parsing() {
        for s in ["Sl", "DA", "DS", "DO", "LGK@F2", "AbK@Q", "DK@F4", "EGbar@2", "DOcapAbBar", "DOcapAbBar@C", "DGpMalAbKcapEGbar@F4"] {
            assert_eq!(v(s).to_string(), s);
        }
        assert!(matches!("LGK".parse::<VarietyId>(), Err(Error::MissingParameter(_))));
        assert!(matches!("EGbar@4".parse::<VarietyId>(), Err(Error::InvalidVariety(_))));
        assert!(matches!("Sl@2".parse::<VarietyId>(), Err(Error::InvalidVariety(_))));
        assert!(matches!("DGpMalAbKcapEGbar@Q".parse::<VarietyId>(), Err(Error::InvalidVariety(_))));
        assert!(matches!("Nope".parse::<VarietyId>(), Err(Error::InvalidVariety(_))));
    }

    #[test]
    fn membership_examples() {
        assert!(variety_member(&corpus::u1(), &v("Sl")).holds);
        assert!(!variety_member(&corpus::cyclic(3), &v("AbK@Q")).holds);
        assert!(variety_member(&corpus::cyclic(3), &v("AbK@F4")).holds);
        let b2 = variety_member(&corpus::b2(), &v("DA"));
        assert!(!b2.holds);
        assert!(matches!(b2.witness, Some(Witness::JClass { .. })));
        assert!(!variety_member(&corpus::b2(), &v("DS")).holds);
        assert!(!variety_member(&corpus::b2(), &v("DO")).holds);
        assert!(variety_member(&corpus::t2(), &v("DS")).holds);
        assert!(!variety_member(&corpus::s3(), &v("Ab")).holds);
        assert!(variety_member(&corpus::cyclic(4), &v("Gp@2")).holds);
        assert!(!variety_member(&corpus::u1(), &v("Groups")).holds);
        assert!(variety_member(&corpus::rectangular_band(2, 2), &v("DA")).holds);
        assert!(variety_member(&corpus::monogenic_a3_a2(), &v("A")).holds);
        assert!(variety_member(&corpus::s3(), &v("EGbar@2")).holds);
    }

    #[test]
    fn classification_examples() {
        for field in ["Q", "F2", "F3", "C"] {
            let r = classify_representability(&corpus::u1(), &k(field));
            assert!(r.diagonalizable && r.unidiagonalizable && r.triangularizable);
            assert!(r.unitriangularizable && r.basic && r.split_basic);
        }
        let z2q = classify_representability(&corpus::cyclic(2), &k("Q"));
        assert!(z2q.diagonalizable && z2q.triangularizable && !z2q.unitriangularizable);
        let z2f2 = classify_representability(&corpus::cyclic(2), &k("F2"));
        assert!(z2f2.unitriangularizable && !z2f2.diagonalizable);
        for field in ["Q", "F2", "F3", "C"] {
            let b2 = classify_representability(&corpus::b2(), &k(field));
            assert!(!b2.triangularizable && !b2.split_basic);
            assert_eq!(b2.radical_quotient_order, 5);
        }
        let t2 = classify_representability(&corpus::t2(), &k("Q"));
        assert!(t2.triangularizable && !t2.unitriangularizable && t2.basic);
    }
}
