use std::fmt;

use serde::Serialize;

/// A finite certificate explaining a negative decision.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `{upper, lower}` is a copy of the two-element semilattice (`lower < upper`).
    Semilattice { upper: usize, lower: usize },
    /// The maximal subgroup at `idempotent` fails the group condition.
    Subgroup {
        idempotent: usize,
        order: usize,
        reason: &'static str,
    },
    Pair {
        left: usize,
        right: usize,
        reason: &'static str,
    },
    Element { element: usize, reason: &'static str },
    /// A congruence class (listed by element) that fails a membership test.
    Class {
        elements: Vec<usize>,
        reason: &'static str,
    },
    JClass {
        j_class: usize,
        elements: Vec<usize>,
        reason: &'static str,
    },
    /// `x^exponent - 1` does not split into distinct linear factors.
    Splitting { exponent: u64 },
    /// A property of the radical quotient failed; `inner` refers to quotient indices.
    Quotient {
        order: usize,
        inner: Box<Witness>,
    },
    Word { word: String, reason: &'static str },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Semilattice { upper, lower } => {
                write!(f, "two-element semilattice {{{upper} > {lower}}}")
            }
            Witness::Subgroup {
                idempotent,
                order,
                reason,
            } => write!(f, "maximal subgroup at {idempotent} (order {order}): {reason}"),
            Witness::Pair {
                left,
                right,
                reason,
            } => write!(f, "pair ({left}, {right}): {reason}"),
            Witness::Element { element, reason } => write!(f, "element {element}: {reason}"),
            Witness::Class { elements, reason } => write!(f, "class {elements:?}: {reason}"),
            Witness::JClass {
                j_class,
                elements,
                reason,
            } => write!(f, "J-class {j_class} {elements:?}: {reason}"),
            Witness::Splitting { exponent } => {
                write!(f, "x^{exponent} - 1 does not split into distinct linear factors")
            }
            Witness::Quotient { order, inner } => {
                write!(f, "radical quotient (order {order}): {inner}")
            }
            Witness::Word { word, reason } => write!(f, "word {word:?}: {reason}"),
        }
    }
}

/// A yes/no decision; negative answers carry a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn no(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
        }
    }
}

impl From<Option<Witness>> for Verdict {
    fn from(w: Option<Witness>) -> Self {
        match w {
            Some(w) => Verdict::no(w),
            None => Verdict::yes(),
        }
    }
}
