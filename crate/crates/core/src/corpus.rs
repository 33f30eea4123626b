//! Small named semigroups and the exhaustive table corpus.

use crate::error::{Error, Result};
use crate::group;
use crate::semigroup::{compose, FiniteSemigroup};

/// Largest order for which all tables are enumerated.
pub const EXHAUSTIVE_MAX_ORDER: usize = 3;

fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> FiniteSemigroup {
    let table = (0..n * n).map(|i| f(i / n, i % n)).collect();
    FiniteSemigroup::from_flat(n, table, None).expect("curated table is associative")
}

pub fn trivial() -> FiniteSemigroup {
    from_fn(1, |_, _| 0)
}

/// `{e, f}` with `e = 0` absorbing and `f = 1` the identity.
pub fn u1() -> FiniteSemigroup {
    from_fn(2, |s, t| s.min(t))
}

pub fn right_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |_, t| t)
}

pub fn left_zero(n: usize) -> FiniteSemigroup {
    from_fn(n, |s, _| s)
}

/// `{0, a}` with every product equal to `0`.
pub fn null2() -> FiniteSemigroup {
    from_fn(2, |_, _| 0)
}

/// `I × Λ` with `(i, j)(k, l) = (i, l)`; `(i, j)` has index `i * cols + j`.
pub fn rectangular_band(rows: usize, cols: usize) -> FiniteSemigroup {
    from_fn(rows * cols, |s, t| (s / cols) * cols + t % cols)
}

/// Matrix units `e11, e12, e21, e22` (indices 0..4) and zero (index 4).
pub fn b2() -> FiniteSemigroup {
    from_fn(5, |s, t| {
        if s == 4 || t == 4 {
            return 4;
        }
        let (i, j) = (s / 2, s % 2);
        let (k, l) = (t / 2, t % 2);
        if j == k {
            i * 2 + l
        } else {
            4
        }
    })
}

/// `B2` with an identity adjoined as index 5.
pub fn b2_1() -> FiniteSemigroup {
    b2().adjoin_identity()
}

/// All maps of `{0, 1}`: `0 = id`, `1 = swap`, `2 = const 0`, `3 = const 1`.
pub fn t2() -> FiniteSemigroup {
    let maps = [[0, 1], [1, 0], [0, 0], [1, 1]];
    from_fn(4, |s, t| {
        let c = compose(&maps[s], &maps[t]);
        maps.iter().position(|m| m[..] == c[..]).unwrap()
    })
}

pub fn cyclic(n: usize) -> FiniteSemigroup {
    group::cyclic_group(n)
}

pub fn s3() -> FiniteSemigroup {
    group::symmetric_group_3()
}

/// `{a, a^2}` with `a^3 = a^2`; `a = 0`, `a^2 = 1`.
pub fn monogenic_a3_a2() -> FiniteSemigroup {
    from_fn(2, |_, _| 1)
}

/// The curated list, each with a short name.
pub fn curated() -> Vec<(&'static str, FiniteSemigroup)> {
    vec![
        ("U1", u1()),
        ("right-zero-2", right_zero(2)),
        ("left-zero-2", left_zero(2)),
        ("null-2", null2()),
        ("rect-band-2x2", rectangular_band(2, 2)),
        ("B2", b2()),
        ("B2^1", b2_1()),
        ("T2", t2()),
        ("Z2", cyclic(2)),
        ("Z3", cyclic(3)),
        ("Z4", cyclic(4)),
        ("Z6", cyclic(6)),
        ("S3", s3()),
        ("monogenic-a3=a2", monogenic_a3_a2()),
    ]
}

/// Every associative table of order `1..=max_order`, in lexicographic order
/// of the row-major table. Isomorphic copies are kept.
pub fn exhaustive(max_order: usize) -> Result<Vec<FiniteSemigroup>> {
    if max_order > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::CapExceeded(EXHAUSTIVE_MAX_ORDER));
    }
    let mut out = Vec::new();
    for n in 1..=max_order {
        let cells = n * n;
        let mut table = vec![0usize; cells];
        loop {
            if let Ok(s) = FiniteSemigroup::from_flat(n, table.clone(), None) {
                out.push(s);
            }
            // Odometer increment with the last cell fastest.
            let mut i = cells;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                table[i] += 1;
                if table[i] < n {
                    break;
                }
                table[i] = 0;
            }
            if table.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    Ok(out)
}

/// The exhaustive corpus up to order 3 followed by the curated list.
pub fn standard() -> Vec<(String, FiniteSemigroup)> {
    let mut out: Vec<(String, FiniteSemigroup)> = exhaustive(EXHAUSTIVE_MAX_ORDER)
        .expect("within cap")
        .into_iter()
        .enumerate()
        .map(|(i, s)| (format!("table-{}-{i}", s.order()), s))
        .collect();
    out.extend(curated().into_iter().map(|(n, s)| (n.to_string(), s)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_counts() {
        let counts: Vec<usize> = (1..=3)
            .map(|n| exhaustive(n).unwrap().iter().filter(|s| s.order() == n).count())
            .collect();
        assert_eq!(counts, vec![1, 8, 113]);
        assert!(matches!(exhaustive(4), Err(Error::CapExceeded(3))));
    }

    #[test]
    fn curated_orders() {
        let orders: Vec<(&str, usize)> = curated().iter().map(|(n, s)| (*n, s.order())).collect();
        assert!(orders.contains(&("B2", 5)));
        assert!(orders.contains(&("B2^1", 6)));
        assert!(orders.contains(&("S3", 6)));
        assert_eq!(orders.len(), 14);
        assert_eq!(u1().identity(), Some(1));
        assert_eq!(t2().identity(), Some(0));
        assert_eq!(b2().zero(), Some(4));
        assert_eq!(b2_1().identity(), Some(5));
    }
}
