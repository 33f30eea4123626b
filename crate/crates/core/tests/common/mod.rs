//! Seeded generators shared by the integration tests.
#![allow(dead_code)]

use fsemi::automata::Dfa;
use fsemi::marked::{Counter, MarkedProductSpec, ProductMode};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every word over `letters` letters of length at most `max_len`, shortest first.
pub fn words(letters: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters);
        for w in &layer {
            for a in 0..letters {
                let mut v: Vec<usize> = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

pub fn letters(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `B*` over `alphabet`, as a one-state partial automaton.
pub fn star(alphabet: &[&str], allowed: &[&str]) -> Dfa {
    let delta = alphabet
        .iter()
        .map(|a| vec![allowed.contains(a).then_some(0)])
        .collect();
    Dfa::new(1, letters(alphabet), delta, 0, &[0]).unwrap()
}

/// A trim automaton with a non-empty language over `alphabet`.
pub fn random_trim_dfa(rng: &mut TestRng, alphabet: &[&str], max_states: usize) -> Dfa {
    loop {
        let n = rng.random_range(1..=max_states);
        let delta = alphabet
            .iter()
            .map(|_| {
                (0..n)
                    .map(|_| rng.random_bool(0.75).then(|| rng.random_range(0..n)))
                    .collect()
            })
            .collect();
        let finals: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
        let d = Dfa::new(n, letters(alphabet), delta, 0, &finals).unwrap().trim();
        if d.is_trim() {
            return d;
        }
    }
}

/// A marked product with one or two marked letters over `{a, b}`.
pub fn random_marked(rng: &mut TestRng, counter: bool) -> MarkedProductSpec {
    let alphabet: &[&str] = if rng.random_bool(0.2) { &["a"] } else { &["a", "b"] };
    let n = rng.random_range(1..=2);
    let factors = (0..=n).map(|_| random_trim_dfa(rng, alphabet, 3)).collect();
    let marks = (0..n)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())].to_string())
        .collect();
    let (counter, mode) = if counter {
        let p = rng.random_range(2..=3);
        (Some(Counter { r: rng.random_range(0..p), p }), ProductMode::Counter)
    } else {
        (None, ProductMode::Unambiguous)
    };
    MarkedProductSpec::new(factors, marks, counter, mode).unwrap()
}

/// `S0* a1 S1* ... an Sn*` over `alphabet`.
pub fn star_product(alphabet: &[&str], stars: &[&[&str]], marks: &[&str]) -> MarkedProductSpec {
    MarkedProductSpec::new(
        stars.iter().map(|b| star(alphabet, b)).collect(),
        letters(marks),
        None,
        ProductMode::Unambiguous,
    )
    .unwrap()
}

/// An idempotent map with `f(q) <= q`.
pub fn decreasing_idempotent(rng: &mut TestRng, n: usize) -> Vec<usize> {
    let mut f = vec![0usize; n];
    for q in 1..n {
        let fixed: Vec<usize> = (0..q).filter(|&p| f[p] == p).collect();
        f[q] = if rng.random_bool(0.5) {
            q
        } else {
            fixed[rng.random_range(0..fixed.len())]
        };
    }
    f
}

/// An arbitrary idempotent map, used to feed the DS filter some rejects.
pub fn random_idempotent(rng: &mut TestRng, n: usize) -> Vec<usize> {
    let image: Vec<usize> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
    let image = if image.is_empty() { vec![rng.random_range(0..n)] } else { image };
    (0..n)
        .map(|q| if image.contains(&q) { q } else { image[rng.random_range(0..image.len())] })
        .collect()
}

pub fn random_letters(rng: &mut TestRng) -> Vec<(String, Vec<usize>)> {
    let n = rng.random_range(2..=6);
    let k = rng.random_range(1..=3);
    (0..k)
        .map(|i| {
            let m = if rng.random_bool(0.15) {
                random_idempotent(rng, n)
            } else {
                decreasing_idempotent(rng, n)
            };
            (((b'a' + i as u8) as char).to_string(), m)
        })
        .collect()
}

/// `|Q·w|`.
pub fn image_size(maps: &[(String, Vec<usize>)], w: &[usize]) -> usize {
    let n = maps[0].1.len();
    let mut seen = vec![false; n];
    for q in 0..n {
        seen[w.iter().fold(q, |q, &a| maps[a].1[q])] = true;
    }
    seen.iter().filter(|&&b| b).count()
}
