//! Fixed inputs for the benchmarks.

use fsemi::automata::cerny;
use fsemi::marked::{MarkedProductSpec, ProductMode};
use fsemi::Dfa;

/// Letter maps of a synchronizing automaton with a DS transition monoid:
/// `a` moves each odd state down by one, `b` each positive even state.
pub fn staircase(states: usize) -> Vec<(String, Vec<usize>)> {
    let step = |parity: usize| (0..states).map(move |q| if q > 0 && q % 2 == parity { q - 1 } else { q }).collect();
    vec![("a".to_string(), step(1)), ("b".to_string(), step(0))]
}

pub fn cerny_automaton(n: usize) -> Vec<(String, Vec<usize>)> {
    cerny(n)
}

fn star(alphabet: &[&str], allowed: &[&str]) -> Dfa {
    let delta = alphabet.iter().map(|a| vec![allowed.contains(a).then_some(0)]).collect();
    Dfa::new(1, alphabet.iter().map(|a| a.to_string()).collect(), delta, 0, &[0]).expect("valid")
}

/// `Σ* a Σ* a ... Σ*` with `marks` copies of `a` over `{a, b}`.
pub fn repeated_marks(marks: usize) -> MarkedProductSpec {
    let ab = ["a", "b"];
    MarkedProductSpec::new(
        (0..=marks).map(|_| star(&ab, &ab)).collect(),
        vec!["a".to_string(); marks],
        None,
        ProductMode::Unambiguous,
    )
    .expect("valid")
}
