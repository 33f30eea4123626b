//! Marked products `L0 a1 L1 ... an Ln`, their modulo-p counters and
//! unambiguity.
//!
//! All factors are read over a common alphabet: the union of the factor
//! alphabets and the marked letters, in order of first appearance. A factor
//! has no transition on a letter it does not declare.

use serde::{Deserialize, Serialize};

use crate::automata::{parse_word, Dfa};
use crate::error::{Error, Result};
use crate::semigroup::{close, spell, DEFAULT_CAP};

/// Longest word accepted by the enumeration oracle.
pub const MAX_ENUMERATED_LENGTH: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductMode {
    Plain,
    Counter,
    Unambiguous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counter {
    pub r: u64,
    pub p: u64,
}

#[derive(Clone, Debug)]
pub struct MarkedProductSpec {
    factors: Vec<Dfa>,
    /// Marked letters as indices into `alphabet`.
    letters: Vec<usize>,
    alphabet: Vec<String>,
    counter: Option<Counter>,
    mode: ProductMode,
}

#[derive(Deserialize)]
struct SpecJson {
    factors: Vec<serde_json::Value>,
    letters: Vec<String>,
    #[serde(default)]
    counter: Option<Counter>,
    mode: ProductMode,
}

impl MarkedProductSpec {
    pub fn new(
        factors: Vec<Dfa>,
        letters: Vec<String>,
        counter: Option<Counter>,
        mode: ProductMode,
    ) -> Result<Self> {
        if factors.len() != letters.len() + 1 {
            return Err(Error::InvalidAutomaton(format!(
                "{} marked letters need {} factors, got {}",
                letters.len(),
                letters.len() + 1,
                factors.len()
            )));
        }
        if let Some(c) = counter {
            if c.p < 2 || c.r >= c.p {
                return Err(Error::InvalidAutomaton(format!("invalid counter r={} p={}", c.r, c.p)));
            }
        }
        if mode == ProductMode::Counter && counter.is_none() {
            return Err(Error::InvalidAutomaton("counter mode needs a counter".into()));
        }
        let mut alphabet: Vec<String> = Vec::new();
        for a in factors.iter().flat_map(|f| f.alphabet()).chain(&letters) {
            if !alphabet.contains(a) {
                alphabet.push(a.clone());
            }
        }
        let index = |a: &String| alphabet.iter().position(|x| x == a).expect("collected");
        let factors = factors
            .iter()
            .map(|f| {
                let delta = alphabet
                    .iter()
                    .map(|a| match f.letter_index(a) {
                        Some(i) => (0..f.states()).map(|q| f.step(q, i)).collect(),
                        None => vec![None; f.states()],
                    })
                    .collect();
                Dfa::new(f.states(), alphabet.clone(), delta, f.start(), &f.final_states())
            })
            .collect::<Result<Vec<_>>>()?;
        let letters = letters.iter().map(index).collect();
        Ok(MarkedProductSpec {
            factors,
            letters,
            alphabet,
            counter,
            mode,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SpecJson = serde_json::from_str(text)?;
        let factors = raw
            .factors
            .iter()
            .map(|v| Dfa::from_json(&v.to_string()))
            .collect::<Result<Vec<_>>>()?;
        MarkedProductSpec::new(factors, raw.letters, raw.counter, raw.mode)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "factors": self.factors.iter().map(Dfa::to_json).collect::<Vec<_>>(),
            "letters": self.letters.iter().map(|&a| self.alphabet[a].clone()).collect::<Vec<_>>(),
            "mode": self.mode,
        });
        if let Some(c) = self.counter {
            v["counter"] = serde_json::json!(c);
        }
        v
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn factors(&self) -> &[Dfa] {
        &self.factors
    }

    pub fn marked_letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn counter(&self) -> Option<Counter> {
        self.counter
    }

    pub fn mode(&self) -> ProductMode {
        self.mode
    }

    pub fn parse_word(&self, w: &str) -> Result<Vec<usize>> {
        parse_word(&self.alphabet, w)
    }

    pub fn spell(&self, w: &[usize]) -> String {
        spell(&self.alphabet, w)
    }

    /// Membership: at least one factorization, or a count `≡ r (mod p)` in
    /// counter mode.
    pub fn accepts(&self, word: &[usize]) -> bool {
        let glued = GluedAutomaton::new(self);
        match (self.mode, self.counter) {
            (ProductMode::Counter, Some(c)) => glued.count_mod(word, c.p) == c.r,
            _ => glued.count_saturating(word, 1) == 1,
        }
    }
}

/// The nondeterministic automaton obtained by joining each final state of
/// factor `i-1` to the start of factor `i` with an edge labelled `a_i`.
#[derive(Clone, Debug)]
pub struct GluedAutomaton {
    pub states: usize,
    pub start: usize,
    pub finals: Vec<usize>,
    /// `edges[a]` lists `(from, to)` pairs, with multiplicity.
    pub edges: Vec<Vec<(usize, usize)>>,
}

impl GluedAutomaton {
    pub fn new(spec: &MarkedProductSpec) -> Self {
        let mut offsets = Vec::with_capacity(spec.factors.len());
        let mut states = 0;
        for f in &spec.factors {
            offsets.push(states);
            states += f.states();
        }
        let mut edges = vec![Vec::new(); spec.alphabet.len()];
        for (i, f) in spec.factors.iter().enumerate() {
            for (a, out) in edges.iter_mut().enumerate() {
                for q in 0..f.states() {
                    if let Some(r) = f.step(q, a) {
                        out.push((offsets[i] + q, offsets[i] + r));
                    }
                }
            }
            if i > 0 {
                let prev = &spec.factors[i - 1];
                for fin in prev.final_states() {
                    edges[spec.letters[i - 1]].push((offsets[i - 1] + fin, offsets[i] + f.start()));
                }
            }
        }
        let last = spec.factors.len() - 1;
        GluedAutomaton {
            states,
            start: offsets[0] + spec.factors[0].start(),
            finals: spec.factors[last]
                .final_states()
                .into_iter()
                .map(|q| offsets[last] + q)
                .collect(),
            edges,
        }
    }

    /// Letter matrices; each edge applies `bump` to its entry.
    fn matrices<T: Clone>(&self, zero: T, bump: impl Fn(&T) -> T) -> Vec<Vec<Vec<T>>> {
        self.edges
            .iter()
            .map(|es| {
                let mut m = vec![vec![zero.clone(); self.states]; self.states];
                for &(x, y) in es {
                    m[x][y] = bump(&m[x][y]);
                }
                m
            })
            .collect()
    }

    fn count_with(&self, word: &[usize], add: impl Fn(u64, u64) -> u64) -> u64 {
        let mut v = vec![0u64; self.states];
        v[self.start] = 1;
        for &a in word {
            let mut next = vec![0u64; self.states];
            for &(x, y) in &self.edges[a] {
                next[y] = add(next[y], v[x]);
            }
            v = next;
        }
        self.finals.iter().fold(0, |acc, &f| add(acc, v[f]))
    }

    fn count_saturating(&self, word: &[usize], cap: u64) -> u64 {
        self.count_with(word, |x, y| x.saturating_add(y).min(cap))
    }

    fn count_mod(&self, word: &[usize], p: u64) -> u64 {
        self.count_with(word, |x, y| (x + y) % p)
    }
}

/// The morphism into `k×k` matrices over integers mod `p`.
#[derive(Clone, Debug, Serialize)]
pub struct CounterMorphism {
    pub p: u64,
    pub r: u64,
    pub dim: usize,
    pub start: usize,
    pub finals: Vec<usize>,
    /// One matrix per letter of the common alphabet.
    pub letters: Vec<Vec<Vec<u64>>>,
}

impl CounterMorphism {
    pub fn image(&self, word: &[usize]) -> Vec<Vec<u64>> {
        let id: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| u64::from(i == j)).collect())
            .collect();
        word.iter()
            .fold(id, |m, &a| mat_mul_mod(&m, &self.letters[a], self.p))
    }

    /// `sum over f in F of (wφ)_(s,f)` mod `p`.
    pub fn count_mod_p(&self, word: &[usize]) -> u64 {
        let m = self.image(word);
        self.finals.iter().fold(0, |acc, &f| (acc + m[self.start][f]) % self.p)
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.count_mod_p(word) == self.r
    }
}

fn mat_mul_mod(a: &[Vec<u64>], b: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, r)| (acc + x * r[j]) % p))
                .collect()
        })
        .collect()
}

pub fn counter_matrix(spec: &MarkedProductSpec) -> Result<CounterMorphism> {
    let c = spec
        .counter
        .ok_or_else(|| Error::InvalidAutomaton("marked product has no counter".into()))?;
    if let Some(i) = spec.factors.iter().position(|f| !f.is_trim()) {
        return Err(Error::NotTrim(i));
    }
    let glued = GluedAutomaton::new(spec);
    let p = c.p;
    Ok(CounterMorphism {
        p,
        r: c.r,
        dim: glued.states,
        start: glued.start,
        finals: glued.finals.clone(),
        letters: glued.matrices(0u64, |x| (x + 1) % p),
    })
}

/// Number of factorizations `w = u0 a1 u1 ... an un` with `ui ∈ Li`, by
/// enumerating the positions of the marked letters.
pub fn count_factorizations(spec: &MarkedProductSpec, word: &[usize]) -> Result<u64> {
    if word.len() > MAX_ENUMERATED_LENGTH {
        return Err(Error::WordTooLong(word.len()));
    }
    fn go(spec: &MarkedProductSpec, word: &[usize], i: usize, from: usize) -> u64 {
        let factor = &spec.factors[i];
        if i == spec.letters.len() {
            return u64::from(factor.accepts(&word[from..]));
        }
        (from..word.len())
            .filter(|&pos| word[pos] == spec.letters[i] && factor.accepts(&word[from..pos]))
            .map(|pos| go(spec, word, i + 1, pos + 1))
            .sum()
    }
    Ok(go(spec, word, 0, 0))
}

#[derive(Clone, Debug, Serialize)]
pub struct Unambiguity {
    pub unambiguous: bool,
    /// Shortest word with two or more factorizations.
    pub witness: Option<String>,
    /// Size of the saturated counting-matrix monoid.
    pub closure_size: usize,
}

pub fn is_unambiguous(spec: &MarkedProductSpec) -> Result<Unambiguity> {
    is_unambiguous_capped(spec, DEFAULT_CAP)
}

/// Closes the counting matrices with entries saturated at 2. A word is
/// ambiguous exactly when its matrix has at least two paths from the start
/// to the finals, so the first such element in breadth-first order spells a
/// shortest ambiguous word.
pub fn is_unambiguous_capped(spec: &MarkedProductSpec, cap: usize) -> Result<Unambiguity> {
    let glued = GluedAutomaton::new(spec);
    let gens = glued.matrices(0u8, |&x| (x + 1).min(2));
    let n = glued.states;
    let id: Vec<Vec<u8>> = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
    let mul = |a: &Vec<Vec<u8>>, b: &Vec<Vec<u8>>| -> Vec<Vec<u8>> {
        a.iter()
            .map(|row| {
                (0..n)
                    .map(|j| {
                        row.iter()
                            .zip(b)
                            .fold(0u8, |acc, (&x, r)| (acc + (x * r[j]).min(2)).min(2))
                    })
                    .collect()
            })
            .collect()
    };
    let closure = close(spec.alphabet.clone(), &gens, Some(id), mul, cap)?;
    let paths = |m: &Vec<Vec<u8>>| glued.finals.iter().fold(0u8, |acc, &f| (acc + m[glued.start][f]).min(2));
    let bad = closure.elements.iter().position(|m| paths(m) >= 2);
    let words = closure.semigroup.gen_words().expect("closure records words");
    Ok(Unambiguity {
        unambiguous: bad.is_none(),
        witness: bad.map(|x| words.spell(x)),
        closure_size: closure.elements.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `B*` over the given alphabet.
    fn star(alphabet: &[&str], allowed: &[&str]) -> Dfa {
        let delta = alphabet
            .iter()
            .map(|a| vec![allowed.contains(a).then_some(0)])
            .collect();
        Dfa::new(1, alphabet.iter().map(|a| a.to_string()).collect(), delta, 0, &[0]).unwrap()
    }

    fn spec(factors: Vec<Dfa>, letters: &[&str], counter: Option<(u64, u64)>) -> MarkedProductSpec {
        let mode = if counter.is_some() { ProductMode::Counter } else { ProductMode::Unambiguous };
        MarkedProductSpec::new(
            factors,
            letters.iter().map(|a| a.to_string()).collect(),
            counter.map(|(r, p)| Counter { r, p }),
            mode,
        )
        .unwrap()
    }

    #[test]
    fn counting_examples() {
        let s = spec(vec![star(&["a"], &["a"]), star(&["a"], &["a"])], &["a"], Some((1, 2)));
        let m = counter_matrix(&s).unwrap();
        for (w, n) in [("", 0), ("a", 1), ("aa", 2), ("aaa", 3)] {
            let w = s.parse_word(w).unwrap();
            assert_eq!(count_factorizations(&s, &w).unwrap(), n);
            assert_eq!(m.accepts(&w), n % 2 == 1);
            assert_eq!(s.accepts(&w), n % 2 == 1);
        }
        let two = spec(vec![star(&["a"], &["a"]); 3], &["a", "a"], None);
        assert_eq!(count_factorizations(&two, &[0, 0, 0]).unwrap(), 3);
        let ab = &["a", "b"];
        let first_a = spec(vec![star(ab, &["b"]), star(ab, ab)], &["a"], Some((1, 2)));
        let w = first_a.parse_word("aba").unwrap();
        assert_eq!(count_factorizations(&first_a, &w).unwrap(), 1);
        assert!(counter_matrix(&first_a).unwrap().accepts(&w));
        assert_eq!(count_factorizations(&first_a, &[1, 1]).unwrap(), 0);
        assert!(matches!(
            count_factorizations(&first_a, &[0; 21]),
            Err(Error::WordTooLong(21))
        ));
    }

    #[test]
    fn untrimmed_factor_is_rejected() {
        let dead = Dfa::new(2, vec!["a".into()], vec![vec![Some(0), Some(0)]], 0, &[0]).unwrap();
        let s = spec(vec![dead, star(&["a"], &["a"])], &["a"], Some((0, 2)));
        assert!(matches!(counter_matrix(&s), Err(Error::NotTrim(0))));
    }

    #[test]
    fn unambiguity_examples() {
        let ab = &["a", "b"];
        let first_a = spec(vec![star(ab, &["b"]), star(ab, ab)], &["a"], None);
        assert!(is_unambiguous(&first_a).unwrap().unambiguous);
        let any_a = spec(vec![star(&["a"], &["a"]), star(&["a"], &["a"])], &["a"], None);
        let u = is_unambiguous(&any_a).unwrap();
        assert!(!u.unambiguous);
        assert_eq!(u.witness.as_deref(), Some("aa"));
        let abc = &["a", "b", "c"];
        let disjoint = spec(vec![star(abc, &["b"]), star(abc, &["c"])], &["a"], None);
        assert!(is_unambiguous(&disjoint).unwrap().unambiguous);
    }

    #[test]
    fn json_round_trip() {
        let text = r#"{"factors":[
            {"states":1,"alphabet":["b"],"delta":{"b":[0]},"start":0,"finals":[0]},
            {"states":1,"alphabet":["a","b"],"delta":{"a":[0],"b":[0]},"start":0,"finals":[0]}],
            "letters":["a"],"counter":{"r":1,"p":3},"mode":"counter"}"#;
        let s = MarkedProductSpec::from_json(text).unwrap();
        assert_eq!(s.alphabet(), ["b", "a"]);
        assert_eq!(s.counter(), Some(Counter { r: 1, p: 3 }));
        let again = MarkedProductSpec::from_json(&s.to_json().to_string()).unwrap();
        assert_eq!(again.to_json(), s.to_json());
    }
}
