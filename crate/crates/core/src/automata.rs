//! Deterministic automata, transition and syntactic monoids, and
//! synchronizing words.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::arith::{Field, Rationals};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_matrix, Mat};
use crate::rep::{block_form, composition_flag, MatrixRep};
use crate::semigroup::{close, spell, FiniteSemigroup, TransformationSemigroup, DEFAULT_CAP};
use crate::variety::{variety_member, VarietyId};

/// Largest state count accepted by the subset-search oracle.
pub const BFS_STATE_LIMIT: usize = 16;

/// A deterministic automaton whose transitions may be undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    states: usize,
    alphabet: Vec<String>,
    /// `delta[a][q]`.
    delta: Vec<Vec<Option<usize>>>,
    start: usize,
    finals: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct DfaJson {
    states: usize,
    alphabet: Vec<String>,
    delta: BTreeMap<String, Vec<Option<usize>>>,
    start: usize,
    finals: Vec<usize>,
}

impl Dfa {
    pub fn new(
        states: usize,
        alphabet: Vec<String>,
        delta: Vec<Vec<Option<usize>>>,
        start: usize,
        finals: &[usize],
    ) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidAutomaton(m));
        if states == 0 {
            return bad("an automaton needs at least one state".into());
        }
        if delta.len() != alphabet.len() {
            return bad(format!("{} letters but {} transition rows", alphabet.len(), delta.len()));
        }
        for (i, a) in alphabet.iter().enumerate() {
            if a.is_empty() || a.chars().any(char::is_whitespace) {
                return bad(format!("invalid letter {a:?}"));
            }
            if alphabet[..i].contains(a) {
                return bad(format!("letter {a} repeated"));
            }
        }
        for (a, row) in alphabet.iter().zip(&delta) {
            if row.len() != states {
                return bad(format!("letter {a} has {} targets, expected {states}", row.len()));
            }
            if let Some(q) = row.iter().flatten().find(|&&q| q >= states) {
                return Err(Error::IndexOutOfRange { index: *q, order: states });
            }
        }
        if start >= states {
            return Err(Error::IndexOutOfRange { index: start, order: states });
        }
        let mut fin = vec![false; states];
        for &f in finals {
            if f >= states {
                return Err(Error::IndexOutOfRange { index: f, order: states });
            }
            fin[f] = true;
        }
        Ok(Dfa {
            states,
            alphabet,
            delta,
            start,
            finals: fin,
        })
    }

    /// A complete automaton from letter maps.
    pub fn from_maps(maps: &[(String, Vec<usize>)], start: usize, finals: &[usize]) -> Result<Self> {
        let states = maps.first().map_or(1, |(_, m)| m.len());
        let alphabet = maps.iter().map(|(a, _)| a.clone()).collect();
        let delta = maps
            .iter()
            .map(|(_, m)| m.iter().map(|&q| Some(q)).collect())
            .collect();
        Dfa::new(states, alphabet, delta, start, finals)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: DfaJson = serde_json::from_str(text)?;
        Self::from_json_value(raw)
    }

    fn from_json_value(raw: DfaJson) -> Result<Self> {
        let mut delta = Vec::with_capacity(raw.alphabet.len());
        for a in &raw.alphabet {
            let row = raw
                .delta
                .get(a)
                .cloned()
                .unwrap_or_else(|| vec![None; raw.states]);
            delta.push(row);
        }
        if let Some(extra) = raw.delta.keys().find(|k| !raw.alphabet.contains(k)) {
            return Err(Error::InvalidAutomaton(format!("transitions for unknown letter {extra}")));
        }
        Dfa::new(raw.states, raw.alphabet, delta, raw.start, &raw.finals)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let raw = DfaJson {
            states: self.states,
            alphabet: self.alphabet.clone(),
            delta: self
                .alphabet
                .iter()
                .cloned()
                .zip(self.delta.iter().cloned())
                .collect(),
            start: self.start,
            finals: self.final_states(),
        };
        serde_json::to_value(raw).expect("plain data")
    }

    pub fn states(&self) -> usize {
        self.states
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    pub fn final_states(&self) -> Vec<usize> {
        (0..self.states).filter(|&q| self.finals[q]).collect()
    }

    pub fn step(&self, q: usize, a: usize) -> Option<usize> {
        self.delta[a][q]
    }

    pub fn letter_index(&self, a: &str) -> Option<usize> {
        self.alphabet.iter().position(|x| x == a)
    }

    /// Reads a word: one letter per character when every letter is a single
    /// character, otherwise whitespace-separated tokens.
    pub fn parse_word(&self, w: &str) -> Result<Vec<usize>> {
        parse_word(&self.alphabet, w)
    }

    pub fn spell(&self, w: &[usize]) -> String {
        spell(&self.alphabet, w)
    }

    pub fn run_from(&self, q: usize, word: &[usize]) -> Option<usize> {
        word.iter().try_fold(q, |q, &a| self.step(q, a))
    }

    pub fn accepts(&self, word: &[usize]) -> bool {
        self.run_from(self.start, word).is_some_and(|q| self.finals[q])
    }

    pub fn is_total(&self) -> bool {
        self.delta.iter().all(|row| row.iter().all(Option::is_some))
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.states];
        seen[self.start] = true;
        let mut stack = vec![self.start];
        while let Some(q) = stack.pop() {
            for row in &self.delta {
                if let Some(r) = row[q] {
                    if !seen[r] {
                        seen[r] = true;
                        stack.push(r);
                    }
                }
            }
        }
        seen
    }

    pub fn coreachable(&self) -> Vec<bool> {
        let mut seen = self.finals.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for q in 0..self.states {
                if !seen[q] && self.delta.iter().any(|row| row[q].is_some_and(|r| seen[r])) {
                    seen[q] = true;
                    changed = true;
                }
            }
        }
        seen
    }

    /// Every state is reachable from the start and reaches a final state.
    pub fn is_trim(&self) -> bool {
        let (r, c) = (self.reachable(), self.coreachable());
        (0..self.states).all(|q| r[q] && c[q])
    }

    /// Removes useless states. The empty language keeps a lone start state.
    pub fn trim(&self) -> Dfa {
        let (r, c) = (self.reachable(), self.coreachable());
        let keep: Vec<usize> = (0..self.states).filter(|&q| r[q] && c[q]).collect();
        if !keep.contains(&self.start) {
            return Dfa::new(1, self.alphabet.clone(), vec![vec![None]; self.alphabet.len()], 0, &[])
                .expect("valid");
        }
        self.restrict_to(&keep)
    }

    fn restrict_to(&self, keep: &[usize]) -> Dfa {
        let mut index = vec![None; self.states];
        for (i, &q) in keep.iter().enumerate() {
            index[q] = Some(i);
        }
        let delta = self
            .delta
            .iter()
            .map(|row| keep.iter().map(|&q| row[q].and_then(|r| index[r])).collect())
            .collect();
        let finals: Vec<usize> = keep
            .iter()
            .enumerate()
            .filter(|(_, &q)| self.finals[q])
            .map(|(i, _)| i)
            .collect();
        Dfa::new(
            keep.len(),
            self.alphabet.clone(),
            delta,
            index[self.start].expect("start kept"),
            &finals,
        )
        .expect("restriction is valid")
    }

    /// Adds a sink state, last, when some transition is undefined.
    pub fn complete(&self) -> Dfa {
        if self.is_total() {
            return self.clone();
        }
        let sink = self.states;
        let delta = self
            .delta
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| Some(t.unwrap_or(sink)))
                    .chain(std::iter::once(Some(sink)))
                    .collect()
            })
            .collect();
        Dfa::new(self.states + 1, self.alphabet.clone(), delta, self.start, &self.final_states())
            .expect("completion is valid")
    }

    /// Total letter actions; fails on undefined transitions.
    pub fn letter_maps(&self) -> Result<Vec<(String, Vec<usize>)>> {
        self.alphabet
            .iter()
            .zip(&self.delta)
            .map(|(a, row)| {
                let m: Option<Vec<usize>> = row.iter().copied().collect();
                m.map(|m| (a.clone(), m))
                    .ok_or_else(|| Error::InvalidAutomaton(format!("letter {a} is not total")))
            })
            .collect()
    }

    /// The minimal complete automaton, states numbered in breadth-first
    /// order from the start (Moore's partition refinement).
    pub fn minimize(&self) -> Dfa {
        let total = self.complete();
        let reach = total.reachable();
        let live: Vec<usize> = (0..total.states).filter(|&q| reach[q]).collect();
        let total = total.restrict_to(&live);
        let n = total.states;
        let mut class: Vec<usize> = (0..n).map(|q| usize::from(total.finals[q])).collect();
        loop {
            let mut sig_ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
            let next: Vec<usize> = (0..n)
                .map(|q| {
                    let mut sig = vec![class[q]];
                    sig.extend(total.delta.iter().map(|row| class[row[q].expect("total")]));
                    let k = sig_ids.len();
                    *sig_ids.entry(sig).or_insert(k)
                })
                .collect();
            let stable = sig_ids.len() == class.iter().collect::<std::collections::BTreeSet<_>>().len();
            class = next;
            if stable {
                break;
            }
        }
        // Renumber classes breadth-first from the start.
        let k = class.iter().max().map_or(0, |m| m + 1);
        let mut rep = vec![usize::MAX; k];
        for q in 0..n {
            if rep[class[q]] == usize::MAX {
                rep[class[q]] = q;
            }
        }
        let mut order = vec![usize::MAX; k];
        let mut queue = VecDeque::from([class[total.start]]);
        order[class[total.start]] = 0;
        let mut seq = vec![class[total.start]];
        while let Some(c) = queue.pop_front() {
            for row in &total.delta {
                let d = class[row[rep[c]].expect("total")];
                if order[d] == usize::MAX {
                    order[d] = seq.len();
                    seq.push(d);
                    queue.push_back(d);
                }
            }
        }
        let delta = total
            .delta
            .iter()
            .map(|row| seq.iter().map(|&c| Some(order[class[row[rep[c]].expect("total")]])).collect())
            .collect();
        let finals: Vec<usize> = seq
            .iter()
            .enumerate()
            .filter(|(_, &c)| total.finals[rep[c]])
            .map(|(i, _)| i)
            .collect();
        Dfa::new(seq.len(), total.alphabet.clone(), delta, 0, &finals).expect("minimal automaton")
    }
}

pub fn parse_word(alphabet: &[String], w: &str) -> Result<Vec<usize>> {
    let lookup = |t: &str| {
        alphabet
            .iter()
            .position(|a| a == t)
            .ok_or_else(|| Error::InvalidAutomaton(format!("unknown letter {t:?}")))
    };
    if alphabet.iter().all(|a| a.chars().count() == 1) {
        w.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| lookup(&c.to_string()))
            .collect()
    } else {
        w.split_whitespace().map(lookup).collect()
    }
}

/// A transition monoid with the element of each letter.
#[derive(Clone, Debug)]
pub struct TransitionMonoid {
    pub monoid: TransformationSemigroup,
    pub letters: Vec<usize>,
}

impl TransitionMonoid {
    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.monoid.semigroup
    }

    /// The element represented by a word.
    pub fn element_of(&self, word: &[usize]) -> usize {
        let s = self.semigroup();
        let id = s.identity().expect("transition monoids have an identity");
        word.iter().fold(id, |x, &a| s.mul(x, self.letters[a]))
    }
}

/// Transition monoid of the letter actions (completed with a sink when the
/// automaton is partial). The identity is always present.
pub fn transition_monoid(dfa: &Dfa) -> Result<TransitionMonoid> {
    transition_monoid_capped(dfa, DEFAULT_CAP)
}

pub fn transition_monoid_capped(dfa: &Dfa, cap: usize) -> Result<TransitionMonoid> {
    let maps = dfa.complete().letter_maps()?;
    monoid_of_maps(&maps, cap)
}

pub fn monoid_of_maps(maps: &[(String, Vec<usize>)], cap: usize) -> Result<TransitionMonoid> {
    let degree = maps.first().map_or(1, |(_, m)| m.len());
    let monoid = TransformationSemigroup::generate(degree, maps, true, cap)?;
    let letters = maps
        .iter()
        .map(|(_, m)| monoid.maps.iter().position(|x| x == m).expect("generator present"))
        .collect();
    Ok(TransitionMonoid { monoid, letters })
}

pub type BoolMatrix = Vec<Vec<bool>>;

fn bool_mul(a: &BoolMatrix, b: &BoolMatrix) -> BoolMatrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).any(|(&x, r)| x && r[j]))
                .collect()
        })
        .collect()
}

/// Monoid generated by relation matrices of a nondeterministic automaton.
pub fn boolean_matrix_monoid(
    states: usize,
    letters: &[(String, BoolMatrix)],
    cap: usize,
) -> Result<(FiniteSemigroup, Vec<BoolMatrix>)> {
    for (a, m) in letters {
        if m.len() != states || m.iter().any(|r| r.len() != states) {
            return Err(Error::InvalidAutomaton(format!("matrix for {a} is not {states}x{states}")));
        }
    }
    let labels = letters.iter().map(|(a, _)| a.clone()).collect();
    let gens: Vec<BoolMatrix> = letters.iter().map(|(_, m)| m.clone()).collect();
    let id: BoolMatrix = (0..states).map(|i| (0..states).map(|j| i == j).collect()).collect();
    let c = close(labels, &gens, Some(id), bool_mul, cap)?;
    Ok((c.semigroup, c.elements))
}

/// Transition monoid of the minimal automaton.
pub fn syntactic_monoid(dfa: &Dfa) -> Result<TransitionMonoid> {
    transition_monoid(&dfa.minimize())
}

fn image_size(maps: &[Vec<usize>], word: &[usize], n: usize) -> usize {
    let mut seen = vec![false; n];
    for q in 0..n {
        seen[word.iter().fold(q, |q, &a| maps[a][q])] = true;
    }
    seen.iter().filter(|&&b| b).count()
}

/// Whether some word maps every state to one state: every pair of states
/// can be merged.
pub fn is_synchronizing(maps: &[Vec<usize>], n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    // Backward search over unordered pairs from the diagonal.
    let idx = |p: usize, q: usize| p.min(q) * n + p.max(q);
    let mut merged = vec![false; n * n];
    let mut queue: VecDeque<(usize, usize)> = (0..n).map(|q| (q, q)).collect();
    for q in 0..n {
        merged[idx(q, q)] = true;
    }
    let mut preimages: Vec<Vec<Vec<usize>>> = maps
        .iter()
        .map(|_| vec![Vec::new(); n])
        .collect();
    for (a, m) in maps.iter().enumerate() {
        for q in 0..n {
            preimages[a][m[q]].push(q);
        }
    }
    while let Some((p, q)) = queue.pop_front() {
        for pre in &preimages {
            for &x in &pre[p] {
                for &y in &pre[q] {
                    if !merged[idx(x, y)] {
                        merged[idx(x, y)] = true;
                        queue.push_back((x, y));
                    }
                }
            }
        }
    }
    (0..n).all(|p| (p..n).all(|q| merged[idx(p, q)]))
}

/// A shortest synchronizing word, found breadth-first over subsets reached
/// from the full state set. Letters apply left to right.
pub fn shortest_sync_word(maps: &[Vec<usize>], n: usize) -> Result<Vec<usize>> {
    if n > BFS_STATE_LIMIT {
        return Err(Error::InvalidAutomaton(format!(
            "subset search supports at most {BFS_STATE_LIMIT} states"
        )));
    }
    if n <= 1 {
        return Ok(Vec::new());
    }
    let full: u32 = (1u32 << n) - 1;
    let mut parent: Vec<Option<(u32, usize)>> = vec![None; 1 << n];
    let mut seen = vec![false; 1 << n];
    seen[full as usize] = true;
    let mut queue = VecDeque::from([full]);
    while let Some(set) = queue.pop_front() {
        for (a, m) in maps.iter().enumerate() {
            let mut next = 0u32;
            for q in 0..n {
                if set >> q & 1 == 1 {
                    next |= 1 << m[q];
                }
            }
            if seen[next as usize] {
                continue;
            }
            seen[next as usize] = true;
            parent[next as usize] = Some((set, a));
            if next.count_ones() == 1 {
                let mut word = Vec::new();
                let mut cur = next;
                while let Some((prev, a)) = parent[cur as usize] {
                    word.push(a);
                    cur = prev;
                }
                word.reverse();
                return Ok(word);
            }
            queue.push_back(next);
        }
    }
    Err(Error::NotSynchronizing)
}

/// Matrices of the action on `V_0`, with basis `f_i = e_(n-1) - e_i`.
///
/// `f_i·m = f_(m(i)) - f_(m(n-1))` where `f_(n-1) = 0`, so `m` acts as zero
/// exactly when it is constant.
pub fn sync_rep_matrix(map: &[usize]) -> Mat<i64> {
    let n = map.len();
    let k = n.saturating_sub(1);
    let top = map[n - 1];
    (0..k)
        .map(|i| {
            let mut row = vec![0i64; k];
            if map[i] != n - 1 {
                row[map[i]] += 1;
            }
            if top != n - 1 {
                row[top] -= 1;
            }
            row
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct DsSyncWord {
    /// The synchronizing word `u^power`.
    pub word: Vec<usize>,
    /// One letter per composition block, without repetition.
    pub base: Vec<usize>,
    pub power: usize,
    /// Number of composition factors `r` of the action on `V_0`.
    pub blocks: usize,
    /// `(n-1)^2`.
    pub bound: usize,
    /// `min(|A|, r)·r`.
    pub refined_bound: usize,
    pub verified: bool,
}

/// Synchronizing word for an automaton whose transition monoid lies in DS,
/// built from a composition series of the action on `V_0` over `Q`.
pub fn ds_sync_word(maps: &[(String, Vec<usize>)]) -> Result<DsSyncWord> {
    let n = maps.first().map_or(1, |(_, m)| m.len());
    let letter_maps: Vec<Vec<usize>> = maps.iter().map(|(_, m)| m.clone()).collect();
    let tm = monoid_of_maps(maps, DEFAULT_CAP)?;
    let verdict = variety_member(tm.semigroup(), &VarietyId::DS);
    if let Some(w) = verdict.witness {
        return Err(Error::NotInDs(w));
    }
    if !is_synchronizing(&letter_maps, n) {
        return Err(Error::NotSynchronizing);
    }
    let k = n - 1;
    if k == 0 {
        return Ok(DsSyncWord {
            word: Vec::new(),
            base: Vec::new(),
            power: 0,
            blocks: 0,
            bound: 0,
            refined_bound: 0,
            verified: true,
        });
    }
    let q = Rationals;
    let images: Vec<Mat<_>> = tm
        .monoid
        .maps
        .iter()
        .map(|m| {
            sync_rep_matrix(m)
                .iter()
                .map(|r| r.iter().map(|&x| q.from_int(x)).collect())
                .collect()
        })
        .collect();
    let labels = (0..k).map(|i| format!("f{i}")).collect();
    let rep = MatrixRep::new_unchecked(q.clone(), tm.semigroup().clone(), images, labels)?;
    let flag = composition_flag(&rep)?;
    let form = block_form(&rep, &flag)?;
    let r = form.blocks.len();
    let mut base: Vec<usize> = Vec::new();
    for block in &form.blocks {
        let zero_on = |a: usize| {
            let m = &form.conjugated[tm.letters[a]];
            let cut: Mat<_> = m[block.offset..block.offset + block.size]
                .iter()
                .map(|row| row[block.offset..block.offset + block.size].to_vec())
                .collect();
            is_zero_matrix(&q, &cut)
        };
        if base.iter().any(|&a| zero_on(a)) {
            continue;
        }
        let a = (0..maps.len()).find(|&a| zero_on(a)).ok_or(Error::Undecided(block.size))?;
        base.push(a);
    }
    let mut word = Vec::new();
    let mut power = 0;
    while power < r && image_size(&letter_maps, &word, n) > 1 {
        word.extend_from_slice(&base);
        power += 1;
    }
    let verified = image_size(&letter_maps, &word, n) == 1;
    if !verified {
        return Err(Error::Undecided(k));
    }
    Ok(DsSyncWord {
        word,
        power,
        blocks: r,
        bound: k * k,
        refined_bound: maps.len().min(r) * r,
        base,
        verified,
    })
}

/// The Černý automaton `C_n`: `a` cycles the states, `b` sends `n-1` to `0`.
pub fn cerny(n: usize) -> Vec<(String, Vec<usize>)> {
    let a = (0..n).map(|q| (q + 1) % n).collect();
    let b = (0..n).map(|q| if q == n - 1 { 0 } else { q }).collect();
    vec![("a".into(), a), ("b".into(), b)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letters(maps: &[&[usize]]) -> Vec<(String, Vec<usize>)> {
        maps.iter()
            .enumerate()
            .map(|(i, m)| (((b'a' + i as u8) as char).to_string(), m.to_vec()))
            .collect()
    }

    fn contains_a() -> Dfa {
        Dfa::from_maps(&letters(&[&[1, 1], &[0, 1]]), 0, &[1]).unwrap()
    }

    #[test]
    fn json_round_trip_and_partial_transitions() {
        let text = r#"{"states":2,"alphabet":["a","b"],"delta":{"a":[1,1],"b":[0,null]},"start":0,"finals":[1]}"#;
        let d = Dfa::from_json(text).unwrap();
        assert!(!d.is_total());
        assert!(d.accepts(&d.parse_word("ba").unwrap()));
        assert!(!d.accepts(&d.parse_word("ab").unwrap()));
        assert_eq!(Dfa::from_json(&d.to_json().to_string()).unwrap(), d);
        assert_eq!(d.complete().states(), 3);
        assert!(d.is_trim());
        assert!(!d.complete().is_trim());
        assert_eq!(d.complete().trim(), d);
    }

    #[test]
    fn transition_monoid_examples() {
        let one = Dfa::from_maps(&letters(&[&[0]]), 0, &[0]).unwrap();
        assert_eq!(transition_monoid(&one).unwrap().semigroup().order(), 1);
        let even = Dfa::from_maps(&letters(&[&[1, 0]]), 0, &[0]).unwrap();
        let z2 = transition_monoid(&even).unwrap();
        assert_eq!(z2.semigroup().order(), 2);
        assert!(crate::group::SubgroupTable::from_group(z2.semigroup()).is_ok());
        let single_a = Dfa::from_maps(&letters(&[&[1, 1]]), 0, &[1]).unwrap();
        let u1 = transition_monoid(&single_a).unwrap();
        assert_eq!(u1.semigroup().order(), 2);
        assert_eq!(u1.semigroup().zero(), Some(u1.letters[0]));
    }

    #[test]
    fn syntactic_monoid_examples() {
        let everything = Dfa::from_maps(&letters(&[&[1, 0]]), 0, &[0, 1]).unwrap();
        assert_eq!(syntactic_monoid(&everything).unwrap().semigroup().order(), 1);
        // A redundant copy of (aa)* with four states.
        let even = Dfa::from_maps(&letters(&[&[1, 2, 3, 0]]), 0, &[0, 2]).unwrap();
        assert_eq!(even.minimize().states(), 2);
        assert_eq!(syntactic_monoid(&even).unwrap().semigroup().order(), 2);
        let m = syntactic_monoid(&contains_a()).unwrap();
        assert_eq!(m.semigroup().order(), 2);
        assert!(crate::variety::variety_member(m.semigroup(), &VarietyId::Sl).holds);
    }

    #[test]
    fn syntactic_monoid_recognizes_the_language() {
        let d = Dfa::from_maps(&letters(&[&[1, 2, 2], &[0, 0, 2]]), 0, &[1]).unwrap();
        let m = syntactic_monoid(&d).unwrap();
        let min = d.minimize();
        let accepting: Vec<usize> = (0..m.semigroup().order())
            .filter(|&x| min.is_final(m.monoid.maps[x][min.start()]))
            .collect();
        for len in 0..=6 {
            for code in 0..(1usize << len) {
                let w: Vec<usize> = (0..len).map(|i| code >> i & 1).collect();
                assert_eq!(d.accepts(&w), accepting.contains(&m.element_of(&w)));
            }
        }
    }

    #[test]
    fn boolean_matrices() {
        // Nondeterministic guess of the last letter being a.
        let a = vec![vec![true, true], vec![false, false]];
        let b = vec![vec![true, false], vec![false, false]];
        let (m, _) = boolean_matrix_monoid(2, &[("a".into(), a), ("b".into(), b)], 100).unwrap();
        assert_eq!(m.order(), 3);
    }

    #[test]
    fn synchronizing_examples() {
        let with_constant = letters(&[&[1, 0, 2], &[2, 2, 2]]);
        let maps: Vec<Vec<usize>> = with_constant.iter().map(|(_, m)| m.clone()).collect();
        assert_eq!(shortest_sync_word(&maps, 3).unwrap(), vec![1]);
        let ex = [vec![0, 0, 2], vec![0, 1, 1]];
        assert!(is_synchronizing(&ex, 3));
        assert_eq!(shortest_sync_word(&ex, 3).unwrap(), vec![1, 0]);
        let perms = [vec![1, 2, 0], vec![1, 0, 2]];
        assert!(!is_synchronizing(&perms, 3));
        assert!(matches!(shortest_sync_word(&perms, 3), Err(Error::NotSynchronizing)));
        for n in 2..=6 {
            let c: Vec<Vec<usize>> = cerny(n).into_iter().map(|(_, m)| m).collect();
            assert_eq!(shortest_sync_word(&c, n).unwrap().len(), (n - 1) * (n - 1));
        }
    }

    #[test]
    fn sync_rep_zero_iff_constant() {
        for map in [[0, 0, 0], [2, 2, 2], [0, 1, 2], [1, 1, 0], [2, 0, 1]] {
            let m = sync_rep_matrix(&map);
            let zero = m.iter().all(|r| r.iter().all(|&x| x == 0));
            assert_eq!(zero, map.iter().all(|&q| q == map[0]));
        }
    }

    #[test]
    fn ds_sync_examples() {
        let ex = letters(&[&[0, 0, 2], &[0, 1, 1]]);
        let out = ds_sync_word(&ex).unwrap();
        assert!(out.verified && out.word.len() <= 4);
        assert!(out.word.len() <= out.refined_bound);
        let with_constant = letters(&[&[0, 0, 0], &[0, 1, 1]]);
        let out = ds_sync_word(&with_constant).unwrap();
        assert_eq!(out.word, vec![0]);
        for n in [3, 4] {
            assert!(matches!(ds_sync_word(&cerny(n)), Err(Error::NotInDs(_))));
        }
        let perms = letters(&[&[1, 0, 2]]);
        assert!(ds_sync_word(&perms).is_err());
    }
}
