use std::fmt;
use std::path::Path;

use fsemi::automata::{ds_sync_word, shortest_sync_word, syntactic_monoid, Dfa};
use fsemi::congruence::Congruence;
use fsemi::greens::greens;
use fsemi::io::{parse_semigroup, semigroup_to_json};
use fsemi::marked::{count_factorizations, counter_matrix, is_unambiguous, MarkedProductSpec, ProductMode};
use fsemi::radical::{radical_quotient, rhodes_radical, rhodes_radical_oracle};
use fsemi::rep::{triangularize, TriangularMode};
use fsemi::variety::{classify_representability, variety_member};
use fsemi::{corpus, Error, FieldSpec, FiniteSemigroup, VarietyId};
use serde_json::{json, Value};

use crate::{Command, Mode, SyncMethod};

pub enum Failure {
    Io(String),
    Core(Error),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

pub struct Outcome {
    pub report: Value,
    pub summary: String,
    pub code: u8,
}

impl Outcome {
    fn ok(report: Value, summary: impl Into<String>) -> Self {
        Outcome {
            report,
            summary: summary.into(),
            code: 0,
        }
    }
}

/// 1 for refusals a well-formed input can legitimately meet, 2 otherwise.
pub fn exit_code(f: &Failure) -> u8 {
    match f {
        Failure::Io(_) => 2,
        Failure::Core(e) => match e {
            Error::Refusal(_)
            | Error::NotInDs(_)
            | Error::NotSynchronizing
            | Error::Undecided(_)
            | Error::CapExceeded(_)
            | Error::NoLargest(_) => 1,
            _ => 2,
        },
    }
}

pub fn error_report(f: &Failure) -> Value {
    let witness = match f {
        Failure::Core(Error::Refusal(w) | Error::NotInDs(w)) => serde_json::to_value(w).ok(),
        _ => None,
    };
    let mut v = json!({
        "ok": false,
        "refused": exit_code(f) == 1,
        "error": f.to_string(),
    });
    if let Some(w) = witness {
        v["witness"] = w;
    }
    v
}

fn read(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::Io(format!("stdin: {e}")));
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn semigroup(path: &Path) -> Result<FiniteSemigroup, Failure> {
    Ok(parse_semigroup(&read(path)?)?)
}

fn field(s: &str) -> Result<FieldSpec, Failure> {
    Ok(s.parse::<FieldSpec>()?)
}

fn classes(c: &Congruence) -> Value {
    json!(c.classes())
}

pub fn run(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Greens { input } => greens_report(&semigroup(input)?),
        Command::Radical { field: k, input } => {
            let k = field(k)?;
            radical_report(&semigroup(input)?, &k)
        }
        Command::Variety { id, input } => {
            let v: VarietyId = id.parse()?;
            let s = semigroup(input)?;
            let verdict = variety_member(&s, &v);
            let summary = format!("{}: {}", v, if verdict.holds { "member" } else { "not a member" });
            Ok(Outcome::ok(
                json!({"variety": v.to_string(), "order": s.order(), "holds": verdict.holds, "witness": verdict.witness}),
                summary,
            ))
        }
        Command::Classify { field: k, input } => {
            let k = field(k)?;
            let s = semigroup(input)?;
            let r = classify_representability(&s, &k);
            let summary = format!(
                "over {}: triangularizable {}, unitriangularizable {}",
                r.field, r.triangularizable, r.unitriangularizable
            );
            Ok(Outcome::ok(serde_json::to_value(&r).expect("plain data"), summary))
        }
        Command::Triangularize { field: k, mode, input } => {
            let k = field(k)?;
            let s = semigroup(input)?;
            let mode = match mode {
                Mode::Triangular => TriangularMode::Triangular,
                Mode::Unitriangular => TriangularMode::Unitriangular,
            };
            let t = triangularize(&s, &k, mode)?;
            let summary = format!("{mode:?} form of dimension {} over {}", t.basis_labels.len(), t.field);
            Ok(Outcome::ok(serde_json::to_value(&t).expect("plain data"), summary))
        }
        Command::Sync { method, input } => sync_report(&Dfa::from_json(&read(input)?)?, *method),
        Command::Synmon { input } => synmon_report(&Dfa::from_json(&read(input)?)?),
        Command::Marked { input, words } => marked_report(&MarkedProductSpec::from_json(&read(input)?)?, words),
        Command::OracleCompare { field: k, input } => {
            let k = field(k)?;
            let s = semigroup(input)?;
            let fast = rhodes_radical(&s, &k).congruence;
            let oracle = rhodes_radical_oracle(&s, &k)?;
            let agree = fast == oracle;
            Ok(Outcome {
                report: json!({
                    "field": k.to_string(),
                    "radical": classes(&fast),
                    "oracle": classes(&oracle),
                    "agree": agree,
                }),
                summary: format!("radical and oracle {}", if agree { "agree" } else { "DISAGREE" }),
                code: if agree { 0 } else { 1 },
            })
        }
        Command::Corpus { max_order, curated } => corpus_report(*max_order, *curated),
    }
}

fn greens_report(s: &FiniteSemigroup) -> Result<Outcome, Failure> {
    let g = greens(s);
    let order: Vec<(usize, usize)> = (0..g.j_count())
        .flat_map(|a| (0..g.j_count()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && g.j_le(a, b))
        .collect();
    let report = json!({
        "order": s.order(),
        "identity": s.identity(),
        "zero": s.zero(),
        "idempotents": g.idempotents,
        "r_classes": g.r_classes,
        "l_classes": g.l_classes,
        "h_classes": g.h_classes,
        "j_classes": g.j_classes,
        "regular_j_classes": g.regular_j_classes().collect::<Vec<_>>(),
        "j_below": order,
    });
    let summary = format!(
        "order {}, {} J-classes ({} regular), {} idempotents",
        s.order(),
        g.j_count(),
        g.regular_j_classes().count(),
        g.idempotents.len()
    );
    Ok(Outcome::ok(report, summary))
}

fn radical_report(s: &FiniteSemigroup, k: &FieldSpec) -> Result<Outcome, Failure> {
    let rad = rhodes_radical(s, k);
    let q = radical_quotient(s, k);
    let per_class: Vec<Value> = rad
        .per_j_class
        .iter()
        .map(|(data, c)| {
            json!({
                "j_class": data.coords.j_class,
                "idempotent": data.coords.idempotent,
                "normal_subgroup": data.normal_subgroup,
                "classes": classes(c),
            })
        })
        .collect();
    let report = json!({
        "field": k.to_string(),
        "order": s.order(),
        "classes": classes(&rad.congruence),
        "universal": rad.congruence.is_universal(),
        "equality": rad.congruence.is_equality(),
        "quotient_order": q.semigroup.order(),
        "quotient": semigroup_to_json(&q.semigroup),
        "quotient_map": q.map,
        "per_j_class": per_class,
    });
    let summary = format!(
        "radical over {}: {} classes, quotient order {}",
        k,
        rad.congruence.class_count(),
        q.semigroup.order()
    );
    Ok(Outcome::ok(report, summary))
}

fn sync_report(dfa: &Dfa, method: SyncMethod) -> Result<Outcome, Failure> {
    let maps = dfa.letter_maps()?;
    let n = dfa.states();
    let bound = (n - 1) * (n - 1);
    let (word, extra) = match method {
        SyncMethod::Bfs => {
            let plain: Vec<Vec<usize>> = maps.iter().map(|(_, m)| m.clone()).collect();
            (shortest_sync_word(&plain, n)?, json!({"method": "bfs"}))
        }
        SyncMethod::Ds => {
            let out = ds_sync_word(&maps)?;
            let extra = json!({
                "method": "ds",
                "base": dfa.spell(&out.base),
                "power": out.power,
                "blocks": out.blocks,
                "refined_bound": out.refined_bound,
            });
            (out.word, extra)
        }
    };
    let verified = (0..n)
        .map(|q| word.iter().fold(q, |q, &a| maps[a].1[q]))
        .collect::<std::collections::BTreeSet<_>>()
        .len()
        == 1;
    let mut report = json!({
        "states": n,
        "word": dfa.spell(&word),
        "length": word.len(),
        "bound": bound,
        "verified": verified,
    });
    for (k, v) in extra.as_object().expect("object") {
        report[k] = v.clone();
    }
    let summary = format!("synchronizing word of length {} (bound {bound}), verified {verified}", word.len());
    Ok(Outcome::ok(report, summary))
}

fn synmon_report(dfa: &Dfa) -> Result<Outcome, Failure> {
    let minimal = dfa.minimize();
    let m = syntactic_monoid(dfa)?;
    let s = m.semigroup();
    let accepting: Vec<usize> = s
        .elements()
        .filter(|&x| minimal.is_final(m.monoid.maps[x][minimal.start()]))
        .collect();
    let letters: serde_json::Map<String, Value> = dfa
        .alphabet()
        .iter()
        .zip(&m.letters)
        .map(|(a, &x)| (a.clone(), json!(x)))
        .collect();
    let words: Vec<String> = match s.gen_words() {
        Some(w) => s.elements().map(|x| w.spell(x)).collect(),
        None => Vec::new(),
    };
    let report = json!({
        "order": s.order(),
        "minimal_states": minimal.states(),
        "monoid": semigroup_to_json(s),
        "letters": letters,
        "words": words,
        "accepting": accepting,
    });
    let summary = format!("syntactic monoid of order {} ({} minimal states)", s.order(), minimal.states());
    Ok(Outcome::ok(report, summary))
}

fn marked_report(spec: &MarkedProductSpec, words: &[String]) -> Result<Outcome, Failure> {
    let mut report = json!({
        "alphabet": spec.alphabet(),
        "mode": spec.mode(),
        "factors": spec.factors().len(),
    });
    let mut summary = Vec::new();
    let matrices = match spec.counter() {
        Some(_) => Some(counter_matrix(spec)?),
        None => None,
    };
    if let Some(m) = &matrices {
        report["counter"] = json!({"r": m.r, "p": m.p});
        report["counter_matrix"] = serde_json::to_value(m).expect("plain data");
        summary.push(format!("counter matrices of dimension {}", m.dim));
    }
    if spec.mode() != ProductMode::Counter || spec.counter().is_none() {
        let u = is_unambiguous(spec)?;
        summary.push(if u.unambiguous {
            "unambiguous".to_string()
        } else {
            format!("ambiguous, witness {:?}", u.witness.as_deref().unwrap_or(""))
        });
        report["unambiguity"] = serde_json::to_value(&u).expect("plain data");
    }
    let mut tested = Vec::new();
    for w in words {
        let letters = spec.parse_word(w)?;
        let count = count_factorizations(spec, &letters)?;
        let mut entry = json!({
            "word": w,
            "factorizations": count,
            "member": spec.accepts(&letters),
        });
        if let Some(m) = &matrices {
            entry["matrix_count_mod_p"] = json!(m.count_mod_p(&letters));
        }
        tested.push(entry);
    }
    report["words"] = json!(tested);
    Ok(Outcome::ok(report, summary.join("; ")))
}

fn corpus_report(max_order: Option<usize>, curated: bool) -> Result<Outcome, Failure> {
    let items: Vec<(String, FiniteSemigroup)> = if curated {
        corpus::curated().into_iter().map(|(n, s)| (n.to_string(), s)).collect()
    } else {
        corpus::exhaustive(max_order.unwrap_or(corpus::EXHAUSTIVE_MAX_ORDER))?
            .into_iter()
            .enumerate()
            .map(|(i, s)| (format!("table-{}-{i}", s.order()), s))
            .collect()
    };
    let list: Vec<Value> = items
        .iter()
        .map(|(name, s)| {
            let mut v = semigroup_to_json(s);
            v["name"] = json!(name);
            v
        })
        .collect();
    let summary = format!("{} semigroups", list.len());
    Ok(Outcome::ok(json!({"count": list.len(), "semigroups": list}), summary))
}
