mod common;

use common::*;
use fsemi::arith::{Field, GaloisField, Rationals};
use fsemi::automata::{ds_sync_word, shortest_sync_word, syntactic_monoid, sync_rep_matrix, Dfa};
use fsemi::congruence::{enumerate_congruences, is_v_congruence, quotient};
use fsemi::corpus;
use fsemi::greens::greens;
use fsemi::kernel::kernel_category_local_monoid;
use fsemi::linalg::{mat_mul, Subspace};
use fsemi::radical::{is_lg_k, rhodes_radical};
use fsemi::rep::{block_form, composition_flag, regular_representation, MatrixRep};
use fsemi::variety::{variety_member, VarietyId};
use fsemi::{FieldSpec, FiniteSemigroup};

fn field(s: &str) -> FieldSpec {
    s.parse().unwrap()
}

fn surjections(s: &FiniteSemigroup) -> Vec<(Vec<usize>, FiniteSemigroup)> {
    enumerate_congruences(s)
        .unwrap()
        .into_iter()
        .map(|c| {
            let q = quotient(s, &c);
            (q.map, q.semigroup)
        })
        .collect()
}

#[test]
fn radical_is_an_lg_k_congruence() {
    for (name, s) in corpus::standard() {
        for k in ["Q", "F2", "F3"] {
            let f = field(k);
            let rad = rhodes_radical(&s, &f).congruence;
            assert!(is_v_congruence(&s, &rad, &|t| is_lg_k(t, &f).holds).holds, "{name} {k}");
        }
    }
}

#[test]
fn radical_is_functorial() {
    for (name, s) in corpus::standard() {
        for k in ["Q", "F2"] {
            let f = field(k);
            let rad_s = rhodes_radical(&s, &f).congruence;
            for (phi, t) in surjections(&s) {
                let rad_t = rhodes_radical(&t, &f).congruence;
                // Related elements of S map to related elements of T.
                for a in s.elements() {
                    for b in s.elements() {
                        if rad_s.related(a, b) {
                            assert!(rad_t.related(phi[a], phi[b]), "{name} {k}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn trivial_kernel_local_monoids_give_li_morphisms() {
    for (name, s) in corpus::standard() {
        if s.identity().is_none() {
            continue;
        }
        for (phi, t) in surjections(&s) {
            let all_trivial = t.elements().all(|x| {
                t.elements().all(|y| {
                    kernel_category_local_monoid(&s, &t, &phi, x, y)
                        .map(|m| m.order() == 1)
                        .unwrap_or(true)
                })
            });
            if all_trivial {
                for e in t.idempotents() {
                    let pre: Vec<usize> = s.elements().filter(|&x| phi[x] == e).collect();
                    let sub = s.subsemigroup(&pre).unwrap().semigroup;
                    assert!(variety_member(&sub, &VarietyId::LI).holds, "{name}");
                }
            }
        }
    }
}

fn assert_multiplicative<F: Field>(rep: &MatrixRep<F>) {
    let f = rep.field();
    let s = rep.semigroup();
    for a in s.elements() {
        for b in s.elements() {
            assert_eq!(mat_mul(f, rep.image(a), rep.image(b)), *rep.image(s.mul(a, b)));
        }
    }
}

fn assert_flag_invariant<F: Field>(rep: &MatrixRep<F>) {
    let f = rep.field();
    let flag = composition_flag(rep).unwrap();
    for v in &flag.subspaces {
        for m in rep.images() {
            let mut vectors: Vec<_> = v.basis().to_vec();
            vectors.extend(mat_mul(f, &v.basis().to_vec(), m));
            assert_eq!(Subspace::span(f, rep.dim(), &vectors).dim(), v.dim());
        }
    }
    assert_eq!(flag.block_sizes.iter().sum::<usize>(), rep.dim());
    let form = block_form(rep, &flag).unwrap();
    for m in &form.conjugated {
        let mut offset = 0;
        for b in &form.blocks {
            for row in m.iter().skip(offset + b.size) {
                assert!(row[offset..offset + b.size].iter().all(|x| f.is_zero(x)));
            }
            offset += b.size;
        }
    }
}

#[test]
fn regular_representations_are_multiplicative_with_invariant_flags() {
    let f2 = GaloisField::new(2).unwrap();
    let f3 = GaloisField::new(3).unwrap();
    for (_, s) in corpus::curated() {
        let q = regular_representation(&s, &Rationals);
        assert_multiplicative(&q);
        assert_flag_invariant(&q);
        for f in [&f2, &f3] {
            let r = regular_representation(&s, f);
            assert_multiplicative(&r);
            assert_flag_invariant(&r);
        }
    }
}

#[test]
fn sync_representation_is_multiplicative() {
    let mut rng = rng(11);
    for _ in 0..50 {
        let maps = random_letters(&mut rng);
        let n = maps[0].1.len();
        for (_, a) in &maps {
            for (_, b) in &maps {
                let ab: Vec<usize> = (0..n).map(|q| b[a[q]]).collect();
                let prod: Vec<Vec<i64>> = sync_rep_matrix(a)
                    .iter()
                    .map(|row| {
                        (0..n - 1)
                            .map(|j| row.iter().zip(sync_rep_matrix(b)).map(|(x, r)| x * r[j]).sum())
                            .collect()
                    })
                    .collect();
                assert_eq!(prod, sync_rep_matrix(&ab));
            }
        }
    }
}

#[test]
fn ds_words_respect_the_bounds() {
    let mut rng = rng(12);
    let mut seen = 0;
    while seen < 60 {
        let maps = random_letters(&mut rng);
        let n = maps[0].1.len();
        let Ok(out) = ds_sync_word(&maps) else { continue };
        seen += 1;
        let plain: Vec<Vec<usize>> = maps.iter().map(|(_, m)| m.clone()).collect();
        assert_eq!(image_size(&maps, &out.word), 1);
        assert!(out.word.len() <= (n - 1) * (n - 1));
        assert!(out.word.len() <= out.refined_bound);
        assert!(shortest_sync_word(&plain, n).unwrap().len() <= out.word.len());
    }
}

#[test]
fn syntactic_monoid_recognizes_the_language() {
    let mut rng = rng(13);
    for _ in 0..40 {
        let d: Dfa = random_trim_dfa(&mut rng, &["a", "b"], 4);
        let m = syntactic_monoid(&d).unwrap();
        let min = d.minimize();
        assert!(min.states() <= d.complete().states());
        let accepting: Vec<usize> = m
            .semigroup()
            .elements()
            .filter(|&x| min.is_final(m.monoid.maps[x][min.start()]))
            .collect();
        for w in words(2, 8) {
            assert_eq!(d.accepts(&w), accepting.contains(&m.element_of(&w)));
        }
    }
}

#[test]
fn ds_ggm_semigroups_with_zero_keep_nonzero_products() {
    for (name, s) in corpus::standard() {
        let g = greens(&s);
        let (Some(z), true) = (s.zero(), fsemi::ggm::is_ggm(&s, &g)) else { continue };
        if !variety_member(&s, &VarietyId::DS).holds {
            continue;
        }
        for a in s.elements().filter(|&x| x != z) {
            for b in s.elements().filter(|&x| x != z) {
                assert_ne!(s.mul(a, b), z, "{name}");
            }
        }
    }
}
