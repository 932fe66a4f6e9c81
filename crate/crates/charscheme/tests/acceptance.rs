//! End-to-end acceptance checks, one test per criterion. Each prints a
//! single pass/fail line (visible with `--nocapture`) and pins its
//! wall-clock allowance in code. The full Borromean equality check is
//! ignored by default; run it with `cargo test -- --ignored`.

use charscheme::groebner::{self, Budget};
use charscheme::ideal::{character_ideal, RelatorMode};
use charscheme::oracle::{self, Sl2Matrix};
use charscheme::poly::{builtin, MonomialOrder, TraceRing};
use charscheme::presentation::{parse_presentation, random_word};
use charscheme::registry::{self, Status};
use charscheme::trace::TraceReducer;
use charscheme::{GaussianRational as G, Ideal};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// Runs one criterion, prints its verdict line, and fails the test on a
/// broken check or a blown time allowance.
fn criterion(tag: &str, limit: Option<Duration>, body: impl FnOnce() -> Result<(), String>) {
    let start = Instant::now();
    let result = body();
    let elapsed = start.elapsed();
    let verdict = match (result, limit) {
        (Ok(()), Some(l)) if elapsed > l => {
            Err(format!("took {:.1?}, allowed {:.0?}", elapsed, l))
        }
        (Ok(()), _) => Ok(()),
        (Err(e), _) => Err(e),
    };
    match verdict {
        Ok(()) => println!("{tag}: pass ({} ms)", elapsed.as_millis()),
        Err(msg) => {
            println!("{tag}: fail ({msg})");
            panic!("{tag}: {msg}");
        }
    }
}

/// Every assertion of the named golden case passes under the default budget.
fn case_passes(name: &str) -> Result<(), String> {
    let reports = registry::run_case(name, &Budget::default()).map_err(|e| e.to_string())?;
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{}: {}", r.assertion, r.status.as_str()))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(bad.join(", "))
    }
}

#[test]
fn c01_reduction_oracle_equivalence() {
    criterion("01 reduction agrees with matrix traces", Some(Duration::from_secs(60)), || {
        for n in 1..=4usize {
            let failures = oracle::fuzz_reduction(1000 + n as u64, 250, n, 8);
            if let Some(w) = failures.first() {
                let names = TraceRing::for_rank(n).gen_names().to_vec();
                return Err(format!(
                    "{} mismatches at rank {n}, first on {}",
                    failures.len(),
                    w.display(&names)
                ));
            }
        }
        Ok(())
    });
}

#[test]
fn c02_trace_identity_suite() {
    criterion("02 trace identity suite", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for rank in [2usize, 3] {
            let ring = TraceRing::for_rank(rank);
            let red = TraceReducer::new(&ring);
            // product identity t_u*t_v = t_uv + t_{u^-1 v}
            for _ in 0..100 {
                let u = random_word(&mut rng, rank, 5);
                let v = random_word(&mut rng, rank, 5);
                let lhs = red.reduce(&u).mul(&red.reduce(&v));
                let rhs = red.reduce(&u.concat(&v)).add(&red.reduce(&u.inverse().concat(&v)));
                if !red.equal_as_trace(&lhs, &rhs) {
                    return Err(format!("product identity broke at rank {rank}"));
                }
            }
        }
        let ring = TraceRing::for_rank(3);
        let red = TraceReducer::new(&ring);
        // conjugation, rotation, and inverse invariance
        for _ in 0..100 {
            let w = random_word(&mut rng, 3, 6);
            let g = random_word(&mut rng, 3, 3);
            let t = red.reduce(&w);
            let conj = g.concat(&w).concat(&g.inverse());
            if red.reduce(&conj) != t || red.reduce(&w.inverse()) != t {
                return Err("invariance broke".into());
            }
            if !w.is_empty() && red.reduce(&w.rotate(1)) != t {
                return Err("rotation invariance broke".into());
            }
        }
        // four-letter product expansion on arbitrary words
        for _ in 0..100 {
            let mut w = || random_word(&mut rng, 3, 4);
            let (a, b, c, d) = (w(), w(), w(), w());
            if !red.vogt_holds(&a, &b, &c, &d) {
                return Err("four-letter expansion broke".into());
            }
        }
        // both recursion identities for the relator differences
        let ring2 = TraceRing::for_rank(2);
        let red2 = TraceReducer::new(&ring2);
        for _ in 0..100 {
            let alpha = random_word(&mut rng, 2, 4);
            let beta = random_word(&mut rng, 2, 4);
            let r = random_word(&mut rng, 2, 5);
            let one_step = red2
                .reduce(&alpha)
                .mul(&red2.theta(&charscheme::Word::empty(), &r))
                .sub(&red2.theta(&alpha.inverse(), &r));
            let two_step = red2
                .reduce(&alpha)
                .mul(&red2.theta(&beta, &r))
                .sub(&red2.theta(&alpha.inverse().concat(&beta), &r));
            if red2.theta(&alpha, &r) != one_step
                || red2.theta(&alpha.concat(&beta), &r) != two_step
            {
                return Err("relator-difference recursion broke".into());
            }
        }
        // (t_abc - t_acb)^2 = discriminant, after t_acb = p - t_abc: the
        // difference is a multiple of the fundamental relation, and the
        // two sides agree exactly at every representation's trace point
        let elim = builtin::triple_eliminator(&ring, 0, 1, 2);
        let delta = builtin::triple_discriminant(&ring, 0, 1, 2);
        let f = builtin::fundamental_relation(&ring, 0, 1, 2);
        let diff = elim.mul(&elim).sub(&delta);
        if !groebner::reduce_full(&diff, &[f], &MonomialOrder::grevlex()).is_zero() {
            return Err("discriminant identity is not a multiple of the ring relation".into());
        }
        for _ in 0..100 {
            let rep = oracle::random_representation(&mut rng, 3);
            let point = oracle::trace_point(&rep, &ring);
            if !diff.eval(&point).is_zero() {
                return Err("discriminant identity broke at a trace point".into());
            }
        }
        Ok(())
    });
}

#[test]
fn c03_trefoil_components_and_radical() {
    criterion("03 trefoil stage ideals", Some(Duration::from_secs(10)), || {
        case_passes("trefoil")
    });
}

#[test]
fn c04_presentation_dependence() {
    criterion("04 presentation dependence", Some(Duration::from_secs(10)), || {
        case_passes("trefoil_xy")
    });
}

#[test]
fn c05_figure_eight_orbifold() {
    criterion("05 figure-eight orbifold", Some(Duration::from_secs(10)), || {
        case_passes("fig8_orbifold")
    });
}

#[test]
fn c06_whitehead_orbifold_dimension() {
    criterion("06 Whitehead orbifold dimension", Some(Duration::from_secs(120)), || {
        case_passes("whitehead_orbifold")
    });
}

#[test]
fn c07_word_tower_stabilization() {
    criterion("07 word tower stabilization", Some(Duration::from_secs(60)), || {
        case_passes("stabilization")
    });
}

#[test]
fn c08_abelian_algebra() {
    criterion("08 abelian character algebra", Some(Duration::from_secs(30)), || {
        let p = parse_presentation("gens: a b\nrel: a b = b a").map_err(|e| e.to_string())?;
        let ideal = character_ideal(&p, RelatorMode::Pair);
        let ring = ideal.ring().clone();
        let pair = Ideal::new(&ring, vec![builtin::commuting_pair_relation(&ring, 0, 1)]);
        if !groebner::equal(&ideal, &pair, &Budget::default()).map_err(|e| e.to_string())? {
            return Err("free abelian pair ideal is not the pair relation".into());
        }
        let r3 = TraceRing::for_rank(3);
        let two = num_rational::BigRational::from_integer(2.into());
        if builtin::commuting_pair_relation(&r3, 0, 1).scale(&two)
            != builtin::commuting_triple_relation(&r3, 0, 1, 1).neg()
        {
            return Err("pair/triple degeneration identity broke".into());
        }
        if builtin::commuting_triple_relation(&r3, 0, 1, 2).scale(&two)
            != builtin::commuting_quad_relation(&r3, 0, 0, 1, 2)
        {
            return Err("triple/quadruple degeneration identity broke".into());
        }
        case_passes("z_z4")
    });
}

#[test]
fn c09_m2_radical_reconstruction() {
    criterion("09 two-generator Markov radical", Some(Duration::from_secs(5)), || {
        case_passes("m2")
    });
}

#[test]
fn c10_borromean_membership() {
    criterion("10 Borromean quotient membership", Some(Duration::from_secs(300)), || {
        case_passes("borromean_nonsimple")?;
        case_passes("borromean_I0_membership")
    });
}

/// The long variant: semantic equality of the Borromean character ideal with
/// the stated component intersection. Reports budget exhaustion instead of
/// failing if the half-hour allowance runs out.
#[test]
#[ignore = "full Borromean ideal equality; allowed up to thirty minutes"]
fn c10_borromean_full_equality() {
    let tag = "10 Borromean full equality";
    let limit = Duration::from_secs(1800);
    let budget = Budget::default().with_timeout(limit);
    let start = Instant::now();
    let reports = registry::run_case("borromean_full_equality", &budget).unwrap();
    let elapsed = start.elapsed();
    if reports.iter().any(|r| r.status == Status::Fail) {
        println!("{tag}: fail");
        panic!("{tag}: equality check failed");
    }
    if reports.iter().any(|r| r.status == Status::BudgetExceeded) || elapsed > limit {
        println!("{tag}: budget exceeded ({} ms)", elapsed.as_millis());
        return;
    }
    println!("{tag}: pass ({} ms)", elapsed.as_millis());
}

#[test]
fn c11_simplicity_detection() {
    criterion("11 simplicity detection", Some(Duration::from_secs(5)), || {
        let binary_dihedral = vec![
            Sl2Matrix::identity(),
            Sl2Matrix::new(G::i(), G::zero(), G::zero(), -&G::i()),
            Sl2Matrix::new(G::zero(), G::i(), G::i(), G::zero()),
        ];
        if !oracle::is_simple(&binary_dihedral, 1) {
            return Err("binary-dihedral representation not recognized at depth one".into());
        }
        let diag = |x: G| {
            let inv = x.inv();
            Sl2Matrix::new(x, G::zero(), G::zero(), inv)
        };
        let diagonal = vec![diag(G::from_int(2)), diag(G::from_int(3))];
        if oracle::is_simple(&diagonal, 3) {
            return Err("diagonal representation wrongly called simple".into());
        }
        Ok(())
    });
}
