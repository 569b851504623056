//! Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use domcover::cover;
use domcover::oracle::{self, generate_example_cim, generate_three_color};
use domcover::paradox::{self, BukhParams, Criticality, Mode, DEFAULT_GUARD};
use domcover::{Color, ColoredCompleteDigraph, Tournament};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const RED_PROBS: [f64; 5] = [0.5, 0.5, 0.2, 0.8, 0.95];

fn random_coloring(i: usize, max_n: usize) -> ColoredCompleteDigraph {
    ColoredCompleteDigraph::random(i % (max_n + 1), RED_PROBS[i % RED_PROBS.len()], 1_000 + i as u64)
}

fn paley_small() -> Outcome {
    let start = Instant::now();
    let report = paradox::is_perfectly_paradoxical(&paradox::paley(7).unwrap(), 2, DEFAULT_GUARD).unwrap();
    let elapsed = start.elapsed();
    ensure!(report.dominating.holds(), "QT_7 not 2-dominating");
    ensure!(report.dominated.holds(), "QT_7 not 2-dominated");
    ensure!(report.dominating_sub.is_none(), "3-dominating subtournament {:?}", report.dominating_sub);
    ensure!(report.dominated_sub.is_none(), "3-dominated subtournament {:?}", report.dominated_sub);
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!("all four sub-verdicts true in {elapsed:.2?}"))
}

fn paley_large() -> Outcome {
    let start = Instant::now();
    let report = paradox::is_perfectly_paradoxical(&paradox::paley(19).unwrap(), 3, DEFAULT_GUARD).unwrap();
    let elapsed = start.elapsed();
    ensure!(report.is_perfect(), "{report:?}");
    ensure!(elapsed < Duration::from_secs(600), "took {elapsed:?}");
    Ok(format!("2^19-subset scan clean in {elapsed:.2?}"))
}

fn cover_fuzz() -> Outcome {
    let mut largest = [0usize; 2];
    for i in 0..1000 {
        let k = random_coloring(i, 40);
        for (slot, d, limit) in [(0, 2, 8), (1, 3, 78)] {
            let cert = cover::cover(&k, d).map_err(|e| format!("instance {i}, d={d}: {e}"))?;
            ensure!(cover::verify_cover(&k, &cert, d).is_ok(), "instance {i}, d={d}: invalid cover");
            ensure!(cert.parts.len() <= limit, "instance {i}, d={d}: {} parts", cert.parts.len());
            largest[slot] = largest[slot].max(cert.parts.len());
        }
    }
    Ok(format!("1000 instances, max parts {} (d=2) and {} (d=3)", largest[0], largest[1]))
}

fn lower_bound_two() -> Outcome {
    for sizes in [[1, 1, 1, 1], [2, 2, 2, 2]] {
        let ex = generate_example_cim(2, &sizes).unwrap();
        let size = oracle::min_cover_size(&ex.graph, 2).unwrap().size();
        ensure!(size == 4, "sizes {sizes:?}: minimum {size}");
    }
    Ok("minimum 4 for [1,1,1,1] and [2,2,2,2]".into())
}

fn lower_bound_three() -> Outcome {
    let ex = generate_example_cim(3, &[1; 6]).unwrap();
    let size = oracle::min_cover_size(&ex.graph, 3).unwrap().size();
    ensure!(size == 6, "minimum {size}");
    let stray = oracle::verify_parts_confined(&ex.graph, &ex.blocks, 3).unwrap();
    ensure!(stray.is_none(), "part {stray:?} straddles blocks");
    Ok("minimum 6, every feasible part confined".into())
}

fn one_clique_colour() -> Outcome {
    let k = paradox::coloring_from_tournament(&paradox::paley(7).unwrap());
    let best = oracle::min_cover_size(&k, 3).unwrap().size();
    ensure!(best == 3, "minimum {best}");
    let all: Vec<usize> = (0..7).collect();
    let parts = cover::cover_uniform_loops(&k, &all, 3, Color::RED, 0).unwrap();
    let cert = cover::CoverCertificate { d: 3, n: 7, parts };
    ensure!(cover::verify_cover(&k, &cert, 3).is_ok(), "recursive cover invalid");
    ensure!(cert.parts.len() <= 3, "{} parts", cert.parts.len());
    ensure!(cert.parts.iter().all(|p| p.color == 'R'), "non-red part");
    ensure!(cover::cover(&k, 3).unwrap() == cert, "dispatch did not take the recursive path");
    Ok(format!("minimum 3, engine uses {} red parts", cert.parts.len()))
}

fn star_lemmas() -> Outcome {
    let t = paradox::paley(7).unwrap().reverse();
    let r = paradox::is_critical(&t, 2, Mode::Dominating, DEFAULT_GUARD).unwrap();
    ensure!(r.verdict == Criticality::Critical, "{r:?}");
    let star = t.star();
    ensure!(!star.check_d_dominating(3).unwrap().holds(), "star is 3-dominating");
    let sets = oracle::min_cover_dominating(&star, 3).unwrap().ok_or("no cover")?;
    ensure!(sets.len() == 3, "minimum {}", sets.len());
    Ok("critical, star not 3-dominating, minimum cover 3".into())
}

fn three_colors() -> Outcome {
    for n in 1..=8 {
        let k = generate_three_color(n).unwrap();
        let size = oracle::min_cover_size(&k, 2).unwrap().size();
        ensure!(size == n, "n={n}: minimum {size}");
        let fam = oracle::feasible_parts(&k, 2).unwrap();
        ensure!(fam.parts.len() == n, "n={n}: {} feasible parts", fam.parts.len());
        ensure!(
            fam.parts.iter().all(|p| p.color == 'G' && p.vertices.len() == 1),
            "n={n}: non-green-singleton part"
        );
    }
    Ok("minimum n for n = 1..8, only green singletons".into())
}

fn bukh_construction() -> Outcome {
    let params = BukhParams::new(2).unwrap();
    ensure!((params.m, params.n(), params.max_retries) == (64, 192, 32), "{params:?}");
    let start = Instant::now();
    let (t, report) = paradox::bukh(&params).map_err(|e| e.to_string())?;
    let per_attempt = start.elapsed() / report.attempts.len() as u32;
    ensure!(per_attempt < Duration::from_secs(1), "{per_attempt:?} per attempt");
    ensure!(t.is_d_dominating(2) && t.is_d_dominated(2), "final tournament fails");
    let check = paradox::subgraph_domination_property(&t, 2, 100, params.seed).unwrap();
    ensure!(check.holds(), "{:?}", check.counterexample);
    ensure!(check.checked == 101, "checked {}", check.checked);
    Ok(format!(
        "seed {} after {} attempt(s), {per_attempt:.2?} per attempt, 100 samples hold",
        report.attempts.last().unwrap().seed,
        report.attempts.len()
    ))
}

fn oracle_equivalence() -> Outcome {
    let tournaments = all_tournaments(5);
    ensure!(tournaments.len() == 1024, "{} tournaments", tournaments.len());
    for m in &tournaments {
        let t = Tournament::from_digraph(digraph(m)).unwrap();
        for d in 1..=3 {
            let characterization = !subsets_of_size(5, d).iter().any(|s| in_dominating(m, s));
            ensure!(t.check_d_dominating(d).unwrap().holds() == characterization, "{m:?}, d={d}");
            let out_char = !subsets_of_size(5, d).iter().any(|s| in_dominating(&transpose(m), s));
            ensure!(t.check_d_dominated(d).unwrap().holds() == out_char, "{m:?}, d={d} (dominated)");
        }
    }
    for i in 0..500 {
        let k = random_coloring(i, 12);
        let cert = cover::cover(&k, 2).unwrap();
        ensure!(cover::verify_cover(&k, &cert, 2).is_ok(), "instance {i}: invalid cover");
        let best = oracle::min_cover_size(&k, 2).unwrap().size();
        ensure!(best <= cert.parts.len(), "instance {i}: optimum {best} > {}", cert.parts.len());
    }
    Ok("1024 tournaments x 3 values of d agree; 500 colorings consistent".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Paley small paradox", paley_small),
        ("Paley large paradox", paley_large),
        ("cover soundness and bound fuzz", cover_fuzz),
        ("lower bound f(2) >= 4", lower_bound_two),
        ("lower bound f(3) >= 6", lower_bound_three),
        ("f(1,3) = 3", one_clique_colour),
        ("star and cover lemmas", star_lemmas),
        ("three-color impossibility", three_colors),
        ("randomized construction", bukh_construction),
        ("oracle equivalence suite", oracle_equivalence),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
