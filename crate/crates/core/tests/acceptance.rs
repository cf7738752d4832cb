//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use lamplighter::oracle::{self, Depth};
use lamplighter::{
    cli, cyclic_group, metric, phenomena, CayleyGraph, GenLetter, LnElement, LnParams,
    WreathProduct,
};
use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn l(n: u32) -> LnParams {
    LnParams::new(n).unwrap()
}

fn wreath(k: usize) -> WreathProduct {
    WreathProduct::new(Arc::new(cyclic_group(k).unwrap()))
}

fn metric_l2() -> Outcome {
    let start = Instant::now();
    let check = oracle::verify_metric_formula(&l(2), 10).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(check.passed(), || check.to_string())?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{check} in {:.2}s", elapsed.as_secs_f64()))
}

fn metric_l3_l4() -> Outcome {
    let mut notes = Vec::new();
    for n in [3, 4] {
        let check = oracle::verify_metric_formula(&l(n), 8).map_err(|e| e.to_string())?;
        ensure(check.passed(), || format!("L_{n} {check}"))?;
        notes.push(format!("L_{n} {check}"));
    }
    Ok(notes.join("; "))
}

fn wreath_metric() -> Outcome {
    // Z_2 wr Z against L_2: same ball, same distances, same generator action
    let l2 = l(2);
    let z2 = wreath(2);
    let ball = oracle::enumerate_ball(&l2, 8).map_err(|e| e.to_string())?;
    let wball = oracle::enumerate_ball(&z2, 8).map_err(|e| e.to_string())?;
    ensure(ball.sphere_sizes() == wball.sphere_sizes(), || {
        "sphere sizes differ".into()
    })?;
    let wletters = z2.letters();
    for (e, d) in ball.iter() {
        let we = z2.from_lamplighter(e).map_err(|e| e.to_string())?;
        ensure(wball.distance(&we) == Some(d), || {
            format!("{e} missing or misplaced")
        })?;
        ensure(z2.length(&we) == metric::word_length(e), || {
            format!("{e} length differs")
        })?;
        for (&g, &h) in GenLetter::ALL.iter().zip(&wletters) {
            let moved = z2.from_lamplighter(&e.apply(g)).unwrap();
            ensure(moved == z2.act(&we, h), || {
                format!("{e} {g} does not commute")
            })?;
        }
    }
    let z6 = wreath(6);
    let check = oracle::verify_metric_formula(&z6, 7).map_err(|e| e.to_string())?;
    ensure(check.passed(), || format!("Z_6 {check}"))?;
    Ok(format!(
        "Z_2 bijection on {} elements; Z_6 {check}",
        ball.len()
    ))
}

fn dead_end_family() -> Outcome {
    let mut checked = 0;
    for n in 2..=5 {
        let p = l(n);
        for m in 1..=5 {
            let d = phenomena::dead_end_family_d_m(p, m).map_err(|e| e.to_string())?;
            let expected = (4 * m + p.h() as i64 * (2 * m + 1)) as u64;
            let report = phenomena::check_dead_end(&p, &d, 0);
            ensure(report.length == expected, || {
                format!("n={n} m={m} length {} != {expected}", report.length)
            })?;
            ensure(report.is_dead_end, || format!("n={n} m={m} not a dead end"))?;
            if n % 2 == 1 {
                let unchanged: Vec<&str> = report
                    .neighbor_lengths
                    .iter()
                    .filter(|(_, len)| *len == expected)
                    .map(|(g, _)| g.as_str())
                    .collect();
                let reduced = report
                    .neighbor_lengths
                    .iter()
                    .filter(|(_, len)| *len + 1 == expected)
                    .count();
                ensure(
                    unchanged.len() == 1 && (unchanged[0] == "a" || unchanged[0] == "A"),
                    || format!("n={n} m={m} unchanged by {unchanged:?}"),
                )?;
                ensure(reduced == 3, || {
                    format!("n={n} m={m} only {reduced} letters reduce")
                })?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} family members"))
}

fn depth() -> Outcome {
    let p = l(2);
    let mut notes = Vec::new();
    for m in [1, 2] {
        let d = phenomena::dead_end_family_d_m(p, m).unwrap();
        let escape = oracle::escape(&p, &d, 16).map_err(|e| e.to_string())?;
        let Depth::Exact(k) = escape.depth else {
            return Err(format!("d_{m}: no escape within 16 steps"));
        };
        ensure(k >= m as u32, || format!("d_{m} depth {k} < {m}"))?;
        let witness = escape.witness.unwrap();
        ensure(
            metric::word_length(&p.act_word(&d, &witness)) > metric::word_length(&d),
            || format!("d_{m} witness {witness} does not escape"),
        )?;
        notes.push(format!("d_{m} depth={k} witness=\"{witness}\""));
    }

    // every word of length <= 3 from d_1, independently of the BFS
    let d1 = phenomena::dead_end_family_d_m(p, 1).unwrap();
    let radius = metric::word_length(&d1);
    let mut layer: Vec<LnElement> = vec![d1.clone()];
    let mut first_escape = None;
    for s in 1..=3 {
        layer = layer
            .iter()
            .flat_map(|x| GenLetter::ALL.iter().map(move |&g| x.apply(g)))
            .collect();
        if first_escape.is_none() && layer.iter().any(|x| metric::word_length(x) > radius) {
            first_escape = Some(s);
        }
    }
    ensure(first_escape == Some(3), || {
        format!("shortest escape by exhaustion: {first_escape:?}")
    })?;
    let d1_depth = oracle::escape_depth(&p, &d1, 16).unwrap();
    ensure(d1_depth == Depth::Exact(2), || {
        format!("d_1 depth {d1_depth}")
    })?;
    notes.push("exhaustive shortest escape of d_1 = 3".into());
    Ok(notes.join("; "))
}

fn seesaw() -> Outcome {
    let p = l(2);
    let mut swings = Vec::new();
    for n in 1..=5i64 {
        let w = phenomena::seesaw_family_w_n(p, n, 1, 1).unwrap();
        let len = metric::word_length(&w);
        ensure(len == (4 * n + 2) as u64, || format!("|w_{n}| = {len}"))?;
        for k in 1..=n as u32 {
            let r = phenomena::check_seesaw(&p, &w, GenLetter::T, k);
            ensure(r.holds, || format!("w_{n} fails at swing {k}: {r}"))?;
        }
        let (mut fwd, mut bwd) = (w.clone(), w.clone());
        for step in 1..n {
            fwd = fwd.apply(GenLetter::T);
            bwd = bwd.apply(GenLetter::T_INV);
            let here = metric::word_length(&fwd);
            for g in GenLetter::ALL {
                let reduces = metric::word_length(&fwd.apply(g)) < here;
                ensure(reduces == (g == GenLetter::T), || {
                    format!("w_{n} t^{step}: letter {g} reduces={reduces}")
                })?;
            }
            ensure(fwd.cursor() - bwd.cursor() == 2 * step, || {
                format!(
                    "w_{n}: paths not separated by {} after {step} steps",
                    2 * step
                )
            })?;
        }
        swings.push(
            phenomena::check_seesaw(&p, &w, GenLetter::T, 1)
                .max_swing
                .to_string(),
        );
    }
    Ok(format!("max_swing for n=1..5: {}", swings.join(",")))
}

fn convexity() -> Outcome {
    let start = Instant::now();
    let p = l(2);
    let r1 =
        phenomena::convexity_witness(p, 1, true, oracle::DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(r1.pair_lengths == (5, 5) && r1.free_distance == 2, || {
        r1.to_string()
    })?;
    ensure(r1.in_ball_distance == Some(10) && r1.mac_bound == 9, || {
        r1.to_string()
    })?;
    ensure(r1.violates_mac == Some(true), || r1.to_string())?;
    let r2 =
        phenomena::convexity_witness(p, 2, true, oracle::DEFAULT_CAP).map_err(|e| e.to_string())?;
    let d2 = r2.in_ball_distance.ok_or("n=2 search returned no path")?;
    ensure(
        d2 >= 18 && r2.mac_bound == 17 && r2.violates_mac == Some(true),
        || r2.to_string(),
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("searches took {elapsed:?}")
    })?;
    let mut minima = Vec::new();
    for n in [1, 2] {
        let r = phenomena::check_origin_bound(p, n, 0, 0).unwrap();
        ensure(
            r.exhaustive && r.minimum == (4 * n + 2) as u64 && r.holds(),
            || r.to_string(),
        )?;
        minima.push(r.minimum.to_string());
    }
    Ok(format!(
        "in-ball distances n=1: 10, n=2: {d2} in {:.2}s; origin minima {}",
        elapsed.as_secs_f64(),
        minima.join(",")
    ))
}

fn geodesic_enumeration() -> Outcome {
    let p = l(2);
    let ball = oracle::enumerate_ball(&p, 8).map_err(|e| e.to_string())?;
    let all: Vec<&LnElement> = ball.iter().map(|(e, _)| e).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut unique_side, mut variants) = (0, 0);
    for _ in 0..100 {
        let e = *all.choose(&mut rng).unwrap();
        let len = metric::word_length(e);
        let words = metric::enumerate_geodesics(e);
        for w in &words {
            ensure(p.eval(w) == *e && w.len() as u64 == len, || {
                format!("{e}: bad variant {w}")
            })?;
        }
        let sides = metric::extents(e).minimal_sides(e.cursor());
        if sides.len() == 1 {
            let pcount = metric::revisited_lamps(e, sides[0]);
            ensure(words.len() == 1 << pcount, || {
                format!("{e}: {} variants, expected 2^{pcount}", words.len())
            })?;
            unique_side += 1;
        }
        let bfs = oracle::ball_geodesics(&p, &ball, e).unwrap();
        ensure(words.is_subset(&bfs), || {
            format!("{e}: variant outside the BFS geodesics")
        })?;
        variants += words.len();
    }
    Ok(format!(
        "100 elements ({unique_side} with a unique side), {variants} variants"
    ))
}

fn dead_end_lifting() -> Outcome {
    let mut notes = Vec::new();
    for (k, a) in [(5, 2), (6, 3)] {
        let w = wreath(k);
        for m in [1, 2] {
            let e = w.lift_dead_end_family(a, m).map_err(|e| e.to_string())?;
            let len = w.length(&e);
            for g in w.letters() {
                let next = w.length(&w.act(&e, g));
                ensure(next <= len, || {
                    format!(
                        "Z_{k} a={a} m={m}: {} raises {len} to {next}",
                        w.letter_name(g)
                    )
                })?;
            }
            let depth = oracle::escape_depth(&w, &e, 12).map_err(|e| e.to_string())?;
            notes.push(format!("Z_{k} a={a} m={m} length={len} depth={depth}"));
        }
    }
    Ok(notes.join("; "))
}

/// Everything whose bytes must not depend on the worker count.
fn transcript() -> String {
    let mut out = Vec::new();
    let l2 = l(2);
    oracle::write_dump(&l2, &oracle::enumerate_ball(&l2, 10).unwrap(), &mut out).unwrap();
    oracle::write_dump(&l(3), &oracle::enumerate_ball(&l(3), 8).unwrap(), &mut out).unwrap();
    let z6 = wreath(6);
    oracle::write_dump(&z6, &oracle::enumerate_ball(&z6, 7).unwrap(), &mut out).unwrap();
    let mut text = String::from_utf8(out).unwrap();
    for m in [1, 2] {
        let d = phenomena::dead_end_family_d_m(l2, m).unwrap();
        let e = oracle::escape(&l2, &d, 12).unwrap();
        text += &format!("{:?} {}\n", e.depth, e.witness.unwrap());
    }
    let commands: [&[&str]; 7] = [
        &["length", "--n", "3", "--word", "t a^2 T T a t"],
        &[
            "geodesic",
            "--n",
            "5",
            "--word",
            "a^2 T a t t",
            "--enumerate",
        ],
        &["ball", "--n", "2", "--radius", "9", "--verify", "--spheres"],
        &["deadend", "--n", "2", "--m", "2"],
        &["seesaw", "--n", "2", "--m", "4"],
        &["convexity", "--n", "2", "--witness", "2", "--search"],
        &[
            "wreath", "--group", "cyclic:5", "deadend", "--a", "2", "--m", "2",
        ],
    ];
    for args in commands {
        let o = cli::run(std::iter::once("lamplighter").chain(args.iter().copied()));
        text += &format!("{} {}{}", o.code, o.stdout, o.stderr);
    }
    text
}

fn determinism() -> Outcome {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(transcript)
    };
    let single = run(1);
    let many = run(4);
    ensure(single == many, || {
        "transcripts differ between 1 and 4 workers".into()
    })?;
    Ok(format!(
        "{} bytes identical across 1 and 4 workers",
        single.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("metric formula exact on L_2 B(10)", metric_l2),
        ("metric formula exact on L_3, L_4 B(8)", metric_l3_l4),
        (
            "wreath metric: Z_2 bijection on B(8), Z_6 on B(7)",
            wreath_metric,
        ),
        (
            "dead-end family d_m lengths and odd-n neighbors",
            dead_end_family,
        ),
        ("dead-end depth of d_1, d_2 in L_2", depth),
        ("seesaw family w_n in L_2", seesaw),
        ("convexity witnesses and origin bound", convexity),
        ("geodesic enumeration against BFS", geodesic_enumeration),
        ("lifted dead ends in Z_5, Z_6 wr Z", dead_end_lifting),
        ("determinism across worker counts", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
