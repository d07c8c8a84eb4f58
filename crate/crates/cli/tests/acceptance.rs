//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails. Limits and seed counts are pinned below.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kernels_core::clawfree::reduce_augmentations;
use kernels_core::matching::{gale_shapley, preferences_from_orientation};
use kernels_core::oracle::DEFAULT_MAX_N;
use kernels_core::{
    combine_kernels, enumerate_kernels, find_cutset_split, generate, solve_augmented_line_graph,
    solve_chordal_orientation, solve_chordal_super, solve_chordal_super_with_stats, solve_circular_arc_orientation,
    solve_clawfree_orientation, verify_kernel, Attachment, Covering, GenClass, GenParams, OrientationKind,
    SuperOrientation, VertexSet,
};

const C1_LIMIT: Duration = Duration::from_millis(1);
/// Best of this many in-process runs is compared with `C1_LIMIT`.
const C1_RUNS: usize = 5;
const C2_SEEDS: u64 = 500;
const C2_LIMIT: Duration = Duration::from_secs(60);
const C3_SEEDS: u64 = 500;
const C4_SEEDS: u64 = 300;
const C5_SEEDS: u64 = 200;
const C5_LARGE_N: usize = 60;
const C6_SEEDS: u64 = 200;
const C6_MAX_N: usize = 14;
const C7_SEEDS: u64 = 200;
const C7_MAX_N: usize = 14;
const C8_SEEDS: u64 = 300;
const C9_SIZES: [usize; 2] = [1_000, 5_000];
const C9_LIMIT: Duration = Duration::from_secs(10);
const C9_DENSITY: f64 = 0.9;
const MAX_SMALL_N: usize = 12;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn counted(total: u64, failures: &[String], extra: String) -> Self {
        let passed = failures.is_empty();
        let mut detail = format!("{}/{total} ok{extra}", total - failures.len() as u64);
        if let Some(first) = failures.first() {
            detail.push_str(&format!("; first failure: {first}"));
        }
        Outcome { passed, detail }
    }
}

/// Small sizes cycle through 4..=12 so every criterion sees varied shapes.
fn small_n(seed: u64) -> usize {
    4 + (seed % (MAX_SMALL_N as u64 - 3)) as usize
}

fn density(seed: u64) -> f64 {
    [0.2, 0.4, 0.6, 0.8][(seed / 9 % 4) as usize]
}

fn kernels(d: &SuperOrientation) -> Vec<VertexSet> {
    enumerate_kernels(d, DEFAULT_MAX_N).expect("small instance")
}

fn is_kernel(d: &SuperOrientation, k: &VertexSet) -> bool {
    verify_kernel(d, k).map(|v| v.is_kernel()).unwrap_or(false)
}

fn c1_three_cycle() -> Outcome {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("c3.instance");
    std::fs::write(&path, "p kernel 3 3\na 0 1\na 1 2\na 2 0\n").expect("write instance");
    let path = path.to_str().expect("utf-8 path");

    let mut best = Duration::MAX;
    let mut codes = Vec::new();
    for _ in 0..C1_RUNS {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let start = Instant::now();
        let find = kernels_cli::run(["kernels", "find", "--class", "chordal-any", "--input", path], &mut out, &mut err);
        let oracle = kernels_cli::run(["kernels", "oracle", "--input", path], &mut out, &mut err);
        best = best.min(start.elapsed());
        codes.push((find, oracle, String::from_utf8_lossy(&out).into_owned()));
    }
    let all_no = codes.iter().all(|(f, o, text)| *f == 1 && *o == 1 && text.matches("no kernel").count() == 2);

    let bin = std::process::Command::new(env!("CARGO_BIN_EXE_kernels"))
        .args(["find", "--class", "chordal-any", "--input", path])
        .output()
        .expect("run binary");
    let bin_ok = bin.status.code() == Some(1) && String::from_utf8_lossy(&bin.stdout).contains("no kernel");

    Outcome {
        passed: all_no && bin_ok && best < C1_LIMIT,
        detail: format!(
            "find and oracle report no kernel: {all_no}, binary exit 1: {bin_ok}, best of {C1_RUNS}: {:.3} ms (limit {} ms)",
            best.as_secs_f64() * 1e3,
            C1_LIMIT.as_millis()
        ),
    }
}

fn c2_chordal_super() -> Outcome {
    let start = Instant::now();
    let mut failures = Vec::new();
    for seed in 0..C2_SEEDS {
        let d = generate(&GenParams::new(GenClass::ChordalSuper, small_n(seed), density(seed), seed)).unwrap().digraph;
        match solve_chordal_super(&d) {
            Ok(k) if is_kernel(&d, &k) && kernels(&d).contains(&k) => {}
            Ok(k) => failures.push(format!("seed {seed}: {k} is not an oracle kernel")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    let elapsed = start.elapsed();
    let mut o = Outcome::counted(
        C2_SEEDS,
        &failures,
        format!(" in {:.2} s (limit {} s)", elapsed.as_secs_f64(), C2_LIMIT.as_secs()),
    );
    o.passed &= elapsed < C2_LIMIT;
    o
}

fn c3_uniqueness() -> Outcome {
    let mut failures = Vec::new();
    for seed in 0..C3_SEEDS {
        let d = generate(&GenParams::new(GenClass::ChordalOrientation, small_n(seed), density(seed), seed))
            .unwrap()
            .digraph;
        let all = kernels(&d);
        if all.len() > 1 {
            failures.push(format!("seed {seed}: {} kernels", all.len()));
            continue;
        }
        match solve_chordal_orientation(&d) {
            Ok(found) if found.as_ref() == all.first() => {}
            Ok(found) => failures.push(format!("seed {seed}: solver {found:?}, oracle {:?}", all.first())),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    Outcome::counted(C3_SEEDS, &failures, String::new())
}

fn c4_equal_cardinality() -> Outcome {
    let mut failures = Vec::new();
    let mut with_two = 0;
    for seed in 0..C4_SEEDS {
        let params = GenParams::new(GenClass::LineBipartite, small_n(seed), density(seed), seed)
            .with_orientation(OrientationKind::Random);
        let d = generate(&params).unwrap().digraph;
        let all = kernels(&d);
        with_two += usize::from(all.len() > 1);
        if all.iter().any(|k| k.len() != all[0].len()) {
            let sizes: Vec<usize> = all.iter().map(|k| k.len()).collect();
            failures.push(format!("seed {seed}: kernel sizes {sizes:?}"));
        }
    }
    Outcome::counted(C4_SEEDS, &failures, format!(" ({with_two} instances with several kernels)"))
}

fn c5_stable_matching() -> Outcome {
    let mut failures = Vec::new();
    let run = |seed: u64, n: usize, oracle: bool, failures: &mut Vec<String>| {
        let gen = generate(&GenParams::new(GenClass::LineBipartite, n, density(seed), seed)).unwrap();
        let Attachment::Root(root) = &gen.attachment else { unreachable!("line-bipartite carries a root") };
        let d = &gen.digraph;
        match preferences_from_orientation(d, root).and_then(|p| gale_shapley(d, &p)) {
            Ok(k) if !is_kernel(d, &k) => failures.push(format!("n={n} seed {seed}: {k} does not verify")),
            Ok(k) if oracle && !kernels(d).contains(&k) => {
                failures.push(format!("seed {seed}: {k} not an oracle kernel"))
            }
            Ok(_) => {}
            Err(e) => failures.push(format!("n={n} seed {seed}: {e}")),
        }
    };
    for seed in 0..C5_SEEDS {
        run(seed, small_n(seed), true, &mut failures);
    }
    for seed in 0..C5_SEEDS {
        run(seed, 13 + (seed as usize % (C5_LARGE_N - 12)), false, &mut failures);
    }
    Outcome::counted(
        2 * C5_SEEDS,
        &failures,
        format!(" ({C5_SEEDS} oracle-checked, {C5_SEEDS} with n in 13..={C5_LARGE_N})"),
    )
}

fn c6_augmentation_lifting() -> Outcome {
    let mut failures = Vec::new();
    let mut gadgets = 0;
    let mut lifted = 0;
    for seed in 0..C6_SEEDS {
        let n = 6 + (seed as usize % (C6_MAX_N - 5));
        let gen = generate(&GenParams::new(GenClass::AugmentedLine, n, density(seed), seed)).unwrap();
        let Attachment::Certificate(cert) = &gen.attachment else {
            unreachable!("augmented-line carries a certificate")
        };
        let d = &gen.digraph;
        gadgets += cert.gadgets.len();
        let trace = match reduce_augmentations(d, cert) {
            Ok(t) => t,
            Err(e) => {
                failures.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let z: Vec<usize> = trace.final_set().iter().collect();
        for local in kernels(&d.induced(&z)) {
            let k: VertexSet = local.iter().map(|v| z[v]).collect();
            lifted += 1;
            if !is_kernel(d, &k) {
                failures.push(format!("seed {seed}: kernel {k} of D[Z_h] is not a kernel of D"));
            }
        }
        match solve_augmented_line_graph(d, cert) {
            Ok(k) if kernels(d).contains(&k) => {}
            Ok(k) => failures.push(format!("seed {seed}: {k} is not an oracle kernel")),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    Outcome::counted(C6_SEEDS, &failures, format!(" ({gadgets} gadgets, {lifted} lifted kernels)"))
}

fn c7_combination() -> Outcome {
    let mut failures = Vec::new();
    let mut through = 0;
    for seed in 0..C7_SEEDS {
        let n = 8 + (seed as usize % (C7_MAX_N - 7));
        let gen = generate(&GenParams::new(GenClass::ClawfreeGlued, n, density(seed), seed)).unwrap();
        let Attachment::Certificate(cert) = &gen.attachment else {
            unreachable!("glued instances carry a certificate")
        };
        let d = &gen.digraph;
        let Some(split) = find_cutset_split(d.underlying()) else {
            failures.push(format!("seed {seed}: no clique-cutset"));
            continue;
        };
        let atom =
            |sub: &SuperOrientation, verts: &[usize]| solve_clawfree_orientation(sub, &Covering(cert.restrict(verts)?));
        let rec = |verts: &[usize]| {
            let local = solve_clawfree_orientation(&d.induced(verts), &Covering(cert.restrict(verts)?))?;
            Ok(local.iter().map(|v| verts[v]).collect())
        };
        match combine_kernels(d, &split, &atom, rec) {
            Ok((c, stats)) => {
                let bound = split.cutset.len() + 1;
                through += usize::from(c.through_cutset);
                if !is_kernel(d, &c.kernel) {
                    failures.push(format!("seed {seed}: {} does not verify", c.kernel));
                } else if !(1..=bound).contains(&c.stable_index) {
                    failures.push(format!("seed {seed}: X_k = X_(k+1) at k = {} outside 1..={bound}", c.stable_index));
                } else if c.used_fallback || stats.fallbacks > 0 {
                    failures.push(format!("seed {seed}: fell back to the scan"));
                } else if !kernels(d).contains(&c.kernel) {
                    failures.push(format!("seed {seed}: {} not an oracle kernel", c.kernel));
                }
            }
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    Outcome::counted(C7_SEEDS, &failures, format!(" ({through} through the cutset)"))
}

fn c8_circular_arc() -> Outcome {
    let mut failures = Vec::new();
    let mut found = 0;
    for seed in 0..C8_SEEDS {
        let gen = generate(&GenParams::new(GenClass::CircularArc, small_n(seed), density(seed), seed)).unwrap();
        let Attachment::Representation(rep) = &gen.attachment else { unreachable!("circular-arc carries arcs") };
        let d = &gen.digraph;
        let all = kernels(d);
        match solve_circular_arc_orientation(d, rep) {
            Ok(Some(k)) if is_kernel(d, &k) && !all.is_empty() => found += 1,
            Ok(None) if all.is_empty() => {}
            Ok(k) => failures.push(format!("seed {seed}: solver {k:?}, oracle has {} kernels", all.len())),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    Outcome::counted(C8_SEEDS, &failures, format!(" ({found} with a kernel)"))
}

fn c9_scaling() -> Outcome {
    let mut passed = true;
    let mut parts = Vec::new();
    for (i, n) in C9_SIZES.into_iter().enumerate() {
        let d = generate(&GenParams::new(GenClass::ChordalSuper, n, C9_DENSITY, i as u64)).unwrap().digraph;
        let start = Instant::now();
        let result = solve_chordal_super_with_stats(&d);
        let elapsed = start.elapsed();
        match result {
            Ok((k, stats)) => {
                let ok = is_kernel(&d, &k) && elapsed < C9_LIMIT && stats.atom_calls <= n * (n + 1);
                passed &= ok;
                parts.push(format!(
                    "n={n}: {} arcs, {:.2} s, {} atom calls (bound {})",
                    d.arc_count(),
                    elapsed.as_secs_f64(),
                    stats.atom_calls,
                    n * (n + 1)
                ));
            }
            Err(e) => {
                passed = false;
                parts.push(format!("n={n}: {e}"));
            }
        }
    }
    Outcome { passed, detail: format!("{} (limit {} s each)", parts.join("; "), C9_LIMIT.as_secs()) }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("C1 no kernel on the directed triangle", c1_three_cycle),
        ("C2 chordal super-orientations", c2_chordal_super),
        ("C3 at most one kernel in chordal orientations", c3_uniqueness),
        ("C4 equal kernel sizes in claw-free orientations", c4_equal_cardinality),
        ("C5 stable matchings are kernels", c5_stable_matching),
        ("C6 augmentation lifting", c6_augmentation_lifting),
        ("C7 clique-cutset combination", c7_combination),
        ("C8 circular-arc decision", c8_circular_arc),
        ("C9 polynomial scaling", c9_scaling),
    ];
    let mut all = true;
    for (name, run) in criteria {
        let outcome = run();
        all &= outcome.passed;
        println!("{} {name}: {}", if outcome.passed { "PASS" } else { "FAIL" }, outcome.detail);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
