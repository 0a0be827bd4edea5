//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Criterion 4 is expected to fail: the sixth listed kernel word has writhe 4,
//! and every element of the kernel has writhe 0. The run exits nonzero only
//! when the set of failing criteria differs from `EXPECTED_FAILURES`.

use std::collections::HashSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use gauss_epple::analogue::{analogue_space, PermRep, Point, Presentation};
use gauss_epple::artin::{
    artin_cocycle_fbar, artin_membership, verify_braid_relations, ArtinElement, RootSystem, RootType, RootVector,
};
use gauss_epple::ge::{construct_braid, ge_image, ge_realizable, in_kernel_ge, in_kernel_wp, symge_image};
use gauss_epple::montecarlo::{estimate_decay_exponent, exact_walk, kernel_hit_probability};
use gauss_epple::sge::{cocycle_fbar, in_kernel_sge, pure_generator, sge_image, sge_membership, SgeElement, SquareMatrix};
use gauss_epple::{BraidWord, GeElement, Int, Permutation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXPECTED_FAILURES: &[u32] = &[4];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn word(n: usize, text: &str) -> BraidWord {
    BraidWord::parse(text, n).expect("valid word")
}

fn ball<T, F>(identity: T, gens: &[T], radius: usize, mul: F) -> HashSet<T>
where
    T: Clone + Eq + std::hash::Hash,
    F: Fn(&T, &T) -> T,
{
    let mut seen = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    for _ in 0..radius {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = mul(x, g);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    seen
}

fn relation_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(3..=6);
        let base = BraidWord::random_with(n, rng.gen_range(0..=37), &mut rng);
        let cut = rng.gen_range(0..=base.len());
        let (lhs, rhs): (Vec<i32>, Vec<i32>) = if n >= 4 && rng.gen_bool(0.5) {
            // far commutation
            let i = rng.gen_range(1..n as i32 - 2);
            let j = rng.gen_range(i + 2..n as i32);
            let (x, y) = (if rng.gen() { i } else { -i }, if rng.gen() { j } else { -j });
            (vec![x, y], vec![y, x])
        } else {
            let i = rng.gen_range(1..n as i32 - 1);
            let s = if rng.gen() { 1 } else { -1 };
            (vec![s * i, s * (i + 1), s * i], vec![s * (i + 1), s * i, s * (i + 1)])
        };
        let build = |mid: &[i32]| {
            let mut l = base.letters()[..cut].to_vec();
            l.extend_from_slice(mid);
            l.extend_from_slice(&base.letters()[cut..]);
            BraidWord::new(n, l).unwrap()
        };
        let (a, b) = (build(&lhs), build(&rhs));
        if ge_image::<Int>(&a) != ge_image::<Int>(&b)
            || symge_image::<Int>(&a) != symge_image::<Int>(&b)
            || sge_image::<Int>(&a) != sge_image::<Int>(&b)
        {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("1000 rewrites, {bad} changed an image"))
}

fn parity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut bad = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=8);
        let w = BraidWord::random_with(n, rng.gen_range(0..=60), &mut rng);
        if w.permutation().parity() as i64 != w.writhe().rem_euclid(2) {
            bad += 1;
        }
    }
    let fig = word(3, "-2 -1 -2 -1");
    let pi = fig.permutation();
    let printed = Permutation::from_cycles(3, &[vec![1, 3, 2]]).unwrap();
    let fig_ok = fig.writhe() == -4 && pi.cycles().len() == 1 && pi.order() == 3 && pi.inverse() == printed;
    outcome(
        bad == 0 && fig_ok,
        format!(
            "10000 words, {bad} mismatches; figure word writhe {}, permutation {} (strand-tracking reading {})",
            fig.writhe(),
            pi,
            pi.inverse()
        ),
    )
}

fn image_characterization() -> Outcome {
    let n = 3;
    let gens: Vec<GeElement> = (1..n)
        .flat_map(|k| {
            let g = GeElement::ge_generator(n, k);
            [g.clone(), g.inverse()]
        })
        .collect();
    let reached = ball(GeElement::identity(n), &gens, 8, |a, b| a.mul(b));
    let invalid = reached.iter().filter(|g| !ge_realizable(g.ell(), g.pi()).unwrap()).count();
    let mut targets = 0;
    let mut failures = 0;
    for pi in Permutation::all(n) {
        for code in 0..7usize.pow(3) {
            let ell: Vec<Int> = (0..3).map(|i| (code / 7usize.pow(i) % 7) as Int - 3).collect();
            if !ge_realizable(&ell, &pi).unwrap() {
                continue;
            }
            targets += 1;
            match construct_braid(&pi, &ell) {
                Ok(w) => {
                    let g = ge_image::<Int>(&w);
                    if g.pi() != &pi || g.ell() != ell.as_slice() {
                        failures += 1;
                    }
                }
                Err(_) => failures += 1,
            }
        }
    }
    outcome(
        invalid == 0 && failures == 0,
        format!(
            "{} elements reached by length 8, {invalid} parity-invalid; {targets} targets constructed, {failures} failures",
            reached.len()
        ),
    )
}

fn kernel_examples() -> Outcome {
    let listed = [
        (3, "1 1 2 2 -1 -1 -2 -2"),
        (4, "-1 -3 2 2 -3 -1 2 2"),
        (3, "1 -2 1 -2 1 -2"),
        (3, "2 -1 2 -1 2 -1"),
        (3, "1 -2 1 1 1 -2 1 -2 -2 -2"),
        (3, "1 2 1 1 -2 1 2 1 1 -2 -1 -1"),
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for (idx, (n, text)) in listed.iter().enumerate() {
        let w = word(*n, text);
        if !in_kernel_ge(&w) {
            ok = false;
            let g = ge_image::<Int>(&w);
            notes.push(format!(
                "word {} not in ker GE (writhe {}, image {} {:?})",
                idx + 1,
                w.writhe(),
                g.pi(),
                g.ell()
            ));
        }
    }
    let sge_ok = in_kernel_sge(&word(3, "1 -2 1 -2 1 -2"));
    let wp_word = word(3, "-1 -1 2 2");
    let wp_ok = in_kernel_wp(&wp_word) && !in_kernel_ge(&wp_word);
    let sep = word(4, "2 2 -3 2 1 1 -2 -3 -1 -1");
    let (ge_triv, sge_triv) = (in_kernel_ge(&sep), in_kernel_sge(&sep));
    ok &= sge_ok && wp_ok && (ge_triv != sge_triv);
    notes.push(format!(
        "(s1 s2^-1)^3 in ker SGE: {sge_ok}; s1^-2 s2^2 in ker WP only: {wp_ok}; separating word GE trivial {ge_triv}, SGE trivial {sge_triv}"
    ));
    outcome(ok, notes.join("; "))
}

fn permutation_cocycle() -> Outcome {
    let mut count = 0;
    let mut bad = 0;
    for n in 2..=6 {
        for pi in Permutation::all(n) {
            count += 1;
            let f = cocycle_fbar::<Int>(&pi);
            if (1..=n).any(|i| (i + 1..=n).any(|j| !matches!(f.get(i, j), 0 | 1))) {
                bad += 1;
            }
        }
    }
    outcome(bad == 0, format!("{count} permutations (n = 2..6), {bad} with an entry outside {{0, 1}}"))
}

fn pure_doubling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(3..=5);
        let mut w = BraidWord::identity(n);
        for _ in 0..rng.gen_range(1..=8) {
            let i = rng.gen_range(1..n);
            let j = rng.gen_range(i + 1..=n);
            let a = pure_generator(i, j, n).unwrap();
            w = w.concat(&if rng.gen() { a } else { a.inverse() });
        }
        let ge = ge_image::<Int>(&w);
        let sym = symge_image::<Int>(&w);
        let m = sge_image::<Int>(&w);
        let doubled: Vec<Int> = ge.ell().iter().map(|x| 2 * x).collect();
        if sym.ell() != doubled.as_slice() || !m.m().is_symmetric() || m.m().row_sums() != ge.ell() {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("500 pure products, {bad} violations"))
}

fn artin_relations() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for kind in [
        RootType::A(3),
        RootType::B(3),
        RootType::D(4),
        RootType::G2,
        RootType::I2(2),
        RootType::I2(3),
        RootType::I2(4),
        RootType::I2(6),
    ] {
        let rep = verify_braid_relations(&RootSystem::build(kind).unwrap());
        ok &= rep.all_pass && rep.relations.iter().all(|r| !r.empirical);
        if !rep.all_pass {
            notes.push(format!("{kind} FAILED"));
        }
    }
    for m in [5, 7, 8] {
        let rep = verify_braid_relations(&RootSystem::build(RootType::I2(m)).unwrap());
        ok &= rep.relations.iter().all(|r| r.empirical);
        notes.push(format!(
            "I2({m}) {} (empirical)",
            if rep.all_pass { "holds" } else { "fails" }
        ));
    }
    outcome(ok, format!("A3 B3 D4 G2 I2(2,3,4,6) checked; {}", notes.join(", ")))
}

fn positivity() -> Outcome {
    let mut total = 0;
    let mut bad = 0;
    for kind in [RootType::A(3), RootType::B(3), RootType::G2, RootType::I2(8)] {
        let rs = RootSystem::build(kind).unwrap();
        for c in rs.coxeter_group() {
            total += 1;
            let f = artin_cocycle_fbar::<Int>(&c, &rs);
            if (0..rs.positive_count()).any(|r| !matches!(f.get(r), 0 | 1)) {
                bad += 1;
            }
        }
    }
    outcome(total >= 100 && bad == 0, format!("{total} Coxeter elements, {bad} with a positive-root entry outside {{0, 1}}"))
}

fn analogue_dimensions() -> Outcome {
    let ints = |v: &[i64]| v.iter().map(|&x| Point::Int(x)).collect::<Vec<_>>();
    let i2_4 = Presentation::dihedral(4);
    let rep4 = PermRep::new(&i2_4, ints(&[0, 1, 2, 3]), vec![ints(&[0, 3, 2, 1]), ints(&[1, 0, 3, 2])]).unwrap();
    let i2_6 = Presentation::dihedral(6);
    let rep6 = PermRep::new(
        &i2_6,
        ints(&[1, 2, 3, 4, 5, 6]),
        vec![ints(&[1, 6, 5, 4, 3, 2]), ints(&[2, 1, 6, 5, 4, 3])],
    )
    .unwrap();
    let b3 = Presentation::braid(3);
    let cases = [
        ("I2(4)", analogue_space(&i2_4, &rep4), 6),
        ("I2(6)", analogue_space(&i2_6, &rep6), 9),
        ("B3", analogue_space(&b3, &PermRep::natural(3)), 4),
    ];
    let ok = cases
        .iter()
        .all(|(_, s, d)| s.dimension == *d && s.verified.iter().all(|&v| v));
    let parts: Vec<String> = cases
        .iter()
        .map(|(name, s, _)| format!("{name} -> {} ({} verified)", s.dimension, s.verified.iter().filter(|&&v| v).count()))
        .collect();
    outcome(ok, parts.join(", "))
}

fn sge_characterization() -> Outcome {
    let n = 3;
    let gens: Vec<SgeElement<Int>> = (1..n)
        .flat_map(|k| {
            let g = SgeElement::generator(n, k);
            [g.clone(), g.inverse()]
        })
        .collect();
    let reached = ball(SgeElement::identity(n), &gens, 8, |a, b| a.mul(b));
    let unsound = reached.iter().filter(|g| !sge_membership(g.m(), g.pi()).unwrap()).count();
    let mut members = 0;
    let mut missing = 0;
    for pi in Permutation::all(n) {
        for code in 0..3usize.pow(6) {
            let mut m = SquareMatrix::<Int>::zeros(n);
            let mut c = code;
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        m.set(i, j, (c % 3) as Int - 1);
                        c /= 3;
                    }
                }
            }
            if sge_membership(&m, &pi).unwrap() {
                members += 1;
                if !reached.contains(&SgeElement::new(m, pi.clone()).unwrap()) {
                    missing += 1;
                }
            }
        }
    }

    // the same check for the root-system version
    let mut artin_unsound = 0;
    let mut artin_missing = 0;
    for kind in [RootType::A(2), RootType::B(2), RootType::G2] {
        let rs = RootSystem::build(kind).unwrap();
        let gens: Vec<ArtinElement<Int>> = (1..=rs.rank())
            .flat_map(|a| {
                let g = ArtinElement::generator(&rs, a);
                [g.clone(), g.inverse()]
            })
            .collect();
        let reached = ball(ArtinElement::identity(&rs), &gens, 8, |a, b| a.mul(b));
        artin_unsound += reached.iter().filter(|g| !artin_membership(g.v(), g.c(), &rs).unwrap()).count();
        if kind == RootType::A(2) {
            let group = rs.coxeter_group();
            for code in 0..3usize.pow(rs.len() as u32) {
                let v = RootVector::from_values((0..rs.len()).map(|i| (code / 3usize.pow(i as u32) % 3) as Int - 1).collect());
                for c in &group {
                    if artin_membership(&v, c, &rs).unwrap() && !reached.contains(&ArtinElement::new(v.clone(), c.clone())) {
                        artin_missing += 1;
                    }
                }
            }
        }
    }
    outcome(
        unsound == 0 && missing == 0 && artin_unsound == 0 && artin_missing == 0,
        format!(
            "{} SGE elements reached, {unsound} failing the test; {members} members with |M_ij| <= 1, {missing} unreached; \
             Artin A2/B2/G2 balls: {artin_unsound} failing, A2 window {artin_missing} unreached",
            reached.len()
        ),
    )
}

fn central_binomial(n: u128) -> u128 {
    let k = n / 2;
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

fn random_walks() -> Outcome {
    let w2 = exact_walk(2, 64).unwrap();
    let binom_ok = (0..=64usize).all(|len| {
        let expect = if len % 2 == 0 { central_binomial(len as u128) } else { 0 };
        w2.counts[len] == expect
    });
    let p2: Vec<(usize, f64)> = (0..=64).map(|l| (l, w2.probability(l))).collect();
    let e2 = estimate_decay_exponent(&p2).unwrap();
    let w3 = exact_walk(3, 16).unwrap();
    let p3: Vec<(usize, f64)> = (0..=16).map(|l| (l, w3.probability(l))).collect();
    let e3 = estimate_decay_exponent(&p3).unwrap();
    let mut mc = Vec::new();
    let mut mc_ok = true;
    for len in [2usize, 4, 6] {
        let est = kernel_hit_probability(3, len, 100_000, 11).unwrap();
        let exact = w3.probability(len);
        mc_ok &= est.contains(exact);
        mc.push(format!("N={len} exact {exact:.5} in [{:.5}, {:.5}]", est.ci_low, est.ci_high));
    }
    outcome(
        binom_ok && (e2 - 0.5).abs() <= 0.1 && (1.1..=1.9).contains(&e3) && mc_ok,
        format!(
            "n=2 central binomials {binom_ok}, exponent {e2:.3}; n=3 exponent {e3:.3}; {}",
            mc.join(", ")
        ),
    )
}

fn ge_bin(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ge")).args(args).output().expect("run ge");
    (out.status.success(), String::from_utf8_lossy(&out.stdout).into_owned())
}

fn cli_golden() -> Outcome {
    let data = |f: &str| format!("{}/tests/data/{f}", env!("CARGO_MANIFEST_DIR"));
    let i2_4 = data("i2_4.json");
    let cases: Vec<(Vec<&str>, Option<&str>)> = vec![
        (vec!["eval", "--n", "3", "--word", "1 1", "--hom", "ge"], Some("{\"pi\":[1,2,3],\"ell\":[1,1,0]}\n")),
        (vec!["kernel", "--n", "3", "--word", "1 -2 1 -2 1 -2", "--hom", "ge"], Some("{\"in_kernel\":true}\n")),
        (vec!["analogue", "--presentation", &i2_4], None),
        (vec!["construct", "--pi", "3,1,2", "--ell", "1,-1,2"], None),
        (vec!["cocycle", "--pi", "3,1,2"], Some("{\"pi\":[3,1,2],\"fbar\":[[0,0,1],[0,0,1],[-1,-1,0]]}\n")),
        (vec!["cocycle", "--type", "G2", "--coxeter-word", "1 2"], None),
        (vec!["artin-verify", "--type", "B3"], None),
        (vec!["walk", "--n", "3", "--max-length", "6", "--samples", "5000", "--seed", "9"], None),
    ];
    let mut bad = Vec::new();
    for (args, expect) in &cases {
        let (ok1, a) = ge_bin(args);
        let (ok2, b) = ge_bin(args);
        let matches = expect.map_or(true, |e| a == e);
        if !(ok1 && ok2 && a == b && matches) {
            bad.push(args[0].to_string());
        }
    }
    let (_, analogue) = ge_bin(&["analogue", "--presentation", &i2_4]);
    let dim_ok = analogue.starts_with("{\"dimension\":6,");
    outcome(
        bad.is_empty() && dim_ok,
        format!("{} invocations byte-stable; analogue dimension 6: {dim_ok}; failing: {bad:?}", cases.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Option<u64>, fn() -> Outcome); 12] = [
        (1, "relation invariance", Some(10), relation_invariance),
        (2, "writhe and permutation parity", None, parity),
        (3, "GE image characterization", Some(60), image_characterization),
        (4, "listed kernel examples", None, kernel_examples),
        (5, "permutation cocycle in {0,1}", Some(5), permutation_cocycle),
        (6, "pure braid doubling and symmetry", None, pure_doubling),
        (7, "Artin braid relations", None, artin_relations),
        (8, "Coxeter cocycle positivity", None, positivity),
        (9, "analogue space dimensions", Some(5), analogue_dimensions),
        (10, "SGE and Artin image characterization", None, sge_characterization),
        (11, "random walk statistics", Some(120), random_walks),
        (12, "CLI golden output", None, cli_golden),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let start = Instant::now();
        let mut out = run();
        let elapsed = start.elapsed();
        if let Some(secs) = limit {
            if elapsed > Duration::from_secs(secs) {
                out.pass = false;
                out.detail.push_str(&format!("; over the {secs} s limit"));
            }
        }
        println!(
            "{} [{id:>2}] {name}: {} ({:.2} s)",
            if out.pass { "PASS" } else { "FAIL" },
            out.detail,
            elapsed.as_secs_f64()
        );
        if !out.pass {
            failed.push(id);
        }
    }
    println!("{} of 12 criteria pass", 12 - failed.len());
    if failed == EXPECTED_FAILURES {
        if !failed.is_empty() {
            println!("failing criteria {failed:?} are the documented unattainable ones");
        }
        ExitCode::SUCCESS
    } else {
        println!("unexpected result: failing {failed:?}, documented {EXPECTED_FAILURES:?}");
        ExitCode::FAILURE
    }
}
