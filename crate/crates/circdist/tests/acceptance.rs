//! End-to-end checks of the headline guarantees, one test per criterion,
//! each printing a PASS/FAIL line with its runtime.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::process::Command;
use std::time::Instant;

use circdist::{
    break_labeling, build_connected_family, build_disconnected_family, certify_connected_plan,
    cmp_distinguishing_formula, enumerate_automorphisms, exact_distinguishing_number,
    explicit_labeling, is_automorphism, is_distinguishing, multipartite_distinguishing_formula,
    random_labeling, CmpSpec, DistinguishingError, Graph, MultipartiteShape, OracleOptions,
    DEFAULT_AUT_CAP,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn check(name: &str, started: Instant, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("[{status}] {name} ({:.2?}) — {detail}", started.elapsed());
    assert!(pass, "{name}: {detail}");
}

fn cmp(m: usize, p: usize) -> CmpSpec {
    CmpSpec::new(m, p).unwrap()
}

/// Criterion 1: the exact search and the closed formula agree on every
/// C(m,p) with 3 <= m*p <= 10.
#[test]
fn criterion_1_formula_oracle_agreement() {
    let started = Instant::now();
    let mut specs = Vec::new();
    for m in 1..=10usize {
        for p in 1..=10usize {
            if (3..=10).contains(&(m * p)) && CmpSpec::new(m, p).is_ok() {
                specs.push(cmp(m, p));
            }
        }
    }
    assert!(specs.len() >= 15, "sweep holds {} specs", specs.len());
    let mut mismatches = Vec::new();
    for spec in &specs {
        let g = spec.build();
        let formula = cmp_distinguishing_formula(spec).unwrap();
        let (exact, witness) = exact_distinguishing_number(&g, g.n()).unwrap();
        if exact != formula || !is_distinguishing(&g, &witness) {
            mismatches.push((spec.m(), spec.p(), exact, formula));
        }
    }
    check(
        "criterion 1: formula/oracle agreement, 3 <= mp <= 10",
        started,
        mismatches.is_empty(),
        &format!("{} specs checked, mismatches: {mismatches:?}", specs.len()),
    );
}

/// Criterion 2: the explicit labeling is distinguishing with exactly m+1
/// labels for every (m,p) in {2,3,4} x {5,6,7,8} with mp <= 32, via
/// color-constrained search only.
#[test]
fn criterion_2_explicit_labeling_at_scale() {
    let started = Instant::now();
    let mut tested = 0;
    let mut failures = Vec::new();
    for m in 2..=4usize {
        for p in 5..=8usize {
            if m * p > 32 {
                continue;
            }
            let spec = cmp(m, p);
            let g = spec.build();
            let c = explicit_labeling(&spec).unwrap();
            tested += 1;
            if c.distinct_count() != m + 1 || !is_distinguishing(&g, &c) {
                failures.push((m, p));
            }
        }
    }
    check(
        "criterion 2: explicit (m+1)-labeling verified on {2,3,4} x {5,6,7,8}",
        started,
        tested == 12 && failures.is_empty(),
        &format!("{tested} specs, failures: {failures:?}"),
    );
}

/// Criterion 3: 1000 random labelings with at most m labels per spec, each
/// broken by a verified nontrivial label-preserving automorphism.
#[test]
fn criterion_3_breaker_never_misses() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut failures = 0usize;
    for (m, p) in [(2, 5), (2, 6), (3, 5), (2, 7)] {
        let spec = cmp(m, p);
        let g = spec.build();
        for _ in 0..1000 {
            let c = random_labeling(g.n(), m, &mut rng);
            let ok = match break_labeling(&spec, &c) {
                Ok(sigma) => {
                    !sigma.is_identity()
                        && is_automorphism(&g, &sigma)
                        && (0..g.n()).all(|v| c.get(sigma.apply(v)) == c.get(v))
                }
                Err(_) => false,
            };
            if !ok {
                failures += 1;
            }
        }
    }
    check(
        "criterion 3: 4 x 1000 random small labelings all broken",
        started,
        failures == 0,
        &format!("{failures} failures"),
    );
}

/// Criterion 4: BFS distances from vertex 0 to the first p residues follow
/// the two-sided ramp min-distance law for all m <= 4, p <= 12.
#[test]
fn criterion_4_distance_law() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for m in 1..=4usize {
        for p in 2..=12usize {
            if m * p < 3 {
                continue;
            }
            let g = cmp(m, p).build();
            let dist = g.bfs_distances(0);
            for i in 1..p {
                let expected = if i <= p / 2 { i } else { p - i };
                if dist[i] != Some(expected) {
                    failures.push((m, p, i, dist[i], expected));
                }
            }
        }
    }
    check(
        "criterion 4: ramp distance law for m <= 4, p <= 12",
        started,
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

/// Criterion 5: C(m,4) collapses to K_{2m,2m}; the multipartite formula,
/// the C(m,p) formula, and (for m = 2) the exact oracle all give 2m+1.
#[test]
fn criterion_5_period_four_collapse() {
    let started = Instant::now();
    let mut ok = true;
    let mut detail = String::new();
    for m in 2..=5usize {
        let spec = cmp(m, 4);
        let sizes = spec.build().multipartite_part_sizes();
        let shape = MultipartiteShape::from_part_sizes(&[2 * m, 2 * m]).unwrap();
        let by_shape = multipartite_distinguishing_formula(&shape);
        let formula = cmp_distinguishing_formula(&spec).unwrap();
        if sizes != Some(vec![2 * m, 2 * m]) || by_shape != 2 * m + 1 || formula != 2 * m + 1 {
            ok = false;
            detail = format!("m={m}: sizes {sizes:?}, by_shape {by_shape}, formula {formula}");
            break;
        }
    }
    if ok {
        let g = cmp(2, 4).build();
        let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
        ok = exact == 5;
        detail = format!("oracle on C(2,4) gives {exact}, want 5");
    }
    check(
        "criterion 5: C(m,4) = K_{2m,2m} with D = 2m+1",
        started,
        ok,
        &detail,
    );
}

/// Criterion 6: the multipartite closed form matches the oracle on five
/// small complete multipartite graphs.
#[test]
fn criterion_6_multipartite_spot_checks() {
    let started = Instant::now();
    let cases: [(&[usize], usize); 5] = [
        (&[2, 2], 3),
        (&[2, 2, 2], 3),
        (&[3, 3], 4),
        (&[1, 1, 1], 3),
        (&[3, 2], 3),
    ];
    let mut failures = Vec::new();
    for (sizes, want) in cases {
        let g = Graph::complete_multipartite(sizes);
        let shape = MultipartiteShape::from_part_sizes(sizes).unwrap();
        let formula = multipartite_distinguishing_formula(&shape);
        let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
        if formula != want || exact != want {
            failures.push((sizes.to_vec(), formula, exact, want));
        }
        // the detector recovers the shape from the bare graph
        let mut detected = g.multipartite_part_sizes().unwrap();
        detected.sort_unstable();
        let mut expected = sizes.to_vec();
        expected.sort_unstable();
        if detected != expected {
            failures.push((sizes.to_vec(), 0, 0, want));
        }
    }
    check(
        "criterion 6: multipartite formula vs oracle on 5 graphs",
        started,
        failures.is_empty(),
        &format!("failures: {failures:?}"),
    );
}

/// Criterion 7: `family --d 3,4,5` plans n = 24 with members (2,12), (3,8),
/// (4,6); each member is certified by a verified (m+1)-labeling plus 200
/// broken random m-labelings. The exact oracle declares n = 24 out of its
/// budget and is not attempted.
#[test]
fn criterion_7_connected_family() {
    let started = Instant::now();

    let output = Command::new(env!("CARGO_BIN_EXE_circdist"))
        .args(["family", "--d", "3,4,5"])
        .output()
        .expect("run circdist");
    let stdout = String::from_utf8(output.stdout).unwrap();
    let cli_ok = output.status.success()
        && stdout.trim()
            == r#"{"n":24,"members":[{"m":2,"p":12,"target_d":3},{"m":3,"p":8,"target_d":4},{"m":4,"p":6,"target_d":5}],"scaling_k":1}"#;

    let plan = build_connected_family(&[3, 4, 5]).unwrap();
    let certs = certify_connected_plan(&plan, 200, 0);
    let certified = certs.iter().all(|c| c.holds() && c.samples == 200);

    let member = plan.members()[0].build();
    let refused = matches!(
        exact_distinguishing_number(&member, member.n()),
        Err(DistinguishingError::CapExceeded { .. })
    );

    check(
        "criterion 7: family 3,4,5 at n=24, certified without the oracle",
        started,
        cli_ok && certified && refused,
        &format!("cli_ok={cli_ok} certified={certified} oracle_refused={refused}"),
    );
}

/// Criterion 8: the disconnected family for 2,3,4 reproduces the P_4
/// exception and the oracle confirms all three numbers at order 4.
#[test]
fn criterion_8_disconnected_family() {
    let started = Instant::now();

    let output = Command::new(env!("CARGO_BIN_EXE_circdist"))
        .args(["family", "--d", "2,3,4", "--disconnected"])
        .output()
        .expect("run circdist");
    let stdout = String::from_utf8(output.stdout).unwrap();
    let cli_ok =
        output.status.success() && stdout.contains(r#"{"kind":"path","order":4,"target_d":2}"#);

    let plan = build_disconnected_family(&[2, 3, 4]).unwrap();
    let mut oracle_ok = plan.common_order() == 4;
    for (member, &d) in plan.members().iter().zip(plan.targets()) {
        let g = member.graph();
        let (exact, _) = exact_distinguishing_number(&g, g.n()).unwrap();
        oracle_ok &= exact == d;
    }

    check(
        "criterion 8: disconnected family 2,3,4 with the P_4 exception",
        started,
        cli_ok && oracle_ok,
        &format!("cli_ok={cli_ok} oracle_ok={oracle_ok}"),
    );
}

/// Criterion 9: group orders 10, 8 and 320 with closure verification, and
/// Aut(G) = Aut(complement of G) across the small sweep.
#[test]
fn criterion_9_group_sanity() {
    let started = Instant::now();

    let mut ok = true;
    let mut detail = String::new();
    for (m, p, want) in [(1, 5, 10), (2, 2, 8), (2, 5, 320)] {
        let aut = enumerate_automorphisms(&cmp(m, p).build(), DEFAULT_AUT_CAP).unwrap();
        if aut.order() != want || !aut.is_group() {
            ok = false;
            detail = format!("C({m},{p}): order {} (want {want})", aut.order());
        }
    }

    if ok {
        let mut sweep: Vec<Graph> = Vec::new();
        for m in 1..=4usize {
            for p in 2..=8usize {
                if (3..=8).contains(&(m * p)) {
                    sweep.push(cmp(m, p).build());
                }
            }
        }
        for m in 3..=6usize {
            sweep.push(Graph::complete(m));
        }
        for g in &sweep {
            let aut = enumerate_automorphisms(g, DEFAULT_AUT_CAP).unwrap();
            let aut_c = enumerate_automorphisms(&g.complement(), DEFAULT_AUT_CAP).unwrap();
            if aut.elements() != aut_c.elements() {
                ok = false;
                detail = format!("Aut mismatch with complement on {g:?}");
                break;
            }
        }
        if ok {
            detail = format!(
                "{} sweep graphs compared against their complements",
                sweep.len()
            );
        }
    }

    check(
        "criterion 9: group orders, closure, complement invariance",
        started,
        ok,
        &detail,
    );
}

/// The witness returned by the exact search is canonical: the smallest
/// distinguishing restricted growth string. Pin one value.
#[test]
fn oracle_witness_is_canonical() {
    let started = Instant::now();
    let g = Graph::path(4);
    let (d, w) = exact_distinguishing_number(&g, 10).unwrap();
    let opts = OracleOptions {
        threads: 3,
        ..Default::default()
    };
    let par = circdist::exact_distinguishing_number_opts(&g, opts).unwrap();
    check(
        "extra: canonical witness, sequential == parallel",
        started,
        d == 2 && w.labels() == [1, 1, 1, 2] && par == (d, w),
        "P_4 witness",
    );
}
