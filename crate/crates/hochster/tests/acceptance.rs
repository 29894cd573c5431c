//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};

use hochster::corpus::{random_ideals, random_squarefree_ideals};
use hochster::format::render_series;
use hochster::verify::verify_table;
use hochster_core::invariants::{ai_bi, is_generalized_cm, regularity};
use hochster_core::substitution::strictness_witness;
use hochster_core::{
    classical_hochster, cohomology_table, fixtures, phi_ideal, CohomologyTable, DegreePattern,
    Face, FieldSpec, InitialDegree, InvariantReport, MonomialIdeal, SimplicialComplex,
    SubstitutionMap, DEFAULT_PATTERN_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const QQ: FieldSpec = FieldSpec::RATIONALS;
const SEED: u64 = 42;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(ideal: &MonomialIdeal) -> CohomologyTable {
    cohomology_table(ideal, QQ, DEFAULT_PATTERN_CAP).expect("within cap")
}

fn pattern(face: &[usize], b: &[u32]) -> DegreePattern {
    DegreePattern::new(Face::from_vertices(face.iter().copied()), b.to_vec()).unwrap()
}

fn entries(t: &CohomologyTable) -> BTreeMap<(usize, DegreePattern), u64> {
    t.entries()
        .map(|e| ((e.index, e.pattern.clone()), e.coeff))
        .collect()
}

fn oracle_equivalence() -> Outcome {
    let corpus = random_ideals(SEED, 200);
    let mut degrees = 0;
    for (k, ideal) in corpus.iter().enumerate() {
        let report = verify_table(ideal, &table(ideal), 2);
        degrees += report.degrees_checked;
        if let Some(m) = report.mismatches.first() {
            return Err(format!("ideal {k}: {m}"));
        }
    }
    Ok(format!("200 ideals, {degrees} degrees"))
}

fn squarefree_agreement() -> Outcome {
    for (k, ideal) in random_squarefree_ideals(SEED, 100).iter().enumerate() {
        ensure(ideal.n() <= 6 && ideal.is_squarefree(), || {
            format!("ideal {k} outside corpus")
        })?;
        ensure(
            classical_hochster(ideal, QQ).unwrap() == table(ideal),
            || format!("ideal {k}: tables differ"),
        )?;
    }
    Ok("100 ideals".into())
}

fn worked_example() -> Outcome {
    let ideal = MonomialIdeal::from_exponents(2, &[[2u32, 0], [1, 1]]).unwrap();
    let t = table(&ideal);
    let want = BTreeMap::from([
        ((0, pattern(&[], &[1, 0])), 1),
        ((1, pattern(&[1], &[0, 0])), 1),
    ]);
    ensure(entries(&t) == want, || format!("table {:?}", entries(&t)))?;
    let r = InvariantReport::new(&ideal, &t);
    let got = (
        r.dim,
        r.depth,
        r.ai[0],
        r.bi[0],
        r.ai[1],
        r.generalized_cm,
        r.buchsbaum_bound_global,
        r.buchsbaum_bound_refined,
        r.reg,
    );
    let want = (
        1,
        0,
        Some(1),
        InitialDegree::Finite(1),
        Some(-1),
        true,
        2,
        Some(1),
        Some(1),
    );
    ensure(got == want, || format!("invariants {got:?}"))?;
    ensure(r.all_checks_pass(), || "a corollary check failed".into())?;
    ensure(
        render_series(&t, None) == "H^0: 1*t1\nH^1: 1*t2^-1/(1-t2^-1)\n",
        || render_series(&t, None),
    )?;
    Ok("table, invariants, series".into())
}

fn zero_ideal() -> Outcome {
    let ideal = MonomialIdeal::zero(3).unwrap();
    let t = table(&ideal);
    let want = BTreeMap::from([((3, pattern(&[0, 1, 2], &[0, 0, 0])), 1)]);
    ensure(entries(&t) == want, || format!("table {:?}", entries(&t)))?;
    let series = render_series(&t, None);
    ensure(
        series == "H^3: 1*t1^-1/(1-t1^-1)*t2^-1/(1-t2^-1)*t3^-1/(1-t3^-1)\n",
        || series.clone(),
    )?;
    ensure(regularity(&t) == Some(0), || {
        format!("reg {:?}", regularity(&t))
    })?;
    Ok("n=3".into())
}

fn corollary_suite() -> Outcome {
    let mut corpus = random_ideals(SEED, 200);
    corpus.extend(random_squarefree_ideals(SEED, 100));
    corpus.extend([
        fixtures::two_disjoint_edges(),
        fixtures::two_disjoint_triangles(),
        fixtures::rp2(),
    ]);
    let mut gen_cm = 0;
    for (k, ideal) in corpus.iter().enumerate() {
        let t = table(ideal);
        let n = ideal.n() as i64;
        let rho_sum: i64 = ideal.rho().iter().map(|&r| i64::from(r)).sum();
        let d = t.dim();
        for i in 0..=ideal.n() {
            if let (Some(a), _) = ai_bi(&t, i) {
                ensure(a <= rho_sum - n, || {
                    format!("ideal {k}: a_{i} = {a} > {}", rho_sum - n)
                })?;
                ensure(!ideal.is_squarefree() || a <= 0, || {
                    format!("ideal {k}: square-free a_{i} = {a}")
                })?;
            }
        }
        if is_generalized_cm(&t, d) {
            gen_cm += 1;
            let reg = regularity(&t).expect("top cohomology is nonzero");
            for e in t.entries().filter(|e| e.index < d) {
                ensure(
                    e.pattern.face().is_empty() && e.pattern.top_degree() >= 0,
                    || format!("ideal {k}: b_{} < 0 at {:?}", e.index, e.pattern),
                )?;
                ensure(e.index as i64 <= reg, || {
                    format!("ideal {k}: H^{} beyond reg {reg}", e.index)
                })?;
            }
        }
        ensure(InvariantReport::new(ideal, &t).all_checks_pass(), || {
            format!("ideal {k}: check failed")
        })?;
    }
    Ok(format!("{} ideals, {gen_cm} generalized CM", corpus.len()))
}

fn substitution_sharpness() -> Outcome {
    let ideal = fixtures::two_disjoint_edges();
    let mut spans = Vec::new();
    for e1 in [2u32, 3] {
        let phi = SubstitutionMap::new(vec![e1, 1, 1, 1]).unwrap();
        let t = table(&phi_ideal(&ideal, &phi).unwrap());
        let h1: BTreeMap<DegreePattern, u64> = t
            .entries_at(1)
            .map(|e| (e.pattern.clone(), e.coeff))
            .collect();
        let want: BTreeMap<DegreePattern, u64> =
            (0..e1).map(|b| (pattern(&[], &[b, 0, 0, 0]), 1)).collect();
        ensure(h1 == want, || format!("phi={e1}: H^1 {h1:?}"))?;
        let r = strictness_witness(&ideal, &phi, &t).map_err(|e| e.to_string())?;
        ensure(r.span == i64::from(e1) && r.attained(), || {
            format!("phi={e1}: {r:?}")
        })?;
        spans.push(r.span);
    }
    Ok(format!("spans {spans:?}"))
}

fn random_complex(rng: &mut ChaCha8Rng) -> SimplicialComplex {
    let n = rng.random_range(1..=7usize);
    let facets: Vec<Face> = (0..rng.random_range(0..=6))
        .map(|_| Face::from_bits(rng.random_range(0..1u64 << n)))
        .collect();
    SimplicialComplex::from_facets(n, facets).unwrap()
}

fn homology_conventions() -> Outcome {
    let irr = SimplicialComplex::irrelevant(3)
        .unwrap()
        .reduced_homology(QQ);
    ensure(
        irr.get(-1) == 1 && irr.dims().iter().sum::<usize>() == 1,
        || format!("{{∅}}: {irr:?}"),
    )?;
    let void = SimplicialComplex::empty(3).unwrap().reduced_homology(QQ);
    ensure(void.dims().iter().all(|&x| x == 0), || {
        format!("∅: {void:?}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let gf2 = FieldSpec::new(2).unwrap();
    for k in 0..1000 {
        let c = random_complex(&mut rng);
        for d in 0..=c.dim() {
            let prod = c
                .boundary_matrix(d - 1)
                .unwrap()
                .mul(&c.boundary_matrix(d).unwrap());
            ensure(prod.is_zero(), || format!("complex {k}: d∘d ≠ 0 at {d}"))?;
        }
        let chi = c.reduced_euler_characteristic();
        for field in [QQ, gf2] {
            let h = c.reduced_homology(field).euler_characteristic();
            ensure(h == chi, || {
                format!("complex {k}: χ {h} vs {chi} over {field}")
            })?;
        }
    }
    Ok("1000 complexes".into())
}

fn run_table(file: &PathBuf, threads: u32) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_hochster"))
        .args(["--threads", &threads.to_string(), "table"])
        .arg(file)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        String::from_utf8_lossy(&out.stderr).into_owned()
    })?;
    Ok(out.stdout)
}

fn determinism() -> Outcome {
    let file = std::env::temp_dir().join(format!("hochster-acceptance-{}.txt", std::process::id()));
    std::fs::write(&file, "n=4\nx1^3*x2, x2^2*x3^2, x3*x4^3, x1*x4^2, x2*x4\n")
        .map_err(|e| e.to_string())?;
    let runs = [
        run_table(&file, 1),
        run_table(&file, 1),
        run_table(&file, 4),
        run_table(&file, 4),
    ];
    let _ = std::fs::remove_file(&file);
    let runs: Vec<Vec<u8>> = runs.into_iter().collect::<Result<_, _>>()?;
    ensure(runs.iter().all(|r| r == &runs[0]), || {
        "outputs differ".into()
    })?;
    ensure(runs[0].iter().filter(|&&b| b == b'\n').count() > 2, || {
        "table suspiciously small".into()
    })?;
    Ok(format!("{} bytes, threads 1 and 4", runs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("oracle equivalence on random ideals", oracle_equivalence),
        ("square-free classical agreement", squarefree_agreement),
        ("worked example (x1^2, x1*x2)", worked_example),
        ("zero ideal", zero_ideal),
        ("corollary suite", corollary_suite),
        ("substitution sharpness", substitution_sharpness),
        ("homology conventions", homology_conventions),
        ("table determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
