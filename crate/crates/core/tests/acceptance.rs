//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use liemult::catalog::{self, Group};
use liemult::linalg::Matrix;
use liemult::multiplier::{
    cover, dim_multiplier, dim_multiplier_cover, epicenter, CochainComplexSlice,
};
use liemult::verify::{self, closure, FullReport, Member, Quantity};
use liemult::LieAlgebra;

const DIM_CAP: usize = 9;

struct Outcome {
    ok: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: impl Into<String>) -> Outcome {
    Outcome {
        ok: failures.is_empty(),
        detail: if failures.is_empty() {
            summary.into()
        } else {
            failures.join("; ")
        },
    }
}

fn table_reproduction(r: &FullReport) -> Outcome {
    let mut failures: Vec<String> = r
        .tables
        .iter()
        .flat_map(|t| t.discrepancies.clone())
        .collect();
    let spots = [
        ("L_{6,13}", 4),
        ("37A", 12),
        ("L_{6,14}", 2),
        ("27A", 10),
        ("1457A", 6),
        ("137A", 7),
    ];
    for (name, want) in spots {
        let got = dim_multiplier(&catalog::get(name, None).unwrap());
        if got != want {
            failures.push(format!("{name}: dim M {got}, expected {want}"));
        }
    }
    let rows: usize = r.tables.iter().map(|t| t.rows.len()).sum();
    outcome(
        failures,
        format!("{rows} rows and {} spot values match", spots.len()),
    )
}

fn classification(r: &FullReport) -> Outcome {
    let mut failures = Vec::new();
    for c in &r.classifications {
        for m in &c.missing {
            failures.push(format!("s = {}: missing {m}", c.s_value));
        }
        for m in &c.extra {
            failures.push(format!("s = {}: extra {m}", c.s_value));
        }
    }
    if r.classifications.len() != 8 {
        failures.push(format!("{} sweeps instead of 8", r.classifications.len()));
    }
    let beyond: usize = r.classifications.iter().map(|c| c.beyond_cap.len()).sum();
    outcome(
        failures,
        format!(
            "s = 0..7 over {} closure members; {beyond} listed instances exceed dim {DIM_CAP}",
            r.header.closure_size
        ),
    )
}

fn extension_fixtures() -> Outcome {
    let cases: &[(&str, Option<i64>, usize)] = &[
        ("37A.x1x7", None, 14),
        ("37A.x3x7", None, 14),
        ("37A.x4x7", None, 14),
        ("37A.x1x3", None, 14),
        ("37A.x1x4", None, 14),
        ("37A.x3x4", None, 14),
        ("357A", None, 8),
        ("247N", None, 7),
        ("147D", None, 7),
        ("147E", Some(2), 7),
        ("147F", None, 7),
        ("147A.x6x8", None, 12),
        ("L_{5,8}.x6x8", None, 14),
    ];
    let mut failures = Vec::new();
    for &(name, p, want) in cases {
        let l = catalog::get(name, p.map(liemult::linalg::int).as_ref()).unwrap();
        let got = dim_multiplier_cover(&l).dim_m;
        if got != want {
            failures.push(format!(
                "{}: dim M {got}, expected {want}",
                l.name().unwrap()
            ));
        }
    }
    outcome(
        failures,
        format!("{} cover computations match", cases.len()),
    )
}

fn method_agreement(members: &[Member]) -> Outcome {
    let mut failures = Vec::new();
    for m in members {
        let a = dim_multiplier(&m.algebra);
        let b = dim_multiplier_cover(&m.algebra).dim_m;
        if a != b {
            failures.push(format!("{}: cochain {a}, chain {b}", m.name));
        }
    }
    let pool: Vec<LieAlgebra> = catalog::entries()
        .iter()
        .filter(|e| e.group != Group::Fixture)
        .map(|e| e.build(None).unwrap())
        .filter(|l| l.dim() <= 6)
        .chain((1..=3).map(catalog::abelian))
        .collect();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut pairs = 0;
    while pairs < 60 {
        let a = pool.choose(&mut rng).unwrap();
        let b = pool.choose(&mut rng).unwrap();
        if a.dim() + b.dim() > 10 {
            continue;
        }
        pairs += 1;
        let ab = |l: &LieAlgebra| l.dim() - l.derived().dim();
        let want = dim_multiplier(a) + dim_multiplier(b) + ab(a) * ab(b);
        let got = dim_multiplier(&LieAlgebra::direct_sum(a, b));
        if got != want {
            failures.push(format!(
                "{}⊕{}: {got} vs {want}",
                a.name().unwrap(),
                b.name().unwrap()
            ));
        }
    }
    outcome(
        failures,
        format!(
            "{} members agree; {pairs} random direct sums satisfy the sum rule",
            members.len()
        ),
    )
}

fn capability(r: &FullReport, members: &[Member]) -> Outcome {
    let mut failures: Vec<String> = r
        .capability
        .iter()
        .filter(|c| !c.matches)
        .map(|c| {
            format!(
                "{}: capable {}, expected {}",
                c.name, c.capable, c.expected_capable
            )
        })
        .collect();
    for m in members {
        let l = &m.algebra;
        let e = cover(l);
        let stem = e.total.center().intersection(&e.total.derived());
        if !e.kernel.is_subspace_of(&stem) {
            failures.push(format!("{}: cover kernel not in Z(E) ∩ E²", m.name));
        }
        if !l.is_abelian() {
            let bound = l.center().intersection(&l.derived());
            if !epicenter(l).is_subspace_of(&bound) {
                failures.push(format!("{}: epicenter not in Z(L) ∩ L²", m.name));
            }
        }
    }
    outcome(
        failures,
        format!(
            "{} claims; stem and epicenter containment on {} members",
            r.capability.len(),
            members.len()
        ),
    )
}

fn exterior_square(r: &FullReport) -> Outcome {
    let mut failures: Vec<String> = r
        .exterior_square
        .iter()
        .filter(|c| !c.matches)
        .map(|c| {
            format!(
                "n = {} over {}: s {} vs {}",
                c.n, c.quotient, c.s, c.claimed_s
            )
        })
        .collect();
    for c in r
        .claims
        .iter()
        .filter(|c| c.quantity == Quantity::DimExteriorSquare && !c.matches)
    {
        failures.push(format!(
            "{}: dim L∧L {} vs {}",
            c.algebra, c.computed, c.claimed
        ));
    }
    let s: Vec<String> = r
        .exterior_square
        .iter()
        .map(|c| format!("{}", c.s))
        .collect();
    outcome(failures, format!("dim L∧L 15/17/23; s = {}", s.join("/")))
}

fn bound_suites(r: &FullReport) -> Outcome {
    let b = r.bounds.as_ref().expect("full run has bounds");
    let mut failures: Vec<String> = b
        .failures
        .iter()
        .map(|f| format!("{} on {}", f.check.id, f.algebra))
        .collect();
    if !b.tight_derived_1_expected {
        failures.push(format!("equality set {:?}", b.tight_derived_1));
    }
    if !b.noncapable_8_2_ok {
        failures.push(format!(
            "non-capable n = 8 s values {:?}",
            b.noncapable_8_2_s
        ));
    }
    for family in [
        "multiplier-upper-bound",
        "central-ideal-bound",
        "noncapable-s-bound",
        "gamma3-defect",
        "cube-quotient-bound",
    ] {
        if b.checks_run.get(family).copied().unwrap_or(0) == 0 {
            failures.push(format!("{family} never instantiated"));
        }
    }
    let total: usize = b.checks_run.values().sum();
    outcome(failures, format!("{total} bound instances hold"))
}

fn rank_nullity(m: &Matrix) -> bool {
    m.rank() + m.nullspace_basis().len() == m.cols() && m.rank() == m.transpose().rank()
}

fn property_suites(members: &[Member], first: &str) -> Outcome {
    let mut failures = Vec::new();
    for m in members {
        let cx = CochainComplexSlice::new(&m.algebra);
        if !cx.d2.mul(&cx.d1).unwrap().is_zero() {
            failures.push(format!("{}: d2·d1 != 0", m.name));
        }
        for d in [&cx.d1, &cx.d2] {
            if !rank_nullity(d) || d.rref().rref() != d.rref() {
                failures.push(format!("{}: elimination invariant fails", m.name));
            }
        }
    }
    for e in catalog::entries() {
        let params = if e.is_parameterized() {
            e.param.samples().into_iter().map(Some).collect()
        } else {
            vec![None]
        };
        for p in params {
            if let Some((t, _)) = e.build(p.as_ref()).unwrap().jacobi_defect() {
                failures.push(format!("{}: Jacobi fails on {t:?}", e.name));
            }
        }
    }
    let second = verify::render(&verify::run_all(DIM_CAP), verify::Format::Json).unwrap();
    if first != second {
        failures.push("JSON reports differ between runs".into());
    }
    outcome(
        failures,
        "elimination, complex, Jacobi and byte-identical report checks hold",
    )
}

fn main() -> ExitCode {
    let start = Instant::now();
    let report = verify::run_all(DIM_CAP);
    let first = verify::render(&report, verify::Format::Json).unwrap();
    let members = closure(DIM_CAP);

    let results = [
        ("table reproduction", table_reproduction(&report)),
        ("classification sweeps", classification(&report)),
        ("extension fixtures", extension_fixtures()),
        ("method agreement", method_agreement(&members)),
        ("capability", capability(&report, &members)),
        ("exterior-square arithmetic", exterior_square(&report)),
        ("bound suites", bound_suites(&report)),
        ("property suites", property_suites(&members, &first)),
    ];
    let mut all = true;
    for (i, (name, o)) in results.iter().enumerate() {
        all &= o.ok;
        println!(
            "{} criterion {} ({name}): {}",
            if o.ok { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "acceptance finished in {:.1}s",
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
