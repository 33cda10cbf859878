//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command as Process, ExitCode};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use quotori::corpus;
use quotori::crystal::{
    affine_realization, is_torsion_free, normalize_action, realizations_equivalent, realizes, CrystGroup,
    ExtensionCocycle,
};
use quotori::exactla::rational::small_to_rational_matrix;
use quotori::groupcore::{character_table, real_isotypic_dimensions, DEFAULT_ORDER_BOUND};
use quotori::hodge::numeric::{sample_omega, tangent_space_dimension};
use quotori::hodge::{
    component_dimension, hodge_types, hodge_types_with_table, invariant_complex_structure, is_even,
    ComplexStructure, StructureOptions, StructureOutcome,
};
use quotori::orbpi::{enumerate_triangle_quotient, platonic_check, Enumeration};
use quotori::quotient::{classify_action, factorization_report, fixed_points, lefschetz_count, orbifold_descriptor, ActionClass};
use quotori::schema::GroupInput;
use quotori::RatMatrix;
use quotori_cli::report::Report;
use quotori_cli::{parse_document, render, run, Command, Format, Job, Source};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(name: &str) -> CrystGroup {
    let input = corpus::load(name).unwrap_or_else(|| panic!("missing corpus entry {name}"));
    normalize_action(&input.crystal_data().unwrap(), DEFAULT_ORDER_BOUND).unwrap().group
}

fn structure(g: &CrystGroup) -> Option<ComplexStructure> {
    match invariant_complex_structure(g, &StructureOptions::default()).unwrap() {
        StructureOutcome::Found(j) => Some(j),
        StructureOutcome::NotEven { .. } => None,
    }
}

fn platonic_classification() -> Outcome {
    let mut found = Vec::new();
    for a in 2..=100u32 {
        for b in a..=100 {
            for c in b..=100 {
                if platonic_check([a, b, c]) {
                    found.push([a, b, c]);
                }
            }
        }
    }
    let mut expected: Vec<[u32; 3]> = (2..=100).map(|n| [2, 2, n]).collect();
    expected.extend([[2, 3, 3], [2, 3, 4], [2, 3, 5]]);
    expected.sort();
    check(found == expected, || format!("brute force found {} triples, expected {}", found.len(), expected.len()))?;
    for a in 2..=8u32 {
        for b in a..=8 {
            for c in b..=8 {
                let m = [a, b, c];
                let e = enumerate_triangle_quotient(m, 10_000).map_err(|e| e.to_string())?;
                check(matches!(e, Enumeration::Finite(_)) == platonic_check(m), || {
                    format!("{m:?}: enumeration {e:?} disagrees with the criterion")
                })?;
            }
        }
    }
    Ok(())
}

fn determinant_oracle() -> Outcome {
    for name in corpus::names() {
        let g = group(name);
        for e in 1..g.order() {
            let det = lefschetz_count(&g, e);
            if !det.is_zero() {
                let n = fixed_points(&g, e).map_err(|e| e.to_string())?.cardinality();
                check(n.map(BigInt::from) == Some(det.clone()), || format!("{name} element {e}: {n:?} points, det {det}"))?;
            }
        }
    }
    let g = group("kummer4");
    let n = fixed_points(&g, 1).map_err(|e| e.to_string())?.cardinality();
    check(n == Some(16), || format!("Kummer: {n:?} fixed points"))?;
    let class = classify_action(&g, &structure(&g).unwrap()).map_err(|e| e.to_string())?.class;
    check(class == ActionClass::QuasiFree, || format!("Kummer classified {class:?}"))
}

fn free_action_certification() -> Outcome {
    let g = group("bdf_surface");
    let class = classify_action(&g, &structure(&g).unwrap()).map_err(|e| e.to_string())?.class;
    check(is_torsion_free(&g).0 && class == ActionClass::Free, || format!("bdf_surface: {class:?}"))?;
    let mut compared = 0;
    for name in corpus::names() {
        let g = group(name);
        let tf = is_torsion_free(&g).0;
        if let Some(j) = structure(&g) {
            let free = classify_action(&g, &j).map_err(|e| e.to_string())?.class == ActionClass::Free;
            check(free == tf, || format!("{name}: classify says free={free}, torsion-free={tf}"))?;
            compared += 1;
        }
    }
    check(compared >= 12, || format!("only {compared} even entries compared"))
}

fn identity(r: usize) -> RatMatrix {
    RatMatrix::identity(r)
}

fn evenness_biconditional() -> Outcome {
    let names = corpus::names();
    check(names.len() >= 12, || "corpus too small".into())?;
    let tolerance = BigRational::new(BigInt::one(), BigInt::from(10).pow(30));
    for name in names {
        let g = group(name);
        let even = is_even(&g).map_err(|e| e.to_string())?.even;
        let j = structure(&g);
        check(j.is_some() == even, || format!("{name}: even={even}, structure found={}", j.is_some()))?;
        let Some(j) = j else { continue };
        if j.is_exact() {
            let sq = &j.j * &j.j;
            check((&sq + &identity(g.rank())).is_zero(), || format!("{name}: J^2 != -I"))?;
            for m in g.linear().generator_matrices() {
                let m = small_to_rational_matrix(&m);
                check(&j.j * &m == &m * &j.j, || format!("{name}: J does not commute"))?;
            }
            check(j.square_residual.is_zero() && j.commutator_residual.is_zero(), || format!("{name}: nonzero residual"))?;
        } else {
            check(j.square_residual <= tolerance && j.commutator_residual <= tolerance, || {
                format!("{name}: approximate residuals too large")
            })?;
        }
    }
    check(!is_even(&group("reflection_rank2")).unwrap().even, || "diag(1,-1) reported even".into())?;
    check(is_even(&group("rot4_rank2")).unwrap().even, || "order-4 rotation reported not even".into())
}

fn affine_realization_check() -> Outcome {
    for name in corpus::names() {
        let g = group(name);
        let f = ExtensionCocycle::from_vector_system(&g);
        let u = affine_realization(g.linear(), &f);
        check(realizes(g.linear(), &f, &u), || format!("{name}: averaged system violates the cocycle"))?;
        check(realizations_equivalent(g.linear(), g.vector_system(), &u).is_some(), || {
            format!("{name}: averaged system not equivalent to the input")
        })?;
    }
    let g = group("klein_rank2");
    let zero = vec![vec![BigRational::zero(); 2]; g.order()];
    check(realizations_equivalent(g.linear(), g.vector_system(), &zero).is_none(), || {
        "Klein translation removable".into()
    })
}

fn character_machinery() -> Outcome {
    for (name, order) in [
        ("reflection_rank2", 2),
        ("rot3_rank2", 3),
        ("rot4_rank2", 4),
        ("s3_rank2", 6),
        ("d4_rank2", 8),
        ("q8_rank4", 8),
    ] {
        let g = group(name);
        check(g.order() == order, || format!("{name} has order {}", g.order()))?;
        let t = character_table(g.linear()).map_err(|e| e.to_string())?;
        t.verify_orthogonality().map_err(|e| format!("{name}: {e}"))?;
    }
    let q8 = group("q8_rank4");
    let t = character_table(q8.linear()).unwrap();
    let two = (0..t.len()).find(|&c| t.degree(c) == 2).ok_or("Q8 has no degree-2 character")?;
    check(t.fs_indicator(two) == -1, || format!("FS indicator {}", t.fs_indicator(two)))?;
    for name in corpus::names() {
        let g = group(name);
        let t = character_table(g.linear()).map_err(|e| e.to_string())?;
        let r = real_isotypic_dimensions(g.linear(), &t).map_err(|e| format!("{name}: {e}"))?;
        let total: usize = r.classes.iter().map(|c| c.complex_dim).sum();
        check(total == g.rank(), || format!("{name}: dimensions sum to {total}"))?;
    }
    Ok(())
}

fn orbifold_descriptor_check() -> Outcome {
    let g = group("pseudoref_product");
    let j = structure(&g).unwrap();
    let d = orbifold_descriptor(&g, &j).map_err(|e| e.to_string())?;
    check(!d.divisors.is_empty() && d.divisors.iter().all(|c| c.multiplicity == 2), || "divisor multiplicities".into())?;
    let covered: usize = d.divisors.iter().map(|c| c.components).sum();
    check(covered == 4, || format!("{covered} fixed components covered"))?;
    let f = factorization_report(&g, &j).map_err(|e| e.to_string())?;
    check(f.second_map_identity && f.gpr.len() == g.order(), || "G^pr != G".into())?;
    let g = group("mixed_c2c2");
    let f = factorization_report(&g, &structure(&g).unwrap()).map_err(|e| e.to_string())?;
    check(f.quasi_etale && !f.audit.is_empty(), || "mixed entry is not certified quasi-etale".into())
}

fn teichmuller_components() -> Outcome {
    for (name, n) in [("trivial_rank2", 1), ("trivial_rank4", 2), ("trivial_rank6", 3)] {
        let types = hodge_types(&group(name)).map_err(|e| e.to_string())?;
        let dims: Vec<usize> = types.iter().map(component_dimension).collect();
        check(dims == vec![n * n], || format!("{name}: dimensions {dims:?}"))?;
    }
    let types = hodge_types(&group("rot4_rank2")).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = types.iter().map(component_dimension).collect();
    check(dims == vec![0, 0], || format!("rot4_rank2: dimensions {dims:?}"))?;
    for name in corpus::names() {
        let g = group(name);
        let t = character_table(g.linear()).map_err(|e| e.to_string())?;
        let Ok(types) = hodge_types_with_table(&g, &t) else { continue };
        for (k, ty) in types.iter().enumerate() {
            let omega = sample_omega(g.linear(), &t, ty, k as u64).map_err(|e| format!("{name} type {k}: {e}"))?;
            let measured = tangent_space_dimension(g.linear(), &omega);
            check(measured == component_dimension(ty), || {
                format!("{name} type {k}: oracle {measured}, formula {}", component_dimension(ty))
            })?;
        }
    }
    Ok(())
}

fn serialization_determinism() -> Outcome {
    for name in corpus::names() {
        parse_document::<GroupInput>(corpus::text(name).unwrap(), name).map_err(|e| e.to_string())?;
    }
    let commands = [Command::Verify, Command::Realize, Command::Even, Command::Jstruct, Command::Action, Command::Teich];
    for name in corpus::names() {
        for command in commands {
            let job = Job { command, source: Source::Corpus(name.into()), seed: Some(7), bound: None, precision: None };
            let (Ok(a), Ok(b)) = (run(&job), run(&job)) else { continue };
            let (ja, jb) = (render(&a, Format::Json), render(&b, Format::Json));
            check(ja == jb, || format!("{name} {command:?}: two runs differ"))?;
            let back: Report = serde_json::from_str(&ja).map_err(|e| format!("{name} {command:?}: {e}"))?;
            check(back == a, || format!("{name} {command:?}: report does not round-trip"))?;
        }
    }
    let exe = env!("CARGO_BIN_EXE_quotori");
    for (command, name) in [("action", "mixed_c2c2"), ("jstruct", "bdf_order3"), ("teich", "q8_rank4")] {
        let out = |_| {
            Process::new(exe)
                .args([command, "--corpus", name, "--format", "json", "--seed", "3"])
                .output()
                .map(|o| (o.status.code(), o.stdout))
                .map_err(|e| e.to_string())
        };
        let (a, b) = (out(0)?, out(1)?);
        check(a.0 == Some(0) && a == b, || format!("{command} {name}: binary output differs between runs"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("platonic classification and coset enumeration", platonic_classification),
        ("determinant fixed-point oracle", determinant_oracle),
        ("free-action certification", free_action_certification),
        ("evenness biconditional", evenness_biconditional),
        ("affine realization", affine_realization_check),
        ("character machinery", character_machinery),
        ("orbifold descriptor", orbifold_descriptor_check),
        ("Teichmuller components", teichmuller_components),
        ("serialization determinism", serialization_determinism),
    ];
    let mut failed = 0;
    for (k, (title, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(()) => println!("PASS criterion {}: {title}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {title}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
