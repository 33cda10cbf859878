//! Cross-module checks over every bundled input.

use num_bigint::BigInt;
use num_traits::Zero;
use quotori::corpus;
use quotori::crystal::{
    affine_realization, is_torsion_free, normalize_action, realizations_equivalent, realizes, CrystGroup,
    ExtensionCocycle,
};
use quotori::exactla::rational::small_to_int_matrix;
use quotori::groupcore::{character_table, real_isotypic_dimensions, DEFAULT_ORDER_BOUND};
use quotori::hodge::numeric::{omega_character_multiplicities, sample_omega, tangent_space_dimension};
use quotori::hodge::{
    component_dimension, default_tolerance, hodge_types_with_table, invariant_complex_structure, is_even,
    ComplexStructure, StructureOptions, StructureOutcome,
};
use quotori::quotient::{
    all_fixed_loci, classify_action, fixed_components, fixed_points, lefschetz_count, orbifold_descriptor,
    ActionClass,
};

fn group(name: &str) -> CrystGroup {
    let input = corpus::load(name).unwrap();
    normalize_action(&input.crystal_data().unwrap(), DEFAULT_ORDER_BOUND).unwrap().group
}

fn structure(g: &CrystGroup) -> Option<ComplexStructure> {
    match invariant_complex_structure(g, &StructureOptions::default()).unwrap() {
        StructureOutcome::Found(j) => Some(j),
        StructureOutcome::NotEven { .. } => None,
    }
}

/// (name, even, acts freely, classification when even)
const EXPECTED: &[(&str, bool, bool, Option<ActionClass>)] = &[
    ("bdf_order3", true, true, Some(ActionClass::Free)),
    ("bdf_surface", true, true, Some(ActionClass::Free)),
    ("d4_rank2", false, false, None),
    ("klein_rank2", false, true, None),
    ("kummer4", true, false, Some(ActionClass::QuasiFree)),
    ("mixed_c2c2", true, false, Some(ActionClass::Divisorial)),
    ("neg_identity_rank2", true, false, Some(ActionClass::Divisorial)),
    ("pseudoref_order3", true, false, Some(ActionClass::Divisorial)),
    ("pseudoref_product", true, false, Some(ActionClass::Divisorial)),
    ("pure_translation_rank2", true, true, Some(ActionClass::Free)),
    ("q8_rank4", true, false, Some(ActionClass::QuasiFree)),
    ("rank3_c2", false, false, None),
    ("reflection_rank2", false, false, None),
    ("rot3_rank2", true, false, Some(ActionClass::Divisorial)),
    ("rot3_rank4", true, false, Some(ActionClass::QuasiFree)),
    ("rot4_rank2", true, false, Some(ActionClass::Divisorial)),
    ("rot6_rank2", true, false, Some(ActionClass::Divisorial)),
    ("s3_rank2", false, false, None),
    ("trivial_rank2", true, true, Some(ActionClass::Free)),
    ("trivial_rank4", true, true, Some(ActionClass::Free)),
    ("trivial_rank6", true, true, Some(ActionClass::Free)),
];

#[test]
fn expectation_table_covers_the_corpus() {
    let names: Vec<&str> = EXPECTED.iter().map(|e| e.0).collect();
    assert_eq!(names, corpus::names());
}

#[test]
fn evenness_freeness_and_classification() {
    for &(name, even, free, class) in EXPECTED {
        let g = group(name);
        assert_eq!(is_even(&g).unwrap().even, even, "{name}");
        let (tf, _) = is_torsion_free(&g);
        assert_eq!(tf, free, "{name}");
        let loci = all_fixed_loci(&g).unwrap();
        assert_eq!(loci.iter().all(|f| f.is_empty()), tf, "{name}");
        match structure(&g) {
            Some(j) => {
                assert!(even, "{name}");
                let report = classify_action(&g, &j).unwrap();
                assert_eq!(Some(report.class), class, "{name}");
                assert_eq!(report.class == ActionClass::Free, tf, "{name}");
            }
            None => assert!(!even, "{name}"),
        }
    }
}

#[test]
fn structures_are_certified() {
    let tol = default_tolerance();
    for name in corpus::names() {
        let g = group(name);
        if let Some(j) = structure(&g) {
            assert!(j.commutator_residual.is_zero(), "{name}");
            if j.is_exact() {
                assert!(j.square_residual.is_zero(), "{name}");
            } else {
                assert!(j.square_residual <= tol, "{name}");
            }
        }
    }
}

#[test]
fn fixed_point_counts_match_determinants() {
    for name in corpus::names() {
        let g = group(name);
        for e in 1..g.order() {
            let det = lefschetz_count(&g, e);
            if !det.is_zero() {
                let f = fixed_points(&g, e).unwrap();
                assert_eq!(BigInt::from(f.cardinality().unwrap()), det, "{name} element {e}");
            }
        }
    }
}

#[test]
fn fixed_loci_are_conjugation_equivariant_and_g_stable() {
    for name in corpus::names() {
        let g = group(name);
        let lin = g.linear();
        for e in 1..g.order() {
            let comps = fixed_points(&g, e).unwrap().components();
            for h in 0..g.order() {
                let conj = lin.mul(lin.mul(h, e), lin.inv(h));
                let mut moved: Vec<_> = comps.iter().map(|c| c.image(&g, h).key).collect();
                let mut direct: Vec<_> = fixed_points(&g, conj).unwrap().components().into_iter().map(|c| c.key).collect();
                moved.sort();
                direct.sort();
                assert_eq!(moved, direct, "{name}: element {e} conjugated by {h}");
            }
        }
        let comps = fixed_components(&g).unwrap();
        for c in comps.values() {
            for h in 0..g.order() {
                assert!(comps.contains_key(&c.image(&g, h).key), "{name}");
            }
        }
    }
}

#[test]
fn divisor_multiplicities_are_orders_of_cyclic_stabilizers() {
    for name in corpus::names() {
        let g = group(name);
        let Some(j) = structure(&g) else { continue };
        let d = orbifold_descriptor(&g, &j).unwrap();
        for c in &d.divisors {
            assert!(c.multiplicity >= 2, "{name}");
            assert_eq!(g.linear().element_order(c.generator), c.multiplicity, "{name}");
            assert_eq!(c.stabilizer.len(), c.multiplicity, "{name}");
        }
        if d.class == ActionClass::Free {
            assert!(d.divisors.is_empty() && d.strata.is_empty(), "{name}");
        }
    }
}

#[test]
fn averaged_realizations_are_equivalent_to_the_input() {
    for name in corpus::names() {
        let g = group(name);
        let f = ExtensionCocycle::from_vector_system(&g);
        let u = affine_realization(g.linear(), &f);
        assert!(realizes(g.linear(), &f, &u), "{name}");
        assert!(realizes(g.linear(), &f, g.vector_system()) || g.order() == 1, "{name}");
        assert!(realizations_equivalent(g.linear(), g.vector_system(), &u).is_some(), "{name}");
    }
}

#[test]
fn klein_translation_is_essential() {
    let g = group("klein_rank2");
    let zero = vec![vec![num_rational::BigRational::zero(); 2]; g.order()];
    assert!(realizations_equivalent(g.linear(), g.vector_system(), &zero).is_none());
    let g = group("bdf_surface");
    // the linear part has a fixed direction, so the same holds here
    let zero = vec![vec![num_rational::BigRational::zero(); 4]; g.order()];
    assert!(realizations_equivalent(g.linear(), g.vector_system(), &zero).is_none());
}

#[test]
fn isotypic_dimensions_sum_to_the_rank() {
    for name in corpus::names() {
        let g = group(name);
        let t = character_table(g.linear()).unwrap();
        t.verify_orthogonality().unwrap();
        let r = real_isotypic_dimensions(g.linear(), &t).unwrap();
        assert_eq!(r.classes.iter().map(|c| c.complex_dim).sum::<usize>(), g.rank(), "{name}");
    }
}

#[test]
fn component_dimensions_match_the_tangent_oracle() {
    for name in corpus::names() {
        let g = group(name);
        let t = character_table(g.linear()).unwrap();
        let Ok(types) = hodge_types_with_table(&g, &t) else { continue };
        for (k, ty) in types.iter().enumerate() {
            let omega = sample_omega(g.linear(), &t, ty, k as u64).unwrap_or_else(|e| panic!("{name} type {k}: {e}"));
            assert_eq!(tangent_space_dimension(g.linear(), &omega), component_dimension(ty), "{name} type {k}");
            assert_eq!(omega_character_multiplicities(g.linear(), &t, &omega), ty.character_multiplicities(t.len()));
        }
    }
}

#[test]
fn linear_parts_are_integral_and_unimodular() {
    for name in corpus::names() {
        let g = group(name);
        for e in 0..g.order() {
            let d = quotori::exactla::abs_det(&small_to_int_matrix(g.linear_part(e)));
            assert_eq!(d, BigInt::from(1), "{name}");
        }
    }
}
