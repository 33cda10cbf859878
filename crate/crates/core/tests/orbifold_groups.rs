//! The Platonic criterion against coset enumeration, and the orders of
//! loop generators in groups built from quotient descriptors.

use quotori::corpus;
use quotori::crystal::normalize_action;
use quotori::groupcore::DEFAULT_ORDER_BOUND;
use quotori::hodge::{invariant_complex_structure, StructureOptions, StructureOutcome};
use quotori::orbpi::{enumerate_triangle_quotient, platonic_check, platonic_report, Enumeration};
use quotori::quotient::orbifold_descriptor;

#[test]
fn enumeration_agrees_with_the_platonic_criterion() {
    for a in 2..=8u32 {
        for b in a..=8 {
            for c in b..=8 {
                let m = [a, b, c];
                let e = enumerate_triangle_quotient(m, 10_000).unwrap();
                assert_eq!(e.order().is_some(), platonic_check(m), "{m:?}");
                if let Enumeration::Finite(order) = e {
                    assert_eq!(Some(order as u64), platonic_report(m).unwrap().expected_order, "{m:?}");
                }
            }
        }
    }
}

#[test]
fn platonic_triples_up_to_one_hundred() {
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
    found.sort();
    assert_eq!(found, expected);
}

#[test]
fn loop_generators_have_the_declared_order() {
    for name in ["pseudoref_product", "pseudoref_order3", "mixed_c2c2", "rot4_rank2", "rot6_rank2"] {
        let input = corpus::load(name).unwrap();
        let g = normalize_action(&input.crystal_data().unwrap(), DEFAULT_ORDER_BOUND).unwrap().group;
        let StructureOutcome::Found(j) = invariant_complex_structure(&g, &StructureOptions::default()).unwrap() else {
            panic!("{name} is even");
        };
        let d = orbifold_descriptor(&g, &j).unwrap();
        assert!(!d.divisors.is_empty(), "{name}");
        for div in &d.divisors {
            let l = g.linear_part(div.generator);
            let mut p = l.clone();
            let mut order = 1;
            while !p.is_identity() {
                p = &p * l;
                order += 1;
            }
            assert_eq!(order, div.multiplicity, "{name}");
        }
    }
}

#[test]
fn rotation_divisors_on_elliptic_curves() {
    // fixed points of the rotations of order 4 and 6 with their stabilizers:
    // order 4: two points with stabilizer 4, one orbit of two points with 2
    // order 6: one point with 6, one orbit of two with 3, one orbit of three with 2
    let mults = |name: &str| {
        let input = corpus::load(name).unwrap();
        let g = normalize_action(&input.crystal_data().unwrap(), DEFAULT_ORDER_BOUND).unwrap().group;
        let StructureOutcome::Found(j) = invariant_complex_structure(&g, &StructureOptions::default()).unwrap() else {
            panic!("{name} is even");
        };
        let mut v: Vec<(usize, usize)> =
            orbifold_descriptor(&g, &j).unwrap().divisors.iter().map(|d| (d.multiplicity, d.components)).collect();
        v.sort();
        v
    };
    assert_eq!(mults("rot4_rank2"), vec![(2, 2), (4, 1), (4, 1)]);
    assert_eq!(mults("rot6_rank2"), vec![(2, 3), (3, 2), (6, 1)]);
    assert_eq!(mults("rot3_rank2"), vec![(3, 1), (3, 1), (3, 1)]);
}
