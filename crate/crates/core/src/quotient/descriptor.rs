//! Orbifold data of `X = T / G`: branch divisors with their multiplicities
//! and a histogram of the remaining singular strata.
//!
//! Components of fixed loci are compared through their canonical
//! [`ComponentKey`](super::ComponentKey); `G` permutes them, and the orbits
//! are the corresponding strata of `X`. The multiplicity attached to a
//! divisor is the order of its pointwise stabilizer, which is cyclic (a
//! finite group acting faithfully on the complex normal line).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::fixed::{ComponentKey, FixedComponent};
use super::{all_fixed_loci, complex_fixed_loci, ActionClass, QuotientError};
use crate::crystal::CrystGroup;
use crate::exactla::serde_exact;
use crate::hodge::ComplexStructure;

/// A branch divisor of `X`: one `G`-orbit of codimension-one fixed components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorClass {
    /// Lattice spanning the tangent directions of the representative component.
    #[serde(with = "serde_exact::int_vecs")]
    pub kernel: Vec<Vec<BigInt>>,
    /// A point of the representative component.
    #[serde(with = "serde_exact::rational_vec")]
    pub base: Vec<BigRational>,
    /// Number of components of `T` in the orbit.
    pub components: usize,
    /// Order of the pointwise stabilizer.
    pub multiplicity: usize,
    /// Element indices of the pointwise stabilizer.
    pub stabilizer: Vec<usize>,
    /// A generator of the (cyclic) stabilizer.
    pub generator: usize,
}

/// Fixed components of complex codimension `≥ 2`, grouped by codimension
/// and pointwise-stabilizer order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumCount {
    pub complex_codimension: usize,
    pub stabilizer_order: usize,
    /// Components on `T`.
    pub components: usize,
    /// Their images on `X`.
    pub orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbifoldDescriptor {
    pub class: ActionClass,
    pub divisors: Vec<DivisorClass>,
    pub strata: Vec<StratumCount>,
}

fn stabilizer(group: &CrystGroup, c: &FixedComponent) -> Vec<usize> {
    (0..group.order()).filter(|&h| c.fixed_pointwise_by(group, h)).collect()
}

/// Splits `components` into `G`-orbits, each listed from its smallest key.
fn orbits(group: &CrystGroup, components: &BTreeMap<ComponentKey, FixedComponent>) -> Vec<Vec<ComponentKey>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (key, comp) in components {
        if seen.contains(key) {
            continue;
        }
        let orbit: BTreeSet<ComponentKey> = (0..group.order()).map(|h| comp.image(group, h).key).collect();
        debug_assert!(orbit.iter().all(|k| components.contains_key(k)), "fixed-locus union is not G-stable");
        seen.extend(orbit.iter().cloned());
        out.push(orbit.into_iter().collect());
    }
    out
}

pub fn orbifold_descriptor(group: &CrystGroup, j: &ComplexStructure) -> Result<OrbifoldDescriptor, QuotientError> {
    let loci = complex_fixed_loci(group, j)?;
    let mut by_codim: BTreeMap<usize, BTreeMap<ComponentKey, FixedComponent>> = BTreeMap::new();
    for f in &loci {
        if let Some(codim) = f.complex_codimension() {
            let slot = by_codim.entry(codim).or_default();
            for c in f.components() {
                slot.entry(c.key.clone()).or_insert(c);
            }
        }
    }
    let class = match by_codim.keys().next() {
        None => ActionClass::Free,
        Some(&c) if c >= 2 => ActionClass::QuasiFree,
        Some(_) => ActionClass::Divisorial,
    };

    let mut divisors = Vec::new();
    let mut strata = Vec::new();
    for (&codim, components) in &by_codim {
        let mut histogram: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
        for orbit in orbits(group, components) {
            let rep = &components[&orbit[0]];
            let stab = stabilizer(group, rep);
            if codim == 1 {
                let generator = stab.iter().copied().find(|&h| group.linear().element_order(h) == stab.len());
                let generator = generator.expect("pointwise stabilizer of a divisor is cyclic");
                if stab.len() >= 2 {
                    divisors.push(DivisorClass {
                        kernel: rep.key.kernel.clone(),
                        base: rep.base.clone(),
                        components: orbit.len(),
                        multiplicity: stab.len(),
                        stabilizer: stab,
                        generator,
                    });
                }
            } else {
                let e = histogram.entry(stab.len()).or_default();
                e.0 += orbit.len();
                e.1 += 1;
            }
        }
        strata.extend(histogram.into_iter().map(|(order, (components, orbits))| StratumCount {
            complex_codimension: codim,
            stabilizer_order: order,
            components,
            orbits,
        }));
    }
    Ok(OrbifoldDescriptor { class, divisors, strata })
}

/// Every fixed component of every nontrivial element, by canonical key.
pub fn fixed_components(group: &CrystGroup) -> Result<BTreeMap<ComponentKey, FixedComponent>, QuotientError> {
    Ok(all_fixed_loci(group)?.iter().flat_map(|f| f.components()).map(|c| (c.key.clone(), c)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{verify_crystallographic, AffineMap, CrystData};
    use crate::exactla::rational::{rat, ratio};
    use crate::exactla::Matrix;
    use crate::hodge::{invariant_complex_structure, StructureOptions, StructureOutcome};

    fn group(gens: Vec<(Vec<i64>, Vec<BigRational>)>) -> CrystGroup {
        let gens = gens.into_iter().map(|(d, u)| AffineMap::new(Matrix::from_diagonal(&d), u)).collect();
        verify_crystallographic(&CrystData::new(4, gens), 64).unwrap()
    }

    fn descriptor(g: &CrystGroup) -> OrbifoldDescriptor {
        let j = match invariant_complex_structure(g, &StructureOptions::default()).unwrap() {
            StructureOutcome::Found(j) => j,
            other => panic!("no structure: {other:?}"),
        };
        orbifold_descriptor(g, &j).unwrap()
    }

    #[test]
    fn product_reflection_has_four_divisors_of_multiplicity_two() {
        let d = descriptor(&group(vec![(vec![1, 1, -1, -1], vec![rat(0); 4])]));
        assert_eq!(d.class, ActionClass::Divisorial);
        assert_eq!(d.divisors.len(), 4);
        assert!(d.divisors.iter().all(|c| c.multiplicity == 2 && c.components == 1));
        assert!(d.strata.is_empty());
    }

    #[test]
    fn quasi_free_partner_pairs_up_the_divisors() {
        // -I with translation (0,0,1/2,0) maps the curve through (0,0,a,b)
        // to the one through (0,0,a+1/2,b)
        let d = descriptor(&group(vec![
            (vec![1, 1, -1, -1], vec![rat(0); 4]),
            (vec![-1; 4], vec![rat(0), rat(0), ratio(1, 2), rat(0)]),
        ]));
        assert_eq!(d.class, ActionClass::Divisorial);
        assert_eq!(d.divisors.len(), 2);
        assert!(d.divisors.iter().all(|c| c.multiplicity == 2 && c.components == 2));
        assert_eq!(d.strata, vec![StratumCount { complex_codimension: 2, stabilizer_order: 2, components: 16, orbits: 8 }]);
    }

    #[test]
    fn kummer_has_sixteen_isolated_points() {
        let d = descriptor(&group(vec![(vec![-1; 4], vec![rat(0); 4])]));
        assert_eq!(d.class, ActionClass::QuasiFree);
        assert!(d.divisors.is_empty());
        assert_eq!(d.strata, vec![StratumCount { complex_codimension: 2, stabilizer_order: 2, components: 16, orbits: 16 }]);
    }

    #[test]
    fn free_action_has_empty_descriptor() {
        let d = descriptor(&group(vec![(vec![1, 1, -1, -1], vec![ratio(1, 2), rat(0), rat(0), rat(0)])]));
        assert_eq!(d.class, ActionClass::Free);
        assert!(d.divisors.is_empty() && d.strata.is_empty());
    }
}
