//! The denominator correspondence: cluster variables of a Dynkin quiver
//! match the indecomposables of its cluster category, the denominator
//! vector of a non-initial variable being the dimension vector of a module
//! and each initial variable going to a shifted projective.

use std::collections::BTreeMap;

use super::cluster::{CcObject, ClusterCategory};
use crate::exchange::ExchangeGraph;
use crate::laurent::ReducedFraction;
use crate::{Error, Result};

/// Map every cluster variable of a complete exchange graph to an object of
/// the fundamental domain and verify the assignment is a bijection.
pub fn denominator_correspondence(
    graph: &ExchangeGraph,
    cc: &ClusterCategory,
) -> Result<BTreeMap<ReducedFraction, usize>> {
    if !graph.is_complete() {
        return Err(Error::GraphIncomplete);
    }
    let variables = graph.cluster_variables()?;
    let mut out: BTreeMap<ReducedFraction, usize> = BTreeMap::new();
    let mut hit = vec![false; cc.domain_size()];
    for rf in variables {
        let den = rf.denominator().as_slice();
        let id = if den.iter().all(|&d| d == 0) {
            // an initial variable: a single monomial x_i
            let vertex = initial_vertex(&rf).ok_or_else(|| Error::NoMatchingModule {
                denominator: den.to_vec(),
            })?;
            cc.id(CcObject::ShiftedProjective(vertex))
        } else {
            let dims: Vec<usize> = den
                .iter()
                .map(|&d| {
                    usize::try_from(d).map_err(|_| Error::NoMatchingModule {
                        denominator: den.to_vec(),
                    })
                })
                .collect::<Result<_>>()?;
            cc.ar_quiver()
                .find_by_dims(&dims)
                .ok_or_else(|| Error::NoMatchingModule {
                    denominator: den.to_vec(),
                })?
        };
        if hit[id] {
            return Err(Error::NotBijective(format!(
                "object {} matched twice",
                cc.label(id)
            )));
        }
        hit[id] = true;
        out.insert(rf, id);
    }
    if let Some(missed) = hit.iter().position(|&h| !h) {
        return Err(Error::NotBijective(format!(
            "object {} is not the image of any cluster variable",
            cc.label(missed)
        )));
    }
    Ok(out)
}

fn initial_vertex(rf: &ReducedFraction) -> Option<usize> {
    let num = rf.numerator();
    if num.num_terms() != 1 {
        return None;
    }
    let (exps, coeff) = num.terms().next().unwrap();
    if coeff != &num_bigint::BigInt::from(1) {
        return None;
    }
    let slice = exps.as_slice();
    let vertex = slice.iter().position(|&e| e == 1)?;
    slice
        .iter()
        .enumerate()
        .all(|(i, &e)| if i == vertex { e == 1 } else { e == 0 })
        .then_some(vertex)
}

/// The image of one cluster (a graph node) under the correspondence,
/// as a sorted list of object ids.
pub fn cluster_image(
    map: &BTreeMap<ReducedFraction, usize>,
    seed: &crate::seed::Seed,
) -> Result<Vec<usize>> {
    let mut ids = Vec::with_capacity(seed.rank());
    for entry in seed.cluster() {
        let rf = entry.reduced_form()?;
        let id = map.get(&rf).ok_or_else(|| Error::NoMatchingModule {
            denominator: rf.denominator().as_slice().to_vec(),
        })?;
        ids.push(*id);
    }
    ids.sort_unstable();
    Ok(ids)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exchange::{enumerate_seeds, Limits};
    use crate::laurent::LaurentPoly;
    use crate::quiver::Quiver;
    use crate::rep::tilting::enumerate_cluster_tilting;

    fn setup_a3() -> (ExchangeGraph, ClusterCategory) {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let g = enumerate_seeds(&q, &Limits::default()).unwrap();
        let cc = ClusterCategory::new(&q).unwrap();
        (g, cc)
    }

    fn rf(num: &str, den: [i64; 3]) -> ReducedFraction {
        ReducedFraction::new(LaurentPoly::parse(num, 3).unwrap(), den.to_vec())
    }

    #[test]
    fn spot_values_for_the_path() {
        let (g, cc) = setup_a3();
        let map = denominator_correspondence(&g, &cc).unwrap();
        assert_eq!(map.len(), 9);

        let s1 = cc.ar_quiver().find_by_dims(&[1, 0, 0]).unwrap();
        assert_eq!(map.get(&rf("1 + x2", [1, 0, 0])), Some(&s1));

        let p1 = cc.ar_quiver().find_by_dims(&[1, 1, 1]).unwrap();
        assert_eq!(
            map.get(&rf("x1 + x1 x2 + x3 + x2 x3", [1, 1, 1])),
            Some(&p1)
        );

        let sp2 = cc.id(CcObject::ShiftedProjective(1));
        assert_eq!(map.get(&rf("x2", [0, 0, 0])), Some(&sp2));
    }

    #[test]
    fn clusters_map_onto_tilting_objects() {
        let (g, cc) = setup_a3();
        let map = denominator_correspondence(&g, &cc).unwrap();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for (_, _, seed) in g.nodes() {
            let image = cluster_image(&map, seed).unwrap();
            assert!(
                ctos.iter().any(|c| c.summands() == image.as_slice()),
                "cluster image {image:?} is not cluster-tilting"
            );
            images.insert(image);
        }
        assert_eq!(images.len(), ctos.len());
    }

    #[test]
    fn incomplete_graphs_are_rejected() {
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let g = enumerate_seeds(&q, &Limits::default().with_max_nodes(3)).unwrap();
        let cc = ClusterCategory::new(&q).unwrap();
        assert!(matches!(
            denominator_correspondence(&g, &cc),
            Err(Error::GraphIncomplete)
        ));
    }
}
