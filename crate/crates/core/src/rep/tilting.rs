//! Cluster-tilting objects, their exchange graph, and the induced quivers.
//!
//! A cluster-tilting object is an n-element subset of the fundamental
//! domain with vanishing pairwise Ext^1; enumeration is a backtracking walk
//! over the compatibility relation, followed by an explicit maximality
//! check. Two objects are adjacent when they share all but one summand;
//! every almost complete object must extend in exactly two ways, the graph
//! must be connected, and the complement pairs must be exactly the pairs
//! with one-dimensional Ext^1. Quivers are attached by anchoring the
//! projective tilting object at the base quiver and propagating one
//! mutation per edge, checking consistency on every non-tree edge.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::collections::VecDeque;

use super::cluster::ClusterCategory;
use crate::quiver::Quiver;
use crate::{Error, Result};

/// An n-element rigid subset of the fundamental domain, stored sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ClusterTilting {
    summands: Vec<usize>,
}

impl ClusterTilting {
    pub fn summands(&self) -> &[usize] {
        &self.summands
    }

    pub fn contains(&self, id: usize) -> bool {
        self.summands.binary_search(&id).is_ok()
    }
}

/// All cluster-tilting objects, in lexicographic summand order.
pub fn enumerate_cluster_tilting(cc: &ClusterCategory) -> Result<Vec<ClusterTilting>> {
    let total = cc.domain_size();
    let n = cc.rank();
    for o in 0..total {
        if cc.ext1(o, o) != 0 {
            return Err(Error::InternalInconsistency(format!(
                "domain object {o} has self-extensions"
            )));
        }
    }
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    search(cc, 0, n, &mut chosen, &mut out);

    for cto in &out {
        for o in 0..total {
            if cto.contains(o) {
                continue;
            }
            if cto.summands.iter().all(|&t| cc.ext1(o, t) == 0) {
                return Err(Error::MaximalityViolation(format!(
                    "object {} extends a supposedly maximal rigid set",
                    cc.label(o)
                )));
            }
        }
    }
    Ok(out)
}

fn search(
    cc: &ClusterCategory,
    start: usize,
    n: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<ClusterTilting>,
) {
    if chosen.len() == n {
        out.push(ClusterTilting {
            summands: chosen.clone(),
        });
        return;
    }
    let remaining = n - chosen.len();
    let total = cc.domain_size();
    if start + remaining > total {
        return;
    }
    for o in start..total {
        if chosen.iter().all(|&c| cc.ext1(c, o) == 0) {
            chosen.push(o);
            search(cc, o + 1, n, chosen, out);
            chosen.pop();
        }
    }
}

/// The exchange graph on cluster-tilting objects.
#[derive(Clone, Debug)]
pub struct TiltingGraph {
    /// Edges between indices into the enumerated list, `a < b`.
    pub edges: BTreeSet<(usize, usize)>,
    node_count: usize,
}

impl TiltingGraph {
    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn degree(&self, id: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == id || b == id)
            .count()
    }

    pub fn is_connected(&self) -> bool {
        if self.node_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.node_count];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; self.node_count];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.node_count
    }

    pub fn neighbors(&self, id: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == id {
                    Some(b)
                } else if b == id {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// Build the graph: an edge wherever two objects share n-1 summands.
///
/// Checks that every almost complete object occurring as a subset extends
/// in exactly two ways and that the graph is connected.
pub fn cluster_tilting_graph(
    cc: &ClusterCategory,
    ctos: &[ClusterTilting],
) -> Result<TiltingGraph> {
    let mut by_subset: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for (idx, cto) in ctos.iter().enumerate() {
        for skip in 0..cto.summands.len() {
            let mut subset = cto.summands.clone();
            subset.remove(skip);
            by_subset.entry(subset).or_default().push(idx);
        }
    }
    let mut edges = BTreeSet::new();
    for (subset, members) in &by_subset {
        if members.len() != 2 {
            let names: Vec<String> = subset.iter().map(|&s| cc.label(s)).collect();
            return Err(Error::ComplementCountViolation(format!(
                "almost complete object {{{}}} has {} complements, expected 2",
                names.join(", "),
                members.len()
            )));
        }
        edges.insert((members[0].min(members[1]), members[0].max(members[1])));
    }
    let graph = TiltingGraph {
        edges,
        node_count: ctos.len(),
    };
    if !graph.is_connected() {
        return Err(Error::TheoremViolation(
            "cluster-tilting graph is disconnected".into(),
        ));
    }
    Ok(graph)
}

/// Unordered complement pairs, computed two ways and compared: from the
/// graph edges (symmetric difference of adjacent objects) and as the pairs
/// of objects with one-dimensional Ext^1.
pub fn exchange_pairs(
    cc: &ClusterCategory,
    ctos: &[ClusterTilting],
    graph: &TiltingGraph,
) -> Result<BTreeSet<(usize, usize)>> {
    let mut from_graph = BTreeSet::new();
    for &(a, b) in &graph.edges {
        let sa: BTreeSet<usize> = ctos[a].summands.iter().copied().collect();
        let sb: BTreeSet<usize> = ctos[b].summands.iter().copied().collect();
        let only_a: Vec<usize> = sa.difference(&sb).copied().collect();
        let only_b: Vec<usize> = sb.difference(&sa).copied().collect();
        if only_a.len() != 1 || only_b.len() != 1 {
            return Err(Error::InternalInconsistency(
                "edge endpoints differ in more than one summand".into(),
            ));
        }
        let (m, m2) = (only_a[0].min(only_b[0]), only_a[0].max(only_b[0]));
        from_graph.insert((m, m2));
    }

    let mut from_ext = BTreeSet::new();
    let total = cc.domain_size();
    for a in 0..total {
        for b in (a + 1)..total {
            if cc.ext1(a, b) == 1 {
                from_ext.insert((a, b));
            }
        }
    }

    if from_graph != from_ext {
        return Err(Error::TheoremViolation(format!(
            "complement pairs and one-dimensional Ext pairs disagree: {} vs {}",
            from_graph.len(),
            from_ext.len()
        )));
    }
    Ok(from_ext)
}

/// Quiver attached to each cluster-tilting object, by mutation propagation
/// from the projective object. Returns, per object, a summand ordering and
/// the quiver labeled by that ordering.
pub fn tilting_seed_quivers(
    cc: &ClusterCategory,
    ctos: &[ClusterTilting],
    graph: &TiltingGraph,
) -> Result<Vec<(Vec<usize>, Quiver)>> {
    let n = cc.rank();
    let projectives: Vec<usize> = (0..n).map(|v| cc.projective_id(v)).collect();
    let mut sorted_proj = projectives.clone();
    sorted_proj.sort_unstable();
    let start = ctos
        .iter()
        .position(|c| c.summands == sorted_proj)
        .ok_or_else(|| {
            Error::InternalInconsistency(
                "the projective cluster-tilting object is missing".into(),
            )
        })?;

    let mut assigned: Vec<Option<(Vec<usize>, Quiver)>> = vec![None; ctos.len()];
    assigned[start] = Some((projectives, cc.quiver().clone()));
    let mut queue = VecDeque::from([start]);
    while let Some(cur) = queue.pop_front() {
        let (cur_order, cur_quiver) = assigned[cur].clone().unwrap();
        for nb in graph.neighbors(cur) {
            let sa: BTreeSet<usize> = ctos[cur].summands.iter().copied().collect();
            let sb: BTreeSet<usize> = ctos[nb].summands.iter().copied().collect();
            let leaving = *sa.difference(&sb).next().unwrap();
            let entering = *sb.difference(&sa).next().unwrap();
            let k = cur_order
                .iter()
                .position(|&s| s == leaving)
                .expect("orders track summand sets");
            let mut nb_order = cur_order.clone();
            nb_order[k] = entering;
            let nb_quiver = cur_quiver.mutate(k);
            match &assigned[nb] {
                None => {
                    assigned[nb] = Some((nb_order, nb_quiver));
                    queue.push_back(nb);
                }
                Some((stored_order, stored_quiver)) => {
                    // identify summands: position p of nb_order sits at
                    // sigma(p) in the stored order
                    let sigma: Vec<usize> = nb_order
                        .iter()
                        .map(|s| {
                            stored_order
                                .iter()
                                .position(|t| t == s)
                                .expect("same summand set")
                        })
                        .collect();
                    if &nb_quiver.permuted(&sigma) != stored_quiver {
                        return Err(Error::CycleInconsistency(format!(
                            "object {nb} received conflicting quivers along two paths"
                        )));
                    }
                }
            }
        }
    }
    assigned
        .into_iter()
        .enumerate()
        .map(|(i, a)| {
            a.ok_or_else(|| {
                Error::InternalInconsistency(format!("object {i} unreached by propagation"))
            })
        })
        .collect()
}

/// Selfinjectivity test for the endomorphism algebra: the double translate
/// must fix the summand set.
pub fn check_selfinjective(cc: &ClusterCategory, cto: &ClusterTilting) -> bool {
    let mut image: Vec<usize> = cto
        .summands
        .iter()
        .map(|&s| cc.tau(cc.tau(s)))
        .collect();
    image.sort_unstable();
    image == cto.summands
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::cluster::CcObject;

    fn cc_a3() -> ClusterCategory {
        ClusterCategory::new(&Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap()).unwrap()
    }

    fn cc_a2() -> ClusterCategory {
        ClusterCategory::new(&Quiver::from_arrows(2, &[(0, 1)]).unwrap()).unwrap()
    }

    #[test]
    fn fourteen_tilting_objects_for_the_path() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        assert_eq!(ctos.len(), 14);

        let projectives: Vec<usize> = {
            let mut v: Vec<usize> = (0..3).map(|i| cc.projective_id(i)).collect();
            v.sort_unstable();
            v
        };
        assert!(ctos.iter().any(|c| c.summands == projectives));
        let shifted: Vec<usize> = (0..3)
            .map(|i| cc.id(CcObject::ShiftedProjective(i)))
            .collect();
        assert!(ctos.iter().any(|c| c.summands == shifted));
    }

    #[test]
    fn brute_force_subsets_agree() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        // independent check over all C(9,3) = 84 subsets
        let mut count = 0;
        let total = cc.domain_size();
        for a in 0..total {
            for b in (a + 1)..total {
                for c in (b + 1)..total {
                    if cc.ext1(a, b) == 0 && cc.ext1(a, c) == 0 && cc.ext1(b, c) == 0 {
                        count += 1;
                        assert!(ctos.iter().any(|t| t.summands == vec![a, b, c]));
                    }
                }
            }
        }
        assert_eq!(count, 14);
    }

    #[test]
    fn five_objects_in_rank_two() {
        let cc = cc_a2();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        assert_eq!(ctos.len(), 5);
        let graph = cluster_tilting_graph(&cc, &ctos).unwrap();
        assert_eq!(graph.edges.len(), 5);
        for id in 0..5 {
            assert_eq!(graph.degree(id), 2);
        }
        assert!(graph.is_connected());
    }

    #[test]
    fn rank_one_graph_is_a_single_edge() {
        let cc = ClusterCategory::new(&Quiver::point()).unwrap();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        assert_eq!(ctos.len(), 2);
        let graph = cluster_tilting_graph(&cc, &ctos).unwrap();
        assert_eq!(graph.edges.len(), 1);
        assert!(graph.is_connected());
    }

    #[test]
    fn path_graph_is_three_regular_and_connected() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        let graph = cluster_tilting_graph(&cc, &ctos).unwrap();
        assert_eq!(graph.node_count(), 14);
        assert_eq!(graph.edges.len(), 21);
        for id in 0..14 {
            assert_eq!(graph.degree(id), 3);
        }
        assert!(graph.is_connected());
    }

    #[test]
    fn exchange_pairs_match_unit_ext() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        let graph = cluster_tilting_graph(&cc, &ctos).unwrap();
        let pairs = exchange_pairs(&cc, &ctos, &graph).unwrap();

        let p2 = cc.projective_id(1);
        let s1 = cc.ar_quiver().find_by_dims(&[1, 0, 0]).unwrap();
        assert!(pairs.contains(&(p2.min(s1), p2.max(s1))));

        let p3 = cc.projective_id(2);
        let sp3 = cc.id(CcObject::ShiftedProjective(2));
        assert!(pairs.contains(&(p3.min(sp3), p3.max(sp3))));

        let s2 = cc.ar_quiver().find_by_dims(&[0, 1, 0]).unwrap();
        assert!(pairs.contains(&(s1.min(s2), s1.max(s2))));
    }

    #[test]
    fn quivers_propagate_consistently() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        let graph = cluster_tilting_graph(&cc, &ctos).unwrap();
        let seeds = tilting_seed_quivers(&cc, &ctos, &graph).unwrap();
        assert_eq!(seeds.len(), 14);

        // the object P1[1] + P2 + P3 carries the once-mutated base quiver
        let sp1 = cc.id(CcObject::ShiftedProjective(0));
        let p2 = cc.projective_id(1);
        let p3 = cc.projective_id(2);
        let mut want = vec![sp1, p2, p3];
        want.sort_unstable();
        let idx = ctos.iter().position(|c| c.summands == want).unwrap();
        let (order, quiver) = &seeds[idx];
        // align to the reference order (P1[1], P2, P3)
        let reference = [sp1, p2, p3];
        let sigma: Vec<usize> = order
            .iter()
            .map(|s| reference.iter().position(|t| t == s).unwrap())
            .collect();
        let aligned = quiver.permuted(&sigma);
        assert_eq!(
            aligned,
            Quiver::from_arrows(3, &[(1, 0), (1, 2)]).unwrap()
        );

        // no loops or 2-cycles can appear, and the quiver set is the
        // mutation class of the base quiver
        let class = crate::exchange::enumerate_quiver_class(
            cc.quiver(),
            &crate::exchange::Limits::default(),
        );
        let mut produced: BTreeSet<Vec<u8>> = BTreeSet::new();
        for (_, q) in &seeds {
            produced.insert(q.canonical_key());
        }
        let expected: BTreeSet<Vec<u8>> =
            class.quivers().map(|q| q.canonical_key()).collect();
        assert_eq!(produced, expected);
    }

    #[test]
    fn selfinjectivity_checks() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        let projectives: Vec<usize> = {
            let mut v: Vec<usize> = (0..3).map(|i| cc.projective_id(i)).collect();
            v.sort_unstable();
            v
        };
        let proj_cto = ctos.iter().find(|c| c.summands == projectives).unwrap();
        assert!(!check_selfinjective(&cc, proj_cto));

        let cc1 = ClusterCategory::new(&Quiver::point()).unwrap();
        let ctos1 = enumerate_cluster_tilting(&cc1).unwrap();
        for cto in &ctos1 {
            // the two-object domain has tau of order two, so tau^2 is the identity
            assert!(check_selfinjective(&cc1, cto));
        }
    }

    #[test]
    fn selfinjectivity_is_translation_invariant() {
        let cc = cc_a3();
        let ctos = enumerate_cluster_tilting(&cc).unwrap();
        for cto in &ctos {
            let mut translated: Vec<usize> =
                cto.summands().iter().map(|&s| cc.tau(s)).collect();
            translated.sort_unstable();
            let image = ctos
                .iter()
                .find(|c| c.summands == translated)
                .expect("the translate of a tilting object is tilting");
            assert_eq!(
                check_selfinjective(&cc, cto),
                check_selfinjective(&cc, image)
            );
        }
    }
}
