//! The cluster-category combinatorics of an acyclic Dynkin quiver.
//!
//! The fundamental domain consists of the module-category indecomposables
//! together with one shifted projective per vertex. Ext dimensions between
//! domain objects come from the module-category Ext in both directions;
//! against a shifted projective they reduce to a Hom space, which is just a
//! dimension-vector entry. The translation extends to a permutation of the
//! whole domain.

use std::collections::BTreeMap;

use super::ar::{knit_ar_quiver, ArQuiver};
use super::representation::{
    build_indecomposables, ext_dim, hom_dim, projective_by_paths, Representation,
};
use crate::quiver::Quiver;
use crate::{Error, Result};

/// An indecomposable of the cluster category, inside the fundamental domain.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum CcObject {
    /// An indecomposable module, by its AR-quiver index.
    Module(usize),
    /// The shifted projective at a vertex.
    ShiftedProjective(usize),
}

/// Precomputed cluster-category data for one Dynkin quiver.
pub struct ClusterCategory {
    quiver: Quiver,
    ar: ArQuiver,
    reps: Vec<Representation>,
    proj_at: Vec<usize>, // vertex -> AR index of its projective
    inj_at: Vec<usize>,  // vertex -> AR index of its injective
    ext: Vec<Vec<usize>>,
}

impl ClusterCategory {
    /// Knit the AR-quiver, build explicit indecomposables for every object,
    /// verify their endomorphism spaces are one dimensional, and tabulate
    /// all cluster-category Ext dimensions.
    pub fn new(q: &Quiver) -> Result<ClusterCategory> {
        let ar = knit_ar_quiver(q)?;
        let n = q.vertex_count();
        let reps = build_indecomposables(q)?;
        // cross-check the reflection-built projectives against path bases
        for v in 0..n {
            let by_paths = projective_by_paths(q, v)?;
            let idx = ar
                .projective_at(v)
                .ok_or_else(|| Error::InternalInconsistency(format!("no projective at {v}")))?;
            if by_paths.dims() != reps[idx].dims() || hom_dim(&by_paths, &reps[idx])? != 1 {
                return Err(Error::InternalInconsistency(format!(
                    "projective at {v} disagrees with its path-basis model"
                )));
            }
        }

        let proj_at: Vec<usize> = (0..n)
            .map(|v| ar.projective_at(v).expect("checked above"))
            .collect();
        let inj_at: Vec<usize> = (0..n)
            .map(|v| {
                ar.injective_at(v)
                    .ok_or_else(|| Error::InternalInconsistency(format!("no injective at {v}")))
            })
            .collect::<Result<_>>()?;

        let nmod = ar.object_count();
        let total = nmod + n;
        let mut ext = vec![vec![0usize; total]; total];
        for a in 0..nmod {
            for b in 0..nmod {
                if a <= b {
                    let v = ext_dim(&reps[a], &reps[b])? + ext_dim(&reps[b], &reps[a])?;
                    ext[a][b] = v;
                    ext[b][a] = v;
                }
            }
        }
        for (i, row) in ext.iter_mut().enumerate().skip(nmod) {
            let vertex = i - nmod;
            for (m, value) in row.iter_mut().enumerate().take(nmod) {
                *value = reps[m].dims()[vertex];
            }
        }
        for m in 0..nmod {
            for i in nmod..total {
                let v = ext[i][m];
                ext[m][i] = v;
            }
        }
        for m in 0..nmod {
            if ext[m][m] != 0 {
                return Err(Error::InternalInconsistency(format!(
                    "domain object {m} is not rigid"
                )));
            }
        }

        Ok(ClusterCategory {
            quiver: q.clone(),
            ar,
            reps,
            proj_at,
            inj_at,
            ext,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn ar_quiver(&self) -> &ArQuiver {
        &self.ar
    }

    pub fn rank(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn module_count(&self) -> usize {
        self.ar.object_count()
    }

    /// Number of objects in the fundamental domain.
    pub fn domain_size(&self) -> usize {
        self.module_count() + self.rank()
    }

    pub fn representation(&self, module: usize) -> &Representation {
        &self.reps[module]
    }

    /// Dense object ids: modules first (AR order), then shifted projectives.
    pub fn object(&self, id: usize) -> CcObject {
        let nmod = self.module_count();
        if id < nmod {
            CcObject::Module(id)
        } else {
            CcObject::ShiftedProjective(id - nmod)
        }
    }

    pub fn id(&self, o: CcObject) -> usize {
        match o {
            CcObject::Module(m) => {
                assert!(m < self.module_count());
                m
            }
            CcObject::ShiftedProjective(v) => {
                assert!(v < self.rank());
                self.module_count() + v
            }
        }
    }

    pub fn projective_id(&self, vertex: usize) -> usize {
        self.proj_at[vertex]
    }

    pub fn injective_id(&self, vertex: usize) -> usize {
        self.inj_at[vertex]
    }

    /// Cluster-category Ext^1 dimension between domain objects.
    pub fn ext1(&self, a: usize, b: usize) -> usize {
        self.ext[a][b]
    }

    pub fn ext1_cc(&self, a: CcObject, b: CcObject) -> usize {
        self.ext1(self.id(a), self.id(b))
    }

    /// The translation as a permutation of the fundamental domain: a
    /// non-projective module moves to its AR translate, the projective at
    /// `i` to the shifted projective at `i`, and the shifted projective at
    /// `i` to the injective at `i`.
    pub fn tau(&self, id: usize) -> usize {
        let nmod = self.module_count();
        if id < nmod {
            match self.ar.tau(id) {
                Some(t) => t,
                None => {
                    let v = self.ar.object(id).projective.expect("tau-less non-projective");
                    nmod + v
                }
            }
        } else {
            self.inj_at[id - nmod]
        }
    }

    /// Human-readable object names: `P<i>`, `S<i>`, `I<i>`, `M(d1,..)`, or
    /// `P<i>[1]`, all 1-based. Projectives are named `P`, remaining simples
    /// `S`, remaining injectives `I`.
    pub fn label(&self, id: usize) -> String {
        let nmod = self.module_count();
        if id >= nmod {
            return format!("P{}[1]", id - nmod + 1);
        }
        let obj = self.ar.object(id);
        if let Some(v) = obj.projective {
            return format!("P{}", v + 1);
        }
        if obj.dims.iter().sum::<usize>() == 1 {
            let v = obj.dims.iter().position(|&d| d == 1).unwrap();
            return format!("S{}", v + 1);
        }
        if let Some(v) = obj.injective {
            return format!("I{}", v + 1);
        }
        let dims: Vec<String> = obj.dims.iter().map(|d| d.to_string()).collect();
        format!("M({})", dims.join(","))
    }

    /// Resolve a label produced by [`ClusterCategory::label`].
    pub fn resolve_label(&self, label: &str) -> Option<usize> {
        (0..self.domain_size()).find(|&id| self.label(id) == label)
    }

    /// Arrow multiplicities of the AR-quiver of the cluster category on the
    /// whole fundamental domain, including the wrap-around arrows through
    /// the shifted projectives. Derived from the module AR-quiver by the
    /// mesh symmetry `arrows(u -> v) = arrows(tau v -> u)`.
    pub fn cluster_ar_arrows(&self) -> BTreeMap<(usize, usize), usize> {
        let nmod = self.module_count();
        let n = self.rank();
        let mut out: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for (&(s, t), &m) in self.ar.arrows() {
            out.insert((s, t), m);
        }
        for i in 0..n {
            let shift_i = nmod + i;
            // module -> shifted projective
            for x in 0..nmod {
                let m = self.ar.arrow_mult(self.inj_at[i], x);
                if m > 0 {
                    out.insert((x, shift_i), m);
                }
            }
            // shifted projective -> module
            for x in 0..nmod {
                let obj = self.ar.object(x);
                let m = if let Some(j) = obj.projective {
                    self.ar.arrow_mult(self.proj_at[j], self.proj_at[i])
                } else {
                    self.ar.arrow_mult(self.inj_at[i], self.ar.tau(x).unwrap())
                };
                if m > 0 {
                    out.insert((shift_i, x), m);
                }
            }
            // shifted projective -> shifted projective
            for j in 0..n {
                let m = self.ar.arrow_mult(self.proj_at[i], self.proj_at[j]);
                if m > 0 {
                    out.insert((shift_i, nmod + j), m);
                }
            }
        }
        out
    }

    /// The AR-quiver left after dropping the translates of the summands of
    /// a cluster-tilting object: remaining object ids plus the arrows among
    /// them.
    pub fn dropped_ar_quiver(
        &self,
        summands: &[usize],
    ) -> (Vec<usize>, BTreeMap<(usize, usize), usize>) {
        let dropped: Vec<usize> = summands.iter().map(|&s| self.tau(s)).collect();
        let keep: Vec<usize> = (0..self.domain_size())
            .filter(|id| !dropped.contains(id))
            .collect();
        let arrows = self
            .cluster_ar_arrows()
            .into_iter()
            .filter(|((s, t), _)| keep.contains(s) && keep.contains(t))
            .collect();
        (keep, arrows)
    }

    /// DOT rendering of the full cluster-category AR-quiver; objects listed
    /// in `highlight_drop` are rendered dashed-out.
    pub fn cluster_ar_dot(&self, highlight_drop: &[usize]) -> String {
        let mut out = String::from("digraph cluster_ar {\n  rankdir=LR;\n");
        for id in 0..self.domain_size() {
            if highlight_drop.contains(&id) {
                out.push_str(&format!(
                    "  o{id} [label=\"{}\", style=dashed, color=gray];\n",
                    self.label(id)
                ));
            } else {
                out.push_str(&format!("  o{id} [label=\"{}\"];\n", self.label(id)));
            }
        }
        for ((s, t), m) in self.cluster_ar_arrows() {
            for _ in 0..m {
                out.push_str(&format!("  o{s} -> o{t};\n"));
            }
        }
        for id in 0..self.domain_size() {
            out.push_str(&format!(
                "  o{} -> o{id} [style=dashed, constraint=false];\n",
                self.tau(id)
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_path() -> Quiver {
        Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn cc_a3() -> ClusterCategory {
        ClusterCategory::new(&a3_path()).unwrap()
    }

    #[test]
    fn domain_and_labels() {
        let cc = cc_a3();
        assert_eq!(cc.domain_size(), 9);
        let labels: Vec<String> = (0..9).map(|id| cc.label(id)).collect();
        for want in ["P1", "P2", "P3", "S1", "S2", "I2", "P1[1]", "P2[1]", "P3[1]"] {
            assert!(labels.contains(&want.to_string()), "missing {want}");
        }
        for (id, l) in labels.iter().enumerate() {
            assert_eq!(cc.resolve_label(l), Some(id));
        }
    }

    #[test]
    fn ext_table_spot_values() {
        let cc = cc_a3();
        let p2 = cc.projective_id(1);
        let s1 = cc.ar_quiver().find_by_dims(&[1, 0, 0]).unwrap();
        assert_eq!(cc.ext1(p2, s1), 1);

        let sp1 = cc.id(CcObject::ShiftedProjective(0));
        let sp2 = cc.id(CcObject::ShiftedProjective(1));
        assert_eq!(cc.ext1(sp1, sp2), 0);
        assert_eq!(cc.ext1(sp1, s1), 1); // dims of S1 at vertex 1

        let s2 = cc.ar_quiver().find_by_dims(&[0, 1, 0]).unwrap();
        assert_eq!(cc.ext1(s1, s2), 1);
    }

    #[test]
    fn ext_table_is_symmetric() {
        let cc = cc_a3();
        for a in 0..cc.domain_size() {
            assert_eq!(cc.ext1(a, a), 0);
            for b in 0..cc.domain_size() {
                assert_eq!(cc.ext1(a, b), cc.ext1(b, a));
            }
        }
    }

    #[test]
    fn tau_is_a_permutation_with_the_expected_images() {
        let cc = cc_a3();
        let mut seen = [false; 9];
        for id in 0..9 {
            let t = cc.tau(id);
            assert!(!seen[t]);
            seen[t] = true;
        }

        let s1 = cc.ar_quiver().find_by_dims(&[1, 0, 0]).unwrap();
        let s2 = cc.ar_quiver().find_by_dims(&[0, 1, 0]).unwrap();
        assert_eq!(cc.tau(s1), s2);

        let p3 = cc.projective_id(2);
        assert_eq!(cc.object(cc.tau(p3)), CcObject::ShiftedProjective(2));

        let sp2 = cc.id(CcObject::ShiftedProjective(1));
        assert_eq!(cc.tau(sp2), cc.injective_id(1));
    }

    #[test]
    fn tau_orbit_structure() {
        let cc = cc_a3();
        let mut orbit_sizes = Vec::new();
        let mut visited = [false; 9];
        for start in 0..9 {
            if visited[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cur = cc.tau(cur);
                len += 1;
            }
            orbit_sizes.push(len);
        }
        orbit_sizes.sort();
        assert_eq!(orbit_sizes, vec![3, 6]);
    }

    #[test]
    fn wraparound_arrows_match_the_module_structure() {
        let cc = cc_a3();
        let arrows = cc.cluster_ar_arrows();
        let nmod = cc.module_count();
        let p2 = cc.projective_id(1);
        let p3 = cc.projective_id(2);
        // the strip of shifted projectives mirrors the arrows among projectives
        assert_eq!(arrows.get(&(nmod + 2, nmod + 1)), Some(&1)); // P3[1] -> P2[1]
        assert_eq!(arrows.get(&(nmod + 1, nmod)), Some(&1)); // P2[1] -> P1[1]
        // shifted projectives feed the projectives
        assert_eq!(arrows.get(&(nmod + 1, p3)), Some(&1)); // P2[1] -> P3
        assert_eq!(arrows.get(&(nmod, p2)), Some(&1)); // P1[1] -> P2
        // every object has at least one incoming and one outgoing arrow
        for id in 0..cc.domain_size() {
            assert!(arrows.keys().any(|&(s, _)| s == id));
            assert!(arrows.keys().any(|&(_, t)| t == id));
        }
    }

    #[test]
    fn dropping_a_tilting_object_keeps_six_objects() {
        let cc = cc_a3();
        let projectives: Vec<usize> = (0..3).map(|v| cc.projective_id(v)).collect();
        let (keep, arrows) = cc.dropped_ar_quiver(&projectives);
        assert_eq!(keep.len(), 6);
        for ((s, t), _) in arrows {
            assert!(keep.contains(&s) && keep.contains(&t));
        }
    }

    #[test]
    fn cluster_ar_quiver_has_the_mesh_symmetry() {
        // in the orbit category every object has a mesh, so the arrow
        // multiplicities must satisfy arrows(u -> v) = arrows(tau v -> u)
        // for every ordered pair
        for q in [
            Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap(),
            Quiver::from_arrows(3, &[(1, 0), (1, 2)]).unwrap(),
            Quiver::from_arrows(4, &[(0, 3), (1, 3), (2, 3)]).unwrap(),
            Quiver::from_arrows(4, &[(3, 0), (3, 1), (3, 2)]).unwrap(),
            Quiver::from_arrows(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ] {
            let cc = ClusterCategory::new(&q).unwrap();
            let arrows = cc.cluster_ar_arrows();
            for u in 0..cc.domain_size() {
                for v in 0..cc.domain_size() {
                    let direct = arrows.get(&(u, v)).copied().unwrap_or(0);
                    let mesh = arrows.get(&(cc.tau(v), u)).copied().unwrap_or(0);
                    assert_eq!(
                        direct,
                        mesh,
                        "mesh symmetry fails at ({}, {}) for {q:?}",
                        cc.label(u),
                        cc.label(v)
                    );
                }
            }
        }
    }

    #[test]
    fn dropped_count_is_independent_of_the_tilting_object() {
        let q = Quiver::from_arrows(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let cc = ClusterCategory::new(&q).unwrap();
        let ctos = crate::rep::tilting::enumerate_cluster_tilting(&cc).unwrap();
        assert_eq!(ctos.len(), 50);
        for cto in &ctos {
            let (keep, _) = cc.dropped_ar_quiver(cto.summands());
            assert_eq!(keep.len(), 12);
        }
    }

    #[test]
    fn single_vertex_category() {
        let cc = ClusterCategory::new(&Quiver::point()).unwrap();
        assert_eq!(cc.domain_size(), 2);
        // tau swaps the two objects
        assert_eq!(cc.tau(0), 1);
        assert_eq!(cc.tau(1), 0);
        assert_eq!(cc.ext1(0, 1), 1);
    }

    #[test]
    fn subspace_quiver_category() {
        // construction verifies every endomorphism space is one dimensional
        let q = Quiver::from_arrows(4, &[(0, 3), (1, 3), (2, 3)]).unwrap();
        let cc = ClusterCategory::new(&q).unwrap();
        assert_eq!(cc.module_count(), 12);
        assert_eq!(cc.domain_size(), 16);
        for m in 0..cc.module_count() {
            assert_eq!(hom_dim(cc.representation(m), cc.representation(m)).unwrap(), 1);
        }
    }
}
