//! Auslander-Reiten quivers of acyclic Dynkin path algebras, built by
//! knitting.
//!
//! Knitting starts from the indecomposable projectives (dimension vectors
//! given by path counts) and repeatedly applies mesh additivity: for a
//! non-injective object `x` with all outgoing irreducible maps known, the
//! translate `tau^{-1} x` has dimension vector `sum of middles - dims(x)`,
//! and each middle acquires an arrow into the new object. The process stops
//! at the injectives; for a Dynkin diagram the object count equals the
//! number of positive roots.

use std::collections::BTreeMap;

use crate::quiver::Quiver;
use crate::{Error, Result};

/// One indecomposable in the AR-quiver.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArObject {
    pub dims: Vec<usize>,
    /// `Some(i)` when this is the projective at vertex `i`.
    pub projective: Option<usize>,
    /// `Some(i)` when this is the injective at vertex `i`.
    pub injective: Option<usize>,
}

/// The AR-quiver: objects, irreducible-map multiplicities, and the
/// translation, defined away from the projectives.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ArQuiver {
    objects: Vec<ArObject>,
    arrows: BTreeMap<(usize, usize), usize>,
    tau: Vec<Option<usize>>,
}

impl ArQuiver {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> &[ArObject] {
        &self.objects
    }

    pub fn object(&self, id: usize) -> &ArObject {
        &self.objects[id]
    }

    /// Irreducible-map multiplicities, keyed by `(source, target)`.
    pub fn arrows(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.arrows
    }

    pub fn arrow_mult(&self, from: usize, to: usize) -> usize {
        self.arrows.get(&(from, to)).copied().unwrap_or(0)
    }

    /// The translate of `id`, undefined exactly on the projectives.
    pub fn tau(&self, id: usize) -> Option<usize> {
        self.tau[id]
    }

    pub fn tau_inverse(&self, id: usize) -> Option<usize> {
        self.tau
            .iter()
            .position(|&t| t == Some(id))
    }

    /// Index of the object with the given dimension vector, if any.
    pub fn find_by_dims(&self, dims: &[usize]) -> Option<usize> {
        self.objects.iter().position(|o| o.dims == dims)
    }

    pub fn projective_at(&self, vertex: usize) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.projective == Some(vertex))
    }

    pub fn injective_at(&self, vertex: usize) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.injective == Some(vertex))
    }

    /// Mesh additivity at every non-projective object, checked from the
    /// stored data.
    pub fn check_mesh_additivity(&self) -> bool {
        self.objects.iter().enumerate().all(|(z, obj)| {
            let Some(tz) = self.tau[z] else {
                return obj.projective.is_some();
            };
            let mut sum = vec![0i64; obj.dims.len()];
            for (&(src, dst), &mult) in &self.arrows {
                if dst == z {
                    for (acc, &d) in sum.iter_mut().zip(&self.objects[src].dims) {
                        *acc += mult as i64 * d as i64;
                    }
                }
            }
            let lhs: Vec<i64> = self.objects[tz]
                .dims
                .iter()
                .zip(&obj.dims)
                .map(|(&a, &b)| a as i64 + b as i64)
                .collect();
            lhs == sum
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "arrows": self
                .arrows
                .iter()
                .map(|(&(s, t), &m)| serde_json::json!([s, t, m]))
                .collect::<Vec<_>>(),
            "objects": self
                .objects
                .iter()
                .enumerate()
                .map(|(i, o)| {
                    serde_json::json!({
                        "dims": o.dims,
                        "injective": o.injective,
                        "projective": o.projective,
                        "tau": self.tau[i],
                    })
                })
                .collect::<Vec<_>>(),
        })
    }

    /// DOT rendering; irreducible maps solid, the translation dashed.
    pub fn to_dot(&self, labels: &[String]) -> String {
        let mut out = String::from("digraph ar_quiver {\n  rankdir=LR;\n");
        for (i, label) in labels.iter().enumerate() {
            out.push_str(&format!("  o{i} [label=\"{label}\"];\n"));
        }
        for (&(s, t), &m) in &self.arrows {
            for _ in 0..m {
                out.push_str(&format!("  o{s} -> o{t};\n"));
            }
        }
        for (z, t) in self.tau.iter().enumerate() {
            if let Some(tz) = t {
                out.push_str(&format!(
                    "  o{z} -> o{tz} [style=dashed, constraint=false];\n"
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Path-count dimension vectors of the projectives and injectives.
fn projective_dims(q: &Quiver) -> Result<Vec<Vec<usize>>> {
    let n = q.vertex_count();
    let topo = q.topological_order()?;
    let mut counts = vec![vec![0usize; n]; n]; // counts[i][j] = paths i -> j
    for &v in topo.iter().rev() {
        counts[v][v] = 1;
        for j in 0..n {
            let m = q.arrow_count(v, j);
            if m > 0 {
                let target_row = counts[j].clone();
                for (acc, &c) in counts[v].iter_mut().zip(&target_row) {
                    *acc += m as usize * c;
                }
            }
        }
    }
    Ok(counts)
}

/// Knit the AR-quiver of an acyclic simply-laced Dynkin quiver.
pub fn knit_ar_quiver(q: &Quiver) -> Result<ArQuiver> {
    if !q.diagram_type().is_dynkin() || !q.is_acyclic() {
        return Err(Error::NotDynkin);
    }
    let n = q.vertex_count();
    let proj_dims = projective_dims(q)?;
    // dims of the injective at i are the counts of paths j -> i
    let inj_dims = transpose_counts(&proj_dims);

    let mut objects: Vec<ArObject> = Vec::new();
    let mut arrows: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut tau: Vec<Option<usize>> = Vec::new();
    let mut by_dims: BTreeMap<Vec<usize>, usize> = BTreeMap::new();

    let injective_of = |dims: &[usize]| -> Option<usize> {
        inj_dims.iter().position(|d| d.as_slice() == dims)
    };

    for v in 0..n {
        let dims = proj_dims[v].clone();
        let id = objects.len();
        by_dims.insert(dims.clone(), id);
        objects.push(ArObject {
            injective: injective_of(&dims),
            projective: Some(v),
            dims,
        });
        tau.push(None);
    }
    // irreducible maps between projectives: one per arrow of the quiver,
    // from the radical summand into the projective
    for (i, j, m) in q.arrows() {
        *arrows.entry((j, i)).or_insert(0) += m as usize;
    }

    // pending count of in-neighbors that still have to be expanded
    let mut pending: Vec<usize> = vec![0; n];
    for &(src, dst) in arrows.keys() {
        if objects[src].injective.is_none() {
            pending[dst] += 1;
        }
    }
    let mut expanded = vec![false; n];

    loop {
        let ready = (0..objects.len()).find(|&x| {
            !expanded[x] && objects[x].injective.is_none() && pending[x] == 0
        });
        let Some(x) = ready else { break };
        expanded[x] = true;

        // mesh: dims of the translate from the outgoing middles
        let middles: Vec<(usize, usize)> = arrows
            .iter()
            .filter(|&(&(src, _), _)| src == x)
            .map(|(&(_, dst), &mult)| (dst, mult))
            .collect();
        let mut z_dims = vec![0i64; n];
        for &(m, mult) in &middles {
            for (acc, &d) in z_dims.iter_mut().zip(&objects[m].dims) {
                *acc += mult as i64 * d as i64;
            }
        }
        for (acc, &d) in z_dims.iter_mut().zip(&objects[x].dims) {
            *acc -= d as i64;
        }
        if z_dims.iter().any(|&d| d < 0) || z_dims.iter().all(|&d| d == 0) {
            return Err(Error::InternalInconsistency(format!(
                "mesh produced a bad dimension vector {z_dims:?}"
            )));
        }
        let z_dims: Vec<usize> = z_dims.into_iter().map(|d| d as usize).collect();
        if by_dims.contains_key(&z_dims) {
            return Err(Error::InternalInconsistency(format!(
                "dimension vector {z_dims:?} produced twice while knitting"
            )));
        }
        let z = objects.len();
        by_dims.insert(z_dims.clone(), z);
        objects.push(ArObject {
            injective: injective_of(&z_dims),
            projective: None,
            dims: z_dims,
        });
        tau.push(Some(x));
        expanded.push(false);
        pending.push(0);

        for &(m, mult) in &middles {
            *arrows.entry((m, z)).or_insert(0) += mult;
            if objects[m].injective.is_none() {
                pending[z] += 1;
            }
        }
        // the expansion of x unblocks each of its out-neighbors
        for &(m, _) in &middles {
            pending[m] -= 1;
        }
    }

    // all non-injectives must have been expanded and the injectives reached
    for (x, obj) in objects.iter().enumerate() {
        if obj.injective.is_none() && !expanded[x] {
            return Err(Error::InternalInconsistency(
                "knitting stalled before reaching the injectives".into(),
            ));
        }
    }
    for v in 0..n {
        if !objects.iter().any(|o| o.injective == Some(v)) {
            return Err(Error::InternalInconsistency(format!(
                "knitting never reached the injective at vertex {v}"
            )));
        }
    }

    Ok(ArQuiver {
        objects,
        arrows,
        tau,
    })
}

/// Given paths-from counts, produce paths-to counts.
fn transpose_counts(counts: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = counts.len();
    let mut out = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            out[i][j] = counts[j][i];
        }
    }
    out
}
