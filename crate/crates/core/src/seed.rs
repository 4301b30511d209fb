//! Seeds and the exchange relation.
//!
//! A seed is an ordered cluster of Laurent polynomials labeling the
//! vertices of a quiver. Mutation replaces one entry by the exchange-
//! relation quotient and mutates the quiver. Seeds are identified up to
//! simultaneous rearrangement of cluster entries and vertices;
//! [`Seed::canonical`] picks a distinguished representative and a byte key
//! so that equal keys mean equivalent seeds.

use num_traits::Signed;
use std::fmt;

use crate::laurent::LaurentPoly;
use crate::quiver::Quiver;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Seed {
    cluster: Vec<LaurentPoly>,
    quiver: Quiver,
}

/// Canonical byte encoding of a canonicalized seed.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeedKey(Vec<u8>);

impl SeedKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for SeedKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SeedKey({} bytes)", self.0.len())
    }
}

impl Seed {
    /// The seed whose cluster is the tuple of variables `x1, ..., xn`.
    pub fn initial(quiver: &Quiver) -> Seed {
        let n = quiver.vertex_count();
        Seed {
            cluster: (0..n).map(|i| LaurentPoly::variable(n, i)).collect(),
            quiver: quiver.clone(),
        }
    }

    pub fn new(cluster: Vec<LaurentPoly>, quiver: Quiver) -> Result<Seed> {
        if cluster.len() != quiver.vertex_count() {
            return Err(Error::InvalidMatrix(format!(
                "cluster has {} entries for a quiver on {} vertices",
                cluster.len(),
                quiver.vertex_count()
            )));
        }
        Ok(Seed { cluster, quiver })
    }

    pub fn rank(&self) -> usize {
        self.cluster.len()
    }

    pub fn cluster(&self) -> &[LaurentPoly] {
        &self.cluster
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// Exchange at vertex `k`: the new entry is `(m1 + m2) / x_k` where the
    /// monomials `m1` and `m2` collect the current entries along the arrows
    /// into and out of `k` (empty products are 1). The division is exact for
    /// every seed reachable from an initial seed; a failure is reported as
    /// [`Error::NonExactDivision`] and indicates an engine bug.
    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let n = self.rank();
        assert!(k < n, "vertex index out of range");
        let nvars = self.cluster[0].nvars();
        let mut m1 = LaurentPoly::one(nvars);
        let mut m2 = LaurentPoly::one(nvars);
        for j in 0..n {
            let w = self.quiver.weight(j, k);
            if w > 0 {
                m1 = m1.mul(&self.cluster[j].pow(w as u64));
            }
            let w = self.quiver.weight(k, j);
            if w > 0 {
                m2 = m2.mul(&self.cluster[j].pow(w as u64));
            }
        }
        let new_entry = m1.add(&m2).exact_div(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new_entry;
        Ok(Seed {
            cluster,
            quiver: self.quiver.mutate(k),
        })
    }

    /// Canonical representative under simultaneous rearrangement, plus its key.
    pub fn canonical(&self) -> (Seed, SeedKey) {
        let (seed, key, _) = self.canonical_with_perm();
        (seed, key)
    }

    /// As [`Seed::canonical`], also returning the applied relabeling
    /// (`perm[old] = new position`).
    pub fn canonical_with_perm(&self) -> (Seed, SeedKey, Vec<usize>) {
        let n = self.rank();
        // positions sorted by the fixed total order on cluster entries
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| self.cluster[a].cmp_order(&self.cluster[b]));

        // tie blocks of equal entries; ties are permuted freely and the
        // quiver matrix minimized over them
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n
                || self.cluster[order[i]].cmp_order(&self.cluster[order[start]])
                    != std::cmp::Ordering::Equal
            {
                blocks.push((start, i));
                start = i;
            }
        }

        let has_ties = blocks.iter().any(|&(s, e)| e - s > 1);
        let best_pinv = if !has_ties {
            order.clone()
        } else {
            let mut best: Option<(Vec<i64>, Vec<usize>)> = None;
            let mut cand = order.clone();
            minimize_over_ties(&self.quiver, &mut cand, &blocks, 0, &mut best);
            best.unwrap().1
        };

        let mut perm = vec![0usize; n];
        for (pos, &orig) in best_pinv.iter().enumerate() {
            perm[orig] = pos;
        }
        let seed = Seed {
            cluster: best_pinv.iter().map(|&i| self.cluster[i].clone()).collect(),
            quiver: self.quiver.permuted(&perm),
        };
        let key = seed.encode_key();
        (seed, key, perm)
    }

    fn encode_key(&self) -> SeedKey {
        let n = self.rank();
        let mut out: Vec<u8> = vec![1]; // encoding version
        out.extend_from_slice(&(n as u64).to_le_bytes());
        for entry in &self.cluster {
            out.extend_from_slice(&(entry.num_terms() as u64).to_le_bytes());
            for (e, c) in entry.terms() {
                for &x in e.as_slice() {
                    out.extend_from_slice(&x.to_le_bytes());
                }
                out.push(if c.is_negative() { 0xff } else { 1 });
                let mag = c.magnitude().to_bytes_le();
                out.extend_from_slice(&(mag.len() as u64).to_le_bytes());
                out.extend_from_slice(&mag);
            }
        }
        out.extend_from_slice(&self.quiver.raw_key());
        SeedKey(out)
    }

    /// Diagnostic checks that hold for every seed reachable from an initial
    /// seed: entries are pairwise distinct and nonzero, reduced numerators
    /// have positive coefficients, and every entry with a nontrivial
    /// denominator has a numerator satisfying the positivity condition.
    /// (Initial variables are excluded from the last check: `x_i` itself
    /// vanishes at the point with a zero in position `i`.)
    pub fn validate(&self) -> Result<()> {
        for (i, entry) in self.cluster.iter().enumerate() {
            if entry.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
            for other in &self.cluster[i + 1..] {
                if entry == other {
                    return Err(Error::DuplicateClusterEntries);
                }
            }
            let rf = entry.reduced_form()?;
            if !rf.numerator().coefficients_positive() {
                return Err(Error::TheoremViolation(format!(
                    "cluster entry {i} has a nonpositive numerator coefficient"
                )));
            }
            if !rf.denominator().is_zero() && !rf.numerator().positivity_condition()? {
                return Err(Error::TheoremViolation(format!(
                    "cluster entry {i} fails the positivity condition"
                )));
            }
        }
        Ok(())
    }

    /// JSON format: `{"cluster": [laurent, ...], "quiver": quiver}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "cluster": self.cluster.iter().map(|p| p.to_json()).collect::<Vec<_>>(),
            "quiver": self.quiver.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Seed> {
        let quiver = Quiver::from_json(
            v.get("quiver")
                .ok_or_else(|| Error::Parse("missing \"quiver\"".into()))?,
        )?;
        let n = quiver.vertex_count();
        let arr = v
            .get("cluster")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing or bad \"cluster\"".into()))?;
        if arr.len() != n {
            return Err(Error::Parse(format!(
                "cluster has {} entries, expected {n}",
                arr.len()
            )));
        }
        let cluster = arr
            .iter()
            .map(|p| LaurentPoly::from_json(p, n))
            .collect::<Result<Vec<_>>>()?;
        Seed::new(cluster, quiver)
    }
}

impl fmt::Debug for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.cluster.iter().map(|p| p.to_string()).collect();
        write!(f, "Seed({{{}}}; {:?})", entries.join(", "), self.quiver)
    }
}

fn minimize_over_ties(
    quiver: &Quiver,
    cand: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    block_idx: usize,
    best: &mut Option<(Vec<i64>, Vec<usize>)>,
) {
    if block_idx == blocks.len() {
        let n = cand.len();
        let mut perm = vec![0usize; n];
        for (pos, &orig) in cand.iter().enumerate() {
            perm[orig] = pos;
        }
        let q = quiver.permuted(&perm);
        let flat: Vec<i64> = (0..n * n)
            .map(|idx| q.weight(idx / n, idx % n))
            .collect();
        if best.as_ref().is_none_or(|(b, _)| flat < *b) {
            *best = Some((flat, cand.clone()));
        }
        return;
    }
    let (s, e) = blocks[block_idx];
    permute_block(quiver, cand, blocks, block_idx, best, s, e);
}

fn permute_block(
    quiver: &Quiver,
    cand: &mut Vec<usize>,
    blocks: &[(usize, usize)],
    block_idx: usize,
    best: &mut Option<(Vec<i64>, Vec<usize>)>,
    k: usize,
    e: usize,
) {
    if k == e {
        minimize_over_ties(quiver, cand, blocks, block_idx + 1, best);
        return;
    }
    for i in k..e {
        cand.swap(k, i);
        permute_block(quiver, cand, blocks, block_idx, best, k + 1, e);
        cand.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3_path() -> Quiver {
        Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn p(s: &str, n: usize) -> LaurentPoly {
        LaurentPoly::parse(s, n).unwrap()
    }

    #[test]
    fn initial_seed_clusters() {
        let s = Seed::initial(&a3_path());
        assert_eq!(s.cluster()[0], p("x1", 3));
        assert_eq!(s.cluster()[1], p("x2", 3));
        assert_eq!(s.cluster()[2], p("x3", 3));

        let pt = Seed::initial(&Quiver::point());
        assert_eq!(pt.cluster(), &[p("x1", 1)]);

        let kr = Seed::initial(&Quiver::from_weighted_arrows(2, &[(0, 1, 2)]).unwrap());
        assert_eq!(kr.rank(), 2);
    }

    #[test]
    fn first_mutations_of_the_path_seed() {
        let s = Seed::initial(&a3_path());

        let s1 = s.mutate(0).unwrap();
        let expected = p("1 + x2", 3).exact_div(&p("x1", 3)).unwrap();
        assert_eq!(s1.cluster()[0], expected);
        assert_eq!(s1.cluster()[1], p("x2", 3));
        assert_eq!(
            s1.quiver(),
            &Quiver::from_arrows(3, &[(1, 0), (1, 2)]).unwrap()
        );

        let s2 = s.mutate(1).unwrap();
        let expected = p("x1 + x3", 3).exact_div(&p("x2", 3)).unwrap();
        assert_eq!(s2.cluster()[1], expected);
        // the mutated quiver is the oriented triangle
        assert_eq!(
            s2.quiver(),
            &Quiver::from_arrows(3, &[(1, 0), (2, 1), (0, 2)]).unwrap()
        );

        // a second-level value: mutating twice along distinct vertices
        let s12 = s.mutate(0).unwrap().mutate(1).unwrap();
        let expected = p("x1 + x3 + x2 x3", 3)
            .exact_div(&p("x1 x2", 3))
            .unwrap();
        assert_eq!(s12.cluster()[1], expected);
        assert_eq!(
            s12.quiver(),
            &Quiver::from_arrows(3, &[(0, 1), (2, 1)]).unwrap()
        );
    }

    #[test]
    fn mutation_is_an_involution_on_seeds() {
        let s = Seed::initial(&a3_path());
        for k in 0..3 {
            assert_eq!(s.mutate(k).unwrap().mutate(k).unwrap(), s);
        }
        let deep = s.mutate(0).unwrap().mutate(1).unwrap().mutate(2).unwrap();
        for k in 0..3 {
            assert_eq!(deep.mutate(k).unwrap().mutate(k).unwrap(), deep);
        }
    }

    #[test]
    fn quiver_component_matches_quiver_mutation() {
        let s = Seed::initial(&a3_path()).mutate(1).unwrap();
        assert_eq!(s.quiver(), &a3_path().mutate(1));
    }

    #[test]
    fn equivalent_seeds_share_a_key() {
        let q = a3_path();
        let s = Seed::initial(&q);
        // simultaneous rearrangement: swap entries 0 and 1 and the vertices
        let swapped = Seed::new(
            vec![s.cluster()[1].clone(), s.cluster()[0].clone(), s.cluster()[2].clone()],
            q.permuted(&[1, 0, 2]),
        )
        .unwrap();
        assert_eq!(s.canonical().1, swapped.canonical().1);

        // a genuinely different seed gets a different key
        let other = s.mutate(0).unwrap();
        assert_ne!(s.canonical().1, other.canonical().1);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let s = Seed::initial(&a3_path()).mutate(2).unwrap().mutate(1).unwrap();
        let (c, key) = s.canonical();
        let (c2, key2) = c.canonical();
        assert_eq!(c, c2);
        assert_eq!(key, key2);
    }

    #[test]
    fn canonical_perm_witnesses_the_relabeling() {
        let s = Seed::initial(&a3_path()).mutate(0).unwrap();
        let (c, _, perm) = s.canonical_with_perm();
        assert_eq!(&s.quiver().permuted(&perm), c.quiver());
        for (old, &new) in perm.iter().enumerate() {
            assert_eq!(&s.cluster()[old], &c.cluster()[new]);
        }
    }

    #[test]
    fn tie_handling_minimizes_the_quiver() {
        // artificial seed with two equal entries: ties must be explored
        let q = Quiver::from_arrows(3, &[(0, 1), (1, 2)]).unwrap();
        let x = p("x1", 3);
        let s = Seed::new(vec![x.clone(), x.clone(), p("x2", 3)], q.clone()).unwrap();
        let t = Seed::new(
            vec![x.clone(), x.clone(), p("x2", 3)],
            q.permuted(&[1, 0, 2]),
        )
        .unwrap();
        assert_eq!(s.canonical().1, t.canonical().1);
        assert!(s.validate().is_err());
    }

    #[test]
    fn validation_flags_positivity_failures() {
        let q = Quiver::from_arrows(2, &[(0, 1)]).unwrap();
        let good = Seed::initial(&q);
        assert!(good.validate().is_ok());
        // numerator x1 + x1 x2 over denominator x2 is not in lowest terms
        let bad = Seed::new(vec![p("x1 x2^-1 + x1", 2), p("x2", 2)], q.clone()).unwrap();
        assert!(matches!(bad.validate(), Err(Error::TheoremViolation(_))));
        let negative = Seed::new(vec![p("x1 - x2", 2), p("x2", 2)], q).unwrap();
        assert!(matches!(
            negative.validate(),
            Err(Error::TheoremViolation(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = Seed::initial(&a3_path()).mutate(0).unwrap().mutate(1).unwrap();
        let v = s.to_json();
        assert_eq!(Seed::from_json(&v).unwrap(), s);
    }

    #[test]
    fn keys_are_invariant_under_random_rearrangement() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(21);
        for _ in 0..40 {
            // a short random walk from the path seed
            let mut s = Seed::initial(&a3_path());
            for _ in 0..rng.random_range(0..=5) {
                s = s.mutate(rng.random_range(0..3)).unwrap();
            }
            let mut perm: Vec<usize> = (0..3).collect();
            for i in (1..3).rev() {
                let j = rng.random_range(0..=i);
                perm.swap(i, j);
            }
            let mut cluster = vec![LaurentPoly::zero(3); 3];
            for (old, &new) in perm.iter().enumerate() {
                cluster[new] = s.cluster()[old].clone();
            }
            let rearranged = Seed::new(cluster, s.quiver().permuted(&perm)).unwrap();
            assert_eq!(s.canonical().1, rearranged.canonical().1);
        }
    }
}
