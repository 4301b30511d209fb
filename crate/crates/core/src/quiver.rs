//! Cluster quivers as skew-symmetric integer exchange matrices.
//!
//! A quiver on `n` vertices is stored as the matrix `b` with
//! `b[i][j] > 0` meaning `b[i][j]` arrows from `i` to `j` (so
//! `b[j][i] = -b[i][j]`). The encoding structurally forbids loops and
//! 2-cycles. Vertex indices are 0-based in the API; the text and JSON
//! formats are 1-based.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt;

use crate::{Error, Result};

/// A loop-free, 2-cycle-free multidigraph encoded by its exchange matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    n: usize,
    b: Vec<i64>, // row-major n x n, skew-symmetric
}

/// Shape of the underlying weighted undirected graph.
///
/// Only simply-laced diagrams are recognized: a quiver with a multiple
/// arrow classifies as `Other` unless it is the double arrow on two
/// vertices (`Kronecker`). Anything unrecognized, including disconnected
/// graphs, maps to `Other`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum DiagramType {
    A(usize),
    D(usize),
    E(usize),
    ExtendedA(usize),
    ExtendedD(usize),
    ExtendedE(usize),
    Kronecker,
    Other,
}

impl DiagramType {
    pub fn is_dynkin(&self) -> bool {
        matches!(self, DiagramType::A(_) | DiagramType::D(_) | DiagramType::E(_))
    }

    /// Extended Dynkin shapes; the Kronecker quiver is the extended A1.
    pub fn is_extended_dynkin(&self) -> bool {
        matches!(
            self,
            DiagramType::ExtendedA(_)
                | DiagramType::ExtendedD(_)
                | DiagramType::ExtendedE(_)
                | DiagramType::Kronecker
        )
    }
}

impl fmt::Display for DiagramType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramType::A(m) => write!(f, "A{m}"),
            DiagramType::D(m) => write!(f, "D{m}"),
            DiagramType::E(m) => write!(f, "E{m}"),
            DiagramType::ExtendedA(m) => write!(f, "A~{m}"),
            DiagramType::ExtendedD(m) => write!(f, "D~{m}"),
            DiagramType::ExtendedE(m) => write!(f, "E~{m}"),
            DiagramType::Kronecker => write!(f, "Kronecker"),
            DiagramType::Other => write!(f, "Other"),
        }
    }
}

impl Quiver {
    /// Build from a full exchange matrix; validates skew-symmetry and the
    /// zero diagonal.
    pub fn from_matrix(b: Vec<Vec<i64>>) -> Result<Self> {
        let n = b.len();
        if n == 0 {
            return Err(Error::InvalidMatrix("empty matrix".into()));
        }
        let mut flat = vec![0i64; n * n];
        for (i, row) in b.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                flat[i * n + j] = v;
            }
        }
        for i in 0..n {
            if flat[i * n + i] != 0 {
                return Err(Error::InvalidMatrix(format!("nonzero diagonal at {i}")));
            }
            for j in 0..i {
                if flat[i * n + j] != -flat[j * n + i] {
                    return Err(Error::InvalidMatrix(format!(
                        "not skew-symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Quiver { n, b: flat })
    }

    /// Build from a list of arrows `(from, to)`, 0-based, each occurring
    /// with its multiplicity. Loops and 2-cycles are rejected rather than
    /// cancelled.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        Self::from_weighted_arrows(
            n,
            &arrows.iter().map(|&(i, j)| (i, j, 1)).collect::<Vec<_>>(),
        )
    }

    /// Like [`Quiver::from_arrows`] with an explicit multiplicity per entry.
    pub fn from_weighted_arrows(n: usize, arrows: &[(usize, usize, i64)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidMatrix("a quiver needs at least one vertex".into()));
        }
        let mut fwd = vec![0i64; n * n];
        for &(i, j, m) in arrows {
            if i >= n {
                return Err(Error::VertexOutOfRange { vertex: i, n });
            }
            if j >= n {
                return Err(Error::VertexOutOfRange { vertex: j, n });
            }
            if i == j {
                return Err(Error::Loop { vertex: i });
            }
            if m < 1 {
                return Err(Error::InvalidMatrix(format!(
                    "arrow multiplicity must be positive, got {m}"
                )));
            }
            fwd[i * n + j] += m;
        }
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                if fwd[i * n + j] > 0 && fwd[j * n + i] > 0 {
                    return Err(Error::TwoCycle {
                        a: i.min(j),
                        b: i.max(j),
                    });
                }
                b[i * n + j] = fwd[i * n + j] - fwd[j * n + i];
            }
        }
        Ok(Quiver { n, b })
    }

    /// Single vertex, no arrows.
    pub fn point() -> Self {
        Quiver { n: 1, b: vec![0] }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Signed entry `b[i][j]` (0-based).
    pub fn weight(&self, i: usize, j: usize) -> i64 {
        assert!(i < self.n && j < self.n, "vertex index out of range");
        self.b[i * self.n + j]
    }

    /// Number of arrows `i -> j` (0 when they point the other way).
    pub fn arrow_count(&self, i: usize, j: usize) -> i64 {
        self.weight(i, j).max(0)
    }

    /// Arrows as `(from, to, multiplicity)` with `from`-major ordering.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (0..self.n).flat_map(move |i| {
            (0..self.n).filter_map(move |j| {
                let w = self.b[i * self.n + j];
                (w > 0).then_some((i, j, w))
            })
        })
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.b.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Mutation at vertex `k`: rows and columns through `k` flip sign and
    /// every other entry picks up the path correction through `k`. An exact
    /// involution.
    pub fn mutate(&self, k: usize) -> Quiver {
        assert!(k < self.n, "vertex index out of range");
        let n = self.n;
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = self.b[i * n + j];
                b[i * n + j] = if i == k || j == k {
                    -v
                } else {
                    let bik = self.b[i * n + k];
                    let bkj = self.b[k * n + j];
                    v + (bik.abs() * bkj + bik * bkj.abs()) / 2
                };
            }
        }
        Quiver { n, b }
    }

    /// True if vertex `k` has no outgoing arrows.
    pub fn is_sink(&self, k: usize) -> bool {
        (0..self.n).all(|j| self.weight(k, j) <= 0)
    }

    /// True if vertex `k` has no incoming arrows.
    pub fn is_source(&self, k: usize) -> bool {
        (0..self.n).all(|j| self.weight(k, j) >= 0)
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm on the positive entries.
        let n = self.n;
        let mut indeg = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if self.b[i * n + j] > 0 {
                    indeg[j] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> =
            (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for j in 0..n {
                if self.b[v * n + j] > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
        }
        seen == n
    }

    /// A topological order of the vertices; requires acyclicity.
    pub fn topological_order(&self) -> Result<Vec<usize>> {
        let n = self.n;
        let mut indeg = vec![0usize; n];
        for i in 0..n {
            for j in 0..n {
                if self.b[i * n + j] > 0 {
                    indeg[j] += 1;
                }
            }
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for j in 0..n {
                if self.b[v * n + j] > 0 {
                    indeg[j] -= 1;
                    if indeg[j] == 0 {
                        queue.push_back(j);
                    }
                }
            }
        }
        if order.len() == n {
            Ok(order)
        } else {
            Err(Error::NotAcyclic)
        }
    }

    /// Relabel vertices: vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Quiver {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut b = vec![0i64; n * n];
        for i in 0..n {
            for j in 0..n {
                b[perm[i] * n + perm[j]] = self.b[i * n + j];
            }
        }
        Quiver { n, b }
    }

    /// Lexicographically minimal matrix (row-major) over all vertex
    /// relabelings, together with a permutation realizing it:
    /// `self.permuted(&perm)` equals the canonical quiver.
    ///
    /// Exhaustive search; intended for desk scale (n <= 10 or so).
    pub fn canonical_form(&self) -> (Quiver, Vec<usize>) {
        let n = self.n;
        // pinv[pos] = original vertex placed at canonical position pos
        let mut best: Vec<usize> = (0..n).collect();
        let mut cur: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        self.search_min(&mut cur, &mut used, &mut best);
        let mut perm = vec![0usize; n];
        for (pos, &orig) in best.iter().enumerate() {
            perm[orig] = pos;
        }
        (self.permuted(&perm), perm)
    }

    fn search_min(&self, cur: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut Vec<usize>) {
        let n = self.n;
        if cur.len() == n {
            if self.cmp_pinv(cur, best) == Ordering::Less {
                best.clone_from(cur);
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                self.search_min(cur, used, best);
                cur.pop();
                used[v] = false;
            }
        }
    }

    fn cmp_pinv(&self, a: &[usize], b: &[usize]) -> Ordering {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let va = self.b[a[i] * n + a[j]];
                let vb = self.b[b[i] * n + b[j]];
                match va.cmp(&vb) {
                    Ordering::Equal => {}
                    o => return o,
                }
            }
        }
        Ordering::Equal
    }

    /// Byte encoding of the canonical matrix; equal keys iff isomorphic.
    pub fn canonical_key(&self) -> Vec<u8> {
        let (c, _) = self.canonical_form();
        c.raw_key()
    }

    /// Byte encoding of this matrix as labeled (no canonicalization).
    pub fn raw_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + 8 * self.b.len());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        for &v in &self.b {
            out.extend_from_slice(&v.to_le_bytes());
        }
        out
    }

    pub fn is_isomorphic(&self, other: &Quiver) -> bool {
        self.n == other.n && self.canonical_form().0 == other.canonical_form().0
    }

    /// Classify the underlying weighted undirected graph.
    pub fn diagram_type(&self) -> DiagramType {
        let n = self.n;
        if n == 1 {
            return DiagramType::A(1);
        }
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let w = self.b[i * n + j].abs();
                if w > 0 {
                    edges.push((i, j, w));
                }
            }
        }
        if edges.iter().any(|&(_, _, w)| w >= 2) {
            if n == 2 && edges.len() == 1 && edges[0].2 == 2 {
                return DiagramType::Kronecker;
            }
            return DiagramType::Other;
        }
        // simple graph from here on
        let mut adj = vec![Vec::new(); n];
        for &(i, j, _) in &edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        // connectivity
        let mut seen = vec![false; n];
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
        if count != n {
            return DiagramType::Other;
        }
        let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        if edges.len() == n && deg.iter().all(|&d| d == 2) {
            // single cycle on n >= 3 vertices
            return DiagramType::ExtendedA(n - 1);
        }
        if edges.len() != n - 1 {
            return DiagramType::Other;
        }
        classify_tree(&adj, &deg)
    }

    /// Text format: first line `n`, then one arrow per line as
    /// `i j [m]` with 1-based vertices (`m` omitted when 1).
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (i, j, m) in self.arrows() {
            if m == 1 {
                out.push_str(&format!("{} {}\n", i + 1, j + 1));
            } else {
                out.push_str(&format!("{} {} {}\n", i + 1, j + 1, m));
            }
        }
        out
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| Error::Parse("empty quiver file".into()))?
            .trim()
            .parse()
            .map_err(|_| Error::Parse("first line must be the vertex count".into()))?;
        let mut arrows = Vec::new();
        for line in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 && fields.len() != 3 {
                return Err(Error::Parse(format!("bad arrow line: {line:?}")));
            }
            let i: usize = fields[0]
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex in line {line:?}")))?;
            let j: usize = fields[1]
                .parse()
                .map_err(|_| Error::Parse(format!("bad vertex in line {line:?}")))?;
            let m: i64 = if fields.len() == 3 {
                fields[2]
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad multiplicity in line {line:?}")))?
            } else {
                1
            };
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!(
                    "vertex out of range 1..={n} in line {line:?}"
                )));
            }
            arrows.push((i - 1, j - 1, m));
        }
        Self::from_weighted_arrows(n, &arrows)
    }

    /// JSON format: `{"n": n, "arrows": [[i, j, m], ...]}` with 1-based
    /// vertices and explicit multiplicities.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "arrows": self
                .arrows()
                .map(|(i, j, m)| serde_json::json!([i + 1, j + 1, m]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let n = v
            .get("n")
            .and_then(|x| x.as_u64())
            .ok_or_else(|| Error::Parse("missing or bad \"n\"".into()))? as usize;
        let arr = v
            .get("arrows")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Parse("missing or bad \"arrows\"".into()))?;
        let mut arrows = Vec::with_capacity(arr.len());
        for a in arr {
            let triple = a
                .as_array()
                .filter(|t| t.len() == 2 || t.len() == 3)
                .ok_or_else(|| Error::Parse("arrow must be [i, j] or [i, j, m]".into()))?;
            let i = triple[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("bad vertex".into()))? as usize;
            let j = triple[1]
                .as_u64()
                .ok_or_else(|| Error::Parse("bad vertex".into()))? as usize;
            let m = if triple.len() == 3 {
                triple[2]
                    .as_i64()
                    .ok_or_else(|| Error::Parse("bad multiplicity".into()))?
            } else {
                1
            };
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::Parse(format!("vertex out of range 1..={n}")));
            }
            arrows.push((i - 1, j - 1, m));
        }
        Self::from_weighted_arrows(n, &arrows)
    }

    /// DOT rendering of the quiver as a digraph (1-based labels).
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n");
        for v in 0..self.n {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", v + 1, v + 1));
        }
        for (i, j, m) in self.arrows() {
            for _ in 0..m {
                out.push_str(&format!("  v{} -> v{};\n", i + 1, j + 1));
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .map(|(i, j, m)| {
                if m == 1 {
                    format!("{}->{}", i + 1, j + 1)
                } else {
                    format!("{}->{}(x{})", i + 1, j + 1, m)
                }
            })
            .collect();
        write!(f, "Quiver(n={}; {})", self.n, arrows.join(", "))
    }
}

fn classify_tree(adj: &[Vec<usize>], deg: &[usize]) -> DiagramType {
    let n = adj.len();
    let max_deg = *deg.iter().max().unwrap();
    if max_deg <= 2 {
        return DiagramType::A(n);
    }
    if max_deg == 4 {
        // star with four leaves is the extended D4
        if n == 5 && deg.iter().filter(|&&d| d == 4).count() == 1 {
            return DiagramType::ExtendedD(4);
        }
        return DiagramType::Other;
    }
    if max_deg > 4 {
        return DiagramType::Other;
    }
    let centers: Vec<usize> = (0..n).filter(|&v| deg[v] == 3).collect();
    match centers.len() {
        1 => {
            let c = centers[0];
            let mut arms: Vec<usize> = adj[c]
                .iter()
                .map(|&start| arm_length(adj, deg, c, start))
                .collect();
            arms.sort_unstable();
            match (arms[0], arms[1], arms[2]) {
                (1, 1, k) => DiagramType::D(k + 3),
                (1, 2, 2) => DiagramType::E(6),
                (1, 2, 3) => DiagramType::E(7),
                (1, 2, 4) => DiagramType::E(8),
                (2, 2, 2) => DiagramType::ExtendedE(6),
                (1, 3, 3) => DiagramType::ExtendedE(7),
                (1, 2, 5) => DiagramType::ExtendedE(8),
                _ => DiagramType::Other,
            }
        }
        2 => {
            // two branch vertices, each with two length-1 arms, joined by a path
            for &c in &centers {
                let other = centers.iter().find(|&&x| x != c).copied().unwrap();
                let mut leaf_arms = 0;
                let mut path_arms = 0;
                for &start in &adj[c] {
                    let towards_other = leads_to(adj, c, start, other);
                    if towards_other {
                        path_arms += 1;
                    } else if arm_length(adj, deg, c, start) == 1 {
                        leaf_arms += 1;
                    } else {
                        return DiagramType::Other;
                    }
                }
                if leaf_arms != 2 || path_arms != 1 {
                    return DiagramType::Other;
                }
            }
            DiagramType::ExtendedD(n - 1)
        }
        _ => DiagramType::Other,
    }
}

/// Length of the path from `c` into the branch starting at `start`,
/// stopping at a leaf or another branch vertex. Returns `usize::MAX` if
/// the walk meets a vertex of degree >= 3 (not a clean arm).
fn arm_length(adj: &[Vec<usize>], deg: &[usize], c: usize, start: usize) -> usize {
    let mut prev = c;
    let mut cur = start;
    let mut len = 1;
    loop {
        if deg[cur] == 1 {
            return len;
        }
        if deg[cur] != 2 {
            return usize::MAX;
        }
        let next = *adj[cur].iter().find(|&&v| v != prev).unwrap();
        prev = cur;
        cur = next;
        len += 1;
    }
}

/// Does walking from `c` into `start` (in a tree) reach `target`?
fn leads_to(adj: &[Vec<usize>], c: usize, start: usize, target: usize) -> bool {
    let mut stack = vec![(c, start)];
    while let Some((prev, cur)) = stack.pop() {
        if cur == target {
            return true;
        }
        for &next in &adj[cur] {
            if next != prev {
                stack.push((cur, next));
            }
        }
    }
    false
}
