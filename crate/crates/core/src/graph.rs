//! Simple graphs, minimal vertex covers, and the derived edge and cover
//! ideals. Vertices map to polynomial variables in declared order: vertex
//! at position p corresponds to variable x_{p+1}.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::ideal::MonomialIdeal;

/// An undirected graph without loops or multi-edges. Vertex labels are
/// arbitrary unique strings; edges are stored as ordered index pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn new<S: Into<String>>(labels: Vec<S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateVertex(l.clone()));
            }
        }
        Ok(SimpleGraph {
            labels,
            edges: BTreeSet::new(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as ordered (low, high) index pairs into `labels`.
    pub fn edge_indices(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        if i == j {
            return Err(Error::LoopEdge(a.to_string()));
        }
        self.edges.insert((i.min(j), i.max(j)));
        Ok(())
    }

    pub fn degree(&self, label: &str) -> Result<usize> {
        let i = self.index_of(label)?;
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| a == i || b == i)
            .count())
    }

    /// New graph with one extra vertex `w` joined to the existing vertex `v`.
    pub fn add_leaf(&self, v: &str, w: &str) -> Result<SimpleGraph> {
        self.index_of(v)?;
        if self.labels.iter().any(|l| l == w) {
            return Err(Error::DuplicateVertex(w.to_string()));
        }
        let mut labels = self.labels.clone();
        labels.push(w.to_string());
        let mut g = SimpleGraph {
            labels,
            edges: self.edges.clone(),
        };
        g.add_edge(v, w)?;
        Ok(g)
    }

    /// New graph without vertex `v` or any edge incident to it. Remaining
    /// vertices keep their relative order.
    pub fn delete_vertex(&self, v: &str) -> Result<SimpleGraph> {
        let vi = self.index_of(v)?;
        let labels: Vec<String> = self
            .labels
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != vi)
            .map(|(_, l)| l.clone())
            .collect();
        let shift = |i: usize| if i > vi { i - 1 } else { i };
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| a != vi && b != vi)
            .map(|&(a, b)| (shift(a), shift(b)))
            .collect();
        Ok(SimpleGraph { labels, edges })
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.labels.len();
        let mut edges = BTreeSet::new();
        for a in 0..n {
            for b in a + 1..n {
                if !self.edges.contains(&(a, b)) {
                    edges.insert((a, b));
                }
            }
        }
        SimpleGraph {
            labels: self.labels.clone(),
            edges,
        }
    }

    /// All inclusion-minimal vertex covers, as sorted index sets, sorted.
    ///
    /// Branches on an uncovered edge (take one endpoint or the other, never
    /// a vertex already excluded on this path), then keeps exactly the
    /// candidates where every chosen vertex has a private edge.
    pub fn minimal_vertex_covers(&self) -> Vec<BTreeSet<usize>> {
        let edges: Vec<(usize, usize)> = self.edges.iter().copied().collect();
        let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        let mut chosen: BTreeSet<usize> = BTreeSet::new();
        let mut excluded: BTreeSet<usize> = BTreeSet::new();
        branch(&edges, &mut chosen, &mut excluded, &mut found);
        found
            .into_iter()
            .filter(|c| {
                c.iter().all(|&v| {
                    self.edges
                        .iter()
                        .any(|&(a, b)| (a == v && !c.contains(&b)) || (b == v && !c.contains(&a)))
                })
            })
            .collect()
    }

    /// Cover ideal J(G): one square-free generator per minimal vertex cover,
    /// in |V| variables. The edgeless graph has the empty cover, so J = (1).
    pub fn cover_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.labels.len();
        let gens = self
            .minimal_vertex_covers()
            .into_iter()
            .map(|c| {
                let support: Vec<usize> = c.into_iter().map(|i| i + 1).collect();
                ExponentVector::from_support(n, &support)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }

    /// Cover ideal of `self` written in the variables of `ambient`: each
    /// vertex label of `self` must also be a vertex of `ambient`.
    pub fn cover_ideal_in(&self, ambient: &SimpleGraph) -> Result<MonomialIdeal> {
        let n = ambient.labels.len();
        let positions: Vec<usize> = self
            .labels
            .iter()
            .map(|l| ambient.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        let gens = self
            .minimal_vertex_covers()
            .into_iter()
            .map(|c| {
                let support: Vec<usize> = c.into_iter().map(|i| positions[i] + 1).collect();
                ExponentVector::from_support(n, &support)
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }

    /// Edge ideal I(G): x_u x_v over the edges, in |V| variables.
    pub fn edge_ideal(&self) -> Result<MonomialIdeal> {
        let n = self.labels.len();
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| ExponentVector::from_support(n, &[a + 1, b + 1]))
            .collect::<Result<Vec<_>>>()?;
        MonomialIdeal::minimalize(n, gens)
    }

    /// No induced odd cycle of length >= 5 in the graph or its complement,
    /// by exhaustive subset search. Limited to 16 vertices.
    pub fn is_perfect(&self) -> Result<bool> {
        let n = self.labels.len();
        if n > 16 {
            return Err(Error::GraphTooLarge {
                vertices: n,
                limit: 16,
            });
        }
        Ok(!has_odd_hole(self) && !has_odd_hole(&self.complement()))
    }
}

fn branch(
    edges: &[(usize, usize)],
    chosen: &mut BTreeSet<usize>,
    excluded: &mut BTreeSet<usize>,
    found: &mut BTreeSet<BTreeSet<usize>>,
) {
    let uncovered = edges
        .iter()
        .find(|&&(a, b)| !chosen.contains(&a) && !chosen.contains(&b));
    let Some(&(a, b)) = uncovered else {
        found.insert(chosen.clone());
        return;
    };
    if !excluded.contains(&a) {
        chosen.insert(a);
        branch(edges, chosen, excluded, found);
        chosen.remove(&a);
    }
    // cover the edge without a: a is excluded from now on, so b is forced
    if !excluded.contains(&b) {
        let fresh_exclude = excluded.insert(a);
        chosen.insert(b);
        branch(edges, chosen, excluded, found);
        chosen.remove(&b);
        if fresh_exclude {
            excluded.remove(&a);
        }
    }
}

/// Exhaustive induced odd-hole (length >= 5) search over vertex subsets,
/// using adjacency bitmasks.
fn has_odd_hole(g: &SimpleGraph) -> bool {
    let n = g.vertex_count();
    let mut adj = vec![0u32; n];
    for &(a, b) in g.edge_indices() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    for subset in 1u32..(1 << n) {
        let size = subset.count_ones();
        if size < 5 || size % 2 == 0 {
            continue;
        }
        // induced subgraph is a cycle iff 2-regular and connected
        let mut vertices = Vec::with_capacity(size as usize);
        for v in 0..n {
            if subset & (1 << v) != 0 {
                vertices.push(v);
            }
        }
        if vertices
            .iter()
            .any(|&v| (adj[v] & subset).count_ones() != 2)
        {
            continue;
        }
        let start = vertices[0];
        let mut seen = 1u32 << start;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let mut reach = adj[v] & subset & !seen;
            while reach != 0 {
                let w = reach.trailing_zeros() as usize;
                reach &= reach - 1;
                seen |= 1 << w;
                queue.push_back(w);
            }
        }
        if seen == subset {
            return true;
        }
    }
    false
}

fn numbered_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// Cycle C_n on vertices 1..n with edges {i, i+1} and {n, 1}.
pub fn cycle(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut g = SimpleGraph::new(numbered_labels(n))?;
    for i in 1..n {
        g.add_edge(&i.to_string(), &(i + 1).to_string())?;
    }
    g.add_edge(&n.to_string(), "1")?;
    Ok(g)
}

/// Path P_n on vertices 1..n.
pub fn path(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::ParamOutOfRange("path needs n >= 1".into()));
    }
    let mut g = SimpleGraph::new(numbered_labels(n))?;
    for i in 1..n {
        g.add_edge(&i.to_string(), &(i + 1).to_string())?;
    }
    Ok(g)
}

/// Complete graph K_n on vertices 1..n.
pub fn complete(n: usize) -> Result<SimpleGraph> {
    if n < 1 {
        return Err(Error::ParamOutOfRange("complete graph needs n >= 1".into()));
    }
    let mut g = SimpleGraph::new(numbered_labels(n))?;
    for i in 1..=n {
        for j in i + 1..=n {
            g.add_edge(&i.to_string(), &j.to_string())?;
        }
    }
    Ok(g)
}

/// Wheel W_n of order n: rim cycle 1..n-1 plus hub n joined to every rim
/// vertex.
pub fn wheel(n: usize) -> Result<SimpleGraph> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "wheel needs n >= 4, got {n}"
        )));
    }
    let mut g = SimpleGraph::new(numbered_labels(n))?;
    for i in 1..n - 1 {
        g.add_edge(&i.to_string(), &(i + 1).to_string())?;
    }
    g.add_edge(&(n - 1).to_string(), "1")?;
    for i in 1..n {
        g.add_edge(&i.to_string(), &n.to_string())?;
    }
    Ok(g)
}

/// Helm on 2n+1 vertices: rim cycle 1..n, hub n+1 joined to the rim, and one
/// pendant n+1+i hanging off each rim vertex i.
pub fn helm(n: usize) -> Result<SimpleGraph> {
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "helm needs n >= 3, got {n}"
        )));
    }
    let mut g = SimpleGraph::new(numbered_labels(2 * n + 1))?;
    for i in 1..n {
        g.add_edge(&i.to_string(), &(i + 1).to_string())?;
    }
    g.add_edge(&n.to_string(), "1")?;
    let hub = (n + 1).to_string();
    for i in 1..=n {
        g.add_edge(&i.to_string(), &hub)?;
    }
    for i in 1..=n {
        g.add_edge(&i.to_string(), &(n + 1 + i).to_string())?;
    }
    Ok(g)
}

/// The circulant-capped prism on 3n vertices: the Cartesian product of the
/// path on {0..n-1} with a triangle on Z_3, plus the three wrap edges
/// (0, j) - (n-1, -j mod 3). Vertices are labeled "v{i},{j}" and flattened
/// row-major (i major, j minor).
pub fn kss_graph(n: usize) -> Result<SimpleGraph> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "kss graph needs n >= 4, got {n}"
        )));
    }
    let label = |i: usize, j: usize| format!("v{i},{j}");
    let labels: Vec<String> = (0..n)
        .flat_map(|i| (0..3).map(move |j| label(i, j)))
        .collect();
    let mut g = SimpleGraph::new(labels)?;
    for i in 0..n {
        for j in 0..3 {
            if i + 1 < n {
                g.add_edge(&label(i, j), &label(i + 1, j))?;
            }
            for k in j + 1..3 {
                g.add_edge(&label(i, j), &label(i, k))?;
            }
        }
    }
    for j in 0..3 {
        g.add_edge(&label(0, j), &label(n - 1, (3 - j) % 3))?;
    }
    Ok(g)
}
