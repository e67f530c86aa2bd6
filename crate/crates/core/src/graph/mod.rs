//! Finite simplicial graphs with abelian vertex labels.
//!
//! A `LabeledGraph` is the presentation object of a graph product: vertices
//! carry finitely-generated abelian groups, edges declare that the two
//! vertex groups commute. Besides subgraphs, cliques and stars, this module
//! computes the equivalence relation that identifies vertices lying in
//! exactly the same maximal cliques, the T0 property, and the T0-quotient
//! that collapses each equivalence class to one vertex labeled by the
//! direct product of its members.

mod format;
mod iso;

pub use iso::{canonical_form, labeled_iso, IsoWitness};

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::abelian::{AbelianLabel, CyclicFactor};
use crate::error::{Error, Result};

/// A finite simplicial graph (no loops, no multi-edges) with an abelian
/// group label on each vertex. Vertex order is the declaration order and is
/// preserved by the structural operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    names: Vec<String>,
    labels: Vec<AbelianLabel>,
    adj: Vec<BTreeSet<usize>>,
}

/// Vertex names come from the graph file grammar.
pub fn is_valid_vertex_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '.')
}

impl LabeledGraph {
    /// Build a graph from labeled vertices and an edge list.
    pub fn new(
        vertices: Vec<(String, AbelianLabel)>,
        edges: &[(String, String)],
    ) -> Result<Self> {
        let mut g = LabeledGraph::empty();
        for (name, label) in vertices {
            g.push_vertex(name, label)?;
        }
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        Ok(g)
    }

    /// The graph with no vertices. It presents the trivial group and shows
    /// up as a torsion or Artin part; the file format does not accept it.
    pub fn empty() -> Self {
        LabeledGraph {
            names: Vec::new(),
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    pub(crate) fn push_vertex(&mut self, name: String, label: AbelianLabel) -> Result<()> {
        if !is_valid_vertex_name(&name) {
            return Err(Error::InvalidVertexName(name));
        }
        if self.index_of(&name).is_some() {
            return Err(Error::DuplicateVertex(name));
        }
        self.names.push(name);
        self.labels.push(label);
        self.adj.push(BTreeSet::new());
        Ok(())
    }

    pub(crate) fn push_edge(&mut self, u: &str, v: &str) -> Result<()> {
        let ui = self.require(u)?;
        let vi = self.require(v)?;
        if ui == vi {
            return Err(Error::SelfLoop(u.to_string()));
        }
        if self.adj[ui].contains(&vi) {
            return Err(Error::DuplicateEdge(u.to_string(), v.to_string()));
        }
        self.adj[ui].insert(vi);
        self.adj[vi].insert(ui);
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Vertex names in declaration order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name_at(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn label_at(&self, idx: usize) -> &AbelianLabel {
        &self.labels[idx]
    }

    pub fn label(&self, name: &str) -> Result<&AbelianLabel> {
        Ok(&self.labels[self.require(name)?])
    }

    pub(crate) fn adjacent_idx(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    pub fn adjacent(&self, u: &str, v: &str) -> Result<bool> {
        Ok(self.adjacent_idx(self.require(u)?, self.require(v)?))
    }

    pub(crate) fn neighbors_idx(&self, u: usize) -> &BTreeSet<usize> {
        &self.adj[u]
    }

    pub fn degree(&self, name: &str) -> Result<usize> {
        Ok(self.adj[self.require(name)?].len())
    }

    /// Edges as name pairs, each pair and the list sorted lexicographically.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        for u in 0..self.names.len() {
            for &v in &self.adj[u] {
                if u < v {
                    let (a, b) = order_pair(&self.names[u], &self.names[v]);
                    out.push((a, b));
                }
            }
        }
        out.sort();
        out
    }

    /// The order of the vertex group if it is cyclic. Words are only
    /// defined over graphs whose labels are all cyclic.
    pub(crate) fn vertex_order(&self, idx: usize) -> Result<CyclicFactor> {
        self.labels[idx]
            .cyclic_order()
            .ok_or_else(|| Error::NonCyclicVertex {
                vertex: self.names[idx].clone(),
                label: self.labels[idx].to_string(),
            })
    }

    /// Check that every label is a single directly-indecomposable cyclic
    /// factor, the standing hypothesis of the torsion/Artin machinery.
    pub fn require_indecomposable_labels(&self) -> Result<()> {
        for (name, label) in self.names.iter().zip(&self.labels) {
            if !label.is_indecomposable() {
                return Err(Error::NotIndecomposable {
                    vertex: name.clone(),
                    label: label.to_string(),
                });
            }
        }
        Ok(())
    }

    /// Induced subgraph on a set of indices; keeps the parent vertex order.
    /// Unlike `full_subgraph` this accepts the empty set.
    pub(crate) fn induced_by_indices(&self, keep: &BTreeSet<usize>) -> LabeledGraph {
        let mut g = LabeledGraph::empty();
        let mut old_to_new = vec![usize::MAX; self.names.len()];
        for (&old, new) in keep.iter().zip(0..) {
            old_to_new[old] = new;
            g.names.push(self.names[old].clone());
            g.labels.push(self.labels[old].clone());
            g.adj.push(BTreeSet::new());
        }
        for &old in keep {
            for &nb in &self.adj[old] {
                if keep.contains(&nb) {
                    g.adj[old_to_new[old]].insert(old_to_new[nb]);
                }
            }
        }
        g
    }

    /// The full (induced) subgraph on a non-empty vertex set: all edges of
    /// the graph with both ends in the set.
    pub fn full_subgraph(&self, vs: &BTreeSet<String>) -> Result<LabeledGraph> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep = BTreeSet::new();
        for name in vs {
            keep.insert(self.require(name)?);
        }
        Ok(self.induced_by_indices(&keep))
    }

    pub(crate) fn is_clique_indices(&self, vs: &BTreeSet<usize>) -> bool {
        let v: Vec<usize> = vs.iter().copied().collect();
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if !self.adjacent_idx(v[i], v[j]) {
                    return false;
                }
            }
        }
        true
    }

    /// All inclusion-maximal cliques, Bron-Kerbosch with pivoting. Every
    /// vertex belongs to at least one clique (isolated vertices form
    /// singleton cliques). Cliques are returned sorted.
    pub fn maximal_cliques(&self) -> Vec<BTreeSet<String>> {
        self.maximal_cliques_indices()
            .into_iter()
            .map(|c| c.iter().map(|&i| self.names[i].clone()).collect())
            .collect()
    }

    pub(crate) fn maximal_cliques_indices(&self) -> Vec<BTreeSet<usize>> {
        let mut out: Vec<BTreeSet<usize>> = Vec::new();
        let p: BTreeSet<usize> = (0..self.names.len()).collect();
        self.bron_kerbosch(BTreeSet::new(), p, BTreeSet::new(), &mut out);
        out.sort_by(|a, b| {
            let av: Vec<usize> = a.iter().copied().collect();
            let bv: Vec<usize> = b.iter().copied().collect();
            av.cmp(&bv)
        });
        out
    }

    fn bron_kerbosch(
        &self,
        r: BTreeSet<usize>,
        mut p: BTreeSet<usize>,
        mut x: BTreeSet<usize>,
        out: &mut Vec<BTreeSet<usize>>,
    ) {
        if p.is_empty() && x.is_empty() {
            if !r.is_empty() {
                out.push(r);
            }
            return;
        }
        // pivot: vertex of P union X with most neighbours in P
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| self.adj[u].intersection(&p).count())
            .unwrap();
        let candidates: Vec<usize> = p.difference(&self.adj[pivot]).copied().collect();
        for v in candidates {
            let mut r2 = r.clone();
            r2.insert(v);
            let p2 = p.intersection(&self.adj[v]).copied().collect();
            let x2 = x.intersection(&self.adj[v]).copied().collect();
            self.bron_kerbosch(r2, p2, x2, out);
            p.remove(&v);
            x.insert(v);
        }
    }

    /// `vs` together with every vertex adjacent to all of `vs`. Defined for
    /// clique-spanning sets only; this is the star of a commuting-product
    /// support and it generates the centralizer of such an element.
    pub fn star_of(&self, vs: &BTreeSet<String>) -> Result<BTreeSet<String>> {
        if vs.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut ids = BTreeSet::new();
        for name in vs {
            ids.insert(self.require(name)?);
        }
        if !self.is_clique_indices(&ids) {
            let joined = vs.iter().cloned().collect::<Vec<_>>().join(", ");
            return Err(Error::NotAClique(joined));
        }
        let mut star = ids.clone();
        for w in 0..self.names.len() {
            if ids.contains(&w) {
                continue;
            }
            if ids.iter().all(|&v| self.adjacent_idx(v, w)) {
                star.insert(w);
            }
        }
        Ok(star.iter().map(|&i| self.names[i].clone()).collect())
    }

    /// The partition of the vertices where two vertices share a class iff
    /// they belong to exactly the same maximal cliques.
    pub fn t0_classes(&self) -> VertexPartition {
        let classes = self
            .t0_classes_indices()
            .into_iter()
            .map(|c| c.iter().map(|&i| self.names[i].clone()).collect())
            .collect();
        VertexPartition { classes }
    }

    fn t0_classes_indices(&self) -> Vec<Vec<usize>> {
        let cliques = self.maximal_cliques_indices();
        // membership signature per vertex
        let signature = |v: usize| -> Vec<usize> {
            cliques
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(&v))
                .map(|(i, _)| i)
                .collect()
        };
        let mut classes: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for v in 0..self.names.len() {
            let sig = signature(v);
            match classes.iter_mut().find(|(s, _)| *s == sig) {
                Some((_, members)) => members.push(v),
                None => classes.push((sig, vec![v])),
            }
        }
        // deterministic: order classes by their least member's name
        let mut out: Vec<Vec<usize>> = classes.into_iter().map(|(_, m)| m).collect();
        for class in &mut out {
            class.sort_by(|&a, &b| self.names[a].cmp(&self.names[b]));
        }
        out.sort_by(|a, b| self.names[a[0]].cmp(&self.names[b[0]]));
        out
    }

    /// True iff every class of `t0_classes` is a singleton.
    pub fn is_t0(&self) -> bool {
        self.t0_classes().classes.iter().all(|c| c.len() == 1)
    }

    /// Collapse each equivalence class to a single vertex. The class vertex
    /// is named after its lexicographically least member and labeled by the
    /// direct product of the member labels, stored in invariant-factor
    /// form. Distinct classes are adjacent iff their members are adjacent
    /// in the original graph. The result satisfies the T0 property.
    pub fn t0_quotient(&self) -> Result<LabeledGraph> {
        let classes = self.t0_classes_indices();
        let mut g = LabeledGraph::empty();
        for class in &classes {
            let product =
                AbelianLabel::direct_product(class.iter().map(|&v| &self.labels[v]))?;
            g.push_vertex(
                self.names[class[0]].clone(),
                product.to_invariant_factor_form()?,
            )?;
        }
        for i in 0..classes.len() {
            for j in i + 1..classes.len() {
                let adjacent = self.adjacent_idx(classes[i][0], classes[j][0]);
                // every cross-class pair must agree, since class members share
                // their maximal-clique memberships
                for &u in &classes[i] {
                    for &v in &classes[j] {
                        assert_eq!(
                            self.adjacent_idx(u, v),
                            adjacent,
                            "inconsistent adjacency between T0 classes"
                        );
                    }
                }
                if adjacent {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        Ok(g)
    }

    /// Shared handle used as the context of words.
    pub fn into_context(self) -> Arc<LabeledGraph> {
        Arc::new(self)
    }
}

/// Serialization in the graph file format: vertex lines in declaration
/// order with canonical label text, then edge lines sorted.
impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, label) in self.names.iter().zip(&self.labels) {
            writeln!(f, "vertex {name} {label}")?;
        }
        for (u, v) in self.edges() {
            writeln!(f, "edge {u} {v}")?;
        }
        Ok(())
    }
}

fn order_pair(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Disjoint non-empty vertex classes covering the whole vertex set; each
/// class spans a complete subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<String>>,
}

impl VertexPartition {
    pub fn classes(&self) -> &[Vec<String>] {
        &self.classes
    }

    pub fn class_of(&self, name: &str) -> Option<&[String]> {
        self.classes
            .iter()
            .find(|c| c.iter().any(|n| n == name))
            .map(|c| c.as_slice())
    }

    /// Check the partition invariants against its graph: disjoint classes
    /// covering all vertices, each spanning a clique.
    pub fn verify(&self, g: &LabeledGraph) -> bool {
        let mut seen = BTreeSet::new();
        for class in &self.classes {
            if class.is_empty() {
                return false;
            }
            for name in class {
                if g.index_of(name).is_none() || !seen.insert(name.clone()) {
                    return false;
                }
            }
            let ids: BTreeSet<usize> = class.iter().map(|n| g.index_of(n).unwrap()).collect();
            if !g.is_clique_indices(&ids) {
                return false;
            }
        }
        seen.len() == g.vertex_count()
    }
}
