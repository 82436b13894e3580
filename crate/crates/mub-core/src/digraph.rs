//! The containment digraph of a binary matrix, and induced sub-posets.
//!
//! Vertices are the distinct nonempty column supports; there is an arc
//! `u -> v` exactly when `u` is a proper subset of `v`. The arc set is its
//! own transitive closure, so the digraph is a strict poset in arc form.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::Error;
use crate::matrix::BinaryMatrix;
use crate::rowset::RowSet;

#[derive(Clone, Debug)]
pub struct Vertex {
    support: RowSet,
    /// Columns of the source matrix sharing this support.
    columns: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct ContainmentDigraph {
    num_rows: usize,
    vertices: Vec<Vertex>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    zero_columns_dropped: usize,
}

impl ContainmentDigraph {
    /// Builds the digraph. All-zero columns are dropped (and counted); a
    /// matrix with no nonzero column has no digraph and is an error.
    ///
    /// Vertex ids follow the canonical [`RowSet`] order, so every arc goes
    /// from a lower id to a higher id.
    pub fn from_matrix(matrix: &BinaryMatrix) -> Result<Self, Error> {
        let mut groups: BTreeMap<RowSet, Vec<usize>> = BTreeMap::new();
        let mut zero_columns_dropped = 0;
        for c in 0..matrix.cols() {
            let support = matrix.support_set(c);
            if support.is_empty() {
                zero_columns_dropped += 1;
            } else {
                groups.entry(support).or_default().push(c);
            }
        }
        if groups.is_empty() {
            return Err(Error::EmptyPoset);
        }
        let vertices: Vec<Vertex> = groups
            .into_iter()
            .map(|(support, columns)| Vertex { support, columns })
            .collect();
        let n = vertices.len();
        let mut out = alloc::vec![Vec::new(); n];
        let mut inn = alloc::vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                // Canonical order sorts by cardinality first, so a subset
                // relation between distinct sets can only point upward.
                if vertices[u].support.is_proper_subset(&vertices[v].support) {
                    out[u].push(v);
                    inn[v].push(u);
                }
            }
        }
        Ok(Self {
            num_rows: matrix.rows(),
            vertices,
            out,
            inn,
            zero_columns_dropped,
        })
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn num_rows(&self) -> usize {
        self.num_rows
    }

    pub fn zero_columns_dropped(&self) -> usize {
        self.zero_columns_dropped
    }

    pub fn support(&self, v: usize) -> &RowSet {
        &self.vertices[v].support
    }

    /// Vertex weight: the size of its support set.
    pub fn weight(&self, v: usize) -> u64 {
        self.vertices[v].support.len() as u64
    }

    /// How many matrix columns share this vertex's support.
    pub fn multiplicity(&self, v: usize) -> usize {
        self.vertices[v].columns.len()
    }

    pub fn columns(&self, v: usize) -> &[usize] {
        &self.vertices[v].columns
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        u < v && self.vertices[u].support.is_proper_subset(&self.vertices[v].support)
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    /// All arcs, ascending by tail then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    /// Vertices with no outgoing arc (maximal supports).
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.out[v].is_empty()).collect()
    }

    /// Vertices with no incoming arc (minimal supports).
    pub fn sources(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.inn[v].is_empty()).collect()
    }

    /// Looks up the vertex whose support equals `support`, if any.
    pub fn vertex_by_support(&self, support: &RowSet) -> Option<usize> {
        self.vertices
            .binary_search_by(|vert| vert.support.cmp(support))
            .ok()
    }

    /// The sub-poset on vertices whose support contains row `r`. Containment
    /// is preserved on any vertex subset, so this is again a strict poset.
    pub fn principal_subposet(&self, row: usize) -> Result<SubPoset<'_>, Error> {
        if row >= self.num_rows {
            return Err(Error::RowOutOfRange {
                row,
                num_rows: self.num_rows,
            });
        }
        let verts: Vec<usize> = (0..self.len())
            .filter(|&v| self.vertices[v].support.contains(row))
            .collect();
        Ok(SubPoset::new(self, verts))
    }
}

/// A view of the digraph induced by a vertex subset, with local adjacency.
/// Local ids are positions in the ascending list of member vertex ids, so
/// local arcs also go from lower to higher local id.
#[derive(Clone, Debug)]
pub struct SubPoset<'a> {
    dig: &'a ContainmentDigraph,
    verts: Vec<usize>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

impl<'a> SubPoset<'a> {
    /// Builds a view on `verts`, which must be ascending and duplicate-free.
    pub fn new(dig: &'a ContainmentDigraph, verts: Vec<usize>) -> Self {
        assert!(verts.windows(2).all(|w| w[0] < w[1]), "vertex list must be ascending");
        assert!(verts.last().is_none_or(|&v| v < dig.len()));
        let n = verts.len();
        let mut out = alloc::vec![Vec::new(); n];
        let mut inn = alloc::vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                if dig.is_arc(verts[i], verts[j]) {
                    out[i].push(j);
                    inn[j].push(i);
                }
            }
        }
        Self { dig, verts, out, inn }
    }

    /// The full digraph as a sub-poset; local ids coincide with vertex ids.
    pub fn full(dig: &'a ContainmentDigraph) -> Self {
        Self::new(dig, (0..dig.len()).collect())
    }

    pub fn digraph(&self) -> &'a ContainmentDigraph {
        self.dig
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn parent_id(&self, local: usize) -> usize {
        self.verts[local]
    }

    pub fn parent_ids(&self) -> &[usize] {
        &self.verts
    }

    pub fn local_id(&self, parent: usize) -> Option<usize> {
        self.verts.binary_search(&parent).ok()
    }

    pub fn support(&self, local: usize) -> &RowSet {
        self.dig.support(self.verts[local])
    }

    pub fn weight(&self, local: usize) -> u64 {
        self.dig.weight(self.verts[local])
    }

    pub fn out_neighbors(&self, local: usize) -> &[usize] {
        &self.out[local]
    }

    pub fn in_neighbors(&self, local: usize) -> &[usize] {
        &self.inn[local]
    }

    pub fn is_arc(&self, u: usize, v: usize) -> bool {
        u < v && self.dig.is_arc(self.verts[u], self.verts[v])
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(Vec::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, heads)| heads.iter().map(move |&v| (u, v)))
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.out[v].is_empty()).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.inn[v].is_empty()).collect()
    }

    pub fn is_antichain(&self, locals: &[usize]) -> bool {
        for (k, &u) in locals.iter().enumerate() {
            for &v in &locals[k + 1..] {
                let (a, b) = if u < v { (u, v) } else { (v, u) };
                if a == b || self.is_arc(a, b) {
                    return false;
                }
            }
        }
        true
    }
}
