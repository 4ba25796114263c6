//! Weighted triangulations.
//!
//! A [`WeightedTriangulation`] is a finite 2-dimensional simplicial complex:
//! vertices with weight `c`, edges with weight `r` and triangular faces with
//! weight `s`. Each edge is stored once with `tail < head`; each face is
//! stored once, rotated so that its smallest vertex comes first, and the
//! stored order defines its positive orientation. Vertices are indexed
//! `0..n` in increasing [`VertexId`] order, so index order and id order agree.
//!
//! Not every 3-cycle has to be a face.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// External vertex identifier. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Self {
        VertexId(id.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

/// An edge with a chosen direction, in vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedEdge {
    pub tail: usize,
    pub head: usize,
}

impl OrientedEdge {
    pub fn new(tail: usize, head: usize) -> Self {
        OrientedEdge { tail, head }
    }

    pub fn reversed(self) -> Self {
        OrientedEdge {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// An ordered vertex triple. Cyclic rotations describe the same orientation,
/// transpositions the opposite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrientedFace(pub [usize; 3]);

impl OrientedFace {
    pub fn sorted(&self) -> [usize; 3] {
        let mut v = self.0;
        v.sort_unstable();
        v
    }

    /// Rotation that puts the smallest vertex first; keeps the orientation.
    pub fn rotated_to_min(&self) -> OrientedFace {
        let [a, b, c] = self.0;
        if a <= b && a <= c {
            OrientedFace([a, b, c])
        } else if b <= a && b <= c {
            OrientedFace([b, c, a])
        } else {
            OrientedFace([c, a, b])
        }
    }

    /// `+1` when `self` and `other` span the same face with the same
    /// orientation, `-1` when opposite, `None` for different vertex sets.
    pub fn orientation_relative_to(&self, other: &OrientedFace) -> Option<f64> {
        let [a, b, c] = other.0;
        let even = [[a, b, c], [b, c, a], [c, a, b]];
        let odd = [[b, a, c], [a, c, b], [c, b, a]];
        if even.contains(&self.0) {
            Some(1.0)
        } else if odd.contains(&self.0) {
            Some(-1.0)
        } else {
            None
        }
    }
}

/// A neighbouring cell reached from a vertex or an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Incidence {
    /// The neighbour vertex, or the apex of a face over an edge.
    pub vertex: usize,
    /// Index of the edge (for vertex neighbours) or face (for edge apexes).
    pub cell: usize,
}

/// A face over a canonical edge `(x, y)` with apex `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeFace {
    pub apex: usize,
    pub face: usize,
    /// Orientation of `(x, y, t)` relative to the stored face.
    pub sign: f64,
}

/// Side of a face: canonical edge index and the sign of the face's
/// traversal direction relative to that edge.
pub type FaceSide = (usize, f64);

/// Rule broken by a cell of a triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    FaceNotCycle,
    NonPositiveWeight,
    Disconnected,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::FaceNotCycle => "face not a 3-cycle",
            Rule::NonPositiveWeight => "non-positive weight",
            Rule::Disconnected => "disconnected",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub cell: String,
    pub rule: Rule,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.cell, self.rule)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedTriangulation {
    ids: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    c: Vec<f64>,
    edges: Vec<[usize; 2]>,
    r: Vec<f64>,
    edge_index: HashMap<[usize; 2], usize>,
    faces: Vec<[usize; 3]>,
    s: Vec<f64>,
    face_index: HashMap<[usize; 3], usize>,
    neighbors: Vec<Vec<Incidence>>,
    edge_faces: Vec<Vec<EdgeFace>>,
    vertex_faces: Vec<Vec<usize>>,
    face_sides: Vec<Option<[FaceSide; 3]>>,
}

impl WeightedTriangulation {
    pub fn builder() -> TriangulationBuilder {
        TriangulationBuilder::default()
    }

    pub fn num_vertices(&self) -> usize {
        self.ids.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    /// Number of cells of the given degree (0, 1 or 2).
    pub fn num_cells(&self, degree: usize) -> usize {
        match degree {
            0 => self.num_vertices(),
            1 => self.num_edges(),
            2 => self.num_faces(),
            _ => panic!("no cells of degree {degree} in a 2-complex"),
        }
    }

    pub fn total_cells(&self) -> usize {
        self.num_vertices() + self.num_edges() + self.num_faces()
    }

    /// Weights `c`, `r` or `s` for degree 0, 1 or 2, in canonical cell order.
    pub fn cell_weights(&self, degree: usize) -> &[f64] {
        match degree {
            0 => &self.c,
            1 => &self.r,
            2 => &self.s,
            _ => panic!("no cells of degree {degree} in a 2-complex"),
        }
    }

    pub fn vertex_id(&self, x: usize) -> &VertexId {
        &self.ids[x]
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.ids
    }

    pub fn vertex_index(&self, id: &VertexId) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn require_vertex(&self, id: &VertexId) -> Result<usize> {
        self.vertex_index(id).ok_or_else(|| Error::UnknownVertex(id.clone()))
    }

    pub fn vertex_weight(&self, x: usize) -> f64 {
        self.c[x]
    }

    pub fn edge_weight(&self, e: usize) -> f64 {
        self.r[e]
    }

    pub fn face_weight(&self, f: usize) -> f64 {
        self.s[f]
    }

    /// Canonical edges `[tail, head]` with `tail < head`.
    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    /// Canonical faces, smallest vertex first.
    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    /// Neighbours of `x` with the connecting edge, in increasing vertex order.
    pub fn neighbors(&self, x: usize) -> &[Incidence] {
        &self.neighbors[x]
    }

    /// The faces over canonical edge `e`, i.e. the set F_xy with face indices.
    pub fn edge_faces(&self, e: usize) -> &[EdgeFace] {
        &self.edge_faces[e]
    }

    /// Faces having `x` as a vertex. Each one corresponds to exactly one
    /// edge of F_x (the side opposite to `x`).
    pub fn vertex_faces(&self, x: usize) -> &[usize] {
        &self.vertex_faces[x]
    }

    /// Canonical index of the edge `{x, y}` and `+1` if `(x, y)` is its
    /// stored orientation, `-1` otherwise.
    pub fn edge_between(&self, x: usize, y: usize) -> Option<(usize, f64)> {
        let key = if x < y { [x, y] } else { [y, x] };
        self.edge_index.get(&key).map(|&e| (e, if x < y { 1.0 } else { -1.0 }))
    }

    /// Canonical index of the face `{x, y, z}` and the orientation of
    /// `(x, y, z)` relative to the stored one.
    pub fn face_between(&self, x: usize, y: usize, z: usize) -> Option<(usize, f64)> {
        let probe = OrientedFace([x, y, z]);
        let f = *self.face_index.get(&probe.sorted())?;
        let sign = probe.orientation_relative_to(&OrientedFace(self.faces[f]))?;
        Some((f, sign))
    }

    /// Sides `(a,b)`, `(b,c)`, `(c,a)` of stored face `[a,b,c]`.
    ///
    /// Panics if a side is missing from the edge set; [`validate`] reports
    /// such faces and [`TriangulationBuilder::build`] rejects them.
    ///
    /// [`validate`]: WeightedTriangulation::validate
    pub fn face_sides(&self, f: usize) -> [FaceSide; 3] {
        self.face_sides[f]
            .unwrap_or_else(|| panic!("face ({}) is not bounded by edges of the complex", self.face_label(f)))
    }

    pub fn edge_label(&self, e: usize) -> String {
        let [u, v] = self.edges[e];
        format!("{},{}", self.ids[u], self.ids[v])
    }

    pub fn face_label(&self, f: usize) -> String {
        let [a, b, c] = self.faces[f];
        format!("{},{},{}", self.ids[a], self.ids[b], self.ids[c])
    }

    /// deg_V(x) = (1/c(x)) Σ_{y~x} r(x,y).
    pub fn vertex_degree(&self, x: usize) -> f64 {
        self.neighbors[x].iter().fold(0.0, |acc, n| acc + self.r[n.cell]) / self.c[x]
    }

    /// deg_E(e) = (1/r(e)) Σ_{z ∈ F_e} s(e,z). Zero when no face contains `e`.
    pub fn edge_degree(&self, e: usize) -> f64 {
        self.edge_faces[e].iter().fold(0.0, |acc, ef| acc + self.s[ef.face]) / self.r[e]
    }

    pub fn degree_vertex(&self, x: &VertexId) -> Result<f64> {
        Ok(self.vertex_degree(self.require_vertex(x)?))
    }

    /// Weighted degree of an oriented edge; independent of the orientation.
    pub fn degree_edge(&self, tail: &VertexId, head: &VertexId) -> Result<f64> {
        let (x, y) = (self.require_vertex(tail)?, self.require_vertex(head)?);
        let (e, _) = self
            .edge_between(x, y)
            .ok_or_else(|| Error::NotAdjacent(tail.to_string(), head.to_string()))?;
        Ok(self.edge_degree(e))
    }

    /// Breadth-first distances from `origin`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, origin: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.num_vertices()];
        let mut queue = VecDeque::new();
        dist[origin] = Some(0);
        queue.push_back(origin);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for n in &self.neighbors[x] {
                if dist[n.vertex].is_none() {
                    dist[n.vertex] = Some(d + 1);
                    queue.push_back(n.vertex);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() == 0 || self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Every violated invariant, one entry per offending cell and rule.
    /// Empty iff the complex is a valid weighted triangulation.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (x, &w) in self.c.iter().enumerate() {
            if !(w > 0.0 && w.is_finite()) {
                out.push(Violation {
                    cell: format!("vertex {}", self.ids[x]),
                    rule: Rule::NonPositiveWeight,
                });
            }
        }
        for (e, &w) in self.r.iter().enumerate() {
            if !(w > 0.0 && w.is_finite()) {
                out.push(Violation {
                    cell: format!("edge {}", self.edge_label(e)),
                    rule: Rule::NonPositiveWeight,
                });
            }
        }
        for f in 0..self.num_faces() {
            if self.face_sides[f].is_none() {
                out.push(Violation {
                    cell: format!("face {}", self.face_label(f)),
                    rule: Rule::FaceNotCycle,
                });
            }
            let w = self.s[f];
            if !(w > 0.0 && w.is_finite()) {
                out.push(Violation {
                    cell: format!("face {}", self.face_label(f)),
                    rule: Rule::NonPositiveWeight,
                });
            }
        }
        if !self.is_connected() {
            let dist = self.bfs_distances(0);
            let first = dist.iter().position(Option::is_none).unwrap();
            out.push(Violation {
                cell: format!("vertex {}", self.ids[first]),
                rule: Rule::Disconnected,
            });
        }
        out
    }
}

/// Collects cells by id and produces a canonical [`WeightedTriangulation`].
///
/// Edges may be given in either orientation; faces in any order of their
/// vertices (the given order fixes the positive orientation).
#[derive(Debug, Clone, Default)]
pub struct TriangulationBuilder {
    vertices: Vec<(VertexId, f64)>,
    edges: Vec<(VertexId, VertexId, f64)>,
    faces: Vec<([VertexId; 3], f64)>,
}

impl TriangulationBuilder {
    pub fn vertex(&mut self, id: impl Into<VertexId>, c: f64) -> &mut Self {
        self.vertices.push((id.into(), c));
        self
    }

    pub fn edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>, r: f64) -> &mut Self {
        self.edges.push((u.into(), v.into(), r));
        self
    }

    pub fn face(
        &mut self,
        a: impl Into<VertexId>,
        b: impl Into<VertexId>,
        c: impl Into<VertexId>,
        s: f64,
    ) -> &mut Self {
        self.faces.push(([a.into(), b.into(), c.into()], s));
        self
    }

    /// Builds and rejects any complex with [`Violation`]s.
    pub fn build(&self) -> Result<WeightedTriangulation> {
        let t = self.build_unchecked()?;
        let violations = t.validate();
        if violations.is_empty() {
            Ok(t)
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Builds without running [`WeightedTriangulation::validate`]. Only
    /// structural problems (unknown or duplicate cells, loops) are errors.
    /// Operators may panic on a complex that has violations.
    pub fn build_unchecked(&self) -> Result<WeightedTriangulation> {
        let mut vertices = self.vertices.clone();
        vertices.sort_by(|a, b| a.0.cmp(&b.0));
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, (id, _)) in vertices.iter().enumerate() {
            if id.0.is_empty() || id.0.contains(',') {
                return Err(Error::InvalidVertexId(id.0.clone()));
            }
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateVertex(id.clone()));
            }
        }
        let lookup = |id: &VertexId| index.get(id).copied().ok_or_else(|| Error::UnknownVertex(id.clone()));

        let mut edges = Vec::with_capacity(self.edges.len());
        for (u, v, r) in &self.edges {
            let (a, b) = (lookup(u)?, lookup(v)?);
            if a == b {
                return Err(Error::Loop(u.clone()));
            }
            edges.push(([a.min(b), a.max(b)], *r));
        }
        edges.sort_by_key(|e| e.0);
        for pair in edges.windows(2) {
            if pair[0].0 == pair[1].0 {
                let [a, b] = pair[0].0;
                return Err(Error::DuplicateEdge(vertices[a].0.clone(), vertices[b].0.clone()));
            }
        }

        let mut faces = Vec::with_capacity(self.faces.len());
        for (verts, s) in &self.faces {
            let idx = [lookup(&verts[0])?, lookup(&verts[1])?, lookup(&verts[2])?];
            let face = OrientedFace(idx);
            let sorted = face.sorted();
            if sorted[0] == sorted[1] || sorted[1] == sorted[2] {
                return Err(Error::DegenerateFace(
                    verts.iter().map(|v| v.as_str()).collect::<Vec<_>>().join(","),
                ));
            }
            faces.push((face.rotated_to_min().0, *s));
        }
        faces.sort_by_key(|f| f.0);

        let ids: Vec<VertexId> = vertices.iter().map(|(id, _)| id.clone()).collect();
        let c = vertices.iter().map(|&(_, c)| c).collect();
        let r = edges.iter().map(|&(_, r)| r).collect();
        let s = faces.iter().map(|&(_, s)| s).collect();
        let edges: Vec<[usize; 2]> = edges.into_iter().map(|(e, _)| e).collect();
        let faces: Vec<[usize; 3]> = faces.into_iter().map(|(f, _)| f).collect();
        Self::assemble(ids, index, c, edges, r, faces, s)
    }

    fn assemble(
        ids: Vec<VertexId>,
        index: HashMap<VertexId, usize>,
        c: Vec<f64>,
        edges: Vec<[usize; 2]>,
        r: Vec<f64>,
        faces: Vec<[usize; 3]>,
        s: Vec<f64>,
    ) -> Result<WeightedTriangulation> {
        let n = ids.len();
        let edge_index: HashMap<[usize; 2], usize> = edges.iter().enumerate().map(|(e, &k)| (k, e)).collect();

        let mut neighbors = vec![Vec::new(); n];
        for (e, &[u, v]) in edges.iter().enumerate() {
            neighbors[u].push(Incidence { vertex: v, cell: e });
            neighbors[v].push(Incidence { vertex: u, cell: e });
        }
        for list in &mut neighbors {
            list.sort_by_key(|i| i.vertex);
        }

        let mut face_index = HashMap::with_capacity(faces.len());
        let mut edge_faces = vec![Vec::new(); edges.len()];
        let mut vertex_faces = vec![Vec::new(); n];
        let mut face_sides = Vec::with_capacity(faces.len());
        for (f, &face) in faces.iter().enumerate() {
            let oriented = OrientedFace(face);
            if face_index.insert(oriented.sorted(), f).is_some() {
                let label = face.map(|x| ids[x].as_str().to_owned()).join(",");
                return Err(Error::DuplicateFace(label));
            }
            for &x in &face {
                vertex_faces[x].push(f);
            }
            let [a, b, cc] = face;
            let side = |x: usize, y: usize| {
                let key = if x < y { [x, y] } else { [y, x] };
                edge_index.get(&key).map(|&e| (e, if x < y { 1.0 } else { -1.0 }))
            };
            let sides = [side(a, b), side(b, cc), side(cc, a)];
            for (k, sd) in sides.iter().enumerate() {
                if let Some((e, sign)) = *sd {
                    // (x, y, apex) traverses the face forward iff the side
                    // (x, y) is traversed forward, i.e. sign == +1.
                    let apex = face[(k + 2) % 3];
                    edge_faces[e].push(EdgeFace { apex, face: f, sign });
                }
            }
            face_sides.push(match sides {
                [Some(p), Some(q), Some(w)] => Some([p, q, w]),
                _ => None,
            });
        }
        for list in &mut edge_faces {
            list.sort_by_key(|ef| ef.apex);
        }

        Ok(WeightedTriangulation {
            ids,
            index,
            c,
            edges,
            r,
            edge_index,
            faces,
            s,
            face_index,
            neighbors,
            edge_faces,
            vertex_faces,
            face_sides,
        })
    }
}
