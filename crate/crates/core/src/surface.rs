//! Triangulations of connected closed surfaces.
//!
//! A [`Triangulation`] is built from a list of vertex triples and validated
//! against the closed-surface conditions: every face has three distinct
//! vertices, every edge lies in exactly two faces, no two faces share all
//! three vertices, the 1-skeleton is connected and every vertex link is a
//! single cycle.
//!
//! Labels are interned in ascending text order, so a [`VertexId`] compares
//! exactly like the label it stands for. Faces and edges are stored sorted,
//! which makes every enumeration built on top of this module deterministic.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Opaque vertex name: nonempty, without whitespace or `#`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexLabel(String);

impl VertexLabel {
    pub fn new(text: impl Into<String>) -> Result<Self, SurfaceError> {
        let text = text.into();
        if text.is_empty() || text.chars().any(|c| c.is_whitespace() || c == '#') {
            return Err(SurfaceError::InvalidLabel(text));
        }
        Ok(Self(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::str::FromStr for VertexLabel {
    type Err = SurfaceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::new(s)
    }
}

/// Unordered pair of distinct vertices, smaller label first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexLabel,
    hi: VertexLabel,
}

impl Edge {
    pub fn new(a: VertexLabel, b: VertexLabel) -> Result<Self, SurfaceError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Ok(Self { lo: b, hi: a }),
            std::cmp::Ordering::Equal => Err(SurfaceError::DegenerateEdge(a)),
        }
    }

    pub fn endpoints(&self) -> (&VertexLabel, &VertexLabel) {
        (&self.lo, &self.hi)
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        &self.lo == v || &self.hi == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Edge with a direction. `-e` swaps tail and head.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedEdge {
    pub tail: VertexLabel,
    pub head: VertexLabel,
}

impl OrientedEdge {
    pub fn new(tail: VertexLabel, head: VertexLabel) -> Result<Self, SurfaceError> {
        if tail == head {
            return Err(SurfaceError::DegenerateEdge(tail));
        }
        Ok(Self { tail, head })
    }

    pub fn undirected(&self) -> Edge {
        Edge::new(self.tail.clone(), self.head.clone()).expect("endpoints are distinct")
    }
}

impl std::ops::Neg for OrientedEdge {
    type Output = OrientedEdge;

    fn neg(self) -> Self::Output {
        OrientedEdge {
            tail: self.head,
            head: self.tail,
        }
    }
}

impl fmt::Display for OrientedEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

/// Triangular face: three distinct vertices stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    vertices: [VertexLabel; 3],
}

impl Face {
    pub fn new(a: VertexLabel, b: VertexLabel, c: VertexLabel) -> Result<Self, SurfaceError> {
        let mut vertices = [a, b, c];
        vertices.sort();
        if vertices[0] == vertices[1] || vertices[1] == vertices[2] {
            return Err(SurfaceError::DegenerateFace(vertices));
        }
        Ok(Self { vertices })
    }

    /// Parses `x,y,z` (labels in any order).
    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(SurfaceError::Parse {
                line: 0,
                message: format!("expected three comma-separated labels, got `{text}`"),
            });
        }
        Face::new(
            VertexLabel::new(parts[0])?,
            VertexLabel::new(parts[1])?,
            VertexLabel::new(parts[2])?,
        )
    }

    pub fn vertices(&self) -> &[VertexLabel; 3] {
        &self.vertices
    }

    pub fn contains(&self, v: &VertexLabel) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.contains(&e.lo) && self.contains(&e.hi)
    }

    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.vertices.clone();
        [
            Edge {
                lo: a.clone(),
                hi: b.clone(),
            },
            Edge { lo: b, hi: c.clone() },
            Edge { lo: a, hi: c },
        ]
    }

    /// The six oriented edges of the face.
    pub fn omega(&self) -> [OrientedEdge; 6] {
        let [p, q, r] = self.vertices.clone();
        let oe = |t: &VertexLabel, h: &VertexLabel| OrientedEdge {
            tail: t.clone(),
            head: h.clone(),
        };
        [oe(&p, &q), oe(&q, &r), oe(&r, &p), oe(&p, &r), oe(&r, &q), oe(&q, &p)]
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.vertices;
        write!(f, "{a}-{b}-{c}")
    }
}

/// The unique vertex of `f` not on `e`.
pub fn third_vertex(f: &Face, e: &Edge) -> Result<VertexLabel, SurfaceError> {
    if !f.contains_edge(e) {
        return Err(SurfaceError::EdgeNotInFace {
            edge: e.clone(),
            face: f.clone(),
        });
    }
    Ok(f.vertices
        .iter()
        .find(|v| !e.contains(v))
        .cloned()
        .expect("a face has a vertex off each of its edges"))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("invalid vertex label `{0}`")]
    InvalidLabel(String),
    #[error("edge endpoints coincide at {0}")]
    DegenerateEdge(VertexLabel),
    #[error("face list is empty")]
    EmptyInput,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("face {}-{}-{} repeats a vertex", .0[0], .0[1], .0[2])]
    DegenerateFace([VertexLabel; 3]),
    #[error("face {0} is listed more than once")]
    DuplicateFace(Face),
    #[error("edge {edge} lies in {count} faces, expected 2")]
    EdgeDegreeViolation { edge: Edge, count: usize },
    #[error("the 1-skeleton is disconnected")]
    Disconnected,
    #[error("the link of vertex {0} is not a single cycle")]
    VertexLinkNotSingleCycle(VertexLabel),
    #[error("edge {edge} is not an edge of face {face}")]
    EdgeNotInFace { edge: Edge, face: Face },
    #[error("face {0} is not a face of the triangulation")]
    FaceNotInTriangulation(Face),
    #[error("edge {0} is not an edge of the triangulation")]
    EdgeNotInTriangulation(Edge),
    #[error("vertex {0} is not a vertex of the triangulation")]
    VertexNotInTriangulation(VertexLabel),
}

impl SurfaceError {
    /// Stable taxonomy name used by the command-line frontend.
    pub fn name(&self) -> &'static str {
        match self {
            Self::InvalidLabel(_) => "InvalidLabel",
            Self::DegenerateEdge(_) => "DegenerateEdge",
            Self::EmptyInput => "EmptyInput",
            Self::Parse { .. } => "ParseError",
            Self::DegenerateFace(_) => "DegenerateFace",
            Self::DuplicateFace(_) => "DuplicateFace",
            Self::EdgeDegreeViolation { .. } => "EdgeDegreeViolation",
            Self::Disconnected => "Disconnected",
            Self::VertexLinkNotSingleCycle(_) => "VertexLinkNotSingleCycle",
            Self::EdgeNotInFace { .. } => "EdgeNotInFace",
            Self::FaceNotInTriangulation(_) => "FaceNotInTriangulation",
            Self::EdgeNotInTriangulation(_) => "EdgeNotInTriangulation",
            Self::VertexNotInTriangulation(_) => "VertexNotInTriangulation",
        }
    }
}

/// Index of a vertex in the ascending label order of its triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

/// Index of a face in the ascending face order of its triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub u32);

/// Index of an edge in the ascending edge order of its triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

/// Oriented edge on vertex ids. Orders like the corresponding [`OrientedEdge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dart {
    pub tail: VertexId,
    pub head: VertexId,
}

impl Dart {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        debug_assert_ne!(tail, head);
        Self { tail, head }
    }

    pub fn reversed(self) -> Self {
        Self {
            tail: self.head,
            head: self.tail,
        }
    }

    /// Endpoints with the smaller id first.
    pub fn key(self) -> (VertexId, VertexId) {
        if self.tail < self.head {
            (self.tail, self.head)
        } else {
            (self.head, self.tail)
        }
    }
}

/// Whether a closed surface admits a consistent orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Orientability {
    Orientable,
    NonOrientable,
}

impl fmt::Display for Orientability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientability::Orientable => "orientable",
            Orientability::NonOrientable => "non-orientable",
        })
    }
}

/// Validated triangulation of a connected closed surface. Immutable after
/// [`Triangulation::build`].
#[derive(Debug, Clone)]
pub struct Triangulation {
    labels: Vec<VertexLabel>,
    faces: Vec<[VertexId; 3]>,
    edges: Vec<[VertexId; 2]>,
    edge_faces: Vec<[FaceId; 2]>,
    edge_index: HashMap<(VertexId, VertexId), EdgeId>,
    face_index: HashMap<[VertexId; 3], FaceId>,
}

impl PartialEq for Triangulation {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.faces == other.faces
    }
}

impl Eq for Triangulation {}

impl Triangulation {
    /// Validates a face list and builds the triangulation.
    pub fn build<I>(face_list: I) -> Result<Self, SurfaceError>
    where
        I: IntoIterator<Item = [VertexLabel; 3]>,
    {
        let mut faces = BTreeSet::new();
        for [a, b, c] in face_list {
            let face = Face::new(a, b, c)?;
            if faces.contains(&face) {
                return Err(SurfaceError::DuplicateFace(face));
            }
            faces.insert(face);
        }
        if faces.is_empty() {
            return Err(SurfaceError::EmptyInput);
        }

        let labels: Vec<VertexLabel> = faces
            .iter()
            .flat_map(|f| f.vertices.iter().cloned())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let id_of: HashMap<&VertexLabel, VertexId> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l, VertexId(i as u32)))
            .collect();
        let faces: Vec<[VertexId; 3]> = faces
            .iter()
            .map(|f| {
                let [a, b, c] = &f.vertices;
                [id_of[a], id_of[b], id_of[c]]
            })
            .collect();

        let mut incidence: BTreeMap<(VertexId, VertexId), Vec<FaceId>> = BTreeMap::new();
        for (i, &[a, b, c]) in faces.iter().enumerate() {
            for key in [(a, b), (b, c), (a, c)] {
                incidence.entry(key).or_default().push(FaceId(i as u32));
            }
        }
        for (&(a, b), on) in &incidence {
            if on.len() != 2 {
                return Err(SurfaceError::EdgeDegreeViolation {
                    edge: Edge {
                        lo: labels[a.0 as usize].clone(),
                        hi: labels[b.0 as usize].clone(),
                    },
                    count: on.len(),
                });
            }
        }

        let mut edges = Vec::with_capacity(incidence.len());
        let mut edge_faces = Vec::with_capacity(incidence.len());
        let mut edge_index = HashMap::with_capacity(incidence.len());
        for ((a, b), on) in incidence {
            edge_index.insert((a, b), EdgeId(edges.len() as u32));
            edges.push([a, b]);
            edge_faces.push([on[0], on[1]]);
        }
        let face_index = faces.iter().enumerate().map(|(i, &f)| (f, FaceId(i as u32))).collect();

        let t = Self {
            labels,
            faces,
            edges,
            edge_faces,
            edge_index,
            face_index,
        };
        t.check_connected()?;
        t.check_links()?;
        Ok(t)
    }

    /// Parses the text face-list format and validates the result.
    pub fn from_trig(text: &str) -> Result<Self, SurfaceError> {
        Self::build(parse_trig(text)?)
    }

    /// Canonical text face list: one sorted face per line, ascending.
    pub fn to_trig(&self) -> String {
        let mut out = String::new();
        for f in self.faces() {
            let [a, b, c] = f.vertices();
            out.push_str(&format!("{a} {b} {c}\n"));
        }
        out
    }

    fn check_connected(&self) -> Result<(), SurfaceError> {
        let n = self.labels.len();
        let mut adj = vec![Vec::new(); n];
        for &[a, b] in &self.edges {
            adj[a.0 as usize].push(b.0 as usize);
            adj[b.0 as usize].push(a.0 as usize);
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        if count == n {
            Ok(())
        } else {
            Err(SurfaceError::Disconnected)
        }
    }

    fn check_links(&self) -> Result<(), SurfaceError> {
        // Edge degrees are already 2, so every link is 2-regular; it only
        // remains to check that each link is connected.
        let mut link: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new(); self.labels.len()];
        for &[a, b, c] in &self.faces {
            link[a.0 as usize].push((b, c));
            link[b.0 as usize].push((a, c));
            link[c.0 as usize].push((a, b));
        }
        for (v, edges) in link.iter().enumerate() {
            let mut adj: HashMap<VertexId, Vec<VertexId>> = HashMap::new();
            for &(x, y) in edges {
                adj.entry(x).or_default().push(y);
                adj.entry(y).or_default().push(x);
            }
            let start = edges[0].0;
            let (mut prev, mut cur) = (start, adj[&start][0]);
            let mut walked = 1;
            while cur != start {
                let next = adj[&cur].iter().copied().find(|&w| w != prev).unwrap_or(prev);
                prev = cur;
                cur = next;
                walked += 1;
                if walked > edges.len() {
                    break;
                }
            }
            if walked != edges.len() {
                return Err(SurfaceError::VertexLinkNotSingleCycle(self.labels[v].clone()));
            }
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// V - E + F.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Propagates a cyclic orientation across face adjacencies starting from
    /// the first face.
    pub fn orientability(&self) -> Orientability {
        self.orientability_from(FaceId(0))
    }

    /// Same as [`orientability`](Self::orientability), propagating from `start`.
    pub fn orientability_from(&self, start: FaceId) -> Orientability {
        // sign +1 orients a sorted face [p,q,r] as p->q->r->p.
        let mut sign = vec![0i8; self.faces.len()];
        sign[start.0 as usize] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let s = sign[f.0 as usize];
            let [p, q, r] = self.faces[f.0 as usize];
            for (x, y) in [(p, q), (q, r), (p, r)] {
                let e = self.edge_index[&(x, y)];
                let g = self.other_face_id(e, f);
                let want = -s * self.winding(f, x, y);
                let needed = want * self.winding(g, x, y);
                let slot = &mut sign[g.0 as usize];
                if *slot == 0 {
                    *slot = needed;
                    queue.push_back(g);
                } else if *slot != needed {
                    return Orientability::NonOrientable;
                }
            }
        }
        Orientability::Orientable
    }

    /// +1 if the sorted cyclic order of `f` runs x->y, -1 otherwise.
    fn winding(&self, f: FaceId, x: VertexId, y: VertexId) -> i8 {
        let [p, q, r] = self.faces[f.0 as usize];
        if [(p, q), (q, r), (r, p)].contains(&(x, y)) {
            1
        } else {
            -1
        }
    }

    pub fn label(&self, v: VertexId) -> &VertexLabel {
        &self.labels[v.0 as usize]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn vertex_id(&self, label: &VertexLabel) -> Option<VertexId> {
        self.labels.binary_search(label).ok().map(|i| VertexId(i as u32))
    }

    pub fn face_ids(&self) -> impl ExactSizeIterator<Item = FaceId> + '_ {
        (0..self.faces.len() as u32).map(FaceId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len() as u32).map(EdgeId)
    }

    /// Vertex ids of a face, ascending.
    pub fn face_vertices(&self, f: FaceId) -> [VertexId; 3] {
        self.faces[f.0 as usize]
    }

    /// Endpoint ids of an edge, ascending.
    pub fn edge_vertices(&self, e: EdgeId) -> [VertexId; 2] {
        self.edges[e.0 as usize]
    }

    pub fn edge_faces(&self, e: EdgeId) -> [FaceId; 2] {
        self.edge_faces[e.0 as usize]
    }

    pub fn face(&self, f: FaceId) -> Face {
        let [a, b, c] = self.faces[f.0 as usize];
        Face {
            vertices: [self.label(a).clone(), self.label(b).clone(), self.label(c).clone()],
        }
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.face_ids().map(|f| self.face(f))
    }

    pub fn edge(&self, e: EdgeId) -> Edge {
        let [a, b] = self.edges[e.0 as usize];
        Edge {
            lo: self.label(a).clone(),
            hi: self.label(b).clone(),
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edge_ids().map(|e| self.edge(e))
    }

    pub fn oriented(&self, d: Dart) -> OrientedEdge {
        OrientedEdge {
            tail: self.label(d.tail).clone(),
            head: self.label(d.head).clone(),
        }
    }

    pub fn dart_of(&self, e: &OrientedEdge) -> Option<Dart> {
        Some(Dart::new(self.vertex_id(&e.tail)?, self.vertex_id(&e.head)?))
    }

    pub fn face_id(&self, f: &Face) -> Option<FaceId> {
        let [a, b, c] = &f.vertices;
        let key = [self.vertex_id(a)?, self.vertex_id(b)?, self.vertex_id(c)?];
        self.face_index.get(&key).copied()
    }

    pub fn require_face(&self, f: &Face) -> Result<FaceId, SurfaceError> {
        self.face_id(f)
            .ok_or_else(|| SurfaceError::FaceNotInTriangulation(f.clone()))
    }

    pub fn face_id_of(&self, mut vs: [VertexId; 3]) -> Option<FaceId> {
        vs.sort();
        self.face_index.get(&vs).copied()
    }

    pub fn edge_id(&self, e: &Edge) -> Option<EdgeId> {
        let key = (self.vertex_id(&e.lo)?, self.vertex_id(&e.hi)?);
        self.edge_index.get(&key).copied()
    }

    pub fn edge_id_of(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        let key = if a < b { (a, b) } else { (b, a) };
        self.edge_index.get(&key).copied()
    }

    /// The face on the other side of edge `e` from face `f`.
    pub fn other_face_id(&self, e: EdgeId, f: FaceId) -> FaceId {
        let [g, h] = self.edge_faces[e.0 as usize];
        debug_assert!(g == f || h == f);
        if g == f {
            h
        } else {
            g
        }
    }

    /// The unique face other than `f` containing `e`.
    pub fn other_face(&self, e: &Edge, f: &Face) -> Result<Face, SurfaceError> {
        if !f.contains_edge(e) {
            return Err(SurfaceError::EdgeNotInFace {
                edge: e.clone(),
                face: f.clone(),
            });
        }
        let fid = self.require_face(f)?;
        let eid = self
            .edge_id(e)
            .ok_or_else(|| SurfaceError::EdgeNotInTriangulation(e.clone()))?;
        Ok(self.face(self.other_face_id(eid, fid)))
    }

    /// Vertex of `f` off the edge `{a, b}` (both assumed in `f`).
    pub fn third_vertex_id(&self, f: FaceId, a: VertexId, b: VertexId) -> VertexId {
        let vs = self.faces[f.0 as usize];
        debug_assert!(vs.contains(&a) && vs.contains(&b));
        vs.into_iter()
            .find(|&v| v != a && v != b)
            .expect("face has three distinct vertices")
    }

    /// Neighbours of a vertex in cyclic link order.
    pub fn link_cycle(&self, v: VertexId) -> Vec<VertexId> {
        let mut adj: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &[a, b, c] in &self.faces {
            let pair = if a == v {
                (b, c)
            } else if b == v {
                (a, c)
            } else if c == v {
                (a, b)
            } else {
                continue;
            };
            adj.entry(pair.0).or_default().push(pair.1);
            adj.entry(pair.1).or_default().push(pair.0);
        }
        let Some((&start, first)) = adj.iter().next() else {
            return Vec::new();
        };
        let mut cycle = vec![start];
        let (mut prev, mut cur) = (start, *first.iter().min().expect("link vertex has neighbours"));
        while cur != start {
            cycle.push(cur);
            let next = adj[&cur].iter().copied().find(|&w| w != prev).unwrap_or(prev);
            prev = cur;
            cur = next;
        }
        cycle
    }

    /// Sorted vertex-label triples, ready to be fed back into [`build`](Self::build).
    pub fn face_list(&self) -> Vec<[VertexLabel; 3]> {
        self.faces().map(|f| f.vertices).collect()
    }
}

/// Parses the text face-list format: one face per line as three
/// whitespace-separated labels, `#` comments, blank lines ignored.
pub fn parse_trig(text: &str) -> Result<Vec<[VertexLabel; 3]>, SurfaceError> {
    let mut faces = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 3 {
            return Err(SurfaceError::Parse {
                line: i + 1,
                message: format!("expected 3 vertex labels, found {}", tokens.len()),
            });
        }
        faces.push([
            VertexLabel::new(tokens[0])?,
            VertexLabel::new(tokens[1])?,
            VertexLabel::new(tokens[2])?,
        ]);
    }
    Ok(faces)
}

/// Convenience for tests and generators: builds label triples from `&str`s.
pub fn triples<'a, I>(faces: I) -> Vec<[VertexLabel; 3]>
where
    I: IntoIterator<Item = [&'a str; 3]>,
{
    faces
        .into_iter()
        .map(|[a, b, c]| {
            [
                VertexLabel::new(a).expect("valid label"),
                VertexLabel::new(b).expect("valid label"),
                VertexLabel::new(c).expect("valid label"),
            ]
        })
        .collect()
}
