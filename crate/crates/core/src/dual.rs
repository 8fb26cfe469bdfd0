//! Dual graph, monodromy-type subgraphs and forest certificates.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::monodromy::{Analysis, MonodromyTag};
use crate::surface::{FaceId, Triangulation};

/// Disjoint-set forest with path compression and union by rank.
#[derive(Debug, Clone)]
pub struct DisjointSet {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSet {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    /// Merges the sets of `a` and `b`; false if they were already one set.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        true
    }
}

/// Simple undirected graph whose nodes are faces. Links are index pairs into
/// `nodes`, smaller index first, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceGraph {
    pub nodes: Vec<FaceId>,
    pub links: Vec<(usize, usize)>,
}

impl FaceGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.nodes.len()];
        for &(a, b) in &self.links {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.links {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// Induced subgraph on the nodes accepted by `keep`.
    pub fn induced(&self, mut keep: impl FnMut(FaceId) -> bool) -> FaceGraph {
        let mut remap = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, &f) in self.nodes.iter().enumerate() {
            if keep(f) {
                remap[i] = nodes.len();
                nodes.push(f);
            }
        }
        let links = self
            .links
            .iter()
            .filter(|&&(a, b)| remap[a] != usize::MAX && remap[b] != usize::MAX)
            .map(|&(a, b)| (remap[a], remap[b]))
            .collect();
        FaceGraph { nodes, links }
    }
}

/// The dual graph: faces as nodes, a link for every shared edge.
pub fn dual(t: &Triangulation) -> FaceGraph {
    let nodes: Vec<FaceId> = t.face_ids().collect();
    let mut links: Vec<(usize, usize)> = t
        .edge_ids()
        .map(|e| {
            let [f, g] = t.edge_faces(e);
            let (a, b) = (f.0 as usize, g.0 as usize);
            (a.min(b), a.max(b))
        })
        .collect();
    links.sort_unstable();
    FaceGraph { nodes, links }
}

/// Induced dual subgraph on the faces of one monodromy type.
pub fn subgraph_by_type(t: &Triangulation, analysis: &Analysis, tag: MonodromyTag) -> FaceGraph {
    dual(t).induced(|f| analysis.tag(f) == tag)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Forest,
    HasCycle,
}

/// Shape of a connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Shape {
    /// Path on `k` nodes.
    Path(usize),
    Tree,
    Other,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Path(k) => write!(f, "P{k}"),
            Shape::Tree => f.write_str("tree"),
            Shape::Other => f.write_str("other"),
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub nodes: usize,
    pub links: usize,
    pub shape: Shape,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestCertificate {
    pub verdict: Verdict,
    /// Components ordered by their least node.
    pub components: Vec<Component>,
    /// Closed walk of distinct nodes (indices into the graph) when cyclic.
    pub witness: Option<Vec<usize>>,
}

impl ForestCertificate {
    pub fn is_forest(&self) -> bool {
        self.verdict == Verdict::Forest
    }

    /// Shape tags sorted, e.g. `["P2", "P2", "P4", "P4"]`.
    pub fn shape_summary(&self) -> Vec<String> {
        let mut shapes: Vec<Shape> = self.components.iter().map(|c| c.shape).collect();
        shapes.sort();
        shapes.into_iter().map(|s| s.to_string()).collect()
    }
}

/// Certifies acyclicity by component counting. On failure the witness is
/// the cycle closed by the first link (in sorted order) that joins two
/// already-connected nodes, completed by the unique path between them in the
/// forest built so far.
pub fn is_forest(g: &FaceGraph) -> ForestCertificate {
    let n = g.node_count();
    let mut dsu = DisjointSet::new(n);
    let mut tree_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut witness = None;
    for &(a, b) in &g.links {
        if dsu.union(a, b) {
            tree_adj[a].push(b);
            tree_adj[b].push(a);
        } else if witness.is_none() {
            witness = Some(forest_path(&tree_adj, a, b));
        }
    }

    let degrees = g.degrees();
    let mut by_root: BTreeMap<usize, (usize, usize, usize, usize)> = BTreeMap::new();
    let mut root_order = Vec::new();
    for (v, &deg) in degrees.iter().enumerate() {
        let r = dsu.find(v);
        let entry = by_root.entry(r).or_insert_with(|| {
            root_order.push(r);
            (0, 0, 0, v)
        });
        entry.0 += 1;
        entry.2 = entry.2.max(deg);
    }
    for &(a, _) in &g.links {
        by_root.get_mut(&dsu.find(a)).expect("component exists").1 += 1;
    }
    let components: Vec<Component> = root_order
        .iter()
        .map(|r| {
            let (nodes, links, max_deg, _) = by_root[r];
            let shape = if links + 1 == nodes && max_deg <= 2 {
                Shape::Path(nodes)
            } else if links + 1 == nodes {
                Shape::Tree
            } else {
                Shape::Other
            };
            Component { nodes, links, shape }
        })
        .collect();
    let forest = components.iter().all(|c| c.links + 1 == c.nodes);
    debug_assert_eq!(forest, witness.is_none());
    ForestCertificate {
        verdict: if forest { Verdict::Forest } else { Verdict::HasCycle },
        components,
        witness,
    }
}

/// Path from `from` to `to` in a forest, as node list starting at `from`.
fn forest_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        let mut next: Vec<usize> = adj[v].clone();
        next.sort_unstable();
        for w in next {
            if parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![to];
    let mut cur = to;
    while cur != from {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

/// Checks that a witness is a closed walk of distinct, pairwise adjacent
/// consecutive nodes of length at least 3.
pub fn is_valid_cycle(g: &FaceGraph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let mut sorted = cycle.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != cycle.len() {
        return false;
    }
    let adj = g.adjacency();
    (0..cycle.len()).all(|i| adj[cycle[i]].binary_search(&cycle[(i + 1) % cycle.len()]).is_ok())
}

/// Parsed or to-be-rendered DOT graph in the subset this crate writes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotGraph {
    pub name: String,
    pub nodes: Vec<(String, Option<String>)>,
    pub edges: Vec<(String, String)>,
}

impl DotGraph {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {} {{", self.name);
        for (node, mtype) in &self.nodes {
            match mtype {
                Some(m) => {
                    let _ = writeln!(out, "  \"{node}\" [mtype={m}];");
                }
                None => {
                    let _ = writeln!(out, "  \"{node}\";");
                }
            }
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  \"{a}\" -- \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    /// Reads back the output of [`render`](Self::render).
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or("empty input")?;
        let name = header
            .strip_prefix("graph ")
            .and_then(|rest| rest.strip_suffix('{'))
            .map(|n| n.trim().to_string())
            .ok_or_else(|| format!("bad header `{header}`"))?;
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        let mut closed = false;
        for line in lines {
            if line == "}" {
                closed = true;
                continue;
            }
            let body = line
                .strip_suffix(';')
                .ok_or_else(|| format!("missing `;` in `{line}`"))?;
            if let Some((a, b)) = body.split_once(" -- ") {
                edges.push((unquote(a)?, unquote(b)?));
            } else if let Some((node, attrs)) = body.split_once(" [") {
                let mtype = attrs
                    .strip_suffix(']')
                    .and_then(|a| a.strip_prefix("mtype="))
                    .ok_or_else(|| format!("bad attributes in `{line}`"))?;
                nodes.push((unquote(node)?, Some(mtype.to_string())));
            } else {
                nodes.push((unquote(body)?, None));
            }
        }
        if !closed {
            return Err("missing closing brace".into());
        }
        Ok(Self { name, nodes, edges })
    }
}

fn unquote(s: &str) -> Result<String, String> {
    s.trim()
        .strip_prefix('"')
        .and_then(|s| s.strip_suffix('"'))
        .map(str::to_string)
        .ok_or_else(|| format!("expected quoted name, got `{s}`"))
}

/// DOT text for a face graph. Node names are the sorted face labels joined
/// by `-`; `mtype` carries the monodromy tag when an analysis is supplied.
pub fn export_dot(t: &Triangulation, g: &FaceGraph, name: &str, analysis: Option<&Analysis>) -> String {
    let label = |f: FaceId| t.face(f).to_string();
    DotGraph {
        name: name.to_string(),
        nodes: g
            .nodes
            .iter()
            .map(|&f| (label(f), analysis.map(|a| a.tag(f).to_string())))
            .collect(),
        edges: g
            .links
            .iter()
            .map(|&(a, b)| (label(g.nodes[a]), label(g.nodes[b])))
            .collect(),
    }
    .render()
}
