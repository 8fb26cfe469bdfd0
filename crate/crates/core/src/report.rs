//! Whole-triangulation analysis summary shared by the CLI and tests.

use serde::Serialize;

use crate::dual::{is_forest, subgraph_by_type, Component, ForestCertificate, Verdict};
use crate::monodromy::{Analysis, MonodromyError, MonodromyTag};
use crate::surface::{Orientability, Triangulation};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize)]
pub struct SurfaceSummary {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientability: Orientability,
}

impl SurfaceSummary {
    pub fn of(t: &Triangulation) -> Self {
        Self {
            vertices: t.vertex_count(),
            edges: t.edge_count(),
            faces: t.face_count(),
            euler_characteristic: t.euler_characteristic(),
            orientability: t.orientability(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ZigzagSummary {
    pub pair_count: usize,
    pub lengths: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FaceTypeEntry {
    pub face: String,
    #[serde(rename = "type")]
    pub tag: MonodromyTag,
    pub locally_z_knotted: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ForestSummary {
    pub verdict: Verdict,
    pub nodes: usize,
    pub links: usize,
    pub components: Vec<Component>,
    pub shapes: Vec<String>,
    pub witness: Option<Vec<String>>,
}

impl ForestSummary {
    pub fn new(t: &Triangulation, analysis: &Analysis, tag: MonodromyTag) -> (Self, ForestCertificate) {
        let g = subgraph_by_type(t, analysis, tag);
        let cert = is_forest(&g);
        let summary = Self {
            verdict: cert.verdict.clone(),
            nodes: g.node_count(),
            links: g.link_count(),
            components: cert.components.clone(),
            shapes: cert.shape_summary(),
            witness: cert
                .witness
                .as_ref()
                .map(|w| w.iter().map(|&i| t.face(g.nodes[i]).to_string()).collect()),
        };
        (summary, cert)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub schema: &'static str,
    pub surface: SurfaceSummary,
    pub zigzags: ZigzagSummary,
    pub monodromy: Vec<FaceTypeEntry>,
    /// Face counts for M1..M7.
    pub histogram: [usize; 7],
    pub z_knotted: bool,
    pub g1: ForestSummary,
    pub g2: ForestSummary,
}

impl AnalysisReport {
    pub fn new(t: &Triangulation) -> Result<Self, MonodromyError> {
        let analysis = Analysis::new(t)?;
        Ok(Self::from_analysis(t, &analysis))
    }

    pub fn from_analysis(t: &Triangulation, analysis: &Analysis) -> Self {
        let monodromy = analysis
            .faces
            .iter()
            .map(|r| FaceTypeEntry {
                face: t.face(r.face).to_string(),
                tag: r.kind.tag,
                locally_z_knotted: r.locally_z_knotted,
            })
            .collect();
        let report = Self {
            schema: SCHEMA_VERSION,
            surface: SurfaceSummary::of(t),
            zigzags: ZigzagSummary {
                pair_count: analysis.census.pair_count(),
                lengths: analysis.census.pairs().iter().map(|p| p.len()).collect(),
            },
            monodromy,
            histogram: analysis.histogram(),
            z_knotted: analysis.is_z_knotted(),
            g1: ForestSummary::new(t, analysis, MonodromyTag::M1).0,
            g2: ForestSummary::new(t, analysis, MonodromyTag::M2).0,
        };
        debug_assert!(report.is_consistent());
        report
    }

    /// Histogram sums to the face count; z-knotted iff one pair iff all
    /// faces have a locally z-knotted type.
    pub fn is_consistent(&self) -> bool {
        let total: usize = self.histogram.iter().sum();
        let knotted_types = self.monodromy.iter().all(|e| e.tag.is_z_knotted_type());
        total == self.surface.faces
            && self.z_knotted == (self.zigzags.pair_count == 1)
            && self.z_knotted == knotted_types
    }

    pub fn render_text(&self) -> String {
        let s = &self.surface;
        let mut out = String::new();
        out.push_str(&format!(
            "surface: V={} E={} F={} chi={} {}\n",
            s.vertices, s.edges, s.faces, s.euler_characteristic, s.orientability
        ));
        let lengths: Vec<String> = self.zigzags.lengths.iter().map(usize::to_string).collect();
        out.push_str(&format!(
            "zigzags: {} pair(s), lengths [{}]\n",
            self.zigzags.pair_count,
            lengths.join(", ")
        ));
        out.push_str(&format!("z-knotted={}\n", self.z_knotted));
        let hist: Vec<String> = MonodromyTag::ALL
            .iter()
            .zip(self.histogram)
            .filter(|(_, c)| *c > 0)
            .map(|(t, c)| format!("{t}:{c}"))
            .collect();
        out.push_str(&format!("types: {}\n", hist.join(" ")));
        for (name, g) in [("G1", &self.g1), ("G2", &self.g2)] {
            out.push_str(&format!("{name}: {}\n", forest_line(g)));
        }
        out.push_str("faces:\n");
        for e in &self.monodromy {
            out.push_str(&format!("  {} {} local={}\n", e.face, e.tag, e.locally_z_knotted));
        }
        out
    }
}

/// `forest, 5 node(s), 0 link(s): P1 P1 ...`
pub fn forest_line(g: &ForestSummary) -> String {
    let verdict = match g.verdict {
        Verdict::Forest => "forest",
        Verdict::HasCycle => "has-cycle",
    };
    let mut line = format!("{verdict}, {} node(s), {} link(s)", g.nodes, g.links);
    if !g.shapes.is_empty() {
        line.push_str(": ");
        line.push_str(&g.shapes.join(" "));
    }
    if let Some(w) = &g.witness {
        line.push_str(&format!(" cycle [{}]", w.join(" ")));
    }
    line
}
