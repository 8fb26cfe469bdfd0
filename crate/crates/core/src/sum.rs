//! Connected sums along special (vertex-to-vertex) face boundary maps, and
//! the search for z-knotted sums of z-knotted triangulations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::monodromy::{Analysis, MonodromyError, MonodromyTag};
use crate::surface::{Face, SurfaceError, Triangulation, VertexLabel};
use crate::zigzag::enumerate;

const RENAME_SUFFIX: &str = "_2";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SumError {
    #[error("face {0} is not a face of the triangulation")]
    FaceNotInTriangulation(Face),
    #[error("invalid special map: {0}")]
    InvalidMap(String),
    #[error("connected sum failed validation: {0}")]
    ValidationFailed(SurfaceError),
    #[error("input {0} is not z-knotted")]
    InputNotZKnotted(usize),
    #[error("no special map yields a z-knotted sum")]
    Exhausted,
    #[error("every face has identity monodromy")]
    NoNonIdentityFace,
    #[error(transparent)]
    Monodromy(#[from] MonodromyError),
}

impl SumError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::FaceNotInTriangulation(_) => "FaceNotInTriangulation",
            Self::InvalidMap(_) => "InvalidMap",
            Self::ValidationFailed(_) => "ValidationFailed",
            Self::InputNotZKnotted(_) => "InputNotZKnotted",
            Self::Exhausted => "Exhausted",
            Self::NoNonIdentityFace => "NoNonIdentityFace",
            Self::Monodromy(e) => e.name(),
        }
    }
}

/// A face of each triangulation plus a bijection between their vertices.
/// `pairing[i]` sends the `i`-th (sorted) vertex of `f1` to a vertex of `f2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialMap {
    pub f1: Face,
    pub f2: Face,
    pub pairing: [(VertexLabel, VertexLabel); 3],
}

impl SpecialMap {
    pub fn new(f1: Face, f2: Face, pairs: [(VertexLabel, VertexLabel); 3]) -> Result<Self, SumError> {
        let mut pairing = pairs;
        pairing.sort();
        let sources: Vec<&VertexLabel> = pairing.iter().map(|p| &p.0).collect();
        if sources != f1.vertices().iter().collect::<Vec<_>>() {
            return Err(SumError::InvalidMap(format!("sources must be the vertices of {f1}")));
        }
        let images: BTreeSet<&VertexLabel> = pairing.iter().map(|p| &p.1).collect();
        if images != f2.vertices().iter().collect::<BTreeSet<_>>() {
            return Err(SumError::InvalidMap(format!("images must be the vertices of {f2}")));
        }
        Ok(Self { f1, f2, pairing })
    }

    /// Parses `a=x,b=y,c=z`.
    pub fn parse(f1: Face, f2: Face, text: &str) -> Result<Self, SumError> {
        let mut pairs = Vec::new();
        for part in text.split(',') {
            let (a, b) = part
                .split_once('=')
                .ok_or_else(|| SumError::InvalidMap(format!("expected `x=y`, got `{part}`")))?;
            let label = |s: &str| VertexLabel::new(s.trim()).map_err(|e| SumError::InvalidMap(e.to_string()));
            pairs.push((label(a)?, label(b)?));
        }
        let pairs: [(VertexLabel, VertexLabel); 3] = pairs
            .try_into()
            .map_err(|_| SumError::InvalidMap("expected three pairs".into()))?;
        Self::new(f1, f2, pairs)
    }

    pub fn image(&self, v: &VertexLabel) -> Option<&VertexLabel> {
        self.pairing.iter().find(|p| &p.0 == v).map(|p| &p.1)
    }

    fn images(&self) -> [&VertexLabel; 3] {
        [&self.pairing[0].1, &self.pairing[1].1, &self.pairing[2].1]
    }
}

impl fmt::Display for SpecialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.pairing.iter().map(|(a, b)| format!("{a}={b}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// All six special maps between two faces, ordered by image triple.
pub fn special_maps(f1: &Face, f2: &Face) -> Vec<SpecialMap> {
    let w = f2.vertices();
    let mut maps: Vec<SpecialMap> = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
        .iter()
        .map(|perm| SpecialMap {
            f1: f1.clone(),
            f2: f2.clone(),
            pairing: std::array::from_fn(|i| (f1.vertices()[i].clone(), w[perm[i]].clone())),
        })
        .collect();
    maps.sort_by(|a, b| a.images().cmp(&b.images()));
    maps
}

#[derive(Debug, Clone)]
pub struct SumResult {
    pub sum: Triangulation,
    /// Final label of every vertex of the second triangulation.
    pub renaming: BTreeMap<VertexLabel, VertexLabel>,
}

/// Glues `t1` minus `m.f1` to `t2` minus `m.f2`, identifying each vertex of
/// `m.f2` with its preimage. Other vertices of `t2` keep their labels unless
/// they collide, in which case `_2` is appended until the label is free.
pub fn connected_sum(t1: &Triangulation, t2: &Triangulation, m: &SpecialMap) -> Result<SumResult, SumError> {
    if t1.face_id(&m.f1).is_none() {
        return Err(SumError::FaceNotInTriangulation(m.f1.clone()));
    }
    if t2.face_id(&m.f2).is_none() {
        return Err(SumError::FaceNotInTriangulation(m.f2.clone()));
    }
    let mut renaming = BTreeMap::new();
    for (v, w) in &m.pairing {
        renaming.insert(w.clone(), v.clone());
    }
    let mut used: BTreeSet<VertexLabel> = t1.labels().iter().cloned().collect();
    let originals: BTreeSet<&VertexLabel> = t2.labels().iter().collect();
    for w in t2.labels() {
        if renaming.contains_key(w) {
            continue;
        }
        let mut candidate = w.clone();
        while used.contains(&candidate) || (&candidate != w && originals.contains(&candidate)) {
            candidate = VertexLabel::new(format!("{candidate}{RENAME_SUFFIX}")).expect("suffix keeps label valid");
        }
        used.insert(candidate.clone());
        renaming.insert(w.clone(), candidate);
    }

    let mut faces: Vec<[VertexLabel; 3]> = t1
        .faces()
        .filter(|f| f != &m.f1)
        .map(|f| f.vertices().clone())
        .collect();
    faces.extend(
        t2.faces()
            .filter(|f| f != &m.f2)
            .map(|f| f.vertices().clone().map(|v| renaming[&v].clone())),
    );
    let sum = Triangulation::build(faces).map_err(SumError::ValidationFailed)?;
    Ok(SumResult { sum, renaming })
}

/// The least face whose monodromy is not the identity.
pub fn non_identity_face(t: &Triangulation, analysis: &Analysis) -> Result<Face, SumError> {
    t.face_ids()
        .find(|&f| analysis.tag(f) != MonodromyTag::M1)
        .map(|f| t.face(f))
        .ok_or(SumError::NoNonIdentityFace)
}

/// First (face pair, special map) in canonical order, restricted to faces
/// with non-identity monodromy, whose connected sum is z-knotted.
pub fn find_z_knotted_sum(t1: &Triangulation, t2: &Triangulation) -> Result<(SpecialMap, SumResult), SumError> {
    let a1 = Analysis::new(t1)?;
    let a2 = Analysis::new(t2)?;
    if !a1.is_z_knotted() {
        return Err(SumError::InputNotZKnotted(1));
    }
    if !a2.is_z_knotted() {
        return Err(SumError::InputNotZKnotted(2));
    }
    let eligible = |t: &Triangulation, a: &Analysis| -> Vec<Face> {
        t.face_ids()
            .filter(|&f| a.tag(f) != MonodromyTag::M1)
            .map(|f| t.face(f))
            .collect()
    };
    let (e1, e2) = (eligible(t1, &a1), eligible(t2, &a2));
    for f1 in &e1 {
        for f2 in &e2 {
            for m in special_maps(f1, f2) {
                let result = connected_sum(t1, t2, &m)?;
                if enumerate(&result.sum).pair_count() == 1 {
                    return Ok((m, result));
                }
            }
        }
    }
    Err(SumError::Exhausted)
}
