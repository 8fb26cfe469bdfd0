//! Z-monodromy of faces and its seven-type classification.
//!
//! For a face `F` let `D_F` be the rotation `xy -> yz` of its six oriented
//! edges. `M_F(e)` is the first oriented edge of `F` met by the zigzag
//! through `(D_F^-1(e), e)` strictly after `e`. Classification compares
//! `M_F` against every candidate permutation of each type; exactly one type
//! matches.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::surface::{Dart, Face, FaceId, Triangulation};
use crate::zigzag::{dart_slot, enumerate, omega_states, slot_dart, step, ZigzagCensus, ZigzagState};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonodromyError {
    #[error("face {0} is not a face of the triangulation")]
    FaceNotInTriangulation(Face),
    #[error("monodromy of face {face} matches no type (or several): {perm}")]
    Unclassifiable { face: Face, perm: String },
    #[error("face {0} is not locally z-knotted")]
    NotLocallyZKnotted(Face),
    #[error("inconsistent result at face {face}: {detail}")]
    Inconsistent { face: Face, detail: String },
}

impl MonodromyError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::FaceNotInTriangulation(_) => "FaceNotInTriangulation",
            Self::Unclassifiable { .. } => "Unclassifiable",
            Self::NotLocallyZKnotted(_) => "NotLocallyZKnotted",
            Self::Inconsistent { .. } => "Inconsistent",
        }
    }
}

/// Permutation of a face's six oriented edges, indexed by slot
/// (`pq, qr, rp, pr, rq, qp` for sorted vertices `p < q < r`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaPermutation([u8; 6]);

pub(crate) fn neg(slot: u8) -> u8 {
    5 - slot
}

impl OmegaPermutation {
    pub fn identity() -> Self {
        Self([0, 1, 2, 3, 4, 5])
    }

    /// `D_F`: `xy -> yz`.
    pub fn rotation() -> Self {
        Self([1, 2, 0, 4, 5, 3])
    }

    pub fn from_slots(map: [u8; 6]) -> Option<Self> {
        let mut seen = [false; 6];
        for &m in &map {
            if m >= 6 || seen[m as usize] {
                return None;
            }
            seen[m as usize] = true;
        }
        Some(Self(map))
    }

    pub fn apply(&self, slot: u8) -> u8 {
        self.0[slot as usize]
    }

    pub fn slots(&self) -> [u8; 6] {
        self.0
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|i| self.0[other.0[i] as usize]))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = [0u8; 6];
        for (i, &m) in self.0.iter().enumerate() {
            inv[m as usize] = i as u8;
        }
        Self(inv)
    }

    /// Builds a permutation from disjoint cycles; unspecified slots are fixed.
    fn from_cycles(cycles: &[&[u8]]) -> Self {
        let mut map = Self::identity().0;
        for c in cycles {
            for i in 0..c.len() {
                map[c[i] as usize] = c[(i + 1) % c.len()];
            }
        }
        Self(map)
    }

    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let mut seen = [false; 6];
        let mut out = Vec::new();
        for s in 0..6u8 {
            if seen[s as usize] {
                continue;
            }
            let mut c = vec![s];
            seen[s as usize] = true;
            let mut cur = self.apply(s);
            while cur != s {
                seen[cur as usize] = true;
                c.push(cur);
                cur = self.apply(cur);
            }
            out.push(c);
        }
        out
    }

    /// Cycle notation with vertex labels, fixed points omitted.
    pub fn cycle_notation(&self, t: &Triangulation, f: FaceId) -> String {
        let vs = t.face_vertices(f);
        let name = |s: u8| {
            let d = slot_dart(vs, s as usize);
            format!("{}{}", t.label(d.tail), t.label(d.head))
        };
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| format!("({})", c.into_iter().map(name).collect::<Vec<_>>().join(",")))
            .collect();
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.concat()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MonodromyTag {
    M1,
    M2,
    M3,
    M4,
    M5,
    M6,
    M7,
}

impl MonodromyTag {
    pub const ALL: [MonodromyTag; 7] = [
        MonodromyTag::M1,
        MonodromyTag::M2,
        MonodromyTag::M3,
        MonodromyTag::M4,
        MonodromyTag::M5,
        MonodromyTag::M6,
        MonodromyTag::M7,
    ];

    /// Types in which the face is locally z-knotted.
    pub fn is_z_knotted_type(self) -> bool {
        matches!(self, Self::M1 | Self::M2 | Self::M3 | Self::M4)
    }
}

impl fmt::Display for MonodromyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// Classified monodromy. `witness` is the cycle `(e1, e2, e3)` (as slots)
/// for the parametrized types M3, M4, M6, M7.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonodromyType {
    pub tag: MonodromyTag,
    pub witness: Option<[u8; 3]>,
}

/// The six `(e1, e2, e3)` choices: every rotation of both cycles of the
/// given permutation.
fn cycle_choices(p: &OmegaPermutation) -> Vec<[u8; 3]> {
    let mut out = Vec::with_capacity(6);
    for start in [0u8, 3] {
        let a = start;
        let b = p.apply(a);
        let c = p.apply(b);
        out.push([a, b, c]);
        out.push([b, c, a]);
        out.push([c, a, b]);
    }
    out
}

fn m3_shape([e1, e2, e3]: [u8; 3]) -> OmegaPermutation {
    OmegaPermutation::from_cycles(&[&[neg(e1), e2, e3], &[neg(e3), neg(e2), e1]])
}

fn m4_shape([e1, e2, _]: [u8; 3]) -> OmegaPermutation {
    OmegaPermutation::from_cycles(&[&[e1, neg(e2)], &[e2, neg(e1)]])
}

fn m7_shape([e1, e2, _]: [u8; 3]) -> OmegaPermutation {
    OmegaPermutation::from_cycles(&[&[e1, e2], &[neg(e1), neg(e2)]])
}

/// Every candidate of every type, with its witness cycle.
pub fn candidates() -> Vec<(MonodromyTag, Option<[u8; 3]>, OmegaPermutation)> {
    let d = OmegaPermutation::rotation();
    let d_inv = d.inverse();
    let mut out = vec![
        (MonodromyTag::M1, None, OmegaPermutation::identity()),
        (MonodromyTag::M2, None, d),
        (MonodromyTag::M5, None, d_inv),
    ];
    for c in cycle_choices(&d) {
        out.push((MonodromyTag::M3, Some(c), m3_shape(c)));
        out.push((MonodromyTag::M4, Some(c), m4_shape(c)));
        out.push((MonodromyTag::M7, Some(c), m7_shape(c)));
    }
    for c in cycle_choices(&d_inv) {
        out.push((MonodromyTag::M6, Some(c), m3_shape(c)));
    }
    out
}

/// Matches `m` against the candidate sets. The witness is the least
/// matching cycle, comparing oriented edges by label.
pub fn classify(t: &Triangulation, f: FaceId, m: &OmegaPermutation) -> Result<MonodromyType, MonodromyError> {
    let vs = t.face_vertices(f);
    let key = |w: [u8; 3]| w.map(|s| slot_dart(vs, s as usize));
    let mut found: Option<MonodromyType> = None;
    for (tag, witness, cand) in candidates() {
        if cand != *m {
            continue;
        }
        match &mut found {
            None => found = Some(MonodromyType { tag, witness }),
            Some(prev) if prev.tag != tag => {
                return Err(MonodromyError::Unclassifiable {
                    face: t.face(f),
                    perm: m.cycle_notation(t, f),
                })
            }
            Some(prev) => {
                if let (Some(a), Some(b)) = (prev.witness, witness) {
                    if key(b) < key(a) {
                        prev.witness = Some(b);
                    }
                }
            }
        }
    }
    found.ok_or_else(|| MonodromyError::Unclassifiable {
        face: t.face(f),
        perm: m.cycle_notation(t, f),
    })
}

/// `M_F` by walking the zigzag from each oriented edge of `f`.
pub fn z_monodromy(t: &Triangulation, f: FaceId) -> OmegaPermutation {
    let vs = t.face_vertices(f);
    let mut map = [0u8; 6];
    for (slot, out) in map.iter_mut().enumerate() {
        let start = ZigzagState {
            face: f,
            dart: slot_dart(vs, slot),
        };
        let mut s = step(t, start);
        loop {
            if let Some(hit) = dart_slot(vs, s.dart) {
                *out = hit as u8;
                break;
            }
            s = step(t, s);
        }
    }
    OmegaPermutation(map)
}

/// `M_F` read off a precomputed census: the first of the twelve states
/// carrying an oriented edge of `f` after the start position.
pub fn z_monodromy_from_census(t: &Triangulation, census: &ZigzagCensus, f: FaceId) -> OmegaPermutation {
    let vs = t.face_vertices(f);
    let hits = omega_states(t, f);
    let mut map = [0u8; 6];
    for (slot, out) in map.iter_mut().enumerate() {
        let here = census.locate_index(f.0 as usize * 6 + slot);
        let len = census.zigzag(here).len() as i64;
        let best = hits
            .iter()
            .filter_map(|&h| {
                let loc = census.locate_index(h);
                (loc.pair == here.pair && loc.forward == here.forward).then(|| {
                    let gap = (loc.position as i64 - here.position as i64 - 1).rem_euclid(len);
                    (gap, h)
                })
            })
            .min()
            .expect("the start state is itself an oriented edge of the face");
        let dart = ZigzagState::from_index(t, best.1).dart;
        *out = dart_slot(vs, dart).expect("hit lies on the face") as u8;
    }
    OmegaPermutation(map)
}

/// Per-face result of the monodromy analysis.
#[derive(Debug, Clone)]
pub struct FaceReport {
    pub face: FaceId,
    pub d: OmegaPermutation,
    pub m: OmegaPermutation,
    pub kind: MonodromyType,
    pub locally_z_knotted: bool,
    pub zigzag_pair_count_through_face: usize,
}

/// Zigzag census plus a report for every face.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub census: ZigzagCensus,
    pub faces: Vec<FaceReport>,
}

impl Analysis {
    pub fn new(t: &Triangulation) -> Result<Self, MonodromyError> {
        let census = enumerate(t);
        let mut faces = Vec::with_capacity(t.face_count());
        for f in t.face_ids() {
            let m = z_monodromy_from_census(t, &census, f);
            let kind = classify(t, f, &m)?;
            let through = crate::zigzag::zigzags_through_face(t, &census, f).len();
            let locally = through == 1;
            if locally != kind.tag.is_z_knotted_type() {
                return Err(MonodromyError::Inconsistent {
                    face: t.face(f),
                    detail: format!("{through} zigzag pairs through the face but type {}", kind.tag),
                });
            }
            faces.push(FaceReport {
                face: f,
                d: OmegaPermutation::rotation(),
                m,
                kind,
                locally_z_knotted: locally,
                zigzag_pair_count_through_face: through,
            });
        }
        let analysis = Self { census, faces };
        let all_local = analysis.faces.iter().all(|r| r.locally_z_knotted);
        if all_local != (analysis.census.pair_count() == 1) {
            return Err(MonodromyError::Inconsistent {
                face: t.face(FaceId(0)),
                detail: format!(
                    "{} zigzag pairs but all faces locally z-knotted = {all_local}",
                    analysis.census.pair_count()
                ),
            });
        }
        Ok(analysis)
    }

    pub fn report(&self, f: FaceId) -> &FaceReport {
        &self.faces[f.0 as usize]
    }

    pub fn tag(&self, f: FaceId) -> MonodromyTag {
        self.faces[f.0 as usize].kind.tag
    }

    /// Exactly one zigzag up to reversal.
    pub fn is_z_knotted(&self) -> bool {
        self.census.pair_count() == 1
    }

    pub fn histogram(&self) -> [usize; 7] {
        let mut h = [0usize; 7];
        for r in &self.faces {
            h[r.kind.tag as usize] += 1;
        }
        h
    }

    pub fn faces_of_type(&self, tag: MonodromyTag) -> Vec<FaceId> {
        self.faces
            .iter()
            .filter(|r| r.kind.tag == tag)
            .map(|r| r.face)
            .collect()
    }
}

pub fn is_locally_z_knotted(t: &Triangulation, analysis: &Analysis, f: &Face) -> Result<bool, MonodromyError> {
    let fid = t
        .face_id(f)
        .ok_or_else(|| MonodromyError::FaceNotInTriangulation(f.clone()))?;
    Ok(analysis.report(fid).locally_z_knotted)
}

pub fn is_z_knotted(t: &Triangulation) -> bool {
    enumerate(t).pair_count() == 1
}

/// How the unique zigzag pair through a face crosses one of its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeTraversal {
    /// The edge oriented from its smaller endpoint; `along` counts this
    /// direction and `against` its reverse.
    pub dart: Dart,
    pub along: usize,
    pub against: usize,
}

impl EdgeTraversal {
    pub fn same_direction(&self) -> bool {
        (self.along == 2 && self.against == 0) || (self.along == 0 && self.against == 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraversalProfile {
    pub edges: [EdgeTraversal; 3],
    /// The darts traversed twice when all three edges are same-direction.
    pub same_direction_darts: Option<[Dart; 3]>,
    /// Whether those darts form one cycle of `D_F`.
    pub forms_rotation_cycle: bool,
}

impl TraversalProfile {
    pub fn same_direction_count(&self) -> usize {
        self.edges.iter().filter(|e| e.same_direction()).count()
    }
}

/// Per-edge direction summary of the forward zigzag through a locally
/// z-knotted face.
pub fn traversal_profile(
    t: &Triangulation,
    analysis: &Analysis,
    f: FaceId,
) -> Result<TraversalProfile, MonodromyError> {
    let report = analysis.report(f);
    if !report.locally_z_knotted {
        return Err(MonodromyError::NotLocallyZKnotted(t.face(f)));
    }
    let loc = analysis.census.locate_index(f.0 as usize * 6);
    let pair = &analysis.census.pairs()[loc.pair as usize];
    let [p, q, r] = t.face_vertices(f);
    let edges = [(p, q), (q, r), (p, r)].map(|(x, y)| {
        let along = pair.forward.darts().filter(|&d| d == Dart::new(x, y)).count();
        let against = pair.forward.darts().filter(|&d| d == Dart::new(y, x)).count();
        EdgeTraversal {
            dart: Dart::new(x, y),
            along,
            against,
        }
    });
    let same_direction_darts = if edges.iter().all(EdgeTraversal::same_direction) {
        Some(
            edges
                .clone()
                .map(|e| if e.along == 2 { e.dart } else { e.dart.reversed() }),
        )
    } else {
        None
    };
    let vs = t.face_vertices(f);
    let forms_rotation_cycle = same_direction_darts.is_some_and(|ds| {
        let mut slots = ds.map(|d| dart_slot(vs, d).expect("face dart") as u8);
        slots.sort();
        slots == [0, 1, 2] || slots == [3, 4, 5]
    });
    Ok(TraversalProfile {
        edges,
        same_direction_darts,
        forms_rotation_cycle,
    })
}
