//! Zigzags as orbits of a transition permutation on (face, oriented edge)
//! states.
//!
//! A state `(F, v->w)` stands for the pair of consecutive zigzag edges
//! `{u,v}, {v,w}` where `u` is the vertex of `F` off `{v,w}`. Stepping moves
//! across `{v,w}` into the neighbouring face `F'` and turns onto `w->x`, with
//! `x` the vertex of `F'` off `{v,w}`. Consecutive faces are therefore
//! distinct and edges two apart are disjoint, which is exactly the zigzag
//! condition. Every pair of adjacent edges inside a face is one state, so
//! the state set has `6|F|` elements.

use std::collections::BTreeSet;

use crate::surface::{Dart, Face, FaceId, OrientedEdge, SurfaceError, Triangulation, VertexId};

/// Position inside a face's six oriented edges. For a face with sorted
/// vertices `p < q < r` the slots are `pq, qr, rp, pr, rq, qp`, so the
/// rotation `xy -> yz` cycles 0,1,2 and 3,4,5 and negation maps `i` to `5-i`.
pub(crate) fn slot_dart(vs: [VertexId; 3], slot: usize) -> Dart {
    let [p, q, r] = vs;
    let (t, h) = match slot {
        0 => (p, q),
        1 => (q, r),
        2 => (r, p),
        3 => (p, r),
        4 => (r, q),
        5 => (q, p),
        _ => unreachable!("a face has six oriented edges"),
    };
    Dart::new(t, h)
}

pub(crate) fn dart_slot(vs: [VertexId; 3], d: Dart) -> Option<usize> {
    (0..6).find(|&i| slot_dart(vs, i) == d)
}

/// A (face, oriented edge) traversal state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZigzagState {
    pub face: FaceId,
    pub dart: Dart,
}

impl ZigzagState {
    pub fn new(t: &Triangulation, face: FaceId, dart: Dart) -> Result<Self, SurfaceError> {
        let vs = t.face_vertices(face);
        if dart_slot(vs, dart).is_none() {
            return Err(SurfaceError::EdgeNotInFace {
                edge: t.oriented(dart).undirected(),
                face: t.face(face),
            });
        }
        Ok(Self { face, dart })
    }

    pub fn from_labels(t: &Triangulation, face: &Face, edge: &OrientedEdge) -> Result<Self, SurfaceError> {
        let fid = t.require_face(face)?;
        let dart = t.dart_of(edge).ok_or_else(|| SurfaceError::EdgeNotInFace {
            edge: edge.undirected(),
            face: face.clone(),
        })?;
        Self::new(t, fid, dart)
    }

    /// Dense index `6 * face + slot`.
    pub fn index(self, t: &Triangulation) -> usize {
        let slot = dart_slot(t.face_vertices(self.face), self.dart).expect("state dart lies in its face");
        self.face.0 as usize * 6 + slot
    }

    pub fn from_index(t: &Triangulation, idx: usize) -> Self {
        let face = FaceId((idx / 6) as u32);
        Self {
            face,
            dart: slot_dart(t.face_vertices(face), idx % 6),
        }
    }

    /// The zigzag edge preceding `dart` in this state.
    pub fn previous_dart(self, t: &Triangulation) -> Dart {
        let u = t.third_vertex_id(self.face, self.dart.tail, self.dart.head);
        Dart::new(u, self.dart.tail)
    }
}

/// One transition of the zigzag permutation.
pub fn step(t: &Triangulation, s: ZigzagState) -> ZigzagState {
    let Dart { tail: v, head: w } = s.dart;
    let e = t.edge_id_of(v, w).expect("state dart is an edge");
    let next_face = t.other_face_id(e, s.face);
    let x = t.third_vertex_id(next_face, v, w);
    ZigzagState {
        face: next_face,
        dart: Dart::new(w, x),
    }
}

/// Inverse of [`step`].
pub fn step_back(t: &Triangulation, s: ZigzagState) -> ZigzagState {
    let prev = s.previous_dart(t);
    let e = t.edge_id_of(prev.tail, prev.head).expect("previous dart is an edge");
    let face = t.other_face_id(e, s.face);
    ZigzagState { face, dart: prev }
}

/// The state-level reversal `(F, v->w) -> (F, v->u)`. An involution that
/// conjugates [`step`] into its inverse.
pub fn reverse_state(t: &Triangulation, s: ZigzagState) -> ZigzagState {
    let u = t.third_vertex_id(s.face, s.dart.tail, s.dart.head);
    ZigzagState {
        face: s.face,
        dart: Dart::new(s.dart.tail, u),
    }
}

/// Transition table over dense state indices.
#[derive(Debug, Clone)]
pub struct StateTable {
    next: Vec<u32>,
}

impl StateTable {
    pub fn new(t: &Triangulation) -> Self {
        let next = (0..t.face_count() * 6)
            .map(|i| step(t, ZigzagState::from_index(t, i)).index(t) as u32)
            .collect();
        Self { next }
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn is_empty(&self) -> bool {
        self.next.is_empty()
    }

    pub fn next(&self, idx: usize) -> usize {
        self.next[idx] as usize
    }
}

/// Directed zigzag: the cyclic orbit of a state, rotated so that its
/// oriented-edge sequence is lexicographically least.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zigzag {
    states: Vec<ZigzagState>,
}

impl Zigzag {
    fn from_orbit(mut states: Vec<ZigzagState>) -> Self {
        let darts: Vec<Dart> = states.iter().map(|s| s.dart).collect();
        let r = least_rotation(&darts);
        states.rotate_left(r);
        Self { states }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn states(&self) -> &[ZigzagState] {
        &self.states
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> + '_ {
        self.states.iter().map(|s| s.dart)
    }

    pub fn traversal(&self, t: &Triangulation) -> Vec<OrientedEdge> {
        self.darts().map(|d| t.oriented(d)).collect()
    }

    /// Entry `i` is the face containing edges `i` and `i+1`.
    pub fn face_shadow(&self) -> Vec<FaceId> {
        let n = self.states.len();
        (0..n).map(|i| self.states[(i + 1) % n].face).collect()
    }

    /// Whether all edges of this zigzag are pairwise distinct.
    pub fn is_edge_simple(&self) -> bool {
        let keys: BTreeSet<_> = self.darts().map(Dart::key).collect();
        keys.len() == self.len()
    }

    /// The reversed zigzag, canonically rotated.
    pub fn reversed(&self, t: &Triangulation) -> Zigzag {
        let states: Vec<ZigzagState> = self.states.iter().rev().map(|&s| reverse_state(t, s)).collect();
        Zigzag::from_orbit(states)
    }

    /// Re-checks the local zigzag conditions along the traversal.
    pub fn audit(&self, t: &Triangulation) -> Result<(), String> {
        let n = self.len();
        let darts: Vec<Dart> = self.darts().collect();
        for i in 0..n {
            let (a, b, c) = (darts[i], darts[(i + 1) % n], darts[(i + 2) % n]);
            if a.head != b.tail {
                return Err(format!("darts {i} and {} do not chain", (i + 1) % n));
            }
            let f1 = t.face_id_of([a.tail, a.head, b.head]);
            let f2 = t.face_id_of([b.tail, b.head, c.head]);
            match (f1, f2) {
                (Some(f1), Some(f2)) if f1 != f2 => {}
                _ => return Err(format!("edges {i}..{} do not span two distinct faces", i + 2)),
            }
            let (x, y) = (a.key(), c.key());
            if x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1 {
                return Err(format!("edges {i} and {} intersect", (i + 2) % n));
            }
        }
        Ok(())
    }
}

/// A zigzag together with its reverse. `forward` is the direction whose
/// canonical traversal is lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZigzagPair {
    pub forward: Zigzag,
    pub reverse: Zigzag,
}

impl ZigzagPair {
    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Where a state sits in the census.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StateLocation {
    pub pair: u32,
    pub forward: bool,
    pub position: u32,
}

/// All zigzags of a triangulation, grouped into reversal pairs.
#[derive(Debug, Clone)]
pub struct ZigzagCensus {
    pairs: Vec<ZigzagPair>,
    locate: Vec<StateLocation>,
}

impl ZigzagCensus {
    pub fn pairs(&self) -> &[ZigzagPair] {
        &self.pairs
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn locate(&self, t: &Triangulation, s: ZigzagState) -> StateLocation {
        self.locate[s.index(t)]
    }

    pub(crate) fn locate_index(&self, idx: usize) -> StateLocation {
        self.locate[idx]
    }

    pub fn zigzag(&self, loc: StateLocation) -> &Zigzag {
        let p = &self.pairs[loc.pair as usize];
        if loc.forward {
            &p.forward
        } else {
            &p.reverse
        }
    }
}

/// Traces the orbit of `s`.
pub fn trace(t: &Triangulation, s: ZigzagState) -> Zigzag {
    let mut states = vec![s];
    let mut cur = step(t, s);
    while cur != s {
        states.push(cur);
        cur = step(t, cur);
    }
    Zigzag::from_orbit(states)
}

/// Partitions all states into orbits and pairs each orbit with its reverse.
///
/// # Panics
///
/// If some orbit is mapped to itself by [`reverse_state`]; closed-surface
/// triangulations have no self-reversed zigzags.
pub fn enumerate(t: &Triangulation) -> ZigzagCensus {
    let table = StateTable::new(t);
    let n = table.len();
    const UNSEEN: u32 = u32::MAX;
    let mut orbit_of = vec![UNSEEN; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if orbit_of[start] != UNSEEN {
            continue;
        }
        let id = orbits.len() as u32;
        let mut orbit = vec![start];
        orbit_of[start] = id;
        let mut cur = table.next(start);
        while cur != start {
            orbit_of[cur] = id;
            orbit.push(cur);
            cur = table.next(cur);
        }
        orbits.push(orbit);
    }

    let rho = |idx: usize| reverse_state(t, ZigzagState::from_index(t, idx)).index(t);
    let mut partner = vec![UNSEEN; orbits.len()];
    for (id, orbit) in orbits.iter().enumerate() {
        let other = orbit_of[rho(orbit[0])];
        assert_ne!(other as usize, id, "zigzag orbit {id} is self-reversed");
        for &s in orbit {
            assert_eq!(orbit_of[rho(s)], other, "reversal does not map orbits to orbits");
        }
        partner[id] = other;
    }

    let mut pairs = Vec::with_capacity(orbits.len() / 2);
    for (id, orbit) in orbits.iter().enumerate() {
        let other = partner[id] as usize;
        if other < id {
            continue;
        }
        let a = Zigzag::from_orbit(orbit.iter().map(|&i| ZigzagState::from_index(t, i)).collect());
        let b = Zigzag::from_orbit(orbits[other].iter().map(|&i| ZigzagState::from_index(t, i)).collect());
        let (forward, reverse) = if a.darts().lt(b.darts()) { (a, b) } else { (b, a) };
        pairs.push(ZigzagPair { forward, reverse });
    }
    pairs.sort_by(|x, y| x.forward.darts().cmp(y.forward.darts()));

    let mut locate = vec![
        StateLocation {
            pair: 0,
            forward: true,
            position: 0
        };
        n
    ];
    for (p, pair) in pairs.iter().enumerate() {
        for (forward, z) in [(true, &pair.forward), (false, &pair.reverse)] {
            for (pos, s) in z.states().iter().enumerate() {
                locate[s.index(t)] = StateLocation {
                    pair: p as u32,
                    forward,
                    position: pos as u32,
                };
            }
        }
    }
    ZigzagCensus { pairs, locate }
}

/// Indices of the reversal pairs whose traversal uses an edge of `f`.
pub fn zigzags_through_face(t: &Triangulation, census: &ZigzagCensus, f: FaceId) -> BTreeSet<usize> {
    omega_states(t, f)
        .into_iter()
        .map(|idx| census.locate_index(idx).pair as usize)
        .collect()
}

/// Label-level wrapper of [`zigzags_through_face`].
pub fn zigzags_through(t: &Triangulation, census: &ZigzagCensus, f: &Face) -> Result<BTreeSet<usize>, SurfaceError> {
    Ok(zigzags_through_face(t, census, t.require_face(f)?))
}

/// The twelve state indices whose dart is an oriented edge of `f`: two faces
/// per edge, two directions per face.
pub(crate) fn omega_states(t: &Triangulation, f: FaceId) -> Vec<usize> {
    let [p, q, r] = t.face_vertices(f);
    let mut out = Vec::with_capacity(12);
    for (x, y) in [(p, q), (q, r), (p, r)] {
        let e = t.edge_id_of(x, y).expect("face edge exists");
        for g in t.edge_faces(e) {
            let vs = t.face_vertices(g);
            for d in [Dart::new(x, y), Dart::new(y, x)] {
                out.push(g.0 as usize * 6 + dart_slot(vs, d).expect("edge lies in face"));
            }
        }
    }
    out
}

/// Occurrence count of each face in a shadow.
pub fn shadow_counts(shadow: &[FaceId], face_count: usize) -> Vec<u32> {
    let mut counts = vec![0u32; face_count];
    for f in shadow {
        counts[f.0 as usize] += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    First,
    Second,
}

/// The face shadow of a zigzag restricted to two faces, kept with the
/// original shadow positions so adjacency can be inspected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShadowWord {
    pub shadow_len: usize,
    pub entries: Vec<(usize, Letter)>,
}

impl ShadowWord {
    pub fn letters(&self) -> Vec<Letter> {
        self.entries.iter().map(|&(_, l)| l).collect()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.entries.iter().filter(|&&(_, l)| l == letter).count()
    }

    /// Whether `a` is immediately followed by `b` somewhere in the shadow.
    pub fn has_adjacent(&self, a: Letter, b: Letter) -> bool {
        let n = self.entries.len();
        (0..n).any(|i| {
            let (p, x) = self.entries[i];
            let (q, y) = self.entries[(i + 1) % n];
            x == a && y == b && (p + 1) % self.shadow_len == q
        })
    }

    /// `F F' F' F' F F` with both transitions realized by adjacent shadow
    /// entries.
    pub fn matches_block_pattern(&self) -> bool {
        use Letter::*;
        cyclic_match(&self.letters(), &[First, Second, Second, Second, First, First])
            && self.has_adjacent(First, Second)
            && self.has_adjacent(Second, First)
    }

    /// `F F' F F' F F'` with both transitions realized by adjacent shadow
    /// entries somewhere.
    pub fn matches_alternating_pattern(&self) -> bool {
        use Letter::*;
        cyclic_match(&self.letters(), &[First, Second, First, Second, First, Second])
            && self.has_adjacent(First, Second)
            && self.has_adjacent(Second, First)
    }

    pub fn render(&self) -> String {
        self.letters()
            .iter()
            .map(|l| match l {
                Letter::First => "F",
                Letter::Second => "F'",
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Equality of cyclic words up to rotation and reversal.
fn cyclic_match<T: PartialEq + Clone>(word: &[T], pattern: &[T]) -> bool {
    if word.len() != pattern.len() {
        return false;
    }
    let n = word.len();
    let reversed: Vec<T> = pattern.iter().rev().cloned().collect();
    (0..n.max(1))
        .any(|r| (0..n).all(|i| word[i] == pattern[(i + r) % n]) || (0..n).all(|i| word[i] == reversed[(i + r) % n]))
}

pub fn shadow_occurrence_word(z: &Zigzag, first: FaceId, second: FaceId) -> ShadowWord {
    let shadow = z.face_shadow();
    let entries = shadow
        .iter()
        .enumerate()
        .filter_map(|(i, &f)| {
            if f == first {
                Some((i, Letter::First))
            } else if f == second {
                Some((i, Letter::Second))
            } else {
                None
            }
        })
        .collect();
    ShadowWord {
        shadow_len: shadow.len(),
        entries,
    }
}

/// Start index of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            std::cmp::Ordering::Equal => k += 1,
            std::cmp::Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            std::cmp::Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bipyramid, platonic, Platonic};
    use crate::surface::VertexLabel;
    use proptest::prelude::*;

    fn oe(t: &Triangulation, a: &str, b: &str) -> Dart {
        t.dart_of(&OrientedEdge::new(VertexLabel::new(a).unwrap(), VertexLabel::new(b).unwrap()).unwrap())
            .unwrap()
    }

    fn state(t: &Triangulation, face: [&str; 3], a: &str, b: &str) -> ZigzagState {
        let f = Face::parse(&face.join(",")).unwrap();
        ZigzagState::new(t, t.face_id(&f).unwrap(), oe(t, a, b)).unwrap()
    }

    fn render(t: &Triangulation, z: &Zigzag) -> Vec<String> {
        z.darts()
            .map(|d| format!("{}{}", t.label(d.tail), t.label(d.head)))
            .collect()
    }

    #[test]
    fn step_on_tetrahedron() {
        let t = platonic(Platonic::Tetrahedron);
        let s = state(&t, ["1", "2", "3"], "2", "3");
        assert_eq!(step(&t, s), state(&t, ["2", "3", "4"], "3", "4"));
    }

    #[test]
    fn step_on_bipyramid_follows_example_sequence() {
        let t = bipyramid(3).unwrap();
        let s = state(&t, ["a", "1", "2"], "1", "2");
        assert_eq!(step(&t, s), state(&t, ["b", "1", "2"], "2", "b"));
        // "2b, b3, 31"
        let s = state(&t, ["b", "2", "3"], "b", "3");
        assert_eq!(step(&t, s), state(&t, ["b", "1", "3"], "3", "1"));
    }

    #[test]
    fn reverse_state_example_and_involution() {
        let t = platonic(Platonic::Tetrahedron);
        let s = state(&t, ["1", "2", "3"], "2", "3");
        assert_eq!(reverse_state(&t, s), state(&t, ["1", "2", "3"], "2", "1"));

        let t = bipyramid(3).unwrap();
        for i in 0..36 {
            let s = ZigzagState::from_index(&t, i);
            assert_eq!(reverse_state(&t, reverse_state(&t, s)), s);
        }
    }

    #[test]
    fn reversal_conjugates_step_to_inverse() {
        let t = platonic(Platonic::Tetrahedron);
        for i in 0..24 {
            let s = ZigzagState::from_index(&t, i);
            let conj = reverse_state(&t, step(&t, reverse_state(&t, s)));
            assert_eq!(step(&t, conj), s);
            assert_eq!(conj, step_back(&t, s));
        }
    }

    #[test]
    fn trace_on_tetrahedron() {
        let t = platonic(Platonic::Tetrahedron);
        let z = trace(&t, state(&t, ["1", "2", "3"], "1", "2"));
        assert_eq!(render(&t, &z), ["12", "24", "43", "31"]);
        let z = trace(&t, state(&t, ["1", "2", "4"], "1", "2"));
        assert_eq!(render(&t, &z), ["12", "23", "34", "41"]);
        assert_eq!(
            z.face_shadow()
                .iter()
                .map(|&f| t.face(f).to_string())
                .collect::<Vec<_>>(),
            ["1-2-3", "2-3-4", "1-3-4", "1-2-4"]
        );
    }

    #[test]
    fn trace_is_orbit_invariant() {
        let t = bipyramid(5).unwrap();
        for i in 0..t.face_count() * 6 {
            let s = ZigzagState::from_index(&t, i);
            assert_eq!(trace(&t, s), trace(&t, step(&t, s)));
        }
    }

    #[test]
    fn bipyramid_three_census() {
        let t = bipyramid(3).unwrap();
        let census = enumerate(&t);
        assert_eq!(census.pair_count(), 1);
        assert_eq!(census.pairs()[0].len(), 18);
        let z = &census.pairs()[0].forward;
        let counts = shadow_counts(&z.face_shadow(), t.face_count());
        assert!(counts.iter().all(|&c| c == 3));
        z.audit(&t).unwrap();
    }

    #[test]
    fn tetrahedron_census_and_face_membership() {
        let t = platonic(Platonic::Tetrahedron);
        let census = enumerate(&t);
        assert_eq!(census.pair_count(), 3);
        assert!(census.pairs().iter().all(|p| p.len() == 4));
        let f = Face::parse("1,2,3").unwrap();
        assert_eq!(zigzags_through(&t, &census, &f).unwrap().len(), 3);
        let missing = Face::parse("1,2,9").unwrap();
        assert!(zigzags_through(&t, &census, &missing).is_err());
    }

    #[test]
    fn bipyramid_six_pairs() {
        let t = bipyramid(6).unwrap();
        let census = enumerate(&t);
        let lens: Vec<_> = census.pairs().iter().map(ZigzagPair::len).collect();
        assert_eq!(lens, [18, 18]);
    }

    #[test]
    fn reversed_zigzag_is_the_partner() {
        let t = bipyramid(7).unwrap();
        let census = enumerate(&t);
        for p in census.pairs() {
            assert_eq!(p.forward.reversed(&t), p.reverse);
            assert_eq!(p.reverse.reversed(&t), p.forward);
        }
    }

    #[test]
    fn word_without_second_face() {
        let t = bipyramid(3).unwrap();
        let census = enumerate(&t);
        let z = &census.pairs()[0].forward;
        // A face index beyond the triangulation never appears in the shadow.
        let w = shadow_occurrence_word(z, FaceId(0), FaceId(u32::MAX));
        assert_eq!(w.count(Letter::Second), 0);
        assert_eq!(w.count(Letter::First), 3);
    }

    #[test]
    fn cyclic_match_handles_rotation_and_reversal() {
        assert!(cyclic_match(&[1, 2, 2, 2, 1, 1], &[2, 2, 2, 1, 1, 1]));
        assert!(cyclic_match(&[1, 2, 1, 2, 1, 2], &[2, 1, 2, 1, 2, 1]));
        assert!(!cyclic_match(&[1, 2, 1, 2, 2, 1], &[1, 2, 1, 2, 1, 2]));
        assert!(cyclic_match(&[1, 2, 3], &[3, 2, 1]));
    }

    proptest! {
        #[test]
        fn least_rotation_matches_brute_force(v in proptest::collection::vec(0u8..3, 1..24)) {
            let n = v.len();
            let r = least_rotation(&v);
            let rotated: Vec<u8> = (0..n).map(|i| v[(i + r) % n]).collect();
            let best = (0..n)
                .map(|s| (0..n).map(|i| v[(i + s) % n]).collect::<Vec<u8>>())
                .min()
                .unwrap();
            prop_assert_eq!(rotated, best);
        }
    }
}
