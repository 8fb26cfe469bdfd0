//! Seeded random corpus and worked-example fixtures shared by the
//! integration suites.

#![allow(dead_code)]

use std::sync::OnceLock;

use zmono::generators::{bipyramid, bipyramid_with_suffix, random_triangulation, Base};
use zmono::sum::{connected_sum, SpecialMap, SumResult};
use zmono::surface::FaceId;
use zmono::{Face, Triangulation};

pub const SEEDS_PER_BASE: u64 = 40;

/// Base descriptors of the corpus: spheres, the projective plane, the torus,
/// and connected sums reaching Euler characteristic 0, -1 and -2.
pub const BASES: [&str; 13] = [
    "tetrahedron",
    "bipyramid:3",
    "bipyramid:4",
    "bipyramid:5",
    "bipyramid:6",
    "bipyramid:7",
    "bipyramid:8",
    "rp2",
    "torus-k7",
    "rp2#rp2",
    "torus-k7#rp2",
    "torus-k7#torus-k7",
    "bipyramid:3#bipyramid:5",
];

pub struct Instance {
    pub name: String,
    pub t: Triangulation,
}

/// Step count for seed `s`: spreads instances from the base size up to
/// roughly 200 faces.
pub fn steps_for(seed: u64) -> usize {
    (seed as usize * 37) % 120
}

pub fn corpus() -> &'static [Instance] {
    static CORPUS: OnceLock<Vec<Instance>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut out = Vec::new();
        for base in BASES {
            let b: Base = base.parse().expect("valid base");
            for seed in 1..=SEEDS_PER_BASE {
                let steps = steps_for(seed);
                let (t, _) = random_triangulation(&b, steps, seed).expect("generation succeeds");
                out.push(Instance {
                    name: format!("{base}/steps={steps}/seed={seed}"),
                    t,
                });
            }
        }
        out
    })
}

/// Parses `x,y,z` face literals.
pub fn faces(list: &[&str]) -> Vec<Face> {
    list.iter().map(|s| Face::parse(s).expect("face literal")).collect()
}

pub fn face_id(t: &Triangulation, text: &str) -> FaceId {
    t.require_face(&Face::parse(text).expect("face literal"))
        .expect("face present")
}

/// BP_3 # BP'_3 glued along a12 and a'1'2' with a=a', 1=1', 2=2'.
pub fn bp3_sum() -> SumResult {
    let t1 = bipyramid(3).unwrap();
    let t2 = bipyramid_with_suffix(3, "'").unwrap();
    let m = SpecialMap::parse(
        Face::parse("a,1,2").unwrap(),
        Face::parse("a',1',2'").unwrap(),
        "a=a',1=1',2=2'",
    )
    .unwrap();
    connected_sum(&t1, &t2, &m).unwrap()
}

/// BP_6 # BP'_6 glued along a12 and a'1'2' with a=2', 1=a', 2=1'.
pub fn bp6_sum() -> SumResult {
    let t1 = bipyramid(6).unwrap();
    let t2 = bipyramid_with_suffix(6, "'").unwrap();
    let m = SpecialMap::parse(
        Face::parse("a,1,2").unwrap(),
        Face::parse("a',1',2'").unwrap(),
        "a=2',1=a',2=1'",
    )
    .unwrap();
    connected_sum(&t1, &t2, &m).unwrap()
}

/// Faces of the BP_6 # BP'_6 sum with identity monodromy.
pub const BP6_SUM_M1: [&str; 10] = [
    "a,2,3", "a,3,4", "a,6,1", "a,1,3'", "b,4,5", "b,5,6", "1,5',6'", "1,2,6'", "b',3',4'", "b',4',5'",
];

/// Faces of the BP_6 # BP'_6 sum whose monodromy is the rotation.
pub const BP6_SUM_M2: [&str; 12] = [
    "a,4,5", "a,5,6", "1,3',4'", "1,4',5'", "b,6,1", "b,1,2", "b,2,3", "b,3,4", "a,b',3'", "a,b',2", "b',2,6'",
    "b',5',6'",
];
