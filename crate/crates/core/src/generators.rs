//! Fixed and random instance factories.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{GraphFile, NodeId, PlaneTriangulation};

const ICOSAHEDRON_JSON: &str = include_str!("../data/icosahedron.json");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("bad generator spec: {0}")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    Triangle,
    K4,
    Octahedron,
    Icosahedron,
    Stacked,
    Random,
    LowerBound,
}

impl GenKind {
    /// Node count of the fixed instances.
    fn fixed_size(self) -> Option<usize> {
        match self {
            GenKind::Triangle => Some(3),
            GenKind::K4 => Some(4),
            GenKind::Octahedron => Some(6),
            GenKind::Icosahedron => Some(12),
            _ => None,
        }
    }
}

impl FromStr for GenKind {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "triangle" => GenKind::Triangle,
            "k4" => GenKind::K4,
            "octahedron" => GenKind::Octahedron,
            "icosahedron" => GenKind::Icosahedron,
            "stacked" => GenKind::Stacked,
            "random" => GenKind::Random,
            "lower_bound" => GenKind::LowerBound,
            other => return Err(GenError::BadSpec(format!("unknown kind {other:?}"))),
        })
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GenKind::Triangle => "triangle",
            GenKind::K4 => "k4",
            GenKind::Octahedron => "octahedron",
            GenKind::Icosahedron => "icosahedron",
            GenKind::Stacked => "stacked",
            GenKind::Random => "random",
            GenKind::LowerBound => "lower_bound",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    /// Required for the sized kinds; must match for the fixed ones if given.
    pub n: Option<usize>,
    pub seed: u64,
    pub flips: usize,
}

pub fn generate(spec: &GenSpec) -> Result<PlaneTriangulation, GenError> {
    if let Some(size) = spec.kind.fixed_size() {
        if spec.n.is_some_and(|n| n != size) {
            return Err(GenError::BadSpec(format!(
                "{} has exactly {size} nodes",
                spec.kind
            )));
        }
    }
    let sized = || match spec.n {
        None => Err(GenError::BadSpec(format!("{} needs --n", spec.kind))),
        Some(n) if n < 3 => Err(GenError::BadSpec(format!("n must be at least 3, got {n}"))),
        Some(n) => Ok(n),
    };
    Ok(match spec.kind {
        GenKind::Triangle => triangle(),
        GenKind::K4 => k4(),
        GenKind::Octahedron => octahedron(),
        GenKind::Icosahedron => icosahedron(),
        GenKind::Stacked => stacked(sized()?, spec.seed)?,
        GenKind::Random => random(sized()?, spec.seed, spec.flips)?,
        GenKind::LowerBound => lower_bound_family(sized()?),
    })
}

pub fn triangle() -> PlaneTriangulation {
    from_faces(3, &[[0, 1, 2]], [0, 1, 2])
}

pub fn k4() -> PlaneTriangulation {
    from_faces(4, &[[0, 1, 3], [1, 2, 3], [2, 0, 3]], [0, 1, 2])
}

pub fn octahedron() -> PlaneTriangulation {
    let faces = [
        [0, 1, 3],
        [1, 4, 3],
        [1, 2, 4],
        [2, 5, 4],
        [2, 0, 5],
        [0, 3, 5],
        [3, 4, 5],
    ];
    from_faces(6, &faces, [0, 1, 2])
}

/// The regular icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10,
/// bottom 11.
pub fn icosahedron() -> PlaneTriangulation {
    let file: GraphFile = serde_json::from_str(ICOSAHEDRON_JSON).expect("bundled data parses");
    PlaneTriangulation::try_from(file).expect("bundled icosahedron is valid")
}

fn from_faces(n: usize, faces: &[[NodeId; 3]], outer: [NodeId; 3]) -> PlaneTriangulation {
    PlaneTriangulation::from_internal_faces(n, faces, outer).expect("fixed construction is valid")
}

/// Stacked (Apollonian) triangulation: each new node goes into a uniformly
/// random internal face.
pub fn stacked(n: usize, seed: u64) -> Result<PlaneTriangulation, GenError> {
    random(n, seed, 0)
}

/// A stacked triangulation followed by `flips` attempted diagonal flips of
/// uniformly random non-outer edges. Flips that would duplicate an edge are
/// skipped.
pub fn random(n: usize, seed: u64, flips: usize) -> Result<PlaneTriangulation, GenError> {
    if n < 3 {
        return Err(GenError::BadSpec(format!("n must be at least 3, got {n}")));
    }
    if n > NodeId::MAX as usize / 2 {
        return Err(GenError::BadSpec(format!("n = {n} is too large")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut map = DartMap::triangle(n);
    // One dart per internal face, with the face on its left.
    let mut faces: Vec<usize> = Vec::with_capacity(2 * n);
    faces.push(0);
    for x in 3..n as NodeId {
        let i = rng.gen_range(0..faces.len());
        let (d_bc, d_ca) = map.stack(faces[i], x);
        faces.push(d_bc);
        faces.push(d_ca);
    }
    let m = map.edge_count();
    if m > 3 {
        for _ in 0..flips {
            let e = rng.gen_range(3..m);
            map.flip(e);
        }
    }
    Ok(map.into_triangulation())
}

/// Combinatorial map with darts `2e` and `2e + 1` for edge `e`; `next` and
/// `prev` are the counterclockwise successor and predecessor around the tail.
struct DartMap {
    head: Vec<NodeId>,
    next: Vec<usize>,
    prev: Vec<usize>,
    first: Vec<usize>,
}

impl DartMap {
    /// The triangle 0, 1, 2 with room for `n` nodes. Dart 0 is 0 -> 1 with
    /// the internal face on its left.
    fn triangle(n: usize) -> Self {
        let cap = 2 * (3 * n - 6).max(3);
        let mut map = DartMap {
            head: Vec::with_capacity(cap),
            next: Vec::with_capacity(cap),
            prev: Vec::with_capacity(cap),
            first: vec![usize::MAX; n],
        };
        // Edges 0: 0-1, 1: 1-2, 2: 2-0.
        for (u, v) in [(0, 1), (1, 2), (2, 0)] {
            map.head.push(v);
            map.head.push(u);
        }
        map.next.resize(6, 0);
        map.prev.resize(6, 0);
        // Around 0: 0->1 (0), 0->2 (5). Around 1: 1->2 (2), 1->0 (1).
        // Around 2: 2->0 (4), 2->1 (3).
        for (a, b) in [(0, 5), (2, 1), (4, 3)] {
            map.link(a, b);
            map.link(b, a);
        }
        map.first[0] = 0;
        map.first[1] = 2;
        map.first[2] = 4;
        map
    }

    fn edge_count(&self) -> usize {
        self.head.len() / 2
    }

    fn link(&mut self, a: usize, b: usize) {
        self.next[a] = b;
        self.prev[b] = a;
    }

    fn insert_after(&mut self, at: usize, d: usize) {
        let b = self.next[at];
        self.link(at, d);
        self.link(d, b);
    }

    fn unlink(&mut self, d: usize) {
        let (a, b) = (self.prev[d], self.next[d]);
        self.link(a, b);
        let tail = self.head[d ^ 1] as usize;
        if self.first[tail] == d {
            self.first[tail] = b;
        }
    }

    fn face_next(&self, d: usize) -> usize {
        self.prev[d ^ 1]
    }

    fn new_edge(&mut self, u: NodeId, v: NodeId) -> usize {
        let d = self.head.len();
        self.head.push(v);
        self.head.push(u);
        self.next.extend([d, d + 1]);
        self.prev.extend([d, d + 1]);
        d
    }

    /// Inserts node `x` into the face left of `d`. Afterwards `d` and the two
    /// returned darts each bound one of the three new faces.
    fn stack(&mut self, d: usize, x: NodeId) -> (usize, usize) {
        let d_bc = self.face_next(d);
        let d_ca = self.face_next(d_bc);
        let corners = [d, d_bc, d_ca];
        let mut spokes = [0usize; 3];
        for (i, &c) in corners.iter().enumerate() {
            let tail = self.head[c ^ 1];
            let s = self.new_edge(tail, x);
            self.insert_after(c, s);
            spokes[i] = s ^ 1;
        }
        // Around x: a, b, c.
        self.link(spokes[0], spokes[1]);
        self.link(spokes[1], spokes[2]);
        self.link(spokes[2], spokes[0]);
        self.first[x as usize] = spokes[0];
        (d_bc, d_ca)
    }

    fn adjacent(&self, u: NodeId, v: NodeId) -> bool {
        let start = self.first[u as usize];
        let mut d = start;
        loop {
            if self.head[d] == v {
                return true;
            }
            d = self.next[d];
            if d == start {
                return false;
            }
        }
    }

    /// Replaces edge `e` by the other diagonal of its quadrilateral unless
    /// that diagonal already exists.
    fn flip(&mut self, e: usize) -> bool {
        let d = 2 * e;
        let t = d + 1;
        let w = self.head[self.prev[t]];
        let z = self.head[self.prev[d]];
        if self.adjacent(w, z) {
            return false;
        }
        let d_wu = self.prev[self.prev[t] ^ 1];
        let d_zv = self.prev[self.prev[d] ^ 1];
        self.unlink(d);
        self.unlink(t);
        self.head[d] = z;
        self.head[t] = w;
        self.insert_after(d_wu, d);
        self.insert_after(d_zv, t);
        true
    }

    /// Rotation of `v` as a dart iterator.
    fn rotation(&self, v: usize) -> impl Iterator<Item = NodeId> + '_ {
        let start = self.first[v];
        let mut d = start;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let h = self.head[d];
            d = self.next[d];
            done = d == start;
            Some(h)
        })
    }

    /// Builds the triangulation with nodes renamed in breadth-first order
    /// from the outer face, which keeps neighbors close in memory. The outer
    /// nodes keep ids 0, 1, 2.
    fn into_triangulation(self) -> PlaneTriangulation {
        let n = self.first.len();
        let mut id = vec![NodeId::MAX; n];
        let mut queue: Vec<NodeId> = vec![0, 1, 2];
        for v in 0..3 {
            id[v] = v as NodeId;
        }
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head] as usize;
            head += 1;
            for u in self.rotation(v) {
                if id[u as usize] == NodeId::MAX {
                    id[u as usize] = queue.len() as NodeId;
                    queue.push(u);
                }
            }
        }
        let rotation = queue
            .iter()
            .map(|&v| self.rotation(v as usize).map(|u| id[u as usize]).collect())
            .collect();
        PlaneTriangulation::from_rotation_system(n, rotation, [0, 1, 2])
            .expect("stacking and flips preserve triangulations")
    }
}

/// Internal faces and outer face of `H_n`, the family whose every canonical
/// ordering needs width about `4n/3`.
fn lower_bound_faces(n: usize) -> (Vec<[NodeId; 3]>, [NodeId; 3]) {
    assert!(n >= 3, "H_n needs n >= 3");
    let base = match n % 3 {
        0 => 3,
        1 => 4,
        _ => 5,
    };
    let mut faces: Vec<[NodeId; 3]> = match base {
        3 => vec![[0, 1, 2]],
        4 => vec![[0, 1, 3], [1, 2, 3], [2, 0, 3]],
        _ => vec![[1, 2, 3], [2, 0, 3], [0, 1, 4], [1, 3, 4], [3, 0, 4]],
    };
    let mut outer: [NodeId; 3] = [0, 1, 2];
    let mut k = base as NodeId;
    while (k as usize) < n {
        let [u1, u2, u3] = outer;
        let (a, b, c) = (k, k + 1, k + 2);
        faces.extend([
            [a, u2, u1],
            [a, b, u2],
            [b, u3, u2],
            [b, c, u3],
            [c, u1, u3],
            [c, a, u1],
        ]);
        outer = [a, b, c];
        k += 3;
    }
    (faces, outer)
}

/// `H_n`: the triangle, `K4` or `K4` with one face stacked, wrapped in new
/// outer triangles three nodes at a time.
pub fn lower_bound_family(n: usize) -> PlaneTriangulation {
    let (faces, outer) = lower_bound_faces(n);
    from_faces(n, &faces, outer)
}
