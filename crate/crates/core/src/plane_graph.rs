//! Embedded plane triangulations.
//!
//! A triangulation is stored as a rotation system in compressed form: the
//! neighbors of node `v` occupy `adj[offsets[v]..offsets[v + 1]]` in
//! counterclockwise order. Each slot of `adj` is a *dart* (directed edge)
//! `v -> adj[d]`, and `twin[d]` is the dart of the reverse direction.
//!
//! Faces are traced with the "next edge clockwise after the reverse edge"
//! rule, which walks the face lying to the left of each dart. For
//! `outer = [a, b, c]` listed counterclockwise, the unbounded face is the one
//! to the left of the dart `b -> a`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense 0-based node identifier.
pub type NodeId = u32;

/// Dart (directed edge) index into the rotation arrays.
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a triangulation needs at least 3 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("rotation table has {found} entries, expected {expected}")]
    RotationLength { expected: usize, found: usize },
    #[error("node id {0} is out of range")]
    NodeOutOfRange(NodeId),
    #[error("graph is not simple at edge ({0}, {1})")]
    NotSimple(NodeId, NodeId),
    #[error("node {0} lists {1} as a neighbor but not vice versa")]
    Asymmetric(NodeId, NodeId),
    #[error("edge count {found} does not match 3n-6 = {expected}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("face through dart {0} -> {1} is not a triangle")]
    NotTriangulated(NodeId, NodeId),
    #[error("embedding has {found} faces, a plane triangulation has {expected}")]
    NotPlanar { expected: usize, found: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("outer triple {0:?} is not a face of the embedding")]
    OuterNotAFace([NodeId; 3]),
    #[error("operation requires at least {required} nodes, got {found}")]
    TooSmall { required: usize, found: usize },
}

/// On-disk graph format: `{"n": .., "outer": [a, b, c], "rotation": [[..], ..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub outer: [NodeId; 3],
    pub rotation: Vec<Vec<NodeId>>,
}

/// A validated, immutable plane triangulation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct PlaneTriangulation {
    offsets: Vec<usize>,
    adj: Vec<NodeId>,
    twin: Vec<Dart>,
    outer: [NodeId; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    /// Boundary nodes in traversal order (counterclockwise around the face).
    pub nodes: [NodeId; 3],
    pub external: bool,
}

/// Complete face census of a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceList {
    pub faces: Vec<Face>,
    /// Face index to the left of each dart.
    pub dart_face: Vec<u32>,
}

impl FaceList {
    pub fn internal(&self) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(|(_, f)| !f.external)
    }
}

/// Which of the width-relevant degrees occur among internal nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub has_internal_deg3: bool,
    pub has_internal_deg5: bool,
}

impl PlaneTriangulation {
    /// Builds and validates a triangulation from counterclockwise rotation lists.
    pub fn from_rotation_system(
        n: usize,
        rotation: Vec<Vec<NodeId>>,
        outer: [NodeId; 3],
    ) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::TooFewNodes(n));
        }
        if rotation.len() != n {
            return Err(GraphError::RotationLength {
                expected: n,
                found: rotation.len(),
            });
        }
        for &o in &outer {
            if o as usize >= n {
                return Err(GraphError::NodeOutOfRange(o));
            }
        }

        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for list in &rotation {
            offsets.push(offsets.last().unwrap() + list.len());
        }
        let mut adj = Vec::with_capacity(*offsets.last().unwrap());
        for (v, list) in rotation.iter().enumerate() {
            for &u in list {
                if u as usize >= n {
                    return Err(GraphError::NodeOutOfRange(u));
                }
                if u as usize == v {
                    return Err(GraphError::NotSimple(v as NodeId, u));
                }
                adj.push(u);
            }
        }
        drop(rotation);

        let twin = compute_twins(n, &offsets, &adj)?;
        let g = PlaneTriangulation {
            offsets,
            adj,
            twin,
            outer,
        };
        g.validate()?;
        Ok(g)
    }

    /// Builds a triangulation from its counterclockwise internal faces; the
    /// outer face is implied by `outer`.
    pub fn from_internal_faces(
        n: usize,
        faces: &[[NodeId; 3]],
        outer: [NodeId; 3],
    ) -> Result<Self, GraphError> {
        let [a, b, c] = outer;
        let mut all = Vec::with_capacity(faces.len() + 1);
        all.extend_from_slice(faces);
        all.push([b, a, c]);
        Self::from_traced_faces(n, &all, outer)
    }

    /// Builds a triangulation from every face (outer face included), each
    /// given as traced by the left-face rule.
    pub fn from_traced_faces(
        n: usize,
        faces: &[[NodeId; 3]],
        outer: [NodeId; 3],
    ) -> Result<Self, GraphError> {
        // In face (a, b, c), the neighbor after b around a is c.
        let mut succ: Vec<(NodeId, NodeId, NodeId)> = Vec::with_capacity(faces.len() * 3);
        for &[a, b, c] in faces {
            for &x in &[a, b, c] {
                if x as usize >= n {
                    return Err(GraphError::NodeOutOfRange(x));
                }
            }
            succ.push((a, b, c));
            succ.push((b, c, a));
            succ.push((c, a, b));
        }
        succ.sort_unstable();
        let mut rotation = vec![Vec::new(); n];
        let mut start = 0;
        while start < succ.len() {
            let v = succ[start].0;
            let mut end = start;
            while end < succ.len() && succ[end].0 == v {
                end += 1;
            }
            let block = &succ[start..end];
            let first = block[0].1;
            let mut cur = first;
            let list = &mut rotation[v as usize];
            loop {
                list.push(cur);
                if list.len() > block.len() {
                    return Err(GraphError::NotSimple(v, cur));
                }
                let idx = block
                    .binary_search_by(|probe| probe.1.cmp(&cur))
                    .map_err(|_| GraphError::NotTriangulated(v, cur))?;
                cur = block[idx].2;
                if cur == first {
                    break;
                }
            }
            if list.len() != block.len() {
                return Err(GraphError::NotTriangulated(v, first));
            }
            start = end;
        }
        Self::from_rotation_system(n, rotation, outer)
    }

    fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        let m = self.adj.len() / 2;
        let expected = 3 * n - 6;
        if m != expected {
            return Err(GraphError::EdgeCountMismatch { expected, found: m });
        }

        // Every face must close after exactly three darts.
        let mut seen = vec![false; self.adj.len()];
        let mut face_count = 0usize;
        for d in 0..self.adj.len() {
            if seen[d] {
                continue;
            }
            let mut cur = d;
            let mut len = 0;
            loop {
                if seen[cur] {
                    break;
                }
                seen[cur] = true;
                len += 1;
                cur = self.face_next(cur);
                if len > 3 {
                    break;
                }
            }
            if len != 3 || cur != d {
                return Err(GraphError::NotTriangulated(self.tail(d), self.head(d)));
            }
            face_count += 1;
        }
        if face_count != 2 * n - 4 {
            return Err(GraphError::NotPlanar {
                expected: 2 * n - 4,
                found: face_count,
            });
        }

        let mut visited = vec![false; n];
        let mut stack = vec![0 as NodeId];
        visited[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in self.neighbors(v) {
                if !visited[u as usize] {
                    visited[u as usize] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        if count != n {
            return Err(GraphError::Disconnected);
        }

        let [a, b, c] = self.outer;
        let ok = match self.dart_between(b, a) {
            Some(d) => {
                let d2 = self.face_next(d);
                self.head(d2) == c
            }
            None => false,
        };
        if !ok {
            return Err(GraphError::OuterNotAFace(self.outer));
        }
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.adj.len() / 2
    }

    #[inline]
    pub fn dart_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn outer(&self) -> [NodeId; 3] {
        self.outer
    }

    #[inline]
    pub fn is_external(&self, v: NodeId) -> bool {
        self.outer.contains(&v)
    }

    /// Counterclockwise neighbors of `v`.
    #[inline]
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adj[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    #[inline]
    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    #[inline]
    pub fn darts(&self, v: NodeId) -> std::ops::Range<Dart> {
        self.offsets[v as usize]..self.offsets[v as usize + 1]
    }

    #[inline]
    pub fn head(&self, d: Dart) -> NodeId {
        self.adj[d]
    }

    #[inline]
    pub fn tail(&self, d: Dart) -> NodeId {
        self.adj[self.twin[d]]
    }

    #[inline]
    pub fn twin(&self, d: Dart) -> Dart {
        self.twin[d]
    }

    /// Next dart counterclockwise around the tail of `d`.
    #[inline]
    pub fn next_ccw(&self, d: Dart) -> Dart {
        let v = self.tail(d) as usize;
        if d + 1 == self.offsets[v + 1] {
            self.offsets[v]
        } else {
            d + 1
        }
    }

    /// Next dart clockwise around the tail of `d`.
    #[inline]
    pub fn next_cw(&self, d: Dart) -> Dart {
        let v = self.tail(d) as usize;
        if d == self.offsets[v] {
            self.offsets[v + 1] - 1
        } else {
            d - 1
        }
    }

    /// Next dart along the face to the left of `d`.
    #[inline]
    pub fn face_next(&self, d: Dart) -> Dart {
        self.next_cw(self.twin[d])
    }

    /// Dart `u -> v`, if the edge exists. Linear in `deg(u)`.
    pub fn dart_between(&self, u: NodeId, v: NodeId) -> Option<Dart> {
        self.darts(u).find(|&d| self.adj[d] == v)
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).contains(&b)
    }

    /// The dart whose left face is the unbounded face.
    pub fn outer_dart(&self) -> Dart {
        let [a, b, _] = self.outer;
        self.dart_between(b, a).expect("validated outer face")
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.n() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn faces(&self) -> FaceList {
        let mut dart_face = vec![u32::MAX; self.adj.len()];
        let mut faces = Vec::with_capacity(2 * self.n() - 4);
        let outer_dart = self.outer_dart();
        for d in 0..self.adj.len() {
            if dart_face[d] != u32::MAX {
                continue;
            }
            let id = faces.len() as u32;
            let d1 = self.face_next(d);
            let d2 = self.face_next(d1);
            dart_face[d] = id;
            dart_face[d1] = id;
            dart_face[d2] = id;
            faces.push(Face {
                nodes: [self.tail(d), self.tail(d1), self.tail(d2)],
                external: false,
            });
        }
        faces[dart_face[outer_dart] as usize].external = true;
        FaceList { faces, dart_face }
    }

    /// True iff no triangle of the graph separates it (every 3-cycle is a face).
    pub fn is_four_connected(&self) -> Result<bool, GraphError> {
        let n = self.n();
        if n < 5 {
            return Err(GraphError::TooSmall {
                required: 5,
                found: n,
            });
        }
        Ok(self.triangle_count() == 2 * n - 4)
    }

    /// Number of 3-cycles, by orienting edges along a degree order so each
    /// node has few out-neighbors.
    fn triangle_count(&self) -> usize {
        let n = self.n();
        let rank = |v: NodeId| (self.degree(v), v);
        let mut out_offsets = Vec::with_capacity(n + 1);
        out_offsets.push(0usize);
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 0..n as NodeId {
            for &u in self.neighbors(v) {
                if rank(v) < rank(u) {
                    out.push(u);
                }
            }
            out_offsets.push(out.len());
        }
        let mut mark = vec![u32::MAX; n];
        let mut count = 0;
        for v in 0..n {
            let outs = &out[out_offsets[v]..out_offsets[v + 1]];
            for &u in outs {
                mark[u as usize] = v as u32;
            }
            for &u in outs {
                let u = u as usize;
                for &w in &out[out_offsets[u]..out_offsets[u + 1]] {
                    if mark[w as usize] == v as u32 {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    pub fn internal_degree_profile(&self) -> DegreeProfile {
        let mut profile = DegreeProfile {
            has_internal_deg3: false,
            has_internal_deg5: false,
        };
        for v in 0..self.n() as NodeId {
            if self.is_external(v) {
                continue;
            }
            match self.degree(v) {
                3 => profile.has_internal_deg3 = true,
                5 => profile.has_internal_deg5 = true,
                _ => {}
            }
        }
        profile
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            n: self.n(),
            outer: self.outer,
            rotation: (0..self.n() as NodeId)
                .map(|v| self.neighbors(v).to_vec())
                .collect(),
        }
    }
}

impl TryFrom<GraphFile> for PlaneTriangulation {
    type Error = GraphError;

    fn try_from(file: GraphFile) -> Result<Self, Self::Error> {
        Self::from_rotation_system(file.n, file.rotation, file.outer)
    }
}

impl From<PlaneTriangulation> for GraphFile {
    fn from(g: PlaneTriangulation) -> Self {
        g.to_file()
    }
}

/// Pairs every dart with its reverse in linear time, rejecting duplicate and
/// one-sided adjacencies.
fn compute_twins(n: usize, offsets: &[usize], adj: &[NodeId]) -> Result<Vec<Dart>, GraphError> {
    // Bucket incoming darts by head; buckets come out sorted by tail.
    let mut in_count = vec![0usize; n + 1];
    for &h in adj {
        in_count[h as usize + 1] += 1;
    }
    for i in 0..n {
        in_count[i + 1] += in_count[i];
    }
    let mut fill = in_count.clone();
    let mut incoming = vec![0 as Dart; adj.len()];
    for v in 0..n {
        for d in offsets[v]..offsets[v + 1] {
            let h = adj[d] as usize;
            incoming[fill[h]] = d;
            fill[h] += 1;
        }
    }

    let mut pos = vec![usize::MAX; n];
    let mut twin = vec![usize::MAX; adj.len()];
    for v in 0..n {
        for d in offsets[v]..offsets[v + 1] {
            let u = adj[d] as usize;
            if pos[u] != usize::MAX {
                return Err(GraphError::NotSimple(v as NodeId, u as NodeId));
            }
            pos[u] = d;
        }
        for &d_in in &incoming[in_count[v]..in_count[v + 1]] {
            // d_in is u -> v; find v -> u.
            let u = tail_of(offsets, d_in);
            let back = pos[u];
            if back == usize::MAX {
                return Err(GraphError::Asymmetric(u as NodeId, v as NodeId));
            }
            twin[d_in] = back;
        }
        for d in offsets[v]..offsets[v + 1] {
            pos[adj[d] as usize] = usize::MAX;
        }
    }
    for (d, &t) in twin.iter().enumerate() {
        if t == usize::MAX {
            let v = tail_of(offsets, d);
            return Err(GraphError::Asymmetric(adj[d], v as NodeId));
        }
    }
    Ok(twin)
}

fn tail_of(offsets: &[usize], d: Dart) -> usize {
    offsets.partition_point(|&o| o <= d) - 1
}
