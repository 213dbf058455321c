//! Test-side oracles. They work on plain rotation lists and share no code
//! with the library beyond reading a graph's rotation table.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use trivis::layout::VisibilityDrawing;
use trivis::plane_graph::GraphFile;
use trivis::{NodeId, PlaneTriangulation};

/// Rotation system with counterclockwise neighbor lists and outer face
/// `[a, b, c]`; the unbounded face lies to the left of `b -> a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rot {
    pub outer: [u32; 3],
    pub rot: Vec<Vec<u32>>,
}

impl Rot {
    pub fn of(g: &PlaneTriangulation) -> Rot {
        let f = g.to_file();
        Rot {
            outer: f.outer,
            rot: f.rotation,
        }
    }

    pub fn n(&self) -> usize {
        self.rot.len()
    }

    pub fn to_graph(&self) -> PlaneTriangulation {
        PlaneTriangulation::try_from(GraphFile {
            n: self.n(),
            outer: self.outer,
            rotation: self.rot.clone(),
        })
        .expect("oracle graph is a valid triangulation")
    }

    fn pos(&self, v: u32, u: u32) -> usize {
        self.rot[v as usize]
            .iter()
            .position(|&x| x == u)
            .expect("adjacent")
    }

    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        self.rot[u as usize].contains(&v)
    }

    pub fn ccw_after(&self, v: u32, u: u32) -> u32 {
        let r = &self.rot[v as usize];
        r[(self.pos(v, u) + 1) % r.len()]
    }

    pub fn cw_after(&self, v: u32, u: u32) -> u32 {
        let r = &self.rot[v as usize];
        r[(self.pos(v, u) + r.len() - 1) % r.len()]
    }

    pub fn is_external(&self, v: u32) -> bool {
        self.outer.contains(&v)
    }

    /// Faces as node triples, each listed with the face on its left.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        let mut seen = HashSet::new();
        let mut faces = Vec::new();
        for v in 0..self.n() as u32 {
            for &u in &self.rot[v as usize] {
                if seen.contains(&(v, u)) {
                    continue;
                }
                let mut face = Vec::new();
                let (mut a, mut b) = (v, u);
                while seen.insert((a, b)) {
                    face.push(a);
                    let c = self.cw_after(b, a);
                    a = b;
                    b = c;
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Internal faces as counterclockwise triples.
    pub fn internal_faces(&self) -> Vec<[u32; 3]> {
        let [a, b, _] = self.outer;
        self.faces()
            .into_iter()
            .filter(|f| {
                let k = f.len();
                !(0..k).any(|i| f[i] == b && f[(i + 1) % k] == a)
            })
            .map(|f| [f[0], f[1], f[2]])
            .collect()
    }

    /// Inserts a new node into the internal face `(x, y, z)`.
    pub fn stack(&mut self, [x, y, z]: [u32; 3]) {
        let w = self.n() as u32;
        for (a, after) in [(x, y), (y, z), (z, x)] {
            let i = self.pos(a, after);
            self.rot[a as usize].insert(i + 1, w);
        }
        self.rot.push(vec![x, y, z]);
    }

    /// Flips the internal edge `uv` if the new diagonal is not yet an edge.
    pub fn flip(&mut self, u: u32, v: u32) -> bool {
        let o = self.outer;
        if o.contains(&u) && o.contains(&v) {
            return false;
        }
        let x = self.ccw_after(u, v);
        let y = self.ccw_after(v, u);
        if x == y || self.adjacent(x, y) {
            return false;
        }
        let i = self.pos(u, v);
        self.rot[u as usize].remove(i);
        let i = self.pos(v, u);
        self.rot[v as usize].remove(i);
        let i = self.pos(x, u);
        self.rot[x as usize].insert(i + 1, y);
        let i = self.pos(y, v);
        self.rot[y as usize].insert(i + 1, x);
        true
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for v in 0..self.n() as u32 {
            for &u in &self.rot[v as usize] {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    /// Isomorphism-invariant code of the map rooted at the dart `a -> b`.
    pub fn rooted_code(&self) -> Vec<u32> {
        let n = self.n();
        let [a, b, _] = self.outer;
        let mut label = vec![u32::MAX; n];
        let mut order = vec![a];
        label[a as usize] = 0;
        let mut code = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            let r = &self.rot[v as usize];
            let start = if v == a {
                self.pos(a, b)
            } else {
                (0..r.len())
                    .filter(|&j| label[r[j] as usize] != u32::MAX)
                    .min_by_key(|&j| label[r[j] as usize])
                    .unwrap()
            };
            for k in 0..r.len() {
                let u = r[(start + k) % r.len()];
                if label[u as usize] == u32::MAX {
                    label[u as usize] = order.len() as u32;
                    order.push(u);
                }
                code.push(label[u as usize]);
            }
            code.push(u32::MAX);
            i += 1;
        }
        code
    }
}

/// Every rooted triangulation on `3..=max_n` nodes reachable from the
/// triangle by stacking and flipping, one representative per rooted code.
pub fn exhaustive_corpus(max_n: usize) -> Vec<Vec<Rot>> {
    let base = Rot {
        outer: [0, 1, 2],
        rot: vec![vec![1, 2], vec![2, 0], vec![0, 1]],
    };
    let mut levels = vec![vec![base]];
    while levels.len() + 2 < max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        let mut queue = VecDeque::new();
        for g in levels.last().unwrap() {
            for f in g.internal_faces() {
                let mut h = g.clone();
                h.stack(f);
                if seen.insert(h.rooted_code()) {
                    queue.push_back(h);
                }
            }
        }
        while let Some(g) = queue.pop_front() {
            for (u, v) in g.edges() {
                let mut h = g.clone();
                if h.flip(u, v) && seen.insert(h.rooted_code()) {
                    queue.push_back(h);
                }
            }
            next.push(g);
        }
        levels.push(next);
    }
    levels
}

pub type Parents = [Vec<Option<u32>>; 3];

/// Dart labels around an internal node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Out(usize),
    In(usize),
}

/// Schnyder's conditions, checked from scratch: each internal node has one
/// parent per tree, edges to external nodes go to the matching root, every
/// internal edge carries exactly one label, the local order is
/// `out0, in2*, out1, in0*, out2, in1*` counterclockwise, and trees are acyclic.
pub fn realizer_ok(g: &Rot, parent: &Parents) -> bool {
    let n = g.n();
    if parent.iter().any(|p| p.len() != n) {
        return false;
    }
    for v in 0..n as u32 {
        let vi = v as usize;
        if g.is_external(v) {
            if parent.iter().any(|p| p[vi].is_some()) {
                return false;
            }
            continue;
        }
        for i in 0..3 {
            match parent[i][vi] {
                None => return false,
                Some(p) if !g.adjacent(v, p) => return false,
                Some(p) if g.is_external(p) && p != g.outer[i] => return false,
                _ => {}
            }
        }
        let mut labels = Vec::new();
        for &u in &g.rot[vi] {
            let mut l = Vec::new();
            for i in 0..3 {
                if parent[i][vi] == Some(u) {
                    l.push(Label::Out(i));
                }
                if !g.is_external(u) && parent[i][u as usize] == Some(v) {
                    l.push(Label::In(i));
                }
            }
            if l.len() != 1 {
                return false;
            }
            labels.push(l[0]);
        }
        let start = labels.iter().position(|&l| l == Label::Out(0)).unwrap();
        let mut phase = 0;
        for k in 0..labels.len() {
            let l = labels[(start + k) % labels.len()];
            match l {
                Label::Out(i) if k > 0 => {
                    if i != phase + 1 {
                        return false;
                    }
                    phase = i;
                }
                Label::Out(_) => {}
                Label::In(i) => {
                    if i != (phase + 2) % 3 {
                        return false;
                    }
                }
            }
        }
        if phase != 2 {
            return false;
        }
    }
    for i in 0..3 {
        for v in 0..n as u32 {
            let mut x = v;
            let mut steps = 0;
            while let Some(p) = parent[i][x as usize] {
                x = p;
                steps += 1;
                if steps > n {
                    return false;
                }
            }
            if !g.is_external(v) && x != g.outer[i] {
                return false;
            }
        }
    }
    true
}

/// All realizers by backtracking over parent triples, propagating the
/// incoming labels each choice forces on the node's other neighbors.
pub fn brute_realizers(g: &Rot) -> Vec<Parents> {
    let n = g.n();
    let internal: Vec<u32> = (0..n as u32).filter(|&v| !g.is_external(v)).collect();
    let mut parent: Parents = [vec![None; n], vec![None; n], vec![None; n]];
    let mut out = Vec::new();
    search(g, &internal, 0, &mut parent, &mut out);
    out
}

fn search(g: &Rot, internal: &[u32], idx: usize, parent: &mut Parents, out: &mut Vec<Parents>) {
    if idx == internal.len() {
        if realizer_ok(g, parent) {
            out.push(parent.clone());
        }
        return;
    }
    let v = internal[idx];
    let r = &g.rot[v as usize];
    let d = r.len();
    for a in 0..d {
        for db in 1..d {
            for dc in db + 1..d {
                let picks = [r[a], r[(a + db) % d], r[(a + dc) % d]];
                let mut undo = Vec::new();
                if assign(g, v, picks, (a, db, dc), parent, &mut undo) {
                    search(g, internal, idx + 1, parent, out);
                }
                for (i, u, old) in undo.into_iter().rev() {
                    parent[i][u as usize] = old;
                }
            }
        }
    }
}

fn assign(
    g: &Rot,
    v: u32,
    picks: [u32; 3],
    (a, db, dc): (usize, usize, usize),
    parent: &mut Parents,
    undo: &mut Vec<(usize, u32, Option<u32>)>,
) -> bool {
    let mut set = |i: usize, u: u32, p: u32, parent: &mut Parents| -> bool {
        match parent[i][u as usize] {
            Some(q) => q == p,
            None => {
                undo.push((i, u, None));
                parent[i][u as usize] = Some(p);
                true
            }
        }
    };
    for i in 0..3 {
        let p = picks[i];
        if g.is_external(p) && p != g.outer[i] {
            return false;
        }
        if !set(i, v, p, parent) {
            return false;
        }
    }
    let r = &g.rot[v as usize];
    let d = r.len();
    for k in 1..d {
        if k == db || k == dc {
            continue;
        }
        let u = r[(a + k) % d];
        let tree = if k < db {
            2
        } else if k < dc {
            0
        } else {
            1
        };
        if g.is_external(u) || !set(tree, u, v, parent) {
            return false;
        }
    }
    true
}

/// Checks a prefix `order[..k]` as the start of a canonical ordering with
/// `v1 = order[0]`, `v2 = order[1]`: the induced plane graph must be a disc
/// whose inner faces are faces of the whole graph, bounded by a simple cycle
/// through `v1 v2`, and the newest node must attach to a contiguous run of at
/// least two nodes of the previous boundary path from `v1` to `v2`.
pub fn prefix_ok(g: &Rot, order: &[u32]) -> bool {
    let k = order.len();
    let n = g.n();
    if k < 2 {
        return true;
    }
    let (v1, v2) = (order[0], order[1]);
    if !(g.is_external(v1) && g.is_external(v2) && v1 != v2) {
        return false;
    }
    let mut in_s = vec![false; n];
    for &v in order {
        if in_s[v as usize] {
            return false;
        }
        in_s[v as usize] = true;
    }
    if k == 2 {
        return true;
    }
    if k < n && g.outer.iter().all(|&x| in_s[x as usize]) {
        return false;
    }
    let boundary = |k: usize| boundary_path(g, &order[..k], v1, v2);
    if boundary(k).is_none() {
        return false;
    }
    let prev = if k == 3 {
        vec![v1, v2]
    } else {
        match boundary(k - 1) {
            Some(p) => p,
            None => return false,
        }
    };
    // The newest node attaches to a contiguous run of the previous path.
    let w = order[k - 1];
    let idx: Vec<usize> = prev
        .iter()
        .enumerate()
        .filter(|(_, &x)| g.adjacent(w, x))
        .map(|(i, _)| i)
        .collect();
    let below = g.rot[w as usize]
        .iter()
        .filter(|&&x| in_s[x as usize])
        .count();
    idx.len() >= 2 && idx.len() == below && idx[idx.len() - 1] - idx[0] + 1 == idx.len()
}

/// Boundary of the plane graph induced on `set` from `v1` to `v2` (not using
/// the edge `v1 v2`), or `None` if the induced graph is not a disc whose
/// inner faces are faces of `g`.
fn boundary_path(g: &Rot, set: &[u32], v1: u32, v2: u32) -> Option<Vec<u32>> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in set {
        in_s[v as usize] = true;
    }
    let sub: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            if in_s[v] {
                g.rot[v]
                    .iter()
                    .copied()
                    .filter(|&u| in_s[u as usize])
                    .collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    let cw_after = |v: u32, u: u32| -> u32 {
        let r = &sub[v as usize];
        let i = r.iter().position(|&x| x == u).unwrap();
        r[(i + r.len() - 1) % r.len()]
    };
    if !sub[v1 as usize].contains(&v2) {
        return None;
    }
    // The outer dart of the whole graph between v1 and v2 stays outer.
    let [a, b, c] = g.outer;
    let outer_darts = [(b, a), (a, c), (c, b)];
    let start = if outer_darts.contains(&(v1, v2)) {
        (v1, v2)
    } else if outer_darts.contains(&(v2, v1)) {
        (v2, v1)
    } else {
        return None;
    };

    let mut seen = HashSet::new();
    let mut outer_face = Vec::new();
    let mut faces = 0usize;
    let mut edges2 = 0usize;
    for v in set {
        edges2 += sub[*v as usize].len();
        for &u in &sub[*v as usize] {
            if seen.contains(&(*v, u)) {
                continue;
            }
            faces += 1;
            let mut face = Vec::new();
            let (mut x, mut y) = (*v, u);
            let mut is_outer = false;
            while seen.insert((x, y)) {
                is_outer |= (x, y) == start;
                face.push((x, y));
                let z = cw_after(y, x);
                x = y;
                y = z;
            }
            if is_outer {
                outer_face = face;
            } else if face.len() != 3 || g.cw_after(face[0].1, face[0].0) != face[1].1 {
                return None;
            }
        }
    }
    // Connected plane graph: V - E + F = 2.
    if set.len() as i64 - (edges2 / 2) as i64 + faces as i64 != 2 {
        return None;
    }
    let nodes: Vec<u32> = outer_face.iter().map(|&(x, _)| x).collect();
    if nodes.iter().collect::<BTreeSet<_>>().len() != nodes.len() || nodes.len() < 3 {
        return None;
    }
    // Walk the cycle from v1 to v2 avoiding the edge v1 v2.
    let m = nodes.len();
    let i1 = nodes.iter().position(|&x| x == v1).unwrap();
    let i2 = nodes.iter().position(|&x| x == v2).unwrap();
    let path: Vec<u32> = if (i1 + 1) % m == i2 {
        (0..m).map(|k| nodes[(i1 + m - k) % m]).collect()
    } else {
        (0..m).map(|k| nodes[(i1 + k) % m]).collect()
    };
    debug_assert_eq!(*path.last().unwrap(), v2);
    Some(path)
}

/// Full canonical-ordering check: a permutation whose last node is the third
/// outer node and every prefix of which passes [`prefix_ok`].
pub fn canonical_ok(g: &Rot, order: &[u32]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let last = order[n - 1];
    if !g.is_external(last) || last == order[0] || last == order[1] {
        return false;
    }
    (3..=n).all(|k| prefix_ok(g, &order[..k]))
}

/// Every canonical ordering, by depth-first extension of valid prefixes.
pub fn all_canonical_orderings(g: &Rot) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for &v1 in &g.outer {
        for &v2 in &g.outer {
            if v1 == v2 {
                continue;
            }
            let vn = g
                .outer
                .iter()
                .copied()
                .find(|&x| x != v1 && x != v2)
                .unwrap();
            let mut order = vec![v1, v2];
            extend(g, vn, &mut order, &mut out);
        }
    }
    out
}

fn extend(g: &Rot, vn: u32, order: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let n = g.n();
    if order.len() == n {
        out.push(order.clone());
        return;
    }
    for w in 0..n as u32 {
        if order.contains(&w) || (w == vn && order.len() + 1 < n) {
            continue;
        }
        order.push(w);
        if prefix_ok(g, order) {
            extend(g, vn, order, out);
        }
        order.pop();
    }
}

/// Counterclockwise preorder labels (1-based) of tree `i` closed by the two
/// outer edges at its root: root 1, next outer node counterclockwise 2,
/// remaining outer node `n`.
pub fn preorder_labels(g: &Rot, parent: &Parents, i: usize) -> Vec<u32> {
    let n = g.n();
    let root = g.outer[i];
    let second = g.outer[(i + 1) % 3];
    let last = g.outer[(i + 2) % 3];
    let mut label = vec![0u32; n];
    let mut next = 1;
    fn visit(
        g: &Rot,
        parent: &Parents,
        i: usize,
        v: u32,
        from: u32,
        label: &mut [u32],
        next: &mut u32,
    ) {
        label[v as usize] = *next;
        *next += 1;
        let r = &g.rot[v as usize];
        let s = r.iter().position(|&x| x == from).unwrap();
        for k in 0..r.len() {
            let u = r[(s + k) % r.len()];
            if !g.is_external(u) && parent[i][u as usize] == Some(v) {
                visit(g, parent, i, u, v, label, next);
            }
        }
    }
    label[root as usize] = next;
    next += 1;
    label[second as usize] = next;
    next += 1;
    let r = &g.rot[root as usize];
    let s = r.iter().position(|&x| x == second).unwrap();
    for k in 0..r.len() {
        let u = r[(s + k) % r.len()];
        if !g.is_external(u) && parent[i][u as usize] == Some(root) {
            visit(g, parent, i, u, root, &mut label, &mut next);
        }
    }
    label[last as usize] = next;
    assert_eq!(next as usize, n);
    label
}

/// Quantities recomputed from their definitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleMetrics {
    pub lambda: Vec<u32>,
    pub lambda_sum: u64,
    pub leaf_counts: [usize; 3],
    pub f: Vec<[u32; 3]>,
    pub score_sums: [u64; 3],
    pub c: usize,
    pub b: Vec<u32>,
    pub k: usize,
}

pub fn oracle_metrics(g: &Rot, parent: &Parents) -> OracleMetrics {
    let n = g.n();
    let labels: Vec<Vec<u32>> = (0..3).map(|i| preorder_labels(g, parent, i)).collect();
    let mut has_child = vec![[false; 3]; n];
    for i in 0..3 {
        for v in 0..n {
            if let Some(p) = parent[i][v] {
                has_child[p as usize][i] = true;
            }
        }
    }
    let mut lambda = vec![0u32; n];
    let mut leaf_counts = [0usize; 3];
    let mut f = vec![[0u32; 3]; n];
    let mut score_sums = [0u64; 3];
    for v in 0..n as u32 {
        if g.is_external(v) {
            continue;
        }
        let vi = v as usize;
        for i in 0..3 {
            if has_child[vi][i] {
                lambda[vi] += 1;
            } else {
                leaf_counts[i] += 1;
            }
            let below = g.rot[vi]
                .iter()
                .filter(|&&u| labels[i][u as usize] < labels[i][vi])
                .count() as u32;
            let above = g.rot[vi].len() as u32 - below;
            f[vi][i] = below.min(above);
            score_sums[i] += f[vi][i] as u64;
        }
    }
    let tree_of = |u: u32, v: u32| -> Option<usize> {
        (0..3).find(|&i| parent[i][u as usize] == Some(v) || parent[i][v as usize] == Some(u))
    };
    let c = g
        .internal_faces()
        .iter()
        .filter(|&&[x, y, z]| {
            let t: BTreeSet<Option<usize>> = [tree_of(x, y), tree_of(y, z), tree_of(z, x)].into();
            t == [Some(0), Some(1), Some(2)].into()
        })
        .count();
    let b: Vec<u32> = (0..n as u32)
        .filter(|&v| !g.is_external(v) && lambda[v as usize] == 2 && g.rot[v as usize].len() == 5)
        .collect();
    let in_b: HashSet<u32> = b.iter().copied().collect();
    let mut seen = HashSet::new();
    let mut k = 0;
    for &s in &b {
        if !seen.insert(s) {
            continue;
        }
        k += 1;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &u in &g.rot[v as usize] {
                if in_b.contains(&u) && seen.insert(u) {
                    stack.push(u);
                }
            }
        }
    }
    OracleMetrics {
        lambda_sum: lambda.iter().map(|&x| x as u64).sum(),
        lambda,
        leaf_counts,
        f,
        score_sums,
        c,
        b,
        k,
    }
}

/// Grid-level drawing check: one segment per node, disjoint segments on a
/// row, declared dimensions correct, height at most `n - 1`, and for every
/// edge a column shared by both segments that nothing in between covers.
pub fn drawing_ok(g: &Rot, d: &VisibilityDrawing) -> Result<(), String> {
    let n = g.n();
    let mut seg = vec![None; n];
    for s in &d.segments {
        let v = s.v as usize;
        if v >= n || seg[v].is_some() || s.x1 > s.x2 {
            return Err(format!("bad segment {s:?}"));
        }
        seg[v] = Some(*s);
    }
    let seg: Vec<_> = seg
        .into_iter()
        .enumerate()
        .map(|(v, s)| s.ok_or(format!("node {v} has no segment")))
        .collect::<Result<_, _>>()?;
    let min_x = seg.iter().map(|s| s.x1).min().unwrap();
    let max_x = seg.iter().map(|s| s.x2).max().unwrap();
    let min_y = seg.iter().map(|s| s.y).min().unwrap();
    let max_y = seg.iter().map(|s| s.y).max().unwrap();
    if (d.width, d.height) != (max_x - min_x, max_y - min_y) {
        return Err("declared dimensions are wrong".into());
    }
    if d.height as usize > n - 1 {
        return Err(format!("height {} exceeds n - 1", d.height));
    }
    for a in &seg {
        for b in &seg {
            if a.v < b.v && a.y == b.y && a.x1 <= b.x2 && b.x1 <= a.x2 {
                return Err(format!("{} and {} overlap", a.v, b.v));
            }
        }
    }
    for (u, v) in g.edges() {
        let (lo, hi) = {
            let (a, b) = (seg[u as usize], seg[v as usize]);
            if a.y <= b.y {
                (a, b)
            } else {
                (b, a)
            }
        };
        if lo.y == hi.y {
            return Err(format!("edge {u}-{v} within one row"));
        }
        let visible = (lo.x1.max(hi.x1)..=lo.x2.min(hi.x2)).any(|x| {
            !seg.iter()
                .any(|s| s.y > lo.y && s.y < hi.y && s.x1 <= x && x <= s.x2)
        });
        if !visible {
            return Err(format!("edge {u}-{v} not visible"));
        }
    }
    Ok(())
}

pub fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Internal-degree profile from the rotation lists.
pub fn has_internal_degree(g: &Rot, deg: usize) -> bool {
    (0..g.n() as u32).any(|v| !g.is_external(v) && g.rot[v as usize].len() == deg)
}

/// Separating-triangle test by brute force over all triangles.
pub fn four_connected(g: &Rot) -> bool {
    let faces: HashSet<[u32; 3]> = g
        .faces()
        .into_iter()
        .map(|f| {
            let mut t = [f[0], f[1], f[2]];
            t.sort();
            t
        })
        .collect();
    for (u, v) in g.edges() {
        for &w in &g.rot[u as usize] {
            if w > v && g.adjacent(v, w) {
                let mut t = [u, v, w];
                t.sort();
                if !faces.contains(&t) {
                    return false;
                }
            }
        }
    }
    g.n() >= 6
}

pub fn node_ids(order: &[NodeId]) -> Vec<u32> {
    order.to_vec()
}
