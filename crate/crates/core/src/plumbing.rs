//! Weighted plumbing graphs, their intersection matrices, and graph-level
//! plumbing-calculus moves.
//!
//! Graphs are simple (no loops, no multi-edges) and immutable: every move
//! returns a new graph. A move that would create a multi-edge is an error,
//! not a silent link-level continuation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cfrac::{self, CFSeq};
use crate::exactnum::{ExactError, IntMatrix};

pub type VertexId = u32;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} already exists")]
    DuplicateVertex(VertexId),
    #[error("no vertex {0}")]
    MissingVertex(VertexId),
    #[error("edge {0}-{1} is a loop or duplicate")]
    BadEdge(VertexId, VertexId),
    #[error("blow-down needs weight -1 or +1 at vertex {0}")]
    BlowDownWeight(VertexId),
    #[error("blow-down at vertex {0} needs degree <= 2")]
    BlowDownDegree(VertexId),
    #[error("neighbors of vertex {0} are already adjacent; the move would create a multi-edge")]
    WouldCreateMultiEdge(VertexId),
    #[error("zero-absorption needs weight 0 and degree 2 at vertex {0}")]
    ZeroAbsorptionShape(VertexId),
    #[error("chain is not an induced path with all weights <= -2")]
    BadChain,
    #[error("interior chain vertex {0} has a neighbor outside the chain")]
    ChainInteriorNeighbor(VertexId),
    #[error("graph is not star-shaped")]
    NotStarShaped,
    #[error("invalid graph JSON: {0}")]
    BadJson(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A weighted simple graph. Vertices carry integer weights; edges are
/// unordered pairs stored with the smaller id first.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PlumbingGraph {
    weights: BTreeMap<VertexId, BigInt>,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl PlumbingGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Path with the given weights, ids 0..n-1 in order.
    pub fn linear(weights: &[i64]) -> Self {
        let mut g = Self::new();
        for (i, &w) in weights.iter().enumerate() {
            g.add_vertex(i as VertexId, BigInt::from(w)).unwrap();
            if i > 0 {
                g.add_edge(i as VertexId - 1, i as VertexId).unwrap();
            }
        }
        g
    }

    pub fn add_vertex(&mut self, id: VertexId, weight: BigInt) -> Result<(), GraphError> {
        if self.weights.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        self.weights.insert(id, weight);
        Ok(())
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if u == v || !self.weights.contains_key(&u) || !self.weights.contains_key(&v) {
            return Err(if u == v {
                GraphError::BadEdge(u, v)
            } else if !self.weights.contains_key(&u) {
                GraphError::MissingVertex(u)
            } else {
                GraphError::MissingVertex(v)
            });
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::BadEdge(u, v));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex ids in ascending order.
    pub fn vertex_ids(&self) -> Vec<VertexId> {
        self.weights.keys().copied().collect()
    }

    pub fn weight(&self, v: VertexId) -> Option<&BigInt> {
        self.weights.get(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn next_id(&self) -> VertexId {
        self.weights.keys().next_back().map_or(0, |m| m + 1)
    }

    pub fn is_connected(&self) -> bool {
        let ids = self.vertex_ids();
        if ids.is_empty() {
            return true;
        }
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([ids[0]]);
        while let Some(v) = queue.pop_front() {
            if seen.insert(v) {
                queue.extend(self.neighbors(v));
            }
        }
        seen.len() == ids.len()
    }

    pub fn is_tree_or_forest(&self) -> bool {
        // acyclic iff every component has edges = vertices - 1
        self.components()
            .iter()
            .all(|c| self.induced_edge_count(c) == c.len().saturating_sub(1))
    }

    fn induced_edge_count(&self, verts: &BTreeSet<VertexId>) -> usize {
        self.edges
            .iter()
            .filter(|(a, b)| verts.contains(a) && verts.contains(b))
            .count()
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut remaining: BTreeSet<VertexId> = self.weights.keys().copied().collect();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                if comp.insert(v) {
                    queue.extend(self.neighbors(v));
                }
            }
            for v in &comp {
                remaining.remove(v);
            }
            out.push(comp);
        }
        out
    }

    /// Symmetric intersection matrix: diagonal = weights, off-diagonal = 1
    /// for adjacent vertices. Rows/columns follow ascending vertex ids.
    pub fn intersection_matrix(&self) -> IntMatrix {
        let ids = self.vertex_ids();
        let index: BTreeMap<VertexId, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut m = IntMatrix::zeros(ids.len());
        for (i, v) in ids.iter().enumerate() {
            m.set(i, i, self.weights[v].clone());
        }
        for &(a, b) in &self.edges {
            m.set(index[&a], index[&b], BigInt::one());
            m.set(index[&b], index[&a], BigInt::one());
        }
        m
    }

    pub fn det_abs(&self) -> BigInt {
        self.intersection_matrix().det().abs()
    }

    /// Sum of (-w(v) - 3) over all vertices.
    pub fn i_invariant(&self) -> BigInt {
        self.weights.values().map(|w| -w - 3).sum()
    }

    pub fn graph_stats(&self) -> Result<GraphStats, GraphError> {
        let (plus, minus, _zero) = self.intersection_matrix().signature()?;
        Ok(GraphStats {
            i_invariant: self.i_invariant(),
            b2_plus: plus,
            b2_minus: minus,
        })
    }

    /// Removes a +-1-weighted vertex of degree <= 2. Neighbors of a -1 gain
    /// 1, neighbors of a +1 lose 1; degree-2 neighbors get joined.
    pub fn blow_down(&self, v: VertexId) -> Result<PlumbingGraph, GraphError> {
        let w = self.weight(v).ok_or(GraphError::MissingVertex(v))?;
        let sign = if *w == BigInt::from(-1) {
            BigInt::one()
        } else if w.is_one() {
            -BigInt::one()
        } else {
            return Err(GraphError::BlowDownWeight(v));
        };
        let nbrs = self.neighbors(v);
        if nbrs.len() > 2 {
            return Err(GraphError::BlowDownDegree(v));
        }
        if nbrs.len() == 2 && self.has_edge(nbrs[0], nbrs[1]) {
            return Err(GraphError::WouldCreateMultiEdge(v));
        }
        let mut g = self.clone();
        g.weights.remove(&v);
        g.edges.retain(|&(a, b)| a != v && b != v);
        for &n in &nbrs {
            let entry = g.weights.get_mut(&n).expect("neighbor exists");
            *entry += &sign;
        }
        if nbrs.len() == 2 {
            g.add_edge(nbrs[0], nbrs[1])?;
        }
        Ok(g)
    }

    /// Inverse of `blow_down`: insert a -1 on an edge (decrementing both
    /// ends), hang a -1 leaf off a vertex (decrementing it), or add an
    /// isolated -1.
    pub fn blow_up(&self, site: BlowUpSite) -> Result<PlumbingGraph, GraphError> {
        let mut g = self.clone();
        let id = g.next_id();
        match site {
            BlowUpSite::Edge(u, v) => {
                if !self.has_edge(u, v) {
                    return Err(GraphError::BadEdge(u, v));
                }
                g.edges.remove(&(u.min(v), u.max(v)));
                g.add_vertex(id, BigInt::from(-1))?;
                g.add_edge(u, id)?;
                g.add_edge(id, v)?;
                for x in [u, v] {
                    *g.weights.get_mut(&x).expect("endpoint exists") -= 1;
                }
            }
            BlowUpSite::Vertex(v) => {
                if !g.weights.contains_key(&v) {
                    return Err(GraphError::MissingVertex(v));
                }
                g.add_vertex(id, BigInt::from(-1))?;
                g.add_edge(v, id)?;
                *g.weights.get_mut(&v).expect("vertex exists") -= 1;
            }
            BlowUpSite::Isolated => {
                g.add_vertex(id, BigInt::from(-1))?;
            }
        }
        Ok(g)
    }

    /// Removes a 0-weighted degree-2 vertex, merging its two neighbors into
    /// one vertex carrying the sum of their weights and all other edges.
    pub fn zero_absorption(&self, v: VertexId) -> Result<PlumbingGraph, GraphError> {
        let w = self.weight(v).ok_or(GraphError::MissingVertex(v))?;
        let nbrs = self.neighbors(v);
        if !w.is_zero() || nbrs.len() != 2 {
            return Err(GraphError::ZeroAbsorptionShape(v));
        }
        let (u, x) = (nbrs[0], nbrs[1]);
        if self.has_edge(u, x) {
            return Err(GraphError::WouldCreateMultiEdge(v));
        }
        // the merged vertex keeps u's id and inherits x's edges
        let u_nbrs: BTreeSet<VertexId> = self.neighbors(u).into_iter().collect();
        for n in self.neighbors(x) {
            if n != v && u_nbrs.contains(&n) {
                return Err(GraphError::WouldCreateMultiEdge(v));
            }
        }
        let mut g = self.clone();
        g.edges.retain(|&(a, b)| a != v && b != v);
        g.weights.remove(&v);
        let wx = g.weights.remove(&x).expect("neighbor exists");
        *g.weights.get_mut(&u).expect("neighbor exists") += wx;
        let x_edges: Vec<(VertexId, VertexId)> = g
            .edges
            .iter()
            .copied()
            .filter(|&(a, b)| a == x || b == x)
            .collect();
        for (a, b) in x_edges {
            g.edges.remove(&(a, b));
            let other = if a == x { b } else { a };
            g.add_edge(u, other)?;
        }
        Ok(g)
    }

    /// Replaces an induced chain of weights `(-a1,...,-ak)` (all ai >= 2) by
    /// the positive chain `(b1,...,bj)` dual to it, incrementing the weight
    /// of every vertex adjacent to the chain. The chain is given in path
    /// order; `b1` ends up at the `a1` end.
    pub fn reverse_chain(
        &self,
        chain: &[VertexId],
    ) -> Result<(PlumbingGraph, StatsDelta), GraphError> {
        if chain.is_empty() {
            return Err(GraphError::BadChain);
        }
        let minus_two = BigInt::from(-2);
        let mut alphas = Vec::with_capacity(chain.len());
        for (i, &v) in chain.iter().enumerate() {
            let w = self.weight(v).ok_or(GraphError::MissingVertex(v))?;
            if w > &minus_two {
                return Err(GraphError::BadChain);
            }
            alphas.push(-w);
            if i > 0 && !self.has_edge(chain[i - 1], v) {
                return Err(GraphError::BadChain);
            }
        }
        let chain_set: BTreeSet<VertexId> = chain.iter().copied().collect();
        if chain_set.len() != chain.len() {
            return Err(GraphError::BadChain);
        }
        // no chords, and interior vertices stay inside the chain
        for (i, &v) in chain.iter().enumerate() {
            for n in self.neighbors(v) {
                let pos = chain.iter().position(|&c| c == n);
                match pos {
                    Some(j) if j.abs_diff(i) == 1 => {}
                    Some(_) => return Err(GraphError::BadChain),
                    None if i == 0 || i == chain.len() - 1 => {}
                    None => return Err(GraphError::ChainInteriorNeighbor(v)),
                }
            }
        }
        let alpha_seq = CFSeq::new(alphas).map_err(|_| GraphError::BadChain)?;
        let beta_seq = cfrac::riemenschneider_dual(&alpha_seq);
        let (left_outside, right_outside): (Vec<VertexId>, Vec<VertexId>) = if chain.len() >= 2 {
            let left = self
                .neighbors(chain[0])
                .into_iter()
                .filter(|n| !chain_set.contains(n))
                .collect();
            let right = self
                .neighbors(chain[chain.len() - 1])
                .into_iter()
                .filter(|n| !chain_set.contains(n))
                .collect();
            (left, right)
        } else {
            // both ends are the same vertex: split its neighbors, one per end
            let all: Vec<VertexId> = self.neighbors(chain[0]);
            if all.len() > 2 {
                return Err(GraphError::BadChain);
            }
            let mut it = all.into_iter();
            (it.next().into_iter().collect(), it.next().into_iter().collect())
        };

        let mut g = self.clone();
        g.edges
            .retain(|&(a, b)| !chain_set.contains(&a) && !chain_set.contains(&b));
        for v in &chain_set {
            g.weights.remove(v);
        }
        for n in left_outside.iter().chain(&right_outside) {
            *g.weights.get_mut(n).expect("outside neighbor exists") += 1;
        }
        let base = g.next_id();
        let betas = beta_seq.entries();
        for (i, b) in betas.iter().enumerate() {
            g.add_vertex(base + i as VertexId, b.clone())?;
            if i > 0 {
                g.add_edge(base + i as VertexId - 1, base + i as VertexId)?;
            }
        }
        for &n in &left_outside {
            g.add_edge(n, base)?;
        }
        for &n in &right_outside {
            g.add_edge(n, base + betas.len() as VertexId - 1)?;
        }
        let delta = StatsDelta {
            b2_plus: betas.len() as i64,
            b2_minus: -(chain.len() as i64),
        };
        Ok((g, delta))
    }

    /// Node and leaf-first legs of a star-shaped tree (at most one vertex of
    /// degree 3, none higher). Paths are reported as degenerate with no node.
    pub fn star_decompose(&self) -> Result<StarDecomposition, GraphError> {
        if !self.is_connected() || !self.is_tree_or_forest() {
            return Err(GraphError::NotStarShaped);
        }
        let ids = self.vertex_ids();
        let deg3: Vec<VertexId> = ids.iter().copied().filter(|&v| self.degree(v) == 3).collect();
        if ids.iter().any(|&v| self.degree(v) > 3) || deg3.len() > 1 {
            return Err(GraphError::NotStarShaped);
        }
        match deg3.first() {
            Some(&node) => Ok(StarDecomposition {
                node_id: Some(node),
                node_weight: self.weights[&node].clone(),
                legs: self.legs_from(node),
            }),
            None => {
                // a path: report the whole thing as one leg from the smaller end
                if ids.is_empty() {
                    return Err(GraphError::NotStarShaped);
                }
                if ids.len() == 1 {
                    return Ok(StarDecomposition {
                        node_id: Some(ids[0]),
                        node_weight: self.weights[&ids[0]].clone(),
                        legs: vec![],
                    });
                }
                let end = ids
                    .iter()
                    .copied()
                    .find(|&v| self.degree(v) == 1)
                    .ok_or(GraphError::NotStarShaped)?;
                let leg = self.path_from(end, None);
                Ok(StarDecomposition {
                    node_id: None,
                    node_weight: BigInt::zero(),
                    legs: vec![leg],
                })
            }
        }
    }

    /// Legs hanging off `node`, each listed leaf-first (last entry adjacent
    /// to the node). Works for any tree vertex.
    pub fn legs_from(&self, node: VertexId) -> Vec<Leg> {
        let mut legs: Vec<Leg> = self
            .neighbors(node)
            .into_iter()
            .map(|n| {
                let mut walk = vec![n];
                let mut prev = node;
                loop {
                    let cur = *walk.last().expect("nonempty");
                    let next: Vec<VertexId> = self
                        .neighbors(cur)
                        .into_iter()
                        .filter(|&x| x != prev)
                        .collect();
                    match next.as_slice() {
                        [] => break,
                        [only] => {
                            prev = cur;
                            walk.push(*only);
                        }
                        _ => break, // branching: caller checks star shape
                    }
                }
                walk.reverse();
                walk.into_iter()
                    .map(|v| (v, self.weights[&v].clone()))
                    .collect()
            })
            .collect();
        legs.sort();
        legs
    }

    fn path_from(&self, end: VertexId, stop: Option<VertexId>) -> Leg {
        let mut walk = vec![end];
        let mut prev = None;
        loop {
            let cur = *walk.last().expect("nonempty");
            if Some(cur) == stop {
                break;
            }
            let next: Vec<VertexId> = self
                .neighbors(cur)
                .into_iter()
                .filter(|&x| Some(x) != prev)
                .collect();
            match next.as_slice() {
                [only] => {
                    prev = Some(cur);
                    walk.push(*only);
                }
                _ => break,
            }
        }
        walk.into_iter()
            .map(|v| (v, self.weights[&v].clone()))
            .collect()
    }

    /// Canonical encoding; equal encodings iff isomorphic as weighted graphs.
    pub fn canonical_form(&self) -> String {
        let comps = self.components();
        let mut parts: Vec<String> = comps
            .iter()
            .map(|c| {
                if self.induced_edge_count(c) == c.len() - 1 {
                    self.canonical_tree(c)
                } else {
                    self.canonical_general(c)
                }
            })
            .collect();
        parts.sort();
        parts.join("|")
    }

    pub fn is_isomorphic(&self, other: &PlumbingGraph) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    fn canonical_tree(&self, verts: &BTreeSet<VertexId>) -> String {
        // root at the unweighted center (1 or 2 vertices), take the minimum
        let centers = self.tree_centers(verts);
        centers
            .iter()
            .map(|&c| self.ahu_encode(c, None, verts))
            .min()
            .expect("component has a center")
    }

    fn tree_centers(&self, verts: &BTreeSet<VertexId>) -> Vec<VertexId> {
        let mut degree: BTreeMap<VertexId, usize> = verts
            .iter()
            .map(|&v| {
                let d = self
                    .neighbors(v)
                    .into_iter()
                    .filter(|n| verts.contains(n))
                    .count();
                (v, d)
            })
            .collect();
        let mut remaining: BTreeSet<VertexId> = verts.clone();
        while remaining.len() > 2 {
            let leaves: Vec<VertexId> = remaining
                .iter()
                .copied()
                .filter(|v| degree[v] <= 1)
                .collect();
            for leaf in leaves {
                remaining.remove(&leaf);
                for n in self.neighbors(leaf) {
                    if remaining.contains(&n) {
                        *degree.get_mut(&n).expect("neighbor tracked") -= 1;
                    }
                }
            }
        }
        remaining.into_iter().collect()
    }

    fn ahu_encode(&self, v: VertexId, parent: Option<VertexId>, verts: &BTreeSet<VertexId>) -> String {
        let mut child_codes: Vec<String> = self
            .neighbors(v)
            .into_iter()
            .filter(|&n| Some(n) != parent && verts.contains(&n))
            .map(|n| self.ahu_encode(n, Some(v), verts))
            .collect();
        child_codes.sort();
        format!("({}:{})", self.weights[&v], child_codes.join(""))
    }

    /// Backtracking canonical form for the rare non-tree component: the
    /// lexicographically minimal (weights, adjacency) encoding over all
    /// orderings compatible with (weight, degree) classes.
    fn canonical_general(&self, verts: &BTreeSet<VertexId>) -> String {
        let ids: Vec<VertexId> = verts.iter().copied().collect();
        let n = ids.len();
        let mut best: Option<String> = None;
        let mut perm: Vec<VertexId> = Vec::with_capacity(n);
        let mut used = vec![false; n];
        let key = |v: VertexId| (self.weights[&v].clone(), self.degree(v));
        self.canon_search(&ids, &mut perm, &mut used, &key, &mut best);
        best.expect("nonempty component")
    }

    fn canon_search(
        &self,
        ids: &[VertexId],
        perm: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        key: &impl Fn(VertexId) -> (BigInt, usize),
        best: &mut Option<String>,
    ) {
        if perm.len() == ids.len() {
            let code = self.encode_ordering(perm);
            if best.as_ref().map(|b| code < *b).unwrap_or(true) {
                *best = Some(code);
            }
            return;
        }
        // candidates sorted by class key to prune symmetric branches
        let mut cands: Vec<(usize, (BigInt, usize))> = ids
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, &v)| (i, key(v)))
            .collect();
        cands.sort_by(|a, b| a.1.cmp(&b.1));
        let mut tried: BTreeSet<(BigInt, usize, Vec<bool>)> = BTreeSet::new();
        for (i, k) in cands {
            let v = ids[i];
            let adj: Vec<bool> = perm.iter().map(|&p| self.has_edge(p, v)).collect();
            if !tried.insert((k.0.clone(), k.1, adj)) {
                continue; // same class and same attachment: symmetric branch
            }
            used[i] = true;
            perm.push(v);
            self.canon_search(ids, perm, used, key, best);
            perm.pop();
            used[i] = false;
        }
    }

    fn encode_ordering(&self, perm: &[VertexId]) -> String {
        let ws: Vec<String> = perm.iter().map(|v| self.weights[v].to_string()).collect();
        let mut bits = String::new();
        for (i, &u) in perm.iter().enumerate() {
            for &v in perm.iter().take(i) {
                bits.push(if self.has_edge(u, v) { '1' } else { '0' });
            }
        }
        format!("[{}]{}", ws.join(","), bits)
    }

    pub fn to_json(&self) -> String {
        let dto = GraphJson {
            vertices: self
                .weights
                .iter()
                .map(|(&id, w)| VertexJson {
                    id,
                    weight: w.to_string().parse::<i128>().expect("weight fits i128"),
                })
                .collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&dto).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let dto: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphError::BadJson(e.to_string()))?;
        let mut g = PlumbingGraph::new();
        for v in dto.vertices {
            g.add_vertex(v.id, BigInt::from(v.weight))?;
        }
        for [a, b] in dto.edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    /// DOT text with weight labels and a stable vertex order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph plumbing {\n");
        for (id, w) in &self.weights {
            out.push_str(&format!("  {} [label=\"{}\"];\n", id, w));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("  {} -- {};\n", a, b));
        }
        out.push_str("}\n");
        out
    }
}

/// A leg as a list of (vertex, weight), leaf first.
pub type Leg = Vec<(VertexId, BigInt)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlowUpSite {
    Edge(VertexId, VertexId),
    Vertex(VertexId),
    Isolated,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarDecomposition {
    /// Degree-3 vertex, or the single vertex; `None` for a path.
    pub node_id: Option<VertexId>,
    pub node_weight: BigInt,
    pub legs: Vec<Leg>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStats {
    pub i_invariant: BigInt,
    pub b2_plus: usize,
    pub b2_minus: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatsDelta {
    pub b2_plus: i64,
    pub b2_minus: i64,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    edges: Vec<[VertexId; 2]>,
}

#[derive(Serialize, Deserialize)]
struct VertexJson {
    id: VertexId,
    weight: i128,
}

/// Weights of a leg, leaf first.
pub fn leg_weights(leg: &Leg) -> Vec<BigInt> {
    leg.iter().map(|(_, w)| w.clone()).collect()
}
