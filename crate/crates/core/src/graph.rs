//! Simple undirected graphs on at most [`MAX_ORDER`] vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::vset::{VertexSet, MAX_ORDER};

/// A simple undirected graph with vertices `0..n`.
///
/// Adjacency is stored as one [`VertexSet`] per vertex. The graph is
/// immutable once built; use [`GraphBuilder`] (or the convenience
/// constructors) to create one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::UnsupportedOrder(n));
        }
        Ok(GraphBuilder {
            adj: vec![VertexSet::new(); n],
        })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Adds the edge `u-v`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge(u, v, "self-loops are not allowed"));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Makes `vs` pairwise adjacent.
    pub fn add_clique(&mut self, vs: &[usize]) -> Result<&mut Self> {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.add_edge(u, v)?;
            }
        }
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph { adj: self.adj }
    }
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).expect("order within cap").build()
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n).expect("order within cap");
        let all: Vec<usize> = (0..n).collect();
        b.add_clique(&all).expect("valid clique");
        b.build()
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    /// `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Self::from_edges(leaves + 1, &edges).expect("valid star")
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, &edges).expect("valid petersen")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n();
        let mut b = GraphBuilder::new(shift + other.n())?;
        for (u, v) in self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
        {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Open neighborhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    /// Closed neighborhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::len).max().unwrap_or(0)
    }

    /// Number of neighbors of `v` inside `s`.
    pub fn degree_in(&self, v: usize, s: &VertexSet) -> usize {
        (self.adj[v] & *s).len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Checks that every member of `s` is a vertex of this graph.
    pub fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.last() {
            Some(v) if v >= self.n() => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            }),
            _ => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// `N(S)`: union of the open neighborhoods of members of `s`.
    pub fn open_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in s {
            out |= self.adj[v];
        }
        out
    }

    /// `N[S]` without range checking; see [`closed_neighborhood`] for the
    /// checked form.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        self.open_neighborhood_of(s) | *s
    }

    /// True when `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| (*s - self.adj[v]).len() == 1)
    }

    /// The subgraph induced by `keep`, relabelled to `0..keep.len()`.
    /// The returned vector maps each new index to its vertex in `self`.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = keep.iter().filter(|&v| v < self.n()).collect();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & *keep).iter().map(|u| back[u]).collect())
            .collect();
        (Graph { adj }, map)
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut comps = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.open_neighborhood_of(&frontier) - comp;
                comp |= next;
                frontier = next;
            }
            seen |= comp;
            comps.push(comp);
        }
        comps
    }
}

/// `N[S] = S ∪ N(S)`.
pub fn closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    Ok(g.closed_neighborhood_of(s))
}

/// The residual graph `G - N[S]`, with the map from residual indices back to
/// vertices of `g`.
pub fn remove_closed_neighborhood(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    let removed = closed_neighborhood(g, s)?;
    Ok(g.induced_subgraph(&(g.vertices() - removed)))
}

/// All `k`-cliques of a graph, in lexicographic order of their sorted members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueList {
    pub k: usize,
    pub cliques: Vec<VertexSet>,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Checks that every listed set is a `k`-clique of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for c in &self.cliques {
            g.check_set(c)?;
            if c.len() != self.k || !g.is_clique(c) {
                return Err(Error::Certificate(format!(
                    "{{{c}}} is not a {}-clique",
                    self.k
                )));
            }
        }
        Ok(())
    }
}

/// Enumerates every `k`-clique of `g` (sets of exactly `k` pairwise adjacent
/// vertices) in lexicographic order.
pub fn enumerate_k_cliques(g: &Graph, k: usize) -> Result<CliqueList> {
    if k == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    let mut cliques = Vec::new();
    for_each_k_clique(g, &g.vertices(), k, |c| {
        cliques.push(*c);
        true
    });
    Ok(CliqueList { k, cliques })
}

/// Visits the `k`-cliques contained in `within`, in lexicographic order,
/// until `visit` returns `false`. Returns `false` if the visit was cut short.
///
/// Candidates are extended only by common neighbors larger than the current
/// last member, so every clique is produced exactly once.
pub fn for_each_k_clique<F>(g: &Graph, within: &VertexSet, k: usize, mut visit: F) -> bool
where
    F: FnMut(&VertexSet) -> bool,
{
    fn extend<F: FnMut(&VertexSet) -> bool>(
        g: &Graph,
        current: &mut VertexSet,
        candidates: VertexSet,
        need: usize,
        visit: &mut F,
    ) -> bool {
        if need == 0 {
            return visit(current);
        }
        if candidates.len() < need {
            return true;
        }
        for v in candidates {
            let rest = candidates & g.adj[v] & VertexSet::range(v + 1, MAX_ORDER);
            if rest.len() + 1 < need {
                continue;
            }
            current.insert(v);
            let go_on = extend(g, current, rest, need - 1, visit);
            current.remove(v);
            if !go_on {
                return false;
            }
        }
        true
    }
    if k == 0 {
        return true;
    }
    let within = *within & g.vertices();
    let mut current = VertexSet::new();
    extend(g, &mut current, within, k, &mut visit)
}

/// True when some `k`-clique lies entirely inside `within`.
pub fn has_k_clique_within(g: &Graph, within: &VertexSet, k: usize) -> bool {
    let mut found = false;
    for_each_k_clique(g, within, k, |_| {
        found = true;
        false
    });
    found
}

/// Structural summary of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub is_tree: bool,
    pub is_cactus: bool,
    pub is_block_graph: bool,
    pub is_claw_free: bool,
    pub cyclomatic_number: usize,
    pub is_connected: bool,
    pub max_degree: usize,
    pub components: usize,
    pub is_cubic: bool,
}

pub fn classify(g: &Graph) -> GraphClass {
    let n = g.n();
    let m = g.m();
    let components = g.components().len();
    let is_connected = components <= 1;
    let blocks = blocks(g);
    // A block with v vertices and e edges is K2 (e=1), a cycle (e=v) or
    // something with more than one cycle through some edge.
    let is_cactus = blocks.iter().all(|&(v, e)| e == 1 || e == v);
    let is_block_graph = blocks.iter().all(|&(v, e)| e == v * (v - 1) / 2);
    GraphClass {
        is_tree: is_connected && n >= 1 && m + 1 == n,
        is_cactus,
        is_block_graph,
        is_claw_free: is_claw_free(g),
        cyclomatic_number: m + components - n,
        is_connected,
        max_degree: g.max_degree(),
        components,
        is_cubic: n > 0 && (0..n).all(|v| g.degree(v) == 3),
    }
}

/// No vertex has three pairwise non-adjacent neighbors (no induced `K_{1,3}`).
pub fn is_claw_free(g: &Graph) -> bool {
    for v in 0..g.n() {
        let nb = g.adj[v];
        for a in nb {
            let not_a = nb - g.adj[a] - VertexSet::range(0, a + 1);
            for b in not_a {
                if !(not_a - g.adj[b] - VertexSet::range(0, b + 1)).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

/// Biconnected blocks as `(vertex count, edge count)` pairs, via Tarjan's
/// edge-stack algorithm. Isolated vertices contribute no block.
fn blocks(g: &Graph) -> Vec<(usize, usize)> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        out: Vec<(usize, usize)>,
    }

    fn dfs(st: &mut State<'_>, u: usize, parent: Option<usize>) {
        st.time += 1;
        st.disc[u] = st.time;
        st.low[u] = st.time;
        for v in st.g.adj[u] {
            if st.disc[v] == 0 {
                st.stack.push((u, v));
                dfs(st, v, Some(u));
                st.low[u] = st.low[u].min(st.low[v]);
                if st.low[v] >= st.disc[u] {
                    let mut verts = VertexSet::new();
                    let mut edges = 0;
                    while let Some((a, b)) = st.stack.pop() {
                        verts.insert(a);
                        verts.insert(b);
                        edges += 1;
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    st.out.push((verts.len(), edges));
                }
            } else if Some(v) != parent && st.disc[v] < st.disc[u] {
                st.stack.push((u, v));
                st.low[u] = st.low[u].min(st.disc[v]);
            }
        }
    }

    let n = g.n();
    let mut st = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        out: Vec::new(),
    };
    for v in 0..n {
        if st.disc[v] == 0 {
            dfs(&mut st, v, None);
        }
    }
    st.out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3).unwrap();
        assert!(matches!(b.add_edge(1, 1), Err(Error::InvalidEdge(..))));
        assert!(matches!(
            b.add_edge(0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(GraphBuilder::new(MAX_ORDER + 1).is_err());
        b.add_edge(0, 1).unwrap().add_edge(1, 0).unwrap();
        assert_eq!(b.build().m(), 1);
    }

    #[test]
    fn closed_neighborhood_examples() {
        assert_eq!(
            closed_neighborhood(&Graph::complete(4), &set(&[0])).unwrap(),
            set(&[0, 1, 2, 3])
        );
        assert!(closed_neighborhood(&Graph::petersen(), &VertexSet::new())
            .unwrap()
            .is_empty());
        assert_eq!(
            closed_neighborhood(&Graph::path(4), &set(&[1])).unwrap(),
            set(&[0, 1, 2])
        );
        assert!(closed_neighborhood(&Graph::path(4), &set(&[4])).is_err());
    }

    #[test]
    fn residual_graph_examples() {
        let (r, map) = remove_closed_neighborhood(&Graph::complete(5), &set(&[2])).unwrap();
        assert_eq!((r.n(), map.len()), (0, 0));

        let (r, map) = remove_closed_neighborhood(&Graph::cycle(6), &set(&[0])).unwrap();
        assert_eq!(map, vec![2, 3, 4]);
        assert_eq!(r, Graph::path(3));

        let p = Graph::petersen();
        let (r, _) = remove_closed_neighborhood(&p, &p.vertices()).unwrap();
        assert_eq!(r.n(), 0);
    }

    #[test]
    fn clique_enumeration_examples() {
        let c = enumerate_k_cliques(&Graph::complete(4), 3).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.cliques[0], set(&[0, 1, 2]));
        assert_eq!(c.cliques[3], set(&[1, 2, 3]));
        assert!(enumerate_k_cliques(&Graph::cycle(5), 3).unwrap().is_empty());
        assert_eq!(
            enumerate_k_cliques(&Graph::petersen(), 2).unwrap().len(),
            15
        );
        assert_eq!(
            enumerate_k_cliques(&Graph::petersen(), 1).unwrap().len(),
            10
        );
        assert_eq!(
            enumerate_k_cliques(&Graph::petersen(), 0),
            Err(Error::ZeroCliqueSize)
        );
    }

    #[test]
    fn classify_examples() {
        let p5 = classify(&Graph::path(5));
        assert!(p5.is_tree && p5.is_cactus && p5.is_block_graph && p5.is_claw_free);
        assert_eq!(p5.cyclomatic_number, 0);

        let k4 = classify(&Graph::complete(4));
        assert!(!k4.is_tree && k4.is_block_graph && !k4.is_cactus);
        assert_eq!(k4.cyclomatic_number, 3);

        let claw = classify(&Graph::star(3));
        assert!(claw.is_tree && !claw.is_claw_free);

        // Two triangles sharing a vertex: cactus, block graph, claw-free.
        let bowtie =
            Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let c = classify(&bowtie);
        assert!(c.is_cactus && c.is_block_graph && c.is_claw_free);

        // C4 plus a chord: one block with two cycles through the chord.
        let diamond = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let c = classify(&diamond);
        assert!(!c.is_cactus && !c.is_block_graph);

        let c6 = classify(&Graph::cycle(6));
        assert!(c6.is_cactus && !c6.is_block_graph && !c6.is_tree);

        let forest = classify(&Graph::empty(3));
        assert!(!forest.is_connected && !forest.is_tree && forest.is_cactus);
        assert_eq!(forest.components, 3);
        assert!(classify(&Graph::petersen()).is_cubic);
    }
}
