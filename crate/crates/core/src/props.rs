//! Private neighbourhoods and the set predicates built on them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{has_k_clique_within, Graph};
use crate::vset::VertexSet;

/// `PN(x, S) = N[x] \ N[S \ {x}]`.
pub fn private_neighbors(g: &Graph, s: &VertexSet, x: usize) -> Result<VertexSet> {
    g.check_set(s)?;
    g.check_vertex(x)?;
    if !s.contains(x) {
        return Err(Error::NotAMember(x));
    }
    let mut others = *s;
    others.remove(x);
    Ok(g.closed_neighbors(x) - g.closed_neighborhood_of(&others))
}

/// Private neighbour sets of every member of `S`, computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrivateNeighborTable {
    pub set: VertexSet,
    /// `(x, PN(x, S))` in ascending order of `x`.
    pub entries: Vec<(usize, VertexSet)>,
}

impl PrivateNeighborTable {
    pub fn new(g: &Graph, s: &VertexSet) -> Result<Self> {
        g.check_set(s)?;
        Ok(Self::build(g, s))
    }

    pub(crate) fn build(g: &Graph, s: &VertexSet) -> Self {
        let exactly_once = coverage_once(g, s);
        let entries = s
            .iter()
            .map(|x| (x, g.closed_neighbors(x) & exactly_once))
            .collect();
        PrivateNeighborTable { set: *s, entries }
    }

    pub fn get(&self, x: usize) -> Option<&VertexSet> {
        self.entries
            .binary_search_by_key(&x, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn pn(&self, x: usize) -> VertexSet {
        self.get(x).copied().unwrap_or_default()
    }

    /// Union of all private neighbour sets.
    pub fn union(&self) -> VertexSet {
        self.entries
            .iter()
            .fold(VertexSet::new(), |acc, e| acc | e.1)
    }
}

/// Vertices lying in exactly one closed neighbourhood `N[x]`, `x ∈ S`.
fn coverage_once(g: &Graph, s: &VertexSet) -> VertexSet {
    let mut once = VertexSet::new();
    let mut multi = VertexSet::new();
    for x in s {
        let nx = g.closed_neighbors(x);
        multi |= once & nx;
        once |= nx;
    }
    once - multi
}

pub fn is_dominating(g: &Graph, s: &VertexSet) -> bool {
    g.closed_neighborhood_of(s) == g.vertices()
}

pub fn is_irredundant(g: &Graph, s: &VertexSet) -> bool {
    let once = coverage_once(g, s);
    s.iter().all(|x| g.closed_neighbors(x).intersects(&once))
}

/// The literal test: `S` is irredundant and no single added vertex keeps it so.
pub fn is_maximal_irredundant(g: &Graph, s: &VertexSet) -> bool {
    is_irredundant(g, s)
        && (g.vertices() - *s).iter().all(|u| {
            let mut t = *s;
            t.insert(u);
            !is_irredundant(g, &t)
        })
}

/// True when `G - N[S]` contains no `k`-clique. For `k = 0` nothing isolates.
pub fn is_k_isolating(g: &Graph, s: &VertexSet, k: usize) -> bool {
    if k == 0 {
        return false;
    }
    let rest = g.vertices() - g.closed_neighborhood_of(s);
    !has_k_clique_within(g, &rest, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn private_neighbor_examples() {
        let p3 = Graph::path(3);
        assert_eq!(
            private_neighbors(&p3, &set(&[1]), 1).unwrap(),
            set(&[0, 1, 2])
        );
        assert_eq!(private_neighbors(&p3, &set(&[0, 2]), 0).unwrap(), set(&[0]));
        let k3 = Graph::complete(3);
        assert!(private_neighbors(&k3, &set(&[0, 1]), 0).unwrap().is_empty());
        assert_eq!(
            private_neighbors(&k3, &set(&[0, 1]), 2),
            Err(Error::NotAMember(2))
        );
        assert!(private_neighbors(&k3, &set(&[5]), 5).is_err());
    }

    #[test]
    fn table_matches_definition() {
        let g = Graph::petersen();
        let s = set(&[0, 1, 6, 9]);
        let t = PrivateNeighborTable::new(&g, &s).unwrap();
        for x in s {
            assert_eq!(t.pn(x), private_neighbors(&g, &s, x).unwrap());
        }
    }

    #[test]
    fn predicate_examples() {
        let c6 = Graph::cycle(6);
        assert!(is_dominating(&Graph::complete(5), &set(&[0])));
        assert!(!is_dominating(&c6, &set(&[0])));
        assert!(is_dominating(&c6, &c6.vertices()));

        assert!(!is_irredundant(&Graph::complete(3), &set(&[0, 1])));
        assert!(is_irredundant(&c6, &set(&[0, 2, 4])));
        assert!(is_irredundant(&Graph::path(4), &set(&[1, 2])));
        assert!(is_irredundant(&c6, &VertexSet::new()));

        assert!(is_maximal_irredundant(&Graph::complete(4), &set(&[0])));
        assert!(is_maximal_irredundant(&Graph::path(4), &set(&[1, 2])));
        assert!(!is_maximal_irredundant(&c6, &set(&[0])));
        assert!(!is_maximal_irredundant(&c6, &VertexSet::new()));
        assert!(is_maximal_irredundant(&Graph::empty(0), &VertexSet::new()));

        assert!(is_k_isolating(&c6, &VertexSet::new(), 4));
        assert!(is_k_isolating(&c6, &set(&[0, 3]), 1));
        assert!(!is_k_isolating(&Graph::path(5), &set(&[0]), 2));
    }
}
