//! Exact solvers for γ, ι_k and ir, and the disjoint-region lower bound.
//!
//! Domination and `k`-isolation are both minimum hitting-set problems: a set
//! `S` dominates iff it meets every `N[u]`, and it is `k`-isolating iff it
//! meets `N[V(C)]` for every `k`-clique `C`. One search serves both.
//!
//! Every search walks candidate sets as increasing vertex sequences in
//! lexicographic order, one cardinality at a time, so the first hit is the
//! lexicographically least minimum witness.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{enumerate_k_cliques, CliqueList, Graph};
use crate::props::{is_irredundant, is_maximal_irredundant};
use crate::vset::VertexSet;

/// Graphs above this order are refused by [`ir_guarded`] unless forced.
pub const IR_ORDER_CAP: usize = 32;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    /// Search nodes visited.
    pub explored: u64,
}

pub fn gamma(g: &Graph) -> SolveResult {
    let family: Vec<VertexSet> = g.vertices().iter().map(|v| g.closed_neighbors(v)).collect();
    min_hitting_set(g.n(), family)
}

pub fn iota(g: &Graph, k: usize) -> Result<SolveResult> {
    if k == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    let cliques = enumerate_k_cliques(g, k)?;
    let family = cliques
        .cliques
        .iter()
        .map(|c| g.closed_neighborhood_of(c))
        .collect();
    Ok(min_hitting_set(g.n(), family))
}

/// Drops duplicates and any set containing another member: hitting the
/// smaller one hits the larger.
fn reduce_family(mut family: Vec<VertexSet>) -> Vec<VertexSet> {
    family.sort_by_key(|s| (s.len(), *s));
    family.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(family.len());
    for s in family {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// Size of a greedy family of pairwise disjoint sets, smallest first.
/// Each needs its own vertex, so this bounds the hitting number from below.
fn disjoint_lower_bound(sets: &[VertexSet]) -> usize {
    let mut used = VertexSet::new();
    let mut count = 0;
    for s in sets {
        if s.is_disjoint(&used) {
            used |= *s;
            count += 1;
        }
    }
    count
}

struct HitSearch {
    n: usize,
    chosen: Vec<usize>,
    explored: u64,
}

impl HitSearch {
    /// Extends `chosen` by at most `budget` vertices, all at least `pos`,
    /// so that every set in `unhit` is met.
    fn extend(&mut self, pos: usize, budget: usize, unhit: &[VertexSet]) -> bool {
        self.explored += 1;
        if unhit.is_empty() {
            return true;
        }
        if budget == 0 {
            return false;
        }
        let tail = VertexSet::range(pos, self.n);
        let mut restricted: Vec<VertexSet> = Vec::with_capacity(unhit.len());
        let mut limit = self.n;
        let mut useful = VertexSet::new();
        for r in unhit {
            let t = *r & tail;
            match t.last() {
                None => return false,
                Some(hi) => limit = limit.min(hi),
            }
            useful |= t;
            restricted.push(t);
        }
        restricted.sort_by_key(|s| s.len());
        if disjoint_lower_bound(&restricted) > budget {
            return false;
        }
        // The next chosen vertex is the least remaining one, so it cannot
        // exceed the largest candidate of any unhit set. A vertex hitting no
        // unhit set would be removable, which a minimum set never allows.
        let candidates = useful & VertexSet::range(pos, limit + 1);
        for v in candidates {
            let rest: Vec<VertexSet> = unhit.iter().filter(|r| !r.contains(v)).copied().collect();
            self.chosen.push(v);
            if self.extend(v + 1, budget - 1, &rest) {
                return true;
            }
            self.chosen.pop();
        }
        false
    }
}

fn min_hitting_set(n: usize, family: Vec<VertexSet>) -> SolveResult {
    let family = reduce_family(family);
    let mut search = HitSearch {
        n,
        chosen: Vec::new(),
        explored: 0,
    };
    let mut b = disjoint_lower_bound(&family);
    loop {
        if search.extend(0, b, &family) {
            let witness: VertexSet = search.chosen.iter().copied().collect();
            return SolveResult {
                value: witness.len(),
                witness,
                explored: search.explored,
            };
        }
        b += 1;
    }
}

/// ir(G): the least size of a maximal irredundant set.
///
/// Irredundance is hereditary, so any prefix that is already redundant is
/// cut. Sets of the target size are then tested for maximality with the
/// one-vertex extension test.
pub fn ir(g: &Graph) -> SolveResult {
    let n = g.n();
    let mut explored = 0u64;
    if n == 0 {
        return SolveResult {
            value: 0,
            witness: VertexSet::new(),
            explored: 1,
        };
    }
    for b in 1..=n {
        let mut current = VertexSet::new();
        if let Some(w) = ir_extend(g, &mut current, 0, b, &mut explored) {
            return SolveResult {
                value: b,
                witness: w,
                explored,
            };
        }
    }
    unreachable!("a maximum irredundant set is maximal")
}

fn ir_extend(
    g: &Graph,
    current: &mut VertexSet,
    pos: usize,
    need: usize,
    explored: &mut u64,
) -> Option<VertexSet> {
    *explored += 1;
    if need == 0 {
        return is_maximal_irredundant(g, current).then_some(*current);
    }
    let n = g.n();
    for v in pos..=(n - need) {
        current.insert(v);
        if is_irredundant(g, current) {
            if let Some(w) = ir_extend(g, current, v + 1, need - 1, explored) {
                return Some(w);
            }
        }
        current.remove(v);
    }
    None
}

/// [`ir`] with the order cap applied.
pub fn ir_guarded(g: &Graph, force: bool) -> Result<SolveResult> {
    if g.n() > IR_ORDER_CAP && !force {
        return Err(Error::TooLarge {
            n: g.n(),
            cap: IR_ORDER_CAP,
        });
    }
    Ok(ir(g))
}

/// Visits every maximal irredundant set in lexicographic order until
/// `visit` returns `false`.
pub fn for_each_maximal_irredundant<F>(g: &Graph, mut visit: F)
where
    F: FnMut(&VertexSet) -> bool,
{
    fn walk<F: FnMut(&VertexSet) -> bool>(
        g: &Graph,
        current: &mut VertexSet,
        pos: usize,
        visit: &mut F,
    ) -> bool {
        if is_maximal_irredundant(g, current) && !visit(current) {
            return false;
        }
        for v in pos..g.n() {
            current.insert(v);
            if is_irredundant(g, current) && !walk(g, current, v + 1, visit) {
                return false;
            }
            current.remove(v);
        }
        true
    }
    let mut current = VertexSet::new();
    walk(g, &mut current, 0, &mut visit);
}

/// Pairwise disjoint regions `N[V(C)]` of `k`-cliques `C`. Any `k`-isolating
/// set meets every region, so the number of regions bounds ι_k from below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingCertificate {
    pub k: usize,
    pub cliques: Vec<VertexSet>,
    pub regions: Vec<VertexSet>,
}

impl PackingCertificate {
    pub fn bound(&self) -> usize {
        self.regions.len()
    }

    /// Rechecks every clique and region and their pairwise disjointness.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        CliqueList {
            k: self.k,
            cliques: self.cliques.clone(),
        }
        .validate(g)?;
        if self.regions.len() != self.cliques.len() {
            return Err(Error::Certificate("one region per clique expected".into()));
        }
        let mut used = VertexSet::new();
        for (c, r) in self.cliques.iter().zip(&self.regions) {
            if *r != g.closed_neighborhood_of(c) {
                return Err(Error::Certificate(format!(
                    "region of {{{c}}} is not N[V(C)]"
                )));
            }
            if r.intersects(&used) {
                return Err(Error::Certificate(format!(
                    "region of {{{c}}} meets an earlier region at {{{}}}",
                    *r & used
                )));
            }
            used |= *r;
        }
        Ok(())
    }
}

/// A packing lower bound on ι_k. With `designated` cliques the packing is
/// only checked; otherwise cliques are chosen greedily by region size.
pub fn iota_lower_bound(
    g: &Graph,
    k: usize,
    designated: Option<&CliqueList>,
) -> Result<(usize, PackingCertificate)> {
    if k == 0 {
        return Err(Error::ZeroCliqueSize);
    }
    let cert = match designated {
        Some(list) => {
            if list.k != k {
                return Err(Error::Certificate(format!(
                    "designated cliques have size {}, expected {k}",
                    list.k
                )));
            }
            let regions = list
                .cliques
                .iter()
                .map(|c| g.closed_neighborhood_of(c))
                .collect();
            PackingCertificate {
                k,
                cliques: list.cliques.clone(),
                regions,
            }
        }
        None => {
            let mut pairs: Vec<(VertexSet, VertexSet)> = enumerate_k_cliques(g, k)?
                .cliques
                .into_iter()
                .map(|c| (g.closed_neighborhood_of(&c), c))
                .collect();
            pairs.sort_by_key(|(r, c)| (r.len(), *c));
            let mut used = VertexSet::new();
            let mut cert = PackingCertificate {
                k,
                cliques: Vec::new(),
                regions: Vec::new(),
            };
            for (r, c) in pairs {
                if r.is_disjoint(&used) {
                    used |= r;
                    cert.cliques.push(c);
                    cert.regions.push(r);
                }
            }
            cert
        }
    };
    cert.verify(g)?;
    Ok((cert.bound(), cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{is_dominating, is_k_isolating};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    /// Lexicographically least minimum set satisfying `ok`, by exhaustion.
    fn brute_min(n: usize, ok: impl Fn(&VertexSet) -> bool) -> VertexSet {
        let mut best: Option<VertexSet> = None;
        for mask in 0u32..(1 << n) {
            let s: VertexSet = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if ok(&s) {
                best = Some(match best {
                    Some(b) if (b.len(), b) <= (s.len(), s) => b,
                    _ => s,
                });
            }
        }
        best.expect("some set qualifies")
    }

    #[test]
    fn small_values() {
        assert_eq!(gamma(&Graph::complete(5)).value, 1);
        assert_eq!(gamma(&Graph::path(7)).value, 3);
        assert_eq!(gamma(&Graph::empty(0)).value, 0);
        assert_eq!(ir(&Graph::complete(6)).value, 1);
        assert_eq!(iota(&Graph::cycle(5), 3).unwrap().value, 0);
        assert_eq!(iota(&Graph::cycle(5), 3).unwrap().witness, VertexSet::new());
        assert_eq!(iota(&Graph::cycle(5), 0), Err(Error::ZeroCliqueSize));
        let two_triangles = Graph::complete(3)
            .disjoint_union(&Graph::complete(3))
            .unwrap();
        assert_eq!(ir(&two_triangles).value, 2);
        assert_eq!(iota(&two_triangles, 3).unwrap().value, 2);
    }

    #[test]
    fn witnesses_are_lexicographically_least() {
        for g in [
            Graph::path(7),
            Graph::cycle(8),
            Graph::petersen(),
            Graph::star(4),
        ] {
            let n = g.n();
            let r = gamma(&g);
            assert_eq!(r.witness, brute_min(n, |s| is_dominating(&g, s)));
            for k in 1..=3 {
                let r = iota(&g, k).unwrap();
                assert_eq!(r.witness, brute_min(n, |s| is_k_isolating(&g, s, k)));
            }
            let r = ir(&g);
            assert_eq!(r.witness, brute_min(n, |s| is_maximal_irredundant(&g, s)));
        }
    }

    #[test]
    fn ir_guard() {
        let big = Graph::path(40);
        assert_eq!(
            ir_guarded(&big, false),
            Err(Error::TooLarge { n: 40, cap: 32 })
        );
        assert!(ir_guarded(&Graph::path(5), false).is_ok());
    }

    #[test]
    fn maximal_irredundant_enumeration() {
        let g = Graph::path(4);
        let mut found = Vec::new();
        for_each_maximal_irredundant(&g, |s| {
            found.push(*s);
            true
        });
        let expected: Vec<VertexSet> = (0u32..16)
            .map(|m| (0..4).filter(|v| m >> v & 1 == 1).collect::<VertexSet>())
            .filter(|s| is_maximal_irredundant(&g, s))
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(found, expected);
    }

    #[test]
    fn packing_bounds() {
        let k4 = Graph::complete(4);
        assert_eq!(iota_lower_bound(&k4, 4, None).unwrap().0, 1);
        assert_eq!(iota_lower_bound(&Graph::cycle(5), 3, None).unwrap().0, 0);

        let p6 = Graph::path(6);
        let good = CliqueList {
            k: 2,
            cliques: vec![set(&[0, 1]), set(&[4, 5])],
        };
        assert_eq!(iota_lower_bound(&p6, 2, Some(&good)).unwrap().0, 2);
        let overlapping = CliqueList {
            k: 2,
            cliques: vec![set(&[0, 1]), set(&[2, 3])],
        };
        assert!(matches!(
            iota_lower_bound(&p6, 2, Some(&overlapping)),
            Err(Error::Certificate(_))
        ));
        let not_clique = CliqueList {
            k: 2,
            cliques: vec![set(&[0, 2])],
        };
        assert!(matches!(
            iota_lower_bound(&p6, 2, Some(&not_clique)),
            Err(Error::Certificate(_))
        ));
    }
}
