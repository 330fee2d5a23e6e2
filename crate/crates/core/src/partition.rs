//! The private-neighbour partition induced by a maximal irredundant set.
//!
//! For a maximal irredundant `I` the vertex set splits into `I`, the
//! undominated vertices `U`, the external private neighbours `P` and the
//! remaining neighbours `S`. `I` itself splits into `Z` (isolated in
//! `G[I]`), `Q` and `B` (by whether some `u ∈ U` dominates the private
//! neighbourhood), and `B` into `N` and `M`. Field names spell these out;
//! the serialized form uses the single letters.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{for_each_k_clique, Graph};
use crate::props::{is_maximal_irredundant, PrivateNeighborTable};
use crate::vset::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BocoPartition {
    #[serde(rename = "I")]
    pub irredundant: VertexSet,
    #[serde(rename = "U")]
    pub undominated: VertexSet,
    #[serde(rename = "P")]
    pub private_external: VertexSet,
    #[serde(rename = "S")]
    pub shared: VertexSet,
    #[serde(rename = "Z")]
    pub isolated: VertexSet,
    #[serde(rename = "A")]
    pub non_isolated: VertexSet,
    #[serde(rename = "Q")]
    pub unabsorbed: VertexSet,
    #[serde(rename = "B")]
    pub absorbed: VertexSet,
    #[serde(rename = "N")]
    pub clique_closed: VertexSet,
    #[serde(rename = "M")]
    pub unclosed: VertexSet,
    /// `N̂`: one chosen private neighbour per member of `N`.
    #[serde(rename = "Nhat")]
    pub representatives: VertexSet,
    /// The chosen private neighbour of every `x ∈ B`, as `(x, x')`.
    pub chosen: Vec<(usize, usize)>,
    #[serde(skip)]
    pub private: PrivateNeighborTable,
}

impl BocoPartition {
    pub fn pn(&self, x: usize) -> VertexSet {
        self.private.pn(x)
    }

    /// The representative chosen in `PN(x, I)` for `x ∈ B`.
    pub fn representative(&self, x: usize) -> Option<usize> {
        self.chosen.iter().find(|c| c.0 == x).map(|c| c.1)
    }

    /// Union of `PN(x, I)` over `x ∈ xs`.
    pub fn pn_union(&self, xs: &VertexSet) -> VertexSet {
        xs.iter().fold(VertexSet::new(), |acc, x| acc | self.pn(x))
    }

    /// Rechecks the block structure: both partitions, the degree facts about
    /// `S` and `M`, and `B ≠ ∅` whenever `U ≠ ∅`.
    pub fn check_invariants(&self, g: &Graph) -> Result<()> {
        let fail = |what: &str| Err(Error::TheoremViolation(format!("partition: {what}")));
        let blocks = [
            self.irredundant,
            self.undominated,
            self.private_external,
            self.shared,
        ];
        if !pairwise_disjoint(&blocks) || union(&blocks) != g.vertices() {
            return fail("I, U, P, S do not partition V");
        }
        let inner = [
            self.isolated,
            self.unabsorbed,
            self.clique_closed,
            self.unclosed,
        ];
        if !pairwise_disjoint(&inner) || union(&inner) != self.irredundant {
            return fail("Z, Q, N, M do not partition I");
        }
        if self.isolated | self.non_isolated != self.irredundant
            || self.unabsorbed | self.absorbed != self.non_isolated
            || self.clique_closed | self.unclosed != self.absorbed
        {
            return fail("nested blocks are inconsistent");
        }
        if self
            .shared
            .iter()
            .any(|v| g.degree_in(v, &self.irredundant) < 2)
        {
            return fail("an S-vertex has fewer than two neighbours in I");
        }
        if self.unclosed.iter().any(|x| self.pn(x).len() < 2) {
            return fail("an M-vertex has fewer than two private neighbours");
        }
        if !self.undominated.is_empty() && self.absorbed.is_empty() {
            return fail("U is nonempty but B is empty");
        }
        Ok(())
    }
}

fn pairwise_disjoint(sets: &[VertexSet]) -> bool {
    let mut seen = VertexSet::new();
    for s in sets {
        if s.intersects(&seen) {
            return false;
        }
        seen |= *s;
    }
    true
}

fn union(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::new(), |acc, s| acc | *s)
}

/// Lowest-index representative rule.
pub fn lowest(_x: usize, pn: &VertexSet) -> usize {
    pn.first()
        .expect("private neighbourhoods in I are nonempty")
}

pub fn compute_partition(g: &Graph, i: &VertexSet) -> Result<BocoPartition> {
    compute_partition_with(g, i, lowest)
}

/// As [`compute_partition`], with `pick(x, PN(x, I))` choosing the
/// representative of each `x ∈ B`. The pick must return a member of the set.
pub fn compute_partition_with<F>(g: &Graph, i: &VertexSet, mut pick: F) -> Result<BocoPartition>
where
    F: FnMut(usize, &VertexSet) -> usize,
{
    g.check_set(i)?;
    if !is_maximal_irredundant(g, i) {
        return Err(Error::Precondition(format!(
            "{{{i}}} is not a maximal irredundant set"
        )));
    }
    let table = PrivateNeighborTable::new(g, i)?;
    let all = g.vertices();
    let undominated = all - g.closed_neighborhood_of(i);
    let private_external = table.union() - *i;
    let shared = g.open_neighborhood_of(i) - private_external - *i;

    let isolated: VertexSet = i
        .iter()
        .filter(|&x| !g.neighbors(x).intersects(i))
        .collect();
    let non_isolated = *i - isolated;
    let absorbed: VertexSet = non_isolated
        .iter()
        .filter(|&x| {
            let pn = table.pn(x);
            undominated.iter().any(|u| pn.is_subset(g.neighbors(u)))
        })
        .collect();
    let unabsorbed = non_isolated - absorbed;

    // Membership in N only gets easier as N grows, so closing from the
    // clique cases up to a fixpoint gives the largest qualifying set.
    let mut closed: VertexSet = absorbed
        .iter()
        .filter(|&x| g.is_clique(&table.pn(x)))
        .collect();
    loop {
        let mut grew = false;
        for x in absorbed - closed {
            let mut pool = closed;
            pool.insert(x);
            let ok = table.pn(x).iter().all(|xp| {
                let reach = g.closed_neighbors(xp);
                pool.iter().any(|y| table.pn(y).is_subset(&reach))
            });
            if ok {
                closed.insert(x);
                grew = true;
            }
        }
        if !grew {
            break;
        }
    }
    let unclosed = absorbed - closed;

    let mut chosen = Vec::new();
    for x in absorbed {
        let pn = table.pn(x);
        let c = pick(x, &pn);
        if !pn.contains(c) {
            return Err(Error::Precondition(format!(
                "representative {c} is not a private neighbour of {x}"
            )));
        }
        chosen.push((x, c));
    }
    let representatives = chosen
        .iter()
        .filter(|c| closed.contains(c.0))
        .map(|c| c.1)
        .collect();

    let part = BocoPartition {
        irredundant: *i,
        undominated,
        private_external,
        shared,
        isolated,
        non_isolated,
        unabsorbed,
        absorbed,
        clique_closed: closed,
        unclosed,
        representatives,
        chosen,
        private: table,
    };
    part.check_invariants(g)?;
    Ok(part)
}

/// The vertex `x` and pair dominators promised for one undominated `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem6Witness {
    pub u: usize,
    pub x: usize,
    /// `(x_i, y_i)`: each member of a non-adjacent pair in `PN(x, I)` and a
    /// `y_i ∈ I \ {x}` whose private neighbourhood it dominates.
    pub dominators: Vec<(usize, usize)>,
}

/// For every `u ∈ U`, finds `x ∈ I` with `PN(x, I) ⊆ N(u)` whose private
/// neighbourhood also satisfies the pair condition, preferring the lowest
/// such `x` and the lowest `y_i`. Isolated `x` or `y_i` are reported as
/// violations, since neither can occur.
pub fn theorem6_witnesses(g: &Graph, part: &BocoPartition) -> Result<Vec<Theorem6Witness>> {
    let i = part.irredundant;
    let mut out = Vec::new();
    for u in part.undominated {
        let mut found = None;
        for x in i {
            let pn = part.pn(x);
            if !pn.is_subset(g.neighbors(u)) {
                continue;
            }
            if let Some(dominators) = pair_dominators(g, part, x) {
                found = Some(Theorem6Witness { u, x, dominators });
                break;
            }
        }
        let w = found.ok_or_else(|| {
            Error::TheoremViolation(format!("no Theorem 6 vertex for undominated {u}"))
        })?;
        if part.isolated.contains(w.x) {
            return Err(Error::TheoremViolation(format!(
                "witness {} for {u} is isolated in I",
                w.x
            )));
        }
        if let Some(&(xi, y)) = w.dominators.iter().find(|d| part.isolated.contains(d.1)) {
            return Err(Error::TheoremViolation(format!(
                "dominated set of {xi} belongs to {y}, which is isolated in I"
            )));
        }
        out.push(w);
    }
    Ok(out)
}

fn pair_dominators(g: &Graph, part: &BocoPartition, x: usize) -> Option<Vec<(usize, usize)>> {
    let pn = part.pn(x);
    let mut needy = VertexSet::new();
    for a in pn {
        if !(pn - g.closed_neighbors(a)).is_empty() {
            needy.insert(a);
        }
    }
    let mut others = part.irredundant;
    others.remove(x);
    let mut out = Vec::new();
    for a in needy {
        let reach = g.closed_neighbors(a);
        let y = others.iter().find(|&y| part.pn(y).is_subset(&reach))?;
        out.push((a, y));
    }
    Some(out)
}

/// `N̂` dominates the private neighbourhoods of all of `N`.
pub fn check_lemma1(g: &Graph, part: &BocoPartition) -> Result<()> {
    let target = part.pn_union(&part.clique_closed);
    let reach = g.closed_neighborhood_of(&part.representatives);
    if target.is_subset(&reach) {
        Ok(())
    } else {
        Err(Error::TheoremViolation(format!(
            "Lemma 1: {{{}}} is not dominated by the N representatives",
            target - reach
        )))
    }
}

/// With `k = Δ`, no `k`-clique avoiding `I` meets `S`.
pub fn check_claim1(g: &Graph, part: &BocoPartition, k: usize) -> Result<()> {
    let outside = g.vertices() - part.irredundant;
    let mut bad = None;
    for_each_k_clique(g, &outside, k, |c| {
        if c.intersects(&part.shared) {
            bad = Some(*c);
            false
        } else {
            true
        }
    });
    match bad {
        None => Ok(()),
        Some(c) => Err(Error::TheoremViolation(format!(
            "Claim 1: clique {{{c}}} avoids I but meets S"
        ))),
    }
}

/// With `k = Δ - 1`, every `k`-clique of `G[S]` is a whole component of `G[S]`.
pub fn check_claim5(g: &Graph, part: &BocoPartition, k: usize) -> Result<()> {
    let s = part.shared;
    let mut bad = None;
    for_each_k_clique(g, &s, k, |c| {
        if (g.open_neighborhood_of(c) & s).is_subset(c) {
            true
        } else {
            bad = Some(*c);
            false
        }
    });
    match bad {
        None => Ok(()),
        Some(c) => Err(Error::TheoremViolation(format!(
            "Claim 5: clique {{{c}}} is not a component of G[S]"
        ))),
    }
}

/// How to read "not adjacent to any vertex in `M̃ ∪ Q ∪ Z`" for `S′`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub enum SharedReading {
    /// Only neighbours inside `I` count.
    #[default]
    IAdjacency,
    /// Neighbours in the private neighbourhoods of those vertices count too.
    WithPrivate,
}

impl std::str::FromStr for SharedReading {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "i-adjacency" | "i" => Ok(SharedReading::IAdjacency),
            "with-private" | "private" => Ok(SharedReading::WithPrivate),
            _ => Err(Error::Precondition(format!("unknown reading {s:?}"))),
        }
    }
}

/// Refinement used when `k = Δ - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm2Refinement {
    pub k: usize,
    pub delta: usize,
    pub reading: SharedReading,
    /// `M′`: members of `M` with exactly two private neighbours.
    pub m_prime: VertexSet,
    /// `M̃ = M \ M′`.
    pub m_tilde: VertexSet,
    /// The chosen private neighbour `y_i` of each `x_i ∈ M′`.
    pub y: VertexSet,
    /// The other private neighbour `w_i`.
    pub w: VertexSet,
    /// `S′`.
    pub s_prime: VertexSet,
    /// `𝓗`: the `k`-cliques inside `S′`.
    pub cliques: Vec<VertexSet>,
    /// Most cliques of `𝓗` adjacent to one vertex of `N ∪ M′`.
    pub s: usize,
    /// The lowest vertex attaining `s`, when `s > 0`.
    pub a: Option<usize>,
    /// Indices into `cliques` of the cliques adjacent to `a`.
    pub h_a: Vec<usize>,
    pub x: VertexSet,
    /// `N̂ ∪ Y ∪ X ∪ M̃ ∪ Q ∪ Z`.
    pub t: VertexSet,
}

impl Thm2Refinement {
    /// Claim 7 in cross-multiplied form: `2k|𝓗| ≤ (Δ-2)|N ∪ M′|`, plus
    /// pairwise disjointness of the cliques.
    pub fn check_claims(&self, part: &BocoPartition) -> Result<()> {
        if !pairwise_disjoint(&self.cliques) {
            return Err(Error::TheoremViolation(
                "Claim 5: cliques inside S' intersect".into(),
            ));
        }
        let base = (part.clique_closed | self.m_prime).len();
        if 2 * self.k * self.cliques.len() > (self.delta - 2) * base {
            return Err(Error::TheoremViolation(format!(
                "Claim 7: {} cliques against |N u M'| = {base}",
                self.cliques.len()
            )));
        }
        Ok(())
    }
}

fn regime(k: usize, delta: usize, reason: &'static str) -> Error {
    Error::Regime { k, delta, reason }
}

pub fn refine_thm2(
    g: &Graph,
    part: &BocoPartition,
    k: usize,
    reading: SharedReading,
) -> Result<Thm2Refinement> {
    let delta = g.max_degree();
    if delta < 2 || k + 1 != delta {
        return Err(regime(
            k,
            delta,
            "this refinement needs k = Δ - 1 and Δ ≥ 2",
        ));
    }
    let m_prime: VertexSet = part
        .unclosed
        .iter()
        .filter(|&x| part.pn(x).len() == 2)
        .collect();
    let m_tilde = part.unclosed - m_prime;
    let mut y = VertexSet::new();
    let mut w = VertexSet::new();
    for x in m_prime {
        let yi = part.representative(x).expect("M is inside B");
        y.insert(yi);
        w |= part.pn(x) - VertexSet::singleton(yi);
    }

    let core = part.clique_closed | m_prime;
    let excluded = m_tilde | part.unabsorbed | part.isolated;
    let mut avoid = excluded;
    if reading == SharedReading::WithPrivate {
        avoid |= part.pn_union(&excluded);
    }
    let s_prime: VertexSet = part
        .shared
        .iter()
        .filter(|&v| !g.neighbors(v).intersects(&avoid))
        .collect();

    let mut cliques = Vec::new();
    for_each_k_clique(g, &s_prime, k, |c| {
        cliques.push(*c);
        true
    });
    let reach: Vec<VertexSet> = cliques
        .iter()
        .map(|c| g.closed_neighborhood_of(c))
        .collect();

    let mut s = 0;
    let mut a = None;
    for v in core {
        let count = reach.iter().filter(|r| r.contains(v)).count();
        if count > s {
            s = count;
            a = Some(v);
        }
    }
    let mut h_a = Vec::new();
    let mut x = VertexSet::new();
    if let Some(a) = a {
        x.insert(a);
        for (idx, (c, r)) in cliques.iter().zip(&reach).enumerate() {
            if r.contains(a) {
                h_a.push(idx);
            } else {
                x.insert(c.first().expect("cliques are nonempty"));
            }
        }
    }
    let t = part.representatives | y | x | m_tilde | part.unabsorbed | part.isolated;
    Ok(Thm2Refinement {
        k,
        delta,
        reading,
        m_prime,
        m_tilde,
        y,
        w,
        s_prime,
        cliques,
        s,
        a,
        h_a,
        x,
        t,
    })
}

/// Shape of a connected group of intersecting cliques inside `S″`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GroupKind {
    /// A clique meeting no other.
    Isolated,
    /// Intersecting cliques spanning `k + 1` vertices.
    Twin,
    /// Anything larger. Only `k ≤ 2` leaves room for this.
    Chain,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueGroup {
    pub kind: GroupKind,
    /// Indices into the refinement's clique list.
    pub cliques: Vec<usize>,
    pub vertices: VertexSet,
    /// Chosen vertices meeting or adjacent to every clique of the group.
    pub cover: VertexSet,
}

/// Refinement used when `k = Δ - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm3Refinement {
    pub k: usize,
    pub delta: usize,
    pub m_prime: VertexSet,
    /// `M″`: members of `M` with exactly three private neighbours.
    pub m_double_prime: VertexSet,
    /// `M̄`: the rest of `M`.
    pub m_bar: VertexSet,
    /// `Q′`: members of `Q` with a single private neighbour.
    pub q_prime: VertexSet,
    pub q_tilde: VertexSet,
    /// `S″`.
    pub s_double_prime: VertexSet,
    /// `𝓗′`: the `k`-cliques inside `S″`.
    pub cliques: Vec<VertexSet>,
    pub groups: Vec<CliqueGroup>,
    /// Number of isolated cliques.
    pub t1: usize,
    /// Number of twins.
    pub t2: usize,
    pub m_hat: VertexSet,
    pub q_hat: VertexSet,
    pub x: VertexSet,
    /// `N̂ ∪ M̂ ∪ M̄ ∪ Q̂ ∪ Q̃ ∪ Z ∪ X`.
    pub t: VertexSet,
}

impl Thm3Refinement {
    /// Intersecting cliques share exactly `k - 1` vertices, and Claim 9 in
    /// the form `2|X| ≤ |N ∪ M′ ∪ M″ ∪ Q′|` (which is `t₁ + t₂` when every
    /// group is an isolated clique or a twin).
    pub fn check_claims(&self, part: &BocoPartition) -> Result<()> {
        for (i, a) in self.cliques.iter().enumerate() {
            for b in &self.cliques[i + 1..] {
                let shared = (*a & *b).len();
                if shared != 0 && shared + 1 != self.k {
                    return Err(Error::TheoremViolation(format!(
                        "cliques {{{a}}} and {{{b}}} in S'' share {shared} vertices"
                    )));
                }
            }
        }
        let base = (part.clique_closed | self.m_prime | self.m_double_prime | self.q_prime).len();
        if 2 * (self.t1 + self.t2) > base || 2 * self.x.len() > base {
            return Err(Error::TheoremViolation(format!(
                "Claim 9: t1 = {}, t2 = {}, |X| = {} against {base}",
                self.t1,
                self.t2,
                self.x.len()
            )));
        }
        Ok(())
    }
}

pub fn refine_thm3(g: &Graph, part: &BocoPartition, k: usize) -> Result<Thm3Refinement> {
    let delta = g.max_degree();
    if delta < 3 || k + 2 != delta {
        return Err(regime(
            k,
            delta,
            "this refinement needs k = Δ - 2 and Δ ≥ 3",
        ));
    }
    let by_size = |set: VertexSet, keep: &dyn Fn(usize) -> bool| -> VertexSet {
        set.iter().filter(|&x| keep(part.pn(x).len())).collect()
    };
    let m_prime = by_size(part.unclosed, &|l| l == 2);
    let m_double_prime = by_size(part.unclosed, &|l| l == 3);
    let m_bar = part.unclosed - m_prime - m_double_prime;
    let q_prime = by_size(part.unabsorbed, &|l| l == 1);
    let q_tilde = part.unabsorbed - q_prime;

    let allowed = part.clique_closed | m_prime | m_double_prime | q_prime;
    let s_double_prime: VertexSet = part
        .shared
        .iter()
        .filter(|&v| (*g.neighbors(v) & part.irredundant).is_subset(&allowed))
        .collect();

    let mut cliques = Vec::new();
    for_each_k_clique(g, &s_double_prime, k, |c| {
        cliques.push(*c);
        true
    });

    // Connected groups of the intersection relation, in order of first clique.
    let mut group_of = vec![usize::MAX; cliques.len()];
    let mut groups = Vec::new();
    for start in 0..cliques.len() {
        if group_of[start] != usize::MAX {
            continue;
        }
        let gid = groups.len();
        let mut members = vec![start];
        group_of[start] = gid;
        let mut head = 0;
        while head < members.len() {
            let c = cliques[members[head]];
            head += 1;
            for (j, d) in cliques.iter().enumerate() {
                if group_of[j] == usize::MAX && c.intersects(d) {
                    group_of[j] = gid;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        let vertices = members
            .iter()
            .fold(VertexSet::new(), |acc, &j| acc | cliques[j]);
        let kind = if members.len() == 1 {
            GroupKind::Isolated
        } else if vertices.len() == k + 1 {
            GroupKind::Twin
        } else {
            GroupKind::Chain
        };
        let cover = greedy_cover(g, &cliques, &members);
        groups.push(CliqueGroup {
            kind,
            cliques: members,
            vertices,
            cover,
        });
    }
    let t1 = groups
        .iter()
        .filter(|g| g.kind == GroupKind::Isolated)
        .count();
    let t2 = groups.iter().filter(|g| g.kind == GroupKind::Twin).count();
    let x = groups.iter().fold(VertexSet::new(), |acc, g| acc | g.cover);

    let m_hat: VertexSet = (m_prime | m_double_prime)
        .iter()
        .map(|b| part.representative(b).expect("M is inside B"))
        .collect();
    let q_hat: VertexSet = q_prime.iter().flat_map(|c| part.pn(c)).collect();
    let t = part.representatives | m_hat | m_bar | q_hat | q_tilde | part.isolated | x;
    Ok(Thm3Refinement {
        k,
        delta,
        m_prime,
        m_double_prime,
        m_bar,
        q_prime,
        q_tilde,
        s_double_prime,
        cliques,
        groups,
        t1,
        t2,
        m_hat,
        q_hat,
        x,
        t,
    })
}

/// Vertices of the group's cliques chosen greedily, most newly reached
/// cliques first and lowest index on ties, until every clique contains or
/// is adjacent to a chosen vertex. One vertex suffices for isolated cliques
/// and twins.
fn greedy_cover(g: &Graph, cliques: &[VertexSet], members: &[usize]) -> VertexSet {
    let reach: Vec<VertexSet> = members
        .iter()
        .map(|&j| g.closed_neighborhood_of(&cliques[j]))
        .collect();
    let pool = members
        .iter()
        .fold(VertexSet::new(), |acc, &j| acc | cliques[j]);
    let mut open: Vec<usize> = (0..members.len()).collect();
    let mut cover = VertexSet::new();
    while !open.is_empty() {
        let best = pool
            .iter()
            .max_by_key(|&v| {
                let hits = open.iter().filter(|&&o| reach[o].contains(v)).count();
                (hits, std::cmp::Reverse(v))
            })
            .expect("groups are nonempty");
        cover.insert(best);
        open.retain(|&o| !reach[o].contains(best));
    }
    cover
}
