//! Generators for the extremal constructions, each bundled with its claimed
//! invariant values, witness sets, degree audits and, where the lower bound
//! is a packing argument, the designated cliques.
//!
//! Vertex labels follow the usual names: `x^i_j` is `x_j` in copy `i`,
//! `K^{i,j}[m]` is member `m` of clique `K^{i,j}`, and so on.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{CliqueList, Graph, GraphBuilder};
use crate::graph6::encode_graph6;
use crate::props::{is_dominating, is_k_isolating, is_maximal_irredundant};
use crate::solve::{iota_lower_bound, PackingCertificate};
use crate::vset::VertexSet;

fn graph_as_graph6<S: Serializer>(g: &Graph, ser: S) -> std::result::Result<S::Ok, S::Error> {
    match encode_graph6(g) {
        Ok(text) => ser.serialize_str(&text),
        Err(e) => Err(serde::ser::Error::custom(e)),
    }
}

/// An expected degree for one labelled vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeAudit {
    pub label: String,
    pub vertex: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyInstance {
    pub name: String,
    pub params: BTreeMap<String, usize>,
    /// The same parameters in generator order.
    pub args: Vec<usize>,
    /// Quantities derived while building (splits, `l`, `r`, `r′`).
    pub derived: BTreeMap<String, usize>,
    #[serde(rename = "graph6", serialize_with = "graph_as_graph6")]
    pub graph: Graph,
    pub expected_delta: usize,
    /// Clique size the isolation claim refers to.
    pub k: Option<usize>,
    pub claimed_gamma: Option<usize>,
    pub claimed_ir: Option<usize>,
    pub claimed_iota: Option<usize>,
    /// True when the claimed ir is certified only from above here; its lower
    /// bound rests on the published argument.
    pub ir_lower_bound_paper_asserted: bool,
    pub witness_irredundant: Option<VertexSet>,
    pub witness_isolating: Option<VertexSet>,
    pub witness_dominating: Option<VertexSet>,
    pub designated_cliques: Option<CliqueList>,
    pub labels: BTreeMap<String, usize>,
    pub degree_audits: Vec<DegreeAudit>,
}

/// Outcome of [`check_instance`]: every check that passed, with the packing
/// lower bound when cliques were designated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceCheck {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub delta: usize,
    pub degree_audits: usize,
    pub witness_irredundant: Option<usize>,
    pub witness_isolating: Option<usize>,
    pub witness_dominating: Option<usize>,
    pub packing_bound: Option<usize>,
    #[serde(skip)]
    pub packing: Option<PackingCertificate>,
}

/// Verifies the degree audits, every bundled witness and the designated
/// packing. Any failure is an error naming the offending label or set.
pub fn check_instance(inst: &FamilyInstance) -> Result<InstanceCheck> {
    let g = &inst.graph;
    let name_of = |v: usize| {
        inst.labels
            .iter()
            .find(|(_, &i)| i == v)
            .map(|(l, _)| l.clone())
            .unwrap_or_else(|| v.to_string())
    };
    let delta = g.max_degree();
    if delta != inst.expected_delta {
        return Err(Error::TheoremViolation(format!(
            "{}: maximum degree {delta}, expected {}",
            inst.name, inst.expected_delta
        )));
    }
    for a in &inst.degree_audits {
        let d = g.degree(a.vertex);
        if d != a.expected {
            return Err(Error::TheoremViolation(format!(
                "{}: deg({}) = {d}, expected {}",
                inst.name, a.label, a.expected
            )));
        }
    }
    let k = inst.k;
    let fail = |what: &str, s: &VertexSet| {
        let names: Vec<String> = s.iter().map(name_of).collect();
        Err(Error::TheoremViolation(format!(
            "{}: witness {{{}}} is not {what}",
            inst.name,
            names.join(", ")
        )))
    };
    if let Some(s) = &inst.witness_irredundant {
        if !is_maximal_irredundant(g, s) {
            return fail("maximal irredundant", s);
        }
    }
    if let Some(s) = &inst.witness_isolating {
        let k = k.expect("isolating witnesses come with k");
        if !is_k_isolating(g, s, k) {
            return fail(&format!("{k}-isolating"), s);
        }
    }
    if let Some(s) = &inst.witness_dominating {
        if !is_dominating(g, s) {
            return fail("dominating", s);
        }
    }
    let packing = match &inst.designated_cliques {
        Some(list) => Some(iota_lower_bound(g, list.k, Some(list))?.1),
        None => None,
    };
    Ok(InstanceCheck {
        name: inst.name.clone(),
        n: g.n(),
        m: g.m(),
        delta,
        degree_audits: inst.degree_audits.len(),
        witness_irredundant: inst.witness_irredundant.map(|s| s.len()),
        witness_isolating: inst.witness_isolating.map(|s| s.len()),
        witness_dominating: inst.witness_dominating.map(|s| s.len()),
        packing_bound: packing.as_ref().map(|p| p.bound()),
        packing,
    })
}

/// Labelled vertices and edges collected before the order is known.
struct Draft {
    labels: BTreeMap<String, usize>,
    edges: Vec<(usize, usize)>,
    n: usize,
    adj: Vec<VertexSet>,
}

impl Draft {
    fn new() -> Self {
        Draft {
            labels: BTreeMap::new(),
            edges: Vec::new(),
            n: 0,
            adj: Vec::new(),
        }
    }

    fn vertex(&mut self, label: String) -> usize {
        let v = self.n;
        self.n += 1;
        self.adj.push(VertexSet::new());
        let prev = self.labels.insert(label, v);
        debug_assert!(prev.is_none(), "labels are unique");
        v
    }

    fn clique(&mut self, name: &str, k: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..k)
            .map(|m| self.vertex(format!("{name}[{m}]")))
            .collect();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
        vs
    }

    fn edge(&mut self, u: usize, v: usize) {
        assert!(
            u != v && !self.adj[u].contains(v),
            "construction adds edge {u}-{v} twice"
        );
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges.push((u, v));
    }

    fn join(&mut self, u: usize, vs: &[usize]) {
        for &v in vs {
            self.edge(u, v);
        }
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn build(&self) -> Result<Graph> {
        let mut b = GraphBuilder::new(self.n)?;
        for &(u, v) in &self.edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }
}

struct Blueprint {
    name: &'static str,
    params: Vec<(&'static str, usize)>,
    derived: Vec<(&'static str, usize)>,
    expected_delta: usize,
    k: Option<usize>,
    claimed_gamma: Option<usize>,
    claimed_ir: Option<usize>,
    claimed_iota: Option<usize>,
    ir_lower_bound_paper_asserted: bool,
    witness_irredundant: Option<VertexSet>,
    witness_isolating: Option<VertexSet>,
    witness_dominating: Option<VertexSet>,
    designated: Option<Vec<Vec<usize>>>,
    audits: Vec<(String, usize, usize)>,
}

impl Blueprint {
    fn new(name: &'static str, params: Vec<(&'static str, usize)>, expected_delta: usize) -> Self {
        Blueprint {
            name,
            params,
            derived: Vec::new(),
            expected_delta,
            k: None,
            claimed_gamma: None,
            claimed_ir: None,
            claimed_iota: None,
            ir_lower_bound_paper_asserted: false,
            witness_irredundant: None,
            witness_isolating: None,
            witness_dominating: None,
            designated: None,
            audits: Vec::new(),
        }
    }

    fn finish(self, d: Draft) -> Result<FamilyInstance> {
        let graph = d.build()?;
        let name_of = |v: usize| {
            d.labels
                .iter()
                .find(|(_, &i)| i == v)
                .map(|(l, _)| l.clone())
                .unwrap_or_else(|| v.to_string())
        };
        let designated_cliques = self.designated.map(|cs| CliqueList {
            k: self.k.expect("designated cliques come with k"),
            cliques: cs.iter().map(|c| c.iter().copied().collect()).collect(),
        });
        Ok(FamilyInstance {
            name: self.name.to_string(),
            params: self
                .params
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            args: self.params.iter().map(|&(_, v)| v).collect(),
            derived: self
                .derived
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
            expected_delta: self.expected_delta,
            k: self.k,
            claimed_gamma: self.claimed_gamma,
            claimed_ir: self.claimed_ir,
            claimed_iota: self.claimed_iota,
            ir_lower_bound_paper_asserted: self.ir_lower_bound_paper_asserted,
            witness_irredundant: self.witness_irredundant,
            witness_isolating: self.witness_isolating,
            witness_dominating: self.witness_dominating,
            designated_cliques,
            degree_audits: self
                .audits
                .into_iter()
                .map(|(label, vertex, expected)| DegreeAudit {
                    label: if label.is_empty() {
                        name_of(vertex)
                    } else {
                        label
                    },
                    vertex,
                    expected,
                })
                .collect(),
            labels: d.labels,
            graph,
        })
    }
}

fn param_err(msg: String) -> Error {
    Error::Parameter(msg)
}

/// `t` disjoint copies of `K_k`; `x_i` is the first vertex of copy `i`.
pub fn gen_g1(t: usize, k: usize) -> Result<FamilyInstance> {
    if t < 1 || k < 2 {
        return Err(param_err(format!(
            "G1 needs t >= 1 and k >= 2, got t={t}, k={k}"
        )));
    }
    let mut d = Draft::new();
    let mut xs = Vec::new();
    for i in 1..=t {
        let c = d.clique(&format!("K^{i}"), k);
        d.labels.insert(format!("x_{i}"), c[0]);
        xs.push(c[0]);
    }
    let w: VertexSet = xs.iter().copied().collect();
    let mut bp = Blueprint::new("G1", vec![("t", t), ("k", k)], k - 1);
    bp.k = Some(k);
    bp.claimed_ir = Some(t);
    bp.claimed_iota = Some(t);
    bp.witness_irredundant = Some(w);
    bp.witness_isolating = Some(w);
    bp.audits = xs.iter().map(|&x| (String::new(), x, k - 1)).collect();
    bp.finish(d)
}

/// `2t` copies of `K_k` and `t` edges `x^i_1 x^i_2`, with `x^i_1` joined to
/// `x_{2i-1}` and `x^i_2` to `x_{2i}`.
pub fn gen_g2(t: usize, k: usize) -> Result<FamilyInstance> {
    if t < 1 || k < 2 {
        return Err(param_err(format!(
            "G2 needs t >= 1 and k >= 2, got t={t}, k={k}"
        )));
    }
    let mut d = Draft::new();
    let mut xs = Vec::new();
    for i in 1..=2 * t {
        let c = d.clique(&format!("K^{i}"), k);
        d.labels.insert(format!("x_{i}"), c[0]);
        xs.push(c[0]);
    }
    for i in 1..=t {
        let a = d.vertex(format!("x^{i}_1"));
        let b = d.vertex(format!("x^{i}_2"));
        d.edge(a, b);
        d.edge(a, xs[2 * i - 2]);
        d.edge(b, xs[2 * i - 1]);
    }
    let w: VertexSet = xs.iter().copied().collect();
    let mut bp = Blueprint::new("G2", vec![("t", t), ("k", k)], k);
    bp.k = Some(k);
    bp.claimed_ir = Some(2 * t);
    bp.claimed_iota = Some(2 * t);
    bp.witness_irredundant = Some(w);
    bp.witness_isolating = Some(w);
    bp.audits = xs.iter().map(|&x| (String::new(), x, k)).collect();
    bp.finish(d)
}

/// Whether `4l = ⌊(3Δ-4)·3l / (2Δ-2)⌋` with `Δ = k + 1`.
pub fn gkl_equation_holds(k: usize, l: usize) -> bool {
    let delta = k + 1;
    4 * l == (3 * delta - 4) * 3 * l / (2 * delta - 2)
}

/// `l` chained copies of `L(k)`. Each copy has the path `x_1 x_2 x_3`,
/// pendant-like `y_j` joined to `x_j` and to all of `K^{i,j}`, and `K^{i,0}`
/// shared among the `x_j` so that each of its vertices sees exactly two of
/// them. The split is `t₁ = Δ - 3`, `t₃ = 4`.
pub fn gen_gkl(k: usize, l: usize) -> Result<FamilyInstance> {
    if k < 6 {
        return Err(param_err(format!("G(k,l) needs k >= 6, got {k}")));
    }
    if l < 1 || !gkl_equation_holds(k, l) {
        return Err(param_err(format!(
            "l = {l} does not satisfy 4l = floor((3D-4)3l/(2D-2)) for D = {}",
            k + 1
        )));
    }
    let delta = k + 1;
    let (t1, t3) = (delta - 3, 4);
    let mut d = Draft::new();
    let mut iso = VertexSet::new();
    let mut irr = VertexSet::new();
    let mut designated = Vec::new();
    let mut audits = Vec::new();
    let mut chain: Vec<(usize, usize)> = Vec::new();
    for i in 1..=l {
        let x: Vec<usize> = (1..=3).map(|j| d.vertex(format!("x^{i}_{j}"))).collect();
        let y: Vec<usize> = (1..=3).map(|j| d.vertex(format!("y^{i}_{j}"))).collect();
        let k0 = d.clique(&format!("K^{{{i},0}}"), k);
        d.labels.insert(format!("z_{i}"), k0[0]);
        d.edge(x[0], x[1]);
        d.edge(x[1], x[2]);
        designated.push(k0.clone());
        for j in 0..3 {
            let kj = d.clique(&format!("K^{{{i},{}}}", j + 1), k);
            d.edge(y[j], x[j]);
            d.join(y[j], &kj);
            designated.push(kj);
            audits.push((String::new(), y[j], delta));
        }
        // K^{i,0} = 0..k-1: x_2 takes 0..k-3, x_1 takes 0..k-5 and the last
        // two, x_3 takes k-4..k-1.
        d.join(x[1], &k0[..k - 2]);
        let mut x1_side: Vec<usize> = k0[..k - 4].to_vec();
        x1_side.extend_from_slice(&k0[k - 2..]);
        d.join(x[0], &x1_side);
        d.join(x[2], &k0[k - 4..]);
        debug_assert_eq!((x1_side.len(), k0[k - 4..].len()), (t1, t3));
        for &v in &k0 {
            audits.push((String::new(), v, delta));
        }
        audits.push((String::new(), x[1], delta));
        iso.extend(y.iter().copied());
        iso.insert(k0[0]);
        irr.extend(x.iter().copied());
        chain.push((x[0], x[2]));
    }
    for i in 1..l {
        d.edge(chain[i - 1].1, chain[i].0);
    }
    for (i, &(x1, x3)) in chain.iter().enumerate() {
        let x1_deg = t1 + 2 + usize::from(i > 0);
        let x3_deg = t3 + 2 + usize::from(i + 1 < l);
        audits.push((String::new(), x1, x1_deg));
        audits.push((String::new(), x3, x3_deg));
    }
    let mut bp = Blueprint::new("Gkl", vec![("k", k), ("l", l)], delta);
    bp.derived = vec![("t1", t1), ("t3", t3)];
    bp.k = Some(k);
    bp.claimed_iota = Some(4 * l);
    bp.claimed_ir = Some(3 * l);
    bp.ir_lower_bound_paper_asserted = true;
    bp.witness_isolating = Some(iso);
    bp.witness_irredundant = Some(irr);
    bp.designated = Some(designated);
    bp.audits = audits;
    bp.finish(d)
}

/// `t` chained copies of `D(k)`: the path `x_1 x_2 x_3 x_4`, `x_1` joined to
/// `K^1`, `x_4` to `K^2`, and both `x_2`, `x_3` to `K^0`.
pub fn gen_dkt(k: usize, t: usize) -> Result<FamilyInstance> {
    if k < 1 || t < 1 {
        return Err(param_err(format!(
            "D(k,t) needs k, t >= 1, got k={k}, t={t}"
        )));
    }
    let mut d = Draft::new();
    let mut iso = VertexSet::new();
    let mut irr = VertexSet::new();
    let mut designated = Vec::new();
    let mut audits = Vec::new();
    let mut ends: Vec<(usize, usize)> = Vec::new();
    for l in 1..=t {
        let x: Vec<usize> = (1..=4).map(|j| d.vertex(format!("x^{l}_{j}"))).collect();
        for j in 0..3 {
            d.edge(x[j], x[j + 1]);
        }
        let k0 = d.clique(&format!("K^{{{l},0}}"), k);
        let k1 = d.clique(&format!("K^{{{l},1}}"), k);
        let k2 = d.clique(&format!("K^{{{l},2}}"), k);
        d.join(x[0], &k1);
        d.join(x[3], &k2);
        d.join(x[1], &k0);
        d.join(x[2], &k0);
        audits.push((String::new(), x[1], k + 2));
        audits.push((String::new(), x[2], k + 2));
        iso.extend([x[0], x[1], x[3]]);
        irr.extend([x[1], x[2]]);
        designated.extend([k0, k1, k2]);
        ends.push((x[0], x[3]));
    }
    for l in 1..t {
        d.edge(ends[l - 1].1, ends[l].0);
    }
    let mut bp = Blueprint::new("Dkt", vec![("k", k), ("t", t)], k + 2);
    bp.k = Some(k);
    bp.claimed_iota = Some(3 * t);
    bp.claimed_ir = Some(2 * t);
    bp.witness_isolating = Some(iso);
    bp.witness_irredundant = Some(irr);
    bp.designated = Some(designated);
    bp.audits = audits;
    bp.finish(d)
}

/// `c` paths `x_1 ... x_7` with chords `x_3 x_5` and links `x^i_6 x^{i+1}_2`
/// (cyclically).
pub fn gen_subcubic_h(c: usize) -> Result<FamilyInstance> {
    if c < 2 {
        return Err(param_err(format!("subcubic H needs c >= 2, got {c}")));
    }
    let mut d = Draft::new();
    let mut paths = Vec::new();
    for i in 1..=c {
        let x: Vec<usize> = (1..=7).map(|j| d.vertex(format!("x^{i}_{j}"))).collect();
        for j in 0..6 {
            d.edge(x[j], x[j + 1]);
        }
        d.edge(x[2], x[4]);
        paths.push(x);
    }
    for i in 0..c {
        d.edge(paths[i][5], paths[(i + 1) % c][1]);
    }
    let dom: VertexSet = paths.iter().flat_map(|x| [x[1], x[3], x[5]]).collect();
    let irr: VertexSet = paths.iter().flat_map(|x| [x[2], x[4]]).collect();
    let mut bp = Blueprint::new("subcubicH", vec![("c", c)], 3);
    bp.claimed_gamma = Some(3 * c);
    bp.claimed_ir = Some(2 * c);
    bp.witness_dominating = Some(dom);
    bp.witness_irredundant = Some(irr);
    bp.audits = paths
        .iter()
        .flat_map(|x| [x[1], x[2], x[4], x[5]])
        .map(|v| (String::new(), v, 3))
        .collect();
    bp.finish(d)
}

/// Three paths `c_{1i} b_{1i} a_{1i} a_{2i} b_{2i} c_{2i}` and six hubs
/// `u, v, w, x, y, z`, each joined to two `a`-vertices.
pub fn gen_five_thirds() -> Result<FamilyInstance> {
    let mut d = Draft::new();
    let mut a1 = Vec::new();
    let mut a2 = Vec::new();
    let mut b = Vec::new();
    for i in 1..=3 {
        let names = [
            format!("c_1{i}"),
            format!("b_1{i}"),
            format!("a_1{i}"),
            format!("a_2{i}"),
            format!("b_2{i}"),
            format!("c_2{i}"),
        ];
        let p: Vec<usize> = names.into_iter().map(|s| d.vertex(s)).collect();
        for j in 0..5 {
            d.edge(p[j], p[j + 1]);
        }
        a1.push(p[2]);
        a2.push(p[3]);
        b.extend([p[1], p[4]]);
    }
    let hubs: Vec<usize> = ["u", "v", "w", "x", "y", "z"]
        .iter()
        .map(|s| d.vertex(s.to_string()))
        .collect();
    let (u, v, w, x, y, z) = (hubs[0], hubs[1], hubs[2], hubs[3], hubs[4], hubs[5]);
    for (h, t) in [
        (u, a1[0]),
        (u, a1[1]),
        (v, a2[0]),
        (v, a2[1]),
        (w, a1[0]),
        (w, a1[2]),
        (x, a1[1]),
        (x, a1[2]),
        (y, a2[0]),
        (y, a2[2]),
        (z, a2[1]),
        (z, a2[2]),
    ] {
        d.edge(h, t);
    }
    let irr: VertexSet = a1.iter().chain(&a2).copied().collect();
    let mut dom: VertexSet = b.iter().copied().collect();
    dom.extend([a2[0], a1[2], u, z]);
    let mut bp = Blueprint::new("fivethirds", vec![], 4);
    bp.claimed_gamma = Some(10);
    bp.claimed_ir = Some(6);
    bp.witness_irredundant = Some(irr);
    bp.witness_dominating = Some(dom);
    bp.audits = a1
        .iter()
        .chain(&a2)
        .map(|&a| (String::new(), a, 4))
        .collect();
    bp.finish(d)
}

/// Vertex handles of one copy of `S(k)` inside a larger draft.
struct SCopy {
    x: Vec<usize>,
    cliques: Vec<Vec<usize>>,
}

fn add_s_copy(d: &mut Draft, k: usize, tag: &str) -> SCopy {
    let name = |j: usize| {
        if tag.is_empty() {
            format!("x_{j}")
        } else {
            format!("x^{tag}_{j}")
        }
    };
    let clique_name = |j: usize| {
        if tag.is_empty() {
            format!("K^{j}")
        } else {
            format!("K^{{{tag},{j}}}")
        }
    };
    let x: Vec<usize> = (1..=8).map(|j| d.vertex(name(j))).collect();
    for j in [0, 1, 2, 4, 5, 6] {
        d.edge(x[j], x[j + 1]);
    }
    let cliques: Vec<Vec<usize>> = (0..5).map(|j| d.clique(&clique_name(j), k)).collect();
    for (j, &xi) in [x[0], x[3], x[4], x[7]].iter().enumerate() {
        d.join(xi, &cliques[j + 1]);
    }
    let z = &cliques[0];
    d.join(x[1], &z[..k - 1]);
    d.join(x[2], &z[1..]);
    d.edge(x[5], z[0]);
    d.edge(x[5], z[k - 1]);
    SCopy { x, cliques }
}

/// `S(k)`: paths `x_1..x_4`, `x_5..x_8`, cliques `K^1..K^4` hanging from
/// `x_1, x_4, x_5, x_8`, and `K^0 = {z_1..z_k}` seen by `x_2` (all but
/// `z_k`), `x_3` (all but `z_1`) and `x_6` (`z_1`, `z_k`).
pub fn gen_sk(k: usize) -> Result<FamilyInstance> {
    if k < 2 {
        return Err(param_err(format!("S(k) needs k >= 2, got {k}")));
    }
    let mut d = Draft::new();
    let s = add_s_copy(&mut d, k, "");
    let mut bp = Blueprint::new("Sk", vec![("k", k)], k + 1);
    bp.k = Some(k);
    bp.audits = vec![
        (String::new(), s.x[1], k + 1),
        (String::new(), s.x[2], k + 1),
        (String::new(), s.x[5], 4),
        (String::new(), s.x[6], 2),
    ];
    bp.finish(d)
}

/// Vertex handles of the `F(k, s)` part.
struct FPart {
    a: Vec<usize>,
    k_prime: Vec<usize>,
    k_double_prime: Vec<usize>,
    tilde: Vec<Vec<usize>>,
}

fn add_f_part(d: &mut Draft, k: usize, s: usize) -> FPart {
    let a: Vec<usize> = (1..=4).map(|j| d.vertex(format!("a_{j}"))).collect();
    for j in 0..3 {
        d.edge(a[j], a[j + 1]);
    }
    let k_prime = d.clique("K'", k);
    let k_double_prime = d.clique("K''", k);
    let tilde: Vec<Vec<usize>> = (1..=s).map(|i| d.clique(&format!("Kt^{i}"), k)).collect();
    d.join(a[0], &k_prime);
    d.join(a[3], &k_double_prime);
    // a_2 and a_3 share exactly vertex 1 of the first tilde clique.
    d.join(a[1], &tilde[0][..2]);
    d.join(a[2], &tilde[0][1..]);
    for t in &tilde[1..] {
        d.edge(a[1], t[0]);
    }
    FPart {
        a,
        k_prime,
        k_double_prime,
        tilde,
    }
}

fn check_fks(k: usize, s: usize) -> Result<()> {
    if k < 3 || s < 1 {
        return Err(param_err(format!(
            "F(k,s) needs k >= 3 and s >= 1, got k={k}, s={s}"
        )));
    }
    // deg(a_2) = s + 3 must not exceed Δ = k + 1.
    if s + 2 > k {
        return Err(param_err(format!(
            "F(k,s) needs s <= k - 2 to keep deg(a_2) <= k + 1, got k={k}, s={s}"
        )));
    }
    Ok(())
}

/// `F(k, s)`: the path `a_1..a_4`, cliques `K′`, `K″` on `a_1`, `a_4`, and
/// `K̃^1..K̃^s`. `a_2` sees two vertices of `K̃^1` and one of each other
/// `K̃^i`; `a_3` sees `Δ - 2` vertices of `K̃^1`, one of them shared.
pub fn gen_fks(k: usize, s: usize) -> Result<FamilyInstance> {
    check_fks(k, s)?;
    let mut d = Draft::new();
    let f = add_f_part(&mut d, k, s);
    let delta = k + 1;
    let mut bp = Blueprint::new("Fks", vec![("k", k), ("s", s)], delta);
    bp.k = Some(k);
    bp.audits = f.tilde[0]
        .iter()
        .enumerate()
        .map(|(m, &v)| (String::new(), v, if m == 1 { delta } else { delta - 1 }))
        .collect();
    bp.audits.push((String::new(), f.a[1], s + 3));
    bp.audits.push((String::new(), f.a[2], delta));
    bp.finish(d)
}

/// `l` and `r` with `(s-1)(2k-1) = (2Δ-6)(l-1) + r`, `0 <= r < 2Δ-6`, and
/// `r′ = min(r, Δ-4)`.
pub fn hksl_parameters(k: usize, s: usize) -> Result<(usize, usize, usize)> {
    let delta = k + 1;
    if delta < 4 {
        return Err(param_err(format!("H(k,s,l) needs k >= 3, got {k}")));
    }
    let lhs = (s - 1) * (2 * k - 1);
    let step = 2 * delta - 6;
    let (l, r) = (lhs / step + 1, lhs % step);
    Ok((l, r, r.min(delta - 4)))
}

/// `H(k, s, l)`: one `F(k, s)` and `l` copies of `S(k)`, with `l` from the
/// division above. `x^l_7` takes the `k - 1` vertices of `K̃^1` of degree
/// `Δ - 1`; the remaining link vertices `x^1_6, x^1_7, ..., x^l_6` take
/// `Δ - 4`, `Δ - 2`, ..., `r′` vertices of `L₁ = K̃^2 ∪ ... ∪ K̃^s` in a
/// round-robin sweep that skips vertices already holding two such edges.
pub fn gen_hksl(k: usize, s: usize) -> Result<FamilyInstance> {
    check_fks(k, s)?;
    if s < 2 {
        return Err(param_err(format!("H(k,s,l) needs s >= 2, got {s}")));
    }
    let delta = k + 1;
    let (l, r, r_prime) = hksl_parameters(k, s)?;
    let lhs = (s - 1) + (2 * delta - 6) * (l - 1) + r_prime;
    if lhs > 2 * (s - 1) * k {
        return Err(param_err(format!(
            "edge budget {lhs} exceeds the capacity {} of L1",
            2 * (s - 1) * k
        )));
    }

    let mut d = Draft::new();
    let f = add_f_part(&mut d, k, s);
    let copies: Vec<SCopy> = (1..=l)
        .map(|i| add_s_copy(&mut d, k, &i.to_string()))
        .collect();

    // x^l_7 to the degree-(Δ-1) vertices of K̃^1.
    let x_l7 = copies[l - 1].x[6];
    let low: Vec<usize> = f.tilde[0]
        .iter()
        .copied()
        .filter(|&v| d.degree(v) == delta - 1)
        .collect();
    debug_assert_eq!(low.len(), k - 1);
    d.join(x_l7, &low);

    let l1: Vec<usize> = f.tilde[1..].iter().flatten().copied().collect();
    let mut load: BTreeMap<usize, usize> = l1.iter().map(|&v| (v, 0)).collect();
    for t in &f.tilde[1..] {
        *load.get_mut(&t[0]).expect("in L1") += 1;
    }
    let mut demands: Vec<(usize, usize)> = Vec::new();
    for c in &copies[..l - 1] {
        demands.push((c.x[5], delta - 4));
        demands.push((c.x[6], delta - 2));
    }
    demands.push((copies[l - 1].x[5], r_prime));

    let mut cursor = 0;
    for (src, quota) in demands {
        let mut placed = 0;
        let mut scanned = 0;
        while placed < quota {
            if scanned == l1.len() {
                return Err(param_err(format!(
                    "round-robin wiring stalls: vertex {src} still needs {} edges",
                    quota - placed
                )));
            }
            let v = l1[cursor];
            cursor = (cursor + 1) % l1.len();
            scanned += 1;
            let lv = load.get_mut(&v).expect("in L1");
            if *lv < 2 && !d.adj[src].contains(v) {
                d.edge(src, v);
                *lv += 1;
                placed += 1;
                scanned = 0;
            }
        }
    }

    let mut iso = VertexSet::new();
    iso.extend([f.a[1], f.a[0], f.a[3]]);
    let mut irr = VertexSet::new();
    irr.extend([f.a[1], f.a[2]]);
    let mut designated = vec![
        f.k_prime.clone(),
        f.k_double_prime.clone(),
        f.tilde[0].clone(),
    ];
    let mut audits = Vec::new();
    for (i, c) in copies.iter().enumerate() {
        iso.extend([c.x[1], c.x[0], c.x[3], c.x[4], c.x[7]]);
        irr.extend([c.x[1], c.x[2], c.x[5], c.x[6]]);
        designated.extend(c.cliques.iter().cloned());
        audits.push((String::new(), c.x[1], delta));
        audits.push((String::new(), c.x[2], delta));
        let last = i + 1 == l;
        audits.push((
            String::new(),
            c.x[5],
            if last { 4 + r_prime } else { delta },
        ));
        audits.push((String::new(), c.x[6], delta));
    }
    for &v in &f.tilde[0] {
        audits.push((String::new(), v, delta));
    }
    audits.push((String::new(), f.a[1], s + 3));
    audits.push((String::new(), f.a[2], delta));
    for &v in &l1 {
        audits.push((String::new(), v, k - 1 + load[&v]));
    }

    let mut bp = Blueprint::new("Hksl", vec![("k", k), ("s", s)], delta);
    bp.derived = vec![("l", l), ("r", r), ("r_prime", r_prime)];
    bp.k = Some(k);
    bp.claimed_iota = Some(3 + 5 * l);
    bp.claimed_ir = Some(2 + 4 * l);
    bp.ir_lower_bound_paper_asserted = true;
    bp.witness_isolating = Some(iso);
    bp.witness_irredundant = Some(irr);
    bp.designated = Some(designated);
    bp.audits = audits;
    let inst = bp.finish(d)?;
    if let Some(&v) = l1.iter().find(|&&v| load[&v] > 2) {
        return Err(param_err(format!(
            "L1 vertex {v} received more than two link edges"
        )));
    }
    Ok(inst)
}

/// Family names accepted by [`generate`].
pub const FAMILY_NAMES: [&str; 9] = [
    "G1",
    "G2",
    "Gkl",
    "Dkt",
    "subcubicH",
    "fivethirds",
    "Sk",
    "Fks",
    "Hksl",
];

/// Dispatches on a family name with its integer parameters in order.
pub fn generate(name: &str, params: &[usize]) -> Result<FamilyInstance> {
    let need = |m: usize| {
        if params.len() == m {
            Ok(())
        } else {
            Err(param_err(format!(
                "{name} takes {m} parameter(s), got {}",
                params.len()
            )))
        }
    };
    match name {
        "G1" => need(2).and_then(|_| gen_g1(params[0], params[1])),
        "G2" => need(2).and_then(|_| gen_g2(params[0], params[1])),
        "Gkl" => need(2).and_then(|_| gen_gkl(params[0], params[1])),
        "Dkt" => need(2).and_then(|_| gen_dkt(params[0], params[1])),
        "subcubicH" => need(1).and_then(|_| gen_subcubic_h(params[0])),
        "fivethirds" => need(0).and_then(|_| gen_five_thirds()),
        "Sk" => need(1).and_then(|_| gen_sk(params[0])),
        "Fks" => need(2).and_then(|_| gen_fks(params[0], params[1])),
        "Hksl" => need(2).and_then(|_| gen_hksl(params[0], params[1])),
        _ => Err(param_err(format!(
            "unknown family {name:?}; expected one of {}",
            FAMILY_NAMES.join(", ")
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(gen_g1(2, 3).unwrap().graph.n(), 6);
        assert_eq!(gen_g2(1, 2).unwrap().graph.n(), 6);
        assert_eq!(gen_g2(1, 3).unwrap().graph.n(), 8);
        assert_eq!(gen_dkt(1, 1).unwrap().graph.n(), 7);
        assert_eq!(gen_dkt(2, 1).unwrap().graph.n(), 10);
        assert_eq!(gen_dkt(1, 2).unwrap().graph.n(), 14);
        assert_eq!(gen_subcubic_h(2).unwrap().graph.n(), 14);
        assert_eq!(gen_five_thirds().unwrap().graph.n(), 24);
        assert_eq!(gen_gkl(6, 3).unwrap().graph.n(), 90);
    }

    #[test]
    fn gkl_equation() {
        assert!(gkl_equation_holds(6, 1));
        assert!(gkl_equation_holds(6, 2));
        assert!(gkl_equation_holds(6, 3));
        assert!(!gkl_equation_holds(6, 4));
        assert!(gen_gkl(6, 4).is_err());
        assert!(gen_gkl(5, 1).is_err());
    }

    #[test]
    fn hksl_arithmetic() {
        assert_eq!(hksl_parameters(8, 6).unwrap(), (7, 3, 3));
        assert!(gen_hksl(2, 2).is_err());
        assert!(gen_fks(8, 7).is_err());
    }

    #[test]
    fn every_generator_checks() {
        let all = [
            gen_g1(3, 4),
            gen_g2(2, 3),
            gen_gkl(6, 3),
            gen_gkl(7, 1),
            gen_dkt(2, 2),
            gen_subcubic_h(4),
            gen_five_thirds(),
            gen_sk(8),
            gen_fks(8, 6),
            gen_hksl(8, 6),
            gen_hksl(5, 3),
        ];
        for inst in all {
            let inst = inst.unwrap();
            check_instance(&inst).unwrap_or_else(|e| panic!("{}: {e}", inst.name));
        }
    }

    #[test]
    fn dispatch() {
        assert_eq!(generate("G1", &[2, 3]).unwrap().graph.n(), 6);
        assert!(generate("G1", &[2]).is_err());
        assert!(generate("nope", &[]).is_err());
    }
}
