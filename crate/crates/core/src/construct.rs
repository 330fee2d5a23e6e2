//! Certified `k`-isolating sets built from a maximal irredundant set, and
//! the bounds they are measured against.
//!
//! Four regimes are covered, `k` from `Δ - 2` to `Δ + 1`. Each bound holds
//! with `|I|` in place of ir for every maximal irredundant `I`, so the
//! construction is checked against `|I|` directly.

use std::collections::BTreeMap;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{
    compute_partition_with, lowest, refine_thm2, refine_thm3, BocoPartition, SharedReading,
    Thm2Refinement, Thm3Refinement,
};
use crate::props::{is_k_isolating, is_maximal_irredundant};
use crate::solve::{iota_lower_bound, PackingCertificate};
use crate::vset::VertexSet;

pub type Rational = Ratio<i64>;

/// Serializes a rational as `"a/b"`, or `"a"` when integral.
pub fn ratio_string<S: Serializer>(r: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_str(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Regime {
    /// `Δ ≤ 1`: a matching plus isolated vertices.
    LowDegree,
    /// `k = Δ + 1`.
    AboveDelta,
    /// `k = Δ`.
    AtDelta,
    /// `k = Δ - 1`.
    DeltaMinusOne,
    /// `k = Δ - 2`.
    DeltaMinusTwo,
}

impl Regime {
    pub fn of(k: usize, delta: usize) -> Result<Regime> {
        if k == 0 {
            return Err(Error::ZeroCliqueSize);
        }
        let r = if delta <= 1 && k <= delta + 1 {
            Regime::LowDegree
        } else if k == delta + 1 {
            Regime::AboveDelta
        } else if k == delta {
            Regime::AtDelta
        } else if k + 1 == delta {
            Regime::DeltaMinusOne
        } else if k + 2 == delta {
            Regime::DeltaMinusTwo
        } else {
            return Err(Error::Regime {
                k,
                delta,
                reason: "k must lie between Δ - 2 and Δ + 1",
            });
        };
        Ok(r)
    }

    /// The `k` values covered for a graph of maximum degree `delta`.
    pub fn applicable_ks(delta: usize) -> std::ops::RangeInclusive<usize> {
        delta.saturating_sub(2).max(1)..=delta + 1
    }
}

/// Upper bound on ι_k in terms of `ir` (or `|I|` for any maximal
/// irredundant `I`). For `k = Δ - 1`, `s = None` gives the plain bound
/// `(3Δ-4)ir/(2Δ-2)`; `Some(s)` gives the refined one.
pub fn theorem_bound(k: usize, delta: usize, ir: usize, s: Option<usize>) -> Result<Rational> {
    let ir = Rational::from_integer(ir as i64);
    match Regime::of(k, delta)? {
        Regime::LowDegree | Regime::AboveDelta | Regime::AtDelta => Ok(ir),
        Regime::DeltaMinusOne => {
            let d = delta as i64;
            let base = ir * Rational::new(3 * d - 4, 2 * d - 2);
            match s {
                None => Ok(base),
                Some(0) => Ok(ir),
                Some(s) if s + 2 <= delta => Ok(base - Rational::from_integer(s as i64 - 1)),
                Some(s) => Err(Error::Parameter(format!(
                    "s = {s} exceeds Δ - 2 = {}",
                    delta - 2
                ))),
            }
        }
        Regime::DeltaMinusTwo => Ok(ir * Rational::new(3, 2)),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub regime: Regime,
    pub k: usize,
    pub delta: usize,
    pub input_i: VertexSet,
    pub t: VertexSet,
    pub size: usize,
    #[serde(serialize_with = "ratio_string")]
    pub bound: Rational,
    /// `|T| ≤ bound`, compared exactly.
    pub satisfied: bool,
    /// `T` is `k`-isolating.
    pub isolating_verified: bool,
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub packing: Option<PackingCertificate>,
}

impl BoundCertificate {
    /// Attaches a greedy packing lower bound on ι_k.
    pub fn attach_packing(&mut self, g: &Graph) -> Result<()> {
        self.packing = Some(iota_lower_bound(g, self.k, None)?.1);
        Ok(())
    }
}

/// A certificate together with the intermediate structures behind it.
#[derive(Clone, Debug, Serialize)]
pub struct Construction {
    pub certificate: BoundCertificate,
    pub partition: Option<BocoPartition>,
    pub thm2: Option<Thm2Refinement>,
    pub thm3: Option<Thm3Refinement>,
}

pub fn build_isolating_set(g: &Graph, i: &VertexSet, k: usize) -> Result<BoundCertificate> {
    Ok(construct(g, i, k, SharedReading::default(), lowest)?.certificate)
}

/// Runs the construction for the regime of `(k, Δ)`, with the given
/// reading of `S′` and representative rule.
pub fn construct<F>(
    g: &Graph,
    i: &VertexSet,
    k: usize,
    reading: SharedReading,
    pick: F,
) -> Result<Construction>
where
    F: FnMut(usize, &VertexSet) -> usize,
{
    g.check_set(i)?;
    let delta = g.max_degree();
    let regime = Regime::of(k, delta)?;
    if !is_maximal_irredundant(g, i) {
        return Err(Error::Precondition(format!(
            "{{{i}}} is not a maximal irredundant set"
        )));
    }
    let mut partition = None;
    let mut thm2 = None;
    let mut thm3 = None;
    let mut s = None;
    let t = match regime {
        Regime::LowDegree => {
            let comps = g.components();
            match k {
                1 => comps.iter().filter_map(|c| c.first()).collect(),
                _ => comps
                    .iter()
                    .filter(|c| c.len() == k && g.is_clique(c))
                    .filter_map(|c| c.first())
                    .collect(),
            }
        }
        Regime::AboveDelta => g
            .components()
            .iter()
            .filter(|c| c.len() == k && g.is_clique(c))
            .filter_map(|c| c.first())
            .collect(),
        Regime::AtDelta => {
            let p = compute_partition_with(g, i, pick)?;
            let t = p.representatives | p.unclosed | p.unabsorbed | p.isolated;
            partition = Some(p);
            t
        }
        Regime::DeltaMinusOne => {
            let p = compute_partition_with(g, i, pick)?;
            let r = refine_thm2(g, &p, k, reading)?;
            s = Some(r.s);
            let t = r.t;
            partition = Some(p);
            thm2 = Some(r);
            t
        }
        Regime::DeltaMinusTwo => {
            let p = compute_partition_with(g, i, pick)?;
            let r = refine_thm3(g, &p, k)?;
            let t = r.t;
            partition = Some(p);
            thm3 = Some(r);
            t
        }
    };
    let bound = theorem_bound(k, delta, i.len(), s)?;
    let certificate = BoundCertificate {
        regime,
        k,
        delta,
        input_i: *i,
        t,
        size: t.len(),
        bound,
        satisfied: Rational::from_integer(t.len() as i64) <= bound,
        isolating_verified: is_k_isolating(g, &t, k),
        s,
        packing: None,
    };
    Ok(Construction {
        certificate,
        partition,
        thm2,
        thm3,
    })
}

/// Exact invariants of one graph, as consumed by [`survey_ratios`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantRecord {
    pub graph6: String,
    pub delta: usize,
    pub gamma: usize,
    pub ir: usize,
    /// `iota[k - 1]` is ι_k for `k = 1..=Δ + 1`.
    pub iota: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RatioRow {
    pub delta: usize,
    pub k: usize,
    #[serde(serialize_with = "ratio_string")]
    pub max_ratio: Rational,
    /// First graph attaining the maximum, in input order.
    pub witness: String,
    pub graphs: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Monotonicity {
    pub delta: usize,
    /// Empirical maxima for `k = 1, 2, ...` as strings.
    pub sequence: Vec<String>,
    pub strictly_decreasing: bool,
    pub non_increasing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyTable {
    pub rows: Vec<RatioRow>,
    pub monotonicity: Vec<Monotonicity>,
}

impl SurveyTable {
    pub fn get(&self, delta: usize, k: usize) -> Option<&RatioRow> {
        self.rows.iter().find(|r| r.delta == delta && r.k == k)
    }
}

/// Maximum ι_k/ir per `(Δ, k)`, where `k = 1` is γ/ir. Graphs with
/// `ir = 0` (the empty graph) are skipped. The sequence over `k` is reported,
/// not judged.
pub fn survey_ratios(results: &[InvariantRecord]) -> SurveyTable {
    let mut best: BTreeMap<(usize, usize), RatioRow> = BTreeMap::new();
    for rec in results.iter().filter(|r| r.ir > 0) {
        for (idx, &value) in rec.iota.iter().enumerate() {
            let k = idx + 1;
            let value = if k == 1 { rec.gamma } else { value };
            let ratio = Rational::new(value as i64, rec.ir as i64);
            best.entry((rec.delta, k))
                .and_modify(|row| {
                    row.graphs += 1;
                    if ratio > row.max_ratio {
                        row.max_ratio = ratio;
                        row.witness = rec.graph6.clone();
                    }
                })
                .or_insert_with(|| RatioRow {
                    delta: rec.delta,
                    k,
                    max_ratio: ratio,
                    witness: rec.graph6.clone(),
                    graphs: 1,
                });
        }
    }
    let rows: Vec<RatioRow> = best.into_values().collect();
    let mut monotonicity = Vec::new();
    let mut deltas: Vec<usize> = rows.iter().map(|r| r.delta).collect();
    deltas.dedup();
    for delta in deltas {
        let seq: Vec<Rational> = rows
            .iter()
            .filter(|r| r.delta == delta)
            .map(|r| r.max_ratio)
            .collect();
        monotonicity.push(Monotonicity {
            delta,
            sequence: seq.iter().map(|r| r.to_string()).collect(),
            strictly_decreasing: seq.windows(2).all(|w| w[0] > w[1]),
            non_increasing: seq.windows(2).all(|w| w[0] >= w[1]),
        });
    }
    SurveyTable { rows, monotonicity }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn bounds() {
        assert_eq!(
            theorem_bound(5, 5, 7, None).unwrap(),
            Rational::from_integer(7)
        );
        assert_eq!(theorem_bound(6, 7, 9, None).unwrap(), Rational::new(51, 4));
        assert_eq!(
            theorem_bound(6, 7, 9, Some(1)).unwrap(),
            Rational::new(51, 4)
        );
        assert_eq!(
            theorem_bound(6, 7, 9, Some(0)).unwrap(),
            Rational::from_integer(9)
        );
        assert_eq!(
            theorem_bound(6, 7, 9, Some(3)).unwrap(),
            Rational::new(43, 4)
        );
        assert!(theorem_bound(6, 7, 9, Some(6)).is_err());
        assert_eq!(
            theorem_bound(1, 3, 4, None).unwrap(),
            Rational::from_integer(6)
        );
        assert!(matches!(
            theorem_bound(1, 4, 4, None),
            Err(Error::Regime { .. })
        ));
        assert!(matches!(
            theorem_bound(7, 5, 4, None),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn clique_components() {
        let c = build_isolating_set(&Graph::complete(4), &set(&[0]), 4).unwrap();
        assert_eq!(c.regime, Regime::AboveDelta);
        assert_eq!(c.t, set(&[0]));
        assert!(c.satisfied && c.isolating_verified);

        let c = build_isolating_set(&Graph::complete(5), &set(&[0]), 4).unwrap();
        assert_eq!(c.regime, Regime::AtDelta);
        assert_eq!(c.t, set(&[0]));
        assert!(c.satisfied && c.isolating_verified);
    }

    #[test]
    fn low_degree() {
        let g = Graph::from_edges(5, &[(0, 1), (2, 3)]).unwrap();
        let i = set(&[0, 2, 4]);
        let c = build_isolating_set(&g, &i, 1).unwrap();
        assert_eq!((c.regime, c.t), (Regime::LowDegree, set(&[0, 2, 4])));
        let c = build_isolating_set(&g, &i, 2).unwrap();
        assert_eq!(c.t, set(&[0, 2]));
        assert!(c.satisfied && c.isolating_verified);
    }

    #[test]
    fn preconditions() {
        let g = Graph::cycle(6);
        assert!(matches!(
            build_isolating_set(&g, &set(&[0]), 2),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            build_isolating_set(&g, &set(&[0, 3]), 4),
            Err(Error::Regime { .. })
        ));
    }

    #[test]
    fn survey_basics() {
        let recs = vec![
            InvariantRecord {
                graph6: "a".into(),
                delta: 2,
                gamma: 2,
                ir: 2,
                iota: vec![2, 1, 0],
            },
            InvariantRecord {
                graph6: "b".into(),
                delta: 2,
                gamma: 3,
                ir: 2,
                iota: vec![3, 1, 1],
            },
        ];
        let t = survey_ratios(&recs);
        let row = t.get(2, 1).unwrap();
        assert_eq!(
            (row.max_ratio, row.witness.as_str(), row.graphs),
            (Rational::new(3, 2), "b", 2)
        );
        assert_eq!(t.monotonicity[0].sequence, vec!["3/2", "1/2", "1/2"]);
        assert!(!t.monotonicity[0].strictly_decreasing && t.monotonicity[0].non_increasing);
    }
}
