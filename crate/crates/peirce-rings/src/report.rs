//! Whole-ring analysis: decomposition plus radicals plus expectation
//! checks, rendered as deterministic JSON (sorted keys) or as a text block
//! display of the generalized matrix representation.

use crate::corner::corner_ring;
use crate::error::RingError;
use crate::gallery::{ExpectedFact, Expectation, Provenance};
use crate::peirce::{
    classify_peirce, complete_one_peirce_set, complete_one_peirce_set_seeded, d_minus,
    idempotent_elements, peirce_dimension, Dimension, NamedCheck, PeirceReport,
};
use crate::radical::{b_dimension, radical_report, radical_trivial, RadicalMethod, RadicalReport};
use crate::ring::{Element, FiniteRing};
use crate::subgroup::{Nilpotency, Subgroup};
use crate::Caps;
use serde_json::{json, Value};

/// Combined analysis of one ring.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub name: String,
    pub size: u128,
    pub peirce: PeirceReport,
    pub radicals: RadicalReport,
    /// Merged named checks: structural contracts plus gallery expectations.
    pub checks: Vec<NamedCheck>,
    /// True when every check passed.
    pub all_checks_pass: bool,
}

/// Runs the full pipeline.  `expectations` are evaluated and appended to
/// the checks; the seed drives the randomized-restart stability probe.
pub fn analyze_ring(
    ring: &FiniteRing,
    caps: &Caps,
    expectations: &[Expectation],
    seed: u64,
) -> Result<AnalysisReport, RingError> {
    let axioms = ring.verify_axioms();
    if !axioms.is_ok() {
        return Err(RingError::Structure(format!(
            "the input does not satisfy the ring axioms: {} associativity, {} identity, {} \
             torsion violations",
            axioms.associativity_violations.len(),
            axioms.identity_violations.len(),
            axioms.torsion_violations.len()
        )));
    }
    let peirce = complete_one_peirce_set(ring, caps)?;
    let cached: Option<&[Element]> = if peirce.idempotent_set.len() > 1 {
        Some(&peirce.idempotent_set)
    } else {
        None
    };
    let radicals = radical_report(ring, caps, cached)?;

    let mut checks = peirce.checks.clone();
    checks.extend(radicals.checks.clone());

    if peirce.idempotent_set.len() > 1 {
        let restart = complete_one_peirce_set_seeded(ring, caps, seed)?;
        let stable = match (&peirce.d_minus, &restart.d_minus) {
            (Some((a, _)), Some((b, _))) => a == b,
            _ => false,
        };
        checks.push(NamedCheck {
            name: "D(R)⁻ unchanged under a randomized decomposition restart".into(),
            pass: stable,
        });
    }

    for expectation in expectations {
        let pass = evaluate_expectation(ring, caps, &expectation.check)?;
        let tag = match expectation.provenance {
            Provenance::Literature => "literature",
            Provenance::Independent => "independent",
        };
        checks.push(NamedCheck {
            name: format!("[{tag}] {}", expectation.name),
            pass,
        });
    }

    let all = checks.iter().all(|c| c.pass);
    Ok(AnalysisReport {
        name: ring.name().to_string(),
        size: ring.size(),
        peirce,
        radicals,
        checks,
        all_checks_pass: all,
    })
}

/// Evaluates one expected fact against the engine.
pub fn evaluate_expectation(
    ring: &FiniteRing,
    caps: &Caps,
    fact: &ExpectedFact,
) -> Result<bool, RingError> {
    Ok(match fact {
        ExpectedFact::SizeIs(s) => ring.size() == *s,
        ExpectedFact::PeirceDimensionIs(n) => {
            peirce_dimension(ring, caps)?.0 == Dimension::Finite(*n)
        }
        ExpectedFact::CornerDimension {
            idempotent,
            dimension,
        } => {
            let corner = corner_ring(ring, idempotent)?;
            peirce_dimension(&corner.ring, caps)?.0 == Dimension::Finite(*dimension)
        }
        ExpectedFact::SplitsAs { idempotent, parts } => {
            let mut sum = ring.zero();
            let mut ok = true;
            for p in parts {
                ok &= ring.is_idempotent(p);
                sum = ring.add(&sum, p);
            }
            for (i, p) in parts.iter().enumerate() {
                for (j, q) in parts.iter().enumerate() {
                    if i != j {
                        ok &= ring.is_zero(&ring.mul(p, q));
                    }
                }
            }
            ok && sum == *idempotent
        }
        ExpectedFact::NoPeirceTrivialWithCornerDimension(d) => {
            let idems = idempotent_elements(ring, caps.enum_cap)?;
            let mut ok = true;
            for e in idems {
                if !classify_peirce(ring, &e)?.is_trivial() {
                    continue;
                }
                let corner = corner_ring(ring, &e)?;
                if peirce_dimension(&corner.ring, caps)?.0 == Dimension::Finite(*d) {
                    ok = false;
                    break;
                }
            }
            ok
        }
        ExpectedFact::BTrivialNotPeirceTrivial { idempotent } => {
            let rr = radical_report(ring, caps, None)?;
            radical_trivial(ring, idempotent, &rr.prime_radical)?
                && !classify_peirce(ring, idempotent)?.is_trivial()
        }
        ExpectedFact::BDimensionIs(n) => {
            let rep = b_dimension(ring, caps)?;
            rep.dimension == Dimension::Finite(*n) && rep.consistent
        }
        ExpectedFact::DyadicChainIs(partitions) => {
            let rep = complete_one_peirce_set(ring, caps)?;
            rep.partitions == *partitions
        }
        ExpectedFact::IdempotentCountIs(count) => {
            idempotent_elements(ring, caps.enum_cap)?.len() as u64 == *count
        }
    })
}

fn dimension_json(d: Dimension) -> Value {
    match d {
        Dimension::Finite(n) => json!(n),
        Dimension::ExceedsCap => json!("exceeds cap"),
    }
}

fn nilpotency_json(n: Nilpotency) -> Value {
    match n {
        Nilpotency::Index(t) => json!(t),
        Nilpotency::ExceedsCap => json!("exceeds cap"),
    }
}

fn subgroup_json(ring: &FiniteRing, s: &Subgroup) -> Value {
    json!({
        "size": s.size() as u64,
        "generators": s
            .nonzero_generators(ring)
            .iter()
            .map(|g| g.coords.clone())
            .collect::<Vec<_>>(),
    })
}

fn method_name(m: RadicalMethod) -> &'static str {
    match m {
        RadicalMethod::Oracle => "oracle",
        RadicalMethod::QuotientStructural => "quotient-structural",
        RadicalMethod::PeirceStructural => "peirce-structural",
        RadicalMethod::JacobsonFallback => "jacobson-fallback",
    }
}

/// JSON document for a report.  serde_json orders object keys, so the
/// output is byte-deterministic for identical inputs.
pub fn report_json(ring: &FiniteRing, report: &AnalysisReport, caps: &Caps) -> Value {
    let corners: Vec<Value> = report
        .peirce
        .corner_sizes
        .iter()
        .map(|&s| json!({"size": s as u64, "dimension": 1}))
        .collect();
    let d_minus_json = match &report.peirce.d_minus {
        Some((sub, nilp)) => json!({
            "generators": sub
                .nonzero_generators(ring)
                .iter()
                .map(|g| g.coords.clone())
                .collect::<Vec<_>>(),
            "nilpotency_index": nilpotency_json(*nilp),
        }),
        None => Value::Null,
    };
    let _ = caps;
    json!({
        "name": report.name,
        "size": report.size as u64,
        "dimension": dimension_json(report.peirce.dimension),
        "idempotents": report
            .peirce
            .idempotent_set
            .iter()
            .map(|e| e.coords.clone())
            .collect::<Vec<_>>(),
        "dyadic_chain": report.peirce.partitions,
        "d_minus": d_minus_json,
        "corners": corners,
        "radicals": {
            "J": subgroup_json(ring, &report.radicals.jacobson),
            "B": subgroup_json(ring, &report.radicals.prime_radical),
            "method": method_name(report.radicals.jacobson_method),
            "prime_method": method_name(report.radicals.prime_method),
            "j_nilpotency_index": nilpotency_json(report.radicals.j_nilpotency),
            "semisimple_quotient_size": report.radicals.semisimple_quotient.size() as u64,
        },
        "checks": report
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass}))
            .collect::<Vec<_>>(),
    })
}

/// Text rendering: summary lines plus the block display of the generalized
/// matrix representation over the complete orthogonal set.
pub fn report_text(ring: &FiniteRing, report: &AnalysisReport) -> String {
    let mut out = String::new();
    let fmt_size = |s: u128| -> String {
        if s.is_power_of_two() && s > 1 {
            format!("{s} = 2^{}", s.trailing_zeros())
        } else {
            format!("{s}")
        }
    };
    out.push_str(&format!(
        "ring {}  |R| = {}\n",
        report.name,
        fmt_size(report.size)
    ));
    out.push_str(&format!("Peirce dimension: {}\n", report.peirce.dimension));

    let set = &report.peirce.idempotent_set;
    let n = set.len();
    if n > 0 {
        out.push_str(&format!(
            "complete set of {n} orthogonal idempotent(s) with 1-Peirce corners:\n"
        ));
        for (i, e) in set.iter().enumerate() {
            out.push_str(&format!("  e_{} = {}\n", i + 1, ring.format_element(e)));
        }
        if n > 1 {
            out.push_str("dyadic chain:\n");
            for partition in &report.peirce.partitions {
                let blocks: Vec<String> = partition
                    .iter()
                    .map(|b| {
                        format!(
                            "{{{}}}",
                            b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                        )
                    })
                    .collect();
                out.push_str(&format!("  {}\n", blocks.join(" ")));
            }
        }
        // Block matrix of the generalized matrix representation.
        out.push_str("generalized matrix representation (block sizes):\n");
        let mut zero_pairs: Vec<String> = Vec::new();
        for (i, ei) in set.iter().enumerate() {
            let mut row = String::from("  [ ");
            for (j, ej) in set.iter().enumerate() {
                if i == j {
                    row.push_str(&format!("R_{}(|{}|)", i + 1, report.peirce.corner_sizes[i]));
                } else {
                    let gens: Vec<Element> = (0..ring.rank())
                        .map(|t| ring.mul(&ring.mul(ei, &ring.basis_element(t)), ej))
                        .collect();
                    let m_ij = Subgroup::span(ring, &gens);
                    row.push_str(&format!("M_{}{}(|{}|)", i + 1, j + 1, m_ij.size()));
                    if i < j {
                        let back: Vec<Element> = (0..ring.rank())
                            .map(|t| ring.mul(&ring.mul(ej, &ring.basis_element(t)), ei))
                            .collect();
                        let m_ji = Subgroup::span(ring, &back);
                        if m_ij.product(ring, &m_ji).is_zero()
                            && m_ji.product(ring, &m_ij).is_zero()
                        {
                            zero_pairs.push(format!("({},{})", i + 1, j + 1));
                        }
                    }
                }
                row.push(' ');
            }
            row.push(']');
            out.push_str(&row);
            out.push('\n');
        }
        if !zero_pairs.is_empty() {
            out.push_str(&format!(
                "  M_ij·M_ji = 0 for pairs: {}\n",
                zero_pairs.join(" ")
            ));
        }
        if let Some((d, nilp)) = &report.peirce.d_minus {
            let nilp_str = match nilp {
                Nilpotency::Index(t) => t.to_string(),
                Nilpotency::ExceedsCap => "exceeds cap".to_string(),
            };
            out.push_str(&format!(
                "D(R)⁻: size {}, nilpotency index {}\n",
                d.size(),
                nilp_str
            ));
        }
    }
    out.push_str(&format!(
        "radicals: |J| = {} ({}), |B| = {} ({}), |R/J| = {}\n",
        report.radicals.jacobson.size(),
        method_name(report.radicals.jacobson_method),
        report.radicals.prime_radical.size(),
        method_name(report.radicals.prime_method),
        report.radicals.semisimple_quotient.size()
    ));
    out.push_str("checks:\n");
    for c in &report.checks {
        out.push_str(&format!(
            "  [{}] {}\n",
            if c.pass { "ok" } else { "FAIL" },
            c.name
        ));
    }
    out
}

/// Standalone radical-only report (for the `radicals` subcommand).
pub fn radicals_json(ring: &FiniteRing, rr: &RadicalReport) -> Value {
    json!({
        "name": ring.name(),
        "size": ring.size() as u64,
        "radicals": {
            "J": subgroup_json(ring, &rr.jacobson),
            "B": subgroup_json(ring, &rr.prime_radical),
            "method": method_name(rr.jacobson_method),
            "prime_method": method_name(rr.prime_method),
            "j_nilpotency_index": nilpotency_json(rr.j_nilpotency),
            "semisimple_quotient_size": rr.semisimple_quotient.size() as u64,
        },
        "checks": rr
            .checks
            .iter()
            .map(|c| json!({"name": c.name, "pass": c.pass}))
            .collect::<Vec<_>>(),
    })
}

/// Recomputes D⁻ for an externally supplied complete set (exposed for the
/// CLI and tests).
pub fn d_minus_for_set(
    ring: &FiniteRing,
    set: &[Element],
    caps: &Caps,
) -> Result<(Subgroup, Nilpotency), RingError> {
    d_minus(ring, set, caps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::triangular_ring;
    use crate::gallery::gallery;
    use crate::ring::zmod;

    #[test]
    fn analyze_t3() {
        let caps = Caps::default();
        let t3 = triangular_ring(3, &zmod(2)).unwrap();
        let rep = analyze_ring(&t3, &caps, &[], 7).unwrap();
        assert!(rep.all_checks_pass, "checks: {:?}", rep.checks);
        assert_eq!(rep.peirce.dimension, Dimension::Finite(3));
        let text = report_text(&t3, &rep);
        assert!(text.contains("Peirce dimension: 3"));
        assert!(text.contains("M_ij·M_ji = 0"));
        let js = report_json(&t3, &rep, &caps);
        assert_eq!(js["dimension"], 3);
        assert_eq!(js["idempotents"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn analyze_gallery_small() {
        let caps = Caps::default();
        for name in ["t2_field(2)", "m2_field(2)", "z4_not_1B"] {
            let entry = gallery(name).unwrap();
            let rep = analyze_ring(&entry.ring, &caps, &entry.expectations, 5).unwrap();
            assert!(
                rep.all_checks_pass,
                "{} failed: {:?}",
                name,
                rep.checks.iter().filter(|c| !c.pass).collect::<Vec<_>>()
            );
        }
    }

    #[test]
    fn json_output_is_deterministic() {
        let caps = Caps::default();
        let t2 = triangular_ring(2, &zmod(2)).unwrap();
        let a = analyze_ring(&t2, &caps, &[], 1).unwrap();
        let b = analyze_ring(&t2, &caps, &[], 1).unwrap();
        assert_eq!(
            serde_json::to_string(&report_json(&t2, &a, &caps)).unwrap(),
            serde_json::to_string(&report_json(&t2, &b, &caps)).unwrap()
        );
    }

    #[test]
    fn analyze_rejects_non_ring() {
        let caps = Caps::default();
        let bad = crate::ring::FiniteRing::new(
            "bad",
            vec![("x".into(), 6)],
            vec![1],
            vec![vec![vec![2]]],
        )
        .unwrap();
        assert!(analyze_ring(&bad, &caps, &[], 0).is_err());
    }
}
