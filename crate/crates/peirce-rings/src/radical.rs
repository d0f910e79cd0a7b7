//! Jacobson and prime radicals of finite rings, radical-relative triviality
//! of idempotents, the B-dimension recursion, and idempotent lifting modulo
//! nilpotent ideals.
//!
//! Three interchangeable Jacobson routes are implemented and cross-checked
//! by the test suite: the quasi-regularity sweep (oracle), the
//! CRT/characteristic-p quotient route, and the block-structural route
//! through a complete set of orthogonal idempotents with 1-Peirce corners.

use crate::corner::{corner_ring, quotient_ring};
use crate::error::RingError;
use crate::peirce::{
    complete_one_peirce_set, idempotent_elements, peirce_dimension, Dimension,
    NamedCheck,
};
use crate::ring::{Element, FiniteRing};
use crate::subgroup::{nilpotency_index, Nilpotency, Subgroup};
use crate::{Caps, FP_SWEEP_CAP};
use rayon::prelude::*;
use serde::Serialize;

/// Which route produced a radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RadicalMethod {
    Oracle,
    QuotientStructural,
    PeirceStructural,
    /// Prime radical taken from the Jacobson radical (finite rings have
    /// B = J); used only above the direct fixpoint cap and always flagged.
    JacobsonFallback,
}

/// Radical data of a ring.
#[derive(Clone, Debug)]
pub struct RadicalReport {
    pub jacobson: Subgroup,
    pub prime_radical: Subgroup,
    pub jacobson_method: RadicalMethod,
    pub prime_method: RadicalMethod,
    pub j_nilpotency: Nilpotency,
    pub semisimple_quotient: FiniteRing,
    pub checks: Vec<NamedCheck>,
}

/// J/B-triviality flags of an idempotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RadicalTriviality {
    pub is_j_trivial: bool,
    pub is_b_trivial: bool,
}

/// eR(1-e)Re ⊆ rad and (1-e)ReR(1-e) ⊆ rad.
pub fn radical_trivial(
    ring: &FiniteRing,
    e: &Element,
    rad: &Subgroup,
) -> Result<bool, RingError> {
    let blocks = crate::peirce::peirce_blocks(ring, e)?;
    let mn = blocks.m.product(ring, &blocks.n);
    let nm = blocks.n.product(ring, &blocks.m);
    Ok(rad.contains_subgroup(&mn) && rad.contains_subgroup(&nm))
}

pub fn classify_radical_trivial(
    ring: &FiniteRing,
    e: &Element,
    jacobson: &Subgroup,
    prime: &Subgroup,
) -> Result<RadicalTriviality, RingError> {
    Ok(RadicalTriviality {
        is_j_trivial: radical_trivial(ring, e, jacobson)?,
        is_b_trivial: radical_trivial(ring, e, prime)?,
    })
}

/// Quasi-regularity sweep: J = {x : 1 − w is a unit for every w ∈ Rx}.
/// Exact on any ring whose size fits the given cap.
fn quasiregular_sweep(ring: &FiniteRing, cap: u128) -> Result<Subgroup, RingError> {
    if ring.size() > cap {
        return Err(RingError::cap("quasi-regularity sweep", ring.size(), cap));
    }
    let total = ring.size() as u64;
    let chunk: u64 = 1 << 12;
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    let units: Vec<Vec<bool>> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk).min(total);
            let mut out = Vec::with_capacity((end - start) as usize);
            let mut x = ring.element_at(start as u128);
            for _ in start..end {
                out.push(ring.is_unit(&x));
                ring.advance(&mut x);
            }
            out
        })
        .collect();
    let units: Vec<bool> = units.concat();
    let one = ring.one();
    let quasi = |w: &Element| -> bool { units[ring.index_of(&ring.sub(&one, w)) as usize] };

    let members: Vec<Vec<Element>> = starts
        .par_iter()
        .map(|&start| {
            let end = (start + chunk).min(total);
            let mut out = Vec::new();
            let mut x = ring.element_at(start as u128);
            'outer: for _ in start..end {
                // Cheap necessary conditions first.
                if quasi(&x) {
                    let shifts: Vec<Element> = (0..ring.rank())
                        .map(|i| ring.mul(&ring.basis_element(i), &x))
                        .collect();
                    if shifts.iter().all(quasi) {
                        let rx = Subgroup::span(ring, &shifts);
                        for w in rx.elements(ring) {
                            if !quasi(&w) {
                                ring.advance(&mut x);
                                continue 'outer;
                            }
                        }
                        out.push(x.clone());
                    }
                }
                ring.advance(&mut x);
            }
            out
        })
        .collect();
    Ok(Subgroup::span(ring, &members.concat()))
}

/// Oracle route, capped by `caps.oracle_cap`.
pub fn jacobson_oracle(ring: &FiniteRing, caps: &Caps) -> Result<Subgroup, RingError> {
    quasiregular_sweep(ring, caps.oracle_cap)
}

fn modinv(a: u64, m: u64) -> u64 {
    // Extended Euclid; gcd(a, m) = 1 by construction of CRT coefficients.
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1);
    old_s.rem_euclid(m as i128) as u64
}

/// J of a p-torsion ring: the preimage of J(R/pR) under the projection,
/// with J(R/pR) found by sweeping the F_p-algebra quotient.
fn p_part_jacobson(ring: &FiniteRing, p: u64) -> Result<Subgroup, RingError> {
    let p_gens: Vec<Element> = (0..ring.rank())
        .map(|i| ring.scalar(p as i64, &ring.basis_element(i)))
        .collect();
    let pr = Subgroup::span(ring, &p_gens);
    let q = quotient_ring(ring, &pr)?;
    let jq = quasiregular_sweep(&q.ring, FP_SWEEP_CAP)?;
    let mut gens: Vec<Element> = jq
        .nonzero_generators(&q.ring)
        .iter()
        .map(|g| q.section(g))
        .collect();
    gens.extend(pr.nonzero_generators(ring));
    Ok(Subgroup::span(ring, &gens))
}

/// CRT/characteristic route: split off the p-torsion component for each
/// prime of the additive exponent and lift J(component/p·component).
pub fn jacobson_quotient_structural(ring: &FiniteRing) -> Result<Subgroup, RingError> {
    let factors = ring.exponent_factors().to_vec();
    if factors.is_empty() {
        return Ok(Subgroup::zero(ring));
    }
    if factors.len() == 1 {
        return p_part_jacobson(ring, factors[0].0);
    }
    let exponent = ring.exponent();
    let mut gens: Vec<Element> = Vec::new();
    for &(p, a) in &factors {
        let q = p.pow(a);
        let rest = exponent / q;
        let c = rest
            .checked_mul(modinv(rest % q, q))
            .expect("CRT coefficient fits u64");
        let u = ring.scalar(c as i64, &ring.one());
        debug_assert!(ring.is_idempotent(&u));
        let comp = corner_ring(ring, &u)?;
        let jp = p_part_jacobson(&comp.ring, p)?;
        gens.extend(jp.nonzero_generators(&comp.ring).iter().map(|g| comp.embed(g)));
    }
    Ok(Subgroup::span(ring, &gens))
}

/// Block-structural route: J(R) = D(R)⁻ + Σ J(e_iRe_i) over a complete set
/// of orthogonal idempotents with 1-Peirce corners.  For a 1-Peirce ring
/// the reduction is vacuous and the computation delegates to the quotient
/// route on the single corner.
pub fn jacobson_peirce_structural(
    ring: &FiniteRing,
    set: &[Element],
    caps: &Caps,
) -> Result<Subgroup, RingError> {
    crate::peirce::validate_complete_orthogonal(ring, set)?;
    if set.len() <= 1 {
        return jacobson_quotient_structural(ring)
            .or_else(|_| jacobson_oracle(ring, caps));
    }
    let (d, _) = crate::peirce::d_minus(ring, set, caps)?;
    let mut gens: Vec<Element> = d.nonzero_generators(ring);
    for e in set {
        let corner = corner_ring(ring, e)?;
        let (j, _) = jacobson_radical(&corner.ring, caps, None)?;
        gens.extend(j.nonzero_generators(&corner.ring).iter().map(|g| corner.embed(g)));
    }
    Ok(Subgroup::span(ring, &gens))
}

fn quotient_route_applicable(ring: &FiniteRing) -> bool {
    // Every p-component has at most rank(R) generators, so its F_p quotient
    // has at most p^rank elements.
    ring.exponent_factors()
        .iter()
        .all(|&(p, _)| (p as u128).checked_pow(ring.rank() as u32).is_some_and(|s| s <= FP_SWEEP_CAP))
}

/// Selects a route (structural set if cached, then the quotient route, then
/// the oracle) and returns the radical with the method that produced it.
pub fn jacobson_radical(
    ring: &FiniteRing,
    caps: &Caps,
    cached_set: Option<&[Element]>,
) -> Result<(Subgroup, RadicalMethod), RingError> {
    if let Some(set) = cached_set {
        if set.len() > 1 {
            let j = jacobson_peirce_structural(ring, set, caps)?;
            return Ok((j, RadicalMethod::PeirceStructural));
        }
    }
    if quotient_route_applicable(ring) {
        let j = jacobson_quotient_structural(ring)?;
        return Ok((j, RadicalMethod::QuotientStructural));
    }
    let j = jacobson_oracle(ring, caps)?;
    Ok((j, RadicalMethod::Oracle))
}

/// Largest nilpotent two-sided ideal by fixpoint growth over nilpotent
/// elements; exact because the default nilpotency cap is itself exact.
pub fn prime_radical_direct(ring: &FiniteRing, caps: &Caps) -> Result<Subgroup, RingError> {
    if ring.size() > caps.oracle_cap {
        return Err(RingError::cap(
            "prime radical fixpoint",
            ring.size(),
            caps.oracle_cap,
        ));
    }
    let length_cap = ring.composition_length() + 1;
    let mut acc = Subgroup::zero(ring);
    for x in ring.elements() {
        if ring.is_zero(&x) || acc.contains(&x) {
            continue;
        }
        // x ∈ B forces x nilpotent; skip the rest cheaply.
        let mut pow = x.clone();
        let mut nilpotent_elt = false;
        for _ in 0..length_cap {
            if ring.is_zero(&pow) {
                nilpotent_elt = true;
                break;
            }
            pow = ring.mul(&pow, &x);
        }
        if !nilpotent_elt {
            continue;
        }
        let mut gens = acc.nonzero_generators(ring);
        gens.push(x.clone());
        let candidate = Subgroup::closed(ring, &gens, crate::subgroup::Closure::TwoSided);
        if matches!(
            nilpotency_index(ring, &candidate, caps.nilpotency_cap),
            Nilpotency::Index(_)
        ) {
            acc = candidate;
        }
    }
    Ok(acc)
}

/// Prime radical with route flag: direct fixpoint under the cap, otherwise
/// the finite-ring identity B = J, flagged as a fallback.
pub fn prime_radical(
    ring: &FiniteRing,
    caps: &Caps,
) -> Result<(Subgroup, RadicalMethod), RingError> {
    if ring.size() <= caps.oracle_cap {
        Ok((prime_radical_direct(ring, caps)?, RadicalMethod::Oracle))
    } else {
        let (j, _) = jacobson_radical(ring, caps, None)?;
        Ok((j, RadicalMethod::JacobsonFallback))
    }
}

/// Semiprimeness through the radical route: B(R) = 0.
pub fn is_semiprime_via_radical(ring: &FiniteRing, caps: &Caps) -> Result<bool, RingError> {
    Ok(prime_radical(ring, caps)?.0.is_zero())
}

/// Both semiprimeness routes, cross-checked where both run.
pub fn is_semiprime(ring: &FiniteRing, caps: &Caps) -> Result<bool, RingError> {
    let via_radical = is_semiprime_via_radical(ring, caps)?;
    if ring.size() <= caps.oracle_cap {
        let direct = crate::peirce::is_semiprime_direct(ring, caps)?;
        assert_eq!(
            direct, via_radical,
            "internal error: semiprimeness routes disagree on {}",
            ring.name()
        );
    }
    Ok(via_radical)
}

/// Full radical report with the built-in cross-checks.
pub fn radical_report(
    ring: &FiniteRing,
    caps: &Caps,
    cached_set: Option<&[Element]>,
) -> Result<RadicalReport, RingError> {
    let (jacobson, jacobson_method) = jacobson_radical(ring, caps, cached_set)?;
    let (prime, prime_method) = prime_radical(ring, caps)?;
    let j_nilpotency = nilpotency_index(ring, &jacobson, caps.nilpotency_cap);
    let quotient = quotient_ring(ring, &jacobson)?;

    let mut checks = Vec::new();
    checks.push(NamedCheck {
        name: "J is a two-sided ideal".into(),
        pass: jacobson.is_two_sided_ideal(ring),
    });
    checks.push(NamedCheck {
        name: "J is nilpotent".into(),
        pass: matches!(j_nilpotency, Nilpotency::Index(_)),
    });
    checks.push(NamedCheck {
        name: "B ⊆ J".into(),
        pass: jacobson.contains_subgroup(&prime),
    });
    if prime_method != RadicalMethod::JacobsonFallback {
        checks.push(NamedCheck {
            name: "B = J (independent routes)".into(),
            pass: prime == jacobson,
        });
    }
    let (j_of_quotient, _) = jacobson_radical(&quotient.ring, caps, None)?;
    checks.push(NamedCheck {
        name: "J(R/J) = 0".into(),
        pass: j_of_quotient.is_zero(),
    });
    if ring.size() <= caps.oracle_cap {
        let bq = quotient_ring(ring, &prime)?;
        let b_of_quotient = prime_radical_direct(&bq.ring, caps)?;
        checks.push(NamedCheck {
            name: "B(R/B) = 0".into(),
            pass: b_of_quotient.is_zero(),
        });
    }

    Ok(RadicalReport {
        jacobson,
        prime_radical: prime,
        jacobson_method,
        prime_method,
        j_nilpotency,
        semisimple_quotient: quotient.ring,
        checks,
    })
}

/// Lift of an idempotent-modulo-a-nilpotent-ideal by e ← 3e² − 2e³.
/// Returns the lifted idempotent and the number of iterations used, which
/// never exceeds the nilpotency index of the ideal.
pub fn lift_idempotent(
    ring: &FiniteRing,
    nil_ideal: &Subgroup,
    ebar: &Element,
    caps: &Caps,
) -> Result<(Element, u32), RingError> {
    if !nil_ideal.is_two_sided_ideal(ring) {
        return Err(RingError::NotAnIdeal);
    }
    let nilp = nilpotency_index(ring, nil_ideal, caps.nilpotency_cap);
    let Nilpotency::Index(index) = nilp else {
        return Err(RingError::NotNilpotent);
    };
    let defect = ring.sub(&ring.mul(ebar, ebar), ebar);
    if !nil_ideal.contains(&defect) {
        return Err(RingError::NotAMember(format!(
            "{}² − {} does not lie in the given ideal",
            ring.format_element(ebar),
            ring.format_element(ebar)
        )));
    }
    let mut e = ebar.clone();
    let mut iterations = 0u32;
    while !ring.is_idempotent(&e) {
        let e2 = ring.mul(&e, &e);
        let e3 = ring.mul(&e2, &e);
        e = ring.sub(&ring.scalar(3, &e2), &ring.scalar(2, &e3));
        iterations += 1;
        assert!(
            iterations <= index,
            "lifting iteration exceeded the nilpotency index {index}"
        );
    }
    assert!(
        nil_ideal.contains(&ring.sub(&e, ebar)),
        "lifted idempotent must be congruent to the input modulo the ideal"
    );
    Ok((e, iterations))
}

/// One lifted central idempotent of the semisimple quotient.
#[derive(Clone, Debug)]
pub struct LiftRecord {
    /// The central idempotent of R/J (quotient coordinates).
    pub central: Element,
    /// Its lift in R.
    pub lifted: Element,
    pub iterations: u32,
    pub is_j_trivial: bool,
}

/// Verification that central idempotents of R/J lift, with the count of
/// indecomposable factors of the semisimple quotient.
#[derive(Clone, Debug)]
pub struct WeaklyLiftingReport {
    pub semisimple_factor_count: Dimension,
    pub lifts: Vec<LiftRecord>,
    pub checks: Vec<NamedCheck>,
}

pub fn weakly_lifting_report(
    ring: &FiniteRing,
    caps: &Caps,
) -> Result<WeaklyLiftingReport, RingError> {
    let (jacobson, _) = jacobson_radical(ring, caps, None)?;
    let quotient = quotient_ring(ring, &jacobson)?;
    let q = &quotient.ring;
    let centrals: Vec<Element> = idempotent_elements(q, caps.enum_cap)?
        .into_iter()
        .filter(|e| (0..q.rank()).all(|i| q.mul(e, &q.basis_element(i)) == q.mul(&q.basis_element(i), e)))
        .collect();
    let (factor_count, _) = peirce_dimension(q, caps)?;

    let mut lifts = Vec::new();
    let mut all_lift = true;
    let mut all_trivial = true;
    let mut projections_match = true;
    for ebar in centrals {
        let seed = quotient.section(&ebar);
        let (lifted, iterations) = lift_idempotent(ring, &jacobson, &seed, caps)?;
        let is_j_trivial = radical_trivial(ring, &lifted, &jacobson)?;
        all_lift &= ring.is_idempotent(&lifted);
        all_trivial &= is_j_trivial;
        projections_match &= quotient.project(&lifted) == ebar;
        lifts.push(LiftRecord {
            central: ebar,
            lifted,
            iterations,
            is_j_trivial,
        });
    }
    let checks = vec![
        NamedCheck {
            name: "every central idempotent of R/J lifts to an idempotent of R".into(),
            pass: all_lift,
        },
        NamedCheck {
            name: "every lifted idempotent is J-trivial".into(),
            pass: all_trivial,
        },
        NamedCheck {
            name: "each lift projects back onto its central idempotent".into(),
            pass: projections_match,
        },
    ];
    Ok(WeaklyLiftingReport {
        semisimple_factor_count: factor_count,
        lifts,
        checks,
    })
}

/// B-dimension data: the recursion over B-trivial pivots plus the quotient
/// contract (R/B must be a direct sum of that many semiprime 1-Peirce
/// rings).
#[derive(Clone, Debug)]
pub struct BDimensionReport {
    pub dimension: Dimension,
    /// Identities of the 1-B leaf corners, in root coordinates.
    pub set: Vec<Element>,
    pub quotient_dimension: Dimension,
    pub quotient_factors_semiprime: bool,
    pub consistent: bool,
}

fn b_dimension_rec(
    ring: &FiniteRing,
    depth: u32,
    caps: &Caps,
) -> Result<(Dimension, Vec<Element>), RingError> {
    if ring.size() == 1 {
        return Ok((Dimension::Finite(0), vec![]));
    }
    if depth > caps.depth_cap {
        return Ok((Dimension::ExceedsCap, vec![]));
    }
    let (b, _) = prime_radical(ring, caps)?;
    let one = ring.one();
    let idems = idempotent_elements(ring, caps.enum_cap)?;
    let pivot = idems
        .into_iter()
        .filter(|e| !ring.is_zero(e) && *e != one)
        .find_map(|e| match radical_trivial(ring, &e, &b) {
            Ok(true) => Some(Ok(e)),
            Ok(false) => None,
            Err(err) => Some(Err(err)),
        })
        .transpose()?;
    let Some(pivot) = pivot else {
        return Ok((Dimension::Finite(1), vec![ring.one()]));
    };
    let left = corner_ring(ring, &pivot)?;
    let right = corner_ring(ring, &ring.complement(&pivot))?;
    let (dl, leaves_l) = b_dimension_rec(&left.ring, depth + 1, caps)?;
    let (dr, leaves_r) = b_dimension_rec(&right.ring, depth + 1, caps)?;
    let mut leaves: Vec<Element> = leaves_l.iter().map(|x| left.embed(x)).collect();
    leaves.extend(leaves_r.iter().map(|x| right.embed(x)));
    let dim = match (dl, dr) {
        (Dimension::Finite(a), Dimension::Finite(b)) => Dimension::Finite(a + b),
        _ => Dimension::ExceedsCap,
    };
    Ok((dim, leaves))
}

/// Recursion over B-trivial pivots with the quotient cross-check: R/B(R)
/// must have matching Peirce dimension and decompose into semiprime
/// 1-Peirce factors.
pub fn b_dimension(ring: &FiniteRing, caps: &Caps) -> Result<BDimensionReport, RingError> {
    let (dimension, set) = b_dimension_rec(ring, 0, caps)?;
    let (b, _) = prime_radical(ring, caps)?;
    let quotient = quotient_ring(ring, &b)?;
    let (quotient_dimension, _) = peirce_dimension(&quotient.ring, caps)?;
    let qreport = complete_one_peirce_set(&quotient.ring, caps)?;
    let mut factors_semiprime = true;
    for e in &qreport.idempotent_set {
        let corner = corner_ring(&quotient.ring, e)?;
        if !is_semiprime_via_radical(&corner.ring, caps)? {
            factors_semiprime = false;
        }
    }
    let consistent = dimension == quotient_dimension && factors_semiprime;
    Ok(BDimensionReport {
        dimension,
        set,
        quotient_dimension,
        quotient_factors_semiprime: factors_semiprime,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{direct_product, matrix_ring, submatrix_ring, triangular_ring};
    use crate::ring::zmod;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn jacobson_of_z8() {
        let r = zmod(8);
        let (j, _) = jacobson_radical(&r, &caps(), None).unwrap();
        assert_eq!(j.size(), 4);
        assert!(j.contains(&r.element(&[2])));
        let oracle = jacobson_oracle(&r, &caps()).unwrap();
        assert_eq!(j, oracle);
    }

    #[test]
    fn jacobson_of_t2_and_m2() {
        let t2 = triangular_ring(2, &zmod(2)).unwrap();
        let (j, _) = jacobson_radical(&t2, &caps(), None).unwrap();
        assert_eq!(j.size(), 2);
        assert!(j.contains(&t2.basis_element(1))); // E12

        let m2 = matrix_ring(2, &zmod(2)).unwrap();
        let (j, _) = jacobson_radical(&m2, &caps(), None).unwrap();
        assert!(j.is_zero());
    }

    #[test]
    fn methods_agree_on_small_rings() {
        let c = caps();
        for ring in [
            zmod(8),
            zmod(12),
            triangular_ring(2, &zmod(2)).unwrap(),
            triangular_ring(3, &zmod(2)).unwrap(),
            matrix_ring(2, &zmod(3)).unwrap(),
            direct_product(&[zmod(2), zmod(4)]).unwrap(),
            submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap(),
        ] {
            let oracle = jacobson_oracle(&ring, &c).unwrap();
            let structural = jacobson_quotient_structural(&ring).unwrap();
            assert_eq!(oracle, structural, "quotient route disagrees on {}", ring.name());
            let report = crate::peirce::complete_one_peirce_set(&ring, &c).unwrap();
            let peirce = jacobson_peirce_structural(&ring, &report.idempotent_set, &c).unwrap();
            assert_eq!(oracle, peirce, "block route disagrees on {}", ring.name());
        }
    }

    #[test]
    fn prime_radical_of_z4_ring() {
        let c = caps();
        let r = submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap();
        let (b, method) = prime_radical(&r, &c).unwrap();
        assert_eq!(method, RadicalMethod::Oracle);
        // Contains 2·(every slot).
        for i in 0..r.rank() {
            assert!(b.contains(&r.scalar(2, &r.basis_element(i))));
        }
        // Contains the full (1,2) slot and is nilpotent.
        assert!(b.contains(&r.basis_element(1)));
        assert!(matches!(
            nilpotency_index(&r, &b, None),
            Nilpotency::Index(_)
        ));
        // Agrees with J.
        let (j, _) = jacobson_radical(&r, &c, None).unwrap();
        assert_eq!(b, j);
    }

    #[test]
    fn radical_report_checks_pass() {
        let c = caps();
        for ring in [
            zmod(8),
            triangular_ring(2, &zmod(2)).unwrap(),
            matrix_ring(2, &zmod(2)).unwrap(),
            direct_product(&[zmod(2), zmod(2)]).unwrap(),
        ] {
            let rep = radical_report(&ring, &c, None).unwrap();
            assert!(
                rep.checks.iter().all(|ch| ch.pass),
                "failed checks on {}: {:?}",
                ring.name(),
                rep.checks
            );
        }
    }

    #[test]
    fn lifting_in_z12() {
        let c = caps();
        let r = zmod(12);
        let ideal = Subgroup::span(&r, &[r.element(&[6])]);
        let (e, iters) = lift_idempotent(&r, &ideal, &r.element(&[3]), &c).unwrap();
        assert_eq!(e, r.element(&[9]));
        assert_eq!(iters, 1);

        // Already idempotent: unchanged with zero iterations.
        let (e, iters) = lift_idempotent(&r, &ideal, &r.element(&[9]), &c).unwrap();
        assert_eq!(e, r.element(&[9]));
        assert_eq!(iters, 0);
    }

    #[test]
    fn lifting_in_t2() {
        let c = caps();
        let t2 = triangular_ring(2, &zmod(2)).unwrap();
        let ideal = Subgroup::span(&t2, &[t2.basis_element(1)]);
        let ebar = t2.element(&[1, 1, 0]); // E11+E12, already idempotent
        let (e, _) = lift_idempotent(&t2, &ideal, &ebar, &c).unwrap();
        assert!(t2.is_idempotent(&e));
        assert!(ideal.contains(&t2.sub(&e, &ebar)));
    }

    #[test]
    fn lift_rejects_bad_inputs() {
        let c = caps();
        let r = zmod(12);
        // {0, 4, 8} is an ideal but not nilpotent (4² = 4).
        let ideal = Subgroup::span(&r, &[r.element(&[4])]);
        assert!(matches!(
            lift_idempotent(&r, &ideal, &r.element(&[4]), &c),
            Err(RingError::NotNilpotent)
        ));
        // Defect outside the ideal.
        let nil = Subgroup::span(&r, &[r.element(&[6])]);
        assert!(matches!(
            lift_idempotent(&r, &nil, &r.element(&[2]), &c),
            Err(RingError::NotAMember(_))
        ));
    }

    #[test]
    fn weakly_lifting_t2() {
        let c = caps();
        let t2 = triangular_ring(2, &zmod(2)).unwrap();
        let rep = weakly_lifting_report(&t2, &c).unwrap();
        assert_eq!(rep.semisimple_factor_count, Dimension::Finite(2));
        // Four central idempotents upstairs (0, two factors, 1).
        assert_eq!(rep.lifts.len(), 4);
        assert!(rep.checks.iter().all(|ch| ch.pass));
    }

    #[test]
    fn b_dimension_examples() {
        let c = caps();
        let z4ring = submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap();
        let rep = b_dimension(&z4ring, &c).unwrap();
        assert_eq!(rep.dimension, Dimension::Finite(2));
        assert!(rep.consistent);

        assert_eq!(
            b_dimension(&matrix_ring(2, &zmod(2)).unwrap(), &c)
                .unwrap()
                .dimension,
            Dimension::Finite(1)
        );
        assert_eq!(
            b_dimension(&zmod(8), &c).unwrap().dimension,
            Dimension::Finite(1)
        );
    }

    #[test]
    fn z4_ring_e11_b_trivial_not_peirce_trivial() {
        let c = caps();
        let r = submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap();
        let e11 = r.basis_element(0);
        let rep = radical_report(&r, &c, None).unwrap();
        let tv = classify_radical_trivial(&r, &e11, &rep.jacobson, &rep.prime_radical).unwrap();
        assert!(tv.is_b_trivial);
        assert!(!crate::peirce::classify_peirce(&r, &e11).unwrap().is_trivial());
    }

    #[test]
    fn m2_e11_not_j_trivial() {
        let c = caps();
        let m2 = matrix_ring(2, &zmod(2)).unwrap();
        let rep = radical_report(&m2, &c, None).unwrap();
        let tv =
            classify_radical_trivial(&m2, &m2.basis_element(0), &rep.jacobson, &rep.prime_radical)
                .unwrap();
        assert!(!tv.is_j_trivial);
    }

    #[test]
    fn semiprime_routes() {
        let c = caps();
        assert!(is_semiprime(&direct_product(&[zmod(2), zmod(2)]).unwrap(), &c).unwrap());
        assert!(!is_semiprime(&zmod(8), &c).unwrap());
        assert!(is_semiprime(&matrix_ring(2, &zmod(2)).unwrap(), &c).unwrap());
    }
}
