//! Element-level brute force, deliberately independent of the subgroup and
//! normal-form machinery: every result here is computed by enumerating ring
//! elements and multiplying them.  Used to cross-check the structured
//! engine and as the independent source for frozen expected values.

use crate::error::RingError;
use crate::ring::{Element, FiniteRing};
use crate::Caps;
use std::collections::HashSet;

/// Classification of one idempotent, derived purely from element sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleIdempotent {
    pub element: Element,
    pub is_inner_trivial: bool,
    pub is_outer_trivial: bool,
    pub is_central: bool,
}

/// Full brute-force analysis of a small ring.
#[derive(Clone, Debug)]
pub struct OracleAnalysis {
    pub idempotents: Vec<OracleIdempotent>,
    pub dimension: u32,
    pub jacobson: Vec<Element>,
    pub prime_radical: Vec<Element>,
}

fn all_elements(ring: &FiniteRing) -> Vec<Element> {
    ring.elements().collect()
}

fn dedup_sorted(ring: &FiniteRing, mut v: Vec<Element>) -> Vec<Element> {
    v.sort_by_key(|x| ring.index_of(x));
    v.dedup();
    v
}

/// Additive closure of a set, by orbit of repeated generator addition.
fn additive_closure(ring: &FiniteRing, gens: &[Element]) -> Vec<Element> {
    let mut seen: HashSet<Element> = HashSet::new();
    seen.insert(ring.zero());
    let mut frontier = vec![ring.zero()];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = ring.add(&x, g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    dedup_sorted(ring, seen.into_iter().collect())
}

fn set_products(ring: &FiniteRing, a: &[Element], b: &[Element]) -> Vec<Element> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for x in a {
        for y in b {
            out.push(ring.mul(x, y));
        }
    }
    dedup_sorted(ring, out)
}

/// Peirce triviality of f inside the subset ring with identity `one`,
/// entirely by element products.
fn subset_peirce_trivial(
    ring: &FiniteRing,
    subset: &[Element],
    one: &Element,
    f: &Element,
) -> bool {
    let cmpl = ring.sub(one, f);
    let left: Vec<Element> = dedup_sorted(
        ring,
        subset
            .iter()
            .map(|x| ring.mul(&ring.mul(f, x), &cmpl))
            .collect(),
    );
    let right_into: Vec<Element> = dedup_sorted(ring, subset.iter().map(|x| ring.mul(x, f)).collect());
    let inner = left
        .iter()
        .all(|a| right_into.iter().all(|b| ring.is_zero(&ring.mul(a, b))));
    if !inner {
        return false;
    }
    let left2: Vec<Element> = dedup_sorted(
        ring,
        subset
            .iter()
            .map(|x| ring.mul(&ring.mul(&cmpl, x), f))
            .collect(),
    );
    let right_into2: Vec<Element> =
        dedup_sorted(ring, subset.iter().map(|x| ring.mul(x, &cmpl)).collect());
    left2
        .iter()
        .all(|a| right_into2.iter().all(|b| ring.is_zero(&ring.mul(a, b))))
}

fn subset_dimension(ring: &FiniteRing, subset: &[Element], one: &Element) -> u32 {
    if subset.len() == 1 {
        return 0;
    }
    for f in subset {
        if ring.is_zero(f) || f == one || &ring.mul(f, f) != f {
            continue;
        }
        if subset_peirce_trivial(ring, subset, one, f) {
            let cmpl = ring.sub(one, f);
            let left = dedup_sorted(
                ring,
                subset.iter().map(|x| ring.sandwich(f, x)).collect(),
            );
            let right = dedup_sorted(
                ring,
                subset.iter().map(|x| ring.sandwich(&cmpl, x)).collect(),
            );
            return subset_dimension(ring, &left, f) + subset_dimension(ring, &right, &cmpl);
        }
    }
    1
}

/// Units by exhaustive two-sided inverse search.
pub fn unit_set(ring: &FiniteRing, caps: &Caps) -> Result<Vec<bool>, RingError> {
    if ring.size() > caps.oracle_cap {
        return Err(RingError::cap("oracle unit sweep", ring.size(), caps.oracle_cap));
    }
    let elems = all_elements(ring);
    let one = ring.one();
    Ok(elems
        .iter()
        .map(|u| {
            elems
                .iter()
                .any(|v| ring.mul(u, v) == one && ring.mul(v, u) == one)
        })
        .collect())
}

/// Brute-force Peirce dimension of the whole ring.
pub fn dimension(ring: &FiniteRing, caps: &Caps) -> Result<u32, RingError> {
    if ring.size() > caps.oracle_cap {
        return Err(RingError::cap("oracle dimension", ring.size(), caps.oracle_cap));
    }
    let elems = all_elements(ring);
    Ok(subset_dimension(ring, &elems, &ring.one()))
}

/// Brute-force Jacobson radical: all x such that 1 − yx is a unit for
/// every y.
pub fn jacobson(ring: &FiniteRing, caps: &Caps) -> Result<Vec<Element>, RingError> {
    let units = unit_set(ring, caps)?;
    let elems = all_elements(ring);
    let one = ring.one();
    let quasi = |w: &Element| units[ring.index_of(&ring.sub(&one, w)) as usize];
    Ok(elems
        .iter()
        .filter(|x| elems.iter().all(|y| quasi(&ring.mul(y, x))))
        .cloned()
        .collect())
}

/// Brute-force prime radical: greedy growth of the largest nilpotent ideal
/// as an element set.
pub fn prime_radical(ring: &FiniteRing, caps: &Caps) -> Result<Vec<Element>, RingError> {
    if ring.size() > caps.oracle_cap {
        return Err(RingError::cap(
            "oracle prime radical",
            ring.size(),
            caps.oracle_cap,
        ));
    }
    let length_cap = ring.composition_length() + 1;
    let mut acc: Vec<Element> = vec![ring.zero()];
    for x in ring.elements() {
        if acc.binary_search_by_key(&ring.index_of(&x), |e| ring.index_of(e)).is_ok() {
            continue;
        }
        // Ideal generated by acc ∪ {x}: additive closure of the two-sided
        // products of the generators.
        let mut gens: Vec<Element> = Vec::new();
        for g in acc.iter().chain(std::iter::once(&x)) {
            for i in 0..ring.rank() {
                for j in 0..ring.rank() {
                    gens.push(ring.mul(
                        &ring.mul(&ring.basis_element(i), g),
                        &ring.basis_element(j),
                    ));
                }
            }
        }
        let candidate = additive_closure(ring, &dedup_sorted(ring, gens));
        // Nilpotency at set level: powers until {0} or stabilization.
        let mut power = candidate.clone();
        let mut nilpotent = false;
        for _ in 0..length_cap {
            if power.len() == 1 {
                nilpotent = true;
                break;
            }
            let next = additive_closure(ring, &set_products(ring, &power, &candidate));
            if next == power {
                break;
            }
            power = next;
        }
        if nilpotent {
            acc = candidate;
        }
    }
    Ok(acc)
}

/// Full brute-force analysis: classified idempotents, dimension, radicals.
pub fn analyze(ring: &FiniteRing, caps: &Caps) -> Result<OracleAnalysis, RingError> {
    if ring.size() > caps.oracle_cap {
        return Err(RingError::cap("oracle analysis", ring.size(), caps.oracle_cap));
    }
    let elems = all_elements(ring);
    let one = ring.one();
    let idempotents: Vec<OracleIdempotent> = elems
        .iter()
        .filter(|e| &ring.mul(e, e) == *e)
        .map(|e| {
            let cmpl = ring.sub(&one, e);
            let inner = {
                let left = dedup_sorted(
                    ring,
                    elems.iter().map(|x| ring.mul(&ring.mul(e, x), &cmpl)).collect(),
                );
                let right = dedup_sorted(ring, elems.iter().map(|x| ring.mul(x, e)).collect());
                left.iter()
                    .all(|a| right.iter().all(|b| ring.is_zero(&ring.mul(a, b))))
            };
            let outer = {
                let left = dedup_sorted(
                    ring,
                    elems.iter().map(|x| ring.mul(&ring.mul(&cmpl, x), e)).collect(),
                );
                let right = dedup_sorted(ring, elems.iter().map(|x| ring.mul(x, &cmpl)).collect());
                left.iter()
                    .all(|a| right.iter().all(|b| ring.is_zero(&ring.mul(a, b))))
            };
            let central = elems
                .iter()
                .all(|x| ring.mul(e, x) == ring.mul(x, e));
            OracleIdempotent {
                element: e.clone(),
                is_inner_trivial: inner,
                is_outer_trivial: outer,
                is_central: central,
            }
        })
        .collect();
    let dimension = subset_dimension(ring, &elems, &one);
    let jacobson = jacobson(ring, caps)?;
    let prime_radical = prime_radical(ring, caps)?;
    Ok(OracleAnalysis {
        idempotents,
        dimension,
        jacobson,
        prime_radical,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{matrix_ring, submatrix_ring, triangular_ring};
    use crate::ring::zmod;

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn oracle_counts() {
        let c = caps();
        assert_eq!(analyze(&zmod(6), &c).unwrap().idempotents.len(), 4);
        assert_eq!(
            analyze(&triangular_ring(2, &zmod(2)).unwrap(), &c)
                .unwrap()
                .idempotents
                .len(),
            6
        );
        assert_eq!(
            analyze(&matrix_ring(2, &zmod(2)).unwrap(), &c)
                .unwrap()
                .idempotents
                .len(),
            8
        );
    }

    #[test]
    fn oracle_dimensions() {
        let c = caps();
        assert_eq!(dimension(&zmod(8), &c).unwrap(), 1);
        assert_eq!(dimension(&matrix_ring(2, &zmod(2)).unwrap(), &c).unwrap(), 1);
        assert_eq!(
            dimension(&triangular_ring(3, &zmod(2)).unwrap(), &c).unwrap(),
            3
        );
    }

    #[test]
    fn oracle_jacobson_matches_engine() {
        let c = caps();
        for ring in [
            zmod(12),
            triangular_ring(2, &zmod(2)).unwrap(),
            matrix_ring(2, &zmod(2)).unwrap(),
            submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap(),
        ] {
            let brute = jacobson(&ring, &c).unwrap();
            let (j, _) = crate::radical::jacobson_radical(&ring, &c, None).unwrap();
            let mut engine = j.elements(&ring);
            engine.sort_by_key(|x| ring.index_of(x));
            assert_eq!(brute, engine, "mismatch on {}", ring.name());
        }
    }

    #[test]
    fn oracle_prime_radical_matches_engine() {
        let c = caps();
        for ring in [
            zmod(8),
            triangular_ring(2, &zmod(2)).unwrap(),
            submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap(),
        ] {
            let brute = prime_radical(&ring, &c).unwrap();
            let b = crate::radical::prime_radical_direct(&ring, &c).unwrap();
            let mut engine = b.elements(&ring);
            engine.sort_by_key(|x| ring.index_of(x));
            assert_eq!(brute, engine, "mismatch on {}", ring.name());
        }
    }

    #[test]
    fn oracle_classification_matches_engine() {
        let c = caps();
        for ring in [
            triangular_ring(2, &zmod(2)).unwrap(),
            matrix_ring(2, &zmod(2)).unwrap(),
            zmod(6),
        ] {
            let brute = analyze(&ring, &c).unwrap();
            for rec in &brute.idempotents {
                let cls = crate::peirce::classify_peirce(&ring, &rec.element).unwrap();
                assert_eq!(cls.is_inner_trivial, rec.is_inner_trivial);
                assert_eq!(cls.is_outer_trivial, rec.is_outer_trivial);
                assert_eq!(cls.is_central, rec.is_central);
            }
        }
    }
}
