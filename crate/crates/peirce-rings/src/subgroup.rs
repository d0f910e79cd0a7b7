//! Additive subgroups of a finite ring in canonical form, with closure
//! operators, annihilators, and nilpotency of ring closures.

use crate::error::RingError;
use crate::nf;
use crate::ring::{Element, FiniteRing};
use serde::Serialize;

/// An additive subgroup in canonical (Hermite) form.  Two subgroups of the
/// same ring are equal iff their matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    mat: Vec<Vec<u64>>,
    size: u128,
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup(size={}, mat={:?})", self.size, self.mat)
    }
}

/// Closure requested when spanning a subgroup from generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    None,
    Left,
    Right,
    TwoSided,
    /// Smallest additive subgroup containing the generators and closed under
    /// multiplication (the "ring closure", a subring without identity).
    Multiplicative,
}

/// Ideal/subring membership flags of a subgroup.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub is_left_ideal: bool,
    pub is_right_ideal: bool,
    pub is_two_sided_ideal: bool,
    pub is_subring_closed: bool,
}

/// Result of a nilpotency-index computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Nilpotency {
    Index(u32),
    ExceedsCap,
}

impl Nilpotency {
    pub fn index(&self) -> Option<u32> {
        match self {
            Nilpotency::Index(t) => Some(*t),
            Nilpotency::ExceedsCap => None,
        }
    }
    /// True when the recorded index is strictly greater than `n`; a capped
    /// computation counts as exceeding every finite bound.
    pub fn exceeds(&self, n: u32) -> bool {
        match self {
            Nilpotency::Index(t) => *t > n,
            Nilpotency::ExceedsCap => true,
        }
    }
}

impl Subgroup {
    /// Additive span of the given elements.
    pub fn span(ring: &FiniteRing, gens: &[Element]) -> Subgroup {
        let rows: Vec<Vec<u64>> = gens.iter().map(|g| g.coords.clone()).collect();
        Subgroup::from_rows(ring, rows)
    }

    fn from_rows(ring: &FiniteRing, rows: Vec<Vec<u64>>) -> Subgroup {
        let mat = nf::hermite_mod(&rows, ring.orders());
        let size = nf::lattice_size(&mat, ring.orders());
        Subgroup { mat, size }
    }

    pub fn zero(ring: &FiniteRing) -> Subgroup {
        Subgroup::span(ring, &[])
    }

    pub fn full(ring: &FiniteRing) -> Subgroup {
        let gens: Vec<Element> = (0..ring.rank()).map(|i| ring.basis_element(i)).collect();
        Subgroup::span(ring, &gens)
    }

    /// Span of generators followed by the requested closure, computed as a
    /// fixpoint of normal-form reduction and product adjunction.
    pub fn closed(ring: &FiniteRing, gens: &[Element], closure: Closure) -> Subgroup {
        let mut current = Subgroup::span(ring, gens);
        if matches!(closure, Closure::None) {
            return current;
        }
        loop {
            let gens = current.nonzero_generators(ring);
            let mut adjoin: Vec<Element> = Vec::new();
            match closure {
                Closure::None => unreachable!(),
                Closure::Left | Closure::Right | Closure::TwoSided => {
                    for g in &gens {
                        for i in 0..ring.rank() {
                            let b = ring.basis_element(i);
                            if matches!(closure, Closure::Left | Closure::TwoSided) {
                                let p = ring.mul(&b, g);
                                if !current.contains(&p) {
                                    adjoin.push(p);
                                }
                            }
                            if matches!(closure, Closure::Right | Closure::TwoSided) {
                                let p = ring.mul(g, &b);
                                if !current.contains(&p) {
                                    adjoin.push(p);
                                }
                            }
                        }
                    }
                }
                Closure::Multiplicative => {
                    for g in &gens {
                        for h in &gens {
                            let p = ring.mul(g, h);
                            if !current.contains(&p) {
                                adjoin.push(p);
                            }
                        }
                    }
                }
            }
            if adjoin.is_empty() {
                return current;
            }
            let mut rows: Vec<Vec<u64>> = current.mat.clone();
            rows.extend(adjoin.into_iter().map(|e| e.coords));
            current = Subgroup::from_rows(ring, rows);
        }
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn matrix(&self) -> &[Vec<u64>] {
        &self.mat
    }

    pub fn contains(&self, x: &Element) -> bool {
        nf::contains(&self.mat, &x.coords)
    }

    pub fn contains_subgroup(&self, other: &Subgroup) -> bool {
        other
            .mat
            .iter()
            .all(|row| nf::contains(&self.mat, row))
    }

    /// Canonical generators: the Hermite rows that contribute beyond the
    /// ambient relations.
    pub fn nonzero_generators(&self, ring: &FiniteRing) -> Vec<Element> {
        self.mat
            .iter()
            .enumerate()
            .filter(|(j, row)| row[*j] != ring.orders()[*j])
            .map(|(_, row)| Element { coords: row.clone() })
            .collect()
    }

    /// Sum of two subgroups.
    pub fn sum(&self, ring: &FiniteRing, other: &Subgroup) -> Subgroup {
        let mut rows = self.mat.clone();
        rows.extend(other.mat.iter().cloned());
        Subgroup::from_rows(ring, rows)
    }

    /// Intersection, computed from the integer kernel of the stacked bases.
    pub fn intersect(&self, ring: &FiniteRing, other: &Subgroup) -> Subgroup {
        let k = ring.rank();
        if k == 0 {
            return Subgroup::zero(ring);
        }
        // (a, b)·[[H1],[−H2]] = 0  ⇒  a·H1 = b·H2 ∈ L1 ∩ L2.
        let mut stack: Vec<Vec<i128>> = Vec::with_capacity(2 * k);
        for row in &self.mat {
            stack.push(row.iter().map(|&c| c as i128).collect());
        }
        for row in &other.mat {
            stack.push(row.iter().map(|&c| -(c as i128)).collect());
        }
        let kernel = nf::row_kernel(&stack);
        let rows: Vec<Vec<u64>> = kernel
            .iter()
            .map(|coeffs| {
                (0..k)
                    .map(|j| {
                        let mut acc: i128 = 0;
                        for (i, &c) in coeffs.iter().take(k).enumerate() {
                            acc += c * self.mat[i][j] as i128;
                        }
                        acc.rem_euclid(ring.orders()[j] as i128) as u64
                    })
                    .collect()
            })
            .collect();
        Subgroup::from_rows(ring, rows)
    }

    /// Additive span of all pairwise products xy, x ∈ self, y ∈ other.
    /// Bilinearity reduces this to products of canonical generators.
    pub fn product(&self, ring: &FiniteRing, other: &Subgroup) -> Subgroup {
        let a = self.nonzero_generators(ring);
        let b = other.nonzero_generators(ring);
        let mut rows = Vec::with_capacity(a.len() * b.len());
        for x in &a {
            for y in &b {
                rows.push(ring.mul(x, y).coords);
            }
        }
        Subgroup::from_rows(ring, rows)
    }

    /// Every element, in deterministic order.  The canonical rows h_j with
    /// pivot g_j index the subgroup bijectively via Σ c_j·h_j,
    /// 0 ≤ c_j < m_j/g_j.
    pub fn elements(&self, ring: &FiniteRing) -> Vec<Element> {
        let k = ring.rank();
        let counts: Vec<u64> = (0..k).map(|j| ring.orders()[j] / self.mat[j][j]).collect();
        let total = self.size as usize;
        let mut out = Vec::with_capacity(total);
        let mut c = vec![0u64; k];
        loop {
            let mut coords = vec![0u64; k];
            for j in 0..k {
                if c[j] == 0 {
                    continue;
                }
                for l in 0..k {
                    let v = self.mat[j][l];
                    if v != 0 {
                        coords[l] = ((coords[l] as u128 + c[j] as u128 * v as u128)
                            % ring.orders()[l] as u128) as u64;
                    }
                }
            }
            out.push(Element { coords });
            let mut done = true;
            for j in 0..k {
                c[j] += 1;
                if c[j] < counts[j] {
                    done = false;
                    break;
                }
                c[j] = 0;
            }
            if done {
                break;
            }
        }
        debug_assert_eq!(out.len(), total);
        out
    }

    pub fn ideal_flags(&self, ring: &FiniteRing) -> IdealFlags {
        let gens = self.nonzero_generators(ring);
        let mut left = true;
        let mut right = true;
        let mut mult = true;
        for g in &gens {
            for i in 0..ring.rank() {
                let b = ring.basis_element(i);
                if left && !self.contains(&ring.mul(&b, g)) {
                    left = false;
                }
                if right && !self.contains(&ring.mul(g, &b)) {
                    right = false;
                }
            }
            for h in &gens {
                if mult && !self.contains(&ring.mul(g, h)) {
                    mult = false;
                }
            }
        }
        IdealFlags {
            is_left_ideal: left,
            is_right_ideal: right,
            is_two_sided_ideal: left && right,
            is_subring_closed: mult,
        }
    }

    pub fn is_two_sided_ideal(&self, ring: &FiniteRing) -> bool {
        let flags = self.ideal_flags(ring);
        flags.is_two_sided_ideal
    }
}

/// Least t with S^t = 0 for the ring closure of `s`, or `ExceedsCap`.  The
/// default cap (composition length + 1) is large enough that hitting it, or
/// observing a stabilized nonzero power, proves non-nilpotence.
pub fn nilpotency_index(ring: &FiniteRing, s: &Subgroup, cap: Option<u32>) -> Nilpotency {
    let cap = cap.unwrap_or(ring.composition_length() + 1);
    let closed = if s.ideal_flags(ring).is_subring_closed {
        s.clone()
    } else {
        Subgroup::closed(ring, &s.nonzero_generators(ring), Closure::Multiplicative)
    };
    let mut power = closed.clone();
    let mut t = 1u32;
    loop {
        if power.is_zero() {
            return Nilpotency::Index(t);
        }
        if t > cap {
            return Nilpotency::ExceedsCap;
        }
        let next = power.product(ring, &closed);
        if next == power {
            // Stabilized nonzero power: never reaches zero.
            return Nilpotency::ExceedsCap;
        }
        power = next;
        t += 1;
    }
}

/// {y : x·y = 0 for all x ∈ s}, always a right ideal.
pub fn right_annihilator(ring: &FiniteRing, s: &Subgroup) -> Subgroup {
    let k = ring.rank();
    if k == 0 {
        return Subgroup::full(ring);
    }
    let gens = s.nonzero_generators(ring);
    if gens.is_empty() {
        return Subgroup::full(ring);
    }
    // y·M ≡ 0 where column block g is the map y ↦ g·y (rows are g·b_j).
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(k);
    for j in 0..k {
        let bj = ring.basis_element(j);
        let mut row: Vec<i128> = Vec::with_capacity(gens.len() * k);
        for g in &gens {
            row.extend(ring.mul(g, &bj).coords.iter().map(|&c| c as i128));
        }
        rows.push(row);
    }
    let mut stack = rows;
    for block in 0..gens.len() {
        for j in 0..k {
            let mut row = vec![0i128; gens.len() * k];
            row[block * k + j] = ring.orders()[j] as i128;
            stack.push(row);
        }
    }
    let kernel = nf::row_kernel(&stack);
    let rows: Vec<Vec<u64>> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .take(k)
                .zip(ring.orders())
                .map(|(&c, &m)| c.rem_euclid(m as i128) as u64)
                .collect()
        })
        .collect();
    Subgroup::from_rows(ring, rows)
}

/// {y : y·x = 0 for all x ∈ s}, always a left ideal.
pub fn left_annihilator(ring: &FiniteRing, s: &Subgroup) -> Subgroup {
    let k = ring.rank();
    if k == 0 {
        return Subgroup::full(ring);
    }
    let gens = s.nonzero_generators(ring);
    if gens.is_empty() {
        return Subgroup::full(ring);
    }
    let mut stack: Vec<Vec<i128>> = Vec::with_capacity(k);
    for j in 0..k {
        let bj = ring.basis_element(j);
        let mut row: Vec<i128> = Vec::with_capacity(gens.len() * k);
        for g in &gens {
            row.extend(ring.mul(&bj, g).coords.iter().map(|&c| c as i128));
        }
        stack.push(row);
    }
    for block in 0..gens.len() {
        for j in 0..k {
            let mut row = vec![0i128; gens.len() * k];
            row[block * k + j] = ring.orders()[j] as i128;
            stack.push(row);
        }
    }
    let kernel = nf::row_kernel(&stack);
    let rows: Vec<Vec<u64>> = kernel
        .iter()
        .map(|v| {
            v.iter()
                .take(k)
                .zip(ring.orders())
                .map(|(&c, &m)| c.rem_euclid(m as i128) as u64)
                .collect()
        })
        .collect();
    Subgroup::from_rows(ring, rows)
}

/// The spec-level operation: span generators, then close.
pub fn subgroup_from_generators(
    ring: &FiniteRing,
    gens: &[Element],
    closure: Closure,
) -> Subgroup {
    Subgroup::closed(ring, gens, closure)
}

/// Two-sided ideal generated by an element.
pub fn principal_ideal(ring: &FiniteRing, x: &Element) -> Subgroup {
    Subgroup::closed(ring, std::slice::from_ref(x), Closure::TwoSided)
}

pub fn quotient_size(ring: &FiniteRing, s: &Subgroup) -> u128 {
    ring.size() / s.size()
}

/// Validation helper shared by operations requiring a two-sided ideal.
pub fn require_ideal(ring: &FiniteRing, s: &Subgroup) -> Result<(), RingError> {
    if s.is_two_sided_ideal(ring) {
        Ok(())
    } else {
        Err(RingError::NotAnIdeal)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::zmod;

    #[test]
    fn principal_ideal_of_two_in_z8() {
        let r = zmod(8);
        let s = subgroup_from_generators(&r, &[r.element(&[2])], Closure::TwoSided);
        assert_eq!(s.size(), 4);
        assert!(s.contains(&r.element(&[6])));
        assert!(!s.contains(&r.element(&[1])));
    }

    #[test]
    fn annihilator_in_z8() {
        let r = zmod(8);
        let s = Subgroup::span(&r, &[r.element(&[2])]);
        let ann = right_annihilator(&r, &s);
        assert_eq!(ann.size(), 2);
        assert!(ann.contains(&r.element(&[4])));
    }

    #[test]
    fn annihilator_matches_brute_force() {
        let r = zmod(12);
        for g in 0..12i64 {
            let s = Subgroup::span(&r, &[r.element(&[g])]);
            let ann = right_annihilator(&r, &s);
            for y in r.elements() {
                let brute = s
                    .elements(&r)
                    .iter()
                    .all(|x| r.is_zero(&r.mul(x, &y)));
                assert_eq!(ann.contains(&y), brute);
            }
        }
    }

    #[test]
    fn nilpotency_of_z8_ideal() {
        let r = zmod(8);
        let s = Subgroup::span(&r, &[r.element(&[2])]);
        assert_eq!(nilpotency_index(&r, &s, None), Nilpotency::Index(3));
        assert_eq!(
            nilpotency_index(&r, &Subgroup::zero(&r), None),
            Nilpotency::Index(1)
        );
        // All of F2 contains 1 and stabilizes.
        let f2 = zmod(2);
        assert_eq!(
            nilpotency_index(&f2, &Subgroup::full(&f2), None),
            Nilpotency::ExceedsCap
        );
    }

    #[test]
    fn lagrange_and_enumeration() {
        let r = zmod(12);
        let s = Subgroup::span(&r, &[r.element(&[4])]);
        assert_eq!(s.size() * quotient_size(&r, &s), 12);
        let elems = s.elements(&r);
        assert_eq!(elems.len(), 3);
        for e in &elems {
            assert!(s.contains(e));
        }
    }

    #[test]
    fn canonical_form_generator_order_independent() {
        let r = zmod(24);
        let a = Subgroup::span(&r, &[r.element(&[4]), r.element(&[6])]);
        let b = Subgroup::span(&r, &[r.element(&[6]), r.element(&[4]), r.element(&[10])]);
        assert_eq!(a, b);
        assert_eq!(a.size(), 12); // gcd(4,6)=2 generates 12 elements of Z/24
    }

    #[test]
    fn intersection() {
        let r = zmod(24);
        let a = Subgroup::span(&r, &[r.element(&[4])]);
        let b = Subgroup::span(&r, &[r.element(&[6])]);
        let c = a.intersect(&r, &b);
        assert_eq!(c, Subgroup::span(&r, &[r.element(&[12])]));
    }
}
