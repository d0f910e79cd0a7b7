//! Structure-constant kernel: a finite associative unital ring presented by
//! an additive basis with per-generator orders and a multiplication table.

use crate::error::RingError;
use crate::nf;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Largest allowed additive order of a single basis generator.  Keeps all
/// coordinate arithmetic inside i64/i128 comfortably.
pub const MAX_ORDER: u64 = 1 << 31;

/// A finite ring given by an additive basis b_1..b_k, the additive order of
/// each generator, and the coordinates of every product b_i·b_j.
///
/// The one-element ring is represented by an empty basis.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    name: String,
    basis_names: Vec<String>,
    orders: Vec<u64>,
    table: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
    size: u128,
    exponent: u64,
    exponent_factors: Vec<(u64, u32)>,
}

/// Coordinate vector of a ring element, reduced modulo the basis orders.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Element {
    pub coords: Vec<u64>,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// Outcome of the axiom sweep: all failing basis triples and identity slots.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    /// Triples (i, j, l) with (b_i·b_j)·b_l ≠ b_i·(b_j·b_l).
    pub associativity_violations: Vec<(usize, usize, usize)>,
    /// Indices i with 1·b_i ≠ b_i or b_i·1 ≠ b_i.
    pub identity_violations: Vec<usize>,
    /// Pairs (i, j) where the product b_i·b_j is not killed by the additive
    /// orders of its factors; bilinear extension would be ill-defined.
    pub torsion_violations: Vec<(usize, usize)>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.associativity_violations.is_empty()
            && self.identity_violations.is_empty()
            && self.torsion_violations.is_empty()
    }
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, k={}, |R|={})", self.name, self.rank(), self.size)
    }
}

impl FiniteRing {
    /// Builds a ring from raw structure constants.  Coordinates are reduced
    /// modulo the slot orders; shape problems are structural errors.
    pub fn new(
        name: impl Into<String>,
        basis: Vec<(String, u64)>,
        one: Vec<u64>,
        table: Vec<Vec<Vec<u64>>>,
    ) -> Result<Self, RingError> {
        let k = basis.len();
        for (n, m) in &basis {
            if *m < 2 {
                return Err(RingError::Structure(format!(
                    "basis generator {n} has order {m}; orders must be at least 2"
                )));
            }
            if *m > MAX_ORDER {
                return Err(RingError::Structure(format!(
                    "basis generator {n} has order {m}, above the supported maximum {MAX_ORDER}"
                )));
            }
        }
        if one.len() != k {
            return Err(RingError::Structure(format!(
                "identity vector has length {}, expected {k}",
                one.len()
            )));
        }
        if table.len() != k {
            return Err(RingError::Structure(format!(
                "multiplication table has {} rows, expected {k}",
                table.len()
            )));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != k {
                return Err(RingError::Structure(format!(
                    "multiplication table row {i} has {} entries, expected {k}",
                    row.len()
                )));
            }
            for (j, entry) in row.iter().enumerate() {
                if entry.len() != k {
                    return Err(RingError::Structure(format!(
                        "table entry ({i},{j}) has length {}, expected {k}",
                        entry.len()
                    )));
                }
            }
        }
        let orders: Vec<u64> = basis.iter().map(|(_, m)| *m).collect();
        let reduce = |v: Vec<u64>| -> Vec<u64> {
            v.into_iter().zip(&orders).map(|(c, &m)| c % m).collect()
        };
        let table: Vec<Vec<Vec<u64>>> = table
            .into_iter()
            .map(|row| row.into_iter().map(reduce).collect())
            .collect();
        let one = reduce(one);

        let size = orders.iter().try_fold(1u128, |acc, &m| {
            acc.checked_mul(m as u128)
        });
        let Some(size) = size else {
            return Err(RingError::Structure("ring size overflows u128".into()));
        };
        let exponent = orders.iter().copied().fold(1u64, lcm);
        let exponent_factors = factorize(exponent);

        Ok(FiniteRing {
            name: name.into(),
            basis_names: basis.into_iter().map(|(n, _)| n).collect(),
            orders,
            table,
            one,
            size,
            exponent,
            exponent_factors,
        })
    }

    /// The one-element ring (empty basis, 1 = 0).
    pub fn zero_ring() -> Self {
        FiniteRing::new("0", vec![], vec![], vec![]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Number of basis generators.
    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn size(&self) -> u128 {
        self.size
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn exponent_factors(&self) -> &[(u64, u32)] {
        &self.exponent_factors
    }

    /// Additive composition length: sum of Ω(m_i).  Bounds every strictly
    /// decreasing chain of subgroups, hence every nilpotency index.
    pub fn composition_length(&self) -> u32 {
        self.orders.iter().map(|&m| omega(m)).sum()
    }

    pub fn table_entry(&self, i: usize, j: usize) -> &[u64] {
        &self.table[i][j]
    }

    pub fn zero(&self) -> Element {
        Element {
            coords: vec![0; self.rank()],
        }
    }

    pub fn one(&self) -> Element {
        Element {
            coords: self.one.clone(),
        }
    }

    pub fn basis_element(&self, i: usize) -> Element {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        Element { coords }
    }

    /// Reduces arbitrary integer coordinates into the ring.
    pub fn element(&self, coords: &[i64]) -> Element {
        assert_eq!(coords.len(), self.rank(), "coordinate length mismatch");
        Element {
            coords: coords
                .iter()
                .zip(&self.orders)
                .map(|(&c, &m)| c.rem_euclid(m as i64) as u64)
                .collect(),
        }
    }

    pub fn is_zero(&self, x: &Element) -> bool {
        x.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, x: &Element, y: &Element) -> Element {
        assert_eq!(x.coords.len(), y.coords.len(), "element rank mismatch");
        Element {
            coords: x
                .coords
                .iter()
                .zip(&y.coords)
                .zip(&self.orders)
                .map(|((&a, &b), &m)| {
                    let s = a + b;
                    if s >= m {
                        s - m
                    } else {
                        s
                    }
                })
                .collect(),
        }
    }

    pub fn neg(&self, x: &Element) -> Element {
        Element {
            coords: x
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&a, &m)| if a == 0 { 0 } else { m - a })
                .collect(),
        }
    }

    pub fn sub(&self, x: &Element, y: &Element) -> Element {
        self.add(x, &self.neg(y))
    }

    /// Integer scalar action n·x.
    pub fn scalar(&self, n: i64, x: &Element) -> Element {
        Element {
            coords: x
                .coords
                .iter()
                .zip(&self.orders)
                .map(|(&a, &m)| {
                    ((n as i128 * a as i128).rem_euclid(m as i128)) as u64
                })
                .collect(),
        }
    }

    /// Bilinear product through the structure-constant table.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let mut out = self.zero();
        self.mul_into(x, y, &mut out);
        out
    }

    /// Product written into an existing buffer; the hot path for sweeps.
    pub fn mul_into(&self, x: &Element, y: &Element, out: &mut Element) {
        let k = self.rank();
        assert_eq!(x.coords.len(), k, "element rank mismatch");
        assert_eq!(y.coords.len(), k, "element rank mismatch");
        let mut acc = vec![0u128; k];
        for (i, &xi) in x.coords.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            let row = &self.table[i];
            for (j, &yj) in y.coords.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u128) * (yj as u128);
                let entry = &row[j];
                for l in 0..k {
                    let t = entry[l];
                    if t != 0 {
                        acc[l] += c % self.orders[l] as u128 * t as u128;
                    }
                }
            }
        }
        out.coords.resize(k, 0);
        for l in 0..k {
            out.coords[l] = (acc[l] % self.orders[l] as u128) as u64;
        }
    }

    /// Product of a list of elements, left to right; 1 for the empty list.
    pub fn product(&self, xs: &[&Element]) -> Element {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn is_idempotent(&self, e: &Element) -> bool {
        &self.mul(e, e) == e
    }

    /// Complement 1 − e.
    pub fn complement(&self, e: &Element) -> Element {
        self.sub(&self.one(), e)
    }

    /// e·x·e in one call.
    pub fn sandwich(&self, e: &Element, x: &Element) -> Element {
        self.mul(&self.mul(e, x), e)
    }

    /// Unit test by solving the regular representation: u invertible iff
    /// u·v = 1 has a solution, which in a finite ring forces v·u = 1 too.
    pub fn inverse(&self, u: &Element) -> Option<Element> {
        let k = self.rank();
        if k == 0 {
            return Some(self.zero());
        }
        // Row j of the system is u·b_j; coefficients v_j then give u·v.
        let rows: Vec<Vec<i128>> = (0..k)
            .map(|j| {
                self.mul(u, &self.basis_element(j))
                    .coords
                    .iter()
                    .map(|&c| c as i128)
                    .collect()
            })
            .collect();
        let target: Vec<i128> = self.one.iter().map(|&c| c as i128).collect();
        let y = nf::solve_mod(&rows, &self.orders, &target)?;
        let v = Element {
            coords: y
                .iter()
                .zip(&self.orders)
                .map(|(&c, &m)| c.rem_euclid(m as i128) as u64)
                .collect(),
        };
        debug_assert_eq!(self.mul(u, &v), self.one());
        debug_assert_eq!(self.mul(&v, u), self.one());
        Some(v)
    }

    pub fn is_unit(&self, u: &Element) -> bool {
        self.inverse(u).is_some()
    }

    /// Sweep index of an element: mixed-radix with the first coordinate as
    /// the least significant digit.  This is the deterministic element order
    /// used by every exhaustive operation.
    pub fn index_of(&self, x: &Element) -> u128 {
        let mut idx = 0u128;
        let mut w = 1u128;
        for (c, &m) in x.coords.iter().zip(&self.orders) {
            idx += *c as u128 * w;
            w *= m as u128;
        }
        idx
    }

    pub fn element_at(&self, mut idx: u128) -> Element {
        let coords = self
            .orders
            .iter()
            .map(|&m| {
                let c = (idx % m as u128) as u64;
                idx /= m as u128;
                c
            })
            .collect();
        Element { coords }
    }

    /// Iterates every element in sweep order.  Only usable when the size has
    /// been checked against a cap by the caller.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        ElementIter {
            ring: self,
            next: Some(self.zero()),
        }
    }

    /// Advances a coordinate vector to the next element in sweep order.
    /// Returns false when the sweep wrapped around.
    pub fn advance(&self, x: &mut Element) -> bool {
        for (c, &m) in x.coords.iter_mut().zip(&self.orders) {
            *c += 1;
            if *c < m {
                return true;
            }
            *c = 0;
        }
        false
    }

    /// Full axiom sweep: associativity on all basis triples, identity on all
    /// generators, and order-compatibility of every product (which is what
    /// makes the bilinear extension, and hence distributivity, well-defined).
    pub fn verify_axioms(&self) -> AxiomReport {
        let k = self.rank();
        let mut report = AxiomReport::default();
        for i in 0..k {
            for j in 0..k {
                let entry = &self.table[i][j];
                let mi = self.orders[i] as u128;
                let mj = self.orders[j] as u128;
                let killed = entry.iter().zip(&self.orders).all(|(&c, &m)| {
                    (mi * c as u128) % m as u128 == 0 && (mj * c as u128) % m as u128 == 0
                });
                if !killed {
                    report.torsion_violations.push((i, j));
                }
            }
        }
        let one = self.one();
        for i in 0..k {
            let b = self.basis_element(i);
            if self.mul(&one, &b) != b || self.mul(&b, &one) != b {
                report.identity_violations.push(i);
            }
        }
        for i in 0..k {
            for j in 0..k {
                let ij = Element {
                    coords: self.table[i][j].clone(),
                };
                for l in 0..k {
                    let bl = self.basis_element(l);
                    let lhs = self.mul(&ij, &bl);
                    let jl = Element {
                        coords: self.table[j][l].clone(),
                    };
                    let rhs = self.mul(&self.basis_element(i), &jl);
                    if lhs != rhs {
                        report.associativity_violations.push((i, j, l));
                    }
                }
            }
        }
        report
    }

    /// Renders an element as a combination of named basis generators.
    pub fn format_element(&self, x: &Element) -> String {
        let terms: Vec<String> = x
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.basis_names[i].clone()
                } else {
                    format!("{c}·{}", self.basis_names[i])
                }
            })
            .collect();
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }
}

struct ElementIter<'a> {
    ring: &'a FiniteRing,
    next: Option<Element>,
}

impl Iterator for ElementIter<'_> {
    type Item = Element;
    fn next(&mut self) -> Option<Element> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if self.ring.advance(&mut succ) {
            self.next = Some(succ);
        }
        Some(current)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn omega(mut m: u64) -> u32 {
    let mut count = 0;
    let mut p = 2;
    while p * p <= m {
        while m % p == 0 {
            m /= p;
            count += 1;
        }
        p += 1;
    }
    if m > 1 {
        count += 1;
    }
    count
}

/// Prime factorization by trial division; orders are small by construction.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut a = 0;
            while n % p == 0 {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Z/m as a structure-constant ring.
pub fn zmod(m: u64) -> FiniteRing {
    FiniteRing::new(
        format!("Z/{m}"),
        vec![("1".to_string(), m)],
        vec![1],
        vec![vec![vec![1]]],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zmod_arithmetic() {
        let r = zmod(8);
        let x = r.element(&[3]);
        let y = r.element(&[5]);
        assert_eq!(r.mul(&x, &y), r.element(&[7]));
        assert_eq!(r.add(&x, &y), r.element(&[0]));
        assert!(r.verify_axioms().is_ok());
    }

    #[test]
    fn zmod6_axioms_and_corruption() {
        let r = zmod(6);
        assert!(r.verify_axioms().is_ok());

        let bad = FiniteRing::new(
            "Z/6-corrupt",
            vec![("1".to_string(), 6)],
            vec![1],
            vec![vec![vec![2]]],
        )
        .unwrap();
        let report = bad.verify_axioms();
        assert!(!report.is_ok());
        // x·y = 2xy is still associative; only the identity axiom breaks.
        assert_eq!(report.identity_violations, vec![0]);
        assert!(report.associativity_violations.is_empty());
    }

    #[test]
    fn units_of_z8() {
        let r = zmod(8);
        let three = r.element(&[3]);
        assert_eq!(r.inverse(&three), Some(three.clone()));
        assert!(!r.is_unit(&r.element(&[2])));
    }

    #[test]
    fn unit_agrees_with_exhaustive_search() {
        let r = zmod(12);
        for u in r.elements() {
            let brute = r.elements().find(|v| {
                r.mul(&u, v) == r.one() && r.mul(v, &u) == r.one()
            });
            assert_eq!(r.inverse(&u), brute, "unit mismatch at {u:?}");
        }
    }

    #[test]
    fn degenerate_ring() {
        let r = FiniteRing::zero_ring();
        assert_eq!(r.size(), 1);
        assert_eq!(r.one(), r.zero());
        assert!(r.verify_axioms().is_ok());
        assert!(r.is_unit(&r.zero()));
        assert_eq!(r.elements().count(), 1);
    }

    #[test]
    fn sweep_order_is_little_endian() {
        let r = FiniteRing::new(
            "test",
            vec![("a".to_string(), 2), ("b".to_string(), 3)],
            vec![1, 0],
            vec![
                vec![vec![1, 0], vec![0, 1]],
                vec![vec![0, 1], vec![0, 0]],
            ],
        )
        .unwrap();
        let all: Vec<Element> = r.elements().collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].coords, vec![0, 0]);
        assert_eq!(all[1].coords, vec![1, 0]);
        assert_eq!(all[2].coords, vec![0, 1]);
        assert_eq!(r.index_of(&all[5]), 5);
        assert_eq!(r.element_at(3), all[3]);
    }

    #[test]
    fn torsion_violation_detected() {
        // b·b = c where c has order 4 but b has order 2: not bilinear.
        let bad = FiniteRing::new(
            "bad",
            vec![("b".to_string(), 2), ("c".to_string(), 4)],
            vec![0, 1],
            vec![
                vec![vec![0, 1], vec![1, 0]],
                vec![vec![1, 0], vec![0, 1]],
            ],
        )
        .unwrap();
        let report = bad.verify_axioms();
        assert!(report.torsion_violations.contains(&(0, 0)));
    }
}
