//! Named example rings with machine-readable expected facts.  Every fact
//! carries a provenance tag so a failing check distinguishes "disagrees
//! with the literature value" from "disagrees with our own derivation".

use crate::construct::{
    gen_matrix, matrix_ring, submatrix_ring, triangular_ring, BimoduleSpec, GenMatrixSpec,
};
use crate::error::RingError;
use crate::ring::{factorize, zmod, Element, FiniteRing};
use serde::Serialize;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// Stated in the source material for this example.
    Literature,
    /// Derived independently (by hand or by the element-level oracle) and
    /// frozen here.
    Independent,
}

/// A single expected fact about a gallery ring.
#[derive(Clone, Debug)]
pub struct Expectation {
    pub name: String,
    pub provenance: Provenance,
    pub check: ExpectedFact,
}

#[derive(Clone, Debug)]
pub enum ExpectedFact {
    SizeIs(u128),
    PeirceDimensionIs(u32),
    /// The corner at the given idempotent has the given Peirce dimension.
    CornerDimension { idempotent: Element, dimension: u32 },
    /// The idempotent splits as the given orthogonal parts (which must be
    /// idempotent, orthogonal, and sum to it).
    SplitsAs { idempotent: Element, parts: Vec<Element> },
    /// Exhaustively: no Peirce trivial idempotent has a corner of the given
    /// Peirce dimension.
    NoPeirceTrivialWithCornerDimension(u32),
    /// The idempotent is B-trivial but not Peirce trivial.
    BTrivialNotPeirceTrivial { idempotent: Element },
    BDimensionIs(u32),
    /// The dyadic chain produced by the decomposition has these partitions.
    DyadicChainIs(Vec<Vec<Vec<usize>>>),
    IdempotentCountIs(u64),
}

/// A gallery ring with its expectations.
#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub ring: FiniteRing,
    pub expectations: Vec<Expectation>,
}

/// The names `gallery` accepts.
pub const GALLERY_NAMES: &[&str] = &[
    "warning2_3x3",
    "family_nxn(3)",
    "four_peirce_z2",
    "z4_not_1B",
    "t2_field(q)",
    "m2_field(q)",
];

fn exp(name: &str, provenance: Provenance, check: ExpectedFact) -> Expectation {
    Expectation {
        name: name.to_string(),
        provenance,
        check,
    }
}

/// 3×3 grid ring over Z/8 with 2^20 elements: 1-Peirce, yet the corner at
/// diag(1,1,0) is 2-Peirce.
pub fn warning2_3x3() -> GalleryEntry {
    let mut ring =
        submatrix_ring(3, 8, &[vec![1, 4, 2], vec![2, 1, 2], vec![2, 2, 1]]).unwrap();
    ring.set_name("warning2_3x3");
    // Basis slots row-major: e11,e12,e13,e21,e22,e23,e31,e32,e33.
    let f = ring.element(&[1, 0, 0, 0, 1, 0, 0, 0, 0]);
    let f1 = ring.element(&[1, 0, 0, 0, 0, 0, 0, 0, 0]);
    let f2 = ring.element(&[0, 0, 0, 0, 1, 0, 0, 0, 0]);
    let expectations = vec![
        exp("|R| = 2^20", Provenance::Literature, ExpectedFact::SizeIs(1 << 20)),
        exp(
            "R is 1-Peirce",
            Provenance::Literature,
            ExpectedFact::PeirceDimensionIs(1),
        ),
        exp(
            "fRf is 2-Peirce for f = diag(1,1,0)",
            Provenance::Literature,
            ExpectedFact::CornerDimension {
                idempotent: f.clone(),
                dimension: 2,
            },
        ),
        exp(
            "f = f1 + f2 as displayed",
            Provenance::Literature,
            ExpectedFact::SplitsAs {
                idempotent: f,
                parts: vec![f1, f2],
            },
        ),
    ];
    GalleryEntry { ring, expectations }
}

/// The n×n family instance for n = 3 over Z/8 (X = 2A, Y = 4A), 2^17
/// elements: 1-Peirce with a 2-Peirce corner.
pub fn family_nxn_3() -> GalleryEntry {
    let mut ring =
        submatrix_ring(3, 8, &[vec![1, 4, 2], vec![4, 1, 4], vec![4, 2, 1]]).unwrap();
    ring.set_name("family_nxn(3)");
    let f = ring.element(&[1, 0, 0, 0, 1, 0, 0, 0, 0]);
    let expectations = vec![
        exp(
            "|R| = 2^17",
            Provenance::Independent,
            ExpectedFact::SizeIs(1 << 17),
        ),
        exp(
            "R is 1-Peirce",
            Provenance::Literature,
            ExpectedFact::PeirceDimensionIs(1),
        ),
        exp(
            "fRf is 2-Peirce for f = diag(1,1,0)",
            Provenance::Literature,
            ExpectedFact::CornerDimension {
                idempotent: f,
                dimension: 2,
            },
        ),
    ];
    GalleryEntry { ring, expectations }
}

/// The general n×n family grid (main diagonal A, last column X^i, last row
/// X^{n-i}, Y elsewhere) over Z/2^n.  The literal pattern fails the closure
/// condition for n ≥ 4, which `submatrix_ring` reports; only the n = 3
/// instance is a verified gallery member.
pub fn family_nxn_grid(n: usize) -> Result<FiniteRing, RingError> {
    if n < 2 {
        return Err(RingError::Structure("family needs n ≥ 2".into()));
    }
    let m = 1u64 << n;
    let y = 1u64 << (n - 1);
    let mut grid = vec![vec![y; n]; n];
    #[allow(clippy::needless_range_loop)]
    for i in 0..n {
        grid[i][i] = 1;
        if i < n - 1 {
            grid[i][n - 1] = 1 << (i + 1); // X^{i+1}
            grid[n - 1][i] = 1 << (n - 1 - i); // X^{n-1-i}
        }
    }
    submatrix_ring(n, m, &grid)
}

/// 2×2 block ring over K = F2 with every pairing zero, nested twice:
/// a 4-Peirce ring with 2^16 elements whose dyadic chain is
/// {1,2,3,4} → {1,2},{3,4} → singletons, and no Peirce trivial idempotent
/// with a 3-Peirce corner.
pub fn four_peirce_z2() -> GalleryEntry {
    let k = zmod(2);
    let a = trivial_pair_block(&k, &k);
    let mut spec = GenMatrixSpec::trivial(vec![a.clone(), a.clone()]);
    // M = N = A as (A,A)-bimodules: actions are multiplication in A.
    let module = BimoduleSpec {
        orders: a.orders().to_vec(),
        left: (0..a.rank())
            .map(|r| {
                (0..a.rank())
                    .map(|g| a.table_entry(r, g).to_vec())
                    .collect()
            })
            .collect(),
        right: (0..a.rank())
            .map(|g| {
                (0..a.rank())
                    .map(|r| a.table_entry(g, r).to_vec())
                    .collect()
            })
            .collect(),
    };
    spec.modules.insert((0, 1), module.clone());
    spec.modules.insert((1, 0), module);
    let mut ring = gen_matrix(&spec).unwrap();
    ring.set_name("four_peirce_z2");
    let expectations = vec![
        exp(
            "|R| = 2^16",
            Provenance::Independent,
            ExpectedFact::SizeIs(1 << 16),
        ),
        exp(
            "R is 4-Peirce",
            Provenance::Literature,
            ExpectedFact::PeirceDimensionIs(4),
        ),
        exp(
            "dyadic chain {1,2,3,4} → {1,2},{3,4} → {1},{2},{3,4} → singletons",
            Provenance::Literature,
            ExpectedFact::DyadicChainIs(vec![
                vec![vec![1, 2, 3, 4]],
                vec![vec![1, 2], vec![3, 4]],
                vec![vec![1], vec![2], vec![3, 4]],
                vec![vec![1], vec![2], vec![3], vec![4]],
            ]),
        ),
        exp(
            "no Peirce trivial idempotent has a 3-Peirce corner",
            Provenance::Literature,
            ExpectedFact::NoPeirceTrivialWithCornerDimension(3),
        ),
    ];
    GalleryEntry { ring, expectations }
}

/// 2×2 block ring [[A, A],[N, B]] over two copies of a base field with both
/// pairings zero and the obvious module structure.
fn trivial_pair_block(a: &FiniteRing, b: &FiniteRing) -> FiniteRing {
    let mut spec = GenMatrixSpec::trivial(vec![a.clone(), b.clone()]);
    for key in [(0usize, 1usize), (1usize, 0usize)] {
        spec.modules.insert(
            key,
            BimoduleSpec {
                orders: vec![2],
                left: vec![vec![vec![1]]],
                right: vec![vec![vec![1]]],
            },
        );
    }
    gen_matrix(&spec).unwrap()
}

/// [[A, A],[2A, A]] over A = Z/4: a 1-Peirce ring that is not 1-B, with
/// E11 a B-trivial idempotent and B-dimension 2.
pub fn z4_not_1b() -> GalleryEntry {
    let mut ring = submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap();
    ring.set_name("z4_not_1B");
    let e11 = ring.basis_element(0);
    let expectations = vec![
        exp(
            "|R| = 128",
            Provenance::Independent,
            ExpectedFact::SizeIs(128),
        ),
        exp(
            "R is 1-Peirce",
            Provenance::Literature,
            ExpectedFact::PeirceDimensionIs(1),
        ),
        exp(
            "E11 is B-trivial but not Peirce trivial",
            Provenance::Literature,
            ExpectedFact::BTrivialNotPeirceTrivial { idempotent: e11 },
        ),
        exp(
            "B-dimension is 2",
            Provenance::Independent,
            ExpectedFact::BDimensionIs(2),
        ),
    ];
    GalleryEntry { ring, expectations }
}

/// Upper triangular 2×2 matrices over F_q (q prime).
pub fn t2_field(q: u64) -> Result<GalleryEntry, RingError> {
    require_prime(q)?;
    let mut ring = triangular_ring(2, &zmod(q))?;
    ring.set_name(format!("t2_field({q})"));
    let expectations = vec![
        exp(
            "|R| = q^3",
            Provenance::Independent,
            ExpectedFact::SizeIs((q as u128).pow(3)),
        ),
        exp(
            "R is 2-Peirce",
            Provenance::Independent,
            ExpectedFact::PeirceDimensionIs(2),
        ),
        exp(
            "idempotent count 2 + 2q",
            Provenance::Independent,
            ExpectedFact::IdempotentCountIs(2 + 2 * q),
        ),
    ];
    Ok(GalleryEntry { ring, expectations })
}

/// Full 2×2 matrices over F_q (q prime).
pub fn m2_field(q: u64) -> Result<GalleryEntry, RingError> {
    require_prime(q)?;
    let mut ring = matrix_ring(2, &zmod(q))?;
    ring.set_name(format!("m2_field({q})"));
    let expectations = vec![
        exp(
            "|R| = q^4",
            Provenance::Independent,
            ExpectedFact::SizeIs((q as u128).pow(4)),
        ),
        exp(
            "R is 1-Peirce",
            Provenance::Literature,
            ExpectedFact::PeirceDimensionIs(1),
        ),
        exp(
            "idempotent count 2 + q(q+1)",
            Provenance::Independent,
            ExpectedFact::IdempotentCountIs(2 + q * (q + 1)),
        ),
    ];
    Ok(GalleryEntry { ring, expectations })
}

fn require_prime(q: u64) -> Result<(), RingError> {
    let f = factorize(q);
    if q < 2 || f.len() != 1 || f[0].1 != 1 {
        return Err(RingError::Structure(format!("{q} is not prime")));
    }
    Ok(())
}

/// Looks up a gallery ring by name.  Parameterized names take the forms
/// `family_nxn(3)`, `t2_field(q)`, `m2_field(q)` with q prime.
pub fn gallery(name: &str) -> Result<GalleryEntry, RingError> {
    match name {
        "warning2_3x3" => return Ok(warning2_3x3()),
        "four_peirce_z2" => return Ok(four_peirce_z2()),
        "z4_not_1B" => return Ok(z4_not_1b()),
        _ => {}
    }
    if let Some(arg) = parse_call(name, "family_nxn") {
        return if arg == 3 {
            Ok(family_nxn_3())
        } else {
            Err(RingError::Structure(format!(
                "family_nxn({arg}) is not part of the verified gallery; only n = 3 is \
                 (the general grid is available as a constructor and is closure-checked there)"
            )))
        };
    }
    if let Some(q) = parse_call(name, "t2_field") {
        return t2_field(q);
    }
    if let Some(q) = parse_call(name, "m2_field") {
        return m2_field(q);
    }
    Err(RingError::UnknownGallery(name.to_string()))
}

fn parse_call(text: &str, head: &str) -> Option<u64> {
    let rest = text.strip_prefix(head)?;
    let inner = rest.strip_prefix('(')?.strip_suffix(')')?;
    inner.trim().parse().ok()
}

/// The standard instances the test suites iterate over.
pub fn standard_gallery() -> Vec<GalleryEntry> {
    vec![
        gallery("warning2_3x3").unwrap(),
        gallery("family_nxn(3)").unwrap(),
        gallery("four_peirce_z2").unwrap(),
        gallery("z4_not_1B").unwrap(),
        gallery("t2_field(2)").unwrap(),
        gallery("t2_field(3)").unwrap(),
        gallery("m2_field(2)").unwrap(),
        gallery("m2_field(3)").unwrap(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_gallery_rings_pass_axioms() {
        for entry in standard_gallery() {
            assert!(
                entry.ring.verify_axioms().is_ok(),
                "axioms fail for {}",
                entry.ring.name()
            );
        }
    }

    #[test]
    fn gallery_sizes() {
        assert_eq!(gallery("warning2_3x3").unwrap().ring.size(), 1 << 20);
        assert_eq!(gallery("family_nxn(3)").unwrap().ring.size(), 1 << 17);
        assert_eq!(gallery("four_peirce_z2").unwrap().ring.size(), 1 << 16);
        assert_eq!(gallery("z4_not_1B").unwrap().ring.size(), 128);
        assert_eq!(gallery("t2_field(2)").unwrap().ring.size(), 8);
        assert_eq!(gallery("m2_field(2)").unwrap().ring.size(), 16);
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(gallery("nope").is_err());
        assert!(gallery("t2_field(4)").is_err());
        assert!(gallery("family_nxn(4)").is_err());
    }

    #[test]
    fn family_grid_closure_fails_for_n4_literal_pattern() {
        // The displayed pattern does not close for n = 4; the constructor
        // must say which triple breaks.
        let err = family_nxn_grid(4).unwrap_err();
        assert!(err.to_string().contains("not closed"));
    }

    #[test]
    fn four_peirce_block_identity_is_trivial() {
        let entry = four_peirce_z2();
        let r = &entry.ring;
        // Identity of the A block: first two diagonal slots of A.
        let mut coords = vec![0i64; r.rank()];
        coords[0] = 1;
        coords[1] = 1;
        let e = r.element(&coords);
        assert!(r.is_idempotent(&e));
        let cls = crate::peirce::classify_peirce(r, &e).unwrap();
        assert!(cls.is_trivial());
    }
}
