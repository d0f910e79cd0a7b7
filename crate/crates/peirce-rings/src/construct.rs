//! Builders for the ring families used throughout: full and triangular
//! matrix rings, direct products, subrings of matrix rings cut out by ideal
//! grids, and general block rings assembled from diagonal rings, bimodules
//! and bilinear pairings.

use crate::error::RingError;
use crate::ring::{Element, FiniteRing};
use std::collections::BTreeMap;

/// Bimodule data for one off-diagonal block M_ij: generator orders, the left
/// action of R_i and the right action of R_j, both given on generators and
/// extended bilinearly.
#[derive(Clone, Debug, Default)]
pub struct BimoduleSpec {
    pub orders: Vec<u64>,
    /// left[r][g] = coordinates in M_ij of (basis r of R_i)·(generator g).
    pub left: Vec<Vec<Vec<u64>>>,
    /// right[g][r] = coordinates in M_ij of (generator g)·(basis r of R_j).
    pub right: Vec<Vec<Vec<u64>>>,
}

/// A block ring [R_i | M_ij] with bilinear pairings M_ij × M_jl → M_il.
/// Missing modules are zero; missing pairings are the zero map.
#[derive(Clone, Debug)]
pub struct GenMatrixSpec {
    pub n: usize,
    pub diagonal: Vec<FiniteRing>,
    /// Keyed by (i, j), 0-based, i ≠ j.
    pub modules: BTreeMap<(usize, usize), BimoduleSpec>,
    /// pairing[(i, j, l)][g][h] = coordinates of (gen g of M_ij)·(gen h of
    /// M_jl) in M_il, or in R_i when i = l.  Only keys with i ≠ j, j ≠ l are
    /// meaningful.
    pub pairings: BTreeMap<(usize, usize, usize), Vec<Vec<Vec<u64>>>>,
}

impl GenMatrixSpec {
    /// A spec with the given diagonal and all modules and pairings zero.
    pub fn trivial(diagonal: Vec<FiniteRing>) -> GenMatrixSpec {
        GenMatrixSpec {
            n: diagonal.len(),
            diagonal,
            modules: BTreeMap::new(),
            pairings: BTreeMap::new(),
        }
    }
}

/// Identifies one basis slot of the assembled block ring.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Slot {
    Diag { block: usize, gen: usize },
    Module { i: usize, j: usize, gen: usize },
}

/// Assembles the block ring.  Associativity, identity and bilinearity are
/// verified on all generator triples; a violation is reported with the
/// offending blocks.
pub fn gen_matrix(spec: &GenMatrixSpec) -> Result<FiniteRing, RingError> {
    let n = spec.n;
    if n == 0 || spec.diagonal.len() != n {
        return Err(RingError::InvalidGenMatrix(format!(
            "need n ≥ 1 diagonal rings, got n={n} with {} rings",
            spec.diagonal.len()
        )));
    }
    for (&(i, j), m) in &spec.modules {
        if i >= n || j >= n || i == j {
            return Err(RingError::InvalidGenMatrix(format!(
                "module index ({i},{j}) out of range for n={n}"
            )));
        }
        let (ri, rj, g) = (spec.diagonal[i].rank(), spec.diagonal[j].rank(), m.orders.len());
        if m.left.len() != ri
            || m.left.iter().any(|row| row.len() != g || row.iter().any(|v| v.len() != g))
            || m.right.len() != g
            || m.right.iter().any(|row| row.len() != rj || row.iter().any(|v| v.len() != g))
        {
            return Err(RingError::InvalidGenMatrix(format!(
                "module ({i},{j}) action tables have inconsistent shape"
            )));
        }
    }

    // Lay out the basis: diagonal blocks first, then modules in key order.
    let mut slots: Vec<Slot> = Vec::new();
    let mut names: Vec<(String, u64)> = Vec::new();
    let mut diag_start = vec![0usize; n];
    for (b, ring) in spec.diagonal.iter().enumerate() {
        diag_start[b] = slots.len();
        for (g, name) in ring.basis_names().iter().enumerate() {
            slots.push(Slot::Diag { block: b, gen: g });
            names.push((format!("r{}.{}", b + 1, name), ring.orders()[g]));
        }
    }
    let mut module_start: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (&(i, j), m) in &spec.modules {
        module_start.insert((i, j), slots.len());
        for (g, &o) in m.orders.iter().enumerate() {
            slots.push(Slot::Module { i, j, gen: g });
            names.push((format!("m{}{}.g{}", i + 1, j + 1, g), o));
        }
    }
    let k = slots.len();

    let module_rank = |i: usize, j: usize| -> usize {
        spec.modules.get(&(i, j)).map_or(0, |m| m.orders.len())
    };
    // Embeds a coordinate vector of one block into the big ring.
    let place_diag = |block: usize, coords: &[u64], out: &mut Vec<u64>| {
        for (g, &c) in coords.iter().enumerate() {
            out[diag_start[block] + g] = c;
        }
    };
    let place_module = |i: usize, j: usize, coords: &[u64], out: &mut Vec<u64>| {
        let s = module_start[&(i, j)];
        for (g, &c) in coords.iter().enumerate() {
            out[s + g] = c;
        }
    };

    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for (a, sa) in slots.iter().enumerate() {
        for (b, sb) in slots.iter().enumerate() {
            let out = &mut table[a][b];
            match (sa, sb) {
                (Slot::Diag { block: p, gen: u }, Slot::Diag { block: q, gen: v }) => {
                    if p == q {
                        place_diag(*p, spec.diagonal[*p].table_entry(*u, *v), out);
                    }
                }
                (Slot::Diag { block: p, gen: u }, Slot::Module { i, j, gen: g }) => {
                    if p == i {
                        let m = &spec.modules[&(*i, *j)];
                        place_module(*i, *j, &m.left[*u][*g], out);
                    }
                }
                (Slot::Module { i, j, gen: g }, Slot::Diag { block: q, gen: v }) => {
                    if j == q {
                        let m = &spec.modules[&(*i, *j)];
                        place_module(*i, *j, &m.right[*g][*v], out);
                    }
                }
                (Slot::Module { i, j, gen: g }, Slot::Module { i: j2, j: l, gen: h }) => {
                    if j == j2 {
                        if let Some(p) = spec.pairings.get(&(*i, *j, *l)) {
                            let coords = p
                                .get(*g)
                                .and_then(|row| row.get(*h))
                                .ok_or_else(|| {
                                    RingError::InvalidGenMatrix(format!(
                                        "pairing ({},{},{}) missing entry for generators ({g},{h})",
                                        i + 1, j + 1, l + 1
                                    ))
                                })?;
                            if *i == *l {
                                if coords.len() != spec.diagonal[*i].rank() {
                                    return Err(RingError::InvalidGenMatrix(format!(
                                        "pairing ({},{},{}) target has wrong length",
                                        i + 1, j + 1, l + 1
                                    )));
                                }
                                place_diag(*i, coords, out);
                            } else {
                                if coords.len() != module_rank(*i, *l) {
                                    return Err(RingError::InvalidGenMatrix(format!(
                                        "pairing ({},{},{}) target has wrong length",
                                        i + 1, j + 1, l + 1
                                    )));
                                }
                                place_module(*i, *l, coords, out);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut one = vec![0u64; k];
    for (b, ring) in spec.diagonal.iter().enumerate() {
        place_diag(b, &ring.one().coords, &mut one);
    }

    let ring = FiniteRing::new(format!("GenMatrix{n}"), names, one, table)?;
    let report = ring.verify_axioms();
    if !report.is_ok() {
        let describe = |idx: usize| -> String {
            match &slots[idx] {
                Slot::Diag { block, gen } => format!("R_{}#{}", block + 1, gen),
                Slot::Module { i, j, gen } => format!("M_{}{}#{}", i + 1, j + 1, gen),
            }
        };
        let msg = if let Some(&(a, b, c)) = report.associativity_violations.first() {
            format!(
                "associativity fails on the generator triple ({}, {}, {})",
                describe(a),
                describe(b),
                describe(c)
            )
        } else if let Some(&(a, b)) = report.torsion_violations.first() {
            format!(
                "bilinear extension ill-defined on the generator pair ({}, {})",
                describe(a),
                describe(b)
            )
        } else {
            "identity axiom fails".to_string()
        };
        return Err(RingError::InvalidGenMatrix(msg));
    }
    Ok(ring)
}

fn slot_name(n: usize, s: usize, t: usize, base: &FiniteRing, g: usize) -> String {
    let cell = if n < 10 {
        format!("e{s}{t}")
    } else {
        format!("e{s}_{t}")
    };
    if base.rank() == 1 {
        cell
    } else {
        format!("{cell}.{}", base.basis_names()[g])
    }
}

/// n×n matrices over a base ring: basis E_st ⊗ b_g.
pub fn matrix_ring(n: usize, base: &FiniteRing) -> Result<FiniteRing, RingError> {
    block_matrix_ring(n, base, false)
}

/// Upper triangular n×n matrices over a base ring.
pub fn triangular_ring(n: usize, base: &FiniteRing) -> Result<FiniteRing, RingError> {
    block_matrix_ring(n, base, true)
}

fn block_matrix_ring(n: usize, base: &FiniteRing, upper: bool) -> Result<FiniteRing, RingError> {
    if n == 0 {
        return Err(RingError::Structure("matrix ring needs n ≥ 1".into()));
    }
    let kb = base.rank();
    let mut slots: Vec<(usize, usize, usize)> = Vec::new();
    for s in 1..=n {
        for t in 1..=n {
            if upper && s > t {
                continue;
            }
            for g in 0..kb {
                slots.push((s, t, g));
            }
        }
    }
    let k = slots.len();
    let index: BTreeMap<(usize, usize, usize), usize> = slots
        .iter()
        .enumerate()
        .map(|(idx, &key)| (key, idx))
        .collect();
    let names: Vec<(String, u64)> = slots
        .iter()
        .map(|&(s, t, g)| (slot_name(n, s, t, base, g), base.orders()[g]))
        .collect();
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for (a, &(s, t, u)) in slots.iter().enumerate() {
        for (b, &(t2, s2, v)) in slots.iter().enumerate() {
            if t != t2 {
                continue;
            }
            if upper && s > s2 {
                continue;
            }
            let prod = base.table_entry(u, v);
            for (g, &c) in prod.iter().enumerate() {
                if c != 0 {
                    table[a][b][index[&(s, s2, g)]] = c;
                }
            }
        }
    }
    let mut one = vec![0u64; k];
    for s in 1..=n {
        for (g, &c) in base.one().coords.iter().enumerate() {
            one[index[&(s, s, g)]] = c;
        }
    }
    let kind = if upper { "T" } else { "M" };
    FiniteRing::new(format!("{kind}{n}({})", base.name()), names, one, table)
}

/// Direct product of rings, componentwise.
pub fn direct_product(factors: &[FiniteRing]) -> Result<FiniteRing, RingError> {
    if factors.is_empty() {
        return Ok(FiniteRing::zero_ring());
    }
    let mut names: Vec<(String, u64)> = Vec::new();
    let mut offsets = Vec::new();
    for (p, f) in factors.iter().enumerate() {
        offsets.push(names.len());
        for (g, name) in f.basis_names().iter().enumerate() {
            let prefix = if factors.len() > 1 {
                format!("p{}.{}", p + 1, name)
            } else {
                name.clone()
            };
            names.push((prefix, f.orders()[g]));
        }
    }
    let k = names.len();
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    let mut one = vec![0u64; k];
    for (p, f) in factors.iter().enumerate() {
        let o = offsets[p];
        for u in 0..f.rank() {
            for v in 0..f.rank() {
                for (g, &c) in f.table_entry(u, v).iter().enumerate() {
                    table[o + u][o + v][o + g] = c;
                }
            }
            one[o + u] = f.one().coords[u];
        }
    }
    let name = factors
        .iter()
        .map(|f| f.name().to_string())
        .collect::<Vec<_>>()
        .join("×");
    FiniteRing::new(name, names, one, table)
}

/// Subring of M_n(Z/m) whose (i,j) entry ranges over the ideal d_ij·Z/m.
/// Requires d_ii = 1 and the closure condition d_il | d_ij·d_jl.
pub fn submatrix_ring(n: usize, m: u64, grid: &[Vec<u64>]) -> Result<FiniteRing, RingError> {
    if n == 0 || m < 2 {
        return Err(RingError::Structure(
            "submatrix ring needs n ≥ 1 and modulus ≥ 2".into(),
        ));
    }
    if grid.len() != n || grid.iter().any(|row| row.len() != n) {
        return Err(RingError::Structure(format!("grid must be {n}×{n}")));
    }
    // Normalize each entry to the canonical generator of its ideal.
    let d: Vec<Vec<u64>> = grid
        .iter()
        .map(|row| row.iter().map(|&x| gcd(x, m)).collect())
        .collect();
    for i in 0..n {
        if d[i][i] != 1 {
            return Err(RingError::Structure(format!(
                "diagonal entry ({},{}) must generate the full ring, got ideal {}·Z/{m}",
                i + 1,
                i + 1,
                d[i][i]
            )));
        }
    }
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let prod = d[i][j] as u128 * d[j][l] as u128;
                if prod % d[i][l] as u128 != 0 {
                    return Err(RingError::Structure(format!(
                        "grid not closed under multiplication at (i,j,l)=({},{},{}): {} ∤ {}·{}",
                        i + 1,
                        j + 1,
                        l + 1,
                        d[i][l],
                        d[i][j],
                        d[j][l]
                    )));
                }
            }
        }
    }

    // One cyclic generator d_ij·E_ij per slot with d_ij < m.
    let mut slots: Vec<(usize, usize)> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if d[i][j] < m {
                slots.push((i, j));
            }
        }
    }
    let index: BTreeMap<(usize, usize), usize> = slots
        .iter()
        .enumerate()
        .map(|(idx, &key)| (key, idx))
        .collect();
    let k = slots.len();
    let names: Vec<(String, u64)> = slots
        .iter()
        .map(|&(i, j)| {
            let nm = if n < 10 {
                format!("e{}{}", i + 1, j + 1)
            } else {
                format!("e{}_{}", i + 1, j + 1)
            };
            (nm, m / d[i][j])
        })
        .collect();
    let mut table = vec![vec![vec![0u64; k]; k]; k];
    for (a, &(i, j)) in slots.iter().enumerate() {
        for (b, &(j2, l)) in slots.iter().enumerate() {
            if j != j2 {
                continue;
            }
            // (d_ij·E_ij)(d_jl·E_jl) = (d_ij·d_jl/d_il)·(d_il·E_il).
            let coeff = (d[i][j] as u128 * d[j][l] as u128 / d[i][l] as u128)
                % (m / d[i][l]) as u128;
            if coeff != 0 {
                table[a][b][index[&(i, l)]] = coeff as u64;
            }
        }
    }
    let mut one = vec![0u64; k];
    for i in 0..n {
        one[index[&(i, i)]] = 1;
    }
    FiniteRing::new(format!("SubMatrix({n},{m})"), names, one, table)
}

fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

/// Block ring rebuilt from the four Peirce components of an idempotent:
/// 2×2 generalized matrix data with actions and pairings read off from the
/// ambient multiplication.
pub fn gen_matrix_from_blocks(
    ring: &FiniteRing,
    corner_a: &crate::corner::CornerRing,
    corner_b: &crate::corner::CornerRing,
    m_basis: &crate::corner::AbelianBasis,
    n_basis: &crate::corner::AbelianBasis,
) -> Result<FiniteRing, RingError> {
    let ra = &corner_a.ring;
    let rb = &corner_b.ring;
    let to_a = |x: &Element| corner_a.restrict(x).expect("product lands in eRe");
    let to_b = |x: &Element| corner_b.restrict(x).expect("product lands in (1-e)R(1-e)");

    let m_spec = BimoduleSpec {
        orders: m_basis.orders.clone(),
        left: (0..ra.rank())
            .map(|r| {
                let ar = corner_a.embed(&ra.basis_element(r));
                m_basis
                    .generators
                    .iter()
                    .map(|g| m_basis.express(&ring.mul(&ar, g)).expect("A·M ⊆ M"))
                    .collect()
            })
            .collect(),
        right: m_basis
            .generators
            .iter()
            .map(|g| {
                (0..rb.rank())
                    .map(|r| {
                        let br = corner_b.embed(&rb.basis_element(r));
                        m_basis.express(&ring.mul(g, &br)).expect("M·B ⊆ M")
                    })
                    .collect()
            })
            .collect(),
    };
    let n_spec = BimoduleSpec {
        orders: n_basis.orders.clone(),
        left: (0..rb.rank())
            .map(|r| {
                let br = corner_b.embed(&rb.basis_element(r));
                n_basis
                    .generators
                    .iter()
                    .map(|g| n_basis.express(&ring.mul(&br, g)).expect("B·N ⊆ N"))
                    .collect()
            })
            .collect(),
        right: n_basis
            .generators
            .iter()
            .map(|g| {
                (0..ra.rank())
                    .map(|r| {
                        let ar = corner_a.embed(&ra.basis_element(r));
                        n_basis.express(&ring.mul(g, &ar)).expect("N·A ⊆ N")
                    })
                    .collect()
            })
            .collect(),
    };
    let mut pairings = BTreeMap::new();
    pairings.insert(
        (0usize, 1usize, 0usize),
        m_basis
            .generators
            .iter()
            .map(|g| {
                n_basis
                    .generators
                    .iter()
                    .map(|h| to_a(&ring.mul(g, h)).coords)
                    .collect()
            })
            .collect(),
    );
    pairings.insert(
        (1usize, 0usize, 1usize),
        n_basis
            .generators
            .iter()
            .map(|g| {
                m_basis
                    .generators
                    .iter()
                    .map(|h| to_b(&ring.mul(g, h)).coords)
                    .collect()
            })
            .collect(),
    );
    let mut modules = BTreeMap::new();
    modules.insert((0usize, 1usize), m_spec);
    modules.insert((1usize, 0usize), n_spec);
    gen_matrix(&GenMatrixSpec {
        n: 2,
        diagonal: vec![ra.clone(), rb.clone()],
        modules,
        pairings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::zmod;

    #[test]
    fn m2_f2_is_16_elements() {
        let r = matrix_ring(2, &zmod(2)).unwrap();
        assert_eq!(r.size(), 16);
        assert!(r.verify_axioms().is_ok());
        // E12·E21 = E11.
        let e12 = r.basis_element(1);
        let e21 = r.basis_element(2);
        assert_eq!(r.mul(&e12, &e21), r.basis_element(0));
    }

    #[test]
    fn t2_f2_products() {
        let r = triangular_ring(2, &zmod(2)).unwrap();
        assert_eq!(r.size(), 8);
        assert!(r.verify_axioms().is_ok());
        // Basis order: e11, e12, e22.
        let e12 = r.basis_element(1);
        assert!(r.is_zero(&r.mul(&e12, &e12)));
        let u = r.element(&[1, 1, 1]); // [[1,1],[0,1]] is its own inverse
        assert_eq!(r.inverse(&u), Some(u.clone()));
    }

    #[test]
    fn direct_product_of_fields() {
        let r = direct_product(&[zmod(2), zmod(2)]).unwrap();
        assert_eq!(r.size(), 4);
        assert!(r.verify_axioms().is_ok());
        assert_eq!(r.one(), r.element(&[1, 1]));
    }

    #[test]
    fn submatrix_grid_closure_violation() {
        // (1,3) slot too small for the (1,2)(2,3) product route.
        let err = submatrix_ring(3, 8, &[
            vec![1, 1, 4],
            vec![1, 1, 1],
            vec![1, 1, 1],
        ])
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(1,2,3)"), "got: {msg}");
    }

    #[test]
    fn gallery_grid_sizes() {
        let w = submatrix_ring(3, 8, &[
            vec![1, 4, 2],
            vec![2, 1, 2],
            vec![2, 2, 1],
        ])
        .unwrap();
        assert_eq!(w.size(), 1 << 20);
        assert!(w.verify_axioms().is_ok());

        let f = submatrix_ring(3, 8, &[
            vec![1, 4, 2],
            vec![4, 1, 4],
            vec![4, 2, 1],
        ])
        .unwrap();
        assert_eq!(f.size(), 1 << 17);
        assert!(f.verify_axioms().is_ok());

        let z4 = submatrix_ring(2, 4, &[vec![1, 1], vec![2, 1]]).unwrap();
        assert_eq!(z4.size(), 128);
        assert!(z4.verify_axioms().is_ok());
    }

    #[test]
    fn gen_matrix_trivial_pairings() {
        let f2 = zmod(2);
        let mut spec = GenMatrixSpec::trivial(vec![f2.clone(), f2.clone()]);
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
        let r = gen_matrix(&spec).unwrap();
        assert_eq!(r.size(), 16);
        assert!(r.verify_axioms().is_ok());
        // Block identity e = diag(1,0) is an idempotent.
        let e = r.element(&[1, 0, 0, 0]);
        assert!(r.is_idempotent(&e));
    }

    #[test]
    fn gen_matrix_n1_is_diagonal() {
        let base = zmod(6);
        let r = gen_matrix(&GenMatrixSpec::trivial(vec![base.clone()])).unwrap();
        assert_eq!(r.size(), 6);
        assert_eq!(r.orders(), base.orders());
    }

    #[test]
    fn warning_product_value() {
        // In the 2^20-element grid ring: entry (1,3) value 2 times entry
        // (3,1) value 2 lands in (1,1) with value 4.
        let w = submatrix_ring(3, 8, &[
            vec![1, 4, 2],
            vec![2, 1, 2],
            vec![2, 2, 1],
        ])
        .unwrap();
        // slots row-major: e11,e12,e13,e21,e22,e23,e31,e32,e33
        // generator of (1,3) is 2·E13 (order 4); value 2 means coefficient 1.
        let x = w.element(&[0, 0, 1, 0, 0, 0, 0, 0, 0]);
        let y = w.element(&[0, 0, 0, 0, 0, 0, 1, 0, 0]);
        let p = w.mul(&x, &y);
        assert_eq!(p, w.element(&[4, 0, 0, 0, 0, 0, 0, 0, 0]));
    }
}
