use peirce_rings::gallery::gallery;
use peirce_rings::peirce::{peirce_dimension, complete_one_peirce_set};
use peirce_rings::corner::corner_ring;
use peirce_rings::Caps;
use std::time::Instant;

fn main() {
    let caps = Caps::default();
    for name in ["z4_not_1B", "four_peirce_z2", "family_nxn(3)", "warning2_3x3"] {
        let entry = gallery(name).unwrap();
        let t0 = Instant::now();
        let (dim, _) = peirce_dimension(&entry.ring, &caps).unwrap();
        println!("{name}: |R| = {}, dimension = {dim}, took {:?}", entry.ring.size(), t0.elapsed());
    }
    // Corner checks
    let w = gallery("warning2_3x3").unwrap();
    let f = w.ring.element(&[1,0,0,0,1,0,0,0,0]);
    let t0 = Instant::now();
    let c = corner_ring(&w.ring, &f).unwrap();
    let (cd, _) = peirce_dimension(&c.ring, &caps).unwrap();
    println!("warning2 corner |fRf| = {}, dimension = {cd}, took {:?}", c.ring.size(), t0.elapsed());

    let fp = gallery("four_peirce_z2").unwrap();
    let t0 = Instant::now();
    let rep = complete_one_peirce_set(&fp.ring, &caps).unwrap();
    println!("four_peirce set: {} leaves, partitions {:?}, took {:?}", rep.idempotent_set.len(), rep.partitions, t0.elapsed());
    if let Some((d, n)) = rep.d_minus { println!("  D- size {} nilpotency {:?}", d.size(), n); }
}
