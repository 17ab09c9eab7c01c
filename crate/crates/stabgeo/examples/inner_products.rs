//! Exact inner products, neighbor classes and nearest neighbors.

use stabgeo::bench::{ghz, random_state};
use stabgeo::geometry::{inner_product_abs, inner_product_complex, k_neighbor_class, nearest_neighbors, sum_basis_states};
use stabgeo::StabilizerMatrix;

fn main() -> stabgeo::Result<()> {
    let plus = StabilizerMatrix::from_strs(&["XI", "IX"])?;
    let bell = StabilizerMatrix::from_strs(&["XX", "ZZ"])?;
    let y = StabilizerMatrix::from_strs(&["YI", "IY"])?;
    for (name, s) in [("|++>", &plus), ("Bell", &bell), ("|y+ y+>", &y)] {
        println!(
            "<00|{name}> = {}   |.| = {}   class {:?}",
            inner_product_complex(&StabilizerMatrix::zero_state(2), s)?,
            inner_product_abs(&StabilizerMatrix::zero_state(2), s)?,
            k_neighbor_class(&StabilizerMatrix::zero_state(2), s)?,
        );
    }

    // (|b1> + i^t |b2>)/√2 for b1 = 000, b2 = 111
    for t in 0..4 {
        println!("\n|000> + i^{t}|111>:\n{}", sum_basis_states(3, 0, 0b111, t)?);
    }

    println!("nearest neighbors of |000>: {}", nearest_neighbors(&StabilizerMatrix::zero_state(3))?.len());

    for n in [50, 100, 200] {
        let r = random_state(n, 2.0, 7)?;
        println!("n = {n}: |<GHZ|random>| = {}", inner_product_abs(&ghz(n), &r)?);
    }
    Ok(())
}
