//! Wedge products of stabilizer states and when they are stabilizer states.

use stabgeo::census::enumerate_states;
use stabgeo::geometry::{bivector, k_neighbor_class, wedge_norm, NeighborClass};
use stabgeo::StabilizerMatrix;

fn main() -> stabgeo::Result<()> {
    let psi = StabilizerMatrix::from_strs(&["XX", "ZZ"])?;
    let phi = StabilizerMatrix::from_strs(&["-XX", "ZZ"])?;
    println!("|00>+|11> ∧ |00>-|11>, norm {}:\n{}", wedge_norm(&psi, &phi)?, bivector(&psi, &phi)?);

    let ten = StabilizerMatrix::basis_state(2, 0b10)?;
    println!("|00>+|11> ∧ |10>: {:?}", bivector(&psi, &ten).err());

    let zero = StabilizerMatrix::zero_state(2);
    let (mut partners, mut by_class) = (0, std::collections::BTreeMap::new());
    for s in enumerate_states(2)? {
        let class = k_neighbor_class(&zero, &s)?;
        if class == NeighborClass::Parallel {
            continue;
        }
        let ok = bivector(&zero, &s).is_ok();
        partners += usize::from(ok);
        let e = by_class.entry(format!("{class:?}")).or_insert((0, 0));
        e.0 += usize::from(ok);
        e.1 += 1;
    }
    println!("|00> has {partners} bivector partners");
    for (class, (ok, all)) in by_class {
        println!("  {class:<12} {ok:>3} of {all}");
    }
    Ok(())
}
