//! Sums of stabilizer states: orthogonal decomposition and linear dependence.

use stabgeo::geometry::{gramian_dependent, orthogonalize, sum_to_dense, StabilizerSum};
use stabgeo::{Cyclo, StabilizerMatrix};

fn main() -> stabgeo::Result<()> {
    let mut sum = StabilizerSum::new(2);
    sum.insert(Cyclo::one(), &StabilizerMatrix::zero_state(2))?;
    sum.insert(Cyclo::one(), &StabilizerMatrix::from_strs(&["XX", "ZZ"])?)?;
    sum.insert(Cyclo::i_pow(1), &StabilizerMatrix::from_strs(&["YI", "IX"])?)?;

    let out = orthogonalize(&sum)?;
    println!("{} terms become {} pairwise orthogonal terms:", sum.len(), out.len());
    for (c, m) in &out.terms {
        println!("coefficient {c}\n{m}");
    }
    assert_eq!(sum_to_dense(&sum)?, sum_to_dense(&out)?);

    // |00>, |11> and the two Bell states span a 2-dimensional space
    let sets = [
        vec![StabilizerMatrix::basis_state(2, 0)?, StabilizerMatrix::basis_state(2, 3)?],
        vec![
            StabilizerMatrix::basis_state(2, 0)?,
            StabilizerMatrix::basis_state(2, 3)?,
            StabilizerMatrix::from_strs(&["XX", "ZZ"])?,
        ],
    ];
    for set in &sets {
        println!("{} states, dependent: {}", set.len(), gramian_dependent(set)?);
    }
    Ok(())
}
