//! Canonical forms, amplitudes, cofactors, measurement and partial traces.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabgeo::clifford::measure;
use stabgeo::StabilizerMatrix;

fn main() -> stabgeo::Result<()> {
    // two generator sets for the same Bell state
    let a = StabilizerMatrix::from_strs(&["XX", "ZZ"])?;
    let b = StabilizerMatrix::from_strs(&["-YY", "ZZ"])?;
    println!("canonical forms\n{}\n{}", a.canonicalize(), b.canonicalize());

    let ghz = StabilizerMatrix::from_strs(&["XXX", "ZZI", "IZZ"])?;
    println!("GHZ amplitudes, lowest index positive:");
    for (b, amp) in ghz.to_dense()?.iter().enumerate() {
        if !amp.is_zero() {
            println!("  |{b:03b}>  {amp}");
        }
    }
    let (samples, _) = ghz.sample_amplitudes(2)?;
    for (b, amp) in samples {
        println!("  sampled |{b:03b}> = {amp}");
    }

    println!("cofactor of qubit 1 = 0:\n{}", ghz.cofactor(0, false)?);
    println!("trace out qubit 3:\n{}", ghz.partial_trace(2)?);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (bit, post) = measure(&ghz, 0, &mut rng)?;
    println!("measured qubit 1: {}\n{post}", u8::from(bit));
    Ok(())
}
