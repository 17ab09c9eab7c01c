//! Basis-normalization circuits and exact global phases.

use stabgeo::bench::random_state;
use stabgeo::clifford::{apply_circuit_with_phase, global_phase_of_gate};
use stabgeo::synth::{basis_norm_circuit, verify_template};
use stabgeo::{Gate, StabilizerMatrix};

fn main() -> stabgeo::Result<()> {
    for rows in [vec!["XX", "ZZ"], vec!["XXX", "ZZI", "IZZ"], vec!["XZI", "ZXZ", "IZX"]] {
        let m = StabilizerMatrix::from_strs(&rows)?;
        let bn = basis_norm_circuit(&m)?;
        let (_, phase) = apply_circuit_with_phase(&m, &bn.circuit)?;
        let b = bn.basis_index().unwrap();
        println!("{}\n{}-> |{b:0w$b}> with phase {phase}\n", m, bn.circuit, w = m.num_qubits());
    }

    let m = StabilizerMatrix::from_strs(&["-YI", "IX"])?;
    println!("H on qubit 1 of {{-YI, IX}} picks up {}", global_phase_of_gate(&m, &Gate::H(0))?);

    println!("\n{:>4} {:>6} {:>4} {:>4} {:>6}", "n", "gates", "H", "P", "2q");
    for n in [8, 16, 32, 64] {
        let bn = basis_norm_circuit(&random_state(n, 4.0, 1)?)?;
        assert!(verify_template(&bn.circuit));
        let (h, p, ctl) = bn.circuit.counts();
        println!("{n:>4} {:>6} {h:>4} {p:>4} {ctl:>6}", bn.circuit.len());
    }
    Ok(())
}
