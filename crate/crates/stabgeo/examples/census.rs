//! Counting stabilizer states, the angle distribution around |0...0>, and
//! how it tends to a limit as the number of qubits grows.

use std::time::Instant;

use stabgeo::census::{
    angle_histogram, count_states, enumerate_states, limit_bounds, mean_overlap, neighbor_share, CountReport,
};
use stabgeo::StabilizerMatrix;

fn main() -> stabgeo::Result<()> {
    println!("{:>3} {:>28}", "n", "states");
    for n in 1..=10 {
        println!("{n:>3} {:>28}", count_states(n));
    }

    for n in 1..=4 {
        let t = Instant::now();
        let states = enumerate_states(n)?;
        let hist = angle_histogram(n, &StabilizerMatrix::zero_state(n))?;
        assert_eq!(hist, CountReport::from_formulas(n as u32));
        println!("\nn = {n}: enumerated {} states in {:.2?}", states.len(), t.elapsed());
        for line in hist.csv_rows() {
            println!("  {line}");
        }
    }

    println!("\nshare of states at the largest oblique angles, against limit bounds");
    for k in 0..4 {
        let (lo, hi) = limit_bounds(k);
        let shares: Vec<String> = [8, 16, 32, 64].iter().map(|&n| format!("{:.4}", neighbor_share(n, n - k))).collect();
        println!("  k = {k}: [{lo:.4}, {hi:.4}]  n = 8, 16, 32, 64: {}", shares.join(" "));
    }

    println!("\nmean |<psi|phi>| over all other states");
    for n in [1, 2, 4, 8, 16, 32] {
        println!("  n = {n:>2}: {:.5}", mean_overlap(n));
    }
    Ok(())
}
