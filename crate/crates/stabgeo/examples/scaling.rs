//! Growth of basis-normalization circuits and inner-product runtime with
//! the number of qubits. Run with `--release`.

use stabgeo::bench::{bench_inner, fit_exponent, Reference};

fn main() -> stabgeo::Result<()> {
    let ns = [20, 40, 60, 80, 100, 120, 140, 160, 180, 200];
    for (label, beta, reference) in [
        ("random vs random", 1.2, Reference::Random),
        ("GHZ vs random", 1.2, Reference::Ghz),
        ("zero vs random", 1.2, Reference::Zero),
    ] {
        let rows = bench_inner(&ns, &[beta], 5, 2024, reference)?;
        println!("{label}, beta = {beta}");
        println!("{:>5} {:>12} {:>12} {:>10}", "n", "mean s", "median s", "gates");
        for r in &rows {
            println!("{:>5} {:>12.6} {:>12.6} {:>10.1}", r.n, r.mean_seconds, r.median_seconds, r.mean_gates);
        }
        let time: Vec<_> = rows.iter().map(|r| (r.n as f64, r.median_seconds)).collect();
        println!("runtime exponent {:.2}", fit_exponent(&time));
        if reference == Reference::Random {
            let gates: Vec<_> = rows.iter().map(|r| (r.n as f64, r.mean_gates)).collect();
            println!("circuit size exponent {:.2}", fit_exponent(&gates));
        }
        println!();
    }
    Ok(())
}
