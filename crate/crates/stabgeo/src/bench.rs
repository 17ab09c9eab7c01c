//! Random Clifford circuits and timing sweeps for the inner-product
//! algorithm.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{conjugate_circuit, CliffordCircuit, Gate};
use crate::error::{Error, Result};
use crate::geometry::inner_product_abs;
use crate::pauli::PauliOp;
use crate::synth::basis_norm_circuit;
use crate::tableau::StabilizerMatrix;

/// `⌈β·n·log₂ n⌉`.
pub fn circuit_length(n: usize, beta: f64) -> usize {
    (beta * n as f64 * (n as f64).log2()).ceil() as usize
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn random_gates(n: usize, len: usize, rng: &mut impl Rng) -> Vec<Gate> {
    (0..len)
        .map(|_| match rng.gen_range(0..3) {
            0 if n > 1 => {
                let c = rng.gen_range(0..n);
                let t = (c + rng.gen_range(1..n)) % n;
                Gate::Cnot(c, t)
            }
            0 | 1 => Gate::P(rng.gen_range(0..n)),
            _ => Gate::H(rng.gen_range(0..n)),
        })
        .collect()
}

/// `⌈β·n·log₂ n⌉` gates, each CNOT, P or H with equal odds on uniformly
/// chosen qubits.
pub fn random_circuit(n: usize, beta: f64, seed: u64) -> Result<CliffordCircuit> {
    if n == 0 || beta.is_nan() || beta <= 0.0 {
        return Err(Error::Domain(format!("need n > 0 and beta > 0, got n={n}, beta={beta}")));
    }
    let mut rng = rng_for(seed, 0);
    CliffordCircuit::new(n, random_gates(n, circuit_length(n, beta), &mut rng))
}

/// `C|0...0>` for a random circuit `C`.
pub fn random_state(n: usize, beta: f64, seed: u64) -> Result<StabilizerMatrix> {
    conjugate_circuit(&StabilizerMatrix::zero_state(n), &random_circuit(n, beta, seed)?)
}

/// `(|0...0> + |1...1>)/√2`.
pub fn ghz(n: usize) -> StabilizerMatrix {
    let mut rows = vec![PauliOp::from_letters(&vec![crate::pauli::Letter::X; n], 0)];
    for q in 0..n.saturating_sub(1) {
        let mut r = PauliOp::identity(n);
        r.set_letter(q, crate::pauli::Letter::Z);
        r.set_letter(q + 1, crate::pauli::Letter::Z);
        rows.push(r);
    }
    StabilizerMatrix::from_rows_unchecked(n, rows)
}

/// Left-hand state of each timed inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    /// A second random state.
    Random,
    Ghz,
    Zero,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub beta: f64,
    pub mean_seconds: f64,
    pub median_seconds: f64,
    /// Mean size of the basis-normalization circuit of the left state.
    pub mean_gates: f64,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "n,beta,mean_seconds,median_seconds,mean_gates";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{:.9},{:.9},{:.2}",
            self.n, self.beta, self.mean_seconds, self.median_seconds, self.mean_gates
        )
    }
}

/// Time `inner_product_abs(ψ, φ)` over `reps` random pairs for every
/// `(n, β)`, in that order. Each repetition draws from its own stream of
/// `seed`, so rows do not depend on the sweep around them.
pub fn bench_inner(
    ns: &[usize],
    betas: &[f64],
    reps: usize,
    seed: u64,
    reference: Reference,
) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::with_capacity(ns.len() * betas.len());
    for (i, &n) in ns.iter().enumerate() {
        for (j, &beta) in betas.iter().enumerate() {
            let mut times = Vec::with_capacity(reps);
            let mut gates = 0usize;
            for r in 0..reps {
                let stream = ((i * betas.len() + j) * reps.max(1) + r) as u64 + 1;
                let mut rng = rng_for(seed, stream);
                let len = circuit_length(n, beta);
                let draw = |rng: &mut ChaCha8Rng| -> Result<StabilizerMatrix> {
                    let c = CliffordCircuit::new(n, random_gates(n, len, rng))?;
                    conjugate_circuit(&StabilizerMatrix::zero_state(n), &c)
                };
                let psi = match reference {
                    Reference::Random => draw(&mut rng)?,
                    Reference::Ghz => ghz(n),
                    Reference::Zero => StabilizerMatrix::zero_state(n),
                };
                let phi = draw(&mut rng)?;
                gates += basis_norm_circuit(&psi)?.circuit.len();
                let t = Instant::now();
                std::hint::black_box(inner_product_abs(&psi, &phi)?);
                times.push(t.elapsed().as_secs_f64());
            }
            let reps_f = reps.max(1) as f64;
            times.sort_by(f64::total_cmp);
            rows.push(BenchRow {
                n,
                beta,
                mean_seconds: times.iter().sum::<f64>() / reps_f,
                median_seconds: times.get(times.len() / 2).copied().unwrap_or(0.0),
                mean_gates: gates as f64 / reps_f,
            });
        }
    }
    Ok(rows)
}

/// Least-squares slope of `log y` against `log x`.
pub fn fit_exponent(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = logs.len() as f64;
    let (sx, sy) = logs.iter().fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let num: f64 = logs.iter().map(|&(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = logs.iter().map(|&(x, _)| (x - mx) * (x - mx)).sum();
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circuit_lengths() {
        assert_eq!(random_circuit(2, 1.0, 7).unwrap().len(), 2);
        assert_eq!(random_circuit(20, 0.6, 7).unwrap().len(), 52);
        assert_eq!(random_circuit(9, 1.5, 3).unwrap(), random_circuit(9, 1.5, 3).unwrap());
        assert!(random_circuit(3, 0.0, 1).is_err());
    }

    #[test]
    fn gate_mix_is_roughly_uniform() {
        let c = random_circuit(50, 30.0, 11).unwrap();
        let (h, p, cx) = c.counts();
        let total = c.len() as f64;
        for k in [h, p, cx] {
            assert!((k as f64 / total - 1.0 / 3.0).abs() < 0.02);
        }
    }

    #[test]
    fn ghz_is_valid() {
        let g = ghz(5);
        assert!(StabilizerMatrix::new(5, g.rows().to_vec()).is_ok());
    }

    #[test]
    fn sweep_shape_and_fit() {
        let rows = bench_inner(&[4, 8], &[0.5, 1.0, 2.0], 2, 1, Reference::Random).unwrap();
        assert_eq!(rows.len(), 6);
        let pts: Vec<_> = (1..6).map(|x| (x as f64, 3.0 * (x as f64).powi(2))).collect();
        assert!((fit_exponent(&pts) - 2.0).abs() < 1e-9);
    }
}
