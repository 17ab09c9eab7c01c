//! Basis-normalization circuits.
//!
//! For a pure state `|ψ>` the circuit `C` maps `|ψ>` to a computational
//! basis state `|b>` and has the fixed block structure
//! `[H...] [CNOT...] [CZ...] [P...] [H...]`. It uses at most `2n` Hadamards,
//! `n` phase gates and `n(n-1)` two-qubit gates.

use crate::clifford::{conjugate_gate_in_place, CliffordCircuit, Gate};
use crate::error::{Error, Result};
use crate::pauli::{bits_to_index, Letter};
use crate::tableau::StabilizerMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisNormalization {
    pub circuit: CliffordCircuit,
    /// `M` conjugated by the circuit, reduced to basis form.
    pub matrix: StabilizerMatrix,
    /// Qubit-ordered bits of `|b>`.
    pub bits: Vec<u64>,
}

impl BasisNormalization {
    /// Index of `|b>`, qubit 0 most significant. `None` beyond 63 qubits.
    pub fn basis_index(&self) -> Option<u64> {
        (self.matrix.num_qubits() <= 63).then(|| bits_to_index(self.matrix.num_qubits(), &self.bits))
    }
}

struct Work {
    m: StabilizerMatrix,
    circuit: CliffordCircuit,
}

impl Work {
    fn apply(&mut self, g: Gate) {
        conjugate_gate_in_place(&mut self.m, &g);
        self.circuit.push(g);
    }

    fn letter(&self, row: usize, q: usize) -> Letter {
        self.m.rows()[row].letter(q)
    }

    fn swap(&mut self, a: usize, b: usize) {
        if a != b {
            let mut rows = self.m.rows().to_vec();
            rows.swap(a, b);
            self.m = StabilizerMatrix::from_rows_unchecked(self.m.num_qubits(), rows);
        }
    }

    /// Multiply row `j` into every later row with X or Y in column `j`.
    fn clear_below(&mut self, j: usize) {
        let n = self.m.num_qubits();
        if !self.m.rows()[j].x_bit(j) || (j + 1..n).all(|k| !self.m.rows()[k].x_bit(j)) {
            return;
        }
        let mut rows = self.m.rows().to_vec();
        let pivot = rows[j].clone();
        for row in rows.iter_mut().skip(j + 1).filter(|r| r.x_bit(j)) {
            row.left_mul_assign(&pivot);
        }
        self.m = StabilizerMatrix::from_rows_unchecked(n, rows);
    }
}

pub fn basis_norm_circuit(m: &StabilizerMatrix) -> Result<BasisNormalization> {
    let n = m.num_qubits();
    if !m.is_pure() {
        return Err(Error::NotPure { rows: m.rows().len(), n });
    }
    let mut w = Work { m: m.canonicalize(), circuit: CliffordCircuit::empty(n) };

    for j in 0..n {
        if let Some(k) = (j..n).find(|&k| matches!(w.letter(k, j), Letter::X | Letter::Y)) {
            w.swap(j, k);
        } else if let Some(k) = (j..n).rev().find(|&k| w.letter(k, j) == Letter::Z) {
            w.swap(j, k);
            if (j + 1..n).any(|q| w.letter(j, q) != Letter::I) {
                w.apply(Gate::H(j));
            }
        }
        w.clear_below(j);
    }
    for j in 0..n {
        for k in j + 1..n {
            if matches!(w.letter(j, k), Letter::X | Letter::Y) {
                w.apply(Gate::Cnot(j, k));
            }
        }
    }
    for j in 0..n {
        for k in j + 1..n {
            if w.letter(j, k) == Letter::Z {
                w.apply(Gate::Cz(j, k));
            }
        }
    }
    for j in 0..n {
        if w.letter(j, j) == Letter::Y {
            w.apply(Gate::P(j));
        }
    }
    for j in 0..n {
        if w.letter(j, j) == Letter::X {
            w.apply(Gate::H(j));
        }
    }

    let matrix = w.m.canonicalize();
    let bits = matrix
        .basis_bits()
        .ok_or_else(|| Error::Domain(format!("circuit did not reach a basis state:\n{matrix}")))?;
    Ok(BasisNormalization { circuit: w.circuit, matrix, bits })
}

/// Checks the block order `[H][CNOT][CZ][P][H]` and the gate-count bounds.
pub fn verify_template(c: &CliffordCircuit) -> bool {
    let stage = |g: &Gate| match g {
        Gate::H(_) => None,
        Gate::Cnot(..) => Some(1),
        Gate::Cz(..) => Some(2),
        Gate::P(_) => Some(3),
        _ => Some(99),
    };
    let mut cur = 0;
    for g in &c.gates {
        let s = match stage(g) {
            Some(s) => s,
            None => if cur == 0 { 0 } else { 4 },
        };
        if s < cur || s == 99 {
            return false;
        }
        cur = s;
    }
    let n = c.n;
    let (h, p, ctl) = c.counts();
    h <= 2 * n && p <= n && ctl <= n * n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&str]) -> StabilizerMatrix {
        StabilizerMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn hadamard_below_the_diagonal() {
        let m = StabilizerMatrix::from_strs(&["-XIXXI", "IXYZZ", "IIZZY", "-ZIIZI", "IZZZI"]).unwrap();
        let bn = basis_norm_circuit(&m).unwrap();
        assert!(verify_template(&bn.circuit));
        for n in 5..=12 {
            for seed in 0..200 {
                let m = crate::bench::random_state(n, 3.0, seed).unwrap();
                assert!(verify_template(&basis_norm_circuit(&m).unwrap().circuit));
            }
        }
    }

    #[test]
    fn basis_state_needs_no_gates() {
        let r = basis_norm_circuit(&m(&["ZI", "-IZ"])).unwrap();
        assert!(r.circuit.is_empty());
        assert_eq!(r.basis_index(), Some(1));
    }

    #[test]
    fn bell_state() {
        let r = basis_norm_circuit(&m(&["XX", "ZZ"])).unwrap();
        assert!(verify_template(&r.circuit));
        assert_eq!(r.circuit.gates, vec![Gate::Cnot(0, 1), Gate::H(0)]);
        assert_eq!(r.basis_index(), Some(0));
    }

    #[test]
    fn template_check_rejects_bad_order() {
        let bad = CliffordCircuit::new(2, vec![Gate::P(0), Gate::Cnot(0, 1)]).unwrap();
        assert!(!verify_template(&bad));
        let bad = CliffordCircuit::new(2, vec![Gate::H(0), Gate::P(0), Gate::H(1), Gate::H(0)]).unwrap();
        assert!(verify_template(&bad));
        let bad = CliffordCircuit::new(2, vec![Gate::H(0), Gate::P(0), Gate::H(1), Gate::Cz(0, 1)]).unwrap();
        assert!(!verify_template(&bad));
    }
}
