//! Naive exact state-vector simulation.
//!
//! Nothing here touches the tableau code: gates act through their matrices,
//! Pauli operators act letter by letter, and a stabilizer state is found by
//! applying the projector `∏ (I + g)/2` to basis vectors. Intended for small
//! qubit counts as a reference.

use crate::clifford::Gate;
use crate::exact::Cyclo;
use crate::pauli::{Letter, PauliOp};

/// Amplitudes indexed by basis state, qubit 0 most significant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseState {
    pub n: usize,
    pub amps: Vec<Cyclo>,
}

type Mat2 = [[Cyclo; 2]; 2];

fn c(n: i64) -> Cyclo {
    Cyclo::from_int(n)
}

fn letter_matrix(l: Letter) -> Mat2 {
    let i = Cyclo::i_pow(1);
    match l {
        Letter::I => [[c(1), c(0)], [c(0), c(1)]],
        Letter::X => [[c(0), c(1)], [c(1), c(0)]],
        Letter::Y => [[c(0), -i.clone()], [i, c(0)]],
        Letter::Z => [[c(1), c(0)], [c(0), c(-1)]],
    }
}

fn single_matrix(g: &Gate) -> Option<(usize, Mat2)> {
    let r = Cyclo::inv_sqrt2();
    Some(match *g {
        Gate::H(q) => (q, [[r.clone(), r.clone()], [r.clone(), -r]]),
        Gate::P(q) => (q, [[c(1), c(0)], [c(0), Cyclo::i_pow(1)]]),
        Gate::X(q) => (q, letter_matrix(Letter::X)),
        Gate::Y(q) => (q, letter_matrix(Letter::Y)),
        Gate::Z(q) => (q, letter_matrix(Letter::Z)),
        _ => return None,
    })
}

impl DenseState {
    pub fn zero_state(n: usize) -> Self {
        DenseState::basis(n, 0)
    }

    pub fn basis(n: usize, b: usize) -> Self {
        let mut amps = vec![Cyclo::zero(); 1 << n];
        amps[b] = Cyclo::one();
        DenseState { n, amps }
    }

    fn bit(&self, q: usize) -> usize {
        1 << (self.n - 1 - q)
    }

    fn apply_single(&mut self, q: usize, u: &Mat2) {
        let m = self.bit(q);
        for b in 0..self.amps.len() {
            if b & m == 0 {
                let (a0, a1) = (self.amps[b].clone(), self.amps[b | m].clone());
                self.amps[b] = &u[0][0] * &a0 + &u[0][1] * &a1;
                self.amps[b | m] = &u[1][0] * &a0 + &u[1][1] * &a1;
            }
        }
    }

    fn apply_controlled(&mut self, ctrl: usize, target: usize, u: &Mat2) {
        let (mc, mt) = (self.bit(ctrl), self.bit(target));
        for b in 0..self.amps.len() {
            if b & mc != 0 && b & mt == 0 {
                let (a0, a1) = (self.amps[b].clone(), self.amps[b | mt].clone());
                self.amps[b] = &u[0][0] * &a0 + &u[0][1] * &a1;
                self.amps[b | mt] = &u[1][0] * &a0 + &u[1][1] * &a1;
            }
        }
    }

    pub fn apply_gate(&mut self, g: &Gate) {
        if let Some((q, u)) = single_matrix(g) {
            self.apply_single(q, &u);
            return;
        }
        match *g {
            Gate::Cnot(a, b) => self.apply_controlled(a, b, &letter_matrix(Letter::X)),
            Gate::Cz(a, b) => self.apply_controlled(a, b, &letter_matrix(Letter::Z)),
            Gate::Cy(a, b) => self.apply_controlled(a, b, &letter_matrix(Letter::Y)),
            _ => unreachable!(),
        }
    }

    pub fn apply_gates(&mut self, gates: &[Gate]) {
        gates.iter().for_each(|g| self.apply_gate(g));
    }

    pub fn apply_pauli(&mut self, p: &PauliOp) {
        for q in 0..self.n {
            let l = p.letter(q);
            if l != Letter::I {
                self.apply_single(q, &letter_matrix(l));
            }
        }
        let ph = Cyclo::i_pow(p.phase());
        self.amps.iter_mut().for_each(|a| *a = &*a * &ph);
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &DenseState) -> Cyclo {
        self.amps
            .iter()
            .zip(&other.amps)
            .fold(Cyclo::zero(), |acc, (a, b)| acc + &a.conj() * b)
    }

    pub fn norm_sqr(&self) -> Cyclo {
        self.inner(self)
    }

    pub fn scale(&mut self, s: &Cyclo) {
        self.amps.iter_mut().for_each(|a| *a = &*a * s);
    }

    pub fn add(&self, other: &DenseState) -> DenseState {
        let amps = self.amps.iter().zip(&other.amps).map(|(a, b)| a.clone() + b.clone()).collect();
        DenseState { n: self.n, amps }
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(Cyclo::is_zero)
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &DenseState) -> DenseState {
        let mut amps = Vec::with_capacity(self.amps.len() * other.amps.len());
        for a in &self.amps {
            for b in &other.amps {
                amps.push(a * b);
            }
        }
        DenseState { n: self.n + other.n, amps }
    }

    /// Scale so the lowest-index nonzero amplitude is 1.
    pub fn normalize_first(&self) -> DenseState {
        let first = self.amps.iter().find(|a| !a.is_zero()).expect("zero vector");
        let mut out = self.clone();
        out.scale(&first.inv().unwrap());
        out
    }

    /// `self = λ·other` for some nonzero `λ`.
    pub fn is_parallel(&self, other: &DenseState) -> bool {
        self.normalize_first() == other.normalize_first()
    }

    /// `P|v> = |v>`.
    pub fn is_stabilized_by(&self, p: &PauliOp) -> bool {
        let mut w = self.clone();
        w.apply_pauli(p);
        w == *self
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.amps.len()).filter(|&b| !self.amps[b].is_zero()).collect()
    }
}

/// The state fixed by all `rows`, scaled so its first nonzero amplitude is 1.
pub fn stabilizer_state(n: usize, rows: &[PauliOp]) -> Option<DenseState> {
    for b in 0..1usize << n {
        let mut v = DenseState::basis(n, b);
        for g in rows {
            let mut gv = v.clone();
            gv.apply_pauli(g);
            v = v.add(&gv);
        }
        if !v.is_zero() {
            return Some(v.normalize_first());
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> PauliOp {
        s.parse().unwrap()
    }

    #[test]
    fn bell_state_from_projector() {
        let v = stabilizer_state(2, &[p("XX"), p("ZZ")]).unwrap();
        assert_eq!(v.amps, vec![c(1), c(0), c(0), c(1)]);
        let mut w = DenseState::zero_state(2);
        w.apply_gates(&[Gate::H(0), Gate::Cnot(0, 1)]);
        assert!(w.is_parallel(&v));
    }

    #[test]
    fn hadamard_on_y_state() {
        // H(|0> - i|1>) = (1 - i)/√2 (|0> + i|1>)
        let mut v = stabilizer_state(1, &[p("-Y")]).unwrap();
        v.apply_gate(&Gate::H(0));
        let w = stabilizer_state(1, &[p("Y")]).unwrap();
        let phase = (c(1) - Cyclo::i_pow(1)) * Cyclo::inv_sqrt2();
        let mut expect = w;
        expect.scale(&phase);
        assert_eq!(v, expect);
    }
}
