//! Clifford gates acting on stabilizer matrices by conjugation, measurement,
//! and exact tracking of the global phase picked up by a state's
//! representative.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::Cyclo;
use crate::pauli::PauliOp;
use crate::tableau::{StabilizerMatrix, ZOutcome};

/// A gate on 0-based qubits. Two-qubit gates list the control first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gate {
    H(usize),
    P(usize),
    X(usize),
    Y(usize),
    Z(usize),
    Cnot(usize, usize),
    Cz(usize, usize),
    Cy(usize, usize),
}

impl Gate {
    pub fn name(&self) -> &'static str {
        match self {
            Gate::H(_) => "H",
            Gate::P(_) => "P",
            Gate::X(_) => "X",
            Gate::Y(_) => "Y",
            Gate::Z(_) => "Z",
            Gate::Cnot(..) => "CNOT",
            Gate::Cz(..) => "CZ",
            Gate::Cy(..) => "CY",
        }
    }

    pub fn qubits(&self) -> (usize, Option<usize>) {
        match *self {
            Gate::H(q) | Gate::P(q) | Gate::X(q) | Gate::Y(q) | Gate::Z(q) => (q, None),
            Gate::Cnot(a, b) | Gate::Cz(a, b) | Gate::Cy(a, b) => (a, Some(b)),
        }
    }

    pub fn is_controlled(&self) -> bool {
        self.qubits().1.is_some()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        let (a, b) = self.qubits();
        for q in std::iter::once(a).chain(b) {
            if q >= n {
                return Err(Error::Index { index: q, len: n });
            }
        }
        if b == Some(a) {
            return Err(Error::Domain(format!("{} needs two distinct qubits", self.name())));
        }
        Ok(())
    }

    /// Images of `X` and `Z` on each qubit the gate touches.
    fn generator_images(&self) -> Vec<[&'static str; 2]> {
        match self {
            Gate::H(_) => vec![["Z", "X"]],
            Gate::P(_) => vec![["Y", "Z"]],
            Gate::X(_) => vec![["X", "-Z"]],
            Gate::Y(_) => vec![["-X", "-Z"]],
            Gate::Z(_) => vec![["-X", "Z"]],
            Gate::Cnot(..) => vec![["XX", "ZI"], ["IX", "ZZ"]],
            Gate::Cz(..) => vec![["XZ", "ZI"], ["ZX", "IZ"]],
            Gate::Cy(..) => vec![["XY", "ZI"], ["ZX", "ZZ"]],
        }
    }

    fn table_slot(&self) -> usize {
        match self {
            Gate::H(_) => 0,
            Gate::P(_) => 1,
            Gate::X(_) => 2,
            Gate::Y(_) => 3,
            Gate::Z(_) => 4,
            Gate::Cnot(..) => 5,
            Gate::Cz(..) => 6,
            Gate::Cy(..) => 7,
        }
    }

    /// Image of every letter pattern on the touched qubits, indexed by the
    /// pattern's `(x, z)` bits.
    fn table(&self) -> &'static [PauliOp] {
        static TABLES: OnceLock<Vec<Vec<PauliOp>>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| {
            let reps = [
                Gate::H(0),
                Gate::P(0),
                Gate::X(0),
                Gate::Y(0),
                Gate::Z(0),
                Gate::Cnot(0, 1),
                Gate::Cz(0, 1),
                Gate::Cy(0, 1),
            ];
            reps.iter().map(build_table).collect()
        });
        &tables[self.table_slot()]
    }

    /// Action on a basis state: flips bits in place and returns `e` for the
    /// factor `i^e`.
    pub(crate) fn apply_to_bits(&self, bits: &mut [u64]) -> u8 {
        let get = |b: &[u64], q: usize| (b[q / 64] >> (q % 64) & 1) as u8;
        let flip = |b: &mut [u64], q: usize| b[q / 64] ^= 1 << (q % 64);
        match *self {
            Gate::H(_) => panic!("H does not map basis states to basis states"),
            Gate::P(q) => get(bits, q),
            Gate::X(q) => {
                flip(bits, q);
                0
            }
            Gate::Y(q) => {
                let v = get(bits, q);
                flip(bits, q);
                1 + 2 * v
            }
            Gate::Z(q) => 2 * get(bits, q),
            Gate::Cnot(c, t) => {
                if get(bits, c) == 1 {
                    flip(bits, t);
                }
                0
            }
            Gate::Cz(a, b) => 2 * (get(bits, a) & get(bits, b)),
            Gate::Cy(c, t) => {
                if get(bits, c) == 1 {
                    Gate::Y(t).apply_to_bits(bits)
                } else {
                    0
                }
            }
        }
    }
}

fn build_table(g: &Gate) -> Vec<PauliOp> {
    let imgs: Vec<[PauliOp; 2]> = g
        .generator_images()
        .iter()
        .map(|[x, z]| [x.parse().unwrap(), z.parse().unwrap()])
        .collect();
    let width = imgs.len();
    let single = |q: usize, x: bool, z: bool| -> PauliOp {
        let [ix, iz] = &imgs[q];
        match (x, z) {
            (false, false) => PauliOp::identity(width),
            (true, false) => ix.clone(),
            (false, true) => iz.clone(),
            (true, true) => {
                let mut y = ix.mul(iz);
                y.set_phase(y.phase() + 1);
                y
            }
        }
    };
    (0..1usize << (2 * width))
        .map(|code| {
            let mut acc = PauliOp::identity(width);
            for q in 0..width {
                let x = code >> (2 * q + 1) & 1 == 1;
                let z = code >> (2 * q) & 1 == 1;
                acc = acc.mul(&single(q, x, z));
            }
            acc
        })
        .collect()
}

fn conjugate_row(row: &mut PauliOp, g: &Gate) {
    let (a, b) = g.qubits();
    let pair = [a, b.unwrap_or(a)];
    let qs = &pair[..1 + usize::from(b.is_some())];
    let mut code = 0usize;
    for (i, &q) in qs.iter().enumerate() {
        code |= (row.x_bit(q) as usize) << (2 * i + 1) | (row.z_bit(q) as usize) << (2 * i);
    }
    let img = &g.table()[code];
    for (i, &q) in qs.iter().enumerate() {
        row.set_letter(q, img.letter(i));
    }
    row.set_phase(row.phase() + img.phase());
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CliffordCircuit {
    pub n: usize,
    pub gates: Vec<Gate>,
}

impl CliffordCircuit {
    pub fn new(n: usize, gates: Vec<Gate>) -> Result<Self> {
        gates.iter().try_for_each(|g| g.check(n))?;
        Ok(CliffordCircuit { n, gates })
    }

    pub fn empty(n: usize) -> Self {
        CliffordCircuit { n, gates: Vec::new() }
    }

    pub fn push(&mut self, g: Gate) {
        self.gates.push(g);
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Reverse the gates and replace `P` by `P P P`. All other gates are
    /// their own inverses.
    pub fn inverse(&self) -> CliffordCircuit {
        let mut gates = Vec::with_capacity(self.gates.len());
        for g in self.gates.iter().rev() {
            match g {
                Gate::P(_) => gates.extend([*g; 3]),
                _ => gates.push(*g),
            }
        }
        CliffordCircuit { n: self.n, gates }
    }

    /// Gate counts `(H, P, controlled)`.
    pub fn counts(&self) -> (usize, usize, usize) {
        let h = self.gates.iter().filter(|g| matches!(g, Gate::H(_))).count();
        let p = self.gates.iter().filter(|g| matches!(g, Gate::P(_))).count();
        let c = self.gates.iter().filter(|g| g.is_controlled()).count();
        (h, p, c)
    }

    /// Circuit file format: one gate per line with 1-based qubits.
    pub fn parse_text(n: usize, text: &str) -> Result<Self> {
        let mut gates = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let parts: Vec<&str> = line.split_whitespace().collect();
            let qs = parts[1..]
                .iter()
                .map(|s| match s.parse::<usize>() {
                    Ok(q) if q >= 1 => Ok(q - 1),
                    _ => Err(err(format!("bad qubit {s:?}"))),
                })
                .collect::<Result<Vec<usize>>>()?;
            let kind = parts[0].to_ascii_uppercase();
            let g = match (kind.as_str(), qs.as_slice()) {
                ("H", &[q]) => Gate::H(q),
                ("P" | "S", &[q]) => Gate::P(q),
                ("X", &[q]) => Gate::X(q),
                ("Y", &[q]) => Gate::Y(q),
                ("Z", &[q]) => Gate::Z(q),
                ("CNOT" | "CX", &[a, b]) => Gate::Cnot(a, b),
                ("CZ", &[a, b]) => Gate::Cz(a, b),
                ("CY", &[a, b]) => Gate::Cy(a, b),
                _ => return Err(err(format!("cannot read gate {line:?}"))),
            };
            g.check(n).map_err(|e| err(e.to_string()))?;
            gates.push(g);
        }
        Ok(CliffordCircuit { n, gates })
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.qubits() {
            (a, None) => write!(f, "{} {}", self.name(), a + 1),
            (a, Some(b)) => write!(f, "{} {} {}", self.name(), a + 1, b + 1),
        }
    }
}

impl fmt::Display for CliffordCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for Gate {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let c = CliffordCircuit::parse_text(usize::MAX, s)?;
        match c.gates.as_slice() {
            [g] => Ok(*g),
            _ => Err(Error::Parse { line: 1, msg: format!("expected one gate in {s:?}") }),
        }
    }
}

/// Multiplier `ω^m`, `ω = e^(iπ/4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GlobalPhase(pub u8);

impl GlobalPhase {
    pub fn omega_exp(&self) -> u8 {
        self.0
    }

    pub fn compose(self, o: GlobalPhase) -> GlobalPhase {
        GlobalPhase((self.0 + o.0) % 8)
    }

    pub fn conj(self) -> GlobalPhase {
        GlobalPhase((8 - self.0) % 8)
    }

    pub fn to_cyclo(self) -> Cyclo {
        Cyclo::omega_pow(self.0 as i64)
    }
}

impl fmt::Display for GlobalPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w^{}", self.0)
    }
}

/// `U M U†` row by row.
pub fn conjugate_gate(m: &StabilizerMatrix, g: &Gate) -> Result<StabilizerMatrix> {
    g.check(m.num_qubits())?;
    let mut rows = m.rows().to_vec();
    rows.iter_mut().for_each(|r| conjugate_row(r, g));
    Ok(StabilizerMatrix::from_rows_unchecked(m.num_qubits(), rows))
}

pub(crate) fn conjugate_gate_in_place(m: &mut StabilizerMatrix, g: &Gate) {
    m.rows_mut().iter_mut().for_each(|r| conjugate_row(r, g));
}

pub fn conjugate_circuit(m: &StabilizerMatrix, c: &CliffordCircuit) -> Result<StabilizerMatrix> {
    c.gates.iter().try_for_each(|g| g.check(m.num_qubits()))?;
    let mut rows = m.rows().to_vec();
    for g in &c.gates {
        rows.iter_mut().for_each(|r| conjugate_row(r, g));
    }
    Ok(StabilizerMatrix::from_rows_unchecked(m.num_qubits(), rows))
}

/// Measure qubit `j` in the computational basis.
pub fn measure<R: Rng + ?Sized>(
    m: &StabilizerMatrix,
    j: usize,
    rng: &mut R,
) -> Result<(bool, StabilizerMatrix)> {
    if j >= m.num_qubits() {
        return Err(Error::Index { index: j, len: m.num_qubits() });
    }
    if !m.is_pure() {
        return Err(Error::NotPure { rows: m.rows().len(), n: m.num_qubits() });
    }
    match m.z_outcome(j) {
        ZOutcome::Random => {
            let a: bool = rng.gen();
            Ok((a, m.project_random(j, a)))
        }
        ZOutcome::Fixed(a) => Ok((a, m.clone())),
        ZOutcome::Free => unreachable!("pure states fix or randomize every Z_j"),
    }
}

fn sqrt2_pow(e: i32) -> Cyclo {
    match e {
        0 => Cyclo::one(),
        1 => Cyclo::sqrt2(),
        -1 => Cyclo::inv_sqrt2(),
        _ => unreachable!(),
    }
}

/// Phase `ω^m` with `U |ψ> = ω^m |ψ'>`, where `|ψ>` and `|ψ'>` are the unit
/// representatives (lowest-index amplitude positive) of `m` and `U m U†`.
pub fn global_phase_of_gate(m: &StabilizerMatrix, g: &Gate) -> Result<GlobalPhase> {
    let out = conjugate_gate(m, g)?;
    phase_between(m, &out, g)
}

fn phase_between(m: &StabilizerMatrix, out: &StabilizerMatrix, g: &Gate) -> Result<GlobalPhase> {
    let s = m.support()?;
    let s2 = out.support()?;
    let dk = s2.gens.len() as i32 - s.gens.len() as i32;
    let (value, bits) = match *g {
        Gate::H(q) => {
            let mut b0 = s.base.clone();
            b0[q / 64] &= !(1 << (q % 64));
            let mut b1 = b0.clone();
            b1[q / 64] |= 1 << (q % 64);
            let a0 = s.amplitude(&b0).to_cyclo();
            let a1 = s.amplitude(&b1).to_cyclo();
            let c0 = (a0.clone() + a1.clone()) * Cyclo::inv_sqrt2();
            if !c0.is_zero() {
                (c0, b0)
            } else {
                ((a0 - a1) * Cyclo::inv_sqrt2(), b1)
            }
        }
        _ => {
            let mut b = s.base.clone();
            let e = g.apply_to_bits(&mut b);
            (Cyclo::i_pow(e), b)
        }
    };
    let target = s2.amplitude(&bits);
    let ratio = value * sqrt2_pow(dk) * target.conj().to_cyclo();
    let sc = ratio.to_exact_scalar().filter(|s| !s.is_zero() && s.half_exp() == 0);
    sc.map(|s| GlobalPhase(s.omega_exp()))
        .ok_or_else(|| Error::Domain(format!("gate {g} produced a non-unit phase")))
}

/// Conjugate by each gate in turn, accumulating the global phase.
pub fn apply_circuit_with_phase(
    m: &StabilizerMatrix,
    c: &CliffordCircuit,
) -> Result<(StabilizerMatrix, GlobalPhase)> {
    let mut cur = m.clone();
    let mut phase = GlobalPhase(0);
    for g in &c.gates {
        let next = conjugate_gate(&cur, g)?;
        phase = phase.compose(phase_between(&cur, &next, g)?);
        cur = next;
    }
    Ok((cur, phase))
}

#[cfg(test)]
mod tests {
    use crate::pauli::Letter;
    use super::*;
    use crate::dense::{stabilizer_state, DenseState};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[&str]) -> StabilizerMatrix {
        StabilizerMatrix::from_strs(rows).unwrap()
    }

    fn all_gates(n: usize) -> Vec<Gate> {
        let mut gs = Vec::new();
        for q in 0..n {
            gs.extend([Gate::H(q), Gate::P(q), Gate::X(q), Gate::Y(q), Gate::Z(q)]);
            for t in 0..n {
                if t != q {
                    gs.extend([Gate::Cnot(q, t), Gate::Cz(q, t), Gate::Cy(q, t)]);
                }
            }
        }
        gs
    }

    #[test]
    fn listed_conjugations() {
        let c = conjugate_gate(&m(&["XX", "ZZ"]), &Gate::Cnot(0, 1)).unwrap();
        assert_eq!(c.canonicalize(), m(&["XI", "IZ"]));
        assert_eq!(conjugate_gate(&m(&["Z"]), &Gate::H(0)).unwrap(), m(&["X"]));
        assert_eq!(conjugate_gate(&m(&["Y"]), &Gate::P(0)).unwrap(), m(&["-X"]));
    }

    #[test]
    fn conjugation_matches_matrices_on_every_pauli() {
        // U P U† |v> = U P |w> with |w> = U†|v>; compare on a full basis.
        let n = 2;
        for g in all_gates(n) {
            for code in 0..16u32 {
                let letters: Vec<Letter> = (0..n)
                    .map(|q| [Letter::I, Letter::X, Letter::Y, Letter::Z][(code >> (2 * q) & 3) as usize])
                    .collect();
                let p = PauliOp::from_letters(&letters, 0);
                let mut img = p.clone();
                conjugate_row(&mut img, &g);
                for b in 0..4 {
                    // U P |b>
                    let mut lhs = DenseState::basis(n, b);
                    lhs.apply_pauli(&p);
                    lhs.apply_gate(&g);
                    // img U |b>
                    let mut rhs = DenseState::basis(n, b);
                    rhs.apply_gate(&g);
                    rhs.apply_pauli(&img);
                    assert_eq!(lhs, rhs, "{g} on {p}");
                }
            }
        }
    }

    #[test]
    fn inverse_circuits() {
        let c = CliffordCircuit::new(2, vec![Gate::P(0)]).unwrap();
        assert_eq!(c.inverse().gates, vec![Gate::P(0); 3]);
        let c = CliffordCircuit::new(2, vec![Gate::H(0), Gate::Cnot(0, 1)]).unwrap();
        assert_eq!(c.inverse().gates, vec![Gate::Cnot(0, 1), Gate::H(0)]);
        let start = m(&["ZI", "IZ"]);
        let c = CliffordCircuit::new(2, vec![Gate::H(0), Gate::P(1), Gate::Cy(0, 1), Gate::P(0)]).unwrap();
        let back = conjugate_circuit(&conjugate_circuit(&start, &c).unwrap(), &c.inverse()).unwrap();
        assert_eq!(back.canonicalize(), start);
    }

    #[test]
    fn bell_preparation() {
        let c = CliffordCircuit::new(2, vec![Gate::H(0), Gate::Cnot(0, 1)]).unwrap();
        let out = conjugate_circuit(&m(&["ZI", "IZ"]), &c).unwrap();
        assert_eq!(out.canonicalize(), m(&["XX", "ZZ"]));
    }

    #[test]
    fn measurement() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let zz = m(&["ZI", "IZ"]);
        assert_eq!(measure(&zz, 0, &mut rng).unwrap(), (false, zz.clone()));
        let mut zeros = 0;
        for _ in 0..10_000 {
            let (a, post) = measure(&m(&["X"]), 0, &mut rng).unwrap();
            assert_eq!(post, if a { m(&["-Z"]) } else { m(&["Z"]) });
            zeros += !a as usize;
        }
        assert!((4700..=5300).contains(&zeros), "{zeros}");
        for _ in 0..20 {
            let (a, post) = measure(&m(&["XX", "ZZ"]), 0, &mut rng).unwrap();
            let (b, _) = measure(&post, 1, &mut rng).unwrap();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn hadamard_phase_example() {
        let g = global_phase_of_gate(&m(&["-YI", "IX"]), &Gate::H(0)).unwrap();
        assert_eq!(g, GlobalPhase(7));
        assert_eq!(global_phase_of_gate(&m(&["-Z"]), &Gate::P(0)).unwrap(), GlobalPhase(2));
        assert_eq!(global_phase_of_gate(&m(&["XI", "IX"]), &Gate::H(0)).unwrap(), GlobalPhase(0));
    }

    #[test]
    fn tracked_phase_matches_dense_on_all_single_gates() {
        // every single-qubit state and gate
        for rows in [["Z"], ["-Z"], ["X"], ["-X"], ["Y"], ["-Y"]] {
            let st = m(&rows);
            for g in all_gates(1) {
                let ph = global_phase_of_gate(&st, &g).unwrap();
                let out = conjugate_gate(&st, &g).unwrap();
                let mut lhs = stabilizer_state(1, st.rows()).unwrap();
                lhs.apply_gate(&g);
                let ks = st.support_log2() as i32 - out.support_log2() as i32;
                let mut rhs = stabilizer_state(1, out.rows()).unwrap();
                rhs.scale(&(ph.to_cyclo() * sqrt2_pow(ks)));
                assert_eq!(lhs, rhs, "{g} on {st}");
            }
        }
    }

    #[test]
    fn circuit_file() {
        let c = CliffordCircuit::parse_text(3, "# prep\nH 1\nCNOT 1 2\ncz 2 3\n").unwrap();
        assert_eq!(c.gates, vec![Gate::H(0), Gate::Cnot(0, 1), Gate::Cz(1, 2)]);
        assert_eq!(c.to_string(), "H 1\nCNOT 1 2\nCZ 2 3\n");
        assert!(CliffordCircuit::parse_text(2, "H 3").is_err());
        assert!(CliffordCircuit::parse_text(2, "CNOT 1 1").is_err());
        assert!(CliffordCircuit::parse_text(2, "T 1").is_err());
        assert!(CliffordCircuit::parse_text(2, "H 0").is_err());
    }
}
