//! Geometry of stabilizer states: exact inner products, neighbor classes,
//! nearest neighbors, unbiased two-state sums, wedge products,
//! orthogonalization of sums and linear dependence.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::clifford::{apply_circuit_with_phase, conjugate_circuit};
use crate::error::{Error, Result};
use crate::exact::{Cyclo, ExactScalar};
use crate::pauli::{check_index_width, index_to_bits, Letter, PauliOp};
use crate::synth::basis_norm_circuit;
use crate::tableau::StabilizerMatrix;

fn same_size(a: &StabilizerMatrix, b: &StabilizerMatrix) -> Result<()> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::WidthMismatch { expected: a.num_qubits(), got: b.num_qubits() });
    }
    for m in [a, b] {
        if !m.is_pure() {
            return Err(Error::NotPure { rows: m.rows().len(), n: m.num_qubits() });
        }
    }
    Ok(())
}

/// `|<ψ|φ>|`: zero, or `2^(-k/2)` where `k` counts the X/Y rows of `φ`
/// after mapping `ψ` to a basis state.
pub fn inner_product_abs(psi: &StabilizerMatrix, phi: &StabilizerMatrix) -> Result<ExactScalar> {
    same_size(psi, phi)?;
    let bn = basis_norm_circuit(psi)?;
    let phi = conjugate_circuit(phi, &bn.circuit)?.canonicalize();
    let n = psi.num_qubits();
    let mut k = 0;
    for q in phi.rows() {
        if q.has_x_part() {
            k += 1;
            continue;
        }
        let mut r = PauliOp::identity(n);
        for j in (0..n).filter(|&j| q.z_bit(j)) {
            r.left_mul_assign(&bn.matrix.rows()[j]);
        }
        if r.phase() & 1 == 1 {
            return Err(Error::OddPhase);
        }
        debug_assert!(r.same_letters(q));
        if r.phase() != q.phase() {
            return Ok(ExactScalar::ZERO);
        }
    }
    Ok(ExactScalar::new(0, k))
}

/// `<ψ|φ>` for the unit representatives whose lowest-index amplitude is
/// positive.
pub fn inner_product_complex(psi: &StabilizerMatrix, phi: &StabilizerMatrix) -> Result<ExactScalar> {
    same_size(psi, phi)?;
    let bn = basis_norm_circuit(psi)?;
    let (_, alpha) = apply_circuit_with_phase(psi, &bn.circuit)?;
    let (phi2, beta) = apply_circuit_with_phase(phi, &bn.circuit)?;
    let s = phi2.support()?;
    let amp = s.amplitude(&bn.bits);
    let k = s.gens.len() as u32;
    Ok(ExactScalar::new(0, k) * ExactScalar::omega(alpha.conj().0 as u32 + beta.0 as u32) * amp)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NeighborClass {
    Parallel,
    /// `|<ψ|φ>| = 2^(-k/2)`, `1 <= k <= n`.
    Neighbor(u32),
    Orthogonal,
}

pub fn k_neighbor_class(psi: &StabilizerMatrix, phi: &StabilizerMatrix) -> Result<NeighborClass> {
    let a = inner_product_abs(psi, phi)?;
    Ok(if a.is_zero() {
        NeighborClass::Orthogonal
    } else if a.half_exp() == 0 {
        NeighborClass::Parallel
    } else {
        NeighborClass::Neighbor(a.half_exp())
    })
}

/// Matrix of `(|b1> + i^t |b2>)/√2` from qubit-ordered bits.
pub(crate) fn sum_basis_bits(n: usize, b1: &[u64], b2: &[u64], t: u8) -> Result<StabilizerMatrix> {
    let get = |b: &[u64], q: usize| b[q / 64] >> (q % 64) & 1 == 1;
    let d: Vec<usize> = (0..n).filter(|&q| get(b1, q) != get(b2, q)).collect();
    if d.is_empty() {
        return Err(Error::Domain("the two basis states must differ".into()));
    }
    let t = t & 3;
    let mut rows = Vec::with_capacity(n);
    let mut ghz = PauliOp::identity(n);
    for &q in &d {
        ghz.set_letter(q, Letter::X);
    }
    if t % 2 == 1 {
        ghz.set_letter(d[0], Letter::Y);
    }
    if t >= 2 {
        ghz.negate();
    }
    rows.push(ghz);
    for w in d.windows(2) {
        let mut zz = PauliOp::single(n, w[0], Letter::Z);
        zz.set_letter(w[1], Letter::Z);
        rows.push(zz);
    }
    rows.extend((0..n).filter(|q| !d.contains(q)).map(|q| PauliOp::single(n, q, Letter::Z)));
    // move |0..0> to |b1> by X on the set bits of b1
    for r in rows.iter_mut() {
        let flips = (0..n).filter(|&q| get(b1, q) && r.z_bit(q)).count();
        if flips % 2 == 1 {
            r.negate();
        }
    }
    Ok(StabilizerMatrix::from_rows_unchecked(n, rows).canonicalize())
}

/// Matrix of `(|b1> + i^t |b2>)/√2`.
pub fn sum_basis_states(n: usize, b1: u64, b2: u64, t: u8) -> Result<StabilizerMatrix> {
    check_index_width(n, b1)?;
    check_index_width(n, b2)?;
    if b1 == b2 {
        return Err(Error::Domain("the two basis states must differ".into()));
    }
    sum_basis_bits(n, &index_to_bits(n, b1), &index_to_bits(n, b2), t)
}

/// The `4(2^n - 1)` states at inner product `1/√2` from `m`.
pub fn nearest_neighbors(m: &StabilizerMatrix) -> Result<Vec<StabilizerMatrix>> {
    let n = m.num_qubits();
    if n > 20 {
        return Err(Error::TooLarge { what: "neighbor listing", n, max: 20 });
    }
    let bn = basis_norm_circuit(m)?;
    let inv = bn.circuit.inverse();
    let b = bn.basis_index().unwrap();
    let mut out = Vec::with_capacity(4 * ((1 << n) - 1));
    for b2 in (0..1u64 << n).filter(|&x| x != b) {
        for t in 0..4 {
            let s = sum_basis_states(n, b, b2, t)?;
            out.push(conjugate_circuit(&s, &inv)?.canonicalize());
        }
    }
    Ok(out)
}

pub fn tensor(a: &StabilizerMatrix, b: &StabilizerMatrix) -> StabilizerMatrix {
    a.tensor(b)
}

/// Matrix of `|ψ ∧ φ> = |ψ>|φ> - |φ>|ψ>` on `2n` qubits, up to
/// normalization and global phase.
pub fn bivector(psi: &StabilizerMatrix, phi: &StabilizerMatrix) -> Result<StabilizerMatrix> {
    same_size(psi, phi)?;
    let alpha = inner_product_abs(psi, phi)?;
    let cp = psi.canonicalize();
    let cf = phi.canonicalize();
    if !alpha.is_zero() && alpha.half_exp() == 0 {
        return Err(Error::Parallel);
    }
    let partner = if alpha.is_zero() {
        if !cp.is_similar(&cf)? {
            return Err(Error::NotStabilizerBivector);
        }
        cf
    } else if alpha.half_exp() == 1 {
        // φ = (ψ + i^l ψ')/√2 with ψ' orthogonal to ψ, so ψ ∧ φ ∝ ψ ∧ ψ'.
        let bn = basis_norm_circuit(&cp)?;
        let s = conjugate_circuit(&cf, &bn.circuit)?.support()?;
        debug_assert_eq!(s.gens.len(), 1);
        let other: Vec<u64> = if s.base == bn.bits {
            s.base.iter().zip(s.gens[0].x_words()).map(|(a, b)| a ^ b).collect()
        } else {
            s.base.clone()
        };
        let basis = StabilizerMatrix::from_bits(cp.num_qubits(), &other);
        conjugate_circuit(&basis, &bn.circuit.inverse())?.canonicalize()
    } else {
        return Err(Error::NotStabilizerBivector);
    };

    let t1 = cp.tensor(&partner);
    let t2 = partner.tensor(&cp);
    let bn = basis_norm_circuit(&t1)?;
    let (_, a1) = apply_circuit_with_phase(&t1, &bn.circuit)?;
    let (m2, a2) = apply_circuit_with_phase(&t2, &bn.circuit)?;
    let b2 = m2
        .canonicalize()
        .basis_bits()
        .ok_or_else(|| Error::Domain("swapped tensor did not reach a basis state".into()))?;
    // a1|b1> - a2|b2> ∝ |b1> + i^t |b2>
    let rel = (4 + 8 + a2.0 - a1.0) % 8;
    if rel % 2 == 1 {
        return Err(Error::Domain("relative phase is not a power of i".into()));
    }
    let s = sum_basis_bits(t1.num_qubits(), &bn.bits, &b2, rel / 2)?;
    Ok(conjugate_circuit(&s, &bn.circuit.inverse())?.canonicalize())
}

/// `‖ψ ∧ φ‖` for unit vectors, stored as its exact square `1 - |<ψ|φ>|²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WedgeNorm(pub BigRational);

impl WedgeNorm {
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN).sqrt()
    }
}

impl fmt::Display for WedgeNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() || self.0.is_one() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "sqrt({})", self.0)
        }
    }
}

pub fn wedge_norm(psi: &StabilizerMatrix, phi: &StabilizerMatrix) -> Result<WedgeNorm> {
    let a = inner_product_abs(psi, phi)?;
    Ok(WedgeNorm(BigRational::one() - a.norm_sqr()))
}

/// `Σ c_j |ψ_j>` over unit representatives of canonical matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerSum {
    pub n: usize,
    pub terms: Vec<(Cyclo, StabilizerMatrix)>,
}

impl StabilizerSum {
    pub fn new(n: usize) -> Self {
        StabilizerSum { n, terms: Vec::new() }
    }

    /// Add a term, merging with an identical canonical matrix.
    pub fn insert(&mut self, c: Cyclo, m: &StabilizerMatrix) -> Result<()> {
        if m.num_qubits() != self.n {
            return Err(Error::WidthMismatch { expected: self.n, got: m.num_qubits() });
        }
        let m = m.canonicalize();
        match self.terms.iter_mut().find(|(_, x)| *x == m) {
            Some((acc, _)) => *acc = acc.clone() + c,
            None => self.terms.push((c, m)),
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every pair of terms has the same canonical letters.
    pub fn all_similar(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].1.is_similar(&w[1].1).unwrap_or(false))
    }
}

/// Letters present in column `j` and the rows carrying them, signs dropped.
fn column_signature(m: &StabilizerMatrix, j: usize) -> (u8, Vec<Vec<Letter>>) {
    let mut kinds = 0u8;
    let mut rows = Vec::new();
    for r in m.rows() {
        let l = r.letter(j);
        if l != Letter::I {
            kinds |= 1 << (l as u8);
            rows.push(r.letters());
        }
    }
    (kinds, rows)
}

/// Split `c|ψ>` into its two qubit-`j` cofactors.
fn decompose(c: &Cyclo, m: &StabilizerMatrix, j: usize, out: &mut StabilizerSum) -> Result<()> {
    let s = m.support()?;
    for a in [false, true] {
        let part = m.cofactor(j, a)?;
        let gamma = s.amplitude(&part.support()?.base).to_cyclo();
        out.insert(c * &gamma * Cyclo::inv_sqrt2(), &part)?;
    }
    Ok(())
}

fn has_xy(m: &StabilizerMatrix, j: usize) -> bool {
    m.rows().iter().any(|r| r.x_bit(j))
}

/// Rewrite a sum so its matrices are pairwise similar, hence pairwise
/// orthogonal. The represented vector is unchanged. Terms whose
/// coefficients cancel are dropped.
pub fn orthogonalize(sum: &StabilizerSum) -> Result<StabilizerSum> {
    let n = sum.n;
    let mut cur = StabilizerSum::new(n);
    for (c, m) in &sum.terms {
        cur.insert(c.clone(), m)?;
    }
    while !cur.all_similar() {
        let mut progress = false;
        for j in 0..n {
            let sigs: Vec<_> = cur.terms.iter().map(|(_, m)| column_signature(m, j)).collect();
            if sigs.windows(2).all(|w| w[0] == w[1]) {
                continue;
            }
            let mut next = StabilizerSum::new(n);
            for (c, m) in &cur.terms {
                if has_xy(m, j) {
                    decompose(c, m, j, &mut next)?;
                    progress = true;
                } else {
                    next.insert(c.clone(), m)?;
                }
            }
            cur = next;
        }
        if !progress {
            // All columns agree yet the matrices differ: split on the first
            // column that still carries X/Y somewhere.
            let Some(j) = (0..n).find(|&j| cur.terms.iter().any(|(_, m)| has_xy(m, j))) else { break };
            let mut next = StabilizerSum::new(n);
            for (c, m) in &cur.terms {
                if has_xy(m, j) {
                    decompose(c, m, j, &mut next)?;
                } else {
                    next.insert(c.clone(), m)?;
                }
            }
            cur = next;
        }
    }
    cur.terms.retain(|(c, _)| !c.is_zero());
    Ok(cur)
}

/// Whether the states are linearly dependent, via exact singularity of
/// their Gram matrix.
pub fn gramian_dependent(states: &[StabilizerMatrix]) -> Result<bool> {
    let k = states.len();
    let mut g = vec![vec![Cyclo::zero(); k]; k];
    for i in 0..k {
        for j in i..k {
            let v = inner_product_complex(&states[i], &states[j])?.to_cyclo();
            g[j][i] = v.conj();
            g[i][j] = v;
        }
    }
    Ok(rank(g) < k)
}

/// Rank of a square matrix over `Q(ω)`.
pub(crate) fn rank(mut a: Vec<Vec<Cyclo>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inv().unwrap();
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] * &inv;
                for cc in c..cols {
                    let d = &f * &a[r][cc];
                    a[i][cc] = a[i][cc].clone() - d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Dense vector of a sum of unit representatives, for `n <= DENSE_LIMIT`.
pub fn sum_to_dense(sum: &StabilizerSum) -> Result<crate::dense::DenseState> {
    let mut acc = crate::dense::DenseState { n: sum.n, amps: vec![Cyclo::zero(); 1 << sum.n] };
    for (c, m) in &sum.terms {
        let v = unit_dense(m)?;
        for (a, x) in acc.amps.iter_mut().zip(v.amps) {
            *a = a.clone() + c * &x;
        }
    }
    Ok(acc)
}

/// Unit-norm dense vector of `m` with positive lowest-index amplitude.
pub fn unit_dense(m: &StabilizerMatrix) -> Result<crate::dense::DenseState> {
    let v = m.to_dense()?;
    let k = m.support_log2() as u32;
    let norm = ExactScalar::new(0, k);
    let amps = v.iter().map(|a| (*a * norm).to_cyclo()).collect();
    Ok(crate::dense::DenseState { n: m.num_qubits(), amps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::stabilizer_state;

    fn m(rows: &[&str]) -> StabilizerMatrix {
        StabilizerMatrix::from_strs(rows).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let zz = m(&["ZI", "IZ"]);
        assert_eq!(inner_product_abs(&zz, &m(&["XX", "ZZ"])).unwrap(), ExactScalar::new(0, 1));
        assert_eq!(inner_product_abs(&zz, &zz).unwrap(), ExactScalar::ONE);
        assert_eq!(inner_product_abs(&zz, &m(&["IX", "XI"])).unwrap(), ExactScalar::new(0, 2));
        assert_eq!(inner_product_abs(&zz, &m(&["-ZI", "-IZ"])).unwrap(), ExactScalar::ZERO);
        let y = m(&["Y"]);
        assert_eq!(inner_product_complex(&m(&["Z"]), &y).unwrap(), ExactScalar::new(0, 1));
        assert_eq!(inner_product_complex(&m(&["-Z"]), &y).unwrap(), ExactScalar::new(2, 1));
        assert_eq!(inner_product_complex(&y, &m(&["-Z"])).unwrap(), ExactScalar::new(6, 1));
    }

    #[test]
    fn neighbor_classes() {
        let zz = m(&["ZI", "IZ"]);
        assert_eq!(k_neighbor_class(&zz, &m(&["IX", "XI"])).unwrap(), NeighborClass::Neighbor(2));
        assert_eq!(k_neighbor_class(&zz, &m(&["ZI", "IX"])).unwrap(), NeighborClass::Neighbor(1));
        assert_eq!(k_neighbor_class(&zz, &m(&["-ZI", "-IZ"])).unwrap(), NeighborClass::Orthogonal);
        assert_eq!(k_neighbor_class(&zz, &zz).unwrap(), NeighborClass::Parallel);
    }

    #[test]
    fn unbiased_sums() {
        assert_eq!(sum_basis_states(2, 0, 3, 0).unwrap(), m(&["XX", "ZZ"]));
        assert_eq!(sum_basis_states(1, 0, 1, 1).unwrap(), m(&["Y"]));
        assert_eq!(sum_basis_states(1, 0, 1, 2).unwrap(), m(&["-X"]));
        assert!(sum_basis_states(2, 1, 1, 0).is_err());
        // every pair and phase at n = 3
        for b1 in 0..8u64 {
            for b2 in (0..8u64).filter(|&b| b != b1) {
                for t in 0..4u8 {
                    let s = sum_basis_states(3, b1, b2, t).unwrap();
                    let got = stabilizer_state(3, s.rows()).unwrap();
                    let mut want = crate::dense::DenseState::basis(3, b1 as usize);
                    let mut other = crate::dense::DenseState::basis(3, b2 as usize);
                    other.scale(&Cyclo::i_pow(t));
                    want = want.add(&other);
                    assert!(got.is_parallel(&want), "{b1} {b2} {t}");
                }
            }
        }
    }

    #[test]
    fn tensor_example() {
        assert_eq!(tensor(&m(&["XX", "ZZ"]), &m(&["Z"])), m(&["XXI", "ZZI", "IIZ"]));
    }

    #[test]
    fn wedge_norms() {
        let zz = m(&["ZI", "IZ"]);
        assert_eq!(wedge_norm(&zz, &m(&["-ZI", "IZ"])).unwrap().0, BigRational::one());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(wedge_norm(&zz, &m(&["XI", "IZ"])).unwrap().0, half);
        assert!(wedge_norm(&zz, &zz).unwrap().0.is_zero());
        assert_eq!(wedge_norm(&zz, &m(&["XI", "IZ"])).unwrap().to_string(), "sqrt(1/2)");
    }

    #[test]
    fn bivector_errors() {
        let bell = m(&["XX", "ZZ"]);
        assert_eq!(bivector(&bell, &bell), Err(Error::Parallel));
        assert_eq!(bivector(&bell, &m(&["-ZI", "IZ"])), Err(Error::NotStabilizerBivector));
        assert_eq!(bivector(&m(&["ZI", "IZ"]), &m(&["IX", "XI"])), Err(Error::NotStabilizerBivector));
    }

    #[test]
    fn orthogonalize_single_qubit() {
        let (c1, c2) = (Cyclo::from_int(3), Cyclo::omega_pow(1));
        let mut s = StabilizerSum::new(1);
        s.insert(c1.clone(), &m(&["X"])).unwrap();
        s.insert(c2.clone(), &m(&["Z"])).unwrap();
        let o = orthogonalize(&s).unwrap();
        let r = Cyclo::inv_sqrt2();
        assert_eq!(o.terms, vec![(&c1 * &r + c2, m(&["Z"])), (&c1 * &r, m(&["-Z"]))]);
        assert_eq!(sum_to_dense(&o).unwrap(), sum_to_dense(&s).unwrap());
        let single = orthogonalize(&o).unwrap();
        assert_eq!(single, o);
    }

    #[test]
    fn dependence() {
        let a = m(&["ZI", "IZ"]);
        let b = m(&["-ZI", "IZ"]);
        let c = m(&["XI", "IZ"]);
        assert!(gramian_dependent(&[a.clone(), b.clone(), c]).unwrap());
        let basis: Vec<_> = (0..4).map(|i| StabilizerMatrix::basis_state(2, i).unwrap()).collect();
        assert!(!gramian_dependent(&basis).unwrap());
    }
}
