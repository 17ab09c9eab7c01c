//! Stabilizer matrices: generator rows, canonical form, amplitudes,
//! cofactors and partial traces.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::ExactScalar;
use crate::pauli::{bits_to_index, check_index_width, index_to_bits, words, Letter, PauliOp};

/// Largest qubit count accepted by [`StabilizerMatrix::to_dense`].
pub const DENSE_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StabilizerMatrix {
    n: usize,
    rows: Vec<PauliOp>,
}

/// Rank of a set of Pauli letter strings over GF(2).
pub(crate) fn gf2_rank(rows: &[PauliOp]) -> usize {
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for r in rows {
        let mut v: Vec<u64> = r.x_words().iter().chain(r.z_words()).copied().collect();
        for (b, &p) in basis.iter().zip(&pivots) {
            if v[p / 64] >> (p % 64) & 1 == 1 {
                v.iter_mut().zip(b).for_each(|(a, c)| *a ^= c);
            }
        }
        if let Some(p) = first_bit(&v) {
            basis.push(v);
            pivots.push(p);
        }
    }
    basis.len()
}

fn first_bit(v: &[u64]) -> Option<usize> {
    v.iter().enumerate().find(|(_, w)| **w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

impl StabilizerMatrix {
    /// Validates widths, real phases, commutation and independence.
    pub fn new(n: usize, rows: Vec<PauliOp>) -> Result<Self> {
        if rows.len() > n {
            return Err(Error::Dependent);
        }
        for r in &rows {
            if r.num_qubits() != n {
                return Err(Error::WidthMismatch { expected: n, got: r.num_qubits() });
            }
            if r.phase() & 1 == 1 {
                return Err(Error::ImaginaryPhase);
            }
        }
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if !rows[i].commutes(&rows[j]) {
                    return Err(Error::NonCommuting(i, j));
                }
            }
        }
        if gf2_rank(&rows) != rows.len() {
            return Err(Error::Dependent);
        }
        Ok(StabilizerMatrix { n, rows })
    }

    pub(crate) fn from_rows_unchecked(n: usize, rows: Vec<PauliOp>) -> Self {
        StabilizerMatrix { n, rows }
    }

    /// Parse rows like `"XX"`, `"-ZZ"`.
    pub fn from_strs(rows: &[&str]) -> Result<Self> {
        let ops = rows.iter().map(|s| s.parse()).collect::<Result<Vec<PauliOp>>>()?;
        let n = ops.first().map_or(0, |p| p.num_qubits());
        StabilizerMatrix::new(n, ops)
    }

    /// The computational basis state `|b>`.
    pub fn basis_state(n: usize, b: u64) -> Result<Self> {
        check_index_width(n, b)?;
        Ok(StabilizerMatrix::from_bits(n, &index_to_bits(n, b)))
    }

    /// `|0...0>` on any number of qubits.
    pub fn zero_state(n: usize) -> Self {
        StabilizerMatrix::from_bits(n, &vec![0; words(n)])
    }

    /// Basis state from qubit-ordered bit words.
    pub fn from_bits(n: usize, bits: &[u64]) -> Self {
        let rows = (0..n)
            .map(|q| {
                let mut z = PauliOp::single(n, q, Letter::Z);
                if bits[q / 64] >> (q % 64) & 1 == 1 {
                    z.negate();
                }
                z
            })
            .collect();
        StabilizerMatrix { n, rows }
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[PauliOp] {
        &self.rows
    }

    pub(crate) fn rows_mut(&mut self) -> &mut [PauliOp] {
        &mut self.rows
    }

    pub fn is_pure(&self) -> bool {
        self.rows.len() == self.n
    }

    fn require_pure(&self) -> Result<()> {
        if self.is_pure() { Ok(()) } else { Err(Error::NotPure { rows: self.rows.len(), n: self.n }) }
    }

    /// Replace row `i` by `row_j * row_i`.
    pub fn row_mult(&self, i: usize, j: usize) -> Result<Self> {
        let len = self.rows.len();
        for idx in [i, j] {
            if idx >= len {
                return Err(Error::Index { index: idx, len });
            }
        }
        if i == j {
            return Err(Error::Domain("row_mult needs two distinct rows".into()));
        }
        let mut out = self.clone();
        out.rows[i].left_mul_assign(&self.rows[j]);
        if out.rows[i].phase() & 1 == 1 {
            return Err(Error::OddPhase);
        }
        Ok(out)
    }

    /// Row-reduced echelon form: rows with X/Y on top, leading columns
    /// strictly increasing, followed by Z-only rows in echelon form. Pivot
    /// columns are cleared in every other row, which makes the form unique.
    pub fn canonicalize(&self) -> Self {
        let mut rows = self.rows.clone();
        let r = rows.len();
        let mut i = 0;
        for j in 0..self.n {
            if i == r {
                break;
            }
            let Some(k) = (i..r).find(|&k| rows[k].x_bit(j)) else { continue };
            rows.swap(i, k);
            let pivot = rows[i].clone();
            for (m, row) in rows.iter_mut().enumerate() {
                if m != i && row.x_bit(j) {
                    row.left_mul_assign(&pivot);
                }
            }
            i += 1;
        }
        for j in 0..self.n {
            if i == r {
                break;
            }
            let Some(k) = (i..r).find(|&k| rows[k].z_bit(j)) else { continue };
            rows.swap(i, k);
            let pivot = rows[i].clone();
            for (m, row) in rows.iter_mut().enumerate() {
                if m != i && row.z_bit(j) {
                    row.left_mul_assign(&pivot);
                }
            }
            i += 1;
        }
        debug_assert!(rows.iter().all(|p| p.phase() & 1 == 0));
        StabilizerMatrix { n: self.n, rows }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Same letters row by row, signs ignored. Both matrices must be canonical.
    pub fn is_similar(&self, other: &StabilizerMatrix) -> Result<bool> {
        if !self.is_canonical() || !other.is_canonical() {
            return Err(Error::Domain("similarity is defined on canonical matrices".into()));
        }
        Ok(self.n == other.n
            && self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.same_letters(b)))
    }

    /// Canonical forms have the same letters.
    pub fn similar_to(&self, other: &StabilizerMatrix) -> bool {
        self.canonicalize().is_similar(&other.canonicalize()).unwrap_or(false)
    }

    /// Qubit-ordered bits if the rows are `±Z_j` on the diagonal.
    pub fn basis_bits(&self) -> Option<Vec<u64>> {
        if !self.is_pure() {
            return None;
        }
        let mut bits = vec![0u64; words(self.n)];
        for (j, row) in self.rows.iter().enumerate() {
            if row.has_x_part() || row.weight() != 1 || !row.z_bit(j) {
                return None;
            }
            if row.is_negative() {
                bits[j / 64] |= 1 << (j % 64);
            }
        }
        Some(bits)
    }

    /// Basis index when the matrix is in basis form.
    pub fn is_basis_form(&self) -> Option<u64> {
        if self.n > 63 {
            return None;
        }
        self.basis_bits().map(|b| bits_to_index(self.n, &b))
    }

    /// Number of X-block rows of the canonical form; the support has `2^k` states.
    pub fn support_log2(&self) -> usize {
        self.canonicalize().rows.iter().filter(|r| r.has_x_part()).count()
    }

    pub(crate) fn support(&self) -> Result<Support> {
        self.require_pure()?;
        Ok(Support::new(&self.canonicalize()))
    }

    /// Amplitude of `|b>` in the representative whose lowest-index nonzero
    /// amplitude is 1. Nonzero values are powers of `i`.
    pub fn amplitude(&self, b: u64) -> Result<ExactScalar> {
        check_index_width(self.n, b)?;
        Ok(self.support()?.amplitude(&index_to_bits(self.n, b)))
    }

    /// One or two nonzero amplitudes of the representative. The second one is
    /// the lowest-index imaginary amplitude if there is one, otherwise the
    /// next support state. The flag is true when a second sample was asked
    /// for but the support has one state.
    pub fn sample_amplitudes(&self, count: usize) -> Result<(Vec<(u64, ExactScalar)>, bool)> {
        if !(1..=2).contains(&count) {
            return Err(Error::Domain(format!("can sample 1 or 2 amplitudes, not {count}")));
        }
        check_index_width(self.n, 0)?;
        let s = self.support()?;
        let mut out = vec![(bits_to_index(self.n, &s.base), ExactScalar::ONE)];
        if count == 1 {
            return Ok((out, false));
        }
        if s.gens.is_empty() {
            return Ok((out, true));
        }
        let imag = (0..s.gens.len()).rev().find(|&t| s.gens[t].apply_to_bits(&s.base).1 & 1 == 1);
        let t = imag.unwrap_or(s.gens.len() - 1);
        let (bits, m) = s.gens[t].apply_to_bits(&s.base);
        out.push((bits_to_index(self.n, &bits), ExactScalar::omega(2 * m as u32)));
        Ok((out, false))
    }

    /// Amplitudes of the representative, lowest-index nonzero entry equal to 1.
    pub fn to_dense(&self) -> Result<Vec<ExactScalar>> {
        if self.n > DENSE_LIMIT {
            return Err(Error::TooLarge { what: "dense vectors", n: self.n, max: DENSE_LIMIT });
        }
        let s = self.support()?;
        let mut v = vec![ExactScalar::ZERO; 1 << self.n];
        let k = s.gens.len();
        for c in 0u64..(1 << k) {
            let mut g = PauliOp::identity(self.n);
            for t in 0..k {
                if c >> t & 1 == 1 {
                    g.left_mul_assign(&s.gens[t]);
                }
            }
            let (bits, m) = g.apply_to_bits(&s.base);
            v[bits_to_index(self.n, &bits) as usize] = ExactScalar::omega(2 * m as u32);
        }
        Ok(v)
    }

    /// Project qubit `j` onto `|a>`. Fails when the projection is zero.
    pub fn cofactor(&self, j: usize, a: bool) -> Result<Self> {
        if j >= self.n {
            return Err(Error::Index { index: j, len: self.n });
        }
        match self.z_outcome(j) {
            ZOutcome::Random => Ok(self.project_random(j, a)),
            ZOutcome::Fixed(b) if b == a => Ok(self.canonicalize()),
            ZOutcome::Fixed(_) => Err(Error::ZeroCofactor),
            ZOutcome::Free => {
                let mut rows = self.canonicalize().rows;
                let mut z = PauliOp::single(self.n, j, Letter::Z);
                if a {
                    z.negate();
                }
                rows.push(z);
                Ok(StabilizerMatrix { n: self.n, rows }.canonicalize())
            }
        }
    }

    /// How a `Z_j` measurement behaves on this state.
    pub(crate) fn z_outcome(&self, j: usize) -> ZOutcome {
        if self.rows.iter().any(|r| r.x_bit(j)) {
            return ZOutcome::Random;
        }
        let c = self.canonicalize();
        c.rows
            .iter()
            .find(|r| !r.has_x_part() && r.weight() == 1 && r.z_bit(j))
            .map_or(ZOutcome::Free, |r| ZOutcome::Fixed(r.is_negative()))
    }

    /// Outcome `a` of a `Z_j` measurement that anticommutes with some row.
    pub(crate) fn project_random(&self, j: usize, a: bool) -> Self {
        let mut rows = self.rows.clone();
        let p = rows.iter().position(|r| r.x_bit(j)).expect("random outcome needs an X/Y in column j");
        let pivot = rows[p].clone();
        for (m, row) in rows.iter_mut().enumerate() {
            if m != p && row.x_bit(j) {
                row.left_mul_assign(&pivot);
            }
        }
        let mut z = PauliOp::single(self.n, j, Letter::Z);
        if a {
            z.negate();
        }
        rows[p] = z;
        StabilizerMatrix { n: self.n, rows }.canonicalize()
    }

    /// Trace out qubit `j`. The result may be mixed (fewer rows than qubits).
    pub fn partial_trace(&self, j: usize) -> Result<Self> {
        if j >= self.n {
            return Err(Error::Index { index: j, len: self.n });
        }
        let mut rows = self.rows.clone();
        let mut removed = Vec::new();
        if let Some(p) = rows.iter().position(|r| r.x_bit(j)) {
            let pivot = rows[p].clone();
            for (m, row) in rows.iter_mut().enumerate() {
                if m != p && row.x_bit(j) {
                    row.left_mul_assign(&pivot);
                }
            }
            removed.push(p);
        }
        if let Some(q) = (0..rows.len()).find(|&q| !removed.contains(&q) && rows[q].z_bit(j)) {
            let pivot = rows[q].clone();
            for (m, row) in rows.iter_mut().enumerate() {
                if m != q && !removed.contains(&m) && row.z_bit(j) {
                    row.left_mul_assign(&pivot);
                }
            }
            removed.push(q);
        }
        let kept = rows
            .iter()
            .enumerate()
            .filter(|(m, _)| !removed.contains(m))
            .map(|(_, r)| r.remove_qubit(j))
            .collect();
        Ok(StabilizerMatrix { n: self.n - 1, rows: kept }.canonicalize())
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &StabilizerMatrix) -> Self {
        let left = PauliOp::identity(self.n);
        let right = PauliOp::identity(other.n);
        let mut rows: Vec<PauliOp> = self.rows.iter().map(|r| r.tensor(&right)).collect();
        rows.extend(other.rows.iter().map(|r| left.tensor(r)));
        StabilizerMatrix { n: self.n + other.n, rows }
    }

    /// Parse the matrix file format: one operator per line, `#` comments.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut ops: Vec<PauliOp> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let op: PauliOp = line.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                e => e,
            })?;
            if let Some(first) = ops.first() {
                if first.num_qubits() != op.num_qubits() {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("width {} differs from {}", op.num_qubits(), first.num_qubits()),
                    });
                }
            }
            ops.push(op);
        }
        if ops.is_empty() {
            return Err(Error::Parse { line: 0, msg: "no rows".into() });
        }
        let n = ops[0].num_qubits();
        StabilizerMatrix::new(n, ops).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
    }
}

pub(crate) enum ZOutcome {
    Random,
    Fixed(bool),
    /// Mixed state on which `Z_j` is not determined.
    Free,
}

/// Support of a pure state: `base` is the lowest-index basis state, the
/// support is `base` xor the span of the X parts of `gens`.
pub(crate) struct Support {
    pub n: usize,
    pub base: Vec<u64>,
    pub gens: Vec<PauliOp>,
    pub pivots: Vec<usize>,
}

impl Support {
    fn new(c: &StabilizerMatrix) -> Self {
        let n = c.n;
        let mut base = vec![0u64; words(n)];
        let mut gens = Vec::new();
        let mut pivots = Vec::new();
        for r in &c.rows {
            if r.has_x_part() {
                pivots.push((0..n).find(|&q| r.x_bit(q)).unwrap());
                gens.push(r.clone());
            } else if r.is_negative() {
                let p = (0..n).find(|&q| r.z_bit(q)).unwrap();
                base[p / 64] ^= 1 << (p % 64);
            }
        }
        for (g, &p) in gens.iter().zip(&pivots) {
            if base[p / 64] >> (p % 64) & 1 == 1 {
                base.iter_mut().zip(g.x_words()).for_each(|(b, x)| *b ^= x);
            }
        }
        Support { n, base, gens, pivots }
    }

    pub fn amplitude(&self, bits: &[u64]) -> ExactScalar {
        let mut d: Vec<u64> = bits.iter().zip(&self.base).map(|(a, b)| a ^ b).collect();
        let mut g = PauliOp::identity(self.n);
        for (row, &p) in self.gens.iter().zip(&self.pivots) {
            if d[p / 64] >> (p % 64) & 1 == 1 {
                d.iter_mut().zip(row.x_words()).for_each(|(a, x)| *a ^= x);
                g.left_mul_assign(row);
            }
        }
        if d.iter().any(|&w| w != 0) {
            return ExactScalar::ZERO;
        }
        let (_, m) = g.apply_to_bits(&self.base);
        ExactScalar::omega(2 * m as u32)
    }
}

impl fmt::Display for StabilizerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

impl FromStr for StabilizerMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StabilizerMatrix::parse_text(s)
    }
}
