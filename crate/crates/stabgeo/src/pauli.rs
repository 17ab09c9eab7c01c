//! Pauli operators with a phase in `{1, i, -1, -i}`.
//!
//! Each qubit holds two bits, `x` and `z`: `00 = I`, `01 = Z`, `10 = X`,
//! `11 = Y`. The bits are packed into 64-bit words, one plane for `x` and one
//! for `z`, so products and commutation tests run word-wise. Qubit 0 is the
//! leftmost letter and the most significant bit of a basis index.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    I,
    X,
    Y,
    Z,
}

impl Letter {
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::I => (false, false),
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_bits(x: bool, z: bool) -> Letter {
        match (x, z) {
            (false, false) => Letter::I,
            (true, false) => Letter::X,
            (true, true) => Letter::Y,
            (false, true) => Letter::Z,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::I => 'I',
            Letter::X => 'X',
            Letter::Y => 'Y',
            Letter::Z => 'Z',
        }
    }
}

pub(crate) fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// `i^phase` times a tensor product of `I, X, Y, Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliOp {
    n: usize,
    x: Vec<u64>,
    z: Vec<u64>,
    phase: u8,
}

impl PauliOp {
    pub fn identity(n: usize) -> Self {
        PauliOp { n, x: vec![0; words(n)], z: vec![0; words(n)], phase: 0 }
    }

    pub fn from_letters(letters: &[Letter], phase: u8) -> Self {
        let mut p = PauliOp::identity(letters.len());
        for (q, &l) in letters.iter().enumerate() {
            p.set_letter(q, l);
        }
        p.phase = phase & 3;
        p
    }

    /// A single letter on qubit `q`, identity elsewhere.
    pub fn single(n: usize, q: usize, l: Letter) -> Self {
        let mut p = PauliOp::identity(n);
        p.set_letter(q, l);
        p
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Exponent `m` of the phase `i^m`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn set_phase(&mut self, phase: u8) {
        self.phase = phase & 3;
    }

    pub fn negate(&mut self) {
        self.phase = (self.phase + 2) & 3;
    }

    pub fn is_negative(&self) -> bool {
        self.phase == 2
    }

    pub fn letter(&self, q: usize) -> Letter {
        Letter::from_bits(self.x_bit(q), self.z_bit(q))
    }

    pub fn set_letter(&mut self, q: usize, l: Letter) {
        let (xb, zb) = l.bits();
        let (w, m) = (q / 64, 1u64 << (q % 64));
        if xb { self.x[w] |= m } else { self.x[w] &= !m }
        if zb { self.z[w] |= m } else { self.z[w] &= !m }
    }

    #[inline]
    pub fn x_bit(&self, q: usize) -> bool {
        self.x[q / 64] >> (q % 64) & 1 == 1
    }

    #[inline]
    pub fn z_bit(&self, q: usize) -> bool {
        self.z[q / 64] >> (q % 64) & 1 == 1
    }

    pub fn x_words(&self) -> &[u64] {
        &self.x
    }

    pub fn z_words(&self) -> &[u64] {
        &self.z
    }

    pub fn letters(&self) -> Vec<Letter> {
        (0..self.n).map(|q| self.letter(q)).collect()
    }

    /// True when every letter is `I`, whatever the phase.
    pub fn is_identity(&self) -> bool {
        self.x.iter().chain(&self.z).all(|&w| w == 0)
    }

    pub fn has_x_part(&self) -> bool {
        self.x.iter().any(|&w| w != 0)
    }

    /// Number of non-identity letters.
    pub fn weight(&self) -> usize {
        self.x.iter().zip(&self.z).map(|(a, b)| (a | b).count_ones() as usize).sum()
    }

    /// Same letters, ignoring phase.
    pub fn same_letters(&self, other: &PauliOp) -> bool {
        self.x == other.x && self.z == other.z
    }

    pub fn commutes(&self, other: &PauliOp) -> bool {
        let mut parity = 0u32;
        for w in 0..self.x.len() {
            parity ^= ((self.x[w] & other.z[w]) ^ (self.z[w] & other.x[w])).count_ones();
        }
        parity & 1 == 0
    }

    /// Phase exponent picked up by the letters of `self * other`.
    fn product_phase(&self, other: &PauliOp) -> u8 {
        let mut plus = 0u32;
        let mut minus = 0u32;
        for w in 0..self.x.len() {
            let (ax, az, bx, bz) = (self.x[w], self.z[w], other.x[w], other.z[w]);
            let (a_x, a_y, a_z) = (ax & !az, ax & az, !ax & az);
            let (b_x, b_y, b_z) = (bx & !bz, bx & bz, !bx & bz);
            plus += ((a_x & b_y) | (a_y & b_z) | (a_z & b_x)).count_ones();
            minus += ((a_y & b_x) | (a_z & b_y) | (a_x & b_z)).count_ones();
        }
        ((plus + 3 * minus) & 3) as u8
    }

    /// `self * other`.
    pub fn mul(&self, other: &PauliOp) -> PauliOp {
        assert_eq!(self.n, other.n, "pauli width mismatch");
        let phase = (self.phase + other.phase + self.product_phase(other)) & 3;
        PauliOp {
            n: self.n,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a ^ b).collect(),
            z: self.z.iter().zip(&other.z).map(|(a, b)| a ^ b).collect(),
            phase,
        }
    }

    /// Replace `self` with `left * self`.
    pub fn left_mul_assign(&mut self, left: &PauliOp) {
        let ph = left.product_phase(self);
        self.phase = (self.phase + left.phase + ph) & 3;
        for w in 0..self.x.len() {
            self.x[w] ^= left.x[w];
            self.z[w] ^= left.z[w];
        }
    }

    /// Apply to a computational basis state given as qubit-ordered bits.
    /// Returns the image bits and the exponent `m` of the factor `i^m`.
    pub fn apply_to_bits(&self, bits: &[u64]) -> (Vec<u64>, u8) {
        let mut m = self.phase as u32;
        let mut out = bits.to_vec();
        for w in 0..self.x.len() {
            let b = bits.get(w).copied().unwrap_or(0);
            m += (self.x[w] & self.z[w]).count_ones();
            m += 2 * (self.z[w] & b).count_ones();
            out[w] ^= self.x[w];
        }
        (out, (m & 3) as u8)
    }

    /// Apply to basis state `|b>` where qubit 0 is the most significant bit.
    pub fn apply_to_basis(&self, b: u64) -> Result<(u64, u8)> {
        check_index_width(self.n, b)?;
        let (out, m) = self.apply_to_bits(&index_to_bits(self.n, b));
        Ok((bits_to_index(self.n, &out), m))
    }

    /// Tensor product `self ⊗ other`.
    pub fn tensor(&self, other: &PauliOp) -> PauliOp {
        let mut letters = self.letters();
        letters.extend(other.letters());
        PauliOp::from_letters(&letters, self.phase + other.phase)
    }

    /// Drop qubit `q`.
    pub fn remove_qubit(&self, q: usize) -> PauliOp {
        let mut letters = self.letters();
        letters.remove(q);
        PauliOp::from_letters(&letters, self.phase)
    }
}

pub(crate) fn check_index_width(n: usize, b: u64) -> Result<()> {
    if n > 63 {
        return Err(Error::TooLarge { what: "basis indices", n, max: 63 });
    }
    if b >> n != 0 {
        return Err(Error::Index { index: b as usize, len: 1 << n });
    }
    Ok(())
}

/// Basis index to qubit-ordered bit words.
pub fn index_to_bits(n: usize, b: u64) -> Vec<u64> {
    let mut bits = vec![0u64; words(n)];
    for q in 0..n {
        if b >> (n - 1 - q) & 1 == 1 {
            bits[q / 64] |= 1 << (q % 64);
        }
    }
    bits
}

/// Qubit-ordered bit words to a basis index. Only meaningful for `n <= 63`.
pub fn bits_to_index(n: usize, bits: &[u64]) -> u64 {
    let mut b = 0u64;
    for q in 0..n {
        if bits[q / 64] >> (q % 64) & 1 == 1 {
            b |= 1 << (n - 1 - q);
        }
    }
    b
}

impl fmt::Display for PauliOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = ["", "i", "-", "-i"][self.phase as usize];
        f.write_str(prefix)?;
        for q in 0..self.n {
            write!(f, "{}", self.letter(q).as_char())?;
        }
        Ok(())
    }
}

impl FromStr for PauliOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (phase, rest) = if let Some(r) = s.strip_prefix("-i") {
            (3, r)
        } else if let Some(r) = s.strip_prefix("+i") {
            (1, r)
        } else if let Some(r) = s.strip_prefix('-') {
            (2, r)
        } else if let Some(r) = s.strip_prefix('+') {
            (0, r)
        } else if let Some(r) = s.strip_prefix('i') {
            (1, r)
        } else {
            (0, s)
        };
        if rest.is_empty() {
            return Err(Error::Parse { line: 0, msg: format!("empty operator in {s:?}") });
        }
        let letters = rest
            .chars()
            .map(|c| match c {
                'I' => Ok(Letter::I),
                'X' => Ok(Letter::X),
                'Y' => Ok(Letter::Y),
                'Z' => Ok(Letter::Z),
                _ => Err(Error::Parse { line: 0, msg: format!("bad letter {c:?} in {s:?}") }),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PauliOp::from_letters(&letters, phase))
    }
}
