//! Counting and enumerating stabilizer states, with the experiments built
//! on top: angle histograms, amplitude laws, greedy local search and states
//! that stay far from every stabilizer state.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

pub use crate::dense::DenseState;
use crate::error::{Error, Result};
use crate::exact::{cmp_sqrt2, Cyclo};
use crate::geometry::{k_neighbor_class, nearest_neighbors, NeighborClass};
use crate::pauli::{Letter, PauliOp};
use crate::tableau::StabilizerMatrix;

/// Largest `n` for [`enumerate_states`].
pub const ENUM_LIMIT: usize = 4;

/// Number of `n`-qubit stabilizer states, `2^n ∏_{k=0}^{n-1} (2^(n-k) + 1)`.
pub fn count_states(n: u32) -> BigUint {
    let mut acc = BigUint::one() << n;
    for k in 0..n {
        acc *= (BigUint::one() << (n - k)) + 1u32;
    }
    acc
}

/// Number of states at inner product `2^(-k/2)` from a fixed state.
pub fn count_k_neighbors(n: u32, k: u32) -> BigUint {
    assert!(k <= n, "k must not exceed n");
    let two = |e: u32| BigInt::one() << e;
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= two(2 * n - j) - two(n);
        den *= two(k) - two(j);
    }
    let e = k as i64 * (k as i64 + 1 - n as i64);
    if e >= 0 {
        num <<= e as usize;
    } else {
        den <<= (-e) as usize;
    }
    let r = BigRational::new(num, den);
    assert!(r.is_integer());
    r.to_integer().to_biguint().unwrap()
}

/// Number of states orthogonal to a fixed state, `N(n)(2^n - 1)/(3·2^n)`.
pub fn count_orthogonal(n: u32) -> BigUint {
    count_states(n) * ((BigUint::one() << n) - 1u32) / (BigUint::from(3u32) << n)
}

/// Distribution of all other states around a reference state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub n: u32,
    pub total: BigUint,
    pub per_k: BTreeMap<u32, BigUint>,
    pub orthogonal: BigUint,
}

impl CountReport {
    /// The closed-form counts.
    pub fn from_formulas(n: u32) -> Self {
        CountReport {
            n,
            total: count_states(n),
            per_k: (1..=n).map(|k| (k, count_k_neighbors(n, k))).collect(),
            orthogonal: count_orthogonal(n),
        }
    }

    /// Share of the other `N(n) - 1` states, per `k` then orthogonal.
    pub fn fractions(&self) -> Vec<(Option<u32>, BigRational)> {
        let others: BigInt = BigInt::from(self.total.clone()) - 1;
        let frac = |c: &BigUint| BigRational::new(BigInt::from(c.clone()), others.clone());
        let mut out: Vec<_> = self.per_k.iter().map(|(k, c)| (Some(*k), frac(c))).collect();
        out.push((None, frac(&self.orthogonal)));
        out
    }

    /// Lines of `n,k,count,fraction`; `k` is `orth` for orthogonal states.
    pub fn csv_rows(&self) -> Vec<String> {
        let counts: Vec<BigUint> =
            self.per_k.values().cloned().chain(std::iter::once(self.orthogonal.clone())).collect();
        self.fractions()
            .into_iter()
            .zip(counts)
            .map(|((k, f), c)| {
                let k = k.map_or("orth".to_string(), |k| k.to_string());
                format!("{},{},{},{:.6}", self.n, k, c, f.to_f64().unwrap_or(f64::NAN))
            })
            .collect()
    }
}

/// `(lower, upper)` envelope for `lim_n a_{n,n-k}`, with
/// `a_{n,k} = L_n(k)/N(n)`.
pub fn limit_bounds(k: u32) -> (f64, f64) {
    let a5: f64 = (1..=5).map(|j| 1.0 / (1.0 - 2f64.powi(-j))).product();
    let b5: f64 = (1..=5).map(|j| 1.0 - 2.0 / (2f64.powi(j + k as i32) + 1.0)).product();
    let m5 = a5 * b5;
    let kf = k as f64;
    let p = 2f64.powi(k as i32 + 5);
    let lower = m5 / 2f64.powf(kf * (kf + 5.0) / 2.0) * (1.0 / 32.0 - 2.0 / (p - 1.0)).exp();
    let upper = m5 / 2f64.powf(kf * (kf + 3.0) / 2.0) * (1.0 / 15.0 - 2.0 / (p + 1.0)).exp();
    (lower, upper)
}

/// `a_{n,k} = L_n(k)/N(n)` as a float.
pub fn neighbor_share(n: u32, k: u32) -> f64 {
    BigRational::new(count_k_neighbors(n, k).into(), count_states(n).into()).to_f64().unwrap()
}

/// Mean of `|<ψ|φ>|` over all other states.
pub fn mean_overlap(n: u32) -> f64 {
    let others = (count_states(n) - 1u32).to_f64().unwrap();
    (1..=n)
        .map(|k| count_k_neighbors(n, k).to_f64().unwrap() * 2f64.powf(-(k as f64) / 2.0))
        .sum::<f64>()
        / others
}

type Vec2n = u32;

fn symplectic(a: Vec2n, b: Vec2n, n: usize) -> bool {
    let mask = (1u32 << n) - 1;
    let (ax, az, bx, bz) = (a & mask, a >> n, b & mask, b >> n);
    ((ax & bz) ^ (az & bx)).count_ones() % 2 == 1
}

/// Every maximal isotropic subspace of `GF(2)^(2n)`, as row-reduced bases.
fn lagrangians(n: usize) -> Vec<Vec<Vec2n>> {
    let cols = 2 * n;
    let mut out = Vec::new();
    for pivots in combinations(cols, n) {
        // free positions of row r: non-pivot columns right of its pivot
        let free: Vec<Vec<usize>> = pivots
            .iter()
            .map(|&p| (p + 1..cols).filter(|c| !pivots.contains(c)).collect())
            .collect();
        let total: usize = free.iter().map(Vec::len).sum();
        for assign in 0u64..(1 << total) {
            let mut bit = 0;
            let mut rows = Vec::with_capacity(n);
            for (r, &p) in pivots.iter().enumerate() {
                let mut v: Vec2n = 1 << p;
                for &c in &free[r] {
                    if assign >> bit & 1 == 1 {
                        v |= 1 << c;
                    }
                    bit += 1;
                }
                rows.push(v);
            }
            let iso = (0..n).all(|i| (i + 1..n).all(|j| !symplectic(rows[i], rows[j], n)));
            if iso {
                out.push(rows);
            }
        }
    }
    out
}

fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// Every `n`-qubit stabilizer state exactly once, as canonical matrices:
/// each dissimilar canonical shape followed by its `2^n` sign choices.
pub fn enumerate_states(n: usize) -> Result<Vec<StabilizerMatrix>> {
    if n == 0 || n > ENUM_LIMIT {
        return Err(Error::TooLarge { what: "enumeration", n, max: ENUM_LIMIT });
    }
    let mut out = Vec::new();
    for basis in lagrangians(n) {
        let rows: Vec<PauliOp> = basis
            .iter()
            .map(|&v| {
                let letters: Vec<Letter> =
                    (0..n).map(|q| Letter::from_bits(v >> q & 1 == 1, v >> (n + q) & 1 == 1)).collect();
                PauliOp::from_letters(&letters, 0)
            })
            .collect();
        let shape = StabilizerMatrix::from_rows_unchecked(n, rows).canonicalize();
        for signs in 0u32..(1 << n) {
            let rows = shape
                .rows()
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut r = r.clone();
                    r.set_phase(if signs >> i & 1 == 1 { 2 } else { 0 });
                    r
                })
                .collect();
            out.push(StabilizerMatrix::from_rows_unchecked(n, rows));
        }
    }
    Ok(out)
}

/// Classify every enumerated state against `reference`.
pub fn angle_histogram(n: usize, reference: &StabilizerMatrix) -> Result<CountReport> {
    let states = enumerate_states(n)?;
    let mut per_k: BTreeMap<u32, BigUint> = (1..=n as u32).map(|k| (k, BigUint::zero())).collect();
    let mut orthogonal = BigUint::zero();
    let mut parallel = 0usize;
    for s in &states {
        match k_neighbor_class(reference, s)? {
            NeighborClass::Parallel => parallel += 1,
            NeighborClass::Neighbor(k) => *per_k.get_mut(&k).unwrap() += 1u32,
            NeighborClass::Orthogonal => orthogonal += 1u32,
        }
    }
    if parallel != 1 {
        return Err(Error::Domain(format!("found {parallel} copies of the reference state")));
    }
    Ok(CountReport { n: n as u32, total: BigUint::from(states.len()), per_k, orthogonal })
}

/// Checks the amplitude laws every stabilizer state obeys, on a vector
/// scaled so its first nonzero amplitude is 1: support a power of two,
/// nonzero entries in `{±1, ±i}`, imaginary count zero or half the
/// support, negative count (up to an overall sign) zero or a power of two,
/// and never exactly three nonzero double cofactors.
pub fn amplitude_laws_hold(v: &DenseState) -> bool {
    let support = v.support();
    let s = support.len();
    if !s.is_power_of_two() {
        return false;
    }
    let mut phases = Vec::with_capacity(s);
    for &b in &support {
        match (0..4u8).find(|&m| v.amps[b] == Cyclo::i_pow(m)) {
            Some(m) => phases.push(m),
            None => return false,
        }
    }
    let imag = phases.iter().filter(|&&m| m % 2 == 1).count();
    if imag != 0 && 2 * imag != s {
        return false;
    }
    let neg = phases.iter().filter(|&&m| m >= 2).count();
    let ok = |c: usize| c == 0 || c.is_power_of_two();
    if !ok(neg) && !ok(s - neg) {
        return false;
    }
    let n = v.n;
    for q in 0..n {
        for r in q + 1..n {
            let (mq, mr) = (1 << (n - 1 - q), 1 << (n - 1 - r));
            let nonzero = (0..4)
                .filter(|&ab| {
                    let want = (if ab & 2 != 0 { mq } else { 0 }) | (if ab & 1 != 0 { mr } else { 0 });
                    support.iter().any(|&b| b & (mq | mr) == want)
                })
                .count();
            if nonzero == 3 {
                return false;
            }
        }
    }
    true
}

/// `|<s|t>|² / <t|t>` for a unit stabilizer state `s`, written `p + q√2`.
pub type Overlap = (BigRational, BigRational);

fn overlap_sqr(s: &StabilizerMatrix, t: &DenseState, t_norm: &Overlap) -> Result<Overlap> {
    let v = s.to_dense()?;
    let mut acc = Cyclo::zero();
    for (a, x) in v.iter().zip(&t.amps) {
        if !a.is_zero() && !x.is_zero() {
            acc = acc + &a.conj().to_cyclo() * x;
        }
    }
    let (p, q) = acc.norm_sqr();
    let support = BigRational::from_integer(BigInt::one() << s.support_log2());
    // divide p + q√2 by support·(tp + tq√2)
    let (tp, tq) = t_norm;
    let den = tp * tp - tq * tq * BigRational::from_integer(2.into());
    let np = &p * tp - &q * tq * BigRational::from_integer(2.into());
    let nq = &q * tp - &p * tq;
    Ok((np / (&den * &support), nq / (den * support)))
}

fn dense_norm(t: &DenseState) -> Result<Overlap> {
    let nrm = t.norm_sqr();
    let c = nrm.coeffs();
    if !c[2].is_zero() || c[3] != -c[1].clone() {
        return Err(Error::Domain("target norm is not real".into()));
    }
    Ok((c[0].clone(), c[1].clone()))
}

/// Largest squared overlap of `target` with any stabilizer state, and a
/// state attaining it.
pub fn max_overlap(target: &DenseState) -> Result<(Overlap, StabilizerMatrix)> {
    let t_norm = dense_norm(target)?;
    let mut best: Option<(Overlap, StabilizerMatrix)> = None;
    for s in enumerate_states(target.n)? {
        let o = overlap_sqr(&s, target, &t_norm)?;
        if best.as_ref().is_none_or(|(b, _)| cmp_sqrt2(&o, b) == Ordering::Greater) {
            best = Some((o, s));
        }
    }
    Ok(best.unwrap())
}

/// One step of a local search: the state and its squared overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchStep {
    pub state: StabilizerMatrix,
    pub overlap: Overlap,
}

/// Greedy ascent over nearest neighbors, maximizing `|<s|target>|`. Stops
/// when no neighbor is strictly better. Returns the visited path.
pub fn local_search(target: &DenseState, start: &StabilizerMatrix) -> Result<Vec<SearchStep>> {
    let t_norm = dense_norm(target)?;
    let mut cur = start.canonicalize();
    let mut cur_o = overlap_sqr(&cur, target, &t_norm)?;
    let mut path = vec![SearchStep { state: cur.clone(), overlap: cur_o.clone() }];
    loop {
        let mut best: Option<(Overlap, StabilizerMatrix)> = None;
        for nb in nearest_neighbors(&cur)? {
            let o = overlap_sqr(&nb, target, &t_norm)?;
            let beats = |x: &Overlap| cmp_sqrt2(&o, x) == Ordering::Greater;
            if beats(&cur_o) && best.as_ref().is_none_or(|(b, _)| beats(b)) {
                best = Some((o, nb));
            }
        }
        match best {
            Some((o, nb)) => {
                cur = nb;
                cur_o = o;
                path.push(SearchStep { state: cur.clone(), overlap: cur_o.clone() });
            }
            None => return Ok(path),
        }
    }
}

/// `(1 + ε)|0...0> + Σ_{b != 0} |b>`, unnormalized.
pub fn search_target(n: usize, eps: &BigRational) -> DenseState {
    let mut amps = vec![Cyclo::one(); 1 << n];
    amps[0] = Cyclo::from_rational(BigRational::one() + eps);
    DenseState { n, amps }
}

/// `(|00> + |01> + |10>)^{⊗m}` on `2m` qubits, unnormalized.
pub fn evading_state(m: usize) -> DenseState {
    let one = Cyclo::one();
    let mu = DenseState { n: 2, amps: vec![one.clone(), one.clone(), one, Cyclo::zero()] };
    (1..m).fold(mu.clone(), |acc, _| acc.tensor(&mu))
}

/// `sqrt(p + q√2)` as a float.
pub fn overlap_to_f64(o: &Overlap) -> f64 {
    (o.0.to_f64().unwrap() + o.1.to_f64().unwrap() * std::f64::consts::SQRT_2).sqrt()
}

/// The sixty two-qubit stabilizer states: amplitudes of `|00>, |01>,
/// |10>, |11>` up to normalization, generators, and angle to `|00>`.
pub const TWO_QUBIT_TABLE: &str = include_str!("../data/two_qubit_states.txt");

fn parse_amp(s: &str) -> Option<Cyclo> {
    let (neg, body) = s.strip_prefix('-').map_or((false, s), |b| (true, b));
    let c = match body {
        "0" => Cyclo::zero(),
        "1" => Cyclo::one(),
        "i" => Cyclo::i_pow(1),
        _ => return None,
    };
    Some(if neg { -c } else { c })
}

/// Checks each table row against the dense oracle and the enumeration.
/// Returns one message per mismatch.
pub fn verify_two_qubit_table(text: &str) -> Result<Vec<String>> {
    let mut problems = Vec::new();
    let zero = StabilizerMatrix::basis_state(2, 0)?;
    let mut seen = std::collections::BTreeSet::new();
    for (lineno, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#')) {
        let f: Vec<&str> = line.split_whitespace().collect();
        let bad = |msg: &str| format!("line {}: {msg}: {line}", lineno + 1);
        if f.len() != 4 {
            problems.push(bad("expected amplitudes, two generators and an angle"));
            continue;
        }
        let m = StabilizerMatrix::from_strs(&f[1..3]).map_err(|_| Error::Parse { line: lineno + 1, msg: line.into() })?;
        let amps: Option<Vec<Cyclo>> = f[0].split(',').map(parse_amp).collect();
        let Some(amps) = amps.filter(|a| a.len() == 4) else {
            problems.push(bad("unreadable amplitudes"));
            continue;
        };
        let want = DenseState { n: 2, amps }.normalize_first();
        if crate::dense::stabilizer_state(2, m.rows()).as_ref() != Some(&want) {
            problems.push(bad("generators do not fix the listed amplitudes"));
        }
        let class = k_neighbor_class(&zero, &m)?;
        let angle_ok = match f[3] {
            "0" => class == NeighborClass::Parallel,
            "pi/4" => class == NeighborClass::Neighbor(1),
            "pi/3" => class == NeighborClass::Neighbor(2),
            "orth" => class == NeighborClass::Orthogonal,
            _ => false,
        };
        if !angle_ok {
            problems.push(bad("wrong angle"));
        }
        if !seen.insert(m.canonicalize().to_string()) {
            problems.push(bad("duplicate state"));
        }
    }
    let all: std::collections::BTreeSet<String> =
        enumerate_states(2)?.iter().map(|m| m.canonicalize().to_string()).collect();
    if all != seen {
        problems.push(format!("table has {} states, enumeration {}, common {}", seen.len(), all.len(), all.intersection(&seen).count()));
    }
    Ok(problems)
}
