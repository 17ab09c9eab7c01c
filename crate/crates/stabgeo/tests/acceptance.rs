//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use stabgeo::bench::{bench_inner, fit_exponent, Reference};
use stabgeo::census::{
    amplitude_laws_hold, angle_histogram, count_states, enumerate_states, evading_state, local_search,
    max_overlap, search_target, verify_two_qubit_table, TWO_QUBIT_TABLE,
};
use stabgeo::clifford::{apply_circuit_with_phase, conjugate_circuit, global_phase_of_gate};
use stabgeo::dense::{stabilizer_state, DenseState};
use stabgeo::geometry::{
    bivector, inner_product_complex, k_neighbor_class, nearest_neighbors, orthogonalize, sum_to_dense,
    unit_dense, wedge_norm, NeighborClass, StabilizerSum,
};
use stabgeo::synth::{basis_norm_circuit, verify_template};
use stabgeo::{CliffordCircuit, Cyclo, Error, Gate, GlobalPhase, StabilizerMatrix};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok { Ok(()) } else { Err(msg()) }
}

fn lib<T>(r: stabgeo::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn m(rows: &[&str]) -> StabilizerMatrix {
    StabilizerMatrix::from_strs(rows).unwrap()
}

fn counting() -> Check {
    let t = Instant::now();
    let want = [6u64, 60, 1080, 36720, 2423520];
    for (n, w) in (1..=5).zip(want) {
        ensure(count_states(n) == BigUint::from(w), || format!("N({n}) = {}", count_states(n)))?;
    }
    ensure(t.elapsed().as_millis() < 1, || format!("took {:?}", t.elapsed()))
}

fn enumeration() -> Check {
    for n in 1..=4 {
        let states = lib(enumerate_states(n))?;
        let distinct: HashSet<_> = states.iter().collect();
        ensure(distinct.len() == states.len(), || format!("n={n}: duplicates"))?;
        ensure(BigUint::from(states.len()) == count_states(n as u32), || format!("n={n}: {} states", states.len()))?;
        for s in &states {
            ensure(s.is_canonical(), || format!("not canonical:\n{s}"))?;
            lib(StabilizerMatrix::new(n, s.rows().to_vec()))?;
        }
    }
    let problems = lib(verify_two_qubit_table(TWO_QUBIT_TABLE))?;
    ensure(problems.is_empty(), || problems.join("\n"))
}

fn angles() -> Check {
    let r2 = lib(angle_histogram(2, &StabilizerMatrix::zero_state(2)))?;
    let got: Vec<u64> = r2.per_k.values().chain([&r2.orthogonal]).map(|c| c.to_u64().unwrap()).collect();
    ensure(got == [12, 32, 15], || format!("n=2 counts {got:?}"))?;
    let r3 = lib(angle_histogram(3, &StabilizerMatrix::zero_state(3)))?;
    let want = [0.0259, 0.2076, 0.4745, 0.2919];
    for ((_, f), w) in r3.fractions().into_iter().zip(want) {
        let f = f.to_f64().unwrap();
        ensure((f - w).abs() <= 0.005, || format!("n=3 fraction {f} vs {w}"))?;
    }
    Ok(())
}

fn neighbor_counts() -> Check {
    for (n, want) in (1..=4).zip([4, 12, 28, 60]) {
        let zero = StabilizerMatrix::zero_state(n);
        let nb = lib(nearest_neighbors(&zero))?;
        ensure(nb.len() == want, || format!("n={n}: {} neighbors", nb.len()))?;
        for s in &nb {
            ensure(lib(k_neighbor_class(&zero, s))? == NeighborClass::Neighbor(1), || format!("not a neighbor:\n{s}"))?;
        }
    }
    Ok(())
}

fn oracle_inner_products() -> Check {
    let t = Instant::now();
    let states = lib(enumerate_states(2))?;
    let dense: Vec<DenseState> = states.iter().map(|s| unit_dense(s).unwrap()).collect();
    for (a, da) in states.iter().zip(&dense) {
        for (b, db) in states.iter().zip(&dense) {
            let fast = lib(inner_product_complex(a, b))?.to_cyclo();
            ensure(fast == da.inner(db), || format!("<{a}|{b}>: {fast} vs {}", da.inner(db)))?;
        }
    }
    ensure(t.elapsed().as_secs() < 10, || format!("took {:?}", t.elapsed()))
}

fn synthesis() -> Check {
    let n = 3;
    for s in lib(enumerate_states(n))? {
        let bn = lib(basis_norm_circuit(&s))?;
        let c = &bn.circuit;
        ensure(verify_template(c), || format!("template broken for\n{s}{c}"))?;
        let (h, p, ctl) = c.counts();
        ensure(h <= 2 * n && p <= n && ctl <= n * n, || format!("gate counts {h} {p} {ctl}"))?;
        let reached = lib(conjugate_circuit(&s, c))?.canonicalize();
        ensure(reached.is_basis_form() == bn.basis_index(), || format!("not in basis form:\n{reached}"))?;
        let mut v = stabilizer_state(n, s.rows()).unwrap();
        v.apply_gates(&c.gates);
        let b = bn.basis_index().unwrap() as usize;
        ensure(v.is_parallel(&DenseState::basis(n, b)), || format!("C|psi> is not |{b}> for\n{s}"))?;
    }
    Ok(())
}

fn bivectors() -> Check {
    let mut failures = Vec::new();
    let psi = m(&["XX", "ZZ"]);
    let phi = m(&["-XX", "ZZ"]);
    let listed = lib(stabgeo::census::enumerate_states(4))?
        .into_iter()
        .find(|s| {
            let v = stabilizer_state(4, s.rows()).unwrap();
            v.amps.iter().enumerate().all(|(b, a)| *a == if b == 0b0011 || b == 0b1100 { Cyclo::one() } else { Cyclo::zero() })
        })
        .unwrap();
    match bivector(&psi, &phi) {
        Ok(w) if w.canonicalize() == listed => {}
        Ok(w) => failures.push(format!("wedge of Bell pair is\n{}expected\n{listed}", w.canonicalize())),
        Err(e) => failures.push(format!("wedge of Bell pair failed: {e}")),
    }
    match bivector(&psi, &m(&["-ZI", "IZ"])) {
        Err(Error::NotStabilizerBivector) => {}
        other => failures.push(format!("mixed-support wedge gave {other:?}")),
    }
    let states = lib(enumerate_states(2))?;
    for a in &states {
        let mut partners = 0;
        for b in &states {
            let class = lib(k_neighbor_class(a, b))?;
            if class == NeighborClass::Parallel {
                continue;
            }
            let want = match class {
                NeighborClass::Neighbor(k) => BigRational::one() - BigRational::new(1.into(), BigUint::from(1u32 << k).into()),
                _ => BigRational::one(),
            };
            let got = lib(wedge_norm(a, b))?.0;
            if got != want {
                failures.push(format!("wedge norm {got} vs {want}"));
            }
            if bivector(a, b).is_ok() {
                partners += 1;
            }
        }
        if partners != 15 {
            failures.push(format!("{partners} bivector partners for\n{a}"));
        }
    }
    ensure(failures.is_empty(), || failures.join("\n"))
}

fn random_coefficient(rng: &mut ChaCha8Rng) -> Cyclo {
    let re = BigRational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=2).into());
    let im = BigRational::new(rng.gen_range(-3..=3).into(), rng.gen_range(1..=2).into());
    let c = Cyclo::from_rational(re) + Cyclo::i_pow(1).scale(&im);
    if c.is_zero() { Cyclo::one() } else { c }
}

fn orthogonalization() -> Check {
    let states = lib(enumerate_states(3))?;
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..100 {
        let mut sum = StabilizerSum::new(3);
        for _ in 0..rng.gen_range(1..=4) {
            let s = &states[rng.gen_range(0..states.len())];
            lib(sum.insert(random_coefficient(&mut rng), s))?;
        }
        let out = lib(orthogonalize(&sum))?;
        ensure(out.all_similar(), || "terms are not pairwise similar".into())?;
        for (i, (_, a)) in out.terms.iter().enumerate() {
            for (_, b) in &out.terms[i + 1..] {
                ensure(lib(inner_product_complex(a, b))?.is_zero(), || format!("not orthogonal:\n{a}\n{b}"))?;
            }
        }
        ensure(lib(sum_to_dense(&out))? == lib(sum_to_dense(&sum))?, || "vector changed".into())?;
    }
    Ok(())
}

fn random_gate(n: usize, rng: &mut ChaCha8Rng) -> Gate {
    let a = rng.gen_range(0..n);
    let b = if n > 1 { (a + rng.gen_range(1..n)) % n } else { a };
    match rng.gen_range(if n > 1 { 0..8 } else { 0..5 }) {
        0 => Gate::H(a),
        1 => Gate::P(a),
        2 => Gate::X(a),
        3 => Gate::Y(a),
        4 => Gate::Z(a),
        5 => Gate::Cnot(a, b),
        6 => Gate::Cz(a, b),
        _ => Gate::Cy(a, b),
    }
}

fn global_phase() -> Check {
    let g = lib(global_phase_of_gate(&m(&["-YI", "IX"]), &Gate::H(0)))?;
    let w7 = (Cyclo::one() - Cyclo::i_pow(1)) * Cyclo::inv_sqrt2();
    ensure(g == GlobalPhase(7) && g.to_cyclo() == w7, || format!("got {g}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let gates: Vec<Gate> = (0..rng.gen_range(1..=12)).map(|_| random_gate(n, &mut rng)).collect();
        let c = lib(CliffordCircuit::new(n, gates))?;
        let (out, phase) = lib(apply_circuit_with_phase(&StabilizerMatrix::zero_state(n), &c))?;
        let mut want = DenseState::zero_state(n);
        want.apply_gates(&c.gates);
        let mut got = lib(unit_dense(&out))?;
        got.scale(&phase.to_cyclo());
        ensure(got == want, || format!("phase {phase} wrong for\n{c}"))?;
    }
    Ok(())
}

fn local_search_counterexample() -> Check {
    let int = |x: i64| BigRational::from_integer(x.into());
    let start = StabilizerMatrix::zero_state(2);
    let path = lib(local_search(&search_target(2, &int(1)), &start))?;
    let end = &path.last().unwrap().state;
    ensure(*end == m(&["XI", "IX"]).canonicalize(), || format!("eps=1 ended at\n{end}"))?;
    let path = lib(local_search(&search_target(2, &int(2)), &start))?;
    ensure(path.len() == 1 && path[0].state == start.canonicalize(), || format!("eps=2 moved {} steps", path.len() - 1))
}

fn evading_states() -> Check {
    let (o2, _) = lib(max_overlap(&evading_state(1)))?;
    let three_quarters = BigRational::new(3.into(), 4.into());
    ensure(o2 == (three_quarters.clone(), BigRational::zero()), || format!("mu2 overlap^2 = {o2:?}"))?;
    let (o4, _) = lib(max_overlap(&evading_state(2)))?;
    let bound = &three_quarters * &three_quarters;
    ensure(o4.1.is_zero() && o4.0 <= bound, || format!("mu4 overlap^2 = {o4:?}"))?;
    for k in 1..=2 {
        let mu = evading_state(k).normalize_first();
        ensure(!amplitude_laws_hold(&mu), || format!("mu{} passes the amplitude laws", 2 * k))?;
    }
    Ok(())
}

fn benchmark_shape() -> Check {
    let t = Instant::now();
    let ns: Vec<usize> = (1..=10).map(|i| 20 * i).collect();
    let random = lib(bench_inner(&ns, &[1.2], 9, 2024, Reference::Random))?;
    let ghz = lib(bench_inner(&ns, &[1.2], 9, 2024, Reference::Ghz))?;
    let size = fit_exponent(&random.iter().map(|r| (r.n as f64, r.mean_gates)).collect::<Vec<_>>());
    let run = fit_exponent(&random.iter().map(|r| (r.n as f64, r.median_seconds)).collect::<Vec<_>>());
    let run_ghz = fit_exponent(&ghz.iter().map(|r| (r.n as f64, r.median_seconds)).collect::<Vec<_>>());
    println!("    circuit size exponent {size:.2}, runtime exponent {run:.2}, GHZ runtime exponent {run_ghz:.2}");
    ensure((1.6..=2.2).contains(&size), || format!("circuit size exponent {size:.2}"))?;
    ensure(run <= 3.2, || format!("runtime exponent {run:.2}"))?;
    ensure(run_ghz <= 2.6, || format!("GHZ runtime exponent {run_ghz:.2}"))?;
    ensure(t.elapsed().as_secs() < 300, || format!("took {:?}", t.elapsed()))
}

/// Criteria that cannot pass as written. The listed wedge of the two Bell
/// states has the wrong relative sign: the antisymmetrized product is
/// |1100> - |0011>, orthogonal to |1100> + |0011>.
const KNOWN_FAILURES: &[usize] = &[7];

fn main() {
    let criteria: [Criterion; 12] = [
        ("state counts", counting),
        ("enumeration", enumeration),
        ("angle distribution", angles),
        ("nearest-neighbor counts", neighbor_counts),
        ("inner products against dense vectors", oracle_inner_products),
        ("basis-normalization circuits", synthesis),
        ("bivectors", bivectors),
        ("orthogonalization", orthogonalization),
        ("global phase", global_phase),
        ("local search", local_search_counterexample),
        ("evading states", evading_states),
        ("benchmark shape", benchmark_shape),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match check() {
            Ok(()) => println!("criterion {:>2} PASS {name} ({:.2?})", i + 1, t.elapsed()),
            Err(msg) => {
                println!("criterion {:>2} FAIL {name} ({:.2?})", i + 1, t.elapsed());
                for line in msg.lines().take(20) {
                    println!("    {line}");
                }
                failed.push(i + 1);
            }
        }
    }
    if failed != KNOWN_FAILURES {
        println!("unexpected failures: {failed:?}, known: {KNOWN_FAILURES:?}");
        std::process::exit(1);
    }
    println!("{} of 12 criteria pass; known failures: {KNOWN_FAILURES:?}", 12 - failed.len());
}
