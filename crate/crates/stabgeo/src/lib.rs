//! Stabilizer states on `n` qubits: canonical stabilizer matrices, Clifford
//! synthesis, exact inner products and the geometry of the finite set of
//! stabilizer states.
//!
//! Modules, bottom up:
//!
//! - [`pauli`]: Pauli operators packed two bits per qubit.
//! - [`exact`]: exact scalars `ω^m 2^(-k/2)` and the field `Q(e^(iπ/4))`.
//! - [`tableau`]: stabilizer matrices, canonical form, amplitudes, cofactors.
//! - [`clifford`]: gate conjugation, measurement, global-phase tracking.
//! - [`synth`]: basis-normalization circuits (H, CNOT, CZ, P, H blocks).
//! - [`geometry`]: inner products, neighbors, wedge products,
//!   orthogonalization of stabilizer sums.
//! - [`census`]: counting and enumeration of all states, angle histograms,
//!   local search and states far from every stabilizer state.
//! - [`bench`]: random circuits and scaling fits.
//! - [`dense`]: a naive exact state-vector simulator used as a reference.
//!
//! Runnable walkthroughs live in `examples/`:
//!
//! ```text
//! cargo run --example canonical_forms
//! cargo run --example synthesis
//! cargo run --example inner_products
//! cargo run --example wedge
//! cargo run --example orthogonalize
//! cargo run --example census
//! cargo run --example local_search
//! cargo run --release --example scaling
//! ```
//!
//! Qubits are 0-based in the API and 1-based in text files. Qubit 0 is the
//! leftmost Pauli letter and the most significant bit of a basis index.

pub mod bench;
pub mod census;
pub mod clifford;
pub mod dense;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod pauli;
pub mod synth;
pub mod tableau;

pub use clifford::{CliffordCircuit, Gate, GlobalPhase};
pub use error::{Error, Result};
pub use exact::{Cyclo, ExactScalar};
pub use pauli::{Letter, PauliOp};
pub use tableau::StabilizerMatrix;
