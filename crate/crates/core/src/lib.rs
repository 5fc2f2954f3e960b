//! Exact simulation of one-dimensional Hadamard walks with zero, one and two
//! steps of memory, a signed path-counting oracle, cluster statistics of
//! direction sequences and closed-form amplitudes for the two-step walk.

pub mod amplitude;
pub mod closed_form;
pub mod cluster;
pub mod init_file;
pub mod oracle;
pub mod par;
pub mod peaks;
pub mod walk;

pub use amplitude::{Distribution, Gaussian, Rational, StateVector};
pub use closed_form::{closed_amplitude, closed_distribution, closed_state, Catalog};
pub use oracle::{oracle_state, DirectionSequence};
pub use par::Execution;
pub use walk::{run, step, BasisIndex, Direction, MemoryOrder, Preset};
