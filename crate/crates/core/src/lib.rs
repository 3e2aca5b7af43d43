//! Finite-dimensional computations around superselection sectors.
//!
//! Each module is a small, pure toolbox:
//!
//! * [`group`]: permutation groups, class-sum fusion, character tables.
//! * [`double`]: sectors and modular data of the quantum double of a finite group.
//! * [`inclusions`]: Jones index of multi-matrix inclusions, GNS model of `Mat_n`.
//! * [`braid`]: Temperley-Lieb diagrams, Jones-Wenzl projectors, Markov traces,
//!   the positivity scan for statistics parameters and a braid relation checker.
//! * [`modular`]: Verlinde fusion and modular relations for `(S, T)` data.
//! * [`wedge`]: one-particle wedge operators and Zamolodchikov-Faddeev Fock space.
//! * [`chain`]: Pauli monomials acting on spin-chain tail states.

pub mod braid;
pub mod chain;
pub mod double;
pub mod group;
pub mod inclusions;
pub mod linalg;
pub mod modular;
pub mod wedge;

pub use num_complex::Complex64;
