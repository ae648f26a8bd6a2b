//! Irreducible SL(2,ℂ) characters of the Borromean link group: matrix families,
//! realizers for every component, trace coordinates and classification.

pub mod character;
pub mod classify;
pub mod matrices;
pub mod realize;
pub mod representation;
pub mod sample;
pub mod theta;

pub use character::{f_ij, CharacterTuple};
pub use classify::{classify, commutator_minus_e_check, irreducibility_check, theta_of, Classification, CommutatorMinusE};
pub use matrices::*;
pub use realize::{kappa_root, realize_x1, realize_x2, realize_x3, realize_x4, x4_lambda, KappaBranch, Sign};
pub use representation::{character_of, ComponentLabel, Representation};
pub use sample::{random_sl2, rng_from_seed, sample_component};
pub use theta::{cover_t1, cover_t2, cover_t3, quartic_holds, quartic_residual, solve_theta};
