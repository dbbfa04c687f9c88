//! Exact-plus-numeric engine for equivariant elliptic genera of A-type ALE
//! spaces.
//!
//! The crate computes the fixed-point theta-quotient genus of the minimal
//! resolution X_r of C²/Z_r, restricts it to the volume-preserving circle
//! t₁ = −t₂ = t, expands it in v̂ = 2πi·t, extracts the regularized genus,
//! and machine-verifies the identities, transformation laws and singularity
//! structure the construction rests on.
//!
//! Layers:
//!
//! * [`series`]: truncated q-series / Laurent-series arithmetic over exact
//!   coefficient rings;
//! * [`special`]: theta, eta, Eisenstein, Weierstrass and the small number
//!   theory they need;
//! * [`genus`]: the equivariant genus, its circle restriction, expansion,
//!   regularization and the K3 comparison;
//! * [`verify`]: identity, modularity, pole and index checkers producing
//!   structured reports.

pub mod genus;
pub mod series;
pub mod special;
pub mod verify;
