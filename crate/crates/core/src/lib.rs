//! Executable topology and domain theory on finite and effectively
//! representable spaces.
//!
//! The crate is split by subject:
//!
//! - [`spaces`]: finite topological spaces, specialization preorders,
//!   hull operators and a decision procedure for every space-level
//!   property (sobriety, coherence, weak Hausdorffness, local strong
//!   sobriety, ...).
//! - [`frames`]: finite lattices and frames, filters, filter joins,
//!   temperance, the way-below relation, the `O ⊣ pt` adjunction and the
//!   Hofmann–Mislove correspondence.
//! - [`powerdomain`]: lenses, quasi-lenses, the maps between them and
//!   their Vietoris hyperspaces.
//! - [`symbolic`]: finite-or-cofinite set algebra and the infinite
//!   counterexample spaces (cofinite ℕ, ℕ ∪ {a, b}, ℕ ∪ {ω}) with
//!   certificate checking.
//! - [`suite`], [`io`], [`dot`]: batch sweeps, JSON formats and Graphviz
//!   output used by the `soberlens` binary.
//!
//! Every finite topology is Alexandroff, so finite spaces satisfy most of
//! the interesting theorems vacuously. The finite checkers are therefore
//! paired with independent brute-force oracles in the test suites, and
//! the discriminating behaviour is exercised on the symbolic backends.

pub mod dot;
pub mod error;
pub mod frames;
pub mod io;
pub mod powerdomain;
pub mod spaces;
pub mod suite;
pub mod symbolic;

pub use error::{Error, Result};
pub use frames::{Filter, FinLattice};
pub use powerdomain::{Lens, QuasiLens};
pub use spaces::{FinSpace, PointSet, Preorder, SpaceProperties};
