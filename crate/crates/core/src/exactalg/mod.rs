//! Exact arithmetic over `Z`, `Q` and the cubic ring `Z[r]`, `r^3 = 8r^2 - 5r - 1`.

pub mod identities;
pub mod mpoly;
pub mod numring;
pub mod ring;
pub mod upoly;

pub use identities::{run_all_identities, verify_identity, IdentityCase, IdentityOutcome, REGISTRY};
pub use mpoly::{MPoly, ZxyPoly};
pub use numring::NumRingElem;
pub use ring::Ring;
