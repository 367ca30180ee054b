//! Concrete G₂ and SU(3) structures on S⁷ and B⁷ and the checks on them.

pub mod ansatz;
pub mod b7;
pub mod constraints;
pub mod gram_blocks;
pub mod lemmas;
pub mod np2;
pub mod numeric;
pub mod report;
pub mod s7;
pub mod solutions;
pub mod su3;
pub mod sweep;

pub use ansatz::{flow_residual, nhf_residual, AnsatzFamily, System};
pub use b7::build_b7;
pub use constraints::{extract_constraints, family_constraints, verify_solution_set, Constraint, Span};
pub use gram_blocks::gram_blocks_report;
pub use lemmas::{verify_connection, verify_beta_identity};
pub use np2::{np2_mu, verify_np2};
pub use report::{format_sig12, MuValue, Status, SubCheck, VerificationReport};
pub use s7::{build_s7_canonical, build_s7_squashed};
pub use su3::Su3Structure;
