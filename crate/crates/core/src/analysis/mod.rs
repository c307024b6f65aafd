//! Executable cryptanalysis and space accounting.

pub mod collusion;
pub mod eprp;
pub mod rates;

pub use collusion::{gcd_collusion_attack, CollusionResult};
pub use eprp::{eprp_roots_bruteforce, EprpInstance};
pub use rates::{rate_report, RateParams, RateReport, RateScheme};
