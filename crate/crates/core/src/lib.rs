//! Multi-valued representations of bifuzzy and neutrosophic information.
//!
//! A bifuzzy pair `(mu, nu)` is split into five features (truth, falsity,
//! ambiguity, ignorance, contradiction) and a neutrosophic triplet
//! `(mu, omega, nu)` into ten (truth, weak truth, falsity, weak falsity,
//! contradiction, neutrality, saturation, ignorance, ambiguity, hesitation).
//! Each representation is a partition of unity, and from the ten features the
//! entropy / neutro-entropy / anti-entropy triad follows.
//!
//! ```
//! use neutro_core::{deca_decompose, entropy_triad, NeutrosophicTriplet, Variant};
//!
//! let x = NeutrosophicTriplet::new(0.8, 0.5, 0.1).unwrap();
//! let d = deca_decompose(x, Variant::I);
//! assert!((d.t.get() - 0.5).abs() < 1e-12);
//! let triad = entropy_triad(x, Variant::I);
//! assert!((triad.entropy.get() - 0.3).abs() < 1e-12);
//! ```

use std::fmt;
use std::str::FromStr;

pub mod algebra;
pub mod bifuzzy;
mod error;
pub mod invariants;
pub mod io;
pub mod neutrosophic;

pub use algebra::{conjugate_split, godel_and, lukasiewicz_and, SplitPair, UnitValue};
pub use bifuzzy::{
    bifuzzy_aux, bifuzzy_entropy, penta_decompose, penta_recompose, BifuzzyAux, BifuzzyEntropy,
    BifuzzyPair, PentaIndexes,
};
pub use error::Error;
pub use neutrosophic::{
    closed_form_triad, deca_decompose, deca_recompose, entropy_triad, prototype_combination,
    prototype_coordinates, support_count, DecaIndexes, EntropyTriad, Feature, NeutrosophicTriplet,
    Prototype,
};

/// Which of the two constructions to use.
///
/// Variant I splits the square and cube piecewise linearly. Variant II damps
/// the truth group by `1 - |delta|/2` and the definedness group by
/// `1 - |tau|/2`, which makes the ambiguity `(1 - |tau|)(1 - |delta|)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Variant {
    #[default]
    I,
    II,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::I => "I",
            Variant::II => "II",
        })
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "1" | "I" | "i" => Ok(Variant::I),
            "2" | "II" | "ii" => Ok(Variant::II),
            other => Err(format!("unknown variant `{other}` (expected 1 or 2)")),
        }
    }
}
