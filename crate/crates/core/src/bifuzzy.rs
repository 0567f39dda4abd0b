//! Penta-valued representation of bifuzzy information.
//!
//! A pair `(mu, nu)` anywhere in the unit square is described by two signed
//! auxiliaries, the net truth `tau = mu - nu` and the definedness
//! `delta = mu + nu - 1`, and from them by five non-negative features that sum
//! to one: truth, falsity, ambiguity, ignorance and contradiction.

use crate::algebra::UnitValue;
use crate::error::Error;
use crate::Variant;

/// Tolerance used when validating index vectors supplied by a caller.
const INDEX_TOLERANCE: f64 = 1e-9;

/// Degrees of truth and falsity, independent of each other.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BifuzzyPair {
    pub mu: UnitValue,
    pub nu: UnitValue,
}

impl BifuzzyPair {
    pub fn new(mu: f64, nu: f64) -> Result<Self, Error> {
        Ok(Self {
            mu: UnitValue::new(mu)?,
            nu: UnitValue::new(nu)?,
        })
    }

    pub fn from_units(mu: UnitValue, nu: UnitValue) -> Self {
        Self { mu, nu }
    }
}

/// Net truth and definedness of a pair. `|tau| + |delta| <= 1` always holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BifuzzyAux {
    pub tau: f64,
    pub delta: f64,
}

impl BifuzzyAux {
    /// `max(tau, 0)`
    pub fn truth(&self) -> f64 {
        self.tau.max(0.0)
    }

    /// `max(-tau, 0)`
    pub fn falsity(&self) -> f64 {
        (-self.tau).max(0.0)
    }

    /// `max(-delta, 0)`
    pub fn ignorance(&self) -> f64 {
        (-self.delta).max(0.0)
    }

    /// `max(delta, 0)`
    pub fn contradiction(&self) -> f64 {
        self.delta.max(0.0)
    }

    /// Damping factor applied to the truth/falsity group in variant II.
    pub fn truth_factor(&self) -> f64 {
        1.0 - self.delta.abs() / 2.0
    }

    /// Damping factor applied to the ignorance/contradiction group in variant II.
    pub fn definedness_factor(&self) -> f64 {
        1.0 - self.tau.abs() / 2.0
    }

    /// Mass of the truth/falsity group: `|tau|` or `|tau|(1 - |delta|/2)`.
    pub fn certainty_mass(&self, variant: Variant) -> f64 {
        match variant {
            Variant::I => self.tau.abs(),
            Variant::II => self.tau.abs() * self.truth_factor(),
        }
    }

    /// Mass of the ignorance/contradiction group: `|delta|` or `|delta|(1 - |tau|/2)`.
    pub fn definedness_mass(&self, variant: Variant) -> f64 {
        match variant {
            Variant::I => self.delta.abs(),
            Variant::II => self.delta.abs() * self.definedness_factor(),
        }
    }
}

pub fn bifuzzy_aux(pair: BifuzzyPair) -> BifuzzyAux {
    let (mu, nu) = (pair.mu.get(), pair.nu.get());
    BifuzzyAux {
        tau: mu - nu,
        delta: mu + nu - 1.0,
    }
}

/// The five bifuzzy features, tagged with the variant that produced them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PentaIndexes {
    pub truth: UnitValue,
    pub falsity: UnitValue,
    pub ambiguity: UnitValue,
    pub ignorance: UnitValue,
    pub contradiction: UnitValue,
    pub variant: Variant,
}

impl PentaIndexes {
    pub const FIELDS: [&'static str; 5] = [
        "truth",
        "falsity",
        "ambiguity",
        "ignorance",
        "contradiction",
    ];

    /// Builds an index vector from raw values in `FIELDS` order, checking
    /// bounds, the partition of unity and both exclusions.
    pub fn from_values(variant: Variant, values: [f64; 5]) -> Result<Self, Error> {
        let mut units = [UnitValue::ZERO; 5];
        for (slot, (&v, name)) in units.iter_mut().zip(values.iter().zip(Self::FIELDS)) {
            *slot = UnitValue::with_tolerance(v, INDEX_TOLERANCE)
                .map_err(|_| Error::InvalidIndexes(format!("{name} = {v} is outside [0, 1]")))?;
        }
        let [truth, falsity, ambiguity, ignorance, contradiction] = units;
        let indexes = Self {
            truth,
            falsity,
            ambiguity,
            ignorance,
            contradiction,
            variant,
        };
        indexes.validate()?;
        Ok(indexes)
    }

    pub fn values(&self) -> [f64; 5] {
        [
            self.truth.get(),
            self.falsity.get(),
            self.ambiguity.get(),
            self.ignorance.get(),
            self.contradiction.get(),
        ]
    }

    pub fn sum(&self) -> f64 {
        self.values().iter().sum()
    }

    /// `ambiguity + ignorance + contradiction`
    pub fn entropy(&self) -> f64 {
        self.ambiguity.get() + self.ignorance.get() + self.contradiction.get()
    }

    /// `truth + falsity`
    pub fn non_entropy(&self) -> f64 {
        self.truth.get() + self.falsity.get()
    }

    fn validate(&self) -> Result<(), Error> {
        let deviation = (self.sum() - 1.0).abs();
        if deviation > INDEX_TOLERANCE {
            return Err(Error::InvalidIndexes(format!(
                "indexes sum to {} instead of 1",
                self.sum()
            )));
        }
        if self.truth.get() * self.falsity.get() != 0.0 {
            return Err(Error::InvalidIndexes(
                "truth and falsity are both nonzero".into(),
            ));
        }
        if self.ignorance.get() * self.contradiction.get() != 0.0 {
            return Err(Error::InvalidIndexes(
                "ignorance and contradiction are both nonzero".into(),
            ));
        }
        Ok(())
    }
}

/// Splits a pair into its five features.
pub fn penta_decompose(pair: BifuzzyPair, variant: Variant) -> PentaIndexes {
    let aux = bifuzzy_aux(pair);
    let (truth_scale, definedness_scale, ambiguity) = match variant {
        Variant::I => (1.0, 1.0, 1.0 - aux.tau.abs() - aux.delta.abs()),
        Variant::II => (
            aux.truth_factor(),
            aux.definedness_factor(),
            (1.0 - aux.tau.abs()) * (1.0 - aux.delta.abs()),
        ),
    };
    PentaIndexes {
        truth: UnitValue::settle(aux.truth() * truth_scale),
        falsity: UnitValue::settle(aux.falsity() * truth_scale),
        ambiguity: UnitValue::settle(ambiguity),
        ignorance: UnitValue::settle(aux.ignorance() * definedness_scale),
        contradiction: UnitValue::settle(aux.contradiction() * definedness_scale),
        variant,
    }
}

/// Inverse of the variant I decomposition:
/// `mu = truth + contradiction + ambiguity/2`, `nu = falsity + contradiction + ambiguity/2`.
pub fn penta_recompose(indexes: &PentaIndexes) -> Result<BifuzzyPair, Error> {
    if indexes.variant != Variant::I {
        return Err(Error::VariantUnsupported {
            operation: "penta recomposition",
            variant: indexes.variant,
        });
    }
    indexes.validate()?;
    let half_ambiguity = indexes.ambiguity.get() / 2.0;
    let mu = indexes.truth.get() + indexes.contradiction.get() + half_ambiguity;
    let nu = indexes.falsity.get() + indexes.contradiction.get() + half_ambiguity;
    Ok(BifuzzyPair {
        mu: UnitValue::settle(mu),
        nu: UnitValue::settle(nu),
    })
}

/// Bifuzzy uncertainty and certainty; the two add to one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BifuzzyEntropy {
    pub entropy: UnitValue,
    pub non_entropy: UnitValue,
}

pub fn bifuzzy_entropy(pair: BifuzzyPair, variant: Variant) -> BifuzzyEntropy {
    let indexes = penta_decompose(pair, variant);
    BifuzzyEntropy {
        entropy: UnitValue::settle(indexes.entropy()),
        non_entropy: UnitValue::settle(indexes.non_entropy()),
    }
}
