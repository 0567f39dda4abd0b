//! Deca-valued representation of neutrosophic information.
//!
//! The triplet `(mu, omega, nu)` is first read as a bifuzzy pair `(mu, nu)`,
//! whose five penta features are then split in two by the indeterminacy
//! `omega`:
//!
//! | bifuzzy feature | split weight | strong part | weak part    |
//! |-----------------|--------------|-------------|--------------|
//! | truth           | `1 - omega`  | truth `t`   | weak truth `t_w` |
//! | falsity         | `1 - omega`  | falsity `f` | weak falsity `f_w` |
//! | ignorance       | `omega`      | neutrality `n` | ignorance `u` |
//! | contradiction   | `omega`      | saturation `s` | contradiction `c` |
//! | ambiguity       | (closed form)| ambiguity `a` | hesitation `h` |
//!
//! The ten features partition unity. At most four of them are nonzero in
//! variant I; variant II can reach five.

use std::fmt;

use crate::algebra::{conjugate_split, UnitValue};
use crate::bifuzzy::{bifuzzy_aux, BifuzzyAux, BifuzzyPair};
use crate::error::Error;
use crate::Variant;

const INDEX_TOLERANCE: f64 = 1e-9;

/// Degrees of truth, indeterminacy and falsity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NeutrosophicTriplet {
    pub mu: UnitValue,
    pub omega: UnitValue,
    pub nu: UnitValue,
}

impl NeutrosophicTriplet {
    pub fn new(mu: f64, omega: f64, nu: f64) -> Result<Self, Error> {
        Ok(Self {
            mu: UnitValue::new(mu)?,
            omega: UnitValue::new(omega)?,
            nu: UnitValue::new(nu)?,
        })
    }

    pub fn from_units(mu: UnitValue, omega: UnitValue, nu: UnitValue) -> Self {
        Self { mu, omega, nu }
    }

    /// The truth/falsity part, dropping indeterminacy.
    pub fn bifuzzy(&self) -> BifuzzyPair {
        BifuzzyPair::from_units(self.mu, self.nu)
    }

    pub fn values(&self) -> [f64; 3] {
        [self.mu.get(), self.omega.get(), self.nu.get()]
    }
}

/// One of the ten deca features. Doubles as the label of the prototype at
/// which that feature equals one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Feature {
    Truth,
    WeakTruth,
    Falsity,
    WeakFalsity,
    Contradiction,
    Neutrality,
    Saturation,
    Ignorance,
    Ambiguity,
    Hesitation,
}

impl Feature {
    /// Canonical order, also the column order of every output.
    pub const ALL: [Feature; 10] = [
        Feature::Truth,
        Feature::WeakTruth,
        Feature::Falsity,
        Feature::WeakFalsity,
        Feature::Contradiction,
        Feature::Neutrality,
        Feature::Saturation,
        Feature::Ignorance,
        Feature::Ambiguity,
        Feature::Hesitation,
    ];

    /// Column name: `t`, `t_w`, `f`, ...
    pub fn symbol(self) -> &'static str {
        match self {
            Feature::Truth => "t",
            Feature::WeakTruth => "t_w",
            Feature::Falsity => "f",
            Feature::WeakFalsity => "f_w",
            Feature::Contradiction => "c",
            Feature::Neutrality => "n",
            Feature::Saturation => "s",
            Feature::Ignorance => "u",
            Feature::Ambiguity => "a",
            Feature::Hesitation => "h",
        }
    }

    /// Prototype label: `T`, `Tw`, `F`, ...
    pub fn label(self) -> &'static str {
        match self {
            Feature::Truth => "T",
            Feature::WeakTruth => "Tw",
            Feature::Falsity => "F",
            Feature::WeakFalsity => "Fw",
            Feature::Contradiction => "C",
            Feature::Neutrality => "N",
            Feature::Saturation => "S",
            Feature::Ignorance => "U",
            Feature::Ambiguity => "A",
            Feature::Hesitation => "H",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Feature::Truth => "truth",
            Feature::WeakTruth => "weak truth",
            Feature::Falsity => "falsity",
            Feature::WeakFalsity => "weak falsity",
            Feature::Contradiction => "contradiction",
            Feature::Neutrality => "neutrality",
            Feature::Saturation => "saturation",
            Feature::Ignorance => "ignorance",
            Feature::Ambiguity => "ambiguity",
            Feature::Hesitation => "hesitation",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The ten deca features, tagged with the variant that produced them.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DecaIndexes {
    pub t: UnitValue,
    pub t_w: UnitValue,
    pub f: UnitValue,
    pub f_w: UnitValue,
    pub c: UnitValue,
    pub n: UnitValue,
    pub s: UnitValue,
    pub u: UnitValue,
    pub a: UnitValue,
    pub h: UnitValue,
    pub variant: Variant,
}

impl DecaIndexes {
    /// Builds an index vector from raw values in [`Feature::ALL`] order,
    /// checking bounds, the partition of unity and both exclusions.
    pub fn from_values(variant: Variant, values: [f64; 10]) -> Result<Self, Error> {
        let mut units = [UnitValue::ZERO; 10];
        for ((slot, &v), feature) in units.iter_mut().zip(&values).zip(Feature::ALL) {
            *slot = UnitValue::with_tolerance(v, INDEX_TOLERANCE).map_err(|_| {
                Error::InvalidIndexes(format!("{} = {v} is outside [0, 1]", feature.symbol()))
            })?;
        }
        let [t, t_w, f, f_w, c, n, s, u, a, h] = units;
        let indexes = Self {
            t,
            t_w,
            f,
            f_w,
            c,
            n,
            s,
            u,
            a,
            h,
            variant,
        };
        indexes.validate()?;
        Ok(indexes)
    }

    /// A vector with a single one at `feature`.
    pub fn indicator(feature: Feature, variant: Variant) -> Self {
        let mut values = [0.0; 10];
        values[feature.index()] = 1.0;
        Self::from_values(variant, values).expect("indicator vectors are valid")
    }

    pub fn values(&self) -> [f64; 10] {
        [
            self.t.get(),
            self.t_w.get(),
            self.f.get(),
            self.f_w.get(),
            self.c.get(),
            self.n.get(),
            self.s.get(),
            self.u.get(),
            self.a.get(),
            self.h.get(),
        ]
    }

    pub fn get(&self, feature: Feature) -> UnitValue {
        match feature {
            Feature::Truth => self.t,
            Feature::WeakTruth => self.t_w,
            Feature::Falsity => self.f,
            Feature::WeakFalsity => self.f_w,
            Feature::Contradiction => self.c,
            Feature::Neutrality => self.n,
            Feature::Saturation => self.s,
            Feature::Ignorance => self.u,
            Feature::Ambiguity => self.a,
            Feature::Hesitation => self.h,
        }
    }

    pub fn sum(&self) -> f64 {
        self.values().iter().sum()
    }

    /// `t + t_w + f + f_w`
    pub fn certainty_group(&self) -> f64 {
        self.t.get() + self.t_w.get() + self.f.get() + self.f_w.get()
    }

    /// `c + u + n + s`
    pub fn definedness_group(&self) -> f64 {
        self.c.get() + self.u.get() + self.n.get() + self.s.get()
    }

    /// `a + h`
    pub fn ambiguity_group(&self) -> f64 {
        self.a.get() + self.h.get()
    }

    fn validate(&self) -> Result<(), Error> {
        if (self.sum() - 1.0).abs() > INDEX_TOLERANCE {
            return Err(Error::InvalidIndexes(format!(
                "indexes sum to {} instead of 1",
                self.sum()
            )));
        }
        if (self.t.get() + self.t_w.get()) * (self.f.get() + self.f_w.get()) != 0.0 {
            return Err(Error::InvalidIndexes(
                "truth and falsity groups are both nonzero".into(),
            ));
        }
        if (self.u.get() + self.n.get()) * (self.c.get() + self.s.get()) != 0.0 {
            return Err(Error::InvalidIndexes(
                "ignorance and contradiction groups are both nonzero".into(),
            ));
        }
        Ok(())
    }
}

/// Splits a triplet into its ten features.
///
/// The truth, falsity, ignorance and contradiction splits always act on the
/// undamped variant I quantities; variant II applies its damping factors once,
/// after the split.
pub fn deca_decompose(triplet: NeutrosophicTriplet, variant: Variant) -> DecaIndexes {
    let aux = bifuzzy_aux(triplet.bifuzzy());
    let omega = triplet.omega;
    let omega_bar = omega.complement();

    let truth = conjugate_split(UnitValue::settle(aux.truth()), omega_bar);
    let falsity = conjugate_split(UnitValue::settle(aux.falsity()), omega_bar);
    let ignorance = conjugate_split(UnitValue::settle(aux.ignorance()), omega);
    let contradiction = conjugate_split(UnitValue::settle(aux.contradiction()), omega);

    let (truth_scale, definedness_scale) = match variant {
        Variant::I => (1.0, 1.0),
        Variant::II => (aux.truth_factor(), aux.definedness_factor()),
    };
    let scaled = |v: UnitValue, k: f64| UnitValue::settle(v.get() * k);

    let (a, h) = ambiguity_hesitation(&aux, omega, variant);

    DecaIndexes {
        t: scaled(truth.strong, truth_scale),
        t_w: scaled(truth.weak, truth_scale),
        f: scaled(falsity.strong, truth_scale),
        f_w: scaled(falsity.weak, truth_scale),
        c: scaled(contradiction.weak, definedness_scale),
        n: scaled(ignorance.strong, definedness_scale),
        s: scaled(contradiction.strong, definedness_scale),
        u: scaled(ignorance.weak, definedness_scale),
        a,
        h,
        variant,
    }
}

// a = 1 - min(T, 1 - omega) - max(D, omega)
// h = 1 - max(T, 1 - omega) - min(D, omega)
// with T, D the masses of the certainty and definedness groups.
fn ambiguity_hesitation(
    aux: &BifuzzyAux,
    omega: UnitValue,
    variant: Variant,
) -> (UnitValue, UnitValue) {
    let certainty = aux.certainty_mass(variant);
    let definedness = aux.definedness_mass(variant);
    let w = omega.get();
    let w_bar = omega.complement().get();
    let a = 1.0 - certainty.min(w_bar) - definedness.max(w);
    let h = 1.0 - certainty.max(w_bar) - definedness.min(w);
    (UnitValue::settle(a), UnitValue::settle(h))
}

/// Inverse of the variant I decomposition.
///
/// ```text
/// mu    = t + t_w + c + s + a/2 + h/2
/// omega = t_w + f_w + n + s + h
/// nu    = f + f_w + c + s + a/2 + h/2
/// ```
pub fn deca_recompose(indexes: &DecaIndexes) -> Result<NeutrosophicTriplet, Error> {
    if indexes.variant != Variant::I {
        return Err(Error::VariantUnsupported {
            operation: "deca recomposition",
            variant: indexes.variant,
        });
    }
    indexes.validate()?;
    let [t, t_w, f, f_w, c, n, s, _u, a, h] = indexes.values();
    // Summation order follows Feature::ALL so the result is bit-identical to
    // prototype_combination.
    let mu = t + t_w + c + s + a / 2.0 + h / 2.0;
    let omega = t_w + f_w + n + s + h;
    let nu = f + f_w + c + s + a / 2.0 + h / 2.0;
    Ok(NeutrosophicTriplet {
        mu: UnitValue::settle(mu),
        omega: UnitValue::settle(omega),
        nu: UnitValue::settle(nu),
    })
}

/// A corner or edge midpoint of the cube where one feature is exactly one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Prototype {
    pub label: Feature,
    pub coordinates: NeutrosophicTriplet,
}

impl Prototype {
    pub fn all() -> [Prototype; 10] {
        Feature::ALL.map(|label| Prototype {
            label,
            coordinates: prototype_coordinates(label),
        })
    }
}

pub fn prototype_coordinates(label: Feature) -> NeutrosophicTriplet {
    let (mu, omega, nu) = match label {
        Feature::Truth => (1.0, 0.0, 0.0),
        Feature::WeakTruth => (1.0, 1.0, 0.0),
        Feature::Falsity => (0.0, 0.0, 1.0),
        Feature::WeakFalsity => (0.0, 1.0, 1.0),
        Feature::Contradiction => (1.0, 0.0, 1.0),
        Feature::Neutrality => (0.0, 1.0, 0.0),
        Feature::Saturation => (1.0, 1.0, 1.0),
        Feature::Ignorance => (0.0, 0.0, 0.0),
        Feature::Ambiguity => (0.5, 0.0, 0.5),
        Feature::Hesitation => (0.5, 1.0, 0.5),
    };
    NeutrosophicTriplet::new(mu, omega, nu).expect("prototype coordinates lie in the cube")
}

/// `sum_k index_k * prototype_k`, the convex combination of the ten prototypes.
pub fn prototype_combination(indexes: &DecaIndexes) -> NeutrosophicTriplet {
    let mut acc = [0.0f64; 3];
    for (feature, weight) in Feature::ALL.into_iter().zip(indexes.values()) {
        let corner = prototype_coordinates(feature).values();
        for (slot, coord) in acc.iter_mut().zip(corner) {
            if coord != 0.0 {
                *slot += weight * coord;
            }
        }
    }
    NeutrosophicTriplet {
        mu: UnitValue::settle(acc[0]),
        omega: UnitValue::settle(acc[1]),
        nu: UnitValue::settle(acc[2]),
    }
}

/// Entropy, neutro-entropy and anti-entropy; together a partition of unity.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EntropyTriad {
    pub entropy: UnitValue,
    pub neutro_entropy: UnitValue,
    pub anti_entropy: UnitValue,
}

impl EntropyTriad {
    /// `anti_entropy + neutro_entropy`, the complement of the entropy.
    pub fn non_entropy(&self) -> f64 {
        self.anti_entropy.get() + self.neutro_entropy.get()
    }

    pub fn sum(&self) -> f64 {
        self.entropy.get() + self.neutro_entropy.get() + self.anti_entropy.get()
    }

    pub fn values(&self) -> [f64; 3] {
        [
            self.entropy.get(),
            self.neutro_entropy.get(),
            self.anti_entropy.get(),
        ]
    }
}

impl From<&DecaIndexes> for EntropyTriad {
    fn from(d: &DecaIndexes) -> Self {
        let entropy = d.u.get() + d.c.get() + d.n.get() + d.s.get() + d.a.get() + d.h.get();
        EntropyTriad {
            entropy: UnitValue::settle(entropy),
            neutro_entropy: UnitValue::settle(d.t_w.get() + d.f_w.get()),
            anti_entropy: UnitValue::settle(d.t.get() + d.f.get()),
        }
    }
}

/// The triad as sums of the deca components.
pub fn entropy_triad(triplet: NeutrosophicTriplet, variant: Variant) -> EntropyTriad {
    EntropyTriad::from(&deca_decompose(triplet, variant))
}

/// The triad straight from `tau`, `delta` and `omega`, without decomposing.
///
/// With `k = 1` (variant I) or `k = 1 - |delta|/2` (variant II):
/// anti-entropy `min(|tau|, 1 - omega) k`, neutro-entropy
/// `(|tau| - min(|tau|, 1 - omega)) k`, entropy `1 - |tau| k`.
pub fn closed_form_triad(triplet: NeutrosophicTriplet, variant: Variant) -> EntropyTriad {
    let aux = bifuzzy_aux(triplet.bifuzzy());
    let k = match variant {
        Variant::I => 1.0,
        Variant::II => aux.truth_factor(),
    };
    let abs_tau = aux.tau.abs();
    let certain = abs_tau.min(triplet.omega.complement().get());
    EntropyTriad {
        entropy: UnitValue::settle(1.0 - abs_tau * k),
        neutro_entropy: UnitValue::settle((abs_tau - certain) * k),
        anti_entropy: UnitValue::settle(certain * k),
    }
}

/// Number of features strictly above `tolerance`.
pub fn support_count(indexes: &DecaIndexes, tolerance: f64) -> usize {
    indexes.values().iter().filter(|&&v| v > tolerance).count()
}
