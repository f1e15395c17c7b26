//! Robin parameter and the admissible source class.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Robin constant `alpha > 0` together with the derived
/// `c_alpha = alpha / (1 + alpha * pi)` that appears in the Green's function.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RobinParams {
    alpha: f64,
    c_alpha: f64,
}

impl RobinParams {
    pub fn new(alpha: f64) -> Result<Self> {
        if !alpha.is_finite() {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be finite",
            });
        }
        if alpha <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                reason: "must be positive",
            });
        }
        Ok(Self {
            alpha,
            c_alpha: alpha / (1.0 + alpha * PI),
        })
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn c_alpha(&self) -> f64 {
        self.c_alpha
    }
}

impl<'de> Deserialize<'de> for RobinParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            alpha: f64,
        }
        let raw = Raw::deserialize(d)?;
        RobinParams::new(raw.alpha).map_err(serde::de::Error::custom)
    }
}

/// Shorthand for [`RobinParams::new`].
pub fn make_params(alpha: f64) -> Result<RobinParams> {
    RobinParams::new(alpha)
}

/// The family of heat sources `f` with `ground <= f <= top` and total mass
/// `2 pi average`.
///
/// Every extremal source in this crate is `ground` everywhere except on one
/// interval of half-length [`half_length`](Self::half_length) where it equals
/// `top`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SourceClass {
    ground: f64,
    top: f64,
    average: f64,
}

impl SourceClass {
    pub fn new(ground: f64, top: f64, average: f64) -> Result<Self> {
        for (name, value) in [("m", ground), ("M", top), ("s", average)] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be finite",
                });
            }
        }
        if ground < 0.0 {
            return Err(Error::InvalidParameter {
                name: "m",
                value: ground,
                reason: "ground heat must be non-negative",
            });
        }
        if average <= ground {
            return Err(Error::InvalidParameter {
                name: "s",
                value: average,
                reason: "average heat must exceed the ground heat m",
            });
        }
        if top <= average {
            return Err(Error::InvalidParameter {
                name: "M",
                value: top,
                reason: "top heat must exceed the average heat s",
            });
        }
        Ok(Self {
            ground,
            top,
            average,
        })
    }

    #[inline]
    pub fn ground(&self) -> f64 {
        self.ground
    }

    #[inline]
    pub fn top(&self) -> f64 {
        self.top
    }

    #[inline]
    pub fn average(&self) -> f64 {
        self.average
    }

    /// `M - m`.
    #[inline]
    pub fn spread(&self) -> f64 {
        self.top - self.ground
    }

    /// Total mass `2 pi s` every member carries.
    #[inline]
    pub fn mass(&self) -> f64 {
        2.0 * PI * self.average
    }

    /// `l = pi (s - m) / (M - m)`, in `(0, pi)`.
    #[inline]
    pub fn half_length(&self) -> f64 {
        PI * (self.average - self.ground) / self.spread()
    }

    /// `delta = m / (M - m)`.
    #[inline]
    pub fn delta(&self) -> f64 {
        self.ground / self.spread()
    }

    /// `pi - l`, the half-length of the complementary interval.
    #[inline]
    pub fn complement_half_length(&self) -> f64 {
        PI - self.half_length()
    }

    /// Class of `M + m - f` for members `f`: same bounds, average `M + m - s`.
    pub fn dual(&self) -> Self {
        Self {
            ground: self.ground,
            top: self.top,
            average: self.top + self.ground - self.average,
        }
    }
}

impl<'de> Deserialize<'de> for SourceClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            ground: f64,
            top: f64,
            average: f64,
        }
        let raw = Raw::deserialize(d)?;
        SourceClass::new(raw.ground, raw.top, raw.average).map_err(serde::de::Error::custom)
    }
}
