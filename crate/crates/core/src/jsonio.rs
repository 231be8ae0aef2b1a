//! JSON schema helpers and export bundles.
//!
//! All exact scalars cross the wire as decimal strings so round trips are
//! bit faithful at any magnitude.

use crate::error::{Error, Result};
use crate::families::{spectrum, EnergyLevel, ExtendedFamily, Ham, Wavefunction};
use crate::poly::{Polynomial, Rat};
use crate::potential::PotentialLayout;
use crate::ratfunc::RationalFunction;
use serde::{Deserialize, Serialize};

/// serde adapter for a single big rational as a [numerator, denominator]
/// string pair; use with `#[serde(with = "crate::jsonio::rat_pair")]`.
pub mod rat_pair {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use std::str::FromStr;

    pub fn serialize<S: serde::Serializer>(
        v: &Rat,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        [v.numer().to_string(), v.denom().to_string()].serialize(s)
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Rat, D::Error> {
        let [n, dn] = <[String; 2]>::deserialize(d)?;
        let num = BigInt::from_str(&n).map_err(serde::de::Error::custom)?;
        let den = BigInt::from_str(&dn).map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rat::new(num, den))
    }
}

/// Everything a family export bundle carries. Designed so that
/// deserializing and reserializing reproduces the original bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyExport {
    pub m1: u32,
    pub m2: u32,
    pub mu: u32,
    pub ell: u32,
    pub seed1: Polynomial,
    pub seed2: Polynomial,
    pub g: Polynomial,
    pub gbar: Polynomial,
    pub potential: RationalFunction,
    pub layout: PotentialLayout,
    pub degree_set_head: Vec<u32>,
    pub spectrum_h2: Vec<EnergyLevel>,
}

impl FamilyExport {
    pub fn from_family(fam: &ExtendedFamily, levels: usize, max_degree: u32) -> Self {
        let p = fam.params();
        FamilyExport {
            m1: p.m1(),
            m2: p.m2(),
            mu: p.mu(),
            ell: p.ell(),
            seed1: fam.seed1().clone(),
            seed2: fam.seed2().clone(),
            g: fam.g().clone(),
            gbar: fam.gbar().clone(),
            potential: fam.v2().rational().clone(),
            layout: fam.layout(),
            degree_set_head: crate::families::degree_set_second(p, max_degree),
            spectrum_h2: spectrum(p, Ham::H2, levels),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("export serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidParams(format!("bad export JSON: {e}")))
    }

    /// Rebuilds the family and checks the bundle against it.
    pub fn validate(&self) -> Result<()> {
        let fam = ExtendedFamily::from_indices(self.m1, self.m2)?;
        if fam.g() != &self.g || fam.v2().rational() != &self.potential {
            return Err(Error::InvalidParams(
                "export bundle does not match the rebuilt family".into(),
            ));
        }
        Ok(())
    }
}

/// Wavefunction view with the exact norm data alongside the state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WavefunctionExport {
    pub level: EnergyLevel,
    pub state: crate::quasigauss::QuasiGaussian,
    #[serde(with = "rat_pair")]
    pub norm_sq_sqrt_pi: Rat,
}

impl From<&Wavefunction> for WavefunctionExport {
    fn from(w: &Wavefunction) -> Self {
        WavefunctionExport {
            level: w.level,
            state: w.qg.clone(),
            norm_sq_sqrt_pi: w.norm_sq_sqrt_pi.clone(),
        }
    }
}

/// CSV rows sampling a potential on a symmetric grid.
pub fn potential_samples(
    pot: &crate::potential::Potential,
    half_width: f64,
    samples: usize,
) -> Vec<(f64, f64)> {
    assert!(samples >= 2);
    let h = 2.0 * half_width / (samples - 1) as f64;
    (0..samples)
        .map(|i| {
            let x = -half_width + i as f64 * h;
            (x, pot.eval_f64(x))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_export_round_trip_is_bit_identical() {
        let fam = ExtendedFamily::from_indices(2, 5).unwrap();
        let export = FamilyExport::from_family(&fam, 6, 12);
        let text = export.to_json();
        let back = FamilyExport::from_json(&text).unwrap();
        assert_eq!(back, export);
        assert_eq!(back.to_json(), text);
        back.validate().unwrap();
    }

    #[test]
    fn tampered_export_fails_validation() {
        let fam = ExtendedFamily::from_indices(2, 3).unwrap();
        let mut export = FamilyExport::from_family(&fam, 5, 10);
        export.g = Polynomial::from_ints(&[1]);
        assert!(export.validate().is_err());
    }

    #[test]
    fn potential_sampling_grid() {
        let pot = crate::potential::Potential::oscillator();
        let rows = potential_samples(&pot, 2.0, 5);
        assert_eq!(rows.len(), 5);
        assert_eq!(rows[0].0, -2.0);
        assert_eq!(rows[4].0, 2.0);
        assert!((rows[2].1 - 0.0).abs() < 1e-12);
    }
}
