// Copyright 2026 The gaussherald Developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! JSON and CSV plumbing shared by the library and the command line.
//!
//! Complex numbers are written as `{"re": .., "im": ..}`. Every reader
//! rejects unknown keys.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gaussian::{CircuitParams, Interferometer, MeshRotation, DEFAULT_R_MAX};
use crate::herald::{HeraldPath, HeraldPattern, HeraldedState};
use crate::linalg::{CMat, C64};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CxJson {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for CxJson {
    fn from(z: C64) -> Self {
        CxJson { re: z.re, im: z.im }
    }
}

impl From<CxJson> for C64 {
    fn from(z: CxJson) -> Self {
        C64::new(z.re, z.im)
    }
}

/// `#[serde(with = "cx_vec")]` for `Vec<C64>`.
pub mod cx_vec {
    use super::{CxJson, C64};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[C64], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|&z| CxJson::from(z)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<C64>, D::Error> {
        Ok(Vec::<CxJson>::deserialize(d)?.into_iter().map(C64::from).collect())
    }
}

/// `#[serde(with = "cx")]` for a single `C64`.
pub mod cx {
    use super::{CxJson, C64};
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
        CxJson::from(*z).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<C64, D::Error> {
        Ok(CxJson::deserialize(d)?.into())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SqueezeJson {
    pub r: f64,
    #[serde(default)]
    pub phase: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RotationJson {
    pub i: usize,
    pub j: usize,
    pub theta: f64,
    #[serde(default)]
    pub phi: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterferometerJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitary: Option<Vec<Vec<CxJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mesh: Option<Vec<RotationJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phases: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitJson {
    pub modes: usize,
    pub squeeze: Vec<SqueezeJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub displace: Option<Vec<CxJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interferometer: Option<InterferometerJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<f64>,
}

impl CircuitJson {
    pub fn to_params(&self) -> Result<CircuitParams> {
        let n = self.modes;
        if self.squeeze.len() != n {
            return Err(Error::Invalid(format!("{} squeezers for {n} modes", self.squeeze.len())));
        }
        let mut p = CircuitParams::vacuum(n);
        for (k, s) in self.squeeze.iter().enumerate() {
            if s.r < 0.0 {
                p = p.with_squeezing(k, -s.r, s.phase + std::f64::consts::PI);
            } else {
                p = p.with_squeezing(k, s.r, s.phase);
            }
        }
        if let Some(d) = &self.displace {
            if d.len() != n {
                return Err(Error::Invalid(format!("{} displacements for {n} modes", d.len())));
            }
            for (k, &a) in d.iter().enumerate() {
                p = p.with_displacement(k, a.into());
            }
        }
        if let Some(r) = self.r_max {
            p.r_max = r;
        }
        if let Some(ifm) = &self.interferometer {
            p.interferometer = match (&ifm.unitary, &ifm.mesh) {
                (Some(_), Some(_)) => return Err(Error::Invalid("interferometer has both unitary and mesh".into())),
                (Some(rows), None) => {
                    if ifm.phases.is_some() {
                        return Err(Error::Invalid("output phases only apply to a mesh".into()));
                    }
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(Error::Invalid(format!("unitary must be {n}x{n}")));
                    }
                    Interferometer::Unitary(CMat::from_fn(n, n, |i, j| rows[i][j].into()))
                }
                (None, mesh) => Interferometer::Mesh {
                    rotations: mesh
                        .iter()
                        .flatten()
                        .map(|r| MeshRotation { i: r.i, j: r.j, theta: r.theta, phi: r.phi })
                        .collect(),
                    phases: ifm.phases.clone().unwrap_or_default(),
                },
            };
        }
        p.validate()?;
        Ok(p)
    }

    pub fn from_params(p: &CircuitParams) -> Self {
        let n = p.num_modes();
        let interferometer = match &p.interferometer {
            Interferometer::Unitary(u) => InterferometerJson {
                unitary: Some((0..n).map(|i| (0..n).map(|j| u[(i, j)].into()).collect()).collect()),
                mesh: None,
                phases: None,
            },
            Interferometer::Mesh { rotations, phases } => InterferometerJson {
                unitary: None,
                mesh: Some(rotations.iter().map(|r| RotationJson { i: r.i, j: r.j, theta: r.theta, phi: r.phi }).collect()),
                phases: if phases.is_empty() { None } else { Some(phases.clone()) },
            },
        };
        CircuitJson {
            modes: n,
            squeeze: p.squeeze_mag.iter().zip(&p.squeeze_phase).map(|(&r, &phase)| SqueezeJson { r, phase }).collect(),
            displace: if p.displacements.iter().all(|a| a.norm() == 0.0) {
                None
            } else {
                Some(p.displacements.iter().map(|&a| a.into()).collect())
            },
            interferometer: Some(interferometer),
            r_max: if p.r_max == DEFAULT_R_MAX { None } else { Some(p.r_max) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternJson {
    pub detected: Vec<usize>,
    pub counts: Vec<usize>,
}

impl PatternJson {
    pub fn to_pattern(&self) -> Result<HeraldPattern> {
        HeraldPattern::new(self.detected.clone(), self.counts.clone())
    }
}

impl From<&HeraldPattern> for PatternJson {
    fn from(p: &HeraldPattern) -> Self {
        PatternJson { detected: p.detected.clone(), counts: p.counts.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HeraldedJson {
    pub output_mode: usize,
    #[serde(with = "cx")]
    pub zeta: C64,
    #[serde(with = "cx")]
    pub beta: C64,
    #[serde(with = "cx_vec")]
    pub coeffs: Vec<C64>,
    pub n_max: usize,
    pub probability: f64,
    pub path: HeraldPath,
}

impl From<&HeraldedState> for HeraldedJson {
    fn from(h: &HeraldedState) -> Self {
        HeraldedJson {
            output_mode: h.output_mode,
            zeta: h.zeta,
            beta: h.beta,
            coeffs: h.coeffs.clone(),
            n_max: h.n_max,
            probability: h.probability,
            path: h.path,
        }
    }
}

/// Hex SHA-256 of the bytes.
pub fn content_hash(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().ok_or_else(|| Error::Invalid(format!("output path {}", path.display())))?;
    let tmp = dir.join(format!(".{}.tmp", name.to_string_lossy()));
    let io_err = |e: std::io::Error| Error::Invalid(format!("writing {}: {e}", path.display()));
    let mut f = fs::File::create(&tmp).map_err(io_err)?;
    f.write_all(bytes).map_err(io_err)?;
    f.sync_all().map_err(io_err)?;
    fs::rename(&tmp, path).map_err(io_err)
}

/// CSV text with a header row.
pub fn csv_string(header: &[&str], rows: &[Vec<String>]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    w.write_record(header).map_err(err)?;
    for r in rows {
        w.write_record(r).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(format!("csv: {e}")))
}
