use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{ConvexPolygon, Polygon};
use crate::hausdorff::SegmentSet;
use crate::linear::{EqDistInstance, SegContPntInstance, ThreeSumInstance, ThreeSumPrimeInstance, Witness};
use crate::rational::Rational;
use crate::rotation::WedgePolygon;

/// Problem tags used in instance files and reduction chains.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "3sum")]
    ThreeSum,
    #[serde(rename = "3sum-prime")]
    ThreeSumPrime,
    #[serde(rename = "eqdist")]
    EqDist,
    #[serde(rename = "segcontpnt")]
    SegContPnt,
    #[serde(rename = "polycont")]
    PolyCont,
    #[serde(rename = "cpct")]
    Cpct,
    #[serde(rename = "rotation")]
    Rotation,
    #[serde(rename = "rigid")]
    Rigid,
    #[serde(rename = "hausdorff")]
    Hausdorff,
}

impl Kind {
    pub const ALL: [Kind; 9] = [
        Kind::ThreeSum,
        Kind::ThreeSumPrime,
        Kind::EqDist,
        Kind::SegContPnt,
        Kind::PolyCont,
        Kind::Cpct,
        Kind::Rotation,
        Kind::Rigid,
        Kind::Hausdorff,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Kind::ThreeSum => "3sum",
            Kind::ThreeSumPrime => "3sum-prime",
            Kind::EqDist => "eqdist",
            Kind::SegContPnt => "segcontpnt",
            Kind::PolyCont => "polycont",
            Kind::Cpct => "cpct",
            Kind::Rotation => "rotation",
            Kind::Rigid => "rigid",
            Kind::Hausdorff => "hausdorff",
        }
    }

    /// Edges of the reduction DAG.
    pub fn reduces_to(self) -> &'static [Kind] {
        match self {
            Kind::ThreeSum => &[Kind::ThreeSumPrime],
            Kind::ThreeSumPrime => &[Kind::ThreeSum, Kind::EqDist],
            Kind::EqDist => &[Kind::SegContPnt],
            Kind::SegContPnt => &[Kind::PolyCont, Kind::Rotation, Kind::Rigid, Kind::Hausdorff],
            _ => &[],
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Kind> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown problem kind {s:?}")))
    }
}

/// A problem instance of any kind.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", content = "payload")]
pub enum Instance {
    #[serde(rename = "3sum")]
    ThreeSum(ThreeSumInstance),
    #[serde(rename = "3sum-prime")]
    ThreeSumPrime(ThreeSumPrimeInstance),
    #[serde(rename = "eqdist")]
    EqDist(EqDistInstance),
    #[serde(rename = "segcontpnt")]
    SegContPnt(SegContPntInstance),
    #[serde(rename = "polycont")]
    PolyCont { p: Polygon, q: Polygon },
    #[serde(rename = "cpct")]
    Cpct { p: ConvexPolygon, q: ConvexPolygon },
    #[serde(rename = "rotation")]
    Rotation { a: WedgePolygon, b: WedgePolygon },
    #[serde(rename = "rigid")]
    Rigid { a: WedgePolygon, b: WedgePolygon },
    #[serde(rename = "hausdorff")]
    Hausdorff { a: SegmentSet, b: SegmentSet, eps: Rational },
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::ThreeSum(_) => Kind::ThreeSum,
            Instance::ThreeSumPrime(_) => Kind::ThreeSumPrime,
            Instance::EqDist(_) => Kind::EqDist,
            Instance::SegContPnt(_) => Kind::SegContPnt,
            Instance::PolyCont { .. } => Kind::PolyCont,
            Instance::Cpct { .. } => Kind::Cpct,
            Instance::Rotation { .. } => Kind::Rotation,
            Instance::Rigid { .. } => Kind::Rigid,
            Instance::Hausdorff { .. } => Kind::Hausdorff,
        }
    }
}

/// How an instance was generated.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenMode {
    PlantedYes,
    Random,
    AdversarialNo,
}

impl FromStr for GenMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<GenMode> {
        match s {
            "planted-yes" => Ok(GenMode::PlantedYes),
            "random" => Ok(GenMode::Random),
            "adversarial-no" => Ok(GenMode::AdversarialNo),
            _ => Err(Error::Parse(format!("unknown generation mode {s:?}"))),
        }
    }
}

/// Where an instance came from: the kinds it was reduced through (oldest
/// first), the generator settings and any planted witness of the source.
#[derive(Clone, PartialEq, Debug, Default, Serialize, Deserialize)]
pub struct Provenance {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub chain: Vec<Kind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<GenMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planted: Option<Witness>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

/// The on-disk instance format.
#[derive(Clone, PartialEq, Debug, Serialize, Deserialize)]
pub struct InstanceFile {
    #[serde(flatten)]
    pub instance: Instance,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl InstanceFile {
    pub fn new(instance: Instance) -> InstanceFile {
        InstanceFile { instance, provenance: None }
    }

    pub fn kind(&self) -> Kind {
        self.instance.kind()
    }

    /// Checks that the recorded chain followed by this kind is a path in
    /// the reduction DAG.
    pub fn validate(&self) -> Result<()> {
        let Some(prov) = &self.provenance else {
            return Ok(());
        };
        let mut path = prov.chain.clone();
        path.push(self.kind());
        for w in path.windows(2) {
            if !w[0].reduces_to().contains(&w[1]) {
                return Err(Error::ChainInvalid(format!("no reduction from {} to {}", w[0], w[1])));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialize")
    }

    pub fn from_json(text: &str) -> Result<InstanceFile> {
        let file: InstanceFile = serde_json::from_str(text)?;
        file.validate()?;
        Ok(file)
    }

    pub fn read(path: &std::path::Path) -> Result<InstanceFile> {
        InstanceFile::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn write(&self, path: &std::path::Path) -> Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        Ok(())
    }
}
