use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A family of forbidden graphs, described symbolically.
///
/// Text form: `K1`, `star:k`, `clique:k`, `cycle:k`, `path:k`, `cycles`,
/// `regmin:r`, `chrmin:k`, the presets `F0:k`, `F1:k`, `F2:k`, `F01:k`,
/// `F3:k`, and `union(a,b,...)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// K_1
    SingleVertex,
    /// K_{1,k}
    Star(usize),
    /// K_k
    Clique(usize),
    /// C_k; C_1 = K_1 and C_2 = K_2
    CycleLen(usize),
    /// P_k
    PathOrder(usize),
    /// every cycle
    AllCycles,
    /// regular graphs of degree at least r
    RegularMinDegree(usize),
    /// graphs with chromatic number at least k
    ChromaticMin(usize),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    /// F_{0,k} = {K_{1,k}}
    pub fn f0(k: usize) -> Self {
        FamilySpec::Star(k)
    }

    /// F_{1,k}: regular graphs of degree at least k - 1.
    pub fn f1(k: usize) -> Self {
        FamilySpec::RegularMinDegree(k.saturating_sub(1))
    }

    /// F_{2,k}: graphs of chromatic number at least k.
    pub fn f2(k: usize) -> Self {
        FamilySpec::ChromaticMin(k)
    }

    pub fn f01(k: usize) -> Self {
        FamilySpec::Union(vec![Self::f0(k), Self::f1(k)])
    }

    pub fn f3(k: usize) -> Self {
        FamilySpec::Union(vec![Self::f0(k), Self::f1(k), Self::f2(k)])
    }

    /// F_{i,k} for i in {0, 1, 2, 3}.
    pub fn indexed(i: usize, k: usize) -> Result<Self> {
        match i {
            0 => Ok(Self::f0(k)),
            1 => Ok(Self::f1(k)),
            2 => Ok(Self::f2(k)),
            3 => Ok(Self::f3(k)),
            _ => Err(Error::InvalidParameter(format!(
                "family index must be 0..=3, got {i}"
            ))),
        }
    }

    /// Flattens nested unions, drops repeated members and collapses
    /// one-member unions. Rejects zero parameters and empty unions.
    pub fn normalize(&self) -> Result<FamilySpec> {
        let bad = |why: &str| Error::FamilySpec {
            input: self.to_string(),
            reason: why.to_string(),
        };
        match self {
            FamilySpec::Star(0) => Err(bad("star needs k >= 1")),
            FamilySpec::Clique(0) => Err(bad("clique needs k >= 1")),
            FamilySpec::CycleLen(0) => Err(bad("cycle needs k >= 1")),
            FamilySpec::PathOrder(0) => Err(bad("path needs k >= 1")),
            FamilySpec::ChromaticMin(0) => Err(bad("chrmin needs k >= 1")),
            FamilySpec::Union(members) => {
                let mut flat = Vec::new();
                for m in members {
                    match m.normalize()? {
                        FamilySpec::Union(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                let mut out: Vec<FamilySpec> = Vec::new();
                for m in flat {
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
                match out.len() {
                    0 => Err(bad("empty union")),
                    1 => Ok(out.pop().unwrap()),
                    _ => Ok(FamilySpec::Union(out)),
                }
            }
            other => Ok(other.clone()),
        }
    }

    pub fn members(&self) -> &[FamilySpec] {
        match self {
            FamilySpec::Union(m) => m,
            other => std::slice::from_ref(other),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::SingleVertex => write!(f, "K1"),
            FamilySpec::Star(k) => write!(f, "star:{k}"),
            FamilySpec::Clique(k) => write!(f, "clique:{k}"),
            FamilySpec::CycleLen(k) => write!(f, "cycle:{k}"),
            FamilySpec::PathOrder(k) => write!(f, "path:{k}"),
            FamilySpec::AllCycles => write!(f, "cycles"),
            FamilySpec::RegularMinDegree(r) => write!(f, "regmin:{r}"),
            FamilySpec::ChromaticMin(k) => write!(f, "chrmin:{k}"),
            FamilySpec::Union(members) => {
                write!(f, "union(")?;
                for (i, m) in members.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ")")
            }
        }
    }
}

fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let bad = |why: &str| Error::FamilySpec {
            input: input.to_string(),
            reason: why.to_string(),
        };
        if s == "K1" {
            return Ok(FamilySpec::SingleVertex);
        }
        if s == "cycles" {
            return Ok(FamilySpec::AllCycles);
        }
        if let Some(body) = s.strip_prefix("union(").and_then(|b| b.strip_suffix(')')) {
            let parts = split_top_level(body).ok_or_else(|| bad("unbalanced parentheses"))?;
            let members = parts
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<FamilySpec>>>()?;
            return FamilySpec::Union(members).normalize();
        }
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| bad("expected name:parameter"))?;
        let k: usize = arg
            .trim()
            .parse()
            .map_err(|_| bad("parameter is not a non-negative integer"))?;
        let spec = match name.trim() {
            "star" => FamilySpec::Star(k),
            "clique" => FamilySpec::Clique(k),
            "cycle" => FamilySpec::CycleLen(k),
            "path" => FamilySpec::PathOrder(k),
            "regmin" => FamilySpec::RegularMinDegree(k),
            "chrmin" => FamilySpec::ChromaticMin(k),
            "F0" | "F1" | "F2" | "F3" | "F01" if k == 0 => return Err(bad("k must be >= 1")),
            "F0" => FamilySpec::f0(k),
            "F1" => FamilySpec::f1(k),
            "F2" => FamilySpec::f2(k),
            "F01" => FamilySpec::f01(k),
            "F3" => FamilySpec::f3(k),
            _ => return Err(bad("unknown family name")),
        };
        spec.normalize()
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
