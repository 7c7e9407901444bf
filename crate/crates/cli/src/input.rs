//! Parsing of inline arguments and JSON input documents.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Deserialize;
use springer_core::orbits::{check_orbit, Enhancement, Family, GroupLabel, OrbitLabel, Tag};
use springer_core::partitions::Partition;
use springer_core::projrep::{Cocycle, FiniteGroup};
use springer_core::rootdata::{named_automorphisms, ExtendedWeylGroup, ParabolicPair, ParabolicPairJson, RootSystem};
use springer_core::extquot::TwistedQuotientData;

use crate::CliError;

/// `A 3`, `A3`, `E8`.
pub fn group_label(family: &str, rank: Option<u32>) -> Result<GroupLabel, CliError> {
    let f = family.trim();
    let split = f.find(|c: char| c.is_ascii_digit());
    let (name, inline_rank) = match split {
        Some(i) if matches!(&f[..i], "A" | "B" | "C" | "D" | "a" | "b" | "c" | "d") => {
            let r: u32 = f[i..].parse().map_err(|_| CliError::Malformed(format!("bad rank in {f}")))?;
            (&f[..i], Some(r))
        }
        _ => (f, None),
    };
    let family: Family = name.parse().map_err(|e: springer_core::Error| CliError::Malformed(e.to_string()))?;
    let rank = match (inline_rank, rank) {
        (Some(_), Some(_)) => return Err(CliError::Malformed("rank given twice".into())),
        (a, b) => a.or(b),
    };
    Ok(GroupLabel::new(family, rank)?)
}

/// Comma-separated positive integers; `0`, `none`, `-` and the empty string
/// denote the empty list.
pub fn index_list(s: &str) -> Result<Vec<usize>, CliError> {
    let t = s.trim();
    if matches!(t, "" | "0" | "-" | "none") {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| CliError::Malformed(format!("bad index list {s:?}"))))
        .collect()
}

/// Semicolon-separated permutations, each a comma-separated list.
pub fn permutation_list(s: &str) -> Result<Vec<Vec<usize>>, CliError> {
    s.split(';').filter(|p| !p.trim().is_empty()).map(index_list).collect()
}

/// `flip`, `triality`, or explicit 1-based permutations of the simple roots.
pub fn extended_weyl(g: &GroupLabel, pi0: Option<&str>) -> Result<ExtendedWeylGroup, CliError> {
    let rs = RootSystem::new(*g);
    let gens = match pi0 {
        None => Vec::new(),
        Some(name) if name.chars().next().is_some_and(|c| c.is_ascii_alphabetic()) => named_automorphisms(g, name)?,
        Some(perms) => permutation_list(perms)?
            .into_iter()
            .map(|p| p.into_iter().map(|i| i.wrapping_sub(1)).collect())
            .collect(),
    };
    Ok(ExtendedWeylGroup::new(rs, &gens)?)
}

pub fn pair(ext: &ExtendedWeylGroup, x: &str, omega: Option<&str>) -> Result<ParabolicPair, CliError> {
    let j = ParabolicPairJson { x: index_list(x)?, omega: omega.map(permutation_list).transpose()?.unwrap_or_default() };
    Ok(ext.pair_from_json(&j)?)
}

/// A partition such as `3,2,1`, with an optional `:I` or `:II` tag for very
/// even orbits of type D, or a Bala–Carter label for exceptional groups.
pub fn orbit(g: &GroupLabel, s: &str) -> Result<OrbitLabel, CliError> {
    let o = if g.family.is_exceptional() {
        OrbitLabel::exceptional(g.family, s.trim())
    } else {
        let (parts, tag) = match s.split_once(':') {
            Some((p, "I")) => (p, Some(Tag::I)),
            Some((p, "II")) => (p, Some(Tag::II)),
            Some(_) => return Err(CliError::Malformed(format!("bad orbit tag in {s:?}"))),
            None => (s, None),
        };
        let parts: Vec<u64> = index_list(parts)?.into_iter().map(|x| x as u64).collect();
        let p = Partition::new(parts).map_err(|e| CliError::Malformed(e.to_string()))?;
        OrbitLabel::classical(g, p, tag)
    };
    check_orbit(g, &o)?;
    Ok(o)
}

pub fn enhancement(central: u32, factor: &str) -> Result<Enhancement, CliError> {
    let parts: Vec<u64> = index_list(factor)?.into_iter().map(|x| x as u64).collect();
    let factor = if parts.is_empty() {
        Partition::empty()
    } else {
        Partition::new(parts).map_err(|e| CliError::Malformed(e.to_string()))?
    };
    Ok(Enhancement { central, factor })
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        std::fs::read_to_string(path)
    }
    .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

/// A finite group by its multiplication table (identity first) or by
/// generating permutations of `0..n`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GroupInput {
    Table { table: Vec<Vec<usize>> },
    Permutations { permutations: Vec<Vec<usize>> },
}

impl GroupInput {
    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        Ok(match self {
            GroupInput::Table { table } => FiniteGroup::from_table(table)?,
            GroupInput::Permutations { permutations } => FiniteGroup::from_permutations(permutations)?.0,
        })
    }
}

#[derive(Debug, Deserialize)]
pub struct TwistedIrrepsInput {
    pub group: GroupInput,
    pub cocycle: Cocycle,
}

#[derive(Debug, Deserialize)]
pub struct BasePoint {
    pub point: usize,
    pub cocycle: Cocycle,
}

/// A group action with either explicit strict data or base-point cocycles
/// from which the data is synthesized, and an optional block partition for
/// the two-step construction.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtquotInput {
    pub group: GroupInput,
    /// `action[g][x]`.
    pub action: Vec<Vec<usize>>,
    #[serde(default)]
    pub data: Option<TwistedQuotientData>,
    #[serde(default)]
    pub modulus: Option<u32>,
    #[serde(default)]
    pub base_points: Vec<BasePoint>,
    #[serde(default)]
    pub blocks: Option<Vec<Vec<usize>>>,
}
