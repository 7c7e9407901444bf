//! Cuspidal local systems on nilpotent orbits, cuspidal data on Levi
//! subgroups of classical groups, and the cuspidal support of local systems
//! on exceptional groups.

use serde::{Deserialize, Serialize};

use crate::orbits::{
    check_orbit, component_group, cuspidal_orbit_label, enhancements, exceptional_center, Center,
    Enhancement, Family, GroupLabel, OrbitLabel,
};
use crate::partitions::{arithmetic_partition, is_square, is_triangular, ClassicalType, Partition};
use crate::rootdata::{LeviLabel, RootSystem};
use crate::{Error, Result};

/// The irreducible representation of `A(O)` defining a local system.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Rep {
    Trivial,
    /// The character `k ↦ ζ_order^{exponent k}` of `Z/order`.
    Character { order: u64, exponent: u64 },
    CentralCharacter { label: String },
    /// Sign of the symmetric factor tensored with a central character.
    SignTimesCentral { central: String },
    DimTagged { dim: u64, central: String },
}

impl Rep {
    /// The label of the central character, when the representation records
    /// one.
    pub fn central_label(&self) -> Option<&str> {
        match self {
            Rep::CentralCharacter { label } => Some(label),
            Rep::SignTimesCentral { central } | Rep::DimTagged { central, .. } => Some(central),
            Rep::Trivial | Rep::Character { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LocalSystemLabel {
    pub orbit: OrbitLabel,
    pub rep: Rep,
}

/// Cuspidal local systems of a group, with notes on known irregularities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalClassification {
    pub systems: Vec<LocalSystemLabel>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

/// Labels for the characters of the center `μ₂` (types B, C, E7) and `μ₃`
/// (E6), indexed by exponent.
pub fn central_character_label(center: Option<Center>, exponent: u32) -> String {
    match center {
        Some(Center::Mu3) => ["triv", "zeta", "zeta^2"][exponent as usize % 3].to_string(),
        _ => ["triv", "nontriv"][exponent as usize % 2].to_string(),
    }
}

fn dim_tag(p: &Partition) -> u64 {
    let a = p.stats().map(|s| s.a).unwrap_or(0);
    1u64 << (a.saturating_sub(1) / 2)
}

/// The staircase `(4j-3, …, 5, 1)` or `(4j-1, …, 7, 3)` summing to `total`,
/// whichever exists.
fn triangular_orbit(total: u64) -> Option<Partition> {
    is_triangular(total)?;
    (1..)
        .take_while(|j| j * (2 * j - 1) <= total)
        .find_map(|j: u64| {
            if j * (2 * j - 1) == total {
                Some(arithmetic_partition(1, 4, j))
            } else if j * (2 * j + 1) == total {
                Some(arithmetic_partition(3, 4, j))
            } else {
                None
            }
        })
}

pub fn cuspidal_classification(g: &GroupLabel) -> CuspidalClassification {
    let mut systems = Vec::new();
    let mut warnings = Vec::new();
    let n = g.rank() as u64;
    let orbit = |p: Partition| OrbitLabel::classical(g, p, None);
    match g.family {
        Family::A => {
            let order = n + 1;
            for k in (0..order.max(1)).filter(|&k| num_integer::gcd(k, order) == 1 || order == 1) {
                systems.push(LocalSystemLabel {
                    orbit: orbit(Partition::new(vec![order]).expect("positive part")),
                    rep: Rep::Character { order, exponent: k },
                });
            }
        }
        Family::B => {
            let total = 2 * n + 1;
            if let Some(k) = is_square(total) {
                systems.push(LocalSystemLabel {
                    orbit: orbit(arithmetic_partition(1, 2, k)),
                    rep: Rep::CentralCharacter { label: "triv".into() },
                });
            }
            if let Some(p) = triangular_orbit(total) {
                let dim = dim_tag(&p);
                systems.push(LocalSystemLabel {
                    orbit: orbit(p),
                    rep: Rep::DimTagged { dim, central: "nontriv".into() },
                });
            }
        }
        Family::C => {
            if let Some(d) = is_triangular(n).filter(|&d| d > 0) {
                let central = if n % 2 == 0 { "triv" } else { "nontriv" };
                systems.push(LocalSystemLabel {
                    orbit: orbit(arithmetic_partition(2, 2, d)),
                    rep: Rep::CentralCharacter { label: central.into() },
                });
            }
        }
        Family::D => {
            let total = 2 * n;
            let square = is_square(total).filter(|&k| k > 0);
            if let Some(k) = square {
                let central = if (n / 2) % 2 == 0 { "1" } else { "z_SO" };
                systems.push(LocalSystemLabel {
                    orbit: orbit(arithmetic_partition(1, 2, k)),
                    rep: Rep::CentralCharacter { label: central.into() },
                });
            }
            let tri = triangular_orbit(total).filter(|_| total > 0);
            if let Some(p) = &tri {
                let dim = dim_tag(p);
                for central in ["z+", "z-"] {
                    systems.push(LocalSystemLabel {
                        orbit: orbit(p.clone()),
                        rep: Rep::DimTagged { dim, central: central.into() },
                    });
                }
            }
            if square.is_some() && tri.is_some() {
                warnings.push(format!(
                    "2n = {total} is both square and triangular: the square and triangular rules \
                     give 3 cuspidal local systems, whereas the closing remark of the classification \
                     states two"
                ));
            }
        }
        f => {
            let label = cuspidal_orbit_label(f).expect("exceptional family");
            let center = exceptional_center(f);
            let exps: Vec<u32> = match center {
                Some(c) => (1..c.order()).collect(),
                None => vec![0],
            };
            for e in exps {
                systems.push(LocalSystemLabel {
                    orbit: OrbitLabel::exceptional(f, label),
                    rep: Rep::SignTimesCentral { central: central_character_label(center, e) },
                });
            }
        }
    }
    CuspidalClassification { systems, warnings }
}

pub fn cuspidal_systems(g: &GroupLabel) -> Vec<LocalSystemLabel> {
    cuspidal_classification(g).systems
}

pub fn has_cuspidal(g: &GroupLabel) -> bool {
    !cuspidal_systems(g).is_empty()
}

/// One simple factor of a Levi subgroup with its cuspidal system.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FactorSystem {
    /// `GL<a>` or the classical factor, e.g. `C1`.
    pub factor: String,
    pub system: LocalSystemLabel,
}

/// A Levi subgroup together with a cuspidal local system on each factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CuspidalDatum {
    pub levi: LeviLabel,
    /// Sizes of the `GL` blocks, nonincreasing.
    pub gl_blocks: Vec<u64>,
    /// Rank of the classical factor `X_m` (absent in type A).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical_rank: Option<u64>,
    pub factors: Vec<FactorSystem>,
}

fn gl_systems(a: u64) -> Vec<LocalSystemLabel> {
    let g = GroupLabel::levi_factor(ClassicalType::A, (a - 1) as u32);
    let orbit = OrbitLabel::classical(&g, Partition::new(vec![a]).expect("a >= 1"), None);
    (0..a)
        .filter(|&k| num_integer::gcd(k, a) == 1 || a == 1)
        .map(|k| LocalSystemLabel { orbit: orbit.clone(), rep: Rep::Character { order: a, exponent: k } })
        .collect()
}

/// Nonincreasing sequences of positive integers summing to `total`.
fn block_shapes(total: u64) -> Vec<Vec<u64>> {
    crate::partitions::partitions_of_total(total, ClassicalType::A)
        .into_iter()
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Cuspidal data `(L, E)` for the standard Levis of a classical group, one
/// Levi per shape `GL_{a₁} × ⋯ × GL_{a_k} × X_m`.
pub fn cuspidal_levi_data(g: &GroupLabel) -> Result<Vec<CuspidalDatum>> {
    let t = g
        .family
        .classical()
        .ok_or_else(|| Error::WrongFamily { expected: "classical", got: g.to_string() })?;
    let rs = RootSystem::new(*g);
    let n = g.rank() as u64;
    let mut out = Vec::new();
    let mut shapes: Vec<(Vec<u64>, Option<u64>)> = Vec::new();
    if t == ClassicalType::A {
        for b in block_shapes(n + 1) {
            shapes.push((b, None));
        }
    } else {
        for m in (0..=n).rev() {
            if t == ClassicalType::D && m == 1 {
                continue;
            }
            let blocks = if m == n { vec![Vec::new()] } else { block_shapes(n - m) };
            for b in blocks {
                shapes.push((b, Some(m)));
            }
        }
    }
    for (blocks, m) in shapes {
        let mut x: Vec<usize> = Vec::new();
        let mut start = 0usize;
        for &a in &blocks {
            x.extend(start..start + a as usize - 1);
            start += a as usize;
        }
        let mut choices: Vec<(String, Vec<LocalSystemLabel>)> =
            blocks.iter().map(|&a| (format!("GL{a}"), gl_systems(a))).collect();
        if let Some(m) = m.filter(|&m| m > 0) {
            x.extend((n - m) as usize..n as usize);
            let factor = GroupLabel::levi_factor(t, m as u32);
            choices.push((factor.to_string(), cuspidal_systems(&factor)));
        }
        if choices.iter().any(|(_, c)| c.is_empty()) {
            continue;
        }
        let levi = LeviLabel {
            x: x.iter().map(|i| i + 1).collect(),
            omega: vec![(1..=rs.rank()).collect()],
            semisimple_type: rs.subsystem_type(&x),
        };
        let mut combos: Vec<Vec<FactorSystem>> = vec![Vec::new()];
        for (name, systems) in &choices {
            combos = combos
                .into_iter()
                .flat_map(|prefix| {
                    systems.iter().map(move |s| {
                        let mut v = prefix.clone();
                        v.push(FactorSystem { factor: name.clone(), system: s.clone() });
                        v
                    })
                })
                .collect();
        }
        for factors in combos {
            out.push(CuspidalDatum { levi: levi.clone(), gl_blocks: blocks.clone(), classical_rank: m, factors });
        }
    }
    Ok(out)
}

/// Orbit of a cuspidal support inside its Levi.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportOrbit {
    Zero,
    Regular,
    Orbit(OrbitLabel),
}

/// `[L, O, E]` for an exceptional group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CuspidalSupport {
    pub levi: LeviLabel,
    /// `π₀(Z_L)` as a short name: `1`, `mu2` or `mu3`.
    pub levi_center: String,
    pub orbit: SupportOrbit,
    pub system: Rep,
    /// Exponent of the central character of `G` carried by the support.
    pub central: u32,
}

/// Levi subgroups carrying the non-principal series: `A2×A2` in `E6` and
/// `3A1` in `E7` (1-based simple roots).
pub fn exceptional_cuspidal_levi(family: Family) -> Option<&'static [usize]> {
    match family {
        Family::E6 => Some(&[1, 3, 5, 6]),
        Family::E7 => Some(&[2, 5, 7]),
        _ => None,
    }
}

/// Cuspidal support of the local system `(o, rep)` on an exceptional group.
pub fn cuspidal_support_exceptional(
    g: &GroupLabel,
    o: &OrbitLabel,
    rep: &Enhancement,
) -> Result<CuspidalSupport> {
    let f = g.family;
    if !f.is_exceptional() {
        return Err(Error::WrongFamily { expected: "exceptional", got: g.to_string() });
    }
    check_orbit(g, o)?;
    let a = component_group(g, o)?;
    let valid = enhancements(&a).is_some_and(|list| list.contains(rep));
    if !valid {
        return Err(Error::InvalidEnhancement(format!("{rep} is not an irreducible of {a}")));
    }
    let rs = RootSystem::new(*g);
    let center = exceptional_center(f);
    let chi = rep.central;
    let OrbitLabel::Exceptional { bala_carter, .. } = o else {
        unreachable!("checked orbit")
    };
    let is_cuspidal = Some(bala_carter.as_str()) == cuspidal_orbit_label(f)
        && rep.is_sign()
        && (center.is_none() || chi != 0);
    if is_cuspidal {
        let all: Vec<usize> = (1..=rs.rank()).collect();
        return Ok(CuspidalSupport {
            levi: LeviLabel::connected(&rs, &all),
            levi_center: center.map_or("1", |c| if c == Center::Mu2 { "mu2" } else { "mu3" }).into(),
            orbit: SupportOrbit::Orbit(o.clone()),
            system: Rep::SignTimesCentral { central: central_character_label(center, chi) },
            central: chi,
        });
    }
    if chi == 0 {
        return Ok(CuspidalSupport {
            levi: LeviLabel::connected(&rs, &[]),
            levi_center: "1".into(),
            orbit: SupportOrbit::Zero,
            system: Rep::Trivial,
            central: 0,
        });
    }
    let x = exceptional_cuspidal_levi(f).expect("center is nontrivial only for E6 and E7");
    let c = center.expect("chi != 0");
    Ok(CuspidalSupport {
        levi: LeviLabel::connected(&rs, x),
        levi_center: if c == Center::Mu2 { "mu2" } else { "mu3" }.into(),
        orbit: SupportOrbit::Regular,
        system: Rep::CentralCharacter { label: central_character_label(center, chi) },
        central: chi,
    })
}
