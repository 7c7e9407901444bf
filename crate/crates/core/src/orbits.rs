//! Nilpotent orbits of simply-connected simple groups and their component
//! groups `A(O) = π₀(Z_G(u))`.
//!
//! Classical orbits come from [`crate::partitions`]; exceptional orbits are
//! read from embedded tables keyed by Bala–Carter label.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::partitions::{enumerate_partitions, partitions_of_total, ClassicalType, Partition};
use crate::{Error, Result};

/// Cartan families of simple groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    pub fn is_exceptional(self) -> bool {
        self.classical().is_none()
    }

    pub fn classical(self) -> Option<ClassicalType> {
        match self {
            Family::A => Some(ClassicalType::A),
            Family::B => Some(ClassicalType::B),
            Family::C => Some(ClassicalType::C),
            Family::D => Some(ClassicalType::D),
            _ => None,
        }
    }

    /// Rank of an exceptional family.
    pub fn exceptional_rank(self) -> Option<u32> {
        match self {
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            Family::F4 => Some(4),
            Family::G2 => Some(2),
            _ => None,
        }
    }

    pub const EXCEPTIONAL: [Family; 5] = [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8];
}

impl From<ClassicalType> for Family {
    fn from(t: ClassicalType) -> Self {
        match t {
            ClassicalType::A => Family::A,
            ClassicalType::B => Family::B,
            ClassicalType::C => Family::C,
            ClassicalType::D => Family::D,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "G2" => Family::G2,
            other => return Err(Error::InvalidGroup(format!("unknown family {other}"))),
        })
    }
}

/// A simply-connected simple group, named by family and (for classical
/// families) rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupLabel {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
}

impl GroupLabel {
    pub fn new(family: Family, rank: Option<u32>) -> Result<Self> {
        match (family.classical(), rank) {
            (Some(_), None) => Err(Error::InvalidGroup(format!("{family} needs a rank"))),
            (Some(ClassicalType::D), Some(r)) if r < 2 => {
                Err(Error::InvalidGroup(format!("D{r}: rank must be at least 2")))
            }
            (Some(_), Some(0)) => Err(Error::InvalidGroup(format!("{family}0: rank must be at least 1"))),
            (None, Some(r)) if Some(r) != family.exceptional_rank() => {
                Err(Error::InvalidGroup(format!("{family} carries no rank")))
            }
            (None, _) => Ok(GroupLabel { family, rank: None }),
            (Some(_), Some(r)) => Ok(GroupLabel { family, rank: Some(r) }),
        }
    }

    pub fn classical(t: ClassicalType, rank: u32) -> Result<Self> {
        GroupLabel::new(t.into(), Some(rank))
    }

    pub fn exceptional(family: Family) -> Result<Self> {
        GroupLabel::new(family, None)
    }

    /// Levi factors may be of small rank (`GL_1`, `Sp_0`, …); this skips the
    /// minimal-rank checks of [`GroupLabel::new`].
    pub(crate) fn levi_factor(t: ClassicalType, rank: u32) -> Self {
        GroupLabel { family: t.into(), rank: Some(rank) }
    }

    /// Semisimple rank.
    pub fn rank(&self) -> u32 {
        self.rank.or(self.family.exceptional_rank()).unwrap_or(0)
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank {
            Some(r) if !self.family.is_exceptional() => write!(f, "{}{}", self.family, r),
            _ => write!(f, "{}", self.family),
        }
    }
}

/// Distinguishes the two orbits attached to a very even partition in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    I,
    II,
}

/// A nilpotent orbit. Serializes as
/// `{"family":"D","rank":4,"partition":[2,2,2,2],"tag":"I"}` or
/// `{"family":"E8","bala_carter":"E8(a7)"}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrbitLabel {
    Classical {
        family: Family,
        rank: u32,
        partition: Partition,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        tag: Option<Tag>,
    },
    Exceptional {
        family: Family,
        bala_carter: String,
    },
}

impl OrbitLabel {
    pub fn classical(g: &GroupLabel, partition: Partition, tag: Option<Tag>) -> Self {
        OrbitLabel::Classical { family: g.family, rank: g.rank(), partition, tag }
    }

    pub fn exceptional(family: Family, bala_carter: &str) -> Self {
        OrbitLabel::Exceptional { family, bala_carter: bala_carter.to_string() }
    }

    pub fn family(&self) -> Family {
        match self {
            OrbitLabel::Classical { family, .. } | OrbitLabel::Exceptional { family, .. } => *family,
        }
    }

    pub fn partition(&self) -> Option<&Partition> {
        match self {
            OrbitLabel::Classical { partition, .. } => Some(partition),
            OrbitLabel::Exceptional { .. } => None,
        }
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitLabel::Classical { partition, tag, .. } => {
                write!(f, "O{partition}")?;
                match tag {
                    Some(Tag::I) => f.write_str("^I"),
                    Some(Tag::II) => f.write_str("^II"),
                    None => Ok(()),
                }
            }
            OrbitLabel::Exceptional { bala_carter, .. } => f.write_str(bala_carter),
        }
    }
}

/// Image of the center of `E6`/`E7` inside `A(O)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Center {
    Mu2,
    Mu3,
}

impl Center {
    pub fn order(self) -> u32 {
        match self {
            Center::Mu2 => 2,
            Center::Mu3 => 3,
        }
    }
}

/// Structured description of `A(O)`.
///
/// `CentralExt2(k)` is a central extension of `Z/2` by `(Z/2)^k` whose
/// multiplication is not modelled.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ComponentGroupDescriptor {
    Trivial,
    Cyclic { order: u64 },
    Elem2 { rank: u64 },
    Sym { degree: u32 },
    Product { center: Center, factor: Box<ComponentGroupDescriptor> },
    CentralExt2 { rank: u64 },
}

impl ComponentGroupDescriptor {
    pub fn cyclic(order: u64) -> Self {
        if order <= 1 {
            Self::Trivial
        } else {
            Self::Cyclic { order }
        }
    }

    pub fn elem2(rank: u64) -> Self {
        if rank == 0 {
            Self::Trivial
        } else {
            Self::Elem2 { rank }
        }
    }

    pub fn sym(degree: u32) -> Self {
        if degree <= 1 {
            Self::Trivial
        } else {
            Self::Sym { degree }
        }
    }

    pub fn product(center: Center, factor: ComponentGroupDescriptor) -> Self {
        Self::Product { center, factor: Box::new(factor) }
    }

    /// Group order; `None` if it does not fit in a `u64`.
    pub fn order(&self) -> Option<u64> {
        match self {
            Self::Trivial => Some(1),
            Self::Cyclic { order } => Some(*order),
            Self::Elem2 { rank } => 1u64.checked_shl(*rank as u32),
            Self::Sym { degree } => (1..=*degree as u64).try_fold(1u64, |a, b| a.checked_mul(b)),
            Self::Product { center, factor } => {
                factor.order().and_then(|o| o.checked_mul(center.order() as u64))
            }
            Self::CentralExt2 { rank } => 1u64.checked_shl(*rank as u32 + 1),
        }
    }

    /// Short text form used in tables: `1`, `Z/3`, `(Z/2)^2`, `S3`,
    /// `mu3xS2`, `2.(Z/2)^1`.
    pub fn short(&self) -> String {
        match self {
            Self::Trivial => "1".into(),
            Self::Cyclic { order } => format!("Z/{order}"),
            Self::Elem2 { rank } => format!("(Z/2)^{rank}"),
            Self::Sym { degree } => format!("S{degree}"),
            Self::Product { center, factor } => {
                let c = match center {
                    Center::Mu2 => "mu2",
                    Center::Mu3 => "mu3",
                };
                match **factor {
                    Self::Trivial => c.to_string(),
                    ref f => format!("{c}x{}", f.short()),
                }
            }
            Self::CentralExt2 { rank } => format!("2.(Z/2)^{rank}"),
        }
    }

    fn parse_short(s: &str) -> Self {
        match s {
            "1" => Self::Trivial,
            "S2" => Self::sym(2),
            "S3" => Self::sym(3),
            "S4" => Self::sym(4),
            "S5" => Self::sym(5),
            "mu2" => Self::product(Center::Mu2, Self::Trivial),
            "mu3" => Self::product(Center::Mu3, Self::Trivial),
            "mu2xS2" => Self::product(Center::Mu2, Self::sym(2)),
            "mu2xS3" => Self::product(Center::Mu2, Self::sym(3)),
            "mu3xS2" => Self::product(Center::Mu3, Self::sym(2)),
            other => panic!("bad table entry {other}"),
        }
    }
}

impl fmt::Display for ComponentGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.short())
    }
}

// Bala–Carter label and A(O) for the simply-connected group. Orbits are
// listed in order of increasing dimension.

const G2_ORBITS: &[(&str, &str)] =
    &[("0", "1"), ("A1", "1"), ("~A1", "1"), ("G2(a1)", "S3"), ("G2", "1")];

const F4_ORBITS: &[(&str, &str)] = &[
    ("0", "1"),
    ("A1", "1"),
    ("~A1", "S2"),
    ("A1+~A1", "1"),
    ("A2", "S2"),
    ("~A2", "1"),
    ("A2+~A1", "1"),
    ("B2", "S2"),
    ("~A2+A1", "1"),
    ("C3(a1)", "S2"),
    ("F4(a3)", "S4"),
    ("B3", "1"),
    ("C3", "1"),
    ("F4(a2)", "S2"),
    ("F4(a1)", "S2"),
    ("F4", "1"),
];

const E6_ORBITS: &[(&str, &str)] = &[
    ("0", "1"),
    ("A1", "1"),
    ("2A1", "1"),
    ("3A1", "1"),
    ("A2", "S2"),
    ("A2+A1", "1"),
    ("2A2", "mu3"),
    ("A2+2A1", "1"),
    ("A3", "1"),
    ("2A2+A1", "mu3"),
    ("A3+A1", "1"),
    ("D4(a1)", "S3"),
    ("A4", "1"),
    ("D4", "1"),
    ("A4+A1", "1"),
    ("A5", "mu3"),
    ("D5(a1)", "1"),
    ("E6(a3)", "mu3xS2"),
    ("D5", "1"),
    ("E6(a1)", "mu3"),
    ("E6", "mu3"),
];

const E7_ORBITS: &[(&str, &str)] = &[
    ("0", "1"),
    ("A1", "1"),
    ("2A1", "1"),
    ("(3A1)''", "mu2"),
    ("(3A1)'", "1"),
    ("A2", "S2"),
    ("4A1", "mu2"),
    ("A2+A1", "S2"),
    ("A2+2A1", "1"),
    ("A3", "1"),
    ("2A2", "1"),
    ("A2+3A1", "mu2"),
    ("(A3+A1)''", "mu2"),
    ("2A2+A1", "1"),
    ("(A3+A1)'", "1"),
    ("D4(a1)", "S3"),
    ("A3+2A1", "mu2"),
    ("D4", "1"),
    ("D4(a1)+A1", "mu2xS2"),
    ("A3+A2", "S2"),
    ("A4", "S2"),
    ("A3+A2+A1", "mu2"),
    ("(A5)''", "mu2"),
    ("D4+A1", "mu2"),
    ("A4+A1", "S2"),
    ("D5(a1)", "S2"),
    ("A4+A2", "1"),
    ("(A5)'", "1"),
    ("A5+A1", "mu2"),
    ("D5(a1)+A1", "mu2"),
    ("D6(a2)", "mu2"),
    ("E6(a3)", "S2"),
    ("D5", "1"),
    ("E7(a5)", "mu2xS3"),
    ("A6", "1"),
    ("D5+A1", "mu2"),
    ("D6(a1)", "mu2"),
    ("E7(a4)", "mu2xS2"),
    ("D6", "mu2"),
    ("E6(a1)", "S2"),
    ("E6", "1"),
    ("E7(a3)", "mu2xS2"),
    ("E7(a2)", "mu2"),
    ("E7(a1)", "mu2"),
    ("E7", "mu2"),
];

const E8_ORBITS: &[(&str, &str)] = &[
    ("0", "1"),
    ("A1", "1"),
    ("2A1", "1"),
    ("3A1", "1"),
    ("A2", "S2"),
    ("4A1", "1"),
    ("A2+A1", "S2"),
    ("A2+2A1", "1"),
    ("A3", "1"),
    ("A2+3A1", "1"),
    ("2A2", "S2"),
    ("2A2+A1", "1"),
    ("A3+A1", "1"),
    ("D4(a1)", "S3"),
    ("D4", "1"),
    ("2A2+2A1", "1"),
    ("A3+2A1", "1"),
    ("D4(a1)+A1", "S3"),
    ("A3+A2", "S2"),
    ("A4", "S2"),
    ("A3+A2+A1", "1"),
    ("D4+A1", "1"),
    ("D4(a1)+A2", "S2"),
    ("A4+A1", "S2"),
    ("2A3", "1"),
    ("D5(a1)", "S2"),
    ("A4+2A1", "S2"),
    ("A4+A2", "1"),
    ("A5", "1"),
    ("D5(a1)+A1", "1"),
    ("A4+A2+A1", "1"),
    ("D4+A2", "S2"),
    ("E6(a3)", "S2"),
    ("D5", "1"),
    ("A4+A3", "1"),
    ("A5+A1", "1"),
    ("D5(a1)+A2", "1"),
    ("D6(a2)", "S2"),
    ("E6(a3)+A1", "S2"),
    ("E7(a5)", "S3"),
    ("D5+A1", "1"),
    ("E8(a7)", "S5"),
    ("A6", "1"),
    ("D6(a1)", "S2"),
    ("A6+A1", "1"),
    ("E7(a4)", "S2"),
    ("E6(a1)", "S2"),
    ("D5+A2", "S2"),
    ("D6", "1"),
    ("E6", "1"),
    ("D7(a2)", "S2"),
    ("A7", "1"),
    ("E6(a1)+A1", "S2"),
    ("E7(a3)", "S2"),
    ("E8(b6)", "S3"),
    ("D7(a1)", "S2"),
    ("E6+A1", "1"),
    ("E7(a2)", "1"),
    ("E8(a6)", "S3"),
    ("D7", "1"),
    ("E8(b5)", "S3"),
    ("E7(a1)", "1"),
    ("E8(a5)", "S2"),
    ("E8(b4)", "S2"),
    ("E7", "1"),
    ("E8(a4)", "S2"),
    ("E8(a3)", "S2"),
    ("E8(a2)", "1"),
    ("E8(a1)", "1"),
    ("E8", "1"),
];

pub(crate) fn exceptional_rows(family: Family) -> &'static [(&'static str, &'static str)] {
    match family {
        Family::G2 => G2_ORBITS,
        Family::F4 => F4_ORBITS,
        Family::E6 => E6_ORBITS,
        Family::E7 => E7_ORBITS,
        Family::E8 => E8_ORBITS,
        _ => &[],
    }
}

/// Bala–Carter label of the orbit carrying the cuspidal local systems: the
/// distinguished orbit of minimal dimension.
pub fn cuspidal_orbit_label(family: Family) -> Option<&'static str> {
    match family {
        Family::G2 => Some("G2(a1)"),
        Family::F4 => Some("F4(a3)"),
        Family::E6 => Some("E6(a3)"),
        Family::E7 => Some("E7(a5)"),
        Family::E8 => Some("E8(a7)"),
        _ => None,
    }
}

/// Center of the simply-connected exceptional group, if nontrivial.
pub fn exceptional_center(family: Family) -> Option<Center> {
    match family {
        Family::E6 => Some(Center::Mu3),
        Family::E7 => Some(Center::Mu2),
        _ => None,
    }
}

pub fn enumerate_orbits(g: &GroupLabel) -> Vec<OrbitLabel> {
    match g.family.classical() {
        Some(t) => {
            let parts = enumerate_partitions(g.rank() as i64, t).expect("rank is nonnegative");
            let mut out = Vec::with_capacity(parts.len());
            for p in parts {
                if t == ClassicalType::D && p.is_very_even() {
                    out.push(OrbitLabel::classical(g, p.clone(), Some(Tag::I)));
                    out.push(OrbitLabel::classical(g, p, Some(Tag::II)));
                } else {
                    out.push(OrbitLabel::classical(g, p, None));
                }
            }
            out
        }
        None => exceptional_rows(g.family)
            .iter()
            .map(|(bc, _)| OrbitLabel::exceptional(g.family, bc))
            .collect(),
    }
}

/// Checks that `o` is an orbit of `g`.
pub fn check_orbit(g: &GroupLabel, o: &OrbitLabel) -> Result<()> {
    let bad = || Error::InvalidOrbit { group: g.to_string(), orbit: o.to_string() };
    match (g.family.classical(), o) {
        (Some(t), OrbitLabel::Classical { family, rank, partition, tag }) => {
            if *family != g.family || *rank != g.rank() {
                return Err(bad());
            }
            if partition.total() != t.partition_total(g.rank() as u64)
                || !partition.is_valid_for_type(t)
            {
                return Err(bad());
            }
            let needs_tag = t == ClassicalType::D && partition.is_very_even();
            if needs_tag != tag.is_some() {
                return Err(bad());
            }
            Ok(())
        }
        (None, OrbitLabel::Exceptional { family, bala_carter }) => {
            if *family != g.family {
                return Err(bad());
            }
            if exceptional_rows(g.family).iter().any(|(bc, _)| bc == bala_carter) {
                Ok(())
            } else {
                Err(Error::UnknownOrbit(bala_carter.clone()))
            }
        }
        _ => Err(bad()),
    }
}

pub fn component_group(g: &GroupLabel, o: &OrbitLabel) -> Result<ComponentGroupDescriptor> {
    check_orbit(g, o)?;
    match o {
        OrbitLabel::Classical { partition, .. } => {
            let t = g.family.classical().expect("checked");
            Ok(classical_component_group(t, partition))
        }
        OrbitLabel::Exceptional { bala_carter, .. } => {
            let (_, code) = exceptional_rows(g.family)
                .iter()
                .find(|(bc, _)| bc == bala_carter)
                .expect("checked");
            Ok(ComponentGroupDescriptor::parse_short(code))
        }
    }
}

/// `A(O_λ)` for the simply-connected classical group of family `t`.
pub fn classical_component_group(t: ClassicalType, partition: &Partition) -> ComponentGroupDescriptor {
    let Ok(s) = partition.stats() else {
        return ComponentGroupDescriptor::Trivial;
    };
    match t {
        ClassicalType::A => ComponentGroupDescriptor::cyclic(s.c),
        ClassicalType::C => ComponentGroupDescriptor::elem2(s.b),
        ClassicalType::B | ClassicalType::D => {
            let k = s.a.saturating_sub(1);
            if s.all_odd_mult_one {
                ComponentGroupDescriptor::CentralExt2 { rank: k }
            } else {
                ComponentGroupDescriptor::elem2(k)
            }
        }
    }
}

/// The count table `#{O : A(O) = A}` for an exceptional group, as printed
/// in the reference tabulation.
pub fn exceptional_count_table(g: &GroupLabel) -> Result<BTreeMap<ComponentGroupDescriptor, u32>> {
    let rows: &[(&str, u32)] = match g.family {
        Family::G2 => &[("1", 4), ("S3", 1)],
        Family::F4 => &[("1", 9), ("S2", 6), ("S4", 1)],
        Family::E6 => &[("1", 13), ("S2", 1), ("S3", 1), ("mu3", 5), ("mu3xS2", 1)],
        Family::E7 => &[
            ("1", 17),
            ("S2", 8),
            ("S3", 1),
            ("mu2", 15),
            ("mu2xS2", 3),
            ("mu2xS3", 1),
        ],
        Family::E8 => &[("1", 38), ("S2", 25), ("S3", 6), ("S5", 1)],
        _ => return Err(Error::WrongFamily { expected: "exceptional", got: g.to_string() }),
    };
    Ok(rows
        .iter()
        .map(|(code, n)| (ComponentGroupDescriptor::parse_short(code), *n))
        .collect())
}

/// Census of `A(O)` over the embedded per-orbit table.
pub fn component_group_census(g: &GroupLabel) -> BTreeMap<ComponentGroupDescriptor, u32> {
    let mut census = BTreeMap::new();
    for o in enumerate_orbits(g) {
        let a = component_group(g, &o).expect("enumerated orbit");
        *census.entry(a).or_insert(0) += 1;
    }
    census
}

/// An irreducible representation of an exceptional `A(O)`: a character of
/// the central factor (exponent modulo its order) times the irreducible of
/// the symmetric factor labelled by a partition of its degree.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Enhancement {
    pub central: u32,
    pub factor: Partition,
}

impl Enhancement {
    pub fn trivial() -> Self {
        Enhancement { central: 0, factor: Partition::empty() }
    }

    /// Sign of the symmetric factor: the partition `(1,…,1)`. For a trivial
    /// factor the empty partition is both trivial and sign.
    pub fn is_sign(&self) -> bool {
        self.factor.parts().iter().all(|&p| p == 1)
    }
}

impl fmt::Display for Enhancement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi^{} x {}", self.central, self.factor)
    }
}

/// Irreducibles of a descriptor built from symmetric groups and centers.
/// `None` for descriptors outside that class.
pub fn enhancements(a: &ComponentGroupDescriptor) -> Option<Vec<Enhancement>> {
    fn sym_irreps(a: &ComponentGroupDescriptor) -> Option<Vec<Partition>> {
        match a {
            ComponentGroupDescriptor::Trivial => Some(vec![Partition::empty()]),
            ComponentGroupDescriptor::Sym { degree } => {
                Some(partitions_of_total(*degree as u64, ClassicalType::A))
            }
            _ => None,
        }
    }
    match a {
        ComponentGroupDescriptor::Product { center, factor } => {
            let f = sym_irreps(factor)?;
            let mut out = Vec::new();
            for c in 0..center.order() {
                for p in &f {
                    out.push(Enhancement { central: c, factor: p.clone() });
                }
            }
            Some(out)
        }
        other => Some(
            sym_irreps(other)?
                .into_iter()
                .map(|p| Enhancement { central: 0, factor: p })
                .collect(),
        ),
    }
}
