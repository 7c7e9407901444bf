//! A combinatorial model of the dual Bernstein variety over a catalog of
//! cuspidal data.
//!
//! Each catalog entry describes one Levi `𝓜`: the cocharacter lattice `Λ`
//! of its unramified-twist torus, a finite group `W_M` acting on `Λ`, on a
//! set of cuspidal labels `S` (orbits of unramified twists) and on a set of
//! points lying over the labels, per-label isotropy subgroups of torsion
//! points, and 2-cocycles on point stabilizers. An inertial class is a
//! `W_M`-orbit of labels; its component is the quotient of the torus by
//! `I_s ⋊ W_s`, and its block is the twisted extended quotient of the points
//! over `s` by `W_s`.
//!
//! Catalog JSON:
//!
//! ```json
//! {
//!   "entries": [{
//!     "levi_id": "GL2xGL1",
//!     "lattice_rank": 1,
//!     "generators": [{ "matrix": [[-1]], "label_perm": [0], "point_perm": [0] }],
//!     "labels": [{
//!       "name": "s0",
//!       "central_character": "triv",
//!       "shift": null,
//!       "isotropy": { "modulus": 2, "points": [[0], [1]] },
//!       "normal_subgroup_generators": null
//!     }],
//!     "points": [{ "label": 0 }],
//!     "cocycles": [{ "base_point": 0, "modulus": 2, "table": [[0, 0], [0, 0]] }]
//!   }]
//! }
//! ```
//!
//! `matrix` acts on column vectors of `Λ`; `label_perm[i]` and
//! `point_perm[p]` are the images of label `i` and point `p`. Cocycle tables
//! are indexed by the stabilizer of the base point in `W_M`, listed in the
//! order of the elements of `W_M` (see [`weyl_elements`]). Isotropy points
//! are residues modulo `modulus` and must form a subgroup.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::extquot::{self, GroupAction, QuotientPoint, TwistedQuotientData};
use crate::projrep::{Cocycle, FiniteGroup};
use crate::{Error, Result};

/// Upper bound on `|W_M|`.
pub const WM_BOUND: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub levi_id: String,
    pub lattice_rank: usize,
    pub generators: Vec<Generator>,
    pub labels: Vec<Label>,
    pub points: Vec<CatalogPoint>,
    #[serde(default)]
    pub cocycles: Vec<BaseCocycle>,
}

/// One generator of `W_M`, acting on the lattice, the labels and the points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub matrix: Vec<Vec<i64>>,
    pub label_perm: Vec<usize>,
    pub point_perm: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Label {
    pub name: String,
    #[serde(default)]
    pub central_character: Option<String>,
    /// Opaque shift between normalized and unnormalized supports.
    #[serde(default)]
    pub shift: Option<String>,
    pub isotropy: Isotropy,
    /// Generators (indices into `generators`) of a normal subgroup of the
    /// label stabilizer.
    #[serde(default)]
    pub normal_subgroup_generators: Option<Vec<usize>>,
}

/// A finite subgroup of `(Z/modulus)^rank` of torsion points of the torus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isotropy {
    pub modulus: u32,
    pub points: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogPoint {
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseCocycle {
    pub base_point: usize,
    pub modulus: u32,
    pub table: Vec<Vec<u32>>,
}

/// An element of `W_M`: its lattice matrix (row-major) and its permutations
/// of labels and points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WElement {
    pub matrix: Vec<i64>,
    pub labels: Vec<usize>,
    pub points: Vec<usize>,
}

impl WElement {
    fn compose(&self, other: &WElement, rank: usize) -> WElement {
        let mut matrix = vec![0i64; rank * rank];
        for i in 0..rank {
            for k in 0..rank {
                let a = self.matrix[i * rank + k];
                if a != 0 {
                    for j in 0..rank {
                        matrix[i * rank + j] += a * other.matrix[k * rank + j];
                    }
                }
            }
        }
        WElement {
            matrix,
            labels: other.labels.iter().map(|&l| self.labels[l]).collect(),
            points: other.points.iter().map(|&p| self.points[p]).collect(),
        }
    }

    /// `w·t` for a torsion point modulo `n`.
    fn act_torsion(&self, t: &[u32], n: u32, rank: usize) -> Vec<u32> {
        (0..rank)
            .map(|i| {
                let s: i64 = (0..rank).map(|j| self.matrix[i * rank + j] * t[j] as i64).sum();
                s.rem_euclid(n as i64) as u32
            })
            .collect()
    }
}

/// `W_M` as a finite group together with its elements.
#[derive(Debug, Clone)]
pub struct WeylModel {
    pub group: FiniteGroup,
    pub elements: Vec<WElement>,
}

/// The elements of `W_M` in breadth-first order from the identity over the
/// generators. Cocycle tables refer to this order.
pub fn weyl_elements(entry: &CatalogEntry) -> Result<WeylModel> {
    let r = entry.lattice_rank;
    let identity = WElement {
        matrix: (0..r * r).map(|k| i64::from(k / r == k % r)).collect(),
        labels: (0..entry.labels.len()).collect(),
        points: (0..entry.points.len()).collect(),
    };
    let gens: Vec<WElement> = entry
        .generators
        .iter()
        .map(|g| WElement {
            matrix: g.matrix.iter().flatten().copied().collect(),
            labels: g.label_perm.clone(),
            points: g.point_perm.clone(),
        })
        .collect();
    let mut elements = vec![identity.clone()];
    let mut index: HashMap<WElement, usize> = HashMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(k) = queue.pop_front() {
        for g in &gens {
            let e = g.compose(&elements[k], r);
            if !index.contains_key(&e) {
                if elements.len() >= WM_BOUND {
                    return Err(Error::BoundExceeded { order: elements.len() + 1, bound: WM_BOUND });
                }
                index.insert(e.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(e);
            }
        }
    }
    let n = elements.len();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| index[&elements[a].compose(&elements[b], r)]).collect())
        .collect();
    Ok(WeylModel { group: FiniteGroup::from_table(&rows)?, elements })
}

fn is_permutation(p: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    p.len() == n && p.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
}

fn determinant(m: &[Vec<i64>]) -> i64 {
    // Bareiss fraction-free elimination.
    let n = m.len();
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        (sign * a[n - 1][n - 1]) as i64
    }
}

fn sorted_isotropy(iso: &Isotropy) -> BTreeSet<Vec<u32>> {
    iso.points.iter().cloned().collect()
}

impl CatalogEntry {
    /// Checks the shapes, that generators act by lattice automorphisms and
    /// compatibly on labels and points, that isotropy data are subgroups
    /// permuted equivariantly, and that cocycles sit on stabilizers.
    pub fn validate(&self) -> Result<WeylModel> {
        let bad = |why: String| Error::InvalidCatalog(format!("{}: {why}", self.levi_id));
        let r = self.lattice_rank;
        let nl = self.labels.len();
        let np = self.points.len();
        for (i, g) in self.generators.iter().enumerate() {
            if g.matrix.len() != r || g.matrix.iter().any(|row| row.len() != r) {
                return Err(bad(format!("generator {i} matrix is not {r}x{r}")));
            }
            if determinant(&g.matrix).abs() != 1 {
                return Err(bad(format!("generator {i} is not a lattice automorphism")));
            }
            if !is_permutation(&g.label_perm, nl) || !is_permutation(&g.point_perm, np) {
                return Err(bad(format!("generator {i} does not permute labels and points")));
            }
        }
        for (p, pt) in self.points.iter().enumerate() {
            if pt.label >= nl {
                return Err(bad(format!("point {p} has unknown label {}", pt.label)));
            }
        }
        for (i, g) in self.generators.iter().enumerate() {
            for (p, pt) in self.points.iter().enumerate() {
                if self.points[g.point_perm[p]].label != g.label_perm[pt.label] {
                    return Err(bad(format!("generator {i} moves point {p} off its label")));
                }
            }
        }
        for l in &self.labels {
            let iso = &l.isotropy;
            if iso.modulus == 0 {
                return Err(bad(format!("label {} has isotropy modulus 0", l.name)));
            }
            let set = sorted_isotropy(iso);
            if set.len() != iso.points.len()
                || iso.points.iter().any(|t| t.len() != r || t.iter().any(|&c| c >= iso.modulus))
            {
                return Err(bad(format!("label {} has malformed isotropy points", l.name)));
            }
            if !set.contains(&vec![0; r]) {
                return Err(bad(format!("isotropy of label {} omits 0", l.name)));
            }
            for a in &set {
                for b in &set {
                    let c: Vec<u32> = a.iter().zip(b).map(|(x, y)| (x + y) % iso.modulus).collect();
                    if !set.contains(&c) {
                        return Err(bad(format!("isotropy of label {} is not a subgroup", l.name)));
                    }
                }
            }
            if let Some(gens) = &l.normal_subgroup_generators {
                if gens.iter().any(|&g| g >= self.generators.len()) {
                    return Err(bad(format!("label {} names an unknown generator", l.name)));
                }
            }
        }
        let model = weyl_elements(self)?;
        for w in &model.elements {
            for (s, l) in self.labels.iter().enumerate() {
                let t = &self.labels[w.labels[s]];
                if t.isotropy.modulus != l.isotropy.modulus {
                    return Err(bad(format!("labels {} and {} have different isotropy moduli", l.name, t.name)));
                }
                let img: BTreeSet<Vec<u32>> = l
                    .isotropy
                    .points
                    .iter()
                    .map(|p| w.act_torsion(p, l.isotropy.modulus, r))
                    .collect();
                if img != sorted_isotropy(&t.isotropy) {
                    return Err(bad(format!("isotropy is not equivariant from {} to {}", l.name, t.name)));
                }
            }
        }
        let mut bases = BTreeSet::new();
        for c in &self.cocycles {
            if c.base_point >= np || !bases.insert(c.base_point) {
                return Err(bad(format!("bad or repeated cocycle base point {}", c.base_point)));
            }
            let stab = point_stabilizer(&model, c.base_point);
            if c.modulus == 0 || c.table.len() != stab.len() || c.table.iter().any(|r| r.len() != stab.len()) {
                return Err(bad(format!("cocycle at point {} does not match its stabilizer", c.base_point)));
            }
        }
        Ok(model)
    }

    pub fn label_index(&self, name: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l.name == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }
}

fn point_stabilizer(model: &WeylModel, p: usize) -> Vec<usize> {
    (0..model.elements.len()).filter(|&w| model.elements[w].points[p] == p).collect()
}

fn label_stabilizer(model: &WeylModel, s: usize) -> Vec<usize> {
    (0..model.elements.len()).filter(|&w| model.elements[w].labels[s] == s).collect()
}

/// `T / (I_s ⋊ W_s)` for a torus `T` of the given rank.
#[derive(Debug, Clone, Serialize)]
pub struct ComponentDescription {
    pub torus_rank: usize,
    pub isotropy_order: usize,
    pub stabilizer_order: usize,
    pub order: usize,
    #[serde(skip)]
    pub group: FiniteGroup,
}

/// The group `I_s ⋊ W_s` with `(t, w)(t', w') = (t + w·t', ww')`.
pub fn component_description(entry: &CatalogEntry, label: &str) -> Result<ComponentDescription> {
    let s = entry.label_index(label)?;
    let model = entry.validate()?;
    let r = entry.lattice_rank;
    let iso = &entry.labels[s].isotropy;
    let n = iso.modulus;
    let tors: Vec<Vec<u32>> = sorted_isotropy(iso).into_iter().collect();
    let tpos: HashMap<&Vec<u32>, usize> = tors.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let stab = label_stabilizer(&model, s);
    let (wsub, _) = model.group.subgroup(&stab)?;
    let (nt, nw) = (tors.len(), stab.len());
    let rows: Vec<Vec<usize>> = (0..nt * nw)
        .map(|x| {
            let (t, w) = (x / nw, x % nw);
            (0..nt * nw)
                .map(|y| {
                    let (t2, w2) = (y / nw, y % nw);
                    let moved = model.elements[stab[w]].act_torsion(&tors[t2], n, r);
                    let sum: Vec<u32> = tors[t].iter().zip(&moved).map(|(a, b)| (a + b) % n).collect();
                    tpos[&sum] * nw + wsub.mul(w, w2)
                })
                .collect()
        })
        .collect();
    let group = FiniteGroup::from_table(&rows)?;
    Ok(ComponentDescription { torus_rank: r, isotropy_order: nt, stabilizer_order: nw, order: nt * nw, group })
}

/// The stabilizer `W_s`, with elements listed by their index in `W_M`, and
/// the normal subgroup generated by the designated generators (local
/// indices), when supplied.
#[derive(Debug, Clone)]
pub struct Stabilizer {
    pub group: FiniteGroup,
    pub elements: Vec<usize>,
    pub normal: Option<Vec<usize>>,
}

pub fn stabilizer_wqt(entry: &CatalogEntry, label: &str) -> Result<Stabilizer> {
    let s = entry.label_index(label)?;
    let model = entry.validate()?;
    let elements = label_stabilizer(&model, s);
    let (group, _) = model.group.subgroup(&elements)?;
    let normal = match &entry.labels[s].normal_subgroup_generators {
        None => None,
        Some(gens) => {
            let local: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &w)| (w, i)).collect();
            // Generator k is the element reached from the identity in one step.
            let mut gl = Vec::new();
            for &k in gens {
                let e = WElement {
                    matrix: entry.generators[k].matrix.iter().flatten().copied().collect(),
                    labels: entry.generators[k].label_perm.clone(),
                    points: entry.generators[k].point_perm.clone(),
                };
                let w = model.elements.iter().position(|x| *x == e).expect("generator in closure");
                let l = *local.get(&w).ok_or_else(|| {
                    Error::InvalidCatalog(format!("generator {k} does not stabilize label {label}"))
                })?;
                gl.push(l);
            }
            let mut sub: BTreeSet<usize> = BTreeSet::from([0]);
            let mut frontier = vec![0usize];
            while let Some(a) = frontier.pop() {
                for &g in &gl {
                    let b = group.mul(a, g);
                    if sub.insert(b) {
                        frontier.push(b);
                    }
                }
            }
            for &x in &sub {
                for h in 0..group.order() {
                    if !sub.contains(&group.conj(h, x)) {
                        return Err(Error::InvalidCatalog(format!(
                            "designated subgroup for label {label} is not normal"
                        )));
                    }
                }
            }
            Some(sub.into_iter().collect())
        }
    };
    Ok(Stabilizer { group, elements, normal })
}

/// One point of a block: a catalog point with a twisted irreducible of its
/// stabilizer, and the metadata of its label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockPoint {
    pub label: String,
    pub point: usize,
    pub irrep: usize,
    pub dim: u64,
    /// All `(catalog point, irreducible)` pairs identified with this one.
    pub members: Vec<(usize, usize)>,
    pub central_character: Option<String>,
    pub shift: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InertialKey {
    pub levi_id: String,
    pub label: String,
}

impl std::fmt::Display for InertialKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}/{}", self.levi_id, self.label)
    }
}

/// The common modulus and base cocycles for the points in `pts`, with
/// tables re-indexed from `W_M`-stabilizers to `sub`-stabilizers.
fn action_and_data(
    entry: &CatalogEntry,
    model: &WeylModel,
    sub_elements: &[usize],
    pts: &[usize],
) -> Result<(GroupAction, TwistedQuotientData)> {
    let (sub, _) = model.group.subgroup(sub_elements)?;
    let ppos: HashMap<usize, usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let table: Vec<Vec<usize>> = sub_elements
        .iter()
        .map(|&w| pts.iter().map(|&p| ppos[&model.elements[w].points[p]]).collect())
        .collect();
    let action = GroupAction::new(sub, &table)?;
    let mut modulus = 1u32;
    let mut bases = Vec::new();
    for c in &entry.cocycles {
        if let Some(&x) = ppos.get(&c.base_point) {
            // The W_M-stabilizer of a point fixes its label, so it lies in
            // `sub`; both are sorted by W_M index, so tables carry over.
            modulus = num_integer::lcm(modulus, c.modulus);
            bases.push((x, Cocycle { modulus: c.modulus, table: c.table.clone() }));
        }
    }
    let data = TwistedQuotientData::from_base_points(&action, modulus, &bases)?;
    Ok((action, data))
}

fn to_block_points(entry: &CatalogEntry, pts: &[usize], q: Vec<QuotientPoint>) -> Vec<BlockPoint> {
    q.into_iter()
        .map(|qp| {
            let point = pts[qp.point];
            let label = &entry.labels[entry.points[point].label];
            BlockPoint {
                label: label.name.clone(),
                point,
                irrep: qp.irrep,
                dim: qp.dim,
                members: qp.members.iter().map(|&(x, j)| (pts[x], j)).collect(),
                central_character: label.central_character.clone(),
                shift: label.shift.clone(),
            }
        })
        .collect()
}

/// The twisted extended quotient of the points over `label` by `W_s`.
pub fn assemble_block(entry: &CatalogEntry, label: &str) -> Result<Vec<BlockPoint>> {
    let s = entry.label_index(label)?;
    let model = entry.validate()?;
    let stab = label_stabilizer(&model, s);
    let pts: Vec<usize> = (0..entry.points.len()).filter(|&p| entry.points[p].label == s).collect();
    if pts.is_empty() {
        return Ok(Vec::new());
    }
    let (action, data) = action_and_data(entry, &model, &stab, &pts)?;
    Ok(to_block_points(entry, &pts, extquot::build(&action, &data)?))
}

/// Representatives of the `W_M`-orbits on labels: the least label index in
/// each orbit.
fn label_orbit_reps(model: &WeylModel, nlabels: usize) -> Vec<usize> {
    (0..nlabels)
        .filter(|&s| model.elements.iter().all(|w| w.labels[s] >= s))
        .collect()
}

/// All blocks, keyed by Levi and the name of the representative label of
/// each inertial class.
pub fn assemble_all(catalog: &Catalog) -> Result<BTreeMap<InertialKey, Vec<BlockPoint>>> {
    let mut out = BTreeMap::new();
    for entry in &catalog.entries {
        let model = entry.validate()?;
        for s in label_orbit_reps(&model, entry.labels.len()) {
            let key = InertialKey { levi_id: entry.levi_id.clone(), label: entry.labels[s].name.clone() };
            if out.contains_key(&key) {
                return Err(Error::DuplicateKey(key.to_string()));
            }
            let block = assemble_block(entry, &entry.labels[s].name)?;
            out.insert(key, block);
        }
    }
    Ok(out)
}

/// The quotient of all points of an entry by `W_M`, computed in two steps
/// over the label fibers.
pub fn assemble_by_levi(entry: &CatalogEntry) -> Result<Vec<BlockPoint>> {
    let model = entry.validate()?;
    let all: Vec<usize> = (0..model.elements.len()).collect();
    let pts: Vec<usize> = (0..entry.points.len()).collect();
    if pts.is_empty() {
        return Ok(Vec::new());
    }
    let (action, data) = action_and_data(entry, &model, &all, &pts)?;
    let blocks: Vec<Vec<usize>> = (0..entry.labels.len())
        .map(|s| pts.iter().copied().filter(|&p| entry.points[p].label == s).collect::<Vec<_>>())
        .filter(|b| !b.is_empty())
        .collect();
    Ok(to_block_points(entry, &pts, extquot::two_step_quotient(&action, &blocks, &data)?))
}

/// The same quotient computed directly.
pub fn assemble_levi_direct(entry: &CatalogEntry) -> Result<Vec<BlockPoint>> {
    let model = entry.validate()?;
    let all: Vec<usize> = (0..model.elements.len()).collect();
    let pts: Vec<usize> = (0..entry.points.len()).collect();
    if pts.is_empty() {
        return Ok(Vec::new());
    }
    let (action, data) = action_and_data(entry, &model, &all, &pts)?;
    Ok(to_block_points(entry, &pts, extquot::build(&action, &data)?))
}
