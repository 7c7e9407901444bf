//! Root systems, Weyl groups and the extended Weyl groups `W = W° ⋊ π₀` of
//! pinned disconnected groups.
//!
//! Roots are integer vectors in the basis of simple roots (Bourbaki
//! numbering). A Weyl group element is stored as the permutation it induces
//! on the root set; `π₀` is a group of Dynkin diagram automorphisms acting by
//! permuting simple-root coordinates. Externally, simple roots are numbered
//! from 1; internally from 0.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::orbits::{Family, GroupLabel};
use crate::{Error, Result};

/// Full enumeration of `W°` is refused above this order (admits `E6`).
pub const WEYL_ENUMERATION_BOUND: u64 = 100_000;

/// Order of the Weyl group of an irreducible root system.
pub fn weyl_order(family: Family, rank: u32) -> u64 {
    let fact = |n: u32| (1..=n as u64).product::<u64>();
    match family {
        Family::A => fact(rank + 1),
        Family::B | Family::C => (1u64 << rank) * fact(rank),
        Family::D => {
            if rank == 0 {
                1
            } else {
                (1u64 << (rank - 1)) * fact(rank)
            }
        }
        Family::E6 => 51_840,
        Family::E7 => 2_903_040,
        Family::E8 => 696_729_600,
        Family::F4 => 1_152,
        Family::G2 => 12,
    }
}

/// Symmetric matrix of inner products of simple roots, short roots of
/// squared length 2.
fn gram_matrix(g: &GroupLabel) -> Vec<Vec<i64>> {
    let n = g.rank() as usize;
    let mut m = vec![vec![0i64; n]; n];
    let link = |m: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
        m[i][j] = v;
        m[j][i] = v;
    };
    match g.family {
        Family::A => {
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 1..n {
                link(&mut m, i - 1, i, -1);
            }
        }
        Family::B => {
            for i in 0..n {
                m[i][i] = 4;
            }
            m[n - 1][n - 1] = 2;
            for i in 1..n {
                link(&mut m, i - 1, i, -2);
            }
        }
        Family::C => {
            for i in 0..n {
                m[i][i] = 2;
            }
            m[n - 1][n - 1] = 4;
            for i in 1..n - 1 {
                link(&mut m, i - 1, i, -1);
            }
            if n >= 2 {
                link(&mut m, n - 2, n - 1, -2);
            }
        }
        Family::D => {
            for i in 0..n {
                m[i][i] = 2;
            }
            for i in 1..n - 1 {
                link(&mut m, i - 1, i, -1);
            }
            if n >= 3 {
                link(&mut m, n - 3, n - 1, -1);
            }
        }
        Family::E6 | Family::E7 | Family::E8 => {
            for i in 0..n {
                m[i][i] = 2;
            }
            link(&mut m, 0, 2, -1);
            link(&mut m, 1, 3, -1);
            for i in 2..n - 1 {
                link(&mut m, i, i + 1, -1);
            }
        }
        Family::F4 => {
            m[0][0] = 4;
            m[1][1] = 4;
            m[2][2] = 2;
            m[3][3] = 2;
            link(&mut m, 0, 1, -2);
            link(&mut m, 1, 2, -2);
            link(&mut m, 2, 3, -1);
        }
        Family::G2 => {
            m[0][0] = 2;
            m[1][1] = 6;
            link(&mut m, 0, 1, -3);
        }
    }
    m
}

/// Cartan type of one irreducible component of a root subsystem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentType {
    pub family: Family,
    pub rank: u32,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => write!(f, "{}{}", self.family, self.rank),
            other => write!(f, "{other}"),
        }
    }
}

/// A root system with its roots in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: GroupLabel,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    npos: usize,
    index: HashMap<Vec<i64>, usize>,
    /// `reflect[i][r]`: index of `s_i(root r)`.
    reflect: Vec<Vec<u16>>,
}

impl RootSystem {
    pub fn new(label: GroupLabel) -> RootSystem {
        let n = label.rank() as usize;
        let gram = gram_matrix(&label);
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[i][i]).collect())
            .collect();
        let unit = |i: usize| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v
        };
        let reflect_vec = |i: usize, b: &[i64]| {
            let pairing: i64 = (0..n).map(|j| b[j] * cartan[i][j]).sum();
            let mut out = b.to_vec();
            out[i] -= pairing;
            out
        };
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let v = unit(i);
            seen.insert(v.clone());
            queue.push_back(v);
        }
        while let Some(b) = queue.pop_front() {
            for i in 0..n {
                let c = reflect_vec(i, &b);
                if seen.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
        let mut pos: Vec<Vec<i64>> = seen.into_iter().filter(|v| v.iter().all(|&c| c >= 0)).collect();
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|v| v.iter().map(|c| -c).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(k, v)| (v.clone(), k)).collect();
        let reflect = (0..n)
            .map(|i| roots.iter().map(|b| index[&reflect_vec(i, b)] as u16).collect())
            .collect();
        RootSystem { label, gram, cartan, roots, npos, index, reflect }
    }

    pub fn label(&self) -> GroupLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `C[i][j] = ⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn is_positive(&self, r: usize) -> bool {
        r < self.npos
    }

    /// Root index of `α_i` (0-based `i`); simple roots come first.
    pub fn simple(&self, i: usize) -> usize {
        debug_assert!(self.roots[i].iter().enumerate().all(|(j, &c)| c == i64::from(i == j)));
        i
    }

    pub fn root_index(&self, v: &[i64]) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn negate(&self, r: usize) -> usize {
        if r < self.npos {
            r + self.npos
        } else {
            r - self.npos
        }
    }

    pub fn reflection_table(&self, i: usize) -> &[u16] {
        &self.reflect[i]
    }

    pub fn is_short(&self, i: usize) -> bool {
        let min = (0..self.rank()).map(|k| self.gram[k][k]).min().unwrap_or(2);
        self.gram[i][i] == min
    }

    /// Roots of the standard Levi `Φ_X`: those supported on `X`.
    pub fn levi_roots(&self, x: &[usize]) -> Vec<usize> {
        let mut mask = vec![false; self.rank()];
        for &i in x {
            mask[i] = true;
        }
        (0..self.num_roots())
            .filter(|&r| self.roots[r].iter().enumerate().all(|(j, &c)| c == 0 || mask[j]))
            .collect()
    }

    /// Cartan types of the irreducible components of the subsystem on `x`.
    pub fn component_types(&self, x: &[usize]) -> Vec<ComponentType> {
        let xs: BTreeSet<usize> = x.iter().copied().collect();
        let mut left = xs.clone();
        let mut out = Vec::new();
        while let Some(&start) = left.iter().next() {
            let mut comp = vec![start];
            left.remove(&start);
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                let nbrs: Vec<usize> =
                    left.iter().copied().filter(|&j| self.cartan[i][j] != 0).collect();
                for j in nbrs {
                    left.remove(&j);
                    comp.push(j);
                }
                k += 1;
            }
            out.push(self.classify_component(&comp));
        }
        out.sort();
        out
    }

    fn classify_component(&self, comp: &[usize]) -> ComponentType {
        let r = comp.len() as u32;
        let bond = |i: usize, j: usize| self.cartan[i][j] * self.cartan[j][i];
        let mut max_bond = 0;
        let mut degree: HashMap<usize, u32> = comp.iter().map(|&i| (i, 0)).collect();
        let mut double = None;
        for (a, &i) in comp.iter().enumerate() {
            for &j in &comp[a + 1..] {
                let b = bond(i, j);
                if b > 0 {
                    *degree.get_mut(&i).unwrap() += 1;
                    *degree.get_mut(&j).unwrap() += 1;
                    max_bond = max_bond.max(b);
                    if b == 2 {
                        double = Some((i, j));
                    }
                }
            }
        }
        let ct = |family, rank| ComponentType { family, rank };
        if max_bond == 3 {
            return ct(Family::G2, 2);
        }
        if let Some((i, j)) = double {
            if r == 4 && degree[&i] == 2 && degree[&j] == 2 {
                return ct(Family::F4, 4);
            }
            let shorts = comp.iter().filter(|&&k| self.is_short(k)).count() as u32;
            if r == 2 {
                let fam = if self.label.family == Family::C { Family::C } else { Family::B };
                return ct(fam, 2);
            }
            return if shorts == 1 { ct(Family::B, r) } else { ct(Family::C, r) };
        }
        let Some(&branch) = comp.iter().find(|&&k| degree[&k] == 3) else {
            return ct(Family::A, r);
        };
        let mut arms: Vec<u32> = Vec::new();
        for &start in comp.iter().filter(|&&k| self.cartan[branch][k] != 0 && k != branch) {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            loop {
                let next = comp
                    .iter()
                    .copied()
                    .find(|&k| k != prev && k != cur && self.cartan[cur][k] != 0);
                match next {
                    Some(nx) => {
                        prev = cur;
                        cur = nx;
                        len += 1;
                    }
                    None => break,
                }
            }
            arms.push(len);
        }
        arms.sort();
        match arms.as_slice() {
            [1, 1, _] => ct(Family::D, r),
            [1, 2, 2] => ct(Family::E6, 6),
            [1, 2, 3] => ct(Family::E7, 7),
            _ => ct(Family::E8, 8),
        }
    }

    /// Semisimple type of the standard Levi on `x`, e.g. `A1xB2`; `T` for
    /// the torus.
    pub fn subsystem_type(&self, x: &[usize]) -> String {
        type_string(&self.component_types(x))
    }

    /// `|W_X|`.
    pub fn parabolic_order(&self, x: &[usize]) -> u64 {
        self.component_types(x).iter().map(|c| weyl_order(c.family, c.rank)).product()
    }

    /// Checks and converts 1-based simple-root indices to a sorted 0-based
    /// subset.
    pub fn subset_from_one_based(&self, x: &[usize]) -> Result<Vec<usize>> {
        let mut out = BTreeSet::new();
        for &i in x {
            if i == 0 || i > self.rank() {
                return Err(Error::InvalidSubset(format!("index {i} out of range 1..={}", self.rank())));
            }
            if !out.insert(i - 1) {
                return Err(Error::InvalidSubset(format!("index {i} repeated")));
            }
        }
        Ok(out.into_iter().collect())
    }
}

pub(crate) fn type_string(types: &[ComponentType]) -> String {
    if types.is_empty() {
        return "T".into();
    }
    types.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("x")
}

/// The elements of `W°`, as root permutations, with multiplication tables
/// for the simple reflections.
#[derive(Debug)]
pub struct WeylGroup {
    nroots: usize,
    perms: Vec<u16>,
    lengths: Vec<u32>,
    /// `right[i][w]` is the index of `w s_i`.
    right: Vec<Vec<u32>>,
    /// `left[i][w]` is the index of `s_i w`.
    left: Vec<Vec<u32>>,
    inverse: Vec<u32>,
    parent: Vec<(u32, u8)>,
    index: HashMap<Vec<u16>, u32>,
}

impl WeylGroup {
    fn enumerate(rs: &RootSystem) -> Result<WeylGroup> {
        let order = rs.parabolic_order(&(0..rs.rank()).collect::<Vec<_>>());
        if order > WEYL_ENUMERATION_BOUND {
            return Err(Error::BoundExceeded {
                order: order as usize,
                bound: WEYL_ENUMERATION_BOUND as usize,
            });
        }
        let nroots = rs.num_roots();
        let n = rs.rank();
        let mut perms: Vec<u16> = (0..nroots as u16).collect();
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        index.insert(perms.clone(), 0);
        let mut lengths = vec![0u32];
        let mut parent = vec![(0u32, u8::MAX)];
        let mut right: Vec<Vec<u32>> = vec![Vec::with_capacity(order as usize); n];
        let mut w = 0usize;
        while w * nroots < perms.len() {
            for (i, r) in right.iter_mut().enumerate() {
                let refl = &rs.reflect[i];
                let p: Vec<u16> =
                    (0..nroots).map(|k| perms[w * nroots + refl[k] as usize]).collect();
                let next = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        let j = lengths.len() as u32;
                        perms.extend_from_slice(&p);
                        index.insert(p, j);
                        lengths.push(lengths[w] + 1);
                        parent.push((w as u32, i as u8));
                        j
                    }
                };
                r.push(next);
            }
            w += 1;
        }
        let size = lengths.len();
        let perm_of = |k: usize| &perms[k * nroots..(k + 1) * nroots];
        let mut left = vec![Vec::with_capacity(size); n];
        for (i, l) in left.iter_mut().enumerate() {
            let refl = &rs.reflect[i];
            for k in 0..size {
                let p: Vec<u16> = perm_of(k).iter().map(|&x| refl[x as usize]).collect();
                l.push(index[&p]);
            }
        }
        let mut inverse = Vec::with_capacity(size);
        for k in 0..size {
            let p = perm_of(k);
            let mut q = vec![0u16; nroots];
            for (a, &b) in p.iter().enumerate() {
                q[b as usize] = a as u16;
            }
            inverse.push(index[&q]);
        }
        Ok(WeylGroup { nroots, perms, lengths, right, left, inverse, parent, index })
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn perm(&self, w: usize) -> &[u16] {
        &self.perms[w * self.nroots..(w + 1) * self.nroots]
    }

    pub fn length(&self, w: usize) -> u32 {
        self.lengths[w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    pub fn right_mul_simple(&self, w: usize, i: usize) -> usize {
        self.right[i][w] as usize
    }

    pub fn left_mul_simple(&self, i: usize, w: usize) -> usize {
        self.left[i][w] as usize
    }

    pub fn lookup(&self, perm: &[u16]) -> Option<usize> {
        self.index.get(perm).map(|&k| k as usize)
    }

    /// A reduced word (0-based simple reflections) with `w = s_{a_1} ⋯ s_{a_k}`.
    pub fn reduced_word(&self, w: usize) -> Vec<usize> {
        let mut word = Vec::new();
        let mut k = w;
        while k != 0 {
            let (p, i) = self.parent[k];
            word.push(i as usize);
            k = p as usize;
        }
        word.reverse();
        word
    }

    fn compose(&self, a: usize, b: usize) -> usize {
        let pa = self.perm(a);
        let p: Vec<u16> = self.perm(b).iter().map(|&x| pa[x as usize]).collect();
        self.index[&p] as usize
    }
}

/// A subgroup of `π₀`, as a sorted list of element indices (0 = identity).
pub type Pi0Subgroup = Vec<usize>;

/// `W° ⋊ π₀` for a pinned diagram-automorphism group `π₀`.
#[derive(Debug)]
pub struct ExtendedWeylGroup {
    rs: RootSystem,
    /// Elements of `π₀` as permutations of the simple roots; index 0 is the
    /// identity.
    pi0: Vec<Vec<usize>>,
    pi0_root_perms: Vec<Vec<u16>>,
    pi0_mul: Vec<Vec<usize>>,
    pi0_inv: Vec<usize>,
    weyl: OnceLock<std::result::Result<WeylGroup, Error>>,
    conj: OnceLock<Vec<Vec<u32>>>,
}

/// An element `w·θ` of the extended group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElement {
    pub w: usize,
    pub theta: usize,
}

impl ExtendedWeylGroup {
    /// Builds `W° ⋊ π₀` where `π₀` is generated by the given permutations of
    /// the simple roots (0-based images).
    pub fn new(rs: RootSystem, generators: &[Vec<usize>]) -> Result<Self> {
        let n = rs.rank();
        for g in generators {
            check_diagram_automorphism(&rs, g)?;
        }
        let id: Vec<usize> = (0..n).collect();
        let mut pi0 = vec![id];
        let mut k = 0;
        while k < pi0.len() {
            for g in generators {
                let p: Vec<usize> = (0..n).map(|i| g[pi0[k][i]]).collect();
                if !pi0.contains(&p) {
                    pi0.push(p);
                }
            }
            k += 1;
        }
        let m = pi0.len();
        let pi0_mul: Vec<Vec<usize>> = (0..m)
            .map(|a| {
                (0..m)
                    .map(|b| {
                        let p: Vec<usize> = (0..n).map(|i| pi0[a][pi0[b][i]]).collect();
                        pi0.iter().position(|q| *q == p).unwrap()
                    })
                    .collect()
            })
            .collect();
        let pi0_inv = (0..m).map(|a| (0..m).find(|&b| pi0_mul[a][b] == 0).unwrap()).collect();
        let pi0_root_perms = pi0
            .iter()
            .map(|t| {
                rs.roots()
                    .iter()
                    .map(|v| {
                        let mut img = vec![0i64; n];
                        for (i, &c) in v.iter().enumerate() {
                            img[t[i]] = c;
                        }
                        rs.root_index(&img).expect("diagram automorphism preserves roots") as u16
                    })
                    .collect()
            })
            .collect();
        Ok(ExtendedWeylGroup {
            rs,
            pi0,
            pi0_root_perms,
            pi0_mul,
            pi0_inv,
            weyl: OnceLock::new(),
            conj: OnceLock::new(),
        })
    }

    pub fn connected(rs: RootSystem) -> Self {
        ExtendedWeylGroup::new(rs, &[]).expect("no generators")
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn pi0(&self) -> &[Vec<usize>] {
        &self.pi0
    }

    pub fn pi0_order(&self) -> usize {
        self.pi0.len()
    }

    pub fn pi0_mul(&self, a: usize, b: usize) -> usize {
        self.pi0_mul[a][b]
    }

    pub fn pi0_inverse(&self, a: usize) -> usize {
        self.pi0_inv[a]
    }

    /// `W°`, enumerated on first use.
    pub fn weyl(&self) -> Result<&WeylGroup> {
        self.weyl
            .get_or_init(|| WeylGroup::enumerate(&self.rs))
            .as_ref()
            .map_err(|e| e.clone())
    }

    /// `conj[t][w]` is the index of `θ_t w θ_t⁻¹`.
    fn conj_table(&self) -> Result<&Vec<Vec<u32>>> {
        let weyl = self.weyl()?;
        Ok(self.conj.get_or_init(|| {
            (0..self.pi0.len())
                .map(|t| {
                    let pt = &self.pi0_root_perms[t];
                    let pinv = &self.pi0_root_perms[self.pi0_inv[t]];
                    (0..weyl.order())
                        .map(|w| {
                            let pw = weyl.perm(w);
                            let q: Vec<u16> = (0..pw.len())
                                .map(|r| pt[pw[pinv[r] as usize] as usize])
                                .collect();
                            weyl.lookup(&q).unwrap() as u32
                        })
                        .collect()
                })
                .collect()
        }))
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.weyl()?.order() * self.pi0.len())
    }

    /// Root permutation of `w·θ`.
    pub fn root_perm(&self, g: ExtElement) -> Result<Vec<u16>> {
        let pw = self.weyl()?.perm(g.w);
        let pt = &self.pi0_root_perms[g.theta];
        Ok(pt.iter().map(|&r| pw[r as usize]).collect())
    }

    /// `(w₁θ₁)(w₂θ₂) = w₁ (θ₁ w₂ θ₁⁻¹) · θ₁θ₂`.
    pub fn mul(&self, a: ExtElement, b: ExtElement) -> Result<ExtElement> {
        let weyl = self.weyl()?;
        let conj = self.conj_table()?;
        let w = weyl.compose(a.w, conj[a.theta][b.w] as usize);
        Ok(ExtElement { w, theta: self.pi0_mul[a.theta][b.theta] })
    }

    pub fn inverse(&self, a: ExtElement) -> Result<ExtElement> {
        let weyl = self.weyl()?;
        let conj = self.conj_table()?;
        let ti = self.pi0_inv[a.theta];
        Ok(ExtElement { w: conj[ti][weyl.inverse(a.w)] as usize, theta: ti })
    }

    fn validate_subgroup(&self, omega: &[usize]) -> Result<()> {
        if omega.is_empty() || omega[0] != 0 {
            return Err(Error::IncompatiblePairs("omega must contain the identity".into()));
        }
        for &a in omega {
            if a >= self.pi0.len() {
                return Err(Error::IncompatiblePairs(format!("pi0 index {a} out of range")));
            }
            for &b in omega {
                if !omega.contains(&self.pi0_mul[a][b]) {
                    return Err(Error::IncompatiblePairs("omega is not a subgroup".into()));
                }
            }
        }
        Ok(())
    }

    fn stabilizes(&self, t: usize, x: &[usize]) -> bool {
        x.iter().all(|i| x.contains(&self.pi0[t][*i]))
    }

    /// All subgroups of `π₀`, each sorted, in increasing order of size.
    pub fn pi0_subgroups(&self) -> Vec<Pi0Subgroup> {
        let m = self.pi0.len();
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for mask in 0u64..(1u64 << (m - 1)) {
            let mut s = vec![0usize];
            s.extend((1..m).filter(|&k| mask >> (k - 1) & 1 == 1));
            let closed = s.iter().all(|&a| s.iter().all(|&b| s.contains(&self.pi0_mul[a][b])));
            if closed {
                out.insert(s);
            }
        }
        let mut v: Vec<_> = out.into_iter().collect();
        v.sort_by_key(|s| (s.len(), s.clone()));
        v
    }

    /// All pairs `(X, Ω)` with `Ω ≤ Stab_{π₀}(X)`.
    pub fn enumerate_parabolic_pairs(&self) -> Vec<ParabolicPair> {
        let n = self.rs.rank();
        let subgroups = self.pi0_subgroups();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            for sg in &subgroups {
                if sg.iter().all(|&t| self.stabilizes(t, &x)) {
                    out.push(ParabolicPair { x: x.clone(), omega: sg.clone() });
                }
            }
        }
        out
    }

    /// `θ·(X, Ω) = (θX, θΩθ⁻¹)`.
    pub fn act_on_pair(&self, t: usize, p: &ParabolicPair) -> ParabolicPair {
        let mut x: Vec<usize> = p.x.iter().map(|&i| self.pi0[t][i]).collect();
        x.sort();
        let ti = self.pi0_inv[t];
        let mut omega: Vec<usize> =
            p.omega.iter().map(|&a| self.pi0_mul[self.pi0_mul[t][a]][ti]).collect();
        omega.sort();
        ParabolicPair { x, omega }
    }

    /// `π₀`-conjugacy classes of parabolic pairs.
    pub fn parabolic_pair_classes(&self) -> Vec<Vec<ParabolicPair>> {
        let mut seen: BTreeSet<ParabolicPair> = BTreeSet::new();
        let mut out = Vec::new();
        for p in self.enumerate_parabolic_pairs() {
            if seen.contains(&p) {
                continue;
            }
            let class: BTreeSet<ParabolicPair> =
                (0..self.pi0.len()).map(|t| self.act_on_pair(t, &p)).collect();
            seen.extend(class.iter().cloned());
            out.push(class.into_iter().collect());
        }
        out
    }

    /// Checks a pair: `X` valid, `Ω` a subgroup stabilizing `X`.
    pub fn check_pair(&self, p: &ParabolicPair) -> Result<()> {
        if p.x.iter().any(|&i| i >= self.rs.rank()) || p.x.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset(format!("{:?}", p.x)));
        }
        self.validate_subgroup(&p.omega)?;
        if !p.omega.iter().all(|&t| self.stabilizes(t, &p.x)) {
            return Err(Error::IncompatiblePairs("omega does not stabilize X".into()));
        }
        Ok(())
    }

    /// `W°`-conjugacy classes of subsets of simple roots. Each class is
    /// sorted; classes are listed by their minimal member.
    pub fn levi_classes(&self) -> Result<Vec<Vec<Vec<usize>>>> {
        let weyl = self.weyl()?;
        let n = self.rs.rank();
        let simple_of_root: HashMap<usize, usize> = (0..n).map(|i| (self.rs.simple(i), i)).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            if seen.contains(&x) {
                continue;
            }
            let mut class: BTreeSet<Vec<usize>> = BTreeSet::new();
            for w in 0..weyl.order() {
                let p = weyl.perm(w);
                let img: Option<Vec<usize>> = x
                    .iter()
                    .map(|&i| simple_of_root.get(&(p[self.rs.simple(i)] as usize)).copied())
                    .collect();
                if let Some(mut y) = img {
                    y.sort();
                    class.insert(y);
                }
            }
            seen.extend(class.iter().cloned());
            out.push(class.into_iter().collect());
        }
        Ok(out)
    }

    /// The quasi-Levi `Z_G(Z°(L°))` attached to the standard Levi on `x`:
    /// `Ω` consists of the `θ` for which some `w·θ` fixes every fundamental
    /// coweight `ϖ_j^∨`, `j ∉ X`. The label uses the minimal `W°`-conjugate of
    /// `X`.
    pub fn quasi_levi(&self, x: &[usize]) -> Result<LeviLabel> {
        let weyl = self.weyl()?;
        let n = self.rs.rank();
        let classes = self.levi_classes()?;
        let mut xs = x.to_vec();
        xs.sort();
        let canon = classes
            .iter()
            .find(|c| c.contains(&xs))
            .map(|c| c[0].clone())
            .ok_or_else(|| Error::InvalidSubset(format!("{x:?}")))?;
        let outside: Vec<usize> = (0..n).filter(|j| !canon.contains(j)).collect();
        let mut omega = Vec::new();
        for t in 0..self.pi0.len() {
            let found = (0..weyl.order()).any(|w| {
                // g fixes ϖ_j^∨ iff the α_j-coordinate of g⁻¹α_i is δ_ij.
                let ginv = match self.inverse(ExtElement { w, theta: t }) {
                    Ok(g) => g,
                    Err(_) => return false,
                };
                let p = self.root_perm(ginv).unwrap();
                (0..n).all(|i| {
                    let img = &self.rs.roots()[p[self.rs.simple(i)] as usize];
                    outside.iter().all(|&j| img[j] == i64::from(i == j))
                })
            });
            if found {
                omega.push(t);
            }
        }
        Ok(self.levi_label(&canon, &omega))
    }

    /// One quasi-Levi per `W°`-class of Levi subsets.
    pub fn quasi_levis(&self) -> Result<Vec<LeviLabel>> {
        self.levi_classes()?.iter().map(|c| self.quasi_levi(&c[0])).collect()
    }

    pub fn levi_label(&self, x: &[usize], omega: &[usize]) -> LeviLabel {
        LeviLabel {
            x: x.iter().map(|i| i + 1).collect(),
            omega: omega.iter().map(|&t| self.pi0[t].iter().map(|i| i + 1).collect()).collect(),
            semisimple_type: self.rs.subsystem_type(x),
        }
    }

    /// Minimal generating set of a subgroup of `π₀` (as 1-based
    /// permutations).
    pub fn subgroup_generators(&self, omega: &[usize]) -> Vec<Vec<usize>> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span: BTreeSet<usize> = [0].into_iter().collect();
        for &a in omega {
            if span.contains(&a) {
                continue;
            }
            gens.push(a);
            let mut frontier: Vec<usize> = span.iter().copied().collect();
            while let Some(s) = frontier.pop() {
                for &g in &gens {
                    let p = self.pi0_mul[s][g];
                    if span.insert(p) {
                        frontier.push(p);
                    }
                }
            }
        }
        gens.iter().map(|&t| self.pi0[t].iter().map(|i| i + 1).collect()).collect()
    }

    /// Subgroup generated by 1-based simple-root permutations.
    pub fn subgroup_from_generators(&self, gens: &[Vec<usize>]) -> Result<Pi0Subgroup> {
        let mut idx = Vec::new();
        for g in gens {
            let p: Vec<usize> = g.iter().map(|i| i.wrapping_sub(1)).collect();
            let t = self
                .pi0
                .iter()
                .position(|q| *q == p)
                .ok_or_else(|| Error::InvalidAutomorphism(format!("{g:?} is not in pi0")))?;
            idx.push(t);
        }
        let mut span: BTreeSet<usize> = [0].into_iter().collect();
        let mut frontier = vec![0usize];
        while let Some(s) = frontier.pop() {
            for &g in &idx {
                let p = self.pi0_mul[s][g];
                if span.insert(p) {
                    frontier.push(p);
                }
            }
        }
        Ok(span.into_iter().collect())
    }

    pub fn pair_json(&self, p: &ParabolicPair) -> ParabolicPairJson {
        ParabolicPairJson {
            x: p.x.iter().map(|i| i + 1).collect(),
            omega: self.subgroup_generators(&p.omega),
        }
    }

    pub fn pair_from_json(&self, j: &ParabolicPairJson) -> Result<ParabolicPair> {
        let x = self.rs.subset_from_one_based(&j.x)?;
        let omega = self.subgroup_from_generators(&j.omega)?;
        let p = ParabolicPair { x, omega };
        self.check_pair(&p)?;
        Ok(p)
    }

    fn parabolic_membership(&self, x: &[usize]) -> Result<Vec<bool>> {
        let weyl = self.weyl()?;
        let mut mask = vec![false; weyl.order()];
        mask[0] = true;
        let mut stack = vec![0usize];
        while let Some(w) = stack.pop() {
            for &i in x {
                let v = weyl.right_mul_simple(w, i);
                if !mask[v] {
                    mask[v] = true;
                    stack.push(v);
                }
            }
        }
        Ok(mask)
    }

    /// `rank + |Φ_Q| + |Φ_P| − |Φ_Q ∩ gΦ_P|` with `Φ_P = Φ_L ∪ Φ⁺`.
    pub fn dim_qwp(&self, x_m: &[usize], g: ExtElement, x_l: &[usize]) -> Result<u64> {
        let rs = &self.rs;
        let phi_q = self.parabolic_roots(x_m);
        let phi_p = self.parabolic_roots(x_l);
        let perm = self.root_perm(g)?;
        let inter = (0..phi_p.len()).filter(|&r| phi_p[r] && phi_q[perm[r] as usize]).count();
        let nq = phi_q.iter().filter(|&&b| b).count();
        let np = phi_p.iter().filter(|&&b| b).count();
        Ok((rs.rank() + nq + np - inter) as u64)
    }

    fn parabolic_roots(&self, x: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.rs.num_roots()];
        for r in 0..self.rs.num_positive() {
            mask[r] = true;
        }
        for r in self.rs.levi_roots(x) {
            mask[r] = true;
        }
        mask
    }

    fn levi_mask(&self, x: &[usize]) -> Vec<bool> {
        let mut mask = vec![false; self.rs.num_roots()];
        for r in self.rs.levi_roots(x) {
            mask[r] = true;
        }
        mask
    }

    /// Representatives of `W_Q \ W / W_P` for `Q = (X_M, Ω_M)` and
    /// `P = (X_L, Ω_L)`, listed by nondecreasing `dim(QwP)`.
    pub fn double_cosets(&self, q: &ParabolicPair, p: &ParabolicPair) -> Result<Vec<DoubleCoset>> {
        self.check_pair(q)?;
        self.check_pair(p)?;
        let weyl = self.weyl()?;
        let mut reps: Vec<(ExtElement, u64)> = Vec::new();
        if q.omega.len() == 1 && p.omega.len() == 1 {
            let rs = &self.rs;
            for t in 0..self.pi0.len() {
                let tl: Vec<usize> = p.x.iter().map(|&i| self.pi0[t][i]).collect();
                let mut tl_sorted = tl.clone();
                tl_sorted.sort();
                for w in 0..weyl.order() {
                    let pw = weyl.perm(w);
                    let pinv = weyl.perm(weyl.inverse(w));
                    let left_ok = q.x.iter().all(|&s| rs.is_positive(pinv[rs.simple(s)] as usize));
                    let right_ok = tl.iter().all(|&s| rs.is_positive(pw[rs.simple(s)] as usize));
                    if left_ok && right_ok {
                        let g = ExtElement { w, theta: t };
                        let meet: Vec<usize> = q
                            .x
                            .iter()
                            .copied()
                            .filter(|&s| {
                                let r = rs.simple(s);
                                tl.iter().any(|&u| pw[rs.simple(u)] as usize == r)
                            })
                            .collect();
                        let size = rs.parabolic_order(&q.x) * rs.parabolic_order(&tl_sorted)
                            / rs.parabolic_order(&meet);
                        reps.push((g, size));
                    }
                }
            }
        } else {
            reps = self.double_cosets_brute(q, p)?;
        }
        let mut out = Vec::with_capacity(reps.len());
        for (g, size) in reps {
            let dim = self.dim_qwp(&q.x, g, &p.x)?;
            out.push(DoubleCoset {
                rep: g,
                word: weyl.reduced_word(g.w).iter().map(|i| i + 1).collect(),
                theta: self.pi0[g.theta].iter().map(|i| i + 1).collect(),
                length: weyl.length(g.w),
                dim,
                size,
            });
        }
        out.sort_by_key(|d| (d.dim, d.length, d.rep.theta, d.rep.w));
        Ok(out)
    }

    fn double_cosets_brute(&self, q: &ParabolicPair, p: &ParabolicPair) -> Result<Vec<(ExtElement, u64)>> {
        let weyl = self.weyl()?;
        let conj = self.conj_table()?;
        let nw = weyl.order();
        let total = nw * self.pi0.len();
        let idx = |g: ExtElement| g.theta * nw + g.w;
        let mut class = vec![usize::MAX; total];
        let mut out = Vec::new();
        for start in 0..total {
            if class[start] != usize::MAX {
                continue;
            }
            let mut members = vec![start];
            class[start] = start;
            let mut k = 0;
            while k < members.len() {
                let e = members[k];
                let g = ExtElement { w: e % nw, theta: e / nw };
                let mut nbrs = Vec::new();
                for &i in &q.x {
                    nbrs.push(ExtElement { w: weyl.left_mul_simple(i, g.w), theta: g.theta });
                }
                for &t in &q.omega {
                    nbrs.push(ExtElement {
                        w: conj[t][g.w] as usize,
                        theta: self.pi0_mul[t][g.theta],
                    });
                }
                for &i in &p.x {
                    // w θ s_i = w s_{θ(i)} θ
                    let j = self.pi0[g.theta][i];
                    nbrs.push(ExtElement { w: weyl.right_mul_simple(g.w, j), theta: g.theta });
                }
                for &t in &p.omega {
                    nbrs.push(ExtElement { w: g.w, theta: self.pi0_mul[g.theta][t] });
                }
                for h in nbrs {
                    let hi = idx(h);
                    if class[hi] == usize::MAX {
                        class[hi] = start;
                        members.push(hi);
                    }
                }
                k += 1;
            }
            let rep = members
                .iter()
                .map(|&e| ExtElement { w: e % nw, theta: e / nw })
                .min_by_key(|g| (weyl.length(g.w), g.theta, g.w))
                .unwrap();
            out.push((rep, members.len() as u64));
        }
        Ok(out)
    }

    /// Mackey terms for `res^G_M ∘ ind^G_L`, one per double coset.
    pub fn mackey_terms(&self, p: &ParabolicPair, q: &ParabolicPair) -> Result<Vec<MackeyTerm>> {
        let cosets = self.double_cosets(q, p)?;
        let rs = &self.rs;
        let weyl = self.weyl()?;
        let phi_m = self.levi_mask(&q.x);
        let phi_l = self.levi_mask(&p.x);
        let phi_p = self.parabolic_roots(&p.x);
        let phi_q = self.parabolic_roots(&q.x);
        let member_l = self.parabolic_membership(&p.x)?;
        let member_m = self.parabolic_membership(&q.x)?;
        let mut out = Vec::with_capacity(cosets.len());
        for dc in cosets {
            let g = dc.rep;
            let perm = self.root_perm(g)?;
            let mut in_wl = vec![false; rs.num_roots()];
            let mut in_wp = vec![false; rs.num_roots()];
            for r in 0..rs.num_roots() {
                in_wl[perm[r] as usize] = phi_l[r];
                in_wp[perm[r] as usize] = phi_p[r];
            }
            let common: Vec<usize> = (0..rs.num_roots()).filter(|&r| phi_m[r] && in_wl[r]).collect();
            let par_m: Vec<usize> = (0..rs.num_roots()).filter(|&r| phi_m[r] && in_wp[r]).collect();
            let par_wl: Vec<usize> = (0..rs.num_roots()).filter(|&r| phi_q[r] && in_wl[r]).collect();
            let simple = indecomposable_positive(rs, &common);
            let simple_idx: Option<Vec<usize>> = simple
                .iter()
                .map(|&r| (0..rs.rank()).find(|&i| rs.simple(i) == r))
                .collect();
            // π₀-part of M ∩ gLg⁻¹ by brute force.
            let mut pi0_part: BTreeSet<usize> = BTreeSet::new();
            if q.omega.len() > 1 || p.omega.len() > 1 {
                let ginv = self.inverse(g)?;
                for &t in &q.omega {
                    for u in (0..weyl.order()).filter(|&u| member_m[u]) {
                        let h = self.mul(self.mul(ginv, ExtElement { w: u, theta: t })?, g)?;
                        if member_l[h.w] && p.omega.contains(&h.theta) {
                            pi0_part.insert(t);
                            break;
                        }
                    }
                }
            } else {
                pi0_part.insert(0);
            }
            let omega: Vec<usize> = pi0_part.into_iter().collect();
            let levi = match &simple_idx {
                Some(x) => {
                    let mut x = x.clone();
                    x.sort();
                    self.levi_label(&x, &omega)
                }
                None => LeviLabel {
                    x: Vec::new(),
                    omega: omega.iter().map(|&t| self.pi0[t].iter().map(|i| i + 1).collect()).collect(),
                    semisimple_type: format!("nonstandard:{}", simple.len()),
                },
            };
            out.push(MackeyTerm {
                coset: dc,
                levi_mwl: levi,
                common_roots: common.len(),
                parabolic_in_m: par_m.len(),
                parabolic_in_wl: par_wl.len(),
                common_root_list: common.iter().map(|&r| rs.roots()[r].clone()).collect(),
            });
        }
        Ok(out)
    }
}

/// Positive roots in `set` that are not sums of two positive roots of `set`.
fn indecomposable_positive(rs: &RootSystem, set: &[usize]) -> Vec<usize> {
    let members: BTreeSet<usize> = set.iter().copied().collect();
    let pos: Vec<usize> = set.iter().copied().filter(|&r| rs.is_positive(r)).collect();
    pos.iter()
        .copied()
        .filter(|&r| {
            !pos.iter().any(|&a| {
                let diff: Vec<i64> =
                    rs.roots()[r].iter().zip(&rs.roots()[a]).map(|(x, y)| x - y).collect();
                rs.root_index(&diff).is_some_and(|b| rs.is_positive(b) && members.contains(&b))
            })
        })
        .collect()
}

fn check_diagram_automorphism(rs: &RootSystem, p: &[usize]) -> Result<()> {
    let n = rs.rank();
    if p.len() != n {
        return Err(Error::InvalidAutomorphism(format!("{p:?} has wrong length")));
    }
    let mut seen = vec![false; n];
    for &i in p {
        if i >= n || seen[i] {
            return Err(Error::InvalidAutomorphism(format!("{p:?} is not a permutation")));
        }
        seen[i] = true;
    }
    let c = rs.cartan();
    for i in 0..n {
        for j in 0..n {
            if c[p[i]][p[j]] != c[i][j] {
                return Err(Error::InvalidAutomorphism(format!("{p:?} does not preserve the Cartan matrix")));
            }
        }
    }
    Ok(())
}

/// Named diagram-automorphism groups: `flip` (the order-2 symmetry of `A_n`,
/// `D_n` or `E6`) and `triality` (`S3` on the outer nodes of `D4`).
/// Generators are 0-based.
pub fn named_automorphisms(g: &GroupLabel, name: &str) -> Result<Vec<Vec<usize>>> {
    let n = g.rank() as usize;
    let id: Vec<usize> = (0..n).collect();
    match (name, g.family) {
        ("flip", Family::A) => Ok(vec![(0..n).rev().collect()]),
        ("flip", Family::D) => {
            let mut p = id;
            p.swap(n - 2, n - 1);
            Ok(vec![p])
        }
        ("flip", Family::E6) => Ok(vec![vec![5, 1, 4, 3, 2, 0]]),
        ("triality", Family::D) if n == 4 => {
            Ok(vec![vec![2, 1, 3, 0], vec![0, 1, 3, 2]])
        }
        _ => Err(Error::InvalidAutomorphism(format!("no automorphism group {name} for {g}"))),
    }
}

/// A disconnected parabolic: simple roots `X` (0-based) and `Ω ≤ Stab(X)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParabolicPair {
    pub x: Vec<usize>,
    pub omega: Pi0Subgroup,
}

impl ParabolicPair {
    pub fn connected(x: Vec<usize>) -> Self {
        ParabolicPair { x, omega: vec![0] }
    }
}

/// JSON form of a parabolic pair: 1-based indices and generating
/// permutations of `Ω`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicPairJson {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub omega: Vec<Vec<usize>>,
}

/// A Levi (or quasi-Levi) subgroup: simple roots `X` (1-based), the
/// elements of its `π₀`-part as 1-based permutations, and the Cartan type of
/// `L°`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LeviLabel {
    #[serde(rename = "X")]
    pub x: Vec<usize>,
    pub omega: Vec<Vec<usize>>,
    pub semisimple_type: String,
}

impl LeviLabel {
    /// A connected standard Levi; `x` is 1-based.
    pub fn connected(rs: &RootSystem, x: &[usize]) -> Self {
        let zero: Vec<usize> = x.iter().map(|i| i - 1).collect();
        LeviLabel {
            x: x.to_vec(),
            omega: vec![(1..=rs.rank()).collect()],
            semisimple_type: rs.subsystem_type(&zero),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubleCoset {
    #[serde(skip)]
    pub rep: ExtElement,
    /// Reduced word of the `W°` part, 1-based.
    pub word: Vec<usize>,
    /// `π₀` part as a 1-based permutation.
    pub theta: Vec<usize>,
    pub length: u32,
    pub dim: u64,
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MackeyTerm {
    #[serde(flatten)]
    pub coset: DoubleCoset,
    /// `M ∩ ʷL`.
    pub levi_mwl: LeviLabel,
    /// `|Φ_M ∩ wΦ_L|`.
    pub common_roots: usize,
    /// `|Φ_M ∩ wΦ_P|`, the roots of `M ∩ ʷP`.
    pub parabolic_in_m: usize,
    /// `|Φ_Q ∩ wΦ_L|`, the roots of `Q ∩ ʷL`.
    pub parabolic_in_wl: usize,
    #[serde(skip)]
    pub common_root_list: Vec<Vec<i64>>,
}
