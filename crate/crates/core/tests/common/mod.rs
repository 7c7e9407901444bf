//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the algorithms under test: Weyl groups are built as
//! integer matrix groups from Cartan matrices, double cosets are found by
//! exhaustive orbit search, and counting problems are solved by direct
//! enumeration.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use springer_core::bernstein::{self, Catalog, CatalogEntry, CatalogPoint, Generator, Isotropy, Label};
use springer_core::extquot::{GroupAction, TwistedQuotientData};
use springer_core::projrep::{coboundary_twist, Cocycle, FiniteGroup};

// ---------------------------------------------------------------------------
// Arithmetic

/// Totient by counting residues coprime to `n`.
pub fn totient_by_count(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Partitions of `n` (nonincreasing), by recursion on the largest part.
pub fn all_partitions(n: u64) -> Vec<Vec<u64>> {
    fn rec(n: u64, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Compositions of `n` (ordered, positive parts).
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Number of nonnegative integer matrices with the given row and column
/// sums.
pub fn contingency_count(rows: &[usize], cols: &[usize]) -> u64 {
    fn fill_row(r: usize, j: usize, left: usize, cols: &mut Vec<usize>, rows: &[usize]) -> u64 {
        if j == cols.len() {
            return if left == 0 { next_row(r + 1, cols, rows) } else { 0 };
        }
        let mut total = 0;
        for v in 0..=left.min(cols[j]) {
            cols[j] -= v;
            total += fill_row(r, j + 1, left - v, cols, rows);
            cols[j] += v;
        }
        total
    }
    fn next_row(r: usize, cols: &mut Vec<usize>, rows: &[usize]) -> u64 {
        if r == rows.len() {
            return u64::from(cols.iter().all(|&c| c == 0));
        }
        fill_row(r, 0, rows[r], cols, rows)
    }
    next_row(0, &mut cols.to_vec(), rows)
}

// ---------------------------------------------------------------------------
// Weyl groups as matrix groups

/// `W° ⋊ Θ` acting on the root lattice in simple-root coordinates, built
/// from a Cartan matrix and simple-root permutations.
pub struct MatrixWeyl {
    pub n: usize,
    pub roots: Vec<Vec<i64>>,
    pub elements: Vec<Vec<i64>>,
    pub index: HashMap<Vec<i64>, usize>,
    pub reflections: Vec<Vec<i64>>,
}

pub fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    c[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    c
}

pub fn mat_vec(a: &[i64], v: &[i64], n: usize) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect()
}

/// `e_i ↦ e_{p(i)}`.
pub fn perm_matrix(p: &[usize]) -> Vec<i64> {
    let n = p.len();
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[p[i] * n + i] = 1;
    }
    m
}

pub fn identity(n: usize) -> Vec<i64> {
    (0..n * n).map(|k| i64::from(k / n == k % n)).collect()
}

impl MatrixWeyl {
    /// `s_i(v) = v − (Σ_j A[i][j] v_j) e_i`, together with the given
    /// permutations of the simple roots.
    pub fn new(cartan: &[Vec<i64>], pi0_gens: &[Vec<usize>]) -> Self {
        let n = cartan.len();
        let reflections: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut m = identity(n);
                for j in 0..n {
                    m[i * n + j] -= cartan[i][j];
                }
                m
            })
            .collect();
        let mut gens = reflections.clone();
        gens.extend(pi0_gens.iter().map(|p| perm_matrix(p)));
        let id = identity(n);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in &gens {
                let e = mat_mul(g, &elements[k], n);
                if !index.contains_key(&e) {
                    index.insert(e.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(e);
                }
            }
        }
        let mut roots: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut frontier: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        while let Some(r) = frontier.pop() {
            if roots.insert(r.clone()) {
                for s in &reflections {
                    frontier.push(mat_vec(s, &r, n));
                }
            }
        }
        MatrixWeyl { n, roots: roots.into_iter().collect(), elements, index, reflections }
    }

    pub fn num_positive(&self) -> usize {
        self.roots.iter().filter(|r| r.iter().all(|&c| c >= 0)).count()
    }

    /// Positive roots sent to negative roots.
    pub fn length(&self, e: usize) -> usize {
        let m = &self.elements[e];
        self.roots
            .iter()
            .filter(|r| r.iter().all(|&c| c >= 0))
            .filter(|r| mat_vec(m, r, self.n).iter().all(|&c| c <= 0))
            .count()
    }

    /// Matrix of `s_{w₁} ⋯ s_{w_k} · θ` for a 1-based word and a 1-based
    /// permutation.
    pub fn element_of(&self, word: &[usize], theta: &[usize]) -> usize {
        let mut m = identity(self.n);
        for &i in word {
            m = mat_mul(&m, &self.reflections[i - 1], self.n);
        }
        let t: Vec<usize> = theta.iter().map(|i| i - 1).collect();
        m = mat_mul(&m, &perm_matrix(&t), self.n);
        self.index[&m]
    }

    /// Double cosets `⟨Q⟩ \ G / ⟨P⟩` for generating matrices of the two
    /// subgroups; returns the coset id of every element.
    pub fn double_cosets(&self, left: &[Vec<i64>], right: &[Vec<i64>]) -> (Vec<usize>, usize) {
        let total = self.elements.len();
        let mut id = vec![usize::MAX; total];
        let mut count = 0;
        for start in 0..total {
            if id[start] != usize::MAX {
                continue;
            }
            id[start] = count;
            let mut stack = vec![start];
            while let Some(e) = stack.pop() {
                let m = &self.elements[e];
                let nbrs = left
                    .iter()
                    .map(|g| mat_mul(g, m, self.n))
                    .chain(right.iter().map(|g| mat_mul(m, g, self.n)));
                for x in nbrs {
                    let k = self.index[&x];
                    if id[k] == usize::MAX {
                        id[k] = count;
                        stack.push(k);
                    }
                }
            }
            count += 1;
        }
        (id, count)
    }

    /// Generators of the parabolic `⟨s_i : i ∈ x⟩ · Θ'` (0-based `x`).
    pub fn parabolic_gens(&self, x: &[usize], thetas: &[Vec<usize>]) -> Vec<Vec<i64>> {
        let mut g: Vec<Vec<i64>> = x.iter().map(|&i| self.reflections[i].clone()).collect();
        g.extend(thetas.iter().map(|p| perm_matrix(p)));
        g
    }

    /// Roots whose support lies in `x` (0-based).
    pub fn subsystem(&self, x: &[usize]) -> BTreeSet<Vec<i64>> {
        self.roots
            .iter()
            .filter(|r| r.iter().enumerate().all(|(j, &c)| c == 0 || x.contains(&j)))
            .cloned()
            .collect()
    }
}

/// Number of `W`-classes of subsets of simple roots, two subsets being
/// identified when some element of `W` carries one subsystem onto the other.
pub fn levi_class_count(w: &MatrixWeyl) -> usize {
    let n = w.n;
    let mut seen: BTreeSet<BTreeSet<Vec<i64>>> = BTreeSet::new();
    let mut classes = 0;
    for mask in 0u32..(1 << n) {
        let x: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let sub = w.subsystem(&x);
        if seen.contains(&sub) {
            continue;
        }
        classes += 1;
        for m in &w.elements {
            let img: BTreeSet<Vec<i64>> = sub.iter().map(|r| mat_vec(m, r, n)).collect();
            seen.insert(img);
        }
    }
    classes
}

// ---------------------------------------------------------------------------
// Finite groups and cocycles

/// The left regular permutation representation of a multiplication rule.
pub fn group_from_rule(n: usize, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect();
    FiniteGroup::from_table(&rows).expect("valid rule")
}

pub fn symmetric(n: usize) -> FiniteGroup {
    let mut cycle: Vec<usize> = (1..n).collect();
    cycle.push(0);
    let mut swap: Vec<usize> = (0..n).collect();
    swap.swap(0, 1);
    FiniteGroup::from_permutations(&[swap, cycle]).unwrap().0
}

pub fn alternating4() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap().0
}

pub fn dihedral(n: usize) -> FiniteGroup {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(&[rot, refl]).unwrap().0
}

/// Quaternion group: element `4s + k` is `±{1, i, j, k}[k]`.
pub fn quaternion() -> FiniteGroup {
    // Products of units: (k1, k2) -> (sign, k).
    let table = [[(0, 0), (0, 1), (0, 2), (0, 3)], [(0, 1), (1, 0), (0, 3), (1, 2)], [(0, 2), (1, 3), (1, 0), (0, 1)], [(0, 3), (0, 2), (1, 1), (1, 0)]];
    group_from_rule(8, |a, b| {
        let (s, k) = table[a % 4][b % 4];
        ((a / 4 + b / 4 + s) % 2) * 4 + k
    })
}

/// Invertible 2×2 matrices over `F_3` (or those of determinant 1), with the
/// central element `−I`.
pub fn gl23(special: bool) -> (FiniteGroup, usize) {
    let mut mats = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    let det = (a * d + 9 - b * c) % 3;
                    if det != 0 && (!special || det == 1) {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let id = mats.iter().position(|m| *m == [1, 0, 0, 1]).unwrap();
    mats.swap(0, id);
    let index: HashMap<[usize; 4], usize> = mats.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mul = |x: [usize; 4], y: [usize; 4]| {
        [
            (x[0] * y[0] + x[1] * y[2]) % 3,
            (x[0] * y[1] + x[1] * y[3]) % 3,
            (x[2] * y[0] + x[3] * y[2]) % 3,
            (x[2] * y[1] + x[3] * y[3]) % 3,
        ]
    };
    let g = group_from_rule(mats.len(), |a, b| index[&mul(mats[a], mats[b])]);
    (g, index[&[2, 0, 0, 2]])
}

/// `E / ⟨z⟩` for a central involution `z`, with the cocycle of the
/// extension for the section "least element of each coset".
pub fn central_quotient(e: &FiniteGroup, z: usize) -> (FiniteGroup, Cocycle) {
    let n = e.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if coset_of[a] == usize::MAX {
            coset_of[a] = reps.len();
            coset_of[e.mul(a, z)] = reps.len();
            reps.push(a);
        }
    }
    let m = reps.len();
    let rows: Vec<Vec<usize>> =
        (0..m).map(|a| (0..m).map(|b| coset_of[e.mul(reps[a], reps[b])]).collect()).collect();
    let table = (0..m)
        .map(|a| (0..m).map(|b| u32::from(e.mul(reps[a], reps[b]) != reps[rows[a][b]])).collect())
        .collect();
    (FiniteGroup::from_table(&rows).unwrap(), Cocycle { modulus: 2, table })
}

/// `κ((a₁, b₁), (a₂, b₂)) = a₁ b₂` on `Z/p × Z/q` with values in `Z/gcd`.
pub fn bilinear_cocycle(p: usize, q: usize) -> Cocycle {
    let m = gcd(p as u64, q as u64) as u32;
    let n = p * q;
    Cocycle {
        modulus: m.max(1),
        table: (0..n)
            .map(|x| (0..n).map(|y| ((x / q) * (y % q)) as u32 % m.max(1)).collect())
            .collect(),
    }
}

/// Groups of order at most 48 with the cocycles stored for them.
pub fn corpus() -> Vec<(String, FiniteGroup, Vec<Cocycle>)> {
    let mut out: Vec<(String, FiniteGroup, Vec<Cocycle>)> = Vec::new();
    for n in [1, 2, 3, 4, 5, 6, 7, 8, 12] {
        let g = FiniteGroup::cyclic(n);
        out.push((format!("Z{n}"), g, vec![Cocycle::trivial(n, 1)]));
    }
    for (p, q) in [(2, 2), (2, 4), (4, 4), (3, 3), (2, 6), (6, 6)] {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(p), &FiniteGroup::cyclic(q));
        let n = p * q;
        out.push((format!("Z{p}xZ{q}"), g, vec![Cocycle::trivial(n, 1), bilinear_cocycle(p, q)]));
    }
    let k = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let z2_4 = FiniteGroup::direct_product(&k, &k);
    // Symplectic form on (Z/2)^4 = (Z/2)^2 × (Z/2)^2 pairing the two factors.
    let sym4 = Cocycle {
        modulus: 2,
        table: (0..16)
            .map(|x| {
                (0..16)
                    .map(|y| {
                        let (x1, x2, y1, y2) = (x / 4, x % 4, y / 4, y % 4);
                        ((x1 / 2) * (y1 % 2) + (x2 / 2) * (y2 % 2)) as u32 % 2
                    })
                    .collect()
            })
            .collect(),
    };
    out.push(("Z2^4".into(), z2_4, vec![Cocycle::trivial(16, 1), sym4]));
    out.push(("S3".into(), symmetric(3), vec![Cocycle::trivial(6, 1)]));
    out.push(("S4".into(), symmetric(4), vec![Cocycle::trivial(24, 1)]));
    out.push(("A4".into(), alternating4(), vec![Cocycle::trivial(12, 1)]));
    out.push(("D5".into(), dihedral(5), vec![Cocycle::trivial(10, 1)]));
    out.push(("D6".into(), dihedral(6), vec![Cocycle::trivial(12, 1)]));
    let q8 = quaternion();
    out.push(("Q8".into(), q8.clone(), vec![Cocycle::trivial(8, 1)]));
    let (klein_q, kq) = central_quotient(&q8, 4);
    out.push(("Q8/Z".into(), klein_q, vec![kq]));
    let d8 = dihedral(8);
    let z = (0..16).find(|&a| a != 0 && d8.element_order(a) == 2 && d8.centralizer(a).len() == 16).unwrap();
    let (d4q, kd) = central_quotient(&d8, z);
    out.push(("D8/Z".into(), d4q, vec![Cocycle::trivial(8, 1), kd]));
    let (sl, zs) = gl23(true);
    out.push(("SL(2,3)".into(), sl.clone(), vec![Cocycle::trivial(24, 1)]));
    let (a4q, ka) = central_quotient(&sl, zs);
    out.push(("SL(2,3)/Z".into(), a4q, vec![ka]));
    let (gl, zg) = gl23(false);
    out.push(("GL(2,3)".into(), gl.clone(), vec![Cocycle::trivial(48, 1)]));
    let (s4q, ks) = central_quotient(&gl, zg);
    out.push(("GL(2,3)/Z".into(), s4q, vec![ks]));
    let s3z2 = FiniteGroup::direct_product(&symmetric(3), &FiniteGroup::cyclic(2));
    out.push(("S3xZ2".into(), s3z2, vec![Cocycle::trivial(12, 1)]));
    out
}

/// A random normalized function `G → Z/m` vanishing at the identity.
pub fn random_eta(rng: &mut impl Rng, n: usize, m: u32) -> Vec<u32> {
    let mut eta: Vec<u32> = (0..n).map(|_| rng.gen_range(0..m)).collect();
    eta[0] = 0;
    eta
}

// ---------------------------------------------------------------------------
// Group actions

/// The subgroup generated by the given elements.
pub fn generated(g: &FiniteGroup, gens: &[usize]) -> Vec<usize> {
    let mut sub: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier = vec![0usize];
    while let Some(a) = frontier.pop() {
        for &x in gens {
            let b = g.mul(a, x);
            if sub.insert(b) {
                frontier.push(b);
            }
        }
    }
    sub.into_iter().collect()
}

/// Left cosets `gH`, each sorted, in order of least element.
pub fn left_cosets(g: &FiniteGroup, h: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; g.order()];
    let mut out = Vec::new();
    for a in 0..g.order() {
        if seen[a] {
            continue;
        }
        let mut c: Vec<usize> = h.iter().map(|&x| g.mul(a, x)).collect();
        c.sort();
        for &x in &c {
            seen[x] = true;
        }
        out.push(c);
    }
    out
}

/// `Γ` acting on `⊔ Γ/H_i` by left multiplication, as a table
/// `[γ][x]`, with the component of each point.
pub fn coset_action(g: &FiniteGroup, subgroups: &[Vec<usize>]) -> (Vec<Vec<usize>>, Vec<Vec<Vec<usize>>>) {
    let comps: Vec<Vec<Vec<usize>>> = subgroups.iter().map(|h| left_cosets(g, h)).collect();
    let mut offset = Vec::new();
    let mut total = 0;
    for c in &comps {
        offset.push(total);
        total += c.len();
    }
    let table = (0..g.order())
        .map(|gamma| {
            let mut row = Vec::with_capacity(total);
            for (ci, c) in comps.iter().enumerate() {
                for coset in c {
                    let img = g.mul(gamma, coset[0]);
                    let j = c.iter().position(|d| d.contains(&img)).unwrap();
                    row.push(offset[ci] + j);
                }
            }
            row
        })
        .collect();
    (table, comps)
}

/// A random action of a random corpus group of order ≤ `max_order` on at
/// most `max_points` points, as a union of coset spaces, with a block
/// partition permuted by the group (fibers of `Γ/H → Γ/K`, `H ≤ K`).
pub fn random_action(
    rng: &mut impl Rng,
    groups: &[FiniteGroup],
    max_points: usize,
) -> (GroupAction, Vec<Vec<usize>>) {
    loop {
        let g = groups.choose(rng).unwrap().clone();
        let n = g.order();
        let mut subs = Vec::new();
        let mut supers = Vec::new();
        let mut total = 0;
        let parts = rng.gen_range(1..=3);
        for _ in 0..parts {
            let k = rng.gen_range(0..=2);
            let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
            let h = generated(&g, &gens);
            let index = n / h.len();
            if total + index > max_points {
                continue;
            }
            let mut kg = gens.clone();
            kg.push(rng.gen_range(0..n));
            supers.push(generated(&g, &kg));
            total += index;
            subs.push(h);
        }
        if subs.is_empty() {
            continue;
        }
        let (table, comps) = coset_action(&g, &subs);
        let action = GroupAction::new(g.clone(), &table).unwrap();
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (c, k) in comps.iter().zip(&supers) {
            for big in left_cosets(&g, k) {
                let block: Vec<usize> = (0..c.len())
                    .filter(|&j| big.contains(&c[j][0]))
                    .map(|j| offset + j)
                    .collect();
                blocks.push(block);
            }
            offset += c.len();
        }
        return (action, blocks);
    }
}

/// `|{(x, g) : gx = x} / Γ|` by Burnside's lemma on pairs.
pub fn plain_quotient_burnside(action: &GroupAction) -> usize {
    let g = action.group();
    let n = g.order();
    let mut fixed = 0usize;
    for gamma in 0..n {
        for x in 0..action.points() {
            if action.act(gamma, x) != x {
                continue;
            }
            for h in 0..n {
                if action.act(h, x) == x && g.mul(gamma, h) == g.mul(h, gamma) {
                    fixed += 1;
                }
            }
        }
    }
    assert_eq!(fixed % n, 0);
    fixed / n
}

// ---------------------------------------------------------------------------
// Random data and catalogs

pub fn small_groups() -> Vec<FiniteGroup> {
    corpus().into_iter().map(|(_, g, _)| g).filter(|g| g.order() <= 24).collect()
}

/// Base-point data with a cocycle on the stabilizer of the first point of
/// each orbit: a Klein-four cocycle transported along an isomorphism when
/// the stabilizer is Klein four, a random coboundary otherwise.
pub fn random_data(rng: &mut impl Rng, action: &GroupAction) -> TwistedQuotientData {
    let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let kk = bilinear_cocycle(2, 2);
    let mut bases = Vec::new();
    for orbit in action.orbits() {
        let x = orbit[0];
        let stab = action.stabilizer(x);
        let (sub, _) = action.group().subgroup(&stab).unwrap();
        let base = match sub.isomorphism_to(&klein) {
            Some(iso) => Cocycle {
                modulus: 2,
                table: (0..4).map(|a| (0..4).map(|b| kk.get(iso[a], iso[b])).collect()).collect(),
            },
            None => Cocycle::trivial(stab.len(), 2),
        };
        let eta = random_eta(rng, stab.len(), 2);
        bases.push((x, coboundary_twist(&sub, &base, &eta).unwrap()));
    }
    TwistedQuotientData::from_base_points(action, 2, &bases).unwrap()
}

pub fn klein_catalog() -> Catalog {
    let diag = |a: i64, b: i64| vec![vec![a, 0], vec![0, b]];
    let entry = CatalogEntry {
        levi_id: "T2".into(),
        lattice_rank: 2,
        generators: vec![
            Generator { matrix: diag(-1, 1), label_perm: vec![0], point_perm: vec![0] },
            Generator { matrix: diag(1, -1), label_perm: vec![0], point_perm: vec![0] },
        ],
        labels: vec![Label {
            name: "s".into(),
            central_character: Some("triv".into()),
            shift: None,
            isotropy: Isotropy { modulus: 1, points: vec![vec![0, 0]] },
            normal_subgroup_generators: None,
        }],
        points: vec![CatalogPoint { label: 0 }],
        cocycles: vec![],
    };
    let model = bernstein::weyl_elements(&entry).unwrap();
    let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let iso = model.group.isomorphism_to(&klein).unwrap();
    let kk = bilinear_cocycle(2, 2);
    let table = (0..4).map(|a| (0..4).map(|b| kk.get(iso[a], iso[b])).collect()).collect();
    let mut entry = entry;
    entry.cocycles = vec![bernstein::BaseCocycle { base_point: 0, modulus: 2, table }];
    Catalog { entries: vec![entry] }
}

/// A random catalog over small groups: labels form coset spaces `Γ/K`,
/// points over them coset spaces `Γ/H` with `H ≤ K`.
pub fn random_catalog(rng: &mut impl Rng) -> Catalog {
    let groups: Vec<FiniteGroup> = small_groups().into_iter().filter(|g| g.order() <= 12).collect();
    let tags = [None, Some("triv"), Some("nontriv"), Some("zeta")];
    let mut entries = Vec::new();
    for e in 0..rng.gen_range(1..=3) {
        let g = &groups[rng.gen_range(0..groups.len())];
        let n = g.order();
        let mut labels = Vec::new();
        let mut points = Vec::new();
        // (label table, point table) per generator, built incrementally.
        let gens = g.generators();
        let mut label_perms: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        let mut point_perms: Vec<Vec<usize>> = vec![Vec::new(); gens.len()];
        for _ in 0..rng.gen_range(1..=2) {
            let kgen: Vec<usize> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..n)).collect();
            let k = generated(g, &kgen);
            let lcos = left_cosets(g, &k);
            let loff = labels.len();
            let modulus = rng.gen_range(1..=3u32);
            let full = rng.gen_bool(0.5);
            for _ in &lcos {
                let iso_pts = if full { (0..modulus).map(|t| vec![t]).collect() } else { vec![vec![0]] };
                labels.push(Label {
                    name: format!("e{e}l{}", labels.len()),
                    central_character: tags[rng.gen_range(0..tags.len())].map(String::from),
                    shift: rng.gen_bool(0.3).then(|| "z".to_string()),
                    isotropy: Isotropy { modulus, points: iso_pts },
                    normal_subgroup_generators: None,
                });
            }
            for (gi, &gamma) in gens.iter().enumerate() {
                for c in &lcos {
                    let img = g.mul(gamma, c[0]);
                    label_perms[gi].push(loff + lcos.iter().position(|d| d.contains(&img)).unwrap());
                }
            }
            for _ in 0..rng.gen_range(1..=2) {
                let hgen: Vec<usize> = kgen.iter().copied().filter(|_| rng.gen_bool(0.6)).collect();
                let h = generated(g, &hgen);
                let pcos = left_cosets(g, &h);
                let poff = points.len();
                for c in &pcos {
                    let l = lcos.iter().position(|d| d.contains(&c[0])).unwrap();
                    points.push(CatalogPoint { label: loff + l });
                }
                for (gi, &gamma) in gens.iter().enumerate() {
                    for c in &pcos {
                        let img = g.mul(gamma, c[0]);
                        point_perms[gi].push(poff + pcos.iter().position(|d| d.contains(&img)).unwrap());
                    }
                }
            }
        }
        let generators = (0..gens.len())
            .map(|gi| Generator {
                matrix: vec![vec![1]],
                label_perm: label_perms[gi].clone(),
                point_perm: point_perms[gi].clone(),
            })
            .collect();
        let mut entry = CatalogEntry {
            levi_id: format!("M{e}"),
            lattice_rank: 1,
            generators,
            labels,
            points,
            cocycles: vec![],
        };
        let model = bernstein::weyl_elements(&entry).unwrap();
        let table: Vec<Vec<usize>> = model.elements.iter().map(|w| w.points.clone()).collect();
        let action = GroupAction::new(model.group.clone(), &table).unwrap();
        let data_bases = random_data(rng, &action);
        // Recover the base cocycles on the first point of each orbit.
        for orbit in action.orbits() {
            let x = orbit[0];
            entry.cocycles.push(bernstein::BaseCocycle {
                base_point: x,
                modulus: 2,
                table: data_bases.cocycles[x].clone(),
            });
        }
        entries.push(entry);
    }
    Catalog { entries }
}

