//! Finite groups given by multiplication tables, exact character tables,
//! 2-cocycles with values in `μ_m`, and the irreducible representations of
//! twisted group algebras `C[G, κ]`.
//!
//! Character tables are computed with the Dixon–Schneider method: the class
//! sums are diagonalized simultaneously over a prime field `F_p` with
//! `p ≡ 1 (mod exp G)`, and each character value is lifted to `Z[ζ_e]` from
//! the eigenvalue multiplicities of `ρ(g)`.

use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyc;
use crate::{Error, Result};

/// Default bound on group orders for character-table work.
pub const DEFAULT_BOUND: usize = 2000;

/// A finite group on `0..n` with identity `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<u32>,
    inv: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    /// Minimal element index of the class.
    pub rep: usize,
    pub elements: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

impl FiniteGroup {
    /// Validates a multiplication table `table[a][b] = a·b` with identity 0.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidGroupTable("empty table".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroupTable(format!("row {a} has length {}", row.len())));
            }
            for &c in row {
                if c >= n {
                    return Err(Error::InvalidGroupTable(format!("entry {c} out of range")));
                }
                table.push(c as u32);
            }
        }
        FiniteGroup::from_flat(n, table)
    }

    fn from_flat(n: usize, table: Vec<u32>) -> Result<Self> {
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(Error::InvalidGroupTable("element 0 is not the identity".into()));
            }
        }
        // Latin square: every row and column is a permutation.
        let mut seen = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] == 2 * a + 1 {
                    return Err(Error::InvalidGroupTable(format!("row {a} repeats {c}")));
                }
                seen[c] = 2 * a + 1;
            }
        }
        for b in 0..n {
            for a in 0..n {
                let c = table[a * n + b] as usize;
                if seen[c] == 2 * b + 2 {
                    return Err(Error::InvalidGroupTable(format!("column {b} repeats {c}")));
                }
                seen[c] = 2 * b + 2;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let b = (0..n).find(|&b| table[a * n + b] == 0).expect("latin square");
            inv[a] = b as u32;
        }
        let g = FiniteGroup { n, table, inv };
        g.check_associative()?;
        Ok(g)
    }

    /// Light's test: the elements `g` with `(xg)y = x(gy)` for all `x, y`
    /// form a submagma, so checking a generating set suffices.
    fn check_associative(&self) -> Result<()> {
        for g in self.generators() {
            for x in 0..self.n {
                let xg = self.mul(x, g);
                for y in 0..self.n {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(Error::InvalidGroupTable(format!(
                            "not associative at ({x}, {g}, {y})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The group generated by permutations of `0..d`, with the convention
    /// `(a·b)(x) = a(b(x))`. Returns the group and the permutation of each
    /// element; element 0 is the identity.
    pub fn from_permutations(gens: &[Vec<usize>]) -> Result<(Self, Vec<Vec<usize>>)> {
        let d = gens.first().map_or(0, |g| g.len());
        for g in gens {
            let mut seen = vec![false; d];
            if g.len() != d || g.iter().any(|&x| x >= d || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::InvalidGroupTable(format!("{g:?} is not a permutation of 0..{d}")));
            }
        }
        let id: Vec<usize> = (0..d).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            for g in gens {
                let p: Vec<usize> = (0..d).map(|x| g[elems[k][x]]).collect();
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let p: Vec<usize> = (0..d).map(|x| elems[a][elems[b][x]]).collect();
                table.push(index[&p] as u32);
            }
        }
        let inv = (0..n)
            .map(|a| (0..n).find(|&b| table[a * n + b] == 0).unwrap() as u32)
            .collect();
        Ok((FiniteGroup { n, table, inv }, elems))
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n).flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32)).collect();
        let inv = (0..n).map(|a| ((n - a) % n) as u32).collect();
        FiniteGroup { n, table, inv }
    }

    /// `A × B` with `(a, b) ↦ a·|B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let n = a.n * b.n;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (xa, xb) = (x / b.n, x % b.n);
                let (ya, yb) = (y / b.n, y % b.n);
                table.push((a.mul(xa, ya) * b.n + b.mul(xb, yb)) as u32);
            }
        }
        let inv = (0..n).map(|x| (a.inv(x / b.n) * b.n + b.inv(x % b.n)) as u32).collect();
        FiniteGroup { n, table, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).fold(1, |acc, a| num_integer::lcm(acc, self.element_order(a)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A greedy generating set: repeatedly adds the least element outside
    /// the span of the previous ones.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[0] = true;
        while let Some(next) = (0..self.n).find(|&a| !span[a]) {
            gens.push(next);
            // Right multiplication by generators reaches every product.
            let mut members: Vec<usize> = (0..self.n).filter(|&a| span[a]).collect();
            let mut k = 0;
            while k < members.len() {
                let x = members[k];
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !span[y] {
                        span[y] = true;
                        members.push(y);
                    }
                }
                k += 1;
            }
        }
        gens
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.n).filter(|&h| self.mul(g, h) == self.mul(h, g)).collect()
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let gens = self.generators();
        let mut class_of = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            class_of[start] = id;
            let mut elements = vec![start];
            let mut k = 0;
            while k < elements.len() {
                let x = elements[k];
                for &g in &gens {
                    let y = self.conj(g, x);
                    if class_of[y] == usize::MAX {
                        class_of[y] = id;
                        elements.push(y);
                    }
                }
                k += 1;
            }
            elements.sort();
            out.push(ConjugacyClass { rep: start, elements });
        }
        out
    }

    /// The subgroup on the given elements, relabelled so that the identity
    /// is 0. Returns the subgroup and the list `local → global`.
    pub fn subgroup(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::InvalidGroupTable("subgroup must contain the identity".into()));
        }
        let local: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        let m = elems.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &elems {
            for &b in &elems {
                let c = local
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::InvalidGroupTable("elements are not closed".into()))?;
                table.push(*c as u32);
            }
        }
        let inv = elems.iter().map(|&a| local[&self.inv(a)] as u32).collect();
        Ok((FiniteGroup { n: m, table, inv }, elems))
    }

    /// An isomorphism `self → other` (as an image list), found by
    /// backtracking over images of a generating set.
    pub fn isomorphism_to(&self, other: &FiniteGroup) -> Option<Vec<usize>> {
        if self.n != other.n {
            return None;
        }
        let ord_a: Vec<usize> = (0..self.n).map(|a| self.element_order(a)).collect();
        let ord_b: Vec<usize> = (0..other.n).map(|a| other.element_order(a)).collect();
        let mut pa = ord_a.clone();
        let mut pb = ord_b.clone();
        pa.sort();
        pb.sort();
        if pa != pb {
            return None;
        }
        let gens = self.generators();
        let mut images = vec![0usize; gens.len()];
        self.extend_iso(other, &gens, &ord_a, &ord_b, 0, &mut images)
    }

    fn extend_iso(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        ord_a: &[usize],
        ord_b: &[usize],
        k: usize,
        images: &mut Vec<usize>,
    ) -> Option<Vec<usize>> {
        if k == gens.len() {
            return self.try_map(other, gens, images);
        }
        for cand in 0..other.n {
            if ord_b[cand] != ord_a[gens[k]] {
                continue;
            }
            images[k] = cand;
            if let Some(m) = self.extend_iso(other, gens, ord_a, ord_b, k + 1, images) {
                return Some(m);
            }
        }
        None
    }

    fn try_map(&self, other: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut map = vec![usize::MAX; self.n];
        map[0] = 0;
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let fy = other.mul(map[x], img);
                if map[y] == usize::MAX {
                    map[y] = fy;
                    queue.push_back(y);
                } else if map[y] != fy {
                    return None;
                }
            }
        }
        let mut hit = vec![false; other.n];
        for &v in &map {
            if v == usize::MAX || std::mem::replace(&mut hit[v], true) {
                return None;
            }
        }
        let hom = (0..self.n).all(|a| (0..self.n).all(|b| map[self.mul(a, b)] == other.mul(map[a], map[b])));
        hom.then_some(map)
    }
}

/// A normalized 2-cocycle `G × G → Z/m`, read as `ζ_m^{κ(g,h)}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cocycle {
    pub modulus: u32,
    /// `table[g][h]`.
    pub table: Vec<Vec<u32>>,
}

impl Cocycle {
    pub fn trivial(n: usize, modulus: u32) -> Self {
        Cocycle { modulus, table: vec![vec![0; n]; n] }
    }

    #[inline]
    pub fn get(&self, g: usize, h: usize) -> u32 {
        self.table[g][h]
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|r| r.iter().all(|&v| v % self.modulus == 0))
    }

    /// The same cocycle with values in `Z/(k·m)`.
    pub fn inflate(&self, k: u32) -> Self {
        Cocycle {
            modulus: self.modulus * k,
            table: self.table.iter().map(|r| r.iter().map(|v| v * k).collect()).collect(),
        }
    }
}

/// Cocycle identity `κ(g,h) + κ(gh,k) = κ(g,hk) + κ(h,k)` and
/// normalization `κ(1,g) = κ(g,1) = 0`, all modulo `m`.
pub fn validate_cocycle(g: &FiniteGroup, k: &Cocycle) -> bool {
    let n = g.order();
    let m = k.modulus;
    if m == 0 || k.table.len() != n || k.table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= m)) {
        return false;
    }
    if (0..n).any(|a| k.get(0, a) != 0 || k.get(a, 0) != 0) {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            let kab = k.get(a, b);
            for c in 0..n {
                let lhs = (kab + k.get(ab, c)) % m;
                let rhs = (k.get(a, g.mul(b, c)) + k.get(b, c)) % m;
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

/// `κ'(g,h) = κ(g,h) + η(g) + η(h) − η(gh)`.
pub fn coboundary_twist(g: &FiniteGroup, k: &Cocycle, eta: &[u32]) -> Result<Cocycle> {
    let n = g.order();
    let m = k.modulus;
    if eta.len() != n {
        return Err(Error::InvalidCocycle(format!("eta has length {} for a group of order {n}", eta.len())));
    }
    if eta[0] % m != 0 {
        return Err(Error::InvalidCocycle("eta(1) must be 0".into()));
    }
    let table = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let v = k.get(a, b) as i64 + eta[a] as i64 + eta[b] as i64 - eta[g.mul(a, b)] as i64;
                    v.rem_euclid(m as i64) as u32
                })
                .collect()
        })
        .collect();
    Ok(Cocycle { modulus: m, table })
}

/// Conjugacy classes of `κ`-regular elements: `g` with `κ(g,h) = κ(h,g)` for
/// every `h` commuting with `g`.
pub fn kappa_regular_classes(g: &FiniteGroup, k: &Cocycle) -> Vec<ConjugacyClass> {
    g.conjugacy_classes()
        .into_iter()
        .filter(|c| {
            let x = c.rep;
            g.centralizer(x).iter().all(|&h| k.get(x, h) == k.get(h, x))
        })
        .collect()
}

/// Exact ordinary character table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterTable {
    pub order: usize,
    pub classes: Vec<ConjugacyClass>,
    #[serde(skip)]
    pub class_of: Vec<usize>,
    /// Values live in `Z[ζ_conductor]`, the conductor being `exp G`.
    pub conductor: u32,
    /// `characters[χ][class]`; the trivial character comes first.
    pub characters: Vec<Vec<Cyc>>,
    pub degrees: Vec<u64>,
}

impl CharacterTable {
    /// Exact first and second orthogonality.
    pub fn check_orthogonality(&self) -> bool {
        let n = self.order as i64;
        let k = self.classes.len();
        if self.characters.len() != k {
            return false;
        }
        let conj: Vec<Vec<Cyc>> = self.characters.iter().map(|r| r.iter().map(Cyc::conj).collect()).collect();
        for a in 0..k {
            for b in 0..k {
                let mut s = Cyc::zero(self.conductor);
                for c in 0..k {
                    let t = &self.characters[a][c] * &conj[b][c];
                    s = &s + &t.scale(self.classes[c].size() as i64);
                }
                if s.to_int() != Some(if a == b { n } else { 0 }) {
                    return false;
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let mut s = Cyc::zero(self.conductor);
                for a in 0..k {
                    s = &s + &(&self.characters[a][c] * &conj[a][d]);
                }
                let expect = if c == d { n / self.classes[c].size() as i64 } else { 0 };
                if s.to_int() != Some(expect) {
                    return false;
                }
            }
        }
        true
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(p: u64) -> u64 {
    let mut m = p - 1;
    let mut factors = Vec::new();
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("prime field")
}

/// Reduced row echelon basis of a subspace of `F_p^k`, stored as rows with
/// their pivot columns.
#[derive(Debug, Clone)]
struct Subspace {
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_vectors(vecs: Vec<Vec<u64>>, p: u64) -> Subspace {
        let mut rows = vecs;
        let mut pivots = Vec::new();
        let k = rows.first().map_or(0, |r| r.len());
        let mut r = 0;
        for col in 0..k {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
            rows.swap(r, piv);
            let inv = inv_mod(rows[r][col], p);
            for x in rows[r].iter_mut() {
                *x = *x * inv % p;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][col] != 0 {
                    let f = rows[i][col];
                    for j in 0..k {
                        rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        Subspace { rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Characteristic polynomial mod `p` via reduction to Hessenberg form.
/// Coefficients lowest degree first.
fn charpoly_mod(a: &[Vec<u64>], p: u64) -> Vec<u64> {
    let n = a.len();
    let mut h: Vec<Vec<u64>> = a.to_vec();
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[i][m - 1] != 0) else { continue };
        if i != m {
            h.swap(i, m);
            for row in h.iter_mut() {
                row.swap(i, m);
            }
        }
        let t = inv_mod(h[m][m - 1], p);
        for i in m + 1..n {
            let u = h[i][m - 1] * t % p;
            if u == 0 {
                continue;
            }
            for j in 0..n {
                h[i][j] = (h[i][j] + (p - u) * h[m][j]) % p;
            }
            for j in 0..n {
                h[j][m] = (h[j][m] + u * h[j][i]) % p;
            }
        }
    }
    // p_0 = 1; p_m = (x − h_mm) p_{m−1} − Σ_{i<m} h_im (∏_{j=i+1}^{m} h_{j,j−1}) p_{i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut next = vec![0u64; m + 1];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = (next[d] + (p - h[m - 1][m - 1]) * c) % p;
        }
        let mut prod = 1u64;
        for i in (1..m).rev() {
            prod = prod * h[i][i - 1] % p;
            let coef = h[i - 1][m - 1] * prod % p;
            if coef == 0 {
                continue;
            }
            for (d, &c) in polys[i - 1].iter().enumerate() {
                next[d] = (next[d] + (p - coef) * c % p) % p;
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

fn nullspace_mod(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let cols = if n == 0 { 0 } else { a[0].len() };
    let s = Subspace::from_vectors(a.to_vec(), p);
    let free: Vec<usize> = (0..cols).filter(|c| !s.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in s.pivots.iter().enumerate() {
                v[pc] = (p - s.rows[r][f]) % p;
            }
            v
        })
        .collect()
}

/// Exact character table of `g`, refusing groups above `bound`.
pub fn character_table(g: &FiniteGroup, bound: usize) -> Result<CharacterTable> {
    let n = g.order();
    if n > bound {
        return Err(Error::BoundExceeded { order: n, bound });
    }
    let classes = g.conjugacy_classes();
    let k = classes.len();
    let mut class_of = vec![0usize; n];
    for (i, c) in classes.iter().enumerate() {
        for &x in &c.elements {
            class_of[x] = i;
        }
    }
    let e = g.exponent() as u64;
    let p = (1..)
        .map(|t| t * e + 1)
        .find(|&q| q > 2 * n as u64 && is_prime(q))
        .unwrap();
    // a[j][i][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_i}
    let mut a = vec![0u64; k * k * k];
    for (l, c) in classes.iter().enumerate() {
        let z = c.rep;
        for x in 0..n {
            let j = class_of[x];
            let i = class_of[g.mul(g.inv(x), z)];
            a[(j * k + i) * k + l] += 1;
        }
    }
    let mut spaces = vec![Subspace::from_vectors(
        (0..k).map(|i| (0..k).map(|j| u64::from(i == j)).collect()).collect(),
        p,
    )];
    for j in 1..k {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let mut next = Vec::new();
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
                continue;
            }
            let d = s.dim();
            // M_j b for every basis vector b, in coordinates of the basis.
            let images: Vec<Vec<u64>> = s
                .rows
                .iter()
                .map(|b| {
                    (0..k)
                        .map(|i| (0..k).map(|l| a[(j * k + i) * k + l] * b[l] % p).sum::<u64>() % p)
                        .collect()
                })
                .collect();
            // r[t][u]: coefficient of basis row t in the image of basis row u.
            let r: Vec<Vec<u64>> =
                (0..d).map(|t| (0..d).map(|u| images[u][s.pivots[t]]).collect()).collect();
            let cp = charpoly_mod(&r, p);
            let roots: Vec<u64> = (0..p)
                .filter(|&x| cp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
                .collect();
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|t| (0..d).map(|u| (r[t][u] + if t == u { p - lam } else { 0 }) % p).collect())
                    .collect();
                let null = nullspace_mod(&shifted, p);
                let vecs: Vec<Vec<u64>> = null
                    .iter()
                    .map(|c| {
                        (0..k)
                            .map(|l| (0..d).map(|u| c[u] * s.rows[u][l] % p).sum::<u64>() % p)
                            .collect()
                    })
                    .collect();
                next.push(Subspace::from_vectors(vecs, p));
            }
        }
        spaces = next;
    }
    if spaces.len() != k || spaces.iter().any(|s| s.dim() != 1) {
        return Err(Error::Arithmetic("class sums did not split into lines".into()));
    }
    let inv_class: Vec<usize> = classes.iter().map(|c| class_of[g.inv(c.rep)]).collect();
    let zeta = pow_mod(primitive_root(p), (p - 1) / e, p);
    let class_orders: Vec<u64> = classes.iter().map(|c| g.element_order(c.rep) as u64).collect();
    let power_classes: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let mut out = vec![0usize];
            let mut x = c.rep;
            while x != 0 {
                out.push(class_of[x]);
                x = g.mul(x, c.rep);
            }
            out
        })
        .collect();
    let mut rows: Vec<(u64, Vec<Cyc>)> = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s.rows[0];
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|x| x * norm % p).collect();
        let sum = (0..k).fold(0u64, |acc, i| {
            (acc + omega[i] * omega[inv_class[i]] % p * inv_mod(classes[i].size() as u64, p)) % p
        });
        let d2 = n as u64 % p * inv_mod(sum, p) % p;
        let d = (1..=n as u64)
            .take_while(|d| d * d <= n as u64)
            .find(|d| d * d % p == d2)
            .ok_or_else(|| Error::Arithmetic("no degree".into()))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|i| omega[i] * d % p * inv_mod(classes[i].size() as u64, p) % p)
            .collect();
        let values: Vec<Cyc> = (0..k)
            .map(|i| {
                let o = class_orders[i];
                let zo = pow_mod(zeta, e / o, p);
                let inv_o = inv_mod(o, p);
                let terms: Vec<(i64, i64)> = (0..o)
                    .map(|t| {
                        let m = (0..o).fold(0u64, |acc, jj| {
                            let val = chi_mod[power_classes[i][jj as usize]];
                            (acc + val * pow_mod(zo, (o - (jj * t) % o) % o, p)) % p
                        }) * inv_o
                            % p;
                        ((t * (e / o)) as i64, m as i64)
                    })
                    .collect();
                Cyc::from_exponents(e as u32, terms)
            })
            .collect();
        rows.push((d, values));
    }
    rows.sort_by(|x, y| {
        let tx = x.1.iter().any(|v| v.to_int() != Some(1));
        let ty = y.1.iter().any(|v| v.to_int() != Some(1));
        (x.0, tx, &x.1).cmp(&(y.0, ty, &y.1))
    });
    let degrees = rows.iter().map(|r| r.0).collect();
    let characters = rows.into_iter().map(|r| r.1).collect();
    Ok(CharacterTable { order: n, classes, class_of, conductor: e as u32, characters, degrees })
}

/// Irreducible representations of `C[G, κ]`: count, dimensions, and the
/// character `χ(T_g)` of each on every element of `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistedIrreps {
    pub modulus: u32,
    pub conductor: u32,
    pub dims: Vec<u64>,
    /// `characters[ρ][g]`.
    pub characters: Vec<Vec<Cyc>>,
}

impl TwistedIrreps {
    pub fn count(&self) -> usize {
        self.dims.len()
    }
}

/// The central extension `1 → Z/m → G̃ → G → 1` with `(a,g)(b,h) =
/// (a + b + κ(g,h), gh)`, element `(a, g)` at index `a + m·g`.
pub fn central_extension(g: &FiniteGroup, k: &Cocycle) -> FiniteGroup {
    let n = g.order();
    let m = k.modulus as usize;
    let size = n * m;
    let mut table = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, gx) = (x % m, x / m);
        for y in 0..size {
            let (b, hy) = (y % m, y / m);
            let c = (a + b + k.get(gx, hy) as usize) % m;
            table.push((c + m * g.mul(gx, hy)) as u32);
        }
    }
    let inv = (0..size)
        .map(|x| (0..size).find(|&y| table[x * size + y] == 0).unwrap() as u32)
        .collect();
    FiniteGroup { n: size, table, inv }
}

pub fn twisted_irreps(g: &FiniteGroup, k: &Cocycle, bound: usize) -> Result<TwistedIrreps> {
    let n = g.order();
    let m = k.modulus as usize;
    if n * m > bound {
        return Err(Error::BoundExceeded { order: n * m, bound });
    }
    if !validate_cocycle(g, k) {
        return Err(Error::InvalidCocycle("cocycle identity or normalization fails".into()));
    }
    let ext = central_extension(g, k);
    let ct = character_table(&ext, bound)?;
    let e = ct.conductor;
    let central = if m == 1 { 0 } else { ct.class_of[1] };
    let zeta_m = Cyc::root(e, (e as usize / m) as i64);
    let mut picked: Vec<(u64, Vec<Cyc>)> = Vec::new();
    for (row, &d) in ct.characters.iter().zip(&ct.degrees) {
        if row[central] == zeta_m.scale(d as i64) {
            let vals = (0..n).map(|x| row[ct.class_of[m * x]].clone()).collect();
            picked.push((d, vals));
        }
    }
    picked.sort();
    Ok(TwistedIrreps {
        modulus: k.modulus,
        conductor: e,
        dims: picked.iter().map(|p| p.0).collect(),
        characters: picked.into_iter().map(|p| p.1).collect(),
    })
}

/// Whether `κ` is a coboundary with values in `C^×`: exactly when `C[G, κ]`
/// has a one-dimensional representation.
pub fn is_coboundary(g: &FiniteGroup, k: &Cocycle, bound: usize) -> Result<bool> {
    if k.is_zero() {
        return Ok(true);
    }
    Ok(twisted_irreps(g, k, bound)?.dims.contains(&1))
}

/// Histogram of dimensions.
pub fn dimension_multiset(dims: &[u64]) -> BTreeMap<u64, usize> {
    let mut m = BTreeMap::new();
    for &d in dims {
        *m.entry(d).or_insert(0) += 1;
    }
    m
}
