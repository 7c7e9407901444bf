//! Twisted extended quotients `(X ⫽ Γ)_κ` of a finite group action.
//!
//! The data attached to `Γ ↷ X` is stored in strict form: a 2-cocycle `κ_x`
//! on every stabilizer `Γ_x`, and for every `γ ∈ Γ` and `x ∈ X` an algebra
//! isomorphism `θ_{γ,x} : C[Γ_x, κ_x] → C[Γ_{γx}, κ_{γx}]` given by
//! `T_h ↦ ζ_m^{c(h)} T_{φ(h)}`. The quotient consists of the orbits of
//! pairs `(x, ρ)`, `ρ ∈ Irr C[Γ_x, κ_x]`, under `γ·(x, ρ) = (γx, ρ ∘ θ_{γ,x}⁻¹)`.
//! Irreducibles are tracked by their characters, so the twisted action is
//! computed on character values.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyc;
use crate::projrep::{
    character_table, is_coboundary, twisted_irreps, validate_cocycle, Cocycle, FiniteGroup,
    TwistedIrreps, DEFAULT_BOUND,
};
use crate::{Error, Result};

/// A left action of a finite group on `0..points`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    points: usize,
    table: Vec<usize>,
}

impl GroupAction {
    /// `table[g][x] = g·x`.
    pub fn new(group: FiniteGroup, table: &[Vec<usize>]) -> Result<Self> {
        let n = group.order();
        if table.len() != n {
            return Err(Error::InvalidAction(format!("{} rows for a group of order {n}", table.len())));
        }
        let points = table[0].len();
        let mut flat = Vec::with_capacity(n * points);
        for row in table {
            if row.len() != points || row.iter().any(|&y| y >= points) {
                return Err(Error::InvalidAction("rows must be maps of the point set".into()));
            }
            flat.extend_from_slice(row);
        }
        let a = GroupAction { group, points, table: flat };
        for x in 0..points {
            if a.act(0, x) != x {
                return Err(Error::InvalidAction(format!("identity moves {x}")));
            }
        }
        for g in 0..n {
            for h in 0..n {
                let gh = a.group.mul(g, h);
                for x in 0..points {
                    if a.act(gh, x) != a.act(g, a.act(h, x)) {
                        return Err(Error::InvalidAction(format!("(gh)x != g(hx) for g={g}, h={h}, x={x}")));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn trivial(group: FiniteGroup, points: usize) -> Self {
        let table = vec![(0..points).collect::<Vec<_>>(); group.order()];
        GroupAction::new(group, &table).expect("trivial action")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.points
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.points + x]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.points.max(1)).map(|c| c.to_vec()).collect()
    }

    /// Sorted stabilizer of `x`; the identity comes first.
    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.act(g, x) == x).collect()
    }

    /// Orbits, each sorted, listed by minimal element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.points];
        let mut out = Vec::new();
        for x in 0..self.points {
            if seen[x] {
                continue;
            }
            let orbit: BTreeSet<usize> = (0..self.group.order()).map(|g| self.act(g, x)).collect();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }
}

/// `θ_{γ,x}`: `T_h ↦ ζ_m^{scale[i]} T_{map[i]}` for the `i`-th element `h`
/// of the sorted stabilizer `Γ_x`. `map` holds elements of `Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    pub map: Vec<usize>,
    pub scale: Vec<u32>,
}

/// Strict twisted quotient data with values in `μ_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistedQuotientData {
    pub modulus: u32,
    /// `cocycles[x][i][j] = κ_x(h_i, h_j)` over the sorted stabilizer.
    pub cocycles: Vec<Vec<Vec<u32>>>,
    /// `theta[γ][x]`.
    pub theta: Vec<Vec<Gluing>>,
}

/// A failed condition of the definition, reported once per `Γ`-orbit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1: `κ_{γx}` is not cohomologous to `γ_*κ_x`; 2: `θ_{γ,x}` is not inner
    /// for some `γ ∈ Γ_x`; 3: `θ_{γ',γx} ∘ θ_{γ,x} ≠ θ_{γ'γ,x}`.
    pub condition: u8,
    /// Least point of the orbit.
    pub orbit: usize,
    /// First failing instance, as `(γ, γ', x)` (`γ'` unused for 1 and 2).
    pub witness: (usize, usize, usize),
    /// Number of failing instances in the orbit.
    pub instances: usize,
}

/// One point of the extended quotient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuotientPoint {
    /// Canonical representative: least point, then least irreducible index.
    pub point: usize,
    pub irrep: usize,
    pub dim: u64,
    /// All pairs `(x, ρ)` in the orbit, sorted.
    pub members: Vec<(usize, usize)>,
}

impl TwistedQuotientData {
    /// Trivial cocycles and `θ_{γ,x} = Ad γ`.
    pub fn trivial(action: &GroupAction) -> Self {
        let stabs: Vec<Vec<usize>> = (0..action.points()).map(|x| action.stabilizer(x)).collect();
        let g = action.group();
        let cocycles = stabs.iter().map(|s| vec![vec![0; s.len()]; s.len()]).collect();
        let theta = (0..g.order())
            .map(|gamma| {
                stabs
                    .iter()
                    .map(|s| Gluing {
                        map: s.iter().map(|&h| g.conj(gamma, h)).collect(),
                        scale: vec![0; s.len()],
                    })
                    .collect()
            })
            .collect();
        TwistedQuotientData { modulus: 1, cocycles, theta }
    }

    /// Strict data synthesized from a base point `x₀` of each orbit with a
    /// cocycle `κ₀` on `Γ_{x₀}`. With `σ_x` the least `γ` such that
    /// `γx₀ = x`, `κ_x` is `κ₀` transported by `σ_x`, and `θ_{γ,x}` is
    /// conjugation by `T_u`, `u = σ_{γx}⁻¹ γ σ_x ∈ Γ_{x₀}`, read through these
    /// identifications. Orbits without a base point get trivial data.
    pub fn from_base_points(action: &GroupAction, modulus: u32, bases: &[(usize, Cocycle)]) -> Result<Self> {
        let g = action.group();
        let npts = action.points();
        let stabs: Vec<Vec<usize>> = (0..npts).map(|x| action.stabilizer(x)).collect();
        let local: Vec<HashMap<usize, usize>> =
            stabs.iter().map(|s| s.iter().enumerate().map(|(i, &h)| (h, i)).collect()).collect();
        let mut data = TwistedQuotientData::trivial(action);
        data.modulus = modulus;
        for (x0, k0) in bases {
            let x0 = *x0;
            if x0 >= npts {
                return Err(Error::InvalidQuotientData(format!("base point {x0} out of range")));
            }
            let s0 = &stabs[x0];
            let k0 = if k0.modulus == modulus {
                k0.clone()
            } else if modulus % k0.modulus == 0 {
                k0.inflate(modulus / k0.modulus)
            } else {
                return Err(Error::InvalidQuotientData("cocycle modulus does not divide the common modulus".into()));
            };
            if k0.table.len() != s0.len() {
                return Err(Error::InvalidQuotientData(format!("cocycle at {x0} has the wrong size")));
            }
            let (sub, _) = g.subgroup(s0)?;
            if !validate_cocycle(&sub, &k0) {
                return Err(Error::InvalidCocycle(format!("base cocycle at {x0}")));
            }
            let m = modulus as i64;
            let kap = |a: usize, b: usize| k0.get(local[x0][&a], local[x0][&b]) as i64;
            // Scale of Ad(T_u) on T_h: κ(u,h) + κ(uh,u⁻¹) − κ(u,u⁻¹).
            let ad_scale = |u: usize, h: usize| {
                let uh = g.mul(u, h);
                (kap(u, h) + kap(uh, g.inv(u)) - kap(u, g.inv(u))).rem_euclid(m) as u32
            };
            let mut sigma: HashMap<usize, usize> = HashMap::new();
            for gamma in 0..g.order() {
                sigma.entry(action.act(gamma, x0)).or_insert(gamma);
            }
            for (&x, &sx) in &sigma {
                let sxi = g.inv(sx);
                let sx_stab = &stabs[x];
                data.cocycles[x] = sx_stab
                    .iter()
                    .map(|&h| {
                        sx_stab
                            .iter()
                            .map(|&k| kap(g.conj(sxi, h), g.conj(sxi, k)) as u32)
                            .collect()
                    })
                    .collect();
            }
            for gamma in 0..g.order() {
                for (&x, &sx) in &sigma {
                    let y = action.act(gamma, x);
                    let sy = sigma[&y];
                    let u = g.mul(g.mul(g.inv(sy), gamma), sx);
                    let sxi = g.inv(sx);
                    let scale = stabs[x].iter().map(|&h| ad_scale(u, g.conj(sxi, h))).collect();
                    let map = stabs[x].iter().map(|&h| g.conj(gamma, h)).collect();
                    data.theta[gamma][x] = Gluing { map, scale };
                }
            }
        }
        Ok(data)
    }
}

/// Stabilizers, their twisted irreducibles, and lookup tables shared by the
/// validation and the construction.
struct Prepared<'a> {
    action: &'a GroupAction,
    data: &'a TwistedQuotientData,
    stabs: Vec<Vec<usize>>,
    local: Vec<HashMap<usize, usize>>,
    subgroups: Vec<FiniteGroup>,
    cocycles: Vec<Cocycle>,
    irreps: Vec<Option<TwistedIrreps>>,
    conductor: u32,
}

impl<'a> Prepared<'a> {
    fn new(action: &'a GroupAction, data: &'a TwistedQuotientData) -> Result<Self> {
        let g = action.group();
        let npts = action.points();
        let m = data.modulus;
        if m == 0 {
            return Err(Error::InvalidQuotientData("modulus must be positive".into()));
        }
        if data.cocycles.len() != npts || data.theta.len() != g.order() {
            return Err(Error::InvalidQuotientData("tables do not match the action".into()));
        }
        let stabs: Vec<Vec<usize>> = (0..npts).map(|x| action.stabilizer(x)).collect();
        let local: Vec<HashMap<usize, usize>> =
            stabs.iter().map(|s| s.iter().enumerate().map(|(i, &h)| (h, i)).collect()).collect();
        let mut subgroups = Vec::with_capacity(npts);
        let mut cocycles = Vec::with_capacity(npts);
        for x in 0..npts {
            let (sub, _) = g.subgroup(&stabs[x])?;
            let k = Cocycle { modulus: m, table: data.cocycles[x].clone() };
            if !validate_cocycle(&sub, &k) {
                return Err(Error::InvalidQuotientData(format!("kappa at point {x} is not a normalized cocycle")));
            }
            subgroups.push(sub);
            cocycles.push(k);
        }
        let p = Prepared {
            action,
            data,
            stabs,
            local,
            subgroups,
            cocycles,
            irreps: vec![None; npts],
            conductor: m,
        };
        for gamma in 0..g.order() {
            if data.theta[gamma].len() != npts {
                return Err(Error::InvalidQuotientData(format!("theta[{gamma}] has the wrong length")));
            }
            for x in 0..npts {
                p.check_gluing(gamma, x)?;
            }
        }
        Ok(p)
    }

    /// `θ_{γ,x}` must be an algebra isomorphism:
    /// `φ` a group isomorphism `Γ_x → Γ_{γx}` and
    /// `κ_x(h,k) + c(hk) = κ_{γx}(φh, φk) + c(h) + c(k)`.
    fn check_gluing(&self, gamma: usize, x: usize) -> Result<()> {
        let g = self.action.group();
        let th = &self.data.theta[gamma][x];
        let y = self.action.act(gamma, x);
        let s = &self.stabs[x];
        let bad = |why: &str| Error::InvalidQuotientData(format!("theta[{gamma}][{x}]: {why}"));
        if th.map.len() != s.len() || th.scale.len() != s.len() {
            return Err(bad("wrong length"));
        }
        if th.scale.iter().any(|&c| c >= self.data.modulus) {
            return Err(bad("scale out of range"));
        }
        let mut phi = Vec::with_capacity(s.len());
        let mut hit = vec![false; s.len()];
        for &img in &th.map {
            let Some(&j) = self.local[y].get(&img) else {
                return Err(bad("image outside the target stabilizer"));
            };
            if std::mem::replace(&mut hit[j], true) {
                return Err(bad("map is not injective"));
            }
            phi.push(j);
        }
        if self.stabs[y].len() != s.len() {
            return Err(bad("stabilizers differ in order"));
        }
        let m = self.data.modulus as i64;
        for a in 0..s.len() {
            for b in 0..s.len() {
                let ab = self.local[x][&g.mul(s[a], s[b])];
                let img_ab = self.local[y][&g.mul(th.map[a], th.map[b])];
                if img_ab != phi[ab] {
                    return Err(bad("map is not a homomorphism"));
                }
                let lhs = self.cocycles[x].get(a, b) as i64 + th.scale[ab] as i64;
                let rhs = self.cocycles[y].get(phi[a], phi[b]) as i64
                    + th.scale[a] as i64
                    + th.scale[b] as i64;
                if (lhs - rhs).rem_euclid(m) != 0 {
                    return Err(bad("not an algebra homomorphism"));
                }
            }
        }
        Ok(())
    }

    fn ensure_irreps(&mut self) -> Result<()> {
        let mut conductor = self.data.modulus;
        for x in 0..self.stabs.len() {
            if self.irreps[x].is_none() {
                let t = twisted_irreps(&self.subgroups[x], &self.cocycles[x], DEFAULT_BOUND)?;
                conductor = num_integer::lcm(conductor, t.conductor);
                self.irreps[x] = Some(t);
            }
        }
        let conductor = num_integer::lcm(conductor, self.conductor);
        self.conductor = conductor;
        for t in self.irreps.iter_mut().flatten() {
            t.characters = t
                .characters
                .iter()
                .map(|row| row.iter().map(|v| v.lift(conductor)).collect())
                .collect();
            t.conductor = conductor;
        }
        Ok(())
    }

    /// Index of `ρ_j ∘ θ_{γ,x}⁻¹` among the irreducibles at `γx`:
    /// `χ'(φ(h)) = ζ_m^{−c(h)} χ(h)`.
    fn act_irrep(&self, gamma: usize, x: usize, j: usize) -> Result<usize> {
        let y = self.action.act(gamma, x);
        let th = &self.data.theta[gamma][x];
        let src = self.irreps[x].as_ref().expect("irreps computed");
        let dst = self.irreps[y].as_ref().expect("irreps computed");
        let n = self.conductor;
        let step = (n / self.data.modulus) as i64;
        let mut target = vec![Cyc::zero(n); self.stabs[y].len()];
        for (a, &img) in th.map.iter().enumerate() {
            let b = self.local[y][&img];
            let z = Cyc::root(n, -(th.scale[a] as i64) * step);
            target[b] = &z * &src.characters[j][a];
        }
        dst.characters
            .iter()
            .position(|c| *c == target)
            .ok_or_else(|| Error::Arithmetic(format!("no irreducible matches the twist of ({x}, {j}) by {gamma}")))
    }

    fn orbit_of(&self) -> Vec<usize> {
        let mut rep = vec![0usize; self.stabs.len()];
        for orbit in self.action.orbits() {
            for &y in &orbit {
                rep[y] = orbit[0];
            }
        }
        rep
    }

    fn violations(&mut self) -> Result<Vec<Violation>> {
        let g = self.action.group();
        let npts = self.stabs.len();
        let orbit_rep = self.orbit_of();
        let mut found: BTreeMap<(u8, usize), Violation> = BTreeMap::new();
        let mut record = |cond: u8, orbit: usize, witness: (usize, usize, usize)| {
            found
                .entry((cond, orbit))
                .and_modify(|v| v.instances += 1)
                .or_insert(Violation { condition: cond, orbit, witness, instances: 1 });
        };
        let m = self.data.modulus as i64;
        // (1) κ_{γx} − γ_*κ_x is a coboundary. When φ = Ad γ the algebra
        // isomorphism condition exhibits the coboundary of c ∘ φ⁻¹.
        for gamma in 0..g.order() {
            for x in 0..npts {
                let th = &self.data.theta[gamma][x];
                let is_ad = self.stabs[x].iter().zip(&th.map).all(|(&h, &img)| g.conj(gamma, h) == img);
                if is_ad {
                    continue;
                }
                let y = self.action.act(gamma, x);
                let gi = g.inv(gamma);
                let sy = &self.stabs[y];
                let table = sy
                    .iter()
                    .map(|&h| {
                        sy.iter()
                            .map(|&k| {
                                let a = self.local[x][&g.conj(gi, h)];
                                let b = self.local[x][&g.conj(gi, k)];
                                let d = self.cocycles[y].get(self.local[y][&h], self.local[y][&k]) as i64
                                    - self.cocycles[x].get(a, b) as i64;
                                d.rem_euclid(m) as u32
                            })
                            .collect()
                    })
                    .collect();
                let delta = Cocycle { modulus: self.data.modulus, table };
                if !is_coboundary(&self.subgroups[y], &delta, DEFAULT_BOUND)? {
                    record(1, orbit_rep[x], (gamma, 0, x));
                }
            }
        }
        // (2) θ_{γ,x} inner for γ ∈ Γ_x: it fixes every irreducible.
        self.ensure_irreps()?;
        for x in 0..npts {
            for &gamma in &self.stabs[x] {
                let count = self.irreps[x].as_ref().unwrap().count();
                for j in 0..count {
                    if self.act_irrep(gamma, x, j)? != j {
                        record(2, orbit_rep[x], (gamma, 0, x));
                        break;
                    }
                }
            }
        }
        // (3) θ_{γ',γx} ∘ θ_{γ,x} = θ_{γ'γ,x}.
        for x in 0..npts {
            for gamma in 0..g.order() {
                let y = self.action.act(gamma, x);
                let t1 = &self.data.theta[gamma][x];
                for gamma2 in 0..g.order() {
                    let t2 = &self.data.theta[gamma2][y];
                    let t12 = &self.data.theta[g.mul(gamma2, gamma)][x];
                    let ok = (0..self.stabs[x].len()).all(|a| {
                        let b = self.local[y][&t1.map[a]];
                        t2.map[b] == t12.map[a]
                            && (t1.scale[a] as i64 + t2.scale[b] as i64 - t12.scale[a] as i64).rem_euclid(m) == 0
                    });
                    if !ok {
                        record(3, orbit_rep[x], (gamma, gamma2, x));
                    }
                }
            }
        }
        Ok(found.into_values().collect())
    }

    /// Orbits of pairs `(x, j)` with `x` in `points`, under the elements of
    /// `allowed`.
    fn pair_orbits(&self, points: &[usize], allowed: &[usize]) -> Result<Vec<Vec<(usize, usize)>>> {
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut out = Vec::new();
        for &x in points {
            let count = self.irreps[x].as_ref().unwrap().count();
            for j in 0..count {
                if seen.contains(&(x, j)) {
                    continue;
                }
                let mut orbit: BTreeSet<(usize, usize)> = BTreeSet::new();
                for &gamma in allowed {
                    let y = self.action.act(gamma, x);
                    orbit.insert((y, self.act_irrep(gamma, x, j)?));
                }
                seen.extend(orbit.iter().copied());
                out.push(orbit.into_iter().collect());
            }
        }
        Ok(out)
    }

    fn to_points(&self, orbits: Vec<Vec<(usize, usize)>>) -> Vec<QuotientPoint> {
        let mut pts: Vec<QuotientPoint> = orbits
            .into_iter()
            .map(|members| {
                let (point, irrep) = members[0];
                let dim = self.irreps[point].as_ref().unwrap().dims[irrep];
                QuotientPoint { point, irrep, dim, members }
            })
            .collect();
        pts.sort();
        pts
    }
}

/// Checks conditions (1)–(3). Malformed tables, or gluings that are not
/// algebra isomorphisms, are errors rather than violations.
pub fn validate(action: &GroupAction, data: &TwistedQuotientData) -> Result<Vec<Violation>> {
    Prepared::new(action, data)?.violations()
}

/// The twisted extended quotient.
pub fn build(action: &GroupAction, data: &TwistedQuotientData) -> Result<Vec<QuotientPoint>> {
    let mut p = Prepared::new(action, data)?;
    let v = p.violations()?;
    if !v.is_empty() {
        return Err(Error::InvalidQuotientData(format!("{} condition violations", v.len())));
    }
    let all: Vec<usize> = (0..action.group().order()).collect();
    let points: Vec<usize> = (0..action.points()).collect();
    let orbits = p.pair_orbits(&points, &all)?;
    Ok(p.to_points(orbits))
}

/// Compares the quotient for the trivial data with an independent count of
/// the `Γ`-orbits on `{(x, g) : gx = x}` under `γ·(x, g) = (γx, γgγ⁻¹)`.
pub fn trivial_quotient_compare(action: &GroupAction) -> Result<bool> {
    let built = build(action, &TwistedQuotientData::trivial(action))?;
    Ok(built.len() == plain_extended_quotient_size(action))
}

/// `|{(x, g) : gx = x} / Γ|`.
pub fn plain_extended_quotient_size(action: &GroupAction) -> usize {
    let g = action.group();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut count = 0;
    for x in 0..action.points() {
        for h in action.stabilizer(x) {
            if seen.contains(&(x, h)) {
                continue;
            }
            count += 1;
            for gamma in 0..g.order() {
                seen.insert((action.act(gamma, x), g.conj(gamma, h)));
            }
        }
    }
    count
}

/// `Σ_{Γ-orbits} #Irr(Γ_x)` computed from ordinary character tables.
pub fn plain_irreducible_count(action: &GroupAction) -> Result<usize> {
    let mut total = 0;
    for orbit in action.orbits() {
        let (sub, _) = action.group().subgroup(&action.stabilizer(orbit[0]))?;
        total += character_table(&sub, DEFAULT_BOUND)?.characters.len();
    }
    Ok(total)
}

/// Assembles the quotient in two steps for a partition `X = ⊔ X_i` permuted
/// by `Γ`: first `X_i ⫽ N_Γ(X_i)` for each block, then the ordinary quotient
/// of their union by `Γ`. Requires `N_Γ(X_i)_x = Γ_x` for every `x ∈ X_i`.
pub fn two_step_quotient(
    action: &GroupAction,
    blocks: &[Vec<usize>],
    data: &TwistedQuotientData,
) -> Result<Vec<QuotientPoint>> {
    let g = action.group();
    let npts = action.points();
    let mut block_of = vec![usize::MAX; npts];
    for (i, b) in blocks.iter().enumerate() {
        for &x in b {
            if x >= npts || block_of[x] != usize::MAX {
                return Err(Error::InvalidAction("blocks must partition the point set".into()));
            }
            block_of[x] = i;
        }
    }
    if block_of.contains(&usize::MAX) {
        return Err(Error::InvalidAction("blocks must cover the point set".into()));
    }
    let block_sets: Vec<BTreeSet<usize>> = blocks.iter().map(|b| b.iter().copied().collect()).collect();
    for gamma in 0..g.order() {
        for b in &block_sets {
            let img: BTreeSet<usize> = b.iter().map(|&x| action.act(gamma, x)).collect();
            let first = block_of[*img.iter().next().unwrap()];
            if img != block_sets[first] {
                return Err(Error::InvalidAction("the group does not permute the blocks".into()));
            }
        }
    }
    let mut p = Prepared::new(action, data)?;
    let v = p.violations()?;
    if !v.is_empty() {
        return Err(Error::InvalidQuotientData(format!("{} condition violations", v.len())));
    }
    let mut local_orbits: Vec<Vec<(usize, usize)>> = Vec::new();
    for (i, b) in block_sets.iter().enumerate() {
        let normalizer: Vec<usize> = (0..g.order())
            .filter(|&gamma| b.iter().all(|&x| b.contains(&action.act(gamma, x))))
            .collect();
        for &x in b {
            let ok = p.stabs[x].iter().all(|h| normalizer.contains(h));
            if !ok {
                return Err(Error::StabilizerCondition { block: i, point: x });
            }
        }
        let pts: Vec<usize> = b.iter().copied().collect();
        local_orbits.extend(p.pair_orbits(&pts, &normalizer)?);
    }
    // Ordinary Γ-quotient of the union of the block quotients.
    let mut owner: HashMap<(usize, usize), usize> = HashMap::new();
    for (k, o) in local_orbits.iter().enumerate() {
        for &pair in o {
            owner.insert(pair, k);
        }
    }
    let mut parent: Vec<usize> = (0..local_orbits.len()).collect();
    fn find(parent: &mut [usize], mut a: usize) -> usize {
        while parent[a] != a {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        a
    }
    for k in 0..local_orbits.len() {
        let (x, j) = local_orbits[k][0];
        for gamma in 0..g.order() {
            let img = (action.act(gamma, x), p.act_irrep(gamma, x, j)?);
            let other = owner[&img];
            let (ra, rb) = (find(&mut parent, k), find(&mut parent, other));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
    }
    let mut merged: BTreeMap<usize, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for k in 0..local_orbits.len() {
        let r = find(&mut parent, k);
        merged.entry(r).or_default().extend(local_orbits[k].iter().copied());
    }
    let orbits = merged.into_values().map(|s| s.into_iter().collect()).collect();
    Ok(p.to_points(orbits))
}
