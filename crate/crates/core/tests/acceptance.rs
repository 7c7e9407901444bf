//! Acceptance suite: one check per criterion, each with an exactness
//! condition and a time budget. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use springer_core::bernstein;
use springer_core::cuspidal::{
    cuspidal_classification, cuspidal_support_exceptional, cuspidal_systems, exceptional_cuspidal_levi,
    has_cuspidal, CuspidalSupport, Rep, SupportOrbit,
};
use springer_core::extquot::{self, TwistedQuotientData};
use springer_core::orbits::{
    component_group, component_group_census, cuspidal_orbit_label, enhancements, enumerate_orbits,
    exceptional_center, exceptional_count_table, Enhancement, Family, GroupLabel, OrbitLabel,
};
use springer_core::partitions::ClassicalType;
use springer_core::projrep::{
    coboundary_twist, kappa_regular_classes, twisted_irreps, DEFAULT_BOUND,
};
use springer_core::rootdata::{named_automorphisms, ExtendedWeylGroup, ParabolicPair, RootSystem};

use common::*;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn exc(f: Family) -> GroupLabel {
    GroupLabel::exceptional(f).unwrap()
}

fn cl(t: ClassicalType, n: u32) -> GroupLabel {
    GroupLabel::classical(t, n).unwrap()
}

// 1 -------------------------------------------------------------------------

fn exceptional_orbit_counts() -> Check {
    let expected = [(Family::G2, 5), (Family::F4, 16), (Family::E6, 21), (Family::E7, 45), (Family::E8, 70)];
    for (f, n) in expected {
        let g = exc(f);
        let got = enumerate_orbits(&g).len();
        ensure(got == n, || format!("{f}: {got} orbits, expected {n}"))?;
        let table_total: u32 = exceptional_count_table(&g).unwrap().values().sum();
        ensure(table_total as usize == n, || format!("{f}: count table sums to {table_total}"))?;
    }
    Ok("G2 5, F4 16, E6 21, E7 45, E8 70".into())
}

// 2 -------------------------------------------------------------------------

fn component_group_census_matches() -> Check {
    let mut mismatches = Vec::new();
    for f in Family::EXCEPTIONAL {
        let g = exc(f);
        let census = component_group_census(&g);
        let table = exceptional_count_table(&g).unwrap();
        if census != table {
            let fmt = |m: &BTreeMap<_, u32>| {
                m.iter()
                    .map(|(k, v): (&springer_core::orbits::ComponentGroupDescriptor, &u32)| format!("{}:{v}", k.short()))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            mismatches.push(format!("{f}: computed [{}] vs table [{}]", fmt(&census), fmt(&table)));
        }
    }
    if mismatches.is_empty() {
        Ok("all five exceptional censuses match".into())
    } else {
        Err(mismatches.join("; "))
    }
}

// 3 -------------------------------------------------------------------------

fn cuspidal_counts() -> Check {
    for n in 1..=200u32 {
        let got = cuspidal_systems(&cl(ClassicalType::A, n)).len() as u64;
        let want = totient_by_count(n as u64 + 1);
        ensure(got == want, || format!("A{n}: {got} cuspidal systems, totient gives {want}"))?;
    }
    let triangular: std::collections::BTreeSet<u64> =
        (1..200u64).map(|d| d * (d + 1) / 2).take_while(|&t| t <= 10_000).collect();
    for n in 1..=10_000u32 {
        let got = has_cuspidal(&cl(ClassicalType::C, n));
        let want = triangular.contains(&(n as u64));
        ensure(got == want, || format!("C{n}: cuspidal {got}, triangular {want}"))?;
    }
    let b612 = cuspidal_systems(&cl(ClassicalType::B, 612)).len();
    ensure(b612 == 2, || format!("B612 has {b612} cuspidal systems"))?;
    let d18 = cuspidal_classification(&cl(ClassicalType::D, 18));
    ensure(!d18.warnings.is_empty(), || "D18 produced no warning".into())?;
    Ok(format!("A1..A200, C1..C10000, B612 = 2, D18 warns ({} systems)", d18.systems.len()))
}

// 4 -------------------------------------------------------------------------

/// Support predicted from the dispatch rule: the central character alone
/// decides, except on the cuspidal pair.
fn predicted_support(f: Family, o: &OrbitLabel, e: &Enhancement) -> (Vec<usize>, u32, bool) {
    let OrbitLabel::Exceptional { bala_carter, .. } = o else { unreachable!() };
    let center = exceptional_center(f);
    let cusp = Some(bala_carter.as_str()) == cuspidal_orbit_label(f)
        && e.is_sign()
        && (center.is_none() || e.central != 0);
    if cusp {
        let rank = f.exceptional_rank().unwrap() as usize;
        return ((1..=rank).collect(), e.central, true);
    }
    if e.central == 0 {
        return (Vec::new(), 0, false);
    }
    (exceptional_cuspidal_levi(f).unwrap().to_vec(), e.central, false)
}

fn exceptional_supports() -> Check {
    let mut checked = 0;
    let mut twists = 0;
    for f in Family::EXCEPTIONAL {
        let g = exc(f);
        let zorder = exceptional_center(f).map_or(1, |c| c.order());
        for o in enumerate_orbits(&g) {
            let a = component_group(&g, &o).unwrap();
            for e in enhancements(&a).unwrap() {
                let s: CuspidalSupport = cuspidal_support_exceptional(&g, &o, &e).map_err(|err| err.to_string())?;
                let (levi, central, cusp) = predicted_support(f, &o, &e);
                ensure(s.levi.x == levi && s.central == central, || {
                    format!("{f} {o:?} {e}: got {:?}/{} expected {levi:?}/{central}", s.levi.x, s.central)
                })?;
                if zorder == 1 && !cusp {
                    ensure(s.orbit == SupportOrbit::Zero && s.system == Rep::Trivial, || {
                        format!("{f} {o:?} {e}: not [T, 1, triv]")
                    })?;
                }
                if zorder > 1 && !cusp && central != 0 {
                    ensure(s.orbit == SupportOrbit::Regular && s.system.central_label().is_some(), || {
                        format!("{f} {o:?} {e}: missing central character on the Levi system")
                    })?;
                }
                checked += 1;
                // Twisting by every central character χ′.
                if zorder > 1 {
                    for c in 0..zorder {
                        let tw = Enhancement { central: (e.central + c) % zorder, factor: e.factor.clone() };
                        if !enhancements(&a).unwrap().contains(&tw) {
                            continue;
                        }
                        let st = cuspidal_support_exceptional(&g, &o, &tw).map_err(|err| err.to_string())?;
                        ensure(st.central == (s.central + c) % zorder, || {
                            format!("{f} {o:?}: twist by {c} does not shift the central character")
                        })?;
                        let (levi, _, _) = predicted_support(f, &o, &tw);
                        ensure(st.levi.x == levi, || format!("{f} {o:?}: twisted support on the wrong Levi"))?;
                        twists += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} local systems, {twists} twisted pairs"))
}

// 5 -------------------------------------------------------------------------

fn double_coset_groups() -> Vec<(String, ExtendedWeylGroup)> {
    let mut out = Vec::new();
    for n in 1..=5 {
        let g = cl(ClassicalType::A, n);
        out.push((format!("A{n}"), ExtendedWeylGroup::connected(RootSystem::new(g))));
    }
    out.push(("B3".into(), ExtendedWeylGroup::connected(RootSystem::new(cl(ClassicalType::B, 3)))));
    out.push(("C3".into(), ExtendedWeylGroup::connected(RootSystem::new(cl(ClassicalType::C, 3)))));
    out.push(("D4".into(), ExtendedWeylGroup::connected(RootSystem::new(cl(ClassicalType::D, 4)))));
    out.push(("G2".into(), ExtendedWeylGroup::connected(RootSystem::new(exc(Family::G2)))));
    out.push(("F4".into(), ExtendedWeylGroup::connected(RootSystem::new(exc(Family::F4)))));
    let a3 = cl(ClassicalType::A, 3);
    out.push((
        "A3.flip".into(),
        ExtendedWeylGroup::new(RootSystem::new(a3), &named_automorphisms(&a3, "flip").unwrap()).unwrap(),
    ));
    let d4 = cl(ClassicalType::D, 4);
    out.push((
        "D4.S3".into(),
        ExtendedWeylGroup::new(RootSystem::new(d4), &named_automorphisms(&d4, "triality").unwrap()).unwrap(),
    ));
    out
}

/// Compares every pair of parabolic pairs of `ext` against the matrix
/// group oracle. Returns the number of pairs checked.
pub fn check_double_cosets(name: &str, ext: &ExtendedWeylGroup) -> Result<usize, String> {
    let rs = ext.root_system();
    let pi0 = ext.pi0().to_vec();
    let gens: Vec<Vec<usize>> = pi0.iter().skip(1).cloned().collect();
    let mw = MatrixWeyl::new(rs.cartan(), &gens);
    let order = ext.order().map_err(|e| e.to_string())?;
    ensure(mw.elements.len() == order, || format!("{name}: oracle order {} vs {order}", mw.elements.len()))?;
    let dim_b = rs.rank() + mw.num_positive();
    let lengths: Vec<usize> = (0..mw.elements.len()).map(|e| mw.length(e)).collect();
    let pairs = ext.enumerate_parabolic_pairs();
    let mut checked = 0;
    for q in &pairs {
        let qt: Vec<Vec<usize>> = q.omega.iter().map(|&t| pi0[t].clone()).collect();
        let lg = mw.parabolic_gens(&q.x, &qt);
        for p in &pairs {
            let pt: Vec<Vec<usize>> = p.omega.iter().map(|&t| pi0[t].clone()).collect();
            let rg = mw.parabolic_gens(&p.x, &pt);
            let (id, count) = mw.double_cosets(&lg, &rg);
            let mut sizes = vec![0u64; count];
            let mut maxlen = vec![0usize; count];
            for (e, &c) in id.iter().enumerate() {
                sizes[c] += 1;
                maxlen[c] = maxlen[c].max(lengths[e]);
            }
            let dcs = ext.double_cosets(q, p).map_err(|e| e.to_string())?;
            ensure(dcs.len() == count, || {
                format!("{name} Q={:?} P={:?}: {} cosets, oracle {count}", q, p, dcs.len())
            })?;
            let total: u64 = dcs.iter().map(|d| d.size).sum();
            ensure(total as usize == order, || format!("{name}: sizes sum to {total}, |W| = {order}"))?;
            let mut hit = vec![false; count];
            for d in &dcs {
                let e = mw.element_of(&d.word, &d.theta);
                let c = id[e];
                ensure(!std::mem::replace(&mut hit[c], true), || {
                    format!("{name} Q={q:?} P={p:?}: two representatives in one coset")
                })?;
                ensure(sizes[c] == d.size, || format!("{name}: coset size {} vs oracle {}", d.size, sizes[c]))?;
                ensure(d.dim as usize == dim_b + maxlen[c], || {
                    format!("{name}: dim {} vs oracle {}", d.dim, dim_b + maxlen[c])
                })?;
                ensure(lengths[e] as u32 == d.length, || format!("{name}: representative length mismatch"))?;
            }
            ensure(dcs.windows(2).all(|w| w[0].dim <= w[1].dim), || format!("{name}: ordering not monotone"))?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn double_cosets_match() -> Check {
    let mut total = 0;
    let mut names = Vec::new();
    for (name, ext) in double_coset_groups() {
        total += check_double_cosets(&name, &ext)?;
        names.push(name);
    }
    Ok(format!("{total} pairs of parabolic pairs over {}", names.join(", ")))
}

// 6 -------------------------------------------------------------------------

/// Simple roots (0-based) of the standard Levi `GL_{a₁} × ⋯` in `A_{n−1}`.
fn composition_subset(comp: &[usize]) -> Vec<usize> {
    let n: usize = comp.iter().sum();
    let mut cuts = std::collections::BTreeSet::new();
    let mut s = 0;
    for &a in comp {
        s += a;
        cuts.insert(s);
    }
    (0..n - 1).filter(|i| !cuts.contains(&(i + 1))).collect()
}

fn mackey_contingency() -> Check {
    let mut checked = 0;
    for n in 2..=6usize {
        let ext = ExtendedWeylGroup::connected(RootSystem::new(cl(ClassicalType::A, n as u32 - 1)));
        let comps = compositions(n);
        for cm in &comps {
            for cl_ in &comps {
                let q = ParabolicPair::connected(composition_subset(cm));
                let p = ParabolicPair::connected(composition_subset(cl_));
                let terms = ext.mackey_terms(&p, &q).map_err(|e| e.to_string())?;
                let want = contingency_count(cm, cl_);
                ensure(terms.len() as u64 == want, || {
                    format!("GL{n} M={cm:?} L={cl_:?}: {} terms, {want} matrices", terms.len())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} composition pairs, n <= 6"))
}

// 7 -------------------------------------------------------------------------

fn quasi_levi_bijection() -> Check {
    let mut out = Vec::new();
    for (g, name) in [(cl(ClassicalType::A, 2), "flip"), (cl(ClassicalType::D, 4), "triality")] {
        let rs = RootSystem::new(g);
        let oracle = levi_class_count(&MatrixWeyl::new(rs.cartan(), &[]));
        let ext = ExtendedWeylGroup::new(rs, &named_automorphisms(&g, name).unwrap()).unwrap();
        let labels = ext.quasi_levis().map_err(|e| e.to_string())?;
        let distinct: std::collections::BTreeSet<_> = labels.iter().collect();
        ensure(distinct.len() == labels.len(), || format!("{g}: repeated quasi-Levi labels"))?;
        ensure(labels.len() == oracle, || format!("{g}: {} quasi-Levis, {oracle} Levi classes", labels.len()))?;
        out.push(format!("{g}.{name}: {oracle}"));
    }
    Ok(out.join(", "))
}

// 8 -------------------------------------------------------------------------

fn projective_engine() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut instances = 0;
    for (name, g, cocycles) in corpus() {
        for k in cocycles {
            let t = twisted_irreps(&g, &k, DEFAULT_BOUND).map_err(|e| format!("{name}: {e}"))?;
            let regular = kappa_regular_classes(&g, &k).len();
            ensure(t.count() == regular, || format!("{name}: {} irreducibles, {regular} regular classes", t.count()))?;
            let sq: u64 = t.dims.iter().map(|d| d * d).sum();
            ensure(sq as usize == g.order(), || format!("{name}: sum of squares {sq}"))?;
            let mut dims = t.dims.clone();
            dims.sort();
            for _ in 0..100 {
                let eta = random_eta(&mut rng, g.order(), k.modulus);
                let k2 = coboundary_twist(&g, &k, &eta).map_err(|e| e.to_string())?;
                let t2 = twisted_irreps(&g, &k2, DEFAULT_BOUND).map_err(|e| e.to_string())?;
                let mut d2 = t2.dims.clone();
                d2.sort();
                ensure(d2 == dims, || format!("{name}: dimensions change under a coboundary twist"))?;
                ensure(kappa_regular_classes(&g, &k2).len() == regular, || {
                    format!("{name}: regular classes change under a coboundary twist")
                })?;
            }
            instances += 1;
        }
    }
    Ok(format!("{instances} (group, cocycle) instances x 100 twists"))
}

// 9 -------------------------------------------------------------------------

fn extended_quotients() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let groups = small_groups();
    let mut two_step = 0;
    for i in 0..200 {
        let (action, blocks) = random_action(&mut rng, &groups, 8);
        let trivial = TwistedQuotientData::trivial(&action);
        let built = extquot::build(&action, &trivial).map_err(|e| format!("action {i}: {e}"))?;
        let oracle = plain_quotient_burnside(&action);
        ensure(built.len() == oracle, || format!("action {i}: {} points, Burnside gives {oracle}", built.len()))?;
        let ts = extquot::two_step_quotient(&action, &blocks, &trivial).map_err(|e| e.to_string())?;
        ensure(ts == built, || format!("action {i}: two-step differs from direct build"))?;
        let data = random_data(&mut rng, &action);
        let v = extquot::validate(&action, &data).map_err(|e| e.to_string())?;
        ensure(v.is_empty(), || format!("action {i}: base-point data has violations {v:?}"))?;
        let direct = extquot::build(&action, &data).map_err(|e| e.to_string())?;
        let ts = extquot::two_step_quotient(&action, &blocks, &data).map_err(|e| e.to_string())?;
        ensure(ts == direct, || format!("action {i}: twisted two-step differs"))?;
        two_step += 2;
    }
    Ok(format!("200 random actions, {two_step} two-step comparisons"))
}

// 10 ------------------------------------------------------------------------

fn bernstein_assembly() -> Check {
    let cat = klein_catalog();
    let all = bernstein::assemble_all(&cat).map_err(|e| e.to_string())?;
    let block: Vec<_> = all.values().flatten().collect();
    ensure(block.len() == 1 && block[0].dim == 2, || format!("Klein block: {block:?}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut outputs = 0;
    for i in 0..100 {
        let cat = random_catalog(&mut rng);
        let all = bernstein::assemble_all(&cat).map_err(|e| format!("catalog {i}: {e}"))?;
        for (key, block) in &all {
            let entry = cat.entries.iter().find(|e| e.levi_id == key.levi_id).unwrap();
            for bp in block {
                let label = &entry.labels[entry.points[bp.point].label];
                ensure(bp.central_character == label.central_character && bp.label == label.name, || {
                    format!("catalog {i}: tag lost at {key}")
                })?;
                outputs += 1;
            }
        }
    }
    Ok(format!("Klein block = 1 point of dim 2; {outputs} tagged outputs over 100 catalogs"))
}

// ---------------------------------------------------------------------------

struct Criterion {
    id: u8,
    name: &'static str,
    budget: Duration,
    run: fn() -> Check,
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion { id: 1, name: "exceptional orbit counts", budget: Duration::from_secs(1), run: exceptional_orbit_counts },
        Criterion { id: 2, name: "component-group census", budget: Duration::from_secs(1), run: component_group_census_matches },
        Criterion { id: 3, name: "cuspidal counts", budget: Duration::from_secs(5), run: cuspidal_counts },
        Criterion { id: 4, name: "exceptional cuspidal support", budget: Duration::from_secs(1), run: exceptional_supports },
        Criterion { id: 5, name: "double cosets", budget: Duration::from_secs(60), run: double_cosets_match },
        Criterion { id: 6, name: "Mackey terms", budget: Duration::from_secs(10), run: mackey_contingency },
        Criterion { id: 7, name: "quasi-Levi bijection", budget: Duration::from_secs(5), run: quasi_levi_bijection },
        Criterion { id: 8, name: "projective representations", budget: Duration::from_secs(60), run: projective_engine },
        Criterion { id: 9, name: "extended quotients", budget: Duration::from_secs(120), run: extended_quotients },
        Criterion { id: 10, name: "Bernstein assembly", budget: Duration::from_secs(10), run: bernstein_assembly },
    ];
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if elapsed <= c.budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {:?}", c.budget)),
            Err(e) => (false, e),
        };
        println!(
            "criterion {:>2} {:<30} {} {:>9.3}s (budget {:>3}s)  {}",
            c.id,
            c.name,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.budget.as_secs(),
            detail
        );
        if !ok {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
