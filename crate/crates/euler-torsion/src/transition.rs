//! The explicit chains of the lifting argument: the Euler chain `e_g` (and
//! its half), the connecting chain `c_1` with `d_v(c_1) = d_h(e_g)`, the
//! transition cycle `t = d_h(c_1)`, and its decomposition into the loops
//! `L_0, ..., L_g`. Everything is verified at the chain level: closed
//! forms, term counts, cycle conditions, commuting squares, and the loop
//! traversal that consumes every generator of `L_0 + ... + L_g` along the
//! composite `(d_2g ... d_0)^4g`.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::automorphism::{Automorphism, Generators};
use crate::chain::BiGradedChain;
use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::inversive::{basic_family, Inversive};
use crate::orbit::{orbit_augmentation, orbit_partition, OrbitPartition};
use crate::simplex::{act_sorted, OrientedSimplex};
use crate::word::GenusContext;

/// Sorted complement of two omitted indices inside the basic family.
fn complement(basics: &[Inversive], omit_a: usize, omit_b: usize) -> Vec<Inversive> {
    debug_assert_ne!(omit_a, omit_b);
    basics
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != omit_a && *i != omit_b)
        .map(|(_, v)| v.clone())
        .collect()
}

fn tuple(basics: &[Inversive], idx: &[usize]) -> Vec<Inversive> {
    idx.iter().map(|&i| basics[i].clone()).collect()
}

/// Half Euler chain: the single 2g-simplex `[A_0, A_2g, A_1, ..., A_2g-1]`.
pub fn chain_e_g_half(ctx: &GenusContext, basics: &[Inversive]) -> Result<BiGradedChain> {
    let n = ctx.rank();
    let mut idx = vec![0, n];
    idx.extend(1..n);
    let mut c = BiGradedChain::zero(n, 0);
    c.add_term(OrientedSimplex::new(tuple(basics, &idx)), Vec::new(), 1)?;
    Ok(c)
}

/// Euler chain `e_g = [A_0, A_2g, A_1, .., A_2g-1] - [A_0, A_1, .., A_2g]`.
/// The two tuples are an odd permutation apart, so the canonical form is a
/// single simplex with coefficient +/-2.
pub fn chain_e_g(ctx: &GenusContext, basics: &[Inversive]) -> Result<BiGradedChain> {
    let n = ctx.rank();
    let half = chain_e_g_half(ctx, basics)?;
    let mut increasing = BiGradedChain::zero(n, 0);
    let idx: Vec<usize> = (0..=n).collect();
    increasing.add_term(OrientedSimplex::new(tuple(basics, &idx)), Vec::new(), 1)?;
    half.sub(&increasing)
}

/// Connecting chain
/// `c_1 = sum_i (-1)^i [A_0, .., ^A_i, .., A_2g] . d_(i+1 mod 2g+1)`,
/// one term per omitted index.
pub fn chain_c1(
    ctx: &GenusContext,
    d_arcs: &[Arc<Automorphism>],
    basics: &[Inversive],
) -> Result<BiGradedChain> {
    let n = ctx.rank();
    let modn = n + 1;
    let mut c = BiGradedChain::zero(n - 1, 1);
    for i in 0..=n {
        let verts: Vec<Inversive> =
            basics.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v.clone()).collect();
        let sign = if i % 2 == 0 { 1 } else { -1 };
        c.add_term(
            OrientedSimplex::Simplex { vertices: verts, sign: 1 },
            vec![d_arcs[(i + 1) % modn].clone()],
            sign,
        )?;
    }
    Ok(c)
}

/// The transition cycle `t = d_h(c_1)`.
pub fn transition_cycle(c1: &BiGradedChain) -> Result<BiGradedChain> {
    c1.boundary_h()
}

/// Closed form of the transition cycle as a double sum over ordered pairs
/// `(i, j)`, `i != j`: the simplex omits `{i, j}`, the morphism is
/// `d_(i+1)`, and the sign is `(-1)^(i+j)` for `i > j` and `(-1)^(i+j-1)`
/// for `i < j`.
pub fn transition_double_sum(
    ctx: &GenusContext,
    d_arcs: &[Arc<Automorphism>],
    basics: &[Inversive],
) -> Result<BiGradedChain> {
    let n = ctx.rank();
    let modn = n + 1;
    let mut c = BiGradedChain::zero(n.saturating_sub(2), 1);
    for i in 0..=n {
        for j in 0..=n {
            if i == j {
                continue;
            }
            let exp = if i > j { i + j } else { i + j + 1 };
            let sign = if exp % 2 == 0 { 1 } else { -1 };
            c.add_term(
                OrientedSimplex::Simplex { vertices: complement(basics, i, j), sign: 1 },
                vec![d_arcs[(i + 1) % modn].clone()],
                sign,
            )?;
        }
    }
    Ok(c)
}

/// The loop `L_k`, all coefficients +1 on sorted simplices:
/// `L_0 = sum_i [omit {i, i+1}] . d_(i+1)`,
/// `L_g = sum_i [omit {i, i+g}] . d_(i+g+1)`, and for `1 <= k <= g-1`
/// `L_k = sum_i [omit {i, i+k}] . d_(i+k+1) + [omit {i, i+k+1}] . d_(i+1)`
/// (indices mod 2g+1).
pub fn chain_l(
    ctx: &GenusContext,
    d_arcs: &[Arc<Automorphism>],
    basics: &[Inversive],
    k: usize,
) -> Result<BiGradedChain> {
    let g = ctx.genus();
    let n = ctx.rank();
    let modn = n + 1;
    if k > g {
        return Err(Error::InvalidConfig(format!("loop index {k} out of range 0..={g}")));
    }
    let mut c = BiGradedChain::zero(n.saturating_sub(2), 1);
    let mut push = |omit_a: usize, omit_b: usize, d_idx: usize, c: &mut BiGradedChain| {
        c.add_term(
            OrientedSimplex::Simplex {
                vertices: complement(basics, omit_a % modn, omit_b % modn),
                sign: 1,
            },
            vec![d_arcs[d_idx % modn].clone()],
            1,
        )
    };
    for i in 0..=n {
        if k == 0 {
            push(i, i + 1, i + 1, &mut c)?;
        } else if k == g {
            push(i, i + g, i + g + 1, &mut c)?;
        } else {
            push(i, i + k, i + k + 1, &mut c)?;
            push(i, i + k + 1, i + 1, &mut c)?;
        }
    }
    Ok(c)
}

/// The chains of the lifting argument for one genus, built once.
#[derive(Clone, Debug)]
pub struct TransitionData {
    pub basics: Vec<Inversive>,
    pub d_arcs: Vec<Arc<Automorphism>>,
    pub e_half: BiGradedChain,
    pub e: BiGradedChain,
    pub c1: BiGradedChain,
    pub t: BiGradedChain,
    pub loops: Vec<BiGradedChain>,
}

impl TransitionData {
    pub fn build(ctx: &GenusContext, gens: &Generators) -> Result<Self> {
        let basics = basic_family(ctx)?;
        let d_arcs: Vec<Arc<Automorphism>> =
            gens.d.iter().map(|d| Arc::new(d.clone())).collect();
        let e_half = chain_e_g_half(ctx, &basics)?;
        let e = chain_e_g(ctx, &basics)?;
        let c1 = chain_c1(ctx, &d_arcs, &basics)?;
        let t = transition_cycle(&c1)?;
        let loops = (0..=ctx.genus())
            .map(|k| chain_l(ctx, &d_arcs, &basics, k))
            .collect::<Result<_>>()?;
        Ok(TransitionData { basics, d_arcs, e_half, e, c1, t, loops })
    }

    /// All named chains in dump order.
    pub fn dumps(&self, genus: usize) -> Vec<(String, String)> {
        let mut out = vec![
            ("e".to_string(), self.e.dump(genus, "e")),
            ("e_half".to_string(), self.e_half.dump(genus, "e_half")),
            ("c1".to_string(), self.c1.dump(genus, "c1")),
            ("t".to_string(), self.t.dump(genus, "t")),
        ];
        for (k, l) in self.loops.iter().enumerate() {
            let name = format!("L{k}");
            out.push((name.clone(), l.dump(genus, &name)));
        }
        out
    }
}

/// Report for the transition-cycle identities.
#[derive(Clone, Debug)]
pub struct TransitionReport {
    pub checks: CheckList,
    pub notes: Vec<String>,
}

/// A map from each characteristic morphism to its index, for decoding the
/// morphism slot of loop generators.
fn d_index_table(gens: &Generators) -> BTreeMap<Automorphism, usize> {
    gens.d.iter().enumerate().map(|(j, d)| (d.clone(), j)).collect()
}

type ConsumeKey = (Vec<Inversive>, usize);

fn generator_multiset(
    loops: &[BiGradedChain],
    d_table: &BTreeMap<Automorphism, usize>,
) -> Result<BTreeMap<ConsumeKey, i64>> {
    let mut out = BTreeMap::new();
    for l in loops {
        for (gen, coef) in l.terms() {
            let j = *d_table
                .get(gen.morphisms[0].as_ref())
                .ok_or_else(|| Error::InvalidConfig("loop morphism is not characteristic".into()))?;
            *out.entry((gen.vertices.clone(), j)).or_insert(0) += coef;
        }
    }
    Ok(out)
}

struct SumLoopOutcome {
    half_closed: bool,
    half_consumed_each_once: bool,
    half_sign: i64,
    half_is_s_power: bool,
    full_closed: bool,
    full_consumed_each_twice: bool,
    full_sign: i64,
    full_composite_identity: bool,
    composable: bool,
}

/// Traverse the morphisms of `L_0 + ... + L_g` in the order of the
/// composite `(d_2g ... d_0)^4g` read right to left, starting from the
/// simplex omitting `{2g-1, 2g}` (the base object `[A_0..A_2g-2]`).
fn traverse_sum_loop(
    ctx: &GenusContext,
    gens: &Generators,
    basics: &[Inversive],
    expected: &BTreeMap<ConsumeKey, i64>,
) -> Result<SumLoopOutcome> {
    let g = ctx.genus();
    let n = ctx.rank();
    let modn = n + 1;
    let start = complement(basics, n - 1, n);
    let mut state = start.clone();
    let mut sign = 1i64;
    let mut consumed: BTreeMap<ConsumeKey, i64> = BTreeMap::new();
    let mut composite = gens.id.clone();
    let mut composable = true;

    let mut half_closed = false;
    let mut half_consumed_each_once = false;
    let mut half_sign = 0;
    let mut half_is_s_power = false;

    for round in 0..4 * g {
        for j in 0..modn {
            // Composability within the basic support: d_j moves A_{j-1} off
            // the basic family, so it must be absent from the state.
            let away = basics[(j + n) % modn].clone();
            if state.contains(&away) {
                composable = false;
            }
            *consumed.entry((state.clone(), j)).or_insert(0) += 1;
            let (next, s) = act_sorted(ctx, &gens.d[j], &state)?;
            state = next;
            sign *= s;
            composite = gens.d[j].compose(ctx, &composite)?;
        }
        if round + 1 == 2 * g {
            half_closed = state == start;
            half_consumed_each_once =
                consumed == expected.iter().map(|(k, _)| (k.clone(), 1)).collect();
            half_sign = sign;
            half_is_s_power = composite.equal_auto(&gens.s.power(ctx, 2 * g as i64)?);
        }
    }

    let full_consumed_each_twice =
        consumed == expected.iter().map(|(k, _)| (k.clone(), 2)).collect();

    Ok(SumLoopOutcome {
        half_closed,
        half_consumed_each_once,
        half_sign,
        half_is_s_power,
        full_closed: state == start,
        full_consumed_each_twice,
        full_sign: sign,
        full_composite_identity: composite.equal_auto(&gens.id),
        composable,
    })
}

/// Traverse the loop representing a single `L_k` (k >= 1) and confirm it
/// consumes each of its generators once and returns to the starting object
/// in the same orientation class.
fn traverse_single_loop(
    ctx: &GenusContext,
    gens: &Generators,
    basics: &[Inversive],
    lk: &BiGradedChain,
    d_table: &BTreeMap<Automorphism, usize>,
    k: usize,
) -> Result<(bool, String)> {
    let g = ctx.genus();
    let n = ctx.rank();
    let modn = n + 1;
    let expected = generator_multiset(std::slice::from_ref(lk), d_table)?;
    let mut consumed: BTreeMap<ConsumeKey, i64> = BTreeMap::new();

    let start = complement(basics, 0, k % modn);
    let mut state = start.clone();
    let mut sign = 1i64;
    if k == g {
        // One step per term: from omit {i, i+g} apply d_(i+g+1); the omitted
        // pair steps by g+1, which is coprime to 2g+1.
        let mut i = 0usize;
        for _ in 0..modn {
            let j = (i + g + 1) % modn;
            *consumed.entry((state.clone(), j)).or_insert(0) += 1;
            let (next, s) = act_sorted(ctx, &gens.d[j], &state)?;
            state = next;
            sign *= s;
            i = (i + g + 1) % modn;
        }
    } else {
        // Two steps per i: d_(i+k+1) then d_(i+1).
        for i in 0..modn {
            for j in [(i + k + 1) % modn, (i + 1) % modn] {
                *consumed.entry((state.clone(), j)).or_insert(0) += 1;
                let (next, s) = act_sorted(ctx, &gens.d[j], &state)?;
                state = next;
                sign *= s;
            }
        }
    }

    let closed = state == start && sign == 1;
    let once = consumed == expected.iter().map(|(key, _)| (key.clone(), 1)).collect();
    let witness = format!(
        "loop L_{k}: closed={}, orientation sign={}, consumed each term once={}",
        state == start,
        sign,
        once
    );
    Ok((closed && once, witness))
}

/// Orbit partition of the faces of `e_g` under the characteristic classes
/// plus S and T.
pub fn face_partition(
    ctx: &GenusContext,
    gens: &Generators,
    faces: &BiGradedChain,
) -> Result<OrbitPartition> {
    let seeds: Vec<Vec<Inversive>> =
        faces.terms().map(|(gen, _)| gen.vertices.clone()).collect();
    let mut orbit_gens: Vec<Automorphism> = gens.d.to_vec();
    orbit_gens.push(gens.s.clone());
    orbit_gens.push(gens.t.clone());
    orbit_partition(ctx, &seeds, &orbit_gens, ctx.limits().orbit_depth)
}

pub fn verify_transition(ctx: &GenusContext, gens: &Generators) -> Result<TransitionReport> {
    let g = ctx.genus();
    let n = ctx.rank();
    let data = TransitionData::build(ctx, gens)?;
    let mut checks = CheckList::new();
    let mut notes = Vec::new();

    // e_g: the two displayed tuples are opposite orientations of one
    // simplex, so the canonical chain is a single simplex with coefficient
    // +/-2 and e_g = 2 (e_g/2).
    let single = data.e.support_size() == 1;
    let coef = data.e.terms().next().map(|(_, c)| c).unwrap_or(0);
    checks.push_witness(
        "e_g collapses to one simplex with coefficient +/-2",
        single && coef.abs() == 2,
        format!("support={}, coefficient={}", data.e.support_size(), coef),
    );
    checks.push("e_g = 2 e_g/2", data.e == data.e_half.scale(2)?);
    let half_coef = data.e_half.terms().next().map(|(_, c)| c).unwrap_or(0);
    checks.push("e_g/2 has coefficient +/-1", half_coef.abs() == 1);

    checks.push_witness(
        "c_1 has 2g+1 terms",
        data.c1.support_size() == n + 1,
        format!("terms={}", data.c1.support_size()),
    );

    // The bounding identity d_v(c_1) = d_h(e_g).
    let dv_c1 = data.c1.boundary_v(ctx)?;
    let dh_e = data.e.boundary_h()?;
    checks.push("d_v(c_1) = d_h(e_g)", dv_c1 == dh_e);

    // t against its closed form, term counts, and cycle conditions.
    let closed_form = transition_double_sum(ctx, &data.d_arcs, &data.basics)?;
    checks.push("t = d_h(c_1) matches the closed-form double sum", data.t == closed_form);
    checks.push_witness(
        "t has 2g(2g+1) terms",
        data.t.support_size() == 2 * g * (2 * g + 1),
        format!("terms={}", data.t.support_size()),
    );
    if data.t.bidegree().0 == 0 {
        checks.push_witness(
            "d_h(t) = 0",
            true,
            "t lives at p = 0, where the horizontal boundary vanishes identically",
        );
    } else {
        checks.push("d_h(t) = 0", data.t.boundary_h()?.is_zero());
    }
    checks.push("d_v(t) = 0", data.t.boundary_v(ctx)?.is_zero());

    // Loop decomposition: t = L_0 - L_1 + ... + (-1)^g L_g, disjoint
    // supports partitioning t, the stated term counts, vertical closure,
    // and isotropy of L_0.
    let mut alt = BiGradedChain::zero(n.saturating_sub(2), 1);
    for (k, l) in data.loops.iter().enumerate() {
        alt = alt.add(&l.scale(if k % 2 == 0 { 1 } else { -1 })?)?;
    }
    checks.push("t = alternating sum of the loops L_k", data.t == alt);
    let mut counts_ok = true;
    let mut total = 0usize;
    for (k, l) in data.loops.iter().enumerate() {
        let want = if k == 0 || k == g { 2 * g + 1 } else { 2 * (2 * g + 1) };
        if l.support_size() != want {
            counts_ok = false;
        }
        total += l.support_size();
    }
    checks.push_witness(
        "loop term counts: 2g+1 at the ends, 2(2g+1) in the middle",
        counts_ok && total == data.t.support_size(),
        format!("total={total}"),
    );
    let d_table = d_index_table(gens);
    let mut union = generator_multiset(&data.loops, &d_table)?;
    union.retain(|_, c| *c != 0);
    let disjoint = union.values().all(|&c| c == 1) && union.len() == total;
    checks.push("loop supports are pairwise disjoint", disjoint);
    let mut vertical_ok = true;
    for l in &data.loops {
        if !l.boundary_v(ctx)?.is_zero() {
            vertical_ok = false;
        }
    }
    checks.push("each L_k is a vertical 1-cycle", vertical_ok);
    let mut iso_ok = true;
    for (gen, _) in data.loops[0].terms() {
        let (image, s) = act_sorted(ctx, &gen.morphisms[0], &gen.vertices)?;
        if image != gen.vertices || s != 1 {
            iso_ok = false;
        }
    }
    checks.push("every L_0 term is isotropic", iso_ok);

    // Commuting squares demanded by flipping consecutive loops: the pairs
    // (d_(i+1), d_(i+k+2)) for each middle flip. Their index pairs are
    // disjoint, and they commute.
    if g == 1 {
        checks.push_witness(
            "flip squares between consecutive loops commute",
            true,
            "no middle loops at genus 1; no squares are demanded",
        );
    } else {
        let mut squares_ok = true;
        let mut demanded = Vec::new();
        for k in 1..g {
            for i in 0..=n {
                let m = (i + 1) % (n + 1);
                let nn = (i + k + 2) % (n + 1);
                let mm = [m, (m + n) % (n + 1)];
                let kk = [nn, (nn + n) % (n + 1)];
                let disjoint_pair = mm.iter().all(|x| !kk.contains(x));
                let ab = gens.d[m].compose(ctx, &gens.d[nn])?;
                let ba = gens.d[nn].compose(ctx, &gens.d[m])?;
                if !disjoint_pair || !ab.equal_auto(&ba) {
                    squares_ok = false;
                }
                demanded.push((m, nn));
            }
        }
        demanded.sort_unstable();
        demanded.dedup();
        let pairs: Vec<String> =
            demanded.iter().map(|(a, b)| format!("(d_{a},d_{b})")).collect();
        checks.push_witness(
            "flip squares between consecutive loops commute",
            squares_ok,
            format!("demanded pairs: {}", pairs.join(" ")),
        );
    }

    // The sum of the loops traverses the composite (d_2g..d_0)^4g: closed,
    // composable, total composite the identity, each generator consumed
    // exactly once per half period.
    let expected = generator_multiset(&data.loops, &d_table)?;
    let outcome = traverse_sum_loop(ctx, gens, &data.basics, &expected)?;
    checks.push_witness(
        "sum-of-loops traversal consumes each generator once per half period",
        outcome.composable && outcome.half_closed && outcome.half_consumed_each_once,
        format!(
            "half traversal: closed={}, sign={}, composite = S^2g holds: {}",
            outcome.half_closed, outcome.half_sign, outcome.half_is_s_power
        ),
    );
    checks.push_witness(
        "full traversal closes with identity composite",
        outcome.full_closed
            && outcome.full_composite_identity
            && outcome.full_consumed_each_twice
            && outcome.full_sign == 1,
        format!(
            "full traversal: closed={}, sign={}, consumed each generator twice={}",
            outcome.full_closed, outcome.full_sign, outcome.full_consumed_each_twice
        ),
    );
    notes.push(
        "the 4g-round traversal covers the loop generators twice; the 2g-round half already \
         closes the loop because S^2g fixes every basic inversive"
            .to_string(),
    );

    // Orientation return of each individual loop.
    let mut loops_ok = true;
    let mut loop_witness = Vec::new();
    for k in 1..=g {
        let (ok, w) = traverse_single_loop(ctx, gens, &data.basics, &data.loops[k], &d_table, k)?;
        if !ok {
            loops_ok = false;
        }
        loop_witness.push(w);
    }
    checks.push_witness(
        "each loop L_k returns to its start in the same orientation class",
        loops_ok,
        loop_witness.join("; "),
    );

    // The horizontal boundary of e_g bounds vertically: its orbit
    // augmentation vanishes on every class, with replayable witnesses.
    let faces = data.e.boundary_h()?;
    let part = face_partition(ctx, gens, &faces)?;
    let aug = orbit_augmentation(&faces, &part)?;
    checks.push_witness(
        "orbit augmentation of d_h(e_g) vanishes on every class",
        aug.values().all(|v| v.is_zero()),
        format!("classes={}", aug.len()),
    );
    checks.push("orbit witnesses replay", part.replay_witnesses(ctx)?);

    notes.push(
        "lifting ledger: c_0 = e_g, b_0 = d_h(c_0) bounds vertically via c_1, and t = d_h(c_1) \
         is the next obstruction"
            .to_string(),
    );

    Ok(TransitionReport { checks, notes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::inversive::basic;

    fn setup(g: usize) -> (GenusContext, Generators) {
        let ctx = GenusContext::new(g).unwrap();
        let gens = Generators::new(&ctx).unwrap();
        (ctx, gens)
    }

    #[test]
    fn genus_one_chains_match_the_worked_example() {
        let (ctx, gens) = setup(1);
        let data = TransitionData::build(&ctx, &gens).unwrap();
        let b: Vec<Inversive> = (0..=2).map(|i| basic(&ctx, i).unwrap()).collect();

        // e_1 = 2 [A_0, A_2, A_1] = -2 on the sorted simplex.
        let mut e_expected = BiGradedChain::zero(2, 0);
        e_expected
            .add_term(
                OrientedSimplex::new(vec![b[0].clone(), b[1].clone(), b[2].clone()]),
                Vec::new(),
                -2,
            )
            .unwrap();
        assert_eq!(data.e, e_expected);

        // c_1 = [A_1,A_2] d_1 - [A_0,A_2] d_2 + [A_0,A_1] d_0.
        let mut c1_expected = BiGradedChain::zero(1, 1);
        for (idx, d, coef) in
            [([1usize, 2], 1usize, 1i64), ([0, 2], 2, -1), ([0, 1], 0, 1)]
        {
            c1_expected
                .add_term(
                    OrientedSimplex::new(vec![b[idx[0]].clone(), b[idx[1]].clone()]),
                    vec![data.d_arcs[d].clone()],
                    coef,
                )
                .unwrap();
        }
        assert_eq!(data.c1, c1_expected);

        // t = ([A_2]-[A_1]) d_1 + ([A_0]-[A_2]) d_2 + ([A_1]-[A_0]) d_0.
        let mut t_expected = BiGradedChain::zero(0, 1);
        for (v, d, coef) in [
            (2usize, 1usize, 1i64),
            (1, 1, -1),
            (0, 2, 1),
            (2, 2, -1),
            (1, 0, 1),
            (0, 0, -1),
        ] {
            t_expected
                .add_term(
                    OrientedSimplex::new(vec![b[v].clone()]),
                    vec![data.d_arcs[d].clone()],
                    coef,
                )
                .unwrap();
        }
        assert_eq!(data.t, t_expected);

        // L_0 = [A_2]d_1 + [A_0]d_2 + [A_1]d_0, L_1 = [A_1]d_1 + [A_2]d_2 + [A_0]d_0.
        let mut l0 = BiGradedChain::zero(0, 1);
        for (v, d) in [(2usize, 1usize), (0, 2), (1, 0)] {
            l0.add_term(OrientedSimplex::new(vec![b[v].clone()]), vec![data.d_arcs[d].clone()], 1)
                .unwrap();
        }
        let mut l1 = BiGradedChain::zero(0, 1);
        for (v, d) in [(1usize, 1usize), (2, 2), (0, 0)] {
            l1.add_term(OrientedSimplex::new(vec![b[v].clone()]), vec![data.d_arcs[d].clone()], 1)
                .unwrap();
        }
        assert_eq!(data.loops[0], l0);
        assert_eq!(data.loops[1], l1);
        assert_eq!(data.t, l0.sub(&l1).unwrap());
    }

    #[test]
    fn support_sizes() {
        for (g, want) in [(1usize, 6usize), (2, 20), (3, 42)] {
            let (ctx, gens) = setup(g);
            let data = TransitionData::build(&ctx, &gens).unwrap();
            assert_eq!(data.t.support_size(), want, "genus {g}");
        }
    }

    #[test]
    fn euler_chain_coefficient_is_two_up_to_genus_four() {
        for g in 1..=4 {
            let (ctx, gens) = setup(g);
            let data = TransitionData::build(&ctx, &gens).unwrap();
            assert_eq!(data.e.support_size(), 1);
            let coef = data.e.terms().next().unwrap().1;
            assert_eq!(coef.abs(), 2, "genus {g}");
        }
    }

    #[test]
    fn transition_report_passes() {
        for g in 1..=3 {
            let (ctx, gens) = setup(g);
            let report = verify_transition(&ctx, &gens).unwrap();
            for c in &report.checks.checks {
                assert!(c.pass, "genus {g} failed: {} ({:?})", c.check, c.witness);
            }
        }
    }
}
