//! Inversives: equivalence classes `{w, w^-1}` of nontrivial surface-group
//! elements, the vertex alphabet of every chain in this crate. Mapping
//! classes no longer act on the group once `w` is identified with `w^-1`,
//! but they still act on the set of inversives, and that action is all the
//! chain machinery needs.

use std::cmp::Ordering;
use std::fmt;

use crate::automorphism::Automorphism;
use crate::check::CheckList;
use crate::error::{Error, Result};
use crate::word::{GenusContext, ReducedWord};

/// The class `{w, w^-1}`, held by its canonical representative: the
/// shortlex-smaller of the normal forms of `w` and `w^-1`. Equality is
/// syntactic on the representative.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Inversive {
    canon: ReducedWord,
}

impl Inversive {
    pub fn canon(&self) -> &ReducedWord {
        &self.canon
    }

    pub fn serialize(&self) -> String {
        self.canon.serialize()
    }
}

impl PartialOrd for Inversive {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Inversive {
    fn cmp(&self, other: &Self) -> Ordering {
        self.canon.shortlex_cmp(&other.canon)
    }
}

impl fmt::Display for Inversive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canon.serialize())
    }
}

/// Class of a nontrivial word. The identity has no inversive; asking for
/// one is an error, never a sentinel.
pub fn inversive_of(ctx: &GenusContext, w: &ReducedWord) -> Result<Inversive> {
    if ctx.is_trivial(w) {
        return Err(Error::TrivialInversive);
    }
    let fwd = ctx.normal_form(w)?;
    let bwd = ctx.normal_form(&w.inverse())?;
    let canon = if fwd.shortlex_cmp(&bwd) == Ordering::Greater { bwd } else { fwd };
    Ok(Inversive { canon })
}

/// The distinguished inversive `A_i` of `a_i`, for `0 <= i <= 2g` (with
/// `a_{2g}` the derived word).
pub fn basic(ctx: &GenusContext, i: usize) -> Result<Inversive> {
    inversive_of(ctx, &ctx.generator_or_a2g(i)?)
}

/// All of `A_0 .. A_2g`, in index order.
pub fn basic_family(ctx: &GenusContext) -> Result<Vec<Inversive>> {
    (0..=ctx.rank()).map(|i| basic(ctx, i)).collect()
}

/// The induced action on inversives. Well defined because the class of the
/// image does not depend on which of `{w, w^-1}` is mapped.
pub fn act(ctx: &GenusContext, f: &Automorphism, x: &Inversive) -> Result<Inversive> {
    inversive_of(ctx, &f.apply(x.canon()))
}

/// Report on the action tables: the S-cycle, the T-cycle, each
/// characteristic class moving exactly one basic inversive down by one
/// index, and the halved order of the S-action.
#[derive(Clone, Debug)]
pub struct ActionReport {
    pub checks: CheckList,
}

pub fn verify_inversive_action(
    ctx: &GenusContext,
    gens: &crate::automorphism::Generators,
) -> Result<ActionReport> {
    let n = ctx.rank();
    let basics = basic_family(ctx)?;
    let mut checks = CheckList::new();

    let mut distinct = true;
    for i in 0..basics.len() {
        for j in i + 1..basics.len() {
            if basics[i] == basics[j] {
                distinct = false;
            }
        }
    }
    checks.push("the 2g+1 basic inversives are pairwise distinct", distinct);

    // S cycles A_0 .. A_2g-1 and moves A_2g off the basic family.
    let mut s_cycle = true;
    for i in 0..n {
        let img = act(ctx, &gens.s, &basics[i])?;
        if img != basics[(i + 1) % n] {
            s_cycle = false;
        }
    }
    checks.push("S cycles A_0 .. A_2g-1", s_cycle);
    let s_a2g = act(ctx, &gens.s, &basics[n])?;
    checks.push_witness(
        "S moves A_2g off the basic family",
        basics.iter().all(|b| *b != s_a2g),
        format!("S(A_2g) = {s_a2g}"),
    );

    // T cycles all of A_0 .. A_2g.
    let mut t_cycle = true;
    for i in 0..=n {
        let img = act(ctx, &gens.t, &basics[i])?;
        if img != basics[(i + 1) % (n + 1)] {
            t_cycle = false;
        }
    }
    checks.push("T cycles A_0 .. A_2g", t_cycle);

    // d_j sends A_j to A_{j-1}, fixes the basics with other indices, and
    // moves A_{j-1} off the basic family.
    let mut d_ok = true;
    let mut d_table = Vec::new();
    for j in 0..=n {
        let prev = (j + n) % (n + 1);
        let dj = &gens.d[j];
        let down = act(ctx, dj, &basics[j])?;
        if down != basics[prev] {
            d_ok = false;
        }
        let away = act(ctx, dj, &basics[prev])?;
        if basics.iter().any(|b| *b == away) {
            d_ok = false;
        }
        for (i, b) in basics.iter().enumerate() {
            if i == j || i == prev {
                continue;
            }
            if act(ctx, dj, b)? != *b {
                d_ok = false;
            }
        }
        d_table.push(format!("d_{j}: A_{j}->A_{prev}, A_{prev}->{away}, rest fixed"));
    }
    checks.push_witness(
        "d_j sends A_j to A_(j-1) and fixes the other basics",
        d_ok,
        d_table.join("; "),
    );

    // Order of the S-action on the basics is 2g, half the order of S.
    let mut action_order = None;
    for m in 1..=4 * ctx.genus() {
        let sm = gens.s.power(ctx, m as i64)?;
        if (0..n).all(|i| act(ctx, &sm, &basics[i]).map(|img| img == basics[i]).unwrap_or(false)) {
            action_order = Some(m);
            break;
        }
    }
    checks.push_witness(
        "order of the S-action on the basics = 2g",
        action_order == Some(2 * ctx.genus()),
        format!("action order = {action_order:?}, order(S) = 4g"),
    );

    Ok(ActionReport { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::Generators;
    use proptest::prelude::*;

    fn setup(g: usize) -> (GenusContext, Generators) {
        let ctx = GenusContext::new(g).unwrap();
        let gens = Generators::new(&ctx).unwrap();
        (ctx, gens)
    }

    #[test]
    fn inversive_identifies_inverses() {
        let (ctx, _) = setup(2);
        let a0 = ctx.generator(0).unwrap();
        assert_eq!(inversive_of(&ctx, &a0).unwrap(), inversive_of(&ctx, &a0.inverse()).unwrap());
        let conj = ctx.relator().concat(&a0);
        assert_eq!(inversive_of(&ctx, &conj).unwrap(), basic(&ctx, 0).unwrap());
        assert!(matches!(inversive_of(&ctx, &ReducedWord::empty()), Err(Error::TrivialInversive)));
        assert!(matches!(inversive_of(&ctx, ctx.relator()), Err(Error::TrivialInversive)));
    }

    #[test]
    fn basic_canon_at_genus_one() {
        let (ctx, _) = setup(1);
        // A_2 is the class of a_1^-1 a_0^-1; the canonical representative is
        // the inverse side, a_0 a_1.
        assert_eq!(basic(&ctx, 2).unwrap().canon(), &ReducedWord::parse("a0 a1").unwrap());
    }

    #[test]
    fn act_examples() {
        let (ctx, gens) = setup(2);
        let basics = basic_family(&ctx).unwrap();
        assert_eq!(act(&ctx, &gens.t, &basics[4]).unwrap(), basics[0]);
        assert_eq!(act(&ctx, &gens.d[4], &basics[4]).unwrap(), basics[3]);
        assert_eq!(act(&ctx, &gens.d[4], &basics[1]).unwrap(), basics[1]);
        // d_0 wraps: A_0 -> A_2g.
        assert_eq!(act(&ctx, &gens.d[0], &basics[0]).unwrap(), basics[4]);
    }

    #[test]
    fn action_is_functorial() {
        let (ctx, gens) = setup(2);
        let basics = basic_family(&ctx).unwrap();
        let fh = gens.d[2].compose(&ctx, &gens.t).unwrap();
        for b in &basics {
            let one = act(&ctx, &fh, b).unwrap();
            let two = act(&ctx, &gens.d[2], &act(&ctx, &gens.t, b).unwrap()).unwrap();
            assert_eq!(one, two);
            assert_eq!(act(&ctx, &gens.id, b).unwrap(), *b);
        }
    }

    #[test]
    fn action_report_passes() {
        for g in 1..=3 {
            let (ctx, gens) = setup(g);
            let report = verify_inversive_action(&ctx, &gens).unwrap();
            for c in &report.checks.checks {
                assert!(c.pass, "genus {g} failed: {} ({:?})", c.check, c.witness);
            }
        }
    }

    proptest! {
        // compare is a total order consistent with equality, and acting by
        // an automorphism and its inverse round-trips.
        #[test]
        fn order_is_total_and_consistent(
            xs in proptest::collection::vec((0usize..4, any::<bool>()), 1..5),
            ys in proptest::collection::vec((0usize..4, any::<bool>()), 1..5),
        ) {
            let ctx = GenusContext::new(2).unwrap();
            let wx = ReducedWord::from_letters(xs.iter().map(|&(i, inv)| crate::word::Letter::new(i, inv)));
            let wy = ReducedWord::from_letters(ys.iter().map(|&(i, inv)| crate::word::Letter::new(i, inv)));
            prop_assume!(!ctx.is_trivial(&wx) && !ctx.is_trivial(&wy));
            let ix = inversive_of(&ctx, &wx).unwrap();
            let iy = inversive_of(&ctx, &wy).unwrap();
            prop_assert_eq!(ix.cmp(&iy), iy.cmp(&ix).reverse());
            prop_assert_eq!(ix == iy, ix.cmp(&iy) == std::cmp::Ordering::Equal);
            let gens = Generators::new(&ctx).unwrap();
            let there = act(&ctx, &gens.t, &ix).unwrap();
            let back = act(&ctx, &gens.t.inverse(&ctx).unwrap(), &there).unwrap();
            prop_assert_eq!(back, ix);
        }
    }
}
