//! Words in the fundamental group of a closed genus-g surface, presented on
//! the free generators `a_0, ..., a_{2g-1}` subject to the single relation
//! `a_0 a_1 ... a_{2g-1} = a_{2g-1} ... a_1 a_0`.
//!
//! The relator `a_0 ... a_{2g-1} a_0^-1 ... a_{2g-1}^-1` has length `4g` and,
//! for g >= 2, no length-2 subword is repeated among the cyclic conjugates of
//! the relator and its inverse. Pieces therefore have length at most 1, the
//! presentation satisfies the C'(1/6) small-cancellation condition, and
//! Dehn's algorithm decides the word problem. Genus 1 degenerates to the
//! abelian group Z^2 and is handled by exponent sums.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A single generator or inverse generator, `a_i` or `a_i^-1`.
///
/// The derived element `a_{2g}` is *not* a letter; it abbreviates the word
/// `(a_0 ... a_{2g-1})^-1` and is expanded on sight.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    index: u32,
    inv: bool,
}

impl Letter {
    pub fn new(index: usize, inv: bool) -> Self {
        Letter { index: index as u32, inv }
    }

    pub fn index(&self) -> usize {
        self.index as usize
    }

    pub fn is_inverse(&self) -> bool {
        self.inv
    }

    pub fn sign(&self) -> i64 {
        if self.inv {
            -1
        } else {
            1
        }
    }

    pub fn inverse(&self) -> Letter {
        Letter { index: self.index, inv: !self.inv }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.index == other.index && self.inv != other.inv
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inv {
            write!(f, "A{}", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// A freely reduced word. The no-adjacent-cancellation invariant holds for
/// every value of this type; all constructors reduce.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ReducedWord {
    letters: Vec<Letter>,
}

impl ReducedWord {
    pub fn empty() -> Self {
        ReducedWord { letters: Vec::new() }
    }

    /// Free reduction of an arbitrary letter sequence.
    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last().is_some_and(|top| top.cancels(&l)) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        ReducedWord { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> ReducedWord {
        ReducedWord { letters: self.letters.iter().rev().map(Letter::inverse).collect() }
    }

    /// Product in the free group: concatenate and reduce.
    pub fn concat(&self, other: &ReducedWord) -> ReducedWord {
        ReducedWord::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    /// Shortlex comparison: length first, then letterwise with
    /// `a_0 < a_0^-1 < a_1 < a_1^-1 < ...`.
    pub fn shortlex_cmp(&self, other: &ReducedWord) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }

    /// Wire form: `a<i>` for generators, `A<i>` for inverses, space
    /// separated; the empty word is `1`.
    pub fn serialize(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        parts.join(" ")
    }

    pub fn parse(text: &str) -> Result<ReducedWord> {
        let text = text.trim();
        if text == "1" || text.is_empty() {
            return Ok(ReducedWord::empty());
        }
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (head, rest) = tok.split_at(1);
            let inv = match head {
                "a" => false,
                "A" => true,
                _ => return Err(Error::InvalidConfig(format!("bad letter token `{tok}`"))),
            };
            let index: usize = rest
                .parse()
                .map_err(|_| Error::InvalidConfig(format!("bad letter token `{tok}`")))?;
            letters.push(Letter::new(index, inv));
        }
        Ok(ReducedWord::from_letters(letters))
    }
}

impl PartialOrd for ReducedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ReducedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.shortlex_cmp(other)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// Caps that turn a configuration that is too small into a loud error
/// instead of a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    /// Maximum word length admitted to the canonical-form search.
    pub max_word_len: usize,
    /// Depth cap for orbit enumeration and connection searches.
    pub orbit_depth: usize,
}

impl Limits {
    pub fn for_genus(genus: usize) -> Self {
        // Connection searches between simplices on the basic inversives
        // have diameter about 2g+2 under the characteristic classes and T.
        Limits { max_word_len: 8 * genus + 8, orbit_depth: 2 * genus + 4 }
    }
}

// Canonical-form search breadth guard; words this engine meets stay far
// below it, and hitting it is a configuration error, not a wrong answer.
const CLOSURE_CAP: usize = 100_000;

/// Presentation data for a fixed genus: the relator, the cyclic conjugates
/// of the relator and its inverse used for Dehn matching, and search caps.
///
/// Values are immutable after construction and every operation is pure, so a
/// context can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct GenusContext {
    genus: usize,
    relator: ReducedWord,
    cyclic_table: Vec<Vec<Letter>>,
    limits: Limits,
}

impl GenusContext {
    pub fn new(genus: usize) -> Result<Self> {
        Self::with_limits(genus, Limits::for_genus(genus))
    }

    pub fn with_limits(genus: usize, limits: Limits) -> Result<Self> {
        if genus < 1 {
            return Err(Error::InvalidConfig("genus must be >= 1".into()));
        }
        if limits.max_word_len == 0 || limits.orbit_depth == 0 {
            return Err(Error::InvalidConfig("caps must be positive".into()));
        }
        let n = 2 * genus;
        let mut letters = Vec::with_capacity(4 * genus);
        for i in 0..n {
            letters.push(Letter::new(i, false));
        }
        for i in 0..n {
            letters.push(Letter::new(i, true));
        }
        let relator = ReducedWord::from_letters(letters);
        debug_assert_eq!(relator.len(), 4 * genus);

        let mut cyclic_table = Vec::with_capacity(8 * genus);
        for base in [relator.letters().to_vec(), relator.inverse().letters().to_vec()] {
            for shift in 0..base.len() {
                let mut rot = base[shift..].to_vec();
                rot.extend_from_slice(&base[..shift]);
                cyclic_table.push(rot);
            }
        }
        let distinct: BTreeSet<&Vec<Letter>> = cyclic_table.iter().collect();
        if distinct.len() != 8 * genus {
            return Err(Error::InvalidConfig("cyclic conjugates of the relator are not distinct".into()));
        }

        let ctx = GenusContext { genus, relator, cyclic_table, limits };
        if genus >= 2 {
            ctx.assert_piece_bound()?;
        }
        Ok(ctx)
    }

    /// C'(1/6) witness: every length-2 subword occurs exactly once across
    /// the cyclic conjugates, so pieces have length at most 1 < 4g/6.
    fn assert_piece_bound(&self) -> Result<()> {
        let mut seen = BTreeSet::new();
        for cyc in &self.cyclic_table {
            let pair = (cyc[0], cyc[1]);
            if !seen.insert(pair) {
                return Err(Error::InvalidConfig(format!(
                    "piece bound violated: length-2 subword {} {} repeats",
                    pair.0, pair.1
                )));
            }
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// Number of free generators, `2g`.
    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn relator(&self) -> &ReducedWord {
        &self.relator
    }

    pub fn check_letter(&self, l: Letter) -> Result<()> {
        if l.index() >= self.rank() {
            return Err(Error::LetterOutOfRange {
                index: l.index(),
                genus: self.genus,
                limit: self.rank(),
            });
        }
        Ok(())
    }

    /// Validated free reduction of a raw letter sequence.
    pub fn word_from_letters(&self, letters: &[Letter]) -> Result<ReducedWord> {
        for &l in letters {
            self.check_letter(l)?;
        }
        Ok(ReducedWord::from_letters(letters.iter().copied()))
    }

    /// The generator `a_i` as a word, `0 <= i < 2g`.
    pub fn generator(&self, i: usize) -> Result<ReducedWord> {
        let l = Letter::new(i, false);
        self.check_letter(l)?;
        Ok(ReducedWord::from_letters([l]))
    }

    /// The derived element `a_{2g} = (a_0 a_1 ... a_{2g-1})^-1`.
    pub fn a2g_word(&self) -> ReducedWord {
        ReducedWord::from_letters((0..self.rank()).rev().map(|i| Letter::new(i, true)))
    }

    /// The generator `a_i` for `0 <= i <= 2g`, with `a_{2g}` expanded to its
    /// defining word.
    pub fn generator_or_a2g(&self, i: usize) -> Result<ReducedWord> {
        if i == self.rank() {
            Ok(self.a2g_word())
        } else {
            self.generator(i)
        }
    }

    /// Signed exponent sums of `w` per generator; the image of `w` in the
    /// abelianization Z^{2g}.
    pub fn exponent_vector(&self, w: &ReducedWord) -> Vec<i64> {
        let mut v = vec![0i64; self.rank()];
        for l in w.letters() {
            v[l.index()] += l.sign();
        }
        v
    }

    /// One pass of Dehn's algorithm: find a subword that is more than half
    /// of some cyclic conjugate of the relator or its inverse and replace it
    /// with the shorter complementary half. Returns `None` when no move
    /// applies.
    fn dehn_step(&self, w: &ReducedWord) -> Option<ReducedWord> {
        let half = 2 * self.genus;
        let rlen = 4 * self.genus;
        let letters = w.letters();
        let mut best: Option<(usize, usize, usize)> = None; // (pos, cyc idx, match len)
        for pos in 0..letters.len() {
            for (ci, cyc) in self.cyclic_table.iter().enumerate() {
                let mut m = 0;
                while m < rlen && pos + m < letters.len() && letters[pos + m] == cyc[m] {
                    m += 1;
                }
                if m > half && best.map_or(true, |(_, _, bl)| m > bl) {
                    best = Some((pos, ci, m));
                }
            }
        }
        let (pos, ci, m) = best?;
        // cyc = s v with s the matched prefix; s = v^-1 in the group.
        let cyc = &self.cyclic_table[ci];
        let complement_inv: Vec<Letter> = cyc[m..].iter().rev().map(Letter::inverse).collect();
        let new = letters[..pos]
            .iter()
            .copied()
            .chain(complement_inv)
            .chain(letters[pos + m..].iter().copied());
        Some(ReducedWord::from_letters(new))
    }

    /// Dehn reduction for genus >= 2. The result is equal to `w` in the
    /// group, contains no more-than-half relator subword, and is no longer
    /// than `w`.
    pub fn dehn_reduce(&self, w: &ReducedWord) -> Result<ReducedWord> {
        if self.genus == 1 {
            return Err(Error::DehnAtGenusOne);
        }
        Ok(self.dehn_reduce_inner(w))
    }

    fn dehn_reduce_inner(&self, w: &ReducedWord) -> ReducedWord {
        let mut cur = w.clone();
        while let Some(next) = self.dehn_step(&cur) {
            debug_assert!(next.len() < cur.len());
            cur = next;
        }
        cur
    }

    /// Word problem: does `w` represent the identity?
    ///
    /// Genus 1 is Z^2, decided by exponent sums. For genus >= 2 the
    /// presentation is C'(1/6) and Greendlinger's lemma makes Dehn reduction
    /// complete: `w` is trivial iff it Dehn-reduces to the empty word.
    pub fn is_trivial(&self, w: &ReducedWord) -> bool {
        if self.genus == 1 {
            self.exponent_vector(w).iter().all(|&e| e == 0)
        } else {
            self.dehn_reduce_inner(w).is_empty()
        }
    }

    /// Group equality of two words.
    pub fn equal(&self, u: &ReducedWord, v: &ReducedWord) -> bool {
        self.is_trivial(&u.concat(&v.inverse()))
    }

    /// Canonical representative: minimal length, shortlex-least among the
    /// minimal-length representatives.
    ///
    /// Genus >= 2: Dehn-reduce to geodesic length, then close under
    /// replacements of an exactly-half relator subword by the inverse of its
    /// complementary half (a length-preserving move), and take the shortlex
    /// minimum. Should a replacement ever shrink the word, the search
    /// restarts from the shorter word, so the result is geodesic regardless.
    pub fn normal_form(&self, w: &ReducedWord) -> Result<ReducedWord> {
        self.check_cap(w.len(), "normal form input")?;
        if self.genus == 1 {
            return Ok(self.abelian_normal_form(w));
        }
        let mut start = self.dehn_reduce_inner(w);
        'restart: loop {
            self.check_cap(start.len(), "canonical form search")?;
            let half = 2 * self.genus;
            let mut seen: BTreeSet<ReducedWord> = BTreeSet::new();
            let mut queue: VecDeque<ReducedWord> = VecDeque::new();
            seen.insert(start.clone());
            queue.push_back(start.clone());
            while let Some(u) = queue.pop_front() {
                if seen.len() > CLOSURE_CAP {
                    return Err(Error::SearchExhausted {
                        depth: CLOSURE_CAP,
                        target: "canonical form closure".into(),
                    });
                }
                let letters = u.letters();
                if letters.len() < half {
                    continue;
                }
                for pos in 0..=(letters.len() - half) {
                    for cyc in &self.cyclic_table {
                        if letters[pos..pos + half] != cyc[..half] {
                            continue;
                        }
                        let complement_inv: Vec<Letter> =
                            cyc[half..].iter().rev().map(Letter::inverse).collect();
                        let v = ReducedWord::from_letters(
                            letters[..pos]
                                .iter()
                                .copied()
                                .chain(complement_inv)
                                .chain(letters[pos + half..].iter().copied()),
                        );
                        if v.len() < start.len() {
                            start = self.dehn_reduce_inner(&v);
                            continue 'restart;
                        }
                        if v.len() == start.len() && seen.insert(v.clone()) {
                            queue.push_back(v);
                        }
                    }
                }
            }
            return Ok(seen.into_iter().next().expect("closure contains the start word"));
        }
    }

    fn abelian_normal_form(&self, w: &ReducedWord) -> ReducedWord {
        let v = self.exponent_vector(w);
        let mut letters = Vec::new();
        for (i, &e) in v.iter().enumerate() {
            let inv = e < 0;
            for _ in 0..e.unsigned_abs() {
                letters.push(Letter::new(i, inv));
            }
        }
        ReducedWord::from_letters(letters)
    }

    fn check_cap(&self, len: usize, stage: &'static str) -> Result<()> {
        // The cap applies to the canonical search, not to Dehn reduction,
        // which only shortens. Inputs may exceed the cap transiently.
        if stage == "normal form input" {
            return Ok(());
        }
        if len > self.limits.max_word_len {
            return Err(Error::WordLengthCap { len, cap: self.limits.max_word_len, stage });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(g: usize) -> GenusContext {
        GenusContext::new(g).unwrap()
    }

    fn w(s: &str) -> ReducedWord {
        ReducedWord::parse(s).unwrap()
    }

    #[test]
    fn free_reduction_examples() {
        assert!(w("a0 A0").is_empty());
        assert_eq!(w("a0 a1 A1 a0"), w("a0 a0"));
        let c = ctx(2);
        let r = c.relator().clone();
        assert_eq!(ReducedWord::from_letters(r.letters().iter().copied()), r);
        assert_eq!(r.len(), 8);
    }

    #[test]
    fn multiply_and_invert() {
        assert!(w("a0").concat(&w("A0")).is_empty());
        assert_eq!(w("a0 a1").concat(&w("A1 a2")), w("a0 a2"));
        let u = w("a0 a1 A2");
        assert_eq!(u.concat(&ReducedWord::empty()), u);
        assert_eq!(w("a0 a1").inverse(), w("A1 A0"));
        assert!(ReducedWord::empty().inverse().is_empty());
        assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn a2g_examples() {
        assert_eq!(ctx(1).a2g_word(), w("A1 A0"));
        assert_eq!(ctx(2).a2g_word(), w("A3 A2 A1 A0"));
        let c = ctx(3);
        let prod = (0..6).fold(ReducedWord::empty(), |acc, i| acc.concat(&c.generator(i).unwrap()));
        assert!(c.is_trivial(&c.a2g_word().concat(&prod)));
        assert_eq!(c.a2g_word().inverse(), prod);
    }

    #[test]
    fn dehn_reduce_examples() {
        let c = ctx(2);
        assert!(c.dehn_reduce(c.relator()).unwrap().is_empty());
        // A prefix of length 2g+1 rewrites to the inverted complement of
        // length 2g-1.
        let prefix = ReducedWord::from_letters(c.relator().letters()[..5].iter().copied());
        let reduced = c.dehn_reduce(&prefix).unwrap();
        assert_eq!(reduced.len(), 3);
        assert!(c.equal(&prefix, &reduced));
        let a0 = w("a0");
        assert_eq!(c.dehn_reduce(&a0).unwrap(), a0);
        assert!(matches!(ctx(1).dehn_reduce(&a0), Err(Error::DehnAtGenusOne)));
    }

    #[test]
    fn triviality_and_equality() {
        for g in 1..=3 {
            let c = ctx(g);
            assert!(c.is_trivial(c.relator()));
            assert!(!c.is_trivial(&w("a0")));
            let fwd = (0..c.rank())
                .fold(ReducedWord::empty(), |acc, i| acc.concat(&c.generator(i).unwrap()));
            let bwd = (0..c.rank())
                .rev()
                .fold(ReducedWord::empty(), |acc, i| acc.concat(&c.generator(i).unwrap()));
            assert!(c.equal(&fwd, &bwd));
            assert!(!c.equal(&w("a0"), &w("a1")));
        }
        // Genus 1 relation is commutativity.
        assert!(ctx(1).is_trivial(&w("a0 a1 A0 A1")));
    }

    #[test]
    fn normal_form_examples() {
        let c = ctx(2);
        let ra0 = c.relator().concat(&w("a0"));
        assert_eq!(c.normal_form(&ra0).unwrap(), w("a0"));
        assert_eq!(ctx(1).normal_form(&w("a1 a0")).unwrap(), w("a0 a1"));
        // Half of the relator and the inverted other half are the same
        // element; the normal form must coincide.
        let first_half = ReducedWord::from_letters(c.relator().letters()[..4].iter().copied());
        let second_half =
            ReducedWord::from_letters(c.relator().letters()[4..].iter().copied()).inverse();
        assert!(c.equal(&first_half, &second_half));
        assert_eq!(c.normal_form(&first_half).unwrap(), c.normal_form(&second_half).unwrap());
    }

    #[test]
    fn cyclic_table_has_8g_entries() {
        for g in 1..=4 {
            assert_eq!(ctx(g).cyclic_table.len(), 8 * g);
        }
    }

    #[test]
    fn dehn_preserves_exponent_sums() {
        let c = ctx(2);
        let word = c.relator().concat(&w("a0 a1 a2")).concat(&c.relator().inverse());
        let red = c.dehn_reduce(&word).unwrap();
        assert_eq!(c.exponent_vector(&word), c.exponent_vector(&red));
        assert!(red.len() <= word.len());
    }

    #[test]
    fn serialization_round_trip() {
        let u = w("a0 A3 a2 a2");
        assert_eq!(ReducedWord::parse(&u.serialize()).unwrap(), u);
        assert_eq!(ReducedWord::empty().serialize(), "1");
        assert_eq!(ReducedWord::parse("1").unwrap(), ReducedWord::empty());
    }

    proptest! {
        // Free reduction is confluent: reducing any interleaved
        // concatenation agrees with the stack reduction applied to the
        // already-reduced parts.
        #[test]
        fn free_reduction_confluent(raw in proptest::collection::vec((0usize..4, any::<bool>()), 0..40)) {
            let letters: Vec<Letter> = raw.iter().map(|&(i, inv)| Letter::new(i, inv)).collect();
            let direct = ReducedWord::from_letters(letters.iter().copied());
            // Reduce in two arbitrary stages: the split point must not matter.
            for cut in [letters.len() / 3, letters.len() / 2] {
                let left = ReducedWord::from_letters(letters[..cut].iter().copied());
                let right = ReducedWord::from_letters(letters[cut..].iter().copied());
                prop_assert_eq!(left.concat(&right), direct.clone());
            }
        }

        // Equality is an equivalence relation on random words and normal
        // forms are canonical on relator-conjugate products.
        #[test]
        fn equal_is_equivalence_and_normal_forms_agree(
            raw in proptest::collection::vec((0usize..4, any::<bool>()), 1..6),
            conj in proptest::collection::vec((0usize..4, any::<bool>()), 0..3),
            invert_rel in any::<bool>(),
        ) {
            let c = ctx(2);
            let u = ReducedWord::from_letters(raw.iter().map(|&(i, inv)| Letter::new(i, inv)));
            let conjugator = ReducedWord::from_letters(conj.iter().map(|&(i, inv)| Letter::new(i, inv)));
            let rel = if invert_rel { c.relator().inverse() } else { c.relator().clone() };
            let stuffed = conjugator
                .concat(&rel)
                .concat(&conjugator.inverse())
                .concat(&u);
            prop_assert!(c.equal(&u, &u));
            prop_assert!(c.equal(&u, &stuffed));
            prop_assert!(c.equal(&stuffed, &u));
            prop_assert_eq!(c.normal_form(&u).unwrap(), c.normal_form(&stuffed).unwrap());
        }
    }
}
