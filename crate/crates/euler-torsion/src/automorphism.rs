//! Mapping classes as relator-preserving automorphisms of the surface
//! group: the finite-order generators S (order 4g) and T (order 2g+1), the
//! characteristic classes `d_j = T^{-k} (S^-1 T) T^k` with `j = 2g-k`, the
//! cycling automorphism `w`, composition, exact inversion through formal
//! S/T-expressions, orders, and the abelianization representation into
//! SL(2g, Z).

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::check::CheckList;
use crate::error::{mul_exact, Error, Result};
use crate::word::{GenusContext, Letter, ReducedWord};

/// One formal letter over the generating set: `S`, `T`, or an inverse.
/// Serialized as `S s T t` with lowercase meaning inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GenLetter {
    S,
    SInv,
    T,
    TInv,
}

impl GenLetter {
    pub fn inverse(self) -> GenLetter {
        match self {
            GenLetter::S => GenLetter::SInv,
            GenLetter::SInv => GenLetter::S,
            GenLetter::T => GenLetter::TInv,
            GenLetter::TInv => GenLetter::T,
        }
    }

    fn as_char(self) -> char {
        match self {
            GenLetter::S => 'S',
            GenLetter::SInv => 's',
            GenLetter::T => 'T',
            GenLetter::TInv => 't',
        }
    }
}

/// A formal word in S and T recording how an automorphism was built.
/// Composition order matches function application: the rightmost letter
/// acts first.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenExpr(pub Vec<GenLetter>);

impl GenExpr {
    pub fn empty() -> Self {
        GenExpr(Vec::new())
    }

    pub fn concat(&self, other: &GenExpr) -> GenExpr {
        GenExpr(self.0.iter().chain(other.0.iter()).copied().collect())
    }

    pub fn inverse(&self) -> GenExpr {
        GenExpr(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn repeat(&self, n: usize) -> GenExpr {
        let mut v = Vec::with_capacity(self.0.len() * n);
        for _ in 0..n {
            v.extend_from_slice(&self.0);
        }
        GenExpr(v)
    }

    pub fn serialize(&self) -> String {
        if self.0.is_empty() {
            "1".to_string()
        } else {
            self.0.iter().map(|l| l.as_char()).collect()
        }
    }
}

impl fmt::Display for GenExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

/// A mapping class, stored as the images of the generators `a_0..a_{2g-1}`
/// (kept in normal form) plus, when available, the formal S/T-expression
/// that produced it. The expression enables exact inversion; the images
/// alone do not.
///
/// Equality, ordering and hashing look only at the images, so two builds of
/// the same mapping class coincide regardless of provenance.
#[derive(Clone, Debug)]
pub struct Automorphism {
    images: Vec<ReducedWord>,
    expr: Option<GenExpr>,
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Automorphism {}

impl PartialOrd for Automorphism {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Automorphism {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl Hash for Automorphism {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

// Images of the four base letters, as tables indexed by generator.
fn base_image(ctx: &GenusContext, letter: GenLetter, i: usize) -> ReducedWord {
    let n = ctx.rank();
    let pos = |j: usize| ReducedWord::from_letters([Letter::new(j, false)]);
    let neg = |j: usize| ReducedWord::from_letters([Letter::new(j, true)]);
    match letter {
        GenLetter::S => {
            if i < n - 1 {
                pos(i + 1)
            } else {
                neg(0)
            }
        }
        GenLetter::SInv => {
            if i == 0 {
                neg(n - 1)
            } else {
                pos(i - 1)
            }
        }
        GenLetter::T => {
            if i < n - 1 {
                pos(i + 1)
            } else {
                ctx.a2g_word()
            }
        }
        GenLetter::TInv => {
            if i == 0 {
                ctx.a2g_word()
            } else {
                pos(i - 1)
            }
        }
    }
}

fn apply_base(ctx: &GenusContext, letter: GenLetter, w: &ReducedWord) -> ReducedWord {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len() * 2);
    for l in w.letters() {
        let img = base_image(ctx, letter, l.index());
        if l.is_inverse() {
            out.extend(img.inverse().letters().iter().copied());
        } else {
            out.extend(img.letters().iter().copied());
        }
    }
    shorten(ctx, &ReducedWord::from_letters(out))
}

// Keep intermediate words short: Dehn reduction (or the abelian collapse at
// genus 1) preserves the group element.
fn shorten(ctx: &GenusContext, w: &ReducedWord) -> ReducedWord {
    if ctx.genus() == 1 {
        ctx.normal_form(w).expect("abelian normal form cannot exceed caps")
    } else {
        ctx.dehn_reduce(w).expect("genus >= 2")
    }
}

impl Automorphism {
    /// Build from generator images after validating relator preservation.
    pub fn from_images(
        ctx: &GenusContext,
        images: Vec<ReducedWord>,
        expr: Option<GenExpr>,
    ) -> Result<Self> {
        if images.len() != ctx.rank() {
            return Err(Error::InvalidConfig(format!(
                "expected {} generator images, got {}",
                ctx.rank(),
                images.len()
            )));
        }
        let mut normalized = Vec::with_capacity(images.len());
        for img in &images {
            for &l in img.letters() {
                ctx.check_letter(l)?;
            }
            normalized.push(ctx.normal_form(img)?);
        }
        let auto = Automorphism { images: normalized, expr };
        let relator_image = auto.apply(ctx.relator());
        if !ctx.is_trivial(&relator_image) {
            return Err(Error::InvalidConfig(format!(
                "images do not preserve the relator: r maps to {}",
                relator_image
            )));
        }
        Ok(auto)
    }

    /// Evaluate a formal S/T-word, rightmost letter first.
    pub fn from_expr(ctx: &GenusContext, expr: GenExpr) -> Result<Self> {
        let mut images: Vec<ReducedWord> =
            (0..ctx.rank()).map(|i| ctx.generator(i).expect("index in range")).collect();
        for &letter in expr.0.iter().rev() {
            for img in images.iter_mut() {
                *img = apply_base(ctx, letter, img);
            }
        }
        Automorphism::from_images(ctx, images, Some(expr))
    }

    pub fn identity(ctx: &GenusContext) -> Self {
        let images = (0..ctx.rank()).map(|i| ctx.generator(i).expect("index in range")).collect();
        Automorphism { images, expr: Some(GenExpr::empty()) }
    }

    pub fn images(&self) -> &[ReducedWord] {
        &self.images
    }

    pub fn expr(&self) -> Option<&GenExpr> {
        self.expr.as_ref()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, img)| img.letters() == [Letter::new(i, false)])
    }

    /// Image of an arbitrary word; the action is homomorphic and the result
    /// freely reduced.
    pub fn apply(&self, w: &ReducedWord) -> ReducedWord {
        let mut out: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.index()];
            if l.is_inverse() {
                out.extend(img.inverse().letters().iter().copied());
            } else {
                out.extend(img.letters().iter().copied());
            }
        }
        ReducedWord::from_letters(out)
    }

    /// Composite `self . other`: `other` acts first. The abelianization is
    /// product-preserving in the same order.
    pub fn compose(&self, ctx: &GenusContext, other: &Automorphism) -> Result<Automorphism> {
        let images: Vec<ReducedWord> =
            other.images.iter().map(|img| shorten(ctx, &self.apply(img))).collect();
        let expr = match (&self.expr, &other.expr) {
            (Some(a), Some(b)) => Some(a.concat(b)),
            _ => None,
        };
        Automorphism::from_images(ctx, images, expr)
    }

    /// n-fold composite. Negative powers require a formal expression.
    pub fn power(&self, ctx: &GenusContext, n: i64) -> Result<Automorphism> {
        if n == 0 {
            return Ok(Automorphism::identity(ctx));
        }
        if n < 0 {
            let expr = self.expr.as_ref().ok_or(Error::NegativePowerWithoutExpr)?;
            return Automorphism::from_expr(ctx, expr.inverse().repeat(n.unsigned_abs() as usize));
        }
        match &self.expr {
            Some(expr) => Automorphism::from_expr(ctx, expr.repeat(n as usize)),
            None => {
                let mut acc = self.clone();
                for _ in 1..n {
                    acc = self.compose(ctx, &acc)?;
                }
                Ok(acc)
            }
        }
    }

    /// Exact inverse through the formal expression.
    pub fn inverse(&self, ctx: &GenusContext) -> Result<Automorphism> {
        self.power(ctx, -1)
    }

    /// Least n <= cap with `self^n = id`, if any.
    pub fn order(&self, ctx: &GenusContext, cap: usize) -> Result<Option<usize>> {
        let id = Automorphism::identity(ctx);
        let mut acc = self.clone();
        for n in 1..=cap {
            if acc == id {
                return Ok(Some(n));
            }
            acc = self.compose(ctx, &acc)?;
        }
        Ok(None)
    }

    /// Generator-wise equality of mapping classes. Images are kept in
    /// normal form, so this is the word problem evaluated once per
    /// generator at construction time.
    pub fn equal_auto(&self, other: &Automorphism) -> bool {
        self == other
    }

    /// Exponent-sum matrix on H_1: column i is the exponent vector of the
    /// image of `a_i`. Errors if the determinant is not 1, which would mean
    /// a broken automorphism.
    pub fn abelianization(&self, ctx: &GenusContext) -> Result<SlMatrix> {
        let n = ctx.rank();
        let mut m = SlMatrix::zero(n);
        for (i, img) in self.images.iter().enumerate() {
            let col = ctx.exponent_vector(img);
            for (r, &e) in col.iter().enumerate() {
                m.set(r, i, e);
            }
        }
        let det = m.det()?;
        if det != 1 {
            return Err(Error::DeterminantNotOne { det });
        }
        Ok(m)
    }

    /// Wire form: the 2g image words plus the optional expression.
    pub fn serialize(&self) -> String {
        let images: Vec<String> = self.images.iter().map(|w| w.serialize()).collect();
        match &self.expr {
            Some(e) => format!("[{}] expr={}", images.join(","), e.serialize()),
            None => format!("[{}]", images.join(",")),
        }
    }
}

/// Exact integer square matrix with determinant checks; the target of the
/// abelianization representation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SlMatrix {
    n: usize,
    a: Vec<i64>,
}

impl SlMatrix {
    pub fn zero(n: usize) -> Self {
        SlMatrix { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SlMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        let mut m = SlMatrix::zero(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n);
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.a[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.a[r * self.n + c] = v;
    }

    pub fn mul(&self, other: &SlMatrix) -> Result<SlMatrix> {
        assert_eq!(self.n, other.n);
        let mut out = SlMatrix::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                let mut acc: i64 = 0;
                for k in 0..self.n {
                    acc = crate::error::add_exact(acc, mul_exact(self.get(r, k), other.get(k, c))?)?;
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<i64> {
        let n = self.n;
        if n == 0 {
            return Ok(1);
        }
        let mut m: Vec<i128> = self.a.iter().map(|&v| v as i128).collect();
        let mut sign: i128 = 1;
        let mut prev: i128 = 1;
        for k in 0..n - 1 {
            if m[k * n + k] == 0 {
                let swap = (k + 1..n).find(|&r| m[r * n + k] != 0);
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            m.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return Ok(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[i * n + j]
                        .checked_mul(m[k * n + k])
                        .and_then(|x| {
                            m[i * n + k].checked_mul(m[k * n + j]).and_then(|y| x.checked_sub(y))
                        })
                        .ok_or(Error::Overflow)?;
                    m[i * n + j] = num / prev;
                }
                m[i * n + k] = 0;
            }
            prev = m[k * n + k];
        }
        let det = sign * m[(n - 1) * n + (n - 1)];
        i64::try_from(det).map_err(|_| Error::Overflow)
    }

    pub fn serialize(&self) -> String {
        let rows: Vec<String> = (0..self.n)
            .map(|r| {
                let cells: Vec<String> = (0..self.n).map(|c| self.get(r, c).to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// The standard mapping classes for a genus, built once and shared.
#[derive(Clone, Debug)]
pub struct Generators {
    pub id: Automorphism,
    pub s: Automorphism,
    pub t: Automorphism,
    /// d_0 .. d_{2g}, indexed by j.
    pub d: Vec<Automorphism>,
    pub w: Automorphism,
}

impl Generators {
    pub fn new(ctx: &GenusContext) -> Result<Self> {
        Ok(Generators {
            id: Automorphism::identity(ctx),
            s: gen_s(ctx)?,
            t: gen_t(ctx)?,
            d: (0..=ctx.rank()).map(|j| gen_d(ctx, j)).collect::<Result<_>>()?,
            w: gen_w(ctx)?,
        })
    }
}

/// S: `a_i -> a_{i+1}` for `i <= 2g-2`, `a_{2g-1} -> a_0^-1`. Order 4g.
pub fn gen_s(ctx: &GenusContext) -> Result<Automorphism> {
    Automorphism::from_expr(ctx, GenExpr(vec![GenLetter::S]))
}

/// T: `a_i -> a_{i+1}` for `i <= 2g-2`, `a_{2g-1} -> a_{2g}`. Order 2g+1.
pub fn gen_t(ctx: &GenusContext) -> Result<Automorphism> {
    Automorphism::from_expr(ctx, GenExpr(vec![GenLetter::T]))
}

/// Characteristic class `d_j = T^{-k} (S^-1 T) T^k` with `j = 2g - k`.
/// Sends the inversive `A_j` to `A_{j-1}` (indices mod 2g+1) and fixes the
/// other basic inversives.
pub fn gen_d(ctx: &GenusContext, j: usize) -> Result<Automorphism> {
    if j > ctx.rank() {
        return Err(Error::InvalidConfig(format!(
            "characteristic index {j} out of range 0..={}",
            ctx.rank()
        )));
    }
    let k = ctx.rank() - j;
    let mut letters = Vec::with_capacity(2 * k + 2);
    letters.extend(std::iter::repeat(GenLetter::TInv).take(k));
    letters.push(GenLetter::SInv);
    letters.push(GenLetter::T);
    letters.extend(std::iter::repeat(GenLetter::T).take(k));
    Automorphism::from_expr(ctx, GenExpr(letters))
}

/// The automorphism `w`: cycles `a_0 -> a_1 -> ... -> a_{2g-2} -> a_0` and
/// sends `a_{2g-1}` to `a_0^-1 a_{2g-1} a_0^-1`. Satisfies
/// `w^{2g-1} = d_{2g}^2`.
pub fn gen_w(ctx: &GenusContext) -> Result<Automorphism> {
    let n = ctx.rank();
    let mut images = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let target = if i == n - 2 { 0 } else { i + 1 };
        images.push(ctx.generator(target)?);
    }
    let a0_inv = ctx.generator(0)?.inverse();
    images.push(a0_inv.concat(&ctx.generator(n - 1)?).concat(&a0_inv));
    Automorphism::from_images(ctx, images, None)
}

/// Report for the generator-and-relation identities: orders of S and T, the
/// telescoped product of the characteristic classes, their action on the
/// generators, the commutation pattern, and the `w` identities.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub checks: CheckList,
    pub notes: Vec<String>,
}

pub fn verify_identities(ctx: &GenusContext, gens: &Generators) -> Result<IdentityReport> {
    let g = ctx.genus();
    let n = ctx.rank();
    let mut checks = CheckList::new();
    let mut notes = Vec::new();

    let order_s = gens.s.order(ctx, 8 * g)?;
    checks.push_witness(
        "order(S) = 4g",
        order_s == Some(4 * g),
        format!("order(S) = {order_s:?}"),
    );
    let order_t = gens.t.order(ctx, 8 * g)?;
    checks.push_witness(
        "order(T) = 2g+1",
        order_t == Some(2 * g + 1),
        format!("order(T) = {order_t:?}"),
    );

    // P = d_2g d_2g-1 ... d_0 telescopes to S^-(2g+1).
    let mut p = gens.d[n].clone();
    for j in (0..n).rev() {
        p = p.compose(ctx, &gens.d[j])?;
    }
    let s_neg = gens.s.power(ctx, -((2 * g + 1) as i64))?;
    checks.push("product d_2g..d_0 = S^-(2g+1)", p.equal_auto(&s_neg));
    let s_inv = gens.s.power(ctx, -1)?;
    let claims_s_inv = p.equal_auto(&s_inv);
    notes.push(format!(
        "the telescoped product d_2g..d_0 equals S^-(2g+1); direct comparison with S^-1 \
         evaluates to {claims_s_inv} (equality would force S^2g = 1, but S has order 4g)"
    ));

    let p2g = p.power(ctx, (2 * g) as i64)?;
    checks.push("(d_2g..d_0)^2g = S^2g", p2g.equal_auto(&gens.s.power(ctx, (2 * g) as i64)?));
    let p4g = p.power(ctx, (4 * g) as i64)?;
    checks.push("(d_2g..d_0)^4g = identity", p4g.equal_auto(&gens.id));

    // d_j sends a_j to a_{j-1}^-1 (indices mod 2g+1, with a_2g expanded)
    // and fixes the other a_i.
    let mut action_ok = true;
    let mut action_witness = String::new();
    for j in 0..=n {
        let dj = &gens.d[j];
        let prev = (j + n) % (n + 1);
        let expect = ctx.generator_or_a2g(prev)?.inverse();
        let got = dj.apply(&ctx.generator_or_a2g(j)?);
        if !ctx.equal(&got, &expect) {
            action_ok = false;
            action_witness = format!("d_{j}(a_{j}) = {got}, expected {expect}");
            break;
        }
        for i in 0..=n {
            if i == j || i == prev {
                continue;
            }
            let gi = ctx.generator_or_a2g(i)?;
            if !ctx.equal(&dj.apply(&gi), &gi) {
                action_ok = false;
                action_witness = format!("d_{j} moves a_{i}");
                break;
            }
        }
        if !action_ok {
            break;
        }
    }
    checks.push_witness(
        "d_j sends a_j to a_(j-1)^-1 and fixes other generators (mod 2g+1)",
        action_ok,
        action_witness,
    );

    let d0_a0 = gens.d[0].apply(&ctx.generator(0)?);
    checks.push("d_0 sends a_0 to a_2g^-1", ctx.equal(&d0_a0, &ctx.a2g_word().inverse()));

    // Commutation: disjoint index pairs must commute; adjacent pairs are
    // recorded either way.
    let mut disjoint_ok = true;
    let mut disjoint_witness = String::new();
    let mut adjacent_table = Vec::new();
    for m in 0..=n {
        for k in m + 1..=n {
            let mm = [m, (m + n) % (n + 1)];
            let kk = [k, (k + n) % (n + 1)];
            let disjoint = mm.iter().all(|x| !kk.contains(x));
            let ab = gens.d[m].compose(ctx, &gens.d[k])?;
            let ba = gens.d[k].compose(ctx, &gens.d[m])?;
            let commutes = ab.equal_auto(&ba);
            if disjoint && !commutes {
                disjoint_ok = false;
                disjoint_witness = format!("d_{m} and d_{k} have disjoint index pairs but do not commute");
            }
            if !disjoint {
                adjacent_table.push(format!("d_{m} d_{k} {} d_{k} d_{m}", if commutes { "=" } else { "!=" }));
            }
        }
    }
    checks.push_witness("d_m d_n = d_n d_m for disjoint index pairs", disjoint_ok, disjoint_witness);
    checks.push_witness(
        "adjacent-index d pairs recorded",
        true,
        adjacent_table.join("; "),
    );
    if g == 1 {
        let d0d1 = gens.d[0].compose(ctx, &gens.d[1])?;
        let d1d0 = gens.d[1].compose(ctx, &gens.d[0])?;
        checks.push("d_0 d_1 != d_1 d_0", !d0d1.equal_auto(&d1d0));
    }

    // Conjugacy d_j = T^-k d_2g T^k, the relation the holonomy argument
    // leans on.
    let mut conj_ok = true;
    for j in 0..=n {
        let k = (n - j) as i64;
        let tk = gens.t.power(ctx, k)?;
        let t_negk = gens.t.power(ctx, -k)?;
        let conj = t_negk.compose(ctx, &gens.d[n])?.compose(ctx, &tk)?;
        if !conj.equal_auto(&gens.d[j]) {
            conj_ok = false;
        }
    }
    checks.push("d_j = T^-k d_2g T^k for j = 2g-k", conj_ok);

    // w identities: the defining action, the power relation, and at genus 1
    // the degenerate form w = d_2^2.
    let w_last = gens.w.apply(&ctx.generator(n - 1)?);
    let a0_inv = ctx.generator(0)?.inverse();
    let expect_last = a0_inv.concat(&ctx.generator(n - 1)?).concat(&a0_inv);
    checks.push("w sends a_2g-1 to a_0^-1 a_2g-1 a_0^-1", ctx.equal(&w_last, &expect_last));
    let mut cycle_ok = true;
    for i in 0..n - 1 {
        let target = if i == n - 2 { 0 } else { i + 1 };
        if !ctx.equal(&gens.w.apply(&ctx.generator(i)?), &ctx.generator(target)?) {
            cycle_ok = false;
        }
    }
    checks.push("w cycles a_0 .. a_2g-2", cycle_ok);
    let w_pow = gens.w.power(ctx, (2 * g - 1) as i64)?;
    let d2g_sq = gens.d[n].compose(ctx, &gens.d[n])?;
    checks.push("w^(2g-1) = d_2g^2", w_pow.equal_auto(&d2g_sq));

    // The abelianization is a homomorphism on every pair drawn from the
    // standard classes.
    let mut pool: Vec<&Automorphism> = vec![&gens.s, &gens.t, &gens.w];
    pool.extend(gens.d.iter());
    let mut psi_ok = true;
    for f in &pool {
        for h in &pool {
            let lhs = f.compose(ctx, h)?.abelianization(ctx)?;
            let rhs = f.abelianization(ctx)?.mul(&h.abelianization(ctx)?)?;
            if lhs != rhs {
                psi_ok = false;
            }
        }
    }
    checks.push("abelianization is multiplicative on standard classes", psi_ok);

    if g == 1 {
        genus_one_matrix_checks(ctx, gens, &p, &mut checks)?;
    }

    Ok(IdentityReport { checks, notes })
}

/// The five displayed SL(2, Z) matrices of the genus-1 case, frozen from
/// the 2x2 representation: S, T, d_0, d_1, d_2, and the telescoped product.
fn genus_one_matrix_checks(
    ctx: &GenusContext,
    gens: &Generators,
    p: &Automorphism,
    checks: &mut CheckList,
) -> Result<()> {
    let expected: [(&str, &Automorphism, SlMatrix); 6] = [
        ("psi(S)", &gens.s, SlMatrix::from_rows(&[&[0, -1], &[1, 0]])),
        ("psi(T)", &gens.t, SlMatrix::from_rows(&[&[0, -1], &[1, -1]])),
        ("psi(d_0)", &gens.d[0], SlMatrix::from_rows(&[&[1, 0], &[1, 1]])),
        ("psi(d_1)", &gens.d[1], SlMatrix::from_rows(&[&[2, -1], &[1, 0]])),
        ("psi(d_2)", &gens.d[2], SlMatrix::from_rows(&[&[1, -1], &[0, 1]])),
        ("psi(d_2 d_1 d_0)", p, SlMatrix::from_rows(&[&[0, -1], &[1, 0]])),
    ];
    for (name, auto, want) in expected {
        let got = auto.abelianization(ctx)?;
        checks.push_witness(
            format!("genus-1 matrix {name}"),
            got == want,
            format!("{} (expected {})", got.serialize(), want.serialize()),
        );
    }
    // At genus 1, T has order 3 so d_0 = T^-2 S^-1 T^3 collapses to T S^-1,
    // and the matrix product psi(T) psi(S^-1) lands on psi(d_0).
    let ts_inv = gens.t.compose(ctx, &gens.s.power(ctx, -1)?)?;
    checks.push(
        "genus-1: psi(T . S^-1) = psi(d_0)",
        ts_inv.abelianization(ctx)? == gens.d[0].abelianization(ctx)?
            && ts_inv.equal_auto(&gens.d[0]),
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup(g: usize) -> (GenusContext, Generators) {
        let ctx = GenusContext::new(g).unwrap();
        let gens = Generators::new(&ctx).unwrap();
        (ctx, gens)
    }

    #[test]
    fn s_and_t_orders() {
        for g in 1..=3 {
            let (ctx, gens) = setup(g);
            assert_eq!(gens.s.order(&ctx, 8 * g).unwrap(), Some(4 * g));
            assert_eq!(gens.t.order(&ctx, 8 * g).unwrap(), Some(2 * g + 1));
            assert_eq!(gens.id.order(&ctx, 1).unwrap(), Some(1));
        }
    }

    #[test]
    fn apply_examples() {
        let (ctx, gens) = setup(2);
        assert_eq!(gens.s.apply(&ctx.generator(0).unwrap()), ctx.generator(1).unwrap());
        assert_eq!(
            gens.s.apply(&ctx.generator(3).unwrap()),
            ctx.generator(0).unwrap().inverse()
        );
        let u = ReducedWord::parse("a0 A2 a1").unwrap();
        assert_eq!(gens.id.apply(&u), u);
        // T sends a_2g to a_0.
        assert!(ctx.equal(&gens.t.apply(&ctx.a2g_word()), &ctx.generator(0).unwrap()));
    }

    #[test]
    fn compose_is_homomorphic_and_associative() {
        let (ctx, gens) = setup(2);
        let f = gens.d[1].compose(&ctx, &gens.s).unwrap();
        let u = ReducedWord::parse("a0 a3 A1").unwrap();
        let via_compose = f.apply(&u);
        let via_stages = gens.d[1].apply(&gens.s.apply(&u));
        assert!(ctx.equal(&via_compose, &via_stages));
        let abc = gens.s.compose(&ctx, &gens.t).unwrap().compose(&ctx, &gens.d[0]).unwrap();
        let abc2 = gens.s.compose(&ctx, &gens.t.compose(&ctx, &gens.d[0]).unwrap()).unwrap();
        assert!(abc.equal_auto(&abc2));
        assert!(gens.s.compose(&ctx, &gens.id).unwrap().equal_auto(&gens.s));
    }

    #[test]
    fn d_action_on_generators() {
        for g in 1..=3 {
            let (ctx, gens) = setup(g);
            let n = ctx.rank();
            // d_2g fixes a_0..a_2g-2 and sends a_2g to a_2g-1^-1.
            for i in 0..n - 1 {
                let a = ctx.generator(i).unwrap();
                assert_eq!(gens.d[n].apply(&a), a);
            }
            let img = gens.d[n].apply(&ctx.a2g_word());
            assert!(ctx.equal(&img, &ctx.generator(n - 1).unwrap().inverse()));
        }
    }

    #[test]
    fn genus_one_matrices() {
        let (ctx, gens) = setup(1);
        assert_eq!(
            gens.s.abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[0, -1], &[1, 0]])
        );
        assert_eq!(
            gens.t.abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[0, -1], &[1, -1]])
        );
        assert_eq!(
            gens.d[0].abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[1, 0], &[1, 1]])
        );
        assert_eq!(
            gens.d[1].abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[2, -1], &[1, 0]])
        );
        assert_eq!(
            gens.d[2].abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[1, -1], &[0, 1]])
        );
        assert_eq!(
            gens.w.abelianization(&ctx).unwrap(),
            SlMatrix::from_rows(&[&[1, -2], &[0, 1]])
        );
    }

    #[test]
    fn expr_inversion_round_trip() {
        let (ctx, gens) = setup(2);
        for f in [&gens.s, &gens.t, &gens.d[3]] {
            let finv = f.inverse(&ctx).unwrap();
            assert!(f.compose(&ctx, &finv).unwrap().equal_auto(&gens.id));
            assert!(finv.compose(&ctx, f).unwrap().equal_auto(&gens.id));
        }
    }

    #[test]
    fn expr_reevaluation_matches_images() {
        let (ctx, gens) = setup(2);
        let f = gens.d[4].compose(&ctx, &gens.t).unwrap();
        let expr = f.expr().unwrap().clone();
        let rebuilt = Automorphism::from_expr(&ctx, expr).unwrap();
        assert!(rebuilt.equal_auto(&f));
    }

    #[test]
    fn w_examples() {
        let (ctx, gens) = setup(2);
        assert!(ctx.equal(&gens.w.apply(&ctx.generator(2).unwrap()), &ctx.generator(0).unwrap()));
        let w_pow = gens.w.power(&ctx, 3).unwrap();
        let d4_sq = gens.d[4].compose(&ctx, &gens.d[4]).unwrap();
        assert!(w_pow.equal_auto(&d4_sq));
        // Genus 1 degenerates to w = d_2^2.
        let (ctx1, gens1) = setup(1);
        let d2_sq = gens1.d[2].compose(&ctx1, &gens1.d[2]).unwrap();
        assert!(gens1.w.equal_auto(&d2_sq));
    }

    #[test]
    fn identity_report_passes() {
        for g in 1..=2 {
            let (ctx, gens) = setup(g);
            let report = verify_identities(&ctx, &gens).unwrap();
            for c in &report.checks.checks {
                assert!(c.pass, "failed: {} ({:?})", c.check, c.witness);
            }
            assert!(!report.notes.is_empty());
        }
    }

    #[test]
    fn power_and_negative_power() {
        let (ctx, gens) = setup(2);
        assert!(gens.s.power(&ctx, 0).unwrap().equal_auto(&gens.id));
        assert!(gens.s.power(&ctx, 8).unwrap().equal_auto(&gens.id));
        assert!(gens.t.power(&ctx, -5).unwrap().equal_auto(&gens.id));
        let no_expr = gens.w.clone();
        assert!(matches!(no_expr.power(&ctx, -1), Err(Error::NegativePowerWithoutExpr)));
    }

    #[test]
    fn broken_images_rejected() {
        let ctx = GenusContext::new(2).unwrap();
        // Swapping two generators without fixing the rest breaks the
        // relation.
        let mut images: Vec<ReducedWord> =
            (0..4).map(|i| ctx.generator(i).unwrap()).collect();
        images.swap(0, 1);
        assert!(Automorphism::from_images(&ctx, images, None).is_err());
    }
}
