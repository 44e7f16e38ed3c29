//! Bigraded integer chains `C_{p,q}` for `q` in `{0,1,2}`: free abelian
//! groups on generators `simplex . (f_1, .., f_q)` with an oriented
//! p-simplex of inversives in the first slot and mapping classes in the
//! rest. Horizontal boundaries delete vertices; vertical boundaries come
//! from the nerve of the action groupoid with the normalization
//! `d_v(s . f) = f(s) - s`, under which `d_h` and `d_v` commute termwise.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::automorphism::Automorphism;
use crate::error::{add_exact, mul_exact, Error, Result};
use crate::inversive::Inversive;
use crate::simplex::{act_sorted, OrientedSimplex};
use crate::word::GenusContext;

/// A basis element of `C_{p,q}`: sorted distinct vertices (positive
/// orientation; negative orientations are folded into the coefficient) and
/// `q` mapping classes. Mapping classes compare by their generator images,
/// which are kept in normal form, so ordering and equality are exact and
/// cheap.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Generator {
    pub vertices: Vec<Inversive>,
    pub morphisms: Vec<Arc<Automorphism>>,
}

impl Generator {
    pub fn serialize(&self) -> String {
        let verts: Vec<String> = self.vertices.iter().map(|v| v.serialize()).collect();
        let mut out = format!("[{}]", verts.join(","));
        for m in &self.morphisms {
            let tag = match m.expr() {
                Some(e) => e.serialize(),
                None => m.serialize(),
            };
            out.push_str(" ; ");
            out.push_str(&tag);
        }
        out
    }
}

/// A finite integer combination of generators at a fixed bidegree `(p, q)`.
/// No zero coefficients and no zero simplices are ever stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiGradedChain {
    p: usize,
    q: usize,
    terms: BTreeMap<Generator, i64>,
}

impl BiGradedChain {
    pub fn zero(p: usize, q: usize) -> Self {
        assert!(q <= 2, "only q in 0..=2 is represented");
        BiGradedChain { p, q, terms: BTreeMap::new() }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, i64)> {
        self.terms.iter().map(|(g, &c)| (g, c))
    }

    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Add `coef` times the oriented simplex with the given morphisms.
    /// The simplex is canonicalized; zero simplices contribute nothing.
    pub fn add_term(
        &mut self,
        simplex: OrientedSimplex,
        morphisms: Vec<Arc<Automorphism>>,
        coef: i64,
    ) -> Result<()> {
        if coef == 0 {
            return Ok(());
        }
        let Some((vertices, sign)) = simplex.parts() else {
            return Ok(());
        };
        if vertices.len() != self.p + 1 {
            return Err(Error::Bidegree(format!(
                "simplex has {} vertices, expected p+1 = {}",
                vertices.len(),
                self.p + 1
            )));
        }
        if morphisms.len() != self.q {
            return Err(Error::Bidegree(format!(
                "generator has {} morphisms, expected q = {}",
                morphisms.len(),
                self.q
            )));
        }
        let gen = Generator { vertices: vertices.to_vec(), morphisms };
        let signed = mul_exact(coef, sign)?;
        match self.terms.entry(gen) {
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = add_exact(*e.get(), signed)?;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(signed);
            }
        }
        Ok(())
    }

    pub fn coefficient_of(&self, gen: &Generator) -> i64 {
        self.terms.get(gen).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &BiGradedChain) -> Result<BiGradedChain> {
        if self.bidegree() != other.bidegree() {
            return Err(Error::Bidegree("sum of chains at different bidegrees".into()));
        }
        let mut out = self.clone();
        for (gen, coef) in other.terms() {
            let entry = out.terms.entry(gen.clone()).or_insert(0);
            *entry = add_exact(*entry, coef)?;
        }
        out.terms.retain(|_, c| *c != 0);
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<BiGradedChain> {
        let mut out = BiGradedChain::zero(self.p, self.q);
        if k == 0 {
            return Ok(out);
        }
        for (gen, coef) in self.terms() {
            out.terms.insert(gen.clone(), mul_exact(coef, k)?);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BiGradedChain) -> Result<BiGradedChain> {
        self.add(&other.scale(-1)?)
    }

    /// Horizontal boundary: alternating sum of vertex deletions, morphism
    /// tuple untouched. Undefined at p = 0.
    pub fn boundary_h(&self) -> Result<BiGradedChain> {
        if self.p == 0 {
            return Err(Error::Bidegree("horizontal boundary of a 0-chain".into()));
        }
        let mut out = BiGradedChain::zero(self.p - 1, self.q);
        for (gen, coef) in self.terms() {
            for i in 0..gen.vertices.len() {
                let mut face = gen.vertices.clone();
                face.remove(i);
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_term(
                    OrientedSimplex::Simplex { vertices: face, sign: 1 },
                    gen.morphisms.clone(),
                    mul_exact(coef, sign)?,
                )?;
            }
        }
        Ok(out)
    }

    /// Vertical boundary at q = 1: `d_v(s . f) = f(s) - s`.
    pub fn boundary_v(&self, ctx: &GenusContext) -> Result<BiGradedChain> {
        if self.q != 1 {
            return Err(Error::Bidegree(format!("vertical boundary expects q = 1, got {}", self.q)));
        }
        let mut out = BiGradedChain::zero(self.p, 0);
        for (gen, coef) in self.terms() {
            let f = &gen.morphisms[0];
            let (image, sign) = act_sorted(ctx, f, &gen.vertices)?;
            out.add_term(
                OrientedSimplex::Simplex { vertices: image, sign },
                Vec::new(),
                coef,
            )?;
            out.add_term(
                OrientedSimplex::Simplex { vertices: gen.vertices.clone(), sign: 1 },
                Vec::new(),
                -coef,
            )?;
        }
        Ok(out)
    }

    /// Vertical boundary at q = 2:
    /// `d_v(s . (f, h)) = h(s) . f - s . (f h) + s . h`.
    pub fn boundary_v2(&self, ctx: &GenusContext) -> Result<BiGradedChain> {
        if self.q != 2 {
            return Err(Error::Bidegree(format!("nerve boundary expects q = 2, got {}", self.q)));
        }
        let mut out = BiGradedChain::zero(self.p, 1);
        for (gen, coef) in self.terms() {
            let f = &gen.morphisms[0];
            let h = &gen.morphisms[1];
            let (image, sign) = act_sorted(ctx, h, &gen.vertices)?;
            out.add_term(
                OrientedSimplex::Simplex { vertices: image, sign },
                vec![f.clone()],
                coef,
            )?;
            let fh = Arc::new(f.compose(ctx, h)?);
            out.add_term(
                OrientedSimplex::Simplex { vertices: gen.vertices.clone(), sign: 1 },
                vec![fh],
                -coef,
            )?;
            out.add_term(
                OrientedSimplex::Simplex { vertices: gen.vertices.clone(), sign: 1 },
                vec![h.clone()],
                coef,
            )?;
        }
        Ok(out)
    }

    /// Line-oriented dump: header, then one `<coef> * <generator>` line per
    /// term in the canonical generator order.
    pub fn dump(&self, genus: usize, name: &str) -> String {
        let mut out = format!("genus={} p={} q={} chain={}\n", genus, self.p, self.q, name);
        for (gen, coef) in self.terms() {
            out.push_str(&format!("{} * {}\n", coef, gen.serialize()));
        }
        out
    }
}
