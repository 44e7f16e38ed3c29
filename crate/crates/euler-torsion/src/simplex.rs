//! Oriented simplices on inversives: tuples of distinct vertices up to even
//! permutation, canonicalized to the sorted tuple with a parity sign.
//! A tuple with a repeated vertex is the zero simplex.

use crate::automorphism::Automorphism;
use crate::error::{Error, Result};
use crate::inversive::{act, Inversive};
use crate::word::GenusContext;

/// Canonical form of an oriented simplex: either zero, or a strictly
/// increasing vertex list together with the sign of the permutation that
/// sorted the input tuple.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum OrientedSimplex {
    Zero,
    Simplex { vertices: Vec<Inversive>, sign: i64 },
}

impl OrientedSimplex {
    /// Canonicalize an arbitrary vertex tuple.
    pub fn new(tuple: Vec<Inversive>) -> OrientedSimplex {
        match sort_with_parity(tuple) {
            None => OrientedSimplex::Zero,
            Some((vertices, sign)) => OrientedSimplex::Simplex { vertices, sign },
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, OrientedSimplex::Zero)
    }

    /// Sorted vertices and sign, when nonzero.
    pub fn parts(&self) -> Option<(&[Inversive], i64)> {
        match self {
            OrientedSimplex::Zero => None,
            OrientedSimplex::Simplex { vertices, sign } => Some((vertices, *sign)),
        }
    }
}

/// Sort a tuple and report the permutation parity; `None` on duplicates.
pub fn sort_with_parity(mut v: Vec<Inversive>) -> Option<(Vec<Inversive>, i64)> {
    let mut sign = 1i64;
    // Insertion sort; tuples here have at most 2g+1 entries.
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for pair in v.windows(2) {
        if pair[0] == pair[1] {
            return None;
        }
    }
    Some((v, sign))
}

/// Vertex-wise action of a mapping class on a sorted vertex list, returning
/// the sorted image together with the orientation sign. The action of an
/// automorphism on inversives is injective, so duplicates signal a broken
/// automorphism and are a hard error.
pub fn act_sorted(
    ctx: &GenusContext,
    f: &Automorphism,
    vertices: &[Inversive],
) -> Result<(Vec<Inversive>, i64)> {
    let mut images = Vec::with_capacity(vertices.len());
    for v in vertices {
        images.push(act(ctx, f, v)?);
    }
    sort_with_parity(images).ok_or_else(|| {
        Error::InvalidConfig("action produced a repeated vertex; automorphism is broken".into())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automorphism::Generators;
    use crate::inversive::basic_family;

    fn setup(g: usize) -> (GenusContext, Generators, Vec<Inversive>) {
        let ctx = GenusContext::new(g).unwrap();
        let gens = Generators::new(&ctx).unwrap();
        let basics = basic_family(&ctx).unwrap();
        (ctx, gens, basics)
    }

    #[test]
    fn orientation_convention() {
        let (_, _, b) = setup(1);
        let fwd = OrientedSimplex::new(vec![b[0].clone(), b[1].clone()]);
        let rev = OrientedSimplex::new(vec![b[1].clone(), b[0].clone()]);
        let (v1, s1) = fwd.parts().unwrap();
        let (v2, s2) = rev.parts().unwrap();
        assert_eq!(v1, v2);
        assert_eq!(s1, 1);
        assert_eq!(s2, -1);
        assert!(OrientedSimplex::new(vec![b[0].clone(), b[0].clone()]).is_zero());
        // One transposition relative to sorted order.
        let odd = OrientedSimplex::new(vec![b[0].clone(), b[2].clone(), b[1].clone()]);
        assert_eq!(odd.parts().unwrap().1, -1);
    }

    #[test]
    fn action_is_equivariant_with_canonicalization() {
        let (ctx, gens, b) = setup(2);
        // Canonicalize-then-map equals map-then-canonicalize, signs included.
        let tuple = vec![b[3].clone(), b[0].clone(), b[4].clone()];
        let canon = OrientedSimplex::new(tuple.clone());
        let (sorted, sign) = canon.parts().unwrap();
        let (mapped_canon, mapped_sign) = act_sorted(&ctx, &gens.t, sorted).unwrap();
        let mut raw_images = Vec::new();
        for v in &tuple {
            raw_images.push(act(&ctx, &gens.t, v).unwrap());
        }
        let direct = OrientedSimplex::new(raw_images);
        let (direct_sorted, direct_sign) = direct.parts().unwrap();
        assert_eq!(mapped_canon, direct_sorted.to_vec());
        assert_eq!(sign * mapped_sign, direct_sign);
    }
}
