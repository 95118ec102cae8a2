//! 2-cyclotomic cosets mod `n`, defining sets of cyclic codes, and generator
//! polynomials assembled from minimal polynomials.
//!
//! Over F2 the irreducible factors of `x^n - 1` (odd `n`) correspond to the
//! orbits of `Z_n` under doubling. A cyclic code is pinned either by its
//! generator polynomial or by its defining set `T = {i : g(ζ^i) = 0}`, which
//! is a union of cosets.

use crate::algebra::{BinaryPolynomial, FieldContext};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// An orbit of `Z_n` under `i ↦ 2i mod n`, stored sorted with the smallest
/// member as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    n: usize,
    members: Vec<usize>,
}

impl Coset {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn representative(&self) -> usize {
        self.members[0]
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false // an orbit always contains its seed
    }
}

/// The orbit of `i` under doubling mod `n`.
pub fn coset_of(n: usize, i: usize) -> Result<Coset> {
    check_modulus(n)?;
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut members = vec![i];
    let mut j = i * 2 % n;
    while j != i {
        members.push(j);
        j = j * 2 % n;
    }
    members.sort_unstable();
    Ok(Coset { n, members })
}

/// All cosets mod `n`, sorted by representative. They partition `Z_n`.
pub fn all_cosets(n: usize) -> Result<Vec<Coset>> {
    check_modulus(n)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let c = coset_of(n, i)?;
        for &j in c.members() {
            seen[j] = true;
        }
        out.push(c);
    }
    Ok(out)
}

fn check_modulus(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    Ok(())
}

/// A union of whole cosets: the exponents where a generator polynomial
/// vanishes.
///
/// Serializes as `{"n": 45, "cosets": [0, 1]}`, listing coset
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    n: usize,
    indices: Vec<usize>,
}

impl DefiningSet {
    /// Validating constructor: `indices` must be closed under doubling.
    pub fn from_indices(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        check_modulus(n)?;
        indices.sort_unstable();
        indices.dedup();
        for &i in &indices {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            if indices.binary_search(&(i * 2 % n)).is_err() {
                return Err(Error::NotCosetClosed { n, index: i });
            }
        }
        Ok(Self { n, indices })
    }

    /// Union of the cosets with the given representatives.
    pub fn from_cosets(n: usize, representatives: &[usize]) -> Result<Self> {
        let mut indices = Vec::new();
        for &r in representatives {
            indices.extend_from_slice(coset_of(n, r)?.members());
        }
        Self::from_indices(n, indices)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_indices(n, Vec::new())
    }

    pub fn full(n: usize) -> Result<Self> {
        Self::from_indices(n, (0..n).collect())
    }

    /// The exponents `i` with `g(ζ^i) = 0`.
    pub fn of_polynomial(ctx: &FieldContext, g: &BinaryPolynomial) -> Result<Self> {
        let n = ctx.n();
        let indices = (0..n).filter(|&i| ctx.eval(g, i) == 0).collect();
        Self::from_indices(n, indices)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// Representatives of the cosets making up this set.
    pub fn coset_representatives(&self) -> Vec<usize> {
        let mut reps = Vec::new();
        let mut seen = vec![false; self.n];
        for &i in &self.indices {
            if seen[i] {
                continue;
            }
            let c = coset_of(self.n, i).expect("members validated");
            for &j in c.members() {
                seen[j] = true;
            }
            reps.push(c.representative());
        }
        reps
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.indices.iter().any(|i| other.contains(*i))
    }
}

impl Serialize for DefiningSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            cosets: Vec<usize>,
        }
        Repr { n: self.n, cosets: self.coset_representatives() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for DefiningSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            cosets: Vec<usize>,
        }
        let r = Repr::deserialize(d)?;
        DefiningSet::from_cosets(r.n, &r.cosets).map_err(serde::de::Error::custom)
    }
}

/// `{(n - i) mod n : i ∈ T}`; negation permutes cosets, so the result is
/// coset-closed.
pub fn negate_set(t: &DefiningSet) -> DefiningSet {
    let n = t.n();
    let indices: Vec<usize> = t.indices().iter().map(|&i| (n - i) % n).collect();
    DefiningSet::from_indices(n, indices).expect("negation preserves coset closure")
}

/// The defining-set test for the sufficient dual-containment conditions:
/// `T1 ∩ (-T2) = T1 ∩ T2 = ∅` forces `g2 | g1^⊥` and `gcd(g1, g2) = 1`.
pub fn remark_precheck(t1: &DefiningSet, t2: &DefiningSet) -> Result<bool> {
    if t1.n() != t2.n() {
        return Err(Error::AmbientMismatch { left: t1.n(), right: t2.n() });
    }
    Ok(!t1.intersects(&negate_set(t2)) && !t1.intersects(t2))
}

/// `∏_{j ∈ c} (x - ζ^j)` expanded in `GF(2^m)`; all coefficients must land
/// in F2. The result is the irreducible minimal polynomial of `ζ^c` over F2,
/// of degree `|c|`, returned as a plain polynomial.
pub fn minimal_polynomial(ctx: &FieldContext, c: &Coset) -> Result<BinaryPolynomial> {
    if ctx.n() != c.n() {
        return Err(Error::AmbientMismatch { left: ctx.n(), right: c.n() });
    }
    // repeated multiplication by linear factors, coefficients in GF(2^m)
    let mut coeffs: Vec<u64> = vec![1];
    for &j in c.members() {
        let root = ctx.zeta_pow(j);
        let mut next = vec![0u64; coeffs.len() + 1];
        for (i, &co) in coeffs.iter().enumerate() {
            next[i + 1] ^= co; // x * co
            next[i] ^= ctx.mul(root, co);
        }
        coeffs = next;
    }
    let mut support = Vec::new();
    for (i, &co) in coeffs.iter().enumerate() {
        match co {
            0 => {}
            1 => support.push(i),
            _ => {
                return Err(Error::Internal(format!(
                    "minimal polynomial coefficient {co:#x} outside F2 (coset of {})",
                    c.representative()
                )))
            }
        }
    }
    BinaryPolynomial::from_support(&support, 0)
}

/// Product of the minimal polynomials of the cosets in `T`: the generator
/// polynomial of the cyclic code with defining set `T`, as a plain divisor
/// of `x^n - 1` with `deg = |T|`.
pub fn generator_from_set(ctx: &FieldContext, t: &DefiningSet) -> Result<BinaryPolynomial> {
    if ctx.n() != t.n() {
        return Err(Error::AmbientMismatch { left: ctx.n(), right: t.n() });
    }
    let mut g = BinaryPolynomial::one(0);
    let mut seen = vec![false; t.n()];
    for &i in t.indices() {
        if seen[i] {
            continue;
        }
        let c = coset_of(t.n(), i)?;
        for &j in c.members() {
            seen[j] = true;
        }
        g = g.ring_mul(&minimal_polynomial(ctx, &c)?)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::reciprocal_dual;

    #[test]
    fn coset_orbits_mod_45() {
        assert_eq!(coset_of(45, 0).unwrap().members(), &[0]);
        assert_eq!(
            coset_of(45, 1).unwrap().members(),
            &[1, 2, 4, 8, 16, 17, 19, 23, 31, 32, 34, 38]
        );
        assert_eq!(coset_of(45, 15).unwrap().members(), &[15, 30]);
        assert!(coset_of(45, 45).is_err());
        assert!(coset_of(44, 1).is_err());
    }

    #[test]
    fn all_cosets_partition() {
        let cosets = all_cosets(7).unwrap();
        let members: Vec<_> = cosets.iter().map(|c| c.members().to_vec()).collect();
        assert_eq!(members, vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]);

        assert_eq!(
            all_cosets(3)
                .unwrap()
                .iter()
                .map(|c| c.members().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![0], vec![1, 2]]
        );

        let cosets45 = all_cosets(45).unwrap();
        assert_eq!(cosets45.len(), 12);
        assert_eq!(cosets45.iter().map(Coset::len).sum::<usize>(), 45);
        let size_of = |r: usize| cosets45.iter().find(|c| c.representative() == r).unwrap().len();
        assert_eq!(size_of(3), 4);
        assert_eq!(size_of(5), 6);
        assert_eq!(size_of(9), 4);
        assert_eq!(size_of(15), 2);
    }

    #[test]
    fn coset_members_close_under_doubling() {
        for n in [7usize, 15, 45, 51, 73] {
            for c in all_cosets(n).unwrap() {
                for &i in c.members() {
                    assert!(c.members().binary_search(&(2 * i % n)).is_ok());
                }
            }
        }
    }

    #[test]
    fn minimal_polynomials_mod_7() {
        let ctx = FieldContext::build(7).unwrap();
        let c0 = coset_of(7, 0).unwrap();
        let m0 = minimal_polynomial(&ctx, &c0).unwrap();
        assert_eq!(m0, BinaryPolynomial::parse_compact("1^2", 0).unwrap());

        // frozen under the canonical modulus x^3 + x^2 + 1 (ζ = α)
        let c1 = coset_of(7, 1).unwrap();
        let m1 = minimal_polynomial(&ctx, &c1).unwrap();
        assert_eq!(m1, BinaryPolynomial::parse_compact("1011", 0).unwrap()); // x^3 + x^2 + 1
        let c3 = coset_of(7, 3).unwrap();
        let m3 = minimal_polynomial(&ctx, &c3).unwrap();
        assert_eq!(m3, BinaryPolynomial::parse_compact("1101", 0).unwrap()); // x^3 + x + 1
    }

    #[test]
    fn minimal_polynomials_factor_xn_minus_one() {
        for n in [7usize, 15, 45, 51, 73] {
            let ctx = FieldContext::build(n).unwrap();
            let mut prod = BinaryPolynomial::one(0);
            for c in all_cosets(n).unwrap() {
                let m = minimal_polynomial(&ctx, &c).unwrap();
                assert_eq!(m.degree(), Some(c.len()));
                prod = prod.ring_mul(&m).unwrap();
            }
            assert_eq!(prod, BinaryPolynomial::xn_minus_one(n), "n = {n}");
        }
    }

    #[test]
    fn generator_from_set_examples() {
        let ctx = FieldContext::build(45).unwrap();
        assert!(generator_from_set(&ctx, &DefiningSet::empty(45).unwrap())
            .unwrap()
            .is_one());
        assert_eq!(
            generator_from_set(&ctx, &DefiningSet::full(45).unwrap()).unwrap(),
            BinaryPolynomial::xn_minus_one(45)
        );

        let t1 = DefiningSet::from_cosets(45, &[0, 1]).unwrap();
        let g = generator_from_set(&ctx, &t1).unwrap();
        assert_eq!(g.degree(), Some(13));
        assert!(g.divides(&BinaryPolynomial::xn_minus_one(45)));
        // root set equals the defining set regardless of which ζ was chosen
        assert_eq!(DefiningSet::of_polynomial(&ctx, &g).unwrap(), t1);
    }

    #[test]
    fn generator_degree_matches_set_size() {
        let ctx = FieldContext::build(51).unwrap();
        for reps in [vec![0], vec![1, 3, 5], vec![0, 1, 3, 5]] {
            let t = DefiningSet::from_cosets(51, &reps).unwrap();
            let g = generator_from_set(&ctx, &t).unwrap();
            assert_eq!(g.degree(), Some(t.len()));
        }
    }

    #[test]
    fn complementary_sets_factor_xn_minus_one() {
        let ctx = FieldContext::build(45).unwrap();
        let t = DefiningSet::from_cosets(45, &[0, 1, 9]).unwrap();
        let comp: Vec<usize> = (0..45).filter(|i| !t.contains(*i)).collect();
        let tc = DefiningSet::from_indices(45, comp).unwrap();
        let prod = generator_from_set(&ctx, &t)
            .unwrap()
            .ring_mul(&generator_from_set(&ctx, &tc).unwrap())
            .unwrap();
        assert_eq!(prod, BinaryPolynomial::xn_minus_one(45));
    }

    #[test]
    fn negate_set_examples() {
        let zero = DefiningSet::from_cosets(45, &[0]).unwrap();
        assert_eq!(negate_set(&zero), zero);

        let c1 = DefiningSet::from_cosets(7, &[1]).unwrap();
        let c3 = DefiningSet::from_cosets(7, &[3]).unwrap();
        assert_eq!(negate_set(&c1), c3);

        let t = DefiningSet::from_cosets(45, &[3, 5]).unwrap();
        let neg = negate_set(&t);
        assert_eq!(neg.len(), 10);
        assert!(DefiningSet::from_indices(45, neg.indices().to_vec()).is_ok());
    }

    #[test]
    fn remark_precheck_examples() {
        // the 45-fixture defining sets satisfy the test
        let t1 = DefiningSet::from_cosets(45, &[0, 1]).unwrap();
        let t2 = DefiningSet::from_cosets(45, &[3, 5, 9, 15]).unwrap();
        assert!(remark_precheck(&t1, &t2).unwrap());

        let c1 = DefiningSet::from_cosets(7, &[1]).unwrap();
        assert!(!remark_precheck(&c1, &c1).unwrap());
        let c3 = DefiningSet::from_cosets(7, &[3]).unwrap();
        assert!(!remark_precheck(&c1, &c3).unwrap()); // C3 = -C1

        let other = DefiningSet::from_cosets(45, &[1]).unwrap();
        assert!(remark_precheck(&c1, &other).is_err());
    }

    #[test]
    fn remark_precheck_implies_divisibility_and_coprimality() {
        let ctx = FieldContext::build(45).unwrap();
        let t1 = DefiningSet::from_cosets(45, &[0, 1]).unwrap();
        let t2 = DefiningSet::from_cosets(45, &[3, 5, 9, 15]).unwrap();
        assert!(remark_precheck(&t1, &t2).unwrap());
        let g1 = generator_from_set(&ctx, &t1).unwrap();
        let g2 = generator_from_set(&ctx, &t2).unwrap();
        let g1_perp = reciprocal_dual(&g1, 45).unwrap();
        assert!(g2.divides(&g1_perp));
        assert!(g1.gcd(&g2).unwrap().is_one());
    }

    #[test]
    fn defining_set_rejects_partial_cosets() {
        assert!(DefiningSet::from_indices(7, vec![1]).is_err());
        assert!(DefiningSet::from_indices(7, vec![1, 2, 4]).is_ok());
    }

    #[test]
    fn defining_set_serde_round_trip() {
        let t = DefiningSet::from_cosets(45, &[0, 1]).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"n":45,"cosets":[0,1]}"#);
        let back: DefiningSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
    }
}
