use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use super::matrix::{bigint_from_json, serialize_bigint, IntMatrix};
use super::smith::smith_normal_form;

/// A finitely generated abelian group in canonical form
/// `Z^rank ⊕ Z/d1 ⊕ … ⊕ Z/dk` with `d1 | d2 | … | dk`, every `di ≥ 2`.
///
/// Values are immutable and always canonical, so `==` decides isomorphism.
/// The canonical generator order is: free generators first, then torsion
/// generators in invariant-factor order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self {
            rank: 0,
            torsion: Vec::new(),
        }
    }

    /// Free abelian group of the given rank.
    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Cyclic group of order `d` (`d = 0` gives Z, `d = 1` the trivial group).
    pub fn cyclic(d: u64) -> Self {
        match d {
            0 => Self::free(1),
            1 => Self::trivial(),
            _ => Self {
                rank: 0,
                torsion: vec![BigInt::from(d)],
            },
        }
    }

    /// Build a group from raw invariants, re-canonicalizing as needed
    /// (factors are merged through Smith normal form, so any list of moduli
    /// is accepted: `[2, 3]` becomes `[6]`).
    pub fn from_invariants(rank: usize, torsion: &[BigInt]) -> Self {
        if torsion.is_empty() {
            return Self::free(rank);
        }
        let n = torsion.len();
        let mut rel = IntMatrix::zero(n, n);
        for (i, d) in torsion.iter().enumerate() {
            rel.set(i, i, d.abs());
        }
        let mut g = Self::from_presentation(n, &rel);
        g.rank += rank;
        g
    }

    /// Group presented by `generators` and the columns of `relations`
    /// (`relations` must have one row per generator). Canonical form is
    /// computed eagerly via Smith normal form.
    pub fn from_presentation(generators: usize, relations: &IntMatrix) -> Self {
        assert_eq!(
            relations.rows(),
            generators,
            "presentation relations must have one row per generator"
        );
        let s = smith_normal_form(relations);
        let factors = s.invariant_factors();
        let rank = generators - factors.len();
        let torsion = factors.into_iter().filter(|d| !d.is_one()).collect();
        Self { rank, torsion }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Number of canonical generators (free + torsion).
    pub fn generator_count(&self) -> usize {
        self.rank + self.torsion.len()
    }

    /// Relation lattice of the canonical presentation as a matrix whose
    /// columns generate it: zero columns for free generators are omitted, so
    /// it is `generator_count x torsion_count` with `d_i` at the torsion rows.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generator_count();
        let t = self.torsion.len();
        let mut rel = IntMatrix::zero(n, t);
        for (i, d) in self.torsion.iter().enumerate() {
            rel.set(self.rank + i, i, d.clone());
        }
        rel
    }

    /// Order of the `i`-th canonical generator: `None` for free generators.
    pub fn generator_order(&self, i: usize) -> Option<&BigInt> {
        if i < self.rank {
            None
        } else {
            Some(&self.torsion[i - self.rank])
        }
    }

    /// A vector of the codomain cover lies in the relation lattice iff its
    /// free coordinates vanish and each torsion coordinate is divisible by
    /// the corresponding invariant factor.
    pub fn in_relation_lattice(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.generator_count());
        v[..self.rank].iter().all(Zero::is_zero)
            && self
                .torsion
                .iter()
                .zip(&v[self.rank..])
                .all(|(d, x)| (x % d).is_zero())
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let torsion: Vec<BigInt> = self
            .torsion
            .iter()
            .chain(other.torsion.iter())
            .cloned()
            .collect();
        Self::from_invariants(self.rank + other.rank, &torsion)
    }

    /// Total number of elements, when finite.
    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            None
        } else {
            Some(self.torsion.iter().product())
        }
    }

    pub fn is_isomorphic(&self, other: &Self) -> bool {
        self == other
    }
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbelianGroup({self})")
    }
}

impl Serialize for FgAbelianGroup {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Torsion<'a>(&'a [BigInt]);
        impl Serialize for Torsion<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                use serde::ser::SerializeSeq;
                let mut seq = s.serialize_seq(Some(self.0.len()))?;
                for d in self.0 {
                    struct Entry<'a>(&'a BigInt);
                    impl Serialize for Entry<'_> {
                        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                            serialize_bigint(self.0, s)
                        }
                    }
                    seq.serialize_element(&Entry(d))?;
                }
                seq.end()
            }
        }
        let mut st = serializer.serialize_struct("FgAbelianGroup", 2)?;
        st.serialize_field("rank", &self.rank)?;
        st.serialize_field("torsion", &Torsion(&self.torsion))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for FgAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            rank: usize,
            #[serde(default)]
            torsion: Vec<serde_json::Value>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let torsion: Result<Vec<BigInt>, D::Error> = raw
            .torsion
            .iter()
            .map(|v| {
                bigint_from_json(v)
                    .filter(|d| *d >= BigInt::from(2))
                    .ok_or_else(|| de::Error::custom(format!("invalid torsion factor: {v}")))
            })
            .collect();
        Ok(Self::from_invariants(raw.rank, &torsion?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_merge() {
        // Z/2 + Z/3 = Z/6 by CRT
        let a = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(3));
        assert_eq!(a, FgAbelianGroup::cyclic(6));
        assert!(a.is_isomorphic(&FgAbelianGroup::cyclic(6)));
    }

    #[test]
    fn direct_sum_ranks() {
        let z = FgAbelianGroup::free(1);
        assert_eq!(z.direct_sum(&z), FgAbelianGroup::free(2));
    }

    #[test]
    fn presentation_of_cyclic() {
        // Z^2 / <(2,0),(0,1)> = Z/2
        let rel = IntMatrix::from_rows(&[&[2, 0], &[0, 1]]);
        let g = FgAbelianGroup::from_presentation(2, &rel);
        assert_eq!(g, FgAbelianGroup::cyclic(2));
    }

    #[test]
    fn display_forms() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(2).to_string(), "Z^2");
        let g = FgAbelianGroup::from_invariants(1, &[BigInt::from(4)]);
        assert_eq!(g.to_string(), "Z + Z/4");
    }

    #[test]
    fn json_shape() {
        let g = FgAbelianGroup::from_invariants(2, &[BigInt::from(2), BigInt::from(4)]);
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v, serde_json::json!({"rank": 2, "torsion": [2, 4]}));
        let back: FgAbelianGroup = serde_json::from_value(v).unwrap();
        assert_eq!(back, g);
    }
}
