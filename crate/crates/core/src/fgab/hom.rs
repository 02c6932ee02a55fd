use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::group::FgAbelianGroup;
use super::lattice::{column_lattice_basis, kernel_lattice, solve_exact};
use super::matrix::IntMatrix;
use super::FgabError;

/// Homomorphism between finitely generated abelian groups, given by an
/// integer matrix with one column per domain generator and one row per
/// codomain generator, both in canonical generator order.
///
/// Construction checks well-definedness: for a domain torsion generator of
/// order `d`, `d` times its image column must lie in the codomain relation
/// lattice. There is no implicit basis conversion anywhere; composition
/// requires the groups to match exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupHom")]
pub struct GroupHom {
    domain: FgAbelianGroup,
    codomain: FgAbelianGroup,
    matrix: IntMatrix,
}

#[derive(Deserialize)]
struct RawGroupHom {
    domain: FgAbelianGroup,
    codomain: FgAbelianGroup,
    matrix: IntMatrix,
}

impl TryFrom<RawGroupHom> for GroupHom {
    type Error = FgabError;

    fn try_from(raw: RawGroupHom) -> Result<Self, FgabError> {
        GroupHom::new(raw.domain, raw.codomain, raw.matrix)
    }
}

impl GroupHom {
    pub fn new(
        domain: FgAbelianGroup,
        codomain: FgAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, FgabError> {
        if matrix.rows() != codomain.generator_count() || matrix.cols() != domain.generator_count()
        {
            return Err(FgabError::DimensionMismatch {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: codomain.generator_count(),
                expected_cols: domain.generator_count(),
            });
        }
        for j in 0..domain.generator_count() {
            if let Some(order) = domain.generator_order(j) {
                let scaled: Vec<BigInt> =
                    matrix.column(j).into_iter().map(|x| x * order).collect();
                if !codomain.in_relation_lattice(&scaled) {
                    return Err(FgabError::IllDefinedHom { generator: j });
                }
            }
        }
        Ok(Self {
            domain,
            codomain,
            matrix,
        })
    }

    pub fn zero(domain: FgAbelianGroup, codomain: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::zero(codomain.generator_count(), domain.generator_count());
        Self {
            domain,
            codomain,
            matrix,
        }
    }

    pub fn identity(g: FgAbelianGroup) -> Self {
        let matrix = IntMatrix::identity(g.generator_count());
        Self {
            domain: g.clone(),
            codomain: g,
            matrix,
        }
    }

    pub fn domain(&self) -> &FgAbelianGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbelianGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn is_zero_map(&self) -> bool {
        // every generator image must die in the codomain
        (0..self.matrix.cols())
            .all(|j| self.codomain.in_relation_lattice(&self.matrix.column(j)))
    }

    /// `self ∘ other` (apply `other` first). Requires exact group match.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, FgabError> {
        if other.codomain != self.domain {
            return Err(FgabError::MiddleGroupMismatch);
        }
        Ok(GroupHom {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// Preimage in the domain cover `Z^n` of the codomain relation lattice:
    /// the lattice `{x : M x ∈ relations(codomain)}`, as generating columns.
    fn kernel_cover_lattice(&self) -> IntMatrix {
        let n = self.domain.generator_count();
        let stacked = self.matrix.hcat(&self.codomain.relation_matrix());
        let null = kernel_lattice(&stacked);
        // project kernel vectors of [M | R] onto the domain-cover coordinates
        let cols: Vec<Vec<BigInt>> = (0..null.cols())
            .map(|j| null.column(j)[..n].to_vec())
            .collect();
        IntMatrix::from_columns(n, &cols)
    }

    /// Kernel, computed on the free cover with the domain relations lifted
    /// through a basis of the preimage lattice.
    pub fn kernel(&self) -> FgAbelianGroup {
        let pre = self.kernel_cover_lattice();
        let basis = column_lattice_basis(&pre);
        let s = basis.cols();
        // express each domain relation in the basis of the preimage lattice
        let rel = self.domain.relation_matrix();
        let cols: Vec<Vec<BigInt>> = (0..rel.cols())
            .map(|j| {
                solve_exact(&basis, &rel.column(j))
                    .expect("domain relations always lie in the kernel preimage lattice")
            })
            .collect();
        FgAbelianGroup::from_presentation(s, &IntMatrix::from_columns(s, &cols))
    }

    /// Image, as an abstract group: the domain cover modulo the preimage
    /// lattice of the codomain relations.
    pub fn image(&self) -> FgAbelianGroup {
        let pre = self.kernel_cover_lattice();
        FgAbelianGroup::from_presentation(self.domain.generator_count(), &pre)
    }

    /// Cokernel: codomain generators modulo image columns and codomain
    /// relations.
    pub fn cokernel(&self) -> FgAbelianGroup {
        let stacked = self.matrix.hcat(&self.codomain.relation_matrix());
        FgAbelianGroup::from_presentation(self.codomain.generator_count(), &stacked)
    }
}

/// Exactness of `… -f-> H -g-> …` at the middle group `H`.
///
/// Exactness is checked at the lattice level in the cover of `H`: the image
/// lattice of `f` (image columns together with the relations of `H`) must
/// equal the preimage lattice of `g`'s relations, by mutual membership of
/// generators. This is strictly finer than comparing isomorphism classes.
pub fn is_exact_at(f: &GroupHom, g: &GroupHom) -> Result<bool, FgabError> {
    if f.codomain != g.domain {
        return Err(FgabError::MiddleGroupMismatch);
    }
    let image_lattice = f.matrix.hcat(&f.codomain.relation_matrix());
    let kernel_lattice = g.kernel_cover_lattice();

    // im f ⊆ ker g: push each image generator through g and test relations
    for j in 0..image_lattice.cols() {
        let v = g.matrix.mul_vec(&image_lattice.column(j));
        if !g.codomain.in_relation_lattice(&v) {
            return Ok(false);
        }
    }
    // ker g ⊆ im f: solve each kernel generator against the image lattice
    for j in 0..kernel_lattice.cols() {
        if solve_exact(&image_lattice, &kernel_lattice.column(j)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> FgAbelianGroup {
        FgAbelianGroup::free(1)
    }

    fn zn(n: usize) -> FgAbelianGroup {
        FgAbelianGroup::free(n)
    }

    #[test]
    fn well_definedness() {
        // Z/2 -> Z, generator to 1: not well defined (2 does not die)
        let bad = GroupHom::new(
            FgAbelianGroup::cyclic(2),
            z(),
            IntMatrix::from_rows(&[&[1]]),
        );
        assert!(matches!(bad, Err(FgabError::IllDefinedHom { generator: 0 })));
        // Z/2 -> Z/4 sending generator to the 2-element is fine
        let ok = GroupHom::new(
            FgAbelianGroup::cyclic(2),
            FgAbelianGroup::cyclic(4),
            IntMatrix::from_rows(&[&[2]]),
        );
        assert!(ok.is_ok());
    }

    #[test]
    fn kernel_cokernel_of_puncture_map() {
        // j: Z^2 -> Z^n with columns (1,…,1) and 0
        for n in 1..6 {
            let mut m = IntMatrix::zero(n, 2);
            for i in 0..n {
                m.set(i, 0, BigInt::from(1));
            }
            let j = GroupHom::new(zn(2), zn(n), m).unwrap();
            assert_eq!(j.kernel(), z(), "kernel should be Z for n={n}");
            assert_eq!(
                j.cokernel(),
                zn(n - 1),
                "cokernel should be Z^{} for n={n}",
                n - 1
            );
        }
    }

    #[test]
    fn trivial_kernels_and_cokernels() {
        // zero map Z -> Z
        let f = GroupHom::zero(z(), z());
        assert_eq!(f.cokernel(), z());
        assert_eq!(f.kernel(), z());
        // multiplication by 2 on Z
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[&[2]])).unwrap();
        assert_eq!(two.cokernel(), FgAbelianGroup::cyclic(2));
        assert_eq!(two.kernel(), FgAbelianGroup::trivial());
        assert_eq!(two.image(), z());
        // multiplication by 3 has image isomorphic to Z
        let three = GroupHom::new(z(), z(), IntMatrix::from_rows(&[&[3]])).unwrap();
        assert_eq!(three.image(), z());
        // identity on Z/4
        let id = GroupHom::identity(FgAbelianGroup::cyclic(4));
        assert_eq!(id.kernel(), FgAbelianGroup::trivial());
        // zero map Z/6 -> Z
        let f = GroupHom::zero(FgAbelianGroup::cyclic(6), z());
        assert_eq!(f.kernel(), FgAbelianGroup::cyclic(6));
    }

    #[test]
    fn exactness_examples() {
        // 0 -> Z -(id)-> Z -> 0 is exact at the middle
        let from_zero = GroupHom::zero(FgAbelianGroup::trivial(), z());
        let id = GroupHom::identity(z());
        let to_zero = GroupHom::zero(z(), FgAbelianGroup::trivial());
        assert!(is_exact_at(&from_zero, &id).unwrap());
        assert!(is_exact_at(&id, &to_zero).unwrap());

        // Z -(x2)-> Z -(quotient)-> Z/2 is exact at the middle
        let two = GroupHom::new(z(), z(), IntMatrix::from_rows(&[&[2]])).unwrap();
        let quot = GroupHom::new(z(), FgAbelianGroup::cyclic(2), IntMatrix::from_rows(&[&[1]]))
            .unwrap();
        assert!(is_exact_at(&two, &quot).unwrap());

        // Z -(0)-> Z -(0)-> Z is not exact at the middle (ker = Z, im = 0)
        let zero = GroupHom::zero(z(), z());
        assert!(!is_exact_at(&zero, &zero).unwrap());

        // mismatched middle groups are rejected
        let other = GroupHom::zero(zn(2), z());
        assert!(is_exact_at(&zero, &other).is_err());
    }

    #[test]
    fn rank_additivity_free_case() {
        let m = IntMatrix::from_rows(&[&[1, 2, 0], &[0, 0, 0]]);
        let h = GroupHom::new(zn(3), zn(2), m).unwrap();
        assert_eq!(
            h.kernel().rank() + h.image().rank(),
            3,
            "rank-nullity over Z"
        );
    }
}
