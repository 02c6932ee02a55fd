//! Lattice computations on column lattices of integer matrices, all driven
//! by Smith normal form: exact solves, kernel lattices and lattice bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::matrix::IntMatrix;
use super::smith::{smith_normal_form, SmithDecomposition};

/// Solve `a * x = w` over the integers. Returns one solution if any exists.
pub fn solve_exact(a: &IntMatrix, w: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), w.len(), "rhs length mismatch");
    let s = smith_normal_form(a);
    solve_with(&s, a.cols(), w)
}

/// Same as [`solve_exact`] but reusing a precomputed decomposition of `a`.
pub fn solve_with(s: &SmithDecomposition, cols: usize, w: &[BigInt]) -> Option<Vec<BigInt>> {
    // a x = w  <=>  d (v^-1 x) = u w
    let y = s.u.mul_vec(w);
    let diag = s.d.diagonal();
    let mut z = vec![BigInt::zero(); cols];
    for (i, yi) in y.iter().enumerate() {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !yi.is_zero() {
                return None;
            }
        } else {
            let (q, r) = yi.div_rem(&di);
            if !r.is_zero() {
                return None;
            }
            z[i] = q;
        }
    }
    Some(s.v.mul_vec(&z))
}

/// Basis of the kernel lattice `{x : a x = 0}`, one column per basis vector.
pub fn kernel_lattice(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let diag = s.d.diagonal();
    let rank = diag.iter().filter(|d| !d.is_zero()).count();
    let cols: Vec<Vec<BigInt>> = (rank..a.cols()).map(|j| s.v.column(j)).collect();
    IntMatrix::from_columns(a.cols(), &cols)
}

/// Basis of the column lattice of `a` (a full-column-rank matrix spanning the
/// same lattice): the nonzero columns of `u^-1 * d`.
pub fn column_lattice_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let diag = s.d.diagonal();
    let cols: Vec<Vec<BigInt>> = diag
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_zero())
        .map(|(i, d)| {
            s.u_inv
                .column(i)
                .into_iter()
                .map(|x| x * d)
                .collect()
        })
        .collect();
    IntMatrix::from_columns(a.rows(), &cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_diagonal_like() {
        let a = IntMatrix::from_rows(&[&[2, 0], &[0, 3]]);
        let sol = solve_exact(&a, &[BigInt::from(4), BigInt::from(9)]).unwrap();
        assert_eq!(a.mul_vec(&sol), vec![BigInt::from(4), BigInt::from(9)]);
        assert!(solve_exact(&a, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }

    #[test]
    fn kernel_of_sum_map() {
        // x + y + z = 0 has a rank-2 kernel
        let a = IntMatrix::from_rows(&[&[1, 1, 1]]);
        let k = kernel_lattice(&a);
        assert_eq!(k.cols(), 2);
        for j in 0..k.cols() {
            assert!(a.mul_vec(&k.column(j)).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn basis_spans_same_lattice() {
        // columns (2,0),(0,2),(1,1): lattice is {(x,y): x+y even}
        let a = IntMatrix::from_rows(&[&[2, 0, 1], &[0, 2, 1]]);
        let b = column_lattice_basis(&a);
        assert_eq!(b.cols(), 2);
        // each generator of a is in the basis lattice and vice versa
        for j in 0..a.cols() {
            assert!(solve_exact(&b, &a.column(j)).is_some());
        }
        for j in 0..b.cols() {
            assert!(solve_exact(&a, &b.column(j)).is_some());
        }
        assert!(solve_exact(&b, &[BigInt::from(1), BigInt::from(0)]).is_none());
    }
}
