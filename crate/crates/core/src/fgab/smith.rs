use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// Result of a Smith normal form computation: `u * m * v = d` with `u`, `v`
/// unimodular and `d` diagonal, nonnegative, with `d1 | d2 | …`.
///
/// `u_inv` is the integer inverse of `u`; it is maintained during the
/// elimination and is what turns the diagonal form back into a basis of the
/// column lattice of `m`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero invariant factors (the rank of the matrix).
    pub fn rank(&self) -> usize {
        self.d
            .diagonal()
            .iter()
            .filter(|x| !x.is_zero())
            .count()
    }

    /// Nonzero diagonal entries, in divisor order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d
            .diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }
}

struct Worker {
    m: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
}

impl Worker {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.m.cols() {
            let x = self.m.get(a, j).clone();
            let y = self.m.get(b, j).clone();
            self.m.set(a, j, y);
            self.m.set(b, j, x);
        }
        for j in 0..self.u.cols() {
            let x = self.u.get(a, j).clone();
            let y = self.u.get(b, j).clone();
            self.u.set(a, j, y);
            self.u.set(b, j, x);
        }
        // inverse of a swap is the same swap, applied to columns of u_inv
        for i in 0..self.u_inv.rows() {
            let x = self.u_inv.get(i, a).clone();
            let y = self.u_inv.get(i, b).clone();
            self.u_inv.set(i, a, y);
            self.u_inv.set(i, b, x);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.m.rows() {
            let x = self.m.get(i, a).clone();
            let y = self.m.get(i, b).clone();
            self.m.set(i, a, y);
            self.m.set(i, b, x);
        }
        for i in 0..self.v.rows() {
            let x = self.v.get(i, a).clone();
            let y = self.v.get(i, b).clone();
            self.v.set(i, a, y);
            self.v.set(i, b, x);
        }
    }

    /// row[i] += c * row[k]
    fn add_row(&mut self, i: usize, k: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.m.cols() {
            let v = self.m.get(i, j) + c * self.m.get(k, j);
            self.m.set(i, j, v);
        }
        for j in 0..self.u.cols() {
            let v = self.u.get(i, j) + c * self.u.get(k, j);
            self.u.set(i, j, v);
        }
        // (E_{i,k}(c))^{-1} = E_{i,k}(-c), applied on the right: col k -= c * col i
        for r in 0..self.u_inv.rows() {
            let v = self.u_inv.get(r, k) - c * self.u_inv.get(r, i);
            self.u_inv.set(r, k, v);
        }
    }

    /// col[j] += c * col[k]
    fn add_col(&mut self, j: usize, k: usize, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.m.rows() {
            let v = self.m.get(i, j) + c * self.m.get(i, k);
            self.m.set(i, j, v);
        }
        for i in 0..self.v.rows() {
            let v = self.v.get(i, j) + c * self.v.get(i, k);
            self.v.set(i, j, v);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.m.cols() {
            let v = -self.m.get(i, j).clone();
            self.m.set(i, j, v);
        }
        for j in 0..self.u.cols() {
            let v = -self.u.get(i, j).clone();
            self.u.set(i, j, v);
        }
        for r in 0..self.u_inv.rows() {
            let v = -self.u_inv.get(r, i).clone();
            self.u_inv.set(r, i, v);
        }
    }

    /// Smallest-nonzero-magnitude pivot in the trailing submatrix, ties
    /// broken by lowest (row, col).
    fn find_pivot(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for i in k..self.m.rows() {
            for j in k..self.m.cols() {
                let e = self.m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let mag = e.abs();
                match &best {
                    Some((m, _, _)) if *m <= mag => {}
                    _ => best = Some((mag, i, j)),
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Nearest-integer quotient, which keeps intermediate entries small.
fn rounded_div(a: &BigInt, b: &BigInt) -> BigInt {
    let (mut q, r) = a.div_rem(b);
    // bias the remainder into [-|b|/2, |b|/2]
    if r.abs() * 2 > b.abs() {
        if r.sign() == b.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Smith normal form of an integer matrix.
///
/// Returns `(u, d, v)` bundled with the inverse of `u`, such that
/// `u * m * v = d`, `u` and `v` unimodular, `d` diagonal with nonnegative
/// entries satisfying the divisibility chain. Total on all matrices,
/// including empty ones (which yield an empty `d` and identity `u`, `v`).
///
/// Pivoting is by smallest nonzero magnitude with a deterministic (row, col)
/// tie-break, so the transforms are reproducible run to run.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let rows = m.rows();
    let cols = m.cols();
    let mut w = Worker {
        m: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
    };

    let steps = rows.min(cols);
    let mut k = 0;
    while k < steps {
        let Some((pi, pj)) = w.find_pivot(k) else {
            break;
        };
        w.swap_rows(k, pi);
        w.swap_cols(k, pj);

        // clear row and column k; a failed division reintroduces work, so
        // loop until the pivot divides everything it faces
        loop {
            let mut dirty = false;
            for i in (k + 1)..rows {
                if !w.m.get(i, k).is_zero() {
                    let q = rounded_div(w.m.get(i, k), w.m.get(k, k));
                    w.add_row(i, k, &(-q));
                    if !w.m.get(i, k).is_zero() {
                        // remainder is smaller than the pivot: promote it
                        w.swap_rows(k, i);
                        dirty = true;
                    }
                }
            }
            for j in (k + 1)..cols {
                if !w.m.get(k, j).is_zero() {
                    let q = rounded_div(w.m.get(k, j), w.m.get(k, k));
                    w.add_col(j, k, &(-q));
                    if !w.m.get(k, j).is_zero() {
                        w.swap_cols(k, j);
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }

            // divisibility pass: the pivot must divide the whole trailing block
            let pivot = w.m.get(k, k).clone();
            let offender = (k + 1..rows)
                .flat_map(|i| (k + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.m.get(i, j).mod_floor(&pivot).is_zero());
            if let Some((i, _)) = offender {
                // fold the offending row into row k and keep reducing
                w.add_row(k, i, &BigInt::from(1));
            } else {
                break;
            }
        }

        if w.m.get(k, k).is_negative() {
            w.negate_row(k);
        }
        k += 1;
    }

    SmithDecomposition {
        u: w.u,
        u_inv: w.u_inv,
        d: w.m,
        v: w.v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).mul(&s.v), s.d, "u*m*v != d for {m:?}");
        assert!(s.u.is_unimodular(), "u not unimodular");
        assert!(s.v.is_unimodular(), "v not unimodular");
        assert_eq!(
            s.u.mul(&s.u_inv),
            IntMatrix::identity(m.rows()),
            "u_inv is not the inverse of u"
        );
        let diag = s.d.diagonal();
        for pair in diag.windows(2) {
            if !pair[0].is_zero() {
                assert!(
                    pair[1].mod_floor(&pair[0]).is_zero(),
                    "divisibility chain broken: {diag:?}"
                );
            } else {
                assert!(pair[1].is_zero(), "zero before nonzero in chain");
            }
        }
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d.get(i, j).is_zero(), "d not diagonal");
                }
            }
        }
        s
    }

    #[test]
    fn zero_one_by_one() {
        let s = check(&IntMatrix::from_rows(&[&[0]]));
        assert_eq!(s.d, IntMatrix::from_rows(&[&[0]]));
        assert_eq!(s.u, IntMatrix::identity(1));
        assert_eq!(s.v, IntMatrix::identity(1));
    }

    #[test]
    fn crt_pair() {
        // invariant factors of Z/2 + Z/3 are (1, 6)
        let s = check(&IntMatrix::from_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.d.diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn symmetric_pair() {
        // det 20, entry gcd 2: invariant factors (2, 10)
        let s = check(&IntMatrix::from_rows(&[&[6, 4], &[4, 6]]));
        assert_eq!(s.d.diagonal(), vec![BigInt::from(2), BigInt::from(10)]);
    }

    #[test]
    fn empty_matrices() {
        let s = check(&IntMatrix::zero(0, 3));
        assert_eq!(s.d.rows(), 0);
        assert_eq!(s.d.cols(), 3);
        assert_eq!(s.v, IntMatrix::identity(3));
        let s = check(&IntMatrix::zero(2, 0));
        assert_eq!(s.u, IntMatrix::identity(2));
    }

    #[test]
    fn rank_deficient() {
        let s = check(&IntMatrix::from_rows(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(s.rank(), 1);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(1)]);
    }
}
