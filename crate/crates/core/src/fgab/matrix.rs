use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// Dense integer matrix with arbitrary-precision entries, row-major.
///
/// `0 x n` and `n x 0` matrices are allowed; they carry no entries but
/// remember both dimensions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Convenience constructor from machine integers, row-major.
    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        Self {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row mismatch in hcat");
        let mut out = Self::zero(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..other.cols {
                out.set(i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }

    /// Matrix built from a list of columns; `rows` disambiguates the empty list.
    pub fn from_columns(rows: usize, columns: &[Vec<BigInt>]) -> Self {
        let mut out = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, v) in col.iter().enumerate() {
                out.set(i, j, v.clone());
            }
        }
        out
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    /// True when the determinant is +1 or -1.
    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.determinant().abs().is_one()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let row: Vec<String> =
                    (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
                format!("[{}]", row.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

// JSON form: array of rows, each entry a JSON integer when it fits in
// i64/u64 and a decimal string otherwise (entries can exceed any fixed
// width). Both forms are accepted on input.
pub(crate) fn serialize_bigint<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    if let Ok(x) = i64::try_from(v.clone()) {
        s.serialize_i64(x)
    } else if let Ok(x) = u64::try_from(v.clone()) {
        s.serialize_u64(x)
    } else {
        s.serialize_str(&v.to_string())
    }
}

pub(crate) fn bigint_from_json(value: &serde_json::Value) -> Option<BigInt> {
    match value {
        serde_json::Value::Number(n) => {
            if let Some(x) = n.as_i64() {
                Some(BigInt::from(x))
            } else {
                n.as_u64().map(BigInt::from)
            }
        }
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Row<'a>(&'a IntMatrix, usize);
        impl Serialize for Row<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut seq = serializer.serialize_seq(Some(self.0.cols))?;
                for j in 0..self.0.cols {
                    struct Entry<'a>(&'a BigInt);
                    impl Serialize for Entry<'_> {
                        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                            serialize_bigint(self.0, s)
                        }
                    }
                    seq.serialize_element(&Entry(self.0.get(self.1, j)))?;
                }
                seq.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(&Row(self, i))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MatrixVisitor;
        impl<'de> Visitor<'de> for MatrixVisitor {
            type Value = IntMatrix;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of rows of integers (numbers or decimal strings)")
            }

            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<IntMatrix, A::Error> {
                let mut rows: Vec<Vec<BigInt>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<serde_json::Value>>()? {
                    let parsed: Result<Vec<BigInt>, A::Error> = row
                        .iter()
                        .map(|v| {
                            bigint_from_json(v).ok_or_else(|| {
                                de::Error::custom(format!("not an integer entry: {v}"))
                            })
                        })
                        .collect();
                    rows.push(parsed?);
                }
                let r = rows.len();
                let c = rows.first().map_or(0, Vec::len);
                if rows.iter().any(|row| row.len() != c) {
                    return Err(de::Error::custom("ragged matrix rows"));
                }
                Ok(IntMatrix::from_entries(
                    r,
                    c,
                    rows.into_iter().flatten().collect(),
                ))
            }
        }
        deserializer.deserialize_seq(MatrixVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_determinant() {
        let a = IntMatrix::from_rows(&[&[1, 2], &[3, 4]]);
        let b = IntMatrix::from_rows(&[&[0, 1], &[1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab, IntMatrix::from_rows(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.determinant(), BigInt::from(-2));
        assert!(b.is_unimodular());
    }

    #[test]
    fn empty_shapes() {
        let m = IntMatrix::zero(0, 3);
        assert_eq!(m.rows(), 0);
        assert_eq!(m.cols(), 3);
        assert!(m.is_zero());
        assert_eq!(IntMatrix::zero(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn json_round_trip_with_big_entries() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMatrix::from_entries(1, 2, vec![big.clone(), BigInt::from(-7)]);
        let text = serde_json::to_string(&m).unwrap();
        let back: IntMatrix = serde_json::from_str(&text).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.get(0, 0), &big);
    }
}
