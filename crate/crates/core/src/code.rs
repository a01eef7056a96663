//! Linear codes given by a generator matrix, kept verbatim.
//!
//! Row order matters downstream: message coordinates, the variables of the
//! dual linear forms and the recovered point all index rows of `G`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::ideal;
use crate::linalg::Matrix;

#[derive(Debug)]
pub struct LinearCode {
    generator: Matrix,
    min_distance: OnceLock<usize>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let min_distance = OnceLock::new();
        if let Some(&d) = self.min_distance.get() {
            let _ = min_distance.set(d);
        }
        Self {
            generator: self.generator.clone(),
            min_distance,
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}

impl Eq for LinearCode {}

/// A codeword together with the message that encodes to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codeword {
    pub v: Vec<u32>,
    pub coeffs: Vec<u32>,
}

impl LinearCode {
    /// Validates `1 <= k <= n` and `rank(G) = k`.
    pub fn new(generator: Matrix) -> Result<Self> {
        let (k, n) = (generator.rows(), generator.cols());
        if k == 0 || k > n {
            return Err(Error::InvalidShape { k, n });
        }
        let rank = generator.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(Self {
            generator,
            min_distance: OnceLock::new(),
        })
    }

    pub fn from_rows<R: AsRef<[u32]>>(field: PrimeField, rows: &[R]) -> Result<Self> {
        let n = rows.first().map_or(0, |r| r.as_ref().len());
        Self::new(Matrix::from_rows(field, n, rows)?)
    }

    pub fn field(&self) -> PrimeField {
        self.generator.field()
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn row(&self, j: usize) -> &[u32] {
        self.generator.row(j)
    }

    /// Minimum distance by the rank criterion on products of the column
    /// forms, computed on first use and cached.
    pub fn min_distance(&self) -> Result<usize> {
        if let Some(&d) = self.min_distance.get() {
            return Ok(d);
        }
        let d = ideal::min_distance(self)?;
        Ok(*self.min_distance.get_or_init(|| d))
    }

    /// Number of messages, `q^k`, saturating at `u128::MAX`.
    pub fn message_count(&self) -> u128 {
        u128::from(self.field().order()).saturating_pow(self.k() as u32)
    }

    pub fn encode(&self, message: &[u32]) -> Result<Codeword> {
        if message.len() != self.k() {
            return Err(Error::DimensionMismatch {
                op: "encode",
                expected: self.k(),
                found: message.len(),
            });
        }
        let p = self.field().modulus();
        let coeffs: Vec<u32> = message.iter().map(|&m| m % p).collect();
        Ok(Codeword {
            v: self.generator.vec_mul(&coeffs)?,
            coeffs,
        })
    }

    /// The message `x` with `x·G = v`, if `v` is a codeword.
    pub fn contains(&self, v: &[u32]) -> Result<Option<Vec<u32>>> {
        if v.len() != self.n() {
            return Err(Error::DimensionMismatch {
                op: "contains",
                expected: self.n(),
                found: v.len(),
            });
        }
        let p = self.field().modulus();
        let v: Vec<u32> = v.iter().map(|&x| x % p).collect();
        match self.generator.transpose().solve(&v) {
            Ok(x) => Ok(Some(x)),
            Err(Error::Inconsistent) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// The code generated by `G` with `w` appended as its last row.
    pub fn augment(&self, w: &[u32]) -> Result<LinearCode> {
        if self.contains(w)?.is_some() {
            return Err(Error::AlreadyCodeword);
        }
        let mut g = self.generator.clone();
        g.push_row(w)?;
        LinearCode::new(g)
    }

    /// Deletes the given coordinate positions. When the remaining columns
    /// still have rank `k` the rows are kept verbatim; otherwise the result
    /// is generated by the nonzero rows of the reduced echelon form.
    pub fn puncture(&self, columns: &[usize]) -> Result<LinearCode> {
        let n = self.n();
        if let Some(&bad) = columns.iter().find(|&&c| c >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: n,
            });
        }
        let keep: Vec<usize> = (0..n).filter(|c| !columns.contains(c)).collect();
        if keep.is_empty() {
            return Err(Error::PunctureAll(n));
        }
        let g = self.generator.select_columns(&keep);
        let rref = g.rref();
        if rref.rank == self.k() {
            return LinearCode::new(g);
        }
        if rref.rank == 0 {
            return Err(Error::RankDeficient {
                rank: 0,
                k: self.k(),
            });
        }
        let rows: Vec<usize> = (0..rref.rank).collect();
        LinearCode::new(rref.matrix.select_rows(&rows))
    }

    /// The code spanned by all rows except row `j`.
    pub fn remove_row(&self, j: usize) -> Result<LinearCode> {
        if self.k() < 2 {
            return Err(Error::SingleRow);
        }
        if j >= self.k() {
            return Err(Error::IndexOutOfRange {
                index: j,
                size: self.k(),
            });
        }
        let rows: Vec<usize> = (0..self.k()).filter(|&i| i != j).collect();
        LinearCode::new(self.generator.select_rows(&rows))
    }
}

/// Number of nonzero coordinates.
pub fn weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// Hamming distance between two words of equal length.
pub fn distance(u: &[u32], v: &[u32]) -> usize {
    u.iter().zip(v).filter(|(a, b)| a != b).count()
}

/// `u - v` coordinatewise.
pub fn sub(field: PrimeField, u: &[u32], v: &[u32]) -> Vec<u32> {
    u.iter().zip(v).map(|(&a, &b)| field.sub(a, b)).collect()
}

/// `u + v` coordinatewise.
pub fn add(field: PrimeField, u: &[u32], v: &[u32]) -> Vec<u32> {
    u.iter().zip(v).map(|(&a, &b)| field.add(a, b)).collect()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn example_code() -> LinearCode {
        let f = PrimeField::new(2).unwrap();
        LinearCode::from_rows(
            f,
            &[[1, 0, 0, 1, 1, 0], [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]],
        )
        .unwrap()
    }

    #[test]
    fn rejects_rank_deficient_and_bad_shape() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(
            LinearCode::from_rows(f, &[[1, 2, 0], [2, 1, 0]]),
            Err(Error::RankDeficient { rank: 1, k: 2 })
        );
        assert_eq!(
            LinearCode::from_rows(f, &[[1], [0]]),
            Err(Error::InvalidShape { k: 2, n: 1 })
        );
    }

    #[test]
    fn encode_examples() {
        let c = example_code();
        assert_eq!(c.encode(&[0, 0, 0]).unwrap().v, vec![0; 6]);
        assert_eq!(c.encode(&[0, 1, 0]).unwrap().v, vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(c.encode(&[1, 1, 1]).unwrap().v, vec![1, 1, 1, 0, 0, 0]);
        assert!(matches!(
            c.encode(&[1, 1]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn weights() {
        assert_eq!(weight(&[0, 0, 0]), 0);
        assert_eq!(weight(&[0, 0, 0, 0, 1, 0]), 1);
        assert_eq!(weight(&[1, 1, 1, 0, 0, 0]), 3);
    }

    #[test]
    fn membership() {
        let c = example_code();
        for j in 0..3 {
            assert!(c.contains(c.row(j)).unwrap().is_some());
        }
        assert_eq!(c.contains(&[0, 1, 1, 1, 0, 0]).unwrap(), None);
        assert_eq!(
            c.contains(&[0, 1, 1, 1, 1, 0]).unwrap(),
            Some(vec![0, 1, 1])
        );
    }

    #[test]
    fn augment_example() {
        let c = example_code();
        let cw = c.augment(&[0, 1, 1, 1, 0, 0]).unwrap();
        assert_eq!(cw.k(), 4);
        assert_eq!(
            cw.generator().to_rows(),
            vec![
                vec![1, 0, 0, 1, 1, 0],
                vec![0, 1, 0, 1, 0, 1],
                vec![0, 0, 1, 0, 1, 1],
                vec![0, 1, 1, 1, 0, 0],
            ]
        );
        assert_eq!(c.augment(c.row(1)), Err(Error::AlreadyCodeword));
    }

    #[test]
    fn puncture_examples() {
        let c = example_code();
        assert_eq!(c.puncture(&[]).unwrap(), c);
        let p = c.puncture(&[5]).unwrap();
        assert_eq!((p.n(), p.k()), (5, 3));
        assert_eq!(p.min_distance().unwrap(), 2);
        assert_eq!(c.puncture(&[0, 1, 2, 3, 4, 5]), Err(Error::PunctureAll(6)));
    }

    #[test]
    fn puncture_can_drop_dimension() {
        let f = PrimeField::new(2).unwrap();
        let c = LinearCode::from_rows(f, &[[1, 0, 1], [0, 1, 1]]).unwrap();
        let p = c.puncture(&[1, 2]).unwrap();
        assert_eq!((p.n(), p.k()), (1, 1));
    }

    #[test]
    fn remove_row_examples() {
        let c = example_code();
        let c1 = c.remove_row(0).unwrap();
        assert_eq!(
            c1.generator().to_rows(),
            vec![c.row(1).to_vec(), c.row(2).to_vec()]
        );
        assert_eq!(c1.min_distance().unwrap(), 3);
        let back = c1.augment(c.row(0)).unwrap();
        assert_eq!(back.generator().rref().matrix, c.generator().rref().matrix);
        let f = PrimeField::new(2).unwrap();
        let single = LinearCode::from_rows(f, &[[1, 1, 1]]).unwrap();
        assert_eq!(single.remove_row(0), Err(Error::SingleRow));
        assert!(matches!(
            c.remove_row(3),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    fn random_code() -> impl Strategy<Value = LinearCode> {
        (prop::sample::select(vec![2u64, 3, 5]), 1usize..4, 0usize..5).prop_flat_map(
            |(p, k, extra)| {
                let n = k + extra;
                prop::collection::vec(0..p as u32, k * n).prop_filter_map(
                    "rank deficient",
                    move |data| {
                        let f = PrimeField::new(p).unwrap();
                        let rows: Vec<&[u32]> = data.chunks(n).collect();
                        LinearCode::from_rows(f, &rows).ok()
                    },
                )
            },
        )
    }

    proptest! {
        #[test]
        fn encode_injective_and_contained(c in random_code()) {
            let f = c.field();
            let q = f.order();
            let total = q.pow(c.k() as u32);
            let mut seen = std::collections::HashSet::new();
            for idx in 0..total {
                let mut m = Vec::with_capacity(c.k());
                let mut r = idx;
                for _ in 0..c.k() {
                    m.push((r % q) as u32);
                    r /= q;
                }
                let cw = c.encode(&m).unwrap();
                prop_assert_eq!(c.contains(&cw.v).unwrap(), Some(m));
                prop_assert!(seen.insert(cw.v));
            }
        }

        #[test]
        fn hamming_metric(u in prop::collection::vec(0u32..3, 6), v in prop::collection::vec(0u32..3, 6), w in prop::collection::vec(0u32..3, 6)) {
            let f = PrimeField::new(3).unwrap();
            prop_assert_eq!(weight(&sub(f, &u, &v)), weight(&sub(f, &v, &u)));
            prop_assert_eq!(weight(&sub(f, &u, &v)), distance(&u, &v));
            prop_assert!(distance(&u, &w) <= distance(&u, &v) + distance(&v, &w));
        }

        #[test]
        fn augmented_codewords(c in random_code(), seed in any::<u64>()) {
            let f = c.field();
            let w: Vec<u32> = (0..c.n()).map(|i| f.reduce(seed >> (3 * i))).collect();
            prop_assume!(c.contains(&w).unwrap().is_none());
            let big = c.augment(&w).unwrap();
            let q = f.order();
            for idx in 0..q.pow(big.k() as u32) {
                let mut m = Vec::with_capacity(big.k());
                let mut r = idx;
                for _ in 0..big.k() {
                    m.push((r % q) as u32);
                    r /= q;
                }
                let lambda = m[c.k()];
                let base = c.encode(&m[..c.k()]).unwrap().v;
                let scaled: Vec<u32> = w.iter().map(|&x| f.mul(x, lambda)).collect();
                prop_assert_eq!(big.encode(&m).unwrap().v, add(f, &base, &scaled));
            }
        }
    }
}
