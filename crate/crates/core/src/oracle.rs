//! Exhaustive enumeration of small codes.
//!
//! Everything here walks all `q^k` messages and is meant as ground truth for
//! the algebraic routines, never as a decoder. Exceeding the configured
//! threshold is an error; there is no sampling fallback.

use std::collections::BTreeMap;

use crate::code::{distance, weight, Codeword, LinearCode};
use crate::error::{Error, Result};

pub const DEFAULT_THRESHOLD: u64 = 1 << 20;

/// Number of projective codewords of each nonzero weight.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightDistribution {
    pub counts: BTreeMap<usize, u64>,
}

impl WeightDistribution {
    pub fn get(&self, weight: usize) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min_weight(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NearestNeighbors {
    pub d_w: usize,
    pub neighbors: Vec<Codeword>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    threshold: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(DEFAULT_THRESHOLD)
    }
}

impl Oracle {
    pub fn new(threshold: u64) -> Self {
        Self { threshold }
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn admits(&self, code: &LinearCode) -> bool {
        code.message_count() <= u128::from(self.threshold)
    }

    fn check(&self, code: &LinearCode) -> Result<()> {
        if self.admits(code) {
            Ok(())
        } else {
            Err(Error::OracleThreshold {
                size: code.message_count(),
                threshold: self.threshold,
            })
        }
    }

    /// Visits every codeword, messages in odometer order (last coordinate
    /// fastest), starting from the zero message.
    pub fn for_each_codeword(
        &self,
        code: &LinearCode,
        mut visit: impl FnMut(&[u32], &[u32]),
    ) -> Result<()> {
        self.check(code)?;
        let f = code.field();
        let p = f.modulus();
        let k = code.k();
        let mut message = vec![0u32; k];
        let mut word = vec![0u32; code.n()];
        loop {
            visit(&message, &word);
            // Increment; a digit rolling p-1 -> 0 also adds its row once more.
            let mut i = k;
            loop {
                if i == 0 {
                    return Ok(());
                }
                i -= 1;
                message[i] = (message[i] + 1) % p;
                for (w, &g) in word.iter_mut().zip(code.row(i)) {
                    *w = f.add(*w, g);
                }
                if message[i] != 0 {
                    break;
                }
            }
        }
    }

    pub fn min_distance(&self, code: &LinearCode) -> Result<usize> {
        let mut best = usize::MAX;
        self.for_each_codeword(code, |_, v| {
            let wt = weight(v);
            if wt > 0 && wt < best {
                best = wt;
            }
        })?;
        Ok(best)
    }

    /// Raw (non-projective) counts of codewords by weight, including the
    /// zero word at weight 0.
    pub fn raw_weight_counts(&self, code: &LinearCode) -> Result<BTreeMap<usize, u64>> {
        let mut counts = BTreeMap::new();
        self.for_each_codeword(code, |_, v| *counts.entry(weight(v)).or_insert(0) += 1)?;
        Ok(counts)
    }

    /// Projective weight distribution: raw counts divided by `q - 1`.
    pub fn weight_distribution(&self, code: &LinearCode) -> Result<WeightDistribution> {
        let q1 = code.field().order() - 1;
        let counts = self
            .raw_weight_counts(code)?
            .into_iter()
            .filter(|&(w, _)| w > 0)
            .map(|(w, c)| {
                debug_assert_eq!(c % q1, 0);
                (w, c / q1)
            })
            .collect();
        Ok(WeightDistribution { counts })
    }

    /// `α_d(C)`: projective codewords of minimum weight.
    pub fn projective_min_weight_count(&self, code: &LinearCode) -> Result<u64> {
        let dist = self.weight_distribution(code)?;
        Ok(dist.min_weight().map_or(0, |d| dist.get(d)))
    }

    /// Projective codewords of `big` with the given weight that are not in
    /// `sub`. Classes are represented by their element whose first nonzero
    /// coordinate is 1.
    pub fn projective_count_outside(
        &self,
        big: &LinearCode,
        sub: &LinearCode,
        wt: usize,
    ) -> Result<u64> {
        let mut count = 0u64;
        let mut failure = None;
        self.for_each_codeword(big, |_, v| {
            if weight(v) != wt || v.iter().find(|&&x| x != 0) != Some(&1) {
                return;
            }
            match sub.contains(v) {
                Ok(None) => count += 1,
                Ok(Some(_)) => {}
                Err(e) => failure = Some(e),
            }
        })?;
        match failure {
            Some(e) => Err(e),
            None => Ok(count),
        }
    }

    /// All codewords at minimum distance from `w`, in enumeration order.
    pub fn nearest_neighbors(&self, code: &LinearCode, w: &[u32]) -> Result<NearestNeighbors> {
        if w.len() != code.n() {
            return Err(Error::DimensionMismatch {
                op: "nearest_neighbors",
                expected: code.n(),
                found: w.len(),
            });
        }
        let p = code.field().modulus();
        let w: Vec<u32> = w.iter().map(|&x| x % p).collect();
        let mut best = usize::MAX;
        let mut neighbors = Vec::new();
        self.for_each_codeword(code, |m, v| {
            let dist = distance(&w, v);
            if dist < best {
                best = dist;
                neighbors.clear();
            }
            if dist == best {
                neighbors.push(Codeword {
                    v: v.to_vec(),
                    coeffs: m.to_vec(),
                });
            }
        })?;
        Ok(NearestNeighbors {
            d_w: best,
            neighbors,
        })
    }

    pub fn coset_weight(&self, code: &LinearCode, w: &[u32]) -> Result<usize> {
        Ok(self.nearest_neighbors(code, w)?.d_w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::tests::example_code;
    use crate::field::PrimeField;

    #[test]
    fn enumerates_every_message_once() {
        let f = PrimeField::new(3).unwrap();
        let c = LinearCode::from_rows(f, &[[1, 0, 2], [0, 1, 1]]).unwrap();
        let mut seen = Vec::new();
        Oracle::default()
            .for_each_codeword(&c, |m, v| {
                assert_eq!(c.encode(m).unwrap().v, v);
                seen.push(m.to_vec());
            })
            .unwrap();
        assert_eq!(seen.len(), 9);
        assert_eq!(seen[0], vec![0, 0]);
        assert_eq!(seen[1], vec![0, 1]);
        assert_eq!(seen[3], vec![1, 0]);
    }

    #[test]
    fn minimum_distance_examples() {
        let o = Oracle::default();
        assert_eq!(o.min_distance(&example_code()).unwrap(), 3);
        let f2 = PrimeField::new(2).unwrap();
        let rep = LinearCode::from_rows(f2, &[[1, 1, 1]]).unwrap();
        assert_eq!(o.min_distance(&rep).unwrap(), 3);
        let light = LinearCode::from_rows(f2, &[[1, 1, 0, 1], [0, 0, 1, 0]]).unwrap();
        assert_eq!(o.min_distance(&light).unwrap(), 1);
    }

    #[test]
    fn projective_counts() {
        let o = Oracle::default();
        let c = example_code();
        assert_eq!(o.projective_min_weight_count(&c).unwrap(), 4);
        assert_eq!(
            o.projective_min_weight_count(&c.remove_row(0).unwrap())
                .unwrap(),
            2
        );
        let f3 = PrimeField::new(3).unwrap();
        let rep = LinearCode::from_rows(f3, &[[1, 1, 1]]).unwrap();
        assert_eq!(o.projective_min_weight_count(&rep).unwrap(), 1);
        assert_eq!(o.weight_distribution(&rep).unwrap().total(), 1);
    }

    #[test]
    fn neighbors_examples() {
        let o = Oracle::default();
        let c = example_code();
        let own = o.nearest_neighbors(&c, c.row(2)).unwrap();
        assert_eq!(own.d_w, 0);
        assert_eq!(own.neighbors.len(), 1);
        assert_eq!(own.neighbors[0].v, c.row(2));

        let nn = o.nearest_neighbors(&c, &[0, 1, 1, 1, 0, 0]).unwrap();
        assert_eq!(nn.d_w, 1);
        assert_eq!(nn.neighbors.len(), 1);
        assert_eq!(nn.neighbors[0].v, vec![0, 1, 1, 1, 1, 0]);
        assert_eq!(o.coset_weight(&c, &[0, 1, 1, 1, 0, 0]).unwrap(), 1);

        let c1 = c.remove_row(0).unwrap();
        let nn = o.nearest_neighbors(&c1, c.row(0)).unwrap();
        assert_eq!(nn.d_w, 3);
        let words: Vec<Vec<u32>> = nn.neighbors.into_iter().map(|n| n.v).collect();
        assert_eq!(words, vec![vec![0; 6], vec![0, 1, 1, 1, 1, 0]]);
    }

    #[test]
    fn threshold_is_enforced() {
        let o = Oracle::new(7);
        let err = o.min_distance(&example_code()).unwrap_err();
        assert_eq!(
            err,
            Error::OracleThreshold {
                size: 8,
                threshold: 7
            }
        );
    }
}
