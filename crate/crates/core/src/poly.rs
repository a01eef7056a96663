//! Homogeneous polynomials as dense coefficient vectors over a graded
//! monomial basis.
//!
//! Monomials of degree `g` in `nvars` variables are ordered
//! lexicographically on their exponent vectors, largest first, so for
//! `(x, y)` in degree 2 the order is `x², xy, y²`. Ranking uses the
//! combinatorial number system and costs `O(nvars)` table lookups.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeField};

/// Checked binomial coefficient; `None` on 64-bit overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc·(n-i) is divisible by i+1 at every step.
        acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of monomials of degree `degree` in `nvars` variables.
pub fn basis_size(nvars: usize, degree: usize) -> Result<usize> {
    if nvars == 0 {
        return Ok(usize::from(degree == 0));
    }
    binomial((nvars + degree - 1) as u64, degree as u64)
        .and_then(|v| usize::try_from(v).ok())
        .ok_or(Error::BinomialOverflow { nvars, degree })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    nvars: usize,
    degree: usize,
    size: usize,
    // pascal[a][b] = C(a, b), saturating; only entries <= size are read.
    pascal: Vec<Vec<u64>>,
}

impl MonomialBasis {
    pub fn new(nvars: usize, degree: usize) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::DimensionMismatch {
                op: "MonomialBasis::new",
                expected: 1,
                found: 0,
            });
        }
        let size = basis_size(nvars, degree)?;
        let top = nvars + degree;
        let mut pascal = vec![vec![0u64; top + 1]; top + 1];
        for a in 0..=top {
            pascal[a][0] = 1;
            for b in 1..=a {
                pascal[a][b] = pascal[a - 1][b - 1].saturating_add(pascal[a - 1][b]);
            }
        }
        Ok(Self {
            nvars,
            degree,
            size,
            pascal,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rank(&self, exps: &[u32]) -> Result<usize> {
        if exps.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                op: "monomial_rank",
                expected: self.nvars,
                found: exps.len(),
            });
        }
        let total: usize = exps.iter().map(|&e| e as usize).sum();
        if total != self.degree {
            return Err(Error::WrongDegree {
                expected: self.degree,
                found: total,
            });
        }
        Ok(self.rank_unchecked(exps))
    }

    #[inline]
    pub(crate) fn rank_unchecked(&self, exps: &[u32]) -> usize {
        let mut idx = 0u64;
        let mut left = self.degree;
        for (i, &e) in exps[..self.nvars - 1].iter().enumerate() {
            let e = e as usize;
            let rest = self.nvars - i - 1;
            if e < left {
                // Vectors beating this one at position i: sum over t < left - e
                // of C(rest - 1 + t, t) = C(rest + left - e - 1, left - e - 1).
                let t = left - e - 1;
                idx += self.pascal[rest + t][t];
            }
            left -= e;
        }
        idx as usize
    }

    pub fn unrank(&self, index: usize) -> Result<Vec<u32>> {
        if index >= self.size {
            return Err(Error::IndexOutOfRange {
                index,
                size: self.size,
            });
        }
        let mut rem = index as u64;
        let mut left = self.degree;
        let mut exps = vec![0u32; self.nvars];
        #[allow(clippy::needless_range_loop)]
        for i in 0..self.nvars - 1 {
            let rest = self.nvars - i - 1;
            let mut v = left;
            loop {
                let t = left - v;
                let count = self.pascal[rest - 1 + t][t];
                if rem < count {
                    break;
                }
                rem -= count;
                v -= 1;
            }
            exps[i] = v as u32;
            left -= v;
        }
        exps[self.nvars - 1] = left as u32;
        Ok(exps)
    }

    /// All exponent vectors in basis order.
    pub fn monomials(&self) -> Vec<Vec<u32>> {
        let mut out = Vec::with_capacity(self.size);
        let mut cur = vec![0u32; self.nvars];
        fill(&mut out, &mut cur, 0, self.degree);
        out
    }

    /// For each monomial `m` of this basis, the index of `m·x_var` in the
    /// next degree's basis.
    pub fn shift_table(&self, next: &MonomialBasis, var: usize) -> Vec<usize> {
        debug_assert_eq!(next.degree, self.degree + 1);
        self.monomials()
            .into_iter()
            .map(|mut e| {
                e[var] += 1;
                next.rank_unchecked(&e)
            })
            .collect()
    }
}

fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, left: usize) {
    if pos == cur.len() - 1 {
        cur[pos] = left as u32;
        out.push(cur.clone());
        return;
    }
    for v in (0..=left).rev() {
        cur[pos] = v as u32;
        fill(out, cur, pos + 1, left - v);
    }
}

/// A homogeneous polynomial stored densely in a single degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyVector {
    field: PrimeField,
    nvars: usize,
    degree: usize,
    coeffs: Vec<u32>,
}

impl PolyVector {
    pub fn zero(field: PrimeField, nvars: usize, degree: usize) -> Result<Self> {
        Ok(Self {
            field,
            nvars,
            degree,
            coeffs: vec![0; basis_size(nvars, degree)?],
        })
    }

    pub fn from_coeffs(
        field: PrimeField,
        nvars: usize,
        degree: usize,
        coeffs: Vec<u32>,
    ) -> Result<Self> {
        let size = basis_size(nvars, degree)?;
        if coeffs.len() != size {
            return Err(Error::DimensionMismatch {
                op: "PolyVector::from_coeffs",
                expected: size,
                found: coeffs.len(),
            });
        }
        let p = field.modulus();
        Ok(Self {
            field,
            nvars,
            degree,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        })
    }

    /// Builds a polynomial from `(coefficient, exponent vector)` terms.
    pub fn from_terms(
        field: PrimeField,
        nvars: usize,
        degree: usize,
        terms: &[(u32, &[u32])],
    ) -> Result<Self> {
        let basis = MonomialBasis::new(nvars, degree)?;
        let mut out = Self::zero(field, nvars, degree)?;
        for &(c, e) in terms {
            let i = basis.rank(e)?;
            out.coeffs[i] = field.add(out.coeffs[i], c % field.modulus());
        }
        Ok(out)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<u32> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[u32]) -> Result<FieldElement> {
        let basis = MonomialBasis::new(self.nvars, self.degree)?;
        Ok(self.field.elem(u64::from(self.coeffs[basis.rank(exps)?])))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.modulus(),
                right: other.field.modulus(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                op: "PolyVector::multiply",
                expected: self.nvars,
                found: other.nvars,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let f = self.field;
        let left = MonomialBasis::new(self.nvars, self.degree)?.monomials();
        let right = MonomialBasis::new(other.nvars, other.degree)?.monomials();
        let target = MonomialBasis::new(self.nvars, self.degree + other.degree)?;
        let mut coeffs = vec![0u32; target.size()];
        let mut exps = vec![0u32; self.nvars];
        for (a, ea) in self.coeffs.iter().zip(&left).filter(|(&a, _)| a != 0) {
            for (b, eb) in other.coeffs.iter().zip(&right).filter(|(&b, _)| b != 0) {
                for ((slot, x), y) in exps.iter_mut().zip(ea).zip(eb) {
                    *slot = x + y;
                }
                let i = target.rank_unchecked(&exps);
                coeffs[i] = f.add(coeffs[i], f.mul(*a, *b));
            }
        }
        Ok(Self {
            field: f,
            nvars: self.nvars,
            degree: target.degree(),
            coeffs,
        })
    }

    /// `self · x_var^power`.
    pub fn multiply_by_power(&self, var: usize, power: usize) -> Result<Self> {
        if var >= self.nvars {
            return Err(Error::IndexOutOfRange {
                index: var,
                size: self.nvars,
            });
        }
        if power == 0 {
            return Ok(self.clone());
        }
        let source = MonomialBasis::new(self.nvars, self.degree)?;
        let target = MonomialBasis::new(self.nvars, self.degree + power)?;
        let mut coeffs = vec![0u32; target.size()];
        for (c, mut e) in self.coeffs.iter().zip(source.monomials()) {
            if *c != 0 {
                e[var] += power as u32;
                coeffs[target.rank_unchecked(&e)] = *c;
            }
        }
        Ok(Self {
            field: self.field,
            nvars: self.nvars,
            degree: target.degree(),
            coeffs,
        })
    }

    /// Value at a point given by residues.
    pub fn evaluate(&self, point: &[u32]) -> Result<u32> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch {
                op: "PolyVector::evaluate",
                expected: self.nvars,
                found: point.len(),
            });
        }
        let f = self.field;
        let basis = MonomialBasis::new(self.nvars, self.degree)?;
        let mut acc = 0u32;
        for (c, e) in self.coeffs.iter().zip(basis.monomials()) {
            if *c == 0 {
                continue;
            }
            let mut term = *c;
            for (&x, &k) in point.iter().zip(&e) {
                for _ in 0..k {
                    term = f.mul(term, x);
                }
            }
            acc = f.add(acc, term);
        }
        Ok(acc)
    }
}

/// `a_1·x_1 + … + a_n·x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl LinearForm {
    pub fn new(field: PrimeField, coeffs: Vec<u32>) -> Self {
        let p = field.modulus();
        Self {
            field,
            coeffs: coeffs.into_iter().map(|c| c % p).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// In the degree-1 basis `x_i` has index `i`, so the coefficient
    /// vector carries over unchanged.
    pub fn to_poly(&self) -> PolyVector {
        PolyVector {
            field: self.field,
            nvars: self.coeffs.len(),
            degree: 1,
            coeffs: self.coeffs.clone(),
        }
    }
}

pub fn product_of_linear_forms(forms: &[LinearForm]) -> Result<PolyVector> {
    let (first, rest) = forms.split_first().ok_or(Error::EmptyProduct)?;
    rest.iter()
        .try_fold(first.to_poly(), |acc, l| acc.multiply(&l.to_poly()))
}
