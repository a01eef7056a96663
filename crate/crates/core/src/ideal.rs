//! Ideals generated by products of linear forms, handled entirely through
//! their graded pieces.
//!
//! Every ideal here is generated in a single degree `g`, so it is stored as
//! the coefficient matrix of its generators in `S_g`. Higher pieces are
//! obtained by multiplying a basis of the previous piece by each variable,
//! and colon ideals, Hilbert functions and degrees reduce to ranks of these
//! matrices.

use std::fmt;

use itertools::Itertools;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::linalg::{preimage_of_colspace, EchelonBasis, Matrix};
use crate::poly::{basis_size, product_of_linear_forms, LinearForm, MonomialBasis, PolyVector};

/// Generators of a homogeneous ideal, all of degree `gen_degree`, as the
/// rows of a coefficient matrix over the graded-lex monomial basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealPiece {
    nvars: usize,
    gen_degree: usize,
    gens: Matrix,
}

impl IdealPiece {
    pub fn new(nvars: usize, gen_degree: usize, gens: Matrix) -> Result<Self> {
        let size = basis_size(nvars, gen_degree)?;
        if gens.cols() != size {
            return Err(Error::DimensionMismatch {
                op: "IdealPiece::new",
                expected: size,
                found: gens.cols(),
            });
        }
        Ok(Self {
            nvars,
            gen_degree,
            gens,
        })
    }

    /// Ideal generated by the given polynomials, which must share field,
    /// variable count and degree.
    pub fn from_polys(polys: &[PolyVector]) -> Result<Self> {
        let first = polys.first().ok_or(Error::EmptyProduct)?;
        let (field, nvars, degree) = (first.field(), first.nvars(), first.degree());
        let mut gens = Matrix::zeros(field, 0, first.coeffs().len());
        for p in polys {
            if p.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.modulus(),
                    right: p.field().modulus(),
                });
            }
            if p.degree() != degree || p.nvars() != nvars {
                return Err(Error::WrongDegree {
                    expected: degree,
                    found: p.degree(),
                });
            }
            gens.push_row(p.coeffs())?;
        }
        Self::new(nvars, degree, gens)
    }

    pub fn field(&self) -> PrimeField {
        self.gens.field()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gen_degree(&self) -> usize {
        self.gen_degree
    }

    pub fn gens(&self) -> &Matrix {
        &self.gens
    }

    /// Upper end of the degree window searched by the stabilization loops.
    pub fn degree_cap(&self) -> usize {
        self.gen_degree + self.nvars + 4
    }
}

/// The linear form `L_j = Σ_i G[i][j]·x_i` of each column of `G`.
pub fn column_forms(code: &LinearCode) -> Vec<LinearForm> {
    let g = code.generator();
    (0..code.n())
        .map(|j| LinearForm::new(code.field(), g.column(j)))
        .collect()
}

/// Products `L_{j_1}···L_{j_s}` over `s`-subsets of columns, in
/// lexicographic subset order, produced lazily.
pub fn ideal_generators(code: &LinearCode, s: usize) -> Result<impl Iterator<Item = PolyVector>> {
    check_subset_size(code, s)?;
    // Validate the target basis size once so the products below cannot overflow.
    basis_size(code.k(), s)?;
    let forms = column_forms(code);
    Ok((0..code.n()).combinations(s).map(move |subset| {
        let factors: Vec<LinearForm> = subset.iter().map(|&j| forms[j].clone()).collect();
        product_of_linear_forms(&factors).expect("nonempty product of validated forms")
    }))
}

fn check_subset_size(code: &LinearCode, s: usize) -> Result<()> {
    if s == 0 || s > code.n() {
        return Err(Error::DegreeOutOfRange {
            degree: s,
            reason: "product size must lie in 1..=n",
        });
    }
    Ok(())
}

/// `I_s(C)`, one generator per `s`-subset of columns.
pub fn build_ideal(code: &LinearCode, s: usize) -> Result<IdealPiece> {
    let nvars = code.k();
    let mut gens = Matrix::zeros(code.field(), 0, basis_size(nvars, s)?);
    for p in ideal_generators(code, s)? {
        gens.push_row(p.coeffs())?;
    }
    IdealPiece::new(nvars, s, gens)
}

/// Walks the graded pieces `(I)_g, (I)_{g+1}, …` of an ideal, each held as
/// an echelon basis.
pub struct GradedPieces<'a> {
    ideal: &'a IdealPiece,
    degree: usize,
    basis: MonomialBasis,
    piece: EchelonBasis,
}

impl<'a> GradedPieces<'a> {
    pub fn new(ideal: &'a IdealPiece) -> Result<Self> {
        let basis = MonomialBasis::new(ideal.nvars, ideal.gen_degree)?;
        let mut piece = EchelonBasis::new(ideal.field(), basis.size());
        for row in ideal.gens.row_iter() {
            if piece.rank() == basis.size() {
                break;
            }
            piece.insert(row.to_vec());
        }
        Ok(Self {
            ideal,
            degree: ideal.gen_degree,
            basis,
            piece,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn piece(&self) -> &EchelonBasis {
        &self.piece
    }

    pub fn monomials(&self) -> &MonomialBasis {
        &self.basis
    }

    /// Moves to the next degree: `(I)_{m+1} = S_1·(I)_m`.
    pub fn advance(&mut self) -> Result<()> {
        let nvars = self.ideal.nvars;
        let next = MonomialBasis::new(nvars, self.degree + 1)?;
        let tables: Vec<Vec<usize>> = (0..nvars)
            .map(|v| self.basis.shift_table(&next, v))
            .collect();
        let mut piece = EchelonBasis::new(self.ideal.field(), next.size());
        'outer: for row in self.piece.rows() {
            for table in &tables {
                if piece.rank() == next.size() {
                    break 'outer;
                }
                let mut shifted = vec![0u32; next.size()];
                for (i, &c) in row.iter().enumerate() {
                    shifted[table[i]] = c;
                }
                piece.insert(shifted);
            }
        }
        self.degree += 1;
        self.basis = next;
        self.piece = piece;
        Ok(())
    }
}

/// Echelon basis of `(I)_m`.
pub fn graded_piece(ideal: &IdealPiece, m: usize) -> Result<EchelonBasis> {
    if m < ideal.gen_degree {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            reason: "below the generator degree",
        });
    }
    let mut walk = GradedPieces::new(ideal)?;
    while walk.degree() < m {
        walk.advance()?;
    }
    Ok(walk.piece)
}

pub fn graded_piece_rank(ideal: &IdealPiece, m: usize) -> Result<usize> {
    Ok(graded_piece(ideal, m)?.rank())
}

/// Largest `s` such that the `s`-fold products of column forms span all of
/// `R_s`. Each rank computation stops as soon as the span is full.
pub fn min_distance(code: &LinearCode) -> Result<usize> {
    min_distance_capped(code, code.n())
}

/// `min(d, cap)`: stops probing once degree `cap` is known to be full.
pub fn min_distance_capped(code: &LinearCode, cap: usize) -> Result<usize> {
    let k = code.k();
    for s in 1..=cap.min(code.n()) {
        let full = basis_size(k, s)?;
        let mut span = EchelonBasis::new(code.field(), full);
        for p in ideal_generators(code, s)? {
            span.insert(p.into_coeffs());
            if span.rank() == full {
                break;
            }
        }
        if span.rank() < full {
            return Ok(s - 1);
        }
    }
    Ok(cap.min(code.n()))
}

/// `dim (S/I)_m`.
pub fn hilbert_function(ideal: &IdealPiece, m: usize) -> Result<usize> {
    let total = basis_size(ideal.nvars, m)?;
    if m < ideal.gen_degree {
        return Ok(total);
    }
    Ok(total - graded_piece_rank(ideal, m)?)
}

/// Stable value of the Hilbert function: evaluated from the generator
/// degree upward until two consecutive values agree.
pub fn ideal_degree(ideal: &IdealPiece) -> Result<usize> {
    let cap = ideal.degree_cap();
    let mut walk = GradedPieces::new(ideal)?;
    let mut prev = walk.monomials().size() - walk.piece().rank();
    while walk.degree() < cap {
        walk.advance()?;
        let h = walk.monomials().size() - walk.piece().rank();
        if h == prev {
            return Ok(h);
        }
        prev = h;
    }
    Err(Error::NoStabilization { cap })
}

/// `α_d(C)`, the number of projective minimum-weight codewords, as the
/// degree of `I_{d+1}(C)`. When `d = n` (only possible for `k = 1`) there
/// are no `(n+1)`-subsets and the ideal is zero.
pub fn min_weight_count(code: &LinearCode) -> Result<usize> {
    let d = code.min_distance()?;
    let ideal = if d < code.n() {
        build_ideal(code, d + 1)?
    } else {
        let size = basis_size(code.k(), d + 1)?;
        IdealPiece::new(code.k(), d + 1, Matrix::zeros(code.field(), 0, size))?
    };
    ideal_degree(&ideal)
}

/// Degree of `I : x_var`, from `dim (S/(I:x_var))_m = dim S_m − dim{f ∈ S_m :
/// f·x_var ∈ (I)_{m+1}}`, stabilized as in [`ideal_degree`].
pub fn colon_degree(ideal: &IdealPiece, var: usize) -> Result<usize> {
    if var >= ideal.nvars {
        return Err(Error::IndexOutOfRange {
            index: var,
            size: ideal.nvars,
        });
    }
    let cap = ideal.degree_cap();
    let mut walk = GradedPieces::new(ideal)?;
    let mut m = ideal.gen_degree.saturating_sub(1);
    if m == ideal.gen_degree {
        // Degree-0 generators: start one step up so (I)_{m+1} is available.
        walk.advance()?;
    }
    let mut prev: Option<usize> = None;
    loop {
        // Here walk holds (I)_{m+1}.
        let source = MonomialBasis::new(ideal.nvars, m)?;
        let table = source.shift_table(walk.monomials(), var);
        let mut span = walk.piece().clone();
        let before = span.rank();
        for &target in &table {
            let mut row = vec![0u32; walk.monomials().size()];
            row[target] = 1;
            span.insert(row);
        }
        // x_var·S_m is injective, so dim (S/(I:x_var))_m = rank([A|B]) - rank(A)
        // with A spanning (I)_{m+1} and B the image of S_m.
        let h = span.rank() - before;
        if prev == Some(h) {
            return Ok(h);
        }
        prev = Some(h);
        m += 1;
        if m + 1 > cap {
            return Err(Error::NoStabilization { cap });
        }
        walk.advance()?;
    }
}

/// A subspace of linear forms, stored as the nonzero rows of its reduced
/// echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFormSpace {
    nvars: usize,
    basis: Matrix,
}

impl LinearFormSpace {
    pub fn from_vectors(field: PrimeField, nvars: usize, vectors: &[Vec<u32>]) -> Result<Self> {
        let m = Matrix::from_rows(field, nvars, vectors)?.rref();
        let rows: Vec<usize> = (0..m.rank).collect();
        Ok(Self {
            nvars,
            basis: m.matrix.select_rows(&rows),
        })
    }

    pub fn from_forms(field: PrimeField, nvars: usize, forms: &[LinearForm]) -> Result<Self> {
        let vectors: Vec<Vec<u32>> = forms.iter().map(|l| l.coeffs().to_vec()).collect();
        Self::from_vectors(field, nvars, &vectors)
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn forms(&self) -> Vec<LinearForm> {
        self.basis
            .row_iter()
            .map(|r| LinearForm::new(self.field(), r.to_vec()))
            .collect()
    }
}

/// `{L linear : L·x_var^power ∈ I}`.
///
/// The containment is tested in degree `power + 1`, which must be at least
/// the generator degree; with `power + 1 = gen_degree` this is a test
/// against the span of the generators themselves.
pub fn colon_linear_piece(ideal: &IdealPiece, var: usize, power: usize) -> Result<LinearFormSpace> {
    let nvars = ideal.nvars;
    if var >= nvars {
        return Err(Error::IndexOutOfRange {
            index: var,
            size: nvars,
        });
    }
    if power + 1 < ideal.gen_degree {
        return Err(Error::DegreeOutOfRange {
            degree: power + 1,
            reason: "L·x^power has degree below the generators",
        });
    }
    let field = ideal.field();
    let piece = graded_piece(ideal, power + 1)?;
    let monomials = MonomialBasis::new(nvars, power + 1)?;
    let a = piece.to_matrix().transpose();
    let mut b = Matrix::zeros(field, monomials.size(), nvars);
    for i in 0..nvars {
        let mut e = vec![0u32; nvars];
        e[i] += 1;
        e[var] += power as u32;
        b.set(monomials.rank(&e)?, i, 1);
    }
    let vectors = preimage_of_colspace(&a, &b)?;
    LinearFormSpace::from_vectors(field, nvars, &vectors)
}

/// A point of projective space, scaled so its last nonzero coordinate is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectivePoint {
    field: PrimeField,
    coords: Vec<u32>,
}

impl ProjectivePoint {
    pub fn new(field: PrimeField, coords: Vec<u32>) -> Result<Self> {
        let p = field.modulus();
        let mut coords: Vec<u32> = coords.into_iter().map(|c| c % p).collect();
        let last = coords
            .iter()
            .rposition(|&c| c != 0)
            .ok_or(Error::NotAPoint(0))?;
        let inv = field.inv(coords[last]).expect("nonzero");
        for c in &mut coords {
            *c = field.mul(*c, inv);
        }
        Ok(Self { field, coords })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.coords.iter().join(","))
    }
}

/// The common zero of a space of `nvars - 1` independent linear forms.
pub fn point_from_forms(forms: &LinearFormSpace) -> Result<ProjectivePoint> {
    let kernel = forms.basis.nullspace();
    if kernel.len() != 1 {
        return Err(Error::NotAPoint(kernel.len()));
    }
    ProjectivePoint::new(
        forms.field(),
        kernel.into_iter().next().expect("one vector"),
    )
}

fn point_of_prime(ideal: &IdealPiece, prime: &LinearFormSpace) -> Result<ProjectivePoint> {
    if prime.nvars() != ideal.nvars || prime.dim() + 1 != ideal.nvars {
        return Err(Error::DimensionMismatch {
            op: "linear prime",
            expected: ideal.nvars - 1,
            found: prime.dim(),
        });
    }
    point_from_forms(prime)
}

/// Certifies `(I)_g = (q)_g`, where `q` is the ideal of the point cut out by
/// `prime` and `g` the generator degree: every generator vanishes at the
/// point and the generators span a hyperplane of `S_g`.
pub fn verify_saturation_identity(ideal: &IdealPiece, prime: &LinearFormSpace) -> Result<bool> {
    let point = point_of_prime(ideal, prime)?;
    let field = ideal.field();
    for row in ideal.gens.row_iter() {
        let g = PolyVector::from_coeffs(field, ideal.nvars, ideal.gen_degree, row.to_vec())?;
        if g.evaluate(point.coords())? != 0 {
            return Ok(false);
        }
    }
    let full = basis_size(ideal.nvars, ideal.gen_degree)?;
    Ok(graded_piece_rank(ideal, ideal.gen_degree)? + 1 == full)
}

/// Checks that every `g`-fold product of basis forms of `prime` lies in the
/// span of the generators, i.e. `q^g ⊆ I` in degree `g`.
pub fn verify_claim_containment(ideal: &IdealPiece, prime: &LinearFormSpace) -> Result<bool> {
    if prime.nvars() != ideal.nvars {
        return Err(Error::DimensionMismatch {
            op: "verify_claim_containment",
            expected: ideal.nvars,
            found: prime.nvars(),
        });
    }
    let mut span = EchelonBasis::new(ideal.field(), ideal.gens.cols());
    for row in ideal.gens.row_iter() {
        span.insert(row.to_vec());
    }
    let forms = prime.forms();
    for combo in (0..forms.len()).combinations_with_replacement(ideal.gen_degree) {
        let factors: Vec<LinearForm> = combo.iter().map(|&i| forms[i].clone()).collect();
        let product = product_of_linear_forms(&factors)?;
        if !span.contains(product.coeffs()) {
            return Ok(false);
        }
    }
    Ok(true)
}
