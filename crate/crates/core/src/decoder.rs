//! Nearest-neighbor decoding through the augmented code.
//!
//! A received word `w ∉ C` is appended to the generator matrix. The minimum
//! distance of the augmented code is `min(d, d_w)`, and when `d_w < d` the
//! nearest neighbors of `w` correspond to the points cut out by
//! `I_{d_w+1}(C^w)`. For a single neighbor, the colon ideal by `T^u` (with
//! `T` the variable of the appended row) is the linear prime of that point,
//! and the point's coordinates give the error directly.

use std::fmt;

use crate::code::{self, Codeword, LinearCode};
use crate::error::{Error, Result};
use crate::ideal::{self, ProjectivePoint};
use crate::oracle::Oracle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    InCode,
    Corrected,
    Ambiguous,
    Uncorrectable,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::InCode => "in_code",
            Status::Corrected => "corrected",
            Status::Ambiguous => "ambiguous",
            Status::Uncorrectable => "uncorrectable",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeResult {
    pub status: Status,
    /// Minimum distance of the code.
    pub d: usize,
    /// Distance from the word to the code, when known. Only a lower bound
    /// (`d_w >= d`) is established for uncorrectable words, so it is `None`.
    pub d_w: Option<usize>,
    pub error: Option<Vec<u32>>,
    pub nearest: Option<Codeword>,
    pub message: Option<Vec<u32>>,
    pub neighbor_count: Option<u64>,
    pub point: Option<ProjectivePoint>,
    pub colon_power: Option<usize>,
}

impl DecodeResult {
    fn bare(status: Status, d: usize) -> Self {
        Self {
            status,
            d,
            d_w: None,
            error: None,
            nearest: None,
            message: None,
            neighbor_count: None,
            point: None,
            colon_power: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Use `I : T^u` with this `u` instead of the default `u = d_w`.
    pub colon_power: Option<usize>,
}

pub fn decode(code: &LinearCode, w: &[u32]) -> Result<DecodeResult> {
    decode_with(code, w, &DecodeOptions::default())
}

pub fn decode_with(code: &LinearCode, w: &[u32], opts: &DecodeOptions) -> Result<DecodeResult> {
    if w.len() != code.n() {
        return Err(Error::DimensionMismatch {
            op: "decode",
            expected: code.n(),
            found: w.len(),
        });
    }
    let field = code.field();
    let w: Vec<u32> = w.iter().map(|&x| x % field.modulus()).collect();
    let d = code.min_distance()?;

    if let Some(message) = code.contains(&w)? {
        return Ok(DecodeResult {
            d_w: Some(0),
            error: Some(vec![0; code.n()]),
            nearest: Some(Codeword {
                v: w,
                coeffs: message.clone(),
            }),
            message: Some(message),
            ..DecodeResult::bare(Status::InCode, d)
        });
    }

    let augmented = code.augment(&w)?;
    // C ⊂ C^w, so the augmented distance is min(d, d_w); probing up to d
    // is enough to tell the two apart.
    let d_star = ideal::min_distance_capped(&augmented, d)?;
    if d_star >= d {
        return Ok(DecodeResult::bare(Status::Uncorrectable, d));
    }
    let d_w = d_star;
    let ideal = ideal::build_ideal(&augmented, d_w + 1)?;
    let unique_radius = (d - 1) / 2;

    let (neighbor_count, powers) = if d_w <= unique_radius {
        let u = opts.colon_power.unwrap_or(d_w);
        (None, u..=u)
    } else {
        let count = ideal::ideal_degree(&ideal)?;
        if count != 1 {
            return Ok(DecodeResult {
                d_w: Some(d_w),
                neighbor_count: Some(count as u64),
                ..DecodeResult::bare(Status::Ambiguous, d)
            });
        }
        match opts.colon_power {
            Some(u) => (Some(1), u..=u),
            // Outside the unique-decoding radius the saturating power is not
            // known in advance; the colon pieces grow with u until they
            // reach the linear prime.
            None => (Some(1), d_w..=ideal.degree_cap()),
        }
    };

    let t = code.k();
    let mut last_power = *powers.start();
    for u in powers {
        last_power = u;
        let forms = ideal::colon_linear_piece(&ideal, t, u)?;
        if forms.dim() != t {
            continue;
        }
        let point = ideal::point_from_forms(&forms)?;
        if point.coords()[t] == 0 {
            continue;
        }
        return reconstruct(code, &w, d, d_w, point, u, neighbor_count);
    }
    Err(Error::ColonPowerInsufficient { power: last_power })
}

/// Reads the error off the point `[λ_1, …, λ_k, 1]`:
/// `ε = Σ λ_i·r_i(G) + w` and `v = w − ε`.
fn reconstruct(
    code: &LinearCode,
    w: &[u32],
    d: usize,
    d_w: usize,
    point: ProjectivePoint,
    power: usize,
    neighbor_count: Option<u64>,
) -> Result<DecodeResult> {
    let field = code.field();
    let lambdas = &point.coords()[..code.k()];
    let combination = code.generator().vec_mul(lambdas)?;
    let error = code::add(field, &combination, w);
    if code::weight(&error) != d_w {
        return Err(Error::ColonPowerInsufficient { power });
    }
    let v = code::sub(field, w, &error);
    let message = code
        .contains(&v)?
        .expect("w - ε is a combination of rows of G");
    Ok(DecodeResult {
        d_w: Some(d_w),
        error: Some(error),
        nearest: Some(Codeword {
            v,
            coeffs: message.clone(),
        }),
        message: Some(message),
        neighbor_count,
        point: Some(point),
        colon_power: Some(power),
        ..DecodeResult::bare(Status::Corrected, d)
    })
}

/// Number of nearest neighbors of `w ∉ C`. Uses the degree of
/// `I_{d_w+1}(C^w)` when `d_w < d`; otherwise falls back to enumeration,
/// which fails past the oracle's threshold.
pub fn nearest_neighbor_count(code: &LinearCode, w: &[u32], oracle: &Oracle) -> Result<u64> {
    let augmented = code.augment(w)?;
    let d = code.min_distance()?;
    let d_star = ideal::min_distance_capped(&augmented, d)?;
    if d_star < d {
        let ideal = ideal::build_ideal(&augmented, d_star + 1)?;
        return Ok(ideal::ideal_degree(&ideal)? as u64);
    }
    Ok(oracle.nearest_neighbors(code, w)?.neighbors.len() as u64)
}
