//! JSON shapes printed by the commands. Field order is the emission order;
//! `None` fields are omitted.

use std::time::Duration;

use colondec::{DecodeResult, LinearCode};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResultJson {
    pub status: String,
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_w: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colon_power: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nearest: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neighbor_count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<Vec<u32>>,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

impl ResultJson {
    pub fn new(
        code: &LinearCode,
        result: &DecodeResult,
        elapsed: Duration,
        oracle_agrees: Option<bool>,
    ) -> Self {
        Self {
            status: result.status.as_str().to_owned(),
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            d: result.d,
            d_w: result.d_w,
            colon_power: result.colon_power,
            error: result.error.clone(),
            nearest: result.nearest.as_ref().map(|c| c.v.clone()),
            message: result.message.clone(),
            neighbor_count: result.neighbor_count,
            point: result.point.as_ref().map(|p| p.coords().to_vec()),
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
            oracle_agrees,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDistJson {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountMinJson {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// Projective codewords of weight `d`.
    pub count: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDiffJson {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// 1-based index of the removed row.
    pub row: usize,
    pub count: u64,
    pub count_without_row: u64,
    pub colon_degree: u64,
    pub oracle_neighbors: u64,
    /// Distance from the removed row to the remaining code.
    pub row_distance: usize,
    /// All three quantities coincide.
    pub identity: bool,
}

impl CountDiffJson {
    pub fn new(
        code: &LinearCode,
        row: usize,
        count: u64,
        count_without_row: u64,
        colon_degree: u64,
        oracle_neighbors: u64,
        row_distance: usize,
    ) -> Self {
        let d = code
            .min_distance()
            .expect("distance computed by the caller");
        let difference = count - count_without_row;
        Self {
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            d,
            row,
            count,
            count_without_row,
            colon_degree,
            oracle_neighbors,
            row_distance,
            identity: colon_degree == difference && oracle_neighbors == difference,
        }
    }

    /// The colon degree always equals the count difference. The neighbor
    /// count matches only when the removed row lies at distance `d` from the
    /// rest; farther rows take part in no minimum-weight codeword, so the
    /// difference is 0 while the row still has neighbors.
    pub fn consistent(&self) -> bool {
        let difference = self.count - self.count_without_row;
        self.colon_degree == difference
            && (self.row_distance != self.d || self.oracle_neighbors == difference)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRegJson {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_w: Option<usize>,
    /// `"checked"` or `"hypotheses not met"`.
    pub hypotheses: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub saturation_identity: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claim_containment: Option<bool>,
}

impl CheckRegJson {
    pub fn new(code: &LinearCode, d: usize) -> Self {
        Self {
            p: code.field().modulus(),
            n: code.n(),
            k: code.k(),
            d,
            d_w: None,
            hypotheses: "hypotheses not met".to_owned(),
            saturation_identity: None,
            claim_containment: None,
        }
    }

    pub fn record(&mut self, d_w: usize, saturation: bool, containment: bool) {
        self.d_w = Some(d_w);
        self.hypotheses = "checked".to_owned();
        self.saturation_identity = Some(saturation);
        self.claim_containment = Some(containment);
    }
}
