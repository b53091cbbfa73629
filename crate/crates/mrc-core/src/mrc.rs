//! Seeded construction and exhaustive verification of MRC instances.
//!
//! No explicit generator-matrix construction is implemented; instead a
//! deterministic pseudo-random search draws candidate parity coefficients
//! and keeps the first candidate that passes the exhaustive
//! maximal-recoverability check. At the scales this crate targets the
//! check is cheap: every admissible erasure pattern leaves k+h coordinates
//! whose punctured code must be MDS, and there are only (r+1)^ell such
//! patterns.

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::matroid::{MrcParams, MrcVariant};

/// xorshift64* with the standard shift triple (12, 25, 27) and multiplier
/// 0x2545F4914F6CDD1D. Chosen because it is trivially portable: fixtures
/// regenerated in another language from the same seed must match
/// bit-for-bit.
#[derive(Debug, Clone)]
pub struct Xorshift64Star {
    state: u64,
}

impl Xorshift64Star {
    pub fn new(seed: u64) -> Xorshift64Star {
        // The all-zero state is a fixed point of the shift map.
        Xorshift64Star {
            state: if seed == 0 { 0x9E3779B97F4A7C15 } else { seed },
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.state = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    /// Uniform-enough draw in [0, m); m is at most 2^16 here so the
    /// modulo bias is far below anything the search could notice.
    pub fn below(&mut self, m: u64) -> u64 {
        debug_assert!(m > 0);
        self.next_u64() % m
    }

    /// A nonzero field element.
    pub fn nonzero(&mut self, q: u64) -> FieldElement {
        (1 + self.below(q - 1)) as FieldElement
    }

    /// Any field element, zero included.
    pub fn element(&mut self, q: u64) -> FieldElement {
        self.below(q) as FieldElement
    }
}

/// A constructed code together with the search metadata needed to
/// reproduce it.
#[derive(Debug, Clone)]
pub struct MrcInstance {
    pub params: MrcParams,
    pub code: LinearCode,
    pub seed: u64,
    pub attempts: u64,
    pub verified: bool,
}

impl MrcInstance {
    /// Sidecar metadata persisted next to the code file.
    pub fn sidecar_json(&self) -> serde_json::Value {
        serde_json::json!({
            "params": {
                "variant": match self.params.variant {
                    MrcVariant::DataLocal => "data-local",
                    MrcVariant::Local => "local",
                },
                "k": self.params.k,
                "r": self.params.r,
                "h": self.params.h,
            },
            "seed": self.seed,
            "attempts": self.attempts,
            "verified": self.verified,
        })
    }
}

/// Draws one candidate generator matrix in the fixed coordinate layout:
/// systematic message columns, then (data-local) local parities before
/// global parities or (local) global parities before local parities.
/// Local-parity coefficients are drawn nonzero; global-parity columns are
/// drawn without restriction.
fn draw_generator(
    params: &MrcParams,
    spec: &FieldSpec,
    rng: &mut Xorshift64Star,
) -> Vec<Vec<FieldElement>> {
    let (k, r, h) = (params.k, params.r, params.h);
    let n = params.n();
    let q = spec.q() as u64;
    let mut g = vec![vec![0 as FieldElement; n]; k];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 1;
    }
    // Global parity columns first: for the local variant the local
    // parities are sums over message *and* global symbols, so the global
    // columns must exist before the locals are formed.
    for &c in &match params.variant {
        MrcVariant::DataLocal => (k + params.ell() + 1..=n).collect::<Vec<_>>(),
        MrcVariant::Local => (k + 1..=k + h).collect(),
    } {
        for row in g.iter_mut() {
            row[c - 1] = rng.element(q);
        }
    }
    // Local parity of group i: sum of a_{i,j} times the column of each
    // covered symbol, a_{i,j} nonzero.
    for (i, group) in params.groups().iter().enumerate() {
        let parity = params.parity_coord(i) - 1;
        for &covered in &group[..r] {
            let a = rng.nonzero(q);
            for row_idx in 0..k {
                let contrib = spec.mul(a, g[row_idx][covered - 1]);
                g[row_idx][parity] = spec.add(g[row_idx][parity], contrib);
            }
        }
    }
    g
}

/// Checks that `code` has the declared group structure: dimensions match
/// the parameters and every group's column span leaves room for a local
/// parity (rank at most r). A code without that structure gets a
/// `LayoutMismatch` error; maximal recoverability is then decided by
/// `admissible_punctures_are_mds`.
fn check_layout(code: &LinearCode, params: &MrcParams) -> Result<()> {
    if code.n() != params.n() || code.k() != params.k {
        return Err(Error::LayoutMismatch(format!(
            "code is [{}, {}] but parameters require [{}, {}]",
            code.n(),
            code.k(),
            params.n(),
            params.k
        )));
    }
    for (i, group) in params.groups().iter().enumerate() {
        let rank = code.rank_of_columns(group)?;
        if rank > params.r {
            return Err(Error::LayoutMismatch(format!(
                "group S_{} spans rank {} > r = {}; no local parity exists",
                i + 1,
                rank,
                params.r
            )));
        }
    }
    Ok(())
}

/// Enumerates every admissible erasure pattern (one erased coordinate per
/// group) and checks that each surviving [k+h, k] puncture is MDS.
fn admissible_punctures_are_mds(code: &LinearCode, params: &MrcParams) -> Result<bool> {
    let groups = params.groups();
    let globals = params.global_coords();
    let ell = groups.len();
    let mut choice = vec![0usize; ell]; // index of the erased coordinate per group
    loop {
        let mut kept: Vec<usize> = globals.clone();
        for (i, group) in groups.iter().enumerate() {
            for (j, &c) in group.iter().enumerate() {
                if j != choice[i] {
                    kept.push(c);
                }
            }
        }
        kept.sort_unstable();
        let punctured = code.puncture(&kept)?;
        if punctured.k() != params.k || !punctured.is_mds()? {
            return Ok(false);
        }
        // odometer over the ell-fold choice of erased coordinates
        let mut pos = 0;
        loop {
            if pos == ell {
                return Ok(true);
            }
            choice[pos] += 1;
            if choice[pos] <= params.r {
                break;
            }
            choice[pos] = 0;
            pos += 1;
        }
    }
}

/// True iff the code is a data-local MRC for these parameters: every
/// erasure of one coordinate per local group leaves an MDS code on the
/// surviving k+h coordinates.
pub fn verify_data_local_mrc(code: &LinearCode, params: &MrcParams) -> Result<bool> {
    if params.variant != MrcVariant::DataLocal {
        return Err(Error::ParamsOutOfScope(
            "verify_data_local_mrc requires data-local parameters".into(),
        ));
    }
    check_layout(code, params)?;
    admissible_punctures_are_mds(code, params)
}

/// True iff the code is a local MRC for these parameters.
pub fn verify_local_mrc(code: &LinearCode, params: &MrcParams) -> Result<bool> {
    if params.variant != MrcVariant::Local {
        return Err(Error::ParamsOutOfScope(
            "verify_local_mrc requires local parameters".into(),
        ));
    }
    check_layout(code, params)?;
    admissible_punctures_are_mds(code, params)
}

/// Variant-dispatching verification.
pub fn verify_mrc(code: &LinearCode, params: &MrcParams) -> Result<bool> {
    match params.variant {
        MrcVariant::DataLocal => verify_data_local_mrc(code, params),
        MrcVariant::Local => verify_local_mrc(code, params),
    }
}

/// Seeded search for a verified instance. Deterministic: a fixed
/// (params, spec, seed) triple always yields the same generator matrix.
/// Fails with `ConstructionFailed` after `max_attempts` draws; the usual
/// remedy is a larger field.
pub fn construct_mrc(
    params: &MrcParams,
    spec: &FieldSpec,
    seed: u64,
    max_attempts: u64,
) -> Result<MrcInstance> {
    if params.n() > 64 {
        return Err(Error::ParamsOutOfScope(format!(
            "block length {} exceeds the 64-coordinate limit",
            params.n()
        )));
    }
    let mut rng = Xorshift64Star::new(seed);
    for attempt in 1..=max_attempts {
        let g = draw_generator(params, spec, &mut rng);
        let code = LinearCode::new(spec.clone(), g)?;
        if verify_mrc(&code, params)? {
            return Ok(MrcInstance {
                params: params.clone(),
                code,
                seed,
                attempts: attempt,
                verified: true,
            });
        }
    }
    Err(Error::ConstructionFailed(max_attempts))
}
