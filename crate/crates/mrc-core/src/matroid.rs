//! Rank oracles for code matroids, uniform matroids, and the combinatorial
//! matroids of data-local / local MRC, plus rank-size distributions
//! N[u][v] = #{U : |U| = u, rho(U) = v} by exhaustive enumeration or in
//! closed form.
//!
//! The MRC rank oracle is O(n) per query: with disjoint local groups of
//! size r+1, each fully contained group drops the rank by exactly one, so
//! rho(U) = min(k, |U| - #fully contained groups).

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use crate::code::LinearCode;
use crate::combinat::{binomial, binomial_u};
use crate::error::{Error, Result};
use crate::par::{check_guard, reduce_parts};

/// Default guard on ground-set size for 2^n subset enumeration.
pub const MAX_SUBSET_BITS: usize = 26;

/// MRC family: does locality cover only the message symbols, or all
/// symbols?
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MrcVariant {
    DataLocal,
    Local,
}

/// Parameters (k, r, h) of a data-local or local MRC, with the coordinate
/// layout fixed: messages first, then (data-local) local parities followed
/// by global parities, or (local) global parities followed by local
/// parities. Group S_i is the i-th block of r covered symbols plus its
/// parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MrcParams {
    pub k: usize,
    pub r: usize,
    pub h: usize,
    pub variant: MrcVariant,
}

impl MrcParams {
    pub fn data_local(k: usize, r: usize, h: usize) -> Result<MrcParams> {
        if k == 0 || r == 0 || k % r != 0 {
            return Err(Error::ParamsOutOfScope(format!(
                "data-local MRC requires r | k and k, r >= 1 (k={k}, r={r})"
            )));
        }
        Ok(MrcParams { k, r, h, variant: MrcVariant::DataLocal })
    }

    pub fn local(k: usize, r: usize, h: usize) -> Result<MrcParams> {
        if k == 0 || r == 0 || (k + h) % r != 0 {
            return Err(Error::ParamsOutOfScope(format!(
                "local MRC requires r | (k+h) and k, r >= 1 (k={k}, r={r}, h={h})"
            )));
        }
        Ok(MrcParams { k, r, h, variant: MrcVariant::Local })
    }

    /// Number of local groups.
    pub fn ell(&self) -> usize {
        match self.variant {
            MrcVariant::DataLocal => self.k / self.r,
            MrcVariant::Local => (self.k + self.h) / self.r,
        }
    }

    /// Block length.
    pub fn n(&self) -> usize {
        self.k + self.h + self.ell()
    }

    /// 1-based coordinate of the parity of group i (0-based i).
    pub fn parity_coord(&self, i: usize) -> usize {
        match self.variant {
            MrcVariant::DataLocal => self.k + i + 1,
            MrcVariant::Local => self.k + self.h + i + 1,
        }
    }

    /// Supports S_1..S_ell, 1-based: the i-th block of r covered symbols
    /// plus its local parity.
    pub fn groups(&self) -> Vec<Vec<usize>> {
        (0..self.ell())
            .map(|i| {
                let mut s: Vec<usize> = (i * self.r + 1..=(i + 1) * self.r).collect();
                s.push(self.parity_coord(i));
                s
            })
            .collect()
    }

    /// 1-based coordinates outside every local group (the global parities
    /// of a data-local MRC; empty for a local MRC).
    pub fn global_coords(&self) -> Vec<usize> {
        match self.variant {
            MrcVariant::DataLocal => (self.k + self.ell() + 1..=self.n()).collect(),
            MrcVariant::Local => Vec::new(),
        }
    }
}

/// A matroid on ground set [n] given by one of the concrete rank oracles.
#[derive(Debug, Clone)]
pub enum Matroid {
    FromCode(LinearCode),
    Uniform { n: usize, k: usize },
    Mrc { params: MrcParams, group_masks: Vec<u64>, globals_mask: u64 },
}

impl Matroid {
    pub fn from_code(code: LinearCode) -> Matroid {
        Matroid::FromCode(code)
    }

    pub fn uniform(n: usize, k: usize) -> Matroid {
        assert!(k <= n);
        Matroid::Uniform { n, k }
    }

    pub fn mrc(params: MrcParams) -> Matroid {
        let group_masks = params
            .groups()
            .iter()
            .map(|s| s.iter().fold(0u64, |m, &c| m | 1 << (c - 1)))
            .collect();
        let globals_mask = params
            .global_coords()
            .iter()
            .fold(0u64, |m, &c| m | 1 << (c - 1));
        Matroid::Mrc { params, group_masks, globals_mask }
    }

    pub fn n(&self) -> usize {
        match self {
            Matroid::FromCode(c) => c.n(),
            Matroid::Uniform { n, .. } => *n,
            Matroid::Mrc { params, .. } => params.n(),
        }
    }

    /// Rank of the whole matroid.
    pub fn k(&self) -> usize {
        match self {
            Matroid::FromCode(c) => c.k(),
            Matroid::Uniform { k, .. } => *k,
            Matroid::Mrc { params, .. } => params.k,
        }
    }

    /// rho(U) for a 1-based subset of [n].
    pub fn rank(&self, subset: &[usize]) -> Result<usize> {
        let n = self.n();
        let mut mask = 0u64;
        for &c in subset {
            if c < 1 || c > n {
                return Err(Error::IndexOutOfRange(c, n));
            }
            mask |= 1 << (c - 1);
        }
        Ok(self.rank_mask(mask))
    }

    pub fn is_independent(&self, subset: &[usize]) -> Result<bool> {
        let mut sorted = subset.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        Ok(self.rank(&sorted)? == sorted.len())
    }

    /// Mask bit i corresponds to coordinate i+1.
    pub fn rank_mask(&self, mask: u64) -> usize {
        match self {
            Matroid::FromCode(c) => c.rank_of_mask(mask),
            Matroid::Uniform { k, .. } => (mask.count_ones() as usize).min(*k),
            Matroid::Mrc { params, group_masks, .. } => {
                let u = mask.count_ones() as usize;
                let full = group_masks
                    .iter()
                    .filter(|&&g| mask & g == g)
                    .count();
                (u - full).min(params.k)
            }
        }
    }

    /// Exact N[u][v] table by iterating all 2^n subsets.
    pub fn rank_size_distribution(&self) -> Result<RankSizeDistribution> {
        self.rank_size_impl(true)
    }

    pub fn rank_size_distribution_seq(&self) -> Result<RankSizeDistribution> {
        self.rank_size_impl(false)
    }

    fn rank_size_impl(&self, parallel: bool) -> Result<RankSizeDistribution> {
        let (n, k) = (self.n(), self.k());
        check_guard(n as u128, MAX_SUBSET_BITS as u128)?;
        let (nparts, shift) = partition_shape(n);
        let counts = reduce_parts(
            nparts,
            |part| {
                let mut counts = vec![vec![0u64; k + 1]; n + 1];
                let lo = (part as u64) << shift;
                let hi = ((part + 1) as u64) << shift;
                for mask in lo..hi {
                    let u = mask.count_ones() as usize;
                    counts[u][self.rank_mask(mask)] += 1;
                }
                counts
            },
            merge_tables,
            parallel,
        )
        .expect("at least one partition");
        Ok(RankSizeDistribution {
            n,
            k,
            counts: counts
                .into_iter()
                .map(|row| row.into_iter().map(BigUint::from).collect())
                .collect(),
        })
    }

    /// GHW via the rank oracle: d_s = min{|W| : k - rho([n]\W) >= s}.
    pub fn ghw(&self) -> Result<Vec<usize>> {
        self.ghw_impl(true)
    }

    pub fn ghw_seq(&self) -> Result<Vec<usize>> {
        self.ghw_impl(false)
    }

    fn ghw_impl(&self, parallel: bool) -> Result<Vec<usize>> {
        let (n, k) = (self.n(), self.k());
        check_guard(n as u128, MAX_SUBSET_BITS as u128)?;
        let (nparts, shift) = partition_shape(n);
        let best = reduce_parts(
            nparts,
            |part| {
                let mut best = vec![usize::MAX; k + 1];
                let lo = (part as u64) << shift;
                let hi = ((part + 1) as u64) << shift;
                for mask in lo..hi {
                    let corank = k - self.rank_mask(mask);
                    if corank >= 1 {
                        let w = n - mask.count_ones() as usize;
                        for s in 1..=corank {
                            if w < best[s] {
                                best[s] = w;
                            }
                        }
                    }
                }
                best
            },
            |a, b| a.into_iter().zip(b).map(|(x, y)| x.min(y)).collect(),
            parallel,
        )
        .expect("at least one partition");
        Ok(best[1..=k].to_vec())
    }
}

fn partition_shape(n: usize) -> (usize, u32) {
    // split the 2^n mask space on its top bits
    let top = n.min(8) as u32;
    (1usize << top, n as u32 - top)
}

fn merge_tables(mut a: Vec<Vec<u64>>, b: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
    a
}

/// N[u][v] = #{U subset of [n] : |U| = u, rho(U) = v}. The sole input to
/// the Tutte, Greene, and Britz transforms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSizeDistribution {
    pub n: usize,
    pub k: usize,
    /// (n+1) x (k+1) table.
    pub counts: Vec<Vec<BigUint>>,
}

impl RankSizeDistribution {
    /// Row sums must be C(n, u); entries above min(u, k) must vanish; the
    /// full set must achieve rank k.
    pub fn check(&self) -> Result<()> {
        for u in 0..=self.n {
            let sum: BigUint = self.counts[u].iter().sum();
            if sum != binomial_u(self.n, u) {
                return Err(Error::ParamsOutOfScope(format!(
                    "rank-size row {u} does not sum to C(n, u)"
                )));
            }
            for v in 0..=self.k {
                if v > u.min(self.k) && !self.counts[u][v].is_zero() {
                    return Err(Error::ParamsOutOfScope(format!(
                        "rank-size entry ({u}, {v}) above the rank bound"
                    )));
                }
            }
        }
        if self.counts[self.n][self.k].is_zero() {
            return Err(Error::ParamsOutOfScope(
                "full ground set does not reach rank k".into(),
            ));
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("n".into(), self.n.into());
        map.insert("k".into(), self.k.into());
        map.insert(
            "N".into(),
            self.counts
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|c| serde_json::Value::String(c.to_string()))
                        .collect::<Vec<_>>()
                        .into()
                })
                .collect::<Vec<serde_json::Value>>()
                .into(),
        );
        serde_json::Value::Object(map)
    }
}

/// Closed-form rank-size counts for MRC matroids from the containment
/// counts N_{u,b} = C(ell, b) C(n - b(r+1), u - b(r+1)).
///
/// A subset of size u fully containing exactly b groups has rank
/// min(k, u - b); the exactly-b count follows from N_{u,b} by
/// inclusion-exclusion. In scope: data-local with ell < r+1, local with
/// ell = 2, matching the ranges the enumerator formulas are stated for.
pub fn rank_size_counts_closed_form(params: &MrcParams) -> Result<RankSizeDistribution> {
    let ell = params.ell();
    match params.variant {
        MrcVariant::DataLocal => {
            if ell >= params.r + 1 {
                return Err(Error::ParamsOutOfScope(format!(
                    "closed-form counts need ell < r+1 (ell={ell}, r={})",
                    params.r
                )));
            }
        }
        MrcVariant::Local => {
            if ell != 2 {
                return Err(Error::ParamsOutOfScope(format!(
                    "closed-form local counts are stated for ell = 2 (ell={ell})"
                )));
            }
        }
    }
    let (n, k, r) = (params.n(), params.k, params.r);
    let containment = |u: usize, b: usize| -> BigInt {
        // N_{u,b} = 0 if b(r+1) > u, via the binomial convention
        binomial(ell as i64, b as i64)
            * binomial(
                n as i64 - (b * (r + 1)) as i64,
                u as i64 - (b * (r + 1)) as i64,
            )
    };
    let mut counts = vec![vec![BigUint::zero(); k + 1]; n + 1];
    for u in 0..=n {
        for b in 0..=ell.min(u / (r + 1)) {
            // exactly-b count by inclusion-exclusion over the N_{u,t}
            let mut exact = BigInt::zero();
            for t in b..=ell {
                let term = binomial(t as i64, b as i64) * containment(u, t);
                if (t - b) % 2 == 0 {
                    exact += term;
                } else {
                    exact -= term;
                }
            }
            if exact.sign() == Sign::Minus {
                return Err(Error::ParamsOutOfScope(format!(
                    "negative exactly-{b} count at u={u}"
                )));
            }
            let v = (u - b).min(k);
            counts[u][v] += exact.to_biguint().unwrap();
        }
    }
    let dist = RankSizeDistribution { n, k, counts };
    dist.check()?;
    Ok(dist)
}
