//! Linear codes over GF(q): generator matrices, rank queries, puncturing,
//! duals, and the brute-force oracles (weight distribution, support-weight
//! distribution, GHW, minimum distance) that every closed-form route is
//! validated against.
//!
//! Coordinate indices are 1-based at the interface, matching the usual
//! [n] = {1, ..., n} convention for code coordinates.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::combinat::gaussian_binomial;
use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};
use crate::par::{check_guard, reduce_parts};

/// Default guard on q^k for codeword enumeration.
pub const MAX_MESSAGES: u128 = 1 << 28;
/// Default guard on the number of s-dimensional subcodes.
pub const MAX_SUBCODES: u128 = 1 << 24;
/// Default guard on block length for the k-subset MDS scan.
pub const MAX_MDS_LEN: usize = 24;

/// An [n, k] linear code given by a full-rank generator matrix.
#[derive(Debug, Clone)]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    k: usize,
    g: Vec<Vec<FieldElement>>,
}

/// Weight distribution A_0..A_n, for codewords or for s-dimensional
/// subcodes (support weights). Entries are exact big integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: usize,
    pub a: Vec<BigUint>,
}

impl WeightDistribution {
    pub fn from_u64_counts(counts: &[u64]) -> Self {
        WeightDistribution {
            n: counts.len() - 1,
            a: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn total(&self) -> BigUint {
        self.a.iter().sum()
    }

    /// Smallest w >= 1 with A_w > 0.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..=self.n).find(|&w| !self.a[w].is_zero())
    }

    /// JSON form with big integers as decimal strings.
    pub fn to_json(
        &self,
        k: usize,
        q: u32,
        s: Option<usize>,
        method: Option<&str>,
    ) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        map.insert("n".into(), self.n.into());
        map.insert("k".into(), k.into());
        map.insert("q".into(), q.into());
        if let Some(s) = s {
            map.insert("s".into(), s.into());
        }
        if let Some(m) = method {
            map.insert("method".into(), m.into());
        }
        map.insert(
            "A".into(),
            self.a
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        );
        serde_json::Value::Object(map)
    }
}

impl LinearCode {
    pub fn new(spec: FieldSpec, g: Vec<Vec<FieldElement>>) -> Result<LinearCode> {
        let k = g.len();
        if k == 0 {
            return Err(Error::BadFile("generator has no rows".into()));
        }
        let n = g[0].len();
        if n < k || g.iter().any(|row| row.len() != n) {
            return Err(Error::BadFile(
                "generator must be k x n with k <= n".into(),
            ));
        }
        for row in &g {
            for &e in row {
                spec.element(e as u64)?;
            }
        }
        let code = LinearCode { spec, n, k, g };
        if code.rank_of_cols0(&(0..n).collect::<Vec<_>>()) != k {
            return Err(Error::BadFile("generator rows are not independent".into()));
        }
        Ok(code)
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.spec.q()
    }
    pub fn generator(&self) -> &[Vec<FieldElement>] {
        &self.g
    }

    pub fn encode(&self, msg: &[FieldElement]) -> Vec<FieldElement> {
        assert_eq!(msg.len(), self.k);
        let mut out = vec![0; self.n];
        for (i, &m) in msg.iter().enumerate() {
            if m == 0 {
                continue;
            }
            for j in 0..self.n {
                out[j] = self.spec.add(out[j], self.spec.mul(m, self.g[i][j]));
            }
        }
        out
    }

    fn validate_cols(&self, cols: &[usize]) -> Result<Vec<usize>> {
        let mut zero_based = Vec::with_capacity(cols.len());
        for &c in cols {
            if c < 1 || c > self.n {
                return Err(Error::IndexOutOfRange(c, self.n));
            }
            zero_based.push(c - 1);
        }
        zero_based.sort_unstable();
        zero_based.dedup();
        Ok(zero_based)
    }

    /// rank over GF(q) of the generator columns indexed by U (1-based).
    pub fn rank_of_columns(&self, cols: &[usize]) -> Result<usize> {
        Ok(self.rank_of_cols0(&self.validate_cols(cols)?))
    }

    pub(crate) fn rank_of_cols0(&self, cols: &[usize]) -> usize {
        let mut mat: Vec<Vec<u32>> = self
            .g
            .iter()
            .map(|row| cols.iter().map(|&c| row[c]).collect())
            .collect();
        rank_in_place(&self.spec, &mut mat)
    }

    pub(crate) fn rank_of_mask(&self, mask: u64) -> usize {
        let cols: Vec<usize> = (0..self.n).filter(|&c| mask >> c & 1 == 1).collect();
        self.rank_of_cols0(&cols)
    }

    /// Restriction of the code to coordinates E (1-based), with the
    /// generator row-reduced to full rank; dimension rho(E).
    pub fn puncture(&self, cols: &[usize]) -> Result<LinearCode> {
        let cols = self.validate_cols(cols)?;
        if cols.is_empty() {
            return Err(Error::IndexOutOfRange(0, self.n));
        }
        let mut mat: Vec<Vec<u32>> = self
            .g
            .iter()
            .map(|row| cols.iter().map(|&c| row[c]).collect())
            .collect();
        let rank = rref_in_place(&self.spec, &mut mat).len();
        if rank == 0 {
            return Err(Error::ParamsOutOfScope(
                "punctured code has dimension 0".into(),
            ));
        }
        mat.truncate(rank);
        LinearCode::new(self.spec.clone(), mat)
    }

    /// The [n, n-k] dual code: a generator H with G H^T = 0, computed as an
    /// exact nullspace basis.
    pub fn dual(&self) -> Result<LinearCode> {
        if self.k == self.n {
            return Err(Error::ParamsOutOfScope("dual of a full-space code".into()));
        }
        let mut r = self.g.clone();
        let pivots = rref_in_place(&self.spec, &mut r);
        debug_assert_eq!(pivots.len(), self.k);
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.n];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut h = Vec::with_capacity(self.n - self.k);
        for f in 0..self.n {
            if pivot_set[f] {
                continue;
            }
            let mut row = vec![0u32; self.n];
            row[f] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                row[p] = self.spec.neg(r[i][f]);
            }
            h.push(row);
        }
        LinearCode::new(self.spec.clone(), h)
    }

    /// Exact A_0..A_n by iterating all q^k message vectors.
    pub fn enumerate_weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_impl(true)
    }

    /// Sequential variant, kept for benchmarking against the parallel path.
    pub fn enumerate_weight_distribution_seq(&self) -> Result<WeightDistribution> {
        self.weight_distribution_impl(false)
    }

    fn weight_distribution_impl(&self, parallel: bool) -> Result<WeightDistribution> {
        let q = self.q() as u128;
        check_guard(q.pow(self.k as u32), MAX_MESSAGES)?;
        let q32 = self.q();
        // scalar multiples of each generator row
        let mult: Vec<Vec<Vec<u32>>> = self
            .g
            .iter()
            .map(|row| {
                (0..q32)
                    .map(|s| row.iter().map(|&e| self.spec.mul(s, e)).collect())
                    .collect()
            })
            .collect();
        let counts = reduce_parts(
            q32 as usize,
            |s0| {
                let mut counts = vec![0u64; self.n + 1];
                let mut bufs = vec![vec![0u32; self.n]; self.k];
                bufs[0].copy_from_slice(&mult[0][s0]);
                self.weight_rec(&mult, &mut bufs, &mut counts, 1);
                counts
            },
            merge_counts,
            parallel,
        )
        .expect("q >= 2 partitions");
        Ok(WeightDistribution::from_u64_counts(&counts))
    }

    fn weight_rec(
        &self,
        mult: &[Vec<Vec<u32>>],
        bufs: &mut [Vec<u32>],
        counts: &mut [u64],
        level: usize,
    ) {
        if level == self.k {
            let w = bufs[self.k - 1].iter().filter(|&&x| x != 0).count();
            counts[w] += 1;
            return;
        }
        for s in 0..self.q() as usize {
            let (prev, cur) = bufs.split_at_mut(level);
            let src = &prev[level - 1];
            let dst = &mut cur[0];
            let m = &mult[level][s];
            for j in 0..self.n {
                dst[j] = self.spec.add(src[j], m[j]);
            }
            self.weight_rec(mult, bufs, counts, level + 1);
        }
    }

    /// Exact support-weight distribution A^(s)_w over all s-dimensional
    /// subcodes, enumerated once each via canonical reduced-row-echelon
    /// representatives of the message-space subspaces.
    pub fn enumerate_support_weight_distribution(&self, s: usize) -> Result<WeightDistribution> {
        self.support_weight_impl(s, true)
    }

    pub fn enumerate_support_weight_distribution_seq(
        &self,
        s: usize,
    ) -> Result<WeightDistribution> {
        self.support_weight_impl(s, false)
    }

    fn support_weight_impl(&self, s: usize, parallel: bool) -> Result<WeightDistribution> {
        if s < 1 || s > self.k {
            return Err(Error::SOutOfRange { s, k: self.k });
        }
        let n_subcodes = gaussian_binomial(self.k as i64, s as i64, self.q() as u64);
        check_guard(
            u128::try_from(&n_subcodes).unwrap_or(u128::MAX),
            MAX_SUBCODES,
        )?;
        let pivot_sets: Vec<Vec<usize>> = combinations(self.k, s).collect();
        let counts = reduce_parts(
            pivot_sets.len(),
            |pi| self.support_weights_for_pivots(&pivot_sets[pi]),
            merge_counts,
            parallel,
        )
        .expect("at least one pivot set");
        let dist = WeightDistribution::from_u64_counts(&counts);
        debug_assert_eq!(dist.total(), n_subcodes);
        Ok(dist)
    }

    /// Enumerate every s x k RREF matrix with the given pivot columns and
    /// tally the support size of the spanned subcode.
    fn support_weights_for_pivots(&self, pivots: &[usize]) -> Vec<u64> {
        let s = pivots.len();
        let q = self.q();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.k];
            for &p in pivots {
                v[p] = true;
            }
            v
        };
        // free coordinates of the RREF matrix, row-major
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (i, &p) in pivots.iter().enumerate() {
            for j in p + 1..self.k {
                if !is_pivot[j] {
                    free.push((i, j));
                }
            }
        }
        let mut counts = vec![0u64; self.n + 1];
        let mut m = vec![vec![0u32; self.k]; s];
        for (i, &p) in pivots.iter().enumerate() {
            m[i][p] = 1;
        }
        let mut odo = vec![0u32; free.len()];
        loop {
            // support of the subcode = union of basis codeword supports
            let mut support = vec![false; self.n];
            for row in &m {
                let c = self.encode(row);
                for (j, &e) in c.iter().enumerate() {
                    if e != 0 {
                        support[j] = true;
                    }
                }
            }
            counts[support.iter().filter(|&&b| b).count()] += 1;

            // advance the odometer over free entries
            let mut t = 0;
            loop {
                if t == free.len() {
                    return counts;
                }
                odo[t] += 1;
                if odo[t] < q {
                    let (i, j) = free[t];
                    m[i][j] = odo[t];
                    break;
                }
                odo[t] = 0;
                let (i, j) = free[t];
                m[i][j] = 0;
                t += 1;
            }
        }
    }

    /// d_1..d_k by subcode enumeration: d_s is the smallest support size of
    /// an s-dimensional subcode.
    pub fn ghw_brute(&self) -> Result<Vec<usize>> {
        (1..=self.k)
            .map(|s| {
                let dist = self.enumerate_support_weight_distribution(s)?;
                dist.min_positive_weight().ok_or_else(|| {
                    Error::BadFile("subcode distribution with no positive weight".into())
                })
            })
            .collect()
    }

    pub fn min_distance(&self) -> Result<usize> {
        let dist = self.enumerate_weight_distribution()?;
        dist.min_positive_weight()
            .ok_or_else(|| Error::BadFile("code has no nonzero codeword".into()))
    }

    /// True iff every k-subset of generator columns has full rank.
    pub fn is_mds(&self) -> Result<bool> {
        check_guard(self.n as u128, MAX_MDS_LEN as u128)?;
        for cols in combinations(self.n, self.k) {
            if self.rank_of_cols0(&cols) != self.k {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Text form: header line, dimensions line, then k rows of n decimal
    /// field elements.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.spec.to_header());
        out.push('\n');
        out.push_str(&format!("n={} k={}\n", self.n, self.k));
        for row in &self.g {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_file_string(text: &str) -> Result<LinearCode> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::BadFile("empty file".into()))?;
        let spec = FieldSpec::from_header(header)?;
        let dims = lines
            .next()
            .ok_or_else(|| Error::BadFile("missing dimensions line".into()))?;
        let (mut n, mut k) = (None, None);
        for tok in dims.split_whitespace() {
            if let Some(v) = tok.strip_prefix("n=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = tok.strip_prefix("k=") {
                k = v.parse::<usize>().ok();
            }
        }
        let (n, k) = match (n, k) {
            (Some(n), Some(k)) => (n, k),
            _ => return Err(Error::BadFile("bad dimensions line".into())),
        };
        let mut g = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::BadFile("missing generator row".into()))?;
            let row: std::result::Result<Vec<u32>, _> =
                line.split_whitespace().map(|t| t.parse()).collect();
            let row = row.map_err(|_| Error::BadFile("bad generator entry".into()))?;
            if row.len() != n {
                return Err(Error::BadFile(format!("row has {} entries, want {n}", row.len())));
            }
            g.push(row);
        }
        LinearCode::new(spec, g)
    }
}

pub(crate) fn merge_counts(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Row-reduce in place; returns the pivot columns. Exact over GF(q).
pub(crate) fn rref_in_place(spec: &FieldSpec, mat: &mut [Vec<u32>]) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| mat[i][c] != 0) else {
            continue;
        };
        mat.swap(r, pr);
        let inv = spec.inv(mat[r][c]).expect("pivot is nonzero");
        for j in c..cols {
            mat[r][j] = spec.mul(mat[r][j], inv);
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let f = mat[i][c];
                for j in c..cols {
                    let sub = spec.mul(f, mat[r][j]);
                    mat[i][j] = spec.sub(mat[i][j], sub);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub(crate) fn rank_in_place(spec: &FieldSpec, mat: &mut [Vec<u32>]) -> usize {
    rref_in_place(spec, mat).len()
}

/// Lexicographic k-subsets of {0, ..., n-1}.
pub(crate) fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    Combinations {
        n,
        k,
        cur: None,
    }
}

struct Combinations {
    n: usize,
    k: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        match &mut self.cur {
            None => {
                if self.k > self.n {
                    return None;
                }
                let first: Vec<usize> = (0..self.k).collect();
                self.cur = Some(first.clone());
                Some(first)
            }
            Some(cur) => {
                if self.k == 0 {
                    return None;
                }
                let mut i = self.k;
                loop {
                    if i == 0 {
                        return None;
                    }
                    i -= 1;
                    if cur[i] + 1 <= self.n - (self.k - i) {
                        cur[i] += 1;
                        for t in i + 1..self.k {
                            cur[t] = cur[t - 1] + 1;
                        }
                        return Some(cur.clone());
                    }
                }
            }
        }
    }
}

/// A [4,2] Reed-Solomon code over GF(q) on evaluation points 1..=4:
/// a small MDS fixture used throughout the tests.
pub fn reed_solomon_4_2(q: u64) -> Result<LinearCode> {
    let spec = FieldSpec::new(q)?;
    let points: Vec<u32> = (1..=4).collect();
    let g = vec![
        vec![1, 1, 1, 1],
        points.clone(),
    ];
    LinearCode::new(spec, g)
}
