//! Tutte polynomial and its code-theoretic specializations, all consuming
//! a rank-size distribution so that closed-form counts and enumerated
//! counts feed identically. Everything is exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

pub use crate::combinat::gaussian_binomial;
use crate::code::WeightDistribution;
use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::matroid::RankSizeDistribution;

/// Sparse bivariate polynomial with arbitrary-precision coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivariatePolynomial {
    pub terms: BTreeMap<(usize, usize), BigInt>,
}

impl BivariatePolynomial {
    fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * x.pow(i as u32) * y.pow(j as u32))
            .sum()
    }

    /// Lexicographically sorted (i, j, coefficient) triples.
    pub fn to_json(&self) -> serde_json::Value {
        self.terms
            .iter()
            .map(|(&(i, j), c)| {
                serde_json::Value::Array(vec![
                    i.into(),
                    j.into(),
                    serde_json::Value::String(c.to_string()),
                ])
            })
            .collect()
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        let mut keys: Vec<(usize, usize)> = self.terms.keys().copied().collect();
        keys.sort_by(|a, b| b.cmp(a));
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = |name: &str, e: usize| match e {
                0 => String::new(),
                1 => name.to_string(),
                _ => format!("{name}^{e}"),
            };
            let (x, y) = (var("X", i), var("Y", j));
            let mono = match (x.is_empty(), y.is_empty()) {
                (true, true) => String::new(),
                (false, true) => x,
                (true, false) => y,
                (false, false) => format!("{x} {y}"),
            };
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{c} {mono}")?;
            }
        }
        Ok(())
    }
}

/// T(X, Y) = sum_{u,v} N[u][v] (X-1)^{k-v} (Y-1)^{u-v}, expanded exactly.
pub fn tutte_from_distribution(dist: &RankSizeDistribution) -> BivariatePolynomial {
    let mut out = BivariatePolynomial { terms: BTreeMap::new() };
    for u in 0..=dist.n {
        for v in 0..=dist.k.min(u) {
            let count = &dist.counts[u][v];
            if count.is_zero() {
                continue;
            }
            let count = BigInt::from(count.clone());
            let a = dist.k - v;
            let b = u - v;
            for i in 0..=a {
                for j in 0..=b {
                    let sign = if (a - i + b - j) % 2 == 0 { 1 } else { -1 };
                    let c = &count
                        * binomial(a as i64, i as i64)
                        * binomial(b as i64, j as i64)
                        * sign;
                    out.add_term(i, j, c);
                }
            }
        }
    }
    out
}

/// Tutte polynomial of the uniform matroid U_{k,n} (MDS codes) in closed
/// form: sum_{u<=k} C(n,u)(X-1)^{k-u} + sum_{u>k} C(n,u)(Y-1)^{u-k}.
pub fn tutte_mds(n: usize, k: usize) -> BivariatePolynomial {
    assert!(k <= n);
    let mut out = BivariatePolynomial { terms: BTreeMap::new() };
    for u in 0..=n {
        let count = binomial(n as i64, u as i64);
        if u <= k {
            let a = k - u;
            for i in 0..=a {
                let sign = if (a - i) % 2 == 0 { 1 } else { -1 };
                out.add_term(i, 0, &count * binomial(a as i64, i as i64) * sign);
            }
        } else {
            let b = u - k;
            for j in 0..=b {
                let sign = if (b - j) % 2 == 0 { 1 } else { -1 };
                out.add_term(0, j, &count * binomial(b as i64, j as i64) * sign);
            }
        }
    }
    out
}

/// Greene's specialization: W(Z) = sum_{u,v} N[u][v] Z^{n-u} (1-Z)^u
/// q^{k-v}, returned as the exact coefficient sequence A_0..A_n.
pub fn greene_weight_enumerator(dist: &RankSizeDistribution, q: u64) -> Result<WeightDistribution> {
    expand_set_sum(dist, |v| BigInt::from(q).pow((dist.k - v) as u32))
}

/// Britz's specialization for the s-th support weight polynomial:
/// W^(s)(Z) = sum_{u,v} N[u][v] Z^{n-u} (1-Z)^u [k-v choose s]_q.
/// Terms with k-v < s vanish through the Gaussian-binomial convention.
pub fn britz_support_weight_enumerator(
    dist: &RankSizeDistribution,
    q: u64,
    s: usize,
) -> Result<WeightDistribution> {
    if s < 1 || s > dist.k {
        return Err(Error::SOutOfRange { s, k: dist.k });
    }
    expand_set_sum(dist, |v| {
        BigInt::from(gaussian_binomial((dist.k - v) as i64, s as i64, q))
    })
}

fn expand_set_sum(
    dist: &RankSizeDistribution,
    factor: impl Fn(usize) -> BigInt,
) -> Result<WeightDistribution> {
    let n = dist.n;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for u in 0..=n {
        // weight of rank v in the row sum
        let mut row_factor = BigInt::zero();
        let mut row_terms: Vec<(usize, BigInt)> = Vec::new();
        for v in 0..=dist.k.min(u) {
            if dist.counts[u][v].is_zero() {
                continue;
            }
            row_terms.push((v, BigInt::from(dist.counts[u][v].clone())));
        }
        if row_terms.is_empty() {
            continue;
        }
        for (v, count) in row_terms {
            row_factor += count * factor(v);
        }
        if row_factor.is_zero() {
            continue;
        }
        // Z^{n-u} (1-Z)^u contributes C(u,j)(-1)^j at degree n-u+j
        for j in 0..=u {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            coeffs[n - u + j] += &row_factor * binomial(u as i64, j as i64) * sign;
        }
    }
    into_nonnegative(coeffs, n)
}

fn into_nonnegative(coeffs: Vec<BigInt>, n: usize) -> Result<WeightDistribution> {
    let mut a = Vec::with_capacity(n + 1);
    for (w, c) in coeffs.into_iter().enumerate() {
        match c.to_biguint() {
            Some(u) => a.push(u),
            None => return Err(Error::NegativeCoefficient(w)),
        }
    }
    Ok(WeightDistribution { n, a })
}

/// MacWilliams transform: W_dual(Z) = (1 + (q-1)Z)^n / q^k applied to
/// W((1-Z)/(1+(q-1)Z)), computed as an exact polynomial substitution with
/// a divisibility check instead of rational arithmetic.
pub fn macwilliams_transform(
    w: &WeightDistribution,
    n: usize,
    k: usize,
    q: u64,
) -> Result<WeightDistribution> {
    assert_eq!(w.n, n);
    let qk = BigInt::from(q).pow(k as u32);
    if BigInt::from(w.total()) != qk {
        return Err(Error::NotDivisible);
    }
    // P(Z) = sum_i A_i (1-Z)^i (1+(q-1)Z)^{n-i}
    let mut p = vec![BigInt::zero(); n + 1];
    let qm1 = BigInt::from(q - 1);
    for (i, ai) in w.a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let ai = BigInt::from(ai.clone());
        // (1-Z)^i coefficients
        let f: Vec<BigInt> = (0..=i)
            .map(|j| binomial(i as i64, j as i64) * if j % 2 == 0 { 1 } else { -1 })
            .collect();
        // (1+(q-1)Z)^{n-i} coefficients
        let g: Vec<BigInt> = (0..=n - i)
            .map(|t| binomial((n - i) as i64, t as i64) * qm1.pow(t as u32))
            .collect();
        for (j, fj) in f.iter().enumerate() {
            for (t, gt) in g.iter().enumerate() {
                p[j + t] += &ai * fj * gt;
            }
        }
    }
    let mut out = Vec::with_capacity(n + 1);
    for (w_deg, c) in p.into_iter().enumerate() {
        if c.sign() == Sign::Minus {
            return Err(Error::NegativeCoefficient(w_deg));
        }
        let (quot, rem) = num_integer::Integer::div_rem(&c, &qk);
        if !rem.is_zero() {
            return Err(Error::NotDivisible);
        }
        out.push(quot.to_biguint().expect("non-negative quotient"));
    }
    Ok(WeightDistribution { n, a: out })
}

/// Number of bases of the matroid, read off the rank-size table.
pub fn basis_count(dist: &RankSizeDistribution) -> BigUint {
    dist.counts[dist.k][dist.k].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::reed_solomon_4_2;
    use crate::matroid::{rank_size_counts_closed_form, Matroid, MrcParams};

    #[test]
    fn tutte_single_coloop_is_x() {
        let d = Matroid::uniform(1, 1).rank_size_distribution().unwrap();
        let t = tutte_from_distribution(&d);
        assert_eq!(format!("{t}"), "X");
        assert_eq!(t, tutte_mds(1, 1));
    }

    #[test]
    fn tutte_u12_is_x_plus_y() {
        let t = tutte_mds(2, 1);
        assert_eq!(format!("{t}"), "X + Y");
        assert_eq!(t.coefficient(1, 0), BigInt::from(1));
        assert_eq!(t.coefficient(0, 1), BigInt::from(1));
        assert_eq!(t.terms.len(), 2);
    }

    #[test]
    fn tutte_mds_matches_distribution_route() {
        for n in 0..=10usize {
            for k in 0..=n {
                let d = Matroid::uniform(n, k).rank_size_distribution().unwrap();
                assert_eq!(tutte_from_distribution(&d), tutte_mds(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn tutte_at_one_one_counts_bases() {
        let p = MrcParams::data_local(4, 2, 1).unwrap();
        let d = Matroid::mrc(p).rank_size_distribution().unwrap();
        let t = tutte_from_distribution(&d);
        assert_eq!(
            t.eval(&BigInt::from(1), &BigInt::from(1)),
            BigInt::from(basis_count(&d))
        );
    }

    #[test]
    fn tutte_coefficients_nonnegative() {
        for dist in [
            Matroid::uniform(7, 4).rank_size_distribution().unwrap(),
            Matroid::mrc(MrcParams::data_local(4, 2, 1).unwrap())
                .rank_size_distribution()
                .unwrap(),
            Matroid::mrc(MrcParams::local(3, 2, 1).unwrap())
                .rank_size_distribution()
                .unwrap(),
        ] {
            let t = tutte_from_distribution(&dist);
            for ((i, j), c) in &t.terms {
                assert!(c.sign() != Sign::Minus, "negative Tutte coefficient at ({i},{j})");
            }
        }
    }

    #[test]
    fn greene_on_uniform_matches_rs_brute_force() {
        let code = reed_solomon_4_2(5).unwrap();
        let d = Matroid::uniform(4, 2).rank_size_distribution().unwrap();
        let w = greene_weight_enumerator(&d, 5).unwrap();
        assert_eq!(w, code.enumerate_weight_distribution().unwrap());
    }

    #[test]
    fn greene_total_is_qk() {
        let p = MrcParams::data_local(6, 3, 2).unwrap();
        let d = rank_size_counts_closed_form(&p).unwrap();
        let w = greene_weight_enumerator(&d, 16).unwrap();
        assert_eq!(w.total(), BigUint::from(16u64).pow(6));
    }

    #[test]
    fn greene_azure_example() {
        let p = MrcParams::data_local(6, 3, 2).unwrap();
        let d = Matroid::mrc(p).rank_size_distribution().unwrap();
        let w = greene_weight_enumerator(&d, 16).unwrap();
        let expect: Vec<u64> = vec![1, 0, 0, 0, 450, 3960, 34680, 304080, 1782405, 5847480, 8804160];
        let got: Vec<String> = w.a.iter().map(|c| c.to_string()).collect();
        let expect: Vec<String> = expect.iter().map(|c| c.to_string()).collect();
        assert_eq!(got, expect);
    }

    #[test]
    fn britz_s1_relation_to_weight_enumerator() {
        // W = 1 + (q-1) W^(1)
        let p = MrcParams::data_local(4, 2, 1).unwrap();
        let d = Matroid::mrc(p).rank_size_distribution().unwrap();
        let q = 8u64;
        let w = greene_weight_enumerator(&d, q).unwrap();
        let w1 = britz_support_weight_enumerator(&d, q, 1).unwrap();
        for deg in 0..=d.n {
            let scaled = &w1.a[deg] * BigUint::from(q - 1);
            let base = if deg == 0 { BigUint::from(1u32) } else { BigUint::zero() };
            assert_eq!(w.a[deg], base + scaled, "deg={deg}");
        }
    }

    #[test]
    fn britz_s_equals_k_is_unit_mass_at_n() {
        let p = MrcParams::data_local(4, 2, 1).unwrap();
        let d = Matroid::mrc(p).rank_size_distribution().unwrap();
        let wk = britz_support_weight_enumerator(&d, 8, 4).unwrap();
        for deg in 0..d.n {
            assert!(wk.a[deg].is_zero());
        }
        assert_eq!(wk.a[d.n], BigUint::from(1u32));
    }

    #[test]
    fn macwilliams_repetition() {
        let w = WeightDistribution {
            n: 3,
            a: vec![1u32.into(), 0u32.into(), 0u32.into(), 1u32.into()],
        };
        let dual = macwilliams_transform(&w, 3, 1, 2).unwrap();
        assert_eq!(dual.a, vec![1u32.into(), 0u32.into(), 3u32.into(), 0u32.into()]);
        // involution with (k, n-k) swapped
        let back = macwilliams_transform(&dual, 3, 2, 2).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn macwilliams_matches_dual_brute_force() {
        let c = reed_solomon_4_2(5).unwrap();
        let w = c.enumerate_weight_distribution().unwrap();
        let via_transform = macwilliams_transform(&w, 4, 2, 5).unwrap();
        let brute = c.dual().unwrap().enumerate_weight_distribution().unwrap();
        assert_eq!(via_transform, brute);
    }

    #[test]
    fn macwilliams_rejects_invalid_total() {
        let w = WeightDistribution {
            n: 3,
            a: vec![1u32.into(), 1u32.into(), 0u32.into(), 1u32.into()],
        };
        assert!(matches!(
            macwilliams_transform(&w, 3, 1, 2),
            Err(Error::NotDivisible)
        ));
    }
}
