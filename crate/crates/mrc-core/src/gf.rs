//! Exact arithmetic over GF(p^m) for q = p^m <= 2^16.
//!
//! Elements are canonical integers in [0, q): the value encodes the
//! polynomial residue in base p, lowest-degree digit first. Multiplication
//! and inversion go through log/antilog tables built at construction; the
//! tables are an internal optimization and never leak into the interface.

use crate::error::{Error, Result};

/// Canonical field element: an integer in [0, q).
pub type FieldElement = u32;

/// Upper bound on the field size. Everything here is desk scale.
pub const MAX_Q: u64 = 1 << 16;

/// An immutable description of GF(p^m) with an explicit modulus polynomial.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    q: u32,
    /// Monic irreducible of degree m over GF(p), lowest degree first
    /// (length m+1). Empty for m = 1, where the modulus is implicit.
    modulus: Vec<u32>,
    /// exp[i] = g^i for a fixed primitive element g, i in 0..2(q-1).
    exp: Vec<u32>,
    /// log[v] for v in 1..q; log[0] unused.
    log: Vec<u32>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Factor q as p^m with p prime, or reject.
fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 || q > MAX_Q {
        return Err(Error::InvalidFieldSpec(format!(
            "q must be in [2, {MAX_Q}], got {q}"
        )));
    }
    let mut p = 2u64;
    while p * p <= q {
        if q % p == 0 {
            let mut m = 0u32;
            let mut v = q;
            while v % p == 0 {
                v /= p;
                m += 1;
            }
            if v != 1 {
                return Err(Error::InvalidFieldSpec(format!("{q} is not a prime power")));
            }
            return Ok((p as u32, m));
        }
        p += 1;
    }
    // q itself is prime
    Ok((q as u32, 1))
}

impl FieldSpec {
    /// GF(q) with the default modulus: the lexicographically smallest monic
    /// irreducible of degree m over GF(p). This yields x^4+x+1 for GF(16)
    /// and x^3+x+1 for GF(8), so instances reproduce bit-exactly across
    /// implementations.
    pub fn new(q: u64) -> Result<FieldSpec> {
        let (p, m) = prime_power(q)?;
        if m == 1 {
            return Self::from_parts(p, 1, Vec::new());
        }
        let modulus = smallest_irreducible(p, m)?;
        Self::from_parts(p, m, modulus)
    }

    /// GF(p^m) with an explicit modulus, lowest degree first, length m+1.
    /// Irreducibility is checked exhaustively by trial division.
    pub fn with_modulus(p: u32, m: u32, modulus: Vec<u32>) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSpec(format!("{p} is not prime")));
        }
        if m == 1 {
            if !modulus.is_empty() {
                return Err(Error::InvalidFieldSpec(
                    "modulus must be implicit (empty) for m = 1".into(),
                ));
            }
            return Self::from_parts(p, 1, modulus);
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidFieldSpec(format!(
                "modulus must have {} coefficients",
                m + 1
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidFieldSpec("modulus coefficient >= p".into()));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidFieldSpec("modulus must be monic".into()));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::ReducibleModulus { p });
        }
        Self::from_parts(p, m, modulus)
    }

    fn from_parts(p: u32, m: u32, modulus: Vec<u32>) -> Result<FieldSpec> {
        let q128 = (p as u64).checked_pow(m).filter(|&q| q <= MAX_Q);
        let q = match q128 {
            Some(q) => q as u32,
            None => {
                return Err(Error::InvalidFieldSpec(format!(
                    "p^m = {p}^{m} exceeds {MAX_Q}"
                )))
            }
        };
        let mut spec = FieldSpec {
            p,
            m,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        spec.build_tables();
        Ok(spec)
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, lowest degree first. Empty for m = 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validate an externally supplied value as a field element.
    pub fn element(&self, v: u64) -> Result<FieldElement> {
        if v < self.q as u64 {
            Ok(v as FieldElement)
        } else {
            Err(Error::ElementOutOfRange(v, self.q as u64))
        }
    }

    /// All q elements in ascending value order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        0..self.q
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.q && b < self.q);
        if self.p == 2 {
            return a ^ b;
        }
        if self.m == 1 {
            return (a + self.p - b) % self.p;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.sub(0, a)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        debug_assert!(a < self.q && b < self.q);
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        debug_assert!(a < self.q);
        if a == 0 {
            return Err(Error::InverseOfZero);
        }
        Ok(self.exp[(self.q - 1 - self.log[a as usize]) as usize])
    }

    /// a^e with a 0^0 = 1 convention.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        debug_assert!(a < self.q);
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let l = (self.log[a as usize] as u64 * (e % (self.q as u64 - 1))) % (self.q as u64 - 1);
        self.exp[l as usize]
    }

    fn digitwise(&self, a: u32, b: u32, f: impl Fn(u32, u32) -> u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut base = 1u32;
        for _ in 0..self.m {
            out += f(a % self.p, b % self.p) * base;
            a /= self.p;
            b /= self.p;
            base *= self.p;
        }
        out
    }

    /// Schoolbook polynomial multiply, then reduce mod the modulus. Only
    /// used while building the tables.
    fn poly_mul_mod(&self, a: u32, b: u32) -> u32 {
        let m = self.m as usize;
        let da = digits(a, self.p, m);
        let db = digits(b, self.p, m);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // reduce: x^m = -(modulus[0..m])
        for d in (m..2 * m).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for t in 0..m {
                let sub = (c * self.modulus[t]) % self.p;
                prod[d - m + t] = (prod[d - m + t] + self.p - sub) % self.p;
            }
        }
        undigits(&prod[..m], self.p)
    }

    fn raw_mul(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            ((a as u64 * b as u64) % self.p as u64) as u32
        } else {
            self.poly_mul_mod(a, b)
        }
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let order = q - 1;
        let g = self.find_generator();
        let mut exp = vec![0u32; 2 * order];
        let mut log = vec![0u32; q];
        let mut acc = 1u32;
        for (i, slot) in exp.iter_mut().take(order).enumerate() {
            *slot = acc;
            log[acc as usize] = i as u32;
            acc = self.raw_mul(acc, g);
        }
        for i in order..2 * order {
            exp[i] = exp[i - order];
        }
        self.exp = exp;
        self.log = log;
    }

    fn find_generator(&self) -> u32 {
        let order = self.q as u64 - 1;
        let factors = prime_factors(order);
        'cand: for g in 2..self.q {
            for &f in &factors {
                if self.raw_pow(g, order / f) == 1 {
                    continue 'cand;
                }
            }
            return g;
        }
        // q = 2: the only nonzero element generates the trivial group
        1
    }

    fn raw_pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut out = 1u32;
        while e > 0 {
            if e & 1 == 1 {
                out = self.raw_mul(out, base);
            }
            base = self.raw_mul(base, base);
            e >>= 1;
        }
        out
    }

    /// Header form `q=<int> poly=<comma-separated coefficients>`; the poly
    /// part is omitted for prime fields.
    pub fn to_header(&self) -> String {
        if self.m == 1 {
            format!("q={}", self.q)
        } else {
            let coeffs: Vec<String> = self.modulus.iter().map(|c| c.to_string()).collect();
            format!("q={} poly={}", self.q, coeffs.join(","))
        }
    }

    pub fn from_header(line: &str) -> Result<FieldSpec> {
        let mut q: Option<u64> = None;
        let mut poly: Option<Vec<u32>> = None;
        for tok in line.split_whitespace() {
            if let Some(v) = tok.strip_prefix("q=") {
                q = Some(
                    v.parse()
                        .map_err(|_| Error::BadFile(format!("bad q value: {v}")))?,
                );
            } else if let Some(v) = tok.strip_prefix("poly=") {
                let coeffs: std::result::Result<Vec<u32>, _> =
                    v.split(',').map(|c| c.parse()).collect();
                poly = Some(coeffs.map_err(|_| Error::BadFile(format!("bad poly: {v}")))?);
            } else {
                return Err(Error::BadFile(format!("unexpected token: {tok}")));
            }
        }
        let q = q.ok_or_else(|| Error::BadFile("missing q=".into()))?;
        let (p, m) = prime_power(q)?;
        match poly {
            Some(coeffs) if m > 1 => FieldSpec::with_modulus(p, m, coeffs),
            Some(_) => Err(Error::BadFile("poly given for a prime field".into())),
            None if m == 1 => FieldSpec::new(q),
            None => Err(Error::BadFile(format!("GF({q}) requires poly="))),
        }
    }
}

fn digits(mut v: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0u32; m];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    let mut out = 0u32;
    for &d in ds.iter().rev() {
        out = out * p + d;
    }
    out
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Trial division by every monic polynomial of degree 1..=m/2 over GF(p).
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let m = poly.len() - 1;
    if poly[0] == 0 {
        return false; // x divides
    }
    for d in 1..=m / 2 {
        let count = (p as u64).pow(d as u32);
        for c in 0..count {
            // monic divisor candidate: x^d + digits(c)
            let mut div = digits_u64(c, p, d);
            div.push(1);
            if poly_rem_is_zero(p, poly, &div) {
                return false;
            }
        }
    }
    true
}

fn digits_u64(mut v: u64, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for slot in out.iter_mut() {
        *slot = (v % p as u64) as u32;
        v /= p as u64;
    }
    out
}

fn poly_rem_is_zero(p: u32, num: &[u32], div: &[u32]) -> bool {
    let mut rem: Vec<u32> = num.to_vec();
    let dd = div.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap();
        if lead != 0 {
            let shift = rem.len() - 1 - dd;
            for (t, &c) in div.iter().enumerate() {
                let sub = (lead * c) % p;
                rem[shift + t] = (rem[shift + t] + p - sub) % p;
            }
        }
        rem.pop();
        while rem.len() > dd && *rem.last().unwrap() == 0 {
            rem.pop();
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// Lexicographically smallest monic irreducible of degree m over GF(p),
/// ordered by the integer encoding of the lower coefficients.
fn smallest_irreducible(p: u32, m: u32) -> Result<Vec<u32>> {
    let count = (p as u64).pow(m);
    for c in 0..count {
        let mut poly = digits_u64(c, p, m as usize);
        poly.push(1);
        if is_irreducible(p, &poly) {
            return Ok(poly);
        }
    }
    Err(Error::InvalidFieldSpec(format!(
        "no irreducible of degree {m} over GF({p})"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent schoolbook multiply for cross-checking the table route.
    fn schoolbook_mul(spec: &FieldSpec, a: u32, b: u32) -> u32 {
        spec.raw_mul(a, b)
    }

    #[test]
    fn gf16_default_modulus_is_x4_x_1() {
        let f = FieldSpec::new(16).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn gf8_default_modulus_is_x3_x_1() {
        let f = FieldSpec::new(8).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf16_mul_2_8_is_3() {
        // x * x^3 = x^4 = x + 1 mod x^4+x+1
        let f = FieldSpec::new(16).unwrap();
        assert_eq!(f.mul(2, 8), 3);
        assert_eq!(schoolbook_mul(&f, 2, 8), 3);
    }

    #[test]
    fn gf5_add() {
        let f = FieldSpec::new(5).unwrap();
        assert_eq!(f.add(3, 4), 2);
    }

    #[test]
    fn enumerate_elements() {
        assert_eq!(FieldSpec::new(2).unwrap().elements().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(FieldSpec::new(4).unwrap().elements().count(), 4);
        let f16: Vec<u32> = FieldSpec::new(16).unwrap().elements().collect();
        assert_eq!(f16[0], 0);
        assert_eq!(*f16.last().unwrap(), 15);
    }

    #[test]
    fn inverse_axiom() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::new(q).unwrap();
            for a in 1..f.q() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn inverse_of_zero_rejected() {
        let f = FieldSpec::new(8).unwrap();
        assert!(matches!(f.inv(0), Err(Error::InverseOfZero)));
    }

    #[test]
    fn element_out_of_range() {
        let f = FieldSpec::new(8).unwrap();
        assert!(f.element(7).is_ok());
        assert!(matches!(f.element(8), Err(Error::ElementOutOfRange(8, 8))));
    }

    #[test]
    fn field_axioms_exhaustive_small_q() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = FieldSpec::new(q).unwrap();
            let els: Vec<u32> = f.elements().collect();
            for &a in &els {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.sub(a, a), 0);
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    assert_eq!(f.mul(a, b), schoolbook_mul(&f, a, b));
                    for &c in &els {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn mul_matches_repeated_add_for_prime_fields() {
        for q in [2u64, 3, 5, 7, 11, 13] {
            let f = FieldSpec::new(q).unwrap();
            for a in 0..f.q() {
                for b in 0..f.q() {
                    let mut acc = 0;
                    for _ in 0..b {
                        acc = f.add(acc, a);
                    }
                    assert_eq!(f.mul(a, b), acc);
                }
            }
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = FieldSpec::new(9).unwrap();
        for a in 0..f.q() {
            let mut acc = 1;
            for e in 0..10u64 {
                assert_eq!(f.pow(a, e), acc, "a={a} e={e}");
                acc = f.mul(acc, a);
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^4 + 1 = (x+1)^4 over GF(2)
        assert!(matches!(
            FieldSpec::with_modulus(2, 4, vec![1, 0, 0, 0, 1]),
            Err(Error::ReducibleModulus { p: 2 })
        ));
    }

    #[test]
    fn header_round_trip() {
        let f = FieldSpec::new(16).unwrap();
        assert_eq!(f.to_header(), "q=16 poly=1,1,0,0,1");
        let g = FieldSpec::from_header(&f.to_header()).unwrap();
        assert_eq!(f, g);
        let prime = FieldSpec::new(5).unwrap();
        assert_eq!(prime.to_header(), "q=5");
        assert_eq!(FieldSpec::from_header("q=5").unwrap(), prime);
    }
}
