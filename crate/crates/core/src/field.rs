//! Coefficient fields.
//!
//! [`FieldSpec`] selects the field for homology: a prime field GF(p) or ℚ.
//! [`RingField`] is the arithmetic used by the face-ring linear algebra. For
//! small characteristic it is an extension GF(p^k) with enough elements that
//! random linear forms behave generically, while keeping the characteristic
//! (and therefore every Betti number) of the requested field.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Prime used for generic-characteristic probes and as the stand-in for ℚ
/// in face-ring computations.
pub const GENERIC_PRIME: u32 = 32003;

/// Minimum number of elements a [`RingField`] should have for random forms.
const MIN_RING_FIELD_SIZE: u64 = 30_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    /// GF(p) for a prime `p < 2^31`.
    Prime(u32),
    Rationals,
}

impl FieldSpec {
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if p >= 1 << 31 {
            return Err(Error::InvalidField(format!("{p} is not below 2^31")));
        }
        if !is_prime(p as u64) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        Ok(FieldSpec::Prime(p))
    }

    pub fn gf2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    pub fn generic() -> FieldSpec {
        FieldSpec::Prime(GENERIC_PRIME)
    }

    /// 0 for ℚ.
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Prime(p) => *p,
            FieldSpec::Rationals => 0,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
            FieldSpec::Rationals => f.write_str("Q"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `q`, `Q`, a bare prime, `p:<prime>` and `GF(<prime>)`.
    fn from_str(s: &str) -> Result<FieldSpec> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("rationals") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = t
            .strip_prefix("p:")
            .or_else(|| t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
            .or_else(|| t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')))
            .unwrap_or(t);
        let p: u32 = digits.parse().map_err(|_| Error::InvalidField(format!("cannot read field '{s}'")))?;
        FieldSpec::prime(p)
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

/// A finite field GF(p^k) with elements encoded as integers `0..q`.
///
/// Element `a` stands for the polynomial whose base-`p` digits are the
/// coefficients of `a`. Multiplication goes through discrete log tables.
#[derive(Clone)]
pub struct RingField {
    p: u32,
    k: u32,
    q: u32,
    tables: Option<Arc<LogTables>>,
}

struct LogTables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for RingField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.k)
        }
    }
}

impl PartialEq for RingField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k
    }
}

impl RingField {
    /// The prime field GF(p) itself, however small.
    pub fn prime(p: u32) -> Result<RingField> {
        FieldSpec::prime(p)?;
        Ok(RingField { p, k: 1, q: p, tables: None })
    }

    /// The field used for ring computations over `spec`: GF(p) when p is
    /// large, otherwise the smallest extension GF(p^k) with at least 30000
    /// elements. ℚ is represented by GF(32003).
    pub fn for_spec(spec: FieldSpec) -> RingField {
        let p = match spec {
            FieldSpec::Prime(p) => p,
            FieldSpec::Rationals => GENERIC_PRIME,
        };
        if p as u64 >= 1000 {
            return RingField { p, k: 1, q: p, tables: None };
        }
        let mut k = 1;
        let mut q = p as u64;
        while q < MIN_RING_FIELD_SIZE {
            q *= p as u64;
            k += 1;
        }
        RingField { p, k, q: q as u32, tables: Some(log_tables(p, k)) }
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.k == 1 {
            let s = a + b;
            if s >= self.p { s - self.p } else { s }
        } else if self.p == 2 {
            a ^ b
        } else {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.k == 1 {
            if a == 0 { 0 } else { self.p - a }
        } else if self.p == 2 {
            a
        } else {
            self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            None => ((a as u64 * b as u64) % self.p as u64) as u32,
            Some(t) => t.exp[(t.log[a as usize] + t.log[b as usize]) as usize],
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        match &self.tables {
            None => pow_mod(a as u64, self.p as u64 - 2, self.p as u64) as u32,
            Some(t) => {
                let order = self.q - 1;
                t.exp[((order - t.log[a as usize]) % order) as usize]
            }
        }
    }

    /// Image of an integer under ℤ → GF(p) ⊆ GF(p^k).
    pub fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> u32 {
        rng.gen_range(0..self.q)
    }

    fn digitwise(&self, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..self.k {
            out += op(a % self.p, b % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

fn log_tables(p: u32, k: u32) -> Arc<LogTables> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<LogTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().unwrap().get(&(p, k)) {
        return t.clone();
    }
    let t = Arc::new(build_log_tables(p, k));
    cache.lock().unwrap().insert((p, k), t.clone());
    t
}

/// Searches for a primitive polynomial of degree `k` over GF(p) and tabulates
/// the powers of its root.
fn build_log_tables(p: u32, k: u32) -> LogTables {
    let q = (p as u64).pow(k) as u32;
    let order = q - 1;
    let digits = |mut x: u32| -> Vec<u32> {
        (0..k)
            .map(|_| {
                let d = x % p;
                x /= p;
                d
            })
            .collect()
    };
    let pack = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &d| acc * p + d) };
    // candidate x^k = c(x); tail encodes c's coefficients
    for tail in 1..q {
        let c = digits(tail);
        if c[0] == 0 {
            continue;
        }
        let mut exp = vec![0u32; 2 * order as usize];
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        let mut ok = true;
        for i in 0..order {
            let val = pack(&cur);
            if i > 0 && val == 1 {
                ok = false;
                break;
            }
            exp[i as usize] = val;
            // multiply by x
            let top = cur[k as usize - 1];
            for j in (1..k as usize).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            for j in 0..k as usize {
                cur[j] = (cur[j] + top * c[j]) % p;
            }
        }
        if !ok || pack(&cur) != 1 {
            continue;
        }
        let mut log = vec![0u32; q as usize];
        for i in 0..order {
            exp[(i + order) as usize] = exp[i as usize];
            log[exp[i as usize] as usize] = i;
        }
        return LogTables { exp, log };
    }
    unreachable!("every finite field has a primitive polynomial")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_field_specs() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!("p:32003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(32003));
        assert_eq!("GF(5)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(5));
        assert!(matches!("4".parse::<FieldSpec>(), Err(Error::InvalidField(_))));
        assert!(matches!("p:x".parse::<FieldSpec>(), Err(Error::InvalidField(_))));
        assert!(FieldSpec::prime(2147483659).is_err());
        assert_eq!(FieldSpec::Prime(3).to_string(), "GF(3)");
    }

    fn check_axioms(f: &RingField) {
        let mut rng = rand::thread_rng();
        for _ in 0..500 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.add(a, f.neg(a)), 0);
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a)), 1);
            }
        }
    }

    #[test]
    fn extension_fields_satisfy_field_axioms() {
        let f2 = RingField::for_spec(FieldSpec::Prime(2));
        assert_eq!((f2.characteristic(), f2.degree(), f2.size()), (2, 15, 32768));
        check_axioms(&f2);
        let f3 = RingField::for_spec(FieldSpec::Prime(3));
        assert_eq!(f3.size(), 59049);
        check_axioms(&f3);
        check_axioms(&RingField::for_spec(FieldSpec::Rationals));
        check_axioms(&RingField::prime(7).unwrap());
    }

    #[test]
    fn characteristic_is_preserved() {
        let f = RingField::for_spec(FieldSpec::Prime(3));
        let three = f.add(f.add(1, 1), 1);
        assert_eq!(three, 0);
        assert_eq!(f.from_i64(-1), 2);
    }
}
