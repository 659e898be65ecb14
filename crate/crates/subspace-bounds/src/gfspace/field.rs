//! Arithmetic tables for small finite fields.
//!
//! Field elements are represented as `u8` values in `0..q`. For prime `q` the
//! value is the residue itself; for the supported extension fields the value
//! encodes the coefficient vector of a polynomial in base `p` (lowest degree
//! first), reduced modulo a fixed irreducible polynomial:
//!
//! * `q = 4`: `x^2 + x + 1` over `F_2`,
//! * `q = 8`: `x^3 + x + 1` over `F_2`,
//! * `q = 9`: `x^2 + 2x + 2` over `F_3`.
//!
//! All operations are table lookups, so the tables are built once per field.
//! Orders other than primes below 256 and the three extensions above are
//! rejected: the coordinate oracle only ever needs tiny fields, and a fixed
//! list of reduction polynomials keeps element encodings reproducible.

use num_bigint::BigInt;
use thiserror::Error;

use crate::qarith::prime_power;

/// Errors raised by the coordinate layer.
#[derive(Debug, Error)]
pub enum GfError {
    /// The requested field order is not on the supported list.
    #[error("field order {0} is not supported (primes below 256 and the orders 4, 8, 9 are available)")]
    UnsupportedOrder(u64),
    /// An enumeration would produce more subspaces than the caller allowed.
    #[error("refusing to enumerate {needed} subspaces (guard is {guard})")]
    EnumerationGuard { needed: BigInt, guard: u64 },
    /// A matrix entry does not encode a field element.
    #[error("matrix entry {entry} is not an element of the field of order {q}")]
    EntryOutOfRange { entry: u64, q: u64 },
}

/// A finite field of order `q`, with all arithmetic precomputed.
#[derive(Debug, Clone)]
pub struct Field {
    q: u16,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// Coefficients `c` such that `x^e = c[0] + c[1] x + ... + c[e-1] x^(e-1)`
/// in the chosen representation of the field of order `p^e`.
fn reduction_rule(q: u64) -> Option<(u64, Vec<u8>)> {
    match q {
        4 => Some((2, vec![1, 1])),
        8 => Some((2, vec![1, 1, 0])),
        9 => Some((3, vec![1, 1])),
        _ => None,
    }
}

impl Field {
    /// Builds the field of order `q`.
    ///
    /// Returns [`GfError::UnsupportedOrder`] unless `q` is a prime below 256
    /// or one of 4, 8, 9.
    pub fn new(q: u64) -> Result<Self, GfError> {
        let (p, e) = prime_power(q).ok_or(GfError::UnsupportedOrder(q))?;
        if e == 1 && q < 256 {
            return Ok(Self::prime(q as u16));
        }
        match reduction_rule(q) {
            Some((p2, rule)) => {
                debug_assert_eq!(p, p2);
                Ok(Self::extension(q as u16, p as u16, &rule))
            }
            None => Err(GfError::UnsupportedOrder(q)),
        }
    }

    fn prime(p: u16) -> Self {
        let q = p as usize;
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = ((a + b) % q) as u8;
                mul[a * q + b] = ((a * b) % q) as u8;
            }
        }
        Self::finish(p, add, mul)
    }

    fn extension(q: u16, p: u16, rule: &[u8]) -> Self {
        let e = rule.len();
        let digits = |mut n: usize| -> Vec<u8> {
            let mut d = vec![0u8; e];
            for slot in d.iter_mut() {
                *slot = (n % p as usize) as u8;
                n /= p as usize;
            }
            d
        };
        let value = |d: &[u8]| -> usize {
            d.iter().rev().fold(0usize, |acc, &c| acc * p as usize + c as usize)
        };
        let qs = q as usize;
        let mut add = vec![0u8; qs * qs];
        let mut mul = vec![0u8; qs * qs];
        for a in 0..qs {
            let da = digits(a);
            for b in 0..qs {
                let db = digits(b);
                let mut sum = vec![0u8; e];
                for i in 0..e {
                    sum[i] = ((da[i] as u16 + db[i] as u16) % p) as u8;
                }
                add[a * qs + b] = value(&sum) as u8;
                // Convolve, then rewrite x^(e+i) via the reduction rule until
                // the product fits in degree < e.
                let mut prod = vec![0u16; 2 * e - 1];
                for i in 0..e {
                    for j in 0..e {
                        prod[i + j] = (prod[i + j] + da[i] as u16 * db[j] as u16) % p;
                    }
                }
                for deg in (e..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    for (i, &r) in rule.iter().enumerate() {
                        prod[deg - e + i] = (prod[deg - e + i] + c * r as u16) % p;
                    }
                }
                let out: Vec<u8> = prod[..e].iter().map(|&c| c as u8).collect();
                mul[a * qs + b] = value(&out) as u8;
            }
        }
        Self::finish(q, add, mul)
    }

    fn finish(q: u16, add: Vec<u8>, mul: Vec<u8>) -> Self {
        let qs = q as usize;
        let mut neg = vec![0u8; qs];
        let mut inv = vec![0u8; qs];
        for a in 0..qs {
            for b in 0..qs {
                if add[a * qs + b] == 0 {
                    neg[a] = b as u8;
                }
                if a != 0 && mul[a * qs + b] == 1 {
                    inv[a] = b as u8;
                }
            }
        }
        Field { q, add, mul, neg, inv }
    }

    /// The order of the field.
    pub fn order(&self) -> u64 {
        self.q as u64
    }

    /// `a + b`.
    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    /// `a * b`.
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    /// `-a`.
    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    /// `a - b`.
    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    /// `a^(-1)`.
    ///
    /// # Panics
    ///
    /// Panics if `a == 0`.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a != 0, "zero has no multiplicative inverse");
        self.inv[a as usize]
    }

    /// Checks that `entry` encodes a field element.
    pub fn check_entry(&self, entry: u64) -> Result<u8, GfError> {
        if entry < self.q as u64 {
            Ok(entry as u8)
        } else {
            Err(GfError::EntryOutOfRange { entry, q: self.q as u64 })
        }
    }
}
