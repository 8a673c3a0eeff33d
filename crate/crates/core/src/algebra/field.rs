//! Finite fields as explicit addition and multiplication tables.
//!
//! Prime orders use residue arithmetic. Prime-power orders are limited to a
//! built-in table of irreducible polynomials; elements of `GF(p^m)` are
//! encoded as the integer `c_0 + c_1 p + … + c_{m-1} p^{m-1}` of their
//! polynomial coefficients.

use crate::error::{Error, Result};

/// Largest prime order accepted by [`FieldTable::new`].
pub const MAX_FIELD_ORDER: usize = 1024;

/// `(q, p, m, low-order coefficients of the monic irreducible of degree m)`.
const IRREDUCIBLES: &[(usize, usize, usize, &[usize])] = &[
    (4, 2, 2, &[1, 1]),
    (8, 2, 3, &[1, 1, 0]),
    (9, 3, 2, &[1, 0]),
    (16, 2, 4, &[1, 1, 0, 0]),
    (25, 5, 2, &[3, 0]),
    (27, 3, 3, &[1, 2, 0]),
    (32, 2, 5, &[1, 0, 1, 0, 0]),
    (49, 7, 2, &[1, 0]),
];

pub fn is_prime(n: usize) -> bool {
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

/// `Some((p, m))` when `n = p^m` for a prime `p` and `m ≥ 1`.
pub fn prime_power(n: usize) -> Option<(usize, usize)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p))?;
    let (mut rest, mut m) = (n, 0);
    while rest % p == 0 {
        rest /= p;
        m += 1;
    }
    (rest == 1).then_some((p, m))
}

/// Whether [`FieldTable::new`] accepts `q`.
pub fn is_supported_order(q: usize) -> bool {
    (is_prime(q) && q <= MAX_FIELD_ORDER) || IRREDUCIBLES.iter().any(|e| e.0 == q)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    order: usize,
    characteristic: usize,
    degree: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

impl FieldTable {
    /// `GF(q)` for a prime `q ≤ MAX_FIELD_ORDER` or a tabulated prime power.
    pub fn new(q: usize) -> Result<Self> {
        if is_prime(q) {
            if q > MAX_FIELD_ORDER {
                return Err(Error::TooLarge { order: q, max: MAX_FIELD_ORDER });
            }
            return Self::from_ops(q, q, 1, |a, b| (a + b) % q, |a, b| (a * b) % q);
        }
        let &(_, p, m, low) = IRREDUCIBLES.iter().find(|e| e.0 == q).ok_or(Error::UnsupportedOrder(q))?;
        let digits = |mut x: usize| -> Vec<usize> {
            (0..m)
                .map(|_| {
                    let d = x % p;
                    x /= p;
                    d
                })
                .collect()
        };
        let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
        let add = |a: usize, b: usize| {
            let (da, db) = (digits(a), digits(b));
            let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            encode(&s)
        };
        let mul = |a: usize, b: usize| {
            let (da, db) = (digits(a), digits(b));
            let mut prod = vec![0usize; 2 * m - 1];
            for (i, x) in da.iter().enumerate() {
                for (j, y) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            // x^m ≡ −(low coefficients)
            for k in (m..prod.len()).rev() {
                let c = prod[k];
                if c == 0 {
                    continue;
                }
                prod[k] = 0;
                for (i, &l) in low.iter().enumerate() {
                    let idx = k - m + i;
                    prod[idx] = (prod[idx] + c * (p - l % p)) % p;
                }
            }
            encode(&prod[..m])
        };
        let table = Self::from_ops(q, p, m, add, mul)?;
        table.check_ring_axioms()?;
        Ok(table)
    }

    fn from_ops(
        q: usize,
        p: usize,
        m: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let mut at = vec![0u32; q * q];
        let mut mt = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                at[a * q + b] = add(a, b) as u32;
                mt[a * q + b] = mul(a, b) as u32;
            }
        }
        let bad = |why: &str| Error::InvalidParameters(format!("GF({q}) table check failed: {why}"));
        let mut neg = vec![0u32; q];
        let mut inv = vec![0u32; q];
        for a in 0..q {
            if at[a] as usize != a || mt[q + a] as usize != a {
                return Err(bad("identity"));
            }
            let n = (0..q).filter(|&b| at[a * q + b] == 0).collect::<Vec<_>>();
            if n.len() != 1 {
                return Err(bad("additive inverse"));
            }
            neg[a] = n[0] as u32;
            if a != 0 {
                let i = (0..q).filter(|&b| mt[a * q + b] == 1).collect::<Vec<_>>();
                if i.len() != 1 {
                    return Err(bad("multiplicative inverse"));
                }
                inv[a] = i[0] as u32;
            }
        }
        Ok(Self { order: q, characteristic: p, degree: m, add: at, mul: mt, neg, inv })
    }

    /// Commutativity, associativity and distributivity, exhaustively.
    fn check_ring_axioms(&self) -> Result<()> {
        let q = self.order;
        let bad = |why: &str| Error::InvalidParameters(format!("GF({q}) table check failed: {why}"));
        for a in 0..q {
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return Err(bad("commutativity"));
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return Err(bad("associativity"));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(bad("distributivity"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }

    pub fn pow(&self, a: usize, mut e: usize) -> usize {
        let (mut base, mut acc) = (a, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Smallest-encoded generator of the multiplicative group.
    pub fn primitive_element(&self) -> usize {
        let q = self.order;
        if q == 2 {
            return 1;
        }
        (2..q)
            .find(|&g| {
                let mut x = g;
                for k in 1..q - 1 {
                    if x == 1 {
                        return k == q - 1;
                    }
                    x = self.mul(x, g);
                }
                x == 1
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    /// Quadratic character: 0 at zero, 1 on nonzero squares, −1 otherwise.
    pub fn quadratic_character(&self, a: usize) -> i8 {
        if a == 0 {
            return 0;
        }
        if self.characteristic == 2 {
            return 1;
        }
        if self.pow(a, (self.order - 1) / 2) == 1 {
            1
        } else {
            -1
        }
    }
}
