//! Finite field arithmetic GF(p^e) with log/exp tables.
//!
//! Elements are stored as integer indices in [0, p^e): the index is the
//! coefficient vector of a polynomial in the modulus root, packed base p
//! (coefficient of x^i in digit i). Multiplication goes through discrete
//! log tables on a fixed primitive element `zeta = exp[1]`.

use crate::error::Error;
use std::sync::Arc;

pub type Elem = u32;

/// Hard cap on field order. All catalog fields are far below this.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug)]
pub struct Field {
    pub p: u32,
    pub e: u32,
    pub q: u32,
    /// Monic modulus, coefficients low-to-high, length e+1, modulus[e] = 1.
    pub modulus: Vec<u32>,
    /// exp[k] = zeta^k for 0 <= k < q-1.
    exp: Vec<Elem>,
    /// log[x] defined for x != 0: exp[log[x]] = x. log[0] is a sentinel.
    log: Vec<u32>,
}

pub type FieldRef = Arc<Field>;

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}
impl Eq for Field {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if n as u64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Polynomials over GF(p), coefficients low-to-high, no trailing zeros enforced by callers.
mod poly {
    pub fn trim(mut f: Vec<u32>) -> Vec<u32> {
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        f
    }

    pub fn deg(f: &[u32]) -> usize {
        f.len() - 1
    }

    /// f mod g over GF(p), g monic.
    pub fn rem(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
        let mut r: Vec<u32> = f.to_vec();
        let dg = deg(g);
        while r.len() > dg && r.len() > 1 {
            let lead = *r.last().unwrap();
            if lead != 0 {
                let shift = r.len() - 1 - dg;
                for i in 0..=dg {
                    let idx = shift + i;
                    let sub = (lead as u64 * g[i] as u64) % p as u64;
                    r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
            r.pop();
        }
        trim(r)
    }

    pub fn mul(f: &[u32], g: &[u32], p: u32) -> Vec<u32> {
        let mut out = vec![0u32; f.len() + g.len() - 1];
        for (i, &a) in f.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in g.iter().enumerate() {
                out[i + j] = ((out[i + j] as u64 + a as u64 * b as u64) % p as u64) as u32;
            }
        }
        trim(out)
    }

    pub fn is_zero(f: &[u32]) -> bool {
        f.iter().all(|&c| c == 0)
    }
}

/// Irreducibility by trial division against all monic polynomials of degree <= e/2.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let e = modulus.len() - 1;
    if e == 1 {
        return true;
    }
    for d in 1..=(e / 2) {
        // all monic polynomials of degree d: p^d of them
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut kk = k;
            for _ in 0..d {
                g.push((kk % p as u64) as u32);
                kk /= p as u64;
            }
            g.push(1);
            if poly::is_zero(&poly::rem(modulus, &g, p)) {
                return false;
            }
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree e, coefficients compared low-to-high.
fn default_modulus(p: u32, e: u32) -> Vec<u32> {
    if e == 1 {
        return vec![0, 1];
    }
    let count = (p as u64).pow(e);
    for k in 0..count {
        let mut g = Vec::with_capacity(e as usize + 1);
        let mut kk = k;
        for _ in 0..e {
            g.push((kk % p as u64) as u32);
            kk /= p as u64;
        }
        g.push(1);
        if is_irreducible(&g, p) {
            return g;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn factorize(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
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

impl Field {
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<FieldRef, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        assert!(e >= 1, "extension degree must be >= 1");
        let q64 = (p as u64).pow(e);
        assert!(q64 <= MAX_ORDER, "field order {} exceeds cap 2^20", q64);
        let q = q64 as u32;
        let modulus = match modulus {
            Some(m) => {
                assert_eq!(m.len() as u32, e + 1, "modulus must be monic of degree e");
                assert_eq!(m[e as usize], 1, "modulus must be monic");
                assert!(m.iter().all(|&c| c < p), "modulus coefficients must be reduced mod p");
                if !is_irreducible(&m, p) {
                    return Err(Error::ReducibleModulus);
                }
                m
            }
            None => default_modulus(p, e),
        };
        let mut f = Field {
            p,
            e,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };

        // polynomial multiplication on packed indices, used to bootstrap the tables
        let raw_mul = |f: &Field, a: Elem, b: Elem| -> Elem {
            let pa = f.unpack(a);
            let pb = f.unpack(b);
            let prod = poly::mul(&pa, &pb, p);
            let r = poly::rem(&prod, &f.modulus, p);
            f.pack(&r)
        };
        let order_of = |fld: &Field, x: Elem, prime_divs: &[u64]| -> bool {
            // true iff x has multiplicative order exactly q-1
            let n = (fld.q - 1) as u64;
            let powmod = |mut base: Elem, mut k: u64| -> Elem {
                let mut acc: Elem = 1;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = raw_mul(fld, acc, base);
                    }
                    base = raw_mul(fld, base, base);
                    k >>= 1;
                }
                acc
            };
            prime_divs.iter().all(|&r| powmod(x, n / r) != 1)
        };

        // find the least primitive element
        let prime_divs = factorize((q - 1) as u64);
        let mut zeta = 0;
        for x in 1..q {
            if order_of(&f, x, &prime_divs) {
                zeta = x;
                break;
            }
        }
        assert!(zeta != 0 || q == 2, "no primitive element found");
        if q == 2 {
            zeta = 1;
        }

        let mut exp = Vec::with_capacity((q - 1) as usize);
        let mut log = vec![u32::MAX; q as usize];
        let mut acc: Elem = 1;
        for k in 0..(q - 1) {
            exp.push(acc);
            log[acc as usize] = k;
            acc = raw_mul(&f, acc, zeta);
        }
        assert_eq!(acc, 1, "generator order mismatch");
        f.exp = exp;
        f.log = log;
        Ok(Arc::new(f))
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }
    #[inline]
    pub fn one(&self) -> Elem {
        1
    }
    /// The fixed primitive element zeta.
    #[inline]
    pub fn zeta(&self) -> Elem {
        self.exp[if self.q == 2 { 0 } else { 1 }]
    }
    #[inline]
    pub fn exp(&self, k: u32) -> Elem {
        self.exp[(k % (self.q - 1)) as usize]
    }
    #[inline]
    pub fn log(&self, x: Elem) -> u32 {
        debug_assert!(x != 0);
        self.log[x as usize]
    }

    pub fn unpack(&self, x: Elem) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut xx = x;
        for _ in 0..self.e {
            out.push(xx % self.p);
            xx /= self.p;
        }
        out
    }

    pub fn pack(&self, coeffs: &[u32]) -> Elem {
        let mut out = 0u32;
        for i in (0..self.e as usize).rev() {
            let c = if i < coeffs.len() { coeffs[i] } else { 0 };
            out = out * self.p + c;
        }
        out
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.e == 1 {
            return (a + b) % self.p;
        }
        let mut out = 0u32;
        let mut aa = a;
        let mut bb = b;
        let mut mul = 1u32;
        for _ in 0..self.e {
            let d = (aa % self.p + bb % self.p) % self.p;
            out += d * mul;
            mul *= self.p;
            aa /= self.p;
            bb /= self.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.e == 1 {
            return (self.p - a) % self.p;
        }
        let mut out = 0u32;
        let mut aa = a;
        let mut mul = 1u32;
        for _ in 0..self.e {
            let d = (self.p - aa % self.p) % self.p;
            out += d * mul;
            mul *= self.p;
            aa /= self.p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        let k = self.log[a as usize] as u64 + self.log[b as usize] as u64;
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        debug_assert!(a != 0, "division by zero");
        let k = self.log[a as usize];
        self.exp[((self.q - 1 - k) % (self.q - 1)) as usize]
    }

    #[inline]
    pub fn div(&self, a: Elem, b: Elem) -> Elem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        if a == 0 {
            assert!(k > 0, "0 to a non-positive power");
            return 0;
        }
        let n = (self.q - 1) as i64;
        let kk = ((self.log[a as usize] as i64 * k) % n + n) % n;
        self.exp[kk as usize]
    }

    /// Frobenius x -> x^(p^i).
    #[inline]
    pub fn frob(&self, a: Elem, i: u32) -> Elem {
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        let mut k = self.log[a as usize] as u64;
        for _ in 0..(i % self.e) {
            k = (k * self.p as u64) % n;
        }
        self.exp[k as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.q
    }

    /// Image table of the canonical embedding of `sub` into `self`:
    /// the modulus root of `sub` goes to its least root in `self`, extended
    /// F_p-linearly. Panics if `sub` is not embeddable.
    pub fn embedding_from(&self, sub: &Field) -> Vec<Elem> {
        assert_eq!(self.p, sub.p, "different characteristic");
        assert!(self.e % sub.e == 0, "not a subfield: {} into {}", sub.q, self.q);
        // least root of sub.modulus in self
        let mut root = None;
        for x in 0..self.q {
            // evaluate sub.modulus at x over self
            let mut acc = 0;
            for &c in sub.modulus.iter().rev() {
                acc = self.add(self.mul(acc, x), c % self.p);
            }
            if acc == 0 {
                root = Some(x);
                break;
            }
        }
        let root = root.expect("subfield modulus has a root in the big field");
        let mut map = vec![0 as Elem; sub.q as usize];
        for a in 0..sub.q {
            let coeffs = sub.unpack(a);
            // sum coeffs[i] * root^i in self
            let mut acc = 0;
            for (i, &c) in coeffs.iter().enumerate() {
                let mut term = c % self.p; // prime subfield constants coincide
                for _ in 0..i {
                    term = self.mul(term, root);
                }
                acc = self.add(acc, term);
            }
            map[a as usize] = acc;
        }
        // sanity: the embedding respects arithmetic
        debug_assert!((0..sub.q.min(64)).all(|a| (0..sub.q.min(64)).all(|b| {
            map[sub.mul(a, b) as usize] == self.mul(map[a as usize], map[b as usize])
                && map[sub.add(a, b) as usize] == self.add(map[a as usize], map[b as usize])
        })));
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_with_paper_modulus() {
        // zeta^2 = zeta + 1
        let f = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let z = f.zeta();
        assert_eq!(f.mul(z, z), f.add(z, 1));
        // zeta has order 8
        assert_eq!(f.pow(z, 8), 1);
        assert_ne!(f.pow(z, 4), 1);
    }

    #[test]
    fn gf2_trivial() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.q, 2);
        assert_eq!(f.mul(1, 1), 1);
        assert_eq!(f.add(1, 1), 0);
    }

    #[test]
    fn gf64_frobenius_order() {
        let f = Field::new(2, 6, None).unwrap();
        assert_eq!(f.q, 64);
        // Frobenius has order 6: x^(2^6) = x for all x, and no smaller power fixes everything
        for x in f.elements() {
            assert_eq!(f.frob(x, 6), x);
        }
        for i in 1..6 {
            assert!(f.elements().any(|x| f.frob(x, i) != x), "sigma^{} is identity", i);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(Field::new(6, 1, None), Err(Error::NotPrime(6))));
        // x^2 + 2x + 1 = (x+1)^2 over GF(3)
        assert!(matches!(Field::new(3, 2, Some(vec![1, 2, 1])), Err(Error::ReducibleModulus)));
    }

    #[test]
    fn field_axioms_random_triples() {
        // associativity and distributivity on random triples, all fields up to 2^12
        let cases = [(2, 12), (3, 4), (5, 3), (7, 2), (59, 1), (2, 6), (3, 2)];
        let mut seed = 0x9e3779b97f4a7c15u64;
        let mut rnd = move || {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            seed
        };
        for (p, e) in cases {
            let f = Field::new(p, e, None).unwrap();
            for _ in 0..200 {
                let a = (rnd() % f.q as u64) as Elem;
                let b = (rnd() % f.q as u64) as Elem;
                let c = (rnd() % f.q as u64) as Elem;
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            }
            // exp table law
            for i in (0..(f.q - 1)).step_by(7) {
                for j in (0..(f.q - 1)).step_by(11) {
                    assert_eq!(f.mul(f.exp(i), f.exp(j)), f.exp(i + j));
                }
            }
        }
    }

    #[test]
    fn subfield_embedding_respects_arithmetic() {
        let big = Field::new(2, 6, None).unwrap();
        let sub = Field::new(2, 2, None).unwrap();
        let map = big.embedding_from(&sub);
        for a in sub.elements() {
            for b in sub.elements() {
                assert_eq!(map[sub.mul(a, b) as usize], big.mul(map[a as usize], map[b as usize]));
                assert_eq!(map[sub.add(a, b) as usize], big.add(map[a as usize], map[b as usize]));
            }
        }
        let big = Field::new(3, 4, None).unwrap();
        let sub = Field::new(3, 2, Some(vec![2, 2, 1])).unwrap();
        let map = big.embedding_from(&sub);
        for a in sub.elements() {
            for b in sub.elements() {
                assert_eq!(map[sub.mul(a, b) as usize], big.mul(map[a as usize], map[b as usize]));
                assert_eq!(map[sub.add(a, b) as usize], big.add(map[a as usize], map[b as usize]));
            }
        }
    }

    #[test]
    fn default_modulus_is_lex_least() {
        // GF(9): x^2 + 1 is the lex-least monic irreducible (coefficients low-to-high)
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.modulus, vec![1, 0, 1]);
        // GF(4): x^2 + x + 1 is the only irreducible quadratic
        let f = Field::new(2, 2, None).unwrap();
        assert_eq!(f.modulus, vec![1, 1, 1]);
    }
}
