//! Exact scalar arithmetic: rationals, roots of unity as elements of Q/Z,
//! and cyclotomic numbers in a canonical basis modulo the m-th cyclotomic
//! polynomial.
//!
//! All decision paths in this crate compare these values exactly; no floating
//! point is ever consulted.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        return 0;
    }
    (a / gcd(a, b)).checked_mul(b).expect("lcm overflow").abs()
}

/// Euler phi of a small positive integer.
pub fn euler_phi(mut n: i64) -> i64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact rational number with reduced `num/den`, `den > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat {
    num: i64,
    den: i64,
}

impl Rat {
    pub const ZERO: Rat = Rat { num: 0, den: 1 };
    pub const ONE: Rat = Rat { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        let sign = if den < 0 { -1 } else { 1 };
        if g == 0 {
            return Rat { num: 0, den: 1 };
        }
        Rat {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn from_int(n: i64) -> Rat {
        Rat { num: n, den: 1 }
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    fn make(num: i128, den: i128) -> Rat {
        assert!(den != 0);
        let sign: i128 = if den < 0 { -1 } else { 1 };
        let g = {
            let (mut a, mut b) = (num.abs(), den.abs());
            while b != 0 {
                let t = a % b;
                a = b;
                b = t;
            }
            a
        };
        if g == 0 {
            return Rat::ZERO;
        }
        let n = sign * num / g;
        let d = sign * den / g;
        Rat {
            num: i64::try_from(n).expect("rational overflow"),
            den: i64::try_from(d).expect("rational overflow"),
        }
    }

    pub fn add(&self, other: &Rat) -> Rat {
        Rat::make(
            self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn sub(&self, other: &Rat) -> Rat {
        Rat::make(
            self.num as i128 * other.den as i128 - other.num as i128 * self.den as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn mul(&self, other: &Rat) -> Rat {
        Rat::make(
            self.num as i128 * other.num as i128,
            self.den as i128 * other.den as i128,
        )
    }

    pub fn div(&self, other: &Rat) -> Rat {
        assert!(!other.is_zero(), "division by zero");
        Rat::make(
            self.num as i128 * other.den as i128,
            self.den as i128 * other.num as i128,
        )
    }

    pub fn neg(&self) -> Rat {
        Rat {
            num: -self.num,
            den: self.den,
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// An element of Q/Z written as the exponent `q` of `e^{2*pi*i*q}`,
/// kept reduced with `0 <= num < den`. The denominator is the order of the
/// root of unity. The group operation is written multiplicatively on roots
/// but additively on exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: i64,
    den: i64,
}

impl RootOfUnity {
    pub const ONE: RootOfUnity = RootOfUnity { num: 0, den: 1 };

    /// `num/den` reduced into `[0, 1)`.
    pub fn new(num: i64, den: i64) -> RootOfUnity {
        assert!(den != 0, "zero denominator");
        let den = den.abs();
        let mut n = num.rem_euclid(den);
        let g = gcd(n, den);
        let (mut n2, d2) = (n / g, den / g);
        if n2 == 0 {
            n = 0;
            return RootOfUnity { num: n, den: 1 };
        }
        if n2 < 0 {
            n2 += d2;
        }
        RootOfUnity { num: n2, den: d2 }
    }

    pub fn exponent(&self) -> Rat {
        Rat {
            num: self.num,
            den: self.den,
        }
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    /// Order of the root of unity.
    pub fn order(&self) -> i64 {
        self.den
    }

    pub fn is_one(&self) -> bool {
        self.num == 0
    }

    pub fn mul(&self, other: &RootOfUnity) -> RootOfUnity {
        let den = lcm(self.den, other.den);
        RootOfUnity::new(self.num * (den / self.den) + other.num * (den / other.den), den)
    }

    pub fn inv(&self) -> RootOfUnity {
        RootOfUnity::new(-self.num, self.den)
    }

    pub fn div(&self, other: &RootOfUnity) -> RootOfUnity {
        self.mul(&other.inv())
    }

    pub fn pow(&self, k: i64) -> RootOfUnity {
        let e = (self.num as i128 * k as i128).rem_euclid(self.den as i128);
        RootOfUnity::new(e as i64, self.den)
    }

    pub fn from_rat(q: &Rat) -> RootOfUnity {
        RootOfUnity::new(q.num(), q.den())
    }
}

impl fmt::Debug for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Precomputed data for the field Q(zeta_m): the cyclotomic polynomial and
/// a reduction table expressing zeta_m^k in the power basis 0..phi(m).
struct CycField {
    m: i64,
    phi: usize,
    /// `powers[k]`, for `k` in `0..m`, is zeta_m^k reduced mod Phi_m.
    powers: Vec<Vec<i64>>,
}

impl CycField {
    fn build(m: i64) -> CycField {
        assert!(m >= 1);
        let phi = euler_phi(m) as usize;
        let cyclo = cyclotomic_polynomial(m);
        assert_eq!(cyclo.len(), phi + 1);
        // powers[k] for k in 0..phi are basis vectors; above that reduce
        // iteratively using zeta^phi = -(lower coefficients of Phi_m).
        let mut powers: Vec<Vec<i64>> = Vec::with_capacity(m as usize);
        for k in 0..phi.min(m as usize) {
            let mut v = vec![0i64; phi];
            v[k] = 1;
            powers.push(v);
        }
        for k in phi..(m as usize).max(phi) {
            if k as i64 >= m {
                break;
            }
            // zeta^k = zeta * zeta^{k-1}
            let prev = powers[k - 1].clone();
            let mut v = vec![0i64; phi];
            for j in 0..phi - 1 {
                v[j + 1] = prev[j];
            }
            let top = prev[phi - 1];
            if top != 0 {
                // zeta^phi = -sum_{j<phi} cyclo[j] zeta^j
                for j in 0..phi {
                    v[j] -= top * cyclo[j];
                }
            }
            powers.push(v);
        }
        CycField { m, phi, powers }
    }
}

/// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
fn cyclotomic_polynomial(m: i64) -> Vec<i64> {
    // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
        let mut rem: Vec<i64> = num.to_vec();
        let dn = den.len() - 1;
        assert_eq!(den[dn], 1, "divisor must be monic");
        let qn = rem.len() - 1 - dn;
        let mut quot = vec![0i64; qn + 1];
        for i in (0..=qn).rev() {
            let c = rem[i + dn];
            quot[i] = c;
            if c != 0 {
                for j in 0..=dn {
                    rem[i + j] -= c * den[j];
                }
            }
        }
        assert!(rem.iter().all(|&c| c == 0), "non-exact polynomial division");
        quot
    }
    fn phi_poly(m: i64, cache: &mut HashMap<i64, Vec<i64>>) -> Vec<i64> {
        if let Some(p) = cache.get(&m) {
            return p.clone();
        }
        let mut num = vec![0i64; m as usize + 1];
        num[0] = -1;
        num[m as usize] = 1;
        let mut result = num;
        for d in 1..m {
            if m % d == 0 {
                let pd = phi_poly(d, cache);
                result = poly_div_exact(&result, &pd);
            }
        }
        cache.insert(m, result.clone());
        result
    }
    let mut cache = HashMap::new();
    phi_poly(m, &mut cache)
}

fn field(m: i64) -> Arc<CycField> {
    static CACHE: OnceLock<Mutex<HashMap<i64, Arc<CycField>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(m)
        .or_insert_with(|| Arc::new(CycField::build(m)))
        .clone()
}

/// An element of Q(zeta_m) in the canonical power basis modulo the m-th
/// cyclotomic polynomial. Equality of canonical forms is exact equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    m: i64,
    coeffs: Vec<Rat>,
}

impl Cyclotomic {
    pub fn zero(m: i64) -> Cyclotomic {
        let phi = euler_phi(m) as usize;
        Cyclotomic {
            m,
            coeffs: vec![Rat::ZERO; phi],
        }
    }

    pub fn one(m: i64) -> Cyclotomic {
        Cyclotomic::from_rat(m, &Rat::ONE)
    }

    pub fn from_rat(m: i64, q: &Rat) -> Cyclotomic {
        let mut c = Cyclotomic::zero(m);
        c.coeffs[0] = *q;
        c
    }

    pub fn from_int(m: i64, n: i64) -> Cyclotomic {
        Cyclotomic::from_rat(m, &Rat::from_int(n))
    }

    /// zeta_m^k.
    pub fn root_power(m: i64, k: i64) -> Cyclotomic {
        let f = field(m);
        let k = k.rem_euclid(m) as usize;
        let coeffs = f.powers[k].iter().map(|&c| Rat::from_int(c)).collect();
        Cyclotomic { m, coeffs }
    }

    /// Embed a root of unity; its order must divide `m`.
    pub fn from_root_of_unity(r: &RootOfUnity, m: i64) -> Cyclotomic {
        assert!(
            m % r.order() == 0,
            "order {} does not divide conductor {}",
            r.order(),
            m
        );
        Cyclotomic::root_power(m, r.numer() * (m / r.order()))
    }

    pub fn conductor(&self) -> i64 {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value if this element lies in Q, else None.
    pub fn as_rat(&self) -> Option<Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.m, other.m, "conductor mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.add(b))
            .collect();
        Cyclotomic { m: self.m, coeffs }
    }

    pub fn sub(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.m, other.m, "conductor mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.sub(b))
            .collect();
        Cyclotomic { m: self.m, coeffs }
    }

    pub fn scale(&self, q: &Rat) -> Cyclotomic {
        let coeffs = self.coeffs.iter().map(|a| a.mul(q)).collect();
        Cyclotomic { m: self.m, coeffs }
    }

    pub fn neg(&self) -> Cyclotomic {
        self.scale(&Rat::from_int(-1))
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.m, other.m, "conductor mismatch");
        let f = field(self.m);
        let phi = f.phi;
        let mut prod = vec![Rat::ZERO; 2 * phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                prod[i + j] = prod[i + j].add(&a.mul(b));
            }
        }
        let mut out = vec![Rat::ZERO; phi];
        for (k, c) in prod.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < phi {
                out[k] = out[k].add(&c);
            } else {
                // k < 2*phi <= ... fold via the power table (k < m always
                // holds when phi <= m, but k may exceed m-1 only if m = 1).
                let kk = (k as i64).rem_euclid(f.m.max(1)) as usize;
                for (j, &p) in f.powers[kk].iter().enumerate() {
                    if p != 0 {
                        out[j] = out[j].add(&c.mul(&Rat::from_int(p)));
                    }
                }
            }
        }
        Cyclotomic { m: self.m, coeffs: out }
    }

    /// Complex conjugation: zeta^k -> zeta^{m-k}.
    pub fn conj(&self) -> Cyclotomic {
        let f = field(self.m);
        let mut out = vec![Rat::ZERO; f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let kk = ((self.m - k as i64) % self.m) as usize;
            for (j, &p) in f.powers[kk].iter().enumerate() {
                if p != 0 {
                    out[j] = out[j].add(&c.mul(&Rat::from_int(p)));
                }
            }
        }
        Cyclotomic { m: self.m, coeffs: out }
    }

    /// Rewrite in a larger conductor `big` (requires `m | big`).
    pub fn to_conductor(&self, big: i64) -> Cyclotomic {
        assert!(big % self.m == 0, "conductor {} does not divide {}", self.m, big);
        if big == self.m {
            return self.clone();
        }
        let f = field(big);
        let step = big / self.m;
        let mut out = vec![Rat::ZERO; f.phi];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let kk = ((k as i64 * step) % big) as usize;
            for (j, &p) in f.powers[kk].iter().enumerate() {
                if p != 0 {
                    out[j] = out[j].add(&c.mul(&Rat::from_int(p)));
                }
            }
        }
        Cyclotomic { m: big, coeffs: out }
    }

    /// If this element equals `q * zeta_m^k` for the given rational `q != 0`
    /// and some `k`, return the root of unity `k/m`.
    pub fn as_scaled_root(&self, q: &Rat) -> Option<RootOfUnity> {
        assert!(!q.is_zero());
        for k in 0..self.m {
            let candidate = Cyclotomic::root_power(self.m, k).scale(q);
            if candidate == *self {
                return Some(RootOfUnity::new(k, self.m));
            }
        }
        None
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "{}*z^{}", c, k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " ({})", self.m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rou_group_laws() {
        let half = RootOfUnity::new(1, 2);
        assert!(half.mul(&half).is_one());
        assert_eq!(RootOfUnity::new(1, 3).inv(), RootOfUnity::new(2, 3));
        assert_eq!(RootOfUnity::new(1, 8).pow(3), RootOfUnity::new(3, 8));
        let r = RootOfUnity::new(5, 12);
        assert!(r.pow(r.order()).is_one());
    }

    #[test]
    fn cyclotomic_basics() {
        // zeta_2 + 1 = 0
        let z2 = Cyclotomic::root_power(2, 1);
        assert!(z2.add(&Cyclotomic::one(2)).is_zero());
        // zeta_3^3 = 1
        let z3 = Cyclotomic::root_power(3, 1);
        assert_eq!(z3.mul(&z3).mul(&z3), Cyclotomic::one(3));
        // conj(zeta_5) = zeta_5^4
        let z5 = Cyclotomic::root_power(5, 1);
        assert_eq!(z5.conj(), Cyclotomic::root_power(5, 4));
    }

    #[test]
    fn embedding_consistent() {
        // (0, m=4) -> 1; (1/4, m=4) -> zeta_4; (1/2, m=8) -> zeta_8^4
        assert_eq!(
            Cyclotomic::from_root_of_unity(&RootOfUnity::ONE, 4),
            Cyclotomic::one(4)
        );
        assert_eq!(
            Cyclotomic::from_root_of_unity(&RootOfUnity::new(1, 4), 4),
            Cyclotomic::root_power(4, 1)
        );
        assert_eq!(
            Cyclotomic::from_root_of_unity(&RootOfUnity::new(1, 2), 8),
            Cyclotomic::root_power(8, 4)
        );
    }

    #[test]
    fn unit_modulus() {
        // every root of unity r embeds to z with z * conj(z) = 1
        for den in 1..=12i64 {
            for num in 0..den {
                let r = RootOfUnity::new(num, den);
                let m = lcm(den, 12);
                let z = Cyclotomic::from_root_of_unity(&r, m);
                assert_eq!(z.mul(&z.conj()), Cyclotomic::one(m));
            }
        }
    }

    #[test]
    fn known_cyclotomic_polys() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn rebase_preserves_products() {
        let z3 = Cyclotomic::root_power(3, 1);
        let z12 = z3.to_conductor(12);
        assert_eq!(z12, Cyclotomic::root_power(12, 4));
        assert_eq!(
            z3.mul(&z3).to_conductor(12),
            z12.mul(&z12)
        );
    }

    proptest! {
        #[test]
        fn rou_mul_assoc(a in 0i64..60, b in 0i64..60, c in 0i64..60) {
            let x = RootOfUnity::new(a, 60);
            let y = RootOfUnity::new(b, 60);
            let z = RootOfUnity::new(c, 60);
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn cyc_mul_assoc(a in proptest::collection::vec(-4i64..5, 4),
                         b in proptest::collection::vec(-4i64..5, 4),
                         c in proptest::collection::vec(-4i64..5, 4)) {
            let mk = |v: &[i64]| {
                let mut x = Cyclotomic::zero(12);
                for (k, &n) in v.iter().enumerate() {
                    x = x.add(&Cyclotomic::root_power(12, k as i64).scale(&Rat::from_int(n)));
                }
                x
            };
            let (x, y, z) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert_eq!(x.mul(&y), y.mul(&x));
            prop_assert_eq!(x.mul(&y.add(&z)), x.mul(&y).add(&x.mul(&z)));
        }

        #[test]
        fn conj_is_involution(v in proptest::collection::vec(-9i64..10, 6)) {
            let mut x = Cyclotomic::zero(15);
            for (k, &n) in v.iter().enumerate() {
                x = x.add(&Cyclotomic::root_power(15, k as i64).scale(&Rat::from_int(n)));
            }
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}
