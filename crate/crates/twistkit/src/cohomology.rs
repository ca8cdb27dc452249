//! Cochains with values in Q/Z, coboundary operators, the derived cochains
//! beta_a, Upsilon_x and nu_x of a 3-cocycle, solvability of
//! `delta^2 mu = omega|_H`, the class set Omega_{H,omega}, and its G-action.
//!
//! All equations are solved as integer linear systems modulo M, where M is a
//! multiple of every value order that can occur in a solution.

use crate::groups::{abelian_structure, AbelianGroupData, FiniteGroup, Subgroup};
use crate::linalg::solve_mod;
use crate::scalars::{lcm, RootOfUnity};
use crate::Error;

/// A 1-cochain on a domain (a subgroup given by its sorted element list).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain1 {
    domain: Vec<usize>,
    values: Vec<RootOfUnity>,
}

/// A normalized 2-cochain on a domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    domain: Vec<usize>,
    values: Vec<RootOfUnity>,
}

/// A normalized 3-cochain on a domain; `is_cocycle` checks the pentagon
/// identity exhaustively.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain3 {
    domain: Vec<usize>,
    values: Vec<RootOfUnity>,
}

fn pos(domain: &[usize], g: usize) -> usize {
    domain.binary_search(&g).expect("element outside cochain domain")
}

impl Cochain1 {
    pub fn zero(domain: Vec<usize>) -> Cochain1 {
        let n = domain.len();
        Cochain1 {
            domain,
            values: vec![RootOfUnity::ONE; n],
        }
    }

    pub fn from_fn(domain: Vec<usize>, mut f: impl FnMut(usize) -> RootOfUnity) -> Cochain1 {
        let values = domain.iter().map(|&g| f(g)).collect();
        Cochain1 { domain, values }
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn value(&self, g: usize) -> RootOfUnity {
        self.values[pos(&self.domain, g)]
    }
}

impl Cochain2 {
    pub fn zero(domain: Vec<usize>) -> Cochain2 {
        let n = domain.len();
        Cochain2 {
            domain,
            values: vec![RootOfUnity::ONE; n * n],
        }
    }

    pub fn from_fn(domain: Vec<usize>, mut f: impl FnMut(usize, usize) -> RootOfUnity) -> Cochain2 {
        let mut values = Vec::with_capacity(domain.len() * domain.len());
        for &a in &domain {
            for &b in &domain {
                values.push(f(a, b));
            }
        }
        Cochain2 { domain, values }
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn value(&self, a: usize, b: usize) -> RootOfUnity {
        let n = self.domain.len();
        self.values[pos(&self.domain, a) * n + pos(&self.domain, b)]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn mul(&self, other: &Cochain2) -> Cochain2 {
        assert_eq!(self.domain, other.domain, "cochain domain mismatch");
        Cochain2 {
            domain: self.domain.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn div(&self, other: &Cochain2) -> Cochain2 {
        assert_eq!(self.domain, other.domain, "cochain domain mismatch");
        Cochain2 {
            domain: self.domain.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.div(b))
                .collect(),
        }
    }

    /// Restriction to a smaller domain.
    pub fn restrict(&self, domain: Vec<usize>) -> Cochain2 {
        Cochain2::from_fn(domain, |a, b| self.value(a, b))
    }

    /// Conjugated cochain `mu^x(h1, h2) = mu(x h1 x^{-1}, x h2 x^{-1})`.
    pub fn conjugate(&self, group: &FiniteGroup, x: usize) -> Cochain2 {
        Cochain2::from_fn(self.domain.clone(), |a, b| {
            self.value(group.conj(x, a), group.conj(x, b))
        })
    }

    /// lcm of the orders of all values.
    pub fn value_order(&self) -> i64 {
        self.values.iter().fold(1, |m, v| lcm(m, v.order()))
    }

    /// `alt` antisymmetrization: `(h1, h2) -> mu(h2, h1) - mu(h1, h2)`.
    pub fn alt_values(&self) -> Cochain2 {
        Cochain2::from_fn(self.domain.clone(), |a, b| {
            self.value(b, a).div(&self.value(a, b))
        })
    }
}

impl Cochain3 {
    pub fn zero(domain: Vec<usize>) -> Cochain3 {
        let n = domain.len();
        Cochain3 {
            domain,
            values: vec![RootOfUnity::ONE; n * n * n],
        }
    }

    pub fn trivial_on_group(group: &FiniteGroup) -> Cochain3 {
        Cochain3::zero((0..group.order()).collect())
    }

    pub fn from_fn(domain: Vec<usize>, mut f: impl FnMut(usize, usize, usize) -> RootOfUnity) -> Cochain3 {
        let mut values = Vec::with_capacity(domain.len().pow(3));
        for &a in &domain {
            for &b in &domain {
                for &c in &domain {
                    values.push(f(a, b, c));
                }
            }
        }
        Cochain3 { domain, values }
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn value(&self, a: usize, b: usize, c: usize) -> RootOfUnity {
        let n = self.domain.len();
        self.values[(pos(&self.domain, a) * n + pos(&self.domain, b)) * n + pos(&self.domain, c)]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    pub fn restrict(&self, domain: Vec<usize>) -> Cochain3 {
        Cochain3::from_fn(domain, |a, b, c| self.value(a, b, c))
    }

    pub fn value_order(&self) -> i64 {
        self.values.iter().fold(1, |m, v| lcm(m, v.order()))
    }

    /// Normalization `omega(g, 1, l) = 1` on the whole domain.
    pub fn is_normalized(&self) -> bool {
        self.domain.first() == Some(&0)
            && self
                .domain
                .iter()
                .all(|&g| self.domain.iter().all(|&l| self.value(g, 0, l).is_one()))
    }

    /// Pentagon identity (checked exhaustively) together with normalization.
    pub fn is_cocycle(&self, group: &FiniteGroup) -> bool {
        if !self.is_normalized() {
            return false;
        }
        for &g1 in &self.domain {
            for &g2 in &self.domain {
                let g12 = group.mul(g1, g2);
                for &g3 in &self.domain {
                    let g23 = group.mul(g2, g3);
                    for &g4 in &self.domain {
                        let g34 = group.mul(g3, g4);
                        let lhs = self
                            .value(g2, g3, g4)
                            .mul(&self.value(g1, g23, g4))
                            .mul(&self.value(g1, g2, g3));
                        let rhs = self.value(g12, g3, g4).mul(&self.value(g1, g2, g34));
                        if lhs != rhs {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Conjugated cocycle `omega^x`.
    pub fn conjugate(&self, group: &FiniteGroup, x: usize) -> Cochain3 {
        Cochain3::from_fn(self.domain.clone(), |a, b, c| {
            self.value(group.conj(x, a), group.conj(x, b), group.conj(x, c))
        })
    }

    pub fn div(&self, other: &Cochain3) -> Cochain3 {
        assert_eq!(self.domain, other.domain);
        Cochain3 {
            domain: self.domain.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.div(b))
                .collect(),
        }
    }
}

/// `delta^1 eta (h1, h2) = eta(h1) + eta(h2) - eta(h1 h2)` in exponent form.
pub fn coboundary1(group: &FiniteGroup, eta: &Cochain1) -> Cochain2 {
    Cochain2::from_fn(eta.domain.clone(), |a, b| {
        eta.value(a).mul(&eta.value(b)).div(&eta.value(group.mul(a, b)))
    })
}

/// `delta^2 mu (h1, h2, h3) = mu(h2,h3) - mu(h1 h2, h3) + mu(h1, h2 h3) - mu(h1, h2)`.
pub fn coboundary2(group: &FiniteGroup, mu: &Cochain2) -> Cochain3 {
    Cochain3::from_fn(mu.domain.clone(), |a, b, c| {
        mu.value(b, c)
            .div(&mu.value(group.mul(a, b), c))
            .mul(&mu.value(a, group.mul(b, c)))
            .div(&mu.value(a, b))
    })
}

/// The standard generator family of 3-cocycles on Z/nZ: class `k` has
/// `omega(a, b, c) = exp(2 pi i * k a (b + c - [(b+c) mod n]) / n^2)`.
/// `group` must be cyclic and generated by `generator`.
pub fn cyclic_cocycle_on(
    group: &FiniteGroup,
    generator: usize,
    k: i64,
) -> Result<Cochain3, Error> {
    let n = group.order();
    if group.elem_order(generator) != n {
        return Err(Error::invalid("generator does not generate the cyclic group"));
    }
    if k < 0 || k >= n as i64 {
        return Err(Error::invalid("cocycle class index out of range"));
    }
    // discrete log table
    let mut log = vec![0usize; n];
    let mut x = 0usize;
    for i in 0..n {
        log[x] = i;
        x = group.mul(x, generator);
    }
    let n_i = n as i64;
    Ok(Cochain3::from_fn((0..n).collect(), |ga, gb, gc| {
        let (a, b, c) = (log[ga] as i64, log[gb] as i64, log[gc] as i64);
        let carry = (b + c - (b + c).rem_euclid(n_i)) / n_i;
        RootOfUnity::new(k * a * carry, n_i)
    }))
}

/// Convenience form returning the cyclic group together with the cocycle.
pub fn cyclic_cocycle(n: usize, k: i64) -> Result<(FiniteGroup, Cochain3), Error> {
    let group = crate::groups::abelian(&[n as i64])?;
    let generator = if n == 1 { 0 } else { 1 };
    let omega = cyclic_cocycle_on(&group, generator, k)?;
    Ok((group, omega))
}

/// Pullback along a surjective homomorphism `proj: G -> Q`.
pub fn inflate(
    omega0: &Cochain3,
    group: &FiniteGroup,
    quotient: &FiniteGroup,
    proj: &[usize],
) -> Result<Cochain3, Error> {
    if proj.len() != group.order() {
        return Err(Error::invalid("projection map has wrong length"));
    }
    for a in 0..group.order() {
        for b in 0..group.order() {
            if proj[group.mul(a, b)] != quotient.mul(proj[a], proj[b]) {
                return Err(Error::invalid("projection is not a homomorphism"));
            }
        }
    }
    Ok(Cochain3::from_fn((0..group.order()).collect(), |a, b, c| {
        omega0.value(proj[a], proj[b], proj[c])
    }))
}

/// Shift an arbitrary 3-cocycle by an explicit coboundary so that
/// `omega(g, 1, l) = 1` holds. Returns the normalized cocycle and the
/// 2-cochain shift that was applied.
pub fn normalize_3cocycle(group: &FiniteGroup, omega: &Cochain3) -> (Cochain3, Cochain2) {
    // b(1, l) = omega(1, 1, l), b(g, 1) = -omega(g, 1, 1), else 0; then
    // (omega - delta^2 b)(g, 1, l) = 0 by the cocycle identity.
    let shift = Cochain2::from_fn((0..group.order()).collect(), |g, l| {
        if g == 0 {
            omega.value(0, 0, l)
        } else if l == 0 {
            omega.value(g, 0, 0).inv()
        } else {
            RootOfUnity::ONE
        }
    });
    let delta = coboundary2(group, &shift);
    (omega.div(&delta), shift)
}

/// `beta_a(h, g) = omega(a,h,g) - omega(h, h^{-1}ah, g) + omega(h, g, (hg)^{-1}a(hg))`.
/// Its restriction to the centralizer C_G(a) is a normalized 2-cocycle.
pub fn beta(group: &FiniteGroup, omega: &Cochain3, a: usize) -> Cochain2 {
    Cochain2::from_fn((0..group.order()).collect(), |h, g| {
        let hinv_a_h = group.conj(group.inv(h), a);
        let hg = group.mul(h, g);
        let hginv_a_hg = group.conj(group.inv(hg), a);
        omega
            .value(a, h, g)
            .div(&omega.value(h, hinv_a_h, g))
            .mul(&omega.value(h, g, hginv_a_hg))
    })
}

/// `Upsilon_x(g1, g2) = omega(xg1x^{-1}, xg2x^{-1}, x) + omega(x, g1, g2)
///                      - omega(xg1x^{-1}, x, g2)`, with
/// `delta^2 Upsilon_x = omega / omega^x`.
pub fn upsilon(group: &FiniteGroup, omega: &Cochain3, x: usize) -> Cochain2 {
    Cochain2::from_fn((0..group.order()).collect(), |g1, g2| {
        let c1 = group.conj(x, g1);
        let c2 = group.conj(x, g2);
        omega
            .value(c1, c2, x)
            .mul(&omega.value(x, g1, g2))
            .div(&omega.value(c1, x, g2))
    })
}

/// `nu_x(g1, g2) = omega(g1, g2, x) + omega(g1g2 x g2^{-1} g1^{-1}, g1, g2)
///                 - omega(g1, g2 x g2^{-1}, g2)`.
pub fn nu_x(group: &FiniteGroup, omega: &Cochain3, x: usize) -> Cochain2 {
    Cochain2::from_fn((0..group.order()).collect(), |g1, g2| {
        let g2x = group.conj(g2, x);
        let g12x = group.conj(group.mul(g1, g2), x);
        omega
            .value(g1, g2, x)
            .mul(&omega.value(g12x, g1, g2))
            .div(&omega.value(g1, g2x, g2))
    })
}

/// A representative `mu` with `delta^2 mu = omega|_H`, labelling an element
/// of Omega_{H, omega}.
#[derive(Clone, Debug)]
pub struct OmegaClass {
    pub subgroup: Subgroup,
    pub mu: Cochain2,
}

fn solve_modulus(group: &FiniteGroup, h: &Subgroup, value_order: i64) -> i64 {
    let exp_h = h
        .elements()
        .iter()
        .fold(1i64, |m, &x| lcm(m, group.elem_order(x) as i64));
    if h.is_abelian(group) {
        lcm(value_order, 1).checked_mul(exp_h).expect("modulus overflow")
    } else {
        value_order
            .checked_mul((h.len() * h.len()) as i64)
            .expect("modulus overflow")
    }
}

/// Solve `delta^2 mu = omega|_H` exactly. Returns a normalized solution or
/// None with the meaning "certified cohomologically non-trivial": the linear
/// system over Z/M (M a multiple of every solvable case's value orders) is
/// infeasible.
pub fn solve_mu(group: &FiniteGroup, omega: &Cochain3, h: &Subgroup) -> Option<OmegaClass> {
    let elems = h.elements().to_vec();
    let k = elems.len();
    let omega_h = omega.restrict(elems.clone());
    if omega_h.is_trivial() {
        return Some(OmegaClass {
            subgroup: h.clone(),
            mu: Cochain2::zero(elems),
        });
    }
    let m0 = omega_h.value_order();
    let modulus = solve_modulus(group, h, m0);
    // unknowns: mu(h1, h2) as integers mod modulus; equations per triple
    let var = |i: usize, j: usize| i * k + j;
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(k * k * k);
    let mut rhs: Vec<i64> = Vec::with_capacity(k * k * k);
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            let ab = pos(&elems, group.mul(a, b));
            for (l, &c) in elems.iter().enumerate() {
                let bc = pos(&elems, group.mul(b, c));
                let mut row = vec![0i64; k * k];
                row[var(j, l)] += 1;
                row[var(ab, l)] -= 1;
                row[var(i, bc)] += 1;
                row[var(i, j)] -= 1;
                let w = omega_h.value(a, b, c);
                rows.push(row);
                rhs.push(w.numer() * (modulus / w.order()));
            }
        }
    }
    let solution = solve_mod(&rows, &rhs, modulus)?;
    let mu = Cochain2::from_fn(elems.clone(), |a, b| {
        RootOfUnity::new(solution[var(pos(&elems, a), pos(&elems, b))], modulus)
    });
    // normalize: borders are constant mu(1,1); subtracting a constant keeps
    // the coboundary
    let c = mu.value(0, 0);
    let mu = Cochain2::from_fn(elems, |a, b| mu.value(a, b).div(&c));
    debug_assert!(coboundary2(group, &mu) == omega.restrict(h.elements().to_vec()));
    Some(OmegaClass {
        subgroup: h.clone(),
        mu,
    })
}

/// The bilinear "upper triangular" 2-cocycle on an abelian subgroup whose
/// antisymmetrization equals the alternating form given by the values
/// `b[(i, j)]` on generator pairs i < j.
pub fn bilinear_lift(data: &AbelianGroupData, b_vals: &[RootOfUnity]) -> Cochain2 {
    let r = data.factors.len();
    let pair_index = |i: usize, j: usize| -> usize {
        // i < j
        let mut idx = 0;
        for a in 0..r {
            for b in a + 1..r {
                if (a, b) == (i, j) {
                    return idx;
                }
                idx += 1;
            }
        }
        unreachable!()
    };
    Cochain2::from_fn(data.elements.clone(), |x, y| {
        let cx = data.coords_of(x);
        let cy = data.coords_of(y);
        let mut acc = RootOfUnity::ONE;
        for i in 0..r {
            for j in i + 1..r {
                let b = b_vals[pair_index(i, j)];
                // contribution b^{x_j * y_i}
                acc = acc.mul(&b.pow(cx[j] * cy[i]));
            }
        }
        acc
    })
}

/// Representatives of H^2(H, k^x) as bilinear lifts of all alternating forms,
/// enumerated in a fixed order (mixed radix over generator pairs i < j with
/// moduli gcd(d_i, d_j)).
pub fn schur_multiplier_representatives(
    group: &FiniteGroup,
    h: &Subgroup,
) -> Result<Vec<Cochain2>, Error> {
    let data = abelian_structure(group, h)?;
    let r = data.factors.len();
    let mut moduli = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            moduli.push(crate::scalars::gcd(data.factors[i], data.factors[j]));
        }
    }
    let mut out = Vec::new();
    let mut tuple = vec![0i64; moduli.len()];
    loop {
        let b_vals: Vec<RootOfUnity> = tuple
            .iter()
            .zip(&moduli)
            .map(|(&t, &m)| RootOfUnity::new(t, m))
            .collect();
        out.push(bilinear_lift(&data, &b_vals));
        let mut i = 0;
        loop {
            if i == moduli.len() {
                break;
            }
            tuple[i] += 1;
            if tuple[i] < moduli[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == moduli.len() {
            break;
        }
    }
    Ok(out)
}

/// All of Omega_{H, omega} as `mu0 * z` with `z` ranging over Schur
/// multiplier representatives; the torsor structure over H^2(H, k^x) is
/// realized by this parameterization.
pub fn omega_set(
    group: &FiniteGroup,
    mu0: &OmegaClass,
) -> Result<Vec<OmegaClass>, Error> {
    let reps = schur_multiplier_representatives(group, &mu0.subgroup)?;
    Ok(reps
        .into_iter()
        .map(|z| OmegaClass {
            subgroup: mu0.subgroup.clone(),
            mu: mu0.mu.mul(&z),
        })
        .collect())
}

/// `mu <| x = mu^x * Upsilon_x|_{H x H}`.
pub fn mu_action(
    group: &FiniteGroup,
    omega: &Cochain3,
    mu: &OmegaClass,
    x: usize,
) -> Result<OmegaClass, Error> {
    if !mu.subgroup.is_normal(group) {
        return Err(Error::invalid("mu action requires a normal subgroup"));
    }
    let ups = upsilon(group, omega, x);
    let conj = mu.mu.conjugate(group, x);
    let restricted = ups.restrict(mu.subgroup.elements().to_vec());
    Ok(OmegaClass {
        subgroup: mu.subgroup.clone(),
        mu: conj.mul(&restricted),
    })
}

/// Solve `delta^1 eta = c` on the domain of `c`; `c` must be a symmetric-class
/// 2-cocycle for a solution to exist. None certifies infeasibility.
pub fn solve_eta(group: &FiniteGroup, h: &Subgroup, c: &Cochain2) -> Option<Cochain1> {
    let elems = h.elements().to_vec();
    let k = elems.len();
    if c.is_trivial() {
        return Some(Cochain1::zero(elems));
    }
    let m0 = c.value_order();
    let modulus = solve_modulus(group, h, m0);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(k * k);
    let mut rhs: Vec<i64> = Vec::with_capacity(k * k);
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            let ab = pos(&elems, group.mul(a, b));
            let mut row = vec![0i64; k];
            row[i] += 1;
            row[j] += 1;
            row[ab] -= 1;
            let w = c.value(a, b);
            rows.push(row);
            rhs.push(w.numer() * (modulus / w.order()));
        }
    }
    let solution = solve_mod(&rows, &rhs, modulus)?;
    let eta = Cochain1::from_fn(elems, |a| {
        RootOfUnity::new(solution[pos(h.elements(), a)], modulus)
    });
    debug_assert!(coboundary1(group, &eta) == *c);
    Some(eta)
}

/// A G-invariant class together with coboundary witnesses `eta_x` (one per
/// generator `x` of G) for `(mu <| x) / mu = delta^1 eta_x`.
#[derive(Clone, Debug)]
pub struct InvariantClass {
    pub class: OmegaClass,
    /// (generator element, witness)
    pub witnesses: Vec<(usize, Cochain1)>,
}

/// Filter the classes fixed by the G-action, checked on a generating set of
/// G; returns the witnesses used downstream for dual group construction.
pub fn invariant_classes(
    group: &FiniteGroup,
    omega: &Cochain3,
    classes: &[OmegaClass],
) -> Result<Vec<InvariantClass>, Error> {
    let gens = group.generating_set();
    let mut out = Vec::new();
    'classes: for class in classes {
        let mut witnesses = Vec::new();
        for &x in &gens {
            let moved = mu_action(group, omega, class, x)?;
            let diff = moved.mu.div(&class.mu);
            // on abelian H the class is trivial iff its antisymmetrization is
            if !diff.alt_values().is_trivial() {
                continue 'classes;
            }
            let Some(eta) = solve_eta(group, &class.subgroup, &diff) else {
                continue 'classes;
            };
            witnesses.push((x, eta));
        }
        out.push(InvariantClass {
            class: class.clone(),
            witnesses,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dihedral, quotient_group, GroupSpec};

    fn d8_inflated() -> (FiniteGroup, Cochain3) {
        let g = dihedral(4).unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let kernel = g.closure(&[r2, s]);
        let q = quotient_group(&g, &kernel).unwrap();
        let omega0 = cyclic_cocycle_on(&q.group, 1, 1).unwrap();
        let omega = inflate(&omega0, &g, &q.group, &q.proj).unwrap();
        (g, omega)
    }

    #[test]
    fn coboundary_of_zero_and_ddzero() {
        let g = dihedral(4).unwrap();
        let domain: Vec<usize> = (0..g.order()).collect();
        let zero2 = Cochain2::zero(domain.clone());
        assert!(coboundary2(&g, &zero2).is_trivial());
        // delta1 of a homomorphism is trivial: use a character of <r>
        let r = g.elem_by_name("r").unwrap();
        let h = g.closure(&[r]);
        let hom = Cochain1::from_fn(h.elements().to_vec(), |a| {
            // a = r^k -> k/4
            let mut k = 0;
            let mut x = 0;
            while x != a {
                x = g.mul(x, r);
                k += 1;
            }
            RootOfUnity::new(k, 4)
        });
        assert!(coboundary1(&g, &hom).is_trivial());
        // delta2(delta1(eta)) = 0 for arbitrary eta
        let eta = Cochain1::from_fn(domain, |a| RootOfUnity::new(a as i64, 8));
        assert!(coboundary2(&g, &coboundary1(&g, &eta)).is_trivial());
    }

    #[test]
    fn cyclic_cocycles_are_cocycles() {
        for (n, k) in [(2, 0), (2, 1), (3, 1), (4, 1), (4, 3), (6, 5)] {
            let (g, omega) = cyclic_cocycle(n, k).unwrap();
            assert!(omega.is_cocycle(&g), "n={} k={}", n, k);
        }
        let (_, omega) = cyclic_cocycle(2, 1).unwrap();
        assert_eq!(omega.value(1, 1, 1), RootOfUnity::new(1, 2));
    }

    #[test]
    fn perturbed_cocycle_fails() {
        let (g, omega) = cyclic_cocycle(3, 1).unwrap();
        let bad = Cochain3::from_fn(omega.domain().to_vec(), |a, b, c| {
            if (a, b, c) == (1, 2, 1) {
                omega.value(a, b, c).mul(&RootOfUnity::new(1, 3))
            } else {
                omega.value(a, b, c)
            }
        });
        assert!(!bad.is_cocycle(&g));
    }

    #[test]
    fn inflated_d8_cocycle() {
        let (g, omega) = d8_inflated();
        assert!(omega.is_cocycle(&g));
        // omega is trivial on the kernel <r2, s>
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let kernel = g.closure(&[r2, s]);
        assert!(omega.restrict(kernel.elements().to_vec()).is_trivial());
    }

    #[test]
    fn beta_relation_holds() {
        let (g, omega) = d8_inflated();
        for a in 0..g.order() {
            let beta_a = beta(&g, &omega, a);
            for x in 0..g.order() {
                let beta_xax = beta(&g, &omega, g.conj(g.inv(x), a));
                for y in 0..g.order() {
                    for z in 0..g.order() {
                        let lhs = beta_a.value(x, y).mul(&beta_a.value(g.mul(x, y), z));
                        let rhs = beta_a.value(x, g.mul(y, z)).mul(&beta_xax.value(y, z));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn upsilon_coboundary_identity() {
        let (g, omega) = d8_inflated();
        for x in 0..g.order() {
            let ups = upsilon(&g, &omega, x);
            let lhs = coboundary2(&g, &ups);
            let rhs = omega.div(&omega.conjugate(&g, x));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn nu_upsilon_identity() {
        let (g, omega) = d8_inflated();
        for x1 in 0..g.order() {
            for x2 in 0..g.order() {
                let ups12 = upsilon(&g, &omega, g.mul(x1, x2));
                let ups1 = upsilon(&g, &omega, x1);
                let ups2 = upsilon(&g, &omega, x2);
                let nu1 = nu_x(&g, &omega, x1);
                for g1 in 0..g.order() {
                    for g2 in 0..g.order() {
                        let lhs = ups12
                            .value(g1, g2)
                            .div(&ups1.value(g.conj(x2, g1), g.conj(x2, g2)))
                            .div(&ups2.value(g1, g2));
                        let _ = &nu1;
                        let nu = |e: usize| nu_x(&g, &omega, e);
                        // right side uses nu_{g}(x1, x2) with g the grading
                        let rhs = nu(g1)
                            .value(x1, x2)
                            .mul(&nu(g2).value(x1, x2))
                            .div(&nu(g.mul(g1, g2)).value(x1, x2));
                        assert_eq!(lhs, rhs, "x1={} x2={} g1={} g2={}", x1, x2, g1, g2);
                    }
                }
            }
        }
    }

    #[test]
    fn solve_mu_d8_cases() {
        let (g, omega) = d8_inflated();
        // <r> ~ Z4 maps onto the quotient Z2 with kernel <r2>, so the
        // restriction is inflated along Z4 ->> Z2 and that kills the class
        // (inf c^2 = (2c)^2 = 0 in H^4(Z4; Z)). An explicit primitive is
        // mu(r^a, r^b) = (1/2) * floor(a/2) * (b mod 2); freeze it as an
        // independent oracle for the solver's answer.
        let r = g.elem_by_name("r").unwrap();
        let hr = g.closure(&[r]);
        let log_r = |x: usize| -> i64 {
            let mut k = 0;
            let mut y = 0;
            while y != x {
                y = g.mul(y, r);
                k += 1;
            }
            k
        };
        let hand_mu = Cochain2::from_fn(hr.elements().to_vec(), |a, b| {
            RootOfUnity::new((log_r(a) / 2) * (log_r(b) % 2), 2)
        });
        assert_eq!(
            coboundary2(&g, &hand_mu),
            omega.restrict(hr.elements().to_vec())
        );
        let solved = solve_mu(&g, &omega, &hr).expect("restriction to <r> is a coboundary");
        assert_eq!(
            coboundary2(&g, &solved.mu),
            omega.restrict(hr.elements().to_vec())
        );
        // <sr> ~ Z2 maps isomorphically onto the quotient, so the restriction
        // is the non-trivial Z2 class: certified infeasible
        let sr = g.elem_by_name("sr").unwrap();
        let hsr = g.closure(&[sr]);
        assert!(solve_mu(&g, &omega, &hsr).is_none());
        // likewise for the four-element subgroup <r2, sr> containing sr
        let r2 = g.elem_by_name("r2").unwrap();
        let hk2 = g.closure(&[r2, sr]);
        assert!(solve_mu(&g, &omega, &hk2).is_none());
        // <r2, s> carries omega = 1, so mu = 0 works
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let hk = g.closure(&[r2, s]);
        let mu = solve_mu(&g, &omega, &hk).expect("restriction is trivial");
        assert!(mu.mu.is_trivial());
        // trivial omega solves everywhere
        let trivial = Cochain3::trivial_on_group(&g);
        for sub in crate::groups::normal_abelian_subgroups(&g) {
            assert!(solve_mu(&g, &trivial, &sub).is_some());
        }
    }

    #[test]
    fn solver_completeness_on_random_coboundaries() {
        use rand::prelude::*;
        let g = GroupSpec::Symmetric(3).build().unwrap();
        let h = g.full_subgroup();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let mu = Cochain2::from_fn((0..6).collect(), |a, b| {
                if a == 0 || b == 0 {
                    RootOfUnity::ONE
                } else {
                    RootOfUnity::new(rng.gen_range(0..12), 12)
                }
            });
            let omega = coboundary2(&g, &mu);
            let solved = solve_mu(&g, &omega, &h).expect("coboundary must be solvable");
            assert_eq!(coboundary2(&g, &solved.mu), omega);
        }
    }

    #[test]
    fn omega_set_sizes() {
        let g = dihedral(4).unwrap();
        let trivial = Cochain3::trivial_on_group(&g);
        // cyclic <r>: singleton
        let r = g.elem_by_name("r").unwrap();
        let hr = g.closure(&[r]);
        let mu0 = solve_mu(&g, &trivial, &hr).unwrap();
        assert_eq!(omega_set(&g, &mu0).unwrap().len(), 1);
        // Z2 x Z2 = <r2, s>: two classes
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let hk = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &trivial, &hk).unwrap();
        let set = omega_set(&g, &mu0).unwrap();
        assert_eq!(set.len(), 2);
        // the two classes have distinct alternating forms
        assert_ne!(set[0].mu.alt_values(), set[1].mu.alt_values());
        // trivial subgroup: singleton
        let ht = g.trivial_subgroup();
        let mu0 = solve_mu(&g, &trivial, &ht).unwrap();
        assert_eq!(omega_set(&g, &mu0).unwrap().len(), 1);
    }

    #[test]
    fn mu_action_identity_and_inner() {
        let g = dihedral(4).unwrap();
        let trivial = Cochain3::trivial_on_group(&g);
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let hk = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &trivial, &hk).unwrap();
        let classes = omega_set(&g, &mu0).unwrap();
        for class in &classes {
            // x = identity fixes representatives exactly
            let moved = mu_action(&g, &trivial, class, 0).unwrap();
            assert_eq!(moved.mu, class.mu);
            // x in H acts trivially up to coboundary (here exactly: conjugation
            // is trivial on an abelian subgroup under its own elements)
            for &x in class.subgroup.elements() {
                let moved = mu_action(&g, &trivial, class, x).unwrap();
                let diff = moved.mu.div(&class.mu);
                assert!(diff.alt_values().is_trivial());
                assert!(solve_eta(&g, &class.subgroup, &diff).is_some());
            }
        }
    }

    #[test]
    fn invariant_classes_counts() {
        // D8 inflated omega, H = <r2, s>: both classes invariant
        let (g, omega) = d8_inflated();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let hk = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &omega, &hk).unwrap();
        let classes = omega_set(&g, &mu0).unwrap();
        let invariant = invariant_classes(&g, &omega, &classes).unwrap();
        assert_eq!(invariant.len(), 2);
        // A4, H = V4, trivial omega: both classes invariant
        let a4 = GroupSpec::Alternating(4).build().unwrap();
        let nab = crate::groups::normal_abelian_subgroups(&a4);
        let v4 = nab.iter().find(|h| h.len() == 4).unwrap();
        let trivial = Cochain3::trivial_on_group(&a4);
        let mu0 = solve_mu(&a4, &trivial, v4).unwrap();
        let classes = omega_set(&a4, &mu0).unwrap();
        assert_eq!(classes.len(), 2);
        let invariant = invariant_classes(&a4, &trivial, &classes).unwrap();
        assert_eq!(invariant.len(), 2);
    }

    #[test]
    fn normalization_shift() {
        // build a non-normalized cocycle by shifting a cyclic one with a
        // random coboundary, then re-normalize
        let (g, omega) = cyclic_cocycle(4, 1).unwrap();
        let mu = Cochain2::from_fn((0..4).collect(), |a, b| RootOfUnity::new((a * b) as i64, 8));
        let shifted = omega.div(&coboundary2(&g, &mu));
        let (renorm, _) = normalize_3cocycle(&g, &shifted);
        assert!(renorm.is_cocycle(&g));
    }
}
