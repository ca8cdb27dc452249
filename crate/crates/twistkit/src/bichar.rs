//! Alternating bicharacters on abelian subgroups, their omega-twisted
//! variant, the maps `alt` and `alt'`, and G-invariance tests.

use crate::cohomology::{beta, coboundary1, Cochain1, Cochain2, Cochain3, OmegaClass};
use crate::groups::{abelian_structure, conjugacy_classes, FiniteGroup, Subgroup};
use crate::scalars::{gcd, RootOfUnity};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Plain,
    Omega,
}

/// A map H x H -> Q/Z stored pointwise. Plain flavor: a genuine alternating
/// bicharacter. Omega flavor: an alternating omega-bicharacter, i.e. the
/// conditions B(h1,h2) = -B(h2,h1), B(h,h) = 0, delta^1 B_h = beta_h|_{HxH}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    subgroup: Subgroup,
    values: Vec<RootOfUnity>,
    flavor: Flavor,
}

impl Bicharacter {
    pub fn from_fn(
        subgroup: Subgroup,
        flavor: Flavor,
        mut f: impl FnMut(usize, usize) -> RootOfUnity,
    ) -> Bicharacter {
        let elems = subgroup.elements().to_vec();
        let mut values = Vec::with_capacity(elems.len() * elems.len());
        for &a in &elems {
            for &b in &elems {
                values.push(f(a, b));
            }
        }
        Bicharacter {
            subgroup,
            values,
            flavor,
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn value(&self, a: usize, b: usize) -> RootOfUnity {
        let n = self.subgroup.len();
        let i = self.subgroup.index_of(a).expect("element outside H");
        let j = self.subgroup.index_of(b).expect("element outside H");
        self.values[i * n + j]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_one())
    }

    /// Pointwise canonical key for deterministic ordering.
    pub fn sort_key(&self) -> Vec<(i64, i64)> {
        self.values.iter().map(|v| (v.order(), v.numer())).collect()
    }

    /// Row map h1 -> B(h, h1) as a 1-cochain on H.
    pub fn row(&self, h: usize) -> Cochain1 {
        Cochain1::from_fn(self.subgroup.elements().to_vec(), |h1| self.value(h, h1))
    }

    /// Plain-flavor validity: bicharacter in each slot and B(h, h) = 1.
    pub fn is_plain_valid(&self, group: &FiniteGroup) -> bool {
        let h = self.subgroup.elements();
        for &a in h {
            if !self.value(a, a).is_one() {
                return false;
            }
            for &b in h {
                for &c in h {
                    if self.value(group.mul(a, b), c) != self.value(a, c).mul(&self.value(b, c)) {
                        return false;
                    }
                    if self.value(c, group.mul(a, b)) != self.value(c, a).mul(&self.value(c, b)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Omega-flavor validity: antisymmetry, vanishing diagonal, and
    /// `delta^1 B_h = beta_h|_{H x H}` for every h in H.
    pub fn is_omega_valid(&self, group: &FiniteGroup, omega: &Cochain3) -> bool {
        let h = self.subgroup.elements();
        for &a in h {
            if !self.value(a, a).is_one() {
                return false;
            }
            for &b in h {
                if self.value(a, b) != self.value(b, a).inv() {
                    return false;
                }
            }
        }
        for &x in h {
            let beta_x = beta(group, omega, x).restrict(h.to_vec());
            if coboundary1(group, &self.row(x)) != beta_x {
                return false;
            }
        }
        true
    }
}

/// `alt(mu)(h1, h2) = mu(h2, h1) / mu(h1, h2)` for a 2-cocycle on an abelian
/// subgroup; descends to the isomorphism H^2(H, k^x) ~ Lambda^2 H.
pub fn alt(group: &FiniteGroup, h: &Subgroup, mu: &Cochain2) -> Result<Bicharacter, Error> {
    if !h.is_abelian(group) {
        return Err(Error::invalid("alt requires an abelian subgroup"));
    }
    let b = Bicharacter::from_fn(h.clone(), Flavor::Plain, |a, c| {
        mu.value(c, a).div(&mu.value(a, c))
    });
    debug_assert!(b.is_plain_valid(group));
    Ok(b)
}

/// `alt'` of a class of Omega_{H, omega}: same pointwise formula as `alt`,
/// landing in the alternating omega-bicharacters. The conditions are
/// verified exactly at construction.
pub fn alt_prime(
    group: &FiniteGroup,
    omega: &Cochain3,
    class: &OmegaClass,
) -> Result<Bicharacter, Error> {
    let b = Bicharacter::from_fn(class.subgroup.clone(), Flavor::Omega, |a, c| {
        class.mu.value(c, a).div(&class.mu.value(a, c))
    });
    if !b.is_omega_valid(group, omega) {
        return Err(Error::internal(
            "alt' produced an invalid omega-bicharacter (delta^2 mu != omega|_H?)",
        ));
    }
    Ok(b)
}

/// All of Lambda^2 H for abelian H, enumerated through the invariant factor
/// decomposition: a form is determined by its values on generator pairs
/// (i < j), each of order dividing gcd(n_i, n_j).
pub fn enumerate_alternating(group: &FiniteGroup, h: &Subgroup) -> Result<Vec<Bicharacter>, Error> {
    let data = abelian_structure(group, h)?;
    let r = data.factors.len();
    let mut moduli = Vec::new();
    for i in 0..r {
        for j in i + 1..r {
            moduli.push(gcd(data.factors[i], data.factors[j]));
        }
    }
    let mut out = Vec::new();
    let mut tuple = vec![0i64; moduli.len()];
    loop {
        // B(x, y) = prod over i<j of b_ij^{x_i y_j - x_j y_i}
        let b_vals: Vec<RootOfUnity> = tuple
            .iter()
            .zip(&moduli)
            .map(|(&t, &m)| RootOfUnity::new(t, m))
            .collect();
        let b = Bicharacter::from_fn(h.clone(), Flavor::Plain, |x, y| {
            let cx = data.coords_of(x);
            let cy = data.coords_of(y);
            let mut acc = RootOfUnity::ONE;
            let mut idx = 0;
            for i in 0..r {
                for j in i + 1..r {
                    acc = acc.mul(&b_vals[idx].pow(cx[i] * cy[j] - cx[j] * cy[i]));
                    idx += 1;
                }
            }
            acc
        });
        debug_assert!(b.is_plain_valid(group));
        out.push(b);
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

/// The image of Omega_{H, omega} under `alt'`; its size equals |Lambda^2 H|.
pub fn enumerate_omega_bicharacters(
    group: &FiniteGroup,
    omega: &Cochain3,
    mu0: &OmegaClass,
) -> Result<Vec<Bicharacter>, Error> {
    let classes = crate::cohomology::omega_set(group, mu0)?;
    classes
        .iter()
        .map(|c| alt_prime(group, omega, c))
        .collect()
}

/// G-invariance. Plain flavor: `B(gxg^{-1}, gyg^{-1}) = B(x, y)` for all g.
/// Omega flavor: the twisted condition
/// `B(x^{-1}ax, h) = (beta_a(x,h) beta_a(xh,x^{-1}) / beta_a(x,x^{-1})) B(a, xhx^{-1})`
/// for all x in G, a in H meeting the canonical class representatives, h in H.
pub fn is_g_invariant(
    group: &FiniteGroup,
    omega: &Cochain3,
    b: &Bicharacter,
) -> Result<bool, Error> {
    let h = b.subgroup();
    if !h.is_normal(group) {
        return Err(Error::invalid("G-invariance requires a normal subgroup"));
    }
    match b.flavor() {
        Flavor::Plain => {
            for g in 0..group.order() {
                for &x in h.elements() {
                    for &y in h.elements() {
                        if b.value(group.conj(g, x), group.conj(g, y)) != b.value(x, y) {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
        Flavor::Omega => {
            let cc = conjugacy_classes(group);
            let reps_in_h: Vec<usize> = cc
                .reps
                .iter()
                .copied()
                .filter(|&a| h.contains(a))
                .collect();
            for &a in &reps_in_h {
                let beta_a = beta(group, omega, a);
                for x in 0..group.order() {
                    let xinv = group.inv(x);
                    let xax = group.conj(xinv, a);
                    for &hh in h.elements() {
                        let lhs = b.value(xax, hh);
                        let ratio = beta_a
                            .value(x, hh)
                            .mul(&beta_a.value(group.mul(x, hh), xinv))
                            .div(&beta_a.value(x, xinv));
                        let rhs = ratio.mul(&b.value(a, group.conj(x, hh)));
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
            Ok(true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{
        cyclic_cocycle_on, inflate, omega_set, schur_multiplier_representatives, solve_mu, upsilon,
        Cochain3 as C3,
    };
    use crate::groups::{dihedral, normal_abelian_subgroups, quotient_group, GroupSpec};

    fn d8_inflated() -> (FiniteGroup, C3) {
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
    fn alt_of_symmetric_is_trivial() {
        let g = dihedral(4).unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let mu = crate::cohomology::Cochain2::from_fn(h.elements().to_vec(), |a, b| {
            // symmetric in (a, b)
            RootOfUnity::new((a * b) as i64, 4)
        });
        let b = alt(&g, &h, &mu).unwrap();
        assert!(b.is_trivial());
    }

    #[test]
    fn schur_reps_hit_all_alternating_forms() {
        let g = dihedral(4).unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let reps = schur_multiplier_representatives(&g, &h).unwrap();
        let forms = enumerate_alternating(&g, &h).unwrap();
        assert_eq!(reps.len(), 2);
        assert_eq!(forms.len(), 2);
        let images: Vec<Bicharacter> = reps.iter().map(|m| alt(&g, &h, m).unwrap()).collect();
        for form in &forms {
            assert!(images.iter().any(|b| b.values == form.values));
        }
        // the non-trivial one really is non-trivial
        assert!(forms.iter().any(|b| !b.is_trivial()));
    }

    #[test]
    fn alternating_counts() {
        let g = GroupSpec::Abelian(vec![2, 2, 2]).build().unwrap();
        let h = g.full_subgroup();
        assert_eq!(enumerate_alternating(&g, &h).unwrap().len(), 8);
        let z8 = GroupSpec::Abelian(vec![8]).build().unwrap();
        assert_eq!(
            enumerate_alternating(&z8, &z8.full_subgroup()).unwrap().len(),
            1
        );
    }

    #[test]
    fn alt_is_g_linear() {
        let g = dihedral(4).unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        for mu in schur_multiplier_representatives(&g, &h).unwrap() {
            let b = alt(&g, &h, &mu).unwrap();
            for x in 0..g.order() {
                let mu_x = mu.conjugate(&g, x);
                let b_x = alt(&g, &h, &mu_x).unwrap();
                for &p in h.elements() {
                    for &q in h.elements() {
                        assert_eq!(b_x.value(p, q), b.value(g.conj(x, p), g.conj(x, q)));
                    }
                }
            }
        }
    }

    #[test]
    fn alt_prime_on_trivial_omega_is_alt() {
        let g = dihedral(4).unwrap();
        let trivial = C3::trivial_on_group(&g);
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &trivial, &h).unwrap();
        for class in omega_set(&g, &mu0).unwrap() {
            let bp = alt_prime(&g, &trivial, &class).unwrap();
            let ba = alt(&g, &h, &class.mu).unwrap();
            assert_eq!(bp.values, ba.values);
        }
    }

    #[test]
    fn alt_prime_injective_on_d8_twisted() {
        let (g, omega) = d8_inflated();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &omega, &h).unwrap();
        let bichars = enumerate_omega_bicharacters(&g, &omega, &mu0).unwrap();
        assert_eq!(bichars.len(), 2);
        assert_ne!(bichars[0].values, bichars[1].values);
        for b in &bichars {
            assert!(b.is_omega_valid(&g, &omega));
        }
    }

    #[test]
    fn torsor_trivializations_commute() {
        // f1 . alt' = alt . f2 pointwise: alt'(mu)/alt'(mu0) = alt(mu/mu0)
        let (g, omega) = d8_inflated();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &omega, &h).unwrap();
        let b0 = alt_prime(&g, &omega, &mu0).unwrap();
        for class in omega_set(&g, &mu0).unwrap() {
            let b = alt_prime(&g, &omega, &class).unwrap();
            let quotient_mu = class.mu.div(&mu0.mu);
            let b_quot = alt(&g, &h, &quotient_mu).unwrap();
            for &p in h.elements() {
                for &q in h.elements() {
                    assert_eq!(b.value(p, q).div(&b0.value(p, q)), b_quot.value(p, q));
                }
            }
        }
    }

    #[test]
    fn g_invariance_examples() {
        // A4, H = V4: the non-trivial alternating form is invariant
        let a4 = GroupSpec::Alternating(4).build().unwrap();
        let v4 = normal_abelian_subgroups(&a4)
            .into_iter()
            .find(|h| h.len() == 4)
            .unwrap();
        let trivial_omega = C3::trivial_on_group(&a4);
        for b in enumerate_alternating(&a4, &v4).unwrap() {
            assert!(is_g_invariant(&a4, &trivial_omega, &b).unwrap());
        }
        // D8, H = <r>: only the trivial form exists and it is invariant
        let d8 = dihedral(4).unwrap();
        let r = d8.elem_by_name("r").unwrap();
        let hr = d8.closure(&[r]);
        let trivial_omega8 = C3::trivial_on_group(&d8);
        let forms = enumerate_alternating(&d8, &hr).unwrap();
        assert_eq!(forms.len(), 1);
        assert!(is_g_invariant(&d8, &trivial_omega8, &forms[0]).unwrap());
    }

    #[test]
    fn lemma_abc_ratio_identity() {
        let (g, omega) = d8_inflated();
        for x in 0..g.order() {
            let ups = upsilon(&g, &omega, x);
            for h1 in 0..g.order() {
                let xh1x = g.conj(x, h1);
                let beta_c = beta(&g, &omega, xh1x);
                for h2 in 0..g.order() {
                    let lhs = ups.value(h2, h1).div(&ups.value(h1, h2));
                    let rhs = beta_c
                        .value(x, h2)
                        .mul(&beta_c.value(g.mul(x, h2), g.inv(x)))
                        .div(&beta_c.value(x, g.inv(x)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn quadratic_form_consistency() {
        // every produced omega-bicharacter has vanishing diagonal and its
        // subgroup admits a solution of delta^2 mu = omega|_H
        let (g, omega) = d8_inflated();
        for h in normal_abelian_subgroups(&g) {
            let Some(mu0) = solve_mu(&g, &omega, &h) else { continue };
            for b in enumerate_omega_bicharacters(&g, &omega, &mu0).unwrap() {
                for &x in h.elements() {
                    assert!(b.value(x, x).is_one());
                }
                assert!(solve_mu(&g, &omega, &h).is_some());
            }
        }
    }
}
