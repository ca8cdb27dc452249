//! The dual group G' of a module-category label (H, mu) with pointed dual:
//! an extension of the character group of H by the coset space H\G. The
//! 2-cocycle nu on H\G with values in the character group is built from
//! coboundary witnesses eta_c of the G-invariance of mu, as the discrepancy
//!   nu(c, d) = eta_c^{x_d} + eta_d - eta_{cd},
//! which is a character of H because mu^{x_c x_d} = mu^{x_{cd}} (H abelian),
//! and satisfies the twisted-product cocycle condition on the nose. The
//! construction is validated by exhaustive group-axiom checks rather than
//! trusted; witness independence is covered by tests.

use crate::cohomology::{solve_eta, Cochain1, Cochain3, OmegaClass};
use crate::groups::{
    abelian_structure, name_group, right_cosets, AbelianGroupData, FiniteGroup,
};
use crate::scalars::RootOfUnity;
use crate::Error;

/// Result of the dual-group construction.
pub struct DualGroupData {
    /// the extension group on the set (character of H) x (coset of H)
    pub group: FiniteGroup,
    /// best-effort structural name
    pub iso_name: Option<String>,
}

/// Express a 1-cochain that is a homomorphism H -> Q/Z as a character tuple
/// against the generators of `data`; errors if it is not a homomorphism.
fn as_character_tuple(
    data: &AbelianGroupData,
    f: impl Fn(usize) -> RootOfUnity,
) -> Result<Vec<i64>, Error> {
    let mut t = Vec::with_capacity(data.factors.len());
    for (i, &g) in data.generators.iter().enumerate() {
        let v = f(g);
        let d = data.factors[i];
        if d % v.order() != 0 {
            return Err(Error::internal("nu value is not a character of H"));
        }
        t.push(v.numer() * (d / v.order()));
    }
    // verify on all elements
    for &h in &data.elements {
        if data.char_value(&t, h) != f(h) {
            return Err(Error::internal("nu discrepancy is not a homomorphism"));
        }
    }
    Ok(t)
}

/// Construct the dual group for an untwisted label (H, mu). For a twisted
/// base cocycle the construction data lives outside this crate's scope and
/// `Unsupported` is returned.
pub fn dual_group(
    group: &FiniteGroup,
    omega: &Cochain3,
    class: &OmegaClass,
) -> Result<DualGroupData, Error> {
    if !omega.is_trivial() {
        return Err(Error::unsupported(
            "dual groups for twisted base cocycles are not computed",
        ));
    }
    let h = &class.subgroup;
    if !h.is_normal(group) {
        return Err(Error::invalid("dual group requires a normal subgroup"));
    }
    let hdata = abelian_structure(group, h)?;
    let cosets = right_cosets(group, h);
    let k = cosets.len();
    let reps: Vec<usize> = cosets.iter().map(|c| c[0]).collect();
    let mut coset_of = vec![0usize; group.order()];
    for (c, coset) in cosets.iter().enumerate() {
        for &x in coset {
            coset_of[x] = c;
        }
    }
    // witnesses eta_c with delta^1 eta_c = mu^{x_c} / mu, eta at the trivial
    // coset = 0
    let mut etas: Vec<Cochain1> = Vec::with_capacity(k);
    for &x in &reps {
        let diff = class.mu.conjugate(group, x).div(&class.mu);
        let eta = solve_eta(group, h, &diff).ok_or_else(|| {
            Error::internal("mu is not G-invariant: no coboundary witness for a coset rep")
        })?;
        etas.push(eta);
    }
    // nu(c, d) as character tuples
    let mut nu = vec![vec![Vec::new(); k]; k];
    for c in 0..k {
        for d in 0..k {
            let cd = coset_of[group.mul(reps[c], reps[d])];
            let t = as_character_tuple(&hdata, |hh| {
                etas[c]
                    .value(group.conj(reps[d], hh))
                    .mul(&etas[d].value(hh))
                    .div(&etas[cd].value(hh))
            })?;
            nu[c][d] = t;
        }
    }
    // character tuples of H-hat, mixed radix
    let hats = hdata.characters();
    let hat_count = hats.len();
    let hat_index = |t: &[i64]| -> usize {
        let mut idx = 0usize;
        for i in (0..t.len()).rev() {
            idx = idx * hdata.factors[i] as usize + t[i] as usize;
        }
        idx
    };
    // action: (alpha_d phi)(h) = phi(x_d h x_d^{-1})
    let act = |d: usize, t: &[i64]| -> Result<Vec<i64>, Error> {
        as_character_tuple(&hdata, |hh| hdata.char_value(t, group.conj(reps[d], hh)))
    };
    let order = hat_count * k;
    if order != group.order() {
        return Err(Error::internal("dual group order mismatch"));
    }
    let idx = |t_idx: usize, c: usize| c * hat_count + t_idx;
    let mut table = vec![vec![0usize; order]; order];
    for (ti, t) in hats.iter().enumerate() {
        for c in 0..k {
            for (ui, u) in hats.iter().enumerate() {
                for d in 0..k {
                    // (phi, c)(psi, d) = (alpha_d(phi) + psi + nu(c, d), cd)
                    let moved = act(d, t)?;
                    let cd = coset_of[group.mul(reps[c], reps[d])];
                    let sum: Vec<i64> = (0..hdata.factors.len())
                        .map(|i| (moved[i] + u[i] + nu[c][d][i]).rem_euclid(hdata.factors[i]))
                        .collect();
                    table[idx(ti, c)][idx(ui, d)] = idx(hat_index(&sum), cd);
                }
            }
        }
    }
    let names = (0..order)
        .map(|e| {
            let (c, ti) = (e / hat_count, e % hat_count);
            format!("({:?};{})", hats[ti], group.name(reps[c]))
        })
        .collect();
    // group axioms verified exhaustively here; a failure is a hard error
    let result = FiniteGroup::from_table(table, names)
        .map_err(|e| Error::internal(format!("dual group axioms failed: {}", e)))?;
    let iso_name = name_group(&result);
    Ok(DualGroupData {
        group: result,
        iso_name,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{invariant_classes, omega_set, solve_mu};
    use crate::groups::{
        dihedral, generalized_dihedral, is_isomorphic, normal_abelian_subgroups, GroupSpec,
    };

    fn trivial(g: &FiniteGroup) -> Cochain3 {
        Cochain3::trivial_on_group(g)
    }

    #[test]
    fn dual_of_trivial_label_is_g() {
        for spec in [
            GroupSpec::Dihedral(4),
            GroupSpec::Symmetric(3),
            GroupSpec::Quaternion,
            GroupSpec::Alternating(4),
        ] {
            let g = spec.build().unwrap();
            let omega = trivial(&g);
            let mu0 = solve_mu(&g, &omega, &g.trivial_subgroup()).unwrap();
            let dual = dual_group(&g, &omega, &mu0).unwrap();
            assert!(
                is_isomorphic(&dual.group, &g).unwrap().is_some(),
                "dual of the trivial label must be G for {:?}",
                spec
            );
        }
    }

    #[test]
    fn d8_center_label_gives_elementary_abelian() {
        let g = dihedral(4).unwrap();
        let omega = trivial(&g);
        let r2 = g.elem_by_name("r2").unwrap();
        let h = g.closure(&[r2]);
        let mu0 = solve_mu(&g, &omega, &h).unwrap();
        let dual = dual_group(&g, &omega, &mu0).unwrap();
        assert_eq!(dual.iso_name.as_deref(), Some("Z2xZ2xZ2"));
    }

    #[test]
    fn dihedral_rotation_labels() {
        // dual of (D_{2n}, <r^k>, 0) is Dih(Z_{n/k} x Z_k)
        for (n, k) in [(3usize, 3usize), (4, 2), (6, 2), (6, 3), (5, 5)] {
            let g = dihedral(n).unwrap();
            let omega = trivial(&g);
            let r = g.elem_by_name("r").unwrap();
            let rk = g.pow(r, k as i64);
            let h = g.closure(&[rk]);
            assert_eq!(h.len(), n / k);
            let mu0 = solve_mu(&g, &omega, &h).unwrap();
            let dual = dual_group(&g, &omega, &mu0).unwrap();
            let target = generalized_dihedral(&[(n / k) as i64, k as i64]).unwrap();
            assert!(
                is_isomorphic(&dual.group, &target).unwrap().is_some(),
                "n={} k={}",
                n,
                k
            );
        }
    }

    #[test]
    fn a4_nontrivial_mu_still_gives_a4() {
        let g = GroupSpec::Alternating(4).build().unwrap();
        let omega = trivial(&g);
        let v4 = normal_abelian_subgroups(&g)
            .into_iter()
            .find(|h| h.len() == 4)
            .unwrap();
        let mu0 = solve_mu(&g, &omega, &v4).unwrap();
        let classes = omega_set(&g, &mu0).unwrap();
        let invariant = invariant_classes(&g, &omega, &classes).unwrap();
        assert_eq!(invariant.len(), 2);
        for inv in &invariant {
            let dual = dual_group(&g, &omega, &inv.class).unwrap();
            assert!(is_isomorphic(&dual.group, &g).unwrap().is_some());
        }
    }

    #[test]
    fn witness_independence() {
        // perturbing the eta witnesses by characters changes nu by a
        // coboundary; the resulting groups must be isomorphic. Here we simply
        // rebuild with a shifted mu representative realizing the same class.
        let g = dihedral(4).unwrap();
        let omega = trivial(&g);
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let mu0 = solve_mu(&g, &omega, &h).unwrap();
        for class in omega_set(&g, &mu0).unwrap() {
            let d1 = dual_group(&g, &omega, &class).unwrap();
            // shift mu by a coboundary: same class, different representative
            let eta = Cochain1::from_fn(h.elements().to_vec(), |a| {
                RootOfUnity::new(a as i64, 4)
            });
            let shifted = OmegaClass {
                subgroup: class.subgroup.clone(),
                mu: class.mu.mul(&crate::cohomology::coboundary1(&g, &eta)),
            };
            let d2 = dual_group(&g, &omega, &shifted).unwrap();
            assert!(is_isomorphic(&d1.group, &d2.group).unwrap().is_some());
        }
    }
}
