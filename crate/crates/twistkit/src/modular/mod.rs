//! Modular data of the representation category of the (twisted) Drinfeld
//! double of a finite group: simple objects labelled by (class
//! representative, irreducible (projective) character of its centralizer),
//! the exact S-matrix in the unnormalized convention (unit row = dimensions),
//! twists, centralization tests, Verlinde fusion, Lagrangian subcategory
//! construction/extraction, and the brute-force Lagrangian search.

pub mod chartab;
pub mod fusion;
pub mod lagrangian;

pub use chartab::{character_table, projective_character_table, ProjectiveCharacterTable};
pub use fusion::{fusion_coefficients, FusionOracle};
pub use lagrangian::{brute_force_lagrangians, build_subcategory, extract_label};

use crate::cohomology::{beta, Cochain2, Cochain3};
use crate::groups::{centralizer, conjugacy_classes, subgroup_group, ConjugacyClasses, FiniteGroup, Subgroup};
use crate::scalars::{lcm, Cyclotomic, Rat, RootOfUnity};
use crate::Error;
use rayon::prelude::*;

/// A simple object (a, chi) of Rep(D^omega(G)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleObject {
    /// index of the conjugacy class of `a` (the representative is canonical)
    pub class_index: usize,
    /// row index into the beta_a-character table of C_G(a)
    pub char_index: usize,
    /// d(a, chi) = |K_a| deg chi
    pub dim: i64,
    /// theta(a, chi) = chi(a) / deg chi
    pub twist: RootOfUnity,
}

/// Per-class centralizer data and the (projective) character table of the
/// centralizer, with values rebased to the global conductor.
#[derive(Clone, Debug)]
pub struct CentralizerData {
    pub subgroup: Subgroup,
    pub local: FiniteGroup,
    /// local index -> parent element
    pub parent_of: Vec<usize>,
    /// parent element -> local index
    pub local_of: Vec<Option<usize>>,
    /// beta_a on all of G (trivial when omega is)
    pub beta_full: Cochain2,
    pub degrees: Vec<i64>,
    /// values[chi][local element], at the global conductor
    pub values: Vec<Vec<Cyclotomic>>,
}

impl CentralizerData {
    /// chi value at a parent-group element (must centralize a).
    pub fn chi(&self, chi: usize, parent_elem: usize) -> &Cyclotomic {
        let local = self.local_of[parent_elem].expect("element outside centralizer");
        &self.values[chi][local]
    }
}

/// Exact modular data of Rep(D^omega(G)).
pub struct ModularData {
    pub group: FiniteGroup,
    pub omega: Cochain3,
    pub omega_trivial: bool,
    pub classes: ConjugacyClasses,
    pub cents: Vec<CentralizerData>,
    pub objects: Vec<SimpleObject>,
    pub conductor: i64,
    /// unnormalized S-matrix: S[unit] equals the dimension vector
    pub s: Vec<Vec<Cyclotomic>>,
    pub unit: usize,
}

impl ModularData {
    pub fn dims(&self) -> Vec<i64> {
        self.objects.iter().map(|o| o.dim).collect()
    }

    /// Multiset of twist values, sorted.
    pub fn t_spectrum(&self) -> Vec<RootOfUnity> {
        let mut v: Vec<RootOfUnity> = self.objects.iter().map(|o| o.twist).collect();
        v.sort();
        v
    }

    pub fn rep_of(&self, obj: usize) -> usize {
        self.classes.reps[self.objects[obj].class_index]
    }

    /// Dual object: the one whose S-row is the complex conjugate row.
    pub fn dual(&self, obj: usize) -> usize {
        let conj_row: Vec<Cyclotomic> = self.s[obj].iter().map(|v| v.conj()).collect();
        self.s
            .iter()
            .position(|row| *row == conj_row)
            .expect("dual object not found")
    }
}

/// Build the list of simple objects together with centralizer tables.
pub fn simple_objects(group: &FiniteGroup, omega: &Cochain3) -> Result<ModularDataBuilder, Error> {
    if !omega.is_cocycle(group) {
        return Err(Error::invalid("omega is not a normalized 3-cocycle"));
    }
    let omega_trivial = omega.is_trivial();
    let classes = conjugacy_classes(group);
    let mut cents = Vec::new();
    for &a in &classes.reps {
        let subgroup = centralizer(group, a);
        let (local, parent_of) = subgroup_group(group, &subgroup)?;
        let mut local_of = vec![None; group.order()];
        for (i, &p) in parent_of.iter().enumerate() {
            local_of[p] = Some(i);
        }
        let beta_full = if omega_trivial {
            Cochain2::zero((0..group.order()).collect())
        } else {
            beta(group, omega, a)
        };
        let local_beta = Cochain2::from_fn((0..local.order()).collect(), |i, j| {
            beta_full.value(parent_of[i], parent_of[j])
        });
        let table = projective_character_table(&local, &local_beta)?;
        cents.push((subgroup, local, parent_of, local_of, beta_full, table));
    }
    // global conductor
    let mut conductor = lcm(group.exponent(), omega.value_order());
    for (_, _, _, _, _, table) in &cents {
        conductor = lcm(conductor, table.conductor);
    }
    let cents: Vec<CentralizerData> = cents
        .into_iter()
        .map(|(subgroup, local, parent_of, local_of, beta_full, table)| {
            let values = table
                .values
                .iter()
                .map(|row| row.iter().map(|v| v.to_conductor(conductor)).collect())
                .collect();
            CentralizerData {
                subgroup,
                local,
                parent_of,
                local_of,
                beta_full,
                degrees: table.degrees,
                values,
            }
        })
        .collect();
    // objects
    let mut objects = Vec::new();
    for (ci, cent) in cents.iter().enumerate() {
        let a = classes.reps[ci];
        let class_size = classes.classes[ci].len() as i64;
        for chi in 0..cent.degrees.len() {
            let deg = cent.degrees[chi];
            let chi_a = cent.chi(chi, a);
            let twist = chi_a
                .as_scaled_root(&Rat::from_int(deg))
                .ok_or_else(|| Error::internal("twist is not a root of unity"))?;
            objects.push(SimpleObject {
                class_index: ci,
                char_index: chi,
                dim: class_size * deg,
                twist,
            });
        }
    }
    let total: i64 = objects.iter().map(|o| o.dim * o.dim).sum();
    let expected = (group.order() as i64) * (group.order() as i64);
    if total != expected {
        return Err(Error::internal(format!(
            "sum of squared dimensions {} != |G|^2 = {}",
            total, expected
        )));
    }
    Ok(ModularDataBuilder {
        group: group.clone(),
        omega: omega.clone(),
        omega_trivial,
        classes,
        cents,
        objects,
        conductor,
    })
}

/// Intermediate state between object construction and the S-matrix.
pub struct ModularDataBuilder {
    group: FiniteGroup,
    omega: Cochain3,
    omega_trivial: bool,
    classes: ConjugacyClasses,
    cents: Vec<CentralizerData>,
    objects: Vec<SimpleObject>,
    conductor: i64,
}

impl ModularDataBuilder {
    pub fn objects(&self) -> &[SimpleObject] {
        &self.objects
    }
}

/// Full modular data: objects plus the exact S-matrix, verified symmetric
/// with unit row equal to the dimension vector.
pub fn s_matrix(builder: ModularDataBuilder) -> Result<ModularData, Error> {
    let ModularDataBuilder {
        group,
        omega,
        omega_trivial,
        classes,
        cents,
        objects,
        conductor,
    } = builder;
    let n_obj = objects.len();
    let order = group.order();

    let entry = |i: usize, j: usize| -> Cyclotomic {
        let oi = &objects[i];
        let oj = &objects[j];
        let a = classes.reps[oi.class_index];
        let b = classes.reps[oj.class_index];
        let ca = &cents[oi.class_index];
        let cb = &cents[oj.class_index];
        if omega_trivial {
            if group.is_abelian() {
                // G(a,b) = G and all conjugations are trivial
                let va = ca.chi(oi.char_index, b).conj();
                let vb = cb.chi(oj.char_index, a).conj();
                return va.mul(&vb);
            }
            // S = |G| / (|C(a)||C(b)|) * sum over g in G(a,b) of
            //     conj chi(g b g^{-1}) conj chi'(g^{-1} a g)
            let mut acc = Cyclotomic::zero(conductor);
            for g in 0..order {
                let gbg = group.conj(g, b);
                if group.mul(a, gbg) != group.mul(gbg, a) {
                    continue;
                }
                let gag = group.conj(group.inv(g), a);
                let term = ca
                    .chi(oi.char_index, gbg)
                    .conj()
                    .mul(&cb.chi(oj.char_index, gag).conj());
                acc = acc.add(&term);
            }
            let pre = Rat::new(
                order as i64,
                (ca.subgroup.len() * cb.subgroup.len()) as i64,
            );
            acc.scale(&pre)
        } else {
            // twisted formula: sum over g in K_a, g' in K_b with g' in C_G(g)
            let mut acc = Cyclotomic::zero(conductor);
            for &g in &classes.classes[oi.class_index] {
                let x = group.inv(classes.conjugator[g]); // g = x^{-1} a x
                let xinv = group.inv(x);
                debug_assert_eq!(group.conj(xinv, a), g);
                for &gp in &classes.classes[oj.class_index] {
                    if group.mul(g, gp) != group.mul(gp, g) {
                        continue;
                    }
                    let y = group.inv(classes.conjugator[gp]); // g' = y^{-1} b y
                    let yinv = group.inv(y);
                    debug_assert_eq!(group.conj(yinv, b), gp);
                    let ratio = ca
                        .beta_full
                        .value(x, gp)
                        .mul(&ca.beta_full.value(group.mul(x, gp), xinv))
                        .mul(&cb.beta_full.value(y, g))
                        .mul(&cb.beta_full.value(group.mul(y, g), yinv))
                        .div(&ca.beta_full.value(x, xinv))
                        .div(&cb.beta_full.value(y, yinv));
                    let xgpx = group.conj(x, gp);
                    let ygy = group.conj(y, g);
                    let term = Cyclotomic::from_root_of_unity(&ratio.inv(), conductor)
                        .mul(&ca.chi(oi.char_index, xgpx).conj())
                        .mul(&cb.chi(oj.char_index, ygy).conj());
                    acc = acc.add(&term);
                }
            }
            acc
        }
    };

    let s: Vec<Vec<Cyclotomic>> = (0..n_obj)
        .into_par_iter()
        .map(|i| (0..n_obj).map(|j| entry(i, j)).collect())
        .collect();

    // unit object: identity class (index 0) with the trivial character
    let unit = objects
        .iter()
        .position(|o| {
            o.class_index == 0
                && cents[0].values[o.char_index]
                    .iter()
                    .all(|v| *v == Cyclotomic::one(conductor))
        })
        .ok_or_else(|| Error::internal("unit object not found"))?;

    let data = ModularData {
        group,
        omega,
        omega_trivial,
        classes,
        cents,
        objects,
        conductor,
        s,
        unit,
    };
    // structural checks: symmetry and unit row = dimensions
    for i in 0..n_obj {
        if data.s[data.unit][i] != Cyclotomic::from_int(conductor, data.objects[i].dim) {
            return Err(Error::internal("unit row of S does not equal dimensions"));
        }
        for j in 0..i {
            if data.s[i][j] != data.s[j][i] {
                return Err(Error::internal("S-matrix is not symmetric"));
            }
        }
    }
    Ok(data)
}

/// Convenience: full modular data in one call.
pub fn modular_data(group: &FiniteGroup, omega: &Cochain3) -> Result<ModularData, Error> {
    s_matrix(simple_objects(group, omega)?)
}

/// Muger centralization via the S-matrix: S(X, Y) = d(X) d(Y).
pub fn centralize(data: &ModularData, i: usize, j: usize) -> bool {
    let dd = Cyclotomic::from_int(data.conductor, data.objects[i].dim * data.objects[j].dim);
    data.s[i][j] == dd
}

/// Centralization via the character-theoretic conditions (classes commute
/// element-wise plus the pointwise character identity); must agree with the
/// S-matrix route.
pub fn centralize_by_conditions(data: &ModularData, i: usize, j: usize) -> bool {
    let group = &data.group;
    let oi = &data.objects[i];
    let oj = &data.objects[j];
    let a = data.classes.reps[oi.class_index];
    let b = data.classes.reps[oj.class_index];
    let ca = &data.cents[oi.class_index];
    let cb = &data.cents[oj.class_index];
    // (i) classes commute element-wise
    for &u in &data.classes.classes[oi.class_index] {
        for &v in &data.classes.classes[oj.class_index] {
            if group.mul(u, v) != group.mul(v, u) {
                return false;
            }
        }
    }
    let degs = Cyclotomic::from_int(
        data.conductor,
        ca.degrees[oi.char_index] * cb.degrees[oj.char_index],
    );
    if data.omega_trivial {
        // (ii) chi(g b g^{-1}) chi'(g^{-1} a g) = deg chi deg chi'
        for g in 0..group.order() {
            let gbg = group.conj(g, b);
            let gag = group.conj(group.inv(g), a);
            let lhs = ca.chi(oi.char_index, gbg).mul(cb.chi(oj.char_index, gag));
            if lhs != degs {
                return false;
            }
        }
        true
    } else {
        for x in 0..group.order() {
            let xinv = group.inv(x);
            let g = group.conj(xinv, a);
            for y in 0..group.order() {
                let yinv = group.inv(y);
                let gp = group.conj(yinv, b);
                let ratio = ca
                    .beta_full
                    .value(x, gp)
                    .mul(&ca.beta_full.value(group.mul(x, gp), xinv))
                    .mul(&cb.beta_full.value(y, g))
                    .mul(&cb.beta_full.value(group.mul(y, g), yinv))
                    .div(&ca.beta_full.value(x, xinv))
                    .div(&cb.beta_full.value(y, yinv));
                let lhs = Cyclotomic::from_root_of_unity(&ratio, data.conductor)
                    .mul(ca.chi(oi.char_index, group.conj(x, gp)))
                    .mul(cb.chi(oj.char_index, group.conj(y, g)));
                if lhs != degs {
                    return false;
                }
            }
        }
        true
    }
}

/// Exact equivalence of modular data: a bijection of simple objects matching
/// (S, T, d) entry-for-entry. Returns the permutation (image indices in
/// `d2` for each object of `d1`) or None.
pub fn modular_equivalent(d1: &ModularData, d2: &ModularData) -> Option<Vec<usize>> {
    if d1.objects.len() != d2.objects.len() {
        return None;
    }
    let n = d1.objects.len();
    let m = lcm(d1.conductor, d2.conductor);
    let s1: Vec<Vec<Cyclotomic>> = d1
        .s
        .iter()
        .map(|row| row.iter().map(|v| v.to_conductor(m)).collect())
        .collect();
    let s2: Vec<Vec<Cyclotomic>> = d2
        .s
        .iter()
        .map(|row| row.iter().map(|v| v.to_conductor(m)).collect())
        .collect();
    // invariant per object: (dim, twist, sorted S-row key)
    let key = |s: &Vec<Vec<Cyclotomic>>, data: &ModularData, i: usize| {
        let mut row: Vec<Vec<(i64, Vec<Rat>)>> = s[i]
            .iter()
            .map(|v| vec![(v.conductor(), v.coeffs().to_vec())])
            .collect();
        row.sort();
        (data.objects[i].dim, data.objects[i].twist, row)
    };
    let keys1: Vec<_> = (0..n).map(|i| key(&s1, d1, i)).collect();
    let keys2: Vec<_> = (0..n).map(|i| key(&s2, d2, i)).collect();
    {
        let mut a = keys1.clone();
        let mut b = keys2.clone();
        a.sort();
        b.sort();
        if a != b {
            return None;
        }
    }
    // backtracking with candidate lists restricted by the invariants
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| keys2[j] == keys1[i]).collect())
        .collect();
    // assign in order of fewest candidates
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn assign(
        pos: usize,
        order: &[usize],
        candidates: &[Vec<usize>],
        s1: &[Vec<Cyclotomic>],
        s2: &[Vec<Cyclotomic>],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        for &j in &candidates[i] {
            if used[j] {
                continue;
            }
            // consistency with already assigned objects
            let ok = order[..pos].iter().all(|&k| s1[i][k] == s2[j][image[k]]) && s1[i][i] == s2[j][j];
            if ok {
                image[i] = j;
                used[j] = true;
                if assign(pos + 1, order, candidates, s1, s2, image, used) {
                    return true;
                }
                image[i] = usize::MAX;
                used[j] = false;
            }
        }
        false
    }
    if assign(0, &order, &candidates, &s1, &s2, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{cyclic_cocycle_on, inflate};
    use crate::groups::{dihedral, quotient_group, GroupSpec};

    fn trivial_omega(g: &FiniteGroup) -> Cochain3 {
        Cochain3::trivial_on_group(g)
    }

    #[test]
    fn double_of_trivial_group() {
        let g = GroupSpec::Abelian(vec![1]).build().unwrap();
        let data = modular_data(&g, &trivial_omega(&g)).unwrap();
        assert_eq!(data.objects.len(), 1);
        assert_eq!(data.s[0][0], Cyclotomic::one(data.conductor));
    }

    #[test]
    fn double_of_z2() {
        let g = GroupSpec::Abelian(vec![2]).build().unwrap();
        let data = modular_data(&g, &trivial_omega(&g)).unwrap();
        assert_eq!(data.objects.len(), 4);
        assert!(data.objects.iter().all(|o| o.dim == 1));
        // S entries are +-1 with S((a,chi),(b,chi')) = chi(b) chi'(a)
        for i in 0..4 {
            for j in 0..4 {
                let v = data.s[i][j].as_rat().expect("entries rational");
                assert!(v == Rat::from_int(1) || v == Rat::from_int(-1));
            }
        }
    }

    #[test]
    fn double_of_s3() {
        let g = GroupSpec::Symmetric(3).build().unwrap();
        let data = modular_data(&g, &trivial_omega(&g)).unwrap();
        assert_eq!(data.objects.len(), 8);
        let total: i64 = data.objects.iter().map(|o| o.dim * o.dim).sum();
        assert_eq!(total, 36);
        // unit row = dims enforced at construction; spot-check the theta of
        // the unit
        assert!(data.objects[data.unit].twist.is_one());
    }

    #[test]
    fn centralize_routes_agree_untwisted() {
        for spec in [GroupSpec::Symmetric(3), GroupSpec::Dihedral(4), GroupSpec::Quaternion] {
            let g = spec.build().unwrap();
            let data = modular_data(&g, &trivial_omega(&g)).unwrap();
            for i in 0..data.objects.len() {
                for j in 0..data.objects.len() {
                    assert_eq!(
                        centralize(&data, i, j),
                        centralize_by_conditions(&data, i, j),
                        "disagreement at ({}, {})",
                        i,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn twisted_d8_objects_and_agreement() {
        let g = dihedral(4).unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let kernel = g.closure(&[r2, s]);
        let q = quotient_group(&g, &kernel).unwrap();
        let omega0 = cyclic_cocycle_on(&q.group, 1, 1).unwrap();
        let omega = inflate(&omega0, &g, &q.group, &q.proj).unwrap();
        let data = modular_data(&g, &omega).unwrap();
        let total: i64 = data.objects.iter().map(|o| o.dim * o.dim).sum();
        assert_eq!(total, 64);
        for i in 0..data.objects.len() {
            for j in 0..data.objects.len() {
                assert_eq!(
                    centralize(&data, i, j),
                    centralize_by_conditions(&data, i, j)
                );
            }
        }
        // |S(X,Y)| <= d(X) d(Y): check via equality case count only
        // (full modulus comparison happens through centralize)
    }

    #[test]
    fn twisted_formula_reduces_to_untwisted() {
        // compute S for S3 via the twisted path with trivial omega by
        // pretending omega is non-trivial: direct comparison of the two
        // code paths
        let g = GroupSpec::Symmetric(3).build().unwrap();
        let omega = trivial_omega(&g);
        let data = modular_data(&g, &omega).unwrap();
        // recompute entries with the twisted formula
        let builder = simple_objects(&g, &omega).unwrap();
        let classes = conjugacy_classes(&g);
        for (i, oi) in builder.objects().iter().enumerate() {
            for (j, oj) in builder.objects().iter().enumerate() {
                let a = classes.reps[oi.class_index];
                let b = classes.reps[oj.class_index];
                let mut acc = Cyclotomic::zero(data.conductor);
                for &gg in &classes.classes[oi.class_index] {
                    let x = g.inv(classes.conjugator[gg]);
                    for &gp in &classes.classes[oj.class_index] {
                        if g.mul(gg, gp) != g.mul(gp, gg) {
                            continue;
                        }
                        let y = g.inv(classes.conjugator[gp]);
                        let _ = (a, b);
                        let term = data.cents[oi.class_index]
                            .chi(oi.char_index, g.conj(x, gp))
                            .conj()
                            .mul(&data.cents[oj.class_index].chi(oj.char_index, g.conj(y, gg)).conj());
                        acc = acc.add(&term);
                    }
                }
                assert_eq!(acc, data.s[i][j], "entry ({}, {})", i, j);
            }
        }
    }

    #[test]
    fn d8_vs_q8_not_equivalent() {
        let d8 = dihedral(4).unwrap();
        let q8 = GroupSpec::Quaternion.build().unwrap();
        let data1 = modular_data(&d8, &trivial_omega(&d8)).unwrap();
        let data2 = modular_data(&q8, &trivial_omega(&q8)).unwrap();
        assert_eq!(data1.objects.len(), 22);
        assert_eq!(data2.objects.len(), 22);
        assert_ne!(data1.t_spectrum(), data2.t_spectrum());
        assert!(modular_equivalent(&data1, &data2).is_none());
        // self equivalence with a genuine witness
        let id = modular_equivalent(&data1, &data1).expect("self equivalence");
        for i in 0..22 {
            for j in 0..22 {
                assert_eq!(data1.s[i][j], data1.s[id[i]][id[j]]);
            }
        }
    }
}
