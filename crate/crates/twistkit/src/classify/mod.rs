//! The classification theorems as algorithms: Lagrangian labels (H, B) for
//! the double of (G, omega), module categories with pointed duals (H, mu),
//! the bijection between the two, dual groups, fusion fingerprints, and
//! categorical Morita machinery.

mod dual_group;
mod morita;

pub use dual_group::{dual_group, DualGroupData};
pub use morita::{
    enumerate_abelian_cocycles, find_equivalent_twist, morita_classes, MoritaClassReport,
    MoritaEntry, MoritaEvidence,
};

use crate::bichar::{alt, alt_prime, is_g_invariant, Bicharacter};
use crate::cohomology::{invariant_classes, omega_set, solve_mu, Cochain3, InvariantClass, OmegaClass};
use crate::groups::{is_isomorphic, normal_abelian_subgroups, FiniteGroup, Subgroup};
use crate::modular::{build_subcategory, character_table, FusionOracle, ModularData};
use crate::scalars::{Cyclotomic, Rat};
use crate::Error;

/// A Lagrangian subcategory label: a normal abelian subgroup H with a
/// G-invariant alternating (omega-)bicharacter B, together with the witness
/// class mu with alt'(mu) = B.
#[derive(Clone, Debug)]
pub struct LagrangianLabel {
    pub subgroup: Subgroup,
    pub bichar: Bicharacter,
    pub witness: OmegaClass,
}

/// A module-category label (H, mu) whose dual is pointed: a G-invariant class
/// in Omega_{H, omega}, with its coboundary witnesses.
#[derive(Clone, Debug)]
pub struct ModuleCatLabel {
    pub class: InvariantClass,
}

/// All Lagrangian labels of Rep(D^omega(G)), in a deterministic order
/// (subgroups by order then element set, bicharacters by value key).
pub fn lagrangian_labels(
    group: &FiniteGroup,
    omega: &Cochain3,
) -> Result<Vec<LagrangianLabel>, Error> {
    if !omega.is_cocycle(group) {
        return Err(Error::invalid("omega is not a normalized 3-cocycle"));
    }
    let plain = omega.is_trivial();
    let mut labels = Vec::new();
    for h in normal_abelian_subgroups(group) {
        let Some(mu0) = solve_mu(group, omega, &h) else {
            continue;
        };
        let mut with_keys = Vec::new();
        for class in omega_set(group, &mu0)? {
            let b = if plain {
                alt(group, &h, &class.mu)?
            } else {
                alt_prime(group, omega, &class)?
            };
            if is_g_invariant(group, omega, &b)? {
                with_keys.push((b.sort_key(), LagrangianLabel {
                    subgroup: h.clone(),
                    bichar: b,
                    witness: class,
                }));
            }
        }
        with_keys.sort_by(|a, b| a.0.cmp(&b.0));
        labels.extend(with_keys.into_iter().map(|(_, l)| l));
    }
    Ok(labels)
}

/// All module-category labels (H, mu in (Omega_{H, omega})^G), deterministic
/// order aligned with `lagrangian_labels` through alt'.
pub fn module_categories_pointed_dual(
    group: &FiniteGroup,
    omega: &Cochain3,
) -> Result<Vec<ModuleCatLabel>, Error> {
    if !omega.is_cocycle(group) {
        return Err(Error::invalid("omega is not a normalized 3-cocycle"));
    }
    let mut labels = Vec::new();
    for h in normal_abelian_subgroups(group) {
        let Some(mu0) = solve_mu(group, omega, &h) else {
            continue;
        };
        let classes = omega_set(group, &mu0)?;
        let invariant = invariant_classes(group, omega, &classes)?;
        let plain = omega.is_trivial();
        let mut with_keys = Vec::new();
        for inv in invariant {
            let b = if plain {
                alt(group, &h, &inv.class.mu)?
            } else {
                alt_prime(group, omega, &inv.class)?
            };
            with_keys.push((b.sort_key(), ModuleCatLabel { class: inv }));
        }
        with_keys.sort_by(|a, b| a.0.cmp(&b.0));
        labels.extend(with_keys.into_iter().map(|(_, l)| l));
    }
    Ok(labels)
}

/// The bijection (H, mu) <-> (H, alt'(mu)) between module-category labels and
/// Lagrangian labels; errors if the pairing is not a perfect matching.
pub fn label_correspondence(
    group: &FiniteGroup,
    omega: &Cochain3,
    lagrangians: &[LagrangianLabel],
    modules: &[ModuleCatLabel],
) -> Result<Vec<(usize, usize)>, Error> {
    if lagrangians.len() != modules.len() {
        return Err(Error::invariant(format!(
            "label counts differ: {} Lagrangian vs {} module-category",
            lagrangians.len(),
            modules.len()
        )));
    }
    let plain = omega.is_trivial();
    let mut pairing = Vec::new();
    let mut used = vec![false; lagrangians.len()];
    for (mi, m) in modules.iter().enumerate() {
        let b = if plain {
            alt(group, &m.class.class.subgroup, &m.class.class.mu)?
        } else {
            alt_prime(group, omega, &m.class.class)?
        };
        let li = (0..lagrangians.len())
            .find(|&li| {
                !used[li]
                    && lagrangians[li].subgroup == m.class.class.subgroup
                    && lagrangians[li].bichar == b
            })
            .ok_or_else(|| Error::invariant("module label has no Lagrangian partner"))?;
        used[li] = true;
        pairing.push((li, mi));
    }
    Ok(pairing)
}

/// The based-ring data of a fusion subcategory: object dimensions and the
/// restricted fusion coefficients, with the unit marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionFingerprint {
    pub dims: Vec<i64>,
    pub fusion: Vec<Vec<Vec<i64>>>,
    pub unit: usize,
}

impl FusionFingerprint {
    pub fn dim_multiset(&self) -> Vec<i64> {
        let mut v = self.dims.clone();
        v.sort_unstable();
        v
    }
}

/// Fingerprint of the subcategory spanned by `objs` inside modular data.
pub fn fusion_fingerprint(data: &ModularData, objs: &[usize]) -> Result<FusionFingerprint, Error> {
    let oracle = FusionOracle::new(data);
    let pos_of = |c: usize| objs.iter().position(|&x| x == c);
    let n = objs.len();
    let mut fusion = vec![vec![vec![0i64; n]; n]; n];
    for (ia, &a) in objs.iter().enumerate() {
        for (ib, &b) in objs.iter().enumerate() {
            for &(c, m) in oracle.product(a, b)?.iter() {
                let Some(ic) = pos_of(c) else {
                    return Err(Error::invariant(
                        "subcategory is not closed under fusion",
                    ));
                };
                fusion[ia][ib][ic] = m;
            }
        }
    }
    let unit = pos_of(data.unit)
        .ok_or_else(|| Error::invariant("subcategory does not contain the unit"))?;
    Ok(FusionFingerprint {
        dims: objs.iter().map(|&i| data.objects[i].dim).collect(),
        fusion,
        unit,
    })
}

/// Fingerprint of Rep(K) from the exact character table: degrees and tensor
/// product decomposition multiplicities.
pub fn rep_fingerprint(k: &FiniteGroup) -> Result<FusionFingerprint, Error> {
    let table = character_table(k)?;
    let cc = crate::groups::conjugacy_classes(k);
    let t = table.degrees.len();
    let m = table.conductor;
    let mut fusion = vec![vec![vec![0i64; t]; t]; t];
    for a in 0..t {
        for b in 0..t {
            for c in 0..t {
                let mut acc = Cyclotomic::zero(m);
                for (ci, &rep) in cc.reps.iter().enumerate() {
                    let term = table
                        .value(a, rep)
                        .mul(table.value(b, rep))
                        .mul(&table.value(c, rep).conj())
                        .scale(&Rat::from_int(cc.classes[ci].len() as i64));
                    acc = acc.add(&term);
                }
                let q = acc
                    .scale(&Rat::new(1, k.order() as i64))
                    .as_rat()
                    .ok_or_else(|| Error::internal("non-rational tensor multiplicity"))?;
                if !q.is_integer() || q.num() < 0 {
                    return Err(Error::internal("tensor multiplicity not a nonneg integer"));
                }
                fusion[a][b][c] = q.num();
            }
        }
    }
    // trivial character sits first by table ordering
    Ok(FusionFingerprint {
        dims: table.degrees.clone(),
        fusion,
        unit: 0,
    })
}

/// Based-ring isomorphism test by backtracking on dimension-respecting
/// bijections fixing the unit.
pub fn fingerprints_isomorphic(f1: &FusionFingerprint, f2: &FusionFingerprint) -> bool {
    let n = f1.dims.len();
    if n != f2.dims.len() || f1.dim_multiset() != f2.dim_multiset() {
        return false;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    image[f1.unit] = f2.unit;
    used[f2.unit] = true;
    let order: Vec<usize> = {
        let mut v: Vec<usize> = (0..n).filter(|&i| i != f1.unit).collect();
        v.sort_by_key(|&i| f1.dims[i]);
        v
    };
    fn consistent(
        f1: &FusionFingerprint,
        f2: &FusionFingerprint,
        image: &[usize],
        assigned: &[usize],
    ) -> bool {
        for &a in assigned {
            for &b in assigned {
                for &c in assigned {
                    if f1.fusion[a][b][c] != f2.fusion[image[a]][image[b]][image[c]] {
                        return false;
                    }
                }
            }
        }
        true
    }
    fn search(
        pos: usize,
        order: &[usize],
        f1: &FusionFingerprint,
        f2: &FusionFingerprint,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        assigned: &mut Vec<usize>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let i = order[pos];
        for j in 0..f2.dims.len() {
            if used[j] || f2.dims[j] != f1.dims[i] {
                continue;
            }
            image[i] = j;
            used[j] = true;
            assigned.push(i);
            if consistent(f1, f2, image, assigned)
                && search(pos + 1, order, f1, f2, image, used, assigned)
            {
                return true;
            }
            assigned.pop();
            image[i] = usize::MAX;
            used[j] = false;
        }
        false
    }
    let mut assigned = vec![f1.unit];
    search(0, &order, f1, f2, &mut image, &mut used, &mut assigned)
}

/// Per-label rigidity evidence.
#[derive(Clone, Debug)]
pub struct LabelRigidity {
    pub h_order: usize,
    pub dual_name: Option<String>,
    pub dual_iso_to_g: bool,
    pub fingerprint_matches: bool,
}

#[derive(Clone, Debug)]
pub struct RigidityReport {
    pub rigid: bool,
    pub labels: Vec<LabelRigidity>,
}

/// Categorical Morita rigidity of a group: every Lagrangian label of the
/// untwisted double must have dual group isomorphic to G and a fusion
/// fingerprint matching Rep(G).
pub fn is_morita_rigid(group: &FiniteGroup) -> Result<RigidityReport, Error> {
    let omega = Cochain3::trivial_on_group(group);
    let labels = lagrangian_labels(group, &omega)?;
    let data = crate::modular::modular_data(group, &omega)?;
    let rep_g = rep_fingerprint(group)?;
    let mut out = Vec::new();
    let mut rigid = true;
    for label in &labels {
        let dual = dual_group(group, &omega, &label.witness)?;
        let iso = is_isomorphic(&dual.group, group)?.is_some();
        let objs = build_subcategory(&data, &label.subgroup, &label.bichar)?;
        let fp = fusion_fingerprint(&data, &objs)?;
        let fp_ok = fingerprints_isomorphic(&fp, &rep_g);
        rigid &= iso && fp_ok;
        out.push(LabelRigidity {
            h_order: label.subgroup.len(),
            dual_name: dual.iso_name,
            dual_iso_to_g: iso,
            fingerprint_matches: fp_ok,
        });
    }
    Ok(RigidityReport { rigid, labels: out })
}
