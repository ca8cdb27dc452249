//! Lagrangian subcategories inside the modular data: construction of
//! L_{(H,B)} from a classification label, extraction of (H_L, B_L) from a
//! Lagrangian object set, and the brute-force search that enumerates all
//! Lagrangian object sets directly from the definition (isotropic, closed
//! under fusion and duality, squared dimension equal to dim C).

use super::fusion::FusionOracle;
use super::{centralize, ModularData};
use crate::bichar::{is_g_invariant, Bicharacter, Flavor};
use crate::groups::Subgroup;
use crate::scalars::{Cyclotomic, Rat, RootOfUnity};
use crate::Error;
use std::collections::{BTreeSet, HashSet, VecDeque};

/// Objects (a, chi) with `a` in H and `chi(h) = B(a, h) deg chi` for all h in
/// H. The returned set is verified to be Lagrangian-shaped: mutual
/// centralization, twist identically 1, and squared dimension |G|.
pub fn build_subcategory(
    data: &ModularData,
    h: &Subgroup,
    b: &Bicharacter,
) -> Result<Vec<usize>, Error> {
    let mut objs = Vec::new();
    for (i, obj) in data.objects.iter().enumerate() {
        let a = data.classes.reps[obj.class_index];
        if !h.contains(a) {
            continue;
        }
        let cent = &data.cents[obj.class_index];
        let deg = cent.degrees[obj.char_index];
        let matches = h.elements().iter().all(|&hh| {
            let lhs = cent.chi(obj.char_index, hh);
            let rhs = Cyclotomic::from_root_of_unity(&b.value(a, hh), data.conductor)
                .scale(&Rat::from_int(deg));
            *lhs == rhs
        });
        if matches {
            objs.push(i);
        }
    }
    // Lagrangian verification
    for &i in &objs {
        if !data.objects[i].twist.is_one() {
            return Err(Error::invariant(format!(
                "subcategory object {} has non-trivial twist",
                i
            )));
        }
        for &j in &objs {
            if !centralize(data, i, j) {
                return Err(Error::invariant(format!(
                    "subcategory objects {} and {} do not centralize",
                    i, j
                )));
            }
        }
    }
    let dim: i64 = objs.iter().map(|&i| data.objects[i].dim.pow(2)).sum();
    if dim != data.group.order() as i64 {
        return Err(Error::invariant(format!(
            "subcategory dimension {} != |G| = {}",
            dim,
            data.group.order()
        )));
    }
    Ok(objs)
}

/// Recover the label (H_L, B_L) from a Lagrangian object set. The bicharacter
/// is validated (alternating (omega-)bicharacter, G-invariant); failure means
/// the input set was not Lagrangian.
pub fn extract_label(data: &ModularData, objs: &[usize]) -> Result<(Subgroup, Bicharacter), Error> {
    let group = &data.group;
    // H_L = union of the classes that occur
    let mut elements = Vec::new();
    let mut class_seen = vec![false; data.classes.reps.len()];
    for &i in objs {
        let ci = data.objects[i].class_index;
        if !class_seen[ci] {
            class_seen[ci] = true;
            elements.extend_from_slice(&data.classes.classes[ci]);
        }
    }
    let h = Subgroup::from_elements(group, elements)
        .map_err(|_| Error::invariant("object classes do not form a subgroup"))?;
    // one object per occurring class
    let obj_for_class: Vec<Option<usize>> = (0..data.classes.reps.len())
        .map(|ci| objs.iter().copied().find(|&i| data.objects[i].class_index == ci))
        .collect();
    let value = |h1: usize, h2: usize| -> Result<RootOfUnity, Error> {
        let ci = data.classes.class_of[h1];
        let obj = obj_for_class[ci].ok_or_else(|| Error::internal("missing class object"))?;
        let o = &data.objects[obj];
        let cent = &data.cents[ci];
        let deg = Rat::from_int(cent.degrees[o.char_index]);
        if data.omega_trivial {
            // h1 = g a g^{-1}; B(h1, h2) = chi(g^{-1} h2 g) / deg
            let g = data.classes.conjugator[h1];
            let v = cent.chi(o.char_index, group.conj(group.inv(g), h2));
            v.as_scaled_root(&deg)
                .ok_or_else(|| Error::invariant("character ratio is not a root of unity"))
        } else {
            // h1 = x^{-1} a x with x = conjugator^{-1};
            // B(h1, h2) = beta_a(x,h2) beta_a(xh2,x^{-1}) / beta_a(x,x^{-1})
            //             * chi(x h2 x^{-1}) / deg
            let x = group.inv(data.classes.conjugator[h1]);
            let xinv = group.inv(x);
            let ratio = cent
                .beta_full
                .value(x, h2)
                .mul(&cent.beta_full.value(group.mul(x, h2), xinv))
                .div(&cent.beta_full.value(x, xinv));
            let v = cent.chi(o.char_index, group.conj(x, h2));
            let root = v
                .as_scaled_root(&deg)
                .ok_or_else(|| Error::invariant("character ratio is not a root of unity"))?;
            Ok(ratio.mul(&root))
        }
    };
    let mut values = Vec::new();
    for &h1 in h.elements() {
        for &h2 in h.elements() {
            values.push(value(h1, h2)?);
        }
    }
    let flavor = if data.omega_trivial {
        Flavor::Plain
    } else {
        Flavor::Omega
    };
    let mut it = values.into_iter();
    let b = Bicharacter::from_fn(h.clone(), flavor, |_, _| it.next().unwrap());
    let valid = match flavor {
        Flavor::Plain => b.is_plain_valid(group),
        Flavor::Omega => b.is_omega_valid(group, &data.omega),
    };
    if !valid {
        return Err(Error::invariant(
            "extracted map is not an alternating (omega-)bicharacter",
        ));
    }
    if !is_g_invariant(group, &data.omega, &b)? {
        return Err(Error::invariant("extracted bicharacter is not G-invariant"));
    }
    Ok((h, b))
}

/// All Lagrangian object sets, found by seeding with the unit and repeatedly
/// extending by twist-1 objects that centralize the current set, closing
/// under fusion and duality, and pruning with dim(D)^2 <= dim(C).
pub fn brute_force_lagrangians(data: &ModularData) -> Result<Vec<Vec<usize>>, Error> {
    let n = data.objects.len();
    let target = data.group.order() as i64;
    let oracle = FusionOracle::new(data);
    let theta1: Vec<usize> = (0..n)
        .filter(|&i| data.objects[i].twist.is_one())
        .collect();
    // centralization among theta-1 objects
    let cent: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| centralize(data, i, j)).collect())
        .collect();
    let duals: Vec<usize> = (0..n).map(|i| data.dual(i)).collect();

    let dim_of = |set: &BTreeSet<usize>| -> i64 {
        set.iter().map(|&i| data.objects[i].dim.pow(2)).sum()
    };

    // closure under fusion constituents and duals; None = pruned (twist or
    // dimension violation)
    let closure = |seed: &BTreeSet<usize>| -> Result<Option<BTreeSet<usize>>, Error> {
        let mut set = seed.clone();
        let mut queue: Vec<usize> = set.iter().copied().collect();
        while let Some(x) = queue.pop() {
            let members: Vec<usize> = set.iter().copied().collect();
            for y in members {
                for &(c, _) in oracle.product(x, y)?.iter() {
                    if !set.contains(&c) {
                        if !data.objects[c].twist.is_one() {
                            return Ok(None);
                        }
                        set.insert(c);
                        if dim_of(&set) > target {
                            return Ok(None);
                        }
                        queue.push(c);
                    }
                }
            }
            let d = duals[x];
            if !set.contains(&d) {
                set.insert(d);
                if dim_of(&set) > target {
                    return Ok(None);
                }
                queue.push(d);
            }
        }
        Ok(Some(set))
    };

    let mut start = BTreeSet::new();
    start.insert(data.unit);
    let start = closure(&start)?.ok_or_else(|| Error::internal("unit closure pruned"))?;
    let mut visited: HashSet<Vec<usize>> = HashSet::new();
    let mut queue: VecDeque<BTreeSet<usize>> = VecDeque::new();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    visited.insert(start.iter().copied().collect());
    queue.push_back(start);
    while let Some(set) = queue.pop_front() {
        let dim = dim_of(&set);
        if dim == target {
            // a closed isotropic mutually-centralizing set of full dimension
            let as_vec: Vec<usize> = set.iter().copied().collect();
            debug_assert!(as_vec.iter().all(|&i| as_vec.iter().all(|&j| cent[i][j])));
            found.insert(as_vec);
            continue;
        }
        for &x in &theta1 {
            if set.contains(&x) {
                continue;
            }
            if dim + data.objects[x].dim.pow(2) > target {
                continue;
            }
            if !set.iter().all(|&y| cent[x][y]) {
                continue;
            }
            let mut seed = set.clone();
            seed.insert(x);
            if let Some(closed) = closure(&seed)? {
                let key: Vec<usize> = closed.iter().copied().collect();
                if !visited.contains(&key) {
                    visited.insert(key);
                    queue.push_back(closed);
                }
            }
        }
    }
    Ok(found.into_iter().collect())
}
