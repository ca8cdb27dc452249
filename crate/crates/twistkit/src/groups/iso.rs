//! Isomorphism testing for small groups: invariant prefilters followed by
//! backtracking on generator images, plus best-effort naming of a group
//! against the small-group catalog and a few structured families.

use super::{abelian_structure, build, conjugacy_classes, FiniteGroup};
use crate::Error;

pub const ISO_ORDER_BOUND: usize = 256;

fn order_multiset(g: &FiniteGroup) -> Vec<usize> {
    let mut v: Vec<usize> = (0..g.order()).map(|a| g.elem_order(a)).collect();
    v.sort_unstable();
    v
}

fn class_signature(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let cc = conjugacy_classes(g);
    let mut v: Vec<(usize, usize)> = cc
        .classes
        .iter()
        .zip(&cc.reps)
        .map(|(c, &r)| (c.len(), g.elem_order(r)))
        .collect();
    v.sort_unstable();
    v
}

/// Isomorphism test with an explicit witness (the image list of every element
/// of `g1`), or None if the groups are not isomorphic.
pub fn is_isomorphic(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<Option<Vec<usize>>, Error> {
    is_isomorphic_bounded(g1, g2, ISO_ORDER_BOUND)
}

pub fn is_isomorphic_bounded(
    g1: &FiniteGroup,
    g2: &FiniteGroup,
    bound: usize,
) -> Result<Option<Vec<usize>>, Error> {
    if g1.order() > bound || g2.order() > bound {
        return Err(Error::bounds(format!(
            "isomorphism test bound {} exceeded ({} vs {})",
            bound,
            g1.order(),
            g2.order()
        )));
    }
    if g1.order() != g2.order() {
        return Ok(None);
    }
    // invariant prefilter
    if order_multiset(g1) != order_multiset(g2) {
        return Ok(None);
    }
    if g1.is_abelian() != g2.is_abelian() {
        return Ok(None);
    }
    if g1.is_abelian() {
        // equal order multisets on abelian groups force isomorphism, but we
        // still need a witness: fall through to backtracking (it is fast here)
        let f1 = abelian_structure(g1, &g1.full_subgroup())?.factors;
        let f2 = abelian_structure(g2, &g2.full_subgroup())?.factors;
        if f1 != f2 {
            return Ok(None);
        }
    } else {
        if class_signature(g1) != class_signature(g2) {
            return Ok(None);
        }
        if g1.center().len() != g2.center().len() {
            return Ok(None);
        }
        if g1.derived_subgroup().len() != g2.derived_subgroup().len() {
            return Ok(None);
        }
    }

    let gens = g1.generating_set();
    let cc2 = conjugacy_classes(g2);
    // candidate images per generator: same element order and class size
    let cc1 = conjugacy_classes(g1);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let target_order = g1.elem_order(g);
            let target_size = cc1.classes[cc1.class_of[g]].len();
            (0..g2.order())
                .filter(|&h| {
                    g2.elem_order(h) == target_order
                        && cc2.classes[cc2.class_of[h]].len() == target_size
                })
                .collect()
        })
        .collect();

    // backtracking on generator images with incremental closure checking
    fn grow_map(
        g1: &FiniteGroup,
        g2: &FiniteGroup,
        assignments: &[(usize, usize)],
    ) -> Option<Vec<usize>> {
        let n = g1.order();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut known: Vec<usize> = Vec::new();
        let add = |map: &mut Vec<usize>,
                       used: &mut Vec<bool>,
                       known: &mut Vec<usize>,
                       x: usize,
                       y: usize|
         -> bool {
            if map[x] != usize::MAX {
                return map[x] == y;
            }
            if used[y] {
                return false;
            }
            map[x] = y;
            used[y] = true;
            known.push(x);
            true
        };
        if !add(&mut map, &mut used, &mut known, 0, 0) {
            return None;
        }
        for &(x, y) in assignments {
            if !add(&mut map, &mut used, &mut known, x, y) {
                return None;
            }
        }
        // close under products, checking homomorphism consistency
        let mut i = 0;
        while i < known.len() {
            let x = known[i];
            for j in 0..=i {
                let y = known[j];
                for (p, q) in [(x, y), (y, x)] {
                    let z = g1.mul(p, q);
                    let z2 = g2.mul(map[p], map[q]);
                    if !add(&mut map, &mut used, &mut known, z, z2) {
                        return None;
                    }
                }
            }
            i += 1;
        }
        Some(map)
    }

    fn search(
        g1: &FiniteGroup,
        g2: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        assignments: &mut Vec<(usize, usize)>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        match grow_map(g1, g2, assignments) {
            None => return None,
            Some(map) => {
                if depth == gens.len() {
                    // all generators assigned: map covers the span of the
                    // generators, which is all of g1
                    debug_assert!(map.iter().all(|&y| y != usize::MAX));
                    return Some(map);
                }
            }
        }
        for &c in &candidates[depth] {
            assignments.push((gens[depth], c));
            if let Some(map) = search(g1, g2, gens, candidates, assignments, depth + 1) {
                return Some(map);
            }
            assignments.pop();
        }
        None
    }

    if gens.is_empty() {
        // trivial group
        return Ok(Some(vec![0]));
    }
    let mut assignments = Vec::new();
    Ok(search(g1, g2, &gens, &candidates, &mut assignments, 0))
}

fn abelian_name(factors: &[i64]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    let mut f: Vec<i64> = factors.to_vec();
    f.sort_unstable_by(|a, b| b.cmp(a));
    f.iter()
        .map(|x| format!("Z{}", x))
        .collect::<Vec<_>>()
        .join("x")
}

/// Best-effort structural name: exact for abelian groups and all orders
/// <= 16, recognizes generalized dihedral groups Dih(A) and Z2 x A5.
pub fn name_group(g: &FiniteGroup) -> Option<String> {
    if g.is_abelian() {
        let data = abelian_structure(g, &g.full_subgroup()).ok()?;
        return Some(abelian_name(&data.factors));
    }
    if g.order() <= 16 {
        if let Ok(catalog) = build::small_groups(g.order()) {
            for (name, candidate) in &catalog {
                if let Ok(Some(_)) = is_isomorphic(g, candidate) {
                    return Some(name.clone());
                }
            }
        }
    }
    if let Some(name) = generalized_dihedral_name(g) {
        return Some(name);
    }
    for (order, alt_n, name) in [(24usize, 4usize, "Z2xA4"), (120, 5, "Z2xA5")] {
        if g.order() == order {
            if let (Ok(an), Ok(z2)) = (build::alternating(alt_n), build::abelian(&[2])) {
                if let Ok(target) = build::direct_product(&z2, &an) {
                    if let Ok(Some(_)) = is_isomorphic(g, &target) {
                        return Some(name.to_string());
                    }
                }
            }
        }
    }
    None
}

/// Detect G = Dih(A): an abelian index-2 subgroup inverted by an outside
/// element.
fn generalized_dihedral_name(g: &FiniteGroup) -> Option<String> {
    if g.order() % 2 != 0 {
        return None;
    }
    // index-2 subgroups are kernels of characters of G / <squares, commutators>
    let mut gens: Vec<usize> = g.derived_subgroup().elements().to_vec();
    for a in 0..g.order() {
        gens.push(g.mul(a, a));
    }
    gens.sort_unstable();
    gens.dedup();
    let core = g.closure(&gens);
    if core.len() == g.order() {
        return None;
    }
    let q = super::quotient_group(g, &core).ok()?;
    let qdata = abelian_structure(&q.group, &q.group.full_subgroup()).ok()?;
    for t in qdata.characters() {
        if t.iter().all(|&x| x == 0) {
            continue;
        }
        let elements: Vec<usize> = (0..g.order())
            .filter(|&x| qdata.char_value(&t, q.proj[x]).is_one())
            .collect();
        debug_assert_eq!(elements.len() * 2, g.order());
        let h = super::Subgroup::from_elements(g, elements).ok()?;
        if !h.is_abelian(g) {
            continue;
        }
        let outside = (0..g.order()).find(|&x| !h.contains(x)).unwrap();
        let inverts = h.elements().iter().all(|&a| g.conj(outside, a) == g.inv(a));
        if inverts {
            let data = abelian_structure(g, &h).ok()?;
            if data.factors.len() <= 1 {
                return Some(format!("D{}", g.order()));
            }
            return Some(format!("Dih({})", abelian_name(&data.factors)));
        }
    }
    None
}
