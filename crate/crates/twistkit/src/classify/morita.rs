//! Categorical Morita candidate classes for lists of (G, omega) pairs:
//! pairwise evidence of equivalence (a label whose dual group matches,
//! certified by an exact modular-data match) or distinction (label-multiset
//! or modular-data invariants), with honest `undecided` outcomes. Includes
//! the enumeration of 3-cocycle class representatives on abelian groups used
//! by the equivalence-witness search.

use super::{dual_group, lagrangian_labels};
use crate::cohomology::Cochain3;
use crate::groups::{abelian_structure, is_isomorphic, FiniteGroup};
use crate::modular::{modular_data, modular_equivalent, ModularData};
use crate::scalars::{gcd, RootOfUnity};
use crate::Error;

/// Evidence for one pair of (G, omega) entries.
#[derive(Clone, Debug)]
pub enum MoritaEvidence {
    /// an untwisted label of the first entry whose dual group is isomorphic
    /// to the second group, certified by an exact (S, T, d) match
    EquivalentWitness { label_index: usize, detail: String },
    /// a mismatched computable invariant
    Distinguished { invariant: String },
    /// nothing decided either way; the note records what was consistent
    Undecided { note: String },
}

#[derive(Clone, Debug)]
pub struct MoritaEntry {
    pub group: FiniteGroup,
    pub omega: Cochain3,
    pub descriptor: String,
}

#[derive(Debug)]
pub struct MoritaClassReport {
    pub descriptors: Vec<String>,
    pub matrix: Vec<Vec<MoritaEvidence>>,
}

/// Sorted multiset of (|H|, number of invariant bicharacters on H) over
/// admissible subgroups.
fn label_multiset(group: &FiniteGroup, omega: &Cochain3) -> Result<Vec<(usize, usize)>, Error> {
    let labels = lagrangian_labels(group, omega)?;
    let mut counts: std::collections::BTreeMap<Vec<usize>, (usize, usize)> =
        std::collections::BTreeMap::new();
    for l in &labels {
        let key = l.subgroup.elements().to_vec();
        let entry = counts.entry(key).or_insert((l.subgroup.len(), 0));
        entry.1 += 1;
    }
    let mut out: Vec<(usize, usize)> = counts.into_values().collect();
    out.sort_unstable();
    Ok(out)
}

/// Pairwise Morita evidence for the given entries. Modular data is consulted
/// for groups of order at most `modular_bound`.
pub fn morita_classes(
    entries: &[MoritaEntry],
    modular_bound: usize,
) -> Result<MoritaClassReport, Error> {
    let n = entries.len();
    let multisets: Vec<Vec<(usize, usize)>> = entries
        .iter()
        .map(|e| label_multiset(&e.group, &e.omega))
        .collect::<Result<Vec<_>, _>>()?;
    let data: Vec<Option<ModularData>> = entries
        .iter()
        .map(|e| {
            if e.group.order() <= modular_bound {
                modular_data(&e.group, &e.omega).map(Some)
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;

    let mut matrix: Vec<Vec<MoritaEvidence>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            if j < i {
                let mirrored = matrix[j][i].clone();
                matrix[i].push(mirrored);
                continue;
            }
            if i == j {
                matrix[i].push(MoritaEvidence::EquivalentWitness {
                    label_index: 0,
                    detail: "identity".to_string(),
                });
                continue;
            }
            let ev = decide_pair(
                &entries[i],
                &entries[j],
                &multisets[i],
                &multisets[j],
                data[i].as_ref(),
                data[j].as_ref(),
            )?;
            matrix[i].push(ev);
        }
    }
    Ok(MoritaClassReport {
        descriptors: entries.iter().map(|e| e.descriptor.clone()).collect(),
        matrix,
    })
}

fn decide_pair(
    e1: &MoritaEntry,
    e2: &MoritaEntry,
    m1: &[(usize, usize)],
    m2: &[(usize, usize)],
    d1: Option<&ModularData>,
    d2: Option<&ModularData>,
) -> Result<MoritaEvidence, Error> {
    if m1 != m2 {
        return Ok(MoritaEvidence::Distinguished {
            invariant: format!("label multiset {:?} vs {:?}", m1, m2),
        });
    }
    if let (Some(d1), Some(d2)) = (d1, d2) {
        if d1.objects.len() != d2.objects.len() || d1.t_spectrum() != d2.t_spectrum() {
            return Ok(MoritaEvidence::Distinguished {
                invariant: "modular (S,T) spectra differ".to_string(),
            });
        }
        if modular_equivalent(d1, d2).is_none() {
            return Ok(MoritaEvidence::Distinguished {
                invariant: "no (S,T,d)-preserving bijection of simple objects".to_string(),
            });
        }
        // modular data matches; look for a structural witness: an untwisted
        // label of one side whose dual group is the other group
        for (k, e, other) in [(0usize, e1, e2), (1usize, e2, e1)] {
            if !e.omega.is_trivial() {
                continue;
            }
            let labels = lagrangian_labels(&e.group, &e.omega)?;
            for (li, label) in labels.iter().enumerate() {
                let dual = dual_group(&e.group, &e.omega, &label.witness)?;
                if dual.group.order() == other.group.order()
                    && is_isomorphic(&dual.group, &other.group)?.is_some()
                {
                    return Ok(MoritaEvidence::EquivalentWitness {
                        label_index: li,
                        detail: format!(
                            "label #{} of {} has dual group isomorphic to {}; modular data match",
                            li,
                            if k == 0 { &e1.descriptor } else { &e2.descriptor },
                            other.descriptor
                        ),
                    });
                }
            }
        }
        return Ok(MoritaEvidence::Undecided {
            note: "modular-data consistent; no structural witness found".to_string(),
        });
    }
    Ok(MoritaEvidence::Undecided {
        note: "modular data outside bound; label multisets agree".to_string(),
    })
}

/// Representatives of all 3-cocycle classes on an abelian group, as products
/// of the standard type I / type II / type III generators against the
/// invariant factor decomposition. Each candidate is verified to satisfy the
/// cocycle identity.
pub fn enumerate_abelian_cocycles(group: &FiniteGroup) -> Result<Vec<Cochain3>, Error> {
    if !group.is_abelian() {
        return Err(Error::unsupported(
            "cocycle enumeration implemented for abelian groups only",
        ));
    }
    let data = abelian_structure(group, &group.full_subgroup())?;
    let r = data.factors.len();
    // basis: (kind, i, j, l, modulus)
    struct Basis {
        i: usize,
        j: usize,
        l: usize,
        kind: u8,
        modulus: i64,
    }
    let mut basis = Vec::new();
    for i in 0..r {
        basis.push(Basis { i, j: 0, l: 0, kind: 1, modulus: data.factors[i] });
    }
    for i in 0..r {
        for j in i + 1..r {
            basis.push(Basis { i, j, l: 0, kind: 2, modulus: gcd(data.factors[i], data.factors[j]) });
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            for l in j + 1..r {
                basis.push(Basis {
                    i,
                    j,
                    l,
                    kind: 3,
                    modulus: gcd(gcd(data.factors[i], data.factors[j]), data.factors[l]),
                });
            }
        }
    }
    let total: i64 = basis.iter().map(|b| b.modulus).product();
    if total > 4096 {
        return Err(Error::bounds(format!(
            "cocycle class count {} exceeds enumeration bound",
            total
        )));
    }
    let n = group.order();
    let value = |b: &Basis, e: i64, x: usize, y: usize, z: usize| -> RootOfUnity {
        let cx = data.coords_of(x);
        let cy = data.coords_of(y);
        let cz = data.coords_of(z);
        match b.kind {
            1 => {
                let ni = data.factors[b.i];
                let carry = (cy[b.i] + cz[b.i] - (cy[b.i] + cz[b.i]).rem_euclid(ni)) / ni;
                RootOfUnity::new(e * cx[b.i] * carry, ni)
            }
            2 => {
                let nj = data.factors[b.j];
                let carry = (cy[b.j] + cz[b.j] - (cy[b.j] + cz[b.j]).rem_euclid(nj)) / nj;
                RootOfUnity::new(e * cx[b.i] * carry, data.factors[b.i])
            }
            _ => RootOfUnity::new(e * cx[b.i] * cy[b.j] * cz[b.l], b.modulus),
        }
    };
    let mut out = Vec::new();
    let mut exps = vec![0i64; basis.len()];
    loop {
        let omega = Cochain3::from_fn((0..n).collect(), |x, y, z| {
            let mut acc = RootOfUnity::ONE;
            for (b, &e) in basis.iter().zip(&exps) {
                if e != 0 {
                    acc = acc.mul(&value(b, e, x, y, z));
                }
            }
            acc
        });
        debug_assert!(omega.is_cocycle(group), "basis product failed cocycle identity");
        out.push(omega);
        let mut i = 0;
        loop {
            if i == basis.len() {
                break;
            }
            exps[i] += 1;
            if exps[i] < basis[i].modulus {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
        if i == basis.len() {
            break;
        }
    }
    Ok(out)
}

/// Search the 3-cocycle classes of an abelian `group` for one whose twisted
/// double matches `target` exactly; returns the cocycle and the object
/// permutation.
pub fn find_equivalent_twist(
    target: &ModularData,
    group: &FiniteGroup,
) -> Result<Option<(Cochain3, Vec<usize>)>, Error> {
    for omega in enumerate_abelian_cocycles(group)? {
        let builder = crate::modular::simple_objects(group, &omega)?;
        if builder.objects().len() != target.objects.len() {
            continue;
        }
        let data = crate::modular::s_matrix(builder)?;
        if data.t_spectrum() != target.t_spectrum() {
            continue;
        }
        if let Some(perm) = modular_equivalent(target, &data) {
            return Ok(Some((omega, perm)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{dihedral, GroupSpec};

    #[test]
    fn cocycle_enumeration_counts() {
        // |H^3(Z2^3)| = 2^3 (type I) * 2^3 (type II) * 2 (type III) = 128
        let g = GroupSpec::Abelian(vec![2, 2, 2]).build().unwrap();
        let all = enumerate_abelian_cocycles(&g).unwrap();
        assert_eq!(all.len(), 128);
        for omega in all.iter().take(16) {
            assert!(omega.is_cocycle(&g));
        }
        // |H^3(Z4)| = 4
        let z4 = GroupSpec::Abelian(vec![4]).build().unwrap();
        assert_eq!(enumerate_abelian_cocycles(&z4).unwrap().len(), 4);
    }

    #[test]
    fn d8_vs_q8_distinguished() {
        let d8 = dihedral(4).unwrap();
        let q8 = GroupSpec::Quaternion.build().unwrap();
        let entries = vec![
            MoritaEntry {
                omega: Cochain3::trivial_on_group(&d8),
                group: d8,
                descriptor: "dihedral 4".to_string(),
            },
            MoritaEntry {
                omega: Cochain3::trivial_on_group(&q8),
                group: q8,
                descriptor: "quaternion".to_string(),
            },
        ];
        let report = morita_classes(&entries, 16).unwrap();
        assert!(matches!(
            report.matrix[0][1],
            MoritaEvidence::Distinguished { .. }
        ));
        assert!(matches!(
            report.matrix[0][0],
            MoritaEvidence::EquivalentWitness { .. }
        ));
        // symmetry
        assert!(matches!(
            report.matrix[1][0],
            MoritaEvidence::Distinguished { .. }
        ));
    }
}
