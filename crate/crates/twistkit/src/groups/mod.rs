//! Finite group arithmetic on dense multiplication tables: construction,
//! conjugacy structure, subgroups, cosets, quotients, abelian invariants,
//! and isomorphism testing for small orders.

mod build;
mod iso;

pub use build::{
    abelian, alternating, dicyclic, dihedral, direct_product, from_permutations,
    generalized_dihedral, metacyclic, parse_group_spec, semidirect_cyclic, small_groups,
    special_linear, symmetric, GroupSpec,
};
pub use iso::{is_isomorphic, is_isomorphic_bounded, name_group, ISO_ORDER_BOUND};

use crate::linalg::smith_normal_form;
use crate::scalars::{lcm, RootOfUnity};
use crate::Error;

/// Maximum order for which group axioms are verified exhaustively at
/// construction time.
pub const VALIDATE_ORDER_BOUND: usize = 512;

/// A finite group given by its full multiplication table. Element 0 is the
/// identity. Immutable after construction; all operations are pure.
#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    names: Vec<String>,
    elem_orders: Vec<u32>,
}

impl FiniteGroup {
    /// Build from a multiplication table (`table[a][b] = a*b`), verifying the
    /// group axioms exhaustively. The identity may sit at any index; elements
    /// are renumbered so that it becomes index 0.
    pub fn from_table(table: Vec<Vec<usize>>, names: Vec<String>) -> Result<FiniteGroup, Error> {
        let n = table.len();
        if n == 0 {
            return Err(Error::invalid("empty multiplication table"));
        }
        if n > VALIDATE_ORDER_BOUND {
            return Err(Error::bounds(format!(
                "order {} exceeds validation bound {}",
                n, VALIDATE_ORDER_BOUND
            )));
        }
        if names.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::invalid("malformed multiplication table"));
        }
        for row in &table {
            if row.iter().any(|&x| x >= n) {
                return Err(Error::invalid("table entry out of range"));
            }
        }
        // locate the identity
        let mut identity = None;
        for e in 0..n {
            if (0..n).all(|a| table[e][a] == a && table[a][e] == a) {
                identity = Some(e);
                break;
            }
        }
        let Some(e) = identity else {
            return Err(Error::invalid("table has no identity element"));
        };
        // renumber so the identity is 0
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(0, e);
        let mut inv_perm = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inv_perm[old] = new;
        }
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = inv_perm[table[perm[a]][perm[b]]] as u32;
            }
        }
        let new_names: Vec<String> = perm.iter().map(|&old| names[old].clone()).collect();
        let g = FiniteGroup::finish(n, mul, new_names)?;
        Ok(g)
    }

    fn finish(n: usize, mul: Vec<u32>, names: Vec<String>) -> Result<FiniteGroup, Error> {
        // associativity
        for a in 0..n {
            for b in 0..n {
                let ab = mul[a * n + b] as usize;
                for c in 0..n {
                    let bc = mul[b * n + c] as usize;
                    if mul[ab * n + c] != mul[a * n + bc] {
                        return Err(Error::invalid(format!(
                            "non-associative table at ({}, {}, {})",
                            a, b, c
                        )));
                    }
                }
            }
        }
        // inverses
        let mut inv = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    if mul[b * n + a] != 0 {
                        return Err(Error::invalid("one-sided inverse"));
                    }
                    inv[a] = b as u32;
                }
            }
            if inv[a] == u32::MAX {
                return Err(Error::invalid(format!("element {} has no inverse", a)));
            }
        }
        {
            let mut seen = std::collections::HashSet::new();
            for name in &names {
                if !seen.insert(name.clone()) {
                    return Err(Error::invalid(format!("duplicate element name {:?}", name)));
                }
            }
        }
        let mut elem_orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            elem_orders[a] = k;
        }
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            names,
            elem_orders,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// g * a * g^{-1}
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn elem_order(&self, a: usize) -> usize {
        self.elem_orders[a] as usize
    }

    pub fn elem_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ord = self.elem_order(a) as i64;
        let mut k = k.rem_euclid(ord);
        let mut acc = 0usize;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> i64 {
        let mut m = 1i64;
        for a in 0..self.order {
            m = lcm(m, self.elem_orders[a] as i64);
        }
        m
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in a + 1..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn center(&self) -> Subgroup {
        let elements = (0..self.order)
            .filter(|&a| (0..self.order).all(|g| self.mul(a, g) == self.mul(g, a)))
            .collect();
        Subgroup { elements }
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let mut gens = Vec::new();
        for a in 0..self.order {
            for b in 0..self.order {
                let c = self.mul(
                    self.mul(a, b),
                    self.mul(self.inv(a), self.inv(b)),
                );
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.closure(&gens)
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut elements = vec![0usize];
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !in_set[y] {
                    in_set[y] = true;
                    elements.push(y);
                    frontier.push(y);
                }
            }
        }
        elements.sort_unstable();
        Subgroup { elements }
    }

    /// A small generating set, chosen deterministically.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut span = self.closure(&gens);
        for a in 1..self.order {
            if span.len() == self.order {
                break;
            }
            if !span.contains(a) {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { elements: vec![0] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: (0..self.order).collect(),
        }
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

/// A subgroup, stored as a sorted set of element indices of the parent group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
}

impl Subgroup {
    pub fn from_elements(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Subgroup, Error> {
        elements.sort_unstable();
        elements.dedup();
        let s = Subgroup { elements };
        if !s.is_subgroup(group) {
            return Err(Error::invalid("element set is not a subgroup"));
        }
        Ok(s)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// Position of element `a` inside the sorted element list.
    pub fn index_of(&self, a: usize) -> Option<usize> {
        self.elements.binary_search(&a).ok()
    }

    pub fn is_subgroup(&self, group: &FiniteGroup) -> bool {
        if !self.contains(0) {
            return false;
        }
        for &a in &self.elements {
            if !self.contains(group.inv(a)) {
                return false;
            }
            for &b in &self.elements {
                if !self.contains(group.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_abelian(&self, group: &FiniteGroup) -> bool {
        for &a in &self.elements {
            for &b in &self.elements {
                if group.mul(a, b) != group.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        for g in 0..group.order() {
            for &a in &self.elements {
                if !self.contains(group.conj(g, a)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Conjugacy class data: canonical representatives (minimal index per class,
/// ascending, so the identity class comes first), membership, and for every
/// element a fixed conjugator from its class representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub reps: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `conjugator[e] = g` with `e = g * rep * g^{-1}`.
    pub conjugator: Vec<usize>,
}

pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyClasses {
    let n = group.order();
    let mut class_of = vec![usize::MAX; n];
    let mut conjugator = vec![0usize; n];
    let mut reps = Vec::new();
    let mut classes = Vec::new();
    for a in 0..n {
        if class_of[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(a);
        let mut members = Vec::new();
        // orbit of a under conjugation, tracking a witness conjugator
        let mut stack = vec![(a, 0usize)];
        class_of[a] = idx;
        conjugator[a] = 0;
        members.push(a);
        while let Some((x, gx)) = stack.pop() {
            for g in 0..n {
                let y = group.conj(g, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = idx;
                    // y = g x g^{-1} = (g gx) a (g gx)^{-1}
                    let w = group.mul(g, gx);
                    conjugator[y] = w;
                    members.push(y);
                    stack.push((y, w));
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    ConjugacyClasses {
        reps,
        classes,
        class_of,
        conjugator,
    }
}

pub fn centralizer(group: &FiniteGroup, a: usize) -> Subgroup {
    let elements = (0..group.order())
        .filter(|&g| group.mul(g, a) == group.mul(a, g))
        .collect();
    Subgroup { elements }
}

/// All normal abelian subgroups of `group`, sorted by order then by element
/// set. Always contains the trivial subgroup.
pub fn normal_abelian_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let cc = conjugacy_classes(group);
    let mut found: std::collections::BTreeSet<Subgroup> = std::collections::BTreeSet::new();
    let trivial = group.trivial_subgroup();
    let mut queue = vec![trivial.clone()];
    found.insert(trivial);
    while let Some(h) = queue.pop() {
        for class in &cc.classes {
            // adding a full conjugacy class keeps the closure normal
            if class.iter().all(|&x| h.contains(x)) {
                continue;
            }
            let mut gens: Vec<usize> = h.elements().to_vec();
            gens.extend_from_slice(class);
            let bigger = group.closure(&gens);
            if bigger.is_abelian(group) && !found.contains(&bigger) {
                found.insert(bigger.clone());
                queue.push(bigger);
            }
        }
    }
    let mut out: Vec<Subgroup> = found.into_iter().collect();
    out.sort_by(|a, b| (a.len(), a.elements()).cmp(&(b.len(), b.elements())));
    out
}

/// Right cosets H\G as sorted element sets, trivial coset first, the rest
/// ordered by minimal element.
pub fn right_cosets(group: &FiniteGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let n = group.order();
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let mut coset: Vec<usize> = h.elements().iter().map(|&a| group.mul(a, x)).collect();
        coset.sort_unstable();
        for &y in &coset {
            seen[y] = true;
        }
        cosets.push(coset);
    }
    cosets.sort_by_key(|c| c[0]);
    cosets
}

/// Materialize a subgroup as a standalone group; returns the group together
/// with the element map (new index -> parent element). The identity keeps
/// index 0 because subgroup element lists are sorted.
pub fn subgroup_group(group: &FiniteGroup, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), Error> {
    let elems = h.elements().to_vec();
    let k = elems.len();
    let mut table = vec![vec![0usize; k]; k];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            let p = group.mul(a, b);
            table[i][j] = elems
                .binary_search(&p)
                .map_err(|_| Error::invalid("element set is not closed"))?;
        }
    }
    let names = elems.iter().map(|&e| group.name(e).to_string()).collect();
    let g = FiniteGroup::from_table(table, names)?;
    Ok((g, elems))
}

/// Quotient of `group` by a normal subgroup: the coset group together with
/// the projection map.
pub struct QuotientGroup {
    pub group: FiniteGroup,
    /// element of the parent -> coset index in the quotient
    pub proj: Vec<usize>,
}

pub fn quotient_group(group: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup, Error> {
    if !n.is_normal(group) {
        return Err(Error::invalid("subgroup is not normal"));
    }
    let cosets = right_cosets(group, n);
    let k = cosets.len();
    let mut proj = vec![0usize; group.order()];
    for (i, coset) in cosets.iter().enumerate() {
        for &x in coset {
            proj[x] = i;
        }
    }
    let mut table = vec![vec![0usize; k]; k];
    for (i, ci) in cosets.iter().enumerate() {
        for (j, cj) in cosets.iter().enumerate() {
            table[i][j] = proj[group.mul(ci[0], cj[0])];
        }
    }
    let names = cosets
        .iter()
        .map(|c| format!("[{}]", group.name(c[0])))
        .collect();
    let q = FiniteGroup::from_table(table, names)?;
    // from_table keeps index order here because coset 0 contains the identity
    Ok(QuotientGroup { group: q, proj })
}

/// Invariant-factor decomposition of an abelian subgroup, with generators and
/// per-element coordinates. The character group is realized as exponent
/// tuples against the generators.
#[derive(Clone, Debug)]
pub struct AbelianGroupData {
    /// invariant factors n_1 | n_2 | ... | n_r (all > 1)
    pub factors: Vec<i64>,
    /// generator element indices in the parent group, one per factor
    pub generators: Vec<usize>,
    /// sorted element list (same as the subgroup)
    pub elements: Vec<usize>,
    /// coords[i] = coordinates of elements[i] against the generators
    pub coords: Vec<Vec<i64>>,
}

pub fn abelian_structure(group: &FiniteGroup, h: &Subgroup) -> Result<AbelianGroupData, Error> {
    if !h.is_abelian(group) {
        return Err(Error::invalid("subgroup is not abelian"));
    }
    // greedy generating set, ascending element index
    let mut gens: Vec<usize> = Vec::new();
    let mut span = group.closure(&gens);
    for &a in h.elements() {
        if span.len() == h.len() {
            break;
        }
        if !span.contains(a) {
            gens.push(a);
            let mut g2 = gens.clone();
            g2.sort_unstable();
            span = group.closure(&g2);
        }
    }
    if gens.is_empty() {
        return Ok(AbelianGroupData {
            factors: vec![],
            generators: vec![],
            elements: h.elements().to_vec(),
            coords: vec![vec![]; h.len()],
        });
    }
    // relation lattice: all exponent tuples in the box mapping to identity
    let orders: Vec<i64> = gens.iter().map(|&g| group.elem_order(g) as i64).collect();
    let k = gens.len();
    let mut relations: Vec<Vec<i64>> = Vec::new();
    for i in 0..k {
        let mut row = vec![0i64; k];
        row[i] = orders[i];
        relations.push(row);
    }
    let mut tuple = vec![0i64; k];
    loop {
        // evaluate product
        let mut x = 0usize;
        for (i, &g) in gens.iter().enumerate() {
            x = group.mul(x, group.pow(g, tuple[i]));
        }
        if x == 0 {
            relations.push(tuple.clone());
        }
        // increment mixed-radix tuple
        let mut i = 0;
        loop {
            if i == k {
                break;
            }
            tuple[i] += 1;
            if tuple[i] < orders[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    let (diag, vinv) = smith_normal_form(&relations);
    // new generators h_i = prod_j g_j^{vinv[i][j]} with orders diag[i]
    let mut factors = Vec::new();
    let mut new_gens = Vec::new();
    for i in 0..k {
        if diag[i] > 1 {
            factors.push(diag[i]);
            let mut x = 0usize;
            for (j, &g) in gens.iter().enumerate() {
                x = group.mul(x, group.pow(g, vinv[i][j]));
            }
            new_gens.push(x);
        } else if diag[i] == 0 {
            return Err(Error::internal("abelian relation lattice not full rank"));
        }
    }
    // coordinates by enumeration
    let total: i64 = factors.iter().product::<i64>().max(1);
    if total as usize != h.len() {
        return Err(Error::internal(format!(
            "invariant factor product {} != subgroup order {}",
            total,
            h.len()
        )));
    }
    let mut coord_of = vec![None; group.order()];
    let mut tuple = vec![0i64; factors.len()];
    loop {
        let mut x = 0usize;
        for (i, &g) in new_gens.iter().enumerate() {
            x = group.mul(x, group.pow(g, tuple[i]));
        }
        if coord_of[x].is_some() {
            return Err(Error::internal("generators do not decompose the subgroup"));
        }
        coord_of[x] = Some(tuple.clone());
        let mut i = 0;
        loop {
            if i == factors.len() {
                break;
            }
            tuple[i] += 1;
            if tuple[i] < factors[i] {
                break;
            }
            tuple[i] = 0;
            i += 1;
        }
        if i == factors.len() {
            break;
        }
    }
    let coords = h
        .elements()
        .iter()
        .map(|&x| coord_of[x].clone().ok_or_else(|| Error::internal("element not covered")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AbelianGroupData {
        factors,
        generators: new_gens,
        elements: h.elements().to_vec(),
        coords,
    })
}

impl AbelianGroupData {
    pub fn coords_of(&self, elem: usize) -> &[i64] {
        let i = self
            .elements
            .binary_search(&elem)
            .expect("element not in subgroup");
        &self.coords[i]
    }

    /// Value of the character indexed by `t` (exponent tuple against the
    /// generators) at the given element.
    pub fn char_value(&self, t: &[i64], elem: usize) -> RootOfUnity {
        let c = self.coords_of(elem);
        let mut acc = RootOfUnity::ONE;
        for i in 0..self.factors.len() {
            acc = acc.mul(&RootOfUnity::new(t[i] * c[i], self.factors[i]));
        }
        acc
    }

    /// All character exponent tuples, in mixed-radix order.
    pub fn characters(&self) -> Vec<Vec<i64>> {
        let mut out = Vec::new();
        let mut tuple = vec![0i64; self.factors.len()];
        loop {
            out.push(tuple.clone());
            let mut i = 0;
            loop {
                if i == self.factors.len() {
                    break;
                }
                tuple[i] += 1;
                if tuple[i] < self.factors[i] {
                    break;
                }
                tuple[i] = 0;
                i += 1;
            }
            if i == self.factors.len() {
                break;
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::build::*;

    #[test]
    fn dihedral4_structure() {
        let g = GroupSpec::Dihedral(4).build().unwrap();
        assert_eq!(g.order(), 8);
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.reps.len(), 5);
        let nab = normal_abelian_subgroups(&g);
        assert_eq!(nab.len(), 5);
        // r^2 is central
        let r2 = g.elem_by_name("r2").unwrap();
        assert_eq!(centralizer(&g, r2).len(), 8);
        assert_eq!(centralizer(&g, 0).len(), 8);
    }

    #[test]
    fn symmetric3_classes_and_cosets() {
        let g = GroupSpec::Symmetric(3).build().unwrap();
        assert_eq!(g.order(), 6);
        let cc = conjugacy_classes(&g);
        assert_eq!(cc.reps.len(), 3);
        // class sizes sum to |G| and divide |G|
        let total: usize = cc.classes.iter().map(|c| c.len()).sum();
        assert_eq!(total, 6);
        for c in &cc.classes {
            assert_eq!(6 % c.len(), 0);
        }
        let nab = normal_abelian_subgroups(&g);
        assert_eq!(nab.len(), 2);
        // cosets of an order-2 subgroup
        let t = (1..6).find(|&a| g.elem_order(a) == 2).unwrap();
        let h = g.closure(&[t]);
        let cosets = right_cosets(&g, &h);
        assert_eq!(cosets.len(), 3);
        for c in &cosets {
            assert_eq!(c.len(), 2);
        }
    }

    #[test]
    fn alternating5_normal_abelian() {
        let g = GroupSpec::Alternating(5).build().unwrap();
        assert_eq!(g.order(), 60);
        let nab = normal_abelian_subgroups(&g);
        assert_eq!(nab.len(), 1);
        assert_eq!(nab[0].len(), 1);
    }

    #[test]
    fn abelian_structure_examples() {
        // Z2 x Z2 inside D8 (the subgroup <r2, s>)
        let g = GroupSpec::Dihedral(4).build().unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let h = g.closure(&[r2, s]);
        let data = abelian_structure(&g, &h).unwrap();
        assert_eq!(data.factors, vec![2, 2]);
        // cyclic <r> has factors [4]
        let r = g.elem_by_name("r").unwrap();
        let hr = g.closure(&[r]);
        assert_eq!(abelian_structure(&g, &hr).unwrap().factors, vec![4]);
        // trivial subgroup
        let t = g.trivial_subgroup();
        assert!(abelian_structure(&g, &t).unwrap().factors.is_empty());
    }

    #[test]
    fn quotient_d8_by_r2_s() {
        let g = GroupSpec::Dihedral(4).build().unwrap();
        let r2 = g.elem_by_name("r2").unwrap();
        let s = g.elem_by_name("s").unwrap();
        let k = g.closure(&[r2, s]);
        let q = quotient_group(&g, &k).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(q.proj[g.elem_by_name("r").unwrap()], 1);
    }

    #[test]
    fn conjugator_witnesses() {
        let g = GroupSpec::Symmetric(4).build().unwrap();
        let cc = conjugacy_classes(&g);
        for e in 0..g.order() {
            let rep = cc.reps[cc.class_of[e]];
            let w = cc.conjugator[e];
            assert_eq!(g.conj(w, rep), e);
        }
    }

    #[test]
    fn normal_abelian_subgroups_are_conjugation_stable() {
        for spec in [GroupSpec::Dihedral(4), GroupSpec::Symmetric(4), GroupSpec::Quaternion] {
            let g = spec.build().unwrap();
            for h in normal_abelian_subgroups(&g) {
                assert!(h.is_normal(&g));
                assert!(h.is_abelian(&g));
            }
        }
    }
}
