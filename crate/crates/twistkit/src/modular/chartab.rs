//! Exact character tables. Ordinary tables are computed with the
//! class-sum eigenvector method over a prime field F_p (p = 1 mod exp(K))
//! followed by a discrete-Fourier lift of the eigenvalue data into
//! cyclotomic integers; abelian groups take a direct route through their
//! invariant factors. Projective beta-character tables are obtained from the
//! ordinary table of the central extension of K by the cyclic group generated
//! by the values of beta.

use crate::cohomology::Cochain2;
use crate::groups::{abelian_structure, conjugacy_classes, FiniteGroup};
use crate::scalars::{Cyclotomic, Rat, RootOfUnity};
use crate::Error;

/// Default bound on the order of the central extension built for projective
/// tables.
pub const CHARTAB_ORDER_BOUND: usize = 512;

/// A table of irreducible projective beta-characters of a group K, stored
/// per element of K (projective characters are class functions only up to
/// beta-factors). `beta_order == 1` means the ordinary table.
#[derive(Clone, Debug)]
pub struct ProjectiveCharacterTable {
    pub group_order: usize,
    pub beta_order: i64,
    pub conductor: i64,
    pub degrees: Vec<i64>,
    /// values[chi][element]
    pub values: Vec<Vec<Cyclotomic>>,
}

impl ProjectiveCharacterTable {
    pub fn num_chars(&self) -> usize {
        self.degrees.len()
    }

    pub fn value(&self, chi: usize, elem: usize) -> &Cyclotomic {
        &self.values[chi][elem]
    }
}

// ---------- arithmetic mod p ----------

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

fn invm(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(p: u64) -> u64 {
    // factor p - 1
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    'outer: for g in 2..p {
        for &f in &factors {
            if powm(g, (p - 1) / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("no primitive root")
}

// ---------- F_p linear algebra ----------

/// Reduced row echelon form in place; returns pivot columns.
fn rref(mat: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
    let rows = mat.len();
    if rows == 0 {
        return vec![];
    }
    let cols = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| mat[i][c] != 0) else { continue };
        mat.swap(r, pr);
        let inv = invm(mat[r][c], p);
        for x in mat[r].iter_mut() {
            *x = mulm(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && mat[i][c] != 0 {
                let f = mat[i][c];
                for cc in 0..cols {
                    let t = mulm(f, mat[r][cc], p);
                    mat[i][cc] = (mat[i][cc] + p - t) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    mat.truncate(r);
    pivots
}

/// Nullspace basis of a square matrix over F_p.
fn nullspace(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut work: Vec<Vec<u64>> = mat.to_vec();
    let pivots = rref(&mut work, p);
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in pivots.iter().enumerate() {
            // pc-th coordinate = -work[row][free]
            v[pc] = (p - work[row][free]) % p;
        }
        basis.push(v);
    }
    basis
}

// ---------- ordinary character table ----------

struct EigData {
    /// class-algebra character values omega_i mod p, one row per character
    omegas: Vec<Vec<u64>>,
}

fn class_matrices(group: &FiniteGroup, cc: &crate::groups::ConjugacyClasses) -> Vec<Vec<Vec<u64>>> {
    let t = cc.reps.len();
    let mut out = Vec::with_capacity(t);
    for i in 0..t {
        let mut n_i = vec![vec![0u64; t]; t];
        for (k, &rep_k) in cc.reps.iter().enumerate() {
            for &u in &cc.classes[i] {
                let v = group.mul(group.inv(u), rep_k);
                let j = cc.class_of[v];
                n_i[j][k] += 1;
            }
        }
        out.push(n_i);
    }
    out
}

fn simultaneous_eigenvectors(mats: &[Vec<Vec<u64>>], p: u64) -> EigData {
    let t = mats.len();
    // subspaces as lists of ambient basis vectors (rref'd)
    let mut subspaces: Vec<Vec<Vec<u64>>> = vec![{
        (0..t)
            .map(|i| (0..t).map(|j| u64::from(i == j)).collect())
            .collect()
    }];
    for mat in mats.iter().skip(1) {
        let mut next = Vec::new();
        for sub in subspaces.drain(..) {
            if sub.len() == 1 {
                next.push(sub);
                continue;
            }
            // matrix of `mat` restricted to the subspace
            let mut basis = sub.clone();
            let pivots = rref(&mut basis, p);
            let dim = basis.len();
            let mut small = vec![vec![0u64; dim]; dim];
            for (bi, b) in basis.iter().enumerate() {
                // w = mat * b
                let mut w = vec![0u64; t];
                for (r, wr) in w.iter_mut().enumerate() {
                    let mut acc = 0u64;
                    for c in 0..t {
                        acc = (acc + mulm(mat[r][c], b[c], p)) % p;
                    }
                    *wr = acc;
                }
                // coordinates of w against the rref basis
                for (ri, &pc) in pivots.iter().enumerate() {
                    let coef = w[pc];
                    small[ri][bi] = coef;
                    if coef != 0 {
                        for c in 0..t {
                            let s = mulm(coef, basis[ri][c], p);
                            w[c] = (w[c] + p - s) % p;
                        }
                    }
                }
                debug_assert!(w.iter().all(|&x| x == 0), "subspace not invariant");
            }
            // split by eigenvalues of `small`
            let mut found = 0;
            for lambda in 0..p {
                if found == dim {
                    break;
                }
                let mut shifted = small.clone();
                for i in 0..dim {
                    shifted[i][i] = (shifted[i][i] + p - lambda) % p;
                }
                let kernel = nullspace(&shifted, p);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                // map back to ambient coordinates
                let vecs: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|kv| {
                        let mut v = vec![0u64; t];
                        for (bi, b) in basis.iter().enumerate() {
                            if kv[bi] != 0 {
                                for c in 0..t {
                                    v[c] = (v[c] + mulm(kv[bi], b[c], p)) % p;
                                }
                            }
                        }
                        v
                    })
                    .collect();
                next.push(vecs);
            }
            assert_eq!(found, dim, "matrix failed to split over F_p");
        }
        subspaces = next;
        if subspaces.iter().all(|s| s.len() == 1) {
            break;
        }
    }
    assert!(
        subspaces.iter().all(|s| s.len() == 1),
        "class algebra did not split into lines"
    );
    // for each line compute the class-algebra character: omega_i such that
    // N_i v = omega_i v
    let mut omegas = Vec::new();
    for sub in &subspaces {
        let v = &sub[0];
        let lead = v.iter().position(|&x| x != 0).expect("zero eigenvector");
        let vinv = invm(v[lead], p);
        let mut row = Vec::with_capacity(t);
        for mat in mats {
            let mut acc = 0u64;
            for c in 0..t {
                acc = (acc + mulm(mat[lead][c], v[c], p)) % p;
            }
            row.push(mulm(acc, vinv, p));
        }
        omegas.push(row);
    }
    EigData { omegas }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Exact irreducible character table of `group`, values stored per element,
/// conductor = exp(group). Rows are sorted by (degree, value key) with the
/// trivial character first.
pub fn character_table(group: &FiniteGroup) -> Result<ProjectiveCharacterTable, Error> {
    if group.order() > CHARTAB_ORDER_BOUND {
        return Err(Error::bounds(format!(
            "character table order bound exceeded: {}",
            group.order()
        )));
    }
    let n = group.order();
    let conductor = group.exponent();
    let mut chars: Vec<(i64, Vec<Cyclotomic>)> = Vec::new();

    if group.is_abelian() {
        let data = abelian_structure(group, &group.full_subgroup())?;
        for t in data.characters() {
            let mut row = Vec::with_capacity(n);
            for x in 0..n {
                row.push(Cyclotomic::from_root_of_unity(
                    &data.char_value(&t, x),
                    conductor,
                ));
            }
            chars.push((1, row));
        }
    } else {
        let cc = conjugacy_classes(group);
        let tcount = cc.reps.len();
        let m = conductor as u64;
        // p = 1 mod m, p does not divide |K|, p > 2*sqrt(|K|)
        let mut p = m + 1;
        loop {
            if is_prime(p) && n as u64 % p != 0 && p > 2 * isqrt(n as u64) + 1 {
                break;
            }
            p += m;
        }
        let mats = class_matrices(group, &cc);
        let eig = simultaneous_eigenvectors(&mats, p);
        assert_eq!(eig.omegas.len(), tcount, "wrong number of characters");
        let rho = primitive_root(p);
        // inverse classes
        let inv_class: Vec<usize> = cc.reps.iter().map(|&r| cc.class_of[group.inv(r)]).collect();
        for omega in &eig.omegas {
            // degree
            let mut s = 0u64;
            for i in 0..tcount {
                let term = mulm(omega[i], omega[inv_class[i]], p);
                s = (s + mulm(term, invm(cc.classes[i].len() as u64, p), p)) % p;
            }
            let d2 = mulm(n as u64, invm(s, p), p);
            let deg = (1..=isqrt(n as u64))
                .find(|&d| mulm(d, d, p) == d2)
                .expect("no integer degree matches") as i64;
            // character values mod p per class
            let chi_mod: Vec<u64> = (0..tcount)
                .map(|i| {
                    mulm(
                        mulm(deg as u64, omega[i], p),
                        invm(cc.classes[i].len() as u64, p),
                        p,
                    )
                })
                .collect();
            // lift each class value to a cyclotomic integer
            let mut per_class: Vec<Cyclotomic> = Vec::with_capacity(tcount);
            for (i, &rep) in cc.reps.iter().enumerate() {
                let ord = group.elem_order(rep) as u64;
                let z = powm(rho, (p - 1) / ord, p);
                let zinv = invm(z, p);
                let mut value = Cyclotomic::zero(conductor);
                let ninv = invm(ord, p);
                for j in 0..ord {
                    // a_j = (1/ord) sum_t chi(rep^t) z^{-jt}
                    let mut acc = 0u64;
                    for t in 0..ord {
                        let cls = cc.class_of[group.pow(rep, t as i64)];
                        acc = (acc + mulm(chi_mod[cls], powm(zinv, j * t % (p - 1), p), p)) % p;
                    }
                    let aj = mulm(acc, ninv, p);
                    assert!(
                        aj <= deg as u64,
                        "lifted coefficient out of range: {} > {}",
                        aj,
                        deg
                    );
                    if aj != 0 {
                        let zeta = Cyclotomic::root_power(conductor, j as i64 * (conductor / ord as i64));
                        value = value.add(&zeta.scale(&Rat::from_int(aj as i64)));
                    }
                    let _ = i;
                }
                per_class.push(value);
            }
            let row: Vec<Cyclotomic> = (0..n).map(|x| per_class[cc.class_of[x]].clone()).collect();
            chars.push((deg, row));
        }
        // row orthogonality with class sizes
        for (ri, (_, row_i)) in chars.iter().enumerate() {
            for (rj, (_, row_j)) in chars.iter().enumerate() {
                let mut acc = Cyclotomic::zero(conductor);
                for (i, &rep) in cc.reps.iter().enumerate() {
                    let term = row_i[rep]
                        .mul(&row_j[rep].conj())
                        .scale(&Rat::from_int(cc.classes[i].len() as i64));
                    acc = acc.add(&term);
                }
                let expected = if ri == rj {
                    Cyclotomic::from_int(conductor, n as i64)
                } else {
                    Cyclotomic::zero(conductor)
                };
                if acc != expected {
                    return Err(Error::internal("character table fails orthogonality"));
                }
            }
        }
    }

    // deterministic row order: trivial character first, then by degree and a
    // canonical value key
    chars.sort_by_key(|(deg, row)| {
        let trivial = row.iter().all(|v| *v == Cyclotomic::one(conductor));
        let key: Vec<(i64, Vec<Rat>)> = row
            .iter()
            .map(|v| (v.conductor(), v.coeffs().to_vec()))
            .collect();
        (!trivial, *deg, key)
    });
    let sum: i64 = chars.iter().map(|(d, _)| d * d).sum();
    if sum != n as i64 {
        return Err(Error::internal(format!(
            "sum of squared degrees {} != group order {}",
            sum, n
        )));
    }
    Ok(ProjectiveCharacterTable {
        group_order: n,
        beta_order: 1,
        conductor,
        degrees: chars.iter().map(|(d, _)| *d).collect(),
        values: chars.into_iter().map(|(_, row)| row).collect(),
    })
}

/// Irreducible projective beta-characters of `group` for a normalized
/// 2-cocycle `beta` (convention: representations satisfy
/// `rho(x) rho(y) = beta(x, y) rho(x y)`), computed through the central
/// extension of `group` by the value group of beta.
pub fn projective_character_table(
    group: &FiniteGroup,
    beta: &Cochain2,
) -> Result<ProjectiveCharacterTable, Error> {
    let n = group.order();
    let m = beta.value_order();
    if m == 1 {
        return character_table(group);
    }
    if n * m as usize > CHARTAB_ORDER_BOUND {
        return Err(Error::bounds(format!(
            "central extension order {} exceeds bound",
            n * m as usize
        )));
    }
    // central extension: elements (i, x) with index i*n + x
    let idx = |i: i64, x: usize| (i.rem_euclid(m) as usize) * n + x;
    let mut table = vec![vec![0usize; n * m as usize]; n * m as usize];
    for i in 0..m {
        for x in 0..n {
            for j in 0..m {
                for y in 0..n {
                    let w = beta.value(x, y);
                    let t = w.numer() * (m / w.order());
                    table[idx(i, x)][idx(j, y)] = idx(i + j + t, group.mul(x, y));
                }
            }
        }
    }
    let names = (0..n * m as usize)
        .map(|e| format!("z{}.{}", e / n, e % n))
        .collect();
    let ext = FiniteGroup::from_table(table, names)?;
    let full = character_table(&ext)?;
    // keep rows where the central generator z = (1, identity) acts by zeta_m
    let z = idx(1, 0);
    let zeta = Cyclotomic::from_root_of_unity(&RootOfUnity::new(1, m), full.conductor);
    let mut degrees = Vec::new();
    let mut values = Vec::new();
    for chi in 0..full.num_chars() {
        let deg = full.degrees[chi];
        let expected = zeta.scale(&Rat::from_int(deg));
        if *full.value(chi, z) == expected {
            degrees.push(deg);
            values.push((0..n).map(|x| full.value(chi, idx(0, x)).clone()).collect());
        }
    }
    let sum: i64 = degrees.iter().map(|d| d * d).sum();
    if sum != n as i64 {
        return Err(Error::internal(format!(
            "projective table: sum of squared degrees {} != {}",
            sum, n
        )));
    }
    Ok(ProjectiveCharacterTable {
        group_order: n,
        beta_order: m,
        conductor: full.conductor,
        degrees,
        values,
    })
}
