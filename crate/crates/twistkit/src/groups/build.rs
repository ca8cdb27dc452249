//! Group constructors: named families, permutation generators, explicit
//! tables, abelian products, semidirect and metacyclic presentations, and
//! the catalog of all groups of order <= 16.

use super::{quotient_group, FiniteGroup, Subgroup};
use crate::Error;
use std::path::PathBuf;

/// Parsed form of the textual group-spec DSL.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Dihedral(usize),
    Quaternion,
    Symmetric(usize),
    Alternating(usize),
    Sl(usize, usize),
    Abelian(Vec<i64>),
    Table(PathBuf),
    Perm(PathBuf),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup, Error> {
        match self {
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Quaternion => dicyclic(2),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::Alternating(n) => alternating(*n),
            GroupSpec::Sl(n, q) => special_linear(*n, *q),
            GroupSpec::Abelian(f) => abelian(f),
            GroupSpec::Table(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::parse(format!("cannot read table file: {}", e)))?;
                table_from_text(&text)
            }
            GroupSpec::Perm(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::parse(format!("cannot read perm file: {}", e)))?;
                let gens = text
                    .lines()
                    .filter(|l| !l.trim().is_empty())
                    .map(parse_cycles)
                    .collect::<Result<Vec<_>, _>>()?;
                from_permutations(&gens)
            }
        }
    }
}

impl std::fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupSpec::Dihedral(n) => write!(f, "dihedral {}", n),
            GroupSpec::Quaternion => write!(f, "quaternion"),
            GroupSpec::Symmetric(n) => write!(f, "sym {}", n),
            GroupSpec::Alternating(n) => write!(f, "alt {}", n),
            GroupSpec::Sl(n, q) => write!(f, "sl {} {}", n, q),
            GroupSpec::Abelian(v) => {
                write!(f, "abelian")?;
                for x in v {
                    write!(f, " {}", x)?;
                }
                Ok(())
            }
            GroupSpec::Table(p) => write!(f, "table {}", p.display()),
            GroupSpec::Perm(p) => write!(f, "perm {}", p.display()),
        }
    }
}

/// Parse the textual DSL: `dihedral 4`, `quaternion`, `sym 4`, `alt 5`,
/// `sl 2 3`, `abelian 2 2`, `table <file>`, `perm <file>`.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, Error> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    let arg = |i: usize| -> Result<usize, Error> {
        tokens
            .get(i)
            .ok_or_else(|| Error::parse(format!("group spec {:?}: missing argument", text)))?
            .parse::<usize>()
            .map_err(|_| Error::parse(format!("group spec {:?}: bad integer", text)))
    };
    match tokens.first() {
        Some(&"dihedral") => Ok(GroupSpec::Dihedral(arg(1)?)),
        Some(&"quaternion") => Ok(GroupSpec::Quaternion),
        Some(&"sym") => Ok(GroupSpec::Symmetric(arg(1)?)),
        Some(&"alt") => Ok(GroupSpec::Alternating(arg(1)?)),
        Some(&"sl") => Ok(GroupSpec::Sl(arg(1)?, arg(2)?)),
        Some(&"abelian") => {
            let factors = tokens[1..]
                .iter()
                .map(|t| {
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(format!("group spec {:?}: bad factor", text)))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if factors.is_empty() {
                return Err(Error::parse("abelian spec needs at least one factor"));
            }
            Ok(GroupSpec::Abelian(factors))
        }
        Some(&"table") => Ok(GroupSpec::Table(PathBuf::from(
            tokens.get(1).ok_or_else(|| Error::parse("table spec needs a path"))?,
        ))),
        Some(&"perm") => Ok(GroupSpec::Perm(PathBuf::from(
            tokens.get(1).ok_or_else(|| Error::parse("perm spec needs a path"))?,
        ))),
        _ => Err(Error::parse(format!("unknown group spec {:?}", text))),
    }
}

fn table_from_text(text: &str) -> Result<FiniteGroup, Error> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::parse("table file: bad integer"))
    });
    let n = nums
        .next()
        .ok_or_else(|| Error::parse("table file: empty"))??;
    let mut table = vec![vec![0usize; n]; n];
    for row in table.iter_mut() {
        for cell in row.iter_mut() {
            *cell = nums
                .next()
                .ok_or_else(|| Error::parse("table file: too few entries"))??;
        }
    }
    let names = (0..n).map(|i| format!("g{}", i)).collect();
    FiniteGroup::from_table(table, names)
}

/// Dihedral group of order 2n with presentation r^n = s^2 = 1, rs = sr^{-1}.
/// Elements are s^j r^i named `e, r, r2, ..., s, sr, sr2, ...`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, Error> {
    if n == 0 {
        return Err(Error::parse("dihedral parameter must be >= 1"));
    }
    let order = 2 * n;
    let idx = |j: usize, i: usize| j * n + i;
    let mut table = vec![vec![0usize; order]; order];
    for j in 0..2 {
        for i in 0..n {
            for j2 in 0..2 {
                for i2 in 0..n {
                    // s^j r^i * s^j2 r^i2 = s^{j+j2} r^{(-1)^{j2} i + i2}
                    let jj = (j + j2) % 2;
                    let ii = if j2 == 1 {
                        (n - i % n + i2) % n
                    } else {
                        (i + i2) % n
                    };
                    table[idx(j, i)][idx(j2, i2)] = idx(jj, ii);
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for j in 0..2 {
        for i in 0..n {
            let name = match (j, i) {
                (0, 0) => "e".to_string(),
                (0, 1) => "r".to_string(),
                (0, i) => format!("r{}", i),
                (_, 0) => "s".to_string(),
                (_, 1) => "sr".to_string(),
                (_, i) => format!("sr{}", i),
            };
            names.push(name);
        }
    }
    FiniteGroup::from_table(table, names)
}

/// Metacyclic presentation `<a, b | a^n = 1, b^m = a^s, b a b^{-1} = a^t>`.
pub fn metacyclic(n: usize, m: usize, t: i64, s: i64) -> Result<FiniteGroup, Error> {
    let n_i = n as i64;
    // validity: t^m = 1 mod n and s(t-1) = 0 mod n
    let mut tm = 1i64;
    for _ in 0..m {
        tm = (tm * t).rem_euclid(n_i);
    }
    if tm != 1 % n_i {
        return Err(Error::invalid("metacyclic: t^m != 1 mod n"));
    }
    if (s * (t - 1)).rem_euclid(n_i) != 0 {
        return Err(Error::invalid("metacyclic: s(t-1) != 0 mod n"));
    }
    let order = n * m;
    let idx = |i: usize, j: usize| j * n + i;
    // powers of t mod n
    let mut tp = vec![1i64; m];
    for j in 1..m {
        tp[j] = (tp[j - 1] * t).rem_euclid(n_i);
    }
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..n {
        for j in 0..m {
            for i2 in 0..n {
                for j2 in 0..m {
                    // a^i b^j * a^i2 b^j2 = a^{i + t^j i2 + s*carry} b^{(j+j2) mod m}
                    let carry = ((j + j2) / m) as i64;
                    let ii = (i as i64 + tp[j] * i2 as i64 + s * carry).rem_euclid(n_i) as usize;
                    let jj = (j + j2) % m;
                    table[idx(i, j)][idx(i2, j2)] = idx(ii, jj);
                }
            }
        }
    }
    let mut names = Vec::with_capacity(order);
    for j in 0..m {
        for i in 0..n {
            let mut name = String::new();
            if i == 1 {
                name.push('a');
            } else if i > 1 {
                name.push_str(&format!("a{}", i));
            }
            if j == 1 {
                name.push('b');
            } else if j > 1 {
                name.push_str(&format!("b{}", j));
            }
            if name.is_empty() {
                name.push('e');
            }
            names.push(name);
        }
    }
    FiniteGroup::from_table(table, names)
}

/// Dicyclic group of order 4n (n = 2 gives the quaternion group Q8).
pub fn dicyclic(n: usize) -> Result<FiniteGroup, Error> {
    metacyclic(2 * n, 2, 2 * n as i64 - 1, n as i64)
}

/// Abelian group with the given cyclic factors (factors equal to 1 are
/// dropped). Elements are tuples in mixed-radix order.
pub fn abelian(factors: &[i64]) -> Result<FiniteGroup, Error> {
    if factors.iter().any(|&f| f < 1) {
        return Err(Error::parse("abelian factors must be positive"));
    }
    let factors: Vec<i64> = factors.iter().copied().filter(|&f| f > 1).collect();
    let k = factors.len();
    let order: i64 = factors.iter().product::<i64>().max(1);
    let order = order as usize;
    let coords = |mut x: usize| -> Vec<usize> {
        let mut c = vec![0usize; k];
        for i in 0..k {
            c[i] = x % factors[i] as usize;
            x /= factors[i] as usize;
        }
        c
    };
    let index = |c: &[usize]| -> usize {
        let mut x = 0usize;
        for i in (0..k).rev() {
            x = x * factors[i] as usize + c[i];
        }
        x
    };
    let mut table = vec![vec![0usize; order]; order];
    for x in 0..order {
        let cx = coords(x);
        for y in 0..order {
            let cy = coords(y);
            let cz: Vec<usize> = (0..k)
                .map(|i| (cx[i] + cy[i]) % factors[i] as usize)
                .collect();
            table[x][y] = index(&cz);
        }
    }
    let letters = [
        'a', 'b', 'c', 'd', 'f', 'g', 'h', 'i', 'j', 'k',
    ];
    let names = (0..order)
        .map(|x| {
            let c = coords(x);
            let mut name = String::new();
            for (i, &e) in c.iter().enumerate() {
                if e == 1 {
                    name.push(letters[i]);
                } else if e > 1 {
                    name.push_str(&format!("{}{}", letters[i], e));
                }
            }
            if name.is_empty() {
                name.push('e');
            }
            name
        })
        .collect();
    FiniteGroup::from_table(table, names)
}

/// Semidirect product (prod_i Z_{f_i}) x| Z_m where the generator of Z_m acts
/// by the integer matrix `sigma` on coordinate tuples.
pub fn semidirect_cyclic(factors: &[i64], m: usize, sigma: &[Vec<i64>]) -> Result<FiniteGroup, Error> {
    let k = factors.len();
    let a_order: i64 = factors.iter().product::<i64>().max(1);
    let a_order = a_order as usize;
    let coords = |mut x: usize| -> Vec<i64> {
        let mut c = vec![0i64; k];
        for i in 0..k {
            c[i] = (x % factors[i] as usize) as i64;
            x /= factors[i] as usize;
        }
        c
    };
    let index = |c: &[i64]| -> usize {
        let mut x = 0usize;
        for i in (0..k).rev() {
            x = x * factors[i] as usize + c[i].rem_euclid(factors[i]) as usize;
        }
        x
    };
    let apply = |c: &[i64]| -> Vec<i64> {
        (0..k)
            .map(|i| {
                let mut acc = 0i64;
                for j in 0..k {
                    acc += sigma[i][j] * c[j];
                }
                acc.rem_euclid(factors[i])
            })
            .collect()
    };
    // sigma must be an automorphism with sigma^m = id
    {
        let mut seen = vec![false; a_order];
        for x in 0..a_order {
            let y = index(&apply(&coords(x)));
            if seen[y] {
                return Err(Error::invalid("semidirect: sigma is not bijective"));
            }
            seen[y] = true;
        }
        for x in 0..a_order {
            let mut c = coords(x);
            for _ in 0..m {
                c = apply(&c);
            }
            if index(&c) != x {
                return Err(Error::invalid("semidirect: sigma^m != id"));
            }
        }
    }
    let order = a_order * m;
    let idx = |v: usize, j: usize| j * a_order + v;
    let mut table = vec![vec![0usize; order]; order];
    for v in 0..a_order {
        for j in 0..m {
            for v2 in 0..a_order {
                for j2 in 0..m {
                    // (v, j)(v2, j2) = (v + sigma^j(v2), j + j2)
                    let mut c2 = coords(v2);
                    for _ in 0..j {
                        c2 = apply(&c2);
                    }
                    let cv = coords(v);
                    let sum: Vec<i64> = (0..k)
                        .map(|i| (cv[i] + c2[i]).rem_euclid(factors[i]))
                        .collect();
                    table[idx(v, j)][idx(v2, j2)] = idx(index(&sum), (j + j2) % m);
                }
            }
        }
    }
    let names = (0..order)
        .map(|x| {
            let (j, v) = (x / a_order, x % a_order);
            format!("({};{})", v, j)
        })
        .collect();
    FiniteGroup::from_table(table, names)
}

/// Generalized dihedral group Dih(A) = A x| Z2 with inversion action.
pub fn generalized_dihedral(factors: &[i64]) -> Result<FiniteGroup, Error> {
    let nontrivial: Vec<i64> = factors.iter().copied().filter(|&f| f > 1).collect();
    let k = nontrivial.len();
    let sigma: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| if i == j { -1 } else { 0 }).collect())
        .collect();
    semidirect_cyclic(&nontrivial, 2, &sigma)
}

/// Direct product with pair element names.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> Result<FiniteGroup, Error> {
    let (n1, n2) = (g1.order(), g2.order());
    let order = n1 * n2;
    if order > super::VALIDATE_ORDER_BOUND {
        return Err(Error::bounds("direct product exceeds order bound"));
    }
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut table = vec![vec![0usize; order]; order];
    for a in 0..n1 {
        for b in 0..n2 {
            for a2 in 0..n1 {
                for b2 in 0..n2 {
                    table[idx(a, b)][idx(a2, b2)] = idx(g1.mul(a, a2), g2.mul(b, b2));
                }
            }
        }
    }
    let names = (0..order)
        .map(|x| format!("({},{})", g1.name(x / n2), g2.name(x % n2)))
        .collect();
    FiniteGroup::from_table(table, names)
}

fn perm_mul(p: &[usize], q: &[usize]) -> Vec<usize> {
    // (p*q)(x) = p(q(x))
    q.iter().map(|&x| p[x]).collect()
}

fn cycle_notation(p: &[usize]) -> String {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let mut x = p[start];
        while x != start {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        out.push('(');
        out.push_str(
            &cyc.iter()
                .map(|&v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" "),
        );
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

fn parse_cycles(text: &str) -> Result<Vec<usize>, Error> {
    let text = text.trim();
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let open = rest
            .find('(')
            .ok_or_else(|| Error::parse(format!("bad cycle notation {:?}", text)))?;
        let close = rest
            .find(')')
            .ok_or_else(|| Error::parse(format!("bad cycle notation {:?}", text)))?;
        let inner = &rest[open + 1..close];
        let pts = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::parse(format!("bad cycle point {:?}", t)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if pts.iter().any(|&p| p == 0) {
            return Err(Error::parse("cycle points are 1-based"));
        }
        cycles.push(pts.iter().map(|&p| p - 1).collect());
        rest = &rest[close + 1..];
    }
    let degree = cycles
        .iter()
        .flat_map(|c| c.iter())
        .max()
        .map_or(1, |&m| m + 1);
    let mut perm: Vec<usize> = (0..degree).collect();
    for cyc in &cycles {
        for w in 0..cyc.len() {
            perm[cyc[w]] = cyc[(w + 1) % cyc.len()];
        }
    }
    Ok(perm)
}

/// Group generated by permutations (0-based images), closed by BFS and sorted
/// lexicographically; element names use 1-based cycle notation.
pub fn from_permutations(gens: &[Vec<usize>]) -> Result<FiniteGroup, Error> {
    if gens.is_empty() {
        return Err(Error::parse("no permutation generators"));
    }
    let degree = gens.iter().map(|g| g.len()).max().unwrap();
    let gens: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| {
            let mut p = g.clone();
            while p.len() < degree {
                let k = p.len();
                p.push(k);
            }
            p
        })
        .collect();
    for g in &gens {
        let mut seen = vec![false; degree];
        for &x in g {
            if x >= degree || seen[x] {
                return Err(Error::parse("generator is not a permutation"));
            }
            seen[x] = true;
        }
    }
    let identity: Vec<usize> = (0..degree).collect();
    let mut elems: std::collections::BTreeSet<Vec<usize>> = std::collections::BTreeSet::new();
    elems.insert(identity.clone());
    let mut queue = vec![identity];
    while let Some(p) = queue.pop() {
        for g in &gens {
            let q = perm_mul(&p, g);
            if !elems.contains(&q) {
                if elems.len() >= super::VALIDATE_ORDER_BOUND {
                    return Err(Error::bounds("permutation group exceeds order bound"));
                }
                elems.insert(q.clone());
                queue.push(q);
            }
        }
    }
    let elems: Vec<Vec<usize>> = elems.into_iter().collect();
    let index: std::collections::HashMap<&Vec<usize>, usize> =
        elems.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = elems.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, p) in elems.iter().enumerate() {
        for (j, q) in elems.iter().enumerate() {
            table[i][j] = index[&perm_mul(p, q)];
        }
    }
    let names = elems.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::from_table(table, names)
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, Error> {
    if n == 0 || n > 5 {
        return Err(Error::bounds("symmetric(n) supported for 1 <= n <= 5"));
    }
    if n == 1 {
        return abelian(&[1]);
    }
    let transposition: Vec<usize> = {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(0, 1);
        p
    };
    let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    from_permutations(&[transposition, cycle])
}

pub fn alternating(n: usize) -> Result<FiniteGroup, Error> {
    if n < 3 || n > 6 {
        return Err(Error::bounds("alternating(n) supported for 3 <= n <= 6"));
    }
    let mut gens = Vec::new();
    // 3-cycles (1 2 k) generate A_n
    for k in 2..n {
        let mut p: Vec<usize> = (0..n).collect();
        p[0] = 1;
        p[1] = k;
        p[k] = 0;
        gens.push(p);
    }
    from_permutations(&gens)
}

/// SL(n, q) for prime q, by brute-force matrix enumeration. Supported range:
/// n = 2 with q in {2, 3, 5, 7}, and n = 3 with q = 2.
pub fn special_linear(n: usize, q: usize) -> Result<FiniteGroup, Error> {
    let supported = matches!((n, q), (2, 2) | (2, 3) | (2, 5) | (2, 7) | (3, 2));
    if !supported {
        return Err(Error::bounds(format!("sl({}, {}) outside supported range", n, q)));
    }
    let qq = q as i64;
    let size = n * n;
    let total = (q as u64).pow(size as u32);
    let det = |m: &[i64]| -> i64 {
        match n {
            2 => (m[0] * m[3] - m[1] * m[2]).rem_euclid(qq),
            3 => (m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
                + m[2] * (m[3] * m[7] - m[4] * m[6]))
                .rem_euclid(qq),
            _ => unreachable!(),
        }
    };
    let mut elems: Vec<Vec<i64>> = Vec::new();
    for code in 0..total {
        let mut m = vec![0i64; size];
        let mut c = code;
        for cell in m.iter_mut() {
            *cell = (c % q as u64) as i64;
            c /= q as u64;
        }
        if det(&m) == 1 {
            elems.push(m);
        }
    }
    elems.sort();
    let index: std::collections::HashMap<&Vec<i64>, usize> =
        elems.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let sz = elems.len();
    let mut table = vec![vec![0usize; sz]; sz];
    for (i, a) in elems.iter().enumerate() {
        for (j, b) in elems.iter().enumerate() {
            let mut c = vec![0i64; size];
            for r in 0..n {
                for s in 0..n {
                    let mut acc = 0i64;
                    for t in 0..n {
                        acc += a[r * n + t] * b[t * n + s];
                    }
                    c[r * n + s] = acc.rem_euclid(qq);
                }
            }
            table[i][j] = index[&c];
        }
    }
    let names = elems
        .iter()
        .map(|m| {
            let rows: Vec<String> = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|s| m[r * n + s].to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                })
                .collect();
            format!("[{}]", rows.join(";"))
        })
        .collect();
    FiniteGroup::from_table(table, names)
}

/// Every group of order <= 16, as `(name, group)` pairs in a fixed order.
pub fn small_groups(order: usize) -> Result<Vec<(String, FiniteGroup)>, Error> {
    let ab = |f: &[i64]| abelian(f);
    let named = |name: &str, g: Result<FiniteGroup, Error>| -> Result<(String, FiniteGroup), Error> {
        Ok((name.to_string(), g?))
    };
    let list: Vec<(String, FiniteGroup)> = match order {
        1 => vec![named("1", ab(&[1]))?],
        2 => vec![named("Z2", ab(&[2]))?],
        3 => vec![named("Z3", ab(&[3]))?],
        4 => vec![named("Z4", ab(&[4]))?, named("Z2xZ2", ab(&[2, 2]))?],
        5 => vec![named("Z5", ab(&[5]))?],
        6 => vec![named("Z6", ab(&[6]))?, named("S3", dihedral(3))?],
        7 => vec![named("Z7", ab(&[7]))?],
        8 => vec![
            named("Z8", ab(&[8]))?,
            named("Z4xZ2", ab(&[2, 4]))?,
            named("Z2xZ2xZ2", ab(&[2, 2, 2]))?,
            named("D8", dihedral(4))?,
            named("Q8", dicyclic(2))?,
        ],
        9 => vec![named("Z9", ab(&[9]))?, named("Z3xZ3", ab(&[3, 3]))?],
        10 => vec![named("Z10", ab(&[10]))?, named("D10", dihedral(5))?],
        11 => vec![named("Z11", ab(&[11]))?],
        12 => vec![
            named("Z12", ab(&[12]))?,
            named("Z6xZ2", ab(&[2, 6]))?,
            named("D12", dihedral(6))?,
            named("A4", alternating(4))?,
            named("Dic3", dicyclic(3))?,
        ],
        13 => vec![named("Z13", ab(&[13]))?],
        14 => vec![named("Z14", ab(&[14]))?, named("D14", dihedral(7))?],
        15 => vec![named("Z15", ab(&[15]))?],
        16 => {
            let d8 = dihedral(4)?;
            let q8 = dicyclic(2)?;
            let z4 = ab(&[4])?;
            let pauli = {
                let prod = direct_product(&d8, &z4)?;
                // quotient by the diagonal central Z2 generated by (r2, z^2)
                let r2 = d8.elem_by_name("r2").unwrap();
                let gen = r2 * 4 + 2;
                let sub = Subgroup::from_elements(&prod, vec![0, gen])?;
                quotient_group(&prod, &sub)?.group
            };
            vec![
                named("Z16", ab(&[16]))?,
                named("Z4xZ4", ab(&[4, 4]))?,
                named("Z8xZ2", ab(&[2, 8]))?,
                named("Z4xZ2xZ2", ab(&[2, 2, 4]))?,
                named("Z2^4", ab(&[2, 2, 2, 2]))?,
                named("D16", dihedral(8))?,
                named("SD16", metacyclic(8, 2, 3, 0))?,
                named("M16", metacyclic(8, 2, 5, 0))?,
                named("Q16", dicyclic(4))?,
                named("Z4:Z4", metacyclic(4, 4, 3, 0))?,
                named(
                    "(Z2xZ2):Z4",
                    semidirect_cyclic(&[2, 2], 4, &[vec![0, 1], vec![1, 0]]),
                )?,
                ("D8xZ2".to_string(), direct_product(&d8, &ab(&[2])?)?),
                ("Q8xZ2".to_string(), direct_product(&q8, &ab(&[2])?)?),
                ("D8oZ4".to_string(), pauli),
            ]
        }
        _ => {
            return Err(Error::bounds(format!(
                "small group catalog covers orders 1..=16, got {}",
                order
            )))
        }
    };
    Ok(list)
}
