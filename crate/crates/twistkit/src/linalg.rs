//! Integer linear algebra over Z and Z/M: Smith normal form with a tracked
//! change of basis, and a linear solver modulo M (prime power elimination
//! plus CRT). Every cohomological equation in this crate reduces to one of
//! these two routines.

/// Smith normal form of an integer matrix.
///
/// Returns `(diag, vinv)` where `diag` is the list of diagonal entries
/// (non-negative, each dividing the next) of `D = U A V` and `vinv` is the
/// inverse of the column transform: if the columns of `A` are indexed by
/// generators `g_j`, the new generators `h_i = sum_j vinv[i][j] g_j` satisfy
/// the diagonalized relations `diag[i] * h_i = 0`.
pub fn smith_normal_form(a: &[Vec<i64>]) -> (Vec<i64>, Vec<Vec<i64>>) {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut mat: Vec<Vec<i64>> = a.to_vec();
    let mut vinv: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();

    // column op A -> A*C must be mirrored as vinv -> C^{-1}*vinv
    fn col_swap(mat: &mut [Vec<i64>], vinv: &mut [Vec<i64>], i: usize, j: usize) {
        for row in mat.iter_mut() {
            row.swap(i, j);
        }
        vinv.swap(i, j);
    }
    fn col_add(mat: &mut [Vec<i64>], vinv: &mut [Vec<i64>], src: usize, dst: usize, k: i64) {
        // col_dst += k * col_src ; vinv: row_src -= k * row_dst
        for row in mat.iter_mut() {
            row[dst] = row[dst]
                .checked_add(k.checked_mul(row[src]).expect("snf overflow"))
                .expect("snf overflow");
        }
        for c in 0..vinv[0].len() {
            let t = k.checked_mul(vinv[dst][c]).expect("snf overflow");
            vinv[src][c] = vinv[src][c].checked_sub(t).expect("snf overflow");
        }
    }
    fn col_neg(mat: &mut [Vec<i64>], vinv: &mut [Vec<i64>], i: usize) {
        for row in mat.iter_mut() {
            row[i] = -row[i];
        }
        for c in 0..vinv[0].len() {
            vinv[i][c] = -vinv[i][c];
        }
    }
    fn row_add(mat: &mut [Vec<i64>], src: usize, dst: usize, k: i64) {
        let n = mat[0].len();
        for c in 0..n {
            let t = k.checked_mul(mat[src][c]).expect("snf overflow");
            mat[dst][c] = mat[dst][c].checked_add(t).expect("snf overflow");
        }
    }

    let mut t = 0; // current pivot index
    while t < m.min(n) {
        // nonzero pivot with minimal absolute value in the submatrix
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if mat[i][j] != 0 {
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => mat[i][j].abs() < mat[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        mat.swap(t, pi);
        col_swap(&mut mat, &mut vinv, t, pj);

        'reduce: loop {
            if mat[t][t] < 0 {
                col_neg(&mut mat, &mut vinv, t);
            }
            let pivot = mat[t][t];
            // column t: a non-divisible entry yields a smaller pivot
            for i in t + 1..m {
                if mat[i][t].rem_euclid(pivot) != 0 {
                    let q = mat[i][t].div_euclid(pivot);
                    row_add(&mut mat, t, i, -q);
                    mat.swap(t, i);
                    continue 'reduce;
                }
            }
            for i in t + 1..m {
                let q = mat[i][t] / pivot;
                if q != 0 {
                    row_add(&mut mat, t, i, -q);
                }
            }
            // row t
            for j in t + 1..n {
                if mat[t][j].rem_euclid(pivot) != 0 {
                    let q = mat[t][j].div_euclid(pivot);
                    col_add(&mut mat, &mut vinv, t, j, -q);
                    col_swap(&mut mat, &mut vinv, t, j);
                    continue 'reduce;
                }
            }
            for j in t + 1..n {
                let q = mat[t][j] / pivot;
                if q != 0 {
                    col_add(&mut mat, &mut vinv, t, j, -q);
                }
            }
            // divisibility: the pivot must divide the remaining submatrix
            for i in t + 1..m {
                for j in t + 1..n {
                    if mat[i][j].rem_euclid(pivot) != 0 {
                        col_add(&mut mat, &mut vinv, j, t, 1);
                        continue 'reduce;
                    }
                }
            }
            break;
        }
        t += 1;
    }

    let mut diag: Vec<i64> = Vec::new();
    for i in 0..m.min(n) {
        diag.push(mat[i][i].abs());
    }
    while diag.len() < n {
        diag.push(0);
    }
    (diag, vinv)
}

fn bezout(a: i64, b: i64) -> (i64, i64) {
    if b == 0 {
        return (1, 0);
    }
    let (x, y) = bezout(b, a % b);
    (y, x - (a / b) * y)
}

fn factorize(mut m: i64) -> Vec<(i64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            let mut e = 0;
            while m % p == 0 {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

fn val_p(mut x: i64, p: i64, cap: u32) -> u32 {
    if x == 0 {
        return cap;
    }
    let mut v = 0;
    while v < cap && x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

fn inv_mod(a: i64, m: i64) -> i64 {
    let (x, _) = bezout(a.rem_euclid(m), m);
    x.rem_euclid(m)
}

/// Solve `A x = b (mod p^e)` by valuation-pivoted elimination.
fn solve_prime_power(a: &[Vec<i64>], b: &[i64], p: i64, e: u32) -> Option<Vec<i64>> {
    let q = p.pow(e);
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let mut mat: Vec<Vec<i64>> = a
        .iter()
        .map(|row| row.iter().map(|&x| x.rem_euclid(q)).collect())
        .collect();
    let mut rhs: Vec<i64> = b.iter().map(|&x| x.rem_euclid(q)).collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut used_rows = vec![false; m];
    let mut pivots: Vec<(usize, usize, u32)> = Vec::new(); // (row, col, valuation)

    loop {
        // smallest valuation entry among unused rows / unpivoted cols
        let mut best: Option<(usize, usize, u32)> = None;
        'scan: for i in 0..m {
            if used_rows[i] {
                continue;
            }
            for j in 0..n {
                if pivot_of_col[j].is_some() || mat[i][j] == 0 {
                    continue;
                }
                let v = val_p(mat[i][j], p, e);
                if v >= e {
                    continue;
                }
                if best.map_or(true, |(_, _, bv)| v < bv) {
                    best = Some((i, j, v));
                }
                if v == 0 {
                    break 'scan;
                }
            }
        }
        let Some((pi, pj, v)) = best else { break };
        // normalize pivot row so the pivot becomes exactly p^v
        let unit = mat[pi][pj] / p.pow(v);
        let unit_inv = inv_mod(unit, q);
        for x in mat[pi].iter_mut() {
            *x = (*x as i128 * unit_inv as i128).rem_euclid(q as i128) as i64;
        }
        rhs[pi] = (rhs[pi] as i128 * unit_inv as i128).rem_euclid(q as i128) as i64;
        // eliminate column pj from the remaining unused rows (their
        // valuations there are >= v by the minimality of the pivot)
        let pv = p.pow(v);
        for i in 0..m {
            if i == pi || used_rows[i] || mat[i][pj] == 0 {
                continue;
            }
            debug_assert!(mat[i][pj] % pv == 0, "pivot was not minimal");
            let factor = (mat[i][pj] / pv).rem_euclid(q);
            if factor != 0 {
                for jx in 0..n {
                    mat[i][jx] = (mat[i][jx] as i128 - factor as i128 * mat[pi][jx] as i128)
                        .rem_euclid(q as i128) as i64;
                }
                rhs[i] = (rhs[i] as i128 - factor as i128 * rhs[pi] as i128).rem_euclid(q as i128)
                    as i64;
            }
        }
        used_rows[pi] = true;
        pivot_of_col[pj] = Some(pi);
        pivots.push((pi, pj, v));
    }

    // rows without pivots are fully eliminated; their right-hand side must be 0
    for i in 0..m {
        if !used_rows[i] && rhs[i] != 0 {
            debug_assert!(mat[i].iter().all(|&x| x == 0));
            return None;
        }
    }

    // back-substitute with free variables set to zero
    let mut x = vec![0i64; n];
    for &(pi, pj, v) in pivots.iter().rev() {
        let mut acc = rhs[pi] as i128;
        for j in 0..n {
            if j != pj && mat[pi][j] != 0 {
                acc -= mat[pi][j] as i128 * x[j] as i128;
            }
        }
        let acc = acc.rem_euclid(q as i128) as i64;
        let pv = p.pow(v);
        if acc % pv != 0 {
            return None;
        }
        x[pj] = acc / pv;
    }
    // final verification against the original system
    for i in 0..m {
        let mut acc: i128 = 0;
        for j in 0..n {
            acc += a[i][j] as i128 * x[j] as i128;
        }
        if (acc - b[i] as i128).rem_euclid(q as i128) != 0 {
            return None;
        }
    }
    Some(x)
}

/// Solve `A x = b (mod modulus)`. Returns one solution, or None when the
/// system is infeasible.
pub fn solve_mod(a: &[Vec<i64>], b: &[i64], modulus: i64) -> Option<Vec<i64>> {
    assert!(modulus >= 1);
    let n = if a.is_empty() { 0 } else { a[0].len() };
    if modulus == 1 {
        return Some(vec![0; n]);
    }
    let factors = factorize(modulus);
    let mut parts: Vec<(i64, Vec<i64>)> = Vec::new();
    for &(p, e) in &factors {
        let sol = solve_prime_power(a, b, p, e)?;
        parts.push((p.pow(e), sol));
    }
    // CRT per coordinate
    let mut x = vec![0i64; n];
    for (j, xj) in x.iter_mut().enumerate() {
        let mut acc: i64 = 0;
        let mut mod_acc: i64 = 1;
        for (q, sol) in &parts {
            let diff = (sol[j] - acc).rem_euclid(*q);
            let inv = inv_mod(mod_acc.rem_euclid(*q), *q);
            let t = (diff as i128 * inv as i128).rem_euclid(*q as i128) as i64;
            acc += mod_acc * t;
            mod_acc *= q;
            acc = acc.rem_euclid(mod_acc);
        }
        *xj = acc;
    }
    // verification against the full modulus
    for i in 0..a.len() {
        let mut acc: i128 = 0;
        for j in 0..n {
            acc += a[i][j] as i128 * x[j] as i128;
        }
        if (acc - b[i] as i128).rem_euclid(modulus as i128) != 0 {
            return None;
        }
    }
    Some(x)
}
