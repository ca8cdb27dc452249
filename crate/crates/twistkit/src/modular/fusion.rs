//! Verlinde fusion coefficients from the unnormalized S-matrix, plus a
//! caching oracle used by the brute-force Lagrangian search. With the
//! convention S[unit] = d, the Verlinde formula reads
//! `N^c_{ab} = (1/|G|^2) sum_x S(a,x) S(b,x) conj(S(c,x)) / d(x)`,
//! and |G|^2 = dim C, so no irrational normalization ever appears.

use super::ModularData;
use crate::scalars::{Cyclotomic, Rat};
use crate::Error;
use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

fn verlinde_column(data: &ModularData, a: usize, b: usize) -> Result<Vec<(usize, i64)>, Error> {
    let n = data.objects.len();
    let g2 = Rat::new(1, (data.group.order() * data.group.order()) as i64);
    let t: Vec<Cyclotomic> = (0..n)
        .map(|x| {
            data.s[a][x]
                .mul(&data.s[b][x])
                .scale(&Rat::new(1, data.objects[x].dim))
        })
        .collect();
    let mut out = Vec::new();
    for c in 0..n {
        let mut acc = Cyclotomic::zero(data.conductor);
        for (x, tx) in t.iter().enumerate() {
            acc = acc.add(&tx.mul(&data.s[c][x].conj()));
        }
        let acc = acc.scale(&g2);
        let Some(q) = acc.as_rat() else {
            return Err(Error::internal("non-rational Verlinde coefficient"));
        };
        if !q.is_integer() || q.num() < 0 {
            return Err(Error::internal(format!(
                "Verlinde coefficient not a nonnegative integer: {}",
                q
            )));
        }
        if q.num() > 0 {
            out.push((c, q.num()));
        }
    }
    Ok(out)
}

/// Full fusion tensor N[a][b][c]; practical only for small object counts.
pub fn fusion_coefficients(data: &ModularData) -> Result<Vec<Vec<Vec<i64>>>, Error> {
    let n = data.objects.len();
    let mut out = vec![vec![vec![0i64; n]; n]; n];
    for a in 0..n {
        for b in 0..=a {
            let col = verlinde_column(data, a, b)?;
            for &(c, m) in &col {
                out[a][b][c] = m;
                out[b][a][c] = m;
            }
        }
    }
    // unit column: 1 x b = b
    for b in 0..n {
        for c in 0..n {
            let expected = i64::from(b == c);
            if out[data.unit][b][c] != expected {
                return Err(Error::internal("fusion with the unit is not the identity"));
            }
        }
    }
    Ok(out)
}

/// Lazily computed, cached fusion products. Products of invertible objects
/// are resolved by S-row multiplication and lookup instead of a full
/// Verlinde sum.
pub struct FusionOracle<'a> {
    data: &'a ModularData,
    row_index: HashMap<Vec<Cyclotomic>, usize>,
    cache: RefCell<HashMap<(usize, usize), Rc<Vec<(usize, i64)>>>>,
}

impl<'a> FusionOracle<'a> {
    pub fn new(data: &'a ModularData) -> FusionOracle<'a> {
        let row_index = data
            .s
            .iter()
            .enumerate()
            .map(|(i, row)| (row.clone(), i))
            .collect();
        FusionOracle {
            data,
            row_index,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn data(&self) -> &ModularData {
        self.data
    }

    /// Constituents of the tensor product with multiplicities.
    pub fn product(&self, a: usize, b: usize) -> Result<Rc<Vec<(usize, i64)>>, Error> {
        let key = if a <= b { (a, b) } else { (b, a) };
        if let Some(hit) = self.cache.borrow().get(&key) {
            return Ok(hit.clone());
        }
        let result = if self.data.objects[a].dim == 1 && self.data.objects[b].dim == 1 {
            // product of invertibles: the S-row multiplies pointwise
            let target: Vec<Cyclotomic> = (0..self.data.objects.len())
                .map(|x| {
                    self.data.s[a][x]
                        .mul(&self.data.s[b][x])
                        .scale(&Rat::new(1, self.data.objects[x].dim))
                })
                .collect();
            match self.row_index.get(&target) {
                Some(&c) => vec![(c, 1)],
                None => verlinde_column(self.data, a, b)?,
            }
        } else {
            verlinde_column(self.data, a, b)?
        };
        let rc = Rc::new(result);
        self.cache.borrow_mut().insert(key, rc.clone());
        Ok(rc)
    }
}
