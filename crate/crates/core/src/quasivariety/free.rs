//! Subalgebras of finite products generated by explicit tuples.

use std::collections::HashMap;

use super::QvarHandle;
use crate::algebra::HeytingAlgebra;
use crate::error::{Error, Result};
use crate::par::{self, Exec};

pub(crate) struct TupleClosure {
    pub tuples: Vec<Vec<u16>>,
    /// Indices of the seed tuples.
    pub seeds: Vec<usize>,
    pub algebra: Option<HeytingAlgebra>,
}

const CHUNK: usize = 64;

/// Closes `seeds` together with the constant tuples under the componentwise
/// operations of `coords`. Tuples are numbered in discovery order: bottom,
/// top, seeds, then closure rounds. Fails once more than `cap` tuples appear,
/// or, with `key_len = Some(k)`, once two tuples agree on the first `k`
/// coordinates but differ in the rest.
pub(crate) fn close_tuples(
    coords: &[&HeytingAlgebra],
    seeds: &[Vec<u16>],
    cap: usize,
    key_len: Option<usize>,
    with_tables: bool,
    exec: Exec,
) -> Result<TupleClosure> {
    let bot: Vec<u16> = coords.iter().map(|c| c.bot() as u16).collect();
    let top: Vec<u16> = coords.iter().map(|c| c.top() as u16).collect();
    let mut tuples: Vec<Vec<u16>> = Vec::new();
    let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
    let mut keys: HashMap<Vec<u16>, u32> = HashMap::new();
    let overflow = || Error::Budget(format!("closure exceeds {cap} elements"));
    let mut insert = |t: Vec<u16>, tuples: &mut Vec<Vec<u16>>| -> Result<u32> {
        if let Some(&i) = index.get(&t) {
            return Ok(i);
        }
        if tuples.len() >= cap {
            return Err(overflow());
        }
        if let Some(k) = key_len {
            if keys.insert(t[..k].to_vec(), tuples.len() as u32).is_some() {
                return Err(Error::InvalidArgument("last coordinates are not a function of the first".into()));
            }
        }
        let i = tuples.len() as u32;
        index.insert(t.clone(), i);
        tuples.push(t);
        Ok(i)
    };
    insert(bot, &mut tuples)?;
    insert(top, &mut tuples)?;
    let seed_idx = seeds
        .iter()
        .map(|s| insert(s.clone(), &mut tuples).map(|i| i as usize))
        .collect::<Result<Vec<_>>>()?;

    // (x, y, meet, join, x→y, y→x) for x ≥ y
    let mut records: Vec<[u32; 6]> = Vec::new();
    let mut done = 0;
    while done < tuples.len() {
        let hi = tuples.len();
        let mut lo = done;
        while lo < hi {
            let chunk_end = (lo + CHUNK).min(hi);
            let xs: Vec<usize> = (lo..chunk_end).collect();
            let rows = par::map(exec, &xs, |&x| {
                (0..=x)
                    .map(|y| {
                        let (tx, ty) = (&tuples[x], &tuples[y]);
                        let mut out: [Vec<u16>; 4] = Default::default();
                        for (k, c) in coords.iter().enumerate() {
                            let (a, b) = (tx[k] as usize, ty[k] as usize);
                            out[0].push(c.meet(a, b) as u16);
                            out[1].push(c.join(a, b) as u16);
                            out[2].push(c.imp(a, b) as u16);
                            out[3].push(c.imp(b, a) as u16);
                        }
                        out
                    })
                    .collect::<Vec<_>>()
            });
            for (x, row) in xs.iter().zip(rows) {
                for (y, ops) in row.into_iter().enumerate() {
                    let [m, j, i1, i2] = ops;
                    let r = [
                        *x as u32,
                        y as u32,
                        insert(m, &mut tuples)?,
                        insert(j, &mut tuples)?,
                        insert(i1, &mut tuples)?,
                        insert(i2, &mut tuples)?,
                    ];
                    if with_tables {
                        records.push(r);
                    }
                }
            }
            lo = chunk_end;
        }
        done = hi;
    }
    let algebra = with_tables.then(|| {
        let n = tuples.len();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        let mut imp = vec![0u32; n * n];
        for [x, y, m, j, i1, i2] in records {
            let (x, y) = (x as usize, y as usize);
            meet[x * n + y] = m;
            meet[y * n + x] = m;
            join[x * n + y] = j;
            join[y * n + x] = j;
            imp[x * n + y] = i1;
            imp[y * n + x] = i2;
        }
        let top = index[&coords.iter().map(|c| c.top() as u16).collect::<Vec<_>>()] as usize;
        HeytingAlgebra::from_tables(n, 0, top, meet, join, imp).expect("closure tables are in range")
    });
    Ok(TupleClosure {
        tuples,
        seeds: seed_idx,
        algebra,
    })
}

/// The free algebra on `k` generators of a quasivariety generated by a
/// finite algebra.
#[derive(Debug, Clone)]
pub struct FreeAlgebra {
    pub algebra: HeytingAlgebra,
    /// Elements playing the role of the free generators.
    pub generators: Vec<usize>,
}

fn projection_tuples(b: &HeytingAlgebra, k: usize) -> Result<Vec<Vec<u16>>> {
    let n = b.len();
    let count = u32::try_from(k)
        .ok()
        .and_then(|k| n.checked_pow(k))
        .filter(|&c| c <= 1 << 20)
        .ok_or_else(|| Error::Budget(format!("{n}^{k} coordinates")))?;
    Ok((0..k)
        .map(|i| {
            let stride = n.pow((k - 1 - i) as u32);
            (0..count).map(|v| ((v / stride) % n) as u16).collect()
        })
        .collect())
}

/// Number of elements of the `k`-generated free algebra, without tables.
pub fn free_algebra_size(q: &QvarHandle, k: usize) -> Result<usize> {
    let b = q.generator();
    let seeds = projection_tuples(b, k)?;
    let n = seeds.first().map_or(1, |s| s.len());
    let coords = vec![b; n];
    Ok(close_tuples(&coords, &seeds, q.budgets().free_cap, None, false, q.budgets().exec)?
        .tuples
        .len())
}

/// Subalgebra of `B^(B^k)` generated by the `k` projection tuples. The
/// closure stops at the free-algebra cap, and tables are only built up to the
/// algebra cap.
pub fn free_algebra(q: &QvarHandle, k: usize) -> Result<FreeAlgebra> {
    let b = q.generator();
    let seeds = projection_tuples(b, k)?;
    let n = seeds.first().map_or(1, |s| s.len());
    let coords = vec![b; n];
    let budgets = q.budgets();
    let cap = budgets.free_cap.min(budgets.algebra_cap);
    let c = close_tuples(&coords, &seeds, cap, None, true, budgets.exec)?;
    Ok(FreeAlgebra {
        algebra: c.algebra.expect("tables requested"),
        generators: c.seeds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{chain, cyclic, min_generators, trivial};
    use crate::budget::Budgets;

    fn q(b: HeytingAlgebra) -> QvarHandle {
        QvarHandle::new(b, Budgets::default()).unwrap()
    }

    #[test]
    fn boolean_free_algebras() {
        let f = free_algebra(&q(chain(2)), 1).unwrap();
        assert_eq!(f.algebra.len(), 4);
        assert!(f.algebra.validate().passed());
        assert_eq!(free_algebra(&q(chain(2)), 2).unwrap().algebra.len(), 16);
        assert_eq!(free_algebra(&q(chain(2)), 0).unwrap().algebra.len(), 2);
        assert!(free_algebra(&q(trivial()), 2).unwrap().algebra.is_trivial());
    }

    #[test]
    fn chain_free_algebra() {
        let f = free_algebra(&q(chain(3)), 1).unwrap();
        assert_eq!(f.algebra.len(), 6);
        let f7 = free_algebra(&q(cyclic(7).unwrap()), 1).unwrap();
        assert!(f7.algebra.validate().passed());
        assert_eq!(min_generators(&f7.algebra, 1).count(), Some(1));
        assert_eq!(free_algebra_size(&q(cyclic(7).unwrap()), 1).unwrap(), f7.algebra.len());
    }

    #[test]
    fn cap_is_enforced() {
        let b = Budgets {
            free_cap: 10,
            ..Budgets::default()
        };
        let h = QvarHandle::new(chain(2), b).unwrap();
        assert!(matches!(free_algebra(&h, 2), Err(Error::Budget(_))));
    }
}
