//! `(n, k)`-universal families of subsets and the 3-coloring families derived
//! from them, used to derandomize the solver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Vertex, VertexSet};

/// A family of subsets of `0..n` whose traces on every set of at most `k`
/// elements realize all subsets of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniversalSet {
    pub n: usize,
    pub k: usize,
    pub family: Vec<VertexSet>,
}

// Work limits for the pruned construction and for
// exhaustive verification.
const PRUNE_TABLE_LIMIT: u128 = 10_000_000;
const PRUNE_WORK_LIMIT: u128 = 200_000_000;
const VERIFY_WORK_LIMIT: u128 = 400_000_000;

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Calls `visit` with every `k`-subset of `0..n`, in lexicographic order.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[Vertex])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn trace(h: &VertexSet, s: &[Vertex]) -> usize {
    s.iter()
        .enumerate()
        .filter(|(_, &v)| h.contains(v))
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// Some `S` with `|S| <= u.k` whose traces miss a subset of `S`, if any.
pub fn find_uncovered(u: &UniversalSet) -> Option<Vec<Vertex>> {
    let top = u.k.min(u.n);
    let mut seen = vec![false; 1 << top];
    for size in 0..=top {
        let mut witness = None;
        for_each_combination(u.n, size, |s| {
            if witness.is_some() {
                return;
            }
            let patterns = 1usize << size;
            seen[..patterns].iter_mut().for_each(|b| *b = false);
            let mut hit = 0;
            for h in &u.family {
                let t = trace(h, s);
                if !seen[t] {
                    seen[t] = true;
                    hit += 1;
                    if hit == patterns {
                        break;
                    }
                }
            }
            if hit < patterns {
                witness = Some(s.to_vec());
            }
        });
        if witness.is_some() {
            return witness;
        }
    }
    None
}

/// Exhaustive check of the universality condition.
pub fn verify_universal(u: &UniversalSet) -> bool {
    find_uncovered(u).is_none()
}

fn powerset(n: usize) -> Vec<VertexSet> {
    (0u64..1 << n)
        .map(|mask| VertexSet::from_iter(n, (0..n).filter(|&i| mask >> i & 1 == 1)))
        .collect()
}

/// Greedily drops members of `candidates` while every `k`-set keeps all of
/// its traces covered. Returns `None` if the candidates were not universal to
/// begin with.
fn prune(n: usize, k: usize, candidates: Vec<VertexSet>) -> Option<Vec<VertexSet>> {
    let mut sets: Vec<Vec<Vertex>> = Vec::new();
    for_each_combination(n, k, |s| sets.push(s.to_vec()));
    let patterns = 1usize << k;
    let row = |h: &VertexSet| sets.iter().map(|s| trace(h, s)).collect::<Vec<_>>();
    let mut count = vec![0u32; sets.len() * patterns];
    for h in &candidates {
        for (i, t) in row(h).into_iter().enumerate() {
            count[i * patterns + t] += 1;
        }
    }
    if count.contains(&0) {
        return None;
    }
    let mut kept = Vec::new();
    for h in candidates {
        let r = row(&h);
        if r.iter().enumerate().all(|(i, &t)| count[i * patterns + t] > 1) {
            for (i, &t) in r.iter().enumerate() {
                count[i * patterns + t] -= 1;
            }
        } else {
            kept.push(h);
        }
    }
    Some(kept)
}

/// Independent uniform subsets, enough that a fixed `(S, pattern)` pair is
/// missed with probability below `e^-30` after a union bound.
fn random_family(n: usize, k: usize, seed: u64) -> Vec<VertexSet> {
    let pairs = (binomial(n, k) as f64).ln() + (k as f64) * std::f64::consts::LN_2;
    let size = ((1u64 << k) as f64 * (pairs + 30.0)).ceil() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| VertexSet::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5))))
        .collect()
}

/// Builds an `(n, k)`-universal family.
///
/// Candidates are the powerset when that is small, else a seeded random
/// family; they are then pruned greedily against an exact coverage table.
/// Only when the table would be too large is the random family used as is.
pub fn universal_set(n: usize, k: usize) -> Result<UniversalSet> {
    let k = k.min(n);
    let wrap = |family| UniversalSet { n, k, family };
    if k == 0 {
        return Ok(wrap(vec![VertexSet::new(n)]));
    }
    if k == n {
        return Ok(wrap(powerset(n)));
    }
    let combos = binomial(n, k);
    for attempt in 0..5u64 {
        let seed = (n as u64) << 32 ^ (k as u64) << 8 ^ attempt;
        let random = random_family(n, k, seed);
        let candidates = if n < 64 && (1u128 << n) <= random.len() as u128 {
            powerset(n)
        } else {
            random
        };
        let table = combos << k;
        let work = combos.saturating_mul(candidates.len() as u128);
        if table <= PRUNE_TABLE_LIMIT && work <= PRUNE_WORK_LIMIT {
            match prune(n, k, candidates) {
                Some(family) => return Ok(wrap(family)),
                None => continue,
            }
        }
        let u = wrap(candidates);
        if work > VERIFY_WORK_LIMIT {
            log::warn!(
                "universal family for n={n}, k={k} too large to verify exhaustively; \
                 relying on its union-bound failure probability"
            );
            return Ok(u);
        }
        if verify_universal(&u) {
            return Ok(u);
        }
    }
    Err(Error::BudgetExceeded { n, k })
}

/// Colorings derived from ordered pairs `(A, Y)` of a universal family:
/// `A -> 1`, `Y \ A -> 2`, everything else `-> 3`.
#[derive(Clone, Debug)]
pub struct ColoringFamily {
    pub universal: UniversalSet,
}

impl ColoringFamily {
    pub fn len(&self) -> usize {
        self.universal.family.len().pow(2)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Member `i`, pairing `family[i / |H|]` with `family[i % |H|]`.
    pub fn get(&self, i: usize) -> Coloring {
        let h = &self.universal.family;
        let (a, y) = (&h[i / h.len()], &h[i % h.len()]);
        Coloring(
            (0..self.universal.n)
                .map(|v| {
                    if a.contains(v) {
                        1
                    } else if y.contains(v) {
                        2
                    } else {
                        3
                    }
                })
                .collect(),
        )
    }

    pub fn iter(&self) -> impl Iterator<Item = Coloring> + '_ {
        (0..self.len()).map(|i| self.get(i))
    }
}

/// The coloring family for budget `k` on `n` vertices: built from an
/// `(n, min(6k, n))`-universal set.
pub fn coloring_family(n: usize, k: usize) -> Result<ColoringFamily> {
    Ok(ColoringFamily {
        universal: universal_set(n, (6 * k).min(n))?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_is_universal() {
        let u = universal_set(3, 3).unwrap();
        assert_eq!(u.family.len(), 8);
        assert!(verify_universal(&u));
    }

    #[test]
    fn singletons_suffice_for_k1() {
        let mut family = vec![VertexSet::new(4)];
        family.extend((0..4).map(|v| VertexSet::singleton(4, v)));
        assert!(verify_universal(&UniversalSet { n: 4, k: 1, family }));
        let u = universal_set(4, 1).unwrap();
        assert!(verify_universal(&u));
        assert!(u.family.len() < 16);
    }

    #[test]
    fn empty_family_fails() {
        let u = UniversalSet {
            n: 3,
            k: 1,
            family: vec![VertexSet::new(3)],
        };
        assert_eq!(find_uncovered(&u), Some(vec![0]));
    }

    #[test]
    fn missing_one_trace_is_reported() {
        let mut u = universal_set(4, 4).unwrap();
        u.k = 2;
        u.family.retain(|h| !(h.contains(1) && h.contains(3)));
        assert_eq!(find_uncovered(&u), Some(vec![1, 3]));
    }

    #[test]
    #[ignore]
    fn family_sizes() {
        for (n, k) in [(10, 6), (12, 6), (15, 6), (20, 6), (13, 12), (30, 6), (50, 12)] {
            let t = std::time::Instant::now();
            let u = universal_set(n, k).unwrap();
            println!("n={n} k={k} size={} in {:?}", u.family.len(), t.elapsed());
        }
    }

    #[test]
    fn n6_k2() {
        assert!(verify_universal(&universal_set(6, 2).unwrap()));
    }

    #[test]
    fn combinations_enumerated() {
        let mut all = Vec::new();
        for_each_combination(4, 2, |s| all.push(s.to_vec()));
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(binomial(50, 12), 121_399_651_100);
    }

    #[test]
    fn family_members_are_base_colorings() {
        let fam = coloring_family(5, 1).unwrap();
        assert_eq!(fam.len(), 32 * 32);
        assert!(fam.iter().all(|c| c.len() == 5 && c.0.iter().all(|&x| (1..=3).contains(&x))));
        assert_eq!(coloring_family(5, 0).unwrap().len(), 1);
    }
}
