//! Independent oracles. Nothing here calls the library's linear algebra.

#![allow(dead_code)]

use std::collections::BTreeMap;

pub const P: i64 = 32003;

fn inv(a: i64) -> i64 {
    let (mut r, mut e, mut b) = (1i64, P - 2, a.rem_euclid(P));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank of a dense integer matrix over `Z/P`.
pub fn rank_mod_p(mut rows: Vec<Vec<i64>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    for r in rows.iter_mut() {
        for x in r.iter_mut() {
            *x = x.rem_euclid(P);
        }
    }
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let iv = inv(rows[rank][c]);
        let pivot: Vec<i64> = rows[rank].iter().map(|x| x * iv % P).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x = (*x - f * y).rem_euclid(P);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Homology dimensions of a chain complex given by its groups (indexed by
/// degree, listing basis element keys) and a boundary function returning
/// signed targets.
fn chain_homology<K: Ord + Clone>(
    groups: &BTreeMap<i32, Vec<K>>,
    boundary: impl Fn(&K) -> Vec<(K, i64)>,
) -> BTreeMap<i32, usize> {
    let rank_of = |i: i32| -> usize {
        let (Some(src), Some(dst)) = (groups.get(&i), groups.get(&(i - 1))) else {
            return 0;
        };
        let pos: BTreeMap<&K, usize> = dst.iter().enumerate().map(|(k, x)| (x, k)).collect();
        let rows = src
            .iter()
            .map(|s| {
                let mut row = vec![0i64; dst.len()];
                for (t, c) in boundary(s) {
                    if let Some(&k) = pos.get(&t) {
                        row[k] += c;
                    }
                }
                row
            })
            .collect();
        rank_mod_p(rows)
    };
    groups
        .iter()
        .filter_map(|(&i, g)| {
            let h = g.len() - rank_of(i) - rank_of(i + 1);
            (h > 0).then_some((i, h))
        })
        .collect()
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// Multigraded Betti numbers of `S/I` from the Taylor complex: in degree `b`,
/// `β_{i,b} = dim H_i` of the complex of generator subsets with lcm exactly
/// `b`, keeping only the boundary terms of unchanged lcm.
pub fn taylor_betti(gens: &[Vec<u32>], nvars: usize) -> BTreeMap<(usize, Vec<u32>), usize> {
    let k = gens.len();
    assert!(k <= 16);
    let lcm_of = |s: u32| -> Vec<u32> {
        (0..k)
            .filter(|j| s >> j & 1 == 1)
            .fold(vec![0; nvars], |acc, j| lcm(&acc, &gens[j]))
    };
    let mut by_degree: BTreeMap<Vec<u32>, BTreeMap<i32, Vec<u32>>> = BTreeMap::new();
    for s in 0u32..1 << k {
        by_degree
            .entry(lcm_of(s))
            .or_default()
            .entry(s.count_ones() as i32)
            .or_default()
            .push(s);
    }
    let mut out = BTreeMap::new();
    for (b, groups) in by_degree {
        let h = chain_homology(&groups, |&s| {
            (0..k)
                .filter(|j| s >> j & 1 == 1)
                .enumerate()
                .map(|(pos, j)| (s & !(1 << j), if pos % 2 == 0 { 1 } else { -1 }))
                .filter(|(t, _)| lcm_of(*t) == b)
                .collect()
        });
        for (i, d) in h {
            out.insert((i as usize, b.clone()), d);
        }
    }
    out
}

/// Reduced homology of the simplicial complex generated by `facets`
/// (bitmasks), including the empty face. No facets means the void complex.
pub fn reduced_homology(facets: &[u64]) -> BTreeMap<i32, usize> {
    let mut faces = std::collections::BTreeSet::new();
    for &f in facets {
        let mut s = f;
        loop {
            faces.insert(s);
            if s == 0 {
                break;
            }
            s = (s - 1) & f;
        }
    }
    let mut groups: BTreeMap<i32, Vec<u64>> = BTreeMap::new();
    for f in faces {
        groups.entry(f.count_ones() as i32 - 1).or_default().push(f);
    }
    chain_homology(&groups, |&s| {
        (0..64)
            .filter(|j| s >> j & 1 == 1)
            .enumerate()
            .map(|(pos, j)| (s & !(1u64 << j), if pos % 2 == 0 { 1 } else { -1 }))
            .collect()
    })
}

/// Facets of `Δ_R`.
pub fn restrict(facets: &[u64], r: u64) -> Vec<u64> {
    facets.iter().map(|f| f & r).collect()
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
