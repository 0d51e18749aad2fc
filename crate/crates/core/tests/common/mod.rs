//! Independent oracles shared by the integration tests. Nothing here calls
//! into the routines it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use bbw_core::{DominantWeight, LaurentCharacter, Partition};

/// Kostka number: semistandard tableaux of shape `shape` whose content is
/// `content` (any composition), built by adding one horizontal strip per value.
pub fn kostka(shape: &[u32], content: &[u32]) -> u64 {
    if content.iter().sum::<u32>() != shape.iter().sum::<u32>() {
        return 0;
    }
    let mut cur = vec![0u32; shape.len()];
    kostka_rec(shape, &mut cur, content)
}

fn kostka_rec(shape: &[u32], cur: &mut Vec<u32>, content: &[u32]) -> u64 {
    let Some((&k, rest)) = content.split_first() else {
        return u64::from(cur.as_slice() == shape);
    };
    let before = cur.clone();
    let mut next = before.clone();
    let mut total = 0;
    grow(shape, &before, &mut next, k, 0, rest, &mut total);
    total
}

// new boxes in row r must sit under old boxes of row r-1
fn grow(shape: &[u32], before: &[u32], next: &mut Vec<u32>, k: u32, r: usize, rest: &[u32], total: &mut u64) {
    if k == 0 {
        *total += kostka_rec(shape, next, rest);
        return;
    }
    if r >= shape.len() {
        return;
    }
    let cap = if r == 0 { shape[0] } else { shape[r].min(before[r - 1]) };
    let room = cap.saturating_sub(before[r]);
    for add in 0..=room.min(k) {
        next[r] = before[r] + add;
        grow(shape, before, next, k - add, r + 1, rest, total);
    }
    next[r] = before[r];
}

/// All compositions of `total` bounded entrywise by `bound`.
pub fn compositions_below(bound: &[u32], total: u32) -> Vec<Vec<u32>> {
    fn go(bound: &[u32], i: usize, rem: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == bound.len() {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=bound[i].min(rem) {
            cur.push(v);
            go(bound, i + 1, rem - v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(bound, 0, total, &mut Vec::new(), &mut out);
    out
}

fn sorted_desc(v: &[u32]) -> Vec<u32> {
    let mut s = v.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    s
}

/// Littlewood–Richardson coefficients from the monomial expansion of the
/// product `s_a * s_b` in `l(a) + l(b)` variables: the coefficient of each
/// dominant monomial is computed from Kostka numbers, then Schur functions are
/// peeled off in decreasing lexicographic order.
pub fn lr_by_polynomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    let vars = (a.length() + b.length()).max(1);
    let size = a.size() + b.size();
    let pad = |p: &[u32]| {
        let mut v = p.to_vec();
        v.resize(vars, 0);
        v
    };
    let targets: Vec<Partition> = Partition::all_of_size(size)
        .into_iter()
        .filter(|p| p.length() <= vars)
        .collect();

    // coefficient of x^nu in s_a * s_b
    let mut product: BTreeMap<Partition, i64> = BTreeMap::new();
    for nu in &targets {
        let nu_v = pad(nu.parts());
        let mut coeff = 0u64;
        for alpha in compositions_below(&nu_v, a.size()) {
            let beta: Vec<u32> = nu_v.iter().zip(&alpha).map(|(n, x)| n - x).collect();
            let ka = kostka(a.parts(), &sorted_desc(&alpha));
            if ka == 0 {
                continue;
            }
            coeff += ka * kostka(b.parts(), &sorted_desc(&beta));
        }
        product.insert(nu.clone(), coeff as i64);
    }

    // targets are in reverse lexicographic order already
    let mut out = BTreeMap::new();
    for (idx, lam) in targets.iter().enumerate() {
        let c = product[lam];
        assert!(c >= 0, "negative coefficient while peeling");
        if c == 0 {
            continue;
        }
        out.insert(lam.clone(), c as u64);
        for nu in &targets[idx..] {
            let k = kostka(lam.parts(), nu.parts()) as i64;
            *product.get_mut(nu).unwrap() -= c * k;
        }
    }
    out
}

/// `prod (1 + t m)` over the monomials `m` of the irreducible with highest
/// weight `w`, returning the coefficient of `t^k` for every `k`.
pub fn elementary_by_generating_function(w: &DominantWeight) -> Vec<LaurentCharacter> {
    let monomials: Vec<(i64, i64)> = (0..=(w[0] - w[1])).map(|j| (w[0] - j, w[1] + j)).collect();
    let mut layers = vec![LaurentCharacter::monomial(0, 0)];
    for &(a, b) in &monomials {
        let mut next = vec![LaurentCharacter::zero(); layers.len() + 1];
        for (k, layer) in layers.iter().enumerate() {
            next[k] = next[k].add(layer);
            next[k + 1] = next[k + 1].add(&layer.mul(&LaurentCharacter::monomial(a, b)));
        }
        layers = next;
    }
    layers
}

/// Coefficient of `t^k` in `prod 1/(1 - t m)`, by dynamic programming over
/// the monomials.
pub fn complete_by_generating_function(w: &DominantWeight, k: usize) -> LaurentCharacter {
    let monomials: Vec<(i64, i64)> = (0..=(w[0] - w[1])).map(|j| (w[0] - j, w[1] + j)).collect();
    let mut h = vec![LaurentCharacter::zero(); k + 1];
    h[0] = LaurentCharacter::monomial(0, 0);
    for &(a, b) in &monomials {
        let m = LaurentCharacter::monomial(a, b);
        for deg in 1..=k {
            let shifted = h[deg - 1].mul(&m);
            h[deg] = h[deg].add(&shifted);
        }
    }
    h.swap_remove(k)
}

/// `sum_j x^{w1-j} y^{w2+j}` written out directly.
pub fn rank2_character(w1: i64, w2: i64) -> LaurentCharacter {
    let mut c = LaurentCharacter::zero();
    for j in 0..=(w1 - w2) {
        c.add_term((w1 - j, w2 + j), 1);
    }
    c
}

/// Binomial coefficient as u128, from Pascal's rule.
pub fn choose(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// Stars and bars: number of monomials of degree `k` in `n` variables.
pub fn monomials_of_degree(n: u64, k: u64) -> u128 {
    choose(n + k - 1, k)
}
