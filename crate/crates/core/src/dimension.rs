//! Dimensions of irreducible `GL_n`-representations.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::weight::{DominantWeight, Partition};

/// Dimension of the irreducible `GL_n`-module with highest weight `w`, where
/// `n = w.len()`, from the product formula
/// `prod_{i<j} (w_i - w_j + j - i) / (j - i)`.
///
/// Numerator and denominator are accumulated as big integers and divided once.
pub fn weyl_dimension(w: &DominantWeight) -> BigUint {
    let e = w.entries();
    let n = e.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = (j - i) as i64;
            num *= e[i] - e[j] + gap;
            den *= gap;
        }
    }
    debug_assert!((&num % &den).is_zero());
    let q = num / den;
    q.to_biguint().expect("dominant weight has positive dimension")
}

/// Number of semistandard Young tableaux of shape `p` with entries in `1..=n`,
/// by direct enumeration.
pub fn count_ssyt(p: &Partition, n: usize) -> BigUint {
    if p.length() > n {
        return BigUint::zero();
    }
    let cells: Vec<(usize, usize)> = p
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = p.parts().iter().map(|&l| vec![0; l as usize]).collect();
    let mut count = 0u64;
    fill(&cells, 0, n, &mut grid, &mut count);
    BigUint::from(count)
}

fn fill(cells: &[(usize, usize)], idx: usize, n: usize, grid: &mut [Vec<usize>], count: &mut u64) {
    let Some(&(r, c)) = cells.get(idx) else {
        *count += 1;
        return;
    };
    let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    // rows below must still fit strictly under this cell
    let below = grid[r + 1..].iter().take_while(|row| row.len() > c).count();
    let hi = n.saturating_sub(below);
    for v in lo_row.max(lo_col)..=hi {
        grid[r][c] = v;
        fill(cells, idx + 1, n, grid, count);
    }
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
