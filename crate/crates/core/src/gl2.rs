//! Rank-2 representation theory: characters, Clebsch–Gordan and plethysms.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::weight::DominantWeight;

/// Multiset of dominant weights with positive multiplicities.
pub type WeightMultiset = BTreeMap<DominantWeight, u64>;

/// A Laurent polynomial in `x, y` with non-negative integer coefficients,
/// keyed by exponent pair `(a, b)` for `x^a y^b`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentCharacter(BTreeMap<(i64, i64), u64>);

impl LaurentCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(a: i64, b: i64) -> Self {
        let mut m = BTreeMap::new();
        m.insert((a, b), 1);
        Self(m)
    }

    pub fn add_term(&mut self, exp: (i64, i64), coeff: u64) {
        if coeff == 0 {
            return;
        }
        let e = self.0.entry(exp).or_insert(0);
        *e = e.checked_add(coeff).expect("character coefficient overflow");
    }

    pub fn coefficient(&self, a: i64, b: i64) -> u64 {
        self.0.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((i64, i64), u64)> + '_ {
        self.0.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Value at `x = y = 1`.
    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, v) in other.terms() {
            out.add_term(k, v);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                let c = c1.checked_mul(c2).expect("character coefficient overflow");
                out.add_term((a1 + a2, b1 + b2), c);
            }
        }
        out
    }

    pub fn scale(&self, c: u64) -> Self {
        let mut out = Self::zero();
        for (k, v) in self.terms() {
            out.add_term(k, v.checked_mul(c).expect("character coefficient overflow"));
        }
        out
    }
}

impl fmt::Display for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if *c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "x^{a}y^{b}")?;
        }
        Ok(())
    }
}

fn check_rank2(w: &DominantWeight) -> Result<(i64, i64)> {
    if w.len() != 2 {
        return Err(Error::LengthMismatch { expected: 2, got: w.len() });
    }
    Ok((w[0], w[1]))
}

fn weight2(a: i64, b: i64) -> DominantWeight {
    DominantWeight::new(vec![a, b]).expect("a >= b")
}

/// `sum_{j=0}^{w1-w2} x^{w1-j} y^{w2+j}`.
pub fn gl2_character(w: &DominantWeight) -> Result<LaurentCharacter> {
    let (a, b) = check_rank2(w)?;
    let mut c = LaurentCharacter::zero();
    for j in 0..=(a - b) {
        c.add_term((a - j, b + j), 1);
    }
    Ok(c)
}

/// Character of a formal sum of rank-2 irreducibles.
pub fn multiset_character(m: &WeightMultiset) -> Result<LaurentCharacter> {
    let mut out = LaurentCharacter::zero();
    for (w, &mult) in m {
        out = out.add(&gl2_character(w)?.scale(mult));
    }
    Ok(out)
}

/// Writes `c` as a sum of irreducible rank-2 characters by repeatedly peeling
/// off the lexicographically largest exponent, which is the highest weight of
/// the summand it belongs to.
pub fn decompose_gl2_character(c: &LaurentCharacter) -> Result<WeightMultiset> {
    let mut rest = c.0.clone();
    let mut out = WeightMultiset::new();
    while let Some((&(a, b), &coeff)) = rest.iter().next_back() {
        if a < b {
            return Err(Error::NotDecomposable);
        }
        for j in 0..=(a - b) {
            let key = (a - j, b + j);
            let have = rest.get(&key).copied().unwrap_or(0);
            if have < coeff {
                return Err(Error::NotDecomposable);
            }
            if have == coeff {
                rest.remove(&key);
            } else {
                rest.insert(key, have - coeff);
            }
        }
        out.insert(weight2(a, b), coeff);
    }
    Ok(out)
}

/// Clebsch–Gordan: `(a1+b1-k, a2+b2+k)` for `0 <= k <= min(a1-a2, b1-b2)`.
pub fn gl2_tensor(a: &DominantWeight, b: &DominantWeight) -> Result<WeightMultiset> {
    let (a1, a2) = check_rank2(a)?;
    let (b1, b2) = check_rank2(b)?;
    let mut out = WeightMultiset::new();
    for k in 0..=(a1 - a2).min(b1 - b2) {
        *out.entry(weight2(a1 + b1 - k, a2 + b2 + k)).or_insert(0) += 1;
    }
    Ok(out)
}

/// Tensor product of two formal sums, bilinearly.
pub fn gl2_tensor_multisets(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::new();
    for (wa, ma) in a {
        for (wb, mb) in b {
            for (w, m) in gl2_tensor(wa, wb)? {
                *out.entry(w).or_insert(0) += m * ma * mb;
            }
        }
    }
    Ok(out)
}

fn weights_of(w: &DominantWeight) -> Result<Vec<(i64, i64)>> {
    let (a, b) = check_rank2(w)?;
    Ok((0..=(a - b)).map(|j| (a - j, b + j)).collect())
}

/// `∧^k` of the irreducible with highest weight `w`: the character is the
/// elementary symmetric polynomial of degree `k` in the monomials of `w`.
/// Zero when `k` exceeds the dimension.
pub fn wedge_power_gl2(w: &DominantWeight, k: usize) -> Result<WeightMultiset> {
    let mons = weights_of(w)?;
    let mut c = LaurentCharacter::zero();
    subsets(&mons, k, 0, (0, 0), &mut c);
    decompose_gl2_character(&c)
}

/// `S^k` of the irreducible with highest weight `w`, via the complete
/// homogeneous symmetric polynomial of degree `k` in its monomials.
pub fn sym_power_gl2(w: &DominantWeight, k: usize) -> Result<WeightMultiset> {
    let mons = weights_of(w)?;
    let mut c = LaurentCharacter::zero();
    multisubsets(&mons, k, 0, (0, 0), &mut c);
    decompose_gl2_character(&c)
}

fn subsets(m: &[(i64, i64)], k: usize, from: usize, acc: (i64, i64), out: &mut LaurentCharacter) {
    if k == 0 {
        out.add_term(acc, 1);
        return;
    }
    for i in from..m.len() {
        if m.len() - i < k {
            break;
        }
        subsets(m, k - 1, i + 1, (acc.0 + m[i].0, acc.1 + m[i].1), out);
    }
}

fn multisubsets(m: &[(i64, i64)], k: usize, from: usize, acc: (i64, i64), out: &mut LaurentCharacter) {
    if k == 0 {
        out.add_term(acc, 1);
        return;
    }
    for i in from..m.len() {
        multisubsets(m, k - 1, i, (acc.0 + m[i].0, acc.1 + m[i].1), out);
    }
}

/// Sum of `(w1 - w2 + 1) * multiplicity`.
pub fn multiset_dimension(m: &WeightMultiset) -> u64 {
    m.iter().map(|(w, c)| (w[0] - w[1] + 1) as u64 * c).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> DominantWeight {
        weight2(a, b)
    }

    fn ms(v: &[((i64, i64), u64)]) -> WeightMultiset {
        v.iter().map(|&((a, b), m)| (w(a, b), m)).collect()
    }

    fn chr(v: &[((i64, i64), u64)]) -> LaurentCharacter {
        let mut c = LaurentCharacter::zero();
        for &(e, m) in v {
            c.add_term(e, m);
        }
        c
    }

    #[test]
    fn characters() {
        assert_eq!(gl2_character(&w(1, 0)).unwrap(), chr(&[((1, 0), 1), ((0, 1), 1)]));
        assert_eq!(gl2_character(&w(1, 1)).unwrap(), chr(&[((1, 1), 1)]));
        assert_eq!(
            gl2_character(&w(3, 0)).unwrap(),
            chr(&[((3, 0), 1), ((2, 1), 1), ((1, 2), 1), ((0, 3), 1)])
        );
        assert!(gl2_character(&DominantWeight::new(vec![1, 0, 0]).unwrap()).is_err());
    }

    #[test]
    fn decomposition() {
        let std = gl2_character(&w(1, 0)).unwrap();
        assert_eq!(decompose_gl2_character(&std).unwrap(), ms(&[((1, 0), 1)]));
        assert_eq!(
            decompose_gl2_character(&std.mul(&std)).unwrap(),
            ms(&[((2, 0), 1), ((1, 1), 1)])
        );
        // x alone is not symmetric
        assert_eq!(
            decompose_gl2_character(&LaurentCharacter::monomial(1, 0)),
            Err(Error::NotDecomposable)
        );
        assert_eq!(
            decompose_gl2_character(&LaurentCharacter::monomial(0, 1)),
            Err(Error::NotDecomposable)
        );
    }

    #[test]
    fn wedge_of_cubic() {
        // elementary symmetric polynomial of degree 2 in x^3, x^2y, xy^2, y^3
        let by_hand = chr(&[
            ((5, 1), 1),
            ((4, 2), 1),
            ((3, 3), 2),
            ((2, 4), 1),
            ((1, 5), 1),
        ]);
        assert_eq!(decompose_gl2_character(&by_hand).unwrap(), ms(&[((5, 1), 1), ((3, 3), 1)]));
        assert_eq!(wedge_power_gl2(&w(3, 0), 2).unwrap(), ms(&[((5, 1), 1), ((3, 3), 1)]));
        assert_eq!(wedge_power_gl2(&w(3, 0), 3).unwrap(), ms(&[((6, 3), 1)]));
        assert_eq!(wedge_power_gl2(&w(3, 0), 4).unwrap(), ms(&[((6, 6), 1)]));
        assert_eq!(wedge_power_gl2(&w(3, 0), 1).unwrap(), ms(&[((3, 0), 1)]));
        assert_eq!(wedge_power_gl2(&w(3, 0), 0).unwrap(), ms(&[((0, 0), 1)]));
        assert!(wedge_power_gl2(&w(3, 0), 5).unwrap().is_empty());
    }

    #[test]
    fn sym_powers() {
        assert_eq!(sym_power_gl2(&w(1, 0), 3).unwrap(), ms(&[((3, 0), 1)]));
        // S^2 S^2 = S^4 + Σ^{(2,2)}
        assert_eq!(sym_power_gl2(&w(2, 0), 2).unwrap(), ms(&[((4, 0), 1), ((2, 2), 1)]));
    }

    #[test]
    fn clebsch_gordan() {
        assert_eq!(
            gl2_tensor(&w(3, 0), &w(3, 0)).unwrap(),
            ms(&[((6, 0), 1), ((5, 1), 1), ((4, 2), 1), ((3, 3), 1)])
        );
        let direct = gl2_tensor(&w(3, 0), &w(0, -3)).unwrap();
        assert_eq!(direct, ms(&[((3, -3), 1), ((2, -2), 1), ((1, -1), 1), ((0, 0), 1)]));
        let via_chars = gl2_character(&w(3, 0)).unwrap().mul(&gl2_character(&w(0, -3)).unwrap());
        assert_eq!(decompose_gl2_character(&via_chars).unwrap(), direct);
        assert_eq!(gl2_tensor(&w(4, -2), &w(0, 0)).unwrap(), ms(&[((4, -2), 1)]));
    }
}
