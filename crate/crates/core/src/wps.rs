//! Weighted projective spaces `P(w₀,…,wₙ)`: normalization, monomial counts,
//! the anticanonical degree and anticanonical systems of hypersurfaces.

use num::integer::{gcd, lcm};

use crate::error::{Error, Result};
use crate::exact::{q, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WpsModel {
    weights: Vec<u64>,
}

impl WpsModel {
    pub fn new(weights: &[u64]) -> Result<Self> {
        if weights.is_empty() || weights.contains(&0) {
            return Err(Error::InvalidWeights);
        }
        Ok(WpsModel {
            weights: weights.to_vec(),
        })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight_sum(&self) -> u64 {
        self.weights.iter().sum()
    }

    /// For every `j`, the weights other than `w_j` are coprime.
    pub fn is_normalized(&self) -> bool {
        (0..self.weights.len()).all(|j| {
            self.weights
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(0u64, |g, (_, &w)| gcd(g, w))
                == 1
        })
    }

    /// `O(K) = O(−Σwᵢ)`.
    pub fn canonical_degree(&self) -> i64 {
        -(self.weight_sum() as i64)
    }

    /// Number of monomials of weighted degree `m`, by enumerating all but
    /// the last exponent and solving for the last.
    pub fn h0(&self, m: i64) -> u64 {
        if m < 0 {
            return 0;
        }
        fn go(w: &[u64], m: u64) -> u64 {
            match w {
                [] => u64::from(m == 0),
                [last] => u64::from(m.is_multiple_of(*last)),
                [first, rest @ ..] => (0..=m / first).map(|k| go(rest, m - k * first)).sum(),
            }
        }
        go(&self.weights, m as u64)
    }

    /// `h0(m)` for every `0 ≤ m ≤ max` by the coin-change recurrence; used
    /// where the degrees are too large for enumeration.
    pub fn h0_table(&self, max: usize) -> Vec<u64> {
        let mut table = vec![0u64; max + 1];
        table[0] = 1;
        for &w in &self.weights {
            let w = w as usize;
            for m in w..=max {
                table[m] += table[m - w];
            }
        }
        table
    }

    /// `(−K)³ = (Σw)³ / Πw` for a normalized three-dimensional space.
    pub fn antican_self_degree(&self) -> Result<Rat> {
        self.require_threefold()?;
        if !self.is_normalized() {
            return Err(Error::NotNormalized(self.weights.clone()));
        }
        let s = self.weight_sum() as i64;
        let p: u64 = self.weights.iter().product();
        Ok(q(s * s * s) / q(p as i64))
    }

    /// `(−K)³` from monomial counts alone: `h0(m)` is a quasi-polynomial of
    /// period `lcm(w)`, so along `m = t·P·Σw` with `P·Σw = lcm(lcm(w), Σw)`
    /// it is a cubic in `t` whose third difference is `(PΣw)³/Πw`.
    pub fn antican_degree_oracle(&self) -> Result<Rat> {
        self.require_threefold()?;
        let s = self.weight_sum();
        let l = self.weights.iter().fold(1u64, |acc, &w| lcm(acc, w));
        let step = lcm(l, s);
        let p = step / s;
        let table = self.h0_table(4 * step as usize);
        let h = |t: usize| q(table[t * step as usize] as i64);
        let third = h(4) - q(3) * h(3) + q(3) * h(2) - h(1);
        let p = q(p as i64);
        Ok(third / (&p * &p * &p))
    }

    /// `dim |−K_X|` for a hypersurface `X` of degree `deg_x`, assuming the
    /// restriction `H⁰(−K_P − X) → H⁰(−K_X)` is onto:
    /// `h0(Σw − deg_x) − h0(Σw − 2·deg_x) − 1`.
    pub fn hypersurface_antican_dim(&self, deg_x: i64) -> Result<i64> {
        let s = self.weight_sum() as i64;
        if s - deg_x <= 0 {
            return Err(Error::NonPositiveDegree(s - deg_x));
        }
        Ok(self.h0(s - deg_x) as i64 - self.h0(s - 2 * deg_x) as i64 - 1)
    }

    fn require_threefold(&self) -> Result<()> {
        if self.weights.len() == 4 {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: 4,
                got: self.weights.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(ws: &[u64]) -> WpsModel {
        WpsModel::new(ws).unwrap()
    }

    #[test]
    fn normalization() {
        assert!(w(&[3, 1, 1, 1]).is_normalized());
        assert!(w(&[2, 2, 1, 1]).is_normalized());
        assert!(!w(&[2, 4, 6, 3]).is_normalized());
        assert!(WpsModel::new(&[]).is_err());
        assert!(WpsModel::new(&[1, 0]).is_err());
    }

    #[test]
    fn section_counts() {
        assert_eq!(w(&[3, 1, 1, 1]).h0(6), 39);
        assert_eq!(w(&[6, 4, 1, 1]).h0(12), 39);
        assert_eq!(w(&[1, 1, 1, 2]).h0(5), 34);
        assert_eq!(w(&[5, 3, 2]).h0(0), 1);
        assert_eq!(w(&[5, 3, 2]).h0(-1), 0);
        let m = w(&[6, 4, 1, 1]);
        let table = m.h0_table(40);
        for (d, &c) in table.iter().enumerate() {
            assert_eq!(c, m.h0(d as i64));
        }
    }

    #[test]
    fn degrees() {
        for ws in [[3, 1, 1, 1], [6, 4, 1, 1]] {
            assert_eq!(w(&ws).antican_self_degree().unwrap(), q(72));
            assert_eq!(w(&ws).antican_degree_oracle().unwrap(), q(72));
        }
        assert_eq!(w(&[1, 1, 1, 1]).antican_self_degree().unwrap(), q(64));
        assert_eq!(w(&[1, 1, 1, 1]).antican_degree_oracle().unwrap(), q(64));
        // P(1,1,1,2): 125/2
        assert_eq!(w(&[1, 1, 1, 2]).antican_degree_oracle().unwrap(), crate::exact::frac(125, 2));
        assert_eq!(w(&[3, 1, 1, 1]).canonical_degree(), -6);
    }

    #[test]
    fn degree_errors() {
        assert_eq!(
            w(&[2, 4, 6, 3]).antican_self_degree().unwrap_err(),
            Error::NotNormalized(vec![2, 4, 6, 3])
        );
        assert!(w(&[1, 1, 1]).antican_self_degree().is_err());
        assert!(w(&[1, 1, 1, 1, 1]).antican_degree_oracle().is_err());
    }

    #[test]
    fn hypersurfaces() {
        let dims: Vec<i64> = (2..=6)
            .map(|i| w(&[1, 1, 2, 3, i]).hypersurface_antican_dim(6).unwrap())
            .collect();
        assert_eq!(dims, vec![8, 12, 17, 23, 30]);
        assert_eq!(w(&[1, 1, 1, 1, 2]).hypersurface_antican_dim(3).unwrap(), 22);
        assert_eq!(
            w(&[1, 1, 1]).hypersurface_antican_dim(3).unwrap_err(),
            Error::NonPositiveDegree(0)
        );
    }
}
