//! A quadric bundle `X ∼ 2M + rF` inside `P(E)`, `E` split of rank 4 over
//! `P¹`. With `G = M|_X` and `Q = F|_X`, a degree-3 product on `X` is the
//! ambient degree-4 product with the class of `X`.

use crate::chern::SplitBundle;
use crate::chow::curve::{CurveBundleRing, CurveDivisor, CurveTerm};
use crate::error::{Error, Result};
use crate::exact::{q, Rat};

/// `g·G + q·Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadricDivisor {
    pub g: Rat,
    pub q: Rat,
}

impl QuadricDivisor {
    pub fn new(g: Rat, q: Rat) -> Self {
        QuadricDivisor { g, q }
    }

    pub fn ints(g: i64, qq: i64) -> Self {
        QuadricDivisor::new(q(g), q(qq))
    }

    fn ambient(&self) -> CurveDivisor {
        CurveDivisor::new(self.g.clone(), self.q.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricBundleModel {
    ambient: CurveBundleRing,
    r: i64,
}

impl QuadricBundleModel {
    pub fn new(bundle: SplitBundle, r: i64) -> Result<Self> {
        if bundle.rank() != 4 {
            return Err(Error::RankMismatch {
                expected: 4,
                got: bundle.rank(),
            });
        }
        Ok(QuadricBundleModel {
            ambient: CurveBundleRing::new(bundle),
            r,
        })
    }

    pub fn d(&self) -> i64 {
        self.ambient.d()
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn bundle(&self) -> &SplitBundle {
        self.ambient.bundle()
    }

    fn class_of_x(&self) -> CurveDivisor {
        CurveDivisor::ints(2, self.r)
    }

    /// `Gᵃ Qᵇ` with `a + b = 3`.
    pub fn monomial(&self, a: u32, b: u32) -> Result<Rat> {
        if a + b != 3 {
            return Err(Error::WrongDegree {
                expected: 3,
                got: a + b,
            });
        }
        let mut factors = vec![QuadricDivisor::ints(1, 0); a as usize];
        factors.extend(vec![QuadricDivisor::ints(0, 1); b as usize]);
        self.product(&factors)
    }

    pub fn product(&self, factors: &[QuadricDivisor]) -> Result<Rat> {
        Ok(self.ambient.reduce(self.expand(factors)?))
    }

    /// The ambient expansion of `x₁·x₂·x₃·[X]`.
    pub fn expand(&self, factors: &[QuadricDivisor]) -> Result<Vec<CurveTerm>> {
        if factors.len() != 3 {
            return Err(Error::WrongDegree {
                expected: 3,
                got: factors.len() as u32,
            });
        }
        let mut amb: Vec<CurveDivisor> = factors.iter().map(QuadricDivisor::ambient).collect();
        amb.push(self.class_of_x());
        self.ambient.expand(&amb)
    }

    pub fn reduce_with(&self, terms: Vec<CurveTerm>, pick: impl FnMut(usize) -> usize) -> Rat {
        self.ambient.reduce_with(terms, pick)
    }

    /// `−K_X = 2G + (2−d−r)Q` by adjunction from `−K_P = 4M + (2−d)F`.
    pub fn anticanonical(&self) -> QuadricDivisor {
        QuadricDivisor::ints(2, 2 - self.d() - self.r)
    }

    /// `−K_X = H + B` with `H = G + αQ`, `B = G − (d+r+α−2)Q`.
    pub fn split(&self, alpha: i64) -> (QuadricDivisor, QuadricDivisor) {
        (
            QuadricDivisor::ints(1, alpha),
            QuadricDivisor::ints(1, -(self.d() + self.r + alpha - 2)),
        )
    }

    /// `(−K)·B·H` for the split at `α`.
    pub fn antican_bh(&self, alpha: i64) -> Result<Rat> {
        let (h, b) = self.split(alpha);
        self.product(&[self.anticanonical(), b, h])
    }
}
