//! `W = P(E)` for a rank-2 bundle `E` over `P²` or `F_e`. Classes are
//! polynomials in the tautological class `L` with coefficients pulled back
//! from the surface, subject to `L² = L·f*c₁ − f*c₂` and `deg L·f*[pt] = 1`.

use num::Zero;

use crate::chern::ChernData;
use crate::error::{Error, Result};
use crate::exact::{q, Rat};
use crate::lattice::{DivClass, Surface};

/// A homogeneous cycle on the base surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseCycle {
    Fundamental,
    Divisor(DivClass),
    /// The class of a point.
    Point,
}

/// `coef · Lᵏ · f*β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceTerm {
    pub coef: Rat,
    pub l_pow: u32,
    pub base: BaseCycle,
}

/// `taut·L + f*base`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BundleDivisor {
    pub taut: Rat,
    pub base: DivClass,
}

impl BundleDivisor {
    pub fn new(taut: Rat, base: DivClass) -> Self {
        BundleDivisor { taut, base }
    }

    /// `f*D`.
    pub fn pullback(base: DivClass) -> Self {
        BundleDivisor::new(Rat::zero(), base)
    }

    pub fn add(&self, other: &BundleDivisor) -> BundleDivisor {
        BundleDivisor::new(&self.taut + &other.taut, &self.base + &other.base)
    }

    pub fn sub(&self, other: &BundleDivisor) -> BundleDivisor {
        BundleDivisor::new(&self.taut - &other.taut, &self.base - &other.base)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceBundleRing {
    z: Surface,
    e: ChernData,
}

impl SurfaceBundleRing {
    pub fn new(z: Surface, e: ChernData) -> Result<Self> {
        if e.rank != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                got: e.rank,
            });
        }
        if e.c1.coeffs().len() != z.rank() {
            return Err(Error::DimensionMismatch {
                expected: z.rank(),
                got: e.c1.coeffs().len(),
            });
        }
        Ok(SurfaceBundleRing { z, e })
    }

    pub fn surface(&self) -> Surface {
        self.z
    }

    pub fn chern(&self) -> &ChernData {
        &self.e
    }

    /// The tautological class `L`.
    pub fn l(&self) -> BundleDivisor {
        BundleDivisor::new(q(1), self.z.zero())
    }

    /// `−K_W = 2L + f*(−K_Z − c₁)`.
    pub fn anticanonical(&self) -> BundleDivisor {
        let base = &(-&self.z.canonical_class()) - &self.e.c1;
        BundleDivisor::new(q(2), base)
    }

    /// Degree of a product of three divisors.
    pub fn product(&self, factors: &[BundleDivisor]) -> Result<Rat> {
        Ok(self.reduce(self.expand(factors)?))
    }

    /// Multiplies the factors out, intersecting pulled-back classes on the base
    /// but leaving powers of `L` unreduced.
    pub fn expand(&self, factors: &[BundleDivisor]) -> Result<Vec<SurfaceTerm>> {
        if factors.len() != 3 {
            return Err(Error::WrongDegree {
                expected: 3,
                got: factors.len() as u32,
            });
        }
        for x in factors {
            if x.base.coeffs().len() != self.z.rank() {
                return Err(Error::DimensionMismatch {
                    expected: self.z.rank(),
                    got: x.base.coeffs().len(),
                });
            }
        }
        let mut terms = vec![SurfaceTerm {
            coef: q(1),
            l_pow: 0,
            base: BaseCycle::Fundamental,
        }];
        for x in factors {
            let mut next = Vec::with_capacity(terms.len() * 2);
            for t in &terms {
                if !x.taut.is_zero() {
                    next.push(SurfaceTerm {
                        coef: &t.coef * &x.taut,
                        l_pow: t.l_pow + 1,
                        base: t.base.clone(),
                    });
                }
                if !x.base.is_zero() {
                    if let Some((c, b)) = self.times_divisor(&t.base, &x.base) {
                        next.push(SurfaceTerm {
                            coef: &t.coef * c,
                            l_pow: t.l_pow,
                            base: b,
                        });
                    }
                }
            }
            terms = next;
        }
        Ok(terms)
    }

    /// `β·D` on the base, as a scalar times a cycle; `None` when it vanishes.
    fn times_divisor(&self, beta: &BaseCycle, d: &DivClass) -> Option<(Rat, BaseCycle)> {
        match beta {
            BaseCycle::Fundamental => Some((q(1), BaseCycle::Divisor(d.clone()))),
            BaseCycle::Divisor(b) => {
                let v = self.z.intersect(b, d).expect("classes checked on entry");
                Some((v, BaseCycle::Point))
            }
            BaseCycle::Point => None,
        }
    }

    pub fn reduce(&self, terms: Vec<SurfaceTerm>) -> Rat {
        self.reduce_with(terms, |n| n - 1)
    }

    /// Applies `Lᵏβ → Lᵏ⁻¹(c₁β) − Lᵏ⁻²(c₂β)` until every power of `L` is at
    /// most 1, choosing redexes with `pick`, then takes degrees.
    pub fn reduce_with(&self, mut terms: Vec<SurfaceTerm>, mut pick: impl FnMut(usize) -> usize) -> Rat {
        loop {
            let redexes: Vec<usize> = (0..terms.len()).filter(|&i| terms[i].l_pow >= 2).collect();
            if redexes.is_empty() {
                break;
            }
            let i = redexes[pick(redexes.len()) % redexes.len()];
            let t = terms.swap_remove(i);
            if let Some((c, b)) = self.times_divisor(&t.base, &self.e.c1) {
                terms.push(SurfaceTerm {
                    coef: &t.coef * c,
                    l_pow: t.l_pow - 1,
                    base: b,
                });
            }
            if t.base == BaseCycle::Fundamental {
                terms.push(SurfaceTerm {
                    coef: -(&t.coef * &self.e.c2),
                    l_pow: t.l_pow - 2,
                    base: BaseCycle::Point,
                });
            }
        }
        let mut total = Rat::zero();
        for t in terms {
            if t.l_pow == 1 && t.base == BaseCycle::Point {
                total += t.coef;
            }
        }
        total
    }
}

/// `−K_W³ = 6K_Z² + 2c₁² − 8c₂` for `W = P(E)`, `E` of rank 2.
pub fn antican_cube_p1bundle_surface(z: Surface, e: &ChernData) -> Result<Rat> {
    if e.rank != 2 {
        return Err(Error::RankMismatch {
            expected: 2,
            got: e.rank,
        });
    }
    let c1sq = z.self_intersection(&e.c1)?;
    Ok(q(6) * z.canonical_degree() + q(2) * c1sq - q(8) * &e.c2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(z: Surface, c1: &[i64], c2: i64) -> SurfaceBundleRing {
        SurfaceBundleRing::new(z, ChernData::rank2(DivClass::from_ints(c1), q(c2))).unwrap()
    }

    fn pb(c: &[i64]) -> BundleDivisor {
        BundleDivisor::pullback(DivClass::from_ints(c))
    }

    #[test]
    fn basic_products() {
        let r = ring(Surface::Hirzebruch(2), &[3, 5], 7);
        let l = r.l();
        // L³ = c₁² − c₂ = (−18 + 30) − 7
        assert_eq!(r.product(&[l.clone(), l.clone(), l.clone()]).unwrap(), q(5));
        // L²·f*l = c₁·l = 3
        assert_eq!(r.product(&[l.clone(), l.clone(), pb(&[0, 1])]).unwrap(), q(3));
        assert_eq!(r.product(&[l.clone(), pb(&[1, 0]), pb(&[1, 0])]).unwrap(), q(-2));
        assert_eq!(r.product(&[pb(&[1, 1]), pb(&[2, 1]), pb(&[0, 5])]).unwrap(), q(0));
    }

    #[test]
    fn p1xp1_with_c1_minus_3sigma() {
        let r = ring(Surface::P1XP1, &[-3, 0], 0);
        let l = r.l();
        assert_eq!(r.product(&[l.clone(), l.clone(), pb(&[1, 0])]).unwrap(), q(0));
        assert_eq!(r.product(&[l.clone(), l.clone(), pb(&[0, 1])]).unwrap(), q(-3));
    }

    #[test]
    fn antican_cube_matches_engine() {
        for (z, c1, c2, want) in [
            (Surface::ProjPlane, vec![3], 0, 72),
            (Surface::ProjPlane, vec![-2], 0, 62),
            (Surface::ProjPlane, vec![-2], 1, 54),
            (Surface::Hirzebruch(2), vec![-1, 0], 0, 44),
            (Surface::Hirzebruch(2), vec![-1, 0], 2, 28),
        ] {
            let r = ring(z, &c1, c2);
            let k = r.anticanonical();
            let engine = r.product(&[k.clone(), k.clone(), k.clone()]).unwrap();
            let closed = antican_cube_p1bundle_surface(z, r.chern()).unwrap();
            assert_eq!(engine, closed);
            assert_eq!(closed, q(want));
        }
    }

    #[test]
    fn errors() {
        let r = ring(Surface::ProjPlane, &[1], 0);
        assert_eq!(
            r.product(&[r.l()]).unwrap_err(),
            Error::WrongDegree { expected: 3, got: 1 }
        );
        assert!(SurfaceBundleRing::new(
            Surface::ProjPlane,
            ChernData::new(3, DivClass::from_ints(&[1]), q(0))
        )
        .is_err());
        assert!(r.product(&[pb(&[1, 0]), r.l(), r.l()]).is_err());
    }
}
