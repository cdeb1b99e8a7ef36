//! `P(E)` for a split bundle `E` of rank `r` over `P¹`. Generators: the
//! tautological class `M` and the fibre `F`, with `F² = 0`,
//! `Mʳ = d·Mʳ⁻¹F` and `deg Mʳ⁻¹F = 1`.

use std::collections::BTreeMap;

use num::Zero;

use crate::chern::{h0_sym3_split_p1, SplitBundle};
use crate::error::{Error, Result};
use crate::exact::{q, Rat};

/// `m·M + f·F`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveDivisor {
    pub m: Rat,
    pub f: Rat,
}

impl CurveDivisor {
    pub fn new(m: Rat, f: Rat) -> Self {
        CurveDivisor { m, f }
    }

    pub fn ints(m: i64, f: i64) -> Self {
        CurveDivisor::new(q(m), q(f))
    }
}

/// `coef · Mᵃ Fᵇ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveTerm {
    pub coef: Rat,
    pub m_pow: u32,
    pub f_pow: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveBundleRing {
    bundle: SplitBundle,
}

impl CurveBundleRing {
    pub fn new(bundle: SplitBundle) -> Self {
        CurveBundleRing { bundle }
    }

    pub fn bundle(&self) -> &SplitBundle {
        &self.bundle
    }

    /// Dimension of `P(E)`, equal to the rank.
    pub fn dim(&self) -> u32 {
        self.bundle.rank()
    }

    pub fn d(&self) -> i64 {
        self.bundle.degree()
    }

    /// `−K = r·M + (2−d)·F`.
    pub fn anticanonical(&self) -> CurveDivisor {
        CurveDivisor::ints(self.dim() as i64, 2 - self.d())
    }

    /// Degree of `Mᵃ Fᵇ` with `a + b = dim`.
    pub fn monomial(&self, a: u32, b: u32) -> Result<Rat> {
        self.check_degree(a + b)?;
        Ok(self.reduce(vec![CurveTerm {
            coef: q(1),
            m_pow: a,
            f_pow: b,
        }]))
    }

    /// Degree of a product of `dim` divisors.
    pub fn product(&self, factors: &[CurveDivisor]) -> Result<Rat> {
        Ok(self.reduce(self.expand(factors)?))
    }

    /// Multiplies out the factors without applying any relation.
    pub fn expand(&self, factors: &[CurveDivisor]) -> Result<Vec<CurveTerm>> {
        self.check_degree(factors.len() as u32)?;
        let mut terms = vec![CurveTerm {
            coef: q(1),
            m_pow: 0,
            f_pow: 0,
        }];
        for x in factors {
            let mut next = Vec::with_capacity(terms.len() * 2);
            for t in &terms {
                if !x.m.is_zero() {
                    next.push(CurveTerm {
                        coef: &t.coef * &x.m,
                        m_pow: t.m_pow + 1,
                        f_pow: t.f_pow,
                    });
                }
                if !x.f.is_zero() {
                    next.push(CurveTerm {
                        coef: &t.coef * &x.f,
                        m_pow: t.m_pow,
                        f_pow: t.f_pow + 1,
                    });
                }
            }
            terms = next;
        }
        Ok(terms)
    }

    pub fn reduce(&self, terms: Vec<CurveTerm>) -> Rat {
        self.reduce_with(terms, |n| n - 1)
    }

    /// Rewrites until every term is `Mʳ⁻¹F` or zero, then applies the degree
    /// map. `pick(n)` returns the index of the next redex among `n` candidates.
    pub fn reduce_with(&self, mut terms: Vec<CurveTerm>, mut pick: impl FnMut(usize) -> usize) -> Rat {
        let r = self.dim();
        let d = q(self.d());
        loop {
            let redexes: Vec<usize> = (0..terms.len())
                .filter(|&i| {
                    let t = &terms[i];
                    t.f_pow >= 2 || t.m_pow >= r
                })
                .collect();
            if redexes.is_empty() {
                break;
            }
            let i = redexes[pick(redexes.len()) % redexes.len()];
            let t = terms.swap_remove(i);
            if t.f_pow >= 2 {
                continue;
            }
            terms.push(CurveTerm {
                coef: t.coef * &d,
                m_pow: t.m_pow - 1,
                f_pow: t.f_pow + 1,
            });
        }
        let mut total = Rat::zero();
        for t in terms {
            if t.m_pow + 1 == r && t.f_pow == 1 {
                total += t.coef;
            }
        }
        total
    }

    /// Collects terms by exponent; handy for displaying an expansion.
    pub fn collect(terms: &[CurveTerm]) -> BTreeMap<(u32, u32), Rat> {
        let mut out: BTreeMap<(u32, u32), Rat> = BTreeMap::new();
        for t in terms {
            *out.entry((t.m_pow, t.f_pow)).or_insert_with(Rat::zero) += &t.coef;
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    fn check_degree(&self, got: u32) -> Result<()> {
        if got == self.dim() {
            Ok(())
        } else {
            Err(Error::WrongDegree {
                expected: self.dim(),
                got,
            })
        }
    }
}

/// Anticanonical data of `X = P(O(d₁)⊕O(d₂)⊕O)` over `P¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2BundleAntican {
    pub class: CurveDivisor,
    /// `h⁰(−K) = h⁰(P¹, S³E(2−d))`.
    pub h0: u64,
    pub dim: i64,
    /// `(−K)³` computed in the Chow ring.
    pub k3: Rat,
}

/// Requires rank 3 with smallest degree 0 (the normalization `d₃ = 0`).
pub fn antican_p2bundle_p1(bundle: &SplitBundle) -> Result<P2BundleAntican> {
    if bundle.rank() != 3 {
        return Err(Error::RankMismatch {
            expected: 3,
            got: bundle.rank(),
        });
    }
    let degs = bundle.degrees();
    if degs[2] != 0 {
        return Err(Error::OutOfRange(format!(
            "smallest summand must be O, got degrees {degs:?}"
        )));
    }
    let ring = CurveBundleRing::new(bundle.clone());
    let class = ring.anticanonical();
    let k3 = ring.product(&[class.clone(), class.clone(), class.clone()])?;
    let h0 = h0_sym3_split_p1(degs[0], degs[1], 2 - bundle.degree());
    Ok(P2BundleAntican {
        class,
        h0,
        dim: h0 as i64 - 1,
        k3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(d: &[i64]) -> CurveBundleRing {
        CurveBundleRing::new(SplitBundle::new(d.to_vec()).unwrap())
    }

    #[test]
    fn relations() {
        let r = ring(&[4, 3, 1, 0]);
        assert_eq!(r.monomial(4, 0).unwrap(), q(8));
        assert_eq!(r.monomial(3, 1).unwrap(), q(1));
        assert_eq!(r.monomial(2, 2).unwrap(), q(0));
        assert_eq!(r.monomial(0, 4).unwrap(), q(0));
        let r = ring(&[6, 2, 0]);
        assert_eq!(r.monomial(3, 0).unwrap(), q(8));
        assert_eq!(r.monomial(2, 1).unwrap(), q(1));
        assert_eq!(r.monomial(1, 2).unwrap(), q(0));
    }

    #[test]
    fn wrong_degree() {
        let r = ring(&[6, 2, 0]);
        assert_eq!(
            r.monomial(2, 0).unwrap_err(),
            Error::WrongDegree { expected: 3, got: 2 }
        );
        assert!(r.product(&[CurveDivisor::ints(1, 0)]).is_err());
    }

    #[test]
    fn antican_of_620() {
        let a = antican_p2bundle_p1(&SplitBundle::new(vec![6, 2, 0]).unwrap()).unwrap();
        assert_eq!(a.class, CurveDivisor::ints(3, -6));
        // 27·8 − 27·6 by hand
        assert_eq!(a.k3, q(54));
        assert_eq!(a.h0, 39);
        assert_eq!(a.dim, 38);
    }

    #[test]
    fn antican_small_cases() {
        let a = antican_p2bundle_p1(&SplitBundle::new(vec![1, 1, 0]).unwrap()).unwrap();
        assert_eq!(a.dim, 29);
        let a = antican_p2bundle_p1(&SplitBundle::new(vec![0, 0, 0]).unwrap()).unwrap();
        // P² × P¹: (−K)³ = 3·9·2 = 54
        assert_eq!(a.dim, 29);
        assert_eq!(a.k3, q(54));
        assert!(antican_p2bundle_p1(&SplitBundle::new(vec![2, 1, 1]).unwrap()).is_err());
        assert!(antican_p2bundle_p1(&SplitBundle::new(vec![2, 1]).unwrap()).is_err());
    }

    #[test]
    fn collect_merges_terms() {
        let r = ring(&[1, 0]);
        let terms = r
            .expand(&[CurveDivisor::ints(1, 1), CurveDivisor::ints(1, 1)])
            .unwrap();
        let c = CurveBundleRing::collect(&terms);
        assert_eq!(c.get(&(1, 1)), Some(&q(2)));
        assert_eq!(c.len(), 3);
    }
}
