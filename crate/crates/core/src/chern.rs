//! Chern data of bundles over `P²`/`F_e` and split bundles over `P¹`.

use crate::error::{Error, Result};
use crate::exact::{q, Rat};
use crate::lattice::{DivClass, Surface};

/// Rank, first and second Chern class of a bundle over a surface.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: u32,
    pub c1: DivClass,
    pub c2: Rat,
}

impl ChernData {
    pub fn new(rank: u32, c1: DivClass, c2: Rat) -> Self {
        ChernData { rank, c1, c2 }
    }

    pub fn rank2(c1: DivClass, c2: Rat) -> Self {
        Self::new(2, c1, c2)
    }

    fn require_rank(&self, expected: u32) -> Result<()> {
        if self.rank == expected {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected,
                got: self.rank,
            })
        }
    }
}

/// `O(d₁)⊕…⊕O(d_r)` on `P¹`, kept sorted with `d₁ ≥ … ≥ d_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitBundle {
    degrees: Vec<i64>,
}

impl SplitBundle {
    pub fn new(mut degrees: Vec<i64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::EmptyBundle);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SplitBundle { degrees })
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> u32 {
        self.degrees.len() as u32
    }

    /// `d = Σ dᵢ = deg c₁`.
    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }
}

/// `χ(E) = ½(c₁² − 2c₂ − K·c₁) + 2` for a rank-2 bundle on a rational surface.
pub fn rr_chi_rank2_surface(z: Surface, e: &ChernData) -> Result<Rat> {
    e.require_rank(2)?;
    let c1sq = z.self_intersection(&e.c1)?;
    let kc1 = z.intersect(&z.canonical_class(), &e.c1)?;
    Ok((c1sq - q(2) * &e.c2 - kc1) / q(2) + q(2))
}

/// `E ⊗ O(D)`: `c₁ + 2D`, `c₂ + c₁·D + D²`.
pub fn twist_rank2(z: Surface, e: &ChernData, d: &DivClass) -> Result<ChernData> {
    e.require_rank(2)?;
    let c1d = z.intersect(&e.c1, d)?;
    let dd = z.self_intersection(d)?;
    Ok(ChernData {
        rank: 2,
        c1: &e.c1 + &(2 * d),
        c2: &e.c2 + c1d + dd,
    })
}

/// The twist `D` with `E* ⊗ ω ≅ E ⊗ O(D)` for rank 2, i.e. `D = K − c₁`.
/// Serre duality then gives `h⁰(E) + h⁰(E(K−c₁)) ≥ χ(E)`.
pub fn serre_dual_twist(z: Surface, c1: &DivClass) -> DivClass {
    &z.canonical_class() - c1
}

/// Closed form of rank-2 Riemann–Roch on `F_e` with `c₁ = aΣ+bl`, `c₂ = c`:
/// `−½ea(a+1) + ab + a + b − c + 2`.
pub fn rr_chi_rank2_fe_closed(e: i64, a: i64, b: i64, c: i64) -> Rat {
    -(q(e * a * (a + 1)) / q(2)) + q(a * b + a + b - c + 2)
}

/// `h⁰(P¹, E(t)) = Σ max(0, dᵢ + t + 1)`.
pub fn h0_split_p1(e: &SplitBundle, t: i64) -> u64 {
    e.degrees.iter().map(|&d| (d + t + 1).max(0) as u64).sum()
}

/// `h⁰(P¹, S³(O(d₁)⊕O(d₂)⊕O) ⊗ O(shift))`.
pub fn h0_sym3_split_p1(d1: i64, d2: i64, shift: i64) -> u64 {
    let mut total = 0u64;
    for i in 0..=3i64 {
        for j in 0..=3 - i {
            total += (i * d1 + j * d2 + shift + 1).max(0) as u64;
        }
    }
    total
}

/// `−K_W³ = c₁·(−K + c₁) − 2c₂` for `W = P(E)` a conic bundle embedded in a
/// rank-3 projective bundle over `Z`.
pub fn conic_bundle_k3(z: Surface, e: &ChernData) -> Result<Rat> {
    e.require_rank(3)?;
    let minus_k = -&z.canonical_class();
    Ok(z.intersect(&e.c1, &(&minus_k + &e.c1))? - q(2) * &e.c2)
}

/// `Δ ∼ −3K − c₁`.
pub fn discriminant_class(z: Surface, e: &ChernData) -> Result<DivClass> {
    e.require_rank(3)?;
    let minus_3k = -&(3 * &z.canonical_class());
    if e.c1.coeffs().len() != z.rank() {
        return Err(Error::DimensionMismatch {
            expected: z.rank(),
            got: e.c1.coeffs().len(),
        });
    }
    Ok(&minus_3k - &e.c1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(e: u32) -> Surface {
        Surface::Hirzebruch(e)
    }

    fn p2(c1: i64, c2: i64) -> ChernData {
        ChernData::rank2(DivClass::from_ints(&[c1]), q(c2))
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(rr_chi_rank2_surface(Surface::ProjPlane, &p2(9, 0)).unwrap(), q(56));
        assert_eq!(rr_chi_rank2_surface(Surface::ProjPlane, &p2(0, 0)).unwrap(), q(2));
        let e = ChernData::rank2(DivClass::from_ints(&[4, 18]), q(20));
        assert_eq!(rr_chi_rank2_surface(f(4), &e).unwrap(), q(36));
        assert_eq!(rr_chi_rank2_fe_closed(4, 4, 18, 20), q(36));
        assert_eq!(rr_chi_rank2_fe_closed(0, 0, 0, 0), q(2));
    }

    #[test]
    fn riemann_roch_rejects_other_ranks() {
        let e = ChernData::new(3, DivClass::from_ints(&[1]), q(0));
        assert_eq!(
            rr_chi_rank2_surface(Surface::ProjPlane, &e).unwrap_err(),
            Error::RankMismatch { expected: 2, got: 3 }
        );
        assert!(conic_bundle_k3(Surface::ProjPlane, &p2(1, 0)).is_err());
    }

    #[test]
    fn exception_boundary_on_f3() {
        // χ ≥ 36 at (e,a,b) = (3,5,15) pins c₂ ≤ 16
        let chi = |c| rr_chi_rank2_fe_closed(3, 5, 15, c);
        assert_eq!(chi(16), q(36));
        assert!(chi(17) < q(36));
    }

    #[test]
    fn twists() {
        let e = ChernData::rank2(DivClass::from_ints(&[4, 18]), q(20));
        let t = twist_rank2(f(4), &e, &DivClass::from_ints(&[-3, -10])).unwrap();
        assert_eq!(t, ChernData::rank2(DivClass::from_ints(&[-2, -2]), q(-2)));
        assert_eq!(twist_rank2(f(4), &e, &DivClass::from_ints(&[0, 0])).unwrap(), e);
        // P², c₁ = 7h, twist by −5h: c₂ − m² + 3m at m = 5
        for c in -3..=3 {
            let t = twist_rank2(Surface::ProjPlane, &p2(7, c), &DivClass::from_ints(&[-5])).unwrap();
            assert_eq!(t.c1, DivClass::from_ints(&[-3]));
            assert_eq!(t.c2, q(c - 25 + 15));
        }
    }

    #[test]
    fn split_bundle_counts() {
        let triv = SplitBundle::new(vec![0, 0, 0, 0]).unwrap();
        assert_eq!(h0_split_p1(&triv, 0), 4);
        let e = SplitBundle::new(vec![0, 2, 6]).unwrap();
        assert_eq!(e.degrees(), &[6, 2, 0]);
        assert_eq!(e.degree(), 8);
        assert_eq!(h0_split_p1(&e, -6), 1);
        let e = SplitBundle::new(vec![3, 2, 1, 0]).unwrap();
        for alpha in 0..4 {
            assert_eq!(h0_split_p1(&e, alpha), (e.degree() + 4 + 4 * alpha) as u64);
        }
        assert_eq!(SplitBundle::new(vec![]).unwrap_err(), Error::EmptyBundle);
    }

    #[test]
    fn symmetric_cube_counts() {
        assert_eq!(h0_sym3_split_p1(6, 2, -6), 39);
        assert_eq!(h0_sym3_split_p1(1, 1, 0), 30);
        assert_eq!(h0_sym3_split_p1(0, 0, 0), 10);
        assert_eq!(h0_sym3_split_p1(0, 0, 2), 30);
    }

    #[test]
    fn conic_bundle_degree() {
        let c = |c1: i64| ChernData::new(3, DivClass::from_ints(&[c1]), q(0));
        assert_eq!(conic_bundle_k3(Surface::ProjPlane, &c(9)).unwrap(), q(108));
        assert_eq!(conic_bundle_k3(Surface::ProjPlane, &c(6)).unwrap(), q(54));
        assert_eq!(conic_bundle_k3(Surface::ProjPlane, &c(0)).unwrap(), q(0));
        assert_eq!(
            discriminant_class(Surface::ProjPlane, &c(9)).unwrap(),
            DivClass::from_ints(&[0])
        );
        assert_eq!(
            discriminant_class(Surface::ProjPlane, &c(6)).unwrap(),
            DivClass::from_ints(&[3])
        );
        let e = ChernData::new(3, DivClass::from_ints(&[6, 12]), q(0));
        assert_eq!(discriminant_class(f(2), &e).unwrap(), DivClass::from_ints(&[0, 0]));
    }

    #[test]
    fn serre_twist() {
        assert_eq!(
            serre_dual_twist(f(0), &DivClass::from_ints(&[-3, 0])),
            DivClass::from_ints(&[1, -2])
        );
        assert_eq!(
            serre_dual_twist(f(2), &DivClass::from_ints(&[-1, 0])),
            DivClass::from_ints(&[-1, -4])
        );
    }
}
