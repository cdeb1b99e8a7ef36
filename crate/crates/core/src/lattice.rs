//! Picard lattices of the minimal rational surfaces: the projective plane
//! with basis `h`, and the Hirzebruch surfaces `F_e` with basis `(Σ, l)`
//! where `Σ² = -e`, `Σ·l = 1`, `l² = 0`. `P¹×P¹` is `F_0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{q, render, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    ProjPlane,
    Hirzebruch(u32),
}

impl Surface {
    pub const P1XP1: Surface = Surface::Hirzebruch(0);

    /// Rank of the Picard lattice.
    pub fn rank(self) -> usize {
        match self {
            Surface::ProjPlane => 1,
            Surface::Hirzebruch(_) => 2,
        }
    }

    pub fn basis_labels(self) -> &'static [&'static str] {
        match self {
            Surface::ProjPlane => &["h"],
            Surface::Hirzebruch(_) => &["Σ", "l"],
        }
    }

    pub fn name(self) -> String {
        match self {
            Surface::ProjPlane => "P2".to_string(),
            Surface::Hirzebruch(e) => format!("F{e}"),
        }
    }

    /// Builds a class from integer coordinates, checking the length.
    pub fn class(self, coeffs: &[i64]) -> Result<DivClass> {
        self.check(&DivClass::from_ints(coeffs))?;
        Ok(DivClass::from_ints(coeffs))
    }

    pub fn zero(self) -> DivClass {
        DivClass(vec![Rat::zero(); self.rank()])
    }

    fn check(self, d: &DivClass) -> Result<()> {
        if d.0.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: d.0.len(),
            })
        }
    }

    /// The intersection pairing. On `F_e`,
    /// `(aΣ+bl)·(a'Σ+b'l) = -e·a·a' + a·b' + a'·b`.
    pub fn intersect(self, x: &DivClass, y: &DivClass) -> Result<Rat> {
        self.check(x)?;
        self.check(y)?;
        Ok(match self {
            Surface::ProjPlane => &x.0[0] * &y.0[0],
            Surface::Hirzebruch(e) => {
                let (a, b) = (&x.0[0], &x.0[1]);
                let (a2, b2) = (&y.0[0], &y.0[1]);
                -(q(e as i64) * a * a2) + a * b2 + a2 * b
            }
        })
    }

    pub fn self_intersection(self, x: &DivClass) -> Result<Rat> {
        self.intersect(x, x)
    }

    /// `K = -3h` on the plane, `K = -2Σ-(e+2)l` on `F_e`.
    pub fn canonical_class(self) -> DivClass {
        match self {
            Surface::ProjPlane => DivClass::from_ints(&[-3]),
            Surface::Hirzebruch(e) => DivClass::from_ints(&[-2, -(e as i64) - 2]),
        }
    }

    /// `K²`: 9 on the plane, 8 on every `F_e`.
    pub fn canonical_degree(self) -> Rat {
        self.self_intersection(&self.canonical_class())
            .expect("canonical class lives in the lattice")
    }

    /// Nef cone membership: `a ≥ 0` on the plane; `a ≥ 0`, `b ≥ e·a` on `F_e`.
    /// These are exactly the conditions `D·Σ ≥ 0`, `D·l ≥ 0` (resp. `D·h ≥ 0`)
    /// against the generators of the effective cone.
    pub fn is_nef(self, d: &DivClass) -> Result<bool> {
        self.check(d)?;
        Ok(match self {
            Surface::ProjPlane => !d.0[0].is_negative(),
            Surface::Hirzebruch(e) => {
                !d.0[0].is_negative() && d.0[1] >= q(e as i64) * &d.0[0]
            }
        })
    }

    /// Effective cone membership (cone spanned by `h`, resp. `Σ` and `l`).
    /// This is a class-level test; it says nothing about reducedness.
    pub fn is_effective_class(self, d: &DivClass) -> Result<bool> {
        self.check(d)?;
        Ok(d.0.iter().all(|c| !c.is_negative()))
    }

    /// Arithmetic genus via adjunction: `p_a(C) = 1 + (K+C)·C / 2`.
    pub fn arithmetic_genus(self, c: &DivClass) -> Result<Rat> {
        let kc = &self.canonical_class() + c;
        Ok(q(1) + self.intersect(&kc, c)? / q(2))
    }

    /// Generators of the effective cone, against which nefness is tested.
    pub fn effective_generators(self) -> Vec<DivClass> {
        match self {
            Surface::ProjPlane => vec![DivClass::from_ints(&[1])],
            Surface::Hirzebruch(_) => {
                vec![DivClass::from_ints(&[1, 0]), DivClass::from_ints(&[0, 1])]
            }
        }
    }

    /// Exchanges the two rulings of `P¹×P¹`: `aΣ+bl ↦ bΣ+al`.
    pub fn swap_rulings(self, d: &DivClass) -> Result<DivClass> {
        self.check(d)?;
        match self {
            Surface::Hirzebruch(0) => Ok(DivClass(vec![d.0[1].clone(), d.0[0].clone()])),
            other => Err(Error::UnsupportedSurface(format!(
                "{} (ruling swap exists only on F0)",
                other.name()
            ))),
        }
    }

    /// Human-readable class, e.g. `5Σ+2l`, `-3h`, `0`.
    pub fn display(self, d: &DivClass) -> String {
        let mut out = String::new();
        for (c, label) in d.0.iter().zip(self.basis_labels()) {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = c.abs();
            if mag != q(1) {
                out.push_str(&render(&mag));
            }
            out.push_str(label);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Coordinates of a divisor class in a surface's chosen basis. The vector
/// is not tied to a surface; surface operations check its length.
///
/// Arithmetic operators panic when the operands have different lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivClass(Vec<Rat>);

impl DivClass {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        DivClass(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        DivClass(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, k: &Rat) -> DivClass {
        DivClass(self.0.iter().map(|c| c * k).collect())
    }

    fn zip_with(&self, other: &DivClass, f: impl Fn(&Rat, &Rat) -> Rat) -> DivClass {
        assert_eq!(self.0.len(), other.0.len(), "class length mismatch");
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| f(a, b)).collect())
    }
}

impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, rhs: &DivClass) -> DivClass {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, rhs: &DivClass) -> DivClass {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        DivClass(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul<&DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: &DivClass) -> DivClass {
        rhs.scale(&q(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn f(e: u32) -> Surface {
        Surface::Hirzebruch(e)
    }

    #[test]
    fn defining_relations() {
        let p2 = Surface::ProjPlane;
        let h = p2.class(&[1]).unwrap();
        assert_eq!(p2.intersect(&h, &h).unwrap(), q(1));
        let s = f(2).class(&[1, 0]).unwrap();
        let l = f(2).class(&[0, 1]).unwrap();
        assert_eq!(f(2).intersect(&s, &s).unwrap(), q(-2));
        assert_eq!(f(2).intersect(&s, &l).unwrap(), q(1));
        assert_eq!(f(2).intersect(&l, &l).unwrap(), q(0));
    }

    #[test]
    fn canonical_square_on_f2_by_hand() {
        // (-2Σ-4l)² = 4Σ² + 16Σ·l + 16l² = -8 + 16 = 8
        let k = f(2).canonical_class();
        assert_eq!(k, DivClass::from_ints(&[-2, -4]));
        assert_eq!(f(2).intersect(&k, &k).unwrap(), q(8));
    }

    #[test]
    fn canonical_classes() {
        assert_eq!(Surface::ProjPlane.canonical_class(), DivClass::from_ints(&[-3]));
        assert_eq!(f(0).canonical_class(), DivClass::from_ints(&[-2, -2]));
        assert_eq!(f(4).canonical_class(), DivClass::from_ints(&[-2, -6]));
        assert_eq!(Surface::ProjPlane.canonical_degree(), q(9));
        for e in 0..=6 {
            assert_eq!(f(e).canonical_degree(), q(8), "F{e}");
        }
    }

    #[test]
    fn nef_and_effective() {
        let s = f(2);
        assert!(s.is_nef(&DivClass::from_ints(&[1, 2])).unwrap());
        assert!(!s.is_nef(&DivClass::from_ints(&[1, 1])).unwrap());
        assert!(Surface::ProjPlane.is_nef(&DivClass::from_ints(&[9])).unwrap());
        assert!(s.is_effective_class(&DivClass::from_ints(&[1, 0])).unwrap());
        assert!(!s.is_effective_class(&DivClass::from_ints(&[-1, 5])).unwrap());
        assert!(Surface::ProjPlane
            .is_effective_class(&DivClass::from_ints(&[0]))
            .unwrap());
        // Σ itself is effective but not nef on F_2
        assert!(!s.is_nef(&DivClass::from_ints(&[1, 0])).unwrap());
    }

    #[test]
    fn genus_by_adjunction() {
        let p2 = Surface::ProjPlane;
        // plane curves: (d-1)(d-2)/2
        for d in 0..12i64 {
            let g = p2.arithmetic_genus(&DivClass::from_ints(&[d])).unwrap();
            assert_eq!(g, frac((d - 1) * (d - 2), 2));
        }
        assert_eq!(p2.arithmetic_genus(&DivClass::from_ints(&[1])).unwrap(), q(0));
        assert_eq!(f(0).arithmetic_genus(&DivClass::from_ints(&[2, 2])).unwrap(), q(1));
        for e in 0..5 {
            assert_eq!(f(e).arithmetic_genus(&DivClass::from_ints(&[1, 0])).unwrap(), q(0));
            assert_eq!(f(e).arithmetic_genus(&DivClass::from_ints(&[0, 1])).unwrap(), q(0));
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let err = Surface::ProjPlane
            .intersect(&DivClass::from_ints(&[1, 0]), &DivClass::from_ints(&[1]))
            .unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 1, got: 2 });
        assert!(f(3).class(&[1]).is_err());
        assert!(f(3).is_nef(&DivClass::from_ints(&[1])).is_err());
    }

    #[test]
    fn ruling_swap() {
        let d = DivClass::from_ints(&[2, 5]);
        assert_eq!(f(0).swap_rulings(&d).unwrap(), DivClass::from_ints(&[5, 2]));
        assert!(f(2).swap_rulings(&d).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(f(2).display(&DivClass::from_ints(&[5, 2])), "5Σ+2l");
        assert_eq!(f(2).display(&DivClass::from_ints(&[-1, -1])), "-Σ-l");
        assert_eq!(f(2).display(&DivClass::from_ints(&[0, 0])), "0");
        assert_eq!(Surface::ProjPlane.display(&DivClass::from_ints(&[-2])), "-2h");
    }
}
