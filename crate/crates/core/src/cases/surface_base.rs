use crate::cases::builder;
use crate::chern::{rr_chi_rank2_fe_closed, rr_chi_rank2_surface, serre_dual_twist, twist_rank2, ChernData};
use crate::chow::{BundleDivisor, SurfaceBundleRing};
use crate::error::{Error, Result};
use crate::exact::{as_i64, fit_affine, floor_div, frac, q, Rat};
use crate::lattice::{DivClass, Surface};
use crate::report::CaseReport;

const P2: Surface = Surface::ProjPlane;

fn h0_p2_line_bundle(k: i64) -> u64 {
    if k < 0 {
        0
    } else {
        ((k + 1) * (k + 2) / 2) as u64
    }
}

fn chi_p2(c1: i64, c2: i64) -> Rat {
    rr_chi_rank2_surface(P2, &ChernData::rank2(DivClass::from_ints(&[c1]), q(c2))).expect("rank 2")
}

/// `(−K)·B·f*N` in the Chow ring of `P(E)` with `B = H + f*(−K−c₁)`.
fn antican_b_n(z: Surface, e: &ChernData, n: &DivClass) -> Rat {
    let ring = SurfaceBundleRing::new(z, e.clone()).expect("rank 2");
    let shift = BundleDivisor::pullback(&(-&z.canonical_class()) - &e.c1);
    let b = ring.l().add(&shift);
    ring.product(&[ring.anticanonical(), b, BundleDivisor::pullback(n.clone())])
        .expect("three factors")
}

fn engine_identity_holds(z: Surface) -> bool {
    let k = z.canonical_class();
    let mut ok = true;
    let coeff_range: Vec<Vec<i64>> = match z.rank() {
        1 => (-3..=9).map(|c| vec![c]).collect(),
        _ => (-2..=6).flat_map(|a| (-2..=12).map(move |b| vec![a, b])).collect(),
    };
    for c1 in &coeff_range {
        for c2 in [-3i64, 0, 5] {
            let e = ChernData::rank2(DivClass::from_ints(c1), q(c2));
            for n in z.effective_generators() {
                let want = z.intersect(&(&(-3 * &k) - &e.c1), &n).expect("same surface");
                ok &= antican_b_n(z, &e, &n) == want;
            }
        }
    }
    ok
}

pub fn surface_base_p2_cases() -> CaseReport {
    let mut b = builder("p2base.cases");
    let h = DivClass::from_ints(&[1]);

    b.holds("(-K)·B·f*N = (-3K-c1)·N on P2", engine_identity_holds(P2));
    for e in [0u32, 2, 3, 4] {
        b.holds(
            format!("(-K)·B·f*N = (-3K-c1)·N on F{e}"),
            engine_identity_holds(Surface::Hirzebruch(e)),
        );
    }
    let c1_max = as_i64(&P2.intersect(&(-3 * &P2.canonical_class()), &h).expect("P2")).expect("integral");
    b.check("c1 <= -3K·h", 9i64, c1_max);

    // decomposable: E = O(d) + O(d+m)
    let mut solutions = Vec::new();
    let mut poly_matches_rr = true;
    for d in 0..=9i64 {
        for m in 0..=3i64 {
            let c1 = 2 * d + m;
            if c1 > c1_max {
                continue;
            }
            let c2 = d * (d + m);
            let poly = 2 * d * d + 2 * d * m + m * m + 6 * d + 3 * m;
            let chi_ok = chi_p2(c1, c2) >= q(37);
            poly_matches_rr &= chi_ok == (poly >= 70);
            poly_matches_rr &= q(c1 * c1 + 3 * c1 - 2 * c2) == q(poly);
            if chi_ok {
                solutions.push((d, m));
            }
        }
    }
    b.holds("2d²+2dm+m²+6d+3m >= 70 iff chi(E) >= 37", poly_matches_rr);
    let rendered: Vec<String> = solutions.iter().map(|(d, m)| format!("({d},{m})")).collect();
    b.check("decomposable solutions (d,m)", "(3,3)", rendered.join(" "));
    if let [(d, m)] = solutions[..] {
        b.check("E", "O(3)+O(6)", format!("O({d})+O({})", d + m));
        // −K_X = 2H + f*(−K−c₁), so h⁰(−K_X) = h⁰(S²E ⊗ O(3−c₁))
        let shift = 3 - (2 * d + m);
        let h0: u64 = [2 * d, 2 * d + m, 2 * d + 2 * m]
            .iter()
            .map(|&k| h0_p2_line_bundle(k + shift))
            .sum();
        b.check("dim|-K_X|", 38i64, h0 as i64 - 1);
        b.witness(format!("S²E(-6) = O+O(3)+O(6), h0 = {h0}"));
    }

    // indecomposable: 0 <= c1 <= 8
    const WINDOW: i64 = 60;
    for (parity, offset, printed_bound) in [("odd", 3i64, "m²-35"), ("even", 2i64, "m²+m-36")] {
        let ms: Vec<i64> = (0..=8i64)
            .filter(|c1| (c1 + offset) % 2 == 0)
            .map(|c1| (c1 + offset) / 2)
            .collect();
        b.check(
            format!("{parity}: m range"),
            if offset == 3 { "2..5" } else { "1..5" },
            format!("{}..{}", ms[0], ms[ms.len() - 1]),
        );
        let mut all_negative = true;
        let mut bound_ok = true;
        let mut chi_ok = true;
        let mut closed_ok = true;
        let mut affine_ok = true;
        for &m in &ms {
            let c1 = 2 * m - offset;
            // largest integral c₂ with χ(E) >= 37
            let c2_max = floor_div(c1 * c1 + 3 * c1 - 70, 2);
            let printed_c2_max = if offset == 3 { 2 * m * m - 3 * m - 35 } else { 2 * m * m - m - 36 };
            b.check(format!("{parity} m={m}: max c2"), printed_c2_max, c2_max);
            let mut samples = Vec::new();
            for c2 in (c2_max - WINDOW..=c2_max).rev() {
                let e = ChernData::rank2(DivClass::from_ints(&[c1]), q(c2));
                let tw = twist_rank2(P2, &e, &DivClass::from_ints(&[-m])).expect("rank 2");
                closed_ok &= tw.c1 == DivClass::from_ints(&[-offset]);
                let closed = if offset == 3 { c2 - m * m + 3 * m } else { c2 - m * m + 2 * m };
                closed_ok &= tw.c2 == q(closed);
                all_negative &= tw.c2 < q(0);
                let bound = if offset == 3 { m * m - 35 } else { m * m + m - 36 };
                bound_ok &= tw.c2 <= q(bound) && bound < 0;
                chi_ok &= rr_chi_rank2_surface(P2, &tw).expect("rank 2") >= q(1);
                let dual = serre_dual_twist(P2, &tw.c1);
                closed_ok &= dual == DivClass::from_ints(&[offset - 3]);
                samples.push((c2, tw.c2.clone()));
            }
            affine_ok &= fit_affine(&samples).is_some_and(|(_, slope)| slope == q(1));
            b.computed(format!("{parity} m={m}: max c2(E(-m))"), samples[0].1.clone());
        }
        b.holds(format!("{parity}: c2(E(-m)) = twisted c2 (closed form)"), closed_ok);
        b.holds(format!("{parity}: c2(E(-m)) <= {printed_bound} < 0"), bound_ok);
        b.holds(format!("{parity}: c2(E(-m)) < 0"), all_negative);
        b.holds(format!("{parity}: c2(E(-m)) increases with c2, slope 1"), affine_ok);
        b.holds(format!("{parity}: chi(E(-m)) >= 1"), chi_ok);
    }
    b.check("odd m=5: c2(E(-5)) <= -10", -10i64, 5 * 5 - 35);
    b.check("even m=5: c2(E(-5)) <= -6", -6i64, 5 * 5 + 5 - 36);

    // E(−m)|Γ = O(k) + O(−r−k) with |k − (−r−k)| <= 2 + Γ² = 3
    let mut ks = Vec::new();
    for r in [2i64, 3] {
        for k in 0..=20i64 {
            if (2 * k + r).abs() <= 3 {
                ks.push(k);
            }
        }
    }
    ks.dedup();
    b.holds("line restriction 2k+r <= 3 forces k = 0", ks == [0]);
    b.assume(format!("c2 checked on the window [max-{WINDOW}, max]; the claims are monotone in c2"));
    b.assume("indecomposable E has c1 <= 8");
    b.finish()
}

/// One point of the `F_e` sweep: `c₁ = aΣ+bl`, `c₂ = c` at the largest value
/// allowed by the χ floor, and the data of `E' = E(−pΣ−ql)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeGridPoint {
    pub e: i64,
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub p: i64,
    pub q: i64,
    pub a1: i64,
    pub b1: i64,
    pub c2_prime: i64,
    pub chi_prime: Rat,
}

impl FeGridPoint {
    pub fn new(e: i64, a: i64, b: i64, chi_floor: i64) -> Self {
        // ea(a+1) is even, so the χ bound is integral
        let c = -(e * a * (a + 1)) / 2 + a * b + a + b + 2 - chi_floor;
        let p = floor_div(a, 2) + 1;
        let qq = floor_div(b, 2) + 1;
        let a1 = a - 2 * p;
        let b1 = b - 2 * qq;
        let c2_prime = c + e * a * p - a * qq - b * p - e * p * p + 2 * p * qq;
        let chi_prime = (q(b1) - frac(e * a1, 2)) * q(a1 + 1) + q(a1 - c2_prime + 2);
        FeGridPoint {
            e,
            a,
            b,
            c,
            p,
            q: qq,
            a1,
            b1,
            c2_prime,
            chi_prime,
        }
    }

    pub fn surface(&self) -> Surface {
        Surface::Hirzebruch(self.e as u32)
    }

    pub fn is_nef(&self) -> bool {
        self.a >= 0 && self.b >= self.e * self.a
    }

    fn tuple(&self) -> String {
        format!(
            "({},{},{},{},{},{},{},{})",
            self.e,
            self.a,
            self.b,
            self.c,
            self.c2_prime,
            self.a1,
            self.b1,
            crate::exact::render(&self.chi_prime)
        )
    }
}

/// The sweep domain: nef `c₁` for floor 37, and `0 ≤ b ≤ 3(e+2)` with
/// `a < 6 or b < 3(e+2)` for floor 36.
pub fn fe_grid(chi_floor: i64) -> Result<Vec<FeGridPoint>> {
    if chi_floor != 36 && chi_floor != 37 {
        return Err(Error::InvalidChiFloor(chi_floor));
    }
    let mut out = Vec::new();
    for e in [0i64, 2, 3, 4] {
        for a in 0..=6i64 {
            let b_max = 3 * (e + 2);
            let b_min = if chi_floor == 37 { e * a } else { 0 };
            for b in b_min..=b_max {
                if chi_floor == 36 && !(a < 6 || b < b_max) {
                    continue;
                }
                out.push(FeGridPoint::new(e, a, b, chi_floor));
            }
        }
    }
    Ok(out)
}

const PRINTED_EXCEPTIONS: [(i64, i64, i64, i64, i64, i64); 4] = [
    // (e, a, b, printed bound on c₂', a', b')
    (3, 5, 15, -3, -1, -1),
    (4, 5, 18, -1, -1, -2),
    (4, 3, 18, -1, -1, -2),
    (4, 4, 18, -2, -2, -2),
];

pub fn surface_base_fe_claims(chi_floor: i64) -> Result<CaseReport> {
    let grid = fe_grid(chi_floor)?;
    let mut b = builder(if chi_floor == 37 { "fe.claims.chi37" } else { "fe.claims.chi36" });

    let mut closed_ok = true;
    let mut chi_closed_ok = true;
    let mut range_ok = true;
    for pt in &grid {
        let z = pt.surface();
        let e = ChernData::rank2(z.class(&[pt.a, pt.b])?, q(pt.c));
        closed_ok &= rr_chi_rank2_surface(z, &e)? == q(chi_floor)
            && rr_chi_rank2_fe_closed(pt.e, pt.a, pt.b, pt.c) == q(chi_floor);
        let tw = twist_rank2(z, &e, &z.class(&[-pt.p, -pt.q])?)?;
        closed_ok &= tw.c2 == q(pt.c2_prime) && tw.c1 == z.class(&[pt.a1, pt.b1])?;
        chi_closed_ok &= rr_chi_rank2_surface(z, &tw)? == pt.chi_prime;
        range_ok &= (-2..=-1).contains(&pt.a1) && (-2..=-1).contains(&pt.b1);
    }
    b.computed("grid points", grid.len() as u64);
    b.holds("c2(E') = c+eap-aq-bp-ep²+2pq = twisted c2", closed_ok);
    b.holds("chi(E') = (b'-ea'/2)(a'+1)+a'-c'+2", chi_closed_ok);
    b.holds("-2 <= a', b' <= -1", range_ok);

    if chi_floor == 37 {
        let max = grid.iter().map(|p| p.c2_prime).max().unwrap_or(i64::MIN);
        b.computed("max c2(E')", max);
        b.holds("c2(E') <= -2", grid.iter().all(|p| p.c2_prime <= -2));
        b.holds(
            "c2(E') = -2 implies a' = -1",
            grid.iter().filter(|p| p.c2_prime == -2).all(|p| p.a1 == -1),
        );
        b.holds(
            "c2(E') >= -3 implies b' = -2",
            grid.iter().filter(|p| p.c2_prime >= -3).all(|p| p.b1 == -2),
        );
        b.holds("chi(E') > 0", grid.iter().all(|p| p.chi_prime > q(0)));
        for pt in grid.iter().filter(|p| p.c2_prime >= -3) {
            b.witness(format!("c2' >= -3 at (e,a,b,c,c2',a',b',chi') = {}", pt.tuple()));
        }
        b.assume("c2 at its largest value with chi(E) >= 37; the claims are monotone in c2");
        return Ok(b.finish());
    }

    let exceptions: Vec<&FeGridPoint> = grid.iter().filter(|p| p.c2_prime > -4).collect();
    let mut found: Vec<(i64, i64, i64)> = exceptions.iter().map(|p| (p.e, p.a, p.b)).collect();
    found.sort();
    let mut printed: Vec<(i64, i64, i64)> = PRINTED_EXCEPTIONS.iter().map(|t| (t.0, t.1, t.2)).collect();
    printed.sort();
    let fmt = |v: &[(i64, i64, i64)]| {
        v.iter()
            .map(|(e, a, bb)| format!("({e},{a},{bb})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    b.check("(e,a,b) with c2(E') > -4", fmt(&printed), fmt(&found));
    for (i, &(e, a, bb, bound, a1, b1)) in PRINTED_EXCEPTIONS.iter().enumerate() {
        let tag = ["i", "ii", "iii", "iv"][i];
        let Some(pt) = grid.iter().find(|p| (p.e, p.a, p.b) == (e, a, bb)) else {
            b.check(format!("exception ({tag}) in domain"), true, false);
            continue;
        };
        b.holds(format!("exception ({tag}): c2(E') <= {bound}"), pt.c2_prime <= bound);
        b.check(format!("exception ({tag}): a'"), a1, pt.a1);
        b.check(format!("exception ({tag}): b'"), b1, pt.b1);
        b.witness(format!(
            "exception ({tag}) (e,a,b,c,c2',a',b',chi') = {}{}",
            pt.tuple(),
            if pt.is_nef() { "" } else { ", c1 not nef (b < ea)" }
        ));
    }

    let nonpositive: Vec<&FeGridPoint> = grid.iter().filter(|p| p.chi_prime <= q(0)).collect();
    let np: Vec<(i64, i64, i64)> = nonpositive.iter().map(|p| (p.e, p.a, p.b)).collect();
    b.check("(e,a,b) with chi(E') <= 0", "(4,4,18)", fmt(&np));
    b.holds("chi(E') <= 0 forces a' = -2", nonpositive.iter().all(|p| p.a1 == -2));
    b.holds(
        "chi(E') = -b'-e-c' when a' = -2",
        grid.iter()
            .filter(|p| p.a1 == -2)
            .all(|p| p.chi_prime == q(-p.b1 - p.e - p.c2_prime)),
    );

    let iv = FeGridPoint::new(4, 4, 18, 36);
    b.check("exception (iv): c2(E')", -2i64, iv.c2_prime);
    b.check("exception (iv): c2(E)", 20i64, iv.c);
    b.check("exception (iv): chi(E')", 0i64, iv.chi_prime.clone());
    let z = iv.surface();
    let c1 = z.class(&[iv.a, iv.b])?;
    b.check("exception (iv): c1", "4Σ+18l", z.display(&c1));
    let h3 = z.self_intersection(&c1)? - q(iv.c);
    b.known_discrepancy(
        "exception (iv): H^3 = c1²-c2",
        0i64,
        h3,
        "c1² = -4·16+2·4·18 = 80 on F4 and c2 = 20, so H^3 = 60",
    );
    b.assume("c2 at its largest value with chi(E) >= 36; the claims are monotone in c2");
    b.assume("b ranges over 0..3(e+2) (superset of the nef range b >= ea)");
    Ok(b.finish())
}

pub(crate) fn chi36_case() -> CaseReport {
    surface_base_fe_claims(36).expect("valid floor")
}

pub(crate) fn chi37_case() -> CaseReport {
    surface_base_fe_claims(37).expect("valid floor")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn p2_cases_pass() {
        let r = surface_base_p2_cases();
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatches());
    }

    #[test]
    fn chi37_passes_and_chi36_flags() {
        let r = chi37_case();
        assert_eq!(r.status, Status::Pass, "{:?}", r.mismatches());
        let r = chi36_case();
        assert_eq!(r.status, Status::Flag, "{:?}", r.mismatches());
        assert_eq!(r.computed_value("exception (iv): H^3 = c1²-c2").unwrap().to_string(), "60");
    }

    #[test]
    fn invalid_floor() {
        assert!(matches!(surface_base_fe_claims(35), Err(Error::InvalidChiFloor(35))));
    }

    #[test]
    fn exception_iv() {
        let p = FeGridPoint::new(4, 4, 18, 36);
        assert_eq!((p.c, p.c2_prime, p.a1, p.b1), (20, -2, -2, -2));
        assert_eq!(p.chi_prime, q(0));
        assert!(!FeGridPoint::new(4, 5, 18, 36).is_nef());
    }
}
