use crate::cases::basics::genus_identities;
use crate::cases::builder;
use crate::chern::{h0_split_p1, SplitBundle};
use crate::chow::{antican_p2bundle_p1, CurveBundleRing, CurveDivisor, QuadricBundleModel};
use crate::exact::q;
use crate::report::{CaseBuilder, CaseReport};
use crate::wps::WpsModel;

const PRINTED_PAIRS: [(i64, i64); 9] = [(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 2), (6, 2)];

/// `h⁰(S³E(2−d))` grouped as `S³E' ⊕ S²E' ⊕ E' ⊕ O` with `E' = O(d₁)⊕O(d₂)`.
fn sym3_by_graded_pieces(d1: i64, d2: i64) -> u64 {
    let shift = 2 - d1 - d2;
    (0..=3i64)
        .map(|m| {
            (0..=m)
                .map(|i| (i * d1 + (m - i) * d2 + shift + 1).max(0) as u64)
                .sum::<u64>()
        })
        .sum()
}

pub fn p2bundle_enumeration() -> CaseReport {
    let mut b = builder("p2bundle.enum");
    let mut candidates = Vec::new();
    let mut pieces_agree = true;
    for d2 in 1..=12i64 {
        for d1 in d2..=24 {
            let e = SplitBundle::new(vec![d1, d2, 0]).expect("non-empty");
            let ring = CurveBundleRing::new(e.clone());
            // D ∼ M − d₁F is effective and M is nef: (−K)·D·M ≥ 0
            let kdm = ring
                .product(&[ring.anticanonical(), CurveDivisor::ints(1, -d1), CurveDivisor::ints(1, 0)])
                .expect("degree 3");
            let eprime = SplitBundle::new(vec![d1, d2]).expect("non-empty");
            // the summand H⁰(E'(2−d)) must be nonzero
            let eprime_sections = h0_split_p1(&eprime, 2 - e.degree());
            if kdm >= q(0) && eprime_sections > 0 {
                candidates.push((d1, d2));
                pieces_agree &= kdm == q(2 * d2 + 2 - d1);
            }
        }
    }
    candidates.sort();
    let render = |v: &[(i64, i64)]| {
        v.iter()
            .map(|(a, c)| format!("({a},{c})"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    b.check("candidate pairs", render(&PRINTED_PAIRS), render(&candidates));
    b.holds("(-K)·(M-d1F)·M = 2d2+2-d1 on candidates", pieces_agree);

    let mut best = i64::MIN;
    let mut argmax = Vec::new();
    for &(d1, d2) in &candidates {
        let a = antican_p2bundle_p1(&SplitBundle::new(vec![d1, d2, 0]).expect("rank 3")).expect("d3 = 0");
        pieces_agree &= a.h0 == sym3_by_graded_pieces(d1, d2);
        b.computed(format!("dim|-K_X| at ({d1},{d2})"), a.dim);
        b.witness(format!("({d1},{d2}): dim|-K_X| = {}, (-K_X)^3 = {}", a.dim, a.k3));
        if a.dim > best {
            best = a.dim;
            argmax = vec![(d1, d2)];
        } else if a.dim == best {
            argmax.push((d1, d2));
        }
    }
    b.holds("S³E(2-d) count = graded-piece count", pieces_agree);
    b.check("max dim|-K_X|", 38i64, best);
    b.check("attained only at", "(6,2)", render(&argmax));

    let mut branch = Vec::new();
    for d1 in 0..=24i64 {
        let ring = CurveBundleRing::new(SplitBundle::new(vec![d1, 0, 0]).expect("non-empty"));
        let kdm = ring
            .product(&[ring.anticanonical(), CurveDivisor::ints(1, -d1), CurveDivisor::ints(1, 0)])
            .expect("degree 3");
        if kdm >= q(0) {
            let a = antican_p2bundle_p1(ring.bundle()).expect("d3 = 0");
            branch.push((d1, a.dim));
        }
    }
    b.check("d2 = 0 branch: d1 range", "0..2", format!("{}..{}", branch[0].0, branch[branch.len() - 1].0));
    for (d1, dim) in &branch {
        b.check(format!("d2 = 0 branch: dim|-K_X| at d1={d1}"), 29i64, *dim);
    }

    let x = antican_p2bundle_p1(&SplitBundle::new(vec![6, 2, 0]).expect("rank 3")).expect("d3 = 0");
    let model = WpsModel::new(&[6, 4, 1, 1]).expect("valid");
    let model_deg = model.antican_self_degree().expect("normalized");
    b.computed("(-K_X)^3 of X = P(O(6)+O(2)+O)", x.k3.clone());
    b.check("-K^3 of the image P(6,4,1,1)", 72i64, model_deg.clone());
    let g = genus_identities(72).expect("even");
    b.check("dim|-K| of P(6,4,1,1)", g.dim_antican, model.h0(12) as i64 - 1);
    b.check("shared dim|-K| = 38", g.dim_antican, x.dim);
    b.note("X = P(O(6)+O(2)+O) and its anticanonical image P(6,4,1,1) share dim|-K| = 38; the value 72 is the degree of the image");
    b.finish()
}

/// `(−K)·B·H = 2(6−d−2r)` for every `α` in the range, plus the restricted
/// relations `G³ = 2d+r`, `G²Q = 2`, `GQ² = Q³ = 0`.
pub fn quadric_bundle_case(degrees: &[i64], r: i64, alpha_range: std::ops::RangeInclusive<i64>) -> CaseReport {
    let mut b = CaseBuilder::new("quadric.bundle", "(-K)·B·H = 2(6-d-2r)");
    let e = match SplitBundle::new(degrees.to_vec()) {
        Ok(e) => e,
        Err(err) => {
            b.check("bundle", "rank 4", err.to_string());
            return b.finish();
        }
    };
    let model = match QuadricBundleModel::new(e, r) {
        Ok(m) => m,
        Err(err) => {
            b.check("bundle", "rank 4", err.to_string());
            return b.finish();
        }
    };
    let d = model.d();
    b.check("G^3", q(2 * d + r), model.monomial(3, 0).expect("degree 3"));
    b.check("G^2·Q", 2i64, model.monomial(2, 1).expect("degree 3"));
    b.check("G·Q^2", 0i64, model.monomial(1, 2).expect("degree 3"));
    b.check("Q^3", 0i64, model.monomial(0, 3).expect("degree 3"));
    let want = q(2 * (6 - d - 2 * r));
    let mut all = true;
    let mut points = 0;
    for alpha in alpha_range {
        points += 1;
        all &= model.antican_bh(alpha).expect("degree 3") == want;
    }
    b.holds(format!("(-K)·B·H = {} at all {points} values of α", crate::exact::render(&want)), all);
    // a cubic in α that is constant at four or more points is constant
    b.holds("sample count determines the cubic", points >= 4);
    b.finish()
}

pub const QUADRIC_TUPLES: [(&[i64], i64); 10] = [
    (&[0, 0, 0, 0], 0),
    (&[1, 0, 0, 0], 1),
    (&[1, 1, 0, 0], -1),
    (&[2, 1, 0, 0], 2),
    (&[2, 2, 1, 0], 0),
    (&[3, 1, 1, 0], -2),
    (&[3, 2, 1, 0], 1),
    (&[4, 0, 0, 0], 3),
    (&[6, 0, 0, 0], 0),
    (&[2, 2, 2, 0], -3),
];

pub fn quadric_identity_suite() -> CaseReport {
    let mut b = builder("quadric.identity");
    for (degrees, r) in QUADRIC_TUPLES {
        let sub = quadric_bundle_case(degrees, r, -5..=5);
        b.absorb(&format!("{degrees:?} r={r}").replace(' ', ""), sub);
    }
    b.check(
        "boundary d=6, r=0, α=0",
        0i64,
        QuadricBundleModel::new(SplitBundle::new(vec![6, 0, 0, 0]).expect("rank 4"), 0)
            .expect("rank 4")
            .antican_bh(0)
            .expect("degree 3"),
    );
    b.finish()
}

/// The `r ≥ 0` branch: every admissible `(E, r, α)` has `h⁰(H)` below 35.
pub fn quadric_r_nonneg() -> CaseReport {
    let mut b = builder("quadric.r_nonneg");
    let mut neg_max = 0u64;
    let mut pos_max = 0u64;
    let mut chain_ok = true;
    let mut formula_ok = true;
    let mut neg_ok = true;
    let mut points = 0usize;
    let mut domain_ok = true;
    for d1 in 0..=6i64 {
        for d2 in 0..=d1 {
            for d3 in 0..=d2 {
                let d = d1 + d2 + d3;
                for r in 0..=3i64 {
                    let e = SplitBundle::new(vec![d1, d2, d3, 0]).expect("rank 4");
                    let model = QuadricBundleModel::new(e.clone(), r).expect("rank 4");
                    // H nef: (−K)·B·H ≥ 0
                    if model.antican_bh(0).expect("degree 3") < q(0) {
                        continue;
                    }
                    domain_ok &= d + 2 * r <= 6;
                    for alpha in -6..=12i64 {
                        if alpha >= 0 && alpha > 2 + d1 - d - r {
                            continue;
                        }
                        points += 1;
                        let h0 = h0_split_p1(&e, alpha);
                        if alpha <= 0 {
                            neg_max = neg_max.max(h0);
                            neg_ok &= h0 <= (d + 4) as u64 && d + 4 <= 10;
                        }
                        if alpha >= 0 {
                            pos_max = pos_max.max(h0);
                            formula_ok &= h0 == (d + 4 + 4 * alpha) as u64;
                            let bound = 12 + 4 * d1 - 3 * d - 4 * r;
                            chain_ok &= (h0 as i64) <= bound && bound <= 24;
                        }
                    }
                }
            }
        }
    }
    b.computed("admissible (E, r, α) points", points as i64);
    b.holds("H nef forces d+2r <= 6", domain_ok);
    b.holds("α <= 0: h0(H) <= h0(E) = d+4 <= 10", neg_ok);
    b.check("α <= 0: ceiling 10 attained", 10u64, neg_max);
    b.holds("α >= 0: h0(H) = d+4+4α", formula_ok);
    b.holds("α >= 0: d+4+4α <= 12+4d1-3d-4r <= 24", chain_ok);
    b.computed("α >= 0: attained maximum", pos_max);
    b.holds("both ceilings below 35", neg_max < 35 && pos_max <= 24 && 24 < 35);
    b.assume("R^i f_* O_X(H) = 0 for i > 0, so h0(O_X(H)) = h0(P1, E(α))");
    b.assume("B is effective, so α <= 2+d1-d-r");
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::h0_sym3_split_p1;
    use crate::report::Status;

    #[test]
    fn p2bundle_passes() {
        let r = p2bundle_enumeration();
        assert_eq!(r.status, Status::Pass, "{:?}", r.notes);
    }

    #[test]
    fn quadric_cases_pass() {
        for r in [quadric_identity_suite(), quadric_r_nonneg()] {
            assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.notes);
        }
        let r = quadric_r_nonneg();
        assert_eq!(r.computed_value("α >= 0: attained maximum").unwrap().to_string(), "18");
    }

    #[test]
    fn quadric_case_rejects_bad_rank() {
        let r = quadric_bundle_case(&[1, 0, 0], 0, -1..=1);
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn graded_pieces_match() {
        for (d1, d2) in PRINTED_PAIRS {
            assert_eq!(sym3_by_graded_pieces(d1, d2), h0_sym3_split_p1(d1, d2, 2 - d1 - d2));
        }
    }
}
