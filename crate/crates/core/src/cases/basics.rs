use crate::cases::builder;
use crate::error::{Error, Result};
use crate::exact::{q, Rat};
use crate::lattice::{DivClass, Surface};
use crate::report::CaseReport;
use crate::wps::WpsModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenusData {
    pub k3: i64,
    pub g: i64,
    pub dim_antican: i64,
}

/// `−K³ = 2g − 2` and `dim |−K| = g + 1`.
pub fn genus_identities(k3: i64) -> Result<GenusData> {
    if k3 % 2 != 0 {
        return Err(Error::OddDegree(k3));
    }
    let g = k3 / 2 + 1;
    Ok(GenusData {
        k3,
        g,
        dim_antican: g + 1,
    })
}

pub(crate) fn genus_case() -> CaseReport {
    let mut b = builder("genus.identities");
    for (k3, g, dim) in [(72, 37, 38), (2, 2, 3), (64, 33, 34)] {
        let data = genus_identities(k3).expect("even degree");
        b.check(format!("g(-K^3={k3})"), g, data.g);
        b.check(format!("dim|-K|(-K^3={k3})"), dim, data.dim_antican);
    }
    let consistent = (-20..=100).step_by(2).all(|k3| {
        let d = genus_identities(k3).expect("even degree");
        d.k3 == 2 * d.g - 2 && d.dim_antican == d.g + 1
    });
    b.holds("k3 = 2g-2 and dim = g+1 for even k3 in [-20,100]", consistent);
    b.holds(
        "odd degree rejected",
        genus_identities(3) == Err(Error::OddDegree(3)),
    );
    b.finish()
}

/// Numerical data of a divisorial contraction `W → W'` whose exceptional
/// surface is `S ≅ F_n`, blown down onto a smooth rational curve `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalRayCase {
    pub n: u32,
    /// `K_W²·S = (−K_W|_S)²` with `−K_W|_S = Σ + n·l`.
    pub k_w_sq_s: Rat,
    /// `−K_{W'}·C = K_W²·S − 2`.
    pub antican_wprime_c: Rat,
    /// `K_{W'}·C`.
    pub k_wprime_c: Rat,
    /// `deg N_{C/W'} = −K_{W'}·C − 2`.
    pub normal_degree: Rat,
    /// Splitting type of `N_{C/W'}`: degrees differing by `n` and summing to `deg N`.
    pub normal_splitting: (Rat, Rat),
    /// `K_W·Σ`, the restriction of `−K_W` to the minimal section, negated.
    pub k_w_sigma: Rat,
    /// `−K_{W'}³ − (−K_W³)`.
    pub k3_shift: Rat,
}

pub fn extremal_table(n: u32) -> Result<ExtremalRayCase> {
    if n > 1 {
        return Err(Error::OutOfRange(format!(
            "exceptional surface F_{n}: only n = 0, 1 occur"
        )));
    }
    let s = Surface::Hirzebruch(n);
    let restricted = DivClass::from_ints(&[1, n as i64]);
    let k_w_sq_s = s.self_intersection(&restricted)?;
    let antican_wprime_c = &k_w_sq_s - q(2);
    let normal_degree = &antican_wprime_c - q(2);
    let hi = (&normal_degree + q(n as i64)) / q(2);
    let lo = &normal_degree - &hi;
    let k_w_sigma = -s.intersect(&restricted, &DivClass::from_ints(&[1, 0]))?;
    // blowing up a smooth rational curve: -K_W^3 = -K_W'^3 - 2(-K_W'·C) - 2
    let k3_shift = q(2) * &antican_wprime_c + q(2);
    Ok(ExtremalRayCase {
        n,
        k_w_sq_s,
        k_wprime_c: -antican_wprime_c.clone(),
        antican_wprime_c,
        normal_degree,
        normal_splitting: (hi, lo),
        k_w_sigma,
        k3_shift,
    })
}

pub(crate) fn extremal_case() -> CaseReport {
    let mut b = builder("extremal.table");
    let rows = [(0u32, 2i64, -4i64, (-2i64, -2i64), -2i64), (1, 1, -3, (-1, -2), 0)];
    for (n, k_c, deg_n, split, shift) in rows {
        let row = extremal_table(n).expect("n <= 1");
        b.check(format!("n={n}: K_W'·C"), k_c, row.k_wprime_c.clone());
        b.check(format!("n={n}: deg N_C/W'"), deg_n, row.normal_degree.clone());
        b.check(format!("n={n}: N_C/W' first summand"), split.0, row.normal_splitting.0.clone());
        b.check(format!("n={n}: N_C/W' second summand"), split.1, row.normal_splitting.1.clone());
        b.check(format!("n={n}: -K_W'^3 - (-K_W^3)"), shift, row.k3_shift.clone());
        b.check(
            format!("n={n}: shift = 2n-2"),
            q(2 * n as i64 - 2),
            row.k3_shift.clone(),
        );
        b.computed(format!("n={n}: K_W^2·S"), row.k_w_sq_s);
        b.computed(format!("n={n}: K_W·Σ"), row.k_w_sigma);
    }
    b.holds("n = 2 rejected", extremal_table(2).is_err());
    b.finish()
}

/// One entry of the index > 1 table: ambient weights, hypersurface degree
/// (`None` when `X` is the weighted projective space itself) and a label.
pub struct FanoIndexCase {
    pub label: &'static str,
    pub weights: &'static [u64],
    pub degree: Option<i64>,
}

/// Cases `[1]`-`[3]` and `[5]` of the classification of terminal Fano
/// threefolds of index > 1 with a non-Gorenstein point. The numbering gap
/// at `[4]` is kept.
pub static FANO_INDEX_CASES: &[FanoIndexCase] = &[
    FanoIndexCase { label: "[1] i=2", weights: &[1, 1, 2, 3, 2], degree: Some(6) },
    FanoIndexCase { label: "[1] i=3", weights: &[1, 1, 2, 3, 3], degree: Some(6) },
    FanoIndexCase { label: "[1] i=4", weights: &[1, 1, 2, 3, 4], degree: Some(6) },
    FanoIndexCase { label: "[1] i=5", weights: &[1, 1, 2, 3, 5], degree: Some(6) },
    FanoIndexCase { label: "[1] i=6", weights: &[1, 1, 2, 3, 6], degree: Some(6) },
    FanoIndexCase { label: "[2] i=2", weights: &[1, 1, 1, 2, 2], degree: Some(4) },
    FanoIndexCase { label: "[2] i=3", weights: &[1, 1, 1, 2, 3], degree: Some(4) },
    FanoIndexCase { label: "[3]", weights: &[1, 1, 1, 1, 2], degree: Some(3) },
    FanoIndexCase { label: "[5]", weights: &[1, 1, 1, 2], degree: None },
];

fn index_case_dim(c: &FanoIndexCase) -> Result<i64> {
    let w = WpsModel::new(c.weights)?;
    match c.degree {
        Some(deg) => w.hypersurface_antican_dim(deg),
        None => Ok(w.h0(w.weight_sum() as i64) as i64 - 1),
    }
}

pub fn fano_index_table() -> CaseReport {
    let mut b = builder("fano.index_table");
    let mut hyper_max: Option<(i64, &str)> = None;
    let mut all_within = true;
    for c in FANO_INDEX_CASES {
        let dim = index_case_dim(c).expect("table entries are valid");
        b.computed(format!("{} dim|-K_X|", c.label), dim);
        all_within &= dim <= 34;
        if c.degree.is_some() && hyper_max.is_none_or(|(m, _)| dim > m) {
            hyper_max = Some((dim, c.label));
        }
        let w = WpsModel::new(c.weights).expect("valid weights");
        b.holds(format!("{} ambient normalized", c.label), w.is_normalized());
    }
    let (max, at) = hyper_max.expect("table has hypersurfaces");
    b.holds("every dim|-K_X| <= 34", all_within);
    b.check("max hypersurface dim|-K_X|", 30i64, max);
    b.check("attained at", "[1] i=6", at);
    let p1112 = FANO_INDEX_CASES.last().expect("non-empty");
    b.check("[5] dim|-K_X|", 33i64, index_case_dim(p1112).expect("valid"));
    let ties = FANO_INDEX_CASES
        .iter()
        .filter(|c| c.degree.is_some() && index_case_dim(c).ok() == Some(max))
        .count();
    b.check("hypersurface maximum attained once", 1i64, ties as i64);
    b.assume("H^1(P, O(-K_P-2X)) = 0, so H^0(-K_P-X) -> H^0(-K_X) is onto");
    b.assume("adjunction K_X = (K_P+X)|_X (ambient nonsingular in codimension 2)");
    b.finish()
}

pub fn wps_degree72() -> CaseReport {
    let mut b = builder("wps.degree72");
    let genus = genus_identities(72).expect("even");
    for ws in [[3u64, 1, 1, 1], [6, 4, 1, 1]] {
        let w = WpsModel::new(&ws).expect("valid weights");
        let tag = format!("P{ws:?}").replace(' ', "");
        b.holds(format!("{tag} normalized"), w.is_normalized());
        b.check(
            format!("{tag} (Σw)^3/Πw"),
            72i64,
            w.antican_self_degree().expect("normalized"),
        );
        b.check(
            format!("{tag} degree from monomial counts"),
            72i64,
            w.antican_degree_oracle().expect("threefold"),
        );
        let h0 = w.h0(w.weight_sum() as i64);
        b.check(format!("{tag} h0(-K)"), 39u64, h0);
        b.check(format!("{tag} dim|-K| = g+1"), genus.dim_antican, h0 as i64 - 1);
    }
    b.check("g at degree 72", 37i64, genus.g);
    let p3 = WpsModel::new(&[1, 1, 1, 1]).expect("valid");
    b.check("P3 degree", 64i64, p3.antican_self_degree().expect("normalized"));
    b.check("P3 degree from monomial counts", 64i64, p3.antican_degree_oracle().expect("threefold"));
    b.finish()
}

pub fn upper_bound_constants() -> CaseReport {
    let mut b = builder("constants.upper_bounds");
    let cited = [40i64, 46, 54, 64];
    for c in cited {
        b.holds(format!("{c} < 72"), c < 72);
    }
    b.holds("thresholds increase 40 < 46 < 54 < 64 < 72", cited.windows(2).all(|w| w[0] < w[1]));

    // del Pezzo fibration: K_W²·W_η = K²_{W_η} <= 9
    let fiber = 4 * 9;
    b.check("4·K²(fiber) at K² = 9", 36i64, fiber);
    b.check("min(54, 4·9)", 36i64, fiber.min(54));
    b.holds("min(54, 4K²·S) <= 54", fiber.min(54) <= 54);
    // index r >= 3 cases: P³ (r=4) and the quadric Q ⊂ P⁴ (r=3)
    b.check("-K^3 of the quadric threefold: 3³·2", 54i64, 27 * 2);
    let p3 = WpsModel::new(&[1, 1, 1, 1]).expect("valid");
    b.check("-K^3 of P3", 64i64, p3.antican_self_degree().expect("normalized"));
    // odd c1 over P²: -K_W = 2D, -K_W^3 = 8K_D² with K_D² <= 9
    b.check("8·9", 72i64, 8 * 9);
    b.holds("8K_D² > 64 forces K_D² = 9", (1..=9).filter(|k| 8 * k > 64).eq([9]));
    let g = genus_identities(72).expect("even");
    b.check("genus of 72", 37i64, g.g);
    b.check("dim|-K| at 72", 38i64, g.dim_antican);
    b.assume("-K^3 <= 40 for the hyperelliptic case (cited)");
    b.assume("-K^3 <= 46 when lines pass through a general point (cited)");
    b.assume("-K^3 <= 64 for terminal Gorenstein Fano threefolds (cited, via smoothing)");
    b.assume("-K_W^3 <= min(54, 4K_W²·S) for divisor-to-curve contractions with rho = 2 (cited)");
    b.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;

    #[test]
    fn genus_examples() {
        assert_eq!(
            genus_identities(72).unwrap(),
            GenusData { k3: 72, g: 37, dim_antican: 38 }
        );
        assert_eq!(genus_identities(2).unwrap().dim_antican, 3);
        assert_eq!(genus_identities(64).unwrap().g, 33);
        assert_eq!(genus_identities(-3), Err(Error::OddDegree(-3)));
    }

    #[test]
    fn extremal_rows() {
        let r0 = extremal_table(0).unwrap();
        assert_eq!(r0.k_wprime_c, q(2));
        assert_eq!(r0.normal_degree, q(-4));
        assert_eq!(r0.k3_shift, q(-2));
        let r1 = extremal_table(1).unwrap();
        assert_eq!(r1.k_wprime_c, q(1));
        assert_eq!(r1.k3_shift, q(0));
        assert_eq!(r1.k_w_sigma, q(0));
        assert!(extremal_table(3).is_err());
    }

    #[test]
    fn small_cases_pass() {
        for r in [genus_case(), extremal_case(), fano_index_table(), wps_degree72(), upper_bound_constants()] {
            assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.notes);
        }
    }
}
