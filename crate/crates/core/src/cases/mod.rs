//! Named verification cases and the suite runner.
//!
//! Each case is a pure function producing a [`CaseReport`]. The registry is
//! a static table sorted by id; `--list` and the README are generated from it.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::report::{CaseBuilder, CaseReport, SuiteReport};

mod basics;
mod bundles;
mod conic;
mod surface_base;

pub use basics::{
    extremal_table, fano_index_table, genus_identities, upper_bound_constants, wps_degree72,
    ExtremalRayCase, GenusData, FANO_INDEX_CASES,
};
pub use bundles::{p2bundle_enumeration, quadric_bundle_case, quadric_identity_suite, quadric_r_nonneg};
pub use conic::{
    conic_discriminant_bound_chain, conic_p1bundle_cases, sublemma54, sublemma54_nef_coefficient,
    sublemma_search, SublemmaResult,
};
pub use surface_base::{fe_grid, surface_base_fe_claims, surface_base_p2_cases, FeGridPoint};

#[derive(Debug)]
pub struct CaseSpec {
    pub id: &'static str,
    pub anchor: &'static str,
    pub run: fn() -> CaseReport,
}

pub static REGISTRY: &[CaseSpec] = &[
    CaseSpec {
        id: "conic.bound_chain",
        anchor: "-K^3 <= (-3K-Δ)·(-4K-Δ) = 12K²+7K·Δ+Δ² <= 54",
        run: conic_discriminant_bound_chain,
    },
    CaseSpec {
        id: "conic.p1bundle.f2.l",
        anchor: "F2, c1=-l: L²·Σ=-1, L²·l=0, -K^3=48-8c",
        run: conic::f2_l,
    },
    CaseSpec {
        id: "conic.p1bundle.f2.sigma",
        anchor: "F2, c1=-Σ: L²·Σ=2, L²·l=-1, -K^3=44-8c",
        run: conic::f2_sigma,
    },
    CaseSpec {
        id: "conic.p1bundle.f2.sigma_l",
        anchor: "F2, c1=-Σ-l: L²·Σ=1, L²·l=-1, -K^3=48-8c",
        run: conic::f2_sigma_l,
    },
    CaseSpec {
        id: "conic.p1bundle.p1xp1.sigma3",
        anchor: "P1xP1, c1=-3Σ: L²·Σ=0, L²·l=-3, -K^3=48-8c",
        run: conic::p1xp1_sigma3,
    },
    CaseSpec {
        id: "conic.p1bundle.p1xp1.sigma_l",
        anchor: "P1xP1, c1=-Σ-l: L²·Σ=L²·l=-1, -K^3=52-8c",
        run: conic::p1xp1_sigma_l,
    },
    CaseSpec {
        id: "conic.p1bundle.p2.even",
        anchor: "P2, c1=-2h: L²·G=-2, -K^3=62-8c",
        run: conic::p2_even,
    },
    CaseSpec {
        id: "conic.p1bundle.p2.star",
        anchor: "W = P(O+O(3)) over P2: -K^3=72",
        run: conic::p2_star,
    },
    CaseSpec {
        id: "constants.upper_bounds",
        anchor: "cited thresholds 40, 46, 54, 64, 72 and -K^3 <= min(54, 4K²·S)",
        run: upper_bound_constants,
    },
    CaseSpec {
        id: "extremal.table",
        anchor: "S = F_n, n<=1: -K_W'·C = K_W²·S-2, K_W^3 = K_W'^3+2n-2",
        run: basics::extremal_case,
    },
    CaseSpec {
        id: "fano.index_table",
        anchor: "index > 1 hypersurfaces: max dim|-K_X| = 30; P(1,1,1,2): 33",
        run: fano_index_table,
    },
    CaseSpec {
        id: "fe.claims.chi36",
        anchor: "chi(E) >= 36 on F_e: c2(E') <= -4 outside four exceptions; H^3 = c1²-c2",
        run: surface_base::chi36_case,
    },
    CaseSpec {
        id: "fe.claims.chi37",
        anchor: "chi(E) >= 37 on F_e: c2(E') <= -2 and chi(E') > 0",
        run: surface_base::chi37_case,
    },
    CaseSpec {
        id: "genus.identities",
        anchor: "-K^3 = 2g-2, dim|-K| = g+1",
        run: basics::genus_case,
    },
    CaseSpec {
        id: "p2base.cases",
        anchor: "P2 base: c1²+3c1-2c2 >= 70, E = O(3)+O(6), c2(E(-m)) < 0",
        run: surface_base_p2_cases,
    },
    CaseSpec {
        id: "p2bundle.enum",
        anchor: "P2-bundles over P1: nine (d1,d2), dim|-K_X| <= 38 with equality at (6,2)",
        run: p2bundle_enumeration,
    },
    CaseSpec {
        id: "quadric.identity",
        anchor: "quadric bundles: (-K)·B·H = 2(6-d-2r) for every α",
        run: quadric_identity_suite,
    },
    CaseSpec {
        id: "quadric.r_nonneg",
        anchor: "quadric bundles, r >= 0: h0(H) <= 10 (α<=0), h0(H) = d+4+4α <= 24 (α>=0)",
        run: quadric_r_nonneg,
    },
    CaseSpec {
        id: "sublemma54.f0",
        anchor: "12K²+7K·Δ+Δ² <= 54 on P1xP1",
        run: conic::sublemma_f0,
    },
    CaseSpec {
        id: "sublemma54.f2",
        anchor: "12K²+7K·Δ+Δ² <= 54 on F2",
        run: conic::sublemma_f2,
    },
    CaseSpec {
        id: "sublemma54.nef_coefficient",
        anchor: "-3K-Δ = (6-α)Σ+(3n+6-β)l on F_n",
        run: sublemma54_nef_coefficient,
    },
    CaseSpec {
        id: "sublemma54.p2",
        anchor: "12K²+7K·Δ+Δ² = 108-21d+d² <= 54 on P2",
        run: conic::sublemma_p2,
    },
    CaseSpec {
        id: "wps.degree72",
        anchor: "P(3,1,1,1), P(6,4,1,1): -K^3 = 72, dim|-K| = 38",
        run: wps_degree72,
    },
];

pub fn ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|c| c.id).collect()
}

pub fn lookup(id: &str) -> Option<&'static CaseSpec> {
    REGISTRY.iter().find(|c| c.id == id)
}

/// Starts a report for a registered case.
pub(crate) fn builder(id: &str) -> CaseBuilder {
    let spec = lookup(id).unwrap_or_else(|| panic!("case {id} is not registered"));
    CaseBuilder::new(spec.id, spec.anchor)
}

/// `all`, an exact id, or a dotted prefix such as `sublemma54` or
/// `conic.p1bundle`.
pub fn select(selector: &str) -> Result<Vec<&'static CaseSpec>> {
    if selector == "all" {
        return Ok(REGISTRY.iter().collect());
    }
    if let Some(spec) = lookup(selector) {
        return Ok(vec![spec]);
    }
    let prefix = selector.trim_end_matches('.');
    let matched: Vec<_> = REGISTRY
        .iter()
        .filter(|c| {
            c.id.strip_prefix(prefix)
                .is_some_and(|rest| rest.starts_with('.'))
        })
        .collect();
    if matched.is_empty() || prefix.is_empty() {
        return Err(Error::UnknownSelector {
            selector: selector.to_string(),
            valid: ids().into_iter().map(String::from).collect(),
        });
    }
    Ok(matched)
}

/// Runs the selected cases on worker threads and assembles the report in
/// id order.
pub fn run(selector: &str) -> Result<SuiteReport> {
    let specs = select(selector)?;
    let start = Instant::now();
    let cases: Vec<CaseReport> = std::thread::scope(|s| {
        let handles: Vec<_> = specs.iter().map(|spec| s.spawn(spec.run)).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("case runner panicked"))
            .collect()
    });
    Ok(SuiteReport::new(cases, start.elapsed().as_millis() as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_sorted_and_unique() {
        let ids = ids();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn runners_report_their_own_id() {
        for spec in REGISTRY {
            let r = (spec.run)();
            assert_eq!(r.id, spec.id);
            assert_eq!(r.anchor, spec.anchor);
        }
    }

    #[test]
    fn selection() {
        assert_eq!(select("all").unwrap().len(), REGISTRY.len());
        assert_eq!(select("sublemma54.p2").unwrap().len(), 1);
        assert_eq!(select("sublemma54").unwrap().len(), 4);
        assert_eq!(select("conic.p1bundle").unwrap().len(), 7);
        assert_eq!(select("fe.claims.").unwrap().len(), 2);
        assert!(select("sublemma5").is_err());
        assert!(select("").is_err());
        match select("nosuchcase").unwrap_err() {
            Error::UnknownSelector { valid, .. } => assert_eq!(valid.len(), REGISTRY.len()),
            e => panic!("unexpected {e:?}"),
        }
    }
}
