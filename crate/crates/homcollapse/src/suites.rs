//! Named verification suites behind the verify command. Each suite builds
//! what it needs, runs its checks, and returns a report; constructions that
//! blow a cap turn into skipped checks rather than failures.

use rayon::prelude::*;

use crate::complex::SimplicialComplex;
use crate::graph::Graph;
use crate::hom::HomComplex;
use crate::homology::{betti_mod2, integral_homology, uct_consistent, HomologyGroup};
use crate::links::verify_cell_links;
use crate::mkls::{ArrayPoset, Family};
use crate::report::{homology_rows, VerificationReport};
use crate::stages::three_stage_collapse;
use crate::{Error, Result};

/// Shared suite parameters. `jobs` = 0 leaves the thread count to rayon.
#[derive(Clone, Copy, Debug)]
pub struct SuiteParams {
    pub n: u32,
    pub max_cells: u64,
    pub max_chains: u64,
    pub jobs: usize,
}

impl SuiteParams {
    pub fn new(n: u32) -> SuiteParams {
        let cap = crate::default_cap();
        SuiteParams { n, max_cells: cap, max_chains: cap, jobs: 0 }
    }
}

/// Run `work`, translating a cap overrun into a skipped check.
fn capped<T>(
    report: &mut VerificationReport,
    name: &str,
    work: impl FnOnce() -> Result<T>,
) -> Result<Option<T>> {
    match work() {
        Ok(v) => Ok(Some(v)),
        Err(Error::CapExceeded(what, wanted, cap)) => {
            report.skip(name, format!("{what}: {wanted} exceeds the cap {cap}"));
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Every cell of K has the predicted lower and upper link.
pub fn links_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("links", "every K cell has the predicted link structure", p.n);
    let Some(kp) = capped(&mut report, "link verification", || {
        ArrayPoset::build(p.n, Family::K, p.max_cells)
    })?
    else {
        return Ok(report);
    };
    report.cells_checked = kp.len() as u64;
    let iso_cap = p.max_chains;
    let run = || -> Vec<(usize, Vec<String>)> {
        (0..kp.len())
            .into_par_iter()
            .map(|i| (i, verify_cell_links(&kp, i, iso_cap).unwrap_or_else(|e| vec![e.to_string()])))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    };
    let bad = if p.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(p.jobs)
            .build()
            .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
            .install(run)
    } else {
        run()
    };
    for (i, reasons) in bad {
        for reason in reasons {
            report.fail(kp.cells[i].to_line(), reason);
        }
    }
    report.check("lower and upper links of every cell", report.failures.is_empty(), None);
    Ok(report)
}

/// The three-stage collapse lands on the diagonal with everything checked.
pub fn collapse_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report =
        VerificationReport::new("collapse", "the chain complex of K collapses to the diagonal", p.n);
    let Some(out) = capped(&mut report, "three stage collapse", || {
        three_stage_collapse(p.n, p.max_cells, p.max_chains)
    })?
    else {
        return Ok(report);
    };
    report.cells_checked = out.chain_counts[0] as u64;
    for s in &out.stages {
        report.check(
            &format!("{} collapses its residue away", s.name),
            s.residue_matches,
            Some(format!("{} pairs, {} steps", s.pairs, s.steps)),
        );
        report.check(&format!("{} commutes with the row swap", s.name), s.equivariant, None);
    }
    report.check("final residue is the diagonal complex", out.final_matches_diagonal, None);
    for f in &out.failures {
        report.fail("collapse".into(), f.clone());
    }
    Ok(report)
}

fn expected_boundary_homology(n: u32) -> Option<Vec<HomologyGroup>> {
    match n {
        3 => Some(vec![HomologyGroup::free(2), HomologyGroup::free(2)]),
        4 => Some(vec![
            HomologyGroup::free(1),
            HomologyGroup { rank: 0, torsion: vec![2] },
            HomologyGroup::free(0),
            HomologyGroup::free(1),
        ]),
        _ => None,
    }
}

/// Homology of the boundary complex ΔL and the diagonal sphere ΔS.
pub fn homology_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "homology",
        "the boundary complex has the homology of a Stiefel manifold",
        p.n,
    );
    if let Some(dl) = capped(&mut report, "boundary complex homology", || {
        let lp = ArrayPoset::build(p.n, Family::L, p.max_cells)?;
        lp.poset.order_complex(p.max_chains)
    })? {
        report.cells_checked += dl.simplex_count() as u64;
        let z2 = betti_mod2(&dl);
        if p.n == 5 {
            // Betti numbers only; the integral table would be gratuitous.
            report.check(
                "mod 2 Betti vector of the boundary",
                z2 == vec![1; 6],
                Some(format!("{z2:?}")),
            );
        } else {
            let h = integral_homology(&dl)?;
            report.homology = Some(homology_rows(&h));
            report.check("universal coefficients consistency", uct_consistent(&z2, &h), None);
            if let Some(expected) = expected_boundary_homology(p.n) {
                report.check(
                    "integral homology of the boundary",
                    h == expected,
                    Some(format!("z2 Betti {z2:?}")),
                );
            }
        }
    }
    if let Some(ds) = capped(&mut report, "diagonal homology", || {
        let sp = ArrayPoset::build(p.n, Family::S, p.max_cells)?;
        sp.poset.order_complex(p.max_chains)
    })? {
        report.cells_checked += ds.simplex_count() as u64;
        let h = integral_homology(&ds)?;
        let dim = (p.n - 2) as usize;
        let expected: Vec<HomologyGroup> = (0..=dim)
            .map(|d| HomologyGroup::free(usize::from(d == 0) + usize::from(d == dim)))
            .collect();
        report.check(
            "the diagonal has sphere homology",
            h == expected,
            Some(format!("S^{dim}")),
        );
    }
    Ok(report)
}

/// Fixed chains of the involution are exactly the diagonal complex, and the
/// Euler characteristics agree with the sphere.
pub fn fixedset_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "fixedset",
        "the row swap acts freely outside the diagonal complex",
        p.n,
    );
    let Some((kp, dk)) = capped(&mut report, "fixed chains", || {
        let kp = ArrayPoset::build(p.n, Family::K, p.max_cells)?;
        let dk = kp.poset.order_complex(p.max_chains)?;
        Ok((kp, dk))
    })?
    else {
        return Ok(report);
    };
    report.cells_checked = dk.simplex_count() as u64;
    let swap = kp.involution();
    let fixed: Vec<_> = dk
        .iter()
        .filter(|s| {
            let mut img: Vec<u32> = s.iter().map(|&v| swap[v as usize] as u32).collect();
            img.sort_unstable();
            img == **s
        })
        .cloned()
        .collect();
    let fixed_cx = SimplicialComplex::from_simplices(fixed, dk.includes_empty());
    let ds = dk.vertex_induced(|v| kp.cells[v as usize].is_diagonal());
    report.check("fixed chains form the diagonal complex", fixed_cx == ds, None);
    let chi_k = dk.euler_characteristic();
    let chi_s = ds.euler_characteristic();
    let chi_sphere = 1 + if p.n % 2 == 0 { 1 } else { -1 };
    report.check(
        "collapse preserves the Euler characteristic",
        chi_k == chi_s,
        Some(format!("χ(ΔK) = {chi_k}, χ(ΔS) = {chi_s}")),
    );
    report.check(
        "the diagonal has the Euler characteristic of the sphere",
        chi_s == chi_sphere,
        Some(format!("sphere of dimension {}: {chi_sphere}", p.n - 2)),
    );
    Ok(report)
}

/// The pseudomanifold boundary of ΔK is ΔL, and ΔL is closed.
pub fn boundary_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "boundary",
        "the boundary of the chain complex of K is the chain complex of L",
        p.n,
    );
    let Some((kp, dk)) = capped(&mut report, "boundary extraction", || {
        let kp = ArrayPoset::build(p.n, Family::K, p.max_cells)?;
        let dk = kp.poset.order_complex(p.max_chains)?;
        Ok((kp, dk))
    })?
    else {
        return Ok(report);
    };
    report.cells_checked = dk.simplex_count() as u64;
    let dl = dk.vertex_induced(|v| {
        let c = kp.cells[v as usize];
        c.a.is_disjoint(c.c)
    });
    let boundary = dk.pseudomanifold_boundary()?;
    report.check(
        "pseudomanifold boundary equals the boundary complex",
        boundary == dl,
        Some(format!(
            "boundary {} cells, ΔL {} cells",
            boundary.simplex_count(),
            dl.simplex_count()
        )),
    );
    let closed = dl.pseudomanifold_boundary()?;
    report.check(
        "the boundary complex is closed",
        closed.simplex_count() == 0,
        Some(format!("{} boundary cells", closed.simplex_count())),
    );
    Ok(report)
}

/// Maximal cells of Hom(P4, K_n) come in every dimension 2n−4 … 3n−6.
pub fn nonmanifold_suite(p: SuiteParams) -> Result<VerificationReport> {
    let mut report = VerificationReport::new(
        "nonmanifold",
        "the path homomorphism complex has maximal cells in a dimension range",
        p.n,
    );
    let Some(hom) = capped(&mut report, "path complex", || {
        HomComplex::build(&Graph::path(4), p.n, p.max_cells)
    })?
    else {
        return Ok(report);
    };
    report.cells_checked = hom.len() as u64;
    let dims = hom.maximal_dims();
    let expected: Vec<u32> = (2 * p.n - 4..=3 * p.n - 6).collect();
    report.check(
        "maximal cell dimensions",
        dims == expected,
        Some(format!("got {dims:?}, expected {expected:?}")),
    );
    Ok(report)
}

/// All six suites in order.
pub fn all_suites(p: SuiteParams) -> Result<Vec<VerificationReport>> {
    Ok(vec![
        links_suite(p)?,
        collapse_suite(p)?,
        homology_suite(p)?,
        fixedset_suite(p)?,
        boundary_suite(p)?,
        nonmanifold_suite(p)?,
    ])
}
