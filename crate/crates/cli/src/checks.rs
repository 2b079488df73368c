//! Implementations of the `check-*` subcommands. Each builds a report with
//! one entry per verified statement; the overall verdict drives the exit
//! code.

use anyhow::{anyhow, bail};
use serde_json::json;

use zk_core::complex::SimplicialComplex;
use zk_core::hochster::{
    golod_check, poincare_pairing, restriction_split, zk_cohomology, GolodReport,
};
use zk_core::homology::{Coeffs, HomologyCache};
use zk_core::linalg::{field_rank, submatrix, FieldOps, PrimeField, Rationals};
use zk_core::polytope::{
    betti_eq, build_lhat, build_stacked, connected_sum_betti, disjoint_points, htype_family,
    random_history, validate_stacked_facets, wedge_betti, HtypeMode,
};

use crate::report::{params, timed_check, CheckEntry, Report};

/// Field selector for cup-product work: the rationals or a prime field.
#[derive(Clone, Copy, Debug)]
pub enum FieldSel {
    Q,
    Fp(u64),
}

impl FieldSel {
    pub fn parse(text: &str) -> anyhow::Result<Self> {
        match Coeffs::parse(text)? {
            Coeffs::Q => Ok(FieldSel::Q),
            Coeffs::Fp(p) => Ok(FieldSel::Fp(p)),
            Coeffs::Z => bail!("field coefficients required: q, f2, or fp:<p>"),
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSel::Q => "q".to_string(),
            FieldSel::Fp(p) => format!("fp:{p}"),
        }
    }
}

pub fn fmt_betti(b: &[usize]) -> String {
    let parts: Vec<String> = b.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn golod_with(
    k: &SimplicialComplex,
    sel: FieldSel,
    limit: usize,
) -> zk_core::Result<GolodReport> {
    match sel {
        FieldSel::Q => golod_check(k, &Rationals, limit),
        FieldSel::Fp(p) => golod_check(k, &PrimeField::new(p)?, limit),
    }
}

/// The full verification battery for one (d, ell) pair: stacked-ball facet
/// combinatorics, both Betti vector comparisons, vanishing products after
/// deleting vertex 1, the restriction-kernel separation of the pairing, and
/// Poincare duality of the boundary sphere.
pub fn check_panov(
    d: usize,
    ell: usize,
    sel: FieldSel,
    limit: usize,
) -> anyhow::Result<Report> {
    let mut report = Report::new(
        "check-panov",
        params(&[
            ("d", json!(d)),
            ("ell", json!(ell)),
            ("coeffs", json!(sel.name())),
            ("limit_m", json!(limit)),
        ]),
    );
    let cache = HomologyCache::new();

    let audit = validate_stacked_facets(d, ell)?;
    report.push(timed_check("stacked-ball facet count", || {
        (
            audit.expected_count.to_string(),
            audit.facets.len().to_string(),
            audit.count_ok,
            None,
        )
    }));
    report.push(timed_check("facets avoiding vertex 1", || {
        let expected: Vec<String> =
            audit.expected_avoiding.iter().map(|f| f.to_string()).collect();
        let actual: Vec<String> =
            audit.avoiding_vertex_one.iter().map(|f| f.to_string()).collect();
        (expected.join(" "), actual.join(" "), audit.avoiding_ok, None)
    }));
    if let Some(ok) = audit.filtration_ok {
        report.push(timed_check("vertex-deletion filtration", || {
            ("rebuilds deleted boundary".into(), if ok { "rebuilds".into() } else { "differs".into() }, ok, None)
        }));
    }

    let ball = build_lhat(d, ell)?;
    let boundary = ball.boundary_complex()?;
    let deleted = boundary.delete_vertex(1)?;
    let points = disjoint_points(ell)?;

    let z_boundary = zk_cohomology(&boundary, Coeffs::Q, limit, &cache)?;
    let z_deleted = zk_cohomology(&deleted, Coeffs::Q, limit, &cache)?;
    let z_points = zk_cohomology(&points, Coeffs::Q, limit, &cache)?;

    let expected_sum = connected_sum_betti(d, ell);
    report.push(timed_check("betti of Z over the boundary vs connected-sum vector", || {
        (
            expected_sum.to_string(),
            fmt_betti(z_boundary.betti_vector()),
            betti_eq(z_boundary.betti_vector(), expected_sum.as_slice()),
            None,
        )
    }));

    let expected_wedge = wedge_betti(ell);
    report.push(timed_check("betti of Z after deleting vertex 1 vs wedge vector", || {
        (
            expected_wedge.to_string(),
            fmt_betti(z_deleted.betti_vector()),
            betti_eq(z_deleted.betti_vector(), expected_wedge.as_slice()),
            None,
        )
    }));
    report.push(timed_check("betti of Z after deleting vertex 1 vs disjoint points", || {
        (
            fmt_betti(z_points.betti_vector()),
            fmt_betti(z_deleted.betti_vector()),
            betti_eq(z_deleted.betti_vector(), z_points.betti_vector()),
            None,
        )
    }));

    let golod = golod_with(&deleted, sel, limit)?;
    report.push(timed_check("all products vanish after deleting vertex 1", || {
        let witness = golod
            .witness
            .as_ref()
            .map(|(u, v)| format!("nonzero product of {u} and {v}"));
        ("all zero".into(), if golod.golod { "all zero".into() } else { "nonzero product".into() }, golod.golod, witness)
    }));

    let betti = z_boundary.betti_vector().to_vec();
    let n = betti.len() - 1;
    report.push(timed_check("poincare duality of the Betti vector", || {
        let ok = (0..=n).all(|p| betti[p] == betti[n - p]);
        ("symmetric".into(), if ok { "symmetric".into() } else { "asymmetric".into() }, ok, None)
    }));

    let separation = match sel {
        FieldSel::Q => cup_separation_checks(&boundary, n as i32, &betti, &Rationals, limit)?,
        FieldSel::Fp(p) => {
            let field = PrimeField::new(p)?;
            cup_separation_checks(&boundary, n as i32, &betti, &field, limit)?
        }
    };
    for entry in separation {
        report.push(entry);
    }

    Ok(report)
}

/// For each complementary degree pair (p, n-p): the pairing restricted to
/// classes supported away from vertex 1 on both sides is zero, the blocks
/// pairing restriction-kernel classes against surviving classes are square
/// and nonsingular, the kernel ranks add up to the Betti number, and the
/// whole pairing matrix is nonsingular.
fn cup_separation_checks<F: FieldOps>(
    boundary: &SimplicialComplex,
    n: i32,
    betti: &[usize],
    field: &F,
    limit: usize,
) -> anyhow::Result<Vec<CheckEntry>> {
    let mut entries = Vec::new();
    for p in 1..=(n / 2) {
        let q = n - p;
        if betti[p as usize] == 0 && betti[q as usize] == 0 {
            continue;
        }
        let pairing = poincare_pairing(boundary, p, field, limit)?;
        let (ker_p, im_p) = restriction_split(boundary, 1, p, field)?;
        let (ker_q, im_q) = restriction_split(boundary, 1, q, field)?;

        let row_has_1: Vec<bool> =
            pairing.rows.iter().map(|l| l.support.binary_search(&1).is_ok()).collect();
        let col_has_1: Vec<bool> =
            pairing.cols.iter().map(|l| l.support.binary_search(&1).is_ok()).collect();
        let rows_ker: Vec<usize> =
            (0..row_has_1.len()).filter(|&i| row_has_1[i]).collect();
        let rows_im: Vec<usize> =
            (0..row_has_1.len()).filter(|&i| !row_has_1[i]).collect();
        let cols_ker: Vec<usize> =
            (0..col_has_1.len()).filter(|&i| col_has_1[i]).collect();
        let cols_im: Vec<usize> =
            (0..col_has_1.len()).filter(|&i| !col_has_1[i]).collect();

        let im_im = submatrix(&pairing.matrix, &rows_im, &cols_im, field);
        let zero_block = (0..im_im.rows())
            .all(|r| (0..im_im.cols()).all(|c| field.is_zero(im_im.get(r, c))));

        let ker_im = submatrix(&pairing.matrix, &rows_ker, &cols_im, field);
        let ker_im_perfect =
            ker_im.rows() == ker_im.cols() && field_rank(&ker_im, field) == ker_im.rows();

        let im_ker = submatrix(&pairing.matrix, &rows_im, &cols_ker, field);
        let im_ker_perfect =
            im_ker.rows() == im_ker.cols() && field_rank(&im_ker, field) == im_ker.rows();

        let counts_ok = ker_p + ker_q == betti[p as usize]
            && im_p == pairing.rows.len() - ker_p
            && im_q == pairing.cols.len() - ker_q;

        let full_rank = field_rank(&pairing.matrix, field) == betti[p as usize].min(betti[q as usize])
            && betti[p as usize] == betti[q as usize];

        let pass = zero_block && ker_im_perfect && im_ker_perfect && counts_ok && full_rank;
        entries.push(timed_check(&format!("cup separation in degrees ({p},{q})"), || {
            (
                "zero surviving block, perfect kernel pairing".into(),
                format!(
                    "zero block {zero_block}, kernel blocks {} and {}, kernel ranks {ker_p}+{ker_q} vs betti {}, full rank {full_rank}",
                    ker_im_perfect, im_ker_perfect, betti[p as usize]
                ),
                pass,
                None,
            )
        }));
    }

    // Unit against the fundamental class.
    let pairing = poincare_pairing(boundary, 0, field, limit)?;
    let unit_ok = pairing.matrix.rows() == 1
        && pairing.matrix.cols() == 1
        && !field.is_zero(pairing.matrix.get(0, 0));
    entries.push(timed_check("unit pairs with the fundamental class", || {
        ("nonzero".into(), if unit_ok { "nonzero".into() } else { "zero".into() }, unit_ok, None)
    }));

    Ok(entries)
}

pub fn check_golod(
    k: &SimplicialComplex,
    sel: FieldSel,
    limit: usize,
    file: &str,
) -> anyhow::Result<Report> {
    let mut report = Report::new(
        "check-golod",
        params(&[
            ("file", json!(file)),
            ("coeffs", json!(sel.name())),
            ("limit_m", json!(limit)),
        ]),
    );
    let result = golod_with(k, sel, limit)?;
    report.push(timed_check("all pairwise products of positive classes vanish", || {
        let witness = result
            .witness
            .as_ref()
            .map(|(u, v)| format!("nonzero product of {u} and {v}"));
        (
            "all zero".into(),
            if result.golod { "all zero".into() } else { "nonzero product".into() },
            result.golod,
            witness,
        )
    }));
    Ok(report)
}

pub fn check_stack_invariance(
    d: usize,
    ell: usize,
    trials: usize,
    seed: u64,
    limit: usize,
) -> anyhow::Result<Report> {
    if trials < 2 {
        bail!("need at least 2 trials to compare stack histories");
    }
    let mut report = Report::new(
        "check-stack-invariance",
        params(&[
            ("d", json!(d)),
            ("ell", json!(ell)),
            ("trials", json!(trials)),
            ("seed", json!(seed)),
            ("limit_m", json!(limit)),
        ]),
    );
    let cache = HomologyCache::new();

    let mut first: Option<(String, Vec<usize>)> = None;
    let mut mismatch: Option<(String, String, Vec<usize>, Vec<usize>)> = None;
    for trial in 0..trials {
        let history = random_history(d, ell, seed.wrapping_add(trial as u64))?;
        let ball = build_stacked(&history)?;
        let boundary = ball.boundary_complex()?;
        let z = zk_cohomology(&boundary, Coeffs::Z, limit, &cache)?;
        let betti = z.betti_vector().to_vec();
        match &first {
            None => first = Some((history.to_string(), betti)),
            Some((h0, b0)) => {
                if !betti_eq(b0, &betti) && mismatch.is_none() {
                    mismatch = Some((h0.clone(), history.to_string(), b0.clone(), betti));
                }
            }
        }
    }
    let (h0, b0) = first.ok_or_else(|| anyhow!("no trials ran"))?;
    report.push(timed_check("all stack histories give the same Betti vector", || {
        match &mismatch {
            None => (fmt_betti(&b0), fmt_betti(&b0), true, Some(format!("first history {h0}"))),
            Some((ha, hb, ba, bb)) => (
                fmt_betti(ba),
                fmt_betti(bb),
                false,
                Some(format!("history {ha} vs history {hb}")),
            ),
        }
    }));
    Ok(report)
}

pub fn check_htype(
    k: usize,
    ell: usize,
    mode: HtypeMode,
    seed: u64,
    limit: usize,
) -> anyhow::Result<Report> {
    let mut report = Report::new(
        "check-htype",
        params(&[
            ("k", json!(k)),
            ("ell", json!(ell)),
            ("mode", json!(mode.to_string())),
            ("seed", json!(seed)),
            ("limit_m", json!(limit)),
        ]),
    );
    let cache = HomologyCache::new();
    let (choices, complex) = htype_family(k, ell, mode, seed)?;
    let z = zk_cohomology(&complex, Coeffs::Z, limit, &cache)?;
    let z_points = zk_cohomology(&disjoint_points(ell)?, Coeffs::Z, limit, &cache)?;
    report.push(timed_check("glued simplex chain matches disjoint points", || {
        let gluings: Vec<String> = choices.iter().map(|c| c.to_string()).collect();
        (
            fmt_betti(z_points.betti_vector()),
            fmt_betti(z.betti_vector()),
            betti_eq(z.betti_vector(), z_points.betti_vector()),
            Some(format!("gluings [{}]", gluings.join(" "))),
        )
    }));
    Ok(report)
}
