//! Verification suites behind `tokenspectra verify`: reference-table checks
//! against built-in expected values, and cross-method invariant sweeps.

use serde::Serialize;

use crate::cyclift::{
    alpha_estimates, asymptotic_eigs, base_matrix_herm, bstar, closed_form_quotient_eigs,
    even_4r2_base, exactly_one_cycle_eigenvalue, f2_cycle_spectrum_detail, gershgorin_bound_check,
    laplacian_base_matrix, lift_spectrum, odd_base_eigenpairs, odd_cycle_base,
    reconstruct_eigenvector, theta, trace_identity_check,
};
use crate::error::Result;
use crate::graph::{build_family, delete_vertex, laplacian};
use crate::linalg::{
    eig_herm, eig_sym, eig_sym_full, eig_tridiag_sym, gershgorin_left, spectrum_contains,
    spectrum_equal, Spectrum,
};
use crate::partitions::{f2_cycle_partition, quotient_laplacian, PartitionShape};
use crate::report::Check;
use crate::token::{algebraic_connectivity, binomial_matrix, token_graph};

/// Which suite to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// Reference spectra, quotient matrices, endpoint tables, trace totals.
    Tables,
    /// Cross-method equality sweeps and bound checks.
    Invariants,
    All,
}

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub passed: usize,
    pub failed: usize,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

/// F_2(C_9) reference eigenvalues per root, with the index of the entry that
/// is an eigenvalue of C_9 itself.
const TABLE_C9: [([f64; 4], usize); 5] = [
    ([0.0, 1.171572876, 4.0, 6.828427124], 0),
    ([0.4679111136, 2.52079560, 5.420264509, 7.470414013], 0),
    ([0.783324839, 1.65270363, 3.895673125, 6.136209510], 1),
    ([1.50913638, 3.0, 4.656620432, 5.834243185], 1),
    ([1.939683655, 3.382489411, 3.87938479, 4.451145779], 2),
];

/// Gershgorin left endpoints (l1, l2, l3) of B*(r) for n=9, r=0..3.
const GERSH_C9: [[f64; 3]; 4] = [
    [0.0, 0.0, 0.0],
    [0.1206147584, 0.24122951686, 4.0],
    [0.4679111138, 0.93582222752, 0.93582222752],
    [1.0, 2.0, 4.0],
];

/// F_2(C_8) reference eigenvalues per root (r = 0..4; r and 8-r coincide),
/// with the index matching an eigenvalue of C_8.
const TABLE_C8: [([f64; 4], usize); 5] = [
    ([0.0, 1.506040792, 4.890083735, 7.603875471], 0),
    ([0.5857864376, 3.12596795, 4.0, 6.288245611], 0),
    ([0.9486257582, 2.0, 4.517304045, 6.534070196], 1),
    ([1.711754388, 3.414213562, 4.0, 4.87403204], 1),
    ([2.0, 4.0, 4.0, 4.0], 1),
];

/// The full 28-value spectrum of F_2(C_8), four printed decimals.
const SPEC_F2C8: [f64; 28] = [
    0.0, 0.5857, 0.5857, 0.9486, 0.9486, 1.5060, 1.7117, 1.7117, 2.0, 2.0, 2.0, 3.1259, 3.1259,
    3.4142, 3.4142, 4.0, 4.0, 4.0, 4.5173, 4.5173, 4.8740, 4.8740, 4.8900, 6.2882, 6.2882, 6.5340,
    6.5340, 7.6038,
];

/// Its multiplicity profile after clustering at 1e-6.
const MULT_F2C8: [usize; 15] = [1, 2, 2, 1, 2, 3, 2, 2, 3, 2, 2, 1, 2, 2, 1];

const QUOTIENT_PATH_C8: [[i64; 4]; 4] =
    [[2, -2, 0, 0], [-2, 4, -2, 0], [0, -2, 4, -2], [0, 0, -4, 4]];

const QUOTIENT_U_C8: [[i64; 7]; 7] = [
    [2, -1, 0, 0, 0, -1, 0],
    [-1, 4, -1, 0, -1, 0, -1],
    [0, -1, 4, -2, 0, -1, 0],
    [0, 0, -2, 4, -2, 0, 0],
    [0, -1, 0, -2, 4, -1, 0],
    [-1, 0, -1, 0, -1, 4, -1],
    [0, -1, 0, 0, 0, -1, 2],
];

const SPEC_QUOTIENT_PATH_C8: [f64; 4] = [0.0, 1.5060, 4.8900, 7.6038];
const SPEC_QUOTIENT_U_C8: [f64; 7] = [0.0, 1.5060, 2.0, 4.0, 4.0, 4.8900, 7.6038];

/// Reference totals Σ_r tr(B*(r)^l) for n=8, l=0..7. The l=5 entry is the
/// internally consistent 89792 (see the report note about the 9792 reading).
const TRACE_TOTALS_C8: [f64; 8] = [
    32.0, 112.0, 512.0, 2656.0, 14976.0, 89792.0, 564032.0, 3670464.0,
];

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn dense_f2cn_spectrum(n: usize) -> Result<Spectrum> {
    let g = build_family(&format!("cycle:{n}"))?;
    eig_sym(&laplacian(&token_graph(&g, 2)?).to_dense())
}

fn tables_suite(tol: f64, checks: &mut Vec<Check>, notes: &mut Vec<String>) -> Result<()> {
    // F_2(C_9) per-root spectra, via the Hermitian base evaluations.
    let base9 = odd_cycle_base(9)?;
    for (r, (row, bold)) in TABLE_C9.iter().enumerate() {
        let s = eig_herm(&base_matrix_herm(&base9, r)?)?;
        checks.push(Check::equality(
            format!("c9 base spectrum r={r} vs reference"),
            max_abs_diff(s.values(), row),
            0.0,
            tol,
        ));
        checks.push(Check::equality(
            format!("c9 r={r} distinguished entry equals theta_{r}"),
            s.values()[*bold],
            theta(9, r),
            1e-8,
        ));
        // Conjugate root carries the same spectrum.
        if r > 0 {
            let s2 = eig_herm(&base_matrix_herm(&base9, 9 - r)?)?;
            checks.push(Check::boolean(
                format!("c9 spectra at roots {r} and {} coincide", 9 - r),
                spectrum_equal(&s, &s2, 1e-9),
            ));
        }
    }

    // Gershgorin endpoint classes for n=9.
    for (r, row) in GERSH_C9.iter().enumerate() {
        let g = gershgorin_left(&bstar(9, r)?);
        let got = [g.l1, g.l2.unwrap_or(g.l1), g.l3];
        checks.push(Check::equality(
            format!("c9 gershgorin endpoints r={r}"),
            max_abs_diff(&got, row),
            0.0,
            1e-8,
        ));
    }

    // F_2(C_6) exact algebraic values from the genuine 4r+2 lift.
    let base6 = even_4r2_base(6)?;
    let sqrt5 = 5f64.sqrt();
    let sqrt17 = 17f64.sqrt();
    let mut row0 = vec![0.0, 2.0, 5.0 - sqrt5, 4.0, 5.0 + sqrt5];
    row0.sort_by(f64::total_cmp);
    let mut row1 = vec![1.0, (7.0 - sqrt17) / 2.0, 3.0, 5.0, (7.0 + sqrt17) / 2.0];
    row1.sort_by(f64::total_cmp);
    for r in 0..3 {
        let s = eig_herm(&base_matrix_herm(&base6, r)?)?;
        let expect = if r == 0 { &row0 } else { &row1 };
        checks.push(Check::equality(
            format!("c6 base spectrum r={r} vs closed forms"),
            max_abs_diff(s.values(), expect),
            0.0,
            1e-10,
        ));
    }

    // F_2(C_8) over-lift: per-root rows, the assembled 28-value spectrum, and
    // the multiplicity profile.
    let detail8 = f2_cycle_spectrum_detail(8)?;
    for r in 0..8 {
        let (row, bold) = &TABLE_C8[if r <= 4 { r } else { 8 - r }];
        let eigs = &detail8.per_r[r].eigs;
        checks.push(Check::equality(
            format!("c8 over-lift row r={r} vs reference"),
            max_abs_diff(eigs, row),
            0.0,
            tol,
        ));
        if r <= 4 {
            checks.push(Check::equality(
                format!("c8 r={r} distinguished entry equals theta_{r}"),
                eigs[*bold],
                theta(8, r),
                1e-8,
            ));
        }
    }
    checks.push(Check::equality(
        "c8 assembled spectrum vs 28 reference values",
        max_abs_diff(detail8.spectrum.values(), &SPEC_F2C8),
        0.0,
        tol,
    ));
    let profile: Vec<usize> = detail8
        .spectrum
        .clustered(1e-6)
        .iter()
        .map(|&(_, m)| m)
        .collect();
    checks.push(Check::boolean(
        "c8 multiplicity profile (1,2,2,1,2,3,2,2,3,2,2,1,2,2,1)",
        profile == MULT_F2C8,
    ));
    checks.push(Check::boolean(
        "c8 removed multiset is {4,4,4,4}",
        detail8.lambda_removed.len() == 4
            && detail8
                .lambda_removed
                .iter()
                .all(|&v| (v - 4.0).abs() <= 1e-6),
    ));

    // Both C_8 quotients: exact integer matrices, spectra, inclusion chain.
    let f2c8 = token_graph(&build_family("cycle:8")?, 2)?;
    let qp = quotient_laplacian(&f2c8, &f2_cycle_partition(8, PartitionShape::Path)?)?;
    let qu = quotient_laplacian(&f2c8, &f2_cycle_partition(8, PartitionShape::U)?)?;
    checks.push(Check::boolean(
        "c8 path quotient matrix exact",
        (0..4).all(|i| (0..4).all(|j| qp.get(i, j) == QUOTIENT_PATH_C8[i][j])),
    ));
    checks.push(Check::boolean(
        "c8 u quotient matrix exact",
        (0..7).all(|i| (0..7).all(|j| qu.get(i, j) == QUOTIENT_U_C8[i][j])),
    ));
    let sp = qp.spectrum()?;
    let su = qu.spectrum()?;
    checks.push(Check::equality(
        "c8 path quotient spectrum vs reference",
        max_abs_diff(sp.values(), &SPEC_QUOTIENT_PATH_C8),
        0.0,
        tol,
    ));
    checks.push(Check::equality(
        "c8 u quotient spectrum vs reference",
        max_abs_diff(su.values(), &SPEC_QUOTIENT_U_C8),
        0.0,
        tol,
    ));
    let sl = eig_sym(&laplacian(&f2c8).to_dense())?;
    checks.push(Check::boolean(
        "c8 inclusion chain path ⊆ u ⊆ full",
        spectrum_contains(&su, &sp, 1e-8) && spectrum_contains(&sl, &su, 1e-8),
    ));

    // Trace identity for n=8, powers 0..7.
    let trace = trace_identity_check(8, 7)?;
    for row in &trace.rows {
        checks.push(Check::equality(
            format!("c8 trace identity l={}", row.l),
            row.bstar_total,
            row.expected_total,
            1e-6 * row.expected_total.abs().max(1.0),
        ));
        checks.push(Check::equality(
            format!("c8 trace total l={} vs reference", row.l),
            row.bstar_total,
            TRACE_TOTALS_C8[row.l],
            1e-6 * TRACE_TOTALS_C8[row.l].max(1.0),
        ));
    }
    notes.extend(trace.notes.iter().cloned());
    Ok(())
}

fn invariants_suite(checks: &mut Vec<Check>, notes: &mut Vec<String>) -> Result<()> {
    // Assembled spectra equal the dense oracle for every n in 4..=24.
    for n in 4..=24 {
        let fast = crate::cyclift::f2_cycle_spectrum(n)?;
        let brute = dense_f2cn_spectrum(n)?;
        checks.push(Check::equality(
            format!("f2(c{n}) assembly vs dense oracle"),
            max_abs_diff(fast.values(), brute.values()),
            0.0,
            1e-8,
        ));
        checks.push(Check::equality(
            format!("alpha(f2(c{n})) = alpha(c{n})"),
            fast.fiedler().unwrap(),
            theta(n, 1),
            1e-8,
        ));
        // Path lower bound, tight at n=4.
        let bound = 4.0 * (1.0 - (std::f64::consts::PI / (n as f64 - 1.0)).cos());
        checks.push(Check::at_least(
            format!("alpha(f2(c{n})) >= 2 alpha(p{})", n - 1),
            fast.fiedler().unwrap(),
            bound,
            1e-8,
        ));
        if n == 4 {
            checks.push(Check::equality(
                "bound tight at n=4: alpha(f2(c4)) = 2",
                fast.fiedler().unwrap(),
                2.0,
                1e-8,
            ));
        }
        if n % 2 == 0 {
            // The over-lift union must carry at least nu fours pre-removal.
            let detail = f2_cycle_spectrum_detail(n)?;
            let fours = detail
                .per_r
                .iter()
                .flat_map(|p| p.eigs.iter())
                .filter(|&&v| (v - 4.0).abs() <= 1e-8)
                .count();
            checks.push(Check::boolean(
                format!("f2(c{n}) union holds >= {} fours", n / 2),
                fours >= n / 2,
            ));
            // Path-quotient max equals the spectral radius.
            checks.push(Check::equality(
                format!("f2(c{n}) spectral radius from path quotient"),
                *closed_form_quotient_eigs(n)?.last().unwrap(),
                brute.max().unwrap(),
                1e-8,
            ));
        }
    }

    // Closed forms match the path quotient eigenvalues for n = 4..40.
    for n in 4..=40 {
        let f2 = token_graph(&build_family(&format!("cycle:{n}"))?, 2)?;
        let q = quotient_laplacian(&f2, &f2_cycle_partition(n, PartitionShape::Path)?)?;
        let cf = closed_form_quotient_eigs(n)?;
        checks.push(Check::equality(
            format!("closed forms vs path quotient n={n}"),
            max_abs_diff(q.spectrum()?.values(), &cf),
            0.0,
            1e-9,
        ));
    }

    // Token graphs preserve algebraic connectivity on the named families.
    for spec in [
        "petersen",
        "odd:4",
        "hypercube:3",
        "complete:5",
        "complete_multipartite:2,2,3",
    ] {
        let g = build_family(spec)?;
        let a = algebraic_connectivity(&g)?;
        let a2 = algebraic_connectivity(&token_graph(&g, 2)?)?;
        checks.push(Check::equality(
            format!("alpha(f2({spec})) = alpha({spec})"),
            a2,
            a,
            1e-8,
        ));
    }

    // Connectivity relation reports (chain, equality, cycle bound, xi).
    for spec in ["cycle:9", "cycle:4", "odd:3"] {
        let g = build_family(spec)?;
        let report = crate::token::verify_connectivity_relations(
            &g,
            spec,
            2,
            crate::token::DEFAULT_CAP,
            1e-8,
        )?;
        for c in report.checks {
            checks.push(Check {
                name: format!("{spec}: {}", c.name),
                ..c
            });
        }
        notes.extend(report.warnings);
    }

    // Vertex-deletion reference rows.
    vertex_deletion_rows(checks)?;

    // Gershgorin lower bound for all odd n <= 25 and every r.
    let mut worst_margin = f64::INFINITY;
    let mut all_hold = true;
    for n in (5..=25).step_by(2) {
        for r in 1..n {
            let g = gershgorin_bound_check(n, r)?;
            all_hold &= g.holds;
            worst_margin = worst_margin.min(g.min_eig - g.bound);
        }
    }
    checks.push(Check::at_least(
        "gershgorin bound min spec B*(r) >= 4sin^2(r'pi/2n), odd n <= 25",
        worst_margin,
        0.0,
        1e-9,
    ));
    let _ = all_hold;

    // Exactly one cycle eigenvalue per root, odd n.
    let mut all_one = true;
    for n in (5..=15).step_by(2) {
        for r in 0..n {
            all_one &= exactly_one_cycle_eigenvalue(n, r)?;
        }
    }
    checks.push(Check::boolean(
        "each B*(r) has exactly one eigenvalue of C_n (odd n <= 15)",
        all_one,
    ));

    // Conjugate symmetry of the tridiagonal spectra.
    let mut conj_worst = 0.0f64;
    for n in [9usize, 12, 15] {
        for r in 1..n {
            let a = eig_tridiag_symmetrized(n, r)?;
            let b = eig_tridiag_symmetrized(n, n - r)?;
            conj_worst = conj_worst.max(max_abs_diff(&a, &b));
        }
    }
    checks.push(Check::equality(
        "spec B*(r) = spec B*(n-r)",
        conj_worst,
        0.0,
        1e-9,
    ));

    // B(1) is a quotient: zero row sums and spectrum inside the lift's.
    for (label, vg) in [
        ("odd base n=9", odd_cycle_base(9)?),
        ("4r+2 base n=10", even_4r2_base(10)?),
    ] {
        let b = laplacian_base_matrix(&vg);
        checks.push(Check::boolean(
            format!("B(1) rows sum to zero ({label})"),
            b.row_sums_at_one().iter().all(|&s| s == 0),
        ));
        let b1 = eig_herm(&base_matrix_herm(&vg, 0)?)?;
        let lifted = lift_spectrum(&vg)?;
        checks.push(Check::boolean(
            format!("spec B(1) inside lift spectrum ({label})"),
            spectrum_contains(&lifted, &b1, 1e-8),
        ));
    }

    // Eigenvector transport: L_2(Bv) = lambda Bv for eigenpairs of the base.
    let mut transport_worst = 0.0f64;
    let mut count = 0;
    'outer: for spec in ["cycle:9", "path:7", "petersen", "star:6", "hypercube:3"] {
        let g = build_family(spec)?;
        let (s, q) = eig_sym_full(&laplacian(&g).to_dense())?;
        let b = binomial_matrix(g.n(), 2)?;
        let l2 = laplacian(&token_graph(&g, 2)?).to_dense();
        for t in (0..g.n()).step_by(2) {
            let v = q.column(t);
            let bv = b.lift_eigvec(&v)?;
            let norm: f64 = bv.iter().map(|x| x * x).sum::<f64>().sqrt();
            let lbv = l2.matvec(&bv)?;
            let resid: f64 = lbv
                .iter()
                .zip(&bv)
                .map(|(a, x)| (a - s.values()[t] * x).powi(2))
                .sum::<f64>()
                .sqrt();
            transport_worst = transport_worst.max(resid / norm.max(1e-30));
            count += 1;
            if count >= 20 {
                break 'outer;
            }
        }
    }
    checks.push(Check::equality(
        "binomial transport residual over 20 eigenpairs",
        transport_worst,
        0.0,
        1e-7,
    ));

    // Eigenvector reconstruction residuals for n = 7, 9, 11.
    for n in [7usize, 9, 11] {
        let f2 = token_graph(&build_family(&format!("cycle:{n}"))?, 2)?;
        let l = laplacian(&f2).to_dense();
        let mut worst = 0.0f64;
        for r in 0..n {
            let (s, vecs) = odd_base_eigenpairs(n, r)?;
            for (t, f) in vecs.iter().enumerate() {
                let y = reconstruct_eigenvector(n, r, f)?;
                let lambda = s.values()[t];
                let (re, im) = y.real_parts();
                let mut num = 0.0f64;
                let mut den = 0.0f64;
                for part in [re, im] {
                    let lv = l.matvec(&part)?;
                    num += lv
                        .iter()
                        .zip(&part)
                        .map(|(a, x)| (a - lambda * x).powi(2))
                        .sum::<f64>();
                    den += part.iter().map(|x| x * x).sum::<f64>();
                }
                worst = worst.max(num.sqrt() / den.sqrt().max(1e-30));
            }
        }
        checks.push(Check::equality(
            format!("reconstruction residual n={n}"),
            worst,
            0.0,
            1e-7,
        ));
    }

    // Asymptotics: deviation shrinks along n, estimate converges.
    let mut prev = f64::INFINITY;
    let mut decreasing = true;
    for n in [11usize, 51, 201] {
        let a = asymptotic_eigs(n, 1)?;
        let s = eig_tridiag_sym(&bstar(n, 1)?)?;
        let dev = max_abs_diff(&a, s.values());
        decreasing &= dev < prev;
        prev = dev;
    }
    checks.push(Check::boolean(
        "asymptotic deviation decreases along n in {11,51,201}",
        decreasing,
    ));
    let est = alpha_estimates(201)?;
    checks.push(Check::equality(
        "alpha estimate relative error at n=201",
        (est.estimate - est.exact).abs() / est.exact,
        0.0,
        0.01,
    ));
    notes.push("acceptance runs the asymptotic sweep out to n=1001".to_string());
    Ok(())
}

fn eig_tridiag_symmetrized(n: usize, r: usize) -> Result<Vec<f64>> {
    let t = bstar(n, r)?;
    if t.is_symmetric() {
        return Ok(eig_tridiag_sym(&t)?.values().to_vec());
    }
    // Even-n rows: split the trailing 4 for odd r, symmetrize otherwise.
    if r % 2 == 1 {
        let mut v = eig_tridiag_sym(&t.leading_principal())?.values().to_vec();
        v.push(4.0);
        v.sort_by(f64::total_cmp);
        Ok(v)
    } else if r == n / 2 {
        Ok(t.diag.clone())
    } else {
        Ok(eig_tridiag_sym(&crate::linalg::symmetrize_tridiag(&t)?)?
            .values()
            .to_vec())
    }
}

/// Reference alpha / deleted-vertex alpha rows for the named families.
fn vertex_deletion_rows(checks: &mut Vec<Check>) -> Result<()> {
    // Path: alpha(P_9), then a leaf removed.
    let p9 = build_family("path:9")?;
    let pi = std::f64::consts::PI;
    checks.push(Check::equality(
        "alpha(p9) = 2(1-cos(pi/9))",
        algebraic_connectivity(&p9)?,
        2.0 * (1.0 - (pi / 9.0).cos()),
        1e-9,
    ));
    checks.push(Check::equality(
        "alpha(p9 minus leaf) = 2(1-cos(pi/8))",
        algebraic_connectivity(&delete_vertex(&p9, 8)?)?,
        2.0 * (1.0 - (pi / 8.0).cos()),
        1e-9,
    ));
    // Star: 1 before and after removing a leaf.
    let s6 = build_family("star:6")?;
    checks.push(Check::equality(
        "alpha(s6) = 1",
        algebraic_connectivity(&s6)?,
        1.0,
        1e-9,
    ));
    checks.push(Check::equality(
        "alpha(s6 minus leaf) = 1",
        algebraic_connectivity(&delete_vertex(&s6, 5)?)?,
        1.0,
        1e-9,
    ));
    // Complete bipartite K_{2,4}: n1 both sides of the deletion.
    let k24 = build_family("complete_multipartite:2,4")?;
    checks.push(Check::equality(
        "alpha(k24) = 2",
        algebraic_connectivity(&k24)?,
        2.0,
        1e-9,
    ));
    checks.push(Check::equality(
        "alpha(k24 minus vertex of larger side) = 2",
        algebraic_connectivity(&delete_vertex(&k24, 5)?)?,
        2.0,
        1e-9,
    ));
    // K_6: n and n-1.
    let k6 = build_family("complete:6")?;
    checks.push(Check::equality(
        "alpha(k6) = 6",
        algebraic_connectivity(&k6)?,
        6.0,
        1e-9,
    ));
    checks.push(Check::equality(
        "alpha(k6 minus vertex) = 5",
        algebraic_connectivity(&delete_vertex(&k6, 0)?)?,
        5.0,
        1e-9,
    ));
    // Petersen: alpha = 2; the deleted value is exactly 3 - sqrt(3), whose
    // two-decimal truncation is the reference 1.26 (rounding would print
    // 1.27, so the comparison checks truncation consistency plus the closed
    // form).
    let pet = build_family("petersen")?;
    checks.push(Check::equality(
        "alpha(petersen) = 2",
        algebraic_connectivity(&pet)?,
        2.0,
        1e-9,
    ));
    let apd = algebraic_connectivity(&delete_vertex(&pet, 0)?)?;
    checks.push(Check::equality(
        "alpha(petersen minus vertex) = 3 - sqrt(3)",
        apd,
        3.0 - 3f64.sqrt(),
        1e-8,
    ));
    checks.push(Check::boolean(
        "alpha(petersen minus vertex) truncates to 1.26",
        (apd * 100.0).floor() as i64 == 126,
    ));
    // Hexahedron = Q_3: alpha = 2, deleted value 2(1-cos(2pi/5)) ~ 1.38.
    let q3 = build_family("hypercube:3")?;
    checks.push(Check::equality(
        "alpha(q3) = 2",
        algebraic_connectivity(&q3)?,
        2.0,
        1e-9,
    ));
    let aq3d = algebraic_connectivity(&delete_vertex(&q3, 0)?)?;
    checks.push(Check::equality(
        "alpha(q3 minus vertex) = 2(1-cos(2pi/5))",
        aq3d,
        2.0 * (1.0 - (2.0 * pi / 5.0).cos()),
        1e-8,
    ));
    checks.push(Check::equality(
        "alpha(q3 minus vertex) near printed 1.38",
        aq3d,
        1.38,
        5e-3,
    ));
    // Hypercube Q_4: alpha = 2, deletion keeps alpha >= 1.
    let q4 = build_family("hypercube:4")?;
    checks.push(Check::equality(
        "alpha(q4) = 2",
        algebraic_connectivity(&q4)?,
        2.0,
        1e-9,
    ));
    checks.push(Check::at_least(
        "alpha(q4 minus vertex) >= 1",
        algebraic_connectivity(&delete_vertex(&q4, 0)?)?,
        1.0,
        1e-9,
    ));
    Ok(())
}

/// Run a verification suite; `tol_tables` governs comparisons against
/// reference values printed to four decimals (default 5e-4).
pub fn run_suite(kind: SuiteKind, tol_tables: f64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let suite = match kind {
        SuiteKind::Tables => {
            tables_suite(tol_tables, &mut checks, &mut notes)?;
            "paper-tables"
        }
        SuiteKind::Invariants => {
            invariants_suite(&mut checks, &mut notes)?;
            "invariants"
        }
        SuiteKind::All => {
            tables_suite(tol_tables, &mut checks, &mut notes)?;
            invariants_suite(&mut checks, &mut notes)?;
            "all"
        }
    };
    let passed = checks.iter().filter(|c| c.pass).count();
    let failed = checks.len() - passed;
    Ok(SuiteReport {
        suite: suite.to_string(),
        checks,
        notes,
        passed,
        failed,
    })
}
