//! Named verification suites over parameter grids.
//!
//! Each suite turns a family of statements into one
//! [`VerificationReport`] per parameter point. Points are independent and
//! dispatched to a rayon worker pool (`RAYON_NUM_THREADS` controls the
//! size); the report list is sorted afterwards, so output is deterministic
//! for a fixed configuration and seed.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::blowup::{comparison_profile, verify_blowup_invariance, BlowupSetup};
use crate::cech::{blowup_line_pushforward, cohomology_dims};
use crate::cube::verify_cube_sequence;
use crate::dvr::{cartesian_check, kummer_form_cartesian, mo_valuation_images, DvrModel};
use crate::forms::{exterior_power_iso, FormKind, FormModule};
use crate::kunneth::kunneth_check;
use crate::laurent::{exponent_window, Exponents, LaurentPoly, Rational};
use crate::modulus::{mo_ring, ModulusPair};
use crate::report::VerificationReport;
use crate::ses::divisor_reduction;

/// The available suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Basis,
    Membership,
    SesCheck,
    CubeCheck,
    ProjCoh,
    BlowupCheck,
    DvrCheck,
    KunnethCheck,
    All,
}

impl Suite {
    pub fn from_name(name: &str) -> Option<Suite> {
        Some(match name {
            "basis" => Suite::Basis,
            "membership" => Suite::Membership,
            "ses-check" => Suite::SesCheck,
            "cube-check" => Suite::CubeCheck,
            "proj-coh" => Suite::ProjCoh,
            "blowup-check" => Suite::BlowupCheck,
            "dvr-check" => Suite::DvrCheck,
            "kunneth-check" => Suite::KunnethCheck,
            "all" => Suite::All,
            _ => return None,
        })
    }
}

/// Parameter grid with optional pinning of single points.
#[derive(Clone, Debug)]
pub struct Grid {
    pub max_vars: usize,
    pub max_modulus: i64,
    pub max_degree: usize,
    pub window: i64,
    pub max_twist: i64,
    pub pinned_n: Option<usize>,
    pub pinned_r: Option<Vec<i64>>,
    pub pinned_q: Option<usize>,
    pub pinned_twist: Option<i64>,
    pub pinned_ramification: Option<i64>,
}

impl Grid {
    /// The default quick grid.
    pub fn quick() -> Self {
        Grid {
            max_vars: 3,
            max_modulus: 3,
            max_degree: 3,
            window: 4,
            max_twist: 6,
            pinned_n: None,
            pinned_r: None,
            pinned_q: None,
            pinned_twist: None,
            pinned_ramification: None,
        }
    }

    /// The larger grid behind `--full`.
    pub fn full() -> Self {
        Grid {
            max_vars: 4,
            max_modulus: 4,
            max_degree: 4,
            window: 5,
            max_twist: 6,
            ..Grid::quick()
        }
    }

    fn vars_range(&self, cap: usize) -> Vec<usize> {
        match self.pinned_n {
            Some(n) => vec![n],
            None => (1..=self.max_vars.min(cap)).collect(),
        }
    }

    fn degree_range(&self, cap: usize) -> Vec<usize> {
        match self.pinned_q {
            Some(q) => vec![q],
            None => (0..=self.max_degree.min(cap)).collect(),
        }
    }

    /// All modulus vectors of length `n` with entries up to the grid bound,
    /// or the pinned one.
    fn modulus_patterns(&self, n: usize) -> Vec<Vec<i64>> {
        if let Some(r) = &self.pinned_r {
            return vec![r.clone()];
        }
        exponent_window(n, 0, self.max_modulus)
            .into_iter()
            .map(|e| e.entries().to_vec())
            .collect()
    }

    /// Sorted-descending modulus patterns: one representative per
    /// coordinate-permutation orbit, for the heavier suites.
    fn modulus_orbits(&self, n: usize) -> Vec<Vec<i64>> {
        self.modulus_patterns(n)
            .into_iter()
            .filter(|r| r.windows(2).all(|w| w[0] >= w[1]))
            .collect()
    }

    fn twist_range(&self, bound: i64) -> Vec<i64> {
        match self.pinned_twist {
            Some(d) => vec![d],
            None => (-bound..=bound).collect(),
        }
    }

    fn ramification_range(&self, bound: i64) -> Vec<i64> {
        match self.pinned_ramification {
            Some(e) => vec![e],
            None => (1..=bound).collect(),
        }
    }
}

/// A full suite configuration.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub grid: Grid,
    pub seed: u64,
}

/// Run the configured suite; reports come back sorted by statement and
/// parameter point.
pub fn run(config: &SuiteConfig) -> Vec<VerificationReport> {
    let mut reports = match config.suite {
        Suite::Basis => basis_suite(&config.grid),
        Suite::Membership => membership_suite(&config.grid, config.seed),
        Suite::SesCheck => ses_suite(&config.grid),
        Suite::CubeCheck => cube_suite(&config.grid),
        Suite::ProjCoh => proj_suite(&config.grid),
        Suite::BlowupCheck => blowup_suite(&config.grid),
        Suite::DvrCheck => dvr_suite(&config.grid),
        Suite::KunnethCheck => kunneth_suite(&config.grid),
        Suite::All => {
            let mut all = Vec::new();
            for suite in [
                Suite::Basis,
                Suite::Membership,
                Suite::SesCheck,
                Suite::CubeCheck,
                Suite::ProjCoh,
                Suite::BlowupCheck,
                Suite::DvrCheck,
                Suite::KunnethCheck,
            ] {
                all.extend(run(&SuiteConfig {
                    suite,
                    grid: config.grid.clone(),
                    seed: config.seed,
                }));
            }
            all
        }
    };
    reports.sort_by(|a, b| {
        (a.statement.as_str(), serde_json::to_string(&a.parameters).unwrap()).cmp(&(
            b.statement.as_str(),
            serde_json::to_string(&b.parameters).unwrap(),
        ))
    });
    reports
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for j in 0..k {
        out = out * (n - j) / (j + 1);
    }
    out
}

// ---- membership -----------------------------------------------------

/// Reference membership straight from the definition of the modulus ring:
/// `x^k = a / x^r` needs `a = x^{k+r}` to be a polynomial in the radical
/// of `(x^r)`, the radical checked by scanning powers. Independent of the
/// closed-form generator used by the implementation.
fn mo_member_reference(k: &Exponents, r: &Exponents) -> bool {
    let a = k.add(r);
    if !a.is_nonneg() {
        return false;
    }
    (1..=32).any(|m| a.scaled(m).ge(r))
}

fn mo_ring_report(r: &[i64], window: i64) -> VerificationReport {
    let n = r.len();
    let mut report = VerificationReport::new("mo-ring-formula")
        .param("n", n)
        .param("r", r)
        .window(window);
    let pair = ModulusPair::from_slice(r).expect("grid moduli are nonnegative");
    let ring = mo_ring(&pair);
    let expected = pair.support_indicator().sub(pair.modulus());
    report.check(ring.generator_exponent() == &expected, || {
        format!(
            "generator {:?} differs from support-minus-modulus {:?}",
            ring.generator_exponent(),
            expected.entries()
        )
    });
    for k in exponent_window(n, -window, window) {
        let closed = ring.contains_monomial(&k);
        let reference = mo_member_reference(&k, pair.modulus());
        report.check(closed == reference, || {
            format!(
                "membership of x^{:?} differs: formula {closed}, definition {reference}",
                k.entries()
            )
        });
    }
    report
}

fn filtration_report(grid: &Grid, seed: u64) -> VerificationReport {
    let samples = 20usize;
    let mut report = VerificationReport::new("filtration-exhaustion")
        .param("samples", samples)
        .param("seed", seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut produced = 0usize;
    while produced < samples {
        let n = rng.random_range(1..=grid.max_vars);
        let r: Vec<i64> = (0..n).map(|_| rng.random_range(0..=grid.max_modulus)).collect();
        let pair = ModulusPair::from_slice(&r).expect("nonnegative");
        if pair.support().is_empty() {
            continue;
        }
        // A random form of some degree whose coefficients have poles only
        // on the support.
        let q = rng.random_range(0..=n);
        let wedges = crate::forms::Wedge::all(n, q);
        let mut w = crate::forms::LogForm::zero(&pair, q);
        for _ in 0..rng.random_range(1..=3) {
            let e: Vec<i64> = (0..n)
                .map(|j| {
                    if pair.in_support(j) {
                        rng.random_range(-8..=4)
                    } else {
                        rng.random_range(0..=4)
                    }
                })
                .collect();
            let wedge = wedges[rng.random_range(0..wedges.len())];
            w.add_term(
                wedge,
                LaurentPoly::monomial(
                    n,
                    Exponents::new(e),
                    Rational::from_integer(rng.random_range(1..=9).into()),
                ),
            );
        }
        if w.is_zero() {
            continue;
        }
        produced += 1;
        let Some(m) = crate::forms::form_exhaustion_level(&w) else {
            report.fail(format!("no exhaustion level found for {w} over r={r:?}"));
            continue;
        };
        let member_at = |mult: i64| {
            let scaled = pair.scaled(mult);
            let module = FormModule::new(FormKind::MOmega, &scaled, q);
            let rescaled = w
                .convert_to(&scaled)
                .expect("same support for positive multiples");
            module.member(&rescaled).unwrap_or(false)
        };
        report.check(member_at(m), || {
            format!("{w} not a member at multiple {m} of r={r:?}")
        });
        if m > 1 {
            report.check(!member_at(m - 1), || {
                format!("{w} already a member at multiple {} of r={r:?}", m - 1)
            });
        }
    }
    report
}

fn membership_suite(grid: &Grid, seed: u64) -> Vec<VerificationReport> {
    let mut points: Vec<Vec<i64>> = Vec::new();
    for n in grid.vars_range(usize::MAX) {
        points.extend(grid.modulus_patterns(n));
    }
    let mut reports: Vec<VerificationReport> = points
        .par_iter()
        .map(|r| mo_ring_report(r, grid.window.max(6)))
        .collect();
    reports.push(filtration_report(grid, seed));
    reports
}

// ---- bases ----------------------------------------------------------

fn free_bases_report(r: &[i64], q: usize) -> VerificationReport {
    let n = r.len();
    let mut report = VerificationReport::new("free-bases")
        .param("n", n)
        .param("r", r)
        .param("q", q);
    let pair = ModulusPair::from_slice(r).expect("nonnegative");
    let p_basis = FormModule::new(FormKind::POmega, &pair, q).basis();
    let m_basis = FormModule::new(FormKind::MOmega, &pair, q).basis();
    let expected = binomial(n, q);
    report.check(p_basis.len() == expected && m_basis.len() == expected, || {
        format!(
            "ranks {} and {} differ from C({n},{q}) = {expected}",
            p_basis.len(),
            m_basis.len()
        )
    });
    let p_module = FormModule::new(FormKind::POmega, &pair, q);
    let m_module = FormModule::new(FormKind::MOmega, &pair, q);
    for w in &p_basis {
        report.check(p_module.member(w).unwrap_or(false), || {
            format!("log generator {w} fails its own membership")
        });
    }
    for w in &m_basis {
        report.check(m_module.member(w).unwrap_or(false), || {
            format!("twisted generator {w} fails its own membership")
        });
    }
    report
}

fn basis_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut points: Vec<(Vec<i64>, usize)> = Vec::new();
    for n in grid.vars_range(usize::MAX) {
        for r in grid.modulus_patterns(n) {
            for q in grid.degree_range(n) {
                points.push((r.clone(), q));
            }
        }
    }
    points
        .par_iter()
        .flat_map(|(r, q)| {
            let pair = ModulusPair::from_slice(r).expect("nonnegative");
            vec![
                free_bases_report(r, *q),
                exterior_power_iso(&pair, *q),
            ]
        })
        .collect()
}

// ---- exact sequences ------------------------------------------------

fn ses_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut points: Vec<(Vec<i64>, usize, usize)> = Vec::new();
    for n in grid.vars_range(usize::MAX) {
        for r in grid.modulus_orbits(n) {
            for j0 in 0..n {
                if r[j0] == 0 {
                    continue;
                }
                // One representative index per multiplicity value.
                if r[..j0].contains(&r[j0]) {
                    continue;
                }
                for q in grid.degree_range(2.min(n)) {
                    points.push((r.clone(), j0, q));
                }
            }
        }
    }
    points
        .par_iter()
        .map(|(r, j0, q)| {
            let pair = ModulusPair::from_slice(r).expect("nonnegative");
            divisor_reduction(&pair, *j0, *q, grid.window)
                .expect("grid points satisfy the preconditions")
        })
        .collect()
}

// ---- cube invariance -------------------------------------------------

fn cube_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut points: Vec<(Vec<i64>, usize, FormKind)> = Vec::new();
    for n in grid.vars_range(2) {
        for r in grid.modulus_orbits(n) {
            for q in grid.degree_range(n + 1) {
                points.push((r.clone(), q, FormKind::POmega));
                points.push((r.clone(), q, FormKind::MOmega));
            }
        }
    }
    points
        .par_iter()
        .map(|(r, q, kind)| {
            let pair = ModulusPair::from_slice(r).expect("nonnegative");
            verify_cube_sequence(&pair, *q, grid.window, *kind)
        })
        .collect()
}

// ---- projective space -----------------------------------------------

/// Binomial polynomial `C(n+d, n)` extended to negative `d`.
fn binomial_poly(n: usize, d: i64) -> i64 {
    let mut num = 1i64;
    let mut fact = 1i64;
    for k in 1..=n as i64 {
        num *= d + k;
        fact *= k;
    }
    num / fact
}

fn pn_cohomology_report(n: usize, d: i64) -> VerificationReport {
    let mut report = VerificationReport::new("Pn-cohomology")
        .param("n", n)
        .param("d", d);
    let table = cohomology_dims(n, d);
    let h0 = if d >= 0 { binomial_poly(n, d) as usize } else { 0 };
    let dual = -d - (n as i64) - 1;
    let hn = if dual >= 0 {
        binomial_poly(n, dual) as usize
    } else {
        0
    };
    report.check(table.get(0) == h0, || {
        format!("h^0 = {} differs from closed form {h0}", table.get(0))
    });
    report.check(table.get(n) == hn, || {
        format!("h^{n} = {} differs from closed form {hn}", table.get(n))
    });
    for p in 1..n {
        report.check(table.get(p) == 0, || {
            format!("middle cohomology h^{p} = {} is nonzero", table.get(p))
        });
    }
    report.check(table.euler_characteristic() == binomial_poly(n, d), || {
        format!(
            "Euler characteristic {} differs from the binomial polynomial {}",
            table.euler_characteristic(),
            binomial_poly(n, d)
        )
    });
    let dual = cohomology_dims(n, -d - (n as i64) - 1);
    report.check(table.get(n) == dual.get(0), || {
        "duality between top and bottom cohomology fails".to_string()
    });
    report
}

fn pushforward_report(n: usize, i: i64, window: i64) -> VerificationReport {
    let mut report = VerificationReport::new("blowup-line-pushforward")
        .param("n", n)
        .param("i", i)
        .window(window);
    let table = blowup_line_pushforward(n, i, window);
    let bound = -(n as i64) - 1;
    if i > bound {
        report.check(table.higher.is_zero(), || {
            format!("higher direct images {} above the bound", table.higher)
        });
    } else if i == bound {
        // Sharpness: exactly the class of 1/(x0...xn).
        report.check(table.higher.get(n) == 1, || {
            format!("boundary twist has table {}", table.higher)
        });
    } else {
        report.check(!table.higher.is_zero(), || {
            "twists below the bound must have higher direct images".to_string()
        });
    }
    report.check(table.ideal_power_ok, || {
        "pushforward differs from the monomial ideal power".to_string()
    });
    report
}

fn proj_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut reports: Vec<VerificationReport> = grid
        .vars_range(3)
        .into_par_iter()
        .flat_map(|n| {
            grid.twist_range(grid.max_twist)
                .into_par_iter()
                .map(move |d| pn_cohomology_report(n, d))
        })
        .collect();
    let pushforward: Vec<VerificationReport> = grid
        .vars_range(2)
        .into_par_iter()
        .flat_map(|n| {
            grid.twist_range(4)
                .into_par_iter()
                .map(move |i| pushforward_report(n, i, 6))
        })
        .collect();
    reports.extend(pushforward);
    reports
}

// ---- blow-ups ---------------------------------------------------------

fn blowup_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut points: Vec<(usize, Vec<usize>, Vec<i64>, usize)> = Vec::new();
    for vars in grid.vars_range(3) {
        if vars < 2 {
            continue;
        }
        // All centres cut out by at least two coordinates.
        for mask in 0u64..(1 << vars) {
            let center: Vec<usize> = (0..vars).filter(|&k| mask & (1 << k) != 0).collect();
            if center.len() < 2 {
                continue;
            }
            for r in grid.modulus_patterns(vars) {
                if r.iter().any(|&v| v > 2) {
                    continue;
                }
                let setup = match BlowupSetup::new(vars, &center, &r) {
                    Ok(s) => s,
                    Err(_) => continue,
                };
                if !setup.center_in_divisor() {
                    continue;
                }
                for q in grid.degree_range(2) {
                    points.push((vars, center.clone(), r.clone(), q));
                }
            }
        }
    }
    points
        .par_iter()
        .map(|(vars, center, r, q)| {
            let setup = BlowupSetup::new(*vars, center, r).expect("validated");
            match verify_blowup_invariance(&setup, *q, grid.window) {
                Ok(mut report) => {
                    // Twist profile sanity rides along with the main check.
                    if comparison_profile(&setup, *q).is_err() {
                        report.fail("twist profile unavailable".to_string());
                    }
                    report
                }
                Err(e) => {
                    let mut report = VerificationReport::new("blowup-invariance")
                        .param("vars", *vars)
                        .param("center", center)
                        .param("r", r)
                        .param("q", *q);
                    report.fail(format!("internal error: {e}"));
                    report
                }
            }
        })
        .collect()
}

// ---- dvr ---------------------------------------------------------------

fn dvr_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    for e in grid.ramification_range(5) {
        for n in 1..=4i64 {
            let m = DvrModel::new(e, n, 0, 1).expect("positive parameters");
            reports.push(cartesian_check(&m, 3 * e * n));
            // Image endpoints double-checked against the formulas.
            let (base, cover) = mo_valuation_images(&m);
            let mut extra = VerificationReport::new("dvr-valuation-images")
                .param("e", e)
                .param("n", n);
            extra.check(
                base.start == e - e * n && base.step == e,
                || format!("base image starts at {} step {}", base.start, base.step),
            );
            extra.check(
                cover.start == 1 - e * n && cover.step == 1,
                || format!("cover image starts at {} step {}", cover.start, cover.step),
            );
            reports.push(extra);
        }
    }
    let mut kummer_points = Vec::new();
    for e in grid.ramification_range(3) {
        for n in 1..=2i64 {
            for q in grid.degree_range(1) {
                kummer_points.push((e, n, q));
            }
        }
    }
    let kummer: Vec<VerificationReport> = kummer_points
        .par_iter()
        .map(|(e, n, q)| {
            let m = DvrModel::new(*e, *n, *q, 2).expect("positive parameters");
            kummer_form_cartesian(&m, 3 * e * n).expect("positive ramification")
        })
        .collect();
    reports.extend(kummer);
    reports
}

// ---- kunneth ------------------------------------------------------------

fn kunneth_suite(grid: &Grid) -> Vec<VerificationReport> {
    let mut points = Vec::new();
    for m in grid.vars_range(3) {
        for n in grid.vars_range(3) {
            for ra in grid.modulus_orbits(m) {
                for rb in grid.modulus_orbits(n) {
                    points.push((ra.clone(), rb.clone()));
                }
            }
        }
    }
    points
        .par_iter()
        .map(|(ra, rb)| {
            let a = ModulusPair::from_slice(ra).expect("nonnegative");
            let b = ModulusPair::from_slice(rb).expect("nonnegative");
            kunneth_check(&a, &b, grid.max_degree)
        })
        .collect()
}
