//! The standard blow-up of affine space along a coordinate subspace, with
//! a monomial modulus: chart data, the comparison of twisted form modules,
//! and the pushforward-vanishing certificate.
//!
//! The ambient space has coordinates `x_0..x_n`; the blow-up centre is cut
//! out by the variables in `N` and the modulus is `x^r` with support `M`.
//! Everything here is chart-global: each chart `U_j` (`j` in `N`) has
//! coordinates `x_tau (tau not in N)`, `x_nu / x_j (nu in N, nu != j)` and
//! `x_j`, and all sections are represented as Laurent forms in the ambient
//! coordinates. The whole situation is torus-equivariant, so section
//! spaces split into finite-dimensional graded pieces indexed by an
//! ambient multidegree, and the direct-image computation is an exact rank
//! computation per degree.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::cech::cohomology_dims;
use crate::error::{Error, Result};
use crate::forms::{FormKind, FormModule, LogForm, Wedge};
use crate::laurent::{exponent_window, Exponents, LaurentPoly, Rational};
use crate::linalg::{rank, solve_in_span};
use crate::modulus::{mo_ring, ModulusPair};
use crate::report::VerificationReport;

/// Blow-up of `A^{vars}` along the coordinate subspace `{x_nu = 0 : nu in
/// center}`, with monomial modulus `x^r` pulled back to the total space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSetup {
    vars: usize,
    center: Vec<usize>,
    modulus: Exponents,
}

impl BlowupSetup {
    pub fn new(vars: usize, center: &[usize], modulus: &[i64]) -> Result<Self> {
        if center.len() < 2 {
            return Err(Error::Domain(
                "blow-up centre must be cut out by at least two variables".into(),
            ));
        }
        let mut c = center.to_vec();
        c.sort_unstable();
        c.dedup();
        if c.len() != center.len() {
            return Err(Error::Domain("repeated centre index".into()));
        }
        if c.iter().any(|&j| j >= vars) {
            return Err(Error::Domain("centre index out of range".into()));
        }
        if modulus.len() != vars {
            return Err(Error::VarMismatch {
                left: vars,
                right: modulus.len(),
            });
        }
        let pair = ModulusPair::from_slice(modulus)?;
        Ok(BlowupSetup {
            vars,
            center: c,
            modulus: pair.modulus().clone(),
        })
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Indices cutting out the centre.
    pub fn center(&self) -> &[usize] {
        &self.center
    }

    pub fn in_center(&self, k: usize) -> bool {
        self.center.binary_search(&k).is_ok()
    }

    /// The base modulus pair on the ambient affine space.
    pub fn ambient_pair(&self) -> ModulusPair {
        ModulusPair::new(self.vars, self.modulus.clone()).expect("validated on construction")
    }

    fn in_support(&self, k: usize) -> bool {
        self.modulus.get(k) > 0
    }

    /// Number of divisor components containing the centre.
    pub fn divisorial_center_count(&self) -> usize {
        self.center.iter().filter(|&&k| self.in_support(k)).count()
    }

    /// Centre indices off the divisor support.
    pub fn free_center_indices(&self) -> Vec<usize> {
        self.center
            .iter()
            .copied()
            .filter(|&k| !self.in_support(k))
            .collect()
    }

    /// The centre lies in the divisor iff some component contains it.
    pub fn center_in_divisor(&self) -> bool {
        self.divisorial_center_count() > 0
    }

    fn require_center_in_divisor(&self) -> Result<()> {
        if !self.center_in_divisor() {
            return Err(Error::Domain(
                "blow-up centre is not contained in the divisor".into(),
            ));
        }
        Ok(())
    }

    /// The modulus pair of the chart `U_j`: coordinates keep their slots
    /// (slot `nu` holds `x_nu / x_j` for centre indices `nu != j`), the
    /// chart exponent at `j` is the sum over divisorial centre directions.
    pub fn chart_pair(&self, j: usize) -> Result<ModulusPair> {
        self.require_chart(j)?;
        let rho: i64 = self
            .center
            .iter()
            .map(|&nu| self.modulus.get(nu))
            .sum();
        let r: Vec<i64> = (0..self.vars)
            .map(|k| if k == j { rho } else { self.modulus.get(k) })
            .collect();
        ModulusPair::from_slice(&r)
    }

    fn require_chart(&self, j: usize) -> Result<()> {
        if !self.in_center(j) {
            return Err(Error::Domain(format!(
                "x{} does not define a chart of this blow-up",
                j + 1
            )));
        }
        Ok(())
    }

    /// Exponent map sending chart monomials to ambient ones: the slot `nu`
    /// of a chart exponent means `x_nu / x_j` for centre indices other
    /// than `j`.
    fn chart_exponent_to_ambient(&self, j: usize, e: &Exponents) -> Exponents {
        let mut out = vec![0i64; self.vars];
        for k in 0..self.vars {
            let v = e.get(k);
            if v == 0 {
                continue;
            }
            out[k] += v;
            if self.in_center(k) && k != j {
                out[j] -= v;
            }
        }
        Exponents::new(out)
    }

    /// The ambient expression of the chart's modulus-ring generator.
    pub fn chart_mo_generator_ambient(&self, j: usize) -> Result<Exponents> {
        let chart = self.chart_pair(j)?;
        let gen = mo_ring(&chart).generator_exponent().clone();
        Ok(self.chart_exponent_to_ambient(j, &gen))
    }

    /// The simplified ambient basis of the chart's degree-one log module:
    /// `dlog x_mu` on the divisor support, `d x_tau` off the support and
    /// off the centre, and `(1/x_j) d x_nu` off the support but on the
    /// centre. Requires the centre to lie in the divisor (otherwise
    /// `dlog x_j` is not a section and the list is not a basis).
    pub fn chart_basis(&self, j: usize) -> Result<Vec<LogForm>> {
        self.require_chart(j)?;
        self.require_center_in_divisor()?;
        let pair = self.ambient_pair();
        let n = self.vars;
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let coeff = if !self.in_support(k) && self.in_center(k) {
                LaurentPoly::monomial(n, Exponents::delta(n, j).neg(), Rational::one())
            } else {
                LaurentPoly::one(n)
            };
            out.push(LogForm::term(&pair, Wedge::from_indices(&[k]), coeff));
        }
        Ok(out)
    }

    /// Pull an ambient form back to the chart `U_j`, rewriting covectors
    /// into the chart's own log basis.
    pub fn pullback_to_chart(&self, j: usize, w: &LogForm) -> Result<LogForm> {
        self.require_chart(j)?;
        let chart = self.chart_pair(j)?;
        let n = self.vars;
        // Monomial images of the ambient coordinates on the chart.
        let coord_images: Vec<Exponents> = (0..n)
            .map(|k| {
                if self.in_center(k) && k != j {
                    // x_nu = (x_nu / x_j) * x_j.
                    Exponents::delta(n, k).add(&Exponents::delta(n, j))
                } else {
                    Exponents::delta(n, k)
                }
            })
            .collect();
        // Degree-one images of the ambient covectors.
        let mut covector_images = Vec::with_capacity(n);
        for k in 0..n {
            let mut img = LogForm::zero(&chart, 1);
            let ek = Wedge::from_indices(&[k]);
            let ej = Wedge::from_indices(&[j]);
            match (self.in_support(k), self.in_center(k) && k != j, k == j) {
                // dlog x_k with x_k a chart coordinate.
                (true, false, _) => img.add_term(ek, LaurentPoly::one(n)),
                // dlog x_nu = dlog(x_nu/x_j) + dlog x_j.
                (true, true, _) => {
                    img.add_term(ek, LaurentPoly::one(n));
                    img.add_term(ej, LaurentPoly::one(n));
                }
                // d x_tau along the centre directions.
                (false, false, false) => img.add_term(ek, LaurentPoly::one(n)),
                // d x_j = x_j dlog x_j (the chart has j in its support).
                (false, false, true) => {
                    img.add_term(ej, LaurentPoly::var(n, j));
                }
                // d x_nu = x_j d(x_nu/x_j) + (x_nu/x_j) x_j dlog x_j.
                (false, true, _) => {
                    img.add_term(ek, LaurentPoly::var(n, j));
                    img.add_term(
                        ej,
                        LaurentPoly::monomial(
                            n,
                            Exponents::delta(n, k).add(&Exponents::delta(n, j)),
                            Rational::one(),
                        ),
                    );
                }
            }
            covector_images.push(img);
        }
        let mut out = LogForm::zero(&chart, w.degree());
        for (t, c) in w.terms() {
            let pulled = c.subst_monomials(n, &coord_images);
            let mut piece = LogForm::scalar(&chart, pulled);
            for k in t.indices() {
                piece = piece.wedge(&covector_images[k])?;
            }
            out = out.add(&piece)?;
        }
        Ok(out)
    }
}

/// Twist bookkeeping for the comparison of pulled-back and chart form
/// modules in one exterior degree.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CokernelTwistProfile {
    /// Number of divisor components containing the centre.
    pub i: usize,
    /// Multiplicity of each twist `k` (the number of `(1/x_j) dx_nu`
    /// factors) among the exterior-power basis elements.
    pub twists: BTreeMap<usize, usize>,
    /// Exceptional-divisor twists of the filtration pieces for each
    /// `k > 0`.
    pub filtration: BTreeMap<usize, Vec<i64>>,
}

impl CokernelTwistProfile {
    /// Largest twist magnitude over all pieces, if any.
    pub fn max_magnitude(&self) -> Option<i64> {
        self.filtration
            .values()
            .flat_map(|v| v.iter().map(|m| -m))
            .max()
    }
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

/// Count the exterior-power summands by their exceptional twist and list
/// the filtration twists of each cokernel piece.
pub fn comparison_profile(setup: &BlowupSetup, q: usize) -> Result<CokernelTwistProfile> {
    setup.require_center_in_divisor()?;
    let i = setup.divisorial_center_count();
    let free = setup.free_center_indices().len();
    let rest = setup.vars() - free;
    let mut twists = BTreeMap::new();
    let mut filtration = BTreeMap::new();
    for k in 0..=free.min(q) {
        let mult = binomial(free, k) * binomial(rest, q - k);
        if mult == 0 {
            continue;
        }
        twists.insert(k, mult);
        if k > 0 {
            let pieces: Vec<i64> = (0..i as i64).map(|j| j + 1 - i as i64 - k as i64).collect();
            let n_center = setup.center().len() as i64;
            for &m in &pieces {
                // i + k <= |N| whenever the twist is realized, so every
                // piece sits strictly inside the vanishing range.
                assert!(-n_center < m && m < 0, "twist {m} escapes (-{n_center}, 0)");
            }
            filtration.insert(k, pieces);
        }
    }
    Ok(CokernelTwistProfile {
        i,
        twists,
        filtration,
    })
}

/// The ambient multidegree of a form term: exponent plus one unit for each
/// plain `d` covector, so that every section space in sight is graded.
fn term_multidegree(support: &[bool], e: &Exponents, t: Wedge) -> Exponents {
    let mut out = e.entries().to_vec();
    for k in t.indices() {
        if !support[k] {
            out[k] += 1;
        }
    }
    Exponents::new(out)
}

/// Is the monomial `x^a` regular on the chart intersection `U_J`?
fn on_intersection(setup: &BlowupSetup, j_set: &[usize], a: &Exponents) -> bool {
    let sigma: i64 = setup.center().iter().map(|&nu| a.get(nu)).sum();
    if sigma < 0 {
        return false;
    }
    (0..setup.vars()).all(|k| {
        let inverted = setup.in_center(k) && j_set.contains(&k);
        inverted || a.get(k) >= 0
    })
}

/// Generating wedges of the twisted form sections on one chart
/// intersection, precomputed once: the modulus-twisted wedge of simplified
/// generators together with its multidegree.
struct IntersectionSections {
    j_set: Vec<usize>,
    entries: Vec<(Exponents, LogForm)>,
}

fn intersection_sections(
    setup: &BlowupSetup,
    j_set: &[usize],
    q: usize,
    support: &[bool],
) -> Result<IntersectionSections> {
    let j = j_set[0];
    let n = setup.vars();
    let gens = setup.chart_basis(j)?;
    let mo_gen = setup.chart_mo_generator_ambient(j)?;
    let pair = setup.ambient_pair();
    let mut entries = Vec::new();
    for s in Wedge::all(n, q) {
        let mut w = LogForm::scalar(
            &pair,
            LaurentPoly::monomial(n, mo_gen.clone(), Rational::one()),
        );
        for k in s.indices() {
            w = w.wedge(&gens[k])?;
        }
        let (t0, c0) = w.terms().next().expect("generator wedges are nonzero");
        let (_, e0) = c0.as_monomial().expect("generator wedges are monomial");
        let wdeg = term_multidegree(support, &e0, *t0);
        entries.push((wdeg, w));
    }
    Ok(IntersectionSections {
        j_set: j_set.to_vec(),
        entries,
    })
}

impl IntersectionSections {
    /// Spanning vectors of the graded piece at `deg`, in ambient wedge
    /// coordinates. Each generating wedge contributes at most one vector:
    /// the monomial filling the degree gap is determined, and only its
    /// regularity on the intersection is in question.
    fn vectors_at(
        &self,
        setup: &BlowupSetup,
        support: &[bool],
        wedges: &[Wedge],
        deg: &Exponents,
    ) -> Vec<Vec<Rational>> {
        let mut out = Vec::new();
        for (wdeg, w) in &self.entries {
            let m = deg.sub(wdeg);
            if !on_intersection(setup, &self.j_set, &m) {
                continue;
            }
            // Coordinates of `x^m * w` at `deg` without materializing the
            // product.
            let v: Vec<Rational> = wedges
                .iter()
                .map(|&t| {
                    let mut e = deg.entries().to_vec();
                    for k in t.indices() {
                        if !support[k] {
                            e[k] -= 1;
                        }
                    }
                    w.coeff(t).coeff(&Exponents::new(e).sub(&m))
                })
                .collect();
            debug_assert!(
                v.iter().any(|c| !c.is_zero()),
                "a monomial multiple of a generator wedge cannot vanish"
            );
            out.push(v);
        }
        out
    }
}

fn nonempty_subsets(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 1u64..(1 << items.len()) {
        out.push(
            (0..items.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| items[i])
                .collect(),
        );
    }
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    out
}

/// Certify blow-up invariance of the twisted form module in degree `q`:
/// the twist profile obeys the vanishing bounds with each piece checked by
/// projective-space cohomology, and the Cech complex of the chart cover
/// computes the base module in degree zero and nothing above, one ambient
/// multidegree at a time over the window.
pub fn verify_blowup_invariance(
    setup: &BlowupSetup,
    q: usize,
    window: i64,
) -> Result<VerificationReport> {
    setup.require_center_in_divisor()?;
    let n = setup.vars();
    let n_center = setup.center().len();
    let mut report = VerificationReport::new("blowup-invariance")
        .param("vars", n)
        .param("center", setup.center())
        .param("r", setup.ambient_pair().modulus().entries())
        .param("q", q)
        .window(window);

    // (a) Twist bookkeeping and per-twist vanishing on the exceptional
    // projective space.
    let profile = comparison_profile(setup, q)?;
    report.check(profile.i > 0, || "centre not in divisor".into());
    let mut twist_tables: BTreeMap<i64, crate::cech::GradedDimTable> = BTreeMap::new();
    for (k, pieces) in &profile.filtration {
        for &m in pieces {
            report.check(-(n_center as i64) < m && m < 0, || {
                format!("twist {m} for k={k} violates the vanishing bound")
            });
            let dims = cohomology_dims(n_center - 1, m);
            report.check(dims.is_zero(), || {
                format!("exceptional twist {m} has cohomology {dims}")
            });
            twist_tables.insert(m, dims);
        }
    }
    if let Some(mag) = profile.max_magnitude() {
        report.check((mag as usize) < n_center, || {
            format!("maximal twist magnitude {mag} exceeds the centre bound")
        });
    }
    report = report
        .param("twist_profile", &profile)
        .param("twist_cohomology", &twist_tables);

    // (b) Degree-windowed direct images over the chart cover.
    let support: Vec<bool> = (0..n).map(|k| setup.ambient_pair().in_support(k)).collect();
    let wedges = Wedge::all(n, q);
    let base_module = FormModule::new(FormKind::MOmega, &setup.ambient_pair(), q);
    let base_gen = mo_ring(&setup.ambient_pair()).generator_exponent().clone();
    let subsets = nonempty_subsets(setup.center());
    let levels: Vec<Vec<Vec<usize>>> = (0..n_center)
        .map(|p| {
            subsets
                .iter()
                .filter(|s| s.len() == p + 1)
                .cloned()
                .collect()
        })
        .collect();

    let mut sections: BTreeMap<Vec<usize>, IntersectionSections> = BTreeMap::new();
    for j_set in &subsets {
        sections.insert(
            j_set.clone(),
            intersection_sections(setup, j_set, q, &support)?,
        );
    }

    for deg in exponent_window(n, -window, window) {
        // Spanning vectors per chart intersection.
        let mut spans: BTreeMap<Vec<usize>, Vec<Vec<Rational>>> = BTreeMap::new();
        for j_set in &subsets {
            spans.insert(
                j_set.clone(),
                sections[j_set].vectors_at(setup, &support, &wedges, &deg),
            );
        }

        // Base graded piece: unit wedge vectors whose forced coefficient
        // monomial lies in the twisted cone.
        let mut base_vectors: Vec<Vec<Rational>> = Vec::new();
        for (ti, t) in wedges.iter().enumerate() {
            let mut e = deg.entries().to_vec();
            for k in t.indices() {
                if !support[k] {
                    e[k] -= 1;
                }
            }
            let a = Exponents::new(e);
            let form = LogForm::term(
                &setup.ambient_pair(),
                *t,
                LaurentPoly::monomial(n, a.clone(), Rational::one()),
            );
            let is_member = a.ge(&base_gen);
            debug_assert_eq!(
                term_multidegree(&support, &a, *t),
                deg,
                "base slot degree bookkeeping"
            );
            if is_member {
                debug_assert!(base_module.member(&form).unwrap_or(false));
                let mut v = vec![Rational::zero(); wedges.len()];
                v[ti] = Rational::one();
                base_vectors.push(v);
            }
        }

        // Pullback containment: every base slot lies in every chart's
        // section space.
        for v in &base_vectors {
            for j_set in levels[0].iter() {
                let ok = solve_in_span(&spans[j_set], v).is_some();
                report.check(ok, || {
                    format!(
                        "pullback of a base section of degree {:?} misses chart {:?}",
                        deg.entries(),
                        j_set
                    )
                });
            }
        }

        // Cech dimensions from exact ranks of spanning images.
        let mut level_dims = Vec::new();
        let mut level_ranks = Vec::new();
        for p in 0..n_center {
            let dim: usize = levels[p].iter().map(|j| rank(&spans[j])).sum();
            level_dims.push(dim);
            if p + 1 >= n_center {
                level_ranks.push(0);
                break;
            }
            // Differential: place each spanning vector of each summand in
            // the target tuple with alternating signs.
            let target: Vec<&Vec<usize>> = levels[p + 1].iter().collect();
            let mut image_rows: Vec<Vec<Rational>> = Vec::new();
            for j_set in levels[p].iter() {
                for v in &spans[j_set] {
                    let mut row =
                        vec![Rational::zero(); target.len() * wedges.len()];
                    for (bi, big) in target.iter().enumerate() {
                        if !j_set.iter().all(|x| big.contains(x)) {
                            continue;
                        }
                        let extra = big.iter().position(|x| !j_set.contains(x)).unwrap();
                        let sign = if extra % 2 == 0 {
                            Rational::one()
                        } else {
                            -Rational::one()
                        };
                        for (ci, val) in v.iter().enumerate() {
                            row[bi * wedges.len() + ci] = val * &sign;
                        }
                    }
                    image_rows.push(row);
                }
            }
            level_ranks.push(rank(&image_rows));
        }

        let h0 = level_dims[0] - level_ranks[0];
        report.check(h0 == base_vectors.len(), || {
            format!(
                "degree {:?}: sections of the blow-up have dimension {h0}, base has {}",
                deg.entries(),
                base_vectors.len()
            )
        });
        for p in 1..n_center {
            let h = level_dims[p] - level_ranks[p] - level_ranks[p - 1];
            report.check(h == 0, || {
                format!(
                    "degree {:?}: higher direct image R^{p} has dimension {h}",
                    deg.entries()
                )
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::rat;

    fn setup(vars: usize, center: &[usize], r: &[i64]) -> BlowupSetup {
        BlowupSetup::new(vars, center, r).unwrap()
    }

    #[test]
    fn chart_basis_of_the_plane_blowup() {
        // Two variables, centre the origin, modulus x0: the chart at x0
        // has basis {dlog x0, (1/x0) d x1}.
        let s = setup(2, &[0, 1], &[1, 0]);
        let basis = s.chart_basis(0).unwrap();
        assert_eq!(basis.len(), 2);
        assert_eq!(basis[0].to_string(), "dlog(x1)");
        assert_eq!(
            basis[1].coeff(Wedge(0b10)),
            LaurentPoly::monomial(2, Exponents::from(&[-1, 0][..]), rat(1))
        );
    }

    #[test]
    fn full_divisor_means_all_dlog() {
        let s = setup(2, &[0, 1], &[1, 2]);
        for basis in [s.chart_basis(0).unwrap(), s.chart_basis(1).unwrap()] {
            for (k, g) in basis.iter().enumerate() {
                assert_eq!(g.coeff(Wedge::from_indices(&[k])), LaurentPoly::one(2));
            }
        }
    }

    #[test]
    fn charts_glue_by_monomial_units() {
        // On the overlap, the twisted generators of two charts differ by
        // the unit x_{j'} / x_j exactly on the centre directions off the
        // divisor.
        let s = setup(3, &[0, 1, 2], &[1, 0, 0]);
        let b0 = s.chart_basis(0).unwrap();
        let b1 = s.chart_basis(1).unwrap();
        let unit = LaurentPoly::monomial(3, Exponents::from(&[-1, 1, 0][..]), rat(1));
        for k in 0..3 {
            let free_center = !s.ambient_pair().in_support(k) && s.in_center(k);
            if free_center {
                assert_eq!(b0[k], b1[k].scale_poly(&unit), "k = {k}");
            } else {
                assert_eq!(b0[k], b1[k], "k = {k}");
            }
        }
    }

    #[test]
    fn pullbacks_of_chart_generators_are_chart_members() {
        let s = setup(3, &[1, 2], &[2, 1, 0]);
        for j in [1usize, 2] {
            let chart = s.chart_pair(j).unwrap();
            let module = FormModule::new(FormKind::POmega, &chart, 1);
            for g in s.chart_basis(j).unwrap() {
                let pulled = s.pullback_to_chart(j, &g).unwrap();
                assert!(module.member(&pulled).unwrap(), "{g} on chart {j}");
            }
        }
    }

    #[test]
    fn chart_modulus_collects_centre_multiplicities() {
        let s = setup(3, &[0, 1], &[2, 3, 1]);
        let chart = s.chart_pair(0).unwrap();
        // x0 picks up 2 + 3 = 5, the others keep their exponents.
        assert_eq!(chart.modulus().entries(), &[5, 3, 1]);
    }

    #[test]
    fn profile_of_the_plane_blowup() {
        let s = setup(2, &[0, 1], &[1, 0]);
        let p = comparison_profile(&s, 1).unwrap();
        assert_eq!(p.i, 1);
        assert_eq!(p.twists.get(&0), Some(&1));
        assert_eq!(p.twists.get(&1), Some(&1));
        assert_eq!(p.filtration.get(&1).unwrap(), &vec![-1]);
    }

    #[test]
    fn profile_without_free_center_directions_is_trivial() {
        let s = setup(2, &[0, 1], &[1, 2]);
        let p = comparison_profile(&s, 1).unwrap();
        assert_eq!(p.twists.keys().copied().collect::<Vec<_>>(), vec![0]);
        assert!(p.filtration.is_empty());
    }

    #[test]
    fn twist_magnitudes_respect_the_centre_bound() {
        for (vars, center, r) in [
            (3, vec![0usize, 1, 2], vec![1i64, 0, 0]),
            (3, vec![0, 1, 2], vec![2, 1, 0]),
            (3, vec![1, 2], vec![0, 1, 0]),
            (4, vec![0, 1, 2], vec![1, 1, 0, 2]),
        ] {
            let s = setup(vars, &center, &r);
            for q in 0..=vars {
                let p = comparison_profile(&s, q).unwrap();
                if let Some(mag) = p.max_magnitude() {
                    assert!(
                        (mag as usize) < center.len(),
                        "magnitude {mag} at q={q} for {center:?} {r:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_centres_off_the_divisor() {
        let s = setup(2, &[0, 1], &[0, 0]);
        assert!(matches!(s.chart_basis(0), Err(Error::Domain(_))));
        assert!(comparison_profile(&s, 1).is_err());
    }

    #[test]
    fn plane_blowup_invariance_in_degree_one() {
        let s = setup(2, &[0, 1], &[1, 0]);
        let rep = verify_blowup_invariance(&s, 1, 3).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn degree_zero_reduces_to_the_structure_ring() {
        let s = setup(2, &[0, 1], &[2, 1]);
        let rep = verify_blowup_invariance(&s, 0, 3).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn origin_blowup_of_three_space_in_degree_two() {
        let s = setup(3, &[0, 1, 2], &[2, 0, 0]);
        // One divisorial centre direction, two free ones: the exterior
        // square has two once-twisted and one twice-twisted summand, with
        // all filtration twists inside (-3, 0).
        let p = comparison_profile(&s, 2).unwrap();
        assert_eq!(p.i, 1);
        assert_eq!(p.twists.get(&1), Some(&2));
        assert_eq!(p.twists.get(&2), Some(&1));
        assert_eq!(p.filtration.get(&1).unwrap(), &vec![-1]);
        assert_eq!(p.filtration.get(&2).unwrap(), &vec![-2]);
        let rep = verify_blowup_invariance(&s, 2, 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}
