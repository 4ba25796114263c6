//! Randomized property suites run against one complex and potential.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cochain::{gauge_act, Cochain};
use crate::complex::WeightedTriangulation;
use crate::error::{Error, Result};
use crate::field::{gauge_transform_potential, is_trivial, MagneticPotential};
use crate::ops::{curvature_d1d0, curvature_delta0delta1, d0, d1, delta0, delta1, leibniz_suite};
use crate::sample::{random_cochain, random_gauge, rng, SampleRng};
use crate::spectral::{
    assemble, eigenvalues, gauge_spectrum_check, hermitize_and_check, laplacian_block, lemma_constant_probe,
    supersymmetry_check, OperatorKind, SpectrumBlock, HERMITIAN_TOL,
};

/// Absolute bound on d¹_α d⁰_α g for trivial α, per unit of max|g|.
pub const FLAT_CURVATURE_TOL: f64 = 1e-14;
/// Relative tolerance for Δ_α = T_α².
pub const SQUARE_TOL: f64 = 1e-13;
/// Tolerance for matching the even and odd nonzero spectra.
pub const SUSY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Adjointness,
    Gauge,
    Leibniz,
    Curvature,
    Spectral,
    Lemma,
}

impl CheckKind {
    pub const ALL: [CheckKind; 6] = [
        CheckKind::Adjointness,
        CheckKind::Gauge,
        CheckKind::Leibniz,
        CheckKind::Curvature,
        CheckKind::Spectral,
        CheckKind::Lemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Adjointness => "adjointness",
            CheckKind::Gauge => "gauge",
            CheckKind::Leibniz => "leibniz",
            CheckKind::Curvature => "curvature",
            CheckKind::Spectral => "spectral",
            CheckKind::Lemma => "lemma",
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown check `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub lemma_trials: usize,
    pub tol_alg: f64,
    pub tol_eig: f64,
    pub tol_hol: f64,
    pub cell_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0xC0FFEE,
            trials: 64,
            lemma_trials: 256,
            tol_alg: 1e-13,
            tol_eig: 1e-10,
            tol_hol: crate::field::HOLONOMY_TOL,
            cell_cap: crate::spectral::DEFAULT_CELL_CAP,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("tol-alg", self.tol_alg),
            ("tol-eig", self.tol_eig),
            ("tol-hol", self.tol_hol),
        ] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!("{name} must be positive, got {v}")));
            }
        }
        if self.trials == 0 || self.lemma_trials == 0 {
            return Err(Error::InvalidParameter("trials must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, max_residual: f64, tolerance: f64) -> Self {
        CheckOutcome {
            name: name.into(),
            max_residual,
            tolerance,
            passed: max_residual <= tolerance,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {} max_residual={:.3e} tolerance={:.3e}",
            self.name, self.max_residual, self.tolerance
        )?;
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub outcomes: Vec<CheckOutcome>,
    pub skipped: Vec<String>,
    pub passed: bool,
}

fn ratio(num: f64, scale: f64) -> f64 {
    if scale == 0.0 {
        num
    } else {
        num / scale
    }
}

fn rel_diff<const K: usize>(a: &Cochain<K>, b: &Cochain<K>, extra_scale: f64) -> f64 {
    ratio((a - b).max_abs(), a.max_abs().max(b.max_abs()).max(extra_scale))
}

/// ⟨d⁰f, φ⟩ = ⟨f, δ⁰φ⟩ and ⟨d¹φ, ψ⟩ = ⟨φ, δ¹ψ⟩, relative to the
/// Cauchy-Schwarz bound of both sides.
pub fn check_adjointness(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Vec<CheckOutcome> {
    let (mut r0, mut r1) = (0.0f64, 0.0f64);
    for _ in 0..cfg.trials {
        let f = random_cochain::<0>(t, rng);
        let phi = random_cochain::<1>(t, rng);
        let psi = random_cochain::<2>(t, rng);
        let (df, dphi) = (d0(t, alpha, &f), delta0(t, alpha, &phi));
        let lhs = df.inner(t, &phi).unwrap();
        let rhs = f.inner(t, &dphi).unwrap();
        let scale = (df.norm(t) * phi.norm(t)).max(f.norm(t) * dphi.norm(t));
        r0 = r0.max(ratio((lhs - rhs).norm(), scale));

        let (d1phi, dpsi) = (d1(t, alpha, &phi), delta1(t, alpha, &psi));
        let lhs = d1phi.inner(t, &psi).unwrap();
        let rhs = phi.inner(t, &dpsi).unwrap();
        let scale = (d1phi.norm(t) * psi.norm(t)).max(phi.norm(t) * dpsi.norm(t));
        r1 = r1.max(ratio((lhs - rhs).norm(), scale));
    }
    vec![
        CheckOutcome::new("adjointness d0/delta0", r0, cfg.tol_alg),
        CheckOutcome::new("adjointness d1/delta1", r1, cfg.tol_alg),
    ]
}

/// Covariance of all four operators under α ↦ α + d⁰f, ω ↦ e^{if}ω.
pub fn check_gauge(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Vec<CheckOutcome> {
    let mut worst = 0.0f64;
    for _ in 0..cfg.trials {
        let f = random_gauge(t, rng);
        let beta = gauge_transform_potential(t, alpha, &f);
        let w0 = random_cochain::<0>(t, rng);
        let w1 = random_cochain::<1>(t, rng);
        let w2 = random_cochain::<2>(t, rng);
        let residuals = [
            rel_diff(
                &d0(t, &beta, &gauge_act(t, &f, &w0)),
                &gauge_act(t, &f, &d0(t, alpha, &w0)),
                w0.max_abs(),
            ),
            rel_diff(
                &delta0(t, &beta, &gauge_act(t, &f, &w1)),
                &gauge_act(t, &f, &delta0(t, alpha, &w1)),
                0.0,
            ),
            rel_diff(
                &d1(t, &beta, &gauge_act(t, &f, &w1)),
                &gauge_act(t, &f, &d1(t, alpha, &w1)),
                w1.max_abs(),
            ),
            rel_diff(
                &delta1(t, &beta, &gauge_act(t, &f, &w2)),
                &gauge_act(t, &f, &delta1(t, alpha, &w2)),
                0.0,
            ),
        ];
        worst = residuals.into_iter().fold(worst, f64::max);
    }
    vec![CheckOutcome::new("gauge covariance", worst, cfg.tol_alg)]
}

pub fn check_leibniz(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Vec<CheckOutcome> {
    let mut worst = 0.0f64;
    for _ in 0..cfg.trials {
        let f = random_cochain::<0>(t, rng);
        let g = random_cochain::<0>(t, rng);
        let phi = random_cochain::<1>(t, rng);
        let psi = random_cochain::<2>(t, rng);
        worst = worst.max(leibniz_suite(t, alpha, &f, &g, &phi, &psi).max_relative());
    }
    vec![CheckOutcome::new("leibniz", worst, cfg.tol_alg)]
}

/// Compositions d¹d⁰ and δ⁰δ¹ against their closed forms, and d¹d⁰ = 0
/// when α has trivial holonomy.
pub fn check_curvature(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Result<Vec<CheckOutcome>> {
    let witness = is_trivial(t, alpha, cfg.tol_hol)?;
    let (mut r01, mut r10, mut flat) = (0.0f64, 0.0f64, 0.0f64);
    for _ in 0..cfg.trials {
        let g = random_cochain::<0>(t, rng);
        let eta = random_cochain::<2>(t, rng);
        let composed = d1(t, alpha, &d0(t, alpha, &g));
        r01 = r01.max(rel_diff(&composed, &curvature_d1d0(t, alpha, &g), g.max_abs()));
        let composed = delta0(t, alpha, &delta1(t, alpha, &eta));
        r10 = r10.max(rel_diff(&composed, &curvature_delta0delta1(t, alpha, &eta), 0.0));
        if witness.is_some() {
            let d1d0 = d1(t, alpha, &d0(t, alpha, &g));
            flat = flat.max(ratio(d1d0.max_abs(), g.max_abs()));
        }
    }
    let mut out = vec![
        CheckOutcome::new("curvature d1d0 closed form", r01, cfg.tol_alg),
        CheckOutcome::new("curvature delta0delta1 closed form", r10, cfg.tol_alg),
    ];
    if witness.is_some() {
        out.push(CheckOutcome::new("flat curvature vanishes", flat, FLAT_CURVATURE_TOL).with_note("trivial holonomy"));
    }
    Ok(out)
}

/// Hermiticity of T_α, positivity of Δ_α, Δ_α = T_α², supersymmetric
/// pairing and gauge invariance of the spectrum.
pub fn check_spectral(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Result<Vec<CheckOutcome>> {
    if t.total_cells() > cfg.cell_cap {
        return Err(Error::CellCapExceeded {
            cells: t.total_cells(),
            cap: cfg.cell_cap,
        });
    }
    let tm = assemble(t, alpha, OperatorKind::GaussBonnet);
    let herm = hermitize_and_check(&tm, HERMITIAN_TOL)?;
    let lap = laplacian_block(t, alpha, &[0, 1, 2]);
    let herm_lap = hermitize_and_check(&lap, HERMITIAN_TOL)?;
    let herm_worst = ratio(herm.asymmetry, herm.scale).max(ratio(herm_lap.asymmetry, herm_lap.scale));

    let sq = &tm.matrix * &tm.matrix;
    let mx = |m: &nalgebra::DMatrix<num_complex::Complex64>| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let square = ratio(mx(&(&lap.matrix - &sq)), mx(&sq));

    let ev = eigenvalues(&lap);
    let min_ev = ev.first().copied().unwrap_or(0.0);
    let susy = supersymmetry_check(t, alpha, SUSY_TOL, cfg.cell_cap)?;
    let f = random_gauge(t, rng);
    let gauge = gauge_spectrum_check(t, alpha, &f, SpectrumBlock::Full, cfg.cell_cap)?;

    Ok(vec![
        CheckOutcome::new("hermiticity", herm_worst, HERMITIAN_TOL),
        CheckOutcome::new("positivity", (-min_ev).max(0.0), cfg.tol_eig)
            .with_note(format!("min eigenvalue {min_ev:.3e}")),
        CheckOutcome::new("laplacian equals square", square, SQUARE_TOL),
        CheckOutcome::new("supersymmetry", susy.max_diff, SUSY_TOL),
        CheckOutcome::new("gauge spectrum", gauge.max_diff, cfg.tol_eig),
    ])
}

pub fn check_lemma(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    cfg: &VerifyConfig,
    rng: &mut SampleRng,
) -> Result<Vec<CheckOutcome>> {
    let rep = lemma_constant_probe(t, alpha, cfg.lemma_trials, rng, cfg.cell_cap)?;
    let mut out = CheckOutcome::new("lemma probe", rep.max_ratio, rep.bound);
    out.passed = rep.passed;
    let mut note = format!("C={:.6e}", rep.curvature_constant);
    if let Some(norm) = rep.exact_norm {
        note.push_str(&format!(", exact norm {norm:.6e}"));
    }
    if rep.factor_flag {
        out.tolerance = 2.0 * rep.bound;
        note.push_str(", factor flag: ratio exceeds 3√C but not 6√C");
    }
    Ok(vec![out.with_note(note)])
}

/// Runs the selected suites. Each suite draws from its own stream derived
/// from the seed, so results do not depend on which other suites run.
pub fn run_checks(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    checks: &[CheckKind],
    cfg: &VerifyConfig,
) -> Result<VerifyReport> {
    cfg.validate()?;
    let mut outcomes = Vec::new();
    let mut skipped = Vec::new();
    for (i, kind) in CheckKind::ALL.into_iter().enumerate() {
        if !checks.contains(&kind) {
            skipped.push(kind.name().to_owned());
            continue;
        }
        let mut g = rng(cfg.seed.wrapping_add(i as u64));
        let found = match kind {
            CheckKind::Adjointness => check_adjointness(t, alpha, cfg, &mut g),
            CheckKind::Gauge => check_gauge(t, alpha, cfg, &mut g),
            CheckKind::Leibniz => check_leibniz(t, alpha, cfg, &mut g),
            CheckKind::Curvature => check_curvature(t, alpha, cfg, &mut g)?,
            CheckKind::Spectral => match check_spectral(t, alpha, cfg, &mut g) {
                Err(Error::CellCapExceeded { cells, cap }) => {
                    skipped.push(format!("spectral ({cells} cells exceed cap {cap})"));
                    continue;
                }
                other => other?,
            },
            CheckKind::Lemma => check_lemma(t, alpha, cfg, &mut g)?,
        };
        outcomes.extend(found);
    }
    let passed = outcomes.iter().all(|o| o.passed);
    Ok(VerifyReport {
        outcomes,
        skipped,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::k3;
    use crate::sample::{random_complex_small, random_potential};
    use crate::spectral::SymmetricPotential;
    use std::f64::consts::PI;

    fn quick() -> VerifyConfig {
        VerifyConfig {
            trials: 8,
            lemma_trials: 32,
            ..Default::default()
        }
    }

    #[test]
    fn k3_all_checks_pass() {
        let t = k3();
        for a in [
            MagneticPotential::zeros(&t),
            MagneticPotential::from_values(&t, vec![0.3, -1.1, PI]).unwrap(),
        ] {
            let rep = run_checks(&t, &a, &CheckKind::ALL, &quick()).unwrap();
            assert!(rep.passed, "{:#?}", rep.outcomes);
            assert!(rep.skipped.is_empty());
        }
    }

    #[test]
    fn random_complexes_pass() {
        let mut g = rng(1);
        for seed in 0..4 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let rep = run_checks(&t, &a, &CheckKind::ALL, &quick()).unwrap();
            assert!(rep.passed, "{:#?}", rep.outcomes);
        }
    }

    #[test]
    fn partial_selection_lists_skipped() {
        let t = k3();
        let a = MagneticPotential::zeros(&t);
        let rep = run_checks(&t, &a, &[CheckKind::Adjointness], &quick()).unwrap();
        assert_eq!(rep.outcomes.len(), 2);
        assert_eq!(rep.skipped, ["gauge", "leibniz", "curvature", "spectral", "lemma"]);
        let full = run_checks(&t, &a, &CheckKind::ALL, &quick()).unwrap();
        assert_eq!(full.outcomes[..2], rep.outcomes[..]);
    }

    #[test]
    fn spectral_skipped_over_cap() {
        let t = k3();
        let cfg = VerifyConfig { cell_cap: 3, ..quick() };
        let rep = run_checks(&t, &MagneticPotential::zeros(&t), &[CheckKind::Spectral], &cfg).unwrap();
        assert!(rep.outcomes.is_empty());
        assert!(rep.skipped.iter().any(|s| s.starts_with("spectral (7 cells")));
    }

    #[test]
    fn symmetric_potential_breaks_adjointness() {
        let t = k3();
        let sym = SymmetricPotential(crate::cochain::RealOneForm::from_values(&t, vec![0.4, 1.0, -0.7]).unwrap());
        let mut g = rng(3);
        let f = random_cochain::<0>(&t, &mut g);
        let phi = random_cochain::<1>(&t, &mut g);
        let lhs = d0(&t, &sym, &f).inner(&t, &phi).unwrap();
        let rhs = f.inner(&t, &delta0(&t, &sym, &phi)).unwrap();
        assert!((lhs - rhs).norm() > 1e-3);
    }

    #[test]
    fn parse_and_validate_config() {
        assert_eq!("lemma".parse::<CheckKind>().unwrap(), CheckKind::Lemma);
        assert!("nope".parse::<CheckKind>().is_err());
        let bad = VerifyConfig {
            tol_alg: 0.0,
            ..Default::default()
        };
        assert!(bad.validate().is_err());
    }
}
