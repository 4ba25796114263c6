//! Dense matrix realizations, Hermiticity under the weighted inner
//! products, and spectra of the Laplacian.
//!
//! Matrices act on coefficient vectors in canonical cell order: vertices,
//! then edges, then faces when several degrees are involved. The inner
//! product on such vectors is ⟨u, v⟩ = Σ w_i u_i conj v_i with w = c, r or s,
//! so an operator M is self-adjoint iff W^{1/2} M W^{-1/2} is Hermitian.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::cochain::{GaugeFunction, RealOneForm};
use crate::completeness::bounded_curvature_audit;
use crate::complex::WeightedTriangulation;
use crate::error::{Error, Result};
use crate::field::{gauge_transform_potential, EdgePotential, MagneticPotential};
use crate::ops::curvature_d1d0;
use crate::sample::{random_cochain, SampleRng};

/// Default bound on the number of cells for dense eigensolves.
pub const DEFAULT_CELL_CAP: usize = 4000;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorKind {
    D0,
    Delta0,
    D1,
    Delta1,
    GaussBonnet,
    Laplacian,
}

impl OperatorKind {
    pub const ALL: [OperatorKind; 6] = [
        OperatorKind::D0,
        OperatorKind::Delta0,
        OperatorKind::D1,
        OperatorKind::Delta1,
        OperatorKind::GaussBonnet,
        OperatorKind::Laplacian,
    ];

    /// Degrees of the domain and codomain.
    pub fn degrees(self) -> (Vec<usize>, Vec<usize>) {
        match self {
            OperatorKind::D0 => (vec![0], vec![1]),
            OperatorKind::Delta0 => (vec![1], vec![0]),
            OperatorKind::D1 => (vec![1], vec![2]),
            OperatorKind::Delta1 => (vec![2], vec![1]),
            OperatorKind::GaussBonnet | OperatorKind::Laplacian => (vec![0, 1, 2], vec![0, 1, 2]),
        }
    }
}

/// A dense operator between direct sums of cochain spaces, together with
/// the Gram diagonals of both sides.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    pub matrix: DMatrix<Complex64>,
    pub domain: Vec<usize>,
    pub codomain: Vec<usize>,
    pub domain_weights: Vec<f64>,
    pub codomain_weights: Vec<f64>,
}

fn weights(t: &WeightedTriangulation, degrees: &[usize]) -> Vec<f64> {
    degrees
        .iter()
        .flat_map(|&k| t.cell_weights(k).iter().copied())
        .collect()
}

impl OperatorMatrix {
    fn zeros(t: &WeightedTriangulation, domain: Vec<usize>, codomain: Vec<usize>) -> Self {
        let (dw, cw) = (weights(t, &domain), weights(t, &codomain));
        OperatorMatrix {
            matrix: DMatrix::from_element(cw.len(), dw.len(), ZERO),
            domain,
            codomain,
            domain_weights: dw,
            codomain_weights: cw,
        }
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.matrix.ncols());
        let out = &self.matrix * nalgebra::DVector::from_column_slice(v);
        out.as_slice().to_vec()
    }

    pub fn is_square(&self) -> bool {
        self.matrix.nrows() == self.matrix.ncols()
    }

    /// Matrix of the formal adjoint: W_dom⁻¹ · M* · W_cod.
    pub fn metric_adjoint(&self) -> OperatorMatrix {
        let mut m = self.matrix.adjoint();
        for i in 0..m.nrows() {
            for j in 0..m.ncols() {
                m[(i, j)] *= self.codomain_weights[j] / self.domain_weights[i];
            }
        }
        OperatorMatrix {
            matrix: m,
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            domain_weights: self.codomain_weights.clone(),
            codomain_weights: self.domain_weights.clone(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &OperatorMatrix) -> OperatorMatrix {
        assert_eq!(self.domain, other.codomain);
        OperatorMatrix {
            matrix: &self.matrix * &other.matrix,
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            domain_weights: other.domain_weights.clone(),
            codomain_weights: self.codomain_weights.clone(),
        }
    }

    /// W_cod^{1/2} · M · W_dom^{-1/2}: the same operator in orthonormal
    /// coordinates.
    pub fn symmetrized(&self) -> DMatrix<Complex64> {
        let mut s = self.matrix.clone();
        for i in 0..s.nrows() {
            for j in 0..s.ncols() {
                s[(i, j)] *= (self.codomain_weights[i] / self.domain_weights[j]).sqrt();
            }
        }
        s
    }
}

/// Entry-wise assembly, written directly from the defining formulas.
pub fn assemble<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, kind: OperatorKind) -> OperatorMatrix {
    let al = |p: usize, q: usize| alpha.between(t, p, q).expect("adjacent vertices");
    let (domain, codomain) = kind.degrees();
    let mut op = OperatorMatrix::zeros(t, domain, codomain);
    let m = &mut op.matrix;
    match kind {
        OperatorKind::D0 => {
            for (e, &[x, y]) in t.edges().iter().enumerate() {
                m[(e, y)] += cis(al(y, x) / 2.0);
                m[(e, x)] -= cis(al(x, y) / 2.0);
            }
        }
        OperatorKind::Delta0 => {
            for x in 0..t.num_vertices() {
                for nb in t.neighbors(x) {
                    let y = nb.vertex;
                    // φ(y, x) in terms of the stored value
                    let sign = if y < x { 1.0 } else { -1.0 };
                    m[(x, nb.cell)] += cis(al(y, x) / 2.0) * sign * t.edge_weight(nb.cell) / t.vertex_weight(x);
                }
            }
        }
        OperatorKind::D1 => {
            for (f, &[a, b, c]) in t.faces().iter().enumerate() {
                for (p, q, w) in [(a, b, c), (b, c, a), (c, a, b)] {
                    let (e, sign) = t.edge_between(p, q).expect("face side");
                    m[(f, e)] += cis((al(p, w) + al(q, w)) / 6.0) * sign;
                }
            }
        }
        OperatorKind::Delta1 => {
            for (e, &[x, y]) in t.edges().iter().enumerate() {
                for ef in t.edge_faces(e) {
                    let z = ef.apex;
                    let w = t.face_weight(ef.face) / t.edge_weight(e);
                    m[(e, ef.face)] += cis((al(z, x) + al(z, y)) / 6.0) * ef.sign * w;
                }
            }
        }
        OperatorKind::GaussBonnet => {
            let blocks = gauss_bonnet_blocks(t, alpha);
            let off = offsets(t);
            for ((i, j), b) in blocks {
                m.view_mut((off[i], off[j]), b.shape()).copy_from(&b);
            }
        }
        OperatorKind::Laplacian => {
            let tm = assemble(t, alpha, OperatorKind::GaussBonnet);
            *m = &tm.matrix * &tm.matrix;
        }
    }
    op
}

fn offsets(t: &WeightedTriangulation) -> [usize; 3] {
    [0, t.num_vertices(), t.num_vertices() + t.num_edges()]
}

/// Nonzero blocks (codomain degree, domain degree) of T_α.
fn gauss_bonnet_blocks<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
) -> Vec<((usize, usize), DMatrix<Complex64>)> {
    vec![
        ((1, 0), assemble(t, alpha, OperatorKind::D0).matrix),
        ((0, 1), assemble(t, alpha, OperatorKind::Delta0).matrix),
        ((2, 1), assemble(t, alpha, OperatorKind::D1).matrix),
        ((1, 2), assemble(t, alpha, OperatorKind::Delta1).matrix),
    ]
}

/// Principal block of Δ_α on the given degrees, computed blockwise from
/// T_α (Δ[i][j] = Σ_k T[i][k] T[k][j]).
pub fn laplacian_block<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    degrees: &[usize],
) -> OperatorMatrix {
    let blocks = gauss_bonnet_blocks(t, alpha);
    let get = |i: usize, j: usize| blocks.iter().find(|(k, _)| *k == (i, j)).map(|(_, b)| b);
    let mut op = OperatorMatrix::zeros(t, degrees.to_vec(), degrees.to_vec());
    let mut row = 0;
    for &i in degrees {
        let mut col = 0;
        for &j in degrees {
            for k in 0..3 {
                if let (Some(a), Some(b)) = (get(i, k), get(k, j)) {
                    let prod = a * b;
                    let mut v = op.matrix.view_mut((row, col), prod.shape());
                    v += &prod;
                }
            }
            col += t.num_cells(j);
        }
        row += t.num_cells(i);
    }
    op
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HermiticityReport {
    /// max |S − S*| for S the symmetrized matrix
    pub asymmetry: f64,
    /// max |S|
    pub scale: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Relative Hermiticity tolerance used by [`hermitize_and_check`].
pub const HERMITIAN_TOL: f64 = 1e-12;

/// Symmetrizes a square operator with its Gram diagonal and measures how
/// far it is from Hermitian. Passes iff max|S − S*| ≤ tol·max|S|.
pub fn hermitize_and_check(op: &OperatorMatrix, tol: f64) -> Result<HermiticityReport> {
    if !op.is_square() || op.domain != op.codomain {
        return Err(Error::NotSquare {
            rows: op.matrix.nrows(),
            cols: op.matrix.ncols(),
        });
    }
    let s = op.symmetrized();
    let diff = &s - s.adjoint();
    let asymmetry = diff.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let scale = s.iter().map(|z| z.norm()).fold(0.0, f64::max);
    Ok(HermiticityReport {
        asymmetry,
        scale,
        tolerance: tol,
        passed: asymmetry <= tol * scale,
    })
}

/// Degrees whose Δ_α block is diagonalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpectrumBlock {
    Vertices,
    Edges,
    Faces,
    /// Vertices and faces together (the even part).
    Even,
    Full,
}

impl SpectrumBlock {
    pub fn degrees(self) -> &'static [usize] {
        match self {
            SpectrumBlock::Vertices => &[0],
            SpectrumBlock::Edges => &[1],
            SpectrumBlock::Faces => &[2],
            SpectrumBlock::Even => &[0, 2],
            SpectrumBlock::Full => &[0, 1, 2],
        }
    }
}

fn check_cap(t: &WeightedTriangulation, cap: usize) -> Result<()> {
    if t.total_cells() > cap {
        Err(Error::CellCapExceeded {
            cells: t.total_cells(),
            cap,
        })
    } else {
        Ok(())
    }
}

/// Ascending eigenvalues of a self-adjoint operator.
pub fn eigenvalues(op: &OperatorMatrix) -> Vec<f64> {
    if op.matrix.nrows() == 0 {
        return Vec::new();
    }
    let s = op.symmetrized();
    let herm = (&s + s.adjoint()).scale(0.5);
    let mut ev: Vec<f64> = SymmetricEigen::new(herm).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

/// Sorted eigenvalues of the Δ_α block on the requested degrees.
pub fn spectrum<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    block: SpectrumBlock,
    cap: usize,
) -> Result<Vec<f64>> {
    check_cap(t, cap)?;
    Ok(eigenvalues(&laplacian_block(t, alpha, block.degrees())))
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaugeSpectrumReport {
    pub original: Vec<f64>,
    pub gauged: Vec<f64>,
    pub max_diff: f64,
}

/// Spectra for α and α + d⁰f side by side.
pub fn gauge_spectrum_check(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    f: &GaugeFunction,
    block: SpectrumBlock,
    cap: usize,
) -> Result<GaugeSpectrumReport> {
    let original = spectrum(t, alpha, block, cap)?;
    let gauged = spectrum(t, &gauge_transform_potential(t, alpha, f), block, cap)?;
    let max_diff = max_abs_diff(&original, &gauged);
    Ok(GaugeSpectrumReport {
        original,
        gauged,
        max_diff,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SupersymmetryReport {
    pub even_nonzero: Vec<f64>,
    pub odd_nonzero: Vec<f64>,
    /// Eigenvalues at or below this are treated as zero.
    pub zero_threshold: f64,
    /// Infinite when the multiplicities differ.
    pub max_diff: f64,
    pub passed: bool,
}

/// Compares the nonzero spectra of the even block (vertices ⊕ faces) and
/// the odd block (edges) of Δ_α, which coincide because T_α swaps parity.
pub fn supersymmetry_check<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    tol: f64,
    cap: usize,
) -> Result<SupersymmetryReport> {
    let even = spectrum(t, alpha, SpectrumBlock::Even, cap)?;
    let odd = spectrum(t, alpha, SpectrumBlock::Edges, cap)?;
    let top = even.iter().chain(&odd).copied().fold(1.0, f64::max);
    let zero_threshold = 1e-8 * top;
    let nz = |v: Vec<f64>| v.into_iter().filter(|&x| x > zero_threshold).collect::<Vec<_>>();
    let (even_nonzero, odd_nonzero) = (nz(even), nz(odd));
    let max_diff = max_abs_diff(&even_nonzero, &odd_nonzero);
    Ok(SupersymmetryReport {
        even_nonzero,
        odd_nonzero,
        zero_threshold,
        max_diff,
        passed: max_diff <= tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaReport {
    pub trials: usize,
    /// Bounded-curvature constant C of the complex.
    pub curvature_constant: f64,
    /// 3√C
    pub bound: f64,
    /// max over trials of |⟨d⁰_α g, δ¹_α η⟩| / (‖g‖‖η‖)
    pub max_ratio: f64,
    /// Norm of d¹_α∘d⁰_α between the weighted spaces, when within the cap.
    pub exact_norm: Option<f64>,
    /// Set when the ratio exceeds 3√C but not 6√C: the bound is short by
    /// the factor 2 hidden in the curvature closed form.
    pub factor_flag: bool,
    pub passed: bool,
}

/// Absolute slack on the lemma bound.
pub const LEMMA_SLACK: f64 = 1e-9;

/// Monte-Carlo probe of |⟨d⁰_α g, δ¹_α η⟩| ≤ 3√C ‖g‖‖η‖.
///
/// The pairing equals ⟨d¹_α d⁰_α g, η⟩ and is evaluated through the
/// curvature closed form, which vanishes exactly on flux-free faces.
pub fn lemma_constant_probe<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    trials: usize,
    rng: &mut SampleRng,
    cap: usize,
) -> Result<LemmaReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let c = bounded_curvature_audit(t, alpha).constant;
    let bound = 3.0 * c.sqrt();
    let mut max_ratio: f64 = 0.0;
    for _ in 0..trials {
        let g = random_cochain::<0>(t, rng);
        let eta = random_cochain::<2>(t, rng);
        let denom = g.norm(t) * eta.norm(t);
        if denom == 0.0 {
            continue;
        }
        let pairing = curvature_d1d0(t, alpha, &g).inner(t, &eta)?;
        max_ratio = max_ratio.max(pairing.norm() / denom);
    }
    let exact_norm = if t.total_cells() <= cap && t.num_faces() > 0 {
        let op = assemble(t, alpha, OperatorKind::D1).compose(&assemble(t, alpha, OperatorKind::D0));
        let sv = op.symmetrized().singular_values();
        Some(sv.iter().copied().fold(0.0, f64::max))
    } else if t.num_faces() == 0 {
        Some(0.0)
    } else {
        None
    };
    let within = max_ratio <= bound + LEMMA_SLACK;
    let factor_flag = !within && max_ratio <= 2.0 * bound + LEMMA_SLACK;
    Ok(LemmaReport {
        trials,
        curvature_constant: c,
        bound,
        max_ratio,
        exact_norm,
        factor_flag,
        passed: within || factor_flag,
    })
}

/// A deliberately broken "potential" that is symmetric, α(x,y) = α(y,x).
/// Operators built from it lose their adjointness; used as a negative
/// control.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricPotential(pub RealOneForm);

impl EdgePotential for SymmetricPotential {
    fn alpha(&self, e: usize, _forward: bool) -> f64 {
        self.0.values()[e]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cochain::difference;
    use crate::complex::fixtures::k3;
    use crate::ops::{d0, d1, delta0, delta1, gauss_bonnet, laplacian};
    use crate::sample::{random_complex_small, random_gauge, random_potential, random_total, rng};
    use std::f64::consts::PI;

    fn rel_vec(a: &[Complex64], b: &[Complex64]) -> f64 {
        let scale = a.iter().chain(b).map(|z| z.norm()).fold(0.0, f64::max).max(1e-300);
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max) / scale
    }

    fn mat_max(m: &DMatrix<Complex64>) -> f64 {
        m.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    #[test]
    fn assembly_matches_maps() {
        let mut g = rng(1);
        for seed in 0..8 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let ops: Vec<_> = OperatorKind::ALL.iter().map(|&k| (k, assemble(&t, &a, k))).collect();
            for _ in 0..8 {
                let x = random_total(&t, &mut g);
                for (k, m) in &ops {
                    let (got, want) = match k {
                        OperatorKind::D0 => (m.apply(x.f.values()), d0(&t, &a, &x.f).into_values()),
                        OperatorKind::Delta0 => (m.apply(x.phi.values()), delta0(&t, &a, &x.phi).into_values()),
                        OperatorKind::D1 => (m.apply(x.phi.values()), d1(&t, &a, &x.phi).into_values()),
                        OperatorKind::Delta1 => (m.apply(x.psi.values()), delta1(&t, &a, &x.psi).into_values()),
                        OperatorKind::GaussBonnet => (m.apply(&x.to_vec()), gauss_bonnet(&t, &a, &x).to_vec()),
                        OperatorKind::Laplacian => (m.apply(&x.to_vec()), laplacian(&t, &a, &x).to_vec()),
                    };
                    assert!(rel_vec(&got, &want) <= 1e-13, "{k:?}");
                }
            }
        }
    }

    #[test]
    fn d0_single_edge() {
        let t = WeightedTriangulation::builder()
            .vertex("a", 1.0)
            .vertex("b", 1.0)
            .edge("a", "b", 1.0)
            .build()
            .unwrap();
        let m = assemble(&t, &MagneticPotential::zeros(&t), OperatorKind::D0);
        assert_eq!(m.matrix.shape(), (1, 2));
        assert_eq!(m.matrix[(0, 0)], Complex64::new(-1.0, 0.0));
        assert_eq!(m.matrix[(0, 1)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn adjoint_matrices_are_metric_adjoints() {
        let mut g = rng(2);
        let t = random_complex_small(3, 12);
        let a = random_potential(&t, &mut g);
        let pairs = [
            (OperatorKind::D0, OperatorKind::Delta0),
            (OperatorKind::D1, OperatorKind::Delta1),
        ];
        for (fwd, adj) in pairs {
            let m = assemble(&t, &a, fwd).metric_adjoint();
            let direct = assemble(&t, &a, adj);
            assert!(mat_max(&(&m.matrix - &direct.matrix)) <= 1e-13 * mat_max(&direct.matrix).max(1.0));
        }
    }

    #[test]
    fn gauss_bonnet_block_structure() {
        let mut g = rng(4);
        let t = random_complex_small(2, 10);
        let a = random_potential(&t, &mut g);
        let tm = assemble(&t, &a, OperatorKind::GaussBonnet);
        let off = offsets(&t);
        let sizes = [t.num_vertices(), t.num_edges(), t.num_faces()];
        for k in 0..3 {
            let diag = tm.matrix.view((off[k], off[k]), (sizes[k], sizes[k]));
            assert!(diag.iter().all(|z| *z == ZERO));
        }
        let corner = tm.matrix.view((off[0], off[2]), (sizes[0], sizes[2]));
        assert!(corner.iter().all(|z| *z == ZERO));
        let lap = assemble(&t, &a, OperatorKind::Laplacian);
        let sq = &tm.matrix * &tm.matrix;
        assert!(mat_max(&(&lap.matrix - &sq)) <= 1e-13 * mat_max(&sq));
        let full = laplacian_block(&t, &a, &[0, 1, 2]);
        assert!(mat_max(&(&full.matrix - &sq)) <= 1e-13 * mat_max(&sq));
    }

    #[test]
    fn hermiticity_and_negative_control() {
        let mut g = rng(5);
        for seed in 0..6 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            for kind in [OperatorKind::GaussBonnet, OperatorKind::Laplacian] {
                let rep = hermitize_and_check(&assemble(&t, &a, kind), HERMITIAN_TOL).unwrap();
                assert!(rep.passed, "{kind:?} {rep:?}");
            }
            let sym = SymmetricPotential(RealOneForm::from_values(&t, a.values().to_vec()).unwrap());
            let rep = hermitize_and_check(&assemble(&t, &sym, OperatorKind::GaussBonnet), HERMITIAN_TOL).unwrap();
            assert!(!rep.passed);
        }
        let t = k3();
        let d0m = assemble(&t, &MagneticPotential::zeros(&t), OperatorKind::D0);
        assert!(matches!(hermitize_and_check(&d0m, 1e-12), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn k3_classical_spectrum() {
        let t = k3();
        let ev = spectrum(
            &t,
            &MagneticPotential::zeros(&t),
            SpectrumBlock::Vertices,
            DEFAULT_CELL_CAP,
        )
        .unwrap();
        for (got, want) in ev.iter().zip([0.0, 3.0, 3.0]) {
            assert!((got - want).abs() < 1e-12, "{ev:?}");
        }
    }

    #[test]
    fn weighted_classical_laplacian() {
        // path a - b with c = (1, 2), r = 3: δ⁰d⁰ = [[3, -3], [-1.5, 1.5]], eigenvalues 0, 4.5
        let t = WeightedTriangulation::builder()
            .vertex("a", 1.0)
            .vertex("b", 2.0)
            .edge("a", "b", 3.0)
            .build()
            .unwrap();
        let ev = spectrum(&t, &MagneticPotential::zeros(&t), SpectrumBlock::Vertices, 10).unwrap();
        assert!(ev[0].abs() < 1e-12 && (ev[1] - 4.5).abs() < 1e-12);
        assert!(spectrum(&t, &MagneticPotential::zeros(&t), SpectrumBlock::Faces, 10)
            .unwrap()
            .is_empty());
        assert!(matches!(
            spectrum(&t, &MagneticPotential::zeros(&t), SpectrumBlock::Full, 2),
            Err(Error::CellCapExceeded { .. })
        ));
    }

    #[test]
    fn spectra_are_nonnegative_and_gauge_invariant() {
        let mut g = rng(6);
        for seed in 0..6 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let f = random_gauge(&t, &mut g);
            for block in [SpectrumBlock::Vertices, SpectrumBlock::Edges, SpectrumBlock::Full] {
                let rep = gauge_spectrum_check(&t, &a, &f, block, DEFAULT_CELL_CAP).unwrap();
                assert!(rep.max_diff <= 1e-10, "{block:?}");
                assert!(rep.original.iter().all(|&v| v >= -1e-10));
            }
        }
    }

    #[test]
    fn supersymmetric_pairing() {
        let mut g = rng(7);
        for seed in 0..6 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let rep = supersymmetry_check(&t, &a, 1e-9, DEFAULT_CELL_CAP).unwrap();
            assert!(rep.passed, "{rep:?}");
            assert!(!rep.odd_nonzero.is_empty());
        }
    }

    #[test]
    fn kernel_dimension() {
        let mut g = rng(8);
        let t = random_complex_small(4, 10);
        let f = random_gauge(&t, &mut g);
        let trivial: MagneticPotential = difference(&t, &f).into();
        let ev = spectrum(&t, &trivial, SpectrumBlock::Vertices, DEFAULT_CELL_CAP).unwrap();
        assert!(ev[0].abs() < 1e-10 && ev[1] > 1e-6);

        let t = k3();
        let theta = 0.7;
        let a = MagneticPotential::from_values(&t, vec![theta, -theta, theta]).unwrap();
        let ev = spectrum(&t, &a, SpectrumBlock::Vertices, DEFAULT_CELL_CAP).unwrap();
        assert!(ev[0] > 1e-10);
    }

    #[test]
    fn lemma_probe_cases() {
        let t = k3();
        let mut g = rng(9);
        let rep = lemma_constant_probe(&t, &MagneticPotential::zeros(&t), 64, &mut g, DEFAULT_CELL_CAP).unwrap();
        assert_eq!(rep.max_ratio, 0.0);
        assert_eq!(rep.curvature_constant, 0.0);
        assert!(rep.passed && !rep.factor_flag);

        let a = MagneticPotential::from_values(&t, vec![PI, -PI, PI]).unwrap();
        let rep = lemma_constant_probe(&t, &a, 256, &mut g, DEFAULT_CELL_CAP).unwrap();
        assert!((rep.curvature_constant - 1.0).abs() < 1e-15);
        // the exact norm is 2√3·√C
        assert!((rep.exact_norm.unwrap() - 2.0 * 3f64.sqrt()).abs() < 1e-12);
        assert!(rep.max_ratio <= rep.exact_norm.unwrap() + 1e-12);
        assert!(rep.passed);
        assert!(lemma_constant_probe(&t, &a, 0, &mut g, 10).is_err());
    }

    // ⟨d⁰g, δ¹η⟩ computed directly agrees with the closed-form pairing.
    #[test]
    fn lemma_pairing_matches_direct() {
        let mut g = rng(10);
        for seed in 0..6 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let x = random_cochain::<0>(&t, &mut g);
            let eta = random_cochain::<2>(&t, &mut g);
            let direct = d0(&t, &a, &x).inner(&t, &delta1(&t, &a, &eta)).unwrap();
            let closed = curvature_d1d0(&t, &a, &x).inner(&t, &eta).unwrap();
            assert!((direct - closed).norm() <= 1e-13 * x.norm(&t) * eta.norm(&t) * 4.0);
        }
    }
}
