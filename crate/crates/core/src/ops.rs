//! The magnetic operators
//!
//! ```text
//! d⁰_α g(x,y)      = e^{iα(y,x)/2} g(y) − e^{iα(x,y)/2} g(x)
//! δ⁰_α φ(x)        = 1/c(x) Σ_{y~x} r(x,y) e^{iα(y,x)/2} φ(y,x)
//! d¹_α φ(x,y,z)    = Σ over the sides (p,q) with opposite vertex w of
//!                    e^{i(α(p,w)+α(q,w))/6} φ(p,q)
//! δ¹_α ψ(x,y)      = 1/r(x,y) Σ_{t∈F_xy} s(x,y,t) e^{i(α(t,x)+α(t,y))/6} ψ(x,y,t)
//! ```
//!
//! together with the twisted wedge product, the Gauß-Bonnet operator
//! T_α(f,φ,ψ) = (δ⁰φ, d⁰f + δ¹ψ, d¹φ) and the Laplacian Δ_α = T_α².
//!
//! Every operator is generic over [`EdgePotential`] so that it can also be
//! evaluated on edge functions that are not skew-symmetric.

use std::f64::consts::PI;
use std::ops::{Add, Sub};

use num_complex::Complex64;

use crate::cochain::{dbtilde, tilde, Cochain, Cochain0, Cochain1, Cochain2, RealOneForm};
use crate::complex::WeightedTriangulation;
use crate::error::{Error, Result};
use crate::field::EdgePotential;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// α on the three sides of stored face `f = [a, b, c]`: `[α_ab, α_bc, α_ca]`.
fn side_alphas<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, f: usize) -> [f64; 3] {
    t.face_sides(f).map(|(e, sign)| alpha.alpha(e, sign > 0.0))
}

/// Phase exponent of side `k` (from vertex `k` to `k+1`) of a stored face in
/// d¹_α and ∧_α: (α(p,w) + α(q,w)) / 6 with `w` the opposite vertex.
fn side_phase(a: &[f64; 3], k: usize) -> f64 {
    (a[(k + 1) % 3] - a[(k + 2) % 3]) / 6.0
}

/// Flux of stored face `f` in its stored orientation.
pub fn stored_flux<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, f: usize) -> f64 {
    side_alphas(t, alpha, f).iter().sum()
}

fn check<const K: usize>(t: &WeightedTriangulation, c: &Cochain<K>) {
    if let Err(e) = c.check(t) {
        panic!("{e}");
    }
}

pub fn d0<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, g: &Cochain0) -> Cochain1 {
    check(t, g);
    let g = g.values();
    Cochain1::from_fn(t, |e| {
        let [x, y] = t.edges()[e];
        let a = alpha.alpha(e, true);
        cis(-a / 2.0) * g[y] - cis(a / 2.0) * g[x]
    })
}

pub fn delta0<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, phi: &Cochain1) -> Cochain0 {
    check(t, phi);
    let p = phi.values();
    Cochain0::from_fn(t, |x| {
        let sum: Complex64 = t
            .neighbors(x)
            .iter()
            .map(|nb| {
                // the oriented edge (y, x); forward iff y < x
                let forward = nb.vertex < x;
                let sign = if forward { 1.0 } else { -1.0 };
                cis(alpha.alpha(nb.cell, forward) / 2.0) * p[nb.cell] * sign * t.edge_weight(nb.cell)
            })
            .sum();
        sum / t.vertex_weight(x)
    })
}

pub fn d1<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, phi: &Cochain1) -> Cochain2 {
    check(t, phi);
    let p = phi.values();
    Cochain2::from_fn(t, |f| {
        let a = side_alphas(t, alpha, f);
        t.face_sides(f)
            .iter()
            .enumerate()
            .map(|(k, &(e, sign))| cis(side_phase(&a, k)) * p[e] * sign)
            .sum()
    })
}

pub fn delta1<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, psi: &Cochain2) -> Cochain1 {
    check(t, psi);
    let q = psi.values();
    Cochain1::from_fn(t, |e| {
        let [x, y] = t.edges()[e];
        let sum: Complex64 = t
            .edge_faces(e)
            .iter()
            .map(|ef| {
                let tx = alpha.between(t, ef.apex, x).unwrap();
                let ty = alpha.between(t, ef.apex, y).unwrap();
                cis((tx + ty) / 6.0) * q[ef.face] * ef.sign * t.face_weight(ef.face)
            })
            .sum();
        sum / t.edge_weight(e)
    })
}

/// ξ ∧_α φ for a complex edge function ξ given on canonical edges.
///
/// Side `(p,q)` of a face with opposite vertex `w` contributes
/// e^{-i(α(w,p)+α(w,q))/6} (ξ(w,p) + ξ(w,q)) φ(p,q).
pub fn wedge_complex<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    xi: &Cochain1,
    phi: &Cochain1,
) -> Cochain2 {
    check(t, xi);
    check(t, phi);
    let (xv, p) = (xi.values(), phi.values());
    Cochain2::from_fn(t, |f| {
        let a = side_alphas(t, alpha, f);
        let sides = t.face_sides(f);
        let x: [Complex64; 3] = sides.map(|(e, sign)| xv[e] * sign);
        sides
            .iter()
            .enumerate()
            .map(|(k, &(e, sign))| {
                // ξ(w,p) = X[k+2], ξ(w,q) = -X[k+1]
                let coeff = x[(k + 2) % 3] - x[(k + 1) % 3];
                cis(side_phase(&a, k)) * coeff * p[e] * sign
            })
            .sum()
    })
}

/// ξ ∧_α φ for a real skew-symmetric edge function ξ.
pub fn wedge_alpha<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    xi: &RealOneForm,
    phi: &Cochain1,
) -> Cochain2 {
    let xi = Cochain1::from_fn(t, |e| Complex64::new(xi.values()[e], 0.0));
    wedge_complex(t, alpha, &xi, phi)
}

/// An element (f, φ, ψ) of the total space l²(V) ⊕ l²(E) ⊕ l²(F).
#[derive(Debug, Clone, PartialEq)]
pub struct TotalCochain {
    pub f: Cochain0,
    pub phi: Cochain1,
    pub psi: Cochain2,
}

impl TotalCochain {
    pub fn zeros(t: &WeightedTriangulation) -> Self {
        TotalCochain {
            f: Cochain0::zeros(t),
            phi: Cochain1::zeros(t),
            psi: Cochain2::zeros(t),
        }
    }

    pub fn check(&self, t: &WeightedTriangulation) -> Result<()> {
        self.f.check(t)?;
        self.phi.check(t)?;
        self.psi.check(t)
    }

    /// Sum of the three degree-wise inner products.
    pub fn inner(&self, t: &WeightedTriangulation, other: &Self) -> Result<Complex64> {
        Ok(self.f.inner(t, &other.f)? + self.phi.inner(t, &other.phi)? + self.psi.inner(t, &other.psi)?)
    }

    pub fn norm(&self, t: &WeightedTriangulation) -> f64 {
        self.inner(t, self).map(|z| z.re.max(0.0).sqrt()).unwrap_or(f64::NAN)
    }

    pub fn max_abs(&self) -> f64 {
        self.f.max_abs().max(self.phi.max_abs()).max(self.psi.max_abs())
    }

    /// Concatenated values: vertices, then edges, then faces.
    pub fn to_vec(&self) -> Vec<Complex64> {
        let mut v = self.f.values().to_vec();
        v.extend_from_slice(self.phi.values());
        v.extend_from_slice(self.psi.values());
        v
    }

    pub fn from_vec(t: &WeightedTriangulation, v: &[Complex64]) -> Result<Self> {
        let (n0, n1) = (t.num_vertices(), t.num_edges());
        if v.len() != t.total_cells() {
            return Err(Error::DimensionMismatch {
                what: "total cochain",
                expected: t.total_cells(),
                found: v.len(),
            });
        }
        Ok(TotalCochain {
            f: Cochain0::from_values(t, v[..n0].to_vec())?,
            phi: Cochain1::from_values(t, v[n0..n0 + n1].to_vec())?,
            psi: Cochain2::from_values(t, v[n0 + n1..].to_vec())?,
        })
    }
}

impl Add for &TotalCochain {
    type Output = TotalCochain;

    fn add(self, rhs: Self) -> TotalCochain {
        TotalCochain {
            f: &self.f + &rhs.f,
            phi: &self.phi + &rhs.phi,
            psi: &self.psi + &rhs.psi,
        }
    }
}

impl Sub for &TotalCochain {
    type Output = TotalCochain;

    fn sub(self, rhs: Self) -> TotalCochain {
        TotalCochain {
            f: &self.f - &rhs.f,
            phi: &self.phi - &rhs.phi,
            psi: &self.psi - &rhs.psi,
        }
    }
}

/// T_α(f, φ, ψ) = (δ⁰_α φ, d⁰_α f + δ¹_α ψ, d¹_α φ).
pub fn gauss_bonnet<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, x: &TotalCochain) -> TotalCochain {
    TotalCochain {
        f: delta0(t, alpha, &x.phi),
        phi: &d0(t, alpha, &x.f) + &delta1(t, alpha, &x.psi),
        psi: d1(t, alpha, &x.phi),
    }
}

/// Δ_α = T_α ∘ T_α.
pub fn laplacian<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, x: &TotalCochain) -> TotalCochain {
    gauss_bonnet(t, alpha, &gauss_bonnet(t, alpha, x))
}

/// Calibration of [`curvature_d1d0_printed`]: the composition d¹_α∘d⁰_α
/// equals this constant times the printed closed form.
pub const D1D0_CALIBRATION: Complex64 = Complex64::new(0.0, 2.0);

/// Calibration of [`curvature_delta0delta1_printed`] against δ⁰_α∘δ¹_α.
pub const DELTA0DELTA1_CALIBRATION: Complex64 = Complex64::new(0.0, -1.0 / 3.0);

/// Phases e^{i(α(v,·)+α(v,·))/3} of the three vertices of stored face `f`.
fn vertex_phases<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, f: usize) -> [Complex64; 3] {
    let a = side_alphas(t, alpha, f);
    // α(v_k, v_{k+1}) = a[k], α(v_k, v_{k+2}) = -a[k+2]
    [0, 1, 2].map(|k| cis((a[k] - a[(k + 2) % 3]) / 3.0))
}

/// The closed form of the curvature d¹_α∘d⁰_α as usually displayed:
/// -sin(α̂/6) Σ_v e^{i(α(v,·)+α(v,·))/3} f(v). Off by [`D1D0_CALIBRATION`].
pub fn curvature_d1d0_printed<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    g: &Cochain0,
) -> Cochain2 {
    check(t, g);
    Cochain2::from_fn(t, |f| {
        let ph = vertex_phases(t, alpha, f);
        let sum: Complex64 = t.faces()[f].iter().zip(ph).map(|(&v, p)| p * g.values()[v]).sum();
        -(stored_flux(t, alpha, f) / 6.0).sin() * sum
    })
}

/// Closed form of d¹_α∘d⁰_α.
pub fn curvature_d1d0<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P, g: &Cochain0) -> Cochain2 {
    D1D0_CALIBRATION * &curvature_d1d0_printed(t, alpha, g)
}

/// The displayed closed form of δ⁰_α∘δ¹_α:
/// (-3/c(x)) Σ s sin(α̂/6) e^{-i(α(x,z)+α(x,y))/3} ψ(x,y,z), the sum running
/// over ordered faces (x, y, z) that start at `x`, both orientations.
/// Off by [`DELTA0DELTA1_CALIBRATION`].
pub fn curvature_delta0delta1_printed<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    psi: &Cochain2,
) -> Cochain0 {
    check(t, psi);
    let mut out = vec![ZERO; t.num_vertices()];
    for f in 0..t.num_faces() {
        let verts = t.faces()[f];
        let ph = vertex_phases(t, alpha, f);
        let sin = (stored_flux(t, alpha, f) / 6.0).sin();
        for k in 0..3 {
            // (x,y,z) and (x,z,y): flux, ψ and orientation flip together
            let term = 2.0 * t.face_weight(f) * sin * ph[k].conj() * psi.values()[f];
            out[verts[k]] += term;
        }
    }
    for (x, v) in out.iter_mut().enumerate() {
        *v *= -3.0 / t.vertex_weight(x);
    }
    Cochain0::from_values(t, out).unwrap()
}

/// Closed form of δ⁰_α∘δ¹_α.
pub fn curvature_delta0delta1<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    psi: &Cochain2,
) -> Cochain0 {
    DELTA0DELTA1_CALIBRATION * &curvature_delta0delta1_printed(t, alpha, psi)
}

/// Measured calibration factors (composition / printed form) on a single
/// unit-weight triangle carrying a generic potential.
pub fn measure_calibration() -> (Complex64, Complex64) {
    let t = WeightedTriangulation::builder()
        .vertex("x", 1.0)
        .vertex("y", 1.0)
        .vertex("z", 1.0)
        .edge("x", "y", 1.0)
        .edge("y", "z", 1.0)
        .edge("x", "z", 1.0)
        .face("x", "y", "z", 1.0)
        .build()
        .expect("reference triangle");
    let alpha = RealOneForm::from_values(&t, vec![0.9, -0.4, 1.3]).unwrap();
    assert!((stored_flux(&t, &alpha, 0) / 6.0).sin().abs() > 0.1);

    let g = Cochain0::dirac(&t, 0);
    let composed = d1(&t, &alpha, &d0(&t, &alpha, &g)).values()[0];
    let printed = curvature_d1d0_printed(&t, &alpha, &g).values()[0];

    let psi = Cochain2::from_values(&t, vec![Complex64::new(1.0, 0.0)]).unwrap();
    let composed_adj = delta0(&t, &alpha, &delta1(&t, &alpha, &psi)).values()[0];
    let printed_adj = curvature_delta0delta1_printed(&t, &alpha, &psi).values()[0];
    (composed / printed, composed_adj / printed_adj)
}

/// Maximal residual of one product rule.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeibnizResidual {
    pub name: &'static str,
    /// max over cells of |lhs - rhs|
    pub max_abs: f64,
    /// max over cells of the largest term involved
    pub scale: f64,
}

impl LeibnizResidual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.max_abs
        } else {
            self.max_abs / self.scale
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizReport {
    pub residuals: [LeibnizResidual; 4],
}

impl LeibnizReport {
    pub fn max_relative(&self) -> f64 {
        self.residuals.iter().map(LeibnizResidual::relative).fold(0.0, f64::max)
    }
}

fn residual<const K: usize>(name: &'static str, lhs: &Cochain<K>, terms: &[&Cochain<K>]) -> LeibnizResidual {
    let mut rhs = terms[0].clone();
    for term in &terms[1..] {
        rhs = &rhs + term;
    }
    let scale = terms.iter().map(|c| c.max_abs()).fold(lhs.max_abs(), f64::max);
    LeibnizResidual {
        name,
        max_abs: (lhs - &rhs).max_abs(),
        scale,
    }
}

/// Evaluates the four product rules of the magnetic operators on every
/// cell, with the classical difference d⁰f(x,y) = f(y) − f(x):
///
/// ```text
/// d⁰_α(fg)(x,y)  = f(y) d⁰_α g(x,y) + e^{iα(x,y)/2} d⁰f(x,y) g(x)
/// δ⁰_α(f̃φ)(x)   = f(x) δ⁰_α φ(x) − 1/(2c(x)) Σ_{y~x} r e^{-iα(x,y)/2} d⁰f(x,y) φ(x,y)
/// d¹_α(f̃φ)      = f̃̃ d¹_α φ + 1/6 d⁰f ∧_α φ
/// δ¹_α(f̃̃ψ)(e)  = f̃ δ¹_α ψ(e) + 1/(6r) Σ_{t∈F_e} s e^{i(α(t,e⁻)+α(t,e⁺))/6}
///                  (d⁰f(e⁻,t) + d⁰f(e⁺,t)) ψ(e,t)
/// ```
pub fn leibniz_suite<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    f: &Cochain0,
    g: &Cochain0,
    phi: &Cochain1,
    psi: &Cochain2,
) -> LeibnizReport {
    let fv = f.values();
    let df = crate::cochain::difference_complex(t, f);
    let f1 = tilde(t, fv);
    let f2 = dbtilde(t, fv);

    // d⁰_α(fg)
    let lhs = d0(t, alpha, &Cochain0::from_fn(t, |x| fv[x] * g.values()[x]));
    let dg = d0(t, alpha, g);
    let a = Cochain1::from_fn(t, |e| fv[t.edges()[e][1]] * dg.values()[e]);
    let b = Cochain1::from_fn(t, |e| {
        let x = t.edges()[e][0];
        cis(alpha.alpha(e, true) / 2.0) * df.values()[e] * g.values()[x]
    });
    let r0 = residual("d0 product rule", &lhs, &[&a, &b]);

    // δ⁰_α(f̃φ)
    let lhs = delta0(t, alpha, &phi.pointwise(&f1));
    let a = delta0(t, alpha, phi).pointwise(fv);
    let b = Cochain0::from_fn(t, |x| {
        let sum: Complex64 = t
            .neighbors(x)
            .iter()
            .map(|nb| {
                let sign = if x < nb.vertex { 1.0 } else { -1.0 };
                let axy = alpha.alpha(nb.cell, x < nb.vertex);
                t.edge_weight(nb.cell) * cis(-axy / 2.0) * df.values()[nb.cell] * phi.values()[nb.cell] * (sign * sign)
            })
            .sum();
        -sum / (2.0 * t.vertex_weight(x))
    });
    let r1 = residual("delta0 product rule", &lhs, &[&a, &b]);

    // d¹_α(f̃φ)
    let lhs = d1(t, alpha, &phi.pointwise(&f1));
    let a = d1(t, alpha, phi).pointwise(&f2);
    let b = Complex64::new(1.0 / 6.0, 0.0) * &wedge_complex(t, alpha, &df, phi);
    let r2 = residual("d1 product rule", &lhs, &[&a, &b]);

    // δ¹_α(f̃̃ψ)
    let lhs = delta1(t, alpha, &psi.pointwise(&f2));
    let a = delta1(t, alpha, psi).pointwise(&f1);
    let b = Cochain1::from_fn(t, |e| {
        let [x, y] = t.edges()[e];
        let sum: Complex64 = t
            .edge_faces(e)
            .iter()
            .map(|ef| {
                let w = ef.apex;
                let phase = alpha.between(t, w, x).unwrap() + alpha.between(t, w, y).unwrap();
                let diffs = (fv[w] - fv[x]) + (fv[w] - fv[y]);
                t.face_weight(ef.face) * cis(phase / 6.0) * diffs * psi.values()[ef.face] * ef.sign
            })
            .sum();
        sum / (6.0 * t.edge_weight(e))
    });
    let r3 = residual("delta1 product rule", &lhs, &[&a, &b]);

    LeibnizReport {
        residuals: [r0, r1, r2, r3],
    }
}

/// Reduces an angle to (-π, π].
pub fn wrap_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(2.0 * PI);
    if r > PI {
        r - 2.0 * PI
    } else {
        r
    }
}
