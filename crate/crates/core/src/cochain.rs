//! Cochains of degree 0, 1 and 2 with their weighted inner products, the
//! symmetrization maps and the gauge action.
//!
//! Cochains are dense vectors in canonical cell order. A 1-cochain is
//! skew-symmetric and a 2-cochain alternating by construction: only the
//! value on the stored orientation is kept and every other orientation is
//! read through its sign.
//!
//! The inner products are
//!
//! ```text
//! <f1, f2>     = Σ_x c(x) f1(x) conj f2(x)
//! <φ1, φ2>     = 1/2 Σ_{oriented edges} r φ1 conj φ2 = Σ_{stored edges} r φ1 conj φ2
//! <ψ1, ψ2>     = 1/6 Σ_{ordered faces}  s ψ1 conj ψ2 = Σ_{stored faces} s ψ1 conj ψ2
//! ```

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::complex::WeightedTriangulation;
use crate::error::{Error, Result};

/// A complex-valued function on the cells of degree `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<const K: usize> {
    values: Vec<Complex64>,
}

pub type Cochain0 = Cochain<0>;
pub type Cochain1 = Cochain<1>;
pub type Cochain2 = Cochain<2>;

const WHAT: [&str; 3] = ["0-cochain", "1-cochain", "2-cochain"];

impl<const K: usize> Cochain<K> {
    pub fn zeros(t: &WeightedTriangulation) -> Self {
        Cochain {
            values: vec![Complex64::new(0.0, 0.0); t.num_cells(K)],
        }
    }

    /// Wraps values given in canonical cell order.
    pub fn from_values(t: &WeightedTriangulation, values: Vec<Complex64>) -> Result<Self> {
        check_len(WHAT[K], t.num_cells(K), values.len())?;
        Ok(Cochain { values })
    }

    pub fn from_fn(t: &WeightedTriangulation, f: impl FnMut(usize) -> Complex64) -> Self {
        Cochain {
            values: (0..t.num_cells(K)).map(f).collect(),
        }
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn check(&self, t: &WeightedTriangulation) -> Result<()> {
        check_len(WHAT[K], t.num_cells(K), self.values.len())
    }

    /// Weighted inner product of degree `K`.
    pub fn inner(&self, t: &WeightedTriangulation, other: &Self) -> Result<Complex64> {
        inner(t, self, other)
    }

    pub fn norm(&self, t: &WeightedTriangulation) -> f64 {
        inner(t, self, self).map(|z| z.re.max(0.0).sqrt()).unwrap_or(f64::NAN)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Pointwise product with a function living on the same cells.
    pub fn pointwise(&self, weights: &[Complex64]) -> Self {
        assert_eq!(weights.len(), self.values.len());
        Cochain {
            values: self.values.iter().zip(weights).map(|(a, b)| a * b).collect(),
        }
    }

    /// Pointwise product with a real function on the same cells.
    pub fn pointwise_real(&self, weights: &[f64]) -> Self {
        assert_eq!(weights.len(), self.values.len());
        Cochain {
            values: self.values.iter().zip(weights).map(|(a, b)| a * b).collect(),
        }
    }
}

impl Cochain0 {
    pub fn constant(t: &WeightedTriangulation, value: Complex64) -> Self {
        Cochain {
            values: vec![value; t.num_vertices()],
        }
    }

    pub fn dirac(t: &WeightedTriangulation, x: usize) -> Self {
        let mut f = Self::zeros(t);
        f.values[x] = Complex64::new(1.0, 0.0);
        f
    }
}

impl Cochain1 {
    /// φ(x, y), or `None` if `{x, y}` is not an edge.
    pub fn at(&self, t: &WeightedTriangulation, x: usize, y: usize) -> Option<Complex64> {
        t.edge_between(x, y).map(|(e, sign)| self.values[e] * sign)
    }

    /// Sets φ(x, y) = value (and therefore φ(y, x) = -value).
    pub fn set(&mut self, t: &WeightedTriangulation, x: usize, y: usize, value: Complex64) -> Result<()> {
        let (e, sign) = t
            .edge_between(x, y)
            .ok_or_else(|| Error::NotAdjacent(t.vertex_id(x).to_string(), t.vertex_id(y).to_string()))?;
        self.values[e] = value * sign;
        Ok(())
    }
}

impl Cochain2 {
    /// ψ(x, y, z), or `None` if `{x, y, z}` is not a face.
    pub fn at(&self, t: &WeightedTriangulation, x: usize, y: usize, z: usize) -> Option<Complex64> {
        t.face_between(x, y, z).map(|(f, sign)| self.values[f] * sign)
    }

    pub fn set(&mut self, t: &WeightedTriangulation, x: usize, y: usize, z: usize, value: Complex64) -> Result<()> {
        let (f, sign) = t
            .face_between(x, y, z)
            .ok_or_else(|| Error::NotAFace(format!("{},{},{}", t.vertex_id(x), t.vertex_id(y), t.vertex_id(z))))?;
        self.values[f] = value * sign;
        Ok(())
    }
}

impl<const K: usize> Add for &Cochain<K> {
    type Output = Cochain<K>;

    fn add(self, rhs: Self) -> Cochain<K> {
        assert_eq!(self.values.len(), rhs.values.len());
        Cochain {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<const K: usize> Sub for &Cochain<K> {
    type Output = Cochain<K>;

    fn sub(self, rhs: Self) -> Cochain<K> {
        assert_eq!(self.values.len(), rhs.values.len());
        Cochain {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<const K: usize> Mul<&Cochain<K>> for Complex64 {
    type Output = Cochain<K>;

    fn mul(self, rhs: &Cochain<K>) -> Cochain<K> {
        Cochain {
            values: rhs.values.iter().map(|a| self * a).collect(),
        }
    }
}

fn check_len(what: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { what, expected, found })
    }
}

/// Weighted inner product of two cochains of degree `K`.
pub fn inner<const K: usize>(t: &WeightedTriangulation, a: &Cochain<K>, b: &Cochain<K>) -> Result<Complex64> {
    a.check(t)?;
    b.check(t)?;
    Ok(a.values
        .iter()
        .zip(&b.values)
        .zip(t.cell_weights(K))
        .map(|((x, y), w)| x * y.conj() * *w)
        .sum())
}

pub fn inner0(t: &WeightedTriangulation, a: &Cochain0, b: &Cochain0) -> Result<Complex64> {
    inner(t, a, b)
}

pub fn inner1(t: &WeightedTriangulation, a: &Cochain1, b: &Cochain1) -> Result<Complex64> {
    inner(t, a, b)
}

pub fn inner2(t: &WeightedTriangulation, a: &Cochain2, b: &Cochain2) -> Result<Complex64> {
    inner(t, a, b)
}

/// A real function on vertices; acts on cochains as multiplication by e^{if}.
#[derive(Debug, Clone, PartialEq)]
pub struct GaugeFunction {
    values: Vec<f64>,
}

impl GaugeFunction {
    pub fn zeros(t: &WeightedTriangulation) -> Self {
        GaugeFunction {
            values: vec![0.0; t.num_vertices()],
        }
    }

    pub fn constant(t: &WeightedTriangulation, value: f64) -> Self {
        GaugeFunction {
            values: vec![value; t.num_vertices()],
        }
    }

    pub fn from_values(t: &WeightedTriangulation, values: Vec<f64>) -> Result<Self> {
        check_len("gauge function", t.num_vertices(), values.len())?;
        Ok(GaugeFunction { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn to_cochain(&self) -> Cochain0 {
        Cochain {
            values: self.values.iter().map(|&v| Complex64::new(v, 0.0)).collect(),
        }
    }
}

impl std::ops::Neg for &GaugeFunction {
    type Output = GaugeFunction;

    fn neg(self) -> GaugeFunction {
        GaugeFunction {
            values: self.values.iter().map(|v| -v).collect(),
        }
    }
}

impl Add for &GaugeFunction {
    type Output = GaugeFunction;

    fn add(self, rhs: Self) -> GaugeFunction {
        GaugeFunction {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

/// A real skew-symmetric function on edges, stored on canonical edges.
#[derive(Debug, Clone, PartialEq)]
pub struct RealOneForm {
    values: Vec<f64>,
}

impl RealOneForm {
    pub fn zeros(t: &WeightedTriangulation) -> Self {
        RealOneForm {
            values: vec![0.0; t.num_edges()],
        }
    }

    pub fn from_values(t: &WeightedTriangulation, values: Vec<f64>) -> Result<Self> {
        check_len("real 1-form", t.num_edges(), values.len())?;
        Ok(RealOneForm { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Value on the canonical edge `e` traversed forward or backward.
    pub fn oriented(&self, e: usize, forward: bool) -> f64 {
        if forward {
            self.values[e]
        } else {
            -self.values[e]
        }
    }

    pub fn at(&self, t: &WeightedTriangulation, x: usize, y: usize) -> Option<f64> {
        t.edge_between(x, y).map(|(e, sign)| self.values[e] * sign)
    }
}

/// Classical difference d⁰f(x, y) = f(y) - f(x) of a real function.
pub fn difference(t: &WeightedTriangulation, f: &GaugeFunction) -> RealOneForm {
    RealOneForm {
        values: t.edges().iter().map(|&[x, y]| f.values[y] - f.values[x]).collect(),
    }
}

/// Classical difference of a complex 0-cochain.
pub fn difference_complex(t: &WeightedTriangulation, f: &Cochain0) -> Cochain1 {
    Cochain {
        values: t.edges().iter().map(|&[x, y]| f.values[y] - f.values[x]).collect(),
    }
}

/// Symmetrization f̃(e) = (f(e⁻) + f(e⁺)) / 2, one value per canonical edge.
pub fn tilde<S>(t: &WeightedTriangulation, f: &[S]) -> Vec<S>
where
    S: Copy + Add<Output = S> + Mul<f64, Output = S>,
{
    assert_eq!(f.len(), t.num_vertices());
    t.edges().iter().map(|&[x, y]| (f[x] + f[y]) * 0.5).collect()
}

/// f̃̃(x, y, z) = (f(x) + f(y) + f(z)) / 3, one value per face.
pub fn dbtilde<S>(t: &WeightedTriangulation, f: &[S]) -> Vec<S>
where
    S: Copy + Add<Output = S> + Mul<f64, Output = S>,
{
    assert_eq!(f.len(), t.num_vertices());
    t.faces()
        .iter()
        .map(|&[x, y, z]| (f[x] + f[y] + f[z]) * (1.0 / 3.0))
        .collect()
}

/// Phases of the gauge action on cells of degree `K`: f, f̃ or f̃̃.
fn gauge_phases<const K: usize>(t: &WeightedTriangulation, f: &GaugeFunction) -> Vec<f64> {
    match K {
        0 => f.values.clone(),
        1 => tilde(t, &f.values),
        2 => dbtilde(t, &f.values),
        _ => unreachable!(),
    }
}

/// Change of gauge e^{if}·ω: multiplication by e^{if}, e^{if̃} or e^{if̃̃}
/// depending on the degree.
pub fn gauge_act<const K: usize>(t: &WeightedTriangulation, f: &GaugeFunction, omega: &Cochain<K>) -> Cochain<K> {
    let phases: Vec<Complex64> = gauge_phases::<K>(t, f)
        .into_iter()
        .map(|p| Complex64::from_polar(1.0, p))
        .collect();
    omega.pointwise(&phases)
}

/// Key of a cell in the cochain JSON map: `v:a`, `e:a,b` or `f:a,b,c`.
pub fn cell_key(t: &WeightedTriangulation, degree: usize, cell: usize) -> String {
    match degree {
        0 => format!("v:{}", t.vertex_id(cell)),
        1 => format!("e:{}", t.edge_label(cell)),
        2 => format!("f:{}", t.face_label(cell)),
        _ => unreachable!(),
    }
}

/// Serializes a cochain as a map from canonical cell keys to `[re, im]`.
pub fn cochain_to_map<const K: usize>(t: &WeightedTriangulation, omega: &Cochain<K>) -> BTreeMap<String, [f64; 2]> {
    omega
        .values
        .iter()
        .enumerate()
        .map(|(i, z)| (cell_key(t, K, i), [z.re, z.im]))
        .collect()
}

/// Reads a cochain map. Keys may name any orientation of a cell; the value
/// is then stored with the corresponding sign. Missing cells are zero.
pub fn cochain_from_map<const K: usize>(
    t: &WeightedTriangulation,
    map: &BTreeMap<String, [f64; 2]>,
) -> Result<Cochain<K>> {
    let mut out = Cochain::<K>::zeros(t);
    for (key, &[re, im]) in map {
        let bad = || Error::InvalidCochainKey(key.clone());
        let (tag, rest) = key.split_once(':').ok_or_else(bad)?;
        let ids: Vec<usize> = rest
            .split(',')
            .map(|id| t.vertex_index(&id.into()).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let (cell, sign) = match (tag, K, ids.as_slice()) {
            ("v", 0, &[x]) => (x, 1.0),
            ("e", 1, &[x, y]) => t.edge_between(x, y).ok_or_else(bad)?,
            ("f", 2, &[x, y, z]) => t.face_between(x, y, z).ok_or_else(bad)?,
            _ => return Err(bad()),
        };
        out.values[cell] = Complex64::new(re, im) * sign;
    }
    Ok(out)
}
