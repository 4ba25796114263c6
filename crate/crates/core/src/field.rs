//! Magnetic potentials, holonomy and face flux.

use std::collections::VecDeque;

use crate::cochain::{difference, GaugeFunction, RealOneForm};
use crate::complex::{VertexId, WeightedTriangulation};
use crate::error::{Error, Result};

/// Default absolute tolerance for deciding that a holonomy vanishes.
pub const HOLONOMY_TOL: f64 = 1e-9;

/// Read access to a potential on oriented edges.
///
/// [`MagneticPotential`] is skew-symmetric by construction. The trait lets
/// the operators run on other edge functions as well, which is how the
/// negative controls (a symmetric "potential") are built.
pub trait EdgePotential {
    /// α on canonical edge `e`, traversed tail→head when `forward`.
    fn alpha(&self, e: usize, forward: bool) -> f64;

    /// α(x, y) for adjacent `x`, `y`.
    fn between(&self, t: &WeightedTriangulation, x: usize, y: usize) -> Option<f64> {
        t.edge_between(x, y).map(|(e, sign)| self.alpha(e, sign > 0.0))
    }
}

/// A real skew-symmetric edge function α with α(x, y) = -α(y, x).
#[derive(Debug, Clone, PartialEq)]
pub struct MagneticPotential {
    values: Vec<f64>,
}

impl MagneticPotential {
    pub fn zeros(t: &WeightedTriangulation) -> Self {
        MagneticPotential {
            values: vec![0.0; t.num_edges()],
        }
    }

    /// Values on canonical edges (tail < head).
    pub fn from_values(t: &WeightedTriangulation, values: Vec<f64>) -> Result<Self> {
        if values.len() != t.num_edges() {
            return Err(Error::DimensionMismatch {
                what: "magnetic potential",
                expected: t.num_edges(),
                found: values.len(),
            });
        }
        Ok(MagneticPotential { values })
    }

    pub fn from_fn(t: &WeightedTriangulation, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        MagneticPotential {
            values: t.edges().iter().map(|&[x, y]| f(x, y)).collect(),
        }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, t: &WeightedTriangulation, x: usize, y: usize) -> Option<f64> {
        self.between(t, x, y)
    }
}

impl From<RealOneForm> for MagneticPotential {
    fn from(form: RealOneForm) -> Self {
        MagneticPotential {
            values: form.values().to_vec(),
        }
    }
}

impl EdgePotential for MagneticPotential {
    fn alpha(&self, e: usize, forward: bool) -> f64 {
        if forward {
            self.values[e]
        } else {
            -self.values[e]
        }
    }
}

impl EdgePotential for RealOneForm {
    fn alpha(&self, e: usize, forward: bool) -> f64 {
        self.oriented(e, forward)
    }
}

/// A finite vertex sequence with consecutive vertices adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSpec {
    vertices: Vec<usize>,
}

impl PathSpec {
    pub fn new(t: &WeightedTriangulation, vertices: Vec<usize>) -> Result<Self> {
        for w in vertices.windows(2) {
            if t.edge_between(w[0], w[1]).is_none() {
                return Err(Error::NotAdjacent(
                    t.vertex_id(w[0]).to_string(),
                    t.vertex_id(w[1]).to_string(),
                ));
            }
        }
        Ok(PathSpec { vertices })
    }

    pub fn from_ids(t: &WeightedTriangulation, ids: &[VertexId]) -> Result<Self> {
        let vertices = ids.iter().map(|id| t.require_vertex(id)).collect::<Result<Vec<_>>>()?;
        Self::new(t, vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.len() > 1 && self.vertices.first() == self.vertices.last()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        PathSpec { vertices }
    }

    /// `self` followed by `other`; `other` must start where `self` ends.
    pub fn concat(&self, other: &PathSpec) -> Option<Self> {
        if self.vertices.last() != other.vertices.first() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Some(PathSpec { vertices })
    }
}

/// Hol_α(γ) = α(x₀,x₁) + … + α(x_{n-1},x_n).
pub fn holonomy(t: &WeightedTriangulation, alpha: &impl EdgePotential, path: &[usize]) -> Result<f64> {
    path.windows(2)
        .map(|w| {
            alpha
                .between(t, w[0], w[1])
                .ok_or_else(|| Error::NotAdjacent(t.vertex_id(w[0]).to_string(), t.vertex_id(w[1]).to_string()))
        })
        .sum()
}

/// α̂(x,y,z) = α_xy + α_yz + α_zx for the oriented face `(x, y, z)`.
pub fn face_flux(t: &WeightedTriangulation, alpha: &impl EdgePotential, face: [usize; 3]) -> Result<f64> {
    let [x, y, z] = face;
    if t.face_between(x, y, z).is_none() {
        return Err(Error::NotAFace(format!(
            "{},{},{}",
            t.vertex_id(x),
            t.vertex_id(y),
            t.vertex_id(z)
        )));
    }
    holonomy(t, alpha, &[x, y, z, x])
}

/// Flux of every stored face in its stored orientation.
pub fn face_fluxes(t: &WeightedTriangulation, alpha: &impl EdgePotential) -> Vec<f64> {
    (0..t.num_faces())
        .map(|f| {
            t.face_sides(f)
                .iter()
                .map(|&(e, sign)| alpha.alpha(e, sign > 0.0))
                .sum()
        })
        .collect()
}

/// Decides whether α has trivial holonomy.
///
/// Integrates α along a breadth-first spanning tree rooted at the smallest
/// vertex (where the witness is 0), then checks that every edge closes up
/// to `tol`. Returns the witness `f` with d⁰f = α, or `None`.
pub fn is_trivial(t: &WeightedTriangulation, alpha: &MagneticPotential, tol: f64) -> Result<Option<GaugeFunction>> {
    let n = t.num_vertices();
    if n == 0 {
        return Ok(Some(GaugeFunction::zeros(t)));
    }
    let mut f: Vec<Option<f64>> = vec![None; n];
    let mut queue = VecDeque::from([0usize]);
    f[0] = Some(0.0);
    while let Some(x) = queue.pop_front() {
        let fx = f[x].unwrap();
        for nb in t.neighbors(x) {
            if f[nb.vertex].is_none() {
                f[nb.vertex] = Some(fx + alpha.at(t, x, nb.vertex).unwrap());
                queue.push_back(nb.vertex);
            }
        }
    }
    let f: Vec<f64> = f.into_iter().collect::<Option<Vec<_>>>().ok_or(Error::Disconnected)?;
    let closes = t
        .edges()
        .iter()
        .zip(alpha.values())
        .all(|(&[x, y], &a)| (f[y] - f[x] - a).abs() <= tol);
    Ok(closes.then(|| GaugeFunction::from_values(t, f).unwrap()))
}

/// α + d⁰f.
pub fn gauge_transform_potential(
    t: &WeightedTriangulation,
    alpha: &MagneticPotential,
    f: &GaugeFunction,
) -> MagneticPotential {
    let df = difference(t, f);
    MagneticPotential {
        values: alpha.values.iter().zip(df.values()).map(|(a, d)| a + d).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::k3;
    use crate::sample::{random_complex_small, random_gauge, random_potential, rng};

    #[test]
    fn zero_potential_has_zero_holonomy() {
        let t = k3();
        let a = MagneticPotential::zeros(&t);
        assert_eq!(holonomy(&t, &a, &[0, 1, 2, 0, 1]).unwrap(), 0.0);
        assert_eq!(face_flux(&t, &a, [0, 1, 2]).unwrap(), 0.0);
    }

    #[test]
    fn triangle_holonomy_is_flux() {
        let t = k3();
        let theta = 0.7;
        let mut a = MagneticPotential::zeros(&t);
        // a→b, b→c, c→a all carry θ; edge (a,c) stores -θ.
        a.values = vec![theta, -theta, theta];
        assert!((face_flux(&t, &a, [0, 1, 2]).unwrap() - 3.0 * theta).abs() < 1e-15);
        assert!((face_flux(&t, &a, [0, 2, 1]).unwrap() + 3.0 * theta).abs() < 1e-15);
        assert_eq!(
            holonomy(&t, &a, &[0, 1, 2, 0]).unwrap(),
            face_flux(&t, &a, [0, 1, 2]).unwrap()
        );
        assert_eq!(face_fluxes(&t, &a), vec![3.0 * theta]);
        assert!(is_trivial(&t, &a, HOLONOMY_TOL).unwrap().is_none());
    }

    #[test]
    fn holonomy_errors_and_paths() {
        let t = crate::generators::gen_random(&crate::generators::RandomSpec {
            seed: 1,
            n_vertices: 6,
            edge_density: 0.0,
            ..Default::default()
        })
        .unwrap()
        .0;
        let a = MagneticPotential::zeros(&t);
        // a tree on 6 vertices always has a non-adjacent pair.
        let (x, y) = (0..6)
            .flat_map(|x| (0..6).map(move |y| (x, y)))
            .find(|&(x, y)| x != y && t.edge_between(x, y).is_none())
            .unwrap();
        assert!(matches!(holonomy(&t, &a, &[x, y]), Err(Error::NotAdjacent(..))));
        assert!(PathSpec::new(&t, vec![x, y]).is_err());
        assert!(face_flux(&t, &a, [0, 1, 2]).is_err());
    }

    #[test]
    fn holonomy_is_additive_and_odd() {
        let mut g = rng(9);
        for seed in 0..8 {
            let t = random_complex_small(seed, 10);
            let a = random_potential(&t, &mut g);
            let p = PathSpec::new(&t, walk(&t, 0, 7, seed)).unwrap();
            let end = *p.vertices().last().unwrap();
            let q = PathSpec::new(&t, walk(&t, end, 5, seed + 100)).unwrap();
            let pq = p.concat(&q).unwrap();
            let h = |p: &PathSpec| holonomy(&t, &a, p.vertices()).unwrap();
            assert!((h(&pq) - h(&p) - h(&q)).abs() < 1e-12);
            assert!((h(&p) + h(&p.reversed())).abs() < 1e-12);
            assert!(p.concat(&p.reversed()).map(|c| h(&c).abs() < 1e-12).unwrap());
        }
    }

    fn walk(t: &WeightedTriangulation, start: usize, len: usize, salt: u64) -> Vec<usize> {
        let mut v = vec![start];
        let mut x = start;
        for i in 0..len {
            let nb = t.neighbors(x);
            x = nb[(salt as usize + i * 7) % nb.len()].vertex;
            v.push(x);
        }
        v
    }

    #[test]
    fn trivial_potential_recovers_gauge() {
        let mut g = rng(21);
        for seed in 0..8 {
            let t = random_complex_small(seed, 12);
            let f = random_gauge(&t, &mut g);
            let a: MagneticPotential = difference(&t, &f).into();
            let w = is_trivial(&t, &a, HOLONOMY_TOL).unwrap().expect("exact potential");
            for x in 0..t.num_vertices() {
                let expected = f.values()[x] - f.values()[0];
                assert!((w.values()[x] - expected).abs() <= 1e-12);
            }
            let dw = difference(&t, &w);
            let max = dw
                .values()
                .iter()
                .zip(a.values())
                .map(|(p, q)| (p - q).abs())
                .fold(0.0, f64::max);
            assert!(max <= 1e-12);
        }
        let t = k3();
        let w = is_trivial(&t, &MagneticPotential::zeros(&t), HOLONOMY_TOL)
            .unwrap()
            .unwrap();
        assert_eq!(w.values(), &[0.0; 3]);
    }

    #[test]
    fn is_trivial_rejects_disconnected() {
        let t = WeightedTriangulation::builder()
            .vertex("a", 1.0)
            .vertex("b", 1.0)
            .build_unchecked()
            .unwrap();
        assert!(matches!(
            is_trivial(&t, &MagneticPotential::zeros(&t), HOLONOMY_TOL),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn gauge_transform_keeps_flux() {
        let mut g = rng(4);
        for seed in 0..8 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let f = random_gauge(&t, &mut g);
            let b = gauge_transform_potential(&t, &a, &f);
            for (p, q) in face_fluxes(&t, &a).iter().zip(face_fluxes(&t, &b)) {
                assert!((p - q).abs() <= 1e-12);
            }
            let zero = MagneticPotential::zeros(&t);
            let exact = gauge_transform_potential(&t, &zero, &f);
            assert!(face_fluxes(&t, &exact).iter().all(|v| v.abs() <= 1e-12));
        }
        let t = k3();
        let a = MagneticPotential {
            values: vec![0.1, 0.2, 0.3],
        };
        let same = gauge_transform_potential(&t, &a, &GaugeFunction::constant(&t, 4.0));
        assert_eq!(same, a);
    }
}
