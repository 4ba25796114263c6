//! Example families as finite truncations, plus a seeded random generator.
//!
//! Generated vertex ids are zero-padded (`"03-007"` is vertex 7 of sphere 3)
//! so that id order, index order and sphere order agree and the origin is
//! always vertex 0.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::complex::WeightedTriangulation;
use crate::error::{Error, Result};
use crate::field::MagneticPotential;

/// A partition of the vertices into spheres S_0, S_1, … such that every
/// edge joins equal or consecutive spheres.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereDecomposition {
    spheres: Vec<Vec<usize>>,
    level: Vec<usize>,
}

impl SphereDecomposition {
    pub fn new(t: &WeightedTriangulation, spheres: Vec<Vec<usize>>) -> Result<Self> {
        let mut level = vec![usize::MAX; t.num_vertices()];
        for (n, sphere) in spheres.iter().enumerate() {
            for &x in sphere {
                if x >= level.len() || level[x] != usize::MAX {
                    return Err(Error::InvalidParameter(format!(
                        "vertex index {x} is missing or listed twice in the decomposition"
                    )));
                }
                level[x] = n;
            }
        }
        if let Some(x) = level.iter().position(|&l| l == usize::MAX) {
            return Err(Error::InvalidParameter(format!(
                "vertex {} belongs to no sphere",
                t.vertex_id(x)
            )));
        }
        for &[x, y] in t.edges() {
            if level[x].abs_diff(level[y]) > 1 {
                return Err(Error::InvalidParameter(format!(
                    "edge {},{} skips a sphere",
                    t.vertex_id(x),
                    t.vertex_id(y)
                )));
            }
        }
        Ok(SphereDecomposition { spheres, level })
    }

    pub fn spheres(&self) -> &[Vec<usize>] {
        &self.spheres
    }

    pub fn sphere(&self, n: usize) -> &[usize] {
        &self.spheres[n]
    }

    pub fn num_spheres(&self) -> usize {
        self.spheres.len()
    }

    /// Index of the sphere containing `x`.
    pub fn level(&self, x: usize) -> usize {
        self.level[x]
    }

    pub fn levels(&self) -> &[usize] {
        &self.level
    }
}

fn digits(n: usize) -> usize {
    n.max(1).to_string().len()
}

/// Zero-padded ids for sphere-structured families.
fn sphere_ids(sizes: &[usize]) -> Vec<Vec<String>> {
    let wl = digits(sizes.len().saturating_sub(1));
    let wk = digits(sizes.iter().copied().max().unwrap_or(1).saturating_sub(1));
    sizes
        .iter()
        .enumerate()
        .map(|(n, &m)| (0..m).map(|k| format!("{n:0wl$}-{k:0wk$}")).collect())
        .collect()
}

/// Index ranges of the spheres; ids are generated in sorted order.
fn sphere_ranges(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut next = 0;
    sizes
        .iter()
        .map(|&m| {
            let r: Vec<usize> = (next..next + m).collect();
            next += m;
            r
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightScheme {
    /// All weights 1.
    #[default]
    Simple,
    /// c = 1, r(x,y) = val(x)val(y)/(|x||y|), s(x,y,z) = r(x,y)r(y,z)r(z,x).
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BookLikeSpec {
    /// Index of the last sphere generated.
    pub depth: usize,
    pub beta: f64,
    pub weights: WeightScheme,
}

/// Sphere sizes S_0 ..= S_depth of the book-like family.
///
/// Odd spheres are pairs. Even sizes follow from asking every vertex of
/// S_{2n+1} to have valence ⌊(2n+1)^β⌋ + 4, i.e.
/// |S_{2n+2}| = ⌊(2n+1)^β⌋ + 3 − |S_{2n}|.
pub fn book_like_sizes(depth: usize, beta: f64) -> Result<Vec<usize>> {
    if !(beta > 0.0 && beta <= 2.0) {
        return Err(Error::InvalidParameter(format!("beta must lie in (0, 2], got {beta}")));
    }
    let mut sizes: Vec<i64> = vec![1];
    for level in 1..=depth {
        let size = if level % 2 == 1 {
            2
        } else {
            let n = (level - 2) / 2;
            ((2 * n + 1) as f64).powf(beta).floor() as i64 + 3 - sizes[level - 2]
        };
        if size < 1 {
            return Err(Error::SphereSize { level, size });
        }
        sizes.push(size);
    }
    Ok(sizes.into_iter().map(|s| s as usize).collect())
}

/// Book-like triangulation with origin, truncated after sphere `depth`.
///
/// Each even-sphere vertex is joined to both vertices of each neighbouring
/// odd sphere, and (p, q, z) is a face for the odd pair (p, q) and every z
/// in the neighbouring even spheres that were generated. α is zero.
pub fn gen_book_like(spec: &BookLikeSpec) -> Result<(WeightedTriangulation, MagneticPotential, SphereDecomposition)> {
    let sizes = book_like_sizes(spec.depth, spec.beta)?;
    let ids = sphere_ids(&sizes);
    let spheres = sphere_ranges(&sizes);

    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut faces: Vec<[usize; 3]> = Vec::new();
    for odd in (1..sizes.len()).step_by(2) {
        let (p, q) = (spheres[odd][0], spheres[odd][1]);
        edges.push((p, q));
        let mut even = spheres[odd - 1].clone();
        if odd + 1 < sizes.len() {
            even.extend_from_slice(&spheres[odd + 1]);
        }
        for z in even {
            edges.push((p, z));
            edges.push((q, z));
            faces.push([p, q, z]);
        }
    }

    let flat: Vec<&String> = ids.iter().flatten().collect();
    let mut val = vec![0usize; flat.len()];
    for &(a, b) in &edges {
        val[a] += 1;
        val[b] += 1;
    }
    let mut level = vec![0usize; flat.len()];
    for (n, s) in spheres.iter().enumerate() {
        for &x in s {
            level[x] = n;
        }
    }
    let r = |a: usize, b: usize| match spec.weights {
        WeightScheme::Simple => 1.0,
        WeightScheme::Beta => {
            // |x| = 0 at the origin; 1 is used in its place
            let na = level[a].max(1) as f64;
            let nb = level[b].max(1) as f64;
            (val[a] * val[b]) as f64 / (na * nb)
        }
    };

    let mut b = WeightedTriangulation::builder();
    for id in &flat {
        b.vertex(id.as_str(), 1.0);
    }
    for &(x, y) in &edges {
        b.edge(flat[x].as_str(), flat[y].as_str(), r(x, y));
    }
    for &[x, y, z] in &faces {
        let s = match spec.weights {
            WeightScheme::Simple => 1.0,
            WeightScheme::Beta => r(x, y) * r(y, z) * r(z, x),
        };
        b.face(flat[x].as_str(), flat[y].as_str(), flat[z].as_str(), s);
    }
    let t = b.build()?;
    let alpha = MagneticPotential::zeros(&t);
    let dec = SphereDecomposition::new(&t, spheres)?;
    Ok((t, alpha, dec))
}

/// Edges inside one sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntraRule {
    #[default]
    None,
    /// Consecutive vertices of the sphere.
    Path,
    Complete,
}

/// Edges between consecutive spheres.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CrossRule {
    /// Complete bipartite.
    #[default]
    Full,
    /// Vertex k of S_n to vertex k of S_{n+1}, indices taken modulo the sizes.
    Matching,
}

/// Which 3-cycles become faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FaceRule {
    #[default]
    None,
    /// 3-cycles meeting two spheres.
    Cross,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OneDimSpec {
    pub sizes: Vec<usize>,
    pub intra: IntraRule,
    pub cross: CrossRule,
    pub faces: FaceRule,
}

/// Simple triangulation with a prescribed 1-dimensional decomposition.
pub fn gen_onedim(spec: &OneDimSpec) -> Result<(WeightedTriangulation, SphereDecomposition)> {
    if spec.sizes.is_empty() || spec.sizes.contains(&0) {
        return Err(Error::InvalidParameter(
            "sphere sizes must be non-empty and positive".into(),
        ));
    }
    let ids = sphere_ids(&spec.sizes);
    let spheres = sphere_ranges(&spec.sizes);
    let flat: Vec<&String> = ids.iter().flatten().collect();

    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for s in &spheres {
        match spec.intra {
            IntraRule::None => {}
            IntraRule::Path => edges.extend(s.windows(2).map(|w| (w[0], w[1]))),
            IntraRule::Complete => {
                for (i, &x) in s.iter().enumerate() {
                    edges.extend(s[i + 1..].iter().map(|&y| (x, y)));
                }
            }
        }
    }
    for w in spheres.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        match spec.cross {
            CrossRule::Full => {
                for &x in a {
                    edges.extend(b.iter().map(|&y| (x, y)));
                }
            }
            CrossRule::Matching => {
                for k in 0..a.len().max(b.len()) {
                    edges.insert((a[k % a.len()], b[k % b.len()]));
                }
            }
        }
    }

    let mut level = vec![0usize; flat.len()];
    for (n, s) in spheres.iter().enumerate() {
        for &x in s {
            level[x] = n;
        }
    }
    let faces: Vec<[usize; 3]> = match spec.faces {
        FaceRule::None => Vec::new(),
        rule => three_cycles(flat.len(), &edges)
            .into_iter()
            .filter(|&[x, _, z]| rule == FaceRule::All || level[x] != level[z])
            .collect(),
    };

    let mut b = WeightedTriangulation::builder();
    for id in &flat {
        b.vertex(id.as_str(), 1.0);
    }
    for &(x, y) in &edges {
        b.edge(flat[x].as_str(), flat[y].as_str(), 1.0);
    }
    for &[x, y, z] in &faces {
        b.face(flat[x].as_str(), flat[y].as_str(), flat[z].as_str(), 1.0);
    }
    let t = b.build()?;
    let dec = SphereDecomposition::new(&t, spheres)?;
    Ok((t, dec))
}

/// All 3-cycles `[x, y, z]` with x < y < z, in lexicographic order.
fn three_cycles(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<[usize; 3]> {
    let mut adj = vec![BTreeSet::new(); n];
    for &(x, y) in edges {
        adj[x].insert(y);
        adj[y].insert(x);
    }
    let mut out = Vec::new();
    for x in 0..n {
        for &y in adj[x].range(x + 1..) {
            for &z in adj[y].range(y + 1..) {
                if adj[x].contains(&z) {
                    out.push([x, y, z]);
                }
            }
        }
    }
    out
}

/// Divided degrees of a decomposition, indexed by sphere.
///
/// η±_n: max number of neighbours in S_{n±1} of a vertex of S_n.
/// β±_n: max |F_e| over edges e from S_n to S_{n±1}.
/// γ±_n: max number of faces over an edge inside S_n with apex in S_{n±1}.
/// Maxima over empty sets are 0.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct DividedDegrees {
    pub eta_plus: Vec<usize>,
    pub eta_minus: Vec<usize>,
    pub beta_plus: Vec<usize>,
    pub beta_minus: Vec<usize>,
    pub gamma_plus: Vec<usize>,
    pub gamma_minus: Vec<usize>,
    /// ξ(n, n+1) = η+_n + η−_{n+1} + β+_n + γ+_n + γ−_{n+1}, for n + 1 < #spheres.
    pub xi: Vec<usize>,
    /// Partial sums of 1/√ξ(n, n+1).
    pub partial_sums: Vec<f64>,
}

pub fn divided_degrees(t: &WeightedTriangulation, dec: &SphereDecomposition) -> DividedDegrees {
    let m = dec.num_spheres();
    let mut d = DividedDegrees {
        eta_plus: vec![0; m],
        eta_minus: vec![0; m],
        beta_plus: vec![0; m],
        beta_minus: vec![0; m],
        gamma_plus: vec![0; m],
        gamma_minus: vec![0; m],
        ..Default::default()
    };
    for x in 0..t.num_vertices() {
        let n = dec.level(x);
        let (mut up, mut down) = (0, 0);
        for nb in t.neighbors(x) {
            match dec.level(nb.vertex) {
                l if l == n + 1 => up += 1,
                l if l + 1 == n => down += 1,
                _ => {}
            }
        }
        d.eta_plus[n] = d.eta_plus[n].max(up);
        d.eta_minus[n] = d.eta_minus[n].max(down);
    }
    for (e, &[x, y]) in t.edges().iter().enumerate() {
        let (lx, ly) = (dec.level(x), dec.level(y));
        let nf = t.edge_faces(e).len();
        if lx == ly {
            let (mut up, mut down) = (0, 0);
            for ef in t.edge_faces(e) {
                match dec.level(ef.apex) {
                    l if l == lx + 1 => up += 1,
                    l if l + 1 == lx => down += 1,
                    _ => {}
                }
            }
            d.gamma_plus[lx] = d.gamma_plus[lx].max(up);
            d.gamma_minus[lx] = d.gamma_minus[lx].max(down);
        } else {
            let (lo, hi) = (lx.min(ly), lx.max(ly));
            d.beta_plus[lo] = d.beta_plus[lo].max(nf);
            d.beta_minus[hi] = d.beta_minus[hi].max(nf);
        }
    }
    let mut acc = 0.0;
    for n in 0..m.saturating_sub(1) {
        let xi = d.eta_plus[n] + d.eta_minus[n + 1] + d.beta_plus[n] + d.gamma_plus[n] + d.gamma_minus[n + 1];
        d.xi.push(xi);
        acc += 1.0 / (xi as f64).sqrt();
        d.partial_sums.push(acc);
    }
    d
}

/// α(x, y) = (|x| − |y|)·π with |x| the sphere index.
pub fn potential_sphere_pi(t: &WeightedTriangulation, dec: &SphereDecomposition) -> MagneticPotential {
    MagneticPotential::from_fn(t, |x, y| (dec.level(x) as f64 - dec.level(y) as f64) * PI)
}

/// A path of hubs h_0 − h_1 − … − h_levels where hub h_n carries 2^n
/// pendant leaves. Vertex degrees grow exponentially with the distance from
/// h_0 (vertex 0). No faces; all weights 1.
pub fn gen_star_chain(levels: usize) -> Result<WeightedTriangulation> {
    if levels > 20 {
        return Err(Error::InvalidParameter(format!(
            "star chain with {levels} levels is too large"
        )));
    }
    let wl = digits(levels);
    let wk = digits((1usize << levels).saturating_sub(1));
    let hub = |n: usize| format!("{n:0wl$}-h");
    let mut b = WeightedTriangulation::builder();
    for n in 0..=levels {
        b.vertex(hub(n), 1.0);
        if n > 0 {
            b.edge(hub(n - 1), hub(n), 1.0);
        }
        for k in 0..1usize << n {
            let leaf = format!("{n:0wl$}-l{k:0wk$}");
            b.vertex(leaf.as_str(), 1.0);
            b.edge(hub(n), leaf, 1.0);
        }
    }
    b.build()
}

/// Parameters of [`gen_random`].
#[derive(Debug, Clone, PartialEq)]
pub struct RandomSpec {
    pub seed: u64,
    pub n_vertices: usize,
    /// Probability that a pair outside the spanning tree becomes an edge.
    pub edge_density: f64,
    /// Probability that a 3-cycle becomes a face.
    pub face_density: f64,
    /// Range for all weights c, r and s.
    pub weight_range: (f64, f64),
    pub alpha_range: (f64, f64),
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec {
            seed: 0,
            n_vertices: 12,
            edge_density: 0.3,
            face_density: 0.5,
            weight_range: (0.5, 2.0),
            alpha_range: (-PI, PI),
        }
    }
}

fn uniform(rng: &mut SplitMix64, (lo, hi): (f64, f64)) -> f64 {
    if lo == hi {
        lo
    } else {
        rng.random_range(lo..=hi)
    }
}

/// Seeded random triangulation with potential.
///
/// The algorithm is fixed, so output is a pure function of the spec.
/// A SplitMix64 stream seeded with `seed` is consumed in this order:
/// 1. for i in 1..n, a tree edge (i, j) with j uniform in 0..i;
/// 2. for each other pair i < j in lexicographic order, one draw decides
///    whether it becomes an edge;
/// 3. for each 3-cycle x < y < z in lexicographic order, one draw decides
///    whether it is a face and, if so, one more draw picks (x,y,z) or
///    (x,z,y) as its orientation;
/// 4. weights c (vertex order), r (canonical edge order), s (face order);
/// 5. α on canonical edges.
pub fn gen_random(spec: &RandomSpec) -> Result<(WeightedTriangulation, MagneticPotential)> {
    let bad = |m: &str| Err(Error::InvalidParameter(m.to_owned()));
    if spec.n_vertices == 0 {
        return bad("n_vertices must be at least 1");
    }
    if spec.n_vertices > 5000 {
        return bad("n_vertices must be at most 5000");
    }
    for (name, d) in [("edge_density", spec.edge_density), ("face_density", spec.face_density)] {
        if !(0.0..=1.0).contains(&d) {
            return Err(Error::InvalidParameter(format!("{name} must lie in [0, 1], got {d}")));
        }
    }
    let (lo, hi) = spec.weight_range;
    if !(lo > 0.0 && lo <= hi && hi.is_finite()) {
        return bad("weight range must satisfy 0 < lo <= hi < inf");
    }
    let (alo, ahi) = spec.alpha_range;
    if !(alo <= ahi && alo.is_finite() && ahi.is_finite()) {
        return bad("alpha range must satisfy lo <= hi, both finite");
    }

    let n = spec.n_vertices;
    let mut rng = SplitMix64::seed_from_u64(spec.seed);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.insert((j, i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && rng.random::<f64>() < spec.edge_density {
                edges.insert((i, j));
            }
        }
    }
    let mut faces = Vec::new();
    for [x, y, z] in three_cycles(n, &edges) {
        if rng.random::<f64>() < spec.face_density {
            faces.push(if rng.random::<bool>() { [x, y, z] } else { [x, z, y] });
        }
    }

    let w = digits(n - 1);
    let ids: Vec<String> = (0..n).map(|i| format!("v{i:0w$}")).collect();
    let mut b = WeightedTriangulation::builder();
    for id in &ids {
        b.vertex(id.as_str(), uniform(&mut rng, spec.weight_range));
    }
    for &(x, y) in &edges {
        b.edge(ids[x].as_str(), ids[y].as_str(), uniform(&mut rng, spec.weight_range));
    }
    // face order after canonicalization is the sorted order of the rotated
    // triples; draw s in that order
    let mut keyed: Vec<[usize; 3]> = faces;
    keyed.sort_unstable();
    for &[x, y, z] in &keyed {
        b.face(
            ids[x].as_str(),
            ids[y].as_str(),
            ids[z].as_str(),
            uniform(&mut rng, spec.weight_range),
        );
    }
    let t = b.build()?;
    let alpha = MagneticPotential::from_fn(&t, |_, _| uniform(&mut rng, spec.alpha_range));
    Ok((t, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::completeness::combinatorial_distance;
    use crate::field::face_fluxes;

    fn valence(t: &WeightedTriangulation, x: usize) -> usize {
        t.neighbors(x).len()
    }

    #[test]
    fn book_like_sizes_spot_values() {
        assert_eq!(book_like_sizes(2, 1.0).unwrap(), vec![1, 2, 3]);
        let half: Vec<usize> = book_like_sizes(20, 0.5)
            .unwrap()
            .into_iter()
            .step_by(2)
            .skip(1)
            .collect();
        assert_eq!(half, vec![3, 1, 4, 1, 5, 1, 5, 1, 6, 1]);
        let two: Vec<usize> = book_like_sizes(8, 2.0)
            .unwrap()
            .into_iter()
            .step_by(2)
            .skip(1)
            .collect();
        assert_eq!(two, vec![3, 9, 19, 33]);
        assert!(book_like_sizes(4, 3.0).is_err());
        assert!(book_like_sizes(4, 0.0).is_err());
    }

    #[test]
    fn book_like_depth_three() {
        let spec = BookLikeSpec {
            depth: 3,
            beta: 1.0,
            weights: WeightScheme::Simple,
        };
        let (t, alpha, dec) = gen_book_like(&spec).unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(alpha.values().iter().copied().fold(0.0, f64::max), 0.0);
        assert_eq!(dec.sphere(0), &[0]);
        let s1 = dec.sphere(1);
        assert_eq!(s1.len(), 2);
        assert!(t.edge_between(s1[0], s1[1]).is_some());
        for &p in s1 {
            assert!(t.edge_between(0, p).is_some());
        }
        assert!(t.face_between(s1[0], s1[1], 0).is_some());
        // S_2 is independent, 3 vertices
        let s2 = dec.sphere(2);
        assert_eq!(s2.len(), 3);
        for &a in s2 {
            for &b in s2 {
                assert!(t.edge_between(a, b).is_none());
            }
        }
    }

    #[test]
    fn book_like_valences() {
        for beta in [0.5, 1.0, 2.0] {
            let depth = 20;
            let spec = BookLikeSpec {
                depth,
                beta,
                weights: WeightScheme::Simple,
            };
            let (t, _, dec) = gen_book_like(&spec).unwrap();
            for odd in (1..depth).step_by(2) {
                let n = (odd - 1) / 2;
                let want = dec.sphere(2 * n).len() + dec.sphere(2 * n + 2).len() + 1;
                let floor = ((2 * n + 1) as f64).powf(beta).floor() as usize + 4;
                for &x in dec.sphere(odd) {
                    assert_eq!(valence(&t, x), want);
                    assert_eq!(valence(&t, x), floor);
                }
            }
            for even in (2..depth).step_by(2) {
                for &x in dec.sphere(even) {
                    assert_eq!(valence(&t, x), 4);
                }
            }
            // sphere index equals combinatorial distance from the origin
            let dist = combinatorial_distance(&t, t.vertex_id(0)).unwrap();
            for x in 0..t.num_vertices() {
                assert_eq!(dist[t.vertex_id(x)], dec.level(x));
            }
        }
    }

    #[test]
    fn beta_weights() {
        let spec = BookLikeSpec {
            depth: 4,
            beta: 1.0,
            weights: WeightScheme::Beta,
        };
        let (t, _, dec) = gen_book_like(&spec).unwrap();
        let (p, q) = (dec.sphere(1)[0], dec.sphere(1)[1]);
        let z = dec.sphere(2)[0];
        let (e, _) = t.edge_between(p, q).unwrap();
        // val = ⌊1⌋ + 4 = 5 on S_1, |x| = 1
        assert_eq!(t.edge_weight(e), 25.0);
        let (e2, _) = t.edge_between(q, z).unwrap();
        assert_eq!(t.edge_weight(e2), 5.0 * 4.0 / 2.0);
        let (f, _) = t.face_between(p, q, z).unwrap();
        assert_eq!(t.face_weight(f), 25.0 * 10.0 * 10.0);
        let (e0, _) = t.edge_between(0, p).unwrap();
        assert_eq!(t.edge_weight(e0), 2.0 * 5.0);
    }

    #[test]
    fn onedim_constant_sizes() {
        let spec = OneDimSpec {
            sizes: vec![3; 6],
            intra: IntraRule::None,
            cross: CrossRule::Full,
            faces: FaceRule::All,
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        // bipartite layers have no 3-cycles
        assert_eq!(t.num_faces(), 0);
        let d = divided_degrees(&t, &dec);
        assert!(d
            .beta_plus
            .iter()
            .chain(&d.gamma_plus)
            .chain(&d.gamma_minus)
            .all(|&v| v == 0));
        assert_eq!(d.xi, vec![3 + 3; 5]);

        let spec = OneDimSpec {
            intra: IntraRule::Path,
            faces: FaceRule::Cross,
            ..spec
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        let d = divided_degrees(&t, &dec);
        // interior: η± = 3, β+ = faces over a cross edge, γ± = 3
        let xi = d.xi[2];
        assert!(d.xi[1..4].iter().all(|&v| v == xi));
        let inc: Vec<f64> = d.partial_sums.windows(2).map(|w| w[1] - w[0]).collect();
        assert!((inc[1] - 1.0 / (xi as f64).sqrt()).abs() < 1e-15);
    }

    // Direct enumeration of η, β, γ on a book-like complex.
    #[test]
    fn divided_degrees_on_book_like() {
        let spec = BookLikeSpec {
            depth: 6,
            beta: 1.0,
            weights: WeightScheme::Simple,
        };
        let (t, _, dec) = gen_book_like(&spec).unwrap();
        let d = divided_degrees(&t, &dec);
        // odd vertex in S_1: neighbours 1 in S_0, |S_2| in S_2
        assert_eq!(d.eta_minus[1], 1);
        assert_eq!(d.eta_plus[1], dec.sphere(2).len());
        // even vertex: 2 neighbours per adjacent odd sphere
        assert_eq!(d.eta_plus[2], 2);
        assert_eq!(d.eta_minus[2], 2);
        // cross edge p-z lies in exactly one face (p, q, z)
        assert_eq!(d.beta_plus[2], 1);
        assert_eq!(d.beta_minus[1], 1);
        // the odd pair edge carries every adjacent even vertex as apex
        assert_eq!(d.gamma_minus[3], dec.sphere(2).len());
        assert_eq!(d.gamma_plus[3], dec.sphere(4).len());
        assert_eq!(d.gamma_plus[2], 0);
    }

    #[test]
    fn sphere_pi_potential() {
        let spec = OneDimSpec {
            sizes: vec![1, 2, 3, 4],
            intra: IntraRule::Path,
            cross: CrossRule::Full,
            faces: FaceRule::Cross,
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        let alpha = potential_sphere_pi(&t, &dec);
        let (a, b) = (dec.sphere(2)[0], dec.sphere(2)[1]);
        assert_eq!(alpha.at(&t, a, b), Some(0.0));
        let c = dec.sphere(3)[0];
        assert_eq!(alpha.at(&t, a, c), Some(-PI));
        assert_eq!(alpha.at(&t, c, a), Some(PI));
        assert!(face_fluxes(&t, &alpha).iter().all(|&f| f == 0.0));
    }

    #[test]
    fn random_is_deterministic_and_valid() {
        let spec = RandomSpec {
            seed: 7,
            n_vertices: 40,
            ..Default::default()
        };
        let (t1, a1) = gen_random(&spec).unwrap();
        let (t2, a2) = gen_random(&spec).unwrap();
        assert_eq!(t1, t2);
        assert_eq!(a1, a2);
        assert!(t1.validate().is_empty());
        let (t3, _) = gen_random(&RandomSpec {
            seed: 8,
            ..spec.clone()
        })
        .unwrap();
        assert_ne!(t1, t3);

        let (t, _) = gen_random(&RandomSpec {
            face_density: 0.0,
            ..spec
        })
        .unwrap();
        assert_eq!(t.num_faces(), 0);
    }

    #[test]
    fn random_full_density_on_k4() {
        let spec = RandomSpec {
            n_vertices: 4,
            edge_density: 1.0,
            face_density: 1.0,
            ..Default::default()
        };
        let (t, _) = gen_random(&spec).unwrap();
        assert_eq!(t.num_edges(), 6);
        assert_eq!(t.num_faces(), 4);
    }

    #[test]
    fn random_rejects_bad_parameters() {
        for spec in [
            RandomSpec {
                n_vertices: 0,
                ..Default::default()
            },
            RandomSpec {
                edge_density: 1.5,
                ..Default::default()
            },
            RandomSpec {
                weight_range: (0.0, 1.0),
                ..Default::default()
            },
            RandomSpec {
                alpha_range: (1.0, -1.0),
                ..Default::default()
            },
        ] {
            assert!(matches!(gen_random(&spec), Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn star_chain_shape() {
        let t = gen_star_chain(4).unwrap();
        assert_eq!(t.num_vertices(), 5 + 1 + 2 + 4 + 8 + 16);
        assert!(t.validate().is_empty());
        // hub 4 has 16 leaves and one hub neighbour
        let h4 = t.vertex_index(&"4-h".into()).unwrap();
        assert_eq!(t.neighbors(h4).len(), 17);
        assert_eq!(t.vertex_id(0).as_str(), "0-h");
    }
}
