//! Audits of the completeness and curvature hypotheses on finite complexes.
//!
//! Everything here is a finite computation. Statements about sup over all
//! n, or O(n²) growth, are reported as trends over the sampled range.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{VertexId, WeightedTriangulation};
use crate::error::{Error, Result};
use crate::field::EdgePotential;
use crate::ops::stored_flux;

/// BFS distance from `origin`, by vertex index. Errors if some vertex is
/// unreachable.
pub fn distances(t: &WeightedTriangulation, origin: usize) -> Result<Vec<usize>> {
    t.bfs_distances(origin)
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::Disconnected)
}

/// |x| = d_comb(origin, x) for every vertex.
pub fn combinatorial_distance(t: &WeightedTriangulation, origin: &VertexId) -> Result<BTreeMap<VertexId, usize>> {
    let o = t.require_vertex(origin)?;
    Ok(distances(t, o)?
        .into_iter()
        .enumerate()
        .map(|(x, d)| (t.vertex_id(x).clone(), d))
        .collect())
}

/// One member of a cut-off family: the set `ball` on which `chi` is 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cutoff {
    pub n: usize,
    /// Sorted vertex indices.
    pub ball: Vec<usize>,
    pub chi: Vec<f64>,
}

impl Cutoff {
    /// Checks |χ(x) − χ(y)| ≤ 1/(n+1) on every edge in exact arithmetic.
    ///
    /// Each value must be a quotient a/(n+1) with integer a, as produced by
    /// [`canonical_cutoffs`]; the check is then |a_x − a_y| ≤ 1.
    pub fn gradient_bound_holds(&self, t: &WeightedTriangulation) -> bool {
        let k = (self.n + 1) as f64;
        let num: Option<Vec<i64>> = self
            .chi
            .iter()
            .map(|&v| {
                let a = (v * k).round();
                (a / k == v).then_some(a as i64)
            })
            .collect();
        num.is_some_and(|a| t.edges().iter().all(|&[x, y]| (a[x] - a[y]).abs() <= 1))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CutoffFamily {
    pub members: Vec<Cutoff>,
}

impl CutoffFamily {
    /// Checks 0 ≤ χ ≤ 1, χ = 1 on the ball, increasing balls. Returns
    /// whether the last ball is the whole vertex set.
    pub fn validate(&self, t: &WeightedTriangulation) -> Result<bool> {
        let bad = |m: String| Err(Error::InvalidCutoffFamily(m));
        let nv = t.num_vertices();
        let mut prev: Option<&Cutoff> = None;
        for m in &self.members {
            if m.chi.len() != nv {
                return bad(format!("member {} has {} values for {nv} vertices", m.n, m.chi.len()));
            }
            if let Some(x) = m.chi.iter().position(|&v| !(0.0..=1.0).contains(&v)) {
                return bad(format!("chi_{} at {} is outside [0, 1]", m.n, t.vertex_id(x)));
            }
            if let Some(&x) = m.ball.iter().find(|&&x| x >= nv || m.chi[x] != 1.0) {
                return bad(format!("chi_{} is not 1 on its ball (vertex index {x})", m.n));
            }
            if let Some(p) = prev {
                if !p.ball.iter().all(|x| m.ball.binary_search(x).is_ok()) {
                    return bad(format!("ball {} does not contain ball {}", m.n, p.n));
                }
            }
            prev = Some(m);
        }
        Ok(self.members.last().is_some_and(|m| m.ball.len() == nv))
    }
}

/// χ_n(x) = min(max(2 − |x|/(n+1), 0), 1) for n = 0..=n_max, with ball
/// B = {|x| ≤ n+1}. χ_n vanishes from distance 2(n+1) on.
pub fn canonical_cutoffs(t: &WeightedTriangulation, origin: usize, n_max: usize) -> Result<CutoffFamily> {
    let dist = distances(t, origin)?;
    let members = (0..=n_max)
        .map(|n| {
            let k = (n + 1) as f64;
            Cutoff {
                n,
                ball: (0..dist.len()).filter(|&x| dist[x] <= n + 1).collect(),
                // (2(n+1) − d) / (n+1), clamped; numerator kept integral
                chi: dist
                    .iter()
                    .map(|&d| (2 * (n + 1)).saturating_sub(d).min(n + 1) as f64 / k)
                    .collect(),
            }
        })
        .collect();
    Ok(CutoffFamily { members })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompletenessRow {
    pub n: usize,
    /// max_x 1/c(x) Σ_{y~x} r(x,y) |χ(x) − χ(y)|²
    pub c1: f64,
    /// max_{(x,y)} 1/r(x,y) Σ_{t∈F_xy} s |d⁰χ(t,x) + d⁰χ(t,y)|²
    pub c2: f64,
    /// same with d⁰χ(t,x) − d⁰χ(t,y)
    pub c2_minus: f64,
    /// sup deg_V over vertices touching an edge where χ varies, / (n+1)²
    pub c1_bound: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CompletenessReport {
    pub c1: f64,
    pub c2: f64,
    pub c2_minus: f64,
    /// Whether the largest ball is the whole complex.
    pub exhausts: bool,
    pub rows: Vec<CompletenessRow>,
}

pub fn chi_completeness_audit(t: &WeightedTriangulation, family: &CutoffFamily) -> Result<CompletenessReport> {
    let exhausts = family.validate(t)?;
    let mut rows = Vec::with_capacity(family.members.len());
    for m in &family.members {
        let chi = &m.chi;
        let mut c1: f64 = 0.0;
        let mut bound: f64 = 0.0;
        for x in 0..t.num_vertices() {
            let mut sum = 0.0;
            let mut varies = false;
            for nb in t.neighbors(x) {
                let d = chi[x] - chi[nb.vertex];
                varies |= d != 0.0;
                sum += t.edge_weight(nb.cell) * d * d;
            }
            c1 = c1.max(sum / t.vertex_weight(x));
            if varies {
                bound = bound.max(t.vertex_degree(x));
            }
        }
        let (mut c2, mut c2m): (f64, f64) = (0.0, 0.0);
        for (e, &[x, y]) in t.edges().iter().enumerate() {
            let (mut plus, mut minus) = (0.0, 0.0);
            for ef in t.edge_faces(e) {
                let s = t.face_weight(ef.face);
                let (dx, dy) = (chi[x] - chi[ef.apex], chi[y] - chi[ef.apex]);
                plus += s * (dx + dy).powi(2);
                minus += s * (dx - dy).powi(2);
            }
            c2 = c2.max(plus / t.edge_weight(e));
            c2m = c2m.max(minus / t.edge_weight(e));
        }
        rows.push(CompletenessRow {
            n: m.n,
            c1,
            c2,
            c2_minus: c2m,
            c1_bound: bound / ((m.n + 1) as f64).powi(2),
        });
    }
    let sup = |f: fn(&CompletenessRow) -> f64| rows.iter().map(f).fold(0.0, f64::max);
    Ok(CompletenessReport {
        c1: sup(|r| r.c1),
        c2: sup(|r| r.c2),
        c2_minus: sup(|r| r.c2_minus),
        exhausts,
        rows,
    })
}

/// Per-vertex 1/c(x) Σ_{y~x} r(x,y) sin²(α(x,y)/2), each neighbour once.
pub fn chi_alpha_obstruction<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P) -> Vec<f64> {
    (0..t.num_vertices())
        .map(|x| {
            t.neighbors(x).iter().fold(0.0, |acc, nb| {
                acc + t.edge_weight(nb.cell) * (alpha.alpha(nb.cell, true) / 2.0).sin().powi(2)
            }) / t.vertex_weight(x)
        })
        .collect()
}

/// Number of consecutive strictly increasing levels that flags an
/// unbounded obstruction trend.
pub const OBSTRUCTION_RUN: usize = 5;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ObstructionTrend {
    /// sup of the per-vertex obstruction over each distance level from the
    /// origin; the outermost level is dropped since the truncation cuts
    /// its outward neighbours
    pub per_level_sup: Vec<f64>,
    /// Longest run of consecutive levels on which the sup strictly increases.
    pub longest_increasing_run: usize,
    pub unbounded_trend: bool,
    pub note: &'static str,
}

pub fn obstruction_trend<P: EdgePotential + ?Sized>(
    t: &WeightedTriangulation,
    alpha: &P,
    origin: usize,
) -> Result<ObstructionTrend> {
    let dist = distances(t, origin)?;
    let obs = chi_alpha_obstruction(t, alpha);
    let levels = dist.iter().copied().max().unwrap_or(0);
    let mut per_level_sup = vec![0.0f64; levels];
    for (x, &d) in dist.iter().enumerate() {
        if d < levels {
            per_level_sup[d] = per_level_sup[d].max(obs[x]);
        }
    }
    let (mut best, mut run) = (usize::from(levels > 0), 1);
    for w in per_level_sup.windows(2) {
        run = if w[1] > w[0] { run + 1 } else { 1 };
        best = best.max(run);
    }
    Ok(ObstructionTrend {
        per_level_sup,
        longest_increasing_run: best,
        unbounded_trend: best >= OBSTRUCTION_RUN,
        note: TREND_NOTE,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureReport {
    /// sup_x 1/c(x) Σ_{faces ∋ x} s sin²(α̂/6)
    pub constant: f64,
    pub argmax: Option<usize>,
    pub per_vertex: Vec<f64>,
}

/// Bounded-curvature constant. Each face through x counts once, through
/// the opposite edge.
pub fn bounded_curvature_audit<P: EdgePotential + ?Sized>(t: &WeightedTriangulation, alpha: &P) -> CurvatureReport {
    let field: Vec<f64> = (0..t.num_faces())
        .map(|f| t.face_weight(f) * (stored_flux(t, alpha, f) / 6.0).sin().powi(2))
        .collect();
    let per_vertex: Vec<f64> = (0..t.num_vertices())
        .map(|x| t.vertex_faces(x).iter().fold(0.0, |acc, &f| acc + field[f]) / t.vertex_weight(x))
        .collect();
    let mut argmax = None;
    let mut constant = 0.0;
    for (x, &v) in per_vertex.iter().enumerate() {
        if argmax.is_none() || v > constant {
            constant = v;
            argmax = Some(x);
        }
    }
    CurvatureReport {
        constant,
        argmax,
        per_vertex,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeGrowthRow {
    pub n: usize,
    /// sup of deg_V over B_n = {|x| ≤ n}
    pub sup_deg_vertex: f64,
    /// sup of deg_E over edges with an endpoint in B_n
    pub sup_deg_edge: f64,
    pub ratio_vertex: f64,
    pub ratio_edge: f64,
}

/// Growth factor allowed between the two halves of the sampled range
/// before a ratio sequence is called unbounded.
pub const TREND_FACTOR: f64 = 2.0;

pub const TREND_NOTE: &str = "trend over a finite range; asymptotic growth is not decidable from a truncation";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegreeGrowthReport {
    pub rows: Vec<DegreeGrowthRow>,
    pub bounded_vertex: bool,
    pub bounded_edge: bool,
    pub bounded: bool,
    pub note: &'static str,
}

/// Whether max over the second half of `values` stays within
/// [`TREND_FACTOR`] times the max over the first half.
pub fn bounded_trend(values: &[f64]) -> bool {
    let mid = values.len() / 2;
    if mid == 0 {
        return true;
    }
    let first = values[..mid].iter().copied().fold(0.0, f64::max);
    let second = values[mid..].iter().copied().fold(0.0, f64::max);
    second <= TREND_FACTOR * first
}

/// Per-n sup of weighted degrees over balls around `origin`, divided by
/// n², for n = 1..=n_max.
pub fn degree_growth_check(t: &WeightedTriangulation, origin: usize, n_max: usize) -> Result<DegreeGrowthReport> {
    let dist = distances(t, origin)?;
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let dv = (0..t.num_vertices())
            .filter(|&x| dist[x] <= n)
            .map(|x| t.vertex_degree(x))
            .fold(0.0, f64::max);
        let de = t
            .edges()
            .iter()
            .enumerate()
            .filter(|(_, &[x, y])| dist[x] <= n || dist[y] <= n)
            .map(|(e, _)| t.edge_degree(e))
            .fold(0.0, f64::max);
        let n2 = (n * n) as f64;
        rows.push(DegreeGrowthRow {
            n,
            sup_deg_vertex: dv,
            sup_deg_edge: de,
            ratio_vertex: dv / n2,
            ratio_edge: de / n2,
        });
    }
    let rv: Vec<f64> = rows.iter().map(|r| r.ratio_vertex).collect();
    let re: Vec<f64> = rows.iter().map(|r| r.ratio_edge).collect();
    let (bounded_vertex, bounded_edge) = (bounded_trend(&rv), bounded_trend(&re));
    Ok(DegreeGrowthReport {
        rows,
        bounded_vertex,
        bounded_edge,
        bounded: bounded_vertex && bounded_edge,
        note: TREND_NOTE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::k3;
    use crate::field::{gauge_transform_potential, MagneticPotential};
    use crate::generators::{
        gen_book_like, gen_onedim, gen_star_chain, potential_sphere_pi, BookLikeSpec, CrossRule, FaceRule, IntraRule,
        OneDimSpec, WeightScheme,
    };
    use crate::sample::{random_complex, random_complex_small, random_gauge, random_potential, rng};
    use std::f64::consts::PI;

    // Brute force: shortest length over all simple paths from the origin.
    fn brute_distances(t: &WeightedTriangulation, o: usize) -> Vec<usize> {
        let n = t.num_vertices();
        let mut best = vec![usize::MAX; n];
        let mut stack = vec![(o, vec![o])];
        while let Some((x, path)) = stack.pop() {
            best[x] = best[x].min(path.len() - 1);
            for nb in t.neighbors(x) {
                if !path.contains(&nb.vertex) {
                    let mut p = path.clone();
                    p.push(nb.vertex);
                    stack.push((nb.vertex, p));
                }
            }
        }
        best
    }

    #[test]
    fn distances_match_path_enumeration() {
        for seed in 0..12 {
            let t = random_complex(seed, 8, 0.3);
            let d = distances(&t, 0).unwrap();
            assert_eq!(d, brute_distances(&t, 0));
            assert_eq!(d[0], 0);
            for &[x, y] in t.edges() {
                assert!(d[x].abs_diff(d[y]) <= 1);
            }
            let by_id = combinatorial_distance(&t, t.vertex_id(0)).unwrap();
            assert_eq!(by_id[t.vertex_id(0)], 0);
        }
        let t = k3();
        assert_eq!(combinatorial_distance(&t, &"b".into()).unwrap()[&"a".into()], 1);
    }

    #[test]
    fn distance_errors() {
        let t = WeightedTriangulation::builder()
            .vertex("a", 1.0)
            .vertex("b", 1.0)
            .build_unchecked()
            .unwrap();
        assert!(matches!(distances(&t, 0), Err(Error::Disconnected)));
        assert!(combinatorial_distance(&k3(), &"q".into()).is_err());
    }

    fn cutoff_invariants(t: &WeightedTriangulation, fam: &CutoffFamily) {
        fam.validate(t).unwrap();
        let d = distances(t, 0).unwrap();
        for m in &fam.members {
            for (x, &dist) in d.iter().enumerate() {
                if dist <= m.n + 1 {
                    assert_eq!(m.chi[x], 1.0);
                }
                if dist >= 2 * (m.n + 1) {
                    assert_eq!(m.chi[x], 0.0);
                }
            }
            assert!(m.gradient_bound_holds(t));
        }
    }

    #[test]
    fn canonical_cutoffs_invariants() {
        for seed in 0..8 {
            let t = random_complex(seed, 30, 0.05);
            let fam = canonical_cutoffs(&t, 0, 6).unwrap();
            cutoff_invariants(&t, &fam);
        }
        let (t, _, _) = gen_book_like(&BookLikeSpec {
            depth: 20,
            beta: 1.0,
            weights: WeightScheme::Simple,
        })
        .unwrap();
        let fam = canonical_cutoffs(&t, 0, 19).unwrap();
        cutoff_invariants(&t, &fam);
        assert!(fam.validate(&t).unwrap());
    }

    #[test]
    fn invalid_family_is_rejected() {
        let t = k3();
        let mut fam = canonical_cutoffs(&t, 0, 2).unwrap();
        fam.members[1].chi[2] = 1.5;
        assert!(matches!(
            chi_completeness_audit(&t, &fam),
            Err(Error::InvalidCutoffFamily(_))
        ));
        let mut fam = canonical_cutoffs(&t, 0, 2).unwrap();
        fam.members[1].ball = vec![0];
        assert!(fam.validate(&t).is_err());
        let steep = Cutoff {
            n: 1,
            ball: vec![0],
            chi: vec![1.0, 0.0, 0.5],
        };
        assert!(!steep.gradient_bound_holds(&t));
    }

    #[test]
    fn triangle_constants_vanish() {
        let t = k3();
        let fam = canonical_cutoffs(&t, 0, 3).unwrap();
        let rep = chi_completeness_audit(&t, &fam).unwrap();
        assert_eq!((rep.c1, rep.c2, rep.c2_minus), (0.0, 0.0, 0.0));
        assert!(rep.exhausts);
    }

    // Two faces (a,b,c), (b,c,d) with hand-set weights and a hand-set cut-off.
    #[test]
    fn two_face_complex_against_direct_sums() {
        let t = WeightedTriangulation::builder()
            .vertex("a", 2.0)
            .vertex("b", 1.0)
            .vertex("c", 0.5)
            .vertex("d", 1.0)
            .edge("a", "b", 1.0)
            .edge("a", "c", 2.0)
            .edge("b", "c", 3.0)
            .edge("b", "d", 1.0)
            .edge("c", "d", 0.5)
            .face("a", "b", "c", 4.0)
            .face("b", "c", "d", 2.0)
            .build()
            .unwrap();
        let chi = vec![1.0, 1.0, 0.5, 0.0];
        let fam = CutoffFamily {
            members: vec![Cutoff {
                n: 0,
                ball: vec![0, 1],
                chi,
            }],
        };
        let rep = chi_completeness_audit(&t, &fam).unwrap();
        // C1 per vertex:
        // a: (1·0 + 2·0.25)/2 = 0.25; b: (0 + 3·0.25 + 1·1)/1 = 1.75
        // c: (2·0.25 + 3·0.25 + 0.5·0.25)/0.5 = 2.75; d: (1 + 0.5·0.25)/1 = 1.125
        assert!((rep.c1 - 2.75).abs() < 1e-15);
        // C2 per edge, |χx + χy − 2χt|²:
        // ab (t=c): 4·(2−1)²/1 = 4;  ac (t=b): 4·(1.5−2)²/2 = 0.5
        // bc (t=a): 4·(1.5−2)²/3, (t=d): 2·(1.5)²/3 → (1 + 4.5)/3
        // bd (t=c): 2·(1−1)²/1 = 0;  cd (t=b): 2·(0.5−2)²/0.5 = 9
        assert!((rep.c2 - 9.0).abs() < 1e-15);
        // minus variant |χx − χy|²: ab 0; ac 4·0.25/2; bc (0.25·4 + 0.25·2)/3;
        // bd 2·1/1 = 2; cd 2·0.25/0.5 = 1
        assert!((rep.c2_minus - 2.0).abs() < 1e-15);
    }

    #[test]
    fn c1_respects_degree_bound() {
        let (t, _, _) = gen_book_like(&BookLikeSpec {
            depth: 20,
            beta: 1.0,
            weights: WeightScheme::Beta,
        })
        .unwrap();
        let rep = chi_completeness_audit(&t, &canonical_cutoffs(&t, 0, 15).unwrap()).unwrap();
        for row in &rep.rows {
            assert!(row.c1 <= row.c1_bound * (1.0 + 1e-12), "{row:?}");
        }
        for seed in 0..6 {
            let t = random_complex(seed, 25, 0.1);
            let rep = chi_completeness_audit(&t, &canonical_cutoffs(&t, 0, 5).unwrap()).unwrap();
            assert!(rep.rows.iter().all(|r| r.c1 <= r.c1_bound * (1.0 + 1e-12)));
        }
    }

    #[test]
    fn obstruction_examples() {
        let t = random_complex_small(2, 10);
        assert!(chi_alpha_obstruction(&t, &MagneticPotential::zeros(&t))
            .iter()
            .all(|&v| v == 0.0));
        let two_pi = MagneticPotential::from_fn(&t, |_, _| 2.0 * PI);
        assert!(chi_alpha_obstruction(&t, &two_pi).iter().all(|&v| v < 1e-30));

        let spec = OneDimSpec {
            sizes: vec![1, 2, 3, 4, 5],
            intra: IntraRule::Path,
            cross: CrossRule::Full,
            faces: FaceRule::Cross,
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        let obs = chi_alpha_obstruction(&t, &potential_sphere_pi(&t, &dec));
        for (x, value) in obs.iter().enumerate() {
            let cross = t
                .neighbors(x)
                .iter()
                .filter(|nb| dec.level(nb.vertex) != dec.level(x))
                .count();
            assert!((value - cross as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn obstruction_trend_on_growing_family() {
        let spec = OneDimSpec {
            sizes: (1..=9).collect(),
            intra: IntraRule::Path,
            cross: CrossRule::Full,
            faces: FaceRule::Cross,
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        let rep = obstruction_trend(&t, &potential_sphere_pi(&t, &dec), 0).unwrap();
        // cross valence |S_{n-1}| + |S_{n+1}| = 2n + 2 on interior levels
        let want: Vec<f64> = (0..8).map(|n| (2 * n + 2) as f64).collect();
        assert_eq!(rep.per_level_sup, want);
        assert_eq!(rep.longest_increasing_run, 8);
        assert!(rep.unbounded_trend);

        let rep = obstruction_trend(&k3(), &MagneticPotential::zeros(&k3()), 0).unwrap();
        assert_eq!(rep.per_level_sup, [0.0]);
        assert!(!rep.unbounded_trend);
    }

    #[test]
    fn curvature_examples() {
        let t = k3();
        let rep = bounded_curvature_audit(&t, &MagneticPotential::zeros(&t));
        assert_eq!(rep.constant, 0.0);
        let a = MagneticPotential::from_values(&t, vec![PI, -PI, PI]).unwrap();
        let rep = bounded_curvature_audit(&t, &a);
        assert!((rep.constant - 1.0).abs() < 1e-15);
        assert_eq!(rep.per_vertex.len(), 3);

        let spec = OneDimSpec {
            sizes: vec![1, 3, 3, 3],
            intra: IntraRule::Path,
            cross: CrossRule::Full,
            faces: FaceRule::All,
        };
        let (t, dec) = gen_onedim(&spec).unwrap();
        assert_eq!(
            bounded_curvature_audit(&t, &potential_sphere_pi(&t, &dec)).constant,
            0.0
        );
    }

    #[test]
    fn curvature_is_gauge_invariant() {
        let mut g = rng(3);
        for seed in 0..8 {
            let t = random_complex_small(seed, 12);
            let a = random_potential(&t, &mut g);
            let b = gauge_transform_potential(&t, &a, &random_gauge(&t, &mut g));
            let (ra, rb) = (bounded_curvature_audit(&t, &a), bounded_curvature_audit(&t, &b));
            for (p, q) in ra.per_vertex.iter().zip(&rb.per_vertex) {
                assert!((p - q).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn degree_growth_examples() {
        let (t, _, _) = gen_book_like(&BookLikeSpec {
            depth: 20,
            beta: 2.0,
            weights: WeightScheme::Simple,
        })
        .unwrap();
        let rep = degree_growth_check(&t, 0, 20).unwrap();
        assert!(rep.bounded, "{:?}", rep.rows);

        let t = gen_star_chain(12).unwrap();
        let rep = degree_growth_check(&t, 0, 12).unwrap();
        assert!(!rep.bounded_vertex);

        let t = k3();
        let rep = degree_growth_check(&t, 0, 4).unwrap();
        assert!(rep.bounded);
        assert_eq!(rep.rows[3].ratio_vertex, 2.0 / 16.0);
    }

    #[test]
    fn trend_rule() {
        assert!(bounded_trend(&[1.0, 2.0, 2.0, 1.5]));
        assert!(!bounded_trend(&[1.0, 1.0, 3.0, 4.0]));
        assert!(bounded_trend(&[5.0]));
    }
}
