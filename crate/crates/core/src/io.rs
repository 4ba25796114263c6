//! JSON documents for weighted magnetic triangulations.
//!
//! ```json
//! { "vertices": [ {"id": "a", "c": 1} ],
//!   "edges":    [ {"u": "a", "v": "b", "r": 1, "alpha": 0.5} ],
//!   "faces":    [ {"verts": ["a", "b", "c"], "s": 1} ] }
//! ```
//!
//! `alpha` is the potential on the edge oriented u → v and defaults to 0.
//! An edge may appear in both orientations if weight and potential agree
//! (α(v,u) = −α(u,v)). Saved documents are canonical: vertices sorted by
//! id, edges with u < v in lexicographic order, faces rotated to their
//! smallest id and sorted, numbers with 17 significant digits.

use std::collections::HashMap;
use std::io::{self, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};

use crate::complex::{VertexId, WeightedTriangulation};
use crate::error::{Error, Result};
use crate::field::MagneticPotential;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDoc {
    pub id: String,
    pub c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub u: String,
    pub v: String,
    pub r: f64,
    #[serde(default)]
    pub alpha: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceDoc {
    pub verts: [String; 3],
    pub s: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub vertices: Vec<VertexDoc>,
    #[serde(default)]
    pub edges: Vec<EdgeDoc>,
    #[serde(default)]
    pub faces: Vec<FaceDoc>,
}

impl Document {
    /// Canonical document of a complex and potential.
    pub fn from_complex(t: &WeightedTriangulation, alpha: &MagneticPotential) -> Self {
        let id = |x: usize| t.vertex_id(x).as_str().to_owned();
        Document {
            vertices: (0..t.num_vertices())
                .map(|x| VertexDoc {
                    id: id(x),
                    c: t.vertex_weight(x),
                })
                .collect(),
            edges: t
                .edges()
                .iter()
                .enumerate()
                .map(|(e, &[x, y])| EdgeDoc {
                    u: id(x),
                    v: id(y),
                    r: t.edge_weight(e),
                    alpha: alpha.values()[e],
                })
                .collect(),
            faces: t
                .faces()
                .iter()
                .enumerate()
                .map(|(f, &[a, b, c])| FaceDoc {
                    verts: [id(a), id(b), id(c)],
                    s: t.face_weight(f),
                })
                .collect(),
        }
    }

    /// Builds the complex without validation; structural problems
    /// (duplicates, unknown ids, inconsistent orientations) are still errors.
    pub fn to_complex_unchecked(&self) -> Result<(WeightedTriangulation, MagneticPotential)> {
        // canonical (min id, max id) -> (r, α on min → max, seen forward, seen backward)
        let mut merged: HashMap<(String, String), (f64, f64, bool, bool)> = HashMap::new();
        let mut order = Vec::new();
        for e in &self.edges {
            let forward = e.u <= e.v;
            let (key, a) = if forward {
                ((e.u.clone(), e.v.clone()), e.alpha)
            } else {
                ((e.v.clone(), e.u.clone()), -e.alpha)
            };
            match merged.get_mut(&key) {
                None => {
                    merged.insert(key.clone(), (e.r, a, forward, !forward));
                    order.push(key);
                }
                Some(entry) => {
                    let seen = if forward { &mut entry.2 } else { &mut entry.3 };
                    let dup = || Error::DuplicateEdge(VertexId::new(&e.u), VertexId::new(&e.v));
                    if *seen {
                        return Err(dup());
                    }
                    *seen = true;
                    if entry.0 != e.r {
                        return Err(Error::SkewSymmetry(VertexId::new(&e.u), VertexId::new(&e.v), "weight"));
                    }
                    if entry.1 != a {
                        return Err(Error::SkewSymmetry(VertexId::new(&e.u), VertexId::new(&e.v), "alpha"));
                    }
                }
            }
        }

        let mut b = WeightedTriangulation::builder();
        for v in &self.vertices {
            b.vertex(v.id.as_str(), v.c);
        }
        for key in &order {
            b.edge(key.0.as_str(), key.1.as_str(), merged[key].0);
        }
        for f in &self.faces {
            b.face(f.verts[0].as_str(), f.verts[1].as_str(), f.verts[2].as_str(), f.s);
        }
        let t = b.build_unchecked()?;
        let alpha = MagneticPotential::from_fn(&t, |x, y| {
            let key = (t.vertex_id(x).as_str().to_owned(), t.vertex_id(y).as_str().to_owned());
            merged[&key].1
        });
        Ok((t, alpha))
    }

    /// Builds and validates.
    pub fn to_complex(&self) -> Result<(WeightedTriangulation, MagneticPotential)> {
        let (t, alpha) = self.to_complex_unchecked()?;
        let violations = t.validate();
        if violations.is_empty() {
            Ok((t, alpha))
        } else {
            Err(Error::Invalid(violations))
        }
    }

    /// Equivalent document in canonical form.
    pub fn canonicalize(&self) -> Result<Document> {
        let (t, alpha) = self.to_complex_unchecked()?;
        Ok(Document::from_complex(&t, &alpha))
    }

    pub fn parse(text: &str) -> Result<Document> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn write_to<W: Write>(&self, out: W) -> Result<()> {
        write_json(out, self)
    }

    pub fn to_json_string(&self) -> String {
        to_json_string(self)
    }
}

pub fn parse_str(text: &str) -> Result<(WeightedTriangulation, MagneticPotential)> {
    Document::parse(text)?.to_complex()
}

pub fn load(path: impl AsRef<Path>) -> Result<(WeightedTriangulation, MagneticPotential)> {
    parse_str(&std::fs::read_to_string(path)?)
}

pub fn save(path: impl AsRef<Path>, t: &WeightedTriangulation, alpha: &MagneticPotential) -> Result<()> {
    let mut file = io::BufWriter::new(std::fs::File::create(path)?);
    Document::from_complex(t, alpha).write_to(&mut file)?;
    file.flush()?;
    Ok(())
}

/// Formats like C's `%.17g`, which round-trips every finite double.
pub fn format_g17(x: f64) -> String {
    if !x.is_finite() {
        return "null".into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let digits: String = mantissa.chars().filter(|c| *c != '.').collect();
    if !(-4..17).contains(&exp) {
        let mut m = format!("{}.{}", &digits[..1], &digits[1..]);
        trim_fraction(&mut m);
        let esign = if exp < 0 { '-' } else { '+' };
        return format!("{sign}{m}e{esign}{:02}", exp.abs());
    }
    let mut s = if exp >= 0 {
        let split = exp as usize + 1;
        format!("{}.{}", &digits[..split], &digits[split..])
    } else {
        format!("0.{}{}", "0".repeat((-exp - 1) as usize), digits)
    };
    trim_fraction(&mut s);
    format!("{sign}{s}")
}

fn trim_fraction(s: &mut String) {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
}

/// Pretty-printing JSON formatter that writes floats with [`format_g17`].
#[derive(Debug, Default)]
pub struct G17Formatter(PrettyFormatter<'static>);

impl Formatter for G17Formatter {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        w.write_all(format_g17(value).as_bytes())
    }

    fn write_f32<W: ?Sized + Write>(&mut self, w: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(w, value as f64)
    }

    fn begin_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_array(w)
    }

    fn end_array<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array(w)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_array_value(w)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object(w)
    }

    fn end_object<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object(w)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.begin_object_value(w)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
        self.0.end_object_value(w)
    }
}

/// Pretty JSON with 17-significant-digit floats and a trailing newline.
pub fn write_json<W: Write, T: Serialize + ?Sized>(mut out: W, value: &T) -> Result<()> {
    let mut ser = serde_json::Serializer::with_formatter(&mut out, G17Formatter::default());
    value.serialize(&mut ser)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn to_json_string<T: Serialize + ?Sized>(value: &T) -> String {
    let mut buf = Vec::new();
    write_json(&mut buf, value).expect("in-memory JSON");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_random, RandomSpec};

    const K3: &str = r#"{
  "vertices": [
    {"id": "a", "c": 1},
    {"id": "b", "c": 1},
    {"id": "c", "c": 1}
  ],
  "edges": [
    {"u": "a", "v": "b", "r": 1, "alpha": 0.5},
    {"u": "a", "v": "c", "r": 1},
    {"u": "b", "v": "c", "r": 1, "alpha": -0.25}
  ],
  "faces": [
    {"verts": ["a", "b", "c"], "s": 1}
  ]
}"#;

    #[test]
    fn loads_k3() {
        let (t, a) = parse_str(K3).unwrap();
        assert_eq!((t.num_vertices(), t.num_edges(), t.num_faces()), (3, 3, 1));
        assert_eq!(a.values(), &[0.5, 0.0, -0.25]);
    }

    #[test]
    fn duplicate_edge_is_an_error() {
        let doc = K3.replace(
            r#"{"u": "a", "v": "c", "r": 1}"#,
            r#"{"u": "a", "v": "b", "r": 1, "alpha": 0.5}"#,
        );
        assert!(matches!(parse_str(&doc), Err(Error::DuplicateEdge(..))));
    }

    #[test]
    fn reversed_edges_merge_or_conflict() {
        let extra = r#"{"u": "b", "v": "a", "r": 1, "alpha": -0.5},
    {"u": "a", "v": "c", "r": 1}"#;
        let doc = K3.replace(r#"{"u": "a", "v": "c", "r": 1}"#, extra);
        let (t, a) = parse_str(&doc).unwrap();
        assert_eq!(t.num_edges(), 3);
        assert_eq!(a.values()[0], 0.5);

        let bad = doc.replace("\"alpha\": -0.5", "\"alpha\": 0.5");
        assert!(matches!(parse_str(&bad), Err(Error::SkewSymmetry(_, _, "alpha"))));
        let bad = doc.replace(r#""r": 1, "alpha": -0.5"#, r#""r": 2, "alpha": -0.5"#);
        assert!(matches!(parse_str(&bad), Err(Error::SkewSymmetry(_, _, "weight"))));
    }

    #[test]
    fn reversed_edge_flips_alpha() {
        let doc = K3.replace(
            r#""u": "b", "v": "c", "r": 1, "alpha": -0.25"#,
            r#""u": "c", "v": "b", "r": 1, "alpha": -0.25"#,
        );
        let (_, a) = parse_str(&doc).unwrap();
        assert_eq!(a.values()[2], 0.25);
    }

    #[test]
    fn invalid_documents() {
        assert!(matches!(parse_str("{"), Err(Error::Json(_))));
        let zero = K3.replace(r#"{"id": "b", "c": 1}"#, r#"{"id": "b", "c": 0}"#);
        assert!(matches!(parse_str(&zero), Err(Error::Invalid(_))));
        let unknown = K3.replace(r#""s": 1"#, r#""s": 1, "t": 2"#);
        assert!(parse_str(&unknown).is_err());
    }

    #[test]
    fn canonical_round_trip_is_byte_identical() {
        let (t, a) = gen_random(&RandomSpec {
            seed: 3,
            ..Default::default()
        })
        .unwrap();
        let text = Document::from_complex(&t, &a).to_json_string();
        let (t2, a2) = parse_str(&text).unwrap();
        assert_eq!(a2.values(), a.values());
        assert_eq!(t2.edges(), t.edges());
        assert_eq!(Document::from_complex(&t2, &a2).to_json_string(), text);
        let canon = Document::parse(K3).unwrap().canonicalize().unwrap().to_json_string();
        assert_eq!(
            Document::parse(&canon)
                .unwrap()
                .canonicalize()
                .unwrap()
                .to_json_string(),
            canon
        );
    }

    #[test]
    fn face_rotation_in_canonical_form() {
        let doc = K3.replace(r#"["a", "b", "c"]"#, r#"["c", "b", "a"]"#);
        let canon = Document::parse(&doc).unwrap().canonicalize().unwrap();
        assert_eq!(canon.faces[0].verts, ["a".to_string(), "c".into(), "b".into()]);
    }

    #[test]
    fn g17_matches_c_printf() {
        let cases = [
            (1.0, "1"),
            (0.1, "0.10000000000000001"),
            (-2.5, "-2.5"),
            (1e-5, "1.0000000000000001e-05"),
            (1.5e-4, "0.00014999999999999999"),
            (1e17, "1e+17"),
            (12345678901234567.0, "12345678901234568"),
            (std::f64::consts::PI, "3.1415926535897931"),
            (0.0, "0"),
            (f64::NAN, "null"),
        ];
        for (x, want) in cases {
            assert_eq!(format_g17(x), want, "{x}");
        }
    }

    #[test]
    fn g17_round_trips() {
        let mut g = crate::sample::rng(11);
        use rand::Rng;
        for _ in 0..2000 {
            let x: f64 = f64::from_bits(g.random::<u64>());
            if x.is_finite() {
                assert_eq!(format_g17(x).parse::<f64>().unwrap(), x);
            }
        }
    }
}
