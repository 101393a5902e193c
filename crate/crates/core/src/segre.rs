//! The `(10₄, 15₆)` configuration cut out on an elliptic quintic scroll by
//! the ten nodes of a Segre cubic.
//!
//! Points are the 2-subsets `e·e'` of a 5-element set `D`. There are two
//! kinds of planes: `Π_e`, containing the four points through `e`, and
//! `Π_{e·e'}`, containing `e·e'` and the three points of `D ∖ {e, e'}`.

use std::collections::{BTreeSet, HashMap};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneKind {
    A(usize),
    B(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plane {
    pub kind: PlaneKind,
    /// Indices into [`IncidenceStructure::points`], ascending.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    labels: Vec<String>,
    points: Vec<(usize, usize)>,
    planes: Vec<Plane>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Meet {
    Point,
    Line,
}

pub const POINT_COUNT: usize = 10;
pub const PLANE_COUNT: usize = 15;
pub const POINTS_PER_PLANE: usize = 4;
pub const PLANES_PER_POINT: usize = 6;

fn check_labels<S: AsRef<str>>(labels: &[S]) -> Result<Vec<String>> {
    if labels.len() != 5 {
        return Err(Error::InvalidLabels(format!("need exactly 5 labels, got {}", labels.len())));
    }
    let out: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    if out.iter().any(String::is_empty) {
        return Err(Error::InvalidLabels("empty label".into()));
    }
    let distinct: BTreeSet<&String> = out.iter().collect();
    if distinct.len() != out.len() {
        return Err(Error::InvalidLabels("labels must be distinct".into()));
    }
    Ok(out)
}

/// Build the configuration on five distinct labels.
pub fn segre_configuration<S: AsRef<str>>(labels: &[S]) -> Result<IncidenceStructure> {
    let labels = check_labels(labels)?;
    let n = labels.len();
    let points: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let on = |p: &(usize, usize), e: usize| p.0 == e || p.1 == e;
    let mut planes = vec![];
    for e in 0..n {
        let members = (0..points.len()).filter(|&i| on(&points[i], e)).collect();
        planes.push(Plane { kind: PlaneKind::A(e), members });
    }
    for (pi, &(a, b)) in points.iter().enumerate() {
        let members = (0..points.len())
            .filter(|&i| i == pi || (!on(&points[i], a) && !on(&points[i], b)))
            .collect();
        planes.push(Plane { kind: PlaneKind::B(a, b), members });
    }
    let cfg = IncidenceStructure { labels, points, planes };
    cfg.validate()?;
    Ok(cfg)
}

impl IncidenceStructure {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn points(&self) -> &[(usize, usize)] {
        &self.points
    }

    pub fn planes(&self) -> &[Plane] {
        &self.planes
    }

    pub fn point_name(&self, i: usize) -> String {
        let (a, b) = self.points[i];
        format!("{}·{}", self.labels[a], self.labels[b])
    }

    pub fn plane_name(&self, i: usize) -> String {
        match self.planes[i].kind {
            PlaneKind::A(e) => format!("Π_{}", self.labels[e]),
            PlaneKind::B(a, b) => format!("Π_{}·{}", self.labels[a], self.labels[b]),
        }
    }

    pub fn point_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.points.iter().position(|&p| p == key)
    }

    pub fn plane_index(&self, kind: PlaneKind) -> Option<usize> {
        let kind = match kind {
            PlaneKind::B(a, b) => PlaneKind::B(a.min(b), a.max(b)),
            k => k,
        };
        self.planes.iter().position(|p| p.kind == kind)
    }

    /// Indices of the planes containing point `p`.
    pub fn planes_through(&self, p: usize) -> Vec<usize> {
        (0..self.planes.len()).filter(|&i| self.planes[i].members.binary_search(&p).is_ok()).collect()
    }

    /// Well-formedness plus the `(10₄, 15₆)` counts.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidIncidence(m));
        let n = self.labels.len();
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.points {
            if a >= n || b >= n || a >= b {
                return bad(format!("point ({a}, {b}) is not a 2-subset of the labels"));
            }
            if !seen.insert((a, b)) {
                return bad(format!("duplicate point {}", self.point_name_raw(a, b)));
            }
        }
        let mut kinds = BTreeSet::new();
        for pl in &self.planes {
            match pl.kind {
                PlaneKind::A(e) if e < n => {}
                PlaneKind::B(a, b) if a < b && b < n => {}
                k => return bad(format!("plane index {k:?} out of range")),
            }
            if !kinds.insert(pl.kind) {
                return bad(format!("duplicate plane {:?}", pl.kind));
            }
            if pl.members.windows(2).any(|w| w[0] >= w[1]) {
                return bad("plane members must be distinct and ascending".into());
            }
            if pl.members.iter().any(|&m| m >= self.points.len()) {
                return bad("plane member out of range".into());
            }
        }
        if self.points.len() != POINT_COUNT {
            return bad(format!("{} points, expected {POINT_COUNT}", self.points.len()));
        }
        if self.planes.len() != PLANE_COUNT {
            return bad(format!("{} planes, expected {PLANE_COUNT}", self.planes.len()));
        }
        for (i, pl) in self.planes.iter().enumerate() {
            if pl.members.len() != POINTS_PER_PLANE {
                return bad(format!("plane {i} has {} points", pl.members.len()));
            }
        }
        for p in 0..self.points.len() {
            let k = self.planes_through(p).len();
            if k != PLANES_PER_POINT {
                return bad(format!("point {p} lies on {k} planes"));
            }
        }
        Ok(())
    }

    fn point_name_raw(&self, a: usize, b: usize) -> String {
        format!("{}·{}", self.labels[a], self.labels[b])
    }

    /// The configuration points shared by two distinct planes, and whether
    /// the planes meet in a point or a line.
    pub fn plane_meet(&self, p: usize, q: usize) -> Result<(BTreeSet<usize>, Meet)> {
        if p == q {
            return Err(Error::SamePlane);
        }
        let n = self.planes.len();
        if p >= n || q >= n {
            return Err(Error::InvalidIncidence(format!("plane index out of range (have {n})")));
        }
        let a: BTreeSet<usize> = self.planes[p].members.iter().copied().collect();
        let shared: BTreeSet<usize> =
            self.planes[q].members.iter().copied().filter(|m| a.contains(m)).collect();
        match shared.len() {
            0 => Err(Error::DisjointPlanes(p, q)),
            1 => Ok((shared, Meet::Point)),
            _ => Ok((shared, Meet::Line)),
        }
    }

    /// Split the six planes through `p` into two triples such that planes in
    /// the same triple meet only at `p` and planes from different triples
    /// meet in a line. Found by brute force; `None` if no split exists.
    pub fn point_partition(&self, p: usize) -> Option<([usize; 3], [usize; 3])> {
        let through = self.planes_through(p);
        if through.len() != PLANES_PER_POINT {
            return None;
        }
        let meets = |a: usize, b: usize| self.plane_meet(a, b).ok();
        let first = through[0];
        for i in 1..through.len() {
            for j in i + 1..through.len() {
                let left = [first, through[i], through[j]];
                let rest: Vec<usize> = through.iter().copied().filter(|x| !left.contains(x)).collect();
                let right = [rest[0], rest[1], rest[2]];
                let only_p = |x: usize, y: usize| {
                    matches!(meets(x, y), Some((s, Meet::Point)) if s.len() == 1 && s.contains(&p))
                };
                let within = [left, right]
                    .iter()
                    .all(|t| only_p(t[0], t[1]) && only_p(t[0], t[2]) && only_p(t[1], t[2]));
                let across = left
                    .iter()
                    .all(|&x| right.iter().all(|&y| matches!(meets(x, y), Some((_, Meet::Line)))));
                if within && across {
                    return Some((left, right));
                }
            }
        }
        None
    }

    pub fn counts_line(&self) -> String {
        let per_plane = self.planes.first().map_or(0, |p| p.members.len());
        let per_point = if self.points.is_empty() { 0 } else { self.planes_through(0).len() };
        format!(
            "{} points / {} planes / {} per plane / {} per point",
            self.points.len(),
            self.planes.len(),
            per_plane,
            per_point
        )
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    points: Vec<[String; 2]>,
    planes: Vec<RawPlane>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawIndex {
    One(String),
    Two([String; 2]),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlane {
    kind: String,
    index: RawIndex,
    members: Vec<[String; 2]>,
}

impl Serialize for IncidenceStructure {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let pair = |i: usize| {
            let (a, b) = self.points[i];
            [self.labels[a].clone(), self.labels[b].clone()]
        };
        let raw = RawStructure {
            points: (0..self.points.len()).map(pair).collect(),
            planes: self
                .planes
                .iter()
                .map(|pl| {
                    let (kind, index) = match pl.kind {
                        PlaneKind::A(e) => ("A", RawIndex::One(self.labels[e].clone())),
                        PlaneKind::B(a, b) => {
                            ("B", RawIndex::Two([self.labels[a].clone(), self.labels[b].clone()]))
                        }
                    };
                    RawPlane { kind: kind.into(), index, members: pl.members.iter().map(|&m| pair(m)).collect() }
                })
                .collect(),
        };
        raw.serialize(ser)
    }
}

impl TryFrom<RawStructure> for IncidenceStructure {
    type Error = Error;

    fn try_from(raw: RawStructure) -> Result<Self> {
        let mut labels: Vec<String> = vec![];
        for p in &raw.points {
            for l in p {
                if !labels.contains(l) {
                    labels.push(l.clone());
                }
            }
        }
        let ids: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let label_id = |l: &str| {
            ids.get(l).copied().ok_or_else(|| Error::InvalidIncidence(format!("unknown label {l:?}")))
        };
        let mut points = vec![];
        for [a, b] in &raw.points {
            let (a, b) = (label_id(a)?, label_id(b)?);
            points.push((a.min(b), a.max(b)));
        }
        let point_id = |pair: &[String; 2]| -> Result<usize> {
            let (a, b) = (label_id(&pair[0])?, label_id(&pair[1])?);
            let key = (a.min(b), a.max(b));
            points
                .iter()
                .position(|&p| p == key)
                .ok_or_else(|| Error::InvalidIncidence(format!("member {pair:?} is not a point")))
        };
        let mut planes = vec![];
        for rp in &raw.planes {
            let kind = match (rp.kind.as_str(), &rp.index) {
                ("A", RawIndex::One(e)) => PlaneKind::A(label_id(e)?),
                ("B", RawIndex::Two([a, b])) => {
                    let (a, b) = (label_id(a)?, label_id(b)?);
                    PlaneKind::B(a.min(b), a.max(b))
                }
                (k, _) => return Err(Error::InvalidIncidence(format!("bad plane kind/index {k:?}"))),
            };
            let mut members = rp.members.iter().map(point_id).collect::<Result<Vec<usize>>>()?;
            members.sort_unstable();
            planes.push(Plane { kind, members });
        }
        let cfg = IncidenceStructure { labels, points, planes };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl<'de> Deserialize<'de> for IncidenceStructure {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawStructure::deserialize(de)?;
        IncidenceStructure::try_from(raw).map_err(D::Error::custom)
    }
}
