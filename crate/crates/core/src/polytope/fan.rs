//! Polyhedral fans in the dual space, with an exact text format.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::LatticePolytope;
use crate::error::{Error, Result};
use crate::lattice::{Covector, LatticeVector};
use crate::linalg;

/// A cone of a fan: `cone(rays) + lineality`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    /// Indices into [`Fan::rays`].
    pub rays: Vec<usize>,
    pub dim: usize,
    /// Vertex indices of the dual face (for normal fans).
    pub dual_face: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    rays: Vec<Covector>,
    lineality: Vec<Covector>,
    cones: Vec<Cone>,
    provenance: Option<LatticePolytope>,
}

impl Fan {
    pub fn normal_fan(polytope: &LatticePolytope) -> Self {
        let rank = polytope.rank();
        let mut cones: Vec<Cone> = polytope
            .face_records()
            .iter()
            .map(|fr| Cone {
                rays: fr.facets.clone(),
                dim: rank - fr.dim,
                dual_face: fr.vertices.clone(),
            })
            .collect();
        cones.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.rays.cmp(&b.rays)));
        Self {
            rank,
            rays: polytope.facet_normals(),
            lineality: polytope.lineality().to_vec(),
            cones,
            provenance: Some(polytope.clone()),
        }
    }

    /// The fan with the single cone equal to the whole space.
    pub fn whole_space(rank: usize) -> Self {
        Self {
            rank,
            rays: Vec::new(),
            lineality: (0..rank).map(|i| Covector::unit(rank, i)).collect(),
            cones: vec![Cone {
                rays: Vec::new(),
                dim: rank,
                dual_face: Vec::new(),
            }],
            provenance: None,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[Covector] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Covector] {
        &self.lineality
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn provenance(&self) -> Option<&LatticePolytope> {
        self.provenance.as_ref()
    }

    /// Cones not properly contained in another cone of the fan.
    pub fn maximal_cones(&self) -> Vec<usize> {
        (0..self.cones.len())
            .filter(|&i| {
                let a: BTreeSet<usize> = self.cones[i].rays.iter().copied().collect();
                !self.cones.iter().enumerate().any(|(j, c)| {
                    j != i
                        && c.dim > self.cones[i].dim
                        && a.iter().all(|r| c.rays.contains(r))
                })
            })
            .collect()
    }

    /// Rays of the cone followed by `±` each lineality generator.
    pub fn generators(&self, cone: usize) -> Vec<Covector> {
        let mut out: Vec<Covector> = self.cones[cone]
            .rays
            .iter()
            .map(|&r| self.rays[r].clone())
            .collect();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(-l.clone());
        }
        out
    }

    /// Sum of the rays: a point in the relative interior of the cone.
    pub fn interior_point(&self, cone: usize) -> Covector {
        self.cones[cone]
            .rays
            .iter()
            .fold(Covector::zero(self.rank), |acc, &r| &acc + &self.rays[r])
    }

    fn cone_rank(&self, rays: &[usize]) -> usize {
        let rows: Vec<Vec<BigInt>> = rays
            .iter()
            .map(|&r| self.rays[r].0.clone())
            .chain(self.lineality.iter().map(|l| l.0.clone()))
            .collect();
        linalg::rank(&rows)
    }

    /// Facets of a full-dimensional cone, as sorted ray-index sets.
    fn cone_facets(&self, cone: &Cone) -> Vec<Vec<usize>> {
        let lin = linalg::rank(
            &self
                .lineality
                .iter()
                .map(|l| l.0.clone())
                .collect::<Vec<_>>(),
        );
        if lin == self.rank {
            return Vec::new();
        }
        let need = self.rank - 1 - lin;
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        for subset in combinations(&cone.rays, need) {
            let mut rows: Vec<Vec<BigInt>> =
                subset.iter().map(|&r| self.rays[r].0.clone()).collect();
            rows.extend(self.lineality.iter().map(|l| l.0.clone()));
            if linalg::rank(&rows) != self.rank - 1 {
                continue;
            }
            let normal = LatticeVector(linalg::cross(&rows, self.rank));
            let vals: Vec<BigInt> = cone.rays.iter().map(|&r| self.rays[r].pair(&normal)).collect();
            let pos = vals.iter().any(|v| v.is_positive());
            let neg = vals.iter().any(|v| v.is_negative());
            if pos && neg {
                continue;
            }
            let on: Vec<usize> = cone
                .rays
                .iter()
                .zip(&vals)
                .filter(|(_, v)| v.is_zero())
                .map(|(&r, _)| r)
                .collect();
            found.insert(on);
        }
        found.into_iter().collect()
    }

    /// A pure full-dimensional fan is complete iff every wall of a maximal
    /// cone lies in exactly two maximal cones.
    pub fn check_complete(&self) -> Result<()> {
        let maximal = self.maximal_cones();
        if maximal.is_empty() {
            return Err(Error::IncompleteFan("no cones".into()));
        }
        let mut walls: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &c in &maximal {
            let cone = &self.cones[c];
            if self.cone_rank(&cone.rays) != self.rank {
                return Err(Error::IncompleteFan(format!(
                    "maximal cone {c} has dimension {} < {}",
                    cone.dim, self.rank
                )));
            }
            for w in self.cone_facets(cone) {
                *walls.entry(w).or_default() += 1;
            }
        }
        if let Some((w, n)) = walls.iter().find(|(_, &n)| n != 2) {
            return Err(Error::IncompleteFan(format!(
                "wall with rays {w:?} lies in {n} maximal cone(s)"
            )));
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "RANK {}", self.rank);
        s.push_str("RAYS\n");
        for r in &self.rays {
            let _ = writeln!(s, "{}", join_ints(&r.0));
        }
        s.push_str("LINEALITY\n");
        for l in &self.lineality {
            let _ = writeln!(s, "{}", join_ints(&l.0));
        }
        s.push_str("CONES\n");
        for c in &self.cones {
            let mut line = c.dim.to_string();
            for r in &c.rays {
                let _ = write!(line, " {r}");
            }
            line.push_str(" | face:");
            for v in &c.dual_face {
                let _ = write!(line, " {v}");
            }
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            None,
            Rays,
            Lineality,
            Cones,
        }
        let bad = |line: usize, msg: &str| Error::MalformedFan(format!("line {line}: {msg}"));
        let parse_ints = |line: usize, s: &str| -> Result<Vec<BigInt>> {
            s.split_whitespace()
                .map(|t| t.parse::<BigInt>().map_err(|_| bad(line, "expected integer")))
                .collect()
        };
        let mut section = Section::None;
        let mut rank: Option<usize> = None;
        let mut rays = Vec::new();
        let mut lineality = Vec::new();
        let mut cones = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line_no = ln + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(r) = line.strip_prefix("RANK") {
                rank = Some(r.trim().parse().map_err(|_| bad(line_no, "bad rank"))?);
                continue;
            }
            match line {
                "RAYS" => section = Section::Rays,
                "LINEALITY" => section = Section::Lineality,
                "CONES" => section = Section::Cones,
                _ => match section {
                    Section::None => return Err(bad(line_no, "data before any section")),
                    Section::Rays => rays.push(Covector(parse_ints(line_no, line)?)),
                    Section::Lineality => lineality.push(Covector(parse_ints(line_no, line)?)),
                    Section::Cones => {
                        let (head, face) = line
                            .split_once('|')
                            .ok_or_else(|| bad(line_no, "missing '| face:'"))?;
                        let face = face
                            .trim()
                            .strip_prefix("face:")
                            .ok_or_else(|| bad(line_no, "missing 'face:'"))?;
                        let mut nums = head.split_whitespace().map(|t| {
                            t.parse::<usize>().map_err(|_| bad(line_no, "expected index"))
                        });
                        let dim = nums.next().ok_or_else(|| bad(line_no, "missing dimension"))??;
                        let cone_rays = nums.collect::<Result<Vec<usize>>>()?;
                        let dual_face = face
                            .split_whitespace()
                            .map(|t| t.parse::<usize>().map_err(|_| bad(line_no, "expected index")))
                            .collect::<Result<Vec<usize>>>()?;
                        cones.push(Cone {
                            rays: cone_rays,
                            dim,
                            dual_face,
                        });
                    }
                },
            }
        }
        let rank = match rank {
            Some(r) => r,
            None => rays
                .first()
                .or(lineality.first())
                .map(|r: &Covector| r.rank())
                .ok_or_else(|| Error::MalformedFan("cannot infer rank".into()))?,
        };
        for v in rays.iter().chain(&lineality) {
            if v.rank() != rank {
                return Err(Error::MalformedFan(format!("vector {v} has wrong length")));
            }
        }
        let fan = Fan {
            rank,
            rays,
            lineality,
            cones,
            provenance: None,
        };
        for (i, c) in fan.cones.iter().enumerate() {
            if let Some(&r) = c.rays.iter().find(|&&r| r >= fan.rays.len()) {
                return Err(Error::MalformedFan(format!("cone {i}: ray index {r} out of range")));
            }
            let actual = fan.cone_rank(&c.rays);
            if actual != c.dim {
                return Err(Error::MalformedFan(format!(
                    "cone {i}: declared dimension {} but generators span {actual}",
                    c.dim
                )));
            }
        }
        Ok(fan)
    }
}

fn join_ints(v: &[BigInt]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}
