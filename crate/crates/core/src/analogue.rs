//! Linking-vector analogues of the Gauss-Epple homomorphism for a Coxeter
//! presentation and a permutation representation of its Coxeter group.
//!
//! A candidate sends generator `g` to `(π_g, ℓ_g) ∈ Z^P ⋊ Sym(P)`. Acting on
//! `(p, x)` it gives `(π_g(p), x + ℓ_g[p])`, the same convention as the
//! classical homomorphism, so the classical assignment is always a solution
//! for the natural representation of the braid group. The braid relations
//! impose one linear equation per (relation, point); the solutions form an
//! integer lattice.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ge::GeElement;
use crate::lattice;
use crate::perm::Permutation;
use crate::Int;

/// A Coxeter presentation: generator names and the exponent `m_ab` of each
/// pair. `None` means no relation (`m_ab = ∞`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    exponents: BTreeMap<(usize, usize), Option<usize>>,
}

impl Presentation {
    /// Pairs missing from `exponents` commute (`m = 2`), as in a Coxeter graph
    /// without an edge.
    pub fn new(generators: Vec<String>, exponents: &[(String, String, Option<usize>)]) -> Result<Self> {
        let mut index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if index.insert(g.as_str(), i).is_some() {
                return Err(Error::Presentation(format!("duplicate generator {g:?}")));
            }
        }
        let mut map = BTreeMap::new();
        for i in 0..generators.len() {
            for j in i + 1..generators.len() {
                map.insert((i, j), Some(2));
            }
        }
        let mut given = BTreeMap::new();
        for (a, b, m) in exponents {
            let lookup = |g: &String| {
                index
                    .get(g.as_str())
                    .copied()
                    .ok_or_else(|| Error::Presentation(format!("unknown generator {g:?}")))
            };
            let (i, j) = (lookup(a)?, lookup(b)?);
            if i == j {
                return Err(Error::Presentation(format!("exponent given for the pair ({a}, {a})")));
            }
            if matches!(m, Some(k) if *k < 2) {
                return Err(Error::Presentation(format!("exponent of ({a}, {b}) must be at least 2")));
            }
            let key = (i.min(j), i.max(j));
            if let Some(prev) = given.insert(key, *m) {
                if prev != *m {
                    return Err(Error::Presentation(format!("conflicting exponents for ({a}, {b})")));
                }
            }
            map.insert(key, *m);
        }
        Ok(Presentation { generators, exponents: map })
    }

    /// The braid group on `n` strands, generators `s1 … s(n-1)`.
    pub fn braid(n: usize) -> Self {
        let generators: Vec<String> = (1..n).map(|k| format!("s{k}")).collect();
        let exps: Vec<_> = (1..n.saturating_sub(1))
            .map(|k| (format!("s{k}"), format!("s{}", k + 1), Some(3)))
            .collect();
        Self::new(generators, &exps).expect("well-formed braid presentation")
    }

    /// The dihedral type `I2(m)` with generators `a`, `b`.
    pub fn dihedral(m: usize) -> Self {
        Self::new(vec!["a".into(), "b".into()], &[("a".into(), "b".into(), Some(m))]).expect("m >= 2")
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    /// `m_ab` for generator indices `a != b`.
    pub fn exponent(&self, a: usize, b: usize) -> Option<usize> {
        self.exponents[&(a.min(b), a.max(b))]
    }

    /// Every pair with a finite exponent, `a < b`.
    pub fn relations(&self) -> Vec<(usize, usize, usize)> {
        self.exponents
            .iter()
            .filter_map(|(&(a, b), &m)| m.map(|m| (a, b, m)))
            .collect()
    }

    fn relation_name(&self, a: usize, b: usize, m: usize) -> String {
        let (ga, gb) = (&self.generators[a], &self.generators[b]);
        let side = |x: &str, y: &str| -> String { (0..m).map(|t| if t % 2 == 0 { x } else { y }).collect::<Vec<_>>().join("") };
        format!("{} = {} (m = {m})", side(ga, gb), side(gb, ga))
    }
}

/// A point label: an integer or a string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Point {
    Int(i64),
    Name(String),
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Int(x) => write!(f, "{x}"),
            Point::Name(s) => f.write_str(s),
        }
    }
}

/// A permutation representation: for each generator, a permutation of the
/// points (stored by point index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermRep {
    points: Vec<Point>,
    images: Vec<Permutation>,
}

impl PermRep {
    /// `images[g][i]` is the image of `points[i]` under generator `g`.
    /// The representation is checked against the presentation's relations.
    pub fn new(pres: &Presentation, points: Vec<Point>, images: Vec<Vec<Point>>) -> Result<Self> {
        if images.len() != pres.generators().len() {
            return Err(Error::Dimension {
                expected: pres.generators().len(),
                got: images.len(),
            });
        }
        let mut index = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(Error::Presentation(format!("duplicate point {p}")));
            }
        }
        let mut perms = Vec::new();
        for (g, imgs) in images.iter().enumerate() {
            if imgs.len() != points.len() {
                return Err(Error::Dimension {
                    expected: points.len(),
                    got: imgs.len(),
                });
            }
            let mut one_based = Vec::new();
            for p in imgs {
                let i = index
                    .get(p)
                    .ok_or_else(|| Error::Presentation(format!("generator {}: unknown point {p}", pres.generators()[g])))?;
                one_based.push(i + 1);
            }
            perms.push(Permutation::from_images(&one_based).map_err(|_| {
                Error::Permutation(format!("image of generator {} is not a bijection", pres.generators()[g]))
            })?);
        }
        let rep = PermRep { points, images: perms };
        for (a, b, m) in pres.relations() {
            let lhs = rep.word_perm(&alternating(a, b, m));
            let rhs = rep.word_perm(&alternating(b, a, m));
            if lhs != rhs {
                return Err(Error::RelationViolated(pres.relation_name(a, b, m)));
            }
        }
        Ok(rep)
    }

    /// The natural action of the braid group's Coxeter group on `1..=n`.
    pub fn natural(n: usize) -> Self {
        let pres = Presentation::braid(n);
        let points: Vec<Point> = (1..=n as i64).map(Point::Int).collect();
        let images = (1..n)
            .map(|k| {
                let t = Permutation::adjacent(n, k);
                t.images().into_iter().map(|x| Point::Int(x as i64)).collect()
            })
            .collect();
        Self::new(&pres, points, images).expect("the natural representation satisfies the relations")
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn image(&self, g: usize) -> &Permutation {
        &self.images[g]
    }

    fn word_perm(&self, word: &[usize]) -> Permutation {
        let n = self.points.len();
        word.iter()
            .fold(Permutation::identity(n), |acc, &g| acc.compose(&self.images[g]))
    }
}

fn alternating(a: usize, b: usize, m: usize) -> Vec<usize> {
    (0..m).map(|t| if t % 2 == 0 { a } else { b }).collect()
}

/// One row per (relation, point); unknown `g·|P| + p` is `ℓ_{g,p}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintSystem {
    pub generators: usize,
    pub points: usize,
    pub rows: Vec<Vec<Int>>,
    /// `(a, b, m, point index)` for each row.
    #[serde(skip)]
    pub labels: Vec<(usize, usize, usize, usize)>,
}

impl ConstraintSystem {
    pub fn unknowns(&self) -> usize {
        self.generators * self.points
    }

    pub fn unknown(&self, g: usize, p: usize) -> usize {
        g * self.points + p
    }
}

/// Coefficients of `ℓ` accumulated at the start point `p` by a word, the
/// rightmost letter acting first.
fn accumulate(rep: &PermRep, word: &[usize], p: usize, row: &mut [Int], sign: Int) {
    let np = rep.points.len();
    let mut cur = p;
    for &g in word.iter().rev() {
        row[g * np + cur] += sign;
        cur = rep.images[g].apply(cur + 1) - 1;
    }
}

pub fn generate_constraints(pres: &Presentation, rep: &PermRep) -> ConstraintSystem {
    let np = rep.points.len();
    let ng = pres.generators().len();
    let mut rows = Vec::new();
    let mut labels = Vec::new();
    for (a, b, m) in pres.relations() {
        for p in 0..np {
            let mut row = vec![0; ng * np];
            accumulate(rep, &alternating(a, b, m), p, &mut row, 1);
            accumulate(rep, &alternating(b, a, m), p, &mut row, -1);
            rows.push(row);
            labels.push((a, b, m, p));
        }
    }
    ConstraintSystem {
        generators: ng,
        points: np,
        rows,
        labels,
    }
}

/// Integer basis of the solution lattice, in Hermite normal form.
pub fn solve_lattice(cs: &ConstraintSystem) -> Vec<Vec<Int>> {
    lattice::integer_kernel(&cs.rows, cs.unknowns())
}

/// Splits a solution vector into per-generator linking vectors.
pub fn linking_vectors(solution: &[Int], points: usize) -> Vec<Vec<Int>> {
    solution.chunks(points).map(|c| c.to_vec()).collect()
}

/// Checks every braid relation on the elements `(π_g, ℓ_g)` themselves.
pub fn respects_relations(pres: &Presentation, rep: &PermRep, ell: &[Vec<Int>]) -> bool {
    let gens: Vec<GeElement<Int>> = (0..pres.generators().len())
        .map(|g| GeElement::new(rep.images[g].clone(), ell[g].clone()).expect("lengths match"))
        .collect();
    let eval = |word: &[usize]| {
        word.iter()
            .fold(GeElement::identity(rep.points.len()), |acc, &g| acc.mul(&gens[g]))
    };
    pres.relations()
        .into_iter()
        .all(|(a, b, m)| eval(&alternating(a, b, m)) == eval(&alternating(b, a, m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalogueSpace {
    pub dimension: usize,
    pub basis: Vec<Vec<Int>>,
    pub verified: Vec<bool>,
}

pub fn analogue_space(pres: &Presentation, rep: &PermRep) -> AnalogueSpace {
    let cs = generate_constraints(pres, rep);
    let basis = solve_lattice(&cs);
    let verified = basis
        .iter()
        .map(|v| respects_relations(pres, rep, &linking_vectors(v, cs.points)))
        .collect();
    AnalogueSpace {
        dimension: basis.len(),
        basis,
        verified,
    }
}

/// Input document: `{"generators": [...], "exponents": [[a, b, m], ...],
/// "points": [...], "rep": {gen: [images]}}`. An exponent of `null` or
/// `"inf"` means no relation.
#[derive(Clone, Debug, Deserialize)]
pub struct PresentationDoc {
    pub generators: Vec<String>,
    #[serde(default)]
    pub exponents: Vec<(String, String, Exponent)>,
    pub points: Vec<Point>,
    pub rep: BTreeMap<String, Vec<Point>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Finite(usize),
    Infinite(Option<String>),
}

impl PresentationDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Presentation(e.to_string()))
    }

    pub fn build(&self) -> Result<(Presentation, PermRep)> {
        let mut exps = Vec::new();
        for (a, b, m) in &self.exponents {
            let m = match m {
                Exponent::Finite(k) => Some(*k),
                Exponent::Infinite(None) => None,
                Exponent::Infinite(Some(s)) if s.eq_ignore_ascii_case("inf") => None,
                Exponent::Infinite(Some(s)) => {
                    return Err(Error::Presentation(format!("bad exponent {s:?}")));
                }
            };
            exps.push((a.clone(), b.clone(), m));
        }
        let pres = Presentation::new(self.generators.clone(), &exps)?;
        let mut images = Vec::new();
        for g in &self.generators {
            let img = self
                .rep
                .get(g)
                .ok_or_else(|| Error::Presentation(format!("no image given for generator {g:?}")))?;
            images.push(img.clone());
        }
        if let Some(extra) = self.rep.keys().find(|k| !self.generators.contains(k)) {
            return Err(Error::Presentation(format!("image given for unknown generator {extra:?}")));
        }
        let rep = PermRep::new(&pres, self.points.clone(), images)?;
        Ok((pres, rep))
    }
}
