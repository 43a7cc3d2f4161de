//! Exact linear algebra on the jet space `J_{<m}`: polynomials modulo
//! `⟨x, y⟩^m`, with coordinates in the monomials of total degree `≤ m − 1`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{BiPoly, Monomial, Rational};

/// Graded-lex ordered monomials of total degree `< m`: `1, x, y, x², xy, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoBasis {
    m: u32,
    monomials: Vec<Monomial>,
}

impl MonoBasis {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidJetOrder);
        }
        let monomials = (0..m)
            .flat_map(|deg| (0..=deg).rev().map(move |i| Monomial::new(i, deg - i)))
            .collect();
        Ok(MonoBasis { m, monomials })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        jet_dim(self.m)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, mono: Monomial) -> Option<usize> {
        index_of(self.m, mono)
    }
}

/// `m(m+1)/2`, the number of monomials of total degree `< m`.
pub const fn jet_dim(m: u32) -> usize {
    (m as usize) * (m as usize + 1) / 2
}

fn index_of(m: u32, mono: Monomial) -> Option<usize> {
    let deg = mono.degree();
    (deg < m).then(|| jet_dim(deg) + (deg - mono.x) as usize)
}

fn check_m(left: u32, right: u32) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::BasisMismatch { left, right })
    }
}

/// Coordinates of a jet in [`MonoBasis`]`(m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetVector {
    m: u32,
    coords: Vec<Rational>,
}

impl JetVector {
    pub fn zero(m: u32) -> Result<Self> {
        MonoBasis::new(m)?;
        Ok(JetVector {
            m,
            coords: vec![Rational::zero(); jet_dim(m)],
        })
    }

    pub fn from_coords(m: u32, coords: Vec<Rational>) -> Result<Self> {
        MonoBasis::new(m)?;
        if coords.len() != jet_dim(m) {
            return Err(Error::Internal(format!(
                "jet vector of length {} for m = {m}",
                coords.len()
            )));
        }
        Ok(JetVector { m, coords })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The polynomial of degree `< m` with these coordinates.
    pub fn to_poly(&self) -> BiPoly {
        let basis = MonoBasis::new(self.m).expect("validated on construction");
        BiPoly::from_terms(basis.monomials.iter().copied().zip(self.coords.iter().cloned()))
    }
}

/// Coordinates of `jet(p, m − 1)`.
pub fn to_jet_vector(p: &BiPoly, m: u32) -> Result<JetVector> {
    let mut v = JetVector::zero(m)?;
    for (mono, c) in p.terms() {
        if let Some(i) = index_of(m, *mono) {
            v.coords[i] = c.clone();
        }
    }
    Ok(v)
}

/// A subspace of `J_{<m}`, stored as canonical reduced row-echelon rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetSubspace {
    m: u32,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl JetSubspace {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// `dim J_{<m} − rank`, the colength of the subspace.
    pub fn codim(&self) -> usize {
        jet_dim(self.m) - self.rank()
    }

    pub fn rows(&self) -> Vec<JetVector> {
        self.rows
            .iter()
            .map(|r| JetVector {
                m: self.m,
                coords: r.clone(),
            })
            .collect()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Normal form of `v` modulo the subspace: `v` with every pivot
    /// coordinate eliminated. Zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &JetVector) -> Result<JetVector> {
        check_m(self.m, v.m)?;
        let mut out = v.coords.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for (o, r) in out.iter_mut().zip(row) {
                *o -= &factor * r;
            }
        }
        Ok(JetVector { m: self.m, coords: out })
    }

    pub fn contains(&self, v: &JetVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }
}

/// The span of `vectors` inside `J_{<m}`.
pub fn span(m: u32, vectors: &[JetVector]) -> Result<JetSubspace> {
    MonoBasis::new(m)?;
    for v in vectors {
        check_m(m, v.m)?;
    }
    let (rows, pivots) = linalg::rref(vectors.iter().map(|v| v.coords.clone()).collect());
    Ok(JetSubspace { m, rows, pivots })
}

/// Solution set of a linear system, as a particular point plus a basis of
/// the homogeneous solutions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolutionSet {
    Empty,
    Affine {
        particular: Vec<Rational>,
        directions: Vec<Vec<Rational>>,
    },
}

impl AffineSolutionSet {
    pub fn is_empty(&self) -> bool {
        matches!(self, AffineSolutionSet::Empty)
    }

    /// Number of free parameters, `None` when there is no solution.
    pub fn dimension(&self) -> Option<usize> {
        match self {
            AffineSolutionSet::Empty => None,
            AffineSolutionSet::Affine { directions, .. } => Some(directions.len()),
        }
    }

    pub fn particular(&self) -> Option<&[Rational]> {
        match self {
            AffineSolutionSet::Empty => None,
            AffineSolutionSet::Affine { particular, .. } => Some(particular),
        }
    }

    pub fn directions(&self) -> &[Vec<Rational>] {
        match self {
            AffineSolutionSet::Empty => &[],
            AffineSolutionSet::Affine { directions, .. } => directions,
        }
    }

    /// `particular + Σ tᵢ·directionᵢ`. Panics if `params` has the wrong
    /// length or the set is empty.
    pub fn point(&self, params: &[Rational]) -> Vec<Rational> {
        let AffineSolutionSet::Affine { particular, directions } = self else {
            panic!("point() on an empty solution set");
        };
        assert_eq!(params.len(), directions.len());
        let mut out = particular.clone();
        for (t, d) in params.iter().zip(directions) {
            for (o, di) in out.iter_mut().zip(d) {
                *o += t * di;
            }
        }
        out
    }

    /// Whether `point` belongs to the set.
    pub fn contains(&self, point: &[Rational]) -> bool {
        let AffineSolutionSet::Affine { particular, directions } = self else {
            return false;
        };
        if point.len() != particular.len() {
            return false;
        }
        let diff: Vec<Rational> = point.iter().zip(particular).map(|(p, q)| p - q).collect();
        let mut rows = directions.clone();
        let before = linalg::rank(rows.clone());
        rows.push(diff);
        linalg::rank(rows) == before
    }
}

/// All coefficient vectors `c` with `Σ cᵢ·columnᵢ = target`.
pub fn solve_affine(columns: &[JetVector], target: &JetVector) -> Result<AffineSolutionSet> {
    let m = target.m;
    for c in columns {
        check_m(m, c.m)?;
    }
    let k = columns.len();
    let augmented: Vec<Vec<Rational>> = (0..jet_dim(m))
        .map(|r| {
            columns
                .iter()
                .map(|c| c.coords[r].clone())
                .chain(std::iter::once(target.coords[r].clone()))
                .collect()
        })
        .collect();
    let (rows, pivots) = linalg::rref(augmented);
    if pivots.last() == Some(&k) {
        return Ok(AffineSolutionSet::Empty);
    }

    let mut particular = vec![Rational::zero(); k];
    for (row, &p) in rows.iter().zip(&pivots) {
        particular[p] = row[k].clone();
    }
    let directions = (0..k)
        .filter(|j| !pivots.contains(j))
        .map(|free| {
            let mut d = vec![Rational::zero(); k];
            d[free] = num_traits::One::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                d[p] = -row[free].clone();
            }
            d
        })
        .collect();
    Ok(AffineSolutionSet::Affine { particular, directions })
}
