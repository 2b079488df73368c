//! Reduced simplicial (co)homology from augmented chain complexes.
//!
//! Chain complexes are always augmented: the single empty face sits in
//! dimension -1, and the augmentation map sends every vertex to it with
//! coefficient +1. Under this convention the empty complex has reduced
//! cohomology of rank one in degree -1, which is exactly what the
//! moment-angle bookkeeping downstream needs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{
    field_rank, nullspace_basis, smith_normal_form, to_field_matrix, FieldMatrix, FieldOps,
    IntegerMatrix, PrimeField, Rationals,
};

/// Coefficient selector for cohomology computations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Coeffs {
    /// Integral coefficients: Betti numbers plus torsion divisors.
    Z,
    /// Rational coefficients: Betti numbers only.
    Q,
    /// Coefficients in the prime field Z/p.
    Fp(u64),
}

impl Coeffs {
    /// Parses the command-line selector grammar `z | q | f2 | fp:<p>`.
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "z" | "Z" => Ok(Coeffs::Z),
            "q" | "Q" => Ok(Coeffs::Q),
            "f2" | "F2" => Ok(Coeffs::Fp(2)),
            other => {
                if let Some(p) = other.strip_prefix("fp:") {
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::InvalidCoefficients(other.to_string()))?;
                    PrimeField::new(p)?;
                    Ok(Coeffs::Fp(p))
                } else {
                    Err(Error::InvalidCoefficients(other.to_string()))
                }
            }
        }
    }
}

impl fmt::Display for Coeffs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeffs::Z => write!(f, "z"),
            Coeffs::Q => write!(f, "q"),
            Coeffs::Fp(p) => write!(f, "fp:{p}"),
        }
    }
}

/// Ordered face lists and boundary matrices of the augmented chain complex.
///
/// `faces_by_dim[i]` holds the faces of dimension `i - 1` (index 0 is the
/// augmentation face), each list in lexicographic order. `boundaries[d]` is
/// the matrix of the boundary map from dimension `d` to dimension `d - 1`,
/// columns indexed by `faces(d)` and rows by `faces(d - 1)`.
pub struct ChainComplexData {
    faces_by_dim: Vec<Vec<Face>>,
    boundaries: Vec<IntegerMatrix>,
}

impl ChainComplexData {
    pub fn max_dim(&self) -> i32 {
        self.faces_by_dim.len() as i32 - 2
    }

    pub fn faces(&self, d: i32) -> &[Face] {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.faces_by_dim.len() {
            &[]
        } else {
            &self.faces_by_dim[idx as usize]
        }
    }

    pub fn n_faces(&self, d: i32) -> usize {
        self.faces(d).len()
    }

    /// The boundary matrix from chains of dimension `d`, when it exists
    /// (`0 <= d <= max_dim`).
    pub fn boundary(&self, d: i32) -> Option<&IntegerMatrix> {
        if d < 0 {
            None
        } else {
            self.boundaries.get(d as usize)
        }
    }

    /// The coboundary matrix on `d`-cochains as a field matrix:
    /// the transpose of the boundary map from dimension `d + 1`.
    pub fn coboundary<F: FieldOps>(&self, d: i32, field: &F) -> FieldMatrix<F::Elem> {
        match self.boundary(d + 1) {
            Some(m) => to_field_matrix(&m.transpose(), field),
            None => FieldMatrix::filled(self.n_faces(d + 1), self.n_faces(d), field.zero()),
        }
    }
}

/// Builds the augmented chain complex of `K`: lexicographic face order per
/// dimension, boundary of `[v0..vk]` the alternating sum over vertex
/// deletions, augmentation row all ones.
pub fn chain_complex(k: &SimplicialComplex) -> ChainComplexData {
    let top = k.dim();
    let mut faces_by_dim = Vec::with_capacity((top + 2) as usize);
    for d in -1..=top {
        faces_by_dim.push(k.all_faces(d));
    }
    let mut boundaries = Vec::new();
    for d in 0..=top {
        let sources = &faces_by_dim[(d + 1) as usize];
        let targets = &faces_by_dim[d as usize];
        let index: BTreeMap<&Face, usize> =
            targets.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut m = IntegerMatrix::zeros(targets.len(), sources.len());
        for (col, face) in sources.iter().enumerate() {
            for (i, _) in face.vertices().iter().enumerate() {
                let mut sub = face.vertices().to_vec();
                sub.remove(i);
                let sub = Face::new(sub).expect("face vertices are distinct");
                let row = index[&sub];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                m.set(row, col, BigInt::from(sign));
            }
        }
        boundaries.push(m);
    }
    ChainComplexData { faces_by_dim, boundaries }
}

/// One cohomology group: free rank plus torsion divisors (each > 1).
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct Summand {
    pub betti: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

fn serialize_torsion<S: serde::Serializer>(
    torsion: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(torsion.iter().map(|t| t.to_string()))
}

/// Graded cohomology, indexed by degree. Only nonzero summands are stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GradedModule {
    summands: BTreeMap<i32, Summand>,
}

impl GradedModule {
    pub fn insert(&mut self, degree: i32, summand: Summand) {
        if summand.betti != 0 || !summand.torsion.is_empty() {
            self.summands.insert(degree, summand);
        }
    }

    pub fn betti(&self, degree: i32) -> usize {
        self.summands.get(&degree).map(|s| s.betti).unwrap_or(0)
    }

    pub fn torsion(&self, degree: i32) -> &[BigInt] {
        self.summands.get(&degree).map(|s| s.torsion.as_slice()).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &Summand)> {
        self.summands.iter().map(|(&d, s)| (d, s))
    }

    pub fn is_trivial(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn total_rank(&self) -> usize {
        self.summands.values().map(|s| s.betti).sum()
    }
}

impl fmt::Display for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, s) in &self.summands {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            write!(f, "H^{d}: rank {}", s.betti)?;
            if !s.torsion.is_empty() {
                let t: Vec<String> = s.torsion.iter().map(|x| x.to_string()).collect();
                write!(f, " + torsion [{}]", t.join(","))?;
            }
        }
        Ok(())
    }
}

/// Reduced cohomology of `K` with the chosen coefficients.
///
/// Over Z the torsion of `H^d` is read off the Smith normal form of the
/// boundary map out of dimension `d` (universal coefficients places the
/// torsion of `H_(d-1)` there); over a field only ranks are produced.
pub fn reduced_cohomology(k: &SimplicialComplex, coeffs: Coeffs) -> GradedModule {
    let chain = chain_complex(k);
    let top = chain.max_dim();
    let mut module = GradedModule::default();

    match coeffs {
        Coeffs::Z => {
            let snfs: Vec<_> =
                chain.boundaries.iter().map(smith_normal_form).collect();
            for d in -1..=top {
                let n = chain.n_faces(d);
                let rank_out = if d >= 0 { snfs[d as usize].rank } else { 0 };
                let rank_in =
                    if d < top { snfs[(d + 1) as usize].rank } else { 0 };
                let betti = n - rank_out - rank_in;
                let torsion = if d >= 0 {
                    snfs[d as usize].nontrivial_divisors()
                } else {
                    Vec::new()
                };
                module.insert(d, Summand { betti, torsion });
            }
        }
        Coeffs::Q => field_betti(&chain, &Rationals, &mut module),
        Coeffs::Fp(p) => {
            let field = PrimeField::new(p).expect("selector validated on parse");
            field_betti(&chain, &field, &mut module);
        }
    }
    module
}

fn field_betti<F: FieldOps>(chain: &ChainComplexData, field: &F, out: &mut GradedModule) {
    let top = chain.max_dim();
    let ranks: Vec<usize> = chain
        .boundaries
        .iter()
        .map(|m| field_rank(&to_field_matrix(m, field), field))
        .collect();
    for d in -1..=top {
        let n = chain.n_faces(d);
        let rank_out = if d >= 0 { ranks[d as usize] } else { 0 };
        let rank_in = if d < top { ranks[(d + 1) as usize] } else { 0 };
        out.insert(d, Summand { betti: n - rank_out - rank_in, torsion: Vec::new() });
    }
}

/// Cocycles and coboundaries of `K` in one degree, over a field.
///
/// `cocycles` is the kernel basis of the coboundary map on `d`-cochains,
/// `coboundaries` a maximal independent set among the images of the
/// `(d-1)`-cochain basis; both come from fixed pivoting and are
/// deterministic. The difference of their lengths is the Betti number.
pub struct CocycleBasis<T> {
    pub faces: Vec<Face>,
    pub cocycles: Vec<Vec<T>>,
    pub coboundaries: Vec<Vec<T>>,
}

pub fn cocycle_basis<F: FieldOps>(
    k: &SimplicialComplex,
    d: i32,
    field: &F,
) -> CocycleBasis<F::Elem> {
    let chain = chain_complex(k);
    cocycle_basis_from_chain(&chain, d, field)
}

pub fn cocycle_basis_from_chain<F: FieldOps>(
    chain: &ChainComplexData,
    d: i32,
    field: &F,
) -> CocycleBasis<F::Elem> {
    let delta = chain.coboundary(d, field);
    let cocycles = nullspace_basis(&delta, field);
    let coboundaries = if d >= 0 && chain.n_faces(d - 1) > 0 {
        let prev = chain.coboundary(d - 1, field);
        crate::linalg::column_space_basis(&prev, field)
    } else {
        Vec::new()
    };
    CocycleBasis { faces: chain.faces(d).to_vec(), cocycles, coboundaries }
}

/// Concurrent insert-or-get cache for reduced cohomology, keyed by the
/// relabeling-invariant facet encoding plus the coefficient choice.
#[derive(Default)]
pub struct HomologyCache {
    map: Mutex<HashMap<(String, Coeffs), Arc<GradedModule>>>,
}

impl HomologyCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.map.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reduced_cohomology(
        &self,
        k: &SimplicialComplex,
        coeffs: Coeffs,
    ) -> Arc<GradedModule> {
        let key = (k.canonical_key(), coeffs);
        if let Some(hit) = self.map.lock().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        // Compute outside the lock; duplicate computations are idempotent.
        let value = Arc::new(reduced_cohomology(k, coeffs));
        let mut guard = self.map.lock().unwrap();
        Arc::clone(guard.entry(key).or_insert(value))
    }
}
