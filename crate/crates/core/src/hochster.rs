//! The cohomology of the moment-angle complex of `K`, computed from the
//! reduced cohomology of the full subcomplexes `K_I` over all vertex subsets
//! `I`, together with the multiplicative structure.
//!
//! A class is recorded by its support `I`, its internal degree `a` (a class
//! of `H^a(K_I)` in the augmented sense), and a cocycle representative; its
//! degree as a class of the moment-angle complex is `a + |I| + 1`. Products
//! are zero for overlapping supports and are otherwise evaluated at cochain
//! level on the union subcomplex.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{
    chain_complex, cocycle_basis_from_chain, Coeffs, GradedModule, HomologyCache,
};
use crate::linalg::{EchelonBasis, FieldMatrix, FieldOps};

/// Default cap on the vertex count for whole-complex enumerations.
pub const DEFAULT_VERTEX_LIMIT: usize = 20;

/// A cohomology class of the moment-angle complex: support subset, internal
/// degree, and a cocycle representative indexed by the canonical faces of
/// that dimension in the support subcomplex. Representatives are stored
/// reduced against the coboundary space, so equal classes have equal
/// vectors.
#[derive(Clone, Debug)]
pub struct HochsterClass<T> {
    pub support: Vec<usize>,
    pub internal_degree: i32,
    pub rep: Vec<T>,
}

impl<T> HochsterClass<T> {
    pub fn total_degree(&self) -> i32 {
        self.internal_degree + self.support.len() as i32 + 1
    }
}

/// Identifies a basis class without carrying field elements around.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassLabel {
    pub support: Vec<usize>,
    pub internal_degree: i32,
    pub total_degree: i32,
    pub index: usize,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let support: Vec<String> = self.support.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "class #{} on {{{}}} internal degree {} (total {})",
            self.index,
            support.join(","),
            self.internal_degree,
            self.total_degree
        )
    }
}

/// One nonzero summand of the decomposition.
#[derive(Clone, Debug)]
pub struct SubsetSummand {
    pub support: Vec<usize>,
    pub module: GradedModule,
}

/// The full additive structure: per-subset reduced cohomology plus the
/// aggregated Betti (and torsion) vector by total degree.
#[derive(Clone, Debug)]
pub struct ZkCohomology {
    pub universe: Vec<usize>,
    pub betti: Vec<usize>,
    pub torsion: Vec<Vec<BigInt>>,
    pub subsets: Vec<SubsetSummand>,
}

impl ZkCohomology {
    pub fn betti_vector(&self) -> &[usize] {
        &self.betti
    }

    pub fn top_degree(&self) -> i32 {
        self.betti.len() as i32 - 1
    }
}

/// All subsets of a sorted label set, in lexicographic order on the sorted
/// label lists (the empty set first).
pub fn subsets_lex(labels: &[usize]) -> Vec<Vec<usize>> {
    let n = labels.len();
    assert!(n < 64, "subset enumeration limited to fewer than 64 vertices");
    let mut all: Vec<Vec<usize>> = (0u64..(1u64 << n))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| labels[i])
                .collect()
        })
        .collect();
    all.sort();
    all
}

/// Computes the cohomology of the moment-angle complex of `k` by summing
/// the reduced cohomology of every full subcomplex. Subsets spanning a
/// simplex are skipped (their reduced cohomology vanishes); the remaining
/// subcomplexes are computed in parallel through the cache.
pub fn zk_cohomology(
    k: &SimplicialComplex,
    coeffs: Coeffs,
    limit: usize,
    cache: &HomologyCache,
) -> Result<ZkCohomology> {
    let m = k.vertex_count();
    if m > limit {
        return Err(Error::VertexLimitExceeded { m, limit });
    }
    let subsets = subsets_lex(k.vertices());
    let computed: Vec<Option<SubsetSummand>> = subsets
        .par_iter()
        .map(|subset| {
            if !subset.is_empty() && k.subset_spans_simplex(subset) {
                return None;
            }
            let sub = k.full_subcomplex(subset).expect("subset of the vertex set");
            let module = cache.reduced_cohomology(&sub, coeffs);
            if module.is_trivial() {
                None
            } else {
                Some(SubsetSummand { support: subset.clone(), module: (*module).clone() })
            }
        })
        .collect();

    let subsets: Vec<SubsetSummand> = computed.into_iter().flatten().collect();
    let mut betti: Vec<usize> = Vec::new();
    let mut torsion: Vec<Vec<BigInt>> = Vec::new();
    for summand in &subsets {
        for (a, s) in summand.module.iter() {
            let p = (a + summand.support.len() as i32 + 1) as usize;
            if betti.len() <= p {
                betti.resize(p + 1, 0);
                torsion.resize(p + 1, Vec::new());
            }
            betti[p] += s.betti;
            torsion[p].extend(s.torsion.iter().cloned());
        }
    }
    while betti.len() > 1 && *betti.last().unwrap() == 0 && torsion.last().unwrap().is_empty() {
        betti.pop();
        torsion.pop();
    }
    for t in &mut torsion {
        t.sort();
    }
    if betti.is_empty() {
        betti.push(0);
        torsion.push(Vec::new());
    }
    Ok(ZkCohomology { universe: k.vertices().to_vec(), betti, torsion, subsets })
}

/// Reduction context for one summand: the coboundary subspace of `K_I` in
/// one dimension, in canonical echelon form.
struct ClassSpace<F: FieldOps> {
    coboundaries: EchelonBasis<F>,
}

impl<F: FieldOps> ClassSpace<F> {
    fn new(sub: &SimplicialComplex, degree: i32, field: &F) -> Self {
        let chain = chain_complex(sub);
        let n = chain.n_faces(degree);
        let mut coboundaries = EchelonBasis::new(n, field.clone());
        if degree >= 0 {
            let delta_prev = chain.coboundary(degree - 1, field);
            for c in 0..delta_prev.cols() {
                coboundaries.insert(delta_prev.column(c));
            }
        }
        ClassSpace { coboundaries }
    }

    fn reduce(&self, cochain: &[F::Elem]) -> Vec<F::Elem> {
        self.coboundaries.reduce(cochain)
    }

    fn is_coboundary(&self, cochain: &[F::Elem], field: &F) -> bool {
        self.reduce(cochain).iter().all(|x| field.is_zero(x))
    }
}

/// Representatives of a basis of `H^a(K_I)`: cocycles completing the
/// coboundary space, each reduced to its canonical coset representative.
fn summand_basis<F: FieldOps>(
    sub: &SimplicialComplex,
    degree: i32,
    field: &F,
) -> Vec<Vec<F::Elem>> {
    let chain = chain_complex(sub);
    let basis = cocycle_basis_from_chain(&chain, degree, field);
    let mut reducer = EchelonBasis::new(basis.faces.len(), field.clone());
    for cb in &basis.coboundaries {
        reducer.insert(cb.clone());
    }
    // The span grows as representatives are chosen; the reducer stays fixed
    // at the coboundary space so the representatives are canonical.
    let mut span = reducer.clone();
    let mut reps = Vec::new();
    for z in &basis.cocycles {
        if span.insert(z.clone()) {
            reps.push(reducer.reduce(z));
        }
    }
    reps
}

/// A deterministic basis of the degree-`p` cohomology of the moment-angle
/// complex: subsets in lexicographic order, within each subset the canonical
/// cocycle representatives.
pub fn hochster_basis<F: FieldOps>(
    k: &SimplicialComplex,
    p: i32,
    field: &F,
) -> Vec<HochsterClass<F::Elem>> {
    let mut out = Vec::new();
    for subset in subsets_lex(k.vertices()) {
        let a = p - subset.len() as i32 - 1;
        if a < -1 {
            continue;
        }
        if !subset.is_empty() && k.subset_spans_simplex(&subset) {
            continue;
        }
        let sub = k.full_subcomplex(&subset).expect("subset of the vertex set");
        if a > sub.dim() {
            continue;
        }
        for rep in summand_basis(&sub, a, field) {
            out.push(HochsterClass { support: subset.clone(), internal_degree: a, rep });
        }
    }
    out
}

/// Basis classes living on one fixed support, across all internal degrees.
pub fn summand_classes<F: FieldOps>(
    k: &SimplicialComplex,
    support: &[usize],
    field: &F,
) -> Result<Vec<(ClassLabel, HochsterClass<F::Elem>)>> {
    let mut sorted = support.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let sub = k.full_subcomplex(&sorted)?;
    let mut out = Vec::new();
    for a in -1..=sub.dim() {
        for (index, rep) in summand_basis(&sub, a, field).into_iter().enumerate() {
            let class = HochsterClass { support: sorted.clone(), internal_degree: a, rep };
            let label = ClassLabel {
                support: sorted.clone(),
                internal_degree: a,
                total_degree: class.total_degree(),
                index,
            };
            out.push((label, class));
        }
    }
    Ok(out)
}

/// Every positive-degree basis class, labeled.
pub fn positive_basis<F: FieldOps>(
    k: &SimplicialComplex,
    field: &F,
) -> Vec<(ClassLabel, HochsterClass<F::Elem>)> {
    let mut out = Vec::new();
    for subset in subsets_lex(k.vertices()) {
        if subset.is_empty() || k.subset_spans_simplex(&subset) {
            continue;
        }
        out.extend(
            summand_classes(k, &subset, field).expect("subset of the vertex set"),
        );
    }
    out
}

fn sorted_disjoint(a: &[usize], b: &[usize]) -> bool {
    let mut i = 0;
    let mut j = 0;
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out
}

/// Parity of the number of pairs (x in left, y in right) with y < x: the
/// sign of the shuffle sorting the concatenation of two sorted blocks.
fn inversion_parity(left: &[usize], right: &[usize]) -> u32 {
    let mut count = 0u32;
    for &x in left {
        for &y in right {
            if y < x {
                count ^= 1;
            }
        }
    }
    count
}

/// The cochain-level product of two classes with disjoint supports.
///
/// On each face of the union subcomplex whose intersection with the first
/// support has the right size, the value is the product of the factor values
/// times the shuffle sign of the two blocks, times a fixed sign depending
/// only on the supports and degrees. The fixed sign is what makes the
/// induced product on cohomology graded-commutative with respect to total
/// degree and gives the coboundary the usual Leibniz form.
pub fn cup_cochain<F: FieldOps>(
    k: &SimplicialComplex,
    u: &HochsterClass<F::Elem>,
    v: &HochsterClass<F::Elem>,
    field: &F,
) -> Result<(Vec<usize>, i32, Vec<F::Elem>)> {
    if !sorted_disjoint(&u.support, &v.support) {
        return Err(Error::InvalidParameter(
            "cochain product requires disjoint supports".into(),
        ));
    }
    let union = sorted_union(&u.support, &v.support);
    let degree = u.internal_degree + v.internal_degree + 1;

    let sub_u = k.full_subcomplex(&u.support)?;
    let sub_v = k.full_subcomplex(&v.support)?;
    let faces_u = sub_u.all_faces(u.internal_degree);
    let faces_v = sub_v.all_faces(v.internal_degree);
    if faces_u.len() != u.rep.len() || faces_v.len() != v.rep.len() {
        return Err(Error::DimensionMismatch(
            "class representative does not match its support subcomplex".into(),
        ));
    }
    let index_u: BTreeMap<&Face, usize> =
        faces_u.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let index_v: BTreeMap<&Face, usize> =
        faces_v.iter().enumerate().map(|(i, f)| (f, i)).collect();

    let sub_union = k.full_subcomplex(&union)?;
    let target_faces = sub_union.all_faces(degree);

    // Constant sign: (-1)^((b+1)|I|) times the shuffle sign of (I, J).
    let twist = ((v.internal_degree + 1) as i64 * u.support.len() as i64).rem_euclid(2) as u32
        ^ inversion_parity(&u.support, &v.support);

    let u_size = (u.internal_degree + 1) as usize;
    let mut values = Vec::with_capacity(target_faces.len());
    for tau in &target_faces {
        let sigma = tau.intersect(&u.support);
        if sigma.len() != u_size {
            values.push(field.zero());
            continue;
        }
        let rho = tau.intersect(&v.support);
        let uval = &u.rep[*index_u.get(&sigma).expect("face of the support subcomplex")];
        let vval = &v.rep[*index_v.get(&rho).expect("face of the support subcomplex")];
        if field.is_zero(uval) || field.is_zero(vval) {
            values.push(field.zero());
            continue;
        }
        let parity = twist ^ inversion_parity(sigma.vertices(), rho.vertices());
        let prod = field.mul(uval, vval);
        values.push(if parity == 0 { prod } else { field.neg(&prod) });
    }
    Ok((union, degree, values))
}

/// The product of two classes in cohomology: `None` when the supports
/// overlap or when the cochain product is a coboundary of the union
/// subcomplex; otherwise the canonical reduced class.
pub fn cup_product<F: FieldOps>(
    k: &SimplicialComplex,
    u: &HochsterClass<F::Elem>,
    v: &HochsterClass<F::Elem>,
    field: &F,
) -> Result<Option<HochsterClass<F::Elem>>> {
    if !sorted_disjoint(&u.support, &v.support) {
        return Ok(None);
    }
    let (union, degree, values) = cup_cochain(k, u, v, field)?;
    let sub = k.full_subcomplex(&union)?;
    let space = ClassSpace::new(&sub, degree, field);
    let reduced = space.reduce(&values);
    if reduced.iter().all(|x| field.is_zero(x)) {
        Ok(None)
    } else {
        Ok(Some(HochsterClass { support: union, internal_degree: degree, rep: reduced }))
    }
}

/// Result of the all-pairs product test.
#[derive(Clone, Debug)]
pub struct GolodReport {
    pub golod: bool,
    pub witness: Option<(ClassLabel, ClassLabel)>,
}

/// True when every pairwise product of positive-degree classes vanishes in
/// cohomology. On failure the witness pair is returned.
pub fn golod_check<F: FieldOps>(
    k: &SimplicialComplex,
    field: &F,
    limit: usize,
) -> Result<GolodReport> {
    let m = k.vertex_count();
    if m > limit {
        return Err(Error::VertexLimitExceeded { m, limit });
    }
    let classes = positive_basis(k, field);
    let mut spaces: HashMap<(Vec<usize>, i32), ClassSpace<F>> = HashMap::new();
    for i in 0..classes.len() {
        for j in i..classes.len() {
            let (label_u, u) = &classes[i];
            let (label_v, v) = &classes[j];
            if !sorted_disjoint(&u.support, &v.support) {
                continue;
            }
            let (union, degree, values) = cup_cochain(k, u, v, field)?;
            let space = spaces.entry((union.clone(), degree)).or_insert_with(|| {
                let sub = k.full_subcomplex(&union).expect("subset of the vertex set");
                ClassSpace::new(&sub, degree, field)
            });
            if !space.is_coboundary(&values, field) {
                return Ok(GolodReport {
                    golod: false,
                    witness: Some((label_u.clone(), label_v.clone())),
                });
            }
        }
    }
    Ok(GolodReport { golod: true, witness: None })
}

/// Splits the degree-`p` basis by whether the support contains `v`.
///
/// Classes supported away from `v` restrict isomorphically to the complex
/// with `v` deleted (the summands are computed in identical subcomplexes),
/// so the split is (kernel rank, image rank) of the restriction.
pub fn restriction_split<F: FieldOps>(
    k: &SimplicialComplex,
    v: usize,
    p: i32,
    field: &F,
) -> Result<(usize, usize)> {
    if k.vertices().binary_search(&v).is_err() {
        return Err(Error::LabelOutOfRange { label: v, m: k.vertex_count() });
    }
    let basis = hochster_basis(k, p, field);
    let kernel = basis.iter().filter(|c| c.support.binary_search(&v).is_ok()).count();
    Ok((kernel, basis.len() - kernel))
}

/// The cup-product pairing of degree `p` against degree `n - p`, where `n`
/// is the top nonzero degree; requires the top Betti number to be one.
pub struct Pairing<F: FieldOps> {
    pub rows: Vec<ClassLabel>,
    pub cols: Vec<ClassLabel>,
    pub matrix: FieldMatrix<F::Elem>,
    pub top_degree: i32,
}

pub fn poincare_pairing<F: FieldOps>(
    k: &SimplicialComplex,
    p: i32,
    field: &F,
    limit: usize,
) -> Result<Pairing<F>> {
    let m = k.vertex_count();
    if m > limit {
        return Err(Error::VertexLimitExceeded { m, limit });
    }
    let max_possible = k.vertex_count() as i32 + k.dim() + 1;
    let mut top = None;
    for n in (1..=max_possible).rev() {
        let basis = hochster_basis(k, n, field);
        if !basis.is_empty() {
            if basis.len() != 1 {
                return Err(Error::TopBettiNotOne { got: basis.len() });
            }
            top = Some((n, basis.into_iter().next().unwrap()));
            break;
        }
    }
    let (n, top_class) = top.ok_or(Error::TopBettiNotOne { got: 0 })?;

    let rows = labeled_basis(k, p, field);
    let cols = labeled_basis(k, n - p, field);

    let top_sub = k.full_subcomplex(&top_class.support)?;
    let top_space = ClassSpace::new(&top_sub, top_class.internal_degree, field);
    let pivot = top_class
        .rep
        .iter()
        .position(|x| !field.is_zero(x))
        .expect("top class is nonzero");
    let pivot_inv = field.inv(&top_class.rep[pivot]);

    let mut matrix = FieldMatrix::filled(rows.len(), cols.len(), field.zero());
    for (r, (_, u)) in rows.iter().enumerate() {
        for (c, (_, v)) in cols.iter().enumerate() {
            if !sorted_disjoint(&u.support, &v.support) {
                continue;
            }
            let union = sorted_union(&u.support, &v.support);
            if union != top_class.support {
                continue;
            }
            let (_, _, values) = cup_cochain(k, u, v, field)?;
            let reduced = top_space.reduce(&values);
            if reduced.iter().all(|x| field.is_zero(x)) {
                continue;
            }
            let coef = field.mul(&reduced[pivot], &pivot_inv);
            // The top cohomology is one-dimensional, so the reduced product
            // must be this multiple of the top representative.
            for (a, b) in reduced.iter().zip(top_class.rep.iter()) {
                assert_eq!(
                    *a,
                    field.mul(&coef, b),
                    "product is not proportional to the top class"
                );
            }
            matrix.set(r, c, coef);
        }
    }
    Ok(Pairing {
        rows: rows.into_iter().map(|(l, _)| l).collect(),
        cols: cols.into_iter().map(|(l, _)| l).collect(),
        matrix,
        top_degree: n,
    })
}

fn labeled_basis<F: FieldOps>(
    k: &SimplicialComplex,
    p: i32,
    field: &F,
) -> Vec<(ClassLabel, HochsterClass<F::Elem>)> {
    let mut last_support: Option<Vec<usize>> = None;
    let mut index = 0usize;
    hochster_basis(k, p, field)
        .into_iter()
        .map(|class| {
            if last_support.as_deref() == Some(class.support.as_slice()) {
                index += 1;
            } else {
                last_support = Some(class.support.clone());
                index = 0;
            }
            let label = ClassLabel {
                support: class.support.clone(),
                internal_degree: class.internal_degree,
                total_degree: class.total_degree(),
                index,
            };
            (label, class)
        })
        .collect()
}
