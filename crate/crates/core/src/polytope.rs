//! Builders for the simplicial complex families under study: iterated
//! stackings of a d-simplex (with a prescribed labeling and with arbitrary
//! or random stack histories), disjoint point sets, simplex chains glued
//! along codimension-one faces, and the two closed-form Betti vectors the
//! verification suite compares against.

use std::collections::BTreeSet;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// An ordered sequence of facet choices defining an iterated stacking.
///
/// Step `t` (1-based) glues a d-simplex onto the chosen free facet and
/// labels the new vertex `d + 1 + t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StackHistory {
    pub d: usize,
    pub steps: Vec<Face>,
}

impl fmt::Display for StackHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}; steps [", self.d)?;
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Boundary facets of a pure d-complex: the (d-1)-faces lying in exactly
/// one facet. These are the admissible stacking sites.
pub fn free_facets(ball: &SimplicialComplex) -> Vec<Face> {
    let d = ball.dim();
    ball.all_faces(d - 1)
        .into_iter()
        .filter(|ridge| {
            ball.facets().iter().filter(|f| ridge.is_subset_of(f)).count() == 1
        })
        .collect()
}

/// The stacked d-ball with the prescribed labeling: start from the
/// d-simplex on `{1..d+1}`, stack first onto `(1,..,d)`, then repeatedly
/// onto the facet containing the newest vertex and `(1,..,d-1)` (for d = 1,
/// onto the newest tip vertex). After `ell - 1` stackings the ball has
/// `ell` facets on `d + ell` vertices.
pub fn build_lhat(d: usize, ell: usize) -> Result<SimplicialComplex> {
    build_stacked(&prescribed_history(d, ell)?)
}

/// The prescribed stack history used by `build_lhat`.
pub fn prescribed_history(d: usize, ell: usize) -> Result<StackHistory> {
    if d < 1 {
        return Err(Error::InvalidParameter("stacking dimension must be >= 1".into()));
    }
    if ell < 1 {
        return Err(Error::InvalidParameter("number of stacks must be >= 1".into()));
    }
    let mut steps = Vec::with_capacity(ell.saturating_sub(1));
    for k in 2..=ell {
        let vertices: Vec<usize> = if k == 2 {
            (1..=d).collect()
        } else if d == 1 {
            vec![d + k - 1]
        } else {
            (1..=d - 1).chain(std::iter::once(d + k - 1)).collect()
        };
        steps.push(Face::new(vertices)?);
    }
    Ok(StackHistory { d, steps })
}

/// Applies a stack history starting from the d-simplex. Every chosen facet
/// must be free (on the boundary of the ball built so far).
pub fn build_stacked(history: &StackHistory) -> Result<SimplicialComplex> {
    if history.d < 1 {
        return Err(Error::InvalidParameter("stacking dimension must be >= 1".into()));
    }
    let mut ball = SimplicialComplex::simplex(history.d);
    for step in &history.steps {
        let count = ball.facets().iter().filter(|f| step.is_subset_of(f)).count();
        if step.len() != history.d || count != 1 {
            return Err(Error::FacetNotFree(step.to_string()));
        }
        ball = ball.glue_along_face(step, history.d)?;
    }
    Ok(ball)
}

/// A uniformly random stack history: at each step choose among the current
/// free facets with a seeded generator.
pub fn random_history(d: usize, ell: usize, seed: u64) -> Result<StackHistory> {
    if d < 1 || ell < 1 {
        return Err(Error::InvalidParameter("need d >= 1 and ell >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ball = SimplicialComplex::simplex(d);
    let mut steps = Vec::with_capacity(ell - 1);
    for _ in 2..=ell {
        let free = free_facets(&ball);
        let choice = free[rng.random_range(0..free.len())].clone();
        ball = ball.glue_along_face(&choice, d)?;
        steps.push(choice);
    }
    Ok(StackHistory { d, steps })
}

/// `ell` disjoint points on `ell` vertices.
pub fn disjoint_points(ell: usize) -> Result<SimplicialComplex> {
    if ell < 1 {
        return Err(Error::InvalidParameter("need at least one point".into()));
    }
    let faces: Vec<Vec<usize>> = (1..=ell).map(|v| vec![v]).collect();
    SimplicialComplex::new(ell, &faces)
}

/// Gluing pattern for `htype_family`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HtypeMode {
    /// Each new simplex is glued onto the previous one (minus its smallest
    /// vertex), forming a chain.
    Chain,
    /// Every simplex is glued onto the same face `(1,..,k)` of the first.
    Star,
    /// Uniformly random (k-1)-face of the complex built so far.
    Random,
}

impl HtypeMode {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "chain" => Ok(HtypeMode::Chain),
            "star" => Ok(HtypeMode::Star),
            "random" => Ok(HtypeMode::Random),
            other => Err(Error::InvalidParameter(format!("unknown htype mode `{other}`"))),
        }
    }
}

impl fmt::Display for HtypeMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HtypeMode::Chain => write!(f, "chain"),
            HtypeMode::Star => write!(f, "star"),
            HtypeMode::Random => write!(f, "random"),
        }
    }
}

/// Builds the union of `ell` k-simplices glued along (k-1)-faces, from an
/// explicit list of `ell - 1` choices. Choice `i` must be a (k-1)-face of
/// the complex built so far; the result lives on `k + ell` vertices.
pub fn build_htype(k: usize, ell: usize, choices: &[Face]) -> Result<SimplicialComplex> {
    if k < 1 || ell < 1 {
        return Err(Error::InvalidParameter("need k >= 1 and ell >= 1".into()));
    }
    if choices.len() != ell - 1 {
        return Err(Error::InvalidParameter(format!(
            "expected {} gluing choices, got {}",
            ell - 1,
            choices.len()
        )));
    }
    let mut complex = SimplicialComplex::simplex(k);
    for sigma in choices {
        if sigma.len() != k {
            return Err(Error::FaceSizeMismatch { expected: k, got: sigma.len() });
        }
        complex = complex.glue_along_face(sigma, k)?;
    }
    Ok(complex)
}

/// Generates the gluing choices for a mode and builds the family member.
pub fn htype_family(
    k: usize,
    ell: usize,
    mode: HtypeMode,
    seed: u64,
) -> Result<(Vec<Face>, SimplicialComplex)> {
    if k < 1 || ell < 1 {
        return Err(Error::InvalidParameter("need k >= 1 and ell >= 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut complex = SimplicialComplex::simplex(k);
    let mut last: Vec<usize> = (1..=k + 1).collect();
    let mut choices = Vec::with_capacity(ell - 1);
    for _ in 2..=ell {
        let sigma = match mode {
            HtypeMode::Chain => Face::new(last[1..].to_vec())?,
            HtypeMode::Star => Face::new((1..=k).collect())?,
            HtypeMode::Random => {
                let faces = complex.all_faces(k as i32 - 1);
                faces[rng.random_range(0..faces.len())].clone()
            }
        };
        complex = complex.glue_along_face(&sigma, k)?;
        let new_vertex = *complex.vertices().last().unwrap();
        last = sigma.vertices().to_vec();
        last.push(new_vertex);
        choices.push(sigma);
    }
    Ok((choices, complex))
}

/// A Betti vector, indexed by degree from zero. Comparison ignores trailing
/// zeros.
#[derive(Clone, Eq, Debug)]
pub struct ExpectedBetti(pub Vec<usize>);

impl ExpectedBetti {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

impl PartialEq for ExpectedBetti {
    fn eq(&self, other: &Self) -> bool {
        betti_eq(&self.0, &other.0)
    }
}

impl fmt::Display for ExpectedBetti {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Equality of Betti vectors up to trailing zeros.
pub fn betti_eq(a: &[usize], b: &[usize]) -> bool {
    let trim = |v: &[usize]| {
        let mut n = v.len();
        while n > 0 && v[n - 1] == 0 {
            n -= 1;
        }
        n
    };
    let (na, nb) = (trim(a), trim(b));
    na == nb && a[..na] == b[..nb]
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// Betti vector of a wedge of spheres with `(k-2) * C(ell, k-1)` copies of
/// S^k for k = 3..ell+1, plus the unit in degree zero.
#[allow(clippy::needless_range_loop)]
pub fn wedge_betti(ell: usize) -> ExpectedBetti {
    let mut b = vec![0usize; ell + 2];
    b[0] = 1;
    for k in 3..=ell + 1 {
        b[k] = (k - 2) * binomial(ell, k - 1);
    }
    ExpectedBetti(b)
}

/// Betti vector of the connected sum of products of spheres
/// `S^k x S^(ell+2d-k)` with the same multiplicities: the wedge coefficients
/// folded symmetrically into total dimension `n = ell + 2d`.
#[allow(clippy::needless_range_loop)]
pub fn connected_sum_betti(d: usize, ell: usize) -> ExpectedBetti {
    let n = ell + 2 * d;
    let c = |k: usize| -> usize {
        if (3..=ell + 1).contains(&k) {
            (k - 2) * binomial(ell, k - 1)
        } else {
            0
        }
    };
    let mut b = vec![0usize; n + 1];
    b[0] = 1;
    b[n] = 1;
    for p in 1..n {
        b[p] = c(p) + c(n - p);
    }
    ExpectedBetti(b)
}

/// Outcome of the stacked-ball facet audit for one `(d, ell)` pair.
///
/// `facets` is the union over all stages of the stage-boundary facets (every
/// (d-1)-face that is free at the moment it appears); the expected count is
/// `ell * d + 1`, of which exactly `ell` avoid vertex 1, and for d >= 2 those
/// `ell` facets generate the vertex-deleted boundary complex, glued in
/// sequence along prescribed (d-2)-faces.
#[derive(Clone, Debug)]
pub struct StackedFacetReport {
    pub d: usize,
    pub ell: usize,
    pub facets: Vec<Face>,
    pub expected_count: usize,
    pub avoiding_vertex_one: Vec<Face>,
    pub expected_avoiding: Vec<Face>,
    pub count_ok: bool,
    pub avoiding_ok: bool,
    /// None for d = 1, where the deletion filtration degenerates.
    pub filtration_ok: Option<bool>,
}

impl StackedFacetReport {
    pub fn pass(&self) -> bool {
        self.count_ok && self.avoiding_ok && self.filtration_ok.unwrap_or(true)
    }
}

/// The `ell` boundary facets avoiding vertex 1, in construction order.
pub fn facets_avoiding_vertex_one(d: usize, ell: usize) -> Result<Vec<Face>> {
    if d < 1 || ell < 1 {
        return Err(Error::InvalidParameter("need d >= 1 and ell >= 1".into()));
    }
    let mut expected = vec![Face::new((2..=d + 1).collect())?];
    if ell >= 2 {
        expected.push(Face::new((2..=d).chain(std::iter::once(d + 2)).collect())?);
    }
    for k in 3..=ell {
        let face = if d == 1 {
            Face::new(vec![d + k])?
        } else {
            Face::new((2..=d - 1).chain([d + k - 1, d + k]).collect())?
        };
        expected.push(face);
    }
    Ok(expected)
}

/// Audits the combinatorics of the prescribed stacked ball: facet counts,
/// the explicit list of facets avoiding vertex 1, and (for d >= 2) that
/// those facets rebuild the boundary complex with vertex 1 deleted.
pub fn validate_stacked_facets(d: usize, ell: usize) -> Result<StackedFacetReport> {
    let history = prescribed_history(d, ell)?;
    let mut ball = SimplicialComplex::simplex(d);
    let mut union: BTreeSet<Face> = free_facets(&ball).into_iter().collect();
    for step in &history.steps {
        ball = ball.glue_along_face(step, d)?;
        union.extend(free_facets(&ball));
    }
    let facets: Vec<Face> = union.into_iter().collect();
    let expected_count = ell * d + 1;
    let count_ok = facets.len() == expected_count;

    let avoiding: Vec<Face> =
        facets.iter().filter(|f| !f.contains_vertex(1)).cloned().collect();
    let mut expected_avoiding = facets_avoiding_vertex_one(d, ell)?;
    expected_avoiding.sort();
    let avoiding_ok = avoiding == expected_avoiding;

    let filtration_ok = if d >= 2 {
        Some(check_deletion_filtration(d, ell, &ball)?)
    } else {
        None
    };

    Ok(StackedFacetReport {
        d,
        ell,
        facets,
        expected_count,
        avoiding_vertex_one: avoiding,
        expected_avoiding,
        count_ok,
        avoiding_ok,
        filtration_ok,
    })
}

/// For d >= 2: the facets avoiding vertex 1, glued in construction order
/// along the prescribed (d-2)-faces, rebuild exactly the boundary complex
/// with vertex 1 removed.
fn check_deletion_filtration(
    d: usize,
    ell: usize,
    ball: &SimplicialComplex,
) -> Result<bool> {
    let listed = facets_avoiding_vertex_one(d, ell)?;

    // The (d-2)-face each new piece is glued along.
    let mut gluing_faces = Vec::new();
    if ell >= 2 {
        gluing_faces.push(Face::new((2..=d).collect())?);
    }
    for k in 3..=ell {
        gluing_faces.push(Face::new((2..=d - 1).chain(std::iter::once(d + k - 1)).collect())?);
    }

    let mut seen_vertices: BTreeSet<usize> = listed[0].vertices().iter().copied().collect();
    for (step, face) in listed.iter().enumerate().skip(1) {
        let sigma = &gluing_faces[step - 1];
        if !sigma.is_subset_of(face) {
            return Ok(false);
        }
        let overlap: Vec<usize> = face
            .vertices()
            .iter()
            .copied()
            .filter(|v| seen_vertices.contains(v))
            .collect();
        if overlap != sigma.vertices() {
            return Ok(false);
        }
        seen_vertices.extend(face.vertices().iter().copied());
    }

    let deleted = ball.boundary_complex()?.delete_vertex(1)?;
    let rebuilt: Vec<Vec<usize>> = {
        let mut v: Vec<Vec<usize>> = listed.iter().map(|f| f.vertices().to_vec()).collect();
        v.sort();
        v
    };
    let actual: Vec<Vec<usize>> =
        deleted.facets().iter().map(|f| f.vertices().to_vec()).collect();
    Ok(rebuilt == actual)
}
