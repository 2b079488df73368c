//! Immutable simplicial complexes on labeled vertex sets.
//!
//! A complex is stored by its inclusion-maximal faces (facets) together with
//! an explicit vertex set. Labels are 1-based and are never compacted:
//! restricting to a subset keeps the surviving labels, and a label may be a
//! "ghost" (a member of the vertex set that appears in no facet). Ghosts are
//! meaningful downstream: the moment-angle complex of `K` depends on the
//! vertex set, not just on the faces.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};

/// A single face: a strictly increasing list of vertex labels.
///
/// The empty face is allowed; it only ever appears as the augmentation
/// generator inside chain complexes and is never stored as a facet.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Face {
    vertices: Vec<usize>,
}

impl Face {
    /// Builds a face from arbitrary-order vertices, rejecting duplicates.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateVertex(w[0]));
            }
        }
        Ok(Face { vertices })
    }

    /// Wraps an already sorted, duplicate-free vertex list.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face { vertices }
    }

    pub fn empty() -> Self {
        Face { vertices: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Geometric dimension: one less than the vertex count (-1 for the empty face).
    pub fn dim(&self) -> i32 {
        self.vertices.len() as i32 - 1
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Subset test; both faces are sorted so a merge walk suffices.
    pub fn is_subset_of(&self, other: &Face) -> bool {
        let mut it = other.vertices.iter();
        'outer: for v in &self.vertices {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    /// Intersection with a sorted label set.
    pub fn intersect(&self, sorted_set: &[usize]) -> Face {
        let kept = self
            .vertices
            .iter()
            .copied()
            .filter(|v| sorted_set.binary_search(v).is_ok())
            .collect();
        Face { vertices: kept }
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.vertices.iter().join(","))
    }
}

/// A finite simplicial complex with labeled vertices and canonical facet order.
///
/// Invariants: the vertex set is sorted and duplicate-free, every facet is a
/// nonempty subset of the vertex set, no facet contains another, and facets
/// are sorted lexicographically. The complex with no facets is the empty
/// complex (its unique face is the empty face).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    vertices: Vec<usize>,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// Builds the complex on vertex set `{1..m}` generated by `faces`.
    ///
    /// Generating faces may be listed in any order and may be redundant;
    /// only the inclusion-maximal ones are stored. Empty faces are ignored.
    pub fn new(m: usize, faces: &[Vec<usize>]) -> Result<Self> {
        let mut candidates = Vec::with_capacity(faces.len());
        for raw in faces {
            let face = Face::new(raw.clone())?;
            for &v in face.vertices() {
                if v == 0 || v > m {
                    return Err(Error::LabelOutOfRange { label: v, m });
                }
            }
            if !face.is_empty() {
                candidates.push(face);
            }
        }
        Ok(Self::from_parts((1..=m).collect(), candidates))
    }

    /// The standard simplex on `{1..n+1}` (dimension `n`).
    pub fn simplex(n: usize) -> Self {
        let all: Vec<usize> = (1..=n + 1).collect();
        Self::from_parts(all.clone(), vec![Face::from_sorted(all)])
    }

    /// Internal constructor: sorts, deduplicates, and keeps maximal faces only.
    pub(crate) fn from_parts(vertices: Vec<usize>, candidates: Vec<Face>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        let mut by_size: Vec<Face> = candidates.into_iter().filter(|f| !f.is_empty()).collect();
        by_size.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        by_size.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for face in by_size {
            if !facets.iter().any(|kept| face.is_subset_of(kept)) {
                facets.push(face);
            }
        }
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    /// Number of vertices in the vertex set (ghosts included).
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The vertex set, sorted ascending.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Dimension of the complex; -1 when there are no facets.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(first) => self.facets.iter().all(|f| f.len() == first.len()),
        }
    }

    /// Vertices that actually occur in some facet.
    pub fn support(&self) -> Vec<usize> {
        let set: BTreeSet<usize> =
            self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect();
        set.into_iter().collect()
    }

    /// Vertex-set members that occur in no facet.
    pub fn ghost_vertices(&self) -> Vec<usize> {
        let support: BTreeSet<usize> = self.support().into_iter().collect();
        self.vertices.iter().copied().filter(|v| !support.contains(v)).collect()
    }

    /// Face membership. The empty face belongs to every complex.
    pub fn has_face(&self, face: &Face) -> bool {
        if face.is_empty() {
            return true;
        }
        self.facets.iter().any(|f| face.is_subset_of(f))
    }

    /// All `d`-dimensional faces in lexicographic order. `d = -1` yields the
    /// single empty face; dimensions above `dim()` yield nothing.
    pub fn all_faces(&self, d: i32) -> Vec<Face> {
        if d < -1 {
            return Vec::new();
        }
        if d == -1 {
            return vec![Face::empty()];
        }
        let k = d as usize + 1;
        let mut seen: BTreeSet<Face> = BTreeSet::new();
        for facet in &self.facets {
            if facet.len() < k {
                continue;
            }
            for combo in facet.vertices().iter().copied().combinations(k) {
                seen.insert(Face::from_sorted(combo));
            }
        }
        seen.into_iter().collect()
    }

    /// Face counts per dimension `0..=dim`. Empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        (0..=self.dim()).map(|d| self.all_faces(d).len()).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &count)| if d % 2 == 0 { count as i64 } else { -(count as i64) })
            .sum()
    }

    /// The full subcomplex on the labels in `subset`: all faces contained in
    /// `subset`, with `subset` itself as the new vertex set. Labels are kept
    /// as-is, so members of `subset` that span no face stay ghosts.
    pub fn full_subcomplex(&self, subset: &[usize]) -> Result<Self> {
        let mut labels: Vec<usize> = subset.to_vec();
        labels.sort_unstable();
        labels.dedup();
        for &v in &labels {
            if self.vertices.binary_search(&v).is_err() {
                return Err(Error::LabelOutOfRange { label: v, m: self.vertex_count() });
            }
        }
        let candidates: Vec<Face> =
            self.facets.iter().map(|f| f.intersect(&labels)).filter(|f| !f.is_empty()).collect();
        Ok(Self::from_parts(labels, candidates))
    }

    /// Removes one vertex from the vertex set and restricts to the rest.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if self.vertices.binary_search(&v).is_err() {
            return Err(Error::LabelOutOfRange { label: v, m: self.vertex_count() });
        }
        let rest: Vec<usize> = self.vertices.iter().copied().filter(|&w| w != v).collect();
        self.full_subcomplex(&rest)
    }

    /// Join of two complexes. The second complex has every label shifted by
    /// the largest label of the first so the vertex sets are disjoint; the
    /// shift is returned alongside the join.
    pub fn join(&self, other: &Self) -> (Self, usize) {
        let offset = self.vertices.last().copied().unwrap_or(0);
        let shifted: Vec<usize> = other.vertices.iter().map(|v| v + offset).collect();

        // The empty complex contributes its unique face (the empty face).
        let left: Vec<Face> = if self.facets.is_empty() {
            vec![Face::empty()]
        } else {
            self.facets.clone()
        };
        let right: Vec<Face> = if other.facets.is_empty() {
            vec![Face::empty()]
        } else {
            other
                .facets
                .iter()
                .map(|f| Face::from_sorted(f.vertices().iter().map(|v| v + offset).collect()))
                .collect()
        };

        let mut candidates = Vec::with_capacity(left.len() * right.len());
        for a in &left {
            for b in &right {
                let mut v = a.vertices().to_vec();
                v.extend_from_slice(b.vertices());
                if !v.is_empty() {
                    candidates.push(Face::from_sorted(v));
                }
            }
        }
        let mut universe = self.vertices.clone();
        universe.extend_from_slice(&shifted);
        (Self::from_parts(universe, candidates), offset)
    }

    /// Glues a `k`-simplex onto the complex along the `(k-1)`-face `sigma`.
    /// The new simplex has vertex set `sigma + {new}` where `new` is one past
    /// the largest existing label.
    pub fn glue_along_face(&self, sigma: &Face, k: usize) -> Result<Self> {
        if sigma.len() != k {
            return Err(Error::FaceSizeMismatch { expected: k, got: sigma.len() });
        }
        if !self.has_face(sigma) {
            return Err(Error::FaceNotInComplex(sigma.to_string()));
        }
        let new_vertex = self.vertices.last().copied().unwrap_or(0) + 1;
        let mut simplex = sigma.vertices().to_vec();
        simplex.push(new_vertex);
        let mut universe = self.vertices.clone();
        universe.push(new_vertex);
        let mut candidates = self.facets.clone();
        candidates.push(Face::from_sorted(simplex));
        Ok(Self::from_parts(universe, candidates))
    }

    /// Boundary of a pure complex: the subcomplex generated by the
    /// codimension-1 faces lying in exactly one facet. The vertex set is kept,
    /// so vertices interior to the ball become ghosts. Fails if some
    /// codimension-1 face lies in three or more facets.
    pub fn boundary_complex(&self) -> Result<Self> {
        if self.facets.is_empty() {
            return Ok(self.clone());
        }
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let d = self.dim();
        let mut boundary = Vec::new();
        for ridge in self.all_faces(d - 1) {
            let count = self.facets.iter().filter(|f| ridge.is_subset_of(f)).count();
            match count {
                1 => boundary.push(ridge),
                2 => {}
                n => {
                    return Err(Error::NotPseudomanifold { face: ridge.to_string(), count: n });
                }
            }
        }
        Ok(Self::from_parts(self.vertices.clone(), boundary))
    }

    /// True when the nonempty part of `subset` spans a face, i.e. the full
    /// subcomplex on `subset` deformation retracts to a point (or has ghosts
    /// around a single simplex). Used to prune trivial cohomology summands.
    pub fn subset_spans_simplex(&self, subset: &[usize]) -> bool {
        let support: BTreeSet<usize> = self.support().into_iter().collect();
        let core: Vec<usize> =
            subset.iter().copied().filter(|v| support.contains(v)).collect();
        if core.is_empty() {
            return false;
        }
        self.has_face(&Face::from_sorted(core))
    }

    /// Cache key invariant under relabeling: facets rewritten over the
    /// compacted support. Ghosts are irrelevant to reduced cohomology, so
    /// they are not part of the key.
    pub fn canonical_key(&self) -> String {
        let support = self.support();
        let position = |v: usize| support.binary_search(&v).unwrap() + 1;
        let mut out = String::new();
        for facet in &self.facets {
            if !out.is_empty() {
                out.push(';');
            }
            out.push_str(&facet.vertices().iter().map(|&v| position(v).to_string()).join(","));
        }
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "complex on {{{}}} with facets [{}]",
            self.vertices.iter().join(","),
            self.facets.iter().join(", ")
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(m: usize, faces: &[&[usize]]) -> SimplicialComplex {
        let faces: Vec<Vec<usize>> = faces.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::new(m, &faces).unwrap()
    }

    fn facet_lists(k: &SimplicialComplex) -> Vec<Vec<usize>> {
        k.facets().iter().map(|f| f.vertices().to_vec()).collect()
    }

    #[test]
    fn generation_absorbs_contained_faces() {
        let k = cx(3, &[&[1, 2, 3], &[1, 2]]);
        assert_eq!(facet_lists(&k), vec![vec![1, 2, 3]]);
    }

    #[test]
    fn triangle_boundary_has_three_facets() {
        let k = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(facet_lists(&k), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(k.f_vector(), vec![3, 3]);
        assert_eq!(k.euler_characteristic(), 0);
    }

    #[test]
    fn empty_complex_with_ghosts() {
        let k = cx(2, &[]);
        assert!(k.is_empty());
        assert_eq!(k.vertex_count(), 2);
        assert_eq!(k.ghost_vertices(), vec![1, 2]);
        assert_eq!(k.dim(), -1);
        assert_eq!(k.f_vector(), Vec::<usize>::new());
        assert_eq!(k.euler_characteristic(), 0);
    }

    #[test]
    fn rejects_bad_labels_and_duplicates() {
        assert!(matches!(
            SimplicialComplex::new(2, &[vec![1, 3]]),
            Err(Error::LabelOutOfRange { label: 3, .. })
        ));
        assert!(matches!(
            SimplicialComplex::new(3, &[vec![2, 2]]),
            Err(Error::DuplicateVertex(2))
        ));
    }

    #[test]
    fn all_faces_of_triangle_boundary() {
        let k = cx(3, &[&[1, 2], &[2, 3], &[1, 3]]);
        let edges: Vec<_> = k.all_faces(1).iter().map(|f| f.vertices().to_vec()).collect();
        assert_eq!(edges, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert!(k.all_faces(2).is_empty());
        let verts: Vec<_> = SimplicialComplex::simplex(2)
            .all_faces(0)
            .iter()
            .map(|f| f.vertices().to_vec())
            .collect();
        assert_eq!(verts, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn full_subcomplex_of_square_opposite_corners() {
        let square = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let sub = square.full_subcomplex(&[1, 3]).unwrap();
        assert_eq!(facet_lists(&sub), vec![vec![1], vec![3]]);
        assert_eq!(sub.vertices(), &[1, 3]);

        let nothing = square.full_subcomplex(&[]).unwrap();
        assert!(nothing.is_empty());

        let all = square.full_subcomplex(&[1, 2, 3, 4]).unwrap();
        assert_eq!(all, square);
    }

    #[test]
    fn full_subcomplex_nests() {
        let k = cx(5, &[&[1, 2, 3], &[2, 3, 4], &[4, 5]]);
        let a = k.full_subcomplex(&[1, 2, 3, 4]).unwrap();
        let b = a.full_subcomplex(&[2, 3, 4]).unwrap();
        let direct = k.full_subcomplex(&[2, 3, 4]).unwrap();
        assert_eq!(b, direct);
    }

    #[test]
    fn join_of_point_pairs_is_square() {
        let two = cx(2, &[&[1], &[2]]);
        let (square, offset) = two.join(&two);
        assert_eq!(offset, 2);
        assert_eq!(
            facet_lists(&square),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
    }

    #[test]
    fn join_with_point_is_cone() {
        let square = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let point = cx(1, &[&[1]]);
        let (cone, _) = square.join(&point);
        assert_eq!(cone.vertex_count(), 5);
        assert_eq!(cone.facets().len(), 4);
        assert!(cone.facets().iter().all(|f| f.contains_vertex(5)));
    }

    #[test]
    fn octahedron_as_triple_join() {
        let two = cx(2, &[&[1], &[2]]);
        let (four, _) = two.join(&two);
        let (oct, _) = four.join(&two);
        assert_eq!(oct.facets().len(), 8);
        assert_eq!(oct.f_vector(), vec![6, 12, 8]);
        assert_eq!(oct.euler_characteristic(), 2);
    }

    #[test]
    fn join_f_vector_convolution() {
        let a = cx(3, &[&[1, 2], &[2, 3]]);
        let b = cx(4, &[&[1, 2], &[3], &[4]]);
        let (j, _) = a.join(&b);
        let fa = a.f_vector();
        let fb = b.f_vector();
        let with_empty = |f: &[usize], i: i32| -> i64 {
            if i == -1 {
                1
            } else {
                f.get(i as usize).copied().unwrap_or(0) as i64
            }
        };
        for (k, &fk) in j.f_vector().iter().enumerate() {
            let mut total = 0i64;
            for i in -1..=(k as i32) {
                total += with_empty(&fa, i) * with_empty(&fb, k as i32 - 1 - i);
            }
            assert_eq!(total, fk as i64, "f_{k} mismatch");
        }
    }

    #[test]
    fn glue_examples() {
        let tri = SimplicialComplex::simplex(2);
        let glued = tri.glue_along_face(&Face::new(vec![1, 2]).unwrap(), 2).unwrap();
        assert_eq!(facet_lists(&glued), vec![vec![1, 2, 3], vec![1, 2, 4]]);

        let edge = SimplicialComplex::simplex(1);
        let path = edge.glue_along_face(&Face::new(vec![1]).unwrap(), 1).unwrap();
        assert_eq!(facet_lists(&path), vec![vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn glue_rejects_missing_or_missized_faces() {
        let tri = SimplicialComplex::simplex(2);
        assert!(tri.glue_along_face(&Face::new(vec![1, 4]).unwrap(), 2).is_err());
        assert!(tri.glue_along_face(&Face::new(vec![1, 2]).unwrap(), 3).is_err());
    }

    #[test]
    fn glue_preserves_pureness_and_dimension() {
        let mut k = SimplicialComplex::simplex(3);
        for _ in 0..4 {
            let free = k.all_faces(k.dim() - 1).into_iter().next().unwrap();
            k = k.glue_along_face(&free, k.dim() as usize).unwrap();
            assert!(k.is_pure());
            assert_eq!(k.dim(), 3);
        }
    }

    #[test]
    fn boundary_of_simplex() {
        for d in 1..=4 {
            let b = SimplicialComplex::simplex(d).boundary_complex().unwrap();
            assert_eq!(b.facets().len(), d + 1);
            assert!(b.is_pure());
            assert_eq!(b.dim(), d as i32 - 1);
        }
    }

    #[test]
    fn boundary_of_two_triangles_is_square() {
        let k = cx(4, &[&[1, 2, 3], &[1, 2, 4]]);
        let b = k.boundary_complex().unwrap();
        assert_eq!(
            facet_lists(&b),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
    }

    #[test]
    fn boundary_rejects_overcrowded_ridges() {
        // Three triangles sharing one edge.
        let k = cx(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert!(matches!(k.boundary_complex(), Err(Error::NotPseudomanifold { .. })));
    }

    #[test]
    fn delete_vertex_of_square_is_path() {
        let square = cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let path = square.delete_vertex(1).unwrap();
        assert_eq!(facet_lists(&path), vec![vec![2, 3], vec![3, 4]]);
        assert_eq!(path.vertices(), &[2, 3, 4]);

        let points = cx(5, &[&[1], &[2], &[3], &[4], &[5]]);
        let fewer = points.delete_vertex(3).unwrap();
        assert_eq!(fewer.facets().len(), 4);
    }

    #[test]
    fn generation_idempotence() {
        let k = cx(5, &[&[1, 2, 3], &[3, 4], &[5]]);
        let faces: Vec<Vec<usize>> =
            k.facets().iter().map(|f| f.vertices().to_vec()).collect();
        let rebuilt = SimplicialComplex::new(5, &faces).unwrap();
        assert_eq!(rebuilt, k);
    }

    #[test]
    fn canonical_key_compacts_labels() {
        let a = cx(4, &[&[2], &[4]]);
        let b = cx(2, &[&[1], &[2]]);
        assert_eq!(a.canonical_key(), b.canonical_key());
        let c = cx(2, &[&[1, 2]]);
        assert_ne!(a.canonical_key(), c.canonical_key());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_complex(max_m: usize) -> impl Strategy<Value = SimplicialComplex> {
            (1..=max_m).prop_flat_map(move |m| {
                proptest::collection::vec(
                    proptest::collection::btree_set(1..=m, 1..=m.min(4)),
                    0..=5,
                )
                .prop_map(move |faces| {
                    let faces: Vec<Vec<usize>> =
                        faces.into_iter().map(|f| f.into_iter().collect()).collect();
                    SimplicialComplex::new(m, &faces).unwrap()
                })
            })
        }

        fn mask_subset(labels: &[usize], mask: u64) -> Vec<usize> {
            labels
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect()
        }

        proptest! {
            #[test]
            fn generation_is_idempotent(k in arb_complex(6)) {
                let faces: Vec<Vec<usize>> =
                    k.facets().iter().map(|f| f.vertices().to_vec()).collect();
                let rebuilt = SimplicialComplex::new(k.vertex_count(), &faces).unwrap();
                prop_assert_eq!(rebuilt, k);
            }

            #[test]
            fn restriction_nests(k in arb_complex(6), i_mask in 0u64..64, j_mask in 0u64..64) {
                let i_set = mask_subset(k.vertices(), i_mask);
                let inner = k.full_subcomplex(&i_set).unwrap();
                let j_set = mask_subset(inner.vertices(), j_mask);
                let nested = inner.full_subcomplex(&j_set).unwrap();
                let direct = k.full_subcomplex(&j_set).unwrap();
                prop_assert_eq!(nested, direct);
            }

            #[test]
            fn join_satisfies_the_face_convolution(a in arb_complex(4), b in arb_complex(4)) {
                let (j, _) = a.join(&b);
                let fa = a.f_vector();
                let fb = b.f_vector();
                let count = |f: &[usize], d: i32| -> i64 {
                    if d == -1 { 1 } else { f.get(d as usize).copied().unwrap_or(0) as i64 }
                };
                let fj = j.f_vector();
                for k in 0..fj.len().max(fa.len() + fb.len() + 1) {
                    let mut total = 0i64;
                    for i in -1..=(k as i32) {
                        total += count(&fa, i) * count(&fb, k as i32 - 1 - i);
                    }
                    prop_assert_eq!(total, count(&fj, k as i32), "dimension {}", k);
                }
            }

            #[test]
            fn gluing_keeps_pure_complexes_pure(d in 1usize..=3, picks in proptest::collection::vec(0usize..100, 1..=4)) {
                let mut k = SimplicialComplex::simplex(d);
                for pick in picks {
                    let ridges = k.all_faces(d as i32 - 1);
                    let sigma = ridges[pick % ridges.len()].clone();
                    k = k.glue_along_face(&sigma, d).unwrap();
                    prop_assert!(k.is_pure());
                    prop_assert_eq!(k.dim(), d as i32);
                }
            }
        }
    }
}
