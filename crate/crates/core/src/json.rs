//! The JSON interchange format for complexes: `{"m": 5, "facets": [[1,2],..]}`
//! with 1-based, strictly ascending labels. The reader enforces the type
//! invariants (labels in range, faces sorted without repeats, facet list
//! free of duplicates and containments); the writer only accepts complexes
//! whose vertex set is contiguous `1..=m`, which is true of everything the
//! generators emit.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ComplexJson {
    m: usize,
    facets: Vec<Vec<usize>>,
}

pub fn read_complex(text: &str) -> Result<SimplicialComplex> {
    let raw: ComplexJson = serde_json::from_str(text)?;
    let mut faces = Vec::with_capacity(raw.facets.len());
    for facet in &raw.facets {
        if facet.is_empty() {
            return Err(Error::InvalidJson("empty facet".into()));
        }
        if !facet.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidJson(format!(
                "facet {facet:?} is not strictly ascending"
            )));
        }
        for &v in facet {
            if v == 0 || v > raw.m {
                return Err(Error::LabelOutOfRange { label: v, m: raw.m });
            }
        }
        faces.push(Face::new(facet.clone())?);
    }
    for (i, a) in faces.iter().enumerate() {
        for (j, b) in faces.iter().enumerate() {
            if i != j && a.is_subset_of(b) {
                return Err(Error::InvalidJson(format!(
                    "facet {a} is contained in facet {b}"
                )));
            }
        }
    }
    let facet_lists: Vec<Vec<usize>> =
        faces.iter().map(|f| f.vertices().to_vec()).collect();
    SimplicialComplex::new(raw.m, &facet_lists)
}

pub fn write_complex(k: &SimplicialComplex) -> Result<String> {
    let m = k.vertex_count();
    let contiguous = k.vertices().iter().copied().eq(1..=m);
    if !contiguous {
        return Err(Error::NonContiguousUniverse);
    }
    let json = ComplexJson {
        m,
        facets: k.facets().iter().map(|f| f.vertices().to_vec()).collect(),
    };
    Ok(serde_json::to_string(&json)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let k = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
            .unwrap();
        let text = write_complex(&k).unwrap();
        let back = read_complex(&text).unwrap();
        assert_eq!(back, k);
    }

    #[test]
    fn reader_rejects_invariant_violations() {
        assert!(read_complex(r#"{"m": 2, "facets": [[1, 3]]}"#).is_err());
        assert!(read_complex(r#"{"m": 3, "facets": [[2, 1]]}"#).is_err());
        assert!(read_complex(r#"{"m": 3, "facets": [[1, 1]]}"#).is_err());
        assert!(read_complex(r#"{"m": 3, "facets": [[1, 2, 3], [1, 2]]}"#).is_err());
        assert!(read_complex(r#"{"m": 3, "facets": [[1, 2], [1, 2]]}"#).is_err());
        assert!(read_complex(r#"{"m": 3, "facets": [[]]}"#).is_err());
        assert!(read_complex("not json").is_err());
    }

    #[test]
    fn reader_accepts_ghosts_and_empty() {
        let k = read_complex(r#"{"m": 4, "facets": [[2], [4]]}"#).unwrap();
        assert_eq!(k.ghost_vertices(), vec![1, 3]);
        let empty = read_complex(r#"{"m": 2, "facets": []}"#).unwrap();
        assert!(empty.is_empty());
        assert_eq!(empty.vertex_count(), 2);
    }

    #[test]
    fn writer_requires_contiguous_labels() {
        let k = SimplicialComplex::new(4, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]])
            .unwrap();
        let sub = k.delete_vertex(1).unwrap();
        assert!(write_complex(&sub).is_err());
    }
}
