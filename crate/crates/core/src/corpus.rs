//! Built-in named matrices, shipped as embedded "mat v1" files.
//!
//! The six entries are the reference objects every other module is tested
//! against: the Hoffman–Singleton forms of the 5-cycle and the Petersen
//! graph, the two 3-regular Terwilliger graphs T₁ and T₂ on ten vertices,
//! and the block matrix `P` (plus its assembled HS-form) for the 17₄
//! configuration #1971 in the Betten–Betten census.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::format;
use crate::matrix::BinMatrix;

/// A corpus entry: the matrix, its row labels when the source figure names
/// the vertices, and a provenance note.
#[derive(Debug, Clone)]
pub struct NamedMatrix {
    pub name: &'static str,
    pub matrix: BinMatrix,
    pub labels: Option<Vec<String>>,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownName {
    pub name: String,
}

impl fmt::Display for UnknownName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown corpus name {:?}; known: ", self.name)?;
        for (i, n) in NAMES.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        Ok(())
    }
}

impl core::error::Error for UnknownName {}

pub const NAMES: [&str; 6] = [
    "c5_hs",
    "petersen_hs",
    "a1_t1",
    "a2_t2",
    "p_1971",
    "s_1971",
];

const FILES: [(&str, &str, &str); 6] = [
    (
        "c5_hs",
        include_str!("../corpus/c5_hs.mat"),
        "Hoffman & Singleton (1960): HS-form of the 5-cycle adjacency matrix",
    ),
    (
        "petersen_hs",
        include_str!("../corpus/petersen_hs.mat"),
        "Hoffman & Singleton (1960): HS-form of the Petersen graph adjacency matrix",
    ),
    (
        "a1_t1",
        include_str!("../corpus/a1_t1.mat"),
        "adjacency matrix A1 of the Terwilliger graph T1 (mu = 1, two triangles)",
    ),
    (
        "a2_t2",
        include_str!("../corpus/a2_t2.mat"),
        "adjacency matrix A2 of the Terwilliger graph T2, an incidence matrix of \
         the 10_3 configuration 10_3F in Kantor's list",
    ),
    (
        "p_1971",
        include_str!("../corpus/p_1971.mat"),
        "block matrix P of the HS-form for configuration #1971 in the \
         Betten-Betten census of 17_4 configurations (1999)",
    ),
    (
        "s_1971",
        include_str!("../corpus/s_1971.mat"),
        "assembled HS-form S_HS(P), an incidence matrix of configuration #1971",
    ),
];

/// The raw embedded "mat v1" text of a corpus file.
pub fn raw_file(name: &str) -> Result<&'static str, UnknownName> {
    FILES
        .iter()
        .find(|(n, _, _)| *n == name)
        .map(|(_, text, _)| *text)
        .ok_or_else(|| UnknownName {
            name: String::from(name),
        })
}

/// Looks up a corpus matrix by name.
pub fn named(name: &str) -> Result<NamedMatrix, UnknownName> {
    let (entry_name, text, provenance) = FILES
        .iter()
        .find(|(n, _, _)| *n == name)
        .ok_or_else(|| UnknownName {
            name: String::from(name),
        })?;
    let (matrix, labels) =
        format::parse_bin(text).expect("embedded corpus files are well formed");
    Ok(NamedMatrix {
        name: entry_name,
        matrix,
        labels,
        provenance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{classify_membership, theta, theta_iterate};

    #[test]
    fn all_names_resolve() {
        for name in NAMES {
            let m = named(name).unwrap();
            assert_eq!(m.name, name);
        }
        assert!(named("nope").is_err());
    }

    #[test]
    fn a2_is_a_regular_self_polar_incidence_matrix() {
        let a2 = named("a2_t2").unwrap().matrix;
        assert_eq!(a2.constant_sum(), Some(3));
        assert!(a2.is_symmetric());
        assert!(a2.has_zero_diagonal());
    }

    #[test]
    fn p_1971_shape() {
        let p = named("p_1971").unwrap().matrix;
        assert_eq!(p.n(), 12);
        assert_eq!(p.constant_sum(), Some(3));
        assert!(p.is_symmetric());
        assert!(p.has_zero_diagonal());
    }

    #[test]
    fn labels_follow_the_figures() {
        let a1 = named("a1_t1").unwrap();
        assert_eq!(
            a1.labels.as_deref().unwrap(),
            ["c", "c1", "c2", "c3", "c11", "c21", "c31", "c12", "c22", "c32"]
        );
        let a2 = named("a2_t2").unwrap();
        assert_eq!(
            a2.labels.as_deref().unwrap(),
            ["c", "c1", "c2", "c3", "c11", "c12", "c21", "c22", "c31", "c32"]
        );
    }

    #[test]
    fn fixed_point_behaviour_of_the_corpus() {
        // c5 and petersen are fixed points; a2 has period 3; s_1971 has
        // period 2; a1 is not fixed but its image is
        for name in ["c5_hs", "petersen_hs"] {
            let m = named(name).unwrap().matrix.to_int();
            assert_eq!(theta(&m).unwrap(), m, "{name}");
        }
        let a2 = named("a2_t2").unwrap().matrix.to_int();
        assert_ne!(theta(&a2).unwrap(), a2);
        assert_eq!(theta_iterate(&a2, 3).unwrap(), a2);

        let s = named("s_1971").unwrap().matrix.to_int();
        assert_ne!(theta(&s).unwrap(), s);
        assert_eq!(theta_iterate(&s, 2).unwrap(), s);

        let a1 = named("a1_t1").unwrap().matrix.to_int();
        let image = theta(&a1).unwrap();
        assert_ne!(image, a1);
        assert_eq!(theta(&image).unwrap(), image);
    }

    #[test]
    fn corpus_satisfies_lsz_where_expected() {
        for name in ["c5_hs", "petersen_hs", "a1_t1", "a2_t2", "s_1971"] {
            let m = named(name).unwrap().matrix.to_int();
            assert!(classify_membership(&m).satisfies_lsz(), "{name}");
        }
    }
}
