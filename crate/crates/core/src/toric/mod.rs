//! Toric ideals of integer configurations and their reverse lexicographic
//! Gröbner bases.
//!
//! Column `i` of a configuration is variable `i`, mapped to `t^{column} s`.
//! The zero column, when present, is the distinguished variable `z`.

pub mod binomial;
pub mod compressed;
pub mod fiber;
pub mod groebner;
pub mod harmony;
pub mod ideal;
pub mod triangulation;

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactmath::{Int, IntMat, IntVec};

pub use binomial::{Binomial, Monomial, MonomialIdeal, MonomialOrder};
pub use compressed::{
    exists_squarefree_revlex_among, exists_squarefree_revlex_z_smallest, is_compressed,
    is_compressed_by_enumeration, CompressedReport, CROSS_CHECK_LIMIT, Z_SMALLEST_LIMIT,
};
pub use fiber::{fiber, fibers_of_degree, standard_monomials_match_fibers, FiberCheck, DEFAULT_DEGREE_BOUND};
pub use groebner::{buchberger, initial_ideal, GroebnerBasis};
pub use harmony::{
    divisibility_order, harmony_violation, is_harmony, merge_config, theorem1_construction, verify_theorem1,
    HarmonyWitness, MergedOrderConstruction, Theorem1Verification,
};
pub use ideal::{saturate, toric_ideal_generators};
pub use triangulation::{triangulation_from_initial_ideal, InitialTriangulation};

/// Which block a merged-configuration variable belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MergeRoles {
    /// Number of negated `B` columns (variables `y1..ym`), placed first.
    pub m: usize,
    /// Number of `A` columns (variables `x1..xn`), placed next.
    pub n: usize,
}

/// An integer `d × N` configuration with distinct columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    d: usize,
    columns: Vec<IntVec>,
    zero_index: Option<usize>,
    roles: Option<MergeRoles>,
}

impl Configuration {
    /// Rejects repeated columns and columns of the wrong length.
    pub fn new(d: usize, columns: Vec<IntVec>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &columns {
            if c.len() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    got: c.len(),
                });
            }
            if !seen.insert(c) {
                return Err(Error::DuplicateColumn(c.to_string()));
            }
        }
        let zero_index = columns.iter().position(IntVec::is_zero);
        Ok(Configuration {
            d,
            columns,
            zero_index,
            roles: None,
        })
    }

    pub fn from_matrix(m: &IntMat) -> Result<Self> {
        Self::new(m.rows(), m.columns())
    }

    pub(crate) fn with_roles(mut self, roles: MergeRoles) -> Self {
        self.roles = Some(roles);
        self
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Number of columns (= number of variables).
    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn columns(&self) -> &[IntVec] {
        &self.columns
    }

    pub fn column(&self, i: usize) -> &IntVec {
        &self.columns[i]
    }

    pub fn has_zero_column(&self) -> bool {
        self.zero_index.is_some()
    }

    /// Index of the variable `z`.
    pub fn zero_index(&self) -> Option<usize> {
        self.zero_index
    }

    pub fn roles(&self) -> Option<MergeRoles> {
        self.roles
    }

    pub fn nonzero_count(&self) -> usize {
        self.len() - usize::from(self.has_zero_column())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.columns.iter().all(IntVec::is_nonnegative)
    }

    /// `A^♯`: appends the zero column unless one is already present.
    pub fn sharp(&self) -> Configuration {
        if self.has_zero_column() {
            return self.clone();
        }
        let mut columns = self.columns.clone();
        columns.push(IntVec::zeros(self.d));
        Configuration {
            d: self.d,
            zero_index: Some(columns.len() - 1),
            columns,
            roles: self.roles,
        }
    }

    pub fn without_zero_column(&self) -> Configuration {
        let columns: Vec<IntVec> = self.columns.iter().filter(|c| !c.is_zero()).cloned().collect();
        Configuration {
            d: self.d,
            columns,
            zero_index: None,
            roles: None,
        }
    }

    pub fn matrix(&self) -> IntMat {
        IntMat::from_columns(self.d, &self.columns)
    }

    /// The matrix with a row of ones appended, i.e. the exponents of `t` and `s`.
    pub fn homogenized_matrix(&self) -> IntMat {
        self.matrix().homogenized()
    }

    /// Image of a monomial under the toric map, as the exponent vector of `(t, s)`.
    pub fn image(&self, m: &Monomial) -> IntVec {
        let mut out = IntVec::zeros(self.d + 1);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let e = Int::from(e);
            for r in 0..self.d {
                out[r] += &self.columns[i][r] * &e;
            }
            out[self.d] += e;
        }
        out
    }

    /// Variable names: `y1..ym, x1..xn, z` for merged configurations, otherwise
    /// `x1, x2, ...` over the nonzero columns and `z` for the zero column.
    pub fn var_names(&self) -> Vec<String> {
        if let Some(MergeRoles { m, n }) = self.roles {
            let mut names: Vec<String> = (1..=m).map(|j| format!("y{j}")).collect();
            names.extend((1..=n).map(|i| format!("x{i}")));
            if self.has_zero_column() {
                names.push("z".into());
            }
            return names;
        }
        let mut k = 0;
        self.columns
            .iter()
            .map(|c| {
                if c.is_zero() {
                    "z".to_string()
                } else {
                    k += 1;
                    format!("x{k}")
                }
            })
            .collect()
    }

    /// Parses the matrix text format, optionally followed by a `sharp` line.
    pub fn parse(text: &str) -> Result<Configuration> {
        let mut lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        let sharp = lines.last() == Some(&"sharp");
        if sharp {
            lines.pop();
        }
        let m = IntMat::parse_text(&lines.join("\n"))?;
        let c = Configuration::from_matrix(&m)?;
        Ok(if sharp { c.sharp() } else { c })
    }

    pub fn to_text(&self) -> String {
        self.matrix().to_text()
    }
}
