//! JSON file formats shared by the CLI and the Python bindings.
//!
//! All rational entries are strings in the grammar `-?digits(/digits)?`;
//! emission always uses canonical form (`"1/2"`, never `"2/4"`; integers
//! without a denominator). Field order and formatting are fixed, so emitted
//! documents are byte-reproducible.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{Matrix, Rational};
use crate::forms::{galilean_form, BilinearForm, GalileanParameters};
use crate::groups::{
    boost_algebra_generators, boost_family, rotation_algebra_generators, GeneratorFamily,
    GeneratorKind,
};
use crate::invariants::FormBasis;

/// Error for malformed input documents; the message identifies the offending
/// field or entry.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
}

fn invalid(msg: impl Into<String>) -> FormatError {
    FormatError::Invalid(msg.into())
}

/// Matrix document: `{"rows": R, "cols": C, "entries": [["p/q", ...], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixDto {
    pub fn from_matrix(m: &Matrix) -> Self {
        MatrixDto {
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows())
                .map(|r| (0..m.cols()).map(|c| m.get(r, c).to_string()).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, FormatError> {
        if self.rows == 0 || self.cols == 0 {
            return Err(invalid("matrix dimensions must be positive"));
        }
        if self.entries.len() != self.rows {
            return Err(invalid(format!(
                "expected {} rows of entries, found {}",
                self.rows,
                self.entries.len()
            )));
        }
        let mut data = Vec::with_capacity(self.rows * self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(invalid(format!(
                    "row {} has {} entries, expected {}",
                    r,
                    row.len(),
                    self.cols
                )));
            }
            for (c, text) in row.iter().enumerate() {
                let value = Rational::parse(text).map_err(|e| {
                    invalid(format!("entry ({r}, {c}): {e}"))
                })?;
                data.push(value);
            }
        }
        Ok(Matrix::new(self.rows, self.cols, data))
    }
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string_pretty(&MatrixDto::from_matrix(m)).expect("matrix serialization")
}

pub fn matrix_from_json(text: &str) -> Result<Matrix, FormatError> {
    let dto: MatrixDto = serde_json::from_str(text)?;
    dto.to_matrix()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GramFormDto {
    dimension: usize,
    gram: MatrixDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GalileanShorthandDto {
    galilean: GalileanDto,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GalileanDto {
    n: usize,
    a: Vec<String>,
    a0: String,
}

/// Loads a form file: either `{"dimension": d, "gram": <matrix>}` or the
/// shorthand `{"galilean": {"n": n, "a": [...], "a0": "..."}}`.
pub fn form_from_json(text: &str) -> Result<BilinearForm, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("galilean").is_some() {
        let dto: GalileanShorthandDto = serde_json::from_value(value)?;
        let g = dto.galilean;
        if g.n == 0 {
            return Err(invalid("galilean.n must be at least 1"));
        }
        if g.a.len() != g.n {
            return Err(invalid(format!(
                "galilean.a has {} entries, expected n = {}",
                g.a.len(),
                g.n
            )));
        }
        let a = g
            .a
            .iter()
            .enumerate()
            .map(|(i, text)| {
                Rational::parse(text).map_err(|e| invalid(format!("galilean.a[{i}]: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let a0 = Rational::parse(&g.a0).map_err(|e| invalid(format!("galilean.a0: {e}")))?;
        Ok(galilean_form(&GalileanParameters::new(a, a0)))
    } else {
        let dto: GramFormDto = serde_json::from_value(value)?;
        let gram = dto.gram.to_matrix()?;
        if gram.rows() != dto.dimension || gram.cols() != dto.dimension {
            return Err(invalid(format!(
                "gram is {}x{}, expected {dim}x{dim} from the dimension field",
                gram.rows(),
                gram.cols(),
                dim = dto.dimension
            )));
        }
        Ok(BilinearForm::new(gram))
    }
}

pub fn form_to_json(form: &BilinearForm) -> String {
    let dto = GramFormDto {
        dimension: form.dimension(),
        gram: MatrixDto::from_matrix(form.gram()),
    };
    serde_json::to_string_pretty(&dto).expect("form serialization")
}

/// How the built-in `"boosts"` generator kind expands: the exact parametric
/// family, or its algebra generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostExpansion {
    Parametric,
    Algebra,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GeneratorFileDto {
    dimension: usize,
    generators: Vec<GeneratorDto>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum GeneratorDto {
    Explicit { matrix: MatrixDto },
    Algebra { matrix: MatrixDto },
    Boosts,
    Rotations,
}

/// Loads a generator file: `{"dimension": d, "generators": [...]}` where each
/// entry is `{"kind": "explicit"|"algebra", "matrix": <matrix>}` or one of
/// the built-in families `{"kind": "boosts"}`, `{"kind": "rotations"}` for
/// the stated dimension. Returns the dimension with the expanded families.
pub fn generators_from_json(
    text: &str,
    boost_mode: BoostExpansion,
) -> Result<(usize, Vec<GeneratorFamily>), FormatError> {
    let dto: GeneratorFileDto = serde_json::from_str(text)?;
    let d = dto.dimension;
    if d < 2 {
        return Err(invalid("dimension must be at least 2 (one spatial + time)"));
    }
    let n = d - 1;
    let mut families = Vec::new();
    for (idx, generator) in dto.generators.iter().enumerate() {
        match generator {
            GeneratorDto::Explicit { matrix } => {
                let m = matrix.to_matrix()?;
                if m.rows() != d || m.cols() != d {
                    return Err(invalid(format!(
                        "generator {idx}: matrix is {}x{}, expected {d}x{d}",
                        m.rows(),
                        m.cols()
                    )));
                }
                families.push(GeneratorFamily::explicit(m));
            }
            GeneratorDto::Algebra { matrix } => {
                let m = matrix.to_matrix()?;
                if m.rows() != d || m.cols() != d {
                    return Err(invalid(format!(
                        "generator {idx}: matrix is {}x{}, expected {d}x{d}",
                        m.rows(),
                        m.cols()
                    )));
                }
                families.push(GeneratorFamily::algebra(m));
            }
            GeneratorDto::Boosts => match boost_mode {
                BoostExpansion::Parametric => families.push(boost_family(n)),
                BoostExpansion::Algebra => families.extend(boost_algebra_generators(n)),
            },
            GeneratorDto::Rotations => families.extend(rotation_algebra_generators(n)),
        }
    }
    Ok((d, families))
}

pub fn generators_to_json(dimension: usize, families: &[GeneratorFamily]) -> String {
    let generators = families
        .iter()
        .map(|f| match f.kind() {
            GeneratorKind::Explicit(m) => GeneratorDto::Explicit {
                matrix: MatrixDto::from_matrix(m),
            },
            GeneratorKind::Algebra(m) => GeneratorDto::Algebra {
                matrix: MatrixDto::from_matrix(m),
            },
            GeneratorKind::Parametric { .. } => GeneratorDto::Boosts,
        })
        .collect();
    let dto = GeneratorFileDto {
        dimension,
        generators,
    };
    serde_json::to_string_pretty(&dto).expect("generator serialization")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BasisDto {
    dimension: usize,
    basis: Vec<MatrixDto>,
}

/// Serializes a solved basis as a JSON list of matrix objects.
pub fn basis_to_json(basis: &FormBasis) -> String {
    let dto = BasisDto {
        dimension: basis.dimension(),
        basis: basis.forms().iter().map(MatrixDto::from_matrix).collect(),
    };
    serde_json::to_string_pretty(&dto).expect("basis serialization")
}
