//! JSON module format.
//!
//! ```json
//! {"p":7,"ext_degree":1,"family":"additive-infinitesimal","hopf":"additive",
//!  "dim":2,"generators":[[[0,0],[1,0]],[[0,0],[0,0]]]}
//! ```
//!
//! Over an extension field each entry is its coefficient vector in the power
//! basis. An optional `"name"` comes last.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{Field, Matrix};

use super::group::{Family, GroupData, Hopf};
use super::module::ModuleRep;

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Residue(u32),
    Coeffs(Vec<u32>),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleJson {
    p: u32,
    ext_degree: u32,
    family: String,
    hopf: String,
    dim: usize,
    generators: Vec<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

fn entry(f: &Field, v: u32) -> Entry {
    if f.is_prime_field() {
        Entry::Residue(v)
    } else {
        Entry::Coeffs(f.coeffs(v))
    }
}

fn parse_entry(field: &Field, e: &Entry) -> Result<u32> {
    match e {
        Entry::Residue(v) if field.is_prime_field() => {
            if *v >= field.characteristic() {
                return Err(Error::InvalidModule(format!("entry {v} is not a residue mod {}", field.characteristic())));
            }
            Ok(*v)
        }
        Entry::Coeffs(c) if !field.is_prime_field() && c.len() == field.degree() as usize => field.from_coeffs(c),
        _ => Err(Error::InvalidModule(if field.is_prime_field() {
            "entries must be integer residues".to_string()
        } else {
            format!("entries must be coefficient vectors of length {}", field.degree())
        })),
    }
}

/// Rows of a matrix as JSON, entries encoded as in the module format.
pub(crate) fn matrix_to_value(m: &Matrix) -> serde_json::Value {
    let rows: Vec<Vec<Entry>> =
        (0..m.rows()).map(|i| m.row(i).iter().map(|&v| entry(m.field(), v)).collect()).collect();
    serde_json::to_value(rows).expect("matrix serializes")
}

pub(crate) fn matrix_from_value(field: &Field, rows: usize, cols: usize, v: &serde_json::Value) -> Result<Matrix> {
    let parsed: Vec<Vec<Entry>> = serde_json::from_value(v.clone())?;
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(format!("expected a {rows} x {cols} matrix")));
    }
    let data = parsed.iter().flatten().map(|e| parse_entry(field, e)).collect::<Result<Vec<_>>>()?;
    Matrix::from_elems(field, rows, cols, data)
}

impl ModuleRep {
    /// Serialize to the compact JSON module format (no trailing newline).
    pub fn to_json(&self) -> String {
        let f = self.field();
        let generators = self
            .generators()
            .iter()
            .map(|g| (0..g.rows()).map(|i| g.row(i).iter().map(|&v| entry(f, v)).collect()).collect())
            .collect();
        let doc = ModuleJson {
            p: self.p(),
            ext_degree: f.degree(),
            family: self.group().family.name().to_string(),
            hopf: self.group().hopf.name().to_string(),
            dim: self.dim(),
            generators,
            name: self.name().map(str::to_string),
        };
        serde_json::to_string(&doc).expect("module serializes")
    }

    /// Parse the JSON module format. Shapes and residues are checked; the
    /// module axioms are not (see [`ModuleRep::validate`]).
    pub fn from_json(text: &str) -> Result<ModuleRep> {
        let doc: ModuleJson = serde_json::from_str(text)?;
        let family: Family = doc.family.parse()?;
        let hopf: Hopf = doc.hopf.parse()?;
        let field = Field::new(doc.p, doc.ext_degree)?;
        if doc.generators.is_empty() {
            return Err(Error::InvalidModule("no generators".into()));
        }
        let group = GroupData::new(family, doc.p, doc.generators.len())?.with_hopf(hopf);
        let mut mats = Vec::with_capacity(doc.generators.len());
        for (g, rows) in doc.generators.iter().enumerate() {
            if rows.len() != doc.dim {
                return Err(Error::InvalidModule(format!("generator {g} has {} rows, dim is {}", rows.len(), doc.dim)));
            }
            let mut data = Vec::with_capacity(doc.dim * doc.dim);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != doc.dim {
                    return Err(Error::InvalidModule(format!(
                        "generator {g} row {i} has {} entries, dim is {}",
                        row.len(),
                        doc.dim
                    )));
                }
                for e in row {
                    data.push(parse_entry(&field, e)?);
                }
            }
            mats.push(Matrix::from_elems(&field, doc.dim, doc.dim, data)?);
        }
        if doc.dim == 0 {
            return Err(Error::InvalidModule("dimension must be positive".into()));
        }
        let m = ModuleRep::new_unchecked(group, &field, mats)?;
        Ok(match doc.name {
            Some(n) => m.with_name(n),
            None => m,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_prime_and_extension() {
        let text = r#"{"p":3,"ext_degree":1,"family":"elementary-abelian","hopf":"multiplicative","dim":2,"generators":[[[0,0],[1,0]],[[0,0],[2,0]]],"name":"demo"}"#;
        let m = ModuleRep::from_json(text).unwrap();
        assert_eq!(m.to_json(), text);
        let text = r#"{"p":3,"ext_degree":2,"family":"additive-infinitesimal","hopf":"additive","dim":2,"generators":[[[[0,0],[0,0]],[[1,2],[0,0]]]]}"#;
        let m = ModuleRep::from_json(text).unwrap();
        assert_eq!(m.to_json(), text);
    }

    #[test]
    fn rejects_malformed() {
        let bad_residue =
            r#"{"p":3,"ext_degree":1,"family":"elementary-abelian","hopf":"additive","dim":1,"generators":[[[3]]]}"#;
        assert!(ModuleRep::from_json(bad_residue).is_err());
        let bad_shape =
            r#"{"p":3,"ext_degree":1,"family":"elementary-abelian","hopf":"additive","dim":2,"generators":[[[0]]]}"#;
        assert!(ModuleRep::from_json(bad_shape).is_err());
        let bad_family = r#"{"p":3,"ext_degree":1,"family":"klein","hopf":"additive","dim":1,"generators":[[[0]]]}"#;
        assert!(ModuleRep::from_json(bad_family).is_err());
    }
}
