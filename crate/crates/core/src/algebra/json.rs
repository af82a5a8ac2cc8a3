use serde_json::{json, Value};

use super::FDAlgebra;
use crate::error::{Error, Result};
use crate::rat::{rat_to_json, vec_from_json, vec_to_json};

impl FDAlgebra {
    /// `{"dim": n, "unit": [...], "structure": [[[...]]]}` with
    /// `structure[i][j][k]` the coefficient of `e_k` in `e_i·e_j`.
    pub fn to_json(&self) -> Value {
        let n = self.dim();
        let structure: Vec<Value> = (0..n)
            .map(|i| {
                Value::Array(
                    (0..n)
                        .map(|j| Value::Array((0..n).map(|k| rat_to_json(self.structure_constant(i, j, k))).collect()))
                        .collect(),
                )
            })
            .collect();
        json!({
            "dim": n,
            "unit": vec_to_json(self.unit().coords()),
            "structure": structure,
        })
    }

    /// Parses the format written by [`FDAlgebra::to_json`]. Shapes are
    /// checked; the algebra laws are not (see [`FDAlgebra::validate`]).
    pub fn from_json(v: &Value) -> Result<FDAlgebra> {
        let dim = v
            .get("dim")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing or invalid \"dim\"".into()))? as usize;
        let unit = vec_from_json(v.get("unit").ok_or_else(|| Error::Parse("missing \"unit\"".into()))?)?;
        let rows = v
            .get("structure")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing or invalid \"structure\"".into()))?;
        let mut structure = Vec::with_capacity(dim * dim * dim);
        if rows.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: rows.len() });
        }
        for row in rows {
            let row = row
                .as_array()
                .ok_or_else(|| Error::Parse("structure rows must be arrays".into()))?;
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            for cell in row {
                let c = vec_from_json(cell)?;
                if c.len() != dim {
                    return Err(Error::DimensionMismatch { expected: dim, found: c.len() });
                }
                structure.extend(c);
            }
        }
        FDAlgebra::new(dim, structure, unit)
    }

    pub fn from_json_str(s: &str) -> Result<FDAlgebra> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        FDAlgebra::from_json(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quaternions, rationals, upper_triangular};
    use crate::rat::ratio;

    #[test]
    fn round_trip() {
        for a in [
            rationals(),
            upper_triangular(3),
            quaternions(ratio(-1, 2), ratio(3, 1)).unwrap(),
        ] {
            let s = a.to_json().to_string();
            assert_eq!(FDAlgebra::from_json_str(&s).unwrap(), a);
        }
    }

    #[test]
    fn rationals_format() {
        assert_eq!(
            rationals().to_json(),
            json!({"dim": 1, "unit": ["1"], "structure": [[["1"]]]})
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(FDAlgebra::from_json_str("{"), Err(Error::Parse(_))));
        assert!(matches!(
            FDAlgebra::from_json_str(r#"{"dim": 2, "unit": ["1","0"], "structure": [[["1"]]]}"#),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            FDAlgebra::from_json_str(r#"{"dim": 1, "unit": ["x"], "structure": [[["1"]]]}"#),
            Err(Error::Parse(_))
        ));
    }
}
