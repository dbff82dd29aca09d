//! Canonical JSON serialization of monad points.
//!
//! The document carries the type `(n, r, a, c)` and the two matrices as
//! row-major arrays of entry objects `{"terms": [{"e": [a,b,c,d], "coef":
//! "num/den"}]}`. Terms are emitted in the canonical section order
//! (descending `(c, a)`) and rationals as exact `num/den` strings, so
//! serialization is deterministic and round-trips bit-exactly.

use serde::{Deserialize, Serialize};

use crate::exact::{rat_from_str, rat_to_string};
use crate::monad::{KVector, MonadError, MonadPoint, MonadShape};
use crate::surface::BigradedPoly;

#[derive(Debug, thiserror::Error)]
pub enum MonadJsonError {
    /// The document is not syntactically a monad file.
    #[error("parse error: {0}")]
    Parse(String),
    /// The document parses but violates a structural invariant
    /// (normalization, entry counts, homogeneity).
    #[error("invariant violation: {0}")]
    Invariant(String),
}

#[derive(Serialize, Deserialize)]
struct FileRepr {
    n: i64,
    r: i64,
    a: i64,
    c: i64,
    alpha: Vec<EntryRepr>,
    beta: Vec<EntryRepr>,
}

#[derive(Serialize, Deserialize)]
struct EntryRepr {
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: [u32; 4],
    coef: String,
}

fn entry_repr(p: &BigradedPoly) -> EntryRepr {
    EntryRepr {
        terms: p
            .terms_canonical()
            .into_iter()
            .map(|(e, c)| TermRepr { e, coef: rat_to_string(&c) })
            .collect(),
    }
}

/// Canonical serialization (pretty-printed, trailing newline).
pub fn monad_to_json(mp: &MonadPoint) -> String {
    let k = mp.kvec();
    let repr = FileRepr {
        n: k.n,
        r: k.r,
        a: k.a,
        c: k.c,
        alpha: collect_entries(mp.alpha()),
        beta: collect_entries(mp.beta()),
    };
    let mut s = serde_json::to_string_pretty(&repr).expect("serialization cannot fail");
    s.push('\n');
    s
}

fn collect_entries(m: &crate::monad::PolyMatrix) -> Vec<EntryRepr> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            out.push(entry_repr(m.at(i, j)));
        }
    }
    out
}

/// Parses and validates a monad file.
pub fn monad_from_json(s: &str) -> Result<MonadPoint, MonadJsonError> {
    let repr: FileRepr =
        serde_json::from_str(s).map_err(|e| MonadJsonError::Parse(e.to_string()))?;
    let kvec = KVector::new(repr.n, repr.r, repr.a, repr.c)
        .map_err(|e| MonadJsonError::Invariant(e.to_string()))?;
    let shape =
        MonadShape::new(kvec).map_err(|e| MonadJsonError::Invariant(e.to_string()))?;

    let alpha = parse_entries(&repr.alpha, &shape, "alpha", shape.v_classes(), shape.u_classes())?;
    let beta = parse_entries(&repr.beta, &shape, "beta", shape.w_classes(), shape.v_classes())?;
    MonadPoint::from_entries(shape, alpha, beta)
        .map_err(|e| MonadJsonError::Invariant(e.to_string()))
}

fn parse_entries(
    entries: &[EntryRepr],
    shape: &MonadShape,
    which: &str,
    row_classes: Vec<crate::surface::PicClass>,
    col_classes: Vec<crate::surface::PicClass>,
) -> Result<Vec<BigradedPoly>, MonadJsonError> {
    let (rows, cols) = (row_classes.len(), col_classes.len());
    if entries.len() != rows * cols {
        return Err(MonadJsonError::Invariant(format!(
            "{which} has {} entries, expected {rows} x {cols} = {}",
            entries.len(),
            rows * cols
        )));
    }
    let n = shape.kvec().n;
    entries
        .iter()
        .enumerate()
        .map(|(idx, e)| {
            // entries is nonempty here, so rows > 0 and cols > 0
            let (row, col) = (idx / cols, idx % cols);
            let cls = row_classes[row] - col_classes[col];
            let mut terms = Vec::with_capacity(e.terms.len());
            for t in &e.terms {
                let coef = rat_from_str(&t.coef).ok_or_else(|| {
                    MonadJsonError::Parse(format!(
                        "{which} entry at row {row}, column {col}: bad rational {:?}",
                        t.coef
                    ))
                })?;
                terms.push((t.e, coef));
            }
            BigradedPoly::new(n, cls, terms).map_err(|err| {
                MonadJsonError::Invariant(format!(
                    "{which} entry at row {row}, column {col}: {err}"
                ))
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::tests::{complex_point_11, valid_point_11};

    #[test]
    fn round_trip_is_bit_exact() {
        for mp in [valid_point_11(), complex_point_11()] {
            let s = monad_to_json(&mp);
            let back = monad_from_json(&s).unwrap();
            assert_eq!(back, mp);
            assert_eq!(monad_to_json(&back), s);
        }
    }

    #[test]
    fn parse_errors_are_distinguished() {
        assert!(matches!(monad_from_json("{"), Err(MonadJsonError::Parse(_))));
        assert!(matches!(monad_from_json("{\"n\": 1}"), Err(MonadJsonError::Parse(_))));
        // wrong entry count
        let bad = r#"{"n":1,"r":1,"a":0,"c":1,"alpha":[],"beta":[]}"#;
        assert!(matches!(monad_from_json(bad), Err(MonadJsonError::Invariant(_))));
        // non-homogeneous exponent vector
        let s = monad_to_json(&valid_point_11());
        let tampered = s.replace("[1, 0, 1, 0]", "[5, 0, 1, 0]");
        assert!(matches!(monad_from_json(&tampered), Err(MonadJsonError::Invariant(_))));
        // malformed rational
        let tampered = s.replace("\"1/1\"", "\"1/0\"");
        assert!(matches!(monad_from_json(&tampered), Err(MonadJsonError::Parse(_))));
        // normalization violation
        let bad = r#"{"n":1,"r":1,"a":3,"c":1,"alpha":[],"beta":[]}"#;
        assert!(matches!(monad_from_json(bad), Err(MonadJsonError::Invariant(_))));
    }

    #[test]
    fn verdict_survives_round_trip() {
        let mp = valid_point_11();
        let back = monad_from_json(&monad_to_json(&mp)).unwrap();
        assert_eq!(back.check_all(), mp.check_all());
    }
}
