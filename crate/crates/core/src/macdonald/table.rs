use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MathError, Result};
use crate::partitions::{partitions, strict_partitions, Partition};
use crate::symfunc::{check_degree, Basis, SymFunc};

use super::basis::{hall_littlewood_p, hall_littlewood_q, macdonald_j, macdonald_p_power, macdonald_q, schur_p, schur_q};

/// Families that can be tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableBasis {
    P,
    Q,
    J,
    #[serde(rename = "HL-P")]
    HallLittlewoodP,
    #[serde(rename = "HL-Q")]
    HallLittlewoodQ,
    #[serde(rename = "schur-P")]
    SchurP,
    #[serde(rename = "schur-Q")]
    SchurQ,
}

impl TableBasis {
    pub const ALL: [TableBasis; 7] = [
        TableBasis::P,
        TableBasis::Q,
        TableBasis::J,
        TableBasis::HallLittlewoodP,
        TableBasis::HallLittlewoodQ,
        TableBasis::SchurP,
        TableBasis::SchurQ,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TableBasis::P => "P",
            TableBasis::Q => "Q",
            TableBasis::J => "J",
            TableBasis::HallLittlewoodP => "HL-P",
            TableBasis::HallLittlewoodQ => "HL-Q",
            TableBasis::SchurP => "schur-P",
            TableBasis::SchurQ => "schur-Q",
        }
    }

    fn strict_only(self) -> bool {
        matches!(self, TableBasis::SchurP | TableBasis::SchurQ)
    }

    pub fn element(self, lam: &Partition) -> Result<SymFunc> {
        match self {
            TableBasis::P => macdonald_p_power(lam),
            TableBasis::Q => macdonald_q(lam),
            TableBasis::J => macdonald_j(lam),
            TableBasis::HallLittlewoodP => hall_littlewood_p(lam),
            TableBasis::HallLittlewoodQ => hall_littlewood_q(lam),
            TableBasis::SchurP => schur_p(lam),
            TableBasis::SchurQ => schur_q(lam),
        }
    }
}

impl fmt::Display for TableBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TableBasis {
    type Err = MathError;
    fn from_str(s: &str) -> Result<Self> {
        TableBasis::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| MathError::Parse(format!("unknown basis '{s}'")))
    }
}

/// All elements of one family in degree `n`, expanded in `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionTable {
    pub degree: usize,
    pub basis: TableBasis,
    pub entries: Vec<(Partition, SymFunc)>,
}

impl ExpansionTable {
    pub fn new(basis: TableBasis, n: usize, target: Basis) -> Result<ExpansionTable> {
        check_degree(n)?;
        let parts = if basis.strict_only() { strict_partitions(n) } else { partitions(n) };
        let entries = parts
            .into_iter()
            .map(|lam| {
                let f = basis.element(&lam)?.convert(target)?;
                Ok((lam, f))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ExpansionTable { degree: n, basis, entries })
    }

    /// `{"degree": n, "basis": "P", "entries": {"2,1": <symfunc>, ...}}`
    pub fn to_json(&self) -> serde_json::Value {
        let mut entries = serde_json::Map::new();
        for (lam, f) in &self.entries {
            entries.insert(lam.to_string(), serde_json::to_value(f).expect("symfunc serializes"));
        }
        serde_json::json!({
            "degree": self.degree,
            "basis": self.basis,
            "entries": entries,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<ExpansionTable> {
        let bad = |e: String| MathError::Parse(format!("malformed expansion table: {e}"));
        let degree = v["degree"].as_u64().ok_or_else(|| bad("degree".into()))? as usize;
        let basis: TableBasis = serde_json::from_value(v["basis"].clone()).map_err(|e| bad(e.to_string()))?;
        let obj = v["entries"].as_object().ok_or_else(|| bad("entries".into()))?;
        let mut entries = obj
            .iter()
            .map(|(k, f)| {
                let lam: Partition = k.parse()?;
                let f: SymFunc = serde_json::from_value(f.clone()).map_err(|e| bad(e.to_string()))?;
                Ok((lam, f))
            })
            .collect::<Result<Vec<_>>>()?;
        entries.sort_by(|a, b| b.0.cmp(&a.0));
        Ok(ExpansionTable { degree, basis, entries })
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(lam, f)| format!("{}_({lam}) = {f}\n", self.basis))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        for b in TableBasis::ALL {
            let t = ExpansionTable::new(b, 3, Basis::Monomial).unwrap();
            let back = ExpansionTable::from_json(&t.to_json()).unwrap();
            assert_eq!(t, back, "{b}");
        }
    }

    #[test]
    fn names_parse() {
        for b in TableBasis::ALL {
            assert_eq!(b.name().parse::<TableBasis>().unwrap(), b);
        }
        assert!("R".parse::<TableBasis>().is_err());
        let t = ExpansionTable::new(TableBasis::SchurQ, 4, Basis::Schur).unwrap();
        assert_eq!(t.entries.len(), 2);
    }
}
