//! Plain and JSON encodings of cyclic words.
//!
//! Plain: one line of comma-separated decimal letters, newline-terminated.
//! JSON: `{"n":N,"i":I,"length":L,"letters":[...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Letter;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    pub length: usize,
    pub letters: Vec<Letter>,
}

impl CycleRecord {
    pub fn new(n: usize, i: Option<usize>, letters: Vec<Letter>) -> Self {
        CycleRecord {
            n,
            i,
            length: letters.len(),
            letters,
        }
    }
}

pub fn to_plain(letters: &[Letter]) -> String {
    let mut out = letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    out
}

/// Parses comma- and/or whitespace-separated integers.
pub fn parse_plain(s: &str) -> Result<Vec<Letter>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Letter>()
                .map_err(|_| Error::Parse(format!("not an integer: {t:?}")))
        })
        .collect()
}

pub fn to_json(record: &CycleRecord) -> String {
    let mut out = serde_json::to_string(record).expect("record serializes");
    out.push('\n');
    out
}

pub fn parse_json(s: &str) -> Result<CycleRecord> {
    let record: CycleRecord = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    if record.length != record.letters.len() {
        return Err(Error::Parse(format!(
            "length field {} does not match {} letters",
            record.length,
            record.letters.len()
        )));
    }
    Ok(record)
}

/// Letters from either encoding, detected by a leading `{`. The JSON
/// record is returned when present.
pub fn parse_cycle_text(s: &str) -> Result<(Vec<Letter>, Option<CycleRecord>)> {
    if s.trim_start().starts_with('{') {
        let record = parse_json(s)?;
        Ok((record.letters.clone(), Some(record)))
    } else {
        Ok((parse_plain(s)?, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_format_is_exact() {
        assert_eq!(to_plain(&[1, 2, 3, 2]), "1,2,3,2\n");
        assert_eq!(parse_plain("1,4,5,2,4,3").unwrap(), vec![1, 4, 5, 2, 4, 3]);
        assert_eq!(parse_plain(" 1, -2\n3 ").unwrap(), vec![1, -2, 3]);
        assert!(parse_plain("1,x").is_err());
    }

    #[test]
    fn json_format_is_exact() {
        let r = CycleRecord::new(3, Some(1), vec![1, 2, 3, 2]);
        assert_eq!(to_json(&r), "{\"n\":3,\"i\":1,\"length\":4,\"letters\":[1,2,3,2]}\n");
        assert_eq!(parse_json(&to_json(&r)).unwrap(), r);
        assert!(parse_json("{\"n\":3,\"length\":5,\"letters\":[1,2]}").is_err());
        let (letters, rec) = parse_cycle_text("{\"n\":3,\"length\":2,\"letters\":[1,2]}").unwrap();
        assert_eq!(letters, vec![1, 2]);
        assert_eq!(rec.unwrap().i, None);
    }

    proptest! {
        #[test]
        fn encodings_round_trip(letters in prop::collection::vec(-1000i64..1000, 1..60), n in 3usize..8, i in 0usize..30) {
            let (a, _) = parse_cycle_text(&to_plain(&letters)).unwrap();
            prop_assert_eq!(&a, &letters);
            let (b, rec) = parse_cycle_text(&to_json(&CycleRecord::new(n, Some(i), letters.clone()))).unwrap();
            prop_assert_eq!(&b, &letters);
            prop_assert_eq!(rec.unwrap().i, Some(i));
        }
    }
}
