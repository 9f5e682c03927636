use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// One class of maximal subgroups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupClassRecord {
    pub name: String,
    pub order: u64,
    /// Number of maximal subgroups in the class; `None` when not listed.
    pub count: Option<u64>,
    /// `None` when not listed.
    pub solvable: Option<bool>,
    pub m: Option<u32>,
    pub i: Option<u32>,
}

/// Maximal-subgroup data for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub name: String,
    pub order: u64,
    pub records: Vec<SubgroupClassRecord>,
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn opt<T: FromStr>(v: &str, key: &str, line: usize) -> Result<Option<T>> {
    if v == "-" {
        return Ok(None);
    }
    v.parse()
        .map(Some)
        .map_err(|_| format_err(line, format!("bad value `{v}` for `{key}`")))
}

fn opt_str<T: fmt::Display>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl GroupTable {
    /// Parses the line format
    ///
    /// ```text
    /// table <group> order <N>
    /// row <name> order=<N> count=<N|-> solvable=<yes|no|-> m=<N|-> i=<N|->
    /// ```
    ///
    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<GroupTable> {
        let mut header: Option<(String, u64)> = None;
        let mut records = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let t = raw.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let words: Vec<&str> = t.split_whitespace().collect();
            match words[0] {
                "table" => {
                    if header.is_some() {
                        return Err(format_err(line, "duplicate `table` line"));
                    }
                    let [_, name, "order", order] = words[..] else {
                        return Err(format_err(line, "expected `table <name> order <N>`"));
                    };
                    let order = order
                        .parse()
                        .map_err(|_| format_err(line, format!("bad order `{order}`")))?;
                    header = Some((name.to_string(), order));
                }
                "row" => {
                    if header.is_none() {
                        return Err(format_err(line, "`row` before `table`"));
                    }
                    records.push(parse_row(&words, line)?);
                }
                other => return Err(format_err(line, format!("unknown keyword `{other}`"))),
            }
        }
        let (name, order) = header.ok_or_else(|| format_err(0, "missing `table` line"))?;
        for (k, r) in records.iter().enumerate() {
            if order % r.order != 0 {
                return Err(format_err(
                    0,
                    format!("row {} ({}) has order {} not dividing {order}", k + 1, r.name, r.order),
                ));
            }
        }
        Ok(GroupTable {
            name,
            order,
            records,
        })
    }

    /// Largest listed `i` over the records.
    pub fn max_i(&self) -> Result<u32> {
        let mut best = 0;
        for r in &self.records {
            let i = r
                .i
                .ok_or_else(|| Error::Precondition(format!("record {} has no i value", r.name)))?;
            best = best.max(i);
        }
        Ok(best)
    }
}

fn parse_row(words: &[&str], line: usize) -> Result<SubgroupClassRecord> {
    let keys = ["order", "count", "solvable", "m", "i"];
    if words.len() != 2 + keys.len() {
        return Err(format_err(
            line,
            "expected `row <name> order= count= solvable= m= i=`",
        ));
    }
    let mut values = [""; 5];
    for (slot, (key, word)) in values.iter_mut().zip(keys.iter().zip(&words[2..])) {
        *slot = word
            .strip_prefix(key)
            .and_then(|r| r.strip_prefix('='))
            .ok_or_else(|| format_err(line, format!("expected `{key}=` but found `{word}`")))?;
    }
    let order: u64 = values[0]
        .parse()
        .map_err(|_| format_err(line, format!("bad value `{}` for `order`", values[0])))?;
    let count: Option<u64> = opt(values[1], "count", line)?;
    if count == Some(0) {
        return Err(format_err(line, "count must be positive"));
    }
    let solvable = match values[2] {
        "yes" => Some(true),
        "no" => Some(false),
        "-" => None,
        v => return Err(format_err(line, format!("bad value `{v}` for `solvable`"))),
    };
    let m: Option<u32> = opt(values[3], "m", line)?;
    let i: Option<u32> = opt(values[4], "i", line)?;
    if let (Some(m), Some(i)) = (m, i) {
        if m > i {
            return Err(format_err(line, format!("m={m} exceeds i={i}")));
        }
    }
    if order == 0 {
        return Err(format_err(line, "order must be positive"));
    }
    Ok(SubgroupClassRecord {
        name: words[1].to_string(),
        order,
        count,
        solvable,
        m,
        i,
    })
}

impl fmt::Display for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "table {} order {}", self.name, self.order)?;
        for r in &self.records {
            let solvable = match r.solvable {
                Some(true) => "yes",
                Some(false) => "no",
                None => "-",
            };
            writeln!(
                f,
                "row {} order={} count={} solvable={} m={} i={}",
                r.name,
                r.order,
                opt_str(&r.count),
                solvable,
                opt_str(&r.m),
                opt_str(&r.i)
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err_line(text: &str) -> usize {
        match GroupTable::parse(text) {
            Err(Error::Format { line, .. }) => line,
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn parse_and_round_trip() {
        let text = "# demo\ntable G order 24\n\nrow A order=12 count=1 solvable=yes m=2 i=2\nrow B order=6 count=- solvable=- m=- i=2\n";
        let t = GroupTable::parse(text).unwrap();
        assert_eq!(t.records.len(), 2);
        assert_eq!(t.records[1].count, None);
        assert_eq!(t.max_i().unwrap(), 2);
        assert_eq!(GroupTable::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn errors_name_the_line() {
        assert_eq!(err_line("row A order=2 count=1 solvable=yes m=1 i=1"), 1);
        assert_eq!(err_line("table G order 24\nrow A order=x count=1 solvable=yes m=1 i=1"), 2);
        assert_eq!(err_line("table G order 24\n\nrow A order=2 count=0 solvable=yes m=1 i=1"), 3);
        assert_eq!(err_line("table G order 24\nrow A order=2 count=1 solvable=maybe m=1 i=1"), 2);
        assert_eq!(err_line("table G order 24\nrow A order=2 count=1 solvable=yes i=1 m=1"), 2);
        assert_eq!(err_line("table G order 24\ntable H order 2"), 2);
        assert_eq!(err_line("tabel G order 24"), 1);
        // order not dividing the group order is a whole-table error
        assert_eq!(err_line("table G order 24\nrow A order=5 count=1 solvable=yes m=1 i=1"), 0);
    }

    #[test]
    fn missing_i_blocks_max_i() {
        let t = GroupTable::parse("table G order 24\nrow A order=12 count=1 solvable=yes m=- i=-").unwrap();
        assert!(matches!(t.max_i(), Err(Error::Precondition(m)) if m.contains('A')));
    }
}
