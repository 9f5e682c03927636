use std::fmt;

use crate::error::Result;

use super::table::GroupTable;
#[cfg(test)]
use super::table::SubgroupClassRecord;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Every maximal subgroup has `i` below `m(G)`.
    StronglyFlat,
    /// The largest `i` over maximal subgroups equals `m(G)`.
    Flat,
    Undetermined,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::StronglyFlat => "strongly-flat",
            Verdict::Flat => "flat",
            Verdict::Undetermined => "undetermined",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Compares the largest `i(M)` over maximal subgroups `M` with `m_value`.
pub fn flatness_verdict(t: &GroupTable, m_value: u32) -> Result<Verdict> {
    let max_i = t.max_i()?;
    Ok(if max_i < m_value {
        Verdict::StronglyFlat
    } else if max_i == m_value {
        Verdict::Flat
    } else {
        Verdict::Undetermined
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    /// The inequality or rule that produced the step.
    pub rule: &'static str,
    pub text: String,
}

pub const RULE_CERTIFICATE: &str = "irredundant generating sequence";
pub const RULE_M_LEQ_MAX_I: &str = "m(G) <= max i(M) + 1";
pub const RULE_COUNT: &str = "m(G) maximal subgroups with i(M) >= m(G) - 1";
pub const RULE_I_RECURSION: &str = "i(G) = max(m(G), max i(M))";
pub const RULE_FLATNESS: &str = "max i(M) against m(G)";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundLedger {
    pub group: String,
    pub m_lower: Option<u32>,
    pub m_upper: u32,
    pub i_upper: u32,
    pub i_exact: Option<u32>,
    pub max_i: u32,
    pub verdict: Verdict,
    pub trace: Vec<TraceLine>,
}

impl BoundLedger {
    /// `key=value` lines.
    pub fn machine(&self) -> String {
        let o = |v: Option<u32>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
        format!(
            "group={}\nm_lower={}\nm_upper={}\ni_upper={}\ni_exact={}\nverdict={}\n",
            self.group,
            o(self.m_lower),
            self.m_upper,
            self.i_upper,
            o(self.i_exact),
            self.verdict
        )
    }
}

impl fmt::Display for BoundLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bounds for {}", self.group)?;
        for t in &self.trace {
            writeln!(f, "  [{}] {}", t.rule, t.text)?;
        }
        Ok(())
    }
}

/// Bounds on `m(G)` and `i(G)` from the maximal-subgroup table and an
/// optional certified lower bound on `m(G)`.
///
/// Records without a count are treated as classes of unknown size and
/// never limit the counting bound.
pub fn propagate_bounds(t: &GroupTable, m_lower: Option<u32>) -> Result<BoundLedger> {
    let max_i = t.max_i()?;
    let mut trace = Vec::new();
    let step = |trace: &mut Vec<TraceLine>, rule, text: String| trace.push(TraceLine { rule, text });

    if let Some(m) = m_lower {
        step(&mut trace, RULE_CERTIFICATE, format!("m({}) >= {m}", t.name));
    }
    let by_max = max_i + 1;
    step(
        &mut trace,
        RULE_M_LEQ_MAX_I,
        format!("max i(M) = {max_i}, so m({}) <= {by_max}", t.name),
    );

    // largest k such that at least k maximal subgroups have i >= k - 1
    let mut by_count = 0;
    for k in 1..=by_max {
        let mut unknown = false;
        let mut total: u64 = 0;
        for r in &t.records {
            if r.i.expect("checked by max_i") + 1 >= k {
                match r.count {
                    Some(c) => total += c,
                    None => unknown = true,
                }
            }
        }
        if unknown || total >= k as u64 {
            by_count = k;
        }
    }
    let supporting: Vec<String> = t
        .records
        .iter()
        .filter(|r| r.i.unwrap_or(0) + 1 >= by_count)
        .map(|r| format!("{} x{}", r.name, r.count.map_or("?".into(), |c| c.to_string())))
        .collect();
    step(
        &mut trace,
        RULE_COUNT,
        format!(
            "subgroups with i(M) >= {}: {}; so m({}) <= {by_count}",
            by_count.saturating_sub(1),
            supporting.join(", "),
            t.name
        ),
    );
    let m_upper = by_max.min(by_count);
    let i_upper = m_upper.max(max_i);
    step(
        &mut trace,
        RULE_I_RECURSION,
        format!("i({}) <= max({m_upper}, {max_i}) = {i_upper}", t.name),
    );

    let mut i_exact = None;
    if m_lower == Some(m_upper) {
        let v = m_upper.max(max_i);
        step(
            &mut trace,
            RULE_I_RECURSION,
            format!("m({0}) = {m_upper}, so i({0}) = {v}", t.name),
        );
        i_exact = Some(v);
    } else if m_upper <= max_i {
        step(
            &mut trace,
            RULE_I_RECURSION,
            format!(
                "m({0}) <= {m_upper} <= {max_i} = max i(M), so i({0}) = {max_i}",
                t.name
            ),
        );
        i_exact = Some(max_i);
    }

    let verdict = match m_lower {
        Some(m) if m == m_upper => flatness_verdict(t, m)?,
        _ => Verdict::Undetermined,
    };
    step(
        &mut trace,
        RULE_FLATNESS,
        match m_lower {
            Some(m) if m == m_upper => format!("max i(M) = {max_i}, m = {m}: {verdict}"),
            _ => format!("m({}) not established: {verdict}", t.name),
        },
    );

    Ok(BoundLedger {
        group: t.name.clone(),
        m_lower,
        m_upper,
        i_upper,
        i_exact,
        max_i,
        verdict,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::shipped_table;
    use proptest::prelude::*;

    fn ledger(name: &str, m: Option<u32>) -> BoundLedger {
        propagate_bounds(&shipped_table(name).unwrap(), m).unwrap()
    }

    #[test]
    fn shipped_tables() {
        let m11 = ledger("M11", Some(5));
        assert_eq!((m11.m_upper, m11.i_exact, m11.verdict), (5, Some(5), Verdict::StronglyFlat));
        let m12 = ledger("M12", Some(6));
        assert_eq!((m12.m_upper, m12.i_exact, m12.verdict), (6, Some(6), Verdict::StronglyFlat));
        let aut = ledger("Aut(S6)", None);
        assert_eq!((aut.m_upper, aut.i_upper, aut.i_exact), (5, 5, Some(5)));
        assert_eq!(aut.verdict, Verdict::Undetermined);
        assert_eq!(ledger("M10", None).i_exact, Some(4));
        assert_eq!(ledger("A6:Z2", None).i_exact, Some(4));
    }

    #[test]
    fn without_certificate() {
        let m12 = ledger("M12", None);
        assert_eq!((m12.m_upper, m12.i_upper, m12.i_exact), (6, 6, None));
        assert_eq!(m12.verdict, Verdict::Undetermined);
        assert!(m12.machine().contains("m_lower=-\n"));
    }

    #[test]
    fn trace_names_rules() {
        let l = ledger("M12", Some(6));
        let rules: Vec<&str> = l.trace.iter().map(|t| t.rule).collect();
        assert_eq!(rules[0], RULE_CERTIFICATE);
        for r in [RULE_M_LEQ_MAX_I, RULE_COUNT, RULE_I_RECURSION, RULE_FLATNESS] {
            assert!(rules.contains(&r));
        }
        assert!(l.to_string().contains("M11 x24"));
    }

    #[test]
    fn flatness() {
        let t = shipped_table("M12").unwrap();
        assert_eq!(flatness_verdict(&t, 6).unwrap(), Verdict::StronglyFlat);
        assert_eq!(flatness_verdict(&t, 5).unwrap(), Verdict::Flat);
        assert_eq!(flatness_verdict(&t, 4).unwrap(), Verdict::Undetermined);
    }

    fn table(rows: &[(u64, u32)]) -> GroupTable {
        GroupTable {
            name: "G".into(),
            order: 1 << 20,
            records: rows
                .iter()
                .map(|&(count, i)| SubgroupClassRecord {
                    name: "M".into(),
                    order: 2,
                    count: Some(count),
                    solvable: None,
                    m: None,
                    i: Some(i),
                })
                .collect(),
        }
    }

    proptest! {
        #[test]
        fn raising_i_never_lowers_bounds(
            rows in prop::collection::vec((1u64..50, 0u32..8), 1..6),
            pick in 0usize..6,
        ) {
            let before = propagate_bounds(&table(&rows), None).unwrap();
            let mut raised = rows.clone();
            let k = pick % raised.len();
            raised[k].1 += 1;
            let after = propagate_bounds(&table(&raised), None).unwrap();
            prop_assert!(after.m_upper >= before.m_upper);
            prop_assert!(after.i_upper >= before.i_upper);
            prop_assert!(before.m_upper <= before.max_i + 1);
            prop_assert!(before.i_upper >= before.max_i);
        }
    }
}
