use std::fmt;
use std::time::{Duration, Instant};

use super::rank::{brute_class_ranks, brute_ranks, Rank};
use crate::classes::conjugacy_classes;
use crate::error::Result;
use crate::format::format_time;
use crate::group::PermGroup;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct ClassRank {
    pub label: String,
    pub size: u64,
    pub m: Rank,
    pub i: Rank,
}

/// Oracle output for one group.
#[derive(Clone, Debug)]
pub struct RankReport {
    pub descriptor: String,
    pub order: u64,
    pub m: Rank,
    pub i: Rank,
    pub classes: Vec<ClassRank>,
    pub elapsed: Duration,
}

pub fn rank_report(descriptor: &str, g: &PermGroup, with_classes: bool, cap: u64) -> Result<RankReport> {
    let start = Instant::now();
    let ranks = brute_ranks(g, cap)?;
    let mut classes = Vec::new();
    if with_classes {
        for c in conjugacy_classes(g, cap)? {
            let (m, i) = brute_class_ranks(g, &c, cap)?;
            classes.push(ClassRank { label: c.label.clone(), size: c.size, m, i });
        }
    }
    Ok(RankReport {
        descriptor: descriptor.to_string(),
        order: g.order(),
        m: ranks.m,
        i: ranks.i,
        classes,
        elapsed: start.elapsed(),
    })
}

fn join(w: &[Permutation]) -> String {
    if w.is_empty() {
        return "-".into();
    }
    w.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

impl RankReport {
    /// `key=value` lines for scripts.
    pub fn machine(&self) -> String {
        let mut out = format!(
            "group={}\norder={}\nm={}\ni={}\n",
            self.descriptor, self.order, self.m.value, self.i.value
        );
        for c in &self.classes {
            out.push_str(&format!("m[{}]={}\ni[{}]={}\n", c.label, c.m.value, c.label, c.i.value));
        }
        out
    }
}

impl fmt::Display for RankReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group    {}", self.descriptor)?;
        writeln!(f, "order    {}", self.order)?;
        writeln!(f, "m        {:<3} {}", self.m.value, join(&self.m.witness))?;
        writeln!(f, "i        {:<3} {}", self.i.value, join(&self.i.witness))?;
        for c in &self.classes {
            writeln!(f, "class {:<4} size {:<6} m {:<3} i {}", c.label, c.size, c.m.value, c.i.value)?;
        }
        write!(f, "elapsed  {}", format_time(self.elapsed))
    }
}
