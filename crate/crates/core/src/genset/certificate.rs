//! Certificate files.
//!
//! ```text
//! group <name>
//! degree <n>
//! gen <cycle-string>        # one per group generator
//! claim irredundant-generating | irredundant
//! class <label>             # optional
//! elt <cycle-string>        # one per sequence element
//! ```
//!
//! Lines starting with `#` and blank lines are ignored.

use std::fmt;
use std::str::FromStr;

use super::{deleted_subset_report, is_generating, is_irredundant, DeletedSubsetReport, GeneratingSequence};
use crate::classes::conjugacy_classes;
use crate::error::{Error, Result};
use crate::group::{PermGroup, ENUMERATION_CAP};
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    IrredundantGenerating,
    Irredundant,
}

impl Claim {
    pub fn as_str(self) -> &'static str {
        match self {
            Claim::IrredundantGenerating => "irredundant-generating",
            Claim::Irredundant => "irredundant",
        }
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "irredundant-generating" => Ok(Claim::IrredundantGenerating),
            "irredundant" => Ok(Claim::Irredundant),
            other => Err(format!("unknown claim `{other}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub group: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub claim: Claim,
    pub class_label: Option<String>,
    pub elements: Vec<String>,
}

impl Certificate {
    pub fn parse(text: &str) -> Result<Certificate> {
        let mut group = None;
        let mut degree = None;
        let mut generators = Vec::new();
        let mut claim = None;
        let mut class_label = None;
        let mut elements = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let fail = |message: String| Error::Format { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (key, value) = match trimmed.split_once(' ') {
                Some((k, v)) => (k, v.trim()),
                None => return Err(fail(format!("expected `<key> <value>`, got `{trimmed}`"))),
            };
            match key {
                "group" => set_once(&mut group, value.to_string(), "group", line)?,
                "degree" => {
                    let n: usize = value
                        .parse()
                        .map_err(|_| fail(format!("bad degree `{value}`")))?;
                    set_once(&mut degree, n, "degree", line)?;
                }
                "gen" | "elt" => {
                    let n = degree.ok_or_else(|| fail(format!("`{key}` before `degree`")))?;
                    let p = Permutation::parse_cycles(value, n).map_err(|e| fail(e.to_string()))?;
                    let canonical = p.to_string();
                    if key == "gen" {
                        generators.push(canonical);
                    } else {
                        elements.push(canonical);
                    }
                }
                "claim" => {
                    let c = value.parse::<Claim>().map_err(fail)?;
                    set_once(&mut claim, c, "claim", line)?;
                }
                "class" => set_once(&mut class_label, value.to_string(), "class", line)?,
                other => return Err(fail(format!("unknown key `{other}`"))),
            }
        }
        let missing = |what: &str| Error::Format {
            line: 0,
            message: format!("missing `{what}` line"),
        };
        let cert = Certificate {
            group: group.ok_or_else(|| missing("group"))?,
            degree: degree.ok_or_else(|| missing("degree"))?,
            generators,
            claim: claim.ok_or_else(|| missing("claim"))?,
            class_label,
            elements,
        };
        if cert.generators.is_empty() {
            return Err(missing("gen"));
        }
        Ok(cert)
    }

    pub fn group(&self) -> Result<PermGroup> {
        let gens: Vec<&str> = self.generators.iter().map(String::as_str).collect();
        PermGroup::from_cycles(self.degree, &gens)
    }

    pub fn permutations(&self) -> Result<Vec<Permutation>> {
        self.elements
            .iter()
            .map(|s| Permutation::parse_cycles(s, self.degree))
            .collect()
    }

    pub fn sequence(&self) -> Result<GeneratingSequence> {
        GeneratingSequence::new(&self.group()?, self.permutations()?)
    }

    pub fn from_sequence(
        group: &str,
        seq: &GeneratingSequence,
        claim: Claim,
        class_label: Option<String>,
    ) -> Certificate {
        Certificate {
            group: group.to_string(),
            degree: seq.parent().degree(),
            generators: seq.parent().generators().iter().map(|g| g.to_string()).collect(),
            claim,
            class_label,
            elements: seq.elements().iter().map(|g| g.to_string()).collect(),
        }
    }
}

fn set_once<T>(slot: &mut Option<T>, value: T, key: &str, line: usize) -> Result<()> {
    if slot.is_some() {
        return Err(Error::Format {
            line,
            message: format!("duplicate `{key}` line"),
        });
    }
    *slot = Some(value);
    Ok(())
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group {}", self.group)?;
        writeln!(f, "degree {}", self.degree)?;
        for g in &self.generators {
            writeln!(f, "gen {g}")?;
        }
        writeln!(f, "claim {}", self.claim.as_str())?;
        if let Some(c) = &self.class_label {
            writeln!(f, "class {c}")?;
        }
        for e in &self.elements {
            writeln!(f, "elt {e}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCheck {
    pub claimed: String,
    /// Labels of the classes containing each element (empty when the group
    /// is too large to enumerate).
    pub found: Vec<String>,
    pub consistent: Option<bool>,
}

/// Outcome of checking a certificate; failures are recorded, not thrown.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub group: String,
    pub group_order: Option<u64>,
    pub parse_error: Option<String>,
    /// Indices of elements outside the group or equal to the identity.
    pub bad_elements: Vec<(usize, String)>,
    pub irredundant: Option<bool>,
    pub generating: Option<bool>,
    pub class: Option<ClassCheck>,
    pub deleted: Option<DeletedSubsetReport>,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.parse_error.is_none()
            && self.bad_elements.is_empty()
            && self.irredundant == Some(true)
            && self.generating != Some(false)
            && self.class.as_ref().is_none_or(|c| c.consistent != Some(false))
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "certificate for {}", self.group)?;
        if let Some(e) = &self.parse_error {
            writeln!(f, "parse: FAIL ({e})")?;
            return writeln!(f, "overall: FAIL");
        }
        writeln!(f, "parse: OK")?;
        if let Some(n) = self.group_order {
            writeln!(f, "group order: {}", crate::format::commify(n))?;
        }
        if self.bad_elements.is_empty() {
            writeln!(f, "membership: PASS")?;
        } else {
            for (i, why) in &self.bad_elements {
                writeln!(f, "membership: FAIL (element {}: {why})", i + 1)?;
            }
        }
        if let Some(ok) = self.irredundant {
            writeln!(f, "irredundant: {}", verdict(ok))?;
        }
        if let Some(ok) = self.generating {
            writeln!(f, "generating: {}", verdict(ok))?;
        }
        if let Some(c) = &self.class {
            match c.consistent {
                Some(ok) => writeln!(
                    f,
                    "class {}: {} (elements in {})",
                    c.claimed,
                    verdict(ok),
                    c.found.join(",")
                )?,
                None => writeln!(f, "class {}: UNCHECKED (group too large)", c.claimed)?,
            }
        }
        if let Some(d) = &self.deleted {
            for e in &d.entries {
                writeln!(
                    f,
                    "  H_{}: order {}{}",
                    e.index + 1,
                    crate::format::commify(e.order),
                    if e.proper { "" } else { " (not proper)" }
                )?;
            }
        }
        writeln!(f, "overall: {}", verdict(self.pass()))
    }
}

/// Checks every claim a certificate makes.
pub fn verify_certificate(cert: &Certificate) -> VerificationReport {
    let mut report = VerificationReport {
        group: cert.group.clone(),
        group_order: None,
        parse_error: None,
        bad_elements: Vec::new(),
        irredundant: None,
        generating: None,
        class: None,
        deleted: None,
    };
    let group = match cert.group() {
        Ok(g) => g,
        Err(e) => {
            report.parse_error = Some(e.to_string());
            return report;
        }
    };
    let elements = match cert.permutations() {
        Ok(v) => v,
        Err(e) => {
            report.parse_error = Some(e.to_string());
            return report;
        }
    };
    report.group_order = Some(group.order());
    for (i, x) in elements.iter().enumerate() {
        if x.is_identity() {
            report.bad_elements.push((i, "identity".into()));
        } else if !group.chain().contains(x) {
            report.bad_elements.push((i, "not in group".into()));
        }
    }
    if !report.bad_elements.is_empty() {
        return report;
    }
    let seq = GeneratingSequence::new_unchecked(&group, elements);
    report.irredundant = Some(is_irredundant(&seq));
    if cert.claim == Claim::IrredundantGenerating {
        report.generating = Some(is_generating(&seq));
    }
    if let Some(label) = &cert.class_label {
        report.class = Some(check_class(&group, &seq, label));
    }
    report.deleted = Some(deleted_subset_report(&seq, false));
    report
}

fn check_class(group: &PermGroup, seq: &GeneratingSequence, label: &str) -> ClassCheck {
    let Ok(classes) = conjugacy_classes(group, ENUMERATION_CAP) else {
        return ClassCheck {
            claimed: label.to_string(),
            found: Vec::new(),
            consistent: None,
        };
    };
    let found: Vec<String> = seq
        .elements()
        .iter()
        .map(|x| {
            classes
                .iter()
                .find(|c| c.contains(group, x))
                .map(|c| c.label.clone())
                .unwrap_or_default()
        })
        .collect();
    let consistent = found.iter().all(|l| l == label);
    let mut distinct = found.clone();
    distinct.sort();
    distinct.dedup();
    ClassCheck {
        claimed: label.to_string(),
        found: distinct,
        consistent: Some(consistent),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
# S3 as a sanity case
group S3
degree 3
gen (1,2,3)
gen (1,2)
claim irredundant-generating
elt (1,2)
elt (2,3)
";

    #[test]
    fn parse_and_print_round_trip() {
        let c = Certificate::parse(SMALL).unwrap();
        assert_eq!(c.group, "S3");
        assert_eq!(c.elements, vec!["(1,2)", "(2,3)"]);
        let again = Certificate::parse(&c.to_string()).unwrap();
        assert_eq!(again, c);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad = SMALL.replace("elt (2,3)", "elt (2,4)");
        match Certificate::parse(&bad) {
            Err(Error::Format { line, .. }) => assert_eq!(line, 8),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            Certificate::parse("hello world\n"),
            Err(Error::Format { line: 1, .. })
        ));
        assert!(Certificate::parse("").is_err());
    }

    #[test]
    fn verify_small() {
        let c = Certificate::parse(SMALL).unwrap();
        let r = verify_certificate(&c);
        assert!(r.pass(), "{r}");
        let mut dup = c.clone();
        dup.elements.push("(1,2)".into());
        let r = verify_certificate(&dup);
        assert_eq!(r.irredundant, Some(false));
        assert!(!r.pass());
        assert!(r.to_string().contains("irredundant: FAIL"));
    }

    #[test]
    fn outsiders_are_reported() {
        let mut c = Certificate::parse(SMALL).unwrap();
        c.generators = vec!["(1,2,3)".into()];
        let r = verify_certificate(&c);
        assert_eq!(r.bad_elements.len(), 2);
        assert!(!r.pass());
    }
}
