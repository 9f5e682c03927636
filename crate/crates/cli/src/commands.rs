use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use irredundant::bounds::{propagate_bounds, GroupTable};
use irredundant::catalog::{shipped_certificates, shipped_table};
use irredundant::format::{commify, format_time, progress_line};
use irredundant::genset::{verify_certificate, Certificate};
use irredundant::oracle::{construct, rank_report};
use irredundant::search::{dihedral_orders, scan_with_progress, Pool, SearchConfig};
use irredundant::{conjugacy_classes, Error, PermGroup, ENUMERATION_CAP};

use crate::resolve;
use crate::SearchArgs;

/// Exit code, human report and `key=value` block of one command.
pub struct CommandResult {
    pub code: u8,
    pub report: String,
    pub machine: Option<String>,
}

impl CommandResult {
    fn ok(code: u8, report: String, machine: String) -> Self {
        CommandResult { code, report, machine: Some(machine) }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        CommandResult { code: 2, report: format!("error: {message}"), machine: None }
    }

    pub fn emit(self, machine: bool) -> ExitCode {
        let text = match (machine, self.machine) {
            (true, Some(m)) => m,
            _ => self.report,
        };
        if self.code == 2 {
            eprintln!("{}", text.trim_end());
        } else {
            println!("{}", text.trim_end());
        }
        ExitCode::from(self.code)
    }
}

fn yes_no(ok: Option<bool>) -> &'static str {
    match ok {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "-",
    }
}

pub fn verify(arg: &str) -> CommandResult {
    let shipped = |name: &str| {
        shipped_certificates()
            .into_iter()
            .find(|c| c.group.eq_ignore_ascii_case(name))
            .map(|c| c.to_string())
    };
    let text = match resolve::data_text(arg, "certificates", "cert", shipped) {
        Ok(t) => t,
        Err(e) => return CommandResult::usage(e),
    };
    let cert = match Certificate::parse(&text) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(e),
    };
    let report = verify_certificate(&cert);
    if let Some(e) = &report.parse_error {
        return CommandResult::usage(e);
    }
    let mut machine = format!(
        "group={}\nirredundant={}\ngenerating={}\n",
        report.group,
        yes_no(report.irredundant),
        yes_no(report.generating)
    );
    if let Some(c) = &report.class {
        machine.push_str(&format!("class={}\nclass_check={}\n", c.claimed, yes_no(c.consistent)));
    }
    if let Some(d) = &report.deleted {
        let orders: Vec<String> = d.orders().iter().map(|o| o.to_string()).collect();
        machine.push_str(&format!("deleted_orders={}\n", orders.join(",")));
    }
    let pass = report.pass();
    machine.push_str(&format!("overall={}\n", if pass { "PASS" } else { "FAIL" }));
    CommandResult::ok(if pass { 0 } else { 1 }, report.to_string(), machine)
}

/// Parses `1000000`, `1,000,000` or `10^6`.
pub fn parse_count(s: &str) -> Result<u128, String> {
    let s = s.replace([',', '_'], "");
    let bad = || format!("`{s}` is not a count");
    match s.split_once('^') {
        Some((b, e)) => {
            let b: u128 = b.parse().map_err(|_| bad())?;
            let e: u32 = e.parse().map_err(|_| bad())?;
            b.checked_pow(e).ok_or_else(bad)
        }
        None => s.parse().map_err(|_| bad()),
    }
}

fn search_group(args: &SearchArgs) -> Result<(String, PermGroup), Error> {
    match (&args.gens, args.degree) {
        (Some(gens), Some(degree)) => {
            let gens: Vec<&str> = gens.split(';').map(str::trim).filter(|g| !g.is_empty()).collect();
            Ok((args.group.clone(), PermGroup::from_cycles(degree, &gens)?))
        }
        _ => resolve::group(&args.group),
    }
}

fn numbered(out: &Path, k: usize) -> PathBuf {
    if k == 0 {
        return out.to_path_buf();
    }
    let stem = out.file_stem().map_or_else(String::new, |s| s.to_string_lossy().into_owned());
    let name = match out.extension() {
        Some(ext) => format!("{stem}-{}.{}", k + 1, ext.to_string_lossy()),
        None => format!("{stem}-{}", k + 1),
    };
    out.with_file_name(name)
}

pub fn search(args: &SearchArgs) -> CommandResult {
    let (name, group) = match search_group(args) {
        Ok(g) => g,
        Err(e) => return CommandResult::usage(e),
    };
    let mut cfg = SearchConfig::new(&name, args.size);
    cfg.pool = match &args.class {
        Some(label) => Pool::Class(label.clone()),
        None => Pool::Order(args.pool_order.unwrap_or(2)),
    };
    cfg.tails = args.tails.as_ref().map(|t| t.iter().copied().collect());
    cfg.seed = args.seed;
    cfg.max_combinations = args.limit;
    cfg.workers = args.workers.max(1);
    cfg.progress_every = args.progress_every;
    cfg.max_certificates = args.max_certs.max(1);
    if let Some(b) = args.budget {
        match Duration::try_from_secs_f64(b) {
            Ok(d) => cfg.budget = Some(d),
            Err(_) => return CommandResult::usage(format!("bad budget `{b}`")),
        }
    }
    let label = name.clone();
    let progress = move |ev: irredundant::search::ProgressEvent| {
        eprintln!("{}", progress_line(ev.done, ev.total, &label, ev.elapsed));
    };
    let report = match scan_with_progress(&group, &cfg, &progress) {
        Ok(r) => r,
        Err(e) => return CommandResult::usage(e),
    };

    let out = args
        .out
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("{name}-size{}.cert", args.size)));
    let mut written = Vec::new();
    for (k, cert) in report.certificates.iter().enumerate() {
        let path = numbered(&out, k);
        if let Err(e) = fs::write(&path, cert.to_string()) {
            return CommandResult::usage(format!("{}: {e}", path.display()));
        }
        written.push(path);
    }

    let tails: Vec<String> = report.tails.iter().map(|t| t.to_string()).collect();
    let pool_desc = match &cfg.pool {
        Pool::Order(k) => format!("order {k}"),
        Pool::Class(c) => format!("class {c}"),
        Pool::Explicit(_) => "explicit".into(),
    };
    let mut text = format!(
        "search {name} size {}\npool {pool_desc}: {} elements, tarski pool {}\ntails {{{}}}\n",
        args.size,
        commify(report.pool_size as u64),
        commify(report.tarski_pool_size as u64),
        tails.join(",")
    );
    text.push_str(&format!(
        "combinations {}/{} visited, {} examined, {} pruned, {} subgroups\n",
        commify(report.visited),
        commify(report.total),
        commify(report.examined),
        commify(report.pruned),
        commify(report.states as u64)
    ));
    text.push_str(&format!("stop: {}\n", report.stop.as_str()));
    if report.exhaustive() {
        text.push_str(&format!(
            "exhausted: all {} combinations of {} pool elements taken {} at a time\n",
            commify(report.total),
            report.pool_size,
            args.size - 2
        ));
    }
    for (cert, path) in report.certificates.iter().zip(&written) {
        text.push_str(&format!("found size {} sequence -> {}\n", cert.elements.len(), path.display()));
        for e in &cert.elements {
            text.push_str(&format!("  {e}\n"));
        }
    }
    if report.certificates.is_empty() {
        text.push_str("found nothing\n");
    }
    text.push_str(&format!("elapsed {}\n", format_time(report.elapsed)));

    let machine = format!(
        "group={name}\nsize={}\npool_size={}\ntotal={}\nvisited={}\nexamined={}\nstop={}\nexhaustive={}\ncertificates={}\n",
        args.size,
        report.pool_size,
        report.total,
        report.visited,
        report.examined,
        report.stop.as_str(),
        report.exhaustive(),
        report.certificates.len()
    );
    let code = if report.certificates.is_empty() { 1 } else { 0 };
    CommandResult::ok(code, text, machine)
}

pub fn bounds(arg: &str, m_lower: Option<u32>) -> CommandResult {
    let shipped = |name: &str| shipped_table(name).ok().map(|t| t.to_string());
    let text = match resolve::data_text(arg, "tables", "table", shipped) {
        Ok(t) => t,
        Err(e) => return CommandResult::usage(e),
    };
    let ledger = match GroupTable::parse(&text).and_then(|t| propagate_bounds(&t, m_lower)) {
        Ok(l) => l,
        Err(e) => return CommandResult::usage(e),
    };
    let mut report = ledger.to_string();
    report.push_str(&ledger.machine());
    CommandResult::ok(0, report, ledger.machine())
}

pub fn oracle(spec: &str, classes: bool, cap: u64) -> CommandResult {
    match construct(spec).and_then(|g| rank_report(spec, &g, classes, cap)) {
        Ok(r) => CommandResult::ok(0, r.to_string(), r.machine()),
        Err(e) => CommandResult::usage(e),
    }
}

fn factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn dihedral(arg: &str) -> CommandResult {
    let (name, group) = match resolve::group(arg) {
        Ok(g) => g,
        Err(e) => return CommandResult::usage(e),
    };
    let orders = match dihedral_orders(&group, ENUMERATION_CAP) {
        Ok(o) => o,
        Err(e) => return CommandResult::usage(e),
    };
    let f: Vec<String> = factors(group.order()).iter().map(|p| p.to_string()).collect();
    let mut text = format!("{}  [{}]\n", commify(group.order()), f.join(","));
    for k in &orders {
        text.push_str(&format!("yes:  {k}\n"));
    }
    let list: Vec<String> = orders.iter().map(|k| k.to_string()).collect();
    CommandResult::ok(
        0,
        text,
        format!("group={name}\ndihedral_orders={}\n", list.join(",")),
    )
}

pub fn classes(arg: &str) -> CommandResult {
    let (name, group) = match resolve::group(arg) {
        Ok(g) => g,
        Err(e) => return CommandResult::usage(e),
    };
    let cl = match conjugacy_classes(&group, ENUMERATION_CAP) {
        Ok(c) => c,
        Err(e) => return CommandResult::usage(e),
    };
    let mut text = format!("{name}  order {}\n", commify(group.order()));
    text.push_str(&format!("{:<6} {:>5} {:>10}  representative\n", "class", "order", "size"));
    let mut machine = format!("group={name}\n");
    let mut by_order: BTreeMap<u64, (u64, Vec<&str>)> = BTreeMap::new();
    for c in &cl {
        text.push_str(&format!(
            "{:<6} {:>5} {:>10}  {}\n",
            c.label,
            c.element_order,
            commify(c.size),
            c.representative
        ));
        machine.push_str(&format!("class[{}]={}\n", c.label, c.size));
        let e = by_order.entry(c.element_order).or_default();
        e.0 += c.size;
        e.1.push(&c.label);
    }
    for (k, (total, labels)) in &by_order {
        text.push_str(&format!(
            "order {k} total {} (classes {})\n",
            commify(*total),
            labels.join(" + ")
        ));
        machine.push_str(&format!("order_total[{k}]={total}\n"));
    }
    CommandResult::ok(0, text, machine)
}
