//! Command implementations. Reports go to stdout, diagnostics to stderr;
//! exit codes: 0 verified, 1 falsified or inconclusive, 2 usage error,
//! 3 internal error.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use arcfib_core::angle::gaussian_product;
use arcfib_core::ball::atan_ratio;
use arcfib_core::catalog::{
    build_finite, list_identities, term_generator, verify_finite, verify_instance, Arity,
    IdentityId, Kind, Status,
};
use arcfib_core::error::Error as CoreError;
use arcfib_core::fib::{check_algebraic_identity, AlgebraicFamily};
use arcfib_core::rational::{pow10_inv, ratio};
use arcfib_core::series::{golden_arctan, tail_bound, verify_infinite};
use arcfib_core::telescope::{
    double_shift, double_shift_alt, telescope_alt, telescope_diff, RationalSequence,
};
use arcfib_core::BigInt;

use crate::args::{
    AlgebraicArgs, Cli, Command, EvalArgs, Format, SelftestArgs, SweepArgs, VerifyArgs,
};
use crate::report::{
    AlgebraicPair, AlgebraicReport, ListEntry, ReportRow, SelftestReport, SelftestSection,
    SweepReport,
};

pub const EXIT_VERIFIED: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INTERNAL: u8 = 3;

/// A command failure that carries its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        let code = match e {
            CoreError::PrecisionCapExceeded { .. } => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

pub fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::List => cmd_list(cli.format),
        Command::Verify(args) => cmd_verify(cli.format, args),
        Command::Sweep(args) => cmd_sweep(cli.format, args),
        Command::Eval(args) => cmd_eval(cli.format, args),
        Command::Algebraic(args) => cmd_algebraic(cli.format, args),
        Command::Selftest(args) => cmd_selftest(cli.format, args),
    }
}

fn emit_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("reports serialize")
    );
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(0) => Err(Failure::usage("--jobs must be at least 1")),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Failure {
                code: EXIT_INTERNAL,
                message: format!("failed to build worker pool: {e}"),
            })
            .map(|pool| pool.install(f)),
    }
}

fn cmd_list(format: Format) -> Result<u8, Failure> {
    let entries: Vec<ListEntry> = list_identities().iter().map(ListEntry::from_info).collect();
    match format {
        Format::Json => emit_json(&entries),
        Format::Csv => {
            println!("id,params,parity,kind,description");
            for e in &entries {
                println!(
                    "{},{},{},{},{}",
                    e.id, e.params, e.parity, e.kind, e.description
                );
            }
        }
        Format::Text => {
            println!(
                "{:<8} {:<9} {:<7} {:<8} description",
                "id", "kind", "params", "parity"
            );
            for e in &entries {
                let parity = if e.parity == "none" {
                    String::new()
                } else {
                    format!("({})", e.parity)
                };
                println!(
                    "{:<8} {:<9} {:<7} {:<8} {}",
                    e.id, e.kind, e.params, parity, e.description
                );
            }
        }
    }
    Ok(EXIT_VERIFIED)
}

fn reject(cond: bool, msg: &str) -> Result<(), Failure> {
    if cond {
        Err(Failure::usage(msg))
    } else {
        Ok(())
    }
}

fn status_exit(status: Status) -> u8 {
    if status == Status::Verified {
        EXIT_VERIFIED
    } else {
        EXIT_FAILED
    }
}

fn print_row(format: Format, row: &ReportRow) {
    match format {
        Format::Json => emit_json(row),
        Format::Csv => {
            println!("{}", ReportRow::CSV_HEADER);
            println!("{}", row.csv_line());
        }
        Format::Text => println!("{}", row.text_line()),
    }
}

fn cmd_verify(format: Format, args: VerifyArgs) -> Result<u8, Failure> {
    let id = IdentityId::parse(&args.id)?;
    let info = id.info()?;
    match info.kind {
        Kind::Finite => {
            reject(
                args.digits.is_some(),
                "--digits applies to infinite identities",
            )?;
            let (m, t) = match info.arity {
                Arity::TOnly => {
                    reject(args.m.is_some(), &format!("{} takes only --t", id.name()))?;
                    reject(args.n.is_some(), &format!("{} takes only --t", id.name()))?;
                    let t = args
                        .t
                        .ok_or_else(|| Failure::usage(format!("{} requires --t", id.name())))?;
                    (0, t)
                }
                Arity::MAndT => {
                    reject(
                        args.n.is_some(),
                        &format!("{} takes --m and --t", id.name()),
                    )?;
                    let m = args
                        .m
                        .ok_or_else(|| Failure::usage(format!("{} requires --m", id.name())))?;
                    let t = args
                        .t
                        .ok_or_else(|| Failure::usage(format!("{} requires --t", id.name())))?;
                    (m, t)
                }
                Arity::MAndN => {
                    reject(
                        args.t.is_some(),
                        &format!("{} takes --m and --n", id.name()),
                    )?;
                    let m = args
                        .m
                        .ok_or_else(|| Failure::usage(format!("{} requires --m", id.name())))?;
                    let n = args
                        .n
                        .ok_or_else(|| Failure::usage(format!("{} requires --n", id.name())))?;
                    (m, n)
                }
                _ => unreachable!("finite kinds have finite arities"),
            };
            let report = verify_finite(id, m, t)?;
            let row = ReportRow::finite(&report, true);
            print_row(format, &row);
            Ok(status_exit(report.status))
        }
        Kind::Infinite => {
            reject(args.t.is_some(), "--t applies to finite identities")?;
            reject(args.n.is_some(), "--n applies to finite identities")?;
            let m = match info.arity {
                Arity::Parameterless => {
                    reject(args.m.is_some(), &format!("{} takes no --m", id.name()))?;
                    0
                }
                Arity::MOnly => args
                    .m
                    .ok_or_else(|| Failure::usage(format!("{} requires --m", id.name())))?,
                _ => unreachable!("infinite kinds have infinite arities"),
            };
            let digits = args.digits.unwrap_or(30);
            let start = Instant::now();
            let report = verify_infinite(id, m, digits)?;
            let row = ReportRow::infinite(&report, Some(start.elapsed().as_millis() as u64));
            print_row(format, &row);
            Ok(status_exit(report.status))
        }
    }
}

fn cmd_eval(format: Format, args: EvalArgs) -> Result<u8, Failure> {
    let id = IdentityId::parse(&args.id)?;
    let info = id.info()?;
    reject(
        info.kind != Kind::Infinite,
        &format!("{} is a finite identity; use verify", id.name()),
    )?;
    let m = match info.arity {
        Arity::Parameterless => {
            reject(args.m.is_some(), &format!("{} takes no --m", id.name()))?;
            0
        }
        Arity::MOnly => args
            .m
            .ok_or_else(|| Failure::usage(format!("{} requires --m", id.name())))?,
        _ => unreachable!(),
    };
    let start = Instant::now();
    let report = verify_infinite(id, m, args.digits)?;
    let row = ReportRow::infinite(&report, Some(start.elapsed().as_millis() as u64));
    print_row(format, &row);
    Ok(status_exit(report.status))
}

fn cmd_sweep(format: Format, args: SweepArgs) -> Result<u8, Failure> {
    let id = IdentityId::parse(&args.id)?;
    let info = id.info()?;
    if info.kind == Kind::Infinite {
        return Err(Failure::usage(format!(
            "{} is an infinite identity; use eval or verify --digits",
            id.name()
        )));
    }

    // Resolve the grid ranges according to the identity's arity. For
    // per-index identities the second range is the n range (the --t-range
    // spelling is accepted as an alias).
    let (m_range, second_range) = match info.arity {
        Arity::TOnly => {
            reject(
                args.m_range.is_some() || args.n_range.is_some(),
                &format!("{} takes only --t-range", id.name()),
            )?;
            let t = args
                .t_range
                .ok_or_else(|| Failure::usage(format!("{} requires --t-range", id.name())))?;
            (None, t)
        }
        Arity::MAndT => {
            reject(
                args.n_range.is_some(),
                &format!("{} takes --m-range and --t-range", id.name()),
            )?;
            let m = args
                .m_range
                .ok_or_else(|| Failure::usage(format!("{} requires --m-range", id.name())))?;
            let t = args
                .t_range
                .ok_or_else(|| Failure::usage(format!("{} requires --t-range", id.name())))?;
            (Some(m), t)
        }
        Arity::MAndN => {
            let m = args
                .m_range
                .ok_or_else(|| Failure::usage(format!("{} requires --m-range", id.name())))?;
            let n = args.n_range.or(args.t_range).ok_or_else(|| {
                Failure::usage(format!("{} requires --n-range (or --t-range)", id.name()))
            })?;
            if n.lo < 1 {
                return Err(Failure::usage(format!(
                    "{} requires n >= 1; got n range {}",
                    id.name(),
                    n.label()
                )));
            }
            (Some(m), n)
        }
        _ => unreachable!("finite identities have finite arities"),
    };

    let grid: Vec<(i64, i64)> = match m_range {
        None => second_range.iter().map(|t| (0, t)).collect(),
        Some(mr) => mr
            .iter()
            .filter(|&m| info.parity.admits(m, 0))
            .flat_map(|m| second_range.iter().map(move |t| (m, t)))
            .collect(),
    };
    if grid.is_empty() {
        return Err(Failure::usage(format!(
            "empty sweep grid for {}: no parity-valid parameters ({} required) in range",
            id.name(),
            info.parity.label()
        )));
    }

    let start = Instant::now();
    let rows: Vec<ReportRow> = with_pool(args.jobs, || {
        grid.par_iter()
            .map(|&(m, t)| verify_finite(id, m, t).map(|report| ReportRow::finite(&report, false)))
            .collect::<Result<Vec<_>, _>>()
    })??;
    eprintln!(
        "sweep {}: {} instances in {:.2?}",
        id.name(),
        rows.len(),
        start.elapsed()
    );

    let verified = rows.iter().filter(|r| r.status_is_verified()).count() as u64;
    let falsified = rows
        .iter()
        .filter(|r| r.status == Status::Falsified.label())
        .count() as u64;
    let inconclusive = rows.len() as u64 - verified - falsified;
    let report = SweepReport {
        id: id.name(),
        m_range: m_range.map(|r| r.label()),
        t_range: Some(second_range.label()),
        checked: rows.len() as u64,
        verified,
        falsified,
        inconclusive,
        first_counterexample: rows.iter().find(|r| !r.status_is_verified()).cloned(),
    };

    match format {
        Format::Json => emit_json(&report),
        Format::Text => println!("{}", report.text()),
        Format::Csv => {
            println!("{}", ReportRow::CSV_HEADER);
            for row in &rows {
                println!("{}", row.csv_line());
            }
        }
    }
    Ok(if report.all_verified() {
        EXIT_VERIFIED
    } else {
        EXIT_FAILED
    })
}

fn cmd_algebraic(format: Format, args: AlgebraicArgs) -> Result<u8, Failure> {
    let family = AlgebraicFamily::parse(&args.family)?;
    let grid: Vec<(i64, i64)> = args
        .m_range
        .iter()
        .flat_map(|m| args.n_range.iter().map(move |n| (m, n)))
        .filter(|&(m, n)| family.parity().admits(m, n))
        .collect();
    if grid.is_empty() {
        return Err(Failure::usage(format!(
            "empty algebraic grid for {}: no parity-valid pairs ({}) in range",
            family.name(),
            family.parity().label()
        )));
    }
    let results: Vec<((i64, i64), bool)> = with_pool(args.jobs, || {
        grid.par_iter()
            .map(|&(m, n)| check_algebraic_identity(family, m, n).map(|ok| ((m, n), ok)))
            .collect::<Result<Vec<_>, _>>()
    })??;
    let passed = results.iter().filter(|(_, ok)| *ok).count() as u64;
    let report = AlgebraicReport {
        family: family.name().to_string(),
        m_range: args.m_range.label(),
        n_range: args.n_range.label(),
        checked: results.len() as u64,
        passed,
        failed: results.len() as u64 - passed,
        first_counterexample: results
            .iter()
            .find(|(_, ok)| !ok)
            .map(|&((m, n), _)| AlgebraicPair { m, n }),
    };
    match format {
        Format::Json => emit_json(&report),
        Format::Text => println!("{}", report.text()),
        Format::Csv => {
            println!("family,m,n,status");
            for ((m, n), ok) in &results {
                println!(
                    "{},{},{},{}",
                    report.family,
                    m,
                    n,
                    if *ok { "verified" } else { "falsified" }
                );
            }
        }
    }
    Ok(if report.failed == 0 {
        EXIT_VERIFIED
    } else {
        EXIT_FAILED
    })
}

struct Section {
    name: &'static str,
    checked: u64,
    failed: u64,
    counterexample: Option<ReportRow>,
}

impl Section {
    fn new(name: &'static str) -> Self {
        Section {
            name,
            checked: 0,
            failed: 0,
            counterexample: None,
        }
    }

    fn record_finite(&mut self, report: &arcfib_core::catalog::Report) {
        self.checked += 1;
        if report.status != Status::Verified {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(ReportRow::finite(report, false));
            }
        }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
        }
    }
}

fn selftest_algebraic(hi: i64) -> Result<Section, Failure> {
    let mut s = Section::new("algebraic families");
    for fam in AlgebraicFamily::ALL {
        for m in 0..=hi {
            for n in 0..=hi {
                if !fam.parity().admits(m, n) {
                    continue;
                }
                s.record(check_algebraic_identity(fam, m, n)?);
            }
        }
    }
    Ok(s)
}

fn selftest_lemma(m_hi: i64, n_hi: i64) -> Result<Section, Failure> {
    let mut s = Section::new("single-index identities");
    let ids: Vec<IdentityId> = (1..=8)
        .map(IdentityId::Lemma1)
        .chain([IdentityId::E33])
        .collect();
    let reports: Vec<_> = ids
        .par_iter()
        .map(|&id| {
            let info = id.info()?;
            let mut out = Vec::new();
            for m in 0..=m_hi {
                if !info.parity.admits(m, 0) {
                    continue;
                }
                for n in 1..=n_hi {
                    out.push(verify_finite(id, m, n)?);
                }
            }
            Ok::<_, CoreError>(out)
        })
        .collect::<Result<Vec<_>, _>>()?;
    for r in reports.iter().flatten() {
        s.record_finite(r);
    }
    Ok(s)
}

fn selftest_classical(t_hi: i64) -> Result<Section, Failure> {
    let mut s = Section::new("classical finite identities");
    for id in [IdentityId::Hr63T5, IdentityId::Hr64] {
        for t in 0..=t_hi {
            s.record_finite(&verify_finite(id, 0, t)?);
        }
    }
    Ok(s)
}

fn theorem_ids() -> Vec<IdentityId> {
    use arcfib_core::catalog::Part;
    [Part::A, Part::B, Part::C, Part::D]
        .iter()
        .map(|&p| IdentityId::Theorem1(p))
        .chain([Part::A, Part::B].iter().map(|&p| IdentityId::Theorem2(p)))
        .chain(
            [Part::A, Part::B, Part::C]
                .iter()
                .map(|&p| IdentityId::Theorem3(p)),
        )
        .collect()
}

fn selftest_theorems(m_hi: i64, t_hi: i64, perturb: bool) -> Result<Section, Failure> {
    let mut s = Section::new("summed identities");
    let grid: Vec<(IdentityId, i64, i64)> = theorem_ids()
        .into_iter()
        .flat_map(|id| {
            let info = id.info().expect("theorem ids are valid");
            (0..=m_hi)
                .filter(move |&m| info.parity.admits(m, 0))
                .flat_map(move |m| (0..=t_hi).map(move |t| (id, m, t)))
        })
        .collect();
    let reports: Vec<_> = grid
        .par_iter()
        .map(|&(id, m, t)| verify_finite(id, m, t))
        .collect::<Result<Vec<_>, _>>()?;
    for r in &reports {
        s.record_finite(r);
    }
    if perturb {
        // Injected negative instance: must surface as a failure.
        let mut inst = build_finite(IdentityId::Theorem1(arcfib_core::catalog::Part::B), 1, 3)?;
        inst.perturb_lhs_arg(0);
        s.record_finite(&verify_instance(&inst)?);
    }
    Ok(s)
}

fn selftest_infinite(
    seed_digits: u32,
    corollary_digits: u32,
    m_hi: i64,
) -> Result<Section, Failure> {
    let mut s = Section::new("infinite identities");
    let mut jobs: Vec<(IdentityId, i64, u32)> = vec![
        (IdentityId::IE4, 0, seed_digits),
        (IdentityId::IE6, 0, seed_digits),
        (IdentityId::IE7, 0, seed_digits),
    ];
    for info in list_identities()
        .into_iter()
        .filter(|i| i.kind == Kind::Infinite)
    {
        if info.arity != Arity::MOnly {
            continue;
        }
        let mut ms: Vec<i64> = (1..=m_hi).filter(|&m| info.parity.admits(m, 0)).collect();
        if info.parity.admits(0, 0) && m_hi >= 8 {
            ms.push(0);
        }
        if m_hi < 8 {
            ms.truncate(1);
        }
        for m in ms {
            jobs.push((info.id, m, corollary_digits));
        }
    }
    let statuses: Vec<Status> = jobs
        .par_iter()
        .map(|&(id, m, digits)| verify_infinite(id, m, digits).map(|r| r.status))
        .collect::<Result<Vec<_>, _>>()?;
    for st in statuses {
        s.record(st == Status::Verified);
    }
    Ok(s)
}

fn selftest_telescoping(cases: usize) -> Result<Section, Failure> {
    let mut s = Section::new("telescoping identities");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_7e57);
    for _ in 0..cases {
        let len = rng.gen_range(0..=24usize);
        let x = RationalSequence::new(
            (0..len)
                .map(|_| ratio(rng.gen_range(-10_000..=10_000), rng.gen_range(1..=10_000)))
                .collect(),
        );
        let k = rng.gen_range(0..=len);
        let m = rng.gen_range(0..=(len - k));
        let (a, b) = telescope_diff(&x, k, m)?;
        s.record(a == b);
        let (a, b) = telescope_alt(&x, k, m)?;
        s.record(a == b);
        let (a, b) = double_shift(&x, k, m)?;
        s.record(a == b);
        let (a, b) = double_shift_alt(&x, k, m)?;
        s.record(a == b);
    }
    Ok(s)
}

fn selftest_tail_bounds() -> Result<Section, Failure> {
    let mut s = Section::new("tail bounds");
    for info in list_identities()
        .into_iter()
        .filter(|i| i.kind == Kind::Infinite)
    {
        let ms: Vec<i64> = match info.arity {
            Arity::Parameterless => vec![0],
            Arity::MOnly => (1..=8).filter(|&m| info.parity.admits(m, 0)).collect(),
            _ => unreachable!(),
        };
        for m in ms {
            let series = term_generator(info.id, m)?;
            let mut prefixes = vec![arcfib_core::CertifiedReal::exact_zero()];
            let mut acc = arcfib_core::CertifiedReal::exact_zero();
            for n in 1..=65u64 {
                let t = series.term(n);
                acc =
                    acc.add(&atan_ratio(t.arg().numer(), t.arg().denom(), 200).mul_i64(t.coeff()));
                prefixes.push(acc.clone());
            }
            for n in 5..=40usize {
                let diff = prefixes[n + 25].sub(&prefixes[n]);
                let bound = tail_bound(info.id, m, n as u64)?.bound;
                s.record(diff.abs_upper_bound() <= bound);
            }
        }
    }
    Ok(s)
}

fn selftest_cross_consistency() -> Result<Section, Failure> {
    let mut s = Section::new("cross-consistency");
    let bits = 64 * 14 / 4 + 24;
    let doubled = golden_arctan(bits).mul_i64(2);
    let atan2 = atan_ratio(&BigInt::from(2), &BigInt::from(1), bits + 48);
    let tol = pow10_inv(64, 1);
    s.record(doubled.radius_leq(&tol) && atan2.radius_leq(&tol) && doubled.contains(&atan2));
    Ok(s)
}

fn selftest_falsification(cases: usize) -> Result<Section, Failure> {
    let mut s = Section::new("falsification power");
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_fa15);
    let finite: Vec<_> = list_identities()
        .into_iter()
        .filter(|i| i.kind == Kind::Finite)
        .collect();
    let mut done = 0;
    while done < cases {
        let info = &finite[rng.gen_range(0..finite.len())];
        let m = loop {
            let m = rng.gen_range(0i64..=8);
            if info.parity.admits(m, 0) {
                break m;
            }
        };
        let (m, t) = match info.arity {
            Arity::TOnly => (0, rng.gen_range(1i64..=12)),
            Arity::MAndT | Arity::MAndN => (m, rng.gen_range(1i64..=12)),
            _ => unreachable!(),
        };
        let mut inst = build_finite(info.id, m, t)?;
        if inst.lhs.is_empty() {
            continue;
        }
        let idx = rng.gen_range(0..inst.lhs.len());
        inst.perturb_lhs_arg(idx);
        done += 1;
        let product = gaussian_product(&inst.lhs.concat(&inst.rhs.negated()));
        let report = verify_instance(&inst)?;
        if product.is_positive_real() {
            continue; // accidental re-identity: the exact product decides
        }
        s.record(report.status == Status::Falsified);
    }
    Ok(s)
}

fn selftest_negative_control() -> Result<Section, Failure> {
    let mut s = Section::new("negative control");
    let mut inst = build_finite(IdentityId::Hr63T5, 0, 5)?;
    inst.perturb_lhs_arg(2);
    let report = verify_instance(&inst)?;
    s.record(report.status == Status::Falsified);
    Ok(s)
}

fn cmd_selftest(format: Format, args: SelftestArgs) -> Result<u8, Failure> {
    let full = args.full;
    let perturb = args.perturb_enabled();
    let start = Instant::now();
    let sections: Vec<Section> = if full {
        vec![
            selftest_algebraic(64)?,
            selftest_lemma(24, 24)?,
            selftest_classical(64)?,
            selftest_theorems(12, 32, perturb)?,
            selftest_infinite(50, 40, 8)?,
            selftest_telescoping(1000)?,
            selftest_tail_bounds()?,
            selftest_cross_consistency()?,
            selftest_falsification(100)?,
            selftest_negative_control()?,
        ]
    } else {
        vec![
            selftest_algebraic(16)?,
            selftest_lemma(8, 8)?,
            selftest_classical(8)?,
            selftest_theorems(4, 8, perturb)?,
            selftest_infinite(20, 20, 2)?,
            selftest_negative_control()?,
        ]
    };
    eprintln!("selftest finished in {:.2?}", start.elapsed());

    let failed_total: u64 = sections.iter().map(|s| s.failed).sum();
    let report = SelftestReport {
        mode: if full { "full" } else { "quick" }.to_string(),
        sections: sections
            .iter()
            .map(|s| SelftestSection {
                name: s.name.to_string(),
                checked: s.checked,
                failed: s.failed,
            })
            .collect(),
        status: if failed_total == 0 { "ok" } else { "failed" }.to_string(),
        first_counterexample: sections.iter().find_map(|s| s.counterexample.clone()),
    };
    match format {
        Format::Json => emit_json(&report),
        Format::Text => println!("{}", report.text()),
        Format::Csv => {
            println!("section,checked,failed");
            for s in &report.sections {
                println!("{},{},{}", s.name, s.checked, s.failed);
            }
        }
    }
    Ok(if failed_total == 0 {
        EXIT_VERIFIED
    } else {
        EXIT_FAILED
    })
}
