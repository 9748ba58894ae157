//! Batch front end: every computation and verification of the toolkit as a
//! reproducible command with line-oriented output.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use matinv::exactalg::{functional_eq_check, Rational, RationalFn, TruncSeries};
use matinv::fingroup::{
    extract_generators, generator_degrees, molien, parse_generators, reflection_check, reynolds_rank, MatGroup,
};
use matinv::nilpotency::{bounds, minimal_nilpotency, nh_membership};
use matinv::symmfunc::{c32_multiplicity_series, mult_reconstruct, mult_series, schur_decompose2};
use matinv::tracealg::{
    ads_relation_check, c22_hilbert, c32_hilbert, drensky_relations_check, hilbert_check, min_gen_profile, phi2,
    polynomial_ring_hilbert, psi2, t22_multiplicity_check, verify_zero, DimTable, TraceKind, WordCap,
    DEFAULT_SEED,
};
use matinv::traceid::{fundamental, ideal_membership, semantic_identity, trace_poly, GroupAlgElem, IdealBasis, Perm};
use matinv::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Subcommand, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    /// Molien series of a finite matrix group.
    Molien,
    /// Generators of the invariant ring, checked degree by degree against Molien.
    Invariants,
    /// Pseudo-reflection test; for reflection groups also the free-ring check.
    Reflections,
    /// Graded dimensions of a trace algebra, compared with a known Hilbert series.
    Hilbert,
    /// Indecomposable generators of the pure trace algebra by multidegree.
    Mingen,
    /// Schur decomposition of a two-variable symmetric series.
    Schur,
    /// Multiplicity series of the 3x3 two-matrix invariants against its closed form.
    Multseries,
    /// Ideal membership versus trace-identity vanishing in the group algebra.
    Traceid,
    /// Nilpotency degree of algebras with x^n = 0.
    Nilpotency,
    /// Exact checks of trace identities and defining relations.
    VerifyRelations,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Human,
    Structured,
}

#[derive(Args, Clone, Debug, Default)]
pub struct RunConfig {
    /// Group file: first line n, then blank-line separated matrices.
    #[arg(long, global = true)]
    pub group: Option<PathBuf>,
    /// Truncation degree D (or the degree m / N for traceid / nilpotency).
    #[arg(long, global = true)]
    pub degree: Option<u32>,
    /// Matrix size.
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Number of matrices.
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Random specializations or random elements.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Largest N tried when searching for the nilpotency degree.
    #[arg(long, global = true)]
    pub sweep: Option<usize>,
    /// Selects a variant: relations (cayley-hamilton, drensky, ads, all),
    /// schur input (c32, t22), hilbert algebra (pure, mixed).
    #[arg(long, global = true)]
    pub which: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

/// Exit status and printed report of one command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// 0 on success, 1 on a mathematical mismatch.
    pub status: i32,
    pub report: String,
}

impl Outcome {
    fn new(ok: bool, report: String) -> Self {
        Outcome {
            status: if ok { 0 } else { 1 },
            report,
        }
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

impl RunConfig {
    fn load_group(&self) -> Result<MatGroup> {
        let path = self.group.as_ref().ok_or_else(|| usage("--group is required"))?;
        let gens = parse_generators(&read(path)?)?;
        MatGroup::close(&gens, 10_000)
    }

    fn need_n(&self) -> Result<usize> {
        match self.n {
            Some(0) => Err(usage("--n must be at least 1")),
            Some(n) => Ok(n),
            None => Err(usage("--n is required")),
        }
    }

    fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }

    fn samples(&self, default: usize) -> Result<usize> {
        match self.samples {
            Some(0) => Err(usage("--samples must be at least 1")),
            Some(s) => Ok(s),
            None => Ok(default),
        }
    }

    fn structured(&self) -> bool {
        self.format == Format::Structured
    }
}

/// Runs one command. Errors are usage or resource problems (exit status 2).
pub fn run(command: Command, cfg: &RunConfig) -> Result<Outcome> {
    match command {
        Command::Molien => run_molien(cfg),
        Command::Invariants => run_invariants(cfg),
        Command::Reflections => run_reflections(cfg),
        Command::Hilbert => run_hilbert(cfg),
        Command::Mingen => run_mingen(cfg),
        Command::Schur => run_schur(cfg),
        Command::Multseries => run_multseries(cfg),
        Command::Traceid => run_traceid(cfg),
        Command::Nilpotency => run_nilpotency(cfg),
        Command::VerifyRelations => run_relations(cfg),
    }
}

fn one_variable(s: &TruncSeries, bound: u32) -> String {
    let mut parts = Vec::new();
    for k in 0..=bound as u16 {
        let c = s.coeff(&[k]);
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{k}"),
        };
        parts.push(match (c.is_one(), mono.is_empty()) {
            (_, true) => c.to_string(),
            (true, false) => mono,
            (false, false) => format!("{c}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

fn run_molien(cfg: &RunConfig) -> Result<Outcome> {
    let group = cfg.load_group()?;
    let bound = cfg.degree.unwrap_or(10);
    let s = molien(&group, bound);
    let report = if cfg.structured() {
        s.serialize()
    } else {
        format!(
            "group order {}, {} variables\nH(t) = {} + O(t^{})\n",
            group.order(),
            group.n(),
            one_variable(&s, bound),
            bound + 1
        )
    };
    Ok(Outcome::new(true, report))
}

fn run_invariants(cfg: &RunConfig) -> Result<Outcome> {
    let group = cfg.load_group()?;
    let gens = extract_generators(&group, cfg.degree)?;
    let mut out = String::new();
    for block in &gens {
        for g in &block.generators {
            if cfg.structured() {
                writeln!(out, "{} : {g}", block.degree).unwrap();
            } else {
                writeln!(out, "degree {}: {g}", block.degree).unwrap();
            }
        }
    }
    let degrees: Vec<String> = generator_degrees(&gens).iter().map(u32::to_string).collect();
    writeln!(out, "degrees={}", degrees.join(",")).unwrap();
    // Molien against the rank of Reynolds images, low degrees only
    let top = cfg.degree.unwrap_or(group.order() as u32).min(6);
    let series = molien(&group, top);
    let mut ok = true;
    for k in 0..=top {
        let m = series.coeff(&[k as u16]);
        let r = reynolds_rank(&group, k);
        let agree = m == Rational::from(r);
        ok &= agree;
        writeln!(out, "check {k} : molien={m} reynolds_rank={r} {}", verdict(agree)).unwrap();
    }
    Ok(Outcome::new(ok, out))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "match"
    } else {
        "MISMATCH"
    }
}

fn run_reflections(cfg: &RunConfig) -> Result<Outcome> {
    let group = cfg.load_group()?;
    let report = reflection_check(&group);
    let mut out = String::new();
    writeln!(out, "order={}", group.order()).unwrap();
    writeln!(out, "reflections={}", report.reflections.len()).unwrap();
    writeln!(out, "generated_by_reflections={}", report.generated_by_reflections).unwrap();
    let mut ok = true;
    if report.generated_by_reflections {
        let degrees = generator_degrees(&extract_generators(&group, None)?);
        let bound = cfg.degree.unwrap_or(12);
        let exps: Vec<Vec<u16>> = degrees.iter().map(|&d| vec![d as u16]).collect();
        let free = RationalFn::inverse_product(1, &exps).expand(bound)?;
        ok = degrees.len() == group.n() && molien(&group, bound) == free;
        let ds: Vec<String> = degrees.iter().map(u32::to_string).collect();
        writeln!(out, "degrees={}", ds.join(",")).unwrap();
        writeln!(out, "free_ring_check={}", verdict(ok)).unwrap();
    }
    Ok(Outcome::new(ok, out))
}

/// Hilbert series known in closed form for the pure trace algebra.
fn known_series(n: usize, d: usize) -> Option<(RationalFn, &'static str)> {
    match (n, d) {
        (1, _) => Some((polynomial_ring_hilbert(d), "polynomial ring")),
        (2, 2) => Some((c22_hilbert(), "free on five traces")),
        (3, 2) => Some((c32_hilbert(), "closed form with numerator 1 + t1^3 t2^3")),
        _ => None,
    }
}

fn dim_table_report(table: &DimTable, structured: bool) -> String {
    if structured {
        table.serialize()
    } else {
        format!(
            "graded dimensions, n={} d={} total degree <= {}\n{}",
            table.n,
            table.d,
            table.bound,
            table.serialize()
        )
    }
}

fn run_hilbert(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let d = cfg.d.unwrap_or(2);
    let bound = cfg.degree.unwrap_or(6);
    let kind = match cfg.which.as_deref() {
        None | Some("pure") => TraceKind::Pure,
        Some("mixed") => TraceKind::Mixed,
        Some(other) => return Err(usage(format!("--which for hilbert is pure or mixed, not `{other}`"))),
    };
    let known = known_series(n, d).filter(|_| kind == TraceKind::Pure);
    let Some((h, name)) = known else {
        let table = DimTable::compute(n, d, bound, kind, WordCap::default());
        return Ok(Outcome::new(true, dim_table_report(&table, cfg.structured())));
    };
    let report = hilbert_check(n, d, bound, &h)?;
    let mut out = dim_table_report(&report.table, cfg.structured());
    writeln!(out, "series: {name}").unwrap();
    match report.first_mismatch() {
        None => writeln!(out, "hilbert_check=match").unwrap(),
        Some((k, p, c)) => {
            let ks: Vec<String> = k.iter().map(u32::to_string).collect();
            writeln!(out, "hilbert_check=MISMATCH at {} : predicted {p}, computed {c}", ks.join(",")).unwrap()
        }
    }
    let feq = functional_eq_check(&h, n as u32, d);
    writeln!(out, "functional_equation={feq}").unwrap();
    Ok(Outcome::new(report.is_match() && feq, out))
}

fn run_mingen(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let d = cfg.d.unwrap_or(2);
    let bound = cfg.degree.unwrap_or(4);
    let profile = min_gen_profile(n, d, bound);
    let mut keys: Vec<&Vec<u32>> = profile.keys().collect();
    keys.sort_by_key(|k| (k.iter().sum::<u32>(), std::cmp::Reverse((*k).clone())));
    let mut out = String::new();
    for k in keys {
        let ks: Vec<String> = k.iter().map(u32::to_string).collect();
        writeln!(out, "{} : {}", ks.join(","), profile[k]).unwrap();
    }
    writeln!(out, "total : {}", profile.values().sum::<usize>()).unwrap();
    Ok(Outcome::new(true, out))
}

fn run_schur(cfg: &RunConfig) -> Result<Outcome> {
    let bound = cfg.degree.unwrap_or(6);
    match (cfg.input.as_ref(), cfg.which.as_deref()) {
        (Some(path), None) => {
            let f = TruncSeries::parse(&read(path)?, 2, bound)?;
            Ok(Outcome::new(true, schur_decompose2(&f, bound)?.serialize()))
        }
        (None, Some("c32")) => {
            let f = c32_hilbert().expand(bound)?;
            Ok(Outcome::new(true, schur_decompose2(&f, bound)?.serialize()))
        }
        (None, Some("t22")) => {
            let report = t22_multiplicity_check(bound)?;
            let mut out = report.decomposition.serialize();
            for (p, e, f) in &report.mismatches {
                writeln!(out, "MISMATCH {p} : expected {e}, found {f}").unwrap();
            }
            writeln!(out, "multiplicity_check={}", verdict(report.is_match())).unwrap();
            Ok(Outcome::new(report.is_match(), out))
        }
        _ => Err(usage("schur needs --input <series file> or --which c32|t22")),
    }
}

fn run_multseries(cfg: &RunConfig) -> Result<Outcome> {
    let bound = cfg.degree.unwrap_or(20);
    let h = c32_hilbert().expand(bound)?;
    let from_series = mult_series(&schur_decompose2(&h, bound)?);
    let closed = c32_multiplicity_series(bound)?;
    let same = from_series.series() == closed.series();
    let round_trip = mult_reconstruct(&closed, bound) == h;
    let mut out = if cfg.structured() {
        closed.series().serialize()
    } else {
        format!("M'(t, v) up to |lambda| <= {bound} (lines `t v : coefficient`)\n{}", closed.series().serialize())
    };
    writeln!(out, "closed_form_check={}", verdict(same)).unwrap();
    writeln!(out, "reconstruction_check={}", verdict(round_trip)).unwrap();
    Ok(Outcome::new(same && round_trip, out))
}

fn random_element(m: usize, ideal: &[GroupAlgElem], rng: &mut ChaCha8Rng) -> GroupAlgElem {
    let mut e = GroupAlgElem::zero(m);
    if !ideal.is_empty() && rng.gen_bool(0.5) {
        for _ in 0..3 {
            let b = &ideal[rng.gen_range(0..ideal.len())];
            e = e.add(&b.scale(&Rational::from(rng.gen_range(-3i64..=3))));
        }
    }
    if ideal.is_empty() || rng.gen_bool(0.5) {
        let perms: Vec<Perm> = Perm::all(m).collect();
        let p = perms[rng.gen_range(0..perms.len())].clone();
        e.add_term(p, Rational::from(rng.gen_range(1i64..=3)));
    }
    e
}

fn run_traceid(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let mut out = String::new();
    if let Some(path) = &cfg.input {
        let e = GroupAlgElem::parse(&read(path)?)?;
        let member = ideal_membership(&e, n)?;
        let identity = semantic_identity(&e, n)?;
        writeln!(out, "trace polynomial: {}", trace_poly(&e)).unwrap();
        writeln!(out, "member={member}").unwrap();
        writeln!(out, "identity={identity}").unwrap();
        return Ok(Outcome::new(member == identity, out));
    }
    let top = cfg.degree.map_or(n + 1, |m| m as usize);
    let samples = cfg.samples(20)?;
    let seed = cfg.seed();
    writeln!(out, "seed={seed}").unwrap();
    let mut ok = true;
    for m in n + 1..=top {
        let ideal = IdealBasis::compute(n, m)?;
        writeln!(out, "dim J({n},{m})={}", ideal.dim()).unwrap();
        let basis = ideal.basis();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(m as u64);
        let mut agree = 0;
        let mut cases = vec![fundamental(n).embed(m)];
        cases.extend((0..samples).map(|_| random_element(m, &basis, &mut rng)));
        for e in &cases {
            if ideal.contains(e) == semantic_identity(e, n)? {
                agree += 1;
            } else {
                ok = false;
                writeln!(out, "DISAGREE m={m}\n{}", e.serialize()).unwrap();
            }
        }
        writeln!(out, "m={m} agree={agree}/{}", cases.len()).unwrap();
    }
    writeln!(out, "equivalence_check={}", verdict(ok)).unwrap();
    Ok(Outcome::new(ok, out))
}

fn run_nilpotency(cfg: &RunConfig) -> Result<Outcome> {
    let n = cfg.need_n()?;
    let b = bounds(n);
    let mut out = String::new();
    let exact = b.exact.map_or("unknown".to_string(), |e| e.to_string());
    writeln!(out, "n={n} lower={} upper={} exact={exact}", b.lower, b.upper).unwrap();
    let mut ok = true;
    if let Some(big_n) = cfg.degree {
        let member = nh_membership(n, big_n as usize)?;
        writeln!(out, "n={n} N={big_n} member={member}").unwrap();
        if let Some(e) = b.exact {
            ok &= member == (big_n as usize >= e);
        }
    }
    if let Some(max) = cfg.sweep {
        let found = minimal_nilpotency(n, max)?;
        match found {
            Some(m) => writeln!(out, "n={n} minimal_N={m}").unwrap(),
            None => writeln!(out, "n={n} minimal_N=none_up_to_{max}").unwrap(),
        }
        if let Some(e) = b.exact {
            ok &= found == (e <= max).then_some(e);
        }
    }
    Ok(Outcome::new(ok, out))
}

fn run_relations(cfg: &RunConfig) -> Result<Outcome> {
    let which = cfg.which.as_deref().unwrap_or("all");
    let all = which == "all";
    if !matches!(which, "all" | "cayley-hamilton" | "drensky" | "ads") {
        return Err(usage(format!(
            "--which for verify-relations is cayley-hamilton, drensky, ads or all, not `{which}`"
        )));
    }
    let samples = cfg.samples(20)?;
    let seed = cfg.seed();
    let mut out = String::new();
    let mut ok = true;
    let mut line = |out: &mut String, name: &str, value: bool, expected: bool| {
        ok &= value == expected;
        writeln!(out, "{name}={value} {}", verdict(value == expected)).unwrap();
    };
    if all || which == "cayley-hamilton" {
        line(&mut out, "psi2_n2", verify_zero(&psi2(), 2)?, true);
        line(&mut out, "phi2_n2", verify_zero(&phi2(), 2)?, true);
        line(&mut out, "fundamental2_n2", verify_zero(&trace_poly(&fundamental(2)), 2)?, true);
        line(&mut out, "fundamental3_n3", verify_zero(&trace_poly(&fundamental(3)), 3)?, true);
        line(&mut out, "fundamental2_n3", verify_zero(&trace_poly(&fundamental(2)), 3)?, false);
    }
    if all || which == "drensky" {
        let d = cfg.d.unwrap_or(4);
        let report = drensky_relations_check(d, samples, seed)?;
        for notice in &report.notices {
            writeln!(out, "notice: {notice}").unwrap();
        }
        if let Some((rel, sample)) = report.first_failure {
            writeln!(out, "drensky relation {rel} fails at sample {sample}").unwrap();
        }
        writeln!(out, "drensky d={d} relations={} samples={samples} seed={seed}", report.relations).unwrap();
        line(&mut out, "drensky", report.holds(), true);
    }
    if all || which == "ads" {
        let report = ads_relation_check(samples, seed)?;
        if let Some((_, sample)) = report.first_failure {
            writeln!(out, "ads relation fails at sample {sample}").unwrap();
        }
        writeln!(out, "ads samples={samples} seed={seed}").unwrap();
        line(&mut out, "ads", report.holds(), true);
    }
    Ok(Outcome::new(ok, out))
}
