//! Command-line interface for the group engine: construct groups from spec
//! files, query ranks, Thompson subgroups, involvement predicates, fusion
//! control, p-stability, the induced-character pipeline, and run the full
//! verification suite.
//!
//! Output on stdout is deterministic (machine-readable `key=value` lines or
//! JSON lines); progress and timing go to stderr. Exit codes: 0 success /
//! no FAIL, 1 a FAIL was reported, 2 usage or input errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qdp_core::caps::Caps;
use qdp_core::character::character_pipeline;
use qdp_core::fusion::{controls_fusion, is_p_stable, sandwich_witnesses};
use qdp_core::pgroup::{p_rank, sylow_subgroup, thompson};
use qdp_core::report::Report;
use qdp_core::sections::{involves_qd, pprime_involves_qd};
use qdp_core::specfile::GroupSpecFile;
use qdp_core::subgroup::Subgroup;
use qdp_core::verify::{verify_paper, Scope};
use qdp_core::{GroupHandle, Perm};

#[derive(Parser)]
#[command(name = "qdp", version, about = "finite group engine: Sylow/Thompson subgroups, Qd(p) involvement, fusion control, induced characters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Group specification file.
    #[arg(long)]
    spec: Option<std::path::PathBuf>,

    /// Prime for p-dependent operations.
    #[arg(long)]
    p: Option<u64>,

    /// Element-enumeration cap.
    #[arg(long = "cap-enum")]
    cap_enum: Option<u64>,

    /// Subgroup-lattice enumeration cap.
    #[arg(long = "cap-subgroups")]
    cap_subgroups: Option<u64>,

    /// Automorphism-enumeration cap.
    #[arg(long = "cap-aut")]
    cap_aut: Option<u64>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    #[value(name = "json-lines")]
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Build the group described by --spec and print its basic data.
    Construct(CommonOpts),
    /// p-rank of the group.
    Rank(CommonOpts),
    /// Thompson subgroup data of a Sylow p-subgroup.
    Thompson(CommonOpts),
    /// Search for a section isomorphic to Qd(p).
    Involves(CommonOpts),
    /// Search for a section isomorphic to Qd(p) with p'-kernel.
    PprimeInvolves(CommonOpts),
    /// Does N_G(Z(J(S))) control G-fusion in S?
    FusionControl(CommonOpts),
    /// Characteristic sandwich subgroups whose normalizers control fusion.
    Sandwich(CommonOpts),
    /// Is the group p-stable?
    PStable(CommonOpts),
    /// Run the induced-character pipeline.
    CharPipeline(CommonOpts),
    /// Run the built-in verification suite.
    VerifyPaper {
        #[command(flatten)]
        opts: CommonOpts,
        /// Section to run (default: all).
        #[arg(long, default_value = "all")]
        scope: String,
        /// Also write the report to this file.
        #[arg(long)]
        report: Option<std::path::PathBuf>,
    },
}

fn caps_of(opts: &CommonOpts) -> Caps {
    let mut caps = Caps::default();
    if let Some(c) = opts.cap_enum {
        caps.enumeration = c;
    }
    if let Some(c) = opts.cap_subgroups {
        caps.subgroups = c;
    }
    if let Some(c) = opts.cap_aut {
        caps.aut = c;
    }
    caps
}

fn load_group(opts: &CommonOpts, caps: &Caps) -> Result<GroupHandle, CliError> {
    let path = opts
        .spec
        .as_ref()
        .ok_or_else(|| CliError::Usage("--spec <file> is required".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    let file = GroupSpecFile::parse(&text).map_err(|e| CliError::Usage(format!("{e}")))?;
    let (_, g) = file.build(caps).map_err(CliError::Engine)?;
    Ok(g)
}

fn need_p(opts: &CommonOpts) -> Result<u64, CliError> {
    opts.p
        .ok_or_else(|| CliError::Usage("--p <prime> is required".into()))
}

enum CliError {
    Usage(String),
    Engine(qdp_core::Error),
}

/// A flat record printed as one `key=value` line or one JSON object.
struct Record {
    fields: Vec<(String, String)>,
}

impl Record {
    fn new() -> Record {
        Record { fields: Vec::new() }
    }

    fn push(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    fn print(&self, format: Format) {
        match format {
            Format::Text => {
                let mut line = String::new();
                for (k, v) in &self.fields {
                    if !line.is_empty() {
                        line.push(' ');
                    }
                    let _ = write!(line, "{k}={v}");
                }
                println!("{line}");
            }
            Format::JsonLines => {
                let map: serde_json_map::Map = self.fields.iter().cloned().collect();
                println!("{}", map.render());
            }
        }
    }
}

/// Minimal ordered string-map JSON rendering (field order preserved).
mod serde_json_map {
    pub struct Map(Vec<(String, String)>);

    impl FromIterator<(String, String)> for Map {
        fn from_iter<T: IntoIterator<Item = (String, String)>>(iter: T) -> Self {
            Map(iter.into_iter().collect())
        }
    }

    impl Map {
        pub fn render(&self) -> String {
            let mut out = String::from("{");
            for (i, (k, v)) in self.0.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&format!("{}:{}", escape(k), escape(v)));
            }
            out.push('}');
            out
        }
    }

    fn escape(s: &str) -> String {
        let mut out = String::from("\"");
        for c in s.chars() {
            match c {
                '"' => out.push_str("\\\""),
                '\\' => out.push_str("\\\\"),
                '\n' => out.push_str("\\n"),
                c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
                c => out.push(c),
            }
        }
        out.push('"');
        out
    }
}

fn gens_string(g: &GroupHandle) -> String {
    g.gens()
        .iter()
        .map(Perm::cycle_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn sub_summary(s: &Subgroup) -> String {
    format!(
        "order {} gens {}",
        s.order(),
        s.gen_perms()
            .iter()
            .map(Perm::cycle_string)
            .collect::<Vec<_>>()
            .join(" ")
    )
}

fn run_involvement(opts: CommonOpts, pprime: bool) -> Result<bool, CliError> {
    let caps = caps_of(&opts);
    let p = need_p(&opts)?;
    let g = load_group(&opts, &caps)?;
    let witness = if pprime {
        pprime_involves_qd(&g, p, &caps)
    } else {
        involves_qd(&g, p, &caps)
    }
    .map_err(CliError::Engine)?;
    let mut rec = Record::new();
    rec.push("p", p).push("order", g.order());
    match witness {
        Some(w) => {
            rec.push("involves", true)
                .push("h_order", w.h.order())
                .push("k_order", w.k.order())
                .push("k_pprime", w.pprime);
        }
        None => {
            rec.push("involves", false);
        }
    }
    rec.print(opts.format);
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Construct(opts) => {
            let caps = caps_of(&opts);
            let g = load_group(&opts, &caps)?;
            let mut rec = Record::new();
            rec.push("order", g.order())
                .push("degree", g.degree())
                .push("abelian", g.is_abelian())
                .push("exponent", g.exponent())
                .push("generators", gens_string(&g));
            rec.print(opts.format);
            Ok(true)
        }
        Command::Rank(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let rank = p_rank(&g, p, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p).push("order", g.order()).push("rank", rank);
            rec.print(opts.format);
            Ok(true)
        }
        Command::Thompson(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let s = sylow_subgroup(&g, p).map_err(CliError::Engine)?;
            let td = thompson(&s, p, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p)
                .push("sylow_order", td.s.order())
                .push("j_order", td.j.order())
                .push("je_order", td.je.order())
                .push("zj_order", td.zj.order())
                .push("zje_order", td.zje.order())
                .push("omega_zs_order", td.omega_zs.order())
                .push("omega_zje_order", td.omega_zje.order())
                .push("max_abelian_order", td.max_abelian_order)
                .push("max_elem_abelian_order", td.max_elem_abelian_order);
            rec.print(opts.format);
            Ok(true)
        }
        Command::Involves(opts) => run_involvement(opts, false),
        Command::PprimeInvolves(opts) => run_involvement(opts, true),
        Command::FusionControl(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let s = sylow_subgroup(&g, p).map_err(CliError::Engine)?;
            let td = thompson(&s, p, &caps).map_err(CliError::Engine)?;
            let n = g.normalizer(&td.zj).map_err(CliError::Engine)?;
            let verdict = controls_fusion(&g, &s, &n, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p)
                .push("sylow_order", s.order())
                .push("h", "N_G(Z(J(S)))")
                .push("h_order", n.order())
                .push("controls", verdict.controls);
            if let Some((pc, gc)) = verdict.counterexample {
                rec.push("counterexample_p", sub_summary(&pc))
                    .push("counterexample_g", g.perm(gc).cycle_string());
            }
            rec.print(opts.format);
            Ok(true)
        }
        Command::Sandwich(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let wits = sandwich_witnesses(&g, p, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p).push("witnesses", wits.len());
            for (i, w) in wits.iter().enumerate() {
                rec.push(&format!("w{i}_order"), w.w.order())
                    .push(&format!("w{i}_normalizer_order"), w.normalizer.order());
            }
            rec.print(opts.format);
            Ok(true)
        }
        Command::PStable(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let verdict = is_p_stable(&g, p, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p).push("stable", verdict.stable);
            if let Some((ps, gv)) = verdict.violation {
                rec.push("violation_p", sub_summary(&ps))
                    .push("violation_g", g.perm(gv).cycle_string());
            }
            rec.print(opts.format);
            Ok(true)
        }
        Command::CharPipeline(opts) => {
            let caps = caps_of(&opts);
            let p = need_p(&opts)?;
            let g = load_group(&opts, &caps)?;
            let data = character_pipeline(&g, p, &caps).map_err(CliError::Engine)?;
            let mut rec = Record::new();
            rec.push("p", p)
                .push("w_order", data.witness.w.order())
                .push("n_order", data.n.order())
                .push(
                    "v_degree",
                    data.v.degree_rational().map_err(CliError::Engine)?,
                )
                .push("p_effective", data.p_effective)
                .push("respects_fusion", data.respects);
            if let Some(h) = data.hypothesis_qd_free {
                rec.push("qd_free", h);
            }
            rec.print(opts.format);
            Ok(true)
        }
        Command::VerifyPaper { opts, scope, report } => {
            let caps = caps_of(&opts);
            let scope = Scope::parse(&scope);
            let mut progress = |rec: &qdp_core::report::CheckRecord| {
                let _ = writeln!(
                    std::io::stderr(),
                    "[{:>7}] {}/{} ({} ms)",
                    rec.verdict.to_string(),
                    rec.section,
                    rec.id,
                    rec.elapsed.as_millis()
                );
            };
            let rep: Report = verify_paper(&scope, &caps, Some(&mut progress));
            let rendered = match opts.format {
                Format::Text => rep.render_text(),
                Format::JsonLines => rep.render_json_lines(),
            };
            print!("{rendered}");
            if let Some(path) = report {
                std::fs::write(&path, &rendered)
                    .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(!rep.has_fail())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Engine(e)) => {
            eprintln!("error: {e}");
            if matches!(e, qdp_core::Error::Parse { .. }) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
