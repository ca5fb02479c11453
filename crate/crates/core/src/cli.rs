//! Command-line front end. Every command returns a JSON value, a table
//! rendering and a verdict; [`run_with`] turns those into output and an exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{detecting_subalgebra, gl_superalgebra};
use crate::atypicality::{atypicality, defect, theoretical_support};
use crate::clifford::{classify_block, divisibility_check, form_from_weight, OddFormData};
use crate::cohomology::{build_complex, ext_dims, kac_ext_dims, vanishing_bound, ExtTable};
use crate::error::{Error, Result};
use crate::linalg::{parse_scalar, scalar_string, RationalMatrix};
use crate::modules::{dump, kac_module_with, simple_module_from, verify_rep, L0Options, SuperModuleRep};
use crate::roots::{dim_l0, is_dominant_integral, Weight};
use crate::support::{compare_to_theorem_with, empirical_support};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
/// Any other library error.
pub const EXIT_FAILURE: i32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Table,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    pub samples_per_subset: usize,
    pub p_max: usize,
    pub dimension_budget: usize,
    pub output: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: crate::support::DEFAULT_SEED,
            samples_per_subset: crate::support::DEFAULT_SAMPLES,
            p_max: crate::cohomology::DEFAULT_P_MAX,
            dimension_budget: crate::modules::DEFAULT_BUDGET,
            output: OutputFormat::Json,
        }
    }
}

fn parse_u64(text: &str) -> Result<u64> {
    let t = text.trim();
    let parsed = match t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => t.parse(),
    };
    parsed.map_err(|_| Error::Parse(format!("expected an integer, got {t:?}")))
}

fn parse_positive(key: &str, text: &str) -> Result<usize> {
    match parse_u64(text)? {
        0 => Err(Error::Parse(format!("{key} must be positive"))),
        v => Ok(v as usize),
    }
}

impl RunConfig {
    /// Applies `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_config_text(&mut self, text: &str) -> Result<()> {
        for (number, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("config line {}: expected key = value", number + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "seed" => self.seed = parse_u64(value)?,
                "samples_per_subset" => self.samples_per_subset = parse_positive(key, value)?,
                "p_max" => self.p_max = parse_positive(key, value)?,
                "dimension_budget" => self.dimension_budget = parse_positive(key, value)?,
                "output" => {
                    self.output = OutputFormat::from_str(value, true)
                        .map_err(|_| Error::Parse(format!("unknown output format {value:?}")))?
                }
                other => return Err(Error::Parse(format!("unknown config key {other:?}"))),
            }
        }
        Ok(())
    }

    pub fn load(path: Option<&Path>, env_seed: Option<&str>) -> Result<Self> {
        let mut config = RunConfig::default();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            config.apply_config_text(&text)?;
        }
        if let Some(seed) = env_seed {
            config.seed = parse_u64(seed)?;
        }
        Ok(config)
    }

    fn l0_options(&self) -> L0Options {
        L0Options {
            budget: self.dimension_budget,
            ..L0Options::default()
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "supvar", version, about = "Exact computations for gl(m|n) supermodules")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub output: Option<OutputFormat>,
    /// Config file with key = value lines.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportMode {
    Empirical,
    Theoretical,
    Compare,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Defect and atypicality of a weight.
    Atyp { m: usize, n: usize, weight: String },
    /// Support variety of L(λ) over the detecting subalgebra.
    Support {
        m: usize,
        n: usize,
        weight: String,
        #[arg(long, conflicts_with_all = ["theoretical", "compare"])]
        empirical: bool,
        #[arg(long, conflicts_with = "compare")]
        theoretical: bool,
        /// Exit with status 1 if the empirical support differs from the closed form.
        #[arg(long)]
        compare: bool,
    },
    /// Relative cohomology H^p(g, g₀; M).
    Cohom {
        m: usize,
        n: usize,
        /// `trivial`, `kac:<weight>` or `simple:<weight>`.
        #[arg(long, default_value = "trivial")]
        module: String,
        #[arg(long)]
        pmax: Option<usize>,
    },
    /// Ext^p(M, N) through the relative complex.
    Ext {
        m: usize,
        n: usize,
        left: String,
        right: String,
        #[arg(long)]
        pmax: Option<usize>,
    },
    /// Ext^p(K(λ), M) through the g₁ reduction.
    Kacext {
        m: usize,
        n: usize,
        weight: String,
        #[arg(long, default_value = "trivial")]
        coeff: String,
        #[arg(long)]
        pmax: Option<usize>,
    },
    /// Classify a Clifford block, from a Gram matrix or from the character of a weight.
    Clifford {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, conflicts_with_all = ["m", "n", "weight"])]
        gram: Option<String>,
        m: Option<usize>,
        n: Option<usize>,
        weight: Option<String>,
    },
    /// Dimension and superdimension laws for K(λ) and L(λ).
    Divcheck { m: usize, n: usize, weight: String },
    /// Basis, weights and action matrices of a module.
    Dump {
        m: usize,
        n: usize,
        #[arg(default_value = "trivial")]
        module: String,
    },
}

/// Result of one command before rendering.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub json: Value,
    pub table: String,
    /// `false` when a regression gate failed.
    pub ok: bool,
}

impl Report {
    fn new(json: Value, table: String) -> Self {
        Report { json, table, ok: true }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values serialize");
                s.push('\n');
                s
            }
            OutputFormat::Table => self.table.clone(),
        }
    }
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Parse(_) | Error::NotDominant(_) | Error::ShapeMismatch(..) => EXIT_PARSE,
        Error::ConstructionOverflow { .. } | Error::TooLarge(_) => EXIT_BUDGET,
        _ => EXIT_FAILURE,
    }
}

fn parse_weight(m: usize, n: usize, text: &str) -> Result<Weight> {
    if m == 0 || n == 0 {
        return Err(Error::Parse("m and n must be positive".into()));
    }
    Weight::parse_for(m, n, text)
}

fn dominant_weight(m: usize, n: usize, text: &str) -> Result<Weight> {
    let lambda = parse_weight(m, n, text)?;
    if !is_dominant_integral(&lambda) {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    Ok(lambda)
}

/// A coefficient module named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSpec {
    Trivial,
    Kac(Weight),
    Simple(Weight),
}

impl ModuleSpec {
    pub fn parse(m: usize, n: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "trivial" {
            if m == 0 || n == 0 {
                return Err(Error::Parse("m and n must be positive".into()));
            }
            return Ok(ModuleSpec::Trivial);
        }
        match text.split_once(':') {
            Some(("kac", w)) => Ok(ModuleSpec::Kac(dominant_weight(m, n, w)?)),
            Some(("simple", w)) => Ok(ModuleSpec::Simple(dominant_weight(m, n, w)?)),
            _ => Err(Error::Parse(format!(
                "module {text:?}: expected trivial, kac:<weight> or simple:<weight>"
            ))),
        }
    }

    /// Checks the dimension of the Kac module against the budget.
    fn check_budget(&self, config: &RunConfig) -> Result<()> {
        if let ModuleSpec::Kac(lambda) | ModuleSpec::Simple(lambda) = self {
            let (m, n) = lambda.shape();
            let needed = dim_l0(lambda)?.saturating_mul(1usize.checked_shl((m * n) as u32).unwrap_or(usize::MAX));
            if needed > config.dimension_budget {
                return Err(Error::ConstructionOverflow {
                    needed,
                    budget: config.dimension_budget,
                });
            }
        }
        Ok(())
    }

    pub fn build(&self, m: usize, n: usize, config: &RunConfig) -> Result<SuperModuleRep> {
        self.check_budget(config)?;
        match self {
            ModuleSpec::Trivial => Ok(SuperModuleRep::trivial(gl_superalgebra(m, n))),
            ModuleSpec::Kac(lambda) => Ok(kac_module_with(lambda, config.l0_options())?.rep),
            ModuleSpec::Simple(lambda) => Ok(simple_module_from(&kac_module_with(lambda, config.l0_options())?)?.rep),
        }
    }
}

fn list(values: &[usize]) -> String {
    format!("[{}]", values.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn subsets_text(subsets: &[Vec<usize>]) -> String {
    if subsets.is_empty() {
        return "(none)".into();
    }
    subsets
        .iter()
        .map(|s| format!("{{{}}}", s.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn subsets_of(value: &Value) -> Vec<Vec<usize>> {
    serde_json::from_value(value["subsets"].clone()).unwrap_or_default()
}

pub fn cmd_atyp(m: usize, n: usize, weight: &str) -> Result<Report> {
    let lambda = parse_weight(m, n, weight)?;
    let cert = atypicality(&lambda);
    let roots: Vec<String> = cert.witness.iter().map(|r| format!("e{}-e{}", r.i() + 1, r.j() + 1)).collect();
    let json = json!({
        "algebra": format!("gl({m}|{n})"),
        "weight": lambda.to_string(),
        "defect": defect(m, n),
        "atyp": cert.value,
        "certificate": roots,
    });
    let table = format!(
        "weight     {lambda}\ndefect     {}\natyp       {}\nwitness    {}\n",
        defect(m, n),
        cert.value,
        if roots.is_empty() { "(none)".into() } else { roots.join(" ") }
    );
    Ok(Report::new(json, table))
}

pub fn cmd_support(m: usize, n: usize, weight: &str, mode: SupportMode, config: &RunConfig) -> Result<Report> {
    let lambda = dominant_weight(m, n, weight)?;
    const NOTE: &str = "coordinate-subspace resolution only";
    match mode {
        SupportMode::Theoretical => {
            let t = theoretical_support(&lambda)?;
            let mut json = serde_json::to_value(&t.support).expect("serializable");
            json["note"] = json!(NOTE);
            let table = format!(
                "theoretical support of L({lambda})\nr          {}\ndim        {}\nsubsets    {}\n",
                t.support.r,
                t.support.dim,
                subsets_text(&subsets_of(&json))
            );
            Ok(Report::new(json, table))
        }
        SupportMode::Empirical => {
            let spec = ModuleSpec::Simple(lambda.clone());
            let module = spec.build(m, n, config)?;
            let e = empirical_support(&module, config.samples_per_subset, config.seed)?;
            let mut json = serde_json::to_value(&e.support).expect("serializable");
            json["note"] = json!(NOTE);
            let table = format!(
                "empirical support of L({lambda})\nr          {}\ndim        {}\nsubsets    {}\npoints     {}\n",
                e.support.r,
                e.support.dim,
                subsets_text(&subsets_of(&json)),
                e.points.len()
            );
            Ok(Report::new(json, table))
        }
        SupportMode::Compare => {
            ModuleSpec::Simple(lambda.clone()).check_budget(config)?;
            let c = compare_to_theorem_with(&lambda, config.samples_per_subset, config.seed)?;
            let mut json = serde_json::to_value(&c).expect("serializable");
            json["note"] = json!(NOTE);
            let table = format!(
                "L({lambda})\ntheoretical {}\nempirical   {}\nverdict     {}\n",
                subsets_text(&subsets_of(&json["theoretical"])),
                subsets_text(&subsets_of(&json["empirical"])),
                if c.matches { "match" } else { "MISMATCH" }
            );
            Ok(Report {
                ok: c.matches,
                ..Report::new(json, table)
            })
        }
    }
}

pub fn cmd_cohom(m: usize, n: usize, module: &str, p_max: usize, config: &RunConfig) -> Result<Report> {
    let spec = ModuleSpec::parse(m, n, module)?;
    let rep = spec.build(m, n, config)?;
    let complex = build_complex(rep.algebra(), &rep, p_max)?;
    let dims = complex.cohomology_dims()?;
    let json = json!({
        "algebra": format!("gl({m}|{n})"),
        "module": module,
        "p_max": p_max,
        "cochain_dims": complex.cochain_dims(),
        "dims": dims,
    });
    let table = format!(
        "H^p(gl({m}|{n}), gl({m}|{n})_0; {module})\np          {}\ncochains   {}\ndims       {}\n",
        list(&(0..=p_max).collect::<Vec<_>>()),
        list(&complex.cochain_dims()),
        list(&dims)
    );
    Ok(Report::new(json, table))
}

fn ext_report(label: String, table: &ExtTable, extra: Value) -> Report {
    let mut json = json!({ "ext": label, "dims": table.dims, "route": table.route });
    if let (Value::Object(map), Value::Object(more)) = (&mut json, extra) {
        map.extend(more);
    }
    let route = serde_json::to_value(table.route).expect("serializable");
    let text = format!(
        "{label}\nroute      {}\ndims       {}\n",
        route.as_str().unwrap_or_default(),
        list(&table.dims)
    );
    Report::new(json, text)
}

pub fn cmd_ext(m: usize, n: usize, left: &str, right: &str, p_max: usize, config: &RunConfig) -> Result<Report> {
    let (l, r) = (ModuleSpec::parse(m, n, left)?, ModuleSpec::parse(m, n, right)?);
    let (l, r) = (l.build(m, n, config)?, r.build(m, n, config)?);
    let table = ext_dims(&l, &r, p_max)?;
    Ok(ext_report(format!("Ext({left}, {right})"), &table, json!({})))
}

pub fn cmd_kacext(m: usize, n: usize, weight: &str, coeff: &str, p_max: usize, config: &RunConfig) -> Result<Report> {
    let lambda = dominant_weight(m, n, weight)?;
    let spec = ModuleSpec::parse(m, n, coeff)?;
    let module = spec.build(m, n, config)?;
    let table = kac_ext_dims(&lambda, &module, p_max)?;
    let bound = vanishing_bound(&lambda, &module)?;
    Ok(ext_report(
        format!("Ext(K({lambda}), {coeff})"),
        &table,
        json!({ "vanishing_bound": bound }),
    ))
}

pub fn parse_gram(text: &str) -> Result<RationalMatrix> {
    let rows: Vec<Vec<_>> = text
        .split(';')
        .map(|row| row.split(',').map(|e| parse_scalar(e.trim())).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let k = rows.len();
    if rows.iter().any(|r| r.len() != k) {
        return Err(Error::Parse(format!("Gram matrix {text:?} is not square")));
    }
    Ok(RationalMatrix::from_rows(k, rows))
}

pub fn cmd_clifford(form: &OddFormData) -> Report {
    let c = classify_block(form);
    let induced = 1u64 << form.dim_c1;
    let verdicts = json!({
        "simple_dim_is_power": c.simple_dim == 1 << form.n_tilde,
        "type_matches_parity": (c.simple_type == crate::clifford::SimpleType::M) == form.n.is_multiple_of(2),
        "projective_divides_induced": induced.is_multiple_of(c.projective_dim),
        "simple_divides_induced": induced.is_multiple_of(c.simple_dim),
    });
    let ok = verdicts.as_object().expect("object").values().all(|v| v == &json!(true));
    let gram: Vec<Vec<String>> = form.gram.rows_iter().map(|r| r.iter().map(scalar_string).collect()).collect();
    let json = json!({
        "dim_c1": form.dim_c1,
        "gram": gram,
        "z": form.z,
        "n": form.n,
        "n_tilde": form.n_tilde,
        "simple_dim": c.simple_dim,
        "type": c.simple_type,
        "projective_dim": c.projective_dim,
        "superdim_zero": c.superdim_zero,
        "verdicts": verdicts,
    });
    let table = format!(
        "dim c1     {}\nz          {}\nn          {}\nn_tilde    {}\nsimple     dim {} type {:?}\nprojective dim {}\n",
        form.dim_c1, form.z, form.n, form.n_tilde, c.simple_dim, c.simple_type, c.projective_dim
    );
    Report { json, table, ok }
}

pub fn cmd_divcheck(m: usize, n: usize, weight: &str, config: &RunConfig) -> Result<Report> {
    let lambda = dominant_weight(m, n, weight)?;
    let r = defect(m, n);
    let a = atypicality(&lambda).value;
    ModuleSpec::Kac(lambda.clone()).check_budget(config)?;
    let kac = kac_module_with(&lambda, config.l0_options())?;
    let simple = simple_module_from(&kac)?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    let mut ok = true;
    for (name, module) in [("kac", &kac.rep), ("simple", &simple.rep)] {
        let support = empirical_support(module, config.samples_per_subset, config.seed)?;
        let report = divisibility_check(module.dim(), module.superdimension(), support.dim(), r)?;
        let rep_ok = verify_rep(module).ok;
        ok &= report.pass && rep_ok;
        rows.push(format!(
            "{name:<7} dim {:>5}  sdim {:>4}  support {}  d {}  2^⌊d/2⌋ {:>3}  {}",
            report.dim,
            report.superdimension,
            report.support_dim,
            report.codimension,
            report.divisor,
            if report.pass { "pass" } else { "FAIL" }
        ));
        json_rows.push(json!({ "module": name, "verify_rep": rep_ok, "report": report }));
    }
    let theory = divisibility_check(simple.dim(), simple.rep.superdimension(), a, r)?;
    ok &= theory.pass;
    let json = json!({
        "weight": lambda.to_string(),
        "defect": r,
        "atyp": a,
        "modules": json_rows,
        "simple_by_atypicality": theory,
        "pass": ok,
    });
    let table = format!(
        "weight {lambda}  defect {r}  atyp {a}\n{}\nverdict {}\n",
        rows.join("\n"),
        if ok { "pass" } else { "FAIL" }
    );
    Ok(Report { json, table, ok })
}

pub fn cmd_dump(m: usize, n: usize, module: &str, config: &RunConfig) -> Result<Report> {
    let spec = ModuleSpec::parse(m, n, module)?;
    let rep = spec.build(m, n, config)?;
    let d = dump(&rep);
    let mut table = format!("{} module {module}: dim {}, sdim {}\n", d.algebra, d.dim, d.superdimension);
    for (i, b) in d.basis.iter().enumerate() {
        let _ = writeln!(table, "{i:>4}  {:<16} {:?}  {}", b.label, b.parity, b.weight);
    }
    Ok(Report::new(serde_json::to_value(&d).expect("serializable"), table))
}

/// Executes a parsed command line.
pub fn execute(cli: &Cli, config: &RunConfig) -> Result<Report> {
    let p = |pmax: Option<usize>| pmax.unwrap_or(config.p_max);
    match &cli.command {
        Command::Atyp { m, n, weight } => cmd_atyp(*m, *n, weight),
        Command::Support {
            m,
            n,
            weight,
            theoretical,
            compare,
            ..
        } => {
            let mode = if *compare {
                SupportMode::Compare
            } else if *theoretical {
                SupportMode::Theoretical
            } else {
                SupportMode::Empirical
            };
            cmd_support(*m, *n, weight, mode, config)
        }
        Command::Cohom { m, n, module, pmax } => cmd_cohom(*m, *n, module, p(*pmax), config),
        Command::Ext {
            m,
            n,
            left,
            right,
            pmax,
        } => cmd_ext(*m, *n, left, right, p(*pmax), config),
        Command::Kacext {
            m,
            n,
            weight,
            coeff,
            pmax,
        } => cmd_kacext(*m, *n, weight, coeff, p(*pmax), config),
        Command::Clifford { gram, m, n, weight } => {
            let form = match (gram, m, n, weight) {
                (Some(g), _, _, _) => OddFormData::from_gram(parse_gram(g)?)?,
                (None, Some(m), Some(n), Some(w)) => {
                    let lambda = parse_weight(*m, *n, w)?;
                    let e = detecting_subalgebra(*m, *n);
                    form_from_weight(&gl_superalgebra(*m, *n), e.odd_basis(), &lambda)?
                }
                _ => return Err(Error::Parse("clifford needs --gram or M N WEIGHT".into())),
            };
            Ok(cmd_clifford(&form))
        }
        Command::Divcheck { m, n, weight } => cmd_divcheck(*m, *n, weight, config),
        Command::Dump { m, n, module } => cmd_dump(*m, *n, module, config),
    }
}

/// Output text and exit code for the given arguments and seed override.
pub fn run_with<I, T>(args: I, env_seed: Option<&str>) -> (String, String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            return (String::new(), e.to_string(), code);
        }
    };
    let mut config = match RunConfig::load(cli.config.as_deref(), env_seed) {
        Ok(c) => c,
        Err(e) => return (String::new(), format!("error: {e}\n"), exit_code(&e)),
    };
    if let Some(format) = cli.output {
        config.output = format;
    }
    match execute(&cli, &config) {
        Ok(report) => {
            let code = if report.ok { EXIT_OK } else { EXIT_VERDICT };
            (report.render(config.output), String::new(), code)
        }
        Err(e) => (String::new(), format!("error: {e}\n"), exit_code(&e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (Value, i32) {
        let mut full = vec!["supvar"];
        full.extend_from_slice(args);
        let (out, err, code) = run_with(full, None);
        let value = if out.is_empty() { Value::Null } else { serde_json::from_str(&out).unwrap() };
        assert!(code == EXIT_OK || !err.is_empty() || code == EXIT_VERDICT, "{err}");
        (value, code)
    }

    #[test]
    fn atyp_examples() {
        let (v, code) = run(&["atyp", "2", "2", "0,0|0,0"]);
        assert_eq!((v["defect"].as_u64(), v["atyp"].as_u64(), code), (Some(2), Some(2), 0));
        let (v, _) = run(&["atyp", "1", "1", "1|0"]);
        assert_eq!(v["atyp"], 0);
        let (v, _) = run(&["atyp", "2", "1", "0,0|0"]);
        assert_eq!((v["defect"].as_u64(), v["atyp"].as_u64()), (Some(1), Some(1)));
        assert_eq!(run(&["atyp", "1", "1", "1,x|0"]).1, EXIT_PARSE);
    }

    #[test]
    fn support_examples() {
        let (v, code) = run(&["support", "1", "1", "0|0", "--compare"]);
        assert_eq!((v["matches"].as_bool(), code), (Some(true), 0));
        let (v, _) = run(&["support", "1", "1", "1|0", "--theoretical"]);
        assert_eq!(v["subsets"], json!([]));
        assert_eq!(v["dim"], 0);
        let (v, _) = run(&["support", "2", "2", "0,0|0,0", "--empirical"]);
        assert_eq!(v["dim"], 2);
        assert_eq!(v["subsets"], json!([[1], [2], [1, 2]]));
    }

    #[test]
    fn cohomology_examples() {
        let (v, _) = run(&["cohom", "1", "1", "--pmax", "4"]);
        assert_eq!(v["dims"], json!([1, 0, 1, 0, 1]));
        let (v, _) = run(&["kacext", "1", "1", "0|0", "--coeff", "trivial", "--pmax", "4"]);
        assert_eq!(v["dims"], json!([1, 0, 0, 0, 0]));
        let (v, _) = run(&["ext", "1", "1", "kac:0|0", "trivial", "--pmax", "2"]);
        assert_eq!(v["dims"], json!([1, 0, 0]));
    }

    #[test]
    fn clifford_and_divcheck() {
        let (v, code) = run(&["clifford", "--gram", "2"]);
        assert_eq!((v["type"].as_str(), v["projective_dim"].as_u64(), code), (Some("Q"), Some(2), 0));
        let (v, _) = run(&["clifford", "1", "1", "1|0"]);
        assert_eq!(v["n"], 1);
        let (v, code) = run(&["divcheck", "1", "1", "1|0"]);
        assert_eq!((v["pass"].as_bool(), code), (Some(true), 0));
    }

    #[test]
    fn budget_and_parse_errors() {
        let (_, code) = run(&["--config", "/nonexistent", "atyp", "1", "1", "0|0"]);
        assert_eq!(code, EXIT_PARSE);
        let mut config = RunConfig::default();
        config.apply_config_text("dimension_budget = 4\n").unwrap();
        let spec = ModuleSpec::parse(2, 2, "kac:0,0|0,0").unwrap();
        assert!(matches!(spec.build(2, 2, &config), Err(Error::ConstructionOverflow { .. })));
        assert!(matches!(ModuleSpec::parse(1, 1, "kac:0|1/2"), Err(Error::NotDominant(_))));
        assert!(matches!(ModuleSpec::parse(1, 1, "free:0|0"), Err(Error::Parse(_))));
    }

    #[test]
    fn config_parsing() {
        let mut config = RunConfig::default();
        config
            .apply_config_text("# bounds\nseed = 0x10\np_max=3\noutput = table\n")
            .unwrap();
        assert_eq!((config.seed, config.p_max, config.output), (16, 3, OutputFormat::Table));
        assert!(config.apply_config_text("p_max = 0").is_err());
        assert!(config.apply_config_text("colour = red").is_err());
        assert_eq!(RunConfig::load(None, Some("7")).unwrap().seed, 7);
    }
}
