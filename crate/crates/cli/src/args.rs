use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug, Clone, PartialEq, Eq)]
#[command(
    name = "zsig",
    version,
    about = "Primitive divisors of polynomial power and Lucas sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Print sequence terms.
    Seq(SeqArgs),
    /// Factor a polynomial over a finite field.
    Factor(FactorArgs),
    /// Print the homogeneous cyclotomic factor Phi_n.
    Phi(PhiArgs),
    /// Primitive part and primitive divisors of one term.
    Primitive(PrimitiveArgs),
    /// Check one statement over a range of indices.
    Verify(VerifyArgs),
    /// Primitive-part records for every index up to --max-n.
    Survey(SurveyArgs),
    /// Randomized search in characteristic 2.
    #[command(name = "char2-search")]
    Char2Search(Char2Args),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Text,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    AllEarlier,
    DivisorsOnly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Zsigmondy,
    Bang,
    Lucas,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct Common {
    /// Coefficient field: fp:<p> | q | q-sqrt:<d> | fp2:<p>:<s>:<t> | q-ext:<s>:<t>
    /// [default: q, fp:2 for char2-search]
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, env = "ZSIG_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Report ms = 0 so that output is byte-for-byte reproducible.
    #[arg(long)]
    pub no_timing: bool,
}

/// Sequence selection. Without --kind: --P means lucas, --g means
/// zsigmondy, --f alone means bang.
#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct SeqInput {
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: Option<String>,
    #[arg(long = "g", allow_hyphen_values = true)]
    pub g: Option<String>,
    #[arg(long = "P", allow_hyphen_values = true)]
    pub p: Option<String>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct SeqArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub input: SeqInput,
    #[arg(long, conflicts_with = "max_n")]
    pub n: Option<u64>,
    #[arg(long)]
    pub max_n: Option<u64>,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct FactorArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "f", allow_hyphen_values = true)]
    pub f: String,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct PhiArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub input: SeqInput,
    #[arg(long)]
    pub n: u64,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct PrimitiveArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub input: SeqInput,
    #[arg(long)]
    pub n: u64,
    #[arg(long, value_enum, default_value_t = Mode::AllEarlier)]
    pub mode: Mode,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub input: SeqInput,
    #[arg(long)]
    pub statement: String,
    #[arg(long, default_value_t = 20)]
    pub max_n: u64,
    /// Base index for lemma-1.1, lemma-2.5 with --pi, and eq-1.
    #[arg(long)]
    pub n: Option<u64>,
    /// Irreducible divisor for the valuation statements.
    #[arg(long, allow_hyphen_values = true)]
    pub pi: Option<String>,
    /// Sample count for char2-remark.
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    /// Degree bound for char2-remark samples.
    #[arg(long, default_value_t = 3)]
    pub max_deg: usize,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct SurveyArgs {
    #[command(flatten)]
    pub common: Common,
    #[command(flatten)]
    pub input: SeqInput,
    #[arg(long)]
    pub max_n: u64,
    #[arg(long, value_enum, default_value_t = Mode::AllEarlier)]
    pub mode: Mode,
}

#[derive(Args, Debug, Clone, PartialEq, Eq)]
pub struct Char2Args {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 3)]
    pub max_deg: usize,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 25)]
    pub max_n: u64,
}

fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn push(argv: &mut Vec<String>, flag: &str, value: impl ToString) {
    argv.push(flag.to_string());
    argv.push(value.to_string());
}

fn push_opt(argv: &mut Vec<String>, flag: &str, value: &Option<impl ToString>) {
    if let Some(v) = value {
        push(argv, flag, v.to_string());
    }
}

impl Common {
    pub fn field_or<'a>(&'a self, default: &'a str) -> &'a str {
        self.field.as_deref().unwrap_or(default)
    }

    fn to_argv(&self, argv: &mut Vec<String>, default_field: &str) {
        push(argv, "--field", self.field_or(default_field));
        push(argv, "--seed", self.seed);
        push(argv, "--format", value_name(&self.format));
        if let Some(out) = &self.out {
            push(argv, "--out", out.display());
        }
        if self.no_timing {
            argv.push("--no-timing".into());
        }
    }
}

impl SeqInput {
    fn to_argv(&self, argv: &mut Vec<String>) {
        if let Some(kind) = &self.kind {
            push(argv, "--kind", value_name(kind));
        }
        push_opt(argv, "--f", &self.f);
        push_opt(argv, "--g", &self.g);
        push_opt(argv, "--P", &self.p);
    }
}

impl Cli {
    /// Canonical argument vector: subcommand, then every flag in a fixed
    /// order with defaults spelled out.
    pub fn to_argv(&self) -> Vec<String> {
        let mut argv = vec!["zsig".to_string()];
        let default_field = self.default_field();
        match &self.command {
            Command::Seq(a) => {
                argv.push("seq".into());
                a.common.to_argv(&mut argv, default_field);
                a.input.to_argv(&mut argv);
                push_opt(&mut argv, "--n", &a.n);
                push_opt(&mut argv, "--max-n", &a.max_n);
            }
            Command::Factor(a) => {
                argv.push("factor".into());
                a.common.to_argv(&mut argv, default_field);
                push(&mut argv, "--f", &a.f);
            }
            Command::Phi(a) => {
                argv.push("phi".into());
                a.common.to_argv(&mut argv, default_field);
                a.input.to_argv(&mut argv);
                push(&mut argv, "--n", a.n);
            }
            Command::Primitive(a) => {
                argv.push("primitive".into());
                a.common.to_argv(&mut argv, default_field);
                a.input.to_argv(&mut argv);
                push(&mut argv, "--n", a.n);
                push(&mut argv, "--mode", value_name(&a.mode));
            }
            Command::Verify(a) => {
                argv.push("verify".into());
                a.common.to_argv(&mut argv, default_field);
                a.input.to_argv(&mut argv);
                push(&mut argv, "--statement", &a.statement);
                push(&mut argv, "--max-n", a.max_n);
                push_opt(&mut argv, "--n", &a.n);
                push_opt(&mut argv, "--pi", &a.pi);
                push(&mut argv, "--count", a.count);
                push(&mut argv, "--max-deg", a.max_deg);
            }
            Command::Survey(a) => {
                argv.push("survey".into());
                a.common.to_argv(&mut argv, default_field);
                a.input.to_argv(&mut argv);
                push(&mut argv, "--max-n", a.max_n);
                push(&mut argv, "--mode", value_name(&a.mode));
            }
            Command::Char2Search(a) => {
                argv.push("char2-search".into());
                a.common.to_argv(&mut argv, default_field);
                push(&mut argv, "--max-deg", a.max_deg);
                push(&mut argv, "--count", a.count);
                push(&mut argv, "--max-n", a.max_n);
            }
        }
        argv
    }

    pub fn default_field(&self) -> &'static str {
        match self.command {
            Command::Char2Search(_) => "fp:2",
            _ => "q",
        }
    }

    /// The `--field` value with the per-command default applied.
    pub fn field(&self) -> &str {
        self.common().field_or(self.default_field())
    }

    pub fn common(&self) -> &Common {
        match &self.command {
            Command::Seq(a) => &a.common,
            Command::Factor(a) => &a.common,
            Command::Phi(a) => &a.common,
            Command::Primitive(a) => &a.common,
            Command::Verify(a) => &a.common,
            Command::Survey(a) => &a.common,
            Command::Char2Search(a) => &a.common,
        }
    }
}
