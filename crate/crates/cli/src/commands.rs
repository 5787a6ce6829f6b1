use zsig_core::cyclotomic::{phi_homog, phi_lucas};
use zsig_core::primitive::{primitive_record, survey, StripMode};
use zsig_core::verification::{
    explore_char2, sample_divisor, strong_divisibility_statement, theorem_statement, verify_eq1,
    verify_eq5, verify_lucas_identities, verify_observation1, verify_observation2, verify_ord_lemma,
    verify_strong_divisibility, verify_zsigmondy, Char2Params, Report, STATEMENTS,
};
use zsig_core::{
    factor, parse_poly, Error, Field, FieldDescriptor, Poly, QuadExt, Result, RngState, SequenceKind,
    SequenceSpec,
};

use crate::args::{
    Char2Args, Cli, Command, FactorArgs, Format, Kind, Mode, PhiArgs, PrimitiveArgs, SeqArgs, SeqInput,
    SurveyArgs, VerifyArgs,
};
use crate::output;

/// Rendering options shared by every command.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Ctx {
    pub format: Format,
    pub seed: u64,
    pub timing: bool,
}

/// Rendered command output.
pub(crate) struct Output {
    pub body: String,
    pub counterexample: bool,
}

impl Output {
    fn plain(body: String) -> Self {
        Output { body, counterexample: false }
    }

    fn report(report: &Report, ctx: Ctx) -> Self {
        Output {
            body: output::report(report, ctx),
            counterexample: report.is_counterexample(),
        }
    }
}

trait SpecTask {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output>;
}

trait FieldTask {
    fn run<K: Field>(&self, field: &K) -> Result<Output>;
}

pub(crate) fn execute(cli: &Cli) -> Result<Output> {
    let common = cli.common();
    let ctx = Ctx {
        format: common.format,
        seed: common.seed,
        timing: !common.no_timing,
    };
    let field = FieldDescriptor::parse(cli.field())?;
    match &cli.command {
        Command::Seq(a) => with_spec(&field, &a.input, &SeqTask { args: a, ctx }),
        Command::Factor(a) => with_field(&field, &FactorTask { args: a, ctx }),
        Command::Phi(a) => with_spec(&field, &a.input, &PhiTask { args: a, ctx }),
        Command::Primitive(a) => with_spec(&field, &a.input, &PrimitiveTask { args: a, ctx }),
        Command::Verify(a) if a.statement == "char2-remark" => {
            let params = Char2Params {
                max_deg: a.max_deg,
                count: a.count,
                n_max: a.max_n,
                seed: ctx.seed,
            };
            with_field(&field, &Char2Task { params, ctx })
        }
        Command::Verify(a) => {
            if !STATEMENTS.contains(&a.statement.as_str()) {
                return Err(Error::InvalidArgument(format!(
                    "unknown statement `{}`; known: {}",
                    a.statement,
                    STATEMENTS.join(", ")
                )));
            }
            with_spec(&field, &a.input, &VerifyTask { args: a, ctx })
        }
        Command::Survey(a) => with_spec(&field, &a.input, &SurveyTask { args: a, ctx }),
        Command::Char2Search(a) => {
            let Char2Args { max_deg, count, max_n, .. } = *a;
            let params = Char2Params { max_deg, count, n_max: max_n, seed: ctx.seed };
            with_field(&field, &Char2Task { params, ctx })
        }
    }
}

fn with_field<T: FieldTask>(desc: &FieldDescriptor, task: &T) -> Result<Output> {
    match desc {
        FieldDescriptor::Prime(f) => task.run(f),
        FieldDescriptor::Rationals(f) => task.run(f),
        FieldDescriptor::QuadPrime(f) => task.run(f),
        FieldDescriptor::QuadRational(f) => task.run(f),
    }
}

fn resolve_kind(input: &SeqInput) -> Result<Kind> {
    let kind = match input.kind {
        Some(k) => k,
        None if input.p.is_some() => Kind::Lucas,
        None if input.g.is_some() => Kind::Zsigmondy,
        None if input.f.is_some() => Kind::Bang,
        None => return Err(Error::InvalidArgument("give --f and --g, --f alone, or --P".into())),
    };
    let (f, g, p) = (input.f.is_some(), input.g.is_some(), input.p.is_some());
    let ok = match kind {
        Kind::Zsigmondy => f && g && !p,
        Kind::Bang => f && !g && !p,
        Kind::Lucas => p && !f && !g,
    };
    if !ok {
        let need = match kind {
            Kind::Zsigmondy => "--f and --g",
            Kind::Bang => "--f only",
            Kind::Lucas => "--P only",
        };
        return Err(Error::InvalidArgument(format!("this sequence kind takes {need}")));
    }
    Ok(kind)
}

fn power_spec<K: Field>(field: &K, kind: Kind, input: &SeqInput) -> Result<SequenceSpec<K>> {
    let f = parse_poly(input.f.as_deref().unwrap_or_default(), field)?;
    match kind {
        Kind::Zsigmondy => SequenceSpec::zsigmondy(f, parse_poly(input.g.as_deref().unwrap_or_default(), field)?),
        _ => SequenceSpec::bang(f),
    }
}

fn lucas_spec<K: Field>(ext: &QuadExt<K>, input: &SeqInput) -> Result<SequenceSpec<K>> {
    SequenceSpec::lucas(parse_poly(input.p.as_deref().unwrap_or_default(), ext)?)
}

fn with_spec<T: SpecTask>(desc: &FieldDescriptor, input: &SeqInput, task: &T) -> Result<Output> {
    let kind = resolve_kind(input)?;
    match (desc, kind) {
        (FieldDescriptor::QuadPrime(ext), Kind::Lucas) => task.run(&lucas_spec(ext, input)?),
        (FieldDescriptor::QuadRational(ext), Kind::Lucas) => task.run(&lucas_spec(ext, input)?),
        (_, Kind::Lucas) => Err(Error::InvalidArgument(
            "Lucas sequences need a quadratic extension field such as q-sqrt:2 or fp2:3:0:2".into(),
        )),
        (FieldDescriptor::Prime(f), k) => task.run(&power_spec(f, k, input)?),
        (FieldDescriptor::Rationals(f), k) => task.run(&power_spec(f, k, input)?),
        (FieldDescriptor::QuadPrime(f), k) => task.run(&power_spec(f, k, input)?),
        (FieldDescriptor::QuadRational(f), k) => task.run(&power_spec(f, k, input)?),
    }
}

fn strip_mode(mode: Mode) -> StripMode {
    match mode {
        Mode::AllEarlier => StripMode::AllEarlier,
        Mode::DivisorsOnly => StripMode::DivisorsOnly,
    }
}

struct SeqTask<'a> {
    args: &'a SeqArgs,
    ctx: Ctx,
}

impl SpecTask for SeqTask<'_> {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output> {
        let indices: Vec<u64> = match (self.args.n, self.args.max_n) {
            (Some(n), _) => vec![n],
            (None, Some(max)) => (1..=max).collect(),
            (None, None) => (1..=10).collect(),
        };
        let terms = indices
            .into_iter()
            .map(|n| Ok((n, spec.term(n)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Output::plain(output::terms(&spec.summary(), &terms, self.ctx)))
    }
}

struct FactorTask<'a> {
    args: &'a FactorArgs,
    ctx: Ctx,
}

impl FieldTask for FactorTask<'_> {
    fn run<K: Field>(&self, field: &K) -> Result<Output> {
        let f = parse_poly(&self.args.f, field)?;
        let fac = factor(&f, &mut RngState::new(self.ctx.seed))?;
        Ok(Output::plain(output::factorization(&fac.to_text(field), self.ctx)))
    }
}

struct PhiTask<'a> {
    args: &'a PhiArgs,
    ctx: Ctx,
}

impl SpecTask for PhiTask<'_> {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output> {
        let n = self.args.n;
        let phi = match spec.kind() {
            SequenceKind::Zsigmondy { f, g } => phi_homog(n, f, g)?,
            SequenceKind::Bang { f } => phi_homog(n, f, &Poly::one(spec.field()))?,
            SequenceKind::Lucas { p, p_sigma } => phi_lucas(n, p, p_sigma)?,
        };
        Ok(Output::plain(output::phi(&spec.summary(), n, &phi.to_string(), self.ctx)))
    }
}

struct PrimitiveTask<'a> {
    args: &'a PrimitiveArgs,
    ctx: Ctx,
}

impl SpecTask for PrimitiveTask<'_> {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output> {
        let mut rng = RngState::new(self.ctx.seed);
        let rec = primitive_record(spec, self.args.n, strip_mode(self.args.mode), &mut rng)?;
        Ok(Output::plain(output::records(&[rec], self.ctx)))
    }
}

struct SurveyTask<'a> {
    args: &'a SurveyArgs,
    ctx: Ctx,
}

impl SpecTask for SurveyTask<'_> {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output> {
        let recs = survey(spec, self.args.max_n, strip_mode(self.args.mode), self.ctx.seed)?;
        Ok(Output::plain(output::records(&recs, self.ctx)))
    }
}

struct Char2Task {
    params: Char2Params,
    ctx: Ctx,
}

impl FieldTask for Char2Task {
    fn run<K: Field>(&self, field: &K) -> Result<Output> {
        Ok(Output::report(&explore_char2(field, self.params)?, self.ctx))
    }
}

struct VerifyTask<'a> {
    args: &'a VerifyArgs,
    ctx: Ctx,
}

fn require_statement(asked: &str, applicable: &str, kind: &str) -> Result<()> {
    if asked == applicable {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "{asked} does not apply to {kind} sequences; use {applicable}"
        )))
    }
}

impl VerifyTask<'_> {
    /// `--pi` if given; otherwise a random irreducible factor of the base
    /// term over a finite field.
    fn divisor<K: Field>(&self, spec: &SequenceSpec<K>, n: u64, sample: bool) -> Result<Poly<K>> {
        if let Some(text) = &self.args.pi {
            return parse_poly(text, spec.field());
        }
        if !sample {
            return Err(Error::InvalidArgument(format!("{} needs --pi", self.args.statement)));
        }
        if spec.field().order().is_none() {
            return Err(Error::InvalidArgument(format!(
                "{} over an infinite field needs --pi",
                self.args.statement
            )));
        }
        sample_divisor(spec, n, &mut RngState::new(self.ctx.seed))?
            .ok_or_else(|| Error::InvalidArgument(format!("term {n} is constant; choose another --n")))
    }
}

impl SpecTask for VerifyTask<'_> {
    fn run<K: Field>(&self, spec: &SequenceSpec<K>) -> Result<Output> {
        let a = self.args;
        let st = a.statement.as_str();
        let n = a.n.unwrap_or(1);
        let lucas = matches!(spec.kind(), SequenceKind::Lucas { .. });
        let report = match st {
            "lemma-1.2" | "lemma-1.4" | "lemma-2.2" => {
                require_statement(st, strong_divisibility_statement(spec), spec.kind_name())?;
                verify_strong_divisibility(spec, a.max_n)?
            }
            "thm-1.3" | "cor-1.5" | "thm-2.6" => {
                require_statement(st, theorem_statement(spec), spec.kind_name())?;
                verify_zsigmondy(spec, a.max_n)?
            }
            "obs-1" => verify_observation1(spec, a.max_n)?,
            "obs-2" => verify_observation2(spec, a.max_n, self.ctx.seed)?,
            "lemma-1.1" => {
                if lucas {
                    return Err(Error::InvalidArgument("use lemma-2.5 for Lucas sequences".into()));
                }
                verify_ord_lemma(spec, &self.divisor(spec, n, true)?, n, a.max_n)?
            }
            "lemma-2.5" if a.pi.is_some() => {
                if !lucas {
                    return Err(Error::InvalidArgument("lemma-2.5 applies to Lucas sequences; use lemma-1.1".into()));
                }
                verify_ord_lemma(spec, &self.divisor(spec, n, false)?, n, a.max_n)?
            }
            "lemma-2.1" | "lemma-2.3" | "lemma-2.4" | "lemma-2.5" => verify_lucas_identities(spec, a.max_n)?
                .into_iter()
                .find(|r| r.statement == st)
                .ok_or_else(|| Error::Internal(format!("no {st} report")))?,
            "eq-1" => verify_eq1(spec, &self.divisor(spec, n, false)?, n, a.max_n)?,
            "eq-5" => verify_eq5(spec, &self.divisor(spec, n, false)?, a.max_n)?,
            _ => return Err(Error::InvalidArgument(format!("{st} is not a sequence statement"))),
        };
        Ok(Output::report(&report.with_seed(self.ctx.seed), self.ctx))
    }
}
