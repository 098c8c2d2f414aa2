use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Value};

use findual_core::algebra::FinDimAlgebra;
use findual_core::coalgebra::{
    construct_coalgebra, dualize_algebra, dualize_coalgebra, CoalgebraKind, Quiver,
};
use findual_core::codec;
use findual_core::criteria::{run_criterion, CriterionOutcome};
use findual_core::kernel::{parse_rational, FieldSpec, Scalar};
use findual_core::qplane::{azumaya_census, azumaya_point_invariants, oq_truncation, QPlaneKind};
use findual_core::twist::{run_twist_corpus, verify_twisted_duality, CorpusTally, LawWitness};
use findual_core::Error;

use crate::{
    CensusArgs, Command, ConstructArgs, Format, InputArgs, Kind, PointArgs, Suite, VerifyArgs,
};

pub const SCHEMA_VERSION: u64 = 1;

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Core(e) if e.is_precondition() => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(m) => m.clone(),
            Failure::Core(e) => e.to_string(),
        }
    }
}

type Outcome = Result<(String, Option<PathBuf>, bool), Failure>;

pub fn configure_threads() -> Result<(), String> {
    let Ok(raw) = std::env::var("FINDUAL_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("FINDUAL_THREADS must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

pub fn run(command: Command, args: &[String]) -> u8 {
    let outcome = match command {
        Command::Construct(a) => construct(a, args),
        Command::Dualize(a) => dualize(a, args),
        Command::TwistCheck(a) => twist_check(a, args),
        Command::Verify(a) => verify(a, args),
        Command::QplaneCensus(a) => census(a, args),
        Command::QplanePoint(a) => point(a, args),
        Command::Selftest => return selftest(),
    };
    match outcome {
        Ok((text, out, passed)) => {
            let written = match &out {
                Some(path) => fs::write(path, &text)
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) if passed => 0,
                Ok(()) => 1,
                Err(msg) => {
                    eprintln!("error: {msg}");
                    2
                }
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

fn report(args: &[String], results: Value, passed: bool) -> String {
    codec::render(&json!({
        "schema_version": SCHEMA_VERSION,
        "command": args,
        "results": results,
        "summary": { "passed": passed },
    }))
}

fn field_for(p: Option<u64>) -> Result<FieldSpec, Failure> {
    match p {
        Some(p) => Ok(FieldSpec::prime(p)?),
        None => Ok(FieldSpec::Rationals),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, kind: Kind) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{flag} is required for {kind:?}")))
}

fn parse_scalar(field: FieldSpec, s: &str) -> Result<Scalar, Failure> {
    match field {
        FieldSpec::Rationals => Ok(parse_rational(s)?),
        FieldSpec::PrimeField(_) => s
            .trim()
            .parse::<i64>()
            .map(|v| field.from_i64(v))
            .map_err(|_| Failure::Usage(format!("bad scalar {s:?}"))),
    }
}

fn parse_arrows(s: &str) -> Result<Vec<(usize, usize)>, Failure> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            let (a, b) = t
                .split_once('-')
                .ok_or_else(|| Failure::Usage(format!("bad arrow {t:?}")))?;
            match (a.trim().parse(), b.trim().parse()) {
                (Ok(a), Ok(b)) => Ok((a, b)),
                _ => Err(Failure::Usage(format!("bad arrow {t:?}"))),
            }
        })
        .collect()
}

fn parse_points(field: FieldSpec, s: &str) -> Result<Vec<(Scalar, usize)>, Failure> {
    s.split(',')
        .map(|t| {
            let (v, m) = t
                .rsplit_once(':')
                .ok_or_else(|| Failure::Usage(format!("bad point {t:?}")))?;
            let m = m
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad multiplicity in {t:?}")))?;
            Ok((parse_scalar(field, v)?, m))
        })
        .collect()
}

fn construct(a: ConstructArgs, args: &[String]) -> Outcome {
    let kind = a.kind;
    let coalgebra = |k: CoalgebraKind, field: FieldSpec| -> Result<Value, Failure> {
        Ok(json!({ "coalgebra": codec::encode_coalgebra(&construct_coalgebra(&k, field)?) }))
    };
    let algebra = |x: FinDimAlgebra| json!({ "algebra": codec::encode_algebra(&x) });
    let field = field_for(a.p)?;
    let results = match kind {
        Kind::Comatrix => coalgebra(
            CoalgebraKind::Comatrix {
                d: need(a.size, "size", kind)?,
            },
            field,
        )?,
        Kind::Triangular => coalgebra(
            CoalgebraKind::Triangular {
                n: need(a.size, "size", kind)?,
            },
            field,
        )?,
        Kind::Path => {
            let arrows = parse_arrows(a.arrows.as_deref().unwrap_or(""))?;
            coalgebra(
                CoalgebraKind::Path(Quiver::new(need(a.size, "size", kind)?, arrows)),
                field,
            )?
        }
        Kind::Grouplike => {
            let elements = (1..=need(a.size, "size", kind)?)
                .map(|i| format!("g{i}"))
                .collect();
            coalgebra(CoalgebraKind::Grouplike { elements }, field)?
        }
        Kind::DividedPower => coalgebra(
            CoalgebraKind::DividedPower {
                m: need(a.size, "size", kind)?,
            },
            field,
        )?,
        Kind::LineDist => {
            let raw = a
                .points
                .as_deref()
                .ok_or_else(|| Failure::Usage("--points is required for LineDist".into()))?;
            coalgebra(
                CoalgebraKind::LineDist {
                    points: parse_points(field, raw)?,
                },
                field,
            )?
        }
        Kind::MatrixAlgebra => algebra(FinDimAlgebra::matrix_algebra(
            field,
            positive(a.size, kind)?,
        )),
        Kind::TruncatedPower => algebra(FinDimAlgebra::truncated_power(
            field,
            "t",
            positive(a.size, kind)?,
        )),
        Kind::CyclicGroup => algebra(FinDimAlgebra::cyclic_group_algebra(
            field,
            "g",
            positive(a.size, kind)?,
        )),
        Kind::Diagonal => algebra(FinDimAlgebra::diagonal(field, positive(a.size, kind)?)),
        Kind::UpperTriangular => algebra(FinDimAlgebra::upper_triangular(
            field,
            positive(a.size, kind)?,
        )),
        Kind::QplaneBox | Kind::QplaneFiber => {
            let n = need(a.n, "n", kind)?;
            let p = need(a.p, "p", kind)?;
            let qk = if kind == Kind::QplaneBox {
                QPlaneKind::Box {
                    a: need(a.a, "a", kind)?,
                    b: need(a.b, "b", kind)?,
                }
            } else {
                QPlaneKind::CentralFiber {
                    c: field.from_u64(need(a.c, "c", kind)?),
                    d: field.from_u64(need(a.d, "d", kind)?),
                }
            };
            algebra(oq_truncation(n, p, qk)?.algebra)
        }
    };
    Ok((report(args, results, true), a.out, true))
}

fn positive(size: Option<usize>, kind: Kind) -> Result<usize, Failure> {
    match need(size, "size", kind)? {
        0 => Err(Failure::Usage("--size must be at least 1".into())),
        s => Ok(s),
    }
}

fn read_document(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    let v = codec::parse(&text)?;
    // accept either a bare value or a report produced by this tool
    Ok(match v.get("results") {
        Some(r) if v.get("schema_version").is_some() => r.clone(),
        _ => v,
    })
}

fn dualize(a: InputArgs, args: &[String]) -> Outcome {
    let v = read_document(&a.input)?;
    let results = if let Some(x) = v.get("algebra").or_else(|| v.get("mul").map(|_| &v)) {
        json!({ "coalgebra": codec::encode_coalgebra(&dualize_algebra(&codec::decode_algebra(x)?)?) })
    } else if let Some(x) = v.get("coalgebra").or_else(|| v.get("comul").map(|_| &v)) {
        json!({ "algebra": codec::encode_algebra(&dualize_coalgebra(&codec::decode_coalgebra(x)?)?) })
    } else {
        return Err(Error::SchemaMismatch("expected an algebra or a coalgebra".into()).into());
    };
    Ok((report(args, results, true), a.out, true))
}

fn witness(w: &Option<LawWitness>) -> Value {
    match w {
        Some(w) => json!({ "law": w.law, "row": w.row, "col": w.col }),
        None => Value::Null,
    }
}

fn twist_check(a: InputArgs, args: &[String]) -> Outcome {
    let v = read_document(&a.input)?;
    let v = v.get("twist").unwrap_or(&v);
    let is_cotwist = v.get("a").and_then(|x| x.get("comul")).is_some();
    let (results, passed) = if is_cotwist {
        let r = codec::decode_cotwist(v)?.check();
        let results = json!({
            "kind": "cotwisting",
            "conormal": r.conormal,
            "comultiplicative": r.comultiplicative,
            "conormal_witness": witness(&r.conormal_witness),
            "comultiplicative_witness": witness(&r.comultiplicative_witness),
        });
        (results, r.passed())
    } else {
        let rho = codec::decode_twist(v)?;
        let r = rho.check();
        let duality = if r.passed() {
            Value::Bool(verify_twisted_duality(&rho)?.equal)
        } else {
            Value::Null
        };
        let results = json!({
            "kind": "twisting",
            "normal": r.normal,
            "multiplicative": r.multiplicative,
            "normal_witness": witness(&r.normal_witness),
            "multiplicative_witness": witness(&r.multiplicative_witness),
            "twisted_duality": duality,
        });
        (results, r.passed() && duality != Value::Bool(false))
    };
    Ok((report(args, results, passed), a.out, passed))
}

fn criterion_check(id: u8) -> (Value, bool) {
    let o: CriterionOutcome = run_criterion(id).expect("known criterion");
    (
        json!({ "name": o.name, "passed": o.passed, "detail": o.detail }),
        o.passed,
    )
}

fn tally_json(seed: u64, t: &CorpusTally) -> Value {
    json!({
        "seed": seed,
        "trials": t.trials,
        "passing": t.passing,
        "equivalence_failures": t.equivalence_failures,
        "axiom_duality_failures": t.axiom_duality_failures,
        "twisted_duality_failures": t.twisted_duality_failures,
    })
}

fn corpus_check(name: &str, seed: u64, trials: usize, full: bool) -> (Value, bool) {
    let t = run_twist_corpus(seed, trials);
    let passed = if full {
        t.clean()
    } else {
        t.equivalence_failures.is_empty() && t.axiom_duality_failures.is_empty()
    };
    (
        json!({ "name": name, "passed": passed, "tally": tally_json(seed, &t) }),
        passed,
    )
}

fn verify(a: VerifyArgs, args: &[String]) -> Outcome {
    if a.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let twists = || {
        corpus_check(
            "twisting axioms match the twisted product",
            a.seed,
            a.trials,
            false,
        )
    };
    let twisted = || {
        corpus_check(
            "twisted duality on the random corpus",
            a.seed,
            a.trials,
            true,
        )
    };
    let checks: Vec<(Value, bool)> = match a.suite {
        Suite::Duality => vec![criterion_check(1), criterion_check(3), criterion_check(8)],
        Suite::Twists => vec![twists(), criterion_check(3)],
        Suite::Coradical => vec![criterion_check(7)],
        Suite::Qplane => vec![criterion_check(4), criterion_check(5), criterion_check(6)],
        Suite::TwistedDuality => vec![twisted()],
        Suite::All => {
            let mut all: Vec<_> = [1, 3, 8, 7, 4, 5, 6]
                .into_iter()
                .map(criterion_check)
                .collect();
            all.push(twists());
            all.push(twisted());
            all
        }
    };
    let passed = checks.iter().all(|c| c.1);
    let results = json!({ "checks": checks.into_iter().map(|c| c.0).collect::<Vec<_>>() });
    Ok((report(args, results, passed), a.out, passed))
}

fn census(a: CensusArgs, args: &[String]) -> Outcome {
    let r = azumaya_census(a.n, a.p)?;
    let text = match a.format {
        Format::Json => report(args, codec::encode_census(&r), true),
        Format::Csv => codec::census_csv(&r),
    };
    Ok((text, a.out, true))
}

fn point(a: PointArgs, args: &[String]) -> Outcome {
    let field = FieldSpec::prime(a.p)?;
    if a.c >= a.p || a.d >= a.p {
        return Err(Failure::Usage(format!("c and d must lie in [0, {})", a.p)));
    }
    let inv = azumaya_point_invariants(a.n, a.p, &field.from_u64(a.c), &field.from_u64(a.d))?;
    let passed = inv.radical_certified && inv.radical_square_zero;
    Ok((
        report(args, codec::encode_point(&inv), passed),
        a.out,
        passed,
    ))
}

fn selftest() -> u8 {
    let outcomes = findual_core::criteria::run_all();
    for o in &outcomes {
        println!("{}", o.line());
    }
    let failed = outcomes.iter().filter(|o| !o.ok()).count();
    println!(
        "selftest: {} passed, {failed} failed",
        outcomes.len() - failed
    );
    u8::from(failed > 0)
}
