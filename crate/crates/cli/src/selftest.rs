//! Golden checks against the fixture reports.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use skew_cyclic::codec::ErrorTerm;
use skew_cyclic::factorization::table1_report;
use skew_cyclic::serial::{CodeDoc, MessageDoc, PolyDoc};
use skew_cyclic::{parse_poly, Error, RingContext};

use crate::commands::{analyze, decode, encode};
use crate::reports::ReceivedDoc;
use crate::{CliError, Policy};

const FIXTURES: [(&str, &str); 9] = [
    ("case3_code.json", include_str!("../fixtures/case3_code.json")),
    ("case3_message.json", include_str!("../fixtures/case3_message.json")),
    ("case3_received.json", include_str!("../fixtures/case3_received.json")),
    ("case3_analyze.json", include_str!("../fixtures/case3_analyze.json")),
    ("case3_encode.json", include_str!("../fixtures/case3_encode.json")),
    ("case3_decode.json", include_str!("../fixtures/case3_decode.json")),
    ("case2_code.json", include_str!("../fixtures/case2_code.json")),
    ("case2_analyze.json", include_str!("../fixtures/case2_analyze.json")),
    ("table1.json", include_str!("../fixtures/table1.json")),
];

const EXAMPLE_CODEWORD: &str = "(1+u+2u^2)x^5+(2u+u^2)x^4+(1+2u)x^3+ux^2+(1+2u)x+(2u+u^2)";

enum Verdict {
    Skip(String),
    Fail(String),
}

impl From<CliError> for Verdict {
    fn from(e: CliError) -> Self {
        match e {
            CliError::Lib(Error::GuardExceeded { required, guard }) => {
                Self::Skip(format!("needs {required} enumeration steps, guard is {guard}"))
            }
            other => Self::Fail(other.to_string()),
        }
    }
}

impl From<Error> for Verdict {
    fn from(e: Error) -> Self {
        CliError::Lib(e).into()
    }
}

struct Fixtures<'a> {
    dir: Option<&'a Path>,
}

impl Fixtures<'_> {
    fn text(&self, name: &str) -> Result<String, Verdict> {
        match self.dir {
            Some(dir) => fs::read_to_string(dir.join(name)).map_err(|e| Verdict::Fail(format!("{name}: {e}"))),
            None => Ok(FIXTURES
                .iter()
                .find(|(n, _)| *n == name)
                .expect("known fixture")
                .1
                .to_string()),
        }
    }

    fn parse<T: serde::de::DeserializeOwned>(&self, name: &str) -> Result<T, Verdict> {
        serde_json::from_str(&self.text(name)?).map_err(|e| Verdict::Fail(format!("{name}: {e}")))
    }

    /// Compares a freshly computed report with the stored one.
    fn compare<T: Serialize>(&self, name: &str, computed: &T) -> Result<(), Verdict> {
        let expected: Value = self.parse(name)?;
        let computed = serde_json::to_value(computed).expect("report types serialize");
        match first_difference(&expected, &computed, "$") {
            None => Ok(()),
            Some(diff) => Err(Verdict::Fail(format!("{name} {diff}"))),
        }
    }
}

fn first_difference(expected: &Value, got: &Value, path: &str) -> Option<String> {
    match (expected, got) {
        (Value::Object(a), Value::Object(b)) => {
            for key in a.keys().chain(b.keys().filter(|k| !a.contains_key(*k))) {
                let (x, y) = (a.get(key).unwrap_or(&Value::Null), b.get(key).unwrap_or(&Value::Null));
                if let Some(d) = first_difference(x, y, &format!("{path}.{key}")) {
                    return Some(d);
                }
            }
            None
        }
        (Value::Array(a), Value::Array(b)) if a.len() == b.len() => a
            .iter()
            .zip(b)
            .enumerate()
            .find_map(|(i, (x, y))| first_difference(x, y, &format!("{path}[{i}]"))),
        _ if expected == got => None,
        _ => Some(format!(
            "differs at {path}:\n  - expected {expected}\n  + got      {got}"
        )),
    }
}

fn ensure(cond: bool, what: &str) -> Result<(), Verdict> {
    if cond {
        Ok(())
    } else {
        Err(Verdict::Fail(what.to_string()))
    }
}

fn case3_analyze(fx: &Fixtures, guard: u64) -> Result<(), Verdict> {
    let doc: CodeDoc = fx.parse("case3_code.json")?;
    let (ctx, gens) = doc.generators()?;
    let report = analyze(ctx, doc.n, &gens, guard, true)?;
    ensure(report.cardinality == "59049", "|C| should be 59049")?;
    ensure(
        report.form.case == "III" && report.form.r == Some(4) && report.form.t == Some(2),
        "expected case III with r = 4, t = 2",
    )?;
    fx.compare("case3_analyze.json", &report)
}

fn case3_encode(fx: &Fixtures) -> Result<(), Verdict> {
    let doc: CodeDoc = fx.parse("case3_code.json")?;
    let form = doc.resolve_form()?;
    let msg = fx.parse::<MessageDoc>("case3_message.json")?.to_message(&form)?;
    let (report, word) = encode(&form, doc.n, &msg)?;
    let ctx = form.ctx();
    ensure(
        word.to_poly(ctx) == parse_poly(ctx, EXAMPLE_CODEWORD)?,
        "codeword differs from the worked example",
    )?;
    fx.compare("case3_encode.json", &report)
}

fn case3_decode(fx: &Fixtures, guard: u64) -> Result<(), Verdict> {
    let doc: CodeDoc = fx.parse("case3_code.json")?;
    let form = doc.resolve_form()?;
    let received = fx
        .parse::<ReceivedDoc>("case3_received.json")?
        .poly()
        .to_codeword(form.ctx(), doc.n)?;
    let (report, _) = decode(&form, doc.n, &received, 1, Policy::CosetLeader, guard)?;
    let located = ErrorTerm {
        position: 4,
        layer: 2,
        magnitude: 1,
    };
    ensure(report.error_pattern == [located], "error should be u^2 x^4")?;
    let expected: MessageDoc = fx.parse("case3_message.json")?;
    ensure(
        report.message.to_message(&form)? == expected.to_message(&form)?,
        "recovered message differs",
    )?;
    fx.compare("case3_decode.json", &report)
}

fn case2_analyze(fx: &Fixtures, guard: u64) -> Result<(), Verdict> {
    let doc: CodeDoc = fx.parse("case2_code.json")?;
    let (ctx, gens) = doc.generators()?;
    let report = analyze(ctx, doc.n, &gens, guard, true)?;
    let row = &report.generator_matrix.twisted[0];
    ensure(
        *row == ["4+u+4u^2", "0", "1+4u+u^2", "0"],
        "G row 1 differs from the worked example",
    )?;
    fx.compare("case2_analyze.json", &report)
}

fn table1(fx: &Fixtures, guard: u64) -> Result<(), Verdict> {
    let report = table1_report(RingContext::new(5, 3, 4)?, guard)?;
    ensure(
        report
            .families
            .iter()
            .all(|f| f.distinct_factors == 10 && f.all_verified),
        "each family should give 10 verified factors",
    )?;
    ensure(
        report.rows.iter().all(|r| r.found_by_search),
        "a family member is missing from the search",
    )?;
    let census = &report.census;
    ensure(
        census.distinct_linear_factors == 200,
        "expected 200 distinct linear factors",
    )?;
    ensure(
        census.rank_counts.get(&3) == Some(&census.enumerated),
        "every linear-factor code should have rank 3",
    )?;
    fx.compare("table1.json", &report)
}

fn case3_codeword_fixture(fx: &Fixtures) -> Result<(), Verdict> {
    let doc: CodeDoc = fx.parse("case3_code.json")?;
    let ctx = doc.ctx.to_ctx()?;
    let received = fx.parse::<ReceivedDoc>("case3_received.json")?;
    let stored = received.poly().to_poly(ctx)?;
    let expected = parse_poly(ctx, EXAMPLE_CODEWORD)?.add(&parse_poly(ctx, "u^2x^4")?)?;
    ensure(
        stored == expected,
        "received word should be the example codeword plus u^2 x^4",
    )?;
    ensure(
        matches!(received.poly(), PolyDoc::Text(_)),
        "received word should be stored as text",
    )
}

type Check<'a> = Box<dyn Fn() -> Result<(), Verdict> + 'a>;

pub fn run(guard: u64, dir: Option<&Path>) -> Result<String, CliError> {
    let fx = Fixtures { dir };
    let checks: [(&str, Check); 6] = [
        ("corrupted example word", Box::new(|| case3_codeword_fixture(&fx))),
        ("case III analysis", Box::new(|| case3_analyze(&fx, guard))),
        ("case III encoding", Box::new(|| case3_encode(&fx))),
        ("case III decoding", Box::new(|| case3_decode(&fx, guard))),
        ("case II matrices", Box::new(|| case2_analyze(&fx, guard))),
        ("factor families and linear census", Box::new(|| table1(&fx, guard))),
    ];
    let mut out = String::new();
    let (mut passed, mut failed, mut skipped) = (0, 0, 0);
    for (name, check) in &checks {
        match check() {
            Ok(()) => {
                passed += 1;
                let _ = writeln!(out, "PASS  {name}");
            }
            Err(Verdict::Skip(why)) => {
                skipped += 1;
                let _ = writeln!(out, "SKIP  {name}: skipped, {why}");
            }
            Err(Verdict::Fail(why)) => {
                failed += 1;
                let _ = writeln!(out, "FAIL  {name}: {why}");
            }
        }
    }
    let _ = writeln!(out, "{passed} passed, {failed} failed, {skipped} skipped");
    if failed > 0 {
        let _ = std::io::stdout().write_all(out.as_bytes());
        Err(CliError::SelftestFailed(failed))
    } else {
        Ok(out)
    }
}
