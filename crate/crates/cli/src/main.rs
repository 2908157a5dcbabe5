use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cqsym::arith::rat_to_string;
use cqsym::combinatorics::{cyclic_class, NSubset};
use cqsym::cqsym::{
    basis_matrix, fcyc_as_qsym, product_expansion, product_via_cyclic_shuffles, CBasis, CQSymElem,
};
use cqsym::descent::coproduct_fcyc;
use cqsym::enumer::{
    cdes_shuffle_dist, des_shuffle_dist, psi, psi_by_monomials, psi_f_formula, psi_fcyc_formula,
};
use cqsym::qsym::{Partition, QBasis, QSymElem};
use cqsym::schur::{cdes_fibers, schur, schur_expansion, symmetric_in_hfcyc, SkewShape};
use cqsym::toric::Dag;
use cqsym::verify;
use cqsym::Error;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "cqsym",
    version,
    about = "Cyclic quasi-symmetric functions, exactly"
)]
struct Cli {
    /// Indent the JSON output.
    #[arg(long, global = true)]
    pretty: bool,

    /// Override the size cap of the chosen command.
    #[arg(long, global = true)]
    limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    #[value(name = "F")]
    F,
    #[value(name = "M")]
    M,
    #[value(name = "hF")]
    HF,
    #[value(name = "hM")]
    HM,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Shuffle,
    Quasishuffle,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// F^cyc_{n,S} in a chosen basis.
    Fcyc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "F")]
        basis: BasisArg,
    },
    /// F^cyc_{a,S} F^cyc_{b,T} expanded in F^cyc.
    Product {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        aset: String,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        bset: String,
        #[arg(long, value_enum, default_value = "both")]
        method: Method,
    },
    /// Normalized hF^cyc in hM^cyc change-of-basis matrix.
    BasisMatrix {
        #[arg(long)]
        n: usize,
    },
    /// Skew Schur function in the F, Schur and hF^cyc bases.
    SchurExpand {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Cyclic descent fiber sizes of a skew shape.
    Fibers {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: Option<String>,
    },
    /// Linear and toric extensions of a DAG, e.g. "3;1->2,2->3".
    ToricLext {
        #[arg(long)]
        dag: String,
    },
    /// Toric enumerator of the toric poset of a DAG.
    ToricEnum {
        #[arg(long)]
        dag: String,
    },
    /// Distribution of des (or cdes) over (cyclic) shuffles.
    ShuffleDist {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        cyclic: bool,
    },
    /// Psi specialization of F_{n,S} (or F^cyc_{n,S}) truncated at q^R.
    Psi {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        set: String,
        #[arg(long)]
        trunc: usize,
        #[arg(long)]
        cyclic: bool,
    },
    /// Internal coproduct of hF^cyc_{n,A}.
    Coproduct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        class: String,
    },
    /// Run an invariant suite.
    Verify {
        #[arg(long, required_unless_present = "list")]
        suite: Option<String>,
        #[arg(long)]
        max: Option<usize>,
        #[arg(long)]
        list: bool,
    },
}

enum Failure {
    Usage(String),
    Identity(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn cap(name: &str, value: usize, default: usize, limit: Option<usize>) -> Result<(), Failure> {
    let max = limit.unwrap_or(default);
    if value > max {
        return Err(Failure::Usage(format!(
            "{name} = {value} exceeds the cap {max} (raise it with --limit)"
        )));
    }
    Ok(())
}

fn shape(lambda: &str, mu: Option<&str>) -> Result<SkewShape, Failure> {
    let lam: Partition = lambda.parse()?;
    let mu: Partition = match mu {
        Some(m) => m.parse()?,
        None => Partition::new(vec![])?,
    };
    Ok(SkewShape::new(lam, mu)?)
}

fn cqsym_in(e: &CQSymElem, basis: CBasis) -> Value {
    e.to_basis(basis).to_json()
}

/// Coefficients on `F^cyc` of one representative per class.
fn fcyc_coordinates(f: &QSymElem) -> Result<Vec<Value>, Failure> {
    let e = CQSymElem::from_qsym(f)?.to_basis(CBasis::HFcyc);
    Ok(e.coeffs()
        .iter()
        .map(|(a, c)| json!({"class": a.canonical().elements(), "coeff": rat_to_string(&(c / cqsym::arith::rat(a.d() as i64)))}))
        .collect())
}

fn run(cli: &Cli) -> Outcome {
    let limit = cli.limit;
    match &cli.command {
        Command::Fcyc { n, set, basis } => {
            cap("n", *n, 12, limit)?;
            let j = NSubset::parse_in(*n, set)?;
            let f = fcyc_as_qsym(&j);
            let out = match basis {
                BasisArg::F => f.to_json(QBasis::F),
                BasisArg::M => f.to_json(QBasis::M),
                BasisArg::HF => cqsym_in(&CQSymElem::from_qsym(&f)?, CBasis::HFcyc),
                BasisArg::HM => cqsym_in(&CQSymElem::from_qsym(&f)?, CBasis::HMcyc),
            };
            Ok(out)
        }
        Command::Product {
            a,
            aset,
            b,
            bset,
            method,
        } => {
            cap("a+b", a + b, 9, limit)?;
            let j = NSubset::parse_in(*a, aset)?;
            let k = NSubset::parse_in(*b, bset)?;
            let mut out = serde_json::Map::new();
            out.insert("a".into(), json!(a));
            out.insert("aset".into(), json!(j.elements()));
            out.insert("b".into(), json!(b));
            out.insert("bset".into(), json!(k.elements()));
            let quasi = || &fcyc_as_qsym(&j) * &fcyc_as_qsym(&k);
            let mut shuffle_terms = None;
            let mut quasi_terms = None;
            if *method != Method::Quasishuffle {
                let terms: Vec<Value> = product_expansion(&j, &k)?
                    .iter()
                    .map(
                        |(a, c)| json!({"class": a.canonical().elements(), "coeff": c.to_string()}),
                    )
                    .collect();
                out.insert("shuffle".into(), json!(terms));
                shuffle_terms = Some(terms);
            }
            if *method != Method::Shuffle {
                let terms = fcyc_coordinates(&quasi())?;
                out.insert("quasishuffle".into(), json!(terms));
                quasi_terms = Some(terms);
            }
            if let (Some(s), Some(q)) = (&shuffle_terms, &quasi_terms) {
                let agree = s == q && product_via_cyclic_shuffles(&j, &k)? == quasi();
                out.insert("agree".into(), json!(agree));
                if !agree {
                    return Err(Failure::Identity(Value::Object(out)));
                }
            }
            Ok(Value::Object(out))
        }
        Command::BasisMatrix { n } => {
            cap("n", *n, 10, limit)?;
            if *n == 0 {
                return Err(Failure::Usage("n must be positive".into()));
            }
            Ok(basis_matrix(*n, true).to_json())
        }
        Command::SchurExpand { lambda, mu } => {
            let sh = shape(lambda, mu.as_deref())?;
            cap("size", sh.size(), 10, limit)?;
            let s = schur(&sh);
            let expansion: Vec<Value> = schur_expansion(&s)?
                .iter()
                .map(|(p, c)| json!({"lambda": p.parts(), "coeff": rat_to_string(c)}))
                .collect();
            Ok(json!({
                "shape": sh.to_string(),
                "connected_ribbon": sh.is_connected_ribbon(),
                "F": s.to_json(QBasis::F),
                "schur": expansion,
                "hFcyc": cqsym_in(&symmetric_in_hfcyc(&s)?, CBasis::HFcyc),
            }))
        }
        Command::Fibers { lambda, mu } => {
            let sh = shape(lambda, mu.as_deref())?;
            cap("size", sh.size(), 10, limit)?;
            let t = cdes_fibers(&sh);
            let mut v = t.to_json();
            let syt = sh.num_syt();
            v["num_syt"] = json!(syt);
            if t.proper && t.total() != cqsym::arith::rat(syt as i64) {
                return Err(Failure::Identity(v));
            }
            Ok(v)
        }
        Command::ToricLext { dag } => {
            let d: Dag = dag.parse()?;
            cap("vertices", d.len(), 8, limit)?;
            let lin: Vec<String> = d
                .linear_extensions()
                .iter()
                .map(|w| w.to_string())
                .collect();
            let tor: Vec<String> = d
                .toric_extensions()?
                .iter()
                .map(|w| w.canonical().to_string())
                .collect();
            Ok(json!({"dag": d.to_string(), "linear_extensions": lin, "toric_extensions": tor}))
        }
        Command::ToricEnum { dag } => {
            let d: Dag = dag.parse()?;
            cap("vertices", d.len(), 8, limit)?;
            let class = d.toric_class()?;
            let f = class.toric_enumerator();
            let fcyc = if f.is_zero() {
                json!([])
            } else {
                json!(fcyc_coordinates(&f)?)
            };
            Ok(json!({
                "dag": d.to_string(),
                "class_size": class.len(),
                "F": f.to_json(QBasis::F),
                "Fcyc": fcyc,
            }))
        }
        Command::ShuffleDist { m, n, i, j, cyclic } => {
            cap("m+n", m + n, 40, limit)?;
            let dist = if *cyclic {
                cdes_shuffle_dist(*m, *n, *i, *j)?
            } else {
                des_shuffle_dist(*m, *n, *i, *j)?
            };
            let dist: Vec<String> = dist.iter().map(|x| x.to_string()).collect();
            Ok(json!({"m": m, "n": n, "i": i, "j": j, "cyclic": cyclic, "distribution": dist}))
        }
        Command::Psi {
            n,
            set,
            trunc,
            cyclic,
        } => {
            cap("n", *n, 12, limit)?;
            cap("trunc", *trunc, 64, limit.map(|l| l.max(64)))?;
            let j = NSubset::parse_in(*n, set)?;
            let (f, formula) = if *cyclic {
                (
                    fcyc_as_qsym(&j),
                    (!j.is_empty()).then(|| psi_fcyc_formula(*n, j.len(), *trunc)),
                )
            } else {
                if j.contains(*n) {
                    return Err(Failure::Usage(format!(
                        "F_{{n,S}} needs S inside [n-1], got {set}"
                    )));
                }
                (
                    QSymElem::fundamental(&j)?,
                    Some(psi_f_formula(*n, j.len(), *trunc)),
                )
            };
            let value = psi(&f, *trunc);
            let agree = psi_by_monomials(&f, *trunc) == value
                && formula.as_ref().is_none_or(|g| *g == value);
            let v = json!({"n": n, "set": j.elements(), "cyclic": cyclic, "psi": value.to_json(), "agree": agree});
            if agree {
                Ok(v)
            } else {
                Err(Failure::Identity(v))
            }
        }
        Command::Coproduct { n, class } => {
            cap("n", *n, 6, limit)?;
            let b = cyclic_class(&NSubset::parse_in(*n, class)?);
            Ok(coproduct_fcyc(*n, &b)?.to_json())
        }
        Command::Verify { suite, max, list } => {
            if *list {
                let suites: Vec<Value> = verify::SUITES
                    .iter()
                    .map(|s| json!({"name": s.name, "about": s.about, "default_max": s.default_max, "cap": s.cap}))
                    .collect();
                return Ok(json!(suites));
            }
            let name = suite.as_deref().unwrap_or_default();
            let s = verify::find(name)
                .ok_or_else(|| Failure::Usage(format!("unknown suite {name}")))?;
            let max = max.unwrap_or(s.default_max);
            cap("max", max, s.cap, limit)?;
            let report = verify_with_limit(name, max, limit.is_some())?;
            let v = serde_json::to_value(&report).unwrap();
            if report.passed {
                Ok(v)
            } else {
                Err(Failure::Identity(v))
            }
        }
    }
}

fn verify_with_limit(name: &str, max: usize, raised: bool) -> Result<verify::SuiteReport, Failure> {
    if raised {
        Ok(verify::run_suite_unchecked(name, max)?)
    } else {
        Ok(verify::run_suite(name, Some(max))?)
    }
}

fn emit(v: &Value, pretty: bool) {
    let s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{}", s.unwrap());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(v) => {
            emit(&v, cli.pretty);
            ExitCode::SUCCESS
        }
        Err(Failure::Identity(v)) => {
            emit(&json!({"passed": false, "counterexample": v}), cli.pretty);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            emit(&json!({"error": msg}), cli.pretty);
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("cqsym").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn caps_respect_the_limit_flag() {
        assert!(cap("n", 10, 10, None).is_ok());
        assert!(matches!(cap("n", 11, 10, None), Err(Failure::Usage(_))));
        assert!(cap("n", 11, 10, Some(11)).is_ok());
    }

    #[test]
    fn shapes_parse_with_and_without_an_inner_partition() {
        let s = shape("(3,2)", Some("(1)")).ok().unwrap();
        assert_eq!(s.size(), 4);
        assert_eq!(shape("(2,2)", None).ok().unwrap().size(), 4);
        assert!(shape("(1)", Some("(2)")).is_err());
    }

    #[test]
    fn coordinates_divide_out_the_stabilizer() {
        let f = fcyc_as_qsym(&NSubset::new(4, [1, 3]).unwrap());
        let terms = fcyc_coordinates(&f).ok().unwrap();
        assert_eq!(terms, vec![json!({"class": [1, 3], "coeff": "1"})]);
    }

    #[test]
    fn basis_names_are_case_sensitive() {
        assert!(matches!(
            parse(&["fcyc", "--n", "3", "--set", "{1}", "--basis", "hM"]).command,
            Command::Fcyc {
                basis: BasisArg::HM,
                ..
            }
        ));
        assert!(
            Cli::try_parse_from(["cqsym", "fcyc", "--n", "3", "--set", "{1}", "--basis", "x"])
                .is_err()
        );
    }

    #[test]
    fn product_with_both_methods_reports_agreement() {
        let cli = parse(&[
            "product", "--a", "2", "--aset", "{1}", "--b", "2", "--bset", "{2}",
        ]);
        let v = run(&cli).ok().unwrap();
        assert_eq!(v["agree"], json!(true));
    }
}
