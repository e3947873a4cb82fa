use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use knotforge::algebra::{Field, Fp, LaurentPoly, Prime, Rational};
use knotforge::diagram::{parse_pd, symmetric_union_pd, PdCode, SymUnionSpec};
use knotforge::presentation::{build_symun_presentation, wirtinger};
use knotforge::reps::{
    enumerate_sl2, enumerate_sl2_summary, fill_with_conjugates, verify_representation, RepFile, RepSearchConfig,
    Representation,
};
use knotforge::twisted::{
    alexander_square_check, classical_alexander, even_symun_obstruction_many, even_symun_quick_obstructions,
    higher_alexander, knot_determinant, twisted_alexander, verify_theorem, TheoremReport, TwistedPolynomial,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::report::{RunReport, ASSUMED_CONTEXT};
use crate::table::{default_table_path, KnotTable};
use crate::CliError;

/// Twisted Alexander polynomials of knots and symmetric unions.
#[derive(Parser, Debug)]
#[command(name = "knotforge", version)]
pub struct Cli {
    /// Knot table (CSV with columns name,pd). Defaults to $KNOTFORGE_TABLE.
    #[arg(long, global = true)]
    pub table: Option<PathBuf>,
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include the wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Worker threads for the parallel parts.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Alexander polynomial, higher Alexander polynomials and determinant.
    Alex {
        /// Table name, `unknot`, or an inline PD code.
        knot: String,
        /// Also compute the k-th Alexander polynomial.
        #[arg(long = "ideal")]
        ideals: Vec<usize>,
        #[arg(long)]
        det: bool,
    },
    /// Twisted Alexander polynomial for a given or enumerated representation.
    Talex {
        knot: String,
        #[arg(long)]
        p: Option<u64>,
        /// JSON representation file, or `trivial`.
        #[arg(long, conflicts_with = "enumerate")]
        rep: Option<String>,
        /// Use every nonabelian SL(2, F_p) representation up to conjugacy.
        #[arg(long)]
        enumerate: bool,
        /// Report which polynomials equal this one up to units.
        #[arg(long, allow_hyphen_values = true)]
        target: Option<String>,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Build a symmetric union or check the twisted polynomial identity on it.
    Symun {
        #[command(subcommand)]
        action: SymunAction,
    },
    /// Test whether a knot can be an even symmetric union with a given
    /// partial knot.
    Obstruct {
        knot: String,
        #[arg(long)]
        candidate: String,
        #[arg(long)]
        p: Option<u64>,
        /// Representation of the candidate on its Wirtinger generators.
        #[arg(long, requires = "p")]
        rep: Option<PathBuf>,
        /// Genus of the knot, for the parity check.
        #[arg(long)]
        genus: Option<u64>,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
    /// Knot table maintenance.
    Table {
        #[command(subcommand)]
        action: TableAction,
    },
}

#[derive(Args, Debug)]
pub struct UnionArgs {
    #[arg(long)]
    pub partial: String,
    /// Marked edges e0,e1,..; e0 carries the ∞-tangle.
    #[arg(long, value_delimiter = ',', required = true)]
    pub marks: Vec<u32>,
    /// Crossing counts n1,..,nk at e1,..,ek.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub twists: Vec<i64>,
}

#[derive(Subcommand, Debug)]
pub enum SymunAction {
    Build(UnionArgs),
    Verify {
        #[command(flatten)]
        union: UnionArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum TableAction {
    /// Validate a CSV table and store it under the data directory.
    Import {
        path: PathBuf,
        #[arg(long, default_value = ".knotforge")]
        data_dir: PathBuf,
    },
}

struct Session<'a> {
    cli: &'a Cli,
    table: Option<KnotTable>,
    report: RunReport,
}

impl Session<'_> {
    fn knot(&mut self, name: &str) -> Result<PdCode, CliError> {
        if name == "unknot" {
            return Ok(PdCode::unknot());
        }
        if name.trim_start().starts_with("X[") {
            return Ok(parse_pd(name)?);
        }
        if self.table.is_none() {
            let t = KnotTable::load(&default_table_path(self.cli.table.as_deref()))?;
            self.report.warnings.extend(t.warnings.iter().cloned());
            self.table = Some(t);
        }
        self.table
            .as_ref()
            .unwrap()
            .get(name)
            .cloned()
            .ok_or_else(|| CliError::Usage(format!("unknown knot {name}")))
    }
}

fn prime(p: u64) -> Result<Prime, CliError> {
    Prime::new(p).map_err(|e| CliError::Usage(e.to_string()))
}

fn config(p: Prime, budget: usize) -> RepSearchConfig {
    RepSearchConfig { budget, ..RepSearchConfig::new(p) }
}

fn count(n: impl ToString) -> Value {
    let s = n.to_string();
    s.parse::<u64>().map(Value::from).unwrap_or(Value::String(s))
}

fn poly_json<F: Field>(tp: &TwistedPolynomial<F>) -> Value {
    json!({ "polynomial": tp.to_string(), "degree": tp.degree().ok() })
}

fn theorem_json<F: Field>(r: &TheoremReport<F>) -> Value {
    json!({
        "d": r.d,
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "partial": r.partial.to_string(),
        "equal": r.equal,
        "deg_lhs": r.deg_lhs,
        "deg_partial": r.deg_partial,
        "degree_identity": r.degree_identity,
        "longitude_killed": r.longitude_killed,
    })
}

/// Run a parsed command. `echo` is the argument list shown in the report.
pub fn execute(cli: &Cli, echo: Vec<String>) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let mut s = Session { cli, table: None, report: RunReport::new(echo) };
    let results = match &cli.command {
        Command::Alex { knot, ideals, det } => alex(&mut s, knot, ideals, *det)?,
        Command::Talex { knot, p, rep, enumerate, target, budget } => {
            talex(&mut s, knot, *p, rep.as_deref(), *enumerate, target.as_deref(), *budget)?
        }
        Command::Symun { action: SymunAction::Build(u) } => symun_build(&mut s, u)?,
        Command::Symun { action: SymunAction::Verify { union, p, trials, budget } } => {
            symun_verify(&mut s, union, *p, *trials, *budget)?
        }
        Command::Obstruct { knot, candidate, p, rep, genus, budget } => {
            obstruct(&mut s, knot, candidate, *p, rep.as_ref(), *genus, *budget)?
        }
        Command::Table { action: TableAction::Import { path, data_dir } } => table_import(&mut s, path, data_dir)?,
    };
    s.report.results = results;
    if cli.timing {
        s.report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    Ok(s.report)
}

fn alex(s: &mut Session, knot: &str, ideals: &[usize], det: bool) -> Result<Value, CliError> {
    s.report.input("knot", knot);
    let pd = s.knot(knot)?;
    let delta = classical_alexander(&pd);
    let mut out = Map::new();
    out.insert("alexander".into(), delta.to_string().into());
    out.insert("degree".into(), delta.span().into());
    if !ideals.is_empty() {
        let mut m = Map::new();
        for &k in ideals {
            m.insert(k.to_string(), higher_alexander(&pd, k)?.to_string().into());
        }
        out.insert("ideals".into(), Value::Object(m));
    }
    if det {
        out.insert("determinant".into(), count(knot_determinant(&pd)));
    }
    Ok(Value::Object(out))
}

fn talex(
    s: &mut Session,
    knot: &str,
    p: Option<u64>,
    rep: Option<&str>,
    enumerate: bool,
    target: Option<&str>,
    budget: usize,
) -> Result<Value, CliError> {
    s.report.input("knot", knot);
    if let Some(p) = p {
        s.report.input("p", p);
    }
    let w = wirtinger(&s.knot(knot)?);
    let pres = w.deficiency_one()?;
    match (rep, enumerate) {
        (Some("trivial"), _) => {
            s.report.input("rep", "trivial");
            let tp = match p {
                Some(p) => poly_json(&twisted_alexander(&pres, &Representation::<Fp>::trivial(&prime(p)?, w.n_gens()), None)?),
                None => poly_json(&twisted_alexander(&pres, &Representation::<Rational>::trivial(&(), w.n_gens()), None)?),
            };
            Ok(tp)
        }
        (Some(file), _) => {
            s.report.input("rep", file);
            let text = std::fs::read_to_string(file).map_err(|e| CliError::Domain(format!("{file}: {e}")))?;
            let rf = RepFile::parse(&text)?;
            if p.is_some_and(|p| p != rf.p) {
                return Err(CliError::Usage(format!("--p {} does not match p = {} in {file}", p.unwrap(), rf.p)));
            }
            let rho = rf.to_rep(&w)?;
            let tp = twisted_alexander(&pres, &rho, None)?;
            let mut v = poly_json(&tp);
            v["special"] = verify_representation(&w, &rho, true)?.into();
            v["meridian_factor"] = rho.matrix(w.meridian()).char_det(1).canonicalize().to_string().into();
            Ok(v)
        }
        (None, true) => {
            let p = prime(p.ok_or_else(|| CliError::Usage("--enumerate needs --p".into()))?)?;
            let summary = enumerate_sl2_summary(&w, &config(p, budget))?;
            let target = target.map(|t| LaurentPoly::parse(&p, t)).transpose()?;
            if let Some(t) = &target {
                s.report.input("target", t.to_string());
            }
            let polys: Vec<TwistedPolynomial<Fp>> =
                summary.reps.par_iter().map(|r| twisted_alexander(&pres, r, None)).collect::<Result<_, _>>()?;
            let list: Vec<Value> = polys
                .iter()
                .enumerate()
                .map(|(i, tp)| {
                    let mut v = poly_json(tp);
                    v["index"] = i.into();
                    if let Some(t) = &target {
                        v["equals_target"] = tp.value.as_poly().is_some_and(|f| f.equal_up_to_units(t)).into();
                    }
                    v
                })
                .collect();
            let mut out = json!({
                "representations": list,
                "counts": {
                    "slice": summary.slice_count,
                    "slice_nonabelian": summary.slice_nonabelian,
                    "gl2_classes_nonabelian": summary.gl2_classes,
                    "sl2_classes_nonabelian": summary.sl2_classes,
                    "gl2_classes_all": summary.gl2_classes_all,
                    "sl2_classes_all": summary.sl2_classes_all,
                },
            });
            if target.is_some() {
                out["target_matches"] = list.iter().filter(|v| v["equals_target"] == true).count().into();
            }
            Ok(out)
        }
        (None, false) => Err(CliError::Usage("give --rep FILE, --rep trivial or --enumerate".into())),
    }
}

fn union_spec(s: &mut Session, u: &UnionArgs) -> Result<SymUnionSpec, CliError> {
    s.report.input("partial", u.partial.as_str());
    s.report.input("marks", u.marks.clone());
    s.report.input("twists", u.twists.clone());
    let partial = s.knot(&u.partial)?;
    let spec =
        SymUnionSpec::new(partial, u.marks.clone(), u.twists.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    if !spec.marks_share_face() {
        s.report.warnings.push(format!(
            "marked edges {:?} do not lie on one face of the partial diagram; the union is not a planar symmetric diagram",
            spec.marks
        ));
    }
    Ok(spec)
}

fn symun_build(s: &mut Session, u: &UnionArgs) -> Result<Value, CliError> {
    let spec = union_spec(s, u)?;
    let pd = symmetric_union_pd(&spec)?;
    let mut out = json!({
        "union_pd": pd.to_string(),
        "crossings": pd.len(),
        "planar": pd.is_planar(),
        "axis_on_right": spec.mark_sides(),
        "even": spec.is_even(),
        "alexander": classical_alexander(&pd).to_string(),
        "determinant": count(knot_determinant(&pd)),
        "partial_alexander": classical_alexander(&spec.partial).to_string(),
    });
    if spec.is_even() {
        let (sq, dsq) = alexander_square_check(&spec)?;
        let pres = build_symun_presentation(&spec)?;
        out["alexander_is_square"] = sq.into();
        out["determinant_is_square"] = dsq.into();
        out["union_presentation"] = pres.union.to_text().into();
        out["partial_presentation"] = pres.partial.to_text().into();
        out["phi"] = pres.phi.to_text().into();
    }
    Ok(out)
}

fn symun_verify(s: &mut Session, u: &UnionArgs, p: u64, trials: usize, budget: usize) -> Result<Value, CliError> {
    let spec = union_spec(s, u)?;
    s.report.input("p", p);
    s.report.input("trials", trials);
    if !spec.is_even() {
        return Err(CliError::Domain("verify needs even twist counts".into()));
    }
    let w = wirtinger(&spec.partial);
    let abelian = verify_theorem(&spec, &Representation::<Rational>::trivial(&(), w.n_gens()))?;
    let (sq, dsq) = alexander_square_check(&spec)?;
    let classes = enumerate_sl2(&w, &config(prime(p)?, budget))?;
    let reps: Vec<_> = fill_with_conjugates(&classes, trials).into_iter().take(trials).collect();
    let reports: Vec<TheoremReport<Fp>> =
        reps.par_iter().map(|r| verify_theorem(&spec, r)).collect::<Result<_, _>>()?;
    let holds = |r: &TheoremReport<Fp>| r.equal && r.degree_identity && r.longitude_killed;
    let violations = reports.iter().filter(|r| !holds(r)).count()
        + usize::from(!(abelian.equal && abelian.degree_identity))
        + usize::from(!(sq && dsq));
    if reps.len() < trials {
        s.report.warnings.push(format!("only {} representations available", reps.len()));
    }
    Ok(json!({
        "trivial_rep": theorem_json(&abelian),
        "alexander_is_square": sq,
        "determinant_is_square": dsq,
        "nonabelian_classes": classes.len(),
        "trials": reports.iter().map(theorem_json).collect::<Vec<_>>(),
        "violations": violations,
        "all_hold": violations == 0,
    }))
}

fn obstruct(
    s: &mut Session,
    knot: &str,
    candidate: &str,
    p: Option<u64>,
    rep: Option<&PathBuf>,
    genus: Option<u64>,
    budget: usize,
) -> Result<Value, CliError> {
    s.report.input("knot", knot);
    s.report.input("candidate", candidate);
    if let Some(p) = p {
        s.report.input("p", p);
    }
    if let Some(r) = rep {
        s.report.input("rep", r.display().to_string());
    }
    if let Some(g) = genus {
        s.report.input("genus", g);
    }
    s.report.assumed_context = ASSUMED_CONTEXT.iter().map(|c| c.to_string()).collect();
    let k = s.knot(knot)?;
    let c = s.knot(candidate)?;
    let q = even_symun_quick_obstructions(&k, &c, genus);
    let mut out = json!({
        "quick_checks": {
            "alexander_square": q.alexander_square,
            "degree_divisible_by_4": q.degree_divisible_by_4,
            "determinant_square": q.determinant_square,
            "genus_parity": q.genus_parity,
            "deg_knot": q.deg_k,
            "deg_candidate": q.deg_candidate,
            "all_pass": q.all_pass(),
        },
    });
    let mut obstructed = !q.all_pass();
    let mut verdict = if obstructed {
        format!("obstructed by the quick checks: {knot} is not an even symmetric union with partial knot {candidate}")
    } else {
        "the quick checks pass".to_string()
    };
    if let Some(p) = p {
        let p = prime(p)?;
        let wc = wirtinger(&c);
        let rhos = match rep {
            Some(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Domain(format!("{}: {e}", path.display())))?;
                let rho = RepFile::parse(&text)?.to_rep(&wc)?;
                if rho.ctx() != p || !verify_representation(&wc, &rho, true)? {
                    return Err(CliError::Domain("the candidate representation must be into SL(2, F_p)".into()));
                }
                vec![rho]
            }
            None => enumerate_sl2(&wc, &config(p, budget))?,
        };
        let verdicts = even_symun_obstruction_many(&k, &c, &rhos, &config(p, budget))?;
        let by_rep = verdicts.iter().any(|v| v.obstructed);
        if let Some(v) = verdicts.first() {
            out["knot_representations"] = json!({
                "slice_nonabelian": v.slice_nonabelian,
                "gl2_classes_nonabelian": v.gl2_classes,
                "sl2_classes_nonabelian": v.sl2_classes,
                "sl2_classes_all": v.sl2_classes_all,
                "polynomials": v.polynomials.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
            });
        }
        out["candidate_representations"] = verdicts
            .iter()
            .enumerate()
            .map(|(i, v)| json!({"index": i, "target": v.target.to_string(), "obstructed": v.obstructed, "matches": v.matches}))
            .collect::<Vec<_>>()
            .into();
        if by_rep && !obstructed {
            verdict = format!(
                "obstructed by twisted Alexander polynomials over F_{p}: {knot} is not an even symmetric union with partial knot {candidate}"
            );
        } else if !obstructed {
            verdict = format!("not obstructed over F_{p}");
        }
        obstructed |= by_rep;
    }
    out["obstructed"] = obstructed.into();
    out["verdict"] = verdict.into();
    Ok(out)
}

fn table_import(s: &mut Session, path: &Path, data_dir: &Path) -> Result<Value, CliError> {
    s.report.input("path", path.display().to_string());
    let mut t = KnotTable::load(path)?;
    s.report.warnings.extend(t.warnings.iter().cloned());
    let src = format!("imported from {}", path.display());
    t.provenance = if t.provenance.is_empty() { src } else { format!("{}; {src}", t.provenance) };
    std::fs::create_dir_all(data_dir).map_err(|e| CliError::Domain(format!("{}: {e}", data_dir.display())))?;
    let dest = data_dir.join("knots.csv");
    std::fs::write(&dest, t.to_csv()).map_err(|e| CliError::Domain(format!("{}: {e}", dest.display())))?;
    Ok(json!({ "entries": t.len(), "names": t.names(), "written": dest.display().to_string() }))
}
