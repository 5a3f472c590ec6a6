use std::collections::{BTreeMap, BTreeSet};
use std::fmt::{Display, Write};
use std::fs;
use std::path::{Path, PathBuf};

use kawt::equivalence::{
    bounded_equiv, equiv_under_zero_hypotheses, model_equiv, ski_case_study, ski_hypotheses, ski_valuation, EquivError,
    EquivVerdict, Hypothesis,
};
use kawt::guarded::{canonical_valuation, check_tau_iso, gt_interpret, theta, GuardedAlphabet, Valuation, ValuationError};
use kawt::psg::{check_psg_axioms, check_function_algebra_laws, PartialSemigroup};
use kawt::relational::{check_lifted_laws, interpret, parse_model_file, AnyModel, EvalError, TransitionSystem};
use kawt::semiring::{check_semiring_axioms, SaturatingSub};
use kawt::syntax::{parse_equations_file, parse_program_file, ski, ProgramFile, Signature};
use kawt::{Boolean, Lukasiewicz, Report, Semiring, SemiringKind, Tropical};

use crate::Suite;

/// Exit status of a command that ran to completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Different = 3,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn input(message: impl Display) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

fn evaluation(message: impl Display) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

impl From<EvalError> for Failure {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Star(_) => evaluation(e),
            EvalError::Unlabeled { .. } => input(e),
        }
    }
}

impl From<ValuationError> for Failure {
    fn from(e: ValuationError) -> Self {
        input(e)
    }
}

impl From<EquivError> for Failure {
    fn from(e: EquivError) -> Self {
        match e {
            EquivError::Eval(e) => e.into(),
            EquivError::Valuation(e) => e.into(),
            EquivError::HypothesisViolated { .. } => input(e),
        }
    }
}

type Outcome = Result<Status, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))
}

fn load_program(path: &Path) -> Result<ProgramFile, Failure> {
    parse_program_file(&read(path)?).map_err(|e| input(format!("{}:{e}", path.display())))
}

fn load_model(path: &Path) -> Result<AnyModel, Failure> {
    let name = path.file_name().map_or_else(|| "model".into(), |n| n.to_string_lossy().into_owned());
    parse_model_file(&read(path)?)
        .map(|m| m.named(name))
        .map_err(|e| input(format!("{}: {e}", path.display())))
}

pub fn check(path: &Path, out: &mut String) -> Outcome {
    let file = load_program(path)?;
    writeln!(out, "{}", file.program).unwrap();
    Ok(Status::Success)
}

fn eval_in<S: Semiring>(file: &ProgramFile, m: &TransitionSystem<S>, cap: Option<usize>, out: &mut String) -> Outcome {
    m.covers(&file.signature).map_err(input)?;
    let r = interpret(&file.program, m, cap)?;
    writeln!(out, "semiring {}, {} states", S::NAME, m.len()).unwrap();
    out.push_str(&r.render(m.states()));
    Ok(Status::Success)
}

pub fn eval(program: &Path, model: &Path, cap: Option<usize>, out: &mut String) -> Outcome {
    let file = load_program(program)?;
    match load_model(model)? {
        AnyModel::Bool(m) => eval_in(&file, &m, cap, out),
        AnyModel::Tropical(m) => eval_in(&file, &m, cap, out),
        AnyModel::Lukasiewicz(m) => eval_in(&file, &m, cap, out),
    }
}

/// Given weights, with undeclared names rejected and the rest defaulting to
/// `i + 1` for the `i`-th declared weighting variable when `fill` is set.
fn weight_map(sig: &Signature, given: &[(String, u64)], fill: bool) -> Result<BTreeMap<String, u64>, Failure> {
    let mut map = BTreeMap::new();
    if fill {
        for (i, f) in sig.weightings().iter().enumerate() {
            map.insert(f.clone(), i as u64 + 1);
        }
    }
    for (name, w) in given {
        if sig.weighting_index(name).is_none() {
            return Err(input(format!("`{name}` is not a declared weighting variable")));
        }
        map.insert(name.clone(), *w);
    }
    Ok(map)
}

pub fn optimal(
    path: &Path,
    weights: &[(String, u64)],
    from: &str,
    bound: Option<usize>,
    out: &mut String,
) -> Outcome {
    let file = load_program(path)?;
    let v = canonical_valuation(&file.signature, &weight_map(&file.signature, weights, false)?)?;
    let al = v.alphabet();
    let start: BTreeSet<_> = al
        .parse_atom_spec(from)
        .map_err(|e| input(format!("--from: {e}")))?
        .into_iter()
        .collect();
    let exact = file.program.max_trace_len();
    let bound = bound.or(exact).unwrap_or(8);
    let g = gt_interpret(&file.program, &v, bound)?;
    let table = theta(&g, &start);
    let scope = match exact {
        Some(k) if k <= bound => "exact",
        Some(_) => "truncated",
        None => "truncated, program has a star",
    };
    let starts: Vec<String> = start.iter().map(|&a| al.render_atom(a)).collect();
    writeln!(out, "from {} (bound {bound}, {scope})", if starts.is_empty() { "no atoms".into() } else { starts.join(", ") })
        .unwrap();
    for a in al.atoms() {
        let w = table.get(&a).map_or("unreachable".to_string(), u64::to_string);
        writeln!(out, "{}: {w}", al.render_atom(a)).unwrap();
    }
    Ok(Status::Success)
}

pub enum EquivMethod {
    Bounded { bound: usize, weights: Vec<(String, u64)> },
    Models { dir: PathBuf, cap: Option<usize> },
}

fn load_hypotheses(paths: &[PathBuf], sig: &Signature) -> Result<Vec<Hypothesis>, Failure> {
    let mut hyps = Vec::new();
    for path in paths {
        let file = parse_equations_file(&read(path)?, sig).map_err(|e| input(format!("{}:{e}", path.display())))?;
        for (lhs, rhs) in file.equations {
            sig.check(&lhs)
                .map_err(|e| input(format!("{}: hypothesis `{lhs}`: {e}", path.display())))?;
            hyps.push(Hypothesis::new(lhs, rhs).map_err(|e| input(format!("{}: {e}", path.display())))?);
        }
    }
    Ok(hyps)
}

fn load_models(dir: &Path) -> Result<Vec<AnyModel>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| input(format!("{}: {e}", dir.display())))?;
    let mut paths = Vec::new();
    for entry in entries {
        let entry = entry.map_err(|e| input(format!("{}: {e}", dir.display())))?;
        let hidden = entry.file_name().to_string_lossy().starts_with('.');
        if entry.path().is_file() && !hidden {
            paths.push(entry.path());
        }
    }
    paths.sort();
    if paths.is_empty() {
        return Err(input(format!("{}: no model files", dir.display())));
    }
    paths.iter().map(|p| load_model(p)).collect()
}

fn same_kind<S, F>(models: Vec<AnyModel>, pick: F) -> Result<Vec<TransitionSystem<S>>, Failure>
where
    F: Fn(AnyModel) -> Result<TransitionSystem<S>, SemiringKind>,
{
    models
        .into_iter()
        .map(|m| {
            pick(m).map_err(|k| input(format!("models mix semirings; found one over {k}")))
        })
        .collect()
}

fn report_verdict(v: &EquivVerdict, out: &mut String) -> Status {
    writeln!(out, "{v}").unwrap();
    if v.equal {
        Status::Success
    } else {
        Status::Different
    }
}

pub fn equiv(left: &Path, right: &Path, hyp_paths: &[PathBuf], method: EquivMethod, out: &mut String) -> Outcome {
    let p = load_program(left)?;
    let q = load_program(right)?;
    if p.signature != q.signature {
        return Err(input(format!(
            "{} and {} declare different signatures",
            left.display(),
            right.display()
        )));
    }
    let sig = &p.signature;
    let hyps = load_hypotheses(hyp_paths, sig)?;
    match method {
        EquivMethod::Bounded { bound, weights } => {
            let v: Valuation = canonical_valuation(sig, &weight_map(sig, &weights, true)?)?;
            let verdict = equiv_under_zero_hypotheses(&p.program, &q.program, &hyps, &v, bound)?;
            Ok(report_verdict(&verdict, out))
        }
        EquivMethod::Models { dir, cap } => {
            let models = load_models(&dir)?;
            let kind = models[0].kind();
            let verdict = match kind {
                SemiringKind::Bool => {
                    let ms = same_kind(models, |m| if let AnyModel::Bool(m) = m { Ok(m) } else { Err(m.kind()) })?;
                    covers(&ms, sig)?;
                    model_equiv::<Boolean>(&p.program, &q.program, &hyps, &ms, cap)?
                }
                SemiringKind::Tropical => {
                    let ms = same_kind(models, |m| if let AnyModel::Tropical(m) = m { Ok(m) } else { Err(m.kind()) })?;
                    covers(&ms, sig)?;
                    model_equiv::<Tropical>(&p.program, &q.program, &hyps, &ms, cap)?
                }
                SemiringKind::Lukasiewicz => {
                    let ms = same_kind(models, |m| if let AnyModel::Lukasiewicz(m) = m { Ok(m) } else { Err(m.kind()) })?;
                    covers(&ms, sig)?;
                    model_equiv::<Lukasiewicz>(&p.program, &q.program, &hyps, &ms, cap)?
                }
            };
            writeln!(out, "semiring {kind}").unwrap();
            Ok(report_verdict(&verdict, out))
        }
    }
}

fn covers<S: Semiring>(models: &[TransitionSystem<S>], sig: &Signature) -> Result<(), Failure> {
    models.iter().try_for_each(|m| m.covers(sig).map_err(input))
}

fn per_semiring(choice: Option<SemiringKind>, default: &[SemiringKind]) -> Vec<SemiringKind> {
    choice.map_or_else(|| default.to_vec(), |k| vec![k])
}

fn small_alphabet() -> GuardedAlphabet {
    GuardedAlphabet::new(["b"], ["p"]).expect("one Boolean")
}

pub fn axioms(
    suite: Suite,
    seed: u64,
    samples: Option<usize>,
    semiring: Option<SemiringKind>,
    mutant: bool,
    out: &mut String,
) -> Outcome {
    let default_samples = match suite {
        Suite::Semiring | Suite::Lifted => 500,
        Suite::Psg => 0,
        Suite::Thm1 => 300,
        Suite::Thm2 => 200,
    };
    let samples = samples.unwrap_or(default_samples);
    let all = SemiringKind::ALL;
    let weighted = [SemiringKind::Tropical, SemiringKind::Lukasiewicz];
    let mut reports: Vec<Report> = Vec::new();
    match (suite, mutant) {
        (Suite::Semiring, false) => {
            for k in per_semiring(semiring, &all) {
                reports.push(match k {
                    SemiringKind::Bool => check_semiring_axioms::<Boolean>(samples, seed),
                    SemiringKind::Tropical => check_semiring_axioms::<Tropical>(samples, seed),
                    SemiringKind::Lukasiewicz => check_semiring_axioms::<Lukasiewicz>(samples, seed),
                });
            }
        }
        (Suite::Semiring, true) => reports.push(check_semiring_axioms::<SaturatingSub>(samples, seed)),
        (Suite::Lifted, false) => {
            for k in per_semiring(semiring, &all) {
                for size in 1..=3 {
                    reports.push(match k {
                        SemiringKind::Bool => check_lifted_laws::<Boolean>(size, samples, seed),
                        SemiringKind::Tropical => check_lifted_laws::<Tropical>(size, samples, seed),
                        SemiringKind::Lukasiewicz => check_lifted_laws::<Lukasiewicz>(size, samples, seed),
                    });
                }
            }
        }
        (Suite::Lifted, true) => reports.push(check_lifted_laws::<SaturatingSub>(2, samples, seed)),
        (Suite::Psg, false) => {
            let instances = [
                PartialSemigroup::cart(3),
                PartialSemigroup::gu(&small_alphabet(), 2),
                PartialSemigroup::str_bounded(2, 3),
            ];
            reports.extend(instances.iter().map(check_psg_axioms));
        }
        (Suite::Psg, true) => reports.push(check_psg_axioms(&PartialSemigroup::one_sided_associative())),
        (Suite::Thm1, false) => {
            let instances = [PartialSemigroup::cart(3), PartialSemigroup::gu(&small_alphabet(), 2)];
            for p in &instances {
                for k in per_semiring(semiring, &weighted) {
                    reports.push(match k {
                        SemiringKind::Bool => check_function_algebra_laws::<Boolean>(p, samples, seed),
                        SemiringKind::Tropical => check_function_algebra_laws::<Tropical>(p, samples, seed),
                        SemiringKind::Lukasiewicz => check_function_algebra_laws::<Lukasiewicz>(p, samples, seed),
                    });
                }
            }
        }
        (Suite::Thm1, true) => reports.push(check_function_algebra_laws::<SaturatingSub>(&PartialSemigroup::cart(2), samples, seed)),
        (Suite::Thm2, false) => {
            reports.push(check_tau_iso(&small_alphabet(), 3, samples, seed));
            let two = GuardedAlphabet::new(["a", "b"], ["p"]).expect("two Booleans");
            reports.push(check_tau_iso(&two, 2, samples, seed));
        }
        (Suite::Thm2, true) => return Err(input("the thm2 suite has no mutant instance")),
    }
    writeln!(out, "suite {}, seed {seed}, samples {samples}", suite_name(suite)).unwrap();
    let mut failed = 0;
    for r in &reports {
        writeln!(out, "{r}").unwrap();
        failed += usize::from(!r.passed());
    }
    writeln!(out, "{} report(s), {failed} with violations", reports.len()).unwrap();
    Ok(if failed == 0 { Status::Success } else { Status::Different })
}

pub fn ski_demo(n: usize, y: u64, out: &mut String) -> Outcome {
    let (loop_program, denested, star_free) = ski::build_ski_programs(n);
    let bound = 2 * n + 4;
    let v = ski_valuation(y);
    writeln!(out, "loop        {loop_program}").unwrap();
    writeln!(out, "denested    {denested}").unwrap();
    writeln!(out, "star-free   {star_free}").unwrap();
    writeln!(out).unwrap();
    writeln!(out, "{}", ski_case_study(n, y)).unwrap();
    writeln!(out).unwrap();
    let denesting = bounded_equiv(&loop_program, &denested, &v, bound)?;
    writeln!(out, "loop vs denested: {denesting}").unwrap();
    let plain = bounded_equiv(&denested, &star_free, &v, bound)?;
    writeln!(out, "denested vs star-free: {plain}").unwrap();
    let conditioned = equiv_under_zero_hypotheses(&denested, &star_free, &ski_hypotheses(n), &v, bound)?;
    writeln!(out, "denested vs star-free under hypotheses: {conditioned}").unwrap();
    Ok(Status::Success)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Semiring => "semiring",
        Suite::Lifted => "lifted",
        Suite::Psg => "psg",
        Suite::Thm1 => "thm1",
        Suite::Thm2 => "thm2",
    }
}
