#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use kawt::syntax::{BoolExpr, Program};

/// Every Boolean expression over `vars` with exactly `size` nodes.
pub fn bool_exprs(vars: &[&str], size: usize) -> Vec<BoolExpr> {
    let mut table: Vec<Vec<BoolExpr>> = vec![Vec::new()];
    for k in 1..=size {
        let mut out = Vec::new();
        if k == 1 {
            out.extend(vars.iter().map(|v| BoolExpr::var(*v)));
            out.push(BoolExpr::Zero);
            out.push(BoolExpr::One);
        } else {
            out.extend(table[k - 1].iter().cloned().map(BoolExpr::not));
            for i in 1..k - 1 {
                for a in &table[i] {
                    for b in &table[k - 1 - i] {
                        out.push(a.clone().and(b.clone()));
                        out.push(a.clone().or(b.clone()));
                    }
                }
            }
        }
        table.push(out);
    }
    table.swap_remove(size)
}

/// Every weighting-free program over the given variables with at most
/// `max_size` nodes.
pub fn programs_up_to(progs: &[&str], bools: &[&str], max_size: usize) -> Vec<Program> {
    let mut table: Vec<Vec<Program>> = vec![Vec::new()];
    for k in 1..=max_size {
        let mut out: Vec<Program> = Vec::new();
        if k == 1 {
            out.extend(progs.iter().map(|p| Program::atomic(*p)));
        }
        out.extend(bool_exprs(bools, k).into_iter().map(Program::test));
        out.extend(table[k - 1].iter().cloned().map(Program::star));
        for i in 1..k.saturating_sub(1) {
            for a in &table[i] {
                for b in &table[k - 1 - i] {
                    out.push(a.clone().plus(b.clone()));
                    out.push(a.clone().then(b.clone()));
                }
            }
        }
        table.push(out);
    }
    table.into_iter().flatten().collect()
}

fn eval_bool(b: &BoolExpr, env: &BTreeMap<String, bool>) -> bool {
    match b {
        BoolExpr::Var(v) => env[v],
        BoolExpr::Zero => false,
        BoolExpr::One => true,
        BoolExpr::And(x, y) => eval_bool(x, env) && eval_bool(y, env),
        BoolExpr::Or(x, y) => eval_bool(x, env) || eval_bool(y, env),
        BoolExpr::Not(x) => !eval_bool(x, env),
    }
}

/// Classical guarded strings as flat token vectors `[A0, p1, A1, …]`,
/// with atoms as sign bitmasks and program symbols as alphabet indices.
pub type Trace = Vec<u32>;

/// Unweighted guarded-string semantics of a weighting-free program, keeping
/// traces with at most `bound` program symbols.
pub fn classical_traces(p: &Program, bools: &[&str], progs: &[&str], bound: usize) -> BTreeSet<Trace> {
    let atoms: Vec<u32> = (0..1u32 << bools.len()).collect();
    let env = |a: u32| -> BTreeMap<String, bool> {
        bools
            .iter()
            .enumerate()
            .map(|(i, b)| (b.to_string(), a >> i & 1 == 1))
            .collect()
    };
    let steps = |t: &Trace| (t.len() - 1) / 2;
    let fuse = |x: &BTreeSet<Trace>, y: &BTreeSet<Trace>| -> BTreeSet<Trace> {
        let mut out = BTreeSet::new();
        for s in x {
            for t in y {
                if s.last() == t.first() && steps(s) + steps(t) <= bound {
                    let mut u = s.clone();
                    u.extend_from_slice(&t[1..]);
                    out.insert(u);
                }
            }
        }
        out
    };
    match p {
        Program::Atomic(name) => {
            let idx = progs.iter().position(|q| q == name).expect("declared program") as u32;
            if bound == 0 {
                return BTreeSet::new();
            }
            atoms
                .iter()
                .flat_map(|&a| atoms.iter().map(move |&b| vec![a, idx, b]))
                .collect()
        }
        Program::Test(b) => atoms
            .iter()
            .filter(|&&a| eval_bool(b, &env(a)))
            .map(|&a| vec![a])
            .collect(),
        Program::Weight(_) => panic!("weighting in classical oracle"),
        Program::Plus(x, y) => {
            let mut out = classical_traces(x, bools, progs, bound);
            out.extend(classical_traces(y, bools, progs, bound));
            out
        }
        Program::Seq(x, y) => fuse(
            &classical_traces(x, bools, progs, bound),
            &classical_traces(y, bools, progs, bound),
        ),
        Program::Star(x) => {
            let base = classical_traces(x, bools, progs, bound);
            let mut acc: BTreeSet<Trace> = atoms.iter().map(|&a| vec![a]).collect();
            loop {
                let next: BTreeSet<Trace> = acc.union(&fuse(&acc, &base)).cloned().collect();
                if next == acc {
                    return acc;
                }
                acc = next;
            }
        }
    }
}

/// A finite Kripke structure with unweighted program and Boolean labels.
#[derive(Clone, Debug)]
pub struct Kripke {
    pub states: usize,
    pub programs: BTreeMap<String, BTreeSet<(usize, usize)>>,
    pub booleans: BTreeMap<String, BTreeSet<usize>>,
}

/// Classical relational semantics with star as reflexive-transitive closure
/// by breadth-first search.
pub fn classical_relation(p: &Program, k: &Kripke) -> BTreeSet<(usize, usize)> {
    match p {
        Program::Atomic(a) => k.programs[a].clone(),
        Program::Test(b) => (0..k.states)
            .filter(|&s| {
                let env: BTreeMap<String, bool> = k
                    .booleans
                    .iter()
                    .map(|(name, set)| (name.clone(), set.contains(&s)))
                    .collect();
                eval_bool(b, &env)
            })
            .map(|s| (s, s))
            .collect(),
        Program::Weight(_) => panic!("weighting in classical oracle"),
        Program::Plus(x, y) => {
            let mut out = classical_relation(x, k);
            out.extend(classical_relation(y, k));
            out
        }
        Program::Seq(x, y) => {
            let r = classical_relation(x, k);
            let s = classical_relation(y, k);
            r.iter()
                .flat_map(|&(a, b)| s.iter().filter(move |&&(c, _)| c == b).map(move |&(_, d)| (a, d)))
                .collect()
        }
        Program::Star(x) => reflexive_transitive_closure(k.states, &classical_relation(x, k)),
    }
}

pub fn reflexive_transitive_closure(n: usize, r: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for start in 0..n {
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(s) = queue.pop_front() {
            out.insert((start, s));
            for &(a, b) in r {
                if a == s && !seen[b] {
                    seen[b] = true;
                    queue.push_back(b);
                }
            }
        }
    }
    out
}

/// All-pairs cheapest path weights over a weighted graph, by Floyd–Warshall.
/// `None` marks no path; the empty path costs 0.
pub fn min_plus_closure(weights: &[Vec<Option<u64>>]) -> Vec<Vec<Option<u64>>> {
    let n = weights.len();
    let mut d = weights.to_vec();
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (d[i][m], d[m][j]) {
                    if d[i][j].map_or(true, |c| a + b < c) {
                        d[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    d
}

/// Brute-force runs of the ski loop over the counter model: from state `n`,
/// either rent (cost 1, counter − 1) or buy (cost y, counter to 0) while
/// the counter is positive.
pub fn ski_runs_min(n: u64, y: u64) -> u64 {
    fn go(k: u64, y: u64) -> u64 {
        if k == 0 {
            return 0;
        }
        let rent = 1 + go(k - 1, y);
        // buying decrements then resets to 0
        let buy = y;
        rent.min(buy)
    }
    go(n, y)
}
