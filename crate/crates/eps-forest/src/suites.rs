//! Named property-check suites with seeded sampling, shared by the CLI and
//! the integration tests. Each suite reports pass/fail counts and the first
//! counterexample; suites whose preconditions an instance cannot meet are
//! refused rather than failed.

use std::collections::BTreeMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::antipode::{antipode, antipode_inverse, check_antipode_axioms, check_conv_nilpotency};
use crate::eps::{check_coassoc, check_cocycle, check_compat, EpsBialgebra, ForestAlgebra};
use crate::forest::{Alphabets, Decoration, Forest};
use crate::instances::{
    divided_diff_instance, foissy_instance, poly_instance, quiver_instance, trivial_instance,
    Monomial, Path, QuiverSpec, Word,
};
use crate::lincomb::LinComb;
use crate::operated::{
    broken_target, check_operated_morphism, collapse_target, identity_target, relabel_target,
};
use crate::prelie::{check_jacobi, check_prelie_identity, prelie, prelie_forest};
use crate::randgen::RandomForestGen;
use crate::rat::Rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Coassoc,
    Compat,
    Cocycle,
    Oracle,
    Nilpotency,
    Antipode,
    Prelie,
    Jacobi,
    Operated,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Coassoc,
        Suite::Compat,
        Suite::Cocycle,
        Suite::Oracle,
        Suite::Nilpotency,
        Suite::Antipode,
        Suite::Prelie,
        Suite::Jacobi,
        Suite::Operated,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Compat => "compat",
            Suite::Cocycle => "cocycle",
            Suite::Oracle => "oracle",
            Suite::Nilpotency => "nilpotency",
            Suite::Antipode => "antipode",
            Suite::Prelie => "prelie",
            Suite::Jacobi => "jacobi",
            Suite::Operated => "operated",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "coassoc" => Ok(Suite::Coassoc),
            "compat" => Ok(Suite::Compat),
            "cocycle" => Ok(Suite::Cocycle),
            "oracle" => Ok(Suite::Oracle),
            "nilpotency" => Ok(Suite::Nilpotency),
            "antipode" => Ok(Suite::Antipode),
            "prelie" => Ok(Suite::Prelie),
            "jacobi" => Ok(Suite::Jacobi),
            "operated" => Ok(Suite::Operated),
            "all" => Ok(Suite::All),
            other => Err(format!(
                "unknown suite `{other}` (expected coassoc, compat, cocycle, oracle, nilpotency, antipode, prelie, jacobi, operated or all)"
            )),
        }
    }
}

/// The instance a suite runs against. Forest-structure suites (cocycle,
/// oracle, operated) always run on forests regardless of this choice.
#[derive(Debug, Clone)]
pub enum InstanceKind {
    Forest,
    Poly(Rat),
    DivDiff,
    Quiver(QuiverSpec),
    Foissy,
    Trivial,
}

impl InstanceKind {
    pub fn label(&self) -> String {
        match self {
            InstanceKind::Forest => "forest".into(),
            InstanceKind::Poly(l) => format!("poly:{l}"),
            InstanceKind::DivDiff => "divdiff".into(),
            InstanceKind::Quiver(_) => "quiver".into(),
            InstanceKind::Foissy => "foissy".into(),
            InstanceKind::Trivial => "trivial".into(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub max_vertices: usize,
    pub alphabets: Alphabets,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            samples: 100,
            max_vertices: 6,
            alphabets: Alphabets::default_labels(),
        }
    }
}

/// Outcome of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
    /// Set when the instance cannot meet the suite's preconditions; the suite
    /// then ran zero checks and is neither a pass nor a failure.
    pub refusal: Option<String>,
}

impl SuiteReport {
    fn new(suite: &'static str) -> Self {
        SuiteReport { suite, passed: 0, failed: 0, counterexample: None, refusal: None }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.refusal.is_none()
    }

    pub fn refused(&self) -> bool {
        self.refusal.is_some()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = &self.refusal {
            return write!(f, "{}: refused — {}", self.suite, r);
        }
        write!(f, "{}: {}/{} pass", self.suite, self.passed, self.passed + self.failed)?;
        if let Some(c) = &self.counterexample {
            write!(f, "; first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// Runs a suite (or all of them) against the selected instance.
pub fn run(suite: Suite, kind: &InstanceKind, cfg: &SuiteConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::All => Suite::ALL.iter().map(|s| run_one(*s, kind, cfg)).collect(),
        s => vec![run_one(s, kind, cfg)],
    }
}

fn run_one(suite: Suite, kind: &InstanceKind, cfg: &SuiteConfig) -> SuiteReport {
    match suite {
        Suite::Cocycle => return cocycle_suite(cfg),
        Suite::Oracle => return oracle_suite(cfg),
        Suite::Operated => return operated_suite(cfg),
        _ => {}
    }
    match kind {
        InstanceKind::Forest => {
            let mut gen = RandomForestGen::new(cfg.seed, cfg.max_vertices, &cfg.alphabets);
            element_suite(suite, &Rc::new(ForestAlgebra), cfg, move || gen.forest())
        }
        InstanceKind::Poly(lambda) => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let max = cfg.max_vertices;
            let inst = Rc::new(poly_instance(lambda.clone()));
            element_suite(suite, &inst, cfg, move || Monomial(rng.gen_range(0..=max)))
        }
        InstanceKind::DivDiff => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let max = cfg.max_vertices;
            element_suite(suite, &Rc::new(divided_diff_instance()), cfg, move || {
                random_word(&mut rng, max)
            })
        }
        InstanceKind::Quiver(spec) => {
            let inst = match quiver_instance(spec.clone()) {
                Ok(q) => Rc::new(q),
                Err(e) => {
                    let mut r = SuiteReport::new(suite.name());
                    r.refusal = Some(format!("invalid quiver: {e}"));
                    return r;
                }
            };
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let spec = inst.spec.clone();
            let max = cfg.max_vertices;
            element_suite(suite, &inst, cfg, move || random_path(&mut rng, &spec, max))
        }
        InstanceKind::Foissy => {
            let ab = Alphabets::new(Vec::<String>::new(), [crate::instances::FOISSY_LABEL]).unwrap();
            let mut gen = RandomForestGen::new(cfg.seed, cfg.max_vertices, &ab);
            element_suite(suite, &Rc::new(foissy_instance()), cfg, move || gen.forest())
        }
        InstanceKind::Trivial => {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            let max = cfg.max_vertices;
            element_suite(suite, &Rc::new(trivial_instance()), cfg, move || {
                Monomial(rng.gen_range(0..=max))
            })
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, max_degree: usize) -> Word {
    let mut letters = Vec::new();
    let mut budget = rng.gen_range(0..=max_degree) as u32;
    while budget > 0 {
        let n = rng.gen_range(1..=budget);
        letters.push(n);
        budget -= n;
    }
    Word(letters)
}

fn random_path(rng: &mut ChaCha8Rng, spec: &QuiverSpec, max_len: usize) -> Path {
    let len = rng.gen_range(0..=max_len);
    if len == 0 || spec.arrows.is_empty() {
        let v = &spec.vertices[rng.gen_range(0..spec.vertices.len())];
        return Path::Vertex(v.clone());
    }
    let mut arrows = Vec::new();
    let first = &spec.arrows[rng.gen_range(0..spec.arrows.len())];
    arrows.push(first.name.clone());
    let mut at = first.tgt.clone();
    for _ in 1..len {
        let next: Vec<_> = spec.arrows.iter().filter(|a| a.src == at).collect();
        if next.is_empty() {
            break;
        }
        let a = next[rng.gen_range(0..next.len())];
        arrows.push(a.name.clone());
        at = a.tgt.clone();
    }
    Path::Arrows(arrows)
}

fn element_suite<I>(
    suite: Suite,
    inst: &Rc<I>,
    cfg: &SuiteConfig,
    mut sample: impl FnMut() -> I::Basis,
) -> SuiteReport
where
    I: EpsBialgebra + 'static,
{
    let mut report = SuiteReport::new(suite.name());
    match suite {
        Suite::Coassoc => {
            for _ in 0..cfg.samples {
                let a = sample();
                let w = check_coassoc(&**inst, &a);
                report.record(w.passed(), || format!("element {a}"));
            }
        }
        Suite::Compat => {
            for _ in 0..cfg.samples {
                let a = sample();
                let b = sample();
                let w = check_compat(&**inst, &a, &b);
                report.record(w.passed(), || format!("pair ({a}, {b})"));
            }
        }
        Suite::Nilpotency => {
            for _ in 0..cfg.samples {
                let a = sample();
                match inst.nilpotency_bound(&a) {
                    Some(n) => {
                        let ok = check_conv_nilpotency(inst.clone(), &a, n);
                        report.record(ok, || format!("element {a} with bound {n}"));
                    }
                    None => {
                        report.refusal = Some(format!(
                            "instance is not locally nilpotent (no bound at `{a}`)"
                        ));
                        return report;
                    }
                }
            }
        }
        Suite::Antipode => {
            for _ in 0..cfg.samples {
                let a = sample();
                match check_antipode_axioms(&**inst, &a) {
                    Ok(w) => {
                        let basis = LinComb::basis(a.clone());
                        let round = antipode(&**inst, &antipode_inverse(&**inst, &basis).unwrap())
                            .unwrap();
                        report.record(w.passed() && round == basis, || format!("element {a}"));
                    }
                    Err(e) => {
                        report.refusal = Some(e.to_string());
                        return report;
                    }
                }
            }
        }
        Suite::Prelie => {
            for _ in 0..cfg.samples {
                let (a, b, c) = (sample(), sample(), sample());
                let w = check_prelie_identity(
                    &**inst,
                    &LinComb::basis(a.clone()),
                    &LinComb::basis(b.clone()),
                    &LinComb::basis(c.clone()),
                );
                report.record(w.passed(), || format!("triple ({a}, {b}, {c})"));
            }
        }
        Suite::Jacobi => {
            for _ in 0..cfg.samples {
                let (a, b, c) = (sample(), sample(), sample());
                let w = check_jacobi(
                    &**inst,
                    &LinComb::basis(a.clone()),
                    &LinComb::basis(b.clone()),
                    &LinComb::basis(c.clone()),
                );
                report.record(w.passed(), || format!("triple ({a}, {b}, {c})"));
            }
        }
        Suite::Cocycle | Suite::Oracle | Suite::Operated | Suite::All => unreachable!(),
    }
    report
}

fn cocycle_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Cocycle.name());
    let mut gen = RandomForestGen::new(cfg.seed, cfg.max_vertices, &cfg.alphabets);
    let omegas: Vec<Decoration> = cfg.alphabets.omega_labels().map(Decoration::omega).collect();
    if omegas.is_empty() {
        report.refusal = Some("no Omega labels declared".into());
        return report;
    }
    for _ in 0..cfg.samples {
        let f = gen.forest();
        for omega in &omegas {
            let w = check_cocycle(omega, &LinComb::basis(f.clone())).expect("Omega label");
            report.record(w.passed(), || format!("B+_{omega} at {f}"));
        }
    }
    report
}

fn oracle_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Oracle.name());
    let mut gen = RandomForestGen::new(cfg.seed, cfg.max_vertices, &cfg.alphabets);
    for _ in 0..cfg.samples {
        let f = gen.forest();
        let comb = crate::eps::forest_coproduct(&f);
        let rec = crate::eps::forest_coproduct_recursive(&f);
        report.record(comb == rec, || format!("forest {f}"));
        // The biideal pre-Lie formula is oracle-checked on the same stream.
        let g = gen.forest();
        let fast = prelie_forest(&f, &g);
        let generic = prelie(&ForestAlgebra, &LinComb::basis(f.clone()), &LinComb::basis(g.clone()));
        report.record(fast == generic, || format!("pre-Lie pair ({f}, {g})"));
    }
    report
}

fn operated_suite(cfg: &SuiteConfig) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Operated.name());
    let mut gen = RandomForestGen::new(cfg.seed, cfg.max_vertices, &cfg.alphabets);
    let sample: Vec<Forest> = (0..cfg.samples.min(40)).map(|_| gen.forest()).collect();
    let xs: Vec<String> = cfg.alphabets.x_labels().map(str::to_string).collect();
    let mut relabel = BTreeMap::new();
    if xs.len() >= 2 {
        relabel.insert(xs[0].clone(), xs[1].clone());
    }
    let id = identity_target(&cfg.alphabets);
    let rel = relabel_target(&cfg.alphabets, &relabel);
    let col = collapse_target(&cfg.alphabets);
    match check_operated_morphism(&id, &sample) {
        Ok(fail) => report.record(fail.is_none(), || {
            format!("identity target: {}", fail.map(|f| f.forest.to_string()).unwrap_or_default())
        }),
        Err(e) => report.record(false, || e.to_string()),
    }
    match check_operated_morphism(&rel, &sample) {
        Ok(fail) => report.record(fail.is_none(), || {
            format!("relabel target: {}", fail.map(|f| f.forest.to_string()).unwrap_or_default())
        }),
        Err(e) => report.record(false, || e.to_string()),
    }
    match check_operated_morphism(&col, &sample) {
        Ok(fail) => report.record(fail.is_none(), || {
            format!("collapse target: {}", fail.map(|f| f.forest.to_string()).unwrap_or_default())
        }),
        Err(e) => report.record(false, || e.to_string()),
    }
    // The broken target must be rejected.
    let broken_caught = matches!(check_operated_morphism(&broken_target(&cfg.alphabets), &sample), Ok(Some(_)));
    report.record(broken_caught, || "broken target went undetected".to_string());
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::test_quiver;

    fn cfg(samples: usize) -> SuiteConfig {
        SuiteConfig { seed: 42, samples, max_vertices: 5, ..SuiteConfig::default() }
    }

    #[test]
    fn all_suites_green_on_forests() {
        for report in run(Suite::All, &InstanceKind::Forest, &cfg(25)) {
            assert!(report.ok(), "{report}");
        }
    }

    #[test]
    fn weighted_poly_suites() {
        let kind = InstanceKind::Poly(Rat::new(3, 2));
        for s in [Suite::Coassoc, Suite::Compat, Suite::Prelie, Suite::Jacobi] {
            let r = &run(s, &kind, &cfg(30))[0];
            assert!(r.ok(), "{r}");
        }
        // Nonzero weight refuses the antipode and nilpotency suites.
        assert!(run(Suite::Antipode, &kind, &cfg(5))[0].refused());
        assert!(run(Suite::Nilpotency, &kind, &cfg(5))[0].refused());
    }

    #[test]
    fn quiver_and_divdiff_suites() {
        for kind in [InstanceKind::Quiver(test_quiver()), InstanceKind::DivDiff] {
            for s in [Suite::Coassoc, Suite::Compat, Suite::Nilpotency, Suite::Antipode, Suite::Jacobi] {
                let r = &run(s, &kind, &cfg(20))[0];
                assert!(r.ok(), "{} on {}: {r}", s.name(), kind.label());
            }
        }
    }

    #[test]
    fn foissy_refuses_antipode() {
        let r = &run(Suite::Antipode, &InstanceKind::Foissy, &cfg(5))[0];
        assert!(r.refused());
        let r = &run(Suite::Compat, &InstanceKind::Foissy, &cfg(30))[0];
        assert!(r.ok(), "{r}");
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run(Suite::All, &InstanceKind::Forest, &cfg(10));
        let b = run(Suite::All, &InstanceKind::Forest, &cfg(10));
        let fmt = |rs: &[SuiteReport]| rs.iter().map(|r| r.to_string()).collect::<Vec<_>>();
        assert_eq!(fmt(&a), fmt(&b));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
