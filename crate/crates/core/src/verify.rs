//! Property suites run against a single graph.
//!
//! Each check is named after the invariant it exercises and reports pass,
//! fail or skip. Attribute sets are enumerated exhaustively for `n <= 6`
//! and sampled with a seeded ChaCha8 generator otherwise.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::approximation::{
    approximate, degree_of_dependency, is_exact, positive_region, positive_region_quantified,
    rough_membership,
};
use crate::automorphism::{automorphism_generators, brute_force_automorphisms};
use crate::automorphism::{
    orbits, orbits_brute_force, GeneratorSet, OrbitPartition, DEFAULT_ORACLE_BOUND,
};
use crate::discernibility::{
    discernibility_matrix, discernibility_matrix_from_table, eqdm, same_orbit_structure,
    verify_eqdm_equals_ess,
};
use crate::error::Result;
use crate::graph::Graph;
use crate::indiscernibility::{
    classify_vertices, indiscernibility_partition, indiscernibility_partition_pairwise,
    indiscernible, information_table,
};
use crate::reduct::{
    core, enumerate_reducts, essential_sets, exhaustive_essential_sets, exhaustive_reducts,
    is_dispensable, DEFAULT_SUBSET_BOUND,
};
use crate::vertex_set::VertexSet;

/// Graphs up to this order get every attribute set and target checked.
const EXHAUSTIVE_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Partitions,
    Approximations,
    Reducts,
    Essentials,
    Discernibility,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::All,
        Suite::Partitions,
        Suite::Approximations,
        Suite::Reducts,
        Suite::Essentials,
        Suite::Discernibility,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Partitions => "partitions",
            Suite::Approximations => "approximations",
            Suite::Reducts => "reducts",
            Suite::Essentials => "essentials",
            Suite::Discernibility => "discernibility",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} {}", self.name)?;
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub seed: u64,
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let count = |s| self.checks.iter().filter(|c| c.status == s).count();
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skip)
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Random attribute sets and targets drawn when not exhaustive.
    pub samples: usize,
    pub oracle_bound: usize,
    pub subset_bound: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            samples: 50,
            oracle_bound: DEFAULT_ORACLE_BOUND,
            subset_bound: DEFAULT_SUBSET_BOUND,
        }
    }
}

type Outcome = std::result::Result<String, String>;

fn check(name: &str, outcome: Outcome) -> Check {
    let (status, detail) = match outcome {
        Ok(d) => (Status::Pass, d),
        Err(d) => (Status::Fail, d),
    };
    Check {
        name: name.to_string(),
        status,
        detail,
    }
}

fn skip(name: &str, reason: &str) -> Check {
    Check {
        name: name.to_string(),
        status: Status::Skip,
        detail: reason.to_string(),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Uniformly random subset of `0..n`.
pub fn random_subset<R: Rng + ?Sized>(n: usize, rng: &mut R) -> VertexSet {
    VertexSet::from_sorted((0..n).filter(|_| rng.gen_bool(0.5)).collect())
}

/// Every subset for small `n`; otherwise `∅`, `V` and `samples` random sets.
pub fn subsets_or_sample<R: Rng + ?Sized>(n: usize, samples: usize, rng: &mut R) -> Vec<VertexSet> {
    if n <= EXHAUSTIVE_ORDER {
        return (0..1u64 << n).map(|b| VertexSet::from_bits(b, n)).collect();
    }
    let mut out = vec![VertexSet::new(), VertexSet::full(n)];
    out.extend((0..samples).map(|_| random_subset(n, rng)));
    out
}

fn fmt_ens(ens: &[usize]) -> String {
    let parts: Vec<String> = ens.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

/// The two parts when `g` is complete bipartite with two distinct orbits.
fn bipartite_parts(g: &Graph, op: &OrbitPartition) -> Option<(VertexSet, VertexSet)> {
    if op.k() != 2 {
        return None;
    }
    let (v1, v2) = (&op.orbits()[0], &op.orbits()[1]);
    let complete = v1.iter().all(|u| v2.iter().all(|v| g.has_edge(u, v)));
    (complete && g.m() == v1.len() * v2.len()).then(|| (v1.clone(), v2.clone()))
}

struct Ctx<'g> {
    g: &'g Graph,
    op: OrbitPartition,
    gens: GeneratorSet,
    rng: ChaCha8Rng,
    opts: VerifyOptions,
    attrs: Vec<VertexSet>,
    n: usize,
}

/// Runs `suite` against `g`. Fails with [`crate::Error::SizeLimit`] when the graph
/// exceeds a bound the suite needs.
pub fn verify(g: &Graph, suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let attrs = subsets_or_sample(g.n(), opts.samples, &mut rng);
    let mut ctx = Ctx {
        g,
        op: orbits(g),
        gens: automorphism_generators(g),
        rng,
        opts: opts.clone(),
        attrs,
        n: g.n(),
    };
    let mut checks = Vec::new();
    if suite.includes(Suite::Partitions) {
        checks.extend(ctx.partitions()?);
    }
    if suite.includes(Suite::Approximations) {
        checks.extend(ctx.approximations());
    }
    if suite.includes(Suite::Reducts) {
        checks.extend(ctx.reducts()?);
    }
    if suite.includes(Suite::Essentials) {
        checks.extend(ctx.essentials()?);
    }
    if suite.includes(Suite::Discernibility) {
        checks.extend(ctx.discernibility());
    }
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Ok(VerifyReport {
        suite,
        seed: opts.seed,
        passed,
        checks,
    })
}

impl Ctx<'_> {
    fn targets(&mut self) -> Vec<VertexSet> {
        let (n, samples) = (self.n, self.opts.samples);
        subsets_or_sample(n, samples, &mut self.rng)
    }

    fn partitions(&mut self) -> Result<Vec<Check>> {
        let mut out = Vec::new();
        let (g, op, n) = (self.g, &self.op, self.n);

        let brute = orbits_brute_force(g, self.opts.oracle_bound)?;
        let order = brute_force_automorphisms(g, self.opts.oracle_bound)?.group_order;
        out.push(check(
            "automorphism.search_matches_brute_force",
            ensure(brute == *op && order == self.gens.group_order, || {
                format!(
                    "search k={} order={:?}, brute k={} order={:?}",
                    op.k(),
                    self.gens.group_order,
                    brute.k(),
                    order
                )
            })
            .map(|_| {
                format!(
                    "k={} |Aut|={}",
                    op.k(),
                    order.map_or("?".into(), |o| o.to_string())
                )
            }),
        ));

        let table = information_table(op);
        out.push(check(
            "indiscernibility.fast_path_matches_definition",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let fast = indiscernibility_partition(op, a);
                    ensure(
                        fast == indiscernibility_partition_pairwise(op, a)
                            && fast == table.partition_by_rows(a),
                        || format!("A={a}"),
                    )
                })
                .map(|_| format!("{} attribute sets", self.attrs.len())),
        ));

        let mut converse_failures = 0;
        out.push(check(
            "indiscernibility.same_orbit_implies_indiscernible",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    for x in 0..n {
                        for y in 0..n {
                            let ind = indiscernible(op, x, y, a).expect("in range");
                            ensure(!op.same_orbit(x, y) || ind, || format!("A={a} x={x} y={y}"))?;
                            if ind && !op.same_orbit(x, y) {
                                converse_failures += 1;
                            }
                        }
                    }
                    Ok(())
                })
                .map(|_| format!("converse fails on {converse_failures} ordered pairs")),
        ));

        out.push(check(
            "indiscernibility.automorphism_invariance",
            self.gens
                .generators
                .iter()
                .try_for_each(|eta| {
                    self.attrs.iter().try_for_each(|a| {
                        let image = eta.apply_to_set(a);
                        ensure(
                            indiscernibility_partition(op, a)
                                == indiscernibility_partition(op, &image),
                            || format!("eta={eta} A={a}"),
                        )
                    })
                })
                .map(|_| format!("{} generators", self.gens.generators.len())),
        ));

        out.push(check(
            "indiscernibility.interior_exterior_duality",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let c = classify_vertices(op, a);
                    let d = classify_vertices(op, &a.complement(n));
                    ensure(
                        c.interior == d.exterior && c.delimiting == d.delimiting,
                        || format!("A={a}"),
                    )
                })
                .map(|_| String::new()),
        ));

        out.push(check(
            "indiscernibility.exterior_is_block",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let ext = classify_vertices(op, a).exterior;
                    let gamma = indiscernibility_partition(op, a);
                    ensure(ext.is_empty() || gamma.blocks().contains(&ext), || {
                        format!("A={a}")
                    })
                })
                .map(|_| String::new()),
        ));

        out.push(check(
            "indiscernibility.orbit_rule_on_interior_and_delimiting",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let c = classify_vertices(op, a);
                    let inside = c.interior.union(&c.delimiting);
                    for x in inside.iter() {
                        for y in inside.iter() {
                            let ind = indiscernible(op, x, y, a).expect("in range");
                            ensure(ind == op.same_orbit(x, y), || format!("A={a} x={x} y={y}"))?;
                        }
                    }
                    Ok(())
                })
                .map(|_| String::new()),
        ));

        let mut pairs = Vec::new();
        for a in &self.attrs {
            let sub = VertexSet::from_sorted(a.iter().filter(|_| self.rng.gen_bool(0.5)).collect());
            pairs.push((sub, a.clone()));
        }
        out.push(check(
            "indiscernibility.refinement_monotone",
            pairs
                .iter()
                .try_for_each(|(a1, a2)| {
                    let finer = indiscernibility_partition(op, a2);
                    let coarser = indiscernibility_partition(op, a1);
                    ensure(finer.refines(&coarser).expect("same n"), || {
                        format!("A1={a1} A2={a2}")
                    })
                })
                .map(|_| String::new()),
        ));

        out.push(check(
            "indiscernibility.orbits_are_finest",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let gamma = indiscernibility_partition(op, a);
                    ensure(op.to_partition().refines(&gamma).expect("same n"), || {
                        format!("A={a}")
                    })
                })
                .map(|_| String::new()),
        ));
        Ok(out)
    }

    fn approximations(&mut self) -> Vec<Check> {
        let targets = self.targets();
        let (g, op, n) = (self.g, &self.op, self.n);
        let full = VertexSet::full(n);
        let attrs = &self.attrs;
        let mut out = Vec::new();
        let each = |f: &mut dyn FnMut(
            &VertexSet,
            &VertexSet,
        ) -> std::result::Result<(), String>|
         -> Outcome {
            for a in attrs {
                for q in &targets {
                    f(a, q)?;
                }
            }
            Ok(format!(
                "{} attribute sets x {} targets",
                attrs.len(),
                targets.len()
            ))
        };

        out.push(check(
            "approximation.sandwich",
            each(&mut |a, q| {
                let r = approximate(op, a, q);
                ensure(
                    r.lower.is_subset(q)
                        && q.is_subset(&r.upper)
                        && r.boundary == r.upper.difference(&r.lower),
                    || format!("A={a} Q={q}"),
                )
            }),
        ));

        out.push(check(
            "approximation.duality",
            each(&mut |a, q| {
                let lower = approximate(op, a, q).lower;
                let upper_c = approximate(op, a, &q.complement(n)).upper;
                ensure(lower == upper_c.complement(n), || format!("A={a} Q={q}"))
            }),
        ));

        out.push(check(
            "approximation.membership_matches_regions",
            each(&mut |a, q| {
                let r = approximate(op, a, q);
                for x in 0..n {
                    let mu = rough_membership(op, a, q, x).expect("in range");
                    ensure(
                        (mu == Ratio::from_integer(1)) == r.lower.contains(x)
                            && (mu > Ratio::from_integer(0)) == r.upper.contains(x),
                        || format!("A={a} Q={q} x={x} mu={mu}"),
                    )?;
                }
                Ok(())
            }),
        ));

        out.push(check(
            "approximation.exact_iff_union_of_blocks",
            each(&mut |a, q| {
                let gamma = indiscernibility_partition(op, a);
                let closure = VertexSet::from_unsorted(
                    q.iter().flat_map(|x| gamma.block(x).iter()).collect(),
                );
                let r = approximate(op, a, q);
                ensure(
                    r.exact == (closure == *q)
                        && r.exact == is_exact(op, a, q)
                        && r.exact == (r.lower == r.upper),
                    || format!("A={a} Q={q}"),
                )
            }),
        ));

        out.push(check(
            "approximation.positive_region_matches_quantified",
            each(&mut |a, d| {
                let pos = positive_region(op, a, d);
                let dep = degree_of_dependency(op, a, d);
                ensure(
                    pos == positive_region_quantified(op, a, d)
                        && dep.degree == Ratio::new(pos.len(), n)
                        && dep.positive_region == pos,
                    || format!("A={a} D={d}"),
                )
            }),
        ));

        out.push(check(
            "approximation.covered_orbits_in_lower",
            each(&mut |a, q| {
                let hit = op.orbits_meeting(a);
                if !hit.iter().all(|&i| op.orbits()[i].is_subset(q)) {
                    return Ok(());
                }
                let closure = op.closure(a);
                let lower = approximate(op, a, q).lower;
                ensure(lower.intersection(&closure) == closure, || {
                    format!("A={a} Q={q}")
                })
            }),
        ));

        if op.k() == 1 {
            out.push(check(
                "approximation.single_orbit_all_rough",
                each(&mut |a, q| {
                    let proper = !q.is_empty() && *q != full;
                    let r = approximate(op, a, q);
                    ensure(r.exact != proper, || format!("A={a} Q={q}"))?;
                    ensure(!proper || (r.lower.is_empty() && r.upper == full), || {
                        format!("A={a} Q={q}")
                    })
                }),
            ));
        } else {
            out.push(skip(
                "approximation.single_orbit_all_rough",
                "more than one orbit",
            ));
        }

        match bipartite_parts(g, op) {
            Some((v1, v2)) => out.push(check(
                "approximation.bipartite_closed_forms",
                each(&mut |a, q| {
                    let parts = [&v1, &v2];
                    if !a.is_empty() {
                        let lower = VertexSet::from_unsorted(
                            parts
                                .iter()
                                .filter(|p| p.is_subset(q))
                                .flat_map(|p| p.iter())
                                .collect(),
                        );
                        let upper = VertexSet::from_unsorted(
                            parts
                                .iter()
                                .filter(|p| p.intersects(q))
                                .flat_map(|p| p.iter())
                                .collect(),
                        );
                        let r = approximate(op, a, q);
                        let exact = q.is_empty() || *q == v1 || *q == v2 || *q == full;
                        ensure(
                            r.lower == lower && r.upper == upper && r.exact == exact,
                            || format!("A={a} Q={q}"),
                        )?;
                        for x in 0..n {
                            let part = if v1.contains(x) { &v1 } else { &v2 };
                            let expect = Ratio::new(part.intersection(q).len(), part.len());
                            ensure(
                                rough_membership(op, a, q, x).expect("in range") == expect,
                                || format!("A={a} Q={q} x={x}"),
                            )?;
                        }
                    }
                    let pos = positive_region(op, a, q);
                    let expect = if a.is_empty() && !q.is_empty() {
                        VertexSet::new()
                    } else {
                        full.clone()
                    };
                    ensure(pos == expect, || format!("POS A={a} D={q}"))?;
                    ensure(
                        degree_of_dependency(op, a, q).degree == Ratio::new(expect.len(), n),
                        || format!("deg A={a} D={q}"),
                    )
                }),
            )),
            None => out.push(skip(
                "approximation.bipartite_closed_forms",
                "not complete bipartite with two distinct part orbits",
            )),
        }

        if op.is_rigid() {
            let discrete: Vec<VertexSet> = std::iter::once(full.clone())
                .chain((0..n).map(|v| full.without(v)))
                .collect();
            out.push(check(
                "approximation.rigid_exact_when_discrete",
                discrete
                    .iter()
                    .try_for_each(|a| {
                        targets
                            .iter()
                            .try_for_each(|q| ensure(is_exact(op, a, q), || format!("A={a} Q={q}")))
                    })
                    .map(|_| format!("{} attribute sets with |V\\A| <= 1", discrete.len())),
            ));
        } else {
            out.push(skip(
                "approximation.rigid_exact_when_discrete",
                "graph is not rigid",
            ));
        }
        out
    }

    fn reducts(&mut self) -> Result<Vec<Check>> {
        let (op, n) = (&self.op, self.n);
        let bound = self.opts.subset_bound;
        let full = VertexSet::full(n);
        let mut out = Vec::new();

        let whole = exhaustive_reducts(op, &full, bound)?;
        let structural = enumerate_reducts(op, &full);
        let mut outcome = ensure(whole == structural, || "A=V".to_string());
        if outcome.is_ok() {
            for a in &self.attrs {
                let ex = exhaustive_reducts(op, a, bound)?;
                outcome = ensure(ex == enumerate_reducts(op, a), || format!("A={a}"));
                if outcome.is_err() {
                    break;
                }
            }
        }
        out.push(check(
            "reduct.structural_matches_exhaustive",
            outcome.map(|_| format!("A=V has {} reducts", structural.reducts.len())),
        ));

        out.push(check(
            "reduct.definition_holds",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let target = indiscernibility_partition(op, a);
                    for r in enumerate_reducts(op, a).reducts {
                        ensure(indiscernibility_partition(op, &r) == target, || {
                            format!("A={a} R={r}")
                        })?;
                        for x in r.iter() {
                            ensure(
                                indiscernibility_partition(op, &r.without(x)) != target,
                                || format!("A={a} R={r} not minimal at {x}"),
                            )?;
                        }
                    }
                    Ok(())
                })
                .map(|_| String::new()),
        ));

        out.push(check(
            "reduct.core_is_indispensable_set",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let indispensable = VertexSet::from_sorted(
                        a.iter()
                            .filter(|&x| !is_dispensable(op, a, x).expect("member"))
                            .collect(),
                    );
                    let c = core(op, a);
                    ensure(
                        c == enumerate_reducts(op, a).core && c == indispensable,
                        || format!("A={a} core={c}"),
                    )
                })
                .map(|_| String::new()),
        ));

        out.push(check(
            "reduct.one_per_orbit_except_one",
            if op.k() == 1 {
                ensure(structural.reducts == vec![VertexSet::new()], || {
                    "k=1 but reducts are not {∅}".into()
                })
                .map(|_| "k=1: unique reduct is ∅".into())
            } else {
                structural
                    .reducts
                    .iter()
                    .try_for_each(|r| {
                        let counts: Vec<usize> = op
                            .orbits()
                            .iter()
                            .map(|o| o.intersection(r).len())
                            .collect();
                        let zeros = counts.iter().filter(|&&c| c == 0).count();
                        let ones = counts.iter().filter(|&&c| c == 1).count();
                        ensure(zeros == 1 && ones == op.k() - 1, || format!("R={r}"))
                    })
                    .map(|_| String::new())
            },
        ));

        out.push(check(
            "reduct.automorphism_action",
            self.gens
                .generators
                .iter()
                .try_for_each(|eta| {
                    self.attrs.iter().try_for_each(|a| {
                        let red_a = enumerate_reducts(op, a).reducts;
                        let red_image = enumerate_reducts(op, &eta.apply_to_set(a)).reducts;
                        let mapped: Vec<VertexSet> = {
                            let mut m: Vec<VertexSet> =
                                red_a.iter().map(|k| eta.apply_to_set(k)).collect();
                            m.sort();
                            m
                        };
                        ensure(mapped == red_image, || format!("eta={eta} A={a}"))
                    })
                })
                .map(|_| format!("{} generators", self.gens.generators.len())),
        ));
        Ok(out)
    }

    fn essentials(&mut self) -> Result<Vec<Check>> {
        let (op, n) = (&self.op, self.n);
        let bound = self.opts.subset_bound;
        let full = VertexSet::full(n);
        let mut out = Vec::new();

        let whole = exhaustive_essential_sets(op, &full, bound)?;
        let structural = essential_sets(op, &full);
        let mut outcome = ensure(whole == structural, || "A=V".to_string());
        if outcome.is_ok() {
            for a in &self.attrs {
                let ex = exhaustive_essential_sets(op, a, bound)?;
                outcome = ensure(ex == essential_sets(op, a), || format!("A={a}"));
                if outcome.is_err() {
                    break;
                }
            }
        }
        out.push(check(
            "essential.structural_matches_exhaustive",
            outcome.map(|_| {
                format!(
                    "ens={} edim={}",
                    fmt_ens(&structural.ens),
                    structural.edim.map_or("none".into(), |e| e.to_string())
                )
            }),
        ));

        out.push(check(
            "essential.union_of_two_orbits",
            whole
                .essential_sets
                .iter()
                .try_for_each(|s| {
                    let hit = op.orbits_meeting(s);
                    ensure(hit.len() == 2 && op.closure(s) == *s, || format!("S={s}"))
                })
                .map(|_| format!("{} essential sets", whole.essential_sets.len())),
        ));

        if op.k() <= 2 {
            out.push(check(
                "essential.empty_with_at_most_two_orbits",
                ensure(whole.essential_sets.is_empty(), || {
                    format!("k={} but ESS non-empty", op.k())
                })
                .map(|_| format!("k={}", op.k())),
            ));
        } else {
            out.push(skip(
                "essential.empty_with_at_most_two_orbits",
                "three or more orbits",
            ));
        }

        out.push(check(
            "essential.ens_and_edim_consistent",
            self.attrs
                .iter()
                .try_for_each(|a| {
                    let e = essential_sets(op, a);
                    let first = e.ens.iter().position(|&c| c != 0).map(|i| i + 1);
                    ensure(
                        e.ens.len() == a.len()
                            && e.ens.iter().sum::<usize>() == e.essential_sets.len()
                            && e.edim == first,
                        || format!("A={a}"),
                    )
                })
                .map(|_| String::new()),
        ));

        if op.is_rigid() && op.k() >= 3 {
            out.push(check(
                "essential.rigid_edim_two",
                ensure(structural.edim == Some(2), || {
                    format!("edim={:?}", structural.edim)
                })
                .map(|_| "edim=2".into()),
            ));
        } else {
            out.push(skip(
                "essential.rigid_edim_two",
                "not a rigid graph with three or more vertices",
            ));
        }
        Ok(out)
    }

    fn discernibility(&mut self) -> Vec<Check> {
        let (g, op, n) = (self.g, &self.op, self.n);
        let delta = discernibility_matrix(op);
        let mut out = Vec::new();

        out.push(check(
            "discernibility.orbit_rule_matches_table",
            ensure(
                delta == discernibility_matrix_from_table(&information_table(op)),
                String::new,
            )
            .map(|_| String::new()),
        ));

        let mut shape = Ok(());
        'outer: for i in 0..n {
            for j in 0..n {
                let e = delta.entry(i, j);
                let expect = if op.same_orbit(i, j) {
                    VertexSet::new()
                } else {
                    op.orbit(i).union(op.orbit(j))
                };
                if e != delta.entry(j, i) || *e != expect {
                    shape = Err(format!("entry ({i},{j})"));
                    break 'outer;
                }
            }
        }
        out.push(check(
            "discernibility.symmetric_orbit_rule",
            shape.map(|_| String::new()),
        ));

        out.push(check(
            "discernibility.similar_rows_equal",
            (0..n)
                .try_for_each(|i| {
                    (0..n).try_for_each(|j| {
                        ensure(!op.same_orbit(i, j) || delta.row(i) == delta.row(j), || {
                            format!("rows {i},{j}")
                        })
                    })
                })
                .map(|_| String::new()),
        ));

        let mut others = vec![g.clone(), g.complement()];
        for _ in 0..20 {
            let p = self.rng.gen_range(0.2..0.8);
            others.push(Graph::random(n, p, &mut self.rng).expect("n > 0"));
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        others.push(
            Graph::from_edges(n, g.edges().iter().map(|&(u, v)| (perm[u], perm[v])))
                .expect("relabelled edges"),
        );
        let mut equal_pairs = 0;
        out.push(check(
            "discernibility.equality_iff_same_orbits",
            others
                .iter()
                .enumerate()
                .try_for_each(|(i, h)| {
                    let oh = orbits(h);
                    let same_delta = discernibility_matrix(&oh) == delta;
                    let same = same_orbit_structure(op, &oh).expect("same n");
                    equal_pairs += usize::from(same_delta);
                    ensure(same_delta == same && same == (oh == *op), || {
                        format!("comparison graph {i}")
                    })
                })
                .map(|_| {
                    format!(
                        "{} graphs compared, {equal_pairs} with equal matrices",
                        others.len()
                    )
                }),
        ));

        let k = op.k();
        let entries = eqdm(op);
        out.push(check(
            "discernibility.eqdm_size",
            ensure(entries.len() == k * k.saturating_sub(1) / 2, || {
                format!("{} entries for k={k}", entries.len())
            })
            .map(|_| format!("{} entries", entries.len())),
        ));

        if k >= 3 {
            out.push(check(
                "discernibility.eqdm_equals_ess",
                ensure(verify_eqdm_equals_ess(op), || {
                    "EQDM differs from ESS".into()
                })
                .map(|_| String::new()),
            ));
        } else {
            out.push(skip(
                "discernibility.eqdm_equals_ess",
                &format!(
                    "k={k}: EQDM has {} entries while ESS is empty",
                    entries.len()
                ),
            ));
        }
        out
    }
}
