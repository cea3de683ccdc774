//! Exhaustive enumeration of gyrogroups of small order up to isomorphism.
//!
//! Backtracking fills the Cayley table row by row with the identity fixed
//! at index 0, pruning on Latin constraints and on left Bol violations over
//! fully determined triples (every gyrogroup is a left Bol loop, so Bol
//! failures are sound cuts). The automorphism condition is only decidable
//! with the whole table and is checked at leaves by full validation.
//! Survivors are deduplicated by canonical form, so the output lists each
//! isomorphism class exactly once, sorted by canonical serialization, and
//! is identical for any worker count.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::gyrogroup::Gyrogroup;
use crate::morphism::canonical_form;
use crate::table::{validate_loop, CayleyTable};

/// Hard default cap on the order accepted by [`enumerate_gyrogroups`].
pub const ORDER_BOUND: usize = 8;

/// Default backtracking node budget.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Maximum backtrack nodes before the search gives up and reports an
    /// incomplete result.
    pub budget: u64,
    /// Worker threads for branch-parallel search; `None` uses the rayon
    /// default. The result is schedule-independent.
    pub jobs: Option<usize>,
    /// Largest order accepted.
    pub order_bound: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: DEFAULT_BUDGET,
            jobs: None,
            order_bound: ORDER_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SearchError {
    #[error("order {order} exceeds the search bound {bound}")]
    OrderBoundExceeded { order: usize, bound: usize },
    #[error("order must be at least 1")]
    ZeroOrder,
}

/// Outcome of an enumeration run.
#[derive(Debug, Clone)]
pub struct SearchResult {
    pub order: usize,
    /// Canonical tables, one per isomorphism class, sorted.
    pub classes: Vec<CayleyTable>,
    /// Backtrack nodes visited; schedule-independent when complete.
    pub nodes: u64,
    /// False iff the node budget ran out; the class list is then a
    /// partial lower bound, never silently presented as complete.
    pub complete: bool,
}

/// Enumerates all gyrogroups of order `n` up to isomorphism with default
/// options.
pub fn enumerate_gyrogroups(n: usize) -> Result<SearchResult, SearchError> {
    enumerate_gyrogroups_with(n, &SearchOptions::default())
}

/// [`enumerate_gyrogroups`] with explicit budget, worker count, and order
/// bound.
pub fn enumerate_gyrogroups_with(
    n: usize,
    opts: &SearchOptions,
) -> Result<SearchResult, SearchError> {
    if n == 0 {
        return Err(SearchError::ZeroOrder);
    }
    if n > opts.order_bound {
        return Err(SearchError::OrderBoundExceeded {
            order: n,
            bound: opts.order_bound,
        });
    }
    if n == 1 {
        return Ok(SearchResult {
            order: 1,
            classes: vec![CayleyTable::new(1, vec![0]).unwrap()],
            nodes: 0,
            complete: true,
        });
    }

    let nodes = AtomicU64::new(0);
    let exhausted = AtomicBool::new(false);

    // Seed tasks: every Bol-surviving completion of row 1 becomes an
    // independent branch; each runs the same serial backtracking.
    let mut seed_state = State::new(n);
    let mut seeds: Vec<State> = Vec::new();
    let mut seed_nodes = 0u64;
    collect_row_seeds(&mut seed_state, 1, 1, &mut seeds, &mut seed_nodes);
    nodes.fetch_add(seed_nodes, Ordering::Relaxed);

    let budget = opts.budget;
    let results: Vec<BTreeSet<Vec<usize>>> = maybe_parallel(opts.jobs, &seeds, |seed| {
        let mut local = seed.clone();
        let mut out = BTreeSet::new();
        fill(&mut local, 2, 1, &nodes, budget, &exhausted, &mut out);
        out
    });
    let mut found = BTreeSet::new();
    for r in results {
        found.extend(r);
    }

    let classes: Vec<CayleyTable> = found
        .into_iter()
        .map(|entries| CayleyTable::new(n, entries).unwrap())
        .collect();
    Ok(SearchResult {
        order: n,
        classes,
        nodes: nodes.load(Ordering::Relaxed),
        complete: !exhausted.load(Ordering::Relaxed),
    })
}

/// Runs `f` over seeds, optionally on a dedicated rayon pool of `jobs`
/// threads. Collection keeps seed order, so downstream set unions are
/// schedule-independent anyway.
fn maybe_parallel<T: Send>(
    jobs: Option<usize>,
    seeds: &[State],
    f: impl Fn(&State) -> T + Sync + Send,
) -> Vec<T> {
    use rayon::prelude::*;
    match jobs {
        Some(1) => seeds.iter().map(f).collect(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| seeds.par_iter().map(f).collect()),
        None => seeds.par_iter().map(f).collect(),
    }
}

#[derive(Clone)]
struct State {
    n: usize,
    /// Row-major entries; `usize::MAX` marks an empty cell. Row 0 and
    /// column 0 are fixed to the identity pattern.
    t: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
}

impl State {
    fn new(n: usize) -> State {
        let mut t = vec![usize::MAX; n * n];
        let mut row_used = vec![0u32; n];
        let mut col_used = vec![0u32; n];
        for i in 0..n {
            t[i] = i; // row 0
            t[i * n] = i; // column 0
            row_used[0] |= 1 << i;
            col_used[0] |= 1 << i;
            row_used[i] |= 1 << i;
            col_used[i] |= 1 << i;
        }
        State { n, t, row_used, col_used }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> usize {
        self.t[r * self.n + c]
    }

    #[inline]
    fn place(&mut self, r: usize, c: usize, v: usize) {
        self.t[r * self.n + c] = v;
        self.row_used[r] |= 1 << v;
        self.col_used[c] |= 1 << v;
    }

    #[inline]
    fn unplace(&mut self, r: usize, c: usize, v: usize) {
        self.t[r * self.n + c] = usize::MAX;
        self.row_used[r] &= !(1 << v);
        self.col_used[c] &= !(1 << v);
    }

    /// Left Bol check over every pair that became fully determined when
    /// row `r` completed: pairs (a, b) with a, b ≤ r whose triple rows
    /// {a, b, x} (x = a⊕(b⊕a)) have maximum exactly r. Each pair is thus
    /// checked exactly once per root-to-leaf path, with no bookkeeping to
    /// restore on backtrack.
    fn bol_row_ok(&self, r: usize) -> bool {
        let n = self.n;
        for a in 1..=r {
            for b in 0..=r {
                let x = self.get(a, self.get(b, a));
                if a.max(b).max(x) != r {
                    continue;
                }
                for c in 0..n {
                    // a⊕(b⊕(a⊕c)) vs (a⊕(b⊕a))⊕c
                    if self.get(a, self.get(b, self.get(a, c))) != self.get(x, c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Enumerates surviving completions of row `row` starting at column `col`,
/// snapshotting each full row that passes the Bol filter.
fn collect_row_seeds(s: &mut State, row: usize, col: usize, out: &mut Vec<State>, nodes: &mut u64) {
    let n = s.n;
    if col == n {
        if s.bol_row_ok(row) {
            out.push(s.clone());
        }
        return;
    }
    for v in 0..n {
        let bit = 1u32 << v;
        if s.row_used[row] & bit != 0 || s.col_used[col] & bit != 0 {
            continue;
        }
        *nodes += 1;
        s.place(row, col, v);
        collect_row_seeds(s, row, col + 1, out, nodes);
        s.unplace(row, col, v);
    }
}

fn fill(
    s: &mut State,
    row: usize,
    col: usize,
    nodes: &AtomicU64,
    budget: u64,
    exhausted: &AtomicBool,
    out: &mut BTreeSet<Vec<usize>>,
) {
    let n = s.n;
    if row == n {
        leaf(s, out);
        return;
    }
    if exhausted.load(Ordering::Relaxed) {
        return;
    }
    let (next_row, next_col) = if col == n - 1 { (row + 1, 1) } else { (row, col + 1) };
    for v in 0..n {
        let bit = 1u32 << v;
        if s.row_used[row] & bit != 0 || s.col_used[col] & bit != 0 {
            continue;
        }
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            exhausted.store(true, Ordering::Relaxed);
            return;
        }
        s.place(row, col, v);
        if col != n - 1 || s.bol_row_ok(row) {
            fill(s, next_row, next_col, nodes, budget, exhausted, out);
        }
        s.unplace(row, col, v);
    }
}

/// Full validation at a completed table; survivors are recorded by
/// canonical form.
fn leaf(s: &State, out: &mut BTreeSet<Vec<usize>>) {
    let table = CayleyTable::new(s.n, s.t.clone()).unwrap();
    debug_assert!(validate_loop(&table).is_valid());
    if let Ok(g) = Gyrogroup::validate(table) {
        out.insert(canonical_form(&g).entries().to_vec());
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FromGroupError {
    #[error("table is not a loop")]
    NotLoop,
    #[error("table is not associative: ({a}⊕{b})⊕{c} ≠ {a}⊕({b}⊕{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
}

/// Imports a group table as a gyrogroup with identity gyrations.
pub fn from_group(t: CayleyTable) -> Result<Gyrogroup, FromGroupError> {
    if !validate_loop(&t).is_valid() {
        return Err(FromGroupError::NotLoop);
    }
    let n = t.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t.get(t.get(a, b), c) != t.get(a, t.get(b, c)) {
                    return Err(FromGroupError::NotAssociative { a, b, c });
                }
            }
        }
    }
    let g = Gyrogroup::validate(t).expect("an associative loop is a gyrogroup");
    debug_assert!(g.is_group());
    Ok(g)
}

/// One class row of a search [`Manifest`].
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ManifestClass {
    pub file: String,
    pub is_group: bool,
    pub is_gyrocommutative: bool,
}

/// Machine-readable summary of an enumeration run. Class counts are
/// computed by this artifact's own exhaustive search, and the provenance
/// field says so explicitly.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Manifest {
    pub order: usize,
    pub class_count: usize,
    pub complete: bool,
    pub nodes: u64,
    pub count_provenance: String,
    pub classes: Vec<ManifestClass>,
}

/// Builds the manifest for a search result; `file` fields follow the
/// `g{n}_{index}.gyt` naming used by the CLI emitter.
pub fn manifest(result: &SearchResult) -> Manifest {
    let classes: Vec<ManifestClass> = result
        .classes
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let g = Gyrogroup::validate(t.clone()).expect("emitted classes validate");
            ManifestClass {
                file: format!("g{}_{}.gyt", result.order, i),
                is_group: g.is_group(),
                is_gyrocommutative: crate::properties::is_gyrocommutative(&g),
            }
        })
        .collect();
    Manifest {
        order: result.order,
        class_count: result.classes.len(),
        complete: result.complete,
        nodes: result.nodes,
        count_provenance: "exhaustive search by this artifact; not quoted from literature"
            .to_string(),
        classes,
    }
}
