//! Exact feasibility search and exact domatic numbers for small grids.
//!
//! Complete backtracking over cell colorings. For every vertex `u` and color
//! `c` the search tracks how many cells of `u`'s ball could still take `c`;
//! a count of zero prunes, a count of one forces the last supporter. Colors
//! are interchangeable, so decisions only ever try the already-used colors
//! plus one fresh one. Cells are decided corners-first (smallest balls bind
//! hardest), which makes the rainbow structure of tight corner balls
//! propagate immediately.

use std::collections::VecDeque;
use std::num::NonZeroUsize;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bounds::{singleton_pigeonhole, two_ball_pigeonhole, Certificate};
use crate::grid::{ball_size, grid_distance, min_k_degree, Coloring, GridDims, Vertex};

#[derive(Debug, Clone)]
pub struct SolveConfig {
    /// Budget per feasibility instance.
    pub timeout: Duration,
    /// Prune assignments dominated by a dihedral image of the grid.
    /// Verdicts never depend on this; off by default so witnesses are
    /// reproducible run to run.
    pub symmetry_breaking: bool,
    /// Abort (as a timeout) after this many decision nodes.
    pub node_limit: Option<u64>,
    pub workers: NonZeroUsize,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            timeout: Duration::from_secs(60),
            symmetry_breaking: false,
            node_limit: None,
            workers: NonZeroUsize::new(1).unwrap(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum SolveStatus {
    Feasible(Coloring),
    Infeasible,
    Timeout,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: SolveStatus,
    /// Decision nodes explored; deterministic with one worker.
    pub nodes: u64,
    pub elapsed: Duration,
}

/// Why `value + 1` colors are impossible, attached to an exact result.
#[derive(Debug, Clone)]
pub enum UpperBoundEvidence {
    /// The value reached the minimum ball size, the universal upper bound.
    DomaticallyFull,
    Certificate(Certificate),
    SearchExhausted { nodes: u64 },
}

#[derive(Debug, Clone)]
pub struct ExactResult {
    pub value: u32,
    pub witness: Coloring,
    pub evidence: UpperBoundEvidence,
    pub nodes: u64,
    pub elapsed: Duration,
}

/// An exact run that ran out of budget before the value was pinned down.
#[derive(Debug, Clone)]
pub struct ExactTimeout {
    /// Largest palette proven feasible (1 is always feasible).
    pub lower: u32,
    /// Smallest palette not yet refuted.
    pub upper: u32,
    pub nodes: u64,
    pub elapsed: Duration,
}

const UNASSIGNED: u32 = 0;

/// Immutable per-instance data shared by all workers.
struct Instance {
    dims: GridDims,
    t: u32,
    /// Ball membership per cell index.
    balls: Vec<Vec<u32>>,
    /// Cell indices in decision order: ascending ball size, then row-major.
    order: Vec<u32>,
    /// Nontrivial dihedral cell maps, when symmetry breaking is on.
    symmetries: Vec<Vec<u32>>,
}

impl Instance {
    fn new(dims: GridDims, k: u32, t: u32, symmetry_breaking: bool) -> Self {
        let n = dims.cell_count();
        let mut balls = vec![Vec::new(); n];
        for v in dims.vertices() {
            let vi = dims.index(v);
            for u in dims.vertices() {
                if grid_distance(u, v) <= k {
                    balls[vi].push(dims.index(u) as u32);
                }
            }
        }
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by_key(|&i| {
            let v = dims.vertex_at(i as usize);
            (ball_size(dims, v, k).unwrap(), i)
        });
        let symmetries = if symmetry_breaking {
            dihedral_maps(dims)
        } else {
            Vec::new()
        };
        Instance {
            dims,
            t,
            balls,
            order,
            symmetries,
        }
    }
}

/// Cell-index maps of the rectangle's nontrivial symmetries: flips and the
/// half turn, plus the transpose family on squares.
fn dihedral_maps(dims: GridDims) -> Vec<Vec<u32>> {
    let (r, l) = (dims.rows(), dims.cols());
    let mut maps: Vec<Vec<u32>> = Vec::new();
    let mut add = |f: &dyn Fn(Vertex) -> Vertex| {
        let map: Vec<u32> = (0..dims.cell_count())
            .map(|i| dims.index(f(dims.vertex_at(i))) as u32)
            .collect();
        let identity = (0..dims.cell_count() as u32).collect::<Vec<_>>();
        if map != identity && !maps.contains(&map) {
            maps.push(map);
        }
    };
    add(&|v| Vertex::new(v.row, l + 1 - v.col));
    add(&|v| Vertex::new(r + 1 - v.row, v.col));
    add(&|v| Vertex::new(r + 1 - v.row, l + 1 - v.col));
    if r == l {
        add(&|v| Vertex::new(v.col, v.row));
        add(&|v| Vertex::new(l + 1 - v.col, r + 1 - v.row));
        add(&|v| Vertex::new(v.col, r + 1 - v.row));
        add(&|v| Vertex::new(l + 1 - v.col, v.row));
    }
    maps
}

#[derive(Clone)]
struct State {
    /// Color per cell, 0 while unassigned.
    colors: Vec<u32>,
    /// support[u * t + (c-1)]: cells of ball(u) still able to carry c.
    support: Vec<u16>,
    /// Colors with at least one assigned cell form a prefix 1..=used of the
    /// palette at decision points.
    used: u32,
    assigned: usize,
}

enum TrailOp {
    Assign { cell: u32, color: u32 },
    // a doomed forced assignment can bump `used` past a contiguous prefix,
    // so the exact previous value is kept
    UseColor { prev: u32 },
}

impl State {
    fn new(inst: &Instance) -> Self {
        let n = inst.dims.cell_count();
        let mut support = vec![0u16; n * inst.t as usize];
        for (u, ball) in inst.balls.iter().enumerate() {
            for c in 0..inst.t as usize {
                support[u * inst.t as usize + c] = ball.len() as u16;
            }
        }
        State {
            colors: vec![UNASSIGNED; n],
            support,
            used: 0,
            assigned: 0,
        }
    }

    /// Assigns `cell := color` plus everything it forces. Returns false on a
    /// wiped-out support; the trail lets the caller rewind either way. The
    /// decrement loop always runs to completion so the supports stay the
    /// exact mirror of what rewind restores.
    fn assign(
        &mut self,
        inst: &Instance,
        cell: u32,
        color: u32,
        trail: &mut Vec<TrailOp>,
    ) -> bool {
        let t = inst.t as usize;
        let mut queue: VecDeque<(u32, u32)> = VecDeque::new();
        queue.push_back((cell, color));
        while let Some((y, c)) = queue.pop_front() {
            match self.colors[y as usize] {
                cur if cur == c => continue,
                UNASSIGNED => {}
                _ => return false, // forced to two different colors
            }
            self.colors[y as usize] = c;
            self.assigned += 1;
            trail.push(TrailOp::Assign { cell: y, color: c });
            if c > self.used {
                trail.push(TrailOp::UseColor { prev: self.used });
                self.used = c;
            }
            let mut dead = false;
            for &u in &inst.balls[y as usize] {
                let base = u as usize * t;
                for other in 0..t {
                    if other as u32 + 1 == c {
                        continue;
                    }
                    let slot = &mut self.support[base + other];
                    *slot -= 1;
                    if dead {
                        continue;
                    }
                    if *slot == 0 {
                        dead = true;
                        continue;
                    }
                    if *slot == 1 {
                        // the last cell able to serve (u, other): force it
                        // unless an assigned cell already does
                        let want = other as u32 + 1;
                        let supporter = inst.balls[u as usize]
                            .iter()
                            .copied()
                            .find(|&z| {
                                let zc = self.colors[z as usize];
                                zc == UNASSIGNED || zc == want
                            })
                            .expect("support count says one remains");
                        if self.colors[supporter as usize] == UNASSIGNED {
                            queue.push_back((supporter, want));
                        }
                    }
                }
            }
            if dead {
                return false;
            }
        }
        true
    }

    fn rewind(&mut self, inst: &Instance, trail: &mut Vec<TrailOp>, mark: usize) {
        let t = inst.t as usize;
        while trail.len() > mark {
            match trail.pop().unwrap() {
                TrailOp::UseColor { prev } => self.used = prev,
                TrailOp::Assign { cell, color } => {
                    self.colors[cell as usize] = UNASSIGNED;
                    self.assigned -= 1;
                    for &u in &inst.balls[cell as usize] {
                        let base = u as usize * t;
                        for other in 0..t {
                            if other as u32 + 1 != color {
                                self.support[base + other] += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    fn next_cell(&self, inst: &Instance) -> Option<u32> {
        inst.order
            .iter()
            .copied()
            .find(|&i| self.colors[i as usize] == UNASSIGNED)
    }

    /// True when some dihedral image of the assignment, canonically
    /// relabeled, is strictly smaller in decision order: such a state is
    /// explored elsewhere. Inconclusive prefixes never prune.
    fn dominated_by_symmetry(&self, inst: &Instance) -> bool {
        'sigma: for map in &inst.symmetries {
            let mut relabel = vec![0u32; inst.t as usize + 1];
            let mut next = 0u32;
            for &cell in &inst.order {
                let own = self.colors[cell as usize];
                if own == UNASSIGNED {
                    continue 'sigma;
                }
                let image = self.colors[map[cell as usize] as usize];
                if image == UNASSIGNED {
                    continue 'sigma;
                }
                let mapped = if relabel[image as usize] == 0 {
                    next += 1;
                    relabel[image as usize] = next;
                    next
                } else {
                    relabel[image as usize]
                };
                if own < mapped {
                    continue 'sigma;
                }
                if own > mapped {
                    return true;
                }
            }
        }
        false
    }
}

struct SearchDriver<'a> {
    inst: &'a Instance,
    deadline: Instant,
    node_limit: u64,
    nodes: &'a AtomicU64,
    stop: &'a AtomicBool,
    timed_out: &'a AtomicBool,
    solution: &'a Mutex<Option<Vec<u32>>>,
}

impl SearchDriver<'_> {
    /// Node limits are enforced exactly; the clock is only consulted every
    /// 1024 nodes.
    fn out_of_budget(&self, n: u64) -> bool {
        if n >= self.node_limit || (n % 1024 == 0 && Instant::now() >= self.deadline) {
            self.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn found(&self, colors: &[u32]) {
        let mut slot = self.solution.lock().unwrap();
        if slot.is_none() {
            *slot = Some(colors.to_vec());
        }
        self.stop.store(true, Ordering::Relaxed);
    }

    /// Exhaustive DFS from `state`. Returns false when aborted early.
    fn dfs(&self, state: &mut State, trail: &mut Vec<TrailOp>) -> bool {
        if self.stop.load(Ordering::Relaxed) {
            return !self.timed_out.load(Ordering::Relaxed);
        }
        let Some(cell) = state.next_cell(self.inst) else {
            self.found(&state.colors);
            return true;
        };
        let limit = self.inst.t.min(state.used + 1);
        for color in 1..=limit {
            let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
            if self.out_of_budget(n) {
                self.stop.store(true, Ordering::Relaxed);
                return false;
            }
            let mark = trail.len();
            let ok = state.assign(self.inst, cell, color, trail)
                && !state.dominated_by_symmetry(self.inst);
            if ok && !self.dfs(state, trail) {
                state.rewind(self.inst, trail, mark);
                return false;
            }
            state.rewind(self.inst, trail, mark);
            if self.stop.load(Ordering::Relaxed) {
                return !self.timed_out.load(Ordering::Relaxed);
            }
        }
        true
    }
}

/// Decides whether a proper coloring of `dims` with exactly `t` colors at
/// radius `k` exists. Feasible results carry a verified witness; Infeasible
/// means the search space was exhausted; the timeout and node budgets give
/// Timeout, never a silent wrong answer.
pub fn feasible(dims: GridDims, k: u32, t: u32, cfg: &SolveConfig) -> SolveResult {
    assert!(t >= 1, "palette must be nonempty");
    let start = Instant::now();
    let inst = Instance::new(dims, k, t, cfg.symmetry_breaking);
    let nodes = AtomicU64::new(0);
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let solution: Mutex<Option<Vec<u32>>> = Mutex::new(None);
    let driver = SearchDriver {
        inst: &inst,
        deadline: start + cfg.timeout,
        node_limit: cfg.node_limit.unwrap_or(u64::MAX),
        nodes: &nodes,
        stop: &stop,
        timed_out: &timed_out,
        solution: &solution,
    };

    let workers = cfg.workers.get();
    let mut exhausted = true;
    if workers <= 1 {
        let mut state = State::new(&inst);
        let mut trail = Vec::new();
        exhausted = driver.dfs(&mut state, &mut trail);
    } else {
        // split the tree near the root, then drain the frontier in parallel
        let mut frontier: VecDeque<State> = VecDeque::new();
        frontier.push_back(State::new(&inst));
        let target = workers * 4;
        while frontier.len() < target {
            let Some(state) = frontier.pop_front() else {
                break;
            };
            let Some(cell) = state.next_cell(&inst) else {
                driver.found(&state.colors);
                frontier.push_front(state);
                break;
            };
            let limit = inst.t.min(state.used + 1);
            for color in 1..=limit {
                nodes.fetch_add(1, Ordering::Relaxed);
                let mut child = state.clone();
                let mut trail = Vec::new();
                if child.assign(&inst, cell, color, &mut trail)
                    && !child.dominated_by_symmetry(&inst)
                {
                    frontier.push_back(child);
                }
            }
        }
        if solution.lock().unwrap().is_none() {
            let queue = Mutex::new(frontier);
            let results: Vec<bool> = std::thread::scope(|scope| {
                let handles: Vec<_> = (0..workers)
                    .map(|_| {
                        let driver = &driver;
                        let queue = &queue;
                        scope.spawn(move || {
                            let mut complete = true;
                            loop {
                                let Some(mut state) = queue.lock().unwrap().pop_front() else {
                                    break;
                                };
                                let mut trail = Vec::new();
                                complete &= driver.dfs(&mut state, &mut trail);
                            }
                            complete
                        })
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().unwrap()).collect()
            });
            exhausted = results.into_iter().all(|c| c);
        }
    }

    let elapsed = start.elapsed();
    let total_nodes = nodes.load(Ordering::Relaxed);
    let status = match solution.into_inner().unwrap() {
        Some(cells) => {
            let witness =
                Coloring::new(dims, k, t, cells).expect("search assigns only palette colors");
            debug_assert!(crate::grid::verify_coloring(&witness).proper);
            SolveStatus::Feasible(witness)
        }
        None if exhausted && !timed_out.load(Ordering::Relaxed) => SolveStatus::Infeasible,
        None => SolveStatus::Timeout,
    };
    SolveResult {
        status,
        nodes: total_nodes,
        elapsed,
    }
}

/// Computes the exact domatic number by descending from the ball-size upper
/// bound, refuting each palette by certificate when one exists and by
/// exhausted search otherwise, until a feasible palette is found.
pub fn exact_domatic_number(
    dims: GridDims,
    k: u32,
    cfg: &SolveConfig,
) -> Result<ExactResult, ExactTimeout> {
    let start = Instant::now();
    let upper = min_k_degree(dims, k);
    let mut nodes = 0u64;
    let mut evidence_above: Option<UpperBoundEvidence> = None;
    for t in (1..=upper).rev() {
        if let Some(cert) = singleton_pigeonhole(dims, k, t).or_else(|| two_ball_pigeonhole(dims, k, t))
        {
            evidence_above = Some(UpperBoundEvidence::Certificate(cert));
            continue;
        }
        let result = feasible(dims, k, t, cfg);
        nodes += result.nodes;
        match result.status {
            SolveStatus::Feasible(witness) => {
                let evidence = if t == upper {
                    UpperBoundEvidence::DomaticallyFull
                } else {
                    evidence_above.expect("every palette above was refuted")
                };
                return Ok(ExactResult {
                    value: t,
                    witness,
                    evidence,
                    nodes,
                    elapsed: start.elapsed(),
                });
            }
            SolveStatus::Infeasible => {
                evidence_above = Some(UpperBoundEvidence::SearchExhausted {
                    nodes: result.nodes,
                });
            }
            SolveStatus::Timeout => {
                return Err(ExactTimeout {
                    lower: 1,
                    upper: t,
                    nodes,
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    unreachable!("a single color always dominates a nonempty grid");
}
