//! Proper coloring constructions: the standard block coloring, permutation
//! stamping, planning of overlapping block placements for general grids, and
//! the modular coloring of the infinite grid.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::grid::{Coloring, GridDims, GridError, Vertex};
use crate::perm::{h_shift, v_shift, PermError, Permutation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConstructError {
    #[error("block height {r} is outside 1..={max} for k={k}", max = k + 1)]
    BlockHeight { k: u32, r: u32 },
    #[error("permutation of size {got} cannot stamp a block with half size {expected}")]
    StampSize { expected: u32, got: u32 },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Grid(#[from] GridError),
}

/// No construction is known for this grid shape at the full-palette target.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("no known construction for {dims} at k={k}: {reason}")]
pub struct UnsupportedShape {
    pub dims: GridDims,
    pub k: u32,
    pub reason: String,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ApplyError {
    #[error("placement at {origin} exceeds the {dims} grid")]
    PlacementOutOfBounds { origin: Vertex, dims: GridDims },
    #[error("stamp at {at} assigns color {found} over already-placed {expected}")]
    OverlapConflict {
        at: Vertex,
        expected: u32,
        found: u32,
    },
    #[error("plan leaves cell {at} uncovered")]
    Uncovered { at: Vertex },
    #[error(transparent)]
    Construct(#[from] ConstructError),
}

/// Shape of one stampable block: `height` rows by `width` columns where
/// `width = 2k - height + 3`, colored with `half_size = height * width / 2`
/// colors. Heights up to `k` arise for shallow grids; height `k+1` is the
/// block every taller grid is built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockSpec {
    k: u32,
    height: u32,
    width: u32,
}

impl BlockSpec {
    pub fn new(k: u32, height: u32) -> Result<Self, ConstructError> {
        if height == 0 || height > k + 1 {
            return Err(ConstructError::BlockHeight { k, r: height });
        }
        Ok(BlockSpec {
            k,
            height,
            width: 2 * k - height + 3,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    /// Number of colors; half the block's cell count (always integral).
    pub fn half_size(&self) -> u32 {
        self.height * self.width / 2
    }

    pub fn dims(&self) -> GridDims {
        GridDims::new(self.height, self.width).expect("block dims are positive")
    }
}

/// One shift applied to the block permutation. `Horizontal { s }` lets the
/// stamped block overlap its predecessor in `s` columns; `Vertical { t }` in
/// `t` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftOp {
    Horizontal { s: u32 },
    Vertical { t: u32 },
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShiftOp::Horizontal { s } => write!(f, "h{s}"),
            ShiftOp::Vertical { t } => write!(f, "v{t}"),
        }
    }
}

/// A block placement: stamp the block permutation obtained by applying
/// `recipe` (in order) to the identity, with the block's top-left cell at
/// `origin`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub origin: Vertex,
    pub recipe: Vec<ShiftOp>,
}

/// An ordered list of block placements that colors a whole grid. When
/// `transposed` is set the placements cover the transposed grid and the
/// applied result is flipped back, so `dims` is always the requested shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StampPlan {
    pub dims: GridDims,
    pub k: u32,
    pub block: BlockSpec,
    pub transposed: bool,
    pub placements: Vec<Placement>,
}

impl StampPlan {
    pub fn palette(&self) -> u32 {
        self.block.half_size()
    }
}

/// The block coloring of `height x (2k - height + 3)`: counting column-major,
/// the first half of the positions take colors `1..=half_size` in order and
/// the second half takes them in reverse. Proper for radius `k`.
pub fn standard_block(k: u32, height: u32) -> Result<Coloring, ConstructError> {
    let block = BlockSpec::new(k, height)?;
    stamp(&Permutation::identity(block.half_size()), &block)
}

/// The block coloring determined by a permutation of the first half:
/// column-major position `p` receives `f(p)` in the first half and the
/// mirror `f(2N + 1 - p)` in the second. `stamp(identity)` is the standard
/// block coloring.
pub fn stamp(f: &Permutation, block: &BlockSpec) -> Result<Coloring, ConstructError> {
    let half = block.half_size();
    if f.n() != half {
        return Err(ConstructError::StampSize {
            expected: half,
            got: f.n(),
        });
    }
    let coloring = Coloring::from_fn(block.dims(), block.k, half, |v| {
        let p = (v.col - 1) * block.height + v.row;
        if p <= half {
            f.apply(p)
        } else {
            f.apply(2 * half + 1 - p)
        }
    })?;
    Ok(coloring)
}

fn apply_recipe(recipe: &[ShiftOp], block: &BlockSpec) -> Result<Permutation, ConstructError> {
    let mut f = Permutation::identity(block.half_size());
    for op in recipe {
        f = match *op {
            ShiftOp::Horizontal { s } => h_shift(&f, s, block.height)?,
            ShiftOp::Vertical { t } => v_shift(&f, t, block.k)?,
        };
    }
    Ok(f)
}

/// Column origins and horizontal recipes tiling a band of `cols` columns
/// with blocks of width `w`, or `None` when the residue is too small to
/// overlap legally.
fn horizontal_copies(cols: u32, w: u32) -> Option<Vec<(u32, Vec<ShiftOp>)>> {
    if cols < w {
        return None;
    }
    let m = cols / w;
    let j = cols % w;
    let half_up = w.div_ceil(2);
    let identity_run = |count: u32| (0..count).map(|i| (1 + i * w, Vec::new()));
    if j == 0 {
        return Some(identity_run(m).collect());
    }
    if j >= half_up {
        // one extra copy overlapping the last full one in w - j columns
        let s = w - j;
        let mut copies: Vec<_> = identity_run(m).collect();
        copies.push((cols - w + 1, vec![ShiftOp::Horizontal { s }]));
        return Some(copies);
    }
    if m >= 2 {
        // residue too small for a single overlap: chain two reversals off the
        // last full copy
        let s1 = w / 2;
        let s2 = half_up - j;
        let mut copies: Vec<_> = identity_run(m - 1).collect();
        copies.push(((m - 1) * w - s1 + 1, vec![ShiftOp::Horizontal { s: s1 }]));
        copies.push((
            cols - w + 1,
            vec![ShiftOp::Horizontal { s: s1 }, ShiftOp::Horizontal { s: s2 }],
        ));
        return Some(copies);
    }
    None
}

/// Row origins and vertical recipes for grids taller than one block, with
/// the same structure as the horizontal case but over rows of height `k+1`.
fn vertical_bands(rows: u32, k: u32) -> Option<Vec<(u32, Vec<ShiftOp>)>> {
    let h = k + 1;
    if rows < h {
        return None;
    }
    let n = rows / h;
    let i = rows % h;
    let half_up = h.div_ceil(2);
    let identity_run = |count: u32| (0..count).map(|b| (1 + b * h, Vec::new()));
    if i == 0 {
        return Some(identity_run(n).collect());
    }
    if i >= half_up {
        let t = h - i;
        let mut bands: Vec<_> = identity_run(n).collect();
        bands.push((rows - k, vec![ShiftOp::Vertical { t }]));
        return Some(bands);
    }
    if n >= 2 {
        let t1 = h / 2;
        // the residual band forces the overlap ceil((k+1)/2) - i, one less
        // than the analogous horizontal formula would suggest
        let t2 = half_up - i;
        let mut bands: Vec<_> = identity_run(n - 1).collect();
        bands.push(((n - 2) * h + half_up + 1, vec![ShiftOp::Vertical { t: t1 }]));
        bands.push((
            rows - k,
            vec![ShiftOp::Vertical { t: t1 }, ShiftOp::Vertical { t: t2 }],
        ));
        return Some(bands);
    }
    None
}

fn plan_oriented(k: u32, rows: u32, cols: u32) -> Option<(BlockSpec, Vec<Placement>)> {
    if rows <= k + 1 {
        // shallow grid: one band of blocks of exactly this height
        let block = BlockSpec::new(k, rows).expect("height within range");
        let copies = horizontal_copies(cols, block.width())?;
        let placements = copies
            .into_iter()
            .map(|(col, recipe)| Placement {
                origin: Vertex::new(1, col),
                recipe,
            })
            .collect();
        return Some((block, placements));
    }
    let block = BlockSpec::new(k, k + 1).expect("full-height block");
    let bands = vertical_bands(rows, k)?;
    let copies = horizontal_copies(cols, block.width())?;
    let mut placements = Vec::with_capacity(bands.len() * copies.len());
    for (row, band_recipe) in &bands {
        for (col, copy_recipe) in &copies {
            let mut recipe = copy_recipe.clone();
            recipe.extend(band_recipe.iter().cloned());
            placements.push(Placement {
                origin: Vertex::new(*row, *col),
                recipe,
            });
        }
    }
    Some((block, placements))
}

/// Plans a proper coloring of the `rows x cols` grid as overlapping stamped
/// blocks, trying both orientations. Succeeds exactly on the shapes the
/// block machinery covers; the palette is `half_size` of the chosen block,
/// which equals the minimum `k`-ball size for every covered shape.
pub fn plan_grid(k: u32, rows: u32, cols: u32) -> Result<StampPlan, UnsupportedShape> {
    let dims = GridDims::new(rows, cols).map_err(|_| UnsupportedShape {
        dims: GridDims::new(rows.max(1), cols.max(1)).unwrap(),
        k,
        reason: "grid dimensions must be positive".into(),
    })?;
    for (transposed, r, l) in [(false, rows, cols), (true, cols, rows)] {
        if let Some((block, placements)) = plan_oriented(k, r, l) {
            return Ok(StampPlan {
                dims,
                k,
                block,
                transposed,
                placements,
            });
        }
    }
    let reason = if rows.min(cols) > k + 1 && rows.min(cols) <= k + k.div_ceil(2) + 1 {
        format!(
            "{} rows fall in the open band {}..={} where no block extension is known",
            rows.min(cols),
            k + 2,
            k + (k + 1).div_ceil(2)
        )
    } else {
        format!(
            "too few rows or columns to fit a {}-wide block or a legal overlap",
            2 * k + 2 - rows.min(cols).min(k + 1) + 1
        )
    };
    Err(UnsupportedShape { dims, k, reason })
}

/// Stamps every placement in order, requiring agreement wherever blocks
/// overlap. A conflict means the plan (or a shift map) is wrong, so it is
/// reported rather than overwritten.
pub fn apply_plan(plan: &StampPlan) -> Result<Coloring, ApplyError> {
    let work_dims = if plan.transposed {
        plan.dims.transposed()
    } else {
        plan.dims
    };
    let mut cells: Vec<u32> = vec![0; work_dims.cell_count()];
    for placement in &plan.placements {
        let f = apply_recipe(&placement.recipe, &plan.block)?;
        let stamped = stamp(&f, &plan.block)?;
        let origin = placement.origin;
        let end = Vertex::new(
            origin.row + plan.block.height() - 1,
            origin.col + plan.block.width() - 1,
        );
        if !work_dims.contains(origin) || !work_dims.contains(end) {
            return Err(ApplyError::PlacementOutOfBounds {
                origin,
                dims: work_dims,
            });
        }
        for v in stamped.dims().vertices() {
            let target = Vertex::new(origin.row + v.row - 1, origin.col + v.col - 1);
            let color = stamped.color_at(v);
            let slot = &mut cells[work_dims.index(target)];
            if *slot != 0 && *slot != color {
                return Err(ApplyError::OverlapConflict {
                    at: target,
                    expected: *slot,
                    found: color,
                });
            }
            *slot = color;
        }
    }
    if let Some(i) = cells.iter().position(|&c| c == 0) {
        return Err(ApplyError::Uncovered {
            at: work_dims.vertex_at(i),
        });
    }
    let coloring = Coloring::new(work_dims, plan.k, plan.palette(), cells)
        .map_err(ConstructError::from)?;
    Ok(if plan.transposed {
        coloring.transposed()
    } else {
        coloring
    })
}

/// Parameters of the modular coloring of the infinite grid: cell `(a, b)`
/// takes `(2k+1)a + b` modulo `2k^2 + 2k + 1`, one color per cell of a
/// radius-`k` ball.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfiniteColoringSpec {
    pub k: u32,
}

impl InfiniteColoringSpec {
    pub fn new(k: u32) -> Self {
        InfiniteColoringSpec { k }
    }

    pub fn modulus(&self) -> u64 {
        2 * self.k as u64 * self.k as u64 + 2 * self.k as u64 + 1
    }

    pub fn row_coefficient(&self) -> u64 {
        2 * self.k as u64 + 1
    }
}

/// Color of cell `(a, b)` in the infinite-grid coloring, as a residue in
/// `0..modulus`. Defined for all integers including negatives.
pub fn infinite_color(a: i64, b: i64, k: u32) -> u64 {
    let spec = InfiniteColoringSpec::new(k);
    let m = spec.modulus() as i128;
    let value = (spec.row_coefficient() as i128 * a as i128 + b as i128).rem_euclid(m);
    value as u64
}

/// A finite window of the infinite-grid coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteWindow {
    pub k: u32,
    pub row_range: Range<i64>,
    pub col_range: Range<i64>,
    /// Row-major over the window, colors in `0..modulus`.
    pub values: Vec<u64>,
}

impl InfiniteWindow {
    pub fn rows(&self) -> usize {
        (self.row_range.end - self.row_range.start) as usize
    }

    pub fn cols(&self) -> usize {
        (self.col_range.end - self.col_range.start) as usize
    }

    pub fn value_at(&self, a: i64, b: i64) -> u64 {
        debug_assert!(self.row_range.contains(&a) && self.col_range.contains(&b));
        let r = (a - self.row_range.start) as usize;
        let c = (b - self.col_range.start) as usize;
        self.values[r * self.cols() + c]
    }
}

/// Renders the infinite coloring over `row_range x col_range`. Ranges must be
/// nonempty.
pub fn infinite_window(k: u32, row_range: Range<i64>, col_range: Range<i64>) -> InfiniteWindow {
    assert!(
        !row_range.is_empty() && !col_range.is_empty(),
        "window must be nonempty"
    );
    let mut values =
        Vec::with_capacity(((row_range.end - row_range.start) * (col_range.end - col_range.start)) as usize);
    for a in row_range.clone() {
        for b in col_range.clone() {
            values.push(infinite_color(a, b, k));
        }
    }
    InfiniteWindow {
        k,
        row_range,
        col_range,
        values,
    }
}

/// Every pair of distinct cells at L1 distance at most `2k` gets distinct
/// colors under the infinite coloring; checked over the radius-`2k` ball
/// around the origin, which suffices for all of the plane by translation
/// invariance. This is exactly what makes every radius-`k` ball rainbow.
pub fn infinite_ball_is_rainbow(k: u32) -> bool {
    let radius = 2 * k as i64;
    let spec = InfiniteColoringSpec::new(k);
    // sort by color: only same-color pairs need a distance check
    let mut by_color: Vec<Vec<(i64, i64)>> = vec![Vec::new(); spec.modulus() as usize];
    for a in -radius..=radius {
        let budget = radius - a.abs();
        for b in -budget..=budget {
            by_color[infinite_color(a, b, k) as usize].push((a, b));
        }
    }
    for group in &by_color {
        for (i, &(a1, b1)) in group.iter().enumerate() {
            for &(a2, b2) in &group[i + 1..] {
                if (a1 - a2).abs() + (b1 - b2).abs() <= radius {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::verify_coloring;
    use std::collections::HashSet;

    fn columns(c: &Coloring) -> Vec<Vec<u32>> {
        (1..=c.dims().cols())
            .map(|col| {
                (1..=c.dims().rows())
                    .map(|row| c.color_at(Vertex::new(row, col)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn standard_block_k3_r4_is_the_reference_grid() {
        let c = standard_block(3, 4).unwrap();
        assert_eq!(
            columns(&c),
            vec![
                vec![1, 2, 3, 4],
                vec![5, 6, 7, 8],
                vec![9, 10, 10, 9],
                vec![8, 7, 6, 5],
                vec![4, 3, 2, 1],
            ]
        );
        assert!(verify_coloring(&c).proper);
    }

    #[test]
    fn standard_block_shallow_cases() {
        let c = standard_block(3, 1).unwrap();
        assert_eq!(c.cells(), &[1, 2, 3, 4, 4, 3, 2, 1]);
        assert!(verify_coloring(&c).proper);

        let c = standard_block(1, 1).unwrap();
        assert_eq!(c.cells(), &[1, 2, 2, 1]);
        assert!(verify_coloring(&c).proper);

        assert!(standard_block(3, 5).is_err());
        assert!(standard_block(3, 0).is_err());
    }

    #[test]
    fn standard_block_proper_for_all_heights() {
        for k in 1..=8 {
            for r in 1..=k + 1 {
                let c = standard_block(k, r).unwrap();
                assert_eq!(c.palette(), r * (2 * k - r + 3) / 2);
                assert!(verify_coloring(&c).proper, "k={k} r={r}");
            }
        }
    }

    #[test]
    fn stamp_identity_is_standard_block() {
        for k in 1..=6 {
            for r in 1..=k + 1 {
                let block = BlockSpec::new(k, r).unwrap();
                let stamped = stamp(&Permutation::identity(block.half_size()), &block).unwrap();
                assert_eq!(stamped, standard_block(k, r).unwrap());
            }
        }
        let block = BlockSpec::new(3, 4).unwrap();
        assert!(stamp(&Permutation::identity(9), &block).is_err());
    }

    #[test]
    fn stamp_shifted_blocks_match_figure_panels() {
        let block = BlockSpec::new(3, 4).unwrap();
        // horizontally shifted copy: columns 4..8 of the 4x8 extension
        let h2 = h_shift(&Permutation::identity(10), 2, 4).unwrap();
        assert_eq!(
            columns(&stamp(&h2, &block).unwrap()),
            vec![
                vec![8, 7, 6, 5],
                vec![4, 3, 2, 1],
                vec![9, 10, 10, 9],
                vec![1, 2, 3, 4],
                vec![5, 6, 7, 8],
            ]
        );
        // vertically shifted copy: rows 4..7 of the 7x5 extension
        let v1 = v_shift(&Permutation::identity(10), 1, 3).unwrap();
        let rows: Vec<Vec<u32>> = (1..=4)
            .map(|r| {
                (1..=5)
                    .map(|c| stamp(&v1, &block).unwrap().color_at(Vertex::new(r, c)))
                    .collect()
            })
            .collect();
        assert_eq!(
            rows,
            vec![
                vec![4, 8, 9, 5, 1],
                vec![2, 6, 10, 7, 3],
                vec![3, 7, 10, 6, 2],
                vec![1, 5, 9, 8, 4],
            ]
        );
    }

    #[test]
    fn plan_base_case_single_identity_placement() {
        let plan = plan_grid(3, 4, 5).unwrap();
        assert!(!plan.transposed);
        assert_eq!(plan.placements.len(), 1);
        assert_eq!(plan.placements[0].origin, Vertex::new(1, 1));
        assert!(plan.placements[0].recipe.is_empty());
    }

    #[test]
    fn plan_horizontal_extension_matches_figure() {
        let plan = plan_grid(3, 4, 8).unwrap();
        assert_eq!(plan.placements.len(), 2);
        assert_eq!(plan.placements[0].origin, Vertex::new(1, 1));
        assert_eq!(plan.placements[1].origin, Vertex::new(1, 4));
        assert_eq!(
            plan.placements[1].recipe,
            vec![ShiftOp::Horizontal { s: 2 }]
        );
        let c = apply_plan(&plan).unwrap();
        assert_eq!(
            columns(&c),
            vec![
                vec![1, 2, 3, 4],
                vec![5, 6, 7, 8],
                vec![9, 10, 10, 9],
                vec![8, 7, 6, 5],
                vec![4, 3, 2, 1],
                vec![9, 10, 10, 9],
                vec![1, 2, 3, 4],
                vec![5, 6, 7, 8],
            ]
        );
    }

    #[test]
    fn plan_vertical_extension_matches_figure() {
        let plan = plan_grid(3, 7, 5).unwrap();
        assert_eq!(plan.placements.len(), 2);
        assert_eq!(plan.placements[0].origin, Vertex::new(1, 1));
        assert_eq!(plan.placements[1].origin, Vertex::new(4, 1));
        assert_eq!(plan.placements[1].recipe, vec![ShiftOp::Vertical { t: 1 }]);
        let c = apply_plan(&plan).unwrap();
        let expected_rows = [
            [1, 5, 9, 8, 4],
            [2, 6, 10, 7, 3],
            [3, 7, 10, 6, 2],
            [4, 8, 9, 5, 1],
            [2, 6, 10, 7, 3],
            [3, 7, 10, 6, 2],
            [1, 5, 9, 8, 4],
        ];
        let flat: Vec<u32> = expected_rows.into_iter().flatten().collect();
        assert_eq!(c.cells(), &flat[..]);
    }

    #[test]
    fn plan_two_band_vertical_chain() {
        // 8 rows split into two disjoint full-height bands
        let plan = plan_grid(3, 8, 5).unwrap();
        assert_eq!(plan.placements.len(), 2);
        assert!(plan.placements.iter().all(|p| p.recipe.is_empty()));
        let c = apply_plan(&plan).unwrap();
        assert!(verify_coloring(&c).proper);
        assert_eq!(c.palette(), 10);
    }

    #[test]
    fn plan_transposes_when_needed() {
        let plan = plan_grid(3, 5, 7).unwrap();
        assert!(plan.transposed);
        let c = apply_plan(&plan).unwrap();
        assert_eq!(c.dims(), GridDims::new(5, 7).unwrap());
        assert!(verify_coloring(&c).proper);
    }

    #[test]
    fn plan_refuses_uncovered_shapes() {
        // the non-full holdouts at k=3
        for (r, l) in [(2, 4), (2, 5), (2, 6), (3, 5), (4, 4), (4, 6), (5, 5)] {
            assert!(plan_grid(3, r, l).is_err(), "{r}x{l}");
        }
        // open band instances for larger k
        let err = plan_grid(4, 7, 50).unwrap_err();
        assert!(err.reason.contains("open band"), "{}", err.reason);
        assert!(plan_grid(5, 8, 50).is_err());
        assert!(plan_grid(6, 9, 50).is_err());
    }

    #[test]
    fn corrupt_plan_raises_overlap_conflict() {
        let mut plan = plan_grid(3, 4, 8).unwrap();
        plan.placements[1].recipe = vec![ShiftOp::Horizontal { s: 1 }];
        assert!(matches!(
            apply_plan(&plan),
            Err(ApplyError::OverlapConflict { .. })
        ));
    }

    #[test]
    fn out_of_bounds_placement_is_reported() {
        let mut plan = plan_grid(3, 4, 5).unwrap();
        plan.placements[0].origin = Vertex::new(1, 2);
        assert!(matches!(
            apply_plan(&plan),
            Err(ApplyError::PlacementOutOfBounds { .. })
        ));
    }

    #[test]
    fn infinite_color_examples() {
        assert_eq!(infinite_color(0, 0, 3), 0);
        assert_eq!(infinite_color(1, 0, 1), 3);
        assert_eq!(InfiniteColoringSpec::new(1).modulus(), 5);
        assert_eq!(infinite_color(-1, 0, 1), 2);
        assert_eq!(infinite_color(0, -7, 1), 3);
    }

    #[test]
    fn infinite_origin_ball_has_all_colors() {
        let k = 3;
        let mut seen = HashSet::new();
        for a in -(k as i64)..=k as i64 {
            let budget = k as i64 - a.abs();
            for b in -budget..=budget {
                seen.insert(infinite_color(a, b, k));
            }
        }
        assert_eq!(seen.len(), 25);
    }

    #[test]
    fn infinite_window_translation_invariance() {
        let k = 2;
        let m = InfiniteColoringSpec::new(k).modulus() as i64;
        let w = infinite_window(k, -3..4, -3..4);
        for (da, db) in [(1, 0), (0, 1), (2, -3), (-1, 2)] {
            for a in -3..4 - da.max(0) {
                for b in -3..4 - db.max(0) {
                    if (-3..4).contains(&(a + da)) && (-3..4).contains(&(b + db)) {
                        let diff = (w.value_at(a + da, b + db) as i64 - w.value_at(a, b) as i64)
                            .rem_euclid(m);
                        let base = (w.value_at(da - 3 + 3, db - 3 + 3) as i64
                            - w.value_at(0, 0) as i64)
                            .rem_euclid(m);
                        assert_eq!(diff, base);
                    }
                }
            }
        }
    }

    #[test]
    fn infinite_window_shape() {
        let w = infinite_window(1, 0..1, 0..1);
        assert_eq!(w.values, vec![0]);
        let w = infinite_window(1, 0..5, 0..5);
        // each 5-cell row segment carries all 5 residues
        for r in 0..5 {
            let mut seen: Vec<u64> = (0..5).map(|c| w.value_at(r, c)).collect();
            seen.sort();
            assert_eq!(seen, vec![0, 1, 2, 3, 4]);
        }
    }

    #[test]
    fn rainbow_ball_property_small_k() {
        for k in 1..=10 {
            assert!(infinite_ball_is_rainbow(k), "k={k}");
        }
    }
}
