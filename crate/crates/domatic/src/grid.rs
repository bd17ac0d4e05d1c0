//! Grid geometry, L1 distances and balls, coloring storage, and the
//! properness verifier.
//!
//! A coloring with palette `t` is *proper* for radius `k` when every vertex
//! has every color in `1..=t` within L1 distance `k`. Equivalently, each
//! color class is a `k`-distance dominating set.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GridError {
    #[error("vertex {vertex} is outside the {dims} grid")]
    OutOfBounds { vertex: Vertex, dims: GridDims },
    #[error("grid dimensions must be at least 1x1")]
    EmptyDims,
    #[error("palette must contain at least one color")]
    EmptyPalette,
    #[error("expected {expected} cells for {dims}, got {got}")]
    CellCount {
        dims: GridDims,
        expected: usize,
        got: usize,
    },
    #[error("cell {vertex} holds color {color}, outside 1..={palette}")]
    ColorOutOfRange {
        vertex: Vertex,
        color: u32,
        palette: u32,
    },
    #[error("color {color} is outside 1..={palette}")]
    UnknownColor { color: u32, palette: u32 },
}

/// Rectangle dimensions of a grid graph: `rows x cols` vertices, edges
/// between cells at L1 distance 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridDims {
    rows: u32,
    cols: u32,
}

impl GridDims {
    pub fn new(rows: u32, cols: u32) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::EmptyDims);
        }
        Ok(GridDims { rows, cols })
    }

    pub fn rows(&self) -> u32 {
        self.rows
    }

    pub fn cols(&self) -> u32 {
        self.cols
    }

    pub fn cell_count(&self) -> usize {
        self.rows as usize * self.cols as usize
    }

    pub fn transposed(&self) -> GridDims {
        GridDims {
            rows: self.cols,
            cols: self.rows,
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.rows).contains(&v.row) && (1..=self.cols).contains(&v.col)
    }

    fn check(&self, v: Vertex) -> Result<(), GridError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GridError::OutOfBounds {
                vertex: v,
                dims: *self,
            })
        }
    }

    /// Row-major cell index of an in-bounds vertex.
    pub fn index(&self, v: Vertex) -> usize {
        debug_assert!(self.contains(v));
        (v.row as usize - 1) * self.cols as usize + (v.col as usize - 1)
    }

    pub fn vertex_at(&self, index: usize) -> Vertex {
        debug_assert!(index < self.cell_count());
        Vertex {
            row: (index / self.cols as usize) as u32 + 1,
            col: (index % self.cols as usize) as u32 + 1,
        }
    }

    /// All vertices in row-major order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let cols = self.cols;
        (1..=self.rows).flat_map(move |row| (1..=cols).map(move |col| Vertex { row, col }))
    }

    pub fn corners(&self) -> [Vertex; 4] {
        [
            Vertex::new(1, 1),
            Vertex::new(1, self.cols),
            Vertex::new(self.rows, 1),
            Vertex::new(self.rows, self.cols),
        ]
    }
}

impl fmt::Display for GridDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// A 1-based grid cell position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub row: u32,
    pub col: u32,
}

impl Vertex {
    pub fn new(row: u32, col: u32) -> Self {
        Vertex { row, col }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// L1 distance between two cells, which equals the shortest-path length in
/// the grid graph.
pub fn grid_distance(u: Vertex, v: Vertex) -> u32 {
    u.row.abs_diff(v.row) + u.col.abs_diff(v.col)
}

/// Like [`grid_distance`] but rejects vertices outside `dims`.
pub fn checked_grid_distance(dims: GridDims, u: Vertex, v: Vertex) -> Result<u32, GridError> {
    dims.check(u)?;
    dims.check(v)?;
    Ok(grid_distance(u, v))
}

/// Number of vertices within distance `k` of `center`, counted by direct
/// enumeration of the rows the ball touches.
pub fn ball_size(dims: GridDims, center: Vertex, k: u32) -> Result<u32, GridError> {
    dims.check(center)?;
    let mut count = 0u32;
    let lo = center.row.saturating_sub(k).max(1);
    let hi = (center.row + k).min(dims.rows);
    for row in lo..=hi {
        let budget = k - center.row.abs_diff(row);
        let left = center.col.saturating_sub(budget).max(1);
        let right = (center.col + budget).min(dims.cols);
        count += right - left + 1;
    }
    Ok(count)
}

/// Minimum over all vertices of the closed `k`-ball size, by the closed-form
/// corner sum. The minimum is attained at a corner, so with `r <= l` this is
/// `sum_{i=0}^{r-1} max(0, min(l, k+1-i))`; dimensions are normalized
/// internally so either orientation may be passed.
pub fn min_k_degree(dims: GridDims, k: u32) -> u32 {
    let r = dims.rows.min(dims.cols);
    let l = dims.rows.max(dims.cols);
    (0..r)
        .map(|i| l.min((k + 1).saturating_sub(i)))
        .sum()
}

/// Vertices whose `k`-ball covers the whole grid. A single cell of some
/// color can dominate every vertex only from such a position. Membership is
/// decided by the four corner distances, the farthest cells from any vertex.
pub fn dominating_vertices(dims: GridDims, k: u32) -> Vec<Vertex> {
    let corners = dims.corners();
    dims.vertices()
        .filter(|&v| corners.iter().all(|&c| grid_distance(v, c) <= k))
        .collect()
}

/// A total assignment of colors `1..=palette` to the cells of a grid,
/// together with the domination radius it is meant for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    dims: GridDims,
    k: u32,
    palette: u32,
    cells: Vec<u32>,
}

impl Coloring {
    /// Builds a coloring from row-major cell data, validating the color range.
    pub fn new(dims: GridDims, k: u32, palette: u32, cells: Vec<u32>) -> Result<Self, GridError> {
        if palette == 0 {
            return Err(GridError::EmptyPalette);
        }
        if cells.len() != dims.cell_count() {
            return Err(GridError::CellCount {
                dims,
                expected: dims.cell_count(),
                got: cells.len(),
            });
        }
        for (i, &c) in cells.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(GridError::ColorOutOfRange {
                    vertex: dims.vertex_at(i),
                    color: c,
                    palette,
                });
            }
        }
        Ok(Coloring {
            dims,
            k,
            palette,
            cells,
        })
    }

    pub fn from_fn(
        dims: GridDims,
        k: u32,
        palette: u32,
        f: impl Fn(Vertex) -> u32,
    ) -> Result<Self, GridError> {
        let cells = dims.vertices().map(f).collect();
        Coloring::new(dims, k, palette, cells)
    }

    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn color_at(&self, v: Vertex) -> u32 {
        self.cells[self.dims.index(v)]
    }

    /// Row-major cell data.
    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    /// Swaps the roles of rows and columns; properness is preserved.
    pub fn transposed(&self) -> Coloring {
        let dims = self.dims.transposed();
        let cells = dims
            .vertices()
            .map(|v| self.color_at(Vertex::new(v.col, v.row)))
            .collect();
        Coloring {
            dims,
            k: self.k,
            palette: self.palette,
            cells,
        }
    }
}

/// Distances from every cell to the nearest cell of one fixed color.
#[derive(Debug, Clone)]
pub struct DistanceField {
    dims: GridDims,
    values: Vec<u32>,
}

/// Larger than any distance inside a real grid; marks "no source seen yet"
/// during the sweeps and a color that never appears once they finish.
const UNREACHED: u32 = u32::MAX / 2;

impl DistanceField {
    pub fn dims(&self) -> GridDims {
        self.dims
    }

    pub fn value_at(&self, v: Vertex) -> u32 {
        self.values[self.dims.index(v)]
    }
}

/// Exact L1 distance transform for one color: a forward and a backward
/// chamfer sweep over the row-major array. Two passes are exact for the
/// 4-neighborhood.
pub fn distance_field(coloring: &Coloring, color: u32) -> Result<DistanceField, GridError> {
    if color == 0 || color > coloring.palette {
        return Err(GridError::UnknownColor {
            color,
            palette: coloring.palette,
        });
    }
    let dims = coloring.dims;
    let (rows, cols) = (dims.rows as usize, dims.cols as usize);
    let mut values = vec![UNREACHED; coloring.cells.len()];
    for (i, &c) in coloring.cells.iter().enumerate() {
        if c == color {
            values[i] = 0;
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            let i = r * cols + c;
            if r > 0 {
                values[i] = values[i].min(values[i - cols] + 1);
            }
            if c > 0 {
                values[i] = values[i].min(values[i - 1] + 1);
            }
        }
    }
    for r in (0..rows).rev() {
        for c in (0..cols).rev() {
            let i = r * cols + c;
            if r + 1 < rows {
                values[i] = values[i].min(values[i + cols] + 1);
            }
            if c + 1 < cols {
                values[i] = values[i].min(values[i + 1] + 1);
            }
        }
    }
    Ok(DistanceField { dims, values })
}

/// Outcome of a properness check. `proper` holds exactly when no
/// `(vertex, missing color)` pair was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub proper: bool,
    /// Row-major by vertex, ascending color within a vertex.
    pub violations: Vec<(Vertex, u32)>,
}

/// Checks that every vertex sees every color within distance `k`, one
/// distance transform per color. Total cost `O(palette * rows * cols)`.
pub fn verify_coloring(coloring: &Coloring) -> VerificationReport {
    let dims = coloring.dims;
    let mut violations: Vec<(Vertex, u32)> = Vec::new();
    for color in 1..=coloring.palette {
        let field = distance_field(coloring, color).expect("color in palette range");
        for (i, &d) in field.values.iter().enumerate() {
            if d > coloring.k {
                violations.push((dims.vertex_at(i), color));
            }
        }
    }
    violations.sort_by_key(|&(v, color)| (dims.index(v), color));
    VerificationReport {
        proper: violations.is_empty(),
        violations,
    }
}
