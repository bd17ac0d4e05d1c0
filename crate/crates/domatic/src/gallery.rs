//! Machine-verified catalogue of explicit radius-3 colorings for the small
//! grids the block machinery cannot reach, plus the complete closed-form
//! radius-3 domatic number. Every entry is checked proper by the test suite,
//! which is what makes hand-transcribed data trustworthy.

use crate::grid::{Coloring, GridDims};

/// One catalogued coloring: dimensions, radius (always 3 here), the palette
/// it achieves, and a short label naming the entry.
#[derive(Debug, Clone)]
pub struct GalleryEntry {
    pub dims: GridDims,
    pub k: u32,
    pub t: u32,
    pub coloring: Coloring,
    pub source: &'static str,
}

struct RawEntry {
    rows: u32,
    cols: u32,
    t: u32,
    source: &'static str,
    cells: &'static [u32],
}

#[rustfmt::skip]
const RAW_ENTRIES: &[RawEntry] = &[
    RawEntry { rows: 2, cols: 4, t: 6, source: "G2x4", cells: &[
        1, 3, 5, 1,
        2, 4, 6, 2,
    ]},
    RawEntry { rows: 2, cols: 5, t: 6, source: "G2x5", cells: &[
        1, 3, 5, 1, 3,
        2, 4, 6, 2, 4,
    ]},
    RawEntry { rows: 2, cols: 6, t: 6, source: "G2x6", cells: &[
        1, 3, 5, 1, 3, 5,
        2, 4, 6, 2, 4, 6,
    ]},
    // color 7 fills a 2x2 middle block: a 7-cell class pattern, kept exactly
    RawEntry { rows: 2, cols: 8, t: 7, source: "G2x8", cells: &[
        1, 3, 5, 7, 7, 1, 3, 5,
        2, 4, 6, 7, 7, 2, 4, 6,
    ]},
    RawEntry { rows: 2, cols: 9, t: 7, source: "G2x9", cells: &[
        1, 3, 5, 7, 1, 7, 6, 4, 2,
        2, 4, 6, 7, 2, 7, 5, 3, 1,
    ]},
    RawEntry { rows: 2, cols: 10, t: 7, source: "G2x10", cells: &[
        1, 3, 5, 7, 1, 3, 7, 6, 4, 2,
        2, 4, 6, 7, 2, 4, 7, 5, 3, 1,
    ]},
    RawEntry { rows: 3, cols: 3, t: 7, source: "G3x3", cells: &[
        6, 4, 7,
        1, 5, 3,
        7, 2, 6,
    ]},
    RawEntry { rows: 3, cols: 4, t: 7, source: "G3x4", cells: &[
        6, 4, 7, 1,
        1, 5, 3, 2,
        7, 2, 6, 4,
    ]},
    RawEntry { rows: 3, cols: 5, t: 8, source: "G3x5", cells: &[
        4, 8, 6, 5, 2,
        7, 2, 1, 3, 8,
        3, 6, 5, 7, 4,
    ]},
    RawEntry { rows: 3, cols: 6, t: 9, source: "G3x6", cells: &[
        1, 4, 7, 9, 6, 3,
        2, 5, 8, 8, 5, 2,
        3, 6, 9, 7, 4, 1,
    ]},
    RawEntry { rows: 3, cols: 7, t: 9, source: "G3x7", cells: &[
        1, 4, 7, 9, 7, 6, 3,
        2, 5, 8, 3, 1, 2, 5,
        3, 6, 9, 7, 9, 4, 8,
    ]},
    RawEntry { rows: 4, cols: 4, t: 8, source: "G4x4", cells: &[
        1, 5, 6, 4,
        2, 7, 8, 3,
        3, 8, 7, 2,
        4, 6, 5, 1,
    ]},
    RawEntry { rows: 4, cols: 6, t: 9, source: "G4x6", cells: &[
        5, 7, 8, 6, 7, 5,
        2, 1, 9, 9, 4, 3,
        4, 3, 8, 8, 2, 1,
        6, 7, 5, 9, 7, 6,
    ]},
    RawEntry { rows: 4, cols: 7, t: 10, source: "G4x7", cells: &[
        1, 7, 9, 3, 10, 8, 1,
        10, 5, 4, 2, 4, 6, 9,
        8, 6, 3, 1, 3, 5, 7,
        2, 9, 7, 4, 8, 10, 2,
    ]},
    RawEntry { rows: 5, cols: 5, t: 9, source: "G5x5", cells: &[
        9, 8, 3, 7, 9,
        6, 5, 4, 6, 5,
        1, 2, 9, 1, 2,
        7, 8, 3, 7, 8,
        9, 5, 4, 6, 9,
    ]},
    RawEntry { rows: 6, cols: 6, t: 10, source: "G6x6", cells: &[
        4, 3, 6, 1, 10, 3,
        10, 7, 9, 5, 8, 2,
        2, 8, 1, 4, 9, 7,
        5, 9, 2, 3, 6, 4,
        4, 6, 7, 9, 5, 10,
        1, 10, 3, 8, 1, 2,
    ]},
    RawEntry { rows: 6, cols: 7, t: 10, source: "G6x7", cells: &[
        1, 2, 6, 10, 7, 1, 2,
        8, 3, 4, 8, 3, 4, 5,
        5, 9, 2, 5, 9, 8, 9,
        7, 10, 10, 6, 4, 10, 6,
        6, 2, 1, 7, 2, 1, 7,
        4, 3, 9, 8, 5, 4, 3,
    ]},
    RawEntry { rows: 7, cols: 7, t: 10, source: "G7x7", cells: &[
        8, 10, 4, 6, 5, 7, 8,
        7, 2, 1, 9, 1, 2, 10,
        9, 3, 6, 8, 6, 3, 9,
        5, 7, 4, 3, 5, 7, 4,
        9, 3, 6, 10, 6, 3, 9,
        8, 1, 2, 9, 2, 1, 10,
        10, 7, 4, 6, 5, 7, 8,
    ]},
];

/// All catalogued radius-3 colorings.
pub fn gallery_entries() -> Vec<GalleryEntry> {
    RAW_ENTRIES
        .iter()
        .map(|raw| {
            let dims = GridDims::new(raw.rows, raw.cols).expect("static dims are positive");
            let coloring = Coloring::new(dims, 3, raw.t, raw.cells.to_vec())
                .expect("static cells stay in palette range");
            GalleryEntry {
                dims,
                k: 3,
                t: raw.t,
                coloring,
                source: raw.source,
            }
        })
        .collect()
}

/// The exact radius-3 domatic number of the `r x l` grid, for every shape.
/// A closed form, not a solver call: nine small grids fall short of the
/// ball-size bound and everything else attains it.
pub fn d3_value(r: u32, l: u32) -> u32 {
    assert!(r >= 1 && l >= 1, "grid dimensions must be positive");
    let (r, l) = (r.min(l), r.max(l));
    match r {
        1 => l.min(4),
        2 => match l {
            2 => 4,
            3..=6 => 6,
            _ => 7,
        },
        3 => match l {
            3 | 4 => 7,
            5 => 8,
            _ => 9,
        },
        4 => match l {
            4 => 8,
            5 => 10,
            6 => 9,
            _ => 10,
        },
        5 => match l {
            5 => 9,
            _ => 10,
        },
        _ => 10,
    }
}

/// The nine grids (up to transposition) whose radius-3 domatic number stays
/// strictly below the minimum ball size.
pub const NON_FULL_GRIDS: [(u32, u32); 9] = [
    (2, 4),
    (2, 5),
    (2, 6),
    (3, 3),
    (3, 4),
    (3, 5),
    (4, 4),
    (4, 6),
    (5, 5),
];
