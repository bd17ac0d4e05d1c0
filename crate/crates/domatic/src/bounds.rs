//! Infeasibility certificates: machine-checkable pigeonhole witnesses that
//! no proper coloring with a given palette exists.
//!
//! Two arguments are implemented. The singleton count: with `n` cells and
//! `t` colors, at least `2t - n` color classes are singletons, and a
//! singleton class only dominates from a vertex whose ball covers the whole
//! grid. The two-ball count: when the two opposite corner balls each hold
//! exactly `t` cells and are disjoint, both are rainbow, and a color whose
//! corner-ball cell leaves two far-apart vertices uncovered needs a third
//! cell; too many such colors overrun the cell budget.

use thiserror::Error;

use crate::grid::{ball_size, dominating_vertices, grid_distance, GridDims, Vertex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate names vertex {vertex} outside the {dims} grid")]
    OutOfBounds { vertex: Vertex, dims: GridDims },
    #[error("certificate palette must be at least 1")]
    EmptyPalette,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    SingletonCount,
    TwoBall,
}

/// A qualifying corner-ball position together with the two vertices its ball
/// leaves uncovered that are too far apart for any single extra cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoBallWitness {
    pub position: Vertex,
    pub uncovered_pair: (Vertex, Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateData {
    SingletonCount {
        /// `max(0, 2t - n)`: how many color classes must be singletons.
        required_singletons: u32,
        /// The only vertices a singleton class can sit on.
        dominating: Vec<Vertex>,
    },
    TwoBall {
        /// The opposite corners whose balls form the rainbow sets.
        corners: (Vertex, Vertex),
        /// Positions in the first ball whose color needs three or more cells.
        qualifying: Vec<TwoBallWitness>,
    },
}

/// An infeasibility witness for "no proper coloring of `dims` with palette
/// `t` at radius `k`", re-checkable from its data alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub dims: GridDims,
    pub k: u32,
    pub t: u32,
    pub data: CertificateData,
}

impl Certificate {
    pub fn kind(&self) -> CertificateKind {
        match self.data {
            CertificateData::SingletonCount { .. } => CertificateKind::SingletonCount,
            CertificateData::TwoBall { .. } => CertificateKind::TwoBall,
        }
    }
}

/// Certificate that `t` colors force more singleton classes than there are
/// grid-covering vertices, or `None` when the count does not reach.
pub fn singleton_pigeonhole(dims: GridDims, k: u32, t: u32) -> Option<Certificate> {
    let n = dims.cell_count() as u64;
    let required = (2 * t as u64).saturating_sub(n);
    if required == 0 {
        return None;
    }
    let dominating = dominating_vertices(dims, k);
    if required <= dominating.len() as u64 {
        return None;
    }
    Some(Certificate {
        dims,
        k,
        t,
        data: CertificateData::SingletonCount {
            required_singletons: required as u32,
            dominating,
        },
    })
}

fn ball_cells(dims: GridDims, center: Vertex, k: u32) -> Vec<Vertex> {
    dims.vertices()
        .filter(|&v| grid_distance(v, center) <= k)
        .collect()
}

/// Lexicographically first pair of vertices outside `B_k(position)` at
/// distance at least `2k + 1`, if one exists.
fn far_uncovered_pair(dims: GridDims, position: Vertex, k: u32) -> Option<(Vertex, Vertex)> {
    let uncovered: Vec<Vertex> = dims
        .vertices()
        .filter(|&v| grid_distance(v, position) > k)
        .collect();
    for (i, &u) in uncovered.iter().enumerate() {
        for &v in &uncovered[i + 1..] {
            if grid_distance(u, v) >= 2 * k + 1 {
                return Some((u, v));
            }
        }
    }
    None
}

fn two_ball_for_corners(
    dims: GridDims,
    k: u32,
    t: u32,
    corners: (Vertex, Vertex),
) -> Option<Certificate> {
    let s_cells = ball_cells(dims, corners.0, k);
    let t_size = ball_size(dims, corners.1, k).expect("corner in bounds");
    if s_cells.len() as u32 != t || t_size != t {
        return None;
    }
    // disjointness: both corners at distance > 2k from each other's balls
    if s_cells
        .iter()
        .any(|&v| grid_distance(v, corners.1) <= k)
    {
        return None;
    }
    let qualifying: Vec<TwoBallWitness> = s_cells
        .iter()
        .filter_map(|&p| {
            far_uncovered_pair(dims, p, k).map(|pair| TwoBallWitness {
                position: p,
                uncovered_pair: pair,
            })
        })
        .collect();
    let spare = dims.cell_count() as u64 - 2 * t as u64;
    if qualifying.len() as u64 <= spare {
        return None;
    }
    Some(Certificate {
        dims,
        k,
        t,
        data: CertificateData::TwoBall { corners, qualifying },
    })
}

/// Certificate from the disjoint rainbow corner-ball argument, or `None`
/// when the balls have the wrong size, intersect, or the count of colors
/// forced to triple up stays within the spare cell budget. Both diagonals
/// are tried and the stronger certificate kept.
pub fn two_ball_pigeonhole(dims: GridDims, k: u32, t: u32) -> Option<Certificate> {
    if 2 * t as u64 > dims.cell_count() as u64 {
        return None;
    }
    let main_diag = (
        Vertex::new(1, 1),
        Vertex::new(dims.rows(), dims.cols()),
    );
    let anti_diag = (
        Vertex::new(1, dims.cols()),
        Vertex::new(dims.rows(), 1),
    );
    let a = two_ball_for_corners(dims, k, t, main_diag);
    let b = two_ball_for_corners(dims, k, t, anti_diag);
    let count = |c: &Certificate| match &c.data {
        CertificateData::TwoBall { qualifying, .. } => qualifying.len(),
        _ => 0,
    };
    match (a, b) {
        (Some(a), Some(b)) => Some(if count(&b) > count(&a) { b } else { a }),
        (Some(a), None) => Some(a),
        (None, Some(b)) => Some(b),
        (None, None) => None,
    }
}

/// Re-validates every count and distance the certificate claims, from
/// scratch. `Ok(true)` means the pigeonhole inequality really follows;
/// vertices outside the grid make the certificate malformed instead.
pub fn check_certificate(cert: &Certificate) -> Result<bool, CertificateError> {
    let dims = cert.dims;
    if cert.t == 0 {
        return Err(CertificateError::EmptyPalette);
    }
    let check_vertex = |v: Vertex| {
        if dims.contains(v) {
            Ok(())
        } else {
            Err(CertificateError::OutOfBounds { vertex: v, dims })
        }
    };
    let n = dims.cell_count() as u64;
    match &cert.data {
        CertificateData::SingletonCount {
            required_singletons,
            dominating,
        } => {
            for &v in dominating {
                check_vertex(v)?;
            }
            if *required_singletons as u64 != (2 * cert.t as u64).saturating_sub(n) {
                return Ok(false);
            }
            let mut claimed = dominating.clone();
            claimed.sort();
            claimed.dedup();
            let mut actual = dominating_vertices(dims, cert.k);
            actual.sort();
            if claimed != actual {
                return Ok(false);
            }
            Ok(*required_singletons as u64 > actual.len() as u64)
        }
        CertificateData::TwoBall { corners, qualifying } => {
            check_vertex(corners.0)?;
            check_vertex(corners.1)?;
            let s_cells = ball_cells(dims, corners.0, cert.k);
            if s_cells.len() as u32 != cert.t
                || ball_size(dims, corners.1, cert.k).map_err(|_| {
                    CertificateError::OutOfBounds {
                        vertex: corners.1,
                        dims,
                    }
                })? != cert.t
            {
                return Ok(false);
            }
            if s_cells
                .iter()
                .any(|&v| grid_distance(v, corners.1) <= cert.k)
            {
                return Ok(false);
            }
            let mut positions: Vec<Vertex> = Vec::new();
            for w in qualifying {
                check_vertex(w.position)?;
                check_vertex(w.uncovered_pair.0)?;
                check_vertex(w.uncovered_pair.1)?;
                if !s_cells.contains(&w.position) {
                    return Ok(false);
                }
                let (u, v) = w.uncovered_pair;
                if grid_distance(u, w.position) <= cert.k
                    || grid_distance(v, w.position) <= cert.k
                    || grid_distance(u, v) < 2 * cert.k + 1
                {
                    return Ok(false);
                }
                positions.push(w.position);
            }
            positions.sort();
            positions.dedup();
            if positions.len() != qualifying.len() {
                return Ok(false);
            }
            if 2 * cert.t as u64 > n {
                return Ok(false);
            }
            Ok(qualifying.len() as u64 > n - 2 * cert.t as u64)
        }
    }
}
