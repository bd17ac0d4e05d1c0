//! The permutation algebra behind block re-stamping.
//!
//! Colorings of a block that are isomorphic to the standard one are in
//! bijection with permutations of the first half of the block, so extending
//! a coloring sideways or downwards by an overlapping block reduces to
//! re-indexing a permutation. `h_shift` reverses a prefix (horizontal
//! extension), `v_shift` permutes within residue bands (vertical extension),
//! and the two families commute.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("permutation domain must be nonempty")]
    EmptyDomain,
    #[error("value {value} repeats or escapes 1..={n}: not a bijection")]
    NotBijective { value: u32, n: u32 },
    #[error("domain sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },
    #[error("prefix of {prefix} positions exceeds domain size {n}")]
    PrefixTooLong { prefix: u32, n: u32 },
    #[error("shift parameter {param}={value} is outside 1..={max}")]
    ParamRange {
        param: &'static str,
        value: u32,
        max: u32,
    },
    #[error("vertical shift needs domain size {expected} for k={k}, got {got}")]
    WrongDomain { k: u32, expected: u32, got: u32 },
}

/// A bijection on `{1..=n}`, stored densely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    // map[x-1] = image of x, 1-based values
    map: Vec<u32>,
}

impl Permutation {
    pub fn new(map: Vec<u32>) -> Result<Self, PermError> {
        if map.is_empty() {
            return Err(PermError::EmptyDomain);
        }
        let n = map.len() as u32;
        let mut seen = vec![false; map.len()];
        for &v in &map {
            if v == 0 || v > n || seen[(v - 1) as usize] {
                return Err(PermError::NotBijective { value: v, n });
            }
            seen[(v - 1) as usize] = true;
        }
        Ok(Permutation { map })
    }

    pub fn identity(n: u32) -> Self {
        Permutation {
            map: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> u32 {
        self.map.len() as u32
    }

    /// Image of `x` under the permutation, 1-based.
    pub fn apply(&self, x: u32) -> u32 {
        self.map[(x - 1) as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.map
    }

    pub fn inverse(&self) -> Permutation {
        let mut map = vec![0; self.map.len()];
        for (i, &v) in self.map.iter().enumerate() {
            map[(v - 1) as usize] = i as u32 + 1;
        }
        Permutation { map }
    }
}

/// `(g o f)(x) = g(f(x))`.
pub fn compose(g: &Permutation, f: &Permutation) -> Result<Permutation, PermError> {
    if g.n() != f.n() {
        return Err(PermError::SizeMismatch {
            left: g.n(),
            right: f.n(),
        });
    }
    Ok(Permutation {
        map: f.map.iter().map(|&v| g.apply(v)).collect(),
    })
}

/// Remainder of `x` mod `k+1` with the zero residue mapped to `k+1`, so the
/// result lands in `1..=k+1`. This is the row index a half-block position
/// occupies within its column.
pub fn modified_remainder(x: u32, k: u32) -> u32 {
    (x - 1) % (k + 1) + 1
}

/// Reverses the first `s * block_height` positions: the re-stamped block then
/// repeats the tail columns of its predecessor in mirror order, which is
/// exactly what a horizontal overlap of `s` columns requires. An involution
/// for fixed parameters.
pub fn h_shift(f: &Permutation, s: u32, block_height: u32) -> Result<Permutation, PermError> {
    if s == 0 {
        return Err(PermError::ParamRange {
            param: "s",
            value: s,
            max: f.n() / block_height.max(1),
        });
    }
    let prefix = s
        .checked_mul(block_height)
        .filter(|&p| p <= f.n())
        .ok_or(PermError::PrefixTooLong {
            prefix: s.saturating_mul(block_height),
            n: f.n(),
        })?;
    let map = (1..=f.n())
        .map(|x| {
            if x <= prefix {
                f.apply(prefix + 1 - x)
            } else {
                f.apply(x)
            }
        })
        .collect();
    Ok(Permutation { map })
}

/// Re-indexes a half-block of height `k+1` so the re-stamped block's first
/// `t` rows repeat the last `t` rows of its predecessor: a vertical overlap
/// of `t` rows. Positions split into residue bands of the row index; the
/// final two cases touch the trailing half-column that only exists for odd
/// `k`. Requires domain size `(k+1)(k+2)/2` and `1 <= t <= floor((k+1)/2)`.
pub fn v_shift(f: &Permutation, t: u32, k: u32) -> Result<Permutation, PermError> {
    let n = (k + 1) * (k + 2) / 2;
    if f.n() != n {
        return Err(PermError::WrongDomain {
            k,
            expected: n,
            got: f.n(),
        });
    }
    let t_max = (k + 1) / 2;
    if t == 0 || t > t_max {
        return Err(PermError::ParamRange {
            param: "t",
            value: t,
            max: t_max,
        });
    }
    let full_columns_end = (k + 1) * ((k + 2) / 2);
    let map = (1..=n)
        .map(|x| {
            let r = modified_remainder(x, k);
            let y = if x <= full_columns_end {
                if r <= t {
                    x + k + 1 - t
                } else if r <= k + 1 - t {
                    x
                } else {
                    x + t - (k + 1)
                }
            } else {
                // trailing half-column, k odd only
                if r <= t {
                    (k + 1) * (k + 1) + t + 1 - x
                } else {
                    x
                }
            };
            f.apply(y)
        })
        .collect();
    Ok(Permutation { map })
}

/// Legal parameter bounds for the shift maps at a given `k`:
/// `1 <= s <= floor((k+2)/2)` and `1 <= t <= floor((k+1)/2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftParams {
    pub k: u32,
    pub s: Option<u32>,
    pub t: Option<u32>,
}

impl ShiftParams {
    pub fn max_s(k: u32) -> u32 {
        (k + 2) / 2
    }

    pub fn max_t(k: u32) -> u32 {
        (k + 1) / 2
    }

    pub fn new(k: u32, s: Option<u32>, t: Option<u32>) -> Result<Self, PermError> {
        if let Some(s) = s {
            if s == 0 || s > Self::max_s(k) {
                return Err(PermError::ParamRange {
                    param: "s",
                    value: s,
                    max: Self::max_s(k),
                });
            }
        }
        if let Some(t) = t {
            if t == 0 || t > Self::max_t(k) {
                return Err(PermError::ParamRange {
                    param: "t",
                    value: t,
                    max: Self::max_t(k),
                });
            }
        }
        Ok(ShiftParams { k, s, t })
    }
}

/// Whether `v_t(h_s(f)) = h_s(v_t(f))` pointwise, with `h` acting on
/// `s*(k+1)`-long prefixes. Holds for every legal pair; exposed so tests can
/// hunt for counterexamples in mutated variants.
pub fn commute_check(f: &Permutation, s: u32, t: u32, k: u32) -> Result<bool, PermError> {
    let hv = v_shift(&h_shift(f, s, k + 1)?, t, k)?;
    let vh = h_shift(&v_shift(f, t, k)?, s, k + 1)?;
    Ok(hv == vh)
}
