//! Explicit tiling enumeration and fault-line predicates. This route shares
//! no code with the DP in the parent module, so the two validate each other.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};

use super::Caps;
use crate::error::{Error, Result};
use crate::poly::BiPoly;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Dir {
    H,
    V,
}

/// One placed bar. `row` and `col` are 1-based anchors: the topmost cell for
/// a vertical bar, the leftmost cell for a horizontal one (row 1 = top row).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bar {
    pub dir: Dir,
    pub row: u32,
    pub col: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tiling {
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub bars: Vec<Bar>,
}

impl Tiling {
    /// Checks that the bars exactly cover the rectangle.
    pub fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::PreconditionViolated("bar length is zero".into()));
        }
        let (m, n, k) = (self.m as usize, self.n as usize, self.k as usize);
        let mut covered = vec![false; m * n];
        for bar in &self.bars {
            let (r, c) = (bar.row as usize, bar.col as usize);
            if r < 1 || c < 1 {
                return Err(Error::PreconditionViolated(format!(
                    "bar anchored at ({}, {}) out of range",
                    bar.row, bar.col
                )));
            }
            let (dr, dc) = match bar.dir {
                Dir::H => (1, k),
                Dir::V => (k, 1),
            };
            if r + dr - 1 > m || c + dc - 1 > n {
                return Err(Error::PreconditionViolated(format!(
                    "bar at ({}, {}) leaves the rectangle",
                    bar.row, bar.col
                )));
            }
            for i in 0..dr {
                for j in 0..dc {
                    let cell = (r - 1 + i) * n + (c - 1 + j);
                    if covered[cell] {
                        return Err(Error::PreconditionViolated(format!(
                            "cell ({}, {}) covered twice",
                            r + i,
                            c + j
                        )));
                    }
                    covered[cell] = true;
                }
            }
        }
        if covered.iter().all(|&c| c) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated("uncovered cell".into()))
        }
    }

    pub fn vertical_bars(&self) -> usize {
        self.bars.iter().filter(|b| b.dir == Dir::V).count()
    }

    pub fn horizontal_bars(&self) -> usize {
        self.bars.len() - self.vertical_bars()
    }

    /// `a^v b^h` for this tiling.
    pub fn weight(&self) -> BiPoly {
        BiPoly::monomial(
            BigInt::one(),
            self.vertical_bars() as u32,
            self.horizontal_bars() as u32,
        )
    }

    pub fn to_json(&self) -> Value {
        let bars: Vec<Value> = self
            .bars
            .iter()
            .map(|b| {
                json!({
                    "dir": match b.dir { Dir::H => "H", Dir::V => "V" },
                    "row": b.row,
                    "col": b.col,
                })
            })
            .collect();
        json!({"m": self.m, "n": self.n, "k": self.k, "bars": bars})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| -> Result<u32> {
            v.get(name)
                .and_then(Value::as_u64)
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Error::PreconditionViolated(format!("bad field {name}")))
        };
        let bars_json = v
            .get("bars")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::PreconditionViolated("bad field bars".into()))?;
        let mut bars = Vec::with_capacity(bars_json.len());
        for b in bars_json {
            let dir = match b.get("dir").and_then(Value::as_str) {
                Some("H") => Dir::H,
                Some("V") => Dir::V,
                _ => return Err(Error::PreconditionViolated("bad bar dir".into())),
            };
            let coord = |name: &str| -> Result<u32> {
                b.get(name)
                    .and_then(Value::as_u64)
                    .and_then(|x| u32::try_from(x).ok())
                    .ok_or_else(|| Error::PreconditionViolated(format!("bad bar {name}")))
            };
            bars.push(Bar {
                dir,
                row: coord("row")?,
                col: coord("col")?,
            });
        }
        let tiling = Tiling {
            m: field("m")?,
            n: field("n")?,
            k: field("k")?,
            bars,
        };
        tiling.validate()?;
        Ok(tiling)
    }
}

/// Visits every tiling in a fixed order: scan cells row-major from the top,
/// and at the first empty cell try a horizontal bar before a vertical one.
/// Returns the number of tilings visited.
pub fn visit_tilings(
    m: u32,
    n: u32,
    k: u32,
    caps: &Caps,
    f: &mut dyn FnMut(&Tiling),
) -> Result<u64> {
    assert!(k >= 1, "bar length must be positive");
    if m == 0 || n == 0 {
        let empty = Tiling {
            m,
            n,
            k,
            bars: Vec::new(),
        };
        f(&empty);
        return Ok(1);
    }
    let (mu, nu, ku) = (m as usize, n as usize, k as usize);
    let mut grid = vec![false; mu * nu];
    let mut bars: Vec<Bar> = Vec::new();
    let mut count = 0u64;

    fn go(
        from: usize,
        grid: &mut Vec<bool>,
        bars: &mut Vec<Bar>,
        count: &mut u64,
        dims: (usize, usize, usize),
        caps: &Caps,
        meta: (u32, u32, u32),
        f: &mut dyn FnMut(&Tiling),
    ) -> Result<()> {
        let (mu, nu, ku) = dims;
        let mut idx = from;
        while idx < mu * nu && grid[idx] {
            idx += 1;
        }
        if idx == mu * nu {
            *count += 1;
            if u128::from(*count) > caps.enumeration {
                return Err(Error::CapacityExceeded {
                    needed: u128::from(*count),
                    cap: caps.enumeration,
                });
            }
            let t = Tiling {
                m: meta.0,
                n: meta.1,
                k: meta.2,
                bars: bars.clone(),
            };
            f(&t);
            return Ok(());
        }
        let (r, c) = (idx / nu, idx % nu);
        // horizontal bar: cells to the right may already be taken
        if c + ku <= nu && (0..ku).all(|j| !grid[idx + j]) {
            for j in 0..ku {
                grid[idx + j] = true;
            }
            bars.push(Bar {
                dir: Dir::H,
                row: r as u32 + 1,
                col: c as u32 + 1,
            });
            go(idx + ku, grid, bars, count, dims, caps, meta, f)?;
            bars.pop();
            for j in 0..ku {
                grid[idx + j] = false;
            }
        }
        // vertical bar: nothing below the first empty cell of a column is
        // ever occupied yet, so only the bound needs checking
        if r + ku <= mu {
            for i in 0..ku {
                grid[idx + i * nu] = true;
            }
            bars.push(Bar {
                dir: Dir::V,
                row: r as u32 + 1,
                col: c as u32 + 1,
            });
            go(idx + 1, grid, bars, count, dims, caps, meta, f)?;
            bars.pop();
            for i in 0..ku {
                grid[idx + i * nu] = false;
            }
        }
        Ok(())
    }

    go(
        0,
        &mut grid,
        &mut bars,
        &mut count,
        (mu, nu, ku),
        caps,
        (m, n, k),
        f,
    )?;
    Ok(count)
}

/// Collects the full list of tilings (small instances only; bounded by the
/// enumeration capacity).
pub fn enumerate_tilings(m: u32, n: u32, k: u32) -> Result<Vec<Tiling>> {
    let mut out = Vec::new();
    visit_tilings(m, n, k, &Caps::from_env(), &mut |t| out.push(t.clone()))?;
    Ok(out)
}

/// Fault lines of a tiling. `vertical` holds `x ∈ 1..n−1` (cells to the left
/// of the line); `horizontal` holds `y ∈ 1..m−1` counted from the bottom.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Faults {
    pub vertical: BTreeSet<u32>,
    pub horizontal: BTreeSet<u32>,
}

/// Computes both fault sets: a line is a fault iff no bar interior crosses it.
pub fn fault_predicates(t: &Tiling) -> Faults {
    let (m, n, k) = (t.m, t.n, t.k);
    let mut vertical: BTreeSet<u32> = (1..n).collect();
    let mut horizontal: BTreeSet<u32> = (1..m).collect();
    for bar in &t.bars {
        match bar.dir {
            Dir::H => {
                // spans columns col..col+k-1, crossing x = col..col+k-2
                for x in bar.col..bar.col + k - 1 {
                    vertical.remove(&x);
                }
            }
            Dir::V => {
                // spans rows row..row+k-1 from the top; measured from the
                // bottom it crosses y = m-row-k+2 ..= m-row
                for y in (m + 2 - bar.row - k)..=(m - bar.row) {
                    horizontal.remove(&y);
                }
            }
        }
    }
    Faults {
        vertical,
        horizontal,
    }
}

pub fn is_vertically_fault_free(t: &Tiling) -> bool {
    fault_predicates(t).vertical.is_empty()
}

/// True iff the rectangle splits along its horizontal midline.
pub fn has_central_fault(t: &Tiling) -> bool {
    t.m % 2 == 0 && t.m >= 2 && fault_predicates(t).horizontal.contains(&(t.m / 2))
}

/// True iff some window of `k` contiguous rows contains every vertical bar
/// (vacuously true without vertical bars). Since a vertical bar spans exactly
/// `k` rows, this forces every vertical bar to share one anchor row.
pub fn vertical_bars_in_k_contiguous_rows(t: &Tiling) -> bool {
    let mut anchors = t.bars.iter().filter(|b| b.dir == Dir::V).map(|b| b.row);
    match anchors.next() {
        Some(first) => anchors.all(|r| r == first),
        None => true,
    }
}

/// Which census of `2k × n` tilings to total up.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CensusKind {
    /// `h`: tilings with a central fault.
    CentralFault,
    /// `v`: vertically fault-free tilings with a central fault.
    CentralAndVff,
    /// `u`: vertically fault-free tilings without a central fault.
    VffNoCentral,
    /// `w`: vertically fault-free tilings.
    Vff,
}

impl CensusKind {
    pub fn from_letter(s: &str) -> Option<Self> {
        match s {
            "h" => Some(CensusKind::CentralFault),
            "v" => Some(CensusKind::CentralAndVff),
            "u" => Some(CensusKind::VffNoCentral),
            "w" => Some(CensusKind::Vff),
            _ => None,
        }
    }
}

/// Sum of `a^v b^h` over the `2k × n` tilings passing the chosen filter.
pub fn empirical_series_with(kind: CensusKind, k: u32, n: u32, caps: &Caps) -> Result<BiPoly> {
    assert!(k >= 1, "bar length must be positive");
    let mut total = BiPoly::zero();
    visit_tilings(2 * k, n, k, caps, &mut |t| {
        let faults = fault_predicates(t);
        let central = faults.horizontal.contains(&k);
        let vff = faults.vertical.is_empty();
        let keep = match kind {
            CensusKind::CentralFault => central,
            CensusKind::CentralAndVff => central && vff,
            CensusKind::VffNoCentral => vff && !central,
            CensusKind::Vff => vff,
        };
        if keep {
            total = total.add(&t.weight());
        }
    })?;
    Ok(total)
}

pub fn empirical_series(kind: CensusKind, k: u32, n: u32) -> Result<BiPoly> {
    empirical_series_with(kind, k, n, &Caps::from_env())
}
