use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::combinatorics::{AffineWeight, FusionContext};
use crate::error::{FusionError, Result};

/// Edge occupations around one vertex: `a` enters from the left, `b` from
/// below, `c` leaves to the right and `d` leaves upwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

impl Vertex {
    /// Conservation `a + b = c + d`, and walkers only turn right from below.
    pub fn is_allowed(&self) -> bool {
        self.a + self.b == self.c + self.d && self.c <= self.b
    }
}

/// One lattice row of `n` vertices around the cylinder.
///
/// The seam is the horizontal edge joining column `n` back to column 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub vertices: Vec<Vertex>,
}

impl Row {
    pub fn seam(&self) -> usize {
        self.vertices[0].a
    }

    /// Number of occupied horizontal edges; the exponent of `x_i`.
    pub fn horizontal_edges(&self) -> usize {
        self.vertices.iter().map(|v| v.a).sum()
    }

    pub fn bottom(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.b).collect()
    }

    pub fn top(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.d).collect()
    }
}

/// A configuration of the `(n−1) × n` cylinder, rows listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeConfig {
    pub rows: Vec<Row>,
}

impl LatticeConfig {
    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, |r| r.vertices.len())
    }

    pub fn horizontal_edges(&self) -> Vec<usize> {
        self.rows.iter().map(Row::horizontal_edges).collect()
    }

    /// Occupied outer horizontal edges. The seam is cut open on the
    /// cylinder, so each walker on it is counted once on either side.
    pub fn outer_edges(&self) -> usize {
        2 * self.z_degree()
    }

    pub fn z_degree(&self) -> usize {
        self.rows.iter().map(Row::seam).sum()
    }

    pub fn bottom(&self) -> Vec<usize> {
        self.rows.first().map(Row::bottom).unwrap_or_default()
    }

    pub fn top(&self) -> Vec<usize> {
        self.rows.last().map(Row::top).unwrap_or_default()
    }

    /// Checks the local vertex rules and the gluing of all edges.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        for (i, row) in self.rows.iter().enumerate() {
            if row.vertices.len() != n {
                return Err(FusionError::Invariant(format!(
                    "row {} has the wrong width",
                    i + 1
                )));
            }
            for (j, v) in row.vertices.iter().enumerate() {
                if !v.is_allowed() {
                    return Err(FusionError::Invariant(format!(
                        "vertex ({}, {}) = {v:?} is not allowed",
                        i + 1,
                        j + 1
                    )));
                }
                if row.vertices[(j + 1) % n].a != v.c {
                    return Err(FusionError::Invariant(format!(
                        "horizontal edge after vertex ({}, {}) does not glue",
                        i + 1,
                        j + 1
                    )));
                }
            }
            if i > 0 && self.rows[i - 1].top() != row.bottom() {
                return Err(FusionError::Invariant(format!(
                    "vertical edges between rows {i} and {} do not glue",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// `{"rows": [{"vertices": [[a,b,c,d], …], "seam": s}, …]}`, bottom row first.
    pub fn to_json_value(&self) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let vs: Vec<Value> = r
                    .vertices
                    .iter()
                    .map(|v| json!([v.a, v.b, v.c, v.d]))
                    .collect();
                json!({ "vertices": vs, "seam": r.seam() })
            })
            .collect();
        json!({ "rows": rows })
    }
}

/// All rows with bottom boundary `m`, built vertex by vertex after fixing
/// the seam value `seam`.
pub fn rows_with_seam(m: &[usize], seam: usize) -> Vec<Row> {
    let n = m.len();
    let mut out = Vec::new();
    if n == 0 || seam > m[n - 1] {
        return out;
    }
    fn rec(m: &[usize], seam: usize, left: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Row>) {
        let j = cur.len();
        let n = m.len();
        let b = m[j];
        let range = if j + 1 == n { seam..=seam } else { 0..=b };
        for c in range {
            if c > b {
                break;
            }
            cur.push(Vertex {
                a: left,
                b,
                c,
                d: left + b - c,
            });
            if j + 1 == n {
                out.push(Row {
                    vertices: cur.clone(),
                });
            } else {
                rec(m, seam, c, cur, out);
            }
            cur.pop();
        }
    }
    rec(m, seam, seam, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All rows with bottom boundary `m`, grouped by seam value.
pub fn rows_from(m: &[usize]) -> Vec<Row> {
    let top = m.last().copied().unwrap_or(0);
    (0..=top).flat_map(|s| rows_with_seam(m, s)).collect()
}

/// States from which the top boundary is reachable in the remaining rows.
///
/// `reach[i]` holds the admissible bottom boundaries of row `i`.
fn backward_reachable(ctx: &FusionContext, nu: &[usize]) -> Vec<BTreeSet<Vec<usize>>> {
    let rows = ctx.n() - 1;
    let step: HashMap<Vec<usize>, BTreeSet<Vec<usize>>> = ctx
        .basis()
        .iter()
        .map(|w| {
            let m = w.labels().to_vec();
            let tops = rows_from(&m).iter().map(Row::top).collect();
            (m, tops)
        })
        .collect();
    let mut reach = vec![BTreeSet::new(); rows + 1];
    reach[rows].insert(nu.to_vec());
    for i in (0..rows).rev() {
        let next = reach[i + 1].clone();
        reach[i] = step
            .iter()
            .filter(|(_, tops)| tops.iter().any(|t| next.contains(t)))
            .map(|(m, _)| m.clone())
            .collect();
    }
    reach
}

fn check_boundaries(mu: &AffineWeight, nu: &AffineWeight, ctx: &FusionContext) -> Result<()> {
    ctx.check_weight(mu)?;
    ctx.check_weight(nu)
}

fn extend(
    reach: &[BTreeSet<Vec<usize>>],
    rows: &mut Vec<Row>,
    first_only: bool,
    out: &mut Vec<LatticeConfig>,
) {
    let i = rows.len();
    if i + 1 == reach.len() {
        out.push(LatticeConfig { rows: rows.clone() });
        return;
    }
    let bottom = rows.last().expect("first row fixed by the caller").top();
    for row in rows_from(&bottom) {
        if !reach[i + 1].contains(&row.top()) {
            continue;
        }
        rows.push(row);
        extend(reach, rows, first_only, out);
        rows.pop();
        if first_only && !out.is_empty() {
            return;
        }
    }
}

/// Every configuration with bottom boundary `m(μ̂)` and top boundary `m(ν̂)`.
///
/// The first row is split by seam value and the branches run in parallel;
/// the output order does not depend on scheduling.
pub fn enumerate_lattice_configs(
    mu: &AffineWeight,
    nu: &AffineWeight,
    ctx: &FusionContext,
) -> Result<Vec<LatticeConfig>> {
    check_boundaries(mu, nu, ctx)?;
    let reach = backward_reachable(ctx, nu.labels());
    let m = mu.labels().to_vec();
    if !reach[0].contains(&m) {
        return Ok(Vec::new());
    }
    let per_seam: Vec<Vec<LatticeConfig>> = (0..=m[ctx.n() - 1])
        .into_par_iter()
        .map(|s| {
            let mut out = Vec::new();
            for row in rows_with_seam(&m, s) {
                if reach[1].contains(&row.top()) {
                    let mut rows = vec![row];
                    extend(&reach, &mut rows, false, &mut out);
                }
            }
            out
        })
        .collect();
    Ok(per_seam.into_iter().flatten().collect())
}

/// Some configuration between the two boundaries, if one exists.
pub fn find_lattice_config(
    mu: &AffineWeight,
    nu: &AffineWeight,
    ctx: &FusionContext,
) -> Result<Option<LatticeConfig>> {
    check_boundaries(mu, nu, ctx)?;
    let reach = backward_reachable(ctx, nu.labels());
    let m = mu.labels().to_vec();
    if !reach[0].contains(&m) {
        return Ok(None);
    }
    let mut out = Vec::new();
    for row in rows_from(&m) {
        if reach[1].contains(&row.top()) {
            extend(&reach, &mut vec![row], true, &mut out);
            if let Some(c) = out.pop() {
                return Ok(Some(c));
            }
        }
    }
    Ok(None)
}
