//! Fourier-Motzkin elimination over exact integers.
//!
//! Rows are integer inequalities <coefs, z> >= rhs. Equalities are consumed
//! first by substitution; the remaining variables are eliminated one at a
//! time by combining opposite-sign pairs. Blowup is controlled three ways:
//! every row is normalized to a primitive integer vector, derived rows with
//! too many ancestors are dropped (Imbert's acceleration, provably redundant),
//! and the row set is pruned by an exact-LP implication test whenever it
//! grows past a threshold and always once at the end, so the published
//! system is irredundant.

use num::bigint::BigInt;
use num::{Integer, Signed, Zero};

use crate::lp;

/// An integer inequality row with provenance bits for Imbert pruning.
#[derive(Clone, Debug)]
struct Row {
    coefs: Vec<BigInt>,
    rhs: BigInt,
    anc: u128,
}

/// Result of a projection: inequality rows over the kept columns plus any
/// residual equality rows (these appear only when the input equalities are
/// not exhausted by substitution, e.g. for cones that do not span).
#[derive(Clone, Debug)]
pub struct Projection {
    pub inequalities: Vec<(Vec<BigInt>, BigInt)>,
    pub equalities: Vec<(Vec<BigInt>, BigInt)>,
}

const LP_PRUNE_THRESHOLD: usize = 220;

/// Project the solution set of { E z = f, A z >= b } onto the complement of
/// `eliminate`, returning rows over the remaining columns in ascending
/// original-column order. The input system must be feasible.
pub fn project(
    num_vars: usize,
    equalities: Vec<(Vec<BigInt>, BigInt)>,
    inequalities: Vec<(Vec<BigInt>, BigInt)>,
    eliminate: &[usize],
) -> Projection {
    for (c, _) in equalities.iter().chain(&inequalities) {
        assert_eq!(c.len(), num_vars, "row width mismatch");
    }
    let mut elim = vec![false; num_vars];
    for &t in eliminate {
        elim[t] = true;
    }

    // Phase 1: substitution. For each eliminated variable that occurs in an
    // equality, scale-and-subtract it out of every row, then drop that
    // equality (the variable was free to satisfy it).
    let mut eqs: Vec<(Vec<BigInt>, BigInt)> = equalities;
    let mut ineqs: Vec<(Vec<BigInt>, BigInt)> = inequalities;
    let mut remaining: Vec<usize> = eliminate.to_vec();
    remaining.sort_unstable();
    remaining.dedup();
    let mut fm_vars: Vec<usize> = Vec::new();
    for &t in &remaining {
        let Some(k) = eqs.iter().position(|(c, _)| !c[t].is_zero()) else {
            fm_vars.push(t);
            continue;
        };
        let eq = eqs.swap_remove(k);
        for (c, b) in eqs.iter_mut().chain(ineqs.iter_mut()) {
            substitute(c, b, &eq, t);
        }
    }
    // Residual equalities no longer involve any eliminated variable.
    for (c, _) in &eqs {
        for &t in &remaining {
            debug_assert!(c[t].is_zero(), "substitution left variable {}", t);
        }
    }

    // Phase 2: Fourier-Motzkin on the inequalities.
    assert!(ineqs.len() <= 128, "too many rows for ancestor tracking");
    let mut rows: Vec<Row> = ineqs
        .into_iter()
        .enumerate()
        .filter_map(|(i, (mut coefs, mut rhs))| {
            normalize(&mut coefs, &mut rhs).then_some(Row {
                coefs,
                rhs,
                anc: 1u128 << i,
            })
        })
        .collect();

    let mut eliminated = 0usize;
    let mut todo = fm_vars;
    while !todo.is_empty() {
        // Greedy order: cheapest variable (fewest pos x neg combinations) first.
        let (pick, _) = todo
            .iter()
            .enumerate()
            .map(|(idx, &t)| {
                let pos = rows.iter().filter(|r| r.coefs[t].is_positive()).count() as i64;
                let neg = rows.iter().filter(|r| r.coefs[t].is_negative()).count() as i64;
                (idx, pos * neg - pos - neg)
            })
            .min_by_key(|&(_, score)| score)
            .expect("todo nonempty");
        let t = todo.swap_remove(pick);
        eliminated += 1;

        let mut kept: Vec<Row> = Vec::new();
        let mut pos: Vec<Row> = Vec::new();
        let mut neg: Vec<Row> = Vec::new();
        for r in rows.drain(..) {
            if r.coefs[t].is_zero() {
                kept.push(r);
            } else if r.coefs[t].is_positive() {
                pos.push(r);
            } else {
                neg.push(r);
            }
        }
        for p in &pos {
            for n in &neg {
                let anc = p.anc | n.anc;
                if anc.count_ones() as usize > eliminated + 1 {
                    continue; // Imbert: provably redundant
                }
                // (-n_t) * p + p_t * n has zero t-coefficient; both factors
                // positive so the inequality direction is preserved.
                let a = -&n.coefs[t];
                let b = p.coefs[t].clone();
                let mut coefs: Vec<BigInt> = p
                    .coefs
                    .iter()
                    .zip(&n.coefs)
                    .map(|(pc, nc)| &a * pc + &b * nc)
                    .collect();
                let mut rhs = &a * &p.rhs + &b * &n.rhs;
                debug_assert!(coefs[t].is_zero());
                if normalize(&mut coefs, &mut rhs) {
                    kept.push(Row { coefs, rhs, anc });
                }
            }
        }
        rows = dedup_rows(kept);
        if rows.len() > LP_PRUNE_THRESHOLD {
            lp_prune(&mut rows);
        }
    }

    lp_prune(&mut rows);

    // Compact to the kept columns, in ascending original order.
    let keep: Vec<usize> = (0..num_vars).filter(|&j| !elim[j]).collect();
    let mut out: Vec<(Vec<BigInt>, BigInt)> = rows
        .into_iter()
        .map(|r| {
            debug_assert!(eliminate.iter().all(|&t| r.coefs[t].is_zero()));
            (
                keep.iter().map(|&j| r.coefs[j].clone()).collect(),
                r.rhs,
            )
        })
        .collect();
    out.sort();
    let mut out_eqs: Vec<(Vec<BigInt>, BigInt)> = eqs
        .into_iter()
        .filter(|(c, b)| !(c.iter().all(Zero::is_zero) && b.is_zero()))
        .map(|(c, b)| (keep.iter().map(|&j| c[j].clone()).collect(), b))
        .collect();
    out_eqs.sort();
    Projection {
        inequalities: out,
        equalities: out_eqs,
    }
}

/// row <- |eq_t| * row - sign(eq_t) * row_t * eq, which zeroes column t.
/// The scale factor is positive, so inequality directions survive.
fn substitute(coefs: &mut [BigInt], rhs: &mut BigInt, eq: &(Vec<BigInt>, BigInt), t: usize) {
    if coefs[t].is_zero() {
        return;
    }
    let scale = eq.0[t].abs();
    let factor = if eq.0[t].is_positive() {
        coefs[t].clone()
    } else {
        -coefs[t].clone()
    };
    for (c, e) in coefs.iter_mut().zip(&eq.0) {
        *c = &*c * &scale - &factor * e;
    }
    *rhs = &*rhs * &scale - &factor * &eq.1;
    debug_assert!(coefs[t].is_zero());
}

/// Divide out the gcd of all entries. Returns false for rows that carry no
/// information (0 >= nonpositive). A row 0 >= positive would mean the input
/// system was infeasible, which callers exclude.
fn normalize(coefs: &mut [BigInt], rhs: &mut BigInt) -> bool {
    let mut g = BigInt::zero();
    for c in coefs.iter() {
        g = g.gcd(c);
    }
    if g.is_zero() {
        assert!(
            !rhs.is_positive(),
            "derived contradiction 0 >= {} from a system declared feasible",
            rhs
        );
        return false;
    }
    g = g.gcd(rhs);
    if !g.is_zero() && g != BigInt::from(1) {
        for c in coefs.iter_mut() {
            *c /= &g;
        }
        *rhs /= &g;
    }
    true
}

/// Collapse rows with identical normals: keep the largest rhs (strongest),
/// breaking ties toward fewer ancestors.
fn dedup_rows(mut rows: Vec<Row>) -> Vec<Row> {
    rows.sort_by(|a, b| {
        a.coefs
            .cmp(&b.coefs)
            .then_with(|| b.rhs.cmp(&a.rhs))
            .then_with(|| a.anc.count_ones().cmp(&b.anc.count_ones()))
    });
    rows.dedup_by(|next, first| next.coefs == first.coefs);
    rows
}

/// Remove rows implied by the rest (exact LP; see lp::row_implied).
fn lp_prune(rows: &mut Vec<Row>) {
    let mut i = 0;
    while i < rows.len() {
        let others: Vec<(Vec<BigInt>, BigInt)> = rows
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, r)| (r.coefs.clone(), r.rhs.clone()))
            .collect();
        if lp::row_implied(&others, (&rows[i].coefs, &rows[i].rhs)) {
            rows.remove(i);
        } else {
            i += 1;
        }
    }
}
