//! Exact linear programming over the rationals.
//!
//! One entry point matters: `feasible`, a phase-1 simplex deciding whether a
//! system of linear constraints has a solution with all variables >= 0.
//! Bland's rule guarantees termination; arithmetic is exact `BigRational`
//! throughout, so the answer is a theorem, not an approximation.

// Pivot steps index two tableau rows at once (read the pivot row, write the
// others); iterator forms would need a row clone per step.
#![allow(clippy::needless_range_loop)]

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Ge,
    Le,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    pub coefs: Vec<BigRational>,
    pub rel: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn from_ints(coefs: &[BigInt], rel: Relation, rhs: BigInt) -> Self {
        Constraint {
            coefs: coefs.iter().map(int_to_rat).collect(),
            rel,
            rhs: int_to_rat(&rhs),
        }
    }
}

pub fn int_to_rat(i: &BigInt) -> BigRational {
    BigRational::from_integer(i.clone())
}

/// Decide feasibility of { y in Q^num_vars : y >= 0, each constraint holds }.
pub fn feasible(num_vars: usize, constraints: &[Constraint]) -> bool {
    // Normalize to rhs >= 0 so the artificial/slack starting basis is valid.
    let rows: Vec<Constraint> = constraints
        .iter()
        .map(|c| {
            debug_assert_eq!(c.coefs.len(), num_vars, "constraint width");
            if c.rhs.is_negative() {
                Constraint {
                    coefs: c.coefs.iter().map(|x| -x).collect(),
                    rel: match c.rel {
                        Relation::Eq => Relation::Eq,
                        Relation::Ge => Relation::Le,
                        Relation::Le => Relation::Ge,
                    },
                    rhs: -&c.rhs,
                }
            } else {
                c.clone()
            }
        })
        .collect();

    let m = rows.len();
    // Column layout: structural | one slack/surplus per Le/Ge row | one
    // artificial per Ge/Eq row.
    let num_slack = rows
        .iter()
        .filter(|r| matches!(r.rel, Relation::Le | Relation::Ge))
        .count();
    let num_art = rows
        .iter()
        .filter(|r| matches!(r.rel, Relation::Ge | Relation::Eq))
        .count();
    let total = num_vars + num_slack + num_art;
    if m == 0 {
        return true;
    }

    let zero = BigRational::zero();
    let mut tab: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = Vec::with_capacity(m);
    let mut is_artificial = vec![false; total];
    let mut slack_cursor = num_vars;
    let mut art_cursor = num_vars + num_slack;
    for r in &rows {
        let mut row = vec![zero.clone(); total + 1];
        row[..num_vars].clone_from_slice(&r.coefs);
        row[total] = r.rhs.clone();
        match r.rel {
            Relation::Le => {
                row[slack_cursor] = BigRational::from_integer(1.into());
                basis.push(slack_cursor);
                slack_cursor += 1;
            }
            Relation::Ge => {
                row[slack_cursor] = BigRational::from_integer((-1).into());
                slack_cursor += 1;
                row[art_cursor] = BigRational::from_integer(1.into());
                is_artificial[art_cursor] = true;
                basis.push(art_cursor);
                art_cursor += 1;
            }
            Relation::Eq => {
                row[art_cursor] = BigRational::from_integer(1.into());
                is_artificial[art_cursor] = true;
                basis.push(art_cursor);
                art_cursor += 1;
            }
        }
        tab.push(row);
    }

    // Objective: minimize the sum of artificials. obj[j] is the reduced cost
    // z_j - c_j; obj[total] is the current objective value.
    let mut obj = vec![zero.clone(); total + 1];
    for (i, row) in tab.iter().enumerate() {
        if is_artificial[basis[i]] {
            for j in 0..=total {
                obj[j] += &row[j];
            }
        }
    }
    for (j, &art) in is_artificial.iter().enumerate() {
        if art {
            obj[j] -= BigRational::from_integer(1.into());
        }
    }

    loop {
        // Bland: entering column = smallest index with positive reduced cost.
        let Some(q) = (0..total).find(|&j| obj[j].is_positive()) else {
            return obj[total].is_zero();
        };
        // Ratio test; Bland tie-break on smallest basic variable index.
        let mut pivot: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if tab[i][q].is_positive() {
                let ratio = &tab[i][total] / &tab[i][q];
                let better = match &pivot {
                    None => true,
                    Some((pi, pr)) => {
                        ratio < *pr || (ratio == *pr && basis[i] < basis[*pi])
                    }
                };
                if better {
                    pivot = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = pivot else {
            // Unbounded phase-1 objective cannot happen (w >= 0), but a
            // column with no positive entry just means w cannot decrease
            // along it; with obj[q] > 0 and all tab[i][q] <= 0 the variable
            // can grow forever reducing w, impossible since w >= 0.
            unreachable!("phase-1 objective is bounded below by zero");
        };
        // Pivot on (p, q).
        let piv = tab[p][q].clone();
        for x in tab[p].iter_mut() {
            *x /= &piv;
        }
        for i in 0..m {
            if i != p && !tab[i][q].is_zero() {
                let factor = tab[i][q].clone();
                for j in 0..=total {
                    let delta = &factor * &tab[p][j];
                    tab[i][j] -= delta;
                }
            }
        }
        if !obj[q].is_zero() {
            let factor = obj[q].clone();
            for j in 0..=total {
                let delta = &factor * &tab[p][j];
                obj[j] -= delta;
            }
        }
        basis[p] = q;
    }
}

/// Affine Farkas implication test. Precondition: the system `others`
/// (each row read as <coefs, x> >= rhs, x free) is feasible. Then
/// <row.0, x> >= row.1 holds on all its solutions iff some non-negative
/// combination of the other rows dominates it:
///   exists y >= 0 with  sum y_i coefs_i = row.0  and  sum y_i rhs_i >= row.1.
pub fn row_implied(others: &[(Vec<BigInt>, BigInt)], row: (&[BigInt], &BigInt)) -> bool {
    let dim = row.0.len();
    let n = others.len();
    let mut constraints = Vec::with_capacity(dim + 1);
    for c in 0..dim {
        let coefs: Vec<BigInt> = others.iter().map(|(l, _)| l[c].clone()).collect();
        constraints.push(Constraint::from_ints(&coefs, Relation::Eq, row.0[c].clone()));
    }
    let rhs_coefs: Vec<BigInt> = others.iter().map(|(_, b)| b.clone()).collect();
    constraints.push(Constraint::from_ints(
        &rhs_coefs,
        Relation::Ge,
        row.1.clone(),
    ));
    feasible(n, constraints.as_slice())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn con(coefs: &[i64], rel: Relation, rhs: i64) -> Constraint {
        Constraint {
            coefs: coefs.iter().map(|&c| rat(c)).collect(),
            rel,
            rhs: rat(rhs),
        }
    }

    #[test]
    fn simplex_on_simplex() {
        // y1 + y2 = 1, y >= 0: feasible
        assert!(feasible(2, &[con(&[1, 1], Relation::Eq, 1)]));
        // y1 + y2 = -1: infeasible with y >= 0
        assert!(!feasible(2, &[con(&[1, 1], Relation::Eq, -1)]));
    }

    #[test]
    fn contradictory_bounds() {
        assert!(!feasible(
            1,
            &[con(&[1], Relation::Ge, 2), con(&[1], Relation::Le, 1)]
        ));
        assert!(feasible(
            1,
            &[con(&[1], Relation::Ge, 1), con(&[1], Relation::Le, 1)]
        ));
    }

    #[test]
    fn equality_system_with_unique_solution() {
        // y1 - y2 = 3, y1 + y2 = 5: y = (4,1) >= 0
        assert!(feasible(
            2,
            &[con(&[1, -1], Relation::Eq, 3), con(&[1, 1], Relation::Eq, 5)]
        ));
        // y1 - y2 = 5, y1 + y2 = 3: y = (4,-1), violates y >= 0
        assert!(!feasible(
            2,
            &[con(&[1, -1], Relation::Eq, 5), con(&[1, 1], Relation::Eq, 3)]
        ));
    }

    #[test]
    fn zero_rows_and_empty_systems() {
        assert!(feasible(0, &[]));
        assert!(feasible(2, &[con(&[0, 0], Relation::Ge, 0)]));
        assert!(!feasible(2, &[con(&[0, 0], Relation::Ge, 1)]));
        assert!(!feasible(2, &[con(&[0, 0], Relation::Eq, 7)]));
    }

    #[test]
    fn degenerate_cycling_guard() {
        // Classic degenerate system; Bland must terminate.
        assert!(feasible(
            4,
            &[
                con(&[1, 1, 1, 1], Relation::Eq, 1),
                con(&[1, -1, 0, 0], Relation::Eq, 0),
                con(&[0, 0, 1, -1], Relation::Eq, 0),
            ]
        ));
    }

    #[test]
    fn rational_coefficients() {
        // (1/2) y1 >= 1 and y1 <= 3: y1 in [2,3]
        let half = BigRational::new(BigInt::one(), 2.into());
        let c1 = Constraint {
            coefs: vec![half],
            rel: Relation::Ge,
            rhs: rat(1),
        };
        let c2 = con(&[1], Relation::Le, 3);
        assert!(feasible(1, &[c1.clone(), c2]));
        let c3 = con(&[1], Relation::Le, 1);
        assert!(!feasible(1, &[c1, c3]));
    }

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn farkas_implication_in_the_plane() {
        // From x >= 0 and y >= 0: x + y >= 0 is implied, x + y >= 1 is not.
        let others = vec![(bi(&[1, 0]), BigInt::from(0)), (bi(&[0, 1]), BigInt::from(0))];
        assert!(row_implied(&others, (&bi(&[1, 1]), &BigInt::from(0))));
        assert!(!row_implied(&others, (&bi(&[1, 1]), &BigInt::from(1))));
    }

    #[test]
    fn farkas_with_offsets() {
        // x + y >= 2 and x - y >= 0 imply 2x >= 2, i.e. x >= 1.
        let others = vec![(bi(&[1, 1]), BigInt::from(2)), (bi(&[1, -1]), BigInt::from(0))];
        assert!(row_implied(&others, (&bi(&[1, 0]), &BigInt::from(1))));
        assert!(!row_implied(&others, (&bi(&[1, 0]), &BigInt::from(2))));
        // y >= anything is not implied (y unbounded below violates nothing)
        assert!(!row_implied(&others, (&bi(&[0, 1]), &BigInt::from(0))));
    }

    #[test]
    fn farkas_duplicate_row() {
        let others = vec![(bi(&[2, 0]), BigInt::from(4))];
        // same halfspace, different scaling
        assert!(row_implied(&others, (&bi(&[1, 0]), &BigInt::from(2))));
        // strictly stronger: not implied
        assert!(!row_implied(&others, (&bi(&[1, 0]), &BigInt::from(3))));
    }
}
