//! Integral closures of powers of a monomial ideal.
//!
//! The closure of I^d is generated by the lattice points of d * NP(I), where
//! NP(I) is the Newton polyhedron conv(gens) + R^n_{>=0}. We compute NP(I)
//! once per ideal as an irredundant facet system by eliminating the convex
//! multipliers with Fourier-Motzkin, and answer membership two independent
//! ways: by facet inequalities, and by an exact-LP feasibility check on the
//! multiplier formulation. The two routes are cross-checked in the tests and
//! must agree bit for bit.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::fm;
use crate::ideal::MonomialIdeal;
use crate::lp;

/// One inequality <normal, x> >= offset with primitive integer data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

/// A finite, irredundant conjunction of halfspaces in a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfspaceSystem {
    pub dim: usize,
    pub rows: Vec<Halfspace>,
}

impl HalfspaceSystem {
    /// Evaluate all rows at an integer point.
    pub fn contains_int_point(&self, x: &[BigInt]) -> bool {
        assert_eq!(x.len(), self.dim);
        self.rows.iter().all(|h| {
            h.normal
                .iter()
                .zip(x)
                .map(|(a, b)| a * b)
                .sum::<BigInt>()
                >= h.offset
        })
    }
}

/// The Newton polyhedron of a nonzero monomial ideal, as facet inequalities.
///
/// `coordinate_caps` holds M_j = max exponent of x_j over the minimal
/// generators; every minimal generator of the closure of I^d satisfies
/// a_j <= d * M_j, which bounds all search boxes below.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    dim: usize,
    facets: HalfspaceSystem,
    coordinate_caps: Vec<u32>,
    // i128 mirror of the facet data for the enumeration inner loops
    fast_rows: Vec<(Vec<i128>, i128)>,
}

impl NewtonPolyhedron {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facets(&self) -> &HalfspaceSystem {
        &self.facets
    }

    /// M_j caps of the ideal the polyhedron was built from.
    pub fn coordinate_caps(&self) -> &[u32] {
        &self.coordinate_caps
    }

    /// Is a in d * NP(I)? Checks <normal, a> >= d * offset on every facet.
    pub fn contains_scaled(&self, a: &ExponentVector, d: u32) -> Result<bool> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: a.dim(),
            });
        }
        if d == 0 {
            return Err(Error::ZeroPower);
        }
        let coords: Vec<i128> = a.coords().iter().map(|&c| c as i128).collect();
        Ok(self.contains_scaled_i128(&coords, d as i128))
    }

    fn contains_scaled_i128(&self, coords: &[i128], d: i128) -> bool {
        self.fast_rows.iter().all(|(normal, offset)| {
            normal
                .iter()
                .zip(coords)
                .map(|(&n, &c)| n * c)
                .sum::<i128>()
                >= d * offset
        })
    }
}

/// Facet description of NP(I) = conv(generators) + R^n_{>=0}.
///
/// A point a lies in NP(I) iff there are lambda_i >= 0 with sum 1 and
/// a >= sum lambda_i v_i componentwise; Fourier-Motzkin eliminates the
/// lambdas. Errors on the zero ideal.
pub fn newton_polyhedron(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal {
            op: "newton_polyhedron",
        });
    }
    let n = ideal.dim();
    let m = ideal.num_gens();
    let width = m + n; // columns: lambda_1..lambda_m, a_1..a_n
    let one = BigInt::from(1);

    let mut eq_coefs = vec![BigInt::zero(); width];
    for c in eq_coefs.iter_mut().take(m) {
        *c = one.clone();
    }
    let equalities = vec![(eq_coefs, one.clone())];

    let mut inequalities = Vec::with_capacity(n + m);
    for j in 0..n {
        // a_j - sum_i lambda_i v_i[j] >= 0
        let mut row = vec![BigInt::zero(); width];
        for (i, g) in ideal.gens().iter().enumerate() {
            row[i] = -BigInt::from(g.coords()[j]);
        }
        row[m + j] = one.clone();
        inequalities.push((row, BigInt::zero()));
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); width];
        row[i] = one.clone();
        inequalities.push((row, BigInt::zero()));
    }

    let eliminate: Vec<usize> = (0..m).collect();
    let proj = fm::project(width, equalities, inequalities, &eliminate);
    assert!(
        proj.equalities.is_empty(),
        "Newton polyhedron projection left equality constraints"
    );

    let rows: Vec<Halfspace> = proj
        .inequalities
        .into_iter()
        .map(|(normal, offset)| Halfspace { normal, offset })
        .collect();

    // The polyhedron is closed upward, so every facet normal must be
    // non-negative; the enumeration pruning below depends on it.
    for h in &rows {
        assert!(
            h.normal.iter().all(|c| !c.is_negative()),
            "facet normal with negative entry: {:?}",
            h.normal
        );
    }
    debug_assert!(rows.iter().all(|h| {
        ideal.gens().iter().all(|g| {
            h.normal
                .iter()
                .zip(g.coords())
                .map(|(a, &b)| a * BigInt::from(b))
                .sum::<BigInt>()
                >= h.offset
        })
    }));

    let fast_rows = rows
        .iter()
        .map(|h| {
            let normal = h
                .normal
                .iter()
                .map(|c| i128::try_from(c).expect("facet coefficient fits i128"))
                .collect();
            let offset = i128::try_from(&h.offset).expect("facet offset fits i128");
            (normal, offset)
        })
        .collect();

    let coordinate_caps = (0..n)
        .map(|j| {
            ideal
                .gens()
                .iter()
                .map(|g| g.coords()[j])
                .max()
                .unwrap_or(0)
        })
        .collect();

    Ok(NewtonPolyhedron {
        dim: n,
        facets: HalfspaceSystem { dim: n, rows },
        coordinate_caps,
        fast_rows,
    })
}

/// Facet-route membership: x^a in the integral closure of I^d.
pub fn member_of_closure_power(ideal: &MonomialIdeal, a: &ExponentVector, d: u32) -> Result<bool> {
    let np = newton_polyhedron(ideal)?;
    np.contains_scaled(a, d)
}

/// Independent LP-route membership: feasibility of
/// { lambda >= 0, sum lambda = d, sum lambda_i v_i <= a }.
/// Shares no code with the facet route past the generator list.
pub fn member_of_closure_power_lp(
    ideal: &MonomialIdeal,
    a: &ExponentVector,
    d: u32,
) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal {
            op: "member_of_closure_power_lp",
        });
    }
    if a.dim() != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: a.dim(),
        });
    }
    if d == 0 {
        return Err(Error::ZeroPower);
    }
    let m = ideal.num_gens();
    let mut constraints = Vec::with_capacity(ideal.dim() + 1);
    constraints.push(lp::Constraint {
        coefs: vec![BigRational::from_integer(1.into()); m],
        rel: lp::Relation::Eq,
        rhs: BigRational::from_integer(d.into()),
    });
    for j in 0..ideal.dim() {
        constraints.push(lp::Constraint {
            coefs: ideal
                .gens()
                .iter()
                .map(|g| BigRational::from_integer(g.coords()[j].into()))
                .collect(),
            rel: lp::Relation::Le,
            rhs: BigRational::from_integer(a.coords()[j].into()),
        });
    }
    Ok(lp::feasible(m, &constraints))
}

/// Minimal generators of the integral closure of I^d: the minimal lattice
/// points of d * NP(I). Every minimal generator satisfies a_j <= d * M_j, so
/// the search box is exact, not heuristic.
pub fn closure_power_generators(ideal: &MonomialIdeal, d: u32) -> Result<MonomialIdeal> {
    let np = newton_polyhedron(ideal)?;
    closure_power_generators_with(&np, ideal, d)
}

/// As `closure_power_generators` with a precomputed Newton polyhedron
/// (callers checking many powers build the polyhedron once).
pub fn closure_power_generators_with(
    np: &NewtonPolyhedron,
    ideal: &MonomialIdeal,
    d: u32,
) -> Result<MonomialIdeal> {
    check_np_matches(np, ideal, d)?;
    let members = enumerate_box_members(np, d, true);
    let gens: Vec<ExponentVector> = members
        .into_iter()
        .map(|p| ExponentVector::new(p.iter().map(|&c| c as u32).collect()))
        .collect();
    MonomialIdeal::minimalize(ideal.dim(), gens)
}

/// A failed closedness check: the power, every witness monomial inside the
/// canonical search box, and a labeled heuristic hint at unbounded growth.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureGap {
    pub power: u32,
    /// All lattice points a with a_j <= power * M_j that lie in the closure
    /// of I^power but not in I^power, in graded lexicographic order.
    pub witnesses: Vec<ExponentVector>,
    /// Variables x_j (1-based) such that some witness stays a witness after
    /// multiplying by x_j. Heuristic evidence (not proof) that witnesses
    /// persist in the direction of x_j forever.
    pub growth_directions: Vec<usize>,
}

/// Verdict for a single power.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerReport {
    pub power: u32,
    pub closed: bool,
    pub gap: Option<ClosureGap>,
}

/// Is I^d integrally closed? When it is not, the report carries the full
/// box-bounded witness set.
pub fn is_integrally_closed(ideal: &MonomialIdeal, d: u32) -> Result<PowerReport> {
    let np = newton_polyhedron(ideal)?;
    is_integrally_closed_with(&np, ideal, d)
}

pub fn is_integrally_closed_with(
    np: &NewtonPolyhedron,
    ideal: &MonomialIdeal,
    d: u32,
) -> Result<PowerReport> {
    check_np_matches(np, ideal, d)?;
    let closure = closure_power_generators_with(np, ideal, d)?;
    let power = ideal.power(d)?;
    if closure == power {
        return Ok(PowerReport {
            power: d,
            closed: true,
            gap: None,
        });
    }
    // Witnesses: all box members of d*NP(I) not divisible by a generator of
    // I^d. Membership in the power is plain monomial divisibility here.
    let mut witnesses: Vec<ExponentVector> = enumerate_box_members(np, d, false)
        .into_iter()
        .map(|p| ExponentVector::new(p.iter().map(|&c| c as u32).collect()))
        .filter(|a| !power.contains_monomial(a).expect("dims match"))
        .collect();
    witnesses.sort_by(|a, b| a.grlex_cmp(b));
    let mut growth_directions = Vec::new();
    for j in 1..=ideal.dim() {
        let persists = witnesses.iter().any(|w| {
            let up = w.incremented(j).expect("index in range");
            // up stays in the closure automatically (facet normals are >= 0)
            !power.contains_monomial(&up).expect("dims match")
        });
        if persists {
            growth_directions.push(j);
        }
    }
    Ok(PowerReport {
        power: d,
        closed: false,
        gap: Some(ClosureGap {
            power: d,
            witnesses,
            growth_directions,
        }),
    })
}

/// Closedness of I^d for every d up to and including `max_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalityReport {
    pub max_power: u32,
    pub powers: Vec<PowerReport>,
    pub all_closed: bool,
}

/// Check I^1, ..., I^K for closedness. Bounded evidence only: a true result
/// means "no gap up to K", never "normal".
pub fn is_normal_up_to(ideal: &MonomialIdeal, max_power: u32) -> Result<NormalityReport> {
    if max_power == 0 {
        return Err(Error::ZeroPower);
    }
    let np = newton_polyhedron(ideal)?;
    let mut powers = Vec::with_capacity(max_power as usize);
    for d in 1..=max_power {
        powers.push(is_integrally_closed_with(&np, ideal, d)?);
    }
    let all_closed = powers.iter().all(|p| p.closed);
    Ok(NormalityReport {
        max_power,
        powers,
        all_closed,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceCheck {
    pub k: u32,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PersistenceReport {
    pub max_k: u32,
    pub checks: Vec<PersistenceCheck>,
    pub all_hold: bool,
}

/// Strong persistence at desk scale: (I^{k+1} : I) = I^k for k = 1..max_k.
pub fn strong_persistence_holds(ideal: &MonomialIdeal, max_k: u32) -> Result<PersistenceReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal {
            op: "strong_persistence_holds",
        });
    }
    if max_k == 0 {
        return Err(Error::ZeroPower);
    }
    let mut checks = Vec::with_capacity(max_k as usize);
    for k in 1..=max_k {
        let lhs = ideal.power(k + 1)?.colon_ideal(ideal)?;
        let rhs = ideal.power(k)?;
        checks.push(PersistenceCheck {
            k,
            holds: lhs == rhs,
        });
    }
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(PersistenceReport {
        max_k,
        checks,
        all_hold,
    })
}

fn check_np_matches(np: &NewtonPolyhedron, ideal: &MonomialIdeal, d: u32) -> Result<()> {
    if np.dim != ideal.dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.dim(),
            found: np.dim,
        });
    }
    if d == 0 {
        return Err(Error::ZeroPower);
    }
    Ok(())
}

/// Enumerate lattice points of d * NP(I) inside the box a_j <= d * M_j.
/// With `minimal_only`, keep a point only if decrementing any positive
/// coordinate leaves the polyhedron (membership is upward closed, so these
/// are exactly the minimal generators of the closure ideal).
///
/// The walk fills coordinates left to right keeping, per facet, the partial
/// inner product and the best still-achievable suffix contribution; a prefix
/// dies as soon as some facet cannot be reached. Facet normals are
/// non-negative, which makes the suffix bound valid.
fn enumerate_box_members(np: &NewtonPolyhedron, d: u32, minimal_only: bool) -> Vec<Vec<i128>> {
    let n = np.dim;
    let rows = &np.fast_rows;
    let caps: Vec<i128> = np
        .coordinate_caps
        .iter()
        .map(|&m| d as i128 * m as i128)
        .collect();
    let targets: Vec<i128> = rows.iter().map(|(_, off)| d as i128 * off).collect();
    // suffix[pos][r] = sum_{j >= pos} normal[r][j] * cap[j], the most the
    // unfilled coordinates can still add to facet r
    let mut suffix = vec![vec![0i128; rows.len()]; n + 1];
    for pos in (0..n).rev() {
        for (r, (normal, _)) in rows.iter().enumerate() {
            suffix[pos][r] = suffix[pos + 1][r] + normal[pos] * caps[pos];
        }
    }

    let mut walk = Walk {
        rows,
        caps: &caps,
        targets: &targets,
        suffix: &suffix,
        minimal_only,
        point: vec![0i128; n],
        partial: vec![0i128; rows.len()],
        out: Vec::new(),
    };
    walk.descend(0);
    walk.out
}

struct Walk<'a> {
    rows: &'a [(Vec<i128>, i128)],
    caps: &'a [i128],
    targets: &'a [i128],
    suffix: &'a [Vec<i128>],
    minimal_only: bool,
    point: Vec<i128>,
    partial: Vec<i128>,
    out: Vec<Vec<i128>>,
}

impl Walk<'_> {
    fn descend(&mut self, pos: usize) {
        if pos == self.point.len() {
            self.leaf();
            return;
        }
        for v in 0..=self.caps[pos] {
            self.point[pos] = v;
            if v > 0 {
                for (r, (normal, _)) in self.rows.iter().enumerate() {
                    self.partial[r] += normal[pos];
                }
            }
            let reachable = (0..self.rows.len())
                .all(|r| self.partial[r] + self.suffix[pos + 1][r] >= self.targets[r]);
            if reachable {
                self.descend(pos + 1);
            }
        }
        for (r, (normal, _)) in self.rows.iter().enumerate() {
            self.partial[r] -= normal[pos] * self.caps[pos];
        }
        self.point[pos] = 0;
    }

    fn leaf(&mut self) {
        debug_assert!(self.partial.iter().zip(self.targets).all(|(p, t)| p >= t));
        if self.minimal_only {
            // minimal iff no coordinate can be decremented while every facet
            // inequality still holds
            for j in 0..self.point.len() {
                if self.point[j] > 0
                    && self
                        .rows
                        .iter()
                        .enumerate()
                        .all(|(r, (normal, _))| self.partial[r] - normal[j] >= self.targets[r])
                {
                    return;
                }
            }
        }
        self.out.push(self.point.clone());
    }
}
