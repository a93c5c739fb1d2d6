//! Rational polyhedral cones, Rees cones of monomial ideals, and Hilbert
//! bases of their lattice-point monoids.
//!
//! Cones are generated by integer rays. Membership is decided by exact LP
//! over the rays; facets come from Fourier-Motzkin elimination of the ray
//! multipliers, giving a second, independent description that the tests play
//! against the first. Hilbert bases are computed for pointed full-dimensional
//! cones by triangulating, collecting the lattice points of each simplex's
//! half-open fundamental parallelepiped, and reducing globally under a
//! strictly positive grading.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};

use crate::closure::{Halfspace, HalfspaceSystem};
use crate::error::{Error, Result};
use crate::fm;
use crate::ideal::MonomialIdeal;
use crate::linalg;
use crate::lp;

/// A cone in R^dim generated by finitely many integer rays. Rays are stored
/// primitive (coordinate gcd 1), nonzero, deduplicated, in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCone {
    dim: usize,
    rays: Vec<Vec<BigInt>>,
}

impl RationalCone {
    pub fn new(dim: usize, rays: Vec<Vec<BigInt>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ParamOutOfRange("cone dimension must be >= 1".into()));
        }
        let mut seen = BTreeSet::new();
        let mut kept = Vec::new();
        for r in rays {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: r.len(),
                });
            }
            if r.iter().all(Zero::is_zero) {
                return Err(Error::ParamOutOfRange("cone rays must be nonzero".into()));
            }
            let r = primitive(r);
            if seen.insert(r.clone()) {
                kept.push(r);
            }
        }
        if kept.is_empty() {
            return Err(Error::ParamOutOfRange(
                "a cone needs at least one ray".into(),
            ));
        }
        Ok(RationalCone { dim, rays: kept })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[Vec<BigInt>] {
        &self.rays
    }

    /// Dimension of the linear span of the rays.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rays_rational())
    }

    /// Is x a non-negative rational combination of the rays? Exact LP.
    pub fn contains_int(&self, x: &[BigInt]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        Ok(contains_in_rays(&self.rays, x))
    }

    /// A cone is pointed when it contains no line: no non-trivial
    /// non-negative combination of rays sums to zero.
    pub fn is_pointed(&self) -> bool {
        let m = self.rays.len();
        let mut constraints: Vec<lp::Constraint> = (0..self.dim)
            .map(|j| lp::Constraint {
                coefs: self.rays.iter().map(|r| rat(&r[j])).collect(),
                rel: lp::Relation::Eq,
                rhs: BigRational::zero(),
            })
            .collect();
        constraints.push(lp::Constraint {
            coefs: vec![BigRational::one(); m],
            rel: lp::Relation::Eq,
            rhs: BigRational::one(),
        });
        !lp::feasible(m, &constraints)
    }

    /// Irredundant inequality description { x : <normal, x> >= 0 } of the
    /// cone, by eliminating the ray multipliers from x = sum mu_i r_i,
    /// mu >= 0. When the cone is not full-dimensional the span constraints
    /// come back as paired opposite inequalities.
    pub fn facets(&self) -> HalfspaceSystem {
        let m = self.rays.len();
        let n = self.dim;
        let width = m + n;
        let mut equalities = Vec::with_capacity(n);
        for j in 0..n {
            // sum_i mu_i r_i[j] - x_j = 0
            let mut row = vec![BigInt::zero(); width];
            for (i, r) in self.rays.iter().enumerate() {
                row[i] = r[j].clone();
            }
            row[m + j] = -BigInt::one();
            equalities.push((row, BigInt::zero()));
        }
        let mut inequalities = Vec::with_capacity(m);
        for i in 0..m {
            let mut row = vec![BigInt::zero(); width];
            row[i] = BigInt::one();
            inequalities.push((row, BigInt::zero()));
        }
        let eliminate: Vec<usize> = (0..m).collect();
        let proj = fm::project(width, equalities, inequalities, &eliminate);

        let mut rows: Vec<Halfspace> = Vec::new();
        for (normal, offset) in proj.inequalities {
            rows.push(Halfspace { normal, offset });
        }
        for (normal, offset) in proj.equalities {
            let neg = Halfspace {
                normal: normal.iter().map(|c| -c).collect(),
                offset: -&offset,
            };
            rows.push(Halfspace { normal, offset });
            rows.push(neg);
        }
        rows.sort_by(|a, b| (&a.normal, &a.offset).cmp(&(&b.normal, &b.offset)));
        debug_assert!(rows.iter().all(|h| h.offset.is_zero()));
        debug_assert!(self.rays.iter().all(|r| rows
            .iter()
            .all(|h| h.normal.iter().zip(r).map(|(a, b)| a * b).sum::<BigInt>() >= h.offset)));
        HalfspaceSystem { dim: n, rows }
    }

    fn rays_rational(&self) -> Vec<Vec<BigRational>> {
        self.rays
            .iter()
            .map(|r| r.iter().map(rat).collect())
            .collect()
    }
}

/// The Rees cone of a nonzero monomial ideal I in n variables: the cone in
/// R^{n+1} over the unit rays e_1..e_n and (v, 1) for each minimal generator
/// v. The degree coordinate is last. A point (a, d) with d >= 1 lies in the
/// cone exactly when x^a is in the integral closure of I^d.
pub fn rees_cone(ideal: &MonomialIdeal) -> Result<RationalCone> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal { op: "rees_cone" });
    }
    let n = ideal.dim();
    let mut rays = Vec::with_capacity(n + ideal.num_gens());
    for j in 0..n {
        let mut e = vec![BigInt::zero(); n + 1];
        e[j] = BigInt::one();
        rays.push(e);
    }
    for g in ideal.gens() {
        let mut r: Vec<BigInt> = g.coords().iter().map(|&c| BigInt::from(c)).collect();
        r.push(BigInt::one());
        rays.push(r);
    }
    RationalCone::new(n + 1, rays)
}

/// Triangulate the cone into simplicial subcones spanned by subsets of its
/// rays, by placing the rays in order. Returns sorted index sets, each of
/// size equal to the rank of the cone, whose union of subcones is the cone.
pub fn triangulate(cone: &RationalCone) -> Vec<Vec<usize>> {
    let n = cone.dim;
    let rays = &cone.rays;
    let rays_q = cone.rays_rational();

    let mut simplices: Vec<BTreeSet<usize>> = Vec::new();
    let mut span: Vec<usize> = Vec::new(); // ray indices forming a span basis

    for idx in 0..rays.len() {
        if simplices.is_empty() {
            simplices.push(BTreeSet::from([idx]));
            span.push(idx);
            continue;
        }
        let mut span_rows: Vec<Vec<BigRational>> =
            span.iter().map(|&i| rays_q[i].clone()).collect();
        span_rows.push(rays_q[idx].clone());
        if linalg::rank(&span_rows) > span.len() {
            // outside the current span: every simplex gains the new ray
            for s in &mut simplices {
                s.insert(idx);
            }
            span.push(idx);
            continue;
        }
        if contains_in_rays(&rays[..idx], &rays[idx]) {
            continue;
        }
        // in the span but outside the current cone: extend over the visible
        // part of the boundary
        let ortho = linalg::nullspace(&span_rows[..span.len()], n);
        let mut owners: BTreeMap<Vec<usize>, Vec<(usize, usize)>> = BTreeMap::new();
        for (si, s) in simplices.iter().enumerate() {
            for &apex in s {
                let facet: Vec<usize> = s.iter().copied().filter(|&i| i != apex).collect();
                owners.entry(facet).or_default().push((si, apex));
            }
        }
        let mut grown: Vec<BTreeSet<usize>> = Vec::new();
        for (facet, own) in &owners {
            if own.len() != 1 {
                continue; // interior wall between two simplices
            }
            let apex = own[0].1;
            // functional in the span, vanishing on the facet
            let mut rows: Vec<Vec<BigRational>> =
                facet.iter().map(|&i| rays_q[i].clone()).collect();
            rows.extend(ortho.iter().cloned());
            let kernel = linalg::nullspace(&rows, n);
            assert_eq!(kernel.len(), 1, "boundary facet functional not unique");
            let mut phi = kernel.into_iter().next().unwrap();
            let at_apex = linalg::dot(&phi, &rays_q[apex]);
            assert!(!at_apex.is_zero(), "degenerate simplex in triangulation");
            if at_apex.is_negative() {
                for c in &mut phi {
                    *c = -c.clone();
                }
            }
            if linalg::dot(&phi, &rays_q[idx]).is_negative() {
                let mut s: BTreeSet<usize> = facet.iter().copied().collect();
                s.insert(idx);
                grown.push(s);
            }
        }
        assert!(
            !grown.is_empty(),
            "ray outside the cone must see some boundary facet"
        );
        simplices.extend(grown);
    }

    let rank = span.len();
    let out: Vec<Vec<usize>> = simplices
        .into_iter()
        .map(|s| {
            let v: Vec<usize> = s.into_iter().collect();
            assert_eq!(v.len(), rank);
            v
        })
        .collect();
    out
}

/// The Hilbert basis of C ∩ Z^dim: the unique minimal generating set of the
/// monoid of lattice points of a pointed cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertBasis {
    pub dim: usize,
    /// Irreducible lattice points, sorted lexicographically ascending.
    pub elements: Vec<Vec<BigInt>>,
}

/// Compute the Hilbert basis of a pointed, full-dimensional cone.
///
/// Candidates are the rays plus, per simplicial subcone, the lattice points
/// of the half-open fundamental parallelepiped (enumerated as the group
/// Z^n / R Z^n by breadth-first closure under adding unit vectors). A global
/// pass under the grading "sum of all facet functionals" — strictly positive
/// off 0 on a pointed full-dimensional cone — removes every reducible
/// candidate.
pub fn hilbert_basis(cone: &RationalCone) -> Result<HilbertBasis> {
    let n = cone.dim;
    let rank = cone.rank();
    if rank < n {
        return Err(Error::RankDeficient { rank, dim: n });
    }
    if !cone.is_pointed() {
        return Err(Error::NotPointed);
    }
    let facets = cone.facets();
    let grading: Vec<BigInt> = (0..n)
        .map(|j| facets.rows.iter().map(|h| &h.normal[j]).sum())
        .collect();
    for r in &cone.rays {
        let g: BigInt = grading.iter().zip(r).map(|(a, b)| a * b).sum();
        assert!(g.is_positive(), "grading must be positive on every ray");
    }

    let mut candidates: BTreeSet<Vec<BigInt>> = cone.rays.iter().cloned().collect();
    for simplex in triangulate(cone) {
        // rows of R: coordinates; columns: the simplex rays
        let r_rows: Vec<Vec<BigRational>> = (0..n)
            .map(|coord| simplex.iter().map(|&i| rat(&cone.rays[i][coord])).collect())
            .collect();
        let det = linalg::det(&r_rows);
        assert!(det.is_integer());
        let vol = det.to_integer().abs();
        let r_inv = linalg::invert(&r_rows).expect("simplex rays are independent");

        let reduce = |x: &[BigInt]| -> Vec<BigInt> {
            let xq: Vec<BigRational> = x.iter().map(rat).collect();
            let t = linalg::mat_vec(&r_inv, &xq);
            let f = linalg::floor_vec(&t);
            let mut out: Vec<BigInt> = x.to_vec();
            for (col, fj) in simplex.iter().zip(&f) {
                let fj = fj.to_integer();
                for (coord, o) in out.iter_mut().enumerate() {
                    *o -= &fj * &cone.rays[*col][coord];
                }
            }
            out
        };

        let zero = vec![BigInt::zero(); n];
        let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::from([zero.clone()]);
        let mut queue: VecDeque<Vec<BigInt>> = VecDeque::from([zero.clone()]);
        while let Some(y) = queue.pop_front() {
            for j in 0..n {
                let mut step = y.clone();
                step[j] += 1;
                let z = reduce(&step);
                if seen.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
        assert_eq!(
            BigInt::from(seen.len()),
            vol,
            "parallelepiped point count must equal |det|"
        );
        seen.remove(&zero);
        candidates.extend(seen);
    }

    let mut ordered: Vec<Vec<BigInt>> = candidates.into_iter().collect();
    ordered.sort_by_key(|x| {
        (
            grading.iter().zip(x).map(|(a, b)| a * b).sum::<BigInt>(),
            x.clone(),
        )
    });

    let mut kept: Vec<Vec<BigInt>> = Vec::new();
    for h in ordered {
        let reducible = kept.iter().any(|k| {
            let diff: Vec<BigInt> = h.iter().zip(k).map(|(a, b)| a - b).collect();
            facets.contains_int_point(&diff)
        });
        if !reducible {
            kept.push(h);
        }
    }
    kept.sort();
    Ok(HilbertBasis {
        dim: n,
        elements: kept,
    })
}

/// Express `target` as a sum of basis elements (indices, non-decreasing,
/// with repetition), or None. `facets` must describe the cone the basis
/// generates; it powers the only pruning: a residual outside the cone can
/// never reach zero.
pub fn decompose_in_basis(
    target: &[BigInt],
    basis: &[Vec<BigInt>],
    facets: &HalfspaceSystem,
) -> Option<Vec<usize>> {
    assert_eq!(target.len(), facets.dim);
    if !facets.contains_int_point(target) {
        return None;
    }
    let mut failed: HashSet<(Vec<BigInt>, usize)> = HashSet::new();
    let mut path = Vec::new();
    if dfs(target.to_vec(), 0, basis, facets, &mut failed, &mut path) {
        return Some(path);
    }
    return None;

    fn dfs(
        remaining: Vec<BigInt>,
        start: usize,
        basis: &[Vec<BigInt>],
        facets: &HalfspaceSystem,
        failed: &mut HashSet<(Vec<BigInt>, usize)>,
        path: &mut Vec<usize>,
    ) -> bool {
        if remaining.iter().all(Zero::is_zero) {
            return true;
        }
        if failed.contains(&(remaining.clone(), start)) {
            return false;
        }
        for i in start..basis.len() {
            let next: Vec<BigInt> = remaining
                .iter()
                .zip(&basis[i])
                .map(|(a, b)| a - b)
                .collect();
            if facets.contains_int_point(&next) {
                path.push(i);
                if dfs(next, i, basis, facets, failed, path) {
                    return true;
                }
                path.pop();
            }
        }
        failed.insert((remaining, start));
        false
    }
}

fn primitive(mut r: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &r {
        g = g.gcd(c);
    }
    if !g.is_zero() && !g.is_one() {
        for c in &mut r {
            *c = &*c / &g;
        }
    }
    r
}

fn rat(b: &BigInt) -> BigRational {
    BigRational::from_integer(b.clone())
}

fn contains_in_rays(rays: &[Vec<BigInt>], x: &[BigInt]) -> bool {
    let m = rays.len();
    if m == 0 {
        return x.iter().all(Zero::is_zero);
    }
    let constraints: Vec<lp::Constraint> = (0..x.len())
        .map(|j| lp::Constraint {
            coefs: rays.iter().map(|r| rat(&r[j])).collect(),
            rel: lp::Relation::Eq,
            rhs: rat(&x[j]),
        })
        .collect();
    lp::feasible(m, &constraints)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::newton_polyhedron;
    use crate::exponent::ExponentVector;

    fn bv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn cone2(rays: &[&[i64]]) -> RationalCone {
        let dim = rays[0].len();
        RationalCone::new(dim, rays.iter().map(|r| bv(r)).collect()).unwrap()
    }

    fn ideal(dim: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::minimalize(dim, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
            .unwrap()
    }

    #[test]
    fn rays_are_primitivized_and_deduped() {
        let c = cone2(&[&[2, 4], &[1, 2], &[3, 0]]);
        assert_eq!(c.rays(), &[bv(&[1, 2]), bv(&[1, 0])]);
    }

    #[test]
    fn membership_in_a_plane_wedge() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        assert!(c.contains_int(&bv(&[1, 1])).unwrap());
        assert!(c.contains_int(&bv(&[3, 2])).unwrap());
        assert!(c.contains_int(&bv(&[0, 0])).unwrap());
        assert!(!c.contains_int(&bv(&[0, 1])).unwrap());
        assert!(!c.contains_int(&bv(&[-1, 0])).unwrap());
        assert!(!c.contains_int(&bv(&[1, 3])).unwrap());
    }

    #[test]
    fn pointedness() {
        assert!(cone2(&[&[1, 0], &[1, 2]]).is_pointed());
        assert!(!cone2(&[&[1, 0], &[-1, 0], &[0, 1]]).is_pointed());
        assert!(!cone2(&[&[1, 1], &[-1, -1]]).is_pointed());
    }

    #[test]
    fn facets_of_a_wedge() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let f = c.facets();
        let rows: Vec<(Vec<i64>, i64)> = f
            .rows
            .iter()
            .map(|h| {
                (
                    h.normal.iter().map(|x| i64::try_from(x).unwrap()).collect(),
                    i64::try_from(&h.offset).unwrap(),
                )
            })
            .collect();
        assert_eq!(rows, vec![(vec![0, 1], 0), (vec![2, -1], 0)]);
    }

    #[test]
    fn facets_of_a_lower_dimensional_cone_include_span_equalities() {
        let c = RationalCone::new(3, vec![bv(&[1, 1, 0])]).unwrap();
        let f = c.facets();
        // x3 = 0, x1 = x2, x1 >= 0 in some normalized presentation
        assert!(f.contains_int_point(&bv(&[2, 2, 0])));
        assert!(!f.contains_int_point(&bv(&[1, 2, 0])));
        assert!(!f.contains_int_point(&bv(&[1, 1, 1])));
        assert!(!f.contains_int_point(&bv(&[-1, -1, 0])));
    }

    #[test]
    fn triangulation_volume_is_insertion_order_invariant() {
        let rays: Vec<Vec<i64>> = vec![
            vec![0, 0, 1],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ];
        let orders: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3],
            vec![3, 2, 1, 0],
            vec![1, 3, 0, 2],
            vec![2, 0, 3, 1],
        ];
        for order in orders {
            let permuted: Vec<&[i64]> = order.iter().map(|&i| rays[i].as_slice()).collect();
            let c = cone2(&permuted);
            let tri = triangulate(&c);
            let total: BigInt = tri
                .iter()
                .map(|s| {
                    let rows: Vec<Vec<BigRational>> = (0..3)
                        .map(|coord| s.iter().map(|&i| rat(&c.rays()[i][coord])).collect())
                        .collect();
                    linalg::det(&rows).to_integer().abs()
                })
                .sum();
            assert_eq!(total, BigInt::from(2), "order {:?}", order);
        }
    }

    #[test]
    fn placing_a_third_coplanar_ray_gives_two_wedges() {
        // the middle ray is placed second, so both extremes attach to it
        let c = cone2(&[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(triangulate(&c), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn rees_cone_of_l5_triangulation_regression() {
        let l5 = crate::constructions::build_l_n(5).unwrap().ideal;
        let c = rees_cone(&l5).unwrap();
        let tri = triangulate(&c);
        // regression values from the first validated run; the determinant sum
        // depends on the (fixed) ray insertion order because the rays do not
        // lie on a common grading hyperplane
        assert_eq!(tri.len(), 69);
        let mut det_sum = BigInt::from(0);
        for s in &tri {
            let rows: Vec<Vec<BigRational>> = s
                .iter()
                .map(|&i| c.rays()[i].iter().map(rat).collect())
                .collect();
            let d = linalg::det(&rows).to_integer().abs();
            assert!(d > BigInt::from(0), "subcone {:?} is rank-deficient", s);
            det_sum += d;
        }
        assert_eq!(det_sum, BigInt::from(72));

        // cover: seeded nonnegative integer combinations of the rays must
        // land in at least one subcone (membership solved exactly via the
        // inverse ray matrix: lambda = R^(-1) y, all lambda >= 0)
        let zero = BigRational::from(BigInt::from(0));
        let inverses: Vec<Vec<Vec<BigRational>>> = tri
            .iter()
            .map(|s| {
                let rows: Vec<Vec<BigRational>> = (0..c.dim())
                    .map(|coord| s.iter().map(|&i| rat(&c.rays()[i][coord])).collect())
                    .collect();
                linalg::invert(&rows).unwrap()
            })
            .collect();
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..200 {
            let mut y = vec![BigInt::from(0); c.dim()];
            for ray in c.rays() {
                let k = BigInt::from(next() % 3);
                for (yc, rc) in y.iter_mut().zip(ray) {
                    *yc += rc * &k;
                }
            }
            let yq: Vec<BigRational> = y.iter().map(rat).collect();
            let covered = inverses
                .iter()
                .any(|inv| linalg::mat_vec(inv, &yq).iter().all(|l| *l >= zero));
            assert!(covered, "cone point {:?} missed by every subcone", y);
        }

        // the Hilbert basis is intrinsic to the cone: reversing the ray
        // insertion order changes the triangulation but not the basis
        let mut rev = c.rays().to_vec();
        rev.reverse();
        let c_rev = RationalCone::new(c.dim(), rev).unwrap();
        assert_eq!(hilbert_basis(&c_rev).unwrap(), hilbert_basis(&c).unwrap());
    }

    #[test]
    fn hilbert_basis_of_a_wedge_with_interior_point() {
        let hb = hilbert_basis(&cone2(&[&[1, 0], &[1, 2]])).unwrap();
        assert_eq!(hb.elements, vec![bv(&[1, 0]), bv(&[1, 1]), bv(&[1, 2])]);
    }

    #[test]
    fn hilbert_basis_of_a_steeper_wedge() {
        let hb = hilbert_basis(&cone2(&[&[1, 0], &[1, 3]])).unwrap();
        assert_eq!(
            hb.elements,
            vec![bv(&[1, 0]), bv(&[1, 1]), bv(&[1, 2]), bv(&[1, 3])]
        );
    }

    #[test]
    fn hilbert_basis_of_the_orthant_is_the_unit_vectors() {
        let hb = hilbert_basis(&cone2(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(hb.elements, vec![bv(&[0, 1]), bv(&[1, 0])]);
    }

    #[test]
    fn hilbert_basis_rejects_unpointed_and_flat_cones() {
        assert!(matches!(
            hilbert_basis(&cone2(&[&[1, 0], &[-1, 0], &[0, 1]])),
            Err(Error::NotPointed)
        ));
        assert!(matches!(
            hilbert_basis(&RationalCone::new(3, vec![bv(&[1, 0, 0]), bv(&[0, 1, 0])]).unwrap()),
            Err(Error::RankDeficient { rank: 2, dim: 3 })
        ));
    }

    #[test]
    fn hilbert_basis_generates_everything_in_a_box() {
        // brute-force completeness oracle on the wedge y >= 0, 2x - y >= 0
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let hb = hilbert_basis(&c).unwrap();
        let facets = c.facets();
        for x in 0..=4i64 {
            for y in 0..=8i64 {
                let p = bv(&[x, y]);
                if facets.contains_int_point(&p) {
                    assert!(
                        decompose_in_basis(&p, &hb.elements, &facets).is_some(),
                        "({}, {}) must decompose",
                        x,
                        y
                    );
                }
            }
        }
    }

    #[test]
    fn hilbert_basis_elements_are_irreducible() {
        let c = cone2(&[&[1, 0], &[1, 3]]);
        let hb = hilbert_basis(&c).unwrap();
        let facets = c.facets();
        for (i, h) in hb.elements.iter().enumerate() {
            for (j, k) in hb.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                let diff: Vec<BigInt> = h.iter().zip(k).map(|(a, b)| a - b).collect();
                assert!(
                    !facets.contains_int_point(&diff),
                    "{:?} - {:?} stayed in the cone",
                    h,
                    k
                );
            }
        }
    }

    #[test]
    fn decompose_finds_multiset_or_nothing() {
        let c = cone2(&[&[1, 0], &[1, 2]]);
        let hb = hilbert_basis(&c).unwrap();
        let facets = c.facets();
        let d = decompose_in_basis(&bv(&[3, 4]), &hb.elements, &facets).unwrap();
        let sum = d.iter().fold(bv(&[0, 0]), |acc, &i| {
            acc.iter()
                .zip(&hb.elements[i])
                .map(|(a, b)| a + b)
                .collect()
        });
        assert_eq!(sum, bv(&[3, 4]));
        assert!(decompose_in_basis(&bv(&[0, 1]), &hb.elements, &facets).is_none());
    }

    #[test]
    fn rees_cone_shape_and_membership() {
        // I = (x1x2) in two variables: rays e1, e2, (1,1,1)
        let i = ideal(2, &[&[1, 1]]);
        let c = rees_cone(&i).unwrap();
        assert_eq!(c.dim(), 3);
        assert_eq!(
            c.rays(),
            &[bv(&[1, 0, 0]), bv(&[0, 1, 0]), bv(&[1, 1, 1])]
        );
        assert!(c.is_pointed());
        assert!(c.contains_int(&bv(&[2, 2, 2])).unwrap());
        assert!(c.contains_int(&bv(&[3, 2, 2])).unwrap());
        assert!(!c.contains_int(&bv(&[1, 0, 1])).unwrap());
    }

    #[test]
    fn rees_cone_slices_are_closures_of_powers() {
        // (a, d) in the Rees cone  <=>  a in d * NP(I): two independent
        // routes (LP over rays vs facet system of the Newton polyhedron)
        let samples = [
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(2, &[&[2, 0], &[0, 2]]),
            ideal(2, &[&[3, 1], &[1, 2]]),
        ];
        for i in &samples {
            let c = rees_cone(i).unwrap();
            let np = newton_polyhedron(i).unwrap();
            for d in 1..=3u32 {
                let mut state = 0xabcdef1234567890u64;
                let mut next = move || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    state
                };
                for _ in 0..80 {
                    let coords: Vec<u32> = (0..i.dim()).map(|_| (next() % 8) as u32).collect();
                    let a = ExponentVector::new(coords.clone());
                    let mut point: Vec<BigInt> =
                        coords.iter().map(|&c| BigInt::from(c)).collect();
                    point.push(BigInt::from(d));
                    assert_eq!(
                        c.contains_int(&point).unwrap(),
                        np.contains_scaled(&a, d).unwrap(),
                        "ideal {}, point {:?}, degree {}",
                        i,
                        coords,
                        d
                    );
                }
            }
        }
    }

    #[test]
    fn rees_cone_hilbert_basis_of_a_principal_ideal() {
        let i = ideal(1, &[&[1]]);
        let hb = hilbert_basis(&rees_cone(&i).unwrap()).unwrap();
        assert_eq!(hb.elements, vec![bv(&[1, 0]), bv(&[1, 1])]);
    }
}
