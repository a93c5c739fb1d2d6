//! Acceptance gate: one test per shipping criterion, each ending in a
//! single PASS line. Shared fixtures are built once and reused across
//! criteria so the whole target stays well under its time budget.

use std::collections::BTreeMap;
use std::sync::LazyLock;
use std::time::Instant;

use num::BigInt;

use normality::closure::{self, NewtonPolyhedron};
use normality::cone;
use normality::constructions;
use normality::graph;
use normality::ideal::MonomialIdeal;
use normality::ExponentVector;

/// The cycle family L_n in n+2 variables, for every n the suite touches.
static L: LazyLock<BTreeMap<usize, MonomialIdeal>> = LazyLock::new(|| {
    (3..=7)
        .map(|n| (n, constructions::build_l_n(n).unwrap().ideal))
        .collect()
});

/// Newton polyhedra of the L_n, built once; n = 7 dominates the cost.
static NP: LazyLock<BTreeMap<usize, NewtonPolyhedron>> = LazyLock::new(|| {
    L.iter()
        .map(|(&n, ideal)| (n, closure::newton_polyhedron(ideal).unwrap()))
        .collect()
});

static T_IDEAL: LazyLock<MonomialIdeal> = LazyLock::new(|| constructions::build_t().ideal);
static Q_IDEAL: LazyLock<MonomialIdeal> = LazyLock::new(|| constructions::build_q().ideal);
static J_C5: LazyLock<MonomialIdeal> =
    LazyLock::new(|| graph::cycle(5).unwrap().cover_ideal().unwrap());

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }
}

fn ev(coords: &[u32]) -> ExponentVector {
    ExponentVector::new(coords.to_vec())
}

/// Both membership routes (facet description and simplex-multiplier LP),
/// required to agree before the answer counts.
fn closure_member_both_routes(
    ideal: &MonomialIdeal,
    np: &NewtonPolyhedron,
    a: &ExponentVector,
    d: u32,
) -> bool {
    let facet = np.contains_scaled(a, d).unwrap();
    let lp = closure::member_of_closure_power_lp(ideal, a, d).unwrap();
    assert_eq!(facet, lp, "membership routes disagree at {a} power {d}");
    facet
}

#[test]
fn criterion_01_pentagon_cover_ideal_generators() {
    let start = Instant::now();
    let expected = MonomialIdeal::minimalize(
        5,
        vec![
            ev(&[1, 1, 0, 1, 0]),
            ev(&[1, 0, 1, 1, 0]),
            ev(&[1, 0, 1, 0, 1]),
            ev(&[0, 1, 1, 0, 1]),
            ev(&[0, 1, 0, 1, 1]),
        ],
    )
    .unwrap();
    assert_eq!(*J_C5, expected);
    println!(
        "PASS criterion 1 ({:?}): cover ideal of the 5-cycle is the expected five generators",
        start.elapsed()
    );
}

#[test]
fn criterion_02_full_support_witness_separates_second_powers() {
    let start = Instant::now();
    for n in 4..=7 {
        let l = &L[&n];
        let f = constructions::witness_f(n).unwrap();
        assert!(
            closure_member_both_routes(l, &NP[&n], &f, 2),
            "f must lie in the closure of the square, n = {n}"
        );
        assert!(
            !l.contains_monomial_power(&f, 2).unwrap(),
            "f must avoid the square itself, n = {n}"
        );
        let f_squared = f.mul(&f).unwrap();
        assert!(
            l.contains_monomial_power(&f_squared, 4).unwrap(),
            "f^2 must lie in the fourth power, n = {n}"
        );
    }
    println!(
        "PASS criterion 2 ({:?}): x1...x(n+2) lies in closure(L_n^2) minus L_n^2 with square in L_n^4, n = 4..7",
        start.elapsed()
    );
}

#[test]
fn criterion_03_alternating_witnesses_separate_higher_powers() {
    let start = Instant::now();
    for (n, i) in [(4usize, 3u32), (4, 4), (6, 3)] {
        let l = &L[&n];
        let h = constructions::witness_h(n, i).unwrap();
        assert!(closure_member_both_routes(l, &NP[&n], &h, i));
        assert!(!l.contains_monomial_power(&h, i).unwrap());
    }
    let l7 = &L[&7];
    let g = constructions::witness_g(7, 3).unwrap();
    assert!(closure_member_both_routes(l7, &NP[&7], &g, 3));
    assert!(!l7.contains_monomial_power(&g, 3).unwrap());
    println!(
        "PASS criterion 3 ({:?}): gap witnesses confirmed for (n,i) in {{(4,3),(4,4),(6,3),(7,3)}}",
        start.elapsed()
    );
}

#[test]
fn criterion_04_l5_closes_exactly_from_the_third_power() {
    let start = Instant::now();
    let l5 = &L[&5];
    let np = &NP[&5];
    assert!(!closure::is_integrally_closed_with(np, l5, 2).unwrap().closed);
    for d in [3u32, 4] {
        let closure_gens = closure::closure_power_generators_with(np, l5, d).unwrap();
        assert_eq!(
            closure_gens,
            l5.power(d).unwrap(),
            "closure generators must equal the power at d = {d}"
        );
    }
    println!(
        "PASS criterion 4 ({:?}): L_5 powers 3 and 4 equal their closures; power 2 does not",
        start.elapsed()
    );
}

const EXPECTED_HILBERT_ROWS: [[i64; 8]; 18] = [
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 1],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 1],
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 1, 0, 1, 1],
    [0, 1, 1, 0, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 0, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 1, 1, 0, 1],
    [1, 0, 1, 0, 1, 0, 1, 1],
    [1, 0, 1, 1, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 1, 0, 1],
    [1, 1, 0, 1, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1, 1, 2],
];

fn expected_hilbert_matrix() -> Vec<Vec<BigInt>> {
    EXPECTED_HILBERT_ROWS
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

#[test]
fn criterion_05_rees_hilbert_basis_matches_the_frozen_matrix() {
    let start = Instant::now();
    let rees = cone::rees_cone(&L[&5]).unwrap();
    let hb = cone::hilbert_basis(&rees).unwrap();
    assert_eq!(hb.elements, expected_hilbert_matrix());

    // textual diff form: sorted space-separated rows
    let rendered = normality::io::write_matrix(&hb.elements);
    let expected_text: String = EXPECTED_HILBERT_ROWS
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ")
                + "\n"
        })
        .collect();
    assert_eq!(rendered, expected_text);

    // the two decomposition identities witnessing closedness of higher powers
    let row = |coords: &[i64]| -> Vec<BigInt> { coords.iter().map(|&x| BigInt::from(x)).collect() };
    let sum = |rows: &[&[i64]]| -> Vec<BigInt> {
        let mut acc = vec![BigInt::from(0); 8];
        for r in rows {
            for (a, &b) in acc.iter_mut().zip(r.iter()) {
                *a += b;
            }
        }
        acc
    };
    let top = [1i64, 1, 1, 1, 1, 1, 1, 2];
    let first_target = sum(&[&top, &[0, 0, 0, 1, 1, 1, 0, 1]]);
    assert_eq!(first_target, row(&[1, 1, 1, 2, 2, 2, 1, 3]));
    assert_eq!(
        first_target,
        sum(&[
            &[0, 1, 0, 1, 1, 0, 1, 1],
            &[1, 0, 0, 0, 1, 1, 0, 1],
            &[0, 0, 1, 1, 0, 1, 0, 1],
        ])
    );
    let second_target = sum(&[&top, &[0, 1, 0, 1, 1, 0, 1, 1]]);
    assert_eq!(second_target, row(&[1, 2, 1, 2, 2, 1, 2, 3]));
    assert_eq!(
        second_target,
        sum(&[
            &[1, 1, 0, 1, 0, 0, 1, 1],
            &[0, 1, 1, 0, 1, 0, 1, 1],
            &[0, 0, 0, 1, 1, 1, 0, 1],
        ])
    );
    let facets = rees.facets();
    for target in [first_target, second_target] {
        let path = cone::decompose_in_basis(&target, &hb.elements, &facets)
            .expect("identity targets decompose over the basis");
        let mut acc = vec![BigInt::from(0); 8];
        for idx in path {
            for (a, b) in acc.iter_mut().zip(&hb.elements[idx]) {
                *a += b;
            }
        }
        assert_eq!(acc, target);
    }
    println!(
        "PASS criterion 5 ({:?}): Rees-cone Hilbert basis is exactly the frozen 18-row matrix",
        start.elapsed()
    );
}

#[test]
fn criterion_06_colon_of_power_by_closure_is_the_truncated_maximal_ideal() {
    let start = Instant::now();
    let l5 = &L[&5];
    let cl2 = closure::closure_power_generators_with(&NP[&5], l5, 2).unwrap();
    let colon = l5.power(2).unwrap().colon_ideal(&cl2).unwrap();
    assert_eq!(
        colon,
        MonomialIdeal::from_variables(7, &[1, 2, 3, 4, 5, 6]).unwrap()
    );

    let l4 = &L[&4];
    for i in [2u32, 3] {
        let cl = closure::closure_power_generators_with(&NP[&4], l4, i).unwrap();
        let colon = l4.power(i).unwrap().colon_ideal(&cl).unwrap();
        assert_eq!(
            colon,
            MonomialIdeal::from_variables(6, &[1, 2, 3, 4, 5, 6]).unwrap(),
            "colon mismatch at i = {i}"
        );
    }
    println!(
        "PASS criterion 6 ({:?}): power-by-closure colons equal (x1..x6) for L_5^2 and L_4^2, L_4^3",
        start.elapsed()
    );
}

#[test]
fn criterion_07_scaling_the_last_variable_preserves_the_gap() {
    let start = Instant::now();
    let l5 = &L[&5];
    let f = constructions::witness_f(5).unwrap();
    for i in 1..=5u32 {
        let mut coords = f.coords().to_vec();
        coords[6] += i;
        let m = ev(&coords);
        assert!(closure_member_both_routes(l5, &NP[&5], &m, 2));
        assert!(!l5.contains_monomial_power(&m, 2).unwrap());
    }
    println!(
        "PASS criterion 7 ({:?}): x7^i * f stays in closure(L_5^2) minus L_5^2 for i = 1..5",
        start.elapsed()
    );
}

#[test]
fn criterion_08_seven_and_ten_variable_counterexamples() {
    let start = Instant::now();
    let t = &*T_IDEAL;
    let alpha = ev(&[1; 7]);
    let np_t = closure::newton_polyhedron(t).unwrap();
    assert!(closure_member_both_routes(t, &np_t, &alpha, 2));
    assert!(!t.contains_monomial_power(&alpha, 2).unwrap());
    let alpha_sq = alpha.mul(&alpha).unwrap();
    assert!(t.contains_monomial_power(&alpha_sq, 4).unwrap());

    let q = &*Q_IDEAL;
    let alpha10 = ev(&[1; 10]);
    assert!(!q.contains_monomial_power(&alpha10, 3).unwrap());
    let alpha10_sq = alpha10.mul(&alpha10).unwrap();
    // closure membership by the defining power witness: alpha^2 in Q^6
    assert!(q.contains_monomial_power(&alpha10_sq, 6).unwrap());
    let np_q = closure::newton_polyhedron(q).unwrap();
    assert!(closure_member_both_routes(q, &np_q, &alpha10, 3));
    println!(
        "PASS criterion 8 ({:?}): both counterexample ideals have full-support gap witnesses",
        start.elapsed()
    );
}

#[test]
fn criterion_09_deleted_vertex_cover_decomposition() {
    let start = Instant::now();
    let full = graph::kss_graph(4).unwrap();
    let deleted = full.delete_vertex("v0,1").unwrap();
    let j_full = full.cover_ideal().unwrap();
    let j_deleted = deleted.cover_ideal_in(&full).unwrap();
    let dim = full.vertex_count();
    let var = |label: &str| full.index_of(label).unwrap() + 1;
    let corner = MonomialIdeal::minimalize(
        dim,
        vec![
            ExponentVector::variable(dim, var("v0,1")).unwrap(),
            ExponentVector::from_support(
                dim,
                &[var("v1,1"), var("v0,0"), var("v0,2"), var("v3,2")],
            )
            .unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(j_full, j_deleted.intersect(&corner).unwrap());
    println!(
        "PASS criterion 9 ({:?}): cover ideal of the wrapped prism splits over the deleted vertex",
        start.elapsed()
    );
}

#[test]
fn criterion_10_bounded_normality_sweeps() {
    let start = Instant::now();
    let cases: Vec<(&str, MonomialIdeal, u32)> = vec![
        ("L_3", L[&3].clone(), 3),
        ("pentagon cover ideal", J_C5.clone(), 3),
        (
            "pentagon plus leaf cover ideal",
            graph::cycle(5)
                .unwrap()
                .add_leaf("5", "6")
                .unwrap()
                .cover_ideal()
                .unwrap(),
            2,
        ),
        (
            "helm(5) cover ideal",
            graph::helm(5).unwrap().cover_ideal().unwrap(),
            2,
        ),
    ];
    for (name, ideal, k) in cases {
        let report = closure::is_normal_up_to(&ideal, k).unwrap();
        assert!(report.all_closed, "{name} must be closed through power {k}");
        assert_eq!(report.powers.len(), k as usize);
    }
    println!(
        "PASS criterion 10 ({:?}): all four normality sweeps close at every checked power",
        start.elapsed()
    );
}

#[test]
fn criterion_11_property_suites_agree_with_oracles() {
    let start = Instant::now();

    // (a) the two closure-membership routes agree on 500 random points per
    // fixture ideal
    let mut rng = XorShift(0x5eed_acce_0000_0001 ^ 0x9e37_79b9_7f4a_7c15);
    let np_c5 = closure::newton_polyhedron(&J_C5).unwrap();
    let np_t = closure::newton_polyhedron(&T_IDEAL).unwrap();
    for (ideal, np) in [
        (&*J_C5, &np_c5),
        (&L[&4], &NP[&4]),
        (&L[&5], &NP[&5]),
        (&*T_IDEAL, &np_t),
    ] {
        for _ in 0..500 {
            let coords: Vec<u32> = (0..ideal.dim()).map(|_| rng.below(7) as u32).collect();
            let d = 1 + rng.below(3) as u32;
            let a = ev(&coords);
            let facet = np.contains_scaled(&a, d).unwrap();
            let lp = closure::member_of_closure_power_lp(ideal, &a, d).unwrap();
            assert_eq!(facet, lp, "routes disagree at {a}, power {d}");
        }
    }

    // (b) power membership agrees with the definitional multiset oracle
    fn multiset_oracle(ideal: &MonomialIdeal, a: &ExponentVector, k: u32) -> bool {
        fn rec(
            gens: &[ExponentVector],
            from: usize,
            left: u32,
            acc: &ExponentVector,
            a: &ExponentVector,
        ) -> bool {
            if left == 0 {
                return acc.divides(a).unwrap();
            }
            (from..gens.len()).any(|i| {
                let next = acc.mul(&gens[i]).unwrap();
                next.divides(a).unwrap() && rec(gens, i, left - 1, &next, a)
            })
        }
        rec(
            ideal.gens(),
            0,
            k,
            &ExponentVector::one(ideal.dim()),
            a,
        )
    }
    let mut rng = XorShift(0xabcdef12_34567890);
    for ideal in [&*J_C5, &L[&4], &L[&5], &*T_IDEAL] {
        for k in 1..=3u32 {
            for _ in 0..60 {
                let coords: Vec<u32> =
                    (0..ideal.dim()).map(|_| rng.below(6) as u32).collect();
                let a = ev(&coords);
                assert_eq!(
                    ideal.contains_monomial_power(&a, k).unwrap(),
                    multiset_oracle(ideal, &a, k),
                    "power membership mismatch at {a}, k = {k}"
                );
            }
        }
    }

    // (c) minimal covers match exhaustive subset enumeration up to 12 vertices
    for g in [
        graph::cycle(5).unwrap(),
        graph::cycle(8).unwrap(),
        graph::path(6).unwrap(),
        graph::wheel(6).unwrap(),
        graph::helm(5).unwrap(),
        graph::kss_graph(4).unwrap(),
    ] {
        let nv = g.vertex_count();
        assert!(nv <= 12);
        let edges: Vec<(usize, usize)> = g.edge_indices().iter().copied().collect();
        let covers_mask: Vec<u32> = (0..1u32 << nv)
            .filter(|mask| edges.iter().all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0))
            .collect();
        let minimal: std::collections::BTreeSet<std::collections::BTreeSet<usize>> = covers_mask
            .iter()
            .filter(|&&m| covers_mask.iter().all(|&o| o == m || o & m != o))
            .map(|&m| (0..nv).filter(|v| m & (1 << v) != 0).collect())
            .collect();
        let enumerated: std::collections::BTreeSet<std::collections::BTreeSet<usize>> =
            g.minimal_vertex_covers().into_iter().collect();
        assert_eq!(enumerated, minimal);
    }

    // (d) Hilbert basis irreducibility and bounded completeness
    let rees = cone::rees_cone(&L[&5]).unwrap();
    let hb = cone::hilbert_basis(&rees).unwrap();
    let facets = rees.facets();
    let elements: std::collections::BTreeSet<&Vec<BigInt>> = hb.elements.iter().collect();
    for a in &hb.elements {
        for b in &hb.elements {
            let s: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            assert!(
                !elements.contains(&s),
                "basis element is a sum of two others"
            );
        }
    }
    let mut point = vec![BigInt::from(0); 8];
    let mut members = 0usize;
    loop {
        if facets.contains_int_point(&point) {
            members += 1;
            assert!(
                cone::decompose_in_basis(&point, &hb.elements, &facets).is_some(),
                "cone lattice point {point:?} must decompose over the basis"
            );
        }
        // odometer over the 4^8 box with all coordinates <= 3
        let mut pos = 0;
        loop {
            if pos == 8 {
                break;
            }
            if point[pos] < BigInt::from(3) {
                point[pos] += 1;
                break;
            }
            point[pos] = BigInt::from(0);
            pos += 1;
        }
        if pos == 8 {
            break;
        }
    }
    assert!(members > 1000, "the box sweep must cover a real sample");

    println!(
        "PASS criterion 11 ({:?}): route agreement, power oracle, cover oracle, and basis checks hold",
        start.elapsed()
    );
}

#[test]
fn criterion_12_strong_persistence_of_the_pentagon_cover_ideal() {
    let start = Instant::now();
    let report = closure::strong_persistence_holds(&J_C5, 2).unwrap();
    assert!(report.all_hold);
    assert_eq!(report.checks.len(), 2);
    println!(
        "PASS criterion 12 ({:?}): (J^(k+1) : J) = J^k for k = 1, 2",
        start.elapsed()
    );
}
