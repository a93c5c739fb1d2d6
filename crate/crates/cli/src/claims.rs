//! The verification claim registry: every desk-checkable statement the
//! toolkit vouches for, one deterministic procedure per claim. Claims that
//! bound-check an unbounded statement carry a `bounded` label so the output
//! never overstates what was computed.

use std::sync::OnceLock;

use serde::Serialize;

use normality::closure::{self, NewtonPolyhedron};
use normality::cone;
use normality::constructions;
use normality::graph::{self, SimpleGraph};
use normality::ideal::MonomialIdeal;
use normality::{ExponentVector, Result};

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    /// Present when the claim is bounded evidence for an unbounded
    /// statement, e.g. "bounded evidence, K = 3".
    pub bounded: Option<&'static str>,
    run: fn() -> Result<(bool, Vec<String>)>,
}

#[derive(Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub description: String,
    pub expected: &'static str,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded: Option<String>,
    pub evidence: Vec<String>,
}

pub fn run_claim(claim: &Claim) -> ClaimReport {
    let (verdict, evidence) = match (claim.run)() {
        Ok((true, ev)) => ("confirmed", ev),
        Ok((false, ev)) => ("refuted", ev),
        Err(e) => ("error", vec![e.to_string()]),
    };
    ClaimReport {
        id: claim.id.to_string(),
        description: claim.description.to_string(),
        expected: "confirmed",
        verdict,
        bounded: claim.bounded.map(str::to_string),
        evidence,
    }
}

pub fn skipped_report(claim: &Claim) -> ClaimReport {
    ClaimReport {
        id: claim.id.to_string(),
        description: claim.description.to_string(),
        expected: "confirmed",
        verdict: "error",
        bounded: claim.bounded.map(str::to_string),
        evidence: vec!["not run: time budget exhausted".to_string()],
    }
}

// ---------------------------------------------------------------- fixtures

fn l(n: usize) -> &'static MonomialIdeal {
    static CELLS: [OnceLock<MonomialIdeal>; 5] = [const { OnceLock::new() }; 5];
    CELLS[n - 3].get_or_init(|| constructions::build_l_n(n).unwrap().ideal)
}

fn np(n: usize) -> &'static NewtonPolyhedron {
    static CELLS: [OnceLock<NewtonPolyhedron>; 5] = [const { OnceLock::new() }; 5];
    CELLS[n - 3].get_or_init(|| closure::newton_polyhedron(l(n)).unwrap())
}

fn j_c5() -> &'static MonomialIdeal {
    static CELL: OnceLock<MonomialIdeal> = OnceLock::new();
    CELL.get_or_init(|| graph::cycle(5).unwrap().cover_ideal().unwrap())
}

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
}

/// Closure membership decided by both independent routes; disagreement is
/// reported instead of being silently resolved.
fn both_routes(
    ideal: &MonomialIdeal,
    np: &NewtonPolyhedron,
    a: &ExponentVector,
    d: u32,
    evidence: &mut Vec<String>,
) -> Result<Option<bool>> {
    let facet = np.contains_scaled(a, d)?;
    let lp = closure::member_of_closure_power_lp(ideal, a, d)?;
    if facet != lp {
        evidence.push(format!(
            "membership routes disagree at {a}, power {d}: facet {facet}, lp {lp}"
        ));
        return Ok(None);
    }
    Ok(Some(facet))
}

/// The standard gap check: a in closure(I^d) by both routes, a not in I^d.
fn gap_witness(
    ideal: &MonomialIdeal,
    np: &NewtonPolyhedron,
    a: &ExponentVector,
    d: u32,
    evidence: &mut Vec<String>,
) -> Result<bool> {
    let in_closure = match both_routes(ideal, np, a, d, evidence)? {
        Some(v) => v,
        None => return Ok(false),
    };
    let in_power = ideal.contains_monomial_power(a, d)?;
    evidence.push(format!(
        "{a}: in closure of power {d} (both routes) = {in_closure}, in power = {in_power}"
    ));
    Ok(in_closure && !in_power)
}

// ------------------------------------------------------------------ claims

fn thm_2_1_example() -> Result<(bool, Vec<String>)> {
    let i = j_c5().extended(7)?;
    let v = ExponentVector::variable(7, 6)?;
    let h = ExponentVector::variable(7, 7)?;
    let built = constructions::build_i_plus_vh(&i, &v, &h)?;
    let mut evidence = vec![format!(
        "built {} with {} generators",
        built.provenance,
        built.ideal.num_gens()
    )];
    let report = closure::is_normal_up_to(&built.ideal, 2)?;
    evidence.push(format!("closed through power 2: {}", report.all_closed));
    let recovered = built.ideal.substitute_one(6)?;
    let plain = i.sum(&MonomialIdeal::principal(h))?;
    evidence.push(format!("substituting x6 = 1 recovers I + (x7): {}", recovered == plain));
    Ok((
        built.ideal.num_gens() == 6 && report.all_closed && recovered == plain,
        evidence,
    ))
}

fn prop_2_3_coprime() -> Result<(bool, Vec<String>)> {
    let ideal = MonomialIdeal::minimalize(
        6,
        vec![
            ExponentVector::from_support(6, &[1, 2])?,
            ExponentVector::from_support(6, &[3, 4, 5])?,
            ExponentVector::from_support(6, &[6])?,
        ],
    )?;
    let gens = ideal.gens();
    let pairwise = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime_with(b).unwrap()));
    let report = closure::is_normal_up_to(&ideal, 3)?;
    let evidence = vec![
        format!("generators pairwise coprime and square-free: {pairwise}"),
        format!("closed through power 3: {}", report.all_closed),
    ];
    Ok((pairwise && ideal.is_squarefree() && report.all_closed, evidence))
}

fn rem_2_4_q() -> Result<(bool, Vec<String>)> {
    let q = constructions::build_q().ideal;
    let alpha = ExponentVector::new(vec![1; 10]);
    let mut evidence = Vec::new();
    let np_q = closure::newton_polyhedron(&q)?;
    let in_closure = match both_routes(&q, &np_q, &alpha, 3, &mut evidence)? {
        Some(v) => v,
        None => return Ok((false, evidence)),
    };
    let in_cube = q.contains_monomial_power(&alpha, 3)?;
    let alpha_sq = alpha.mul(&alpha)?;
    let sq_in_sixth = q.contains_monomial_power(&alpha_sq, 6)?;
    evidence.push(format!(
        "alpha in closure of Q^3 (both routes) = {in_closure}, alpha in Q^3 = {in_cube}, alpha^2 in Q^6 = {sq_in_sixth}"
    ));
    Ok((in_closure && !in_cube && sq_in_sixth, evidence))
}

fn lem_2_5_product() -> Result<(bool, Vec<String>)> {
    let q = constructions::build_q().ideal;
    let (x_gens, y_gens): (Vec<_>, Vec<_>) = q
        .gens()
        .iter()
        .cloned()
        .partition(|g| g.support().iter().all(|&v| v <= 5));
    let x_block = MonomialIdeal::minimalize(10, x_gens)?;
    let y_block = MonomialIdeal::minimalize(10, y_gens)?;
    let product = x_block.product(&y_block)?;
    let intersection = x_block.intersect(&y_block)?;
    let blocks_agree = product == intersection;
    let mut evidence = vec![format!(
        "disjoint 5-variable blocks: product = intersection with {} generators: {blocks_agree}",
        product.num_gens()
    )];

    // seeded random coprime splits over 6 variables
    let mut rng = XorShift(0x1ed_cafe_2024_0001);
    let mut random_agree = true;
    for _ in 0..10 {
        let mut left_gens = Vec::new();
        let mut right_gens = Vec::new();
        for _ in 0..3 {
            let mut a = vec![0u32; 6];
            let mut b = vec![0u32; 6];
            for j in 0..3 {
                a[j] = (rng.next() % 2) as u32;
                b[j + 3] = (rng.next() % 2) as u32;
            }
            left_gens.push(ExponentVector::new(a));
            right_gens.push(ExponentVector::new(b));
        }
        let left = MonomialIdeal::minimalize(6, left_gens)?;
        let right = MonomialIdeal::minimalize(6, right_gens)?;
        if left.product(&right)? != left.intersect(&right)? {
            random_agree = false;
        }
    }
    evidence.push(format!(
        "10 seeded coprime-split square-free pairs agree: {random_agree}"
    ));
    Ok((blocks_agree && random_agree, evidence))
}

fn thm_2_7_identity() -> Result<(bool, Vec<String>)> {
    // build_corner computes the intersection form and the colon-sum form
    // and panics if they differ, so a successful build is the identity check
    let corner1 = constructions::build_corner(j_c5(), 1)?;
    let corner2 = constructions::build_corner(j_c5(), 2)?;
    let leafed = graph::cycle(5)?.add_leaf("5", "6")?.cover_ideal()?;
    let leaf_match = corner1.ideal == leafed;
    let evidence = vec![
        format!(
            "corner forms agree with one fresh variable ({} generators)",
            corner1.ideal.num_gens()
        ),
        format!(
            "corner forms agree with two fresh variables ({} generators)",
            corner2.ideal.num_gens()
        ),
        format!("one-fresh-variable corner equals the leafed cover ideal: {leaf_match}"),
    ];
    Ok((leaf_match, evidence))
}

fn rem_2_8_t() -> Result<(bool, Vec<String>)> {
    let t = constructions::build_t().ideal;
    let alpha = ExponentVector::new(vec![1; 7]);
    let mut evidence = vec![format!(
        "T is square-free: {}; closed at power 1: {}",
        t.is_squarefree(),
        closure::is_integrally_closed(&t, 1)?.closed
    )];
    let np_t = closure::newton_polyhedron(&t)?;
    let has_gap = gap_witness(&t, &np_t, &alpha, 2, &mut evidence)?;
    let alpha_sq = alpha.mul(&alpha)?;
    let sq_in_fourth = t.contains_monomial_power(&alpha_sq, 4)?;
    evidence.push(format!("alpha^2 in T^4: {sq_in_fourth}"));
    Ok((has_gap && sq_in_fourth, evidence))
}

fn q1_kss_decomposition() -> Result<(bool, Vec<String>)> {
    let full = graph::kss_graph(4)?;
    let deleted = full.delete_vertex("v0,1")?;
    let j_full = full.cover_ideal()?;
    let j_deleted = deleted.cover_ideal_in(&full)?;
    let dim = full.vertex_count();
    let var = |label: &str| -> Result<usize> { Ok(full.index_of(label)? + 1) };
    let corner = MonomialIdeal::minimalize(
        dim,
        vec![
            ExponentVector::variable(dim, var("v0,1")?)?,
            ExponentVector::from_support(
                dim,
                &[var("v1,1")?, var("v0,0")?, var("v0,2")?, var("v3,2")?],
            )?,
        ],
    )?;
    let rhs = j_deleted.intersect(&corner)?;
    let holds = j_full == rhs;
    let evidence = vec![
        format!(
            "cover ideal of the full graph: {} generators; of the deleted graph: {}",
            j_full.num_gens(),
            j_deleted.num_gens()
        ),
        format!("decomposition identity holds: {holds}"),
    ];
    Ok((holds, evidence))
}

fn thm_3_4_leaf() -> Result<(bool, Vec<String>)> {
    let mut rng = XorShift(0x0034_1eaf_2024_0001);
    let mut identity_holds = true;
    for case in 0..10 {
        let n = 4 + (case % 5);
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut g = SimpleGraph::new(labels.clone())?;
        for i in 0..n {
            for j in i + 1..n {
                if rng.next().is_multiple_of(2) {
                    g.add_edge(&labels[i], &labels[j])?;
                }
            }
        }
        let leafed = g.add_leaf(&labels[n - 1], "w")?;
        let pair = MonomialIdeal::minimalize(
            n + 1,
            vec![
                ExponentVector::variable(n + 1, n)?,
                ExponentVector::variable(n + 1, n + 1)?,
            ],
        )?;
        let rhs = g.cover_ideal()?.extended(n + 1)?.intersect(&pair)?;
        if leafed.cover_ideal()? != rhs {
            identity_holds = false;
        }
    }
    let leafed_c5 = graph::cycle(5)?.add_leaf("5", "6")?.cover_ideal()?;
    let report = closure::is_normal_up_to(&leafed_c5, 2)?;
    let evidence = vec![
        format!("leaf identity holds on 10 seeded random graphs: {identity_holds}"),
        format!(
            "leafed pentagon cover ideal closed through power 2: {}",
            report.all_closed
        ),
    ];
    Ok((identity_holds && report.all_closed, evidence))
}

fn thm_3_8_helm5() -> Result<(bool, Vec<String>)> {
    let helm = graph::helm(5)?;
    let perfect = helm.is_perfect()?;
    let cover = helm.cover_ideal()?;
    let report = closure::is_normal_up_to(&cover, 2)?;
    let evidence = vec![
        format!("helm(5) is perfect: {perfect} (an induced odd hole exists)"),
        format!(
            "cover ideal ({} generators, {} variables) closed through power 2: {}",
            cover.num_gens(),
            cover.dim(),
            report.all_closed
        ),
    ];
    Ok((!perfect && report.all_closed, evidence))
}

fn l3_normal() -> Result<(bool, Vec<String>)> {
    let report = closure::is_normal_up_to(l(3), 3)?;
    let evidence = vec![format!("L_3 closed through power 3: {}", report.all_closed)];
    Ok((report.all_closed, evidence))
}

fn thm_4_1(n: usize) -> Result<(bool, Vec<String>)> {
    let ideal = l(n);
    let f = constructions::witness_f(n)?;
    let mut evidence = Vec::new();
    let has_gap = gap_witness(ideal, np(n), &f, 2, &mut evidence)?;
    let f_sq = f.mul(&f)?;
    let sq_in_fourth = ideal.contains_monomial_power(&f_sq, 4)?;
    evidence.push(format!("f^2 in the fourth power: {sq_in_fourth}"));
    Ok((has_gap && sq_in_fourth, evidence))
}

fn thm_4_1_n4() -> Result<(bool, Vec<String>)> {
    thm_4_1(4)
}
fn thm_4_1_n5() -> Result<(bool, Vec<String>)> {
    thm_4_1(5)
}
fn thm_4_1_n6() -> Result<(bool, Vec<String>)> {
    thm_4_1(6)
}
fn thm_4_1_n7() -> Result<(bool, Vec<String>)> {
    thm_4_1(7)
}

fn thm_4_3(n: usize, i: u32) -> Result<(bool, Vec<String>)> {
    let ideal = l(n);
    let witness = if n.is_multiple_of(2) {
        constructions::witness_h(n, i)?
    } else {
        constructions::witness_g(n, i)?
    };
    let mut evidence = Vec::new();
    let has_gap = gap_witness(ideal, np(n), &witness, i, &mut evidence)?;
    Ok((has_gap, evidence))
}

fn thm_4_3_n4_i3() -> Result<(bool, Vec<String>)> {
    thm_4_3(4, 3)
}
fn thm_4_3_n4_i4() -> Result<(bool, Vec<String>)> {
    thm_4_3(4, 4)
}
fn thm_4_3_n6_i3() -> Result<(bool, Vec<String>)> {
    thm_4_3(6, 3)
}
fn thm_4_3_n7_i3() -> Result<(bool, Vec<String>)> {
    thm_4_3(7, 3)
}

fn thm_4_5(i: u32) -> Result<(bool, Vec<String>)> {
    let ideal = l(5);
    let closure_gens = closure::closure_power_generators_with(np(5), ideal, i)?;
    let power = ideal.power(i)?;
    let equal = closure_gens == power;
    let evidence = vec![format!(
        "closure of L_5^{i} has {} minimal generators; equals the power: {equal}",
        closure_gens.num_gens()
    )];
    Ok((equal, evidence))
}

fn thm_4_5_i3() -> Result<(bool, Vec<String>)> {
    thm_4_5(3)
}
fn thm_4_5_i4() -> Result<(bool, Vec<String>)> {
    thm_4_5(4)
}

fn thm_4_6(i: u32) -> Result<(bool, Vec<String>)> {
    let ideal = l(5);
    let f = constructions::witness_f(5)?;
    let mut coords = f.coords().to_vec();
    coords[6] += i;
    let witness = ExponentVector::new(coords);
    let mut evidence = Vec::new();
    let has_gap = gap_witness(ideal, np(5), &witness, 2, &mut evidence)?;
    Ok((has_gap, evidence))
}

fn thm_4_6_i1() -> Result<(bool, Vec<String>)> {
    thm_4_6(1)
}
fn thm_4_6_i2() -> Result<(bool, Vec<String>)> {
    thm_4_6(2)
}
fn thm_4_6_i3() -> Result<(bool, Vec<String>)> {
    thm_4_6(3)
}
fn thm_4_6_i4() -> Result<(bool, Vec<String>)> {
    thm_4_6(4)
}
fn thm_4_6_i5() -> Result<(bool, Vec<String>)> {
    thm_4_6(5)
}

fn thm_4_7() -> Result<(bool, Vec<String>)> {
    let ideal = l(5);
    let cl2 = closure::closure_power_generators_with(np(5), ideal, 2)?;
    let colon = ideal.power(2)?.colon_ideal(&cl2)?;
    let expected = MonomialIdeal::from_variables(7, &[1, 2, 3, 4, 5, 6])?;
    let equal = colon == expected;
    let evidence = vec![format!(
        "colon of L_5^2 by its closure: {} generators; equals (x1,...,x6): {equal}",
        colon.num_gens()
    )];
    Ok((equal, evidence))
}

fn l4_colon(i: u32) -> Result<(bool, Vec<String>)> {
    let ideal = l(4);
    let cl = closure::closure_power_generators_with(np(4), ideal, i)?;
    let colon = ideal.power(i)?.colon_ideal(&cl)?;
    let expected = MonomialIdeal::from_variables(6, &[1, 2, 3, 4, 5, 6])?;
    let equal = colon == expected;
    let evidence = vec![format!(
        "colon of L_4^{i} by its closure equals the maximal ideal (x1,...,x6): {equal}"
    )];
    Ok((equal, evidence))
}

fn l4_colon_i2() -> Result<(bool, Vec<String>)> {
    l4_colon(2)
}
fn l4_colon_i3() -> Result<(bool, Vec<String>)> {
    l4_colon(3)
}

fn hb_l5_matrix() -> Result<(bool, Vec<String>)> {
    let rees = cone::rees_cone(l(5))?;
    let hb = cone::hilbert_basis(&rees)?;
    let rendered = normality::io::write_matrix(&hb.elements);
    let equal = rendered == crate::fixtures::HB_L5;
    let evidence = vec![format!(
        "computed Hilbert basis has {} elements; matches the frozen 18-row fixture: {equal}",
        hb.elements.len()
    )];
    Ok((equal, evidence))
}

fn persistence_jc5() -> Result<(bool, Vec<String>)> {
    let report = closure::strong_persistence_holds(j_c5(), 2)?;
    let evidence = report
        .checks
        .iter()
        .map(|c| format!("(J^{} : J) = J^{}: {}", c.k + 1, c.k, c.holds))
        .collect();
    Ok((report.all_hold, evidence))
}

// ---------------------------------------------------------------- registry

pub fn registry() -> &'static [Claim] {
    static REGISTRY: OnceLock<Vec<Claim>> = OnceLock::new();
    REGISTRY.get_or_init(|| {
        vec![
            Claim {
                id: "thm-2.1-example",
                description: "adding the coprime square-free multiple x6*x7 to the pentagon cover ideal keeps it closed, and substituting x6 = 1 recovers the plain sum",
                bounded: Some("bounded evidence, K = 2"),
                run: thm_2_1_example,
            },
            Claim {
                id: "prop-2.3-coprime",
                description: "an ideal with pairwise-coprime square-free generators stays closed",
                bounded: Some("bounded evidence, K = 3"),
                run: prop_2_3_coprime,
            },
            Claim {
                id: "rem-2.4-Q",
                description: "the two-block ideal Q has alpha = x1...x10 in the closure of Q^3 but outside Q^3, with alpha^2 in Q^6",
                bounded: None,
                run: rem_2_4_q,
            },
            Claim {
                id: "lem-2.5-product",
                description: "for ideals in disjoint variable blocks the product equals the intersection",
                bounded: None,
                run: lem_2_5_product,
            },
            Claim {
                id: "thm-2.7-identity",
                description: "the corner intersection equals the colon-sum form on the pentagon cover ideal, and with one fresh variable equals the leafed cover ideal",
                bounded: None,
                run: thm_2_7_identity,
            },
            Claim {
                id: "rem-2.8-T",
                description: "the square-free seven-generator ideal T has x1...x7 in the closure of T^2 but not in T^2",
                bounded: None,
                run: rem_2_8_t,
            },
            Claim {
                id: "q1-kss-decomposition",
                description: "the wrapped-prism cover ideal equals the deleted-vertex cover ideal intersected with the corner pair",
                bounded: None,
                run: q1_kss_decomposition,
            },
            Claim {
                id: "thm-3.4-leaf",
                description: "attaching a leaf intersects the cover ideal with the new edge pair, and the leafed pentagon cover ideal stays closed",
                bounded: Some("bounded evidence, K = 2"),
                run: thm_3_4_leaf,
            },
            Claim {
                id: "thm-3.8-helm5",
                description: "the helm(5) cover ideal stays closed although the graph is imperfect",
                bounded: Some("bounded evidence, K = 2"),
                run: thm_3_8_helm5,
            },
            Claim {
                id: "L3-normal",
                description: "L_3 stays closed at every checked power",
                bounded: Some("bounded evidence, K = 3"),
                run: l3_normal,
            },
            Claim {
                id: "thm-4.1-n4",
                description: "x1...x6 lies in the closure of L_4^2 but not in L_4^2, with its square in L_4^4",
                bounded: None,
                run: thm_4_1_n4,
            },
            Claim {
                id: "thm-4.1-n5",
                description: "x1...x7 lies in the closure of L_5^2 but not in L_5^2, with its square in L_5^4",
                bounded: None,
                run: thm_4_1_n5,
            },
            Claim {
                id: "thm-4.1-n6",
                description: "x1...x8 lies in the closure of L_6^2 but not in L_6^2, with its square in L_6^4",
                bounded: None,
                run: thm_4_1_n6,
            },
            Claim {
                id: "thm-4.1-n7",
                description: "x1...x9 lies in the closure of L_7^2 but not in L_7^2, with its square in L_7^4",
                bounded: None,
                run: thm_4_1_n7,
            },
            Claim {
                id: "thm-4.3-n4-i3",
                description: "the alternating witness separates the closure of L_4^3 from L_4^3",
                bounded: None,
                run: thm_4_3_n4_i3,
            },
            Claim {
                id: "thm-4.3-n4-i4",
                description: "the alternating witness separates the closure of L_4^4 from L_4^4",
                bounded: None,
                run: thm_4_3_n4_i4,
            },
            Claim {
                id: "thm-4.3-n6-i3",
                description: "the alternating witness separates the closure of L_6^3 from L_6^3",
                bounded: None,
                run: thm_4_3_n6_i3,
            },
            Claim {
                id: "thm-4.3-n7-i3",
                description: "the odd-cycle witness separates the closure of L_7^3 from L_7^3",
                bounded: None,
                run: thm_4_3_n7_i3,
            },
            Claim {
                id: "thm-4.5-i3",
                description: "the third power of L_5 equals its closure",
                bounded: None,
                run: thm_4_5_i3,
            },
            Claim {
                id: "thm-4.5-i4",
                description: "the fourth power of L_5 equals its closure",
                bounded: None,
                run: thm_4_5_i4,
            },
            Claim {
                id: "thm-4.6-i1",
                description: "x7^1 * x1...x7 lies in the closure of L_5^2 but not in L_5^2",
                bounded: None,
                run: thm_4_6_i1,
            },
            Claim {
                id: "thm-4.6-i2",
                description: "x7^2 * x1...x7 lies in the closure of L_5^2 but not in L_5^2",
                bounded: None,
                run: thm_4_6_i2,
            },
            Claim {
                id: "thm-4.6-i3",
                description: "x7^3 * x1...x7 lies in the closure of L_5^2 but not in L_5^2",
                bounded: None,
                run: thm_4_6_i3,
            },
            Claim {
                id: "thm-4.6-i4",
                description: "x7^4 * x1...x7 lies in the closure of L_5^2 but not in L_5^2",
                bounded: None,
                run: thm_4_6_i4,
            },
            Claim {
                id: "thm-4.6-i5",
                description: "x7^5 * x1...x7 lies in the closure of L_5^2 but not in L_5^2",
                bounded: None,
                run: thm_4_6_i5,
            },
            Claim {
                id: "thm-4.7",
                description: "the colon of L_5^2 by its closure is exactly (x1,...,x6)",
                bounded: None,
                run: thm_4_7,
            },
            Claim {
                id: "l4-colon-i2",
                description: "the colon of L_4^2 by its closure is exactly (x1,...,x6)",
                bounded: None,
                run: l4_colon_i2,
            },
            Claim {
                id: "l4-colon-i3",
                description: "the colon of L_4^3 by its closure is exactly (x1,...,x6)",
                bounded: None,
                run: l4_colon_i3,
            },
            Claim {
                id: "hb-L5-matrix",
                description: "the Hilbert basis of the Rees cone of L_5 equals the frozen 18-row matrix",
                bounded: None,
                run: hb_l5_matrix,
            },
            Claim {
                id: "persistence-JC5",
                description: "the pentagon cover ideal satisfies (J^(k+1) : J) = J^k",
                bounded: Some("bounded evidence, k = 1..2"),
                run: persistence_jc5,
            },
        ]
    })
}

/// Resolve a claim selector: "all", an exact id, a range like
/// "thm-4.1-n4..n7", or a bare prefix matching several ids.
pub fn select(selector: &str) -> std::result::Result<Vec<&'static Claim>, String> {
    let all = registry();
    if selector == "all" {
        return Ok(all.iter().collect());
    }
    if let Some(exact) = all.iter().find(|c| c.id == selector) {
        return Ok(vec![exact]);
    }
    if let Some((left, right)) = selector.split_once("..") {
        return select_range(left, right);
    }
    let by_prefix: Vec<&Claim> = all.iter().filter(|c| c.id.starts_with(selector)).collect();
    if by_prefix.is_empty() {
        return Err(format!(
            "unknown claim '{selector}'; see 'verify --list' for the registered ids"
        ));
    }
    Ok(by_prefix)
}

fn select_range(left: &str, right: &str) -> std::result::Result<Vec<&'static Claim>, String> {
    let bad = || format!("bad claim range '{left}..{right}'");
    let (stem, first_seg) = left.rsplit_once('-').ok_or_else(bad)?;
    let split_seg = |seg: &str| -> Option<(String, u32)> {
        let digits_at = seg.find(|c: char| c.is_ascii_digit())?;
        let (alpha, digits) = seg.split_at(digits_at);
        Some((alpha.to_string(), digits.parse().ok()?))
    };
    let (alpha_a, lo) = split_seg(first_seg).ok_or_else(bad)?;
    let (alpha_b, hi) = split_seg(right).ok_or_else(bad)?;
    if alpha_a != alpha_b || lo > hi {
        return Err(bad());
    }
    let ids: Vec<String> = (lo..=hi)
        .map(|k| format!("{stem}-{alpha_a}{k}"))
        .collect();
    let mut picked = Vec::new();
    for id in &ids {
        match registry().iter().find(|c| c.id == id) {
            Some(c) => picked.push(c),
            None => return Err(format!("claim '{id}' in range is not registered")),
        }
    }
    Ok(picked)
}

/// Registered ids with descriptions, in registry order, as (id, description,
/// bounded) rows for the list command.
pub fn claim_rows() -> Vec<(&'static str, &'static str, Option<&'static str>)> {
    registry()
        .iter()
        .map(|c| (c.id, c.description, c.bounded))
        .collect()
}

