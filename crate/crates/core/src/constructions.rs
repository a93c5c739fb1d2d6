//! Named ideal constructions used throughout the verification suite: the
//! sum/product recipes that preserve normality under coprimality hypotheses,
//! the corner intersection, the cycle-based family L_n, and the literal
//! counterexample ideals with their witness monomials. Each factory
//! re-checks the hypotheses that make its recipe meaningful and refuses to
//! build when one fails.

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::graph;
use crate::ideal::MonomialIdeal;

/// An ideal packaged with where it came from: a formula in `provenance` and
/// the list of hypotheses that were re-verified while building it.
#[derive(Clone, Debug)]
pub struct NamedConstruction {
    pub id: String,
    pub ideal: MonomialIdeal,
    pub provenance: String,
    pub hypotheses: Vec<String>,
}

fn hypothesis(construction: &'static str, detail: String) -> Error {
    Error::Hypothesis {
        construction,
        detail,
    }
}

/// L = I + (v*h) where v is square-free and coprime to every generator of I
/// and to h. The recipe preserves normality of I.
pub fn build_i_plus_vh(
    ideal: &MonomialIdeal,
    v: &ExponentVector,
    h: &ExponentVector,
) -> Result<NamedConstruction> {
    const NAME: &str = "I + vh";
    if !v.is_squarefree() {
        return Err(Error::NotSquareFree { gen: v.to_string() });
    }
    for u in ideal.gens() {
        if !u.is_coprime_with(v)? {
            return Err(hypothesis(
                NAME,
                format!("v = {} shares support with the generator {}", v, u),
            ));
        }
    }
    if !h.is_coprime_with(v)? {
        return Err(hypothesis(
            NAME,
            format!("v = {} shares support with h = {}", v, h),
        ));
    }
    let vh = v.mul(h)?;
    let result = ideal.sum(&MonomialIdeal::principal(vh.clone()))?;
    Ok(NamedConstruction {
        id: format!("({}) + ({})", ideal, vh),
        ideal: result,
        provenance: format!("sum of ({}) and the principal ideal ({})", ideal, vh),
        hypotheses: vec![
            format!("v = {} is square-free", v),
            "gcd(u, v) = 1 for every generator u and for h".into(),
        ],
    })
}

/// L = J*I + (h) with h in I, generators of J pairwise coprime, and every
/// generator of J coprime to every generator of I and to h.
pub fn build_ji_plus_h(
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    h: &ExponentVector,
) -> Result<NamedConstruction> {
    const NAME: &str = "JI + h";
    if !i.contains_monomial(h)? {
        return Err(hypothesis(NAME, format!("h = {} does not lie in I", h)));
    }
    let jg = j.gens();
    for (a, u) in jg.iter().enumerate() {
        for w in &jg[a + 1..] {
            if !u.is_coprime_with(w)? {
                return Err(hypothesis(
                    NAME,
                    format!("generators {} and {} of J share support", u, w),
                ));
            }
        }
        for w in i.gens() {
            if !u.is_coprime_with(w)? {
                return Err(hypothesis(
                    NAME,
                    format!("generator {} of J shares support with {} in I", u, w),
                ));
            }
        }
        if !u.is_coprime_with(h)? {
            return Err(hypothesis(
                NAME,
                format!("generator {} of J shares support with h = {}", u, h),
            ));
        }
    }
    let result = j
        .product(i)?
        .sum(&MonomialIdeal::principal(h.clone()))?;
    Ok(NamedConstruction {
        id: format!("({})*({}) + ({})", j, i, h),
        ideal: result,
        provenance: format!("product of ({}) and ({}) plus the principal ideal ({})", j, i, h),
        hypotheses: vec![
            "h lies in I".into(),
            "generators of J are pairwise coprime".into(),
            "every generator of J is coprime to every generator of I and to h".into(),
        ],
    })
}

/// The corner ideal of a square-free I in n variables with `extra` >= 1
/// fresh variables: L = I·S ∩ (x_n, x_{n+1}···x_{n+extra}) in S, computed
/// both as that intersection and as x_n(I : x_n) + x_{n+1}···x_{n+extra}·I,
/// with the two forms asserted equal.
pub fn build_corner(ideal: &MonomialIdeal, extra: usize) -> Result<NamedConstruction> {
    if !ideal.is_squarefree() {
        let offender = ideal
            .gens()
            .iter()
            .find(|g| !g.is_squarefree())
            .expect("some generator fails square-freeness");
        return Err(Error::NotSquareFree {
            gen: offender.to_string(),
        });
    }
    if extra == 0 {
        return Err(Error::ParamOutOfRange(
            "corner construction needs at least one fresh variable".into(),
        ));
    }
    let n = ideal.dim();
    if n == 0 {
        return Err(Error::ParamOutOfRange(
            "corner construction needs at least one variable".into(),
        ));
    }
    let m = n + extra;
    let extended = ideal.extended(m)?;
    let xn = ExponentVector::variable(m, n)?;
    let w = ExponentVector::from_support(m, &(n + 1..=m).collect::<Vec<_>>())?;
    let intersection_form = extended.intersect(&MonomialIdeal::minimalize(
        m,
        vec![xn.clone(), w.clone()],
    )?)?;

    let colon_part = extended
        .colon_monomial(&xn)?
        .product(&MonomialIdeal::principal(xn.clone()))?;
    let shifted_part = extended.product(&MonomialIdeal::principal(w.clone()))?;
    let colon_sum_form = colon_part.sum(&shifted_part)?;
    assert_eq!(
        intersection_form, colon_sum_form,
        "corner forms must agree as ideals"
    );

    Ok(NamedConstruction {
        id: format!("corner({}, extra={})", ideal, extra),
        ideal: intersection_form,
        provenance: format!(
            "intersection of ({}) extended to {} variables with ({}, {})",
            ideal, m, xn, w
        ),
        hypotheses: vec![
            "I is square-free".into(),
            format!(
                "intersection form equals x{}*(I : x{}) + {}*I",
                n, n, w
            ),
        ],
    })
}

/// L_n = x_{n+1}·I(C_n) + x_{n+2}·J(C_n) in n+2 variables, where I(C_n) and
/// J(C_n) are the edge and cover ideals of the n-cycle.
pub fn build_l_n(n: usize) -> Result<NamedConstruction> {
    if n < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "the cycle family needs n >= 3, got {n}"
        )));
    }
    let c = graph::cycle(n)?;
    let m = n + 2;
    let edge = c.edge_ideal()?.extended(m)?;
    let cover = c.cover_ideal()?.extended(m)?;
    let xn1 = MonomialIdeal::principal(ExponentVector::variable(m, n + 1)?);
    let xn2 = MonomialIdeal::principal(ExponentVector::variable(m, n + 2)?);
    let result = edge.product(&xn1)?.sum(&cover.product(&xn2)?)?;
    debug_assert!(result.is_squarefree());
    Ok(NamedConstruction {
        id: format!("L_{n}"),
        ideal: result,
        provenance: format!(
            "x{}*edge_ideal(C_{}) + x{}*cover_ideal(C_{}) in {} variables",
            n + 1,
            n,
            n + 2,
            n,
            m
        ),
        hypotheses: vec![format!("n = {n} >= 3")],
    })
}

/// The 7-generator linear-combination counterexample
/// T = x6*(x1x2x4, x1x3x5, x2x3, x2x5, x3x4) + x7*(x1x2x4, x1x3x5).
pub fn build_t() -> NamedConstruction {
    let dim = 7;
    let sup = |s: &[usize]| ExponentVector::from_support(dim, s).unwrap();
    let f = MonomialIdeal::minimalize(
        dim,
        vec![
            sup(&[1, 2, 4]),
            sup(&[1, 3, 5]),
            sup(&[2, 3]),
            sup(&[2, 5]),
            sup(&[3, 4]),
        ],
    )
    .unwrap();
    let i = MonomialIdeal::minimalize(dim, vec![sup(&[1, 2, 4]), sup(&[1, 3, 5])]).unwrap();
    let v = MonomialIdeal::principal(sup(&[6]));
    let w = MonomialIdeal::principal(sup(&[7]));
    let ideal = f
        .product(&v)
        .unwrap()
        .sum(&i.product(&w).unwrap())
        .unwrap();
    let expected: Vec<ExponentVector> = vec![
        sup(&[1, 2, 4, 6]),
        sup(&[1, 3, 5, 6]),
        sup(&[2, 3, 6]),
        sup(&[2, 5, 6]),
        sup(&[3, 4, 6]),
        sup(&[1, 2, 4, 7]),
        sup(&[1, 3, 5, 7]),
    ];
    let expected = MonomialIdeal::minimalize(dim, expected).unwrap();
    assert_eq!(ideal, expected, "T must match its displayed generators");
    NamedConstruction {
        id: "T".into(),
        ideal,
        provenance: "x6*(x1x2x4, x1x3x5, x2x3, x2x5, x3x4) + x7*(x1x2x4, x1x3x5)".into(),
        hypotheses: vec![
            "x6, x7 are fresh variables, coprime to both summand ideals".into(),
            "both summands are square-free".into(),
        ],
    }
}

/// Q = the cover ideal of a 5-cycle in x-variables plus the cover ideal of a
/// 5-cycle in disjoint y-variables, in 10 variables total.
pub fn build_q() -> NamedConstruction {
    let dim = 10;
    let base = graph::cycle(5).unwrap().cover_ideal().unwrap();
    let x_block = base.extended(dim).unwrap();
    let y_gens: Vec<ExponentVector> = base
        .gens()
        .iter()
        .map(|g| {
            let mut coords = vec![0u32; dim];
            coords[5..].copy_from_slice(g.coords());
            ExponentVector::new(coords)
        })
        .collect();
    let y_block = MonomialIdeal::minimalize(dim, y_gens).unwrap();
    let ideal = x_block.sum(&y_block).unwrap();
    assert_eq!(ideal.num_gens(), 10);
    NamedConstruction {
        id: "Q".into(),
        ideal,
        provenance: "cover_ideal(C_5) in variables 1-5 plus cover_ideal(C_5) in variables 6-10"
            .into(),
        hypotheses: vec!["the two summands live in disjoint variable blocks".into()],
    }
}

/// The deleted-vertex cover ideal of the wrapped prism: J(G) for
/// G = kss_graph(4) minus vertex v0,1, written in the 12 ambient variables,
/// with the decomposition
/// J(kss_graph(4)) = J(G) ∩ (x_{v0,1}, x_{v1,1} x_{v0,0} x_{v0,2} x_{v3,2})
/// asserted while building.
pub fn build_kss_deleted_cover() -> Result<NamedConstruction> {
    let full = graph::kss_graph(4)?;
    let deleted = full.delete_vertex("v0,1")?;
    let j_deleted = deleted.cover_ideal_in(&full)?;
    let j_full = full.cover_ideal()?;

    let dim = full.vertex_count();
    let var = |label: &str| -> Result<usize> { Ok(full.index_of(label)? + 1) };
    let corner_gen = ExponentVector::from_support(
        dim,
        &[var("v1,1")?, var("v0,0")?, var("v0,2")?, var("v3,2")?],
    )?;
    let pivot = ExponentVector::variable(dim, var("v0,1")?)?;
    let corner = MonomialIdeal::minimalize(dim, vec![pivot, corner_gen])?;
    let decomposition = j_deleted.intersect(&corner)?;
    assert_eq!(
        j_full, decomposition,
        "cover ideal of the full graph must equal the asserted decomposition"
    );

    Ok(NamedConstruction {
        id: "J(kss(4) minus v0,1)".into(),
        ideal: j_deleted,
        provenance:
            "cover ideal of kss_graph(4) with v0,1 deleted, in the 12 ambient variables".into(),
        hypotheses: vec![
            "J(kss_graph(4)) = J(G) ∩ (x_{v0,1}, x_{v1,1}x_{v0,0}x_{v0,2}x_{v3,2})".into(),
        ],
    })
}

/// f = x_1 x_2 ··· x_{n+2}, the degree-(n+2) witness against closedness of
/// the second power of L_n.
pub fn witness_f(n: usize) -> Result<ExponentVector> {
    if n < 4 {
        return Err(Error::ParamOutOfRange(format!(
            "the witness f applies for n >= 4, got {n}"
        )));
    }
    Ok(ExponentVector::new(vec![1; n + 2]))
}

/// h_i = x_1 x_2^{i-1} x_3 x_4^{i-1} ··· x_{n+1} x_{n+2}^{i-1} for even n:
/// exponent 1 on odd positions, i-1 on even positions.
pub fn witness_h(n: usize, i: u32) -> Result<ExponentVector> {
    if n < 4 || !n.is_multiple_of(2) {
        return Err(Error::ParamOutOfRange(format!(
            "the witness h applies for even n >= 4, got {n}"
        )));
    }
    if i < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "the witness h applies for powers i >= 3, got {i}"
        )));
    }
    let coords = (1..=n + 2)
        .map(|pos| if pos % 2 == 1 { 1 } else { i - 1 })
        .collect();
    Ok(ExponentVector::new(coords))
}

/// g_i = x_2 x_3 ··· x_{n-2} x_{n-1}^{i-1} x_n^{i-1} x_{n+1}^{i-1} x_{n+2}
/// for odd n >= 7.
pub fn witness_g(n: usize, i: u32) -> Result<ExponentVector> {
    if n < 7 || n % 2 != 1 {
        return Err(Error::ParamOutOfRange(format!(
            "the witness g applies for odd n >= 7, got {n}"
        )));
    }
    if i < 3 {
        return Err(Error::ParamOutOfRange(format!(
            "the witness g applies for powers i >= 3, got {i}"
        )));
    }
    let mut coords = vec![0u32; n + 2];
    for pos in 2..=n - 2 {
        coords[pos - 1] = 1;
    }
    for pos in n - 1..=n + 1 {
        coords[pos - 1] = i - 1;
    }
    coords[n + 1] = 1;
    Ok(ExponentVector::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn l_n_generator_counts() {
        // cycle edge count n, plus the minimal-cover count of C_n
        assert_eq!(build_l_n(3).unwrap().ideal.num_gens(), 6);
        assert_eq!(build_l_n(4).unwrap().ideal.num_gens(), 6);
        assert_eq!(build_l_n(5).unwrap().ideal.num_gens(), 10);
        assert_eq!(build_l_n(6).unwrap().ideal.num_gens(), 11);
        assert_eq!(build_l_n(7).unwrap().ideal.num_gens(), 14);
    }

    #[test]
    fn l_5_contains_the_expected_cover_generator() {
        let l5 = build_l_n(5).unwrap().ideal;
        assert_eq!(l5.dim(), 7);
        assert!(l5.gens().contains(&ev(&[0, 1, 0, 1, 1, 0, 1])));
        assert!(l5.gens().contains(&ev(&[1, 1, 0, 0, 0, 1, 0])));
        assert!(l5.is_squarefree());
        let deg3 = l5.gens().iter().filter(|g| g.total_degree() == 3).count();
        let deg4 = l5.gens().iter().filter(|g| g.total_degree() == 4).count();
        assert_eq!((deg3, deg4), (5, 5));
    }

    #[test]
    fn l_4_has_the_two_diagonal_covers() {
        let l4 = build_l_n(4).unwrap().ideal;
        assert_eq!(l4.dim(), 6);
        assert!(l4.gens().contains(&ev(&[1, 0, 1, 0, 0, 1])));
        assert!(l4.gens().contains(&ev(&[0, 1, 0, 1, 0, 1])));
    }

    #[test]
    fn t_matches_its_seven_generators() {
        let t = build_t();
        assert_eq!(t.ideal.dim(), 7);
        assert_eq!(t.ideal.num_gens(), 7);
        assert!(t.ideal.is_squarefree());
    }

    #[test]
    fn q_is_two_disjoint_blocks() {
        let q = build_q();
        assert_eq!(q.ideal.dim(), 10);
        assert_eq!(q.ideal.num_gens(), 10);
        assert!(q.ideal.is_squarefree());
        let (x_block, y_block): (Vec<_>, Vec<_>) = q
            .ideal
            .gens()
            .iter()
            .partition(|g| g.support().iter().all(|&v| v <= 5));
        assert_eq!(x_block.len(), 5);
        assert!(y_block
            .iter()
            .all(|g| g.support().iter().all(|&v| v > 5)));
    }

    #[test]
    fn i_plus_vh_builds_and_rejects() {
        let j5 = graph::cycle(5)
            .unwrap()
            .cover_ideal()
            .unwrap()
            .extended(7)
            .unwrap();
        let v = ExponentVector::variable(7, 6).unwrap();
        let h = ExponentVector::variable(7, 7).unwrap();
        let built = build_i_plus_vh(&j5, &v, &h).unwrap();
        assert_eq!(built.ideal.num_gens(), 6);
        // overlapping support refused, naming the generator
        let bad_v = ExponentVector::variable(7, 1).unwrap();
        let err = build_i_plus_vh(&j5, &bad_v, &h).unwrap_err();
        assert!(matches!(err, Error::Hypothesis { .. }));
        assert!(err.to_string().contains("x1"));
        // non-square-free v refused
        let sq = ev(&[0, 0, 0, 0, 0, 2, 0]);
        assert!(matches!(
            build_i_plus_vh(&j5, &sq, &h),
            Err(Error::NotSquareFree { .. })
        ));
    }

    #[test]
    fn ji_plus_h_builds_and_rejects() {
        let i5 = graph::cycle(5)
            .unwrap()
            .edge_ideal()
            .unwrap()
            .extended(6)
            .unwrap();
        let j = MonomialIdeal::principal(ExponentVector::variable(6, 6).unwrap());
        let h = ev(&[1, 1, 0, 0, 0, 0]);
        // x6*h is absorbed by h itself during minimalization
        let built = build_ji_plus_h(&i5, &j, &h).unwrap();
        assert_eq!(built.ideal.num_gens(), 5);
        assert!(built.ideal.gens().contains(&h));
        let outside = ev(&[1, 0, 0, 0, 0, 0]);
        assert!(matches!(
            build_ji_plus_h(&i5, &j, &outside),
            Err(Error::Hypothesis { .. })
        ));
    }

    #[test]
    fn corner_agrees_with_leaf_addition() {
        let c5 = graph::cycle(5).unwrap();
        let corner = build_corner(&c5.cover_ideal().unwrap(), 1).unwrap();
        let leafed = c5.add_leaf("5", "6").unwrap().cover_ideal().unwrap();
        assert_eq!(corner.ideal, leafed);
    }

    #[test]
    fn corner_handles_no_generator_on_the_pivot_variable() {
        // no generator divisible by the last variable: colon is the ideal
        // itself and L = I ∩ (x2, x3)
        let i = MonomialIdeal::minimalize(2, vec![ev(&[1, 0])]).unwrap();
        let corner = build_corner(&i, 1).unwrap();
        let expected = MonomialIdeal::minimalize(3, vec![ev(&[1, 1, 0]), ev(&[1, 0, 1])]).unwrap();
        assert_eq!(corner.ideal, expected);
    }

    #[test]
    fn corner_rejects_non_squarefree_input() {
        let i = MonomialIdeal::minimalize(2, vec![ev(&[2, 0])]).unwrap();
        assert!(matches!(
            build_corner(&i, 1),
            Err(Error::NotSquareFree { .. })
        ));
    }

    #[test]
    fn kss_deleted_cover_satisfies_the_decomposition() {
        let built = build_kss_deleted_cover().unwrap();
        assert_eq!(built.ideal.dim(), 12);
        assert!(built.ideal.is_squarefree());
    }

    #[test]
    fn witness_vectors_are_the_literal_exponents() {
        assert_eq!(witness_f(5).unwrap(), ev(&[1, 1, 1, 1, 1, 1, 1]));
        assert_eq!(witness_h(4, 3).unwrap(), ev(&[1, 2, 1, 2, 1, 2]));
        assert_eq!(witness_h(6, 3).unwrap(), ev(&[1, 2, 1, 2, 1, 2, 1, 2]));
        assert_eq!(
            witness_g(7, 3).unwrap(),
            ev(&[0, 1, 1, 1, 1, 2, 2, 2, 1])
        );
        assert!(witness_f(3).is_err());
        assert!(witness_h(5, 3).is_err());
        assert!(witness_h(4, 2).is_err());
        assert!(witness_g(5, 3).is_err());
    }
}
