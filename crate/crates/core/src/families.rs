//! Infinite families of exact join graphs, with certification.
//!
//! Each constructor checks its family's hypothesis before building the graph
//! and records what the family predicts. [`certify_family`] computes the
//! exact maximum cut and all three spectra and fails loudly if any
//! prediction does not hold. The `fixture_*` builders skip validation; they
//! produce the known counterexamples used as negative regression cases.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactness::{exclusivity_check, ExclusivityReport, Kind};
use crate::generate;
use crate::graph::{join, regularity, Graph};
use crate::Options;

/// Largest family member certified by default; keeps enumeration fast.
pub const FAMILY_MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// `K_2 ∇ tK_2` for `t >= 2`.
    K2JoinTk2,
    /// `H_1 ∇ H_2` with equal orders.
    SameOrderJoin,
    /// `H_1 ∇ H_2`, both `r`-regular, `min(n_1, n_2) >= 2r`.
    RegularJoin,
    /// `H_1 ∇ H_2`, `r_i`-regular, `n_1 - r_2 = n_2 - r_1 > max(r_1, r_2)`.
    AExactJoin,
    /// `H ∇ (n + r)K_1` for an `r`-regular `H` on `n` vertices.
    HJoinIndependent,
    /// A hand-built graph with stated expectations and no hypothesis.
    Fixture,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::K2JoinTk2,
        Family::SameOrderJoin,
        Family::RegularJoin,
        Family::AExactJoin,
        Family::HJoinIndependent,
        Family::Fixture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K2JoinTk2 => "k2_join_tk2",
            Family::SameOrderJoin => "same_order_join",
            Family::RegularJoin => "regular_join",
            Family::AExactJoin => "a_exact_join",
            Family::HJoinIndependent => "h_join_independent",
            Family::Fixture => "fixture",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Accepts the snake-case name, with `-` for `_`, plus `k2-tk2`.
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        if key == "k2_tk2" {
            return Ok(Family::K2JoinTk2);
        }
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::Hypothesis(format!("unknown family {s:?}")))
    }
}

/// Extreme eigenvalue a family member is predicted to have.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PredictedEigenvalue {
    pub kind: Kind,
    pub value: f64,
}

/// Parameters of a family member and what the family predicts about it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub label: String,
    pub t: Option<usize>,
    /// Orders `(n_1, n_2)` of the joined components.
    pub orders: (usize, usize),
    /// Degrees `(r_1, r_2)` when both components are regular.
    pub regularities: Option<(f64, f64)>,
    pub predicted_exact: Vec<Kind>,
    /// Kinds that must be clearly not exact.
    pub predicted_not_exact: Vec<Kind>,
    pub predicted_eigenvalue: Option<PredictedEigenvalue>,
}

impl FamilySpec {
    pub fn order(&self) -> usize {
        self.orders.0 + self.orders.1
    }
}

/// Certificates of a family member with its spec.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyReport {
    pub spec: FamilySpec,
    pub exactness: ExclusivityReport,
}

fn hypothesis(clause: &str, detail: String) -> Error {
    Error::Hypothesis(format!("{clause} ({detail})"))
}

fn unit_weights(h: &Graph) -> Result<()> {
    if h.has_unit_weights() {
        Ok(())
    } else {
        Err(Error::NonUnitWeights)
    }
}

fn regular(h: &Graph, which: &str) -> Result<f64> {
    unit_weights(h)?;
    regularity(h).ok_or_else(|| {
        hypothesis(
            "components must be regular",
            format!("{which} is not regular"),
        )
    })
}

fn spec(
    family: Family,
    label: String,
    orders: (usize, usize),
    regularities: Option<(f64, f64)>,
    predicted_exact: Vec<Kind>,
    predicted_eigenvalue: Option<PredictedEigenvalue>,
) -> FamilySpec {
    FamilySpec {
        family,
        label,
        t: None,
        orders,
        regularities,
        predicted_exact,
        predicted_not_exact: Vec::new(),
        predicted_eigenvalue,
    }
}

/// `K_2 ∇ tK_2`: `Q`-exact with `q_n = 2` and neither `L`- nor `A`-exact.
pub fn make_k2_join_tk2(t: usize) -> Result<(Graph, FamilySpec)> {
    if t < 2 {
        return Err(hypothesis("t > 1", format!("t = {t}")));
    }
    let g = join(&generate::complete(2)?, &generate::matching(t)?);
    let mut s = spec(
        Family::K2JoinTk2,
        format!("K2 join {t}K2"),
        (2, 2 * t),
        None,
        vec![Kind::Q],
        Some(PredictedEigenvalue {
            kind: Kind::Q,
            value: 2.0,
        }),
    );
    s.t = Some(t);
    s.predicted_not_exact = vec![Kind::A, Kind::L];
    Ok((g, s))
}

/// `H_1 ∇ H_2` on equal orders `n`: `L`-exact with `μ_1 = 2n`.
pub fn make_same_order_join(h1: &Graph, h2: &Graph) -> Result<(Graph, FamilySpec)> {
    unit_weights(h1)?;
    unit_weights(h2)?;
    if h1.n() != h2.n() {
        return Err(hypothesis(
            "|V(H1)| = |V(H2)|",
            format!("{} != {}", h1.n(), h2.n()),
        ));
    }
    let n = h1.n();
    let s = spec(
        Family::SameOrderJoin,
        format!("same-order join of two graphs on {n} vertices"),
        (n, n),
        None,
        vec![Kind::L],
        Some(PredictedEigenvalue {
            kind: Kind::L,
            value: 2.0 * n as f64,
        }),
    );
    Ok((join(h1, h2), s))
}

/// `H_1 ∇ H_2`, both `r`-regular with `min(n_1, n_2) >= 2r`: `Q`-exact with
/// `q_n = 2r`.
pub fn make_regular_join(h1: &Graph, h2: &Graph) -> Result<(Graph, FamilySpec)> {
    let r1 = regular(h1, "H1")?;
    let r2 = regular(h2, "H2")?;
    if r1 != r2 {
        return Err(hypothesis(
            "H1 and H2 are r-regular for the same r",
            format!("{r1} != {r2}"),
        ));
    }
    let smaller = h1.n().min(h2.n());
    if (smaller as f64) < 2.0 * r1 {
        return Err(hypothesis(
            "min{n1, n2} >= 2r",
            format!("min = {smaller}, 2r = {}", 2.0 * r1),
        ));
    }
    let s = spec(
        Family::RegularJoin,
        format!(
            "join of {r1}-regular graphs on {} and {} vertices",
            h1.n(),
            h2.n()
        ),
        (h1.n(), h2.n()),
        Some((r1, r2)),
        vec![Kind::Q],
        Some(PredictedEigenvalue {
            kind: Kind::Q,
            value: 2.0 * r1,
        }),
    );
    Ok((join(h1, h2), s))
}

/// `H_1 ∇ H_2`, `r_i`-regular with `n_1 - r_2 = n_2 - r_1 > max(r_1, r_2)`:
/// `A`-exact with `λ_n = r_1 - n_2`.
pub fn make_a_exact_join(h1: &Graph, h2: &Graph) -> Result<(Graph, FamilySpec)> {
    let r1 = regular(h1, "H1")?;
    let r2 = regular(h2, "H2")?;
    let (n1, n2) = (h1.n() as f64, h2.n() as f64);
    let (left, right) = (n1 - r2, n2 - r1);
    if left != right || left <= r1.max(r2) {
        return Err(hypothesis(
            "n1 - r2 = n2 - r1 > max{r1, r2}",
            format!("n1 - r2 = {left}, n2 - r1 = {right}, max = {}", r1.max(r2)),
        ));
    }
    let s = spec(
        Family::AExactJoin,
        format!("join of {r1}- and {r2}-regular graphs on {n1} and {n2} vertices"),
        (h1.n(), h2.n()),
        Some((r1, r2)),
        vec![Kind::A],
        Some(PredictedEigenvalue {
            kind: Kind::A,
            value: r1 - n2,
        }),
    );
    Ok((join(h1, h2), s))
}

/// `H ∇ (n + r)K_1` for an `r`-regular `H` on `n` vertices: `A`-exact with
/// `λ_n = -n`.
pub fn make_h_join_independent(h: &Graph) -> Result<(Graph, FamilySpec)> {
    let r = regular(h, "H")?;
    let isolated = generate::empty(h.n() + r as usize)?;
    let (g, mut s) = make_a_exact_join(h, &isolated)?;
    s.family = Family::HJoinIndependent;
    s.label = format!(
        "{r}-regular graph on {} vertices join {}K1",
        h.n(),
        isolated.n()
    );
    Ok((g, s))
}

fn fixture(
    label: &str,
    g: &Graph,
    orders: (usize, usize),
    exact: Vec<Kind>,
    not_exact: Vec<Kind>,
) -> FamilySpec {
    debug_assert_eq!(g.n(), orders.0 + orders.1);
    FamilySpec {
        family: Family::Fixture,
        label: label.to_string(),
        t: None,
        orders,
        regularities: None,
        predicted_exact: exact,
        predicted_not_exact: not_exact,
        predicted_eigenvalue: None,
    }
}

/// `K_{3,3} ∇ K_4`: a join of 3-regular graphs that is not `Q`-exact.
pub fn fixture_k33_join_k4() -> (Graph, FamilySpec) {
    let g = join(
        &generate::complete_bipartite(3, 3).expect("valid sizes"),
        &generate::complete(4).expect("valid size"),
    );
    let s = fixture("K33 join K4", &g, (6, 4), Vec::new(), vec![Kind::Q]);
    (g, s)
}

/// `C_3 ∇ C_n` for `n >= 4`: not `Q`-exact.
pub fn fixture_c3_join_cycle(n: usize) -> Result<(Graph, FamilySpec)> {
    if n < 4 {
        return Err(hypothesis("n >= 4", format!("n = {n}")));
    }
    let g = join(&generate::cycle(3)?, &generate::cycle(n)?);
    let s = fixture(
        &format!("C3 join C{n}"),
        &g,
        (3, n),
        Vec::new(),
        vec![Kind::Q],
    );
    Ok((g, s))
}

/// `K_6` built as `C_3 ∇ C_3`: `Q`-exact although `2r > 3`.
pub fn fixture_c3_join_c3() -> (Graph, FamilySpec) {
    let c3 = generate::cycle(3).expect("valid size");
    let g = join(&c3, &c3);
    let s = fixture("C3 join C3", &g, (3, 3), vec![Kind::Q], Vec::new());
    (g, s)
}

/// Certifies all three kinds on `g` and checks every prediction of `spec`.
///
/// Fails with [`Error::PredictionViolated`] on any mismatch; a "not exact"
/// prediction also needs the residual to clear the strictness margin.
/// Enumeration is capped by `opts.max_n`; see [`family_options`].
pub fn certify_family(spec: &FamilySpec, g: &Graph, opts: &Options) -> Result<FamilyReport> {
    if g.n() != spec.order() {
        return Err(Error::DimensionMismatch {
            expected: spec.order(),
            found: g.n(),
        });
    }
    let exactness = exclusivity_check(g, opts)?;
    let violated = |what: String| Error::PredictionViolated(format!("{}: {what}", spec.label));
    for &kind in &spec.predicted_exact {
        let c = exactness.certificate(kind);
        if !c.is_exact {
            return Err(violated(format!(
                "expected {kind}-exact, {} = {} vs bound {}",
                kind.eigenvalue_name(),
                c.eigenvalue_used,
                c.bound_value
            )));
        }
    }
    for &kind in &spec.predicted_not_exact {
        let c = exactness.certificate(kind);
        if c.is_exact || !c.clearly_inexact() {
            return Err(violated(format!(
                "expected not {kind}-exact, residual {} with tolerance {}",
                c.residual, c.tolerance
            )));
        }
    }
    if let Some(p) = spec.predicted_eigenvalue {
        let c = exactness.certificate(p.kind);
        if (c.eigenvalue_used - p.value).abs() > c.tolerance {
            return Err(violated(format!(
                "expected {} = {}, found {}",
                p.kind.eigenvalue_name(),
                p.value,
                c.eigenvalue_used
            )));
        }
    }
    Ok(FamilyReport {
        spec: spec.clone(),
        exactness,
    })
}

/// Default options for family certification, capped at [`FAMILY_MAX_N`].
pub fn family_options() -> Options {
    Options::default().with_max_n(FAMILY_MAX_N)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{graph_spectrum, join_char_poly_roots, multiset_distance};
    use crate::MatrixKind;

    fn certify(built: (Graph, FamilySpec)) -> FamilyReport {
        certify_family(&built.1, &built.0, &family_options()).unwrap()
    }

    #[test]
    fn k2_join_tk2_members() {
        let (g, s) = make_k2_join_tk2(2).unwrap();
        assert_eq!((g.n(), g.m()), (6, 11));
        assert_eq!(s.t, Some(2));
        for t in [2, 3, 5] {
            let report = certify(make_k2_join_tk2(t).unwrap());
            assert_eq!(report.exactness.exact_kinds, vec![Kind::Q]);
            assert!(report.exactness.regular.is_none());
            assert_eq!(report.spec.order(), 2 * t + 2);
        }
        assert!(matches!(make_k2_join_tk2(1), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn same_order_joins_are_l_exact() {
        let cases = [
            (generate::empty(2).unwrap(), generate::empty(2).unwrap()),
            (generate::path(3).unwrap(), generate::complete(3).unwrap()),
            (generate::cycle(4).unwrap(), generate::empty(4).unwrap()),
        ];
        for (h1, h2) in cases {
            let report = certify(make_same_order_join(&h1, &h2).unwrap());
            let l = report.exactness.certificate(Kind::L);
            assert!((l.eigenvalue_used - 2.0 * h1.n() as f64).abs() < 1e-9);
        }
        let c5 = generate::cycle(5).unwrap();
        let report = certify(make_same_order_join(&c5, &c5).unwrap());
        assert_eq!(report.exactness.exact_kinds, Kind::ALL.to_vec());
        let mismatch = make_same_order_join(&c5, &generate::cycle(4).unwrap());
        assert!(matches!(mismatch, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn regular_joins() {
        let report = certify(
            make_regular_join(&generate::cycle(4).unwrap(), &generate::cycle(6).unwrap()).unwrap(),
        );
        assert!(report.exactness.certificate(Kind::Q).is_exact);
        let err = make_regular_join(&generate::cycle(3).unwrap(), &generate::cycle(5).unwrap())
            .unwrap_err();
        assert!(err.to_string().contains("min{n1, n2} >= 2r"));
        let mixed = make_regular_join(
            &generate::cycle(4).unwrap(),
            &generate::complete(4).unwrap(),
        );
        assert!(matches!(mixed, Err(Error::Hypothesis(_))));
        let irregular =
            make_regular_join(&generate::path(4).unwrap(), &generate::cycle(4).unwrap());
        assert!(matches!(irregular, Err(Error::Hypothesis(_))));
    }

    #[test]
    fn a_exact_joins() {
        let c4 = generate::cycle(4).unwrap();
        let report = certify(make_a_exact_join(&c4, &generate::empty(6).unwrap()).unwrap());
        let a = report.exactness.certificate(Kind::A);
        assert!(a.is_exact && (a.eigenvalue_used + 4.0).abs() < 1e-7);

        let c5 = generate::cycle(5).unwrap();
        let (g, s) = make_a_exact_join(&c5, &c5).unwrap();
        assert_eq!(s.predicted_eigenvalue.unwrap().value, -3.0);
        certify_family(&s, &g, &family_options()).unwrap();
        let direct = graph_spectrum(&g, MatrixKind::Adjacency).unwrap();
        let predicted = join_char_poly_roots(&c5, &c5).unwrap();
        assert!(multiset_distance(&direct.values, &predicted).unwrap() < 1e-9);

        let k4 = generate::complete(4).unwrap();
        assert!(matches!(
            make_a_exact_join(&k4, &k4),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn h_join_independent_set() {
        let (g, s) = make_h_join_independent(&generate::cycle(4).unwrap()).unwrap();
        assert_eq!(g.n(), 10);
        assert_eq!(s.family, Family::HJoinIndependent);
        assert_eq!(s.predicted_eigenvalue.unwrap().value, -4.0);
        certify_family(&s, &g, &family_options()).unwrap();
        let report = certify(make_h_join_independent(&generate::complete(3).unwrap()).unwrap());
        assert_eq!(report.spec.orders, (3, 5));
        assert!((report.exactness.certificate(Kind::A).eigenvalue_used + 3.0).abs() < 1e-7);
    }

    #[test]
    fn negative_fixtures() {
        let report = certify(fixture_k33_join_k4());
        assert!(report.exactness.certificate(Kind::Q).clearly_inexact());
        for n in 4..=6 {
            certify(fixture_c3_join_cycle(n).unwrap());
        }
        assert!(fixture_c3_join_cycle(3).is_err());
        certify(fixture_c3_join_c3());
    }

    #[test]
    fn violated_prediction_is_reported() {
        let (g, mut s) = make_k2_join_tk2(2).unwrap();
        s.predicted_exact = vec![Kind::L];
        assert!(matches!(
            certify_family(&s, &g, &family_options()),
            Err(Error::PredictionViolated(_))
        ));
        let (_, s) = make_k2_join_tk2(3).unwrap();
        assert!(matches!(
            certify_family(&s, &g, &family_options()),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn size_cap_applies() {
        let (g, s) = make_k2_join_tk2(10).unwrap();
        assert!(matches!(
            certify_family(&s, &g, &family_options()),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn family_names_parse() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert_eq!("k2-tk2".parse::<Family>().unwrap(), Family::K2JoinTk2);
        assert!("wheel".parse::<Family>().is_err());
    }
}
