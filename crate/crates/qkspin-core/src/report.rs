//! Structured verification records.
//!
//! Every check emits one or more [`CheckRow`]s. A row's `paper_anchor` names
//! the mathematical identity it certifies (as a formula string), or is the
//! literal `"plumbing"` for checks of artifact machinery. The process exit
//! status is 0 exactly when no row has status `fail`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Vacuous,
    Informational,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRow {
    pub suite: String,
    pub check_id: String,
    pub paper_anchor: String,
    pub m: Option<i64>,
    pub r: Option<i64>,
    pub expected: String,
    pub measured: String,
    pub abs_residual: f64,
    pub tolerance: f64,
    pub status: Status,
}

impl CheckRow {
    /// Pass/fail from a residual against a tolerance.
    #[allow(clippy::too_many_arguments)]
    pub fn from_residual(
        suite: &str,
        check_id: &str,
        anchor: &str,
        m: Option<i64>,
        r: Option<i64>,
        expected: impl ToString,
        measured: impl ToString,
        residual: f64,
        tol: f64,
    ) -> Self {
        CheckRow {
            suite: suite.into(),
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            m,
            r,
            expected: expected.to_string(),
            measured: measured.to_string(),
            abs_residual: residual,
            tolerance: tol,
            status: if residual.is_finite() && residual <= tol { Status::Pass } else { Status::Fail },
        }
    }

    /// Exact (integer or rational) check: residual 0 on success.
    #[allow(clippy::too_many_arguments)]
    pub fn exact(
        suite: &str,
        check_id: &str,
        anchor: &str,
        m: Option<i64>,
        r: Option<i64>,
        expected: impl ToString,
        measured: impl ToString,
        ok: bool,
    ) -> Self {
        CheckRow {
            suite: suite.into(),
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            m,
            r,
            expected: expected.to_string(),
            measured: measured.to_string(),
            abs_residual: if ok { 0.0 } else { 1.0 },
            tolerance: 0.0,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    #[allow(clippy::too_many_arguments)]
    pub fn info(
        suite: &str,
        check_id: &str,
        anchor: &str,
        m: Option<i64>,
        r: Option<i64>,
        expected: impl ToString,
        measured: impl ToString,
    ) -> Self {
        CheckRow {
            suite: suite.into(),
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            m,
            r,
            expected: expected.to_string(),
            measured: measured.to_string(),
            abs_residual: 0.0,
            tolerance: 0.0,
            status: Status::Informational,
        }
    }

    pub fn vacuous(suite: &str, check_id: &str, anchor: &str, m: Option<i64>, note: &str) -> Self {
        CheckRow {
            suite: suite.into(),
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            m,
            r: None,
            expected: "nonempty domain".into(),
            measured: format!("VACUOUS: {note}"),
            abs_residual: 0.0,
            tolerance: 0.0,
            status: Status::Vacuous,
        }
    }
}

/// Identity anchors. Each names a formula being certified; checks of invented
/// machinery use [`PLUMBING`].
pub mod anchors {
    pub const PLUMBING: &str = "plumbing";

    // Clifford module.
    pub const CLIFFORD_RELATION: &str = "g_i g_j + g_j g_i = -2 delta_ij Id";
    pub const CLIFFORD_ACTION: &str = "vector Clifford action v. with v.v. = -|v|^2";

    // Quaternionic structure and the fundamental 4-form.
    pub const QUAT_RELATIONS: &str = "J_a J_b = -delta_ab Id + eps_abc J_c";
    pub const CONNECTION_FORMS: &str = "nabla J_a = sum_b w_a^b J_b (w = 0 in a constant frame)";
    pub const FOUR_FORM_SUM: &str = "Omega = sum_a Omega_a . Omega_a + 6m Id";
    pub const FOUR_FORM_EIGENVALUES: &str = "mu_r = 6m - 4r(r+2), S = sum_r S_r";

    // Six-component decomposition of Q x S_r.
    pub const SIX_COMPONENT_SPLIT: &str =
        "Q x S_r = W_{r+1,rbar} + W_{r-1,rbar} + W_{r+1,r-1} + W_{r-1,r+1} + W_{r-1,r-1} + W_{r+1,r+1}";
    pub const WEIGHT_DIMENSIONS: &str =
        "dim W_{r,s} from weight (r; 1..1,0^s), dim W_{r,sbar} from (r; 2,1..1,0^s)";
    pub const ISOMORPHISM_ONTO_S: &str = "m_r: W_{r-+1,r-+1} -> S_{r-+1} is an isomorphism";
    pub const KER_M: &str = "Ker m_r = W_{r+1,rbar} + W_{r-1,rbar} + W_{r+1,r-1} + W_{r-1,r+1}";
    pub const KER_MTILDE: &str = "Ker mtilde_r = W_{r+1,rbar} + W_{r-1,rbar}";
    pub const MTILDE_DEF: &str = "mtilde(X x Psi) = sum_a J_a x (J_a(X) . Psi)";

    // Schur constants.
    pub const SCHUR_M_MINUS: &str = "|m_r w|^2 = 2(r+1)(m-r+1)/r |w|^2 on W_{r-1,r-1}";
    pub const SCHUR_M_PLUS: &str = "|m_r w|^2 = 2(r+1)(m+r+3)/(r+2) |w|^2 on W_{r+1,r+1}";
    pub const SCHUR_MT_CROSS_MINUS: &str = "|mtilde_r w|^2 = 4(m-r+1) |w|^2 on W_{r+1,r-1}";
    pub const SCHUR_MT_CROSS_PLUS: &str = "|mtilde_r w|^2 = 4(m+r+3) |w|^2 on W_{r-1,r+1}";
    pub const SCHUR_MT_MINUS: &str = "|mtilde_r w|^2 = 2(r-1)(m-r+1)/r |w|^2 on W_{r-1,r-1}";
    pub const SCHUR_MT_PLUS: &str = "|mtilde_r w|^2 = 2(r+3)(m+r+3)/(r+2) |w|^2 on W_{r+1,r+1}";

    // Norm decomposition of a covariant derivative.
    pub const NABLA_SPLIT: &str = "w = w_{r+1,rbar} + w_{r-1,rbar} + w_{r+1,r-1} + w_{r-1,r+1} + w_{r-1,r-1} + w_{r+1,r+1}";
    pub const NORM_IDENTITY_I: &str = "|w_{r-1,r-1}|^2 = r/(2(r+1)(m-r+1)) |D-|^2";
    pub const NORM_IDENTITY_II: &str = "|w_{r+1,r+1}|^2 = (r+2)/(2(r+1)(m+r+3)) |D+|^2";
    pub const NORM_IDENTITY_III: &str =
        "sum_a |D_a|^2 = 4(m-r+1)|w_{r+1,r-1}|^2 + 4(m+r+3)|w_{r-1,r+1}|^2 + (r+3)/(r+1)|D+|^2 + (r-1)/(r+1)|D-|^2";
    pub const NORM_IDENTITY_IV: &str =
        "|w|^2 = |w_{r+1,rbar}|^2 + |w_{r-1,rbar}|^2 + 2(r+1)/(m+r+3)|w_{r+1,r-1}|^2 + (sum_a |D_a|^2 + |D+|^2)/(4(m+r+3)) + (m+3r+1)/(4(m-r+1)(m+r+3))|D-|^2";

    // Bound coefficients and the final estimate.
    pub const COEFFICIENTS_ABC: &str =
        "a_r = 3/(4(m+r+4)), b_r = (r+1)(r+3)/(4m(m+2)(m+r+4)), c_r = (m+3r+4)/(4(m-r)(m+r+4))";
    pub const LICHNEROWICZ: &str = "D_b^2 = nabla* nabla + (1/4) sigma (minimal case)";
    pub const INTEGRAL_DALPHA: &str =
        "int sum_a |D_a Psi|^2 = 3 int (D_b^2 Psi, Psi) + sigma/(4m(m+2)) int ((Omega - 6m) Psi, Psi)";
    pub const EIGENSPINOR_TYPE: &str = "type (r,r+1): D- Psi_{r+1} = lambda Psi_r, D+ Psi_{r+1} = 0";
    pub const EQUAL_NORMS: &str = "|Psi_r| = |Psi_{r+1}| in L^2";
    pub const BOUND_DISPLAY: &str =
        "0 <= |nabla Psi_{r+1}|^2 - a_r lambda^2 |Psi_{r+1}|^2 + b_r sigma |Psi_{r+1}|^2 - c_r lambda^2 |Psi_r|^2";
    pub const EIGENVALUE_BOUND: &str = "lambda^2 >= (m+3)/(4(m+2)) sigma";
    pub const EQUALITY_R0: &str = "equality only at r = 0: (m+3)(m^2+3m-1) = m(m+2)(m+4) - 3";

    // Limiting case.
    pub const LIMIT_NORMS: &str =
        "|nabla Psi_0|^2 = |D_b Psi_0|^2/(m+3); |nabla Psi_1|^2 = |D_b Psi_1|^2/(4m) + sum_a |D_a Psi_1|^2/(4(m+4))";
    pub const CONSTRAINTS_889: &str =
        "sum_a Omega_a . v_a = 0 and sum_bc eps_abc Omega_b . v_c = 8 v_a";
    pub const KILLING_EQUATIONS: &str =
        "nabla_X Psi_0 = -lambda/(m+3) p_1(X).Psi_1; nabla_X Psi_1 = -lambda/(4m) X.Psi_0 - sum_a J_a(X).D_a Psi_1/(4(m+4))";
    pub const P1_JAY_DEF: &str = "p_1(X) = (5X + J(X))/8, J(X) = [Omega, X]/4";
    pub const JAY_SYMMETRIC: &str = "(J(X).phi, psi) = (phi, J(X).psi)";
    pub const TWISTOR_DEF: &str = "P0(w)_i = w_i + p_1(e_i).m_0(w)/(m+3)";
    pub const TWISTOR_KERNEL: &str = "sum_i e_i . P0(w)_i = 0 (image in Ker m_0)";
    pub const TWISTOR_JAY_SUM: &str = "sum_i J(e_i) . P0(w)_i = 0";
    pub const TWISTOR_NORM: &str = "|P0 w|^2 = |w|^2 - |m_0 w|^2/(m+3)";
    pub const EQ20_QUADRATIC: &str = "sum_i |sum_a J_a(e_i) . v_a|^2 = 4(m+4) sum_a |v_a|^2";
}

/// One catalog entry per check family, for `list-checks` and coverage audits.
#[derive(Debug, Clone, Serialize)]
pub struct CheckDescriptor {
    pub suite: &'static str,
    pub check_id: &'static str,
    pub paper_anchor: &'static str,
    pub summary: &'static str,
}

/// Every check family the suites can emit, in execution order.
pub fn catalog() -> Vec<CheckDescriptor> {
    use anchors::*;
    let d = |suite, check_id, paper_anchor, summary| CheckDescriptor { suite, check_id, paper_anchor, summary };
    alloc::vec![
        d("clifford", "clifford.anticommutation", CLIFFORD_RELATION, "generator relations, exact integer arithmetic"),
        d("clifford", "clifford.skew_hermitian", CLIFFORD_ACTION, "generators skew-Hermitian, exact"),
        d("clifford", "clifford.unitary", CLIFFORD_ACTION, "generators unitary, exact"),
        d("clifford", "clifford.trace_orthogonality", CLIFFORD_RELATION, "trace(g_i g_j) = -dim delta_ij, exact"),
        d("clifford", "clifford.vector_square", CLIFFORD_ACTION, "v.v. = -|v|^2 on random vectors"),
        d("clifford", "clifford.vector_isometry", CLIFFORD_ACTION, "(v.phi, v.psi) = |v|^2 (phi, psi)"),
        d("clifford", "clifford.two_form_skew", PLUMBING, "2-form actions are skew-Hermitian"),
        d("clifford", "clifford.two_form_linear", PLUMBING, "2-form action is linear in F"),
        d("qk", "qk.quaternion_relations", QUAT_RELATIONS, "all nine products J_a J_b, exact integer arithmetic"),
        d("qk", "qk.j_metric_compatible", QUAT_RELATIONS, "each J_a orthogonal and skew, exact"),
        d("qk", "qk.connection_forms", CONNECTION_FORMS, "constant frame: connection 1-forms vanish identically"),
        d("qk", "qk.four_form_wedge_route", FOUR_FORM_SUM, "4-form wedge action equals sum of squared 2-form actions + 6m, exact"),
        d("qk", "qk.omega_hermitian", PLUMBING, "Omega is Hermitian"),
        d("qk", "qk.omega_spectrum", FOUR_FORM_EIGENVALUES, "spectrum of Omega equals {mu_r}"),
        d("qk", "qk.spectrum_multiplicities", FOUR_FORM_EIGENVALUES, "multiplicities match Weyl dimensions and sum to 2^{2m}"),
        d("qk", "qk.projector_resolution", FOUR_FORM_EIGENVALUES, "sum_r P_r = Id"),
        d("qk", "qk.projector_orthogonality", FOUR_FORM_EIGENVALUES, "P_r P_s = delta_rs P_r, P_r Hermitian"),
        d("qk", "qk.projector_eigen_relation", FOUR_FORM_EIGENVALUES, "Omega P_r = mu_r P_r"),
        d("qk", "qk.projector_ranks", FOUR_FORM_EIGENVALUES, "trace P_r = dim S_r from the Weyl formula"),
        d("qk", "qk.omega_commutes_omega_alpha", FOUR_FORM_SUM, "[Omega, Omega_a.] = 0"),
        d("weyl", "weyl.defining_rep", WEIGHT_DIMENSIONS, "weight (1,0,...) gives the defining dimension 2m"),
        d("weyl", "weyl.trivial_rep", WEIGHT_DIMENSIONS, "zero weight gives dimension 1"),
        d("weyl", "weyl.qc_dimension", WEIGHT_DIMENSIONS, "Q as (1; 1,0,..): dimension 4m"),
        d("weyl", "weyl.sr_dimensions", WEIGHT_DIMENSIONS, "S_r weights reproduce projector ranks, summing to 2^{2m}"),
        d("weyl", "weyl.absent_labels", WEIGHT_DIMENSIONS, "out-of-range labels report dimension 0"),
        d("decomp", "decomp.mr_definition", PLUMBING, "m_r(e_1 x psi) = g_1 psi"),
        d("decomp", "decomp.mr_image_adjacency", SIX_COMPONENT_SPLIT, "image of m_r lies in S_{r-1} + S_{r+1}"),
        d("decomp", "decomp.mtilde_blocks", MTILDE_DEF, "block a of mtilde_r is w -> J_a(X).Psi; norms add over blocks"),
        d("decomp", "decomp.lift_commutator", PLUMBING, "[lift(A), v.] = (Av)."),
        d("decomp", "decomp.casimir_commutes", PLUMBING, "diagonal sp(1) Casimir commutes with both Gram operators"),
        d("decomp", "decomp.casimir_scalars", SIX_COMPONENT_SPLIT, "Casimir scalar -s(s+2) on first label s; monotone in s"),
        d("decomp", "decomp.casimir_distinct_r0", SIX_COMPONENT_SPLIT, "at r=0 the Casimir is a single scalar -3"),
        d("decomp", "decomp.gram_commute", SIX_COMPONENT_SPLIT, "m_r* m_r and mtilde_r* mtilde_r commute"),
        d("decomp", "decomp.split_completeness", SIX_COMPONENT_SPLIT, "component dimensions sum to 4m dim S_r"),
        d("decomp", "decomp.split_dims_weyl", WEIGHT_DIMENSIONS, "every component dimension matches its Weyl dimension"),
        d("decomp", "decomp.schur_m", SCHUR_M_MINUS, "Schur scalar of m_r* m_r on each component (both labels)"),
        d("decomp", "decomp.schur_m_plus", SCHUR_M_PLUS, "Schur scalar of m_r* m_r on W_{r+1,r+1}"),
        d("decomp", "decomp.schur_mt_cross_minus", SCHUR_MT_CROSS_MINUS, "Schur scalar of mtilde on W_{r+1,r-1}"),
        d("decomp", "decomp.schur_mt_cross_plus", SCHUR_MT_CROSS_PLUS, "Schur scalar of mtilde on W_{r-1,r+1}"),
        d("decomp", "decomp.schur_mt_minus", SCHUR_MT_MINUS, "Schur scalar of mtilde on W_{r-1,r-1} (zero at r=1)"),
        d("decomp", "decomp.schur_mt_plus", SCHUR_MT_PLUS, "Schur scalar of mtilde on W_{r+1,r+1}"),
        d("decomp", "decomp.kernel_mr", KER_M, "dim ker m_r equals the four-component sum"),
        d("decomp", "decomp.kernel_mtilde", KER_MTILDE, "dim ker mtilde_r equals the two-component sum plus zero-scalar components"),
        d("decomp", "decomp.kernel_inclusion", KER_M, "numeric kernel bases lie inside the labeled projector ranges"),
        d("decomp", "decomp.isomorphism_rank", ISOMORPHISM_ONTO_S, "m_r restricted to W_{r-+1,r-+1} has full rank dim S_{r-+1}"),
        d("decomp", "decomp.twistor_components_killed", KER_M, "m_r and mtilde_r vanish on the rbar components"),
        d("decomp", "decomp.norm_identity_i", NORM_IDENTITY_I, "random-trial identity (i)"),
        d("decomp", "decomp.norm_identity_ii", NORM_IDENTITY_II, "random-trial identity (ii)"),
        d("decomp", "decomp.norm_identity_iii", NORM_IDENTITY_III, "random-trial identity (iii), self-consistent coefficient"),
        d("decomp", "decomp.norm_identity_iii_printed", NORM_IDENTITY_III, "informational: deviation of the printed (r+3)/(r+2) variant"),
        d("decomp", "decomp.norm_identity_iv", NORM_IDENTITY_IV, "random-trial identity (iv)"),
        d("decomp", "decomp.kernel_component_reduction", NABLA_SPLIT, "kernel-component w: D+, D-, D_a vanish and (iv) collapses"),
        d("limit", "limit.jay_assembly", P1_JAY_DEF, "J(e_i) = [Omega, g_i]/4 entrywise"),
        d("limit", "limit.p1_assembly", P1_JAY_DEF, "p_1(e_i) = (5 g_i + J(e_i))/8 entrywise"),
        d("limit", "limit.jay_symmetry", JAY_SYMMETRIC, "J(e_i) Hermitian; measured sign recorded"),
        d("limit", "limit.jay_adjacency", P1_JAY_DEF, "J(e_i) maps S_r into S_{r-1} + S_{r+1}"),
        d("limit", "limit.clifford_p1_identity", TWISTOR_KERNEL, "sum_i g_i p_1(e_i) = -(m+3) Id on S_1 = image of m_0"),
        d("limit", "limit.clifford_p1_scalar_s0", TWISTOR_KERNEL, "informational: the same operator is -m Id on S_0"),
        d("limit", "limit.p1_trace_s0", PLUMBING, "informational: trace of p_1(e_1) restricted to S_0"),
        d("limit", "limit.twistor_kernel", TWISTOR_KERNEL, "m_0 (P0 w) = 0"),
        d("limit", "limit.twistor_jay_sum", TWISTOR_JAY_SUM, "sum_i J(e_i) . P0(w)_i = 0"),
        d("limit", "limit.twistor_norm", TWISTOR_NORM, "norm identity for P0"),
        d("limit", "limit.twistor_idempotent", TWISTOR_DEF, "P0 is the identity on Ker m_0 and squares to itself"),
        d("limit", "limit.constraint_space", CONSTRAINTS_889, "solution space of the constraints: dimension and residuals"),
        d("limit", "limit.constraint_space_s1", CONSTRAINTS_889, "informational: restricted to S_1 triples the space is zero"),
        d("limit", "limit.eq20", EQ20_QUADRATIC, "quadratic identity on constraint-space elements"),
        d("limit", "limit.eq20_homogeneity", EQ20_QUADRATIC, "both sides scale by |c|^2"),
        d("limit", "limit.limiting_r0_coefficient", LIMIT_NORMS, "1/(m+3) emerges from identity (iv) at r=0, exact rationals"),
        d("limit", "limit.limiting_r1_coefficients", LIMIT_NORMS, "1/(4m) and 1/(4(m+4)) emerge from identity (iv) at r=1, exact rationals"),
        d("limit", "limit.limiting_witness", KILLING_EQUATIONS, "numeric witness with vanishing twistor components realizes the limiting norms"),
        d("bound", "bound.coefficients", COEFFICIENTS_ABC, "a_r, b_r, c_r spot values, exact rationals"),
        d("bound", "bound.coefficients_from_iv", BOUND_DISPLAY, "a_r, b_r, c_r reproduced from identity (iv) at grade r+1, exact"),
        d("bound", "bound.derived_ratio", BOUND_DISPLAY, "(1/4 - b_r)/(1 - a_r - c_r) spot values"),
        d("bound", "bound.symbolic_identity", EQUALITY_R0, "(m+3)(m^2+3m-1) = m(m+2)(m+4) - 3 as polynomials"),
        d("bound", "bound.equality_r0_sweep", EIGENVALUE_BOUND, "derived ratio at r=0 equals (m+3)/(4(m+2)) for all m <= M"),
        d("bound", "bound.dominance_sweep", EIGENVALUE_BOUND, "derived ratio >= (m+3)/(4(m+2)) for 1 <= r <= m-1, m <= M"),
        d("bound", "bound.denominator_positive", BOUND_DISPLAY, "1 - a_r - c_r > 0 on the whole sweep"),
        d("bound", "bound.bound_values", EIGENVALUE_BOUND, "bound spot values (m=1: 1/3, m=2: 5/16)"),
        d("bound", "bound.friedrich_remark", EIGENVALUE_BOUND, "informational: m=1 ratio equals q/(4(q-1)) at q=4"),
        d("bound", "bound.assumption_lichnerowicz", LICHNEROWICZ, "informational: assumption node A1"),
        d("bound", "bound.assumption_integral", INTEGRAL_DALPHA, "informational: assumption node A2"),
        d("bound", "bound.assumption_type", EIGENSPINOR_TYPE, "informational: assumption node A3"),
        d("bound", "bound.assumption_norms", EQUAL_NORMS, "informational: assumption node A4"),
        d("bound", "bound.limit_constants", LIMIT_NORMS, "limiting constants tie back to identity (iv), exact"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residual_row_status() {
        let ok = CheckRow::from_residual("s", "c", "a", None, None, 1, 1, 1e-12, 1e-9);
        assert_eq!(ok.status, Status::Pass);
        let bad = CheckRow::from_residual("s", "c", "a", None, None, 1, 2, 1e-3, 1e-9);
        assert_eq!(bad.status, Status::Fail);
        let nan = CheckRow::from_residual("s", "c", "a", None, None, 1, 2, f64::NAN, 1e-9);
        assert_eq!(nan.status, Status::Fail);
    }

    #[test]
    fn catalog_ids_unique_and_anchored() {
        let cat = catalog();
        for (i, a) in cat.iter().enumerate() {
            assert!(!a.paper_anchor.is_empty());
            for b in &cat[i + 1..] {
                assert_ne!(a.check_id, b.check_id);
            }
        }
    }
}
