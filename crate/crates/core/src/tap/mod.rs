//! Twisted Alexander polynomial: the map `Φ` into 2×2 Laurent matrices, the
//! Fox-Jacobian route, the closed form on each component and the trace
//! identities linking them.

pub mod compute;
pub mod identities;
pub mod phi;
pub mod result;

pub use compute::{
    closed_form_constant, closed_form_poly, span_degree, tap_closed, tap_fox, tap_fox_raw, tap_fox_wirtinger,
    wirtinger_images,
};
pub use identities::{
    det_identity_residual, eta_closed, eta_traces, m3_paper_entries, reduced_det, reduced_form, tap2_form,
    xi_closed, xi_cross_check, xi_from_traces,
};
pub use phi::{abelianize, phi, phi_word};
pub use result::{is_unit_match, TapMethod, TapResult};
