//! The Eisenstein basis E_m (m | N, m > 1): q-expansions, periods, the coefficient
//! function F_m on P1(Z/N), and the Eisenstein and winding elements built from it.

mod coefficients;
mod element;
mod gammas;
mod period;
mod series;

pub use coefficients::{
    classify_shape, f_value_by_reflection, f_values, f_values_with, EisensteinCoefficients,
    Scale, Shape,
};
pub use element::{
    eisenstein_element, winding_element, winding_element_in, winding_element_via_boundary,
    WindingElement,
};
pub use gammas::{build_gammas, build_gammas_with, flip_matrix, reflection_matrix};
pub use period::{p_m, period};
pub use series::{q_expansion, EisensteinSeries};
