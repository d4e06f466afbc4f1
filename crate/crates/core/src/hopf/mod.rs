//! The word Hopf algebra `T(V)` on tensor words and linear forms on it.
//!
//! The coproduct of a word `w = a₁⋯aₙ` sums, over every subset `S` of its
//! positions, the term `w_S ⊗ w_{J₁}|⋯|w_{J_m}` where the `J_i` are the
//! maximal intervals of the complement. Convolution of forms dualizes it;
//! splitting the sum by whether `S` contains the first position yields the
//! two half-shuffle products.

mod convolution;
mod coproduct;
mod forms;
mod lambda;

pub use convolution::{
    commutator, conv_exp, conv_log, conv_power, convolve, convolve_with, half_shuffle_left, half_shuffle_right,
};
pub use coproduct::{
    coproduct, coproduct_tensor, half_coproduct_left, half_coproduct_left_tensor, half_coproduct_right,
    half_coproduct_right_tensor, CoproductTerm,
};
pub use forms::{Character, Functional, InfinitesimalCharacter, LinearForm};
pub use lambda::lambda;
