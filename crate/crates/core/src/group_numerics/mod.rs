//! SL(2,ℝ) and SU(2) as 2×2 matrix groups.
//!
//! Iwasawa factors are ordered x = n·a·k. With H₀ = diag(1, −1) the restricted
//! root is α(H₀) = 2 and ρ = α/2. The center is finite, so |x|_pz = |x|_𝔭.

mod decomp;
mod element;
mod spherical;

pub use decomp::{cartan_kak, iwasawa_nak, iwasawa_nak_gram_schmidt, norm_p, Iwasawa, Kak};
pub use element::{diag, random_sl2r, rotation, unipotent, GroupElement, Model, GROUP_TOLERANCE};
pub use spherical::{
    convention, growth_fit, growth_fit_values, richardson, seminorm_weight, spherical_phi0,
    spherical_phi0_value, Convention, GrowthFit, Richardson, SphericalConfig, SphericalValue,
    DEFAULT_GROWTH_SLACK, SPHERICAL_TOLERANCE,
};
