//! Curve models and the exact group law.
//!
//! Group operations only exist on the short Weierstrass model. The cubic
//! model `y^2 = kx^3 + lx + m` is carried across by `(X, Y) = (kx, ky)`, and
//! the quartic model only through the birational maps in
//! [`crate::construction`]. Points never hold a reference to a curve.

mod cubic;
mod point;
mod quartic;
mod short;

pub use cubic::{CubicCurve, ShortModel};
pub use point::CurvePoint;
pub use quartic::QuarticCurve;
pub use short::{ShortWCurve, MAX_TORSION_ORDER};
