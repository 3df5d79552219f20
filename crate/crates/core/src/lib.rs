//! Radial measures in continuous dimension.
//!
//! Builds the homogeneous radial measures `c(x) u^{x/2-1} du` on the positive
//! half-line as a functor of the dimension-shift category, selects the
//! Mellin-Gamma family by Gaussian normalization, and exposes the two scalar
//! transports (radial-integration and ball-volume cocycles) together with the
//! coboundary that separates them. Every closed form is certified against
//! independent adaptive quadrature by the [`verify`] suites.
//!
//! Module map:
//!
//! * [`specfun`] — log-gamma, gamma, regularized lower incomplete gamma.
//! * [`quadrature`] — adaptive Gauss-Kronrod integration on `(0, ∞)` and on
//!   finite intervals, with an `u = e^t` substitution for the half-line.
//! * [`measures`] — dimension objects/shifts, homogeneous radial measures,
//!   density morphisms, functor construction from a coefficient function.
//! * [`cocycles`] — the transports `R(x,r)` and `T(x,r)` and the coboundary
//!   `β(x) = x` binding them.
//! * [`observables`] — unit-interval mass, sublevel mass, ball volume `V(x)`,
//!   full and truncated Gaussian observables.
//! * [`verify`] — seeded, deterministic property-verification suites with
//!   machine-readable reports.

pub mod cocycles;
pub mod measures;
pub mod observables;
pub mod quadrature;
pub mod specfun;
pub mod verify;
