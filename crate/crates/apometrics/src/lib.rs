//! Apollonian and Seittenranta distances on Euclidean domains, closed-form
//! metric balls as Boolean regions of balls and half-spaces, and numerical
//! verification of their convexity and starlikeness properties.
//!
//! Layers, bottom up:
//!
//! * [`geom`] — cross-ratios with infinity conventions, Apollonian spheres
//!   and sublevel sets, ice-cream cones;
//! * [`region`] / [`march`] — a small CSG region algebra with membership
//!   tests and 2D boundary extraction by marching squares;
//! * [`domain`] / [`metrics`] — domain descriptors and distance evaluators
//!   (exact on finite boundaries, closed forms on the half-space and ball,
//!   sampled lower bounds elsewhere);
//! * [`balls`] — closed-form metric-ball constructors returning regions;
//! * [`analysis`] — sampled convexity / starlikeness / connectivity checks,
//!   sharp radii, bisection threshold estimation, boundary profiles;
//! * [`svg`] — deterministic SVG figure rendering;
//! * [`verify`] — the self-verification suite behind `apometrics verify`.

pub mod analysis;
pub mod balls;
pub mod domain;
pub mod error;
pub mod geom;
pub mod march;
pub mod metrics;
pub mod point;
pub mod region;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use point::{pt2, ExtendedPoint, Point};
