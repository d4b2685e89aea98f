//! Convex translation covers for families of planar figures.
//!
//! The main entry point is [`covers::min_area_cover`], which returns a
//! minimum-area triangle containing a translate of every input segment,
//! together with a witness placement for each segment. The pipeline is
//!
//! 1. centre every segment at the origin and take the hull ([`covers::symmetrized_hull`]),
//! 2. fit the smallest enclosing affine-regular hexagon with a rotating-calipers
//!    sweep ([`hexagon::min_affine_hexagon`]),
//! 3. recover the triangle whose Minkowski symmetrization is that hexagon
//!    ([`hexagon::triangle_from_hexagon`]).
//!
//! Perimeter covers, keyhole disks and rectangle covers live in [`covers`];
//! brute-force baselines and instance generators live in [`oracle`].

pub mod covers;
mod error;
pub mod geom;
pub mod hexagon;
pub mod oracle;

pub use error::{Error, Result};
pub use geom::{ConvexPolygon, Direction, Disk, Degeneracy, Point, Segment, SymmetricPolygon};
pub use hexagon::{AffineHexagon, Strip, Triangle};
