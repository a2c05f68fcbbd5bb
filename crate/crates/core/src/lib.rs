//! Combinatorics of `s`-Catalan families: planar trees with a prescribed
//! degree sequence and the objects in bijection with them.

pub mod arw;
pub mod bijections;
pub mod cap;
pub mod enumeration;
pub mod error;
pub mod noncrossing;
pub mod parking;
pub mod paths;
pub mod polygons;
pub mod signatures;
pub mod stirling;
pub mod trees;

pub use cap::{CapExt, DEFAULT_CAP};
pub use error::{Error, Result};
pub use noncrossing::{Matching, SetPartition};
pub use parking::{DecoratedPath, DecoratedTree, ParkingFunction};
pub use paths::DyckPath;
pub use polygons::{Angulation, Parenthesization};
pub use signatures::{Composition, Partition, WeakComposition};
pub use stirling::{IncreasingTree, Multipermutation};
pub use trees::PlanarTree;
