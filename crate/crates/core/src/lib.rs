//! Cluster categories of Dynkin type, their tilting objects, and the
//! cluster-tilted algebras they define.

mod bitset;
pub mod category;
pub mod cta;
pub mod diagram;
pub mod dn;
pub mod dynkin;
pub mod error;
pub mod hereditary;
mod linalg;
pub mod oracle;
pub mod quiver;
pub mod tilting;

pub use category::{ClusterCategory, ObjectKind};
pub use dynkin::{DynkinSpec, Family};
pub use error::{Error, Result};
pub use hereditary::{Mesh, Module, ModuleCategory, TranslationQuiver};
pub use quiver::Quiver;
pub use tilting::TiltingObject;
