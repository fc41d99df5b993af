pub mod category;
pub mod crossed;
pub mod diagram;
pub mod examples;
pub mod hopf;
pub mod products;
pub mod report;
pub mod scalars;
pub mod suites;

pub use category::{Braider, Category, GradedObject, GradingGroup, Morphism, Window};
pub use crossed::CrossedModule;
pub use diagram::{Context, DiagramExpr};
pub use hopf::{HopfData, Variant};
pub use products::quantum::Quasitriangular;
pub use report::Report;
pub use scalars::{Field, Scalar};
