pub mod double;
pub mod lines;
pub mod quantum;
pub mod quiver;
pub mod registry;

pub use double::*;
pub use lines::*;
pub use quantum::*;
pub use quiver::*;
