//! Random non-crossing configurations of the regular polygon, sampled and
//! analysed through their bijection with conditioned Galton–Watson trees.

pub mod analytics;
pub mod battery;
pub mod configurations;
pub mod geometry;
pub mod numeric;
pub mod offspring;
pub mod path;
pub mod samplers;
pub mod trees;

pub use analytics::{AnalyticsError, StatReport, Statistic};
pub use configurations::{ChordDiagram, DiagramKind, Model, ModelSampler, NonCrossingPartition};
pub use geometry::Lamination;
pub use offspring::{DegreeSet, OffspringDistribution};
pub use path::DiscretePath;
pub use samplers::{SampleBudget, SimRng};
pub use trees::{PlaneTree, TreeError};
