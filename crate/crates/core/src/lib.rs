pub mod cli;
pub mod error;
pub mod matrices;
pub mod params;
pub mod realize;
pub mod report;
pub mod scalars;
pub mod verify;
