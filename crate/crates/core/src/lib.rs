pub mod build;
pub mod census;
pub mod clockwork;
pub mod graph;
pub mod spanning;
pub mod states;
pub mod trinity;
pub mod verify;
