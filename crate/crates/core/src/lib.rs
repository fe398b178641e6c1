pub mod alexander;
pub mod algebra;
pub mod casson;
pub mod diagram;
pub mod fixtures;
pub mod json;
pub mod milnor;
pub mod verify;
