pub mod adjunction;
pub mod cli;
pub mod diagram;
pub mod equations;
pub mod error;
pub mod matrep;
pub mod normalize;
pub mod ordinal;
pub mod term;

pub use error::{Error, Result};
pub use ordinal::CircularForm;
pub use term::{parse_term, Gen, Term, Theory};
