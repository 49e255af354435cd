pub mod calculus;
pub mod dugundji;
pub mod nmatrix;
pub mod semantics;
pub mod syntax;
pub mod values;
pub mod random;
pub mod recovery;
