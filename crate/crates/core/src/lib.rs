pub mod act;
pub mod cli;
pub mod congruence;
pub mod diagonal;
pub mod error;
pub mod family;
pub mod limits;
pub mod monoid;
pub mod presentation;
pub mod product;
pub mod suite;
pub mod wreath;
pub mod workspace;
