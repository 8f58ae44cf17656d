pub mod error;
pub mod hypergeom;
pub mod matrix;
pub mod quad;
pub mod special;
