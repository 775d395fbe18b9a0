pub mod algebra;
pub mod pipeline;
pub mod rep;
pub mod structure;
pub mod cert;
pub mod comult;
pub mod error;
pub mod frobenius;
pub mod format;
pub mod gendo;
pub mod linalg;
pub mod scalar;
