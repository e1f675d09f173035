pub mod evalcode;
pub mod formulas;
pub mod gf;
pub mod linalg;
pub mod oracle;
pub mod varieties;
