//! Both sides of every identity, built as truncated series and compared.

pub mod bailey;
pub mod chain;
pub mod classical;
pub mod families;
pub mod theorems;
