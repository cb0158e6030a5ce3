//! File formats, reports and command dispatch for `hurwitz-core`.

pub mod commands;
pub mod input;
pub mod report;
