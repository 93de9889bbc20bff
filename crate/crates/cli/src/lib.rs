//! Library half of the batch tool: file format, reports and the command
//! runners, kept separate from the binary so tests can drive them directly.

pub mod input;
pub mod report;
pub mod run;
