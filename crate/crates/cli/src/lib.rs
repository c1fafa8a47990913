//! Library surface of the command-line tool: the poset JSON format, poset
//! references, table reproduction, and the verification suites.

pub mod json;
pub mod source;
pub mod table;
pub mod verify;
