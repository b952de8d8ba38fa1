//! Expression language and printers behind the `qncalc` binary: parsing of
//! generator words and Laurent polynomials, evaluation into the canonical
//! word algebra, and the deterministic text/JSON output forms.

pub mod parse;
pub mod print;
