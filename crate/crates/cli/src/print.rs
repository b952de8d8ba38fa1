//! Canonical printers: the grammar-compatible text form of elements (what
//! `normalize` emits and the parser reads back), the machine-readable JSON
//! form, and the formatting of model images.
//!
//! Output is deterministic: terms print in the canonical `(m, n, a, b)`
//! order, and a coefficient with both real and imaginary parts prints as
//! two adjacent summands of the same monomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use qn_core::{Element, FockBasisIndex, GaussianRational, Monomial};

/// One printable summand: a sign, a nonnegative scalar magnitude (with an
/// imaginary marker), and a body such as `u^2 w(6) w(6)'`.
struct Piece {
    negative: bool,
    magnitude: BigRational,
    imaginary: bool,
    body: String,
}

fn scalar_text(magnitude: &BigRational, imaginary: bool, standalone: bool) -> String {
    let base = if magnitude.denom().is_one() {
        format!("{}", magnitude.numer())
    } else {
        format!("{}/{}", magnitude.numer(), magnitude.denom())
    };
    if imaginary {
        if magnitude.is_one() {
            "i".to_string()
        } else {
            format!("{base}i")
        }
    } else if magnitude.is_one() && !standalone {
        String::new()
    } else {
        base
    }
}

fn render(pieces: Vec<Piece>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, piece) in pieces.iter().enumerate() {
        if idx == 0 {
            if piece.negative {
                out.push('-');
            }
        } else if piece.negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let scalar = scalar_text(&piece.magnitude, piece.imaginary, piece.body.is_empty());
        match (scalar.is_empty(), piece.body.is_empty()) {
            (false, false) => {
                out.push_str(&scalar);
                out.push('*');
                out.push_str(&piece.body);
            }
            (false, true) => out.push_str(&scalar),
            (true, false) => out.push_str(&piece.body),
            (true, true) => unreachable!("a piece has a scalar or a body"),
        }
    }
    out
}

fn coefficient_pieces(c: &GaussianRational, body: &str, out: &mut Vec<Piece>) {
    for (part, imaginary) in [(c.re(), false), (c.im(), true)] {
        if part.is_zero() {
            continue;
        }
        out.push(Piece {
            negative: part.is_negative(),
            magnitude: part.abs(),
            imaginary,
            body: body.to_string(),
        });
    }
}

/// The factor string of a canonical monomial in the input grammar,
/// e.g. `u^4 w(6) w(6)' u^-3`; empty for the identity.
fn monomial_body(mono: &Monomial) -> String {
    let mut parts: Vec<String> = Vec::new();
    if !mono.a().is_zero() {
        parts.push(if mono.a().is_one() {
            "u".to_string()
        } else {
            format!("u^{}", mono.a())
        });
    }
    if !mono.m().is_one() {
        parts.push(format!("w({})", mono.m()));
    }
    if !mono.n().is_one() {
        parts.push(format!("w({})'", mono.n()));
    }
    let bp = -mono.b().clone();
    if !bp.is_zero() {
        parts.push(if bp.is_one() {
            "u".to_string()
        } else {
            format!("u^{bp}")
        });
    }
    parts.join(" ")
}

/// The canonical, re-parseable text form of an element.
pub fn print_element(x: &Element) -> String {
    let mut pieces = Vec::new();
    for (mono, c) in x.terms() {
        coefficient_pieces(c, &monomial_body(mono), &mut pieces);
    }
    render(pieces)
}

/// The machine form: an array of `{a, m, n, b, coeff}` records in canonical
/// order, `coeff` being `[re_num, re_den, im_num, im_den]`. Byte-identical
/// across runs for equal inputs.
pub fn element_json(x: &Element) -> String {
    let mut out = String::from("[");
    for (idx, (mono, c)) in x.terms().enumerate() {
        if idx > 0 {
            out.push(',');
        }
        out.push_str(&format!(
            "{{\"a\":{},\"m\":{},\"n\":{},\"b\":{},\"coeff\":[{},{},{},{}]}}",
            mono.a(),
            mono.m(),
            mono.n(),
            mono.b(),
            c.re().numer(),
            c.re().denom(),
            c.im().numer(),
            c.im().denom(),
        ));
    }
    out.push(']');
    out
}

/// Formats the image of an integer-model basis vector, e.g. `e(6)` or
/// `1/2*e(3) + i*e(4)`; the empty image is `0`.
pub fn print_integer_image(image: &[(BigInt, GaussianRational)]) -> String {
    let mut pieces = Vec::new();
    for (k, c) in image {
        coefficient_pieces(c, &format!("e({k})"), &mut pieces);
    }
    render(pieces)
}

/// Formats the image of a Fock basis vector, e.g. `e(2,6)`.
pub fn print_fock_image(image: &[(FockBasisIndex, GaussianRational)]) -> String {
    let mut pieces = Vec::new();
    for (v, c) in image {
        coefficient_pieces(c, &format!("e({},{})", v.j, v.r), &mut pieces);
    }
    render(pieces)
}
