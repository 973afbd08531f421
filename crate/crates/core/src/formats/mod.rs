//! Text syntax, JSON documents and display renderings.

mod json;
mod render;
mod text;

pub use json::{
    decode_args, decode_formula, decode_goal, decode_interpretation, decode_node, decode_open_tree, decode_proof,
    decode_rule, decode_session, decode_term, encode_args, encode_formula, encode_goal, encode_interpretation,
    encode_node, encode_open_tree, encode_proof, encode_session, encode_term, DecodeError, FORMAT_VERSION,
};
pub use render::{
    describe_args, ok_judgment, render_ok_listing, render_open_ok_listing, render_open_tree, render_tree, OPEN_MARK,
};
pub use text::{parse_formula, parse_term, print_argument, print_formula, print_term, SyntaxError};
