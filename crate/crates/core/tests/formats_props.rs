mod common;

use natded_core::formats::{
    decode_formula, decode_interpretation, decode_proof, decode_session, decode_term, encode_formula,
    encode_interpretation, encode_proof, encode_session, encode_term, parse_formula, parse_term, print_formula,
    print_term,
};
use natded_core::fuzz::{GenStats, ProofGen};
use natded_core::semantics::{Interpretation, Signature};
use natded_core::{check, Session};
use rand::Rng;
use serde_json::json;

use common::{gen, rng};

#[test]
fn formulas_and_terms_survive_print_and_parse() {
    let (mut rng, g) = (rng(50), gen(4, 3));
    for _ in 0..1000 {
        let p = g.formula(&mut rng);
        let text = print_formula(&p);
        assert_eq!(parse_formula(&text).unwrap(), p, "{text}");
        assert_eq!(print_formula(&parse_formula(&text).unwrap()), text);
        let t = g.term(&mut rng);
        assert_eq!(parse_term(&print_term(&t)).unwrap(), t);
    }
}

#[test]
fn formulas_and_terms_survive_encoding() {
    let (mut rng, g) = (rng(51), gen(4, 3));
    for _ in 0..1000 {
        let p = g.formula(&mut rng);
        assert_eq!(decode_formula(&encode_formula(&p)).unwrap(), p);
        let t = g.term(&mut rng);
        assert_eq!(decode_term(&encode_term(&t)).unwrap(), t);
    }
}

#[test]
fn proofs_survive_encoding_and_stay_accepted() {
    let mut rng = rng(52);
    let proofs = ProofGen::default().generate(&mut rng, 1000, &mut GenStats::default());
    for proof in proofs {
        let doc = encode_proof(&proof);
        let text = serde_json::to_string(&doc).unwrap();
        let back = decode_proof(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back, proof);
        assert!(check(&back).is_accepted());
    }
}

#[test]
fn sessions_survive_encoding() {
    let mut rng = rng(53);
    let proofs = ProofGen::default().generate(&mut rng, 50, &mut GenStats::default());
    for proof in proofs {
        let mut session = Session::from_goal(proof.goal.clone());
        for (path, node) in proof.walk() {
            if session.current().at(&path).is_some_and(|n| n.is_open()) {
                session.apply(&path, node.rule, node.args.clone()).unwrap();
            }
        }
        for _ in 0..rng.gen_range(0..session.history_len()) {
            session.undo().unwrap();
        }
        let back = decode_session(&encode_session(&session)).unwrap();
        assert_eq!(back.cursor(), session.cursor());
        assert!(back.history().eq(session.history()));
    }
}

#[test]
fn interpretations_survive_encoding() {
    let (mut rng, g) = (rng(54), gen(3, 2));
    for _ in 0..500 {
        let p = g.formula(&mut rng);
        let size = rng.gen_range(1..=3);
        let env_len = rng.gen_range(0..4);
        let m = Interpretation::sample(&mut rng, size, &Signature::of([&p]), env_len).unwrap();
        assert_eq!(decode_interpretation(&encode_interpretation(&m)).unwrap(), m);
    }
}

#[test]
fn decode_errors_point_into_the_document() {
    let goal = json!({"formula": {"falsity": null}, "assumptions": [{"pre": ["P", []]}]});
    let cases = [
        (
            json!({"format_version": 1, "proof": {"goal": goal, "rule": "Copy", "args": {}, "children": []}}),
            "/proof/rule",
        ),
        (
            json!({"format_version": 1, "proof": {"goal": goal, "rule": "Boole", "args": {}, "children": [], "note": 1}}),
            "/proof/note",
        ),
        (
            json!({"format_version": 2, "proof": {"goal": goal, "rule": "Assume", "args": {}, "children": []}}),
            "/format_version",
        ),
        (
            json!({"format_version": 1, "proof": {"goal": goal, "rule": "Imp_E", "args": {}, "children": []}}),
            "/proof/args",
        ),
        (
            json!({"format_version": 1, "proof": {"goal": {"formula": {"imp": [{"falsity": null}]}, "assumptions": []}, "rule": "Assume", "args": {}, "children": []}}),
            "/proof/goal/formula/imp",
        ),
    ];
    for (doc, path) in cases {
        let err = decode_proof(&doc).unwrap_err();
        assert!(err.path.starts_with(path), "{doc}: {err:?}");
    }
}
