use std::fs;
use std::path::PathBuf;

use zed_core::io::{
    emit_name_table, emit_seq_genome, emit_set_genome, parse_dimacs3, parse_seq_genome,
    parse_set_genome, render_seq_roles,
};
use zed_core::sat::{
    assignment_from_seq_certificate, assignment_from_set_certificate, reduce_3sat_to_seq_zed,
    reduce_3sat_to_set_zed, seq_certificate_from_assignment, set_certificate_from_assignment,
    Assignment, CnfFormula,
};
use zed_core::seq::{zed_seq_exact, zed_seq_special};
use zed_core::set::{algorithm3_special, algorithm4_fpt, verify_set_certificate, zed_set_exact};
use zed_core::verify_seq_certificate;

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn formula() -> CnfFormula {
    parse_dimacs3(&data("example.cnf")).unwrap()
}

#[test]
fn seq_reduction_matches_goldens() {
    let red = reduce_3sat_to_seq_zed(&formula());
    assert_eq!(emit_seq_genome(&red.g1), data("example1.g1.seq"));
    assert_eq!(emit_seq_genome(&red.g2), data("example1.g2.seq"));
    assert_eq!(emit_name_table(&red.names), data("example1.tsv"));
}

#[test]
fn set_reduction_matches_goldens() {
    let red = reduce_3sat_to_set_zed(&formula()).unwrap();
    assert_eq!(emit_set_genome(&red.g1), data("example2.g1.set"));
    assert_eq!(emit_set_genome(&red.g2), data("example2.g2.set"));
    assert_eq!(emit_name_table(&red.names), data("example2.tsv"));
}

#[test]
fn seq_example_round_trip_through_certificate() {
    let phi = formula();
    let red = reduce_3sat_to_seq_zed(&phi);
    let sigma = Assignment::new(vec![true, false, false, true]);
    let cert = seq_certificate_from_assignment(&phi, &sigma).unwrap();
    assert!(verify_seq_certificate(&red.g1, &red.g2, &cert));
    assert_eq!(assignment_from_seq_certificate(&phi, &cert).unwrap(), sigma);
    let listing: Vec<String> = data("example1.listing.txt")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(String::from)
        .collect();
    assert_eq!(render_seq_roles(&cert, &red.names), listing[2]);

    let found = zed_seq_exact(&red.g1, &red.g2)
        .unwrap()
        .certificate
        .unwrap();
    assert!(verify_seq_certificate(&red.g1, &red.g2, &found));
}

#[test]
fn set_example_round_trip_through_certificate() {
    let phi = formula();
    let red = reduce_3sat_to_set_zed(&phi).unwrap();
    let sigma = Assignment::new(vec![true, false, false, true]);
    let cert = set_certificate_from_assignment(&phi, &sigma).unwrap();
    assert!(verify_set_certificate(&red.g1, &red.g2, &cert));
    assert_eq!(assignment_from_set_certificate(&phi, &cert).unwrap(), sigma);
    assert!(zed_set_exact(&red.g1, &red.g2).unwrap().is_yes());
}

#[test]
fn intro_sequence_pair() {
    let g1 = parse_seq_genome(&data("intro.g1.seq")).unwrap();
    let g2 = parse_seq_genome(&data("intro.g2.seq")).unwrap();
    let cert = parse_seq_genome(&data("intro.cert.seq")).unwrap();
    assert!(verify_seq_certificate(&g1, &g2, &cert));
    let d = zed_seq_exact(&g1, &g2).unwrap();
    assert!(verify_seq_certificate(
        &g1,
        &g2,
        d.certificate.as_ref().unwrap()
    ));
    assert!(zed_seq_special(&g1, &g2).is_err());
}

#[test]
fn intro_set_pair() {
    let g1 = parse_set_genome(&data("intro.g1.set")).unwrap();
    let g2 = parse_set_genome(&data("intro.g2.set")).unwrap();
    let cert = parse_set_genome(&data("intro.cert.set")).unwrap();
    assert!(verify_set_certificate(&g1, &g2, &cert));
    assert!(zed_set_exact(&g1, &g2).unwrap().is_yes());
    assert!(algorithm4_fpt(&g1, &g2).unwrap().is_yes());
    if let Ok(d) = algorithm3_special(&g1, &g2) {
        assert!(d.is_yes());
    }
}
