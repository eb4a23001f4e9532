//! Every checker against a brute-force transcription of its identities over
//! raw structure constants, on seeded random structures of dimension 2 to 4.

#[path = "support/oracle.rs"]
mod oracle;

#[test]
fn checkers_agree_with_brute_force() {
    let tally = oracle::compare_all(0..50);
    assert!(tally.mismatches.is_empty(), "{:#?}", tally.mismatches);
    assert!(tally.one_sided().is_empty(), "vacuous comparisons: {:?}", tally.one_sided());
}
