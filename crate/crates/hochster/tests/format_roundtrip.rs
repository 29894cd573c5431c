use hochster::format::{parse_ideal, write_ideal, ParseError};
use hochster_core::MonomialIdeal;
use proptest::prelude::*;

fn ideals() -> impl Strategy<Value = MonomialIdeal> {
    (1usize..=8).prop_flat_map(|n| {
        proptest::collection::vec(proptest::collection::vec(0u32..=12, n), 0..=6)
            .prop_filter_map("unit ideal", move |rows| {
                MonomialIdeal::from_exponents(n, &rows).ok()
            })
    })
}

proptest! {
    #[test]
    fn write_then_parse(ideal in ideals()) {
        let text = write_ideal(&ideal);
        prop_assert_eq!(parse_ideal(&text).unwrap(), ideal.clone());
        prop_assert_eq!(write_ideal(&parse_ideal(&text).unwrap()), text.clone());
        // whitespace between tokens does not matter
        let spaced = text.replace(',', " ,\t").replace('*', " * ").replacen('\n', " ;\n ", 1);
        prop_assert_eq!(parse_ideal(&spaced).unwrap(), ideal);
    }

    #[test]
    fn garbage_is_rejected_not_panicking(s in "\\PC{0,40}") {
        let _ = parse_ideal(&s);
    }

    #[test]
    fn stray_characters_are_positioned(ideal in ideals(), junk in "[#@!?]") {
        let text = format!("{}{junk}", write_ideal(&ideal));
        let is_syntax = matches!(parse_ideal(&text), Err(ParseError::Syntax { line: 3, column: 1, .. }));
        prop_assert!(is_syntax);
    }
}
