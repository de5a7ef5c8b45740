//! Proptest strategies over small literal forms.

use super::oracle::Lit;
use proptest::prelude::*;

/// Forms of birthday at most `depth` with at most `width` options a side.
pub fn lit(depth: u32, width: usize) -> BoxedStrategy<Lit> {
    let leaf = Just(Lit {
        left: vec![],
        right: vec![],
    })
    .boxed();
    leaf.prop_recursive(depth, 64, width as u32, move |inner| {
        (
            prop::collection::vec(inner.clone(), 0..=width),
            prop::collection::vec(inner, 0..=width),
        )
            .prop_map(|(left, right)| Lit { left, right })
    })
    .boxed()
}
