use std::sync::OnceLock;

use proptest::prelude::*;
use tldkit::cellular::{act, bilinear, cells, ActionResult, CellLabel};
use tldkit::diagram::{basis_diagrams, TLDiagram};
use tldkit::halfdiag::{enumerate, HalfDiagram, Variant};
use tldkit::poly::{Poly, RationalValue};

fn basis(n: usize) -> &'static [(CellLabel, TLDiagram)] {
    static CACHE: OnceLock<Vec<Vec<(CellLabel, TLDiagram)>>> = OnceLock::new();
    &CACHE.get_or_init(|| (0..=6).map(|n| if n < 2 { Vec::new() } else { basis_diagrams(n).unwrap() }).collect())[n]
}

fn pick(n: usize, i: usize) -> &'static TLDiagram {
    let b = basis(n);
    &b[i % b.len()].1
}

proptest! {
    #[test]
    fn multiplication_is_associative(n in 4usize..=6, i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let (x, y, z) = (pick(n, i), pick(n, j), pick(n, k));
        prop_assert_eq!(x.multiply(y).unwrap().multiply(z).unwrap(), x.multiply(&y.multiply(z).unwrap()).unwrap());
    }

    #[test]
    fn products_stay_in_the_basis(n in 2usize..=6, i in any::<usize>(), j in any::<usize>()) {
        let prod = pick(n, i).multiply(pick(n, j)).unwrap();
        prop_assert!(prod.shape().is_basis());
    }

    #[test]
    fn flip_reverses_products(n in 2usize..=6, i in any::<usize>(), j in any::<usize>()) {
        let (x, y) = (pick(n, i), pick(n, j));
        prop_assert_eq!(x.multiply(y).unwrap().flip(), y.flip().multiply(&x.flip()).unwrap());
    }

    #[test]
    fn diagram_json_round_trip(n in 2usize..=6, i in any::<usize>(), k in 0u32..4) {
        let d = pick(n, i).clone().with_delta_power(k);
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<TLDiagram>(&s).unwrap(), d);
    }

    #[test]
    fn half_diagram_round_trips(n in 1usize..=9, p_seed in any::<usize>(), i in any::<usize>()) {
        let p = p_seed % (n / 2 + 1);
        let b = enumerate(n, p, Variant::All).unwrap();
        let d = b.get(i % b.len());
        prop_assert_eq!(&d.to_string().parse::<HalfDiagram>().unwrap(), d);
        let s = serde_json::to_string(d).unwrap();
        prop_assert_eq!(&serde_json::from_str::<HalfDiagram>(&s).unwrap(), d);
    }

    #[test]
    fn forms_are_symmetric(n in 2usize..=7, c in any::<usize>(), i in any::<usize>(), j in any::<usize>()) {
        let all = cells(n).unwrap();
        let cell = all[c % all.len()];
        let b = cell.basis(n).unwrap();
        let (s, t) = (b.get(i % b.len()), b.get(j % b.len()));
        prop_assert_eq!(bilinear(cell, s, t).unwrap(), bilinear(cell, t, s).unwrap());
    }

    /// Acting with a product equals acting twice.
    #[test]
    fn action_is_a_module_structure(n in 2usize..=5, c in any::<usize>(), i in any::<usize>(), j in any::<usize>(), k in any::<usize>()) {
        let all = cells(n).unwrap();
        let cell = all[c % all.len()];
        let b = cell.basis(n).unwrap();
        let s = b.get(k % b.len());
        let (x, y) = (pick(n, i), pick(n, j));
        let once = act(cell, &x.multiply(y).unwrap(), s).unwrap();
        let twice = match act(cell, y, s).unwrap() {
            ActionResult::Zero => ActionResult::Zero,
            ActionResult::Term { delta_power, diagram } => match act(cell, x, &diagram).unwrap() {
                ActionResult::Zero => ActionResult::Zero,
                ActionResult::Term { delta_power: e, diagram } => ActionResult::Term { delta_power: delta_power + e, diagram },
            },
        };
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn evaluation_respects_products(a in prop::collection::vec(-5i64..5, 0..6), b in prop::collection::vec(-5i64..5, 0..6), x in -4i64..4, y in 1i64..4) {
        let (pa, pb) = (Poly::from_i64s(&a), Poly::from_i64s(&b));
        let at = RationalValue::new(x.into(), y.into()).unwrap();
        prop_assert_eq!((&pa * &pb).eval(&at), &pa.eval(&at) * &pb.eval(&at));
    }
}
