use std::collections::BTreeMap;

use proptest::prelude::*;

use jackleaf::algebra::{MultiPoly, Rat, RatFun, UniPoly, Var};
use jackleaf::binomials::BinomialContext;
use jackleaf::partitions::{induced_decomposition, two_row_data, Cell, Label, Partition};
use jackleaf::stemleaf::leaf;

fn unipoly() -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-5i64..=5, 0..4).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_unipoly() -> impl Strategy<Value = UniPoly> {
    unipoly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = RatFun> {
    (unipoly(), nonzero_unipoly()).prop_map(|(n, d)| RatFun::new(n, d).unwrap())
}

fn multipoly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), -4i64..=4), 0..5).prop_map(|ts| {
        MultiPoly::from_terms(&[Var::R, Var::Y], ts.into_iter().map(|((a, b), c)| (vec![a, b], Rat::from(c)))).unwrap()
    })
}

fn partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// `(λ, μ)` with `μ ⊆ λ`.
fn pair(max_len: usize, max_part: usize) -> impl Strategy<Value = (Partition, Partition)> {
    partition(max_len, max_part).prop_flat_map(|lam| {
        let n = lam.len();
        (Just(lam), prop::collection::vec(0.0f64..=1.0, n))
    })
    .prop_map(|(lam, fr)| {
        let mut prev = usize::MAX;
        let mu: Vec<usize> = lam
            .parts()
            .iter()
            .zip(fr)
            .map(|(&l, f)| {
                let v = ((l as f64 * f).round() as usize).min(prev);
                prev = v;
                v
            })
            .collect();
        (lam, Partition::new(mu).unwrap())
    })
}

proptest! {
    #[test]
    fn ratfun_field_axioms(a in ratfun(), b in ratfun(), c in ratfun()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.recip().unwrap()).is_one());
        }
    }

    #[test]
    fn ratfun_canonical_form(n in unipoly(), d in nonzero_unipoly(), k in nonzero_unipoly()) {
        let q = RatFun::new(n.clone(), d.clone()).unwrap();
        prop_assert_eq!(&RatFun::new(&n * &k, &d * &k).unwrap(), &q);
        prop_assert_eq!(&RatFun::new(q.num().clone(), q.den().clone()).unwrap(), &q);
    }

    #[test]
    fn ratfun_eval_is_a_homomorphism(a in ratfun(), b in ratfun(), x in -6i64..=6, y in 1i64..=4) {
        let x = Rat::new(x, y).unwrap();
        if let (Ok(va), Ok(vb)) = (a.eval(&x), b.eval(&x)) {
            prop_assert_eq!((&a * &b).eval(&x).unwrap(), &va * &vb);
            prop_assert_eq!((&a + &b).eval(&x).unwrap(), &va + &vb);
        }
    }

    #[test]
    fn multipoly_ring_axioms(a in multipoly(), b in multipoly(), c in multipoly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn multipoly_eval_and_subst(a in multipoly(), b in multipoly(), r in -3i64..=3, y in -3i64..=3) {
        let pt: BTreeMap<Var, Rat> = [(Var::R, Rat::from(r)), (Var::Y, Rat::from(y))].into();
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), &a.eval(&pt).unwrap() * &b.eval(&pt).unwrap());
        let s = a.subst_one(Var::Y, &MultiPoly::constant(y));
        prop_assert_eq!(s.eval(&pt).unwrap(), a.eval(&pt).unwrap());
    }

    #[test]
    fn json_round_trip(a in multipoly(), q in ratfun(), lam in partition(5, 6)) {
        let back: MultiPoly = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(back, a);
        let back: RatFun = serde_json::from_str(&serde_json::to_string(&q).unwrap()).unwrap();
        prop_assert_eq!(back, q);
        let back: Partition = serde_json::from_str(&serde_json::to_string(&lam).unwrap()).unwrap();
        prop_assert_eq!(back, lam);
    }

    #[test]
    fn conjugation_swaps_arm_and_leg(lam in partition(6, 6)) {
        let conj = lam.conjugate();
        prop_assert_eq!(conj.conjugate(), lam.clone());
        prop_assert_eq!(conj.size(), lam.size());
        for c in lam.cells() {
            let t = Cell::new(c.col, c.row);
            prop_assert_eq!(lam.arm(c), conj.leg(t));
            prop_assert_eq!(lam.leg(c), conj.arm(t));
        }
    }

    #[test]
    fn label_counts((lam, mu) in pair(5, 6)) {
        let labels = induced_decomposition(&lam, &mu).unwrap();
        let total: usize = Label::ALL.iter().map(|&l| labels.count(l)).sum();
        prop_assert_eq!(total, lam.size());
        prop_assert_eq!(labels.count(Label::S), lam.size() - mu.size());
        if let Ok(data) = two_row_data(&lam, &mu) {
            if data.d > 0 {
                prop_assert_eq!(labels.count(Label::J), data.d - data.m);
            }
        }
    }

    #[test]
    fn translation_preserves_two_row_data((lam, mu) in pair(4, 4), top in 0usize..3, left in 0usize..3) {
        prop_assume!(lam != mu);
        let Ok(data) = two_row_data(&lam, &mu) else { return Ok(()) };
        let width = lam.row_len(1) + left;
        let shift = |p: &Partition| {
            let mut v = vec![width; top];
            v.extend((1..=lam.len()).map(|i| p.row_len(i) + left));
            Partition::new(v).unwrap()
        };
        let (lam2, mu2) = (shift(&lam), shift(&mu));
        let moved = two_row_data(&lam2, &mu2).unwrap();
        prop_assert_eq!((moved.u, moved.d, moved.m), (data.u, data.d, data.m));
        prop_assert_eq!(&moved.y, &data.y);
        let mut ctx = BinomialContext::new();
        prop_assert_eq!(leaf(&lam2, &mu2, &mut ctx).unwrap(), leaf(&lam, &mu, &mut ctx).unwrap());
    }
}
