use std::collections::HashSet;

use btableaux::matchings::{phi, phi_trace, pignose_matching, OrderedMatching};
use btableaux::paths::{fv1, fz1, LabeledMotzkinPath, MotzkinSuffix};
use btableaux::signedperm::diagram::FullPignoseDiagram;
use btableaux::signedperm::{
    alignments, crossings, crossings_via_configurations, enumerate_bn, pattern_stats, stats,
    SignedPermutation,
};
use btableaux::tableaux::{enumerate_ptb, zigzag_b, PermTableauB};
use proptest::prelude::*;

fn signed_perm(max_n: usize) -> impl Strategy<Value = SignedPermutation> {
    (0..=max_n).prop_flat_map(|n| {
        (
            Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(prop::bool::ANY, n),
        )
            .prop_map(|(v, signs)| {
                let images = v.into_iter().zip(signs).map(|(x, s)| if s { -x } else { x }).collect();
                SignedPermutation::new(images).unwrap()
            })
    })
}

fn matching(max_m: usize) -> impl Strategy<Value = OrderedMatching> {
    (0..=max_m).prop_flat_map(|m| {
        Just((1..=2 * m as i64).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| OrderedMatching::new(v.chunks(2).map(|c| (c[0], c[1])).collect()).unwrap())
    })
}

fn tableau(max_n: usize) -> impl Strategy<Value = PermTableauB> {
    (0..=max_n, any::<prop::sample::Index>()).prop_map(|(n, idx)| {
        let all: Vec<_> = enumerate_ptb(n).unwrap().collect();
        all[idx.index(all.len())].clone()
    })
}

proptest! {
    #[test]
    fn permutation_text_round_trip(p in signed_perm(9)) {
        prop_assert_eq!(p.to_string().parse::<SignedPermutation>().unwrap(), p);
    }

    #[test]
    fn involutions(p in signed_perm(9)) {
        prop_assert_eq!(p.negate().negate(), p.clone());
        prop_assert_eq!(p.transpose().transpose(), p.clone());
        prop_assert_eq!(p.negate_first().negate_first(), p);
    }

    #[test]
    fn crossing_routes_agree(p in signed_perm(9)) {
        let c = crossings(&p);
        prop_assert_eq!(crossings_via_configurations(&p), c);
        prop_assert_eq!(FullPignoseDiagram::new(&p).crossing_pairs(), 2 * c);
    }

    #[test]
    fn crossing_alignment_identity(p in signed_perm(9)) {
        let n = p.len();
        prop_assert_eq!(2 * crossings(&p) + alignments(&p) + 2 * n, n * n + stats(&p).fwex);
    }

    #[test]
    fn unsigned_pignose_matches_crossings(p in signed_perm(9)) {
        let a: Vec<i32> = p.images().iter().map(|x| x.abs()).collect();
        let u = SignedPermutation::new(a).unwrap();
        prop_assert_eq!(pignose_matching(&u).unwrap().crossings(), crossings(&u));
    }

    #[test]
    fn matching_text_and_moves(m in matching(7)) {
        prop_assert_eq!(m.to_string().parse::<OrderedMatching>().unwrap(), m.clone());
        let c = m.crossings();
        prop_assert_eq!(m.rho_pow(2 * m.len()).unwrap(), m.clone());
        prop_assert_eq!(m.reverse().unwrap().crossings(), c);
        prop_assert_eq!(m.reverse().unwrap().reverse().unwrap(), m);
    }

    #[test]
    fn phi_statistics(p in signed_perm(7)) {
        prop_assume!(!p.is_empty() && p.at(1) > 0);
        let n = p.len();
        let t = phi_trace(&p).unwrap();
        prop_assert_eq!(t.split.crossings(), crossings(&p));
        let q = t.image;
        prop_assert!(q.at(1) < 0);
        prop_assert_eq!(crossings(&q), crossings(&p));
        prop_assert_eq!(q.neg_count(), p.neg_count() + 1);
        prop_assert_eq!(stats(&q).fwex + stats(&p).fwex, 2 * n + 1);
    }

    #[test]
    fn tableau_text_and_zigzag(t in tableau(5)) {
        prop_assert_eq!(t.to_text().parse::<PermTableauB>().unwrap(), t.clone());
        let p = zigzag_b(&t).unwrap();
        let s = t.stats().unwrap();
        prop_assert_eq!((stats(&p).wex, p.neg_count(), crossings(&p)), (s.row, s.diag, s.so));
    }

    #[test]
    fn path_encodings(p in signed_perm(7)) {
        let v = fv1(&p);
        prop_assert!(v.validate().is_ok());
        prop_assert_eq!(v.to_string().parse::<LabeledMotzkinPath>().unwrap(), v.clone());
        let ps = pattern_stats(&p);
        let w = v.weight().unwrap();
        prop_assert_eq!((w.y, w.t, w.q), (ps.hasc as u32, p.neg_count() as u32, ps.pat as u32));

        let z = fz1(&p);
        prop_assert!(z.validate().is_ok());
        prop_assert_eq!(z.to_string().parse::<MotzkinSuffix>().unwrap(), z.clone());
        let w = z.weight().unwrap();
        let want = (stats(&p).fwex as u32, p.neg_count() as u32, crossings(&p) as u32);
        prop_assert_eq!((w.y, w.t, w.q), want);
    }
}

#[test]
fn phi_is_a_bijection_for_small_n() {
    for n in 1..=5 {
        let images: HashSet<_> = enumerate_bn(n)
            .unwrap()
            .filter(|p| p.at(1) > 0)
            .map(|p| phi(&p).unwrap())
            .collect();
        let half = (1..=n).product::<usize>() << (n - 1);
        assert_eq!(images.len(), half);
        assert!(images.iter().all(|q| q.at(1) < 0));
    }
}
