use edgeideal::format::{parse_graph6, to_graph6};
use edgeideal::generators::{random_dq_tree, random_permutation, random_sequence};
use edgeideal::recognition::{max_process, pdim_fast, recognize_dq_tree, TieBreak};
use edgeideal::report::invariant_report;
use edgeideal::resolution::{betti_table, eq1_residual, hilbert_data};
use edgeideal::{FieldSpec, Graph};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const QQ: FieldSpec = FieldSpec::RATIONALS;

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if (bits >> (k % 64)) & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
            k += 1;
        }
    }
    g
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn betti_table_is_a_graph_invariant(n in 1usize..9, bits in any::<u64>(), seed in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let perm = random_permutation(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let h = g.permuted(&perm);
        prop_assert_eq!(betti_table(&g, QQ).unwrap(), betti_table(&h, QQ).unwrap());
    }

    #[test]
    fn shortcut_pdim_matches_hochster(n in 1usize..9, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let table = betti_table(&g, QQ).unwrap();
        prop_assert_eq!(pdim_fast(&g, QQ).unwrap().value, table.pdim());
        prop_assert!(g.bight() <= table.pdim());
    }

    #[test]
    fn euler_relation_lower_bound(n in 1usize..9, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let r = eq1_residual(&betti_table(&g, QQ).unwrap(), &hilbert_data(&g));
        prop_assert!(r >= 0);
        if g.complement().is_chordal() {
            prop_assert_eq!(r, 0);
        }
    }

    #[test]
    fn relabelled_trees_are_recognized(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let seq = random_sequence(&mut rng, 10);
        let h = random_dq_tree(&seq, &mut rng).unwrap();
        let h = h.permuted(&random_permutation(h.vertex_count(), &mut rng));
        let cert = recognize_dq_tree(&h);
        let w = cert.witness().expect("generated tree accepted");
        prop_assert_eq!(w.sequence(), seq);
        prop_assert!(w.verify(&h));
    }

    #[test]
    fn max_process_ends_in_maximal_independent_set(n in 1usize..10, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let t = max_process(&g, &TieBreak::Lowest).unwrap();
        prop_assert!(t.maximal);
        prop_assert!(g.is_maximal_independent(t.set()));
        prop_assert!(t.degree_sum() <= g.bight());
    }

    #[test]
    fn graph6_survives_the_report(n in 1usize..8, bits in any::<u64>()) {
        let g = graph_from_bits(n, bits);
        let report = invariant_report(&g, QQ, true).unwrap();
        prop_assert!(report.is_consistent());
        prop_assert_eq!(report.pdim_verified, Some(true));
        let back = parse_graph6(&report.graph6).unwrap();
        prop_assert_eq!(to_graph6(&back), to_graph6(&g));
    }
}
