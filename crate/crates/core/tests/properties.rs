use proptest::prelude::*;

use vertexlearn::concepts::{
    classify, equivalent, equivalent_by_enumeration, solution_set, structural_counterexamples,
};
use vertexlearn::graph::{minimal_closed_neighborhoods, subsets};
use vertexlearn::session::{run_session, Answer, Query, SessionConfig};
use vertexlearn::{
    Concept, Counterexample, Graph, Hypothesis, Learner, TeacherPolicy, Transversal, Verdict,
    VertexSet,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, mask)| Graph::from_pair_mask(n, mask).unwrap())
}

fn graph_pair(max_n: usize) -> impl Strategy<Value = (Graph, Graph)> {
    (1..=max_n, any::<u64>(), any::<u64>()).prop_map(|(n, a, b)| {
        (
            Graph::from_pair_mask(n, a).unwrap(),
            Graph::from_pair_mask(n, b).unwrap(),
        )
    })
}

fn policy() -> impl Strategy<Value = TeacherPolicy> {
    prop_oneof![
        Just(TeacherPolicy::LexMin),
        Just(TeacherPolicy::LexMax),
        Just(TeacherPolicy::MinCardinality),
        Just(TeacherPolicy::MaxCardinality),
        any::<u64>().prop_map(TeacherPolicy::Random),
    ]
}

fn all_sizes() -> [Concept; 3] {
    [
        Concept::vertex_cover(),
        Concept::independent_set(),
        Concept::dominating_set(),
    ]
}

proptest! {
    #[test]
    fn covers_and_independent_sets_are_complements(g in graph(8)) {
        for s in subsets(g.n()).unwrap() {
            prop_assert_eq!(g.is_vertex_cover(&s).unwrap(), g.is_independent_set(&s.complement()).unwrap());
        }
    }

    #[test]
    fn dominating_sets_are_neighbourhood_transversals(g in graph(8)) {
        let t = Transversal::new(g.n(), minimal_closed_neighborhoods(&g)).unwrap();
        for s in subsets(g.n()).unwrap() {
            let meets_all = (1..=g.n()).all(|x| g.closed_neighborhood(x).unwrap().intersects(&s));
            prop_assert_eq!(g.is_dominating_set(&s).unwrap(), meets_all);
            prop_assert_eq!(t.eval(&s), meets_all);
        }
    }

    #[test]
    fn transversal_and_circuit_agree(n in 1usize..=7, masks in prop::collection::vec(1u64..128, 1..6)) {
        let full = (1u64 << n) - 1;
        let family: Vec<VertexSet> = masks
            .into_iter()
            .map(|m| m & full)
            .filter(|m| *m != 0)
            .map(|m| VertexSet::from_bits(n, m))
            .collect();
        prop_assume!(!family.is_empty());
        let t = Transversal::new(n, family).unwrap();
        let c = t.to_circuit();
        for s in subsets(n).unwrap() {
            prop_assert_eq!(t.eval(&s), c.eval(&s));
        }
    }

    #[test]
    fn structural_comparison_matches_enumeration((g, h) in graph_pair(7)) {
        for concept in all_sizes() {
            let hyp = Hypothesis::Graph(h.clone());
            let structural = structural_counterexamples(&concept, &g, &hyp).unwrap();
            prop_assert_eq!(structural.is_empty(), equivalent_by_enumeration(&concept, &g, &hyp).unwrap());
            for c in &structural {
                prop_assert_eq!(classify(&concept, &g, &hyp, &c.witness).unwrap(), Some(c.polarity));
            }
            prop_assert_eq!(
                equivalent(&concept, &g, &hyp).unwrap() == Verdict::Finished,
                structural.is_empty()
            );
        }
    }

    #[test]
    fn fixed_size_solutions_filter_all_sizes(g in graph(7), k in 1usize..=7) {
        prop_assume!(k <= g.n());
        for concept in all_sizes() {
            let all = solution_set(&concept, &g).unwrap();
            let fixed = solution_set(&concept.exactly(k), &g).unwrap();
            let filtered: Vec<_> = all.into_iter().filter(|s| s.len() == k).collect();
            prop_assert_eq!(fixed, filtered);
        }
    }

    #[test]
    fn learners_finish_within_bounds(g in graph(7), policy in policy()) {
        let n = g.n();
        for (learner, concept) in [
            (Learner::VertexCover, Concept::vertex_cover()),
            (Learner::IndependentSet, Concept::independent_set()),
            (Learner::DominatingSet, Concept::dominating_set()),
        ] {
            let report = run_session(&SessionConfig::new(learner, g.clone(), concept, policy)).unwrap();
            let t = &report.transcript;
            let h = report.result.as_ref().unwrap();
            prop_assert!(equivalent_by_enumeration(&concept, &g, h).unwrap());
            prop_assert_eq!(t.rounds.last().unwrap().answer.clone(), Answer::Finished);
            if learner == Learner::DominatingSet {
                prop_assert!(t.equivalence_count <= n + 1);
                prop_assert!(t.membership_count <= n * (n + 1));
            } else {
                prop_assert!(t.equivalence_count <= n * (n - 1) / 2 + 1);
                prop_assert_eq!(t.membership_count, 0);
            }
        }
    }

    #[test]
    fn wire_messages_round_trip(n in 1usize..=64, bits in any::<u64>(), positive in any::<bool>()) {
        let s = VertexSet::from_bits(n, bits);
        let q = Query::Member(s);
        prop_assert_eq!(Query::decode(&q.encode(), n).unwrap(), q);
        let c = if positive { Counterexample::positive(s) } else { Counterexample::negative(s) };
        let a = Answer::Counterexample(c);
        prop_assert_eq!(Answer::decode(&a.encode(), n).unwrap(), a);
    }
}
