//! Property-based invariants over randomly generated configurations.

use noncross::analytics::gof::{kolmogorov_survival, total_variation};
use noncross::analytics::limits::{limit_pmf_root_vertex, longest_chord_cdf};
use noncross::analytics::StatReport;
use noncross::configurations::{
    contract_to_partition, dissection_from_tree, dual_tree, face_degrees, nct_embed, nct_shape,
    pair_partition_from_tree, tree_from_pair_partition,
};
use noncross::geometry::{crossing, hausdorff, intersections, is_non_crossing};
use noncross::samplers::{sample_uniform_tree_edges, InternalDegrees, NoUnaryLeafTrees};
use noncross::{Lamination, Model, ModelSampler, PlaneTree, SimRng};
use proptest::prelude::*;
use rand::Rng;
use std::collections::BTreeMap;

fn dissection_tree(leaves: usize, seed: u64) -> PlaneTree {
    NoUnaryLeafTrees::new(leaves, InternalDegrees::AtLeastTwo).unwrap().sample(&mut SimRng::new(seed, 0))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dual_tree_bijection(leaves in 2usize..80, seed in any::<u64>()) {
        let t = dissection_tree(leaves, seed);
        let d = dissection_from_tree(&t).unwrap();
        prop_assert_eq!(d.polygon(), leaves + 1);
        prop_assert_eq!(&dual_tree(&d).unwrap(), &t);
        // Faces: Σ (deg - 2) = m - 2.
        let faces = face_degrees(&d).unwrap();
        prop_assert_eq!(faces.iter().map(|&k| k as usize - 2).sum::<usize>(), leaves - 1);
        prop_assert!(is_non_crossing(d.chords()));
    }

    #[test]
    fn nct_shape_and_splits_round_trip(n in 2usize..60, seed in any::<u64>()) {
        let mut rng = SimRng::new(seed, 1);
        let c = ModelSampler::new(Model::Nct, n).unwrap().sample(&mut rng).unwrap();
        let (shape, splits) = nct_shape(&c.diagram).unwrap();
        prop_assert_eq!(&shape, &c.tree);
        prop_assert_eq!(nct_embed(&shape, &splits).unwrap(), c.diagram.clone());
        // Any admissible split vector embeds to a tree whose shape gives it back.
        let other: Vec<u32> = shape.degrees().iter().enumerate()
            .map(|(u, &k)| if u == 0 { 0 } else { rng.random_range(0..=k) }).collect();
        let e = nct_embed(&shape, &other).unwrap();
        prop_assert_eq!(nct_shape(&e).unwrap(), (shape, other));
    }

    #[test]
    fn pair_partitions_round_trip(edges in 1usize..80, seed in any::<u64>()) {
        let t = sample_uniform_tree_edges(edges, &mut SimRng::new(seed, 2));
        let p = pair_partition_from_tree(&t).unwrap();
        prop_assert_eq!(p.polygon(), 2 * edges);
        prop_assert_eq!(tree_from_pair_partition(&p).unwrap(), t);
        let partition = contract_to_partition(&p).unwrap();
        prop_assert_eq!(partition.blocks().iter().map(Vec::len).sum::<usize>(), edges);
        prop_assert!(is_non_crossing(partition.hulls().chords()));
    }

    #[test]
    fn crossing_is_symmetric(a in 0usize..20, b in 0usize..20, c in 0usize..20, d in 0usize..20) {
        let (x, y) = ((a.min(b), a.max(b)), (c.min(d), c.max(d)));
        prop_assert_eq!(crossing(x, y), crossing(y, x));
        prop_assert!(!crossing(x, x));
    }

    #[test]
    fn intersections_count_separating_elements(leaves in 2usize..60, seed in any::<u64>(),
                                                x in 0.0f64..1.0, y in 0.0f64..1.0) {
        let d = dissection_from_tree(&dissection_tree(leaves, seed)).unwrap();
        let m = d.polygon();
        let (alpha, beta) = (x.min(y), x.max(y));
        prop_assume!(alpha < beta && beta < 1.0);
        let count = intersections(&d, alpha, beta).unwrap();
        prop_assert!(count <= m + d.chords().len());
        // Points on the same side are separated by nothing.
        let (ia, ib) = ((alpha * m as f64).floor(), (beta * m as f64).floor());
        if ia == ib && alpha * m as f64 > ia {
            prop_assert_eq!(count, 0);
        }
        prop_assert!(intersections(&d, beta, alpha).is_err());
    }

    #[test]
    fn hausdorff_is_a_semi_metric(leaves in 2usize..30, s1 in any::<u64>(), s2 in any::<u64>()) {
        let a = Lamination::from_diagram(&dissection_from_tree(&dissection_tree(leaves, s1)).unwrap());
        let b = Lamination::from_diagram(&dissection_from_tree(&dissection_tree(leaves, s2)).unwrap());
        let ab = hausdorff(&a, &b, 0.01).unwrap();
        prop_assert!((ab - hausdorff(&b, &a, 0.01).unwrap()).abs() < 1e-12);
        prop_assert!(hausdorff(&a, &a, 0.01).unwrap() < 1e-12);
        prop_assert!((0.0..=2.0).contains(&ab));
    }

    #[test]
    fn report_histogram_sums_to_sample_size(values in prop::collection::vec(0i64..20, 1..300)) {
        let v: Vec<f64> = values.iter().map(|&x| x as f64).collect();
        let r = StatReport::new("dissection", "root-vertex", 10, 1, &v);
        prop_assert_eq!(r.histogram.iter().map(|h| h.1).sum::<u64>() as usize, v.len());
        prop_assert!(r.histogram.windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn total_variation_is_a_probability(values in prop::collection::vec(0i64..40, 100..400)) {
        let mut hist = BTreeMap::new();
        for v in values {
            *hist.entry(v).or_insert(0usize) += 1;
        }
        let tv = total_variation(&hist, limit_pmf_root_vertex, 0, 1e-4).unwrap();
        prop_assert!((0.0..=1.0).contains(&tv));
    }

    #[test]
    fn limit_cdfs_are_monotone(x in 0.0f64..0.6, y in 0.0f64..0.6, l1 in 0.0f64..3.0, l2 in 0.0f64..3.0) {
        let (lo, hi) = (x.min(y), x.max(y));
        prop_assert!(longest_chord_cdf(lo, 1e-10).unwrap() <= longest_chord_cdf(hi, 1e-10).unwrap() + 1e-12);
        let (a, b) = (l1.min(l2), l1.max(l2));
        prop_assert!(kolmogorov_survival(a) >= kolmogorov_survival(b) - 1e-15);
    }
}
