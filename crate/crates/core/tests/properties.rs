mod common;

use common::{
    all_bases, all_partitions, axiom_violations, brute_color_disjoint_bases, brute_disjoint_bases,
    brute_extension, brute_rainbow_bases, random_coloring, random_explicit, random_seeds,
};
use proptest::prelude::*;
use rainbow_matroid::antiramsey::{
    ar_bruteforce, ar_number, ar_rank2_special, avoiding_partition, extremal_coloring, ArBranch,
};
use rainbow_matroid::families::{
    bicircular_matroid, cographic_matroid, graphic_matroid, uniform_matroid, Multigraph,
};
use rainbow_matroid::packing::{
    extension_feasible, find_rainbow_bases, has_color_disjoint_bases, has_disjoint_bases,
    union_rank, SearchOptions,
};
use rainbow_matroid::{color_stats, enumerate_flats, Coloring, Matroid, Subset};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A connected multigraph: a random spanning tree plus extra edges.
fn random_connected(rng: &mut ChaCha8Rng, max_v: usize, max_e: usize) -> Multigraph {
    let v = rng.gen_range(2..=max_v);
    let mut edges: Vec<(usize, usize)> = (1..v).map(|i| (rng.gen_range(0..i), i)).collect();
    let extra = rng.gen_range(0..=max_e.saturating_sub(edges.len()));
    for _ in 0..extra {
        let a = rng.gen_range(0..v);
        let b = (a + rng.gen_range(1..v)) % v;
        edges.push((a.min(b), a.max(b)));
    }
    Multigraph::new(v, edges).unwrap()
}

fn brute_flats(m: &Matroid) -> Vec<Subset> {
    let mut out: Vec<Subset> = m.ground().subsets().filter(|&s| m.is_flat(s).unwrap()).collect();
    out.sort_by_key(|&s| (m.rank(s).unwrap(), s));
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_matroids_satisfy_axioms(seed in any::<u64>()) {
        let m = random_explicit(&mut rng(seed), 8, 4);
        prop_assert!(axiom_violations(&m).is_empty());
    }

    #[test]
    fn graph_families_satisfy_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, 5, 9);
        prop_assert!(axiom_violations(&graphic_matroid(&g).unwrap()).is_empty());
        prop_assert!(axiom_violations(&cographic_matroid(&g).unwrap()).is_empty());
        if g.num_edges() >= g.num_vertices() {
            prop_assert!(axiom_violations(&bicircular_matroid(&g).unwrap()).is_empty());
        }
    }

    #[test]
    fn flats_match_exhaustive_scan(seed in any::<u64>()) {
        let m = random_explicit(&mut rng(seed), 9, 4);
        let flats = enumerate_flats(&m, None).unwrap();
        let sets: Vec<Subset> = flats.iter().map(|f| f.elements).collect();
        prop_assert_eq!(&sets, &brute_flats(&m));
        for f in &flats {
            prop_assert_eq!(f.rank, m.rank(f.elements).unwrap());
        }
        for a in &flats {
            for b in &flats {
                prop_assert!(m.is_flat(a.elements & b.elements).unwrap());
            }
        }
        let capped = enumerate_flats(&m, Some(1)).unwrap();
        let expected: Vec<_> = flats.iter().copied().filter(|f| f.rank <= 1).collect();
        prop_assert_eq!(capped, expected);
    }

    #[test]
    fn closure_is_the_smallest_flat_above(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 9, 4);
        let s = Subset::from_bits(r.gen::<u64>() & m.ground().bits());
        let cl = m.closure(s).unwrap();
        prop_assert_eq!(m.rank(cl).unwrap(), m.rank(s).unwrap());
        for f in enumerate_flats(&m, None).unwrap() {
            if s.is_subset_of(f.elements) {
                prop_assert!(cl.is_subset_of(f.elements));
            }
        }
    }

    #[test]
    fn greedy_basis_is_maximal(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 9, 4);
        let s = Subset::from_bits(r.gen::<u64>() & m.ground().bits());
        let forbidden = Subset::from_bits(r.gen::<u64>() & s.bits());
        let b = m.greedy_basis(s, forbidden).unwrap();
        prop_assert!(b.is_subset_of(s - forbidden));
        prop_assert!(m.is_independent(b).unwrap());
        prop_assert_eq!(b.len(), m.rank(s - forbidden).unwrap());
    }

    #[test]
    fn color_stats_identity(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 9, 4);
        let c = random_coloring(&mut r, m.ground_size());
        for f in enumerate_flats(&m, None).unwrap() {
            let st = color_stats(&m, &c, &f).unwrap();
            let outside = c.color_count(m.ground() - f.elements);
            prop_assert_eq!(outside + f.len(), c.num_colors() + st.eta + st.xi);
            prop_assert_eq!(st.eta, f.len() - c.color_count(f.elements));
        }
    }

    #[test]
    fn disjoint_bases_match_exhaustive(seed in any::<u64>(), t in 1usize..=3) {
        let m = random_explicit(&mut rng(seed), 8, 3);
        let bases = all_bases(&m);
        let cert = has_disjoint_bases(&m, t).unwrap();
        prop_assert_eq!(cert.is_feasible(), brute_disjoint_bases(&bases, t));
        prop_assert_eq!(cert.is_feasible(), union_rank(&m, t).unwrap() == t * m.full_rank());
        if let Some(w) = cert.witness() {
            prop_assert!(w.is_valid(&m));
            prop_assert_eq!(w.len(), t);
        }
        if let Some(v) = cert.violation() {
            prop_assert!(v.lhs < v.rhs);
        }
    }

    #[test]
    fn rainbow_search_matches_exhaustive(seed in any::<u64>(), t in 1usize..=3) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 8, 3);
        let c = random_coloring(&mut r, m.ground_size());
        let found = find_rainbow_bases(&m, &c, t).unwrap();
        prop_assert_eq!(found.is_some(), brute_rainbow_bases(&all_bases(&m), &c, t));
        if let Some(p) = found {
            prop_assert!(p.is_valid_rainbow(&m, &c));
        }
        let plain = find_rainbow_bases(&m, &c, t).unwrap();
        let unpruned = rainbow_matroid::packing::find_rainbow_bases_with(
            &m,
            &c,
            t,
            SearchOptions { flat_pruning: false, ..SearchOptions::default() },
        )
        .unwrap();
        prop_assert_eq!(plain.is_some(), unpruned.is_some());
    }

    #[test]
    fn color_disjoint_matches_exhaustive(seed in any::<u64>(), t in 1usize..=3) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 8, 3);
        let c = random_coloring(&mut r, m.ground_size());
        let cert = has_color_disjoint_bases(&m, &c, t).unwrap();
        prop_assert_eq!(cert.is_feasible(), brute_color_disjoint_bases(&all_bases(&m), &c, t));
        if let Some(w) = cert.witness() {
            prop_assert!(w.is_valid_color_disjoint(&m, &c));
        }
    }

    #[test]
    fn extension_matches_exhaustive(seed in any::<u64>(), t in 1usize..=3) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 8, 3);
        let c = random_coloring(&mut r, m.ground_size());
        let seeds = random_seeds(&mut r, &m, &c, t);
        let cert = extension_feasible(&m, &c, &seeds).unwrap();
        prop_assert_eq!(cert.is_feasible(), brute_extension(&all_bases(&m), &c, &seeds));
        if let Some(w) = cert.witness() {
            prop_assert!(w.is_valid_extension(&m, &c, &seeds));
        }
    }

    #[test]
    fn feasibility_is_monotone_in_t(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 8, 3);
        let c = random_coloring(&mut r, m.ground_size());
        for t in 1..3 {
            if has_disjoint_bases(&m, t + 1).unwrap().is_feasible() {
                prop_assert!(has_disjoint_bases(&m, t).unwrap().is_feasible());
            }
            if has_color_disjoint_bases(&m, &c, t + 1).unwrap().is_feasible() {
                prop_assert!(has_color_disjoint_bases(&m, &c, t).unwrap().is_feasible());
            }
            if find_rainbow_bases(&m, &c, t + 1).unwrap().is_some() {
                prop_assert!(find_rainbow_bases(&m, &c, t).unwrap().is_some());
            }
        }
    }

    #[test]
    fn rainbow_search_ignores_names(seed in any::<u64>(), t in 1usize..=2) {
        let mut r = rng(seed);
        let m = random_explicit(&mut r, 8, 3);
        let n = m.ground_size();
        let c = random_coloring(&mut r, n);
        let expected = find_rainbow_bases(&m, &c, t).unwrap().is_some();

        let mut names: Vec<usize> = (0..c.num_colors()).map(|k| 7 * k + 3).collect();
        names.shuffle(&mut r);
        let renamed: Vec<usize> = c.labels().iter().map(|&k| names[k]).collect();
        let renamed = Coloring::from_labels(&renamed).unwrap();
        prop_assert_eq!(find_rainbow_bases(&m, &renamed, t).unwrap().is_some(), expected);

        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let moved = m.relabel(&perm).unwrap();
        let labels = c.labels();
        let moved_c = Coloring::from_labels(&perm.iter().map(|&p| labels[p]).collect::<Vec<_>>()).unwrap();
        prop_assert_eq!(find_rainbow_bases(&moved, &moved_c, t).unwrap().is_some(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn formula_matches_brute_force(seed in any::<u64>(), t in 1usize..=3) {
        let m = random_explicit(&mut rng(seed), 7, 3);
        prop_assume!(m.full_rank() >= 2);
        let ar = ar_number(&m, t).unwrap();
        prop_assert_eq!(ar.value, ar_bruteforce(&m, t).unwrap());
        if ar.value < m.ground_size() {
            prop_assert!(avoiding_partition(&m, t, ar.value + 1, SearchOptions::default()).unwrap().is_none());
        }
    }

    #[test]
    fn every_coloring_above_ar_has_packing(seed in any::<u64>(), t in 1usize..=2) {
        let m = random_explicit(&mut rng(seed), 6, 3);
        prop_assume!(m.full_rank() >= 2);
        let ar = ar_number(&m, t).unwrap().value;
        for labels in all_partitions(m.ground_size()) {
            let c = Coloring::from_labels(&labels).unwrap();
            if c.num_colors() > ar {
                prop_assert!(find_rainbow_bases(&m, &c, t).unwrap().is_some(), "{:?}", labels);
            }
        }
    }

    #[test]
    fn extremal_coloring_is_tight(seed in any::<u64>(), t in 1usize..=3) {
        let m = random_explicit(&mut rng(seed), 9, 4);
        prop_assume!(m.full_rank() >= 2);
        let ar = ar_number(&m, t).unwrap();
        let ex = extremal_coloring(&m, t).unwrap();
        prop_assert_eq!(ex.coloring.num_colors(), ar.value);
        prop_assert!(find_rainbow_bases(&m, &ex.coloring, t).unwrap().is_none());
    }

    #[test]
    fn ar_is_monotone_in_t(seed in any::<u64>()) {
        let m = random_explicit(&mut rng(seed), 9, 4);
        prop_assume!(m.full_rank() >= 2);
        let values: Vec<usize> = (1..=4).map(|t| ar_number(&m, t).unwrap().value).collect();
        prop_assert!(values.windows(2).all(|w| w[0] <= w[1]), "{:?}", values);
        prop_assert!(values.iter().all(|&v| v <= m.ground_size()));
    }

    #[test]
    fn argmax_attains_the_maximum(seed in any::<u64>(), t in 1usize..=3) {
        let m = random_explicit(&mut rng(seed), 9, 4);
        prop_assume!(m.full_rank() >= 2);
        let ar = ar_number(&m, t).unwrap();
        let r = m.full_rank();
        let flats = enumerate_flats(&m, None).unwrap();
        match ar.branch {
            ArBranch::Formula => {
                let f = ar.argmax_flat.unwrap();
                prop_assert!(f.rank + 2 <= r);
                prop_assert_eq!(ar.value, f.len() + t * (r - f.rank - 1));
                let first = flats
                    .iter()
                    .filter(|g| g.rank + 2 <= r)
                    .find(|g| g.len() + t * (r - g.rank - 1) == ar.value);
                prop_assert_eq!(first, Some(&f));
                prop_assert!(flats.iter().all(|g| m.ground_size() - g.len() >= t * (r - g.rank)));
            }
            ArBranch::Degenerate => {
                prop_assert_eq!(ar.value, m.ground_size());
                let f = ar.degenerate_flat.unwrap();
                prop_assert!(m.ground_size() - f.len() < t * (r - f.rank));
            }
            other => prop_assert!(false, "unexpected branch {other}"),
        }
    }

    #[test]
    fn rank_two_split_agrees(seed in any::<u64>(), t in 1usize..=4) {
        let m = random_explicit(&mut rng(seed), 10, 2);
        prop_assume!(m.full_rank() == 2);
        prop_assert_eq!(ar_rank2_special(&m, t).unwrap(), ar_number(&m, t).unwrap().value);
    }

    #[test]
    fn graphic_flats_are_vertex_partitions(seed in any::<u64>()) {
        let g = random_connected(&mut rng(seed), 6, 10);
        let m = graphic_matroid(&g).unwrap();
        let v = g.num_vertices();
        for f in enumerate_flats(&m, None).unwrap() {
            let mut uf = g.components_of(f.elements);
            let blocks = uf.components();
            prop_assert_eq!(blocks, v - f.rank);
            prop_assert_eq!(m.full_rank() + 1 - f.rank, blocks);
            let inside = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(_, &(a, b))| uf.find(a) == uf.find(b))
                .map(|(i, _)| i);
            prop_assert_eq!(Subset::from_indices(inside), f.elements);
        }
    }

    #[test]
    fn family_rank_identities(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, 6, 10);
        let m = graphic_matroid(&g).unwrap();
        let co = cographic_matroid(&g).unwrap();
        let e = m.ground();
        let s = Subset::from_bits(r.gen::<u64>() & e.bits());
        prop_assert_eq!(co.rank(s).unwrap(), s.len() + m.rank(e - s).unwrap() - m.full_rank());
        prop_assert_eq!(m.rank(s).unwrap(), g.num_vertices() - g.components_of(s).components());

        let n = r.gen_range(1..=10);
        let k = r.gen_range(0..=n);
        let u = uniform_matroid(k, n).unwrap();
        let s = Subset::from_bits(r.gen::<u64>() & u.ground().bits());
        prop_assert_eq!(u.rank(s).unwrap(), s.len().min(k));
    }
}
