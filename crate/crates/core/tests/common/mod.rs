//! Instances, random generators and exhaustive reference searches shared by
//! the integration tests. Nothing here calls into the packing module.

#![allow(dead_code)]

use rainbow_matroid::families::{
    bases_of, bicircular_matroid, cographic_matroid, complete_graph, cube_matroid,
    explicit_matroid, graphic_matroid, linear_matroid, signed_complete_graph, signed_matroid,
    transversal_matroid, uniform_matroid, ExplicitBases, Field, Multigraph, SetFamily, VectorList,
};
use rainbow_matroid::{Coloring, Matroid, Subset};
use rand::seq::SliceRandom;
use rand::Rng;

/// One small instance per family, each with at most 12 elements.
pub fn family_zoo() -> Vec<(&'static str, Matroid)> {
    let k5 = complete_graph(5);
    let prism = Multigraph::new(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)])
        .unwrap();
    let transversal = SetFamily::new(
        10,
        vec![
            Subset::from_indices([0, 1, 2, 3]),
            Subset::from_indices([3, 4, 5]),
            Subset::from_indices([5, 6, 7, 0]),
            Subset::from_indices([7, 8, 9]),
            Subset::from_indices([9, 1]),
        ],
    )
    .unwrap();
    let gf3 = VectorList::from_integers(
        Field::Prime(3),
        3,
        &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 2, 0],
            vec![1, 1, 1],
            vec![2, 2, 2],
            vec![0, 1, 2],
            vec![0, 0, 0],
            vec![1, 0, 2],
        ],
    )
    .unwrap();
    let rational = VectorList::from_integers(
        Field::Rational,
        3,
        &[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![1, 1, 0],
            vec![1, -1, 0],
            vec![2, 3, 5],
            vec![4, 6, 10],
            vec![0, 0, 7],
            vec![1, 2, 3],
        ],
    )
    .unwrap();
    let fano_like = explicit_from(&linear_matroid(
        &VectorList::from_integers(
            Field::Prime(2),
            3,
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]],
        )
        .unwrap(),
    )
    .unwrap());
    vec![
        ("graphic K5", graphic_matroid(&k5).unwrap()),
        ("bicircular K5", bicircular_matroid(&k5).unwrap()),
        ("cographic prism", cographic_matroid(&prism).unwrap()),
        ("signed ±K4", signed_matroid(&signed_complete_graph(4)).unwrap()),
        ("transversal", transversal_matroid(&transversal).unwrap()),
        ("linear GF(3)", linear_matroid(&gf3).unwrap()),
        ("linear rational", linear_matroid(&rational).unwrap()),
        ("uniform U(3,7)", uniform_matroid(3, 7).unwrap()),
        ("cube {0,1}^3 GF(2)", cube_matroid(&[0, 1], 3, Field::Prime(2)).unwrap()),
        ("explicit Fano", fano_like),
        ("relabeled K5", graphic_matroid(&k5).unwrap().relabel(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]).unwrap()),
    ]
}

pub fn explicit_from(m: &Matroid) -> Matroid {
    explicit_matroid(&ExplicitBases::new(m.ground_size(), bases_of(m)).unwrap()).unwrap()
}

/// A random matroid on at most `max_n` elements with rank between 1 and
/// `max_rank`, from random vectors or a random multigraph, re-encoded as
/// explicit bases.
pub fn random_explicit<R: Rng>(rng: &mut R, max_n: usize, max_rank: usize) -> Matroid {
    loop {
        let n = rng.gen_range(1..=max_n);
        let m = if rng.gen_bool(0.5) {
            let p = *[2u64, 3, 5].choose(rng).unwrap();
            let d = rng.gen_range(1..=max_rank);
            let vectors: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.gen_range(0..p as i64)).collect())
                .collect();
            linear_matroid(&VectorList::from_integers(Field::Prime(p), d, &vectors).unwrap()).unwrap()
        } else {
            let v = rng.gen_range(2..=max_rank + 1);
            let edges: Vec<(usize, usize)> = (0..n)
                .map(|_| {
                    let a = rng.gen_range(0..v);
                    let mut b = rng.gen_range(0..v - 1);
                    if b >= a {
                        b += 1;
                    }
                    (a, b)
                })
                .collect();
            graphic_matroid(&Multigraph::new(v, edges).unwrap()).unwrap()
        };
        if m.full_rank() >= 1 && m.full_rank() <= max_rank {
            return explicit_from(&m);
        }
    }
}

pub fn random_coloring<R: Rng>(rng: &mut R, n: usize) -> Coloring {
    let k = rng.gen_range(1..=n.max(1));
    let labels: Vec<usize> = (0..n).map(|_| rng.gen_range(0..k)).collect();
    Coloring::from_labels(&labels).unwrap()
}

/// `t` pairwise disjoint independent sets whose union is rainbow, built by
/// dealing elements in random order.
pub fn random_seeds<R: Rng>(rng: &mut R, m: &Matroid, c: &Coloring, t: usize) -> Vec<Subset> {
    let mut seeds = vec![Subset::EMPTY; t];
    let mut order: Vec<usize> = (0..m.ground_size()).collect();
    order.shuffle(rng);
    let mut colors = 0u64;
    for e in order {
        if !rng.gen_bool(0.4) || colors & (1 << c.color(e)) != 0 {
            continue;
        }
        let j = rng.gen_range(0..t);
        let grown = seeds[j].with(e);
        if m.is_independent(grown).unwrap() {
            seeds[j] = grown;
            colors |= 1 << c.color(e);
        }
    }
    seeds
}

pub fn all_bases(m: &Matroid) -> Vec<Subset> {
    m.ground()
        .subsets()
        .filter(|&s| m.is_basis(s).unwrap())
        .collect()
}

/// A basis choice for one slot: the basis and the colors it spends from the
/// shared pool.
#[derive(Clone, Copy)]
struct Choice {
    basis: Subset,
    colors: u64,
}

/// Picks one choice per slot so that bases are pairwise disjoint and spent
/// colors never overlap. With `interchangeable`, all slots share one list
/// and choices are taken in increasing index order.
fn pick(slots: &[Vec<Choice>], interchangeable: bool, spend_colors: bool) -> bool {
    fn go(
        slots: &[Vec<Choice>],
        i: usize,
        from: usize,
        used: Subset,
        colors: u64,
        interchangeable: bool,
        spend: bool,
    ) -> bool {
        if i == slots.len() {
            return true;
        }
        let start = if interchangeable { from } else { 0 };
        for (k, ch) in slots[i].iter().enumerate().skip(start) {
            if !ch.basis.is_disjoint(used) || (spend && ch.colors & colors != 0) {
                continue;
            }
            if go(slots, i + 1, k + 1, used | ch.basis, colors | ch.colors, interchangeable, spend) {
                return true;
            }
        }
        false
    }
    go(slots, 0, 0, Subset::EMPTY, 0, interchangeable, spend_colors)
}

/// Exhaustive: `t` pairwise disjoint bases.
pub fn brute_disjoint_bases(bases: &[Subset], t: usize) -> bool {
    let list: Vec<Choice> = bases.iter().map(|&basis| Choice { basis, colors: 0 }).collect();
    pick(&vec![list; t], true, false)
}

/// Exhaustive: `t` pairwise disjoint rainbow bases (colors may repeat
/// between bases).
pub fn brute_rainbow_bases(bases: &[Subset], c: &Coloring, t: usize) -> bool {
    let list: Vec<Choice> = bases
        .iter()
        .filter(|&&b| c.is_rainbow(b))
        .map(|&basis| Choice { basis, colors: 0 })
        .collect();
    pick(&vec![list; t], true, false)
}

/// Exhaustive: `t` bases whose union is rainbow.
pub fn brute_color_disjoint_bases(bases: &[Subset], c: &Coloring, t: usize) -> bool {
    let list: Vec<Choice> = bases
        .iter()
        .filter(|&&b| c.is_rainbow(b))
        .map(|&basis| Choice {
            basis,
            colors: c.colors_in(basis),
        })
        .collect();
    pick(&vec![list; t], true, true)
}

/// Exhaustive: each seed grows into a basis, the added elements all carry
/// distinct colors not used by any seed, and the bases are disjoint.
pub fn brute_extension(bases: &[Subset], c: &Coloring, seeds: &[Subset]) -> bool {
    let seeded = seeds.iter().fold(Subset::EMPTY, |a, &s| a | s);
    let seed_colors = c.colors_in(seeded);
    let slots: Vec<Vec<Choice>> = seeds
        .iter()
        .map(|&s| {
            bases
                .iter()
                .filter(|&&b| s.is_subset_of(b))
                .filter(|&&b| c.is_rainbow(b - s) && c.colors_in(b - s) & seed_colors == 0)
                .map(|&basis| Choice {
                    basis,
                    colors: c.colors_in(basis - s),
                })
                .collect()
        })
        .collect();
    pick(&slots, false, true)
}

/// All colorings of `n` elements up to renaming, as canonical label vectors.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, prefix: &mut Vec<usize>, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            go(n, prefix, blocks.max(b + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), 0, &mut out);
    out
}

/// Counts violations of the independence, rank and closure axioms over all
/// subsets. Returns a description of the first few.
pub fn axiom_violations(m: &Matroid) -> Vec<String> {
    let n = m.ground_size();
    let size = 1usize << n;
    let mut bad = Vec::new();
    let mut note = |s: String| {
        if bad.len() < 5 {
            bad.push(s);
        }
    };
    let indep: Vec<bool> = (0..size).map(|b| m.is_independent(Subset::from_bits(b as u64)).unwrap()).collect();
    let rank: Vec<usize> = (0..size).map(|b| m.rank(Subset::from_bits(b as u64)).unwrap()).collect();
    let cl: Vec<u64> = (0..size).map(|b| m.closure(Subset::from_bits(b as u64)).unwrap().bits()).collect();
    let subset = |b: usize| Subset::from_bits(b as u64);

    // (I1) hereditary
    if !indep[0] {
        note("empty set is dependent".into());
    }
    for b in 0..size {
        if indep[b] {
            for x in subset(b) {
                if !indep[b & !(1 << x)] {
                    note(format!("I1: {} independent but {} is not", subset(b), subset(b).without(x)));
                }
            }
        }
    }
    // (I2) exchange
    let extend: Vec<u64> = (0..size)
        .map(|a| {
            if !indep[a] {
                return 0;
            }
            (0..n).filter(|&x| a & (1 << x) == 0 && indep[a | 1 << x]).fold(0u64, |acc, x| acc | 1 << x)
        })
        .collect();
    let independents: Vec<usize> = (0..size).filter(|&b| indep[b]).collect();
    for &a in &independents {
        let la = (a as u64).count_ones();
        for &b in &independents {
            if (b as u64).count_ones() > la && (b as u64) & !(a as u64) & extend[a] == 0 {
                note(format!("I2: cannot augment {} from {}", subset(a), subset(b)));
            }
        }
    }
    for s in 0..size {
        let ls = (s as u64).count_ones() as usize;
        // (R1)
        if rank[s] > ls {
            note(format!("R1: r({}) = {}", subset(s), rank[s]));
        }
        // rank agrees with independence
        if indep[s] != (rank[s] == ls) {
            note(format!("rank and independence disagree on {}", subset(s)));
        }
        // (S1), (S2)
        if cl[s] & s as u64 != s as u64 {
            note(format!("S1: {} not inside its closure", subset(s)));
        }
        if cl[cl[s] as usize] != cl[s] {
            note(format!("S2: closure of {} is not closed", subset(s)));
        }
        for x in 0..n {
            if s & (1 << x) != 0 {
                continue;
            }
            let sx = s | 1 << x;
            // (R2) on covers; monotonicity follows along chains
            if rank[sx] < rank[s] || rank[sx] > rank[s] + 1 {
                note(format!("R2: r({}) vs r({})", subset(s), subset(sx)));
            }
            // (S3) on covers
            if cl[s] & !cl[sx] != 0 {
                note(format!("S3: cl({}) not inside cl({})", subset(s), subset(sx)));
            }
            // (S4)
            if cl[s] & (1 << x) == 0 {
                for y in 0..n {
                    let sy = s | 1 << y;
                    if cl[sy] & (1 << x) != 0 && cl[sx] & (1 << y) == 0 {
                        note(format!("S4: x={x} y={y} S={}", subset(s)));
                    }
                }
            }
        }
    }
    // (R3) over all pairs
    for s in 0..size {
        for t in s..size {
            if rank[s] + rank[t] < rank[s | t] + rank[s & t] {
                note(format!("R3: {} and {}", subset(s), subset(t)));
            }
        }
    }
    // (R2) and (S3) over all comparable pairs
    for t in 0..size {
        for s in subset(t).subsets() {
            let s = s.bits() as usize;
            if rank[s] > rank[t] || cl[s] & !cl[t] != 0 {
                note(format!("R2/S3: {} inside {}", subset(s), subset(t)));
            }
        }
    }
    bad
}
