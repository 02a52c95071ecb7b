mod common;

use common::{brute_force_identifying, bfs, is_code, random_graph, tile_code, v2};
use idcode::bounds::{binomial, f_value, lattice_lower, log_lower, trivial_lower};
use idcode::constructions::{
    dominating_code, hamming_dominating_set, hex_code, lattice_r_code, lift_dimension, KVariant,
};
use idcode::grid::lattice_ball_sizes;
use idcode::model::{window, FiniteGraph, PeriodicCode};
use idcode::search::{min_identifying_code, Mode};
use idcode::verifier::{admits_code, verify_finite, verify_periodic};
use idcode::{GridKind, Vertex};
use proptest::prelude::*;

const GRIDS: [GridKind; 5] = [
    GridKind::Square,
    GridKind::Hex,
    GridKind::Triangular,
    GridKind::King,
    GridKind::Lattice(3),
];

fn graph_strategy(max_n: usize) -> impl Strategy<Value = FiniteGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0..n, 0..n), 0..3 * n).prop_map(move |e| random_graph(n, &e))
    })
}

// ---------------------------------------------------------------- grids

#[test]
fn hex_distance_matches_bfs() {
    for src in [v2(0, 0), v2(1, 0)] {
        let dist = bfs(GridKind::Hex, &src, 40);
        for dx in -12..=12 {
            for dy in -12..=12 {
                let t = src.offset(&[dx, dy]);
                assert_eq!(
                    GridKind::Hex.distance(&src, &t).unwrap(),
                    dist[&t],
                    "{src} -> {t}"
                );
            }
        }
    }
}

#[test]
fn ball_recurrence_matches_point_count() {
    for n in 1..=4usize {
        let sizes = lattice_ball_sizes(n, 6);
        for r in 0..=6i64 {
            let mut count = 0u128;
            let side = (2 * r + 1) as u32;
            for idx in 0..side.pow(n as u32) {
                let mut rest = idx;
                let mut norm = 0;
                for _ in 0..n {
                    norm += ((rest % side) as i64 - r).abs();
                    rest /= side;
                }
                if norm <= r {
                    count += 1;
                }
            }
            assert_eq!(sizes[r as usize], count, "n = {n}, r = {r}");
        }
    }
}

#[test]
fn even_path_lemma() {
    let mut rng_state = 17u64;
    for _ in 0..50 {
        rng_state = rng_state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let x = (rng_state >> 33) as i64 % 41 - 20;
        let y = (rng_state >> 13) as i64 % 41 - 20;
        let src = v2(x, y);
        for k in 1..=6i64 {
            for j in 0..=k {
                for sign in [-1, 1] {
                    let t = v2(x - k + 2 * j, y + sign * k);
                    assert!(GridKind::Hex.distance(&src, &t).unwrap() <= 2 * k as u64);
                }
            }
        }
    }
}

#[test]
fn line_segment_lemma() {
    for (x, y) in [(0, 0), (1, 0), (3, -2), (-4, 5)] {
        let src = v2(x, y);
        for r in 1..=6i64 {
            for k in y - r..=y + r {
                let line_dist = (x - 3 * r..=x + 3 * r)
                    .map(|lx| GridKind::Hex.distance(&src, &v2(lx, k)).unwrap())
                    .min()
                    .unwrap();
                if line_dist >= r as u64 {
                    continue;
                }
                let span = r - (y - k).abs();
                for j in 0..=2 * span {
                    let t = v2(x - span + j, k);
                    assert!(GridKind::Hex.distance(&src, &t).unwrap() <= r as u64, "{src} {t}");
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn ball_size_is_vertex_independent(
        gi in 0..GRIDS.len(),
        r in 0u32..=5,
        x in -50i64..50,
        y in -50i64..50,
        z in -50i64..50,
    ) {
        let grid = GRIDS[gi];
        let coords: Vec<i64> = [x, y, z][..grid.dimension()].to_vec();
        let ball = grid.ball(&Vertex::new(coords), r).unwrap();
        prop_assert_eq!(ball.len() as u64, grid.ball_size(r));
    }

    #[test]
    fn distance_is_a_metric(
        gi in 0..GRIDS.len(),
        pts in prop::collection::vec(prop::collection::vec(-8i64..8, 3), 3),
    ) {
        let grid = GRIDS[gi];
        let d = grid.dimension();
        let [a, b, c] = [0, 1, 2].map(|i| Vertex::new(pts[i][..d].to_vec()));
        let dist = |p: &Vertex, q: &Vertex| grid.distance(p, q).unwrap();
        prop_assert_eq!(dist(&a, &a), 0);
        prop_assert_eq!(dist(&a, &b), dist(&b, &a));
        prop_assert_eq!(dist(&a, &b) == 0, a == b);
        prop_assert!(dist(&a, &c) <= dist(&a, &b) + dist(&b, &c));
    }
}

#[test]
fn window_adjacency_round_trips() {
    for grid in GRIDS {
        let m = 3;
        let g = window(grid, m).unwrap();
        let labels = g.labels().unwrap();
        for (i, p) in labels.iter().enumerate() {
            let mut expect: Vec<usize> = grid
                .neighbors(p)
                .unwrap()
                .iter()
                .filter_map(|q| g.index_of_label(q))
                .collect();
            expect.sort_unstable();
            let mut got = g.neighbors(i).to_vec();
            got.sort_unstable();
            assert_eq!(got, expect, "{grid} at {p}");
        }
    }
}

// ---------------------------------------------------------------- codes

proptest! {
    #[test]
    fn canonical_form_keeps_density_and_members(
        w in 1i64..5,
        h in 1i64..5,
        shear in -3i64..4,
        bits in prop::collection::vec(any::<bool>(), 16),
    ) {
        let Some(code) = tile_code(GridKind::Square, w, h, &bits) else { return Ok(()) };
        // same lattice with sheared generators, base points moved by periods
        let period = [vec![w, 0], vec![shear * w, h]];
        let moved: Vec<Vertex> = code
            .base()
            .iter()
            .enumerate()
            .map(|(i, b)| b.offset(&[w * (i as i64 % 3), -h * (i as i64 % 2)]))
            .collect();
        let other = PeriodicCode::new(GridKind::Square, &period, &moved).unwrap();
        prop_assert_eq!(other.density(), code.density());
        prop_assert_eq!(code.canonicalize().density(), code.density());
        prop_assert_eq!(other.canonicalize(), code.canonicalize());
        for x in -6..6 {
            for y in -6..6 {
                prop_assert_eq!(other.member(&v2(x, y)).unwrap(), code.member(&v2(x, y)).unwrap());
            }
        }
    }

    #[test]
    fn membership_is_period_invariant(
        w in 1i64..6,
        h in 1i64..6,
        bits in prop::collection::vec(any::<bool>(), 36),
        probes in prop::collection::vec((-40i64..40, -40i64..40), 100),
    ) {
        let Some(code) = tile_code(GridKind::King, w, h, &bits) else { return Ok(()) };
        for (x, y) in probes {
            let here = code.member(&v2(x, y)).unwrap();
            for p in code.period() {
                prop_assert_eq!(code.member(&v2(x + p[0], y + p[1])).unwrap(), here);
            }
        }
    }

    #[test]
    fn window_count_equals_density(
        w in prop::sample::select(vec![1i64, 3, 5]),
        h in prop::sample::select(vec![1i64, 3, 5]),
        bits in prop::collection::vec(any::<bool>(), 25),
    ) {
        let Some(code) = tile_code(GridKind::Square, w, h, &bits) else { return Ok(()) };
        // 2m + 1 = 15 is a multiple of both periods
        let count = code.codewords_in_window(7).len() as i64;
        prop_assert_eq!(
            idcode::model::Rational::new(count.into(), 225.into()),
            code.density()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn reduction_agrees_with_brute_force(
        hex in any::<bool>(),
        r in 1u32..=2,
        wi in 0usize..3,
        hi in 0usize..3,
        bits in prop::collection::vec(prop::bool::weighted(0.4), 16),
    ) {
        // periods small enough that every collision has a translate inside Q_{3r}
        let (grid, sides): (GridKind, &[i64]) = match (hex, r) {
            (true, 1) => (GridKind::Hex, &[2]),
            (true, _) => (GridKind::Hex, &[2, 4]),
            (false, 1) => (GridKind::Square, &[1, 2, 3]),
            (false, _) => (GridKind::Square, &[2, 3, 4]),
        };
        let (w, h) = (sides[wi % sides.len()], sides[hi % sides.len()]);
        let Some(code) = tile_code(grid, w, h, &bits) else { return Ok(()) };
        let fast = verify_periodic(&code, r).unwrap().is_identifying();
        prop_assert_eq!(fast, brute_force_identifying(&code, r));
    }
}

#[test]
fn hex_code_agrees_with_brute_force() {
    let code = hex_code(2).unwrap();
    assert!(brute_force_identifying(&code, 2));
    assert!(!brute_force_identifying(&code, 3));
    assert!(!verify_periodic(&code, 3).unwrap().is_identifying());
}

// ---------------------------------------------------------------- finite graphs

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn supersets_of_codes_are_codes(
        g in graph_strategy(10),
        r in 1u32..=2,
        pick in prop::collection::vec(any::<bool>(), 10),
        extra in prop::collection::vec(any::<bool>(), 10),
    ) {
        prop_assume!(admits_code(&g, r).0);
        let n = g.n();
        let mut code: Vec<usize> = (0..n).filter(|&i| pick[i]).collect();
        if !is_code(&g, &code, r) {
            code = (0..n).collect();
        }
        prop_assert!(is_code(&g, &code, r));
        let mut bigger = code.clone();
        bigger.extend((0..n).filter(|&i| extra[i] && !code.contains(&i)));
        bigger.sort_unstable();
        prop_assert!(is_code(&g, &bigger, r));
    }

    #[test]
    fn ell_two_codes_are_codes(
        g in graph_strategy(8),
        r in 1u32..=2,
        pick in prop::collection::vec(any::<bool>(), 8),
    ) {
        let code: Vec<usize> = (0..g.n()).filter(|&i| pick[i]).collect();
        if verify_finite(&g, &code, r, 2).unwrap().is_identifying() {
            prop_assert!(is_code(&g, &code, r));
        }
    }

    #[test]
    fn min_code_is_optimal(g in graph_strategy(12), r in 1u32..=2) {
        prop_assume!(admits_code(&g, r).0);
        let best = min_identifying_code(&g, r, Mode::Standard).unwrap();
        prop_assert!(is_code(&g, &best.set, r));
        prop_assert_eq!(best.set.len(), best.size);
        let n = g.n();
        for mask in 0u32..1 << n {
            if (mask.count_ones() as usize) < best.size {
                let set: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                prop_assert!(!is_code(&g, &set, r), "smaller code {:?}", set);
            }
        }
    }

    #[test]
    fn blass_inequality(g in graph_strategy(10), r in 1u32..=2) {
        prop_assume!(admits_code(&g, r).0);
        let m = min_identifying_code(&g, r, Mode::Standard).unwrap().size;
        let mbar = min_identifying_code(&g, r, Mode::AllowOneEmpty).unwrap().size;
        prop_assert!(mbar <= m && m <= mbar + 1, "M = {}, M-bar = {}", m, mbar);
    }
}

// ---------------------------------------------------------------- bounds

proptest! {
    #[test]
    fn f_recurrence(n in 0u64..=300, k in 1u64..=8, s_pick in 0u64..8) {
        let s = 1 + s_pick % k;
        let sum: i128 = (1..=s).map(|i| binomial(k, i) as i128).sum();
        prop_assert_eq!(f_value(n, k, s), f_value(n, k, s - 1) + n as i128 - sum);
    }

    #[test]
    fn log_lower_is_least_exponent(nv in 0u64..1 << 40) {
        let t = log_lower(nv);
        prop_assert!((1u128 << t) - 1 >= nv as u128);
        prop_assert!(t == 0 || (1u128 << (t - 1)) - 1 < nv as u128);
    }
}

#[test]
fn generated_densities_respect_lower_bounds() {
    for r in 2..=7 {
        let code = hex_code(r).unwrap();
        assert!(code.density() >= trivial_lower(GridKind::Hex, r), "hex r = {r}");
    }
    for k in 2..=3 {
        let n = (1 << k) - 1;
        let code = dominating_code(n, &hamming_dominating_set(k).unwrap()).unwrap();
        assert!(code.density() >= lattice_lower(n, 1));
        let lifted = lift_dimension(&code, 1).unwrap();
        assert!(lifted.density() >= lattice_lower(n + 1, 1));
    }
    for (n, r0, variant) in [(2, 3, KVariant::PaperK), (3, 4, KVariant::PaperK), (2, 6, KVariant::AltK)] {
        let code = lattice_r_code(n, r0, variant).unwrap();
        assert!(verify_periodic(&code, r0).unwrap().is_identifying());
        assert!(code.density() >= lattice_lower(n, r0));
    }
}

#[test]
fn gadget_codes_are_optimal() {
    for k in 2..=5 {
        for s in 1..=2.min(k - 1) {
            let (g, code) = idcode::constructions::subset_code_graph(k, s).unwrap();
            assert_eq!(code.len(), k);
            let best = min_identifying_code(&g, 1, Mode::Standard).unwrap();
            assert_eq!(best.size, k, "k = {k}, s = {s}, n = {}", g.n());
        }
    }
}
