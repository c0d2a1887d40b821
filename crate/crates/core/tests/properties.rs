use proptest::prelude::*;
use sqen_core::checks::{chromatic_number, run_suite, Suite, DEFAULT_REL_TOL};
use sqen_core::graph::{blowup, canonical_form, encode_graph6, parse_graph6, Graph};
use sqen_core::spectral::{
    eigenvalues_only, exact_inertia, inertia, spectral_resolution, square_energies, Spectrum,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn spec(g: &Graph) -> Spectrum<f64> {
    eigenvalues_only(g).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn graph6_round_trip(g in graph(70)) {
        let back = parse_graph6(&encode_graph6(&g)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn handshake(g in graph(40)) {
        let total: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(total, 2 * g.m());
    }

    #[test]
    fn moments_and_energy_total(g in graph(24)) {
        let s = spec(&g);
        let m2 = 2.0 * g.m() as f64;
        let scale = m2.max(1.0);
        prop_assert!(s.trace().abs() <= 1e-9 * scale);
        prop_assert!((s.sum_of_squares() - m2).abs() <= 1e-9 * scale);
        let e = square_energies(&s, None);
        prop_assert!((e.s_plus + e.s_minus - m2).abs() <= 1e-9 * scale);
        prop_assert!(e.s_plus >= -1e-12 && e.s_minus >= -1e-12);
    }

    #[test]
    fn blowup_scales_energies(g in graph(7), t in 1usize..=3) {
        let e = square_energies(&spec(&g), None);
        let big = blowup(&g, t).unwrap();
        let eb = square_energies(&spec(&big), None);
        let t2 = (t * t) as f64;
        let scale = (2.0 * big.m() as f64).max(1.0);
        prop_assert!((eb.s_plus - t2 * e.s_plus).abs() <= 1e-9 * scale);
        prop_assert!((eb.s_minus - t2 * e.s_minus).abs() <= 1e-9 * scale);
        let (i, ib) = (inertia(&spec(&g), None), inertia(&spec(&big), None));
        prop_assert_eq!((ib.n_plus, ib.n_minus), (i.n_plus, i.n_minus));
    }

    #[test]
    fn tolerance_inertia_matches_exact(g in graph(12)) {
        prop_assert_eq!(inertia(&spec(&g), None), exact_inertia(&g).unwrap());
    }

    #[test]
    fn spectrum_is_isomorphism_invariant((g, perm) in graph_with_perm(10)) {
        let h = g.permuted(&perm);
        for (a, b) in spec(&g).values().iter().zip(spec(&h).values()) {
            prop_assert!((a - b).abs() <= 1e-9);
        }
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn single_precision_tracks_double(g in graph(12)) {
        let lo: Spectrum<f32> = eigenvalues_only(&g).unwrap();
        for (a, b) in lo.values().iter().zip(spec(&g).values()) {
            prop_assert!((f64::from(*a) - b).abs() <= 1e-3 * (1.0 + b.abs()));
        }
    }

    #[test]
    fn resolution_reconstructs(g in graph(10)) {
        let r = spectral_resolution::<f64>(&g, None).unwrap();
        prop_assert!(r.reconstruction_error(&g) <= 1e-9);
        let e = square_energies(&r.spectrum, None);
        prop_assert!((r.trace_b_squared() - e.s_plus).abs() <= 1e-9 * (1.0 + e.s_plus));
        prop_assert!((r.trace_c_squared() - e.s_minus).abs() <= 1e-9 * (1.0 + e.s_minus));
    }

    #[test]
    fn colouring_is_proper_and_proven_checks_hold(g in graph(11)) {
        let c = chromatic_number(&g).unwrap();
        prop_assert!(c.is_proper(&g));
        for v in run_suite(&g, Suite::Proven.checks(), DEFAULT_REL_TOL) {
            prop_assert!(!v.is_proven_failure(), "{:?}", v);
        }
    }
}
