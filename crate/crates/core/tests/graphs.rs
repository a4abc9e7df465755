use std::collections::BTreeSet;

use pancake_core::cayley::{
    build_graph, diameter, export, girth, has_k23, has_triangle, two_generator_cycles,
    verify_chord_free, CayleyGraph, ExportFormat,
};
use pancake_core::{Family, Limits};

fn graph(family: Family, n: usize) -> CayleyGraph {
    build_graph(family, n, &Limits::default()).unwrap()
}

#[test]
fn counts_and_regularity() {
    let cases = (1..=6)
        .map(|n| (Family::Unsigned, n))
        .chain((1..=5).map(|n| (Family::Signed, n)));
    for (family, n) in cases {
        let g = graph(family, n);
        assert_eq!(g.vertex_count() as u128, family.group_order(n));
        let deg = match family {
            Family::Unsigned => n - 1,
            Family::Signed => n,
        };
        assert_eq!(g.degree(), deg);
        let edges = g.edges();
        assert_eq!(edges.len(), g.vertex_count() * deg / 2);
        let mut incident = vec![BTreeSet::new(); g.vertex_count()];
        for &(u, v, sub) in &edges {
            assert!(u < v);
            assert!(
                incident[u as usize].insert(sub),
                "{family} {n}: label {sub} twice at {u}"
            );
            assert!(
                incident[v as usize].insert(sub),
                "{family} {n}: label {sub} twice at {v}"
            );
        }
        assert!(incident.iter().all(|s| s.len() == deg));
    }
}

#[test]
fn burnt_graph_local_structure() {
    for n in 2..=3 {
        let g = graph(Family::Signed, n);
        assert!(!has_triangle(&g));
        assert!(!has_k23(&g));
    }
}

#[test]
fn alternating_cycles_partition_and_have_no_chords() {
    for n in 3..=4 {
        let g = graph(Family::Signed, n);
        for b in 1..n {
            for a in 0..b {
                let fam = two_generator_cycles(&g, a, b).unwrap();
                assert_eq!(fam.count() as u64 * fam.ell, g.vertex_count() as u64);
                let mut seen = BTreeSet::new();
                for c in &fam.cycles {
                    assert_eq!(c.len() as u64, fam.ell);
                    assert!(c.iter().all(|&v| seen.insert(v)));
                    assert!(verify_chord_free(&g, c).unwrap());
                }
                assert_eq!(seen.len(), g.vertex_count());
            }
        }
    }
}

#[test]
fn girths() {
    for n in 2..=4 {
        assert_eq!(girth(&graph(Family::Signed, n)).unwrap(), 8, "B_{n}");
    }
    for n in 3..=6 {
        assert_eq!(girth(&graph(Family::Unsigned, n)).unwrap(), 6, "S_{n}");
    }
}

#[test]
fn small_diameters() {
    let unsigned: Vec<u32> = (1..=7)
        .map(|n| diameter(&graph(Family::Unsigned, n)).diameter)
        .collect();
    assert_eq!(unsigned, vec![0, 1, 3, 4, 5, 7, 8]);
    let signed: Vec<u32> = (1..=5)
        .map(|n| diameter(&graph(Family::Signed, n)).diameter)
        .collect();
    assert_eq!(signed, vec![1, 4, 6, 8, 10]);
    for n in 1..=5 {
        let r = diameter(&graph(Family::Signed, n));
        assert_eq!(
            r.histogram.iter().sum::<u64>() as u128,
            Family::Signed.group_order(n)
        );
        assert!(*r.histogram.last().unwrap() > 0);
    }
}

#[test]
fn export_is_deterministic() {
    let g = graph(Family::Signed, 3);
    for format in [ExportFormat::EdgeList, ExportFormat::Csv, ExportFormat::Dot] {
        let first = export(&g, format).unwrap();
        let again = export(&graph(Family::Signed, 3), format).unwrap();
        assert_eq!(first, again);
    }
    let edge_list = export(&g, ExportFormat::EdgeList).unwrap();
    assert_eq!(edge_list.lines().count(), 72);
    let mut sorted: Vec<&str> = edge_list.lines().collect();
    sorted.sort_by_key(|l| {
        let v: Vec<u32> = l.split(' ').map(|t| t.parse().unwrap()).collect();
        (v[0], v[1])
    });
    assert_eq!(sorted, edge_list.lines().collect::<Vec<_>>());
}
