mod common;

use proptest::prelude::*;

use biposet::constructions::{dual, dual_biposet, intersect_many};
use biposet::galois::{is_galois, GaloisMode, GaloisPair};
use biposet::io::{emit_dot, parse_structure, serialize_structure, DotComponent};
use biposet::morphisms::{find_isomorphism, is_isomorphism, is_isotone};
use biposet::oracle::{catalog, decode, encode};
use biposet::{check_axioms, BiPoset, Diamond, Mapping, Rel};
use common::*;

fn rel(n: usize) -> impl Strategy<Value = Rel> {
    proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| Rel::from_fn(n, |i, j| bits[i * n + j]))
}

fn diamond(max_n: usize) -> impl Strategy<Value = Diamond> {
    (1..=max_n).prop_flat_map(|n| (rel(n), rel(n)).prop_map(|(a, b)| Diamond::new(a, b).unwrap()))
}

fn valid_structure(n: usize) -> impl Strategy<Value = Diamond> {
    let codes = catalog(n).unwrap();
    (0..codes.len()).prop_map(move |i| decode(n, codes[i]))
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// Relabels `d` along the bijection `perm`: `i` becomes `perm[i]`.
fn relabel(d: &Diamond, perm: &[usize]) -> Diamond {
    let n = d.n();
    let mut inv = vec![0; n];
    for (i, &p) in perm.iter().enumerate() {
        inv[p] = i;
    }
    Diamond::new(Rel::from_fn(n, |a, b| d.r1().get(inv[a], inv[b])), Rel::from_fn(n, |a, b| d.r2().get(inv[a], inv[b])))
        .unwrap()
}

fn dot_is_well_formed(dot: &str, bp: &BiPoset) -> bool {
    let opens = dot.matches('{').count();
    let closes = dot.matches('}').count();
    let labels_braces: usize = bp.ground().labels().iter().map(|l| l.matches('{').count()).sum();
    let declared: Vec<String> = bp.ground().labels().iter().map(|l| format!("\"{l}\"")).collect();
    let edges_ok = dot.lines().filter(|l| l.contains("->")).all(|l| {
        let mut parts = l.trim().split(" -> ");
        let src = parts.next().unwrap_or("");
        let dst = parts.next().and_then(|r| r.split(' ').next()).unwrap_or("");
        declared.iter().any(|d| d == src) && declared.iter().any(|d| d == dst)
    });
    dot.starts_with("digraph ") && opens == closes && opens == labels_braces + 1 && edges_ok
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn round_trip_is_bit_exact(d in diamond(7)) {
        let bp = BiPoset::with_standard_labels(d).unwrap();
        let back = parse_structure(&serialize_structure(&bp)).unwrap();
        prop_assert_eq!(back.diamond(), bp.diamond());
        prop_assert_eq!(back.ground(), bp.ground());
    }

    #[test]
    fn dual_is_an_involution(a in rel(6), b in rel(6)) {
        let d = Diamond::new(a, b).unwrap();
        prop_assert_eq!(dual(&dual(&d)), d.clone());
        let bp = BiPoset::with_standard_labels(d).unwrap();
        let dd = dual_biposet(&dual_biposet(&bp));
        prop_assert!(is_isomorphism(&Mapping::identity(6), &bp, &dd).unwrap().holds());
    }

    #[test]
    fn dual_matches_reference(d in diamond(5)) {
        prop_assert_eq!(Naive::from_diamond(&dual(&d)), Naive::from_diamond(&d).dual());
    }

    #[test]
    fn axioms_match_reference_on_wider_structures(d in diamond(5)) {
        prop_assert_eq!(check_axioms(&d).passes(), Naive::from_diamond(&d).valid());
    }

    #[test]
    fn intersections_of_valid_structures_are_valid(
        p in valid_structure(3), q in valid_structure(3), r in valid_structure(3)
    ) {
        let meet = intersect_many(&[p.clone(), q.clone(), r]).unwrap();
        prop_assert!(check_axioms(&meet).passes());
        prop_assert!(check_axioms(&intersect_many(&[p, q]).unwrap()).passes());
    }

    #[test]
    fn encoding_round_trips(p in valid_structure(3)) {
        prop_assert_eq!(decode(3, encode(&p)), p);
    }

    #[test]
    fn isomorphism_search_finds_relabelings(d in valid_structure(3), perm in permutation(3)) {
        let a = BiPoset::with_standard_labels(d.clone()).unwrap();
        let b = BiPoset::with_standard_labels(relabel(&d, &perm)).unwrap();
        let f = find_isomorphism(&a, &b);
        prop_assert!(f.is_some());
        prop_assert!(is_isomorphism(&f.unwrap(), &a, &b).unwrap().holds());
        let direct = Mapping::new(perm.clone(), 3).unwrap();
        prop_assert!(is_isomorphism(&direct, &a, &b).unwrap().holds());
    }

    #[test]
    fn isotone_matches_chain_preservation(p in valid_structure(3), q in valid_structure(2), img in proptest::collection::vec(0usize..2, 3)) {
        let f = Mapping::new(img.clone(), 2).unwrap();
        let (np, nq) = (Naive::from_diamond(&p), Naive::from_diamond(&q));
        let mut expected = true;
        for a in 0..3 { for b in 0..3 { for c in 0..3 {
            if np.chain(a, b, c) && !nq.chain(img[a], img[b], img[c]) { expected = false; }
        }}}
        prop_assert_eq!(is_isotone(&f, &p, &q).unwrap().holds(), expected);
    }

    #[test]
    fn modes_agree_when_structures_coincide(p in valid_structure(3), f in proptest::collection::vec(0usize..3, 3), g in proptest::collection::vec(0usize..3, 3)) {
        let bp = BiPoset::with_standard_labels(p).unwrap();
        let pair = GaloisPair::new(Mapping::new(f.clone(), 3).unwrap(), Mapping::new(g.clone(), 3).unwrap()).unwrap();
        let hetero = is_galois(&pair, &bp, &bp, GaloisMode::Hetero).unwrap().holds();
        prop_assert_eq!(hetero, is_galois(&pair, &bp, &bp, GaloisMode::Monotone).unwrap().holds());
        let np = Naive::from_diamond(bp.diamond());
        prop_assert_eq!(hetero, naive_galois(&f, &g, &np, &np));
    }

    #[test]
    fn dot_output_is_well_formed(d in diamond(5)) {
        let bp = BiPoset::with_standard_labels(d).unwrap();
        for c in [DotComponent::First, DotComponent::Second, DotComponent::Both] {
            let dot = emit_dot(&bp, c);
            prop_assert!(dot_is_well_formed(&dot, &bp), "{}", dot);
        }
    }
}

#[test]
fn isomorphism_search_is_complete_up_to_four_elements() {
    let pool: Vec<Diamond> = (0..1u64 << 24).step_by(1 << 19).map(|c| decode(4, c)).collect();
    let perms: Vec<Vec<usize>> = all_maps(4, 4).into_iter().filter(|m| is_bijection(m, 4)).collect();
    for a in &pool {
        let mut targets: Vec<Diamond> = perms.iter().map(|p| relabel(a, p)).collect();
        targets.extend(pool.iter().take(8).cloned());
        for b in &targets {
            let (pa, pb) =
                (BiPoset::with_standard_labels(a.clone()).unwrap(), BiPoset::with_standard_labels(b.clone()).unwrap());
            let (na, nb) = (Naive::from_diamond(a), Naive::from_diamond(b));
            let brute = perms.iter().find(|p| naive_chain_iso(p, &na, &nb));
            let found = find_isomorphism(&pa, &pb);
            assert_eq!(found.is_some(), brute.is_some());
            if let Some(f) = found {
                assert_eq!(f.img(), &brute.unwrap()[..], "least isomorphism");
            }
        }
    }
}
