mod common;

use colondec::code::{add, weight};
use colondec::poly::binomial;
use colondec::{decode, ideal, nearest_neighbor_count, Oracle, Status};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn oracle() -> Oracle {
    Oracle::default()
}

#[test]
fn min_distance_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let c = common::random_code(&mut rng, 12, 6, 0, 4096);
        assert_eq!(
            ideal::min_distance(&c).unwrap(),
            oracle().min_distance(&c).unwrap()
        );
    }
}

#[test]
fn ideal_degree_counts_minimum_weight_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checked = 0;
    while checked < 80 {
        let c = common::random_code(&mut rng, 10, 5, 0, 1024);
        let d = c.min_distance().unwrap();
        if d + 1 > c.n() {
            continue;
        }
        let ideal = ideal::build_ideal(&c, d + 1).unwrap();
        let alpha = oracle().projective_min_weight_count(&c).unwrap();
        assert_eq!(ideal::ideal_degree(&ideal).unwrap() as u64, alpha);
        checked += 1;
    }
}

#[test]
fn raw_weight_counts_are_projective_multiples() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let c = common::random_code(&mut rng, 10, 4, 0, 4096);
        let q1 = c.field().order() - 1;
        let counts = oracle().raw_weight_counts(&c).unwrap();
        assert_eq!(counts.get(&0), Some(&1));
        assert_eq!(counts.values().sum::<u64>() as u128, c.message_count());
        for (&w, &n) in &counts {
            if w > 0 {
                assert_eq!(n % q1, 0);
            }
        }
    }
}

#[test]
fn neighbor_count_law() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    let o = oracle();
    let mut checked = 0;
    while checked < 120 {
        let c = common::random_code(&mut rng, 10, 5, 1, 4096);
        let w = common::random_word(&mut rng, &c);
        if c.contains(&w).unwrap().is_some() {
            continue;
        }
        let nn = o.nearest_neighbors(&c, &w).unwrap();
        let aug = c.augment(&w).unwrap();
        let outside = o.projective_count_outside(&aug, &c, nn.d_w).unwrap();
        assert_eq!(outside, nn.neighbors.len() as u64);
        assert_eq!(nearest_neighbor_count(&c, &w, &o).unwrap(), outside);
        checked += 1;
    }
}

#[test]
fn decoding_is_coset_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..80 {
        let c = common::random_code(&mut rng, 10, 4, 0, 1024);
        let w = common::random_word(&mut rng, &c);
        let message: Vec<u32> = (0..c.k())
            .map(|_| rng.gen_range(0..c.field().modulus()))
            .collect();
        let shift = c.encode(&message).unwrap().v;
        let shifted = add(c.field(), &w, &shift);
        let a = decode(&c, &w).unwrap();
        let b = decode(&c, &shifted).unwrap();
        assert_eq!(a.status, b.status);
        assert_eq!(a.d_w, b.d_w);
        assert_eq!(a.error, b.error);
        assert_eq!(a.neighbor_count, b.neighbor_count);
    }
}

#[test]
fn decoder_agrees_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let o = oracle();
    for _ in 0..300 {
        let c = common::random_code(&mut rng, 10, 5, 0, 2048);
        let w = common::random_word(&mut rng, &c);
        let r = decode(&c, &w).unwrap();
        let nn = o.nearest_neighbors(&c, &w).unwrap();
        match r.status {
            Status::InCode => assert_eq!(nn.d_w, 0),
            Status::Corrected => {
                assert_eq!(nn.neighbors.len(), 1);
                assert_eq!(r.nearest.as_ref(), Some(&nn.neighbors[0]));
                assert_eq!(r.d_w, Some(nn.d_w));
            }
            Status::Ambiguous => {
                assert_eq!(r.neighbor_count, Some(nn.neighbors.len() as u64));
                assert!(nn.neighbors.len() > 1);
            }
            Status::Uncorrectable => assert!(nn.d_w >= r.d),
        }
    }
}

#[test]
fn unique_neighbors_past_the_radius_are_corrected() {
    // Words with d_w in ((d-1)/2, d) that still have one nearest neighbor.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let o = oracle();
    let mut found = 0;
    for _ in 0..2000 {
        let c = common::random_code(&mut rng, 10, 4, 0, 1024);
        let d = c.min_distance().unwrap();
        let w = common::random_word(&mut rng, &c);
        let nn = o.nearest_neighbors(&c, &w).unwrap();
        if nn.d_w <= (d - 1) / 2 || nn.d_w >= d || nn.neighbors.len() != 1 {
            continue;
        }
        let r = decode(&c, &w).unwrap();
        assert_eq!(r.status, Status::Corrected);
        assert_eq!(r.nearest.as_ref(), Some(&nn.neighbors[0]));
        found += 1;
    }
    assert!(found >= 20, "only {found} instances");
}

#[test]
fn injected_errors_within_radius_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    let mut checked = 0;
    while checked < 150 {
        let c = common::random_code(&mut rng, 12, 5, 0, 4096);
        let d = c.min_distance().unwrap();
        if d < 3 {
            continue;
        }
        let t = rng.gen_range(1..=(d - 1) / 2);
        let message: Vec<u32> = (0..c.k())
            .map(|_| rng.gen_range(0..c.field().modulus()))
            .collect();
        let e = common::random_error(&mut rng, &c, t);
        let w = add(c.field(), &c.encode(&message).unwrap().v, &e);
        let r = decode(&c, &w).unwrap();
        assert_eq!(r.status, Status::Corrected);
        assert_eq!(r.error.as_ref(), Some(&e));
        assert_eq!(r.message.as_ref(), Some(&message));
        assert_eq!(r.colon_power, Some(t));
        checked += 1;
    }
}

#[test]
fn scaling_the_word_scales_the_error() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    while checked < 60 {
        let c = common::random_code(&mut rng, 10, 4, 0, 1024);
        let f = c.field();
        if f.modulus() == 2 {
            continue;
        }
        let w = common::random_word(&mut rng, &c);
        let lambda = rng.gen_range(2..f.modulus());
        let scaled: Vec<u32> = w.iter().map(|&x| f.mul(x, lambda)).collect();
        let a = decode(&c, &w).unwrap();
        let b = decode(&c, &scaled).unwrap();
        assert_eq!(a.status, b.status);
        if let (Some(ea), Some(eb)) = (a.error, b.error) {
            let expect: Vec<u32> = ea.iter().map(|&x| f.mul(x, lambda)).collect();
            assert_eq!(eb, expect);
        }
        checked += 1;
    }
}

#[test]
fn low_degree_pieces_are_full() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for _ in 0..60 {
        let c = common::random_code(&mut rng, 9, 4, 0, 1024);
        let d = c.min_distance().unwrap();
        for i in 1..=d {
            let ideal = ideal::build_ideal(&c, i).unwrap();
            let expect = binomial((c.k() + i - 1) as u64, i as u64).unwrap();
            assert_eq!(ideal::graded_piece_rank(&ideal, i).unwrap() as u64, expect);
        }
    }
}

#[test]
fn row_removal_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let o = oracle();
    let mut literal_mismatches = 0;
    let mut checked = 0;
    while checked < 60 {
        let c = common::random_code(&mut rng, 9, 4, 0, 1024);
        let d = c.min_distance().unwrap();
        if c.k() < 2 || d + 1 > c.n() {
            continue;
        }
        let alpha = o.projective_min_weight_count(&c).unwrap();
        let i_d1 = ideal::build_ideal(&c, d + 1).unwrap();
        for j in 0..c.k() {
            let cj = c.remove_row(j).unwrap();
            let alpha_j = if o.min_distance(&cj).unwrap() == d {
                o.projective_min_weight_count(&cj).unwrap()
            } else {
                0
            };
            let colon = ideal::colon_degree(&i_d1, j).unwrap() as u64;
            assert_eq!(colon, alpha - alpha_j);
            let nn = o.nearest_neighbors(&cj, c.row(j)).unwrap();
            if nn.d_w == d {
                assert_eq!(nn.neighbors.len() as u64, colon);
            } else {
                // Row j is farther than d from C_j: no minimum-weight word
                // of C involves it, while r_j still has neighbors in C_j.
                assert!(nn.d_w > d);
                assert_eq!(colon, 0);
                literal_mismatches += 1;
            }
        }
        checked += 1;
    }
    assert!(literal_mismatches > 0);
}

#[test]
fn good_words_satisfy_the_piece_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    while checked < 60 {
        let c = common::random_code(&mut rng, 11, 4, 1, 4096);
        let d = c.min_distance().unwrap();
        if d < 3 {
            continue;
        }
        let t = rng.gen_range(1..=(d - 1) / 2);
        let e = common::random_error(&mut rng, &c, t);
        let aug = c.augment(&e).unwrap();
        let ideal = ideal::build_ideal(&aug, t + 1).unwrap();
        let prime = ideal::colon_linear_piece(&ideal, c.k(), t).unwrap();
        assert_eq!(prime.dim(), c.k());
        let point = ideal::point_from_forms(&prime).unwrap();
        assert_ne!(point.coords()[c.k()], 0);
        assert!(ideal::verify_saturation_identity(&ideal, &prime).unwrap());
        assert!(ideal::verify_claim_containment(&ideal, &prime).unwrap());
        checked += 1;
    }
}

#[test]
fn puncturing_below_distance_keeps_dimension() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let o = oracle();
    let mut checked = 0;
    while checked < 60 {
        let c = common::random_code(&mut rng, 10, 4, 0, 1024);
        let d = c.min_distance().unwrap();
        if d < 2 {
            continue;
        }
        let count = rng.gen_range(1..d);
        let cols: Vec<usize> = rand::seq::index::sample(&mut rng, c.n(), count).into_vec();
        let punctured = c.puncture(&cols).unwrap();
        assert_eq!(punctured.k(), c.k());
        assert_eq!(punctured.n(), c.n() - count);
        let dp = o.min_distance(&punctured).unwrap();
        assert!(dp >= d - count && dp <= d);
        checked += 1;
    }
}

#[test]
fn error_weight_matches_distance() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    for _ in 0..100 {
        let c = common::random_code(&mut rng, 10, 4, 0, 1024);
        let w = common::random_word(&mut rng, &c);
        let r = decode(&c, &w).unwrap();
        if let (Some(e), Some(dw)) = (&r.error, r.d_w) {
            assert_eq!(weight(e), dw);
        }
    }
}
