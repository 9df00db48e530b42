//! Completeness of the normalized search against a naive scan of every
//! integer triple and both signs of u.

use std::collections::BTreeSet;

use equiareal::search::search;
use equiareal::triangle::{canonicalize, sixteen_area_sq, Sextuple};
use equiareal::{Integer, Rational, TrianglePair};
use num_traits::{Signed, Zero};

fn naive_pairs(bound: i64) -> BTreeSet<TrianglePair> {
    let mut found = BTreeSet::new();
    for p in -bound..=bound {
        for q in -bound..=bound {
            for r in -bound..=bound {
                if p.abs() + q.abs() + r.abs() > bound {
                    continue;
                }
                let (bp, bq, br) = (Integer::from(p), Integer::from(q), Integer::from(r));
                let cube_a: Integer = &bp * &bp * &bp + &bp * &bp * &bq - &bp * &bp * &br + &bp * &bq * &bq
                    - 2 * &bp * &bq * &br
                    + &bp * &br * &br
                    + &bq * &bq * &bq
                    - &bq * &bq * &br
                    + &bq * &br * &br
                    - &br * &br * &br;
                let cube_b: Integer = 2 * &bp * &bp * &bq - 2 * &bp * &bp * &br + 2 * &bp * &bq * &bq
                    + 12 * &bp * &bq * &br
                    + 2 * &bp * &br * &br
                    - 2 * &bq * &bq * &br
                    + 2 * &bq * &br * &br;
                if cube_a.is_zero() {
                    continue;
                }
                let target = -(&cube_a * &cube_b);
                if target.is_negative() {
                    continue;
                }
                let t = target.sqrt();
                if &t * &t != target {
                    continue;
                }
                let t = Rational::from_integer(t);
                let a = Rational::from_integer(cube_a);
                for u in [&t / &a, -&t / &a] {
                    let one = Rational::from_integer(1.into());
                    let (rp, rq, rr) = (
                        Rational::from_integer(bp.clone()),
                        Rational::from_integer(bq.clone()),
                        Rational::from_integer(br.clone()),
                    );
                    let trivial = [
                        u.clone(),
                        &u - &one,
                        &u + &one,
                        &rq + &rr,
                        &rp + &rr,
                        &rp - &rq,
                        &rp + &rq - &rr,
                    ];
                    if trivial.iter().any(Zero::is_zero) {
                        continue;
                    }
                    let sx = Sextuple::new(
                        &rp * &u + &rq + &rr,
                        &rq * &u - &rp - &rr,
                        &rr * &u - &rp + &rq,
                        &rp * &u - &rq - &rr,
                        &rq * &u + &rp + &rr,
                        &rr * &u + &rp - &rq,
                    );
                    if let Ok(pair) = canonicalize(&sx) {
                        assert_eq!(sixteen_area_sq(&pair.sides1()), sixteen_area_sq(&pair.sides2()));
                        found.insert(pair);
                    }
                }
            }
        }
    }
    found
}

fn searched_pairs(bound: u64) -> BTreeSet<TrianglePair> {
    search(bound, 2).pairs().cloned().collect()
}

#[test]
fn small_bounds_match_naive_oracle() {
    for bound in [5u64, 10, 20] {
        let naive = naive_pairs(bound as i64);
        assert_eq!(searched_pairs(bound), naive, "bound {bound}");
    }
    assert!(naive_pairs(10).is_empty());
}

#[test]
fn first_pair_bound_matches_naive_oracle() {
    let naive = naive_pairs(66);
    assert_eq!(naive.len(), 1);
    assert_eq!(searched_pairs(66), naive);
}

#[test]
fn worker_count_does_not_change_results() {
    let one = search(40, 1);
    let many = search(40, 4);
    assert_eq!(one.triples_scanned, many.triples_scanned);
    assert_eq!(one.rejections, many.rejections);
    assert_eq!(one.solutions, many.solutions);
}
