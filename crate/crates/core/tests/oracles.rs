//! Independent oracles for the exact linear algebra.
//!
//! Nothing here goes through `IntMatrix::determinant` or `inertia`: small
//! determinants come from Laplace expansion, signatures of nondegenerate
//! forms from the sign changes of leading principal minors, nullities from
//! counting integral lattice points, and twist actions from applying
//! transvections to vectors one at a time.

use brieskorn::milnorlattice::{brieskorn_signature_oracle, intersection_matrix};
use brieskorn::monodromy::{chain_product, packing_product, Twist, TwistWord};
use brieskorn::resolution::negative_continued_fraction;
use brieskorn::surfaces::{build_chain, build_packing, CurveSystem};
use brieskorn::twistrep::{word_action, TransvectionModule};
use num_rational::Ratio;

fn laplace(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .filter(|&c| m[0][c] != 0)
        .map(|c| {
            let minor: Vec<Vec<i64>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(j, _)| j != c)
                        .map(|(_, &v)| v)
                        .collect()
                })
                .collect();
            let sign = if c % 2 == 0 { 1 } else { -1 };
            sign * m[0][c] * laplace(&minor)
        })
        .sum()
}

/// Jacobi: with all leading minors `D_k` nonzero, the number of negative
/// eigenvalues equals the number of sign changes in `1, D_1, ..., D_n`.
fn jacobi_signature(m: &[Vec<i64>]) -> Option<i64> {
    let n = m.len();
    let mut prev = 1i64;
    let mut negatives = 0;
    for k in 1..=n {
        let lead: Vec<Vec<i64>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
        let d = laplace(&lead);
        if d == 0 {
            return None;
        }
        if (d < 0) != (prev < 0) {
            negatives += 1;
        }
        prev = d;
    }
    Some(n as i64 - 2 * negatives)
}

fn integral_triples(p: i64, q: i64, r: i64) -> usize {
    let mut count = 0;
    for a in 1..p {
        for b in 1..q {
            for c in 1..r {
                if (a * q * r + b * p * r + c * p * q) % (p * q * r) == 0 {
                    count += 1;
                }
            }
        }
    }
    count
}

#[test]
fn small_lattice_determinants_by_laplace() {
    // frozen from the Laplace oracle
    let cases = [
        ([2, 2, 2], -2),
        ([2, 2, 3], 3),
        ([2, 2, 5], 5),
        ([2, 3, 3], 4),
        ([2, 3, 4], 3),
        ([2, 3, 5], 1),
        ([3, 3, 3], 0),
    ];
    for ([p, q, r], frozen) in cases {
        let l = intersection_matrix(p, q, r).unwrap();
        let rows = l.gram.to_rows();
        let det = laplace(&rows);
        assert_eq!(det.abs(), i64::abs(frozen), "({p},{q},{r}) oracle drifted");
        assert_eq!(
            l.invariants().determinant,
            det.into(),
            "({p},{q},{r}) Bareiss disagrees with Laplace"
        );
    }
}

#[test]
fn definite_signatures_by_leading_minors() {
    for [p, q, r] in [[2, 2, 4], [2, 3, 3], [2, 3, 4], [2, 3, 5], [2, 2, 7]] {
        let l = intersection_matrix(p, q, r).unwrap();
        let sigma = jacobi_signature(&l.gram.to_rows()).expect("definite");
        assert_eq!(sigma, -(l.labels.len() as i64));
        assert_eq!(l.invariants().signature, sigma);
    }
}

#[test]
fn degenerate_lattices_match_lattice_point_counts() {
    for p in 3..=5usize {
        let inv = intersection_matrix(p, p, p).unwrap().invariants();
        let pi = p as i64;
        assert_eq!(inv.nullity, integral_triples(pi, pi, pi), "p = {p}");
        assert_eq!(inv.signature, brieskorn_signature_oracle(p, p, p));
    }
    // nullity of M(3,3,3) is 2
    assert_eq!(integral_triples(3, 3, 3), 2);
}

/// Apply the word to each basis vector, letter by letter.
fn act_on_basis(system: &CurveSystem, word: &TwistWord) -> Vec<Vec<i64>> {
    let n = system.len();
    let pairing = system.pairing();
    let mut columns = Vec::with_capacity(n);
    for b in 0..n {
        let mut x = vec![0i64; n];
        x[b] = 1;
        for letter in word.letters() {
            let Twist::Curve(c) = letter.twist else {
                continue;
            };
            let ci = system.index_of(c).unwrap();
            let pairing_with_c: i64 = (0..n).map(|a| x[a] * pairing[(a, ci)]).sum();
            x[ci] += i64::from(letter.sign) * pairing_with_c;
        }
        columns.push(x);
    }
    columns
}

fn assert_matches_matrix(system: CurveSystem, word: &TwistWord) {
    let cols = act_on_basis(&system, word);
    let m = word_action(word, &TransvectionModule::new(system)).unwrap();
    for (b, col) in cols.iter().enumerate() {
        for (a, &v) in col.iter().enumerate() {
            assert_eq!(m[(a, b)], v, "entry ({a},{b}) for {word}");
        }
    }
}

#[test]
fn word_action_matches_vector_oracle() {
    assert_matches_matrix(build_chain(2).unwrap(), &chain_product(2));
    assert_matches_matrix(build_chain(5).unwrap(), &chain_product(5).pow(3));
    assert_matches_matrix(build_packing(2, 2).unwrap(), &packing_product(3).unwrap());
    assert_matches_matrix(
        build_packing(3, 3).unwrap(),
        &packing_product(4)
            .unwrap()
            .pow(2)
            .concat(&"T2_2 t1_3".parse().unwrap()),
    );
}

#[test]
fn chain_two_product_by_hand() {
    // t1: a2 -> a2 - a1 ; t2: a1 -> a1 + a2. t1 first, then t2:
    // a1 -> a1 -> a1 + a2 ; a2 -> a2 - a1 -> a2 - (a1 + a2) = -a1
    let m = word_action(
        &chain_product(2),
        &TransvectionModule::new(build_chain(2).unwrap()),
    )
    .unwrap();
    assert_eq!(m.to_rows(), vec![vec![1, -1], vec![1, 0]]);
}

#[test]
fn continued_fractions_evaluate_exactly() {
    for (n, d, terms) in [(5, 3, vec![2, 3]), (7, 5, vec![2, 2, 3]), (11, 1, vec![11])] {
        let cf = negative_continued_fraction(n, d).unwrap();
        assert_eq!(cf.terms, terms);
        let value = cf
            .terms
            .iter()
            .rev()
            .fold(None::<Ratio<i64>>, |acc, &a| {
                Some(match acc {
                    None => Ratio::from_integer(a),
                    Some(x) => Ratio::from_integer(a) - x.recip(),
                })
            })
            .unwrap();
        assert_eq!(value, Ratio::new(n, d));
    }
}

/// Rational symmetric Gaussian elimination, counting pivot signs.
fn rational_inertia(m: &[Vec<i64>]) -> (usize, usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|r| r.iter().map(|&x| Ratio::from_integer(x as i128)).collect())
        .collect();
    let zero = Ratio::from_integer(0);
    let (mut pos, mut neg) = (0, 0);
    let mut rank = 0;
    let mut live: Vec<usize> = (0..n).collect();
    while !live.is_empty() {
        let k = match live.iter().position(|&i| a[i][i] != zero) {
            Some(k) => live.remove(k),
            None => {
                let pair = live
                    .iter()
                    .flat_map(|&i| live.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && a[i][j] != zero);
                let Some((i, j)) = pair else { break };
                let src = a[j].clone();
                for (x, v) in a[i].iter_mut().zip(src) {
                    *x += v;
                }
                for row in a.iter_mut() {
                    let v = row[j];
                    row[i] += v;
                }
                continue;
            }
        };
        let d = a[k][k];
        if d > zero {
            pos += 1;
        } else {
            neg += 1;
        }
        rank += 1;
        for &i in &live {
            let f = a[i][k] / d;
            for &j in &live {
                let v = f * a[k][j];
                a[i][j] -= v;
            }
        }
    }
    (pos, n - rank, neg)
}

proptest::proptest! {
    #[test]
    fn inertia_matches_rational_elimination(
        n in 1usize..7,
        raw in proptest::collection::vec(-3i64..=3, 49),
        zero_diagonal in proptest::bool::ANY,
    ) {
        let mut rows = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let v = if i == j && zero_diagonal { 0 } else { raw[i * 7 + j] };
                rows[i][j] = v;
                rows[j][i] = v;
            }
        }
        let got = brieskorn::IntMatrix::from_rows(rows.clone()).unwrap().inertia().unwrap();
        proptest::prop_assert_eq!(
            (got.positive, got.zero, got.negative),
            rational_inertia(&rows)
        );
    }
}

#[test]
fn lattice_inertia_matches_rational_elimination() {
    for [p, q, r] in [[2, 3, 7], [3, 3, 4], [3, 4, 4], [2, 4, 6], [3, 3, 5]] {
        let l = intersection_matrix(p, q, r).unwrap();
        let inv = l.gram.inertia().unwrap();
        assert_eq!(
            (inv.positive, inv.zero, inv.negative),
            rational_inertia(&l.gram.to_rows()),
            "({p},{q},{r})"
        );
    }
}
