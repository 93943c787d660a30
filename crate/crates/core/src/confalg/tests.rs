use super::*;
use crate::linalg::rat;

fn poincare_coeffs(n: usize) -> Vec<usize> {
    // Coefficients of prod_{m=1}^{n-1} (1 + m t).
    let mut c = vec![1usize];
    for m in 1..n {
        let mut next = vec![0; c.len() + 1];
        for (k, v) in c.iter().enumerate() {
            next[k] += v;
            next[k + 1] += v * m;
        }
        c = next;
    }
    c
}

#[test]
fn basis_trivial_arities() {
    for parity in [Parity::Even, Parity::Odd] {
        assert_eq!(basis(parity, 1, 0).len(), 1);
        assert!(basis(parity, 1, 0)[0].factors.is_empty());
        assert_eq!(basis(parity, 1, 1).len(), 0);
        assert_eq!(basis(parity, 1, 3).len(), 0);
        assert_eq!(basis(parity, 0, 0).len(), 1);
    }
}

#[test]
fn basis_n3_weight2() {
    for parity in [Parity::Even, Parity::Odd] {
        let b = basis(parity, 3, 2);
        let names: Vec<Vec<(usize, usize)>> =
            b.iter().map(|m| m.factors.iter().map(|g| (g.i, g.j)).collect()).collect();
        assert_eq!(names, vec![vec![(1, 2), (1, 3)], vec![(1, 2), (2, 3)]]);
    }
}

#[test]
fn basis_sizes_match_poincare_polynomial() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 0..=6 {
            let expect = poincare_coeffs(n);
            let mut total = 0;
            for k in 0..=n {
                let d = dim(parity, n, k);
                let e = expect.get(k).copied().unwrap_or(0);
                assert_eq!(d, e, "dim mismatch at n={n}, k={k}");
                total += d;
            }
            let fact: usize = (1..=n.max(1)).product();
            assert_eq!(total, fact, "total dimension at n={n}");
        }
    }
    // The n = 4 sizes quoted everywhere downstream.
    assert_eq!(
        (0..4).map(|k| dim(Parity::Even, 4, k)).collect::<Vec<_>>(),
        vec![1, 6, 11, 6]
    );
}

#[test]
fn normalize_square_is_zero() {
    for parity in [Parity::Even, Parity::Odd] {
        assert!(normalize(parity, 3, &[(1, 2), (1, 2)]).is_zero());
    }
}

#[test]
fn normalize_reversed_generator() {
    let even = normalize(Parity::Even, 2, &[(2, 1)]);
    assert_eq!(even.monomial_terms().len(), 1);
    assert_eq!(even.monomial_terms()[0].1, rat(1));
    let odd = normalize(Parity::Odd, 2, &[(2, 1)]);
    assert_eq!(odd.monomial_terms()[0].1, rat(-1));
}

#[test]
fn normalize_arnold_rewrite_odd() {
    // g13 * g23 at n = 3, d odd, rewrites to g12*g23 - g12*g13.
    let c = normalize(Parity::Odd, 3, &[(1, 3), (2, 3)]);
    let t = table(Parity::Odd, 3, 2);
    let mut expect = CohClass::zero(Parity::Odd, 3, 2);
    let ix = |fs: &[(usize, usize)]| {
        t.basis
            .iter()
            .position(|m| m.factors.iter().map(|g| (g.i, g.j)).collect::<Vec<_>>() == fs)
            .unwrap()
    };
    expect.add_term(ix(&[(1, 2), (2, 3)]), rat(1));
    expect.add_term(ix(&[(1, 2), (1, 3)]), rat(-1));
    assert_eq!(c, expect);
}

#[test]
fn normalize_is_idempotent_on_basis() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 0..=5 {
            for k in 0..n.max(1) {
                for (ix, m) in basis(parity, n, k).iter().enumerate() {
                    let factors: Vec<(usize, usize)> =
                        m.factors.iter().map(|g| (g.i, g.j)).collect();
                    let c = normalize(parity, n, &factors);
                    assert_eq!(c.terms.len(), 1);
                    assert_eq!(c.terms[&ix], rat(1));
                }
            }
        }
    }
}

#[test]
fn multiply_unit_and_square() {
    for parity in [Parity::Even, Parity::Odd] {
        let one = unit(parity, 3);
        let g12 = generator_class(parity, 3, 1, 2);
        assert_eq!(multiply(&one, &g12).unwrap(), g12);
        assert!(multiply(&g12, &g12).unwrap().is_zero());
    }
}

#[test]
fn multiply_koszul_sign() {
    for (parity, sign) in [(Parity::Odd, rat(1)), (Parity::Even, rat(-1))] {
        let g12 = generator_class(parity, 3, 1, 2);
        let g13 = generator_class(parity, 3, 1, 3);
        let ab = multiply(&g12, &g13).unwrap();
        let ba = multiply(&g13, &g12).unwrap();
        let mut scaled = CohClass::zero(parity, 3, 2);
        for (ix, c) in &ab.terms {
            scaled.add_term(*ix, c * &sign);
        }
        assert_eq!(ba, scaled);
    }
}

#[test]
fn multiply_arity_mismatch() {
    let a = unit(Parity::Even, 2);
    let b = unit(Parity::Even, 3);
    assert_eq!(multiply(&a, &b).unwrap_err(), ConfalgError::ArityMismatch { left: 2, right: 3 });
}

#[test]
fn coface_pullbacks_on_constants() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 0..=4 {
            for i in 0..=(n + 1) {
                let m = coface_pullback(parity, i, n, 0);
                assert_eq!((m.rows(), m.cols()), (1, 1));
                assert_eq!(m.get(0, 0), rat(1), "coface must be an algebra map");
            }
        }
    }
}

#[test]
fn coface_pullbacks_kill_g12_at_arity_one() {
    for parity in [Parity::Even, Parity::Odd] {
        for i in 0..=2 {
            let m = coface_pullback(parity, i, 1, 1);
            assert_eq!((m.rows(), m.cols()), (0, 1));
        }
    }
}

#[test]
fn coface_doubling_point_one_at_arity_two() {
    // n = 2, i = 1: g12 -> 0, g13 -> g12, g23 -> g12.
    for parity in [Parity::Even, Parity::Odd] {
        let m = coface_pullback(parity, 1, 2, 1);
        // Source basis order at (3, 1): g12, g13, g23; target: g12.
        assert_eq!((m.rows(), m.cols()), (1, 3));
        assert_eq!(m.get(0, 0), rat(0));
        assert_eq!(m.get(0, 1), rat(1));
        assert_eq!(m.get(0, 2), rat(1));
    }
}

#[test]
fn codegeneracy_index_shift() {
    // n = 3, j = 2: g12 on 2 points -> g13 on 3 points.
    for parity in [Parity::Even, Parity::Odd] {
        let m = codegeneracy_pullback(parity, 2, 3, 1);
        let tgt = table(parity, 3, 1);
        let row = tgt
            .basis
            .iter()
            .position(|b| b.factors == vec![Generator { i: 1, j: 3 }])
            .unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 1));
        assert_eq!(m.get(row, 0), rat(1));
        assert_eq!(m.nnz(), 1);
    }
}

/// d^j d^i = d^i d^{j-1} for i < j, as pullback matrix identities:
/// pull(i, n) * pull(j, n+1) = pull(j-1, n) * pull(i, n+1).
#[test]
fn cosimplicial_coface_identities_small() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 0..=3 {
            for k in 0..=(n + 1) {
                for j in 0..=(n + 2) {
                    for i in 0..j {
                        let lhs = coface_pullback(parity, i, n, k)
                            .mul(&coface_pullback(parity, j, n + 1, k));
                        let rhs = coface_pullback(parity, j - 1, n, k)
                            .mul(&coface_pullback(parity, i, n + 1, k));
                        assert_eq!(lhs, rhs, "d-d identity failed at n={n} k={k} i={i} j={j}");
                    }
                }
            }
        }
    }
}

/// The full s-d and s-s identities on the pullback side, with standard
/// 0-based codegeneracy labels (operadic label = standard + 1):
/// s^j d^i = d^i s^{j-1} (i < j), = id (i = j, j+1), = d^{i-1} s^j (i > j+1),
/// and s^j s^i = s^i s^{j+1} (i <= j). Exhaustive for n <= 5.
#[test]
fn cosimplicial_mixed_identities_small() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 1..=5 {
            for k in 0..=n {
                // s^j d^i at level n: X^n -> X^{n+1} -> X^n with s^j standard
                // for j in 0..=n. Pullbacks compose contravariantly.
                for j in 0..=n {
                    for i in 0..=(n + 1) {
                        let lhs = coface_pullback(parity, i, n, k)
                            .mul(&codegeneracy_pullback(parity, j + 1, n + 1, k));
                        let rhs = if i == j || i == j + 1 {
                            crate::linalg::SparseMatrix::identity(table(parity, n, k).basis.len())
                        } else if i < j {
                            // d^i s^{j-1}: X^n -> X^{n-1} -> X^n.
                            codegeneracy_pullback(parity, j, n, k)
                                .mul(&coface_pullback(parity, i, n - 1, k))
                        } else {
                            // i > j + 1: d^{i-1} s^j.
                            codegeneracy_pullback(parity, j + 1, n, k)
                                .mul(&coface_pullback(parity, i - 1, n - 1, k))
                        };
                        assert_eq!(lhs, rhs, "s-d identity failed at n={n} k={k} i={i} j={j}");
                    }
                }
                // s^j s^i = s^i s^{j+1} at level n + 2, for 0 <= i <= j <= n.
                for j in 0..=n {
                    for i in 0..=j {
                        let lhs = codegeneracy_pullback(parity, i + 1, n + 2, k)
                            .mul(&codegeneracy_pullback(parity, j + 1, n + 1, k));
                        let rhs = codegeneracy_pullback(parity, j + 2, n + 2, k)
                            .mul(&codegeneracy_pullback(parity, i + 1, n + 1, k));
                        assert_eq!(lhs, rhs, "s-s identity failed at n={n} k={k} i={i} j={j}");
                    }
                }
            }
        }
    }
}

#[test]
fn insertion_with_unit_arity_is_identity_relabeling() {
    for parity in [Parity::Even, Parity::Odd] {
        for k in 0..=2 {
            let m = insertion_pullback(parity, 2, 3, 1, k);
            // Target: sum over a of basis(3, a) x basis(1, k - a); only
            // a = k survives, so the matrix is square and must be the
            // identity.
            let dim = table(parity, 3, k).basis.len();
            let offsets = tensor_offsets(parity, 3, 1, k);
            let (off, dl, dr) = offsets[k];
            assert_eq!((dl, dr), (dim, 1));
            let mut expect = crate::linalg::SparseMatrix::zero(m.rows(), dim);
            for ix in 0..dim {
                expect.set(off + ix, ix, rat(1));
            }
            assert_eq!(*m, expect);
        }
    }
}

#[test]
fn insertion_block_collapse_rule() {
    // p = 2, q = 2, i = 1: g12 -> 1 (x) g12, g13 -> g12 (x) 1, g23 -> g12 (x) 1.
    for parity in [Parity::Even, Parity::Odd] {
        let m = insertion_pullback(parity, 1, 2, 2, 1);
        let offsets = tensor_offsets(parity, 2, 2, 1);
        // a = 0: 1 x g12 (1x1); a = 1: g12 x 1 (1x1).
        let (off0, dl0, dr0) = offsets[0];
        let (off1, dl1, dr1) = offsets[1];
        assert_eq!((dl0, dr0, dl1, dr1), (1, 1, 1, 1));
        assert_eq!(m.get(off0, 0), rat(1)); // g12 -> 1 (x) g12
        assert_eq!(m.get(off1, 1), rat(1)); // g13 -> g12 (x) 1
        assert_eq!(m.get(off1, 2), rat(1)); // g23 -> g12 (x) 1
        assert_eq!(m.nnz(), 3);
    }
}

/// Inserting the arity-2 multiplication reproduces the inner cofaces:
/// the weight-0 block of the right factor of insertion(i, n, 2) equals
/// coface_pullback(i, n).
#[test]
fn coface_is_insertion_special_case() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 1..=3 {
            for k in 0..=n {
                for i in 1..=n {
                    let ins = insertion_pullback(parity, i, n, 2, k);
                    let offsets = tensor_offsets(parity, n, 2, k);
                    let (off, dl, dr) = offsets[k]; // left weight k, right weight 0
                    assert_eq!(dr, 1);
                    let cf = coface_pullback(parity, i, n, k);
                    assert_eq!(cf.rows(), dl);
                    let mut block = crate::linalg::SparseMatrix::zero(dl, ins.cols());
                    for (r, c, v) in ins.iter() {
                        if r >= off && r < off + dl {
                            block.set(r - off, c, v.clone());
                        }
                    }
                    assert_eq!(block, *cf, "mismatch at n={n} k={k} i={i}");
                }
            }
        }
    }
}

/// Composing insertion with the weight-0 right-factor evaluation on the
/// empty operation reproduces the codegeneracy pullbacks: s^j = - o_j e.
#[test]
fn codegeneracy_is_insertion_special_case() {
    for parity in [Parity::Even, Parity::Odd] {
        for n in 2..=4 {
            for k in 0..n {
                for j in 1..=n {
                    let ins = insertion_pullback(parity, j, n, 0, k);
                    // Target: basis(n, a) x basis(0, k-a); only a = k survives.
                    let offsets = tensor_offsets(parity, n, 0, k);
                    let (off, dl, _dr) = offsets[k];
                    let cg = codegeneracy_pullback(parity, j, n, k);
                    let mut block = crate::linalg::SparseMatrix::zero(dl, ins.cols());
                    for (r, c, v) in ins.iter() {
                        if r >= off && r < off + dl {
                            block.set(r - off, c, v.clone());
                        }
                    }
                    assert_eq!(block, *cg, "mismatch at n={n} k={k} j={j}");
                }
            }
        }
    }
}
