//! Normal-form bases and rewrite tables for the cohomology of configuration
//! spaces, one table per (sign regime, arity, weight).
//!
//! A table echelonizes the span of all Arnold-relation multiples inside the
//! free square-free monomial span, with columns ordered so that pivots land
//! on the non-admissible monomials. Reducing an arbitrary monomial against
//! the echelon then rewrites it into the admissible basis. Tables are built
//! lazily and memoized; readers share them through an `Arc`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num::One;
use once_cell::sync::Lazy;

use crate::linalg::{Echelon, Rational, SparseVec};

use super::{AdmissibleMonomial, Generator, Parity};

/// Index of a generator pair inside the per-arity generator list.
pub type GenIdx = usize;

/// A square-free product of generators, kept sorted by generator index.
/// This is the free-algebra monomial the rewrite tables are indexed by.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeMonomial(pub Vec<GenIdx>);

/// All generator pairs (i, j), 1 <= i < j <= n, in lexicographic order.
pub fn generator_pairs(n: usize) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (i + 1)..=n {
            out.push(Generator { i, j });
        }
    }
    out
}

/// Sorts a factor list into a canonical square-free monomial, tracking the
/// Koszul sign. Returns `None` when a factor repeats (g^2 = 0 in either
/// regime).
pub fn canon_product(parity: Parity, factors: &[GenIdx]) -> Option<(FreeMonomial, i8)> {
    let mut f = factors.to_vec();
    // Insertion sort, counting transpositions of (odd-degree) generators.
    let mut swaps: usize = 0;
    for i in 1..f.len() {
        let mut j = i;
        while j > 0 && f[j - 1] > f[j] {
            f.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
    }
    for w in f.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    let sign = match parity {
        // d even: generators have odd degree d-1 and anticommute.
        Parity::Even => {
            if swaps % 2 == 0 {
                1
            } else {
                -1
            }
        }
        // d odd: generators have even degree and commute.
        Parity::Odd => 1,
    };
    Some((FreeMonomial(f), sign))
}

/// The basis-and-rewrite table for one (parity, arity, weight).
pub struct BasisTable {
    pub parity: Parity,
    pub n: usize,
    pub k: usize,
    /// Admissible monomials in the deterministic basis order.
    pub basis: Vec<AdmissibleMonomial>,
    /// Position of each admissible monomial in `basis`.
    pub index: HashMap<FreeMonomial, usize>,
    /// Position of each free monomial in the echelon column order.
    col_of_monomial: HashMap<FreeMonomial, usize>,
    /// Free monomial of each column.
    monomial_of_col: Vec<FreeMonomial>,
    /// First column holding an admissible monomial; everything before it is
    /// a potential pivot.
    admissible_start: usize,
    /// Echelon form of the Arnold relation span.
    echelon: Echelon,
    /// Rank of the relation span (certifies the basis count).
    pub relation_rank: usize,
    gens: Vec<Generator>,
}

impl BasisTable {
    /// Weight-k admissible monomials at arity n: factors (i_t, j_t) with
    /// i_t < j_t and strictly increasing second indices.
    fn admissible_monomials(n: usize, k: usize) -> Vec<Vec<Generator>> {
        let mut out = Vec::new();
        let mut cur: Vec<Generator> = Vec::new();
        fn rec(n: usize, k: usize, min_j: usize, cur: &mut Vec<Generator>, out: &mut Vec<Vec<Generator>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for j in min_j..=n {
                for i in 1..j {
                    cur.push(Generator { i, j });
                    rec(n, k, j + 1, cur, out);
                    cur.pop();
                }
            }
        }
        rec(n, k, 2, &mut cur, &mut out);
        out
    }

    fn build(parity: Parity, n: usize, k: usize) -> BasisTable {
        let gens = generator_pairs(n);
        let gen_index: HashMap<(usize, usize), GenIdx> =
            gens.iter().enumerate().map(|(ix, g)| ((g.i, g.j), ix)).collect();

        // Enumerate all square-free weight-k monomials.
        let mut free: Vec<FreeMonomial> = Vec::new();
        let mut stack: Vec<GenIdx> = Vec::new();
        fn subsets(from: usize, left: usize, total: usize, stack: &mut Vec<GenIdx>, out: &mut Vec<FreeMonomial>) {
            if left == 0 {
                out.push(FreeMonomial(stack.clone()));
                return;
            }
            for g in from..total {
                if total - g < left {
                    break;
                }
                stack.push(g);
                subsets(g + 1, left - 1, total, stack, out);
                stack.pop();
            }
        }
        subsets(0, k, gens.len(), &mut stack, &mut free);

        let admissible_list = Self::admissible_monomials(n, k);
        let admissible_set: HashMap<FreeMonomial, usize> = admissible_list
            .iter()
            .enumerate()
            .map(|(ix, factors)| {
                let idxs: Vec<GenIdx> = factors.iter().map(|g| gen_index[&(g.i, g.j)]).collect();
                let (m, s) = canon_product(parity, &idxs).expect("admissible monomials are square-free");
                assert_eq!(s, 1, "sorted admissible factors need no sign");
                (m, ix)
            })
            .collect();

        // Column order: non-admissible monomials first, ordered by the
        // straightening term order (larger second-index multiset first), so
        // the echelon reduction rewrites strictly toward admissible forms.
        // Admissible monomials follow in basis order.
        let mut non_admissible: Vec<&FreeMonomial> =
            free.iter().filter(|m| !admissible_set.contains_key(*m)).collect();
        let weight_key = |m: &FreeMonomial| -> (Vec<usize>, Vec<GenIdx>) {
            let mut js: Vec<usize> = m.0.iter().map(|&g| gens[g].j).collect();
            js.sort_unstable_by(|a, b| b.cmp(a));
            (js, m.0.clone())
        };
        non_admissible.sort_by(|a, b| weight_key(b).cmp(&weight_key(a)));

        let mut monomial_of_col: Vec<FreeMonomial> = non_admissible.into_iter().cloned().collect();
        let admissible_start = monomial_of_col.len();
        for factors in &admissible_list {
            let idxs: Vec<GenIdx> = factors.iter().map(|g| gen_index[&(g.i, g.j)]).collect();
            monomial_of_col.push(FreeMonomial(idxs));
        }
        let col_of_monomial: HashMap<FreeMonomial, usize> =
            monomial_of_col.iter().enumerate().map(|(c, m)| (m.clone(), c)).collect();

        // Arnold relation rows: for each triple a < b < c, the three-term
        // relation written with canonical generators, multiplied by every
        // complementary monomial of weight k - 2.
        let mut echelon = Echelon::new();
        if k >= 2 {
            let sym = match parity {
                Parity::Even => 1i8,  // g_ji = g_ij
                Parity::Odd => -1i8, // g_ji = -g_ij
            };
            let mut rows: Vec<SparseVec> = Vec::new();
            let mut complements: Vec<FreeMonomial> = Vec::new();
            let mut stack2 = Vec::new();
            subsets(0, k - 2, gens.len(), &mut stack2, &mut complements);
            for a in 1..=n {
                for b in (a + 1)..=n {
                    for c in (b + 1)..=n {
                        let g_ab = gen_index[&(a, b)];
                        let g_bc = gen_index[&(b, c)];
                        let g_ac = gen_index[&(a, c)];
                        // g_ab g_bc + g_bc g_ca + g_ca g_ab with g_ca = sym * g_ac.
                        let terms: [(GenIdx, GenIdx, i8); 3] =
                            [(g_ab, g_bc, 1), (g_bc, g_ac, sym), (g_ac, g_ab, sym)];
                        for comp in &complements {
                            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
                            for (x, y, s0) in terms {
                                let mut factors = vec![x, y];
                                factors.extend_from_slice(&comp.0);
                                if let Some((m, s1)) = canon_product(parity, &factors) {
                                    let col = col_of_monomial[&m];
                                    *row.entry(col).or_insert(0) += (s0 * s1) as i64;
                                }
                            }
                            let row: SparseVec = row
                                .into_iter()
                                .filter(|(_, v)| *v != 0)
                                .map(|(c, v)| (c, crate::linalg::rat(v)))
                                .collect();
                            if !row.is_empty() {
                                rows.push(row);
                            }
                        }
                    }
                }
            }
            // Rows sorted by leading column keep the elimination near
            // triangular.
            rows.sort_by(|a, b| (a[0].0, a.len()).cmp(&(b[0].0, b.len())));
            for row in rows {
                echelon.insert(row);
            }
        }

        let relation_rank = echelon.rank();
        let free_count = monomial_of_col.len();
        // The pivot structure certifies the basis: every pivot must sit on a
        // non-admissible column and the corank must equal the basis count.
        assert_eq!(
            free_count - relation_rank,
            admissible_list.len(),
            "relation corank disagrees with the admissible count at n={n}, k={k}"
        );
        for p in echelon.pivot_cols() {
            assert!(p < admissible_start, "relation pivot landed on an admissible monomial");
        }

        let basis: Vec<AdmissibleMonomial> =
            admissible_list.into_iter().map(|factors| AdmissibleMonomial { factors }).collect();
        let index: HashMap<FreeMonomial, usize> = basis
            .iter()
            .enumerate()
            .map(|(ix, m)| {
                let idxs: Vec<GenIdx> = m.factors.iter().map(|g| gen_index[&(g.i, g.j)]).collect();
                (FreeMonomial(idxs), ix)
            })
            .collect();

        BasisTable {
            parity,
            n,
            k,
            basis,
            index,
            col_of_monomial,
            monomial_of_col,
            admissible_start,
            echelon,
            relation_rank,
            gens,
        }
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    /// Rewrites a canonical free monomial into the admissible basis.
    pub fn rewrite(&self, m: &FreeMonomial) -> Vec<(usize, Rational)> {
        if let Some(&ix) = self.index.get(m) {
            return vec![(ix, Rational::one())];
        }
        let col = *self.col_of_monomial.get(m).expect("monomial belongs to this (n, k) table");
        let red = self.echelon.reduce(vec![(col, Rational::one())]);
        red.into_iter()
            .map(|(c, v)| {
                assert!(c >= self.admissible_start, "reduction left a non-admissible monomial");
                let m = &self.monomial_of_col[c];
                (self.index[m], v)
            })
            .collect()
    }
}

type TableKey = (Parity, usize, usize);

static TABLES: Lazy<RwLock<HashMap<TableKey, Arc<BasisTable>>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// The memoized table for (parity, n, k).
pub fn table(parity: Parity, n: usize, k: usize) -> Arc<BasisTable> {
    if let Some(t) = TABLES.read().unwrap().get(&(parity, n, k)) {
        return Arc::clone(t);
    }
    let built = Arc::new(BasisTable::build(parity, n, k));
    let mut w = TABLES.write().unwrap();
    Arc::clone(w.entry((parity, n, k)).or_insert(built))
}
