//! Order complexes, integer boundary operators, Smith normal form, reduced
//! homology, the C_sigma subposets with their fundamental cycles, and the
//! representation-dimension count over standard fillings.
//!
//! Everything is exact integer arithmetic.  Smith normal form runs a sparse
//! unit-pivot elimination first and hands any residual to a classical dense
//! reduction, which keeps the boundary matrices of the slow tier tractable
//! without modular shortcuts.

use alloc::collections::{BTreeMap, BTreeSet};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::derange::{signed_derangement_count, SkewHookDiagram};
use crate::labeling::{falling_cmp, falling_words, ReesCubeChain, Word};
use crate::num::pow2;
use crate::poset::{GradedPoset, PosetError};
use crate::zoo::{cube_word, stars, word_label, STAR};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomologyError {
    Poset(PosetError),
    NotFalling(String),
    KernelRank { expected: usize, got: usize },
    NotUnimodularCycle,
}

impl core::error::Error for HomologyError {}

impl fmt::Display for HomologyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologyError::Poset(e) => write!(f, "{e}"),
            HomologyError::NotFalling(w) => write!(f, "word {w} is not falling"),
            HomologyError::KernelRank { expected, got } => {
                write!(f, "kernel rank {got}, expected {expected}")
            }
            HomologyError::NotUnimodularCycle => write!(f, "fundamental cycle not ±1 on facets"),
        }
    }
}

impl From<PosetError> for HomologyError {
    fn from(e: PosetError) -> Self {
        HomologyError::Poset(e)
    }
}

// ---------------------------------------------------------------------------
// simplicial complexes

/// Finite simplicial complex listed by dimension; every face is a sorted
/// vertex list and the per-dimension lists are sorted for determinism.
#[derive(Debug, Clone)]
pub struct SimplicialComplex {
    pub faces: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    /// Downward closure of the given facets.
    pub fn from_facets(facets: &[Vec<u32>]) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for facet in facets {
            debug_assert!(facet.windows(2).all(|w| w[0] < w[1]), "facets must be sorted");
            let s = facet.len();
            for mask in 1u64..(1 << s) {
                let sub: Vec<u32> = (0..s).filter(|&i| mask >> i & 1 == 1).map(|i| facet[i]).collect();
                let dim = sub.len() - 1;
                while by_dim.len() <= dim {
                    by_dim.push(BTreeSet::new());
                }
                by_dim[dim].insert(sub);
            }
        }
        SimplicialComplex { faces: by_dim.into_iter().map(|s| s.into_iter().collect()).collect() }
    }

    pub fn dim(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    pub fn n_faces(&self, dim: usize) -> usize {
        self.faces.get(dim).map_or(0, |f| f.len())
    }

    /// Reduced Euler characteristic: -1 + sum (-1)^k f_k.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        let mut acc: i64 = -1;
        for (k, fs) in self.faces.iter().enumerate() {
            let term = fs.len() as i64;
            acc += if k % 2 == 0 { term } else { -term };
        }
        acc
    }

    /// Boundary operators d_k: C_k -> C_(k-1) for k = 0..=dim, with the
    /// reduced augmentation d_0 to the empty face.
    pub fn boundary_matrices(&self) -> Vec<IntMatrix> {
        let mut out = Vec::with_capacity(self.faces.len());
        for k in 0..self.faces.len() {
            let cols = &self.faces[k];
            if k == 0 {
                let mut m = IntMatrix::zero(1, cols.len());
                for j in 0..cols.len() {
                    m.set(0, j, 1);
                }
                out.push(m);
                continue;
            }
            let rows = &self.faces[k - 1];
            let mut m = IntMatrix::zero(rows.len(), cols.len());
            for (j, face) in cols.iter().enumerate() {
                for drop in 0..face.len() {
                    let sub: Vec<u32> = face
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    let i = rows.binary_search(&sub).expect("boundary face must exist");
                    let sign = if drop % 2 == 0 { 1 } else { -1 };
                    m.set(i, j, sign);
                }
            }
            out.push(m);
        }
        out
    }
}

/// Order complex together with the poset ids backing its vertices.
pub struct OrderComplex {
    pub complex: SimplicialComplex,
    /// poset id of each complex vertex; vertices are rank-sorted, so sorted
    /// vertex lists read in rank order
    pub vertex_ids: Vec<usize>,
}

impl OrderComplex {
    /// Complex of chains of the proper part of a bounded poset.
    pub fn of_proper_part(p: &GradedPoset) -> Result<OrderComplex, PosetError> {
        let (b, t) = p.bounds()?;
        let keep: Vec<usize> = (0..p.len()).filter(|&x| x != b && x != t).collect();
        Ok(Self::on_elements(p, &keep))
    }

    /// Complex of chains of the whole poset.
    pub fn of_poset(p: &GradedPoset) -> OrderComplex {
        let keep: Vec<usize> = (0..p.len()).collect();
        Self::on_elements(p, &keep)
    }

    fn on_elements(p: &GradedPoset, keep: &[usize]) -> OrderComplex {
        let mut vertex_ids = keep.to_vec();
        vertex_ids.sort_unstable_by_key(|&x| (p.rank(x), x));
        let index_of: BTreeMap<usize, u32> =
            vertex_ids.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        // maximal chains within the induced subposet
        let (sub, from_new) = p.induced_subposet(&vertex_ids, |x| p.rank(x));
        let facets: Vec<Vec<u32>> = sub
            .maximal_chains()
            .map(|chain| {
                let mut verts: Vec<u32> =
                    chain.iter().map(|&loc| index_of[&from_new[loc]]).collect();
                verts.sort_unstable();
                verts
            })
            .collect();
        OrderComplex { complex: SimplicialComplex::from_facets(&facets), vertex_ids }
    }

    /// Index of a facet given by poset ids, if present.
    pub fn facet_index(&self, chain_ids: &[usize]) -> Option<usize> {
        let index_of: BTreeMap<usize, u32> =
            self.vertex_ids.iter().enumerate().map(|(i, &x)| (x, i as u32)).collect();
        let mut verts = Vec::with_capacity(chain_ids.len());
        for x in chain_ids {
            verts.push(*index_of.get(x)?);
        }
        verts.sort_unstable();
        let top = self.complex.faces.last()?;
        top.binary_search(&verts).ok()
    }
}

// ---------------------------------------------------------------------------
// integer matrices and Smith normal form

/// Exact integer matrix with sparse storage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub n_rows: usize,
    pub n_cols: usize,
    entries: BTreeMap<(u32, u32), i128>,
}

impl IntMatrix {
    pub fn zero(n_rows: usize, n_cols: usize) -> Self {
        IntMatrix { n_rows, n_cols, entries: BTreeMap::new() }
    }

    pub fn from_triplets(n_rows: usize, n_cols: usize, triplets: &[(usize, usize, i128)]) -> Self {
        let mut m = IntMatrix::zero(n_rows, n_cols);
        for &(i, j, v) in triplets {
            m.set(i, j, v);
        }
        m
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        assert!(i < self.n_rows && j < self.n_cols);
        if v == 0 {
            self.entries.remove(&(i as u32, j as u32));
        } else {
            self.entries.insert((i as u32, j as u32), v);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        *self.entries.get(&(i as u32, j as u32)).unwrap_or(&0)
    }

    /// Sorted coordinate triplets (row, col, value).
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i128)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i as usize, j as usize, v))
    }

    pub fn n_entries(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n_cols, other.n_rows);
        let mut by_row: BTreeMap<u32, Vec<(u32, i128)>> = BTreeMap::new();
        for (&(i, j), &v) in &other.entries {
            by_row.entry(i).or_default().push((j, v));
        }
        let mut out = IntMatrix::zero(self.n_rows, other.n_cols);
        let mut acc: BTreeMap<(u32, u32), i128> = BTreeMap::new();
        for (&(i, k), &a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_default() += a * b;
                }
            }
        }
        acc.retain(|_, v| *v != 0);
        out.entries = acc;
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<i128>> {
        let mut rows = vec![vec![0i128; self.n_cols]; self.n_rows];
        for (&(i, j), &v) in &self.entries {
            rows[i as usize][j as usize] = v;
        }
        rows
    }
}

/// Invariant factors d1 | d2 | ... (all positive) and the rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<i128>,
    pub rank: usize,
}

impl SnfResult {
    pub fn torsion(&self) -> Vec<i128> {
        self.diagonal.iter().copied().filter(|&d| d > 1).collect()
    }
}

/// Smith normal form: sparse elimination on ±1 pivots, then a classical
/// dense reduction of whatever remains.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    // sparse rows and a column-to-rows index
    let mut rows: Vec<BTreeMap<u32, i128>> = vec![BTreeMap::new(); m.n_rows];
    let mut col_rows: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); m.n_cols];
    for (i, j, v) in m.triplets() {
        rows[i].insert(j as u32, v);
        col_rows[j].insert(i as u32);
    }
    let mut live_rows: BTreeSet<u32> = (0..m.n_rows as u32).collect();
    let mut live_cols: BTreeSet<u32> = (0..m.n_cols as u32).collect();
    let mut unit_rank = 0usize;
    loop {
        // choose a ±1 pivot with minimal fill estimate
        let mut best: Option<(u32, u32, u64)> = None;
        for &i in &live_rows {
            let row_nnz = rows[i as usize].len() as u64;
            if row_nnz == 0 {
                continue;
            }
            for (&j, &v) in &rows[i as usize] {
                if v == 1 || v == -1 {
                    let cost = (row_nnz - 1) * (col_rows[j as usize].len() as u64 - 1);
                    if best.is_none_or(|(_, _, c)| cost < c) {
                        best = Some((i, j, cost));
                        if cost == 0 {
                            break;
                        }
                    }
                }
            }
            if best.is_some_and(|(_, _, c)| c == 0) {
                break;
            }
        }
        let Some((pi, pj, _)) = best else { break };
        let pivot_val = rows[pi as usize][&pj];
        let pivot_row = rows[pi as usize].clone();
        let touched: Vec<u32> =
            col_rows[pj as usize].iter().copied().filter(|&r| r != pi).collect();
        for r in touched {
            let Some(&coef) = rows[r as usize].get(&pj) else { continue };
            let factor = coef * pivot_val; // coef / pivot_val since pivot is ±1
            for (&j, &v) in &pivot_row {
                let cell = rows[r as usize].entry(j).or_insert(0);
                *cell -= factor * v;
                if *cell == 0 {
                    rows[r as usize].remove(&j);
                    col_rows[j as usize].remove(&r);
                } else {
                    col_rows[j as usize].insert(r);
                }
            }
        }
        // retire the pivot row and column
        for (&j, _) in &pivot_row {
            col_rows[j as usize].remove(&pi);
        }
        rows[pi as usize].clear();
        live_rows.remove(&pi);
        live_cols.remove(&pj);
        unit_rank += 1;
    }
    // residual -> dense
    let res_rows: Vec<u32> = live_rows.iter().copied().filter(|&r| !rows[r as usize].is_empty()).collect();
    let mut res_cols: BTreeSet<u32> = BTreeSet::new();
    for &r in &res_rows {
        res_cols.extend(rows[r as usize].keys().copied());
    }
    let res_cols: Vec<u32> = res_cols.into_iter().collect();
    let col_pos: BTreeMap<u32, usize> =
        res_cols.iter().enumerate().map(|(p, &j)| (j, p)).collect();
    let mut dense = vec![vec![0i128; res_cols.len()]; res_rows.len()];
    for (ri, &r) in res_rows.iter().enumerate() {
        for (&j, &v) in &rows[r as usize] {
            dense[ri][col_pos[&j]] = v;
        }
    }
    let residual = dense_snf(dense);
    let mut diagonal = vec![1i128; unit_rank];
    diagonal.extend(residual);
    let rank = diagonal.len();
    SnfResult { diagonal, rank }
}

/// Classical dense Smith normal form; returns the nonzero diagonal.
pub fn dense_snf(mut a: Vec<Vec<i128>>) -> Vec<i128> {
    let (diag, _, _) = dense_snf_impl(&mut a, false);
    diag
}

/// Dense SNF with unimodular transforms: returns (diagonal, P, Q) with
/// P * A * Q equal to the diagonal matrix.
pub fn dense_snf_with_transforms(a: &IntMatrix) -> (SnfResult, IntMatrix, IntMatrix) {
    let mut dense = a.to_dense();
    let (diag, p, q) = dense_snf_impl(&mut dense, true);
    let (p, q) = (p.unwrap(), q.unwrap());
    let rank = diag.len();
    let mut pm = IntMatrix::zero(a.n_rows, a.n_rows);
    for (i, row) in p.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                pm.set(i, j, v);
            }
        }
    }
    let mut qm = IntMatrix::zero(a.n_cols, a.n_cols);
    for (i, row) in q.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            if v != 0 {
                qm.set(i, j, v);
            }
        }
    }
    (SnfResult { diagonal: diag, rank }, pm, qm)
}

#[allow(clippy::type_complexity)]
fn dense_snf_impl(
    a: &mut [Vec<i128>],
    transforms: bool,
) -> (Vec<i128>, Option<Vec<Vec<i128>>>, Option<Vec<Vec<i128>>>) {
    let n_rows = a.len();
    let n_cols = if n_rows == 0 { 0 } else { a[0].len() };
    let mut p = transforms.then(|| identity(n_rows));
    let mut q = transforms.then(|| identity(n_cols));
    let mut k = 0usize;
    while k < n_rows.min(n_cols) {
        // locate a minimal nonzero entry in the trailing submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..n_rows {
            for j in k..n_cols {
                if a[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        if let Some(p) = p.as_mut() {
            p.swap(k, pi);
        }
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        if let Some(q) = q.as_mut() {
            for row in q.iter_mut() {
                row.swap(k, pj);
            }
        }
        // clear row and column k by Euclidean steps
        let mut clean = true;
        for i in k + 1..n_rows {
            if a[i][k] != 0 {
                let f = a[i][k] / a[k][k];
                for j in 0..n_cols {
                    a[i][j] -= f * a[k][j];
                }
                if let Some(p) = p.as_mut() {
                    for j in 0..n_rows {
                        p[i][j] -= f * p[k][j];
                    }
                }
                if a[i][k] != 0 {
                    clean = false;
                }
            }
        }
        for j in k + 1..n_cols {
            if a[k][j] != 0 {
                let f = a[k][j] / a[k][k];
                for row in a.iter_mut() {
                    row[j] -= f * row[k];
                }
                if let Some(q) = q.as_mut() {
                    for row in q.iter_mut() {
                        row[j] -= f * row[k];
                    }
                }
                if a[k][j] != 0 {
                    clean = false;
                }
            }
        }
        if !clean {
            continue;
        }
        // divisibility sweep: fold any non-multiple into row k and redo
        let d = a[k][k];
        let mut redo = false;
        'scan: for i in k + 1..n_rows {
            for j in k + 1..n_cols {
                if a[i][j] % d != 0 {
                    for col in 0..n_cols {
                        let add = a[i][col];
                        a[k][col] += add;
                    }
                    if let Some(p) = p.as_mut() {
                        for col in 0..n_rows {
                            let add = p[i][col];
                            p[k][col] += add;
                        }
                    }
                    redo = true;
                    break 'scan;
                }
            }
        }
        if redo {
            continue;
        }
        if a[k][k] < 0 {
            for j in 0..n_cols {
                a[k][j] = -a[k][j];
            }
            if let Some(p) = p.as_mut() {
                for j in 0..n_rows {
                    p[k][j] = -p[k][j];
                }
            }
        }
        k += 1;
    }
    let diag: Vec<i128> = (0..k).map(|i| a[i][i]).collect();
    (diag, p, q)
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    let mut m = vec![vec![0i128; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

/// Integral basis of the kernel lattice of an integer matrix, via
/// unimodular column reduction.
pub fn kernel_basis(m: &IntMatrix) -> Vec<Vec<i128>> {
    let a = m.to_dense();
    let (n_rows, n_cols) = (m.n_rows, m.n_cols);
    let mut b: Vec<Vec<i128>> = (0..n_cols)
        .map(|j| (0..n_rows).map(|i| a[i][j]).collect())
        .collect(); // column-major
    let mut v = identity(n_cols);
    let mut pivot_cols = 0usize;
    for row in 0..n_rows {
        // reduce columns >= pivot_cols against each other at this row
        loop {
            let mut nonzero: Vec<usize> =
                (pivot_cols..n_cols).filter(|&j| b[j][row] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by_key(|&j| b[j][row].abs());
            let jmin = nonzero[0];
            for &j in &nonzero[1..] {
                let f = b[j][row] / b[jmin][row];
                for r in 0..n_rows {
                    let sub = f * b[jmin][r];
                    b[j][r] -= sub;
                }
                for r in 0..n_cols {
                    let sub = f * v[jmin][r];
                    v[j][r] -= sub;
                }
            }
        }
        if let Some(j) = (pivot_cols..n_cols).find(|&j| b[j][row] != 0) {
            b.swap(pivot_cols, j);
            v.swap(pivot_cols, j);
            pivot_cols += 1;
        }
    }
    (pivot_cols..n_cols).map(|j| v[j].clone()).collect()
}

// ---------------------------------------------------------------------------
// reduced homology

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: u64,
    pub torsion: Vec<i128>,
}

/// Reduced integral homology of the complex in every dimension 0..=dim.
pub fn reduced_homology(c: &SimplicialComplex) -> Vec<HomologyGroup> {
    let boundaries = c.boundary_matrices();
    let snfs: Vec<SnfResult> = boundaries.iter().map(smith_normal_form).collect();
    let dim = c.dim();
    let mut out = Vec::with_capacity(dim + 1);
    for k in 0..=dim {
        let n_k = c.n_faces(k) as i64;
        let rank_k = snfs[k].rank as i64;
        let (rank_k1, torsion) = if k + 1 <= dim {
            (snfs[k + 1].rank as i64, snfs[k + 1].torsion())
        } else {
            (0, Vec::new())
        };
        let betti = n_k - rank_k - rank_k1;
        assert!(betti >= 0, "negative Betti number; boundary ranks inconsistent");
        out.push(HomologyGroup { betti: betti as u64, torsion });
    }
    out
}

/// Reduced homology of the order complex of the proper part.
pub fn poset_homology(p: &GradedPoset) -> Result<Vec<HomologyGroup>, PosetError> {
    Ok(reduced_homology(&OrderComplex::of_proper_part(p)?.complex))
}

// ---------------------------------------------------------------------------
// the C_sigma subposets

/// The subposet C_sigma of Rees(cube_n, C_(n+1)) attached to a falling word.
pub struct CSigma {
    pub word: Word,
    /// ambient poset ids, sorted ascending
    pub elems: Vec<usize>,
    /// induced subposet (ranks 0..n)
    pub poset: GradedPoset,
    /// ambient ids of the chain m_sigma (ranks 0..n)
    pub m_sigma: Vec<usize>,
}

/// Build C_sigma by the recursive second-coordinate rules: rank-0 elements
/// are all (vertex, 1); at rank i the coordinate follows the bar pattern of
/// sigma, with the chain face promoted at a barred-then-unbarred step; two
/// top elements close the poset.
pub fn c_sigma(rcc: &ReesCubeChain, word: &Word) -> Result<CSigma, HomologyError> {
    if !word.is_falling() {
        return Err(HomologyError::NotFalling(word.render()));
    }
    let n = rcc.n;
    let m_sigma = rcc.m_sigma(word).map_err(|_| HomologyError::NotFalling(word.render()))?;
    let chain_words: Vec<Vec<u8>> = m_sigma
        .iter()
        .map(|&id| match rcc.elem(id) {
            crate::labeling::CubeChainElem::Pair(w, _) => w.clone(),
            _ => unreachable!("m_sigma stays in the proper part"),
        })
        .collect();
    let barred = |i: u32| -> bool {
        if i == 0 {
            false
        } else {
            word.letters()[i as usize - 1].barred
        }
    };
    // generic second coordinate by rank, plus the rule-iii exception ranks
    let mut generic = vec![1u32; n as usize];
    let mut exception = vec![false; n as usize];
    for i in 1..n as usize {
        let (prev, cur, next) = (barred(i as u32 - 1), barred(i as u32), barred(i as u32 + 1));
        let g_prev = generic[i - 1];
        if !cur {
            generic[i] = if prev { g_prev + 1 } else { g_prev };
        } else if next {
            generic[i] = g_prev + 1;
        } else {
            generic[i] = g_prev;
            exception[i] = true;
        }
    }
    // the top coordinates come from the (uniform) rank n-1 layer
    assert!(
        n == 1 || !exception[n as usize - 1],
        "the last letter of a falling word is barred, so rank n-1 is uniform"
    );
    let k_top = generic[n as usize - 1];

    let mut elems: Vec<usize> = Vec::new();
    for w in 0..3usize.pow(n) {
        let face = cube_word(w, n);
        let s = stars(&face);
        if s == n {
            continue;
        }
        let mut coord = generic[s as usize];
        if exception[s as usize] && face == chain_words[s as usize] {
            coord += 1;
        }
        let id = rcc
            .lookup_pair(&face, coord)
            .unwrap_or_else(|| panic!("C_sigma element ({},{}) missing", word_label(&face), coord));
        elems.push(id);
    }
    let all_star = vec![STAR; n as usize];
    for coord in [k_top, k_top + 1] {
        elems.push(rcc.lookup_pair(&all_star, coord).expect("top elements exist"));
    }
    elems.sort_unstable();
    for id in &m_sigma {
        assert!(elems.binary_search(id).is_ok(), "m_sigma must lie inside C_sigma");
    }
    let (poset, _) = rcc.poset.induced_subposet(&elems, |x| rcc.poset.rank(x) - 1);
    Ok(CSigma { word: word.clone(), elems, poset, m_sigma })
}

/// The comparison poset: the cube's face lattice with bottom removed and a
/// second maximal element adjoined over all coatoms.
pub fn tilde_cube(n: u32) -> GradedPoset {
    let n_words = 3usize.pow(n);
    let mut ranks = Vec::with_capacity(n_words + 1);
    let mut labels = Vec::with_capacity(n_words + 1);
    for w in 0..n_words {
        let word = cube_word(w, n);
        ranks.push(stars(&word));
        labels.push(word_label(&word));
    }
    ranks.push(n);
    labels.push(String::from("top'"));
    let mut covers = Vec::new();
    for w in 0..n_words {
        let word = cube_word(w, n);
        for pos in 0..n as usize {
            if word[pos] != STAR {
                let mut up = word.clone();
                up[pos] = STAR;
                covers.push((w, crate::zoo::word_index(&up)));
            }
        }
        if stars(&word) == n - 1 {
            covers.push((w, n_words));
        }
    }
    GradedPoset::from_covers(ranks, &covers, labels)
        .expect("tilde cube construction")
        .expect_valid("tilde_cube")
}

#[derive(Debug, Clone)]
pub struct CSigmaReport {
    pub word: String,
    pub iso_ok: bool,
    pub homology_ok: bool,
    pub element_count: usize,
}

impl CSigmaReport {
    pub fn ok(&self) -> bool {
        self.iso_ok && self.homology_ok
    }
}

/// Check that the forgetful map is an order isomorphism C_sigma -> C̃_n and
/// that the order complex of C_sigma has the homology of a suspended
/// (n-1)-sphere.
pub fn check_c_sigma_iso(rcc: &ReesCubeChain, word: &Word) -> Result<CSigmaReport, HomologyError> {
    let cs = c_sigma(rcc, word)?;
    let n = rcc.n;
    let tilde = tilde_cube(n);
    let n_words = 3usize.pow(n);
    // forgetful map in terms of new (induced) ids: the second top goes to
    // the adjoined maximal element
    let all_star = vec![STAR; n as usize];
    let mut image: Vec<usize> = Vec::with_capacity(cs.elems.len());
    let mut seen_first_top = false;
    for &id in &cs.elems {
        match rcc.elem(id) {
            crate::labeling::CubeChainElem::Pair(w, _) => {
                if *w == all_star {
                    if seen_first_top {
                        image.push(n_words); // 1̂'
                    } else {
                        image.push(crate::zoo::word_index(w));
                        seen_first_top = true;
                    }
                } else {
                    image.push(crate::zoo::word_index(w));
                }
            }
            _ => unreachable!(),
        }
    }
    // bijectivity: all targets distinct and counts match
    let distinct: BTreeSet<usize> = image.iter().copied().collect();
    let mut iso_ok = distinct.len() == tilde.len() && cs.elems.len() == tilde.len();
    if iso_ok {
        'outer: for (a_pos, &a_img) in image.iter().enumerate() {
            for (b_pos, &b_img) in image.iter().enumerate() {
                let lhs = cs.poset.leq(a_pos, b_pos);
                let rhs = tilde.leq(a_img, b_img);
                if lhs != rhs {
                    iso_ok = false;
                    break 'outer;
                }
            }
        }
    }
    let homology = reduced_homology(&OrderComplex::of_poset(&cs.poset).complex);
    let homology_ok = homology.iter().enumerate().all(|(k, h)| {
        let expect = if k == n as usize { 1 } else { 0 };
        h.betti == expect && h.torsion.is_empty()
    });
    Ok(CSigmaReport {
        word: word.render(),
        iso_ok,
        homology_ok,
        element_count: cs.elems.len(),
    })
}

// Note: the order of cs.poset's ids matches cs.elems (induced_subposet keeps
// the sorted order), which the forgetful-map check above relies on.

/// Fundamental cycle of Delta(C_sigma) expressed over the ambient facets:
/// an integral kernel generator of the top boundary restricted to the
/// C_sigma facets, normalized to +1 on the facet of m_sigma.
pub fn fundamental_cycle(
    rcc: &ReesCubeChain,
    ambient: &OrderComplex,
    cs: &CSigma,
) -> Result<Vec<(usize, i64)>, HomologyError> {
    let n = rcc.n as usize;
    // facets of Delta(C_sigma) as ambient facet indices
    let local = OrderComplex::of_poset(&cs.poset);
    let facets: Vec<Vec<usize>> = local
        .complex
        .faces
        .last()
        .expect("C_sigma complex has facets")
        .iter()
        .map(|verts| verts.iter().map(|&v| cs.elems[local.vertex_ids[v as usize]]).collect())
        .collect();
    let ambient_idx: Vec<usize> = facets
        .iter()
        .map(|chain| ambient.facet_index(chain).expect("C_sigma facet is an ambient facet"))
        .collect();
    // top boundary restricted to these facets
    let mut row_index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut triplets: Vec<(usize, usize, i128)> = Vec::new();
    for (j, chain) in facets.iter().enumerate() {
        // chain is sorted by ambient id; ambient ids were assigned in rank
        // order inside rcc, so this is also rank order
        let mut sorted = chain.clone();
        sorted.sort_unstable();
        for drop in 0..=n {
            let sub: Vec<usize> = sorted
                .iter()
                .enumerate()
                .filter(|&(p, _)| p != drop)
                .map(|(_, &v)| v)
                .collect();
            let next = row_index.len();
            let i = *row_index.entry(sub).or_insert(next);
            let sign = if drop % 2 == 0 { 1 } else { -1 };
            triplets.push((i, j, sign));
        }
    }
    let matrix = IntMatrix::from_triplets(row_index.len(), facets.len(), &triplets);
    let kernel = kernel_basis(&matrix);
    if kernel.len() != 1 {
        return Err(HomologyError::KernelRank { expected: 1, got: kernel.len() });
    }
    let coeffs = &kernel[0];
    if coeffs.iter().any(|&c| c != 1 && c != -1) {
        return Err(HomologyError::NotUnimodularCycle);
    }
    // normalize: +1 on the facet of m_sigma
    let mut m_chain = cs.m_sigma.clone();
    m_chain.sort_unstable();
    let m_local = facets
        .iter()
        .position(|chain| {
            let mut c = chain.clone();
            c.sort_unstable();
            c == m_chain
        })
        .expect("m_sigma is a facet of C_sigma");
    let flip = if coeffs[m_local] < 0 { -1 } else { 1 };
    Ok(ambient_idx
        .iter()
        .zip(coeffs.iter())
        .map(|(&idx, &c)| (idx, (c * flip) as i64))
        .collect())
}

#[derive(Debug, Clone)]
pub struct BasisReport {
    pub n: u32,
    pub n_words: usize,
    pub chainorder_ok: bool,
    pub triangular_ok: bool,
    pub rank: usize,
}

impl BasisReport {
    pub fn ok(&self) -> bool {
        self.chainorder_ok && self.triangular_ok && self.rank == self.n_words
    }
}

/// Verify the chain-order lemma (m_tau inside C_sigma forces tau <= sigma),
/// the resulting triangularity of the cycle matrix with ±1 pivots at the
/// m_sigma columns, and that the fundamental cycles have full row rank.
pub fn basis_rank_check(n: u32) -> Result<BasisReport, HomologyError> {
    let rcc = ReesCubeChain::new(n);
    let ambient = OrderComplex::of_proper_part(&rcc.poset)?;
    let words = falling_words(n);
    let mut sigmas = Vec::with_capacity(words.len());
    for w in &words {
        let cs = c_sigma(&rcc, w)?;
        let cycle = fundamental_cycle(&rcc, &ambient, &cs)?;
        sigmas.push((cs, cycle));
    }
    let n_facets = ambient.complex.faces.last().map_or(0, |f| f.len());
    let mut chainorder_ok = true;
    let mut triangular_ok = true;
    for (si, (cs_i, cycle_i)) in sigmas.iter().enumerate() {
        let elem_set: BTreeSet<usize> = cs_i.elems.iter().copied().collect();
        let mut dense = vec![0i64; n_facets];
        for &(idx, c) in cycle_i {
            dense[idx] = c;
        }
        for (sj, (cs_j, _)) in sigmas.iter().enumerate() {
            let m_tau_inside = cs_j.m_sigma.iter().all(|id| elem_set.contains(id));
            let tau_leq_sigma = falling_cmp(&cs_j.word, &cs_i.word) != core::cmp::Ordering::Greater;
            if m_tau_inside && !tau_leq_sigma {
                chainorder_ok = false;
            }
            let m_tau_facet = ambient.facet_index(&cs_j.m_sigma).expect("m_tau is a facet");
            let coeff = dense[m_tau_facet];
            if sj == si && coeff.abs() != 1 {
                triangular_ok = false;
            }
            if sj > si && coeff != 0 {
                triangular_ok = false;
            }
        }
    }
    // full row rank over the rationals by fraction-free elimination
    let mut mat: Vec<Vec<i128>> = sigmas
        .iter()
        .map(|(_, cycle)| {
            let mut row = vec![0i128; n_facets];
            for &(idx, c) in cycle {
                row[idx] = c as i128;
            }
            row
        })
        .collect();
    let rank = row_rank(&mut mat);
    Ok(BasisReport { n, n_words: words.len(), chainorder_ok, triangular_ok, rank })
}

/// Row rank of an integer matrix by exact elimination.
pub fn row_rank(mat: &mut [Vec<i128>]) -> usize {
    let n_rows = mat.len();
    if n_rows == 0 {
        return 0;
    }
    let n_cols = mat[0].len();
    let mut rank = 0;
    for col in 0..n_cols {
        if rank == n_rows {
            break;
        }
        // find and normalize a pivot row via gcd elimination downwards
        loop {
            let mut nonzero: Vec<usize> = (rank..n_rows).filter(|&r| mat[r][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                mat.swap(rank, nonzero[0]);
                rank += 1;
                break;
            }
            nonzero.sort_by_key(|&r| mat[r][col].abs());
            let rmin = nonzero[0];
            for &r in &nonzero[1..] {
                let f = mat[r][col] / mat[rmin][col];
                for j in col..n_cols {
                    let sub = f * mat[rmin][j];
                    mat[r][j] -= sub;
                }
            }
        }
    }
    rank
}

// ---------------------------------------------------------------------------
// standard fillings and the representation dimension count

/// Number of standard fillings of the diagram with 1..n: linear extensions
/// of the left-to-right / top-to-bottom precedence order, by subset DP.
pub fn standard_filling_count(d: &SkewHookDiagram) -> i128 {
    let cells = d.cells();
    let m = cells.len();
    assert!(m <= 20, "filling count limited to 20 boxes");
    let pos: BTreeMap<(u32, u32), usize> =
        cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    // predecessors: the left and upper neighbors must hold larger labels
    let preds: Vec<u32> = cells
        .iter()
        .map(|&(r, c)| {
            let mut mask = 0u32;
            if c > 0 {
                if let Some(&p) = pos.get(&(r, c - 1)) {
                    mask |= 1 << p;
                }
            }
            if r > 0 {
                if let Some(&p) = pos.get(&(r - 1, c)) {
                    mask |= 1 << p;
                }
            }
            mask
        })
        .collect();
    let mut dp = vec![0i128; 1 << m];
    dp[0] = 1;
    for mask in 0..(1u32 << m) - 1 {
        if dp[mask as usize] == 0 {
            continue;
        }
        for (i, &pred) in preds.iter().enumerate() {
            if mask >> i & 1 == 0 && pred & mask == pred {
                dp[(mask | 1 << i) as usize] += dp[mask as usize];
            }
        }
    }
    dp[(1usize << m) - 1]
}

#[derive(Debug, Clone)]
pub struct RepDimReport {
    pub n: u32,
    /// (shape, multiplicity 2^(n - first hook size), standard fillings)
    pub shapes: Vec<(SkewHookDiagram, i128, i128)>,
    pub total: i128,
    pub expected: i128,
}

impl RepDimReport {
    pub fn ok(&self) -> bool {
        self.total == self.expected
    }
}

/// Sum of 2^(n - |first hook|) * (standard filling count) over the shapes of
/// falling words, against the homology dimension n * D±_(n-1).
pub fn representation_dimension_check(n: u32) -> RepDimReport {
    let mut shapes: BTreeSet<SkewHookDiagram> = BTreeSet::new();
    for w in falling_words(n) {
        shapes.insert(crate::derange::word_shape(&w));
    }
    let mut detail = Vec::with_capacity(shapes.len());
    let mut total: i128 = 0;
    for shape in shapes {
        let first = shape.hooks[0];
        let mult = pow2(n - (first.u + first.b));
        let fillings = standard_filling_count(&shape);
        total += mult * fillings;
        detail.push((shape, mult, fillings));
    }
    let expected = n as i128 * signed_derangement_count(n - 1);
    RepDimReport { n, shapes: detail, total, expected }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::derange::Hook;
    use crate::rees::{rees_bounded, rees_minus};
    use crate::zoo;

    #[test]
    fn order_complex_examples() {
        // the 3-chain has a single proper element
        let oc = OrderComplex::of_proper_part(&zoo::chain(3)).unwrap();
        assert_eq!(oc.complex.n_faces(0), 1);
        assert_eq!(oc.complex.dim(), 0);
        // B3: barycentric subdivision of a hexagon boundary
        let oc = OrderComplex::of_proper_part(&zoo::boolean_algebra(3)).unwrap();
        assert_eq!(oc.complex.n_faces(0), 6);
        assert_eq!(oc.complex.n_faces(1), 6);
        let h = reduced_homology(&oc.complex);
        assert_eq!(h[0].betti, 0);
        assert_eq!(h[1].betti, 1);
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn boundary_of_boundary_vanishes() {
        for p in [zoo::boolean_algebra(3), zoo::cubical_lattice(2)] {
            let oc = OrderComplex::of_proper_part(&p).unwrap();
            let bds = oc.complex.boundary_matrices();
            for w in bds.windows(2) {
                let prod = w[0].mul(&w[1]);
                assert_eq!(prod.n_entries(), 0, "d.d != 0");
            }
        }
    }

    #[test]
    fn single_edge_boundary() {
        let c = SimplicialComplex::from_facets(&[vec![0, 1]]);
        let bds = c.boundary_matrices();
        assert_eq!(bds[1].get(0, 0), -1);
        assert_eq!(bds[1].get(1, 0), 1);
    }

    #[test]
    fn triangle_boundary_is_circle() {
        let c = SimplicialComplex::from_facets(&[vec![0, 1], vec![1, 2], vec![0, 2]]);
        let h = reduced_homology(&c);
        assert_eq!(h[0].betti, 0);
        assert_eq!(h[1].betti, 1);
    }

    #[test]
    fn boundary_of_3_simplex_is_sphere() {
        let facets: Vec<Vec<u32>> =
            vec![vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]];
        let h = reduced_homology(&SimplicialComplex::from_facets(&facets));
        assert_eq!(h[0].betti, 0);
        assert_eq!(h[1].betti, 0);
        assert_eq!(h[2].betti, 1);
        assert!(h.iter().all(|g| g.torsion.is_empty()));
    }

    #[test]
    fn snf_known_values() {
        let m = IntMatrix::from_triplets(2, 2, &[(0, 0, 2), (1, 1, 3)]);
        let snf = smith_normal_form(&m);
        assert_eq!(snf.diagonal, vec![1, 6]);
        let z = IntMatrix::zero(3, 4);
        assert_eq!(smith_normal_form(&z).rank, 0);
    }

    #[test]
    fn snf_projective_plane_torsion() {
        // 6-vertex triangulation of RP^2 (icosahedron antipodal quotient):
        // H~_1 = Z/2, everything else trivial
        let facets: Vec<Vec<u32>> = vec![
            vec![0, 1, 2],
            vec![0, 2, 3],
            vec![0, 3, 4],
            vec![0, 4, 5],
            vec![0, 1, 5],
            vec![1, 2, 4],
            vec![2, 3, 5],
            vec![1, 3, 4],
            vec![2, 4, 5],
            vec![1, 3, 5],
        ];
        let c = SimplicialComplex::from_facets(&facets);
        assert_eq!(c.n_faces(1), 15);
        let h = reduced_homology(&c);
        assert_eq!(h[0].betti, 0);
        assert_eq!(h[1].betti, 0);
        assert_eq!(h[1].torsion, vec![2]);
        assert_eq!(h[2].betti, 0);
    }

    #[test]
    fn snf_transforms_roundtrip() {
        let mut seed = 0x12345678u64;
        let mut rng = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 7) as i128 - 3
        };
        for _ in 0..5 {
            let rows = 6;
            let cols = 5;
            let mut m = IntMatrix::zero(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, rng());
                }
            }
            let (snf, p, q) = dense_snf_with_transforms(&m);
            let prod = p.mul(&m).mul(&q);
            for (i, j, v) in prod.triplets() {
                assert_eq!(i, j, "off-diagonal entry after transform");
                assert_eq!(v, snf.diagonal[i]);
            }
            for w in snf.diagonal.windows(2) {
                assert_eq!(w[1] % w[0], 0, "divisibility chain");
            }
            // sparse and dense paths agree
            assert_eq!(smith_normal_form(&m).diagonal, snf.diagonal);
        }
    }

    #[test]
    fn snf_rank_matches_row_rank() {
        let mut seed = 0x9e3779b9u64;
        let mut rng = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if (seed >> 40) % 2 == 0 {
                1i128
            } else {
                -1i128
            }
        };
        let mut m = IntMatrix::zero(20, 20);
        let mut dense = vec![vec![0i128; 20]; 20];
        for i in 0..20 {
            for j in 0..20 {
                let v = rng();
                m.set(i, j, v);
                dense[i][j] = v;
            }
        }
        assert_eq!(smith_normal_form(&m).rank, row_rank(&mut dense));
    }

    #[test]
    fn rees_cube_homology_small() {
        // concentrated in the top dimension with rank n * D±_(n-1)
        for n in 1..=2u32 {
            let rcc = ReesCubeChain::new(n);
            let h = poset_homology(&rcc.poset).unwrap();
            for (k, g) in h.iter().enumerate() {
                let expect = if k == n as usize {
                    (n as i128 * signed_derangement_count(n - 1)) as u64
                } else {
                    0
                };
                assert_eq!(g.betti, expect, "H~_{k} at n = {n}");
                assert!(g.torsion.is_empty());
            }
        }
    }

    #[test]
    fn facet_count_examples() {
        // facets of the order complex of Rees(cube_2, C_3)
        let rcc = ReesCubeChain::new(2);
        let oc = OrderComplex::of_proper_part(&rcc.poset).unwrap();
        assert_eq!(oc.complex.n_faces(2), rcc.poset.count_maximal_chains() as usize);
        // n = 3: the weighted chain count gives 8 * 48 facets
        let rcc = ReesCubeChain::new(3);
        let oc = OrderComplex::of_proper_part(&rcc.poset).unwrap();
        assert_eq!(oc.complex.n_faces(3), 384);
    }

    #[test]
    fn euler_characteristic_matches_mobius() {
        for n in 1..=3u32 {
            let rcc = ReesCubeChain::new(n);
            let oc = OrderComplex::of_proper_part(&rcc.poset).unwrap();
            assert_eq!(
                oc.complex.reduced_euler_characteristic(),
                rcc.poset.mobius_bounded().unwrap()
            );
        }
    }

    #[test]
    fn crosspolytope_truncated_homology() {
        // top reduced homology of Rees-(O_n, C_n) has dimension D_n±
        for n in 1..=2u32 {
            let r = rees_minus(&zoo::crosspolytope_lattice(n), &zoo::chain(n)).unwrap();
            let h = poset_homology(&r).unwrap();
            let top = n as usize - 1;
            for (k, g) in h.iter().enumerate() {
                let expect =
                    if k == top { signed_derangement_count(n) as u64 } else { 0 };
                assert_eq!(g.betti, expect);
                assert!(g.torsion.is_empty());
            }
        }
    }

    #[test]
    fn c_sigma_examples() {
        let rcc = ReesCubeChain::new(5);
        let sigma = Word::parse("0 -1 |-3| 5 |2| |-4| 6").unwrap();
        let cs = c_sigma(&rcc, &sigma).unwrap();
        // contains the displayed m_sigma chain
        for id in &cs.m_sigma {
            assert!(cs.elems.binary_search(id).is_ok());
        }
        // every rank 0 element is a (vertex, 1), and there are two top
        // elements
        let mut rank0 = 0;
        let mut top = 0;
        for &id in &cs.elems {
            match rcc.elem(id) {
                crate::labeling::CubeChainElem::Pair(w, i) => {
                    if stars(w) == 0 {
                        assert_eq!(*i, 1);
                        rank0 += 1;
                    }
                    if stars(w) == 5 {
                        top += 1;
                    }
                }
                _ => panic!("unexpected element"),
            }
        }
        assert_eq!(rank0, 32);
        assert_eq!(top, 2);
        assert_eq!(cs.elems.len(), 3usize.pow(5) + 1);
    }

    #[test]
    fn c_sigma_iso_exhaustive_small() {
        for n in 1..=2u32 {
            let rcc = ReesCubeChain::new(n);
            for w in falling_words(n) {
                let report = check_c_sigma_iso(&rcc, &w).unwrap();
                assert!(report.ok(), "failed for {}", report.word);
                assert_eq!(report.element_count, 3usize.pow(n) + 1);
            }
        }
    }

    #[test]
    fn fundamental_cycle_n1() {
        let rcc = ReesCubeChain::new(1);
        let ambient = OrderComplex::of_proper_part(&rcc.poset).unwrap();
        let words = falling_words(1);
        let cs = c_sigma(&rcc, &words[0]).unwrap();
        let cycle = fundamental_cycle(&rcc, &ambient, &cs).unwrap();
        // the suspension of S^0 is a 4-cycle: all four facets carry ±1
        assert_eq!(cycle.len(), 4);
        assert!(cycle.iter().all(|&(_, c)| c.abs() == 1));
        // cycle condition: boundary image vanishes
        let bds = ambient.complex.boundary_matrices();
        let top = bds.last().unwrap();
        let n_facets = ambient.complex.faces.last().unwrap().len();
        let mut vec_full = vec![0i128; n_facets];
        for &(idx, c) in &cycle {
            vec_full[idx] = c as i128;
        }
        for i in 0..top.n_rows {
            let mut acc = 0i128;
            for j in 0..top.n_cols {
                acc += top.get(i, j) * vec_full[j];
            }
            assert_eq!(acc, 0);
        }
        // the m_sigma coordinate is +1 after normalization
        let m_idx = ambient.facet_index(&cs.m_sigma).unwrap();
        assert_eq!(cycle.iter().find(|&&(idx, _)| idx == m_idx).unwrap().1, 1);
    }

    #[test]
    fn basis_rank_small() {
        for n in 1..=2u32 {
            let report = basis_rank_check(n).unwrap();
            assert!(report.ok(), "{report:?}");
            assert_eq!(report.n_words as i128, n as i128 * signed_derangement_count(n - 1));
        }
    }

    #[test]
    fn filling_counts() {
        // a single hook is a chain of cells: exactly one standard filling
        for (u, b) in [(0u32, 1u32), (1, 1), (1, 2), (2, 3)] {
            let d = SkewHookDiagram { hooks: vec![Hook { u, b }] };
            assert_eq!(standard_filling_count(&d), 1);
        }
        // a single column likewise
        let col = SkewHookDiagram { hooks: vec![Hook { u: 0, b: 4 }] };
        assert_eq!(standard_filling_count(&col), 1);
        // disjoint hooks: multinomial(n; sizes), cross-checked by DP
        let two = SkewHookDiagram {
            hooks: vec![Hook { u: 1, b: 1 }, Hook { u: 1, b: 1 }],
        };
        assert_eq!(standard_filling_count(&two), 6);
        let mixed = SkewHookDiagram {
            hooks: vec![Hook { u: 0, b: 1 }, Hook { u: 1, b: 1 }],
        };
        assert_eq!(standard_filling_count(&mixed), 3);
        let bigger = SkewHookDiagram {
            hooks: vec![Hook { u: 2, b: 1 }, Hook { u: 1, b: 2 }],
        };
        assert_eq!(standard_filling_count(&bigger), crate::num::multinomial(6, &[3, 3]));
    }

    #[test]
    fn rep_dim_small() {
        for n in 1..=4u32 {
            let report = representation_dimension_check(n);
            assert!(report.ok(), "{:?} != {}", report.total, report.expected);
        }
        assert_eq!(representation_dimension_check(2).total, 2);
        assert_eq!(representation_dimension_check(3).total, 15);
    }

    #[test]
    fn rees_bounded_homology_vs_mobius() {
        // |mu| equals the top Betti number for the Boolean Rees poset too
        let r = rees_bounded(&zoo::boolean_algebra(3), &zoo::chain(3)).unwrap();
        let h = poset_homology(&r).unwrap();
        let mu = r.mobius_bounded().unwrap();
        assert_eq!(h.last().unwrap().betti as i64, mu.abs());
    }
}
