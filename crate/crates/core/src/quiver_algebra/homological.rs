//! Hom spaces, `Ext¹` via projective presentations, and isomorphism tests.

use num_traits::Zero;

use super::algebra::FdAlgebra;
use super::rep::{QuiverRep, SubRep};
use crate::linalg::{self, Matrix, Q};

/// A module homomorphism, one matrix `N_v × M_v` per vertex.
pub type Hom = Vec<Matrix>;

/// Basis of `Hom(M, N)`: solutions of `φ_t·M(g) = N(g)·φ_s` over all generators.
pub fn hom_basis(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> Vec<Hom> {
    let nv = alg.vertex_count();
    let mut offsets = Vec::with_capacity(nv + 1);
    offsets.push(0);
    for v in 0..nv {
        offsets.push(offsets[v] + n.dims()[v] * m.dims()[v]);
    }
    let unknowns = offsets[nv];
    let var = |v: usize, r: usize, c: usize| offsets[v] + r * m.dims()[v] + c;

    let mut rows: Vec<Vec<(usize, Q)>> = Vec::new();
    for (pos, &g) in alg.generators().iter().enumerate() {
        let ge = &alg.basis()[g];
        let (s, t) = (ge.source, ge.target);
        let (mg, ng) = (m.map(pos), n.map(pos));
        for i in 0..n.dims()[t] {
            for j in 0..m.dims()[s] {
                let mut row = Vec::new();
                for l in 0..m.dims()[t] {
                    let c = mg.get(l, j);
                    if !c.is_zero() {
                        row.push((var(t, i, l), c.clone()));
                    }
                }
                for l in 0..n.dims()[s] {
                    let c = ng.get(i, l);
                    if !c.is_zero() {
                        row.push((var(s, l, j), -c.clone()));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut system = Matrix::zeros(rows.len(), unknowns);
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row {
            let v = system.get(i, *j) + c;
            system.set(i, *j, v);
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|x| (0..nv).map(|v| Matrix::from_fn(n.dims()[v], m.dims()[v], |r, c| x[var(v, r, c)].clone())).collect())
        .collect()
}

pub fn hom_dim(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> usize {
    hom_basis(alg, m, n).len()
}

pub fn compose(f: &Hom, g: &Hom) -> Hom {
    // f after g
    f.iter().zip(g).map(|(a, b)| a.mul(b)).collect()
}

fn flatten(h: &Hom) -> Vec<Q> {
    h.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

/// A projective presentation `0 → K → P₀ → M → 0` with `P₀` the projective cover.
pub struct Presentation {
    pub cover: QuiverRep,
    /// Per vertex, the surjection `P₀ → M`.
    pub surjection: Hom,
    pub kernel: SubRep,
}

pub fn projective_cover(alg: &FdAlgebra, m: &QuiverRep) -> Presentation {
    let nv = alg.vertex_count();
    let rad = m.radical_subrep(alg);
    // Lifts of a basis of the head, in vertex order.
    let mut tops: Vec<(usize, Vec<Q>)> = Vec::new();
    for (v, r) in rad.iter().enumerate().take(nv) {
        for col in linalg::complement(r).columns() {
            tops.push((v, col));
        }
    }
    let parts: Vec<QuiverRep> = tops.iter().map(|(v, _)| QuiverRep::projective(alg, *v)).collect();
    let cover = QuiverRep::direct_sum(alg, &parts);
    let mut columns: Vec<Vec<Vec<Q>>> = vec![Vec::new(); nv];
    for (v, top) in &tops {
        for (w, col) in columns.iter_mut().enumerate() {
            for b in alg.basis_between(*v, w) {
                col.push(m.action(alg, b).mul_vec(top));
            }
        }
    }
    let surjection: Hom = (0..nv)
        .map(|w| {
            let mut mat = Matrix::from_columns(m.dims()[w], &columns[w]);
            if columns[w].is_empty() {
                mat = Matrix::zeros(m.dims()[w], 0);
            }
            mat
        })
        .collect();
    let kernel = surjection.iter().map(Matrix::kernel).collect();
    Presentation { cover, surjection, kernel }
}

/// `Ext¹(M, N)` as the cokernel of `Hom(P₀, N) → Hom(K, N)`.
#[derive(Clone, Debug)]
pub struct Ext1 {
    pub dim: usize,
    /// Homomorphisms `K → N` whose classes form a basis.
    pub classes: Vec<Hom>,
}

pub fn ext1(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> Ext1 {
    let pres = projective_cover(alg, m);
    let k = pres.cover.restrict_to(alg, &pres.kernel);
    let from_k = hom_basis(alg, &k, n);
    if from_k.is_empty() {
        return Ext1 { dim: 0, classes: vec![] };
    }
    let restricted: Vec<Vec<Q>> =
        hom_basis(alg, &pres.cover, n).iter().map(|f| flatten(&compose(f, &pres.kernel))).collect();
    let len = from_k[0].iter().map(|m| m.rows() * m.cols()).sum();
    let mut spanning = restricted;
    let mut rank = Matrix::from_columns(len, &spanning).rank();
    let mut classes = Vec::new();
    for h in from_k {
        spanning.push(flatten(&h));
        let r = Matrix::from_columns(len, &spanning).rank();
        if r > rank {
            rank = r;
            classes.push(h);
        } else {
            spanning.pop();
        }
    }
    Ext1 { dim: classes.len(), classes }
}

pub fn ext1_dim(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> usize {
    ext1(alg, m, n).dim
}

/// `e[i][j] = dim Ext¹(S_i, S_j)`.
pub fn ext_matrix(alg: &FdAlgebra) -> Vec<Vec<usize>> {
    let simples: Vec<QuiverRep> = (0..alg.vertex_count()).map(|v| QuiverRep::simple(alg, v)).collect();
    simples.iter().map(|si| simples.iter().map(|sj| ext1_dim(alg, si, sj)).collect()).collect()
}

pub fn is_projective(alg: &FdAlgebra, m: &QuiverRep) -> bool {
    (0..alg.vertex_count()).all(|v| ext1_dim(alg, m, &QuiverRep::simple(alg, v)) == 0)
}

pub fn is_injective(alg: &FdAlgebra, m: &QuiverRep) -> bool {
    (0..alg.vertex_count()).all(|v| ext1_dim(alg, &QuiverRep::simple(alg, v), m) == 0)
}

/// Block-diagonal matrix of a homomorphism on the total space.
fn total_matrix(h: &Hom) -> Matrix {
    let rows: usize = h.iter().map(Matrix::rows).sum();
    let cols: usize = h.iter().map(Matrix::cols).sum();
    let mut out = Matrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in h {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
        r0 += b.rows();
        c0 += b.cols();
    }
    out
}

/// `End(M)` is local with residue field `Q`: its trace form has rank one.
/// In characteristic zero the radical of a matrix algebra is the kernel of the trace form.
pub fn is_absolutely_indecomposable(alg: &FdAlgebra, m: &QuiverRep) -> bool {
    if m.is_zero() {
        return false;
    }
    let ends: Vec<Matrix> = hom_basis(alg, m, m).iter().map(total_matrix).collect();
    let gram = Matrix::from_fn(ends.len(), ends.len(), |i, j| ends[i].mul(&ends[j]).trace());
    gram.rank() == 1
}

/// Isomorphism of two absolutely indecomposable modules: some `g∘f` is not
/// nilpotent, i.e. has nonzero trace.
pub fn indecomposables_isomorphic(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> bool {
    if m.dims() != n.dims() {
        return false;
    }
    let fs: Vec<Matrix> = hom_basis(alg, m, n).iter().map(total_matrix).collect();
    let gs: Vec<Matrix> = hom_basis(alg, n, m).iter().map(total_matrix).collect();
    fs.iter().any(|f| gs.iter().any(|g| !g.mul(f).trace().is_zero()))
}

/// General isomorphism test. A `true` answer is certified by an invertible
/// homomorphism found among pseudo-random integer combinations of a Hom
/// basis; `false` means none of the tried combinations was invertible.
pub fn is_isomorphic(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> bool {
    find_isomorphism(alg, m, n).is_some()
}

pub fn find_isomorphism(alg: &FdAlgebra, m: &QuiverRep, n: &QuiverRep) -> Option<Hom> {
    if m.dims() != n.dims() {
        return None;
    }
    if m.is_zero() {
        return Some(m.dims().iter().map(|_| Matrix::zeros(0, 0)).collect());
    }
    let basis = hom_basis(alg, m, n);
    if basis.is_empty() {
        return None;
    }
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    for attempt in 0..24 {
        let coeffs: Vec<Q> = (0..basis.len())
            .map(|i| {
                if attempt == 0 {
                    return linalg::q(1 + i as i64);
                }
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                linalg::q(((state >> 33) % 61) as i64 - 30)
            })
            .collect();
        let candidate: Hom = (0..alg.vertex_count())
            .map(|v| {
                let mut acc = Matrix::zeros(n.dims()[v], m.dims()[v]);
                for (h, c) in basis.iter().zip(&coeffs) {
                    acc = acc.add(&h[v].scale(c));
                }
                acc
            })
            .collect();
        if candidate.iter().all(Matrix::is_invertible) {
            return Some(candidate);
        }
    }
    None
}
