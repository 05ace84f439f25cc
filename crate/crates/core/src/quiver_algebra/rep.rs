//! Finite-dimensional modules, stored as one matrix per generator of the
//! algebra (the arrows, for an algebra built from a quiver).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::algebra::FdAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{self, coordinates_matrix, format_q, parse_q, Matrix, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A subrepresentation, given by a column basis of its space at every vertex.
pub type SubRep = Vec<Matrix>;

impl QuiverRep {
    /// Checks matrix shapes and that the assignment is a module over `alg`.
    pub fn new(alg: &FdAlgebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let rep = QuiverRep { dims, maps };
        rep.check_shapes(alg)?;
        if !rep.is_module(alg) {
            return Err(Error::InvalidRepresentation("the relations do not hold".into()));
        }
        Ok(rep)
    }

    pub(crate) fn new_unchecked(dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        QuiverRep { dims, maps }
    }

    fn check_shapes(&self, alg: &FdAlgebra) -> Result<()> {
        if self.dims.len() != alg.vertex_count() || self.maps.len() != alg.generators().len() {
            return Err(Error::InvalidRepresentation(format!(
                "expected {} vertices and {} maps, got {} and {}",
                alg.vertex_count(),
                alg.generators().len(),
                self.dims.len(),
                self.maps.len()
            )));
        }
        for (pos, m) in self.maps.iter().enumerate() {
            let g = alg.generator(pos);
            let expected = (self.dims[g.target], self.dims[g.source]);
            if m.shape() != expected {
                return Err(Error::InvalidRepresentation(format!(
                    "map for {} has shape {:?}, expected {:?}",
                    g.label,
                    m.shape(),
                    expected
                )));
            }
        }
        Ok(())
    }

    pub fn zero(alg: &FdAlgebra) -> Self {
        let maps = (0..alg.generators().len()).map(|_| Matrix::zeros(0, 0)).collect();
        QuiverRep { dims: vec![0; alg.vertex_count()], maps }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, generator: usize) -> &Matrix {
        &self.maps[generator]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// The matrix by which basis element `b` acts, `M_{source} → M_{target}`.
    pub fn action(&self, alg: &FdAlgebra, b: usize) -> Matrix {
        let e = &alg.basis()[b];
        let mut m = Matrix::identity(self.dims[e.source]);
        for &g in &e.word {
            m = self.maps[g].mul(&m);
        }
        m
    }

    fn action_of_vec(&self, alg: &FdAlgebra, v: &[(usize, Q)], rows: usize, cols: usize) -> Matrix {
        let mut out = Matrix::zeros(rows, cols);
        for (z, c) in v {
            out = out.add(&self.action(alg, *z).scale(c));
        }
        out
    }

    /// Multiplicativity on generators: `M(g)·M(y) = M(g·y)` for every generator `g` and basis element `y`.
    pub fn is_module(&self, alg: &FdAlgebra) -> bool {
        if self.check_shapes(alg).is_err() {
            return false;
        }
        let actions: Vec<Matrix> = (0..alg.dim()).map(|b| self.action(alg, b)).collect();
        for (pos, &g) in alg.generators().iter().enumerate() {
            let ge = &alg.basis()[g];
            for (y, ye) in alg.basis().iter().enumerate() {
                if ye.target != ge.source {
                    continue;
                }
                let lhs = self.maps[pos].mul(&actions[y]);
                let rhs = self.action_of_vec(alg, alg.mul(g, y), self.dims[ge.target], self.dims[ye.source]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    pub fn simple(alg: &FdAlgebra, vertex: usize) -> Self {
        let mut dims = vec![0; alg.vertex_count()];
        dims[vertex] = 1;
        QuiverRep::with_zero_maps(alg, dims)
    }

    pub fn with_zero_maps(alg: &FdAlgebra, dims: Vec<usize>) -> Self {
        let maps = (0..alg.generators().len())
            .map(|pos| {
                let g = alg.generator(pos);
                Matrix::zeros(dims[g.target], dims[g.source])
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// `P(i) = A ε_i`: basis the paths starting at `i`, grouped by their target.
    pub fn projective(alg: &FdAlgebra, vertex: usize) -> Self {
        let n = alg.vertex_count();
        let by_target: Vec<Vec<usize>> = (0..n).map(|v| alg.basis_between(vertex, v)).collect();
        let dims = by_target.iter().map(Vec::len).collect();
        let maps = alg
            .generators()
            .iter()
            .map(|&g| {
                let ge = &alg.basis()[g];
                let (src, tgt) = (&by_target[ge.source], &by_target[ge.target]);
                let mut m = Matrix::zeros(tgt.len(), src.len());
                for (j, &p) in src.iter().enumerate() {
                    for (z, c) in alg.mul(g, p) {
                        let i = tgt.iter().position(|x| x == z).expect("product stays in P(i)");
                        m.set(i, j, c.clone());
                    }
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// `I(i) = D(ε_i A)`: at vertex `v`, the dual of the paths from `v` to `i`.
    pub fn injective(alg: &FdAlgebra, vertex: usize) -> Self {
        let n = alg.vertex_count();
        let by_source: Vec<Vec<usize>> = (0..n).map(|v| alg.basis_between(v, vertex)).collect();
        let dims = by_source.iter().map(Vec::len).collect();
        let maps = alg
            .generators()
            .iter()
            .map(|&g| {
                let ge = &alg.basis()[g];
                let (src, tgt) = (&by_source[ge.source], &by_source[ge.target]);
                let mut m = Matrix::zeros(tgt.len(), src.len());
                for (i, &x) in tgt.iter().enumerate() {
                    for (z, c) in alg.mul(x, g) {
                        let j = src.iter().position(|p| p == z).expect("product stays in the dual module");
                        m.set(i, j, c.clone());
                    }
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }

    pub fn direct_sum(alg: &FdAlgebra, parts: &[QuiverRep]) -> Self {
        let n = alg.vertex_count();
        let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
        let maps = (0..alg.generators().len())
            .map(|pos| {
                let g = alg.generator(pos);
                let mut m = Matrix::zeros(dims[g.target], dims[g.source]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let block = &p.maps[pos];
                    for i in 0..block.rows() {
                        for j in 0..block.cols() {
                            m.set(r0 + i, c0 + j, block.get(i, j).clone());
                        }
                    }
                    r0 += p.dims[g.target];
                    c0 += p.dims[g.source];
                }
                m
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// Exterior tensor product over `A ⊗ B` (see `tensor_product` for the generator order).
    pub fn tensor(a_alg: &FdAlgebra, a: &QuiverRep, b_alg: &FdAlgebra, b: &QuiverRep) -> Self {
        let (na, nb) = (a_alg.vertex_count(), b_alg.vertex_count());
        let dims: Vec<usize> =
            (0..na).flat_map(|u| (0..nb).map(move |v| (u, v))).map(|(u, v)| a.dims[u] * b.dims[v]).collect();
        let mut maps = Vec::new();
        for pos in 0..a_alg.generators().len() {
            for v in 0..nb {
                maps.push(a.maps[pos].kron(&Matrix::identity(b.dims[v])));
            }
        }
        for u in 0..na {
            for pos in 0..b_alg.generators().len() {
                maps.push(Matrix::identity(a.dims[u]).kron(&b.maps[pos]));
            }
        }
        QuiverRep { dims, maps }
    }

    /// Dual module along an involution of the generators that reverses each
    /// one: the new map for `swap[g]` is the transpose of the map for `g`.
    pub fn dual_along(&self, swap: &[usize]) -> Self {
        let mut maps = vec![Matrix::zeros(0, 0); self.maps.len()];
        for (g, &h) in swap.iter().enumerate() {
            maps[h] = self.maps[g].transpose();
        }
        QuiverRep { dims: self.dims.clone(), maps }
    }

    pub fn full_subrep(&self) -> SubRep {
        self.dims.iter().map(|&d| Matrix::identity(d)).collect()
    }

    /// The representation carried by a subrepresentation, in the coordinates of its bases.
    pub fn restrict_to(&self, alg: &FdAlgebra, sub: &SubRep) -> Self {
        let dims = sub.iter().map(Matrix::cols).collect();
        let maps = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(pos, &g)| {
                let ge = &alg.basis()[g];
                let image = self.maps[pos].mul(&sub[ge.source]);
                coordinates_matrix(&sub[ge.target], &image)
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// `M / sub`, using standard-basis complements as coordinates.
    pub fn quotient_by(&self, alg: &FdAlgebra, sub: &SubRep) -> Self {
        let (complements, projections) = quotient_coordinates(sub);
        let dims = complements.iter().map(Matrix::cols).collect();
        let maps = alg
            .generators()
            .iter()
            .enumerate()
            .map(|(pos, &g)| {
                let ge = &alg.basis()[g];
                projections[ge.target].mul(&self.maps[pos]).mul(&complements[ge.source])
            })
            .collect();
        QuiverRep { dims, maps }
    }

    /// `rad(A)·X` for a subrepresentation `X`.
    pub fn radical_of(&self, alg: &FdAlgebra, sub: &SubRep) -> SubRep {
        let mut images: Vec<Vec<Vec<Q>>> = vec![Vec::new(); self.dims.len()];
        for (pos, &g) in alg.generators().iter().enumerate() {
            let ge = &alg.basis()[g];
            let img = self.maps[pos].mul(&sub[ge.source]);
            images[ge.target].extend(img.columns());
        }
        images.iter().zip(&self.dims).map(|(cols, &d)| linalg::span(d, cols)).collect()
    }

    pub fn radical_subrep(&self, alg: &FdAlgebra) -> SubRep {
        self.radical_of(alg, &self.full_subrep())
    }

    pub fn radical(&self, alg: &FdAlgebra) -> Self {
        self.restrict_to(alg, &self.radical_subrep(alg))
    }

    /// The vectors killed by every generator: the largest semisimple subrepresentation.
    pub fn socle_subrep(&self, alg: &FdAlgebra) -> SubRep {
        (0..self.dims.len())
            .map(|v| {
                let outgoing: Vec<&Matrix> = alg
                    .generators()
                    .iter()
                    .enumerate()
                    .filter(|(_, &g)| alg.basis()[g].source == v)
                    .map(|(pos, _)| &self.maps[pos])
                    .collect();
                let mut stacked = Matrix::zeros(0, self.dims[v]);
                for m in outgoing {
                    stacked = stacked.vstack(m);
                }
                stacked.kernel()
            })
            .collect()
    }

    pub fn socle(&self, alg: &FdAlgebra) -> Self {
        self.restrict_to(alg, &self.socle_subrep(alg))
    }

    /// Dimension vectors of `rad^i M / rad^{i+1} M`, top layer first.
    pub fn radical_layers(&self, alg: &FdAlgebra) -> Vec<Vec<usize>> {
        let mut layers = Vec::new();
        let mut current = self.full_subrep();
        while current.iter().any(|m| m.cols() > 0) {
            let next = self.radical_of(alg, &current);
            layers.push(current.iter().zip(&next).map(|(a, b)| a.cols() - b.cols()).collect());
            current = next;
        }
        layers
    }

    pub fn head_dims(&self, alg: &FdAlgebra) -> Vec<usize> {
        self.radical_layers(alg).into_iter().next().unwrap_or_else(|| vec![0; self.dims.len()])
    }

    /// Composition factors (vertex indices) read off the radical filtration, head first.
    pub fn composition_series(&self, alg: &FdAlgebra) -> Vec<usize> {
        self.radical_layers(alg)
            .iter()
            .flat_map(|layer| layer.iter().enumerate().flat_map(|(v, &d)| std::iter::repeat_n(v, d)))
            .collect()
    }

    pub fn is_uniserial(&self, alg: &FdAlgebra) -> bool {
        self.radical_layers(alg).iter().all(|layer| layer.iter().sum::<usize>() == 1)
    }

    pub fn is_semisimple(&self, alg: &FdAlgebra) -> bool {
        self.radical_layers(alg).len() <= 1
    }

    pub fn to_json(&self, alg: &FdAlgebra) -> RepJson {
        RepJson {
            dims: alg.vertices().iter().cloned().zip(self.dims.iter().copied()).collect(),
            maps: (0..self.maps.len())
                .map(|pos| {
                    let rows = self.maps[pos].to_rows().iter().map(|r| r.iter().map(format_q).collect()).collect();
                    (alg.generator(pos).label.clone(), rows)
                })
                .collect(),
        }
    }

    /// Reads a representation file; missing maps are zero.
    pub fn from_json(alg: &FdAlgebra, json: &RepJson) -> Result<Self> {
        let mut dims = vec![0; alg.vertex_count()];
        for (name, &d) in &json.dims {
            let v = alg
                .vertex_index(name)
                .ok_or_else(|| Error::InvalidRepresentation(format!("unknown vertex {name:?}")))?;
            dims[v] = d;
        }
        let mut rep = QuiverRep::with_zero_maps(alg, dims);
        for (label, rows) in &json.maps {
            let pos = alg
                .generator_position(label)
                .ok_or_else(|| Error::InvalidRepresentation(format!("unknown arrow {label:?}")))?;
            let cols = rep.maps[pos].cols();
            let parsed = rows
                .iter()
                .map(|r| {
                    r.iter()
                        .map(|x| parse_q(x).ok_or_else(|| Error::Parse(format!("bad matrix entry {x:?}"))))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            let m = Matrix::from_rows(parsed, cols)
                .filter(|m| m.rows() == rep.maps[pos].rows())
                .ok_or_else(|| Error::InvalidRepresentation(format!("map {label:?} has the wrong shape")))?;
            rep.maps[pos] = m;
        }
        QuiverRep::new(alg, rep.dims, rep.maps)
    }
}

/// Per vertex, a complement basis `C` and the projection `P` with `P·C = 1` and `P·sub = 0`.
fn quotient_coordinates(sub: &SubRep) -> (Vec<Matrix>, Vec<Matrix>) {
    let mut complements = Vec::new();
    let mut projections = Vec::new();
    for s in sub {
        let c = linalg::complement(s);
        let full = s.hstack(&c);
        let inv = full.inverse().expect("subspace plus complement is a basis");
        let rows: Vec<usize> = (s.cols()..full.cols()).collect();
        projections.push(inv.select_rows(&rows));
        complements.push(c);
    }
    (complements, projections)
}

/// File form of a representation: vertex dimensions and one matrix (list of
/// rows of `p/q` strings) per arrow.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub dims: BTreeMap<String, usize>,
    #[serde(default)]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}
