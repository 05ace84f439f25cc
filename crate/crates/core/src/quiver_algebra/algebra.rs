//! Finite-dimensional path algebras `kQ/I` with a monomial basis and
//! exact structure constants, plus the algebras derived from them
//! (idempotent truncations `eAe` and tensor products).

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::quiver::{Quiver, Relation};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};

pub const DEFAULT_MAX_LENGTH: usize = 64;

/// Sparse coordinate vector over an algebra basis, sorted by index, no zero entries.
pub type SparseVec = Vec<(usize, Q)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    pub source: usize,
    pub target: usize,
    pub degree: usize,
    /// Arrow names in traversal order; empty for idempotents.
    pub path: Vec<String>,
    /// The element as a product of generators, given as positions into
    /// [`FdAlgebra::generators`] in the order they act.
    pub word: Vec<usize>,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct FdAlgebra {
    vertices: Vec<String>,
    basis: Vec<BasisElement>,
    idempotents: Vec<usize>,
    generators: Vec<usize>,
    products: BTreeMap<(usize, usize), SparseVec>,
    presentation: Option<(Quiver, Vec<Relation>)>,
}

/// Label of a path: arrow names in composition order, `a*b` meaning `b` acts first.
pub fn path_label(vertex: &str, path: &[String]) -> String {
    if path.is_empty() {
        format!("e_{vertex}")
    } else {
        path.iter().rev().cloned().collect::<Vec<_>>().join("*")
    }
}

struct CheckedRelation {
    source: usize,
    target: usize,
    length: usize,
    terms: Vec<(Q, Vec<usize>)>,
}

fn check_relations(quiver: &Quiver, relations: &[Relation]) -> Result<Vec<CheckedRelation>> {
    let mut out = Vec::new();
    for rel in relations {
        let mut merged: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
        for (c, path) in &rel.terms {
            let idx = path
                .iter()
                .map(|name| {
                    quiver
                        .arrow_index(name)
                        .ok_or_else(|| Error::InvalidQuiver(format!("relation uses unknown arrow {name:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if idx.len() < 2 {
                return Err(Error::NonAdmissible(format!("relation term {path:?} has length {} < 2", idx.len())));
            }
            for w in idx.windows(2) {
                let (a, b) = (&quiver.arrows()[w[0]], &quiver.arrows()[w[1]]);
                if a.target != b.source {
                    return Err(Error::InvalidQuiver(format!(
                        "path {path:?} is not composable at {} -> {}",
                        a.name, b.name
                    )));
                }
            }
            *merged.entry(idx).or_insert_with(Q::zero) += c;
        }
        let terms: Vec<(Q, Vec<usize>)> =
            merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(p, c)| (c, p)).collect();
        let Some((_, first)) = terms.first() else {
            continue;
        };
        let source = quiver.arrows()[first[0]].source;
        let target = quiver.arrows()[*first.last().unwrap()].target;
        let length = first.len();
        for (_, p) in &terms {
            if p.len() != length {
                return Err(Error::NonHomogeneous(format!("relation mixes path lengths {} and {}", length, p.len())));
            }
            let (s, t) = (quiver.arrows()[p[0]].source, quiver.arrows()[*p.last().unwrap()].target);
            if (s, t) != (source, target) {
                return Err(Error::InvalidQuiver("relation terms are not parallel".into()));
            }
        }
        out.push(CheckedRelation { source, target, length, terms });
    }
    Ok(out)
}

/// Left multiplication by arrows on basis monomials, filled in degree by degree.
struct Reducer {
    left: HashMap<(usize, usize), SparseVec>,
}

impl Reducer {
    fn apply_arrow(&self, arrow: usize, v: &SparseVec) -> SparseVec {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (b, c) in v {
            if let Some(img) = self.left.get(&(arrow, *b)) {
                for (z, d) in img {
                    *acc.entry(*z).or_insert_with(Q::zero) += c * d;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn reduce_path(&self, start: SparseVec, path: &[usize]) -> SparseVec {
        path.iter().fold(start, |v, &a| self.apply_arrow(a, &v))
    }
}

/// Computes a monomial basis of `kQ/I` by graded elimination: degree `ℓ` is
/// spanned by `arrow · (basis of degree ℓ−1)` modulo the relations placed at
/// the left end, `r · q` with `q` a basis monomial.
pub fn build_algebra(quiver: Quiver, relations: Vec<Relation>, max_length: usize) -> Result<FdAlgebra> {
    let rels = check_relations(&quiver, &relations)?;
    let nv = quiver.vertices().len();
    let arrows = quiver.arrows().to_vec();

    let mut basis: Vec<BasisElement> = Vec::new();
    for (v, name) in quiver.vertices().iter().enumerate() {
        basis.push(BasisElement {
            source: v,
            target: v,
            degree: 0,
            path: vec![],
            word: vec![],
            label: path_label(name, &[]),
        });
    }
    let mut reducer = Reducer { left: HashMap::new() };
    let mut by_degree: Vec<Vec<usize>> = vec![(0..nv).collect()];
    let mut generators = Vec::new();
    let mut degree_one = Vec::new();
    for (i, a) in arrows.iter().enumerate() {
        let idx = basis.len();
        basis.push(BasisElement {
            source: a.source,
            target: a.target,
            degree: 1,
            path: vec![a.name.clone()],
            word: vec![i],
            label: a.name.clone(),
        });
        reducer.left.insert((i, a.source), vec![(idx, Q::one())]);
        generators.push(idx);
        degree_one.push(idx);
    }
    by_degree.push(degree_one);

    let mut finite = by_degree[1].is_empty();
    let mut degree = 2;
    while !finite && degree <= max_length {
        // Candidate coordinates (arrow, lower basis element), grouped by endpoints.
        let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (ai, a) in arrows.iter().enumerate() {
            for &b in &by_degree[degree - 1] {
                if basis[b].target == a.source {
                    groups.entry((basis[b].source, a.target)).or_default().push((ai, b));
                }
            }
        }
        let mut kernel: BTreeMap<(usize, usize), Vec<SparseVec>> = BTreeMap::new();
        for rel in rels.iter().filter(|r| r.length <= degree) {
            for &q in &by_degree[degree - rel.length] {
                if basis[q].target != rel.source {
                    continue;
                }
                let key = (basis[q].source, rel.target);
                let mut acc: BTreeMap<(usize, usize), Q> = BTreeMap::new();
                for (c, p) in &rel.terms {
                    let (last, rest) = p.split_last().unwrap();
                    let lower = reducer.reduce_path(vec![(q, Q::one())], rest);
                    for (b, d) in lower {
                        *acc.entry((*last, b)).or_insert_with(Q::zero) += c * d;
                    }
                }
                let Some(coords) = groups.get(&key) else {
                    continue;
                };
                let vec: SparseVec = acc
                    .into_iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(pair, c)| (coords.iter().position(|x| *x == pair).expect("candidate coordinate"), c))
                    .collect();
                if !vec.is_empty() {
                    kernel.entry(key).or_default().push(vec);
                }
            }
        }
        let mut new_degree = Vec::new();
        for (key, coords) in &groups {
            let rows = kernel.get(key).map(Vec::as_slice).unwrap_or(&[]);
            let mut m = Matrix::zeros(rows.len(), coords.len());
            for (i, r) in rows.iter().enumerate() {
                for (j, c) in r {
                    m.set(i, *j, c.clone());
                }
            }
            let (rref, pivots) = m.rref();
            let mut new_index = vec![None; coords.len()];
            for (j, &(ai, b)) in coords.iter().enumerate() {
                if pivots.contains(&j) {
                    continue;
                }
                let idx = basis.len();
                let mut path = basis[b].path.clone();
                path.push(arrows[ai].name.clone());
                let mut word = basis[b].word.clone();
                word.push(ai);
                let label = path_label("", &path);
                basis.push(BasisElement { source: key.0, target: key.1, degree, path, word, label });
                new_index[j] = Some(idx);
                new_degree.push(idx);
                reducer.left.insert((ai, b), vec![(idx, Q::one())]);
            }
            for (row, &pj) in pivots.iter().enumerate() {
                let mut v: SparseVec = Vec::new();
                for (j, slot) in new_index.iter().enumerate().take(coords.len()) {
                    if let Some(idx) = *slot {
                        let c = rref.get(row, j);
                        if !c.is_zero() {
                            v.push((idx, -c.clone()));
                        }
                    }
                }
                v.sort_by_key(|(i, _)| *i);
                reducer.left.insert(coords[pj], v);
            }
        }
        finite = new_degree.is_empty();
        by_degree.push(new_degree);
        degree += 1;
    }
    if !finite {
        return Err(Error::NotFiniteDimensional { max_length });
    }

    let mut products = BTreeMap::new();
    for (y, ey) in basis.iter().enumerate() {
        for (x, ex) in basis.iter().enumerate() {
            if ex.source != ey.target {
                continue;
            }
            let prod = reducer.reduce_path(vec![(y, Q::one())], &ex.word);
            if !prod.is_empty() {
                products.insert((x, y), prod);
            }
        }
    }
    Ok(FdAlgebra {
        vertices: quiver.vertices().to_vec(),
        idempotents: (0..nv).collect(),
        basis,
        generators,
        products,
        presentation: Some((quiver, relations)),
    })
}

impl FdAlgebra {
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn idempotent(&self, vertex: usize) -> usize {
        self.idempotents[vertex]
    }

    /// Basis indices of the generators that a representation assigns matrices to.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator(&self, position: usize) -> &BasisElement {
        &self.basis[self.generators[position]]
    }

    pub fn generator_position(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|&g| self.basis[g].label == label)
    }

    pub fn presentation(&self) -> Option<(&Quiver, &[Relation])> {
        self.presentation.as_ref().map(|(q, r)| (q, r.as_slice()))
    }

    /// `x · y`, where `y` acts first.
    pub fn mul(&self, x: usize, y: usize) -> &[(usize, Q)] {
        self.products.get(&(x, y)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn mul_vec(&self, u: &[(usize, Q)], w: &[(usize, Q)]) -> SparseVec {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (x, a) in u {
            for (y, b) in w {
                for (z, c) in self.mul(*x, *y) {
                    *acc.entry(*z).or_insert_with(Q::zero) += a * b * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    /// Nonzero structure constants, keyed by `(x, y)` for the product `x · y`.
    pub fn products(&self) -> &BTreeMap<(usize, usize), SparseVec> {
        &self.products
    }

    /// Basis elements from vertex `source` to vertex `target`.
    pub fn basis_between(&self, source: usize, target: usize) -> Vec<usize> {
        (0..self.basis.len()).filter(|&i| self.basis[i].source == source && self.basis[i].target == target).collect()
    }

    /// `c[i][j]` = number of basis paths from vertex `i` to vertex `j`.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut c = vec![vec![0; n]; n];
        for b in &self.basis {
            c[b.source][b.target] += 1;
        }
        c
    }

    pub fn is_associative(&self) -> bool {
        let n = self.basis.len();
        for x in 0..n {
            for y in 0..n {
                if self.basis[x].source != self.basis[y].target {
                    continue;
                }
                for z in 0..n {
                    if self.basis[y].source != self.basis[z].target {
                        continue;
                    }
                    let left = self.mul_vec(self.mul(x, y), &[(z, Q::one())]);
                    let right = self.mul_vec(&[(x, Q::one())], self.mul(y, z));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `ε_i ε_j = δ_ij ε_i` and `Σ ε_i` acts as the identity on every basis element.
    pub fn idempotents_are_complete(&self) -> bool {
        let one = Q::one();
        for (i, &ei) in self.idempotents.iter().enumerate() {
            for (j, &ej) in self.idempotents.iter().enumerate() {
                let expected: &[(usize, Q)] = if i == j { &[(ei, one.clone())] } else { &[] };
                if self.mul(ei, ej) != expected {
                    return false;
                }
            }
        }
        let unit: SparseVec = self.idempotents.iter().map(|&e| (e, one.clone())).collect();
        (0..self.basis.len()).all(|b| {
            let v = vec![(b, one.clone())];
            self.mul_vec(&unit, &v) == v && self.mul_vec(&v, &unit) == v
        })
    }

    /// The lowest degree whose component is zero; every basis element has smaller degree.
    pub fn loewy_bound(&self) -> usize {
        self.basis.iter().map(|b| b.degree).max().map_or(0, |d| d + 1)
    }

    /// Algebra structure identical up to the given relabelling of basis indices.
    pub fn same_structure_as(&self, other: &FdAlgebra, basis_map: &[usize]) -> bool {
        if self.dim() != other.dim() || basis_map.len() != self.dim() {
            return false;
        }
        for x in 0..self.dim() {
            for y in 0..self.dim() {
                let mut mine: SparseVec = self.mul(x, y).iter().map(|(z, c)| (basis_map[*z], c.clone())).collect();
                mine.sort_by_key(|(z, _)| *z);
                if mine.as_slice() != other.mul(basis_map[x], basis_map[y]) {
                    return false;
                }
            }
        }
        true
    }
}

/// The idempotent truncation `eAe`, `e = Σ_{i ∉ kill} ε_i`, whose module
/// category is the Serre quotient by the simples at the killed vertices.
#[derive(Clone, Debug)]
pub struct SerreQuotient {
    pub algebra: FdAlgebra,
    /// Parent vertex index of each retained vertex.
    pub retained: Vec<usize>,
    /// Parent basis index of each basis element of `eAe`.
    pub parent_basis: Vec<usize>,
}

pub fn serre_quotient(alg: &FdAlgebra, kill: &[usize]) -> Result<SerreQuotient> {
    for &k in kill {
        if k >= alg.vertex_count() {
            return Err(Error::Parameter(format!("vertex index {k} out of range")));
        }
    }
    let retained: Vec<usize> = (0..alg.vertex_count()).filter(|v| !kill.contains(v)).collect();
    if retained.len() == alg.vertex_count() {
        return Ok(SerreQuotient { algebra: alg.clone(), retained, parent_basis: (0..alg.dim()).collect() });
    }
    let mut vertex_map = vec![None; alg.vertex_count()];
    for (new, &old) in retained.iter().enumerate() {
        vertex_map[old] = Some(new);
    }
    let parent_basis: Vec<usize> = (0..alg.dim())
        .filter(|&b| vertex_map[alg.basis[b].source].is_some() && vertex_map[alg.basis[b].target].is_some())
        .collect();
    let mut basis_map = vec![None; alg.dim()];
    for (new, &old) in parent_basis.iter().enumerate() {
        basis_map[old] = Some(new);
    }
    let mut generators = Vec::new();
    let mut basis = Vec::new();
    for (new, &old) in parent_basis.iter().enumerate() {
        let e = &alg.basis[old];
        let word = if e.degree == 0 {
            vec![]
        } else {
            generators.push(new);
            vec![generators.len() - 1]
        };
        basis.push(BasisElement {
            source: vertex_map[e.source].unwrap(),
            target: vertex_map[e.target].unwrap(),
            degree: e.degree,
            path: e.path.clone(),
            word,
            label: e.label.clone(),
        });
    }
    let idempotents = retained.iter().map(|&v| basis_map[alg.idempotents[v]].unwrap()).collect();
    let mut products = BTreeMap::new();
    for (&(x, y), v) in &alg.products {
        if let (Some(nx), Some(ny)) = (basis_map[x], basis_map[y]) {
            let img: SparseVec = v
                .iter()
                .map(|(z, c)| (basis_map[*z].expect("eAe is closed under multiplication"), c.clone()))
                .collect();
            products.insert((nx, ny), img);
        }
    }
    Ok(SerreQuotient {
        algebra: FdAlgebra {
            vertices: retained.iter().map(|&v| alg.vertices[v].clone()).collect(),
            basis,
            idempotents,
            generators,
            products,
            presentation: None,
        },
        retained,
        parent_basis,
    })
}

/// `A ⊗ B` with vertices `(u, v)` in lexicographic order (index `u·|B₀| + v`)
/// and basis `x ⊗ y` at index `x·dim B + y`. Generators are `g ⊗ ε_v` for
/// every generator `g` of `A` and vertex `v` of `B` (in that nesting), followed by
/// `ε_u ⊗ h`.
pub fn tensor_product(a: &FdAlgebra, b: &FdAlgebra) -> FdAlgebra {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let vertices: Vec<String> = (0..na)
        .flat_map(|u| (0..nb).map(move |v| (u, v)))
        .map(|(u, v)| format!("{}⊗{}", a.vertices[u], b.vertices[v]))
        .collect();
    let vid = |u: usize, v: usize| u * nb + v;
    let bid = |x: usize, y: usize| x * b.dim() + y;

    let mut gen_index: HashMap<usize, usize> = HashMap::new();
    let mut generators = Vec::new();
    for &g in &a.generators {
        for v in 0..nb {
            gen_index.insert(bid(g, b.idempotents[v]), generators.len());
            generators.push(bid(g, b.idempotents[v]));
        }
    }
    for u in 0..na {
        for &h in &b.generators {
            gen_index.insert(bid(a.idempotents[u], h), generators.len());
            generators.push(bid(a.idempotents[u], h));
        }
    }

    let mut basis = Vec::with_capacity(a.dim() * b.dim());
    for ex in &a.basis {
        for ey in &b.basis {
            let mut word = Vec::new();
            for &hp in &ey.word {
                word.push(gen_index[&bid(a.idempotents[ex.source], b.generators[hp])]);
            }
            for &gp in &ex.word {
                word.push(gen_index[&bid(a.generators[gp], b.idempotents[ey.target])]);
            }
            let tag = |side: &str, p: &[String]| p.iter().map(|s| format!("{side}:{s}")).collect::<Vec<_>>();
            let mut path = tag("R", &ey.path);
            path.extend(tag("L", &ex.path));
            basis.push(BasisElement {
                source: vid(ex.source, ey.source),
                target: vid(ex.target, ey.target),
                degree: ex.degree + ey.degree,
                path,
                word,
                label: format!("{}⊗{}", ex.label, ey.label),
            });
        }
    }
    let mut products = BTreeMap::new();
    for (&(x1, x2), va) in &a.products {
        for (&(y1, y2), vb) in &b.products {
            let mut img: SparseVec = Vec::with_capacity(va.len() * vb.len());
            for (za, ca) in va {
                for (zb, cb) in vb {
                    img.push((bid(*za, *zb), ca * cb));
                }
            }
            img.sort_by_key(|(i, _)| *i);
            products.insert((bid(x1, y1), bid(x2, y2)), img);
        }
    }
    let idempotents = (0..na)
        .flat_map(|u| (0..nb).map(move |v| (u, v)))
        .map(|(u, v)| bid(a.idempotents[u], b.idempotents[v]))
        .collect();
    FdAlgebra { vertices, basis, idempotents, generators, products, presentation: None }
}

/// The one-vertex, one-dimensional algebra `k`.
pub fn ground_field(vertex: &str) -> FdAlgebra {
    let quiver = Quiver::new([vertex], Vec::<(String, String, String)>::new()).expect("single vertex quiver");
    build_algebra(quiver, Vec::new(), 1).expect("no arrows")
}

impl FdAlgebra {
    /// Tries to present the algebra as `kQ'/I'`: arrows are basis elements
    /// spanning a complement of `rad²` in `rad`, relations the graded kernel
    /// of the evaluation map on paths. Fails when that kernel is not spanned
    /// by length-homogeneous elements or when the path enumeration is too large.
    pub fn to_presentation(&self) -> Result<(Quiver, Vec<Relation>)> {
        if let Some((q, r)) = &self.presentation {
            return Ok((q.clone(), r.clone()));
        }
        let dim = self.dim();
        let radical: Vec<usize> = (0..dim).filter(|&b| self.basis[b].degree > 0).collect();
        let dense = |v: &[(usize, Q)]| {
            let mut out = vec![Q::zero(); dim];
            for (i, c) in v {
                out[*i] = c.clone();
            }
            out
        };
        let mut spanning: Vec<Vec<Q>> = Vec::new();
        for &x in &radical {
            for &y in &radical {
                let p = self.mul(x, y);
                if !p.is_empty() {
                    spanning.push(dense(p));
                }
            }
        }
        let mut rank = Matrix::from_columns(dim, &spanning).rank();
        let mut arrows = Vec::new();
        for &x in &radical {
            spanning.push(dense(&[(x, Q::one())]));
            let r = Matrix::from_columns(dim, &spanning).rank();
            if r > rank {
                rank = r;
                arrows.push(x);
            } else {
                spanning.pop();
            }
        }
        let names: Vec<String> = arrows.iter().map(|&x| format!("[{}]", self.basis[x].label)).collect();
        let quiver = Quiver::new(
            self.vertices.clone(),
            arrows.iter().zip(&names).map(|(&x, n)| {
                let e = &self.basis[x];
                (n.clone(), self.vertices[e.source].clone(), self.vertices[e.target].clone())
            }),
        )?;

        // Paths in the new arrows, by length, until every path of some length vanishes.
        const MAX_PATHS: usize = 20_000;
        let mut layers: Vec<Vec<(Vec<usize>, SparseVec)>> =
            vec![arrows.iter().enumerate().map(|(i, &x)| (vec![i], vec![(x, Q::one())])).collect()];
        loop {
            let last = layers.last().unwrap();
            if last.iter().all(|(_, v)| v.is_empty()) {
                break;
            }
            let mut next = Vec::new();
            for (p, v) in last {
                let end = self.basis[arrows[*p.last().unwrap()]].target;
                for (i, &x) in arrows.iter().enumerate() {
                    if self.basis[x].source == end {
                        let mut q = p.clone();
                        q.push(i);
                        next.push((q, self.mul_vec(&[(x, Q::one())], v)));
                    }
                }
            }
            if layers.iter().map(Vec::len).sum::<usize>() + next.len() > MAX_PATHS {
                return Err(Error::NotFiniteDimensional { max_length: layers.len() });
            }
            layers.push(next);
        }

        let mut relations = Vec::new();
        let endpoints = |p: &[usize]| (self.basis[arrows[p[0]]].source, self.basis[arrows[*p.last().unwrap()]].target);
        let mut groups: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for (len, layer) in layers.iter().enumerate() {
            for (i, (p, _)) in layer.iter().enumerate() {
                groups.entry(endpoints(p)).or_default().push((len, i));
            }
        }
        for members in groups.values() {
            let cols: Vec<Vec<Q>> = members.iter().map(|&(l, i)| dense(&layers[l][i].1)).collect();
            let total = Matrix::from_columns(dim, &cols).nullspace().len();
            let mut graded = 0;
            for len in 0..layers.len() {
                let idx: Vec<usize> = (0..members.len()).filter(|&k| members[k].0 == len).collect();
                if idx.is_empty() {
                    continue;
                }
                let sub: Vec<Vec<Q>> = idx.iter().map(|&k| cols[k].clone()).collect();
                for kv in Matrix::from_columns(dim, &sub).nullspace() {
                    if len == 0 {
                        return Err(Error::NonAdmissible("an arrow of the presentation vanishes".into()));
                    }
                    graded += 1;
                    let terms = idx
                        .iter()
                        .zip(&kv)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(&k, c)| {
                            let (l, i) = members[k];
                            (c.clone(), layers[l][i].0.iter().map(|&a| names[a].clone()).collect())
                        })
                        .collect();
                    relations.push(Relation::new(terms));
                }
            }
            if graded != total {
                return Err(Error::NonHomogeneous(
                    "the truncated algebra has no length-homogeneous presentation on these arrows".into(),
                ));
            }
        }
        let rebuilt = build_algebra(quiver.clone(), relations.clone(), layers.len() + 1)?;
        if rebuilt.dim() != self.dim() {
            return Err(Error::NonAdmissible("presentation does not reproduce the algebra".into()));
        }
        Ok((quiver, relations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn quiver(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(vertices.iter().copied(), arrows.iter().copied()).unwrap()
    }

    #[test]
    fn no_arrows() {
        let alg = build_algebra(quiver(&["a", "b", "c"], &[]), vec![], 8).unwrap();
        assert_eq!(alg.dim(), 3);
        assert!(alg.idempotents_are_complete());
    }

    #[test]
    fn dual_numbers() {
        let q = quiver(&["v"], &[("x", "v", "v")]);
        let alg = build_algebra(q, vec![Relation::zero_path(["x", "x"])], 8).unwrap();
        assert_eq!(alg.dim(), 2);
        assert!(alg.is_associative());
    }

    #[test]
    fn loop_without_relations_is_infinite() {
        let q = quiver(&["v"], &[("x", "v", "v")]);
        let err = build_algebra(q, vec![], 10).unwrap_err();
        assert!(matches!(err, Error::NotFiniteDimensional { max_length: 10 }));
    }

    #[test]
    fn rejects_short_and_mixed_relations() {
        let q = quiver(&["v"], &[("x", "v", "v")]);
        let err = build_algebra(q.clone(), vec![Relation::zero_path(["x"])], 8).unwrap_err();
        assert!(matches!(err, Error::NonAdmissible(_)));
        let mixed = Relation::new(vec![(q_one(), vec!["x".into(), "x".into()]), (q_one(), vec!["x".into(); 3])]);
        let err = build_algebra(q, vec![mixed], 8).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneous(_)));
    }

    fn q_one() -> Q {
        q(1)
    }

    #[test]
    fn commutative_square() {
        // a: 0→1, b: 1→3, c: 0→2, d: 2→3 with b∘a = d∘c.
        let qv = quiver(&["0", "1", "2", "3"], &[("a", "0", "1"), ("b", "1", "3"), ("c", "0", "2"), ("d", "2", "3")]);
        let alg = build_algebra(qv, vec![Relation::equal_paths(["a", "b"], ["c", "d"])], 8).unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
        assert!(alg.is_associative());
    }

    #[test]
    fn truncation_to_all_vertices_is_identity() {
        let q = quiver(&["v"], &[("x", "v", "v")]);
        let alg = build_algebra(q, vec![Relation::zero_path(["x", "x"])], 8).unwrap();
        let sq = serre_quotient(&alg, &[]).unwrap();
        assert_eq!(sq.algebra.dim(), alg.dim());
        assert!(alg.same_structure_as(&sq.algebra, &sq.parent_basis));
    }

    #[test]
    fn tensor_dimensions() {
        let q = quiver(&["v"], &[("x", "v", "v")]);
        let dual = build_algebra(q, vec![Relation::zero_path(["x", "x"])], 8).unwrap();
        let t = tensor_product(&dual, &dual);
        assert_eq!(t.dim(), 4);
        assert_eq!(t.generators().len(), 2);
        assert!(t.is_associative());
        assert!(t.idempotents_are_complete());
    }
}
