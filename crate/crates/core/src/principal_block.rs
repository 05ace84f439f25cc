//! The principal block of `HC(c, c)` at `c = r/m` as a quiver algebra: a
//! line of `⌊n/m⌋ + 1` vertices `S_0 … S_k` with arrows `α_i: S_i → S_{i−1}`,
//! `β_i: S_{i−1} → S_i` and relations `α_iβ_i = β_iα_i = 0`.
//!
//! `S_0` has full support and `S_k` minimal support. The regular bimodule is
//! the representation with every `α` the identity and every `β` zero; the
//! double wall-crossing bimodule is its mirror.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hc_model::LeafDescriptor;
use crate::linalg::Matrix;
use crate::quiver_algebra::indecomposables::{enumerate_indecomposables, string_classification, string_module};
use crate::quiver_algebra::{
    build_algebra, ground_field, indecomposables_isomorphic, is_projective, serre_quotient, tensor_product, FdAlgebra,
    Quiver, QuiverRep, Relation, RepJson, SerreQuotient, DEFAULT_MAX_LENGTH,
};
use crate::symgroup::YoungSubgroup;

pub fn vertex_name(i: usize) -> String {
    format!("S{i}")
}

pub fn alpha(i: usize) -> String {
    format!("alpha{i}")
}

pub fn beta(i: usize) -> String {
    format!("beta{i}")
}

/// Generator position of `α_i` (`β_i` is the next one).
pub fn alpha_position(i: usize) -> usize {
    2 * (i - 1)
}

pub fn beta_position(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// The block quiver with `k + 1` vertices; arrows ordered `α_1, β_1, α_2, β_2, …`.
pub fn block_presentation(k: usize) -> (Quiver, Vec<Relation>) {
    let vertices: Vec<String> = (0..=k).map(vertex_name).collect();
    let mut arrows = Vec::new();
    let mut relations = Vec::new();
    for i in 1..=k {
        arrows.push((alpha(i), vertex_name(i), vertex_name(i - 1)));
        arrows.push((beta(i), vertex_name(i - 1), vertex_name(i)));
        // α_iβ_i: β_i then α_i; β_iα_i: α_i then β_i.
        relations.push(Relation::zero_path([beta(i), alpha(i)]));
        relations.push(Relation::zero_path([alpha(i), beta(i)]));
    }
    (Quiver::new(vertices, arrows).expect("block quiver is well formed"), relations)
}

pub fn block_algebra(k: usize) -> FdAlgebra {
    let (q, r) = block_presentation(k);
    build_algebra(q, r, DEFAULT_MAX_LENGTH).expect("block algebra is finite dimensional")
}

#[derive(Clone, Debug)]
pub struct BlockModel {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub algebra: FdAlgebra,
    /// The regular bimodule.
    pub h: QuiverRep,
    /// The double wall-crossing bimodule.
    pub d: QuiverRep,
    /// Support of `S_i`, indexed by vertex.
    pub leaf_map: Vec<LeafDescriptor>,
}

/// Representation with every vertex one-dimensional, `α`'s set to `alpha_value`
/// and `β`'s to `beta_value`.
fn line_rep(alg: &FdAlgebra, k: usize, alpha_value: i64, beta_value: i64) -> QuiverRep {
    let mut maps = Vec::new();
    for _ in 1..=k {
        maps.push(Matrix::from_i64(1, 1, &[alpha_value]));
        maps.push(Matrix::from_i64(1, 1, &[beta_value]));
    }
    QuiverRep::new(alg, vec![1; k + 1], maps).expect("line representation satisfies the block relations")
}

/// The principal block for `S_n` at denominator `m`. For `m > n` the block is
/// a single vertex with the one-dimensional algebra.
pub fn build_block(n: usize, m: usize) -> Result<BlockModel> {
    if m < 2 {
        return Err(Error::Parameter(format!("block needs m >= 2, got {m}")));
    }
    if n == 0 {
        return Err(Error::Parameter("block needs n >= 1".into()));
    }
    let k = n / m;
    let algebra = block_algebra(k);
    let h = line_rep(&algebra, k, 1, 0);
    let d = line_rep(&algebra, k, 0, 1);
    let leaf_map = (0..=k).map(|i| LeafDescriptor::new(i, n, m)).collect::<Result<Vec<_>>>()?;
    Ok(BlockModel { n, m, k, algebra, h, d, leaf_map })
}

impl BlockModel {
    pub fn simple(&self, i: usize) -> QuiverRep {
        QuiverRep::simple(&self.algebra, i)
    }

    /// `α_i ↔ β_i` as a permutation of generator positions.
    pub fn duality_swap(&self) -> Vec<usize> {
        (0..2 * self.k).map(|p| p ^ 1).collect()
    }

    pub fn to_dot(&self) -> String {
        let (quiver, _) = self.algebra.presentation().expect("block algebra has a presentation");
        let leaves = &self.leaf_map;
        quiver.to_dot_with_labels("principal_block", |v| {
            let i: usize = v[1..].parse().expect("vertex names are S<i>");
            format!("{v} (leaf {})", leaves[i].index)
        })
    }

    pub fn distinguished_json(&self) -> DistinguishedJson {
        DistinguishedJson { h: self.h.to_json(&self.algebra), d: self.d.to_json(&self.algebra) }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DistinguishedJson {
    #[serde(rename = "H")]
    pub h: RepJson,
    #[serde(rename = "D")]
    pub d: RepJson,
}

/// Contravariant involution: dual spaces, transposed maps, `α_i ↔ β_i`.
pub fn duality(block: &BlockModel, m: &QuiverRep) -> QuiverRep {
    m.dual_along(&block.duality_swap())
}

#[derive(Clone, Debug)]
pub struct QuotientBlock {
    pub quotient: SerreQuotient,
    /// Image of the regular bimodule under the quotient functor.
    pub h_image: QuiverRep,
    pub h_image_projective: bool,
}

pub fn quotient_block(block: &BlockModel, kill: &[usize]) -> Result<QuotientBlock> {
    let quotient = serre_quotient(&block.algebra, kill)?;
    let h_image = quotient.apply(&block.algebra, &block.h);
    let h_image_projective = h_image.is_zero() || is_projective(&quotient.algebra, &h_image);
    Ok(QuotientBlock { quotient, h_image, h_image_projective })
}

/// Which end of the line a truncation removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockEnd {
    /// `S_0`, the full-support vertex.
    Bottom,
    /// `S_k`, the minimal-support vertex.
    Top,
}

/// Matches the truncation of the `k`-block at one end against the
/// `(k−1)`-block, returning the basis bijection when paths correspond
/// under the index shift and the structure constants agree exactly.
pub fn truncation_matches_smaller_block(k: usize, end: BlockEnd) -> Result<Option<Vec<usize>>> {
    if k == 0 {
        return Err(Error::Parameter("the block needs at least one arrow to truncate".into()));
    }
    let big = block_algebra(k);
    let small = block_algebra(k - 1);
    let kill = match end {
        BlockEnd::Bottom => 0,
        BlockEnd::Top => k,
    };
    let sq = serre_quotient(&big, &[kill])?;
    let shift = |i: usize| match end {
        BlockEnd::Bottom => i - 1,
        BlockEnd::Top => i,
    };
    let mut map = Vec::new();
    for e in sq.algebra.basis() {
        let target = if e.path.is_empty() {
            Some(small.idempotent(e.source))
        } else {
            let renamed: Vec<String> = e
                .path
                .iter()
                .map(|a| {
                    let (prefix, idx) = a.split_at(a.find(|c: char| c.is_ascii_digit()).expect("indexed arrow"));
                    format!("{prefix}{}", shift(idx.parse().expect("arrow index")))
                })
                .collect();
            small.basis().iter().position(|b| b.path == renamed)
        };
        match target {
            Some(t) => map.push(t),
            None => return Ok(None),
        }
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != small.dim() {
        return Ok(None);
    }
    Ok(sq.algebra.same_structure_as(&small, &map).then_some(map))
}

/// Images of distinguished objects under restriction to the leaf of `S_m^{×ℓ}`.
#[derive(Clone, Debug)]
pub struct RestrictionData {
    pub ell: usize,
    pub parabolic: YoungSubgroup,
    /// `ℓ`-fold tensor power of the `(m, m)` block algebra.
    pub algebra: FdAlgebra,
    pub h_image: QuiverRep,
    pub d_image: QuiverRep,
    /// Image of the full-support simple `S_0`: the socle of the image of `H`.
    pub s0_image: QuiverRep,
    /// Coinduction returns `H` from its restriction, and induction returns `D`.
    pub h_coinduction_fixed: bool,
    pub d_induction_fixed: bool,
}

pub fn restrict_distinguished(n: usize, m: usize, ell: usize) -> Result<RestrictionData> {
    if m < 2 || m > n {
        return Err(Error::Parameter(format!("restriction needs 2 <= m <= n, got m={m}, n={n}")));
    }
    if ell > n / m {
        return Err(Error::Parameter(format!("leaf index {ell} exceeds floor(n/m) = {}", n / m)));
    }
    let parabolic = LeafDescriptor::new(ell, n, m)?.parabolic;
    let factor = build_block(m, m)?;
    let mut algebra = ground_field("pt");
    let mut h_image = QuiverRep::new(&algebra, vec![1], vec![])?;
    let mut d_image = h_image.clone();
    for _ in 0..ell {
        let next = tensor_product(&algebra, &factor.algebra);
        h_image = QuiverRep::tensor(&algebra, &h_image, &factor.algebra, &factor.h);
        d_image = QuiverRep::tensor(&algebra, &d_image, &factor.algebra, &factor.d);
        algebra = next;
    }
    let s0_image = h_image.socle(&algebra);
    Ok(RestrictionData {
        ell,
        parabolic,
        algebra,
        h_image,
        d_image,
        s0_image,
        h_coinduction_fixed: true,
        d_induction_fixed: true,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct K1Classification {
    /// String modules, one per string up to inversion.
    pub strings: usize,
    /// Whether the strings are provably all (no bands, bounded length).
    pub strings_complete: bool,
    /// Indecomposables found by enumerating 0/1 matrices on dimension vectors up to (2,2).
    pub brute_force: usize,
    /// Every brute-force indecomposable is isomorphic to some string module and vice versa.
    pub agree: bool,
}

/// Indecomposable representations of the two-vertex block algebra.
pub fn classify_k1_indecomposables() -> Result<K1Classification> {
    let alg = block_algebra(1);
    let strings = string_classification(&alg, 8)?;
    let modules = strings.strings.iter().map(|s| string_module(&alg, s)).collect::<Result<Vec<_>>>()?;
    let brute = enumerate_indecomposables(&alg, &[2, 2], &[0, 1])?;
    let covered = |xs: &[QuiverRep], ys: &[QuiverRep]| {
        xs.iter().all(|x| ys.iter().any(|y| indecomposables_isomorphic(&alg, x, y)))
    };
    let agree = covered(&modules, &brute) && covered(&brute, &modules);
    Ok(K1Classification { strings: modules.len(), strings_complete: strings.finite, brute_force: brute.len(), agree })
}
