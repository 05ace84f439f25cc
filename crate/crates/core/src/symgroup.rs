//! Branching data for symmetric groups: irreducible dimensions and
//! restriction multiplicities to Young subgroups, used to compute the class
//! of a restricted standard module in the Grothendieck group.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// `S_{n_1} × … × S_{n_k} ⊆ S_n`, given by its block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct YoungSubgroup {
    blocks: Vec<usize>,
}

impl YoungSubgroup {
    pub fn new(blocks: Vec<usize>) -> Result<Self> {
        if blocks.contains(&0) {
            return Err(Error::Parameter(format!("Young subgroup blocks must be positive: {blocks:?}")));
        }
        Ok(YoungSubgroup { blocks })
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().sum()
    }
}

/// A class in `K_0` of the parabolic category: multiplicities of standard
/// objects indexed by one partition per block.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct K0Vector {
    entries: BTreeMap<Vec<Partition>, u64>,
}

impl K0Vector {
    pub fn get(&self, taus: &[Partition]) -> u64 {
        self.entries.get(taus).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<Partition>, &u64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn add(&mut self, key: Vec<Partition>, mult: u64) {
        if mult > 0 {
            *self.entries.entry(key).or_insert(0) += mult;
        }
    }
}

impl Serialize for K0Vector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            taus: &'a [Partition],
            multiplicity: u64,
        }
        let entries: Vec<Entry<'_>> = self.entries.iter().map(|(k, &v)| Entry { taus: k, multiplicity: v }).collect();
        entries.serialize(serializer)
    }
}

/// Number of standard Young tableaux of shape `lambda`, by the hook length formula.
pub fn dim_irrep(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.part(j) - i - 1) + 1;
            hooks *= BigUint::from(hook);
        }
    }
    let mut factorial = BigUint::one();
    for k in 2..=lambda.size() {
        factorial *= BigUint::from(k);
    }
    factorial / hooks
}

/// Littlewood–Richardson coefficient `c^λ_{μν}`: the number of skew tableaux
/// of shape `λ/μ` and content `ν` whose reverse reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() != mu.size() + nu.size() || !lambda.contains(mu) || !lambda.contains(nu) {
        return 0;
    }
    // Cells of λ/μ in reading order: rows top to bottom, each right to left.
    let mut cells = Vec::new();
    for r in 0..lambda.len() {
        for c in (mu.part(r)..lambda.part(r)).rev() {
            cells.push((r, c));
        }
    }
    let mut filling = vec![vec![0usize; lambda.part(0)]; lambda.len()];
    let mut counts = vec![0usize; nu.len() + 1];
    lr_fill(lambda, mu, nu, &cells, 0, &mut filling, &mut counts)
}

fn lr_fill(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cells: &[(usize, usize)],
    idx: usize,
    filling: &mut Vec<Vec<usize>>,
    counts: &mut Vec<usize>,
) -> u64 {
    let Some(&(r, c)) = cells.get(idx) else {
        return 1;
    };
    let mut total = 0;
    for x in 1..=nu.len() {
        if counts[x] >= nu.part(x - 1) {
            continue;
        }
        // Lattice condition on the reading word so far.
        if x > 1 && counts[x] + 1 > counts[x - 1] {
            continue;
        }
        // Rows weakly increase left to right; the cell to the right is already filled.
        if c + 1 < lambda.part(r) && filling[r][c + 1] < x {
            continue;
        }
        // Columns strictly increase downward.
        if r > 0 && c >= mu.part(r - 1) && filling[r - 1][c] >= x {
            continue;
        }
        filling[r][c] = x;
        counts[x] += 1;
        total += lr_fill(lambda, mu, nu, cells, idx + 1, filling, counts);
        counts[x] -= 1;
        filling[r][c] = 0;
    }
    total
}

fn check_shape(lambda: &Partition, subgroup: &YoungSubgroup) -> Result<()> {
    if lambda.size() != subgroup.rank() {
        return Err(Error::ShapeMismatch(format!(
            "|{lambda:?}| = {} but the blocks {:?} sum to {}",
            lambda.size(),
            subgroup.blocks(),
            subgroup.rank()
        )));
    }
    Ok(())
}

/// `dim Hom_{W'}(τ_1 ⊠ … ⊠ τ_k, λ|_{W'})`, peeling off one block at a time.
pub fn branching_multiplicity(lambda: &Partition, subgroup: &YoungSubgroup, taus: &[Partition]) -> Result<u64> {
    check_shape(lambda, subgroup)?;
    if taus.len() != subgroup.blocks().len() {
        return Err(Error::ShapeMismatch(format!(
            "{} partitions given for {} blocks",
            taus.len(),
            subgroup.blocks().len()
        )));
    }
    for (tau, &b) in taus.iter().zip(subgroup.blocks()) {
        if tau.size() != b {
            return Err(Error::ShapeMismatch(format!("{tau:?} does not have size {b}")));
        }
    }
    Ok(iterated_lr(lambda, subgroup.blocks(), taus))
}

fn iterated_lr(lambda: &Partition, blocks: &[usize], taus: &[Partition]) -> u64 {
    match taus {
        [] => u64::from(lambda.is_empty()),
        [tau] => u64::from(lambda == tau),
        [first, rest @ ..] => {
            let remaining: usize = blocks[1..].iter().sum();
            enumerate_partitions(remaining)
                .iter()
                .filter(|rho| lambda.contains(rho))
                .map(|rho| {
                    let c = lr_coefficient(lambda, first, rho);
                    if c == 0 {
                        0
                    } else {
                        c * iterated_lr(rho, &blocks[1..], rest)
                    }
                })
                .sum()
        }
    }
}

/// `[Res Δ(λ)] = Σ_τ dim Hom_{W'}(τ, λ) [Δ(τ)]`.
pub fn restrict_standard_k0(lambda: &Partition, subgroup: &YoungSubgroup) -> Result<K0Vector> {
    check_shape(lambda, subgroup)?;
    let mut out = K0Vector::default();
    restrict_into(lambda, subgroup.blocks(), Vec::new(), 1, &mut out);
    Ok(out)
}

fn restrict_into(lambda: &Partition, blocks: &[usize], prefix: Vec<Partition>, mult: u64, out: &mut K0Vector) {
    match blocks {
        [] => {
            if lambda.is_empty() {
                out.add(prefix, mult);
            }
        }
        [_] => {
            let mut key = prefix;
            key.push(lambda.clone());
            out.add(key, mult);
        }
        [first, rest @ ..] => {
            let remaining: usize = rest.iter().sum();
            for tau in enumerate_partitions(*first).into_iter().filter(|t| lambda.contains(t)) {
                for rho in enumerate_partitions(remaining).into_iter().filter(|r| lambda.contains(r)) {
                    let c = lr_coefficient(lambda, &tau, &rho);
                    if c > 0 {
                        let mut key = prefix.clone();
                        key.push(tau.clone());
                        restrict_into(&rho, rest, key, mult * c, out);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_irrep(&p("5")), BigUint::from(1u32));
        assert_eq!(dim_irrep(&p("1,1,1")), BigUint::from(1u32));
        assert_eq!(dim_irrep(&p("2,1")), BigUint::from(2u32));
        assert_eq!(dim_irrep(&p("3,2")), BigUint::from(5u32));
        assert_eq!(dim_irrep(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn small_lr_values() {
        // s_{1} * s_{1} = s_{2} + s_{1,1}
        assert_eq!(lr_coefficient(&p("2"), &p("1"), &p("1")), 1);
        assert_eq!(lr_coefficient(&p("1,1"), &p("1"), &p("1")), 1);
        // c^{3,2,1}_{2,1;2,1} = 2
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")), 2);
        assert_eq!(lr_coefficient(&p("3"), &p("1,1"), &p("1")), 0);
    }

    #[test]
    fn branching_examples() {
        let g = YoungSubgroup::new(vec![2, 1]).unwrap();
        assert_eq!(branching_multiplicity(&p("2,1"), &g, &[p("2"), p("1")]).unwrap(), 1);
        assert_eq!(branching_multiplicity(&p("2,1"), &g, &[p("1,1"), p("1")]).unwrap(), 1);
        let g = YoungSubgroup::new(vec![2, 3]).unwrap();
        assert_eq!(branching_multiplicity(&p("5"), &g, &[p("2"), p("3")]).unwrap(), 1);
        assert_eq!(branching_multiplicity(&p("5"), &g, &[p("1,1"), p("3")]).unwrap(), 0);
    }

    #[test]
    fn shape_errors() {
        let g = YoungSubgroup::new(vec![2, 2]).unwrap();
        assert!(matches!(restrict_standard_k0(&p("3"), &g), Err(Error::ShapeMismatch(_))));
        assert!(matches!(branching_multiplicity(&p("2,2"), &g, &[p("2"), p("1")]), Err(Error::ShapeMismatch(_))));
        assert!(YoungSubgroup::new(vec![1, 0]).is_err());
    }

    #[test]
    fn restriction_of_two_one() {
        let g = YoungSubgroup::new(vec![2, 1]).unwrap();
        let k0 = restrict_standard_k0(&p("2,1"), &g).unwrap();
        assert_eq!(k0.len(), 2);
        assert_eq!(k0.get(&[p("2"), p("1")]), 1);
        assert_eq!(k0.get(&[p("1,1"), p("1")]), 1);
    }
}
