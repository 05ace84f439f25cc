//! Indecomposable modules of small algebras: string modules for monomial
//! algebras, and a brute-force enumeration used to cross-check them.

use super::algebra::FdAlgebra;
use super::homological::{indecomposables_isomorphic, is_absolutely_indecomposable};
use super::rep::QuiverRep;
use crate::error::{Error, Result};
use crate::linalg::{q, Matrix};

/// One letter of a string: an arrow walked forwards or backwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

/// A walk in the quiver avoiding zero relations and immediate backtracking.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StringWord {
    pub start: usize,
    pub letters: Vec<Letter>,
}

#[derive(Clone, Debug)]
pub struct StringClassification {
    /// One representative per string up to inversion.
    pub strings: Vec<StringWord>,
    /// False when strings reach the length bound, so bands or infinitely many
    /// strings may exist and the list is not a classification.
    pub finite: bool,
}

struct MonomialData {
    arrows: Vec<(usize, usize)>,
    zero_paths: Vec<Vec<usize>>,
}

fn monomial_data(alg: &FdAlgebra) -> Result<MonomialData> {
    let (quiver, relations) =
        alg.presentation().ok_or_else(|| Error::Parameter("string combinatorics need a quiver presentation".into()))?;
    let mut zero_paths = Vec::new();
    for r in relations {
        if !r.is_monomial() {
            return Err(Error::Parameter("string combinatorics need monomial relations".into()));
        }
        let path = r.terms[0].1.iter().map(|n| quiver.arrow_index(n).expect("validated relation")).collect();
        zero_paths.push(path);
    }
    Ok(MonomialData { arrows: quiver.arrows().iter().map(|a| (a.source, a.target)).collect(), zero_paths })
}

impl MonomialData {
    fn endpoint(&self, l: Letter) -> (usize, usize) {
        let (s, t) = self.arrows[l.arrow];
        if l.inverse {
            (t, s)
        } else {
            (s, t)
        }
    }

    /// Whether appending `next` keeps the word a string.
    fn extends(&self, letters: &[Letter], next: Letter) -> bool {
        if let Some(last) = letters.last() {
            if last.arrow == next.arrow && last.inverse != next.inverse {
                return false;
            }
        }
        // The maximal run of same-direction letters ending in `next`, as a traversal path.
        let mut run: Vec<usize> =
            letters.iter().rev().take_while(|l| l.inverse == next.inverse).map(|l| l.arrow).collect();
        run.reverse();
        run.push(next.arrow);
        if next.inverse {
            run.reverse();
        }
        !self.zero_paths.iter().any(|z| run.windows(z.len()).any(|w| w == z.as_slice()))
    }

    fn inverse_word(&self, s: &StringWord) -> StringWord {
        let end = s.letters.iter().fold(s.start, |_, l| self.endpoint(*l).1);
        let letters = s.letters.iter().rev().map(|l| Letter { arrow: l.arrow, inverse: !l.inverse }).collect();
        StringWord { start: end, letters }
    }
}

/// All strings of length below `max_len`, one per inversion class.
pub fn string_classification(alg: &FdAlgebra, max_len: usize) -> Result<StringClassification> {
    let data = monomial_data(alg)?;
    let mut all = Vec::new();
    let mut finite = true;
    let mut frontier: Vec<(StringWord, usize)> =
        (0..alg.vertex_count()).map(|v| (StringWord { start: v, letters: vec![] }, v)).collect();
    while let Some((word, end)) = frontier.pop() {
        if word.letters.len() >= max_len {
            finite = false;
            continue;
        }
        for arrow in 0..data.arrows.len() {
            for inverse in [false, true] {
                let l = Letter { arrow, inverse };
                let (s, t) = data.endpoint(l);
                if s != end || !data.extends(&word.letters, l) {
                    continue;
                }
                let mut next = word.clone();
                next.letters.push(l);
                frontier.push((next, t));
            }
        }
        all.push(word);
    }
    let mut strings: Vec<StringWord> = all
        .into_iter()
        .filter(|w| {
            let inv = data.inverse_word(w);
            w.letters.is_empty() || *w <= inv
        })
        .collect();
    strings.sort_by(|a, b| (a.letters.len(), a).cmp(&(b.letters.len(), b)));
    strings.dedup();
    Ok(StringClassification { strings, finite })
}

/// The string module: one basis vector per visited vertex, arrows acting along the walk.
pub fn string_module(alg: &FdAlgebra, word: &StringWord) -> Result<QuiverRep> {
    let data = monomial_data(alg)?;
    let mut visits = vec![word.start];
    for l in &word.letters {
        visits.push(data.endpoint(*l).1);
    }
    let mut dims = vec![0; alg.vertex_count()];
    let mut local = Vec::new();
    for &v in &visits {
        local.push(dims[v]);
        dims[v] += 1;
    }
    let mut rep = QuiverRep::with_zero_maps(alg, dims.clone());
    let mut maps: Vec<Matrix> = rep.maps().to_vec();
    for (j, l) in word.letters.iter().enumerate() {
        let (from, to) = if l.inverse { (j + 1, j) } else { (j, j + 1) };
        maps[l.arrow].set(local[to], local[from], q(1));
    }
    rep = QuiverRep::new(alg, dims, maps)?;
    Ok(rep)
}

/// Absolutely indecomposable modules, up to isomorphism, among all
/// representations with dimension vector bounded by `max_dims` and matrix
/// entries drawn from `values`.
pub fn enumerate_indecomposables(alg: &FdAlgebra, max_dims: &[usize], values: &[i64]) -> Result<Vec<QuiverRep>> {
    const MAX_ENTRIES: u32 = 24;
    if max_dims.len() != alg.vertex_count() {
        return Err(Error::Parameter("dimension bound has the wrong length".into()));
    }
    let mut found: Vec<QuiverRep> = Vec::new();
    let mut dims = vec![0; max_dims.len()];
    loop {
        // Next dimension vector in lexicographic order.
        let mut i = 0;
        while i < dims.len() && dims[i] == max_dims[i] {
            dims[i] = 0;
            i += 1;
        }
        if i == dims.len() {
            break;
        }
        dims[i] += 1;

        let shapes: Vec<(usize, usize)> = (0..alg.generators().len())
            .map(|p| {
                let g = alg.generator(p);
                (dims[g.target], dims[g.source])
            })
            .collect();
        let entries: usize = shapes.iter().map(|(r, c)| r * c).sum();
        if entries as u32 > MAX_ENTRIES {
            return Err(Error::Parameter(format!("{entries} matrix entries is too many to enumerate")));
        }
        let total = values.len().pow(entries as u32);
        for code in 0..total {
            let mut rest = code;
            let maps: Vec<Matrix> = shapes
                .iter()
                .map(|&(r, c)| {
                    Matrix::from_fn(r, c, |_, _| {
                        let x = values[rest % values.len()];
                        rest /= values.len();
                        q(x)
                    })
                })
                .collect();
            let Ok(rep) = QuiverRep::new(alg, dims.clone(), maps) else {
                continue;
            };
            if !is_absolutely_indecomposable(alg, &rep) {
                continue;
            }
            if !found.iter().any(|f| indecomposables_isomorphic(alg, f, &rep)) {
                found.push(rep);
            }
        }
    }
    Ok(found)
}
