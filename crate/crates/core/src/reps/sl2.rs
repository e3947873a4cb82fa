use std::collections::BTreeSet;

use rayon::prelude::*;

use super::Representation;
use crate::algebra::{ConstMatrix, Fp, Prime};
use crate::error::{Error, Result};
use crate::presentation::{GroupPresentation, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RepSearchConfig {
    pub p: Prime,
    pub nonabelian_only: bool,
    pub up_to_conjugacy: bool,
    /// Largest number of generators the search may choose freely besides
    /// the first one.
    pub budget: usize,
}

impl RepSearchConfig {
    pub fn new(p: Prime) -> Self {
        RepSearchConfig { p, nonabelian_only: true, up_to_conjugacy: true, budget: 4 }
    }
}

/// Result of a search, with counts under the different conventions.
#[derive(Clone, Debug)]
pub struct EnumerationSummary {
    /// Representations selected by the configuration, sorted.
    pub reps: Vec<Representation<Fp>>,
    /// Representations with the first generator pinned to a normal form.
    pub slice_count: usize,
    pub slice_nonabelian: usize,
    /// Nonabelian classes under conjugation by GL(2, F_p).
    pub gl2_classes: usize,
    /// Nonabelian classes under conjugation by SL(2, F_p).
    pub sl2_classes: usize,
    /// Classes of all representations, abelian ones included.
    pub gl2_classes_all: usize,
    pub sl2_classes_all: usize,
}

/// 2x2 matrix `[a, b, c, d]` with entries in `[0, p)`.
type M2 = [u32; 4];

fn mul(x: &M2, y: &M2, p: u32) -> M2 {
    let p = p as u64;
    let f = |a: u32, b: u32, c: u32, d: u32| ((a as u64 * b as u64 + c as u64 * d as u64) % p) as u32;
    [
        f(x[0], y[0], x[1], y[2]),
        f(x[0], y[1], x[1], y[3]),
        f(x[2], y[0], x[3], y[2]),
        f(x[2], y[1], x[3], y[3]),
    ]
}

fn det(x: &M2, p: u32) -> u32 {
    let p64 = p as u64;
    ((x[0] as u64 * x[3] as u64 + p64 * p64 - (x[1] as u64 * x[2] as u64) % p64) % p64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    Fp::new(Prime::new(p as u64).unwrap(), a as i64).pow(p as u64 - 2).value()
}

fn neg(a: u32, p: u32) -> u32 {
    (p - a) % p
}

fn inverse(x: &M2, p: u32) -> M2 {
    let di = inv_mod(det(x, p), p) as u64;
    let s = |v: u32| ((v as u64 * di) % p as u64) as u32;
    [s(x[3]), s(neg(x[1], p)), s(neg(x[2], p)), s(x[0])]
}

fn power(x: &M2, e: i8, p: u32) -> M2 {
    if e > 0 {
        *x
    } else {
        inverse(x, p)
    }
}

fn to_const(x: &M2, p: Prime) -> ConstMatrix<Fp> {
    let f = |v: u32| Fp::new(p, v as i64);
    ConstMatrix::from_rows(vec![vec![f(x[0]), f(x[1])], vec![f(x[2]), f(x[3])]]).unwrap()
}

fn from_const(m: &ConstMatrix<Fp>) -> Option<M2> {
    (m.dim() == 2).then(|| [m.get(0, 0).value(), m.get(0, 1).value(), m.get(1, 0).value(), m.get(1, 1).value()])
}

/// How a relator determines its generators.
#[derive(Clone, Copy, Debug)]
enum Rule {
    /// `a b^s c^-1 b^-s`: `c = b^-s a b^s`.
    Conj { a: usize, b: usize, s: i8, c: usize },
    /// `a c^-1`.
    Equal { a: usize, c: usize },
}

fn classify(w: &Word) -> Option<Rule> {
    let w = w.cyclically_reduced();
    for cand in [w.clone(), w.inverse()] {
        let ls = cand.letters();
        let n = ls.len();
        for r in 0..n {
            let l = |i: usize| ls[(r + i) % n];
            if n == 2 && !l(0).inv && l(1).inv {
                return Some(Rule::Equal { a: l(0).gen, c: l(1).gen });
            }
            if n == 4 && !l(0).inv && l(2).inv && l(1).gen == l(3).gen && l(1).inv != l(3).inv {
                let s = if l(1).inv { -1 } else { 1 };
                return Some(Rule::Conj { a: l(0).gen, b: l(1).gen, s, c: l(2).gen });
            }
        }
    }
    None
}

struct Search<'a> {
    p: u32,
    rules: Vec<Rule>,
    relators: &'a [Word],
    n: usize,
    budget: usize,
}

impl Search<'_> {
    fn eval(&self, w: &Word, a: &[Option<M2>]) -> M2 {
        let mut acc = [1, 0, 0, 1];
        for l in w.letters() {
            let m = a[l.gen].unwrap();
            acc = mul(&acc, &if l.inv { inverse(&m, self.p) } else { m }, self.p);
        }
        acc
    }

    /// Fill in everything the rules force. `false` on a contradiction.
    fn propagate(&self, a: &mut [Option<M2>]) -> bool {
        let p = self.p;
        loop {
            let mut changed = false;
            for rule in &self.rules {
                match *rule {
                    Rule::Equal { a: x, c } => match (a[x], a[c]) {
                        (Some(u), Some(v)) if u != v => return false,
                        (Some(u), None) => {
                            a[c] = Some(u);
                            changed = true;
                        }
                        (None, Some(v)) => {
                            a[x] = Some(v);
                            changed = true;
                        }
                        _ => {}
                    },
                    Rule::Conj { a: x, b, s, c } => {
                        let Some(bm) = a[b] else { continue };
                        let (bs, bsi) = (power(&bm, s, p), power(&bm, -s, p));
                        match (a[x], a[c]) {
                            (Some(u), Some(v)) => {
                                if mul(&mul(&bsi, &u, p), &bs, p) != v {
                                    return false;
                                }
                            }
                            (Some(u), None) => {
                                a[c] = Some(mul(&mul(&bsi, &u, p), &bs, p));
                                changed = true;
                            }
                            (None, Some(v)) => {
                                a[x] = Some(mul(&mul(&bs, &v, p), &bsi, p));
                                changed = true;
                            }
                            (None, None) => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn branch_gen(&self, a: &[Option<M2>]) -> usize {
        for rule in &self.rules {
            if let Rule::Conj { a: x, b, c, .. } = *rule {
                if a[b].is_none() && (a[x].is_some() != a[c].is_some()) {
                    return b;
                }
            }
        }
        a.iter().position(Option::is_none).unwrap()
    }

    fn run(&self, a: &mut [Option<M2>], cands: &[M2], depth: usize, out: &mut Vec<Vec<M2>>) -> Result<()> {
        if !self.propagate(a) {
            return Ok(());
        }
        if a.iter().all(Option::is_some) {
            let id = [1, 0, 0, 1];
            if self.relators.iter().all(|r| self.eval(r, a) == id) {
                out.push(a.iter().map(|m| m.unwrap()).collect());
            }
            return Ok(());
        }
        if depth >= self.budget {
            return Err(Error::Budget(format!(
                "the search needs more than {} free generators out of {}",
                self.budget, self.n
            )));
        }
        let g = self.branch_gen(a);
        for m in cands {
            let mut b = a.to_vec();
            b[g] = Some(*m);
            self.run(&mut b, cands, depth + 1, out)?;
        }
        Ok(())
    }
}

/// All matrices of determinant one and trace `s`.
fn trace_class(s: u32, p: u32) -> Vec<M2> {
    let mut out = Vec::new();
    for a in 0..p {
        let d = (s + p - a) % p;
        let bc = ((a as u64 * d as u64 + p as u64 - 1) % p as u64) as u32;
        for b in 0..p {
            for c in 0..p {
                if (b as u64 * c as u64 % p as u64) as u32 == bc {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

fn all_gl2(p: u32) -> Vec<M2> {
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..p {
            for c in 0..p {
                for d in 0..p {
                    let m = [a, b, c, d];
                    if det(&m, p) != 0 {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

/// Invertible matrices commuting with `x`.
fn centralizer(x: &M2, p: u32) -> Vec<M2> {
    if x[1] == 0 && x[2] == 0 && x[0] == x[3] {
        return all_gl2(p);
    }
    let mut out = Vec::new();
    for al in 0..p {
        for be in 0..p {
            let m = [
                (al + be * x[0]) % p,
                (be * x[1]) % p,
                (be * x[2]) % p,
                (al + be * x[3]) % p,
            ];
            if det(&m, p) != 0 {
                out.push(m);
            }
        }
    }
    out
}

fn conj_all(g: &M2, rho: &[M2], p: u32) -> Vec<M2> {
    let gi = inverse(g, p);
    rho.iter().map(|m| mul(&mul(g, m, p), &gi, p)).collect()
}

fn abelian(rho: &[M2], p: u32) -> bool {
    (0..rho.len()).all(|i| (i + 1..rho.len()).all(|j| mul(&rho[i], &rho[j], p) == mul(&rho[j], &rho[i], p)))
}

struct SliceResult {
    reps: Vec<Vec<M2>>,
    count: usize,
    nonabelian: usize,
    gl2: usize,
    sl2: usize,
    gl2_all: usize,
    sl2_all: usize,
}

fn search_slice(pres: &GroupPresentation, cfg: &RepSearchConfig, x1: M2, s: u32) -> Result<SliceResult> {
    let p = cfg.p.get();
    let n = pres.n_gens();
    let search = Search {
        p,
        rules: pres.relators().iter().filter_map(classify).collect(),
        relators: pres.relators(),
        n,
        budget: cfg.budget,
    };
    let mut a = vec![None; n];
    a[pres.meridian()] = Some(x1);
    let mut found = Vec::new();
    search.run(&mut a, &trace_class(s, p), 0, &mut found)?;
    let count = found.len();
    let nonab: Vec<Vec<M2>> = found.iter().filter(|r| !abelian(r, p)).cloned().collect();
    let cent = centralizer(&x1, p);
    let canon = |r: &[M2]| cent.iter().map(|g| conj_all(g, r, p)).min().unwrap();
    // a GL(2) orbit splits into (p - 1) / |det(stabilizer)| SL(2) orbits
    let mut classes = BTreeSet::new();
    let (mut gl2, mut sl2, mut sl2_all) = (0, 0, 0);
    for r in &found {
        let c = canon(r);
        if classes.insert(c.clone()) {
            let dets: BTreeSet<u32> = cent.iter().filter(|g| conj_all(g, &c, p) == c).map(|g| det(g, p)).collect();
            let split = (p as usize - 1) / dets.len();
            sl2_all += split;
            if !abelian(r, p) {
                gl2 += 1;
                sl2 += split;
            }
        }
    }
    let gl2_all = classes.len();
    let pool: Vec<Vec<M2>> = if cfg.nonabelian_only { nonab.clone() } else { found };
    let reps = if cfg.up_to_conjugacy {
        let set: BTreeSet<Vec<M2>> = pool.iter().map(|r| canon(r)).collect();
        set.into_iter().collect()
    } else {
        let mut v = pool;
        v.sort();
        v
    };
    Ok(SliceResult { reps, count, nonabelian: nonab.len(), gl2, sl2, gl2_all, sl2_all })
}

/// Search for SL(2, F_p) representations of a presentation whose
/// generators are all conjugate (as for a Wirtinger presentation). The
/// meridian generator is pinned to `[[0, -1], [1, s]]` for each trace `s`,
/// or to `±I`; every representation is conjugate in GL(2, F_p) to one of
/// these.
pub fn enumerate_sl2_summary(pres: &GroupPresentation, cfg: &RepSearchConfig) -> Result<EnumerationSummary> {
    if cfg.budget == 0 {
        return Err(Error::Domain("search budget must be at least 1".into()));
    }
    let p = cfg.p.get();
    let mut slices: Vec<(M2, u32)> = (0..p).map(|s| ([0, p - 1, 1, s], s)).collect();
    slices.push(([1, 0, 0, 1], 2 % p));
    if p != 2 {
        slices.push(([p - 1, 0, 0, p - 1], p - 2));
    }
    let results: Vec<SliceResult> = slices
        .par_iter()
        .map(|&(x1, s)| search_slice(pres, cfg, x1, s))
        .collect::<Result<_>>()?;
    let mut summary = EnumerationSummary {
        reps: Vec::new(),
        slice_count: 0,
        slice_nonabelian: 0,
        gl2_classes: 0,
        sl2_classes: 0,
        gl2_classes_all: 0,
        sl2_classes_all: 0,
    };
    for r in results {
        summary.slice_count += r.count;
        summary.slice_nonabelian += r.nonabelian;
        summary.gl2_classes += r.gl2;
        summary.sl2_classes += r.sl2;
        summary.gl2_classes_all += r.gl2_all;
        summary.sl2_classes_all += r.sl2_all;
        for m in r.reps {
            summary.reps.push(Representation::new(m.iter().map(|x| to_const(x, cfg.p)).collect())?);
        }
    }
    Ok(summary)
}

pub fn enumerate_sl2(pres: &GroupPresentation, cfg: &RepSearchConfig) -> Result<Vec<Representation<Fp>>> {
    Ok(enumerate_sl2_summary(pres, cfg)?.reps)
}

/// Extend an assignment on a few generators to all of them using the
/// conjugation relators, without choosing anything freely.
pub fn extend_from_seeds(
    pres: &GroupPresentation,
    p: Prime,
    seeds: &[(usize, ConstMatrix<Fp>)],
) -> Option<Representation<Fp>> {
    let search = Search {
        p: p.get(),
        rules: pres.relators().iter().filter_map(classify).collect(),
        relators: pres.relators(),
        n: pres.n_gens(),
        budget: 0,
    };
    let mut a = vec![None; pres.n_gens()];
    for (g, m) in seeds {
        a[*g] = Some(from_const(m)?);
    }
    let mut out = Vec::new();
    search.run(&mut a, &[], 0, &mut out).ok()?;
    let m = out.pop()?;
    Representation::new(m.iter().map(|x| to_const(x, p)).collect()).ok()
}
