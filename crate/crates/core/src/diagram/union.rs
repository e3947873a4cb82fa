use serde::{Deserialize, Serialize};

use super::pd::PdCode;
use crate::error::{Error, Result};

/// Data for the symmetric union `D ∪ -D*`: the partial diagram, the marked
/// edges `e_0, e_1, .., e_k` of `D`, and the crossing counts `n_1, .., n_k`
/// inserted at `e_1, .., e_k`. The edge `e_0` carries the ∞-tangle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymUnionSpec {
    pub partial: PdCode,
    pub marks: Vec<u32>,
    pub twists: Vec<i64>,
}

impl SymUnionSpec {
    pub fn new(partial: PdCode, marks: Vec<u32>, twists: Vec<i64>) -> Result<Self> {
        let s = SymUnionSpec { partial, marks, twists };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.partial.is_empty() {
            return Err(Error::InvalidUnion("the partial diagram has no edges to mark".into()));
        }
        if self.marks.is_empty() {
            return Err(Error::InvalidUnion("at least the edge e_0 must be marked".into()));
        }
        if self.twists.len() + 1 != self.marks.len() {
            return Err(Error::InvalidUnion(format!(
                "{} marked edges need {} twist counts, got {}",
                self.marks.len(),
                self.marks.len() - 1,
                self.twists.len()
            )));
        }
        let n = self.partial.num_edges() as u32;
        for (i, &e) in self.marks.iter().enumerate() {
            if e == 0 || e > n {
                return Err(Error::InvalidUnion(format!("edge {e} is not an edge of the partial diagram")));
            }
            if self.marks[..i].contains(&e) {
                return Err(Error::InvalidUnion(format!("edge {e} is marked twice")));
            }
        }
        Ok(())
    }

    /// Whether the marked edges lie on one face of the partial diagram, so
    /// that a reflection axis can pass next to all of them. Otherwise the
    /// surgery still yields a PD code, but in general not a planar one.
    pub fn marks_share_face(&self) -> bool {
        self.partial.faces().iter().any(|f| self.marks.iter().all(|m| f.contains(m)))
    }

    /// For each mark, whether the axis lies to the right of the oriented
    /// edge. The axis runs through the first face carrying every mark; with
    /// no such face all marks are taken to have it on their right.
    pub fn mark_sides(&self) -> Vec<bool> {
        self.partial
            .faces_with_sides()
            .into_iter()
            .find(|f| self.marks.iter().all(|m| f.iter().any(|(e, _)| e == m)))
            .map(|f| {
                self.marks.iter().map(|m| f.iter().find(|(e, _)| e == m).unwrap().1).collect()
            })
            .unwrap_or_else(|| vec![true; self.marks.len()])
    }

    pub fn k(&self) -> usize {
        self.twists.len()
    }

    pub fn is_even(&self) -> bool {
        self.twists.iter().all(|n| n % 2 == 0)
    }

    /// Twist parameters `m_i = n_i / 2` of an even union.
    pub fn half_twists(&self) -> Result<Vec<i64>> {
        if !self.is_even() {
            return Err(Error::InvalidUnion("twist counts must be even".into()));
        }
        Ok(self.twists.iter().map(|n| n / 2).collect())
    }
}

/// The partial knot of a symmetric union.
pub fn partial_knot(spec: &SymUnionSpec) -> Result<PdCode> {
    spec.validate()?;
    Ok(spec.partial.clone())
}

// Slot of crossing c at position p is 4c + p; positions run counterclockwise
// and the under-strand occupies positions 0 and 2.
struct Slots {
    link: Vec<usize>,
}

impl Slots {
    fn with_crossings(n: usize) -> Self {
        Slots { link: vec![usize::MAX; 4 * n] }
    }

    fn add_crossings(&mut self, n: usize) -> usize {
        let first = self.link.len() / 4;
        self.link.extend(std::iter::repeat_n(usize::MAX, 4 * n));
        first
    }

    fn join(&mut self, a: usize, b: usize) {
        self.link[a] = b;
        self.link[b] = a;
    }
}

const MIRROR_POS: [usize; 4] = [0, 3, 2, 1];

/// Build the PD code of `D ∪ -D*`. The mirror copy is the reflection of
/// `D` in a vertical axis with its orientation reversed; each marked edge
/// of `D` meets the axis running upward. Positive `n_i` inserts
/// right-handed (positive) crossings, whose over-strands run from
/// north-west to south-east.
pub fn symmetric_union_pd(spec: &SymUnionSpec) -> Result<PdCode> {
    spec.validate()?;
    let d = &spec.partial;
    let n = d.len();
    let tr = d.traversal();
    let extra: usize = spec.twists.iter().map(|t| t.unsigned_abs() as usize).sum();
    let mut s = Slots::with_crossings(2 * n);
    let slot = |c: usize, p: usize| 4 * c + p;
    let mslot = |c: usize, p: usize| 4 * (n + c) + MIRROR_POS[p];

    // tail (exit) and head (entry) slot of each edge
    let mut tail = vec![(0, 0); 2 * n + 1];
    let mut head = vec![(0, 0); 2 * n + 1];
    for (t, &e) in tr.edges.iter().enumerate() {
        head[e as usize] = tr.entries[t];
        let (c, q) = tr.entries[(t + 2 * n - 1) % (2 * n)];
        tail[e as usize] = (c, (q + 2) % 4);
    }
    for e in 1..=2 * n as u32 {
        if spec.marks.contains(&e) {
            continue;
        }
        let (a, b) = (tail[e as usize], head[e as usize]);
        s.join(slot(a.0, a.1), slot(b.0, b.1));
        s.join(mslot(a.0, a.1), mslot(b.0, b.1));
    }
    let sides = spec.mark_sides();
    for (i, &e) in spec.marks.iter().enumerate() {
        let (a, b) = (tail[e as usize], head[e as usize]);
        // a_end sits at the bottom of the twist region, b_end at the top
        let (a, b) = if sides[i] { (a, b) } else { (b, a) };
        let (a_end, b_end) = (slot(a.0, a.1), slot(b.0, b.1));
        let (am_end, bm_end) = (mslot(a.0, a.1), mslot(b.0, b.1));
        if i == 0 {
            s.join(a_end, am_end);
            s.join(b_end, bm_end);
            continue;
        }
        let twists = spec.twists[i - 1];
        if twists == 0 {
            s.join(a_end, b_end);
            s.join(am_end, bm_end);
            continue;
        }
        // positions of NW, SW, SE, NE inside the crossing tuple
        let [nw, sw, se, ne] = if twists > 0 { [3, 0, 1, 2] } else { [0, 1, 2, 3] };
        let count = twists.unsigned_abs() as usize;
        let first = s.add_crossings(count);
        for j in 0..count {
            let x = first + j;
            if j == 0 {
                s.join(4 * x + nw, b_end);
                s.join(4 * x + ne, bm_end);
            } else {
                s.join(4 * x + nw, 4 * (x - 1) + sw);
                s.join(4 * x + ne, 4 * (x - 1) + se);
            }
            if j + 1 == count {
                s.join(4 * x + sw, a_end);
                s.join(4 * x + se, am_end);
            }
        }
    }
    debug_assert_eq!(s.link.len(), 4 * (2 * n + extra));
    orient(&s)
}

fn orient(s: &Slots) -> Result<PdCode> {
    let total = s.link.len() / 4;
    let mut label = vec![0u32; 4 * total];
    let mut entered = vec![false; 4 * total];
    let start = 0usize;
    let mut cur = start;
    label[start] = 1;
    let mut next_label = 2;
    loop {
        entered[cur] = true;
        let exit = 4 * (cur / 4) + (cur % 4 + 2) % 4;
        let nxt = s.link[exit];
        if nxt == start {
            label[exit] = 1;
            break;
        }
        if label[nxt] != 0 {
            return Err(Error::InvalidUnion("surgery produced an inconsistent strand".into()));
        }
        label[exit] = next_label;
        label[nxt] = next_label;
        next_label += 1;
        cur = nxt;
    }
    if (next_label - 1) as usize != 2 * total {
        return Err(Error::InvalidUnion("the result has more than one component".into()));
    }
    let crossings = (0..total)
        .map(|x| {
            let l = |p: usize| label[4 * x + p];
            if entered[4 * x] {
                [l(0), l(1), l(2), l(3)]
            } else {
                [l(2), l(3), l(0), l(1)]
            }
        })
        .collect();
    PdCode::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::pd::parse_pd;

    fn trefoil() -> PdCode {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap()
    }

    #[test]
    fn crossing_count() {
        let spec = SymUnionSpec::new(trefoil(), vec![1, 3], vec![4]).unwrap();
        let k = symmetric_union_pd(&spec).unwrap();
        assert_eq!(k.len(), 2 * 3 + 4);
        assert_eq!(partial_knot(&spec).unwrap(), trefoil());
    }

    #[test]
    fn zero_twist_equals_connected_sum() {
        let a = symmetric_union_pd(&SymUnionSpec::new(trefoil(), vec![1], vec![]).unwrap()).unwrap();
        let b = symmetric_union_pd(&SymUnionSpec::new(trefoil(), vec![1, 3], vec![0]).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.is_planar());
        assert_eq!(a.writhe(), 0);
    }

    #[test]
    fn twist_signs() {
        let k = symmetric_union_pd(&SymUnionSpec::new(trefoil(), vec![1, 3], vec![2]).unwrap()).unwrap();
        assert_eq!(k.writhe(), 2);
        let k = symmetric_union_pd(&SymUnionSpec::new(trefoil(), vec![1, 3], vec![-4]).unwrap()).unwrap();
        assert_eq!(k.writhe(), -4);
    }

    #[test]
    fn invalid_specs() {
        assert!(SymUnionSpec::new(PdCode::unknot(), vec![1], vec![]).is_err());
        assert!(SymUnionSpec::new(trefoil(), vec![1, 1], vec![2]).is_err());
        assert!(SymUnionSpec::new(trefoil(), vec![1, 3], vec![]).is_err());
        assert!(SymUnionSpec::new(trefoil(), vec![9], vec![]).is_err());
    }
}
