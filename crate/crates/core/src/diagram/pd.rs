use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Planar diagram code. Each crossing lists its four edge labels
/// counterclockwise, starting from the incoming under-strand; the
/// under-strand runs from position 0 to position 2.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<[u32; 4]>", into = "Vec<[u32; 4]>")]
pub struct PdCode {
    crossings: Vec<[u32; 4]>,
}

/// Oriented walk around the knot starting on edge 1.
/// `edges[t]` enters crossing `entries[t].0` at position `entries[t].1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Traversal {
    pub edges: Vec<u32>,
    pub entries: Vec<(usize, usize)>,
}

impl Traversal {
    pub fn step_of_edge(&self, e: u32) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<Self> {
        let pd = PdCode { crossings };
        pd.validate()?;
        Ok(pd)
    }

    pub fn unknot() -> Self {
        PdCode { crossings: Vec::new() }
    }

    /// Convert tuples listed clockwise (as in KnotInfo) to this convention.
    pub fn from_clockwise(crossings: Vec<[u32; 4]>) -> Result<Self> {
        Self::new(crossings.into_iter().map(|[a, b, c, d]| [a, d, c, b]).collect())
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }

    pub fn num_edges(&self) -> usize {
        2 * self.crossings.len()
    }

    fn occurrences(&self) -> HashMap<u32, Vec<(usize, usize)>> {
        let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (p, &l) in x.iter().enumerate() {
                occ.entry(l).or_default().push((c, p));
            }
        }
        occ
    }

    fn validate(&self) -> Result<()> {
        let n = self.crossings.len();
        let occ = self.occurrences();
        for l in 1..=2 * n as u32 {
            match occ.get(&l).map(|v| v.len()) {
                Some(2) => {}
                Some(k) => return Err(Error::InvalidPd(format!("edge {l} occurs {k} times"))),
                None => return Err(Error::InvalidPd(format!("edge {l} is missing"))),
            }
        }
        if let Some(l) = occ.keys().find(|&&l| l == 0 || l > 2 * n as u32) {
            return Err(Error::InvalidPd(format!("edge label {l} out of range 1..{}", 2 * n)));
        }
        if n > 0 {
            self.walk()?;
        }
        Ok(())
    }

    /// Follow strands from crossing 0's incoming under-strand. Fails on
    /// orientation clashes and on diagrams with more than one component.
    fn walk(&self) -> Result<Traversal> {
        let n = self.crossings.len();
        let occ = self.occurrences();
        let mut used = vec![false; 4 * n];
        let mut edges = Vec::with_capacity(2 * n);
        let mut entries = Vec::with_capacity(2 * n);
        let start = (0usize, 0usize);
        let mut cur = start;
        loop {
            let (c, q) = cur;
            let exit = (q + 2) % 4;
            if used[4 * c + q] || used[4 * c + exit] {
                return Err(Error::InvalidPd("strand orientation is inconsistent".into()));
            }
            used[4 * c + q] = true;
            used[4 * c + exit] = true;
            let label = self.crossings[c][exit];
            let next = *occ[&label].iter().find(|&&o| o != (c, exit)).unwrap();
            if next.1 == 2 {
                return Err(Error::InvalidPd(format!(
                    "edge {label} enters crossing {} on its outgoing under-strand",
                    next.0 + 1
                )));
            }
            edges.push(label);
            entries.push(next);
            cur = next;
            if cur == start {
                break;
            }
        }
        if edges.len() != 2 * n {
            return Err(Error::InvalidPd("diagram has more than one component".into()));
        }
        let k = edges.iter().position(|&e| e == 1).unwrap();
        edges.rotate_left(k);
        entries.rotate_left(k);
        Ok(Traversal { edges, entries })
    }

    pub fn traversal(&self) -> Traversal {
        if self.crossings.is_empty() {
            return Traversal { edges: Vec::new(), entries: Vec::new() };
        }
        self.walk().expect("validated at construction")
    }

    /// Sign of each crossing: +1 when the over-strand runs from position
    /// 3 to position 1.
    pub fn signs(&self) -> Vec<i8> {
        let tr = self.traversal();
        let mut s = vec![0i8; self.crossings.len()];
        for &(c, q) in &tr.entries {
            match q {
                3 => s[c] = 1,
                1 => s[c] = -1,
                _ => {}
            }
        }
        s
    }

    pub fn writhe(&self) -> i64 {
        self.signs().iter().map(|&s| s as i64).sum()
    }

    /// Change every crossing: the over-strand becomes the under-strand.
    pub fn mirror(&self) -> PdCode {
        let signs = self.signs();
        let crossings = self
            .crossings
            .iter()
            .zip(signs)
            .map(|(&[a, b, c, d], s)| if s > 0 { [d, a, b, c] } else { [b, c, d, a] })
            .collect();
        PdCode { crossings }
    }

    /// The same knot with a Reidemeister I curl on `edge`, drawn inside the
    /// face with boundary `face`, which gains two edges. Edges are
    /// relabelled `1, 2, ..` along the strand from the old edge 1.
    pub fn kinked_into(&self, edge: u32, face: &[u32]) -> Result<PdCode> {
        if !face.contains(&edge) || !self.faces().iter().any(|f| same_cycle(f, face)) {
            return Err(Error::InvalidPd(format!("edge {edge} does not bound the given face")));
        }
        let tr = self.traversal();
        let n = self.crossings.len() as u32;
        let (loop_e, out_e) = (2 * n + 1, 2 * n + 2);
        let (hc, hp) = tr.entries[tr.step_of_edge(edge).unwrap()];
        let mut base = self.crossings.clone();
        base[hc][hp] = out_e;
        let rest: Vec<u32> = face.iter().copied().filter(|&x| x != edge).collect();
        let curls = [
            [edge, loop_e, loop_e, out_e],
            [edge, out_e, loop_e, loop_e],
            [loop_e, edge, out_e, loop_e],
            [loop_e, loop_e, out_e, edge],
        ];
        for curl in curls {
            let mut cs = base.clone();
            cs.push(curl);
            let Ok(pd) = PdCode::new(cs) else { continue };
            let grown = pd.faces().iter().any(|f| {
                f.len() == face.len() + 2 && f.contains(&edge) && f.contains(&out_e) && rest.iter().all(|x| f.contains(x))
            });
            if pd.is_planar() && grown {
                return Ok(pd.relabelled());
            }
        }
        Err(Error::InvalidPd(format!("no curl on edge {edge} grows the face")))
    }

    fn relabelled(&self) -> PdCode {
        let tr = self.traversal();
        let new: HashMap<u32, u32> = tr.edges.iter().enumerate().map(|(i, &e)| (e, i as u32 + 1)).collect();
        PdCode { crossings: self.crossings.iter().map(|x| x.map(|e| new[&e])).collect() }
    }

    /// Faces of the diagram, each as the edge labels along its boundary.
    pub fn faces(&self) -> Vec<Vec<u32>> {
        self.faces_with_sides().into_iter().map(|f| f.into_iter().map(|(e, _)| e).collect()).collect()
    }

    /// Faces with, for each boundary edge, whether the face lies to the
    /// right of the oriented edge.
    pub fn faces_with_sides(&self) -> Vec<Vec<(u32, bool)>> {
        let n = self.crossings.len();
        if n == 0 {
            return Vec::new();
        }
        let occ = self.occurrences();
        let tr = self.traversal();
        let mut is_entry = vec![false; 4 * n];
        for &(c, q) in &tr.entries {
            is_entry[4 * c + q] = true;
        }
        let mut seen = vec![false; 4 * n];
        let mut faces = Vec::new();
        for s in 0..4 * n {
            if seen[s] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                let (c, p) = (d / 4, d % 4);
                let label = self.crossings[c][p];
                // the walk leaves crossing c along this edge with the face on its right
                face.push((label, !is_entry[d]));
                let (c2, p2) = *occ[&label].iter().find(|&&o| o != (c, p)).unwrap();
                d = 4 * c2 + (p2 + 1) % 4;
            }
            faces.push(face);
        }
        faces
    }

    /// Number of faces of the diagram on the sphere.
    pub fn face_count(&self) -> usize {
        if self.crossings.is_empty() {
            return 2;
        }
        self.faces().len()
    }

    /// Whether the code describes a diagram on the sphere, by Euler
    /// characteristic: `V - E + F = 2` with `E = 2V`.
    pub fn is_planar(&self) -> bool {
        self.face_count() == self.crossings.len() + 2
    }
}

impl TryFrom<Vec<[u32; 4]>> for PdCode {
    type Error = Error;
    fn try_from(v: Vec<[u32; 4]>) -> Result<Self> {
        PdCode::new(v)
    }
}

impl From<PdCode> for Vec<[u32; 4]> {
    fn from(pd: PdCode) -> Self {
        pd.crossings
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|[a, b, c, d]| format!("X[{a},{b},{c},{d}]"))
            .collect();
        write!(f, "PD[{}]", parts.join(", "))
    }
}

fn same_cycle(a: &[u32], b: &[u32]) -> bool {
    a.len() == b.len() && (0..a.len()).any(|k| a.iter().cycle().skip(k).take(a.len()).eq(b.iter()))
}

/// Parse `PD[X[1,4,2,5], ...]`, `X[1,4,2,5] X[3,6,4,1] ...` or
/// `[[1,4,2,5],[3,6,4,1],...]`. An empty code is the unknot.
pub fn parse_pd(text: &str) -> Result<PdCode> {
    let mut groups = Vec::new();
    let mut open: Option<usize> = None;
    for (i, ch) in text.char_indices() {
        match ch {
            '[' | '(' => open = Some(i + 1),
            ']' | ')' => {
                if let Some(s) = open.take() {
                    groups.push(&text[s..i]);
                }
            }
            _ => {}
        }
    }
    let mut crossings = Vec::new();
    for g in groups {
        if g.trim().is_empty() {
            continue;
        }
        let nums: std::result::Result<Vec<u32>, _> =
            g.split(',').map(|x| x.trim().parse::<u32>()).collect();
        let nums = nums.map_err(|_| Error::Parse(format!("bad crossing '{g}'")))?;
        let quad: [u32; 4] = nums
            .try_into()
            .map_err(|_| Error::Parse(format!("crossing '{g}' does not have 4 labels")))?;
        crossings.push(quad);
    }
    let stripped: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if crossings.is_empty() && !matches!(stripped.as_str(), "" | "[]" | "PD[]") {
        return Err(Error::Parse(format!("no crossings found in '{text}'")));
    }
    PdCode::new(crossings)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn trefoil() -> PdCode {
        parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]").unwrap()
    }

    #[test]
    fn trefoil_walk() {
        let t = trefoil();
        let tr = t.traversal();
        assert_eq!(tr.edges, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(t.signs(), vec![-1, -1, -1]);
        assert!(t.is_planar());
    }

    #[test]
    fn rejects_bad_codes() {
        assert!(matches!(parse_pd("X[1,4,2,5] X[3,6,4,1]"), Err(Error::InvalidPd(_))));
        assert!(parse_pd("X[1,2,3]").is_err());
        assert!(parse_pd("hello").is_err());
        // two unknotted components joined at two crossings
        assert!(parse_pd("X[1,3,2,4] X[3,1,4,2]").is_err());
    }

    #[test]
    fn accepts_various_syntax() {
        let a = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]").unwrap();
        let b = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, trefoil());
        assert_eq!(parse_pd("").unwrap(), PdCode::unknot());
        assert_eq!(parse_pd("PD[]").unwrap().len(), 0);
    }

    #[test]
    fn kink_is_valid() {
        let k = parse_pd("X[1,1,2,2]").unwrap();
        assert_eq!(k.signs().len(), 1);
        assert!(k.is_planar());
    }

    #[test]
    fn mirror_flips_signs_and_is_involutive() {
        let t = trefoil();
        let m = t.mirror();
        assert_eq!(m.signs(), vec![1, 1, 1]);
        assert_eq!(m.mirror(), t);
        assert!(m.is_planar());
    }

    #[test]
    fn knotinfo_orientation_converts() {
        let k = PdCode::from_clockwise(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]]).unwrap();
        assert_eq!(k, trefoil());
    }

    #[test]
    fn curl_grows_a_face() {
        let t = trefoil();
        assert_eq!(t.faces().iter().map(|f| f.len()).max(), Some(3));
        let k = t.kinked_into(3, &[1, 3, 5]).unwrap();
        assert_eq!(k.len(), 4);
        assert!(k.is_planar());
        assert_eq!(k.traversal().edges, (1..=8).collect::<Vec<u32>>());
        assert_eq!(k.faces().iter().map(|f| f.len()).max(), Some(5));
        assert!(t.kinked_into(2, &[1, 3, 5]).is_err());
        assert!(t.kinked_into(1, &[1, 5, 3]).is_err());
    }
}
