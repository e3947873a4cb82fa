use super::group::GroupPresentation;
use super::word::{Letter, Word};
use crate::diagram::PdCode;

/// Passing under the over-arc `over` takes generator `from` to
/// `to = over^-sign * from * over^sign`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Passage {
    pub from: usize,
    pub over: usize,
    pub sign: i8,
    pub to: usize,
}

impl Passage {
    /// `from * over^sign * to^-1 * over^-sign`.
    pub fn relator(&self) -> Word {
        let s = self.sign as i32;
        Word::new([
            Letter::new(self.from, 1),
            Letter::new(self.over, s),
            Letter::new(self.to, -1),
            Letter::new(self.over, -s),
        ])
    }
}

/// Wirtinger data of a diagram whose strand is additionally cut in the
/// middle of some edges. Pieces are the maximal stretches of strand between
/// under-passages and cuts.
#[derive(Clone, Debug)]
pub struct CutDiagram {
    pub n_pieces: usize,
    /// Piece holding the first (tail) half of each edge, indexed by label.
    pub tail_piece: Vec<usize>,
    /// Piece holding the second (head) half of each edge.
    pub head_piece: Vec<usize>,
    /// One passage per crossing, in crossing order.
    pub crossing_passages: Vec<Passage>,
    /// Under-passages in traversal order, starting from piece 0.
    pub passages: Vec<Passage>,
    /// Under-passages and cuts in traversal order, starting from piece 0.
    pub events: Vec<Event>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Event {
    Pass(Passage),
    /// The strand crosses the cut in the middle of this edge.
    Cut(u32),
}

/// Pieces are numbered in order of appearance. With cuts, piece 0 starts
/// just after the first cut; without cuts, piece 0 is the arc holding edge 1.
pub fn cut_diagram(pd: &PdCode, cuts: &[u32]) -> CutDiagram {
    let n = pd.len();
    assert!(n > 0, "cut_diagram needs at least one crossing");
    let tr = pd.traversal();
    let m = 2 * n;
    let halves = 2 * m;
    let cut_step: Vec<bool> = tr.edges.iter().map(|e| cuts.contains(e)).collect();
    // half 2t is the tail half of edges[t], half 2t+1 its head half
    let break_before = |h: usize| -> bool {
        let t = h / 2;
        if h % 2 == 1 {
            cut_step[t]
        } else {
            tr.entries[(t + m - 1) % m].1 == 0
        }
    };
    let start = match cuts.first() {
        Some(&e) => 2 * tr.step_of_edge(e).expect("cut edge in diagram") + 1,
        None => 0,
    };
    let mut piece = vec![0usize; halves];
    let mut cur = 0;
    for k in 0..halves {
        let h = (start + k) % halves;
        if k > 0 && break_before(h) {
            cur += 1;
        }
        piece[h] = cur;
    }
    let mut n_pieces = cur + 1;
    if !break_before(start) && cur > 0 {
        for p in piece.iter_mut() {
            if *p == cur {
                *p = 0;
            }
        }
        n_pieces = cur;
    }

    let mut tail_piece = vec![usize::MAX; m + 1];
    let mut head_piece = vec![usize::MAX; m + 1];
    for (t, &e) in tr.edges.iter().enumerate() {
        tail_piece[e as usize] = piece[2 * t];
        head_piece[e as usize] = piece[2 * t + 1];
    }

    let signs = pd.signs();
    let mut over_of = vec![usize::MAX; n];
    for (t, &(c, q)) in tr.entries.iter().enumerate() {
        if q % 2 == 1 {
            over_of[c] = piece[2 * t + 1];
        }
    }
    let mut by_crossing = vec![None; n];
    let mut in_order = Vec::with_capacity(n);
    let mut events = Vec::with_capacity(n + cuts.len());
    let first_step = start / 2;
    for k in 0..m {
        let t = (first_step + k) % m;
        if k > 0 && cut_step[t] {
            events.push(Event::Cut(tr.edges[t]));
        }
        let (c, q) = tr.entries[t];
        if q != 0 {
            continue;
        }
        let p = Passage {
            from: piece[2 * t + 1],
            over: over_of[c],
            sign: signs[c],
            to: piece[(2 * t + 2) % halves],
        };
        by_crossing[c] = Some(p);
        in_order.push(p);
        events.push(Event::Pass(p));
    }
    if let Some(&e) = cuts.first() {
        events.push(Event::Cut(e));
    }
    CutDiagram {
        n_pieces,
        tail_piece,
        head_piece,
        crossing_passages: by_crossing.into_iter().map(Option::unwrap).collect(),
        passages: in_order,
        events,
    }
}

/// Product of over-arcs met along a closed walk of passages, corrected by a
/// power of the meridian so that its exponent sum vanishes.
pub fn longitude_word(passages: &[Passage], meridian: usize, extra_writhe: i64) -> Word {
    let mut w = Word::identity();
    let mut writhe = extra_writhe;
    for p in passages {
        w = w.mul(&Word::gen(p.over).pow(p.sign as i64));
        writhe += p.sign as i64;
    }
    w.mul(&Word::gen(meridian).pow(-writhe))
}

/// Wirtinger presentation: one generator per arc (arc of edge 1 first), one
/// relator per crossing, meridian `x1` and the preferred longitude.
pub fn wirtinger(pd: &PdCode) -> GroupPresentation {
    if pd.is_empty() {
        return GroupPresentation::with_default_names(1, Vec::new())
            .unwrap()
            .with_longitude(Word::identity())
            .unwrap();
    }
    let cd = cut_diagram(pd, &[]);
    let relators = cd.crossing_passages.iter().map(Passage::relator).collect();
    let lon = longitude_word(&cd.passages, 0, 0);
    GroupPresentation::with_default_names(cd.n_pieces, relators)
        .unwrap()
        .with_longitude(lon)
        .unwrap()
}
