use super::group::{GeneratorMap, GroupPresentation};
use super::wirtinger::{cut_diagram, longitude_word, wirtinger, CutDiagram, Event, Passage};
use super::word::Word;
use crate::diagram::SymUnionSpec;
use crate::error::{Error, Result};

/// Presentations attached to an even symmetric union.
#[derive(Clone, Debug)]
pub struct SymUnionPresentations {
    /// Group of the union, deficiency one, meridian `v1`, with longitude.
    pub union: GroupPresentation,
    /// Group of the partial knot on the pieces of `D` cut at the marked
    /// edges, with the identification relators; meridian `z1`.
    pub partial: GroupPresentation,
    /// The epimorphism from the union group onto the partial group.
    pub phi: GeneratorMap,
    /// Arc of the plain Wirtinger presentation of `D` containing each piece.
    pub piece_arc: Vec<usize>,
}

struct Roles {
    y1: Vec<usize>,
    y2: Vec<usize>,
    z1: usize,
    z2: usize,
}

fn words(rels: &[&[(usize, i32)]]) -> Vec<Word> {
    rels.iter().map(|r| Word::from_pairs(r)).collect()
}

/// Build the union presentation of an even symmetric union from the pieces
/// of `D` cut at the marked edges, together with the partial presentation
/// and the epimorphism onto it.
pub fn build_symun_presentation(spec: &SymUnionSpec) -> Result<SymUnionPresentations> {
    spec.validate()?;
    let ms = spec.half_twists().map_err(|_| Error::Domain("odd twist count in an even symmetric union".into()))?;
    let d = &spec.partial;
    let k = spec.k();
    let cd = cut_diagram(d, &spec.marks);
    let np = cd.n_pieces;
    let roles = Roles {
        y1: spec.marks[1..].iter().map(|&e| cd.tail_piece[e as usize]).collect(),
        y2: spec.marks[1..].iter().map(|&e| cd.head_piece[e as usize]).collect(),
        z1: cd.tail_piece[spec.marks[0] as usize],
        z2: cd.head_piece[spec.marks[0] as usize],
    };
    let single = k == 1;

    // piece names, in order of role assignment
    let mut piece_name: Vec<Option<String>> = vec![None; np];
    let mut role_order = Vec::new();
    for l in 0..k {
        for (j, &p) in [roles.y1[l], roles.y2[l]].iter().enumerate() {
            if piece_name[p].is_none() {
                piece_name[p] = Some(if single { format!("y{}", j + 1) } else { format!("y{}_{}", l + 1, j + 1) });
                role_order.push(p);
            }
        }
    }
    for (j, &p) in [roles.z1, roles.z2].iter().enumerate() {
        if piece_name[p].is_none() {
            piece_name[p] = Some(format!("z{}", j + 1));
            role_order.push(p);
        }
    }
    let plain: Vec<usize> = (0..np).filter(|&p| piece_name[p].is_none()).collect();
    for (i, &p) in plain.iter().enumerate() {
        piece_name[p] = Some(format!("u{}", i + 1));
    }
    let piece_name: Vec<String> = piece_name.into_iter().map(Option::unwrap).collect();

    // generator layout of the union
    let mut names: Vec<String> = Vec::new();
    let mut gen_of = vec![usize::MAX; np];
    let mut star_of = vec![usize::MAX; np];
    for &p in &plain {
        gen_of[p] = names.len();
        names.push(piece_name[p].clone());
    }
    for &p in &plain {
        star_of[p] = names.len();
        names.push(format!("{}*", piece_name[p]));
    }
    let v1 = names.len();
    let v2 = v1 + 1;
    names.push("v1".into());
    names.push("v2".into());
    // x[l][i] and xs[l][i] for i = 0..=|m_l|
    let mut x: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut xs: Vec<Vec<usize>> = Vec::with_capacity(k);
    for (l, &m) in ms.iter().enumerate() {
        let len = m.unsigned_abs() as usize + 1;
        let (mut a, mut b) = (Vec::with_capacity(len), Vec::with_capacity(len));
        for i in 0..len {
            let base = if single { format!("x{}", i + 1) } else { format!("x{}_{}", l + 1, i + 1) };
            if m >= 0 {
                a.push(names.len());
                names.push(base.clone());
                b.push(names.len());
                names.push(format!("{base}*"));
            } else {
                b.push(names.len());
                names.push(format!("{base}*"));
                a.push(names.len());
                names.push(base);
            }
        }
        x.push(a);
        xs.push(b);
    }
    for &p in &role_order {
        gen_of[p] = names.len();
        names.push(piece_name[p].clone());
        star_of[p] = names.len();
        names.push(format!("{}*", piece_name[p]));
    }

    let mut relators = Vec::new();
    let relator_on = |ps: &Passage, g: &[usize]| {
        Passage { from: g[ps.from], over: g[ps.over], sign: ps.sign, to: g[ps.to] }.relator()
    };
    for ps in &cd.crossing_passages {
        relators.push(relator_on(ps, &gen_of));
    }
    for ps in &cd.crossing_passages {
        relators.push(relator_on(ps, &star_of));
    }
    let sides = spec.mark_sides();
    for (l, &m) in ms.iter().enumerate() {
        let last = x[l].len() - 1;
        // a left-hand mark carries the right-hand picture with both strands reversed
        let flip = !sides[l + 1];
        let at = |g: &[usize], i: usize, e: i32| if flip { (g[last - i], -e) } else { (g[i], e) };
        let (a, b) = (&x[l], &xs[l]);
        for i in 0..m.unsigned_abs() as usize {
            if m > 0 {
                relators.extend(words(&[
                    &[at(a, i, 1), at(b, i, 1), at(a, i + 1, -1), at(b, i, -1)],
                    &[at(b, i, 1), at(a, i + 1, -1), at(b, i + 1, -1), at(a, i + 1, 1)],
                ]));
            } else {
                relators.extend(words(&[
                    &[at(b, i, 1), at(a, i, 1), at(b, i + 1, -1), at(a, i, -1)],
                    &[at(a, i, 1), at(b, i + 1, -1), at(a, i + 1, -1), at(b, i + 1, 1)],
                ]));
            }
        }
    }
    for l in 0..k {
        let last = x[l].len() - 1;
        let (y1, y2) = (roles.y1[l], roles.y2[l]);
        relators.extend(words(&[
            &[(x[l][0], 1), (gen_of[y1], -1)],
            &[(xs[l][0], 1), (star_of[y1], -1)],
            &[(x[l][last], 1), (gen_of[y2], -1)],
            &[(xs[l][last], 1), (star_of[y2], -1)],
        ]));
    }
    // the fourth identification v2 z2*^-1 is dropped
    relators.extend(words(&[
        &[(v1, 1), (gen_of[roles.z1], -1)],
        &[(v1, 1), (star_of[roles.z1], -1)],
        &[(v2, 1), (gen_of[roles.z2], -1)],
    ]));

    let flips: Vec<bool> = sides[1..].iter().map(|r| !r).collect();
    let lon = union_longitude(&cd, &spec.marks[1..], &ms, &flips, &x, &xs, &gen_of, &star_of, v1);
    let union = GroupPresentation::new(names, relators, v1)?.with_longitude(lon)?;

    // partial presentation on the pieces, in the same order as in the union
    let mut porder = plain.clone();
    porder.extend(role_order.iter().copied());
    let mut pidx = vec![0; np];
    for (i, &p) in porder.iter().enumerate() {
        pidx[p] = i;
    }
    let mut prels: Vec<Word> = cd.crossing_passages.iter().map(|ps| relator_on(ps, &pidx)).collect();
    for l in 0..k {
        prels.push(Word::from_pairs(&[(pidx[roles.y1[l]], 1), (pidx[roles.y2[l]], -1)]));
    }
    prels.push(Word::from_pairs(&[(pidx[roles.z1], 1), (pidx[roles.z2], -1)]));
    let pnames = porder.iter().map(|&p| piece_name[p].clone()).collect();
    let plon = longitude_word(&cd.passages, roles.z2, 0).substitute(
        &(0..np).map(|p| Word::gen(pidx[p])).collect::<Vec<_>>(),
    );
    let partial = GroupPresentation::new(pnames, prels, pidx[roles.z1])?.with_longitude(plon)?;

    let mut images = vec![Word::identity(); union.n_gens()];
    for p in 0..np {
        images[gen_of[p]] = Word::gen(pidx[p]);
        images[star_of[p]] = Word::gen(pidx[p]);
    }
    images[v1] = Word::gen(pidx[roles.z1]);
    images[v2] = Word::gen(pidx[roles.z2]);
    for l in 0..k {
        for &g in x[l].iter().chain(xs[l].iter()) {
            images[g] = Word::gen(pidx[roles.y1[l]]);
        }
    }
    let phi = GeneratorMap { images };

    let plain_cd = cut_diagram(d, &[]);
    let mut piece_arc = vec![0; np];
    for e in 1..=d.num_edges() {
        piece_arc[pidx[cd.tail_piece[e]]] = plain_cd.tail_piece[e];
        piece_arc[pidx[cd.head_piece[e]]] = plain_cd.head_piece[e];
    }
    Ok(SymUnionPresentations { union, partial, phi, piece_arc })
}

/// Walk the union starting on `v1`: along `-D*` backwards from the star of
/// the piece before the cut `e_0`, through `v2`, then along `D` forwards.
#[allow(clippy::too_many_arguments)]
fn union_longitude(
    cd: &CutDiagram,
    balls: &[u32],
    ms: &[i64],
    flips: &[bool],
    x: &[Vec<usize>],
    xs: &[Vec<usize>],
    gen_of: &[usize],
    star_of: &[usize],
    v1: usize,
) -> Word {
    let ball_of = |c: u32| balls.iter().position(|&m| m == c);
    let mut walk: Vec<Passage> = Vec::new();
    let region = |l: usize| -> (Vec<Passage>, Vec<Passage>) {
        let m = ms[l];
        let n = m.unsigned_abs() as usize;
        let mut fwd = Vec::with_capacity(n);
        let mut back = Vec::with_capacity(n);
        let (xl, sl) = (&x[l], &xs[l]);
        for i in 0..n {
            fwd.push(match (m > 0, flips[l]) {
                (true, false) => Passage { from: xl[i], over: sl[i], sign: 1, to: xl[i + 1] },
                (false, false) => Passage { from: xl[i], over: sl[i + 1], sign: -1, to: xl[i + 1] },
                (true, true) => Passage { from: xl[i], over: sl[i + 1], sign: 1, to: xl[i + 1] },
                (false, true) => Passage { from: xl[i], over: sl[i], sign: -1, to: xl[i + 1] },
            });
        }
        for i in (0..n).rev() {
            back.push(match (m > 0, flips[l]) {
                (true, false) => Passage { from: sl[i + 1], over: xl[i + 1], sign: 1, to: sl[i] },
                (false, false) => Passage { from: sl[i + 1], over: xl[i], sign: -1, to: sl[i] },
                (true, true) => Passage { from: sl[i + 1], over: xl[i], sign: 1, to: sl[i] },
                (false, true) => Passage { from: sl[i + 1], over: xl[i + 1], sign: -1, to: sl[i] },
            });
        }
        (fwd, back)
    };
    walk.extend(
        cd.events
            .iter()
            .rev()
            .flat_map(|e| match *e {
                Event::Pass(p) => vec![Passage { from: star_of[p.to], over: star_of[p.over], sign: -p.sign, to: star_of[p.from] }],
                Event::Cut(c) => match ball_of(c) {
                    Some(l) => region(l).1,
                    None => Vec::new(),
                },
            }),
    );
    walk.extend(cd.events.iter().flat_map(|e| match *e {
        Event::Pass(p) => vec![Passage { from: gen_of[p.from], over: gen_of[p.over], sign: p.sign, to: gen_of[p.to] }],
        Event::Cut(c) => match ball_of(c) {
            Some(l) => region(l).0,
            None => Vec::new(),
        },
    }));
    longitude_word(&walk, v1, 0)
}

/// Lift a map on the arcs of `D` to the pieces of the partial presentation.
pub fn lift_to_pieces<T: Clone>(arc_values: &[T], piece_arc: &[usize]) -> Vec<T> {
    piece_arc.iter().map(|&a| arc_values[a].clone()).collect()
}

/// Plain Wirtinger presentation of the partial knot, on which the
/// twisted invariant of `K_D` is computed.
pub fn partial_wirtinger(spec: &SymUnionSpec) -> GroupPresentation {
    wirtinger(&spec.partial)
}
