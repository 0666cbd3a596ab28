//! The Picard lattice `Z^{1,6}` of a smooth cubic surface.
//!
//! Coordinates are `(h, e1, ..., e6)` in the blow-up basis, with pairing
//! `h_u h_v - sum e_{i,u} e_{i,v}`. Lines are the classes of self-pairing -1
//! and K-pairing -1, roots those of self-pairing -2 orthogonal to K.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::weyl_perm::Permutation;
use crate::N_LINES;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicVector(pub [i64; 7]);

/// The canonical class `K = -3H + E1 + ... + E6`.
pub const K: PicVector = PicVector([-3, 1, 1, 1, 1, 1, 1]);
pub const MINUS_K: PicVector = PicVector([3, -1, -1, -1, -1, -1, -1]);
pub const H: PicVector = PicVector([1, 0, 0, 0, 0, 0, 0]);

impl PicVector {
    pub const ZERO: PicVector = PicVector([0; 7]);

    /// `E_i` for `i` in `1..=6`.
    pub fn e(i: usize) -> PicVector {
        assert!((1..=6).contains(&i), "exceptional index out of range: {i}");
        let mut c = [0; 7];
        c[i] = 1;
        PicVector(c)
    }

    pub fn coeffs(&self) -> &[i64; 7] {
        &self.0
    }

    pub fn scale(self, k: i64) -> PicVector {
        PicVector(self.0.map(|x| k * x))
    }
}

impl std::ops::Add for PicVector {
    type Output = PicVector;
    fn add(self, rhs: PicVector) -> PicVector {
        PicVector(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl std::ops::Sub for PicVector {
    type Output = PicVector;
    fn sub(self, rhs: PicVector) -> PicVector {
        PicVector(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl std::ops::Neg for PicVector {
    type Output = PicVector;
    fn neg(self) -> PicVector {
        self.scale(-1)
    }
}

impl fmt::Debug for PicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn pairing(u: &PicVector, v: &PicVector) -> i64 {
    u.0[0] * v.0[0] - (1..7).map(|i| u.0[i] * v.0[i]).sum::<i64>()
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LineLabel {
    /// Exceptional curve `E_i`.
    E(u8),
    /// Strict transform of the line through two blown-up points, `H - E_i - E_j`, `i < j`.
    F(u8, u8),
    /// Strict transform of the conic through five points, `2H - sum_{k != i} E_k`.
    G(u8),
}

impl LineLabel {
    pub fn class(self) -> PicVector {
        match self {
            LineLabel::E(i) => PicVector::e(i as usize),
            LineLabel::F(i, j) => H - PicVector::e(i as usize) - PicVector::e(j as usize),
            LineLabel::G(i) => {
                let mut c = [2, -1, -1, -1, -1, -1, -1];
                c[i as usize] = 0;
                PicVector(c)
            }
        }
    }

    /// The 27 labels in index order: E1..E6, F12..F56 lexicographically, G1..G6.
    pub fn all() -> Vec<LineLabel> {
        let mut out: Vec<LineLabel> = (1..=6).map(LineLabel::E).collect();
        for i in 1..=6 {
            for j in i + 1..=6 {
                out.push(LineLabel::F(i, j));
            }
        }
        out.extend((1..=6).map(LineLabel::G));
        out
    }

    pub fn index(self) -> usize {
        match self {
            LineLabel::E(i) => i as usize - 1,
            LineLabel::F(i, j) => {
                let (i, j) = (i as usize, j as usize);
                // pairs (a, b) with a < i come first: sum_{a<i} (6 - a)
                let before: usize = (1..i).map(|a| 6 - a).sum();
                6 + before + (j - i - 1)
            }
            LineLabel::G(i) => 20 + i as usize,
        }
    }
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E{i}"),
            LineLabel::F(i, j) => write!(f, "F{i}{j}"),
            LineLabel::G(i) => write!(f, "G{i}"),
        }
    }
}

impl fmt::Debug for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for LineLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedInput(format!("not a line label: {s:?}"));
        let digits: Vec<u8> = s
            .get(1..)
            .ok_or_else(bad)?
            .bytes()
            .map(|b| b.wrapping_sub(b'0'))
            .collect();
        if digits.iter().any(|d| !(1..=6).contains(d)) {
            return Err(bad());
        }
        let label = match (s.as_bytes().first(), digits.as_slice()) {
            (Some(b'E'), [i]) => LineLabel::E(*i),
            (Some(b'G'), [i]) => LineLabel::G(*i),
            (Some(b'F'), [i, j]) if i < j => LineLabel::F(*i, *j),
            _ => return Err(bad()),
        };
        Ok(label)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Line {
    pub index: usize,
    pub label: LineLabel,
    pub cls: PicVector,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(PicVector);

impl Root {
    pub fn new(v: PicVector) -> Result<Root> {
        if pairing(&v, &v) != -2 || pairing(&v, &K) != 0 {
            return Err(Error::inconsistent(format!("{v:?} is not a root")));
        }
        Ok(Root(v))
    }

    pub fn vec(&self) -> &PicVector {
        &self.0
    }
}

/// Three pairwise meeting lines, stored as sorted indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub members: [usize; 3],
}

impl Triangle {
    pub fn new(mut members: [usize; 3]) -> Triangle {
        members.sort_unstable();
        Triangle { members }
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }
}

fn box_search(h: std::ops::RangeInclusive<i64>, e: std::ops::RangeInclusive<i64>, mut keep: impl FnMut(&PicVector) -> bool) -> Vec<PicVector> {
    let es: Vec<i64> = e.collect();
    let m = es.len();
    let mut out = Vec::new();
    for hv in h {
        for code in 0..m.pow(6) {
            let mut c = [hv, 0, 0, 0, 0, 0, 0];
            let mut rest = code;
            for slot in c.iter_mut().skip(1) {
                *slot = es[rest % m];
                rest /= m;
            }
            let v = PicVector(c);
            if keep(&v) {
                out.push(v);
            }
        }
    }
    out
}

fn is_line_class(v: &PicVector) -> bool {
    pairing(v, v) == -1 && pairing(v, &K) == -1
}

fn is_root_class(v: &PicVector) -> bool {
    pairing(v, v) == -2 && pairing(v, &K) == 0
}

/// The 27 lines in the fixed index order.
///
/// The labelled construction is cross-checked against an exhaustive search of
/// the box `h in [0,2]`, `e_i in [-1,1]`; any disagreement is an error.
pub fn enumerate_lines() -> Result<Vec<Line>> {
    let lines: Vec<Line> = LineLabel::all()
        .into_iter()
        .enumerate()
        .map(|(index, label)| Line {
            index,
            label,
            cls: label.class(),
        })
        .collect();
    for l in &lines {
        if l.label.index() != l.index {
            return Err(Error::inconsistent(format!("label {} has index {}", l.label, l.index)));
        }
        if !is_line_class(&l.cls) {
            return Err(Error::inconsistent(format!("{} class {:?} fails line numerology", l.label, l.cls)));
        }
    }
    let constructed: BTreeSet<PicVector> = lines.iter().map(|l| l.cls).collect();
    let searched: BTreeSet<PicVector> = box_search(0..=2, -1..=1, is_line_class).into_iter().collect();
    if let Some(v) = searched.symmetric_difference(&constructed).next() {
        return Err(Error::inconsistent(format!(
            "line search and label construction disagree at {v:?}"
        )));
    }
    if lines.len() != N_LINES {
        return Err(Error::inconsistent(format!("found {} lines", lines.len())));
    }
    Ok(lines)
}

/// All 72 roots, sorted. Fails if widening the search box by one finds more.
pub fn enumerate_roots() -> Result<Vec<Root>> {
    let roots = box_search(-2..=2, -2..=2, is_root_class);
    let wider = box_search(-3..=3, -3..=3, is_root_class);
    if wider.len() != roots.len() {
        return Err(Error::inconsistent(format!(
            "root search box too small: {} roots in [-2,2], {} in [-3,3]",
            roots.len(),
            wider.len()
        )));
    }
    let set: BTreeSet<PicVector> = roots.iter().copied().collect();
    if let Some(r) = roots.iter().find(|r| !set.contains(&-**r)) {
        return Err(Error::inconsistent(format!("root set not closed under negation at {r:?}")));
    }
    let mut out: Vec<Root> = roots.into_iter().map(Root).collect();
    out.sort();
    Ok(out)
}

pub fn meets(a: &Line, b: &Line) -> bool {
    pairing(&a.cls, &b.cls) == 1
}

/// All pairwise-meeting triples, each checked to sum to `-K`, sorted lexicographically.
pub fn enumerate_triangles(lines: &[Line]) -> Result<Vec<Triangle>> {
    let n = lines.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !meets(&lines[i], &lines[j]) {
                continue;
            }
            for k in j + 1..n {
                if !meets(&lines[i], &lines[k]) || !meets(&lines[j], &lines[k]) {
                    continue;
                }
                let sum = lines[i].cls + lines[j].cls + lines[k].cls;
                if sum != MINUS_K {
                    return Err(Error::inconsistent(format!(
                        "meeting triple {} {} {} sums to {sum:?}, not -K",
                        lines[i].label, lines[j].label, lines[k].label
                    )));
                }
                out.push(Triangle::new([lines[i].index, lines[j].index, lines[k].index]));
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Reflection in a root: `x + (x . r) r`.
pub fn reflect(r: &Root, x: &PicVector) -> PicVector {
    *x + r.0.scale(pairing(x, &r.0))
}

/// The permutation of line indices induced by reflecting in `r`.
pub fn line_permutation(lines: &[Line], r: &Root) -> Result<Permutation> {
    let by_class: HashMap<PicVector, usize> = lines.iter().map(|l| (l.cls, l.index)).collect();
    let images = lines
        .iter()
        .map(|l| {
            let image = reflect(r, &l.cls);
            by_class.get(&image).copied().ok_or_else(|| {
                Error::inconsistent(format!("reflection in {:?} sends {} to non-line {image:?}", r.0, l.label))
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    Permutation::from_images(&images)
}

/// Simple roots of E6 in this basis: `E1-E2, ..., E5-E6, H-E1-E2-E3`.
pub fn simple_roots() -> [Root; 6] {
    let e = PicVector::e;
    [
        Root(e(1) - e(2)),
        Root(e(2) - e(3)),
        Root(e(3) - e(4)),
        Root(e(4) - e(5)),
        Root(e(5) - e(6)),
        Root(H - e(1) - e(2) - e(3)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> LineLabel {
        s.parse().unwrap()
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(pairing(&H, &H), 1);
        let e1 = label("E1").class();
        assert_eq!(pairing(&e1, &e1), -1);
        assert_eq!(pairing(&e1, &label("F12").class()), 1);
    }

    #[test]
    fn label_index_order() {
        let all = LineLabel::all();
        assert_eq!(all.len(), 27);
        for (i, l) in all.iter().enumerate() {
            assert_eq!(l.index(), i, "{l}");
            assert_eq!(l.to_string().parse::<LineLabel>().unwrap(), *l);
        }
        assert_eq!(label("F12").index(), 6);
        assert_eq!(label("F56").index(), 20);
        assert_eq!(label("G2").index(), 22);
    }

    #[test]
    fn bad_labels_rejected() {
        for s in ["", "E", "E7", "F21", "F11", "G0", "X1", "F123"] {
            assert!(s.parse::<LineLabel>().is_err(), "{s}");
        }
    }

    #[test]
    fn e3_class() {
        let lines = enumerate_lines().unwrap();
        assert_eq!(lines[2].label, LineLabel::E(3));
        assert_eq!(lines[2].cls, PicVector([0, 0, 0, 1, 0, 0, 0]));
    }

    #[test]
    fn root_examples() {
        let e = PicVector::e;
        assert!(Root::new(e(1) - e(2)).is_ok());
        assert!(Root::new(H - e(1) - e(2) - e(3)).is_ok());
        assert!(Root::new(e(1)).is_err());
    }

    #[test]
    fn reflect_examples() {
        let e = PicVector::e;
        let r = Root::new(e(1) - e(2)).unwrap();
        assert_eq!(reflect(&r, &e(1)), e(2));
        let r = Root::new(H - e(1) - e(2) - e(3)).unwrap();
        assert_eq!(reflect(&r, &e(1)), label("F23").class());
        assert_eq!(reflect(&r, &K), K);
    }

    #[test]
    fn e1_g2_f12_is_a_triangle() {
        let lines = enumerate_lines().unwrap();
        let tris = enumerate_triangles(&lines).unwrap();
        let t = Triangle::new([label("E1").index(), label("G2").index(), label("F12").index()]);
        assert_eq!(t.members, [0, 6, 22]);
        assert!(tris.contains(&t));
    }

    #[test]
    fn non_line_image_is_an_error() {
        let lines = enumerate_lines().unwrap();
        // not a root, but reflect() does not check; the image of E1 is then not a line
        let fake = Root(PicVector::e(1).scale(2));
        assert!(matches!(line_permutation(&lines, &fake), Err(Error::ModelInconsistency(_))));
    }
}
