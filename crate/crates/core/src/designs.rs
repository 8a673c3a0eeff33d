//! Resolvable block designs used to lay out approximate MUBs.
//!
//! A design is a point set `{0, …, d−1}` together with parallel classes; each
//! class partitions the points into blocks. Constructors validate eagerly and
//! only ever return valid designs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::algebra::{mols_from_field, FieldTable};
use crate::error::{Error, Result};

/// Blocks of a class, each a sorted list of point indices.
pub type ParallelClass = Vec<Vec<usize>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDesign")]
pub struct ResolvableDesign {
    d: usize,
    classes: Vec<ParallelClass>,
    provenance: String,
}

#[derive(Deserialize)]
struct RawDesign {
    d: usize,
    classes: Vec<ParallelClass>,
    #[serde(default)]
    provenance: String,
}

impl TryFrom<RawDesign> for ResolvableDesign {
    type Error = Error;

    fn try_from(raw: RawDesign) -> Result<Self> {
        Self::new(raw.d, raw.classes, raw.provenance)
    }
}

impl ResolvableDesign {
    /// Validates and normalizes: points sorted within blocks, blocks ordered by first point.
    pub fn new(d: usize, mut classes: Vec<ParallelClass>, provenance: impl Into<String>) -> Result<Self> {
        let report = validate_design(d, &classes);
        if !report.passed {
            return Err(Error::MalformedDesign(report.problems.join("; ")));
        }
        for class in &mut classes {
            for block in class.iter_mut() {
                block.sort_unstable();
            }
            class.sort_by_key(|b| b[0]);
        }
        Ok(Self { d, classes, provenance: provenance.into() })
    }

    pub fn point_count(&self) -> usize {
        self.d
    }

    pub fn classes(&self) -> &[ParallelClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// The common block size, if all blocks have the same size.
    pub fn block_size(&self) -> Option<usize> {
        let mut sizes = self.classes.iter().flatten().map(Vec::len);
        let first = sizes.next()?;
        sizes.all(|s| s == first).then_some(first)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub passed: bool,
    pub problems: Vec<String>,
}

/// Checks that every class is a partition of `{0, …, d−1}` into nonempty blocks.
pub fn validate_design(d: usize, classes: &[ParallelClass]) -> DesignReport {
    let mut problems = Vec::new();
    if d == 0 {
        problems.push("no points".to_string());
    }
    if classes.is_empty() {
        problems.push("no parallel classes".to_string());
    }
    for (c, class) in classes.iter().enumerate() {
        let mut seen = vec![false; d];
        let mut total = 0;
        for (b, block) in class.iter().enumerate() {
            if block.is_empty() {
                problems.push(format!("class {c} block {b} is empty"));
            }
            total += block.len();
            for &p in block {
                if p >= d {
                    problems.push(format!("class {c} block {b}: point {p} out of range"));
                } else if std::mem::replace(&mut seen[p], true) {
                    problems.push(format!("class {c}: point {p} appears twice"));
                }
            }
        }
        if total != d || seen.iter().any(|s| !s) {
            problems.push(format!("class {c} does not partition the {d} points (covers {total})"));
        }
    }
    DesignReport { passed: problems.is_empty(), problems }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionProfile {
    /// Intersection size → number of cross-class block pairs.
    pub histogram: BTreeMap<usize, usize>,
    pub mu: usize,
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    // blocks are sorted
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// Histogram of `|B ∩ B'|` over unordered block pairs from distinct classes.
pub fn intersection_profile(design: &ResolvableDesign) -> IntersectionProfile {
    let mut histogram = BTreeMap::new();
    let classes = design.classes();
    for (a, ca) in classes.iter().enumerate() {
        for cb in &classes[a + 1..] {
            for x in ca {
                for y in cb {
                    *histogram.entry(intersection_size(x, y)).or_insert(0) += 1;
                }
            }
        }
    }
    let mu = histogram.iter().rev().find(|(_, &n)| n > 0).map_or(0, |(&k, _)| k);
    IntersectionProfile { histogram, mu }
}

/// For one block and one other class: intersection size → number of blocks.
pub fn partner_counts(design: &ResolvableDesign, class: usize, block: usize, other: usize) -> BTreeMap<usize, usize> {
    let b = &design.classes()[class][block];
    let mut out = BTreeMap::new();
    for y in &design.classes()[other] {
        *out.entry(intersection_size(b, y)).or_insert(0) += 1;
    }
    out
}

/// The partner pattern shared by every (block, other class) pair, if uniform.
pub fn uniform_partner_pattern(design: &ResolvableDesign) -> Option<BTreeMap<usize, usize>> {
    let r = design.class_count();
    let mut pattern = None;
    for a in 0..r {
        for b in 0..design.classes()[a].len() {
            for o in (0..r).filter(|&o| o != a) {
                let p = partner_counts(design, a, b, o);
                match &pattern {
                    None => pattern = Some(p),
                    Some(q) if *q != p => return None,
                    _ => {}
                }
            }
        }
    }
    pattern
}

/// Number of blocks containing each unordered point pair.
pub fn pair_coverage(design: &ResolvableDesign) -> BTreeMap<(usize, usize), usize> {
    let mut out = BTreeMap::new();
    for block in design.classes().iter().flatten() {
        for (i, &p) in block.iter().enumerate() {
            for &q in &block[i + 1..] {
                *out.entry((p, q)).or_insert(0) += 1;
            }
        }
    }
    out
}

/// Affine plane `AG(2, q)` with coordinates kept for the surgery below.
struct AffinePlane {
    field: FieldTable,
    /// Direction `(dx, dy)` of each parallel class: slopes `0..q` then vertical.
    directions: Vec<(usize, usize)>,
}

impl AffinePlane {
    fn new(q: usize) -> Result<Self> {
        let field = FieldTable::new(q)?;
        let mut directions: Vec<_> = (0..q).map(|m| (1, m)).collect();
        directions.push((0, 1));
        Ok(Self { field, directions })
    }

    fn q(&self) -> usize {
        self.field.order()
    }

    fn index(&self, x: usize, y: usize) -> usize {
        x * self.q() + y
    }

    /// `(x, y) + t·v_class`.
    fn step(&self, (x, y): (usize, usize), t: usize, class: usize) -> (usize, usize) {
        let f = &self.field;
        let (dx, dy) = self.directions[class];
        (f.add(x, f.mul(t, dx)), f.add(y, f.mul(t, dy)))
    }

    fn classes(&self) -> Vec<ParallelClass> {
        let q = self.q();
        // line through (c, 0) for slopes, (c, 0) for the vertical class
        (0..=q)
            .map(|class| {
                (0..q)
                    .map(|c| {
                        let base = if class < q { (0, c) } else { (c, 0) };
                        let mut line: Vec<_> = (0..q)
                            .map(|t| {
                                let (x, y) = self.step(base, t, class);
                                self.index(x, y)
                            })
                            .collect();
                        line.sort_unstable();
                        line
                    })
                    .collect()
            })
            .collect()
    }
}

/// The affine resolvable `(q², q, 1)`-BIBD: `q + 1` classes of `q` lines.
pub fn affine_resolvable_bibd(q: usize) -> Result<ResolvableDesign> {
    let plane = AffinePlane::new(q)?;
    ResolvableDesign::new(q * q, plane.classes(), format!("affine-plane(q={q})"))
}

/// Resolvable transversal design on `d = k·s` points from `k − 1` MOLS of order `s`.
///
/// Point `g·s + x` is symbol `x` of group `g`. The block for cell `(x, y)` is
/// `{(0, y), (1, L_1(x, y)), …, (k−1, L_{k−1}(x, y))}`; cells of row `x` form a
/// parallel class, so there are `s = N(s) + 1` classes of `s` blocks of size `k`.
pub fn resolvable_transversal_design(k: usize, s: usize) -> Result<ResolvableDesign> {
    if k > s {
        return Err(Error::InvalidParameters(format!("block size k={k} exceeds s={s}")));
    }
    if k < 2 {
        return Err(Error::InvalidParameters(format!("block size k={k} must be at least 2")));
    }
    let squares = mols_from_field(s)?;
    let classes = (0..s)
        .map(|x| {
            (0..s)
                .map(|y| {
                    std::iter::once(y)
                        .chain(squares[..k - 1].iter().enumerate().map(|(g, sq)| (g + 1) * s + sq.get(x, y)))
                        .collect()
                })
                .collect()
        })
        .collect();
    ResolvableDesign::new(k * s, classes, format!("rtd(k={k},s={s})"))
}

/// Resolvable design on `q² − 1` points with `q + 1` classes of `q − 1` blocks of size `q + 1`.
///
/// Starting from `AG(2, q)`, the point `P = q² − 1` is deleted. In each class the
/// line through `P` becomes row `i` of a `(q+1) × (q−1)` array, and its points
/// are pushed into the remaining lines of the same class: the point in column
/// `j` of row `i` joins the class-`i` line through the point in column
/// `j + s_i` of row `i + 1` (row `q + 1` wraps to row 1). Rows are ordered by
/// the line parameter `g^j`, `g` primitive. The shifts `s_i` are the
/// lexicographically smallest choice keeping every cross-class intersection at
/// most 2 points.
pub fn q2_minus_1_design(q: usize) -> Result<ResolvableDesign> {
    if q < 3 {
        return Err(Error::InvalidParameters(format!("q={q} must be at least 3")));
    }
    let plane = AffinePlane::new(q)?;
    let f = &plane.field;
    let n = q + 1;
    let removed = q * q - 1;
    let p = (q - 1, q - 1);
    assert_eq!(plane.index(p.0, p.1), removed);

    let g = f.primitive_element();
    let powers: Vec<usize> = std::iter::successors(Some(1), |&x| Some(f.mul(x, g))).take(q - 1).collect();
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            powers
                .iter()
                .map(|&t| {
                    let (x, y) = plane.step(p, t, i);
                    plane.index(x, y)
                })
                .collect()
        })
        .collect();
    let lines = plane.classes();
    let remaining: Vec<ParallelClass> =
        lines.iter().map(|class| class.iter().filter(|b| !b.contains(&removed)).cloned().collect()).collect();

    let build = |i: usize, shift: usize| -> ParallelClass {
        let mut blocks = remaining[i].clone();
        let next = &rows[(i + 1) % n];
        for (j, &point) in rows[i].iter().enumerate() {
            let target = next[(j + shift) % (q - 1)];
            let block = blocks.iter_mut().find(|b| b.contains(&target)).expect("lines of a class cover the plane");
            block.push(point);
        }
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks
    };
    let compatible =
        |a: &ParallelClass, b: &ParallelClass| a.iter().all(|x| b.iter().all(|y| intersection_size(x, y) <= 2));

    let mut chosen: Vec<(usize, ParallelClass)> = Vec::with_capacity(n);
    let mut next_shift = 0usize;
    while chosen.len() < n {
        let i = chosen.len();
        let found = (next_shift..q - 1).find_map(|s| {
            let c = build(i, s);
            chosen.iter().all(|(_, prev)| compatible(&c, prev)).then_some((s, c))
        });
        match found {
            Some(entry) => {
                chosen.push(entry);
                next_shift = 0;
            }
            None => {
                let (s, _) = chosen.pop().ok_or_else(|| {
                    Error::InvalidParameters(format!("no reinsertion alignment with μ ≤ 2 for q={q}"))
                })?;
                next_shift = s + 1;
            }
        }
    }
    let shifts: Vec<String> = chosen.iter().map(|(s, _)| s.to_string()).collect();
    let classes = chosen.into_iter().map(|(_, c)| c).collect();
    ResolvableDesign::new(removed, classes, format!("q2m1(q={q}; shifts=[{}])", shifts.join(",")))
}

/// One resolution of the Kirkman triple system on 15 points.
const KTS15: [[[usize; 3]; 5]; 7] = [
    [[0, 1, 2], [3, 7, 11], [4, 9, 14], [5, 10, 12], [6, 8, 13]],
    [[0, 3, 4], [1, 7, 9], [2, 12, 13], [5, 8, 14], [6, 10, 11]],
    [[0, 5, 6], [1, 8, 10], [2, 11, 14], [3, 9, 13], [4, 7, 12]],
    [[0, 7, 8], [1, 11, 13], [2, 4, 5], [3, 10, 14], [6, 9, 12]],
    [[0, 9, 10], [1, 12, 14], [2, 3, 6], [4, 8, 11], [5, 7, 13]],
    [[0, 11, 12], [1, 3, 5], [2, 8, 9], [4, 10, 13], [6, 7, 14]],
    [[0, 13, 14], [1, 4, 6], [2, 7, 10], [3, 8, 12], [5, 9, 11]],
];

/// Kirkman triple system KTS(15): a resolvable `(15, 3, 1)`-BIBD with 7 classes.
pub fn kirkman_kts15() -> ResolvableDesign {
    let classes = KTS15.iter().map(|c| c.iter().map(|b| b.to_vec()).collect()).collect();
    ResolvableDesign::new(15, classes, "kts15").expect("embedded KTS(15) is valid")
}

/// All cross-class intersection sizes that occur, as a set.
pub fn intersection_sizes(design: &ResolvableDesign) -> BTreeSet<usize> {
    intersection_profile(design).histogram.into_keys().collect()
}
