//! Combinatorial Legendrian front diagrams.
//!
//! A front is encoded as a sequence of *event words*. Each word describes a
//! plat-style sweep across the plane: a running list of strands, ordered top
//! to bottom (index 0 = top), is transformed by events
//!
//! * `L i` — left cusp: insert a new pair of strands at positions `i`, `i+1`;
//! * `R i` — right cusp: the strands at positions `i`, `i+1` meet and die;
//! * `X i` — crossing: the strands at positions `i`, `i+1` cross.
//!
//! Distinct words are split (placed in disjoint regions of the plane); a
//! single word may still contain several interleaved components. At a
//! crossing the descending strand (upper-left to lower-right, the one with
//! smaller slope) passes in front — fronts have no crossing-sign freedom.
//!
//! Orientations are chosen per component, in discovery order:
//! [`Orientation::Plus`] means the earliest-born upper strand of the
//! component travels rightward. The classical invariants follow the usual
//! conventions: `tb = writhe − right cusps` and `rot = (down − up)/2` where a
//! cusp counts as *down* when the traversal runs from its upper strand to its
//! lower strand.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;
use thiserror::Error;

use crate::linalg::{IntMatrix, IntVector};
use crate::presentation::{boundary_homology, LinkTrace, PresentationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LegendrianError {
    #[error("word {word}, event {event}: position {position} invalid with {strands} strands")]
    EventOutOfRange {
        word: usize,
        event: usize,
        position: usize,
        strands: usize,
    },
    #[error("word {word} ends with {remaining} open strands")]
    UnclosedStrands { word: usize, remaining: usize },
    #[error("front has {components} components but {orientations} orientations")]
    OrientationCount {
        components: usize,
        orientations: usize,
    },
    #[error("component index {component} out of range ({count} components)")]
    ComponentOutOfRange { component: usize, count: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("matrix is not unimodular")]
    NotUnimodular,
    #[error("chern class {got:?} does not match the family parameter n = {n}")]
    ChernMismatch { n: i64, got: Vec<BigInt> },
    #[error("boundary indices must differ")]
    EqualIndices,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FrontEvent {
    Left(usize),
    Right(usize),
    Cross(usize),
}

impl fmt::Display for FrontEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrontEvent::Left(i) => write!(f, "L{i}"),
            FrontEvent::Right(i) => write!(f, "R{i}"),
            FrontEvent::Cross(i) => write!(f, "X{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Plus,
    Minus,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Plus => Orientation::Minus,
            Orientation::Minus => Orientation::Plus,
        }
    }
}

/// A validated front diagram: event words plus one orientation per component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrontDiagram {
    words: Vec<Vec<FrontEvent>>,
    orientations: Vec<Orientation>,
}

impl FrontDiagram {
    pub fn new(
        mut words: Vec<Vec<FrontEvent>>,
        orientations: Vec<Orientation>,
    ) -> Result<Self, LegendrianError> {
        // An empty word is an empty region of the plane; drop it so that the
        // text format (which cannot express it) round-trips exactly.
        words.retain(|w| !w.is_empty());
        let f = FrontDiagram {
            words,
            orientations,
        };
        f.analyze()?;
        Ok(f)
    }

    pub fn words(&self) -> &[Vec<FrontEvent>] {
        &self.words
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    pub fn component_count(&self) -> usize {
        self.orientations.len()
    }

    /// Same diagram with the orientation of one component reversed.
    pub fn reverse_component(&self, component: usize) -> Result<FrontDiagram, LegendrianError> {
        if component >= self.orientations.len() {
            return Err(LegendrianError::ComponentOutOfRange {
                component,
                count: self.orientations.len(),
            });
        }
        let mut orientations = self.orientations.clone();
        orientations[component] = orientations[component].reversed();
        FrontDiagram::new(self.words.clone(), orientations)
    }

    fn analyze(&self) -> Result<Analysis, LegendrianError> {
        let mut arcs = 0usize;
        let mut parent: Vec<usize> = Vec::new();
        let mut cusps: Vec<Cusp> = Vec::new();
        let mut crossings: Vec<Crossing> = Vec::new();

        fn find(parent: &mut [usize], mut a: usize) -> usize {
            while parent[a] != a {
                parent[a] = parent[parent[a]];
                a = parent[a];
            }
            a
        }
        fn union(parent: &mut [usize], a: usize, b: usize) {
            let ra = find(parent, a);
            let rb = find(parent, b);
            if ra != rb {
                let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
                parent[hi] = lo;
            }
        }

        for (w, word) in self.words.iter().enumerate() {
            let mut strands: Vec<usize> = Vec::new();
            for (e, event) in word.iter().enumerate() {
                match *event {
                    FrontEvent::Left(i) => {
                        if i > strands.len() {
                            return Err(LegendrianError::EventOutOfRange {
                                word: w,
                                event: e,
                                position: i,
                                strands: strands.len(),
                            });
                        }
                        let upper = arcs;
                        let lower = arcs + 1;
                        arcs += 2;
                        parent.push(upper);
                        parent.push(lower);
                        strands.insert(i, upper);
                        strands.insert(i + 1, lower);
                        union(&mut parent, upper, lower);
                        cusps.push(Cusp {
                            is_left: true,
                            upper,
                            lower,
                        });
                    }
                    FrontEvent::Right(i) => {
                        if i + 2 > strands.len() {
                            return Err(LegendrianError::EventOutOfRange {
                                word: w,
                                event: e,
                                position: i,
                                strands: strands.len(),
                            });
                        }
                        let upper = strands[i];
                        let lower = strands[i + 1];
                        union(&mut parent, upper, lower);
                        cusps.push(Cusp {
                            is_left: false,
                            upper,
                            lower,
                        });
                        strands.remove(i + 1);
                        strands.remove(i);
                    }
                    FrontEvent::Cross(i) => {
                        if i + 2 > strands.len() {
                            return Err(LegendrianError::EventOutOfRange {
                                word: w,
                                event: e,
                                position: i,
                                strands: strands.len(),
                            });
                        }
                        crossings.push(Crossing {
                            over: strands[i],
                            under: strands[i + 1],
                        });
                        strands.swap(i, i + 1);
                    }
                }
            }
            if !strands.is_empty() {
                return Err(LegendrianError::UnclosedStrands {
                    word: w,
                    remaining: strands.len(),
                });
            }
        }

        // Canonical component numbering by earliest-born arc.
        let mut component_of_root: Vec<Option<usize>> = vec![None; arcs];
        let mut first_arc: Vec<usize> = Vec::new();
        let mut component: Vec<usize> = vec![0; arcs];
        for a in 0..arcs {
            let r = find(&mut parent, a);
            let c = match component_of_root[r] {
                Some(c) => c,
                None => {
                    let c = first_arc.len();
                    component_of_root[r] = Some(c);
                    first_arc.push(a);
                    c
                }
            };
            component[a] = c;
        }
        let components = first_arc.len();
        if self.orientations.len() != components {
            return Err(LegendrianError::OrientationCount {
                components,
                orientations: self.orientations.len(),
            });
        }

        // Travel directions: every cusp joins two arcs traversed in opposite
        // directions. The cusp graph on the arcs of one component is a single
        // even cycle, so the 2-coloring seeded by the orientation choice is
        // always consistent.
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); arcs];
        for cusp in &cusps {
            adjacency[cusp.upper].push(cusp.lower);
            adjacency[cusp.lower].push(cusp.upper);
        }
        let mut rightward: Vec<Option<bool>> = vec![None; arcs];
        for c in 0..components {
            let seed = first_arc[c];
            rightward[seed] = Some(self.orientations[c] == Orientation::Plus);
            let mut queue = vec![seed];
            while let Some(a) = queue.pop() {
                let dir = rightward[a].unwrap();
                for &b in &adjacency[a] {
                    match rightward[b] {
                        None => {
                            rightward[b] = Some(!dir);
                            queue.push(b);
                        }
                        Some(d) => debug_assert_ne!(d, dir, "cusp cycle parity broken"),
                    }
                }
            }
        }
        let rightward: Vec<bool> = rightward.into_iter().map(|d| d.unwrap()).collect();

        Ok(Analysis {
            components,
            component,
            rightward,
            cusps,
            crossings,
        })
    }
}

#[derive(Debug, Clone, Copy)]
struct Cusp {
    is_left: bool,
    upper: usize,
    lower: usize,
}

#[derive(Debug, Clone, Copy)]
struct Crossing {
    over: usize,
    under: usize,
}

struct Analysis {
    components: usize,
    component: Vec<usize>,
    rightward: Vec<bool>,
    cusps: Vec<Cusp>,
    crossings: Vec<Crossing>,
}

impl Analysis {
    /// Sign of a front crossing: the tangent of the over strand is (1,−1) or
    /// (−1,1) (it descends), the under strand's is (1,1) or (−1,−1), each
    /// according to travel direction; the sign is det(over, under).
    fn crossing_sign(&self, x: &Crossing) -> i64 {
        let o: (i64, i64) = if self.rightward[x.over] { (1, -1) } else { (-1, 1) };
        let u: (i64, i64) = if self.rightward[x.under] { (1, 1) } else { (-1, -1) };
        (o.0 * u.1 - u.0 * o.1).signum()
    }

    /// A cusp is traversed downward exactly when its upper strand travels
    /// toward the cusp point: leftward at a left cusp, rightward at a right
    /// cusp.
    fn cusp_is_down(&self, c: &Cusp) -> bool {
        if c.is_left {
            !self.rightward[c.upper]
        } else {
            self.rightward[c.upper]
        }
    }
}

/// Classical invariants of one oriented component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub rot: i64,
    pub writhe: i64,
    pub crossings: usize,
    pub left_cusps: usize,
    pub right_cusps: usize,
    pub up_cusps: usize,
    pub down_cusps: usize,
}

pub fn classical_invariants(
    f: &FrontDiagram,
    component: usize,
) -> Result<ClassicalInvariants, LegendrianError> {
    let analysis = f.analyze()?;
    if component >= analysis.components {
        return Err(LegendrianError::ComponentOutOfRange {
            component,
            count: analysis.components,
        });
    }
    let mut inv = ClassicalInvariants {
        tb: 0,
        rot: 0,
        writhe: 0,
        crossings: 0,
        left_cusps: 0,
        right_cusps: 0,
        up_cusps: 0,
        down_cusps: 0,
    };
    for x in &analysis.crossings {
        if analysis.component[x.over] == component && analysis.component[x.under] == component {
            inv.crossings += 1;
            inv.writhe += analysis.crossing_sign(x);
        }
    }
    for c in &analysis.cusps {
        if analysis.component[c.upper] != component {
            continue;
        }
        if c.is_left {
            inv.left_cusps += 1;
        } else {
            inv.right_cusps += 1;
        }
        if analysis.cusp_is_down(c) {
            inv.down_cusps += 1;
        } else {
            inv.up_cusps += 1;
        }
    }
    inv.tb = inv.writhe - inv.right_cusps as i64;
    debug_assert_eq!((inv.down_cusps + inv.up_cusps) % 2, 0);
    inv.rot = (inv.down_cusps as i64 - inv.up_cusps as i64) / 2;
    Ok(inv)
}

/// One record per crossing, in event order: the components of the over and
/// under strands and the crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingInfo {
    pub over_component: usize,
    pub under_component: usize,
    pub sign: i64,
}

pub fn crossing_report(f: &FrontDiagram) -> Result<Vec<CrossingInfo>, LegendrianError> {
    let analysis = f.analyze()?;
    Ok(analysis
        .crossings
        .iter()
        .map(|x| CrossingInfo {
            over_component: analysis.component[x.over],
            under_component: analysis.component[x.under],
            sign: analysis.crossing_sign(x),
        })
        .collect())
}

/// The trace of the Stein domain presented by the front: every component is
/// attached with framing `tb − 1`, and off-diagonal entries are the linking
/// numbers (half the signed count of inter-component crossings).
pub fn stein_trace(f: &FrontDiagram) -> Result<LinkTrace, LegendrianError> {
    let analysis = f.analyze()?;
    let n = analysis.components;
    let mut linking = IntMatrix::zero(n, n);
    let mut inter = vec![vec![0i64; n]; n];
    for x in &analysis.crossings {
        let co = analysis.component[x.over];
        let cu = analysis.component[x.under];
        if co != cu {
            let s = analysis.crossing_sign(x);
            inter[co][cu] += s;
            inter[cu][co] += s;
        }
    }
    for i in 0..n {
        let inv = classical_invariants(f, i)?;
        linking.set(i, i, BigInt::from(inv.tb - 1));
        for j in 0..n {
            if i != j {
                debug_assert_eq!(inter[i][j] % 2, 0, "closed components link integrally");
                linking.set(i, j, BigInt::from(inter[i][j] / 2));
            }
        }
    }
    let labels = (1..=n).map(|i| format!("K{i}")).collect();
    Ok(LinkTrace::from_linking(linking, Some(labels))?)
}

/// First Chern class of the induced contact/Stein structure in handle
/// cochain coordinates: the vector of rotation numbers.
pub fn chern_class(f: &FrontDiagram) -> Result<IntVector, LegendrianError> {
    let n = f.analyze()?.components;
    (0..n)
        .map(|i| Ok(BigInt::from(classical_invariants(f, i)?.rot)))
        .collect()
}

/// Outcome of pushing a second-cohomology class to the boundary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NontorsionOutcome {
    /// The free part of the boundary restriction vanishes.
    Torsion,
    /// Restriction is `d · v1` with `d > 0` and `v1` primitive, written in
    /// the canonical free coordinates of `H_1(∂X)`.
    NonTorsion { d: BigInt, v1: IntVector },
}

/// Push `PD(c1) = Σ c1_i f_i` through `∂` into `H_1(∂X)` and split off the
/// divisibility of its free part.
pub fn nontorsion_test(
    c1: &IntVector,
    trace: &LinkTrace,
) -> Result<NontorsionOutcome, LegendrianError> {
    let boundary = boundary_homology(trace)?;
    let u = boundary.free_projection().mul_vec(c1);
    let mut d = BigInt::zero();
    for e in &u {
        d = d.gcd(e);
    }
    if d.is_zero() {
        return Ok(NontorsionOutcome::Torsion);
    }
    let v1 = u.iter().map(|e| e / &d).collect();
    Ok(NontorsionOutcome::NonTorsion { d, v1 })
}

/// Genus lower bound for the family member `n` pulled back through a
/// unimodular identification `A` of second homology, following the displayed
/// adjunction chain: `1 + 2n · max(|A_11|, |A_21|)`.
pub fn adjunction_lower_bound(
    c1: &IntVector,
    a: &IntMatrix,
    n: i64,
) -> Result<BigInt, LegendrianError> {
    if !a.is_unimodular() {
        return Err(LegendrianError::NotUnimodular);
    }
    let expected: IntVector = vec![BigInt::from(2 * n), BigInt::zero()];
    if *c1 != expected {
        return Err(LegendrianError::ChernMismatch {
            n,
            got: c1.clone(),
        });
    }
    let m = a.get(0, 0).abs().max(a.get(1, 0).abs());
    Ok(BigInt::from(1) + BigInt::from(2 * n) * m)
}

/// The bound of [`adjunction_lower_bound`] minimized over all unimodular
/// identifications: a nonzero determinant forces `max(|A_11|, |A_21|) ≥ 1`.
pub fn universal_adjunction_bound(n: i64) -> BigInt {
    BigInt::from(1 + 2 * n)
}

/// Genus upper bounds from the explicit surfaces bounded by the two family
/// components: `(2n + 3, 7)`.
pub fn xn_genus_upper_bounds(n: i64) -> (i64, i64) {
    (2 * n + 3, 7)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistinguishVerdict {
    Distinct,
    Inconclusive,
}

/// Comparison of two family boundaries through the genus function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistinguishReport {
    /// Input indices, oriented so that `r < m`.
    pub r: i64,
    pub m: i64,
    pub n_r: i64,
    pub n_m: i64,
    /// Best genus upper bound available on the `r` side: `max(2·n_r + 3, 7)`.
    pub genus_upper: i64,
    /// Universal genus lower bound forced on the `m` side: `1 + 2·n_m`.
    pub genus_lower: i64,
    pub verdict: DistinguishVerdict,
}

/// Distinguish the boundaries of family members indexed by `r ≠ m` along the
/// subsequence `n_r = 5·2^{r−1} − 3`: a homeomorphism would transport a genus
/// upper bound below the adjunction lower bound.
pub fn distinguish_boundaries(r: i64, m: i64) -> Result<DistinguishReport, LegendrianError> {
    if r == m {
        return Err(LegendrianError::EqualIndices);
    }
    let (r, m) = if r < m { (r, m) } else { (m, r) };
    assert!(r >= 1, "family indices start at 1");
    let n_r = 5 * (1i64 << (r - 1)) - 3;
    let n_m = 5 * (1i64 << (m - 1)) - 3;
    let (g1, g2) = xn_genus_upper_bounds(n_r);
    let genus_upper = g1.max(g2);
    let genus_lower = 1 + 2 * n_m;
    let verdict = if genus_upper < genus_lower {
        DistinguishVerdict::Distinct
    } else {
        DistinguishVerdict::Inconclusive
    };
    Ok(DistinguishReport {
        r,
        m,
        n_r,
        n_m,
        genus_upper,
        genus_lower,
        verdict,
    })
}

/// The front of the `n`-th Stein family member: a two-component split front
/// whose first component has `2n+3` crossings, `2n+2` right cusps, `tb = 1`
/// and `rot = 2n`, and whose second component is a right trefoil with
/// `tb = 1`, `rot = 0`. Both Stein framings are therefore `0` and the
/// linking matrix vanishes.
pub fn xn_front(n: i64) -> FrontDiagram {
    assert!(n >= 1, "family starts at n = 1");
    let mut word1 = vec![FrontEvent::Left(0), FrontEvent::Left(2)];
    for _ in 0..(2 * n + 3) {
        word1.push(FrontEvent::Cross(1));
    }
    for _ in 0..(2 * n) {
        word1.push(FrontEvent::Left(1));
        word1.push(FrontEvent::Right(0));
    }
    word1.push(FrontEvent::Right(0));
    word1.push(FrontEvent::Right(0));
    let word2 = vec![
        FrontEvent::Left(0),
        FrontEvent::Left(2),
        FrontEvent::Cross(1),
        FrontEvent::Cross(1),
        FrontEvent::Cross(1),
        FrontEvent::Right(0),
        FrontEvent::Right(0),
    ];
    FrontDiagram::new(vec![word1, word2], vec![Orientation::Plus, Orientation::Plus])
        .expect("family front is valid by construction")
}

/// Serialize to the text format: a header line `orientations:` followed by
/// space-separated `+`/`-` signs (one per component, discovery order), then
/// one event word per line with comma-separated events.
pub fn serialize_front(f: &FrontDiagram) -> String {
    let mut out = String::from("orientations:");
    for o in f.orientations() {
        out.push(' ');
        out.push(match o {
            Orientation::Plus => '+',
            Orientation::Minus => '-',
        });
    }
    out.push('\n');
    for word in f.words() {
        let tokens: Vec<String> = word.iter().map(|e| e.to_string()).collect();
        out.push_str(&tokens.join(", "));
        out.push('\n');
    }
    out
}

/// Parse the text format accepted by [`serialize_front`]. Blank lines and
/// lines starting with `#` are ignored. The orientation header may also
/// follow the words.
pub fn parse_front(text: &str) -> Result<FrontDiagram, LegendrianError> {
    let mut orientations: Option<Vec<Orientation>> = None;
    let mut words: Vec<Vec<FrontEvent>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("orientations:") {
            if orientations.is_some() {
                return Err(LegendrianError::Parse {
                    line: idx + 1,
                    message: "duplicate orientations header".into(),
                });
            }
            let mut signs = Vec::new();
            for tok in rest.split_whitespace() {
                signs.push(match tok {
                    "+" => Orientation::Plus,
                    "-" => Orientation::Minus,
                    other => {
                        return Err(LegendrianError::Parse {
                            line: idx + 1,
                            message: format!("unknown orientation sign {other:?}"),
                        })
                    }
                });
            }
            orientations = Some(signs);
            continue;
        }
        let mut word = Vec::new();
        for tok in line.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(LegendrianError::Parse {
                    line: idx + 1,
                    message: "empty event token".into(),
                });
            }
            let (kind, index) = tok.split_at(1);
            let position: usize = index.parse().map_err(|_| LegendrianError::Parse {
                line: idx + 1,
                message: format!("bad event index in {tok:?}"),
            })?;
            word.push(match kind {
                "L" => FrontEvent::Left(position),
                "R" => FrontEvent::Right(position),
                "X" => FrontEvent::Cross(position),
                other => {
                    return Err(LegendrianError::Parse {
                        line: idx + 1,
                        message: format!("unknown event kind {other:?}"),
                    })
                }
            });
        }
        words.push(word);
    }
    let orientations = orientations.ok_or(LegendrianError::Parse {
        line: 0,
        message: "missing orientations header".into(),
    })?;
    FrontDiagram::new(words, orientations)
}
