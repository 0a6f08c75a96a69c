//! Vertex colorings, monochromatic components, compatibility with a witness
//! structure, and the recoloring rules.

mod recolor;

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{is_cactus, Graph, Vertex, VertexSet, WitnessStructure};

pub use recolor::{recolor_rule_1, recolor_rule_2, refine};

pub type Color = u8;

/// Colors a fresh coloring may use. 4 and 5 are recoloring marks.
pub const BASE_COLORS: [Color; 3] = [1, 2, 3];
pub const EXCLUDED: Color = 4;
pub const BRIDGING: Color = 5;

/// A total map from vertices to colors `1..=5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    pub fn uniform(n: usize, c: Color) -> Coloring {
        Coloring(vec![c; n])
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> Color {
        self.0[v]
    }

    #[inline]
    pub fn set(&mut self, v: Vertex, c: Color) {
        self.0[v] = c;
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_base(&self, v: Vertex) -> bool {
        self.0[v] <= 3
    }
}

/// Each vertex independently uniform over `{1, 2, 3}`.
pub fn random_coloring(g: &Graph, seed: u64) -> Coloring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Coloring((0..g.n()).map(|_| rng.gen_range(1..=3)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoComponents {
    /// Ordered by smallest vertex.
    pub components: Vec<(Color, VertexSet)>,
    pub for_colors: Vec<Color>,
    /// Component index of each vertex, if its color passes the filter.
    pub component_of: Vec<Option<usize>>,
}

impl MonoComponents {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// Maximal connected single-colored vertex sets, for colors in `colors`.
pub fn monochromatic_components(g: &Graph, f: &Coloring, colors: &[Color]) -> MonoComponents {
    let n = g.n();
    let mut component_of = vec![None; n];
    let mut components = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        let c = f.get(s);
        if component_of[s].is_some() || !colors.contains(&c) {
            continue;
        }
        let id = components.len();
        let mut set = VertexSet::new(n);
        component_of[s] = Some(id);
        set.insert(s);
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if component_of[w].is_none() && f.get(w) == c {
                    component_of[w] = Some(id);
                    set.insert(w);
                    queue.push_back(w);
                }
            }
        }
        components.push((c, set));
    }
    MonoComponents {
        components,
        for_colors: colors.to_vec(),
        component_of,
    }
}

/// Whether `f` is compatible with the witness structure `w`: parts are
/// monochromatic, adjacent big parts get different colors, and along every
/// quotient cable path of singletons joining two distinct big parts, each end
/// singleton differs in color from the big part it touches.
pub fn is_compatible(_g: &Graph, w: &WitnessStructure, f: &Coloring) -> Result<bool> {
    if !is_cactus(&w.quotient)? {
        return Err(Error::QuotientNotCactus);
    }
    let q = &w.quotient;
    let mut part_color = Vec::with_capacity(w.parts.len());
    for p in &w.parts {
        let c = f.get(p[0]);
        if p.iter().any(|&v| f.get(v) != c) {
            return Ok(false);
        }
        part_color.push(c);
    }
    debug_assert_eq!(q.n(), w.parts.len());
    for b in w.big_parts() {
        for &s in q.neighbors(b) {
            if w.is_big(s) {
                if part_color[s] == part_color[b] {
                    return Ok(false);
                }
                continue;
            }
            // Follow singleton degree-2 quotient vertices away from b.
            let mut prev = b;
            let mut cur = s;
            let mut last_singleton = s;
            let end = loop {
                if w.is_big(cur) {
                    break Some(cur);
                }
                if q.degree(cur) != 2 {
                    break None;
                }
                last_singleton = cur;
                let next = q.neighbors(cur).iter().copied().find(|&x| x != prev);
                match next {
                    Some(x) => {
                        prev = cur;
                        cur = x;
                    }
                    None => break None,
                }
                if cur == s {
                    break None;
                }
            };
            if let Some(b2) = end {
                if b2 != b
                    && (part_color[s] == part_color[b]
                        || part_color[last_singleton] == part_color[b2])
                {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// A proper coloring of a cactus with colors `{1, 2, 3}`, obtained greedily
/// along a degeneracy order (every cactus has a vertex of degree at most 2).
pub fn proper_three_coloring(g: &Graph) -> Option<Coloring> {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (deg[v], v))?;
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                deg[w] -= 1;
            }
        }
    }
    let mut color = vec![0 as Color; n];
    for &v in order.iter().rev() {
        let c = BASE_COLORS
            .into_iter()
            .find(|&c| g.neighbors(v).iter().all(|&w| color[w] != c))?;
        color[v] = c;
    }
    Some(Coloring(color))
}

/// Pulls a coloring of the quotient back to `G` through `part_of`.
pub fn pull_back(w: &WitnessStructure, quotient_coloring: &Coloring) -> Coloring {
    Coloring(
        w.part_of
            .iter()
            .map(|&p| quotient_coloring.get(p))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::graph::{contract_edges, Edge};

    #[test]
    fn random_is_deterministic() {
        let g = cycle(50);
        assert_eq!(random_coloring(&g, 9), random_coloring(&g, 9));
        assert!(random_coloring(&g, 9).0.iter().all(|c| (1..=3).contains(c)));
        assert_eq!(random_coloring(&Graph::empty(1), 3).len(), 1);
    }

    #[test]
    fn mono_components_of_path() {
        let g = path(3);
        let m = monochromatic_components(&g, &Coloring(vec![1, 1, 2]), &BASE_COLORS);
        let got: Vec<_> = m.components.iter().map(|(c, s)| (*c, s.to_vec())).collect();
        assert_eq!(got, vec![(1, vec![0, 1]), (2, vec![2])]);
        let m = monochromatic_components(&g, &Coloring(vec![4, 1, 5]), &BASE_COLORS);
        assert_eq!(m.len(), 1);
        assert_eq!(m.component_of, vec![None, Some(0), None]);
    }

    #[test]
    fn compatibility_basics() {
        let g = complete(4);
        let (_, w) = contract_edges(&g, &[]).unwrap();
        assert_eq!(is_compatible(&g, &w, &Coloring::uniform(4, 1)), Err(Error::QuotientNotCactus));

        let g = cycle(4);
        let (_, w) = contract_edges(&g, &[]).unwrap();
        assert!(is_compatible(&g, &w, &Coloring::uniform(4, 1)).unwrap());
        let (_, w) = contract_edges(&g, &[Edge(0, 1), Edge(2, 3)]).unwrap();
        assert!(!is_compatible(&g, &w, &Coloring::uniform(4, 1)).unwrap());
        assert!(is_compatible(&g, &w, &Coloring(vec![1, 1, 2, 2])).unwrap());
    }

    #[test]
    fn cable_path_end_condition() {
        // C6 with big parts {0,1} and {3,4}; singletons 2 and 5 sit between.
        let g = cycle(6);
        let (_, w) = contract_edges(&g, &[Edge(0, 1), Edge(3, 4)]).unwrap();
        assert!(is_compatible(&g, &w, &Coloring(vec![1, 1, 3, 2, 2, 3])).unwrap());
        assert!(!is_compatible(&g, &w, &Coloring(vec![1, 1, 1, 2, 2, 3])).unwrap());
    }

    #[test]
    fn pulled_back_proper_coloring_is_compatible() {
        let g = complete(4);
        let (q, w) = contract_edges(&g, &[Edge(0, 1)]).unwrap();
        let qc = proper_three_coloring(&q).unwrap();
        assert!(is_compatible(&g, &w, &pull_back(&w, &qc)).unwrap());
    }
}
