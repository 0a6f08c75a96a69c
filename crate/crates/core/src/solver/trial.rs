use crate::coloring::{monochromatic_components, refine, Coloring, MonoComponents, BASE_COLORS};
use crate::core_extract::{hat_closure, mark, min_connected_core, CoreInstance};
use crate::graph::{components_within, is_cactus, Edge, Graph, VertexSet};

use super::ContractionSolution;

/// View of the current big parts as monochromatic components, for marking.
fn as_components(n: usize, parts: &[VertexSet]) -> MonoComponents {
    let mut component_of = vec![None; n];
    for (i, p) in parts.iter().enumerate() {
        for v in p.iter() {
            component_of[v] = Some(i);
        }
    }
    MonoComponents {
        components: parts.iter().map(|p| (0, p.clone())).collect(),
        for_colors: BASE_COLORS.to_vec(),
        component_of,
    }
}

fn normalize(parts: &mut Vec<VertexSet>) {
    parts.retain(|p| p.len() >= 2);
    parts.sort_by(|a, b| a.lex_cmp(b));
}

/// One colored trial on a 2-connected graph: refine the coloring, shrink every
/// big monochromatic component to a minimum core of its closure until nothing
/// changes, then contract spanning trees of what is left.
pub fn two_connected_trial(g: &Graph, k: usize, f: &Coloring) -> Option<ContractionSolution> {
    let n = g.n();
    let f = refine(g, f);
    let mono = monochromatic_components(g, &f, &BASE_COLORS);
    let mut parts: Vec<VertexSet> = mono.components.into_iter().map(|(_, s)| s).collect();
    normalize(&mut parts);

    let mut passes = 0;
    loop {
        passes += 1;
        if passes > n {
            log::warn!("replacement loop did not settle after {n} passes; abandoning trial");
            return None;
        }
        let before = parts.clone();
        let mut i = 0;
        while i < parts.len() {
            let x = parts[i].clone();
            let hat = hat_closure(g, &x);
            let marked = mark(g, &f, &as_components(n, &parts), &x);
            let (h, map) = g.induced(&hat);
            let mut index = vec![usize::MAX; n];
            for (j, &v) in map.iter().enumerate() {
                index[v] = j;
            }
            let inst = CoreInstance {
                required: VertexSet::from_iter(map.len(), marked.iter().map(|v| index[v])),
                h,
                budget: k + 1,
            };
            let core = min_connected_core(&inst)?;
            let z = VertexSet::from_iter(n, core.iter().map(|j| map[j]));
            if z == x {
                i += 1;
                continue;
            }
            // Replace X by Z; every other vertex of X̂ becomes a singleton,
            // which may split other parts.
            let freed = hat.clone();
            let mut next = Vec::with_capacity(parts.len() + 1);
            for (j, p) in parts.iter().enumerate() {
                if j == i || p.is_disjoint(&freed) {
                    if j != i {
                        next.push(p.clone());
                    }
                    continue;
                }
                next.extend(components_within(g, &p.difference(&freed)));
            }
            next.push(z.clone());
            normalize(&mut next);
            parts = next;
            // Resume after Z in the new order.
            i = parts.iter().position(|p| *p == z).map_or(0, |j| j + 1);
        }
        if parts == before {
            break;
        }
    }

    let mut forest: Vec<Edge> = Vec::new();
    for p in &parts {
        forest.extend(g.spanning_tree_of(p));
    }
    if forest.len() > k {
        return None;
    }
    let sol = ContractionSolution::new(g, &forest).ok()?;
    is_cactus(&sol.quotient).ok()?.then_some(sol)
}
