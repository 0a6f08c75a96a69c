use super::{monochromatic_components, Coloring, MonoComponents, BASE_COLORS, BRIDGING, EXCLUDED};
use crate::graph::{components_after_removal, induced_path_order, Graph, VertexSet};

/// Paints every base-colored vertex of `set` with `mark`. Colors 4 and 5 are
/// final and left alone.
fn paint(out: &mut Coloring, set: &VertexSet, mark: u8) -> bool {
    let mut changed = false;
    for v in set.iter() {
        if out.is_base(v) {
            out.set(v, mark);
            changed = true;
        }
    }
    changed
}

/// For each monochromatic component `X`, every component of `g - X` that is a
/// single vertex or a cable path of `g` is recolored 4.
///
/// All decisions are taken against the input coloring, so the result does not
/// depend on the order in which components are visited.
pub fn recolor_rule_1(g: &Graph, f: &Coloring, comps: &MonoComponents) -> (Coloring, bool) {
    let mut out = f.clone();
    let mut changed = false;
    for (_, x) in &comps.components {
        for c in components_after_removal(g, x) {
            if c.len() == 1 || induced_path_order(g, &c).is_some() {
                changed |= paint(&mut out, &c, EXCLUDED);
            }
        }
    }
    (out, changed)
}

/// Whether component `p` of `g - (Y ∪ Z)` bridges `y` and `z` as a single
/// vertex or as a cable path running from `y` to `z`.
fn bridges(g: &Graph, p: &VertexSet, y: &VertexSet, z: &VertexSet) -> bool {
    let outside = |v| -> VertexSet {
        VertexSet::from_iter(
            g.n(),
            g.neighbors(v).iter().copied().filter(|&w| !p.contains(w)),
        )
    };
    if p.len() == 1 {
        let v = p.first().unwrap();
        let nb = outside(v);
        let yz = y.union(z);
        return nb.is_subset(&yz) && !nb.is_disjoint(y) && !nb.is_disjoint(z);
    }
    let Some(order) = induced_path_order(g, p) else {
        return false;
    };
    let first = outside(order[0]);
    let last = outside(*order.last().unwrap());
    if first.is_empty() || last.is_empty() {
        return false;
    }
    (first.is_subset(y) && last.is_subset(z)) || (first.is_subset(z) && last.is_subset(y))
}

/// For each pair of distinct monochromatic components `Y`, `Z`, every
/// component of `g - (Y ∪ Z)` that is a single vertex touching both, or a
/// cable path leaving `Y` at one end and `Z` at the other, is recolored 5.
pub fn recolor_rule_2(g: &Graph, f: &Coloring, comps: &MonoComponents) -> (Coloring, bool) {
    let mut out = f.clone();
    let mut changed = false;
    let k = comps.components.len();
    for i in 0..k {
        for j in i + 1..k {
            let (y, z) = (&comps.components[i].1, &comps.components[j].1);
            let removed = y.union(z);
            for p in components_after_removal(g, &removed) {
                if bridges(g, &p, y, z) {
                    changed |= paint(&mut out, &p, BRIDGING);
                }
            }
        }
    }
    (out, changed)
}

/// Rule 1 to fixpoint, then Rule 2 to fixpoint, repeated until Rule 2 no
/// longer changes anything.
pub fn refine(g: &Graph, f: &Coloring) -> Coloring {
    let mut cur = f.clone();
    let mut rounds = 0;
    loop {
        rounds += 1;
        debug_assert!(rounds <= g.n() + 1, "refine failed to converge");
        loop {
            let comps = monochromatic_components(g, &cur, &BASE_COLORS);
            let (next, changed) = recolor_rule_1(g, &cur, &comps);
            cur = next;
            if !changed {
                break;
            }
        }
        let mut any = false;
        loop {
            let comps = monochromatic_components(g, &cur, &BASE_COLORS);
            let (next, changed) = recolor_rule_2(g, &cur, &comps);
            cur = next;
            if !changed {
                break;
            }
            any = true;
        }
        if !any {
            return cur;
        }
    }
}
