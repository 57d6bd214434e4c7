use std::collections::BTreeSet;

use super::lists::{class_set, Characterizations};
use super::report::{Counterexample, TheoremId, VerificationReport};
use super::universe::Universe;
use crate::error::{Error, Result};
use crate::families::{cycle, extremal_diameter_graph, omega_labeled_count, omega_members, path};
use crate::graph::{canonical_form, diameter, graph6_encode, Diameter, Graph};
use crate::solver::{
    adjacency_dimension, is_adjacency_resolving, lower_bound_population, lower_bound_twins,
    path_cycle_dimension_formula, resolving_set_from_diametral_path, upper_bound_diameter, SolveMode,
};

fn member(set: &BTreeSet<Vec<u8>>, g: &Graph) -> Result<bool> {
    Ok(set.contains(&canonical_form(g)?))
}

fn dim2(g: &Graph) -> Result<usize> {
    Ok(adjacency_dimension(g, SolveMode::Pruned)?.value)
}

fn diameter_bound_value(n: usize, d: usize) -> usize {
    n - d - 1 + (2 * d + 4) / 5
}

/// dim2 = 1 exactly for the five listed graphs; dim2 = n - 1 exactly for
/// `K_n` and its complement (orders >= 2).
pub fn check_extremes(u: &Universe, c: &Characterizations) -> Result<VerificationReport> {
    let ones = class_set(&c.dim_one)?;
    let tops = class_set(&c.dim_n_minus_one)?;
    let mut cx = Vec::new();
    for a in &u.entries {
        let n = a.order();
        let value = a.dim2.value;
        let listed = member(&ones, &a.graph)?;
        if listed != (value == 1) {
            let expected = if listed { "dim2 = 1" } else { "dim2 != 1" };
            cx.push(Counterexample::new(&a.graph6, expected, format!("dim2 = {value}")));
        }
        if n >= 2 {
            let listed = member(&tops, &a.graph)?;
            if listed != (value == n - 1) {
                let expected = if listed { format!("dim2 = {}", n - 1) } else { format!("dim2 != {}", n - 1) };
                cx.push(Counterexample::new(&a.graph6, expected, format!("dim2 = {value}")));
            }
        }
    }
    let per_value = |v: usize| u.entries.iter().filter(|a| a.dim2.value == v).count();
    let findings = vec![format!("{} classes with dim2 = 1", per_value(1))];
    Ok(VerificationReport::new(TheoremId::Extremes, u.scope(), u.entries.len(), findings, cx))
}

/// Diameter-2 equality, `dim <= dim2`, complement invariance over the
/// universe, and the path/cycle formula for orders `4..=path_max`.
pub fn check_adjacency_results(u: &Universe, path_max: usize) -> Result<VerificationReport> {
    let mut cx = Vec::new();
    let mut diam_two = 0;
    for a in &u.entries {
        let value = a.dim2.value;
        if let Some(dim) = a.dim {
            if dim > value {
                cx.push(Counterexample::new(&a.graph6, format!("dim <= dim2 = {value}"), format!("dim = {dim}")));
            }
            if a.diameter == Diameter::Finite(2) {
                diam_two += 1;
                if dim != value {
                    cx.push(Counterexample::new(&a.graph6, format!("dim = dim2 = {value}"), format!("dim = {dim}")));
                }
            }
        }
        if a.complement_dim2 != value {
            cx.push(Counterexample::new(
                &a.graph6,
                format!("complement dim2 = {value}"),
                format!("complement dim2 = {}", a.complement_dim2),
            ));
        }
    }
    let mut formula_values = Vec::new();
    for n in 4..=path_max {
        let expected = path_cycle_dimension_formula(n)?;
        formula_values.push(expected.to_string());
        for g in [path(n)?, cycle(n)?] {
            let value = dim2(&g)?;
            if value != expected {
                cx.push(Counterexample::new(graph6_encode(&g), format!("dim2 = {expected}"), format!("dim2 = {value}")));
            }
        }
    }
    let findings = vec![
        format!("{diam_two} connected classes of diameter 2"),
        format!("paths and cycles of order 4..={path_max}: dim2 = ({})", formula_values.join(",")),
    ];
    let scope = format!("{}; paths and cycles of order 4..={path_max}", u.scope());
    let checked = u.entries.len() + 2 * path_max.saturating_sub(3);
    Ok(VerificationReport::new(TheoremId::AdjacencyResults, scope, checked, findings, cx))
}

/// For each twin pair `{u, v}`, `V \ {u, v}` does not resolve, the computed
/// basis meets the pair, and the twin lower bound holds.
pub fn check_twins(u: &Universe) -> Result<VerificationReport> {
    let mut cx = Vec::new();
    let mut pairs = 0;
    for a in &u.entries {
        let g = &a.graph;
        let n = g.order();
        let partition = crate::graph::twin_partition(g);
        let basis = crate::graph::mask_of(&a.dim2_naive.basis);
        for (x, y) in partition.pairs() {
            pairs += 1;
            let rest: Vec<usize> = (0..n).filter(|&w| w != x && w != y).collect();
            // with n = 2 the remaining set is empty, which never resolves
            if !rest.is_empty() && is_adjacency_resolving(g, &rest)? {
                cx.push(Counterexample::new(&a.graph6, format!("V - {{{x},{y}}} not resolving"), "resolving"));
            }
            if basis & (1 << x | 1 << y) == 0 {
                cx.push(Counterexample::new(
                    &a.graph6,
                    format!("basis meets {{{x},{y}}}"),
                    format!("basis {:?}", a.dim2_naive.basis),
                ));
            }
        }
        let lb = lower_bound_twins(g);
        if lb > a.dim2_naive.value {
            cx.push(Counterexample::new(
                &a.graph6,
                format!("twin bound {lb} <= dim2"),
                format!("dim2 = {}", a.dim2_naive.value),
            ));
        }
    }
    let findings = vec![format!("{pairs} twin pairs examined")];
    Ok(VerificationReport::new(TheoremId::Twins, u.scope(), u.entries.len(), findings, cx))
}

/// `dim2 <= n - D - 1 + floor((2D+4)/5)` for connected graphs, with the
/// diametral-path construction resolving within the same bound.
pub fn check_diameter_bound(u: &Universe) -> Result<VerificationReport> {
    let mut cx = Vec::new();
    let mut tight = 0;
    let mut checked = 0;
    for a in &u.entries {
        let g = &a.graph;
        if a.diameter == Diameter::Disconnected || g.order() < 2 {
            continue;
        }
        checked += 1;
        let bound = upper_bound_diameter(g)?;
        let value = a.dim2_naive.value;
        if value > bound {
            cx.push(Counterexample::new(&a.graph6, format!("dim2 <= {bound}"), format!("dim2 = {value}")));
        }
        tight += usize::from(value == bound);
        let witness = resolving_set_from_diametral_path(g)?;
        if !is_adjacency_resolving(g, &witness)? {
            cx.push(Counterexample::new(&a.graph6, "diametral-path set resolves", format!("{witness:?} does not")));
        }
        if witness.len() > bound {
            cx.push(Counterexample::new(
                &a.graph6,
                format!("diametral-path set size <= {bound}"),
                format!("size {}", witness.len()),
            ));
        }
    }
    let findings = vec![format!("bound attained by {tight} of {checked} connected classes")];
    let scope = format!("connected graphs among {}", u.scope());
    Ok(VerificationReport::new(TheoremId::DiameterBound, scope, checked, findings, cx))
}

/// Exact dimension of the extremal construction for each `D` in `diameters`
/// (each `≡ 0 or 2 mod 5`) and `D + 1 <= n <= n_max`.
pub fn check_extremal(diameters: &[usize], n_max: usize) -> Result<VerificationReport> {
    let mut cx = Vec::new();
    let mut findings = Vec::new();
    let mut checked = 0;
    for &d in diameters {
        if d < 5 || !matches!(d % 5, 0 | 2) {
            return Err(Error::InvalidParameters(format!("diameter {d} is not of the form 5k or 5k+2 with k >= 1")));
        }
        let mut values = Vec::new();
        for n in d + 1..=n_max {
            checked += 1;
            let g = extremal_diameter_graph(n, d)?;
            let g6 = graph6_encode(&g);
            let diam = diameter(&g)?;
            if diam != Diameter::Finite(d as u32) {
                cx.push(Counterexample::new(&g6, format!("diameter {d}"), format!("diameter {diam}")));
            }
            let value = dim2(&g)?;
            let expected = if n == d + 1 {
                path_cycle_dimension_formula(n)?
            } else {
                n - d + (2 * d - 4) / 5
            };
            let bound = diameter_bound_value(n, d);
            if value != expected {
                cx.push(Counterexample::new(&g6, format!("dim2 = {expected}"), format!("dim2 = {value}")));
            }
            if value != bound {
                cx.push(Counterexample::new(&g6, format!("dim2 = bound {bound}"), format!("dim2 = {value}")));
            }
            values.push(format!("n={n}:{value}"));
        }
        findings.push(format!("D={d}: {}", values.join(" ")));
    }
    let scope = format!("extremal construction, D in {diameters:?}, D+1 <= n <= {n_max}");
    Ok(VerificationReport::new(TheoremId::Extremal, scope, checked, findings, cx))
}

/// dim2 = n - 2 exactly on the listed families and their complements, orders `4..=max_n`.
pub fn check_n_minus_two(u: &Universe, c: &Characterizations) -> Result<VerificationReport> {
    let listed = class_set(&c.dim_n_minus_two)?;
    let mut cx = Vec::new();
    let mut checked = 0;
    let mut hits = Vec::new();
    for n in 4..=u.max_n {
        let mut count = 0;
        for a in u.of_order(n) {
            checked += 1;
            let value = a.dim2.value;
            let is_listed = member(&listed, &a.graph)?;
            count += usize::from(value == n - 2);
            if is_listed != (value == n - 2) {
                let expected = if is_listed { format!("dim2 = {}", n - 2) } else { format!("dim2 != {}", n - 2) };
                cx.push(Counterexample::new(&a.graph6, expected, format!("dim2 = {value}")));
            }
        }
        hits.push(format!("n={n}:{count}"));
    }
    let findings = vec![format!("classes with dim2 = n-2: {}", hits.join(" "))];
    let scope = format!("all graphs of order 4..={}", u.max_n);
    Ok(VerificationReport::new(TheoremId::NMinus2, scope, checked, findings, cx))
}

/// Population bound over the universe, and for each `k` in `k_list` that the
/// labelled family members have dimension `k` and cover every graph of order
/// `k + 2^k` with dimension `k`.
pub fn check_omega(u: &Universe, k_list: &[usize]) -> Result<VerificationReport> {
    let mut cx = Vec::new();
    let mut findings = Vec::new();
    let mut checked = 0;
    for a in &u.entries {
        checked += 1;
        let n = a.order();
        let value = a.dim2_naive.value;
        let lb = lower_bound_population(n);
        if n > value + (1 << value) || lb > value {
            cx.push(Counterexample::new(
                &a.graph6,
                format!("n <= dim2 + 2^dim2 and f(n) = {lb} <= dim2"),
                format!("dim2 = {value}"),
            ));
        }
    }
    for &k in k_list {
        let members = omega_members(k)?;
        let order = k + (1 << k);
        let landmarks: Vec<usize> = (0..k).collect();
        for g in &members {
            checked += 1;
            let value = dim2(g)?;
            if g.order() != order || value != k || !is_adjacency_resolving(g, &landmarks)? {
                cx.push(Counterexample::new(
                    graph6_encode(g),
                    format!("order {order}, dim2 = {k}, landmarks resolve"),
                    format!("order {}, dim2 = {value}", g.order()),
                ));
            }
        }
        let classes = class_set(&members)?;
        let mut matched = 0;
        if order <= u.max_n {
            for a in u.of_order(order).filter(|a| a.dim2.value == k) {
                matched += 1;
                if !member(&classes, &a.graph)? {
                    cx.push(Counterexample::new(&a.graph6, format!("isomorphic to a k={k} family member"), "no match"));
                }
            }
            findings.push(format!("k={k}: {matched} classes of order {order} have dim2 = {k}"));
        }
        findings.push(format!(
            "k={k}: {} labelled constructions (formula {}), {} isomorphism classes",
            members.len(),
            omega_labeled_count(k),
            classes.len()
        ));
        if members.len() as u128 != omega_labeled_count(k) {
            cx.push(Counterexample::new("-", format!("{} labelled members", omega_labeled_count(k)), members.len().to_string()));
        }
    }
    let scope = format!("{}; labelled family members for k in {k_list:?}", u.scope());
    Ok(VerificationReport::new(TheoremId::Omega, scope, checked, findings, cx))
}

/// Which graphs of each order `1..=6` have dimension exactly 2.
pub fn check_dim2_classification(u: &Universe, c: &Characterizations, max_order: usize) -> Result<VerificationReport> {
    let three = class_set(&c.dim_two_order_three)?;
    let four = class_set(&c.not_dim_two_order_four)?;
    let five = class_set(&c.not_dim_two_order_five)?;
    let six = class_set(&c.dim_two_order_six)?;
    let top = max_order.min(6).min(u.max_n);
    let mut cx = Vec::new();
    let mut checked = 0;
    let mut counts = Vec::new();
    for n in 1..=top {
        let mut count = 0;
        for a in u.of_order(n) {
            checked += 1;
            let value = a.dim2.value;
            count += usize::from(value == 2);
            let predicted = match n {
                1 | 2 => false,
                3 => member(&three, &a.graph)?,
                4 => !member(&four, &a.graph)?,
                5 => !member(&five, &a.graph)?,
                _ => member(&six, &a.graph)?,
            };
            if predicted != (value == 2) {
                let expected = if predicted { "dim2 = 2" } else { "dim2 != 2" };
                cx.push(Counterexample::new(&a.graph6, expected, format!("dim2 = {value}")));
            }
        }
        counts.push(format!("n={n}:{count}"));
    }
    let findings = vec![format!("classes with dim2 = 2: {}", counts.join(" "))];
    let scope = format!("all graphs of order 1..={top}");
    Ok(VerificationReport::new(TheoremId::Dim2Classification, scope, checked, findings, cx))
}

/// Looks for graphs of diameter `D` and order `n` whose dimension meets the
/// diameter bound, among the universe and the extremal construction. Reports
/// positives only; a pair without a hit is just "not found among examined".
pub fn explore_open_question(u: &Universe, diameters: &[usize], n_max: usize) -> Result<VerificationReport> {
    let mut findings = Vec::new();
    let mut checked = 0;
    for &d in diameters {
        if !(3..=6).contains(&d) {
            return Err(Error::InvalidParameters(format!("exploration supports 3 <= D <= 6, got {d}")));
        }
        for n in d + 1..=n_max {
            let bound = diameter_bound_value(n, d);
            let mut hit: Option<String> = None;
            for a in u.of_order(n).filter(|a| a.diameter == Diameter::Finite(d as u32)) {
                checked += 1;
                if hit.is_none() && a.dim2.value == bound {
                    hit = Some(format!("{} (census)", a.graph6));
                }
            }
            let g = extremal_diameter_graph(n, d)?;
            checked += 1;
            if hit.is_none() && dim2(&g)? == bound {
                hit = Some(format!("{} (extremal construction)", graph6_encode(&g)));
            }
            findings.push(match hit {
                Some(w) => format!("D={d} n={n} bound={bound}: attained by {w}"),
                None => format!("D={d} n={n} bound={bound}: not found among examined graphs"),
            });
        }
    }
    let scope = format!(
        "graphs of diameter {diameters:?} among {} plus extremal constructions up to order {n_max}",
        u.scope()
    );
    Ok(VerificationReport::new(TheoremId::Explore, scope, checked, findings, vec![]))
}
