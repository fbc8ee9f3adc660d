use rand::Rng;
use sgraph::color::{chi_b_exact, chi_exact, validate_coloring};
use sgraph::detect::{in_forb_class, ForbSpec, Pattern};
use sgraph::gen::{arc_graph, gen_shift, gen_signed_shift3, neg_clique, random_girth_graph, random_graph, random_signed_graph, signed_line_graph, Orientation};
use sgraph::{Graph, Sign, SignedGraph};

use super::{instance_rng, HarnessError, Params, Rows};
use crate::report::Row;

fn chi(g: &Graph) -> usize {
    chi_exact(g, None).expect("no bound given").0
}

fn as_signed(g: &Graph) -> SignedGraph {
    SignedGraph::uniform(g, Sign::Negative)
}

pub(super) fn neg_clique_chi(p: &mut Params, _seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let i_max: usize = p.get("i_max", 10)?;
    for i in 2..=i_max {
        let g = neg_clique(i);
        let (k, c) = chi_b_exact(&g, None)?;
        let want = i.div_ceil(2);
        let pass = k == want && validate_coloring(&g, &c);
        rows.push(Row::new(i - 2, &g, "chi_b", k as i64, format!("= {want}"), pass, || format!("i={i}")));
    }
    Ok(())
}

pub(super) fn lemma6_sandwich(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 500)?;
    let n_max: usize = p.get("n_max", 12)?;
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(1..=n_max);
        let (density, neg) = (r.gen_range(0.1..0.9), r.gen_range(0.0..=1.0));
        let g = random_signed_graph(n, density, neg, &mut r).expect("valid probabilities");
        let (chi_b, c) = chi_b_exact(&g, None).expect("no bound given");
        let chi_neg = chi(&g.negative_subgraph());
        let pass = validate_coloring(&g, &c) && chi_b <= chi_neg && chi_neg <= 2 * chi_b;
        vec![Row::new(id, &g, "chi_negative", chi_neg as i64, format!("in [{chi_b}, {}]", 2 * chi_b), pass, || {
            format!("chi_b={chi_b}")
        })]
    });
    Ok(())
}

pub(super) fn shift_growth(p: &mut Params, _seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let n_max: usize = p.get("n_max", 7)?;
    let k_max: usize = p.get("k_max", 2)?;
    let mut id = 0;
    for k in 1..=k_max {
        for n in k..=n_max {
            let g = gen_shift(k, n)?;
            let lhs = chi(&g);
            let rhs = chi(&gen_shift(k + 1, n + 1)?);
            let bound = 1usize.checked_shl(rhs as u32).unwrap_or(usize::MAX);
            let pass = lhs <= bound;
            rows.push(Row::new(id, &as_signed(&g), "chi_shift", lhs as i64, format!("<= 2^{rhs}"), pass, || {
                format!("k={k} n={n}")
            }));
            id += 1;
        }
    }
    Ok(())
}

pub(super) fn thm15_membership(p: &mut Params, _seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let n_max: usize = p.get("n_max", 8)?;
    let spec = ForbSpec::new(vec![Pattern::neg_k3(), Pattern::star(4)]);
    for n in 3..=n_max {
        let g = gen_signed_shift3(n)?;
        let report = in_forb_class(&g, &spec);
        let pass = report.is_member();
        rows.push(Row::new(n - 3, &g, "member", pass as i64, "= 1", pass, || {
            format!("n={n} violations={:?}", report.violations)
        }));
    }
    Ok(())
}

pub(super) fn thm18_membership(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 50)?;
    let n_max: usize = p.get("n_max", 12)?;
    let spec = ForbSpec::new(vec![Pattern::neg_k3(), Pattern::claw()]);
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(2..=n_max);
        let density = r.gen_range(0.2..0.8);
        // girth at least 4: triangle-free
        let g = random_girth_graph(n, 4, density, r.gen()).expect("valid parameters");
        let d = Orientation::random(&g, &mut r);
        let l = signed_line_graph(&d);
        let report = in_forb_class(&l, &spec);
        let pass = report.is_member();
        vec![Row::new(id, &l, "member", pass as i64, "= 1", pass, || {
            format!("orientation={:?} violations={:?}", d.arcs(), report.violations)
        })]
    });
    Ok(())
}

fn binom(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub(super) fn thm16_sandwich(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 100)?;
    let n_max: usize = p.get("n_max", 10)?;
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(1..=n_max);
        let density = r.gen_range(0.1..0.9);
        let g = random_graph(n, density, &mut r).expect("valid density");
        let d = Orientation::random(&g, &mut r);
        let chi_g = chi(&g);
        let chi_a = chi(&arc_graph(&d));
        let lo = (0..).find(|&k| chi_g <= 1 << k).expect("some power of two");
        let hi = (0..).find(|&k| chi_g <= binom(k, k / 2)).expect("binomials grow");
        let pass = lo <= chi_a && chi_a <= hi;
        vec![Row::new(id, &as_signed(&g), "chi_arc_graph", chi_a as i64, format!("in [{lo}, {hi}]"), pass, || {
            format!("chi={chi_g} orientation={:?}", d.arcs())
        })]
    });
    Ok(())
}
