use rand::Rng;
use sgraph::color::{color_layered_nbhd, color_linear_forest, color_nbhd_via_p4class, color_or_path_k3free, validate_coloring, ColorOrPath};
use sgraph::detect::{find_induced, in_forb_class, is_induced_path, ForbSpec, Pattern};
use sgraph::gen::{random_k3free_connected, sample_p4class_member};
use sgraph::{ColorError, SignedGraph, SwitchingSet};

use super::{instance_rng, HarnessError, Params, Rows};
use crate::report::Row;

fn path_ok(g: &SignedGraph, path: &[usize], u: usize, len: usize) -> bool {
    path.len() == len && path.first() == Some(&u) && is_induced_path(&g.underlying(), path)
}

pub(super) fn thm20_bound(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 200)?;
    let n_max: usize = p.get("n_max", 14)?;
    let k_max: usize = p.get("k_max", 4)?;
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(1..=n_max);
        let density = r.gen_range(0.1..0.9);
        let g = random_k3free_connected(n, density, &mut r).expect("valid density");
        let k = r.gen_range(1..=k_max);
        let u = r.gen_range(0..n);
        let inputs = || format!("k={k} start={u}");
        let has_path = find_induced(&g, &Pattern::path(k + 2)).is_some();
        let row = match color_or_path_k3free(&g, k, u) {
            Ok(ColorOrPath::Coloring(c)) => {
                let bound = (1 << k) - 1;
                let pass = validate_coloring(&g, &c) && c.num_colors() <= bound;
                Row::new(id, &g, "colors", c.num_colors() as i64, format!("<= {bound}"), pass, inputs)
            }
            Ok(ColorOrPath::Path(path)) => {
                let pass = has_path && path_ok(&g, &path, u, k + 2);
                Row::new(id, &g, "path_vertices", path.len() as i64, format!("= {} from start", k + 2), pass, inputs)
            }
            Err(e) => Row::new(id, &g, "error", -1, "no error", false, || format!("{} {e}", inputs())),
        };
        vec![row]
    });
    Ok(())
}

pub(super) fn cor21_bound(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 200)?;
    let n_max: usize = p.get("n_max", 12)?;
    let l_max: usize = p.get("l_max", 3)?;
    let k_max: usize = p.get("k_max", 4)?;
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(1..=n_max);
        let density = r.gen_range(0.1..0.9);
        let g = random_k3free_connected(n, density, &mut r).expect("valid density");
        let k = r.gen_range(2..=k_max);
        let l = r.gen_range(1..=l_max);
        let sizes: Vec<usize> = (0..l).map(|_| r.gen_range(1..=k)).collect();
        let inputs = || format!("paths={sizes:?} k={k}");
        let row = match color_linear_forest(&g, &sizes) {
            Ok(c) => {
                let bound = (1 << k) + (l - 1) * k;
                let pass = validate_coloring(&g, &c) && c.num_colors() < bound;
                Row::new(id, &g, "colors", c.num_colors() as i64, format!("< {bound}"), pass, inputs)
            }
            Err(ColorError::PreconditionViolated(_)) => {
                let present = find_induced(&g, &Pattern::linear_forest(&sizes)).is_some();
                Row::new(id, &g, "forest_present", present as i64, "= 1", present, inputs)
            }
            Err(e) => Row::new(id, &g, "error", -1, "no error", false, || format!("{} {e}", inputs())),
        };
        vec![row]
    });
    Ok(())
}

/// Members of `Forb{(K4, -), P4}`: a class member of the three-pattern class
/// with a positive apex, randomly switched. The neighbourhood solver colours
/// each closed neighbourhood with at most 7 classes.
pub(super) fn cor31_bound(p: &mut Params, seed: u64, rows: &mut Rows) -> Result<(), HarnessError> {
    let samples: usize = p.get("samples", 100)?;
    let n_max: usize = p.get("n_max", 30)?;
    const K: usize = 4;
    const B: usize = 7;
    let spec = ForbSpec::neg_k4_with_path(K);
    rows.par_instances(samples, |id| {
        let mut r = instance_rng(seed, id);
        let n = r.gen_range(2..=n_max);
        let base = sample_p4class_member(n - 1, r.gen()).expect("sampler succeeds");
        let w: SwitchingSet = (0..n).filter(|_| r.gen_bool(0.5)).collect();
        let g = base.add_universal_positive().switch(&w).expect("vertices in range");
        let u = r.gen_range(0..n);
        let inputs = || format!("k={K} b={B} start={u}");
        if !in_forb_class(&g, &spec).is_member() {
            return vec![Row::new(id, &g, "member", 0, "= 1", false, inputs)];
        }
        let row = match color_layered_nbhd(&g, K, B, u, color_nbhd_via_p4class) {
            Ok(ColorOrPath::Coloring(c)) => {
                let bound = B << (K - 3);
                let pass = validate_coloring(&g, &c) && c.num_colors() <= bound && bound <= 1 << 7;
                Row::new(id, &g, "colors", c.num_colors() as i64, format!("<= {bound} (<= 2^7)"), pass, inputs)
            }
            Ok(ColorOrPath::Path(path)) => {
                Row::new(id, &g, "path_vertices", path.len() as i64, "no P4 in a member", false, inputs)
            }
            Err(e) => Row::new(id, &g, "error", -1, "no error", false, || format!("{} {e}", inputs())),
        };
        vec![row]
    });
    Ok(())
}
