use ecx_core::gen;
use ecx_core::graphs::{fas_top_membership, min_feedback_arc_set};
use ecx_core::reduce::dwork_hat;
use ecx_core::Limits;

fn main() {
    let limits = Limits::default();
    let mut rng = gen::rng_from_seed(300_000);
    let d = gen::digraph(&mut rng, 3, 0.6);
    println!("digraph n={} arcs={:?}", d.n(), d.arcs().collect::<Vec<_>>());
    let (hat, _) = dwork_hat(&d).unwrap();
    println!("hat n={} arcs={:?}", hat.n(), hat.arcs().collect::<Vec<_>>());
    let target = 0usize;
    // delete vertex 2
    let kept: std::collections::BTreeSet<usize> = [0usize, 1].into_iter().collect();
    let (d_sub, d_ids) = d.induced(&kept);
    println!("d_sub arcs={:?} ids={:?}", d_sub.arcs().collect::<Vec<_>>(), d_ids);
    let kept_hat: std::collections::BTreeSet<usize> =
        (0..hat.n()).filter(|v| *v >= d.n() || kept.contains(v)).collect();
    let (hat_sub, hat_ids) = hat.induced(&kept_hat);
    println!("hat_sub arcs={:?} ids={:?}", hat_sub.arcs().collect::<Vec<_>>(), hat_ids);
    let t_sub = d_ids.binary_search(&target).unwrap();
    let t_hat = hat_ids.binary_search(&target).unwrap();
    println!("fas d_sub = {:?}", min_feedback_arc_set(&d_sub, &limits).unwrap());
    println!("fas hat_sub = {:?}", min_feedback_arc_set(&hat_sub, &limits).unwrap());
    println!("membership d_sub({t_sub}) = {}", fas_top_membership(&d_sub, t_sub, &limits).unwrap());
    println!("membership hat_sub({t_hat}) = {}", fas_top_membership(&hat_sub, t_hat, &limits).unwrap());
}
