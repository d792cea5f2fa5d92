//! Same-order graph families hitting a prescribed list of distinguishing
//! numbers: the connected circulant construction, its minimal-order
//! variant, and the disconnected clique-plus-path fallback.
//!
//! ```text
//! cargo run --example build_family
//! ```

use circdist::{
    build_connected_family, build_disconnected_family, certify_connected_plan,
    exact_distinguishing_number, minimal_common_order,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // Connected members C(d_i - 1, p_i), all of order 24, with
    // distinguishing numbers exactly 3, 4, 5.
    let plan = build_connected_family(&[3, 4, 5])?;
    println!("targets 3,4,5 -> common order {}", plan.common_order());
    for (spec, d) in plan.members().iter().zip(plan.targets()) {
        println!("  C({},{}) with D = {d}", spec.m(), spec.p());
    }

    // Certification without the full oracle: a verified labeling with the
    // target label count, plus broken random labelings one label short.
    let certs = certify_connected_plan(&plan, 200, 0);
    for cert in &certs {
        println!(
            "  C({},{}): upper bound verified = {}, {}/{} small labelings broken",
            cert.spec.m(),
            cert.spec.p(),
            cert.upper_bound_verified,
            cert.samples_broken,
            cert.samples,
        );
    }

    // A period of 4 would collapse a member to K_{2m,2m}; the construction
    // stretches every period by the least factor that avoids it.
    let stretched = build_connected_family(&[3, 5])?;
    println!(
        "\ntargets 3,5 stretch by k = {:?} to order {}",
        stretched.scaling_k(),
        stretched.common_order()
    );

    // Often a much smaller common order works.
    let minimal = minimal_common_order(&[3, 5, 7])?;
    println!(
        "targets 3,5,7 fit at order {} (construction: {})",
        minimal.common_order(),
        build_connected_family(&[3, 5, 7])?.common_order()
    );

    // Dropping connectivity, cliques padded by paths settle the question
    // at order max(d); the oracle can confirm such small members outright.
    let plan = build_disconnected_family(&[2, 3, 4])?;
    println!(
        "\ndisconnected targets 2,3,4 at order {}:",
        plan.common_order()
    );
    for (member, d) in plan.members().iter().zip(plan.targets()) {
        let g = member.graph();
        let (exact, _) = exact_distinguishing_number(&g, g.n())?;
        println!("  {member:?}: oracle D = {exact} (target {d})");
    }
    Ok(())
}
