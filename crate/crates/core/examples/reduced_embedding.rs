//! Plants K4- in a random reduced 3-graph, recovers it, and computes the
//! projection statistics of one constituent.

use turan_core::catalog::{build, Named};
use turan_core::reduced::{
    degree_square_stat, embeds, embeds_with, is_d_dense, EmbedMode, project_q, random_reduced, s_set,
};

fn main() -> turan_core::Result<()> {
    let k4m = build(&Named::K4Minus)?;
    let mut a = random_reduced(6, 4, 0.01, 7)?;
    println!("random reduced 3-graph: {} constituent edges", a.edge_count());
    println!("embeds k4minus before planting: {}", embeds(&a, &k4m)?.is_some());

    // phi = (2, 3, 5, 6); psi sends every shadow pair to vertex 1 of its class
    let phi = [2, 3, 5, 6];
    for &[u, v, w] in k4m.edges() {
        a.insert_edge([phi[u], phi[v], phi[w]], [1, 1, 1])?;
    }
    let witness = embeds(&a, &k4m)?.expect("planted copy is found");
    println!("after planting: phi = {:?}", witness.phi);
    println!("witness passes the direct check: {}", witness.check(&a, &k4m).is_ok());
    // reversing A mirrors the index order, so with increasing index maps it
    // embeds the mirrored copy of K4-
    let mirrored = k4m.relabel(&[3, 2, 1, 0])?;
    let reverse = a.reverse();
    println!("reverse embeds k4minus with increasing phi: {}", embeds(&reverse, &k4m)?.is_some());
    println!("reverse embeds mirrored k4minus: {}", embeds(&reverse, &mirrored)?.is_some());
    println!(
        "reverse embeds k4minus with any injective phi: {}",
        embeds_with(&reverse, &k4m, EmbedMode::Injective)?.is_some()
    );

    let dense = random_reduced(5, 6, 0.7, 11)?;
    let check = is_d_dense(&dense, 0.6)?;
    println!("\np = 0.7 instance is 0.6-dense: {} (worst {:?})", check.dense, check.worst);
    let eps = 0.4;
    let q = project_q(&dense, 1, 2, 3, eps)?;
    let stat = degree_square_stat(&q, eps);
    println!(
        "Q for 1,2,3 at eps = {eps}: {} edges, sum of squared degrees {} vs threshold {:.1}",
        q.edge_count(),
        stat.sum,
        stat.threshold
    );
    println!("S-set with r = 1: {:?}", s_set(&dense, 1, 2, 3, eps, 1)?);
    Ok(())
}
