//! Walks through the named graphs: sizes, shadows, links, blow-ups and
//! containment between members of the catalog.

use turan_core::catalog::{build, Named, VERTEX_NAMES, X};
use turan_core::subgraph::contains_sub;

fn main() -> turan_core::Result<()> {
    for named in Named::examples() {
        let g = build(&named)?;
        println!(
            "{:<18} n = {:>2}  edges = {:>2}  shadow = {:>2}",
            named.to_string(),
            g.n(),
            g.edge_count(),
            g.shadow().len()
        );
    }

    let hat = build(&Named::F7StarHat)?;
    let link: Vec<String> = hat
        .link(X)?
        .iter()
        .map(|[u, v]| format!("{}{}", VERTEX_NAMES[u], VERTEX_NAMES[v]))
        .collect();
    println!("\nlink of x in f7star_hat: {}", link.join(" "));

    let w4 = build(&Named::Wheel(4))?;
    let blown = w4.blow_up(2)?;
    println!("wheel:4 blown up twice: {} vertices, {} edges", blown.n(), blown.edge_count());

    let k4m = build(&Named::K4Minus)?;
    let pyramid = build(&Named::DoublePyramid(5))?;
    for (host_name, host) in [("f7star_hat", &hat), ("double_pyramid:5", &pyramid)] {
        match contains_sub(host, &k4m)? {
            Some(map) => println!("k4minus inside {host_name} at {map:?}"),
            None => println!("k4minus not inside {host_name}"),
        }
    }
    Ok(())
}
