//! Builds the hand-made certificates, checks them, and prints them as JSON.
//!
//! With a directory argument the certificates are also written there, one
//! file per certificate.

use std::path::PathBuf;

use turan_core::catalog::{build, Named};
use turan_core::palette::{golden, PaletteCertificate, PropertyKind};

fn main() -> turan_core::Result<()> {
    let out_dir = std::env::args().nth(1).map(PathBuf::from);
    let mut entries: Vec<(String, Named, PaletteCertificate)> = vec![
        (
            "f7star_hat.spades".into(),
            Named::F7StarHat,
            golden::f7star_hat(PropertyKind::Spades)?,
        ),
        (
            "f7star_hat.spades-star".into(),
            Named::F7StarHat,
            golden::f7star_hat(PropertyKind::SpadesStar)?,
        ),
    ];
    for t in [3, 5, 7, 9] {
        entries.push((format!("wheel{t}.vanishing"), Named::Wheel(t), golden::wheel_vanishing(t)?));
    }
    for t in [4, 6, 8] {
        entries.push((format!("wheel{t}.spades"), Named::Wheel(t), golden::wheel_spades(t)?));
    }

    for (file, named, cert) in &entries {
        let graph = build(named)?;
        let verdict = cert.verify(&graph)?;
        println!("{named:<12} {:<12} {}", cert.kind.name(), if verdict.is_accept() { "accept" } else { "reject" });
        if let Some(dir) = &out_dir {
            std::fs::write(dir.join(format!("{file}.json")), cert.to_json_pretty() + "\n")?;
        }
    }
    println!();
    println!("{}", entries[0].2.to_json_pretty());
    Ok(())
}
