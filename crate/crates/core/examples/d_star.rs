//! Computes the root of (2 - x)^3 = 27 x between 0.2 and 0.25.

use turan_core::palette::d_star;

fn main() {
    let d = d_star();
    println!("d* = {:.15}", d.value);
    println!("|(2 - d*)^3 - 27 d*| = {:.2e}", d.residual);
    println!("3 cbrt(d*) + d* - 2 = {:.2e}", 3.0 * d.value.cbrt() + d.value - 2.0);
}
