//! T¹ and the Betti table of the seeded genus-6 K3 model.
//!
//!     cargo run --release -p conekit --example genus6 -- 3

use conekit::corpus;
use conekit::homology::{betti_table, gorenstein_duality_check, wahl_criterion};
use conekit::t1::{t1, MethodChoice};
use conekit::PrimeField;

fn main() -> conekit::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let ideal = corpus::k3_genus6(PrimeField::default(), seed);
    let rep = t1(&ideal, -3, 3, MethodChoice::Auto)?;
    for (k, d) in rep.dims.iter() {
        println!("T1({k:>2}) = {d}");
    }
    let table = betti_table(&ideal, 4, 3)?;
    print!("{}", table.render());
    println!("duality: {}", gorenstein_duality_check(&table, 4, 3).holds);
    let w = wahl_criterion(&table)?;
    println!("wahl: {} ({})", w.holds, w.reason);
    Ok(())
}
