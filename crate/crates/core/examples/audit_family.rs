//! Audits a family file, or a seeded random valid family when no path is given.
//!
//!     cargo run --example audit_family -- fixtures/families/random12.json
use std::path::Path;

use num_rational::Ratio;
use ordex::audit::full_audit;
use ordex::constructions::{random_valid_family, FamilySeedSpec};
use ordex::io::read_family;

fn main() -> ordex::Result<()> {
    let family = match std::env::args().nth(1) {
        Some(p) => read_family(Path::new(&p))?.to_linear()?,
        None => random_valid_family(&FamilySeedSpec {
            n: 40,
            universe: 30,
            min_len: 3,
            max_len: 10,
            seed: 7,
        })?,
    };
    let r = full_audit(&family, Ratio::from_integer(2));
    println!(
        "{} orders, {} symbols, M = {}",
        r.num_orders, r.universe, r.total_weight
    );
    println!("S = {}  (lower bound {})", r.s_value, r.lower_bound);
    println!(
        "sum |A^i ∩ A^j| = {}, int-rev gain = {}",
        r.intersection_sum, r.gain_sum
    );
    for c in &r.checks {
        println!("  {:<30} {:?}  {}", c.name, c.status, c.detail);
    }
    println!("all passed: {}", r.all_passed());
    Ok(())
}
