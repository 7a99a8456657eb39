//! Small exact values of ex_<(n, C4^{1243}) next to the unordered ex(n, C4).
use std::time::{Duration, Instant};

use ordex::edge_ordered::{brute_force_ex_unordered, c4_1243, ex_ordered_search, SearchBudget};

fn main() -> ordex::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    let pattern = c4_1243();
    println!("n  ex_<  ex   exact  nodes      time");
    for n in 2..=max_n {
        let t = Instant::now();
        let r = ex_ordered_search(
            n,
            &pattern,
            SearchBudget::with_time(Duration::from_secs(120)),
        )?;
        let plain = brute_force_ex_unordered(n, &pattern)?;
        println!(
            "{n}  {:<4}  {plain:<3}  {:<5}  {:<9}  {:.2?}",
            r.value,
            r.exact,
            r.nodes,
            t.elapsed()
        );
        println!("   witness {:?}", r.witness);
    }
    Ok(())
}
