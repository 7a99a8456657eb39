//! Ex(n, A) for the hat pattern and S_2, exact up to n = 5 and budgeted at n = 6.
use std::time::{Duration, Instant};

use ordex::edge_ordered::SearchBudget;
use ordex::matrix::{ex_heuristic, ex_search, hat, s_t};

fn main() -> ordex::Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(5);
    for (name, a) in [("hat", hat()), ("S_2", s_t(2)?)] {
        println!("{name}:\n{a}");
        for n in 1..=max_n {
            let t = Instant::now();
            let r = ex_search(n, &a, SearchBudget::with_time(Duration::from_secs(60)))?;
            let h = ex_heuristic(n, &a, 20, 1);
            println!(
                "  n={n}  Ex={:<3} exact={:<5} greedy={:<3} {:.2?}  witness {}",
                r.value,
                r.exact,
                h.value,
                t.elapsed(),
                r.witness.join("/")
            );
        }
    }
    Ok(())
}
