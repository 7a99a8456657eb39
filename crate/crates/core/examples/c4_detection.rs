//! How often the neighbour-order detector finds C4^{1243} compared with the
//! exact matcher, on random edge-ordered graphs.
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordex::edge_ordered::{c4_1243, contains, find_c4_fast, EdgeOrderedGraph};

fn main() -> ordex::Result<()> {
    let pattern = c4_1243();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    println!("n   p     hosts  contain  fast");
    for n in [6, 8, 10, 14] {
        for p in [0.3, 0.5, 0.7] {
            let (mut hit, mut fast) = (0, 0);
            for _ in 0..200 {
                let mut edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(p))
                    .collect();
                edges.shuffle(&mut rng);
                let g = EdgeOrderedGraph::new(n, &edges)?;
                hit += contains(&g, &pattern).is_some() as u32;
                if let Some(e) = find_c4_fast(&g) {
                    assert!(e.is_valid(&g, &pattern));
                    fast += 1;
                }
            }
            println!("{n:<3} {p:<5} 200    {hit:<8} {fast}");
        }
    }
    Ok(())
}
