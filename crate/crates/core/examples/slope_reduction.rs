//! Random drawings thinned to have no self-crossing 4-cycle, then reduced by
//! a random left/right split with edges ordered by slope. Reports how many
//! 4-cycles survive and that none is a copy of C4^{1243}.
use std::time::Instant;

use ordex::geo::{
    break_self_crossing_c4, enumerate_self_crossing_c4, random_geometric_graph, slope_reduction,
    verify_slope_claim,
};

fn main() -> ordex::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |k: usize, d: f64| args.get(k).and_then(|s| s.parse().ok()).unwrap_or(d);
    let (n, p, trials) = (arg(0, 14.0) as usize, arg(1, 0.6), arg(2, 100.0) as u64);

    let t = Instant::now();
    let (mut edges, mut kept, mut cycles, mut exempt, mut copies, mut violations) =
        (0, 0, 0, 0, 0, 0);
    // The claim also applies to the non-crossing cycles of unthinned drawings.
    let (mut raw_cycles, mut raw_exempt, mut raw_violations) = (0, 0, 0);
    for seed in 0..trials {
        let raw = random_geometric_graph(n, p, 10_000, seed)?;
        let raw_claim = verify_slope_claim(&slope_reduction(&raw, seed)?.graph, &raw)?;
        raw_cycles += raw_claim.cycles;
        raw_exempt += raw_claim.exempt;
        raw_violations += raw_claim.violations.len();
        let g = break_self_crossing_c4(&raw, seed)?;
        assert!(enumerate_self_crossing_c4(&g)?.is_empty());
        let r = slope_reduction(&g, seed)?;
        let claim = verify_slope_claim(&r.graph, &g)?;
        edges += g.edges().len();
        kept += r.kept.len();
        cycles += claim.cycles;
        exempt += claim.exempt;
        violations += claim.violations.len();
        copies += claim.contains_c4_1243 as usize;
    }
    println!("n = {n}, p = {p}, {trials} drawings in {:.2?}", t.elapsed());
    println!("  edges after thinning  {edges}");
    println!(
        "  edges kept            {kept} ({:.3} of them)",
        kept as f64 / edges.max(1) as f64
    );
    println!("  reduced four-cycles   {cycles} ({exempt} exempt)");
    println!("  claim violations      {violations}");
    println!("  copies of C4^1243     {copies}");
    println!("unthinned drawings");
    println!("  reduced four-cycles   {raw_cycles} ({raw_exempt} exempt)");
    println!("  claim violations      {raw_violations}");
    Ok(())
}
