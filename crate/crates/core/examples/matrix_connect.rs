//! Matrix containment, the ordered graph G(A) of a matrix, and the check that
//! avoiding S_t as a matrix forces G(M) to avoid G(S_t).
use ordex::matrix::{
    connect_hypotheses, contains_pattern, g_of, hat, random_avoider, s_t, verify_connect,
};

fn main() -> ordex::Result<()> {
    let s4 = s_t(4)?;
    println!("S_4 =\n{s4}");
    if let Some(e) = contains_pattern(&s4, &hat()) {
        let e = e.one_based();
        println!("hat sits in rows {:?}, columns {:?}", e.row_idx, e.col_idx);
    }
    let s2 = s_t(2)?;
    println!(
        "G(S_2) edges in order: {:?}",
        g_of(&s2).edges().collect::<Vec<_>>()
    );
    let h = connect_hypotheses(&s2);
    println!("hypotheses for S_2: {}", h.passed());

    let (mut avoiders, mut failures, mut dense) = (0, 0, 0);
    for seed in 0..300 {
        let m = random_avoider(7, 7, &s2, 0.8, seed);
        let v = verify_connect(&m, &s2)?;
        avoiders += 1;
        failures += !v.holds() as u32;
        dense = dense.max(m.weight());
    }
    println!("{avoiders} random 7x7 avoiders, heaviest has {dense} ones, {failures} failures");
    Ok(())
}
