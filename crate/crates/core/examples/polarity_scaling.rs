//! Families from polarity graphs: total weight against n^{3/2}.
use num_rational::Ratio;
use ordex::audit::full_audit;
use ordex::constructions::{family_from_c4_free, polarity_graph};

fn main() -> ordex::Result<()> {
    println!("q    n     M      M/n^1.5  audit");
    for q in [2, 3, 5, 7, 11, 13, 17] {
        let p = polarity_graph(q)?;
        let fam = family_from_c4_free(&p.graph, q)?;
        let w = fam.weight_ratio();
        let audit = full_audit(&fam, Ratio::from_integer(2)).all_passed();
        println!(
            "{q:<4} {:<5} {:<6} {:.4}   {audit}",
            w.n,
            w.total,
            w.approx()
        );
    }
    Ok(())
}
