//! Peels a family's incidence graph down to a K-almost-regular part and
//! restricts the family to it.
use num_rational::Ratio;
use ordex::constructions::{random_valid_family, FamilySeedSpec};
use ordex::regularize::{build_incidence, extract_almost_regular, restrict_family};

fn main() -> ordex::Result<()> {
    let family = random_valid_family(&FamilySeedSpec {
        n: 60,
        universe: 40,
        min_len: 1,
        max_len: 12,
        seed: 3,
    })?;
    let g = build_incidence(&family);
    println!(
        "incidence graph: {} edges, degrees {:?}",
        g.edge_count(),
        g.degree_range()
    );
    for k in [
        Ratio::from_integer(4),
        Ratio::from_integer(2),
        Ratio::new(3, 2),
    ] {
        let (sub, report) = extract_almost_regular(&g, k)?;
        let restricted = restrict_family(&family, &sub)?;
        println!(
            "K = {k}: kept {} of {} edges, δ = {}, Δ = {}, Δ/δ = {}, {} orders over {} symbols, valid {}",
            report.retained_edges,
            report.total_edges,
            report.min_degree,
            report.max_degree,
            report.k_achieved,
            restricted.family.len(),
            restricted.family.universe(),
            restricted.family.is_valid(),
        );
    }
    Ok(())
}
