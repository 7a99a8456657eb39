//! Pairwise primitives on linear and cyclic orders.
use ordex::orders::{
    common_triple_same_order, cyclic_family_to_linear, f_pair, intersection_reverse_witness,
    two_chain_decomposition, CyclicFamily, CyclicOrder, LinearOrder, Symbol,
};

fn main() -> ordex::Result<()> {
    let a = LinearOrder::from_ids([0, 1, 2, 3, 4, 5])?;
    let b = LinearOrder::from_ids([5, 3, 4, 1, 2, 0])?;
    println!("A = {a:?}\nB = {b:?}");
    println!("f(A, B, 1, 2) = {}", f_pair(&a, &b, Symbol(1), Symbol(2))?);
    println!(
        "same-order pair: {:?}",
        intersection_reverse_witness(&a, &b)
    );
    println!("same-order triple: {:?}", common_triple_same_order(&a, &b));
    let d = two_chain_decomposition(&a, &b)?;
    println!("two reversed chains: {:?} and {:?}", d.t1, d.t2);

    let c = LinearOrder::from_ids([0, 2, 4, 1])?;
    println!("A vs {c:?}: triple {:?}", common_triple_same_order(&a, &c));
    assert!(two_chain_decomposition(&a, &c).is_err());

    // Cyclic orders that are pairwise reversed linearize to a valid family.
    let cyc = CyclicFamily::new(
        6,
        vec![
            CyclicOrder::from_ids([0, 1, 2, 3])?,
            CyclicOrder::from_ids([3, 2, 1, 0])?,
            CyclicOrder::from_ids([4, 2, 5, 0])?,
        ],
    )?;
    println!(
        "cyclic family pairwise reversed: {}",
        cyc.is_pairwise_intersection_reverse()
    );
    let lin = cyclic_family_to_linear(&cyc);
    println!("linearized {:?}, valid: {}", lin.to_ids(), lin.is_valid());
    Ok(())
}
