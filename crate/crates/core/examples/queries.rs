//! Invertibility and Tarski queries with both backends, and the cached
//! product queries recorded in the ledger.

use signcond::exactnum::{rat, UniPoly};
use signcond::queries::{Backend, ZeroSetHandle};

fn main() -> signcond::Result<()> {
    // roots -2, -1, 0, 1, 2 and the pair +-i
    let roots: Vec<_> = (-2..=2).map(rat).collect();
    let p = &UniPoly::from_roots(&roots) * &UniPoly::from_i64(&[1, 0, 1]);
    let plist = vec![
        UniPoly::x(),
        UniPoly::from_i64(&[-1, 0, 1]),
        UniPoly::from_i64(&[1, 0, 1]),
    ];
    println!("P = {p}");

    for backend in [Backend::Sturm, Backend::Hermite] {
        let h = ZeroSetHandle::new(&p, backend)?;
        let rows: Vec<String> = plist
            .iter()
            .map(|q| {
                format!(
                    "Qu({q}) = {}, TaQu({q}) = {}",
                    h.invertibility_query(q),
                    h.tarski_query(q)
                )
            })
            .collect();
        println!("{backend:?}:\n  {}", rows.join("\n  "));
    }

    let mut h = ZeroSetHandle::new(&p, Backend::Sturm)?;
    println!(
        "Qu(P1 P2) = {}",
        h.invertibility_query_product(&plist, &[1, 2])?
    );
    println!(
        "TaQu(P1 P2^2) = {}",
        h.tarski_query_product(&plist, &[1, 2, 0])?
    );
    // cached: no new call
    h.invertibility_query_product(&plist, &[1, 2])?;
    println!(
        "ledger: {}",
        serde_json::to_string(&h.ledger().stats()).expect("serializable")
    );
    Ok(())
}
