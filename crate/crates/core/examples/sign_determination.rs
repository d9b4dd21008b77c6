//! Sign determination on the real roots with Tarski queries.

use signcond::exactnum::{rat, UniPoly};
use signcond::queries::{Backend, ZeroSetHandle};
use signcond::signdet::sign_determination;

fn main() -> signcond::Result<()> {
    let roots: Vec<_> = (-3..=3).map(rat).collect();
    let p = UniPoly::from_roots(&roots);
    let plist = vec![
        UniPoly::x(),
        UniPoly::from_i64(&[-1, 0, 1]),
        UniPoly::from_i64(&[-4, 0, 1]),
    ];
    let mut h = ZeroSetHandle::new(&p, Backend::Sturm)?;
    let out = sign_determination(&mut h, &plist)?;

    for step in &out.trace {
        let (z, pos, neg) = step.base_counts;
        println!("P{}: {z} zero, {pos} positive, {neg} negative", step.index);
    }
    for (cond, c) in out.feas.to_sign_strings().iter().zip(&out.counts) {
        println!("{cond}: {c}");
    }
    let family: Vec<String> = out.ada.rows().iter().map(|a| format!("{a:?}")).collect();
    println!("adapted exponents: {}", family.join(" "));
    println!("Tarski calls: {}", h.ledger().taqu_calls());
    Ok(())
}
