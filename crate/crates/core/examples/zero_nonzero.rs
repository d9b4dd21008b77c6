//! Zero-nonzero determination on a non-squarefree polynomial with complex
//! roots, with the step trace and the subsets that were queried.

use signcond::exactnum::{rat, UniPoly};
use signcond::queries::{Backend, ZeroSetHandle};
use signcond::znz::{used_sets, zero_nonzero_determination};

fn main() -> signcond::Result<()> {
    // (X - 1)^2 (X - 2) (X - 3) (X^2 + 1)
    let p = &(&UniPoly::linear_root(&rat(1)).pow(2) * &UniPoly::from_roots(&[rat(2), rat(3)]))
        * &UniPoly::from_i64(&[1, 0, 1]);
    let plist = vec![
        UniPoly::from_roots(&[rat(1), rat(2)]),
        UniPoly::from_i64(&[1, 0, 1]),
        UniPoly::from_roots(&[rat(2), rat(5)]),
        UniPoly::from_i64(&[7]),
    ];
    println!("P = {p}");
    let mut h = ZeroSetHandle::new(&p, Backend::Sturm)?;
    let out = zero_nonzero_determination(&mut h, &plist)?;

    for step in &out.trace {
        println!(
            "P{}: {} zero, {} nonzero, card {}, queried {:?}",
            step.index, step.zero_count, step.nonzero_count, step.card, step.queried
        );
    }
    for (cond, c) in out.feas.to_bit_strings().iter().zip(&out.counts) {
        println!("{cond}: {c}");
    }
    println!(
        "comp {:?}, Ada {:?}",
        out.state.comp,
        out.state.ada.subsets()
    );
    println!("used subsets: {:?}", used_sets(&out.trace));
    println!(
        "ledger: {}",
        serde_json::to_string(&h.ledger().stats()).expect("serializable")
    );
    Ok(())
}
