//! Real-nonreal determination: sign conditions on the real roots and
//! zero-nonzero conditions on the nonreal ones, checked against direct
//! evaluation.

use signcond::exactnum::{rat, ratio, UniPoly};
use signcond::oracle::{build_instance, direct_feasible, RootSpec};
use signcond::queries::{Backend, ZeroSetHandle};
use signcond::realnonreal::real_nonreal_determination;

fn main() -> signcond::Result<()> {
    let spec = RootSpec {
        real_roots: vec![(rat(0), 1), (ratio(1, 2), 2), (rat(-3), 1)],
        complex_pairs: vec![(rat(0), rat(1), 1), (rat(1), rat(2), 2)],
    };
    let p = build_instance(&spec)?;
    // X, X^2 + 1, X - 1/2
    let plist = vec![
        UniPoly::x(),
        UniPoly::from_i64(&[1, 0, 1]),
        UniPoly::linear_root(&ratio(1, 2)),
    ];
    println!("P = {p}");

    let mut h = ZeroSetHandle::new(&p, Backend::Sturm)?;
    let out = real_nonreal_determination(&mut h, &plist)?;
    println!("real:");
    for (cond, c) in out.feas_real.to_sign_strings().iter().zip(&out.c_real) {
        println!("  {cond}: {c}");
    }
    println!("nonreal:");
    for (cond, c) in out.feas_nonreal.to_bit_strings().iter().zip(&out.c_nonreal) {
        println!("  {cond}: {c}");
    }

    let truth = direct_feasible(&spec, &plist)?;
    let agrees = truth.real_signs.feas == out.feas_real
        && truth.real_signs.counts == out.c_real
        && truth.nonreal.feas.rows() == out.feas_nonreal.rows()
        && truth.nonreal.counts == out.c_nonreal;
    println!("matches direct evaluation: {agrees}");
    Ok(())
}
