//! HElim for X^2 - Y with the system [X], and a check that samples with the
//! same HElim signs get the same real-nonreal answer.

use signcond::exactnum::{rat, Rational};
use signcond::parametric::{helim, invariance_check, parametric_hermite, ParamPoly, ParamUniPoly};

fn main() -> signcond::Result<()> {
    let y = ParamPoly::var(1, 0);
    let c = |v: i64| ParamPoly::constant(1, rat(v));
    let p = ParamUniPoly::new(1, vec![-&y, c(0), c(1)]);
    let x = ParamUniPoly::new(1, vec![c(0), c(1)]);

    let her = parametric_hermite(&p, &x)?;
    for row in &her {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("Her(P, X) row: [{}]", cells.join(", "));
    }

    let family = helim(&p, std::slice::from_ref(&x), None)?;
    let shown: Vec<String> = family.iter().map(ToString::to_string).collect();
    println!("HElim = {{{}}}", shown.join(", "));

    let samples: Vec<Vec<Rational>> = [-4, -1, 0, 1, 4, 9].iter().map(|&v| vec![rat(v)]).collect();
    let report = invariance_check(&p, &[x], &samples)?;
    for g in &report.groups {
        let ys: Vec<String> = g
            .samples
            .iter()
            .map(|&k| samples[k][0].to_string())
            .collect();
        println!(
            "Y in {{{}}}: signs {:?}, real {:?} {:?}, nonreal {:?} {:?}",
            ys.join(", "),
            g.signs,
            g.output.feas_real.to_sign_strings(),
            g.output.c_real,
            g.output.feas_nonreal.to_bit_strings(),
            g.output.c_nonreal
        );
    }
    println!("violations: {}", report.violations.len());
    Ok(())
}
