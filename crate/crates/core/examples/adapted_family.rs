//! Info matrix, adapted family, compression and the block solver on a list
//! of five zero-nonzero conditions.

use signcond::znz::{adapted_family, compress, get_info, linear_solve, mat_of, ConditionList};

fn main() -> signcond::Result<()> {
    let sigma = ConditionList::from_bit_strings(&["10110", "10111", "11011", "11100", "11101"])?;
    println!("Sigma:\n{sigma}");

    let info = get_info(&sigma);
    println!("Info:");
    for row in info.to_strings() {
        println!("  {row}");
    }

    let ada = adapted_family(&sigma, &info)?;
    let subsets: Vec<String> = ada.subsets().iter().map(|s| format!("{s:?}")).collect();
    println!("Ada: {}", subsets.join(" "));

    let (comp, compressed) = compress(&sigma)?;
    println!("comp: {comp:?}");
    println!("Comp: {}", compressed.to_bit_strings().join(" "));

    let mat = mat_of(&ada, &sigma)?;
    println!("Mat(Ada, Sigma):");
    for row in &mat {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        println!("  {}", cells.join(" "));
    }

    // pretend the cardinals are 1..=5 and recover them from the queries
    let c: Vec<i64> = (1..=5).collect();
    let v: Vec<i64> = mat
        .iter()
        .map(|r| r.iter().zip(&c).map(|(&m, &x)| i64::from(m) * x).sum())
        .collect();
    println!(
        "queries {v:?} -> cardinals {:?}",
        linear_solve(&sigma, &info, &mat, &v)?
    );
    Ok(())
}
