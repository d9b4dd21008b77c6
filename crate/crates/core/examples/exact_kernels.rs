//! Exact polynomial and matrix kernels: remainder sequences, gcds, Newton
//! sums, Hermite matrices and their rank and signature.

use signcond::exactnum::{
    gcd, hermite_matrix, newton_sums, rank_and_signature, sign_variations_at_infinity,
    signed_remainder_sequence, UniPoly,
};

fn main() -> signcond::Result<()> {
    // X^3 - 3X^2 + 2X = X (X - 1) (X - 2)
    let p = UniPoly::from_i64(&[0, 2, -3, 1]);
    let dp = p.derivative();
    println!("P  = {p}");
    println!("P' = {dp}");

    let seq = signed_remainder_sequence(&p, &dp)?;
    for (k, s) in seq.iter().enumerate() {
        println!("SRemS[{k}] = {s}");
    }
    let (neg, pos) = sign_variations_at_infinity(&seq);
    println!("real roots by Sturm: {} - {} = {}", neg, pos, neg - pos);

    let q = UniPoly::from_i64(&[-1, 1]);
    println!("gcd(P, X - 1) = {}", gcd(&p, &q)?);

    let sums = newton_sums(&UniPoly::from_i64(&[-1, 0, 1]), 5)?;
    let sums: Vec<String> = sums.iter().map(ToString::to_string).collect();
    println!("Newton sums of X^2 - 1: {}", sums.join(", "));

    for (name, q) in [("1", UniPoly::one()), ("X", UniPoly::x()), ("X - 1", q)] {
        let her = hermite_matrix(&p, &q)?;
        let (rank, signature) = rank_and_signature(&her);
        println!("Her(P, {name}): rank {rank}, signature {signature}");
    }
    Ok(())
}
