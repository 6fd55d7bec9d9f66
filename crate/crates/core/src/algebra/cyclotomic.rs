use std::collections::BTreeMap;

use super::{AlgebraError, LaurentPoly};

/// Positive divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Φ_d for every divisor `d` of `n`, built bottom-up by exact division.
pub fn cyclotomic_table(n: u64) -> Result<BTreeMap<u64, LaurentPoly>, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidIndex);
    }
    let mut table: BTreeMap<u64, LaurentPoly> = BTreeMap::new();
    for d in divisors(n) {
        let mut phi = LaurentPoly::t_pow_minus_one(d as i64);
        for e in divisors(d).into_iter().filter(|&e| e < d) {
            phi = phi.divide_exact(&table[&e])?;
        }
        table.insert(d, phi);
    }
    Ok(table)
}

/// The n-th cyclotomic polynomial Φ_n.
///
/// A primitive n-th root of unity is a root of `f ∈ ℤ[t]` exactly when
/// `Φ_n | f`, which is how root-of-unity evaluations are decided here.
pub fn cyclotomic(n: u64) -> Result<LaurentPoly, AlgebraError> {
    let mut table = cyclotomic_table(n)?;
    Ok(table.remove(&n).expect("n divides itself"))
}
