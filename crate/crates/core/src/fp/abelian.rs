use crate::fp::Presentation;

/// Order of the abelianization of a finitely presented group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbelianOrder {
    Finite(u128),
    Infinite,
    /// Intermediate values left the `i128` range.
    Unknown,
}

/// `|G/G'|` from the relator exponent-sum matrix, by Euclidean row
/// reduction to echelon form over the integers.
pub fn abelian_quotient_order(p: &Presentation) -> AbelianOrder {
    let n = p.generator_count();
    let mut rows: Vec<Vec<i128>> = p
        .relators()
        .iter()
        .map(|r| {
            let mut v = vec![0i128; n];
            for &l in r.letters() {
                v[l.unsigned_abs() as usize - 1] += l.signum() as i128;
            }
            v
        })
        .filter(|v| v.iter().any(|&x| x != 0))
        .collect();
    let mut order: u128 = 1;
    for col in 0..n {
        // gcd of the column over the remaining rows, by repeated reduction
        loop {
            let pivot = rows.iter().enumerate().filter(|(_, r)| r[col] != 0).min_by_key(|(_, r)| r[col].unsigned_abs());
            let Some((pi, _)) = pivot else { return AbelianOrder::Infinite };
            let prow = rows.swap_remove(pi);
            let mut clean = true;
            for r in rows.iter_mut().filter(|r| r[col] != 0) {
                let q = r[col] / prow[col];
                for (x, &y) in r.iter_mut().zip(&prow) {
                    match y.checked_mul(q).and_then(|t| x.checked_sub(t)) {
                        Some(v) => *x = v,
                        None => return AbelianOrder::Unknown,
                    }
                }
                clean &= r[col] == 0;
            }
            if clean {
                order = match order.checked_mul(prow[col].unsigned_abs()) {
                    Some(o) => o,
                    None => return AbelianOrder::Unknown,
                };
                rows.retain(|r| r.iter().any(|&x| x != 0));
                break;
            }
            rows.push(prow);
        }
    }
    AbelianOrder::Finite(order)
}
