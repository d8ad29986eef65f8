use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so the divisions are exact.
pub fn integer_rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let nrows = m.len();
    let ncols = m.iter().map(Vec::len).max().unwrap_or(0);
    for row in &mut m {
        row.resize(ncols, BigInt::zero());
    }
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for i in rank + 1..nrows {
            for j in col + 1..ncols {
                let v = &m[rank][col] * &m[i][j] - &m[i][col] * &m[rank][j];
                debug_assert!((&v % &prev).is_zero());
                m[i][j] = v / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix; each row is scaled by the lcm of its
/// denominators and the integer rank is taken.
pub fn rational_rank(rows: &[Vec<BigRational>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            row.iter().map(|q| q.numer() * (&l / q.denom())).collect()
        })
        .collect();
    integer_rank(&ints)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(integer_rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(integer_rank(&m(&[&[0, 1, 2], &[0, 2, 5], &[0, 0, 0]])), 2);
        assert_eq!(integer_rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(integer_rank(&[]), 0);
        assert_eq!(integer_rank(&m(&[&[2, 3, 5], &[7, 11, 13], &[17, 19, 23], &[1, 1, 1]])), 3);
    }

    #[test]
    fn rational_rows() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let rows = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 1)]];
        assert_eq!(rational_rank(&rows), 1);
        let rows = vec![vec![q(1, 2), q(1, 3)], vec![q(3, 1), q(2, 7)]];
        assert_eq!(rational_rank(&rows), 2);
    }
}
