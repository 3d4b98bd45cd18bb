//! Jacobi symbols and representation counts for sums of three squares.
//!
//! `r3(n)` counts all integer triples with `x^2 + y^2 + z^2 = n`, `q3(n)`
//! counts ordered triples of positive odd integers. Both have brute-force
//! counters here, plus a closed form for `r3` built from Jacobi-symbol
//! character sums (valid on squarefree arguments) and reduced-form class
//! numbers (for the square parts).

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SquaresError {
    #[error("jacobi symbol is only defined for odd positive modulus, got {0}")]
    BadJacobiModulus(i64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("closed form requires n = 1 or 3 (mod 4), got {0}")]
    BadResidueClass(u64),
}

/// Deterministic primality by trial division; the sweeps here stay far
/// below the range where this would hurt.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Jacobi symbol `(r/n)` for odd positive `n`; `(r/1) = 1`, and the value
/// is 0 exactly when `gcd(r, n) > 1`.
pub fn jacobi(r: i64, n: i64) -> Result<i32, SquaresError> {
    if n <= 0 || n % 2 == 0 {
        return Err(SquaresError::BadJacobiModulus(n));
    }
    let mut a = r.rem_euclid(n);
    let mut n = n;
    let mut acc = 1i32;
    loop {
        a %= n;
        if a == 0 {
            return Ok(if n == 1 { acc } else { 0 });
        }
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                acc = -acc;
            }
        }
        if a % 4 == 3 && n % 4 == 3 {
            acc = -acc;
        }
        std::mem::swap(&mut a, &mut n);
    }
}

fn is_square(n: u64) -> bool {
    let s = n.isqrt();
    s * s == n
}

/// Number of integer solutions of `x^2 + y^2 + z^2 = n`, by exhaustive
/// enumeration over `|x|, |y| <= sqrt(n)`.
pub fn r3_brute(n: u64) -> u64 {
    let s = n.isqrt();
    let mut count = 0u64;
    for x in 0..=s {
        let x_weight = if x == 0 { 1 } else { 2 };
        let rx = n - x * x;
        for y in 0..=rx.isqrt() {
            let y_weight = if y == 0 { 1 } else { 2 };
            let rz = rx - y * y;
            if is_square(rz) {
                let z_weight = if rz == 0 { 1 } else { 2 };
                count += x_weight * y_weight * z_weight;
            }
        }
    }
    count
}

/// Number of ordered triples of positive odd integers with
/// `x^2 + y^2 + z^2 = n`.
pub fn q3_brute(n: u64) -> u64 {
    let s = n.isqrt();
    let mut count = 0u64;
    let mut x = 1;
    while x <= s {
        let mut y = 1;
        while x * x + y * y <= n {
            let rz = n - x * x - y * y;
            let z = rz.isqrt();
            if z * z == rz && z % 2 == 1 {
                count += 1;
            }
            y += 2;
        }
        x += 2;
    }
    count
}

fn squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Class number of primitive reduced positive-definite binary quadratic
/// forms of discriminant `-d` (d > 0, with -d = 0 or 1 mod 4).
fn form_class_number(d: u64) -> u64 {
    debug_assert!(d.is_multiple_of(4) || d % 4 == 3);
    let mut h = 0u64;
    let mut a = 1i64;
    while (a * a * 3) as u64 <= d {
        for b in (-a + 1)..=a {
            // b^2 - 4ac = -d, so b and d must have matching parity.
            if (b * b + d as i64) % 2 != 0 {
                continue;
            }
            let num = b * b + d as i64;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            if c < a {
                continue;
            }
            if a == c && b < 0 {
                continue;
            }
            let g = gcd(gcd(a as u64, b.unsigned_abs()), c as u64);
            if g == 1 {
                h += 1;
            }
        }
        a += 1;
    }
    h
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn jacobi_partial_sum(m: u64, bound: u64) -> i64 {
    let mut acc = 0i64;
    for r in 1..=bound {
        acc += jacobi(r as i64, m as i64).expect("odd positive modulus") as i64;
    }
    acc
}

/// Number of primitive representations of odd `m` as a sum of three
/// squares. Squarefree arguments use the Jacobi-symbol character sums;
/// square-divisible ones fall back to form class numbers, where the
/// character sums are no longer valid.
fn r3_primitive(m: u64) -> u64 {
    debug_assert!(m % 2 == 1);
    if m == 1 {
        return 6;
    }
    match m % 8 {
        7 => 0,
        3 => {
            if squarefree(m) {
                8 * u64::try_from(jacobi_partial_sum(m, m / 2)).expect("sum is positive")
            } else {
                24 * form_class_number(m)
            }
        }
        1 | 5 => {
            if squarefree(m) {
                24 * u64::try_from(jacobi_partial_sum(m, m / 4)).expect("sum is positive")
            } else {
                12 * form_class_number(4 * m)
            }
        }
        _ => unreachable!("m is odd"),
    }
}

/// Closed form for `r3(n)`, for `n = 1 or 3 (mod 4)`: the sum of
/// primitive counts `r3*(n/d^2)` over all `d` with `d^2 | n`.
pub fn r3_closed(n: u64) -> Result<u64, SquaresError> {
    if n % 4 != 1 && n % 4 != 3 {
        return Err(SquaresError::BadResidueClass(n));
    }
    let mut total = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d * d) {
            total += r3_primitive(n / (d * d));
        }
        d += 1;
    }
    Ok(total)
}

/// Counts of quadratic residues and nonresidues in `[1, (l-1)/2]` for an
/// odd prime l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResidueTally {
    pub ell: u64,
    /// Quadratic residues in the lower half interval.
    pub residues: u64,
    /// Nonresidues in the lower half interval.
    pub nonresidues: u64,
}

impl ResidueTally {
    pub fn difference(&self) -> i64 {
        self.residues as i64 - self.nonresidues as i64
    }
}

/// Tallies quadratic residues in `[1, (l-1)/2]` via a squaring table.
pub fn residue_tally(ell: u64) -> Result<ResidueTally, SquaresError> {
    if ell == 2 || !is_prime(ell) {
        return Err(SquaresError::NotOddPrime(ell));
    }
    let mut is_qr = vec![false; ell as usize];
    for x in 1..ell {
        is_qr[((x * x) % ell) as usize] = true;
    }
    let half = (ell - 1) / 2;
    let residues = (1..=half).filter(|&i| is_qr[i as usize]).count() as u64;
    Ok(ResidueTally {
        ell,
        residues,
        nonresidues: half - residues,
    })
}

/// The residue of `a_l(f)` modulo 4 as a function of the prime l alone:
/// 2 for l = 1, 3, 5 (mod 8) and 0 for l = 2, 7 (mod 8).
pub fn f_mod4_rule(ell: u64) -> Result<u8, SquaresError> {
    if !is_prime(ell) {
        return Err(SquaresError::NotPrime(ell));
    }
    Ok(match ell % 8 {
        1 | 3 | 5 => 2,
        _ => 0,
    })
}

/// Odd primes in `[3, max]`, ascending.
pub fn odd_primes_up_to(max: u64) -> Vec<u64> {
    (3..=max).step_by(2).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Euler-criterion oracle for the Legendre symbol.
    fn legendre_oracle(a: u64, p: u64) -> i32 {
        let mut result = 1u64;
        let mut base = a % p;
        let mut e = (p - 1) / 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        if result == 0 {
            0
        } else if result == 1 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn jacobi_basics() {
        for n in (1..50).step_by(2) {
            assert_eq!(jacobi(1, n).unwrap(), 1);
        }
        assert_eq!(legendre_oracle(2, 7), 1);
        assert_eq!(jacobi(2, 7).unwrap(), 1);
        assert_eq!(legendre_oracle(2, 3), -1);
        assert_eq!(jacobi(2, 3).unwrap(), -1);
        assert_eq!(jacobi(3, 9).unwrap(), 0);
        assert_eq!(jacobi(7, 1).unwrap(), 1);
    }

    #[test]
    fn jacobi_rejects_bad_modulus() {
        assert!(jacobi(2, 4).is_err());
        assert!(jacobi(2, 0).is_err());
        assert!(jacobi(2, -3).is_err());
    }

    #[test]
    fn jacobi_matches_euler_criterion_on_primes() {
        for p in odd_primes_up_to(200) {
            for a in 0..p {
                assert_eq!(
                    jacobi(a as i64, p as i64).unwrap(),
                    legendre_oracle(a, p),
                    "({a}/{p})"
                );
            }
        }
    }

    #[test]
    fn jacobi_numerator_multiplicativity() {
        for n in (3..100).step_by(2) {
            for a in 0..=50 {
                for b in 0..=50 {
                    assert_eq!(
                        jacobi(a * b, n).unwrap(),
                        jacobi(a, n).unwrap() * jacobi(b, n).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn r3_closed_examples() {
        assert_eq!(r3_closed(1).unwrap(), 6);
        assert_eq!(r3_closed(3).unwrap(), 8);
        assert_eq!(r3_brute(11), 24);
        assert_eq!(r3_closed(11).unwrap(), 24);
    }

    #[test]
    fn r3_closed_rejects_even_classes() {
        assert_eq!(r3_closed(4), Err(SquaresError::BadResidueClass(4)));
        assert_eq!(r3_closed(2), Err(SquaresError::BadResidueClass(2)));
        assert_eq!(r3_closed(8), Err(SquaresError::BadResidueClass(8)));
    }

    #[test]
    fn r3_closed_matches_brute_force() {
        for n in 1..=400u64 {
            if n % 4 == 1 || n % 4 == 3 {
                assert_eq!(r3_closed(n).unwrap(), r3_brute(n), "n = {n}");
            }
        }
    }

    #[test]
    fn q3_examples() {
        assert_eq!(q3_brute(1), 0);
        assert_eq!(q3_brute(3), 1);
        assert_eq!(q3_brute(11), 3);
    }

    #[test]
    fn residue_tally_examples() {
        let t = residue_tally(3).unwrap();
        assert_eq!((t.residues, t.nonresidues), (1, 0));
        assert_eq!(t.difference(), q3_brute(3) as i64);

        let t = residue_tally(11).unwrap();
        assert_eq!((t.residues, t.nonresidues), (4, 1));
        assert_eq!(t.difference(), q3_brute(11) as i64);

        let t = residue_tally(19).unwrap();
        assert_eq!((t.residues, t.nonresidues), (6, 3));
        assert_eq!(t.difference(), q3_brute(19) as i64);

        assert!(residue_tally(2).is_err());
        assert!(residue_tally(15).is_err());
    }

    #[test]
    fn odd_square_sums_vanish_off_3_mod_8() {
        for l in odd_primes_up_to(500) {
            if l % 8 != 3 {
                assert_eq!(q3_brute(l), 0, "l = {l}");
            }
        }
    }

    #[test]
    fn three_odd_squares_count_at_primes() {
        for l in odd_primes_up_to(1000) {
            if l % 8 != 3 {
                continue;
            }
            let q3 = q3_brute(l);
            let t = residue_tally(l).unwrap();
            assert_eq!(q3, r3_brute(l) / 8, "l = {l}");
            assert_eq!(q3 as i64, t.difference(), "l = {l}");
            assert_eq!(q3 as i64, 2 * t.residues as i64 - ((l - 1) / 2) as i64);
            assert_eq!(q3 % 2, 1, "q3({l}) should be odd");
        }
    }

    #[test]
    fn rule_values() {
        assert_eq!(f_mod4_rule(2).unwrap(), 0);
        assert_eq!(f_mod4_rule(5).unwrap(), 2);
        assert_eq!(f_mod4_rule(7).unwrap(), 0);
        assert_eq!(f_mod4_rule(3).unwrap(), 2);
        assert_eq!(f_mod4_rule(17).unwrap(), 2);
        assert_eq!(f_mod4_rule(9), Err(SquaresError::NotPrime(9)));
    }

    #[test]
    fn primality_by_trial_division() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }
}
