//! Small number-theoretic helpers over `Z_m`.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Reduce any integer into `[0, m)`.
pub fn reduce(value: i64, m: u32) -> u32 {
    value.rem_euclid(m as i64) as u32
}

pub fn is_unit(r: u32, m: u32) -> bool {
    gcd(r as u64, m as u64) == 1
}

/// Units of `Z_m` in increasing order.
pub fn units(m: u32) -> Vec<u32> {
    (0..m).filter(|&r| is_unit(r, m)).collect()
}

/// Euler's totient.
pub fn totient(m: u32) -> u32 {
    let mut result = m as u64;
    for (p, _) in factorize(m as u64) {
        result = result / p * (p - 1);
    }
    result as u32
}

/// Multiplicative inverse modulo `m`, if `r` is a unit.
pub fn inverse_mod(r: u32, m: u32) -> Option<u32> {
    let (g, x, _) = extended_gcd(r as i64, m as i64);
    if g != 1 {
        return None;
    }
    Some(reduce(x, m))
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        if a < 0 {
            (-a, -1, 0)
        } else {
            (a, 1, 0)
        }
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}

/// Trial-division factorization as `(prime, exponent)` pairs.
pub fn factorize(mut k: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            let mut e = 0;
            while k.is_multiple_of(p) {
                k /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if k > 1 {
        out.push((k, 1));
    }
    out
}

/// Number of distinct prime factors.
pub fn omega(k: u64) -> u32 {
    factorize(k).len() as u32
}

/// The cyclic subgroup `<v>` of `Z_m`, stored as the multiples of `gcd(v, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicSubgroup {
    step: u32,
    modulus: u32,
}

impl CyclicSubgroup {
    pub fn generated_by(v: i64, modulus: u32) -> Self {
        let step = gcd(reduce(v, modulus) as u64, modulus as u64) as u32;
        CyclicSubgroup { step, modulus }
    }

    pub fn contains(&self, k: i64) -> bool {
        reduce(k, self.modulus).is_multiple_of(self.step)
    }

    /// Whether `k` lies in the coset `offset + <v>`.
    pub fn coset_contains(&self, offset: i64, k: i64) -> bool {
        self.contains(k - offset)
    }

    pub fn len(&self) -> u32 {
        self.modulus / self.step
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.modulus).step_by(self.step as usize)
    }
}

/// Solve `a * v = t (mod m)` for `v`, returning the least solution in `[0, m)`.
pub fn solve_linear(a: i64, t: i64, m: u32) -> Option<u32> {
    let a = reduce(a, m) as i64;
    let t = reduce(t, m) as i64;
    let m = m as i64;
    let (g, x, _) = extended_gcd(a, m);
    if t % g != 0 {
        return None;
    }
    let step = m / g;
    Some((x * (t / g)).rem_euclid(step) as u32)
}
