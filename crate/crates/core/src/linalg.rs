//! Exact rank computation over a field.
//!
//! The elimination is generic over any scalar that provides field arithmetic
//! through `num-traits`; the crate uses it with [`Rational`](crate::Rational)
//! for characteristic zero and [`ModP`] for prime characteristic.

use std::collections::HashMap;
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

/// Field scalars usable by [`rank`].
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
}

impl<T> Field for T where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
        + Send
        + Sync
{
}

/// Sparse row: `(column, nonzero value)` pairs sorted by column.
pub type SparseRow<F> = Vec<(usize, F)>;

/// `a - factor * b` on sparse rows, dropping cancelled entries.
fn axpy<F: Field>(a: &SparseRow<F>, factor: &F, b: &SparseRow<F>) -> SparseRow<F> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, -(factor.clone() * b[j].1.clone())));
            j += 1;
        } else {
            let v = a[i].1.clone() - factor.clone() * b[j].1.clone();
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank of the matrix whose rows are `rows`.
///
/// Rows are reduced one at a time against the pivots found so far (keyed by
/// leading column); a row that reduces to zero is dependent.
pub fn rank<F: Field>(rows: impl IntoIterator<Item = SparseRow<F>>) -> usize {
    let mut pivots: HashMap<usize, SparseRow<F>> = HashMap::new();
    for mut row in rows {
        row.retain(|(_, v)| !v.is_zero());
        while let Some((lead, lead_val)) = row.first().cloned() {
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = lead_val / p[0].1.clone();
                    row = axpy(&row, &factor, p);
                }
                None => {
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Integers modulo a prime chosen at run time.
///
/// `p == 0` marks the modulus-free constants produced by `Zero::zero()` and
/// `One::one()`; they adopt the modulus of whatever they are combined with.
#[derive(Clone, Copy, Debug)]
pub struct ModP {
    value: u64,
    p: u64,
}

impl ModP {
    pub fn new(value: i64, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        ModP {
            value: value.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    fn modulus(self, other: ModP) -> u64 {
        debug_assert!(self.p == 0 || other.p == 0 || self.p == other.p);
        self.p.max(other.p)
    }

    fn reduce(value: u128, p: u64) -> ModP {
        if p == 0 {
            ModP { value: value as u64, p }
        } else {
            ModP {
                value: (value % p as u128) as u64,
                p,
            }
        }
    }

    fn inverse(self) -> ModP {
        assert!(self.value != 0, "division by zero in ModP");
        if self.p == 0 {
            return self;
        }
        // Fermat
        let mut result = 1u128;
        let mut base = self.value as u128;
        let mut e = self.p - 2;
        let p = self.p as u128;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        ModP {
            value: result as u64,
            p: self.p,
        }
    }
}

impl PartialEq for ModP {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Add for ModP {
    type Output = ModP;
    fn add(self, rhs: ModP) -> ModP {
        ModP::reduce(self.value as u128 + rhs.value as u128, self.modulus(rhs))
    }
}

impl Sub for ModP {
    type Output = ModP;
    fn sub(self, rhs: ModP) -> ModP {
        self + (-rhs)
    }
}

impl Mul for ModP {
    type Output = ModP;
    fn mul(self, rhs: ModP) -> ModP {
        ModP::reduce(self.value as u128 * rhs.value as u128, self.modulus(rhs))
    }
}

impl Div for ModP {
    type Output = ModP;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: ModP) -> ModP {
        let p = self.modulus(rhs);
        let rhs = ModP { p, ..rhs };
        self * rhs.inverse()
    }
}

impl Neg for ModP {
    type Output = ModP;
    fn neg(self) -> ModP {
        if self.value == 0 {
            return self;
        }
        assert!(self.p != 0, "cannot negate a modulus-free constant");
        ModP {
            value: self.p - self.value,
            p: self.p,
        }
    }
}

impl Zero for ModP {
    fn zero() -> Self {
        ModP { value: 0, p: 0 }
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for ModP {
    fn one() -> Self {
        ModP { value: 1, p: 0 }
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
