//! Boolean functions as truth tables, exact-weight classes, and bias
//! quantities.
//!
//! A function `f: [N] -> {0,1}` with `N = 2^n` is stored as its truth table.
//! The *bias* is `p(f) = |f^{-1}(1)| / N` and the *phase-bias* is
//! `mu(f) = (1/N) * sum_a (-1)^{f(a)} = 1 - 2 p(f)`. The exact-weight class
//! `F(m)` collects all tables with exactly `m` ones; it has `C(N, m)` members.

use alloc::string::String;
use alloc::vec::Vec;

use rand::Rng;

use crate::caps::Caps;
use crate::error::{Error, Result};

/// A Boolean function on `[N]`, `N = 2^n`, stored as its truth table.
///
/// `bits[a]` is `f(a)`. In textual form the table reads address 0 leftmost,
/// so `1000` at `N = 4` is the function with `f(0) = 1` and `f(a) = 0`
/// elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    bits: Vec<u8>,
}

impl TruthTable {
    /// Builds a table from raw bits; the length must be a power of two >= 2
    /// and every entry 0 or 1.
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        validate_address_count(bits.len())?;
        if bits.iter().any(|&b| b > 1) {
            return Err(Error::ParameterOutOfRange {
                name: String::from("truth table entry"),
                value: f64::from(*bits.iter().find(|&&b| b > 1).unwrap()),
            });
        }
        Ok(TruthTable { bits })
    }

    /// The all-zeros (constant 0) function on `n_addr` addresses.
    pub fn zeros(n_addr: usize) -> Result<Self> {
        validate_address_count(n_addr)?;
        Ok(TruthTable {
            bits: alloc::vec![0; n_addr],
        })
    }

    /// The all-ones (constant 1) function on `n_addr` addresses.
    pub fn ones(n_addr: usize) -> Result<Self> {
        validate_address_count(n_addr)?;
        Ok(TruthTable {
            bits: alloc::vec![1; n_addr],
        })
    }

    /// Builds the table whose bit `a` is bit `a` of `word`.
    pub fn from_word(n_addr: usize, word: u128) -> Result<Self> {
        validate_address_count(n_addr)?;
        if n_addr < 128 && word >> n_addr != 0 {
            return Err(Error::WeightOutOfRange {
                m: word.count_ones() as usize,
                n_addr,
            });
        }
        let bits = (0..n_addr).map(|a| ((word >> a) & 1) as u8).collect();
        Ok(TruthTable { bits })
    }

    /// Parses the textual form: one `0`/`1` character per address, address 0
    /// leftmost.
    pub fn from_bit_string(s: &str) -> Result<Self> {
        let bits: Result<Vec<u8>> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::ParameterOutOfRange {
                    name: String::from("truth table character"),
                    value: f64::from(c as u32),
                }),
            })
            .collect();
        TruthTable::new(bits?)
    }

    /// Number of addresses `N`.
    pub fn address_count(&self) -> usize {
        self.bits.len()
    }

    /// Number of address qubits `n = log2 N`.
    pub fn qubits(&self) -> u32 {
        self.bits.len().trailing_zeros()
    }

    /// `f(a)`.
    #[inline]
    pub fn value(&self, a: usize) -> u8 {
        self.bits[a]
    }

    /// `(-1)^{f(a)}` as a float.
    #[inline]
    pub fn sign(&self, a: usize) -> f64 {
        if self.bits[a] == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    /// Hamming weight `|f^{-1}(1)|`.
    pub fn weight(&self) -> usize {
        self.bits.iter().map(|&b| b as usize).sum()
    }

    /// Bias `p(f) = weight / N`.
    pub fn bias(&self) -> f64 {
        self.weight() as f64 / self.address_count() as f64
    }

    /// Phase-bias `mu(f) = (1/N) * sum_a (-1)^{f(a)}`, evaluated as the
    /// definition sum (not via the weight identity, which tests check
    /// separately).
    pub fn phase_bias(&self) -> f64 {
        let signed: f64 = (0..self.address_count()).map(|a| self.sign(a)).sum();
        signed / self.address_count() as f64
    }

    /// Pointwise complement `1 - f`; maps weight `m` to `N - m` and flips the
    /// sign of the phase-bias.
    pub fn complement(&self) -> Self {
        TruthTable {
            bits: self.bits.iter().map(|&b| 1 - b).collect(),
        }
    }

    /// The table packed into an integer with bit `a` = `f(a)`; this is also
    /// the memory-register basis label used by the statevector module.
    pub fn word(&self) -> u128 {
        self.bits
            .iter()
            .enumerate()
            .fold(0u128, |acc, (a, &b)| acc | (u128::from(b) << a))
    }

    /// Textual form, address 0 leftmost.
    pub fn to_bit_string(&self) -> String {
        self.bits.iter().map(|&b| if b == 0 { '0' } else { '1' }).collect()
    }
}

impl core::fmt::Display for TruthTable {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for &b in &self.bits {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

fn validate_address_count(n_addr: usize) -> Result<()> {
    if n_addr < 2 || !n_addr.is_power_of_two() {
        return Err(Error::AddressCountNotPowerOfTwo(n_addr));
    }
    Ok(())
}

/// An exact-weight hypothesis `H_m`: the class `F(m)` of all weight-`m`
/// tables on `N` addresses under the uniform prior.
///
/// Derived quantities: bias `p = m/N`, phase-bias `mu = 1 - 2p`, and `mu^2`.
/// With `N` a power of two these are all exact in `f64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiasHypothesis {
    n_addr: usize,
    m: usize,
}

impl BiasHypothesis {
    pub fn new(n_addr: usize, m: usize) -> Result<Self> {
        validate_address_count(n_addr)?;
        if m > n_addr {
            return Err(Error::WeightOutOfRange { m, n_addr });
        }
        Ok(BiasHypothesis { n_addr, m })
    }

    /// The class of the given table.
    pub fn of(table: &TruthTable) -> Self {
        BiasHypothesis {
            n_addr: table.address_count(),
            m: table.weight(),
        }
    }

    pub fn address_count(&self) -> usize {
        self.n_addr
    }

    pub fn weight(&self) -> usize {
        self.m
    }

    /// Bias `p = m / N`.
    pub fn p(&self) -> f64 {
        self.m as f64 / self.n_addr as f64
    }

    /// Phase-bias `mu = 1 - 2m/N`.
    pub fn mu(&self) -> f64 {
        1.0 - 2.0 * self.m as f64 / self.n_addr as f64
    }

    /// Squared phase-bias `mu^2`; everything observable through the query
    /// interface depends on the hypothesis only through this.
    pub fn mu_sq(&self) -> f64 {
        let mu = self.mu();
        mu * mu
    }

    /// Number of tables in the class, `C(N, m)`.
    pub fn class_size(&self) -> u128 {
        binomial(self.n_addr as u64, self.m as u64)
    }

    /// The complementary hypothesis `H_{N-m}`; induces the identical
    /// ensemble state since complementing flips only a global phase.
    pub fn complement(&self) -> Self {
        BiasHypothesis {
            n_addr: self.n_addr,
            m: self.n_addr - self.m,
        }
    }
}

/// Exact binomial coefficient `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Iterator over all weight-`m` truth tables on `N` addresses.
///
/// Tables are produced in increasing order of the packed word
/// ([`TruthTable::word`]), i.e. the single-one tables at `N = 4` come out as
/// `1000, 0100, 0010, 0001`. Each step advances to the next word with the
/// same popcount (Gosper's hack), so the whole class costs `O(C(N,m) * N)`.
#[derive(Debug, Clone)]
pub struct WeightClassIter {
    n_addr: usize,
    next_word: Option<u128>,
}

impl Iterator for WeightClassIter {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        let word = self.next_word?;
        let table = TruthTable::from_word(self.n_addr, word)
            .expect("iterator maintains word < 2^N");
        self.next_word = if word == 0 {
            None
        } else {
            let c = word & word.wrapping_neg();
            let r = word + c;
            let next = (((r ^ word) >> 2) / c) | r;
            if self.n_addr < 128 && next >> self.n_addr != 0 {
                None
            } else {
                Some(next)
            }
        };
        Some(table)
    }
}

/// Enumerates the exact-weight class `F(m)` on `N` addresses.
///
/// Errors if the class has more than `caps.max_enum_class` members.
pub fn enumerate_weight_class(n_addr: usize, m: usize, caps: &Caps) -> Result<WeightClassIter> {
    let h = BiasHypothesis::new(n_addr, m)?;
    let size = h.class_size();
    if size > caps.max_enum_class {
        return Err(Error::ClassTooLarge {
            size,
            cap: caps.max_enum_class,
        });
    }
    let first = if m == 0 {
        0
    } else if m == 128 {
        u128::MAX
    } else {
        (1u128 << m) - 1
    };
    Ok(WeightClassIter {
        n_addr,
        next_word: Some(first),
    })
}

/// Draws a table uniformly from `F(m)` on `N` addresses.
///
/// Samples the support as an `m`-subset of `[N]` by partial Fisher-Yates on
/// the index array, which is exactly uniform and `O(N)`.
pub fn sample_uniform<R: Rng + ?Sized>(n_addr: usize, m: usize, rng: &mut R) -> Result<TruthTable> {
    BiasHypothesis::new(n_addr, m)?;
    let mut indices: Vec<usize> = (0..n_addr).collect();
    let mut bits = alloc::vec![0u8; n_addr];
    for i in 0..m {
        let j = rng.gen_range(i..n_addr);
        indices.swap(i, j);
        bits[indices[i]] = 1;
    }
    Ok(TruthTable { bits })
}

/// Draws a table uniformly from the hypothesis' class.
pub fn sample_from_hypothesis<R: Rng + ?Sized>(
    h: &BiasHypothesis,
    rng: &mut R,
) -> TruthTable {
    sample_uniform(h.address_count(), h.weight(), rng)
        .expect("hypothesis is validated at construction")
}
