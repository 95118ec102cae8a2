//! Exact arithmetic for `F2[x]`, the quotient ring `R = F2[x]/(x^n - 1)`, and
//! `GF(2^m)` extension fields.
//!
//! Polynomials are bit-packed: bit `i` of `words[i / 64]` is the coefficient
//! of `x^i`. A [`BinaryPolynomial`] carries an ambient cyclic length `n`;
//! `n > 0` marks an element of `R` (so its degree is below `n`), while
//! `n = 0` means plain `F2[x]`.
//!
//! # Compact notation
//!
//! Coefficient sequences are written in ascending order with run-length
//! exponents: `101^3` is `1 + x^2 + x^3 + x^4`, `1^2` is `1 + x`. Grammar:
//! `poly := token+`, `token := bit ('^' [1-9][0-9]*)?`, ASCII only.
//! Whitespace is accepted (and ignored) between tokens on input and never
//! produced on output.
//!
//! Without whitespace the grammar is ambiguous once an exponent is followed
//! by further bits (`1^201^2` could be `1^20 1^2` or `1^2 0 1^2`), so parsing
//! backtracks over every tokenization and narrows by preference: readings
//! with no explicit `^1`, then readings whose runs alternate (the only kind
//! the formatter emits), then readings that fill the ambient length exactly.
//! Anything still ambiguous is rejected rather than guessed.

use crate::{Error, Result};

const WORD_BITS: usize = 64;

fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A polynomial over F2 in either `F2[x]` (`ambient = 0`) or
/// `F2[x]/(x^ambient - 1)`.
///
/// Values are canonical: no trailing zero words, and when `ambient > 0` the
/// degree is strictly below `ambient`. The zero polynomial has an empty word
/// vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryPolynomial {
    words: Vec<u64>,
    ambient: usize,
}

impl BinaryPolynomial {
    /// The zero polynomial.
    pub fn zero(ambient: usize) -> Self {
        Self { words: Vec::new(), ambient }
    }

    /// The constant polynomial 1.
    pub fn one(ambient: usize) -> Self {
        Self { words: vec![1], ambient }
    }

    /// `x^exp`, checked against the ambient length.
    pub fn monomial(exp: usize, ambient: usize) -> Result<Self> {
        if ambient > 0 && exp >= ambient {
            return Err(Error::AmbientTooSmall { degree: exp, ambient });
        }
        let mut words = vec![0u64; words_for(exp + 1)];
        words[exp / WORD_BITS] |= 1 << (exp % WORD_BITS);
        Ok(Self { words, ambient })
    }

    /// `x^n - 1` as a plain polynomial (over F2 this is `x^n + 1`).
    pub fn xn_minus_one(n: usize) -> Self {
        let mut words = vec![0u64; words_for(n + 1)];
        words[0] |= 1;
        words[n / WORD_BITS] |= 1 << (n % WORD_BITS);
        Self { words, ambient: 0 }
    }

    /// Build from coefficients in ascending order.
    pub fn from_coeffs(coeffs: &[bool], ambient: usize) -> Result<Self> {
        if ambient > 0 && coeffs.len() > ambient {
            return Err(Error::AmbientTooSmall { degree: coeffs.len() - 1, ambient });
        }
        let mut words = vec![0u64; words_for(coeffs.len())];
        for (i, &c) in coeffs.iter().enumerate() {
            if c {
                words[i / WORD_BITS] |= 1 << (i % WORD_BITS);
            }
        }
        let mut p = Self { words, ambient };
        p.trim();
        Ok(p)
    }

    /// Build from the set of exponents with coefficient 1.
    pub fn from_support(support: &[usize], ambient: usize) -> Result<Self> {
        let mut p = Self::zero(ambient);
        for &i in support {
            if ambient > 0 && i >= ambient {
                return Err(Error::AmbientTooSmall { degree: i, ambient });
            }
            if p.words.len() <= i / WORD_BITS {
                p.words.resize(i / WORD_BITS + 1, 0);
            }
            p.words[i / WORD_BITS] ^= 1 << (i % WORD_BITS);
        }
        p.trim();
        Ok(p)
    }

    fn from_words(mut words: Vec<u64>, ambient: usize) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Self { words, ambient }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * WORD_BITS + (WORD_BITS - 1 - last.leading_zeros() as usize))
    }

    /// Coefficient of `x^i`.
    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD_BITS)
            .is_some_and(|w| w >> (i % WORD_BITS) & 1 == 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with coefficient 1, ascending.
    pub fn support(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                out.push(wi * WORD_BITS + w.trailing_zeros() as usize);
                w &= w - 1;
            }
        }
        out
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    /// Reinterpret with a different ambient length (degree must fit).
    pub fn with_ambient(&self, ambient: usize) -> Result<Self> {
        if ambient > 0 {
            if let Some(d) = self.degree() {
                if d >= ambient {
                    return Err(Error::AmbientTooSmall { degree: d, ambient });
                }
            }
        }
        Ok(Self { words: self.words.clone(), ambient })
    }

    /// Drop the ambient marker, viewing the value in plain `F2[x]`.
    pub fn as_plain(&self) -> Self {
        Self { words: self.words.clone(), ambient: 0 }
    }

    fn check_same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch { left: self.ambient, right: other.ambient });
        }
        Ok(())
    }

    /// Sum in the common ring (plain or cyclic; addition never wraps).
    pub fn ring_add(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let (long, short) = if self.words.len() >= other.words.len() {
            (&self.words, &other.words)
        } else {
            (&other.words, &self.words)
        };
        let mut words = long.clone();
        for (i, w) in short.iter().enumerate() {
            words[i] ^= w;
        }
        Ok(Self::from_words(words, self.ambient))
    }

    /// Product, reduced mod `x^n - 1` when the ambient length `n` is nonzero.
    pub fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ambient(other)?;
        let raw = mul_words(&self.words, &other.words);
        let mut p = Self::from_words(raw, self.ambient);
        if self.ambient > 0 {
            p = p.reduce_cyclic(self.ambient);
        }
        Ok(p)
    }

    /// Fold coefficients of `x^j` for `j >= n` onto `x^(j - n)`, i.e. reduce
    /// mod `x^n - 1`, and tag the result with ambient `n`.
    pub fn reduce_cyclic(&self, n: usize) -> Self {
        let mut words = self.words.clone();
        while words_degree(&words).is_some_and(|d| d >= n) {
            // split off bits >= n and xor them shifted down by n
            let high = shr_words(&words, n);
            truncate_bits(&mut words, n);
            for (i, w) in high.iter().enumerate() {
                if i < words.len() {
                    words[i] ^= w;
                } else if *w != 0 {
                    words.resize(i + 1, 0);
                    words[i] ^= w;
                }
            }
        }
        let mut p = Self { words, ambient: n };
        p.trim();
        p
    }

    /// Plain-polynomial division with remainder: `self = q·b + r`,
    /// `deg r < deg b`. Ambient markers are ignored; outputs are plain.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot = vec![0u64; self.words.len().max(1)];
        loop {
            let dr = match words_degree(&rem) {
                Some(d) if d >= db => d,
                _ => break,
            };
            let shift = dr - db;
            quot[shift / WORD_BITS] |= 1 << (shift % WORD_BITS);
            let shifted = shl_words(&b.words, shift);
            for (i, w) in shifted.iter().enumerate() {
                if i < rem.len() {
                    rem[i] ^= w;
                }
            }
        }
        Ok((Self::from_words(quot, 0), Self::from_words(rem, 0)))
    }

    /// Greatest common divisor in plain `F2[x]` (monic automatically).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.as_plain();
        let mut b = other.as_plain();
        while !b.is_zero() {
            let r = a.divmod(&b)?.1;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// True when `self` is nonzero and divides `other` in plain `F2[x]`.
    pub fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return false;
        }
        other.divmod(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    /// The coefficient reversal fixing the constant term:
    /// coefficient `i` of the result is coefficient `(n - i) mod n` of `self`.
    pub fn bar(&self) -> Result<Self> {
        let n = self.ambient;
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        let mut support = Vec::with_capacity(self.weight());
        for i in self.support() {
            support.push(if i == 0 { 0 } else { n - i });
        }
        Self::from_support(&support, n)
    }

    /// Parse compact run-length notation; see the module docs for the
    /// disambiguation rules. `n = 0` parses in plain `F2[x]`.
    pub fn parse_compact(text: &str, n: usize) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::Parse("empty string".into()));
        }
        let mut runs: Vec<(bool, usize)> = Vec::new();
        for segment in text.split_whitespace() {
            runs.extend(parse_segment(segment, n)?);
        }
        let total: usize = runs.iter().map(|&(_, e)| e).sum();
        if n > 0 && total > n {
            return Err(Error::Parse(format!("expanded length {total} exceeds n = {n}")));
        }
        let mut support = Vec::new();
        let mut pos = 0;
        for (bit, len) in runs {
            if bit {
                support.extend(pos..pos + len);
            }
            pos += len;
        }
        Self::from_support(&support, n)
    }

    /// Canonical compact form: maximal runs, `^` for runs of length >= 2,
    /// no whitespace. The zero polynomial prints as `0^n` (or `0` when plain).
    ///
    /// The `^`-form of a few degenerate values (such as `001` with a large
    /// ambient, which would collide with the all-zero string `0^21`) cannot
    /// be re-read unambiguously; those fall back to the literal bit string.
    pub fn format_compact(&self) -> String {
        let candidate = self.format_runs();
        match Self::parse_compact(&candidate, self.ambient) {
            Ok(p) if p == *self => candidate,
            _ => self.format_literal(),
        }
    }

    fn format_runs(&self) -> String {
        let coeffs = self.coeff_string();
        let mut out = String::new();
        let bytes = coeffs.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut j = i;
            while j < bytes.len() && bytes[j] == bytes[i] {
                j += 1;
            }
            out.push(bytes[i] as char);
            if j - i >= 2 {
                out.push('^');
                out.push_str(&(j - i).to_string());
            }
            i = j;
        }
        out
    }

    fn format_literal(&self) -> String {
        self.coeff_string()
    }

    fn coeff_string(&self) -> String {
        let len = match self.degree() {
            Some(d) => d + 1,
            None => self.ambient.max(1),
        };
        (0..len).map(|i| if self.coeff(i) { '1' } else { '0' }).collect()
    }
}

impl std::fmt::Debug for BinaryPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BinaryPolynomial({} @ n={})", self.format_compact(), self.ambient)
    }
}

impl std::fmt::Display for BinaryPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in self.support() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

// --- word-level helpers ---

fn words_degree(words: &[u64]) -> Option<usize> {
    let idx = words.iter().rposition(|&w| w != 0)?;
    Some(idx * WORD_BITS + (WORD_BITS - 1 - words[idx].leading_zeros() as usize))
}

fn shl_words(words: &[u64], shift: usize) -> Vec<u64> {
    let (wo, bo) = (shift / WORD_BITS, shift % WORD_BITS);
    let mut out = vec![0u64; words.len() + wo + 1];
    for (i, &w) in words.iter().enumerate() {
        out[i + wo] |= w << bo;
        if bo > 0 {
            out[i + wo + 1] |= w >> (WORD_BITS - bo);
        }
    }
    out
}

fn shr_words(words: &[u64], shift: usize) -> Vec<u64> {
    let (wo, bo) = (shift / WORD_BITS, shift % WORD_BITS);
    if wo >= words.len() {
        return Vec::new();
    }
    let mut out = vec![0u64; words.len() - wo];
    for i in 0..out.len() {
        out[i] = words[i + wo] >> bo;
        if bo > 0 && i + wo + 1 < words.len() {
            out[i] |= words[i + wo + 1] << (WORD_BITS - bo);
        }
    }
    out
}

fn truncate_bits(words: &mut Vec<u64>, bits: usize) {
    let full = bits / WORD_BITS;
    let rem = bits % WORD_BITS;
    if full < words.len() {
        words.truncate(full + 1);
        if rem == 0 {
            words.pop();
        } else if let Some(last) = words.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
}

fn mul_words(a: &[u64], b: &[u64]) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len()];
    for (wi, &w) in a.iter().enumerate() {
        let mut bits = w;
        while bits != 0 {
            let i = wi * WORD_BITS + bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let (wo, bo) = (i / WORD_BITS, i % WORD_BITS);
            for (j, &bw) in b.iter().enumerate() {
                out[j + wo] ^= bw << bo;
                if bo > 0 {
                    out[j + wo + 1] ^= bw >> (WORD_BITS - bo);
                }
            }
        }
    }
    out
}

// --- compact-notation tokenizer ---

#[derive(Clone, Copy)]
struct Token {
    bit: bool,
    len: usize,
    explicit_exp: bool,
}

fn parse_segment(segment: &str, n: usize) -> Result<Vec<(bool, usize)>> {
    let bytes = segment.as_bytes();
    for &b in bytes {
        if !matches!(b, b'0' | b'1' | b'^' | b'0'..=b'9') {
            return Err(Error::Parse(format!("unexpected character {:?} in {segment:?}", b as char)));
        }
    }
    let mut readings: Vec<Vec<Token>> = Vec::new();
    let cap = n.max(bytes.len() * 10);
    enumerate_tokenizations(bytes, 0, cap, &mut Vec::new(), &mut readings);
    if readings.is_empty() {
        return Err(Error::Parse(format!("malformed token in {segment:?}")));
    }
    let narrow = |cands: Vec<Vec<Token>>, pred: &dyn Fn(&[Token]) -> bool| {
        let sub: Vec<_> = cands.iter().filter(|t| pred(t)).cloned().collect();
        if sub.is_empty() { cands } else { sub }
    };
    let mut cands = readings;
    if cands.len() > 1 {
        // the formatter never writes an explicit ^1
        cands = narrow(cands, &|t| t.iter().all(|tok| !(tok.explicit_exp && tok.len == 1)));
    }
    if cands.len() > 1 {
        // canonical output has maximal runs: adjacent tokens alternate
        cands = narrow(cands, &|t| t.windows(2).all(|w| w[0].bit != w[1].bit));
    }
    if cands.len() > 1 && n > 0 {
        cands = narrow(cands, &|t| t.iter().map(|tok| tok.len).sum::<usize>() == n);
    }
    if cands.len() != 1 {
        return Err(Error::Ambiguous(format!(
            "{segment:?} admits {} readings; separate tokens with spaces",
            cands.len()
        )));
    }
    Ok(cands.pop().unwrap().into_iter().map(|t| (t.bit, t.len)).collect())
}

fn enumerate_tokenizations(
    bytes: &[u8],
    pos: usize,
    cap: usize,
    acc: &mut Vec<Token>,
    out: &mut Vec<Vec<Token>>,
) {
    if out.len() > 512 {
        return;
    }
    if pos == bytes.len() {
        out.push(acc.clone());
        return;
    }
    let bit = match bytes[pos] {
        b'0' => false,
        b'1' => true,
        _ => return,
    };
    if pos + 1 < bytes.len() && bytes[pos + 1] == b'^' {
        let digits_start = pos + 2;
        if digits_start >= bytes.len() || !(b'1'..=b'9').contains(&bytes[digits_start]) {
            return;
        }
        let mut end = digits_start + 1;
        loop {
            let exp: usize = match std::str::from_utf8(&bytes[digits_start..end])
                .ok()
                .and_then(|s| s.parse().ok())
            {
                Some(e) => e,
                None => break,
            };
            let used: usize = acc.iter().map(|t| t.len).sum();
            if used + exp <= cap {
                acc.push(Token { bit, len: exp, explicit_exp: true });
                enumerate_tokenizations(bytes, end, cap, acc, out);
                acc.pop();
            }
            if end < bytes.len() && bytes[end].is_ascii_digit() {
                end += 1;
            } else {
                break;
            }
        }
    } else {
        acc.push(Token { bit, len: 1, explicit_exp: false });
        enumerate_tokenizations(bytes, pos + 1, cap, acc, out);
        acc.pop();
    }
}

/// The reversed cofactor of a divisor of `x^n - 1`: with `g·h = x^n - 1`,
/// returns `x^deg(h) · h(1/x)` as a plain polynomial of degree `n - deg(g)`.
/// It generates the Euclidean dual of the cyclic code generated by `g`.
///
/// The zero polynomial with ambient `n` stands for the class of `x^n - 1`
/// (the zero code) and dualizes to `1`; conversely `reciprocal_dual(1)` has
/// degree `n`, i.e. it reduces to zero in the quotient ring.
pub fn reciprocal_dual(g: &BinaryPolynomial, n: usize) -> Result<BinaryPolynomial> {
    if n == 0 {
        return Err(Error::ZeroLength);
    }
    let xn1 = BinaryPolynomial::xn_minus_one(n);
    let g_plain = if g.is_zero() && g.ambient() == n {
        xn1.clone()
    } else {
        g.as_plain()
    };
    if g_plain.is_zero() {
        return Err(Error::NotADivisor { n });
    }
    let (h, r) = xn1.divmod(&g_plain)?;
    if !r.is_zero() {
        return Err(Error::NotADivisor { n });
    }
    let dh = h.degree().expect("cofactor of a divisor is nonzero");
    let support: Vec<usize> = h.support().into_iter().map(|i| dh - i).collect();
    BinaryPolynomial::from_support(&support, 0)
}

/// `GF(2^m)` presented as `F2[x] / (modulus)` together with a primitive
/// `n`-th root of unity `ζ = α^((2^m - 1)/n)`, where `α = x mod modulus`.
///
/// The modulus is pinned deterministically: the lexicographically smallest
/// polynomial `x^m + c_{m-1} x^{m-1} + ... + c_1 x + 1` (coefficients
/// compared from the constant term up) that is irreducible with `α` a
/// generator of the multiplicative group. Field elements are `u64` bit
/// vectors over the power basis of `α`.
#[derive(Clone)]
pub struct FieldContext {
    m: u32,
    modulus_bits: u64,
    n: usize,
    zeta_log: u64,
    zeta_pows: Vec<u64>,
}

impl FieldContext {
    /// Build the field for an odd cyclic length `n >= 1`: `m` is the
    /// multiplicative order of 2 mod `n`, so `n | 2^m - 1`.
    pub fn build(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLength);
        }
        if n % 2 == 0 {
            return Err(Error::EvenLength(n));
        }
        let m = order_of_two(n);
        if m > 32 {
            return Err(Error::FieldTooLarge { n, m });
        }
        let modulus_bits = canonical_primitive_modulus(m)
            .ok_or_else(|| Error::Internal(format!("no primitive modulus of degree {m}")))?;
        let group_order = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        let zeta_log = group_order / n as u64;
        // α = x is the element 0b10; for m = 1 the field is F2 and α = 1
        let alpha = if m == 1 { 1 } else { 2 };
        let zeta = gf_pow(alpha, zeta_log, modulus_bits, m);
        let mut zeta_pows = Vec::with_capacity(n);
        let mut acc = 1u64;
        for j in 0..n {
            zeta_pows.push(acc);
            if acc == 1 && j > 0 {
                return Err(Error::Internal(format!("ζ has order {j} < n = {n}")));
            }
            acc = gf_mul(acc, zeta, modulus_bits, m);
        }
        if acc != 1 {
            return Err(Error::Internal("ζ^n != 1".into()));
        }
        Ok(Self { m, modulus_bits, n, zeta_log, zeta_pows })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exponent `e` with `ζ = α^e`.
    pub fn zeta_log(&self) -> u64 {
        self.zeta_log
    }

    pub fn modulus(&self) -> BinaryPolynomial {
        let support: Vec<usize> =
            (0..=self.m as usize).filter(|&i| self.modulus_bits >> i & 1 == 1).collect();
        BinaryPolynomial::from_support(&support, 0).expect("plain polynomial")
    }

    /// `ζ^j` for `0 <= j < n`.
    pub fn zeta_pow(&self, j: usize) -> u64 {
        self.zeta_pows[j % self.n]
    }

    /// Field multiplication.
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        gf_mul(a, b, self.modulus_bits, self.m)
    }

    /// Evaluate `g` at `ζ^i`. Exponents reduce mod `n`, so plain polynomials
    /// of any degree (such as `x^n - 1`) are accepted.
    pub fn eval(&self, g: &BinaryPolynomial, i: usize) -> u64 {
        let mut acc = 0u64;
        for j in g.support() {
            acc ^= self.zeta_pows[(i as u128 * j as u128 % self.n as u128) as usize];
        }
        acc
    }
}

impl std::fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FieldContext(GF(2^{}), modulus = {}, n = {}, ζ = α^{})",
            self.m,
            self.modulus(),
            self.n,
            self.zeta_log
        )
    }
}

/// Multiplicative order of 2 modulo odd `n`.
fn order_of_two(n: usize) -> u32 {
    if n == 1 {
        return 1;
    }
    let mut pow = 2u64 % n as u64;
    let mut m = 1;
    while pow != 1 {
        pow = pow * 2 % n as u64;
        m += 1;
    }
    m
}

/// Carryless multiply then reduce by the degree-`m` modulus.
fn gf_mul(a: u64, b: u64, modulus: u64, m: u32) -> u64 {
    let mut prod: u128 = 0;
    let mut a = a as u128;
    let mut shift = 0;
    while a != 0 {
        if a & 1 == 1 {
            prod ^= (b as u128) << shift;
        }
        a >>= 1;
        shift += 1;
    }
    // reduce mod modulus (degree m)
    let mut deg = 128 - prod.leading_zeros();
    while deg > m && deg > 0 {
        let top = deg - 1;
        if prod >> top & 1 == 1 {
            prod ^= (modulus as u128) << (top - m);
        }
        deg = 128 - prod.leading_zeros();
    }
    // one more step when deg == m bit set
    if prod >> m & 1 == 1 {
        prod ^= modulus as u128;
    }
    prod as u64
}

fn gf_pow(mut base: u64, mut exp: u64, modulus: u64, m: u32) -> u64 {
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = gf_mul(acc, base, modulus, m);
        }
        base = gf_mul(base, base, modulus, m);
        exp >>= 1;
    }
    acc
}

fn poly_gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        // a mod b
        let db = 128 - b.leading_zeros();
        loop {
            let da = 128 - a.leading_zeros();
            if da < db {
                break;
            }
            a ^= b << (da - db);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Irreducibility via gcd with `x^(2^i) - x` for `i = 1..=m/2`, plus the
/// final check `x^(2^m) ≡ x (mod f)`.
fn is_irreducible(f: u64, m: u32) -> bool {
    if m == 1 {
        return true;
    }
    let mut r = 2u64; // x
    for _ in 0..m / 2 {
        r = gf_mul(r, r, f, m); // r = x^(2^i) mod f
        let g = poly_gcd_u128((r ^ 2) as u128, f as u128);
        if g != 1 {
            return false;
        }
    }
    let mut r = 2u64;
    for _ in 0..m {
        r = gf_mul(r, r, f, m);
    }
    r == 2
}

fn prime_factors(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x % p == 0 {
            out.push(p);
            while x % p == 0 {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

/// `α = x` generates the multiplicative group mod `f`.
fn alpha_is_primitive(f: u64, m: u32) -> bool {
    if m == 1 {
        return true; // group of order 1
    }
    let order = (1u64 << m) - 1;
    for p in prime_factors(order) {
        if gf_pow(2, order / p, f, m) == 1 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest (constant term up, constant term 1) polynomial
/// of degree `m` that is irreducible with primitive `α = x`.
fn canonical_primitive_modulus(m: u32) -> Option<u64> {
    if m == 1 {
        return Some(0b11); // x + 1
    }
    for t in 0u64..1 << (m - 1) {
        let mut f = (1u64 << m) | 1;
        for j in 0..m - 1 {
            if t >> (m - 2 - j) & 1 == 1 {
                f |= 1 << (1 + j);
            }
        }
        if is_irreducible(f, m) && alpha_is_primitive(f, m) {
            return Some(f);
        }
    }
    None
}
