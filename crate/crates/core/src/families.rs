//! Bit vectors, families of them, and the meet (coordinatewise AND).
//!
//! A family is the model set of some Horn function exactly when it is closed
//! under meets; the four counting variants add membership requirements for
//! the all-ones and all-zeros vectors.

use std::collections::HashSet;
use std::fmt;

use crate::{Error, Result, Variant};

/// Widest vector supported by the packed representation.
pub const MAX_WIDTH: usize = 64;

/// A point of `{0,1}^n`.
///
/// Stored as an integer whose most significant of the `width` low bits is
/// `x1`, so numeric order agrees with the order of the binary strings.
/// [`BitVector::get`] hides this: index `i` always means variable `x(i+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    width: usize,
    value: u64,
}

fn width_mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

impl BitVector {
    pub fn new(width: usize, value: u64) -> Result<Self> {
        if width > MAX_WIDTH {
            return Err(Error::cap(format!(
                "vector width {width} exceeds {MAX_WIDTH}"
            )));
        }
        if value & !width_mask(width) != 0 {
            return Err(Error::Input(format!(
                "value {value:#b} does not fit in {width} bits"
            )));
        }
        Ok(BitVector { width, value })
    }

    pub(crate) fn from_raw(width: usize, value: u64) -> Self {
        debug_assert!(width <= MAX_WIDTH && value & !width_mask(width) == 0);
        BitVector { width, value }
    }

    pub fn zeros(width: usize) -> Self {
        BitVector::from_raw(width.min(MAX_WIDTH), 0)
    }

    pub fn ones(width: usize) -> Self {
        let width = width.min(MAX_WIDTH);
        BitVector::from_raw(width, width_mask(width))
    }

    /// Builds a vector from per-variable bits, `bits[0]` being `x1`.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        let width = bits.len();
        let mut v = BitVector::new(width, 0)?;
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.value |= 1 << (width - 1 - i);
            }
        }
        Ok(v)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Integer value with `x1` as the most significant bit.
    pub fn value(&self) -> u64 {
        self.value
    }

    /// Value of variable `x(i+1)`.
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.width, "variable index {i} out of range");
        self.value >> (self.width - 1 - i) & 1 == 1
    }

    pub fn count_ones(&self) -> u32 {
        self.value.count_ones()
    }

    /// True when every coordinate of `self` is at most that of `other`.
    pub fn le(&self, other: &BitVector) -> bool {
        self.value & !other.value == 0
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl std::str::FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::parse(1, i + 1, format!("unexpected `{c}` in bit vector"))),
            })
            .collect::<Result<Vec<_>>>()?;
        BitVector::from_bits(&bits)
    }
}

/// Coordinatewise AND.
pub fn meet(r: &BitVector, s: &BitVector) -> Result<BitVector> {
    if r.width != s.width {
        return Err(Error::WidthMismatch {
            expected: r.width,
            found: s.width,
        });
    }
    Ok(BitVector::from_raw(r.width, r.value & s.value))
}

/// A set of equal-width vectors, iterated in ascending numeric order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VectorFamily {
    width: usize,
    members: Vec<u64>,
}

impl VectorFamily {
    pub fn empty(width: usize) -> Self {
        VectorFamily {
            width,
            members: Vec::new(),
        }
    }

    /// Every vector of the given width. Refuses widths above 24.
    pub fn full(width: usize) -> Result<Self> {
        if width > 24 {
            return Err(Error::cap(format!("full family of width {width} is too large")));
        }
        Ok(VectorFamily {
            width,
            members: (0..1u64 << width).collect(),
        })
    }

    pub fn new<I>(width: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitVector>,
    {
        let mut values = Vec::new();
        for v in members {
            if v.width != width {
                return Err(Error::WidthMismatch {
                    expected: width,
                    found: v.width,
                });
            }
            values.push(v.value);
        }
        Ok(VectorFamily::from_values_unchecked(width, values))
    }

    pub fn from_values<I>(width: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = u64>,
    {
        if width > MAX_WIDTH {
            return Err(Error::cap(format!("vector width {width} exceeds {MAX_WIDTH}")));
        }
        let values: Vec<u64> = values.into_iter().collect();
        if let Some(bad) = values.iter().find(|&&v| v & !width_mask(width) != 0) {
            return Err(Error::Input(format!("value {bad} does not fit in {width} bits")));
        }
        Ok(VectorFamily::from_values_unchecked(width, values))
    }

    pub(crate) fn from_values_unchecked(width: usize, mut values: Vec<u64>) -> Self {
        values.sort_unstable();
        values.dedup();
        VectorFamily {
            width,
            members: values,
        }
    }

    /// Decodes a family over `width <= 6` from a mask with bit `v` set
    /// when the vector of value `v` is a member.
    pub fn from_mask(width: usize, mask: u64) -> Self {
        debug_assert!(width <= 6);
        let members = (0..1u64 << width).filter(|v| mask >> v & 1 == 1).collect();
        VectorFamily { width, members }
    }

    /// Inverse of [`VectorFamily::from_mask`]; `None` above width 6.
    pub fn to_mask(&self) -> Option<u64> {
        (self.width <= 6).then(|| self.members.iter().fold(0, |m, v| m | 1 << v))
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn values(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.members
            .iter()
            .map(move |&v| BitVector::from_raw(self.width, v))
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.width == self.width && self.members.binary_search(&v.value).is_ok()
    }

    pub fn is_subset(&self, other: &VectorFamily) -> bool {
        self.width == other.width
            && self
                .members
                .iter()
                .all(|v| other.members.binary_search(v).is_ok())
    }
}

impl fmt::Display for VectorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// True iff the meet of every pair of members is a member.
pub fn is_meet_closed(family: &VectorFamily) -> bool {
    first_violation(family).is_none()
}

/// A pair of members whose meet is missing, if any.
pub fn first_violation(family: &VectorFamily) -> Option<(BitVector, BitVector)> {
    let present: HashSet<u64> = family.members.iter().copied().collect();
    let m = &family.members;
    for (i, &r) in m.iter().enumerate() {
        for &s in &m[i + 1..] {
            if !present.contains(&(r & s)) {
                return Some((
                    BitVector::from_raw(family.width, r),
                    BitVector::from_raw(family.width, s),
                ));
            }
        }
    }
    None
}

/// The smallest meet-closed family containing `family`.
pub fn meet_closure(family: &VectorFamily) -> VectorFamily {
    let mut seen: HashSet<u64> = family.members.iter().copied().collect();
    let mut list = family.members.clone();
    // Each element is met against every element before it; new meets are
    // appended and reach the end of the loop in turn.
    let mut i = 0;
    while i < list.len() {
        let r = list[i];
        for j in 0..i {
            let u = r & list[j];
            if seen.insert(u) {
                list.push(u);
            }
        }
        i += 1;
    }
    VectorFamily::from_values_unchecked(family.width, list)
}

/// Whether `family` is counted by `variant`.
///
/// The bottom requirement says no variable is fixed to 1 across the family.
/// Over `n = 0` there are no variables, so the empty family qualifies and
/// `H0(0) = 2`.
pub fn variant_member(family: &VectorFamily, variant: Variant) -> bool {
    let n = family.width;
    (!variant.requires_top() || family.contains(&BitVector::ones(n)))
        && (!variant.requires_bottom() || n == 0 || family.contains(&BitVector::zeros(n)))
        && is_meet_closed(family)
}

/// Parses the one-vector-per-line text format. Blank lines and lines
/// starting with `#` are skipped. `width` fixes the width when given;
/// otherwise the first vector decides it.
pub fn parse_family(text: &str, width: Option<usize>) -> Result<VectorFamily> {
    let mut width = width;
    let mut values = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let col0 = raw.find(line).unwrap_or(0);
        let v: BitVector = line.parse().map_err(|e| match e {
            Error::Parse {
                column, message, ..
            } => Error::parse(lineno + 1, col0 + column, message),
            other => other,
        })?;
        match width {
            None => width = Some(v.width),
            Some(w) if w != v.width => {
                return Err(Error::parse(
                    lineno + 1,
                    col0 + 1,
                    format!("vector has width {}, expected {w}", v.width),
                ))
            }
            Some(_) => {}
        }
        values.push(v.value);
    }
    let width = width.ok_or_else(|| {
        Error::Input("empty family file: width cannot be inferred, pass it explicitly".into())
    })?;
    Ok(VectorFamily::from_values_unchecked(width, values))
}

pub fn format_family(family: &VectorFamily) -> String {
    family.iter().map(|v| format!("{v}\n")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn fam(width: usize, items: &[&str]) -> VectorFamily {
        VectorFamily::new(width, items.iter().map(|s| bv(s))).unwrap()
    }

    #[test]
    fn meet_examples() {
        assert_eq!(meet(&bv("0110"), &bv("0101")).unwrap(), bv("0100"));
        let r = bv("1011");
        assert_eq!(meet(&r, &r).unwrap(), r);
        assert_eq!(meet(&r, &BitVector::ones(4)).unwrap(), r);
        assert!(matches!(
            meet(&bv("01"), &bv("011")),
            Err(Error::WidthMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn bit_layout() {
        let v = bv("100");
        assert!(v.get(0));
        assert!(!v.get(2));
        assert_eq!(v.value(), 4);
        assert_eq!(v.to_string(), "100");
        assert_eq!(BitVector::ones(64).value(), u64::MAX);
        assert!(BitVector::new(65, 0).is_err());
        assert!(BitVector::new(2, 4).is_err());
        assert!("01x".parse::<BitVector>().is_err());
    }

    #[test]
    fn closed_examples() {
        assert!(is_meet_closed(&fam(2, &["00", "01", "10", "11"])));
        assert!(!is_meet_closed(&fam(2, &["01", "10"])));
        assert!(is_meet_closed(&VectorFamily::empty(2)));
        assert_eq!(
            first_violation(&fam(2, &["01", "10"])),
            Some((bv("01"), bv("10")))
        );
    }

    #[test]
    fn closure_examples() {
        assert_eq!(meet_closure(&fam(2, &["01", "10"])), fam(2, &["00", "01", "10"]));
        let closed = fam(3, &["000", "011", "001"]);
        assert_eq!(meet_closure(&closed), closed);
        assert_eq!(
            meet_closure(&fam(3, &["011", "101", "110"])),
            fam(3, &["000", "001", "010", "100", "011", "101", "110"])
        );
    }

    #[test]
    fn variant_membership() {
        let f = fam(2, &["11", "01", "00"]);
        for v in Variant::ALL {
            assert!(variant_member(&f, v), "{v}");
        }
        let top_only = fam(2, &["11"]);
        assert!(!variant_member(&top_only, Variant::H));
        assert!(!variant_member(&top_only, Variant::H0));
        assert!(variant_member(&top_only, Variant::H1));
        assert!(variant_member(&top_only, Variant::H01));
        let empty = VectorFamily::empty(2);
        assert_eq!(
            Variant::ALL.map(|v| variant_member(&empty, v)),
            [false, false, false, true]
        );
        let empty0 = VectorFamily::empty(0);
        assert_eq!(
            Variant::ALL.map(|v| variant_member(&empty0, v)),
            [false, true, false, true]
        );
    }

    #[test]
    fn text_format() {
        let f = parse_family("# comment\n11\n\n00\n01\n", None).unwrap();
        assert_eq!(f, fam(2, &["00", "01", "11"]));
        assert_eq!(format_family(&f), "00\n01\n11\n");
        let err = parse_family("01\n011\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 1, .. }), "{err}");
        let err = parse_family("01\n 0a\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }), "{err}");
        assert!(parse_family("", None).is_err());
        assert_eq!(parse_family("", Some(3)).unwrap(), VectorFamily::empty(3));
    }

    #[test]
    fn mask_round_trip() {
        let f = fam(3, &["000", "101", "111"]);
        let m = f.to_mask().unwrap();
        assert_eq!(m, 1 | 1 << 5 | 1 << 7);
        assert_eq!(VectorFamily::from_mask(3, m), f);
    }
}
