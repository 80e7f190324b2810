//! Periodic table rendering and the embedded golden copy of the real table.

use clifperiod_core::classify::{classify, MatrixAlgebra, RingType};
use clifperiod_core::Signature;

pub const TABLE1: &str = include_str!("../data/table1.txt");

/// Compact notation: `R`, `2R`, `H(2)`, `2H(4)`.
pub fn notation(m: &MatrixAlgebra) -> String {
    let mut s = String::new();
    if m.ring.is_double() {
        s.push('2');
    }
    s.push_str(match m.ring.simple_part() {
        RingType::R => "R",
        RingType::C => "C",
        _ => "H",
    });
    if m.size > 1 {
        s.push_str(&format!("({})", m.size));
    }
    s
}

pub fn parse_notation(token: &str) -> Option<MatrixAlgebra> {
    let (double, rest) = match token.strip_prefix('2') {
        Some(r) => (true, r),
        None => (false, token),
    };
    let mut chars = rest.chars();
    let ring = match (chars.next()?, double) {
        ('R', false) => RingType::R,
        ('R', true) => RingType::DoubleR,
        ('H', false) => RingType::H,
        ('H', true) => RingType::DoubleH,
        ('C', false) => RingType::C,
        _ => return None,
    };
    let tail = chars.as_str();
    let size = if tail.is_empty() {
        1
    } else {
        tail.strip_prefix('(')?.strip_suffix(')')?.parse().ok()?
    };
    Some(MatrixAlgebra { ring, size })
}

/// Golden entries indexed `[q][p]`.
pub fn golden() -> Vec<Vec<MatrixAlgebra>> {
    TABLE1
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().map(|t| parse_notation(t).unwrap_or_else(|| panic!("bad table token {t:?}"))).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub p: u32,
    pub q: u32,
    pub expected: MatrixAlgebra,
    pub computed: MatrixAlgebra,
}

/// Computed table, rows `q = 0..=qmax`, columns `p = 0..=pmax`.
pub fn computed(pmax: u32, qmax: u32) -> Vec<Vec<MatrixAlgebra>> {
    (0..=qmax).map(|q| (0..=pmax).map(|p| classify(Signature::const_new(p, q)).algebra()).collect()).collect()
}

/// Differences against the golden table on the overlap with `0..=pmax`, `0..=qmax`.
pub fn diff(pmax: u32, qmax: u32) -> (usize, Vec<Mismatch>) {
    let gold = golden();
    let mut checked = 0;
    let mut out = Vec::new();
    for (q, row) in gold.iter().enumerate().take(qmax as usize + 1) {
        for (p, expected) in row.iter().enumerate().take(pmax as usize + 1) {
            let computed = classify(Signature::const_new(p as u32, q as u32)).algebra();
            checked += 1;
            if computed != *expected {
                out.push(Mismatch { p: p as u32, q: q as u32, expected: *expected, computed });
            }
        }
    }
    (checked, out)
}

pub fn render(pmax: u32, qmax: u32) -> String {
    let rows = computed(pmax, qmax);
    let cells: Vec<Vec<String>> = rows.iter().map(|r| r.iter().map(notation).collect()).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1).max(3);
    let mut s = format!("{:>4} |", "q\\p");
    for p in 0..=pmax {
        s.push_str(&format!(" {p:>width$}"));
    }
    s.push('\n');
    s.push_str(&"-".repeat(6 + (pmax as usize + 1) * (width + 1)));
    s.push('\n');
    for (q, row) in cells.iter().enumerate() {
        s.push_str(&format!("{q:>4} |"));
        for c in row {
            s.push_str(&format!(" {c:>width$}"));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_has_sixty_four_entries() {
        let g = golden();
        assert_eq!(g.len(), 8);
        assert!(g.iter().all(|r| r.len() == 8));
    }

    #[test]
    fn notation_round_trips() {
        for t in ["R", "2R", "R(2)", "C(8)", "2H(16)", "H", "R(128)"] {
            assert_eq!(notation(&parse_notation(t).unwrap()), t);
        }
        assert_eq!(parse_notation("2C(2)"), None);
        assert_eq!(parse_notation("X"), None);
        assert_eq!(parse_notation("R(2"), None);
    }

    #[test]
    fn table_matches() {
        let (checked, bad) = diff(7, 7);
        assert_eq!(checked, 64);
        assert!(bad.is_empty(), "{bad:?}");
    }
}
