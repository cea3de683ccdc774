//! Built-in group tables: the degenerate gyrogroups every checker is
//! calibrated against.

use crate::table::CayleyTable;

/// Cyclic group of order `n`, `a ⊕ b = (a + b) mod n`.
pub fn cyclic(n: usize) -> CayleyTable {
    assert!(n > 0, "cyclic group order must be positive");
    let entries = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a + b) % n))
        .collect();
    CayleyTable::new(n, entries).unwrap()
}

/// Klein four-group as Z2 x Z2 (bitwise xor on indices).
pub fn klein4() -> CayleyTable {
    let entries = (0..4).flat_map(|a| (0..4).map(move |b| a ^ b)).collect();
    CayleyTable::new(4, entries).unwrap()
}

/// Symmetric group S3 on three points, elements indexed by the
/// lexicographic order of their one-line notation (identity first).
pub fn sym3() -> CayleyTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let entries = (0..6)
        .flat_map(|i| {
            (0..6).map(move |j| {
                // (p_i compose p_j)(x) = p_i(p_j(x))
                let composed = [
                    perms[i][perms[j][0]],
                    perms[i][perms[j][1]],
                    perms[i][perms[j][2]],
                ];
                index_of(composed)
            })
        })
        .collect();
    CayleyTable::new(6, entries).unwrap()
}

/// Dihedral group of the square (order 8): indices 0..3 are rotations
/// r^0..r^3, indices 4..7 are reflections s·r^0..s·r^3.
pub fn dihedral4() -> CayleyTable {
    let mul = |a: usize, b: usize| -> usize {
        let (ar, ai) = (a >= 4, a % 4);
        let (br, bi) = (b >= 4, b % 4);
        match (ar, br) {
            (false, false) => (ai + bi) % 4,
            (false, true) => 4 + (bi + 4 - ai) % 4,
            (true, false) => 4 + (ai + bi) % 4,
            (true, true) => (bi + 4 - ai) % 4,
        }
    };
    let entries = (0..8).flat_map(|a| (0..8).map(move |b| mul(a, b))).collect();
    CayleyTable::new(8, entries).unwrap()
}

/// Quaternion group Q8: indices 0..7 are 1, i, j, k, -1, -i, -j, -k.
pub fn quaternion8() -> CayleyTable {
    // basis multiplication: BASIS[a][b] = (unit, sign) for a*b with
    // 0=1, 1=i, 2=j, 3=k
    const BASIS: [[(usize, bool); 4]; 4] = [
        [(0, false), (1, false), (2, false), (3, false)],
        [(1, false), (0, true), (3, false), (2, true)],
        [(2, false), (3, true), (0, true), (1, false)],
        [(3, false), (2, false), (1, true), (0, true)],
    ];
    let mul = |a: usize, b: usize| -> usize {
        let (ua, sa) = (a % 4, a >= 4);
        let (ub, sb) = (b % 4, b >= 4);
        let (unit, s) = BASIS[ua][ub];
        let negative = s ^ sa ^ sb;
        unit + if negative { 4 } else { 0 }
    };
    let entries = (0..8).flat_map(|a| (0..8).map(move |b| mul(a, b))).collect();
    CayleyTable::new(8, entries).unwrap()
}

/// Direct product of two tables; element `(a1, a2)` maps to `a1 * n2 + a2`.
pub fn direct_product(t1: &CayleyTable, t2: &CayleyTable) -> CayleyTable {
    let (n1, n2) = (t1.order(), t2.order());
    let n = n1 * n2;
    let entries = (0..n)
        .flat_map(|a| {
            (0..n).map(move |b| {
                let (a1, a2) = (a / n2, a % n2);
                let (b1, b2) = (b / n2, b % n2);
                t1.get(a1, b1) * n2 + t2.get(a2, b2)
            })
        })
        .collect();
    CayleyTable::new(n, entries).unwrap()
}

/// The built-in calibration set: Z1..Z8, K4, S3, D4, Q8.
pub fn builtin_tables() -> Vec<(String, CayleyTable)> {
    let mut tables: Vec<(String, CayleyTable)> =
        (1..=8).map(|n| (format!("Z{n}"), cyclic(n))).collect();
    tables.push(("K4".into(), klein4()));
    tables.push(("S3".into(), sym3()));
    tables.push(("D4".into(), dihedral4()));
    tables.push(("Q8".into(), quaternion8()));
    tables
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::validate_loop;

    fn is_associative(t: &CayleyTable) -> bool {
        let n = t.order();
        (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t.get(t.get(a, b), c) == t.get(a, t.get(b, c)))))
    }

    #[test]
    fn builtins_are_groups() {
        for (name, t) in builtin_tables() {
            assert!(validate_loop(&t).is_valid(), "{name} not a loop");
            assert!(is_associative(&t), "{name} not associative");
        }
    }

    #[test]
    fn q8_has_one_involution() {
        let q8 = quaternion8();
        let involutions = (1..8).filter(|&a| q8.get(a, a) == 0).count();
        assert_eq!(involutions, 1);
    }

    #[test]
    fn s3_is_nonabelian() {
        let s3 = sym3();
        assert!((0..6).any(|a| (0..6).any(|b| s3.get(a, b) != s3.get(b, a))));
    }

    #[test]
    fn direct_product_of_cyclics() {
        let z2z2 = direct_product(&cyclic(2), &cyclic(2));
        assert_eq!(z2z2, klein4());
        let z2z4 = direct_product(&cyclic(2), &cyclic(4));
        assert!(validate_loop(&z2z4).is_valid());
        assert!(is_associative(&z2z4));
    }
}
