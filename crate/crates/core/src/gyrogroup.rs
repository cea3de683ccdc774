//! Gyrogroup axiom validation and element-level arithmetic.
//!
//! A loop table is promoted to a [`Gyrogroup`] only after every axiom of the
//! two-sided characterization holds exhaustively: two-sided inverses, the
//! gyrator-defined maps are automorphisms, gyroassociativity in both
//! directions, and both loop properties. The full family of n² gyration
//! permutations is materialized up front so that every later check is a
//! table lookup.

use serde::{Deserialize, Serialize};

use crate::table::{validate_loop, CayleyTable};

/// Axioms checked by [`Gyrogroup::validate`], following the two-sided
/// characterization of gyrogroups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    /// Two-sided identity at element 0. Guaranteed by the loop
    /// precondition, so it never appears in a violation produced here.
    G1,
    /// Two-sided inverse: the left and right inverses of some element differ.
    G2,
    /// Some gyration fails to preserve the operation.
    G3Automorphism,
    /// Left gyroassociative law fails.
    G3Gyroassociativity,
    /// Left loop property fails.
    G4,
    /// Right gyroassociative law fails.
    RightGyroassociativity,
    /// Right loop property fails.
    RightLoop,
}

/// A concrete axiom failure; replaying `witnesses` against the table
/// reproduces the inequality.
///
/// Witness layout per axiom: `G2` is `[a, left_inverse]`;
/// `G3Automorphism` is `[a, b, x, y]`; all others are `[a, b, c]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub witnesses: Vec<usize>,
}

/// A validated gyrogroup: the table plus the materialized inverse map and
/// gyration family. Immutable after construction; safe to share across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gyrogroup {
    table: CayleyTable,
    inv: Vec<usize>,
    /// gyrs[a * n + b][c] = gyr[a, b](c)
    gyrs: Vec<Vec<usize>>,
}

impl Gyrogroup {
    /// Validates every gyrogroup axiom on a loop table, materializing the
    /// inverse map and all n² gyrations on success. On failure, returns the
    /// first witness found for each failing axiom.
    ///
    /// # Panics
    /// The table must already pass [`validate_loop`]; feeding a non-loop
    /// table is a contract breach and panics.
    pub fn validate(table: CayleyTable) -> Result<Gyrogroup, Vec<AxiomViolation>> {
        assert!(
            validate_loop(&table).is_valid(),
            "Gyrogroup::validate requires a loop table; run validate_loop first"
        );
        let n = table.order();
        let mut violations = Vec::new();

        // g2: the unique left and right inverses must coincide.
        let mut inv = vec![0usize; n];
        for a in 0..n {
            let left = (0..n).find(|&b| table.get(b, a) == 0).unwrap();
            if table.get(a, left) != 0 {
                violations.push(AxiomViolation {
                    axiom: Axiom::G2,
                    witnesses: vec![a, left],
                });
            }
            inv[a] = left;
        }
        if !violations.is_empty() {
            // Without two-sided inverses the gyrator identity is undefined.
            return Err(violations);
        }

        // Materialize gyr[a, b](c) = ⊖(a⊕b) ⊕ (a ⊕ (b⊕c)). Each map is a
        // composition of left translations and hence a permutation.
        let mut gyrs = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let neg_ab = inv[table.get(a, b)];
                let perm = (0..n)
                    .map(|c| table.get(neg_ab, table.get(a, table.get(b, c))))
                    .collect();
                gyrs.push(perm);
            }
        }
        let gyr_at = |a: usize, b: usize| -> &Vec<usize> { &gyrs[a * n + b] };

        // g3a: left gyroassociative law.
        'g3a: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table.get(a, table.get(b, c)) != table.get(table.get(a, b), gyr_at(a, b)[c]) {
                        violations.push(AxiomViolation {
                            axiom: Axiom::G3Gyroassociativity,
                            witnesses: vec![a, b, c],
                        });
                        break 'g3a;
                    }
                }
            }
        }

        // g4a: left loop property, gyr[a, b] = gyr[a⊕b, b].
        'g4a: for a in 0..n {
            for b in 0..n {
                let other = gyr_at(table.get(a, b), b);
                if let Some(c) = (0..n).find(|&c| gyr_at(a, b)[c] != other[c]) {
                    violations.push(AxiomViolation {
                        axiom: Axiom::G4,
                        witnesses: vec![a, b, c],
                    });
                    break 'g4a;
                }
            }
        }

        // g4b: right loop property, gyr[a, b] = gyr[a, b⊕a].
        'g4b: for a in 0..n {
            for b in 0..n {
                let other = gyr_at(a, table.get(b, a));
                if let Some(c) = (0..n).find(|&c| gyr_at(a, b)[c] != other[c]) {
                    violations.push(AxiomViolation {
                        axiom: Axiom::RightLoop,
                        witnesses: vec![a, b, c],
                    });
                    break 'g4b;
                }
            }
        }

        // g3b: right gyroassociative law, (a⊕b)⊕c = a⊕(b⊕gyr[b, a]c).
        'g3b: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table.get(table.get(a, b), c)
                        != table.get(a, table.get(b, gyr_at(b, a)[c]))
                    {
                        violations.push(AxiomViolation {
                            axiom: Axiom::RightGyroassociativity,
                            witnesses: vec![a, b, c],
                        });
                        break 'g3b;
                    }
                }
            }
        }

        // g3: every gyration is an automorphism of the operation.
        'g3: for a in 0..n {
            for b in 0..n {
                let gyr = gyr_at(a, b);
                for x in 0..n {
                    for y in 0..n {
                        if gyr[table.get(x, y)] != table.get(gyr[x], gyr[y]) {
                            violations.push(AxiomViolation {
                                axiom: Axiom::G3Automorphism,
                                witnesses: vec![a, b, x, y],
                            });
                            break 'g3;
                        }
                    }
                }
            }
        }

        if violations.is_empty() {
            Ok(Gyrogroup { table, inv, gyrs })
        } else {
            Err(violations)
        }
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn table(&self) -> &CayleyTable {
        &self.table
    }

    /// `a ⊕ b`.
    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.table.get(a, b)
    }

    /// `⊖a`, the two-sided inverse. Involutive, and `neg(0) == 0`.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The gyration `gyr[a, b]` as a permutation slice indexed by argument.
    #[inline]
    pub fn gyr(&self, a: usize, b: usize) -> &[usize] {
        &self.gyrs[a * self.order() + b]
    }

    /// `gyr[a, b](c)`.
    #[inline]
    pub fn gyr_apply(&self, a: usize, b: usize, c: usize) -> usize {
        self.gyrs[a * self.order() + b][c]
    }

    /// The cooperation `a ⊞ b = a ⊕ gyr[a, ⊖b](b)`.
    pub fn coadd(&self, a: usize, b: usize) -> usize {
        self.add(a, self.gyr_apply(a, self.neg(b), b))
    }

    /// The unique `x` with `a ⊕ x = b`, namely `⊖a ⊕ b`.
    pub fn solve_left(&self, a: usize, b: usize) -> usize {
        self.add(self.neg(a), b)
    }

    /// The unique `x` with `x ⊕ a = b`, namely `b ⊞ (⊖a)`.
    pub fn solve_right(&self, a: usize, b: usize) -> usize {
        self.coadd(b, self.neg(a))
    }

    /// The integer multiple `m · a`, via the left recursion
    /// `m·a = a ⊕ ((m-1)·a)` with `m·a = (-m)·(⊖a)` for negative `m`.
    pub fn scalar(&self, m: i64, a: usize) -> usize {
        let (count, base) = if m >= 0 {
            (m as u64, a)
        } else {
            (m.unsigned_abs(), self.neg(a))
        };
        let mut acc = 0;
        for _ in 0..count {
            acc = self.add(base, acc);
        }
        acc
    }

    /// The order of `a`: the least `k > 0` with `k·a = 0`. Equals the size
    /// of the cyclic subgyrogroup generated by `a`.
    pub fn order_of(&self, a: usize) -> usize {
        let mut acc = a;
        let mut k = 1;
        while acc != 0 {
            acc = self.add(a, acc);
            k += 1;
            assert!(k <= self.order(), "element order exceeds group order");
        }
        k
    }

    /// True iff every gyration is the identity, which for the full element
    /// set is equivalent to associativity.
    pub fn is_group(&self) -> bool {
        self.gyrs
            .iter()
            .all(|perm| perm.iter().enumerate().all(|(c, &v)| v == c))
    }
}
