//! Positive-root enumeration for the simple complex Lie algebras.
//!
//! Roots are stored as integer coefficient vectors in the simple-root basis
//! `β = Σ n_j α_j`. Enumeration walks root strings upward from the simple
//! roots: for a positive root `β` and a simple root `α_i`, the sum `β + α_i`
//! is again a root exactly when `p − ⟨β, α_i^∨⟩ > 0`, where `p` counts how
//! many times `α_i` can be subtracted from `β` while staying inside the root
//! system and `⟨β, α_i^∨⟩ = Σ_j n_j C_{ji}` with the Cartan matrix
//! `C_{ij} = 2(α_i, α_j)/(α_j, α_j)`. Everything is exact integer
//! arithmetic; counts are cross-checked against the classical closed forms
//! in the tests.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

/// The nine families of simple complex Lie algebras. Classical ranks vary;
/// exceptional ranks are fixed (E₆–E₈, F₄, G₂).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl Family {
    /// All families, in catalog order.
    pub const ALL: [Family; 9] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
    ];

    /// Inclusive range of ranks this family supports. The lower bounds for
    /// B, C, D avoid the low-rank coincidences (B₁ ≅ A₁, C₂ ≅ B₂, D₃ ≅ A₃).
    pub fn rank_range(self) -> (usize, Option<usize>) {
        match self {
            Family::A => (1, None),
            Family::B => (2, None),
            Family::C => (3, None),
            Family::D => (4, None),
            Family::E6 => (6, Some(6)),
            Family::E7 => (7, Some(7)),
            Family::E8 => (8, Some(8)),
            Family::F4 => (4, Some(4)),
            Family::G2 => (2, Some(2)),
        }
    }

    /// Short name as used in descriptors and CLI arguments.
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
        }
    }

    /// Check that `r` is a valid rank for this family.
    pub fn validate_rank(self, r: usize) -> Result<()> {
        let (lo, hi) = self.rank_range();
        let ok = r >= lo && hi.map_or(true, |h| r <= h);
        if ok {
            Ok(())
        } else {
            Err(Error::UnsupportedFamilyRank {
                family: self.name(),
                rank: r as u32,
            })
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E6" => Ok(Family::E6),
            "E7" => Ok(Family::E7),
            "E8" => Ok(Family::E8),
            "F4" => Ok(Family::F4),
            "G2" => Ok(Family::G2),
            other => Err(Error::InvalidParameter(format!(
                "unknown family `{other}` (expected one of A, B, C, D, E6, E7, E8, F4, G2)"
            ))),
        }
    }
}

/// A root expressed in the simple-root basis: `β = Σ n_j α_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootVector {
    coefficients: Vec<i64>,
}

impl RootVector {
    /// Coefficient `n_i` on the simple root `α_i`; `node` is 1-indexed.
    pub fn coefficient(&self, node: usize) -> i64 {
        self.coefficients[node - 1]
    }

    /// All coefficients, index 0 holding the coefficient on α₁.
    pub fn coefficients(&self) -> &[i64] {
        &self.coefficients
    }

    /// Sum of coefficients (the height of the root).
    pub fn height(&self) -> i64 {
        self.coefficients.iter().sum()
    }
}

/// Cartan matrix with convention `C[i][j] = 2(α_i, α_j)/(α_j, α_j)`, rows
/// and columns 0-indexed. Bourbaki numbering throughout: for B the last
/// simple root is short, for C it is long, for D the final two nodes fork
/// off node r−2, for E₆–E₈ node 2 hangs off node 4 of the chain
/// 1–3–4–5–6(–7–8), for F₄ the arrow points from node 2 to node 3, and for
/// G₂ the first root is short.
pub fn cartan_matrix(family: Family, r: usize) -> Result<Vec<Vec<i64>>> {
    family.validate_rank(r)?;
    let mut c = vec![vec![0i64; r]; r];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let link = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match family {
        Family::A => {
            for i in 0..r.saturating_sub(1) {
                link(&mut c, i, i + 1);
            }
        }
        Family::B => {
            for i in 0..r - 1 {
                link(&mut c, i, i + 1);
            }
            // α_r short: ⟨α_{r−1}, α_r^∨⟩ = −2.
            c[r - 2][r - 1] = -2;
        }
        Family::C => {
            for i in 0..r - 1 {
                link(&mut c, i, i + 1);
            }
            // α_r long: ⟨α_r, α_{r−1}^∨⟩ = −2.
            c[r - 1][r - 2] = -2;
        }
        Family::D => {
            for i in 0..r - 2 {
                link(&mut c, i, i + 1);
            }
            link(&mut c, r - 3, r - 1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            // Chain 1–3–4–5–6(–7–8) with node 2 attached to node 4.
            link(&mut c, 0, 2);
            link(&mut c, 2, 3);
            link(&mut c, 3, 4);
            link(&mut c, 4, 5);
            if r >= 7 {
                link(&mut c, 5, 6);
            }
            if r >= 8 {
                link(&mut c, 6, 7);
            }
            link(&mut c, 1, 3);
        }
        Family::F4 => {
            link(&mut c, 0, 1);
            link(&mut c, 2, 3);
            // α₃, α₄ short: ⟨α₂, α₃^∨⟩ = −2.
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Family::G2 => {
            // α₁ short.
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    Ok(c)
}

/// Complete list of positive roots in simple-root coordinates, sorted by
/// height and then lexicographically. Counts match the classical values
/// (A: r(r+1)/2, B/C: r², D: r(r−1), G₂: 6, F₄: 24, E₆: 36, E₇: 63,
/// E₈: 120).
pub fn positive_roots(family: Family, r: usize) -> Result<Vec<RootVector>> {
    let cartan = cartan_matrix(family, r)?;
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..r {
        let mut simple = vec![0i64; r];
        simple[i] = 1;
        known.insert(simple.clone());
        frontier.push(simple);
    }
    // Breadth-first by height, so every root below the current one is
    // already known when descent counts are taken.
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for i in 0..r {
                let mut p = 0i64;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let pairing: i64 = (0..r).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut roots: Vec<Vec<i64>> = known.into_iter().collect();
    roots.sort_by(|a, b| {
        let (ha, hb) = (a.iter().sum::<i64>(), b.iter().sum::<i64>());
        ha.cmp(&hb).then_with(|| a.cmp(b))
    });
    Ok(roots
        .into_iter()
        .map(|coefficients| RootVector { coefficients })
        .collect())
}
