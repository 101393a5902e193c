#![allow(clippy::needless_range_loop)]

//! Néron–Severi lattice model: an integral intersection form with a
//! canonical class, and the numerical tools every other module reads
//! intersection numbers from (Riemann–Roch, adjunction, Hodge index).

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An integral symmetric bilinear form on a free module of finite rank,
/// together with the class of the canonical divisor and `χ(O_X)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    labels: Vec<String>,
    gram: Vec<Vec<i64>>,
    canonical: Vec<i64>,
    chi_o: i64,
}

/// Inertia of a real symmetric form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Lattice {
    pub fn new(
        labels: Vec<String>,
        gram: Vec<Vec<i64>>,
        canonical: Vec<i64>,
        chi_o: i64,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidLattice("rank 0".into()));
        }
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidLattice(format!("gram matrix is not {n}x{n}")));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::InvalidLattice(format!(
                        "gram matrix not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        if canonical.len() != n {
            return Err(Error::RankMismatch { rank: n, got: canonical.len() });
        }
        Ok(Lattice { labels, gram, canonical, chi_o })
    }

    /// Rank-1 lattice spanned by the polarization `H` with `H² = degree`
    /// and `K = canonical_multiple · H`.
    pub fn polarization(degree: i64, canonical_multiple: i64, chi_o: i64) -> Result<Arc<Self>> {
        if degree < 1 {
            return Err(Error::OutOfRange { what: "degree", value: degree });
        }
        Self::new(vec!["H".into()], vec![vec![degree]], vec![canonical_multiple], chi_o).map(Arc::new)
    }

    /// `NS` of the elliptic quintic scroll in the basis `{Γ, f}`: a section
    /// with `Γ² = 1` and a ruling `f`, `K = −2Γ + f`, `χ(O) = 0`.
    pub fn elliptic_quintic_scroll() -> Arc<Self> {
        Arc::new(
            Self::new(
                vec!["Γ".into(), "f".into()],
                vec![vec![1, 1], vec![1, 0]],
                vec![-2, 1],
                0,
            )
            .expect("scroll lattice is well formed"),
        )
    }

    /// The Hirzebruch surface `Σ₁` in the basis `{L, f}` with `L² = −1`
    /// (minimal section) and `f` a fibre; `K = −2L − 3f`, `χ(O) = 1`.
    pub fn hirzebruch_one() -> Arc<Self> {
        Arc::new(
            Self::new(
                vec!["L".into(), "f".into()],
                vec![vec![-1, 1], vec![1, 0]],
                vec![-2, -3],
                1,
            )
            .expect("Hirzebruch lattice is well formed"),
        )
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn chi_o(&self) -> i64 {
        self.chi_o
    }

    pub fn class<I, R>(self: &Arc<Self>, coords: I) -> Result<DivisorClass>
    where
        I: IntoIterator<Item = R>,
        R: Into<Rational>,
    {
        let coords: Vec<Rational> = coords.into_iter().map(Into::into).collect();
        if coords.len() != self.rank() {
            return Err(Error::RankMismatch { rank: self.rank(), got: coords.len() });
        }
        Ok(DivisorClass { lattice: Arc::clone(self), coords })
    }

    pub fn canonical_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass {
            lattice: Arc::clone(self),
            coords: self.canonical.iter().map(|&c| Rational::from_int(c)).collect(),
        }
    }

    pub fn zero_class(self: &Arc<Self>) -> DivisorClass {
        DivisorClass { lattice: Arc::clone(self), coords: vec![Rational::zero(); self.rank()] }
    }

    /// The basis vector with the given label.
    pub fn basis_class(self: &Arc<Self>, label: &str) -> Result<DivisorClass> {
        let idx = self
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownClass(label.to_string()))?;
        let mut coords = vec![Rational::zero(); self.rank()];
        coords[idx] = Rational::one();
        Ok(DivisorClass { lattice: Arc::clone(self), coords })
    }

    /// Inertia of the gram matrix by exact symmetric Gaussian elimination.
    pub fn signature(&self) -> Signature {
        let n = self.rank();
        let mut a: Vec<Vec<Rational>> = self
            .gram
            .iter()
            .map(|row| row.iter().map(|&x| Rational::from_int(x)).collect())
            .collect();
        let mut sig = Signature { positive: 0, negative: 0, zero: 0 };
        let mut p = 0;
        while p < n {
            if a[p][p].is_zero() {
                if let Some(i) = (p + 1..n).find(|&i| !a[i][i].is_zero()) {
                    swap_congruent(&mut a, p, i);
                } else if let Some((i, j)) = (p..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[i][j].is_zero())
                {
                    // e_i += e_j makes the (i,i) entry 2·a_ij ≠ 0
                    for k in 0..n {
                        let v = a[j][k].clone();
                        a[i][k] = &a[i][k] + &v;
                    }
                    for k in 0..n {
                        let v = a[k][j].clone();
                        a[k][i] = &a[k][i] + &v;
                    }
                    swap_congruent(&mut a, p, i);
                } else {
                    sig.zero += n - p;
                    break;
                }
            }
            let pivot = a[p][p].clone();
            for r in p + 1..n {
                if a[r][p].is_zero() {
                    continue;
                }
                let f = &a[r][p] / &pivot;
                for k in p..n {
                    let v = &f * &a[p][k];
                    a[r][k] = &a[r][k] - &v;
                }
                for k in p..n {
                    let v = &f * &a[k][p];
                    a[k][r] = &a[k][r] - &v;
                }
            }
            if pivot.is_positive() {
                sig.positive += 1;
            } else {
                sig.negative += 1;
            }
            p += 1;
        }
        sig
    }

    /// Whether the form has the signature `(1, n−1)` demanded by the Hodge
    /// index theorem.
    pub fn has_hodge_signature(&self) -> bool {
        let s = self.signature();
        s.positive == 1 && s.zero == 0
    }
}

fn swap_congruent(a: &mut [Vec<Rational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// A (rational) class in a [`Lattice`].
#[derive(Clone, PartialEq, Eq)]
pub struct DivisorClass {
    lattice: Arc<Lattice>,
    coords: Vec<Rational>,
}

impl DivisorClass {
    pub fn lattice(&self) -> &Arc<Lattice> {
        &self.lattice
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    fn same_lattice(&self, other: &DivisorClass) -> Result<()> {
        if Arc::ptr_eq(&self.lattice, &other.lattice) || *self.lattice == *other.lattice {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    fn belongs_to(&self, lattice: &Lattice) -> Result<()> {
        if std::ptr::eq(Arc::as_ptr(&self.lattice), lattice) || *self.lattice == *lattice {
            Ok(())
        } else {
            Err(Error::LatticeMismatch)
        }
    }

    pub fn try_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.same_lattice(other)?;
        Ok(DivisorClass {
            lattice: Arc::clone(&self.lattice),
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        self.try_add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, k: &Rational) -> DivisorClass {
        DivisorClass {
            lattice: Arc::clone(&self.lattice),
            coords: self.coords.iter().map(|c| c * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    /// Self-intersection.
    pub fn square(&self) -> Rational {
        pairing(&self.lattice, &self.coords, &self.coords)
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, l) in self.coords.iter().zip(self.lattice.labels()) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){l}")?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

fn pairing(lattice: &Lattice, a: &[Rational], b: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let g = lattice.gram[i][j];
            if g != 0 && !bj.is_zero() {
                acc = acc + &(ai * bj) * g;
            }
        }
    }
    acc
}

/// The intersection number `D1 · D2`.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<Rational> {
    d1.same_lattice(d2)?;
    Ok(pairing(&d1.lattice, &d1.coords, &d2.coords))
}

/// Whether `(H·D)² ≥ H²·D²`. Requires `H² > 0`.
pub fn hodge_index_ok(h: &DivisorClass, d: &DivisorClass) -> Result<bool> {
    let h2 = h.square();
    if !h2.is_positive() {
        return Err(Error::NonPositivePolarization(h2));
    }
    let hd = intersect(h, d)?;
    Ok(&hd * &hd >= &h2 * &d.square())
}

/// Riemann–Roch on a surface: `χ(O_X(D)) = χ(O_X) + D·(D−K)/2`.
pub fn rr_surface_chi(lattice: &Lattice, d: &DivisorClass) -> Result<Rational> {
    d.belongs_to(lattice)?;
    let k = d.lattice.canonical_class();
    let d_minus_k = d.try_sub(&k)?;
    Ok(intersect(d, &d_minus_k)? / 2 + lattice.chi_o)
}

/// Adjunction: `2g(C) − 2 = C·(C+K)`.
pub fn adjunction_two_g_minus_2(lattice: &Lattice, c: &DivisorClass) -> Result<Rational> {
    c.belongs_to(lattice)?;
    let k = c.lattice.canonical_class();
    intersect(c, &c.try_add(&k)?)
}
