//! Root systems and exact defining representations of `sl(4)` and `so(5)`,
//! together with the carrier-subalgebra validators used before any twist
//! factor is built on a Borel pair `{H, E}`.
//!
//! Conventions baked in here (and checked, not assumed, at build time):
//!
//! * Cartan generators are normalized so that `[H_lambda, E_lambda] =
//!   E_lambda` for the designated Borel pairs; for `sl(4)` this puts a
//!   factor 1/2 on differences of diagonal matrix units.
//! * `so(5)` is realized by antisymmetric Okubo matrices
//!   `(M_ij)_ab = delta_ia delta_jb - delta_ib delta_ja`.
//! * Negative-root generators of `so(5)` are fixed by `[E_a, E_-a] = H_a`
//!   with `E_-a` proportional to the conjugate transpose of `E_a`.
//! * The root vector attached to `e2 - e3` in `sl(4)` carries a minus sign
//!   (the normalization that makes the mixed structure constant on the
//!   carrier equal to -1), and the vector attached to `e2` in `so(5)` is
//!   `-E2`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::linalg::{FieldMatrix, Matrix};
use crate::scalar::FieldElem;
use crate::verify::{CheckReport, CheckStatus};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("unknown algebra `{0}` (expected sl4 or so5)")]
    UnknownAlgebra(String),
    #[error("no generator named `{0}` in this representation")]
    MissingGenerator(String),
    #[error("no root vector attached to {0}")]
    MissingRootVector(Root),
    #[error("bracket [{lhs}, {rhs}] is not in the span of the provided generators")]
    NotInSpan { lhs: Root, rhs: Root },
    #[error("construction inconsistency: {0}")]
    Inconsistent(String),
}

/// A root in the orthogonal e-basis, with exact rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root {
    coords: Vec<Rational64>,
}

impl Root {
    pub fn new(coords: Vec<Rational64>) -> Self {
        Root { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Root {
            coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect(),
        }
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Root) -> Root {
        assert_eq!(self.dim(), other.dim());
        Root::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Root) -> Root {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|a| -a).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Euclidean pairing in the e-basis.
    pub fn dot(&self, other: &[Rational64]) -> Rational64 {
        assert_eq!(self.dim(), other.len());
        self.coords
            .iter()
            .zip(other)
            .map(|(a, b)| a * b)
            .fold(Rational64::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if c.is_positive() {
                if !first {
                    write!(f, "+")?;
                }
            } else {
                write!(f, "-")?;
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{}", a)?;
            }
            write!(f, "e{}", k + 1)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// A finite root system with a fixed choice of simple roots.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub name: String,
    pub rank: usize,
    roots: BTreeSet<Root>,
    simple: Vec<Root>,
}

impl RootSystem {
    pub fn new(name: &str, rank: usize, roots: Vec<Root>, simple: Vec<Root>) -> Self {
        let set: BTreeSet<Root> = roots.into_iter().collect();
        assert!(
            set.iter().all(|r| set.contains(&r.neg())),
            "not closed under negation"
        );
        RootSystem {
            name: name.to_string(),
            rank,
            roots: set,
            simple,
        }
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.roots.contains(r)
    }

    pub fn roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter()
    }

    /// Height of a root: the coefficient sum of its expansion over the
    /// simple roots, solved exactly. `None` if the vector is not in the
    /// simple-root span.
    pub fn height(&self, r: &Root) -> Option<BigRational> {
        let n = r.dim();
        let k = self.simple.len();
        // solve  sum_j x_j * simple_j = r  on the n x (k+1) augmented
        // system over Q
        let mut aug: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); k + 1]; n];
        for (j, s) in self.simple.iter().enumerate() {
            for i in 0..n {
                aug[i][j] = big(s.coords[i]);
            }
        }
        for i in 0..n {
            aug[i][k] = big(r.coords[i]);
        }
        let mut row = 0usize;
        let mut pivot_rows = Vec::new();
        for col in 0..k {
            let Some(p) = (row..n).find(|&i| !aug[i][col].is_zero()) else {
                continue;
            };
            aug.swap(row, p);
            let piv = aug[row][col].clone();
            for j in col..=k {
                let t = &aug[row][j] / &piv;
                aug[row][j] = t;
            }
            let src = aug[row].clone();
            for (i, r_i) in aug.iter_mut().enumerate() {
                if i != row && !r_i[col].is_zero() {
                    let f = r_i[col].clone();
                    for j in col..=k {
                        r_i[j] = &r_i[j] - &f * &src[j];
                    }
                }
            }
            pivot_rows.push(row);
            row += 1;
        }
        // consistency: zero rows must have zero rhs
        for i in row..n {
            if !aug[i][k].is_zero() {
                return None;
            }
        }
        let mut sum = BigRational::zero();
        for r_i in pivot_rows {
            sum += aug[r_i][k].clone();
        }
        Some(sum)
    }

    /// The `A1` system `{±(e1-e2)}`.
    pub fn a1() -> Self {
        let a = Root::from_ints(&[1, -1]);
        RootSystem::new("A1", 1, vec![a.clone(), a.neg()], vec![a])
    }

    /// The `A3` system `{e_i - e_j}` in a 4-dimensional e-basis.
    pub fn a3() -> Self {
        let mut roots = Vec::new();
        for i in 0..4usize {
            for j in 0..4usize {
                if i != j {
                    let mut c = [0i64; 4];
                    c[i] = 1;
                    c[j] = -1;
                    roots.push(Root::from_ints(&c));
                }
            }
        }
        let simple = vec![
            Root::from_ints(&[1, -1, 0, 0]),
            Root::from_ints(&[0, 1, -1, 0]),
            Root::from_ints(&[0, 0, 1, -1]),
        ];
        RootSystem::new("A3", 3, roots, simple)
    }

    /// The `B2` system `{±e1, ±e2, ±e1±e2}`.
    pub fn b2() -> Self {
        let mut roots = Vec::new();
        for c in [
            [1, 0],
            [-1, 0],
            [0, 1],
            [0, -1],
            [1, 1],
            [1, -1],
            [-1, 1],
            [-1, -1],
        ] {
            roots.push(Root::from_ints(&c));
        }
        let simple = vec![Root::from_ints(&[1, -1]), Root::from_ints(&[0, 1])];
        RootSystem::new("B2", 2, roots, simple)
    }

    /// Number of roots in the maximal `step`-string through `r`
    /// (`r + k*step` for consecutive integers `k`).
    pub fn series_len(&self, r: &Root, step: &Root) -> usize {
        let mut len = 1usize;
        let mut up = r.add(step);
        while self.contains(&up) {
            len += 1;
            up = up.add(step);
        }
        let mut down = r.sub(step);
        while self.contains(&down) {
            len += 1;
            down = down.sub(step);
        }
        len
    }
}

fn big(r: Rational64) -> BigRational {
    BigRational::new((*r.numer()).into(), (*r.denom()).into())
}

fn field_from_rational64(r: Rational64) -> FieldElem {
    FieldElem::from_ratio(*r.numer(), *r.denom())
}

/// Constituent roots of a top root: the unordered decompositions
/// `lambda' + lambda'' = lambda0_perp` with neither summand combinable
/// with the top root, split into two halves so that paired entries share
/// an index. The member closer to the simple roots (smaller height, ties
/// broken lexicographically) goes into `pi_prime`; a coincident pair
/// `lambda' = lambda''` appears once on each side.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstituentSet {
    pub pi_prime: Vec<Root>,
    pub pi_double_prime: Vec<Root>,
}

impl ConstituentSet {
    pub fn is_empty(&self) -> bool {
        self.pi_prime.is_empty()
    }

    pub fn contains_double_prime(&self, r: &Root) -> bool {
        self.pi_double_prime.contains(r)
    }
}

pub fn constituent_roots(rs: &RootSystem, lambda0_perp: &Root) -> ConstituentSet {
    assert!(rs.contains(lambda0_perp), "top root not in the system");
    let mut seen: BTreeSet<(Root, Root)> = BTreeSet::new();
    let mut pairs: Vec<(Root, Root)> = Vec::new();
    for lp in rs.roots() {
        let lpp = lambda0_perp.sub(lp);
        if !rs.contains(&lpp) {
            continue;
        }
        if rs.contains(&lp.add(lambda0_perp)) || rs.contains(&lpp.add(lambda0_perp)) {
            continue;
        }
        let key = if *lp <= lpp {
            (lp.clone(), lpp.clone())
        } else {
            (lpp.clone(), lp.clone())
        };
        if !seen.insert(key) {
            continue;
        }
        // deterministic split: smaller (height, lex) goes to pi'
        let (a, b) = (lp.clone(), lpp);
        let ha = rs.height(&a);
        let hb = rs.height(&b);
        let (first, second) = if (ha, a.clone()) <= (hb, b.clone()) {
            (a, b)
        } else {
            (b, a)
        };
        pairs.push((first, second));
    }
    pairs.sort();
    ConstituentSet {
        pi_prime: pairs.iter().map(|(a, _)| a.clone()).collect(),
        pi_double_prime: pairs.iter().map(|(_, b)| b.clone()).collect(),
    }
}

/// A named Lie algebra in its defining representation: exact matrices per
/// generator, the root attached to each root-vector generator, normalized
/// root-vector words, and the dual vectors of the Cartan generators.
#[derive(Clone)]
pub struct AlgebraRep {
    pub name: String,
    pub root_system: RootSystem,
    pub dim: usize,
    gens: BTreeMap<String, FieldMatrix>,
    cartan_vec: BTreeMap<String, Vec<Rational64>>,
    root_word: BTreeMap<Root, (FieldElem, String)>,
}

impl AlgebraRep {
    pub fn gen(&self, name: &str) -> Result<&FieldMatrix, AlgebraError> {
        self.gens
            .get(name)
            .ok_or_else(|| AlgebraError::MissingGenerator(name.to_string()))
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &String> {
        self.gens.keys()
    }

    pub fn generators(&self) -> &BTreeMap<String, FieldMatrix> {
        &self.gens
    }

    pub fn is_cartan(&self, name: &str) -> bool {
        self.cartan_vec.contains_key(name)
    }

    /// The normalized root vector `L_lambda` as `coeff * generator`.
    pub fn root_word(&self, root: &Root) -> Result<(FieldElem, &str), AlgebraError> {
        self.root_word
            .get(root)
            .map(|(c, n)| (c.clone(), n.as_str()))
            .ok_or_else(|| AlgebraError::MissingRootVector(root.clone()))
    }

    /// The normalized root vector as an evaluated matrix.
    pub fn root_vector(&self, root: &Root) -> Result<FieldMatrix, AlgebraError> {
        let (c, name) = self.root_word(root)?;
        Ok(self.gen(name)?.scale(&c))
    }

    /// The root attached to a generator name, if any (Cartans have none).
    pub fn root_of(&self, name: &str) -> Option<&Root> {
        self.root_word
            .iter()
            .find(|(_, (_, n))| n == name)
            .map(|(r, _)| r)
    }

    /// Exact Cartan eigenvalue `<H, lambda>`.
    pub fn cartan_pairing(&self, cartan: &str, root: &Root) -> Result<Rational64, AlgebraError> {
        let v = self
            .cartan_vec
            .get(cartan)
            .ok_or_else(|| AlgebraError::MissingGenerator(cartan.to_string()))?;
        Ok(root.dot(v))
    }

    /// Verify `[rho(H), rho(L_r)] = <H, r> rho(L_r)` for every Cartan and
    /// every root vector, exactly.
    fn validate_pairings(&self) -> Result<(), AlgebraError> {
        for (cartan, vec) in &self.cartan_vec {
            let h = self.gen(cartan)?;
            for root in self.root_word.keys() {
                let l = self.root_vector(root)?;
                let expected = l.scale(&field_from_rational64(root.dot(vec)));
                if h.commutator(&l) != expected {
                    return Err(AlgebraError::Inconsistent(format!(
                        "[{cartan}, L_{root}] != <{cartan},{root}> L_{root}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn unit(dim: usize, i: usize, j: usize) -> FieldMatrix {
    // 1-based indices, matching the generator names
    let mut m = Matrix::zeros(dim, dim);
    m.set(i - 1, j - 1, FieldElem::one());
    m
}

/// Antisymmetric Okubo matrix `M_ij = e_ij - e_ji` (1-based).
fn okubo(dim: usize, i: usize, j: usize) -> FieldMatrix {
    unit(dim, i, j) - unit(dim, j, i)
}

/// `sl(4)` in the defining 4-dimensional representation: the two Cartans
/// `H14 = (E11 - E44)/2`, `H23 = (E22 - E33)/2` and the six root vectors
/// of the 8-generator carrier, realized by matrix units.
pub fn build_sl4() -> AlgebraRep {
    let half = FieldElem::from_ratio(1, 2);
    let mut gens = BTreeMap::new();
    gens.insert("H14".to_string(), (unit(4, 1, 1) - unit(4, 4, 4)).scale(&half));
    gens.insert("H23".to_string(), (unit(4, 2, 2) - unit(4, 3, 3)).scale(&half));
    for (name, i, j) in [
        ("E14", 1, 4),
        ("E23", 2, 3),
        ("E12", 1, 2),
        ("E24", 2, 4),
        ("E34", 3, 4),
        ("E13", 1, 3),
    ] {
        gens.insert(name.to_string(), unit(4, i, j));
    }

    let mut cartan_vec = BTreeMap::new();
    cartan_vec.insert("H14".to_string(), ratios(&[(1, 2), (0, 1), (0, 1), (-1, 2)]));
    cartan_vec.insert("H23".to_string(), ratios(&[(0, 1), (1, 2), (-1, 2), (0, 1)]));

    let one = FieldElem::one();
    let minus = FieldElem::from_ratio(-1, 1);
    let mut root_word = BTreeMap::new();
    root_word.insert(Root::from_ints(&[1, 0, 0, -1]), (one.clone(), "E14".to_string()));
    // normalized so the structure constant pinning the carrier is -1
    root_word.insert(Root::from_ints(&[0, 1, -1, 0]), (minus.clone(), "E23".to_string()));
    root_word.insert(Root::from_ints(&[1, -1, 0, 0]), (one.clone(), "E12".to_string()));
    root_word.insert(Root::from_ints(&[0, 1, 0, -1]), (one.clone(), "E24".to_string()));
    root_word.insert(Root::from_ints(&[0, 0, 1, -1]), (minus, "E34".to_string()));
    root_word.insert(Root::from_ints(&[1, 0, -1, 0]), (one, "E13".to_string()));

    let rep = AlgebraRep {
        name: "sl4".to_string(),
        root_system: RootSystem::a3(),
        dim: 4,
        gens,
        cartan_vec,
        root_word,
    };
    rep.validate_pairings().expect("sl(4) construction is fixed");
    rep
}

fn ratios(list: &[(i64, i64)]) -> Vec<Rational64> {
    list.iter().map(|&(n, d)| Rational64::new(n, d)).collect()
}

/// Conjugate transpose in Q(i, sqrt2): transpose and send `i -> -i`.
fn conj_transpose(m: &FieldMatrix) -> FieldMatrix {
    let t = m.transpose();
    let mut out = Matrix::zeros(t.rows(), t.cols());
    for i in 0..t.rows() {
        for j in 0..t.cols() {
            out.set(i, j, t.get(i, j).conj_i());
        }
    }
    out
}

/// `b = c * a` for a scalar `c`, if one exists. Zero `b` gives `c = 0`.
pub fn extract_scalar_multiple(b: &FieldMatrix, a: &FieldMatrix) -> Option<FieldElem> {
    if b.is_zero_matrix() {
        return Some(FieldElem::zero());
    }
    let (i, j, _) = a.max_abs_entry()?;
    let c = b.get(i, j).clone() * a.get(i, j).inv()?;
    if *b == a.scale(&c) {
        Some(c)
    } else {
        None
    }
}

/// `so(5)` in the defining 5-dimensional representation, built from
/// antisymmetric Okubo matrices. The six positive generators are entered
/// exactly as printed; the four negative-root generators are solved from
/// `[E_a, E_-a] = H_a` with `E_-a` proportional to the conjugate
/// transpose of `E_a`. Any failed bracket check aborts the construction.
pub fn build_so5() -> Result<AlgebraRep, AlgebraError> {
    let i = FieldElem::i();
    let half = FieldElem::from_ratio(1, 2);
    let minus_half_i = -(i.clone() * half.clone());
    // 1/sqrt2 stored as sqrt2/2
    let inv_sqrt2 = FieldElem::new(
        BigRational::zero(),
        BigRational::zero(),
        BigRational::new(1.into(), 2.into()),
        BigRational::zero(),
    );

    let m12 = okubo(5, 1, 2);
    let m34 = okubo(5, 3, 4);
    let m24 = okubo(5, 2, 4);
    let m23 = okubo(5, 2, 3);
    let m14 = okubo(5, 1, 4);
    let m13 = okubo(5, 1, 3);
    let m25 = okubo(5, 2, 5);
    let m15 = okubo(5, 1, 5);
    let m45 = okubo(5, 4, 5);
    let m35 = okubo(5, 3, 5);

    let h1p2 = (m12.clone() + m34.clone()).scale(&minus_half_i);
    let h1m2 = (m12 - m34).scale(&minus_half_i);
    let h1 = h1p2.clone() + h1m2.clone();
    let e1p2 = ((-m24.clone()) + m23.scale(&i) + m14.scale(&i) + m13.clone()).scale(&half);
    let e1m2 = ((-m24) - m23.scale(&i) + m14.scale(&i) - m13).scale(&half);
    let e1 = (m25 - m15.scale(&i)).scale(&inv_sqrt2);
    let e2 = (m45 - m35.scale(&i)).scale(&inv_sqrt2);

    // negative-root generators from the compact-real-form convention
    let solve_negative =
        |name: &str, e: &FieldMatrix, h: &FieldMatrix| -> Result<FieldMatrix, AlgebraError> {
            let dag = conj_transpose(e);
            let bracket = e.commutator(&dag);
            let kappa = extract_scalar_multiple(&bracket, h).ok_or_else(|| {
                AlgebraError::Inconsistent(format!(
                    "[{name}, {name}^dag] is not proportional to the matching Cartan"
                ))
            })?;
            let kappa_inv = kappa.inv().ok_or_else(|| {
                AlgebraError::Inconsistent(format!("[{name}, {name}^dag] vanishes"))
            })?;
            Ok(dag.scale(&kappa_inv))
        };

    let h_e2 = h1p2.clone() - h1m2.clone();
    let em1 = solve_negative("E1", &e1, &h1)?;
    let em2 = solve_negative("E2", &e2, &h_e2)?;
    let e2m1 = solve_negative("E1m2", &e1m2, &h1m2)?;
    let em1m2 = solve_negative("E1p2", &e1p2, &h1p2)?;

    let mut gens = BTreeMap::new();
    gens.insert("H1p2".to_string(), h1p2);
    gens.insert("H1m2".to_string(), h1m2);
    gens.insert("H1".to_string(), h1);
    gens.insert("E1p2".to_string(), e1p2);
    gens.insert("E1m2".to_string(), e1m2);
    gens.insert("E1".to_string(), e1);
    gens.insert("E2".to_string(), e2);
    gens.insert("Em1".to_string(), em1);
    gens.insert("Em2".to_string(), em2);
    gens.insert("E2m1".to_string(), e2m1);
    gens.insert("Em1m2".to_string(), em1m2);

    let mut cartan_vec = BTreeMap::new();
    cartan_vec.insert("H1p2".to_string(), ratios(&[(1, 2), (1, 2)]));
    cartan_vec.insert("H1m2".to_string(), ratios(&[(1, 2), (-1, 2)]));
    cartan_vec.insert("H1".to_string(), ratios(&[(1, 1), (0, 1)]));

    let one = FieldElem::one();
    let minus = FieldElem::from_ratio(-1, 1);
    let mut root_word = BTreeMap::new();
    root_word.insert(Root::from_ints(&[1, 1]), (one.clone(), "E1p2".to_string()));
    root_word.insert(Root::from_ints(&[1, -1]), (one.clone(), "E1m2".to_string()));
    root_word.insert(Root::from_ints(&[1, 0]), (one.clone(), "E1".to_string()));
    // the extension leg carries -E2
    root_word.insert(Root::from_ints(&[0, 1]), (minus, "E2".to_string()));
    root_word.insert(Root::from_ints(&[-1, 0]), (one.clone(), "Em1".to_string()));
    root_word.insert(Root::from_ints(&[0, -1]), (one.clone(), "Em2".to_string()));
    root_word.insert(Root::from_ints(&[-1, 1]), (one.clone(), "E2m1".to_string()));
    root_word.insert(Root::from_ints(&[-1, -1]), (one, "Em1m2".to_string()));

    let rep = AlgebraRep {
        name: "so5".to_string(),
        root_system: RootSystem::b2(),
        dim: 5,
        gens,
        cartan_vec,
        root_word,
    };
    rep.validate_pairings()?;

    // normalization checks for the positive Borel pairs
    for (h, e) in [("H1p2", "E1p2"), ("H1m2", "E1m2")] {
        let hm = rep.gen(h)?;
        let em = rep.gen(e)?;
        if hm.commutator(em) != *em {
            return Err(AlgebraError::Inconsistent(format!("[{h}, {e}] != {e}")));
        }
    }
    // [E_a, E_-a] = H_a for all four positive roots
    for (e, eneg, h_name) in [
        ("E1", "Em1", "H1"),
        ("E1m2", "E2m1", "H1m2"),
        ("E1p2", "Em1m2", "H1p2"),
    ] {
        let b = rep.gen(e)?.commutator(rep.gen(eneg)?);
        if b != *rep.gen(h_name)? {
            return Err(AlgebraError::Inconsistent(format!("[{e}, {eneg}] != {h_name}")));
        }
    }
    let b = rep.gen("E2")?.commutator(rep.gen("Em2")?);
    let h_e2 = rep.gen("H1p2")?.clone() - rep.gen("H1m2")?.clone();
    if b != h_e2 {
        return Err(AlgebraError::Inconsistent("[E2, Em2] != H1p2 - H1m2".to_string()));
    }

    Ok(rep)
}

/// Look up an algebra by CLI name.
pub fn build_algebra(name: &str) -> Result<AlgebraRep, AlgebraError> {
    match name {
        "sl4" => Ok(build_sl4()),
        "so5" => build_so5(),
        other => Err(AlgebraError::UnknownAlgebra(other.to_string())),
    }
}

/// Structure constant: the coefficient of `rho(L_nu)` in
/// `[rho(L_lambda), rho(L_mu)]`, extracted by exact comparison in the
/// representation. Zero when `nu != lambda + mu` or the bracket vanishes.
pub fn structure_constant(
    rep: &AlgebraRep,
    lambda: &Root,
    mu: &Root,
    nu: &Root,
) -> Result<FieldElem, AlgebraError> {
    let l_lambda = rep.root_vector(lambda)?;
    let l_mu = rep.root_vector(mu)?;
    if lambda.add(mu) != *nu {
        return Ok(FieldElem::zero());
    }
    let bracket = l_lambda.commutator(&l_mu);
    if bracket.is_zero_matrix() {
        return Ok(FieldElem::zero());
    }
    let l_nu = rep.root_vector(nu).map_err(|_| AlgebraError::NotInSpan {
        lhs: lambda.clone(),
        rhs: mu.clone(),
    })?;
    extract_scalar_multiple(&bracket, &l_nu).ok_or(AlgebraError::NotInSpan {
        lhs: lambda.clone(),
        rhs: mu.clone(),
    })
}

/// Which primitivization mechanism a carrier configuration falls under.
#[derive(Clone, Debug, PartialEq)]
pub enum DeformationCase {
    /// No extension term: the Borel pair stays primitive as-is.
    Undeformed,
    /// Distinct constituent pair related by the shift with `lambda0`.
    Generic { lambda_prime: Root, lambda_tilde: Root },
    /// `lambda' + lambda0 = lambda0_perp - lambda'`: the long-series case
    /// whose deformed generator carries the squared term.
    Coincident { lambda_prime: Root },
}

/// Description of a candidate carrier: the Borel pair, the top root of
/// the preceding Jordanian factor, and the quadratic factor pair(s) of
/// the deformed generator, all by root.
#[derive(Clone, Debug)]
pub struct CarrierConfig {
    pub name: String,
    pub cartan: String,
    pub lambda0: Root,
    pub lambda0_perp: Root,
    /// Pairs `(B_i, B^i)` appearing as `B_i * B^i` in the deformed
    /// generator; for the worked examples these are
    /// `(lambda0_perp - lambda_tilde, lambda0_perp - lambda_prime)`.
    pub b_pairs: Vec<(Root, Root)>,
    /// `false` selects the undeformed branch (`xi = 0`).
    pub extension_enabled: bool,
}

impl CarrierConfig {
    /// The carrier used by the `so(5)` chains.
    pub fn so5() -> Self {
        CarrierConfig {
            name: "so5-carrier".to_string(),
            cartan: "H1m2".to_string(),
            lambda0: Root::from_ints(&[1, -1]),
            lambda0_perp: Root::from_ints(&[1, 1]),
            b_pairs: vec![(Root::from_ints(&[1, 0]), Root::from_ints(&[1, 0]))],
            extension_enabled: true,
        }
    }

    /// The carrier used by the `sl(4)` chains.
    pub fn sl4() -> Self {
        CarrierConfig {
            name: "sl4-carrier".to_string(),
            cartan: "H23".to_string(),
            lambda0: Root::from_ints(&[0, 1, -1, 0]),
            lambda0_perp: Root::from_ints(&[1, 0, 0, -1]),
            b_pairs: vec![(
                Root::from_ints(&[1, 0, -1, 0]),
                Root::from_ints(&[0, 1, 0, -1]),
            )],
            extension_enabled: true,
        }
    }
}

/// Everything `validate_carrier` found, one report line per condition.
#[derive(Clone, Debug)]
pub struct CarrierReport {
    pub checks: Vec<CheckReport>,
    pub case: DeformationCase,
    pub passed: bool,
}

/// Validate a carrier configuration: Borel normalization, the eigenvalue
/// sums of the quadratic factors, the root conditions relating the
/// constituents to the shift by `lambda0`, and the shortness of the
/// `lambda0`-series (a long string in the `lambda'` direction is
/// permitted exactly in the coincident case). Failures become report
/// entries, never errors.
pub fn validate_carrier(rep: &AlgebraRep, config: &CarrierConfig) -> CarrierReport {
    let mut checks = Vec::new();
    let rs = &rep.root_system;

    let mut push = |checks: &mut Vec<CheckReport>, name: &str, ok: bool, detail: String| {
        checks.push(CheckReport {
            name: format!("{}:{}", config.name, name),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            residual_max_abs: if ok { "0".to_string() } else { "1".to_string() },
            witness: None,
            detail,
        });
    };

    // Borel normalization [H, E] = E
    match (rep.gen(&config.cartan), rep.root_vector(&config.lambda0)) {
        (Ok(h), Ok(e)) => {
            let ok = h.commutator(&e) == e;
            push(
                &mut checks,
                "borel-normalization",
                ok,
                format!("[{}, L_{}] = L_{}", config.cartan, config.lambda0, config.lambda0),
            );
        }
        _ => push(
            &mut checks,
            "borel-normalization",
            false,
            "missing Cartan or root vector".to_string(),
        ),
    }

    let case = if !config.extension_enabled {
        DeformationCase::Undeformed
    } else {
        // eigenvalue sums beta_i + beta^i = 1
        for (k, (bi, bj)) in config.b_pairs.iter().enumerate() {
            let eig = |r: &Root| -> Option<Rational64> {
                let h = rep.gen(&config.cartan).ok()?;
                let b = rep.root_vector(r).ok()?;
                extract_scalar_multiple(&h.commutator(&b), &b).and_then(|c| {
                    let q = c.as_rational()?;
                    Some(Rational64::new(
                        i64::try_from(q.numer()).ok()?,
                        i64::try_from(q.denom()).ok()?,
                    ))
                })
            };
            match (eig(bi), eig(bj)) {
                (Some(a), Some(b)) => {
                    let sum = a + b;
                    push(
                        &mut checks,
                        &format!("eigenvalue-sum-{k}"),
                        sum == Rational64::one(),
                        format!("beta({bi}) + beta({bj}) = {a} + {b} = {sum}, required 1"),
                    );
                }
                _ => push(
                    &mut checks,
                    &format!("eigenvalue-sum-{k}"),
                    false,
                    format!("could not extract eigenvalues for pair ({bi}, {bj})"),
                ),
            }
        }

        // root conditions, from the first quadratic pair
        let (b_tilde, b_prime) = config.b_pairs[0].clone();
        let lambda_prime = config.lambda0_perp.sub(&b_prime);
        let lambda_tilde = config.lambda0_perp.sub(&b_tilde);
        let coincident = lambda_prime == lambda_tilde;
        let relation =
            lambda_tilde == config.lambda0_perp.sub(&lambda_prime).sub(&config.lambda0);
        push(
            &mut checks,
            "root-condition",
            relation,
            if coincident {
                format!(
                    "coincident case: {} + {} = {} - {}",
                    lambda_prime, config.lambda0, config.lambda0_perp, lambda_prime
                )
            } else {
                format!(
                    "generic case: lambda_tilde = {} = {} - {} - {}",
                    lambda_tilde, config.lambda0_perp, lambda_prime, config.lambda0
                )
            },
        );

        let constituents = constituent_roots(rs, &config.lambda0_perp);
        let shifted = lambda_prime.add(&config.lambda0);
        push(
            &mut checks,
            "constituent-membership",
            constituents.contains_double_prime(&shifted),
            format!("{} + {} = {} lies in pi''", lambda_prime, config.lambda0, shifted),
        );

        let mut no_sum_ok = true;
        for r in constituents.pi_prime.iter().chain(&constituents.pi_double_prime) {
            if rs.contains(&r.add(&config.lambda0_perp)) {
                no_sum_ok = false;
            }
        }
        push(
            &mut checks,
            "no-sum-with-top-root",
            no_sum_ok,
            format!(
                "no constituent combines with {} inside the root system",
                config.lambda0_perp
            ),
        );

        // lambda0-series of the carrier roots must be short
        let mut relevant = vec![
            lambda_prime.clone(),
            lambda_tilde.clone(),
            b_prime.clone(),
            b_tilde.clone(),
            config.lambda0_perp.clone(),
        ];
        relevant.dedup();
        let mut series_ok = true;
        let mut lengths = Vec::new();
        for r in &relevant {
            let len = rs.series_len(r, &config.lambda0);
            lengths.push(format!("{r}: {len}"));
            if len > 2 {
                series_ok = false;
            }
        }
        let prime_series = rs.series_len(&config.lambda0_perp, &lambda_prime);
        push(
            &mut checks,
            "short-lambda0-series",
            series_ok,
            format!(
                "lambda0-series lengths [{}]; lambda'-series of {} has length {}{}",
                lengths.join(", "),
                config.lambda0_perp,
                prime_series,
                if coincident && prime_series > 2 {
                    " (long string expected in the coincident case)"
                } else {
                    ""
                }
            ),
        );

        if coincident {
            DeformationCase::Coincident { lambda_prime }
        } else {
            DeformationCase::Generic {
                lambda_prime,
                lambda_tilde,
            }
        }
    };

    // diagnostic: is the extension tensor invariant under the Borel pair?
    if let DeformationCase::Generic { .. } | DeformationCase::Coincident { .. } = case {
        if let Some(report) = matreshka_diagnostic(rep, config) {
            checks.push(report);
        }
    }

    let passed = checks.iter().all(|c| c.status == CheckStatus::Pass);
    CarrierReport { checks, case, passed }
}

/// Diagnostic only: checks whether the extension tensor
/// `C = sum L_lambda' ⊗ L_{lambda0_perp - lambda'} e^{-sigma/2}` commutes
/// with the primitive coproducts of the Borel pair. An invariant tensor
/// signals the nested (already-primitive) situation; the worked carriers
/// are the noninvariant ones. Always reported as pass.
fn matreshka_diagnostic(rep: &AlgebraRep, config: &CarrierConfig) -> Option<CheckReport> {
    let rs = &rep.root_system;
    let constituents = constituent_roots(rs, &config.lambda0_perp);
    let top = rep.root_vector(&config.lambda0_perp).ok()?;
    let sigma = (Matrix::identity(rep.dim) + top).log_unipotent("sigma").ok()?;
    let dress = sigma
        .scale(&FieldElem::from_ratio(-1, 2))
        .exp_nilpotent("exp(-sigma/2)")
        .ok()?;
    let mut c: FieldMatrix = Matrix::zeros(rep.dim * rep.dim, rep.dim * rep.dim);
    for (lp, lpp) in constituents.pi_prime.iter().zip(&constituents.pi_double_prime) {
        let left = rep.root_vector(lp).ok()?;
        let right = rep.root_vector(lpp).ok()?.matmul(&dress);
        c = c + left.kron(&right);
    }
    let idn: FieldMatrix = Matrix::identity(rep.dim);
    let prim = |m: &FieldMatrix| m.kron(&idn) + idn.kron(m);
    let h = rep.gen(&config.cartan).ok()?;
    let e = rep.root_vector(&config.lambda0).ok()?;
    let inv_h = c.commutator(&prim(h)).is_zero_matrix();
    let inv_e = c.commutator(&prim(&e)).is_zero_matrix();
    Some(CheckReport {
        name: format!("{}:matreshka-invariance", config.name),
        status: CheckStatus::Pass,
        residual_max_abs: "0".to_string(),
        witness: None,
        detail: if inv_h && inv_e {
            "extension tensor invariant under the Borel pair: nested primitive situation"
                .to_string()
        } else {
            "extension tensor not invariant: deformed-carrier construction applies".to_string()
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(c: &[i64]) -> Root {
        Root::from_ints(c)
    }

    #[test]
    fn sl4_designated_normalizations() {
        let rep = build_sl4();
        let h14 = rep.gen("H14").unwrap();
        let e14 = rep.gen("E14").unwrap();
        assert_eq!(h14.commutator(e14), e14.clone());
        let h23 = rep.gen("H23").unwrap();
        let e23 = rep.gen("E23").unwrap();
        assert_eq!(h23.commutator(e23), e23.clone());
    }

    #[test]
    fn sl4_half_eigenvalue_on_e12() {
        let rep = build_sl4();
        let h14 = rep.gen("H14").unwrap();
        let e12 = rep.gen("E12").unwrap();
        assert_eq!(h14.commutator(e12), e12.scale(&FieldElem::from_ratio(1, 2)));
        // consistent with the eigenvalue-sum condition: 1/2 + 1/2 = 1 with E24
        let e24 = rep.gen("E24").unwrap();
        assert_eq!(h14.commutator(e24), e24.scale(&FieldElem::from_ratio(1, 2)));
    }

    #[test]
    fn sl4_e14_squares_to_zero() {
        let rep = build_sl4();
        let e14 = rep.gen("E14").unwrap();
        assert!(e14.matmul(e14).is_zero_matrix());
    }

    #[test]
    fn so5_designated_normalizations() {
        let rep = build_so5().unwrap();
        let h = rep.gen("H1p2").unwrap();
        let e = rep.gen("E1p2").unwrap();
        assert_eq!(h.commutator(e), e.clone());
    }

    #[test]
    fn so5_half_eigenvalue_on_e1() {
        let rep = build_so5().unwrap();
        let h = rep.gen("H1m2").unwrap();
        let e1 = rep.gen("E1").unwrap();
        assert_eq!(h.commutator(e1), e1.scale(&FieldElem::from_ratio(1, 2)));
    }

    #[test]
    fn so5_e1p2_is_nilpotent_and_log_terminates() {
        let rep = build_so5().unwrap();
        let e = rep.gen("E1p2").unwrap();
        let idx = e.nilpotency_index().expect("nilpotent");
        assert!(idx <= 5);
        let log = (Matrix::identity(5) + e.clone()).log_unipotent("I+E1p2").unwrap();
        // the series truncated at the nilpotency index
        let mut expected: FieldMatrix = Matrix::zeros(5, 5);
        let mut pw = e.clone();
        for k in 1..idx {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            expected = expected + pw.scale(&FieldElem::from_ratio(sign, k as i64));
            pw = pw.matmul(e);
        }
        assert_eq!(log, expected);
    }

    #[test]
    fn so5_commutator_of_short_roots_gives_long_root_vector() {
        let rep = build_so5().unwrap();
        // oracle: direct commutator of the printed matrices
        let direct = rep.gen("E1").unwrap().commutator(rep.gen("E2").unwrap());
        assert_eq!(direct, rep.gen("E1p2").unwrap().clone());
        // the same statement through the structure-constant extraction,
        // with the e2 root vector being -E2
        let c = structure_constant(&rep, &r(&[1, 0]), &r(&[0, 1]), &r(&[1, 1])).unwrap();
        assert_eq!(c, FieldElem::from_ratio(-1, 1));
    }

    #[test]
    fn sl4_structure_constant_is_minus_one_on_the_carrier() {
        let rep = build_sl4();
        let c = structure_constant(
            &rep,
            &r(&[1, -1, 0, 0]), // lambda'
            &r(&[0, 1, -1, 0]), // lambda0
            &r(&[1, 0, -1, 0]), // lambda0_perp - lambda_tilde
        )
        .unwrap();
        assert_eq!(c, FieldElem::from_ratio(-1, 1));
        // and the second constant forced by the closure argument
        let c2 = structure_constant(
            &rep,
            &r(&[0, 0, 1, -1]), // lambda_tilde
            &r(&[0, 1, -1, 0]), // lambda0
            &r(&[0, 1, 0, -1]), // lambda0_perp - lambda'
        )
        .unwrap();
        assert_eq!(c2, FieldElem::from_ratio(-1, 1));
    }

    #[test]
    fn structure_constant_vanishes_off_the_sum_root() {
        let rep = build_sl4();
        let c = structure_constant(
            &rep,
            &r(&[1, -1, 0, 0]),
            &r(&[0, 1, 0, -1]),
            &r(&[1, 0, -1, 0]),
        )
        .unwrap();
        assert_eq!(c, FieldElem::zero());
    }

    #[test]
    fn constituents_of_so5_top_root() {
        let cs = constituent_roots(&RootSystem::b2(), &r(&[1, 1]));
        assert_eq!(cs.pi_prime, vec![r(&[0, 1])]);
        assert_eq!(cs.pi_double_prime, vec![r(&[1, 0])]);
    }

    #[test]
    fn constituents_of_sl4_top_root() {
        let cs = constituent_roots(&RootSystem::a3(), &r(&[1, 0, 0, -1]));
        // pairs (e1-e2, e2-e4) and (e3-e4, e1-e3)
        assert_eq!(cs.pi_prime.len(), 2);
        let pairs: Vec<(Root, Root)> = cs
            .pi_prime
            .iter()
            .cloned()
            .zip(cs.pi_double_prime.iter().cloned())
            .collect();
        assert!(pairs.contains(&(r(&[1, -1, 0, 0]), r(&[0, 1, 0, -1]))));
        assert!(pairs.contains(&(r(&[0, 0, 1, -1]), r(&[1, 0, -1, 0]))));
    }

    #[test]
    fn constituents_of_a1_are_empty() {
        let rs = RootSystem::a1();
        let cs = constituent_roots(&rs, &r(&[1, -1]));
        assert!(cs.is_empty());
    }

    #[test]
    fn so5_carrier_validates_as_coincident() {
        let rep = build_so5().unwrap();
        let report = validate_carrier(&rep, &CarrierConfig::so5());
        assert!(report.passed, "{:#?}", report.checks);
        assert_eq!(
            report.case,
            DeformationCase::Coincident {
                lambda_prime: r(&[0, 1])
            }
        );
    }

    #[test]
    fn sl4_carrier_validates_as_generic() {
        let rep = build_sl4();
        let report = validate_carrier(&rep, &CarrierConfig::sl4());
        assert!(report.passed, "{:#?}", report.checks);
        assert_eq!(
            report.case,
            DeformationCase::Generic {
                lambda_prime: r(&[1, -1, 0, 0]),
                lambda_tilde: r(&[0, 0, 1, -1]),
            }
        );
    }

    #[test]
    fn carrier_with_wrong_eigenvalue_sum_fails() {
        let rep = build_so5().unwrap();
        let mut config = CarrierConfig::so5();
        // both factors carry eigenvalue 1 under H1m2: sum 2
        config.b_pairs = vec![(r(&[1, -1]), r(&[1, -1]))];
        let report = validate_carrier(&rep, &config);
        assert!(!report.passed);
        let line = report
            .checks
            .iter()
            .find(|c| c.name.contains("eigenvalue-sum"))
            .unwrap();
        assert_eq!(line.status, CheckStatus::Fail);
    }

    #[test]
    fn cartan_orthogonal_to_composed_root() {
        let rep = build_so5().unwrap();
        assert_eq!(rep.cartan_pairing("H1m2", &r(&[1, 1])).unwrap(), Rational64::zero());
    }

    #[test]
    fn jacobi_identity_holds_for_all_generator_triples() {
        for rep in [build_sl4(), build_so5().unwrap()] {
            let names: Vec<&String> = rep.generator_names().collect();
            for a in &names {
                for b in &names {
                    for c in &names {
                        let ma = rep.gen(a).unwrap();
                        let mb = rep.gen(b).unwrap();
                        let mc = rep.gen(c).unwrap();
                        let j = ma.commutator(&mb.commutator(mc))
                            + mb.commutator(&mc.commutator(ma))
                            + mc.commutator(&ma.commutator(mb));
                        assert!(j.is_zero_matrix(), "Jacobi fails at [{a},[{b},{c}]]");
                    }
                }
            }
        }
    }

    #[test]
    fn heights_order_the_constituent_split() {
        let rs = RootSystem::b2();
        assert_eq!(rs.height(&r(&[0, 1])).unwrap(), BigRational::from_integer(1.into()));
        assert_eq!(rs.height(&r(&[1, 0])).unwrap(), BigRational::from_integer(2.into()));
        let a3 = RootSystem::a3();
        assert_eq!(
            a3.height(&r(&[1, 0, 0, -1])).unwrap(),
            BigRational::from_integer(3.into())
        );
    }
}
