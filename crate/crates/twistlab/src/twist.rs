//! Twist factors as ordered exponentials of expression-tree legs, preset
//! chains for the `sl(4)` and `so(5)` examples, and evaluation of twists
//! and twisted coproducts in tensor powers of the defining representation.
//!
//! An [`Expr`] is a tree over named generators; it can be evaluated under
//! any morphism `generator -> matrix`, which is how the same chain is
//! pushed through `rho`, through the primitive coproduct `g -> g⊗1+1⊗g`,
//! or through the counit (all generators to zero). Exponential and
//! logarithm nodes inherit the nilpotency guards of the matrix layer, so
//! a factor built on a wrong normalization fails loudly with the factor's
//! name in the error.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{
    validate_carrier, AlgebraError, AlgebraRep, CarrierConfig, DeformationCase,
};
use crate::linalg::{FieldMatrix, LinalgError, Matrix};
use crate::scalar::{FieldElem, PolyParam, Scalar};

#[derive(Debug, Error)]
pub enum TwistError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("morphism `{morphism}` does not map generator `{name}`")]
    MissingGenerator { morphism: String, name: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("carrier validation failed for `{0}`; refusing to build the deformed generator")]
    CarrierInvalid(String),
}

/// Expression tree over named Lie-algebra generators.
///
/// `Exp` and `Log1p` evaluate through the terminating nilpotent series;
/// `Scale` carries a scalar of the evaluation ring, which is also how the
/// deformation parameter `h` enters a chain.
#[derive(Clone, PartialEq)]
pub enum Expr<S> {
    Gen(String),
    Scalar(S),
    Sum(Vec<Expr<S>>),
    Prod(Vec<Expr<S>>),
    Scale(S, Box<Expr<S>>),
    Exp(Box<Expr<S>>),
    Log1p(Box<Expr<S>>),
}

impl<S: Scalar> Expr<S> {
    pub fn gen(name: &str) -> Self {
        Expr::Gen(name.to_string())
    }

    pub fn scalar(c: S) -> Self {
        Expr::Scalar(c)
    }

    pub fn sum(terms: Vec<Expr<S>>) -> Self {
        Expr::Sum(terms)
    }

    pub fn prod(factors: Vec<Expr<S>>) -> Self {
        Expr::Prod(factors)
    }

    pub fn scale(c: S, x: Expr<S>) -> Self {
        if c.is_one() {
            x
        } else {
            Expr::Scale(c, Box::new(x))
        }
    }

    pub fn exp(x: Expr<S>) -> Self {
        Expr::Exp(Box::new(x))
    }

    pub fn log1p(x: Expr<S>) -> Self {
        Expr::Log1p(Box::new(x))
    }

    /// `e^{-x/2}`, sugar for `exp(scale(-1/2, x))`.
    pub fn neg_half_exp(x: Expr<S>) -> Self {
        Expr::exp(Expr::scale(S::rational(-1, 2), x))
    }

    /// `e^{c x}` for a rational `c`.
    pub fn exp_scaled(num: i64, den: i64, x: Expr<S>) -> Self {
        Expr::exp(Expr::scale(S::rational(num, den), x))
    }

    /// Evaluate under a morphism. Products multiply left to right; the
    /// empty product is the identity.
    pub fn eval(&self, m: &LegMorphism<S>) -> Result<Matrix<S>, TwistError> {
        match self {
            Expr::Gen(name) => m.lookup(name),
            Expr::Scalar(c) => Ok(Matrix::identity(m.dim).scale(c)),
            Expr::Sum(terms) => {
                let mut acc = Matrix::zeros(m.dim, m.dim);
                for t in terms {
                    acc = acc + t.eval(m)?;
                }
                Ok(acc)
            }
            Expr::Prod(factors) => {
                let mut acc = Matrix::identity(m.dim);
                for t in factors {
                    acc = acc.matmul(&t.eval(m)?);
                }
                Ok(acc)
            }
            Expr::Scale(c, x) => Ok(x.eval(m)?.scale(c)),
            Expr::Exp(x) => {
                let inner = x.eval(m)?;
                Ok(inner.exp_nilpotent(&format!("{self}"))?)
            }
            Expr::Log1p(x) => {
                let inner = Matrix::identity(m.dim) + x.eval(m)?;
                Ok(inner.log_unipotent(&format!("{self}"))?)
            }
        }
    }
}

impl<S: Scalar> fmt::Display for Expr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Gen(name) => write!(f, "{name}"),
            Expr::Scalar(c) => write!(f, "({c})"),
            Expr::Sum(terms) => {
                write!(f, "(")?;
                for (k, t) in terms.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{t}")?;
                }
                write!(f, ")")
            }
            Expr::Prod(factors) => {
                for (k, t) in factors.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            Expr::Scale(c, x) => write!(f, "({c})*{x}"),
            Expr::Exp(x) => write!(f, "exp({x})"),
            Expr::Log1p(x) => write!(f, "log1p({x})"),
        }
    }
}

impl<S: Scalar> fmt::Debug for Expr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A morphism from generator names to matrices of a fixed dimension; one
/// tensor leg of an evaluation.
#[derive(Clone)]
pub struct LegMorphism<S> {
    pub label: String,
    pub dim: usize,
    map: BTreeMap<String, Matrix<S>>,
}

impl<S: Scalar> LegMorphism<S> {
    pub fn lookup(&self, name: &str) -> Result<Matrix<S>, TwistError> {
        self.map
            .get(name)
            .cloned()
            .ok_or_else(|| TwistError::MissingGenerator {
                morphism: self.label.clone(),
                name: name.to_string(),
            })
    }

    /// The counit leg: every generator goes to the 1x1 zero matrix.
    pub fn counit(rep: &AlgebraRep) -> Self {
        let map = rep
            .generator_names()
            .map(|n| (n.clone(), Matrix::zeros(1, 1)))
            .collect();
        LegMorphism {
            label: format!("counit[{}]", rep.name),
            dim: 1,
            map,
        }
    }

    /// The primitive-coproduct composition of an existing leg:
    /// `g -> m(g)⊗1 + 1⊗m(g)`.
    pub fn coproduct_of(leg: &LegMorphism<S>) -> Self {
        let idn: Matrix<S> = Matrix::identity(leg.dim);
        let map = leg
            .map
            .iter()
            .map(|(n, m)| (n.clone(), m.kron(&idn) + idn.kron(m)))
            .collect();
        LegMorphism {
            label: format!("coproduct({})", leg.label),
            dim: leg.dim * leg.dim,
            map,
        }
    }
}

impl LegMorphism<FieldElem> {
    /// The defining representation itself.
    pub fn rep(rep: &AlgebraRep) -> Self {
        let map = rep
            .generators()
            .iter()
            .map(|(n, m)| (n.clone(), m.clone()))
            .collect();
        LegMorphism {
            label: format!("rho[{}]", rep.name),
            dim: rep.dim,
            map,
        }
    }
}

impl LegMorphism<PolyParam> {
    /// The defining representation with entries promoted to degree-zero
    /// polynomials in `h`.
    pub fn rep_poly(rep: &AlgebraRep) -> Self {
        let map = rep
            .generators()
            .iter()
            .map(|(n, m)| (n.clone(), m.promote()))
            .collect();
        LegMorphism {
            label: format!("rho_h[{}]", rep.name),
            dim: rep.dim,
            map,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    Jordanian,
    Extension,
}

/// One ordered exponential `exp(sum_k left_k ⊗ right_k)`.
#[derive(Clone)]
pub struct TwistFactor<S> {
    pub kind: FactorKind,
    pub label: String,
    pub summands: Vec<(Expr<S>, Expr<S>)>,
}

impl<S: Scalar> TwistFactor<S> {
    /// Evaluate the exponent and exponentiate; the summed exponent must be
    /// nilpotent in the chosen legs or evaluation fails with this
    /// factor's label.
    pub fn evaluate(
        &self,
        left: &LegMorphism<S>,
        right: &LegMorphism<S>,
    ) -> Result<Matrix<S>, TwistError> {
        let dim = left.dim * right.dim;
        let mut exponent: Matrix<S> = Matrix::zeros(dim, dim);
        for (l, r) in &self.summands {
            exponent = exponent + l.eval(left)?.kron(&r.eval(right)?);
        }
        Ok(exponent.exp_nilpotent(&self.label)?)
    }

    fn flip_sign(&self) -> Self {
        TwistFactor {
            kind: self.kind,
            label: format!("sign-flipped {}", self.label),
            summands: self
                .summands
                .iter()
                .map(|(l, r)| (Expr::scale(S::rational(-1, 1), l.clone()), r.clone()))
                .collect(),
        }
    }
}

/// An ordered product of twist factors; the leftmost factor is applied
/// last (i.e. it is the leftmost matrix of the evaluated product).
#[derive(Clone)]
pub struct TwistChain<S> {
    pub factors: Vec<TwistFactor<S>>,
}

impl<S: Scalar> TwistChain<S> {
    pub fn empty() -> Self {
        TwistChain { factors: Vec::new() }
    }

    pub fn evaluate(
        &self,
        left: &LegMorphism<S>,
        right: &LegMorphism<S>,
    ) -> Result<Matrix<S>, TwistError> {
        let dim = left.dim * right.dim;
        let mut acc: Matrix<S> = Matrix::identity(dim);
        for f in &self.factors {
            acc = acc.matmul(&f.evaluate(left, right)?);
        }
        Ok(acc)
    }

    pub fn concat(&self, other: &TwistChain<S>) -> TwistChain<S> {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        TwistChain { factors }
    }

    /// Negative control: flip the sign of the first extension factor's
    /// exponent. The result is deliberately not a twist.
    pub fn with_flipped_extension_sign(&self) -> TwistChain<S> {
        let mut factors = self.factors.clone();
        if let Some(f) = factors.iter_mut().find(|f| f.kind == FactorKind::Extension) {
            *f = f.flip_sign();
        }
        TwistChain { factors }
    }
}

/// Jordanian factor `exp(H ⊗ ln(1 + E))`.
pub fn jordanian<S: Scalar>(h_name: &str, e: Expr<S>) -> TwistFactor<S> {
    let sigma = Expr::log1p(e);
    TwistFactor {
        kind: FactorKind::Jordanian,
        label: format!("jordanian({h_name} ⊗ {sigma})"),
        summands: vec![(Expr::gen(h_name), sigma)],
    }
}

/// Extension factors `exp(A_k ⊗ B_k e^{-sigma/2})`, one chained factor
/// per pair, in the given order.
pub fn extension<S: Scalar>(pairs: Vec<(Expr<S>, Expr<S>)>, sigma: Expr<S>) -> Vec<TwistFactor<S>> {
    pairs
        .into_iter()
        .map(|(a, b)| {
            let dressed = Expr::prod(vec![b, Expr::neg_half_exp(sigma.clone())]);
            TwistFactor {
                kind: FactorKind::Extension,
                label: format!("extension({a} ⊗ {dressed})"),
                summands: vec![(a, dressed)],
            }
        })
        .collect()
}

/// The root vector `L_lambda` as an expression (`coeff * generator`).
fn root_expr<S: Scalar>(rep: &AlgebraRep, root: &crate::algebra::Root) -> Result<Expr<S>, TwistError> {
    let (coeff, name) = rep.root_word(root)?;
    Ok(Expr::scale(S::from_field(coeff), Expr::gen(name)))
}

/// The deformed Borel generator for a validated carrier:
/// `E + xi * L_{top - tilde} L_{top - prime} e^{-sigma}` in the generic
/// case, `E + (xi/2) * L_{top - prime}^2 e^{-sigma}` in the coincident
/// case, and plain `E` when the extension is disabled. `xi = 1`; the
/// deformation parameter `h` multiplies the quadratic term and the
/// argument of every logarithm, so `h = 1` reproduces the undeformed
/// expressions.
pub fn deformed_generator<S: Scalar>(
    rep: &AlgebraRep,
    config: &CarrierConfig,
    h: &S,
) -> Result<Expr<S>, TwistError> {
    let report = validate_carrier(rep, config);
    if !report.passed {
        return Err(TwistError::CarrierInvalid(config.name.clone()));
    }
    let e: Expr<S> = root_expr(rep, &config.lambda0)?;
    let sigma = Expr::log1p(Expr::scale(h.clone(), root_expr(rep, &config.lambda0_perp)?));
    let dress = Expr::exp(Expr::scale(S::rational(-1, 1), sigma));
    match report.case {
        DeformationCase::Undeformed => Ok(e),
        DeformationCase::Coincident { lambda_prime } => {
            let l = root_expr::<S>(rep, &config.lambda0_perp.sub(&lambda_prime))?;
            let quad = Expr::prod(vec![l.clone(), l, dress]);
            Ok(Expr::sum(vec![
                e,
                Expr::scale(h.clone() * S::rational(1, 2), quad),
            ]))
        }
        DeformationCase::Generic {
            lambda_prime,
            lambda_tilde,
        } => {
            let l_tilde = root_expr::<S>(rep, &config.lambda0_perp.sub(&lambda_tilde))?;
            let l_prime = root_expr::<S>(rep, &config.lambda0_perp.sub(&lambda_prime))?;
            let quad = Expr::prod(vec![l_tilde, l_prime, dress]);
            Ok(Expr::sum(vec![e, Expr::scale(h.clone(), quad)]))
        }
    }
}

/// The named chains built in this crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainPreset {
    So5EJ,
    So5BJEJ,
    Sl4EJ,
    Sl4EpEJ,
    Sl4BJEpEJ,
}

impl ChainPreset {
    pub fn parse(name: &str) -> Result<Self, TwistError> {
        match name {
            "so5:EJ" => Ok(ChainPreset::So5EJ),
            "so5:BJEJ" => Ok(ChainPreset::So5BJEJ),
            "sl4:EJ" => Ok(ChainPreset::Sl4EJ),
            "sl4:E'EJ" | "sl4:E_EJ" => Ok(ChainPreset::Sl4EpEJ),
            "sl4:BJE'EJ" | "sl4:BJE_EJ" => Ok(ChainPreset::Sl4BJEpEJ),
            other => Err(TwistError::UnknownPreset(other.to_string())),
        }
    }

    pub fn algebra_name(&self) -> &'static str {
        match self {
            ChainPreset::So5EJ | ChainPreset::So5BJEJ => "so5",
            _ => "sl4",
        }
    }

    /// Chain name relative to the algebra, as used on the command line.
    pub fn parse_for_algebra(algebra: &str, chain: &str) -> Result<Self, TwistError> {
        ChainPreset::parse(&format!("{algebra}:{chain}"))
    }

    pub fn all() -> [ChainPreset; 5] {
        [
            ChainPreset::So5EJ,
            ChainPreset::So5BJEJ,
            ChainPreset::Sl4EJ,
            ChainPreset::Sl4EpEJ,
            ChainPreset::Sl4BJEpEJ,
        ]
    }
}

impl fmt::Display for ChainPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChainPreset::So5EJ => "so5:EJ",
            ChainPreset::So5BJEJ => "so5:BJEJ",
            ChainPreset::Sl4EJ => "sl4:EJ",
            ChainPreset::Sl4EpEJ => "sl4:E'EJ",
            ChainPreset::Sl4BJEpEJ => "sl4:BJE'EJ",
        };
        write!(f, "{s}")
    }
}

/// Build a preset chain for an already-constructed representation, with
/// an explicit deformation parameter (`S::one()` gives the plain chain).
pub fn build_chain<S: Scalar>(
    rep: &AlgebraRep,
    preset: ChainPreset,
    h: &S,
) -> Result<TwistChain<S>, TwistError> {
    match preset {
        ChainPreset::So5EJ | ChainPreset::So5BJEJ => {
            let config = CarrierConfig::so5();
            let sigma = Expr::log1p(Expr::scale(
                h.clone(),
                root_expr(rep, &config.lambda0_perp)?,
            ));
            // the canonical extended twist on {H1p2, E1p2, E1, -E2}
            let lambda_prime = crate::algebra::Root::from_ints(&[0, 1]);
            let pair = (
                Expr::scale(h.clone(), root_expr(rep, &lambda_prime)?),
                root_expr(rep, &config.lambda0_perp.sub(&lambda_prime))?,
            );
            let mut factors = extension(vec![pair], sigma.clone());
            factors.push(jordanian("H1p2", Expr::scale(h.clone(), Expr::gen("E1p2"))));
            if preset == ChainPreset::So5BJEJ {
                let e_bo = deformed_generator(rep, &config, h)?;
                let bj = jordanian("H1m2", Expr::scale(h.clone(), e_bo));
                factors.insert(0, bj);
            }
            Ok(TwistChain { factors })
        }
        ChainPreset::Sl4EJ | ChainPreset::Sl4EpEJ | ChainPreset::Sl4BJEpEJ => {
            let config = CarrierConfig::sl4();
            let sigma = Expr::log1p(Expr::scale(
                h.clone(),
                root_expr(rep, &config.lambda0_perp)?,
            ));
            let lambda_prime = crate::algebra::Root::from_ints(&[1, -1, 0, 0]);
            let lambda_tilde = crate::algebra::Root::from_ints(&[0, 0, 1, -1]);
            let pair_e = (
                Expr::scale(h.clone(), root_expr(rep, &lambda_prime)?),
                root_expr(rep, &config.lambda0_perp.sub(&lambda_prime))?,
            );
            let pair_ep = (
                Expr::scale(h.clone(), root_expr(rep, &lambda_tilde)?),
                root_expr(rep, &config.lambda0_perp.sub(&lambda_tilde))?,
            );
            let mut factors = match preset {
                ChainPreset::Sl4EJ => extension(vec![pair_e], sigma.clone()),
                _ => extension(vec![pair_ep, pair_e], sigma.clone()),
            };
            factors.push(jordanian("H14", Expr::scale(h.clone(), Expr::gen("E14"))));
            if preset == ChainPreset::Sl4BJEpEJ {
                let e_b = deformed_generator(rep, &config, h)?;
                let bj = jordanian("H23", Expr::scale(h.clone(), e_b));
                factors.insert(0, bj);
            }
            Ok(TwistChain { factors })
        }
    }
}

/// A preset chain by full name (for example `so5:BJEJ`), with `h = 1`.
pub fn preset_chain(name: &str) -> Result<TwistChain<FieldElem>, TwistError> {
    let preset = ChainPreset::parse(name)?;
    let rep = crate::algebra::build_algebra(preset.algebra_name())?;
    build_chain(&rep, preset, &FieldElem::one())
}

/// A preset chain with the deformation parameter left formal.
pub fn preset_chain_h(name: &str) -> Result<TwistChain<PolyParam>, TwistError> {
    let preset = ChainPreset::parse(name)?;
    let rep = crate::algebra::build_algebra(preset.algebra_name())?;
    build_chain(&rep, preset, &PolyParam::h())
}

/// The named composite generators available on top of a representation:
/// `E_BO` for `so(5)`, `E_B` for `sl(4)` (at `h = 1`).
pub fn composite_exprs(rep: &AlgebraRep) -> BTreeMap<String, Expr<FieldElem>> {
    let mut map = BTreeMap::new();
    let one = FieldElem::one();
    match rep.name.as_str() {
        "so5" => {
            if let Ok(e) = deformed_generator(rep, &CarrierConfig::so5(), &one) {
                map.insert("E_BO".to_string(), e);
            }
        }
        "sl4" => {
            if let Ok(e) = deformed_generator(rep, &CarrierConfig::sl4(), &one) {
                map.insert("E_B".to_string(), e);
            }
        }
        _ => {}
    }
    map
}

/// `F (x⊗1 + 1⊗x) F^{-1}` for the evaluated chain, with `x` any
/// expression evaluable under the representation. Composite `x` is
/// handled by evaluating the tree under the primitive-coproduct morphism.
pub fn twisted_coproduct(
    chain: &TwistChain<FieldElem>,
    x: &Expr<FieldElem>,
    rep: &AlgebraRep,
) -> Result<FieldMatrix, TwistError> {
    let rho = LegMorphism::rep(rep);
    let f = chain.evaluate(&rho, &rho)?;
    let f_inv = f.invert()?;
    let delta = LegMorphism::coproduct_of(&rho);
    let prim = x.eval(&delta)?;
    Ok(f.matmul(&prim).matmul(&f_inv))
}

/// The primitive coproduct matrix of an expression.
pub fn primitive_coproduct(
    x: &Expr<FieldElem>,
    rep: &AlgebraRep,
) -> Result<FieldMatrix, TwistError> {
    let rho = LegMorphism::rep(rep);
    let delta = LegMorphism::coproduct_of(&rho);
    x.eval(&delta)
}
