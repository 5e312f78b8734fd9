//! Quantum-group actions on mixed tensor spaces, realized as exact matrices
//! over `Q(x)`, together with the certificates comparing them.
//!
//! The central object is [`RepresentedSeries`]: a square matrix over the
//! rational-function field, indexed by an auxiliary `N`-dimensional space
//! tensored with a module space, whose `(a, b)` block records the action of
//! the generating series `T_ab(x)`.  Constructors build
//!
//! * products of rational `R`-type factors coupling the auxiliary space to
//!   each ordinary or dual factor of a [`MixedTensorSpace`]
//!   ([`rho_mixed`], [`sigma_mixed`]),
//! * the first-order action on any tensor space ([`pi_n_action`]),
//! * the centralizer-recipe action attached to a Lie-algebra representation
//!   ([`pi_nm_action`]), and from it the induced action on a space of
//!   equivariant maps ([`build_hom_module`]).
//!
//! Every constructed series can be checked against the quadratic exchange
//! relation ([`check_rtt`]), and two series on equal-dimensional spaces can
//! be compared by [`equivalence_certificate`], which solves for an exact
//! intertwiner and reports invertibility, uniqueness, and commutant sizes.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    enumerate_standard_tableaux, skew_shapes_in_box, Partition, SkewShape, StandardTableau,
};
use crate::exact_algebra::{
    commutant_dimension, decode_digits, encode_digits, rat, ratq, sample_rat, solve_intertwiner,
    Field, Matrix, Perm, Poly, Rat, RatFunc,
};
use crate::mixed_tensor::{dedup_by_fusion_signature, MixedTensorSpace};
use crate::{CheckReport, Error, Result};

/// The monic linear polynomial `x - z`.
fn linear(z: &Rat) -> Poly {
    Poly::from_coeffs(vec![Field::neg(z), rat(1)])
}

/// A matrix of generating series: the square block matrix whose `(a, b)`
/// block of size `dim` is the action of `T_ab(x)` on the module space.
///
/// Invariant: the matrix tends to the identity as `x` tends to infinity,
/// so every diagonal block is `1 + O(1/x)` and every off-diagonal block is
/// `O(1/x)` entrywise.
#[derive(Clone, Debug, PartialEq)]
pub struct RepresentedSeries {
    aux_n: usize,
    dim: usize,
    matrix: Matrix<RatFunc>,
}

impl RepresentedSeries {
    /// Wraps a block matrix after validating the shape and the behaviour at
    /// infinity.
    pub fn new(aux_n: usize, dim: usize, matrix: Matrix<RatFunc>) -> Result<Self> {
        let total = aux_n * dim;
        if matrix.rows() != total || matrix.cols() != total {
            return Err(Error::SizeMismatch {
                left: matrix.rows(),
                right: total,
            });
        }
        for r in 0..total {
            for c in 0..total {
                let expected = if r == c { rat(1) } else { rat(0) };
                match matrix.get(r, c).value_at_infinity() {
                    Some(v) if v == expected => {}
                    _ => {
                        return Err(Error::InvalidInput(format!(
                            "series entry ({r}, {c}) does not tend to {expected} at infinity"
                        )));
                    }
                }
            }
        }
        Ok(RepresentedSeries { aux_n, dim, matrix })
    }

    /// Dimension of the auxiliary space.
    pub fn aux_n(&self) -> usize {
        self.aux_n
    }

    /// Dimension of the module space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The full block matrix.
    pub fn matrix(&self) -> &Matrix<RatFunc> {
        &self.matrix
    }

    /// The `(a, b)` block: the action of the series `T_ab(x)`.
    pub fn block(&self, a: usize, b: usize) -> Matrix<RatFunc> {
        self.matrix
            .submatrix(a * self.dim, self.dim, b * self.dim, self.dim)
    }

    /// Multiplies every entry by the scalar series `g`, which must be `1` at
    /// infinity so that the defining invariant is preserved.
    pub fn twist(&self, g: &RatFunc) -> Result<Self> {
        if g.value_at_infinity() != Some(rat(1)) {
            return Err(Error::InvalidInput(
                "twist by a series that is not 1 at infinity".into(),
            ));
        }
        RepresentedSeries::new(self.aux_n, self.dim, self.matrix.scale(g))
    }

    /// Substitutes `x - z` for `x` in every entry.
    pub fn shift(&self, z: &Rat) -> Result<Self> {
        let shifted = self.matrix.map(|e| e.compose_linear(&rat(1), &Field::neg(z)));
        RepresentedSeries::new(self.aux_n, self.dim, shifted)
    }

    /// The contragredient series: invert the full block matrix, then
    /// transpose each block in the module indices only.
    pub fn dual(&self) -> Result<Self> {
        let inv = self.matrix.inverse().ok_or(Error::Singular)?;
        let d = self.dim;
        let out = Matrix::from_fn(self.aux_n * d, self.aux_n * d, |r, c| {
            let (a, i) = (r / d, r % d);
            let (b, j) = (c / d, c % d);
            inv.get(a * d + j, b * d + i).clone()
        });
        RepresentedSeries::new(self.aux_n, d, out)
    }

    /// Restricts every block to an invariant subspace spanned by the columns
    /// of `basis` (full column rank).  Errors with
    /// [`Error::NoIntertwiner`] if the span is not invariant.
    pub fn restrict(&self, basis: &Matrix<Rat>) -> Result<Self> {
        if basis.rows() != self.dim {
            return Err(Error::SizeMismatch {
                left: basis.rows(),
                right: self.dim,
            });
        }
        let h = basis.cols();
        let lifted = Matrix::<RatFunc>::lift(basis);
        let mut out = Matrix::zero(self.aux_n * h, self.aux_n * h);
        for a in 0..self.aux_n {
            for b in 0..self.aux_n {
                let image = self.block(a, b).mul(&lifted);
                let small = lifted.solve(&image).ok_or_else(|| {
                    Error::NoIntertwiner(
                        "column span is not invariant under the series blocks".into(),
                    )
                })?;
                for r in 0..h {
                    for c in 0..h {
                        out.set(a * h + r, b * h + c, small.get(r, c).clone());
                    }
                }
            }
        }
        RepresentedSeries::new(self.aux_n, h, out)
    }

    /// The coefficient matrices of `x^{-1}, ..., x^{-order}` of every block,
    /// flattened in order (power, then block row, then block column).
    pub fn coefficient_blocks(&self, order: usize) -> Result<Vec<Matrix<Rat>>> {
        let d = self.dim;
        let n = self.aux_n;
        let total = n * d;
        let mut expansions: Vec<Vec<Rat>> = Vec::with_capacity(total * total);
        for r in 0..total {
            for c in 0..total {
                expansions.push(self.matrix.get(r, c).series_at_infinity(order)?);
            }
        }
        let mut out = Vec::with_capacity(order * n * n);
        for power in 1..=order {
            for a in 0..n {
                for b in 0..n {
                    out.push(Matrix::from_fn(d, d, |r, c| {
                        expansions[(a * d + r) * total + (b * d + c)][power].clone()
                    }));
                }
            }
        }
        Ok(out)
    }
}

/// A matrix Lie-algebra representation of `gl_k`: the images of the unit
/// matrices `E_ab`, validated against the commutation relations
/// `[E_ab, E_cd] = delta_bc E_ad - delta_da E_cb`.
#[derive(Clone, Debug)]
pub struct LieAlgebraRep {
    k: usize,
    dim: usize,
    gens: Vec<Matrix<Rat>>,
}

impl LieAlgebraRep {
    /// Validates and wraps generator images, listed row-major by `(a, b)`.
    pub fn new(k: usize, gens: Vec<Matrix<Rat>>) -> Result<Self> {
        if k == 0 || gens.len() != k * k {
            return Err(Error::SizeMismatch {
                left: gens.len(),
                right: k * k,
            });
        }
        let dim = gens[0].rows();
        for g in &gens {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::SizeMismatch {
                    left: g.rows(),
                    right: dim,
                });
            }
        }
        let rep = LieAlgebraRep { k, dim, gens };
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    for d in 0..k {
                        let gab = rep.generator(a, b);
                        let gcd = rep.generator(c, d);
                        let lhs = gab.mul(gcd).sub(&gcd.mul(gab));
                        let mut rhs = Matrix::zero(dim, dim);
                        if b == c {
                            rhs = rhs.add(rep.generator(a, d));
                        }
                        if d == a {
                            rhs = rhs.sub(rep.generator(c, b));
                        }
                        if lhs != rhs {
                            return Err(Error::InvalidInput(format!(
                                "generator images for ({a},{b}) and ({c},{d}) \
                                 violate the commutation relations"
                            )));
                        }
                    }
                }
            }
        }
        Ok(rep)
    }

    /// Rank of the Lie algebra being represented.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Dimension of the representation space.
    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// The image of the unit matrix `E_ab` (indices `0..k`).
    pub fn generator(&self, a: usize, b: usize) -> &Matrix<Rat> {
        &self.gens[a * self.k + b]
    }

    /// Restricts every generator to the invariant column span of `basis`.
    pub fn restrict(&self, basis: &Matrix<Rat>) -> Result<Self> {
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let small = basis.solve(&g.mul(basis)).ok_or_else(|| {
                Error::NoIntertwiner(
                    "column span is not invariant under the generators".into(),
                )
            })?;
            gens.push(small);
        }
        LieAlgebraRep::new(self.k, gens)
    }
}

/// The natural `gl_N` action on a mixed tensor space, with the sign-reversed
/// transposed action on dual factors.
pub fn mixed_gl_rep(space: &MixedTensorSpace) -> Result<LieAlgebraRep> {
    let k = space.big_n();
    let mut gens = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            gens.push(space.gl_generator_op(a, b)?);
        }
    }
    LieAlgebraRep::new(k, gens)
}

/// The defining representation of `gl_k` on column vectors.
pub fn defining_rep(k: usize) -> Result<LieAlgebraRep> {
    let mut gens = Vec::with_capacity(k * k);
    for a in 0..k {
        for b in 0..k {
            gens.push(Matrix::from_fn(k, k, |r, c| {
                if r == a && c == b {
                    rat(1)
                } else {
                    rat(0)
                }
            }));
        }
    }
    LieAlgebraRep::new(k, gens)
}

/// Swap of the auxiliary factor with the ordinary factor labelled `j`, as a
/// matrix on (auxiliary space) tensor (mixed space).
fn aux_swap_op(space: &MixedTensorSpace, j: usize) -> Result<Matrix<Rat>> {
    if space.is_dual(j)? {
        return Err(Error::MixedFactorKinds {
            first: 0,
            second: j,
        });
    }
    let n = space.big_n();
    let total = n * space.dim();
    let mut out = Matrix::zero(total, total);
    let mut digits = vec![0usize; space.factors() + 1];
    for col in 0..total {
        decode_digits(col, n, &mut digits);
        digits.swap(0, j);
        let row = encode_digits(&digits, n);
        out.set(row, col, rat(1));
    }
    Ok(out)
}

/// Rank-one coupling of the auxiliary factor with the dual factor labelled
/// `i`, as a matrix on (auxiliary space) tensor (mixed space).
fn aux_q_op(space: &MixedTensorSpace, i: usize) -> Result<Matrix<Rat>> {
    if !space.is_dual(i)? {
        return Err(Error::MixedFactorKinds {
            first: 0,
            second: i,
        });
    }
    let n = space.big_n();
    let total = n * space.dim();
    let mut out: Matrix<Rat> = Matrix::zero(total, total);
    let mut digits = vec![0usize; space.factors() + 1];
    for col in 0..total {
        decode_digits(col, n, &mut digits);
        if digits[0] != digits[i] {
            continue;
        }
        for c in 0..n {
            digits[0] = c;
            digits[i] = c;
            let row = encode_digits(&digits, n);
            let v = out.get(row, col).add(&rat(1));
            out.set(row, col, v);
        }
        decode_digits(col, n, &mut digits);
    }
    Ok(out)
}

/// The rational factor `1 - P_{0j} / (x - z)` coupling the auxiliary factor
/// to the ordinary factor labelled `j`.
fn aux_r_factor(space: &MixedTensorSpace, j: usize, z: &Rat) -> Result<Matrix<RatFunc>> {
    let p = aux_swap_op(space, j)?;
    let total = p.rows();
    let s = RatFunc::new(Poly::one(), linear(z))?;
    Ok(Matrix::<RatFunc>::lift(&Matrix::identity(total)).sub(&Matrix::<RatFunc>::lift(&p).scale(&s)))
}

/// The rational factor `(1 + Q_{0i} / (x - y)) (1 - 1/(x - y)^2)^{-1}`
/// coupling the auxiliary factor to the dual factor labelled `i`.
fn aux_r_star_factor(space: &MixedTensorSpace, i: usize, y: &Rat) -> Result<Matrix<RatFunc>> {
    let q = aux_q_op(space, i)?;
    let total = q.rows();
    let u = linear(y);
    let u2 = u.mul(&u);
    let den = u2.sub(&Poly::one());
    let s_id = RatFunc::new(u2, den.clone())?;
    let s_q = RatFunc::new(u, den)?;
    Ok(Matrix::<RatFunc>::lift(&Matrix::identity(total))
        .scale(&s_id)
        .add(&Matrix::<RatFunc>::lift(&q).scale(&s_q)))
}

/// Product action on a mixed tensor space with `ys.len()` dual factors and
/// `zs.len()` ordinary factors: dual couplings first, ordered so that the
/// dual factor labelled `i` is paired with `ys[n_dual - i]`, followed by
/// ordinary couplings in ascending label order paired with `zs` in order.
pub fn rho_mixed(big_n: usize, ys: &[Rat], zs: &[Rat]) -> Result<RepresentedSeries> {
    let space = MixedTensorSpace::new(big_n, zs.len(), ys.len())?;
    let nt = ys.len();
    let total = big_n * space.dim();
    let mut m = Matrix::<RatFunc>::lift(&Matrix::identity(total));
    for i in 1..=nt {
        m = m.mul(&aux_r_star_factor(&space, i, &ys[nt - i])?);
    }
    for (k, z) in zs.iter().enumerate() {
        m = m.mul(&aux_r_factor(&space, nt + k + 1, z)?);
    }
    RepresentedSeries::new(big_n, space.dim(), m)
}

/// Same couplings and parameter pairing as [`rho_mixed`], with both groups
/// of factors multiplied in the reverse order: ordinary couplings first in
/// descending label order, then dual couplings in descending label order.
pub fn sigma_mixed(big_n: usize, ys: &[Rat], zs: &[Rat]) -> Result<RepresentedSeries> {
    let space = MixedTensorSpace::new(big_n, zs.len(), ys.len())?;
    let nt = ys.len();
    let total = big_n * space.dim();
    let mut m = Matrix::<RatFunc>::lift(&Matrix::identity(total));
    for k in (1..=zs.len()).rev() {
        m = m.mul(&aux_r_factor(&space, nt + k, &zs[k - 1])?);
    }
    for i in (1..=nt).rev() {
        m = m.mul(&aux_r_star_factor(&space, i, &ys[nt - i])?);
    }
    RepresentedSeries::new(big_n, space.dim(), m)
}

/// Evaluation parameters attached to a pair of tableaux: ordinary factors
/// take the diagonal contents of `omega`, dual factors take the negated
/// contents of `omega_tilde` shifted by `big_m`.
fn evaluation_params(
    omega: &StandardTableau,
    omega_tilde: &StandardTableau,
    big_m: usize,
) -> (Vec<Rat>, Vec<Rat>) {
    let ys = (1..=omega_tilde.size())
        .map(|k| rat(-omega_tilde.content_of(k) - big_m as i64))
        .collect();
    let zs = (1..=omega.size()).map(|k| rat(omega.content_of(k))).collect();
    (ys, zs)
}

/// The product action evaluated at the parameters of a tableau pair.
pub fn rho_for_tableaux(
    big_n: usize,
    big_m: usize,
    omega: &StandardTableau,
    omega_tilde: &StandardTableau,
) -> Result<RepresentedSeries> {
    let (ys, zs) = evaluation_params(omega, omega_tilde, big_m);
    rho_mixed(big_n, &ys, &zs)
}

/// The first-order action on a mixed tensor space:
/// `1 + (sum of dual couplings - sum of ordinary swaps) / x`.
pub fn pi_n_action(big_n: usize, vector: usize, dual: usize) -> Result<RepresentedSeries> {
    let space = MixedTensorSpace::new(big_n, vector, dual)?;
    let total = big_n * space.dim();
    let mut op: Matrix<Rat> = Matrix::zero(total, total);
    for i in 1..=dual {
        op = op.add(&aux_q_op(&space, i)?);
    }
    for j in dual + 1..=dual + vector {
        op = op.sub(&aux_swap_op(&space, j)?);
    }
    let inv_x = RatFunc::new(Poly::one(), Poly::x())?;
    let m = Matrix::<RatFunc>::lift(&Matrix::identity(total))
        .add(&Matrix::<RatFunc>::lift(&op).scale(&inv_x));
    RepresentedSeries::new(big_n, space.dim(), m)
}

/// The centralizer-recipe action attached to a representation of
/// `gl_(big_n + big_m)`:
///
/// 1. form the first-order series `B(x) = 1 - sum E_ab (x) rep(E_ba) / x`
///    over the full auxiliary space of dimension `big_n + big_m`;
/// 2. invert at the reflected argument, `C(x) = B(-x)^{-1}`;
/// 3. keep the leading `big_n` auxiliary rows and columns, `D(x)`;
/// 4. invert at the reflected argument again, `T(x) = D(-x)^{-1}`.
///
/// For `big_m = 0` the two reflections and inversions cancel and the result
/// is exactly `B(x)`.
pub fn pi_nm_action(
    rep: &LieAlgebraRep,
    big_n: usize,
    big_m: usize,
) -> Result<RepresentedSeries> {
    let k = big_n + big_m;
    if rep.k() != k {
        return Err(Error::SizeMismatch {
            left: rep.k(),
            right: k,
        });
    }
    let d = rep.dimension();
    let total = k * d;
    let mut c1: Matrix<Rat> = Matrix::zero(total, total);
    for a in 0..k {
        for b in 0..k {
            let g = rep.generator(b, a);
            for i in 0..d {
                for j in 0..d {
                    let v = g.get(i, j);
                    if !v.is_zero() {
                        c1.set(a * d + i, b * d + j, v.clone());
                    }
                }
            }
        }
    }
    let inv_x = RatFunc::new(Poly::one(), Poly::x())?;
    let b = Matrix::<RatFunc>::lift(&Matrix::identity(total))
        .sub(&Matrix::<RatFunc>::lift(&c1).scale(&inv_x));
    if big_m == 0 {
        return RepresentedSeries::new(big_n, d, b);
    }
    let reflect = |m: &Matrix<RatFunc>| m.map(|e| e.compose_linear(&rat(-1), &rat(0)));
    let c = reflect(&b).inverse().ok_or(Error::Singular)?;
    let dn = c.submatrix(0, big_n * d, 0, big_n * d);
    let t = reflect(&dn).inverse().ok_or(Error::Singular)?;
    RepresentedSeries::new(big_n, d, t)
}

/// Checks the quadratic exchange relation
/// `(x - y) [T_ab(x), T_cd(y)] = T_cb(x) T_ad(y) - T_cb(y) T_ad(x)`
/// at `samples` generic rational points drawn from a seeded sequence,
/// resampling past poles of the series entries.
pub fn check_rtt(series: &RepresentedSeries, samples: usize, seed: u64) -> Result<bool> {
    let n = series.aux_n();
    let d = series.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = 0usize;
    let mut attempts = 0usize;
    while done < samples {
        attempts += 1;
        if attempts > 200 {
            return Err(Error::PoleAt(
                "no pole-free sample points found for the exchange relation".into(),
            ));
        }
        let x0 = sample_rat(&mut rng);
        let y0 = sample_rat(&mut rng);
        if x0 == y0 {
            continue;
        }
        let tx = match series.matrix().eval_at(&x0) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let ty = match series.matrix().eval_at(&y0) {
            Ok(m) => m,
            Err(_) => continue,
        };
        let block = |m: &Matrix<Rat>, a: usize, b: usize| m.submatrix(a * d, d, b * d, d);
        // p1[(a,b)][(c,e)] = T_ab(x) T_ce(y);  p2[(a,b)][(c,e)] = T_ab(y) T_ce(x).
        let mut p1: Vec<Matrix<Rat>> = Vec::with_capacity(n * n * n * n);
        let mut p2: Vec<Matrix<Rat>> = Vec::with_capacity(n * n * n * n);
        for a in 0..n {
            for b in 0..n {
                let txab = block(&tx, a, b);
                let tyab = block(&ty, a, b);
                for c in 0..n {
                    for e in 0..n {
                        p1.push(txab.mul(&block(&ty, c, e)));
                        p2.push(tyab.mul(&block(&tx, c, e)));
                    }
                }
            }
        }
        let nn = n * n;
        let at = |v: &[Matrix<Rat>], i: usize, j: usize| v[i * nn + j].clone();
        let diff = x0.sub(&y0);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        let ab = a * n + b;
                        let ce = c * n + e;
                        let cb = c * n + b;
                        let ae = a * n + e;
                        let lhs = at(&p1, ab, ce).sub(&at(&p2, ce, ab)).scale(&diff);
                        let rhs = at(&p1, cb, ae).sub(&at(&p2, cb, ae));
                        if lhs != rhs {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        done += 1;
    }
    Ok(true)
}

/// The multiplicative series attached to a partition:
/// the product over rows `i` of
/// `(x - mu_i + i)(x + i - 1) / ((x - mu_i + i - 1)(x + i))`.
pub fn g_mu(mu: &Partition) -> RatFunc {
    let mut g = RatFunc::one();
    for (idx, &part) in mu.parts().iter().enumerate() {
        let i = (idx + 1) as i64;
        let p = part as i64;
        let num = linear(&rat(p - i)).mul(&linear(&rat(1 - i)));
        let den = linear(&rat(p - i + 1)).mul(&linear(&rat(-i)));
        let factor = RatFunc::new(num, den).expect("denominator factors are nonzero");
        g = g.mul(&factor);
    }
    g
}

/// Checks that the series of the outer partition of a straight-shape
/// tableau factorizes over the diagonal contents of the cells:
/// each cell of content `c` contributes `(1 - 1/(x - c)^2)^{-1}`.
pub fn check_fact(t: &StandardTableau) -> Result<bool> {
    if !t.shape().is_nonskew() {
        return Err(Error::ShapeInvalid(
            "content factorization requires a straight shape".into(),
        ));
    }
    let g = g_mu(t.shape().outer());
    let mut rhs = RatFunc::one();
    for k in 1..=t.size() {
        let u = linear(&rat(t.content_of(k)));
        let u2 = u.mul(&u);
        rhs = rhs.mul(&RatFunc::new(u2.clone(), u2.sub(&Poly::one()))?);
    }
    Ok(g == rhs)
}

/// Checks the values and the content factorization of the multiplicative
/// series for every partition of at most `max_l` cells.
pub fn g_series_family(max_l: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("g_series");
    report.record("empty partition", g_mu(&Partition::empty()) == RatFunc::one());
    let x2 = Poly::from_coeffs(vec![rat(0), rat(0), rat(1)]);
    let expected = RatFunc::new(x2.clone(), x2.sub(&Poly::one()))?;
    report.record(
        "single box",
        g_mu(&Partition::new(vec![1])?) == expected,
    );
    for l in 0..=max_l {
        for lambda in Partition::all_of(l) {
            let t = StandardTableau::column_tableau(&SkewShape::from_partition(lambda.clone()));
            report.record(&format!("content factorization {lambda}"), check_fact(&t)?);
        }
    }
    Ok(report)
}

/// Checks the exchange equality between the two factor orderings across the
/// generalized symmetrizer of a tableau pair, as an identity of matrices
/// over `Q(x)`.
pub fn verify_mixed_intertwiner(
    big_n: usize,
    big_m: usize,
    omega: &StandardTableau,
    omega_tilde: &StandardTableau,
) -> Result<bool> {
    let space = MixedTensorSpace::new(big_n, omega.size(), omega_tilde.size())?;
    let f = space.mixed_symmetrizer_op(omega, omega_tilde, big_m)?;
    let (ys, zs) = evaluation_params(omega, omega_tilde, big_m);
    mixed_intertwiner_holds(big_n, &f, &ys, &zs)
}

fn mixed_intertwiner_holds(big_n: usize, f: &Matrix<Rat>, ys: &[Rat], zs: &[Rat]) -> Result<bool> {
    let rho = rho_mixed(big_n, ys, zs)?;
    let sigma = sigma_mixed(big_n, ys, zs)?;
    let kf = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(big_n).kron(f));
    Ok(rho.matrix().mul(&kf) == kf.mul(sigma.matrix()))
}

/// Runs [`verify_mixed_intertwiner`] over every pair of standard tableaux
/// of skew shapes with at most `max_cells` cells in total (one shape class
/// per translation orbit), for all auxiliary dimensions up to `max_big_n`
/// and shifts up to `max_big_m`.  Pairs whose symmetrizer is undefined
/// because a coupling denominator vanishes are skipped.
pub fn intertwiner_family(
    max_cells: usize,
    max_big_n: usize,
    max_big_m: usize,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("mixed_intertwiner");
    let mut by_cells: Vec<Vec<StandardTableau>> = Vec::with_capacity(max_cells + 1);
    for cells in 0..=max_cells {
        if cells == 0 {
            by_cells.push(vec![StandardTableau::column_tableau(
                &SkewShape::from_partition(Partition::empty()),
            )]);
            continue;
        }
        let mut tableaux = Vec::new();
        for representative in dedup_by_fusion_signature(skew_shapes_in_box(cells, 3, 3)) {
            tableaux.extend(enumerate_standard_tableaux(representative.shape())?);
        }
        by_cells.push(tableaux);
    }
    for n in 0..=max_cells {
        for nt in 0..=(max_cells - n) {
            for (oi, omega) in by_cells[n].iter().enumerate() {
                for (ti, omega_tilde) in by_cells[nt].iter().enumerate() {
                    for big_n in 1..=max_big_n {
                        for big_m in 0..=max_big_m {
                            let space = MixedTensorSpace::new(big_n, n, nt)?;
                            let f = match space.mixed_symmetrizer_op(omega, omega_tilde, big_m)
                            {
                                Ok(f) => f,
                                Err(Error::DenominatorZero(_)) => continue,
                                Err(e) => return Err(e),
                            };
                            let (ys, zs) = evaluation_params(omega, omega_tilde, big_m);
                            let ok = mixed_intertwiner_holds(big_n, &f, &ys, &zs)?;
                            report.record(
                                &format!(
                                    "{}#{oi} {}#{ti} N={big_n} M={big_m}",
                                    omega.shape(),
                                    omega_tilde.shape()
                                ),
                                ok,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Outcome of comparing two series actions through an explicit intertwiner.
#[derive(Clone, Debug)]
pub struct EquivalenceCertificate {
    /// Common dimension of the two module spaces.
    pub dim: usize,
    /// Dimension of the space of intertwiners between the coefficient
    /// actions at the stabilized truncation order.
    pub solution_dim: usize,
    /// Truncation order at which the solution and commutant dimensions
    /// stabilized.
    pub stabilized_order: usize,
    /// Whether the found intertwiner has full rank.
    pub intertwiner_invertible: bool,
    /// Whether the intertwiner exchanges the two full series matrices as an
    /// exact identity over `Q(x)`.
    pub series_identity: bool,
    /// Commutant dimension of the first action's coefficient matrices.
    pub commutant_left: usize,
    /// Commutant dimension of the second action's coefficient matrices.
    pub commutant_right: usize,
}

impl EquivalenceCertificate {
    /// True when the two actions are exchanged by a unique-up-to-scalar
    /// invertible intertwiner and both commutants are trivial.
    pub fn pass(&self) -> bool {
        self.solution_dim == 1
            && self.intertwiner_invertible
            && self.series_identity
            && self.commutant_left == 1
            && self.commutant_right == 1
    }
}

/// Solves for an intertwiner `X` with `(1 (x) X) A(x) = B(x) (1 (x) X)`
/// between two series actions of equal auxiliary and module dimensions.
///
/// The solution space is computed from the coefficient matrices of both
/// series, truncated at increasing orders starting from 2 until the
/// solution and commutant dimensions repeat (or a cap of twice the module
/// dimension is reached); the full series identity is then checked exactly
/// over `Q(x)` for the first basis solution.
pub fn equivalence_certificate(
    a: &RepresentedSeries,
    b: &RepresentedSeries,
) -> Result<(EquivalenceCertificate, Matrix<Rat>)> {
    if a.aux_n() != b.aux_n() {
        return Err(Error::SizeMismatch {
            left: a.aux_n(),
            right: b.aux_n(),
        });
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    let d = a.dim();
    let cap = (2 * d).max(3);
    let mut prev: Option<(usize, usize, usize)> = None;
    let mut order = 2usize;
    let (sols, comm_a, comm_b, stabilized_order) = loop {
        let ga = a.coefficient_blocks(order)?;
        let gb = b.coefficient_blocks(order)?;
        let sols = solve_intertwiner(&ga, &gb)?;
        let ca = commutant_dimension(&ga)?;
        let cb = commutant_dimension(&gb)?;
        let signature = (sols.len(), ca, cb);
        if prev == Some(signature) || order >= cap {
            break (sols, ca, cb, order);
        }
        prev = Some(signature);
        order += 1;
    };
    let solution_dim = sols.len();
    let x = sols.into_iter().next().ok_or_else(|| {
        Error::NoIntertwiner("no nonzero intertwiner between the two actions".into())
    })?;
    let intertwiner_invertible = x.rank() == d;
    let kx = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(a.aux_n()).kron(&x));
    let series_identity = kx.mul(a.matrix()) == b.matrix().mul(&kx);
    let certificate = EquivalenceCertificate {
        dim: d,
        solution_dim,
        stabilized_order,
        intertwiner_invertible,
        series_identity,
        commutant_left: comm_a,
        commutant_right: comm_b,
    };
    Ok((certificate, x))
}

/// The admissibility conditions on the two partition pairs: the row counts
/// of the outer pair fit in `big_n + big_m` and those of the inner pair fit
/// in `big_m`.
fn admissible_sizes(
    big_n: usize,
    big_m: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> bool {
    lambda.len() + lambda_tilde.len() <= big_n + big_m && mu.len() + mu_tilde.len() <= big_m
}

/// The containment conditions for a nonzero equivariant-map space: each
/// inner partition sits inside its outer partner and the column differences
/// are bounded by `big_n`.
fn containment_ok(
    big_n: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> bool {
    if !(lambda.contains(mu) && lambda_tilde.contains(mu_tilde)) {
        return false;
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let ltc = lambda_tilde.conjugate();
    let mtc = mu_tilde.conjugate();
    (1..=lc.len()).all(|i| lc.part(i) - mc.part(i) <= big_n)
        && (1..=ltc.len()).all(|i| ltc.part(i) - mtc.part(i) <= big_n)
}

/// Realizes the irreducible `gl_base` representation attached to a pair of
/// partitions as the symmetrizer image inside a mixed tensor space, and
/// restricts the natural generator action to it.
fn realize_pair_rep(
    base: usize,
    nu: &Partition,
    nu_tilde: &Partition,
) -> Result<(LieAlgebraRep, usize)> {
    let space = MixedTensorSpace::new(base, nu.size(), nu_tilde.size())?;
    let omega = StandardTableau::column_tableau(&SkewShape::from_partition(nu.clone()));
    let omega_tilde =
        StandardTableau::column_tableau(&SkewShape::from_partition(nu_tilde.clone()));
    let f = space.mixed_symmetrizer_op(&omega, &omega_tilde, 0)?;
    let basis = f.column_space_basis();
    let rep = mixed_gl_rep(&space)?.restrict(&basis)?;
    let dim = basis.cols();
    Ok((rep, dim))
}

/// Builds the series action on the space of `gl_big_m`-equivariant maps
/// from the inner-pair module into the outer-pair module, twisted by the
/// multiplicative series of the three auxiliary partitions.  Returns the
/// series together with the dimension of the map space.
///
/// Errors with [`Error::InvalidInput`] if the partition pairs do not fit
/// the sizes, and with [`Error::EmptyHom`] if the map space vanishes.
pub fn build_hom_module(
    big_n: usize,
    big_m: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> Result<(RepresentedSeries, usize)> {
    if !admissible_sizes(big_n, big_m, lambda, lambda_tilde, mu, mu_tilde) {
        return Err(Error::InvalidInput(format!(
            "partition pairs ({lambda}, {lambda_tilde}; {mu}, {mu_tilde}) \
             do not fit sizes ({big_n}, {big_m})"
        )));
    }
    if !containment_ok(big_n, lambda, lambda_tilde, mu, mu_tilde) {
        return Err(Error::EmptyHom(format!(
            "equivariant-map space for ({lambda}, {lambda_tilde}; {mu}, {mu_tilde}) \
             at sizes ({big_n}, {big_m}) vanishes"
        )));
    }
    let (rep1, d1) = realize_pair_rep(big_n + big_m, lambda, lambda_tilde)?;
    let series1 = pi_nm_action(&rep1, big_n, big_m)?;
    let (untwisted, h) = if big_m == 0 {
        (series1, d1)
    } else {
        let (rep2, d2) = realize_pair_rep(big_m, mu, mu_tilde)?;
        let mut gens_source = Vec::with_capacity(big_m * big_m);
        let mut gens_target = Vec::with_capacity(big_m * big_m);
        for a in 0..big_m {
            for b in 0..big_m {
                gens_source.push(rep2.generator(a, b).clone());
                gens_target.push(rep1.generator(big_n + a, big_n + b).clone());
            }
        }
        let sols = solve_intertwiner(&gens_source, &gens_target)?;
        let h = sols.len();
        if h == 0 {
            return Err(Error::EmptyHom(format!(
                "equivariant-map space for ({lambda}, {lambda_tilde}; {mu}, {mu_tilde}) \
                 at sizes ({big_n}, {big_m}) vanishes"
            )));
        }
        // Row-major vectorization of the maps: post-composition by an
        // operator `A` acts as `A (x) 1` on vectorized maps.
        let hmat = Matrix::from_fn(d1 * d2, h, |r, c| sols[c].get(r / d2, r % d2).clone());
        let hmat_rf = Matrix::<RatFunc>::lift(&hmat);
        let eye2 = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(d2));
        let mut out = Matrix::zero(big_n * h, big_n * h);
        for a in 0..big_n {
            for b in 0..big_n {
                let big = series1.block(a, b).kron(&eye2);
                let small = hmat_rf.solve(&big.mul(&hmat_rf)).ok_or_else(|| {
                    Error::NoIntertwiner(
                        "equivariant-map space is not invariant under the series".into(),
                    )
                })?;
                for r in 0..h {
                    for c in 0..h {
                        out.set(a * h + r, b * h + c, small.get(r, c).clone());
                    }
                }
            }
        }
        (RepresentedSeries::new(big_n, h, out)?, h)
    };
    let m_i64 = big_m as i64;
    let reflected = |p: &Partition| g_mu(p).compose_linear(&rat(-1), &rat(-m_i64));
    let denominator = reflected(mu_tilde);
    let g = g_mu(mu)
        .mul(&reflected(lambda_tilde))
        .mul(&Field::inv(&denominator).ok_or(Error::DivisionByZero)?);
    let series = untwisted.twist(&g)?;
    Ok((series, h))
}

/// Compares the restricted product action on the symmetrizer image with the
/// twisted equivariant-map action for the same two partition pairs, via an
/// explicit intertwiner.
pub fn verify_module_equivalence(
    big_n: usize,
    big_m: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> Result<(EquivalenceCertificate, Matrix<Rat>)> {
    let (side_a, basis_cols) =
        restricted_product_action(big_n, big_m, lambda, lambda_tilde, mu, mu_tilde)?;
    let (side_b, h) = build_hom_module(big_n, big_m, lambda, lambda_tilde, mu, mu_tilde)?;
    if h != basis_cols {
        return Err(Error::DimensionMismatch {
            left: basis_cols,
            right: h,
        });
    }
    equivalence_certificate(&side_a, &side_b)
}

/// The product action at the tableau contents of the two skew shapes,
/// restricted to the image of the generalized symmetrizer.  Returns the
/// restricted series and the image dimension.
fn restricted_product_action(
    big_n: usize,
    big_m: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> Result<(RepresentedSeries, usize)> {
    let omega =
        StandardTableau::column_tableau(&SkewShape::new(lambda.clone(), mu.clone())?);
    let omega_tilde =
        StandardTableau::column_tableau(&SkewShape::new(lambda_tilde.clone(), mu_tilde.clone())?);
    let space = MixedTensorSpace::new(big_n, omega.size(), omega_tilde.size())?;
    let f = space.mixed_symmetrizer_op(&omega, &omega_tilde, big_m)?;
    let basis = f.column_space_basis();
    let (ys, zs) = evaluation_params(&omega, &omega_tilde, big_m);
    let series = rho_mixed(big_n, &ys, &zs)?.restrict(&basis)?;
    Ok((series, basis.cols()))
}

/// Compares the restricted product action with the shifted and twisted
/// action built from the straight-shape difference tableau, via an explicit
/// intertwiner.
pub fn verify_skew_reduction(
    big_n: usize,
    big_m: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
    mu: &Partition,
    mu_tilde: &Partition,
) -> Result<(EquivalenceCertificate, Matrix<Rat>)> {
    if !admissible_sizes(big_n, big_m, lambda, lambda_tilde, mu, mu_tilde) {
        return Err(Error::InvalidInput(format!(
            "partition pairs ({lambda}, {lambda_tilde}; {mu}, {mu_tilde}) \
             do not fit sizes ({big_n}, {big_m})"
        )));
    }
    let (side_a, _) =
        restricted_product_action(big_n, big_m, lambda, lambda_tilde, mu, mu_tilde)?;
    let big_l = big_n + big_m;
    let r = lambda_tilde.part(1) as i64;
    let mut xi_parts = Vec::with_capacity(big_l);
    for i in 1..=big_l {
        let v = lambda.part(i) as i64 - lambda_tilde.part(big_l - i + 1) as i64 + r;
        xi_parts.push(v as usize);
    }
    let mut eta_parts = Vec::with_capacity(big_m);
    for i in 1..=big_m {
        let v = mu.part(i) as i64 - mu_tilde.part(big_m - i + 1) as i64 + r;
        eta_parts.push(v as usize);
    }
    let xi = Partition::new(xi_parts)?;
    let eta = Partition::new(eta_parts)?;
    let gamma = StandardTableau::column_tableau(&SkewShape::new(xi, eta)?);
    let space = MixedTensorSpace::new(big_n, gamma.size(), 0)?;
    let basis = space.f_omega_op(&gamma)?.column_space_basis();
    let zs: Vec<Rat> = (1..=gamma.size()).map(|k| rat(gamma.content_of(k))).collect();
    let shifted = rho_mixed(big_n, &[], &zs)?.restrict(&basis)?.shift(&rat(-r))?;
    let m_i64 = big_m as i64;
    let ratio = RatFunc::new(linear(&rat(-m_i64 - r)), linear(&rat(-m_i64)))?;
    let g = g_mu(lambda_tilde)
        .compose_linear(&rat(-1), &rat(-m_i64))
        .mul(&ratio);
    let side_b = shifted.twist(&g)?;
    equivalence_certificate(&side_a, &side_b)
}

/// The normalized antisymmetrizer over all factors of a tensor space.
fn antisymmetrizer(space: &MixedTensorSpace) -> Result<Matrix<Rat>> {
    let t = space.factors();
    let mut sum: Matrix<Rat> = Matrix::zero(space.dim(), space.dim());
    for s in Perm::all(t) {
        let op = space.factor_permutation_op(&s)?;
        sum = if s.sign() == 1 { sum.add(&op) } else { sum.sub(&op) };
    }
    let fact: i64 = (1..=t as i64).product();
    Ok(sum.scale(&ratq(1, fact.max(1))))
}

/// Checks the antisymmetrizer identities for `n` factors at staircase
/// parameters descending from `z`: the factorization of the lexicographic
/// coupling product, the commutation of the ordered products across the
/// antisymmetrizer on both the ordinary and the dual side, the linearized
/// form of the ordinary product, and (when `n` equals the space dimension)
/// the explicit one-dimensional values of both restricted actions.
pub fn exterior_power_checks(big_n: usize, n: usize, z: &Rat) -> Result<CheckReport> {
    let mut report = CheckReport::new("exterior_power");
    let label = |what: &str| format!("{what} N={big_n} n={n} z={z}");
    let zs: Vec<Rat> = (0..n).map(|k| z.sub(&rat(k as i64))).collect();

    let space = MixedTensorSpace::new(big_n, n, 0)?;
    let anti = antisymmetrizer(&space)?;
    let mut product = Matrix::<Rat>::identity(space.dim());
    for i in 1..=n {
        for j in (i + 1)..=n {
            product = product.mul(&space.r_op(i, j, &zs[i - 1], &zs[j - 1])?);
        }
    }
    let fact: i64 = (1..=n as i64).product();
    report.record(
        &label("staircase product factorizes"),
        product == anti.scale(&rat(fact.max(1))),
    );

    let rho = rho_mixed(big_n, &[], &zs)?;
    let sigma = sigma_mixed(big_n, &[], &zs)?;
    let ka = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(big_n).kron(&anti));
    let lhs = rho.matrix().mul(&ka);
    report.record(&label("ordinary commutation"), lhs == ka.mul(sigma.matrix()));

    let total = big_n * space.dim();
    let mut swaps: Matrix<Rat> = Matrix::zero(total, total);
    for j in 1..=n {
        swaps = swaps.add(&aux_swap_op(&space, j)?);
    }
    let s = RatFunc::new(Poly::one(), linear(z))?;
    let linear_form = Matrix::<RatFunc>::lift(&Matrix::identity(total))
        .sub(&Matrix::<RatFunc>::lift(&swaps).scale(&s))
        .mul(&ka);
    report.record(&label("linearized product"), lhs == linear_form);

    if n == big_n {
        let restricted = rho.restrict(&anti.column_space_basis())?;
        let value = RatFunc::new(linear(&z.add(&rat(1))), linear(z))?;
        let expected = Matrix::from_fn(big_n, big_n, |r, c| {
            if r == c {
                value.clone()
            } else {
                RatFunc::zero()
            }
        });
        report.record(
            &label("top-degree scalar value"),
            restricted.matrix() == &expected,
        );
    }

    let space_d = MixedTensorSpace::new(big_n, 0, n)?;
    let anti_d = antisymmetrizer(&space_d)?;
    let ys: Vec<Rat> = (1..=n).map(|i| z.sub(&rat((n - i) as i64))).collect();
    let rho_d = rho_mixed(big_n, &ys, &[])?;
    let sigma_d = sigma_mixed(big_n, &ys, &[])?;
    let ka_d = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(big_n).kron(&anti_d));
    report.record(
        &label("dual commutation"),
        rho_d.matrix().mul(&ka_d) == ka_d.mul(sigma_d.matrix()),
    );

    if n == big_n {
        let restricted = rho_d.restrict(&anti_d.column_space_basis())?;
        let value = RatFunc::new(linear(z), linear(&z.add(&rat(1))))?;
        let expected = Matrix::from_fn(big_n, big_n, |r, c| {
            if r == c {
                value.clone()
            } else {
                RatFunc::zero()
            }
        });
        report.record(
            &label("dual top-degree scalar value"),
            restricted.matrix() == &expected,
        );
    }

    Ok(report)
}

/// Compares the contragredient of the restricted ordinary staircase action
/// with the restricted dual-side staircase action, via an explicit
/// intertwiner.
pub fn dual_exterior_certificate(
    big_n: usize,
    n: usize,
    z: &Rat,
) -> Result<(EquivalenceCertificate, Matrix<Rat>)> {
    let zs: Vec<Rat> = (0..n).map(|k| z.sub(&rat(k as i64))).collect();
    let space = MixedTensorSpace::new(big_n, n, 0)?;
    let basis = antisymmetrizer(&space)?.column_space_basis();
    let side_a = rho_mixed(big_n, &[], &zs)?.restrict(&basis)?.dual()?;
    let space_d = MixedTensorSpace::new(big_n, 0, n)?;
    let basis_d = antisymmetrizer(&space_d)?.column_space_basis();
    let ys: Vec<Rat> = (1..=n).map(|i| z.sub(&rat((n - i) as i64))).collect();
    let side_b = rho_mixed(big_n, &ys, &[])?.restrict(&basis_d)?;
    equivalence_certificate(&side_a, &side_b)
}

/// Runs the antisymmetrizer checks for all factor counts up to each
/// auxiliary dimension up to `max_big_n`, at two base points, and the
/// contragredient comparison certificates at auxiliary dimension 2.
pub fn exterior_family(max_big_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("exterior_power");
    for big_n in 2..=max_big_n.max(2) {
        for n in 1..=big_n {
            for z in [rat(0), ratq(5, 2)] {
                report.absorb(exterior_power_checks(big_n, n, &z)?);
            }
        }
    }
    for (n, z) in [(1usize, rat(0)), (2, rat(3))] {
        let (certificate, _) = dual_exterior_certificate(2, n, &z)?;
        report.record(
            &format!("contragredient certificate n={n} z={z}"),
            certificate.pass(),
        );
    }
    Ok(report)
}

/// Runs the exchange-relation check over a fixed family of constructed
/// series: coupling products, first-order actions, centralizer-recipe
/// actions, twisted and shifted variants, an equivariant-map action, and a
/// corrupted series as a negative control.  With `heavy` disabled the two
/// most expensive constructions are skipped.
pub fn rtt_family(seed: u64, heavy: bool) -> Result<CheckReport> {
    let mut report = CheckReport::new("rtt");
    let check = |report: &mut CheckReport, lbl: &str, series: &RepresentedSeries| -> Result<()> {
        report.record(lbl, check_rtt(series, 3, seed)?);
        Ok(())
    };

    let evaluation = rho_mixed(2, &[], &[rat(0)])?;
    check(&mut report, "evaluation factor", &evaluation)?;
    check(&mut report, "dual evaluation factor", &rho_mixed(2, &[rat(5)], &[])?)?;
    let mixed = rho_mixed(2, &[ratq(7, 2)], &[rat(0), rat(1)])?;
    check(&mut report, "mixed product", &mixed)?;
    check(&mut report, "mixed product N=3", &rho_mixed(3, &[rat(4)], &[rat(0)])?)?;
    check(
        &mut report,
        "reversed mixed product",
        &sigma_mixed(2, &[ratq(7, 2)], &[rat(0), rat(1)])?,
    )?;
    check(
        &mut report,
        "reversed product N=3",
        &sigma_mixed(3, &[rat(4)], &[rat(0)])?,
    )?;
    check(&mut report, "first-order action", &pi_n_action(2, 1, 1)?)?;
    check(&mut report, "first-order action N=3", &pi_n_action(3, 2, 1)?)?;

    let space = MixedTensorSpace::new(2, 1, 1)?;
    let recipe_flat = pi_nm_action(&mixed_gl_rep(&space)?, 2, 0)?;
    check(&mut report, "centralizer recipe, flat", &recipe_flat)?;
    check(
        &mut report,
        "centralizer recipe, defining",
        &pi_nm_action(&defining_rep(2)?, 1, 1)?,
    )?;
    if heavy {
        let (rep, _) = realize_pair_rep(3, &Partition::new(vec![2])?, &Partition::empty())?;
        check(
            &mut report,
            "centralizer recipe, symmetric square",
            &pi_nm_action(&rep, 2, 1)?,
        )?;
    }

    check(
        &mut report,
        "twisted product",
        &mixed.twist(&g_mu(&Partition::new(vec![1])?))?,
    )?;
    check(&mut report, "shifted product", &mixed.shift(&rat(2))?)?;
    if heavy {
        let (hom_series, _) = build_hom_module(
            2,
            1,
            &Partition::new(vec![2])?,
            &Partition::empty(),
            &Partition::new(vec![1])?,
            &Partition::empty(),
        )?;
        check(&mut report, "equivariant-map action", &hom_series)?;
    }

    let corruption = RatFunc::new(Poly::one(), linear(&rat(17)))?;
    let mut corrupted = evaluation.matrix().clone();
    corrupted.set(0, 1, corrupted.get(0, 1).add(&corruption));
    let corrupted = RepresentedSeries::new(2, 2, corrupted)?;
    report.record("corrupted control", !check_rtt(&corrupted, 3, seed)?);

    Ok(report)
}

/// The three standing module-equivalence instances, in increasing cost
/// order; `max_instances` truncates the list.
pub fn module_equivalence_family(max_instances: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("module_equivalence");
    let instances: Vec<(usize, usize, Partition, Partition, Partition, Partition, &str)> = vec![
        (
            2,
            0,
            Partition::new(vec![1])?,
            Partition::new(vec![1])?,
            Partition::empty(),
            Partition::empty(),
            "N=2 M=0 (1)|(1)",
        ),
        (
            2,
            1,
            Partition::new(vec![2])?,
            Partition::empty(),
            Partition::new(vec![1])?,
            Partition::empty(),
            "N=2 M=1 (2)/(1)",
        ),
        (
            2,
            1,
            Partition::new(vec![1, 1])?,
            Partition::new(vec![1])?,
            Partition::new(vec![1])?,
            Partition::empty(),
            "N=2 M=1 (1,1)/(1)|(1)",
        ),
    ];
    for (big_n, big_m, lambda, lambda_tilde, mu, mu_tilde, lbl) in
        instances.into_iter().take(max_instances)
    {
        let (certificate, _) =
            verify_module_equivalence(big_n, big_m, &lambda, &lambda_tilde, &mu, &mu_tilde)?;
        report.record(lbl, certificate.pass());
    }
    Ok(report)
}

/// The standing skew-reduction instance at auxiliary dimension 2.
pub fn skew_reduction_family() -> Result<CheckReport> {
    let mut report = CheckReport::new("skew_reduction");
    let one = Partition::new(vec![1])?;
    let (certificate, _) =
        verify_skew_reduction(2, 0, &one, &one, &Partition::empty(), &Partition::empty())?;
    report.record("N=2 M=0 (1)|(1)", certificate.pass());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn one_box() -> Partition {
        Partition::new(vec![1]).unwrap()
    }

    #[test]
    fn evaluation_action_matches_first_order_form() {
        let lhs = rho_mixed(2, &[], &[rat(0)]).unwrap();
        let rhs = pi_n_action(2, 1, 0).unwrap();
        assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn empty_product_is_identity() {
        let series = rho_mixed(3, &[], &[]).unwrap();
        let expected = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(3));
        assert_eq!(series.matrix(), &expected);
        assert_eq!(series.dim(), 1);
    }

    #[test]
    fn dual_of_evaluation_matches_dual_factor_action() {
        let z = ratq(1, 2);
        let lhs = rho_mixed(2, &[], &[z.clone()]).unwrap().dual().unwrap();
        let rhs = rho_mixed(2, &[z], &[]).unwrap();
        assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn reversed_single_factor_matches() {
        let lhs = sigma_mixed(2, &[rat(3)], &[]).unwrap();
        let rhs = rho_mixed(2, &[rat(3)], &[]).unwrap();
        assert_eq!(lhs.matrix(), rhs.matrix());
    }

    #[test]
    fn blocks_factor_through_the_tensor_decomposition() {
        let product = rho_mixed(2, &[rat(2)], &[rat(0)]).unwrap();
        let dual_part = rho_mixed(2, &[rat(2)], &[]).unwrap();
        let vector_part = rho_mixed(2, &[], &[rat(0)]).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let mut expected = Matrix::<RatFunc>::zero(4, 4);
                for c in 0..2 {
                    expected =
                        expected.add(&dual_part.block(a, c).kron(&vector_part.block(c, b)));
                }
                assert_eq!(product.block(a, b), expected);
            }
        }
    }

    #[test]
    fn first_coefficients_add_across_factors() {
        let product = rho_mixed(2, &[rat(2)], &[rat(0)]).unwrap();
        let dual_part = rho_mixed(2, &[rat(2)], &[]).unwrap();
        let vector_part = rho_mixed(2, &[], &[rat(0)]).unwrap();
        let eye = Matrix::<Rat>::identity(2);
        let cp = product.coefficient_blocks(1).unwrap();
        let cd = dual_part.coefficient_blocks(1).unwrap();
        let cv = vector_part.coefficient_blocks(1).unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let expected = cd[a * 2 + b].kron(&eye).add(&eye.kron(&cv[a * 2 + b]));
                assert_eq!(cp[a * 2 + b], expected);
            }
        }
    }

    #[test]
    fn first_order_form_matches_centralizer_recipe() {
        let closed = pi_n_action(2, 1, 1).unwrap();
        let space = MixedTensorSpace::new(2, 1, 1).unwrap();
        let recipe = pi_nm_action(&mixed_gl_rep(&space).unwrap(), 2, 0).unwrap();
        assert_eq!(closed.matrix(), recipe.matrix());
        assert!(check_rtt(&closed, 3, 11).unwrap());
    }

    #[test]
    fn trivial_representation_gives_identity_series() {
        let trivial = LieAlgebraRep::new(1, vec![Matrix::zero(1, 1)]).unwrap();
        let series = pi_nm_action(&trivial, 1, 0).unwrap();
        let expected = Matrix::<RatFunc>::lift(&Matrix::<Rat>::identity(1));
        assert_eq!(series.matrix(), &expected);
    }

    #[test]
    fn defining_recipe_passes_exchange_relation() {
        let series = pi_nm_action(&defining_rep(2).unwrap(), 1, 1).unwrap();
        assert_eq!(series.aux_n(), 1);
        assert_eq!(series.dim(), 2);
        assert!(check_rtt(&series, 3, 11).unwrap());
    }

    #[test]
    fn exchange_relation_detects_corruption() {
        let series = rho_mixed(2, &[], &[rat(0)]).unwrap();
        let mut corrupted = series.matrix().clone();
        let bump = RatFunc::new(Poly::one(), linear(&rat(17))).unwrap();
        corrupted.set(0, 1, corrupted.get(0, 1).add(&bump));
        let corrupted = RepresentedSeries::new(2, 2, corrupted).unwrap();
        assert!(!check_rtt(&corrupted, 3, 11).unwrap());
    }

    #[test]
    fn series_values_for_small_partitions() {
        assert_eq!(g_mu(&Partition::empty()), RatFunc::one());
        let x2 = Poly::from_coeffs(vec![rat(0), rat(0), rat(1)]);
        let expected = RatFunc::new(x2.clone(), x2.sub(&Poly::one())).unwrap();
        assert_eq!(g_mu(&one_box()), expected);
        let shape = SkewShape::from_partition(Partition::new(vec![2, 1]).unwrap());
        assert!(check_fact(&StandardTableau::column_tableau(&shape)).unwrap());
    }

    #[test]
    fn shift_moves_the_evaluation_point() {
        let shifted = pi_n_action(2, 1, 0).unwrap().shift(&rat(2)).unwrap();
        let direct = rho_mixed(2, &[], &[rat(2)]).unwrap();
        assert_eq!(shifted.matrix(), direct.matrix());
    }

    #[test]
    fn twisting_the_identity_gives_a_scalar_series() {
        let counit = rho_mixed(2, &[], &[]).unwrap();
        let g = g_mu(&one_box());
        let twisted = counit.twist(&g).unwrap();
        let expected = Matrix::from_fn(2, 2, |r, c| {
            if r == c {
                g.clone()
            } else {
                RatFunc::zero()
            }
        });
        assert_eq!(twisted.matrix(), &expected);
    }

    #[test]
    fn twist_requires_normalization_at_infinity() {
        let counit = rho_mixed(2, &[], &[]).unwrap();
        let bad = RatFunc::new(Poly::x(), Poly::one()).unwrap();
        assert!(counit.twist(&bad).is_err());
    }

    #[test]
    fn single_box_pair_intertwines() {
        let t = StandardTableau::column_tableau(&SkewShape::from_partition(one_box()));
        assert!(verify_mixed_intertwiner(2, 0, &t, &t).unwrap());
    }

    #[test]
    fn intertwiner_fails_at_wrong_parameters() {
        let t = StandardTableau::column_tableau(&SkewShape::from_partition(one_box()));
        let space = MixedTensorSpace::new(2, 1, 1).unwrap();
        let f = space.mixed_symmetrizer_op(&t, &t, 0).unwrap();
        // Correct parameters are y = 0, z = 0; shifting z breaks the identity.
        assert!(!mixed_intertwiner_holds(2, &f, &[rat(0)], &[rat(1)]).unwrap());
    }

    #[test]
    fn tiny_equivalence_certificate_passes() {
        let (certificate, x) = verify_module_equivalence(
            2,
            0,
            &one_box(),
            &Partition::empty(),
            &Partition::empty(),
            &Partition::empty(),
        )
        .unwrap();
        assert!(certificate.pass(), "{certificate:?}");
        assert_eq!(x.rows(), 2);
    }

    #[test]
    fn vanishing_hom_space_is_reported() {
        let err = build_hom_module(
            2,
            1,
            &one_box(),
            &Partition::empty(),
            &Partition::new(vec![2]).unwrap(),
            &Partition::empty(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::EmptyHom(_)), "{err:?}");
    }

    #[test]
    fn exterior_checks_pass_at_top_degree() {
        let report = exterior_power_checks(2, 2, &rat(3)).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures());
    }

    #[test]
    fn skew_reduction_instance_passes() {
        let one = one_box();
        let (certificate, _) = verify_skew_reduction(
            2,
            0,
            &one,
            &one,
            &Partition::empty(),
            &Partition::empty(),
        )
        .unwrap();
        assert!(certificate.pass(), "{certificate:?}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(8))]
        #[test]
        fn two_factor_products_satisfy_the_exchange_relation(
            z1 in -3i64..4,
            z2 in -3i64..4,
        ) {
            let series = rho_mixed(2, &[], &[rat(z1), rat(z2)]).unwrap();
            prop_assert!(check_rtt(&series, 2, 5).unwrap());
        }
    }
}
