//! Mixed tensor spaces and the exact operators acting on them.
//!
//! A mixed tensor space `W` over the defining space `C^N` is a tensor
//! product of `ñ` dual copies followed by `n` ordinary copies.  Tensor
//! factors are labelled `1..ñ+n`, with the dual factors first; label `i`
//! corresponds to digit position `i-1` of the row-major basis index, so the
//! leftmost factor is the most significant digit.
//!
//! On these spaces the crate builds permutation operators `P_ij` (two
//! factors of the same kind), contraction-insertion operators `Q_ij` (one
//! factor of each kind, with `Q^2 = N Q`), rational R-matrices made from
//! them, and the generalized Young symmetrizers: the image of the group
//! algebra element `f_Ω` on the ordinary factors, and the two-sided
//! products `G · ((P F̃ P) ⊗ F)` that project onto the traceless part.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::{
    skew_shapes_in_box, ssyt_count, weight_from_pair, weyl_dim, Partition, SkewShape,
    StandardTableau,
};
use crate::exact_algebra::{rat, sample_rat, Field, GroupAlgebra, Matrix, Perm, Rat};
use crate::fusion::{f_pair, fuse_f_omega, squared_eigenvalue};
use crate::{CheckReport, Error, Result};

/// Largest admitted dimension `N^(n+ñ)` of a mixed tensor space.
pub const MAX_TENSOR_DIM: usize = 4096;

/// A tensor product of `dual` copies of `(C^N)*` followed by `vector`
/// copies of `C^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedTensorSpace {
    big_n: usize,
    vector: usize,
    dual: usize,
    dim: usize,
}

impl MixedTensorSpace {
    /// A space with the given defining dimension and factor counts.
    pub fn new(big_n: usize, vector: usize, dual: usize) -> Result<Self> {
        if big_n == 0 {
            return Err(Error::InvalidInput(
                "the defining space must have positive dimension".into(),
            ));
        }
        let factors = vector + dual;
        let dim = big_n
            .checked_pow(factors as u32)
            .filter(|&d| d <= MAX_TENSOR_DIM)
            .ok_or_else(|| {
                Error::BoundExceeded(format!(
                    "tensor space dimension {big_n}^{factors} exceeds {MAX_TENSOR_DIM}"
                ))
            })?;
        Ok(MixedTensorSpace {
            big_n,
            vector,
            dual,
            dim,
        })
    }

    /// Dimension `N` of the defining space.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// Number of ordinary factors.
    pub fn vector_factors(&self) -> usize {
        self.vector
    }

    /// Number of dual factors.
    pub fn dual_factors(&self) -> usize {
        self.dual
    }

    /// Total number of tensor factors.
    pub fn factors(&self) -> usize {
        self.vector + self.dual
    }

    /// Dimension of the whole space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Whether the 1-based factor label refers to a dual factor.
    pub fn is_dual(&self, label: usize) -> Result<bool> {
        self.slot(label)?;
        Ok(label <= self.dual)
    }

    /// Digit position of a 1-based factor label.
    fn slot(&self, label: usize) -> Result<usize> {
        if label == 0 || label > self.factors() {
            return Err(Error::IndexOutOfRange(format!(
                "factor label {label} not in 1..={}",
                self.factors()
            )));
        }
        Ok(label - 1)
    }

    fn distinct_slots(&self, i: usize, j: usize) -> Result<(usize, usize)> {
        let a = self.slot(i)?;
        let b = self.slot(j)?;
        if a == b {
            return Err(Error::IndexOutOfRange(format!(
                "factor labels must be distinct, got {i} twice"
            )));
        }
        Ok((a, b))
    }

    /// The permutation operator `P_ij` swapping two factors of the same
    /// kind.
    pub fn perm_op(&self, i: usize, j: usize) -> Result<Matrix<Rat>> {
        let (a, b) = self.distinct_slots(i, j)?;
        if self.is_dual(i)? != self.is_dual(j)? {
            return Err(Error::MixedFactorKinds { first: i, second: j });
        }
        let mut out: Matrix<Rat> = Matrix::zero(self.dim, self.dim);
        let mut digits = vec![0usize; self.factors()];
        for col in 0..self.dim {
            crate::exact_algebra::decode_digits(col, self.big_n, &mut digits);
            digits.swap(a, b);
            let row = crate::exact_algebra::encode_digits(&digits, self.big_n);
            out.set(row, col, rat(1));
        }
        Ok(out)
    }

    /// The contraction-insertion operator `Q_ij` pairing a dual factor with
    /// an ordinary one: contract the two factors, then insert the canonical
    /// element `w_0 = Σ_a e*_a ⊗ e_a`.  Satisfies `Q^2 = N Q`.
    pub fn q_op(&self, i: usize, j: usize) -> Result<Matrix<Rat>> {
        let (a, b) = self.distinct_slots(i, j)?;
        if self.is_dual(i)? == self.is_dual(j)? {
            return Err(Error::MixedFactorKinds { first: i, second: j });
        }
        let mut out: Matrix<Rat> = Matrix::zero(self.dim, self.dim);
        let mut digits = vec![0usize; self.factors()];
        for col in 0..self.dim {
            crate::exact_algebra::decode_digits(col, self.big_n, &mut digits);
            if digits[a] != digits[b] {
                continue;
            }
            for c in 0..self.big_n {
                digits[a] = c;
                digits[b] = c;
                let row = crate::exact_algebra::encode_digits(&digits, self.big_n);
                let v = out.get(row, col).clone() + rat(1);
                out.set(row, col, v);
            }
        }
        Ok(out)
    }

    /// The operator relabelling tensor factors: the content of slot `k`
    /// moves to slot `s(k)` (0-based slots).  No kind check is performed;
    /// this is a coordinate map used for factor reversals.
    pub fn factor_permutation_op(&self, s: &Perm) -> Result<Matrix<Rat>> {
        if s.n() != self.factors() {
            return Err(Error::SizeMismatch {
                left: s.n(),
                right: self.factors(),
            });
        }
        let mut out: Matrix<Rat> = Matrix::zero(self.dim, self.dim);
        let mut digits = vec![0usize; self.factors()];
        let mut moved = vec![0usize; self.factors()];
        for col in 0..self.dim {
            crate::exact_algebra::decode_digits(col, self.big_n, &mut digits);
            for k in 0..self.factors() {
                moved[s.apply(k)] = digits[k];
            }
            let row = crate::exact_algebra::encode_digits(&moved, self.big_n);
            out.set(row, col, rat(1));
        }
        Ok(out)
    }

    /// The operator reversing the order of all factors.
    pub fn reversal_op(&self) -> Matrix<Rat> {
        let t = self.factors();
        let images: Vec<usize> = (0..t).map(|k| t - 1 - k).collect();
        let perm = Perm::from_images(images).expect("reversal is a permutation");
        self.factor_permutation_op(&perm).expect("size matches")
    }

    /// The operator reversing the order of the dual factors only.
    pub fn dual_reversal_op(&self) -> Matrix<Rat> {
        let t = self.factors();
        let images: Vec<usize> = (0..t)
            .map(|k| if k < self.dual { self.dual - 1 - k } else { k })
            .collect();
        let perm = Perm::from_images(images).expect("reversal is a permutation");
        self.factor_permutation_op(&perm).expect("size matches")
    }

    /// The contraction `φ_ij` of a dual factor against an ordinary one,
    /// mapping onto the space with both factors removed.
    pub fn contraction_map(&self, i: usize, j: usize) -> Result<Matrix<Rat>> {
        let (a, b) = self.distinct_slots(i, j)?;
        if self.is_dual(i)? == self.is_dual(j)? {
            return Err(Error::MixedFactorKinds { first: i, second: j });
        }
        let reduced_factors = self.factors() - 2;
        let reduced_dim = self.big_n.pow(reduced_factors as u32);
        let mut out: Matrix<Rat> = Matrix::zero(reduced_dim, self.dim);
        let mut digits = vec![0usize; self.factors()];
        for col in 0..self.dim {
            crate::exact_algebra::decode_digits(col, self.big_n, &mut digits);
            if digits[a] != digits[b] {
                continue;
            }
            let rest: Vec<usize> = digits
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != a && k != b)
                .map(|(_, &d)| d)
                .collect();
            let row = crate::exact_algebra::encode_digits(&rest, self.big_n);
            let v = out.get(row, col).clone() + rat(1);
            out.set(row, col, v);
        }
        Ok(out)
    }

    /// A column basis of the traceless subspace `W°`: tensors annihilated
    /// by every dual-ordinary contraction.
    pub fn traceless_subspace(&self) -> Matrix<Rat> {
        let mut stacked: Option<Matrix<Rat>> = None;
        for i in 1..=self.dual {
            for j in (self.dual + 1)..=self.factors() {
                let c = self.contraction_map(i, j).expect("valid mixed pair");
                stacked = Some(match stacked {
                    None => c,
                    Some(s) => s.vstack(&c),
                });
            }
        }
        match stacked {
            None => Matrix::identity(self.dim),
            Some(s) => s.kernel_basis(),
        }
    }

    /// The action of a group algebra element on the ordinary factors.
    pub fn vector_factor_op(&self, a: &GroupAlgebra<Rat>) -> Result<Matrix<Rat>> {
        if a.n() != self.vector {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: self.vector,
            });
        }
        let act = a.act_on_tensor(self.big_n, false);
        Ok(Matrix::identity(self.big_n.pow(self.dual as u32)).kron(&act))
    }

    /// The action of a group algebra element on the dual factors.
    pub fn dual_factor_op(&self, a: &GroupAlgebra<Rat>) -> Result<Matrix<Rat>> {
        if a.n() != self.dual {
            return Err(Error::SizeMismatch {
                left: a.n(),
                right: self.dual,
            });
        }
        let act = a.act_on_tensor(self.big_n, true);
        Ok(act.kron(&Matrix::identity(self.big_n.pow(self.vector as u32))))
    }

    /// The Yang R-matrix `R_ij(u, v) = 1 - P_ij/(u - v)` on two factors of
    /// the same kind.
    pub fn r_op(&self, i: usize, j: usize, u: &Rat, v: &Rat) -> Result<Matrix<Rat>> {
        let diff = u - v;
        if Field::is_zero(&diff) {
            return Err(Error::PoleAt(format!("x - y = 0 at x = {u}, y = {v}")));
        }
        let p = self.perm_op(i, j)?;
        Ok(Matrix::identity(self.dim).sub(&p.scale(&diff.recip())))
    }

    /// `1 - Q_ij/(u - v)` on a dual-ordinary factor pair.
    pub fn r_tilde_op(&self, i: usize, j: usize, u: &Rat, v: &Rat) -> Result<Matrix<Rat>> {
        let diff = u - v;
        if Field::is_zero(&diff) {
            return Err(Error::PoleAt(format!("x - y = 0 at x = {u}, y = {v}")));
        }
        let q = self.q_op(i, j)?;
        Ok(Matrix::identity(self.dim).sub(&q.scale(&diff.recip())))
    }

    /// `1 - Q_ij/(u + v + N)` on a dual-ordinary factor pair.
    pub fn r_bar_op(&self, i: usize, j: usize, u: &Rat, v: &Rat) -> Result<Matrix<Rat>> {
        let den = u + v + rat(self.big_n as i64);
        if Field::is_zero(&den) {
            return Err(Error::PoleAt(format!(
                "x + y + {} = 0 at x = {u}, y = {v}",
                self.big_n
            )));
        }
        let q = self.q_op(i, j)?;
        Ok(Matrix::identity(self.dim).sub(&q.scale(&den.recip())))
    }

    /// The symmetrizer `F_Ω` acting on the ordinary factors.
    pub fn f_omega_op(&self, omega: &StandardTableau) -> Result<Matrix<Rat>> {
        self.vector_factor_op(&fuse_f_omega(omega)?)
    }

    /// The standard Lie-algebra generator `E_ab` (indices `0..N`) acting on
    /// the whole space: insertion on every ordinary factor, and the negated
    /// transposed insertion `e*_a ↦ -e*_b` on every dual factor.
    pub fn gl_generator_op(&self, a: usize, b: usize) -> Result<Matrix<Rat>> {
        if a >= self.big_n || b >= self.big_n {
            return Err(Error::IndexOutOfRange(format!(
                "generator indices ({a}, {b}) not below {}",
                self.big_n
            )));
        }
        let mut out: Matrix<Rat> = Matrix::zero(self.dim, self.dim);
        let mut digits = vec![0usize; self.factors()];
        for col in 0..self.dim {
            crate::exact_algebra::decode_digits(col, self.big_n, &mut digits);
            for s in 0..self.factors() {
                let old = digits[s];
                let (hit, new, delta) = if s < self.dual {
                    (old == a, b, rat(-1))
                } else {
                    (old == b, a, rat(1))
                };
                if hit {
                    digits[s] = new;
                    let row = crate::exact_algebra::encode_digits(&digits, self.big_n);
                    digits[s] = old;
                    let v = out.get(row, col) + delta;
                    out.set(row, col, v);
                }
            }
        }
        Ok(out)
    }

    /// The two ordered products of contraction factors
    /// `1 - Q_{ñ-l+1, ñ+k} / (c_k(Ω) + c_l(Ω̃) + N + M)`:
    /// the first with both indices ascending, the second with both
    /// descending.  `big_m` only shifts the denominators.
    pub fn g_ops(
        &self,
        omega: &StandardTableau,
        omega_tilde: &StandardTableau,
        big_m: usize,
    ) -> Result<(Matrix<Rat>, Matrix<Rat>)> {
        if omega.size() != self.vector {
            return Err(Error::SizeMismatch {
                left: omega.size(),
                right: self.vector,
            });
        }
        if omega_tilde.size() != self.dual {
            return Err(Error::SizeMismatch {
                left: omega_tilde.size(),
                right: self.dual,
            });
        }
        let shift = rat((self.big_n + big_m) as i64);
        let factor = |k: usize, l: usize| -> Result<Matrix<Rat>> {
            let den = rat(omega.content_of(k)) + rat(omega_tilde.content_of(l)) + &shift;
            if Field::is_zero(&den) {
                return Err(Error::DenominatorZero(format!(
                    "content sum {} + {} + {} vanishes for factor pair ({}, {})",
                    omega.content_of(k),
                    omega_tilde.content_of(l),
                    shift,
                    self.dual - l + 1,
                    self.dual + k
                )));
            }
            let q = self.q_op(self.dual - l + 1, self.dual + k)?;
            Ok(Matrix::identity(self.dim).sub(&q.scale(&den.recip())))
        };
        let mut forward = Matrix::identity(self.dim);
        for k in 1..=self.vector {
            for l in 1..=self.dual {
                forward = forward.mul(&factor(k, l)?);
            }
        }
        let mut backward = Matrix::identity(self.dim);
        for k in (1..=self.vector).rev() {
            for l in (1..=self.dual).rev() {
                backward = backward.mul(&factor(k, l)?);
            }
        }
        Ok((forward, backward))
    }

    /// The middle factor `(P F_Ω̃ P) ⊗ F_Ω` of the generalized symmetrizer,
    /// with `P` the reversal of the dual factors.
    pub fn symmetrizer_core(
        &self,
        omega: &StandardTableau,
        omega_tilde: &StandardTableau,
    ) -> Result<Matrix<Rat>> {
        let vec_part = self.vector_factor_op(&fuse_f_omega(omega)?)?;
        let dual_part = self.dual_factor_op(&fuse_f_omega(omega_tilde)?)?;
        let p = self.dual_reversal_op();
        Ok(p.mul(&dual_part).mul(&p).mul(&vec_part))
    }

    /// The generalized Young symmetrizer
    /// `F = G · ((P F_Ω̃ P) ⊗ F_Ω)` with denominator shift `N + M`.
    pub fn mixed_symmetrizer_op(
        &self,
        omega: &StandardTableau,
        omega_tilde: &StandardTableau,
        big_m: usize,
    ) -> Result<Matrix<Rat>> {
        let (g, _) = self.g_ops(omega, omega_tilde, big_m)?;
        Ok(g.mul(&self.symmetrizer_core(omega, omega_tilde)?))
    }
}

/// Whether two matrices with equal row count span the same column space.
fn same_column_space(a: &Matrix<Rat>, b: &Matrix<Rat>) -> bool {
    let ra = a.rank();
    ra == b.rank() && a.hstack(b).rank() == ra
}

/// The exchange identity `G · ((P F̃ P) ⊗ F) = ((P F̃ P) ⊗ F) · G'` for a
/// pair of skew tableaux on the space `W` over `C^N`, with denominator
/// shift `N + M`.
pub fn verify_g_exchange(
    big_n: usize,
    big_m: usize,
    omega: &StandardTableau,
    omega_tilde: &StandardTableau,
) -> Result<bool> {
    if omega.size() == 0 || omega_tilde.size() == 0 {
        // Both ordered products are empty, so each side is the middle
        // factor itself.
        return Ok(true);
    }
    let space = MixedTensorSpace::new(big_n, omega.size(), omega_tilde.size())?;
    let (g, gp) = space.g_ops(omega, omega_tilde, big_m)?;
    let x = space.symmetrizer_core(omega, omega_tilde)?;
    Ok(g.mul(&x) == x.mul(&gp))
}

/// Full identity suite for the generalized symmetrizer of a pair of
/// straight partitions at `M = 0`: equality of the two orderings, symmetry,
/// traceless image, the image as intersection of subspaces, the scalar
/// square, and the rank oracle.
pub fn verify_symmetrizer_identities(
    big_n: usize,
    lambda: &Partition,
    lambda_tilde: &Partition,
) -> Result<CheckReport> {
    let mut report = CheckReport::new("symmetrizer_identities");
    let prefix = format!("lambda={lambda} lambda_tilde={lambda_tilde} N={big_n}");
    let omega = StandardTableau::column_tableau(&SkewShape::from_partition(lambda.clone()));
    let omega_tilde =
        StandardTableau::column_tableau(&SkewShape::from_partition(lambda_tilde.clone()));
    let space = MixedTensorSpace::new(big_n, omega.size(), omega_tilde.size())?;
    let (g, gp) = space.g_ops(&omega, &omega_tilde, 0)?;
    let x = space.symmetrizer_core(&omega, &omega_tilde)?;
    let f = g.mul(&x);
    let f_alt = x.mul(&gp);
    report.record(&format!("{prefix} orderings"), f == f_alt);
    report.record(&format!("{prefix} symmetric"), f == f.transpose());
    let mut traceless = true;
    for i in 1..=space.dual_factors() {
        for j in (space.dual_factors() + 1)..=space.factors() {
            if !space.q_op(i, j)?.mul(&f).is_zero() {
                traceless = false;
            }
        }
    }
    report.record(&format!("{prefix} traceless"), traceless);
    // The image must be exactly (reversed dual part ⊗ ordinary part) ∩ W°.
    let t = x.column_space_basis();
    let intersection = {
        let mut stacked: Option<Matrix<Rat>> = None;
        for i in 1..=space.dual_factors() {
            for j in (space.dual_factors() + 1)..=space.factors() {
                let c = space.contraction_map(i, j)?;
                stacked = Some(match stacked {
                    None => c,
                    Some(s) => s.vstack(&c),
                });
            }
        }
        match stacked {
            None => t.clone(),
            Some(s) => t.mul(&s.mul(&t).kernel_basis()),
        }
    };
    report.record(
        &format!("{prefix} intersection"),
        same_column_space(&f, &intersection),
    );
    let scalar = squared_eigenvalue(lambda) * squared_eigenvalue(lambda_tilde);
    report.record(&format!("{prefix} square"), f.mul(&f) == f.scale(&scalar));
    if let Some(weight) = weight_from_pair(lambda, lambda_tilde, big_n) {
        report.record(
            &format!("{prefix} rank"),
            f.rank() as u64 == weyl_dim(&weight),
        );
    }
    Ok(report)
}

/// Symmetrizer suite over all partition pairs with at most `max_cells`
/// total cells and all `N <= max_big_n` admitting a nonzero traceless
/// subspace for the pair.
pub fn symmetrizer_family(max_cells: usize, max_big_n: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("symmetrizer_suite");
    for l in 0..=max_cells {
        for lt in 0..=(max_cells - l) {
            for lambda in Partition::all_of(l) {
                for lambda_tilde in Partition::all_of(lt) {
                    let min_n = (lambda.len() + lambda_tilde.len()).max(1);
                    for big_n in min_n..=max_big_n {
                        report.absorb(verify_symmetrizer_identities(
                            big_n,
                            &lambda,
                            &lambda_tilde,
                        )?);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Column tableaux of the given shapes, with at most one representative
/// for each distinct fusion signature.  The operators built from a tableau
/// depend only on its content sequence and the horizontal offsets of its
/// entries, so diagonal translates of a shape produce identical checks.
pub(crate) fn dedup_by_fusion_signature(shapes: Vec<SkewShape>) -> Vec<StandardTableau> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for shape in shapes {
        let t = StandardTableau::column_tableau(&shape);
        let cols: Vec<usize> = (1..=t.size()).map(|k| t.column_of(k)).collect();
        let min = cols.iter().copied().min().unwrap_or(1);
        let normalized: Vec<usize> = cols.iter().map(|c| c - min).collect();
        if seen.insert((t.contents(), normalized)) {
            out.push(t);
        }
    }
    out
}

/// Exchange identity over all pairs of skew shapes (boxed at 3×3, deduped
/// by fusion signature) with at most `max_cells` total cells and all
/// `N ≥ 1`, `M ≥ 0` with `N + M <= max_nm` admissible for the pair.
pub fn g_exchange_family(max_cells: usize, max_nm: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new("g_exchange");
    let tableaux_of = |cells: usize| -> Vec<StandardTableau> {
        if cells == 0 {
            vec![StandardTableau::column_tableau(&SkewShape::from_partition(
                Partition::empty(),
            ))]
        } else {
            dedup_by_fusion_signature(skew_shapes_in_box(cells, 3, 3))
        }
    };
    for n in 0..=max_cells {
        for nt in 0..=(max_cells - n) {
            for omega in tableaux_of(n) {
                for omega_tilde in tableaux_of(nt) {
                    let rows = omega.shape().outer().len()
                        + omega_tilde.shape().outer().len();
                    for big_n in 1..=max_nm {
                        for big_m in 0..=(max_nm - big_n) {
                            // Denominators are guaranteed nonzero only when
                            // the row counts fit into N + M.
                            if rows > big_n + big_m {
                                continue;
                            }
                            let ok =
                                verify_g_exchange(big_n, big_m, &omega, &omega_tilde)?;
                            report.record(
                                &format!(
                                    "omega={} omega_tilde={} N={big_n} M={big_m}",
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

/// Rank oracle family: `rank F_Ω` equals the number of semistandard
/// tableaux of the shape for every skew shape with at most `max_cells`
/// cells (boxed at 4×4) and every listed defining dimension, together with
/// the truncations of the nine-cell example tableau.
pub fn rank_family(max_cells: usize, big_ns: &[usize]) -> Result<CheckReport> {
    let mut report = CheckReport::new("rank_oracle");
    let mut instances: Vec<StandardTableau> = Vec::new();
    for cells in 1..=max_cells {
        for shape in skew_shapes_in_box(cells, 4, 4) {
            instances.push(StandardTableau::column_tableau(&shape));
        }
    }
    let example = SkewShape::new(
        Partition::new(vec![5, 3, 3, 3, 3])?,
        Partition::new(vec![3, 3, 2])?,
    )?;
    let example_tableau = StandardTableau::column_tableau(&example);
    for k in 1..=example_tableau.size().min(max_cells) {
        instances.push(example_tableau.truncate(k)?);
    }
    for tableau in &instances {
        let f = fuse_f_omega(tableau)?;
        for &n in big_ns {
            let rank = f.act_on_tensor(n, false).rank() as u64;
            let expected = ssyt_count(tableau.shape(), n)?;
            report.record(
                &format!("shape={} N={n}", tableau.shape()),
                rank == expected,
            );
        }
    }
    Ok(report)
}

/// Draw a triple of sample points avoiding every pole that any identity in
/// the R-matrix suite could hit for `N <= 3`: pairwise differences must be
/// nonzero and pairwise sums must avoid `0, -1, -2, -3`.
fn sample_triple(rng: &mut ChaCha8Rng) -> (Rat, Rat, Rat) {
    loop {
        let x = sample_rat(rng);
        let y = sample_rat(rng);
        let z = sample_rat(rng);
        let pairs = [(&x, &y), (&x, &z), (&y, &z)];
        let ok = pairs.iter().all(|(u, v)| {
            let diff = *u - *v;
            if Field::is_zero(&diff) {
                return false;
            }
            let sum = *u + *v;
            (0..=3).all(|l| !Field::is_zero(&(&sum + rat(l))))
        });
        if ok {
            return (x, y, z);
        }
    }
}

/// The R-matrix identity suite: braid and unitarity relations for the
/// group-algebra factors, the Yang–Baxter relation and its mixed variants
/// for the operators `R`, `R̃`, `R̄`, each checked at seeded generic sample
/// points on spaces of up to three factors.
pub fn rmatrix_family(max_big_n: usize, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut report = CheckReport::new("rmatrix_identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // Group-algebra level: braid relation in S_3, unitarity in S_2.
    for s in 0..samples {
        let (x, y, z) = sample_triple(&mut rng);
        for (i, j, k) in [
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 2),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
        ] {
            let lhs = f_pair(3, i, j, &x, &y)?
                .mul(&f_pair(3, i, k, &x, &z)?)?
                .mul(&f_pair(3, j, k, &y, &z)?)?;
            let rhs = f_pair(3, j, k, &y, &z)?
                .mul(&f_pair(3, i, k, &x, &z)?)?
                .mul(&f_pair(3, i, j, &x, &y)?)?;
            report.record(&format!("pair_braid ijk=({i},{j},{k}) sample={s}"), lhs == rhs);
        }
        let lhs = f_pair(2, 0, 1, &x, &y)?.mul(&f_pair(2, 1, 0, &y, &x)?)?;
        let diff = &x - &y;
        let scalar = rat(1) - (&diff * &diff).recip();
        let rhs = GroupAlgebra::<Rat>::one(2).scale_by(&scalar);
        report.record(&format!("pair_unitarity sample={s}"), lhs == rhs);
    }

    // Operator level on spaces of two and three factors.
    for big_n in 1..=max_big_n {
        for s in 0..samples {
            let (x, y, z) = sample_triple(&mut rng);
            let tag = |name: &str, rest: &str| format!("{name} N={big_n} sample={s} {rest}");

            for (vector, dual) in [(3usize, 0usize), (0, 3)] {
                let space = MixedTensorSpace::new(big_n, vector, dual)?;
                for (i, j, k) in [
                    (1, 2, 3),
                    (1, 3, 2),
                    (2, 1, 3),
                    (2, 3, 1),
                    (3, 1, 2),
                    (3, 2, 1),
                ] {
                    let lhs = space
                        .r_op(i, j, &x, &y)?
                        .mul(&space.r_op(i, k, &x, &z)?)
                        .mul(&space.r_op(j, k, &y, &z)?);
                    let rhs = space
                        .r_op(j, k, &y, &z)?
                        .mul(&space.r_op(i, k, &x, &z)?)
                        .mul(&space.r_op(i, j, &x, &y)?);
                    report.record(
                        &tag("yang_baxter", &format!("side={vector}v{dual}d ijk=({i},{j},{k})")),
                        lhs == rhs,
                    );
                }
            }

            for (vector, dual) in [(2usize, 0usize), (0, 2)] {
                let space = MixedTensorSpace::new(big_n, vector, dual)?;
                for (i, j) in [(1, 2), (2, 1)] {
                    let lhs = space.r_op(i, j, &x, &y)?.mul(&space.r_op(j, i, &y, &x)?);
                    let diff = &x - &y;
                    let scalar = rat(1) - (&diff * &diff).recip();
                    let rhs = Matrix::identity(space.dim()).scale(&scalar);
                    report.record(
                        &tag("r_unitarity", &format!("side={vector}v{dual}d ij=({i},{j})")),
                        lhs == rhs,
                    );
                    let neg = space.r_op(i, j, &-&x, &-&y)?;
                    report.record(
                        &tag("r_transpose", &format!("side={vector}v{dual}d ij=({i},{j})")),
                        neg == space.r_op(j, i, &y, &x)?,
                    );
                }
            }

            // One dual factor against one or two ordinary factors.
            let pair = MixedTensorSpace::new(big_n, 1, 1)?;
            let lhs = pair
                .r_tilde_op(1, 2, &-&x, &y)?
                .mul(&pair.r_bar_op(1, 2, &x, &y)?);
            report.record(
                &tag("mixed_r_inverse", "space=1v1d"),
                lhs == Matrix::identity(pair.dim()),
            );

            let space = MixedTensorSpace::new(big_n, 2, 1)?;
            for (j, k) in [(2, 3), (3, 2)] {
                let lhs = space
                    .r_tilde_op(1, k, &x, &z)?
                    .mul(&space.r_tilde_op(1, j, &x, &y)?)
                    .mul(&space.r_op(j, k, &y, &z)?);
                let rhs = space
                    .r_op(j, k, &y, &z)?
                    .mul(&space.r_tilde_op(1, j, &x, &y)?)
                    .mul(&space.r_tilde_op(1, k, &x, &z)?);
                report.record(&tag("mixed_yb_tilde", &format!("jk=({j},{k})")), lhs == rhs);

                let lhs = space
                    .r_bar_op(1, j, &x, &y)?
                    .mul(&space.r_bar_op(1, k, &x, &z)?)
                    .mul(&space.r_op(j, k, &y, &z)?);
                let rhs = space
                    .r_op(j, k, &y, &z)?
                    .mul(&space.r_bar_op(1, k, &x, &z)?)
                    .mul(&space.r_bar_op(1, j, &x, &y)?);
                report.record(&tag("mixed_yb_bar", &format!("jk=({j},{k})")), lhs == rhs);
            }

            let space = MixedTensorSpace::new(big_n, 1, 2)?;
            for (i, j) in [(1, 2), (2, 1)] {
                let lhs = space
                    .r_op(j, i, &y, &x)?
                    .mul(&space.r_bar_op(i, 3, &x, &z)?)
                    .mul(&space.r_bar_op(j, 3, &y, &z)?);
                let rhs = space
                    .r_bar_op(j, 3, &y, &z)?
                    .mul(&space.r_bar_op(i, 3, &x, &z)?)
                    .mul(&space.r_op(j, i, &y, &x)?);
                report.record(&tag("mixed_yb_dual", &format!("ij=({i},{j})")), lhs == rhs);
            }
            for i in [1usize, 2] {
                let lhs = space
                    .r_tilde_op(i, 3, &-&x, &y)?
                    .mul(&space.r_bar_op(i, 3, &x, &y)?);
                report.record(
                    &tag("mixed_r_inverse", &format!("space=1v2d i={i}")),
                    lhs == Matrix::identity(space.dim()),
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{Poly, RatFunc};
    use proptest::prelude::*;

    fn shape(outer: &[usize], inner: &[usize]) -> SkewShape {
        SkewShape::new(
            Partition::new(outer.to_vec()).unwrap(),
            Partition::new(inner.to_vec()).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn space_construction_and_bounds() {
        let space = MixedTensorSpace::new(3, 2, 1).unwrap();
        assert_eq!(space.dim(), 27);
        assert_eq!(space.factors(), 3);
        assert!(space.is_dual(1).unwrap());
        assert!(!space.is_dual(2).unwrap());
        assert!(matches!(
            MixedTensorSpace::new(4, 4, 3),
            Err(Error::BoundExceeded(_))
        ));
        assert!(matches!(
            MixedTensorSpace::new(0, 1, 0),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn operator_kind_checks() {
        let space = MixedTensorSpace::new(2, 1, 1).unwrap();
        assert!(matches!(
            space.perm_op(1, 2),
            Err(Error::MixedFactorKinds { .. })
        ));
        assert!(space.q_op(1, 2).is_ok());
        let pure = MixedTensorSpace::new(2, 2, 0).unwrap();
        assert!(pure.perm_op(1, 2).is_ok());
        assert!(matches!(
            pure.q_op(1, 2),
            Err(Error::MixedFactorKinds { .. })
        ));
        assert!(matches!(
            pure.perm_op(1, 3),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn q_squares_to_n_q() {
        for big_n in 1..=3 {
            let space = MixedTensorSpace::new(big_n, 1, 1).unwrap();
            let q = space.q_op(1, 2).unwrap();
            assert_eq!(q.mul(&q), q.scale(&rat(big_n as i64)));
        }
    }

    #[test]
    fn traceless_dimension_adjoint() {
        // W over C^N with one dual and one ordinary factor: the traceless
        // subspace has dimension N^2 - 1.
        for big_n in 2..=3 {
            let space = MixedTensorSpace::new(big_n, 1, 1).unwrap();
            assert_eq!(space.traceless_subspace().cols(), big_n * big_n - 1);
        }
    }

    #[test]
    fn f_omega_matrix_product_route_agrees() {
        // Build the fusion product directly from permutation matrices over
        // rational functions of the deformation parameter and compare with
        // the group-algebra route.
        let sk = shape(&[2, 2], &[1]);
        let t = StandardTableau::column_tableau(&sk);
        let n = t.size();
        for big_n in [2usize, 3] {
            let space = MixedTensorSpace::new(big_n, n, 0).unwrap();
            let points: Vec<RatFunc> = (1..=n)
                .map(|k| {
                    RatFunc::from_poly(Poly::from_coeffs(vec![
                        rat(t.content_of(k)),
                        rat(t.column_of(k) as i64),
                    ]))
                })
                .collect();
            let mut acc = Matrix::<RatFunc>::identity(space.dim());
            for i in 0..n {
                for j in (i + 1)..n {
                    let p = Matrix::lift(&space.perm_op(i + 1, j + 1).unwrap());
                    let coeff = points[i]
                        .sub(&points[j])
                        .inv()
                        .expect("distinct evaluation points");
                    let factor = Matrix::identity(space.dim()).sub(&p.scale(&coeff));
                    acc = acc.mul(&factor);
                }
            }
            let direct = acc.limit_at_zero().unwrap();
            assert_eq!(direct, space.f_omega_op(&t).unwrap());
        }
    }

    #[test]
    fn g_grid_ordering_invariant() {
        // The ascending product taken dual-index-major coincides with the
        // factor-index-major order used by g_ops.
        let omega = StandardTableau::column_tableau(&shape(&[2], &[]));
        let omega_tilde = StandardTableau::column_tableau(&shape(&[1, 1], &[]));
        let space = MixedTensorSpace::new(3, 2, 2).unwrap();
        let (g, _) = space.g_ops(&omega, &omega_tilde, 0).unwrap();
        let mut other = Matrix::identity(space.dim());
        for l in 1..=space.dual_factors() {
            for k in 1..=space.vector_factors() {
                let den = rat(omega.content_of(k))
                    + rat(omega_tilde.content_of(l))
                    + rat(space.big_n() as i64);
                let q = space
                    .q_op(space.dual_factors() - l + 1, space.dual_factors() + k)
                    .unwrap();
                other = other.mul(
                    &Matrix::identity(space.dim()).sub(&q.scale(&den.recip())),
                );
            }
        }
        assert_eq!(g, other);
    }

    #[test]
    fn symmetrizer_single_box_pair() {
        // lambda = lambda_tilde = (1) over C^2: rank must be the dimension
        // of the adjoint representation, 3.
        let one = Partition::new(vec![1]).unwrap();
        let report = verify_symmetrizer_identities(2, &one, &one).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures());
        let space = MixedTensorSpace::new(2, 1, 1).unwrap();
        let omega = StandardTableau::column_tableau(&SkewShape::from_partition(one.clone()));
        let f = space.mixed_symmetrizer_op(&omega, &omega, 0).unwrap();
        assert_eq!(f.rank(), 3);
    }

    #[test]
    fn g_exchange_small_skew_pair() {
        let omega = StandardTableau::column_tableau(&shape(&[2, 1], &[1]));
        let omega_tilde = StandardTableau::column_tableau(&shape(&[1], &[]));
        for (big_n, big_m) in [(3, 0), (2, 1), (3, 1)] {
            assert!(verify_g_exchange(big_n, big_m, &omega, &omega_tilde).unwrap());
        }
    }

    #[test]
    fn rank_small_shapes() {
        for (outer, inner) in [
            (vec![2usize, 1], vec![]),
            (vec![2, 2], vec![1]),
            (vec![3, 1], vec![1]),
        ] {
            let sk = shape(&outer, &inner);
            let t = StandardTableau::column_tableau(&sk);
            let f = fuse_f_omega(&t).unwrap();
            for n in [2usize, 3] {
                assert_eq!(
                    f.act_on_tensor(n, false).rank() as u64,
                    ssyt_count(&sk, n).unwrap(),
                    "shape {sk} N={n}"
                );
            }
        }
    }

    #[test]
    fn rmatrix_suite_smoke() {
        let report = rmatrix_family(2, 2, 414).unwrap();
        assert!(report.pass(), "failures: {:?}", report.failures());
        assert!(report.instances() > 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(16))]

        #[test]
        fn prop_perm_involution_q_scalar(
            big_n in 1usize..4,
            vector in 1usize..3,
            dual in 1usize..3,
        ) {
            let space = MixedTensorSpace::new(big_n, vector, dual).unwrap();
            let q = space.q_op(1, dual + 1).unwrap();
            prop_assert_eq!(q.mul(&q), q.scale(&rat(big_n as i64)));
            if vector >= 2 {
                let p = space.perm_op(dual + 1, dual + 2).unwrap();
                prop_assert_eq!(p.mul(&p), Matrix::identity(space.dim()));
            }
            let rev = space.reversal_op();
            prop_assert_eq!(rev.mul(&rev), Matrix::identity(space.dim()));
        }
    }
}
