//! Concrete matrix realizations in the split basis.

use crate::error::{Error, Result};
use crate::matrices::{nullspace, primitive_idempotents, row_reduce, Matrix};
use crate::params::{
    self, eigen_sequence, parameter_array, require_pair_admissible, require_triple_admissible,
    Generator, QRacahTuple, TripleEigenData,
};
use crate::scalars::{q_pochhammer, Scalar};

/// `A` lower bidiagonal with subdiagonal 1 and diagonal `theta`; `A*` upper
/// bidiagonal with diagonal `theta*` and superdiagonal `varphi`.
pub fn split_pair(p: &params::ParameterArray) -> Result<(Matrix, Matrix)> {
    let d = p.theta.len().checked_sub(1).ok_or_else(|| Error::InvalidArray("empty theta".into()))?;
    if p.theta_star.len() != d + 1 || p.varphi.len() != d || p.phi.len() != d {
        return Err(Error::InvalidArray("sequence lengths are inconsistent".into()));
    }
    let field = p.field();
    let all = p.theta.iter().chain(&p.theta_star).chain(&p.varphi).chain(&p.phi);
    if let Some(x) = all.clone().find(|x| x.field() != field) {
        return Err(Error::InvalidArray(format!("entry {x} is over {}", x.field())));
    }
    let mut a = Matrix::diag(&p.theta);
    let mut a_star = Matrix::diag(&p.theta_star);
    for i in 1..=d {
        a.set(i, i - 1, field.one());
        a_star.set(i - 1, i, p.varphi[i - 1].clone());
    }
    Ok((a, a_star))
}

/// `A^ε = (q^{-1} A* A - q A A*)/(q² - q^{-2}) + α^ε/(q + q^{-1}) I`.
pub fn build_a_epsilon(a: &Matrix, a_star: &Matrix, t: &QRacahTuple) -> Result<Matrix> {
    require_pair_admissible(t)?;
    let q = t.q();
    let qi = q.inv()?;
    let den = &q.pow(2)? - &q.pow(-2)?;
    if den.is_zero() {
        return Err(Error::DegenerateQ);
    }
    let z = params::z3_constants(t)?;
    let comm = &(a_star * a).scale(&qi) - &(a * a_star).scale(q);
    let shift = z.alpha_eps.checked_div(&(q + &qi))?;
    Ok(&comm.scale(&den.inv()?) + &Matrix::scalar(a.dim(), &shift))
}

/// The same matrix entry by entry from its tridiagonal closed form.
pub fn a_epsilon_closed_form(t: &QRacahTuple) -> Result<Matrix> {
    require_pair_admissible(t)?;
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let n = t.d() + 1;
    let f = t.field();
    let qp = |e: i64| q.pow(e);
    let bi = b.inv()?;
    let abi = &(&a.inv()? * &a.inv()?) * &bi;
    let abc = &(a * b) * c;
    let abci = &(a * b) * &c.inv()?;
    let lead = &a.inv()? * &bi;
    let qsum = &qp(1)? + &qp(-1)?;
    let outer = &qp(d + 1)? + &qp(-d - 1)?;
    let csym = c + &c.inv()?;
    let mut m = Matrix::zeros(n, f);
    for i in 0..=d {
        let u = i as usize;
        let w = qp(d - 2 * i)?;
        let diag = &(&(&lead * &w) * &(&outer - &(&w * &qsum))) + &(&csym * &w);
        m.set(u, u, diag);
        if i >= 1 {
            m.set(u, u - 1, -(&bi * &qp(d - 2 * i + 1)?));
            let r = qp(d - 2 * i + 1)?;
            let sup = &(&(&abi * &(&qp(i)? - &qp(-i)?)) * &(&qp(d - i + 1)? - &qp(i - d - 1)?))
                * &(&(&abc - &r) * &(&abci - &r));
            m.set(u - 1, u, sup);
        }
    }
    Ok(m)
}

/// Upper triangular `M` from its entry formula.
pub fn transition_matrix(t: &QRacahTuple) -> Result<Matrix> {
    require_triple_admissible(t)?;
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let n = t.d() + 1;
    let f = t.field();
    let q2 = q.pow(2)?;
    let abc_inv = (&(a * b) * c).inv()?;
    let mut m = Matrix::zeros(n, f);
    for i in 0..=d {
        let sign = f.int(if i % 2 == 0 { 1 } else { -1 });
        for j in i..=d {
            let k = (j - i) as usize;
            let head = &(&(&sign * &b.pow(-i)?) * &c.pow(j - i)?) * &q.pow(i * i + (d - 2 * i) * j)?;
            let num = &(&q_pochhammer(&q.pow(2 * i + 2)?, &q2, k) * &q_pochhammer(&q.pow(2 * i - 2 * d)?, &q2, k))
                * &q_pochhammer(&(&abc_inv * &q.pow(d - 2 * j + 1)?), &q2, k);
            let den = q_pochhammer(&q2, &q2, k);
            m.set(i as usize, j as usize, &head * &num.checked_div(&den)?);
        }
    }
    Ok(m)
}

fn m_diagonal(t: &QRacahTuple, i: i64) -> Result<Scalar> {
    let f = t.field();
    let sign = f.int(if i % 2 == 0 { 1 } else { -1 });
    let d = t.d() as i64;
    Ok(&(&sign * &t.b().pow(-i)?) * &t.q().pow(i * (d - i))?)
}

/// Ratio `M_{i-1,j} / M_{i,j}`.
fn up_ratio(t: &QRacahTuple, i: i64, j: i64) -> Result<Scalar> {
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let abc = &(a * b) * c;
    let num = &(&(&(&a.inv()? * &q.pow(i + j - d - 1)?) * &(&q.pow(i)? - &q.pow(-i)?))
        * &(&q.pow(d - i + 1)? - &q.pow(i - d - 1)?))
        * &(&abc - &q.pow(d - 2 * i + 1)?);
    num.checked_div(&(&q.pow(i - j - 1)? - &q.pow(j - i + 1)?))
}

/// Ratio `M_{i,j+1} / M_{i,j}`.
fn right_ratio(t: &QRacahTuple, i: i64, j: i64) -> Result<Scalar> {
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let abc = &(a * b) * c;
    let num = &(&(&(&(&a.inv()? * &b.inv()?) * &q.pow(j - i)?) * &(&q.pow(j + 1)? - &q.pow(-j - 1)?))
        * &(&q.pow(d - j)? - &q.pow(j - d)?))
        * &(&abc - &q.pow(d - 2 * j - 1)?);
    num.checked_div(&(&q.pow(j - i + 1)? - &q.pow(i - j - 1)?))
}

/// Ratio `M_{i+1,j} / M_{i,j}` in its own displayed form.
fn down_ratio(t: &QRacahTuple, i: i64, j: i64) -> Result<Scalar> {
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let abc = &(a * b) * c;
    let num = &(a * &q.pow(d - i - j)?) * &(&q.pow(i - j)? - &q.pow(j - i)?);
    let den = &(&(&q.pow(i + 1)? - &q.pow(-i - 1)?) * &(&q.pow(d - i)? - &q.pow(i - d)?))
        * &(&abc - &q.pow(d - 2 * i - 1)?);
    num.checked_div(&den)
}

/// Ratio `M_{i,j-1} / M_{i,j}` in its own displayed form.
fn left_ratio(t: &QRacahTuple, i: i64, j: i64) -> Result<Scalar> {
    let (a, b, c, q) = (t.a(), t.b(), t.c(), t.q());
    let d = t.d() as i64;
    let abc = &(a * b) * c;
    let num = &(&(a * b) * &q.pow(i - j + 1)?) * &(&q.pow(j - i)? - &q.pow(i - j)?);
    let den = &(&(&q.pow(j)? - &q.pow(-j)?) * &(&q.pow(d - j + 1)? - &q.pow(j - d - 1)?))
        * &(&abc - &q.pow(d - 2 * j + 1)?);
    num.checked_div(&den)
}

/// `M` built column by column upward from its diagonal.
pub fn transition_matrix_by_columns(t: &QRacahTuple) -> Result<Matrix> {
    require_triple_admissible(t)?;
    let d = t.d() as i64;
    let mut m = Matrix::zeros(t.d() + 1, t.field());
    for j in 0..=d {
        let mut v = m_diagonal(t, j)?;
        m.set(j as usize, j as usize, v.clone());
        for i in (1..=j).rev() {
            v = &up_ratio(t, i, j)? * &v;
            m.set((i - 1) as usize, j as usize, v.clone());
        }
    }
    Ok(m)
}

/// `M` built row by row rightward from its diagonal.
pub fn transition_matrix_by_rows(t: &QRacahTuple) -> Result<Matrix> {
    require_triple_admissible(t)?;
    let d = t.d() as i64;
    let mut m = Matrix::zeros(t.d() + 1, t.field());
    for i in 0..=d {
        let mut v = m_diagonal(t, i)?;
        m.set(i as usize, i as usize, v.clone());
        for j in i..d {
            v = &right_ratio(t, i, j)? * &v;
            m.set(i as usize, (j + 1) as usize, v.clone());
        }
    }
    Ok(m)
}

/// Checks the downward and leftward recurrences on `m`, with entries
/// outside the upper triangle read as zero. Returns the first `(i,j)` where
/// one fails.
pub fn transition_recurrence_witness(t: &QRacahTuple, m: &Matrix) -> Result<Option<String>> {
    let d = t.d() as i64;
    let at = |i: i64, j: i64| -> Scalar {
        if (0..=d).contains(&i) && (0..=d).contains(&j) {
            m.get(i as usize, j as usize).clone()
        } else {
            t.field().zero()
        }
    };
    for i in 0..=d {
        for j in i..=d {
            if i < d && at(i + 1, j) != &down_ratio(t, i, j)? * &at(i, j) {
                return Ok(Some(format!("M_{{i+1,j}} relation fails at ({i},{j})")));
            }
            if j > 0 && at(i, j - 1) != &left_ratio(t, i, j)? * &at(i, j) {
                return Ok(Some(format!("M_{{i,j-1}} relation fails at ({i},{j})")));
            }
        }
    }
    Ok(None)
}

/// `M^{-1} X M`.
pub fn rho(x: &Matrix, m: &Matrix) -> Result<Matrix> {
    x.conjugate(m)
}

/// Coordinates of a matrix in the span of `I, A, A*, AA*, A*A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NTCoefficients {
    pub e: Scalar,
    pub f: Scalar,
    pub f_star: Scalar,
    pub g: Scalar,
    pub g_star: Scalar,
}

/// Solves `X = eI + fA + f*A* + gAA* + g*A*A` exactly.
pub fn nt_decompose(x: &Matrix, a: &Matrix, a_star: &Matrix) -> Result<NTCoefficients> {
    let n = a.dim();
    let basis = [Matrix::identity(n, a.field()), a.clone(), a_star.clone(), a * a_star, a_star * a];
    for m in [x, a_star] {
        if m.dim() != n {
            return Err(Error::DimensionMismatch(m.dim(), n));
        }
    }
    let rows: Vec<Vec<Scalar>> = (0..n * n)
        .map(|k| {
            basis
                .iter()
                .map(|b| b.entries()[k].clone())
                .chain(std::iter::once(x.entries()[k].clone()))
                .collect()
        })
        .collect();
    let (red, pivots) = row_reduce(rows, 6);
    if pivots.contains(&5) {
        return Err(Error::NotInSpan);
    }
    if pivots.len() < 5 {
        return Err(Error::DependentBasis);
    }
    let c: Vec<Scalar> = (0..5).map(|r| red[r][5].clone()).collect();
    Ok(NTCoefficients {
        e: c[0].clone(),
        f: c[1].clone(),
        f_star: c[2].clone(),
        g: c[3].clone(),
        g_star: c[4].clone(),
    })
}

/// Basis of all `D` with `Aᵀ D = D A` and `A*ᵀ D = D A*`.
pub fn intertwiner_space(a: &Matrix, a_star: &Matrix) -> Vec<Matrix> {
    let n = a.dim();
    let f = a.field();
    let mut rows = Vec::with_capacity(2 * n * n);
    for m in [a, a_star] {
        for i in 0..n {
            for j in 0..n {
                // (mᵀ D - D m)_{ij} = sum_k m_{ki} D_{kj} - sum_k D_{ik} m_{kj}
                let mut row = vec![f.zero(); n * n];
                for k in 0..n {
                    row[k * n + j] = &row[k * n + j] + m.get(k, i);
                    row[i * n + k] = &row[i * n + k] - m.get(k, j);
                }
                rows.push(row);
            }
        }
    }
    nullspace(rows, n * n, f)
        .into_iter()
        .map(|v| Matrix::from_fn(n, f, |i, j| v[i * n + j].clone()))
        .collect()
}

/// The unique (up to scale) invertible `D` with `Aᵀ D = D A` and
/// `A*ᵀ D = D A*`, scaled so its first nonzero entry is 1. Then
/// `X ↦ D^{-1} Xᵀ D` fixes both `A` and `A*`.
pub fn symmetrizer(a: &Matrix, a_star: &Matrix) -> Result<Matrix> {
    let mut space = intertwiner_space(a, a_star);
    match space.len() {
        0 => Err(Error::NoSymmetrizer),
        1 => {
            let d = space.pop().expect("one element");
            let (i, j) = d.first_nonzero().ok_or(Error::NoSymmetrizer)?;
            let d = d.scale(&d.get(i, j).inv()?);
            if d.rank() < d.dim() {
                return Err(Error::NoSymmetrizer);
            }
            Ok(d)
        }
        k => Err(Error::NonUnique(k)),
    }
}

/// `D^{-1} Xᵀ D`.
pub fn dagger(x: &Matrix, d: &Matrix) -> Result<Matrix> {
    Ok(&(&d.inverse()? * &x.transpose()) * d)
}

/// Change of basis whose columns are `v, (A-θ_0)v, ..., (A-θ_{d-1})...(A-θ_0)v`
/// with `v` the lowest-index nonzero column of `E*_0`.
pub fn split_basis_from_pair(a: &Matrix, a_star: &Matrix, theta: &[Scalar], theta_star: &[Scalar]) -> Result<Matrix> {
    primitive_idempotents(a, theta)?;
    let e0 = primitive_idempotents(a_star, theta_star)?.swap_remove(0);
    let n = a.dim();
    let v = (0..n)
        .map(|j| e0.column(j))
        .find(|c| c.iter().any(|x| !x.is_zero()))
        .ok_or(Error::DegenerateBasis(0))?;
    let mut cols = vec![v];
    for i in 0..n - 1 {
        let next = a.shift(&theta[i]).apply(&cols[i]);
        cols.push(next);
    }
    for k in 0..n {
        let rows: Vec<Vec<Scalar>> = cols[..=k].to_vec();
        if row_reduce(rows, n).1.len() <= k {
            return Err(Error::DegenerateBasis(k));
        }
    }
    Matrix::from_columns(&cols)
}

/// `A`, `A*`, `A^ε` with their primitive idempotents, ordered by the
/// three eigenvalue sequences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeonardRealization {
    pub tuple: QRacahTuple,
    pub a: Matrix,
    pub a_star: Matrix,
    pub a_eps: Matrix,
    pub e: Vec<Matrix>,
    pub e_star: Vec<Matrix>,
    pub e_eps: Vec<Matrix>,
    pub eig: TripleEigenData,
}

impl LeonardRealization {
    /// The relative obtained by one generator: a permutation of the three
    /// maps or a reversal of one idempotent ordering.
    pub fn relative(&self, g: Generator) -> LeonardRealization {
        let mut r = self.clone();
        let rev = |v: &mut Vec<Matrix>, s: &mut Vec<Scalar>| {
            v.reverse();
            s.reverse();
        };
        match g {
            Generator::Star => {
                std::mem::swap(&mut r.a, &mut r.a_star);
                std::mem::swap(&mut r.e, &mut r.e_star);
                std::mem::swap(&mut r.eig.theta, &mut r.eig.theta_star);
            }
            Generator::Eps => {
                std::mem::swap(&mut r.a, &mut r.a_eps);
                std::mem::swap(&mut r.e, &mut r.e_eps);
                std::mem::swap(&mut r.eig.theta, &mut r.eig.theta_eps);
            }
            Generator::Harpoon => rev(&mut r.e_eps, &mut r.eig.theta_eps),
            Generator::Down => rev(&mut r.e_star, &mut r.eig.theta_star),
            Generator::DoubleDown => rev(&mut r.e, &mut r.eig.theta),
        }
        r
    }
}

/// The Leonard triple system attached to a triple-admissible tuple.
pub fn build_triple(t: &QRacahTuple) -> Result<LeonardRealization> {
    require_triple_admissible(t)?;
    let p = parameter_array(t)?;
    let (a, a_star) = split_pair(&p)?;
    let a_eps = build_a_epsilon(&a, &a_star, t)?;
    let theta_eps = eigen_sequence(t.c(), t.q(), t.d())?;
    let e = primitive_idempotents(&a, &p.theta)?;
    let e_star = primitive_idempotents(&a_star, &p.theta_star)?;
    let e_eps = primitive_idempotents(&a_eps, &theta_eps)?;
    Ok(LeonardRealization {
        tuple: t.clone(),
        a,
        a_star,
        a_eps,
        e,
        e_star,
        e_eps,
        eig: TripleEigenData { theta: p.theta, theta_star: p.theta_star, theta_eps },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrices::Shape;
    use crate::scalars::FieldConfig;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn r(n: i64, d: i64) -> Scalar {
        FieldConfig::Rationals.ratio(n, d).unwrap()
    }

    fn t357(d: usize) -> QRacahTuple {
        QRacahTuple::rational((3, 1), (5, 1), (7, 1), (2, 1), d).unwrap()
    }

    #[test]
    fn split_pair_shapes() {
        let p = parameter_array(&t357(3)).unwrap();
        let (a, a_star) = split_pair(&p).unwrap();
        assert_eq!(a.shape(), Shape::LowerBidiagonal);
        assert_eq!(a_star.shape(), Shape::UpperBidiagonal);
        assert_eq!(a.diagonal(), p.theta);
        assert_eq!(a_star.superdiagonal(), p.varphi);
        assert_eq!(a.shift(&p.theta[0]).rank(), 3);
        let mut bad = p.clone();
        bad.varphi.pop();
        assert!(matches!(split_pair(&bad), Err(Error::InvalidArray(_))));
    }

    #[test]
    fn a_epsilon_examples() {
        let t = t357(3);
        let p = parameter_array(&t).unwrap();
        let (a, a_star) = split_pair(&p).unwrap();
        let ae = build_a_epsilon(&a, &a_star, &t).unwrap();
        assert_eq!(ae, a_epsilon_closed_form(&t).unwrap());
        assert_eq!(ae.shape(), Shape::IrreducibleTridiagonal);
        for i in 1..=3i64 {
            assert_eq!(ae.get(i as usize, i as usize - 1), &-(&r(1, 5) * &r(2, 1).pow(3 - 2 * i + 1).unwrap()));
        }
        // eigenvalues of A^ε for c = 7: 7·2^{2i-3} + 2^{3-2i}/7
        assert_eq!(
            eigen_sequence(t.c(), t.q(), 3).unwrap(),
            vec![r(113, 56), r(53, 14), r(197, 14), r(3137, 56)]
        );
    }

    #[test]
    fn collision_for_c_equal_q() {
        let th = eigen_sequence(&r(2, 1), &r(2, 1), 3).unwrap();
        assert_eq!(th[0], r(17, 4));
        assert_eq!(th[2], r(17, 4));
    }

    #[test]
    fn transition_matrix_paths_agree() {
        for d in 3..=6 {
            let t = t357(d);
            let m = transition_matrix(&t).unwrap();
            assert!(m.get(0, 0).is_one());
            let sign = r(if d % 2 == 0 { 1 } else { -1 }, 1);
            assert_eq!(m.get(d, d), &(&sign * &r(1, 5).pow(d as i64).unwrap()));
            assert_eq!(transition_matrix_by_columns(&t).unwrap(), m);
            assert_eq!(transition_matrix_by_rows(&t).unwrap(), m);
            assert_eq!(transition_recurrence_witness(&t, &m).unwrap(), None);
            for i in 0..=d {
                for j in 0..i {
                    assert!(m.get(i, j).is_zero());
                }
            }
        }
        let bad = QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap();
        assert!(matches!(transition_matrix(&bad), Err(Error::InadmissibleTuple(_))));
    }

    #[test]
    fn rho_targets() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let m = transition_matrix(&t).unwrap();
        let re = rho(&real.a_eps, &m).unwrap();
        assert_eq!(re.shape(), Shape::LowerBidiagonal);
        assert_eq!(re.diagonal(), real.eig.theta_eps);
        assert!(re.subdiagonal().iter().all(Scalar::is_one));
        let rs = rho(&real.a_star, &m).unwrap();
        assert_eq!(rs.shape(), Shape::UpperBidiagonal);
        assert_eq!(rs.diagonal(), real.eig.theta_star);
        assert_eq!(rs.superdiagonal(), vec![r(-20907, 320), r(-3120, 7), r(-516627, 320)]);
        let bca = t.with(t.b().clone(), t.c().clone(), t.a().clone(), t.q().clone());
        assert_eq!(rs.superdiagonal(), parameter_array(&bca).unwrap().varphi);
    }

    #[test]
    fn nt_examples() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let (a, s) = (&real.a, &real.a_star);
        let one = r(1, 1);
        let zero = r(0, 1);
        let id = Matrix::identity(4, FieldConfig::Rationals);
        let c = nt_decompose(&id, a, s).unwrap();
        assert_eq!([c.e, c.f, c.f_star, c.g, c.g_star], [one.clone(), zero.clone(), zero.clone(), zero.clone(), zero.clone()]);
        let c = nt_decompose(a, a, s).unwrap();
        assert_eq!([c.e, c.f, c.f_star, c.g, c.g_star], [zero.clone(), one, zero.clone(), zero.clone(), zero.clone()]);
        let c = nt_decompose(&real.a_eps, a, s).unwrap();
        assert!(c.f.is_zero() && c.f_star.is_zero());
        assert_eq!(c.g, r(-8, 15));
        assert_eq!(c.g_star, r(2, 15));
        let z = params::z3_constants(&t).unwrap();
        assert_eq!(c.e, z.alpha_eps.checked_div(&r(5, 2)).unwrap());
        assert_eq!(nt_decompose(&(a * &(a * a)), a, s), Err(Error::NotInSpan));
    }

    #[test]
    fn symmetrizer_examples() {
        let f = FieldConfig::Rationals;
        let a = Matrix::from_fn(4, f, |i, j| {
            if i.abs_diff(j) == 1 { r(1, 1) } else if i == j { r(i as i64, 1) } else { r(0, 1) }
        });
        let s = Matrix::diag(&[r(1, 1), r(2, 1), r(3, 1), r(4, 1)]);
        assert_eq!(symmetrizer(&a, &s).unwrap(), Matrix::identity(4, f));

        let t = t357(3);
        let real = build_triple(&t).unwrap();
        assert_eq!(intertwiner_space(&real.a, &real.a_star).len(), 1);
        let d = symmetrizer(&real.a, &real.a_star).unwrap();
        assert_eq!(dagger(&real.a, &d).unwrap(), real.a);
        assert_eq!(dagger(&real.a_star, &d).unwrap(), real.a_star);
        let ad = dagger(&real.a_eps, &d).unwrap();
        assert!(primitive_idempotents(&ad, &real.eig.theta_eps).is_ok());
        assert_eq!(
            symmetrizer(&Matrix::identity(4, f), &Matrix::identity(4, f)),
            Err(Error::NonUnique(16))
        );
    }

    #[test]
    fn split_basis_round_trip() {
        let t = t357(3);
        let p = parameter_array(&t).unwrap();
        let (a, s) = split_pair(&p).unwrap();
        let basis = split_basis_from_pair(&a, &s, &p.theta, &p.theta_star).unwrap();
        assert_eq!(basis, Matrix::identity(4, FieldConfig::Rationals));
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let g = loop {
            let g = Matrix::from_fn(4, FieldConfig::Rationals, |_, _| {
                use rand::Rng;
                r(rng.gen_range(-4..=4), 1)
            });
            if g.inverse().is_ok() {
                break g;
            }
        };
        let (ga, gs) = (a.conjugate(&g).unwrap(), s.conjugate(&g).unwrap());
        let sb = split_basis_from_pair(&ga, &gs, &p.theta, &p.theta_star).unwrap();
        let (na, ns) = (ga.conjugate(&sb).unwrap(), gs.conjugate(&sb).unwrap());
        assert_eq!(na.diagonal(), p.theta);
        assert_eq!(ns.diagonal(), p.theta_star);
        assert_eq!(ns.superdiagonal(), p.varphi);
        assert_eq!(na, a);
        assert_eq!(ns, s);
    }

    #[test]
    fn build_over_prime_field() {
        let f = FieldConfig::prime(1009).unwrap();
        let t = params::random_admissible(&mut ChaCha8Rng::seed_from_u64(3), f, 5, 1000).unwrap();
        let real = build_triple(&t).unwrap();
        assert_eq!(real.e_eps.len(), 6);
        assert_eq!(real.a_eps, a_epsilon_closed_form(&t).unwrap());
        let inadmissible = QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap();
        assert!(matches!(build_triple(&inadmissible), Err(Error::InadmissibleTuple(_))));
    }
}
