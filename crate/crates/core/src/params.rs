//! QRacah tuples, their admissibility, parameter arrays and the closed-form
//! scalars attached to them, plus the group actions used for classification.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{Check, Report};
use crate::scalars::{FieldConfig, Scalar};

/// `(a,b,c;q)` together with the diameter `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRacahTuple {
    a: Scalar,
    b: Scalar,
    c: Scalar,
    q: Scalar,
    d: usize,
}

impl QRacahTuple {
    /// Checks only structural requirements: a shared field, `d >= 3` and
    /// `p > 2d+2`. Admissibility is reported separately.
    pub fn new(a: Scalar, b: Scalar, c: Scalar, q: Scalar, d: usize) -> Result<Self> {
        let field = a.field();
        for x in [&b, &c, &q] {
            if x.field() != field {
                return Err(Error::FieldMismatch(field.to_string(), x.field().to_string()));
            }
        }
        if d < 3 {
            return Err(Error::DiameterTooSmall(d));
        }
        field.check_diameter(d)?;
        Ok(QRacahTuple { a, b, c, q, d })
    }

    /// Parses each slot in the scalar text format of `field`.
    pub fn parse(field: FieldConfig, a: &str, b: &str, c: &str, q: &str, d: usize) -> Result<Self> {
        Self::new(
            field.parse_scalar(a)?,
            field.parse_scalar(b)?,
            field.parse_scalar(c)?,
            field.parse_scalar(q)?,
            d,
        )
    }

    /// Convenience constructor over Q from integer numerators and denominators.
    pub fn rational(a: (i64, i64), b: (i64, i64), c: (i64, i64), q: (i64, i64), d: usize) -> Result<Self> {
        let f = FieldConfig::Rationals;
        Self::new(f.ratio(a.0, a.1)?, f.ratio(b.0, b.1)?, f.ratio(c.0, c.1)?, f.ratio(q.0, q.1)?, d)
    }

    pub fn a(&self) -> &Scalar {
        &self.a
    }
    pub fn b(&self) -> &Scalar {
        &self.b
    }
    pub fn c(&self) -> &Scalar {
        &self.c
    }
    pub fn q(&self) -> &Scalar {
        &self.q
    }
    pub fn d(&self) -> usize {
        self.d
    }
    pub fn field(&self) -> FieldConfig {
        self.a.field()
    }

    /// Same diameter, new parameters.
    pub fn with(&self, a: Scalar, b: Scalar, c: Scalar, q: Scalar) -> QRacahTuple {
        QRacahTuple { a, b, c, q, d: self.d }
    }

    /// Canonical text `(a,b,c;q)`, also the sort key of every listing.
    pub fn key(&self) -> String {
        self.to_string()
    }

    pub fn to_doc(&self) -> TupleDoc {
        TupleDoc {
            a: self.a.to_string(),
            b: self.b.to_string(),
            c: self.c.to_string(),
            q: self.q.to_string(),
            d: self.d,
            field: self.field().to_string(),
        }
    }

    pub fn from_doc(doc: &TupleDoc) -> Result<Self> {
        let field: FieldConfig = doc.field.parse()?;
        Self::parse(field, &doc.a, &doc.b, &doc.c, &doc.q, doc.d)
    }

    fn nonzero(&self) -> Result<()> {
        if [&self.a, &self.b, &self.c, &self.q].iter().any(|x| x.is_zero()) {
            return Err(Error::ZeroInverse);
        }
        Ok(())
    }
}

impl fmt::Display for QRacahTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a, self.b, self.c, self.q)
    }
}

/// Tuple interchange form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleDoc {
    pub a: String,
    pub b: String,
    pub c: String,
    pub q: String,
    pub d: usize,
    pub field: String,
}

fn superscript(n: i64) -> String {
    n.to_string()
        .chars()
        .map(|ch| match ch {
            '-' => '⁻',
            '0' => '⁰',
            '1' => '¹',
            '2' => '²',
            '3' => '³',
            '4' => '⁴',
            '5' => '⁵',
            '6' => '⁶',
            '7' => '⁷',
            '8' => '⁸',
            _ => '⁹',
        })
        .collect()
}

fn q_power_text(e: i64) -> String {
    match e {
        0 => "1".to_string(),
        1 => "q".to_string(),
        _ => format!("q{}", superscript(e)),
    }
}

fn sign_pow(field: FieldConfig, n: usize) -> Scalar {
    field.int(if n % 2 == 0 { 1 } else { -1 })
}

fn admissibility(t: &QRacahTuple, triple: bool) -> Report {
    let prefix = if triple { "T-RQRAC" } else { "RQRAC" };
    let name = |k: usize| format!("{prefix}{k}");
    let mut report = Report::new();
    let zero = [("a", &t.a), ("b", &t.b), ("c", &t.c), ("q", &t.q)]
        .into_iter()
        .find(|(_, x)| x.is_zero())
        .map(|(n, _)| format!("{n}=0"));
    let zero_free = zero.is_none();
    report.push(Check::from_witness(name(1), zero));
    if !zero_free {
        for k in 2..=4 {
            report.push(Check::fail(name(k), "requires nonzero a, b, c, q"));
        }
        return report;
    }
    let d = t.d as i64;
    let qp = |e: i64| t.q.pow(e).expect("q is nonzero");
    let one = t.field().one();

    let w2 = (1..=d).find(|&i| qp(2 * i) == one).map(|i| format!("{}=1", q_power_text(2 * i)));
    report.push(Check::from_witness(name(2), w2));

    let mut squares = vec![("a²", &t.a * &t.a), ("b²", &t.b * &t.b)];
    if triple {
        squares.push(("c²", &t.c * &t.c));
    }
    let w3 = squares.iter().find_map(|(n, x)| {
        (0..2 * d - 1)
            .map(|k| 2 * d - 2 - 2 * k)
            .find(|&e| *x == qp(e))
            .map(|e| format!("{n}={}", q_power_text(e)))
    });
    report.push(Check::from_witness(name(3), w3));

    let (ai, bi, ci) = (t.a.inv().unwrap(), t.b.inv().unwrap(), t.c.inv().unwrap());
    let products = [
        ("abc", &(&t.a * &t.b) * &t.c),
        ("a⁻¹bc", &(&ai * &t.b) * &t.c),
        ("ab⁻¹c", &(&t.a * &bi) * &t.c),
        ("abc⁻¹", &(&t.a * &t.b) * &ci),
    ];
    let w4 = products.iter().find_map(|(n, x)| {
        (0..d)
            .map(|k| d - 1 - 2 * k)
            .find(|&e| *x == qp(e))
            .map(|e| format!("{n}={}", q_power_text(e)))
    });
    report.push(Check::from_witness(name(4), w4));
    report
}

/// RQRAC1-4.
pub fn check_pair_admissible(t: &QRacahTuple) -> Report {
    admissibility(t, false)
}

/// T-RQRAC1-4: the pair conditions with `c²` also excluded in condition 3.
pub fn check_triple_admissible(t: &QRacahTuple) -> Report {
    admissibility(t, true)
}

pub fn is_pair_admissible(t: &QRacahTuple) -> bool {
    check_pair_admissible(t).overall()
}

pub fn is_triple_admissible(t: &QRacahTuple) -> bool {
    check_triple_admissible(t).overall()
}

fn require(report: Report) -> Result<()> {
    match report.failure_summary() {
        None => Ok(()),
        Some(w) => Err(Error::InadmissibleTuple(w)),
    }
}

pub fn require_pair_admissible(t: &QRacahTuple) -> Result<()> {
    require(check_pair_admissible(t))
}

pub fn require_triple_admissible(t: &QRacahTuple) -> Result<()> {
    require(check_triple_admissible(t))
}

/// `x q^{2i-d} + x^{-1} q^{d-2i}` for `i = 0..=d`.
pub fn eigen_sequence(x: &Scalar, q: &Scalar, d: usize) -> Result<Vec<Scalar>> {
    let xi = x.inv()?;
    let d = d as i64;
    (0..=d)
        .map(|i| Ok(&(x * &q.pow(2 * i - d)?) + &(&xi * &q.pow(d - 2 * i)?)))
        .collect()
}

/// The data `(theta, theta*, varphi, phi)` of a Leonard system.
/// `varphi` and `phi` are indexed from 1 in the literature; here
/// `varphi[0]` holds the first entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParameterArray {
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    pub varphi: Vec<Scalar>,
    pub phi: Vec<Scalar>,
}

/// The three eigenvalue sequences of a Leonard triple system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleEigenData {
    pub theta: Vec<Scalar>,
    pub theta_star: Vec<Scalar>,
    pub theta_eps: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrayDoc {
    pub theta: Vec<String>,
    pub theta_star: Vec<String>,
    pub varphi: Vec<String>,
    pub phi: Vec<String>,
}

fn texts(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn rev(v: &[Scalar]) -> Vec<Scalar> {
    v.iter().rev().cloned().collect()
}

impl ParameterArray {
    pub fn d(&self) -> usize {
        self.theta.len() - 1
    }

    pub fn field(&self) -> FieldConfig {
        self.theta[0].field()
    }

    /// Parameter array of the `*` relative.
    pub fn star(&self) -> ParameterArray {
        ParameterArray {
            theta: self.theta_star.clone(),
            theta_star: self.theta.clone(),
            varphi: self.varphi.clone(),
            phi: rev(&self.phi),
        }
    }

    /// Parameter array of the `↓` relative.
    pub fn down(&self) -> ParameterArray {
        ParameterArray {
            theta: self.theta.clone(),
            theta_star: rev(&self.theta_star),
            varphi: rev(&self.phi),
            phi: rev(&self.varphi),
        }
    }

    /// Parameter array of the `⇓` relative.
    pub fn double_down(&self) -> ParameterArray {
        ParameterArray {
            theta: rev(&self.theta),
            theta_star: self.theta_star.clone(),
            varphi: self.phi.clone(),
            phi: self.varphi.clone(),
        }
    }

    /// Applies a word over `*`, `↓`, `⇓` left to right.
    pub fn apply_word(&self, w: &GroupWord) -> Result<ParameterArray> {
        let mut p = self.clone();
        for g in &w.0 {
            p = match g {
                Generator::Star => p.star(),
                Generator::Down => p.down(),
                Generator::DoubleDown => p.double_down(),
                other => {
                    return Err(Error::InvalidArray(format!(
                        "{other} does not act on parameter arrays"
                    )))
                }
            };
        }
        Ok(p)
    }

    pub fn to_doc(&self) -> ArrayDoc {
        ArrayDoc {
            theta: texts(&self.theta),
            theta_star: texts(&self.theta_star),
            varphi: texts(&self.varphi),
            phi: texts(&self.phi),
        }
    }
}

fn first_split_sequence(a: &Scalar, b: &Scalar, c: &Scalar, q: &Scalar, d: usize) -> Result<Vec<Scalar>> {
    let d = d as i64;
    let qp = |e: i64| q.pow(e);
    let lead = &(&a.inv()? * &b.inv()?) * &qp(d + 1)?;
    let abc = &(a * b) * c;
    let abci = &(a * b) * &c.inv()?;
    (1..=d)
        .map(|i| {
            let f1 = &qp(i)? - &qp(-i)?;
            let f2 = &qp(i - d - 1)? - &qp(d - i + 1)?;
            let f3 = &qp(-i)? - &(&abc * &qp(i - d - 1)?);
            let f4 = &qp(-i)? - &(&abci * &qp(i - d - 1)?);
            Ok(&(&(&lead * &f1) * &f2) * &(&f3 * &f4))
        })
        .collect()
}

/// First and second split sequences from the closed product formulas,
/// without any admissibility screening.
pub fn split_sequences(t: &QRacahTuple) -> Result<(Vec<Scalar>, Vec<Scalar>)> {
    t.nonzero()?;
    let varphi = first_split_sequence(&t.a, &t.b, &t.c, &t.q, t.d)?;
    // the second sequence is the first with a replaced by a^{-1}
    let phi = first_split_sequence(&t.a.inv()?, &t.b, &t.c, &t.q, t.d)?;
    Ok((varphi, phi))
}

/// Parameter array without the admissibility gate.
pub fn parameter_array_unchecked(t: &QRacahTuple) -> Result<ParameterArray> {
    t.nonzero()?;
    let (varphi, phi) = split_sequences(t)?;
    Ok(ParameterArray {
        theta: eigen_sequence(&t.a, &t.q, t.d)?,
        theta_star: eigen_sequence(&t.b, &t.q, t.d)?,
        varphi,
        phi,
    })
}

pub fn parameter_array(t: &QRacahTuple) -> Result<ParameterArray> {
    require_pair_admissible(t)?;
    parameter_array_unchecked(t)
}

pub fn triple_eigen_data(t: &QRacahTuple) -> Result<TripleEigenData> {
    t.nonzero()?;
    Ok(TripleEigenData {
        theta: eigen_sequence(&t.a, &t.q, t.d)?,
        theta_star: eigen_sequence(&t.b, &t.q, t.d)?,
        theta_eps: eigen_sequence(&t.c, &t.q, t.d)?,
    })
}

/// `sum_{h<i} (theta_h - theta_{d-h}) / (theta_0 - theta_d)` by direct summation.
pub fn pa_sum_direct(theta: &[Scalar], i: usize) -> Result<Scalar> {
    let d = theta.len() - 1;
    let denom = (&theta[0] - &theta[d]).inv()?;
    let mut s = theta[0].field().zero();
    for h in 0..i {
        s = &s + &(&theta[h] - &theta[d - h]);
    }
    Ok(&s * &denom)
}

/// Closed form of the same sum for QRacah eigenvalues; independent of `a`.
pub fn pa_sum_closed(q: &Scalar, d: usize, i: usize) -> Result<Scalar> {
    let (d, i) = (d as i64, i as i64);
    let qp = |e: i64| q.pow(e);
    let num = &(&qp(i)? - &qp(-i)?) * &(&qp(d - i + 1)? - &qp(i - d - 1)?);
    let den = &(&qp(1)? - &qp(-1)?) * &(&qp(d)? - &qp(-d)?);
    num.checked_div(&den)
}

fn pa5_ratio(theta: &[Scalar], i: usize) -> Result<Scalar> {
    (&theta[i - 2] - &theta[i + 1]).checked_div(&(&theta[i - 1] - &theta[i]))
}

/// Checks PA1-PA5. The PA3/PA4 sums are taken by direct summation and
/// separately compared with the closed form in terms of `q_hint`.
pub fn validate_parameter_array(p: &ParameterArray, q_hint: &Scalar) -> Report {
    let mut report = Report::new();
    let d = p.d();
    let shape_ok = p.theta_star.len() == d + 1 && p.varphi.len() == d && p.phi.len() == d && d >= 1;
    if !shape_ok {
        report.push(Check::fail("shape", "sequence lengths are inconsistent"));
        return report;
    }
    let distinct = |v: &[Scalar]| -> Option<(usize, usize)> {
        (0..v.len()).find_map(|i| (0..i).find(|&j| v[i] == v[j]).map(|j| (j, i)))
    };
    let pa1 = distinct(&p.theta)
        .map(|(j, i)| format!("theta_{j}=theta_{i}"))
        .or_else(|| distinct(&p.theta_star).map(|(j, i)| format!("theta*_{j}=theta*_{i}")));
    report.push(Check::from_witness("PA1", pa1.clone()));

    let pa2 = (0..d).find_map(|k| {
        if p.varphi[k].is_zero() {
            Some(format!("varphi_{}=0", k + 1))
        } else if p.phi[k].is_zero() {
            Some(format!("phi_{}=0", k + 1))
        } else {
            None
        }
    });
    report.push(Check::from_witness("PA2", pa2));

    if pa1.is_some() {
        for n in ["PA3", "PA4", "PA5", "PA sums"] {
            report.push(Check::fail(n, "requires PA1"));
        }
        return report;
    }

    let th = &p.theta;
    let ts = &p.theta_star;
    let sums: Vec<Scalar> = (1..=d).map(|i| pa_sum_direct(th, i).expect("PA1 holds")).collect();

    let pa3 = (1..=d).find_map(|i| {
        let rhs = &(&p.phi[0] * &sums[i - 1]) + &(&(&ts[i] - &ts[0]) * &(&th[i - 1] - &th[d]));
        (p.varphi[i - 1] != rhs).then(|| format!("i={i}"))
    });
    report.push(Check::from_witness("PA3", pa3));

    let pa4 = (1..=d).find_map(|i| {
        let rhs = &(&p.varphi[0] * &sums[i - 1]) + &(&(&ts[i] - &ts[0]) * &(&th[d - i + 1] - &th[0]));
        (p.phi[i - 1] != rhs).then(|| format!("i={i}"))
    });
    report.push(Check::from_witness("PA4", pa4));

    let target = &(&q_hint.pow(2).unwrap_or_else(|_| q_hint.clone()) + &q_hint.field().one())
        + &q_hint.pow(-2).unwrap_or_else(|_| q_hint.field().zero());
    let pa5 = (2..d).find_map(|i| {
        let r = pa5_ratio(th, i).ok()?;
        let rs = match pa5_ratio(ts, i) {
            Ok(x) => x,
            Err(_) => return Some(format!("i={i}")),
        };
        if r != rs {
            Some(format!("i={i}: ratios differ"))
        } else if r != target {
            Some(format!("i={i}: ratio {r} is not q²+1+q⁻²"))
        } else {
            None
        }
    });
    report.push(Check::from_witness("PA5", pa5));

    let sum_witness = (1..=d).find_map(|i| match pa_sum_closed(q_hint, d, i) {
        Ok(c) if c == sums[i - 1] => None,
        _ => Some(format!("i={i}")),
    });
    report.push(Check::from_witness("PA sums", sum_witness));
    report
}

/// Solves the first two eigenvalues for `a`.
pub fn recover_a(theta0: &Scalar, theta1: &Scalar, q: &Scalar, d: usize) -> Result<Scalar> {
    if q.is_zero() {
        return Err(Error::DegenerateQ);
    }
    let d = d as i64;
    let den = &q.pow(2)? - &q.pow(-2)?;
    if den.is_zero() {
        return Err(Error::DegenerateQ);
    }
    let num = &(&q.pow(d)? * theta1) - &(&q.pow(d - 2)? * theta0);
    num.checked_div(&den)
}

/// `ab^{-1}q^{d-1} + a^{-1}bq^{1-d} + phi_1/((q-q^{-1})(q^d-q^{-d}))`, which equals `c + c^{-1}`.
pub fn kappa(a: &Scalar, b: &Scalar, q: &Scalar, d: usize, phi1: &Scalar) -> Result<Scalar> {
    let d = d as i64;
    let t1 = &(a * &b.inv()?) * &q.pow(d - 1)?;
    let t2 = &(&a.inv()? * b) * &q.pow(1 - d)?;
    let den = &(&q.pow(1)? - &q.pow(-1)?) * &(&q.pow(d)? - &q.pow(-d)?);
    Ok(&(&t1 + &t2) + &phi1.checked_div(&den)?)
}

/// The two roots `{c, c^{-1}}` of `x² - kappa x + 1`, larger-discriminant root first.
pub fn recover_c(a: &Scalar, b: &Scalar, q: &Scalar, d: usize, phi1: &Scalar) -> Result<(Scalar, Scalar)> {
    let k = kappa(a, b, q, d, phi1)?;
    let f = k.field();
    let disc = &(&k * &k) - &f.int(4);
    let s = disc.sqrt().ok_or_else(|| Error::NoRootInField(k.to_string()))?;
    let two = f.int(2);
    Ok(((&k + &s).checked_div(&two)?, (&k - &s).checked_div(&two)?))
}

/// The diagonal scalars `a_i = tr(A E*_i)` and `a*_i = tr(A* E_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedScalars {
    pub a_seq: Vec<Scalar>,
    pub a_star_seq: Vec<Scalar>,
}

/// Closed forms of `a_i`, `a*_i` in terms of the parameter array.
pub fn derived_scalars(p: &ParameterArray) -> Result<DerivedScalars> {
    let d = p.d();
    let side = |th: &[Scalar], other: &[Scalar]| -> Result<Vec<Scalar>> {
        (0..=d)
            .map(|i| {
                let mut v = th[i].clone();
                if i >= 1 {
                    v = &v + &p.varphi[i - 1].checked_div(&(&other[i] - &other[i - 1]))?;
                }
                if i < d {
                    v = &v + &p.varphi[i].checked_div(&(&other[i] - &other[i + 1]))?;
                }
                Ok(v)
            })
            .collect()
    };
    Ok(DerivedScalars {
        a_seq: side(&p.theta, &p.theta_star)?,
        a_star_seq: side(&p.theta_star, &p.theta)?,
    })
}

/// The eight scalars of the two Askey-Wilson relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AWCoefficients {
    pub beta: Scalar,
    pub gamma: Scalar,
    pub gamma_star: Scalar,
    pub varrho: Scalar,
    pub varrho_star: Scalar,
    pub omega: Scalar,
    pub eta: Scalar,
    pub eta_star: Scalar,
}

/// `x + x^{-1}`.
fn sym(x: &Scalar) -> Result<Scalar> {
    Ok(x + &x.inv()?)
}

/// Closed forms in terms of the tuple.
pub fn aw_coefficients(t: &QRacahTuple) -> Result<AWCoefficients> {
    require_pair_admissible(t)?;
    let z = alphas(t)?;
    let q = &t.q;
    let f = t.field();
    let q1 = &q.pow(1)? - &q.pow(-1)?;
    let q2 = &q.pow(2)? - &q.pow(-2)?;
    let varrho = -(&q2 * &q2);
    let lead = &q1 * &q2;
    Ok(AWCoefficients {
        beta: &q.pow(2)? + &q.pow(-2)?,
        gamma: f.zero(),
        gamma_star: f.zero(),
        varrho: varrho.clone(),
        varrho_star: varrho,
        omega: -(&(&q1 * &q1) * &z.2),
        eta: &lead * &z.1,
        eta_star: &lead * &z.0,
    })
}

/// Extends an eigenvalue sequence by one index at each end using the
/// three-term recurrence with constants `beta`, `gamma`.
fn extend(th: &[Scalar], beta: &Scalar, gamma: &Scalar) -> Vec<Scalar> {
    let d = th.len() - 1;
    let lo = &(gamma + &(beta * &th[0])) - &th[1];
    let hi = &(gamma + &(beta * &th[d])) - &th[d - 1];
    let mut out = Vec::with_capacity(d + 3);
    out.push(lo);
    out.extend(th.iter().cloned());
    out.push(hi);
    out
}

/// Recomputes the coefficients from eigenvalue data and the diagonal
/// scalars alone, without reference to the tuple.
pub fn aw_coefficients_from_array(p: &ParameterArray, ds: &DerivedScalars) -> Result<AWCoefficients> {
    let th = &p.theta;
    let ts = &p.theta_star;
    let one = p.field().one();
    let beta = &pa5_ratio(th, 2)? - &one;
    let gamma = &(&th[0] - &(&beta * &th[1])) + &th[2];
    let gamma_star = &(&ts[0] - &(&beta * &ts[1])) + &ts[2];
    let rho = |v: &[Scalar], g: &Scalar| {
        &(&(&(&v[0] * &v[0]) - &(&(&beta * &v[0]) * &v[1])) + &(&v[1] * &v[1])) - &(g * &(&v[0] + &v[1]))
    };
    let varrho = rho(th, &gamma);
    let varrho_star = rho(ts, &gamma_star);
    let x = extend(th, &beta, &gamma);
    let xs = extend(ts, &beta, &gamma_star);
    // x[k+1] holds theta_k
    let omega = omega_at(&ds.a_star_seq, &x, &gamma_star, 1);
    let eta = eta_at(&ds.a_star_seq, &x, &gamma_star, &omega, 0);
    let eta_star = eta_at(&ds.a_seq, &xs, &gamma, &omega, 0);
    Ok(AWCoefficients { beta, gamma, gamma_star, varrho, varrho_star, omega, eta, eta_star })
}

fn omega_at(a: &[Scalar], x: &[Scalar], g: &Scalar, i: usize) -> Scalar {
    let t = |k: isize| &x[(k + 1) as usize];
    let i = i as isize;
    let s1 = &a[i as usize] * &(t(i) - t(i + 1));
    let s2 = &a[(i - 1) as usize] * &(t(i - 1) - t(i - 2));
    &(&s1 + &s2) - &(g * &(t(i) + t(i - 1)))
}

fn eta_at(a: &[Scalar], x: &[Scalar], g: &Scalar, omega: &Scalar, i: usize) -> Scalar {
    let t = |k: isize| &x[(k + 1) as usize];
    let i = i as isize;
    let ti = t(i);
    let main = &a[i as usize] * &(&(ti - t(i - 1)) * &(ti - t(i + 1)));
    &(&main - &(g * &(ti * ti))) - &(omega * ti)
}

/// Evaluates every index of the nine-item characterization against `c`
/// and names the first item/index that fails.
pub fn aw_characterization_witness(p: &ParameterArray, ds: &DerivedScalars, c: &AWCoefficients) -> Option<String> {
    let th = &p.theta;
    let ts = &p.theta_star;
    let d = p.d();
    let one = p.field().one();
    let bp1 = &c.beta + &one;
    for i in 2..d {
        for (v, n) in [(th, "theta"), (ts, "theta*")] {
            if pa5_ratio(v, i).ok().as_ref() != Some(&bp1) {
                return Some(format!("(i) {n} at i={i}"));
            }
        }
    }
    let three = |v: &[Scalar], i: usize| &(&v[i - 1] - &(&c.beta * &v[i])) + &v[i + 1];
    for i in 1..d {
        if three(th, i) != c.gamma {
            return Some(format!("(ii) i={i}"));
        }
        if three(ts, i) != c.gamma_star {
            return Some(format!("(iii) i={i}"));
        }
    }
    let quad = |v: &[Scalar], g: &Scalar, i: usize| {
        &(&(&(&v[i - 1] * &v[i - 1]) - &(&(&c.beta * &v[i - 1]) * &v[i])) + &(&v[i] * &v[i]))
            - &(g * &(&v[i - 1] + &v[i]))
    };
    for i in 1..=d {
        if quad(th, &c.gamma, i) != c.varrho {
            return Some(format!("(iv) i={i}"));
        }
        if quad(ts, &c.gamma_star, i) != c.varrho_star {
            return Some(format!("(v) i={i}"));
        }
    }
    let x = extend(th, &c.beta, &c.gamma);
    let xs = extend(ts, &c.beta, &c.gamma_star);
    for i in 1..=d {
        if omega_at(&ds.a_star_seq, &x, &c.gamma_star, i) != c.omega {
            return Some(format!("(vi) i={i}"));
        }
        if omega_at(&ds.a_seq, &xs, &c.gamma, i) != c.omega {
            return Some(format!("(vii) i={i}"));
        }
    }
    for i in 0..=d {
        if eta_at(&ds.a_star_seq, &x, &c.gamma_star, &c.omega, i) != c.eta {
            return Some(format!("(viii) i={i}"));
        }
        if eta_at(&ds.a_seq, &xs, &c.gamma, &c.omega, i) != c.eta_star {
            return Some(format!("(ix) i={i}"));
        }
    }
    None
}

/// Right-hand-side constants of the cyclically symmetric relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z3Constants {
    pub alpha: Scalar,
    pub alpha_star: Scalar,
    pub alpha_eps: Scalar,
    pub psi: Scalar,
    pub kappa: Scalar,
}

fn alphas(t: &QRacahTuple) -> Result<(Scalar, Scalar, Scalar)> {
    let d = t.d as i64;
    let qd = &t.q.pow(d + 1)? + &t.q.pow(-d - 1)?;
    let (sa, sb, sc) = (sym(&t.a)?, sym(&t.b)?, sym(&t.c)?);
    Ok((
        &(&sb * &sc) + &(&sa * &qd),
        &(&sc * &sa) + &(&sb * &qd),
        &(&sa * &sb) + &(&sc * &qd),
    ))
}

pub fn z3_constants(t: &QRacahTuple) -> Result<Z3Constants> {
    require_pair_admissible(t)?;
    let (alpha, alpha_star, alpha_eps) = alphas(t)?;
    let d = t.d as i64;
    let q = &t.q;
    let qd = &q.pow(d + 1)? + &q.pow(-d - 1)?;
    let q1 = sym(q)?;
    let (sa, sb, sc) = (sym(&t.a)?, sym(&t.b)?, sym(&t.c)?);
    let psi = &(&(&(&(&q1 * &q1) - &(&qd * &qd)) - &(&sa * &sa)) - &(&sb * &sb)) - &(&sc * &sc);
    let psi = &psi - &(&(&(&sa * &sb) * &sc) * &qd);
    let (_, phi) = split_sequences(t)?;
    let kappa = kappa(&t.a, &t.b, q, t.d, &phi[0])?;
    Ok(Z3Constants { alpha, alpha_star, alpha_eps, psi, kappa })
}

/// Generators of the group acting on tuples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Star,
    Eps,
    Harpoon,
    Down,
    DoubleDown,
}

impl Generator {
    pub const ALL: [Generator; 5] =
        [Generator::Star, Generator::Eps, Generator::Harpoon, Generator::Down, Generator::DoubleDown];
    pub const D4: [Generator; 3] = [Generator::Star, Generator::Down, Generator::DoubleDown];

    pub fn in_d4(self) -> bool {
        Self::D4.contains(&self)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::Star => "*",
            Generator::Eps => "ε",
            Generator::Harpoon => "⇃",
            Generator::Down => "↓",
            Generator::DoubleDown => "⇓",
        })
    }
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "star" | "*" => Generator::Star,
            "eps" | "ε" => Generator::Eps,
            "harpoon" | "⇃" => Generator::Harpoon,
            "down" | "↓" => Generator::Down,
            "Down" | "⇓" => Generator::DoubleDown,
            _ => return Err(Error::Parse(format!("unknown generator {s:?}"))),
        })
    }
}

/// A word in the generators, applied left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(pub Vec<Generator>);

impl GroupWord {
    pub fn new(letters: &[Generator]) -> Self {
        GroupWord(letters.to_vec())
    }

    pub fn is_d4(&self) -> bool {
        self.0.iter().all(|g| g.in_d4())
    }

    pub fn then(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for g in &self.0 {
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// Accepts symbol strings such as `"*ε↓"` or separated names such as
/// `"star,eps,down"`.
impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(GroupWord::default());
        }
        if s.contains(|ch: char| ch.is_ascii_alphabetic()) {
            return s
                .split(|ch: char| ch == ',' || ch.is_whitespace())
                .filter(|p| !p.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<_>>>()
                .map(GroupWord);
        }
        s.chars()
            .filter(|ch| !ch.is_whitespace())
            .map(|ch| ch.to_string().parse())
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

/// One generator, by substitution.
pub fn apply_generator(g: Generator, t: &QRacahTuple) -> Result<QRacahTuple> {
    t.nonzero()?;
    let (a, b, c, q) = (&t.a, &t.b, &t.c, &t.q);
    Ok(match g {
        Generator::Star => t.with(b.inv()?, a.inv()?, c.inv()?, q.inv()?),
        Generator::Eps => t.with(c.inv()?, b.inv()?, a.inv()?, q.inv()?),
        Generator::Harpoon => t.with(a.clone(), b.clone(), c.inv()?, q.clone()),
        Generator::Down => t.with(a.clone(), b.inv()?, c.clone(), q.clone()),
        Generator::DoubleDown => t.with(a.inv()?, b.clone(), c.clone(), q.clone()),
    })
}

/// Substitution only; no admissibility screening.
pub fn apply_word_unchecked(w: &GroupWord, t: &QRacahTuple) -> Result<QRacahTuple> {
    w.0.iter().try_fold(t.clone(), |acc, g| apply_generator(*g, &acc))
}

/// Words over `*`, `↓`, `⇓` need pair admissibility; any other letter
/// needs triple admissibility.
pub fn apply_word(w: &GroupWord, t: &QRacahTuple) -> Result<QRacahTuple> {
    if w.is_d4() {
        require_pair_admissible(t)?;
    } else {
        require_triple_admissible(t)?;
    }
    apply_word_unchecked(w, t)
}

pub fn canonical_sort(v: &mut [QRacahTuple]) {
    v.sort_by_cached_key(QRacahTuple::key);
}

fn canonical_dedup(mut v: Vec<QRacahTuple>) -> Vec<QRacahTuple> {
    canonical_sort(&mut v);
    v.dedup();
    v
}

/// The eight tuples sharing one parameter array. Not deduplicated.
pub fn pair_equivalents(t: &QRacahTuple) -> Result<Vec<QRacahTuple>> {
    require_pair_admissible(t)?;
    let f = t.field();
    let s = sign_pow(f, t.d);
    let s1 = sign_pow(f, t.d + 1);
    let (a, b, c, q) = (&t.a, &t.b, &t.c, &t.q);
    let (ai, bi, ci, qi) = (a.inv()?, b.inv()?, c.inv()?, q.inv()?);
    let mut out = Vec::with_capacity(8);
    for (x, y, qq) in [(a, b, q), (&ai, &bi, &qi)] {
        for z in [c, &ci] {
            out.push(t.with(x.clone(), y.clone(), z.clone(), qq.clone()));
            out.push(t.with(&s * x, &s * y, &s1 * z, -qq));
        }
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// The orbit `(a^{±1}, b^{±1}, c^{±1}; q)`.
pub fn triple_orbit(t: &QRacahTuple) -> Result<Vec<QRacahTuple>> {
    require_triple_admissible(t)?;
    let (ai, bi, ci) = (t.a.inv()?, t.b.inv()?, t.c.inv()?);
    let mut out = Vec::with_capacity(8);
    for x in [&t.a, &ai] {
        for y in [&t.b, &bi] {
            for z in [&t.c, &ci] {
                out.push(t.with(x.clone(), y.clone(), z.clone(), t.q.clone()));
            }
        }
    }
    canonical_sort(&mut out);
    Ok(out)
}

/// Lexicographically least textual form in the triple orbit.
pub fn orbit_key(t: &QRacahTuple) -> Result<String> {
    Ok(triple_orbit(t)?[0].key())
}

/// Orbit under the subgroup generated by `gens`, by closure.
pub fn group_orbit(t: &QRacahTuple, gens: &[Generator]) -> Result<Vec<QRacahTuple>> {
    if gens.iter().all(|g| g.in_d4()) {
        require_pair_admissible(t)?;
    } else {
        require_triple_admissible(t)?;
    }
    let mut seen: BTreeMap<String, QRacahTuple> = BTreeMap::new();
    seen.insert(t.key(), t.clone());
    let mut frontier = vec![t.clone()];
    while let Some(u) = frontier.pop() {
        for g in gens {
            let v = apply_generator(*g, &u)?;
            if let std::collections::btree_map::Entry::Vacant(slot) = seen.entry(v.key()) {
                slot.insert(v.clone());
                frontier.push(v);
            }
        }
    }
    Ok(seen.into_values().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinCase {
    /// Four twins.
    Four,
    /// Two twins.
    Two,
}

impl fmt::Display for TwinCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TwinCase::Four => "case (i)",
            TwinCase::Two => "case (ii)",
        })
    }
}

/// Tuples whose triples share all three eigenvalue sequences with `t`.
pub fn twins(t: &QRacahTuple) -> Result<(TwinCase, Vec<QRacahTuple>)> {
    require_triple_admissible(t)?;
    let f = t.field();
    let d = t.d as i64;
    let (a, b, c, q) = (&t.a, &t.b, &t.c, &t.q);
    let (ai, bi, ci, qi) = (a.inv()?, b.inv()?, c.inv()?, q.inv()?);
    let products = [&(a * b) * c, &(&ai * b) * c, &(a * &bi) * c, &(a * b) * &ci];
    let blocked = products
        .iter()
        .any(|x| (0..d).any(|k| *x == -q.pow(d - 1 - 2 * k).expect("q is nonzero")));
    let mut out = vec![t.clone(), t.with(ai.clone(), bi.clone(), ci.clone(), qi.clone())];
    let case = if blocked {
        TwinCase::Two
    } else {
        let s = sign_pow(f, t.d);
        out.push(t.with(&s * a, &s * b, &s * c, -q));
        out.push(t.with(&s * &ai, &s * &bi, &s * &ci, -&qi));
        TwinCase::Four
    };
    Ok((case, canonical_dedup(out)))
}

/// `(a+a^{-1}, b+b^{-1}, c+c^{-1}; q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HatInvariant {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub q: Scalar,
}

impl fmt::Display for HatInvariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a, self.b, self.c, self.q)
    }
}

pub fn hat_invariant(t: &QRacahTuple) -> Result<HatInvariant> {
    Ok(HatInvariant { a: sym(&t.a)?, b: sym(&t.b)?, c: sym(&t.c)?, q: t.q.clone() })
}

/// Draws `(a,b,c,q)` with no admissibility screening. Over GF(p) each slot
/// is uniform on the nonzero residues; over Q slots come from
/// `{±2..±9}` and their inverses, with `q` from `{2,3,5}`.
pub fn random_tuple<R: Rng + ?Sized>(rng: &mut R, field: FieldConfig, d: usize) -> Result<QRacahTuple> {
    let mut draw = |is_q: bool| -> Scalar {
        match field {
            FieldConfig::Prime(p) => field.int(rng.gen_range(1..p) as i64),
            FieldConfig::Rationals => {
                if is_q {
                    field.int([2, 3, 5][rng.gen_range(0..3)])
                } else {
                    let n = rng.gen_range(2..=9i64);
                    let n = if rng.gen_bool(0.5) { -n } else { n };
                    let x = field.int(n);
                    if rng.gen_bool(0.5) {
                        x.inv().expect("nonzero")
                    } else {
                        x
                    }
                }
            }
        }
    };
    let (a, b, c, q) = (draw(false), draw(false), draw(false), draw(true));
    QRacahTuple::new(a, b, c, q, d)
}

/// Rejection sampling of a triple-admissible tuple.
pub fn random_admissible<R: Rng + ?Sized>(
    rng: &mut R,
    field: FieldConfig,
    d: usize,
    attempts: usize,
) -> Result<QRacahTuple> {
    for _ in 0..attempts {
        let t = random_tuple(rng, field, d)?;
        if is_triple_admissible(&t) {
            return Ok(t);
        }
    }
    Err(Error::NoAdmissibleFound(attempts))
}
