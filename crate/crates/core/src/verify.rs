//! Exact checkers for the defining properties of Leonard pairs and triples
//! and for the relations they satisfy. Every check is an exact equality.

use crate::error::Result;
use crate::matrices::{primitive_idempotents, Matrix, Shape};
use crate::params::{
    self, aw_characterization_witness, aw_coefficients, aw_coefficients_from_array, check_triple_admissible,
    derived_scalars, parameter_array, split_sequences, validate_parameter_array, z3_constants, AWCoefficients,
    ParameterArray, QRacahTuple, TripleEigenData, Z3Constants,
};
use crate::realize::{
    a_epsilon_closed_form, build_a_epsilon, build_triple, dagger, intertwiner_space, nt_decompose, rho,
    split_pair, symmetrizer, transition_matrix, transition_matrix_by_columns, transition_matrix_by_rows,
    transition_recurrence_witness, LeonardRealization,
};
use crate::scalars::Scalar;

pub use crate::report::{Check, Report as VerificationReport};

fn zero_witness(m: &Matrix) -> Option<String> {
    m.first_nonzero().map(|(i, j)| format!("residual {} at ({i},{j})", m.get(i, j)))
}

fn equal_witness(what: &str, x: &Matrix, y: &Matrix) -> Option<String> {
    if x.dim() != y.dim() || x.field() != y.field() {
        return Some(format!("{what}: incompatible matrices"));
    }
    x.first_difference(y)
        .map(|(i, j)| format!("{what} differs at ({i},{j}): {} vs {}", x.get(i, j), y.get(i, j)))
}

fn first_error(name: &str, r: Result<Option<String>>) -> Check {
    match r {
        Ok(w) => Check::from_witness(name, w),
        Err(e) => Check::fail(name, e.to_string()),
    }
}

/// Distinct eigenvalues, each of geometric multiplicity one.
pub fn check_multiplicity_free(a: &Matrix, eigs: &[Scalar]) -> Check {
    let name = "multiplicity-free";
    if eigs.len() != a.dim() {
        return Check::fail(name, format!("{} eigenvalues for dimension {}", eigs.len(), a.dim()));
    }
    for i in 0..eigs.len() {
        if let Some(j) = (0..i).find(|&j| eigs[j] == eigs[i]) {
            return Check::fail(name, format!("theta_{j} = theta_{i} = {}", eigs[i]));
        }
    }
    for (i, t) in eigs.iter().enumerate() {
        let r = a.shift(t).rank();
        if r + 1 != a.dim() {
            return Check::fail(name, format!("rank(A - theta_{i} I) = {r}"));
        }
    }
    Check::pass(name)
}

fn tridiagonal_action(e: &[Matrix], x: &Matrix, e_label: &str, x_label: &str) -> Option<String> {
    let n = e.len();
    let xe: Vec<Matrix> = e.iter().map(|ej| x * ej).collect();
    for i in 0..n {
        for j in 0..n {
            let m = &e[i] * &xe[j];
            let gap = i.abs_diff(j);
            if gap > 1 {
                if let Some((r, c)) = m.first_nonzero() {
                    return Some(format!("{e_label}_{i} {x_label} {e_label}_{j} != 0 at ({r},{c})"));
                }
            } else if gap == 1 && m.is_zero() {
                return Some(format!("{e_label}_{i} {x_label} {e_label}_{j} = 0"));
            }
        }
    }
    None
}

/// `E_i A* E_j` and `E*_i A E*_j` vanish exactly when `|i-j| > 1`.
pub fn check_leonard_system(a: &Matrix, e: &[Matrix], a_star: &Matrix, e_star: &[Matrix]) -> Check {
    let name = "Leonard system";
    if e.len() != a.dim() || e_star.len() != a.dim() {
        return Check::fail(name, "idempotent list has the wrong length");
    }
    let w = tridiagonal_action(e, a_star, "E", "A*").or_else(|| tridiagonal_action(e_star, a, "E*", "A"));
    Check::from_witness(name, w)
}

/// `E_i E_j = δ_ij E_i`, `ΣE_i = I` and `Σθ_i E_i = A`.
pub fn check_idempotents(a: &Matrix, e: &[Matrix], eigs: &[Scalar]) -> Option<String> {
    let n = a.dim();
    let mut sum = Matrix::zeros(n, a.field());
    let mut spectral = Matrix::zeros(n, a.field());
    for (i, ei) in e.iter().enumerate() {
        for (j, ej) in e.iter().enumerate() {
            let p = ei * ej;
            let ok = if i == j { &p == ei } else { p.is_zero() };
            if !ok {
                return Some(format!("E_{i} E_{j}"));
            }
        }
        sum = &sum + ei;
        spectral = &spectral + &ei.scale(&eigs[i]);
    }
    if sum != Matrix::identity(n, a.field()) {
        return Some("sum of idempotents is not I".into());
    }
    equal_witness("spectral sum", &spectral, a)
}

fn triple_from_idempotents(
    maps: [(&Matrix, &[Matrix], &[Scalar]); 3],
    labels: [&str; 3],
) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let mut ok = true;
    for ((m, e, th), l) in maps.iter().zip(labels) {
        let w = check_idempotents(m, e, th);
        ok &= w.is_none();
        rep.push(Check::from_witness(format!("idempotents of {l}"), w));
    }
    if !ok {
        return rep;
    }
    for k in 0..3 {
        let (x, ex, _) = maps[k];
        let (y, ey, _) = maps[(k + 1) % 3];
        let mut c = check_leonard_system(x, ex, y, ey);
        c.name = format!("Leonard system ({},{})", labels[k], labels[(k + 1) % 3]);
        rep.push(c);
    }
    rep
}

/// Triple check starting from matrices and eigenvalue sequences only: the
/// three maps must be multiplicity-free before idempotents exist.
pub fn check_leonard_triple(a: &Matrix, a_star: &Matrix, a_eps: &Matrix, eig: &TripleEigenData) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let labels = ["A", "A*", "A^ε"];
    let maps = [(a, &eig.theta), (a_star, &eig.theta_star), (a_eps, &eig.theta_eps)];
    let mut idem = Vec::new();
    for ((m, th), l) in maps.iter().zip(labels) {
        let mut c = check_multiplicity_free(m, th);
        c.name = format!("multiplicity-free {l}");
        let pass = c.pass;
        rep.push(c);
        if pass {
            idem.push(primitive_idempotents(m, th).expect("multiplicity-free"));
        }
    }
    if idem.len() == 3 {
        rep.extend(triple_from_idempotents(
            [(a, &idem[0], &eig.theta), (a_star, &idem[1], &eig.theta_star), (a_eps, &idem[2], &eig.theta_eps)],
            labels,
        ));
    }
    rep
}

/// The three constituent Leonard systems `(A,A*)`, `(A*,A^ε)`, `(A^ε,A)`.
pub fn check_leonard_triple_system(r: &LeonardRealization) -> VerificationReport {
    triple_from_idempotents(
        [
            (&r.a, &r.e, &r.eig.theta),
            (&r.a_star, &r.e_star, &r.eig.theta_star),
            (&r.a_eps, &r.e_eps, &r.eig.theta_eps),
        ],
        ["A", "A*", "A^ε"],
    )
}

/// Residuals of both Askey-Wilson relations.
pub fn askey_wilson_residuals(a: &Matrix, s: &Matrix, c: &AWCoefficients) -> (Matrix, Matrix) {
    let n = a.dim();
    let id = Matrix::identity(n, a.field());
    let (aa, ss, as_, sa) = (a * a, s * s, a * s, s * a);
    let r1 = &(&(&(&(&(&(&(&aa * s) - &(&(a * s) * a).scale(&c.beta)) + &(s * &aa))
        - &(&as_ + &sa).scale(&c.gamma))
        - &s.scale(&c.varrho))
        - &aa.scale(&c.gamma_star))
        - &a.scale(&c.omega))
        - &id.scale(&c.eta);
    let r2 = &(&(&(&(&(&(&(&ss * a) - &(&(s * a) * s).scale(&c.beta)) + &(a * &ss))
        - &(&sa + &as_).scale(&c.gamma_star))
        - &a.scale(&c.varrho_star))
        - &ss.scale(&c.gamma))
        - &s.scale(&c.omega))
        - &id.scale(&c.eta_star);
    (r1, r2)
}

pub fn check_askey_wilson(a: &Matrix, a_star: &Matrix, c: &AWCoefficients) -> Check {
    let (r1, r2) = askey_wilson_residuals(a, a_star, c);
    let w = zero_witness(&r1)
        .map(|w| format!("first relation {w}"))
        .or_else(|| zero_witness(&r2).map(|w| format!("second relation {w}")));
    Check::from_witness("Askey-Wilson relations", w)
}

/// `(q X Y - q^{-1} Y X)/(q² - q^{-2}) + Z - k/(q + q^{-1}) I`.
fn z3_residual(x: &Matrix, y: &Matrix, z: &Matrix, k: &Scalar, q: &Scalar) -> Result<Matrix> {
    let qi = q.inv()?;
    let den = (&q.pow(2)? - &q.pow(-2)?).inv()?;
    let comm = &(x * y).scale(q) - &(y * x).scale(&qi);
    let shift = k.checked_div(&(q + &qi))?;
    Ok(&(&comm.scale(&den) + z) - &Matrix::scalar(x.dim(), &shift))
}

pub fn check_z3_symmetric(a: &Matrix, a_star: &Matrix, a_eps: &Matrix, z: &Z3Constants, q: &Scalar) -> Check {
    let name = "Z3-symmetric relations";
    let rels = [
        (a_star, a_eps, a, &z.alpha),
        (a_eps, a, a_star, &z.alpha_star),
        (a, a_star, a_eps, &z.alpha_eps),
    ];
    for (k, (x, y, w, alpha)) in rels.into_iter().enumerate() {
        match z3_residual(x, y, w, alpha, q) {
            Ok(r) => {
                if let Some(wit) = zero_witness(&r) {
                    return Check::fail(name, format!("relation {}: {wit}", k + 1));
                }
            }
            Err(e) => return Check::fail(name, e.to_string()),
        }
    }
    Check::pass(name)
}

/// The six cubic expressions that each equal `ψ I`.
pub fn psi_expressions(a: &Matrix, s: &Matrix, e: &Matrix, z: &Z3Constants, q: &Scalar) -> Result<Vec<Matrix>> {
    let qi = q.inv()?;
    let q2 = q.pow(2)?;
    let qi2 = q.pow(-2)?;
    let (aa, ss, ee) = (a * a, s * s, e * e);
    let (al, als, ale) = (&z.alpha, &z.alpha_star, &z.alpha_eps);
    let cube = |x: &Matrix, y: &Matrix, w: &Matrix| &(x * y) * w;
    let sum = |terms: Vec<Matrix>| terms.into_iter().reduce(|acc, t| &acc + &t).expect("nonempty");
    let form = |lead: &Scalar, prod: Matrix, sq: [(&Scalar, &Matrix); 3], lin: [(&Scalar, &Scalar, &Matrix); 3]| {
        let mut terms = vec![prod.scale(lead)];
        terms.extend(sq.iter().map(|(c, m)| m.scale(c)));
        terms.extend(lin.iter().map(|(c, k, m)| m.scale(&-(*c * *k))));
        sum(terms)
    };
    Ok(vec![
        form(q, cube(a, s, e), [(&q2, &aa), (&qi2, &ss), (&q2, &ee)], [(q, al, a), (&qi, als, s), (q, ale, e)]),
        form(q, cube(e, a, s), [(&q2, &ee), (&qi2, &aa), (&q2, &ss)], [(q, ale, e), (&qi, al, a), (q, als, s)]),
        form(q, cube(s, e, a), [(&q2, &ss), (&qi2, &ee), (&q2, &aa)], [(q, als, s), (&qi, ale, e), (q, al, a)]),
        form(&qi, cube(s, a, e), [(&qi2, &ss), (&q2, &aa), (&qi2, &ee)], [(&qi, als, s), (q, al, a), (&qi, ale, e)]),
        form(&qi, cube(e, s, a), [(&qi2, &ee), (&q2, &ss), (&qi2, &aa)], [(&qi, ale, e), (q, als, s), (&qi, al, a)]),
        form(&qi, cube(a, e, s), [(&qi2, &aa), (&q2, &ee), (&qi2, &ss)], [(&qi, al, a), (q, ale, e), (&qi, als, s)]),
    ])
}

pub fn check_prop9(a: &Matrix, a_star: &Matrix, a_eps: &Matrix, z: &Z3Constants, q: &Scalar) -> Check {
    let name = "psi identities";
    let exprs = match psi_expressions(a, a_star, a_eps, z, q) {
        Ok(v) => v,
        Err(e) => return Check::fail(name, e.to_string()),
    };
    let target = Matrix::scalar(a.dim(), &z.psi);
    let w = exprs
        .iter()
        .enumerate()
        .find_map(|(k, m)| equal_witness(&format!("expression {}", k + 1), m, &target));
    Check::from_witness(name, w)
}

/// `a_i` by trace, by the sandwich identity and by closed form, and the
/// same for `a*_i`.
pub fn check_trace_scalars(r: &LeonardRealization, p: &ParameterArray) -> Check {
    let name = "trace scalars";
    let closed = match derived_scalars(p) {
        Ok(c) => c,
        Err(e) => return Check::fail(name, e.to_string()),
    };
    let sides = [
        ("a", &r.a, &r.e_star, &closed.a_seq),
        ("a*", &r.a_star, &r.e, &closed.a_star_seq),
    ];
    for (label, x, es, cl) in sides {
        for (i, ei) in es.iter().enumerate() {
            let tr = (x * ei).trace();
            if tr != cl[i] {
                return Check::fail(name, format!("{label}_{i}: trace {tr} vs closed form {}", cl[i]));
            }
            let sandwich = &(&(ei * x) * ei) - &ei.scale(&cl[i]);
            if let Some(w) = zero_witness(&sandwich) {
                return Check::fail(name, format!("{label}_{i} sandwich {w}"));
            }
        }
    }
    Check::pass(name)
}

/// Target of `M^{-1} A^ε M` and `M^{-1} A* M`.
pub fn conjugation_targets(t: &QRacahTuple) -> Result<(Matrix, Matrix)> {
    let eig = params::triple_eigen_data(t)?;
    let bca = t.with(t.b().clone(), t.c().clone(), t.a().clone(), t.q().clone());
    let (phi_eps, _) = split_sequences(&bca)?;
    let n = t.d() + 1;
    let f = t.field();
    let mut lower = Matrix::diag(&eig.theta_eps);
    let mut upper = Matrix::diag(&eig.theta_star);
    for i in 1..n {
        lower.set(i, i - 1, f.one());
        upper.set(i - 1, i, phi_eps[i - 1].clone());
    }
    Ok((lower, upper))
}

/// Both conjugation propositions, and agreement of the multiplicity-free
/// criterion for `A^ε` with the `c²` membership test.
pub fn check_conjugation_theorems(r: &LeonardRealization, m: &Matrix) -> Check {
    let name = "conjugation theorems";
    first_error(name, conjugation_witness(&r.tuple, &r.a_star, &r.a_eps, m))
}

fn conjugation_witness(t: &QRacahTuple, a_star: &Matrix, a_eps: &Matrix, m: &Matrix) -> Result<Option<String>> {
    let (lower, upper) = conjugation_targets(t)?;
    let re = rho(a_eps, m)?;
    if let Some(w) = equal_witness("M^-1 A^ε M", &re, &lower) {
        return Ok(Some(w));
    }
    let rs = rho(a_star, m)?;
    if let Some(w) = equal_witness("M^-1 A* M", &rs, &upper) {
        return Ok(Some(w));
    }
    let eps = params::eigen_sequence(t.c(), t.q(), t.d())?;
    let mf = check_multiplicity_free(a_eps, &eps).pass;
    let c2_free = c_square_free(t)?;
    if mf != c2_free {
        return Ok(Some(format!("multiplicity-free {mf} but c² test {c2_free}")));
    }
    Ok(None)
}

/// True iff `c²` avoids `{q^{2d-2}, ..., q^{2-2d}}`.
pub fn c_square_free(t: &QRacahTuple) -> Result<bool> {
    let d = t.d() as i64;
    let c2 = t.c() * t.c();
    for k in 0..2 * d - 1 {
        if c2 == t.q().pow(2 * d - 2 - 2 * k)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `f = f* = 0`, `g/g* = -q²` and `e = α^ε/(q+q^{-1})` for `A^ε`.
pub fn check_nt_pattern(t: &QRacahTuple, a: &Matrix, a_star: &Matrix, a_eps: &Matrix) -> Check {
    let name = "NT decomposition";
    first_error(name, (|| {
        let c = nt_decompose(a_eps, a, a_star)?;
        let q = t.q();
        let z = z3_constants(t)?;
        if !c.f.is_zero() || !c.f_star.is_zero() {
            return Ok(Some(format!("f = {}, f* = {}", c.f, c.f_star)));
        }
        if c.g != -(&q.pow(2)? * &c.g_star) {
            return Ok(Some(format!("g/g* = {}", c.g.checked_div(&c.g_star)?)));
        }
        let e = z.alpha_eps.checked_div(&(q + &q.inv()?))?;
        if c.e != e {
            return Ok(Some(format!("e = {} expected {e}", c.e)));
        }
        Ok(None)
    })())
}

/// One-dimensional intertwiner space, and the induced antiautomorphism
/// fixes `A` and `A*`.
pub fn check_symmetrizer(a: &Matrix, a_star: &Matrix) -> Check {
    let name = "symmetrizer";
    first_error(name, (|| {
        let k = intertwiner_space(a, a_star).len();
        if k != 1 {
            return Ok(Some(format!("intertwiner space has dimension {k}")));
        }
        let d = symmetrizer(a, a_star)?;
        Ok(equal_witness("D^-1 Aᵀ D", &dagger(a, &d)?, a)
            .or(equal_witness("D^-1 A*ᵀ D", &dagger(a_star, &d)?, a_star)))
    })())
}

fn aw_dual_route(p: &ParameterArray, closed: &AWCoefficients) -> Result<Option<String>> {
    let ds = derived_scalars(p)?;
    let route = aw_coefficients_from_array(p, &ds)?;
    if &route != closed {
        return Ok(Some(format!("closed form {closed:?} vs eigenvalue route {route:?}")));
    }
    Ok(aw_characterization_witness(p, &ds, closed))
}

fn transition_witness(t: &QRacahTuple, m: &Matrix) -> Result<Option<String>> {
    let direct = transition_matrix(t)?;
    if let Some(w) = equal_witness("M", m, &direct) {
        return Ok(Some(w));
    }
    if m.shape() == Shape::General && (0..m.dim()).any(|i| (0..i).any(|j| !m.get(i, j).is_zero())) {
        return Ok(Some("M is not upper triangular".into()));
    }
    if let Some(w) = equal_witness("M by columns", &transition_matrix_by_columns(t)?, &direct) {
        return Ok(Some(w));
    }
    if let Some(w) = equal_witness("M by rows", &transition_matrix_by_rows(t)?, &direct) {
        return Ok(Some(w));
    }
    transition_recurrence_witness(t, &direct)
}

/// Every relation-level check on an assembled realization and its `M`.
pub fn verify_realization(r: &LeonardRealization, m: &Matrix) -> VerificationReport {
    let t = &r.tuple;
    let mut rep = VerificationReport::new();
    rep.extend(check_leonard_triple_system(r));
    let p = match parameter_array(t) {
        Ok(p) => p,
        Err(e) => {
            rep.push(Check::fail("parameter array", e.to_string()));
            return rep;
        }
    };
    let mut pa = validate_parameter_array(&p, t.q());
    for c in &mut pa.checks {
        c.name = format!("parameter array {}", c.name);
    }
    rep.extend(pa);
    match aw_coefficients(t) {
        Ok(aw) => {
            rep.push(check_askey_wilson(&r.a, &r.a_star, &aw));
            rep.push(first_error("AW coefficient routes", aw_dual_route(&p, &aw)));
        }
        Err(e) => rep.push(Check::fail("Askey-Wilson relations", e.to_string())),
    }
    match z3_constants(t) {
        Ok(z) => {
            rep.push(check_z3_symmetric(&r.a, &r.a_star, &r.a_eps, &z, t.q()));
            rep.push(check_prop9(&r.a, &r.a_star, &r.a_eps, &z, t.q()));
        }
        Err(e) => rep.push(Check::fail("Z3-symmetric relations", e.to_string())),
    }
    rep.push(check_trace_scalars(r, &p));
    rep.push(first_error("transition matrix", transition_witness(t, m)));
    rep.push(check_conjugation_theorems(r, m));
    rep.push(check_nt_pattern(t, &r.a, &r.a_star, &r.a_eps));
    rep.push(check_symmetrizer(&r.a, &r.a_star));
    rep
}

fn admissibility_gate(t: &QRacahTuple) -> Option<VerificationReport> {
    let adm = check_triple_admissible(t);
    if adm.overall() {
        return None;
    }
    let mut rep = VerificationReport::new();
    rep.push(Check::fail("triple admissibility", adm.failure_summary().unwrap_or_default()));
    Some(rep)
}

/// Admissibility, then construction, then every checker.
pub fn full_verification(t: &QRacahTuple) -> VerificationReport {
    if let Some(rep) = admissibility_gate(t) {
        return rep;
    }
    let mut rep = VerificationReport::new();
    rep.push(Check::pass("triple admissibility"));
    let built = build_triple(t).and_then(|r| Ok((transition_matrix(t)?, r)));
    match built {
        Ok((m, r)) => rep.extend(verify_realization(&r, &m)),
        Err(e) => rep.push(Check::fail("construction", e.to_string())),
    }
    rep
}

/// Verifies externally supplied matrices against a tuple: they must be the
/// canonical split-basis realization and satisfy every relation.
pub fn verify_bundle(t: &QRacahTuple, a: &Matrix, a_star: &Matrix, a_eps: &Matrix, m: &Matrix) -> VerificationReport {
    if let Some(rep) = admissibility_gate(t) {
        return rep;
    }
    let mut rep = VerificationReport::new();
    rep.push(Check::pass("triple admissibility"));
    let n = t.d() + 1;
    if [a, a_star, a_eps, m].iter().any(|x| x.dim() != n || x.field() != t.field()) {
        rep.push(Check::fail("dimensions", format!("expected {n}x{n} matrices over {}", t.field())));
        return rep;
    }
    let gauge = (|| -> Result<Option<String>> {
        let (sa, ss) = split_pair(&parameter_array(t)?)?;
        Ok(equal_witness("A", a, &sa)
            .or_else(|| equal_witness("A*", a_star, &ss))
            .or_else(|| equal_witness("A^ε", a_eps, &build_a_epsilon(&sa, &ss, t).ok()?))
            .or_else(|| equal_witness("A^ε closed form", a_eps, &a_epsilon_closed_form(t).ok()?)))
    })();
    rep.push(first_error("split form", gauge));
    let eig = match params::triple_eigen_data(t) {
        Ok(e) => e,
        Err(e) => {
            rep.push(Check::fail("eigenvalues", e.to_string()));
            return rep;
        }
    };
    let triple = check_leonard_triple(a, a_star, a_eps, &eig);
    let mf_ok = triple.checks.iter().take(3).all(|c| c.pass);
    if !mf_ok {
        rep.extend(triple);
        return rep;
    }
    let idem = |x: &Matrix, th: &[Scalar]| primitive_idempotents(x, th).expect("multiplicity-free");
    let r = LeonardRealization {
        tuple: t.clone(),
        a: a.clone(),
        a_star: a_star.clone(),
        a_eps: a_eps.clone(),
        e: idem(a, &eig.theta),
        e_star: idem(a_star, &eig.theta_star),
        e_eps: idem(a_eps, &eig.theta_eps),
        eig,
    };
    rep.extend(verify_realization(&r, m));
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::Generator;
    use crate::scalars::FieldConfig;

    fn r(n: i64, d: i64) -> Scalar {
        FieldConfig::Rationals.ratio(n, d).unwrap()
    }

    fn t357(d: usize) -> QRacahTuple {
        QRacahTuple::rational((3, 1), (5, 1), (7, 1), (2, 1), d).unwrap()
    }

    #[test]
    fn multiplicity_free_examples() {
        let e = [r(1, 1), r(2, 1), r(3, 1), r(4, 1)];
        assert!(check_multiplicity_free(&Matrix::diag(&e), &e).pass);
        let t = QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap();
        let p = parameter_array(&t).unwrap();
        let (a, s) = split_pair(&p).unwrap();
        let ae = build_a_epsilon(&a, &s, &t).unwrap();
        let eps = params::eigen_sequence(t.c(), t.q(), 3).unwrap();
        let c = check_multiplicity_free(&ae, &eps);
        assert!(!c.pass);
        assert_eq!(c.witness.as_deref(), Some("theta_0 = theta_2 = 17/4"));
        assert!(check_multiplicity_free(&a, &p.theta).pass);
    }

    #[test]
    fn leonard_system_examples() {
        let real = build_triple(&t357(3)).unwrap();
        assert!(check_leonard_system(&real.a, &real.e, &real.a_star, &real.e_star).pass);
        let mut rev = real.e_star.clone();
        rev.reverse();
        assert!(check_leonard_system(&real.a, &real.e, &real.a_star, &rev).pass);
        // a diagonal matrix in the same basis as A* commutes with every E*_i
        let fake = Matrix::diag(&real.eig.theta_star).conjugate(&Matrix::identity(4, FieldConfig::Rationals)).unwrap();
        let c = check_leonard_system(&real.a, &real.e, &fake, &real.e_star);
        assert!(!c.pass);
    }

    #[test]
    fn triple_system_and_relatives() {
        let real = build_triple(&t357(3)).unwrap();
        assert!(check_leonard_triple_system(&real).overall());
        for g in Generator::ALL {
            assert!(check_leonard_triple_system(&real.relative(g)).overall(), "{g}");
        }
        let t = QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap();
        let p = parameter_array(&t).unwrap();
        let (a, s) = split_pair(&p).unwrap();
        let ae = build_a_epsilon(&a, &s, &t).unwrap();
        let eig = params::triple_eigen_data(&t).unwrap();
        let rep = check_leonard_triple(&a, &s, &ae, &eig);
        assert_eq!(rep.first_failure().unwrap().name, "multiplicity-free A^ε");
    }

    #[test]
    fn askey_wilson_examples() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let aw = aw_coefficients(&t).unwrap();
        assert!(check_askey_wilson(&real.a, &real.a_star, &aw).pass);
        let mut bad = aw.clone();
        bad.omega = &bad.omega + &r(1, 1);
        assert!(!check_askey_wilson(&real.a, &real.a_star, &bad).pass);
        let p = parameter_array(&t).unwrap();
        let route = aw_coefficients_from_array(&p, &derived_scalars(&p).unwrap()).unwrap();
        assert!(check_askey_wilson(&real.a, &real.a_star, &route).pass);
    }

    #[test]
    fn z3_examples() {
        let t = t357(4);
        let real = build_triple(&t).unwrap();
        let z = z3_constants(&t).unwrap();
        assert!(check_z3_symmetric(&real.a, &real.a_star, &real.a_eps, &z, t.q()).pass);
        let shifted = Z3Constants {
            alpha: z.alpha_star.clone(),
            alpha_star: z.alpha_eps.clone(),
            alpha_eps: z.alpha.clone(),
            ..z.clone()
        };
        assert!(check_z3_symmetric(&real.a_star, &real.a_eps, &real.a, &shifted, t.q()).pass);
        let bumped = &real.a_eps + &Matrix::identity(5, FieldConfig::Rationals);
        let c = check_z3_symmetric(&real.a, &real.a_star, &bumped, &z, t.q());
        assert!(c.witness.unwrap().starts_with("relation 1"));
    }

    #[test]
    fn psi_examples() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let z = z3_constants(&t).unwrap();
        assert!(check_prop9(&real.a, &real.a_star, &real.a_eps, &z, t.q()).pass);
        let ex = psi_expressions(&real.a, &real.a_star, &real.a_eps, &z, t.q()).unwrap();
        assert_eq!(ex[0], ex[3]);
        let mut off = z.clone();
        off.psi = &off.psi + &r(1, 1);
        assert!(!check_prop9(&real.a, &real.a_star, &real.a_eps, &off, t.q()).pass);
    }

    #[test]
    fn trace_scalar_and_conjugation_examples() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let p = parameter_array(&t).unwrap();
        assert!(check_trace_scalars(&real, &p).pass);
        let m = transition_matrix(&t).unwrap();
        assert!(check_conjugation_theorems(&real, &m).pass);
        let mut wrong = m.clone();
        wrong.set(0, 1, m.get(0, 1) + &r(1, 1));
        assert!(!check_conjugation_theorems(&real, &wrong).pass);
    }

    #[test]
    fn boundary_c_equal_q_breaks_multiplicity() {
        let t = QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap();
        assert!(!c_square_free(&t).unwrap());
        let p = parameter_array(&t).unwrap();
        let (a, s) = split_pair(&p).unwrap();
        let ae = build_a_epsilon(&a, &s, &t).unwrap();
        let eps = params::eigen_sequence(t.c(), t.q(), 3).unwrap();
        assert!(!check_multiplicity_free(&ae, &eps).pass);
    }

    #[test]
    fn full_verification_examples() {
        let rep = full_verification(&t357(3));
        assert!(rep.overall(), "{rep}");
        let rep = full_verification(&QRacahTuple::rational((3, 1), (5, 1), (2, 1), (2, 1), 3).unwrap());
        assert_eq!(rep.failure_summary().unwrap(), "triple admissibility: T-RQRAC3: c²=q²");
        let rep = full_verification(&QRacahTuple::rational((3, 1), (5, 1), (7, 1), (1, 1), 3).unwrap());
        assert!(rep.failure_summary().unwrap().contains("RQRAC2"));
    }

    #[test]
    fn bundle_mutation_is_caught() {
        let t = t357(3);
        let real = build_triple(&t).unwrap();
        let m = transition_matrix(&t).unwrap();
        assert!(verify_bundle(&t, &real.a, &real.a_star, &real.a_eps, &m).overall());
        let mut bad = real.a_eps.clone();
        bad.set(1, 2, real.a_eps.get(1, 2) + &r(1, 1));
        let rep = verify_bundle(&t, &real.a, &real.a_star, &bad, &m);
        assert!(!rep.overall());
        assert_eq!(rep.first_failure().unwrap().name, "split form");
    }
}
