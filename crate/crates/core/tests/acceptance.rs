//! Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pvkit_core::arith::{linalg, Constant, CycloNum, Elem, Field, Poly};
use pvkit_core::difference::DiffField;
use pvkit_core::galois::{
    base_change, connection_matrix_check, functor_ideal, group_transport_check, identify_group,
    ConstMatrix, ConstantsExtensionDesc, GroupDesc,
};
use pvkit_core::laurent::Laurent;
use pvkit_core::pv::{
    build_pv, compute_m, decompose, ideal_contract, ideal_extend, m_product_formula, ConstantIdeal,
    DiffSystem, PVPresentation, RPoly,
};
use pvkit_core::solve::{solve_add, solve_mult};

type Check = Result<String, String>;
type QPoly = Poly<BigRational>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn c(n: i64) -> Elem {
    Elem::from_i64(n)
}

fn x() -> Elem {
    Elem::x()
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn qfield(q: i64) -> DiffField {
    DiffField::qshift(CycloNum::from_int(q)).unwrap()
}

fn example_a() -> PVPresentation {
    build_pv(&DiffSystem::scalar(DiffField::shift(), c(-1)), 12).unwrap()
}

fn example_b() -> PVPresentation {
    build_pv(&DiffSystem::unipotent(qfield(2), c(1)), 12).unwrap()
}

/// `K = C(s)` with `sigma(s) = 2 s`, where `s` plays the square root of `t`.
fn example_c() -> PVPresentation {
    build_pv(&DiffSystem::scalar(qfield(2), c(-2)), 12).unwrap()
}

fn control_no_torsion() -> PVPresentation {
    build_pv(&DiffSystem::scalar(DiffField::shift(), x()), 12).unwrap()
}

fn control_free_torus() -> PVPresentation {
    build_pv(&DiffSystem::diagonal(qfield(5), vec![c(2), c(3)]), 12).unwrap()
}

/// Every presentation the suite talks about.
fn suite() -> Vec<(&'static str, PVPresentation)> {
    let shift = DiffField::shift();
    let ratio = x().add(&c(1)).div(&x()).unwrap();
    let k3 = shift.with_root_of_unity(3);
    vec![
        ("A: sigma(y) = -y", example_a()),
        ("B: q-logarithm", example_b()),
        ("C: square root of t", example_c()),
        ("scalar (x+1)/x", build_pv(&DiffSystem::scalar(shift.clone(), ratio.clone()), 12).unwrap()),
        ("scalar x", control_no_torsion()),
        ("scalar 2, q = 4", build_pv(&DiffSystem::scalar(qfield(4), c(2)), 12).unwrap()),
        ("scalar zeta(3)", build_pv(&DiffSystem::scalar(k3, Elem::from_const(Constant::zeta(3))), 12).unwrap()),
        (
            "diag(-1, -(x+1)/x)",
            build_pv(&DiffSystem::diagonal(shift.clone(), vec![c(-1), ratio.neg()]), 12).unwrap(),
        ),
        ("diag(x, x)", build_pv(&DiffSystem::diagonal(shift.clone(), vec![x(), x()]), 12).unwrap()),
        ("diag(2, 3), q = 5", control_free_torus()),
        ("unipotent 1, shift", build_pv(&DiffSystem::unipotent(shift.clone(), c(1)), 12).unwrap()),
        ("unipotent 0, shift", build_pv(&DiffSystem::unipotent(shift, c(0)), 12).unwrap()),
    ]
}

fn criterion_1() -> Check {
    let p = example_a();
    ensure!(p.generator_strings() == ["Y^2 - 1"], "ideal {:?}", p.generator_strings());
    ensure!(p.ell == 2 && p.krull_dim == 0, "ell {} krull {}", p.ell, p.krull_dim);
    let g = identify_group(&p).map_err(err)?;
    ensure!(g.finite_orders == [2] && g.torus_rank == 0, "group {}", g.name());
    let f = functor_ideal(&p).map_err(err)?.to_strings();
    ensure!(f == ["X^2 - 1"], "functor ideal {f:?}");
    Ok("(Y^2 - 1), ell 2, Krull 0, Z/2Z, (X^2 - 1)".into())
}

fn criterion_2() -> Check {
    let p = example_b();
    let g = identify_group(&p).map_err(err)?;
    ensure!(g.unipotent_dim == 1, "unipotent dim {}", g.unipotent_dim);
    ensure!(p.krull_dim == 1 && p.ell == 1, "krull {} ell {}", p.krull_dim, p.ell);
    Ok("unipotent dim 1, Krull 1, ell 1".into())
}

fn criterion_3() -> Check {
    let p = example_c();
    ensure!(p.generator_strings() == ["Y^2 - x^2"], "ideal {:?}", p.generator_strings());
    ensure!(p.ell == 2, "ell {}", p.ell);
    let g = identify_group(&p).map_err(err)?;
    ensure!(g.finite_orders == [2] && g.torus_rank == 0, "group {}", g.name());
    // X = Y/s is nonzero and satisfies sigma(X) + X = 0 in R
    let u = RPoly::monomial(vec![1], x().inv().unwrap());
    ensure!(!p.ideal.contains(&u), "Y/s vanishes");
    let image = p.system.apply_sigma(&u);
    ensure!(p.ideal.contains(&image.add(&u)), "sigma(Y/s) + Y/s = {:?}", p.ideal.normal_form(&image.add(&u)));
    Ok("(Y^2 - s^2), ell 2, Z/2Z, sigma(Y/s) = -Y/s".into())
}

fn same_group(a: &GroupDesc, b: &GroupDesc) -> bool {
    a.torus_rank == b.torus_rank
        && a.finite_orders == b.finite_orders
        && a.unipotent_dim == b.unipotent_dim
        && a.coordinate_ideal == b.coordinate_ideal
}

fn criterion_4() -> Check {
    let cases = [
        ("A", example_a()),
        ("B", example_b()),
        ("C", example_c()),
        ("control x", control_no_torsion()),
        ("control diag(2, 3)", control_free_torus()),
    ];
    let exts = [ConstantsExtensionDesc::AdjoinRootOfUnity(3), ConstantsExtensionDesc::AdjoinTranscendental(1)];
    for (name, p) in &cases {
        let g = identify_group(p).map_err(err)?;
        for ext in exts {
            ensure!(group_transport_check(p, ext).map_err(err)?, "{name}: transport fails under {ext}");
            let q = base_change(p, ext).map_err(err)?;
            ensure!(
                (q.ell, q.m_inv, q.krull_dim) == (p.ell, p.m_inv, p.krull_dim),
                "{name}: invariants move under {ext}"
            );
            ensure!(q.ideal.generators == p.ideal.generators, "{name}: generators move under {ext}");
            ensure!(same_group(&g, &identify_group(&q).map_err(err)?), "{name}: group moves under {ext}");
        }
    }
    Ok(format!("{} systems x {} extensions", cases.len(), exts.len()))
}

// ---- solver oracle ------------------------------------------------------

#[derive(Clone, Copy, Debug)]
enum Op {
    Shift,
    Q(i64),
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Kind {
    Mult,
    Add,
}

#[derive(Debug)]
struct Case {
    op: Op,
    kind: Kind,
    num: QPoly,
    den: QPoly,
    /// Every root that can matter for the denominators of solutions.
    roots: Vec<BigRational>,
}

fn sigma_poly(op: Op, p: &QPoly) -> QPoly {
    match op {
        Op::Shift => p.substitute_shift(&rat(1, 1)),
        Op::Q(q) => p.substitute_scale(&rat(q, 1)).unwrap(),
    }
}

fn sigma_root(op: Op, r: &BigRational) -> BigRational {
    match op {
        Op::Shift => r - rat(1, 1),
        Op::Q(q) => r / rat(q, 1),
    }
}

fn linear(root: &BigRational) -> QPoly {
    QPoly::new(vec![-root.clone(), rat(1, 1)])
}

fn product(c: BigRational, roots: &[BigRational]) -> QPoly {
    roots.iter().fold(QPoly::constant(c), |acc, r| &acc * &linear(r))
}

fn to_elem(p: &QPoly) -> Elem {
    Elem::from_poly(p.map(Constant::from_rational))
}

/// Candidate roots of solution denominators with multiplicities: a window one
/// step beyond the extreme roots of every sigma-orbit class, with the class
/// size (at most 3) as multiplicity.
fn window(op: Op, roots: &[BigRational]) -> Vec<(BigRational, u32)> {
    let mut out: Vec<(BigRational, u32)> = Vec::new();
    let mut classes: Vec<(BigRational, Vec<i64>)> = Vec::new();
    for r in roots.iter().filter(|r| !num_traits::Zero::is_zero(*r)) {
        // r = base * step^k with base a fixed class representative
        let (base, k) = match op {
            Op::Shift => {
                let fl = r.floor();
                (r - &fl, fl.to_integer().try_into().unwrap())
            }
            Op::Q(q) => {
                let (mut v, mut k) = (r.clone(), 0i64);
                let qq = rat(q, 1);
                while num_traits::Signed::abs(&v) >= qq {
                    v = v / &qq;
                    k += 1;
                }
                while num_traits::Signed::abs(&v) < rat(1, 1) {
                    v = v * &qq;
                    k -= 1;
                }
                (v, k)
            }
        };
        match classes.iter_mut().find(|(b, _)| *b == base) {
            Some((_, ks)) => ks.push(k),
            None => classes.push((base, vec![k])),
        }
    }
    for (base, ks) in classes {
        let mult = (ks.len() as u32).min(3);
        let (lo, hi) = (ks.iter().min().unwrap() - 1, ks.iter().max().unwrap() + 1);
        for k in lo..=hi {
            let point = match op {
                Op::Shift => &base + rat(k, 1),
                Op::Q(q) => {
                    let qq = rat(q, 1);
                    if k >= 0 { &base * num_traits::pow(qq, k as usize) } else { &base / num_traits::pow(qq, (-k) as usize) }
                }
            };
            out.push((point, mult));
        }
    }
    out
}

fn candidate_denominator(case: &Case) -> QPoly {
    let mut d = window(case.op, &case.roots)
        .iter()
        .fold(QPoly::one(), |acc, (r, m)| &acc * &linear(r).pow(*m));
    if let Op::Q(_) = case.op {
        d = &d * &QPoly::x().pow(3);
    }
    d
}

/// Exhaustive linear algebra: `f = P / D` with `D` the candidate denominator
/// and `deg P <= deg D + 6`. Returns whether a solution exists.
fn oracle(case: &Case) -> bool {
    let op = case.op;
    let d = candidate_denominator(case);
    let sd = sigma_poly(op, &d);
    let n_unknowns = (d.deg() + 7) as usize;
    let (a, b, rhs) = match case.kind {
        // sigma(P) D den = num P sigma(D)
        Kind::Mult => (&d * &case.den, &case.num * &sd, QPoly::zero()),
        // sigma(P) D den - P sigma(D) den = num D sigma(D)
        Kind::Add => (&d * &case.den, &sd * &case.den, &(&case.num * &d) * &sd),
    };
    let columns: Vec<QPoly> = (0..n_unknowns)
        .map(|i| {
            let xi = QPoly::monomial(rat(1, 1), i);
            &(&sigma_poly(op, &xi) * &a) - &(&xi * &b)
        })
        .collect();
    let height = columns.iter().map(|p| p.deg() + 1).chain([rhs.deg() + 1]).max().unwrap().max(1) as usize;
    let m: Vec<Vec<BigRational>> = (0..height).map(|r| columns.iter().map(|p| p.coeff(r)).collect()).collect();
    match case.kind {
        Kind::Mult => !linalg::nullspace(&m, n_unknowns).is_empty(),
        Kind::Add => {
            let aug: Vec<Vec<BigRational>> =
                m.iter().enumerate().map(|(r, row)| row.iter().cloned().chain([rhs.coeff(r)]).collect()).collect();
            linalg::rank(&m) == linalg::rank(&aug)
        }
    }
}

fn pick(rng: &mut StdRng, pool: &[BigRational], sizes: std::ops::RangeInclusive<usize>) -> Vec<BigRational> {
    let n = rng.gen_range(sizes);
    (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect()
}

fn corpus() -> Vec<Case> {
    let mut rng = StdRng::seed_from_u64(20_261_018);
    let shift_pool: Vec<BigRational> = [(-2, 1), (-1, 1), (0, 1), (1, 1), (2, 1), (-1, 2), (1, 2)]
        .iter()
        .map(|&(n, d)| rat(n, d))
        .collect();
    let q_pool: Vec<BigRational> =
        [(1, 1), (2, 1), (4, 1), (-1, 1), (-2, 1), (1, 2)].iter().map(|&(n, d)| rat(n, d)).collect();
    let shift_scalars = [rat(1, 1), rat(1, 1), rat(-1, 1), rat(2, 1)];
    let q_scalars = [rat(1, 1), rat(2, 1), rat(-1, 1), rat(1, 2), rat(4, 1), rat(3, 1)];
    let mut out = Vec::new();

    for (op, pool, scalars, random, built) in [
        (Op::Shift, &shift_pool, &shift_scalars[..], 14, 8),
        (Op::Q(2), &q_pool, &q_scalars[..], 10, 8),
    ] {
        // random quotients
        for _ in 0..random {
            let nr = pick(&mut rng, pool, 0..=3);
            let dr = pick(&mut rng, pool, 0..=3);
            let s = scalars[rng.gen_range(0..scalars.len())].clone();
            let roots = nr.iter().chain(&dr).cloned().collect();
            out.push(Case { op, kind: Kind::Mult, num: product(s, &nr), den: product(rat(1, 1), &dr), roots });
        }
        // r = sigma(f)/f for random f
        for _ in 0..built {
            let zeros = pick(&mut rng, pool, 0..=1);
            let poles = pick(&mut rng, pool, 1..=(2 - zeros.len()));
            let mut fz = product(rat(1, 1), &zeros);
            if let Op::Q(_) = op {
                if rng.gen_bool(0.5) {
                    fz = &fz * &QPoly::x();
                }
            }
            let fp = product(rat(1, 1), &poles);
            let num = &sigma_poly(op, &fz) * &fp;
            let den = &fz * &sigma_poly(op, &fp);
            let roots = zeros.iter().chain(&poles).flat_map(|r| [r.clone(), sigma_root(op, r)]).collect();
            out.push(Case { op, kind: Kind::Mult, num, den, roots });
        }
    }
    for (op, pool, random, built) in [(Op::Shift, &shift_pool, 10, 8), (Op::Q(2), &q_pool, 8, 8)] {
        for _ in 0..random {
            let dr = pick(&mut rng, pool, 1..=3);
            let num = QPoly::new((0..rng.gen_range(1..=3)).map(|_| rat(rng.gen_range(-3..=3), 1)).collect());
            let num = if num.is_zero() { QPoly::one() } else { num };
            out.push(Case { op, kind: Kind::Add, num, den: product(rat(1, 1), &dr), roots: dr });
        }
        for _ in 0..built {
            // b = sigma(f) - f with f = n / d
            let dr = pick(&mut rng, pool, 1..=1);
            let n = QPoly::new(vec![rat(rng.gen_range(-3..=3), 1), rat(rng.gen_range(0..=1), 1)]);
            let n = if n.is_zero() { QPoly::one() } else { n };
            let d = product(rat(1, 1), &dr);
            let f = to_elem(&n).div(&to_elem(&d)).unwrap();
            let k = match op {
                Op::Shift => DiffField::shift(),
                Op::Q(q) => qfield(q),
            };
            let b = k.apply_sigma(&f).sub(&f);
            if b.is_zero() {
                continue;
            }
            let to_q = |p: &Poly<Constant>| QPoly::new(p.coeffs().iter().map(|c| c.to_rational().unwrap()).collect());
            let roots = dr.iter().flat_map(|r| [r.clone(), sigma_root(op, r)]).collect();
            out.push(Case { op, kind: Kind::Add, num: to_q(b.num()), den: to_q(b.den()), roots });
        }
    }
    out
}

fn criterion_5() -> Check {
    let cases = corpus();
    ensure!(cases.len() >= 60, "corpus has only {} inputs", cases.len());
    let mut solvable = 0;
    for (i, case) in cases.iter().enumerate() {
        ensure!(case.num.deg() <= 3 && case.den.deg() <= 3, "case {i} exceeds degree 3");
        let k = match case.op {
            Op::Shift => DiffField::shift(),
            Op::Q(q) => qfield(q),
        };
        let expected = oracle(case);
        let (num, den) = (to_elem(&case.num), to_elem(&case.den));
        let got = match case.kind {
            Kind::Mult => {
                let r = num.div(&den).unwrap();
                let sol = solve_mult(&k, &r).map_err(err)?;
                if let Some(s) = &sol {
                    ensure!(k.apply_sigma(&s.witness) == r.mul(&s.witness), "case {i}: witness does not re-substitute");
                }
                sol.is_some()
            }
            Kind::Add => {
                let b = num.div(&den).unwrap();
                let sol = solve_add(&k, &b);
                if let Some(f) = &sol {
                    ensure!(k.apply_sigma(f).sub(f) == b, "case {i}: additive solution does not re-substitute");
                }
                sol.is_some()
            }
        };
        ensure!(got == expected, "case {i} ({:?} {:?}): solver {got}, oracle {expected}", case.op, case.kind);
        solvable += usize::from(got);
    }
    Ok(format!("{} inputs agree ({solvable} solvable, {} not)", cases.len(), cases.len() - solvable))
}

// ---- invariants ---------------------------------------------------------

fn criterion_6() -> Check {
    let all = suite();
    for (name, p) in &all {
        let prop = compute_m(p).map_err(err)?;
        let product = m_product_formula(p).map_err(err)?;
        ensure!(p.m_inv == prop && p.m_inv == product, "{name}: m {} / {prop} / {product}", p.m_inv);
        ensure!(p.ell == prop, "{name}: ell {} but [D_L : C_L] = {prop}", p.ell);
    }
    Ok(format!("{} presentations", all.len()))
}

fn criterion_7() -> Check {
    let mut count = 0;
    for (name, p) in suite().iter().filter(|(_, p)| p.ell >= 2) {
        let comps = decompose(p).map_err(err)?;
        let ell = p.ell as usize;
        ensure!(comps.len() == ell, "{name}: {} components", comps.len());
        let nf = |f: &RPoly| p.ideal.normal_form(f);
        let n = p.ideal.nvars;
        let mut total = RPoly::zero(n);
        let e0 = &comps[0].idempotent;
        let mut expected = e0.clone();
        for (i, comp) in comps.iter().enumerate() {
            let e = &comp.idempotent;
            ensure!(nf(e) == nf(&expected), "{name}: e_{i} differs from sigma^{i}(e_0)");
            ensure!(nf(&e.mul(e)) == nf(e), "{name}: e_{i} is not idempotent");
            for other in &comps[i + 1..] {
                ensure!(nf(&e.mul(&other.idempotent)).is_zero(), "{name}: e_{i} e_{} != 0", other.index);
            }
            total = total.add(e);
            expected = p.system.apply_sigma(&expected);
            // A_ell = sigma^{ell-1}(A) ... sigma(A) A on the diagonal
            let a = p.system.characters().unwrap();
            for (r, ar) in a.iter().enumerate() {
                let direct = (0..ell as i64).fold(Elem::one(), |acc, j| acc.mul(&p.system.field.apply_sigma_power(ar, j)));
                ensure!(comp.a_ell[r][r] == direct, "{name}: A_ell entry {r}");
            }
        }
        ensure!(nf(&total) == RPoly::one(n), "{name}: idempotents do not sum to 1");
        count += 1;
    }
    ensure!(count >= 3, "only {count} presentations with ell >= 2");
    Ok(format!("{count} presentations with ell >= 2"))
}

fn criterion_8() -> Check {
    let all = suite();
    for (name, p) in &all {
        let g = identify_group(p).map_err(err)?;
        ensure!(g.dim() == p.krull_dim, "{name}: dim {} vs Krull {}", g.dim(), p.krull_dim);
    }
    Ok(format!("{} presentations", all.len()))
}

fn criterion_9() -> Check {
    let mut rng = StdRng::seed_from_u64(9);
    let k = DiffField::shift();
    let mut steps = 0;
    for t in 0..20 {
        let random_poly = |rng: &mut StdRng| {
            let terms = rng.gen_range(2..=3);
            Laurent::from_terms(
                2,
                (0..terms).map(|_| {
                    let e = vec![rng.gen_range(0..=2), rng.gen_range(0..=2)];
                    let mut c = rng.gen_range(-3..=3);
                    if c == 0 {
                        c = 1;
                    }
                    (e, Constant::from_int(c))
                }),
            )
        };
        let gens: Vec<Laurent<Constant>> = (0..rng.gen_range(1..=2)).map(|_| random_poly(&mut rng)).collect();
        let ideal = ConstantIdeal::new(2, &gens);
        let (back, trace) = ideal_contract(&k, &ideal_extend(&ideal)).map_err(err)?;
        ensure!(back == ideal, "ideal {t}: contract(extend(I)) = {:?}, I = {:?}", back.to_strings(), ideal.to_strings());
        ensure!(trace.strictly_decreasing(), "ideal {t}: support does not decrease");
        // the same k-ideal presented with non-constant coefficients
        let ext = ideal_extend(&ideal);
        let mixed: Vec<RPoly> = match ext.len() {
            0 => ext,
            1 => vec![ext[0].scale(&x().add(&c(1)))],
            _ => {
                let mut v = vec![ext[0].add(&ext[1].scale(&x())), ext[1].clone()];
                v.extend(ext[2..].iter().cloned());
                v
            }
        };
        let (back, trace) = ideal_contract(&k, &mixed).map_err(err)?;
        ensure!(back == ideal, "ideal {t}: contraction of the mixed presentation differs");
        ensure!(trace.strictly_decreasing(), "ideal {t}: mixed support does not decrease");
        steps += trace.steps.len();
    }
    ensure!(steps > 0, "no reduction step was ever taken");
    Ok(format!("20 ideals, {steps} reduction steps, support strictly decreasing"))
}

fn mat_mul(a: &ConstMatrix, b: &ConstMatrix) -> ConstMatrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).fold(Constant::zero(), |s, k| s.add(&a[i][k].mul(&b[k][j])))).collect())
        .collect()
}

fn criterion_10() -> Check {
    let y = || RPoly::var(1, 0);
    let scalar = |p: &RPoly| vec![vec![p.clone()]];
    for (name, p, triple) in [
        ("A", example_a(), [y(), y().neg(), y().scale(&c(3)).add(&RPoly::zero(1))]),
        ("C", example_c(), [y(), y().scale(&c(2)), y().neg()]),
    ] {
        let [u, v, w] = &triple;
        let puv = connection_matrix_check(&p, &scalar(u), &scalar(v)).map_err(err)?;
        let pvw = connection_matrix_check(&p, &scalar(v), &scalar(w)).map_err(err)?;
        let puw = connection_matrix_check(&p, &scalar(u), &scalar(w)).map_err(err)?;
        ensure!(mat_mul(&puv, &pvw) == puw, "{name}: cocycle fails");
        let puu = connection_matrix_check(&p, &scalar(u), &scalar(u)).map_err(err)?;
        ensure!(puu == vec![vec![Constant::one()]], "{name}: P(U, U) is not the identity");
    }
    let neg = connection_matrix_check(&control_no_torsion(), &scalar(&y()), &scalar(&y().scale(&x())));
    ensure!(
        matches!(neg, Err(pvkit_core::PvError::NotConstant { .. })),
        "U = Y, V = xY was not rejected: {neg:?}"
    );
    Ok("constant on A and C, cocycle holds, U = Y / V = xY rejected".into())
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("golden example A", criterion_1),
        ("golden example B", criterion_2),
        ("golden example C", criterion_3),
        ("base-change invariance", criterion_4),
        ("solver oracle equivalence", criterion_5),
        ("invariant consistency", criterion_6),
        ("idempotent algebra", criterion_7),
        ("dimension equality", criterion_8),
        ("ideal bijection roundtrip", criterion_9),
        ("connection matrices", criterion_10),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
