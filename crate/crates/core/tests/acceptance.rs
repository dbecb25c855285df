//! Acceptance criteria, one line each.
//!
//! A criterion whose literal statement is false for some inputs prints `FAIL`
//! with the offending inputs, and then checks the corrected statement. The
//! process exits non-zero only when a corrected statement or a criterion that
//! holds as stated is violated.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use pfgr::chern::{chi_y_ci, euler_characteristic_ci, eval_poly, middle_hodge, middle_hodge_with, tangent_chern};
use pfgr::dsl::{eval_dsl, Value};
use pfgr::pairs::{
    cayley_trick_class, check_cork02, check_l_equivalence, derive_poincare_y,
    hypersurface_poincare_oracle, in_lemma_range, main_theorem_status, make_pair, pair_report,
    poincare_x, poincare_x_with, q_class_grassmannian_side, q_class_pfaffian_side, variable_betti,
    LinearSection, MainTheorem,
};
use pfgr::ring::projective_class;
use pfgr::schubert::{
    betti, grassmannian_class, hyperplane_section_class, table, ClassMethod, Engine, SchubertRing,
};
use pfgr::{Error, LPoly};

enum Outcome {
    Pass(String),
    /// The literal statement is false; the string says where and why.
    LiteralFail(String),
}

type Check = std::result::Result<Outcome, String>;
type Criterion = (u32, &'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn within(start: Instant, limit: Duration, what: &str) -> std::result::Result<Duration, String> {
    let took = start.elapsed();
    if took > limit {
        Err(format!("{what} took {took:?}, limit {limit:?}"))
    } else {
        Ok(took)
    }
}

// Oracles built from first principles, independent of the library's formulas.

/// Cells of Gr(2,n): partitions in a 2 × (n−2) box, counted by size.
fn cell_count_class(n: u32) -> LPoly {
    let w = n - 2;
    let mut c = vec![0i64; (2 * w + 1) as usize];
    for a in 0..=w {
        for b in 0..=a {
            c[(a + b) as usize] += 1;
        }
    }
    LPoly::from_coeffs(&c)
}

fn even_powers_up_to(top: u32) -> LPoly {
    let mut c = vec![0i64; top as usize + 1];
    for j in (0..=top).step_by(2) {
        c[j as usize] = 1;
    }
    LPoly::from_coeffs(&c)
}

fn lpow(j: u32) -> LPoly {
    LPoly::lefschetz_pow(j)
}

/// Degree of skew forms of rank ≤ 2r on an N-dimensional space (Harris–Tu),
/// as an exact rational that must come out integral.
fn skew_rank_locus_degree(size: u32, half_rank: u32) -> BigInt {
    let binom = |a: u32, b: u32| -> BigInt {
        let mut v = BigInt::one();
        for i in 0..b {
            v = v * BigInt::from(a - i) / BigInt::from(i + 1);
        }
        v
    };
    let corank_steps = size - 2 * half_rank - 1;
    let mut d = BigRational::one();
    for i in 0..corank_steps {
        d *= BigRational::new(
            binom(size + i, 2 * half_rank + 2 * i + 1),
            binom(2 * i + 1, i),
        );
    }
    d /= BigRational::from_integer(BigInt::from(2).pow(corank_steps));
    assert!(d.is_integer(), "degree formula not integral");
    d.to_integer()
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut literal_misses = Vec::new();
    for n in 4..=14u32 {
        let cells = grassmannian_class(n, ClassMethod::Cells).map_err(|e| e.to_string())?;
        let product = grassmannian_class(n, ClassMethod::ProductFormula).map_err(|e| e.to_string())?;
        let s = if n % 2 == 0 { n - 2 } else { n - 1 };
        let sum_even = even_powers_up_to(2 * ((n - 2) / 2));
        let gr_formula = &projective_class(s as i64) * &sum_even;
        ensure!(cells == cell_count_class(n), "n={n}: cell class differs from box count");
        ensure!(cells == product && cells == gr_formula, "n={n}: Gr product formula");

        let h = hyperplane_section_class(n).map_err(|e| e.to_string())?;
        let h_formula = &projective_class(s as i64 - 1) * &sum_even;
        ensure!(h == h_formula, "n={n}: H product formula");
        // independent: Lefschetz + duality on the Betti numbers of Gr(2,n)
        let dim_h = 2 * n - 5;
        let lef: Vec<i64> = (0..=dim_h)
            .map(|i| cell_count_class(n).coeff(i.min(dim_h - i)).try_into().unwrap())
            .collect();
        ensure!(h == LPoly::from_coeffs(&lef), "n={n}: H against Lefschetz");

        let via_divisor = &(&cells - &lpow(2 * n - 4)) - &lpow(s);
        if via_divisor != h {
            let mut gap = LPoly::zero();
            for i in (n - 2..=2 * n - 6).filter(|i| i % 2 == 0) {
                gap = &gap + &lpow(i);
            }
            ensure!(
                &(&cells - &lpow(2 * n - 4)) - &h == gap,
                "n={n}: unexpected gap between [Gr]−L^(2n−4)−L^s and [H]"
            );
            literal_misses.push(n);
        }
    }
    let took = within(start, Duration::from_secs(1), "criterion 1")?;
    ensure!(
        literal_misses == (6..=14).collect::<Vec<_>>(),
        "identity [H] = [Gr]−L^(2n−4)−L^s should hold exactly for n ≤ 5, misses {literal_misses:?}"
    );
    Ok(Outcome::LiteralFail(format!(
        "cells = product formula and [H] = product formula = Lefschetz oracle for 4 ≤ n ≤ 14, \
         but [H] = [Gr]−L^(2n−4)−L^s fails for n = {literal_misses:?}: \
         [Gr]−L^(2n−4)−[H] = Σ L^i over even i in [n−2, 2n−6], which is L^s only for n ≤ 5 \
         (the singular fibre is not a Schubert divisor once the degenerate rank exceeds 2); {took:?}"
    )))
}

fn criterion_2() -> Check {
    for n in (5..=13u32).step_by(2) {
        let gr = cell_count_class(n);
        let h = hyperplane_section_class(n).map_err(|e| e.to_string())?;
        ensure!(
            &projective_class(n as i64 - 1) * &h == &projective_class(n as i64 - 2) * &gr,
            "n={n}: [P^(n−1)][H] ≠ [P^(n−2)][Gr]"
        );
        ensure!(check_l_equivalence(n) == Ok(true), "n={n}: check_l_equivalence");
    }
    for n in [5u32, 7, 9] {
        let pair = make_pair(n, n).map_err(|e| e.to_string())?;
        let px = poincare_x(pair.section()).map_err(|e| e.to_string())?;
        let py = derive_poincare_y(&pair, &px).map_err(|e| e.to_string())?;
        ensure!(py == px, "({n},{n}): P_Y = {py} but P_X = {px}");
    }
    Ok(Outcome::Pass("odd n in [5,13]; P_Y = P_X for (5,5), (7,7), (9,9)".into()))
}

fn criterion_3() -> Check {
    for n in 6..=14u32 {
        let mid = 2 * n - 4;
        for kp in 1..=3u32 {
            let diff = betti(n, mid).unwrap() as i64 - betti(n, mid - 2 * kp).unwrap() as i64;
            let from_cells = cell_count_class(n).coeff(n - 2) - cell_count_class(n).coeff(n - 2 - kp);
            let expected = if n % 2 == 0 { (kp as i64 + 1) / 2 } else { kp as i64 / 2 };
            ensure!(
                diff == expected && from_cells == int(expected),
                "n={n}, k'={kp}: difference {diff}, expected {expected}"
            );
        }
    }
    let mut passed = Vec::new();
    let mut unreachable = Vec::new();
    for n in 6..=12u32 {
        for k in 1..=10u32 {
            if !in_lemma_range(n, k) {
                continue;
            }
            match make_pair(n, k) {
                Ok(pair) => {
                    ensure!(check_cork02(&pair) == Ok(true), "check_cork02 fails on ({n},{k})");
                    passed.push((n, k));
                }
                Err(Error::NegativeDimension { dim_y, .. }) => {
                    // Y is empty: b(Y) − 1 = −1 while the variable Betti number is 0
                    ensure!(n % 2 == 1 && k == 2 && dim_y == -2, "({n},{k}) unexpectedly invalid");
                    let var = variable_betti(LinearSection::new(n, k).unwrap()).unwrap();
                    ensure!(var.is_zero(), "({n},{k}): variable Betti {var}, expected 0");
                    unreachable.push((n, k));
                }
                Err(e) => return Err(format!("({n},{k}): {e}")),
            }
        }
    }
    ensure!(
        unreachable == vec![(7, 2), (9, 2), (11, 2)],
        "unexpected unreachable pairs {unreachable:?}"
    );
    Ok(Outcome::LiteralFail(format!(
        "Betti differences hold for 6 ≤ n ≤ 14 and check_cork02 passes on {} pairs, but the list \
         includes {unreachable:?} where Y is empty (dim Y = −2): these are not valid pairs, and the \
         variable Betti number there is 0 = b(Y), not b(Y) − 1",
        passed.len()
    )))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let cases: [(u32, u32, &str); 4] = [(6, 5, "cubic threefold"), (6, 6, "cubic fourfold"), (8, 4, "quartic K3"), (10, 5, "quintic threefold")];
    let mut ys = Vec::new();
    for (n, k, name) in cases {
        let pair = make_pair(n, k).map_err(|e| e.to_string())?;
        let px = poincare_x(pair.section()).map_err(|e| e.to_string())?;
        let py = derive_poincare_y(&pair, &px).map_err(|e| e.to_string())?;
        let oracle = hypersurface_poincare_oracle(n / 2, k - 1).map_err(|e| e.to_string())?;
        ensure!(py == oracle, "({n},{k}) {name}: derived {py}, oracle {oracle}");
        ys.push((px, py));
    }
    let (x65, y65) = &ys[0];
    ensure!(y65.betti(3) == int(10) && x65.euler_characteristic() == int(-6), "(6,5)");
    ensure!(euler_characteristic_ci(6, 5) == Ok(int(-6)), "(6,5) χ from Chern classes");
    let (_, y66) = &ys[1];
    ensure!(y66.betti(4) == int(23) && y66.euler_characteristic() == int(27), "(6,6)");
    let (x84, y84) = &ys[2];
    ensure!(y84.betti(2) == int(22), "(8,4) b2(Y)");
    ensure!(x84.betti(8) == int(24) && x84.euler_characteristic() == int(36), "(8,4) X");
    ensure!(euler_characteristic_ci(8, 4) == Ok(int(36)), "(8,4) χ from Chern classes");
    let (_, y105) = &ys[3];
    ensure!(y105.betti(3) == int(204) && y105.euler_characteristic() == int(-200), "(10,5)");
    let took = within(start, Duration::from_secs(30), "criterion 4")?;
    Ok(Outcome::Pass(format!("four hypersurfaces match the oracle; {took:?}")))
}

fn criterion_5() -> Check {
    let section = LinearSection::new(7, 7).unwrap();
    let pieri = SchubertRing::new(7, Engine::PieriGiambelli).unwrap();
    let lr = SchubertRing::new(7, Engine::LittlewoodRichardson).unwrap();
    ensure!(
        table(7, Engine::PieriGiambelli).entries() == table(7, Engine::LittlewoodRichardson).entries(),
        "multiplication tables differ"
    );
    let mut seen = Vec::new();
    for ring in [&pieri, &lr] {
        let px = poincare_x_with(ring, 7).map_err(|e| e.to_string())?;
        let hodge = middle_hodge_with(ring, 7).map_err(|e| e.to_string())?;
        seen.push((px, hodge));
    }
    ensure!(seen[0] == seen[1], "engines disagree");
    let (px, hodge) = &seen[0];
    let pair = make_pair(7, 7).unwrap();
    let py = derive_poincare_y(&pair, px).map_err(|e| e.to_string())?;
    ensure!(&py == px, "P_Y ≠ P_X");
    ensure!(hodge.euler_char == int(-98) && px.betti(3) == int(102), "χ or b3");
    ensure!(hodge.middle_hodge == vec![int(1), int(50), int(50), int(1)], "middle Hodge {:?}", hodge.middle_hodge);
    ensure!(eval_poly(&hodge.chi_y, &BigInt::zero()).is_zero(), "χ_y(0)");
    ensure!(main_theorem_status(section) == Ok(MainTheorem::Applies), "main theorem status");
    Ok(Outcome::Pass("both engines: χ = −98, b3 = 102, (1,50,50,1), χ_y(0) = 0, applies".into()))
}

fn criterion_6() -> Check {
    for n in 4..=10u32 {
        let ring = SchubertRing::new(n, Engine::PieriGiambelli).unwrap();
        let top = tangent_chern(&ring).c(ring.dim(), &ring).integrate();
        let expected = BigInt::from(n * (n - 1) / 2);
        ensure!(top == BigRational::from_integer(expected.clone()), "n={n}: ∫c_top = {top}");
        ensure!(cell_count_class(n).eval_at_one() == expected, "n={n}: cell count");
    }
    let mut grid = 0;
    let mut literal_misses = Vec::new();
    for n in 4..=10u32 {
        for k in 1..=10u32 {
            if make_pair(n, k).is_err() {
                continue;
            }
            grid += 1;
            let chi_y = chi_y_ci(n, k).map_err(|e| e.to_string())?;
            let chi = euler_characteristic_ci(n, k).map_err(|e| e.to_string())?;
            ensure!(eval_poly(&chi_y, &int(-1)) == chi, "({n},{k}): χ_y(−1) ≠ χ");
            let at_zero = eval_poly(&chi_y, &BigInt::zero());
            if 2 * (n - 2) - k == 2 {
                // surfaces: Noether, χ(O) = (K² + e)/12 with K = O(k − n)
                let twist = int(k as i64 - n as i64);
                let k_squared = &twist * &twist * catalan(n - 2);
                let noether = (k_squared + &chi) / int(12);
                ensure!(at_zero == noether, "({n},{k}): χ_y(0) = {at_zero}, Noether gives {noether}");
            }
            let stated = match (n, k) {
                (7, 7) | (9, 9) => Some(0),
                (6, 6) | (7, 8) => Some(2),
                _ if k < n => Some(1),
                _ => None,
            };
            match stated {
                Some(e) if at_zero != int(e) => {
                    ensure!((n, k) == (7, 8), "({n},{k}): χ_y(0) = {at_zero}, expected {e}");
                    literal_misses.push(format!("({n},{k}): χ_y(0) = {at_zero}, stated {e}"));
                }
                _ => {}
            }
        }
    }
    for (n, k) in [(6, 6), (7, 8)] {
        let h = middle_hodge(n, k).map_err(|e| e.to_string())?;
        ensure!(h.h(2) >= BigInt::one(), "({n},{k}): h^(2,0) = {}", h.h(2));
    }
    let summary = format!("c_top for 4 ≤ n ≤ 10; χ_y(−1) = χ on {grid} pairs; h^(2,0) ≥ 1 for (6,6), (7,8)");
    if literal_misses.is_empty() {
        return Ok(Outcome::Pass(summary));
    }
    Ok(Outcome::LiteralFail(format!(
        "{summary}; but {}: that surface has K = O(1), K² = 42, e = {}, so Noether forces \
         χ(O) = 14 (p_g = 13); the value 2 holds only for the K3 surface (6,6)",
        literal_misses.join(", "),
        euler_characteristic_ci(7, 8).map_err(|e| e.to_string())?
    )))
}

/// Degree of Gr(2, m + 2) in the Plücker embedding.
fn catalan(m: u32) -> BigInt {
    let mut c = BigInt::one();
    for i in 0..m {
        c = c * int(2 * (2 * i as i64 + 1)) / int(i as i64 + 2);
    }
    c
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut count = 0;
    let mut point_sets = Vec::new();
    for n in 4..=12u32 {
        for k in 1..=10u32 {
            let Ok(pair) = make_pair(n, k) else { continue };
            count += 1;
            let px = poincare_x(pair.section()).map_err(|e| e.to_string())?;
            let py = derive_poincare_y(&pair, &px).map_err(|e| e.to_string())?;
            let d = pair.dim_y();
            ensure!(py.as_poly().has_negative_coefficient().is_none(), "({n},{k}): negative Betti");
            ensure!(py.is_palindromic(d) && py.degree() == Some(2 * d), "({n},{k}): not palindromic about {d}");
            let (b0, top) = (py.betti(0), py.betti(2 * d));
            if d > 0 {
                ensure!(b0.is_one() && top.is_one(), "({n},{k}): b0 = {b0}, top = {top}");
            } else {
                // Y is finite: a codimension-dim(P^(k−1)) rank locus, so its degree
                let half_rank = if n % 2 == 0 { (n - 2) / 2 } else { (n - 3) / 2 };
                let degree = skew_rank_locus_degree(n, half_rank);
                ensure!(b0 == degree, "({n},{k}): {b0} points, expected {degree}");
                if !b0.is_one() {
                    point_sets.push(format!("({n},{k}): {b0} points"));
                }
            }
        }
    }
    let took = within(start, Duration::from_secs(60), "criterion 7")?;
    ensure!(!point_sets.is_empty(), "expected zero-dimensional Y with several points");
    Ok(Outcome::LiteralFail(format!(
        "{count} pairs: P_Y nonnegative and palindromic everywhere, constant and top term 1 \
         whenever dim Y > 0; for dim Y = 0 the constant term counts points and equals the \
         degree of the rank locus, which is not 1: {}; {took:?}",
        point_sets.join(", ")
    )))
}

fn criterion_8() -> Check {
    let pair = make_pair(10, 5).unwrap();
    let section = pair.section();
    let px = poincare_x(section).map_err(|e| e.to_string())?;
    let gr = grassmannian_class(10, ClassMethod::Cells).unwrap();
    let gr_t = gr.to_poincare().unwrap();
    let z = cayley_trick_class(&gr, &px, &gr_t, 5).map_err(|e| e.to_string())?;
    let p3 = projective_class(3).to_poincare().unwrap();
    let by_hand = &px.shift(8) + &(&gr_t * &p3);
    ensure!(z == by_hand, "P(Z) differs from the hand-built sum");
    ensure!(z.is_palindromic(19) && z.betti(0).is_one(), "P(Z) not palindromic about 19");
    let easy = q_class_grassmannian_side(section, &px).map_err(|e| e.to_string())?;
    let py = derive_poincare_y(&pair, &px).map_err(|e| e.to_string())?;
    let hard = q_class_pfaffian_side(&pair, &py).map_err(|e| e.to_string())?;
    ensure!(z == easy && z == hard, "P(Z) disagrees with the two decompositions of Q");
    Ok(Outcome::Pass(format!("P(Z) palindromic about 19, b19 = {}", z.betti(19))))
}

fn criterion_9() -> Check {
    let r = pair_report(6, 6).map_err(|e| e.to_string())?;
    let f = r
        .findings
        .iter()
        .find(|f| !f.agrees && f.literal.betti(4) == int(22) && f.derived.betti(4) == int(23))
        .ok_or("no finding with literal b4 = 22 against derived 23")?;
    ensure!(
        r.poincare_y == hypersurface_poincare_oracle(3, 5).unwrap(),
        "derived P_Y was altered"
    );
    ensure!(r.all_passed() && r.exit_code() == 0, "checks should still pass");
    Ok(Outcome::Pass(format!("flagged: {}", f.statement)))
}

fn criterion_10() -> Check {
    let truthy = ["Gr(2,5) == P(4) * SumEven(5)", "P(6)*H(2,7) == P(5)*Gr(2,7)"];
    for src in truthy {
        ensure!(eval_dsl(src) == Ok(Value::Bool(true)), "`{src}` is not true");
    }
    match eval_dsl("(1 + L) div (1 + L*L)") {
        Err(Error::Eval { message, .. }) if message.contains("not exact") => {}
        other => return Err(format!("non-exact division gave {other:?}")),
    }
    let positions = [("1 +", (1, 4)), ("Gr(3,5)", (1, 4)), ("P(2)\n+ * 3", (2, 3))];
    for (src, want) in positions {
        match eval_dsl(src) {
            Err(Error::Parse { line, column, .. }) if (line, column) == want => {}
            other => return Err(format!("`{src}`: expected a parse error at {want:?}, got {other:?}")),
        }
    }
    Ok(Outcome::Pass("three examples and parse positions".into()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (1, "class identities", criterion_1),
        (2, "ingredient identity for odd n", criterion_2),
        (3, "variable Betti lemma", criterion_3),
        (4, "hypersurface cross-validation", criterion_4),
        (5, "Calabi–Yau threefold pair (7,7)", criterion_5),
        (6, "characteristic classes", criterion_6),
        (7, "property sweep of P_Y", criterion_7),
        (8, "Cayley trick", criterion_8),
        (9, "discrepancy detection", criterion_9),
        (10, "expression language", criterion_10),
    ];
    let mut broken = 0;
    for (id, title, run) in criteria {
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match result {
            Ok(Outcome::Pass(detail)) => println!("criterion {id:>2} PASS  {title}: {detail}"),
            Ok(Outcome::LiteralFail(detail)) => {
                println!("criterion {id:>2} FAIL  {title} (literal criterion unattainable; corrected statement verified): {detail}")
            }
            Err(why) => {
                broken += 1;
                println!("criterion {id:>2} FAIL  {title}: {why}");
            }
        }
    }
    if broken == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
