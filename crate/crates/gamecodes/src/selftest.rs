//! Built-in reproduction checks: every published value this crate claims
//! to reproduce, runnable as one batch from the CLI or from tests.

use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::anngame::{AnnGraph, DEFAULT_POSITION_CAP};
use crate::codes::{anncode_of, gamma_prime_basis, gamma_t_closed_form, union_subspace_check, Code};
use crate::gf2::{rank_words, BitVec, Gf2Matrix};
use crate::groundgraph::{example2_graph, gamma_t, nim_heap, star_into_leaf, GroundGraph};
use crate::lexicode::{greedy, make_ordering};
use crate::solver::{classify_pnd, gamma_solve, grundy_acyclic, GammaTable, GammaValue, Outcome};

/// One named check with its outcome.
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

type Check = fn() -> Result<String, String>;

/// Run every check, in a fixed order, never short-circuiting.
#[must_use]
pub fn run_all() -> Vec<CheckResult> {
    let checks: [(&'static str, Check); 14] = [
        ("example1", check_example1),
        ("example2", check_example2),
        ("example3", check_example3),
        ("table1_ordering", check_table1_ordering),
        ("table1_greedy", check_table1_greedy),
        ("example5", check_example5),
        ("example6", check_example6),
        ("gamma_family_t2", || check_gamma_family(2)),
        ("gamma_family_t3", || check_gamma_family(3)),
        ("gamma_family_t4", || check_gamma_family(4)),
        ("gamma_prime_code", check_gamma_prime_code),
        ("union_subspace", check_union_subspace),
        ("homomorphism", check_homomorphism),
        ("sum_rule", check_sum_rule),
    ];
    checks
        .into_iter()
        .map(|(name, f)| match f() {
            Ok(detail) => CheckResult {
                name,
                pass: true,
                detail,
            },
            Err(detail) => CheckResult {
                name,
                pass: false,
                detail,
            },
        })
        .collect()
}

fn expect_eq<T: PartialEq + Debug>(got: &T, want: &T, what: &str) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn expect(cond: bool, what: &str) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.to_string())
    }
}

fn decimals(code: &Code) -> Vec<u64> {
    code.words().iter().map(|w| w.bits()).collect()
}

fn solved_anngraph(ground: GroundGraph) -> Result<(AnnGraph, GammaTable), String> {
    let ann = AnnGraph::new(ground, true).map_err(|e| e.to_string())?;
    let g = ann.materialize(DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    Ok((ann, gamma_solve(&g)))
}

fn check_example1() -> Result<String, String> {
    let code = anncode_of(&star_into_leaf(4), DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    expect_eq(&decimals(&code), &vec![0, 3, 5, 6, 9, 10, 12, 15], "P-set")?;
    expect(code.is_linear(), "code should be linear")?;
    expect_eq(&code.min_distance(), &Some(2), "min distance")?;
    expect_eq(&code.dimension(), &Some(3), "dimension")?;
    Ok("star anncode {0,3,5,6,9,10,12,15}, linear, d = 2, dim = 3".into())
}

fn check_example2() -> Result<String, String> {
    let ground = example2_graph();
    let ann = AnnGraph::new(ground, true).map_err(|e| e.to_string())?;
    let g = ann.materialize(DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    let outcomes = classify_pnd(&g);
    let p: Vec<u64> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, &o)| o == Outcome::P)
        .map(|(u, _)| u as u64)
        .collect();
    expect_eq(&p, &vec![0, 7, 11, 12], "P-set")?;
    let code = Code::new(4, p.iter().map(|&b| BitVec::new(4, b)).collect());
    expect(code.is_linear(), "code should be linear")?;
    expect_eq(&code.min_distance(), &Some(2), "min distance")?;
    // Lone token on either two-cycle vertex: draw.
    let z0 = ann.position_from_vertices(&[1]).bits() as usize;
    let z1 = ann.position_from_vertices(&[2]).bits() as usize;
    expect_eq(&outcomes[z0], &Outcome::D, "outcome of {z_0}")?;
    expect_eq(&outcomes[z1], &Outcome::D, "outcome of {z_1}")?;
    Ok("P-set {0,7,11,12}, d = 2; two-cycle singletons classified D".into())
}

fn check_example3() -> Result<String, String> {
    let ground = nim_heap(5);
    let code = anncode_of(&ground, DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    expect_eq(&decimals(&code), &vec![0, 7, 25, 30], "P-set")?;
    expect_eq(&code.min_distance(), &Some(3), "min distance")?;
    // Independent route: Sprague-Grundy zero set on the same graph.
    let ann = AnnGraph::new(ground, true).map_err(|e| e.to_string())?;
    let g = ann.materialize(DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    let grundy = grundy_acyclic(&g).map_err(|e| e.to_string())?;
    let zero: Vec<u64> = grundy
        .iter()
        .enumerate()
        .filter(|(_, &v)| v == 0)
        .map(|(u, _)| u as u64)
        .collect();
    expect_eq(&zero, &vec![0, 7, 25, 30], "grundy zero-set")?;
    Ok("nim-heap anncode {0,7,25,30}, d = 3; outcome and grundy routes agree".into())
}

fn example4_matrix() -> Gf2Matrix {
    Gf2Matrix::parse("1000\n1100\n0110\n0011\n").expect("fixed matrix")
}

fn check_table1_ordering() -> Result<String, String> {
    let ord = make_ordering(example4_matrix(), 4).map_err(|e| e.to_string())?;
    let seq: Vec<u64> = ord.vectors().iter().map(|w| w.bits()).collect();
    expect_eq(
        &seq,
        &vec![0, 1, 3, 2, 6, 7, 5, 4, 12, 13, 15, 14, 10, 11, 9, 8],
        "ordering",
    )?;
    Ok("ordering 0,1,3,2,6,7,5,4,12,13,15,14,10,11,9,8".into())
}

fn check_table1_greedy() -> Result<String, String> {
    let ord = make_ordering(example4_matrix(), 4).map_err(|e| e.to_string())?;
    let r = greedy(&ord, 2);
    let seq: Vec<u64> = r.selected().iter().map(|w| w.bits()).collect();
    expect_eq(&seq, &vec![0, 3, 6, 5, 12, 15, 10, 9], "selection order")?;
    // Same set as the star anncode.
    let star = anncode_of(&star_into_leaf(4), DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    expect_eq(&r.to_code(), &star, "selection set vs star anncode")?;
    Ok("greedy keeps 0,3,6,5,12,15,10,9; set equals star anncode".into())
}

fn check_example5() -> Result<String, String> {
    let w = Gf2Matrix::parse("1000\n1010\n0110\n0111\n").expect("fixed matrix");
    let ord = make_ordering(w, 4).map_err(|e| e.to_string())?;
    let r = greedy(&ord, 2);
    let seq: Vec<u64> = r.selected().iter().map(|w| w.bits()).collect();
    expect_eq(&seq, &vec![0, 7, 12, 11], "selection order")?;
    Ok("greedy keeps (0, 7, 12, 11) in order".into())
}

fn check_example6() -> Result<String, String> {
    let w = Gf2Matrix::parse("10000\n11000\n01100\n00110\n00011\n").expect("fixed matrix");
    let ord = make_ordering(w, 5).map_err(|e| e.to_string())?;
    let r = greedy(&ord, 3);
    let seq: Vec<u64> = r.selected().iter().map(|w| w.bits()).collect();
    expect_eq(&seq, &vec![0, 7, 25, 30], "selection")?;
    let nim = anncode_of(&nim_heap(5), DEFAULT_POSITION_CAP).map_err(|e| e.to_string())?;
    expect_eq(&r.to_code(), &nim, "lexicode vs nim-heap anncode")?;
    Ok("5-bit lexicode at d = 3 equals the nim-heap anncode {0,7,25,30}".into())
}

fn check_gamma_family(t: u32) -> Result<String, String> {
    let (_, table) = solved_anngraph(gamma_t(t))?;
    let facts = gamma_t_closed_form(t);
    let j = facts.j_count as usize;
    let x = |i: usize| i - 1;
    let y = |i: usize| j + i - 1;
    let pair = |a: usize, b: usize| (1usize << a) | (1usize << b);
    let finite_at = |pos: usize| table.value(pos).finite();

    for i in 1..=j {
        // Single tokens never reach a finite value.
        expect(finite_at(1 << x(i)).is_none(), &format!("x_{i} should be infinite"))?;
        expect(finite_at(1 << y(i)).is_none(), &format!("y_{i} should be infinite"))?;
        for k in 1..=j {
            if k > i {
                expect_eq(
                    &finite_at(pair(x(i), x(k))),
                    &Some(facts.pair_value_xx(i as u64, k as u64)),
                    &format!("x_{i} + x_{k}"),
                )?;
                expect_eq(
                    &finite_at(pair(y(i), y(k))),
                    &Some(facts.pair_value_yy(i as u64, k as u64)),
                    &format!("y_{i} + y_{k}"),
                )?;
            }
            expect_eq(
                &finite_at(pair(x(i), y(k))),
                &Some(facts.pair_value_xy(i as u64, k as u64)),
                &format!("x_{i} + y_{k}"),
            )?;
        }
    }

    expect_eq(&table.max_finite(), &Some(facts.max_gamma), "max finite value")?;

    // Finite positions are exactly the even-weight half.
    let expected_finite = 1usize << (2 * j - 1);
    expect_eq(&table.finite_count(), &expected_finite, "finite position count")?;
    for pos in 0..table.len() {
        let even = (pos as u64).count_ones().is_multiple_of(2);
        expect_eq(
            &finite_at(pos).is_some(),
            &even,
            &format!("parity of position {pos}"),
        )?;
    }

    let kernel: Vec<u64> = (0..table.len())
        .filter(|&u| finite_at(u) == Some(0))
        .map(|u| u as u64)
        .collect();
    expect_eq(&rank_words(&kernel), &(facts.m as usize), "kernel dimension")?;
    Ok(format!(
        "t = {t}: pair values, max value {}, |finite| = 2^{}, kernel dim {}",
        facts.max_gamma,
        2 * j - 1,
        facts.m
    ))
}

fn check_gamma_prime_code() -> Result<String, String> {
    let code = Code::from_span(10, &gamma_prime_basis()).map_err(|e| e.to_string())?;
    expect_eq(&code.size(), &16, "span size")?;
    expect_eq(&code.dimension(), &Some(4), "dimension")?;
    expect_eq(&code.min_distance(), &Some(4), "min distance")?;
    Ok("10-bit span: 16 words, dim 4, d = 4".into())
}

fn check_union_subspace() -> Result<String, String> {
    for t in [2u32, 3] {
        let (_, table) = solved_anngraph(gamma_t(t))?;
        for k in 0..=t {
            expect(
                union_subspace_check(&table, k),
                &format!("union of values below 2^{k} on the t = {t} family"),
            )?;
        }
    }
    Ok("value unions below each power of two are XOR-closed (t = 2, 3)".into())
}

fn check_homomorphism() -> Result<String, String> {
    for (name, ground) in [
        ("star", star_into_leaf(4)),
        ("two-cycle", example2_graph()),
        ("gamma_2", gamma_t(2)),
        ("gamma_3", gamma_t(3)),
    ] {
        let (_, table) = solved_anngraph(ground)?;
        let finite: Vec<(usize, u64)> = (0..table.len())
            .filter_map(|u| table.value(u).finite().map(|v| (u, v)))
            .collect();
        for &(a, va) in &finite {
            for &(b, vb) in &finite {
                let got = table.value(a ^ b);
                expect_eq(
                    &got.finite(),
                    &Some(va ^ vb),
                    &format!("{name}: value({a} xor {b})"),
                )?;
            }
        }
    }
    Ok("value(u xor v) = value(u) xor value(v) on all finite pairs (4 graphs)".into())
}

fn check_sum_rule() -> Result<String, String> {
    let part = gamma_t(2);
    let (_, single) = solved_anngraph(part.clone())?;
    let (_, combined) = solved_anngraph(part.disjoint_sum(&part))?;
    let width = part.n();
    for a in 0..single.len() {
        for b in 0..single.len() {
            if let (Some(va), Some(vb)) = (single.value(a).finite(), single.value(b).finite()) {
                let pos = a | (b << width);
                expect_eq(
                    combined.value(pos),
                    &GammaValue::Finite(va ^ vb),
                    &format!("sum position ({a}, {b})"),
                )?;
            }
        }
    }
    // The pure value arithmetic agrees.
    let s = crate::solver::sum_gamma(&[GammaValue::Finite(2), GammaValue::Finite(3)])
        .map_err(|e| e.to_string())?;
    expect_eq(&s, &GammaValue::Finite(1), "finite sum arithmetic")?;
    let infinite = crate::solver::sum_gamma(&[
        GammaValue::Finite(2),
        GammaValue::Infinite(BTreeSet::from([0])),
    ]);
    expect(infinite.is_err(), "sum with an infinite part must refuse")?;
    Ok("sum-graph values equal componentwise XOR on finite pairs".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let results = run_all();
        assert_eq!(results.len(), 14);
        for r in &results {
            assert!(r.pass, "{} failed: {}", r.name, r.detail);
        }
    }

    #[test]
    fn expected_names_in_order() {
        let names: Vec<&str> = run_all().iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec![
                "example1",
                "example2",
                "example3",
                "table1_ordering",
                "table1_greedy",
                "example5",
                "example6",
                "gamma_family_t2",
                "gamma_family_t3",
                "gamma_family_t4",
                "gamma_prime_code",
                "union_subspace",
                "homomorphism",
                "sum_rule",
            ]
        );
    }
}
