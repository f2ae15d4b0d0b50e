//! End-to-end verification gate. Each test prints one PASS/FAIL line for the
//! claim it certifies and asserts exact equality throughout; there are no
//! tolerances anywhere.

use num_bigint::BigInt;
use num_traits::Zero;

use lauricella_core::ahyp::{
    build_a, integer_kernel, irreducibility_check, pushforward_report, rank_via_degree,
    toric_context, toric_ideal,
};
use lauricella_core::cpoly::{cpoly_buchberger, cpoly_normal_form, CPoly, MonomialOrder};
use lauricella_core::fc::{
    char_dimension_checked, char_ideal_torus, check_example_solutions, coeff_matrix_closed_form,
    coeff_matrix_det, ell, principal_l_prime, singular_locus_poly, syzygy_suite,
    verify_commutation, verify_spair_suite, ParamSet,
};
use lauricella_core::param::{rat, rat_int};
use lauricella_core::report::SuiteReport;
use lauricella_core::ParamScalar;

fn gate(name: &str, pass: bool, detail: &str) {
    println!("{}: {name} - {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{name}: {detail}");
}

fn gate_suite(name: &str, report: &SuiteReport) {
    let pass = report.all_pass();
    let detail = if pass {
        format!("{} checks", report.len())
    } else {
        let failed: Vec<String> = report
            .failed()
            .iter()
            .map(|c| format!("{} ({})", c.name, c.detail))
            .collect();
        failed.join("; ")
    };
    gate(name, pass, &detail);
}

#[test]
fn determinant_factorization_all_sign_vectors() {
    let mut cases = 0usize;
    for m in 1..=4 {
        for mask in 0..(1u32 << m) {
            let eps: Vec<i64> = (0..m)
                .map(|j| if mask & (1 << j) != 0 { -1 } else { 1 })
                .collect();
            let det = coeff_matrix_det(m, &eps);
            let closed = coeff_matrix_closed_form(m, &eps);
            assert_eq!(
                det, closed,
                "determinant differs from product form at m={m}, eps={eps:?}"
            );
            cases += 1;
        }
    }
    gate(
        "determinant_factorization_all_sign_vectors",
        cases == 2 + 4 + 8 + 16,
        &format!("{cases} (m, sign) cases match the product closed form exactly"),
    );
}

#[test]
fn singular_locus_fixtures_and_root_freeness() {
    let locus1 = singular_locus_poly(1).unwrap();
    let vars1 = locus1.resultant.vars().clone();
    let want1 = CPoly::monomial(&vars1, vec![0], ParamScalar::one())
        .try_sub(&CPoly::var(&vars1, 0))
        .unwrap();
    assert_eq!(locus1.resultant, want1, "m=1 resultant");

    let locus2 = singular_locus_poly(2).unwrap();
    let vars2 = locus2.resultant.vars().clone();
    let mono = |e: Vec<u32>, c: i64| CPoly::monomial(&vars2, e, ParamScalar::from_int(c));
    let want2 = mono(vec![0, 0], 1)
        .try_add(&mono(vec![1, 0], -2))
        .unwrap()
        .try_add(&mono(vec![0, 1], -2))
        .unwrap()
        .try_add(&mono(vec![2, 0], 1))
        .unwrap()
        .try_add(&mono(vec![0, 2], 1))
        .unwrap()
        .try_add(&mono(vec![1, 1], -2))
        .unwrap();
    assert_eq!(locus2.resultant, want2, "m=2 resultant");

    // expansion stays free of odd root powers up to m = 4
    for m in 3..=4 {
        singular_locus_poly(m).unwrap_or_else(|e| panic!("odd root power at m={m}: {e}"));
    }
    gate(
        "singular_locus_fixtures_and_root_freeness",
        true,
        "m=1 and m=2 fixtures match; m<=4 expansions are root free",
    );
}

#[test]
fn commutator_scalar_identity_symbolic() {
    for m in 2..=4 {
        let report = verify_commutation(&ParamSet::symbolic(m)).unwrap();
        gate_suite(&format!("commutator_scalar_identity_symbolic_m{m}"), &report);
    }
}

#[test]
fn torus_family_is_groebner_basis_under_weight_order() {
    for m in 2..=3 {
        let symbols = char_ideal_torus(m).unwrap();
        assert_eq!(symbols.len(), m);
        for (i, s) in symbols.iter().enumerate() {
            assert_eq!(
                *s,
                principal_l_prime(m, i + 1).unwrap(),
                "characteristic generator {i} at m={m}"
            );
        }
        gate(
            &format!("torus_family_is_groebner_basis_under_weight_order_m{m}"),
            true,
            &format!(
                "{m} generators already a basis; principal symbols match the cubic family"
            ),
        );
    }
}

#[test]
fn spair_standard_representations_certified_m4() {
    let report = verify_spair_suite(&ParamSet::symbolic(4)).unwrap();
    gate_suite("spair_standard_representations_certified_m4", &report);
}

#[test]
fn syzygy_identities_m2_m3() {
    for m in 2..=3 {
        let report = syzygy_suite(&ParamSet::symbolic(m)).unwrap();
        gate_suite(&format!("syzygy_identities_m{m}"), &report);
    }
}

#[test]
fn leading_ideal_dimension_matches_variable_count() {
    for (m, seed) in [(2usize, 11u64), (3usize, 12u64)] {
        let (report, draws) = char_dimension_checked(m, seed).unwrap();
        assert_eq!(report.dimension, m as i64, "x-chart dimension at m={m}");
        assert_eq!(
            report.chart_dimension, m as i64,
            "torus-chart dimension at m={m}"
        );
        gate(
            &format!("leading_ideal_dimension_matches_variable_count_m{m}"),
            true,
            &format!("dimension {m} at both specializations; {draws}"),
        );
    }
}

#[test]
fn example_solutions_annihilated() {
    let report = check_example_solutions().unwrap();
    gate_suite("example_solutions_annihilated", &report);
}

#[test]
fn toric_ideal_generators_rank_and_binomial_oracle() {
    // mutual reduction against the stated pair binomials
    for m in 2..=3 {
        let vars = toric_context(m);
        let computed = toric_ideal(&build_a(m), &vars).unwrap();
        let n = 2 * m + 2;
        let ord = MonomialOrder::degrevlex(n);
        let direct: Vec<CPoly> = (0..m)
            .map(|j| {
                let mut head = vec![0u32; n];
                head[j] = 1;
                head[m + 1 + j] = 1;
                let mut tail = vec![0u32; n];
                tail[m] = 1;
                tail[n - 1] = 1;
                CPoly::monomial(&vars, head, ParamScalar::one())
                    .try_sub(&CPoly::monomial(&vars, tail, ParamScalar::one()))
                    .unwrap()
            })
            .collect();
        let direct_basis = cpoly_buchberger(&direct, &ord).unwrap();
        for g in &computed {
            let (r, _) = cpoly_normal_form(g, &direct_basis, &ord).unwrap();
            assert!(r.is_zero(), "computed generator outside stated ideal, m={m}");
        }
        for g in &direct {
            let (r, _) = cpoly_normal_form(g, &computed, &ord).unwrap();
            assert!(r.is_zero(), "stated generator outside computed ideal, m={m}");
        }
    }

    // rank through the initial-ideal degree
    for m in 1..=5 {
        let (dim, deg) = rank_via_degree(m).unwrap();
        assert_eq!(dim, (m + 2) as i64, "initial ideal dimension at m={m}");
        assert_eq!(deg, 1u64 << m, "rank at m={m}");
    }

    // brute-force oracle at m=2: a binomial of degree <= 4 lies in the ideal
    // exactly when the matrix annihilates its exponent difference
    let m = 2;
    let a = build_a(m);
    let vars = toric_context(m);
    let basis = toric_ideal(&a, &vars).unwrap();
    let ord = MonomialOrder::degrevlex(6);
    let mut monos: Vec<Vec<u32>> = Vec::new();
    let mut stack = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == 6 {
            monos.push(prefix);
            continue;
        }
        let used: u32 = prefix.iter().sum();
        for e in 0..=(4 - used) {
            let mut next = prefix.clone();
            next.push(e);
            stack.push(next);
        }
    }
    let image = |e: &[u32]| -> Vec<BigInt> {
        (0..a.n_rows())
            .map(|i| {
                a.row(i)
                    .iter()
                    .zip(e)
                    .map(|(c, &x)| c * BigInt::from(x))
                    .sum()
            })
            .collect()
    };
    let mut in_ideal = 0usize;
    let mut outside = 0usize;
    for (ui, u) in monos.iter().enumerate() {
        for v in monos.iter().skip(ui + 1) {
            let binom = CPoly::monomial(&vars, u.clone(), ParamScalar::one())
                .try_sub(&CPoly::monomial(&vars, v.clone(), ParamScalar::one()))
                .unwrap();
            let (r, _) = cpoly_normal_form(&binom, &basis, &ord).unwrap();
            if image(u) == image(v) {
                assert!(r.is_zero(), "lattice binomial escaped the ideal: {u:?} {v:?}");
                in_ideal += 1;
            } else {
                assert!(!r.is_zero(), "spurious member: {u:?} {v:?}");
                outside += 1;
            }
        }
    }
    gate(
        "toric_ideal_generators_rank_and_binomial_oracle",
        in_ideal > 0 && outside > 0,
        &format!(
            "mutual reduction m=2,3; rank 2^m for m=1..5; oracle: {in_ideal} lattice binomials reduce to zero, {outside} non-lattice binomials do not"
        ),
    );
}

#[test]
fn irreducibility_verdicts_match_enumeration() {
    let reducible = irreducibility_check(
        &ParamSet::with_values(1, rat_int(0), rat_int(0), vec![rat_int(0)]).unwrap(),
    )
    .unwrap();
    assert!(!reducible.irreducible, "integer parameters must be reducible");

    let generic1 = irreducibility_check(
        &ParamSet::with_values(1, rat(1, 2), rat(1, 3), vec![rat(1, 5)]).unwrap(),
    )
    .unwrap();
    assert!(generic1.irreducible);

    let generic2 = irreducibility_check(
        &ParamSet::with_values(2, rat(1, 3), rat(1, 5), vec![rat(1, 2), rat(1, 2)]).unwrap(),
    )
    .unwrap();
    assert!(generic2.irreducible);

    // the verdict must be exactly the exhaustive enumeration over all subsets
    for rep in [&reducible, &generic1, &generic2] {
        assert_eq!(rep.rows.len(), 1 << (rep.m + 1), "subset enumeration size");
        let exhaustive = rep.rows.iter().all(|row| !row.value.is_integer());
        assert_eq!(rep.irreducible, exhaustive, "verdict vs enumeration");
        assert!(rep.columns_zero_one, "support functional off the columns");
        assert!(rep.complement_sum_ok, "complement pairing broken");
    }
    gate(
        "irreducibility_verdicts_match_enumeration",
        true,
        "integer fixture reducible, two generic fixtures irreducible, verdicts equal subset enumeration",
    );
}

#[test]
fn euler_pushforward_displayed_rows() {
    for m in 2..=3 {
        let report = pushforward_report(m).unwrap();
        gate_suite(&format!("euler_pushforward_displayed_rows_m{m}"), &report);
    }
}

#[test]
fn principal_operator_left_divisibility() {
    for m in 1..=4 {
        let op = ell(&ParamSet::symbolic(m), m).unwrap();
        assert!(
            op.left_divisible_by_var(m - 1),
            "x_m must divide the last principal operator on the left, m={m}"
        );
    }
    gate(
        "principal_operator_left_divisibility",
        true,
        "x_m left-divides the m-th principal operator for m=1..4",
    );
}

// supporting sanity: the locus polynomial vanishes where the determinant
// route says it must, keeping the two locus constructions honest against a
// direct point evaluation
#[test]
fn locus_point_evaluations() {
    use lauricella_core::fc::singular_point_test;
    let on = singular_point_test(2, &[rat(1, 4), rat(1, 4)]).unwrap();
    assert!(on.member);
    assert_eq!(on.resultant_value, rat_int(0));
    let off = singular_point_test(2, &[rat_int(1), rat_int(1)]).unwrap();
    assert!(!off.member);
    assert_eq!(off.resultant_value, rat_int(-3));
    let axis = singular_point_test(2, &[rat_int(0), rat_int(5)]).unwrap();
    assert!(axis.member);
    assert_eq!(axis.vanishing_coordinates, vec![1]);
    gate(
        "locus_point_evaluations",
        true,
        "(1/4,1/4) on the locus, (1,1) off with value -3, axis point caught by the coordinate component",
    );
}

// supporting sanity: kernels feeding the lattice ideal are genuine kernels
#[test]
fn kernel_vectors_annihilated() {
    for m in 1..=4 {
        let a = build_a(m);
        let kernel = integer_kernel(&a);
        assert_eq!(kernel.len(), m);
        for v in &kernel {
            for i in 0..a.n_rows() {
                let dot: BigInt = a.row(i).iter().zip(v).map(|(x, y)| x * y).sum();
                assert!(dot.is_zero());
            }
        }
    }
    gate(
        "kernel_vectors_annihilated",
        true,
        "kernel bases have rank m and are annihilated for m=1..4",
    );
}

// supporting sanity: the principal symbols used by the rank and dimension
// routes agree with the displayed symbol families
#[test]
fn principal_symbols_match_displayed_families() {
    use lauricella_core::fc::{ell_prime, principal_l};
    use lauricella_core::weyl::principal_symbol;
    for m in 1..=3 {
        let ps = ParamSet::symbolic(m);
        for i in 1..=m {
            let s = principal_symbol(&ell(&ps, i).unwrap()).unwrap();
            assert_eq!(s, principal_l(m, i).unwrap());
            let s = principal_symbol(&ell_prime(&ps, i).unwrap()).unwrap();
            assert_eq!(s, principal_l_prime(m, i).unwrap());
        }
    }
    gate(
        "principal_symbols_match_displayed_families",
        true,
        "principal symbols reproduce both displayed families, m=1..3",
    );
}
