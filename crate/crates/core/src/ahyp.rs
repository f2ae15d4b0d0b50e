//! Matrix side of the hypergeometric system: integer kernels of the defining
//! matrix, saturated lattice ideals, holonomic rank through squarefree leading
//! terms, the parameter irreducibility table, and the monomial coordinate
//! change between the two Euler-operator presentations.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::cpoly::{cpoly_buchberger, CPoly, MonomialOrder, VarSet};
use crate::error::{AlgError, AlgResult};
use crate::fc::ParamSet;
use crate::monomial_ideal::squarefree_ideal_degree;
use crate::param::{rat_int, ParamScalar, Rat};
use crate::report::SuiteReport;
use crate::weyl::{WeylContext, WeylElement};

/// Dense integer matrix with exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        assert!(!rows.is_empty(), "matrix needs at least one row");
        let width = rows[0].len();
        assert!(width > 0, "matrix needs at least one column");
        assert!(
            rows.iter().all(|r| r.len() == width),
            "ragged matrix rows"
        );
        IntMatrix {
            rows: rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut rows = vec![vec![0i64; n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = 1;
        }
        Self::from_rows(rows)
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows[0].len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.n_cols())
            .map(|j| (0..self.n_rows()).map(|i| self.rows[i][j].clone()).collect())
            .collect();
        IntMatrix { rows }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n_rows();
        assert_eq!(n, self.n_cols(), "determinant of a non-square matrix");
        let mut m = self.rows.clone();
        let mut sign = BigInt::from(1);
        let mut prev = BigInt::from(1);
        for k in 0..n {
            if m[k][k].is_zero() {
                let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
                match swap {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::from(0),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // exact division: the Bareiss update keeps entries integral
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = t / &prev;
                }
                m[i][k] = BigInt::from(0);
            }
            prev = m[k][k].clone();
        }
        sign * m[n - 1][n - 1].clone()
    }
}

/// Lattice basis of { v in Z^n : A v = 0 }, computed by integer column
/// reduction with the unimodular transform tracked on the side. Because the
/// transform is unimodular the result is a basis of the full kernel lattice,
/// not a finite-index sublattice.
pub fn integer_kernel(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n_rows = a.n_rows();
    let n_cols = a.n_cols();
    let mut m: Vec<Vec<BigInt>> = a.rows.clone();
    let mut u: Vec<Vec<BigInt>> = (0..n_cols)
        .map(|i| {
            (0..n_cols)
                .map(|j| BigInt::from(u64::from(i == j)))
                .collect()
        })
        .collect();

    // col_c -= q * col_p on both matrices
    let col_op = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, c: usize, p: usize, q: &BigInt| {
        for row in m.iter_mut() {
            let delta = q * &row[p];
            row[c] -= delta;
        }
        for row in u.iter_mut() {
            let delta = q * &row[p];
            row[c] -= delta;
        }
    };
    let col_swap = |m: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, c: usize, p: usize| {
        for row in m.iter_mut() {
            row.swap(c, p);
        }
        for row in u.iter_mut() {
            row.swap(c, p);
        }
    };

    let mut lead = 0usize;
    for row in 0..n_rows {
        if lead >= n_cols {
            break;
        }
        loop {
            let pivot = (lead..n_cols)
                .filter(|&c| !m[row][c].is_zero())
                .min_by_key(|&c| m[row][c].abs());
            let Some(p) = pivot else { break };
            let mut clean = true;
            for c in lead..n_cols {
                if c == p || m[row][c].is_zero() {
                    continue;
                }
                let q = &m[row][c] / &m[row][p];
                if !q.is_zero() {
                    col_op(&mut m, &mut u, c, p, &q);
                }
                if !m[row][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                if p != lead {
                    col_swap(&mut m, &mut u, p, lead);
                }
                lead += 1;
                break;
            }
        }
    }

    (lead..n_cols)
        .map(|c| (0..n_cols).map(|r| u[r][c].clone()).collect())
        .collect()
}

/// Defining matrix of the quadric family: columns e_i + e_{m+2} for
/// i = 1..m+1 followed by -e_i + e_{m+2}, so the last row is all ones.
pub fn build_a(m: usize) -> IntMatrix {
    assert!(m >= 1);
    let mut rows = vec![vec![0i64; 2 * m + 2]; m + 2];
    for i in 0..m + 1 {
        rows[i][i] = 1;
        rows[i][m + 1 + i] = -1;
        rows[m + 1][i] = 1;
        rows[m + 1][m + 1 + i] = 1;
    }
    IntMatrix::from_rows(rows)
}

/// Commutative variables for the lattice ideal: d1..d{m+1} then d-1..d-{m+1}.
pub fn toric_context(m: usize) -> VarSet {
    let mut names: Vec<String> = (1..=m + 1).map(|i| format!("d{i}")).collect();
    names.extend((1..=m + 1).map(|i| format!("d-{i}")));
    VarSet::new(names)
}

fn kernel_binomial(vars: &VarSet, v: &[BigInt]) -> AlgResult<CPoly> {
    let sum: BigInt = v.iter().sum();
    if !sum.is_zero() {
        return Err(AlgError::NonHomogeneousLattice);
    }
    let n = v.len();
    let mut plus = vec![0u32; n];
    let mut minus = vec![0u32; n];
    for (k, entry) in v.iter().enumerate() {
        let e = entry.to_i64().expect("kernel entry exceeds i64");
        if e >= 0 {
            plus[k] = u32::try_from(e).expect("kernel entry exceeds u32");
        } else {
            minus[k] = u32::try_from(-e).expect("kernel entry exceeds u32");
        }
    }
    let head = CPoly::monomial(vars, plus, ParamScalar::one());
    let tail = CPoly::monomial(vars, minus, ParamScalar::one());
    head.try_sub(&tail)
}

/// Saturated lattice ideal of the integer kernel of `a`, returned as the
/// reduced Gr&ouml;bner basis under graded reverse lexicographic order.
///
/// Every kernel vector must sum to zero so that the generating binomials are
/// homogeneous; the single-pass division step below is only valid for
/// homogeneous ideals. Saturation runs one variable at a time, using
/// (J : (fg)^inf) = ((J : f^inf) : g^inf): with the variable cheapest in the
/// order, stripping its lowest power from each basis element realizes one
/// (J : v^inf) step.
pub fn toric_ideal(a: &IntMatrix, vars: &VarSet) -> AlgResult<Vec<CPoly>> {
    let n = a.n_cols();
    assert_eq!(vars.len(), n, "variable count must match matrix columns");
    let kernel = integer_kernel(a);
    let mut gens = Vec::with_capacity(kernel.len());
    for v in &kernel {
        gens.push(kernel_binomial(vars, v)?);
    }
    for v in 0..n {
        let ord = MonomialOrder::degrevlex_cheapest_last(n, v);
        let basis = cpoly_buchberger(&gens, &ord)?;
        gens = basis
            .into_iter()
            .map(|g| {
                let k = g.min_var_power(v);
                if k > 0 {
                    g.divide_by_var_power(v, k)
                } else {
                    g
                }
            })
            .collect();
    }
    cpoly_buchberger(&gens, &MonomialOrder::degrevlex(n))
}

/// Weight order for the rank computation: total degree across the m paired
/// coordinate blocks decides first (the two unpaired coordinates weigh
/// nothing), graded reverse lex breaks ties.
pub fn underline_order(m: usize) -> MonomialOrder {
    let n = 2 * m + 2;
    let mut w = vec![0i64; n];
    for j in 0..m {
        w[j] = 1;
        w[m + 1 + j] = 1;
    }
    MonomialOrder::with_weight_row(w, &MonomialOrder::degrevlex(n))
}

/// Dimension and degree of the leading-term ideal of the lattice ideal under
/// the paired-weight order. The leading terms must come out squarefree; the
/// degree of that simplicial ideal is the holonomic rank.
pub fn rank_via_degree(m: usize) -> AlgResult<(i64, u64)> {
    let a = build_a(m);
    let vars = toric_context(m);
    let gens = toric_ideal(&a, &vars)?;
    let ord = underline_order(m);
    let basis = cpoly_buchberger(&gens, &ord)?;
    let mut leads = Vec::with_capacity(basis.len());
    for g in &basis {
        let (e, _) = g.leading(&ord).ok_or(AlgError::ZeroElement)?;
        leads.push(e.clone());
    }
    squarefree_ideal_degree(&leads, 2 * m + 2)
}

/// Parameter vector attached to the family:
/// (1 - c_1, ..., 1 - c_m, b - a, sum(c) - a - b - m), length m + 2.
pub fn beta_vector(ps: &ParamSet) -> Vec<ParamScalar> {
    let m = ps.m;
    let mut beta = Vec::with_capacity(m + 2);
    for ci in &ps.c {
        beta.push(ParamScalar::one().sub_ref(ci));
    }
    beta.push(ps.b.sub_ref(&ps.a));
    let mut last = ParamScalar::constant(rat_int(-(m as i64)));
    for ci in &ps.c {
        last = last.add_ref(ci);
    }
    beta.push(last.sub_ref(&ps.a).sub_ref(&ps.b));
    beta
}

/// Weyl context over the 2m+2 Euler coordinates u1..u{m+1}, u-1..u-{m+1}.
pub fn euler_context(m: usize) -> WeylContext {
    let mut names: Vec<String> = (1..=m + 1).map(|i| format!("u{i}")).collect();
    names.extend((1..=m + 1).map(|i| format!("u-{i}")));
    WeylContext::new(names, false)
}

/// Euler operators of the matrix system: the i-th operator is
/// sum_k A[i][k] u_k d_k - beta_i.
pub fn euler_operators(ps: &ParamSet) -> AlgResult<Vec<WeylElement>> {
    let m = ps.m;
    let a = build_a(m);
    let ctx = euler_context(m);
    let beta = beta_vector(ps);
    let mut out = Vec::with_capacity(m + 2);
    for i in 0..m + 2 {
        let mut op = WeylElement::zero(&ctx);
        for k in 0..2 * m + 2 {
            let e = a.entry(i, k);
            if e.is_zero() {
                continue;
            }
            let c = ParamScalar::constant(Rat::from_integer(e.clone()));
            op = &op + &WeylElement::theta(&ctx, k).scale(&c);
        }
        out.push(&op - &WeylElement::constant(&ctx, beta[i].clone()));
    }
    Ok(out)
}

/// One subset row of the irreducibility table.
#[derive(Debug, Clone)]
pub struct SubsetValue {
    /// 1-based members of the subset J of {1, ..., m+1}.
    pub subset: Vec<usize>,
    /// (1/2)(beta_{m+2} + sum_{j in J} beta_j - sum_{j not in J} beta_j).
    pub value: Rat,
    /// The same functional written through 0/1 indicators; kept separately
    /// because the two presentations genuinely differ.
    pub display_value: Rat,
    pub integral: bool,
}

#[derive(Debug, Clone)]
pub struct IrreducibilityReport {
    pub m: usize,
    pub beta: Vec<Rat>,
    pub rows: Vec<SubsetValue>,
    /// No subset functional takes an integer value.
    pub irreducible: bool,
    /// Whether the indicator display matched the defining functional on every
    /// subset; false flags a discrepancy between the two write-ups.
    pub forms_agree: bool,
    /// The functional takes only the values 0 and 1 on the matrix columns.
    pub columns_zero_one: bool,
    /// Complementary subsets sum to beta_{m+2}.
    pub complement_sum_ok: bool,
}

/// Evaluate the subset functional on an (m+2)-vector.
fn subset_functional(mask: usize, top: usize, v: &[Rat]) -> Rat {
    let mut acc = v[top].clone();
    for (j, entry) in v.iter().enumerate().take(top) {
        if mask & (1 << j) != 0 {
            acc += entry;
        } else {
            acc -= entry;
        }
    }
    acc / rat_int(2)
}

/// Tabulate the subset functional over all 2^{m+1} subsets for numeric
/// parameters; the system is irreducible exactly when no value is an integer.
pub fn irreducibility_check(ps: &ParamSet) -> AlgResult<IrreducibilityReport> {
    let vals = ps.values().ok_or_else(|| {
        AlgError::MissingParameter("irreducibility table needs numeric parameter values".into())
    })?;
    let m = ps.m;
    let top = m + 1;
    let beta_sym = beta_vector(ps);
    let mut beta = Vec::with_capacity(m + 2);
    for s in &beta_sym {
        beta.push(s.specialize(&vals)?);
    }
    let a = build_a(m);
    let columns: Vec<Vec<Rat>> = (0..2 * m + 2)
        .map(|k| {
            (0..m + 2)
                .map(|r| Rat::from_integer(a.entry(r, k).clone()))
                .collect()
        })
        .collect();

    let mut rows = Vec::with_capacity(1 << top);
    let mut forms_agree = true;
    let mut columns_zero_one = true;
    let mut complement_sum_ok = true;
    let full = (1usize << top) - 1;
    for mask in 0..=full {
        let value = subset_functional(mask, top, &beta);

        // indicator display: (1/2)(sum c - a - b - 2 sum_{j<=m} eps_j (1-c_j)
        //                          + eps_{m+1} (b - a))
        let mut disp = -vals.a.clone() - vals.b.clone();
        for (j, cj) in vals.c.iter().enumerate() {
            disp += cj;
            if mask & (1 << j) != 0 {
                disp -= rat_int(2) * (rat_int(1) - cj);
            }
        }
        if mask & (1 << m) != 0 {
            disp += vals.b.clone() - vals.a.clone();
        }
        disp /= rat_int(2);
        if disp != value {
            forms_agree = false;
        }

        let comp = subset_functional(!mask & full, top, &beta);
        if value.clone() + comp != beta[top] {
            complement_sum_ok = false;
        }
        for col in &columns {
            let pv = subset_functional(mask, top, col);
            if pv != rat_int(0) && pv != rat_int(1) {
                columns_zero_one = false;
            }
        }

        let integral = value.is_integer();
        let subset: Vec<usize> = (0..top).filter(|j| mask & (1 << j) != 0).map(|j| j + 1).collect();
        rows.push(SubsetValue {
            subset,
            value,
            display_value: disp,
            integral,
        });
    }
    let irreducible = rows.iter().all(|r| !r.integral);
    Ok(IrreducibilityReport {
        m,
        beta,
        rows,
        irreducible,
        forms_agree,
        columns_zero_one,
        complement_sum_ok,
    })
}

/// Exponent matrix of the monomial substitution between the two Euler
/// coordinate systems: column k holds the exponents of the k-th target
/// coordinate written in u1..u{m+1}, u-1..u-{m+1}.
pub fn birational_change_matrix(m: usize) -> IntMatrix {
    let n = 2 * m + 2;
    let mut rows = vec![vec![0i64; n]; n];
    for j in 0..m {
        // column j: e_j + e_{m+1+j} - e_{m+1} - e_{2m+2} (1-based)
        rows[j][j] = 1;
        rows[m + 1 + j][j] = 1;
        rows[m][j] -= 1;
        rows[n - 1][j] -= 1;
        // column m+j: -e_{m+1+j}
        rows[m + 1 + j][m + j] = -1;
    }
    rows[m][n - 2] = -1;
    rows[n - 1][n - 1] = -1;
    IntMatrix::from_rows(rows)
}

/// Push Euler operators through a monomial coordinate change: for the
/// substitution with exponent matrix B, theta in the source coordinates maps
/// to B times theta in the target, so the operator table transforms by the
/// transpose. Fails when the change is not invertible over the rationals.
pub fn euler_pushforward(b: &IntMatrix) -> AlgResult<IntMatrix> {
    if b.det().is_zero() {
        return Err(AlgError::SingularChange);
    }
    Ok(b.transpose())
}

/// Verify the four closed-form rows of the pushed-forward Euler table for the
/// standard coordinate change of the family.
pub fn pushforward_report(m: usize) -> AlgResult<SuiteReport> {
    let b = birational_change_matrix(m);
    let det = b.det();
    let p = euler_pushforward(&b)?;
    let n = 2 * m + 2;
    let mut report = SuiteReport::new();
    report.record(
        "coordinate_change_nonsingular",
        !det.is_zero(),
        format!("det = {det}"),
    );

    // row i of the change matrix = column i of the pushforward = the expansion
    // of the i-th source Euler operator in the target ones
    let col = |i: usize| -> Vec<i64> {
        (0..n)
            .map(|k| p.entry(k, i).to_i64().expect("entry fits i64"))
            .collect()
    };
    let fmt = |v: &[i64]| -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| format!("{c:+}*t{}", k + 1))
            .collect();
        terms.join(" ")
    };

    for j in 0..m {
        let mut want = vec![0i64; n];
        want[j] = 1;
        let got = col(j);
        report.record(
            format!("euler_u{}_passes_through", j + 1),
            got == want,
            fmt(&got),
        );
    }
    let mut want = vec![0i64; n];
    for w in want.iter_mut().take(m) {
        *w = -1;
    }
    want[2 * m] = -1;
    let got = col(m);
    report.record(
        "euler_u_last_collects_block",
        got == want,
        fmt(&got),
    );
    for j in 0..m {
        let mut want = vec![0i64; n];
        want[j] = 1;
        want[m + j] = -1;
        let got = col(m + 1 + j);
        report.record(
            format!("euler_u-{}_is_difference", j + 1),
            got == want,
            fmt(&got),
        );
    }
    let mut want = vec![0i64; n];
    for w in want.iter_mut().take(m) {
        *w = -1;
    }
    want[2 * m + 1] = -1;
    let got = col(2 * m + 1);
    report.record(
        "euler_u-last_collects_block",
        got == want,
        fmt(&got),
    );
    Ok(report)
}
