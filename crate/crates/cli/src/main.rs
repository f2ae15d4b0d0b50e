//! `lauricella`: command line front end for the exact Weyl-algebra
//! toolkit. Subcommands generate operator families, run Gröbner-basis
//! and characteristic-ideal computations, evaluate the singular locus,
//! and replay the verification suites. Exit code 0 means every check
//! passed, 1 means a verification failed, 2 means the invocation was
//! unusable (bad flags, malformed expressions or rationals).

use clap::{Parser, Subcommand, ValueEnum};

use lauricella_cli::parser::{
    format_cpoly, format_operator, parse_operator_with, Chart, ParseOptions,
};
use lauricella_cli::report::{Report, RunMeta};
use lauricella_core::fc::{
    char_dimension_checked, char_ideal_torus, check_example_solutions, ell, ell_pair, ell_prime,
    s_ab_shift, s_op, singular_locus_poly, singular_point_test, syzygy_suite, t_op, t_pair,
    verify_commutation, verify_spair_suite, ParamSet,
};
use lauricella_core::param::{fmt_rat, parse_rat, Rat};
use lauricella_core::weyl::{weyl_buchberger, WeylElement, WeylOrder};
use lauricella_core::{ahyp, AlgError};

#[derive(Parser)]
#[command(
    name = "lauricella",
    version,
    about = "Exact singular-locus, Groebner-basis, and rank computations for the F_C hypergeometric operator families"
)]
struct Cli {
    /// Output rendering: plain text or a stable JSON report
    #[arg(long, value_enum, default_value_t = OutFormat::Text, global = true)]
    format: OutFormat,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderOpt {
    W,
    Km,
    Lex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyOpt {
    /// Torus-chart generators (y variables)
    Torus,
    /// Homogenized generators (pairwise family included)
    Homogenized,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteOpt {
    Commutation,
    Spair,
    Syzygy,
    Example,
    Pushforward,
    Dimension,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ChartOpt {
    X,
    Y,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print every operator family at the given size
    Generate {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Comma-separated rational values for c1..cm
        #[arg(long, allow_hyphen_values = true)]
        ci: Option<String>,
    },
    /// Run Buchberger on an operator family and check it is already closed
    Groebner {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = FamilyOpt::Torus)]
        family: FamilyOpt,
        /// Monomial order; defaults to w for torus, km for homogenized
        #[arg(long, value_enum)]
        order: Option<OrderOpt>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ci: Option<String>,
    },
    /// Characteristic-ideal generators on the torus chart
    CharIdeal {
        #[arg(long)]
        m: usize,
    },
    /// Components of the singular locus
    SingLocus {
        #[arg(long)]
        m: usize,
    },
    /// Test a rational point for membership in the singular locus
    PointTest {
        #[arg(long)]
        m: usize,
        /// Comma-separated rational coordinates
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Replay the identity verification suites
    VerifyIdentities {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value_t = SuiteOpt::All)]
        suite: SuiteOpt,
        /// Seed for the randomized parameter specializations (dimension suite)
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        ci: Option<String>,
    },
    /// Holonomic rank via the degree of the toric leading ideal
    Rank {
        #[arg(long)]
        m: usize,
    },
    /// Irreducibility of the system at given rational parameters
    Irreducible {
        #[arg(long)]
        m: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        ci: String,
    },
    /// Check the explicit solutions at the fixed example parameters
    CheckExample {},
    /// Parse an expression and print its normally ordered form
    Parse {
        #[arg(value_name = "EXPR", allow_hyphen_values = true)]
        expr: String,
        /// Pin the number of variables instead of inferring it
        #[arg(long)]
        m: Option<usize>,
        /// Pin the chart instead of inferring it from the atoms
        #[arg(long, value_enum)]
        chart: Option<ChartOpt>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn usage_error(msg: &str) -> i32 {
    eprintln!("error: {msg}");
    2
}

fn check_m(m: usize, cap: usize) -> Result<(), String> {
    if m == 0 {
        return Err("--m must be at least 1".to_string());
    }
    if m > cap {
        return Err(format!("--m {m} exceeds the supported desk scale (max {cap})"));
    }
    Ok(())
}

/// Build a parameter set from optional flag values: all three flags for
/// exact rational parameters, none for fully symbolic ones.
fn build_params(
    m: usize,
    a: &Option<String>,
    b: &Option<String>,
    ci: &Option<String>,
) -> Result<(ParamSet, String), String> {
    match (a, b, ci) {
        (None, None, None) => Ok((ParamSet::symbolic(m), "symbolic".to_string())),
        (Some(a), Some(b), Some(ci)) => {
            let av = parse_rat(a).map_err(|e| format!("--a: {e}"))?;
            let bv = parse_rat(b).map_err(|e| format!("--b: {e}"))?;
            let cv: Vec<Rat> = ci
                .split(',')
                .map(|s| parse_rat(s.trim()).map_err(|e| format!("--ci: {e}")))
                .collect::<Result<_, _>>()?;
            if cv.len() != m {
                return Err(format!("--ci needs exactly {m} comma-separated values"));
            }
            let desc = format!(
                "a={}, b={}, c={}",
                fmt_rat(&av),
                fmt_rat(&bv),
                cv.iter().map(fmt_rat).collect::<Vec<_>>().join(",")
            );
            let ps = ParamSet::with_values(m, av, bv, cv).map_err(|e| e.to_string())?;
            Ok((ps, desc))
        }
        _ => Err("give all of --a, --b, --ci or none of them".to_string()),
    }
}

fn parse_point(m: usize, point: &str) -> Result<Vec<Rat>, String> {
    let pt: Vec<Rat> = point
        .split(',')
        .map(|s| parse_rat(s.trim()).map_err(|e| format!("--point: {e}")))
        .collect::<Result<_, _>>()?;
    if pt.len() != m {
        return Err(format!("--point needs exactly {m} comma-separated values"));
    }
    Ok(pt)
}

/// Emit a report and turn its verdict into an exit code. In text mode a
/// plain rendering can replace the check list for query-style commands.
fn finish(report: Report, format: OutFormat, plain: Option<String>) -> i32 {
    match format {
        OutFormat::Structured => print!("{}", report.render_structured()),
        OutFormat::Text => match plain {
            Some(text) => print!("{text}"),
            None => print!("{}", report.render_text()),
        },
    }
    if report.all_pass() {
        0
    } else {
        1
    }
}

fn internal_error(e: AlgError) -> i32 {
    eprintln!("error: {e}");
    2
}

fn run(cli: Cli) -> i32 {
    match cli.cmd {
        Cmd::Generate { m, a, b, ci } => {
            if let Err(e) = check_m(m, 6) {
                return usage_error(&e);
            }
            let (ps, desc) = match build_params(m, &a, &b, &ci) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            match generate_cmd(&ps, desc, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::Groebner {
            m,
            family,
            order,
            a,
            b,
            ci,
        } => {
            if let Err(e) = check_m(m, 4) {
                return usage_error(&e);
            }
            let (ps, desc) = match build_params(m, &a, &b, &ci) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            match groebner_cmd(&ps, desc, family, order, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::CharIdeal { m } => {
            if let Err(e) = check_m(m, 4) {
                return usage_error(&e);
            }
            match char_ideal_cmd(m, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::SingLocus { m } => {
            if let Err(e) = check_m(m, 6) {
                return usage_error(&e);
            }
            match sing_locus_cmd(m, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::PointTest { m, point } => {
            if let Err(e) = check_m(m, 6) {
                return usage_error(&e);
            }
            let pt = match parse_point(m, &point) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            match point_test_cmd(m, &pt, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::VerifyIdentities {
            m,
            suite,
            seed,
            a,
            b,
            ci,
        } => {
            if let Err(e) = check_m(m, 4) {
                return usage_error(&e);
            }
            if suite == SuiteOpt::Dimension && m > 3 {
                return usage_error("the dimension suite supports --m up to 3");
            }
            let (ps, desc) = match build_params(m, &a, &b, &ci) {
                Ok(v) => v,
                Err(e) => return usage_error(&e),
            };
            match verify_cmd(&ps, desc, suite, seed, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::Rank { m } => {
            if let Err(e) = check_m(m, 10) {
                return usage_error(&e);
            }
            match rank_cmd(m, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::Irreducible { m, a, b, ci } => {
            if let Err(e) = check_m(m, 10) {
                return usage_error(&e);
            }
            let (ps, desc) =
                match build_params(m, &Some(a), &Some(b), &Some(ci)) {
                    Ok(v) => v,
                    Err(e) => return usage_error(&e),
                };
            match irreducible_cmd(&ps, desc, cli.format) {
                Ok(code) => code,
                Err(e) => internal_error(e),
            }
        }
        Cmd::CheckExample {} => match check_example_cmd(cli.format) {
            Ok(code) => code,
            Err(e) => internal_error(e),
        },
        Cmd::Parse { expr, m, chart } => {
            if let Some(mv) = m {
                if let Err(e) = check_m(mv, 12) {
                    return usage_error(&e);
                }
            }
            let opts = ParseOptions {
                m,
                chart: chart.map(|c| match c {
                    ChartOpt::X => Chart::X,
                    ChartOpt::Y => Chart::Y,
                }),
                ..ParseOptions::default()
            };
            match parse_operator_with(&expr, &opts) {
                Ok(p) => {
                    let printed = format_operator(&p);
                    let mut meta = RunMeta::new("parse");
                    meta.m = Some(p.ctx().m() as u64);
                    let mut report = Report::new(meta);
                    report.push("parse", true, printed.clone());
                    finish(report, cli.format, Some(format!("{printed}\n")))
                }
                Err(AlgError::Syntax { offset, message }) => {
                    eprintln!("syntax error at offset {offset}: {message}");
                    2
                }
                Err(e) => internal_error(e),
            }
        }
    }
}

fn generate_cmd(
    ps: &ParamSet,
    desc: String,
    format: OutFormat,
) -> Result<i32, AlgError> {
    let m = ps.m;
    let mut named: Vec<(String, WeylElement)> = Vec::new();
    for i in 1..=m {
        named.push((format!("ell{i}"), ell(ps, i)?));
    }
    for i in 1..=m {
        for j in i + 1..=m {
            named.push((format!("ell{i}{j}"), ell_pair(ps, i, j)?));
        }
    }
    for i in 1..=m {
        named.push((format!("ellp{i}"), ell_prime(ps, i)?));
    }
    for i in 1..=m {
        named.push((format!("S{i}"), s_op(ps, i)?));
    }
    named.push(("Sab".to_string(), s_ab_shift(ps, 0)));
    for i in 1..=m {
        named.push((format!("T{i}"), t_op(ps, i)?));
    }
    for i in 1..=m {
        for j in i + 1..=m {
            named.push((format!("T{i}{j}"), t_pair(ps, i, j)?));
        }
    }
    let mut meta = RunMeta::new("generate");
    meta.m = Some(m as u64);
    meta.parameters = desc;
    let mut report = Report::new(meta);
    let mut plain = String::new();
    for (name, op) in &named {
        let text = format_operator(op);
        plain.push_str(&format!("{name} = {text}\n"));
        report.push(name.clone(), true, text);
    }
    Ok(finish(report, format, Some(plain)))
}

fn groebner_cmd(
    ps: &ParamSet,
    desc: String,
    family: FamilyOpt,
    order: Option<OrderOpt>,
    format: OutFormat,
) -> Result<i32, AlgError> {
    let m = ps.m;
    let gens: Vec<WeylElement> = match family {
        FamilyOpt::Torus => (1..=m).map(|i| ell_prime(ps, i)).collect::<Result<_, _>>()?,
        FamilyOpt::Homogenized => {
            let mut g: Vec<WeylElement> =
                (1..=m).map(|i| t_op(ps, i)).collect::<Result<_, _>>()?;
            for i in 1..=m {
                for j in i + 1..=m {
                    g.push(t_pair(ps, i, j)?);
                }
            }
            g
        }
    };
    let order = order.unwrap_or(match family {
        FamilyOpt::Torus => OrderOpt::W,
        FamilyOpt::Homogenized => OrderOpt::Km,
    });
    let (ord, ord_name) = match order {
        OrderOpt::W => (WeylOrder::w_order(m), "w"),
        OrderOpt::Km => (WeylOrder::km_order(m), "km"),
        OrderOpt::Lex => (WeylOrder::lex_order(m), "lex"),
    };
    let basis = weyl_buchberger(&gens, &ord)?;
    let mut meta = RunMeta::new("groebner");
    meta.m = Some(m as u64);
    meta.parameters = desc;
    meta.order = Some(ord_name.to_string());
    let mut report = Report::new(meta);
    let mut plain = String::new();
    for (k, g) in basis.iter().enumerate() {
        let text = format_operator(g);
        plain.push_str(&format!("{text}\n"));
        report.push(format!("basis_{}", k + 1), true, text);
    }
    let closed = basis.len() == gens.len();
    report.push(
        "input_closed",
        closed,
        format!("{} generators in, {} elements out", gens.len(), basis.len()),
    );
    plain.push_str(&format!("closed: {closed}\n"));
    Ok(finish(report, format, Some(plain)))
}

fn char_ideal_cmd(m: usize, format: OutFormat) -> Result<i32, AlgError> {
    let gens = char_ideal_torus(m)?;
    let mut meta = RunMeta::new("char-ideal");
    meta.m = Some(m as u64);
    let mut report = Report::new(meta);
    let mut plain = String::new();
    for (k, g) in gens.iter().enumerate() {
        let text = format_cpoly(g);
        plain.push_str(&format!("{text}\n"));
        report.push(format!("generator_{}", k + 1), true, text);
    }
    Ok(finish(report, format, Some(plain)))
}

fn sing_locus_cmd(m: usize, format: OutFormat) -> Result<i32, AlgError> {
    let locus = singular_locus_poly(m)?;
    let resultant = format_cpoly(&locus.resultant);
    let hyperplane = format_cpoly(&locus.hyperplane);
    let mut meta = RunMeta::new("sing-locus");
    meta.m = Some(m as u64);
    let mut report = Report::new(meta);
    report.push("resultant", true, resultant.clone());
    report.push("coordinate_component", true, hyperplane.clone());
    let plain = format!("{resultant}\n{hyperplane}\n");
    Ok(finish(report, format, Some(plain)))
}

fn point_test_cmd(m: usize, pt: &[Rat], format: OutFormat) -> Result<i32, AlgError> {
    let t = singular_point_test(m, pt)?;
    let vanish = if t.vanishing_coordinates.is_empty() {
        "none".to_string()
    } else {
        t.vanishing_coordinates
            .iter()
            .map(|i| format!("x{i}"))
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut meta = RunMeta::new("point-test");
    meta.m = Some(m as u64);
    meta.parameters = pt.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
    let mut report = Report::new(meta);
    report.push("member", true, t.member.to_string());
    report.push("resultant_value", true, fmt_rat(&t.resultant_value));
    report.push("vanishing_coordinates", true, vanish.clone());
    let plain = format!(
        "member: {}\nresultant: {}\nvanishing: {}\n",
        t.member,
        fmt_rat(&t.resultant_value),
        vanish
    );
    Ok(finish(report, format, Some(plain)))
}

fn verify_cmd(
    ps: &ParamSet,
    desc: String,
    suite: SuiteOpt,
    seed: Option<u64>,
    format: OutFormat,
) -> Result<i32, AlgError> {
    let m = ps.m;
    let mut meta = RunMeta::new("verify-identities");
    meta.m = Some(m as u64);
    meta.parameters = desc;
    meta.seed = seed;
    meta.suite = Some(
        match suite {
            SuiteOpt::Commutation => "commutation",
            SuiteOpt::Spair => "spair",
            SuiteOpt::Syzygy => "syzygy",
            SuiteOpt::Example => "example",
            SuiteOpt::Pushforward => "pushforward",
            SuiteOpt::Dimension => "dimension",
            SuiteOpt::All => "all",
        }
        .to_string(),
    );
    let mut report = Report::new(meta);
    let run_suite =
        |report: &mut Report, which: SuiteOpt| -> Result<(), AlgError> {
            match which {
                SuiteOpt::Commutation => report.absorb(&verify_commutation(ps)?),
                SuiteOpt::Spair => report.absorb(&verify_spair_suite(ps)?),
                SuiteOpt::Syzygy => report.absorb(&syzygy_suite(ps)?),
                SuiteOpt::Example => report.absorb(&check_example_solutions()?),
                SuiteOpt::Pushforward => report.absorb(&ahyp::pushforward_report(m)?),
                SuiteOpt::Dimension => {
                    let (rep, detail) = char_dimension_checked(m, seed.unwrap_or(0))?;
                    report.push(
                        "leading_ideal_dimension",
                        rep.dimension == m as i64,
                        format!("dimension {} (expected {m}); {detail}", rep.dimension),
                    );
                    report.push(
                        "torus_chart_dimension",
                        rep.chart_dimension == m as i64,
                        format!("dimension {}", rep.chart_dimension),
                    );
                }
                SuiteOpt::All => unreachable!("expanded by the caller"),
            }
            Ok(())
        };
    match suite {
        SuiteOpt::All => {
            // the dimension suite is excluded here: it is the one long
            // computation and runs only when asked for by name
            for s in [
                SuiteOpt::Commutation,
                SuiteOpt::Spair,
                SuiteOpt::Syzygy,
                SuiteOpt::Example,
                SuiteOpt::Pushforward,
            ] {
                run_suite(&mut report, s)?;
            }
        }
        s => run_suite(&mut report, s)?,
    }
    Ok(finish(report, format, None))
}

fn rank_cmd(m: usize, format: OutFormat) -> Result<i32, AlgError> {
    let (dim, deg) = ahyp::rank_via_degree(m)?;
    let mut meta = RunMeta::new("rank");
    meta.m = Some(m as u64);
    let mut report = Report::new(meta);
    report.push("rank", true, deg.to_string());
    report.push("leading_ideal_dimension", true, dim.to_string());
    Ok(finish(report, format, Some(format!("{deg}\n"))))
}

fn irreducible_cmd(ps: &ParamSet, desc: String, format: OutFormat) -> Result<i32, AlgError> {
    let rep = ahyp::irreducibility_check(ps)?;
    let mut meta = RunMeta::new("irreducible");
    meta.m = Some(ps.m as u64);
    meta.parameters = desc;
    let mut report = Report::new(meta);
    let verdict = if rep.irreducible {
        "irreducible"
    } else {
        "reducible"
    };
    report.push("verdict", true, verdict);
    for row in &rep.rows {
        let name = format!(
            "P_{{{}}}",
            row.subset
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        );
        let flag = if row.integral { " (integer)" } else { "" };
        report.push(name, true, format!("{}{}", fmt_rat(&row.value), flag));
    }
    report.push(
        "columns_zero_one",
        rep.columns_zero_one,
        "functional takes only 0/1 on the matrix columns",
    );
    report.push(
        "complement_sum",
        rep.complement_sum_ok,
        "complementary subsets sum to the last beta entry",
    );
    report.push(
        "display_form_comparison",
        true,
        if rep.forms_agree {
            "the shorthand display matches the defining functional".to_string()
        } else {
            "the shorthand display disagrees with the defining functional; \
             the functional is authoritative"
                .to_string()
        },
    );
    let beta = rep
        .beta
        .iter()
        .map(fmt_rat)
        .collect::<Vec<_>>()
        .join(", ");
    let mut plain = format!("{verdict}\nbeta: {beta}\n");
    for row in &rep.rows {
        let subset = row
            .subset
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let flag = if row.integral { " (integer)" } else { "" };
        plain.push_str(&format!("P{{{subset}}} = {}{}\n", fmt_rat(&row.value), flag));
    }
    Ok(finish(report, format, Some(plain)))
}

fn check_example_cmd(format: OutFormat) -> Result<i32, AlgError> {
    let suite = check_example_solutions()?;
    let mut meta = RunMeta::new("check-example");
    meta.m = Some(2);
    meta.parameters = "a=-1/2, b=-2, c=1/2,1/2".to_string();
    let mut report = Report::new(meta);
    report.absorb(&suite);
    Ok(finish(report, format, None))
}
