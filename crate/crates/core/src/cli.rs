//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a mathematical precondition fails,
//! 2 on usage or parse errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactalg::{fmt_q, multiplicity_profile, QuadExt, Scalar};
use crate::gitforms::{enumerate_strata, git_classify};
use crate::toriclat::{analyze_y, moduli_dims};
use crate::wps::{
    analyze, lct_cusp, normalize, parse_binary_form, parse_equation, wall, Affine, WallVerdict,
};

#[derive(Parser, Debug)]
#[command(
    name = "kstab",
    version,
    about = "Exact K-stability checks for degree-2a hypersurfaces in P(1,1,a,a)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct EqArgs {
    /// Weight of z and w.
    #[arg(long)]
    a: usize,
    /// Polynomial in x, y, z, w.
    #[arg(long = "eq", allow_hyphen_values = true)]
    eq: String,
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// K-stability verdict for an equation of degree 2a.
    Check {
        #[command(flatten)]
        args: EqArgs,
        /// Re-expand the normalization transform and fail on mismatch.
        #[arg(long)]
        self_check: bool,
    },
    /// Normal form zw + g~(x, y) and the substitution reaching it.
    Normalize {
        #[command(flatten)]
        args: EqArgs,
    },
    /// GIT class of a binary form of degree 2a.
    Git {
        #[arg(long)]
        a: usize,
        #[arg(long, allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        json: bool,
    },
    /// Report on the toric surface zw = x^a y^a.
    Toric {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        json: bool,
    },
    /// Deformation and moduli dimension counts.
    Moduli {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        json: bool,
    },
    /// 1/2 + 1/k, optionally compared with the wall (a + 2)/2a.
    Lct {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// All multiplicity profiles of degree 2a with their GIT class.
    Strata {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        json: bool,
    },
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn err(e: &Error) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: if e.is_input_error() { 2 } else { 1 },
        }
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run(args: &[String]) -> Output {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(e) => Output::err(&e),
    }
}

fn render(json: bool, value: Value, text: String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn dispatch(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Check { args, self_check } => check(&args, self_check),
        Command::Normalize { args } => normalize_cmd(&args),
        Command::Git { a, form, json } => git(a, &form, json),
        Command::Toric { a, json } => {
            let r = analyze_y(a)?;
            Ok(Output::ok(render(json, r.to_json(), r.to_text())))
        }
        Command::Moduli { a, json } => moduli(a, json),
        Command::Lct { k, a, json } => lct(k, a, json),
        Command::Strata { a, json } => strata(a, json),
    }
}

fn check(args: &EqArgs, self_check: bool) -> Result<Output> {
    let eq = parse_equation(&args.eq, args.a)?;
    let v = analyze(&eq);
    let mut checked = None;
    if self_check {
        if let Some(nf) = &v.normal_form {
            checked = Some(nf.verify(&eq)?);
        }
    }
    let mut value = v.to_json();
    if let Some(l) = &checked {
        value["self_check"] = json!({ "ok": true, "scalar": l.to_string() });
    }
    let mut s = String::new();
    let _ = writeln!(s, "equation: {eq} = 0");
    let _ = writeln!(s, "rank_q: {}", v.rank_q);
    if let Some(nf) = &v.normal_form {
        let _ = writeln!(s, "normal form: zw + ({}) = 0", nf.gtilde);
        let _ = writeln!(s, "field: {}", field_name(nf.field_discriminant.as_ref()));
    }
    if let Some(p) = &v.gtilde_profile {
        let _ = writeln!(s, "gtilde profile: {p}");
    }
    if let Some(c) = v.git_class {
        let _ = writeln!(s, "git class: {c}");
    }
    let _ = writeln!(s, "k class: {}", v.k_class);
    let _ = writeln!(s, "quasi-smooth: {}", v.quasi_smooth);
    if let Some(w) = &v.wall_report {
        let _ = writeln!(
            s,
            "lct bound: {} (k = {}), wall: {}, {}",
            fmt_q(&w.lct_bound),
            w.k,
            fmt_q(&w.wall),
            w.verdict
        );
    }
    for n in &v.notes {
        let _ = writeln!(s, "note: {n}");
    }
    if let Some(l) = &checked {
        let _ = writeln!(s, "self-check: ok (scalar {l})");
    }
    Ok(Output::ok(render(args.json, value, s)))
}

fn field_name(d: Option<&crate::exactalg::Rational>) -> String {
    match d {
        None => "Q".to_string(),
        Some(d) => format!("Q(sqrt({}))", fmt_q(d)),
    }
}

fn affine_text(var: &str, aff: &Affine<QuadExt>) -> String {
    let coeff = |c: &QuadExt, v: &str| -> Option<String> {
        if c.is_zero() {
            None
        } else if c.is_one() {
            Some(v.to_string())
        } else {
            Some(format!("{c}*{v}"))
        }
    };
    let mut parts: Vec<String> = [coeff(&aff.cz, "z"), coeff(&aff.cw, "w")]
        .into_iter()
        .flatten()
        .collect();
    if !aff.shift.is_zero() {
        parts.push(format!("({})", aff.shift));
    }
    format!("{var} -> {}", parts.join(" + "))
}

fn normalize_cmd(args: &EqArgs) -> Result<Output> {
    let eq = parse_equation(&args.eq, args.a)?;
    let nf = normalize(&eq)?;
    let t = &nf.transform;
    let value = json!({
        "a": nf.a,
        "rank_q": nf.rank_q,
        "field_discriminant": nf.field_discriminant.as_ref().map(fmt_q),
        "gtilde": nf.gtilde.to_string(),
        "transform": {
            "z": [t.z_image.cz.to_string(), t.z_image.cw.to_string(), t.z_image.shift.to_string()],
            "w": [t.w_image.cz.to_string(), t.w_image.cw.to_string(), t.w_image.shift.to_string()],
        },
    });
    let mut s = String::new();
    let _ = writeln!(s, "normal form: zw + ({}) = 0", nf.gtilde);
    let _ = writeln!(s, "field: {}", field_name(nf.field_discriminant.as_ref()));
    let _ = writeln!(s, "substitution into the normal form:");
    let _ = writeln!(s, "  {}", affine_text("z", &t.z_image));
    let _ = writeln!(s, "  {}", affine_text("w", &t.w_image));
    Ok(Output::ok(render(args.json, value, s)))
}

fn git(a: usize, form: &str, json: bool) -> Result<Output> {
    if a == 0 {
        return Err(Error::InvalidParameter {
            what: "a",
            requirement: "a >= 1",
            value: a.to_string(),
        });
    }
    let g = parse_binary_form(form, 2 * a)?;
    let class = git_classify(&g, a)?;
    let profile = if g.is_zero() {
        None
    } else {
        Some(multiplicity_profile(&g)?)
    };
    let value = json!({
        "a": a,
        "form": g.to_string(),
        "profile": profile.as_ref().map(|p| p.entries().iter().map(|(m, c)| json!([m, c])).collect::<Vec<_>>()),
        "git_class": class.name(),
    });
    let mut s = String::new();
    let _ = writeln!(s, "form: {g}");
    if let Some(p) = &profile {
        let _ = writeln!(s, "profile: {p}");
    }
    let _ = writeln!(s, "git class: {class}");
    Ok(Output::ok(render(json, value, s)))
}

fn moduli(a: u64, json: bool) -> Result<Output> {
    let d = moduli_dims(a)?;
    let opt = |x: Option<u64>| x.map_or(Value::Null, Value::from);
    let value = json!({
        "a": a,
        "t1_dim": opt(d.t1_dim),
        "torus_quotient_dim": opt(d.torus_quotient_dim),
        "git_dim": d.git_dim,
        "dims_agree": d.dims_agree(),
    });
    let show = |x: Option<u64>| x.map_or("unsupported (needs a = 3 or a >= 5)".to_string(), |x| x.to_string());
    let mut s = String::new();
    let _ = writeln!(s, "t1_dim: {}", show(d.t1_dim));
    let _ = writeln!(s, "torus_quotient_dim: {}", show(d.torus_quotient_dim));
    let _ = writeln!(s, "git_dim: {}", d.git_dim);
    Ok(Output::ok(render(json, value, s)))
}

fn lct(k: u64, a: Option<u64>, json: bool) -> Result<Output> {
    let c = lct_cusp(k)?;
    let mut value = json!({ "k": k, "lct": fmt_q(&c) });
    let mut s = format!("{}\n", fmt_q(&c));
    if let Some(a) = a {
        if a < 2 {
            return Err(Error::InvalidParameter {
                what: "a",
                requirement: "a >= 2",
                value: a.to_string(),
            });
        }
        let w = wall(a);
        let cmp = WallVerdict::compare(&c, &w).name();
        value["wall"] = fmt_q(&w).into();
        value["wall_verdict"] = cmp.into();
        let _ = writeln!(s, "wall: {}, {cmp}", fmt_q(&w));
    }
    Ok(Output::ok(render(json, value, s)))
}

fn strata(a: usize, json: bool) -> Result<Output> {
    let strata = enumerate_strata(a)?;
    let value = Value::Array(
        strata
            .iter()
            .map(|st| {
                json!({
                    "partition": st.partition,
                    "profile": st.profile.entries().iter().map(|(m, c)| json!([m, c])).collect::<Vec<_>>(),
                    "git_class": st.class.name(),
                })
            })
            .collect(),
    );
    let mut s = String::new();
    for st in &strata {
        let _ = writeln!(s, "{} {}", st.profile, st.class);
    }
    Ok(Output::ok(render(json, value, s)))
}
