//! The `tl` command-line front end.
//!
//! Exit codes: 0 for success or a true answer, 2 for a well-formed false
//! answer, 1 for errors.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::adjunction::{eq_arrow, ArrowTerm, Level};
use crate::diagram::{
    balance, collapse_modulus, crown_pair, enumerate_jn, eq_frieze, eval_term, render, RenderFormat,
};
use crate::error::{Error, Result};
use crate::matrep::{
    check_with, equiv_j, eta, h_eval, independence_check_limited, parse_rat, rep_kn_limited, search_kernel,
    BraidParams, BraidWord, Branch, Matrix, QExt, Scalar, DEFAULT_MAX_DIM,
};
use crate::normalize::{eq_j, eq_jn, eq_k, eq_kn, eq_l, jones_forms, normalize_k, normalize_kn, normalize_l};
use crate::term::{parse_term, Term, Theory};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FALSE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "tl", version, about = "Normal forms, diagrams and matrices for Temperley-Lieb style monoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    #[value(name = "L")]
    L,
    #[value(name = "K")]
    K,
    #[value(name = "J")]
    J,
    #[value(name = "Kn")]
    Kn,
    #[value(name = "Jn")]
    Jn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Ascii,
    Svg,
    Csv,
}

#[derive(Args, Debug, Clone)]
pub struct TheoryOpts {
    /// Theory the terms are read in.
    #[arg(long, value_enum, default_value = "K")]
    pub theory: TheoryArg,
    /// Strand count for Kn and Jn.
    #[arg(long)]
    pub n: Option<usize>,
}

impl TheoryOpts {
    fn theory(&self) -> Result<Theory> {
        let need_n = || {
            self.n
                .ok_or_else(|| Error::Invalid("--n is required for Kn and Jn".into()))
        };
        Ok(match self.theory {
            TheoryArg::L => Theory::L,
            TheoryArg::K => Theory::K,
            TheoryArg::J => Theory::J,
            TheoryArg::Kn => Theory::Kn(need_n()?),
            TheoryArg::Jn => Theory::Jn(need_n()?),
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct BraidOpts {
    #[arg(long, default_value_t = 2)]
    pub p: usize,
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Rational value of alpha.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub alpha: String,
    /// Root of x^2 + px + 1 used for alpha/beta.
    #[arg(long, default_value = "+", allow_hyphen_values = true)]
    pub branch: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the normal form of a term.
    Normalize {
        #[command(flatten)]
        theory: TheoryOpts,
        term: String,
    },
    /// Decide equality of two terms, or of two arrow terms with --arrow.
    Eq {
        #[command(flatten)]
        theory: TheoryOpts,
        /// Read both sides as arrow terms in the free adjunction.
        #[arg(long)]
        arrow: bool,
        /// Compare friezes instead of normal forms.
        #[arg(long)]
        frieze: bool,
        /// With --frieze, ignore circle counts.
        #[arg(long)]
        ignore_loops: bool,
        lhs: String,
        rhs: String,
    },
    /// Draw the frieze of a term.
    Render {
        #[command(flatten)]
        theory: TheoryOpts,
        #[arg(long, value_enum, default_value = "ascii")]
        format: FormatArg,
        /// Minimum number of strands to draw.
        #[arg(long)]
        width: Option<usize>,
        term: String,
    },
    /// Print the matrix of a term: rep on (F^p)^n with --n, eta otherwise,
    /// or H_p with --arrow.
    Matrix {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value = "K")]
        theory: TheoryArg,
        #[arg(long)]
        arrow: bool,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
        term: String,
    },
    /// Check the braid relations for the representation built from diapsides.
    BraidCheck {
        #[command(flatten)]
        braid: BraidOpts,
        /// Print rho of this braid word instead.
        #[arg(long)]
        word: Option<String>,
        /// Also search braid words up to this length for kernel elements.
        #[arg(long)]
        search: Option<usize>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Count normal forms.
    Count {
        /// Circle-free Jones normal forms of K_N.
        #[arg(long, value_name = "N")]
        jones: Option<usize>,
        /// Non-crossing matchings of square type N.
        #[arg(long, value_name = "N")]
        matchings: Option<usize>,
        /// Largest N accepted.
        #[arg(long, default_value_t = 14)]
        max_n: usize,
    },
    /// Print the balance of an equation; with --collapse, the modulus of the
    /// collapsed cyclic monoid.
    Balance {
        #[command(flatten)]
        theory: TheoryOpts,
        #[arg(long)]
        collapse: bool,
        lhs: String,
        rhs: String,
    },
    /// Print the crown pair of a term's frieze.
    Crown {
        #[command(flatten)]
        theory: TheoryOpts,
        term: String,
    },
    /// Check linear independence of the matrices of the Jones normal forms.
    Independent {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_DIM)]
        max_dim: usize,
    },
    /// Decide A =J B for the matrices of two terms (eta) or arrow terms (H_p).
    EquivJ {
        #[arg(long, default_value_t = 2)]
        p: usize,
        #[arg(long, value_enum, default_value = "K")]
        theory: TheoryArg,
        #[arg(long)]
        arrow: bool,
        lhs: String,
        rhs: String,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Io<'_> {
    fn text(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(Error::Invalid("stdin can be read only once".into()));
        }
        self.stdin_used = true;
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Invalid(format!("reading stdin: {e}")))?;
        Ok(s.trim().to_string())
    }
}

enum Outcome {
    Ok(String),
    False(String),
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, S>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_ERROR
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        stdin_used: false,
    };
    match execute(cli.command, &mut io, err) {
        Ok(Outcome::Ok(s)) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_OK
        }
        Ok(Outcome::False(s)) => {
            let _ = out.write_all(s.as_bytes());
            EXIT_FALSE
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn parse_in(io: &mut Io, arg: &str, theory: Theory) -> Result<Term> {
    parse_term(&io.text(arg)?, theory)
}

fn verdict(equal: bool) -> Outcome {
    if equal {
        Outcome::Ok("equal\n".into())
    } else {
        Outcome::False("not equal\n".into())
    }
}

fn matrix_text<S: Scalar>(m: &Matrix<S>, format: Option<FormatArg>) -> Result<String> {
    match format {
        None | Some(FormatArg::Ascii) => Ok(m.to_text()),
        Some(FormatArg::Csv) => Ok(m.to_csv()),
        Some(FormatArg::Svg) => Err(Error::Invalid("matrices print as ascii or csv".into())),
    }
}

fn level(theory: Theory) -> Level {
    match theory {
        Theory::L => Level::L,
        Theory::K | Theory::Kn(_) => Level::K,
        Theory::J | Theory::Jn(_) => Level::J,
    }
}

fn execute(cmd: Command, io: &mut Io, err: &mut dyn Write) -> Result<Outcome> {
    match cmd {
        Command::Normalize { theory, term } => {
            let th = theory.theory()?;
            let t = parse_in(io, &term, th)?;
            let s = match th {
                Theory::L => normalize_l(&t)?.to_string(),
                Theory::K => normalize_k(&t).to_string(),
                Theory::J => normalize_k(&t).without_circles().to_string(),
                Theory::Kn(_) => normalize_kn(&t)?.to_string(),
                Theory::Jn(_) => normalize_kn(&t)?.without_circles().to_string(),
            };
            Ok(Outcome::Ok(format!("{s}\n")))
        }
        Command::Eq {
            theory,
            arrow,
            frieze,
            ignore_loops,
            lhs,
            rhs,
        } => {
            let th = theory.theory()?;
            if arrow {
                let f = ArrowTerm::parse(&io.text(&lhs)?)?;
                let g = ArrowTerm::parse(&io.text(&rhs)?)?;
                let v = eq_arrow(&f, &g, level(th))?;
                if let Some(r) = &v.reason {
                    let _ = writeln!(err, "note: {r}");
                }
                if v.caveat {
                    let _ = writeln!(err, "note: arrows of type 0→0 are compared through their L image");
                }
                return Ok(verdict(v.equal));
            }
            let t = parse_in(io, &lhs, th)?;
            let u = parse_in(io, &rhs, th)?;
            if frieze {
                let a = eval_term(&t)?;
                let b = eval_term(&u)?;
                return Ok(verdict(eq_frieze(&a, &b, ignore_loops)));
            }
            let equal = match th {
                Theory::L => eq_l(&t, &u)?,
                Theory::K => eq_k(&t, &u),
                Theory::J => eq_j(&t, &u),
                Theory::Kn(n) => eq_kn(&t, &u, n)?,
                Theory::Jn(n) => eq_jn(&t, &u, n)?,
            };
            Ok(verdict(equal))
        }
        Command::Render {
            theory,
            format,
            width,
            term,
        } => {
            let th = theory.theory()?;
            let t = parse_in(io, &term, th)?;
            let f = eval_term(&t)?;
            let fmt = match format {
                FormatArg::Ascii => RenderFormat::Ascii,
                FormatArg::Svg => RenderFormat::Svg,
                FormatArg::Csv => return Err(Error::Invalid("friezes render as ascii or svg".into())),
            };
            Ok(Outcome::Ok(render(&f, width.or(th.strands()), fmt)))
        }
        Command::Matrix {
            p,
            n,
            theory,
            arrow,
            format,
            max_dim,
            term,
        } => {
            let text = io.text(&term)?;
            let m = if arrow {
                h_eval(p, &ArrowTerm::parse(&text)?)?
            } else if let Some(n) = n {
                let th = match theory {
                    TheoryArg::Jn | TheoryArg::J => Theory::Jn(n),
                    _ => Theory::Kn(n),
                };
                rep_kn_limited(p, n, &parse_term(&text, th)?.gens, max_dim)?
            } else {
                let th = TheoryOpts { theory, n: None }.theory()?;
                eta(p, &parse_term(&text, th)?)?
            };
            Ok(Outcome::Ok(matrix_text(&m, format)?))
        }
        Command::BraidCheck {
            braid,
            word,
            search,
            format,
            max_dim,
        } => {
            let alpha = QExt::rational(parse_rat(&braid.alpha)?);
            let branch: Branch = braid.branch.parse()?;
            let params = BraidParams::new(braid.p, braid.n, alpha, branch)?.with_max_dim(max_dim);
            if let Some(w) = word {
                let w = BraidWord::parse(&io.text(&w)?)?;
                return Ok(Outcome::Ok(matrix_text(&params.rho(&w)?, format)?));
            }
            let report = check_with(&params)?;
            let mut s = report.to_string();
            if let Some(len) = search {
                let found = search_kernel(&params, len, 10)?;
                s.push_str(&format!(
                    "kernel search up to length {len}: {} words, {} nontrivial kernel elements\n",
                    found.words_checked,
                    found.kernel.len()
                ));
                for w in &found.kernel {
                    s.push_str(&format!("  {w}\n"));
                }
            }
            Ok(if report.all_hold() {
                Outcome::Ok(s)
            } else {
                Outcome::False(s)
            })
        }
        Command::Count { jones, matchings, max_n } => match (jones, matchings) {
            (Some(n), None) | (None, Some(n)) if n > max_n => {
                Err(Error::Limit(format!("N = {n} exceeds --max-n {max_n}")))
            }
            (Some(n), None) => Ok(Outcome::Ok(format!("{}\n", jones_forms(n).len()))),
            (None, Some(n)) => Ok(Outcome::Ok(format!("{}\n", enumerate_jn(n).len()))),
            _ => Err(Error::Invalid("give exactly one of --jones or --matchings".into())),
        },
        Command::Balance {
            theory,
            collapse,
            lhs,
            rhs,
        } => {
            let th = theory.theory()?;
            let t = parse_in(io, &lhs, th)?;
            let u = parse_in(io, &rhs, th)?;
            if collapse {
                return match collapse_modulus(&t, &u) {
                    Ok(b) => Ok(Outcome::Ok(format!("{b}\n"))),
                    Err(Error::NoCollapse) => Ok(Outcome::False("no collapse\n".into())),
                    Err(e) => Err(e),
                };
            }
            Ok(Outcome::Ok(format!("{}\n", balance(&t, &u)?)))
        }
        Command::Crown { theory, term } => {
            let th = theory.theory()?;
            let t = parse_in(io, &term, th)?;
            let (k, l) = crown_pair(&eval_term(&t)?);
            Ok(Outcome::Ok(format!("({k}, {l})\n")))
        }
        Command::Independent { p, n, max_dim } => {
            let (ok, r) = independence_check_limited(p, n, max_dim)?;
            let c = jones_forms(n).len();
            let s = format!("rank {r} of {c}\n");
            Ok(if ok {
                Outcome::Ok(format!("independent, {s}"))
            } else {
                Outcome::False(format!("dependent, {s}"))
            })
        }
        Command::EquivJ {
            p,
            theory,
            arrow,
            lhs,
            rhs,
        } => {
            let (a, b) = if arrow {
                (
                    h_eval(p, &ArrowTerm::parse(&io.text(&lhs)?)?)?,
                    h_eval(p, &ArrowTerm::parse(&io.text(&rhs)?)?)?,
                )
            } else {
                let th = TheoryOpts { theory, n: None }.theory()?;
                (eta(p, &parse_in(io, &lhs, th)?)?, eta(p, &parse_in(io, &rhs, th)?)?)
            };
            Ok(verdict(equiv_j(p, &a, &b)?))
        }
    }
}
