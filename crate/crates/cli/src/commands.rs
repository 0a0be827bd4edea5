use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use gauss_epple::analogue::{analogue_space, PresentationDoc};
use gauss_epple::artin::{artin_cocycle_fbar, verify_braid_relations, CoxeterElement, RootSystem, RootType};
use gauss_epple::ge::{construct_braid, ge_image, in_kernel_ge, in_kernel_symge, in_kernel_wp, symge_image};
use gauss_epple::montecarlo::walk_csv;
use gauss_epple::sge::{cocycle_fbar, in_kernel_sge, sge_image};
use gauss_epple::{BraidWord, Error, Int, Permutation};

use crate::pretty;

#[derive(Parser, Debug)]
#[command(name = "ge", version, about = "Gauss-Epple homomorphisms of braid and Artin groups")]
pub struct Cli {
    /// Aligned text output instead of JSON.
    #[arg(long, global = true)]
    pub pretty: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Image of a braid word under one homomorphism.
    Eval {
        #[arg(long)]
        n: usize,
        /// Letters such as "1 -2 1^3"; empty for the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = Hom::Ge)]
        hom: Hom,
    },
    /// Whether a braid word lies in a kernel.
    Kernel {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = KernelHom::Ge)]
        hom: KernelHom,
    },
    /// A braid word with prescribed permutation and linking vector.
    Construct {
        /// One-line images "3,1,2" or cycles "(1,3,2)".
        #[arg(long)]
        pi: String,
        /// Linking vector, e.g. "1,-1,0".
        #[arg(long, allow_hyphen_values = true)]
        ell: String,
    },
    /// The cocycle of a permutation, or of a Coxeter word for a root system.
    Cocycle {
        #[arg(long, conflicts_with_all = ["kind", "coxeter_word"])]
        pi: Option<String>,
        /// Degree, needed only for cycle notation.
        #[arg(long, requires = "pi")]
        n: Option<usize>,
        /// Root system type such as A3, B3, D4, G2, I2(5).
        #[arg(long = "type", requires = "coxeter_word")]
        kind: Option<String>,
        /// Simple reflections, e.g. "1 2 1".
        #[arg(long, requires = "kind")]
        coxeter_word: Option<String>,
    },
    /// Check every braid relation of an Artin group under its homomorphism.
    ArtinVerify {
        #[arg(long = "type")]
        kind: String,
    },
    /// Dimension and basis of linking-vector analogues for a presentation file.
    Analogue {
        #[arg(long)]
        presentation: PathBuf,
    },
    /// Kernel return statistics of random words as CSV.
    Walk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long, default_value_t = 100_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hom {
    Ge,
    Symge,
    Sge,
    Wp,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum KernelHom {
    Ge,
    Symge,
    Sge,
    Wp,
    All,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

#[derive(Serialize)]
pub struct WpImage {
    pub pi: Permutation,
    pub writhe: i64,
}

#[derive(Serialize)]
pub struct KernelAnswer {
    pub in_kernel: bool,
}

#[derive(Serialize)]
pub struct KernelTable {
    pub ge: bool,
    pub symge: bool,
    pub sge: bool,
    pub wp: bool,
}

#[derive(Serialize)]
pub struct Constructed {
    pub n: usize,
    pub letters: Vec<i32>,
    pub word: String,
}

#[derive(Serialize)]
pub struct BraidCocycle {
    pub pi: Permutation,
    pub fbar: Vec<Vec<Int>>,
}

#[derive(Serialize)]
pub struct ArtinCocycle {
    #[serde(rename = "type")]
    pub kind: String,
    pub c: CoxeterElement,
    pub fbar: gauss_epple::RootVector,
    pub legend: Vec<String>,
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("outputs serialize");
    s.push('\n');
    s
}

fn parse_ints(text: &str) -> Result<Vec<Int>, Error> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(position, t)| {
            t.parse::<Int>().map_err(|_| Error::Parse {
                position,
                token: t.to_string(),
                reason: "expected an integer".into(),
            })
        })
        .collect()
}

fn parse_coxeter_word(text: &str, rank: usize) -> Result<Vec<usize>, Error> {
    parse_ints(text)?
        .into_iter()
        .enumerate()
        .map(|(position, a)| {
            if a < 1 || a as usize > rank {
                Err(Error::Range { position, index: a, max: rank })
            } else {
                Ok(a as usize)
            }
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<String, CliError> {
    let pretty = cli.pretty;
    Ok(match &cli.command {
        Command::Eval { n, word, hom } => {
            let w = BraidWord::parse(word, *n)?;
            match hom {
                Hom::Ge | Hom::Symge => {
                    let g = if *hom == Hom::Ge { ge_image::<Int>(&w) } else { symge_image::<Int>(&w) };
                    if pretty {
                        pretty::ge(&g)
                    } else {
                        json(&g)
                    }
                }
                Hom::Sge => {
                    let g = sge_image::<Int>(&w);
                    if pretty {
                        pretty::sge(&g)
                    } else {
                        json(&g)
                    }
                }
                Hom::Wp => {
                    let out = WpImage {
                        pi: w.permutation(),
                        writhe: w.writhe(),
                    };
                    if pretty {
                        pretty::wp(&out.pi, out.writhe)
                    } else {
                        json(&out)
                    }
                }
            }
        }
        Command::Kernel { n, word, hom } => {
            let w = BraidWord::parse(word, *n)?;
            let table = KernelTable {
                ge: in_kernel_ge(&w),
                symge: in_kernel_symge(&w),
                sge: in_kernel_sge(&w),
                wp: in_kernel_wp(&w),
            };
            let single = match hom {
                KernelHom::Ge => Some(table.ge),
                KernelHom::Symge => Some(table.symge),
                KernelHom::Sge => Some(table.sge),
                KernelHom::Wp => Some(table.wp),
                KernelHom::All => None,
            };
            match (single, pretty) {
                (Some(b), false) => json(&KernelAnswer { in_kernel: b }),
                (Some(b), true) => format!("in_kernel: {b}\n"),
                (None, false) => json(&table),
                (None, true) => pretty::kernel_table(&table),
            }
        }
        Command::Construct { pi, ell } => {
            let ell = parse_ints(ell)?;
            let pi = Permutation::parse(pi, Some(ell.len()))?;
            let w = construct_braid(&pi, &ell)?;
            let out = Constructed {
                n: w.n(),
                letters: w.letters().to_vec(),
                word: w.format(),
            };
            if pretty {
                format!("{}\n", if out.word.is_empty() { "(identity)" } else { &out.word })
            } else {
                json(&out)
            }
        }
        Command::Cocycle { pi, n, kind, coxeter_word } => match (pi, kind, coxeter_word) {
            (Some(pi), None, None) => {
                let pi = Permutation::parse(pi, *n)?;
                let f = cocycle_fbar::<Int>(&pi);
                let out = BraidCocycle {
                    pi,
                    fbar: f.matrix().rows(),
                };
                if pretty {
                    pretty::braid_cocycle(&out.pi, &out.fbar)
                } else {
                    json(&out)
                }
            }
            (None, Some(kind), Some(word)) => {
                let rs = RootSystem::build(kind.parse::<RootType>()?)?;
                let word = parse_coxeter_word(word, rs.rank())?;
                let c = CoxeterElement::from_word(&rs, &word);
                let out = ArtinCocycle {
                    kind: rs.kind().to_string(),
                    fbar: artin_cocycle_fbar(&c, &rs),
                    c,
                    legend: rs.legend().to_vec(),
                };
                if pretty {
                    pretty::artin_cocycle(&out.fbar, &rs)
                } else {
                    json(&out)
                }
            }
            _ => {
                return Err(CliError::Usage(
                    "cocycle needs either --pi or both --type and --coxeter-word".into(),
                ))
            }
        },
        Command::ArtinVerify { kind } => {
            let rs = RootSystem::build(kind.parse::<RootType>()?)?;
            let report = verify_braid_relations(&rs);
            if pretty {
                pretty::relations(&report)
            } else {
                json(&report)
            }
        }
        Command::Analogue { presentation } => {
            let text = std::fs::read_to_string(presentation)
                .map_err(|e| CliError::Io(format!("{}: {e}", presentation.display())))?;
            let (pres, rep) = PresentationDoc::from_json(&text)?.build()?;
            let space = analogue_space(&pres, &rep);
            if pretty {
                pretty::analogue(&space, &pres, &rep)
            } else {
                json(&space)
            }
        }
        Command::Walk {
            n,
            max_length,
            samples,
            seed,
        } => walk_csv(*n, *max_length, *samples, *seed)?,
    })
}
