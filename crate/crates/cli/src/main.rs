//! Command-line driver for the truncated unitary ring.
//!
//! Functions are read and written in the library's text format. Every verb
//! needs an explicit `--bound`. Exit status: 0 on success, 1 when the library
//! reports a domain error, 2 on usage errors, unparsable input, or an input
//! whose header disagrees with `--bound`/`--field`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use unitary_core::algebra::{text, MAX_BOUND};
use unitary_core::factorization::{atom_search, is_associate, verify_factorization};
use unitary_core::structure::{
    annihilates_squarefree_block, apply_endomorphism, canonical_decompose, demo_not_finitely_generated,
    echelon_basis, express_in_basis, filtration_report, in_ik, nilpotency_index, regularity_kernel, retract_q,
    retract_sqf, BasisExpansion, BasisFamily, ExponentSet, GammaTable, NilpotencyIndex,
};
use unitary_core::{ArithFunc, Coefficient, FieldKind, GaussianRational, Rational};

#[derive(Parser, Debug)]
#[command(name = "unitary", version, about = "Exact arithmetic in the truncated ring of arithmetical functions under unitary convolution")]
struct Cli {
    /// Truncation bound N; required by every verb.
    #[arg(long, global = true)]
    bound: Option<usize>,

    /// Coefficient field.
    #[arg(long, global = true, value_enum, default_value_t = Field::Rational)]
    field: Field,

    /// Write output to this file instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Field {
    Rational,
    Gaussian,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Unitary convolution of two functions.
    Conv { a: PathBuf, b: PathBuf },
    /// Dirichlet convolution of two functions.
    Dconv { a: PathBuf, b: PathBuf },
    /// Inverse of a unit.
    Inv { a: PathBuf },
    /// Unitary power f^n.
    Pow { a: PathBuf, n: u32 },
    /// The unitary Möbius function.
    Mobius,
    /// The constant function 1.
    One,
    /// The indicator e_k.
    E { k: usize },
    /// Norm 1/order (0 for the zero function).
    Norm { a: PathBuf },
    /// Minimum of omega over the support.
    Degree { a: PathBuf },
    /// Canonical decomposition: the constant term, then one block per class 1..=d.
    Decompose { a: PathBuf },
    /// Filtration degree, optionally flagging support beyond a leading prime.
    Filtration {
        a: PathBuf,
        #[arg(long)]
        threshold: Option<usize>,
    },
    /// Smallest n with f^n = 0.
    Nilindex {
        a: PathBuf,
        #[arg(long, default_value_t = 64)]
        max: u32,
    },
    /// Restriction to squarefree indices.
    RetractSqf { a: PathBuf },
    /// Restriction to indices whose exponents lie in Q (`all`, `odd`, or `1,3,...`).
    RetractQ {
        a: PathBuf,
        #[arg(long)]
        q: ExponentSet,
    },
    /// Membership in I_k.
    Ik {
        a: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Whether f annihilates e_{p1...pk}.
    AnnCheck {
        a: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Apply an endomorphism given by a preset or a table file.
    Endo {
        a: PathBuf,
        #[arg(long, value_enum, conflicts_with = "table", required_unless_present = "table")]
        preset: Option<Preset>,
        /// Blocks each preceded by a `# gamma <i> <j>` line.
        #[arg(long)]
        table: Option<PathBuf>,
    },
    /// Echelon basis of the generators in a block file.
    Basis { generators: PathBuf },
    /// Expand f against a basis block file.
    Express { a: PathBuf, basis: PathBuf },
    /// Kernel of g -> f ⊕ g over g supported on 1..=m.
    Kernel {
        a: PathBuf,
        #[arg(long)]
        m: usize,
    },
    /// Check target = product of factors.
    VerifyFactor {
        target: PathBuf,
        #[arg(required = true)]
        factors: Vec<PathBuf>,
    },
    /// Bounded search for two-factor factorizations.
    Search {
        a: PathBuf,
        #[arg(long)]
        cap: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,-1")]
        coeffs: Vec<String>,
    },
    /// Whether f and g are associates.
    Associate { a: PathBuf, b: PathBuf },
    /// Transcript showing e_L is outside the ideal generated by e_2..e_cap.
    DemoNfg {
        #[arg(long)]
        prime: usize,
        #[arg(long)]
        cap: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Preset {
    Identity,
    Doubling,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<unitary_core::Error> for Failure {
    fn from(e: unitary_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome<T> = Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn check_header(path: &Path, contents: &str, bound: usize, expected: FieldKind) -> Outcome<()> {
    let (b, field) = text::peek_header(contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if b != bound {
        return Err(Failure::Usage(format!("{}: bound is {b}, expected {bound}", path.display())));
    }
    if field != expected {
        return Err(Failure::Usage(format!("{}: field is {field}, expected {expected}", path.display())));
    }
    Ok(())
}

fn load<C: Coefficient>(path: &Path, bound: usize) -> Outcome<ArithFunc<C>> {
    let contents = read(path)?;
    check_header(path, &contents, bound, C::FIELD)?;
    text::parse(&contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_blocks<C: Coefficient>(path: &Path, bound: usize) -> Outcome<Vec<ArithFunc<C>>> {
    let contents = read(path)?;
    let blocks: Vec<ArithFunc<C>> =
        text::parse_blocks(&contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    if let Some(f) = blocks.iter().find(|f| f.bound() != bound) {
        return Err(Failure::Usage(format!("{}: bound is {}, expected {bound}", path.display(), f.bound())));
    }
    Ok(blocks)
}

fn load_table<C: Coefficient>(path: &Path, bound: usize) -> Outcome<GammaTable<C>> {
    let contents = read(path)?;
    let mut images = BTreeMap::new();
    for chunk in contents.split("\n\n").filter(|c| !c.trim().is_empty()) {
        let key = chunk
            .lines()
            .find_map(|l| {
                let mut it = l.trim().strip_prefix('#')?.split_whitespace();
                (it.next()? == "gamma").then_some(())?;
                let i: usize = it.next()?.parse().ok()?;
                let j: u32 = it.next()?.parse().ok()?;
                Some((i, j))
            })
            .ok_or_else(|| Failure::Usage(format!("{}: block without `# gamma <i> <j>` line", path.display())))?;
        let img: ArithFunc<C> = text::parse(chunk).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        if img.bound() != bound {
            return Err(Failure::Usage(format!("{}: bound is {}, expected {bound}", path.display(), img.bound())));
        }
        if images.insert(key, img).is_some() {
            return Err(Failure::Usage(format!("{}: duplicate entry gamma {} {}", path.display(), key.0, key.1)));
        }
    }
    Ok(GammaTable::new(bound, images)?)
}

fn run<C: Coefficient>(verb: &Verb, bound: usize) -> Outcome<String> {
    let f = |p: &PathBuf| load::<C>(p, bound);
    let out = match verb {
        Verb::Conv { a, b } => text::to_text(&f(a)?.uconv(&f(b)?)?),
        Verb::Dconv { a, b } => text::to_text(&f(a)?.dconv(&f(b)?)?),
        Verb::Inv { a } => text::to_text(&f(a)?.inverse()?),
        Verb::Pow { a, n } => text::to_text(&f(a)?.upow(*n)),
        Verb::Mobius => text::to_text(&ArithFunc::<C>::mobius_star(bound)),
        Verb::One => text::to_text(&ArithFunc::<C>::one(bound)),
        Verb::E { k } => text::to_text(&ArithFunc::<C>::e(*k, bound)?),
        Verb::Norm { a } => format!("{}\n", f(a)?.norm()),
        Verb::Degree { a } => format!("{}\n", f(a)?.degree()),
        Verb::Decompose { a } => {
            let d = canonical_decompose(&f(a)?);
            let top = d.parts.keys().next_back().copied().unwrap_or(0);
            let mut blocks = vec![ArithFunc::identity(bound).scale(&d.constant_term)];
            blocks.extend((1..=top).map(|i| d.part(i)));
            text::blocks_to_text(&blocks)
        }
        Verb::Filtration { a, threshold } => {
            let g = f(a)?;
            let report = filtration_report(&g, threshold.unwrap_or(usize::MAX));
            match threshold {
                Some(t) => format!("degree: {}\nbeyond {t}: {}\n", report.degree, report.beyond_threshold),
                None => format!("degree: {}\n", report.degree),
            }
        }
        Verb::Nilindex { a, max } => match nilpotency_index(&f(a)?, *max) {
            NilpotencyIndex::Index(n) => format!("index: {n}\n"),
            NilpotencyIndex::NotFoundWithin(m) => format!("not nilpotent within {m}\n"),
        },
        Verb::RetractSqf { a } => text::to_text(&retract_sqf(&f(a)?)),
        Verb::RetractQ { a, q } => text::to_text(&retract_q(&f(a)?, q)),
        Verb::Ik { a, k } => format!("{}\n", in_ik(&f(a)?, *k)),
        Verb::AnnCheck { a, k } => format!("{}\n", annihilates_squarefree_block(&f(a)?, *k)?),
        Verb::Endo { a, preset, table } => {
            let g = f(a)?;
            let table = match (preset, table) {
                (_, Some(path)) => load_table::<C>(path, bound)?,
                (Some(p), None) => {
                    // prime powers in the support never exceed its largest index
                    let limit = g.support().last().copied().unwrap_or(1);
                    match p {
                        Preset::Identity => GammaTable::identity(bound, limit),
                        Preset::Doubling => GammaTable::exponent_doubling(bound, limit),
                    }
                }
                (None, None) => unreachable!("clap requires one of --preset/--table"),
            };
            text::to_text(&apply_endomorphism(&g, &table)?)
        }
        Verb::Basis { generators } => {
            let basis = echelon_basis(&load_blocks::<C>(generators, bound)?)?;
            text::blocks_to_text(basis.iter().map(|(_, g)| g))
        }
        Verb::Express { a, basis } => {
            let g = f(a)?;
            let family = BasisFamily::new(
                load_blocks::<C>(basis, bound)?
                    .into_iter()
                    .map(|b| (b.order().finite().unwrap_or(0), b))
                    .collect(),
            )?;
            let terms_text = |terms: &[(usize, C)]| {
                terms.iter().map(|(k, c)| format!("g{k} {}\n", c.to_text())).collect::<String>()
            };
            match express_in_basis(&g, &family)? {
                BasisExpansion::Combination(terms) => format!("combination\n{}", terms_text(&terms)),
                BasisExpansion::ResidueNonzero { terms, residue } => {
                    format!("residue nonzero\n{}\n{}", terms_text(&terms), text::to_text(&residue))
                }
            }
        }
        Verb::Kernel { a, m } => text::blocks_to_text(&regularity_kernel(&f(a)?, *m)?),
        Verb::VerifyFactor { target, factors } => {
            let t = f(target)?;
            let fs = factors.iter().map(f).collect::<Outcome<Vec<_>>>()?;
            verify_factorization(&t, &fs)?.to_text()
        }
        Verb::Search { a, cap, coeffs } => {
            let coeffs = coeffs
                .iter()
                .map(|s| C::parse_text(s.trim()).ok_or_else(|| Failure::Usage(format!("bad coefficient `{s}`"))))
                .collect::<Outcome<Vec<C>>>()?;
            let found = atom_search(&f(a)?, *cap, &coeffs)?;
            if found.is_empty() {
                "# no factorization found within bounds\n".to_string()
            } else {
                found.iter().map(|c| c.to_text()).collect::<Vec<_>>().join("\n")
            }
        }
        Verb::Associate { a, b } => format!("{}\n", is_associate(&f(a)?, &f(b)?)?),
        Verb::DemoNfg { prime, cap } => {
            if *prime > bound {
                return Err(Failure::Usage(format!("e_{prime} does not exist at bound {bound}")));
            }
            demo_not_finitely_generated(*prime, *cap)?.to_string()
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.bound {
        None => Err(Failure::Usage("--bound is required".into())),
        Some(b) if b == 0 || b > MAX_BOUND => Err(Failure::Usage(format!("--bound must lie in 1..={MAX_BOUND}"))),
        Some(b) => match cli.field {
            Field::Rational => run::<Rational>(&cli.verb, b),
            Field::Gaussian => run::<GaussianRational>(&cli.verb, b),
        },
    };
    let result = result.and_then(|out| match &cli.output {
        Some(path) => fs::write(path, out).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}
