//! `latmu`: build lattice families, compute Möbius functions and characteristic
//! polynomials, and check structural properties from the command line.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use latmu_core::families::{dominance_interval, dominance_mobius, FamilySpec, IntegerPartition};
use latmu_core::lattice::io::{parse_lattice, write_lattice};
use latmu_core::mobius::{
    enumerate_nbb_bases, mobius_coreless, mobius_crosscut, mobius_nbb, mobius_nbc_generalized,
    mobius_recursive, parse_atom_order, search_perfect_order, selector_from_order,
    write_atom_order, write_mobius_tsv,
};
use latmu_core::structure::{
    check_property, find_left_modular_chain, first_maximal_chain, format_factored,
    is_left_modular_element, is_ll, ll_factorization_check, ll_witness_for_chain, write_report,
    characteristic_polynomial, MaximalChain, Property,
};
use latmu_core::{AtomOrder, Error, FiniteLattice, MobiusVector};

#[derive(Parser)]
#[command(name = "latmu", version, about = "Möbius functions and structure of finite lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a family's lattice file.
    Build {
        family: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write the family's canonical atom order.
        #[arg(long)]
        order_out: Option<PathBuf>,
    },
    /// Möbius function of every element as TSV.
    Mobius {
        source: String,
        #[arg(long, value_enum, default_value_t = Method::Recursive)]
        method: Method,
        #[command(flatten)]
        order: OrderArgs,
        /// Compare with the recursive values; exit 3 on disagreement.
        #[arg(long)]
        verify: bool,
    },
    /// NBB bases of one element.
    Bases {
        source: String,
        #[arg(long)]
        element: String,
        #[command(flatten)]
        order: OrderArgs,
    },
    /// Characteristic polynomial, factored when the chain is left-modular and
    /// satisfies the level condition.
    Charpoly {
        source: String,
        /// `auto`, or chain elements separated by `<`.
        #[arg(long, default_value = "auto")]
        chain: String,
    },
    /// Structural property report as TSV.
    Check {
        source: String,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        left_modular: bool,
        #[arg(long)]
        level: bool,
        #[arg(long)]
        ll: bool,
        #[arg(long)]
        semimodular: bool,
        #[arg(long)]
        geometric: bool,
        #[arg(long)]
        supersolvable: bool,
    },
    /// Search for an atom order whose NBB bases realize |μ| with a single sign.
    PerfectOrder {
        source: String,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// μ(β, λ) in the dominance order from the closed form.
    DominanceMu {
        beta: String,
        lambda: String,
        /// Compare with recursion on the interval; exit 3 on disagreement.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursive,
    Crosscut,
    Nbb,
    Coreless,
    Nbc,
}

#[derive(Args)]
struct OrderArgs {
    /// Atom order file (`rel a b` lines).
    #[arg(long, conflicts_with = "canonical")]
    order: Option<PathBuf>,
    /// Use the family's distinguished atom order.
    #[arg(long)]
    canonical: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MobiusInvariant(_) => 3,
            Error::UnknownFamily(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn bug(message: String) -> Failure {
    Failure { code: 3, message }
}

/// A lattice with the order `--canonical` selects.
struct Source {
    lattice: FiniteLattice,
    canonical: AtomOrder,
}

fn load_source(text: &str) -> Result<Source, Failure> {
    let path = Path::new(text);
    if path.is_file() {
        let lattice = parse_lattice(&fs::read_to_string(path)?)?;
        let canonical = AtomOrder::incomparability(&lattice);
        return Ok(Source { lattice, canonical });
    }
    let built = text.parse::<FamilySpec>()?.build()?;
    Ok(Source {
        lattice: built.lattice,
        canonical: built.canonical,
    })
}

fn resolve_order(src: &Source, args: &OrderArgs, default: impl FnOnce(&FiniteLattice) -> Result<AtomOrder, Error>) -> Result<AtomOrder, Failure> {
    if let Some(p) = &args.order {
        Ok(parse_atom_order(&fs::read_to_string(p)?, &src.lattice)?)
    } else if args.canonical {
        Ok(src.canonical.clone())
    } else {
        Ok(default(&src.lattice)?)
    }
}

fn element(l: &FiniteLattice, text: &str) -> Result<usize, Failure> {
    l.find_element(text).ok_or_else(|| Failure {
        code: 1,
        message: format!("no element `{text}` in the lattice"),
    })
}

fn set_label(l: &FiniteLattice, atoms: &[usize]) -> String {
    let parts: Vec<String> = atoms.iter().map(|&a| l.label(a)).collect();
    format!("{{{}}}", parts.join(" "))
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    match cli.command {
        Command::Build { family, out: dest, order_out } => {
            let built = family.parse::<FamilySpec>()?.build()?;
            let text = write_lattice(&built.lattice);
            match dest {
                Some(p) => fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            if let Some(p) = order_out {
                fs::write(p, write_atom_order(&built.canonical))?;
            }
        }
        Command::Mobius { source, method, order, verify } => {
            let src = load_source(&source)?;
            let l = &src.lattice;
            let incomparable = |l: &FiniteLattice| Ok(AtomOrder::incomparability(l));
            let mu: MobiusVector = match method {
                Method::Recursive => mobius_recursive(l),
                Method::Crosscut => mobius_crosscut(l)?,
                Method::Nbb => mobius_nbb(l, &resolve_order(&src, &order, incomparable)?)?,
                Method::Coreless => {
                    let o = resolve_order(&src, &order, incomparable)?;
                    mobius_coreless(l, &selector_from_order(l, &o)?)?
                }
                Method::Nbc => {
                    let o = resolve_order(&src, &order, AtomOrder::total_by_position)?;
                    mobius_nbc_generalized(l, &o)?
                }
            };
            if verify {
                let oracle = mobius_recursive(l);
                if let Some(x) = (0..l.size()).find(|&x| mu.get(x) != oracle.get(x)) {
                    return Err(bug(format!(
                        "method disagrees with recursion at {}: {} vs {}",
                        l.label(x),
                        mu.get(x),
                        oracle.get(x)
                    )));
                }
            }
            out.write_all(write_mobius_tsv(l, &mu).as_bytes())?;
        }
        Command::Bases { source, element: e, order } => {
            let src = load_source(&source)?;
            let l = &src.lattice;
            let x = element(l, &e)?;
            let o = resolve_order(&src, &order, |l| Ok(AtomOrder::incomparability(l)))?;
            let bases = enumerate_nbb_bases(l, &o, x)?;
            writeln!(out, "# {} NBB bases of {}", bases.len(), l.label(x))?;
            for b in bases {
                let atoms: Vec<usize> = b.iter().map(|p| l.atoms()[p]).collect();
                writeln!(out, "{}", set_label(l, &atoms))?;
            }
        }
        Command::Charpoly { source, chain } => {
            let src = load_source(&source)?;
            let l = &src.lattice;
            let (delta, witness) = if chain == "auto" {
                match is_ll(l) {
                    Some(w) => (w.chain().clone(), Some(w)),
                    None => (find_left_modular_chain(l).unwrap_or_else(|| first_maximal_chain(l)), None),
                }
            } else {
                let c = MaximalChain::parse(l, &chain)?;
                let w = ll_witness_for_chain(l, &c);
                (c, w)
            };
            match witness {
                Some(w) => {
                    let f = ll_factorization_check(l, &delta, Some(&w))?;
                    if !f.equal {
                        return Err(bug(format!(
                            "element sum {} differs from level product {}",
                            f.chi, f.product
                        )));
                    }
                    writeln!(out, "{}", format_factored(&f.roots))?;
                }
                None => {
                    writeln!(out, "{}", characteristic_polynomial(l, &delta))?;
                    if !delta.elements().iter().all(|&x| is_left_modular_element(l, x)) {
                        writeln!(
                            out,
                            "# extended usage: chain {} is not left-modular",
                            delta.labels(l).join(" < ")
                        )?;
                    }
                }
            }
        }
        Command::Check {
            source,
            all,
            left_modular,
            level,
            ll,
            semimodular,
            geometric,
            supersolvable,
        } => {
            let src = load_source(&source)?;
            let flags = [left_modular, level, ll, semimodular, geometric, supersolvable];
            let none = !flags.iter().any(|&f| f);
            let rows = Property::ALL
                .into_iter()
                .zip(flags)
                .filter(|&(_, f)| all || none || f)
                .map(|(p, _)| check_property(&src.lattice, p))
                .collect::<Result<Vec<_>, _>>()?;
            out.write_all(write_report(&rows).as_bytes())?;
        }
        Command::PerfectOrder { source, budget } => {
            let src = load_source(&source)?;
            match search_perfect_order(&src.lattice, budget) {
                Ok(o) => {
                    writeln!(out, "# perfect order with {} relations", o.relation_count())?;
                    out.write_all(write_atom_order(&o).as_bytes())?;
                }
                Err(Error::ProvedNone) => writeln!(out, "# no perfect order exists")?,
                Err(e) => return Err(e.into()),
            }
        }
        Command::DominanceMu { beta, lambda, verify } => {
            let b = IntegerPartition::parse(&beta)?;
            let lam = IntegerPartition::parse(&lambda)?;
            let mu = dominance_mobius(&b, &lam).map_err(|e| match e {
                Error::NotComparable(..) => Failure {
                    code: 1,
                    message: format!("{beta} is not dominated by {lambda}"),
                },
                e => e.into(),
            })?;
            if verify {
                let interval = dominance_interval(&b, &lam)?.lattice;
                let expected = mobius_recursive(&interval).get(interval.top());
                if expected != mu {
                    return Err(bug(format!("closed form {mu} differs from recursion {expected}")));
                }
            }
            writeln!(out, "{mu}")?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = lock.flush();
            eprintln!("latmu: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
