mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use jstrata::gallery::{self, ENTRIES};
use jstrata::homological::{carlson_module, ext1_basis, ext_z_locus, is_locally_split, z_locus};
use jstrata::modrep::omega_power;
use jstrata::strata::{self, Options};
use jstrata::{CohomClass, Elem, Family, Field, JordanType, ModuleRep, PiFamily, PiPoint};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "jordan-strata", version, about = "Local Jordan types, strata and rank varieties of modules")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads for point enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct Enumeration {
    /// Enumerate points over GF(p^m).
    #[arg(long, default_value_t = 1)]
    field_ext: u32,
    /// Compute generic ranks and defining equations symbolically (default).
    #[arg(long, overrides_with = "no_symbolic")]
    symbolic: bool,
    /// Use only the enumerated points.
    #[arg(long)]
    no_symbolic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Jordan type at one pi-point.
    Jtype {
        #[arg(long)]
        module: PathBuf,
        /// Family parameters, comma separated.
        #[arg(long, conflicts_with = "point_poly", required_unless_present = "point_poly")]
        point: Option<String>,
        /// Image of t as a polynomial in x0..x{r-1}.
        #[arg(long)]
        point_poly: Option<String>,
        #[arg(long, default_value_t = 1)]
        field_ext: u32,
    },
    /// Local types, strata and all non-maximal rank loci.
    Strata {
        #[arg(long)]
        module: PathBuf,
        #[command(flatten)]
        enumeration: Enumeration,
    },
    /// The non-maximal j-rank locus.
    Gamma {
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        j: usize,
        #[command(flatten)]
        enumeration: Enumeration,
    },
    /// Tensor product of two modules, or of two Jordan types.
    Tensor {
        #[arg(long, conflicts_with = "types", required_unless_present = "types")]
        module: Vec<PathBuf>,
        /// Two Jordan types such as "3[2]" "[2]".
        #[arg(long, num_args = 2, requires = "p")]
        types: Vec<String>,
        #[arg(long)]
        p: Option<u32>,
    },
    /// Heller shift of a module.
    Omega {
        #[arg(long)]
        module: PathBuf,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        n: i32,
    },
    /// A basis of H^1(G, M).
    Ext1 {
        #[arg(long)]
        module: PathBuf,
        /// Print only basis class i, in the class JSON format.
        #[arg(long)]
        emit: Option<usize>,
    },
    /// Carlson module of an even-degree class.
    Carlson {
        #[arg(long)]
        class: PathBuf,
    },
    /// Zero locus of a class.
    Zlocus {
        #[arg(long)]
        class: PathBuf,
        #[arg(long, default_value_t = 1)]
        field_ext: u32,
    },
    /// Named example modules.
    Gallery {
        #[command(subcommand)]
        action: GalleryAction,
    },
    /// Check the module axioms.
    Validate {
        #[arg(long)]
        module: PathBuf,
    },
}

#[derive(Subcommand)]
enum GalleryAction {
    List,
    Emit {
        name: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        subgroup: Option<u32>,
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long, allow_negative_numbers = true)]
        n: Option<i32>,
        /// Jordan type of the nilpotent matrix for gln1-standard.
        #[arg(long)]
        jtype: Option<String>,
    },
}

enum Failure {
    Usage(String),
    Math(jstrata::Error),
}

impl From<jstrata::Error> for Failure {
    fn from(e: jstrata::Error) -> Self {
        Failure::Math(e)
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn load_module(path: &Path) -> Result<ModuleRep, Failure> {
    let m = ModuleRep::from_json(&read(path)?)?;
    if m.name().is_some() {
        return Ok(m);
    }
    let stem = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    Ok(m.with_name(stem))
}

fn load_class(path: &Path) -> Result<CohomClass, Failure> {
    Ok(CohomClass::from_json(&read(path)?)?)
}

fn family_for(m: &ModuleRep) -> jstrata::Result<PiFamily> {
    if m.group().family == Family::Sl2SecondFrobenius {
        gallery::sl2_2_family(m.p())
    } else {
        PiFamily::standard(*m.group())
    }
}

fn options(m: &ModuleRep, e: &Enumeration) -> Result<Options, Failure> {
    let field = Field::new(m.p(), e.field_ext)?;
    let opts = Options::over(&field);
    Ok(if e.no_symbolic && !e.symbolic { opts.numeric_only() } else { opts })
}

fn parse_coords(field: &Field, text: &str) -> Result<Vec<Elem>, Failure> {
    text.split(',')
        .map(|s| {
            let v: i64 = s.trim().parse().map_err(|_| usage(format!("bad coordinate '{s}'")))?;
            if field.is_prime_field() {
                Ok(field.from_int(v))
            } else if v >= 0 && field.contains_elem(v as Elem) {
                Ok(v as Elem)
            } else {
                Err(usage(format!("coordinate {v} is not an element of {field}")))
            }
        })
        .collect()
}

fn module_output(m: &ModuleRep) -> String {
    m.to_json()
}

fn run(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Jtype { module, point, point_poly, field_ext } => {
            let m = load_module(module)?;
            let field = Field::new(m.p(), *field_ext)?;
            let pt = match (point, point_poly) {
                (Some(c), _) => family_for(&m)?.at(&field, &parse_coords(&field, c)?)?,
                (None, Some(poly)) => PiPoint::parse(&field, m.group().r, poly)?,
                (None, None) => return Err(usage("give --point or --point-poly")),
            };
            let ty = pt.jtype(&m)?;
            Ok(match fmt {
                Format::Table => ty.to_string(),
                Format::Json => json!({ "point": pt.to_string(), "jtype": ty.to_string() }).to_string(),
            })
        }
        Command::Strata { module, enumeration } => {
            let m = load_module(module)?;
            let report = strata::strata(&m, &family_for(&m)?, &options(&m, enumeration)?)?;
            Ok(match fmt {
                Format::Table => render::strata_table(&report),
                Format::Json => pretty(&report.to_json()),
            })
        }
        Command::Gamma { module, j, enumeration } => {
            let m = load_module(module)?;
            if *j == 0 || *j >= m.p() as usize {
                return Err(usage(format!("--j must lie in 1..{}", m.p())));
            }
            let report = strata::strata(&m, &family_for(&m)?, &options(&m, enumeration)?)?;
            let g = &report.gamma[*j - 1];
            Ok(match fmt {
                Format::Table => render::gamma_table(&report, g),
                Format::Json => {
                    let mut v = report.to_json()["gamma"][j.to_string()].clone();
                    v["module"] = json!(report.module);
                    v["j"] = json!(j);
                    pretty(&v)
                }
            })
        }
        Command::Tensor { module, types, p } => {
            if let Some(p) = p {
                let a = JordanType::parse(*p, &types[0])?;
                let b = JordanType::parse(*p, &types[1])?;
                let t = a.tensor(&b)?;
                return Ok(match fmt {
                    Format::Table => t.to_string(),
                    Format::Json => json!({ "jtype": t.to_string(), "dim": t.dim() }).to_string(),
                });
            }
            if module.len() != 2 {
                return Err(usage("give --module twice"));
            }
            let a = load_module(&module[0])?;
            let b = load_module(&module[1])?;
            let name = format!("{}-x-{}", a.name().unwrap_or("a"), b.name().unwrap_or("b"));
            Ok(module_output(&a.tensor(&b)?.with_name(name)))
        }
        Command::Omega { module, n } => {
            let m = load_module(module)?;
            let name = format!("omega{n}-{}", m.name().unwrap_or("module"));
            Ok(module_output(&omega_power(&m, *n)?.with_name(name)))
        }
        Command::Ext1 { module, emit } => {
            let m = load_module(module)?;
            let basis = ext1_basis(&m)?;
            if let Some(i) = emit {
                let z = basis
                    .get(*i)
                    .ok_or_else(|| usage(format!("class {i} requested, H^1 has dimension {}", basis.len())))?;
                return Ok(z.to_json().to_string());
            }
            Ok(match fmt {
                Format::Table => render::ext1_table(&m, &basis),
                Format::Json => {
                    let classes: Vec<Value> = basis.iter().map(CohomClass::to_json).collect();
                    json!({ "dimension": basis.len(), "classes": classes }).to_string()
                }
            })
        }
        Command::Carlson { class } => {
            let z = load_class(class)?;
            Ok(module_output(&carlson_module(&z)?.with_name("carlson")))
        }
        Command::Zlocus { class, field_ext } => {
            let z = load_class(class)?;
            let field = Field::new(z.target().p(), *field_ext)?;
            let fam = family_for(z.target())?;
            let trivial_base = z.base().dim() == 1 && z.base().generators().iter().all(|g| g.is_zero());
            let (points, split) = if z.degree() == 1 && trivial_base {
                (z_locus(&z, &fam, &field)?, Some(is_locally_split(&z, &fam, &field)?))
            } else {
                (ext_z_locus(&z, &fam, &field)?, None)
            };
            Ok(match fmt {
                Format::Table => render::points_table(&points, split),
                Format::Json => json!({ "points": points, "locally_split": split }).to_string(),
            })
        }
        Command::Gallery { action } => gallery_command(action, fmt),
        Command::Validate { module } => {
            let m = load_module(module)?;
            m.validate()?;
            Ok(match fmt {
                Format::Table => format!("ok: {} dimensional module over {}", m.dim(), m.field()),
                Format::Json => json!({ "valid": true, "dim": m.dim() }).to_string(),
            })
        }
    }
}

fn gallery_command(action: &GalleryAction, fmt: Format) -> Outcome {
    match action {
        GalleryAction::List => Ok(match fmt {
            Format::Table => render::gallery_table(ENTRIES),
            Format::Json => {
                let v: Vec<Value> = ENTRIES
                    .iter()
                    .map(|e| json!({ "name": e.name, "params": e.params, "summary": e.summary }))
                    .collect();
                pretty(&json!(v))
            }
        }),
        GalleryAction::Emit { name, p, subgroup, lambda, n, jtype } => {
            let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| usage(format!("{name} needs --{flag}")));
            let m = match name.as_str() {
                "w-module" => gallery::w_module(*p)?,
                "cyclic-quotient" => gallery::cyclic_quotient(*p)?,
                "gl3-sym2" => gallery::gl3_sym2(*p, need(*subgroup, "subgroup")?)?,
                "sl2-2-simple" => gallery::sl2_2_simple(need(*lambda, "lambda")?, *p)?,
                "heller-of-trivial" => {
                    gallery::heller_of_trivial(n.ok_or_else(|| usage("heller-of-trivial needs --n"))?, 2, *p)?
                }
                "gln1-standard" => {
                    let text = jtype.as_deref().ok_or_else(|| usage("gln1-standard needs --jtype"))?;
                    let ty = JordanType::parse(*p, text)?;
                    let m = gallery::gln1_standard(&gallery::nilpotent_of_type(&ty)?)?.0;
                    m.with_name(format!("gln1-standard-p{p}-{ty}"))
                }
                other => return Err(usage(format!("unknown gallery entry '{other}'"))),
            };
            Ok(module_output(&m))
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("usage: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("{}: {}", e.kind(), e.detail());
            ExitCode::from(1)
        }
    }
}
