use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crlab::code::complementary_code;
use crlab::conditions::{conditions_report, Check};
use crlab::diffmat::{difference_matrix, dm_code, is_difference_matrix, read_dm, translate_distance_dichotomy, write_dm};
use crlab::families::{construct, FamilyParams};
use crlab::field::prime_power;
use crlab::formats::{read_gfc, write_gfc};
use crlab::report::code_report;
use crlab::search::{census_tsv, dump_unmatched, search_antipodal_duals, search_arcs, ArcMode};
use crlab::{Error, FieldSpec, LinearCode};

#[derive(Parser)]
#[command(name = "crlab", version, about = "Completely regular codes with antipodal two-weight duals")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a family member: writes the two-weight code to FILE and its dual to FILE.dual
    Construct(ConstructArgs),
    /// Weight distributions, covering radius, intersection array and conditions of a code
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Difference matrix D(p^h, p^l) over GF(p^l)
    Dm(DmArgs),
    /// Bounds and divisibility conditions for an antipodal (n, N, {d, n})_q code
    Bounds(BoundsArgs),
    #[command(subcommand)]
    Search(SearchCmd),
    /// Dual code
    Dual {
        file: PathBuf,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Complementary code with respect to s copies of every projective point
    Complement {
        file: PathBuf,
        #[arg(long)]
        s: usize,
        #[arg(short)]
        o: Option<PathBuf>,
    },
    /// Seeded random [n, k]_q code
    Random {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        o: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_parser = ["ext-hamming", "dm-dual", "mds-dual", "bose-bush", "delsarte", "denniston"])]
    family: String,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(short)]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct DmArgs {
    #[arg(long, required_unless_present = "file")]
    p: Option<u32>,
    #[arg(long, required_unless_present = "file")]
    l: Option<u32>,
    #[arg(long, required_unless_present = "file")]
    h: Option<u32>,
    /// Read the matrix from a .dm file instead of building it
    #[arg(long, conflicts_with_all = ["p", "l", "h"])]
    file: Option<PathBuf>,
    #[arg(long)]
    verify: bool,
    #[arg(short)]
    o: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    q: u64,
    #[arg(long)]
    n: u64,
    #[arg(long)]
    d: u64,
    #[arg(long = "N")]
    big_n: u128,
    /// Maximal column multiplicity (linear codes)
    #[arg(long, default_value_t = 1)]
    s: u64,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Arcs of PG(2, q)
    Arcs {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        size: usize,
        /// Count all arcs instead of stopping at the first
        #[arg(long)]
        count: bool,
    },
    /// Census of antipodal two-weight [n, r]_q codes, n <= n-max, and their duals
    Classify {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        projective: bool,
        #[arg(long)]
        json: bool,
        /// Directory for .gfc dumps of unmatched entries
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

/// What went wrong, mapped onto the exit-code contract.
enum Failure {
    /// A check ran and came out negative.
    Check(String),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn read_code(path: &Path) -> Result<LinearCode, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let file = read_gfc(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    for w in &file.warnings {
        eprintln!("warning: {}: {w}", path.display());
    }
    Ok(file.code()?)
}

fn emit(text: &str, out: Option<&Path>) -> Outcome {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn family_params(a: &ConstructArgs) -> Result<FamilyParams, Failure> {
    let need = |v: Option<u32>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--family {} needs --{flag}", a.family)));
    Ok(match a.family.as_str() {
        "ext-hamming" => {
            if a.q.is_some_and(|q| q != 2) {
                return Err(Failure::Usage("ext-hamming is binary; drop --q or pass --q 2".into()));
            }
            FamilyParams::ExtHamming { m: need(a.m, "m")? }
        }
        "dm-dual" => {
            // --q fixes p and l together; --p with --l works as well
            let (p, l) = match (a.q, a.p) {
                (Some(q), _) => {
                    let (p, l) = prime_power(q as u64).ok_or_else(|| Failure::Usage(format!("{q} is not a prime power")))?;
                    if a.l.is_some_and(|x| x != l) {
                        return Err(Failure::Usage(format!("--l disagrees with --q {q} = {p}^{l}")));
                    }
                    (p, l)
                }
                (None, Some(p)) => (p, need(a.l, "l")?),
                (None, None) => return Err(Failure::Usage("--family dm-dual needs --q or --p".into())),
            };
            FamilyParams::DmDual { p, l, h: need(a.h, "h")? }
        }
        "mds-dual" => FamilyParams::MdsDual {
            q: need(a.q, "q")?,
            n: a.n.ok_or_else(|| Failure::Usage("--family mds-dual needs --n".into()))?,
        },
        "bose-bush" => FamilyParams::BoseBush { q: need(a.q, "q")? },
        "delsarte" => FamilyParams::Delsarte { q: need(a.q, "q")? },
        "denniston" => FamilyParams::Denniston {
            q: need(a.q, "q")?,
            h: need(a.h, "h")?,
        },
        other => return Err(Failure::Usage(format!("unknown family {other}"))),
    })
}

fn cmd_construct(a: &ConstructArgs) -> Outcome {
    let params = family_params(a)?;
    let inst = construct(params)?;
    let tw = &inst.two_weight_code;
    let cr = &inst.cr_code;
    println!("{} ({})", params, params.family());
    println!("two-weight code  [{}, {}]_{} weights {{{}, {}}}", tw.n(), tw.k(), tw.q(), inst.predicted_weights[0], inst.predicted_weights[1]);
    println!("dual             [{}, {}]_{}", cr.n(), cr.k(), cr.q());
    println!("predicted IA     {}", inst.predicted_ia);
    if inst.trivial {
        println!("note             trivial instance");
    }
    if let Some(note) = &inst.note {
        println!("note             {note}");
    }
    let label = params.to_string();
    let tw_text = write_gfc(tw.generator(), &[&label, "antipodal two-weight code"]);
    let cr_text = write_gfc(cr.generator(), &[&label, "completely regular dual"]);
    match &a.o {
        Some(path) => {
            let mut dual = path.clone().into_os_string();
            dual.push(".dual");
            emit(&tw_text, Some(path))?;
            emit(&cr_text, Some(Path::new(&dual)))?;
            println!("wrote {} and {}", path.display(), Path::new(&dual).display());
            Ok(())
        }
        None => {
            print!("{tw_text}");
            print!("{cr_text}");
            Ok(())
        }
    }
}

fn cmd_report(file: &Path, json: bool) -> Outcome {
    let code = read_code(file)?;
    let report = code_report(&code)?;
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.table());
    }
    Ok(())
}

fn cmd_dm(a: &DmArgs) -> Outcome {
    let (dm, (p, l, h)) = match &a.file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            read_dm(&text)?
        }
        None => {
            let (p, l, h) = (a.p.unwrap(), a.l.unwrap(), a.h.unwrap());
            (difference_matrix(p, l, h)?, (p, l, h))
        }
    };
    if a.file.is_none() || a.o.is_some() {
        emit(&write_dm(&dm, p, l, h), a.o.as_deref())?;
    }
    if a.verify {
        if !is_difference_matrix(dm.entries(), dm.field()) {
            return Err(Failure::Check("difference matrix: FAILED".into()));
        }
        println!("difference matrix: OK");
        let code = dm_code(&dm)?;
        let distances = code.codewords.distance_set();
        println!(
            "code: n = {}, N = {}, distances {:?}, {}",
            code.n(),
            code.size(),
            distances,
            if code.linear.is_some() { "linear" } else { "additive" }
        );
        if !translate_distance_dichotomy(&code) {
            return Err(Failure::Check("translate distances: FAILED".into()));
        }
        println!("translate distances: OK");
    }
    Ok(())
}

fn show_check(c: &Check) {
    let verdict = match (c.applicable, c.satisfied) {
        (false, _) => "n/a",
        (true, true) => "ok",
        (true, false) => "FAILED",
    };
    println!("  {:<28} {:>6}   {} vs {}", c.name, verdict, c.lhs, c.rhs);
}

fn cmd_bounds(a: &BoundsArgs) -> Outcome {
    if a.d == 0 || a.d >= a.n || a.q < 2 {
        return Err(Failure::Usage("need q >= 2 and 0 < d < n".into()));
    }
    // dimension when N is a power of q
    let k = (1..=64).find(|&k| (a.q as u128).checked_pow(k) == Some(a.big_n));
    let r = conditions_report(a.q, a.n, a.big_n, k, a.d, a.s);
    println!("(n, N, {{d, n}})_q = ({}, {}, {{{}, {}}})_{}", a.n, a.big_n, a.d, a.n, a.q);
    for (name, v) in [("Plotkin", &r.plotkin), ("Gray-Rankin", &r.gray_rankin), ("max distance", &r.max_distance)] {
        println!("{name:<14} {}", v.as_deref().unwrap_or("n/a"));
    }
    println!("size bounds:");
    r.thm41.checks().into_iter().for_each(show_check);
    if r.thm41.right_equality {
        let ok = r.thm41.length_identity.satisfied && r.thm41.distance_identity.satisfied;
        println!("  right bound equality; length and distance identities {}", if ok { "reproduce n, d" } else { "FAIL" });
    }
    if r.thm41.left_equality {
        println!("  left bound equality: {}", r.thm41.left_equality_kind.as_deref().unwrap_or("unclassified"));
    }
    match &r.thm42 {
        Ok(t) => {
            println!("complementary code conditions (d_c = {}, n_c = {}):", t.d_c, t.n_c);
            t.checks().into_iter().for_each(show_check);
        }
        Err(e) => println!("complementary code conditions: n/a ({e})"),
    }
    if let Some((i, rest)) = r.lemma40 {
        println!("weight decomposition: d = q^{i} * {rest}");
    }
    if let Some(mu) = &r.lemma42 {
        println!("weight counts: {}", serde_json::to_string(mu).unwrap_or_default());
    }
    let thm42_ok = r.thm42.as_ref().map_or(true, |t| t.passes());
    if r.thm41.passes() && thm42_ok {
        Ok(())
    } else {
        Err(Failure::Check("conditions violated".into()))
    }
}

fn cmd_search(cmd: &SearchCmd) -> Outcome {
    match cmd {
        SearchCmd::Arcs { q, size, count } => {
            let mode = if *count { ArcMode::Count } else { ArcMode::Exists };
            let s = search_arcs(*q, *size, mode)?;
            println!("exists: {}", s.exists);
            if let Some(c) = s.count {
                println!("count: {c}");
            }
            if let Some(w) = &s.witness {
                let pts: Vec<String> = w.iter().map(|p| format!("{p:?}")).collect();
                println!("witness: {}", pts.join(" "));
            }
            println!("nodes: {}", s.nodes);
            Ok(())
        }
        SearchCmd::Classify {
            q,
            r,
            n_max,
            projective,
            json,
            dump,
        } => {
            let census = search_antipodal_duals(*q, *r, *n_max, *projective)?;
            if *json {
                println!("{}", serde_json::to_string_pretty(&census).expect("census serializes"));
            } else {
                print!("{}", census_tsv(&census));
            }
            if let Some(dir) = dump {
                for p in dump_unmatched(&census, dir)? {
                    eprintln!("wrote {}", p.display());
                }
            }
            let unmatched = census.unmatched().count();
            if unmatched > 0 {
                eprintln!("{unmatched} unmatched entries");
            }
            Ok(())
        }
    }
}

fn cmd_random(q: u32, n: usize, k: usize, seed: u64, o: Option<&Path>) -> Outcome {
    if k == 0 || k > n {
        return Err(Failure::Usage("need 0 < k <= n".into()));
    }
    let field = FieldSpec::of_order(q as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // redraw until the rows are independent
    loop {
        let rows: Vec<Vec<u32>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
        if let Ok(code) = LinearCode::from_rows(field.clone(), &rows) {
            let seed_note = format!("random [{n}, {k}]_{q}, seed {seed}");
            return emit(&write_gfc(code.generator(), &[&seed_note]), o);
        }
    }
}

fn run(cli: Cli) -> Outcome {
    match &cli.cmd {
        Cmd::Construct(a) => cmd_construct(a),
        Cmd::Report { file, json } => cmd_report(file, *json),
        Cmd::Dm(a) => cmd_dm(a),
        Cmd::Bounds(a) => cmd_bounds(a),
        Cmd::Search(s) => cmd_search(s),
        Cmd::Dual { file, o } => {
            let dual = read_code(file)?.dual()?;
            emit(&write_gfc(dual.generator(), &["dual code"]), o.as_deref())
        }
        Cmd::Complement { file, s, o } => {
            let comp = complementary_code(&read_code(file)?, *s)?;
            emit(&write_gfc(comp.generator(), &[&format!("complementary code, s = {s}")]), o.as_deref())
        }
        Cmd::Random { q, n, k, seed, o } => cmd_random(*q, *n, *k, *seed, o.as_deref()),
    }
}

fn init_threads() {
    if let Some(n) = std::env::var("CRLAB_THREADS").ok().and_then(|v| v.trim().parse::<usize>().ok()) {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("warning: CRLAB_THREADS ignored: {e}");
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    init_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `crlab --help` for usage");
            ExitCode::from(2)
        }
    }
}
