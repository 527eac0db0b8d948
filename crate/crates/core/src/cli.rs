//! Command-line front end.
//!
//! Exit status is 0 on success, 1 when an input fails validation or a
//! certificate fails to verify, and 2 for malformed input. Failures also
//! print one JSON line `{"error": kind, "message": text}` on standard error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::json;

use crate::certify::{self, HomeoCertificate};
use crate::chainlink::{self, AnnularTangle};
use crate::family::{self, Verdict};
use crate::farey::Slope;
use crate::io::{self, DeltaDocument};
use crate::lorenz::{self, SvgOptions, TemplateOrbit};
use crate::psl2::{self, LrWord, UVector};

/// Environment variable capping `n` for the enumerating verbs.
pub const MAX_N_VAR: &str = "MODLINK_MAX_N";
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "modlink",
    version,
    about = "Arithmetic modular links, Lorenz orbits and augmented chainlinks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the n-component family members with chains, words and Δ-sets.
    Enumerate {
        n: usize,
        /// Write the Δ-sets as a JSON array.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the membership conditions of each Δ-set in a file.
    Validate { file: PathBuf },
    /// Six lifts and LR-word of a slope p/q.
    Lift { slope: String },
    /// Exact orbit of an LR-word on the Lorenz template.
    Orbit { word: String },
    /// Braid permutation and pairwise linking of several orbits.
    Braid {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Emit and verify certificates for all n-component members or a Δ-set file.
    Certify {
        target: String,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify an existing certificate file instead.
        #[arg(long, conflicts_with = "out")]
        check: bool,
    },
    /// PD and DT codes, linking matrix and deletion set of C_n.
    Chainlink {
        n: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// SVG of template orbits or of a chainlink.
    Render {
        #[arg(long, num_args = 1..)]
        words: Vec<String>,
        #[arg(long, conflicts_with = "words")]
        chainlink: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the standard figures into a directory.
        #[arg(long, conflicts_with_all = ["words", "chainlink", "out"])]
        seed_figures: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Malformed(String),
}

type Outcome = Result<(), Failure>;

fn malformed(e: impl std::fmt::Display) -> Failure {
    Failure::Malformed(e.to_string())
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| malformed(format!("{MAX_N_VAR}={v:?} is not a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_n(n: usize, min: usize) -> Outcome {
    let cap = max_n()?;
    if n < min {
        return Err(malformed(format!("n must be at least {min}")));
    }
    if n > cap {
        return Err(malformed(format!(
            "n = {n} exceeds the cap {cap} (set {MAX_N_VAR} to raise it)"
        )));
    }
    Ok(())
}

fn write_file(path: &Path, contents: &str) -> Outcome {
    io::write_atomic(path, contents.as_bytes())
        .map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| malformed(format!("{}: {e}", path.display())))
}

fn parse_word(s: &str) -> Result<LrWord, Failure> {
    s.parse().map_err(malformed)
}

fn parse_orbit(s: &str) -> Result<TemplateOrbit, Failure> {
    lorenz::orbit_points(&parse_word(s)?).map_err(malformed)
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg
                .lines()
                .next()
                .unwrap_or_default()
                .trim_start_matches("error: ");
            report(err, "usage", first);
            return 2;
        }
    };
    let result = dispatch(cli.command, out);
    match result {
        Ok(()) => 0,
        Err(Failure::Invalid(m)) => {
            report(err, "invalid", &m);
            1
        }
        Err(Failure::Malformed(m)) => {
            report(err, "malformed", &m);
            2
        }
    }
}

fn report(err: &mut dyn Write, kind: &str, message: &str) {
    let _ = writeln!(err, "{}", json!({ "error": kind, "message": message }));
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Outcome {
    let mut text = String::new();
    let r = match cmd {
        Command::Enumerate { n, out: path } => enumerate(n, path.as_deref(), &mut text),
        Command::Validate { file } => validate(&file, &mut text),
        Command::Lift { slope } => lift(&slope, &mut text),
        Command::Orbit { word } => {
            let o = parse_orbit(&word)?;
            text = format!("{}: {}\n", o.word(), o.listing());
            Ok(())
        }
        Command::Braid { words } => braid(&words, &mut text),
        Command::Certify {
            target,
            out: path,
            check,
        } => {
            if check {
                check_certificates(Path::new(&target), &mut text)
            } else {
                certify(&target, path.as_deref(), &mut text)
            }
        }
        Command::Chainlink { n, svg } => chainlink(n, svg.as_deref(), &mut text),
        Command::Render {
            words,
            chainlink,
            out: path,
            seed_figures,
        } => render(
            &words,
            chainlink,
            path.as_deref(),
            seed_figures.as_deref(),
            &mut text,
        ),
    };
    let _ = out.write_all(text.as_bytes());
    r
}

fn enumerate(n: usize, path: Option<&Path>, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    check_n(n, 1)?;
    let links = family::enumerate_family(n).map_err(|e| Failure::Invalid(e.to_string()))?;
    let _ = writeln!(text, "n = {n}: {} links", links.len());
    for (i, link) in links.iter().enumerate() {
        let words: Vec<String> = link.words().iter().map(ToString::to_string).collect();
        let delta: Vec<String> = link.delta().vectors().map(ToString::to_string).collect();
        let _ = writeln!(text, "link {}", i + 1);
        let chain: Vec<String> = link
            .chain()
            .entries()
            .iter()
            .map(ToString::to_string)
            .collect();
        let _ = writeln!(text, "  chain: [{}]", chain.join(", "));
        let _ = writeln!(text, "  words: {}", words.join(" "));
        let _ = writeln!(text, "  delta: {}", delta.join(" "));
    }
    if let Some(p) = path {
        let docs: Vec<DeltaDocument> = links.iter().map(DeltaDocument::from_link).collect();
        write_file(p, &io::to_pretty_json(&docs).map_err(malformed)?)?;
    }
    Ok(())
}

fn validate(file: &Path, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    let docs = io::parse_delta_documents(&read_file(file)?).map_err(malformed)?;
    let mut failures = Vec::new();
    for (i, doc) in docs.iter().enumerate() {
        let delta = doc.delta();
        let report = family::validate(&delta);
        let verdict = report.verdict();
        let _ = writeln!(text, "document {} ({} vectors)", i + 1, delta.len());
        let _ = writeln!(text, "{report}");
        if verdict != Verdict::Valid {
            failures.push(format!("document {}: {verdict}", i + 1));
            continue;
        }
        if doc.n * 6 != delta.len() {
            failures.push(format!(
                "document {}: n = {} but |Δ| = {}",
                i + 1,
                doc.n,
                delta.len()
            ));
        }
        if !doc.chain.is_empty() {
            let chain = family::chain_of(&delta).map_err(|e| Failure::Invalid(e.to_string()))?;
            if chain.entries() != doc.chain.as_slice() {
                failures.push(format!(
                    "document {}: recorded chain differs from [{chain}]",
                    i + 1
                ));
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invalid(failures.join("; ")))
    }
}

fn lift(slope: &str, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    let s: Slope = slope.parse().map_err(malformed)?;
    let lifts: Vec<String> = UVector::from_slope(&s)
        .six_lifts()
        .iter()
        .map(ToString::to_string)
        .collect();
    let _ = writeln!(text, "slope: {s}");
    let _ = writeln!(text, "lifts: {}", lifts.join(" "));
    match psl2::slope_to_word(&s) {
        Ok(w) => {
            let _ = writeln!(text, "word: {w}");
        }
        Err(e) => {
            let _ = writeln!(text, "word: none ({e})");
        }
    }
    Ok(())
}

fn braid(words: &[String], text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    let orbits = words
        .iter()
        .map(|w| parse_orbit(w))
        .collect::<Result<Vec<_>, _>>()?;
    let b = lorenz::lorenz_braid(&orbits).map_err(malformed)?;
    for o in &orbits {
        let _ = writeln!(text, "{}: {}", o.word(), o.listing());
    }
    let perm: Vec<String> = b
        .permutation()
        .iter()
        .enumerate()
        .map(|(i, j)| format!("{}->{}", i + 1, j + 1))
        .collect();
    let _ = writeln!(text, "strands: {}", b.strand_count());
    let _ = writeln!(text, "permutation: {}", perm.join(" "));
    let comps: Vec<String> = b.component_of().iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "components: {}", comps.join(" "));
    let _ = writeln!(text, "crossings: {}", b.crossing_count());
    for i in 0..b.component_count() {
        for j in i + 1..b.component_count() {
            let lk = b.linking_number(i, j).map_err(malformed)?;
            let _ = writeln!(text, "lk({}, {}) = {lk}", b.words()[i], b.words()[j]);
        }
    }
    Ok(())
}

fn certify(target: &str, path: Option<&Path>, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    let certs: Vec<HomeoCertificate> = match target.parse::<usize>() {
        Ok(n) => {
            check_n(n, 1)?;
            certify::certify_family(n).map_err(|e| Failure::Invalid(e.to_string()))?
        }
        Err(_) => {
            let docs =
                io::parse_delta_documents(&read_file(Path::new(target))?).map_err(malformed)?;
            docs.iter()
                .map(|d| certify::certify(&d.delta()))
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::Invalid(e.to_string()))?
        }
    };
    let json = io::to_pretty_json(&certs).map_err(malformed)?;
    match path {
        Some(p) => write_file(p, &json)?,
        None => text.push_str(&json),
    }
    for (i, c) in certs.iter().enumerate() {
        if let Err(reason) = certify::verify(c) {
            return Err(Failure::Invalid(format!(
                "certificate {} failed to verify: {reason}",
                i + 1
            )));
        }
    }
    let _ = writeln!(text, "verified {} certificates", certs.len());
    Ok(())
}

fn check_certificates(file: &Path, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    let body = read_file(file)?;
    let certs: Vec<HomeoCertificate> = match serde_json::from_str::<Vec<HomeoCertificate>>(&body) {
        Ok(v) => v,
        Err(_) => vec![serde_json::from_str(&body).map_err(malformed)?],
    };
    let mut failures = Vec::new();
    for (i, c) in certs.iter().enumerate() {
        match certify::verify(c) {
            Ok(()) => {
                let _ = writeln!(text, "certificate {}: ok", i + 1);
            }
            Err(reason) => {
                let _ = writeln!(text, "certificate {}: FAIL {reason}", i + 1);
                failures.push(i + 1);
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invalid(format!(
            "certificates {failures:?} failed to verify"
        )))
    }
}

fn chainlink(n: usize, svg: Option<&Path>, text: &mut String) -> Outcome {
    use std::fmt::Write as _;
    check_n(n, 1)?;
    let t = AnnularTangle::whitehead();
    let pd = t.unroll(n);
    let lk = pd
        .linking_matrix()
        .map_err(|e| Failure::Invalid(e.to_string()))?;
    let _ = writeln!(
        text,
        "C{n}: {} components, {} crossings",
        pd.component_count(),
        pd.crossing_count()
    );
    let _ = writeln!(text, "PD:");
    let _ = write!(text, "{pd}");
    let _ = writeln!(
        text,
        "{}",
        pd.dt_text().map_err(|e| Failure::Invalid(e.to_string()))?
    );
    let _ = writeln!(text, "linking matrix (component 0 is the axis):");
    let _ = write!(text, "{lk}");
    if n >= 2 {
        let del = chainlink::deletion_set(n).map_err(|e| Failure::Invalid(e.to_string()))?;
        let d: Vec<String> = del.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "deletion set: {}", d.join(" "));
    }
    if let Some(p) = svg {
        write_file(p, &t.render_svg(n))?;
    }
    Ok(())
}

fn render(
    words: &[String],
    chain: Option<usize>,
    path: Option<&Path>,
    seed: Option<&Path>,
    text: &mut String,
) -> Outcome {
    use std::fmt::Write as _;
    if let Some(dir) = seed {
        fs::create_dir_all(dir).map_err(|e| malformed(format!("{}: {e}", dir.display())))?;
        let template_orbits = ["LR", "LLRR", "LLRLRR"]
            .map(parse_orbit)
            .into_iter()
            .collect::<Result<Vec<_>, _>>()?;
        let figures = [
            (
                "lorenz_template.svg",
                lorenz::render_svg(&template_orbits, &SvgOptions::default()).map_err(malformed)?,
            ),
            ("whitehead_c1.svg", AnnularTangle::whitehead().render_svg(1)),
            ("chainlink_c4.svg", AnnularTangle::whitehead().render_svg(4)),
        ];
        for (name, svg) in figures {
            let p = dir.join(name);
            write_file(&p, &svg)?;
            let _ = writeln!(text, "wrote {}", p.display());
        }
        return Ok(());
    }
    let svg = match chain {
        Some(n) => {
            check_n(n, 1)?;
            AnnularTangle::whitehead().render_svg(n)
        }
        None => {
            let orbits = words
                .iter()
                .map(|w| parse_orbit(w))
                .collect::<Result<Vec<_>, _>>()?;
            lorenz::render_svg(&orbits, &SvgOptions::default()).map_err(malformed)?
        }
    };
    match path {
        Some(p) => write_file(p, &svg),
        None => {
            text.push_str(&svg);
            Ok(())
        }
    }
}
