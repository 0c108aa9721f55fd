use std::fmt::Write as _;

use acgroups::acmoves::{
    is_identity_transform, parse_moves, witness_fixed, witness_tuple, ACTransform, EndoMap, GroupTuple, Move,
    MoveKind,
};
use acgroups::fox::fox_derive;
use acgroups::json::{group_ring_tag, laurent_tag, TaggedMatrix, LAURENT_T};
use acgroups::magnus::{bachmuth_jacobian, jacobian, nu_matrix, Matrix, ProjectiveClass};
use acgroups::relations::{
    check_a1m_structure, verify_commutator_family, verify_q_family, verify_relation, RelationFamily,
    RelationReport,
};
use acgroups::search::{
    ak_pair, bfs_trivialize, bfs_trivialize_sequential, canonicalize, classify_small, corpus_entry, parse_corpus,
    scramble, ClassifyReport, SearchBudget, SearchResult, SearchStatus, AK_CORPUS,
};
use acgroups::words::{format_tuple, parse_tuple_free, Alphabet, Generator, Word};
use acgroups::{Error, Integer, ZGroupRing, ZLaurent};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::{AlphabetArgs, BudgetArgs, Cli, Command, FamilyArg, Output};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Budget = 3,
}

pub struct Outcome {
    pub status: Status,
    json: Value,
    text: String,
}

impl Outcome {
    fn new<R: Serialize>(cmd: &str, report: &R, text: String, status: Status) -> Self {
        let mut json = serde_json::to_value(report).expect("reports serialize");
        let obj = json.as_object_mut().expect("reports are objects");
        let mut out = serde_json::Map::new();
        out.insert("schema".into(), Value::String(format!("actool.{cmd}.v1")));
        out.append(obj);
        Outcome {
            status,
            json: Value::Object(out),
            text,
        }
    }

    pub fn render(&self, mode: Output) -> String {
        match mode {
            Output::Json => format!("{}\n", serde_json::to_string_pretty(&self.json).expect("valid json")),
            Output::Text => self.text.clone(),
        }
    }
}

pub type CliResult<T> = Result<T, String>;

fn lib<T>(r: acgroups::Result<T>) -> CliResult<T> {
    r.map_err(|e| e.to_string())
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Fox { wrt, word } => fox(wrt, word),
        Command::Jacobian { transform, alphabet } => jacobian_cmd(transform, *alphabet),
        Command::Nu { transform, kappa, m } => nu_cmd(transform, *kappa, *m),
        Command::Act { transform, tuple, s } => act(transform, tuple, *s),
        Command::Witness { transform, alphabet } => witness(transform, *alphabet),
        Command::VerifyRelations {
            family,
            transform,
            k_max,
            m,
            kappa,
            trials,
        } => verify_relations(*family, transform.as_deref(), *k_max, *m, *kappa, *trials, cli.seed),
        Command::Search {
            pair,
            corpus,
            entry,
            scramble,
            budget,
            sequential,
        } => search(pair.as_deref(), corpus.as_deref(), entry.as_deref(), *scramble, *budget, *sequential, cli.seed),
        Command::Classify {
            max_len,
            search_max_len,
            max_nodes,
        } => classify(*max_len, *search_max_len, *max_nodes),
        Command::Ak {
            n,
            max_len,
            max_nodes,
            max_depth,
        } => ak(*n, *max_len, *max_nodes, *max_depth),
    }
}

/// Largest `x`- and `y`-indices mentioned by a move sequence.
fn move_indices(moves: &[Move]) -> (u32, u32) {
    let (mut r, mut s) = (1, 0);
    for m in moves {
        match &m.kind {
            MoveKind::Ac1 { i, j } | MoveKind::Ac2 { i, j } => r = r.max(*i).max(*j),
            MoveKind::Ac3 { i } => r = r.max(*i),
            MoveKind::Ac4 { i, k } => {
                r = r.max(*i);
                s = s.max(*k);
            }
            MoveKind::Conj { i, by } => {
                let (x, y) = by.max_indices();
                r = r.max(*i).max(x);
                s = s.max(y);
            }
        }
    }
    (r, s)
}

fn transform(text: &str, r: Option<u32>, s: Option<u32>) -> CliResult<ACTransform> {
    let moves = lib(parse_moves(text))?;
    let (r0, s0) = move_indices(&moves);
    let alphabet = lib(Alphabet::new(r.unwrap_or(r0), s.unwrap_or(s0)))?;
    lib(ACTransform::new(alphabet, moves))
}

fn laurent_names(a: &Alphabet) -> Vec<String> {
    (1..=a.r).map(|i| format!("a{i}")).chain((1..=a.s).map(|k| format!("b{k}"))).collect()
}

fn matrix_text<E: acgroups::magnus::RingElement>(m: &Matrix<E>, cell: impl Fn(&E) -> String) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(&cell).collect();
        let _ = writeln!(out, "  [{}]", cells.join(", "));
    }
    out
}

#[derive(Serialize)]
struct FoxReport {
    wrt: String,
    word: String,
    derivative: ZGroupRing,
    display: String,
}

fn fox(wrt: &str, word: &str) -> CliResult<Outcome> {
    let g = lib(Generator::parse(wrt.trim()))?;
    let w = lib(Word::parse_free(word))?;
    let (r, s) = w.max_indices();
    let (gr, gs) = match g.family {
        acgroups::words::Family::X => (g.index, 0),
        acgroups::words::Family::Y => (0, g.index),
    };
    let alphabet = lib(Alphabet::new(r.max(gr).max(1), s.max(gs)))?;
    let d = lib(fox_derive(&alphabet, g, &ZGroupRing::word(w.clone())))?;
    let report = FoxReport {
        wrt: g.to_string(),
        word: w.to_string(),
        display: d.to_string(),
        derivative: d,
    };
    let text = format!("{}\n", report.display);
    Ok(Outcome::new("fox", &report, text, Status::Ok))
}

#[derive(Serialize)]
struct JacobianReport {
    transform: String,
    endomorphism: EndoMap,
    jacobian: TaggedMatrix<ZGroupRing>,
    bachmuth: TaggedMatrix<ZLaurent>,
}

fn jacobian_cmd(text: &str, a: AlphabetArgs) -> CliResult<Outcome> {
    let t = transform(text, a.r, a.s)?;
    let alphabet = *t.alphabet();
    let e = t.to_endo();
    let j = jacobian::<Integer>(&e);
    let b = bachmuth_jacobian::<Integer>(&e);
    let names = laurent_names(&alphabet);
    let mut out = format!("alphabet {alphabet}\nimages {e}\nJ =\n");
    out.push_str(&matrix_text(&j, |x| x.to_string()));
    out.push_str("B =\n");
    out.push_str(&matrix_text(&b, |p| p.display_with(&names).to_string()));
    let report = JacobianReport {
        transform: t.to_string(),
        endomorphism: e,
        jacobian: TaggedMatrix::new(group_ring_tag(&alphabet), &j),
        bachmuth: TaggedMatrix::new(laurent_tag(alphabet.rank()), &b),
    };
    Ok(Outcome::new("jacobian", &report, out, Status::Ok))
}

#[derive(Serialize)]
struct NuReport {
    transform: String,
    m: u32,
    kappa: u32,
    matrix: TaggedMatrix<ZLaurent>,
    class: ProjectiveClass<Integer>,
    identity: bool,
}

fn nu_cmd(text: &str, kappa: u32, m: Option<u32>) -> CliResult<Outcome> {
    let moves = lib(parse_moves(text))?;
    let (_, s0) = move_indices(&moves);
    let m = m.unwrap_or(s0.max(kappa));
    let t = lib(ACTransform::new(lib(Alphabet::new(2, m))?, moves))?;
    let raw = lib(nu_matrix::<Integer>(&t, kappa))?;
    let class = lib(ProjectiveClass::new(raw.clone()))?;
    let report = NuReport {
        transform: t.to_string(),
        m,
        kappa,
        matrix: TaggedMatrix::new(LAURENT_T, &raw),
        identity: class.is_identity(),
        class,
    };
    let out = format!("{}\n", report.class);
    Ok(Outcome::new("nu", &report, out, Status::Ok))
}

#[derive(Serialize)]
struct ActReport {
    transform: String,
    input: Vec<String>,
    output: Vec<String>,
    display: String,
}

fn act(text: &str, tuple: &str, s: Option<u32>) -> CliResult<Outcome> {
    let moves = lib(parse_moves(text))?;
    let words = lib(parse_tuple_free(tuple))?;
    let (mr, ms) = move_indices(&moves);
    let (wr, ws) = words.iter().map(Word::max_indices).fold((0, 0), |a, b| (a.0.max(b.0), a.1.max(b.1)));
    let r = words.len() as u32;
    if mr > r || wr > r {
        return Err(format!("moves and words must use indices 1..={r} for a {r}-tuple"));
    }
    let alphabet = lib(Alphabet::new(r, s.unwrap_or(ms.max(ws))))?;
    let t = lib(ACTransform::new(alphabet, moves))?;
    let input = lib(GroupTuple::new(alphabet, words))?;
    let output = lib(t.apply(&input))?;
    let report = ActReport {
        transform: t.to_string(),
        input: input.entries().iter().map(Word::to_string).collect(),
        output: output.entries().iter().map(Word::to_string).collect(),
        display: format_tuple(output.entries()),
    };
    let out = format!("{}\n", report.display);
    Ok(Outcome::new("act", &report, out, Status::Ok))
}

#[derive(Serialize)]
struct WitnessReport {
    transform: String,
    identity: bool,
    endomorphism_identity: bool,
    witness_fixed: bool,
    m: u32,
    witness_tuple: Option<Vec<String>>,
}

fn witness(text: &str, a: AlphabetArgs) -> CliResult<Outcome> {
    let mut t = transform(text, a.r, a.s)?;
    if a.r.is_none() && t.alphabet().r < 2 {
        t = lib(ACTransform::new(lib(Alphabet::new(2, t.alphabet().s))?, t.moves().to_vec()))?;
    }
    let m = t.ac4_count() as u32;
    let report = WitnessReport {
        transform: t.to_string(),
        identity: is_identity_transform(&t),
        endomorphism_identity: t.to_endo().is_identity(),
        witness_fixed: witness_fixed(&t),
        m,
        witness_tuple: witness_tuple(m, t.alphabet().r)
            .ok()
            .map(|w| w.entries().iter().map(Word::to_string).collect()),
    };
    let out = format!(
        "identity {}\nendomorphism identity {}\nwitness fixed {} (m = {m})\n",
        report.identity, report.endomorphism_identity, report.witness_fixed
    );
    Ok(Outcome::new("witness", &report, out, Status::Ok))
}

#[derive(Serialize)]
struct RelationsReport {
    family: RelationFamily,
    all_hold: bool,
    reports: Vec<RelationReport>,
}

fn verify_relations(
    family: FamilyArg,
    word: Option<&str>,
    k_max: u32,
    m: u32,
    kappa: u32,
    trials: usize,
    seed: u64,
) -> CliResult<Outcome> {
    if k_max == 0 {
        return Err("--k-max must be at least 1".into());
    }
    let (family, reports) = match family {
        FamilyArg::Q1 => (RelationFamily::Q1, lib(verify_q_family(RelationFamily::Q1, k_max))?),
        FamilyArg::Q2 => (RelationFamily::Q2, lib(verify_q_family(RelationFamily::Q2, k_max))?),
        FamilyArg::Commutator => (RelationFamily::Commutator, lib(verify_commutator_family(k_max, m, kappa))?),
        FamilyArg::A1m => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (RelationFamily::A1m, vec![lib(check_a1m_structure(m, trials, &mut rng))?])
        }
        FamilyArg::Word => {
            let t = transform(word.unwrap_or_default(), None, None)?;
            (RelationFamily::Word, vec![verify_relation(&t, kappa)])
        }
    };
    let all_hold = reports.iter().all(|r| r.holds);
    let name = serde_json::to_value(family).expect("serializable");
    let name = name.as_str().unwrap_or_default();
    let mut out = String::new();
    for r in &reports {
        let label = match (r.k, &r.word) {
            (Some(k), _) => format!("k={k}"),
            (None, Some(w)) => w.clone(),
            _ => String::new(),
        };
        let _ = writeln!(out, "{name} {label} {}", if r.holds { "holds" } else { "FAILS" });
    }
    let status = if all_hold { Status::Ok } else { Status::CheckFailed };
    let report = RelationsReport {
        family,
        all_hold,
        reports,
    };
    Ok(Outcome::new("verify-relations", &report, out, status))
}

fn budget(b: BudgetArgs) -> SearchBudget {
    let out = SearchBudget::new(b.max_len, b.max_nodes);
    match b.max_depth {
        Some(d) => out.with_depth(d),
        None => out,
    }
}

fn search_status(s: SearchStatus) -> Status {
    match s {
        SearchStatus::Found => Status::Ok,
        _ => Status::Budget,
    }
}

fn result_text(r: &SearchResult) -> String {
    let status = serde_json::to_value(r.status).expect("serializable");
    let mut out = format!("status {}\n", status.as_str().unwrap_or_default());
    if let (Some(d), Some(p)) = (r.depth, &r.path) {
        let _ = writeln!(out, "depth {d}\nmoves {}\npath {p}", p.len());
    }
    let s = &r.stats;
    let _ = writeln!(
        out,
        "nodes {} visited {} frontier peak {} elapsed {:.1} ms",
        s.nodes_expanded, s.visited, s.frontier_peak, s.elapsed_ms
    );
    out
}

#[derive(Serialize)]
struct SearchReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    pair: [String; 2],
    canonical: String,
    budget: SearchBudget,
    result: SearchResult,
}

fn split_pair(text: &str) -> CliResult<(Word, Word)> {
    let (a, b) = text
        .split_once(';')
        .ok_or_else(|| "expected a pair \"w1 ; w2\"".to_string())?;
    let f2 = lib(Alphabet::new(2, 0))?;
    let shift = |offset: usize| {
        move |e: Error| match e {
            Error::Parse { position, message } => format!("parse error at byte {}: {message}", position + offset),
            other => other.to_string(),
        }
    };
    let u = Word::parse(a, &f2).map_err(shift(0))?;
    let v = Word::parse(b, &f2).map_err(shift(a.len() + 1))?;
    Ok((u, v))
}

#[allow(clippy::too_many_arguments)]
fn search(
    pair: Option<&str>,
    corpus: Option<&std::path::Path>,
    entry: Option<&str>,
    scramble_moves: Option<usize>,
    b: BudgetArgs,
    sequential: bool,
    seed: u64,
) -> CliResult<Outcome> {
    let (name, (u, v)) = match (pair, entry, scramble_moves) {
        (Some(p), _, _) => (None, split_pair(p)?),
        (None, Some(name), _) => {
            let text = match corpus {
                Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
                None => AK_CORPUS.to_string(),
            };
            let entries = lib(parse_corpus(&text))?;
            (Some(name.to_string()), lib(corpus_entry(&entries, name))?.pair.clone())
        }
        (None, None, Some(n)) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (u, v, _) = scramble(&mut rng, n, b.max_len);
            (Some(format!("scramble({n}, seed {seed})")), (u, v))
        }
        (None, None, None) => return Err("one of --pair, --entry or --scramble is required".into()),
    };
    let budget = budget(b);
    let result = if sequential {
        lib(bfs_trivialize_sequential(&u, &v, &budget))?
    } else {
        lib(bfs_trivialize(&u, &v, &budget))?
    };
    let canonical = lib(canonicalize(&u, &v))?.to_string();
    let mut out = format!("pair {u} ; {v}\ncanonical {canonical}\n");
    out.push_str(&result_text(&result));
    let status = search_status(result.status);
    let report = SearchReport {
        name,
        pair: [u.to_string(), v.to_string()],
        canonical,
        budget,
        result,
    };
    Ok(Outcome::new("search", &report, out, status))
}

#[derive(Serialize)]
struct ClassifyOut {
    report: ClassifyReport,
}

fn classify(max_len: usize, search_max_len: usize, max_nodes: u64) -> CliResult<Outcome> {
    let report = lib(classify_small(max_len, &SearchBudget::new(search_max_len, max_nodes)))?;
    let mut out = format!(
        "classes {}\nexcluded by determinant {}\ntrivialized {}\nunresolved {}\n",
        report.classes,
        report.excluded_by_determinant,
        report.trivialized.len(),
        report.unresolved.len()
    );
    for c in &report.unresolved {
        let _ = writeln!(out, "  unresolved {}", c.pair);
    }
    let status = if report.unresolved.is_empty() { Status::Ok } else { Status::Budget };
    Ok(Outcome::new("classify", &ClassifyOut { report }, out, status))
}

#[derive(Serialize)]
struct AkReport {
    n: u32,
    pair: [String; 2],
    total_length: usize,
    budget: SearchBudget,
    result: SearchResult,
}

fn ak(n: u32, max_len: usize, max_nodes: u64, max_depth: Option<u32>) -> CliResult<Outcome> {
    let (u, v) = lib(ak_pair(n))?;
    let budget = budget(BudgetArgs {
        max_len,
        max_nodes,
        max_depth,
    });
    let result = lib(bfs_trivialize(&u, &v, &budget))?;
    let mut out = format!("AK({n}) = ({u}, {v})\ntotal length {}\n", u.len() + v.len());
    out.push_str(&result_text(&result));
    let status = search_status(result.status);
    let report = AkReport {
        n,
        pair: [u.to_string(), v.to_string()],
        total_length: u.len() + v.len(),
        budget,
        result,
    };
    Ok(Outcome::new("ak", &report, out, status))
}
