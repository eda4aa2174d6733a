//! Request/response layer of the `maya-ladder` command line tool.
//!
//! [`run`] turns a [`CommandRequest`] into an [`Outcome`]: an exit status and
//! the text written to stdout and stderr. Exit status 0 means success, 1 a
//! violated identity (or an interrupted verification), 2 a usage error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{integer, sturm_real_roots, DiffOperator};
use crate::cancel::Cancellation;
use crate::error::Error;
use crate::extension::{bound_states, eigenfunction, is_regular, RationalExtension};
use crate::hermite::{normalized_h, wronskian_polynomial};
use crate::intertwine::{
    ascending_factorization, ladder, ladder_order, syzygy, verify_intertwining, Arrow,
};
use crate::maya::{parse_diagram, Glyphs, MayaDiagram};
use crate::multiset::IntegerMultiset;
use crate::verify::{verify_family, Family};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    /// Row of boxes over `[from, to]`; a window around the index set when unset.
    Render {
        from: Option<i64>,
        to: Option<i64>,
        ascii: bool,
    },
    Info,
    Hm,
    Potential,
    /// `T_M ψ_{M,k} = (2k+1) ψ_{M,k}` for every `k` in `[from, to]`.
    Eigencheck {
        from: i64,
        to: i64,
    },
    Intertwiner {
        flips: IntegerMultiset,
    },
    Ladder {
        n: i64,
    },
    Syzygy {
        n: i64,
    },
    Regular,
    VerifyAll,
    SeedCorpus {
        dir: PathBuf,
    },
}

impl Command {
    fn needs_diagram(&self) -> bool {
        !matches!(self, Command::VerifyAll | Command::SeedCorpus { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandRequest {
    pub command: Command,
    /// Diagram in the `K:{…}` / `B:(…)` grammar.
    pub diagram: Option<String>,
    pub format: Format,
}

impl CommandRequest {
    pub fn new(command: Command, diagram: Option<&str>, format: Format) -> Self {
        Self {
            command,
            diagram: diagram.map(str::to_string),
            format,
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            status: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn checked(holds: bool, stdout: String) -> Self {
        Self {
            status: if holds { EXIT_OK } else { EXIT_VIOLATION },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Self {
            status: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {}\n", message.into()),
        }
    }
}

pub fn run(request: &CommandRequest) -> Outcome {
    run_with(request, &Cancellation::new())
}

/// Like [`run`], with a cancellation handle honoured by `verify-all`.
pub fn run_with(request: &CommandRequest, cancel: &Cancellation) -> Outcome {
    let diagram = match (&request.diagram, request.command.needs_diagram()) {
        (Some(s), true) => match parse_diagram(s) {
            Ok(m) => Some(m),
            Err(e) => return Outcome::usage(format!("cannot parse diagram {s:?}: {e}")),
        },
        (None, true) => return Outcome::usage("this command needs a diagram such as \"K:{1,2}\""),
        (_, false) => None,
    };
    let m = diagram.unwrap_or_default();
    let fmt = request.format;
    match &request.command {
        Command::Render { from, to, ascii } => render(&m, *from, *to, *ascii, fmt),
        Command::Info => info(&m, fmt),
        Command::Hm => hm(&m, fmt),
        Command::Potential => potential(&m, fmt),
        Command::Eigencheck { from, to } => eigencheck(&m, *from, *to, fmt),
        Command::Intertwiner { flips } => intertwiner(&m, flips, fmt),
        Command::Ladder { n } => ladder_cmd(&m, *n, fmt),
        Command::Syzygy { n } => syzygy_cmd(&m, *n, fmt),
        Command::Regular => regular(&m, fmt),
        Command::VerifyAll => verify_all(fmt, cancel),
        Command::SeedCorpus { dir } => seed_corpus(dir, fmt),
    }
}

fn emit_json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn render(
    m: &MayaDiagram,
    from: Option<i64>,
    to: Option<i64>,
    ascii: bool,
    fmt: Format,
) -> Outcome {
    let lo_default = m.index_set().first().map_or(0, |&k| k.min(0)) - 2;
    let hi_default = m.index_set().last().map_or(0, |&k| k.max(0)) + 2;
    let (lo, hi) = (from.unwrap_or(lo_default), to.unwrap_or(hi_default));
    let glyphs = if ascii {
        Glyphs::Ascii
    } else {
        Glyphs::Unicode
    };
    let row = match m.render(lo, hi, glyphs) {
        Ok(row) => row,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    Outcome::ok(match fmt {
        Format::Text => format!("{row}\n"),
        Format::Json => emit_json(&json!({ "diagram": m, "from": lo, "to": hi, "row": row })),
    })
}

fn info(m: &MayaDiagram, fmt: Format) -> Outcome {
    let b = m.block_coordinates();
    let frob = m.frobenius_symbol();
    let (canonical, shift) = m.canonical_unlabelled();
    Outcome::ok(match fmt {
        Format::Text => format!(
            "diagram: {m}\nblocks: {b}\ngenus: {}\nsigma: {}\nfrobenius: {frob}\ncanonical: {canonical} (shift {shift})\nregular: {}\n",
            b.genus(),
            m.index(),
            yes_no(is_regular(m)),
        ),
        Format::Json => emit_json(&json!({
            "diagram": m,
            "blockCoordinates": b.coords(),
            "genus": b.genus(),
            "sigma": m.index(),
            "frobenius": { "s": frob.s, "t": frob.t },
            "canonical": { "diagram": canonical, "shift": shift },
            "regular": is_regular(m),
        })),
    })
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn hm(m: &MayaDiagram, fmt: Format) -> Outcome {
    let h = wronskian_polynomial(m);
    let h_hat = normalized_h(m);
    Outcome::ok(match fmt {
        Format::Text => format!(
            "H: {h}\nHhat: {h_hat}\nsigma: {}\ngenus: {}\n",
            m.index(),
            m.genus()
        ),
        Format::Json => emit_json(&json!({
            "H": h.to_string(),
            "Hhat": h_hat.to_string(),
            "sigma": m.index(),
            "genus": m.genus(),
        })),
    })
}

fn potential(m: &MayaDiagram, fmt: Format) -> Outcome {
    let ext = RationalExtension::new(m);
    Outcome::ok(match fmt {
        Format::Text => format!("U: {}\nT: {}\n", ext.potential, ext.hamiltonian),
        Format::Json => emit_json(&json!({
            "diagram": m,
            "H": ext.h,
            "potential": ext.potential,
            "hamiltonian": ext.hamiltonian,
            "display": { "potential": ext.potential.to_string(), "hamiltonian": ext.hamiltonian.to_string() },
        })),
    })
}

fn eigencheck(m: &MayaDiagram, from: i64, to: i64, fmt: Format) -> Outcome {
    if from > to {
        return Outcome::usage(Error::EmptyWindow { lo: from, hi: to }.to_string());
    }
    let ext = RationalExtension::new(m);
    let rows: Vec<(i64, bool, bool)> = (from..=to)
        .map(|k| {
            let state = ext.eigenfunction(k);
            let f = &state.function;
            (
                k,
                state.bound,
                ext.hamiltonian.apply(f) == f.scale(&integer(2 * k + 1)),
            )
        })
        .collect();
    let all = rows.iter().all(|r| r.2);
    let out = match fmt {
        Format::Text => {
            let mut s = String::new();
            for (k, bound, holds) in &rows {
                let kind = if *bound {
                    "bound"
                } else if m.contains(*k) {
                    "virtual"
                } else {
                    "formal"
                };
                let verdict = if *holds { "holds" } else { "FAILS" };
                writeln!(s, "k={k} eigenvalue={} {kind}: {verdict}", 2 * k + 1).unwrap();
            }
            s
        }
        Format::Json => emit_json(&json!({
            "diagram": m,
            "checks": rows.iter().map(|(k, bound, holds)| json!({
                "k": k, "eigenvalue": 2 * k + 1, "bound": bound, "holds": holds,
            })).collect::<Vec<_>>(),
            "allHold": all,
        })),
    };
    Outcome::checked(all, out)
}

fn operator_json(op: &DiffOperator) -> Value {
    json!({ "coefficients": op, "display": op.to_string(), "order": op.order() })
}

fn intertwiner(m: &MayaDiagram, flips: &IntegerMultiset, fmt: Format) -> Outcome {
    let arrow = Arrow::new(m.clone(), flips.clone());
    let op = arrow.operator();
    let holds = verify_intertwining(m, flips);
    let out = match fmt {
        Format::Text => format!(
            "arrow: {arrow}\ntarget: {}\nprimitive: {}\norder: {}\noperator: {op}\nintertwining: {}\n",
            arrow.target(),
            yes_no(arrow.is_primitive()),
            op.order().unwrap_or(0),
            holds_text(holds),
        ),
        Format::Json => emit_json(&json!({
            "arrow": arrow,
            "target": arrow.target(),
            "primitive": arrow.is_primitive(),
            "operator": operator_json(&op),
            "intertwining": holds,
        })),
    };
    Outcome::checked(holds, out)
}

fn holds_text(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "FAILS"
    }
}

fn ladder_cmd(m: &MayaDiagram, n: i64, fmt: Format) -> Outcome {
    let l = match ladder(m, n) {
        Ok(l) => l,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let t = RationalExtension::new(m).hamiltonian;
    let holds = l.operator.compose(&t) == t.plus_scalar(&integer(2 * n)).compose(&l.operator);
    let predicted = (n > 0).then(|| ladder_order(m, n).expect("positive shift"));
    let order_ok = predicted.is_none_or(|p| p == l.order);
    let out = match fmt {
        Format::Text => {
            let mut s = format!(
                "diagram: {m}\nshift: {n}\nflip set: {}\norder: {}",
                set_text(&l.flip_set),
                l.order
            );
            if let Some(p) = predicted {
                write!(s, " (predicted {p})").unwrap();
            }
            write!(
                s,
                "\noperator: {}\nladder identity: {}\n",
                l.operator,
                holds_text(holds)
            )
            .unwrap();
            s
        }
        Format::Json => emit_json(&json!({
            "diagram": m,
            "shift": n,
            "flipSet": l.flip_set,
            "order": l.order,
            "predictedOrder": predicted,
            "operator": operator_json(&l.operator),
            "identityHolds": holds,
        })),
    };
    Outcome::checked(holds && order_ok, out)
}

fn set_text(items: &[i64]) -> String {
    let parts: Vec<String> = items.iter().map(i64::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn syzygy_cmd(m: &MayaDiagram, n: i64, fmt: Format) -> Outcome {
    let s = match syzygy(m, n) {
        Ok(s) => s,
        Err(e @ Error::Internal(_)) => {
            return Outcome {
                status: EXIT_VIOLATION,
                stdout: String::new(),
                stderr: format!("{e}\n"),
            }
        }
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let out = match fmt {
        Format::Text => format!(
            "multiset: {}\nK_0: {}\nK_1: {}\nroots of p: {}\nidentity: {}\n",
            s.multiset,
            set_text(&s.odd_part),
            s.even_part,
            set_text(&s.polynomial_roots),
            holds_text(s.identity_holds),
        ),
        Format::Json => emit_json(&json!({ "diagram": m, "n": n, "syzygy": s })),
    };
    Outcome::checked(s.identity_holds, out)
}

fn regular(m: &MayaDiagram, fmt: Format) -> Outcome {
    let by_blocks = is_regular(m);
    let roots = sturm_real_roots(&wronskian_polynomial(m)).expect("H_M is nonzero");
    let consistent = by_blocks == (roots == 0);
    let out = match fmt {
        Format::Text => format!(
            "diagram: {m}\nblock parity: {}\nreal zeros of H: {roots}\nregular: {}\n",
            if by_blocks {
                "even"
            } else {
                "odd block present"
            },
            yes_no(by_blocks),
        ),
        Format::Json => emit_json(&json!({
            "diagram": m,
            "regular": by_blocks,
            "realZeros": roots,
            "consistent": consistent,
        })),
    };
    Outcome::checked(consistent, out)
}

fn verify_all(fmt: Format, cancel: &Cancellation) -> Outcome {
    let family = Family::default();
    let reports = match verify_family(&family, cancel) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                status: EXIT_VIOLATION,
                stdout: String::new(),
                stderr: format!("verify-all: {e}\n"),
            }
        }
    };
    let all = reports.iter().all(|r| r.holds());
    let out = match fmt {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                writeln!(
                    s,
                    "{:<24} {:>7} cases  {}",
                    r.name,
                    r.cases,
                    if r.holds() { "ok" } else { "FAIL" }
                )
                .unwrap();
                for f in &r.failures {
                    writeln!(s, "    {f}").unwrap();
                }
            }
            let total: usize = reports.iter().map(|r| r.cases).sum();
            writeln!(
                s,
                "verify-all: {} checks, {total} cases, {}",
                reports.len(),
                if all { "all hold" } else { "violations found" }
            )
            .unwrap();
            s
        }
        Format::Json => emit_json(&json!({ "family": family, "checks": reports, "allHold": all })),
    };
    Outcome::checked(all, out)
}

/// Golden documents for the single-hole family `K:{-n}`, `n = 1..=4`:
/// `(file name, pretty JSON)` pairs.
pub fn corpus_documents() -> Vec<(String, String)> {
    (1..=4)
        .map(|n| (format!("single_hole_{n}.json"), single_hole_document(n)))
        .collect()
}

fn single_hole_document(n: i64) -> String {
    let m = MayaDiagram::single_hole(n);
    let ladder_doc = |shift: i64| {
        let l = ladder(&m, shift).expect("nonzero shift");
        json!({
            "shift": shift,
            "flipSet": l.flip_set,
            "order": l.order,
            "predictedOrder": ladder_order(&m, shift).expect("positive shift"),
            "operator": l.operator,
        })
    };
    let flips = m.ladder_flip_set(n).expect("positive shift");
    let factors = ascending_factorization(&m, &flips).expect("a set");
    let s = syzygy(&m, n).expect("positive shift");
    let doc = json!({
        "diagram": m,
        "blockCoordinates": m.block_coordinates().coords(),
        "genus": m.genus(),
        "sigma": m.index(),
        "H": wronskian_polynomial(&m).to_string(),
        "regular": is_regular(&m),
        "boundStates": bound_states(&m, 0, n + 2).ok(),
        "ladder1": ladder_doc(1),
        "ladderN": ladder_doc(n),
        "factorization": factors,
        "syzygy": s,
        "groundState": eigenfunction(&m, 0).function,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

/// Writes [`corpus_documents`] into `dir`, creating it if needed.
pub fn write_corpus(dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    corpus_documents()
        .into_iter()
        .map(|(name, text)| {
            let path = dir.join(name);
            std::fs::write(&path, text)?;
            Ok(path)
        })
        .collect()
}

fn seed_corpus(dir: &Path, fmt: Format) -> Outcome {
    match write_corpus(dir) {
        Ok(paths) => {
            let names: Vec<String> = paths.iter().map(|p| p.display().to_string()).collect();
            Outcome::ok(match fmt {
                Format::Text => names.iter().map(|n| format!("wrote {n}\n")).collect(),
                Format::Json => emit_json(&json!({ "written": names })),
            })
        }
        Err(e) => Outcome::usage(format!("cannot write corpus to {}: {e}", dir.display())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn req(command: Command, diagram: &str, format: Format) -> CommandRequest {
        CommandRequest::new(command, Some(diagram), format)
    }

    #[test]
    fn hm_json_matches_the_documented_shape() {
        let out = run(&req(Command::Hm, "K:{1,2}", Format::Json));
        assert_eq!(out.status, 0);
        assert_eq!(
            out.stdout,
            "{\"H\":\"8x^2+4\",\"Hhat\":\"4x^2+2\",\"sigma\":2,\"genus\":1}\n"
        );
    }

    #[test]
    fn render_window() {
        let out = run(&req(
            Command::Render {
                from: Some(-3),
                to: Some(2),
                ascii: true,
            },
            "K:{-2,0}",
            Format::Text,
        ));
        assert_eq!(out.stdout, "#.#|#..\n");
        let out = run(&req(
            Command::Render {
                from: Some(2),
                to: Some(1),
                ascii: true,
            },
            "K:{}",
            Format::Text,
        ));
        assert_eq!(out.status, EXIT_USAGE);
    }

    #[test]
    fn syzygy_report() {
        let out = run(&req(Command::Syzygy { n: 2 }, "K:{-2}", Format::Text));
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("K_1: {-1,0}"), "{}", out.stdout);
        assert!(out.stdout.contains("roots of p: {-1,1}"));
        assert!(out.stdout.contains("identity: holds"));
    }

    #[test]
    fn usage_errors() {
        let out = run(&req(Command::Info, "K:{1,", Format::Text));
        assert_eq!(out.status, EXIT_USAGE);
        assert!(out.stderr.contains("column"));
        let out = run(&CommandRequest::new(Command::Hm, None, Format::Text));
        assert_eq!(out.status, EXIT_USAGE);
        let out = run(&req(Command::Ladder { n: 0 }, "K:{}", Format::Text));
        assert_eq!(out.status, EXIT_USAGE);
    }

    #[test]
    fn regular_and_eigencheck() {
        let out = run(&req(Command::Regular, "K:{1}", Format::Json));
        assert_eq!(out.status, 0);
        assert!(out.stdout.contains("\"regular\":false"));
        assert!(out.stdout.contains("\"realZeros\":1"));
        let out = run(&req(
            Command::Eigencheck { from: -2, to: 3 },
            "K:{1,2}",
            Format::Text,
        ));
        assert_eq!(out.status, 0);
        assert_eq!(out.stdout.lines().count(), 6);
        assert!(out.stdout.contains("k=0 eigenvalue=1 bound: holds"));
    }

    #[test]
    fn deterministic_output() {
        let r = req(Command::Ladder { n: 1 }, "K:{-2}", Format::Json);
        assert_eq!(run(&r), run(&r));
    }
}
