//! Text formats for every instance type. All formats are line oriented,
//! `#` starts a comment, ids on the wire are 1-based. Serialization is
//! canonical: parsing a serialized value reproduces the value, and
//! serializing again reproduces the bytes.
//!
//! Election:
//! ```text
//! candidates: 3
//! name: 1 alice            (optional)
//! 2: 1,2,3                 (two voters ranking 1 > 2 > 3)
//! 1 partial: 1,3           (one Kemeny'-style partial vote)
//! ```
//!
//! Control instance: the election plus `rule:`, `control:`, `limit:`,
//! `preferred:`, and per-kind lines (`unregistered:`, `deletable:`, or an
//! `addable-voters:` block of vote lines).
//!
//! Graph: `p <n>` then `e <u> <v>` lines. Digraph: `p <n>` then `a <u> <v>`.
//! Graph control instance: `kind:` plus the graph plus per-kind lines.
//!
//! QBF2: `p qcnf <vars> <clauses>`, `x <ids> 0`, `y <ids> 0`, then DIMACS
//! clause lines; the semantics are fixed as "exists x, not exists y, phi".
//! Plain 3CNF: DIMACS `p cnf <vars> <clauses>`.

use std::fmt::Write as _;

use crate::control::{ControlAction, ControlInstance, Rule};
use crate::elections::{Election, Vote};
use crate::graphs::{
    CnfFormula, Digraph, Graph, GraphControlInstance, Lit, QLit, Qbf2Formula, VarBlock,
};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// line scanning helpers
// ---------------------------------------------------------------------------

struct Lines<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        Lines { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.peek();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn expect_key(&mut self, key: &str) -> Result<(usize, &'a str)> {
        match self.next() {
            Some((line, text)) => match text.strip_prefix(key).map(str::trim) {
                Some(rest) => Ok((line, rest)),
                None => Err(Error::parse(line, format!("expected '{key} ...'"))),
            },
            None => Err(Error::parse(0, format!("missing '{key}' line"))),
        }
    }
}

fn parse_id(line: usize, token: &str, max: usize) -> Result<usize> {
    let id: usize = token
        .trim()
        .parse()
        .map_err(|_| Error::parse(line, format!("bad id '{token}'")))?;
    if id == 0 || id > max {
        return Err(Error::parse(line, format!("id {id} out of range 1..={max}")));
    }
    Ok(id - 1)
}

fn parse_id_list(line: usize, text: &str, max: usize) -> Result<Vec<usize>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| parse_id(line, tok, max))
        .collect()
}

fn render_ids(ids: &[usize]) -> String {
    ids.iter()
        .map(|i| (i + 1).to_string())
        .collect::<Vec<_>>()
        .join(",")
}

// ---------------------------------------------------------------------------
// elections
// ---------------------------------------------------------------------------

fn parse_vote_line(line: usize, text: &str, m: usize) -> Result<Option<Vote>> {
    let Some((head, ranking)) = text.split_once(':') else {
        return Ok(None);
    };
    let head = head.trim();
    let (count_text, partial) = match head.strip_suffix("partial") {
        Some(count) => (count.trim(), true),
        None => (head, false),
    };
    let Ok(count) = count_text.parse::<u64>() else {
        return Ok(None);
    };
    if count == 0 {
        return Err(Error::parse(line, "vote count must be positive"));
    }
    let order = parse_id_list(line, ranking, m)?;
    Ok(Some(if partial {
        Vote::partial(count, order)
    } else {
        Vote::complete(count, order)
    }))
}

fn render_vote(out: &mut String, vote: &Vote) {
    let keyword = if vote.ranking.is_partial() { " partial" } else { "" };
    let _ = writeln!(
        out,
        "{}{}: {}",
        vote.count,
        keyword,
        render_ids(vote.ranking.order())
    );
}

fn parse_election_body(lines: &mut Lines) -> Result<Election> {
    let (line, rest) = lines.expect_key("candidates:")?;
    let m: usize = rest
        .parse()
        .map_err(|_| Error::parse(line, "bad candidate count"))?;
    let mut names = Vec::new();
    while let Some((line, text)) = lines.peek() {
        let Some(rest) = text.strip_prefix("name:") else {
            break;
        };
        lines.next();
        let rest = rest.trim();
        let (id_text, label) = rest
            .split_once(' ')
            .ok_or_else(|| Error::parse(line, "expected 'name: <id> <label>'"))?;
        names.push((parse_id(line, id_text, m)?, label.trim().to_string()));
    }
    let mut votes = Vec::new();
    while let Some((line, text)) = lines.peek() {
        match parse_vote_line(line, text, m)? {
            Some(vote) => {
                votes.push(vote);
                lines.next();
            }
            None => break,
        }
    }
    let e = Election::new(m, votes)?;
    if names.is_empty() {
        Ok(e)
    } else {
        e.with_names(names)
    }
}


pub fn parse_election(text: &str) -> Result<Election> {
    let mut lines = Lines::new(text);
    let e = parse_election_body(&mut lines)?;
    if let Some((line, text)) = lines.peek() {
        return Err(Error::parse(line, format!("unexpected line '{text}'")));
    }
    Ok(e)
}

pub fn serialize_election(e: &Election) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "candidates: {}", e.num_candidates());
    if let Some(names) = e.candidate_names() {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "name: {} {}", i + 1, name);
        }
    }
    for vote in e.votes() {
        render_vote(&mut out, vote);
    }
    out
}

// ---------------------------------------------------------------------------
// control instances
// ---------------------------------------------------------------------------

pub fn parse_control(text: &str) -> Result<ControlInstance> {
    let mut lines = Lines::new(text);
    let (line, rest) = lines.expect_key("rule:")?;
    let rule = Rule::parse(rest).map_err(|_| Error::parse(line, format!("unknown rule '{rest}'")))?;
    let (line, rest) = lines.expect_key("control:")?;
    let kind = rest.to_string();
    let known = ["ccac", "ccav", "ccdv", "ccdc", "ccdc-star"];
    if !known.contains(&kind.as_str()) {
        return Err(Error::parse(line, format!("unknown control kind '{kind}'")));
    }
    let election = parse_election_body(&mut lines)?;
    let m = election.num_candidates();

    let mut unregistered = None;
    let mut deletable = None;
    let mut limit = None;
    let mut preferred = None;
    let mut addable = None;
    while let Some((line, text)) = lines.next() {
        if let Some(rest) = text.strip_prefix("unregistered:") {
            unregistered = Some(parse_id_list(line, rest, m)?);
        } else if let Some(rest) = text.strip_prefix("deletable:") {
            deletable = Some(parse_id_list(line, rest, m)?);
        } else if let Some(rest) = text.strip_prefix("limit:") {
            limit = Some(
                rest.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::parse(line, "bad limit"))?,
            );
        } else if let Some(rest) = text.strip_prefix("preferred:") {
            preferred = Some(parse_id(line, rest, m)?);
        } else if text == "addable-voters:" {
            let mut votes = Vec::new();
            while let Some((line, text)) = lines.peek() {
                match parse_vote_line(line, text, m)? {
                    Some(v) => {
                        votes.push(v);
                        lines.next();
                    }
                    None => break,
                }
            }
            addable = Some(votes);
        } else {
            return Err(Error::parse(line, format!("unexpected line '{text}'")));
        }
    }

    let limit = limit.ok_or_else(|| Error::parse(0, "missing 'limit:' line"))?;
    let preferred = preferred.ok_or_else(|| Error::parse(0, "missing 'preferred:' line"))?;
    let action = match kind.as_str() {
        "ccac" => ControlAction::AddCandidates {
            unregistered: unregistered
                .ok_or_else(|| Error::parse(0, "ccac needs an 'unregistered:' line"))?,
        },
        "ccav" => ControlAction::AddVoters {
            addable: addable.ok_or_else(|| Error::parse(0, "ccav needs an 'addable-voters:' block"))?,
        },
        "ccdv" => ControlAction::DeleteVoters,
        "ccdc" => ControlAction::DeleteCandidates,
        "ccdc-star" => ControlAction::DeleteCandidatesRestricted {
            deletable: deletable
                .ok_or_else(|| Error::parse(0, "ccdc-star needs a 'deletable:' line"))?,
        },
        _ => unreachable!(),
    };
    let inst = ControlInstance {
        rule,
        election,
        action,
        limit,
        preferred,
    };
    inst.validate()?;
    Ok(inst)
}

pub fn serialize_control(inst: &ControlInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rule: {}", inst.rule.name());
    let _ = writeln!(out, "control: {}", inst.action.kind_name());
    out.push_str(&serialize_election(&inst.election));
    match &inst.action {
        ControlAction::AddCandidates { unregistered } => {
            let _ = writeln!(out, "unregistered: {}", render_ids(unregistered));
        }
        ControlAction::DeleteCandidatesRestricted { deletable } => {
            let _ = writeln!(out, "deletable: {}", render_ids(deletable));
        }
        _ => {}
    }
    let _ = writeln!(out, "limit: {}", inst.limit);
    let _ = writeln!(out, "preferred: {}", inst.preferred + 1);
    if let ControlAction::AddVoters { addable } = &inst.action {
        let _ = writeln!(out, "addable-voters:");
        for vote in addable {
            render_vote(&mut out, vote);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// graphs and digraphs
// ---------------------------------------------------------------------------

fn parse_graph_body(lines: &mut Lines, arc_keyword: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let (line, rest) = lines.expect_key("p")?;
    let n: usize = rest
        .split_whitespace()
        .next()
        .unwrap_or("")
        .parse()
        .map_err(|_| Error::parse(line, "expected 'p <n>'"))?;
    let mut pairs = Vec::new();
    while let Some((line, text)) = lines.peek() {
        let Some(rest) = text.strip_prefix(arc_keyword) else {
            break;
        };
        if !rest.starts_with(' ') {
            break;
        }
        lines.next();
        let mut it = rest.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::parse(line, format!("expected '{arc_keyword} <u> <v>'")));
        };
        pairs.push((parse_id(line, u, n)?, parse_id(line, v, n)?));
    }
    Ok((n, pairs))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = Lines::new(text);
    let (n, edges) = parse_graph_body(&mut lines, "e")?;
    if let Some((line, text)) = lines.peek() {
        return Err(Error::parse(line, format!("unexpected line '{text}'")));
    }
    Graph::new(n, edges)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {}", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut lines = Lines::new(text);
    let (n, arcs) = parse_graph_body(&mut lines, "a")?;
    if let Some((line, text)) = lines.peek() {
        return Err(Error::parse(line, format!("unexpected line '{text}'")));
    }
    Digraph::new(n, arcs)
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p {}", d.n());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "a {} {}", u + 1, v + 1);
    }
    out
}

// ---------------------------------------------------------------------------
// graph control instances
// ---------------------------------------------------------------------------

pub fn parse_graph_control(text: &str) -> Result<GraphControlInstance> {
    let mut lines = Lines::new(text);
    let (_line, rest) = lines.expect_key("kind:")?;
    let kind = rest.to_string();
    let directed = matches!(kind.as_str(), "fasms" | "fasma" | "fasmaa");
    let (n, pairs) = parse_graph_body(&mut lines, if directed { "a" } else { "e" })?;

    let mut deletable = None;
    let mut addable = None;
    let mut addable_arcs = Vec::new();
    let mut limit = None;
    let mut target = None;
    let mut clique_bound = None;
    while let Some((line, text)) = lines.next() {
        if let Some(rest) = text.strip_prefix("deletable:") {
            deletable = Some(parse_id_list(line, rest, n)?);
        } else if let Some(rest) = text.strip_prefix("addable:") {
            addable = Some(parse_id_list(line, rest, n)?);
        } else if let Some(rest) = text.strip_prefix("addable-arc:") {
            let mut it = rest.split_whitespace();
            let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
                return Err(Error::parse(line, "expected 'addable-arc: <u> <v>'"));
            };
            addable_arcs.push((parse_id(line, u, n)?, parse_id(line, v, n)?));
        } else if let Some(rest) = text.strip_prefix("limit:") {
            limit = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line, "bad limit"))?,
            );
        } else if let Some(rest) = text.strip_prefix("target:") {
            target = Some(parse_id(line, rest, n)?);
        } else if let Some(rest) = text.strip_prefix("clique-bound:") {
            clique_bound = Some(
                rest.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::parse(line, "bad clique bound"))?,
            );
        } else {
            return Err(Error::parse(line, format!("unexpected line '{text}'")));
        }
    }
    let limit = limit.ok_or_else(|| Error::parse(0, "missing 'limit:' line"))?;
    let need_target = || target.ok_or_else(|| Error::parse(0, "missing 'target:' line"));
    let inst = match kind.as_str() {
        "vcms" => GraphControlInstance::Vcms {
            graph: Graph::new(n, pairs)?,
            deletable: deletable.unwrap_or_default(),
            limit,
            target: need_target()?,
        },
        "vcma" => GraphControlInstance::Vcma {
            graph: Graph::new(n, pairs)?,
            addable: addable.unwrap_or_default(),
            limit,
            target: need_target()?,
        },
        "ismd" => GraphControlInstance::Ismd {
            graph: Graph::new(n, pairs)?,
            limit,
            target: need_target()?,
        },
        "fasms" => GraphControlInstance::Fasms {
            digraph: Digraph::new(n, pairs)?,
            deletable: deletable.unwrap_or_default(),
            limit,
            target: need_target()?,
        },
        "fasma" => GraphControlInstance::Fasma {
            digraph: Digraph::new(n, pairs)?,
            addable: addable.unwrap_or_default(),
            limit,
            target: need_target()?,
        },
        "fasmaa" => GraphControlInstance::Fasmaa {
            digraph: Digraph::new(n, pairs)?,
            addable_arcs,
            limit,
            target: need_target()?,
        },
        "gnd" => GraphControlInstance::Gnd {
            graph: Graph::new(n, pairs)?,
            limit,
            clique_bound: clique_bound
                .ok_or_else(|| Error::parse(0, "gnd needs a 'clique-bound:' line"))?,
        },
        other => return Err(Error::parse(0, format!("unknown kind '{other}'"))),
    };
    inst.validate()?;
    Ok(inst)
}

pub fn serialize_graph_control(inst: &GraphControlInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", inst.kind_name());
    match inst {
        GraphControlInstance::Vcms {
            graph,
            deletable,
            limit,
            target,
        } => {
            out.push_str(&serialize_graph(graph));
            let _ = writeln!(out, "deletable: {}", render_ids(deletable));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Vcma {
            graph,
            addable,
            limit,
            target,
        } => {
            out.push_str(&serialize_graph(graph));
            let _ = writeln!(out, "addable: {}", render_ids(addable));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Ismd {
            graph,
            limit,
            target,
        } => {
            out.push_str(&serialize_graph(graph));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Fasms {
            digraph,
            deletable,
            limit,
            target,
        } => {
            out.push_str(&serialize_digraph(digraph));
            let _ = writeln!(out, "deletable: {}", render_ids(deletable));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Fasma {
            digraph,
            addable,
            limit,
            target,
        } => {
            out.push_str(&serialize_digraph(digraph));
            let _ = writeln!(out, "addable: {}", render_ids(addable));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Fasmaa {
            digraph,
            addable_arcs,
            limit,
            target,
        } => {
            out.push_str(&serialize_digraph(digraph));
            for (u, v) in addable_arcs {
                let _ = writeln!(out, "addable-arc: {} {}", u + 1, v + 1);
            }
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "target: {}", target + 1);
        }
        GraphControlInstance::Gnd {
            graph,
            limit,
            clique_bound,
        } => {
            out.push_str(&serialize_graph(graph));
            let _ = writeln!(out, "limit: {limit}");
            let _ = writeln!(out, "clique-bound: {clique_bound}");
        }
    }
    out
}

// ---------------------------------------------------------------------------
// formulas
// ---------------------------------------------------------------------------

fn parse_clause_line(line: usize, text: &str, num_vars: usize) -> Result<[(usize, bool); 3]> {
    let mut lits = Vec::new();
    let mut terminated = false;
    for tok in text.split_whitespace() {
        let v: i64 = tok
            .parse()
            .map_err(|_| Error::parse(line, format!("bad literal '{tok}'")))?;
        if v == 0 {
            terminated = true;
            break;
        }
        let var = v.unsigned_abs() as usize;
        if var > num_vars {
            return Err(Error::parse(line, format!("variable {var} out of range")));
        }
        lits.push((var - 1, v < 0));
    }
    if !terminated {
        return Err(Error::parse(line, "clause line must end with 0"));
    }
    if lits.len() != 3 {
        return Err(Error::parse(
            line,
            format!("need exactly 3 literals per clause, got {}", lits.len()),
        ));
    }
    Ok([lits[0], lits[1], lits[2]])
}

pub fn parse_cnf(text: &str) -> Result<CnfFormula> {
    let mut lines = Lines::new(text);
    let (line, rest) = lines.expect_key("p cnf")?;
    let mut it = rest.split_whitespace();
    let (Some(vars), Some(clauses)) = (it.next(), it.next()) else {
        return Err(Error::parse(line, "expected 'p cnf <vars> <clauses>'"));
    };
    let num_vars: usize = vars.parse().map_err(|_| Error::parse(line, "bad var count"))?;
    let num_clauses: usize = clauses
        .parse()
        .map_err(|_| Error::parse(line, "bad clause count"))?;
    let mut parsed = Vec::new();
    while let Some((line, text)) = lines.next() {
        let lits = parse_clause_line(line, text, num_vars)?;
        parsed.push(lits.map(|(var, negated)| Lit { var, negated }));
    }
    if parsed.len() != num_clauses {
        return Err(Error::parse(
            0,
            format!("header says {num_clauses} clauses, found {}", parsed.len()),
        ));
    }
    CnfFormula::new(num_vars, parsed)
}

pub fn serialize_cnf(f: &CnfFormula) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p cnf {} {}", f.num_vars, f.clauses.len());
    for clause in &f.clauses {
        let rendered: Vec<String> = clause
            .iter()
            .map(|l| {
                let v = (l.var + 1) as i64;
                (if l.negated { -v } else { v }).to_string()
            })
            .collect();
        let _ = writeln!(out, "{} 0", rendered.join(" "));
    }
    out
}

fn parse_terminated_ids(line: usize, text: &str, max: usize) -> Result<Vec<usize>> {
    let mut ids = Vec::new();
    let mut terminated = false;
    for tok in text.split_whitespace() {
        if tok == "0" {
            terminated = true;
            break;
        }
        ids.push(parse_id(line, tok, max)?);
    }
    if !terminated {
        return Err(Error::parse(line, "id list must end with 0"));
    }
    Ok(ids)
}

pub fn parse_qbf2(text: &str) -> Result<Qbf2Formula> {
    let mut lines = Lines::new(text);
    let (line, rest) = lines.expect_key("p qcnf")?;
    let mut it = rest.split_whitespace();
    let (Some(vars), Some(clauses)) = (it.next(), it.next()) else {
        return Err(Error::parse(line, "expected 'p qcnf <vars> <clauses>'"));
    };
    let num_vars: usize = vars.parse().map_err(|_| Error::parse(line, "bad var count"))?;
    let num_clauses: usize = clauses
        .parse()
        .map_err(|_| Error::parse(line, "bad clause count"))?;
    let (line_x, rest) = lines.expect_key("x")?;
    let x_vars = parse_terminated_ids(line_x, rest, num_vars)?;
    let (line_y, rest) = lines.expect_key("y")?;
    let y_vars = parse_terminated_ids(line_y, rest, num_vars)?;
    if x_vars.len() != y_vars.len() {
        return Err(Error::parse(
            line_y,
            format!(
                "quantifier blocks must have equal sizes, got {} and {}",
                x_vars.len(),
                y_vars.len()
            ),
        ));
    }
    let mut block = vec![None; num_vars];
    for (i, &v) in x_vars.iter().enumerate() {
        block[v] = Some((VarBlock::X, i));
    }
    for (i, &v) in y_vars.iter().enumerate() {
        if block[v].is_some() {
            return Err(Error::parse(line_y, format!("variable {} in both blocks", v + 1)));
        }
        block[v] = Some((VarBlock::Y, i));
    }
    if block.iter().any(Option::is_none) {
        return Err(Error::parse(line_y, "every variable must be in a block"));
    }
    let mut parsed = Vec::new();
    while let Some((line, text)) = lines.next() {
        let lits = parse_clause_line(line, text, num_vars)?;
        parsed.push(lits.map(|(var, negated)| {
            let (b, index) = block[var].expect("checked above");
            QLit {
                block: b,
                index,
                negated,
            }
        }));
    }
    if parsed.len() != num_clauses {
        return Err(Error::parse(
            0,
            format!("header says {num_clauses} clauses, found {}", parsed.len()),
        ));
    }
    Qbf2Formula::new(x_vars.len(), parsed)
}

pub fn serialize_qbf2(f: &Qbf2Formula) -> String {
    // canonical variable numbering: x block 1..n, y block n+1..2n
    let n = f.block_size;
    let mut out = String::new();
    let _ = writeln!(out, "p qcnf {} {}", 2 * n, f.clauses.len());
    let xs: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let ys: Vec<String> = (n + 1..=2 * n).map(|i| i.to_string()).collect();
    let _ = writeln!(out, "x {} 0", xs.join(" "));
    let _ = writeln!(out, "y {} 0", ys.join(" "));
    for clause in &f.clauses {
        let rendered: Vec<String> = clause
            .iter()
            .map(|l| {
                let v = match l.block {
                    VarBlock::X => l.index + 1,
                    VarBlock::Y => n + l.index + 1,
                } as i64;
                (if l.negated { -v } else { v }).to_string()
            })
            .collect();
        let _ = writeln!(out, "{} 0", rendered.join(" "));
    }
    out
}
