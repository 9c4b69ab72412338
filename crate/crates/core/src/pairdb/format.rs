//! Reader and writer for the line-oriented `pairs.dat` format.

use std::collections::BTreeSet;
use std::fmt::Write;

use super::{Expr, Flag, MultTag, MultiplicityFn, NameTemplate, PairDatum, ParamSpec};
use crate::error::{Error, Result};
use crate::rootsys::Family;

const HEADER: &str = "format = srep-pairs 1";
const FIELDS: [&str; 10] = [
    "g", "k", "alias", "type", "rank", "params", "mult", "flags", "dim_g", "dim_k",
];

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Strips a trailing `#` comment.
fn content(line: &str) -> &str {
    line.split_once('#').map_or(line, |(c, _)| c).trim()
}

#[derive(Default)]
struct Block {
    start: usize,
    fields: Vec<(usize, String, String)>,
}

pub(super) fn parse(text: &str) -> Result<Vec<PairDatum>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, content(l)))
        .filter(|(_, l)| !l.is_empty());
    match lines.next() {
        Some((_, HEADER)) => {}
        Some((no, other)) => {
            return Err(parse_err(
                no,
                format!("expected `{HEADER}`, found `{other}`"),
            ))
        }
        None => return Err(parse_err(1, "empty pair database")),
    }
    let mut blocks: Vec<Block> = Vec::new();
    for (no, line) in lines {
        if line == "[pair]" {
            blocks.push(Block {
                start: no,
                ..Block::default()
            });
            continue;
        }
        let block = blocks
            .last_mut()
            .ok_or_else(|| parse_err(no, "field outside a [pair] block"))?;
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| parse_err(no, "expected `field = value`"))?;
        block
            .fields
            .push((no, key.trim().to_string(), value.trim().to_string()));
    }
    blocks.iter().map(parse_block).collect()
}

fn parse_block(block: &Block) -> Result<PairDatum> {
    let mut seen: Vec<&str> = Vec::new();
    for (no, key, _) in &block.fields {
        let pos = FIELDS
            .iter()
            .position(|f| f == key)
            .ok_or_else(|| parse_err(*no, format!("unknown field `{key}`")))?;
        if seen.contains(&FIELDS[pos]) {
            return Err(parse_err(*no, format!("duplicate field `{key}`")));
        }
        if seen
            .last()
            .is_some_and(|last| FIELDS.iter().position(|f| f == last).unwrap() > pos)
        {
            return Err(parse_err(*no, format!("field `{key}` is out of order")));
        }
        seen.push(FIELDS[pos]);
    }
    let get = |name: &str| -> Result<(usize, &str)> {
        block
            .fields
            .iter()
            .find(|(_, k, _)| k == name)
            .map(|(no, _, v)| (*no, v.as_str()))
            .ok_or_else(|| parse_err(block.start, format!("missing field `{name}`")))
    };
    let at = |no: usize| move |e: Error| parse_err(no, e.to_string());

    let (no, g) = get("g")?;
    let g = NameTemplate::parse(g).map_err(at(no))?;
    let (no, k) = get("k")?;
    let k = NameTemplate::parse(k).map_err(at(no))?;
    let aliases = match get("alias") {
        Ok((_, v)) => v.split(',').map(|a| a.trim().to_string()).collect(),
        Err(_) => Vec::new(),
    };
    let (no, family) = get("type")?;
    let family: Family = family.parse().map_err(at(no))?;
    let (no, rank) = get("rank")?;
    let rank = Expr::parse(rank).map_err(at(no))?;
    let (no, params) = get("params")?;
    let params = parse_params(params).map_err(at(no))?;
    let (no, mult) = get("mult")?;
    let mult = parse_mult(mult).map_err(at(no))?;
    let (no, flags) = get("flags")?;
    let flags = parse_flags(flags).map_err(at(no))?;
    let (no, dim_g) = get("dim_g")?;
    let dim_g = Expr::parse(dim_g).map_err(at(no))?;
    let (no, dim_k) = get("dim_k")?;
    let dim_k = Expr::parse(dim_k).map_err(at(no))?;

    let used_p = [&rank, &dim_g, &dim_k].iter().any(|e| e.uses_p())
        || mult.entries().iter().any(|(_, e)| e.uses_p());
    let used_n = [&dim_g, &dim_k].iter().any(|e| e.uses_n())
        || mult.entries().iter().any(|(_, e)| e.uses_n());
    if used_p != params.p_min.is_some() || used_n != params.n_min.is_some() {
        return Err(parse_err(
            block.start,
            "params do not match the variables used by the expressions",
        ));
    }
    if family.fixed_rank().is_some() && params.p_min.is_some() {
        return Err(parse_err(
            block.start,
            format!("type {family} has fixed rank"),
        ));
    }

    Ok(PairDatum {
        key: format!("{}|{}", g.symbolic(), k.symbolic()),
        g,
        k,
        aliases,
        family,
        rank,
        params,
        mult,
        flags,
        dim_g,
        dim_k,
    })
}

fn parse_params(s: &str) -> Result<ParamSpec> {
    let mut spec = ParamSpec::default();
    if s == "none" {
        return Ok(spec);
    }
    for part in s.split(';') {
        let (var, min) = part
            .split_once(">=")
            .ok_or_else(|| Error::malformed(part, "expected `var >= value`"))?;
        let min: i64 = min
            .trim()
            .parse()
            .map_err(|_| Error::malformed(part, "bound is not an integer"))?;
        let slot = match var.trim() {
            "p" => &mut spec.p_min,
            "n" => &mut spec.n_min,
            other => return Err(Error::malformed(other, "unknown parameter")),
        };
        if slot.replace(min).is_some() {
            return Err(Error::malformed(part, "parameter constrained twice"));
        }
    }
    Ok(spec)
}

fn parse_mult(s: &str) -> Result<MultiplicityFn> {
    let entries = s
        .split(';')
        .map(|part| {
            let (tag, value) = part
                .split_once(':')
                .ok_or_else(|| Error::malformed(part, "expected `tag: value`"))?;
            Ok((tag.trim().parse::<MultTag>()?, Expr::parse(value.trim())?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiplicityFn::new(entries))
}

fn parse_flags(s: &str) -> Result<BTreeSet<Flag>> {
    if s == "none" {
        return Ok(BTreeSet::new());
    }
    s.split(',').map(|f| f.trim().parse()).collect()
}

pub(super) fn write<'a>(pairs: impl Iterator<Item = &'a PairDatum>) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    for d in pairs {
        out.push_str("\n[pair]\n");
        let flags = if d.flags.is_empty() {
            "none".to_string()
        } else {
            d.flags
                .iter()
                .map(|f| f.as_str())
                .collect::<Vec<_>>()
                .join(", ")
        };
        let _ = writeln!(out, "g = {}", d.g.raw());
        let _ = writeln!(out, "k = {}", d.k.raw());
        if !d.aliases.is_empty() {
            let _ = writeln!(out, "alias = {}", d.aliases.join(", "));
        }
        let _ = writeln!(out, "type = {}", d.family);
        let _ = writeln!(out, "rank = {}", d.rank);
        let _ = writeln!(out, "params = {}", d.params);
        let _ = writeln!(out, "mult = {}", d.mult);
        let _ = writeln!(out, "flags = {flags}");
        let _ = writeln!(out, "dim_g = {}", d.dim_g);
        let _ = writeln!(out, "dim_k = {}", d.dim_k);
    }
    out
}
