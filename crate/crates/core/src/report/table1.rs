use std::collections::BTreeMap;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use super::Tabular;
use crate::error::{Error, Result};
use crate::orbits::{self, OrbitSpec};
use crate::pairdb::{Expr, PairDatum, PairDb, Params};

/// Expected table, symbolic rows followed by instantiations over
/// `p` in 2..=6 and `n` in 1..=4.
pub const EXPECTED_TABLE1: &str = include_str!("table1.expected");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Symbolic,
    Numeric,
}

/// One row: a degenerate orbit through a long root, with its dimension
/// `l`, Gauss rank `r` and degeneracy `l - r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub form: Form,
    #[serde(rename = "type")]
    pub rstype: String,
    pub rank: String,
    pub g: String,
    pub k: String,
    pub p: Option<i64>,
    pub n: Option<i64>,
    pub l: String,
    pub r: String,
    #[serde(rename = "l-r")]
    pub degeneracy: i64,
}

impl Tabular for Table1Row {
    fn headers() -> Vec<&'static str> {
        vec!["form", "type", "rank", "g", "k", "p", "n", "l", "r", "l-r"]
    }

    fn cells(&self) -> Vec<String> {
        let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            match self.form {
                Form::Symbolic => "symbolic".into(),
                Form::Numeric => "numeric".into(),
            },
            self.rstype.clone(),
            self.rank.clone(),
            self.g.clone(),
            self.k.clone(),
            opt(self.p),
            opt(self.n),
            self.l.clone(),
            self.r.clone(),
            self.degeneracy.to_string(),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Grid {
    pub p: RangeInclusive<i64>,
    pub n: RangeInclusive<i64>,
}

impl Default for Table1Grid {
    fn default() -> Self {
        Table1Grid { p: 2..=6, n: 1..=4 }
    }
}

impl Table1Grid {
    fn params_for(&self, d: &PairDatum) -> Result<Vec<Params>> {
        if self.p.is_empty() || self.n.is_empty() {
            return Err(Error::malformed(
                format!("p {:?}, n {:?}", self.p, self.n),
                "empty parameter range",
            ));
        }
        Ok(d.param_grid(*self.p.end(), *self.n.end())
            .into_iter()
            .filter(|x| x.p.is_none_or(|p| self.p.contains(&p)))
            .filter(|x| x.n.is_none_or(|n| self.n.contains(&n)))
            .collect())
    }
}

/// `(l, r)` of the orbit through the highest root.
fn long_orbit(d: &std::sync::Arc<PairDatum>, params: Params) -> Result<(u64, u64)> {
    let pair = d.instantiate(params)?;
    let rep = orbits::classify_spec(&pair, &OrbitSpec::Long)?;
    if !rep.degenerate {
        return Err(Error::invariant(format!(
            "{}: orbit through the highest root is not degenerate",
            d.key()
        )));
    }
    Ok((rep.l, rep.r))
}

pub fn table1_numeric(db: &PairDb, grid: &Table1Grid) -> Result<Vec<Table1Row>> {
    let mut out = Vec::new();
    for d in db.pairs() {
        for params in grid.params_for(d)? {
            let (p, n) = d.check_params(params)?;
            let (l, r) = long_orbit(d, params)?;
            out.push(Table1Row {
                form: Form::Numeric,
                rstype: d.family().to_string(),
                rank: d.rank().eval(p, n)?.to_string(),
                g: d.g().instantiate(p, n)?,
                k: d.k().instantiate(p, n)?,
                p: params.p,
                n: params.n,
                l: l.to_string(),
                r: r.to_string(),
                degeneracy: l as i64 - r as i64,
            });
        }
    }
    Ok(out)
}

/// `a + b p + c n`, written `4p+2n-7`.
fn render_linear(a: i64, b: i64, c: i64) -> String {
    let mut out = String::new();
    for (coef, var) in [(b, "p"), (c, "n"), (a, "")] {
        if coef == 0 {
            continue;
        }
        if coef < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if coef.abs() != 1 || var.is_empty() {
            out.push_str(&coef.abs().to_string());
        }
        out.push_str(var);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Fits `l` and `r` as affine functions of the parameters from computed
/// values, and confirms the fit at further points.
fn fit(d: &std::sync::Arc<PairDatum>) -> Result<(String, String)> {
    let spec = d.param_spec();
    let at = |dp: i64, dn: i64| -> Result<(i64, i64)> {
        let params = Params {
            p: spec.p_min.map(|p| p + dp),
            n: spec.n_min.map(|n| n + dn),
        };
        let (l, r) = long_orbit(d, params)?;
        Ok((l as i64, r as i64))
    };
    let p0 = spec.p_min.unwrap_or(0);
    let n0 = spec.n_min.unwrap_or(0);
    let base = at(0, 0)?;
    let bp = if spec.p_min.is_some() {
        at(1, 0)?
    } else {
        base
    };
    let bn = if spec.n_min.is_some() {
        at(0, 1)?
    } else {
        base
    };
    let coeffs = |pick: fn((i64, i64)) -> i64| {
        let b = pick(bp) - pick(base);
        let c = pick(bn) - pick(base);
        (pick(base) - b * p0 - c * n0, b, c)
    };
    let (l, r) = (coeffs(|x| x.0), coeffs(|x| x.1));
    for (dp, dn) in [(2, 2), (3, 1), (4, 3)] {
        let dp = if spec.p_min.is_some() { dp } else { 0 };
        let dn = if spec.n_min.is_some() { dn } else { 0 };
        let (vl, vr) = at(dp, dn)?;
        let (p, n) = (p0 + dp, n0 + dn);
        if vl != l.0 + l.1 * p + l.2 * n || vr != r.0 + r.1 * p + r.2 * n {
            return Err(Error::invariant(format!(
                "{}: orbit data is not affine in the parameters",
                d.key()
            )));
        }
    }
    Ok((render_linear(l.0, l.1, l.2), render_linear(r.0, r.1, r.2)))
}

pub fn table1_symbolic(db: &PairDb) -> Result<Vec<Table1Row>> {
    db.pairs()
        .iter()
        .map(|d| {
            let (l, r) = fit(d)?;
            let degeneracy = Expr::parse(&l)?.eval(0, 0)? - Expr::parse(&r)?.eval(0, 0)?;
            Ok(Table1Row {
                form: Form::Symbolic,
                rstype: d.family().to_string(),
                rank: d.rank().to_string(),
                g: d.g().symbolic(),
                k: d.k().symbolic(),
                p: None,
                n: None,
                l,
                r,
                degeneracy,
            })
        })
        .collect()
}

pub fn parse_rows(text: &str) -> Result<Vec<Table1Row>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    rdr.deserialize().map(|r| r.map_err(Error::from)).collect()
}

/// Outcome of comparing computed rows with the expected table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Check {
    pub symbolic_rows: usize,
    pub numeric_rows: usize,
    pub mismatches: Vec<String>,
}

impl Table1Check {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Formulas agree when they evaluate equally over a grid of parameters.
fn same_formula(a: &str, b: &str) -> bool {
    let (Ok(a), Ok(b)) = (Expr::parse(a), Expr::parse(b)) else {
        return a == b;
    };
    (0..10).all(|p| (0..6).all(|n| a.eval(p, n).ok() == b.eval(p, n).ok()))
}

type RowKey = (Form, String, String, String, Option<i64>, Option<i64>);

fn key(r: &Table1Row) -> RowKey {
    (r.form, r.rstype.clone(), r.g.clone(), r.k.clone(), r.p, r.n)
}

/// Compares computed symbolic rows and numeric rows over the default grid
/// with `expected` (CSV, same columns as the CSV output).
pub fn check_table1(db: &PairDb, expected: &str) -> Result<Table1Check> {
    let mut computed = table1_symbolic(db)?;
    computed.extend(table1_numeric(db, &Table1Grid::default())?);
    let expected = parse_rows(expected)?;
    let want: BTreeMap<RowKey, &Table1Row> = expected.iter().map(|r| (key(r), r)).collect();
    let got: BTreeMap<RowKey, &Table1Row> = computed.iter().map(|r| (key(r), r)).collect();

    let mut check = Table1Check {
        symbolic_rows: computed.iter().filter(|r| r.form == Form::Symbolic).count(),
        numeric_rows: computed.iter().filter(|r| r.form == Form::Numeric).count(),
        mismatches: Vec::new(),
    };
    let label = |r: &Table1Row| {
        let params = Params { p: r.p, n: r.n };
        format!("{} {}|{} {params}", r.rstype, r.g, r.k)
            .trim_end()
            .to_string()
    };
    for (k, w) in &want {
        let Some(g) = got.get(k) else {
            check.mismatches.push(format!("missing row {}", label(w)));
            continue;
        };
        let agree = match k.0 {
            Form::Symbolic => {
                w.rank == g.rank
                    && same_formula(&w.l, &g.l)
                    && same_formula(&w.r, &g.r)
                    && w.degeneracy == g.degeneracy
            }
            Form::Numeric => w == g,
        };
        if !agree {
            check.mismatches.push(format!(
                "{}: expected rank {} l {} r {} l-r {}, computed rank {} l {} r {} l-r {}",
                label(w),
                w.rank,
                w.l,
                w.r,
                w.degeneracy,
                g.rank,
                g.l,
                g.r,
                g.degeneracy
            ));
        }
    }
    for (k, g) in &got {
        if !want.contains_key(k) {
            check
                .mismatches
                .push(format!("unexpected row {}", label(g)));
        }
    }
    Ok(check)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_rendering() {
        assert_eq!(render_linear(-7, 4, 2), "4p+2n-7");
        assert_eq!(render_linear(24, 0, 0), "24");
        assert_eq!(render_linear(0, 1, 0), "p");
        assert_eq!(render_linear(1, -1, 0), "-p+1");
        assert_eq!(render_linear(0, 0, 0), "0");
    }

    #[test]
    fn formula_equivalence() {
        assert!(same_formula("2(2p-1)", "4p-2"));
        assert!(!same_formula("2(2p-1)", "4p-1"));
    }

    #[test]
    fn golden_table_matches() {
        let db = PairDb::embedded().unwrap();
        let check = check_table1(&db, EXPECTED_TABLE1).unwrap();
        assert!(check.passed(), "{:#?}", check.mismatches);
        assert_eq!(check.symbolic_rows, 31);
    }

    #[test]
    fn tampered_table_is_reported() {
        let db = PairDb::embedded().unwrap();
        let bad = EXPECTED_TABLE1.replace(
            "numeric,G2,2,g2,so(4),,,5,4,1",
            "numeric,G2,2,g2,so(4),,,6,4,2",
        );
        let check = check_table1(&db, &bad).unwrap();
        assert_eq!(check.mismatches.len(), 1);
    }

    #[test]
    fn example_rows() {
        let db = PairDb::embedded().unwrap();
        let rows = table1_numeric(&db, &Table1Grid::default()).unwrap();
        let find = |g: &str, k: &str, p: Option<i64>, n: Option<i64>| {
            rows.iter()
                .find(|r| r.g == g && r.k == k && r.p == p && r.n == n)
                .map(|r| (r.l.clone(), r.r.clone(), r.degeneracy))
                .unwrap()
        };
        assert_eq!(find("g2", "so(4)", None, None), ("5".into(), "4".into(), 1));
        assert_eq!(
            find("su(5)", "su(2)+su(3)+r", Some(2), Some(1)),
            ("7".into(), "6".into(), 1)
        );
        assert_eq!(
            find("sp(6)", "sp(3)+sp(3)", Some(3), None),
            ("19".into(), "16".into(), 3)
        );
        let (lo, hi) = (3, 2);
        assert!(table1_numeric(
            &db,
            &Table1Grid {
                p: lo..=hi,
                n: 1..=4
            }
        )
        .is_err());
    }
}
