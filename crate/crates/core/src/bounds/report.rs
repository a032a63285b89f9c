use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::constructions::{construction2_size, q_size};
use crate::count::{binomial, elementary_symmetric};
use crate::error::{Error, Result};
use crate::graph::PatternGraph;

/// Pattern families with closed-form bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundPattern {
    Clique(usize),
    Path(usize),
    Cycle(usize),
}

impl BoundPattern {
    pub fn graph(&self) -> Result<PatternGraph> {
        match *self {
            BoundPattern::Clique(k) => Ok(PatternGraph::complete(k)),
            BoundPattern::Path(k) => Ok(PatternGraph::path(k)),
            BoundPattern::Cycle(k) => PatternGraph::cycle(k),
        }
    }
}

impl fmt::Display for BoundPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundPattern::Clique(k) => write!(f, "K{k}"),
            BoundPattern::Path(k) => write!(f, "P{k}"),
            BoundPattern::Cycle(k) => write!(f, "C{k}"),
        }
    }
}

impl FromStr for BoundPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadParams(format!("expected K<k>, P<k> or C<k>, got `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let k: usize = chars.as_str().parse().map_err(|_| bad())?;
        match head {
            'K' => Ok(BoundPattern::Clique(k)),
            'P' => Ok(BoundPattern::Path(k)),
            'C' => Ok(BoundPattern::Cycle(k)),
            _ => Err(bad()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(untagged)]
pub enum BoundValue {
    Exact(i64),
    Symbolic(String),
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(v) => write!(f, "{v}"),
            BoundValue::Symbolic(s) => f.write_str(s),
        }
    }
}

/// Lower bounds from constructions and upper bounds from the theorems, for
/// one parameter set.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub pattern: String,
    pub lower: BTreeMap<String, i64>,
    pub upper: BTreeMap<String, BoundValue>,
    /// Best lower bound equals the best numeric upper bound.
    pub exact: bool,
}

impl BoundReport {
    pub fn best_lower(&self) -> Option<i64> {
        self.lower.values().copied().max()
    }

    pub fn best_upper(&self) -> Option<i64> {
        upper_min(&self.upper)
    }

    /// `(side, name, value)` rows, lower bounds first.
    pub fn rows(&self) -> Vec<(&'static str, String, String)> {
        let mut rows: Vec<_> = self
            .lower
            .iter()
            .map(|(k, v)| ("lower", k.clone(), v.to_string()))
            .collect();
        rows.extend(self.upper.iter().map(|(k, v)| ("upper", k.clone(), v.to_string())));
        rows
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("side,name,value\n");
        for (side, name, value) in self.rows() {
            let value = if value.contains(',') {
                format!("\"{value}\"")
            } else {
                value
            };
            out.push_str(&format!("{side},{name},{value}\n"));
        }
        out
    }

    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let w = rows.iter().map(|(_, n, _)| n.len()).max().unwrap_or(0);
        let mut out = format!(
            "n = {}, r = {}, t = {}, pattern = {}\n",
            self.n, self.r, self.t, self.pattern
        );
        for (side, name, value) in rows {
            out.push_str(&format!("{side:<6} {name:<w$}  {value}\n"));
        }
        out.push_str(&format!("exact  {}\n", self.exact));
        out
    }
}

/// Edges of the Turán graph with `min(p, n)` parts.
fn turan_sizes(n: usize, p: usize) -> Vec<u64> {
    let p = p.min(n).max(1);
    (0..p).map(|i| (n / p + usize::from(i < n % p)) as u64).collect()
}

/// `(ex(n, K_k), ex(n, K_r, K_k))`, both attained by the Turán graph with
/// `k - 1` parts.
pub fn clique_extremal(n: usize, k: usize, r: usize) -> (u64, u64) {
    let sizes = turan_sizes(n, k - 1);
    (elementary_symmetric(&sizes, 2), elementary_symmetric(&sizes, r))
}

/// `(t-1) C(n,2) + max{ex(n,K_r,K_k) - (t-1) ex(n,K_k), ex(n,K_k)}`.
pub fn blue_red_bound(n: usize, k: usize, r: usize, t: usize) -> i64 {
    let (ex, exr) = clique_extremal(n, k, r);
    let tm = t as i64 - 1;
    tm * binomial(n as u64, 2) as i64 + (exr as i64 - tm * ex as i64).max(ex as i64)
}

/// Evaluates the closed-form bounds for `ex_r(n, ·)` of the given pattern at
/// multiplicity `t`.
pub fn theorem_bounds(n: usize, r: usize, t: usize, pattern: BoundPattern) -> Result<BoundReport> {
    if r < 2 || t == 0 || n < r {
        return Err(Error::BadParams(format!(
            "need 2 <= r <= n and t >= 1, got n = {n}, r = {r}, t = {t}"
        )));
    }
    let pairs = binomial(n as u64, 2) as i64;
    let tm = t as i64 - 1;
    let mut lower = BTreeMap::new();
    let mut upper = BTreeMap::new();
    match pattern {
        BoundPattern::Clique(k) => {
            if k < 2 {
                return Err(Error::BadParams(format!("clique size must be at least 2, got {k}")));
            }
            let (ex, exr) = clique_extremal(n, k, r);
            lower.insert("clique-count".into(), exr as i64);
            if r < k && k - 1 <= n {
                if let Ok(q) = q_size(n, k - 1, r, t) {
                    lower.insert("Q".into(), q as i64);
                }
            }
            upper.insert("blue-red".into(), BoundValue::Exact(blue_red_bound(n, k, r, t)));
            upper.insert(
                "pick-or-mark".into(),
                BoundValue::Exact(exr as i64 + ex as i64 + tm * pairs),
            );
        }
        BoundPattern::Path(k) | BoundPattern::Cycle(k) => {
            let is_path = matches!(pattern, BoundPattern::Path(_));
            if (is_path && k < 2) || (!is_path && k < 3) {
                return Err(Error::BadParams(format!("pattern {pattern} is too small")));
            }
            let need = 2 * (t - 1) * (r - 2) + if is_path { 2 } else { 1 };
            if r >= 3 && k >= need {
                if let Ok(size) = construction2_size(n, r, t) {
                    lower.insert("construction2".into(), size as i64);
                }
            }
            upper.insert(
                "pick-or-mark".into(),
                BoundValue::Symbolic(format!(
                    "{} + ex({n},K{r},{pattern}) + ex({n},{pattern})",
                    tm * pairs
                )),
            );
        }
    }
    let exact = matches!(
        (lower.values().copied().max(), upper_min(&upper)),
        (Some(lo), Some(hi)) if lo == hi
    );
    Ok(BoundReport {
        n,
        r,
        t,
        pattern: pattern.to_string(),
        lower,
        upper,
        exact,
    })
}

fn upper_min(upper: &BTreeMap<String, BoundValue>) -> Option<i64> {
    upper
        .values()
        .filter_map(|v| match v {
            BoundValue::Exact(x) => Some(*x),
            BoundValue::Symbolic(_) => None,
        })
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_report() {
        let rep = theorem_bounds(6, 3, 2, BoundPattern::Clique(4)).unwrap();
        assert_eq!(rep.upper["blue-red"], BoundValue::Exact(27));
        assert_eq!(rep.upper["pick-or-mark"], BoundValue::Exact(35));
        assert_eq!(rep.lower["Q"], 11);
        assert_eq!(rep.lower["clique-count"], 8);
        assert!(!rep.exact);
        assert!(rep.to_table().contains("blue-red"));
        assert!(rep.to_csv().starts_with("side,name,value\n"));
    }

    #[test]
    fn degenerate_t_one() {
        let rep = theorem_bounds(7, 3, 1, BoundPattern::Clique(4)).unwrap();
        let (ex, exr) = clique_extremal(7, 4, 3);
        assert_eq!(rep.upper["pick-or-mark"], BoundValue::Exact((exr + ex) as i64));
        assert_eq!(rep.lower["Q"], exr as i64);
    }

    #[test]
    fn path_report() {
        let rep = theorem_bounds(20, 3, 2, BoundPattern::Path(6)).unwrap();
        assert_eq!(rep.lower["construction2"], 171);
        assert!(matches!(rep.upper["pick-or-mark"], BoundValue::Symbolic(ref s) if s.starts_with("190 + ")));
        assert!(!rep.exact);
        let short = theorem_bounds(20, 3, 2, BoundPattern::Path(3)).unwrap();
        assert!(short.lower.is_empty());
    }

    #[test]
    fn pattern_parsing() {
        assert_eq!("K4".parse::<BoundPattern>().unwrap(), BoundPattern::Clique(4));
        assert_eq!("C5".parse::<BoundPattern>().unwrap(), BoundPattern::Cycle(5));
        assert!("X4".parse::<BoundPattern>().is_err());
        assert!("K".parse::<BoundPattern>().is_err());
    }
}
