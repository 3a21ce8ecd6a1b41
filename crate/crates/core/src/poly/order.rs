//! Monomial orders.
//!
//! Every order acts on an explicit list of variable indices, listed from the
//! highest priority to the lowest. Block orders compare the front block
//! first and fall back to the back block, so they eliminate the front
//! variables.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MonomialOrder {
    Lex {
        vars: Vec<usize>,
    },
    DegRevLex {
        vars: Vec<usize>,
    },
    /// Weighted degree on `vars`, ties broken by `tie` (which must act on
    /// the same variables).
    Weighted {
        vars: Vec<usize>,
        weights: Vec<u64>,
        tie: Box<MonomialOrder>,
    },
    Block {
        front: Box<MonomialOrder>,
        back: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex {
            vars: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder::DegRevLex {
            vars: (0..nvars).collect(),
        }
    }

    /// Weighted degree with weights `weights[i]` on variable `i`, refined by
    /// degrevlex in index order.
    pub fn weighted_degrevlex(weights: &[u64]) -> Self {
        let vars: Vec<usize> = (0..weights.len()).collect();
        MonomialOrder::Weighted {
            vars: vars.clone(),
            weights: weights.to_vec(),
            tie: Box::new(MonomialOrder::DegRevLex { vars }),
        }
    }

    /// Block order eliminating `front` (degrevlex inside both blocks).
    pub fn elimination(front: &[usize], nvars: usize) -> Self {
        let back: Vec<usize> = (0..nvars).filter(|v| !front.contains(v)).collect();
        MonomialOrder::Block {
            front: Box::new(MonomialOrder::DegRevLex {
                vars: front.to_vec(),
            }),
            back: Box::new(MonomialOrder::DegRevLex { vars: back }),
        }
    }

    /// Looks up an order by name over `nvars` variables in index order.
    pub fn by_name(name: &str, nvars: usize) -> Result<Self> {
        match name {
            "lex" => Ok(Self::lex(nvars)),
            "degrevlex" | "grevlex" | "drl" => Ok(Self::degrevlex(nvars)),
            other => Err(Error::invalid(format!("unknown monomial order {other:?}"))),
        }
    }

    /// Variables this order looks at, in priority order.
    pub fn vars(&self) -> Vec<usize> {
        match self {
            MonomialOrder::Lex { vars }
            | MonomialOrder::DegRevLex { vars }
            | MonomialOrder::Weighted { vars, .. } => vars.clone(),
            MonomialOrder::Block { front, back } => {
                let mut v = front.vars();
                v.extend(back.vars());
                v
            }
        }
    }

    /// Checks that the order is a total monomial order on `nvars` variables.
    pub fn validate(&self, nvars: usize) -> Result<()> {
        let mut seen = self.vars();
        seen.sort_unstable();
        if seen != (0..nvars).collect::<Vec<_>>() {
            return Err(Error::invalid(format!(
                "order {self} does not cover each of {nvars} variables exactly once"
            )));
        }
        self.validate_inner()
    }

    fn validate_inner(&self) -> Result<()> {
        match self {
            MonomialOrder::Lex { .. } | MonomialOrder::DegRevLex { .. } => Ok(()),
            MonomialOrder::Weighted { vars, weights, tie } => {
                if weights.len() != vars.len() || weights.contains(&0) {
                    return Err(Error::invalid("weights must be positive, one per variable"));
                }
                let mut a = vars.clone();
                let mut b = tie.vars();
                a.sort_unstable();
                b.sort_unstable();
                if a != b {
                    return Err(Error::invalid(
                        "tie-break order must use the same variables",
                    ));
                }
                tie.validate_inner()
            }
            MonomialOrder::Block { front, back } => {
                front.validate_inner()?;
                back.validate_inner()
            }
        }
    }

    /// `Greater` means `a` is the larger monomial.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex { vars } => {
                for &v in vars {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex { vars } => {
                let da: u64 = vars.iter().map(|&v| a.exp(v) as u64).sum();
                let db: u64 = vars.iter().map(|&v| b.exp(v) as u64).sum();
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    o => return o,
                }
                for &v in vars.iter().rev() {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Weighted { vars, weights, tie } => {
                let wa: u64 = vars
                    .iter()
                    .zip(weights)
                    .map(|(&v, &w)| a.exp(v) as u64 * w)
                    .sum();
                let wb: u64 = vars
                    .iter()
                    .zip(weights)
                    .map(|(&v, &w)| b.exp(v) as u64 * w)
                    .sum();
                wa.cmp(&wb).then_with(|| tie.cmp(a, b))
            }
            MonomialOrder::Block { front, back } => front.cmp(a, b).then_with(|| back.cmp(a, b)),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(vars: &[usize]) -> String {
            vars.iter()
                .map(|v| format!("x{}", v + 1))
                .collect::<Vec<_>>()
                .join(">")
        }
        match self {
            MonomialOrder::Lex { vars } => write!(f, "lex({})", list(vars)),
            MonomialOrder::DegRevLex { vars } => write!(f, "degrevlex({})", list(vars)),
            MonomialOrder::Weighted { weights, tie, .. } => {
                let w: Vec<String> = weights.iter().map(|w| w.to_string()).collect();
                write!(f, "weighted[{}]/{}", w.join(","), tie)
            }
            MonomialOrder::Block { front, back } => write!(f, "block({front} | {back})"),
        }
    }
}
