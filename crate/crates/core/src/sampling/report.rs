use std::fmt;

use serde::Serialize;

use crate::grid::{first_le_violation, BinaryImage, GreyImage, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PremiseUnmet,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PremiseUnmet => "premise-unmet",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The first violating position with both sides' values there.
///
/// `None` means the point is outside that side's domain. Binary relations
/// report membership as `Some(1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub x: Point,
    pub lhs: Option<u32>,
    pub rhs: Option<u32>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Option<u32>| v.map_or("-".to_string(), |v| v.to_string());
        write!(f, "witness x={} lhs={} rhs={}", self.x, show(self.lhs), show(self.rhs))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub predicate: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Passed only because the side that must be contained is empty.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub vacuous: bool,
}

impl RelationResult {
    pub fn pass(predicate: &str) -> Self {
        RelationResult {
            predicate: predicate.to_string(),
            status: Status::Pass,
            witness: None,
            vacuous: false,
        }
    }

    pub fn premise_unmet(predicate: &str) -> Self {
        RelationResult {
            predicate: predicate.to_string(),
            status: Status::PremiseUnmet,
            witness: None,
            vacuous: false,
        }
    }

    pub fn fail(predicate: &str, witness: Option<Witness>) -> Self {
        RelationResult {
            predicate: predicate.to_string(),
            status: Status::Fail,
            witness,
            vacuous: false,
        }
    }

    /// A pass that is vacuous when `empty` holds.
    pub fn pass_unless_empty(predicate: &str, empty: bool) -> Self {
        RelationResult {
            vacuous: empty,
            ..RelationResult::pass(predicate)
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }

    /// `RESULT <predicate> <status> [witness x=(..) lhs=.. rhs=..]`
    pub fn line(&self) -> String {
        match &self.witness {
            Some(w) => format!("RESULT {} {} {}", self.predicate, self.status, w),
            None => format!("RESULT {} {}", self.predicate, self.status),
        }
    }

    pub fn json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// Exact equality of domains and values.
pub fn grey_eq(name: &str, lhs: &GreyImage, rhs: &GreyImage) -> RelationResult {
    if lhs == rhs {
        return RelationResult::pass_unless_empty(name, lhs.is_empty());
    }
    let mut first: Option<Witness> = None;
    let mut consider = |x: Point| {
        let (a, b) = (lhs.get(&x), rhs.get(&x));
        if a != b && first.as_ref().is_none_or(|w| x < w.x) {
            first = Some(Witness { x, lhs: a, rhs: b });
        }
    };
    if let Some((p, _, _)) = first_le_violation(lhs, rhs) {
        consider(p);
    }
    if let Some((p, _, _)) = first_le_violation(rhs, lhs) {
        consider(p);
    }
    RelationResult::fail(name, first)
}

/// `lhs <= rhs` in the boundedness order.
pub fn grey_le(name: &str, lhs: &GreyImage, rhs: &GreyImage) -> RelationResult {
    match first_le_violation(lhs, rhs) {
        None => RelationResult::pass_unless_empty(name, lhs.is_empty()),
        Some((x, a, b)) => RelationResult::fail(
            name,
            Some(Witness {
                x,
                lhs: Some(a),
                rhs: b,
            }),
        ),
    }
}

fn member(a: &BinaryImage, p: &Point) -> Option<u32> {
    a.contains(p).then_some(1)
}

pub fn set_eq(name: &str, lhs: &BinaryImage, rhs: &BinaryImage) -> RelationResult {
    if lhs == rhs {
        return RelationResult::pass_unless_empty(name, lhs.is_empty());
    }
    let x = [lhs.first_outside(rhs), rhs.first_outside(lhs)]
        .into_iter()
        .flatten()
        .min()
        .expect("unequal sets differ somewhere");
    RelationResult::fail(
        name,
        Some(Witness {
            lhs: member(lhs, &x),
            rhs: member(rhs, &x),
            x,
        }),
    )
}

pub fn subset(name: &str, lhs: &BinaryImage, rhs: &BinaryImage) -> RelationResult {
    match lhs.first_outside(rhs) {
        None => RelationResult::pass_unless_empty(name, lhs.is_empty()),
        Some(x) => RelationResult::fail(
            name,
            Some(Witness {
                lhs: Some(1),
                rhs: None,
                x,
            }),
        ),
    }
}

/// `None` if every result passed (or is premise-unmet), else the first failure.
pub fn first_failure(results: &[RelationResult]) -> Option<&RelationResult> {
    results.iter().find(|r| r.is_fail())
}
