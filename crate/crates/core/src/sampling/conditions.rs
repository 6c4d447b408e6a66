use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::grid::{BinaryImage, GreyImage, Point, Sieve};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionCheck {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub checks: Vec<ConditionCheck>,
    pub warnings: Vec<String>,
}

impl ConditionReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, id: &str) -> Option<&ConditionCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "fail" };
            write!(f, "CONDITION {} {} {}", c.id, status, c.name)?;
            if let Some(w) = &c.witness {
                write!(f, " witness {w}")?;
            }
            writeln!(f)?;
        }
        for w in &self.warnings {
            writeln!(f, "WARNING {w}")?;
        }
        Ok(())
    }
}

fn check(id: &'static str, name: &'static str, witness: Option<String>) -> ConditionCheck {
    ConditionCheck {
        id,
        name,
        passed: witness.is_none(),
        witness,
    }
}

// Both lattice conditions follow from S being a subgroup d Z^N.
fn lattice_checks() -> [ConditionCheck; 2] {
    [
        check("I", "S+S=S", None),
        check("II", "S=-S", None),
    ]
}

fn meets_only_at_origin(k: &BinaryImage, s: &Sieve) -> Option<String> {
    let origin = Point::origin(k.dim());
    if !k.contains(&origin) {
        return Some("origin not in K".to_string());
    }
    k.iter()
        .find(|p| !p.is_origin() && s.contains(p))
        .map(|p| p.to_string())
}

fn symmetric(k: &BinaryImage) -> Option<String> {
    k.iter().find(|p| !k.contains(&-p)).map(|p| p.to_string())
}

/// `a in K_b => K_a ∩ K_b ∩ S ≠ ∅` for all `a, b`. Translating both by a
/// sieve point preserves the condition, so `b` only needs to range over one
/// period cell of `S`.
fn overlap(k: &BinaryImage, s: &Sieve) -> Option<String> {
    let kpoints: Vec<Point> = k.iter().collect();
    for b in s.period_cell().points() {
        for u in &kpoints {
            let a = &b + u;
            let hit = kpoints.iter().any(|v| {
                let z = &b + v;
                s.contains(&z) && k.contains(&(&z - &a))
            });
            if !hit {
                return Some(format!("a={a} b={b}"));
            }
        }
    }
    None
}

/// Residue classes of `E^N / S` missed by `K`, i.e. holes of `S (+) K`.
fn coverage_gap(k: &BinaryImage, s: &Sieve) -> Option<Point> {
    let d = s.spacing();
    let reached: BTreeSet<Vec<i64>> = k
        .iter()
        .map(|p| p.coords().iter().zip(d).map(|(c, d)| c.rem_euclid(*d)).collect())
        .collect();
    s.period_cell()
        .points()
        .find(|r| !reached.contains(r.coords()))
}

fn dims_agree(k_dim: usize, s: &Sieve) -> Option<ConditionReport> {
    (k_dim != s.dim()).then(|| ConditionReport {
        checks: vec![check(
            "I",
            "S+S=S",
            Some(format!("sieve has dimension {}, K has {}", s.dim(), k_dim)),
        )],
        warnings: Vec::new(),
    })
}

fn coverage_warning(k: &BinaryImage, s: &Sieve) -> Vec<String> {
    coverage_gap(k, s)
        .map(|r| format!("S(+)K does not cover E^N: residue class of {r} is missed"))
        .into_iter()
        .collect()
}

/// Conditions I-V of the binary sampling theorem.
pub fn validate_binary_conditions(k: &BinaryImage, s: &Sieve) -> ConditionReport {
    if let Some(r) = dims_agree(k.dim(), s) {
        return r;
    }
    let mut checks = lattice_checks().to_vec();
    checks.push(check("III", "K∩S={0}", meets_only_at_origin(k, s)));
    checks.push(check("IV", "K=K^", symmetric(k)));
    checks.push(check("V", "a∈K_b=>K_a∩K_b∩S≠∅", overlap(k, s)));
    ConditionReport {
        checks,
        warnings: coverage_warning(k, s),
    }
}

/// Conditions I-VII of the grey-value sampling theorem.
pub fn validate_grey_conditions(k: &GreyImage, s: &Sieve) -> ConditionReport {
    if let Some(r) = dims_agree(k.dim(), s) {
        return r;
    }
    let kd = k.domain();
    let mut checks = lattice_checks().to_vec();
    checks.push(check("III", "K∩S={0}", meets_only_at_origin(&kd, s)));
    checks.push(check("IV", "a∈K_b=>K_a∩K_b∩S≠∅", overlap(&kd, s)));
    let asym = k
        .iter()
        .find(|(p, v)| k.get(&-p) != Some(*v))
        .map(|(p, v)| {
            let mirrored = k.get(&-&p).map_or("-".to_string(), |w| w.to_string());
            format!("k{p}={v} k{}={mirrored}", -&p)
        });
    checks.push(check("V", "k=k^", asym));
    let mut triangle = None;
    'outer: for (a, ka) in k.iter() {
        for (b, kb) in k.iter() {
            if let Some(kab) = k.get(&(&a - &b)) {
                if ka > kab + kb {
                    triangle = Some(format!("a={a} b={b} k(a)={ka} k(a-b)+k(b)={}", kab + kb));
                    break 'outer;
                }
            }
        }
    }
    checks.push(check("VI", "k(a)<=k(a-b)+k(b)", triangle));
    let centre = match k.get(&Point::origin(k.dim())) {
        Some(0) => None,
        Some(v) => Some(format!("k(0)={v}")),
        None => Some("origin not in K".to_string()),
    };
    checks.push(check("VII", "k(0)=0", centre));
    ConditionReport {
        checks,
        warnings: coverage_warning(&kd, s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_morph::centered_box;

    #[test]
    fn box3_passes_with_spacing_two() {
        let r = validate_binary_conditions(&centered_box(2, 1), &Sieve::new(&[2, 2]).unwrap());
        assert!(r.all_pass(), "{r}");
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn box5_fails_condition_three() {
        let r = validate_binary_conditions(&centered_box(2, 2), &Sieve::new(&[2, 2]).unwrap());
        let iii = r.check("III").unwrap();
        assert!(!iii.passed);
        assert!(iii.witness.as_deref().unwrap().contains("2"));
    }

    #[test]
    fn box5_with_spacing_three_passes() {
        let r = validate_binary_conditions(&centered_box(2, 2), &Sieve::new(&[3, 3]).unwrap());
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn singleton_fails_overlap_and_coverage() {
        let k = BinaryImage::from_points(2, [Point::from([0, 0])]).unwrap();
        let r = validate_binary_conditions(&k, &Sieve::new(&[2, 2]).unwrap());
        assert!(r.check("III").unwrap().passed);
        assert!(r.check("IV").unwrap().passed);
        assert!(!r.check("V").unwrap().passed);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn nonzero_centre_fails_seven() {
        let mut pixels: Vec<(Point, u32)> = centered_box(2, 1).iter().map(|p| (p, 0)).collect();
        for (p, v) in pixels.iter_mut() {
            if p.is_origin() {
                *v = 1;
            }
        }
        let k = GreyImage::from_pixels(2, 255, pixels).unwrap();
        let r = validate_grey_conditions(&k, &Sieve::new(&[2, 2]).unwrap());
        assert!(!r.check("VII").unwrap().passed);
        assert!(!r.check("VI").unwrap().passed);
        assert!(r.check("V").unwrap().passed);
    }

    #[test]
    fn render_lists_every_condition() {
        let r = validate_binary_conditions(&centered_box(2, 1), &Sieve::new(&[2, 2]).unwrap());
        let text = r.render();
        assert_eq!(text.lines().count(), 5);
        assert!(text.starts_with("CONDITION I pass"));
    }
}
