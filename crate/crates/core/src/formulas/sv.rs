use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::{shift_up, LexsegSpec};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarSet};

/// Sets `A_1, .., A_r` of monomials of `I`; `g_i` is the sum over `A_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvCertificate {
    pub sets: Vec<Vec<Monomial>>,
}

impl SvCertificate {
    pub fn len(&self) -> usize {
        self.sets.len()
    }
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Groups `(key, monomial)` pairs into `A_{key+1}`; keys past the last
    /// used one are never created, holes become empty sets.
    pub(crate) fn from_keyed(n: usize, entries: impl IntoIterator<Item = (usize, VarSet)>) -> SvCertificate {
        let mut sets: Vec<Vec<Monomial>> = Vec::new();
        for (k, w) in entries {
            if sets.len() <= k {
                sets.resize_with(k + 1, Vec::new);
            }
            sets[k].push(w.to_monomial(n));
        }
        SvCertificate { sets }
    }

    /// Moves `x_t` to `x_{t+k}` in `n` variables.
    pub(crate) fn lifted(self, n: usize, k: usize) -> SvCertificate {
        let sets = self
            .sets
            .into_iter()
            .map(|a| a.into_iter().map(|m| shift_up(m.support(), k).to_monomial(n)).collect())
            .collect();
        SvCertificate { sets }
    }
}

impl fmt::Display for SvCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, a) in self.sets.iter().enumerate() {
            write!(f, "A{} = {{", k + 1)?;
            for (t, m) in a.iter().enumerate() {
                if t > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{m}")?;
            }
            f.write_str("}\n")?;
        }
        Ok(())
    }
}

/// First condition a certificate fails; set indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SvViolation {
    NotInIdeal { set: usize, m: Monomial },
    EmptySet { set: usize },
    /// SV1: `|A_1| = 1`.
    FirstSetSize { size: usize },
    /// SV2: a minimal generator outside every `A_i`.
    Uncovered { m: Monomial },
    /// SV3: no `m'` in an earlier set divides `m1 m2`.
    NoWitness { set: usize, m1: Monomial, m2: Monomial },
}

impl fmt::Display for SvViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SvViolation::NotInIdeal { set, m } => write!(f, "{m} in A{set} is not in the ideal"),
            SvViolation::EmptySet { set } => write!(f, "A{set} is empty"),
            SvViolation::FirstSetSize { size } => write!(f, "SV1: |A1| = {size}"),
            SvViolation::Uncovered { m } => write!(f, "SV2: generator {m} lies in no A_i"),
            SvViolation::NoWitness { set, m1, m2 } => {
                write!(f, "SV3: no earlier monomial divides {m1}*{m2} (both in A{set})")
            }
        }
    }
}

pub fn sv_verify(cert: &SvCertificate, i: &MonomialIdeal) -> core::result::Result<(), SvViolation> {
    for (k, a) in cert.sets.iter().enumerate() {
        if a.is_empty() {
            return Err(SvViolation::EmptySet { set: k + 1 });
        }
        if let Some(m) = a.iter().find(|m| !i.contains(m)) {
            return Err(SvViolation::NotInIdeal { set: k + 1, m: m.clone() });
        }
    }
    match cert.sets.first() {
        Some(a) if a.len() == 1 => {}
        a => return Err(SvViolation::FirstSetSize { size: a.map_or(0, Vec::len) }),
    }
    if let Some(g) = i.gens().iter().find(|g| !cert.sets.iter().any(|a| a.contains(g))) {
        return Err(SvViolation::Uncovered { m: g.clone() });
    }
    for k in 1..cert.sets.len() {
        let a = &cert.sets[k];
        for (s, m1) in a.iter().enumerate() {
            for m2 in &a[s + 1..] {
                let prod = m1.mul(m2);
                if !cert.sets[..k].iter().flatten().any(|w| w.divides(&prod)) {
                    return Err(SvViolation::NoWitness { set: k + 1, m1: m1.clone(), m2: m2.clone() });
                }
            }
        }
    }
    Ok(())
}

/// Certificate from the tableau families: every edge ideal, and the degree-3
/// families with depth 4 or `i_2 - j_3 + 3`.  Leading variables not dividing
/// `u` are regular and are shifted out first.  The result is verified before
/// it is returned.
pub fn sv_construct(spec: &LexsegSpec) -> Result<SvCertificate> {
    let k = spec.u.min().expect("nonempty") - 1;
    let reduced = LexsegSpec::new(spec.n - k, super::shift_down(spec.u, k), super::shift_down(spec.v, k))?;
    let cert = match spec.q() {
        2 => super::edge::edge_certificate(&reduced)?,
        3 => super::degree3::degree3_certificate(&reduced)?,
        q => return Err(Error::Domain(format!("no tableau construction in degree {q}"))),
    }
    .lifted(spec.n, k);
    sv_verify(&cert, &spec.ideal()?).map_err(|e| Error::Domain(format!("constructed certificate for {spec}: {e}")))?;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VarSet;

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(s, Some(n)).unwrap()
    }

    #[test]
    fn five_variable_example_verifies() {
        let i = MonomialIdeal::parse(5, &["x1*x2*x3", "x1*x4", "x1*x5", "x2*x4", "x2*x5", "x3*x4*x5"]).unwrap();
        let sets = [&["x1*x5"][..], &["x1*x4", "x2*x5"], &["x1*x2*x3", "x2*x4", "x3*x4*x5"]];
        let cert = SvCertificate { sets: sets.iter().map(|a| a.iter().map(|s| mono(5, s)).collect()).collect() };
        assert_eq!(sv_verify(&cert, &i), Ok(()));
        assert_eq!(cert.len(), 3);
    }

    #[test]
    fn violations_are_named() {
        let i = MonomialIdeal::parse(3, &["x1*x2", "x2*x3", "x1*x3"]).unwrap();
        let c = |sets: &[&[&str]]| SvCertificate {
            sets: sets.iter().map(|a| a.iter().map(|s| mono(3, s)).collect()).collect(),
        };
        assert!(matches!(
            sv_verify(&c(&[&["x1*x2", "x2*x3"], &["x1*x3"]]), &i),
            Err(SvViolation::FirstSetSize { size: 2 })
        ));
        assert!(matches!(sv_verify(&c(&[&["x1*x2"], &["x2*x3"]]), &i), Err(SvViolation::Uncovered { .. })));
        assert!(matches!(sv_verify(&c(&[&["x1"]]), &i), Err(SvViolation::NotInIdeal { set: 1, .. })));
        let j = MonomialIdeal::parse(6, &["x1*x2", "x3*x4", "x5*x6"]).unwrap();
        let bad = SvCertificate {
            sets: alloc::vec![alloc::vec![mono(6, "x1*x2")], alloc::vec![mono(6, "x3*x4"), mono(6, "x5*x6")]],
        };
        assert!(matches!(sv_verify(&bad, &j), Err(SvViolation::NoWitness { set: 2, .. })));
        assert_eq!(sv_verify(&c(&[&["x1*x2"], &["x1*x3", "x2*x3"]]), &i), Ok(()));
    }

    #[test]
    fn shifted_spec_lifts() {
        // x1 divides nothing: the certificate lives on x2..x6
        let spec = LexsegSpec::new(6, VarSet::from_indices([2, 4]), VarSet::from_indices([3, 5])).unwrap();
        let cert = sv_construct(&spec).unwrap();
        assert!(cert.sets.iter().flatten().all(|m| m.exp(1) == 0));
    }
}
