//! Exact Buchberger-criterion certificate for `{F_j, G_{k,l}}` restricted to
//! generators whose `w` indices are bounded by `max_index`.
//!
//! Four families of identities are checked:
//!
//! * `S(F_{k+1}, F_{l+1}) = G_{k,l}` (cross-multiplied S-polynomial);
//! * `S(G_{k,l}, F_{l+1}) = y·w_l·F_{k+1}`, i.e. division by `F_{k+1}` leaves
//!   quotient `y·w_l` and remainder 0 (fraction-free S-polynomial);
//! * the remainder of the cross-multiplied `S(G_{k,l}, F_k)` after division
//!   by `F_{k+1}` equals `y·G_{k-1,l}`;
//! * every S-polynomial of two generators with non-coprime leading monomials
//!   has normal form 0.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::ideal::{
    cross_s_polynomial, divide, generator, generators_up_to, s_polynomial, GeneratorId, IdealError,
    Reducer,
};
use crate::poly::{Monomial, Polynomial, Variable};

pub const FF_IDENTITY: &str = "S(F_{k+1},F_{l+1}) = G_{k,l}";
pub const GF_TOP_IDENTITY: &str = "S(G_{k,l},F_{l+1}) = y*w_l*F_{k+1}";
pub const GF_LOW_IDENTITY: &str = "rem(S(G_{k,l},F_k), F_{k+1}) = y*G_{k-1,l}";
pub const PAIR_FF: &str = "NF(S(F_i,F_j)) = 0";
pub const PAIR_GF: &str = "NF(S(G_{k,l},F_j)) = 0";
pub const PAIR_GG: &str = "NF(S(G_{k,l},G_{m,n})) = 0";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub indices: Vec<u32>,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FamilyCount {
    pub checked: usize,
    pub passed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub max_index: u32,
    pub generators: usize,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub families: BTreeMap<String, FamilyCount>,
    pub all_pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertificateReport {
    pub entries: Vec<IdentityCheck>,
    pub summary: Summary,
}

fn gen(id: GeneratorId) -> Polynomial {
    generator(id).expect("ids are constructed valid")
}

fn check(identity: &str, indices: Vec<u32>, lhs: &Polynomial, rhs: &Polynomial) -> IdentityCheck {
    IdentityCheck {
        identity: identity.to_string(),
        indices,
        pass: lhs == rhs,
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    }
}

fn y_times(m: &[(u32, u32)]) -> Monomial {
    Monomial::new(0, 1, 0, m)
}

fn ff_identity(k: u32, l: u32) -> IdentityCheck {
    let s = cross_s_polynomial(&gen(GeneratorId::F(k + 1)), &gen(GeneratorId::F(l + 1))).expect("nonzero");
    check(FF_IDENTITY, vec![k, l], &s, &gen(GeneratorId::G(k, l)))
}

fn gf_top_identity(k: u32, l: u32) -> IdentityCheck {
    let s = s_polynomial(&gen(GeneratorId::G(k, l)), &gen(GeneratorId::F(l + 1))).expect("nonzero");
    let f = gen(GeneratorId::F(k + 1));
    let (q, r) = divide(&s, &f).expect("nonzero divisor");
    let expected_q = Polynomial::from(y_times(&[(l, 1)]));
    let mut c = check(GF_TOP_IDENTITY, vec![k, l], &s, &f.mul_monomial(&y_times(&[(l, 1)])));
    c.pass &= q == expected_q && r.is_zero();
    c
}

fn gf_low_identity(k: u32, l: u32) -> IdentityCheck {
    let s = cross_s_polynomial(&gen(GeneratorId::G(k, l)), &gen(GeneratorId::F(k))).expect("nonzero");
    let (_, r) = divide(&s, &gen(GeneratorId::F(k + 1))).expect("nonzero divisor");
    let expected = gen(GeneratorId::G(k - 1, l)).mul_monomial(&Monomial::var(Variable::Y));
    check(GF_LOW_IDENTITY, vec![k, l], &r, &expected)
}

fn id_indices(id: GeneratorId) -> Vec<u32> {
    match id {
        GeneratorId::F(j) => vec![j],
        GeneratorId::G(k, l) => vec![k, l],
    }
}

fn pair_reduces(a: GeneratorId, b: GeneratorId, reducer: &Reducer) -> Result<IdentityCheck, IdealError> {
    // G's lead with a degree-3 monomial; put them first for a stable label
    let (p, q) = match (a, b) {
        (GeneratorId::F(_), GeneratorId::G(..)) => (b, a),
        _ => (a, b),
    };
    let family = match (p, q) {
        (GeneratorId::F(_), GeneratorId::F(_)) => PAIR_FF,
        (GeneratorId::G(..), GeneratorId::F(_)) => PAIR_GF,
        _ => PAIR_GG,
    };
    let s = s_polynomial(&gen(p), &gen(q))?;
    let (nf, _) = reducer.normal_form(&s)?;
    let mut indices = id_indices(p);
    indices.extend(id_indices(q));
    Ok(check(family, indices, &nf, &Polynomial::zero()))
}

/// Every pair of generators (with `w` indices `≤ max_index`) whose leading
/// monomials share a variable.
pub fn critical_pairs(max_index: u32) -> Vec<(GeneratorId, GeneratorId)> {
    let ids = generators_up_to(max_index);
    let lms: Vec<Monomial> = ids.iter().map(|id| id.leading_monomial()).collect();
    let mut pairs = Vec::new();
    for i in 0..ids.len() {
        for j in i + 1..ids.len() {
            if !lms[i].is_coprime(&lms[j]) {
                pairs.push((ids[i], ids[j]));
            }
        }
    }
    pairs
}

/// Runs every identity with all `w` indices `≤ max_index`. Failures are
/// reported in the entries, not returned as errors; `Err` only signals that
/// the reducer hit its step ceiling.
pub fn groebner_certificate(max_index: u32, reducer: &Reducer) -> Result<CertificateReport, IdealError> {
    let mut entries = Vec::new();
    let pairs_kl: Vec<(u32, u32)> =
        (0..max_index).flat_map(|l| (0..l).map(move |k| (k, l))).collect();
    entries.extend(pairs_kl.par_iter().map(|&(k, l)| ff_identity(k, l)).collect::<Vec<_>>());
    entries.extend(pairs_kl.par_iter().map(|&(k, l)| gf_top_identity(k, l)).collect::<Vec<_>>());
    entries.extend(
        pairs_kl
            .par_iter()
            .filter(|&&(k, _)| k >= 1)
            .map(|&(k, l)| gf_low_identity(k, l))
            .collect::<Vec<_>>(),
    );
    let reduced: Result<Vec<_>, _> = critical_pairs(max_index)
        .par_iter()
        .map(|&(a, b)| pair_reduces(a, b, reducer))
        .collect();
    entries.extend(reduced?);

    let mut families: BTreeMap<String, FamilyCount> = BTreeMap::new();
    for e in &entries {
        let f = families.entry(e.identity.clone()).or_default();
        f.checked += 1;
        f.passed += e.pass as usize;
    }
    let passed = entries.iter().filter(|e| e.pass).count();
    let summary = Summary {
        max_index,
        generators: generators_up_to(max_index).len(),
        total: entries.len(),
        passed,
        failed: entries.len() - passed,
        families,
        all_pass: passed == entries.len(),
    };
    Ok(CertificateReport { entries, summary })
}

impl CertificateReport {
    /// Human-readable rendering: one line per family, then any failures.
    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "Groebner certificate, w-index <= {} ({} generators)\n",
            s.max_index, s.generators
        );
        for (name, f) in &s.families {
            out.push_str(&format!("  {:<45} {:>6}/{:<6} {}\n", name, f.passed, f.checked, pass_word(f.passed == f.checked)));
        }
        for e in self.entries.iter().filter(|e| !e.pass) {
            out.push_str(&format!("  FAIL {} {:?}: {} != {}\n", e.identity, e.indices, e.lhs, e.rhs));
        }
        out.push_str(&format!("{} of {} identities hold: {}\n", s.passed, s.total, pass_word(s.all_pass)));
        out
    }
}

fn pass_word(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;

    #[test]
    fn certificate_at_three() {
        let report = groebner_certificate(3, &Reducer::default()).unwrap();
        assert!(report.summary.all_pass, "{}", report.to_text());
        // (k,l) ∈ {(0,1),(0,2),(1,2)}: 3 + 3 + 1 explicit identities
        assert_eq!(report.summary.families[FF_IDENTITY].checked, 3);
        assert_eq!(report.summary.families[GF_LOW_IDENTITY].checked, 1);
        assert!(report.summary.total > 7);
    }

    #[test]
    fn identity_one_at_zero_one() {
        let c = ff_identity(0, 1);
        assert!(c.pass);
        assert_eq!(c.lhs, "2*y*w0*w2 - y*w1^2");
    }

    #[test]
    fn identity_three_at_one_two() {
        // Hand division: cross S(G_{1,2},F_1) = x*G_{1,2} + 3*y*w3*F_1
        //   = 3*y^2*w0*w3 - 2*x*y*w2^2,
        // minus 2*y*w2*F_2 leaves 3*y^2*w0*w3 - y^2*w1*w2 = y*G_{0,2}.
        let c = gf_low_identity(1, 2);
        assert!(c.pass);
        assert_eq!(parse_polynomial(&c.lhs).unwrap(), parse_polynomial("3*y^2*w0*w3 - y^2*w1*w2").unwrap());
    }

    #[test]
    fn critical_pairs_skip_coprime() {
        let pairs = critical_pairs(3);
        assert!(!pairs.iter().any(|&(a, b)| a == GeneratorId::F(0) || b == GeneratorId::F(0)));
        assert!(pairs.contains(&(GeneratorId::F(1), GeneratorId::F(2))));
        assert!(pairs.contains(&(GeneratorId::F(3), GeneratorId::G(0, 2))));
    }
}
