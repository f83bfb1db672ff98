//! Fields of values for extensions of unipotent characters, the curated
//! table of irrational cuspidal fields, and Frobenius-eigenvalue bookkeeping.
//!
//! Fields are described symbolically over Q first and resolved over Q_ℓ
//! once (ℓ, q) are known.

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladic::{is_square_mod, mult_order, prime_powers_up_to, root_exists_for_integer, sqrt_parity_sweep, PrimePower};
use crate::arith::is_prime;
use crate::partitions::{d_core, partitions_of, two_core, Partition};
use crate::symbols::{symbol_d_core, SymbolBCD};

/// Environment variable naming an alternative curated table file.
pub const TABLE1_ENV: &str = "GALFIX_TABLE1";

const TABLE1_JSON: &str = include_str!("../data/table1.json");

/// ε in A_n(εq): untwisted (+1) or twisted (−1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Result<Self> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::InvalidParameter(format!("sign must be +1 or -1, got {v}"))),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Sign::Plus),
            "-1" | "-" => Ok(Sign::Minus),
            other => Err(Error::InvalidParameter(format!("sign must be +1 or -1, got '{other}'"))),
        }
    }
}

/// Frobenius eigenvalue class ω of a unipotent character of A_n(±q).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrobeniusClass {
    One,
    MinusQ,
}

impl FrobeniusClass {
    pub fn value(self, q: u64) -> i64 {
        match self {
            FrobeniusClass::One => 1,
            FrobeniusClass::MinusQ => -(q as i64),
        }
    }
}

/// The square class under a square root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Radicand {
    Q,
    MinusQ,
}

impl Radicand {
    pub fn from_sign(eps: Sign) -> Self {
        match eps {
            Sign::Plus => Radicand::Q,
            Sign::Minus => Radicand::MinusQ,
        }
    }

    pub fn value(self, q: u64) -> i64 {
        match self {
            Radicand::Q => q as i64,
            Radicand::MinusQ => -(q as i64),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    Sqrt { radicand: Radicand },
    /// A root ζ₀ of X^r − ω.
    Root { r: u64, omega: FrobeniusClass },
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sqrt { radicand: Radicand::Q } => f.write_str("√q"),
            Generator::Sqrt { radicand: Radicand::MinusQ } => f.write_str("√(-q)"),
            Generator::Root { r, omega: FrobeniusClass::MinusQ } => write!(f, "(-q)^(1/{r})"),
            Generator::Root { r, omega: FrobeniusClass::One } => write!(f, "1^(1/{r})"),
        }
    }
}

/// A field generated over the base (Q, or Q_ℓ once resolved) by a set of
/// generators. The empty set is the base field.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldDescriptor {
    generators: BTreeSet<Generator>,
    /// `Some(t)` once resolved over Q_ℓ; t says whether the field is Q_ℓ.
    resolved: Option<bool>,
}

impl FieldDescriptor {
    pub fn trivial() -> Self {
        FieldDescriptor::default()
    }

    pub fn adjoin_sqrt(radicand: Radicand) -> Self {
        FieldDescriptor { generators: [Generator::Sqrt { radicand }].into(), resolved: None }
    }

    /// Q(ζ₀) with ζ₀^r = ω. Taking ω = 1 or r = 1 gives the trivial field,
    /// and a square root of −q is recorded as such.
    pub fn adjoin_root(r: u64, omega: FrobeniusClass) -> Self {
        match (r, omega) {
            (_, FrobeniusClass::One) | (1, _) => Self::trivial(),
            (2, FrobeniusClass::MinusQ) => Self::adjoin_sqrt(Radicand::MinusQ),
            _ => FieldDescriptor { generators: [Generator::Root { r, omega }].into(), resolved: None },
        }
    }

    pub fn generators(&self) -> &BTreeSet<Generator> {
        &self.generators
    }

    pub fn resolved(&self) -> Option<bool> {
        self.resolved
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    /// The composite field.
    pub fn join(&self, other: &FieldDescriptor) -> FieldDescriptor {
        let generators: BTreeSet<Generator> = self.generators.union(&other.generators).copied().collect();
        let resolved = match (self.resolved, other.resolved) {
            (Some(_), Some(_)) => Some(generators.is_empty()),
            _ => None,
        };
        FieldDescriptor { generators, resolved }
    }

    /// Drops every generator that already lies in Q_ℓ.
    pub fn resolve(&self, ell: u64, q: &PrimePower) -> Result<FieldDescriptor> {
        let mut generators = BTreeSet::new();
        for g in &self.generators {
            let in_base = match *g {
                Generator::Sqrt { radicand } => is_square_mod(radicand.value(q.value), ell)?,
                Generator::Root { r, omega } => root_exists_for_integer(r, omega.value(q.value), ell)?,
            };
            if !in_base {
                generators.insert(*g);
            }
        }
        let resolved = Some(generators.is_empty());
        Ok(FieldDescriptor { generators, resolved })
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.resolved.is_some() { "Q_ℓ" } else { "Q" };
        if self.generators.is_empty() {
            return f.write_str(base);
        }
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "{base}({})", gens.join(", "))
    }
}

/// Rule assigning ω to a unipotent character of A_n(−q) by its partition.
pub type FrobeniusRule = fn(&Partition) -> FrobeniusClass;

fn two_core_irrational(lambda: &Partition) -> bool {
    matches!(two_core(lambda).size() % 4, 2 | 3)
}

/// Default rule: ω = −q exactly when the 2-core has size ≡ 2, 3 mod 4.
pub fn frobenius_class_type_a_twisted(lambda: &Partition) -> FrobeniusClass {
    if two_core_irrational(lambda) {
        FrobeniusClass::MinusQ
    } else {
        FrobeniusClass::One
    }
}

/// Field of the extension to the graph automorphism, over Q.
pub fn graph_extension_field_type_a(eps: Sign, lambda: &Partition) -> FieldDescriptor {
    if two_core_irrational(lambda) {
        FieldDescriptor::adjoin_sqrt(Radicand::from_sign(eps))
    } else {
        FieldDescriptor::trivial()
    }
}

/// Field of the extension to ⟨F₀⟩ with F₀^r a power of F, over Q_ℓ.
pub fn f0_extension_field(omega: FrobeniusClass, r: u64, ell: u64, q: &PrimePower) -> Result<FieldDescriptor> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    FieldDescriptor::adjoin_root(r, omega).resolve(ell, q)
}

pub fn extension_field_type_a(eps: Sign, lambda: &Partition, ell: u64, q: &PrimePower, r: u64) -> Result<FieldDescriptor> {
    extension_field_type_a_with(frobenius_class_type_a_twisted, eps, lambda, ell, q, r)
}

/// As [`extension_field_type_a`] with a caller-chosen ω rule.
pub fn extension_field_type_a_with(
    rule: FrobeniusRule,
    eps: Sign,
    lambda: &Partition,
    ell: u64,
    q: &PrimePower,
    r: u64,
) -> Result<FieldDescriptor> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let omega = match eps {
        Sign::Plus => FrobeniusClass::One,
        Sign::Minus => rule(lambda),
    };
    let graph = graph_extension_field_type_a(eps, lambda);
    graph.join(&FieldDescriptor::adjoin_root(r, omega)).resolve(ell, q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesFieldPair {
    pub lambda: Partition,
    pub core: Partition,
    pub lambda_field: FieldDescriptor,
    pub core_field: FieldDescriptor,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesFieldReport {
    pub eps: Sign,
    pub n: u32,
    pub ell: u64,
    pub q: u64,
    pub r: u64,
    /// Order of εq modulo ℓ.
    pub d_prime: u64,
    pub pairs: Vec<SeriesFieldPair>,
    /// For even d′: λ and its d′-core share a 2-core. For odd d′: both
    /// fields are Q_ℓ.
    pub pathway_holds: bool,
    pub pass: bool,
}

/// Compares the extension field of every λ ⊢ n with that of its d′-core.
pub fn check_prop75(eps: Sign, n: u32, ell: u64, q: &PrimePower, r: u64) -> Result<SeriesFieldReport> {
    check_prop75_with(frobenius_class_type_a_twisted, eps, n, ell, q, r)
}

pub fn check_prop75_with(
    rule: FrobeniusRule,
    eps: Sign,
    n: u32,
    ell: u64,
    q: &PrimePower,
    r: u64,
) -> Result<SeriesFieldReport> {
    let d_prime = mult_order(eps.value() * q.value as i64, ell)?;
    let mut pairs = Vec::new();
    let mut pathway_holds = true;
    for lambda in partitions_of(n) {
        let (core, _) = d_core(&lambda, d_prime);
        let lambda_field = extension_field_type_a_with(rule, eps, &lambda, ell, q, r)?;
        let core_field = extension_field_type_a_with(rule, eps, &core, ell, q, r)?;
        pathway_holds &= if d_prime % 2 == 0 {
            two_core(&lambda) == two_core(&core)
        } else {
            lambda_field.is_trivial() && core_field.is_trivial()
        };
        let equal = lambda_field == core_field;
        pairs.push(SeriesFieldPair { lambda, core, lambda_field, core_field, equal });
    }
    let pass = pathway_holds && pairs.iter().all(|p| p.equal);
    Ok(SeriesFieldReport { eps, n, ell, q: q.value, r, d_prime, pairs, pathway_holds, pass })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldTag {
    Zeta { order: u64 },
    SqrtMinusQ,
    SqrtQ,
    SqrtEpsQ,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldTag::Zeta { order } => write!(f, "Q(ζ_{order})"),
            FieldTag::SqrtMinusQ => f.write_str("Q(√(-q))"),
            FieldTag::SqrtQ => f.write_str("Q(√q)"),
            FieldTag::SqrtEpsQ => f.write_str("Q(√(εq))"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Row {
    pub group: String,
    pub d: Vec<u64>,
    pub characters: Vec<String>,
    pub field: FieldTag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1Exception {
    pub group: String,
    pub characters: Vec<String>,
    pub field: FieldTag,
    pub odd_d_only: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphCase {
    pub group: String,
    pub levi: String,
    pub series: String,
    pub field: FieldTag,
}

/// Curated irrational fields of cuspidal unipotent characters in exceptional
/// groups.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Table1 {
    pub version: u32,
    #[serde(default)]
    pub description: String,
    pub rows: Vec<Table1Row>,
    pub exceptions: Vec<Table1Exception>,
    #[serde(default)]
    pub graph_cases: Vec<GraphCase>,
}

impl Table1 {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Data(e.to_string()))
    }

    /// The copy compiled into the library.
    pub fn embedded() -> Self {
        Self::from_json(TABLE1_JSON).expect("embedded table parses")
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Data(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// An explicit path wins, then the environment override, then the
    /// embedded copy.
    pub fn load(path: Option<&Path>) -> Result<Self> {
        if let Some(p) = path {
            return Self::from_path(p);
        }
        match std::env::var_os(TABLE1_ENV) {
            Some(p) => Self::from_path(Path::new(&p)),
            None => Ok(Self::embedded()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub checked: usize,
    pub violations: Vec<String>,
    pub pass: bool,
}

impl ConsistencyReport {
    fn new(checked: usize, violations: Vec<String>) -> Self {
        let pass = violations.is_empty();
        ConsistencyReport { checked, violations, pass }
    }
}

/// Bound for the number-theory sweeps backing the √q and √(εq) entries.
pub const SQRT_SWEEP_BOUND: u64 = 200;

/// Odd d_ℓ(εq) forces √(εq) ∈ Q_ℓ, for both signs.
fn eps_sqrt_failures(bound: u64) -> Vec<String> {
    let mut out = Vec::new();
    for ell in (3..=bound).filter(|&l| is_prime(l)) {
        for q in prime_powers_up_to(bound).into_iter().filter(|q| q.p != ell) {
            for eps in [Sign::Plus, Sign::Minus] {
                let v = eps.value() * q.value as i64;
                let d = mult_order(v, ell).expect("ℓ ∤ q");
                if d % 2 == 1 && !is_square_mod(v, ell).expect("ℓ ∤ q") {
                    out.push(format!("√({eps}·{}) not in Q_{ell} although d = {d} is odd", q.value));
                }
            }
        }
    }
    out
}

/// Checks that every listed d makes the row's field H_[d]-fixed, and that
/// the √q exceptions and graph cases are backed by the parity sweeps.
pub fn table1_consistency(table: &Table1) -> ConsistencyReport {
    let mut violations = Vec::new();
    let mut checked = 0;
    if table.version != 1 {
        violations.push(format!("unsupported version {}", table.version));
    }
    if table.rows.is_empty() {
        violations.push("no rows".into());
    }
    for row in &table.rows {
        if row.characters.is_empty() || row.d.is_empty() {
            violations.push(format!("{}: empty row", row.group));
        }
        for &d in &row.d {
            checked += 1;
            match row.field {
                FieldTag::Zeta { order } => {
                    if !(3..=5).contains(&order) {
                        violations.push(format!("{}: unexpected root-of-unity order {order}", row.group));
                    } else if d % order != 0 {
                        violations.push(format!("{}: {order} does not divide d = {d}", row.group));
                    }
                }
                FieldTag::SqrtMinusQ => {
                    if d % 4 != 2 {
                        violations.push(format!("{}: d = {d} is not 2 mod 4", row.group));
                    }
                }
                other => violations.push(format!("{}: field {other} is not allowed in a cuspidal row", row.group)),
            }
        }
    }

    let mut parity_needed = false;
    for ex in &table.exceptions {
        checked += 1;
        if ex.field != FieldTag::SqrtQ {
            violations.push(format!("{}: exception field must be Q(√q), got {}", ex.group, ex.field));
        }
        if !ex.odd_d_only {
            violations.push(format!("{}: exception {:?} lacks the odd-d flag", ex.group, ex.characters));
        }
        if ex.characters.is_empty() {
            violations.push(format!("{}: exception without characters", ex.group));
        }
        parity_needed = true;
    }
    if parity_needed {
        let (n, failures) = sqrt_parity_sweep(SQRT_SWEEP_BOUND, SQRT_SWEEP_BOUND);
        checked += n;
        for f in failures {
            violations.push(format!("√{} not in Q_{} with q = {}, d = {}", f.radicand, f.ell, f.q, f.d));
        }
    }

    if !table.graph_cases.is_empty() {
        for case in &table.graph_cases {
            checked += 1;
            if case.field != FieldTag::SqrtEpsQ {
                violations.push(format!("{}: graph case field must be Q(√(εq)), got {}", case.group, case.field));
            }
        }
        violations.extend(eps_sqrt_failures(SQRT_SWEEP_BOUND));
    }
    ConsistencyReport::new(checked, violations)
}

/// Sign of the Frobenius eigenvalue attached to a symbol of types B, C, D;
/// depends only on the defect D as (−1)^⌊D²/8⌋.
pub fn symbol_frobenius_sign(s: &SymbolBCD) -> i8 {
    let d = u64::from(s.defect());
    if (d * d / 8) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// For pairs in the same d-series (equal d-cores, d odd), the Frobenius
/// eigenvalue signs agree. Pairs with different cores are skipped.
pub fn corollary76_consistency(pairs: &[(SymbolBCD, SymbolBCD)], d: u64) -> Result<(ConsistencyReport, usize)> {
    if d % 2 == 0 {
        return Err(Error::NotOdd(d));
    }
    let mut violations = Vec::new();
    let mut checked = 0;
    let mut skipped = 0;
    for (a, b) in pairs {
        if symbol_d_core(a, d)? != symbol_d_core(b, d)? {
            skipped += 1;
            continue;
        }
        checked += 1;
        if symbol_frobenius_sign(a) != symbol_frobenius_sign(b) {
            violations.push(format!("{a} and {b} share a {d}-core but differ in eigenvalue sign"));
        }
    }
    Ok((ConsistencyReport::new(checked, violations), skipped))
}

/// Every symbol against its own d-core.
pub fn corollary76_core_pairs(symbols: &[SymbolBCD], d: u64) -> Result<Vec<(SymbolBCD, SymbolBCD)>> {
    symbols.iter().map(|s| Ok((s.clone(), symbol_d_core(s, d)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbols::symbols_up_to_defect;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pp(q: u64) -> PrimePower {
        PrimePower::from_value(q).unwrap()
    }

    #[test]
    fn frobenius_rule_examples() {
        assert_eq!(frobenius_class_type_a_twisted(&p("(2,1)")), FrobeniusClass::MinusQ);
        assert_eq!(frobenius_class_type_a_twisted(&p("(4)")), FrobeniusClass::One);
        // (1,1) is a single domino.
        assert_eq!(frobenius_class_type_a_twisted(&p("(1,1)")), FrobeniusClass::One);
        assert_eq!(frobenius_class_type_a_twisted(&p("(3,2,1)")), FrobeniusClass::MinusQ);
        assert_eq!(frobenius_class_type_a_twisted(&p("(6,5,4,3,2,1)")), FrobeniusClass::One);
    }

    #[test]
    fn graph_examples() {
        assert!(graph_extension_field_type_a(Sign::Plus, &p("(3)")).is_trivial());
        assert_eq!(
            graph_extension_field_type_a(Sign::Minus, &p("(2,1)")),
            FieldDescriptor::adjoin_sqrt(Radicand::MinusQ)
        );
        for n in 0..=8 {
            for lambda in partitions_of(n) {
                for eps in [Sign::Plus, Sign::Minus] {
                    assert_eq!(
                        graph_extension_field_type_a(eps, &lambda),
                        graph_extension_field_type_a(eps, &two_core(&lambda))
                    );
                }
            }
        }
    }

    #[test]
    fn f0_examples() {
        for r in 1..6 {
            assert!(f0_extension_field(FrobeniusClass::One, r, 7, &pp(2)).unwrap().is_trivial());
        }
        assert!(!f0_extension_field(FrobeniusClass::MinusQ, 2, 5, &pp(2)).unwrap().is_trivial());
        // −2 has odd order mod 11, so it is a square there.
        assert_eq!(mult_order(-2, 11), Ok(5));
        assert!(f0_extension_field(FrobeniusClass::MinusQ, 2, 11, &pp(2)).unwrap().is_trivial());
    }

    #[test]
    fn extension_examples() {
        assert!(extension_field_type_a(Sign::Plus, &p("(1,1)"), 7, &pp(2), 1).unwrap().is_trivial());
        assert!(extension_field_type_a(Sign::Minus, &p("(2,1)"), 7, &pp(3), 2).unwrap().is_trivial());
        for eps in [Sign::Plus, Sign::Minus] {
            assert!(extension_field_type_a(eps, &Partition::empty(), 5, &pp(2), 2).unwrap().is_trivial());
        }
        let f = extension_field_type_a(Sign::Minus, &p("(2,1)"), 5, &pp(2), 2).unwrap();
        assert_eq!(f.resolved(), Some(false));
        assert_eq!(f.to_string(), "Q_ℓ(√(-q))");
    }

    #[test]
    fn normalization() {
        assert_eq!(FieldDescriptor::adjoin_root(1, FrobeniusClass::MinusQ), FieldDescriptor::trivial());
        assert_eq!(FieldDescriptor::adjoin_root(2, FrobeniusClass::MinusQ), FieldDescriptor::adjoin_sqrt(Radicand::MinusQ));
        let f = FieldDescriptor::adjoin_sqrt(Radicand::Q).join(&FieldDescriptor::adjoin_root(3, FrobeniusClass::MinusQ));
        for ell in [5, 7, 11, 13] {
            for q in [2, 3, 4, 8, 9] {
                let q = pp(q);
                if q.p == ell {
                    continue;
                }
                let once = f.resolve(ell, &q).unwrap();
                assert_eq!(once.resolve(ell, &q).unwrap(), once);
                assert!(once.generators().is_subset(f.generators()));
            }
        }
    }

    #[test]
    fn prop75_examples() {
        let rep = check_prop75(Sign::Minus, 4, 5, &pp(2), 2).unwrap();
        assert_eq!(rep.d_prime, 4);
        assert!(rep.pass);
        assert_eq!(rep.pairs.len(), 5);
        let rep = check_prop75(Sign::Plus, 6, 7, &pp(2), 1).unwrap();
        assert!(rep.pass);
    }

    #[test]
    fn table_is_consistent() {
        let t = Table1::embedded();
        assert_eq!(t.rows.len(), 10);
        assert_eq!(t.exceptions.iter().map(|e| e.characters.len()).sum::<usize>(), 6);
        let g2 = &t.rows[0];
        assert_eq!(g2.field, FieldTag::Zeta { order: 3 });
        assert!(g2.d.iter().all(|d| d % 3 == 0));
        let rep = table1_consistency(&t);
        assert!(rep.pass, "{:?}", rep.violations);
    }

    #[test]
    fn table_violations_are_reported() {
        let mut t = Table1::embedded();
        t.rows[0].d.push(4);
        t.exceptions[0].odd_d_only = false;
        let rep = table1_consistency(&t);
        assert_eq!(rep.violations.len(), 2);
        assert!(Table1::from_json("{\"version\":1}").is_err());
        assert!(Table1::from_json(&TABLE1_JSON.replace("sqrt_minus_q", "sqrt_two")).is_err());
    }

    #[test]
    fn frobenius_signs() {
        let b2: SymbolBCD = "({0,1,2},{})".parse().unwrap();
        assert_eq!(b2.defect(), 3);
        assert_eq!(symbol_frobenius_sign(&b2), -1);
        let syms = symbols_up_to_defect(4, 3);
        for d in [1, 3, 5] {
            let pairs = corollary76_core_pairs(&syms, d).unwrap();
            let (rep, skipped) = corollary76_consistency(&pairs, d).unwrap();
            assert!(rep.pass);
            assert_eq!(skipped, 0);
        }
        let mixed = vec![(syms[0].clone(), syms[syms.len() - 1].clone())];
        let (rep, _) = corollary76_consistency(&mixed, 3).unwrap();
        assert!(rep.pass);
        assert!(corollary76_consistency(&mixed, 2).is_err());
    }
}
