//! Truth of formulas in finite interpretations, and bounded validity
//! checking by enumerating (or sampling) interpretations.
//!
//! A universe of size `n` is the set `{0, .., n-1}`. Function and predicate
//! tables are keyed by name *and* arity and stored flat, indexed by the
//! argument tuple read as a base-`n` number with the first argument most
//! significant. The total environment `nat => element` is a finite prefix
//! plus a default for every index past it.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::syntax::{collect_symbols, max_var_index, Formula, Identifier, Term};

pub type Element = usize;

/// Seed used when the caller does not pick one.
pub const DEFAULT_SEED: u64 = 0x6e61_7464_6564;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("no {kind} table for {name}/{arity}")]
    UnknownSymbol {
        kind: &'static str,
        name: Identifier,
        arity: usize,
    },
    #[error("universe must have at least one element")]
    EmptyUniverse,
    #[error("table for {name}/{arity} has {found} entries, expected {expected}")]
    TableSize {
        name: Identifier,
        arity: usize,
        expected: usize,
        found: usize,
    },
    #[error("element {0} is outside the universe")]
    ElementOutOfRange(Element),
    #[error("budget must be positive")]
    BudgetZero,
    #[error("interpretation space too large to index")]
    TooLarge,
}

impl SemanticsError {
    pub fn code(&self) -> &'static str {
        match self {
            SemanticsError::UnknownSymbol { .. } => "UnknownSymbol",
            SemanticsError::EmptyUniverse => "EmptyUniverse",
            SemanticsError::TableSize { .. } => "TableSize",
            SemanticsError::ElementOutOfRange(_) => "ElementOutOfRange",
            SemanticsError::BudgetZero => "BudgetZero",
            SemanticsError::TooLarge => "TooLarge",
        }
    }
}

/// Function and predicate symbols, each with its arity, in sorted order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Signature {
    pub funcs: Vec<(Identifier, usize)>,
    pub preds: Vec<(Identifier, usize)>,
}

impl Signature {
    pub fn of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Signature {
        let mut sig = Signature::default();
        for p in formulas {
            collect_symbols(p, &mut sig.funcs, &mut sig.preds);
        }
        sig.funcs.sort();
        sig.preds.sort();
        sig
    }
}

fn table_len(size: usize, arity: usize) -> Option<usize> {
    u32::try_from(arity).ok().and_then(|a| size.checked_pow(a))
}

#[derive(Clone, PartialEq, Eq)]
pub struct Interpretation {
    size: usize,
    env: Vec<Element>,
    default: Element,
    funcs: BTreeMap<Identifier, BTreeMap<usize, Vec<Element>>>,
    preds: BTreeMap<Identifier, BTreeMap<usize, Vec<bool>>>,
}

impl Interpretation {
    /// An interpretation over `{0, .., size-1}` with no tables and every
    /// variable mapped to 0.
    pub fn new(size: usize) -> Result<Interpretation, SemanticsError> {
        if size == 0 {
            return Err(SemanticsError::EmptyUniverse);
        }
        Ok(Interpretation {
            size,
            env: Vec::new(),
            default: 0,
            funcs: BTreeMap::new(),
            preds: BTreeMap::new(),
        })
    }

    fn check_element(&self, x: Element) -> Result<(), SemanticsError> {
        if x < self.size {
            Ok(())
        } else {
            Err(SemanticsError::ElementOutOfRange(x))
        }
    }

    fn check_table(&self, name: &Identifier, arity: usize, found: usize) -> Result<(), SemanticsError> {
        let expected = table_len(self.size, arity).ok_or(SemanticsError::TooLarge)?;
        if expected != found {
            return Err(SemanticsError::TableSize {
                name: name.clone(),
                arity,
                expected,
                found,
            });
        }
        Ok(())
    }

    /// Sets `e`: index `i` maps to `prefix[i]`, every later index to `default`.
    pub fn set_env(&mut self, prefix: Vec<Element>, default: Element) -> Result<(), SemanticsError> {
        prefix.iter().chain([&default]).try_for_each(|&x| self.check_element(x))?;
        self.env = prefix;
        self.default = default;
        Ok(())
    }

    pub fn set_function(&mut self, name: Identifier, arity: usize, table: Vec<Element>) -> Result<(), SemanticsError> {
        self.check_table(&name, arity, table.len())?;
        table.iter().try_for_each(|&x| self.check_element(x))?;
        self.funcs.entry(name).or_default().insert(arity, table);
        Ok(())
    }

    pub fn set_predicate(&mut self, name: Identifier, arity: usize, table: Vec<bool>) -> Result<(), SemanticsError> {
        self.check_table(&name, arity, table.len())?;
        self.preds.entry(name).or_default().insert(arity, table);
        Ok(())
    }

    pub fn universe_size(&self) -> usize {
        self.size
    }

    pub fn env(&self) -> (&[Element], Element) {
        (&self.env, self.default)
    }

    pub fn env_at(&self, index: u64) -> Element {
        usize::try_from(index)
            .ok()
            .and_then(|i| self.env.get(i))
            .copied()
            .unwrap_or(self.default)
    }

    pub fn functions(&self) -> impl Iterator<Item = (&Identifier, usize, &[Element])> {
        self.funcs
            .iter()
            .flat_map(|(name, by_arity)| by_arity.iter().map(move |(&a, t)| (name, a, t.as_slice())))
    }

    pub fn predicates(&self) -> impl Iterator<Item = (&Identifier, usize, &[bool])> {
        self.preds
            .iter()
            .flat_map(|(name, by_arity)| by_arity.iter().map(move |(&a, t)| (name, a, t.as_slice())))
    }

    /// The same interpretation with `x` pushed as the new index 0.
    pub fn shifted(&self, x: Element) -> Interpretation {
        let mut m = self.clone();
        m.env.insert(0, x);
        m
    }

    fn index(&self, args: &[Element]) -> usize {
        args.iter().fold(0, |acc, &x| acc * self.size + x)
    }

    fn apply_function(&self, name: &Identifier, args: &[Element]) -> Result<Element, SemanticsError> {
        self.funcs
            .get(name)
            .and_then(|t| t.get(&args.len()))
            .map(|table| table[self.index(args)])
            .ok_or_else(|| SemanticsError::UnknownSymbol {
                kind: "function",
                name: name.clone(),
                arity: args.len(),
            })
    }

    fn apply_predicate(&self, name: &Identifier, args: &[Element]) -> Result<bool, SemanticsError> {
        self.preds
            .get(name)
            .and_then(|t| t.get(&args.len()))
            .map(|table| table[self.index(args)])
            .ok_or_else(|| SemanticsError::UnknownSymbol {
                kind: "predicate",
                name: name.clone(),
                arity: args.len(),
            })
    }

    /// A random interpretation of `sig` with an environment prefix of
    /// `env_len` elements.
    pub fn sample<R: Rng>(rng: &mut R, size: usize, sig: &Signature, env_len: usize) -> Result<Interpretation, SemanticsError> {
        let mut m = Interpretation::new(size)?;
        for (name, arity) in &sig.funcs {
            let len = table_len(size, *arity).ok_or(SemanticsError::TooLarge)?;
            m.set_function(name.clone(), *arity, (0..len).map(|_| rng.gen_range(0..size)).collect())?;
        }
        for (name, arity) in &sig.preds {
            let len = table_len(size, *arity).ok_or(SemanticsError::TooLarge)?;
            m.set_predicate(name.clone(), *arity, (0..len).map(|_| rng.gen()).collect())?;
        }
        let env = (0..env_len).map(|_| rng.gen_range(0..size)).collect();
        m.set_env(env, rng.gen_range(0..size))?;
        Ok(m)
    }
}

impl fmt::Debug for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "universe: {{0..{}}}", self.size - 1)?;
        writeln!(f, "env: {:?} then {}", self.env, self.default)?;
        for (name, arity, table) in self.functions() {
            writeln!(f, "function \"{name}\"/{arity}: {table:?}")?;
        }
        for (name, arity, table) in self.predicates() {
            let bits: Vec<u8> = table.iter().map(|&b| u8::from(b)).collect();
            writeln!(f, "predicate \"{name}\"/{arity}: {bits:?}")?;
        }
        Ok(())
    }
}

/// Variables bound by quantifiers sit on a stack in front of the
/// interpretation's own environment.
struct Scope<'m> {
    m: &'m Interpretation,
    bound: Vec<Element>,
}

impl Scope<'_> {
    fn lookup(&self, v: u64) -> Element {
        let depth = self.bound.len() as u64;
        if v < depth {
            self.bound[(depth - 1 - v) as usize]
        } else {
            self.m.env_at(v - depth)
        }
    }

    fn term(&self, t: &Term) -> Result<Element, SemanticsError> {
        match t {
            Term::Var(v) => Ok(self.lookup(*v)),
            Term::Fun(name, args) => {
                let values = self.list(args)?;
                self.m.apply_function(name, &values)
            }
        }
    }

    fn list(&self, l: &[Term]) -> Result<Vec<Element>, SemanticsError> {
        l.iter().map(|t| self.term(t)).collect()
    }

    fn formula(&mut self, p: &Formula) -> Result<bool, SemanticsError> {
        match p {
            Formula::Falsity => Ok(false),
            Formula::Pre(name, args) => {
                let values = self.list(args)?;
                self.m.apply_predicate(name, &values)
            }
            Formula::Imp(p, q) => Ok(if self.formula(p)? { self.formula(q)? } else { true }),
            Formula::Dis(p, q) => Ok(if self.formula(p)? { true } else { self.formula(q)? }),
            Formula::Con(p, q) => Ok(if self.formula(p)? { self.formula(q)? } else { false }),
            Formula::Exi(body) => self.quantify(body, true),
            Formula::Uni(body) => self.quantify(body, false),
        }
    }

    /// Existential when `exists`, universal otherwise. Both stop at the
    /// first deciding element.
    fn quantify(&mut self, body: &Formula, exists: bool) -> Result<bool, SemanticsError> {
        for x in 0..self.m.size {
            self.bound.push(x);
            let value = self.formula(body);
            self.bound.pop();
            if value? == exists {
                return Ok(exists);
            }
        }
        Ok(!exists)
    }
}

pub fn eval_term(m: &Interpretation, t: &Term) -> Result<Element, SemanticsError> {
    Scope { m, bound: Vec::new() }.term(t)
}

pub fn eval_list(m: &Interpretation, l: &[Term]) -> Result<Vec<Element>, SemanticsError> {
    Scope { m, bound: Vec::new() }.list(l)
}

pub fn eval(m: &Interpretation, p: &Formula) -> Result<bool, SemanticsError> {
    Scope { m, bound: Vec::new() }.formula(p)
}

/// Outcome of a bounded search for countermodels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// No countermodel among the interpretations examined. `seed` is set
    /// when some universe sizes were sampled rather than enumerated.
    Valid {
        bound: usize,
        exhaustive: bool,
        checked: u64,
        seed: Option<u64>,
    },
    Countermodel {
        model: Interpretation,
        seed: Option<u64>,
    },
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_size: usize,
    pub budget: u64,
    pub seed: u64,
}

impl SearchConfig {
    pub fn new(max_size: usize, budget: u64) -> SearchConfig {
        SearchConfig { max_size, budget, seed: DEFAULT_SEED }
    }

    pub fn with_seed(mut self, seed: u64) -> SearchConfig {
        self.seed = seed;
        self
    }
}

/// Layout of one universe size: a digit per table entry and env slot.
///
/// Digit order is function tables, then predicate tables (each in sorted
/// symbol order), then the environment prefix. Counting through the digits
/// like an odometer visits tables in lexicographic order of their flattened
/// output vectors.
struct Layout<'s> {
    size: usize,
    sig: &'s Signature,
    env_len: usize,
    radices: Vec<usize>,
}

impl<'s> Layout<'s> {
    fn new(size: usize, sig: &'s Signature, env_len: usize) -> Result<Layout<'s>, SemanticsError> {
        let mut radices = Vec::new();
        for (_, arity) in &sig.funcs {
            let len = table_len(size, *arity).ok_or(SemanticsError::TooLarge)?;
            radices.extend(std::iter::repeat_n(size, len));
        }
        for (_, arity) in &sig.preds {
            let len = table_len(size, *arity).ok_or(SemanticsError::TooLarge)?;
            radices.extend(std::iter::repeat_n(2, len));
        }
        radices.extend(std::iter::repeat_n(size, env_len));
        if radices.len() > 1 << 20 {
            return Err(SemanticsError::TooLarge);
        }
        Ok(Layout { size, sig, env_len, radices })
    }

    /// Number of interpretations, saturating.
    fn count(&self) -> u128 {
        self.radices
            .iter()
            .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
            .unwrap_or(u128::MAX)
    }

    fn build(&self, digits: &[usize]) -> Result<Interpretation, SemanticsError> {
        let mut m = Interpretation::new(self.size)?;
        let mut rest = digits;
        for (name, arity) in &self.sig.funcs {
            let len = table_len(self.size, *arity).ok_or(SemanticsError::TooLarge)?;
            let (table, tail) = rest.split_at(len);
            m.set_function(name.clone(), *arity, table.to_vec())?;
            rest = tail;
        }
        for (name, arity) in &self.sig.preds {
            let len = table_len(self.size, *arity).ok_or(SemanticsError::TooLarge)?;
            let (table, tail) = rest.split_at(len);
            m.set_predicate(name.clone(), *arity, table.iter().map(|&d| d == 1).collect())?;
            rest = tail;
        }
        debug_assert_eq!(rest.len(), self.env_len);
        m.set_env(rest.to_vec(), 0)?;
        Ok(m)
    }

    /// Advances to the next digit vector; false after the last one.
    fn step(&self, digits: &mut [usize]) -> bool {
        for (d, &r) in digits.iter_mut().zip(&self.radices).rev() {
            *d += 1;
            if *d < r {
                return true;
            }
            *d = 0;
        }
        false
    }

    /// All-zero / all-false tables, then identity-like tables: the first
    /// argument (or the last element for constants) and all-true.
    fn corners(&self) -> Result<[Interpretation; 2], SemanticsError> {
        let zero = self.build(&vec![0; self.radices.len()])?;
        let mut digits = Vec::with_capacity(self.radices.len());
        for (_, arity) in &self.sig.funcs {
            let len = table_len(self.size, *arity).ok_or(SemanticsError::TooLarge)?;
            let stride = if *arity == 0 { 1 } else { len / self.size };
            digits.extend((0..len).map(|i| if *arity == 0 { self.size - 1 } else { i / stride }));
        }
        for (_, arity) in &self.sig.preds {
            let len = table_len(self.size, *arity).ok_or(SemanticsError::TooLarge)?;
            digits.extend(std::iter::repeat_n(1, len));
        }
        digits.extend(std::iter::repeat_n(0, self.env_len));
        Ok([zero, self.build(&digits)?])
    }

    fn random<R: Rng>(&self, rng: &mut R) -> Result<Interpretation, SemanticsError> {
        let digits: Vec<usize> = self.radices.iter().map(|&r| rng.gen_range(0..r)).collect();
        self.build(&digits)
    }
}

fn is_countermodel(m: &Interpretation, assumptions: &[Formula], p: &Formula) -> Result<bool, SemanticsError> {
    for a in assumptions {
        if !eval(m, a)? {
            return Ok(false);
        }
    }
    Ok(!eval(m, p)?)
}

/// Searches for an interpretation satisfying every assumption and
/// falsifying `p`.
///
/// When the interpretations over sizes `1..=max_size` number at most
/// `budget`, all of them are enumerated (sizes ascending, lexicographic
/// tables) and the first countermodel is returned. Otherwise the two corner
/// interpretations of every size are tried, followed by `budget` random ones
/// drawn from a generator seeded with `config.seed`.
pub fn entails_with(assumptions: &[Formula], p: &Formula, config: &SearchConfig) -> Result<Verdict, SemanticsError> {
    if config.budget == 0 {
        return Err(SemanticsError::BudgetZero);
    }
    if config.max_size == 0 {
        return Err(SemanticsError::EmptyUniverse);
    }
    let all = || assumptions.iter().chain([p]);
    let sig = Signature::of(all());
    let env_len = all()
        .filter_map(max_var_index)
        .max()
        .map_or(0, |m| m as usize + 1);
    let layouts = (1..=config.max_size)
        .map(|size| Layout::new(size, &sig, env_len))
        .collect::<Result<Vec<_>, _>>()?;
    let total = layouts.iter().fold(0u128, |acc, l| acc.saturating_add(l.count()));

    if total <= config.budget as u128 {
        for layout in &layouts {
            let mut digits = vec![0; layout.radices.len()];
            loop {
                let m = layout.build(&digits)?;
                if is_countermodel(&m, assumptions, p)? {
                    return Ok(Verdict::Countermodel { model: m, seed: None });
                }
                if !layout.step(&mut digits) {
                    break;
                }
            }
        }
        return Ok(Verdict::Valid {
            bound: config.max_size,
            exhaustive: true,
            checked: total as u64,
            seed: None,
        });
    }

    let seed = Some(config.seed);
    let mut checked = 0;
    for layout in &layouts {
        for m in layout.corners()? {
            checked += 1;
            if is_countermodel(&m, assumptions, p)? {
                return Ok(Verdict::Countermodel { model: m, seed });
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    for _ in 0..config.budget {
        let layout = &layouts[rng.gen_range(0..layouts.len())];
        let m = layout.random(&mut rng)?;
        checked += 1;
        if is_countermodel(&m, assumptions, p)? {
            return Ok(Verdict::Countermodel { model: m, seed });
        }
    }
    Ok(Verdict::Valid {
        bound: config.max_size,
        exhaustive: false,
        checked,
        seed,
    })
}

pub fn valid_up_to(p: &Formula, max_size: usize, budget: u64) -> Result<Verdict, SemanticsError> {
    entails_with(&[], p, &SearchConfig::new(max_size, budget))
}

pub fn entails_up_to(a: &[Formula], p: &Formula, max_size: usize, budget: u64) -> Result<Verdict, SemanticsError> {
    entails_with(a, p, &SearchConfig::new(max_size, budget))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{iff, neg, truth};

    fn id(s: &str) -> Identifier {
        Identifier::new(s).unwrap()
    }

    fn atom(name: &str) -> Formula {
        Formula::Pre(id(name), vec![])
    }

    #[test]
    fn term_evaluation() {
        let mut m = Interpretation::new(8).unwrap();
        m.set_env(vec![7], 0).unwrap();
        assert_eq!(eval_term(&m, &Term::Var(0)).unwrap(), 7);
        assert_eq!(eval_term(&m, &Term::Var(5)).unwrap(), 0);

        let mut m = Interpretation::new(2).unwrap();
        m.set_function(id("a"), 0, vec![1]).unwrap();
        assert_eq!(eval_term(&m, &Term::constant(id("a"))).unwrap(), 1);
        m.set_function(id("f"), 1, vec![1, 0]).unwrap();
        m.set_env(vec![1], 0).unwrap();
        assert_eq!(eval_term(&m, &Term::Fun(id("f"), vec![Term::Var(0)])).unwrap(), 0);
        assert_eq!(
            eval_list(&m, &[Term::Var(0), Term::Fun(id("f"), vec![Term::Var(0)])]).unwrap(),
            vec![1, 0]
        );
    }

    #[test]
    fn missing_tables_are_errors() {
        let m = Interpretation::new(1).unwrap();
        assert_eq!(
            eval(&m, &atom("P")),
            Err(SemanticsError::UnknownSymbol { kind: "predicate", name: id("P"), arity: 0 })
        );
        let mut m = Interpretation::new(2).unwrap();
        m.set_predicate(id("P"), 1, vec![true, false]).unwrap();
        // "P"/0 is a different symbol from "P"/1
        assert!(eval(&m, &atom("P")).is_err());
        assert!(eval_term(&m, &Term::constant(id("a"))).is_err());
    }

    #[test]
    fn table_validation() {
        let mut m = Interpretation::new(2).unwrap();
        assert!(matches!(m.set_predicate(id("P"), 2, vec![true; 3]), Err(SemanticsError::TableSize { .. })));
        assert_eq!(m.set_function(id("f"), 1, vec![0, 2]), Err(SemanticsError::ElementOutOfRange(2)));
        assert_eq!(m.set_env(vec![0], 5), Err(SemanticsError::ElementOutOfRange(5)));
        assert_eq!(Interpretation::new(0), Err(SemanticsError::EmptyUniverse));
    }

    #[test]
    fn connectives_and_quantifiers() {
        let mut m = Interpretation::new(2).unwrap();
        m.set_predicate(id("P"), 0, vec![true]).unwrap();
        assert!(!eval(&m, &Formula::Falsity).unwrap());
        assert!(eval(&m, &Formula::imp(atom("P"), atom("P"))).unwrap());
        m.set_predicate(id("P"), 1, vec![true, false]).unwrap();
        let px = Formula::Pre(id("P"), vec![Term::Var(0)]);
        assert!(!eval(&m, &Formula::uni(px.clone())).unwrap());
        assert!(eval(&m, &Formula::exi(px)).unwrap());
    }

    #[test]
    fn quantifier_shifts_environment() {
        // Exi (R (Var 0) (Var 1)): Var 1 refers to outer index 0.
        let mut m = Interpretation::new(2).unwrap();
        m.set_predicate(id("R"), 2, vec![false, false, true, false]).unwrap(); // only R(1, 0)
        let body = Formula::Pre(id("R"), vec![Term::Var(0), Term::Var(1)]);
        let f = Formula::exi(body);
        m.set_env(vec![0], 0).unwrap();
        assert!(eval(&m, &f).unwrap());
        m.set_env(vec![1], 0).unwrap();
        assert!(!eval(&m, &f).unwrap());
    }

    /// Every interpretation of the given predicate symbols (arity 0 or 1)
    /// over sizes 1..=3, built without the search machinery.
    fn brute_force(preds: &[(&str, usize)]) -> Vec<Interpretation> {
        let mut out = Vec::new();
        for size in 1..=3usize {
            let lens: Vec<usize> = preds.iter().map(|(_, a)| size.pow(*a as u32)).collect();
            let bits: usize = lens.iter().sum();
            for mask in 0..(1u32 << bits) {
                let mut m = Interpretation::new(size).unwrap();
                let mut k = 0;
                for ((name, arity), len) in preds.iter().zip(&lens) {
                    let table = (0..*len).map(|i| mask >> (k + i) & 1 == 1).collect();
                    m.set_predicate(id(name), *arity, table).unwrap();
                    k += len;
                }
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn abbreviations_by_enumeration() {
        let models = brute_force(&[("P", 0), ("Q", 1)]);
        assert_eq!(models.len(), 4 + 8 + 16);
        let qx = Formula::Pre(id("Q"), vec![Term::Var(0)]);
        let p = Formula::dis(atom("P"), Formula::uni(qx));
        for m in &models {
            assert!(eval(m, &truth()).unwrap());
            assert!(!eval(m, &neg(truth())).unwrap());
            assert!(eval(m, &iff(p.clone(), p.clone())).unwrap());
        }
    }

    #[test]
    fn validity_examples() {
        assert!(valid_up_to(&truth(), 3, 10_000).unwrap().is_valid());
        match valid_up_to(&atom("P"), 1, 10_000).unwrap() {
            Verdict::Countermodel { model, seed } => {
                assert_eq!(seed, None);
                assert_eq!(model.predicates().next().unwrap().2, &[false]);
            }
            v => panic!("{v:?}"),
        }
        // one table per size for "P"/0, both values: 2 per size, 6 in all
        assert_eq!(
            valid_up_to(&Formula::dis(atom("P"), neg(atom("P"))), 3, 10_000).unwrap(),
            Verdict::Valid { bound: 3, exhaustive: true, checked: 6, seed: None }
        );
        assert_eq!(valid_up_to(&truth(), 3, 0), Err(SemanticsError::BudgetZero));
    }

    #[test]
    fn entailment_examples() {
        let (p, q) = (atom("P"), atom("Q"));
        assert!(entails_up_to(std::slice::from_ref(&p), &p, 3, 100).unwrap().is_valid());
        assert!(entails_up_to(&[Formula::con(p.clone(), q.clone())], &q, 1, 100).unwrap().is_valid());
        assert!(!entails_up_to(&[], &Formula::Falsity, 3, 100).unwrap().is_valid());
        assert!(!entails_up_to(std::slice::from_ref(&p), &q, 3, 100).unwrap().is_valid());
    }

    #[test]
    fn free_variables_are_enumerated() {
        // P(Var 0) -> P(Var 1) fails only when env differs at 0 and 1
        let f = Formula::imp(
            Formula::Pre(id("P"), vec![Term::Var(0)]),
            Formula::Pre(id("P"), vec![Term::Var(1)]),
        );
        match valid_up_to(&f, 2, 1000).unwrap() {
            Verdict::Countermodel { model, .. } => {
                assert_eq!(model.universe_size(), 2);
                assert_ne!(model.env_at(0), model.env_at(1));
                assert!(!eval(&model, &f).unwrap());
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn sampling_is_seeded() {
        // 3 binary predicates over size 3: 2^27 interpretations
        let r = |n: &str| Formula::Pre(id(n), vec![Term::Var(0), Term::Var(1)]);
        let f = Formula::uni(Formula::uni(Formula::imp(Formula::con(r("R"), r("S")), Formula::dis(r("T"), r("R")))));
        let v = entails_with(&[], &f, &SearchConfig::new(3, 500).with_seed(7)).unwrap();
        assert_eq!(v, Verdict::Valid { bound: 3, exhaustive: false, checked: 506, seed: Some(7) });
        let g = Formula::uni(Formula::uni(Formula::imp(r("R"), r("S"))));
        let a = entails_with(&[], &g, &SearchConfig::new(3, 500).with_seed(7)).unwrap();
        let b = entails_with(&[], &g, &SearchConfig::new(3, 500).with_seed(7)).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_valid());
    }
}
