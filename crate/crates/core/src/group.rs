//! Finite groups as validated Cayley tables.
//!
//! Elements are dense indices `0..n` and the identity is always index `0`;
//! tables whose neutral element sits elsewhere are relabelled on ingest.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::set::ElementSet;

/// Default bound on the order of constructed groups (`|S_6|`).
pub const DEFAULT_ORDER_CAP: usize = 720;

/// Which axiom a raw table broke first when it is not closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClosureViolation {
    /// `table[a][b]` is not an element index.
    EntryOutOfRange { a: usize, b: usize, value: usize },
    /// Row `row` contains `value` twice.
    RowRepeats { row: usize, value: usize },
    /// Column `column` contains `value` twice.
    ColumnRepeats { column: usize, value: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    EmptyTable,
    RaggedTable { row: usize, len: usize, expected: usize },
    LabelCount { got: usize, expected: usize },
    NotClosed(ClosureViolation),
    NoIdentity,
    NotAssociative { a: usize, b: usize, c: usize },
    NoInverse { element: usize },
    SpecTooLarge { order: u128, cap: usize },
    BadParameter(String),
    /// A `file(..)` spec reached a constructor that cannot read files.
    ExternalTable(String),
    Parse(String),
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::EmptyTable => write!(f, "empty Cayley table"),
            GroupError::RaggedTable { row, len, expected } => {
                write!(f, "row {row} has {len} entries, expected {expected}")
            }
            GroupError::LabelCount { got, expected } => {
                write!(f, "got {got} labels for {expected} elements")
            }
            GroupError::NotClosed(ClosureViolation::EntryOutOfRange { a, b, value }) => {
                write!(f, "not closed: table[{a}][{b}] = {value} is not an element")
            }
            GroupError::NotClosed(ClosureViolation::RowRepeats { row, value }) => {
                write!(f, "not closed as a Latin square: row {row} repeats {value}")
            }
            GroupError::NotClosed(ClosureViolation::ColumnRepeats { column, value }) => {
                write!(f, "not closed as a Latin square: column {column} repeats {value}")
            }
            GroupError::NoIdentity => write!(f, "no two-sided identity element"),
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "not associative: (a*b)*c != a*(b*c) for (a, b, c) = ({a}, {b}, {c})")
            }
            GroupError::NoInverse { element } => write!(f, "element {element} has no two-sided inverse"),
            GroupError::SpecTooLarge { order, cap } => {
                write!(f, "group order {order} exceeds the size cap {cap}")
            }
            GroupError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            GroupError::ExternalTable(path) => {
                write!(f, "spec file({path}) needs a table loader")
            }
            GroupError::Parse(msg) => write!(f, "cannot parse group spec: {msg}"),
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group with identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    labels: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish()
    }
}

impl FiniteGroup {
    /// Validates a raw Cayley table (`raw[a][b]` is the index of `a*b`) and
    /// relabels so that the identity becomes index 0.
    pub fn from_cayley_table(
        raw: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = raw.len();
        if n == 0 {
            return Err(GroupError::EmptyTable);
        }
        for (row, r) in raw.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::RaggedTable { row, len: r.len(), expected: n });
            }
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(GroupError::LabelCount { got: l.len(), expected: n });
            }
        }
        for (a, r) in raw.iter().enumerate() {
            for (b, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(GroupError::NotClosed(ClosureViolation::EntryOutOfRange {
                        a,
                        b,
                        value,
                    }));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| raw[e][x] == x && raw[x][e] == x))
            .ok_or(GroupError::NoIdentity)?;

        // swap identity with 0
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(raw[a][b]);
            }
        }
        let labels = match labels {
            Some(mut l) => {
                l.swap(0, identity);
                l
            }
            None => (0..n)
                .map(|x| if x == 0 { "e".to_string() } else { format!("g{}", relabel(x)) })
                .collect(),
        };
        let group = FiniteGroup { order: n, table, labels };
        // Report violations with the caller's indices.
        group.validate().map_err(|e| match e {
            GroupError::NotClosed(ClosureViolation::RowRepeats { row, value }) => {
                GroupError::NotClosed(ClosureViolation::RowRepeats {
                    row: relabel(row),
                    value: relabel(value),
                })
            }
            GroupError::NotClosed(ClosureViolation::ColumnRepeats { column, value }) => {
                GroupError::NotClosed(ClosureViolation::ColumnRepeats {
                    column: relabel(column),
                    value: relabel(value),
                })
            }
            GroupError::NotAssociative { a, b, c } => GroupError::NotAssociative {
                a: relabel(a),
                b: relabel(b),
                c: relabel(c),
            },
            GroupError::NoInverse { element } => GroupError::NoInverse { element: relabel(element) },
            other => other,
        })?;
        Ok(group)
    }

    /// Builds a group from a spec; `file(..)` specs are rejected.
    pub fn construct(spec: &GroupSpec, cap: usize) -> Result<Self, GroupError> {
        Self::construct_with(spec, cap, &mut |path: &str| {
            Err(GroupError::ExternalTable(path.to_string()))
        })
    }

    /// Builds a group from a spec, resolving `file(..)` leaves with `load`.
    pub fn construct_with(
        spec: &GroupSpec,
        cap: usize,
        load: &mut dyn FnMut(&str) -> Result<FiniteGroup, GroupError>,
    ) -> Result<Self, GroupError> {
        spec.check_parameters()?;
        if let Some(order) = spec.order() {
            if order > cap as u128 {
                return Err(GroupError::SpecTooLarge { order, cap });
            }
        }
        let g = match spec {
            GroupSpec::Cyclic(n) => cyclic(*n),
            GroupSpec::Dihedral(n) => dihedral(*n),
            GroupSpec::Dicyclic(n) => dicyclic(*n),
            GroupSpec::Symmetric(n) => symmetric(*n),
            GroupSpec::ElementaryAbelian { p, k } => elementary_abelian(*p, *k),
            GroupSpec::DirectProduct(a, b) => {
                let ga = Self::construct_with(a, cap, load)?;
                let gb = Self::construct_with(b, cap, load)?;
                let order = ga.order as u128 * gb.order as u128;
                if order > cap as u128 {
                    return Err(GroupError::SpecTooLarge { order, cap });
                }
                direct_product(&ga, &gb)
            }
            GroupSpec::CayleyFile(path) => {
                let g = load(path)?;
                if g.order > cap {
                    return Err(GroupError::SpecTooLarge { order: g.order as u128, cap });
                }
                g
            }
        };
        Ok(g)
    }

    /// Checks the four group axioms on the stored table (identity is 0).
    pub fn validate(&self) -> Result<(), GroupError> {
        let n = self.order;
        if (0..n).any(|x| self.mul(0, x) != x || self.mul(x, 0) != x) {
            return Err(GroupError::NoIdentity);
        }
        let mut seen = vec![usize::MAX; n];
        for row in 0..n {
            for b in 0..n {
                let v = self.mul(row, b);
                if seen[v] == row {
                    return Err(GroupError::NotClosed(ClosureViolation::RowRepeats { row, value: v }));
                }
                seen[v] = row;
            }
        }
        seen.fill(usize::MAX);
        for column in 0..n {
            for a in 0..n {
                let v = self.mul(a, column);
                if seen[v] == column {
                    return Err(GroupError::NotClosed(ClosureViolation::ColumnRepeats {
                        column,
                        value: v,
                    }));
                }
                seen[v] = column;
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.mul(a, b) == 0 && self.mul(b, a) == 0) {
                return Err(GroupError::NoInverse { element: a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.row(a).iter().position(|&x| x == 0).expect("validated group")
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Smallest `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        assert!(g < self.order, "element {g} out of range");
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        debug_assert_eq!(self.order % k, 0, "Lagrange");
        k
    }

    /// `[g^0, g^1, ..., g^(k-1)]` in exponent order.
    pub fn powers(&self, g: usize) -> Vec<usize> {
        let mut out = vec![0];
        let mut x = g;
        while x != 0 {
            out.push(x);
            x = self.mul(x, g);
        }
        out
    }

    /// The cyclic subgroup `<g>`.
    pub fn generated_subgroup(&self, g: usize) -> ElementSet {
        ElementSet::from_iter_in(self.order, self.powers(g))
    }

    /// Smallest element index generating the whole group, if any.
    pub fn is_cyclic(&self) -> Option<usize> {
        (0..self.order).find(|&g| self.element_order(g) == self.order)
    }

    pub fn involutions(&self) -> Vec<usize> {
        (1..self.order).filter(|&g| self.mul(g, g) == 0).collect()
    }

    /// Table as nested rows, e.g. for serialization.
    pub fn to_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).to_vec()).collect()
    }
}

fn from_mul(order: usize, labels: Vec<String>, mul: impl Fn(usize, usize) -> usize) -> FiniteGroup {
    let mut table = vec![0; order * order];
    for a in 0..order {
        for b in 0..order {
            table[a * order + b] = mul(a, b);
        }
    }
    FiniteGroup { order, table, labels }
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => "e".to_string(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let labels = (0..n).map(|k| power_label("g", k)).collect();
    from_mul(n, labels, |a, b| (a + b) % n)
}

// r^k s^e stored at k + n*e
fn dihedral(n: usize) -> FiniteGroup {
    let labels = (0..2 * n)
        .map(|i| {
            let (k, s) = (i % n, i / n);
            match (k, s) {
                (_, 0) => power_label("r", k),
                (0, _) => "s".to_string(),
                _ => format!("{}·s", power_label("r", k)),
            }
        })
        .collect();
    from_mul(2 * n, labels, |a, b| {
        let (k, e) = (a % n, a / n);
        let (l, d) = (b % n, b / n);
        if e == 0 {
            (k + l) % n + n * d
        } else {
            (k + n - l) % n + n * (1 - d)
        }
    })
}

// a^k x^e stored at k + 2n*e, with a^(2n) = 1, x^2 = a^n, x a x^-1 = a^-1
fn dicyclic(n: usize) -> FiniteGroup {
    let h = 2 * n;
    let labels = (0..2 * h)
        .map(|i| {
            let (k, x) = (i % h, i / h);
            match (k, x) {
                (_, 0) => power_label("a", k),
                (0, _) => "x".to_string(),
                _ => format!("{}·x", power_label("a", k)),
            }
        })
        .collect();
    from_mul(2 * h, labels, move |a, b| {
        let (k, e) = (a % h, a / h);
        let (l, d) = (b % h, b / h);
        match (e, d) {
            (0, _) => (k + l) % h + h * d,
            (_, 0) => (k + h - l) % h + h,
            _ => (k + h - l + n) % h,
        }
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Lexicographic rank of a permutation of `0..len`.
fn perm_rank(p: &[usize]) -> usize {
    let n = p.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank += smaller * factorial(n - 1 - i);
    }
    rank
}

fn perm_unrank(n: usize, mut rank: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = p[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

// permutations in lexicographic order, (s*t)(x) = s(t(x))
fn symmetric(n: usize) -> FiniteGroup {
    let order = factorial(n);
    let perms: Vec<Vec<usize>> = (0..order).map(|r| perm_unrank(n, r)).collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    from_mul(order, labels, |a, b| {
        let composed: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
        perm_rank(&composed)
    })
}

fn elementary_abelian(p: usize, k: usize) -> FiniteGroup {
    let order = p.pow(k as u32);
    let digits = |mut x: usize| {
        let mut d = vec![0; k];
        for slot in d.iter_mut().rev() {
            *slot = x % p;
            x /= p;
        }
        d
    };
    let labels = (0..order)
        .map(|x| {
            let d: Vec<String> = digits(x).iter().map(|v| v.to_string()).collect();
            format!("({})", d.join(","))
        })
        .collect();
    from_mul(order, labels, |a, b| {
        let (da, db) = (digits(a), digits(b));
        da.iter().zip(&db).fold(0, |acc, (x, y)| acc * p + (x + y) % p)
    })
}

/// `G x H` with `(g, h)` stored at `g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let m = h.order;
    let labels = (0..g.order * m)
        .map(|i| format!("({},{})", g.label(i / m), h.label(i % m)))
        .collect();
    from_mul(g.order * m, labels, |a, b| {
        g.mul(a / m, b / m) * m + h.mul(a % m, b % m)
    })
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// A named group family member, or a Cayley table on disk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    /// Symmetries of the `n`-gon, order `2n`.
    Dihedral(usize),
    /// Order `4n`; `Dicyclic(2)` is the quaternion group.
    Dicyclic(usize),
    Symmetric(usize),
    ElementaryAbelian { p: usize, k: usize },
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    CayleyFile(String),
}

impl GroupSpec {
    pub fn product(a: GroupSpec, b: GroupSpec) -> GroupSpec {
        GroupSpec::DirectProduct(Box::new(a), Box::new(b))
    }

    /// Order of the described group; `None` for file specs.
    pub fn order(&self) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).try_fold(1u128, |acc, x| acc.checked_mul(x));
        match self {
            GroupSpec::Cyclic(n) => Some(*n as u128),
            GroupSpec::Dihedral(n) => Some(2 * *n as u128),
            GroupSpec::Dicyclic(n) => Some(4 * *n as u128),
            GroupSpec::Symmetric(n) => Some(fact(*n).unwrap_or(u128::MAX)),
            GroupSpec::ElementaryAbelian { p, k } => {
                Some((*p as u128).checked_pow(*k as u32).unwrap_or(u128::MAX))
            }
            GroupSpec::DirectProduct(a, b) => Some(a.order()?.saturating_mul(b.order()?)),
            GroupSpec::CayleyFile(_) => None,
        }
    }

    fn check_parameters(&self) -> Result<(), GroupError> {
        let positive = |name: &str, n: usize| {
            if n == 0 {
                Err(GroupError::BadParameter(format!("{name} parameter must be positive")))
            } else {
                Ok(())
            }
        };
        match self {
            GroupSpec::Cyclic(n) => positive("cyclic", *n),
            GroupSpec::Dihedral(n) => positive("dihedral", *n),
            GroupSpec::Dicyclic(n) => positive("dicyclic", *n),
            GroupSpec::Symmetric(n) => positive("symmetric", *n),
            GroupSpec::ElementaryAbelian { p, k } => {
                positive("elementary_abelian rank", *k)?;
                if is_prime(*p) {
                    Ok(())
                } else {
                    Err(GroupError::BadParameter(format!("{p} is not prime")))
                }
            }
            GroupSpec::DirectProduct(a, b) => {
                a.check_parameters()?;
                b.check_parameters()
            }
            GroupSpec::CayleyFile(_) => Ok(()),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic({n})"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral({n})"),
            GroupSpec::Dicyclic(n) => write!(f, "dicyclic({n})"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric({n})"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "elementary_abelian({p},{k})"),
            GroupSpec::DirectProduct(a, b) => write!(f, "product({a},{b})"),
            GroupSpec::CayleyFile(p) => write!(f, "file({p})"),
        }
    }
}

/// Parses the functional syntax printed by `Display`, e.g.
/// `product(cyclic(2),dicyclic(2))` or `file(tables/a4.cayley)`.
impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if !s.contains('(') {
            let mut tokens = s.split_whitespace();
            let spec = parse_tokens(&mut tokens)?;
            return match tokens.next() {
                None => Ok(spec),
                Some(t) => Err(GroupError::Parse(format!("trailing input '{t}'"))),
            };
        }
        let (spec, rest) = parse_spec(s.trim())?;
        if !rest.trim().is_empty() {
            return Err(GroupError::Parse(format!("trailing input '{}'", rest.trim())));
        }
        Ok(spec)
    }
}

/// Prefix form: `CYCLIC 6`, `ELEMENTARY_ABELIAN 2 3`,
/// `DIRECT_PRODUCT CYCLIC 2 DICYCLIC 2`, `CAYLEY_FILE path`.
fn parse_tokens<'a>(tokens: &mut impl Iterator<Item = &'a str>) -> Result<GroupSpec, GroupError> {
    let tag = tokens.next().ok_or_else(|| GroupError::Parse("empty group spec".into()))?;
    let tag = tag.to_ascii_uppercase();
    let mut int = |what: &str| -> Result<usize, GroupError> {
        let t = tokens
            .next()
            .ok_or_else(|| GroupError::Parse(format!("{tag}: missing {what}")))?;
        t.parse().map_err(|_| GroupError::Parse(format!("{tag}: '{t}' is not an integer")))
    };
    let spec = match tag.as_str() {
        "CYCLIC" => GroupSpec::Cyclic(int("order")?),
        "DIHEDRAL" => GroupSpec::Dihedral(int("n")?),
        "DICYCLIC" => GroupSpec::Dicyclic(int("n")?),
        "SYMMETRIC" => GroupSpec::Symmetric(int("degree")?),
        "ELEMENTARY_ABELIAN" => {
            let p = int("prime")?;
            GroupSpec::ElementaryAbelian { p, k: int("rank")? }
        }
        "DIRECT_PRODUCT" => {
            let a = parse_tokens(tokens)?;
            GroupSpec::product(a, parse_tokens(tokens)?)
        }
        "CAYLEY_FILE" => GroupSpec::CayleyFile(
            tokens.next().ok_or_else(|| GroupError::Parse("CAYLEY_FILE: missing path".into()))?.into(),
        ),
        _ => return Err(GroupError::Parse(format!("unknown family '{tag}'"))),
    };
    Ok(spec)
}

fn parse_spec(s: &str) -> Result<(GroupSpec, &str), GroupError> {
    let s = s.trim_start();
    let open = s
        .find('(')
        .ok_or_else(|| GroupError::Parse(format!("expected name(...) in '{s}'")))?;
    let name = s[..open].trim().to_ascii_lowercase();
    let body = &s[open + 1..];
    let bad = |msg: &str| GroupError::Parse(format!("{name}: {msg}"));

    if name == "product" {
        let (a, rest) = parse_spec(body)?;
        let rest = rest.trim_start().strip_prefix(',').ok_or_else(|| bad("expected ','"))?;
        let (b, rest) = parse_spec(rest)?;
        let rest = rest.trim_start().strip_prefix(')').ok_or_else(|| bad("expected ')'"))?;
        return Ok((GroupSpec::product(a, b), rest));
    }
    let close = body.find(')').ok_or_else(|| bad("missing ')'"))?;
    let (args, rest) = (&body[..close], &body[close + 1..]);
    if name == "file" {
        let path = args.trim();
        if path.is_empty() {
            return Err(bad("empty path"));
        }
        return Ok((GroupSpec::CayleyFile(path.to_string()), rest));
    }
    let nums = args
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad(&format!("'{}' is not an integer", t.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    let one = |nums: &[usize]| match nums {
        [n] => Ok(*n),
        _ => Err(bad("expected one integer")),
    };
    let spec = match name.as_str() {
        "cyclic" => GroupSpec::Cyclic(one(&nums)?),
        "dihedral" => GroupSpec::Dihedral(one(&nums)?),
        "dicyclic" => GroupSpec::Dicyclic(one(&nums)?),
        "symmetric" => GroupSpec::Symmetric(one(&nums)?),
        "elementary_abelian" => match nums[..] {
            [p, k] => GroupSpec::ElementaryAbelian { p, k },
            _ => return Err(bad("expected two integers")),
        },
        _ => return Err(GroupError::Parse(format!("unknown family '{name}'"))),
    };
    Ok((spec, rest))
}
