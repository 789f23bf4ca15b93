//! Registry of compact simple Lie groups (by their rational sphere
//! decompositions) and of simply connected compact irreducible symmetric
//! spaces.
//!
//! The registry is loaded from `data/catalog.toml`, which is embedded in the
//! binary. The file records the sphere-dimension table, one record per family
//! of symmetric spaces with its `(G, H)` pair and any cited Betti witnesses,
//! and the rows of the obstruction tables.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Deserialize;
use thiserror::Error;

const CATALOG_TOML: &str = include_str!("../data/catalog.toml");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid parameter for {family}: {detail}")]
    InvalidParameter { family: String, detail: String },
    #[error("unknown family or label `{0}`")]
    UnknownFamily(String),
    #[error("malformed catalog data: {0}")]
    Data(String),
    #[error("cannot parse `{0}` as a space")]
    Parse(String),
}

// ------------------------------------------------------------------ groups

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupFamily {
    Sp,
    Spin,
    U,
    SU,
    G2,
    F4,
    E6,
    E7,
    E8,
    SO,
}

impl GroupFamily {
    pub fn is_exceptional(self) -> bool {
        matches!(self, Self::G2 | Self::F4 | Self::E6 | Self::E7 | Self::E8)
    }

    fn name(self) -> &'static str {
        match self {
            Self::Sp => "Sp",
            Self::Spin => "Spin",
            Self::U => "U",
            Self::SU => "SU",
            Self::G2 => "G2",
            Self::F4 => "F4",
            Self::E6 => "E6",
            Self::E7 => "E7",
            Self::E8 => "E8",
            Self::SO => "SO",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "Sp" => Self::Sp,
            "Spin" => Self::Spin,
            "U" => Self::U,
            "SU" => Self::SU,
            "G2" => Self::G2,
            "F4" => Self::F4,
            "E6" => Self::E6,
            "E7" => Self::E7,
            "E8" => Self::E8,
            "SO" => Self::SO,
            _ => return None,
        })
    }
}

/// A compact Lie group up to rational homotopy type. `SO(k)` is accepted and
/// shares the sphere list of `Spin(k)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupDescriptor {
    family: GroupFamily,
    param: Option<u32>,
}

impl GroupDescriptor {
    pub fn new(family: GroupFamily, param: Option<u32>) -> Result<Self, CatalogError> {
        let invalid = |detail: String| CatalogError::InvalidParameter {
            family: family.name().into(),
            detail,
        };
        match (family.is_exceptional(), param) {
            (true, Some(p)) => return Err(invalid(format!("takes no parameter, got {p}"))),
            (false, None) => return Err(invalid("parameter required".into())),
            _ => {}
        }
        if let Some(p) = param {
            let min = match family {
                GroupFamily::Sp | GroupFamily::U => 1,
                GroupFamily::Spin | GroupFamily::SO | GroupFamily::SU => 2,
                _ => 0,
            };
            if p < min {
                return Err(invalid(format!("needs parameter >= {min}, got {p}")));
            }
        }
        Ok(GroupDescriptor { family, param })
    }

    pub fn exceptional(family: GroupFamily) -> Result<Self, CatalogError> {
        Self::new(family, None)
    }

    pub fn classical(family: GroupFamily, param: u32) -> Result<Self, CatalogError> {
        Self::new(family, Some(param))
    }

    pub fn family(&self) -> GroupFamily {
        self.family
    }

    pub fn param(&self) -> Option<u32> {
        self.param
    }

    /// Rank of a maximal torus.
    pub fn rank(&self) -> u32 {
        let p = self.param.unwrap_or(0);
        match self.family {
            GroupFamily::Sp | GroupFamily::U => p,
            GroupFamily::Spin | GroupFamily::SO => p / 2,
            GroupFamily::SU => p - 1,
            GroupFamily::G2 => 2,
            GroupFamily::F4 => 4,
            GroupFamily::E6 => 6,
            GroupFamily::E7 => 7,
            GroupFamily::E8 => 8,
        }
    }

    pub fn dimension(&self) -> u32 {
        group_spheres(self).map(|s| s.sum()).unwrap_or(0)
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.param {
            Some(p) => write!(f, "{}({p})", self.family.name()),
            None => write!(f, "{}", self.family.name()),
        }
    }
}

impl FromStr for GroupDescriptor {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (name, param) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest
                    .strip_suffix(')')
                    .ok_or_else(|| CatalogError::Parse(s.into()))?;
                let p = inner
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| CatalogError::Parse(s.into()))?;
                (name.trim(), Some(p))
            }
            None => (s, None),
        };
        let family =
            GroupFamily::from_name(name).ok_or_else(|| CatalogError::UnknownFamily(name.into()))?;
        GroupDescriptor::new(family, param)
    }
}

/// Multiset of odd rational sphere dimensions, in table order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SphereList(Vec<u32>);

impl SphereList {
    pub fn dims(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn sorted(&self) -> Vec<u32> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

impl fmt::Display for SphereList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Rational sphere dimensions of `g`, exactly as the sphere-dimension table
/// lists them.
pub fn group_spheres(g: &GroupDescriptor) -> Result<SphereList, CatalogError> {
    sphere_dims(g.family, g.param).map(SphereList)
}

fn sphere_dims(family: GroupFamily, param: Option<u32>) -> Result<Vec<u32>, CatalogError> {
    let cat = catalog();
    let family = match family {
        GroupFamily::SO => GroupFamily::Spin,
        f => f,
    };
    for row in &cat.groups {
        if row.family != family {
            continue;
        }
        if let Some(dims) = &row.dims {
            return Ok(dims.clone());
        }
        let k = param.ok_or_else(|| CatalogError::Data(format!("{} needs a parameter", row.label)))?;
        let n = match row.arg {
            RowArg::N => k,
            RowArg::TwoN if k % 2 == 0 => k / 2,
            RowArg::TwoNPlusOne if k % 2 == 1 => (k - 1) / 2,
            _ => continue,
        };
        return Ok(row.formula.expand(n));
    }
    Err(CatalogError::UnknownFamily(family.name().into()))
}

// ------------------------------------------------------------------ spaces

/// Identifies one simply connected compact irreducible symmetric space, or a
/// simple Lie group regarded as one.
///
/// `F4/Spin(9)` is represented by `CaP2` only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpaceKind {
    Sphere(u32),
    CP(u32),
    HP(u32),
    CaP2,
    RealGr(u32, u32),
    ComplexGr(u32, u32),
    QuatGr(u32, u32),
    SpModU(u32),
    SOModU(u32),
    SUModSO(u32),
    SUModSp(u32),
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    G2SO4,
    LieGroup(GroupDescriptor),
}

impl SpaceKind {
    pub fn tag(&self) -> &'static str {
        match self {
            Self::Sphere(_) => "Sphere",
            Self::CP(_) => "CP",
            Self::HP(_) => "HP",
            Self::CaP2 => "CaP2",
            Self::RealGr(..) => "RealGr",
            Self::ComplexGr(..) => "ComplexGr",
            Self::QuatGr(..) => "QuatGr",
            Self::SpModU(_) => "SpModU",
            Self::SOModU(_) => "SOModU",
            Self::SUModSO(_) => "SUModSO",
            Self::SUModSp(_) => "SUModSp",
            Self::EI => "EI",
            Self::EII => "EII",
            Self::EIII => "EIII",
            Self::EIV => "EIV",
            Self::EV => "EV",
            Self::EVI => "EVI",
            Self::EVII => "EVII",
            Self::EVIII => "EVIII",
            Self::EIX => "EIX",
            Self::FI => "FI",
            Self::G2SO4 => "G2SO4",
            Self::LieGroup(_) => "LieGroup",
        }
    }

    pub fn params(&self) -> Vec<u32> {
        match *self {
            Self::Sphere(n)
            | Self::CP(n)
            | Self::HP(n)
            | Self::SpModU(n)
            | Self::SOModU(n)
            | Self::SUModSO(n)
            | Self::SUModSp(n) => vec![n],
            Self::RealGr(p, q) | Self::ComplexGr(p, q) | Self::QuatGr(p, q) => vec![p, q],
            Self::LieGroup(g) => g.param.into_iter().collect(),
            _ => Vec::new(),
        }
    }

    pub fn from_tag(tag: &str, params: &[u32]) -> Result<Self, CatalogError> {
        let one = || match params {
            [n] => Ok(*n),
            _ => Err(CatalogError::Parse(format!("{tag} takes one parameter"))),
        };
        let two = || match params {
            [p, q] => Ok((*p, *q)),
            _ => Err(CatalogError::Parse(format!("{tag} takes two parameters"))),
        };
        let none = |k: SpaceKind| {
            if params.is_empty() {
                Ok(k)
            } else {
                Err(CatalogError::Parse(format!("{tag} takes no parameters")))
            }
        };
        match tag {
            "Sphere" => one().map(Self::Sphere),
            "CP" => one().map(Self::CP),
            "HP" => one().map(Self::HP),
            "CaP2" => none(Self::CaP2),
            "RealGr" => two().map(|(p, q)| Self::RealGr(p, q)),
            "ComplexGr" => two().map(|(p, q)| Self::ComplexGr(p, q)),
            "QuatGr" => two().map(|(p, q)| Self::QuatGr(p, q)),
            "SpModU" => one().map(Self::SpModU),
            "SOModU" => one().map(Self::SOModU),
            "SUModSO" => one().map(Self::SUModSO),
            "SUModSp" => one().map(Self::SUModSp),
            "EI" => none(Self::EI),
            "EII" => none(Self::EII),
            "EIII" => none(Self::EIII),
            "EIV" => none(Self::EIV),
            "EV" => none(Self::EV),
            "EVI" => none(Self::EVI),
            "EVII" => none(Self::EVII),
            "EVIII" => none(Self::EVIII),
            "EIX" => none(Self::EIX),
            "FI" => none(Self::FI),
            "G2SO4" => none(Self::G2SO4),
            other => Err(CatalogError::UnknownFamily(other.into())),
        }
    }

    /// `true` for the twelve exceptional symmetric spaces (with `CaP2`
    /// standing in for `F4/Spin(9)`).
    pub fn is_exceptional_space(&self) -> bool {
        matches!(
            self,
            Self::CaP2
                | Self::EI
                | Self::EII
                | Self::EIII
                | Self::EIV
                | Self::EV
                | Self::EVI
                | Self::EVII
                | Self::EVIII
                | Self::EIX
                | Self::FI
                | Self::G2SO4
        )
    }
}

/// Canonical expression syntax, the same grammar [`FromStr`] accepts.
impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Sphere(n) => write!(f, "S^{n}"),
            Self::CP(n) => write!(f, "CP^{n}"),
            Self::HP(n) => write!(f, "HP^{n}"),
            Self::CaP2 => write!(f, "CaP2"),
            Self::RealGr(p, q) => write!(f, "GrR({p},{q})"),
            Self::ComplexGr(p, q) => write!(f, "GrC({p},{q})"),
            Self::QuatGr(p, q) => write!(f, "GrH({p},{q})"),
            Self::SpModU(n) => write!(f, "CI({n})"),
            Self::SOModU(n) => write!(f, "DIII({n})"),
            Self::SUModSO(n) => write!(f, "AI({n})"),
            Self::SUModSp(n) => write!(f, "AII({n})"),
            Self::G2SO4 => write!(f, "G"),
            Self::LieGroup(g) => write!(f, "group:{g}"),
            other => write!(f, "{}", other.tag()),
        }
    }
}

impl FromStr for SpaceKind {
    type Err = CatalogError;

    /// Parses one factor: `S^k`, `CP^k`, `HP^k`, `CaP2`, a Cartan label with
    /// its parameters (`AI(n)`, `BDI(p,q)`, `EVII`, `G`, ...), one of the
    /// aliases `GrR(p,q)`, `GrC(p,q)`, `GrH(p,q)`, or `group:<name>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || CatalogError::Parse(s.to_string());
        if let Some(g) = s.strip_prefix("group:") {
            return Ok(SpaceKind::LieGroup(g.parse()?));
        }
        for (prefix, tag) in [("S^", "Sphere"), ("CP^", "CP"), ("HP^", "HP")] {
            if let Some(rest) = s.strip_prefix(prefix) {
                let n = rest.trim().parse::<u32>().map_err(|_| bad())?;
                return SpaceKind::from_tag(tag, &[n]);
            }
        }
        let (name, params) = match s.split_once('(') {
            Some((name, rest)) => {
                let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                let params = inner
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                (name.trim(), params)
            }
            None => (s, Vec::new()),
        };
        let cat = catalog();
        let record = cat
            .spaces
            .iter()
            .find(|r| r.cartan == name || r.aliases.iter().any(|a| a == name))
            .ok_or_else(|| CatalogError::UnknownFamily(name.into()))?;
        SpaceKind::from_tag(&record.tag, &params)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    Equal,
    AtLeast,
}

/// A cited constraint on one Betti number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BettiWitness {
    pub degree: usize,
    pub relation: Relation,
    pub value: u64,
    pub citation: String,
}

/// Where the Betti numbers of a space come from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BettiSource {
    /// Closed form, sphere product, or the equal-rank quotient formula.
    Computed,
    /// Only cited constraints are available.
    Witness(Vec<BettiWitness>),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IrreducibleSpace {
    kind: SpaceKind,
    dim: u32,
    equal_rank: bool,
    source: BettiSource,
}

impl IrreducibleSpace {
    pub fn new(kind: SpaceKind) -> Result<Self, CatalogError> {
        if let SpaceKind::LieGroup(g) = kind {
            let g = GroupDescriptor::new(g.family, g.param)?;
            return Ok(IrreducibleSpace {
                kind,
                dim: g.dimension(),
                equal_rank: false,
                source: BettiSource::Computed,
            });
        }
        let record = catalog().space(kind.tag())?;
        let vars = record.bind(&kind.params())?;
        let (g, h) = record.quotient(&vars)?;
        let g_spheres = group_spheres(&g)?;
        let h_sum: u32 = h.iter().map(|x| group_spheres(x).map(|s| s.sum())).sum::<Result<_, _>>()?;
        let dim = g_spheres.sum() - h_sum;
        let equal_rank = g.rank() == h.iter().map(GroupDescriptor::rank).sum::<u32>();
        let source = if record.closed_form.is_some() || equal_rank {
            BettiSource::Computed
        } else {
            BettiSource::Witness(record.witnesses_for(&vars, dim)?)
        };
        Ok(IrreducibleSpace { kind, dim, equal_rank, source })
    }

    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn equal_rank(&self) -> bool {
        self.equal_rank
    }

    pub fn source(&self) -> &BettiSource {
        &self.source
    }

    /// The pair `(G, [H_1, ..., H_k])` with `self = G / (H_1 × ... × H_k)`
    /// rationally, or `None` for a Lie group.
    pub fn quotient(&self) -> Option<(GroupDescriptor, Vec<GroupDescriptor>)> {
        if matches!(self.kind, SpaceKind::LieGroup(_)) {
            return None;
        }
        let record = catalog().space(self.kind.tag()).ok()?;
        let vars = record.bind(&self.kind.params()).ok()?;
        record.quotient(&vars).ok()
    }

    /// Display label in `G/H` form.
    pub fn label(&self) -> String {
        match self.kind {
            SpaceKind::LieGroup(g) => g.to_string(),
            kind => {
                let record = catalog().space(kind.tag()).expect("catalog covers every tag");
                let mut label = record.label.clone();
                for (name, value) in record.params.iter().zip(kind.params()) {
                    label = label.replace(&format!("^{name}"), &format!("^{value}"));
                }
                if record.params.is_empty() || label.contains('^') {
                    label
                } else {
                    format!("{kind}: {label}")
                }
            }
        }
    }
}

impl fmt::Display for IrreducibleSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)
    }
}

/// Manifold dimension `dim G - dim H`.
pub fn space_dimension(s: &IrreducibleSpace) -> u32 {
    s.dim
}

/// A finite product of irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct ProductSpace {
    pub factors: Vec<IrreducibleSpace>,
}

impl ProductSpace {
    pub fn new(factors: Vec<IrreducibleSpace>) -> Self {
        ProductSpace { factors }
    }

    pub fn dim(&self) -> u32 {
        self.factors.iter().map(IrreducibleSpace::dim).sum()
    }
}

impl fmt::Display for ProductSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Every catalog space with `1 <= dim <= max_dim`, each exactly once, in
/// canonical order.
///
/// `max_param` bounds the family parameters (`q` of `CP^q`, `(p, q)` of the
/// Grassmannians, `n` of `SU(n)`, ...). Spheres are bounded by `max_dim`
/// alone. Grassmannians start at `p = 2` since `p = 1` gives the rank-one
/// spaces, and simple Lie groups are listed once per isomorphism class
/// (`SU(n≥2)`, `Sp(n≥2)`, `Spin(n≥7)`, exceptional).
pub fn enumerate_spaces(max_dim: u32, max_param: u32) -> Vec<IrreducibleSpace> {
    let mut kinds = Vec::new();
    for n in 2..=max_dim {
        kinds.push(SpaceKind::Sphere(n));
    }
    for q in 1..=max_param {
        kinds.push(SpaceKind::CP(q));
        kinds.push(SpaceKind::HP(q));
        kinds.push(SpaceKind::SpModU(q));
        if q >= 2 {
            kinds.push(SpaceKind::SOModU(q));
            kinds.push(SpaceKind::SUModSO(q));
            kinds.push(SpaceKind::SUModSp(q));
        }
        for p in 2..=q {
            kinds.push(SpaceKind::RealGr(p, q));
            kinds.push(SpaceKind::ComplexGr(p, q));
            kinds.push(SpaceKind::QuatGr(p, q));
        }
    }
    kinds.extend([
        SpaceKind::CaP2,
        SpaceKind::EI,
        SpaceKind::EII,
        SpaceKind::EIII,
        SpaceKind::EIV,
        SpaceKind::EV,
        SpaceKind::EVI,
        SpaceKind::EVII,
        SpaceKind::EVIII,
        SpaceKind::EIX,
        SpaceKind::FI,
        SpaceKind::G2SO4,
    ]);
    for f in [GroupFamily::G2, GroupFamily::F4, GroupFamily::E6, GroupFamily::E7, GroupFamily::E8] {
        kinds.push(SpaceKind::LieGroup(GroupDescriptor { family: f, param: None }));
    }
    for n in 2..=max_param {
        kinds.push(SpaceKind::LieGroup(GroupDescriptor { family: GroupFamily::SU, param: Some(n) }));
        kinds.push(SpaceKind::LieGroup(GroupDescriptor { family: GroupFamily::Sp, param: Some(n) }));
        if n >= 7 {
            kinds.push(SpaceKind::LieGroup(GroupDescriptor {
                family: GroupFamily::Spin,
                param: Some(n),
            }));
        }
    }
    let mut spaces: Vec<IrreducibleSpace> = kinds
        .into_iter()
        .filter_map(|k| IrreducibleSpace::new(k).ok())
        .filter(|s| s.dim >= 1 && s.dim <= max_dim)
        .collect();
    spaces.sort_by_key(|s| s.kind);
    spaces.dedup_by_key(|s| s.kind);
    spaces
}

// ------------------------------------------------------------------ tables

/// One row of the classical or exceptional obstruction table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub table: u8,
    pub label: String,
    pub space: SpaceKind,
    pub reference: Option<String>,
    pub cited: String,
}

/// Rows of the sphere-dimension table: `(label, formula as printed)`.
pub fn sphere_table() -> Vec<(String, String)> {
    catalog()
        .groups
        .iter()
        .map(|g| {
            let formula = match &g.dims {
                Some(d) => d.iter().map(u32::to_string).collect::<Vec<_>>().join(", "),
                None => g.formula.id().to_string(),
            };
            (g.label.clone(), formula)
        })
        .collect()
}

/// Representative group of each sphere-table row for the row parameter `n`.
pub fn sphere_table_group(label: &str, n: u32) -> Result<GroupDescriptor, CatalogError> {
    let row = catalog()
        .groups
        .iter()
        .find(|g| g.label == label)
        .ok_or_else(|| CatalogError::UnknownFamily(label.into()))?;
    if row.dims.is_some() {
        return GroupDescriptor::new(row.family, None);
    }
    let k = match row.arg {
        RowArg::N => n,
        RowArg::TwoN => 2 * n,
        RowArg::TwoNPlusOne => 2 * n + 1,
    };
    GroupDescriptor::new(row.family, Some(k))
}

/// Rows of table 2 (`table == 2`) or table 3 (`table == 3`).
pub fn table_rows(table: u8) -> Vec<TableRow> {
    catalog()
        .table_rows
        .iter()
        .filter(|r| r.table == table)
        .cloned()
        .collect()
}

// ------------------------------------------------------------------ data file

#[derive(Debug, Deserialize)]
struct RawCatalog {
    group: Vec<RawGroup>,
    space: Vec<RawSpace>,
    table_row: Vec<RawTableRow>,
}

#[derive(Debug, Deserialize)]
struct RawGroup {
    label: String,
    family: String,
    arg: Option<String>,
    n_min: Option<u32>,
    formula: Option<String>,
    dims: Option<Vec<u32>>,
}

#[derive(Debug, Deserialize)]
struct RawSpace {
    tag: String,
    cartan: String,
    aliases: Vec<String>,
    params: Vec<String>,
    constraints: Vec<String>,
    label: String,
    group: String,
    subgroups: Vec<String>,
    closed_form: Option<String>,
    #[serde(default)]
    witness: Vec<RawWitness>,
}

#[derive(Debug, Deserialize)]
struct RawWitness {
    when: Vec<String>,
    degree: Option<usize>,
    relation: Option<String>,
    value: Option<u64>,
    pattern: Option<String>,
    up_to_param: Option<String>,
    up_to_cap: Option<usize>,
    citation: String,
}

#[derive(Debug, Deserialize)]
struct RawTableRow {
    table: u8,
    label: String,
    tag: String,
    params: Vec<u32>,
    reference: Option<String>,
    cited: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum RowArg {
    N,
    TwoN,
    TwoNPlusOne,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Formula {
    Step4To4nMinus1,
    Step4To4nMinus5Then2nMinus1,
    OddFrom1,
    OddFrom3,
    Explicit,
}

impl Formula {
    fn parse(id: &str) -> Option<Self> {
        Some(match id {
            "3, 7, ..., 4n-1" => Self::Step4To4nMinus1,
            "3, 7, ..., 4n-5, 2n-1" => Self::Step4To4nMinus5Then2nMinus1,
            "1, 3, ..., 2n-1" => Self::OddFrom1,
            "3, 5, ..., 2n-1" => Self::OddFrom3,
            _ => return None,
        })
    }

    fn id(self) -> &'static str {
        match self {
            Self::Step4To4nMinus1 => "3, 7, ..., 4n-1",
            Self::Step4To4nMinus5Then2nMinus1 => "3, 7, ..., 4n-5, 2n-1",
            Self::OddFrom1 => "1, 3, ..., 2n-1",
            Self::OddFrom3 => "3, 5, ..., 2n-1",
            Self::Explicit => "",
        }
    }

    fn expand(self, n: u32) -> Vec<u32> {
        match self {
            Self::Step4To4nMinus1 => (1..=n).map(|i| 4 * i - 1).collect(),
            Self::Step4To4nMinus5Then2nMinus1 => {
                let mut v: Vec<u32> = (1..n).map(|i| 4 * i - 1).collect();
                if n >= 1 {
                    v.push(2 * n - 1);
                }
                v
            }
            Self::OddFrom1 => (1..=n).map(|i| 2 * i - 1).collect(),
            Self::OddFrom3 => (2..=n).map(|i| 2 * i - 1).collect(),
            Self::Explicit => Vec::new(),
        }
    }
}

#[derive(Debug)]
struct GroupRow {
    label: String,
    family: GroupFamily,
    arg: RowArg,
    formula: Formula,
    dims: Option<Vec<u32>>,
}

/// Linear expression `c0 + c1*v1 + ...` over parameter names.
#[derive(Debug, Clone)]
struct LinExpr {
    constant: i64,
    terms: Vec<(i64, String)>,
}

impl LinExpr {
    fn parse(s: &str) -> Option<Self> {
        let mut constant = 0;
        let mut terms = Vec::new();
        for part in s.split('+') {
            let part = part.trim();
            let split = part.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(part.len());
            let (num, var) = part.split_at(split);
            if var.is_empty() {
                constant += num.parse::<i64>().ok()?;
            } else {
                let coeff = if num.is_empty() { 1 } else { num.parse().ok()? };
                if !var.chars().all(|c| c.is_ascii_alphabetic()) {
                    return None;
                }
                terms.push((coeff, var.to_string()));
            }
        }
        Some(LinExpr { constant, terms })
    }

    fn eval(&self, vars: &BTreeMap<String, i64>) -> Option<i64> {
        let mut v = self.constant;
        for (c, name) in &self.terms {
            v += c * vars.get(name)?;
        }
        Some(v)
    }
}

#[derive(Debug, Clone)]
struct GroupExpr {
    family: GroupFamily,
    arg: Option<LinExpr>,
}

impl GroupExpr {
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('(') {
            Some((name, rest)) => Some(GroupExpr {
                family: GroupFamily::from_name(name)?,
                arg: Some(LinExpr::parse(rest.strip_suffix(')')?)?),
            }),
            None => Some(GroupExpr { family: GroupFamily::from_name(s)?, arg: None }),
        }
    }

    /// `Ok(None)` for the trivial groups `SO(1)` and `Spin(1)`.
    fn eval(&self, vars: &BTreeMap<String, i64>) -> Result<Option<GroupDescriptor>, CatalogError> {
        let param = match &self.arg {
            Some(e) => {
                let v = e
                    .eval(vars)
                    .ok_or_else(|| CatalogError::Data("unbound parameter".into()))?;
                let v = u32::try_from(v).map_err(|_| CatalogError::InvalidParameter {
                    family: self.family.name().into(),
                    detail: format!("negative argument {v}"),
                })?;
                if v == 1 && matches!(self.family, GroupFamily::SO | GroupFamily::Spin) {
                    return Ok(None);
                }
                Some(v)
            }
            None => None,
        };
        GroupDescriptor::new(self.family, param).map(Some)
    }
}

#[derive(Debug, Clone)]
enum Constraint {
    Compare { var: String, modulus: Option<i64>, op: CmpOp, rhs: Operand },
}

#[derive(Debug, Clone, Copy)]
enum CmpOp {
    Ge,
    Le,
    Gt,
    Lt,
    Eq,
}

#[derive(Debug, Clone)]
enum Operand {
    Int(i64),
    Var(String),
}

impl Constraint {
    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (op, sym) = [(CmpOp::Ge, ">="), (CmpOp::Le, "<="), (CmpOp::Eq, "=="), (CmpOp::Gt, ">"), (CmpOp::Lt, "<")]
            .into_iter()
            .find(|(_, sym)| s.contains(sym))?;
        let (lhs, rhs) = s.split_once(sym)?;
        let (var, modulus) = match lhs.split_once('%') {
            Some((v, m)) => (v.trim().to_string(), Some(m.trim().parse().ok()?)),
            None => (lhs.trim().to_string(), None),
        };
        let rhs = rhs.trim();
        let rhs = match rhs.parse::<i64>() {
            Ok(v) => Operand::Int(v),
            Err(_) => Operand::Var(rhs.to_string()),
        };
        Some(Constraint::Compare { var, modulus, op, rhs })
    }

    fn holds(&self, vars: &BTreeMap<String, i64>) -> Option<bool> {
        let Constraint::Compare { var, modulus, op, rhs } = self;
        let mut lhs = *vars.get(var)?;
        if let Some(m) = modulus {
            lhs = lhs.rem_euclid(*m);
        }
        let rhs = match rhs {
            Operand::Int(v) => *v,
            Operand::Var(name) => *vars.get(name)?,
        };
        Some(match op {
            CmpOp::Ge => lhs >= rhs,
            CmpOp::Le => lhs <= rhs,
            CmpOp::Gt => lhs > rhs,
            CmpOp::Lt => lhs < rhs,
            CmpOp::Eq => lhs == rhs,
        })
    }
}

#[derive(Debug)]
enum WitnessRule {
    Single { degree: usize, relation: Relation, value: u64 },
    HpPattern { up_to_param: String, up_to_cap: usize },
}

#[derive(Debug)]
struct WitnessRecord {
    when: Vec<Constraint>,
    rule: WitnessRule,
    citation: String,
}

#[derive(Debug)]
struct SpaceRecord {
    tag: String,
    cartan: String,
    aliases: Vec<String>,
    params: Vec<String>,
    constraints: Vec<Constraint>,
    label: String,
    group: GroupExpr,
    subgroups: Vec<GroupExpr>,
    closed_form: Option<String>,
    witnesses: Vec<WitnessRecord>,
}

impl SpaceRecord {
    fn bind(&self, values: &[u32]) -> Result<BTreeMap<String, i64>, CatalogError> {
        if values.len() != self.params.len() {
            return Err(CatalogError::InvalidParameter {
                family: self.tag.clone(),
                detail: format!("expected {} parameters, got {}", self.params.len(), values.len()),
            });
        }
        let vars: BTreeMap<String, i64> = self
            .params
            .iter()
            .cloned()
            .zip(values.iter().map(|&v| v as i64))
            .collect();
        for (c, text) in self.constraints.iter().zip(self.constraint_texts()) {
            if c.holds(&vars) != Some(true) {
                return Err(CatalogError::InvalidParameter {
                    family: self.tag.clone(),
                    detail: format!("requires {text}, got {values:?}"),
                });
            }
        }
        Ok(vars)
    }

    fn constraint_texts(&self) -> Vec<String> {
        self.constraints
            .iter()
            .map(|Constraint::Compare { var, modulus, op, rhs }| {
                let m = modulus.map(|m| format!("%{m}")).unwrap_or_default();
                let op = match op {
                    CmpOp::Ge => ">=",
                    CmpOp::Le => "<=",
                    CmpOp::Gt => ">",
                    CmpOp::Lt => "<",
                    CmpOp::Eq => "==",
                };
                let rhs = match rhs {
                    Operand::Int(v) => v.to_string(),
                    Operand::Var(v) => v.clone(),
                };
                format!("{var}{m}{op}{rhs}")
            })
            .collect()
    }

    fn quotient(
        &self,
        vars: &BTreeMap<String, i64>,
    ) -> Result<(GroupDescriptor, Vec<GroupDescriptor>), CatalogError> {
        let g = self
            .group
            .eval(vars)?
            .ok_or_else(|| CatalogError::Data(format!("{}: trivial ambient group", self.tag)))?;
        let mut h = Vec::new();
        for sub in &self.subgroups {
            if let Some(d) = sub.eval(vars)? {
                h.push(d);
            }
        }
        Ok((g, h))
    }

    fn witnesses_for(
        &self,
        vars: &BTreeMap<String, i64>,
        dim: u32,
    ) -> Result<Vec<BettiWitness>, CatalogError> {
        let mut out = Vec::new();
        for w in &self.witnesses {
            if !w.when.iter().all(|c| c.holds(vars) == Some(true)) {
                continue;
            }
            match &w.rule {
                WitnessRule::Single { degree, relation, value } => out.push(BettiWitness {
                    degree: *degree,
                    relation: *relation,
                    value: *value,
                    citation: w.citation.clone(),
                }),
                WitnessRule::HpPattern { up_to_param, up_to_cap } => {
                    let bound = vars
                        .get(up_to_param)
                        .ok_or_else(|| CatalogError::Data(format!("unbound {up_to_param}")))?;
                    let top = (*bound as usize).min(*up_to_cap).min(dim as usize);
                    for degree in 0..=top {
                        out.push(BettiWitness {
                            degree,
                            relation: Relation::Equal,
                            value: u64::from(degree % 4 == 0),
                            citation: w.citation.clone(),
                        });
                    }
                }
            }
        }
        Ok(out)
    }
}

#[derive(Debug)]
struct Catalog {
    groups: Vec<GroupRow>,
    spaces: Vec<SpaceRecord>,
    table_rows: Vec<TableRow>,
}

impl Catalog {
    fn space(&self, tag: &str) -> Result<&SpaceRecord, CatalogError> {
        self.spaces
            .iter()
            .find(|s| s.tag == tag)
            .ok_or_else(|| CatalogError::UnknownFamily(tag.into()))
    }
}

fn parse_catalog(text: &str) -> Result<Catalog, CatalogError> {
    let raw: RawCatalog = toml::from_str(text).map_err(|e| CatalogError::Data(e.to_string()))?;
    let data = |msg: String| CatalogError::Data(msg);

    let mut groups = Vec::new();
    for g in raw.group {
        let family = GroupFamily::from_name(&g.family)
            .ok_or_else(|| data(format!("unknown family {}", g.family)))?;
        let (arg, formula) = match (&g.dims, &g.formula, &g.arg) {
            (Some(_), None, None) => (RowArg::N, Formula::Explicit),
            (None, Some(f), Some(a)) => {
                let arg = match a.as_str() {
                    "n" => RowArg::N,
                    "2n" => RowArg::TwoN,
                    "2n+1" => RowArg::TwoNPlusOne,
                    other => return Err(data(format!("unknown group argument {other}"))),
                };
                let formula =
                    Formula::parse(f).ok_or_else(|| data(format!("unknown formula id {f}")))?;
                (arg, formula)
            }
            _ => return Err(data(format!("group {} needs dims or formula+arg", g.label))),
        };
        let _ = g.n_min;
        groups.push(GroupRow { label: g.label, family, arg, formula, dims: g.dims });
    }

    let mut spaces = Vec::new();
    for s in raw.space {
        let parse_c = |c: &String| Constraint::parse(c).ok_or_else(|| data(format!("bad constraint {c}")));
        let parse_g = |g: &String| GroupExpr::parse(g).ok_or_else(|| data(format!("bad group {g}")));
        let mut witnesses = Vec::new();
        for w in &s.witness {
            let when = w.when.iter().map(parse_c).collect::<Result<Vec<_>, _>>()?;
            let rule = match (&w.pattern, w.degree) {
                (Some(p), None) if p == "hp" => WitnessRule::HpPattern {
                    up_to_param: w.up_to_param.clone().ok_or_else(|| data("pattern needs up_to_param".into()))?,
                    up_to_cap: w.up_to_cap.unwrap_or(usize::MAX),
                },
                (None, Some(degree)) => {
                    let relation = match w.relation.as_deref() {
                        Some("equal") => Relation::Equal,
                        Some("at_least") => Relation::AtLeast,
                        other => return Err(data(format!("bad relation {other:?}"))),
                    };
                    let value = w.value.ok_or_else(|| data("witness needs a value".into()))?;
                    WitnessRule::Single { degree, relation, value }
                }
                _ => return Err(data(format!("{}: witness needs degree or pattern", s.tag))),
            };
            witnesses.push(WitnessRecord { when, rule, citation: w.citation.clone() });
        }
        spaces.push(SpaceRecord {
            constraints: s.constraints.iter().map(parse_c).collect::<Result<_, _>>()?,
            group: parse_g(&s.group)?,
            subgroups: s.subgroups.iter().map(parse_g).collect::<Result<_, _>>()?,
            tag: s.tag,
            cartan: s.cartan,
            aliases: s.aliases,
            params: s.params,
            label: s.label,
            closed_form: s.closed_form,
            witnesses,
        });
    }

    let mut table_rows = Vec::new();
    for r in raw.table_row {
        table_rows.push(TableRow {
            table: r.table,
            label: r.label,
            space: SpaceKind::from_tag(&r.tag, &r.params)?,
            reference: r.reference,
            cited: r.cited,
        });
    }
    Ok(Catalog { groups, spaces, table_rows })
}

fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| parse_catalog(CATALOG_TOML).expect("embedded catalog is well formed"))
}

/// The embedded catalog source text.
pub fn catalog_source() -> &'static str {
    CATALOG_TOML
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GroupDescriptor {
        s.parse().unwrap()
    }

    fn space(kind: SpaceKind) -> IrreducibleSpace {
        IrreducibleSpace::new(kind).unwrap()
    }

    #[test]
    fn table_one_examples() {
        assert_eq!(group_spheres(&g("E8")).unwrap().dims(), &[3, 15, 23, 27, 35, 39, 47, 59]);
        assert_eq!(group_spheres(&g("Spin(8)")).unwrap().dims(), &[3, 7, 11, 7]);
        assert_eq!(group_spheres(&g("U(1)")).unwrap().dims(), &[1]);
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(group_spheres(&g("SO(2)")).unwrap(), group_spheres(&g("U(1)")).unwrap());
        assert_eq!(group_spheres(&g("SO(3)")).unwrap().dims(), &[3]);
        assert_eq!(group_spheres(&g("Spin(4)")).unwrap().dims(), &[3, 3]);
        assert_eq!(group_spheres(&g("SO(6)")).unwrap().sorted(), vec![3, 5, 7]);
        assert_eq!(
            group_spheres(&g("Spin(6)")).unwrap().sorted(),
            group_spheres(&g("SU(4)")).unwrap().sorted()
        );
    }

    #[test]
    fn group_validity() {
        assert!("Sp(0)".parse::<GroupDescriptor>().is_err());
        assert!("Spin(1)".parse::<GroupDescriptor>().is_err());
        assert!("SU(1)".parse::<GroupDescriptor>().is_err());
        assert!("U(0)".parse::<GroupDescriptor>().is_err());
        assert!("E8(3)".parse::<GroupDescriptor>().is_err());
        assert!("Spinn(3)".parse::<GroupDescriptor>().is_err());
    }

    #[test]
    fn rank_matches_sphere_count() {
        for name in ["Sp(5)", "Spin(9)", "Spin(10)", "U(4)", "SU(6)", "G2", "F4", "E6", "E7", "E8", "SO(12)"] {
            let d = g(name);
            assert_eq!(d.rank() as usize, group_spheres(&d).unwrap().len(), "{name}");
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(space_dimension(&space(SpaceKind::CaP2)), 16);
        assert_eq!(space_dimension(&space(SpaceKind::RealGr(3, 8))), 24);
        assert_eq!(space_dimension(&space(SpaceKind::Sphere(11))), 11);
        assert_eq!(space(SpaceKind::EI).dim(), 42);
        assert_eq!(space(SpaceKind::EIV).dim(), 26);
        assert_eq!(space(SpaceKind::EVIII).dim(), 128);
        assert_eq!(space(SpaceKind::G2SO4).dim(), 8);
        assert_eq!(space(SpaceKind::LieGroup(g("E8"))).dim(), 248);
        assert_eq!(space(SpaceKind::SUModSO(2)).dim(), 2);
    }

    #[test]
    fn equal_rank_flags() {
        assert!(space(SpaceKind::RealGr(2, 5)).equal_rank());
        assert!(space(SpaceKind::RealGr(3, 8)).equal_rank());
        assert!(!space(SpaceKind::RealGr(3, 7)).equal_rank());
        assert!(!space(SpaceKind::RealGr(5, 5)).equal_rank());
        assert!(!space(SpaceKind::SUModSO(6)).equal_rank());
        assert!(space(SpaceKind::SUModSO(2)).equal_rank());
        assert!(!space(SpaceKind::SUModSp(4)).equal_rank());
        assert!(!space(SpaceKind::EI).equal_rank());
        assert!(!space(SpaceKind::EIV).equal_rank());
        assert!(space(SpaceKind::EV).equal_rank());
    }

    #[test]
    fn witness_sources() {
        let BettiSource::Witness(w) = space(SpaceKind::SUModSO(6)).source().clone() else {
            panic!("expected witness source")
        };
        assert_eq!(w.len(), 1);
        assert_eq!((w[0].degree, w[0].relation, w[0].value), (5, Relation::AtLeast, 1));

        let BettiSource::Witness(w) = space(SpaceKind::RealGr(5, 7)).source().clone() else {
            panic!("expected witness source")
        };
        assert_eq!((w[0].degree, w[0].value), (4, 2));

        let BettiSource::Witness(w) = space(SpaceKind::RealGr(3, 9)).source().clone() else {
            panic!("expected witness source")
        };
        assert_eq!(w.len(), 10);
        assert!(w.iter().all(|x| x.relation == Relation::Equal));
        assert_eq!(w[8].value, 1);
        assert_eq!(w[9].value, 0);

        // Below the cited range there is nothing to say.
        assert_eq!(space(SpaceKind::SUModSO(4)).source(), &BettiSource::Witness(vec![]));
        assert_eq!(space(SpaceKind::EV).source(), &BettiSource::Computed);
    }

    #[test]
    fn parameter_validity() {
        assert!(IrreducibleSpace::new(SpaceKind::RealGr(3, 2)).is_err());
        assert!(IrreducibleSpace::new(SpaceKind::RealGr(0, 2)).is_err());
        assert!(IrreducibleSpace::new(SpaceKind::SUModSO(1)).is_err());
        assert!(IrreducibleSpace::new(SpaceKind::SUModSp(1)).is_err());
        assert!(IrreducibleSpace::new(SpaceKind::CP(0)).is_err());
        assert!(IrreducibleSpace::new(SpaceKind::RealGr(1, 4)).is_ok());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["S^5", "CP^3", "HP^2", "CaP2", "GrR(2,5)", "GrC(2,2)", "GrH(2,3)", "CI(4)", "DIII(5)", "AI(6)", "AII(4)", "EI", "EIV", "EIX", "FI", "G", "group:E8", "group:SU(5)"] {
            let k: SpaceKind = s.parse().unwrap();
            assert_eq!(k.to_string(), s);
        }
        assert_eq!("BDI(3,8)".parse::<SpaceKind>().unwrap(), SpaceKind::RealGr(3, 8));
        assert_eq!("AIII(2,2)".parse::<SpaceKind>().unwrap(), SpaceKind::ComplexGr(2, 2));
        assert_eq!("CII(2,2)".parse::<SpaceKind>().unwrap(), SpaceKind::QuatGr(2, 2));
        assert_eq!("FII".parse::<SpaceKind>().unwrap(), SpaceKind::CaP2);
        assert!("XYZ".parse::<SpaceKind>().is_err());
        assert!("S^x".parse::<SpaceKind>().is_err());
        assert!("GrR(2)".parse::<SpaceKind>().is_err());
    }

    #[test]
    fn enumeration_small() {
        assert!(enumerate_spaces(0, 5).is_empty());
        let spaces = enumerate_spaces(8, 4);
        let kinds: Vec<SpaceKind> = spaces.iter().map(|s| s.kind()).collect();
        for n in 2..=8 {
            assert!(kinds.contains(&SpaceKind::Sphere(n)));
        }
        for q in 1..=4 {
            assert!(kinds.contains(&SpaceKind::CP(q)));
        }
        assert!(kinds.contains(&SpaceKind::HP(1)));
        assert!(kinds.contains(&SpaceKind::HP(2)));
        assert!(!kinds.contains(&SpaceKind::HP(3)));
        assert!(kinds.contains(&SpaceKind::RealGr(2, 2)));
        assert!(kinds.contains(&SpaceKind::G2SO4));
        assert!(!kinds.contains(&SpaceKind::CaP2));
        assert!(spaces.iter().all(|s| s.dim() <= 8));
        assert!(enumerate_spaces(16, 1).iter().any(|s| s.kind() == SpaceKind::CaP2));
    }

    #[test]
    fn enumeration_matches_dimension_oracle() {
        // Independent dimension formulas for each family.
        let oracle = |k: &SpaceKind| -> Option<u32> {
            Some(match *k {
                SpaceKind::Sphere(n) => n,
                SpaceKind::CP(q) => 2 * q,
                SpaceKind::HP(q) => 4 * q,
                SpaceKind::RealGr(p, q) => p * q,
                SpaceKind::ComplexGr(p, q) => 2 * p * q,
                SpaceKind::QuatGr(p, q) => 4 * p * q,
                SpaceKind::SpModU(n) => n * (n + 1),
                SpaceKind::SOModU(n) => n * (n - 1),
                SpaceKind::SUModSO(n) => (n - 1) * (n + 2) / 2,
                SpaceKind::SUModSp(n) => (n - 1) * (2 * n + 1),
                _ => return None,
            })
        };
        let spaces = enumerate_spaces(40, 8);
        let mut seen = std::collections::HashSet::new();
        for s in &spaces {
            assert!(seen.insert(s.kind()), "duplicate {}", s);
            if let Some(d) = oracle(&s.kind()) {
                assert_eq!(s.dim(), d, "{}", s);
            }
        }
        // Every family member in range appears.
        for p in 2..=8u32 {
            for q in p..=8 {
                for k in [SpaceKind::RealGr(p, q), SpaceKind::ComplexGr(p, q), SpaceKind::QuatGr(p, q)] {
                    let d = oracle(&k).unwrap();
                    assert_eq!(seen.contains(&k), d <= 40, "{k}");
                }
            }
        }
    }

    #[test]
    fn data_file_errors_are_reported() {
        assert!(parse_catalog("not toml [").is_err());
        let broken = CATALOG_TOML.replace("\"3, 5, ..., 2n-1\"", "\"3, 5, ..., 2n+1\"");
        assert!(matches!(parse_catalog(&broken), Err(CatalogError::Data(_))));
    }

    #[test]
    fn table_rows_load() {
        assert_eq!(table_rows(2).len(), 7);
        assert_eq!(table_rows(3).len(), 12);
        assert_eq!(sphere_table().len(), 10);
        assert_eq!(sphere_table_group("Spin(2n)", 4).unwrap(), g("Spin(8)"));
    }

    #[test]
    fn labels() {
        assert_eq!(space(SpaceKind::EVII).label(), "E7/E6×SO(2)");
        assert_eq!(space(SpaceKind::CP(3)).label(), "CP^3");
        assert_eq!(space(SpaceKind::RealGr(3, 8)).label(), "GrR(3,8): SO(p+q)/SO(p)×SO(q)");
    }
}
