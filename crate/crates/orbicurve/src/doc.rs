//! JSON document schemas for the CLI: profiles, orbifolds, morphism
//! descriptors, cover specs, bundle ledgers and equivariant bundles.
//! Every document carries a schema version field `"v": 1`.
//!
//! Field elements are written as bare integers in prime fields and as
//! little-endian coefficient vectors (`[1,0,2]` in F_27) in extensions.
//! Wild components may omit labels; omitted labels are generated
//! deterministically from the owning point so that identical local fields
//! named at a target point and at a fiber point agree.

use std::collections::BTreeMap;

use serde::Deserialize;
use serde_json::Value;

use crate::algebra::{Fq, FqElem, Poly, RationalFunction};
use crate::bundles::{EquivariantBundle, GammaSetCover, Group, LedgerBundle, Matrix};
use crate::covers::{ArtinSchreierCoverSpec, CoverSpec, KummerCoverSpec};
use crate::localfield::RamificationProfile;
use crate::orbifold::{
    BranchData, Curve, FiberPoint, FormalOrbifold, MorphismDescriptor, PointId,
};

#[derive(Debug, thiserror::Error)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}; expected \"v\": 1")]
    Version(u64),
    #[error("missing schema version field \"v\"")]
    MissingVersion,
    #[error("{0}")]
    Semantic(String),
}

impl DocError {
    pub fn semantic(msg: impl Into<String>) -> Self {
        DocError::Semantic(msg.into())
    }
}

fn default_one() -> u64 {
    1
}

fn check_version(value: &Value) -> Result<(), DocError> {
    match value.get("v") {
        Some(v) => match v.as_u64() {
            Some(1) => Ok(()),
            Some(n) => Err(DocError::Version(n)),
            None => Err(DocError::semantic("\"v\" must be the integer 1")),
        },
        None => Err(DocError::MissingVersion),
    }
}

fn from_value<T: serde::de::DeserializeOwned>(value: Value) -> Result<T, DocError> {
    check_version(&value)?;
    Ok(serde_json::from_value(value)?)
}

pub fn parse_value(text: &str) -> Result<Value, DocError> {
    Ok(serde_json::from_str(text)?)
}

// --- profile documents ------------------------------------------------------

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WildDoc {
    #[serde(default)]
    pub label: Option<String>,
    pub jump: u64,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileBody {
    #[serde(default = "default_one")]
    pub tame: u64,
    #[serde(default)]
    pub wild: Vec<WildDoc>,
}

impl ProfileBody {
    /// Materialize over characteristic p; omitted labels become
    /// `prefix:index`.
    pub fn to_profile(&self, p: u64, prefix: &str) -> Result<RamificationProfile, DocError> {
        let wild = self
            .wild
            .iter()
            .enumerate()
            .map(|(i, w)| {
                (
                    w.label.clone().unwrap_or_else(|| format!("{prefix}:{i}")),
                    w.jump,
                )
            })
            .collect();
        RamificationProfile::new(p, self.tame, wild)
            .map_err(|e| DocError::semantic(e.to_string()))
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDoc {
    pub v: u64,
    pub p: u64,
    #[serde(default = "default_one")]
    pub tame: u64,
    #[serde(default)]
    pub wild: Vec<WildDoc>,
}

pub fn profile_from_str(text: &str) -> Result<RamificationProfile, DocError> {
    let doc: ProfileDoc = from_value(parse_value(text)?)?;
    let body = ProfileBody { tame: doc.tame, wild: doc.wild };
    body.to_profile(doc.p, "w")
}

// --- orbifold documents -----------------------------------------------------

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveDoc {
    pub id: String,
    pub genus: u64,
    pub points: Vec<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrbifoldDoc {
    pub v: u64,
    pub curve: CurveDoc,
    pub p: u64,
    #[serde(default)]
    pub branch: BTreeMap<String, ProfileBody>,
}

pub fn orbifold_from_str(text: &str) -> Result<FormalOrbifold, DocError> {
    let doc: OrbifoldDoc = from_value(parse_value(text)?)?;
    let curve = Curve::new(
        doc.curve.id.clone(),
        doc.curve.genus,
        doc.curve.points.iter().map(PointId::new),
    );
    let mut entries = vec![];
    for (pt, body) in &doc.branch {
        entries.push((PointId::new(pt), body.to_profile(doc.p, pt)?));
    }
    let branch =
        BranchData::new(doc.p, entries).map_err(|e| DocError::semantic(e.to_string()))?;
    FormalOrbifold::new(curve, branch).map_err(|e| DocError::semantic(e.to_string()))
}

// --- morphism documents -----------------------------------------------------

/// A local extension in a fiber record: a bare integer means tame of that
/// degree; a profile body gives the full (possibly wild) local profile.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LocalExtDoc {
    Tame(u64),
    Profile(ProfileBody),
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberDoc {
    pub y: String,
    pub x: String,
    pub e: LocalExtDoc,
    #[serde(default, alias = "q_profile")]
    pub q: Option<ProfileBody>,
    #[serde(default)]
    pub p_profile: Option<ProfileBody>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub v: u64,
    pub p: u64,
    pub degree: u64,
    pub source_genus: u64,
    pub target_genus: u64,
    pub fiber: Vec<FiberDoc>,
}

/// Assemble a descriptor: curves are derived from the fiber records, and
/// target profiles named by several records over the same point must agree.
pub fn morphism_from_str(text: &str) -> Result<MorphismDescriptor, DocError> {
    let doc: MorphismDoc = from_value(parse_value(text)?)?;
    let p = doc.p;
    let mut fiber = vec![];
    let mut source_entries = vec![];
    let mut target_profiles: BTreeMap<String, RamificationProfile> = BTreeMap::new();
    for fd in &doc.fiber {
        let local_ext = match &fd.e {
            LocalExtDoc::Tame(e) => RamificationProfile::tame(p, *e)
                .map_err(|e| DocError::semantic(e.to_string()))?,
            LocalExtDoc::Profile(body) => body.to_profile(p, &fd.x)?,
        };
        if let Some(q) = &fd.q {
            source_entries.push((PointId::new(&fd.y), q.to_profile(p, &fd.y)?));
        }
        if let Some(pp) = &fd.p_profile {
            let prof = pp.to_profile(p, &fd.x)?;
            if let Some(existing) = target_profiles.get(&fd.x) {
                if *existing != prof {
                    return Err(DocError::semantic(format!(
                        "conflicting target profiles declared at point {}",
                        fd.x
                    )));
                }
            }
            target_profiles.insert(fd.x.clone(), prof);
        }
        fiber.push(FiberPoint {
            source: PointId::new(&fd.y),
            target: PointId::new(&fd.x),
            local_ext,
        });
    }
    let source_curve = Curve::new(
        "Y",
        doc.source_genus,
        fiber.iter().map(|fp| fp.source.clone()),
    );
    let target_curve = Curve::new(
        "X",
        doc.target_genus,
        fiber.iter().map(|fp| fp.target.clone()),
    );
    let source_branch = BranchData::new(p, source_entries)
        .map_err(|e| DocError::semantic(e.to_string()))?;
    let target_branch = BranchData::new(
        p,
        target_profiles
            .into_iter()
            .map(|(pt, prof)| (PointId::new(pt), prof)),
    )
    .map_err(|e| DocError::semantic(e.to_string()))?;
    let source = FormalOrbifold::new(source_curve, source_branch)
        .map_err(|e| DocError::semantic(e.to_string()))?;
    let target = FormalOrbifold::new(target_curve, target_branch)
        .map_err(|e| DocError::semantic(e.to_string()))?;
    Ok(MorphismDescriptor { degree: doc.degree, source, target, fiber })
}

// --- cover documents --------------------------------------------------------

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverDoc {
    pub v: u64,
    pub family: String,
    pub q: u64,
    #[serde(default)]
    pub f: Option<String>,
    #[serde(default)]
    pub n: Option<u64>,
    #[serde(default)]
    pub divisor: Option<BTreeMap<String, u64>>,
}

/// Parse a field element: a (possibly negative) integer, or a coefficient
/// vector rendered as `[a,b,c]`.
pub fn parse_element(field: &Fq, text: &str) -> Result<FqElem, DocError> {
    let t = text.trim();
    if let Some(inner) = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        let coeffs: Result<Vec<u64>, _> = inner
            .split(',')
            .map(|c| c.trim().parse::<u64>())
            .collect();
        let coeffs =
            coeffs.map_err(|e| DocError::semantic(format!("bad coefficient vector: {e}")))?;
        return field
            .from_coeffs(&coeffs)
            .map_err(|e| DocError::semantic(e.to_string()));
    }
    let n: i64 = t
        .parse()
        .map_err(|_| DocError::semantic(format!("'{t}' is not a field element")))?;
    Ok(field.from_i64(n))
}

pub fn cover_from_str(text: &str) -> Result<CoverSpec, DocError> {
    let doc: CoverDoc = from_value(parse_value(text)?)?;
    cover_from_doc(&doc)
}

pub fn cover_from_doc(doc: &CoverDoc) -> Result<CoverSpec, DocError> {
    let field = Fq::from_order(doc.q).map_err(|e| DocError::semantic(e.to_string()))?;
    match doc.family.as_str() {
        "kummer" => {
            let n = doc
                .n
                .ok_or_else(|| DocError::semantic("kummer documents need \"n\""))?;
            let divisor = doc
                .divisor
                .as_ref()
                .ok_or_else(|| DocError::semantic("kummer documents need \"divisor\""))?;
            let mut entries = vec![];
            for (pt, &a) in divisor {
                entries.push((parse_element(&field, pt)?, a));
            }
            let spec = KummerCoverSpec::new(field, n, entries)
                .map_err(|e| DocError::semantic(e.to_string()))?;
            Ok(CoverSpec::Kummer(spec))
        }
        "artin_schreier" => {
            let f_text = doc
                .f
                .as_ref()
                .ok_or_else(|| DocError::semantic("artin_schreier documents need \"f\""))?;
            let f = parse_function(&field, f_text)?;
            let spec = ArtinSchreierCoverSpec::new(f)
                .map_err(|e| DocError::semantic(e.to_string()))?;
            Ok(CoverSpec::ArtinSchreier(spec))
        }
        other => Err(DocError::semantic(format!(
            "unknown cover family '{other}' (expected kummer or artin_schreier)"
        ))),
    }
}

// --- rational function expressions ------------------------------------------

/// Recursive-descent parser for expressions in `x` over F_q: integers,
/// `x`, `+ - * / ^`, parentheses. Example: `1/x + 1/(x-1)`.
pub fn parse_function(field: &Fq, text: &str) -> Result<RationalFunction, DocError> {
    let mut p = ExprParser { field, bytes: text.as_bytes(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(DocError::semantic(format!(
            "parse error at byte {}: unexpected '{}'",
            p.pos,
            p.bytes[p.pos] as char
        )));
    }
    Ok(value)
}

struct ExprParser<'a> {
    field: &'a Fq,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> DocError {
        DocError::semantic(format!("parse error at byte {}: {msg}", self.pos))
    }

    fn expr(&mut self) -> Result<RationalFunction, DocError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunction, DocError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let d = self.factor()?;
                    acc = acc.div(&d).map_err(|_| self.err("division by zero"))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunction, DocError> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            if start == self.pos {
                return Err(self.err("expected an exponent"));
            }
            let e: u64 = std::str::from_utf8(&self.bytes[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RationalFunction, DocError> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'x') => {
                self.pos += 1;
                Ok(RationalFunction::from_poly(Poly::monomial(
                    self.field,
                    self.field.one(),
                    1,
                )))
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let n: u64 = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| self.err("integer out of range"))?;
                Ok(RationalFunction::from_poly(Poly::constant(
                    self.field,
                    self.field.from_u64(n),
                )))
            }
            Some(c) => Err(self.err(&format!("unexpected '{}'", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

// --- bundle documents -------------------------------------------------------

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LedgerDoc {
    pub v: u64,
    pub gamma: u64,
    pub rank: u64,
    pub degree: i64,
}

pub fn ledger_from_value(value: Value) -> Result<LedgerBundle, DocError> {
    let doc: LedgerDoc = from_value(value)?;
    LedgerBundle::new(doc.gamma, doc.rank, doc.degree)
        .map_err(|e| DocError::semantic(e.to_string()))
}

/// Matrix entries are integers in prime fields or coefficient vectors in
/// extensions.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum EntryDoc {
    Int(i64),
    Vec(Vec<u64>),
}

impl EntryDoc {
    fn to_elem(&self, field: &Fq) -> Result<FqElem, DocError> {
        match self {
            EntryDoc::Int(n) => Ok(field.from_i64(*n)),
            EntryDoc::Vec(v) => field
                .from_coeffs(v)
                .map_err(|e| DocError::semantic(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EquivariantDoc {
    pub v: u64,
    pub q: u64,
    pub rank: usize,
    /// group multiplication table; element 0 is the identity
    pub group: Vec<Vec<usize>>,
    /// `action[g]` is the permutation of the total set by g
    pub action: Vec<Vec<usize>>,
    /// `matrices[g][e]` is the rank x rank transition at (g, e)
    pub matrices: Vec<Vec<Vec<Vec<EntryDoc>>>>,
}

pub fn equivariant_from_value(
    value: Value,
) -> Result<(GammaSetCover, EquivariantBundle), DocError> {
    let doc: EquivariantDoc = from_value(value)?;
    let field = Fq::from_order(doc.q).map_err(|e| DocError::semantic(e.to_string()))?;
    let group = Group::from_table(doc.group.clone())
        .map_err(|e| DocError::semantic(e.to_string()))?;
    let cover = GammaSetCover::new(group, doc.action.clone())
        .map_err(|e| DocError::semantic(e.to_string()))?;
    let n = cover.group().order();
    let size = cover.total_size();
    if doc.matrices.len() != n || doc.matrices.iter().any(|per_g| per_g.len() != size) {
        return Err(DocError::semantic(
            "matrices must be indexed [group element][point]",
        ));
    }
    let mut lambda = vec![];
    for per_g in &doc.matrices {
        let mut row = vec![];
        for m in per_g {
            if m.len() != doc.rank || m.iter().any(|r| r.len() != doc.rank) {
                return Err(DocError::semantic("transition matrices must be rank x rank"));
            }
            let mut rows = vec![];
            for r in m {
                let mut out = vec![];
                for entry in r {
                    out.push(entry.to_elem(&field)?);
                }
                rows.push(out);
            }
            row.push(Matrix::from_rows(&field, rows));
        }
        lambda.push(row);
    }
    Ok((cover, EquivariantBundle::new(field, doc.rank, lambda)))
}

/// Which kind of document feeds `bundle-check`.
pub fn classify_bundle_doc(value: &Value) -> Result<&'static str, DocError> {
    if value.get("gamma").is_some() {
        Ok("ledger")
    } else if value.get("matrices").is_some() {
        Ok("equivariant")
    } else {
        Err(DocError::semantic(
            "bundle documents carry either \"gamma\" (ledger) or \"matrices\" (equivariant)",
        ))
    }
}
