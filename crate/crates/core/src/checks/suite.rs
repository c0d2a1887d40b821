use std::cell::OnceCell;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{chromatic_number, CheckKind, Relation, Verdict, CHROMATIC_MAX_N};
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, Graph};
use crate::spectral::{
    eigenvalues_only, exact_inertia, inertia, spectral_resolution, square_energies, DenseMatrix,
    ResolutionPair, Spectrum, SquareEnergies, EXACT_INERTIA_MAX_N,
};

/// Default relative tolerance for verdicts.
pub const DEFAULT_REL_TOL: f64 = 1e-7;

/// Every check the suite knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckId {
    /// `s⁺ + s⁻ = 2m`.
    TraceIdentity,
    /// `s⁻ ≤ 2m − 4m²/n²`.
    EdgeDensity,
    /// `2m − 4m²/n² ≤ n²/4`.
    EdgeDensityQuarter,
    /// `μ₁ ≤ √(2m − n + 1)` for connected graphs.
    Hong,
    /// `min(s⁺, s⁻) ≥ √n` for connected graphs with `n ≥ 3`.
    SqrtN,
    /// `1 + max(s⁺/s⁻, s⁻/s⁺) ≤ χ`.
    AndoLin,
    /// `min(s⁺, s⁻) ≥ n − 1` for regular disconnected graphs without complete
    /// components.
    RegularDisconnected,
    /// `s⁺ = s⁻` for bipartite graphs.
    BipartiteSymmetry,
    /// `s⁺ − s⁻ ≤ 2m`.
    SpreadTwoM,
    /// Conjectured `min(s⁺, s⁻) ≥ n − 1` for connected graphs.
    MinEnergy,
    /// Conjectured `min(s⁺, s⁻) ≥ max(n⁺, n⁻)`.
    InertiaBound,
    /// `s⁺ − s⁻ ≤ (n − 1)(n − 2)`, reported only.
    SpreadQuadratic,
    /// `s⁺ ≥ n − 1` for graphs without isolated vertices, reported only.
    PlusSideOnly,
    /// `s⁻ ≥ n − 1` for graphs without isolated vertices, reported only.
    MinusSideOnly,
    /// Number of components of the support of `B` (1 means irreducible).
    ResolutionB,
    /// Number of components of the support of `C`.
    ResolutionC,
    /// `s⁻ ≥ 1.5(n − 2)` for maximal planar graphs.
    PlanarMinusLower,
    /// `s⁺ ≤ 4.5(n − 2)` for maximal planar graphs.
    PlanarPlusUpper,
    /// `s⁺ ≤ 3s⁻` for maximal planar graphs.
    PlanarPlusVsMinus,
    /// `s⁻ ≤ 3s⁺` for maximal planar graphs.
    PlanarMinusVsPlus,
    /// Open: `s⁺ ≥ 3(n − 2)` for maximal planar graphs.
    PlanarQuestionPlus,
    /// Open: `s⁻ ≤ 3(n − 2)` for maximal planar graphs.
    PlanarQuestionMinus,
}

impl CheckId {
    pub const ALL: [CheckId; 22] = [
        CheckId::TraceIdentity,
        CheckId::EdgeDensity,
        CheckId::EdgeDensityQuarter,
        CheckId::Hong,
        CheckId::SqrtN,
        CheckId::AndoLin,
        CheckId::RegularDisconnected,
        CheckId::BipartiteSymmetry,
        CheckId::SpreadTwoM,
        CheckId::MinEnergy,
        CheckId::InertiaBound,
        CheckId::SpreadQuadratic,
        CheckId::PlusSideOnly,
        CheckId::MinusSideOnly,
        CheckId::ResolutionB,
        CheckId::ResolutionC,
        CheckId::PlanarMinusLower,
        CheckId::PlanarPlusUpper,
        CheckId::PlanarPlusVsMinus,
        CheckId::PlanarMinusVsPlus,
        CheckId::PlanarQuestionPlus,
        CheckId::PlanarQuestionMinus,
    ];

    pub fn name(self) -> &'static str {
        use CheckId::*;
        match self {
            TraceIdentity => "trace_identity",
            EdgeDensity => "s_minus_edge_density",
            EdgeDensityQuarter => "edge_density_quarter_square",
            Hong => "hong",
            SqrtN => "min_energy_sqrt_n",
            AndoLin => "ando_lin",
            RegularDisconnected => "regular_disconnected",
            BipartiteSymmetry => "bipartite_symmetry",
            SpreadTwoM => "spread_two_m",
            MinEnergy => "min_energy_n_minus_1",
            InertiaBound => "min_energy_inertia",
            SpreadQuadratic => "spread_quadratic",
            PlusSideOnly => "s_plus_n_minus_1",
            MinusSideOnly => "s_minus_n_minus_1",
            ResolutionB => "resolution_b_components",
            ResolutionC => "resolution_c_components",
            PlanarMinusLower => "planar_s_minus_lower",
            PlanarPlusUpper => "planar_s_plus_upper",
            PlanarPlusVsMinus => "planar_s_plus_vs_s_minus",
            PlanarMinusVsPlus => "planar_s_minus_vs_s_plus",
            PlanarQuestionPlus => "planar_question_s_plus",
            PlanarQuestionMinus => "planar_question_s_minus",
        }
    }

    pub fn kind(self) -> CheckKind {
        use CheckId::*;
        match self {
            TraceIdentity | EdgeDensity | EdgeDensityQuarter | Hong | SqrtN | AndoLin
            | RegularDisconnected | BipartiteSymmetry | SpreadTwoM | PlanarMinusLower
            | PlanarPlusUpper | PlanarPlusVsMinus | PlanarMinusVsPlus => CheckKind::Proven,
            MinEnergy | InertiaBound | PlanarQuestionPlus | PlanarQuestionMinus => {
                CheckKind::Conjecture
            }
            SpreadQuadratic | PlusSideOnly | MinusSideOnly | ResolutionB | ResolutionC => {
                CheckKind::Report
            }
        }
    }

    pub fn relation(self) -> Relation {
        use CheckId::*;
        match self {
            TraceIdentity | BipartiteSymmetry => Relation::Eq,
            SqrtN | RegularDisconnected | MinEnergy | InertiaBound | PlusSideOnly
            | MinusSideOnly | PlanarMinusLower | PlanarQuestionPlus => Relation::Ge,
            _ => Relation::Le,
        }
    }

    pub fn from_name(name: &str) -> Option<CheckId> {
        CheckId::ALL.into_iter().find(|c| c.name() == name)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Named selections of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    /// Proven checks plus conjectures and reports; planar checks excluded.
    All,
    Proven,
    Conjectures,
    /// Bounds that need a maximal planar input.
    Planar,
}

impl Suite {
    pub fn checks(self) -> &'static [CheckId] {
        match self {
            Suite::All => &CheckId::ALL[..16],
            Suite::Proven => &CheckId::ALL[..9],
            Suite::Conjectures => &CheckId::ALL[9..16],
            Suite::Planar => &CheckId::ALL[16..],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "proven" => Ok(Suite::Proven),
            "conjectures" => Ok(Suite::Conjectures),
            "planar" => Ok(Suite::Planar),
            other => Err(Error::param(format!(
                "unknown suite {other:?} (expected all, proven, conjectures or planar)"
            ))),
        }
    }
}

/// A graph together with the spectrum shared by every check.
pub struct Analysis<'g> {
    graph: &'g Graph,
    id: String,
    spectrum: Spectrum<f64>,
    energies: SquareEnergies<f64>,
    rel_tol: f64,
    resolution: OnceCell<std::result::Result<ResolutionPair<f64>, String>>,
}

impl<'g> Analysis<'g> {
    pub fn new(graph: &'g Graph) -> Result<Self> {
        Self::with_tol(graph, DEFAULT_REL_TOL)
    }

    pub fn with_tol(graph: &'g Graph, rel_tol: f64) -> Result<Self> {
        if !(rel_tol.is_finite() && rel_tol >= 0.0) {
            return Err(Error::param(format!(
                "tolerance must be finite and non-negative, got {rel_tol}"
            )));
        }
        let spectrum = eigenvalues_only::<f64>(graph)?;
        let energies = square_energies(&spectrum, None);
        Ok(Analysis {
            graph,
            id: encode_graph6(graph),
            spectrum,
            energies,
            rel_tol,
            resolution: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    /// graph6 text of the graph.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn spectrum(&self) -> &Spectrum<f64> {
        &self.spectrum
    }

    pub fn energies(&self) -> &SquareEnergies<f64> {
        &self.energies
    }

    fn resolution(&self) -> std::result::Result<&ResolutionPair<f64>, String> {
        self.resolution
            .get_or_init(|| spectral_resolution(self.graph, None).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn cmp(&self, id: CheckId, lhs: f64, rhs: f64) -> Verdict {
        Verdict::compare(id, &self.id, lhs, rhs, self.rel_tol, 1.0)
    }

    fn na(&self, id: CheckId, why: &str) -> Verdict {
        Verdict::not_applicable(id, &self.id, why)
    }

    /// Evaluate one check against the shared spectrum.
    pub fn check(&self, id: CheckId) -> Result<Verdict> {
        use CheckId::*;
        let g = self.graph;
        let (n, m) = (g.n() as f64, g.m() as f64);
        let e = &self.energies;
        let v = match id {
            TraceIdentity => self.cmp(id, e.s_plus + e.s_minus, 2.0 * m),
            EdgeDensity | EdgeDensityQuarter if g.n() == 0 => self.na(id, "null graph"),
            EdgeDensity => self.cmp(id, e.s_minus, 2.0 * m - 4.0 * m * m / (n * n)),
            EdgeDensityQuarter => self.cmp(id, 2.0 * m - 4.0 * m * m / (n * n), n * n / 4.0),
            Hong if g.n() == 0 || !g.is_connected() => self.na(id, "needs a connected graph"),
            Hong => self.cmp(id, self.spectrum.largest(), (2.0 * m - n + 1.0).sqrt()),
            SqrtN if g.n() < 3 || !g.is_connected() => {
                self.na(id, "needs a connected graph with n >= 3")
            }
            SqrtN => self.cmp(id, e.min(), n.sqrt()),
            AndoLin if g.m() == 0 => self.na(id, "needs at least one edge"),
            AndoLin if g.n() > CHROMATIC_MAX_N => {
                self.na(id, "chromatic number beyond the exact budget")
            }
            AndoLin => {
                let chi = chromatic_number(g)?.chi;
                self.cmp(id, 1.0 + e.ratio_max, chi as f64)
            }
            RegularDisconnected => match g.is_regular() {
                Some(_) if !g.is_connected() => {
                    if g.components().iter().any(|c| g.is_clique(c)) {
                        self.na(id, "has a complete component")
                    } else {
                        self.cmp(id, e.min(), n - 1.0)
                    }
                }
                _ => self.na(id, "needs a regular disconnected graph"),
            },
            BipartiteSymmetry if !g.is_bipartite() => self.na(id, "needs a bipartite graph"),
            BipartiteSymmetry => self.cmp(id, e.s_plus, e.s_minus),
            SpreadTwoM => self.cmp(id, e.spread, 2.0 * m),
            MinEnergy if g.n() == 0 || !g.is_connected() => self.na(id, "needs a connected graph"),
            MinEnergy => Verdict::compare(id, &self.id, e.min(), n - 1.0, self.rel_tol, n),
            InertiaBound => {
                let (inr, how) = if g.n() <= EXACT_INERTIA_MAX_N {
                    (exact_inertia(g)?, "exact inertia")
                } else {
                    (inertia(&self.spectrum, None), "tolerance inertia")
                };
                self.cmp(id, e.min(), inr.n_plus.max(inr.n_minus) as f64)
                    .with_note(how)
            }
            SpreadQuadratic => {
                let note = if g.is_connected() {
                    "conditional on the minimum energy conjecture"
                } else {
                    "unconditional for disconnected graphs"
                };
                self.cmp(id, e.spread, (n - 1.0) * (n - 2.0))
                    .with_note(note)
            }
            PlusSideOnly | MinusSideOnly if g.n() < 2 || (0..g.n()).any(|u| g.degree(u) == 0) => {
                self.na(id, "needs n >= 2 and no isolated vertices")
            }
            PlusSideOnly => self.cmp(id, e.s_plus, n - 1.0),
            MinusSideOnly => self.cmp(id, e.s_minus, n - 1.0),
            ResolutionB | ResolutionC if g.m() == 0 || !g.is_connected() => {
                self.na(id, "needs a connected graph with an edge")
            }
            ResolutionB | ResolutionC => {
                let res = self.resolution().map_err(Error::InvalidParameter)?;
                let part = if id == ResolutionB { &res.b } else { &res.c };
                let comps = support_components(part, res.support_tau());
                self.cmp(id, comps as f64, 1.0)
            }
            PlanarMinusLower | PlanarPlusUpper | PlanarPlusVsMinus | PlanarMinusVsPlus
            | PlanarQuestionPlus | PlanarQuestionMinus
                if g.n() < 3 || g.m() != 3 * (g.n() - 2) =>
            {
                self.na(id, "needs a maximal planar graph (n >= 3, m = 3(n - 2))")
            }
            PlanarMinusLower => self.cmp(id, e.s_minus, 1.5 * (n - 2.0)),
            PlanarPlusUpper => self.cmp(id, e.s_plus, 4.5 * (n - 2.0)),
            PlanarPlusVsMinus => self.cmp(id, e.s_plus, 3.0 * e.s_minus),
            PlanarMinusVsPlus => self.cmp(id, e.s_minus, 3.0 * e.s_plus),
            PlanarQuestionPlus => self.cmp(id, e.s_plus, 3.0 * (n - 2.0)),
            PlanarQuestionMinus => self.cmp(id, e.s_minus, 3.0 * (n - 2.0)),
        };
        Ok(v)
    }

    /// Run `checks` in order; an error inside one check becomes a
    /// non-applicable verdict whose note starts with `error:`.
    pub fn run(&self, checks: &[CheckId]) -> Vec<Verdict> {
        checks
            .iter()
            .map(|&id| {
                self.check(id)
                    .unwrap_or_else(|err| self.na(id, &format!("error: {err}")))
            })
            .collect()
    }
}

/// Components of the off-diagonal support `{i, j : |M_ij| > tau}`.
fn support_components(m: &DenseMatrix<f64>, tau: f64) -> usize {
    let n = m.n();
    let mut seen = vec![false; n];
    let mut comps = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        comps += 1;
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for j in 0..n {
                if !seen[j] && i != j && m[(i, j)].abs() > tau {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    comps
}

/// Run the selected checks on one graph. Never fails: a spectrum failure is
/// recorded on every verdict.
pub fn run_suite(g: &Graph, checks: &[CheckId], rel_tol: f64) -> Vec<Verdict> {
    if checks.is_empty() {
        return Vec::new();
    }
    match Analysis::with_tol(g, rel_tol) {
        Ok(a) => a.run(checks),
        Err(err) => {
            let id = encode_graph6(g);
            checks
                .iter()
                .map(|&c| Verdict::not_applicable(c, &id, format!("error: {err}")))
                .collect()
        }
    }
}

/// The maximal planar bundle. Unlike [`run_suite`], a graph without
/// `m = 3(n − 2)` edges is an error rather than a batch of non-applicable
/// verdicts.
pub fn check_maximal_planar(g: &Graph, rel_tol: f64) -> Result<Vec<Verdict>> {
    if g.n() < 3 || g.m() != 3 * (g.n() - 2) {
        return Err(Error::param(format!(
            "maximal planar checks need n >= 3 and m = 3(n - 2); got n = {}, m = {}",
            g.n(),
            g.m()
        )));
    }
    let a = Analysis::with_tol(g, rel_tol)?;
    Suite::Planar
        .checks()
        .iter()
        .map(|&id| a.check(id))
        .collect()
}

/// Aggregate counts over a batch of verdicts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub verdicts: usize,
    pub applicable: usize,
    pub proven_failures: usize,
    /// Violated conjectures and reports.
    pub findings: usize,
    pub errors: usize,
}

impl SuiteSummary {
    pub fn is_clean(&self) -> bool {
        self.proven_failures == 0 && self.errors == 0
    }
}

pub fn summarize<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> SuiteSummary {
    let mut s = SuiteSummary::default();
    for v in verdicts {
        s.verdicts += 1;
        s.applicable += v.applicable as usize;
        if v.is_proven_failure() {
            s.proven_failures += 1;
        } else if v.fails() {
            s.findings += 1;
        }
        s.errors += v.note.starts_with("error:") as usize;
    }
    s
}

/// Irreducibility of the positive and negative parts of the resolution of a
/// connected graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IrreducibilityReport {
    pub graph_id: String,
    pub b_irreducible: bool,
    pub c_irreducible: bool,
    pub b_components: usize,
    pub c_components: usize,
}

impl IrreducibilityReport {
    pub fn both_irreducible(&self) -> bool {
        self.b_irreducible && self.c_irreducible
    }
}

/// `None` when the graph is disconnected or edgeless.
pub fn check_irreducibility_question(g: &Graph) -> Result<Option<IrreducibilityReport>> {
    if g.m() == 0 || !g.is_connected() {
        return Ok(None);
    }
    let res = spectral_resolution::<f64>(g, None)?;
    let tau = res.support_tau();
    let (bc, cc) = (
        support_components(&res.b, tau),
        support_components(&res.c, tau),
    );
    Ok(Some(IrreducibilityReport {
        graph_id: encode_graph6(g),
        b_irreducible: bc == 1,
        c_irreducible: cc == 1,
        b_components: bc,
        c_components: cc,
    }))
}

/// Scan graphs in parallel and return, in input order, the connected ones
/// whose `B` or `C` is reducible, together with the number scanned.
pub fn irreducibility_scan(graphs: &[Graph]) -> Result<(usize, Vec<IrreducibilityReport>)> {
    let reports = graphs
        .par_iter()
        .map(check_irreducibility_question)
        .collect::<Result<Vec<_>>>()?;
    let scanned = reports.iter().filter(|r| r.is_some()).count();
    let hits = reports
        .into_iter()
        .flatten()
        .filter(|r| !r.both_irreducible())
        .collect();
    Ok((scanned, hits))
}
