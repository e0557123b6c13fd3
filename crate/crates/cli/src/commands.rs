use bellforge_core::analysis::DEFAULT_RANK_TOLERANCE;
use bellforge_core::bell::closed_form;
use bellforge_core::flatmaps::{catalog, verify_antimap};
use bellforge_core::fourier::{clock, shift, verify_shift_diagonalization, walsh_hadamard};
use bellforge_core::projective::projector_of;
use bellforge_core::quadrature::{moment_cp1, moment_cp1_exact, sample_fubini_study};
use bellforge_core::{
    closed_form_bell_cp1, closed_form_bell_cp2, fivel_bell, flat_projector, flat_state, rank_of_family, resolution_of_unity,
    schmidt, state_distance, total_measure, unitary_transport_identity, BipartiteState, FlatMapId, HomogeneousPoint,
    Integrator, McSpec, QuadratureSpecCp1, QuadratureSpecCpn, Space, SpinLabel,
};

use crate::args::{
    Check, Family, IntegrateArgs, IntegratorArgs, MakeArgs, MatrixArgs, MatrixKind, Method, SpaceArgs, SpaceKind,
    VerifyArgs,
};
use crate::output::{usage, write_json, CheckResult, CliResult, MatrixFile, Report, StateFile};

const QUADRATURE_TOL: f64 = 1e-10;
const ENTROPY_TOL: f64 = 1e-9;
const MC_TOL: f64 = 5e-3;
const IDENTITY_TOL: f64 = 1e-12;
const SHIFT_TOL: f64 = 1e-13;
const DEFAULT_QUDITS: usize = 4;

fn space_kind(args: &SpaceArgs, flat: Option<FlatMapId>) -> SpaceKind {
    match (args.space, flat) {
        (Some(kind), _) => kind,
        (None, Some(FlatMapId::Cp1(_))) => SpaceKind::Cp1,
        (None, Some(FlatMapId::Cpn { n: 2, .. })) => SpaceKind::Cp2,
        (None, Some(FlatMapId::Cpn { .. })) => SpaceKind::Cpn,
        (None, None) if args.n.is_some() => SpaceKind::Cpn,
        (None, None) => SpaceKind::Cp1,
    }
}

fn parse_flat(args: &SpaceArgs) -> CliResult<Option<FlatMapId>> {
    let Some(text) = &args.flat else { return Ok(None) };
    let id: FlatMapId = text.parse()?;
    if args.p.is_some() || args.q.is_some() {
        return Err(usage("give either --flat or --p/--q, not both"));
    }
    Ok(Some(id))
}

fn resolve_space(args: &SpaceArgs, flat: Option<FlatMapId>) -> CliResult<Space> {
    match space_kind(args, flat) {
        SpaceKind::Cp1 => {
            if args.p.is_some() || args.q.is_some() || args.n.is_some() {
                return Err(usage("--n, --p and --q do not apply to cp1"));
            }
            Ok(Space::cp1(args.two_j))
        }
        SpaceKind::Cp2 => {
            if args.n.is_some_and(|n| n != 3) {
                return Err(usage("cp2 carries qutrits; --n must be 3 if given"));
            }
            Ok(Space::Cpn(2))
        }
        SpaceKind::Cpn => {
            let from_flat = match flat {
                Some(FlatMapId::Cpn { n, .. }) => Some(n + 1),
                _ => None,
            };
            let dim = match (args.n, from_flat) {
                (Some(a), Some(b)) if a != b => {
                    return Err(usage(format!("--n {a} disagrees with --flat, which acts on {b}-level qudits")))
                }
                (a, b) => a.or(b).unwrap_or(DEFAULT_QUDITS),
            };
            if dim < 2 {
                return Err(usage("--n must be at least 2"));
            }
            Ok(Space::cpn(dim - 1)?)
        }
    }
}

/// Space plus the requested flat maps: the single map named on the command
/// line, or the whole catalog when `all_by_default` and nothing was named.
fn resolve(args: &SpaceArgs, all_by_default: bool) -> CliResult<(Space, Vec<FlatMapId>)> {
    let flat = parse_flat(args)?;
    let space = resolve_space(args, flat)?;
    let ids = match (flat, space) {
        (Some(id), _) => {
            id.check_space(&space)?;
            vec![id]
        }
        (None, _) if all_by_default && args.p.is_none() && args.q.is_none() => catalog(&space),
        (None, Space::Cp1(_)) => vec![FlatMapId::Cp1(1)],
        (None, Space::Cpn(n)) => vec![FlatMapId::cpn(n, args.p.unwrap_or(0), args.q.unwrap_or(0))?],
    };
    Ok((space, ids))
}

fn integrator(space: &Space, args: &IntegratorArgs) -> CliResult<Integrator> {
    if args.method == Method::Mc {
        if args.radial_nodes.is_some() || args.angular_nodes.is_some() || args.simplex_nodes.is_some() {
            return Err(usage("node counts apply to --method quadrature only"));
        }
        return Ok(Integrator::MonteCarlo(McSpec::new(args.mc_samples, args.seed)?));
    }
    match *space {
        Space::Cp1(s) => {
            if args.simplex_nodes.is_some() {
                return Err(usage("--simplex-nodes applies to cp2/cpn only"));
            }
            let d = QuadratureSpecCp1::for_spin(s);
            let spec = QuadratureSpecCp1::new(
                args.radial_nodes.unwrap_or(d.radial_nodes),
                args.angular_nodes.unwrap_or(d.angular_nodes),
            )?;
            Ok(Integrator::Quadrature { cp1: Some(spec), cpn: None })
        }
        Space::Cpn(_) => {
            if args.radial_nodes.is_some() {
                return Err(usage("--radial-nodes applies to cp1 only"));
            }
            let d = QuadratureSpecCpn::default();
            let spec = QuadratureSpecCpn::new(
                args.simplex_nodes.unwrap_or(d.simplex_nodes),
                args.angular_nodes.unwrap_or(d.angular_nodes),
            )?;
            Ok(Integrator::Quadrature { cp1: None, cpn: Some(spec) })
        }
    }
}

fn describe(space: &Space, id: FlatMapId) -> String {
    match (space, id) {
        (Space::Cp1(s), FlatMapId::Cp1(tag)) => {
            let sum = match tag {
                1 => "Σ_k |k⟩|k⟩",
                2 => "Σ_k (−1)^k |k⟩|k⟩",
                3 => "Σ_k |k⟩|2j−k⟩",
                _ => "Σ_k (−1)^k |k⟩|2j−k⟩",
            };
            format!("spin {} Bell state {tag}: {sum} / √{}", s, s.dim())
        }
        (_, FlatMapId::Cpn { n, p, q }) => {
            format!("{} ({}): Σ_k ω^({p}k) |k⟩|k+{q}⟩ / √{}, ω = exp(2πi/{})", id, id.label(), n + 1, n + 1)
        }
        _ => id.to_string(),
    }
}

fn max_entry_gap(a: &BipartiteState, b: &BipartiteState) -> f64 {
    a.amplitudes().iter().zip(b.amplitudes()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

pub fn bell_make(args: &MakeArgs) -> CliResult<Report> {
    let (space, ids) = resolve(&args.space, false)?;
    let id = ids[0];
    let state = closed_form(&space, id)?;
    let mut report = Report::new("bell make", args)?;
    report.value("flat", id.to_string())?;
    report.value("closed_form", describe(&space, id))?;
    report.check(CheckResult::new("norm", "⟪B|B⟫ = 1", (state.norm() - 1.0).abs(), IDENTITY_TOL));
    let file = StateFile::from(&state);
    if let Some(path) = &args.out {
        write_json(path, &file)?;
    }
    report.state = Some(file);
    Ok(report)
}

pub fn bell_integrate(args: &IntegrateArgs) -> CliResult<Report> {
    let (space, ids) = resolve(&args.space, false)?;
    let id = ids[0];
    let integ = integrator(&space, &args.integrator)?;
    let (state, norm_residual) = fivel_bell(&space, id, &integ)?;
    let exact = closed_form(&space, id)?;
    let distance = state_distance(&state, &exact)?;
    let gap = max_entry_gap(&state, &exact);

    let mut report = Report::new("bell integrate", args)?;
    report.value("flat", id.to_string())?;
    report.value("closed_form", describe(&space, id))?;
    report.value("integrator", integ)?;
    report.value("norm_residual", norm_residual)?;
    report.value("distance", distance)?;
    report.value("max_entry_gap", gap)?;
    if integ.is_monte_carlo() {
        let tol = args.tolerance.unwrap_or(MC_TOL);
        report.check(CheckResult::new("closed form", "max_ab |B_ab − closed form_ab|", gap, tol));
    } else {
        let tol = args.tolerance.unwrap_or(QUADRATURE_TOL);
        report.check(CheckResult::new("closed form", "‖B − closed form‖", distance, tol));
    }
    let file = StateFile::from(&state);
    if let Some(path) = &args.out {
        write_json(path, &file)?;
    }
    report.state = Some(file);
    Ok(report)
}

pub fn matrix(args: &MatrixArgs) -> CliResult<MatrixFile> {
    let m = match args.kind {
        MatrixKind::Walsh => walsh_hadamard(args.n)?,
        MatrixKind::Clock => clock(args.n)?,
        MatrixKind::Shift => shift(args.n)?,
    };
    let name = match args.kind {
        MatrixKind::Walsh => "walsh",
        MatrixKind::Clock => "clock",
        MatrixKind::Shift => "shift",
    };
    Ok(MatrixFile::new(name, m.matrix()))
}

/// Thresholds shared by the verify checks; `--tolerance` overrides all of them.
struct Tolerances {
    integral: f64,
    entropy: f64,
    identity: f64,
    shift: f64,
}

impl Tolerances {
    fn new(args: &VerifyArgs) -> Self {
        let monte_carlo = args.integrator.method == Method::Mc;
        let integral = if monte_carlo { MC_TOL } else { QUADRATURE_TOL };
        let entropy = if monte_carlo { MC_TOL } else { ENTROPY_TOL };
        match args.tolerance {
            Some(t) => Tolerances { integral: t, entropy: t, identity: t, shift: t },
            None => Tolerances { integral, entropy, identity: IDENTITY_TOL, shift: SHIFT_TOL },
        }
    }
}

fn sampled_points(space: &Space, count: usize, seed: u64) -> CliResult<Vec<HomogeneousPoint>> {
    Ok(sample_fubini_study(space.manifold_dim(), &McSpec::new(count, seed)?))
}

fn check_unity(report: &mut Report, space: &Space, integ: &Integrator, tol: f64) {
    let deviation = resolution_of_unity(space, integ);
    report.check(CheckResult::new(format!("unity {space}"), "‖∫ dμ |Z⟩⟨Z| − I‖_F", deviation, tol));
}

fn check_measure(report: &mut Report, space: &Space, integ: &Integrator, tol: f64) {
    let mass = total_measure(space, integ);
    let residual = (mass - space.dim() as f64).abs();
    report.check(CheckResult::new(format!("measure {space}"), "|∫ dμ − dim V|", residual, tol));
}

fn check_moments(report: &mut Report, two_j: u32, tol: f64) -> CliResult<()> {
    let s = SpinLabel::new(two_j);
    for k in 0..=two_j {
        let residual = (moment_cp1(s, k)? - moment_cp1_exact(s, k)).abs();
        report.check(CheckResult::new(
            format!("moment 2j={two_j} k={k}"),
            "∫ dμ |z|^(2k) / (1+|z|²)^(2j) = 1 / C(2j, k)",
            residual,
            tol,
        ));
    }
    Ok(())
}

fn check_antimap(report: &mut Report, space: &Space, ids: &[FlatMapId], pairs: usize, seed: u64, tol: f64) -> CliResult<()> {
    let points = sampled_points(space, 2 * pairs.max(1), seed)?;
    let pairs: Vec<_> = points.chunks(2).map(|p| (p[0].clone(), p[1].clone())).collect();
    for &id in ids {
        let residual = verify_antimap(space, id, &pairs)?;
        report.check(CheckResult::new(format!("antimap {space} {id}"), "⟨Z♭|W♭⟩ = ⟨W|Z⟩", residual, tol));
    }
    Ok(())
}

fn check_projector(report: &mut Report, space: &Space, ids: &[FlatMapId], points: usize, seed: u64, tol: f64) -> CliResult<()> {
    let points = sampled_points(space, points.max(1), seed)?;
    for &id in ids {
        let mut worst: f64 = 0.0;
        for h in &points {
            let z = space.coherent_state(h)?;
            let via_state = projector_of(&flat_state(id, &z)?);
            let via_projector = flat_projector(id, &projector_of(&z))?;
            worst = worst.max(via_state.distance(&via_projector));
        }
        report.check(CheckResult::new(
            format!("projector {space} {id}"),
            "|Z♭⟩⟨Z♭| = U conj(|Z⟩⟨Z|) U†",
            worst,
            tol,
        ));
    }
    Ok(())
}

fn check_shift(report: &mut Report, dims: impl IntoIterator<Item = usize>, tol: f64) -> CliResult<()> {
    for n in dims {
        let residual = verify_shift_diagonalization(n)?;
        report.check(CheckResult::new(format!("shift n={n}"), "shift = W̃ · clock · W̃⁻¹", residual, tol));
    }
    Ok(())
}

fn check_rank(report: &mut Report, family: Family, cutoff: f64) -> CliResult<()> {
    let (states, expected) = match family {
        Family::Spin1 => ((1..=4).map(|t| closed_form_bell_cp1(SpinLabel::new(2), t)).collect::<Result<Vec<_>, _>>()?, 3),
        Family::Qubit => ((1..=4).map(|t| closed_form_bell_cp1(SpinLabel::new(1), t)).collect::<Result<Vec<_>, _>>()?, 4),
        Family::Qutrit => (
            (0..3)
                .flat_map(|q| (0..3).map(move |p| closed_form_bell_cp2(p, q)))
                .collect::<Result<Vec<_>, _>>()?,
            9,
        ),
    };
    let rank = rank_of_family(&states, cutoff)?;
    report.value("rank", rank)?;
    report.value("expected_rank", expected)?;
    report.value("singular_value_cutoff", cutoff)?;
    report.check(CheckResult::new(
        format!("rank {}", serde_json::to_value(family)?.as_str().unwrap_or_default()),
        "numerical rank of the family equals the expected count",
        rank.abs_diff(expected) as f64,
        0.0,
    ));
    Ok(())
}

fn check_entanglement(
    report: &mut Report,
    space: &Space,
    ids: &[FlatMapId],
    integ: &Integrator,
    tol: &Tolerances,
) -> CliResult<()> {
    let dim = space.dim() as f64;
    for &id in ids {
        let (numeric, _) = fivel_bell(space, id, integ)?;
        for (which, state) in [("closed form", closed_form(space, id)?), ("integral", numeric)] {
            let data = schmidt(&state);
            let sv = data.singular_values.iter().map(|v| (v - 1.0 / dim.sqrt()).abs()).fold(0.0, f64::max);
            let name = format!("{space} {id} {which}");
            report.check(CheckResult::new(format!("schmidt {name}"), "Schmidt values = 1/√dim V", sv, tol.integral));
            report.check(CheckResult::new(
                format!("entropy {name}"),
                "entanglement entropy = ln dim V",
                (data.entropy - dim.ln()).abs(),
                tol.entropy,
            ));
            report.check(CheckResult::new(format!("norm {name}"), "⟪B|B⟫ = 1", (state.norm() - 1.0).abs(), tol.integral));
        }
    }
    Ok(())
}

fn check_bell(report: &mut Report, space: &Space, ids: &[FlatMapId], integ: &Integrator, tol: f64) -> CliResult<()> {
    for &id in ids {
        let (state, _) = fivel_bell(space, id, integ)?;
        let exact = closed_form(space, id)?;
        let residual = if integ.is_monte_carlo() { max_entry_gap(&state, &exact) } else { state_distance(&state, &exact)? };
        report.check(CheckResult::new(format!("bell {space} {id}"), "integral = closed form", residual, tol));
    }
    Ok(())
}

fn check_transport(report: &mut Report, space: &Space, ids: &[FlatMapId], integ: &Integrator, tol: f64) -> CliResult<()> {
    for &id in ids {
        let residual = unitary_transport_identity(space, id, integ)?;
        report.check(CheckResult::new(
            format!("transport {space} {id}"),
            "integral = (I ⊗ U) Σ_k |k⟩|k⟩ / √dim V",
            residual,
            tol,
        ));
    }
    Ok(())
}

fn battery(report: &mut Report, args: &VerifyArgs, tol: &Tolerances) -> CliResult<()> {
    let exact = Integrator::Exact;
    let seed = args.integrator.seed;
    let mut spaces: Vec<Space> = (0..=10).map(Space::cp1).collect();
    spaces.push(Space::Cpn(2));
    for space in &spaces {
        check_unity(report, space, &exact, tol.integral);
        check_measure(report, space, &exact, tol.integral);
    }
    for two_j in 0..=10 {
        check_moments(report, two_j, tol.integral)?;
    }
    for space in [Space::cp1(1), Space::cp1(2), Space::cp1(5), Space::Cpn(2), Space::Cpn(3)] {
        let ids = catalog(&space);
        check_antimap(report, &space, &ids, args.pairs, seed, tol.identity)?;
        check_projector(report, &space, &ids, args.points, seed, tol.identity)?;
    }
    check_shift(report, 2..=16, tol.shift)?;
    check_rank(report, Family::Spin1, DEFAULT_RANK_TOLERANCE)?;
    let mut bell_spaces: Vec<Space> = (1..=10).map(Space::cp1).collect();
    bell_spaces.push(Space::Cpn(2));
    for space in &bell_spaces {
        let ids = catalog(space);
        check_bell(report, space, &ids, &exact, tol.integral)?;
        check_entanglement(report, space, &ids, &exact, tol)?;
    }
    let cp3 = Space::Cpn(3);
    check_transport(report, &cp3, &catalog(&cp3), &exact, tol.integral)?;
    Ok(())
}

pub fn verify(args: &VerifyArgs) -> CliResult<Report> {
    let mut report = Report::new(&format!("verify {}", serde_json::to_value(args.check)?.as_str().unwrap_or_default()), args)?;
    let tol = Tolerances::new(args);
    let seed = args.integrator.seed;
    match args.check {
        Check::All => battery(&mut report, args, &tol)?,
        Check::Shift => match args.space.n {
            Some(n) => check_shift(&mut report, [n], tol.shift)?,
            None => check_shift(&mut report, 2..=16, tol.shift)?,
        },
        Check::Rank => check_rank(&mut report, args.family, args.tolerance.unwrap_or(DEFAULT_RANK_TOLERANCE))?,
        Check::Moment => {
            let (space, _) = resolve(&args.space, true)?;
            let Space::Cp1(s) = space else {
                return Err(usage("moment applies to cp1 only"));
            };
            check_moments(&mut report, s.two_j(), tol.integral)?;
        }
        Check::Unity | Check::Measure => {
            let (space, _) = resolve(&args.space, true)?;
            let integ = integrator(&space, &args.integrator)?;
            if args.check == Check::Unity {
                check_unity(&mut report, &space, &integ, tol.integral);
            }
            check_measure(&mut report, &space, &integ, tol.integral);
        }
        Check::Antimap => {
            let (space, ids) = resolve(&args.space, true)?;
            check_antimap(&mut report, &space, &ids, args.pairs, seed, tol.identity)?;
        }
        Check::Projector => {
            let (space, ids) = resolve(&args.space, true)?;
            check_projector(&mut report, &space, &ids, args.points, seed, tol.identity)?;
        }
        Check::Entanglement => {
            let (space, ids) = resolve(&args.space, true)?;
            let integ = integrator(&space, &args.integrator)?;
            check_entanglement(&mut report, &space, &ids, &integ, &tol)?;
        }
    }
    if let Some(path) = &args.csv {
        report.write_csv(path)?;
    }
    Ok(report)
}
