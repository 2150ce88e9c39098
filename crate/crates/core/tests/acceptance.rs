//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails in a way not recorded in `KNOWN_ALPHA`.
//!
//! Run with `cargo test -p gengraph --test acceptance`.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use gengraph::graph::{
    build_generating_graph, delta, distance_matrix, eccentricity_matrix, IntMatrix,
};
use gengraph::group::{self, Family, GroupId, Stratum};
use gengraph::invariants;
use gengraph::linalg::{
    charpoly_exact, expand, spectra_match, symmetric_eigenvalues, BigPoly, DEFAULT_TOL, MATCH_TOL,
};
use gengraph::numtheory::{euler_phi, smallest_prime_factor};
use gengraph::partition;
use gengraph::spectra::{self, MatrixKind, QuadraticValue, Spectrum};
use num_bigint::BigInt;
use num_rational::Ratio;
use rayon::prelude::*;

/// `n` in `[2, 16]` where the independence number of `Δ(Q_n)` is not `2n/p`,
/// with the value found by exhaustive search.
const KNOWN_ALPHA: [(usize, usize); 7] = [
    (3, 4),
    (5, 8),
    (7, 12),
    (9, 12),
    (11, 20),
    (13, 24),
    (15, 16),
];

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_errors(errors: Vec<String>, ok_detail: String) -> Self {
        if errors.is_empty() {
            Outcome {
                passed: true,
                detail: ok_detail,
            }
        } else {
            let shown: Vec<_> = errors.iter().take(5).cloned().collect();
            Outcome {
                passed: false,
                detail: format!("{} problems: {}", errors.len(), shown.join("; ")),
            }
        }
    }
}

fn d(n: usize) -> GroupId {
    GroupId::dihedral(n).unwrap()
}

fn q(n: usize) -> GroupId {
    GroupId::dicyclic(n).unwrap()
}

fn phi(n: usize) -> u64 {
    euler_phi(n as u64).unwrap()
}

fn spf(n: usize) -> usize {
    smallest_prime_factor(n as u64).unwrap().unwrap() as usize
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ids: Vec<GroupId> = (2..=24).flat_map(|n| [d(n), q(n)]).collect();
    let mismatches: Vec<String> = ids
        .par_iter()
        .flat_map_iter(|&id| {
            let els = id.elements();
            let mut bad = Vec::new();
            for &g in &els {
                for &h in &els {
                    let closure = group::generated_subgroup(id, g, h).unwrap().len() == id.order();
                    let rule = if g == h {
                        false
                    } else {
                        group::generates_pair(id, g, h).unwrap()
                    };
                    if rule != closure {
                        bad.push(format!(
                            "{}{}: ({}, {})",
                            id.family(),
                            id.n(),
                            id.format(g),
                            id.format(h)
                        ));
                    }
                }
            }
            bad
        })
        .collect();
    let elapsed = start.elapsed();
    let mut errors = mismatches;
    if elapsed > Duration::from_secs(60) {
        errors.push(format!("runtime {elapsed:.1?} exceeds 60 s"));
    }
    Outcome::from_errors(
        errors,
        format!("0 mismatches over n in [2, 24], both families, {elapsed:.1?}"),
    )
}

fn criterion_2() -> Outcome {
    let mut errors = Vec::new();
    for n in 2..=60usize {
        let id = q(n);
        let f = phi(n);
        let nn = n as u64;
        if group::gen_count(id) != 12 * nn * f {
            errors.push(format!("Q{n}: |Gen| = {}", group::gen_count(id)));
        }
        let expected = Ratio::new(3 * f, 4 * nn - 1);
        if group::generating_probability(id) != expected {
            errors.push(format!("Q{n}: P = {}", group::generating_probability(id)));
        }
        let edges = build_generating_graph(id).edge_count() as u64;
        if edges != 6 * nn * f {
            errors.push(format!("Q{n}: |E| = {edges}"));
        }
    }
    Outcome::from_errors(errors, "exact for n in [2, 60]".into())
}

/// One closed spectrum together with its oracle matrix and Jacobi eigenvalues.
struct Computed {
    label: String,
    closed: Spectrum,
    matrix: IntMatrix,
    numeric: Vec<f64>,
}

fn computed(label: String, closed: Spectrum, matrix: IntMatrix) -> Computed {
    let numeric = symmetric_eigenvalues(&matrix, DEFAULT_TOL).unwrap();
    Computed {
        label,
        closed,
        matrix,
        numeric,
    }
}

fn adjacency_laplacian_sweep() -> Vec<Computed> {
    (2..=60usize)
        .into_par_iter()
        .flat_map_iter(|n| {
            let gd = build_generating_graph(d(n));
            let gq = build_generating_graph(q(n));
            let omega2 = gd.stratum_subgraph(&[Stratum::Omega2]).unwrap();
            let omega = gq.stratum_subgraph(&[Stratum::Omega]).unwrap();
            vec![
                computed(
                    format!("A(Omega2) D{n}"),
                    spectra::adjacency_spectrum_omega2_d(n).unwrap(),
                    omega2.adjacency_matrix(),
                ),
                computed(
                    format!("A D{n}"),
                    spectra::adjacency_spectrum_d(n).unwrap(),
                    gd.adjacency_matrix(),
                ),
                computed(
                    format!("A11 Q{n}"),
                    spectra::adjacency_spectrum_omega_q(n).unwrap(),
                    omega.adjacency_matrix(),
                ),
                computed(
                    format!("A Q{n}"),
                    spectra::adjacency_spectrum_q(n).unwrap(),
                    gq.adjacency_matrix(),
                ),
                computed(
                    format!("L D{n}"),
                    spectra::laplacian_spectrum_d(n).unwrap(),
                    gd.laplacian_matrix(),
                ),
                computed(
                    format!("L Q{n}"),
                    spectra::laplacian_spectrum_q(n).unwrap(),
                    gq.laplacian_matrix(),
                ),
            ]
        })
        .collect()
}

fn distance_sweep() -> Vec<Computed> {
    let ids: Vec<GroupId> = (3..=60).map(d).chain((2..=60).map(q)).collect();
    ids.par_iter()
        .map(|&id| {
            let m = distance_matrix(&delta(&build_generating_graph(id))).unwrap();
            let closed = spectra::closed_spectrum(id, MatrixKind::Distance).unwrap();
            computed(format!("Dis {}{}", id.family(), id.n()), closed, m)
        })
        .collect()
}

fn match_errors(items: &[Computed]) -> (Vec<String>, f64) {
    let mut errors = Vec::new();
    let mut worst = 0.0f64;
    for c in items {
        match spectra_match(&c.closed, &c.numeric, MATCH_TOL) {
            Ok(r) => {
                worst = worst.max(r.worst_deviation);
                if !r.matched {
                    errors.push(format!(
                        "{}: deviation {:.2e} at {}",
                        c.label, r.worst_deviation, r.worst_index
                    ));
                }
            }
            Err(e) => errors.push(format!("{}: {e}", c.label)),
        }
    }
    (errors, worst)
}

fn criterion_3(sweep: &[Computed], elapsed: Duration) -> Outcome {
    let (mut errors, worst) = match_errors(sweep);
    if elapsed > Duration::from_secs(300) {
        errors.push(format!("runtime {elapsed:.1?} exceeds 5 min"));
    }
    Outcome::from_errors(
        errors,
        format!(
            "{} spectra for n in [2, 60], worst deviation {worst:.1e}, {elapsed:.1?}",
            sweep.len()
        ),
    )
}

fn criterion_4(sweep: &[Computed]) -> Outcome {
    let (errors, worst) = match_errors(sweep);
    Outcome::from_errors(
        errors,
        format!(
            "{} spectra (D n in [3, 60], Q n in [2, 60]), worst deviation {worst:.1e}",
            sweep.len()
        ),
    )
}

fn coefficient_trace(p: &BigPoly) -> BigInt {
    let deg = p.degree().unwrap();
    -p.coeff(deg - 1)
}

fn criterion_5() -> (Outcome, Vec<Computed>) {
    let start = Instant::now();
    let ids: Vec<GroupId> = (3..=40).map(d).chain((2..=40).map(q)).collect();
    let results: Vec<(Vec<String>, Computed, usize)> = ids
        .par_iter()
        .map(|&id| {
            let (fam, n) = (id.family(), id.n());
            let label = format!("{fam}{n}");
            let report = spectra::eccentricity_charpoly(id).unwrap();
            let m = eccentricity_matrix(&delta(&build_generating_graph(id))).unwrap();
            let oracle = charpoly_exact(&m).unwrap();
            let mut errors = Vec::new();
            if expand(&report.verified) != oracle {
                errors.push(format!(
                    "{label}: verified form {} is not the charpoly",
                    report.verified
                ));
            }
            let prime = fam == Family::Dihedral && spf(n) == n;
            let mut flagged = 0;
            if prime {
                if report.has_errata() || expand(&report.printed) != oracle {
                    errors.push(format!("{label}: printed prime form disagrees"));
                }
            } else {
                if expand(&report.printed) == oracle {
                    errors.push(format!("{label}: printed form not flagged"));
                }
                if coefficient_trace(&expand(&report.printed)) == BigInt::from(0) {
                    errors.push(format!("{label}: printed form has trace 0"));
                }
                let root_of_oracle = |r: i64| oracle.eval(&BigInt::from(r)) == BigInt::from(0);
                for t in &report.terms {
                    let wrong = !t.agrees();
                    if wrong {
                        flagged += 1;
                    }
                    if wrong && root_of_oracle(t.printed_root) && t.label.contains("d = 1") {
                        errors.push(format!(
                            "{label}: printed root {} of {} is a true root",
                            t.printed_root, t.label
                        ));
                    }
                }
                let has = |needle: &str| {
                    report
                        .terms
                        .iter()
                        .any(|t| t.label.contains(needle) && !t.agrees())
                };
                let phi_factor_expected = match fam {
                    Family::Dihedral => phi(n) != 2,
                    Family::Dicyclic => true,
                };
                let named = match fam {
                    Family::Dihedral => "(x - φ(n))",
                    Family::Dicyclic => "(x - (4φ(n) + 2))",
                };
                if !has("d = 1") {
                    errors.push(format!("{label}: d = 1 term not flagged"));
                }
                if phi_factor_expected != has(named) {
                    errors.push(format!("{label}: factor {named} flag is {}", has(named)));
                }
            }
            let closed = report.spectrum();
            let numeric = symmetric_eigenvalues(&m, DEFAULT_TOL).unwrap();
            (
                errors,
                Computed {
                    label: format!("Ecc {label}"),
                    closed,
                    matrix: m,
                    numeric,
                },
                flagged,
            )
        })
        .collect();
    let elapsed = start.elapsed();
    let mut errors = Vec::new();
    let mut computed = Vec::new();
    let mut flagged = 0;
    for (e, c, f) in results {
        errors.extend(e);
        computed.push(c);
        flagged += f;
    }
    let (match_errs, _) = match_errors(&computed);
    errors.extend(match_errs);
    let outcome = Outcome::from_errors(
        errors,
        format!(
            "{} charpolys exact, {flagged} printed terms flagged as errata, {elapsed:.1?}",
            computed.len()
        ),
    );
    (outcome, computed)
}

fn criterion_6() -> Outcome {
    let errors: Vec<String> = (2..=40usize)
        .into_par_iter()
        .flat_map_iter(|n| {
            let mut errors = Vec::new();
            let gq = build_generating_graph(q(n));
            let theta = partition::theta_partition(n).unwrap();
            let a = gq.adjacency_matrix();
            if !partition::is_equitable(&a, &theta) {
                errors.push(format!("Q{n}: Θ not equitable"));
            }
            if !partition::charpoly_divides_check(&a, &theta).unwrap() {
                errors.push(format!("Q{n}: quotient charpoly of Θ does not divide"));
            }
            let omega = gq.stratum_subgraph(&[Stratum::Omega]).unwrap();
            let sim = partition::sim_classes(n).unwrap();
            let a11 = omega.adjacency_matrix();
            if !partition::is_equitable(&a11, &sim) {
                errors.push(format!("Q{n}: ∼ not equitable"));
            }
            if !partition::charpoly_divides_check(&a11, &sim).unwrap() {
                errors.push(format!("Q{n}: quotient charpoly of ∼ does not divide"));
            }
            let omega2 = build_generating_graph(d(n))
                .stratum_subgraph(&[Stratum::Omega2])
                .unwrap();
            let sim2 = partition::sim_classes_dihedral(n).unwrap();
            let qa = partition::quotient_matrix(&a11, &sim).unwrap();
            let qd = partition::quotient_matrix(&omega2.adjacency_matrix(), &sim2).unwrap();
            if qa != qd.scaled(2) {
                errors.push(format!("Q{n}: A11 quotient is not twice the Ω₂ quotient"));
            }
            errors
        })
        .collect();
    Outcome::from_errors(
        errors,
        "Θ and ∼ equitable, divisibility exact, doubling holds for n in [2, 40]".into(),
    )
}

fn criterion_7() -> Outcome {
    let mut errors: Vec<String> = (2..=60usize)
        .into_par_iter()
        .filter(|&n| !partition::quotient_iso_to_dihedral(n).unwrap())
        .map(|n| format!("n = {n}: quotient not isomorphic to Γ(D_n)"))
        .collect();
    let iso: Vec<(usize, bool)> = (2..=10usize)
        .into_par_iter()
        .map(|n| {
            let g1 = build_generating_graph(q(n));
            let g2 = build_generating_graph(d(2 * n));
            (n, partition::is_isomorphic(&g1, &g2).unwrap())
        })
        .collect();
    for (n, found) in iso {
        if found != (n % 2 == 0) {
            errors.push(format!("n = {n}: Γ(Q_n) ≅ Γ(D_2n) is {found}"));
        }
    }
    Outcome::from_errors(
        errors,
        "quotients for n in [2, 60], Γ(Q_n) ≅ Γ(D_2n) iff n even for n in [2, 10]".into(),
    )
}

struct AlphaFinding {
    mismatches: Vec<(usize, usize)>,
    dihedral: Vec<(usize, usize)>,
    other_errors: usize,
}

fn criterion_8() -> (Outcome, AlphaFinding) {
    let props: Vec<invariants::Props> = (2..=16usize)
        .into_par_iter()
        .map(|n| invariants::props(q(n)).unwrap())
        .collect();
    let mut errors = Vec::new();
    let mut mismatches = Vec::new();
    for p in &props {
        let n = p.n;
        let sp = spf(n);
        if p.omega != sp + 1 || p.chi != sp + 1 {
            errors.push(format!("Q{n}: omega {} chi {}", p.omega, p.chi));
        }
        if p.gamma != 2 || p.gamma_t != 2 {
            errors.push(format!("Q{n}: gamma {} gamma_t {}", p.gamma, p.gamma_t));
        }
        if p.alpha != 2 * n / sp {
            mismatches.push((n, p.alpha));
        }
        if n <= 8 {
            if p.girth != Some(3) {
                errors.push(format!("Q{n}: girth {:?}", p.girth));
            }
            if !p.eulerian {
                errors.push(format!("Q{n}: not Eulerian"));
            }
            if p.hamiltonian_cycle != Some(true) {
                errors.push(format!("Q{n}: Hamiltonian cycle {:?}", p.hamiltonian_cycle));
            }
        }
        if n <= 10 && p.planar != Some(n == 2) {
            errors.push(format!("Q{n}: planar {:?}", p.planar));
        }
    }
    let other_errors = errors.len();
    for &(n, a) in &mismatches {
        errors.push(format!("Q{n}: alpha {a}, claimed {}", 2 * n / spf(n)));
    }
    let dihedral = (2..=16usize)
        .into_par_iter()
        .map(|n| {
            (
                n,
                invariants::independence_number(&delta(&build_generating_graph(d(n)))).unwrap(),
            )
        })
        .filter(|&(n, a)| a != n / spf(n))
        .collect();
    let outcome = Outcome::from_errors(errors, "all invariants as claimed for n in [2, 16]".into());
    (
        outcome,
        AlphaFinding {
            mismatches,
            dihedral,
            other_errors,
        },
    )
}

fn criterion_9(items: &[&Computed]) -> Outcome {
    let mut errors = Vec::new();
    for c in items {
        let exact = c.closed.exact_sum().as_rational();
        if exact != Some(Ratio::from_integer(c.matrix.trace())) {
            errors.push(format!(
                "{}: exact sum {exact:?}, trace {}",
                c.label,
                c.matrix.trace()
            ));
        }
        let numeric: f64 = c.numeric.iter().sum();
        if (numeric - c.matrix.trace() as f64).abs() > 1e-6 {
            errors.push(format!("{}: numeric sum {numeric}", c.label));
        }
    }
    for n in 2..=60usize {
        for id in [d(n), q(n)] {
            let zero = QuadraticValue::integer(0);
            let mult = spectra::closed_spectrum(id, MatrixKind::Laplacian)
                .unwrap()
                .multiplicity(&zero);
            let comps = build_generating_graph(id).components().len();
            if mult != comps {
                errors.push(format!(
                    "{}{n}: Laplacian zero multiplicity {mult}, {comps} components",
                    id.family()
                ));
            }
        }
    }
    Outcome::from_errors(
        errors,
        format!(
            "{} spectra sum to their traces, Laplacian nullity = components for n in [2, 60]",
            items.len()
        ),
    )
}

fn main() -> ExitCode {
    let mut lines: BTreeMap<u8, Outcome> = BTreeMap::new();
    let mut unexpected = false;

    lines.insert(1, criterion_1());
    lines.insert(2, criterion_2());
    let start = Instant::now();
    let al = adjacency_laplacian_sweep();
    lines.insert(3, criterion_3(&al, start.elapsed()));
    let dist = distance_sweep();
    lines.insert(4, criterion_4(&dist));
    let (c5, ecc) = criterion_5();
    lines.insert(5, c5);
    lines.insert(6, criterion_6());
    lines.insert(7, criterion_7());
    let (c8, alpha) = criterion_8();
    lines.insert(8, c8);
    let all: Vec<&Computed> = al.iter().chain(&dist).chain(&ecc).collect();
    lines.insert(9, criterion_9(&all));

    for (k, o) in &lines {
        println!(
            "criterion {k}: {} - {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
        if !o.passed && *k != 8 {
            unexpected = true;
        }
    }

    // The only accepted failure is the independence number claim, and only
    // with exactly the recorded counterexamples; every other invariant in
    // criterion 8 must hold.
    println!(
        "note: alpha(Δ(D_n)) differs from n/p at (n, alpha) = {:?}",
        alpha.dihedral
    );
    if !lines[&8].passed {
        if alpha.mismatches == KNOWN_ALPHA && alpha.other_errors == 0 {
            println!(
                "note: criterion 8 fails only on alpha = 2n/p; the counterexamples {:?} match the recorded findings",
                KNOWN_ALPHA
            );
        } else {
            unexpected = true;
        }
    } else {
        println!("note: alpha = 2n/p now holds everywhere; the recorded counterexamples are stale");
        unexpected = true;
    }

    if unexpected {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
