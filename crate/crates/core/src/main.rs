use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use pencil_cert::cli::certificate::{canonical, interval_json, local_json, locus_json, mod2_json};
use pencil_cert::cli::parse::{parse_chart, parse_coords, parse_list, parse_prime};
use pencil_cert::cli::{parse_input, run_pipeline, ParsedInput, PipelineConfig, EXIT_INPUT_ERROR};
use pencil_cert::exactmath::{BigInt, BigRational, PrimeField};
use pencil_cert::fano::{fano_system, residuals_mod, verify_fano_point, GrassmannChart};
use pencil_cert::localcert::{
    hensel_certify, search_smooth_points, verify_projective_point, SearchConfig,
    DEFAULT_LIFT_PRECISION, DEFAULT_PRNG_SEED, DEFAULT_SEARCH_BUDGET,
};
use pencil_cert::reduction::{cone_check, mod2_degeneracy, normalize_projective, reduce_pencil, singular_locus};
use pencil_cert::Execution;

#[derive(Parser)]
#[command(name = "pencil-cert", version, about = "Local point certificates for intersections of two quadrics in P^5")]
struct Cli {
    /// Worker threads for point searches (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Run searches on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchArgs {
    /// Samples per chart for primes above 5.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = DEFAULT_PRNG_SEED)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline; prints the certificate.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, default_value_t = DEFAULT_LIFT_PRECISION)]
        lift_precision: u32,
        /// Comma-separated good primes to sample.
        #[arg(long, value_delimiter = ',', value_parser = parse_prime)]
        good_primes: Option<Vec<u64>>,
    },
    /// Characteristic form, smoothness and curve data.
    Charform { file: PathBuf },
    /// Smooth points of the Fano surface mod p.
    FanoSearch {
        file: PathBuf,
        #[arg(long, value_parser = parse_prime)]
        prime: u64,
        #[arg(long, value_parser = parse_chart)]
        chart: Option<GrassmannChart>,
        #[arg(long)]
        exhaustive: bool,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Checks a chart point of the Fano surface mod p.
    VerifyPoint {
        file: PathBuf,
        #[arg(long, value_parser = parse_prime)]
        prime: u64,
        #[arg(long, value_parser = parse_chart)]
        chart: GrassmannChart,
        #[arg(long, value_parser = parse_coords::<8>)]
        coords: [u64; 8],
        #[arg(long, default_value_t = DEFAULT_LIFT_PRECISION)]
        lift_precision: u32,
    },
    /// Checks a point of P^5 on X, over Q or mod p.
    VerifyAmbient {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        coords: String,
        #[arg(long, value_parser = parse_prime)]
        prime: Option<u64>,
    },
    /// Singular locus and cone check mod p, or the mod-2 analysis.
    Reduction {
        file: PathBuf,
        #[arg(long, value_parser = parse_prime)]
        prime: u64,
    },
}

type Outcome = Result<(Value, i32), String>;

fn load(path: &Path) -> Result<ParsedInput, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn exit_status(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

fn run(cli: Cli) -> Outcome {
    let execution = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    match cli.command {
        Command::Analyze { file, search, lift_precision, good_primes } => {
            let mut cfg = PipelineConfig {
                input_path: Some(file),
                search_budget: search.budget,
                prng_seed: search.seed,
                lift_precision,
                execution,
                ..PipelineConfig::default()
            };
            if let Some(g) = good_primes {
                cfg.good_prime_samples = g;
            }
            let cert = run_pipeline(&cfg).map_err(|e| e.to_string())?;
            eprintln!("characteristic form: {}", cert.characteristic_form);
            eprintln!("smoothness: {}", cert.smoothness);
            for place in &cert.places {
                let c = &place.certificate;
                eprintln!("place {}: {} ({})", c.place, c.liftable, c.justification);
            }
            eprintln!("verdict: {}", cert.verdict);
            Ok((cert.to_json(), cert.status.exit_code()))
        }
        Command::Charform { file } => {
            let input = load(&file)?;
            let p = &input.pencil;
            let f = p.characteristic_form();
            let curve = p.curve_data().ok().map(|cd| {
                json!({
                    "polynomial_discriminant": cd.poly_disc.to_string(),
                    "curve_discriminant": cd.curve_disc.to_string(),
                    "bad_primes": cd.bad_primes.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    "real_root_intervals": cd.real_roots.iter().map(interval_json).collect::<Vec<_>>(),
                })
            });
            eprintln!("f(t) = {f}");
            let v = json!({
                "coefficients": f.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>(),
                "text": f.to_string(),
                "smoothness": p.smoothness_check().to_string(),
                "curve": curve,
            });
            Ok((v, 0))
        }
        Command::FanoSearch { file, prime, chart, exhaustive, search } => {
            let input = load(&file)?;
            let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
            let cfg = SearchConfig {
                budget: search.budget,
                seed: search.seed,
                exhaustive: exhaustive.then_some(true),
                charts: chart.map(|c| vec![c]),
                execution,
            };
            match search_smooth_points(&input.pencil, &field, &cfg) {
                Ok(report) => {
                    eprintln!("{} smooth point(s) mod {prime}", report.points.len());
                    let points: Vec<Value> = report
                        .points
                        .iter()
                        .map(|p| {
                            json!({
                                "chart": p.chart.to_string(),
                                "coordinates": p.coords.iter().map(ToString::to_string).collect::<Vec<_>>(),
                                "jacobian_rank": p.rank.to_string(),
                            })
                        })
                        .collect();
                    let v = json!({
                        "prime": prime.to_string(),
                        "exhaustive": report.exhaustive,
                        "evaluated": report.evaluated.to_string(),
                        "points": points,
                    });
                    Ok((v, 0))
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok((json!({ "prime": prime.to_string(), "error": e.to_string() }), 2))
                }
            }
        }
        Command::VerifyPoint { file, prime, chart, coords, lift_precision } => {
            let input = load(&file)?;
            let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
            let sys = fano_system(&input.pencil, &chart);
            let check = verify_fano_point(&sys, &coords, &field);
            let reduced = coords.map(|c| c % prime);
            let residuals = residuals_mod(&sys, &reduced, &field);
            let certificate = hensel_certify(&sys, &coords, &field, lift_precision).ok();
            eprintln!(
                "on Fano surface: {}, Jacobian rank {}, smooth: {}",
                check.on_fano, check.jacobian_rank, check.smooth
            );
            let v = json!({
                "prime": prime.to_string(),
                "chart": chart.to_string(),
                "on_fano": check.on_fano,
                "jacobian_rank": check.jacobian_rank.to_string(),
                "smooth": check.smooth,
                "residuals": residuals.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "certificate": certificate.as_ref().map(local_json),
            });
            Ok((v, exit_status(check.smooth)))
        }
        Command::VerifyAmbient { file, coords, prime } => {
            let input = load(&file)?;
            let ints: [BigInt; 6] = parse_list::<BigInt>(&coords)?
                .try_into()
                .map_err(|v: Vec<BigInt>| format!("expected 6 coordinates, got {}", v.len()))?;
            match prime {
                None => {
                    let q = ints.clone().map(BigRational::from_integer);
                    let on = verify_projective_point(&input.pencil, &q).map_err(|e| e.to_string())?;
                    eprintln!("on X over Q: {on}");
                    Ok((json!({ "field": "Q", "on_variety": on }), exit_status(on)))
                }
                Some(p) => {
                    let field = PrimeField::new(p).map_err(|e| e.to_string())?;
                    let v = ints.map(|c| field.reduce(&c));
                    let v = normalize_projective(&field, &v).ok_or("zero vector is not a projective point")?;
                    let red = reduce_pencil(&input.pencil, &field);
                    let on = red.on_variety(&v);
                    let rank = red.jacobian_rank(&v);
                    eprintln!("on X mod {p}: {on}, Jacobian rank {rank}");
                    let out = json!({
                        "field": field.to_string(),
                        "normalized": v.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "on_variety": on,
                        "jacobian_rank": rank.to_string(),
                        "singular": on && rank <= 1,
                    });
                    Ok((out, exit_status(on)))
                }
            }
        }
        Command::Reduction { file, prime } => {
            let input = load(&file)?;
            if prime == 2 {
                let r = mod2_degeneracy(&input.pencil);
                eprintln!("mod 2: {}", r.verdict);
                return Ok((json!({ "prime": "2", "mod2": mod2_json(&r) }), 0));
            }
            let field = PrimeField::new(prime).map_err(|e| e.to_string())?;
            match singular_locus(&input.pencil, &field) {
                Ok(r) => {
                    let non_conical = cone_check(&r);
                    eprintln!(
                        "{} singular point(s) mod {prime} ({}), non-conical: {non_conical}",
                        r.points.len(),
                        r.method
                    );
                    Ok((json!({ "singular_locus": locus_json(&r), "non_conical": non_conical }), 0))
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok((json!({ "prime": prime.to_string(), "error": e.to_string() }), 2))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        #[cfg(feature = "parallel")]
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_INPUT_ERROR as u8);
        }
        #[cfg(not(feature = "parallel"))]
        let _ = n;
    }
    match run(cli) {
        Ok((value, code)) => {
            print!("{}", canonical(&value));
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        super::Cli::command().debug_assert();
    }
}
