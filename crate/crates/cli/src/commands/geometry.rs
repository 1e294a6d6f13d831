use std::time::Instant;

use datagrinder::datagen::{derive_seed, normal_points, uniform_points};
use datagrinder::parallel::divide_conquer_hull;
use datagrinder::{HullAlgorithm, Point2, ReadCounter};

use crate::args::{Algorithm, BenchArgs, Generator, HullArgs};
use crate::csv_io::{csv_writer, open_output, read_points};
use crate::error::{CliError, Result};

fn generate_points(gen: Generator, n: usize, seed: u64) -> Vec<Point2> {
    match gen {
        Generator::Uniform => uniform_points(n, seed),
        Generator::Normal => normal_points(n, seed),
    }
}

fn algorithm(a: Algorithm) -> HullAlgorithm {
    match a {
        Algorithm::Naive => HullAlgorithm::Naive,
        Algorithm::Classic => HullAlgorithm::Classic,
        Algorithm::Grind => HullAlgorithm::CandidateElimination,
    }
}

pub fn hull(args: &HullArgs) -> Result<()> {
    let points = match (&args.input, args.gen) {
        (Some(path), _) => read_points(path)?,
        (None, Some(gen)) => generate_points(gen, args.n, args.seed),
        (None, None) => {
            return Err(CliError::Usage(
                "hull needs --input FILE or --gen {uniform|normal}".into(),
            ))
        }
    };
    if args.partitions == 0 {
        return Err(CliError::Usage("--partitions must be at least 1".into()));
    }
    if args.partitions > 1 && args.algorithm != Algorithm::Grind {
        return Err(CliError::Usage("--partitions > 1 requires --algorithm grind".into()));
    }
    if args.algorithm == Algorithm::Naive && points.len() > args.naive_cap {
        return Err(CliError::Usage(format!(
            "naive algorithm refused for {} points (cap {}, raise with --naive-cap)",
            points.len(),
            args.naive_cap
        )));
    }

    let (hull, counter) = if args.partitions > 1 {
        let outcome = divide_conquer_hull(&points, args.partitions)?;
        (outcome.hull, Some(outcome.counter))
    } else {
        let mut counter = ReadCounter::new();
        let hull = algorithm(args.algorithm).run(&points, &mut counter)?;
        (hull, (args.algorithm != Algorithm::Naive).then_some(counter))
    };

    let vertices = hull.vertices();
    let mut w = csv_writer(open_output(args.out.as_ref())?);
    w.write_record(["x", "y"])?;
    for p in &vertices {
        w.write_record([p.x.to_string(), p.y.to_string()])?;
    }
    w.flush()?;

    let n = points.len();
    match counter {
        Some(c) => eprintln!(
            "n={n} vertices={} reads={} reads_per_n={:.3}",
            vertices.len(),
            c.reads(),
            c.reads() as f64 / n as f64
        ),
        None => eprintln!("n={n} vertices={}", vertices.len()),
    }
    Ok(())
}

pub fn bench(args: &BenchArgs) -> Result<()> {
    if args.trials == 0 || args.sizes.contains(&0) {
        return Err(CliError::Usage(
            "--trials and every --sizes entry must be positive".into(),
        ));
    }
    let mut w = csv_writer(open_output(args.out.as_ref())?);
    let mut header = vec!["n", "algorithm", "trials", "mean_reads", "reads_per_n", "status"];
    if args.timing {
        header.push("mean_ms");
    }
    w.write_record(&header)?;

    for &n in &args.sizes {
        let seeds: Vec<u64> = (0..args.trials as u64)
            .map(|t| derive_seed(derive_seed(args.seed, n as u64), t))
            .collect();
        for (name, algo, allowed) in [
            ("grind", HullAlgorithm::CandidateElimination, true),
            ("classic", HullAlgorithm::Classic, n <= args.classic_max_n),
        ] {
            let mut row = vec![n.to_string(), name.to_string(), args.trials.to_string()];
            if !allowed {
                row.extend(["".into(), "".into(), "skipped".into()]);
                if args.timing {
                    row.push(String::new());
                }
                w.write_record(&row)?;
                continue;
            }
            let mut reads = 0u64;
            let mut elapsed = 0.0;
            for &seed in &seeds {
                let points = generate_points(args.gen, n, seed);
                let mut counter = ReadCounter::new();
                let start = Instant::now();
                // tiny inputs can be collinear; their reads still count
                let _ = algo.run(&points, &mut counter);
                elapsed += start.elapsed().as_secs_f64();
                reads += counter.reads();
            }
            let mean = reads as f64 / args.trials as f64;
            row.extend([format!("{mean:.1}"), format!("{:.4}", mean / n as f64), "ok".into()]);
            if args.timing {
                row.push(format!("{:.3}", elapsed * 1e3 / args.trials as f64));
            }
            w.write_record(&row)?;
        }
    }
    w.flush()?;
    Ok(())
}
