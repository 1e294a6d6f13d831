//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

use datagrinder::classifier::{sweep_theta, DataGrinderModel};
use datagrinder::datagen::{
    derive_seed, generate, normal_points, uniform_points, GenConfig, TEST_STREAM, TRAIN_STREAM,
};
use datagrinder::geometry::{
    candidate_elimination_convex_hull, classic_convex_hull, find_extremes, initial_candidate_elimination,
    naive_convex_hull,
};
use datagrinder::parallel::{divide_conquer_hull, divide_conquer_hull_with_plan, PartitionPlan};
use datagrinder::{Point2, ReadCounter};
use datagrinder_cli::csv_io::read_dataset;
use datagrinder_cli::folds::FoldPlan;
use rayon::prelude::*;

type Check = fn() -> Verdict;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: String) -> Verdict {
    Verdict { pass, detail }
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_datagrinder"))
        .args(args)
        .output()
        .expect("binary runs")
}

/// Parses a CSV report into header and rows of fields.
fn report(out: &Output) -> Vec<Vec<String>> {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    r.records()
        .map(|rec| rec.unwrap().iter().map(str::to_owned).collect())
        .collect()
}

fn mean_reads_per_n(n: usize, trials: u64, base: u64, gen: fn(usize, u64) -> Vec<Point2>) -> (f64, u64) {
    let reads: Vec<u64> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let points = gen(n, derive_seed(base, t));
            let mut c = ReadCounter::new();
            candidate_elimination_convex_hull(&points, &mut c).unwrap();
            c.reads()
        })
        .collect();
    let max = *reads.iter().max().unwrap();
    (reads.iter().sum::<u64>() as f64 / trials as f64 / n as f64, max)
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let instances = 1200u64;
    let mismatches: Vec<u64> = (0..instances)
        .into_par_iter()
        .filter(|&i| {
            let n = 3 + (derive_seed(11, i) % 498) as usize;
            let points = if i % 2 == 0 {
                uniform_points(n, derive_seed(12, i))
            } else {
                normal_points(n, derive_seed(12, i))
            };
            let naive = naive_convex_hull(&points);
            let classic = classic_convex_hull(&points, &mut ReadCounter::new());
            let grind = candidate_elimination_convex_hull(&points, &mut ReadCounter::new());
            naive != classic || naive != grind
        })
        .collect();
    let secs = start.elapsed().as_secs_f64();
    verdict(
        mismatches.is_empty() && secs < 60.0,
        format!(
            "{instances} instances, n in [3,500], {} mismatches, {secs:.1} s",
            mismatches.len()
        ),
    )
}

fn linear_reads() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (n, table) in [(1_000usize, 4237.0), (10_000, 39854.0), (100_000, 398406.0)] {
        let (mean, max) = mean_reads_per_n(n, 20, 20 + n as u64, uniform_points);
        let mean_reads = mean * n as f64;
        let ok = max <= 6 * n as u64 && (3.0..=5.0).contains(&mean) && (mean_reads - table).abs() <= 0.5 * table;
        pass &= ok;
        parts.push(format!(
            "n={n} mean/n={mean:.3} max/n={:.3} vs table {table}",
            max as f64 / n as f64
        ));
    }
    verdict(pass, parts.join("; "))
}

fn survivor_ratio() -> Verdict {
    let n = 10_000;
    let ratios: Vec<f64> = (0..50u64)
        .into_par_iter()
        .map(|t| {
            let points = uniform_points(n, derive_seed(30, t));
            let mut c = ReadCounter::new();
            let ex = find_extremes(&points, &mut c).unwrap();
            initial_candidate_elimination(&points, &ex, &mut c).total() as f64 / n as f64
        })
        .collect();
    let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
    verdict(
        (0.45..=0.55).contains(&mean),
        format!("mean survivors/n = {mean:.4} over 50 trials at n=10^4"),
    )
}

fn gaussian_vs_uniform() -> Verdict {
    let (u, _) = mean_reads_per_n(10_000, 20, 40, uniform_points);
    let (g, _) = mean_reads_per_n(10_000, 20, 41, normal_points);
    verdict(g <= u, format!("gaussian {g:.3}n <= uniform {u:.3}n"))
}

fn scalability() -> Verdict {
    let points = uniform_points(1_000_000, 50);
    let start = Instant::now();
    let mut c = ReadCounter::new();
    candidate_elimination_convex_hull(&points, &mut c).unwrap();
    let secs = start.elapsed().as_secs_f64();

    let small = uniform_points(100_000, 51);
    let mut grind = ReadCounter::new();
    let mut classic = ReadCounter::new();
    candidate_elimination_convex_hull(&small, &mut grind).unwrap();
    classic_convex_hull(&small, &mut classic).unwrap();
    let ratio = classic.reads() as f64 / grind.reads() as f64;
    verdict(
        secs < 20.0 && ratio >= 3.0,
        format!(
            "10^6 points in {secs:.2} s ({} reads); at 10^5 classic {} vs grind {} reads, ratio {ratio:.2}",
            c.reads(),
            classic.reads(),
            grind.reads()
        ),
    )
}

fn divide_and_conquer() -> Verdict {
    let failures: usize = (0..100u64)
        .into_par_iter()
        .map(|i| {
            let n = 16 + (derive_seed(60, i) % 2000) as usize;
            let points = if i % 2 == 0 {
                uniform_points(n, derive_seed(61, i))
            } else {
                normal_points(n, derive_seed(61, i))
            };
            let seq = candidate_elimination_convex_hull(&points, &mut ReadCounter::new()).unwrap();
            [1, 2, 4, 8, 16]
                .iter()
                .filter(|&&k| {
                    let rr = divide_conquer_hull(&points, k).unwrap().hull;
                    let plan = PartitionPlan::shuffled(n, k, derive_seed(62, i)).unwrap();
                    let sh = divide_conquer_hull_with_plan(&points, &plan).unwrap().hull;
                    rr != seq || sh != seq
                })
                .count()
        })
        .sum();
    verdict(
        failures == 0,
        format!("100 instances x k in {{1,2,4,8,16}}, {failures} mismatches"),
    )
}

fn separable() -> Verdict {
    let seed = 70;
    let train = generate(&GenConfig::new(2, 1.0, 5, 500, derive_seed(seed, TRAIN_STREAM))).unwrap();
    let test = generate(&GenConfig::new(2, 1.0, 5, 500, derive_seed(seed, TEST_STREAM))).unwrap();
    let acc = DataGrinderModel::train(&train, true).unwrap().accuracy(&test);
    verdict(
        acc == 1.0,
        format!("lambda=1, C=2, d=5, 500+500 per class: test accuracy {acc}"),
    )
}

fn aspect_counts() -> Verdict {
    let two = generate(&GenConfig::new(2, 1.0, 5, 50, 80)).unwrap();
    let five = generate(&GenConfig::new(5, 1.0, 5, 50, 81)).unwrap();
    let a = DataGrinderModel::train(&two, true).unwrap().aspects.len();
    let b = DataGrinderModel::train(&five, true).unwrap().aspects.len();
    verdict(
        a == 20 && b == 50,
        format!("d=5: C=2 -> {a} aspects, C=5 -> {b} aspects"),
    )
}

fn mean_row<'a>(rows: &'a [Vec<String>], method: &str) -> &'a [String] {
    rows.iter().find(|r| r[0] == "mean" && r[1] == method).unwrap()
}

fn iris() -> Verdict {
    let start = Instant::now();
    let rows = report(&cli(&[
        "cv",
        "--data",
        data("iris.csv").to_str().unwrap(),
        "--folds",
        "10",
        "--seed",
        "90",
    ]));
    let secs = start.elapsed().as_secs_f64();
    let acc: f64 = mean_row(&rows, "dgr")[3].parse().unwrap();
    verdict(
        acc > 0.90 && secs < 10.0,
        format!("10-fold mean accuracy {acc:.4}, {secs:.2} s"),
    )
}

fn wine_filtering() -> Verdict {
    let path = data("wine.csv");
    let rows = report(&cli(&[
        "cv",
        "--data",
        path.to_str().unwrap(),
        "--sweep",
        "--seed",
        "100",
    ]));
    let raw: f64 = mean_row(&rows, "dgr")[3].parse().unwrap();
    let best_row = mean_row(&rows, "dgr-best");
    let best: f64 = best_row[3].parse().unwrap();

    // endpoints per fold: theta=0 keeps every aspect, theta=1 scores the class-0 share
    let csv = read_dataset(&path).unwrap();
    let ds = csv.to_dataset().unwrap();
    let full = ds.class_count() * 13 * 12 / 2;
    let plan = FoldPlan::stratified(ds.labels(), ds.class_count(), 10, 101);
    let endpoints_ok = (0..10).all(|f| {
        let (tr, te) = plan.split(f);
        let test = ds.subset(&te);
        let s = sweep_theta(&ds.subset(&tr), &test, 0.01, true).unwrap();
        let zeros = test.labels().iter().filter(|&&l| l == 0).count() as f64 / test.len() as f64;
        s.aspects[0] == full && *s.aspects.last().unwrap() == 0 && s.curve.last().unwrap().1 == zeros
    });

    let curve = report(&cli(&[
        "experiment",
        "theta-curve",
        "--data",
        path.to_str().unwrap(),
        "--seed",
        "100",
    ]));
    let first = &curve[0];
    let last = curve.last().unwrap();
    let curve_ok = first[0] == "0.000000"
        && first[2].parse::<f64>().unwrap() == full as f64
        && last[0] == "1.000000"
        && last[2].parse::<f64>().unwrap() == 0.0;

    verdict(
        best >= raw && endpoints_ok && curve_ok,
        format!(
            "theta=0 {raw:.4}, best theta={} {best:.4}; endpoints {}",
            best_row[2],
            if endpoints_ok && curve_ok { "ok" } else { "wrong" }
        ),
    )
}

fn lambda_monotone() -> Verdict {
    let rows = report(&cli(&["experiment", "lambda-sweep", "--repeats", "5", "--seed", "110"]));
    let acc: Vec<f64> = rows.iter().map(|r| r[3].parse().unwrap()).collect();
    let ok = acc.windows(2).all(|w| w[1] <= w[0] + 0.02) && acc[0] == 1.0;
    let shown: Vec<String> = rows
        .iter()
        .map(|r| format!("{}:{:.3}", r[0], r[3].parse::<f64>().unwrap()))
        .collect();
    verdict(ok, format!("5 seeds, lambda:accuracy {}", shown.join(" ")))
}

fn determinism() -> Verdict {
    let dir = tempfile::tempdir().unwrap();
    let d = |f: &str| dir.path().join(f).to_str().unwrap().to_owned();
    let iris = data("iris.csv");
    let iris = iris.to_str().unwrap();
    let gen_args = [
        "gen",
        "--lambda",
        "3",
        "--classes",
        "3",
        "--samples",
        "300",
        "--seed",
        "5",
    ];
    let out = cli(&[&gen_args[..], &["--out", &d("gen.csv")]].concat());
    assert!(out.status.success());
    let mut commands: Vec<Vec<String>> = vec![
        vec!["hull", "--gen", "normal", "--n", "5000", "--seed", "3"],
        vec![
            "hull",
            "--gen",
            "uniform",
            "--n",
            "5000",
            "--seed",
            "3",
            "--partitions",
            "8",
        ],
        vec!["bench", "--sizes", "10,1000,20000", "--trials", "2", "--seed", "4"],
        gen_args.to_vec(),
        vec![
            "cv",
            "--data",
            iris,
            "--sweep",
            "--sweep-step",
            "0.05",
            "--baseline",
            "nn",
            "--seed",
            "6",
        ],
        vec![
            "experiment",
            "lambda-sweep",
            "--lambda",
            "1,4",
            "--repeats",
            "2",
            "--samples",
            "200",
            "--seed",
            "7",
        ],
        vec![
            "experiment",
            "class-sweep",
            "--classes",
            "2,4",
            "--repeats",
            "2",
            "--samples",
            "200",
            "--seed",
            "7",
        ],
        vec![
            "experiment",
            "theta-curve",
            "--data",
            iris,
            "--sweep-step",
            "0.1",
            "--seed",
            "8",
        ],
    ]
    .into_iter()
    .map(|v| v.into_iter().map(String::from).collect())
    .collect();
    commands.push(vec![
        "predict".into(),
        "--model".into(),
        d("m.json"),
        "--data".into(),
        d("gen.csv"),
    ]);

    let train = |out: &str| {
        let o = cli(&["train", "--data", &d("gen.csv"), "--out", &d(out), "--theta", "0.2"]);
        assert!(o.status.success());
        std::fs::read(d(out)).unwrap()
    };
    let mut same = train("m.json") == train("m2.json");
    let mut diverged = Vec::new();
    if !same {
        diverged.push("train".to_string());
    }
    for c in &commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        let (a, b) = (cli(&args), cli(&args));
        let ok = a.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
        same &= ok;
        if !ok {
            diverged.push(c[0].clone());
        }
    }
    verdict(
        same,
        format!("{} commands run twice, diverged: {:?}", commands.len() + 1, diverged),
    )
}

fn main() {
    let criteria: [(&str, Check); 12] = [
        ("hull oracle equivalence", oracle_equivalence),
        ("linear read bound", linear_reads),
        ("initial elimination ratio", survivor_ratio),
        ("gaussian reads <= uniform reads", gaussian_vs_uniform),
        ("scalability and classic read ratio", scalability),
        ("divide-and-conquer equals sequential", divide_and_conquer),
        ("separable classification", separable),
        ("aspect count", aspect_counts),
        ("iris 10-fold accuracy", iris),
        ("wine filtering and theta endpoints", wine_filtering),
        ("lambda-sweep monotone within noise", lambda_monotone),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let v = check();
        if !v.pass {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {}",
            if v.pass { "PASS" } else { "FAIL" },
            i + 1,
            v.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
