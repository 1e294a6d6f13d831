use datagrinder::classifier::{nn_baseline, sweep_theta, theta_grid, DataGrinderModel, Dataset, MinMaxScaler};
use datagrinder::datagen::{derive_seed, generate, GenConfig, TEST_STREAM, TRAIN_STREAM};
use rayon::prelude::*;

use super::model::{check_theta, per_class};
use crate::args::{CvArgs, ExperimentArgs, ExperimentKind};
use crate::csv_io::{csv_writer, open_output, read_dataset};
use crate::error::{CliError, Result};
use crate::folds::FoldPlan;

const FOLD_STREAM: u64 = 3;
const REPEAT_STREAM: u64 = 16;

/// Mean and sample standard deviation.
pub(crate) fn mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

fn fmt(v: f64) -> String {
    format!("{v:.6}")
}

/// Fold plan for `data`, shrinking `k` to the smallest class size.
fn plan_folds(data: &Dataset, k: usize, seed: u64) -> Result<FoldPlan> {
    if k < 2 {
        return Err(CliError::Usage(format!("--folds must be at least 2, got {k}")));
    }
    let smallest = data.class_sizes().into_iter().min().unwrap_or(0);
    let k = if smallest < k {
        eprintln!("warning: smallest class has {smallest} rows, reducing folds from {k} to {smallest}");
        smallest
    } else {
        k
    };
    if k < 2 {
        return Err(CliError::Data(
            "every class needs at least two rows for cross-validation".into(),
        ));
    }
    Ok(FoldPlan::stratified(
        data.labels(),
        data.class_count(),
        k,
        derive_seed(seed, FOLD_STREAM),
    ))
}

fn dgr_accuracy(train: &Dataset, test: &Dataset, theta: f64, normalize: bool) -> Result<f64> {
    let model = DataGrinderModel::train(train, normalize)?
        .evaluate_aspects(train)
        .filter_aspects(theta)?;
    Ok(model.accuracy(test))
}

/// 1-NN accuracy, scaled with the training min-max when `normalize` is set.
fn nn_accuracy(train: &Dataset, test: &Dataset, normalize: bool) -> f64 {
    let (train, test) = if normalize {
        let s = MinMaxScaler::fit(train);
        (s.transform_dataset(train), s.transform_dataset(test))
    } else {
        (train.clone(), test.clone())
    };
    let correct = test
        .rows()
        .zip(test.labels())
        .filter(|(r, &l)| nn_baseline(&train, r) == l)
        .count();
    correct as f64 / test.len() as f64
}

struct FoldOutcome {
    dgr: f64,
    curve: Option<Vec<f64>>,
    aspects: Option<Vec<usize>>,
    nn: Option<f64>,
}

fn run_folds(
    data: &Dataset,
    plan: &FoldPlan,
    theta: f64,
    sweep_step: Option<f64>,
    baseline: bool,
    normalize: bool,
) -> Result<Vec<FoldOutcome>> {
    (0..plan.k())
        .into_par_iter()
        .map(|fold| {
            let (tr, te) = plan.split(fold);
            let (train, test) = (data.subset(&tr), data.subset(&te));
            let sweep = sweep_step
                .map(|step| sweep_theta(&train, &test, step, normalize))
                .transpose()?;
            Ok(FoldOutcome {
                dgr: dgr_accuracy(&train, &test, theta, normalize)?,
                aspects: sweep.as_ref().map(|s| s.aspects.clone()),
                curve: sweep.map(|s| s.curve.into_iter().map(|(_, a)| a).collect()),
                nn: baseline.then(|| nn_accuracy(&train, &test, normalize)),
            })
        })
        .collect()
}

/// Column-wise mean of per-fold vectors.
fn mean_curve<T: Copy + Into<f64>>(rows: impl Iterator<Item = Vec<T>>) -> Vec<f64> {
    let rows: Vec<Vec<T>> = rows.collect();
    let n = rows.len() as f64;
    (0..rows[0].len())
        .map(|j| rows.iter().map(|r| r[j].into()).sum::<f64>() / n)
        .collect()
}

fn check_step(step: f64) -> Result<()> {
    theta_grid(step).map(|_| ()).map_err(|e| CliError::Usage(e.to_string()))
}

pub fn cv(args: &CvArgs) -> Result<()> {
    check_theta(args.theta)?;
    if args.sweep {
        check_step(args.sweep_step)?;
    }
    let data = read_dataset(&args.data)?.to_dataset()?;
    let plan = plan_folds(&data, args.folds, args.seed)?;
    let outcomes = run_folds(
        &data,
        &plan,
        args.theta,
        args.sweep.then_some(args.sweep_step),
        args.baseline.is_some(),
        args.normalize.is_on(),
    )?;

    let mut methods: Vec<(&str, String, Vec<f64>)> =
        vec![("dgr", fmt(args.theta), outcomes.iter().map(|o| o.dgr).collect())];
    if args.sweep {
        let grid = theta_grid(args.sweep_step)?;
        let mean = mean_curve(outcomes.iter().map(|o| o.curve.clone().unwrap()));
        // first grid point with the highest mean accuracy
        let best = (0..mean.len()).fold(0, |b, j| if mean[j] > mean[b] { j } else { b });
        methods.push((
            "dgr-best",
            fmt(grid[best]),
            outcomes.iter().map(|o| o.curve.as_ref().unwrap()[best]).collect(),
        ));
    }
    if args.baseline.is_some() {
        methods.push(("nn", String::new(), outcomes.iter().map(|o| o.nn.unwrap()).collect()));
    }

    let mut w = csv_writer(open_output(args.out.as_ref())?);
    w.write_record(["fold", "method", "theta", "accuracy"])?;
    for fold in 0..plan.k() {
        for (name, theta, accs) in &methods {
            w.write_record([fold.to_string(), name.to_string(), theta.clone(), fmt(accs[fold])])?;
        }
    }
    for (name, theta, accs) in &methods {
        let (mean, std) = mean_std(accs);
        w.write_record(["mean".to_string(), name.to_string(), theta.clone(), fmt(mean)])?;
        w.write_record(["std".to_string(), name.to_string(), theta.clone(), fmt(std)])?;
    }
    w.flush()?;
    Ok(())
}

fn sweep_grid(args: &ExperimentArgs) -> Result<Vec<(f64, usize)>> {
    let single = |name: &str, v: usize| CliError::Usage(format!("{name} takes a single value here, got {v}"));
    match args.kind {
        ExperimentKind::LambdaSweep => {
            let lambdas = if args.lambda.is_empty() {
                (1..=8).map(f64::from).collect()
            } else {
                args.lambda.clone()
            };
            let classes = match args.classes.as_slice() {
                [] => 2,
                [c] => *c,
                v => return Err(single("--classes", v.len())),
            };
            Ok(lambdas.into_iter().map(|l| (l, classes)).collect())
        }
        ExperimentKind::ClassSweep => {
            let classes = if args.classes.is_empty() {
                (2..=10).collect()
            } else {
                args.classes.clone()
            };
            let lambda = match args.lambda.as_slice() {
                [] => 5.0,
                [l] => *l,
                v => return Err(single("--lambda", v.len())),
            };
            Ok(classes.into_iter().map(|c| (lambda, c)).collect())
        }
        ExperimentKind::ThetaCurve => unreachable!(),
    }
}

fn synthetic_sweep(args: &ExperimentArgs) -> Result<()> {
    check_theta(args.theta)?;
    if args.repeats == 0 {
        return Err(CliError::Usage("--repeats must be positive".into()));
    }
    let grid = sweep_grid(args)?;
    let baseline = args.baseline.is_some();
    let normalize = args.normalize.is_on();
    let jobs: Vec<(usize, u64)> = (0..grid.len())
        .flat_map(|g| (0..args.repeats as u64).map(move |r| (g, r)))
        .collect();
    // every grid point reuses the same repeat seeds
    let results: Vec<(f64, Option<f64>)> = jobs
        .par_iter()
        .map(|&(g, r)| {
            let (lambda, classes) = grid[g];
            let n = per_class(args.samples, args.per_class, classes)?;
            let seed = derive_seed(args.seed, REPEAT_STREAM + r);
            let make = |stream| {
                generate(&GenConfig::new(
                    classes,
                    lambda,
                    args.dims,
                    n,
                    derive_seed(seed, stream),
                ))
                .map_err(|e| CliError::Usage(e.to_string()))
            };
            let (train, test) = (make(TRAIN_STREAM)?, make(TEST_STREAM)?);
            Ok((
                dgr_accuracy(&train, &test, args.theta, normalize)?,
                baseline.then(|| nn_accuracy(&train, &test, normalize)),
            ))
        })
        .collect::<Result<_>>()?;

    let mut w = csv_writer(open_output(args.out.as_ref())?);
    let mut header = vec!["lambda", "classes", "repeats", "mean_accuracy", "std_accuracy"];
    if baseline {
        header.extend(["nn_mean_accuracy", "nn_std_accuracy"]);
    }
    w.write_record(&header)?;
    for (g, chunk) in results.chunks(args.repeats).enumerate() {
        let (lambda, classes) = grid[g];
        let (mean, std) = mean_std(&chunk.iter().map(|r| r.0).collect::<Vec<_>>());
        let mut row = vec![
            lambda.to_string(),
            classes.to_string(),
            args.repeats.to_string(),
            fmt(mean),
            fmt(std),
        ];
        if baseline {
            let (m, s) = mean_std(&chunk.iter().map(|r| r.1.unwrap()).collect::<Vec<_>>());
            row.extend([fmt(m), fmt(s)]);
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn theta_curve(args: &ExperimentArgs) -> Result<()> {
    let Some(path) = &args.data else {
        return Err(CliError::Usage("theta-curve needs --data FILE".into()));
    };
    check_step(args.sweep_step)?;
    let data = read_dataset(path)?.to_dataset()?;
    let plan = plan_folds(&data, args.folds, args.seed)?;
    let outcomes = run_folds(&data, &plan, 0.0, Some(args.sweep_step), false, args.normalize.is_on())?;
    let accuracy = mean_curve(outcomes.iter().map(|o| o.curve.clone().unwrap()));
    let aspects = mean_curve(
        outcomes
            .iter()
            .map(|o| o.aspects.as_ref().unwrap().iter().map(|&a| a as f64).collect()),
    );

    let mut w = csv_writer(open_output(args.out.as_ref())?);
    w.write_record(["theta", "mean_accuracy", "mean_aspects"])?;
    for ((theta, acc), asp) in theta_grid(args.sweep_step)?.into_iter().zip(accuracy).zip(aspects) {
        w.write_record([fmt(theta), fmt(acc), format!("{asp:.2}")])?;
    }
    w.flush()?;
    Ok(())
}

pub fn experiment(args: &ExperimentArgs) -> Result<()> {
    match args.kind {
        ExperimentKind::ThetaCurve => theta_curve(args),
        _ => synthetic_sweep(args),
    }
}
