use std::fs;

use datagrinder::classifier::DataGrinderModel;
use datagrinder::datagen::{generate, GenConfig};

use crate::args::{GenArgs, PredictArgs, TrainArgs};
use crate::csv_io::{csv_writer, open_output, read_dataset, read_predict_input};
use crate::error::{CliError, Result};

pub(crate) fn per_class(samples: usize, per_class: Option<usize>, classes: usize) -> Result<usize> {
    let n = per_class.unwrap_or(samples / classes.max(1));
    if n == 0 {
        return Err(CliError::Usage(format!(
            "{samples} samples cannot cover {classes} classes"
        )));
    }
    Ok(n)
}

pub(crate) fn check_theta(theta: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&theta) {
        return Err(CliError::Usage(format!("--theta must lie in [0, 1], got {theta}")));
    }
    Ok(())
}

pub fn gen(args: &GenArgs) -> Result<()> {
    let cfg = GenConfig::new(
        args.classes,
        args.lambda,
        args.dims,
        per_class(args.samples, args.per_class, args.classes)?,
        args.seed,
    );
    let ds = generate(&cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut w = csv_writer(open_output(args.out.as_ref())?);
    let mut header: Vec<String> = (0..ds.feature_count()).map(|j| format!("f{j}")).collect();
    header.push("class".into());
    w.write_record(&header)?;
    for (i, row) in ds.rows().enumerate() {
        let mut rec: Vec<String> = row.iter().map(f64::to_string).collect();
        rec.push(ds.label(i).to_string());
        w.write_record(&rec)?;
    }
    w.flush()?;
    Ok(())
}

pub fn train(args: &TrainArgs) -> Result<()> {
    check_theta(args.theta)?;
    let csv = read_dataset(&args.data)?;
    let data = csv.to_dataset()?;
    let mut model = DataGrinderModel::train(&data, args.normalize.is_on())?
        .evaluate_aspects(&data)
        .filter_aspects(args.theta)?;
    model.class_names = csv.class_names.clone();
    fs::write(&args.out, model.to_json()?).map_err(|source| CliError::Io {
        path: args.out.clone(),
        source,
    })?;
    eprintln!(
        "classes={} features={} aspects={} resubstitution_accuracy={:.6}",
        model.class_count,
        model.feature_count,
        model.aspects.len(),
        model.accuracy(&data)
    );
    Ok(())
}

pub fn load_model(path: &std::path::Path) -> Result<DataGrinderModel> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    DataGrinderModel::from_json(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub fn predict(args: &PredictArgs) -> Result<()> {
    let model = load_model(&args.model)?;
    let input = read_predict_input(&args.data, model.feature_count)?;
    let name = |c: usize| model.class_names.get(c).cloned().unwrap_or_else(|| c.to_string());

    let predicted: Vec<String> = input.rows.iter().map(|r| name(model.classify(r))).collect();
    if let Some(labels) = &input.labels {
        if let Some(bad) = labels
            .iter()
            .find(|l| !model.class_names.is_empty() && !model.class_names.contains(l))
        {
            return Err(CliError::Data(format!("label {bad:?} is not a class of this model")));
        }
    }

    let mut w = csv_writer(open_output(args.out.as_ref())?);
    if let Some(h) = &input.header {
        let mut h = h.clone();
        h.push("predicted".into());
        w.write_record(&h)?;
    }
    for (rec, p) in input.records.iter().zip(&predicted) {
        let mut rec = rec.clone();
        rec.push(p.clone());
        w.write_record(&rec)?;
    }
    w.flush()?;

    if let Some(labels) = &input.labels {
        let correct = labels.iter().zip(&predicted).filter(|(l, p)| l == p).count();
        eprintln!(
            "rows={} accuracy={:.6}",
            labels.len(),
            correct as f64 / labels.len() as f64
        );
    }
    Ok(())
}
