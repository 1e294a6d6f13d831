use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "datagrinder",
    version,
    about = "Convex hull benchmarks and the DataGrinder classifier"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one hull and print its vertices counter-clockwise.
    Hull(HullArgs),
    /// Mean point reads per algorithm over a list of sizes.
    Bench(BenchArgs),
    /// Write a synthetic classification dataset.
    Gen(GenArgs),
    /// Train a model and save it as JSON.
    Train(TrainArgs),
    /// Append a predicted-label column to a CSV file.
    Predict(PredictArgs),
    /// Stratified k-fold cross-validation.
    Cv(CvArgs),
    /// Accuracy curves over lambda, class count or theta.
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Naive,
    Classic,
    Grind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Generator {
    Uniform,
    Normal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Switch {
    On,
    Off,
}

impl Switch {
    pub fn is_on(self) -> bool {
        self == Switch::On
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Baseline {
    Nn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExperimentKind {
    LambdaSweep,
    ClassSweep,
    ThetaCurve,
}

#[derive(Debug, Args)]
pub struct HullArgs {
    /// Two-column x,y point file.
    #[arg(long, conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub gen: Option<Generator>,
    #[arg(long, default_value_t = 1000)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Algorithm::Grind)]
    pub algorithm: Algorithm,
    #[arg(long, default_value_t = 1)]
    pub partitions: usize,
    /// Largest input the cubic naive algorithm accepts.
    #[arg(long, default_value_t = 2000)]
    pub naive_cap: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10,100,1000,10000,100000,1000000")]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Generator::Uniform)]
    pub gen: Generator,
    /// Sizes above this are reported as skipped for the classic algorithm.
    #[arg(long, default_value_t = 100_000)]
    pub classic_max_n: usize,
    /// Add a mean wall-time column. Timings make the report non-reproducible.
    #[arg(long)]
    pub timing: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, default_value_t = 1.0)]
    pub lambda: f64,
    #[arg(long, default_value_t = 2)]
    pub classes: usize,
    #[arg(long, default_value_t = 5)]
    pub dims: usize,
    /// Total rows, split evenly across classes.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Rows per class; overrides --samples.
    #[arg(long)]
    pub per_class: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    #[arg(long)]
    pub data: PathBuf,
    /// Model file to write.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub normalize: Switch,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[arg(long)]
    pub model: PathBuf,
    #[arg(long)]
    pub data: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CvArgs {
    #[arg(long)]
    pub data: PathBuf,
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Also report the theta with the best mean accuracy over the grid.
    #[arg(long)]
    pub sweep: bool,
    #[arg(long, default_value_t = 0.01)]
    pub sweep_step: f64,
    #[arg(long, value_enum)]
    pub baseline: Option<Baseline>,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub normalize: Switch,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(value_enum)]
    pub kind: ExperimentKind,
    /// Lambda values to sweep (lambda-sweep) or the single lambda used by
    /// class-sweep. Defaults: 1..=8 and 5.
    #[arg(long, value_delimiter = ',')]
    pub lambda: Vec<f64>,
    /// Class counts to sweep (class-sweep) or the single count used by
    /// lambda-sweep. Defaults: 2..=10 and 2.
    #[arg(long, value_delimiter = ',')]
    pub classes: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub dims: usize,
    /// Rows in each of the train and test sets, split evenly across classes.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long)]
    pub per_class: Option<usize>,
    /// Independent repetitions averaged per grid point.
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Dataset for theta-curve.
    #[arg(long)]
    pub data: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub folds: usize,
    #[arg(long, default_value_t = 0.01)]
    pub sweep_step: f64,
    #[arg(long, value_enum)]
    pub baseline: Option<Baseline>,
    #[arg(long, value_enum, default_value_t = Switch::On)]
    pub normalize: Switch,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
