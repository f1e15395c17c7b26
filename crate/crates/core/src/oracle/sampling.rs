use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::OracleConfig;
use crate::error::Result;
use crate::params::SourceClass;
use crate::source::StepSource;

/// `n_samples` random members of the class on `n_cells` equal cells.
///
/// Values are drawn uniformly in `[m, M]` and then scaled toward the face of
/// the box that restores the mass: toward `m` when too heavy, toward `M`
/// when too light. Scaling keeps every value inside the box.
pub fn random_feasible(cls: &SourceClass, cfg: &OracleConfig) -> Result<Vec<StepSource>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (m, top, s) = (cls.ground(), cls.top(), cls.average());
    (0..cfg.n_samples)
        .map(|_| {
            let mut values: Vec<f64> = (0..cfg.n_cells).map(|_| rng.gen_range(m..=top)).collect();
            let mean = values.iter().sum::<f64>() / values.len() as f64;
            if mean > s {
                let t = (s - m) / (mean - m);
                values.iter_mut().for_each(|v| *v = m + t * (*v - m));
            } else if mean < s {
                let t = (top - s) / (top - mean);
                values.iter_mut().for_each(|v| *v = top - t * (top - *v));
            }
            StepSource::uniform(values)
        })
        .collect()
}
