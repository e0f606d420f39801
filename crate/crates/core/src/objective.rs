use crate::error::Result;
use crate::rng::DrawSource;

/// A minimization target.
///
/// `rng` is the owning run's stream; deterministic objectives ignore it, noisy
/// ones (F7) draw from it so that runs stay reproducible per seed.
pub trait Objective {
    fn evaluate(&self, position: &[f64], rng: &mut dyn DrawSource) -> Result<f64>;
}

/// Adapts a plain closure into an [`Objective`].
pub struct FnObjective<F>(pub F);

impl<F> Objective for FnObjective<F>
where
    F: Fn(&[f64]) -> f64,
{
    fn evaluate(&self, position: &[f64], _rng: &mut dyn DrawSource) -> Result<f64> {
        Ok((self.0)(position))
    }
}

impl<T: Objective + ?Sized> Objective for &T {
    fn evaluate(&self, position: &[f64], rng: &mut dyn DrawSource) -> Result<f64> {
        (**self).evaluate(position, rng)
    }
}
