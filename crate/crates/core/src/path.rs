/// A real-valued path sampled on a uniform grid of `[0, span]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePath {
    values: Vec<f64>,
    span: f64,
}

impl DiscretePath {
    /// `values[i]` is the value at time `i * span / (values.len() - 1)`.
    pub fn new(values: Vec<f64>, span: f64) -> Self {
        assert!(values.len() >= 2, "a path needs at least two grid points");
        assert!(span > 0.0);
        Self { values, span }
    }

    /// Integer-time path: `values[i]` is the value at time `i`.
    pub fn from_integer_times(values: Vec<f64>) -> Self {
        let span = (values.len() - 1) as f64;
        Self::new(values, span)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn span(&self) -> f64 {
        self.span
    }

    /// Number of grid intervals.
    pub fn grid(&self) -> usize {
        self.values.len() - 1
    }

    pub fn step(&self) -> f64 {
        self.span / self.grid() as f64
    }

    /// Linear interpolation; `t` is clamped to `[0, span]`.
    pub fn at(&self, t: f64) -> f64 {
        let x = (t / self.step()).clamp(0.0, self.grid() as f64);
        let i = x.floor() as usize;
        if i >= self.grid() {
            return self.values[self.grid()];
        }
        let frac = x - i as f64;
        self.values[i] * (1.0 - frac) + self.values[i + 1] * frac
    }

    pub fn max(&self) -> f64 {
        self.values.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn min(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// Rescales time to `[0, 1]` and multiplies values by `factor`.
    pub fn normalized(&self, factor: f64) -> Self {
        Self::new(self.values.iter().map(|v| v * factor).collect(), 1.0)
    }
}
