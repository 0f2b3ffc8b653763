/// Default tolerance for comparisons of real values.
pub const TOLERANCE: f64 = 1e-9;

/// Caps that turn combinatorial explosions into [`Error::SizeLimitExceeded`].
///
/// [`Error::SizeLimitExceeded`]: crate::Error::SizeLimitExceeded
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_elements: usize,
    pub max_downsets: usize,
    pub max_chains: usize,
    /// Number of element families inspected by the k-monotonicity checks.
    pub max_families: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 4096,
            max_downsets: 1 << 20,
            max_chains: 1_000_000,
            max_families: 1 << 22,
        }
    }
}

impl Limits {
    /// Defaults, with `LATBEL_MAX_ELEMENTS` overriding the element cap when set.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(n) = std::env::var("LATBEL_MAX_ELEMENTS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
        {
            limits.max_elements = n;
        }
        limits
    }
}
