/// Numerical tolerances shared by every decision procedure in the crate.
///
/// The defaults are the values the test suites are pinned against. All of
/// them can be replaced at once with [`Tolerances::with_eps`], which is what
/// the command-line `--eps` flag does.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Slack kept from the boundary of `D` and `G`.
    pub boundary_margin: f64,
    /// Band around `|τ - 1| = 2|α|` classified as parabolic.
    pub class_eps: f64,
    /// Sine-of-angle threshold for projective equality of directions.
    pub dir_eps: f64,
    /// Allowed deviation of `|τ|` from 1 when reading a direction as `τ`.
    pub circle_tol: f64,
    /// Angular tolerance for `τ = 1` and `τ = τ_σ^±`.
    pub arc_tol: f64,
    /// Relative tolerance for matching Poincaré distances.
    pub match_tol: f64,
    /// `|z1 - z2|` below which a lift is treated as royal.
    pub royal_eps: f64,
    /// Scaled `|s² - 4p|` below which the chart refuses a point.
    pub royal_margin: f64,
    /// Equality tolerance for flat coordinates and on-geodesic checks.
    pub point_tol: f64,
    /// Objective spread under which the extremal problem is constant, and
    /// the band within which a local maximum counts as global.
    pub value_tol: f64,
    /// Minimal angular separation between reported maximizers.
    pub cluster_angle: f64,
    /// Number of grid angles for the extremal search.
    pub grid: usize,
    /// Final bracket width of the golden-section refinement.
    pub golden_width: f64,
}

impl Tolerances {
    pub const DEFAULT: Tolerances = Tolerances {
        boundary_margin: 1e-12,
        class_eps: 1e-9,
        dir_eps: 1e-8,
        circle_tol: 1e-8,
        arc_tol: 1e-8,
        match_tol: 1e-8,
        royal_eps: 1e-8,
        royal_margin: 1e-10,
        point_tol: 1e-9,
        value_tol: 1e-9,
        cluster_angle: 1e-6,
        grid: 720,
        golden_width: 1e-12,
    };

    /// Replaces every decision tolerance by `eps`. The optimizer resolution
    /// (`grid`, `golden_width`) is left alone.
    pub fn with_eps(eps: f64) -> Self {
        Tolerances {
            boundary_margin: eps,
            class_eps: eps,
            dir_eps: eps,
            circle_tol: eps,
            arc_tol: eps,
            match_tol: eps,
            royal_eps: eps,
            royal_margin: eps,
            point_tol: eps,
            value_tol: eps,
            cluster_angle: eps,
            ..Self::DEFAULT
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::DEFAULT
    }
}
