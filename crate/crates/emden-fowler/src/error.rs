//! Error type shared by every module of the crate.

/// Errors reported by evaluators, reductions, and the numerical oracle.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the real-evaluable domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// The evaluation point is too close to a pole of the Weierstrass function.
    #[error("argument within pole tolerance (|wp| exceeds 1e12) at t = {t}")]
    PoleProximity { t: f64 },
    /// A real root of the particular-solution constant does not exist.
    #[error("no real root: {0}")]
    NoRealRoot(String),
    /// The closed-form family is undefined at n = 1.
    #[error("formula undefined at n = 1")]
    NEqualsOne,
    /// First integrals divide by n + 1.
    #[error("first integral undefined at n = -1")]
    NEqualsMinusOne,
    /// A fractional power of a negative base was requested.
    #[error("negative base {base} with non-odd-root exponent {exponent}")]
    NegativeBase { base: f64, exponent: f64 },
    /// The kink solution crossed its pole 1 + K2*exp(t) = 0.
    #[error("kink denominator crossed zero at t = {t}")]
    PoleCrossing { t: f64 },
    /// The cubic reduction needs a genuine cubic.
    #[error("degenerate cubic: leading coefficient is zero")]
    DegenerateCubic,
    /// The quartic radicand Q4(u0) is negative, so no real square root exists.
    #[error("negative radicand Q4(u0) = {value} at u0 = {u0}")]
    NegativeRadicand { u0: f64, value: f64 },
    /// `quartic_solution_simple_root` requires u0 to be a root of Q4.
    #[error("u0 = {u0} is not a root of the quartic: Q4(u0) = {value}")]
    NotARoot { u0: f64, value: f64 },
    /// The quadrature radicand dropped below the positivity floor.
    #[error("radicand not positive at tau = {tau}")]
    RadicandNonpositive { tau: f64 },
    /// The parametric denominator Theta(tau) crossed zero.
    #[error("Theta(tau) crossed zero at tau = {tau}")]
    ThetaZeroCrossing { tau: f64 },
    /// Finite-difference stencils need at least five uniformly spaced samples.
    #[error("grid too short: {len} samples, need at least {need}")]
    GridTooShort { len: usize, need: usize },
    /// chi(tau) must be strictly monotone for the curve to define z(chi).
    #[error("chi is not monotone along the curve (d chi/d tau changes sign)")]
    ChiNotMonotone,
    /// A drift measurement needs at least one trajectory sample.
    #[error("trajectory is empty")]
    EmptyTrajectory,
    /// The adaptive integrator reduced the step below the representable floor.
    #[error("step size underflow at chi = {chi}")]
    StepSizeUnderflow { chi: f64 },
    /// Safety valve for runaway integrations.
    #[error("step limit exceeded after {steps} steps")]
    StepLimitExceeded { steps: usize },
    /// The n = 5 worked example requires K4 != 0.
    #[error("K4 must be nonzero")]
    K4Zero,
    /// The tau-inversion route is only available for n = 2.
    #[error("unsupported exponent n = {n} for this reduction")]
    UnsupportedN { n: f64 },
    /// The equation does not belong to either integrable class.
    #[error("equation is not in an integrable class (lambda = {lambda}, n = {n})")]
    NotIntegrable { n: f64, lambda: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
