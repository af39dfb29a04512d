use std::fmt;
use std::sync::Arc;

use super::asymptotic::LogSeries;
use super::dd::{Dd, DD_EPS};
use super::extended::ExtendedReal;
use super::extrapolate::{extrapolate, ExtrapolationModel};
use super::tail::{harmonic_power_tail, log_power_tail};
use crate::error::{Error, Result};

/// Term rule: receives the index `n` and the harmonic number `H_n`.
pub type TermFn = Arc<dyn Fn(u64, Dd) -> Dd + Send + Sync>;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    PositiveMonotone,
    Alternating,
    General,
}

/// One closed-form tail `Σ_{n>N} φ(n + shift)`.
#[derive(Copy, Clone, Debug, PartialEq)]
pub enum TailPrimitive {
    /// `m^{-s}`
    Power(f64),
    /// `ln(m) m^{-s}`
    LogPower(f64),
    /// `ln²(m) m^{-s}`
    LogSquaredPower(f64),
    /// `H_n n^{-s}` (unshifted only)
    HarmonicPower(f64),
}

impl TailPrimitive {
    fn exponent(self) -> f64 {
        match self {
            TailPrimitive::Power(s)
            | TailPrimitive::LogPower(s)
            | TailPrimitive::LogSquaredPower(s)
            | TailPrimitive::HarmonicPower(s) => s,
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub struct TailTerm {
    pub primitive: TailPrimitive,
    pub coefficient: Dd,
    /// Position in the asymptotic expansion; the highest order present is
    /// counted as truncation error.
    pub order: usize,
}

/// Asymptotic model of a series tail beyond `valid_from`.
#[derive(Clone, Debug)]
pub struct TailModel {
    pub basis: Vec<TailTerm>,
    pub valid_from: u64,
    /// Tail primitives are evaluated at `n + shift`.
    pub shift: f64,
}

impl TailModel {
    pub fn new(basis: Vec<TailTerm>, valid_from: u64) -> Self {
        TailModel {
            basis,
            valid_from,
            shift: 0.0,
        }
    }

    /// Converts an expansion in `1/(n + shift)` into primitives.
    pub fn from_expansion(expansion: &LogSeries, shift: f64, valid_from: u64) -> Self {
        let mut basis = Vec::new();
        for j in 0..expansion.order() {
            let s = expansion.offset() + j as f64;
            for p in 0..=2 {
                let c = expansion.coefficient(j, p);
                if c.is_zero() {
                    continue;
                }
                let primitive = match p {
                    0 => TailPrimitive::Power(s),
                    1 => TailPrimitive::LogPower(s),
                    _ => TailPrimitive::LogSquaredPower(s),
                };
                basis.push(TailTerm {
                    primitive,
                    coefficient: c,
                    order: j,
                });
            }
        }
        TailModel {
            basis,
            valid_from,
            shift,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for t in &self.basis {
            if !t.coefficient.is_finite() {
                return Err(Error::Configuration("non-finite tail coefficient".into()));
            }
            if !(t.primitive.exponent() > 1.0) {
                return Err(Error::Configuration(format!(
                    "divergent tail primitive {:?}",
                    t.primitive
                )));
            }
            if matches!(t.primitive, TailPrimitive::HarmonicPower(_)) && self.shift != 0.0 {
                return Err(Error::Configuration(
                    "harmonic tail primitives cannot be shifted".into(),
                ));
            }
        }
        Ok(())
    }

    /// Model tail `Σ_{n>N}` with truncation error included.
    pub fn evaluate(&self, n: u64) -> Result<ExtendedReal> {
        let x = Dd::from_f64(n as f64) + Dd::from_f64(self.shift);
        let top = self.basis.iter().map(|t| t.order).max().unwrap_or(0);
        let mut total = ExtendedReal::ZERO;
        let mut last = ExtendedReal::ZERO;
        for t in &self.basis {
            let v = match t.primitive {
                TailPrimitive::Power(s) => log_power_tail(0, s, x, 1e-31)?,
                TailPrimitive::LogPower(s) => log_power_tail(1, s, x, 1e-31)?,
                TailPrimitive::LogSquaredPower(s) => log_power_tail(2, s, x, 1e-31)?,
                TailPrimitive::HarmonicPower(s) => harmonic_power_tail(s, n)?,
            } * ExtendedReal::exact(t.coefficient);
            if t.order == top && self.basis.len() > 1 {
                last = last + v;
            }
            total = total + v;
        }
        Ok(total.with_extra_err(last.to_f64().abs()))
    }
}

#[derive(Clone)]
pub struct SeriesSpec {
    pub term: TermFn,
    pub n0: u64,
    pub kind: SeriesKind,
    pub tail_model: Option<TailModel>,
}

impl fmt::Debug for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SeriesSpec")
            .field("n0", &self.n0)
            .field("kind", &self.kind)
            .field("tail_model", &self.tail_model)
            .finish()
    }
}

impl SeriesSpec {
    pub fn new(
        n0: u64,
        kind: SeriesKind,
        term: impl Fn(u64, Dd) -> Dd + Send + Sync + 'static,
    ) -> Self {
        SeriesSpec {
            term: Arc::new(term),
            n0,
            kind,
            tail_model: None,
        }
    }

    pub fn with_tail(mut self, model: TailModel) -> Self {
        self.tail_model = Some(model);
        self
    }

    /// The same series without its tail model, so that summing it goes
    /// through extrapolation of partial sums.
    pub fn without_tail(&self) -> Self {
        SeriesSpec {
            tail_model: None,
            ..self.clone()
        }
    }
}

#[derive(Copy, Clone, Debug)]
pub struct SumOptions {
    /// Largest truncation point before falling back to extrapolation.
    pub max_terms: u64,
}

impl Default for SumOptions {
    fn default() -> Self {
        SumOptions { max_terms: 1 << 24 }
    }
}

/// Streams partial sums of a series, tracking `H_n` alongside.
struct PartialSums<'a> {
    spec: &'a SeriesSpec,
    n: u64,
    h: Dd,
    acc: Dd,
    abs_acc: f64,
}

impl<'a> PartialSums<'a> {
    fn new(spec: &'a SeriesSpec) -> Self {
        let mut h = Dd::ZERO;
        for k in 1..spec.n0 {
            h += Dd::from_f64(k as f64).recip();
        }
        PartialSums {
            spec,
            n: spec.n0,
            h,
            acc: Dd::ZERO,
            abs_acc: 0.0,
        }
    }

    /// Adds terms up to and including index `upto`.
    fn advance_to(&mut self, upto: u64) -> Result<()> {
        while self.n <= upto {
            if self.n > 0 {
                self.h += Dd::from_f64(self.n as f64).recip();
            }
            let t = (self.spec.term)(self.n, self.h);
            if !t.is_finite() {
                return Err(Error::Overflow);
            }
            self.acc += t;
            self.abs_acc += t.hi.abs();
            self.n += 1;
        }
        Ok(())
    }

    fn current(&self) -> ExtendedReal {
        ExtendedReal::new(self.acc, (self.abs_acc + self.acc.hi.abs()) * 4.0 * DD_EPS)
    }

    fn last_index(&self) -> u64 {
        self.n - 1
    }
}

pub fn sum_series(spec: &SeriesSpec, eps: f64) -> Result<ExtendedReal> {
    sum_series_with(spec, eps, SumOptions::default())
}

/// Smallest truncation point at which a tail model is applied. Closing a
/// log-power tail at small `N` means summing its first few hundred terms
/// directly in double-double, so it is cheaper to sum the series itself
/// that far.
const MIN_CLOSURE: u64 = 1024;

/// Sums `spec` to absolute accuracy `eps`.
///
/// With a tail model the truncation point is the smallest power of two (at
/// or beyond `valid_from` and [`MIN_CLOSURE`]) where the model's own error drops below `eps/4`.
/// Without one, or when `max_terms` is reached first, partial sums are
/// extrapolated instead.
pub fn sum_series_with(spec: &SeriesSpec, eps: f64, opts: SumOptions) -> Result<ExtendedReal> {
    if !(eps > 0.0) {
        return Err(Error::Configuration("eps must be positive".into()));
    }
    if let Some(model) = &spec.tail_model {
        model.validate()?;
    }
    let mut sums = PartialSums::new(spec);
    match (&spec.tail_model, spec.kind) {
        (Some(model), _) => {
            let mut n = model
                .valid_from
                .max(spec.n0)
                .max(MIN_CLOSURE)
                .next_power_of_two();
            let mut best: Option<ExtendedReal> = None;
            while n <= opts.max_terms.max(16) {
                sums.advance_to(n)?;
                if sums.current().err > eps {
                    return finish(sums.current(), eps);
                }
                let tail = model.evaluate(n)?;
                let total = sums.current() + tail;
                if tail.err <= eps / 4.0 {
                    return finish(total, eps);
                }
                best = Some(total);
                n *= 2;
            }
            match extrapolated(&mut sums, spec, opts) {
                Ok(v) => finish(v, eps),
                Err(_) => finish(best.unwrap_or(ExtendedReal::ZERO), eps),
            }
        }
        (None, SeriesKind::Alternating) => {
            let mut n = spec.n0 + 63;
            loop {
                let v = alternating(&mut sums, n)?;
                if v.err <= eps || n >= opts.max_terms {
                    return finish(v, eps);
                }
                n = spec.n0 + 2 * (n - spec.n0 + 1) - 1;
            }
        }
        (None, _) => finish(extrapolated(&mut sums, spec, opts)?, eps),
    }
}

fn finish(v: ExtendedReal, eps: f64) -> Result<ExtendedReal> {
    if v.err <= eps {
        Ok(v)
    } else {
        Err(Error::Precision {
            requested: eps,
            reached: v.err,
        })
    }
}

fn alternating(sums: &mut PartialSums<'_>, upto: u64) -> Result<ExtendedReal> {
    let start = sums.spec.n0;
    let mut fresh = PartialSums::new(sums.spec);
    let mut partials = Vec::new();
    let mut k = start;
    while k <= upto {
        fresh.advance_to(k)?;
        partials.push(fresh.current());
        k += 1;
    }
    *sums = fresh;
    extrapolate(&[], &partials, ExtrapolationModel::Alternating)
}

fn extrapolated<'a>(
    sums: &mut PartialSums<'a>,
    spec: &'a SeriesSpec,
    opts: SumOptions,
) -> Result<ExtendedReal> {
    if spec.kind == SeriesKind::Alternating {
        let upto = sums.spec.n0 + 255;
        return alternating(sums, upto);
    }
    let mut fresh = PartialSums::new(spec);
    let mut ns = Vec::new();
    let mut ps = Vec::new();
    let top = opts.max_terms.clamp(1 << 10, 1 << 17);
    let mut n = (spec.n0.max(8)).next_power_of_two();
    while n <= top {
        fresh.advance_to(n)?;
        ns.push(fresh.last_index());
        ps.push(fresh.current());
        n *= 2;
    }
    *sums = fresh;
    extrapolate(&ns, &ps, ExtrapolationModel::LogOverN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::asymptotic::LogSeries;

    fn z2() -> Dd {
        Dd::PI.sqr() / Dd::from_f64(6.0)
    }

    #[test]
    fn log_ratio_series_closed_form() {
        // Σ_{r≥2} [ln(r/(r−1)) − 1/(2r²) − 1/r] = 3/2 − γ − ζ(2)/2
        let order = 16;
        let x = LogSeries::x(order);
        // in m = r: ln(r/(r−1)) = −ln(1 − x)
        let expansion = x
            .clone()
            .scale(-Dd::ONE)
            .ln_1p()
            .scale(-Dd::ONE)
            .sub(&x.mul(&x).scale(Dd::from_f64(0.5)))
            .sub(&x);
        let spec = SeriesSpec::new(2, SeriesKind::PositiveMonotone, |r, _| {
            let rr = Dd::from_f64(r as f64);
            -(-rr.recip()).ln_1p() - rr.sqr().recip().mul_f64(0.5) - rr.recip()
        })
        .with_tail(TailModel::from_expansion(&expansion, 0.0, 16));
        let v = sum_series(&spec, 1e-12).unwrap();
        let want = Dd::from_f64(1.5) - super::super::tail::EULER_GAMMA - z2().mul_f64(0.5);
        assert!((v.value - want).abs().to_f64() <= v.err, "{v:?}");
        assert!(v.err <= 1e-12);
    }

    #[test]
    fn single_term_series() {
        let spec = SeriesSpec::new(1, SeriesKind::General, |n, _| {
            if n == 1 {
                Dd::from_f64(0.25)
            } else {
                Dd::ZERO
            }
        })
        .with_tail(TailModel::new(Vec::new(), 1));
        let v = sum_series(&spec, 1e-15).unwrap();
        assert_eq!(v.to_f64(), 0.25);
    }

    #[test]
    fn divergent_basis_is_configuration_error() {
        let spec = SeriesSpec::new(1, SeriesKind::General, |n, _| {
            Dd::from_f64(n as f64).recip()
        })
        .with_tail(TailModel::new(
            vec![TailTerm {
                primitive: TailPrimitive::Power(1.0),
                coefficient: Dd::ONE,
                order: 0,
            }],
            10,
        ));
        assert!(matches!(
            sum_series(&spec, 1e-10),
            Err(Error::Configuration(_))
        ));
        assert!(matches!(
            sum_series(&spec, 0.0),
            Err(Error::Configuration(_))
        ));
    }

    #[test]
    fn unreachable_eps_is_precision_error() {
        let spec = SeriesSpec::new(1, SeriesKind::PositiveMonotone, |n, _| {
            Dd::from_f64(n as f64).sqr().recip()
        })
        .with_tail(TailModel::new(
            vec![TailTerm {
                primitive: TailPrimitive::Power(2.0),
                coefficient: Dd::ONE,
                order: 0,
            }],
            1,
        ));
        assert!(matches!(
            sum_series(&spec, 1e-40),
            Err(Error::Precision { .. })
        ));
    }

    #[test]
    fn alternating_without_model() {
        let spec = SeriesSpec::new(1, SeriesKind::Alternating, |n, _| {
            let t = Dd::from_f64(n as f64).sqrt().recip();
            if n % 2 == 1 {
                t
            } else {
                -t
            }
        });
        let v = sum_series(&spec, 1e-14).unwrap();
        let want = Dd::parse_decimal("0.6048986434216303702472659142359554997598").unwrap();
        assert!((v.value - want).abs().to_f64() < 1e-14);
    }
}
