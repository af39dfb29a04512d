//! The functions exposed by `zetaforge eval`.

use zetaforge::nielsen::xi_series;
use zetaforge::numerics::DD_EPS;
use zetaforge::specfun::{
    arccot_series, constants::pi, dirichlet_eta, harmonic_number, hurwitz_zeta, log_gamma,
    polygamma, polylog_int, stieltjes_gamma1, upper_gamma0, zeta,
};
use zetaforge::{Dd, Error, ExtendedReal, Result};

type Eval = fn(&[f64]) -> Result<ExtendedReal>;

/// One entry of the function table.
pub struct Function {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub summary: &'static str,
    eval: Eval,
}

impl Function {
    pub fn usage(&self) -> String {
        format!("{} {}", self.name, self.args.join(" "))
    }
}

pub const FUNCTIONS: &[Function] = &[
    Function {
        name: "zeta",
        args: &["s"],
        summary: "Riemann zeta ζ(s), s > 1",
        eval: |a| zeta(a[0]),
    },
    Function {
        name: "hurwitz_zeta",
        args: &["s", "a"],
        summary: "Hurwitz zeta ζ(s, a), s > 1, a > 0",
        eval: |a| hurwitz_zeta(a[0], a[1]),
    },
    Function {
        name: "eta",
        args: &["s"],
        summary: "Dirichlet eta η(s), s > 0",
        eval: |a| dirichlet_eta(a[0]),
    },
    Function {
        name: "polygamma",
        args: &["j", "x"],
        summary: "polygamma ψ^(j)(x), integer j ≥ 0, x > 0",
        eval: |a| polygamma(integer("j", a[0])? as u32, a[1]),
    },
    Function {
        name: "harmonic",
        args: &["n"],
        summary: "harmonic number H_n, integer n ≥ 0",
        eval: |a| Ok(harmonic_number(integer("n", a[0])?)),
    },
    Function {
        name: "stieltjes1",
        args: &["a"],
        summary: "generalized Stieltjes constant γ₁(a), a > 0",
        eval: |a| stieltjes_gamma1(a[0]),
    },
    Function {
        name: "polylog",
        args: &["k", "t"],
        summary: "polylogarithm Li_k(t), integer k ≥ 1, |t| ≤ 1",
        eval: |a| polylog_int(integer("k", a[0])? as u32, a[1]),
    },
    Function {
        name: "gamma0",
        args: &["x"],
        summary: "upper incomplete gamma Γ(0, x), x > 0",
        eval: |a| upper_gamma0(a[0]),
    },
    Function {
        name: "log_gamma",
        args: &["x"],
        summary: "ln Γ(x), x > 0",
        eval: |a| log_gamma(a[0]),
    },
    Function {
        name: "arccot",
        args: &["x"],
        summary: "inverse cotangent cot⁻¹x, x ≥ 0",
        eval: |a| arccot(a[0]),
    },
    Function {
        name: "xi",
        args: &["x"],
        summary: "Nielsen's ξ(x) = Σ H_n [1/(x+n) − 1/(n+1)], x not a negative integer",
        eval: |a| xi_series(a[0]),
    },
];

fn integer(name: &str, v: f64) -> Result<u64> {
    if v >= 0.0 && v.fract() == 0.0 && v < 1e15 {
        Ok(v as u64)
    } else {
        Err(Error::Domain(format!(
            "{name} must be a non-negative integer, got {v}"
        )))
    }
}

/// `cot⁻¹x` on `x ≥ 0`: the series from 1 on, `π/2 − atan x` below.
fn arccot(x: f64) -> Result<ExtendedReal> {
    if x >= 1.0 {
        return arccot_series(x, None);
    }
    if x.is_nan() || x < 0.0 {
        return Err(Error::Domain(format!(
            "arccot is evaluated for x >= 0, got {x}"
        )));
    }
    Ok(ExtendedReal::rounded(pi().mul_f64(0.5) - Dd::from_f64(x).atan()).with_extra_err(DD_EPS))
}

pub fn find(name: &str) -> Option<&'static Function> {
    FUNCTIONS.iter().find(|f| f.name == name)
}

/// Evaluates `name` at the given argument strings.
pub fn evaluate(name: &str, args: &[String]) -> Result<ExtendedReal> {
    let f = find(name).ok_or_else(|| {
        let names: Vec<_> = FUNCTIONS.iter().map(|f| f.name).collect();
        Error::Usage(format!(
            "unknown function `{name}`; available: {}",
            names.join(", ")
        ))
    })?;
    if args.len() != f.args.len() {
        return Err(Error::Usage(format!(
            "`{}` takes {} argument(s), got {}; usage: {}",
            f.name,
            f.args.len(),
            args.len(),
            f.usage()
        )));
    }
    let values = args
        .iter()
        .map(|a| {
            a.trim()
                .parse::<f64>()
                .map_err(|_| Error::Usage(format!("`{a}` is not a number")))
        })
        .collect::<Result<Vec<_>>>()?;
    (f.eval)(&values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zetaforge::specfun::constants::{euler_gamma, zeta2};

    fn eval(name: &str, args: &[&str]) -> Result<ExtendedReal> {
        evaluate(
            name,
            &args.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        )
    }

    #[test]
    fn table_examples() {
        assert!(
            eval("zeta", &["2"])
                .unwrap()
                .distance(ExtendedReal::rounded(zeta2()))
                < 1e-30
        );
        assert!(
            eval("xi", &["0"])
                .unwrap()
                .distance(ExtendedReal::rounded(zeta2()))
                < 1e-28
        );
        let psi1 = eval("polygamma", &["0", "1"]).unwrap();
        assert!(psi1.distance(ExtendedReal::rounded(-euler_gamma())) < 1e-30);
    }

    #[test]
    fn every_function_evaluates() {
        let samples: &[(&str, &[&str])] = &[
            ("hurwitz_zeta", &["2", "0.5"]),
            ("eta", &["1"]),
            ("harmonic", &["10"]),
            ("stieltjes1", &["1"]),
            ("polylog", &["2", "0.5"]),
            ("gamma0", &["1"]),
            ("log_gamma", &["3"]),
            ("arccot", &["0.3"]),
        ];
        for (name, args) in samples {
            let v = eval(name, args).unwrap();
            assert!(v.value.is_finite() && v.err < 1e-20, "{name}: {v:?}");
        }
        assert_eq!(samples.len() + 3, FUNCTIONS.len());
    }

    #[test]
    fn arccot_halves_agree() {
        let a = eval("arccot", &["0.5"]).unwrap();
        let b = eval("arccot", &["2"]).unwrap();
        let quarter_turn = ExtendedReal::rounded(pi().mul_f64(0.5));
        assert!((a + b).distance(quarter_turn) < 1e-30);
    }

    #[test]
    fn argument_errors() {
        assert!(matches!(eval("nope", &["1"]), Err(Error::Usage(_))));
        assert!(matches!(eval("zeta", &[]), Err(Error::Usage(_))));
        assert!(matches!(eval("zeta", &["two"]), Err(Error::Usage(_))));
        assert!(matches!(eval("zeta", &["1"]), Err(Error::Domain(_))));
        assert!(matches!(
            eval("polygamma", &["0.5", "1"]),
            Err(Error::Domain(_))
        ));
    }
}
