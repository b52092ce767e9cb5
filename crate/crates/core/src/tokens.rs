//! String tokens for named states and bases.
//!
//! States: `bell:d`, `mixed:dA,dB`, `werner:w`, `haar:d,seed`,
//! `haar:dA,dB,seed`, `induced:dA,dB,rank,seed`.
//! Bases: `comp:d`, `fourier:d`, `haar:d,seed`.

use crate::states::{self, BipartiteState, ObservableBasis};
use crate::{Error, Result};

fn token_error(token: &str, message: impl Into<String>) -> Error {
    Error::Token {
        token: token.to_string(),
        message: message.into(),
    }
}

fn split(token: &str) -> Result<(&str, Vec<&str>)> {
    let (kind, args) = token
        .split_once(':')
        .ok_or_else(|| token_error(token, "expected `kind:args`"))?;
    Ok((kind.trim(), args.split(',').map(str::trim).collect()))
}

fn int(token: &str, s: &str) -> Result<usize> {
    s.parse()
        .map_err(|_| token_error(token, format!("`{s}` is not a nonnegative integer")))
}

fn seed(token: &str, s: &str) -> Result<u64> {
    s.parse()
        .map_err(|_| token_error(token, format!("`{s}` is not a seed")))
}

pub fn parse_state(token: &str) -> Result<BipartiteState> {
    let (kind, args) = split(token)?;
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(token_error(
                token,
                format!("`{kind}` takes {n} argument(s)"),
            ))
        }
    };
    match kind {
        "bell" => {
            arity(1)?;
            states::max_entangled(int(token, args[0])?)
        }
        "mixed" => {
            arity(2)?;
            states::max_mixed(int(token, args[0])?, int(token, args[1])?)
        }
        "werner" => {
            arity(1)?;
            let w: f64 = args[0]
                .parse()
                .map_err(|_| token_error(token, format!("`{}` is not a number", args[0])))?;
            states::werner(w)
        }
        "haar" => match args.len() {
            2 => {
                let d = int(token, args[0])?;
                states::haar_random_pure(d, d, seed(token, args[1])?)
            }
            3 => states::haar_random_pure(
                int(token, args[0])?,
                int(token, args[1])?,
                seed(token, args[2])?,
            ),
            _ => Err(token_error(token, "`haar` takes d,seed or dA,dB,seed")),
        },
        "induced" => {
            arity(4)?;
            states::random_mixed(
                int(token, args[0])?,
                int(token, args[1])?,
                int(token, args[2])?,
                seed(token, args[3])?,
            )
        }
        _ => Err(token_error(token, format!("unknown state kind `{kind}`"))),
    }
}

pub fn parse_basis(token: &str) -> Result<ObservableBasis> {
    let (kind, args) = split(token)?;
    match (kind, args.len()) {
        ("comp", 1) => states::computational_basis(int(token, args[0])?),
        ("fourier", 1) => states::fourier_basis(int(token, args[0])?),
        ("haar", 2) => states::random_basis(int(token, args[0])?, seed(token, args[1])?),
        ("comp" | "fourier" | "haar", _) => Err(token_error(token, "wrong number of arguments")),
        _ => Err(token_error(token, format!("unknown basis kind `{kind}`"))),
    }
}
