use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("`{name}` = {value} lies outside {range}")]
    Domain {
        name: &'static str,
        value: f64,
        range: &'static str,
    },

    #[error("invalid step source: {0}")]
    InvalidSource(String),

    #[error("no regime transition: {0}")]
    Regime(String),

    #[error("infeasible: {0}")]
    Infeasible(String),
}
