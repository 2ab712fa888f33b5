use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::combinatorics::{FusionContext, Partition};
use crate::error::{FusionError, Result};
use crate::fusion::{fuse_bethe, fuse_kac_walton, FusionExpansion, VerlindeFusion};
use crate::plactic::PlacticFusion;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FusionMethod {
    Bethe,
    KacWalton,
    Verlinde,
    Plactic,
}

impl FusionMethod {
    pub const ALL: [FusionMethod; 4] =
        [Self::Bethe, Self::KacWalton, Self::Verlinde, Self::Plactic];

    pub fn name(self) -> &'static str {
        match self {
            Self::Bethe => "bethe",
            Self::KacWalton => "kac-walton",
            Self::Verlinde => "verlinde",
            Self::Plactic => "plactic",
        }
    }
}

impl fmt::Display for FusionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FusionMethod {
    type Err = FusionError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| FusionError::Parse(format!("unknown fusion method {s:?}")))
    }
}

/// Per-context state shared across many products: the S-matrix and the
/// cached plactic operators are built on first use.
#[derive(Debug)]
pub struct FusionEngine {
    ctx: FusionContext,
    rounding: f64,
    verlinde: OnceLock<std::result::Result<VerlindeFusion<f64>, FusionError>>,
    plactic: OnceLock<PlacticFusion>,
}

impl FusionEngine {
    pub fn new(ctx: &FusionContext) -> Self {
        Self::with_rounding(ctx, crate::Tolerances::default().verlinde_rounding)
    }

    pub fn with_rounding(ctx: &FusionContext, rounding: f64) -> Self {
        Self {
            ctx: ctx.clone(),
            rounding,
            verlinde: OnceLock::new(),
            plactic: OnceLock::new(),
        }
    }

    pub fn context(&self) -> &FusionContext {
        &self.ctx
    }

    pub fn verlinde(&self) -> Result<&VerlindeFusion<f64>> {
        self.verlinde
            .get_or_init(|| VerlindeFusion::new(&self.ctx, self.rounding))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn plactic(&self) -> &PlacticFusion {
        self.plactic.get_or_init(|| PlacticFusion::new(&self.ctx))
    }

    pub fn fuse(
        &self,
        method: FusionMethod,
        lambda: &Partition,
        mu: &Partition,
    ) -> Result<FusionExpansion> {
        match method {
            FusionMethod::Bethe => fuse_bethe(lambda, mu, &self.ctx),
            FusionMethod::KacWalton => fuse_kac_walton(lambda, mu, &self.ctx),
            FusionMethod::Verlinde => self.verlinde()?.fuse(lambda, mu),
            FusionMethod::Plactic => self.plactic().fuse(lambda, mu),
        }
    }
}
