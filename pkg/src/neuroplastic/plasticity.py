"""Plasticity engine: per-parameter traces, normalized signals, and the
modulation coefficient.

The coefficient pipeline is: gradient/activity/memory traces -> three
normalized signals -> gradient-only and full coefficients -> warmup-gated
interpolation between the two. The gradient-only ablation is the same code
path with the interpolation weight forced to zero, so the two modes are
bitwise-comparable by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NonFiniteGradientError
from .tensor_ops import all_finite, check_same_shape, clip, mean

FULL = "full"
GRADIENT_ONLY = "gradient_only"

PER_TENSOR = "per_tensor"
GLOBAL = "global"


@dataclass
class PlasticityConfig:
    """Hyperparameters of the modulation coefficient.

    Defaults are the library-wide ones; the lightweight benchmark configs
    narrow the coefficient bounds to (0.9, 1.1).
    """

    w_activity: float = 0.4
    w_gradient: float = 0.4
    w_memory: float = 0.2
    plasticity_scale: float = 1.0
    alpha_min: float = 0.2
    alpha_max: float = 2.0
    beta_activity: float = 0.95
    beta1: float = 0.9
    beta2: float = 0.99
    eps: float = 1e-8
    warmup_epochs: int = 0
    mode: str = FULL
    parameterwise: bool = True
    # Scope of the mean(.) in the normalized signals: per parameter tensor,
    # or pooled across every parameter in the model.
    normalization: str = PER_TENSOR

    def validate(self) -> "PlasticityConfig":
        if not self.alpha_min <= self.alpha_max:
            raise ValueError("alpha_min must be <= alpha_max")
        for name in ("beta_activity", "beta1", "beta2"):
            b = getattr(self, name)
            if not 0.0 <= b < 1.0:
                raise ValueError(f"{name} must lie in [0, 1)")
        if self.eps <= 0.0:
            raise ValueError("eps must be positive")
        if self.warmup_epochs < 0:
            raise ValueError("warmup_epochs must be nonnegative")
        if self.mode not in (FULL, GRADIENT_ONLY):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.normalization not in (PER_TENSOR, GLOBAL):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        return self


@dataclass
class ParamState:
    """Per-parameter-tensor optimizer state.

    ``activity`` is the EMA of gradient magnitudes; ``m`` and ``v`` are the
    raw (non-bias-corrected) first and second moments.
    """

    activity: np.ndarray
    m: np.ndarray
    v: np.ndarray
    step: int = 0

    @classmethod
    def zeros(cls, shape) -> "ParamState":
        return cls(
            activity=np.zeros(shape, dtype=np.float64),
            m=np.zeros(shape, dtype=np.float64),
            v=np.zeros(shape, dtype=np.float64),
        )

    def copy(self) -> "ParamState":
        return ParamState(self.activity.copy(), self.m.copy(), self.v.copy(), self.step)


@dataclass
class PooledMeans:
    """Model-wide normalization denominators for ``normalization="global"``."""

    grad: float
    activity: float
    memory: float


def update_traces(state: ParamState, g: np.ndarray, cfg: PlasticityConfig) -> ParamState:
    """Advance activity/moment traces by one step, in place."""
    check_same_shape(state.activity, g)
    if not all_finite(g):
        raise NonFiniteGradientError("gradient contains NaN/Inf")
    ba, b1, b2 = cfg.beta_activity, cfg.beta1, cfg.beta2
    state.activity *= ba
    state.activity += (1.0 - ba) * np.abs(g)
    state.m *= b1
    state.m += (1.0 - b1) * g
    state.v *= b2
    state.v += (1.0 - b2) * (g * g)
    state.step += 1
    return state


def gradient_signal(g: np.ndarray, eps: float, norm_mean: float | None = None) -> np.ndarray:
    """|g| normalized by its population mean: |g| / (mean(|g|) + eps)."""
    mag = np.abs(g)
    denom = (mean(mag) if norm_mean is None else norm_mean) + eps
    return mag / denom


def activity_signal(a: np.ndarray, eps: float, norm_mean: float | None = None) -> np.ndarray:
    """Activity trace normalized by its population mean."""
    denom = (mean(a) if norm_mean is None else norm_mean) + eps
    return a / denom


def memory_ratio(m: np.ndarray, v: np.ndarray, eps: float) -> np.ndarray:
    """|m| / (sqrt(v) + eps), the unnormalized memory term."""
    check_same_shape(m, v)
    return np.abs(m) / (np.sqrt(v) + eps)


def memory_signal(
    m: np.ndarray, v: np.ndarray, eps: float, norm_mean: float | None = None
) -> np.ndarray:
    """First-to-second-moment ratio normalized by its population mean."""
    r = memory_ratio(m, v, eps)
    denom = (mean(r) if norm_mean is None else norm_mean) + eps
    return r / denom


def alpha_gradient_only(g_signal: np.ndarray, cfg: PlasticityConfig) -> np.ndarray:
    """Ablation coefficient: the clipped gradient signal alone."""
    return clip(g_signal, cfg.alpha_min, cfg.alpha_max)


def alpha_full(
    a_signal: np.ndarray,
    g_signal: np.ndarray,
    m_signal: np.ndarray,
    cfg: PlasticityConfig,
) -> np.ndarray:
    """Clipped weighted combination of the three normalized signals."""
    check_same_shape(a_signal, g_signal)
    check_same_shape(g_signal, m_signal)
    combined = cfg.w_activity * a_signal + cfg.w_gradient * g_signal + cfg.w_memory * m_signal
    return clip(combined, cfg.alpha_min, cfg.alpha_max)


def warmup_gate(epoch: int, warmup_epochs: int) -> float:
    """Linear warmup ramp in [0, 1]; 1.0 when warmup is disabled."""
    if warmup_epochs == 0:
        return 1.0
    return min(1.0, (epoch + 1) / warmup_epochs)


def interpolation_weight(cfg: PlasticityConfig, epoch: int) -> float:
    """Weight of the full rule vs the gradient-only rule for this epoch."""
    if cfg.mode == GRADIENT_ONLY:
        return 0.0
    return cfg.plasticity_scale * warmup_gate(epoch, cfg.warmup_epochs)


def alpha_final(
    alpha_grad: np.ndarray,
    alpha_full_rule: np.ndarray,
    lambda_t: float,
    cfg: PlasticityConfig,
) -> np.ndarray:
    """Interpolate between the gradient-only and full coefficients.

    The result is re-clipped so a plasticity scale above 1 (extrapolation)
    cannot escape the coefficient bounds. Scalar-modulation mode replaces the
    coefficient by its mean, broadcast to the tensor shape.
    """
    check_same_shape(alpha_grad, alpha_full_rule)
    alpha = alpha_grad + lambda_t * (alpha_full_rule - alpha_grad)
    alpha = clip(alpha, cfg.alpha_min, cfg.alpha_max)
    if not cfg.parameterwise:
        alpha = np.full(alpha.shape, np.mean(alpha), dtype=np.float64)
    return alpha


def plasticity_coefficients(
    state: ParamState,
    g: np.ndarray,
    cfg: PlasticityConfig,
    lambda_t: float,
    pooled: PooledMeans | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Compute (alpha, alpha_grad) for one parameter tensor.

    Expects ``update_traces`` to have consumed ``g`` already. When
    ``lambda_t`` is zero the full rule is skipped entirely; the interpolation
    then reduces to the gradient-only coefficient bitwise.
    """
    g_sig = gradient_signal(g, cfg.eps, pooled.grad if pooled else None)
    a_grad = alpha_gradient_only(g_sig, cfg)
    if lambda_t == 0.0:
        alpha = a_grad
        if not cfg.parameterwise:
            alpha = np.full(alpha.shape, np.mean(alpha), dtype=np.float64)
        return alpha, a_grad
    a_sig = activity_signal(state.activity, cfg.eps, pooled.activity if pooled else None)
    m_sig = memory_signal(state.m, state.v, cfg.eps, pooled.memory if pooled else None)
    a_full = alpha_full(a_sig, g_sig, m_sig, cfg)
    return alpha_final(a_grad, a_full, lambda_t, cfg), a_grad
