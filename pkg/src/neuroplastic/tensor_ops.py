"""Dense float64 tensor operations used by the optimizer equations.

Tensors are plain contiguous ``numpy.ndarray`` objects with dtype float64.
These wrappers add the error contracts the optimizer relies on (empty-tensor
and shape checks, explicit clip-bound validation); everything else is numpy.
No broadcasting beyond tensor-vs-scalar is supported or wanted here.
"""

from __future__ import annotations

import numpy as np

from .errors import EmptyTensorError, InvalidBoundsError, ShapeMismatchError

__all__ = [
    "as_tensor",
    "zeros",
    "full",
    "elementwise_abs",
    "mean",
    "clip",
    "l2_norm",
    "rms",
    "add",
    "sub",
    "mul",
    "div",
    "scale",
    "add_scaled",
    "sqrt",
    "all_finite",
    "check_same_shape",
]


def as_tensor(values, shape=None) -> np.ndarray:
    """Build a contiguous float64 tensor, optionally reshaped."""
    t = np.ascontiguousarray(values, dtype=np.float64)
    if shape is not None:
        t = t.reshape(shape)
    return t


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.float64)


def full(shape, value: float) -> np.ndarray:
    return np.full(shape, value, dtype=np.float64)


def check_same_shape(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shape {a.shape} vs {b.shape}")


def _check_nonempty(x: np.ndarray) -> None:
    if x.size == 0:
        raise EmptyTensorError("reduction over empty tensor")


def all_finite(x: np.ndarray) -> bool:
    """True iff every element is finite (no NaN/Inf)."""
    return bool(np.isfinite(x).all())


def elementwise_abs(x: np.ndarray) -> np.ndarray:
    return np.abs(x)


def mean(x: np.ndarray) -> float:
    _check_nonempty(x)
    return float(np.mean(x))


def clip(x: np.ndarray, lo: float, hi: float) -> np.ndarray:
    if lo > hi:
        raise InvalidBoundsError(f"lo={lo} > hi={hi}")
    return np.clip(x, lo, hi)


def l2_norm(x: np.ndarray) -> float:
    _check_nonempty(x)
    return float(np.sqrt(np.sum(x * x)))


def rms(x: np.ndarray, eps: float) -> float:
    """Root-mean-square magnitude, sqrt(mean(x^2) + eps)."""
    _check_nonempty(x)
    return float(np.sqrt(np.mean(x * x) + eps))


def add(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    check_same_shape(a, b)
    return a + b


def sub(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    check_same_shape(a, b)
    return a - b


def mul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    check_same_shape(a, b)
    return a * b


def div(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    check_same_shape(a, b)
    return a / b


def scale(x: np.ndarray, c: float) -> np.ndarray:
    return x * c


def add_scaled(x: np.ndarray, c: float, y: np.ndarray) -> np.ndarray:
    """In-place x += c * y; returns x."""
    check_same_shape(x, y)
    x += c * y
    return x


def sqrt(x: np.ndarray) -> np.ndarray:
    return np.sqrt(x)
