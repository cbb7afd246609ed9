"""Exact rational handling of the density parameter gamma.

All degree thresholds are evaluated in integer arithmetic on the numerator
and denominator of gamma, so boundary cases (for example gamma=0.75 with a
vertex of induced degree exactly ceil(0.75*(s-1))) never depend on float
rounding.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "parse_gamma",
    "qc_threshold",
    "relaxation_k",
    "reduction_threshold",
    "core_size_bound",
]


def parse_gamma(value: float | str | Fraction | int) -> Fraction:
    """Convert a user-supplied gamma into an exact Fraction in (0, 1].

    Strings may be decimal ("0.75") or ratio ("3/4") notation.  Floats are
    interpreted via their shortest decimal repr, so 0.75 becomes 3/4 rather
    than its binary expansion.
    """
    if isinstance(value, Fraction):
        gamma = value
    elif isinstance(value, int):
        gamma = Fraction(value)
    elif isinstance(value, float):
        gamma = Fraction(str(value))
    elif isinstance(value, str):
        try:
            gamma = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse gamma from {value!r}") from exc
    else:
        raise TypeError(f"unsupported gamma type: {type(value).__name__}")
    if not 0 < gamma <= 1:
        raise ValueError(f"gamma must be in (0, 1], got {gamma}")
    return gamma


def qc_threshold(size: int, gamma: Fraction) -> int:
    """Minimum induced degree, ceil(gamma*(size-1)), for a quasi-clique of this size."""
    if size < 1:
        raise ValueError("size must be >= 1")
    num, den = gamma.numerator, gamma.denominator
    return -(-num * (size - 1) // den)


def relaxation_k(size: int, gamma: Fraction) -> int:
    """Plex parameter floor((1-gamma)*(size-1)) + 1 for target size ``size``.

    Every gamma-quasi-clique of this size is a k-plex for the returned k.
    """
    if size < 1:
        raise ValueError("size must be >= 1")
    num, den = gamma.numerator, gamma.denominator
    return (den - num) * (size - 1) // den + 1


def reduction_threshold(lb: int, gamma: Fraction) -> int:
    """Degree floor((lb-1)*gamma) below which vertices cannot join a quasi-clique of size >= lb."""
    if lb < 1:
        raise ValueError("lb must be >= 1")
    num, den = gamma.numerator, gamma.denominator
    return (lb - 1) * num // den


def core_size_bound(max_core: int, gamma: Fraction) -> int:
    """Size bound 1 + ceil(max_core/gamma) implied by the degeneracy of the graph."""
    if max_core < 0:
        raise ValueError("max_core must be >= 0")
    num, den = gamma.numerator, gamma.denominator
    return 1 + -(-max_core * den // num)
