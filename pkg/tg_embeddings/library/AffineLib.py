from typing import Mapping

from .. import errors as err
from ..types import AffineExpr, ParamRange


"""Library for affine index and exponent expressions of relator schemas.

An AffineExpr is c0 + c1*p + c2*q. Ranges give each parameter a finite lower bound and an optional upper bound, so
the minimum and maximum of an expression over a range can be read off the corners of the box.
"""


def constant(value: int) -> AffineExpr:
    return AffineExpr(value)


def param(name: str, coefficient: int = 1) -> AffineExpr:
    return AffineExpr(0, ((name, coefficient),))


def add(a: AffineExpr, b: AffineExpr) -> AffineExpr:
    return AffineExpr(a.constant + b.constant, a.terms + b.terms)


def negate(a: AffineExpr) -> AffineExpr:
    return scale(a, -1)


def subtract(a: AffineExpr, b: AffineExpr) -> AffineExpr:
    return add(a, negate(b))


def scale(a: AffineExpr, factor: int) -> AffineExpr:
    return AffineExpr(a.constant * factor, tuple((name, c * factor) for name, c in a.terms))


def multiply(a: AffineExpr, b: AffineExpr) -> AffineExpr:
    """Product of two expressions, defined only when one side is constant.

    Raises:
        PresentationError: If both sides depend on parameters
    """
    if a.is_constant():
        return scale(b, a.constant)
    if b.is_constant():
        return scale(a, b.constant)
    raise err.PresentationError(err.PARAMETRIC_POWER_NONLINEAR)


def evaluate(a: AffineExpr, env: Mapping[str, int]) -> int:
    value = a.constant
    for name, coefficient in a.terms:
        if name not in env:
            raise err.PresentationError(f"{err.AFFINE_UNBOUND_PARAM}: {name}")
        value += coefficient * env[name]
    return value


def substitute_constants(a: AffineExpr, constants: Mapping[str, int]) -> AffineExpr:
    value = a.constant
    terms = []
    for name, coefficient in a.terms:
        if name in constants:
            value += coefficient * constants[name]
        else:
            terms.append((name, coefficient))
    return AffineExpr(value, tuple(terms))


def bounds(a: AffineExpr, param_range: ParamRange) -> tuple[int | None, int | None]:
    """Minimum and maximum of the expression over the range, None standing for an infinite side.

    Args:
        a: The expression
        param_range: The range of every parameter used by the expression
    """
    low: int | None = a.constant
    high: int | None = a.constant
    for name, coefficient in a.terms:
        bound = param_range.bound_of(name)
        at_lower = coefficient * bound.lower
        at_upper = None if bound.upper is None else coefficient * bound.upper
        if coefficient > 0:
            low = None if low is None else low + at_lower
            high = None if high is None or at_upper is None else high + at_upper
        else:
            low = None if low is None or at_upper is None else low + at_upper
            high = None if high is None else high + at_lower
    return low, high


def sign_on(a: AffineExpr, param_range: ParamRange) -> int | None:
    """Returns +1 or -1 when the expression is nonzero with that sign on the whole range, None otherwise."""
    low, high = bounds(a, param_range)
    if low is not None and low > 0:
        return 1
    if high is not None and high < 0:
        return -1
    return None


def is_zero(a: AffineExpr) -> bool:
    return a.is_constant() and a.constant == 0


def format_affine(a: AffineExpr) -> str:
    """Canonical text: parameter terms first, in name order, then the constant, e.g. `2s-1`, `k-l`, `-s`, `3`."""
    parts: list[str] = []
    for name, coefficient in a.terms:
        magnitude = "" if abs(coefficient) == 1 else str(abs(coefficient))
        sign = "-" if coefficient < 0 else ("+" if parts else "")
        parts.append(f"{sign}{magnitude}{name}")
    if a.constant or not parts:
        sign = "-" if a.constant < 0 else ("+" if parts else "")
        parts.append(f"{sign}{abs(a.constant)}")
    return "".join(parts)
