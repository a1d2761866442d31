"""Named 6x6 Hadamard matrices and the two-parameter block-reducible family.

The registry holds the fixture matrices the library's structural claims
are about (M1, M2 in both cube-root variants, D0) plus two controls from
the wider catalog (the Fourier matrix F6 and Tao's spectral matrix S6).
Every entry is validated as a CHM at import time.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, as_matrix, is_chm
from .errors import DomainError, UnknownNameError

OMEGA_1 = cmath.exp(2j * cmath.pi / 3)  # primitive cube root of unity
OMEGA_2 = cmath.exp(4j * cmath.pi / 3)  # its conjugate

_DOMAIN_LO = -math.pi / 2 + 1e-12
_DOMAIN_HI = math.pi / 2 + 1e-12  # closed end, with fp slack


@dataclass(frozen=True)
class FamilyPoint:
    """Parameter point (x1, x2), each in the half-open interval (-pi/2, pi/2]."""

    x1: float
    x2: float

    def __post_init__(self):
        for name, x in (("x1", self.x1), ("x2", self.x2)):
            if not _DOMAIN_LO < x <= _DOMAIN_HI:
                raise DomainError(f"{name}={x!r} outside (-pi/2, pi/2]")


@dataclass(frozen=True)
class RegistryEntry:
    name: str
    matrix: np.ndarray
    provenance: str  # "primary": a fixture of the built-in claims; "external": catalog control


def f_factor(x1: float, x2: float) -> complex:
    """Unimodular building block of the family, trigonometric form.

    e^{i(x1+x2)/2} (cos((x1-x2)/2) - i sin((x1+x2)/2)) (1/2 + i sqrt(1/(1+sin x1 sin x2) - 1/4))

    Singular where 1 + sin(x1) sin(x2) vanishes (opposite right-angle
    arguments); raises DomainError there.
    """
    den = 1.0 + math.sin(x1) * math.sin(x2)
    if den <= 1e-12:
        raise DomainError(f"1 + sin(x1) sin(x2) vanishes at ({x1!r}, {x2!r})")
    rad = 1.0 / den - 0.25
    if rad < -1e-12:
        raise DomainError(f"negative radicand {rad!r} at ({x1!r}, {x2!r})")
    root = math.sqrt(max(rad, 0.0))
    first = cmath.exp(0.5j * (x1 + x2)) * complex(
        math.cos(0.5 * (x1 - x2)), -math.sin(0.5 * (x1 + x2))
    )
    return first * complex(0.5, root)


def f_factor_alt(x1: float, x2: float) -> complex:
    """Same value as f_factor, computed along the algebraic route in
    z1 = e^{i x1}, z2 = e^{i x2}:

    (1 - (1-z1)(1-z2)/2) (1/2 + i sqrt(1/(1 - (z1-z1*)(z2-z2*)/4) - 1/4))
    """
    z1 = cmath.exp(1j * x1)
    z2 = cmath.exp(1j * x2)
    den = 1.0 - (z1 - z1.conjugate()) * (z2 - z2.conjugate()) / 4.0
    if abs(den) <= 1e-12:
        raise DomainError(f"vanishing denominator at ({x1!r}, {x2!r})")
    rad = 1.0 / den - 0.25
    if rad.real < -1e-12:
        raise DomainError(f"negative radicand {rad!r} at ({x1!r}, {x2!r})")
    first = 1.0 - 0.5 * (1.0 - z1) * (1.0 - z2)
    return first * (0.5 + 1j * cmath.sqrt(rad))


def _f_or_corner_limit(a: float, b: float) -> complex:
    # Within the family the closed form degenerates (0 * inf) only when the
    # sign-flipped arguments of f2/f4 land on sin(a) sin(b) = -1, i.e. at the
    # admitted corner x1 = x2 = pi/2. Along the x1 = x2 diagonal the limit of
    # the degenerate factors is i, and the limit matrix is still a CHM, so the
    # corner is filled in by that value.
    try:
        return f_factor(a, b)
    except DomainError:
        return 1j


def family_h(point: FamilyPoint) -> np.ndarray:
    """The 6x6 CHM of the two-parameter family at the given point.

    Row/column pairs (1,2), (3,4), (5,6) split it into nine 2x2 blocks
    that are all sub-CHMs, for every admissible parameter point.
    """
    x1, x2 = point.x1, point.x2
    z1 = cmath.exp(1j * x1)
    z2 = cmath.exp(1j * x2)
    f1 = _f_or_corner_limit(x1, x2)
    f2 = _f_or_corner_limit(x1, -x2)
    f3 = _f_or_corner_limit(-x1, -x2)
    f4 = _f_or_corner_limit(-x1, x2)
    f1c, f2c, f3c, f4c = (f.conjugate() for f in (f1, f2, f3, f4))
    rows = [
        [1, 1, 1, 1, 1, 1],
        [1, -1, z1, -z1, z1, -z1],
        [1, z2, -f1, -z2 * f2, -f3c, -z2 * f4c],
        [1, -z2, -z1 * f2c, z1 * z2 * f1c, -z1 * f4, z1 * z2 * f3],
        [1, z2, -f3c, -z2 * f4c, -f1, -z2 * f2],
        [1, -z2, -z1 * f4, z1 * z2 * f3, -z1 * f2c, z1 * z2 * f1c],
    ]
    return np.array(rows, dtype=np.complex128)


def _m1() -> np.ndarray:
    i = 1j
    return as_matrix(
        [
            [i, 1, 1, 1, 1, 1],
            [1, i, 1, 1, -1, -1],
            [1, 1, i, -1, 1, -1],
            [1, 1, -1, i, -1, 1],
            [1, -1, 1, -1, i, 1],
            [1, -1, -1, 1, 1, i],
        ]
    )


def _m2(w: complex) -> np.ndarray:
    return as_matrix(
        [
            [w, w, 1, 1, 1, 1],
            [w, -w, -1, 1, -1, 1],
            [1, 1, w, w, 1, 1],
            [1, -1, -w, w, -1, 1],
            [1, 1, 1, 1, w, w],
            [-1, 1, 1, -1, w, -w],
        ]
    )


def _d0() -> np.ndarray:
    i = 1j
    return as_matrix(
        [
            [1, 1, 1, 1, 1, 1],
            [1, -1, i, -i, -i, i],
            [1, i, -1, i, -i, -i],
            [1, -i, i, -1, i, -i],
            [1, -i, -i, i, -1, i],
            [1, i, -i, -i, i, -1],
        ]
    )


def _f6() -> np.ndarray:
    jk = np.outer(np.arange(6), np.arange(6))
    return np.exp(2j * np.pi * jk / 6)


def _s6() -> np.ndarray:
    w = OMEGA_1
    w2 = OMEGA_2
    return as_matrix(
        [
            [1, 1, 1, 1, 1, 1],
            [1, 1, w, w, w2, w2],
            [1, w, 1, w2, w2, w],
            [1, w, w2, 1, w, w2],
            [1, w2, w2, w, 1, w],
            [1, w2, w, w2, w, 1],
        ]
    )


def _build_registry() -> dict[str, RegistryEntry]:
    specs = [
        ("M1", _m1(), "primary"),
        ("M2_w1", _m2(OMEGA_1), "primary"),
        ("M2_w2", _m2(OMEGA_2), "primary"),
        ("D0", _d0(), "primary"),
        ("F6", _f6(), "external"),
        ("S6", _s6(), "external"),
    ]
    registry = {}
    for name, matrix, provenance in specs:
        check = is_chm(matrix, DEFAULT_TOL)
        if not check.ok:
            raise AssertionError(f"registry matrix {name} fails the CHM check: {check}")
        matrix.setflags(write=False)
        registry[name] = RegistryEntry(name=name, matrix=matrix, provenance=provenance)
    return registry


_REGISTRY = _build_registry()


def named(name: str) -> RegistryEntry:
    """Look up a registry matrix by name."""
    try:
        return _REGISTRY[name]
    except KeyError:
        known = ", ".join(_REGISTRY)
        raise UnknownNameError(f"unknown matrix {name!r} (known: {known})") from None


def registry_names() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def registry_entries() -> tuple[RegistryEntry, ...]:
    return tuple(_REGISTRY.values())
