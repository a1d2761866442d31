"""Shared helpers for the test suite."""

import numpy as np

from chm import EquivalenceWitness, FamilyPoint

NATURAL_PAIRING = ((1, 2), (3, 4), (5, 6))


def rng(seed=20250809):
    return np.random.default_rng(seed)


def random_unimodular(gen, d=6):
    """Random matrix with unimodular entries (not generally a CHM)."""
    return np.exp(2j * np.pi * gen.uniform(size=(d, d)))


def random_phases(gen, d=6):
    return np.exp(2j * np.pi * gen.uniform(size=d))


def random_witness(gen, d=6, signs_only=False):
    """Random equivalence witness: permutations plus unimodular phases."""
    if signs_only:
        row_phases = gen.choice([-1.0, 1.0], size=d).astype(complex)
        col_phases = gen.choice([-1.0, 1.0], size=d).astype(complex)
    else:
        row_phases = random_phases(gen, d)
        col_phases = random_phases(gen, d)
    return EquivalenceWitness(
        row_perm=tuple(int(i) + 1 for i in gen.permutation(d)),
        col_perm=tuple(int(i) + 1 for i in gen.permutation(d)),
        row_phases=row_phases,
        col_phases=col_phases,
    )


def random_point(gen):
    """Uniform interior point of the family's parameter square."""
    x1, x2 = gen.uniform(-np.pi / 2 + 1e-9, np.pi / 2, size=2)
    return FamilyPoint(float(x1), float(x2))


def identity_witness(d=6):
    ones = np.ones(d, dtype=complex)
    return EquivalenceWitness(
        row_perm=tuple(range(1, d + 1)),
        col_perm=tuple(range(1, d + 1)),
        row_phases=ones,
        col_phases=ones.copy(),
    )
