"""Desk-scale K-theory bookkeeping around the cyclic group ring.

The one real computation: homology of the two-periodic free resolution
of Z over Z[C_p] tensored into the cyclotomic integers, which is Z/p in
even degrees and zero in odd ones.  The divisibility arithmetic behind
the degree-three injectivity statement and the localization helpers are
elementary; every deep input is quoted from the shipped facts table,
never recomputed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import lattice
from .abelian import FgAbGroup
from .groupring import _is_prime

__all__ = [
    "tor_pi_r",
    "k3_divisibility",
    "localize",
    "LocalizedGroup",
    "load_facts",
]


def load_facts():
    """The versioned table of cited literature inputs."""
    text = resources.files("whcalc").joinpath("facts.json").read_text()
    return json.loads(text)


def _mult_matrix_zeta_minus_one(p):
    """Multiplication by (zeta - 1) on Z[zeta_p] in the power basis."""
    dim = p - 1
    cols = []
    for k in range(dim):
        # (zeta - 1) * zeta^k = zeta^(k+1) - zeta^k
        vec = [0] * dim
        vec[k] -= 1
        if k + 1 < dim:
            vec[k + 1] += 1
        else:
            # zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2))
            for j in range(dim):
                vec[j] -= 1
        cols.append(vec)
    return lattice.from_columns(cols, dim)


def _mult_matrix_norm(p):
    """Multiplication by 1 + zeta + ... + zeta^(p-1), which is zero."""
    dim = p - 1
    cols = []
    for k in range(dim):
        acc = [0] * dim
        for e in range(p):
            exp = (k + e) % p
            if exp < dim:
                acc[exp] += 1
            else:
                for j in range(dim):
                    acc[j] -= 1
        cols.append(acc)
    return lattice.from_columns(cols, dim)


def tor_pi_r(p, i):
    """Homology of the standard periodic resolution against Z[zeta_p].

    Alternating multiplication by (t - 1) and the norm element, tensored
    over Z[C_p] into the cyclotomic integers viewed as Z^(p-1); homology
    via Smith normal form.  Two-periodic: Z/p in even degrees, else 0.
    """
    if not _is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if i < 0:
        raise ValueError("degree must be nonnegative")
    dim = p - 1
    zeta_minus_one = _mult_matrix_zeta_minus_one(p)
    norm = _mult_matrix_norm(p)
    # boundary entering degree i and boundary leaving degree i
    d_in = zeta_minus_one if i % 2 == 0 else norm      # d_{i+1}
    d_out = None if i == 0 else (norm if i % 2 == 0 else zeta_minus_one)
    if d_out is None:
        return FgAbGroup.from_factors(
            lattice.cokernel_factors(lattice.columns_of(d_in), dim))
    cycles = lattice.kernel_with_denominator(d_out, [], dim)
    image = [lattice.mat_vec(d_in, col) for col in lattice.identity(dim)]
    return FgAbGroup.from_factors(
        lattice.quotient_factors(cycles, image, dim))


def _v3(n):
    v = 0
    while n % 3 == 0:
        n //= 3
        v += 1
    return v


def k3_divisibility(p):
    """Divisibility report in degree three: p^2 - 1, its 3-adic valuation,
    and whether the cited injectivity conclusion applies (p != 3)."""
    if not _is_prime(p):
        raise ValueError("p must be prime")
    order = p * p - 1
    return {
        "p": p,
        "k3_fp_order": order,
        "three_divides": order % 3 == 0,
        "valuation_3": _v3(order),
        "k3_z_order": 48,
        "injective_at_3": p != 3,
    }


@dataclass(frozen=True)
class LocalizedGroup:
    """The l-primary part of a finite group, tagged with the prime."""

    base: FgAbGroup
    prime: int
    localized: FgAbGroup


def localize(group, ell):
    """l-primary part of a finite group by invariant factors.

    Free summands are rejected: localization bookkeeping here is for
    torsion only.
    """
    if not _is_prime(ell):
        raise ValueError("the localization prime must be prime")
    if group.free_rank:
        raise ValueError("localization requires a finite group")
    parts = []
    for f in group.invariant_factors:
        q = 1
        while f % ell == 0:
            f //= ell
            q *= ell
        if q > 1:
            parts.append(q)
    return LocalizedGroup(group, ell, FgAbGroup.from_factors(parts))


def away_part(group, ell):
    """Complementary part: everything of order prime to l."""
    if group.free_rank:
        raise ValueError("requires a finite group")
    parts = []
    for f in group.invariant_factors:
        while f % ell == 0:
            f //= ell
        if f > 1:
            parts.append(f)
    return FgAbGroup.from_factors(parts)
