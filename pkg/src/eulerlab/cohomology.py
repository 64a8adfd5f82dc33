"""Quotient-ring presentations, Euler-class nonvanishing, and flag-ring checks.

A presentation is the triangular system of block Euler classes attached to a
representation and a flag; deciding whether a class survives in the quotient
is a normal-form computation with the nonzero remainder as certificate.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from math import factorial

from . import polyring
from .errors import HypothesisError, InputError
from .polyring import F2, Poly, TriangularSystem, format_poly
from .reps import FlagE, RepE, RepT, decompose, euler_poly


@dataclass
class Presentation:
    """Quotient ring S*(E*)/(g_1..g_l) presented by a triangular system."""

    system: TriangularSystem
    provenance: str = ""
    _degree_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def field(self):
        return self.system.field

    @property
    def nvars(self):
        return self.system.nvars

    @property
    def lead_degrees(self):
        return self.system.lead_degrees

    @property
    def quotient_dimension(self):
        return self.system.quotient_dimension

    @property
    def top_degree(self):
        return sum(d - 1 for d in self.system.lead_degrees)

    def quotient_basis(self):
        return polyring.quotient_basis(self.system)

    def basis_in_degree(self, k):
        if k not in self._degree_cache:
            self._degree_cache[k] = [m for m in self.quotient_basis() if sum(m) == k]
        return self._degree_cache[k]

    def hilbert_coefficients(self):
        """Coefficients of prod_j (1 + q + ... + q^{d_j - 1})."""
        coeffs = [1]
        for d in self.system.lead_degrees:
            new = [0] * (len(coeffs) + d - 1)
            for i, c in enumerate(coeffs):
                for e in range(d):
                    new[i + e] += c
            coeffs = new
        return coeffs

    def reduce(self, p):
        return QuotientClass(self, polyring.reduce(p, self.system))

    def relation_texts(self):
        return [format_poly(g) for g in self.system.gens]


@dataclass(frozen=True)
class QuotientClass:
    """A residue class carried by its unique normal form."""

    presentation: Presentation
    poly: Poly

    def is_zero(self):
        return self.poly.is_zero()

    def text(self):
        return format_poly(self.poly)


def presentation(U, flag, provenance=None):
    """Triangular presentation with relations g_j = e(U_j) in flag coordinates.

    Every block must be nonzero; a nonzero fixed part does not obstruct the
    construction and is ignored with a warning.
    """
    decomp = decompose(U, flag)
    if decomp.fixed_dim:
        warnings.warn(
            f"fixed part of dimension {decomp.fixed_dim} is ignored by the presentation",
            stacklevel=2,
        )
    for i, block in enumerate(decomp.blocks, start=1):
        if block.dim == 0:
            raise HypothesisError(f"flag block {i} is empty (dim U_{i} = 0)")
    gens = [euler_poly(block, flag) for block in decomp.blocks]
    note = provenance or f"euler classes of {U.rank} flag blocks"
    return Presentation(system=TriangularSystem(gens), provenance=note)


def euler_nonvanishing(U, V, flag):
    """Whether e(V) survives in the quotient presented by U and the flag.

    Returns (nonzero, certificate); the certificate's normal form is the
    nonzero residue on success and zero otherwise.
    """
    if V.fixed_dim:
        raise HypothesisError(f"V must have zero fixed part (dim = {V.fixed_dim})")
    pres = presentation(U, flag)
    cls = pres.reduce(euler_poly(V, flag))
    return (not cls.is_zero(), cls)


# ---------------------------------------------------------------------------
# Flag manifolds of subspace chains in R^n
# ---------------------------------------------------------------------------

def _homogeneous_sum(nvars, degree, indices):
    """Complete homogeneous sum of the given degree in the chosen variables (F2)."""
    terms = {}

    def rec(pos, remaining, acc):
        if pos == len(indices) - 1:
            acc[indices[pos]] = remaining
            terms[tuple(acc)] = 1
            acc[indices[pos]] = 0
            return
        for e in range(remaining + 1):
            acc[indices[pos]] = e
            rec(pos + 1, remaining - e, acc)
        acc[indices[pos]] = 0

    if degree == 0:
        return Poly.one(F2, nvars)
    rec(0, degree, [0] * nvars)
    return Poly(F2, nvars, terms)


def flag_ring(n, l, bounds=None):
    """Mod-2 cohomology presentation of the manifold of l-step flags in R^n.

    The i-th relation is the complete homogeneous sum of degree n - i + 1 in
    t_1..t_i; with nested dimension bounds n_1 <= ... <= n_l the degree
    becomes n_i - i + 1.
    """
    n = int(n)
    l = int(l)
    if l < 1:
        raise InputError("need at least one flag step")
    if l > n:
        raise InputError(f"flag length l = {l} must not exceed n = {n}")
    if bounds is not None:
        bounds = [int(b) for b in bounds]
        if len(bounds) != l:
            raise InputError(f"need {l} bounds, got {len(bounds)}")
        for i, b in enumerate(bounds, start=1):
            if not i <= b <= n:
                raise InputError(f"bound n_{i} = {b} violates {i} <= n_{i} <= {n}")
        if any(bounds[i] > bounds[i + 1] for i in range(l - 1)):
            raise InputError("bounds must be nondecreasing")
    gens = []
    for i in range(1, l + 1):
        top = (bounds[i - 1] if bounds is not None else n) - i + 1
        gens.append(_homogeneous_sum(l, top, list(range(i))))
    note = f"flag ring n={n} l={l}" + (f" bounds={bounds}" if bounds is not None else "")
    return Presentation(system=TriangularSystem(gens), provenance=note)


@dataclass
class VerificationReport:
    """Line-oriented pass/fail items plus a machine-readable mirror."""

    items: list

    @property
    def passed(self):
        return all(ok for _, ok in self.items)

    def to_text(self):
        return "\n".join(f"{name}: {'pass' if ok else 'fail'}" for name, ok in self.items)

    def to_doc(self):
        return {
            "items": [{"name": name, "status": "pass" if ok else "fail"} for name, ok in self.items],
            "passed": self.passed,
        }


def _random_bounded_table(rng, n, l):
    """Random table with zero fixed part and block dims q_i <= n - i (standard flag)."""
    table = {}
    for i in range(1, l + 1):
        coset = _coset_vectors(l, i)
        q_i = rng.randint(0, n - i)
        for _ in range(q_i):
            c = rng.choice(coset)
            table[c] = table.get(c, 0) + 1
    return RepE(l, table)


def _coset_vectors(l, i):
    """Characters whose top coordinate index is exactly i (standard flag blocks)."""
    out = []
    for bits in range(2 ** (i - 1)):
        v = [0] * l
        for j in range(i - 1):
            v[j] = (bits >> j) & 1
        v[i - 1] = 1
        out.append(tuple(v))
    return out


def verify_flag_ring(n, l, samples=25, seed=0):
    """Check the structural identities of the flag-ring presentation.

    Items: (a) each symmetrized relation in all l variables equals the stated
    combination of the presentation's relations; (b) the product of the
    t_i^(n-i) survives in the quotient; (c) the quotient dimension is
    n!/(n-l)!; (d) for random tables with block dims <= n - i the Euler class
    survives (skipped when samples = 0).
    """
    pres = flag_ring(n, l)
    items = []

    ok = True
    for i in range(1, l + 1):
        ebar = _homogeneous_sum(l, n - i + 1, list(range(l)))
        combo = pres.system.gens[i - 1]
        for j in range(i + 1, l + 1):
            a_ij = _homogeneous_sum(l, j - i, list(range(j - 1, l)))
            combo = combo + a_ij * pres.system.gens[j - 1]
        if ebar != combo:
            ok = False
    items.append(("symmetrized-relations-identity", ok))

    top = Poly.one(F2, l)
    for i in range(1, l + 1):
        top = top * Poly.variable(F2, l, i) ** (n - i)
    _, residue = polyring.is_zero_in_quotient(top, pres.system)
    items.append(("top-class-nonzero", residue is not None))

    items.append(("quotient-dimension", pres.quotient_dimension == factorial(n) // factorial(n - l)))

    if samples:
        rng = random.Random(seed)
        flag = FlagE.standard(l)
        ok = True
        for _ in range(samples):
            Qtable = _random_bounded_table(rng, n, l)
            if Qtable.dim == 0:
                continue
            cls = pres.reduce(euler_poly(Qtable, flag))
            if cls.is_zero():
                ok = False
                break
        items.append((f"random-tables-euler-nonzero ({samples} samples)", ok))

    return VerificationReport(items=items)
