"""Flag construction: greedy gap-maximizing searches and the maximal-subgroup scan.

The searches certify, step by step, that each new flag block carries a strictly
larger share of U than of V.  The subgroup scan is exhaustive over all
subspaces of (F2)^l, which stays desk-scale only for l <= 6.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import HypothesisError, InputError, ResourceLimitError
from .reps import FlagE, RationalFlag, RepE, RepT, Subgroup, fixed_subrep, line_blocks

MAX_SUBGROUP_RANK = 6


def gap_table(U, V):
    """d^alpha = dim U^alpha - dim V^alpha on the union of the supports."""
    if type(U) is not type(V) or U.rank != V.rank:
        raise InputError("gap tables need two tables of the same kind and rank")
    gaps = {}
    for c, m in U.items():
        gaps[c] = gaps.get(c, 0) + m
    for c, m in V.items():
        gaps[c] = gaps.get(c, 0) - m
    return gaps


def _check_pair_e(U, V):
    if not isinstance(U, RepE) or not isinstance(V, RepE):
        raise InputError("expected representations of (Z/2)^l")
    if U.rank != V.rank:
        raise InputError(f"rank mismatch: {U.rank} vs {V.rank}")


def find_flag(U, V):
    """Greedy flag with dim U_i > dim V_i for every i, or a hypothesis failure.

    At step i every subspace extension of the current chain is scored by the
    summed gap over its new characters; the maximizer wins, ties going to the
    lexicographically least new covector, which also becomes T_i.
    """
    _check_pair_e(U, V)
    if V.fixed_dim:
        raise HypothesisError(f"V^E = 0 is required (dim V^E = {V.fixed_dim})")
    total_gap = U.dim - V.dim
    if total_gap <= U.fixed_dim:
        raise HypothesisError(
            f"dim U - dim V must exceed dim U^E ({U.dim} - {V.dim} = {total_gap} "
            f"vs dim U^E = {U.fixed_dim})"
        )
    rank = U.rank
    gaps = gap_table(U, V)
    vectors = linalg.all_vectors2(rank)
    zero = (0,) * rank
    span = {zero}
    chosen = []
    for step in range(1, rank + 1):
        best = None
        seen = set(span)
        for gamma in vectors:
            if gamma in seen:
                continue
            # gamma is lex-least in its coset because vectors ascend
            coset = {linalg.xor(gamma, s) for s in span}
            seen |= coset
            score = sum(gaps.get(a, 0) for a in coset)
            if best is None or score > best[0] or (score == best[0] and gamma < best[1]):
                best = (score, gamma, coset)
        if best is None or best[0] <= 0:
            raise HypothesisError(f"no flag extension with positive dimension gap at step {step}")
        chosen.append(best[1])
        span |= best[2]
    return FlagE(rank, chosen)


def _fixed_dim_under(rep, basis):
    return sum(m for c, m in rep.items() if all(linalg.dot2(c, f) == 0 for f in basis))


def best_fixed_subgroup(U, V):
    """Maximal subgroup F with dim U^F - dim V^F >= dim U - dim V.

    Exhaustive over all subspaces; among incomparable maximal elements the one
    with the lexicographically least canonical basis wins.
    """
    _check_pair_e(U, V)
    if V.fixed_dim:
        raise HypothesisError(f"V^E = 0 is required (dim V^E = {V.fixed_dim})")
    rank = U.rank
    if rank > MAX_SUBGROUP_RANK:
        raise ResourceLimitError(
            f"subgroup enumeration is limited to rank <= {MAX_SUBGROUP_RANK}, got {rank}"
        )
    target = U.dim - V.dim
    qualifying = [
        basis
        for basis in linalg.enumerate_subspace_bases2(rank)
        if _fixed_dim_under(U, basis) - _fixed_dim_under(V, basis) >= target
    ]
    spans = [linalg.span2(b, rank) for b in qualifying]
    maximal = [
        qualifying[i]
        for i in range(len(qualifying))
        if not any(j != i and spans[i] < spans[j] for j in range(len(qualifying)))
    ]
    return Subgroup(rank, min(maximal))


@dataclass(frozen=True)
class ReducedFlagSearch:
    """Outcome of the subgroup-then-flag pipeline."""

    subgroup: Subgroup
    quotient_module: RepE
    quotient_target: RepE
    flag: FlagE


def reduced_flag_search(U, V):
    """Compose best_fixed_subgroup, fixed_subrep, and find_flag.

    Under dim U - dim V > dim U^E and V^E = 0 this never fails: after passing
    to the quotient group the trivial subgroup is maximal for the reduced
    pair, which guarantees a positive extension at every greedy step.
    """
    _check_pair_e(U, V)
    if V.fixed_dim:
        raise HypothesisError(f"V^E = 0 is required (dim V^E = {V.fixed_dim})")
    gap = U.dim - V.dim
    if gap <= U.fixed_dim:
        raise HypothesisError(
            f"dim U - dim V must exceed dim U^E ({U.dim} - {V.dim} = {gap} "
            f"vs dim U^E = {U.fixed_dim})"
        )
    F = best_fixed_subgroup(U, V)
    U1 = fixed_subrep(U, F)
    V1 = fixed_subrep(V, F)
    flag = find_flag(U1, V1)
    return ReducedFlagSearch(subgroup=F, quotient_module=U1, quotient_target=V1, flag=flag)


def find_rational_flag(U, V):
    """Greedy rational flag with dim U_i > dim V_i at every step.

    Candidate covectors are the primitive representatives of the lines in U's
    support plus the standard basis for completion; only the position of each
    chain step relative to the occurring lines affects the block dimensions,
    so this finite candidate set realizes every achievable pattern.
    """
    if not isinstance(U, RepT) or not isinstance(V, RepT):
        raise InputError("expected torus representations")
    if U.rank != V.rank:
        raise InputError(f"rank mismatch: {U.rank} vs {V.rank}")
    if U.fixed_dim:
        raise HypothesisError(f"U^T = 0 is required (dim U^T = {U.fixed_dim})")
    if V.fixed_dim:
        raise HypothesisError(f"V^T = 0 is required (dim V^T = {V.fixed_dim})")
    rank = U.rank
    u_lines = line_blocks(U)
    v_lines = line_blocks(V)
    line_gaps = {}
    for lam, block in u_lines.items():
        line_gaps[lam] = line_gaps.get(lam, 0) + block.dim
    for lam, block in v_lines.items():
        line_gaps[lam] = line_gaps.get(lam, 0) - block.dim
    standard = [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)]
    candidates = sorted(set(u_lines) | set(standard))
    all_lines = sorted(line_gaps)
    chosen = []
    assigned = set()
    for step in range(1, rank + 1):
        best = None
        for w in candidates:
            if linalg.in_spanq(chosen, w, rank):
                continue
            trial = chosen + [w]
            newly = [
                lam
                for lam in all_lines
                if lam not in assigned and linalg.in_spanq(trial, lam, rank)
            ]
            score = sum(line_gaps[lam] for lam in newly)
            if best is None or score > best[0] or (score == best[0] and w < best[1]):
                best = (score, w, newly)
        if best is None or best[0] <= 0:
            raise HypothesisError(f"no admissible flag extension at step {step}")
        chosen.append(best[1])
        assigned |= set(best[2])
    return RationalFlag(rank, chosen)
