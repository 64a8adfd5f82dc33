"""Representations of (Z/2)^l and rank-l tori: character tables, flags, subgroups.

A representation is a finite table mapping characters (0/1 tuples) or weights
(integer tuples) to positive multiplicities.  Flags are carried as adapted
dual bases T_1..T_l; a character belongs to block i when i is the least index
with the character inside span(T_1..T_i).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import HypothesisError, InputError
from .polyring import F2, Q, Poly

ELEM_ABELIAN_2 = "elem_abelian_2"
TORUS = "torus"


class _RepBase:
    """Shared table mechanics for both group kinds."""

    kind = None

    def __init__(self, rank, multiplicities=None):
        rank = int(rank)
        if rank < 0:
            raise InputError("rank must be nonnegative")
        table = {}
        items = multiplicities.items() if isinstance(multiplicities, dict) else (multiplicities or ())
        for char, m in items:
            char = self._validate_char(char, rank)
            m = int(m)
            if m < 1:
                raise InputError(f"multiplicity for {char} must be positive, got {m}")
            if char in table:
                raise InputError(f"duplicate character {char}")
            table[char] = m
        self.rank = rank
        self._table = table

    @staticmethod
    def _validate_char(char, rank):
        raise NotImplementedError

    @property
    def dim(self):
        return sum(self._table.values())

    @property
    def fixed_dim(self):
        return self._table.get((0,) * self.rank, 0)

    def multiplicities(self):
        return dict(self._table)

    def items(self):
        return list(self._table.items())

    def support(self):
        return list(self._table)

    def nonzero_support(self):
        zero = (0,) * self.rank
        return [c for c in self._table if c != zero]

    def multiplicity(self, char):
        return self._table.get(tuple(char), 0)

    def direct_sum(self, other):
        if type(other) is not type(self) or other.rank != self.rank:
            raise InputError("direct sum requires the same group kind and rank")
        merged = dict(self._table)
        for c, m in other._table.items():
            merged[c] = merged.get(c, 0) + m
        return type(self)(self.rank, merged)

    def __eq__(self, other):
        return (
            type(other) is type(self)
            and other.rank == self.rank
            and other._table == self._table
        )

    def __hash__(self):
        return hash((type(self).__name__, self.rank, frozenset(self._table.items())))

    def __repr__(self):
        return f"{type(self).__name__}({self.rank}, {self._table!r})"


class RepE(_RepBase):
    """Real representation of (Z/2)^rank as a character table."""

    kind = ELEM_ABELIAN_2

    @staticmethod
    def _validate_char(char, rank):
        char = tuple(int(x) for x in char)
        if len(char) != rank:
            raise InputError(f"character {char} does not have length {rank}")
        if any(x not in (0, 1) for x in char):
            raise InputError(f"character {char} must have 0/1 entries")
        return char


class RepT(_RepBase):
    """Complex representation of a rank-l torus; `dim` is the complex dimension."""

    kind = TORUS

    @staticmethod
    def _validate_char(char, rank):
        char = tuple(int(x) for x in char)
        if len(char) != rank:
            raise InputError(f"weight {char} does not have length {rank}")
        return char


class FlagE:
    """Complete flag of (F2^rank)^*, carried as an adapted dual basis."""

    def __init__(self, rank, dual_basis):
        rank = int(rank)
        if rank < 1:
            raise InputError("flags require rank >= 1")
        basis = tuple(RepE._validate_char(v, rank) for v in dual_basis)
        if len(basis) != rank:
            raise InputError(f"need {rank} covectors, got {len(basis)}")
        if linalg.rank2(basis, rank) != rank:
            raise InputError("dual basis covectors are linearly dependent")
        self.rank = rank
        self.dual_basis = basis

    @classmethod
    def standard(cls, rank):
        return cls(rank, [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)])

    @classmethod
    def from_chain(cls, rank, spans):
        """Adapted basis for a chain of subspaces of the dual space.

        `spans[i]` spans step i+1; the new covector at each step is the
        lexicographically least one not in the previous step.
        """
        if len(spans) != rank:
            raise InputError(f"need {rank} chain steps, got {len(spans)}")
        basis = []
        prev = {(0,) * rank}
        for i, vecs in enumerate(spans, start=1):
            vecs = [RepE._validate_char(v, rank) for v in vecs]
            current = linalg.span2(vecs, rank)
            if len(current) != 2 ** i or not prev <= current:
                raise InputError(f"chain step {i} does not extend the previous step by dimension one")
            basis.append(min(current - prev))
            prev = current
        return cls(rank, basis)

    def coordinates(self, char):
        coords = linalg.solve2(self.dual_basis, tuple(char))
        if coords is None:
            raise InputError(f"character {char} is not expressible in the flag basis")
        return coords

    def top_index(self, char):
        """Least i with char inside span(T_1..T_i); requires a nonzero character."""
        coords = self.coordinates(char)
        for i in range(self.rank - 1, -1, -1):
            if coords[i]:
                return i + 1
        raise InputError("the trivial character belongs to no flag block")

    def __eq__(self, other):
        return isinstance(other, FlagE) and other.dual_basis == self.dual_basis

    def __hash__(self):
        return hash(self.dual_basis)

    def __repr__(self):
        return f"FlagE({self.rank}, {list(self.dual_basis)!r})"


class RationalFlag:
    """Complete flag of Q^rank; covectors normalized to primitive integer form."""

    def __init__(self, rank, dual_basis):
        rank = int(rank)
        if rank < 1:
            raise InputError("flags require rank >= 1")
        basis = []
        for v in dual_basis:
            v = tuple(int(x) for x in v)
            if len(v) != rank:
                raise InputError(f"covector {v} does not have length {rank}")
            try:
                basis.append(linalg.primitive(v))
            except ValueError as exc:
                raise InputError(str(exc)) from exc
        if len(basis) != rank:
            raise InputError(f"need {rank} covectors, got {len(basis)}")
        if linalg.rankq(basis, rank) != rank:
            raise InputError("dual basis covectors are linearly dependent")
        self.rank = rank
        self.dual_basis = tuple(basis)

    @classmethod
    def standard(cls, rank):
        return cls(rank, [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)])

    def coordinates(self, weight):
        coords = linalg.solveq(self.dual_basis, tuple(weight))
        if coords is None:
            raise InputError(f"weight {weight} is not expressible in the flag basis")
        return coords

    def top_index(self, weight):
        coords = self.coordinates(weight)
        for i in range(self.rank - 1, -1, -1):
            if coords[i] != 0:
                return i + 1
        raise InputError("the zero weight belongs to no flag block")

    def __eq__(self, other):
        return isinstance(other, RationalFlag) and other.dual_basis == self.dual_basis

    def __hash__(self):
        return hash(self.dual_basis)

    def __repr__(self):
        return f"RationalFlag({self.rank}, {list(self.dual_basis)!r})"


class Subgroup:
    """Subgroup F <= (Z/2)^rank, stored as a canonical RREF basis."""

    def __init__(self, rank, basis=()):
        rank = int(rank)
        if rank < 1:
            raise InputError("subgroups live in groups of rank >= 1")
        rows = [RepE._validate_char(v, rank) for v in basis]
        self.rank = rank
        self.basis = linalg.rref_canonical2(rows, rank)

    @classmethod
    def trivial(cls, rank):
        return cls(rank, ())

    @classmethod
    def full(cls, rank):
        return cls(rank, [tuple(1 if j == i else 0 for j in range(rank)) for i in range(rank)])

    @property
    def dim(self):
        return len(self.basis)

    def contains_vector(self, v):
        return linalg.in_span2(self.basis, tuple(v), self.rank)

    def contains(self, other):
        if not isinstance(other, Subgroup) or other.rank != self.rank:
            raise InputError("subgroup comparison requires matching rank")
        return all(self.contains_vector(r) for r in other.basis)

    def char_vanishes(self, char):
        """Whether the character is identically zero on this subgroup."""
        return all(linalg.dot2(char, f) == 0 for f in self.basis)

    def annihilator_basis(self):
        """Deterministic basis of the characters vanishing on the subgroup."""
        return linalg.nullspace2(self.basis, self.rank)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and other.rank == self.rank and other.basis == self.basis

    def __hash__(self):
        return hash((self.rank, self.basis))

    def __repr__(self):
        return f"Subgroup({self.rank}, {list(self.basis)!r})"


# ---------------------------------------------------------------------------
# Flag decomposition and Euler classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlagDecomposition:
    """Blocks U_1..U_l plus the fixed part, all over the original labels."""

    blocks: tuple
    fixed: object

    @property
    def dims(self):
        return tuple(b.dim for b in self.blocks)

    @property
    def fixed_dim(self):
        return self.fixed.dim


def _check_pairing(rep, flag):
    if isinstance(rep, RepE) and not isinstance(flag, FlagE):
        raise InputError("a representation of (Z/2)^l needs an F2 flag")
    if isinstance(rep, RepT) and not isinstance(flag, RationalFlag):
        raise InputError("a torus representation needs a rational flag")
    if rep.rank != flag.rank:
        raise InputError(f"rank mismatch: representation {rep.rank}, flag {flag.rank}")


def decompose(rep, flag):
    """Partition the table into flag blocks; the trivial label is the fixed part."""
    _check_pairing(rep, flag)
    zero = (0,) * rep.rank
    blocks = [{} for _ in range(rep.rank)]
    fixed = {}
    for char, m in rep.items():
        if char == zero:
            fixed[char] = m
        else:
            blocks[flag.top_index(char) - 1][char] = m
    cls = type(rep)
    return FlagDecomposition(
        blocks=tuple(cls(rep.rank, b) for b in blocks),
        fixed=cls(rep.rank, fixed),
    )


def fixed_subrep(rep, subgroup):
    """Characters vanishing on the subgroup, re-expressed for the quotient group.

    The quotient coordinates come from the deterministic annihilator basis, so
    identical inputs always yield identical tables.
    """
    if not isinstance(rep, RepE):
        raise InputError("fixed_subrep expects a representation of (Z/2)^l")
    if rep.rank != subgroup.rank:
        raise InputError(f"rank mismatch: representation {rep.rank}, subgroup {subgroup.rank}")
    annihilator = subgroup.annihilator_basis()
    new_rank = rep.rank - subgroup.dim
    out = {}
    for char, m in rep.items():
        if subgroup.char_vanishes(char):
            coords = linalg.solve2(annihilator, char)
            out[coords] = out.get(coords, 0) + m
    return RepE(new_rank, out)


def euler_poly(rep, flag):
    """Product of the table's labels, written as linear forms in flag coordinates.

    The empty table gives 1; a trivial label with positive multiplicity makes
    the whole product vanish and is rejected.
    """
    _check_pairing(rep, flag)
    if rep.fixed_dim:
        raise HypothesisError(
            "euler class vanishes identically: "
            f"trivial label has multiplicity {rep.fixed_dim}"
        )
    field = F2 if isinstance(rep, RepE) else Q
    result = Poly.one(field, rep.rank)
    for char, m in rep.items():
        form = Poly.linear_form(field, flag.coordinates(char))
        result = result * form ** m
    return result


def line_blocks(rep):
    """Group a torus table by rational lines (primitive, sign-normalized reps)."""
    if not isinstance(rep, RepT):
        raise InputError("line grouping applies to torus representations")
    zero = (0,) * rep.rank
    lines = {}
    for w, m in rep.items():
        if w == zero:
            continue
        lam = linalg.primitive(w)
        lines.setdefault(lam, {})[w] = m
    return {lam: RepT(rep.rank, tbl) for lam, tbl in sorted(lines.items())}


def complete_flags(rank):
    """Every complete flag of (F2^rank)^*, each with its canonical adapted basis."""
    if rank < 1:
        raise InputError("rank must be >= 1")
    zero = (0,) * rank
    vectors = linalg.all_vectors2(rank)
    flags = []

    def extend(chosen, span):
        if len(chosen) == rank:
            flags.append(FlagE(rank, tuple(chosen)))
            return
        seen = set(span)
        for gamma in vectors:
            if gamma in seen:
                continue
            coset = {linalg.xor(gamma, s) for s in span}
            seen |= coset
            extend(chosen + [gamma], span | coset)

    extend([], {zero})
    return flags


def spanning_flag_from_support(rep):
    """A flag meeting every block of `rep`: greedy lex-least independent labels.

    Works whenever the nonzero labels span the dual space; otherwise the
    spanning hypothesis fails.
    """
    if not isinstance(rep, RepE):
        raise InputError("spanning flags are built from (Z/2)^l tables")
    chosen = []
    for char in sorted(rep.nonzero_support()):
        if not linalg.in_span2(chosen, char, rep.rank):
            chosen.append(char)
    if len(chosen) != rep.rank:
        raise HypothesisError(
            "support characters do not span the dual space "
            f"(span has dimension {len(chosen)} < {rep.rank})"
        )
    return FlagE(rep.rank, chosen)


# ---------------------------------------------------------------------------
# Input documents (JSON)
# ---------------------------------------------------------------------------

_GROUP_KINDS = (ELEM_ABELIAN_2, TORUS)


def _require_keys(doc, allowed, where):
    if not isinstance(doc, dict):
        raise InputError(f"{where} must be a JSON object")
    unknown = set(doc) - set(allowed)
    if unknown:
        raise InputError(f"unknown fields {sorted(unknown)} in {where}")


def group_from_doc(doc):
    _require_keys(doc, {"kind", "rank"}, "group")
    try:
        kind = doc["kind"]
        rank = int(doc["rank"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad group document: {exc}") from exc
    if kind not in _GROUP_KINDS:
        raise InputError(f"group kind must be one of {_GROUP_KINDS}, got {kind!r}")
    if rank < 1:
        raise InputError("group rank must be >= 1")
    return kind, rank


def rep_from_doc(doc, key="module"):
    """Build a representation from `{"group": ..., key: {"entries": [...]}}`."""
    if "group" not in doc:
        raise InputError("document is missing the group field")
    kind, rank = group_from_doc(doc["group"])
    if key not in doc:
        raise InputError(f"document is missing the {key} field")
    sub = doc[key]
    _require_keys(sub, {"entries"}, key)
    entries = sub.get("entries")
    if not isinstance(entries, list):
        raise InputError(f"{key}.entries must be a list")
    cls = RepE if kind == ELEM_ABELIAN_2 else RepT
    pairs = []
    for entry in entries:
        _require_keys(entry, {"char", "mult"}, f"{key} entry")
        if "char" not in entry or "mult" not in entry:
            raise InputError(f"each {key} entry needs char and mult")
        pairs.append((tuple(entry["char"]), entry["mult"]))
    return cls(rank, pairs)


def rep_entries_doc(rep):
    return [{"char": list(c), "mult": m} for c, m in rep.items()]


def rep_to_doc(rep):
    return {
        "group": {"kind": rep.kind, "rank": rep.rank},
        "module": {"entries": rep_entries_doc(rep)},
    }


def flag_from_doc(doc, kind, rank):
    _require_keys(doc, {"dual_basis"}, "flag")
    if "dual_basis" not in doc:
        raise InputError("flag document needs dual_basis")
    basis = doc["dual_basis"]
    if kind == ELEM_ABELIAN_2:
        return FlagE(rank, [tuple(v) for v in basis])
    return RationalFlag(rank, [tuple(v) for v in basis])


def flag_to_doc(flag):
    return {"dual_basis": [list(v) for v in flag.dual_basis]}


def rep_from_json(text, key="module"):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc}") from exc
    return rep_from_doc(doc, key=key)
