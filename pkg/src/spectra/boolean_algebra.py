"""Finite Boolean algebras as validated operation tables.

The carrier is an ordered label tuple; join/meet are index tables, complement
an index vector.  validate_boolean_algebra checks every axiom by exhaustive
scan and reports a witness on the first failure.  Filters, ultrafilters, and
the spectrum of basic opens O(b) = {ultrafilters not containing b} live here
as well; at finite scale the spectrum always comes out discrete with one
point per atom, but it is computed honestly from the basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .errors import (
    AlgebraAxiomError,
    CapExceeded,
    NotAFilter,
    ValidationError,
)
from .topology import FiniteSpace, generate_topology


def _check_table_shape(name: str, table, n: int):
    if len(table) != n or any(len(row) != n for row in table):
        raise ValidationError(f"{name} table is not {n}x{n}")
    for row in table:
        for v in row:
            if not isinstance(v, int) or not 0 <= v < n:
                raise ValidationError(f"{name} table entry {v!r} out of range")


@dataclass(frozen=True)
class BooleanAlgebra:
    carrier: tuple[str, ...]
    join: tuple[tuple[int, ...], ...]
    meet: tuple[tuple[int, ...], ...]
    comp: tuple[int, ...]
    bottom: int
    top: int

    def __post_init__(self):
        n = len(self.carrier)
        if n == 0:
            raise ValidationError("empty carrier")
        if len(set(self.carrier)) != n:
            raise ValidationError("duplicate carrier labels")
        _check_table_shape("join", self.join, n)
        _check_table_shape("meet", self.meet, n)
        if len(self.comp) != n or any(not 0 <= v < n for v in self.comp):
            raise ValidationError("comp vector malformed")
        if not 0 <= self.bottom < n or not 0 <= self.top < n:
            raise ValidationError("bottom/top out of range")

    @property
    def n(self) -> int:
        return len(self.carrier)

    def leq(self, i: int, j: int) -> bool:
        return self.meet[i][j] == i


def validate_boolean_algebra(alg: BooleanAlgebra) -> None:
    """Exhaustively check every axiom; raise AlgebraAxiomError with a witness."""
    n = alg.n
    join, meet, comp = alg.join, alg.meet, alg.comp
    lab = alg.carrier
    rng = range(n)
    for x in rng:
        for y in rng:
            if join[x][y] != join[y][x]:
                raise AlgebraAxiomError("join commutativity", (lab[x], lab[y]))
            if meet[x][y] != meet[y][x]:
                raise AlgebraAxiomError("meet commutativity", (lab[x], lab[y]))
            if join[x][meet[x][y]] != x:
                raise AlgebraAxiomError("absorption join(x, meet(x,y)) = x", (lab[x], lab[y]))
            if meet[x][join[x][y]] != x:
                raise AlgebraAxiomError("absorption meet(x, join(x,y)) = x", (lab[x], lab[y]))
    for x in rng:
        jx, mx = join[x], meet[x]
        for y in rng:
            jxy, mxy = join[x][y], meet[x][y]
            for z in rng:
                if join[jxy][z] != jx[join[y][z]]:
                    raise AlgebraAxiomError("join associativity", (lab[x], lab[y], lab[z]))
                if meet[mxy][z] != mx[meet[y][z]]:
                    raise AlgebraAxiomError("meet associativity", (lab[x], lab[y], lab[z]))
                if meet[x][join[y][z]] != join[mx[y]][mx[z]]:
                    raise AlgebraAxiomError("meet over join distributivity", (lab[x], lab[y], lab[z]))
                if join[x][meet[y][z]] != meet[jx[y]][jx[z]]:
                    raise AlgebraAxiomError("join over meet distributivity", (lab[x], lab[y], lab[z]))
    for x in rng:
        if join[x][comp[x]] != alg.top:
            raise AlgebraAxiomError("join with complement is top", (lab[x],))
        if meet[x][comp[x]] != alg.bottom:
            raise AlgebraAxiomError("meet with complement is bottom", (lab[x],))
        if join[x][alg.bottom] != x:
            raise AlgebraAxiomError("bottom is join identity", (lab[x],))
        if meet[x][alg.top] != x:
            raise AlgebraAxiomError("top is meet identity", (lab[x],))
    # the two induced orders must agree
    for x in rng:
        for y in rng:
            if (meet[x][y] == x) != (join[x][y] == y):
                raise AlgebraAxiomError("order consistency", (lab[x], lab[y]))


def boolean_algebra(carrier, join, meet, comp, bottom, top) -> BooleanAlgebra:
    """Build from tables and validate every axiom."""
    alg = BooleanAlgebra(
        tuple(carrier),
        tuple(tuple(row) for row in join),
        tuple(tuple(row) for row in meet),
        tuple(comp),
        bottom,
        top,
    )
    validate_boolean_algebra(alg)
    return alg


def subset_label(mask: int) -> str:
    return "{" + ",".join(str(i) for i in range(mask.bit_length()) if mask >> i & 1) + "}"


def powerset_algebra(atom_count: int, caps: Caps = DEFAULT_CAPS) -> BooleanAlgebra:
    """The powerset of atom_count atoms, elements labeled as atom-index sets.

    Operations are set union/intersection/complement by construction, so the
    axiom scan is skipped here; tests re-validate small instances in full.
    """
    size = 1 << atom_count
    if size > caps.max_powerset_carrier:
        raise CapExceeded("powerset carrier", size, caps.max_powerset_carrier)
    carrier = tuple(subset_label(m) for m in range(size))
    join = tuple(tuple(a | b for b in range(size)) for a in range(size))
    meet = tuple(tuple(a & b for b in range(size)) for a in range(size))
    comp = tuple(a ^ (size - 1) for a in range(size))
    return BooleanAlgebra(carrier, join, meet, comp, 0, size - 1)


def atoms(alg: BooleanAlgebra) -> tuple[int, ...]:
    """Minimal nonzero elements, in carrier order."""
    out = []
    for i in range(alg.n):
        if i == alg.bottom:
            continue
        if any(j != alg.bottom and j != i and alg.leq(j, i) for j in range(alg.n)):
            continue
        out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class Filter:
    """A filter: contains top, closed under meet, upward closed."""

    algebra: BooleanAlgebra
    members: frozenset[int]

    def __post_init__(self):
        alg = self.algebra
        if alg.top not in self.members:
            raise NotAFilter("top missing")
        ms = sorted(self.members)
        for a in ms:
            if not 0 <= a < alg.n:
                raise NotAFilter(f"member index {a} out of range")
            for b in ms:
                if alg.meet[a][b] not in self.members:
                    raise NotAFilter(
                        f"not meet-closed at ({alg.carrier[a]}, {alg.carrier[b]})"
                    )
            for c in range(alg.n):
                if alg.leq(a, c) and c not in self.members:
                    raise NotAFilter(f"not upward closed at {alg.carrier[c]}")

    def least(self) -> int:
        m = self.algebra.top
        for a in self.members:
            m = self.algebra.meet[m][a]
        return m


def principal_filter(alg: BooleanAlgebra, element: int) -> Filter:
    return Filter(alg, frozenset(j for j in range(alg.n) if alg.leq(element, j)))


def filter_generated(alg: BooleanAlgebra, seed) -> Filter:
    """Smallest filter containing the seed elements (upward closure of their meet)."""
    m = alg.top
    for a in seed:
        m = alg.meet[m][a]
    return principal_filter(alg, m)


def is_proper(f: Filter) -> bool:
    return f.algebra.bottom not in f.members


def is_ultrafilter(f: Filter) -> bool:
    """Proper and maximal: every extension by a non-member collapses to bottom."""
    if not is_proper(f):
        return False
    alg = f.algebra
    least = f.least()
    for b in range(alg.n):
        if b in f.members:
            continue
        if alg.meet[least][b] != alg.bottom:
            return False
    return True


def all_ultrafilters(alg: BooleanAlgebra) -> tuple[Filter, ...]:
    """Upward closures of the atoms, verified maximal; one per atom."""
    out = []
    for a in atoms(alg):
        f = principal_filter(alg, a)
        if not is_ultrafilter(f):
            raise AlgebraAxiomError("atom closure is not an ultrafilter", (alg.carrier[a],))
        out.append(f)
    if len({f.members for f in out}) != len(atoms(alg)):
        raise AlgebraAxiomError("ultrafilter count differs from atom count", ())
    return tuple(out)


def spectrum_basic_open(alg: BooleanAlgebra, ultrafilters, b: int) -> int:
    """Mask of spectrum points (ultrafilters) not containing b."""
    mask = 0
    for k, f in enumerate(ultrafilters):
        if b not in f.members:
            mask |= 1 << k
    return mask


def stone_decomposition(alg: BooleanAlgebra) -> tuple[FiniteSpace, tuple[Filter, ...]]:
    """The spectrum space plus its points as ultrafilters, index-aligned.

    Point k is the ultrafilter generated by the k-th atom and is labeled by
    that atom's carrier label.
    """
    ultra = all_ultrafilters(alg)
    labels = tuple(alg.carrier[a] for a in atoms(alg))
    full = (1 << len(ultra)) - 1
    basis = [spectrum_basic_open(alg, ultra, b) for b in range(alg.n)]
    space = FiniteSpace(labels, generate_topology(full, basis))
    return space, ultra


def stone_spectrum(alg: BooleanAlgebra) -> FiniteSpace:
    return stone_decomposition(alg)[0]


def is_homomorphism(source: BooleanAlgebra, target: BooleanAlgebra, assignment) -> bool:
    """Does the assignment preserve join, meet, and complement everywhere?"""
    assignment = tuple(assignment)
    if len(assignment) != source.n or any(not 0 <= v < target.n for v in assignment):
        raise ValidationError("assignment malformed")
    for x in range(source.n):
        if target.comp[assignment[x]] != assignment[source.comp[x]]:
            return False
        for y in range(source.n):
            if target.join[assignment[x]][assignment[y]] != assignment[source.join[x][y]]:
                return False
            if target.meet[assignment[x]][assignment[y]] != assignment[source.meet[x][y]]:
                return False
    return True


def algebra_to_json_dict(alg: BooleanAlgebra) -> dict:
    lab = alg.carrier
    return {
        "carrier": list(lab),
        "join": [[lab[v] for v in row] for row in alg.join],
        "meet": [[lab[v] for v in row] for row in alg.meet],
        "comp": [lab[v] for v in alg.comp],
        "bot": lab[alg.bottom],
        "top": lab[alg.top],
    }


def algebra_from_json_dict(data: dict) -> BooleanAlgebra:
    try:
        carrier = tuple(data["carrier"])
        index = {lab: i for i, lab in enumerate(carrier)}
        if len(index) != len(carrier):
            raise ValidationError("duplicate carrier labels")
        join = [[index[v] for v in row] for row in data["join"]]
        meet = [[index[v] for v in row] for row in data["meet"]]
        comp = [index[v] for v in data["comp"]]
        bottom = index[data["bot"]]
        top = index[data["top"]]
    except ValidationError:
        raise
    except (TypeError, KeyError) as exc:
        raise ValidationError(f"algebra JSON malformed: {exc!r}") from exc
    return boolean_algebra(carrier, join, meet, comp, bottom, top)


def algebra_from_json(text: str) -> BooleanAlgebra:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON: {exc}") from exc
    return algebra_from_json_dict(data)
