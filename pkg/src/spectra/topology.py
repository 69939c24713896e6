"""Finite topological spaces as validated open-set families.

Points are ordered label tuples; a subset of the space is an int bitmask over
that order (bit i set means point i is in the subset).  An open family is a
frozenset of masks containing the empty and full masks and closed under
pairwise union and intersection, which at finite scale is the whole topology.

Connected components are computed through clopen sets: two points are
equivalent when every clopen set containing one contains the other.  For a
finite space the resulting blocks are exactly the maximal connected subsets;
two independent slow recomputations (clopen splitting, comparability of the
specialization preorder) live here for cross-checking.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
import string
from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .errors import (
    CapExceeded,
    InvalidPartition,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotContinuous,
    ValidationError,
)

Mask = int


def popcount(mask: Mask) -> int:
    return bin(mask).count("1")


def bits(mask: Mask):
    """Indices of the set bits, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


@dataclass(frozen=True)
class FiniteSpace:
    """A finite topological space; construction validates the axioms."""

    points: tuple[str, ...]
    opens: frozenset[Mask]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValidationError(f"duplicate point labels in {self.points!r}")
        full = (1 << len(self.points)) - 1
        for m in self.opens:
            if not isinstance(m, int) or m < 0 or m > full:
                raise ValidationError(f"open mask {m!r} out of range")
        if 0 not in self.opens or full not in self.opens:
            raise MissingEmptyOrFull(
                f"family over {self.points!r} must contain the empty and full sets"
            )
        sorted_opens = sorted(self.opens)
        for a, b in itertools.combinations(sorted_opens, 2):
            if a | b not in self.opens:
                raise NotClosedUnderUnion(self.labels_of(a), self.labels_of(b))
            if a & b not in self.opens:
                raise NotClosedUnderIntersection(self.labels_of(a), self.labels_of(b))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> Mask:
        return (1 << len(self.points)) - 1

    def opens_sorted(self) -> tuple[Mask, ...]:
        return tuple(sorted(self.opens))

    def closed_sorted(self) -> tuple[Mask, ...]:
        full = self.full_mask
        return tuple(sorted(full ^ u for u in self.opens))

    def mask_of(self, labels) -> Mask:
        m = 0
        for lab in labels:
            try:
                m |= 1 << self.points.index(lab)
            except ValueError:
                raise ValidationError(f"unknown point label {lab!r}") from None
        return m

    def labels_of(self, mask: Mask) -> tuple[str, ...]:
        return tuple(self.points[i] for i in bits(mask))

    def is_open(self, mask: Mask) -> bool:
        return mask in self.opens

    def is_closed(self, mask: Mask) -> bool:
        return (self.full_mask ^ mask) in self.opens

    def closure(self, mask: Mask) -> Mask:
        """Smallest closed superset."""
        out = self.full_mask
        for c in self.closed_sorted():
            if c & mask == mask:
                out &= c
        return out

    def interior(self, mask: Mask) -> Mask:
        out = 0
        for u in self.opens:
            if u & mask == u:
                out |= u
        return out


def validate_topology(points, candidate_opens) -> FiniteSpace:
    """Build a FiniteSpace from labels and opens given as masks or label lists.

    Raises MissingEmptyOrFull, NotClosedUnderUnion, or NotClosedUnderIntersection
    (the latter two name a witness pair).
    """
    points = tuple(points)
    masks = set()
    for item in candidate_opens:
        if isinstance(item, int):
            masks.add(item)
        else:
            m = 0
            for lab in item:
                try:
                    m |= 1 << points.index(lab)
                except ValueError:
                    raise ValidationError(f"unknown point label {lab!r}") from None
            masks.add(m)
    return FiniteSpace(points, frozenset(masks))


@dataclass(frozen=True)
class ContinuousMap:
    """A continuous point assignment; construction checks continuity."""

    source: FiniteSpace
    target: FiniteSpace
    assignment: tuple[int, ...]

    def __post_init__(self):
        if len(self.assignment) != self.source.n:
            raise ValidationError("assignment length differs from source size")
        if self.source.n and self.target.n == 0:
            raise ValidationError("no map into the empty space from a nonempty one")
        for j in self.assignment:
            if not 0 <= j < self.target.n:
                raise ValidationError(f"target index {j} out of range")
        for v in self.target.opens_sorted():
            if self.preimage(v) not in self.source.opens:
                raise NotContinuous(self.target.labels_of(v))

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def preimage(self, mask: Mask) -> Mask:
        out = 0
        for i, j in enumerate(self.assignment):
            if mask >> j & 1:
                out |= 1 << i
        return out

    def image(self, mask: Mask) -> Mask:
        out = 0
        for i in bits(mask):
            out |= 1 << self.assignment[i]
        return out

    def is_bijective(self) -> bool:
        return self.source.n == self.target.n and len(set(self.assignment)) == self.source.n

    def is_homeomorphism(self) -> bool:
        if not self.is_bijective():
            return False
        return {self.image(u) for u in self.source.opens} == set(self.target.opens)


def identity_map(space: FiniteSpace) -> ContinuousMap:
    return ContinuousMap(space, space, tuple(range(space.n)))


def compose(outer: ContinuousMap, inner: ContinuousMap) -> ContinuousMap:
    """outer after inner: the map x -> outer(inner(x))."""
    if inner.target != outer.source:
        raise ValidationError("maps do not compose: middle spaces differ")
    return ContinuousMap(
        inner.source, outer.target, tuple(outer.assignment[j] for j in inner.assignment)
    )


@dataclass(frozen=True)
class Partition:
    """A partition of a space into nonempty pairwise disjoint blocks."""

    space: FiniteSpace
    blocks: frozenset[Mask]

    def __post_init__(self):
        seen = 0
        for b in self.blocks:
            if b == 0:
                raise InvalidPartition("empty block")
            if b & seen:
                raise InvalidPartition(f"overlapping block {self.space.labels_of(b)!r}")
            seen |= b
        if seen != self.space.full_mask:
            raise InvalidPartition("blocks do not cover the space")

    def blocks_sorted(self) -> tuple[Mask, ...]:
        # canonical order: by least point index
        return tuple(sorted(self.blocks, key=lambda b: (b & -b, b)))

    def block_of(self, point_index: int) -> Mask:
        for b in self.blocks:
            if b >> point_index & 1:
                return b
        raise InvalidPartition(f"point index {point_index} not covered")


def block_label(space: FiniteSpace, mask: Mask) -> str:
    return "{" + ",".join(space.labels_of(mask)) + "}"


def generate_topology(full: Mask, family) -> frozenset[Mask]:
    """Close a family of masks under pairwise union and intersection.

    The empty and full masks are always added, so the result is a topology.
    """
    opens = {0, full}
    opens.update(m & full for m in family)
    frontier = set(opens)
    while frontier:
        fresh = set()
        current = list(opens)
        for a in frontier:
            for b in current:
                for c in (a | b, a & b):
                    if c not in opens:
                        fresh.add(c)
        opens |= fresh
        frontier = fresh
    return frozenset(opens)


@functools.lru_cache(maxsize=None)
def clopens(space: FiniteSpace) -> frozenset[Mask]:
    """Subsets that are simultaneously open and closed."""
    full = space.full_mask
    return frozenset(u for u in space.opens if (full ^ u) in space.opens)


def is_connected(space: FiniteSpace) -> bool:
    """No clopen set other than the empty and full sets.

    Under this convention the empty space counts as connected, which keeps
    every idempotent/component correspondence exception-free for the
    one-element ring.
    """
    return clopens(space) == frozenset({0, space.full_mask})


def is_connected_subset(space: FiniteSpace, subset: Mask) -> bool:
    """No pair of opens separates the subset into two nonempty relative parts."""
    if subset == 0:
        return True
    opens = space.opens_sorted()
    for u in opens:
        a = u & subset
        if a == 0 or a == subset:
            continue
        rest = subset & ~a
        for v in opens:
            if v & subset == rest:
                return False
    return True


@functools.lru_cache(maxsize=None)
def connected_components(space: FiniteSpace) -> Partition:
    """Blocks of the relation 'every clopen containing x contains y'.

    For finite spaces these coincide with the maximal connected subsets.
    Returns the partition; the empty space yields zero blocks.
    """
    cls = sorted(clopens(space))
    blocks = []
    seen = 0
    for i in range(space.n):
        if seen >> i & 1:
            continue
        q = space.full_mask
        for c in cls:
            if c >> i & 1:
                q &= c
        blocks.append(q)
        seen |= q
    return Partition(space, frozenset(blocks))


def components_by_clopen_splitting(space: FiniteSpace) -> frozenset[Mask]:
    """Slow recomputation: split blocks by clopen sets until stable.

    Kept deliberately separate from connected_components for cross-checks.
    """
    if space.n == 0:
        return frozenset()
    blocks = [space.full_mask]
    cls = sorted(clopens(space))
    changed = True
    while changed:
        changed = False
        out = []
        for b in blocks:
            for c in cls:
                inside = b & c
                outside = b & ~c
                if inside and outside:
                    out.append(inside)
                    out.append(outside)
                    changed = True
                    break
            else:
                out.append(b)
        blocks = out
    return frozenset(blocks)


def specialization_matrix(space: FiniteSpace) -> tuple[Mask, ...]:
    """Row i is the mask of points y with x_i in closure({y})."""
    rows = []
    closures = [space.closure(1 << j) for j in range(space.n)]
    for i in range(space.n):
        row = 0
        for j in range(space.n):
            if closures[j] >> i & 1:
                row |= 1 << j
        rows.append(row)
    return tuple(rows)


def components_by_comparability(space: FiniteSpace) -> frozenset[Mask]:
    """Slow recomputation via the undirected comparability graph of specialization."""
    rows = specialization_matrix(space)
    adj = [rows[i] | sum(1 << j for j in range(space.n) if rows[j] >> i & 1) for i in range(space.n)]
    seen = 0
    blocks = []
    for i in range(space.n):
        if seen >> i & 1:
            continue
        comp = 1 << i
        frontier = comp
        while frontier:
            grow = 0
            for j in bits(frontier):
                grow |= adj[j]
            frontier = grow & ~comp
            comp |= grow
        blocks.append(comp)
        seen |= comp
    return frozenset(blocks)


def quotient_topology(space: FiniteSpace, partition: Partition) -> FiniteSpace:
    """Finest topology on the blocks making the projection continuous."""
    blocks = partition.blocks_sorted()
    labels = tuple(block_label(space, b) for b in blocks)
    opens = set()
    for sub in range(1 << len(blocks)):
        pre = 0
        for k in bits(sub):
            pre |= blocks[k]
        if pre in space.opens:
            opens.add(sub)
    return FiniteSpace(labels, frozenset(opens))


def quotient_projection(space: FiniteSpace, quotient: FiniteSpace, partition: Partition) -> ContinuousMap:
    blocks = partition.blocks_sorted()
    assignment = []
    for i in range(space.n):
        for k, b in enumerate(blocks):
            if b >> i & 1:
                assignment.append(k)
                break
    return ContinuousMap(space, quotient, tuple(assignment))


@functools.lru_cache(maxsize=None)
def clopen_generated_component_space(space: FiniteSpace) -> tuple[FiniteSpace, ContinuousMap]:
    """Component set carrying the topology generated by images of clopen sets.

    For a finite space every component is clopen, so this topology is discrete;
    in general it is coarser than the quotient topology.  Returns the space and
    the projection map.
    """
    partition = connected_components(space)
    blocks = partition.blocks_sorted()
    labels = tuple(block_label(space, b) for b in blocks)
    basis = []
    for c in sorted(clopens(space)):
        img = 0
        for k, b in enumerate(blocks):
            if b & c:
                img |= 1 << k
        basis.append(img)
    full = (1 << len(blocks)) - 1
    comp_space = FiniteSpace(labels, generate_topology(full, basis))
    proj = quotient_projection(space, comp_space, partition)
    return comp_space, proj


def is_hausdorff(space: FiniteSpace) -> bool:
    """Every pair of distinct points has disjoint open neighborhoods."""
    opens = sorted(space.opens, key=lambda m: (popcount(m), m))
    by_point = [[u for u in opens if u >> i & 1] for i in range(space.n)]
    for i in range(space.n):
        for j in range(i + 1, space.n):
            if not any(u & v == 0 for u in by_point[i] for v in by_point[j]):
                return False
    return True


def is_totally_disconnected(space: FiniteSpace) -> bool:
    return all(popcount(b) == 1 for b in connected_components(space).blocks)


def is_profinite_finite(space: FiniteSpace) -> bool:
    """Compact + Hausdorff + totally disconnected; compactness is automatic here."""
    return is_hausdorff(space) and is_totally_disconnected(space)


def discrete_space(labels) -> FiniteSpace:
    labels = tuple(labels)
    return FiniteSpace(labels, frozenset(range(1 << len(labels))))


def indiscrete_space(labels) -> FiniteSpace:
    labels = tuple(labels)
    return FiniteSpace(labels, frozenset({0, (1 << len(labels)) - 1}))


def disjoint_union(left: FiniteSpace, right: FiniteSpace) -> FiniteSpace:
    """Coproduct; right labels are suffixed with ' (2)' on collision."""
    labels = list(left.points)
    for lab in right.points:
        labels.append(lab if lab not in left.points else f"{lab} (2)")
    opens = frozenset(u | (v << left.n) for u in left.opens for v in right.opens)
    return FiniteSpace(tuple(labels), opens)


def enumerate_continuous_maps(
    source: FiniteSpace, target: FiniteSpace, caps: Caps = DEFAULT_CAPS
) -> tuple[ContinuousMap, ...]:
    """All continuous maps, in lexicographic assignment order."""
    total = target.n**source.n
    if total > caps.max_map_candidates:
        raise CapExceeded("map candidates", total, caps.max_map_candidates)
    if source.n == 0:
        return (ContinuousMap(source, target, ()),)
    if target.n == 0:
        return ()
    topens = target.opens_sorted()
    out = []
    for assignment in itertools.product(range(target.n), repeat=source.n):
        ok = True
        for v in topens:
            pre = 0
            for i, j in enumerate(assignment):
                if v >> j & 1:
                    pre |= 1 << i
            if pre not in source.opens:
                ok = False
                break
        if ok:
            out.append(ContinuousMap(source, target, assignment))
    return tuple(out)


def homeomorphic(
    left: FiniteSpace, right: FiniteSpace, caps: Caps = DEFAULT_CAPS
) -> ContinuousMap | None:
    """A homeomorphism if one exists, else None.  Search is over bijections."""
    if left.n != right.n or len(left.opens) != len(right.opens):
        return None
    if sorted(map(popcount, left.opens)) != sorted(map(popcount, right.opens)):
        return None
    if math.factorial(left.n) > caps.max_map_candidates:
        raise CapExceeded("bijection candidates", math.factorial(left.n), caps.max_map_candidates)
    target_opens = set(right.opens)
    for perm in itertools.permutations(range(right.n)):
        image = set()
        for u in left.opens:
            img = 0
            for i in bits(u):
                img |= 1 << perm[i]
            image.add(img)
        if image == target_opens:
            return ContinuousMap(left, right, perm)
    return None


def enumerate_topologies(n: int, labels=None, caps: Caps = DEFAULT_CAPS) -> tuple[FiniteSpace, ...]:
    """All labeled topologies on n points, one per reflexive transitive relation.

    Opens of each space are the up-closed sets of the relation; the order of
    the result is fixed by the integer encoding of the relation, so indices
    are stable across runs.
    """
    if n > caps.max_points_exhaustive:
        raise CapExceeded("points for exhaustive topology enumeration", n, caps.max_points_exhaustive)
    if labels is None:
        labels = tuple(string.ascii_lowercase[:n])
    else:
        labels = tuple(labels)
    if n == 0:
        return (FiniteSpace((), frozenset({0})),)
    off_diag = [(i, j) for i in range(n) for j in range(n) if i != j]
    spaces = []
    for code in range(1 << len(off_diag)):
        rows = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(off_diag):
            if code >> k & 1:
                rows[i] |= 1 << j
        if any(rows[j] | rows[i] != rows[i] for i in range(n) for j in bits(rows[i])):
            continue
        opens = frozenset(
            u for u in range(1 << n) if all(rows[i] | u == u for i in bits(u))
        )
        spaces.append(FiniteSpace(labels, opens))
    return tuple(spaces)


def space_to_json_dict(space: FiniteSpace) -> dict:
    return {
        "points": list(space.points),
        "opens": [list(space.labels_of(u)) for u in space.opens_sorted()],
    }


def space_from_json_dict(data: dict) -> FiniteSpace:
    try:
        points = data["points"]
        opens = data["opens"]
    except (TypeError, KeyError) as exc:
        raise ValidationError("space JSON needs 'points' and 'opens'") from exc
    if not all(isinstance(p, str) for p in points):
        raise ValidationError("point labels must be strings")
    return validate_topology(points, opens)


def space_to_json(space: FiniteSpace) -> str:
    return json.dumps(space_to_json_dict(space), sort_keys=True)


def space_from_json(text: str) -> FiniteSpace:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON: {exc}") from exc
    return space_from_json_dict(data)


def specialization_dot(space: FiniteSpace, name: str = "space") -> str:
    """DOT digraph of the specialization preorder: x -> y iff x in closure({y})."""
    lines = [f'digraph "{name}" {{']
    for lab in sorted(space.points):
        lines.append(f'  "{lab}";')
    rows = specialization_matrix(space)
    edges = []
    for i in range(space.n):
        for j in bits(rows[i]):
            if i != j:
                edges.append((space.points[i], space.points[j]))
    for a, b in sorted(edges):
        lines.append(f'  "{a}" -> "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
