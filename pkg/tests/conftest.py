"""Shared fixtures and independent oracle helpers.

The oracles here recompute results by definition-level brute force so the
structural implementations in the package are checked against something that
shares no code with them.
"""

from __future__ import annotations

import itertools

import pytest

from spectra import (
    DEFAULT_CAPS,
    BooleanAlgebra,
    FiniteSpace,
    Filter,
    validate_topology,
)
from spectra.errors import SpectraError


ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, passed: bool, detail: str = "") -> None:
    """Print one pass/fail line per acceptance criterion and fail the test."""
    status = "PASS" if passed else "FAIL"
    line = f"criterion {number}: {status}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert passed, line


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def caps():
    return DEFAULT_CAPS


@pytest.fixture(scope="session")
def sierpinski() -> FiniteSpace:
    return validate_topology(["a", "b"], [[], ["a"], ["a", "b"]])


@pytest.fixture(scope="session")
def chain3() -> FiniteSpace:
    return validate_topology(["a", "b", "c"], [[], ["a"], ["a", "b"], ["a", "b", "c"]])


@pytest.fixture(scope="session")
def two_chains() -> FiniteSpace:
    # disjoint union of two two-point chains: opens are pairwise unions of
    # the chains' opens
    return validate_topology(
        ["a", "b", "c", "d"],
        [
            [],
            ["a"],
            ["c"],
            ["a", "c"],
            ["a", "b"],
            ["c", "d"],
            ["a", "b", "c"],
            ["a", "c", "d"],
            ["a", "b", "c", "d"],
        ],
    )


def subspace(space: FiniteSpace, subset_mask: int) -> FiniteSpace:
    """Subspace topology on the points of subset_mask, with original labels."""
    pts = [i for i in range(space.n) if subset_mask >> i & 1]
    labels = [space.points[i] for i in pts]
    position = {p: k for k, p in enumerate(pts)}
    opens = set()
    for u in space.opens:
        m = 0
        for i in pts:
            if u >> i & 1:
                m |= 1 << position[i]
        opens.add(m)
    return validate_topology(labels, [frozenset_to_labels(m, labels) for m in opens])


def frozenset_to_labels(mask: int, labels) -> list[str]:
    return [labels[i] for i in range(len(labels)) if mask >> i & 1]


def connected_by_clopen_scan(space: FiniteSpace, subset_mask: int) -> bool:
    """Connectivity oracle: the subspace has no clopen except empty and full."""
    if subset_mask == 0:
        return True
    sub = subspace(space, subset_mask)
    subopens = sub.opens
    for u in subopens:
        if u != 0 and u != sub.full_mask and (sub.full_mask & ~u) in subopens:
            return False
    return True


def all_filters_by_scan(alg: BooleanAlgebra) -> set[frozenset[int]]:
    """Every subset of the carrier satisfying the filter axioms, by brute force."""
    out = set()
    for r in range(1 << alg.n):
        members = frozenset(i for i in range(alg.n) if r >> i & 1)
        if alg.top not in members:
            continue
        ok = all(alg.meet[a][b] in members for a in members for b in members)
        if ok:
            ok = all(
                b in members
                for a in members
                for b in range(alg.n)
                if alg.leq(a, b)
            )
        if ok:
            out.add(members)
    return out


def ultrafilters_by_scan(alg: BooleanAlgebra) -> set[frozenset[int]]:
    """Maximal proper filters among the scanned filters."""
    filters = [f for f in all_filters_by_scan(alg) if alg.bottom not in f]
    return {f for f in filters if not any(f < g for g in filters)}


def algebras_isomorphic(a: BooleanAlgebra, b: BooleanAlgebra) -> bool:
    """Brute-force isomorphism search over carrier bijections."""
    if a.n != b.n:
        return False
    for perm in itertools.permutations(range(b.n)):
        if perm[a.bottom] != b.bottom or perm[a.top] != b.top:
            continue
        if all(
            perm[a.join[x][y]] == b.join[perm[x]][perm[y]]
            and perm[a.meet[x][y]] == b.meet[perm[x]][perm[y]]
            and perm[a.comp[x]] == b.comp[perm[x]]
            for x in range(a.n)
            for y in range(a.n)
        ):
            return True
    return False


def filter_members(f: Filter) -> frozenset[int]:
    return f.members


def raises_spectra_error(fn, *args, **kwargs) -> bool:
    try:
        fn(*args, **kwargs)
    except SpectraError:
        return True
    return False
