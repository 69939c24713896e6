"""Finite commutative unital rings and their three spectra.

Rings are operation tables over an ordered carrier.  The module covers:
idempotents and the Boolean algebra they form (join e+e'-ee', meet ee',
complement 1-e); ideals, regular ideals (generated by idempotents), and the
maximal regular ideals; prime ideals and the Zariski topology; the spectrum
of the idempotent algebra; and the space of maximal regular ideals with basic
opens O(e) = {M : e not in M}.

Prime enumeration is exact on three routes: a structural one for modular
rings and products (divisor-based), an ideal-lattice walk for arbitrary
tables (every ideal is a sum of principal ideals), and a raw subset scan that
tests keep as the independent oracle.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field

from .boolean_algebra import (
    BooleanAlgebra,
    Filter,
    is_ultrafilter,
    stone_decomposition,
    validate_boolean_algebra,
)
from .caps import DEFAULT_CAPS, Caps
from .errors import (
    CapExceeded,
    NotUltrafilter,
    RingAxiomError,
    ValidationError,
)
from .topology import FiniteSpace, generate_topology


@dataclass(frozen=True)
class FiniteRing:
    carrier: tuple[str, ...]
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    zero: int
    one: int
    name: str = field(default="", compare=False)
    # structural shortcut for prime enumeration: ("zmod", n) or
    # ("product", left_ring, right_ring); None means table-only
    prime_hint: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.carrier)
        if n == 0:
            raise ValidationError("empty carrier")
        if len(set(self.carrier)) != n:
            raise ValidationError("duplicate carrier labels")
        for tname, table in (("add", self.add), ("mul", self.mul)):
            if len(table) != n or any(len(row) != n for row in table):
                raise ValidationError(f"{tname} table is not {n}x{n}")
            for row in table:
                for v in row:
                    if not isinstance(v, int) or not 0 <= v < n:
                        raise ValidationError(f"{tname} entry {v!r} out of range")
        if not 0 <= self.zero < n or not 0 <= self.one < n:
            raise ValidationError("zero/one out of range")

    def __hash__(self):
        # tables are large; compute once (tuples do not cache their hash)
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.carrier, self.add, self.mul, self.zero, self.one))
            object.__setattr__(self, "_hash", h)
        return h

    @property
    def n(self) -> int:
        return len(self.carrier)

    def neg(self, i: int) -> int:
        for j in range(self.n):
            if self.add[i][j] == self.zero:
                return j
        raise RingAxiomError("additive inverse exists", (self.carrier[i],))

    def display(self) -> str:
        return self.name or f"ring[{self.n}]"


def validate_ring(ring: FiniteRing) -> None:
    """Exhaustively check the commutative unital ring axioms; witness on failure."""
    n = ring.n
    add, mul = ring.add, ring.mul
    lab = ring.carrier
    rng = range(n)
    for x in rng:
        if add[ring.zero][x] != x:
            raise RingAxiomError("zero is additive identity", (lab[x],))
        if mul[ring.one][x] != x:
            raise RingAxiomError("one is multiplicative identity", (lab[x],))
        if not any(add[x][y] == ring.zero for y in rng):
            raise RingAxiomError("additive inverse exists", (lab[x],))
        for y in rng:
            if add[x][y] != add[y][x]:
                raise RingAxiomError("addition commutativity", (lab[x], lab[y]))
            if mul[x][y] != mul[y][x]:
                raise RingAxiomError("multiplication commutativity", (lab[x], lab[y]))
    for x in rng:
        ax, mx = add[x], mul[x]
        for y in rng:
            axy, mxy = add[x][y], mul[x][y]
            for z in rng:
                if add[axy][z] != ax[add[y][z]]:
                    raise RingAxiomError("addition associativity", (lab[x], lab[y], lab[z]))
                if mul[mxy][z] != mx[mul[y][z]]:
                    raise RingAxiomError("multiplication associativity", (lab[x], lab[y], lab[z]))
                if mul[x][add[y][z]] != add[mx[y]][mx[z]]:
                    raise RingAxiomError("distributivity", (lab[x], lab[y], lab[z]))


def ring_from_tables(carrier, add, mul, zero, one, name: str = "") -> FiniteRing:
    """Build from tables and run the full axiom scan."""
    ring = FiniteRing(
        tuple(carrier),
        tuple(tuple(row) for row in add),
        tuple(tuple(row) for row in mul),
        zero,
        one,
        name=name,
    )
    validate_ring(ring)
    return ring


def zmod(n: int) -> FiniteRing:
    """Integers modulo n; n = 1 gives the one-element ring (zero = one)."""
    if n < 1:
        raise ValidationError("modulus must be at least 1")
    carrier = tuple(str(i) for i in range(n))
    add = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    mul = tuple(tuple((a * b) % n for b in range(n)) for a in range(n))
    return FiniteRing(carrier, add, mul, 0, 1 % n, name=f"zmod({n})", prime_hint=("zmod", n))


def product(left: FiniteRing, right: FiniteRing, caps: Caps = DEFAULT_CAPS) -> FiniteRing:
    """Componentwise product ring on pair labels."""
    size = left.n * right.n
    if size > caps.max_product_carrier:
        raise CapExceeded("product carrier", size, caps.max_product_carrier)
    carrier = tuple(
        f"({left.carrier[i]},{right.carrier[j]})" for i in range(left.n) for j in range(right.n)
    )

    def idx(i, j):
        return i * right.n + j

    add = []
    mul = []
    for i in range(left.n):
        for j in range(right.n):
            add.append(
                tuple(
                    idx(left.add[i][k], right.add[j][l])
                    for k in range(left.n)
                    for l in range(right.n)
                )
            )
            mul.append(
                tuple(
                    idx(left.mul[i][k], right.mul[j][l])
                    for k in range(left.n)
                    for l in range(right.n)
                )
            )
    return FiniteRing(
        carrier,
        tuple(add),
        tuple(mul),
        idx(left.zero, right.zero),
        idx(left.one, right.one),
        name=f"{left.display()}x{right.display()}",
        prime_hint=("product", left, right),
    )


@dataclass(frozen=True)
class Ideal:
    """An ideal: contains zero, closed under addition, absorbs multiplication."""

    ring: FiniteRing
    members: frozenset[int]

    def __post_init__(self):
        ring = self.ring
        if ring.zero not in self.members:
            raise ValidationError("ideal must contain zero")
        ms = sorted(self.members)
        for a in ms:
            if not 0 <= a < ring.n:
                raise ValidationError(f"ideal member {a} out of range")
            for b in ms:
                if ring.add[a][b] not in self.members:
                    raise ValidationError(
                        f"ideal not closed under addition at ({ring.carrier[a]}, {ring.carrier[b]})"
                    )
            for r in range(ring.n):
                if ring.mul[r][a] not in self.members:
                    raise ValidationError(
                        f"ideal does not absorb {ring.carrier[r]}*{ring.carrier[a]}"
                    )

    def is_proper(self) -> bool:
        return len(self.members) < self.ring.n

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ring.carrier[i] for i in sorted(self.members))

    def sort_key(self):
        return (len(self.members), tuple(sorted(self.members)))


def ideal_generated(ring: FiniteRing, generators) -> Ideal:
    """Smallest ideal containing the generators (worklist closure)."""
    members = {ring.zero}
    work = []
    for g in generators:
        if not 0 <= g < ring.n:
            raise ValidationError(f"generator index {g} out of range")
        if g not in members:
            members.add(g)
            work.append(g)
    while work:
        a = work.pop()
        for b in list(members):
            s = ring.add[a][b]
            if s not in members:
                members.add(s)
                work.append(s)
        for r in range(ring.n):
            p = ring.mul[r][a]
            if p not in members:
                members.add(p)
                work.append(p)
    return Ideal(ring, frozenset(members))


def idempotents(ring: FiniteRing) -> tuple[int, ...]:
    """Elements with e*e = e, in carrier order."""
    return tuple(i for i in range(ring.n) if ring.mul[i][i] == i)


@functools.lru_cache(maxsize=None)
def idempotent_algebra(ring: FiniteRing) -> BooleanAlgebra:
    """The idempotents under join e+e'-ee', meet ee', complement 1-e.

    Built from those formulas and then validated against every axiom.
    """
    ids = idempotents(ring)
    pos = {e: k for k, e in enumerate(ids)}

    def join_elems(a, b):
        return ring.add[ring.add[a][b]][ring.neg(ring.mul[a][b])]

    join = []
    meet = []
    comp = []
    for a in ids:
        jrow = []
        mrow = []
        for b in ids:
            j = join_elems(a, b)
            m = ring.mul[a][b]
            if j not in pos or m not in pos:
                raise RingAxiomError("idempotents closed under join/meet", (ring.carrier[a], ring.carrier[b]))
            jrow.append(pos[j])
            mrow.append(pos[m])
        c = ring.add[ring.one][ring.neg(a)]
        if c not in pos:
            raise RingAxiomError("idempotents closed under complement", (ring.carrier[a],))
        join.append(tuple(jrow))
        meet.append(tuple(mrow))
        comp.append(pos[c])
    alg = BooleanAlgebra(
        tuple(ring.carrier[e] for e in ids),
        tuple(join),
        tuple(meet),
        tuple(comp),
        pos[ring.zero],
        pos[ring.one],
    )
    validate_boolean_algebra(alg)
    return alg


def is_regular_ideal(ideal: Ideal) -> bool:
    """Every member a has an idempotent e in the ideal with a = e*a."""
    ring = ideal.ring
    ids = [e for e in idempotents(ring) if e in ideal.members]
    for a in ideal.members:
        if not any(ring.mul[e][a] == a for e in ids):
            return False
    return True


@functools.lru_cache(maxsize=None)
def regular_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """All ideals generated by idempotents.

    Any finite set of idempotents E generates the same ideal as its single
    join, so one principal ideal per idempotent covers every case; tests
    cross-check this collapse against raw subset enumeration.
    """
    seen = {}
    for e in idempotents(ring):
        ideal = ideal_generated(ring, [e])
        seen.setdefault(ideal.members, ideal)
    return tuple(sorted(seen.values(), key=Ideal.sort_key))


@functools.lru_cache(maxsize=None)
def max_regular_ideals(ring: FiniteRing) -> tuple[Ideal, ...]:
    """Maximal proper regular ideals, in canonical (size, members) order."""
    proper = [i for i in regular_ideals(ring) if i.is_proper()]
    out = []
    for i in proper:
        if not any(j is not i and i.members < j.members for j in proper):
            out.append(i)
    return tuple(sorted(out, key=Ideal.sort_key))


def quotient(ring: FiniteRing, ideal: Ideal, name: str = "") -> FiniteRing:
    """Quotient ring on cosets, labeled by their member sets."""
    if ideal.ring != ring:
        raise ValidationError("ideal belongs to a different ring")
    coset_of = {}
    reps = []
    for a in range(ring.n):
        if a in coset_of:
            continue
        members = frozenset(ring.add[a][i] for i in ideal.members)
        for b in members:
            coset_of[b] = len(reps)
        reps.append(members)
    labels = tuple("{" + ",".join(ring.carrier[i] for i in sorted(m)) + "}" for m in reps)
    rep_elem = [min(m) for m in reps]
    k = len(reps)
    add = tuple(
        tuple(coset_of[ring.add[rep_elem[i]][rep_elem[j]]] for j in range(k)) for i in range(k)
    )
    mul = tuple(
        tuple(coset_of[ring.mul[rep_elem[i]][rep_elem[j]]] for j in range(k)) for i in range(k)
    )
    out = FiniteRing(
        labels, add, mul, coset_of[ring.zero], coset_of[ring.one],
        name=name or f"{ring.display()}/{{{','.join(ideal.labels())}}}",
    )
    validate_ring(out)
    return out


@functools.lru_cache(maxsize=None)
def all_ideals(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> tuple[Ideal, ...]:
    """Every ideal, as the sum-closure of the principal ideals."""
    if ring.n > caps.max_prime_carrier:
        raise CapExceeded("ideal lattice carrier", ring.n, caps.max_prime_carrier)
    principal = {ideal_generated(ring, [a]).members for a in range(ring.n)}
    ideals = set(principal)
    frontier = set(principal)
    while frontier:
        fresh = set()
        for i in frontier:
            for j in list(ideals):
                s = frozenset(ring.add[a][b] for a in i for b in j)
                if s not in ideals and s not in fresh:
                    fresh.add(s)
        ideals |= fresh
        frontier = fresh
    return tuple(sorted((Ideal(ring, m) for m in ideals), key=Ideal.sort_key))


def _is_prime_members(ring: FiniteRing, members: frozenset[int]) -> bool:
    if len(members) == ring.n:
        return False
    outside = [a for a in range(ring.n) if a not in members]
    for a in outside:
        row = ring.mul[a]
        for b in outside:
            if row[b] in members:
                return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


@functools.lru_cache(maxsize=None)
def prime_ideals(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> tuple[Ideal, ...]:
    """All prime ideals, canonically ordered.

    Modular rings and products get the structural route; other rings go
    through the ideal lattice, capped by carrier size.
    """
    hint = ring.prime_hint
    if isinstance(hint, tuple) and hint and hint[0] == "zmod":
        n = hint[1]
        primes = [
            Ideal(ring, frozenset(range(0, n, p))) for p in _prime_divisors(n)
        ]
        return tuple(sorted(primes, key=Ideal.sort_key))
    if isinstance(hint, tuple) and hint and hint[0] == "product":
        left, right = hint[1], hint[2]
        out = []
        for p in prime_ideals(left, caps):
            members = frozenset(
                i * right.n + j for i in p.members for j in range(right.n)
            )
            out.append(Ideal(ring, members))
        for q in prime_ideals(right, caps):
            members = frozenset(
                i * right.n + j for i in range(left.n) for j in q.members
            )
            out.append(Ideal(ring, members))
        return tuple(sorted(out, key=Ideal.sort_key))
    return tuple(
        i for i in all_ideals(ring, caps) if _is_prime_members(ring, i.members)
    )


def prime_ideals_by_subset_scan(ring: FiniteRing) -> tuple[Ideal, ...]:
    """Independent oracle: test every subset of the carrier.  Small rings only."""
    n = ring.n
    others = [a for a in range(n) if a != ring.zero]
    primes = []
    for code in range(1 << len(others)):
        members = {ring.zero}
        for k, a in enumerate(others):
            if code >> k & 1:
                members.add(a)
        ok = True
        for a in members:
            for b in members:
                if ring.add[a][b] not in members:
                    ok = False
                    break
            if not ok:
                break
            for r in range(n):
                if ring.mul[r][a] not in members:
                    ok = False
                    break
            if not ok:
                break
        if ok and _is_prime_members(ring, frozenset(members)):
            primes.append(Ideal(ring, frozenset(members)))
    return tuple(sorted(primes, key=Ideal.sort_key))


def spectrum_points(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> tuple[Ideal, ...]:
    return prime_ideals(ring, caps)


def basic_open_mask(element: int, primes) -> int:
    """D(f): mask of primes not containing the element."""
    mask = 0
    for k, p in enumerate(primes):
        if element not in p.members:
            mask |= 1 << k
    return mask


def vanishing_mask(ideal_members, primes) -> int:
    """V(I): mask of primes containing every member of I."""
    mask = 0
    for k, p in enumerate(primes):
        if ideal_members <= p.members:
            mask |= 1 << k
    return mask


@functools.lru_cache(maxsize=None)
def zariski_spectrum(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> FiniteSpace:
    """Prime ideals with the topology generated by basic opens D(f).

    Points are labeled P0, P1, ... in canonical prime order; use
    spectrum_points for the ideals behind the labels.
    """
    primes = prime_ideals(ring, caps)
    labels = tuple(f"P{k}" for k in range(len(primes)))
    full = (1 << len(primes)) - 1
    basis = {basic_open_mask(f, primes) for f in range(ring.n)}
    return FiniteSpace(labels, generate_topology(full, basis))


def boolean_spectrum(ring: FiniteRing) -> FiniteSpace:
    """Spectrum of the idempotent algebra."""
    return stone_decomposition(idempotent_algebra(ring))[0]


def ultrafilter_to_max_regular(ring: FiniteRing, ultra: Filter) -> Ideal:
    """The ideal generated by the idempotents whose complements lie in the filter.

    The filter must be an ultrafilter of this ring's idempotent algebra; the
    result is always one of the maximal regular ideals.
    """
    alg = idempotent_algebra(ring)
    if ultra.algebra != alg:
        raise NotUltrafilter("filter does not belong to this ring's idempotent algebra")
    if not is_ultrafilter(ultra):
        raise NotUltrafilter("filter is not maximal proper")
    ids = idempotents(ring)
    gens = []
    for k, e in enumerate(ids):
        if alg.comp[k] in ultra.members:
            gens.append(e)
    return ideal_generated(ring, gens)


@functools.lru_cache(maxsize=None)
def mr_decomposition(ring: FiniteRing) -> tuple[FiniteSpace, tuple[Ideal, ...]]:
    """Maximal regular ideals with basic opens O(e) = {M : e not in M}.

    Points are labeled M0, M1, ... in canonical ideal order, index-aligned
    with the returned ideal tuple.
    """
    mrs = max_regular_ideals(ring)
    labels = tuple(f"M{k}" for k in range(len(mrs)))
    full = (1 << len(mrs)) - 1
    basis = set()
    for e in idempotents(ring):
        mask = 0
        for k, m in enumerate(mrs):
            if e not in m.members:
                mask |= 1 << k
        basis.add(mask)
    return FiniteSpace(labels, generate_topology(full, basis)), mrs


def mr_space(ring: FiniteRing) -> FiniteSpace:
    return mr_decomposition(ring)[0]


def mr_open_of_regular_ideal(ideal: Ideal, mrs) -> int:
    """O(I): mask of maximal regular ideals not containing the regular ideal I."""
    mask = 0
    for k, m in enumerate(mrs):
        if not ideal.members <= m.members:
            mask |= 1 << k
    return mask


def ring_to_json_dict(ring: FiniteRing) -> dict:
    lab = ring.carrier
    return {
        "carrier": list(lab),
        "add": [[lab[v] for v in row] for row in ring.add],
        "mul": [[lab[v] for v in row] for row in ring.mul],
        "zero": lab[ring.zero],
        "one": lab[ring.one],
    }


def ring_from_json_dict(data: dict) -> FiniteRing:
    try:
        carrier = tuple(data["carrier"])
        index = {lab: i for i, lab in enumerate(carrier)}
        if len(index) != len(carrier):
            raise ValidationError("duplicate carrier labels")
        add = [[index[v] for v in row] for row in data["add"]]
        mul = [[index[v] for v in row] for row in data["mul"]]
        zero = index[data["zero"]]
        one = index[data["one"]]
    except ValidationError:
        raise
    except (TypeError, KeyError) as exc:
        raise ValidationError(f"ring JSON malformed: {exc!r}") from exc
    return ring_from_tables(carrier, add, mul, zero, one, name="ring.json")


def ring_from_json(text: str) -> FiniteRing:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"bad JSON: {exc}") from exc
    return ring_from_json_dict(data)
