"""The dictionary between a finite ring and its prime spectrum.

Checks implemented here, each over one concrete ring:

* idempotents correspond bijectively to clopen subsets of the spectrum via
  e -> D(e);
* the spectrum is connected exactly when the only idempotents are 0 and 1
  (stated as a set equality so the one-element ring needs no special case);
* the connected components of the spectrum are exactly the vanishing sets
  V(M) of the maximal regular ideals, one component per ideal;
* the component set, carrying the topology transported from the maximal
  regular ideal space, is profinite and sits coarser than the quotient
  topology, with projection preimages of the basic opens O(e) equal to D(e).
"""

from __future__ import annotations

from .caps import DEFAULT_CAPS, Caps
from .errors import MismatchWitness, NotContinuous, NotIdempotent
from .report import Report
from .rings import (
    FiniteRing,
    Ideal,
    basic_open_mask,
    idempotents,
    ideal_generated,
    max_regular_ideals,
    mr_decomposition,
    prime_ideals,
    vanishing_mask,
    zariski_spectrum,
)
from .topology import (
    ContinuousMap,
    FiniteSpace,
    clopens,
    connected_components,
    is_profinite_finite,
    quotient_topology,
)


def clopen_of_idempotent(ring: FiniteRing, e: int, caps: Caps = DEFAULT_CAPS) -> int:
    """D(e) as a mask over the canonical prime order; e must be idempotent."""
    if ring.mul[e][e] != e:
        raise NotIdempotent(f"{ring.carrier[e]} is not idempotent")
    return basic_open_mask(e, prime_ideals(ring, caps))


def check_idempotent_clopen_bijection(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """e -> D(e) is injective on idempotents and lands exactly on the clopens."""
    subject = ring.display()
    primes = prime_ideals(ring, caps)
    space = zariski_spectrum(ring, caps)
    image = {}
    for e in idempotents(ring):
        mask = basic_open_mask(e, primes)
        if mask in image:
            return Report(
                "prop-correspond", subject, False,
                f"D({ring.carrier[image[mask]]}) = D({ring.carrier[e]})",
            )
        image[mask] = e
    cls = clopens(space)
    if set(image) != set(cls):
        missing = sorted(set(cls) - set(image))
        extra = sorted(set(image) - set(cls))
        return Report(
            "prop-correspond", subject, False,
            f"clopen masks unmatched: missing {missing}, extra {extra}",
        )
    return Report("prop-correspond", subject, True)


def check_connected_iff_trivial_idempotents(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """Clopens are exactly {empty, full} iff idempotents are exactly {0, 1}."""
    subject = ring.display()
    space = zariski_spectrum(ring, caps)
    connected = clopens(space) == frozenset({0, space.full_mask})
    trivial = set(idempotents(ring)) == {ring.zero, ring.one}
    if connected != trivial:
        return Report(
            "cor-idemconnected", subject, False,
            f"connected={connected} but trivial idempotents={trivial}",
        )
    return Report("cor-idemconnected", subject, True)


def components_via_max_regular(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> dict[Ideal, int]:
    """Map each maximal regular ideal M to its component V(M) of the spectrum.

    Raises MismatchWitness unless {V(M)} is exactly the component partition,
    with distinct ideals giving distinct components.
    """
    primes = prime_ideals(ring, caps)
    space = zariski_spectrum(ring, caps)
    blocks = set(connected_components(space).blocks)
    out = {}
    seen = {}
    for m in max_regular_ideals(ring):
        v = vanishing_mask(m.members, primes)
        if v in seen:
            raise MismatchWitness(
                f"V(M) collides for two maximal regular ideals of {ring.display()}",
                witness=m.labels(),
            )
        if v not in blocks:
            raise MismatchWitness(
                f"V(M) is not a component of Spec({ring.display()})", witness=m.labels()
            )
        seen[v] = m
        out[m] = v
    if set(seen) != blocks:
        unmatched = sorted(blocks - set(seen))
        raise MismatchWitness(
            f"components of Spec({ring.display()}) without a maximal regular ideal",
            witness=[space.labels_of(b) for b in unmatched],
        )
    return out


def spectrum_to_mr_map(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> ContinuousMap:
    """The map sending a prime to the ideal generated by its idempotent members.

    Continuous from the spectrum onto the maximal regular ideal space, with
    preimage of each basic open O(e) equal to D(e); both facts are verified
    by construction (continuity) and by the max-regular claim check.
    """
    primes = prime_ideals(ring, caps)
    space = zariski_spectrum(ring, caps)
    mrspace, mrs = mr_decomposition(ring)
    index = {m.members: k for k, m in enumerate(mrs)}
    assignment = []
    for p in primes:
        gens = [e for e in idempotents(ring) if e in p.members]
        target = ideal_generated(ring, gens)
        if target.members not in index:
            raise MismatchWitness(
                f"idempotents of a prime of {ring.display()} generate a non-maximal regular ideal",
                witness=space.labels_of(1 << primes.index(p)),
            )
        assignment.append(index[target.members])
    return ContinuousMap(space, mrspace, tuple(assignment))


def check_spectrum_to_mr(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """Full component correspondence: V(M) blocks plus the prime-to-M map."""
    subject = ring.display()
    try:
        mapping = components_via_max_regular(ring, caps)
        to_mr = spectrum_to_mr_map(ring, caps)
    except (MismatchWitness, NotContinuous) as exc:
        return Report("thm-max-reg", subject, False, str(exc))
    primes = prime_ideals(ring, caps)
    mrspace, mrs = mr_decomposition(ring)
    # the map must send each prime into the ideal indexing its own component
    block_of = {}
    for m, v in mapping.items():
        for k in range(len(primes)):
            if v >> k & 1:
                block_of[k] = m
    for k in range(len(primes)):
        if mrs[to_mr.assignment[k]].members != block_of[k].members:
            return Report(
                "thm-max-reg", subject, False,
                f"prime P{k} maps outside its component's ideal",
            )
    # preimage of each basic open O(e) is D(e)
    for e in idempotents(ring):
        o_mask = 0
        for k, m in enumerate(mrs):
            if e not in m.members:
                o_mask |= 1 << k
        if to_mr.preimage(o_mask) != basic_open_mask(e, primes):
            return Report(
                "thm-max-reg", subject, False,
                f"preimage of O({ring.carrier[e]}) differs from D({ring.carrier[e]})",
            )
    return Report("thm-max-reg", subject, True)


def component_space(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> tuple[FiniteSpace, ContinuousMap]:
    """Components of the spectrum with the topology transported from mr_space.

    Returns the space (block labels match quotient_topology's) and the
    projection from the spectrum.
    """
    primes = prime_ideals(ring, caps)
    space = zariski_spectrum(ring, caps)
    partition = connected_components(space)
    blocks = partition.blocks_sorted()
    mrspace, mrs = mr_decomposition(ring)
    mr_index_of_block = []
    for b in blocks:
        for k, m in enumerate(mrs):
            if vanishing_mask(m.members, primes) == b:
                mr_index_of_block.append(k)
                break
        else:
            raise MismatchWitness(
                f"component of Spec({ring.display()}) has no maximal regular ideal",
                witness=space.labels_of(b),
            )
    from .topology import block_label  # local import to keep module tops tidy

    labels = tuple(block_label(space, b) for b in blocks)
    opens = set()
    for o in mrspace.opens:
        mask = 0
        for bi, mi in enumerate(mr_index_of_block):
            if o >> mi & 1:
                mask |= 1 << bi
        opens.add(mask)
    comp = FiniteSpace(labels, frozenset(opens))
    assignment = []
    for i in range(space.n):
        for bi, b in enumerate(blocks):
            if b >> i & 1:
                assignment.append(bi)
                break
    return comp, ContinuousMap(space, comp, tuple(assignment))


def check_component_space(ring: FiniteRing, caps: Caps = DEFAULT_CAPS) -> Report:
    """Transported topology is profinite, coarser than the quotient, D(e)-compatible."""
    subject = ring.display()
    try:
        comp, proj = component_space(ring, caps)
    except (MismatchWitness, NotContinuous) as exc:
        return Report("cor-coarser", subject, False, str(exc))
    space = proj.source
    if not is_profinite_finite(comp):
        return Report("cor-coarser", subject, False, "component space not profinite")
    quot = quotient_topology(space, connected_components(space))
    if quot.points != comp.points:
        return Report("cor-coarser", subject, False, "block labelings disagree")
    if not comp.opens <= quot.opens:
        extra = sorted(comp.opens - quot.opens)
        return Report(
            "cor-coarser", subject, False,
            f"transported open not open in quotient: {extra}",
        )
    primes = prime_ideals(ring, caps)
    mrspace, mrs = mr_decomposition(ring)
    blocks = connected_components(space).blocks_sorted()
    block_to_mr = {}
    for bi, b in enumerate(blocks):
        for k, m in enumerate(mrs):
            if vanishing_mask(m.members, primes) == b:
                block_to_mr[bi] = k
    for e in idempotents(ring):
        o_mask = 0
        for k, m in enumerate(mrs):
            if e not in m.members:
                o_mask |= 1 << k
        comp_mask = 0
        for bi in range(comp.n):
            if o_mask >> block_to_mr[bi] & 1:
                comp_mask |= 1 << bi
        if proj.preimage(comp_mask) != basic_open_mask(e, primes):
            return Report(
                "cor-coarser", subject, False,
                f"projection preimage of O({ring.carrier[e]}) differs from D({ring.carrier[e]})",
            )
    return Report("cor-coarser", subject, True)
