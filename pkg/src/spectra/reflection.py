"""The components functor onto finite profinite spaces, with its adjunction.

reflect_space sends a finite space to its component set carrying the
clopen-generated topology (always discrete at finite scale) together with the
projection unit.  reflect_map sends a continuous map to the induced map on
components.  check_adjunction verifies that composing with the unit is a
bijection from maps-out-of-the-reflection onto maps-out-of-the-space for any
finite profinite target, by exhausting both hom sets.
"""

from __future__ import annotations

from dataclasses import dataclass

from .caps import DEFAULT_CAPS, Caps
from .errors import MismatchWitness, NotProfiniteTarget
from .report import Report
from .topology import (
    ContinuousMap,
    FiniteSpace,
    clopen_generated_component_space,
    compose,
    connected_components,
    enumerate_continuous_maps,
    identity_map,
    is_hausdorff,
    is_profinite_finite,
    quotient_topology,
)


@dataclass(frozen=True)
class Reflection:
    source: FiniteSpace
    image: FiniteSpace
    unit: ContinuousMap


def reflect_space(space: FiniteSpace) -> Reflection:
    """Component space with clopen-generated topology, plus the projection."""
    image, unit = clopen_generated_component_space(space)
    return Reflection(space, image, unit)


def reflect_map(f: ContinuousMap) -> ContinuousMap:
    """The induced map on components: each block lands in the block containing its image."""
    src = reflect_space(f.source)
    tgt = reflect_space(f.target)
    tgt_blocks = connected_components(f.target).blocks_sorted()
    assignment = []
    for b in connected_components(f.source).blocks_sorted():
        img = f.image(b)
        for k, tb in enumerate(tgt_blocks):
            if img & ~tb == 0:
                assignment.append(k)
                break
        else:
            raise MismatchWitness(
                "image of a component is not inside a single component",
                witness=f.source.labels_of(b),
            )
    return ContinuousMap(src.image, tgt.image, tuple(assignment))


def check_adjunction(
    space: FiniteSpace,
    target: FiniteSpace,
    caps: Caps = DEFAULT_CAPS,
    subject: str = "",
) -> Report:
    """Composing with the unit bijects hom(reflection, P) with hom(X, P)."""
    if not is_profinite_finite(target):
        raise NotProfiniteTarget(f"target {target.points!r} is not finite profinite")
    subject = subject or f"{space.points}|{target.points}"
    refl = reflect_space(space)
    out_of_reflection = enumerate_continuous_maps(refl.image, target, caps)
    out_of_space = enumerate_continuous_maps(space, target, caps)
    unit = refl.unit.assignment
    composed = {tuple(g.assignment[unit[i]] for i in range(space.n)) for g in out_of_reflection}
    if len(composed) != len(out_of_reflection):
        return Report("thm-alternative", subject, False, "composition with unit not injective")
    direct = {f.assignment for f in out_of_space}
    if composed != direct:
        return Report(
            "thm-alternative", subject, False,
            f"hom sets differ: {len(composed)} through reflection vs {len(direct)} direct",
        )
    return Report("thm-alternative", subject, True)


def _first_failure(reports: list[Report]) -> Report | None:
    for r in reports:
        if not r.passed:
            return r
    return None


def check_functor_laws(
    named_spaces: list[tuple[str, FiniteSpace]],
    caps: Caps = DEFAULT_CAPS,
    compose_point_bound: int = 2,
) -> list[Report]:
    """Functor and unit laws over a space corpus; one aggregated report per law.

    Identity and unit naturality run on every listed space and on every
    continuous map between listed spaces; the composition law enumerates all
    composable pairs among spaces with at most compose_point_bound points
    (hom sets grow too fast beyond that for an exhaustive default).
    """
    reports = []

    bad = None
    for name, space in named_spaces:
        refl = reflect_space(space)
        if not is_profinite_finite(refl.image):
            bad = f"{name}: reflection not profinite"
            break
        fid = reflect_map(identity_map(space))
        if fid.assignment != tuple(range(refl.image.n)):
            bad = f"{name}: identity not preserved"
            break
        quot = quotient_topology(space, connected_components(space))
        if not refl.image.opens <= quot.opens:
            bad = f"{name}: clopen-generated opens exceed quotient opens"
            break
    reports.append(Report("functor-laws", "identity-and-unit", bad is None, bad))

    bad = None
    pairs_checked = 0
    for sname, src in named_spaces:
        for tname, tgt in named_spaces:
            for f in enumerate_continuous_maps(src, tgt, caps):
                ff = reflect_map(f)
                left = compose(ff, reflect_space(src).unit)
                right = compose(reflect_space(tgt).unit, f)
                pairs_checked += 1
                if left.assignment != right.assignment:
                    bad = f"naturality fails for a map {sname} -> {tname}"
                    break
            if bad:
                break
        if bad:
            break
    reports.append(
        Report("functor-laws", f"unit-naturality({pairs_checked} maps)", bad is None, bad)
    )

    small = [(n, s) for n, s in named_spaces if s.n <= compose_point_bound]
    bad = None
    composites = 0
    for aname, a in small:
        for bname, b in small:
            homs_ab = enumerate_continuous_maps(a, b, caps)
            for cname, c in small:
                homs_bc = enumerate_continuous_maps(b, c, caps)
                for f in homs_ab:
                    ff = reflect_map(f)
                    for g in homs_bc:
                        gg = reflect_map(g)
                        composites += 1
                        if reflect_map(compose(g, f)).assignment != compose(gg, ff).assignment:
                            bad = f"composition fails: {aname} -> {bname} -> {cname}"
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    reports.append(
        Report("functor-laws", f"composition({composites} pairs)", bad is None, bad)
    )

    # maps out of a finite Hausdorff space into a Hausdorff space are closed
    bad = None
    closed_checked = 0
    for sname, src in named_spaces:
        if not is_hausdorff(src):
            continue
        for tname, tgt in named_spaces:
            if not is_hausdorff(tgt):
                continue
            for f in enumerate_continuous_maps(src, tgt, caps):
                closed_checked += 1
                for e in src.closed_sorted():
                    if not tgt.is_closed(f.image(e)):
                        bad = f"non-closed image under a map {sname} -> {tname}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    reports.append(
        Report("functor-laws", f"closed-maps({closed_checked} maps)", bad is None, bad)
    )

    # when the space is already profinite the unit is a homeomorphism
    bad = None
    for name, space in named_spaces:
        if not is_profinite_finite(space):
            continue
        unit = reflect_space(space).unit
        if not unit.is_homeomorphism():
            bad = f"{name}: unit not a homeomorphism on a profinite space"
            break
    reports.append(Report("functor-laws", "profinite-unit-homeo", bad is None, bad))

    return reports
