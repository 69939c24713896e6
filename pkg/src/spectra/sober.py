"""Soberification of finite spaces.

The sober companion of a space has one point per closed irreducible subset;
its closed sets are exactly the images of the original closed sets.  In a
finite space every closed irreducible subset is the closure of a point, so
irreducibility reduces to having a top element in the specialization order
restricted to the subset; the definitional separation test is kept alongside
as a slow oracle.  The unit sends a point to its closure; a space is sober
exactly when every closed irreducible subset has a unique generic point,
equivalently when the unit is a homeomorphism.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import MismatchWitness, NotContinuous, ValidationError
from .report import Report
from .topology import (
    ContinuousMap,
    FiniteSpace,
    bits,
    clopen_generated_component_space,
    connected_components,
    is_connected_subset,
    is_totally_disconnected,
)


def _point_closures(space: FiniteSpace) -> list[int]:
    return [space.closure(1 << i) for i in range(space.n)]


def is_irreducible_closed(space: FiniteSpace, subset: int) -> bool:
    """Nonempty closed subset equal to the closure of one of its points."""
    if subset == 0 or not space.is_closed(subset):
        return False
    for i in bits(subset):
        if space.closure(1 << i) == subset:
            return True
    return False


def is_irreducible_closed_definitional(space: FiniteSpace, subset: int) -> bool:
    """Slow oracle: no cover by two closed sets leaves the subset in neither."""
    if subset == 0 or not space.is_closed(subset):
        return False
    closed = space.closed_sorted()
    for a in closed:
        for b in closed:
            if subset & ~(a | b):
                continue
            if subset & ~a and subset & ~b:
                return False
    return True


@dataclass(frozen=True)
class SoberSpace:
    """A soberification: base space, point masks, and the resulting space."""

    base: FiniteSpace
    point_masks: tuple[int, ...]
    space: FiniteSpace


@functools.lru_cache(maxsize=None)
def soberify(space: FiniteSpace) -> SoberSpace:
    """All closed irreducible subsets, topologized by images of closed sets."""
    closures = sorted({c for c in _point_closures(space)})
    labels = tuple("{" + ",".join(space.labels_of(m)) + "}" for m in closures)
    index = {m: k for k, m in enumerate(closures)}
    closed_family = set()
    for e in space.closed_sorted():
        t_mask = 0
        for m, k in index.items():
            if m & ~e == 0:
                t_mask |= 1 << k
        closed_family.add(t_mask)
    full = (1 << len(closures)) - 1
    opens = frozenset(full ^ c for c in closed_family)
    return SoberSpace(space, tuple(closures), FiniteSpace(labels, opens))


def image_of_closed(sober: SoberSpace, closed_mask: int) -> int:
    """The closed set of the soberification induced by a closed set of the base."""
    if not sober.base.is_closed(closed_mask):
        raise ValidationError("mask is not closed in the base space")
    out = 0
    for k, m in enumerate(sober.point_masks):
        if m & ~closed_mask == 0:
            out |= 1 << k
    return out


def sober_unit(space: FiniteSpace, sober: SoberSpace | None = None) -> ContinuousMap:
    """The unit: each point goes to its closure."""
    sober = sober or soberify(space)
    index = {m: k for k, m in enumerate(sober.point_masks)}
    assignment = tuple(index[space.closure(1 << i)] for i in range(space.n))
    return ContinuousMap(space, sober.space, assignment)


def soberify_map(
    f: ContinuousMap,
    source_sober: SoberSpace | None = None,
    target_sober: SoberSpace | None = None,
) -> ContinuousMap:
    """The induced map: a closed irreducible subset goes to the closure of its image."""
    src = source_sober or soberify(f.source)
    tgt = target_sober or soberify(f.target)
    index = {m: k for k, m in enumerate(tgt.point_masks)}
    assignment = []
    for m in src.point_masks:
        img = f.target.closure(f.image(m))
        if img not in index:
            raise MismatchWitness(
                "closure of the image of an irreducible subset is not irreducible",
                witness=f.source.labels_of(m),
            )
        assignment.append(index[img])
    return ContinuousMap(src.space, tgt.space, tuple(assignment))


def generic_points(space: FiniteSpace, subset: int) -> tuple[int, ...]:
    """Points of the subset whose closure is the whole subset."""
    return tuple(i for i in bits(subset) if space.closure(1 << i) == subset)


def is_sober(space: FiniteSpace) -> bool:
    """Every closed irreducible subset has exactly one generic point."""
    sober = soberify(space)
    return all(len(generic_points(space, m)) == 1 for m in sober.point_masks)


def check_sober(space: FiniteSpace, subject: str = "") -> Report:
    """The soberification itself is sober."""
    subject = subject or str(space.points)
    sober = soberify(space)
    t = sober.space
    for m in soberify(t).point_masks:
        g = generic_points(t, m)
        if len(g) != 1:
            return Report(
                "prop-sober-iii", subject, False,
                f"irreducible {t.labels_of(m)!r} has {len(g)} generic points",
            )
    return Report("prop-sober-iii", subject, True)


def check_closed_set_bijection(space: FiniteSpace, subject: str = "") -> Report:
    """Closed sets of the base biject onto closed sets of the soberification."""
    subject = subject or str(space.points)
    sober = soberify(space)
    images = {}
    for e in space.closed_sorted():
        t_mask = image_of_closed(sober, e)
        if t_mask in images:
            return Report(
                "prop-sober-ii", subject, False,
                f"closed sets {space.labels_of(images[t_mask])!r} and "
                f"{space.labels_of(e)!r} collapse",
            )
        images[t_mask] = e
    target_closed = set(sober.space.closed_sorted())
    if set(images) != target_closed:
        return Report("prop-sober-ii", subject, False, "image family differs from closed family")
    return Report("prop-sober-ii", subject, True)


def check_unit(space: FiniteSpace, subject: str = "") -> Report:
    """Unit is continuous; it is a homeomorphism exactly on sober spaces."""
    subject = subject or str(space.points)
    sober = soberify(space)
    try:
        unit = sober_unit(space, sober)
    except NotContinuous as exc:
        return Report("prop-sober-i", subject, False, f"unit not continuous: {exc}")
    sober_base = all(len(generic_points(space, m)) == 1 for m in sober.point_masks)
    if sober_base != unit.is_homeomorphism():
        return Report(
            "prop-sober-i", subject, False,
            f"sober={sober_base} but unit homeomorphism={unit.is_homeomorphism()}",
        )
    return Report("prop-sober-i", subject, True)


def check_components_of_soberification(space: FiniteSpace, subject: str = "") -> Report:
    """Components of the soberification are the soberifications of components.

    Also checks the map sending an irreducible subset to its component:
    continuous onto the clopen-generated component space, with preimages of
    closed sets equal to images of closed preimages.
    """
    subject = subject or str(space.points)
    sober = soberify(space)
    comp_space, proj = clopen_generated_component_space(space)
    blocks = connected_components(space).blocks_sorted()

    assignment = []
    for m in sober.point_masks:
        home = None
        for k, b in enumerate(blocks):
            if m & ~b == 0:
                home = k
                break
        if home is None:
            return Report(
                "thm-conn-component", subject, False,
                f"irreducible {space.labels_of(m)!r} meets several components",
            )
        assignment.append(home)
    try:
        gamma = ContinuousMap(sober.space, comp_space, tuple(assignment))
    except NotContinuous as exc:
        return Report("thm-conn-component", subject, False, f"component map: {exc}")

    # blocks of the soberification are exactly the per-component point sets
    expected = set()
    covered = 0
    for b in blocks:
        t_mask = 0
        for k, m in enumerate(sober.point_masks):
            if m & ~b == 0:
                t_mask |= 1 << k
        if t_mask == 0:
            return Report(
                "thm-conn-component", subject, False,
                f"component {space.labels_of(b)!r} contributes no irreducible subsets",
            )
        if t_mask & covered:
            return Report("thm-conn-component", subject, False, "component images overlap")
        covered |= t_mask
        expected.add(t_mask)
        if not is_connected_subset(sober.space, t_mask):
            return Report(
                "thm-conn-component", subject, False,
                f"soberified component {space.labels_of(b)!r} is not connected",
            )
    if covered != sober.space.full_mask:
        return Report("thm-conn-component", subject, False, "component images do not cover")
    actual = set(connected_components(sober.space).blocks)
    if actual != expected:
        return Report(
            "thm-conn-component", subject, False,
            "components of the soberification differ from soberified components",
        )

    # preimages under the component map are images of projection preimages
    for ce in comp_space.closed_sorted():
        base_closed = proj.preimage(ce)
        if gamma.preimage(ce) != image_of_closed(sober, base_closed):
            return Report(
                "thm-conn-component", subject, False,
                f"component-map preimage mismatch at {comp_space.labels_of(ce)!r}",
            )

    if not is_totally_disconnected(comp_space):
        return Report("thm-conn-component", subject, False, "component space not totally disconnected")
    return Report("thm-conn-component", subject, True)
