"""Corpus generation and the verification suite.

The corpus is exhaustive where it can be: every labeled topology up to the
point bound, modular rings up to the ring bound, two-factor products up to
the product bound, quotients by regular ideals up to the quotient bound, and
powerset algebras plus every corpus ring's idempotent algebra.  Each claim in
the registry checks one statement across the relevant corpus slice and the
suite report is deterministic byte-for-byte for a fixed configuration.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from . import bridge, reflection, sober
from .boolean_algebra import (
    BooleanAlgebra,
    atoms,
    is_homomorphism,
    is_ultrafilter,
    powerset_algebra,
    principal_filter,
    spectrum_basic_open,
    stone_decomposition,
    validate_boolean_algebra,
)
from .caps import DEFAULT_CAPS, Caps
from .errors import AlgebraAxiomError, SpectraError, ValidationError
from .report import Report
from .rings import (
    FiniteRing,
    ideal_generated,
    idempotents,
    idempotent_algebra,
    max_regular_ideals,
    mr_decomposition,
    mr_open_of_regular_ideal,
    prime_ideals,
    quotient,
    regular_ideals,
    ultrafilter_to_max_regular,
    validate_ring,
    vanishing_mask,
    zariski_spectrum,
    zmod,
    product,
)
from .topology import (
    ContinuousMap,
    FiniteSpace,
    compose,
    components_by_clopen_splitting,
    components_by_comparability,
    connected_components,
    discrete_space,
    enumerate_continuous_maps,
    enumerate_topologies,
    generate_topology,
    identity_map,
    is_connected_subset,
    is_profinite_finite,
)

TOPOLOGY_COUNTS = {0: 1, 1: 1, 2: 4, 3: 29, 4: 355}


@dataclass(frozen=True)
class CorpusConfig:
    max_points: int = 3
    zmod_max: int = 12
    product_max: int = 16
    quotient_max: int = 16
    atom_max: int = 3
    adjunction_targets: int = 3

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


@dataclass(frozen=True)
class Corpus:
    config: CorpusConfig
    spaces: tuple[tuple[str, FiniteSpace], ...]
    rings: tuple[tuple[str, FiniteRing], ...]
    algebras: tuple[tuple[str, BooleanAlgebra], ...]


def generate_corpus(config: CorpusConfig = CorpusConfig(), caps: Caps = DEFAULT_CAPS) -> Corpus:
    """Deterministic corpus for the given bounds; every member is validated."""
    if config.max_points < 1 or config.zmod_max < 2:
        raise ValidationError("corpus bounds must allow at least one space and one ring")
    spaces = []
    for n in range(1, config.max_points + 1):
        for i, space in enumerate(enumerate_topologies(n, caps=caps)):
            spaces.append((f"top{n}[{i}]", space))

    base_rings: list[FiniteRing] = []
    for k in range(2, config.zmod_max + 1):
        base_rings.append(zmod(k))
    for a in range(2, config.product_max // 2 + 1):
        for b in range(a, config.product_max // a + 1):
            if a * b <= config.product_max:
                base_rings.append(product(zmod(a), zmod(b), caps))
    rings: list[tuple[str, FiniteRing]] = [(r.name, r) for r in base_rings]
    for base in base_rings:
        seen = set()
        for e in idempotents(base):
            ideal = ideal_generated(base, [e])
            if ideal.members in seen:
                continue
            seen.add(ideal.members)
            size = base.n // len(ideal.members)
            if size > config.quotient_max:
                continue
            name = f"{base.name}/<{base.carrier[e]}>"
            rings.append((name, quotient(base, ideal, name=name)))

    # structural constructors skip the heavy axiom scan; corpus members get it
    for _, ring in rings:
        validate_ring(ring)

    algebras: list[tuple[str, BooleanAlgebra]] = []
    for k in range(0, config.atom_max + 1):
        algebras.append((f"powerset({k})", powerset_algebra(k, caps)))
    for name, ring in rings:
        algebras.append((f"I({name})", idempotent_algebra(ring)))

    return Corpus(config, tuple(spaces), tuple(rings), tuple(algebras))


def brute_force_topology_families(n: int) -> set[frozenset[int]]:
    """Independent oracle: scan every family of subsets of an n-point set."""
    full = (1 << n) - 1
    middles = [m for m in range(1 << n) if m != 0 and m != full]
    out = set()
    for code in range(1 << len(middles)):
        fam = {0, full}
        for k, m in enumerate(middles):
            if code >> k & 1:
                fam.add(m)
        ok = True
        for a in fam:
            for b in fam:
                if (a | b) not in fam or (a & b) not in fam:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.add(frozenset(fam))
    return out


# ---------------------------------------------------------------- claims --


def _claim_bool_profinite(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "lemma-bool-profinite"
    out = []
    for name, alg in corpus.algebras:
        try:
            validate_boolean_algebra(alg)
        except AlgebraAxiomError as exc:
            out.append(Report(claim, name, False, str(exc)))
            continue
        ats = atoms(alg)
        witness = None
        if alg.n != 1 << len(ats):
            witness = f"carrier size {alg.n} is not 2^{len(ats)}"
        space, ultra = stone_decomposition(alg)
        if witness is None and space.n != len(ats):
            witness = "spectrum size differs from atom count"
        if witness is None and len(space.opens) != 1 << space.n:
            witness = "spectrum not discrete"
        if witness is None and not is_profinite_finite(space):
            witness = "spectrum not profinite"
        if witness is None and not all(is_ultrafilter(f) for f in ultra):
            witness = "atom closure not ultrafilter"
        if witness is None:
            # finite representation: b -> set of atoms below b
            target = powerset_algebra(len(ats), caps)
            assignment = []
            for b in range(alg.n):
                mask = 0
                for k, a in enumerate(ats):
                    if alg.leq(a, b):
                        mask |= 1 << k
                assignment.append(mask)
            if len(set(assignment)) != alg.n:
                witness = "atom-set representation not injective"
            elif not is_homomorphism(alg, target, assignment):
                witness = "atom-set representation not a homomorphism"
        if witness is None:
            # basic-open arithmetic over the ultrafilter points
            basic = [spectrum_basic_open(alg, ultra, b) for b in range(alg.n)]
            if basic[alg.bottom] != space.full_mask or basic[alg.top] != 0:
                witness = "basic opens at bottom/top wrong"
            else:
                for x in range(alg.n):
                    for y in range(alg.n):
                        if basic[alg.meet[x][y]] != basic[x] | basic[y]:
                            witness = f"O(meet) != union at ({alg.carrier[x]}, {alg.carrier[y]})"
                            break
                        if basic[alg.join[x][y]] != basic[x] & basic[y]:
                            witness = f"O(join) != intersection at ({alg.carrier[x]}, {alg.carrier[y]})"
                            break
                    if witness:
                        break
        if witness is None:
            # filter-indexed basic opens generate the same topology
            filter_opens = set()
            for b in range(alg.n):
                members = principal_filter(alg, b).members
                mask = 0
                for k, f in enumerate(ultra):
                    if not members <= f.members:
                        mask |= 1 << k
                filter_opens.add(mask)
            if generate_topology(space.full_mask, filter_opens) != space.opens:
                witness = "filter basis generates a different topology"
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_prop_correspond(corpus: Corpus, caps: Caps) -> list[Report]:
    return [bridge.check_idempotent_clopen_bijection(r, caps) for _, r in corpus.rings]


def _claim_cor_idemconnected(corpus: Corpus, caps: Caps) -> list[Report]:
    return [bridge.check_connected_iff_trivial_idempotents(r, caps) for _, r in corpus.rings]


def _claim_prop_goodlem(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "prop-goodlem"
    out = []
    for name, ring in corpus.rings:
        witness = None
        maxes = max_regular_ideals(ring)
        max_members = {m.members for m in maxes}
        for m in maxes:
            q = quotient(ring, m)
            if len(idempotents(q)) != 2:
                witness = f"quotient by {{{','.join(m.labels())}}} has {len(idempotents(q))} idempotents"
                break
        if witness is None:
            for i in regular_ideals(ring):
                if not i.is_proper() or i.members in max_members:
                    continue
                if ring.n // len(i.members) > caps.max_prime_carrier:
                    continue  # keep the converse affordable; forward part is complete
                q = quotient(ring, i)
                if len(idempotents(q)) == 2:
                    witness = (
                        f"non-maximal regular ideal {{{','.join(i.labels())}}} "
                        "also gives a two-idempotent quotient"
                    )
                    break
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_cor_above(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "cor-above"
    out = []
    for name, ring in corpus.rings:
        witness = None
        primes = prime_ideals(ring, caps)
        space = zariski_spectrum(ring, caps)
        for m in max_regular_ideals(ring):
            v = vanishing_mask(m.members, primes)
            if v == 0:
                witness = f"V of {{{','.join(m.labels())}}} is empty"
                break
            if not is_connected_subset(space, v):
                witness = f"V of {{{','.join(m.labels())}}} is disconnected"
                break
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_lemma_mrprofinite(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "lemma-mrprofinite"
    out = []
    for name, ring in corpus.rings:
        witness = None
        mrspace, mrs = mr_decomposition(ring)
        index = {m.members: k for k, m in enumerate(mrs)}
        if not is_profinite_finite(mrspace):
            witness = "max-regular space not profinite"
        if witness is None:
            bspace, ultra = stone_decomposition(idempotent_algebra(ring))
            assignment = []
            for f in ultra:
                target = ultrafilter_to_max_regular(ring, f)
                if target.members not in index:
                    witness = "ultrafilter image is not a maximal regular ideal"
                    break
                assignment.append(index[target.members])
            if witness is None:
                if len(set(assignment)) != len(mrs):
                    witness = "ultrafilter-to-ideal map not bijective"
                else:
                    try:
                        hom = ContinuousMap(bspace, mrspace, tuple(assignment))
                        if not hom.is_homeomorphism():
                            witness = "ultrafilter-to-ideal map not a homeomorphism"
                    except SpectraError as exc:
                        witness = f"ultrafilter-to-ideal map not continuous: {exc}"
        if witness is None:
            # basic opens indexed by regular ideals generate the same topology
            ideal_opens = {mr_open_of_regular_ideal(i, mrs) for i in regular_ideals(ring)}
            if generate_topology(mrspace.full_mask, ideal_opens) != mrspace.opens:
                witness = "regular-ideal basis generates a different topology"
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_thm_max_reg(corpus: Corpus, caps: Caps) -> list[Report]:
    return [bridge.check_spectrum_to_mr(r, caps) for _, r in corpus.rings]


def _claim_cor_coarser(corpus: Corpus, caps: Caps) -> list[Report]:
    return [bridge.check_component_space(r, caps) for _, r in corpus.rings]


def _claim_thm_alternative(corpus: Corpus, caps: Caps) -> list[Report]:
    out = []
    targets = [
        (f"disc{k}", discrete_space([f"q{i}" for i in range(k)]))
        for k in range(1, corpus.config.adjunction_targets + 1)
    ]
    for sname, space in corpus.spaces:
        for tname, target in targets:
            out.append(
                reflection.check_adjunction(space, target, caps, subject=f"{sname}|{tname}")
            )
    return out


def _claim_functor_laws(corpus: Corpus, caps: Caps) -> list[Report]:
    small = [(n, s) for n, s in corpus.spaces if s.n <= 3]
    reports = reflection.check_functor_laws(small, caps)
    # identity and unit coarseness on every space, not only the small slice
    bad = None
    for name, space in corpus.spaces:
        refl = reflection.reflect_space(space)
        if not is_profinite_finite(refl.image):
            bad = f"{name}: reflection not profinite"
            break
    reports.append(Report("functor-laws", "all-reflections-profinite", bad is None, bad))
    return reports


def _claim_prop_sober_i(corpus: Corpus, caps: Caps) -> list[Report]:
    out = [sober.check_unit(s, subject=n) for n, s in corpus.spaces]
    small = [(n, s) for n, s in corpus.spaces if s.n <= 3]
    sobered = {name: sober.soberify(space) for name, space in small}
    bad = None
    maps_checked = 0
    for sname, src in small:
        for tname, tgt in small:
            for f in enumerate_continuous_maps(src, tgt, caps):
                tf = sober.soberify_map(f, sobered[sname], sobered[tname])
                left = compose(tf, sober.sober_unit(src, sobered[sname]))
                right = compose(sober.sober_unit(tgt, sobered[tname]), f)
                maps_checked += 1
                if left.assignment != right.assignment:
                    bad = f"unit naturality fails for a map {sname} -> {tname}"
                    break
            if bad:
                break
        if bad:
            break
    out.append(Report("prop-sober-i", f"unit-naturality({maps_checked} maps)", bad is None, bad))

    bad = None
    for name, space in corpus.spaces:
        sb = sober.soberify(space)
        ident = sober.soberify_map(identity_map(space), sb, sb)
        if ident.assignment != tuple(range(sb.space.n)):
            bad = f"{name}: identity not preserved"
            break
    composites = 0
    if bad is None:
        tiny = [(n, s) for n, s in corpus.spaces if s.n <= 2]
        for aname, a in tiny:
            for bname, b in tiny:
                homs_ab = enumerate_continuous_maps(a, b, caps)
                for cname, c in tiny:
                    for f in homs_ab:
                        tf = sober.soberify_map(f)
                        for g in enumerate_continuous_maps(b, c, caps):
                            composites += 1
                            if (
                                sober.soberify_map(compose(g, f)).assignment
                                != compose(sober.soberify_map(g), tf).assignment
                            ):
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
    out.append(Report("prop-sober-i", f"functor-laws({composites} pairs)", bad is None, bad))
    return out


def _claim_prop_sober_ii(corpus: Corpus, caps: Caps) -> list[Report]:
    return [sober.check_closed_set_bijection(s, subject=n) for n, s in corpus.spaces]


def _claim_prop_sober_iii(corpus: Corpus, caps: Caps) -> list[Report]:
    return [sober.check_sober(s, subject=n) for n, s in corpus.spaces]


def _claim_lemma_imconnect(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "lemma-imconnect"
    out = []
    for name, space in corpus.spaces:
        witness = None
        sb = sober.soberify(space)
        for block in connected_components(space).blocks_sorted():
            t_mask = 0
            for k, m in enumerate(sb.point_masks):
                if m & ~block == 0:
                    t_mask |= 1 << k
            if not is_connected_subset(sb.space, t_mask):
                witness = f"soberified component {space.labels_of(block)!r} disconnected"
                break
        if witness is None and space.n <= 3:
            # every connected subset stays connected after soberification
            for subset in range(1, space.full_mask + 1):
                if not is_connected_subset(space, subset):
                    continue
                t_mask = 0
                for k, m in enumerate(sb.point_masks):
                    if m & ~subset == 0:
                        t_mask |= 1 << k
                if not is_connected_subset(sb.space, t_mask):
                    witness = f"soberified subset {space.labels_of(subset)!r} disconnected"
                    break
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_thm_conn_component(corpus: Corpus, caps: Caps) -> list[Report]:
    return [sober.check_components_of_soberification(s, subject=n) for n, s in corpus.spaces]


def _claim_oracle_components(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "oracle-components"
    out = []
    for name, space in corpus.spaces:
        blocks = set(connected_components(space).blocks)
        witness = None
        if blocks != components_by_clopen_splitting(space):
            witness = "clopen-splitting oracle disagrees"
        elif blocks != components_by_comparability(space):
            witness = "comparability oracle disagrees"
        elif not all(is_connected_subset(space, b) for b in blocks):
            witness = "a block is not connected"
        out.append(Report(claim, name, witness is None, witness))
    return out


def _claim_oracle_topology_counts(corpus: Corpus, caps: Caps) -> list[Report]:
    claim = "oracle-topology-counts"
    out = []
    for n in range(1, corpus.config.max_points + 1):
        enumerated = {s.opens for _, s in corpus.spaces if s.n == n}
        brute = brute_force_topology_families(n)
        witness = None
        if enumerated != brute:
            witness = f"{len(enumerated)} enumerated vs {len(brute)} brute-force families"
        elif n in TOPOLOGY_COUNTS and len(enumerated) != TOPOLOGY_COUNTS[n]:
            witness = f"count {len(enumerated)} differs from expected {TOPOLOGY_COUNTS[n]}"
        out.append(Report(claim, f"{n}-point", witness is None, witness))
    return out


CLAIMS = {
    "lemma-bool-profinite": _claim_bool_profinite,
    "prop-correspond": _claim_prop_correspond,
    "cor-idemconnected": _claim_cor_idemconnected,
    "prop-goodlem": _claim_prop_goodlem,
    "cor-above": _claim_cor_above,
    "lemma-mrprofinite": _claim_lemma_mrprofinite,
    "thm-max-reg": _claim_thm_max_reg,
    "cor-coarser": _claim_cor_coarser,
    "thm-alternative": _claim_thm_alternative,
    "functor-laws": _claim_functor_laws,
    "prop-sober-i": _claim_prop_sober_i,
    "prop-sober-ii": _claim_prop_sober_ii,
    "prop-sober-iii": _claim_prop_sober_iii,
    "lemma-imconnect": _claim_lemma_imconnect,
    "thm-conn-component": _claim_thm_conn_component,
    "oracle-components": _claim_oracle_components,
    "oracle-topology-counts": _claim_oracle_topology_counts,
}

ALIASES = {
    "adjunction": ("thm-alternative",),
    "max-reg": ("thm-max-reg",),
    "sober": ("prop-sober-i", "prop-sober-ii", "prop-sober-iii"),
    "oracles": ("oracle-components", "oracle-topology-counts"),
}


def resolve_suite(selector: str) -> tuple[str, ...]:
    if selector == "all":
        return tuple(CLAIMS)
    if selector in CLAIMS:
        return (selector,)
    if selector in ALIASES:
        return ALIASES[selector]
    raise ValidationError(
        f"unknown suite {selector!r}; choose from: all, "
        + ", ".join(list(CLAIMS) + list(ALIASES))
    )


@dataclass(frozen=True)
class SuiteReport:
    selector: str
    config: CorpusConfig
    caps: Caps
    seed: int
    reports: tuple[Report, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def summary(self) -> dict:
        ok = sum(1 for r in self.reports if r.passed)
        return {"pass": ok, "fail": len(self.reports) - ok}

    def to_dict(self) -> dict:
        return {
            "suite": self.selector,
            "config": self.config.as_dict(),
            "caps": self.caps.as_dict(),
            "seed": self.seed,
            "summary": self.summary(),
            "claims": [r.to_dict() for r in self.reports],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def run_suite(
    corpus: Corpus,
    selector: str = "all",
    caps: Caps = DEFAULT_CAPS,
    seed: int = 0,
) -> SuiteReport:
    """Run the selected claims over the corpus; output order is canonical."""
    claim_ids = resolve_suite(selector)
    reports: list[Report] = []
    if corpus.spaces or corpus.rings or corpus.algebras:
        for claim_id in claim_ids:
            reports.extend(CLAIMS[claim_id](corpus, caps))
    reports.sort(key=lambda r: (r.claim, r.subject))
    return SuiteReport(selector, corpus.config, caps, seed, tuple(reports))
