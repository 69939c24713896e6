import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra import (
    ContinuousMap,
    FiniteSpace,
    Partition,
    clopen_generated_component_space,
    clopens,
    compose,
    connected_components,
    discrete_space,
    disjoint_union,
    enumerate_continuous_maps,
    enumerate_topologies,
    generate_topology,
    homeomorphic,
    identity_map,
    indiscrete_space,
    is_connected,
    is_connected_subset,
    is_hausdorff,
    is_profinite_finite,
    is_totally_disconnected,
    quotient_projection,
    quotient_topology,
    space_from_json,
    space_to_json,
    specialization_dot,
    validate_topology,
)
from spectra.caps import Caps
from spectra.errors import (
    CapExceeded,
    InvalidPartition,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotContinuous,
    ValidationError,
)
from spectra.topology import (
    components_by_clopen_splitting,
    components_by_comparability,
    space_to_json_dict,
    specialization_matrix,
)

from conftest import connected_by_clopen_scan


# ------------------------------------------------------------- validation --


def test_validate_rejects_duplicate_labels():
    with pytest.raises(ValidationError):
        validate_topology(["a", "a"], [[], ["a", "a"]])


def test_validate_requires_empty_and_full():
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(["a", "b"], [["a"], ["a", "b"]])
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(["a", "b"], [[], ["a"]])


def test_validate_union_closure_witness():
    with pytest.raises(NotClosedUnderUnion) as exc:
        validate_topology(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])
    assert set(exc.value.witness) == {("a",), ("b",)}


def test_validate_intersection_closure_witness():
    with pytest.raises(NotClosedUnderIntersection) as exc:
        validate_topology(
            ["a", "b", "c"], [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]]
        )
    assert set(exc.value.witness) == {("a", "b"), ("b", "c")}


def test_validate_accepts_masks_directly():
    space = validate_topology(["a", "b"], [0, 1, 3])
    assert space.opens == frozenset({0, 1, 3})


def test_one_point_space_is_forced():
    space = validate_topology(["x"], [[], ["x"]])
    assert space.opens == frozenset({0, 1})
    assert is_connected(space)


# ------------------------------------------------- closure and interior --


def test_sierpinski_closure_interior(sierpinski):
    # opens are {}, {a}, {a,b}: a is open and dense, b is closed
    assert sierpinski.closure(0b01) == 0b11
    assert sierpinski.closure(0b10) == 0b10
    assert sierpinski.interior(0b10) == 0
    assert sierpinski.interior(0b01) == 0b01
    assert sierpinski.is_open(0b01) and not sierpinski.is_open(0b10)
    assert sierpinski.is_closed(0b10) and not sierpinski.is_closed(0b01)


def test_chain3_closures(chain3):
    assert chain3.closure(0b001) == 0b111
    assert chain3.closure(0b010) == 0b110
    assert chain3.closure(0b100) == 0b100


def test_closure_is_monotone_idempotent(chain3):
    for m in range(8):
        c = chain3.closure(m)
        assert m & ~c == 0
        assert chain3.closure(c) == c


# --------------------------------------------------- generate_topology --


def test_generate_topology_from_subbasis():
    opens = generate_topology(0b1111, {0b0011, 0b0110})
    assert opens == frozenset({0, 0b0010, 0b0011, 0b0110, 0b0111, 0b1111})


def test_generate_topology_is_idempotent(two_chains):
    assert generate_topology(two_chains.full_mask, two_chains.opens) == two_chains.opens


@settings(max_examples=60, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=15), max_size=6))
def test_generate_topology_always_validates(family):
    opens = generate_topology(0b1111, family)
    space = FiniteSpace(("a", "b", "c", "d"), opens)
    assert space.full_mask == 0b1111


# ----------------------------------------------------------- components --


def test_clopens_of_disjoint_union(sierpinski):
    other = validate_topology(["c", "d"], [[], ["c"], ["c", "d"]])
    both = disjoint_union(sierpinski, other)
    assert clopens(both) == frozenset({0, 0b0011, 0b1100, 0b1111})
    assert not is_connected(both)
    parts = connected_components(both)
    assert set(parts.blocks) == {0b0011, 0b1100}


def test_connected_components_chain(chain3):
    assert is_connected(chain3)
    assert set(connected_components(chain3).blocks) == {0b111}


def test_components_three_routes_agree_small(caps):
    for n in (1, 2, 3):
        for space in enumerate_topologies(n, caps=caps):
            quasi = frozenset(connected_components(space).blocks)
            assert quasi == components_by_clopen_splitting(space)
            assert quasi == components_by_comparability(space)


def test_is_connected_subset_matches_subspace_scan(caps):
    for space in enumerate_topologies(3, caps=caps):
        for subset in range(8):
            assert is_connected_subset(space, subset) == connected_by_clopen_scan(
                space, subset
            )


def test_component_blocks_are_connected(two_chains):
    for block in connected_components(two_chains).blocks:
        assert is_connected_subset(two_chains, block)


# ----------------------------------------------------- quotients, maps --


def test_quotient_topology_of_components(two_chains):
    parts = connected_components(two_chains)
    q = quotient_topology(two_chains, parts)
    assert q.n == 2
    assert q.points == ("{a,b}", "{c,d}")
    proj = quotient_projection(two_chains, q, parts)
    assert proj.assignment == (0, 0, 1, 1)


def test_clopen_generated_component_space_is_discrete(two_chains, chain3):
    comp, proj = clopen_generated_component_space(two_chains)
    assert comp.n == 2 and len(comp.opens) == 4
    assert is_profinite_finite(comp)
    comp1, _ = clopen_generated_component_space(chain3)
    assert comp1.n == 1
    assert proj.assignment == (0, 0, 1, 1)


def test_partition_validation(two_chains):
    with pytest.raises(InvalidPartition):
        Partition(two_chains, (0b0011, 0b0110))
    with pytest.raises(InvalidPartition):
        Partition(two_chains, (0b0011,))


def test_continuity_validation(sierpinski):
    disc = discrete_space(["x", "y"])
    # sending the open point and closed point apart is not continuous into
    # the discrete space unless the source is disconnected
    with pytest.raises(NotContinuous):
        ContinuousMap(sierpinski, disc, (0, 1))
    ContinuousMap(sierpinski, disc, (0, 0))
    ContinuousMap(disc, sierpinski, (0, 1))


def test_compose_and_identity(chain3, sierpinski):
    f = ContinuousMap(chain3, sierpinski, (0, 0, 1))
    assert compose(identity_map(sierpinski), f).assignment == f.assignment
    assert compose(f, identity_map(chain3)).assignment == f.assignment


def test_preimage_image(sierpinski, chain3):
    f = ContinuousMap(chain3, sierpinski, (0, 0, 1))
    assert f.preimage(0b01) == 0b011
    assert f.image(0b110) == 0b11


def test_enumerate_continuous_maps_sierpinski(sierpinski, caps):
    maps = enumerate_continuous_maps(sierpinski, sierpinski, caps)
    assert len(maps) == 3
    assert [m.assignment for m in maps] == [(0, 0), (0, 1), (1, 1)]


def test_enumerate_continuous_maps_cap():
    tiny = Caps(max_map_candidates=3)
    disc = discrete_space(["x", "y"])
    with pytest.raises(CapExceeded):
        enumerate_continuous_maps(disc, disc, tiny)


def test_homeomorphic(sierpinski, caps):
    flipped = validate_topology(["u", "v"], [[], ["v"], ["u", "v"]])
    assert homeomorphic(sierpinski, flipped, caps)
    assert not homeomorphic(sierpinski, discrete_space(["x", "y"]), caps)
    assert not homeomorphic(sierpinski, indiscrete_space(["x", "y"]), caps)


# ----------------------------------------------------------- properties --


def test_separation_predicates(sierpinski):
    disc = discrete_space(["x", "y"])
    ind = indiscrete_space(["x", "y"])
    assert is_hausdorff(disc) and not is_hausdorff(sierpinski) and not is_hausdorff(ind)
    assert is_totally_disconnected(disc)
    assert not is_totally_disconnected(ind)
    assert is_profinite_finite(disc)
    assert not is_profinite_finite(sierpinski)


def test_empty_space_conventions():
    empty = FiniteSpace((), frozenset({0}))
    assert is_connected(empty)
    assert is_profinite_finite(empty)
    assert set(connected_components(empty).blocks) == set()


def test_specialization_matrix(chain3):
    # row i holds the points whose closure contains point i
    assert specialization_matrix(chain3) == (0b001, 0b011, 0b111)


# ---------------------------------------------------------- enumeration --


def test_enumerate_topologies_counts(caps):
    assert len(enumerate_topologies(1, caps=caps)) == 1
    assert len(enumerate_topologies(2, caps=caps)) == 4
    assert len(enumerate_topologies(3, caps=caps)) == 29


def test_enumerate_topologies_distinct_and_valid(caps):
    seen = set()
    for space in enumerate_topologies(3, caps=caps):
        assert space.points == ("a", "b", "c")
        assert space.opens not in seen
        seen.add(space.opens)


def test_enumerate_topologies_cap():
    with pytest.raises(CapExceeded):
        enumerate_topologies(5)


def test_enumerate_topologies_custom_labels(caps):
    spaces = enumerate_topologies(2, labels=["p", "q"], caps=caps)
    assert all(s.points == ("p", "q") for s in spaces)


# ------------------------------------------------------- serialization --


def test_json_round_trip(two_chains):
    text = space_to_json(two_chains)
    back = space_from_json(text)
    assert back.points == two_chains.points
    assert back.opens == two_chains.opens


def test_json_is_deterministic(two_chains):
    assert space_to_json(two_chains) == space_to_json(two_chains)
    data = json.loads(space_to_json(two_chains))
    assert sorted(data) == ["opens", "points"]


def test_json_dict_opens_sorted(chain3):
    data = space_to_json_dict(chain3)
    assert data["opens"] == [[], ["a"], ["a", "b"], ["a", "b", "c"]]


def test_dot_output(sierpinski):
    dot = specialization_dot(sierpinski)
    assert dot == 'digraph "space" {\n  "a";\n  "b";\n  "b" -> "a";\n}\n'


@settings(max_examples=40, deadline=None)
@given(st.sets(st.integers(min_value=0, max_value=7), max_size=4))
def test_random_spaces_round_trip(family):
    opens = generate_topology(0b111, family)
    space = FiniteSpace(("a", "b", "c"), opens)
    assert space_from_json(space_to_json(space)).opens == space.opens
