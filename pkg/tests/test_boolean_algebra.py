import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spectra import (
    Filter,
    all_ultrafilters,
    atoms,
    boolean_algebra,
    filter_generated,
    is_homomorphism,
    is_ultrafilter,
    powerset_algebra,
    principal_filter,
    stone_decomposition,
    stone_spectrum,
    validate_boolean_algebra,
    zmod,
)
from spectra.boolean_algebra import (
    algebra_from_json,
    algebra_to_json_dict,
    is_proper,
    spectrum_basic_open,
    subset_label,
)
from spectra.caps import Caps
from spectra.errors import AlgebraAxiomError, CapExceeded, NotAFilter
from spectra.rings import idempotent_algebra

from conftest import algebras_isomorphic, ultrafilters_by_scan


def tamper(table, i, j, value):
    rows = [list(r) for r in table]
    rows[i][j] = value
    return tuple(tuple(r) for r in rows)


# ------------------------------------------------------------ structure --


def test_powerset_labels_and_bounds():
    alg = powerset_algebra(2)
    assert alg.carrier == ("{}", "{0}", "{1}", "{0,1}")
    assert alg.bottom == 0 and alg.top == 3
    assert subset_label(0b101) == "{0,2}"


def test_powerset_tables_are_set_operations():
    alg = powerset_algebra(3)
    # indices are the subset masks themselves
    for x in range(8):
        for y in range(8):
            assert alg.join[x][y] == x | y
            assert alg.meet[x][y] == x & y
        assert alg.comp[x] == 0b111 ^ x
    validate_boolean_algebra(alg)


def test_powerset_cap():
    with pytest.raises(CapExceeded):
        powerset_algebra(3, Caps(max_powerset_carrier=4))


def test_validate_catches_broken_meet():
    alg = powerset_algebra(2)
    with pytest.raises(AlgebraAxiomError) as exc:
        boolean_algebra(
            alg.carrier, alg.join, tamper(alg.meet, 1, 2, 3), alg.comp, 0, 3
        )
    assert exc.value.law
    assert exc.value.witness


def test_validate_catches_broken_complement():
    alg = powerset_algebra(2)
    bad_comp = (3, 2, 1, 1)
    with pytest.raises(AlgebraAxiomError):
        boolean_algebra(alg.carrier, alg.join, alg.meet, bad_comp, 0, 3)


def test_two_element_algebra():
    alg = boolean_algebra(
        ["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 1]], [1, 0], 0, 1
    )
    assert atoms(alg) == (1,)
    assert stone_spectrum(alg).n == 1


def test_one_element_algebra_has_no_atoms():
    alg = boolean_algebra(["*"], [[0]], [[0]], [0], 0, 0)
    assert atoms(alg) == ()
    space = stone_spectrum(alg)
    assert space.n == 0
    assert all_ultrafilters(alg) == ()


def test_atoms_of_powerset():
    alg = powerset_algebra(3)
    assert atoms(alg) == (1, 2, 4)


# -------------------------------------------------------------- filters --


def test_principal_filter():
    alg = powerset_algebra(2)
    f = principal_filter(alg, 1)
    assert f.members == frozenset({1, 3})
    assert f.least() == 1
    assert is_proper(f)
    assert is_ultrafilter(f)


def test_filter_generated_is_up_set_of_meet():
    alg = powerset_algebra(3)
    f = filter_generated(alg, [0b011, 0b110])
    assert f.least() == 0b010
    assert f.members == frozenset({0b010, 0b011, 0b110, 0b111})


def test_not_a_filter():
    alg = powerset_algebra(2)
    with pytest.raises(NotAFilter):
        Filter(alg, frozenset({1}))  # top missing
    with pytest.raises(NotAFilter):
        Filter(alg, frozenset({1, 2, 3}))  # meet(1,2)=0 missing


def test_improper_filter_is_not_ultra():
    alg = powerset_algebra(2)
    everything = Filter(alg, frozenset(range(4)))
    assert not is_proper(everything)
    assert not is_ultrafilter(everything)
    coarse = principal_filter(alg, 3)
    assert is_proper(coarse) and not is_ultrafilter(coarse)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_ultrafilters_match_subset_scan_powerset(k):
    alg = powerset_algebra(k)
    structural = {f.members for f in all_ultrafilters(alg)}
    assert structural == ultrafilters_by_scan(alg)


def test_ultrafilters_match_subset_scan_ring_algebra():
    alg = idempotent_algebra(zmod(12))
    structural = {f.members for f in all_ultrafilters(alg)}
    assert structural == ultrafilters_by_scan(alg)


def test_is_ultrafilter_matches_maximality_scan():
    alg = powerset_algebra(3)
    proper = [
        f
        for f in (
            Filter(alg, members)
            for members in (
                frozenset({7}),
                frozenset({1, 3, 5, 7}),
                frozenset({3, 7}),
            )
        )
        if is_proper(f)
    ]
    ultra = ultrafilters_by_scan(alg)
    for f in proper:
        assert is_ultrafilter(f) == (f.members in ultra)


# ------------------------------------------------------ spectrum, Stone --


@pytest.mark.parametrize("k", [0, 1, 2, 3])
def test_stone_spectrum_is_discrete_with_atom_points(k):
    alg = powerset_algebra(k)
    space, ultra = stone_decomposition(alg)
    assert space.n == k
    assert len(space.opens) == 1 << k
    assert len(ultra) == k
    for f in ultra:
        assert is_ultrafilter(f)


def test_spectrum_basic_open_arithmetic():
    alg = powerset_algebra(2)
    space, ultra = stone_decomposition(alg)
    # the basic open at b collects ultrafilters not containing b
    assert spectrum_basic_open(alg, ultra, alg.bottom) == space.full_mask
    assert spectrum_basic_open(alg, ultra, alg.top) == 0
    for x in range(alg.n):
        for y in range(alg.n):
            assert spectrum_basic_open(alg, ultra, alg.meet[x][y]) == (
                spectrum_basic_open(alg, ultra, x) | spectrum_basic_open(alg, ultra, y)
            )


def test_carrier_size_is_power_of_two():
    for alg in (powerset_algebra(3), idempotent_algebra(zmod(30))):
        assert alg.n == 1 << len(atoms(alg))


def test_representation_onto_powerset_of_atoms():
    alg = idempotent_algebra(zmod(30))
    ats = atoms(alg)
    target = powerset_algebra(len(ats))
    assignment = []
    for b in range(alg.n):
        mask = 0
        for k, a in enumerate(ats):
            if alg.leq(a, b):
                mask |= 1 << k
        assignment.append(mask)
    assert sorted(assignment) == list(range(target.n))
    assert is_homomorphism(alg, target, assignment)
    assert algebras_isomorphic(alg, target)


def test_homomorphism_rejects_non_structure_map():
    alg = powerset_algebra(2)
    assert not is_homomorphism(alg, alg, (0, 2, 1, 1))


# --------------------------------------------------------------- laws --


@settings(max_examples=30, deadline=None)
@given(
    st.integers(min_value=0, max_value=7),
    st.integers(min_value=0, max_value=7),
    st.integers(min_value=0, max_value=7),
)
def test_de_morgan_and_distributivity(x, y, z):
    alg = powerset_algebra(3)
    assert alg.comp[alg.join[x][y]] == alg.meet[alg.comp[x]][alg.comp[y]]
    assert alg.meet[x][alg.join[y][z]] == alg.join[alg.meet[x][y]][alg.meet[x][z]]


# ------------------------------------------------------- serialization --


def test_algebra_json_round_trip():
    alg = idempotent_algebra(zmod(6))
    text = json.dumps(algebra_to_json_dict(alg), sort_keys=True)
    back = algebra_from_json(text)
    assert back.carrier == alg.carrier
    assert back.join == alg.join
    assert back.meet == alg.meet
    assert back.comp == alg.comp
    assert (back.bottom, back.top) == (alg.bottom, alg.top)
