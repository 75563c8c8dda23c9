import json
from fractions import Fraction

import pytest

from collineation.catalog import (
    DEGENERATE_CUBOID,
    CatalogEntry,
    cuboid_samples,
    entry_names,
    get_entry,
    load_catalog,
    reproduce_tables,
    table_entries,
)
from collineation.errors import MissingParameter, UnknownEntry
from collineation.nets import CuboidParams, cuboid_is_smooth
from collineation.scalars import GF
from collineation.tensors import Tensor3, is_concise

TABLE1 = [
    "III.1", "III.2", "III.ps", "IV.1(i)", "IV.1(ii)", "IV.1(iii)", "IV.2(i)", "IV.2(iii)", "IV.2(vi)",
    "IV.4(i)", "IV.4(ii)", "IV.4(iii)", "IV.5(i)", "IV.5(ii)", "IV.7(i)", "IV.ps",
    "V.1", "V.2", "V.3", "V.4", "V.5", "V.ps",
]
TABLE2 = [
    "I.1(i)", "I.1(ii)", "I.2(i)", "I.2(iii)", "I.3(i)", "I.3(iii)", "I.4(i)", "I.4(iii)", "I.5(i)", "I.5(iii)",
    "I.6(i)", "I.6(iii)", "I.7(i)", "I.7(ii)", "I.8", "I.10", "I.11(i)", "I.11(ii)", "I.14(i)", "I.14(iii)",
]


def test_every_table_row_present_once():
    assert [e.name for e in table_entries("table1")] == TABLE1
    assert [e.name for e in table_entries("table2")] == TABLE2
    names = entry_names()
    assert len(names) == len(set(names))
    assert {"unit", "T1", "T2", "cuboid"} <= set(names)


def test_coefficients_are_signs():
    for e in load_catalog():
        assert all(c in (-1, 0, 1) for *_, c in e.terms), e.name


def test_fixed_entries_are_concise():
    for e in load_catalog():
        if e.family or e.needs_lambda:
            continue
        assert is_concise(get_entry(e.name).tensor), e.name


@pytest.mark.parametrize("lam", [2, -3, Fraction(1, 2)])
def test_lambda_rows_are_concise(lam):
    for e in load_catalog():
        if e.needs_lambda:
            assert is_concise(get_entry(e.name, lam=lam).tensor)


def test_get_entry_examples():
    T = get_entry("IV.ps").tensor
    assert sorted(T.nonzero()) == [(0, 0, 0, 1), (1, 1, 1, 1), (2, 2, 2, 1)]
    T1 = get_entry("T1").tensor
    assert sorted((i, j, k) for i, j, k, _ in T1.nonzero()) == [(0, 0, 1), (1, 0, 0), (1, 1, 1), (2, 1, 2), (2, 2, 0)]
    V = get_entry("V.ps").tensor
    terms = V.nonzero()
    assert len(terms) == 6
    signs = {(i, j, k): v for i, j, k, v in terms}
    # an alternating sum over the six permutations: odd permutations carry the opposite sign
    assert signs[(0, 1, 2)] == signs[(1, 2, 0)] == signs[(2, 0, 1)] == -signs[(1, 0, 2)]


def test_family_parameters():
    e = get_entry("cuboid(1,0,1)")
    assert e.name == "cuboid(1,0,1)" and e.tensor.dims == (3, 3, 3)
    assert get_entry("cuboid", params=[1, 0, 1]).tensor == e.tensor
    assert get_entry("III.ps", lam="1/2").tensor == get_entry("III.ps", lam=Fraction(1, 2)).tensor


def test_lookup_errors():
    with pytest.raises(UnknownEntry):
        get_entry("IX.9")
    with pytest.raises(MissingParameter):
        get_entry("III.1")
    with pytest.raises(MissingParameter):
        get_entry("cuboid")


def test_entries_round_trip_through_json():
    for e in load_catalog():
        back = CatalogEntry.from_json_obj(json.loads(json.dumps(e.to_json_obj())))
        assert back == e


def test_tensors_round_trip_through_json():
    for entry in load_catalog():
        if entry.family:
            continue
        e = get_entry(entry.name, lam=2 if entry.needs_lambda else None)
        assert Tensor3.from_json(e.tensor.to_json()) == e.tensor


def test_entries_over_a_prime_field():
    T = get_entry("V.3", field=GF(7)).tensor
    assert T.field == GF(7)


def test_cuboid_samples_are_seeded_and_smooth():
    a = cuboid_samples(6, seed=4)
    assert a == cuboid_samples(6, seed=4)
    assert all(cuboid_is_smooth(CuboidParams(*p)) for p in a)
    assert not cuboid_is_smooth(CuboidParams(*DEGENERATE_CUBOID))


def test_reproduce_over_prime_field():
    report = reproduce_tables(field=GF(), n_cuboids=3)
    assert report["mismatches"] == 0 and report["ok"]
    names = {r["name"] for r in report["entries"]}
    assert "III.1[lambda=2]" in names and "III.1[lambda=-3]" in names
    assert set(TABLE2) <= names


def test_reproduce_flags_plane_entries_for_sigma3():
    report = reproduce_tables(field=GF(), n_cuboids=0)
    by_name = {(r["name"], r["factor"]): r for r in report["entries"]}
    assert by_name[("I.11(ii)", 1)]["got"] == "Plane"
    checks = {(c["name"], c["check"]) for c in report["strassen"]}
    assert ("I.11(ii)", "not sigma3 member") in checks
    assert ("unit", "rank == 6") in checks
