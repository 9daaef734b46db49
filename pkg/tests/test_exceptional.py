import pytest

from orbit_duality.errors import DatasetUnavailable, DomainError, IntegrityError
from orbit_duality.exceptional import (
    EXCEPTIONAL_GROUPS,
    EXPECTED_COUNTS,
    exceptional_dbar,
    load_group,
    load_path,
    parse_dataset,
    to_poset,
    validate_dataset,
)

G2_TEXT = """group G2
node G2 orbit=G2 class=1 special=1
node A2 orbit=G2(a1) class=A2 special=1
node 1 orbit=1 class=1 special=1
edge G2 A2
edge A2 1
dual G2 1
dual A2 A2
"""


@pytest.mark.parametrize("g", EXCEPTIONAL_GROUPS)
def test_counts_and_validation(g):
    ds = load_group(g)
    assert (len(ds.nodes), len(ds.special_ids)) == EXPECTED_COUNTS[g]
    assert validate_dataset(ds).passed


def test_f4_nonspecial_node():
    ds = load_group("F4")
    [boxed] = [n for n in ds.nodes if not n.special]
    assert (boxed.orbit, boxed.klass) == ("~A1", "2A1")


def test_g2_duals():
    assert exceptional_dbar("G2", "G2") == "1"
    assert exceptional_dbar("G2", "G2(a1)") == "G2(a1)"


@pytest.mark.parametrize("g", EXCEPTIONAL_GROUPS)
def test_dbar_cubed(g):
    ds = load_group(g)
    for nid in ds.ids:
        once = exceptional_dbar(ds, nid)
        assert exceptional_dbar(ds, exceptional_dbar(ds, once)) == once
        assert ds.leq(nid, exceptional_dbar(ds, once))


def test_f4_nonspecial_routes_through_minimal_special():
    ds = load_group("F4")
    above = [x for x in ds.above("2A1") if ds.node(x).special]
    minimal = [x for x in above if not any(y != x and x in ds.above(y) for y in above)]
    assert minimal == ["A1+~A1"]
    assert exceptional_dbar(ds, "2A1") == ds.duals["A1+~A1"] == "F4(a2)"


def test_unknown_group():
    with pytest.raises(DatasetUnavailable):
        load_group("H4")


def test_unknown_node():
    with pytest.raises(DomainError):
        exceptional_dbar("G2", "E8")


def test_load_path_round_trip(tmp_path):
    f = tmp_path / "mini.txt"
    f.write_text(G2_TEXT)
    ds = parse_dataset(G2_TEXT)
    assert len(ds.covers) == 2
    with pytest.raises(IntegrityError):  # counts differ from the full G2 diagram
        load_path(f)
    rep = validate_dataset(ds)
    assert [what for what, _, _ in rep.failures] == ["G2 counts (pairs, special)"]


def test_cycle_is_an_integrity_failure(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text(G2_TEXT + "edge 1 G2\n")
    rep = validate_dataset(parse_dataset(f.read_text()))
    assert not rep.passed and rep.failures[0][0] == "acyclic"
    with pytest.raises(IntegrityError):
        load_path(f)


def test_redundant_edge_detected():
    rep = validate_dataset(parse_dataset(G2_TEXT + "edge G2 1\n"))
    assert any(what.startswith("covers form") for what, _, _ in rep.failures)


@pytest.mark.parametrize("text", ["node x", "group G2\nedge a b\n", "group G2\nnode a orbit=a class=1 special=2\n"])
def test_malformed(text):
    with pytest.raises(IntegrityError):
        parse_dataset(text)


def test_missing_file(tmp_path):
    with pytest.raises(DatasetUnavailable):
        load_path(tmp_path / "absent.txt")


def test_to_poset():
    poset = to_poset(load_group("F4"))
    assert len(poset.labels) == 24 and not poset.special["2A1"]
    assert poset.name("2A1") == "(~A1,2A1)"
