from fractions import Fraction

import pytest

import evenlat

Q = [[-2, 0, 1, 0, 2, -1], [0, -6, -1, -4, 4, -5], [1, -1, -8, 6, 2, 0],
     [0, -4, 6, -16, 4, -2], [2, 4, 2, 4, -8, 6], [-1, -5, 0, -2, 6, -12]]


def test_snf_identity():
    s = evenlat.snf([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    assert s["invariant_factors"] == [2, 6, 12]


def test_rational_snf_of_inverse_q():
    s = evenlat.snf_rational(evenlat.inverse(Q))
    assert s["invariant_factors"] == [1, 1, Fraction(1, 2), Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]


def test_big_integers_survive():
    big = 10**40 + 7
    s = evenlat.snf([[big, 0], [0, 1]])
    assert s["invariant_factors"] == [1, big]


def test_discriminant_of_q():
    d = evenlat.disc(Q)
    assert d["invariant_factors"] == [2, 2, 4, 4]
    assert len(evenlat.isotropic(Q)) == 7
    assert len(evenlat.isotropic_subgroups(Q)) == 11


def test_named_lattices():
    t = evenlat.lattice("U+U(2)+<-4>^2")
    assert t["signature"] == (2, 4)
    assert t["det"] == 64
    assert t["even"]
    assert evenlat.are_isomorphic("U+U(2)+<-4>^2", Q, negate_second=True)


def test_embedding():
    e = evenlat.embed_check("U(2)+<-8>", [[1, 1, 1], [-1, 1, 0]])
    assert e == {"primitive": True, "gram": [[-4, 0], [0, -4]], "snf": [1, 1]}


def test_overlattices_of_u2():
    o = evenlat.overlattices([[0, 2], [2, 0]])
    assert [x["index"] for x in o] == [1, 2, 2]


def test_errors():
    with pytest.raises(evenlat.PreconditionError):
        evenlat.embed_check("U", [[1, 1], [2, 2]])
    with pytest.raises(evenlat.ParseError):
        evenlat.lattice("U+Nope")
    with pytest.raises(ValueError):
        evenlat.snf([[1, 2], [3]])


def test_guard(monkeypatch):
    monkeypatch.setenv("EVENLAT_GUARD_ORDER", "8")
    with pytest.raises(evenlat.GuardExceeded):
        evenlat.are_isomorphic(Q, Q)


def test_reconstruct_census():
    r = evenlat.reconstruct()
    assert r["tier"] == 2
    assert r["tier2_count"] == 2
    assert len(r["solutions"]) == 2


def test_verify():
    r = evenlat.verify(["q_isotropic"])
    assert r["schema"] == 1
    entry = r["entries"][0]
    assert entry["status"] == "pass"
    assert entry["witnesses"]["pairing_table"][0][0] == -5
    assert "reconstruction" in evenlat.result_ids()
    assert evenlat.verify(format="md").startswith("# Verification report")
