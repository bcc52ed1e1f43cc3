import pytest

import odkit


def test_primes():
    assert odkit.is_prime(619)
    assert not odkit.is_prime(621)
    assert odkit.primes_up_to(10) == [2, 3, 5, 7]
    assert odkit.prime_count(625) == 114
    assert odkit.legendre_exponent(5, 625) == 156
    with pytest.raises(odkit.DomainError):
        odkit.legendre_exponent(4, 10)


def test_partitions():
    assert odkit.partitions(4) == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert odkit.partition_count(10) == 42


def test_graph_and_pattern():
    g = odkit.graph("Alt(10)")
    assert g["vertices"] == [2, 3, 5, 7]
    assert g["edges"] == [[2, 3], [2, 5], [3, 5], [3, 7]]
    d = odkit.degree_pattern("Alt(10)")
    assert d == {"primes": [2, 3, 5, 7], "degrees": [2, 3, 2, 1]}
    assert odkit.order("Alt(5)") == {2: 2, 3: 1, 5: 1}
    assert odkit.dot("Sym(5)").startswith("graph GK {")


def test_expressions():
    e = odkit.GroupExpr.parse("Alt(624)  x Ab(5, [4])")
    assert str(e) == "Alt(624) x Ab(5,[4])"
    assert e == odkit.GroupExpr.alt(624) * odkit.GroupExpr.abelian(5, [4])
    assert odkit.same_od("Alt(625)", e)
    assert not odkit.same_od("Alt(625)", "Sym(625)")
    with pytest.raises(odkit.ParseError):
        odkit.GroupExpr.parse("Alt(5")
    with pytest.raises(odkit.ResourceError):
        odkit.degree_pattern("Alt(3000000)", sieve_limit=1_000_000)


def test_search_and_verify():
    rows = odkit.search(10)
    assert rows["qualifying_alphas"] == [4, 6, 10]
    assert odkit.check_candidate(2)["reason"] == "p+4 = 23 is prime"
    r = odkit.verify(4)
    assert r["pass"] is True
    assert r["p"] == 619
    assert r["od_class_size_lower_bound"] == 6
    with pytest.raises(odkit.NonQualifyingError):
        odkit.verify(2)


def test_od_class():
    members = odkit.od_class(4, "alt")
    assert len(members) == 6
    assert members[0] == "Alt(625)"
    with pytest.raises(odkit.DomainError):
        odkit.od_class(4, "cyclic")
