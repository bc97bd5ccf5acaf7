import itertools

import pytest

import parkfact


def test_inversion_enumerator_n2():
    assert parkfact.inversion_enumerator(2) == {(0, 2): 1, (0, 3): 1, (1, 2): 1}
    assert parkfact.poly_to_string(parkfact.inversion_enumerator(2)) == "t^2 + t^3 + q*t^2"


def test_enumerators_agree_small_n():
    for n in range(5):
        I = parkfact.inversion_enumerator(n)
        assert parkfact.factorization_enumerator(list(range(n + 1))) == I
        assert parkfact.parking_enumerators(n)["pinv_copinv"] == I


def test_big_coefficients_are_python_ints():
    c = parkfact.catalan_qt(12)
    assert sum(c.values()) == 208012
    assert all(isinstance(v, int) for v in c.values())


def test_unimodal_cycles():
    cycles = parkfact.unimodal_cycles(4)
    assert len(cycles) == 8
    assert all(parkfact.is_unimodal(w) for w in cycles)
    assert not parkfact.is_unimodal([0, 1, 4, 3, 5, 2])


def test_parking_and_bounce():
    p = [1, 3, 1, 7, 0, 7, 0, 1, 4]
    assert parkfact.is_parking(p)
    assert parkfact.bounce(p) == 22
    assert parkfact.pinv_stats(p) == (8, 14)
    assert parkfact.theta_inverse(parkfact.theta(p)) == p
    brute = sum(
        1
        for a in itertools.product(range(3), repeat=3)
        if all(sorted(a)[i] <= i for i in range(3))
    )
    assert brute == 16


def test_worked_factorization():
    f = [(1, 2), (3, 5), (1, 3), (7, 8), (0, 6), (7, 9), (0, 7), (1, 6), (4, 5)]
    assert parkfact.lower(f) == [1, 3, 1, 7, 0, 7, 0, 1, 4]
    assert parkfact.upper(f) == [2, 5, 3, 8, 6, 9, 7, 6, 5]
    assert parkfact.areas(f) == (12, 15)
    assert parkfact.u_inverse(parkfact.upper(f), list(range(10))) == f
    assert parkfact.push_heights(parkfact.lower(f)) == parkfact.upper(f)


def test_l_inverse_tables():
    p = [2, 4, 0, 1, 4, 0]
    assert parkfact.l_inverse(p, list(range(7)), check_invariants=True) == [
        (2, 3), (4, 5), (0, 2), (1, 2), (4, 6), (0, 4)
    ]
    assert parkfact.l_inverse(p, [0, 2, 3, 5, 6, 4, 1]) == [
        (2, 3), (4, 5), (0, 2), (1, 5), (4, 6), (0, 5)
    ]
    with pytest.raises(ValueError):
        parkfact.l_inverse([0, 0, 1], [0, 2, 1, 3])


def test_arch_round_trip():
    sigma = [0, 2, 4, 5, 1, 3]
    f = [(1, 4), (1, 5), (3, 4), (0, 2), (0, 4)]
    arcs = parkfact.sigma_diagram(f, sigma)
    assert arcs == [(2, 4, 1), (3, 4, 2), (2, 5, 3), (0, 1, 4), (0, 2, 5)]
    assert parkfact.is_valid_arch(arcs)
    assert parkfact.caps(arcs) == [5, 3]
    assert len(parkfact.enumerate_factorizations([0, 1, 3, 2])) == 16


def test_suites():
    names = parkfact.suite_names()
    assert len(names) == 13
    for name in names:
        r = parkfact.run_suite(name, 3)
        assert r["passed"], r
