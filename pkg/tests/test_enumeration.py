import pytest

from sigma_lab import enumeration as en
from sigma_lab.paths import sort_down
from sigma_lab.perms import all_perms, avoids, parse
from sigma_lab.series import Polynomial


def test_brute_examples():
    assert en.brute_sortable("321", 10) == 512
    assert en.brute_sortable("231", 5) == 102
    assert en.brute_sortable("132", 7) == 731


def test_budget():
    with pytest.raises(en.BudgetExceeded):
        en.brute_sortable("123", 11)
    with pytest.raises(en.BudgetExceeded):
        en.check_budget(12, extended=True)
    en.check_budget(11, extended=True)


@pytest.mark.parametrize("sigma", ["12", "21", "123", "132", "231", "321", "2413", "1324"])
def test_tree_matches_scan(sigma):
    for n in range(8):
        assert en.brute_sortable(sigma, n, "list") == en.brute_sortable(sigma, n, "list", method="scan")


def test_list_is_lexicographic():
    got = en.brute_sortable("123", 6, "list")
    assert got == sorted(got)


def test_parallel_matches_serial():
    for sigma in ("123", "231", "4321"):
        assert en.brute_sortable(sigma, 8, workers=2) == en.brute_sortable(sigma, 8, workers=1)
        assert en.brute_sortable(sigma, 7, "list", workers=3) == en.brute_sortable(sigma, 7, "list")


def test_workers_from_env(monkeypatch):
    monkeypatch.setenv("SIGMA_LAB_THREADS", "3")
    assert en.default_workers() == 3
    monkeypatch.delenv("SIGMA_LAB_THREADS")
    assert en.default_workers() == 1


def test_12_machine_catalan():
    for n in range(10):
        assert en.brute_sortable("12", n) == en.catalan_number(n)


@pytest.mark.parametrize("patterns", [["132", "123"], ["231"], ["2413", "3142"], ["1324", "54321"]])
def test_avoiders_match_scan(patterns):
    for n in range(8):
        want = [p for p in all_perms(n) if all(avoids(p, parse(q)) for q in patterns)]
        assert en.avoiders(patterns, n) == want
        assert en.av_count(patterns, n) == en.av_count(patterns, n, method="scan") == len(want)


def test_av_pair_examples():
    for n in range(1, 11):
        assert en.av_pair_count("132", "123", n) == 2 ** (n - 1)
    vals = [en.av_pair_count("132", parse("52134")[::-1], n) for n in range(1, 10)]
    assert vals == [1, 2, 5, 14, 41, 121, 355, 1033, 2986]
    assert en.av_pair_count("132", parse("32145")[::-1], 7) == 355


def test_catalan():
    assert en.catalan(4) == [1, 1, 2, 5, 14]
    assert en.catalan_number(10) == 16796
    assert en.catalan(30) == en.catalan_gf(30).coeffs


def test_a_sequence():
    # a_n = C_n - 2 C_{n-1} for n >= 2 puts the first 1 at n = 3
    a = en.a_seq(12)
    assert a[:9] == [0, 0, 0, 1, 4, 14, 48, 165, 572]
    assert a == en.a_gf(12).coeffs
    assert a == en.x_power_catalan_fourth(3, 12).coeffs
    assert en.a_gf(12).coeffs != en.x_power_catalan_fourth(2, 12).coeffs
    assert [en.a_brute(n) for n in range(10)] == a[:10]
    assert en.a_brute(5) == 14


def test_sort123_count():
    s = en.sort123_count(10)
    assert s[1] == 1 and s[3] == 5 and s[4] == 13
    assert s == en.sort123_gf(10).coeffs
    assert s == [en.brute_sortable("123", n) for n in range(11)]


def test_sort123_printed_gf_is_reciprocal_of_counts():
    x = en.PowerSeries.x(10)
    c = en.catalan_gf(10)
    assert ((1 - 2 * x + x * c) / ((1 - x) ** 2)).coeffs == en.sort123_count(10)
    assert any(v < 0 for v in en.sort123_gf_printed(10).coeffs)


def test_123_partition_identity():
    prev = en.brute_sortable("123", 0, "list")
    for n in range(1, 10):
        members = en.brute_sortable("123", n, "list")
        start_max = [p for p in members if p[0] == n]
        down = sort_down(n, members)
        down_ge2 = [p for p in down if p[0] != n]
        ascent = [p for p in members if n >= 2 and p[1] == p[0] + 1]
        assert len(start_max) == en.catalan_number(n - 1)
        assert set(start_max) == {p for p in en.avoiders(["213"], n) if p[0] == n}
        assert len(members) == len(start_max) + len(down_ge2) + len(ascent) if n >= 2 else True
        if n >= 2:
            assert len(ascent) == len(prev)
            prev_down = sort_down(n - 1, prev)
            assert len(down_ge2) == len(prev_down)
        prev = members


def test_catalan_polynomials():
    assert en.catalan_polynomial(0) == Polynomial([1]) == en.catalan_polynomial(1)
    assert en.catalan_polynomial(2) == Polynomial([1, -1])
    assert en.catalan_polynomial(3) == Polynomial([1, -2])
    for k in range(15):
        assert en.catalan_polynomial(k) == en.catalan_polynomial_closed(k)


def test_bounded_height():
    assert en.bounded_height_count(2, 10) == [1] + [2 ** (n - 1) for n in range(1, 11)]
    assert en.bounded_height_count(4, 7)[7] == 365
    assert en.bounded_height_count(6, 8)[8] == 1416
    for k in range(8):
        assert en.bounded_height_count(k, 14) == en.dyck_height_dp(k, 14)
    # the limit is the Catalan numbers
    assert en.bounded_height_count(12, 12) == en.catalan(12)


def test_expand_rational():
    P = Polynomial
    assert en.expand_rational(P([1, -1]), P([1, -2]), 6).coeffs == [1, 1, 2, 4, 8, 16, 32]
    assert en.expand_rational(P([1, -2]), P([1, -3, 1]), 8).coeffs == [1, 1, 2, 5, 13, 34, 89, 233, 610]
    # this row is printed from n = 1
    assert en.expand_rational(P([1, -3, 1]), P([1, -4, 3]), 8).coeffs[1:] == [1, 2, 5, 14, 41, 122, 365, 1094]
    with pytest.raises(ZeroDivisionError):
        en.expand_rational(P([1]), P([0, 1]), 3)


def test_sequence_report():
    r = en.SequenceReport("x", 2, [1, 4, 14], "formula")
    assert r.bfile() == "2 1\n3 4\n4 14"
    assert r.as_dict()["offset"] == 2
