import pytest
from hypothesis import given, settings

from eqbrauer.abelian import AbelianGroup, torsion_part
from eqbrauer.catalog import load_catalog
from eqbrauer.solver import (
    InvalidCase,
    OracleCapExceeded,
    brauer_from_amitsur,
    brute_force,
    build_system,
    enumeration_size,
    schur_basis,
    schur_multiplier,
    solve,
)
from eqbrauer.strata import GroupSpec, PointOrbit, StratificationCase, Stratum

from strategies import small_cases


def G(*orders):
    return AbelianGroup.from_orders(orders)


@pytest.fixture(scope="module")
def catalog():
    return {e.label: e.payload for e in load_catalog()}


def k22(n, m):
    strata = (Stratum("a1", n, 0), Stratum("a2", n, 0), Stratum("b1", m, 0), Stratum("b2", m, 0))
    points = tuple(PointOrbit(f"p{i}{j}", ((f"a{i}", 1), (f"b{j}", 1))) for i in (1, 2) for j in (1, 2))
    return StratificationCase("k22", GroupSpec("CnxCm", (n, m)), strata, points)


EMPTY = StratificationCase("empty", GroupSpec("C2", (2,)))


class TestBuildSystem:
    def test_example_case(self, catalog):
        system = build_system(catalog["3.36"])
        assert len(system.variables) == 4
        assert system.N == 6
        assert set(system.moduli) == {3}

    def test_empty(self):
        system = build_system(EMPTY)
        assert system.variables == () and system.N == 1 and system.constraints == ()

    def test_mixed_orders(self, catalog):
        system = build_system(catalog["2.G44"])
        assert len(system.variables) == 12
        assert len(system.constraints) == 4 + 6
        assert system.N == 4

    def test_embedding_scale(self, catalog):
        # a |I|=2 variable sits inside Z/4 as multiples of 2
        system = build_system(catalog["2.G44"])
        for j, v in enumerate(system.variables):
            for row in system.constraints:
                assert row[j] % (system.N // v.modulus) == 0

    def test_invalid_case_rejected(self):
        bad = StratificationCase("bad", GroupSpec("C2", (2,)), (Stratum("a", 1, 0),))
        with pytest.raises(InvalidCase):
            build_system(bad)


class TestSolve:
    def test_example_case(self, catalog):
        r = solve(catalog["3.36"])
        assert r.total == G(3)
        assert r.per_n == {2: G(), 3: G(3)}

    def test_geiser(self, catalog):
        r = solve(catalog["2.G"])
        assert r.total == G(*[2] * 6)
        assert r.ramified_part.is_trivial()

    def test_mixed(self, catalog):
        assert solve(catalog["2.G44"]).total == G(2, 2, 4)

    @pytest.mark.parametrize("n,m", [(4, 6), (2, 5), (3, 3), (6, 9), (2, 2)])
    def test_k22_gives_gcd(self, n, m):
        from math import gcd

        assert solve(k22(n, m)).total == G(gcd(n, m))

    def test_empty(self):
        assert solve(EMPTY).total.is_trivial()

    def test_json_shape(self, catalog):
        j = solve(catalog["2.G44"]).to_json()
        assert j == {"label": "2.G44", "total": [2, 2, 4], "ramified": [2, 2, 4], "unramified": [],
                     "per_n": {"2": [2, 2, 2], "4": [2, 2, 4]}}


class TestBruteForce:
    def test_example_case(self, catalog):
        assert brute_force(catalog["3.36"]) == G(3)

    def test_empty(self):
        assert brute_force(EMPTY).is_trivial()

    def test_4222(self, catalog):
        assert enumeration_size(catalog["4.222"]) == 2**12
        assert brute_force(catalog["4.222"]) == G(2, 2, 2, 2)

    def test_cap_refuses(self, catalog):
        with pytest.raises(OracleCapExceeded):
            brute_force(catalog["3.36"], cap=80)

    @settings(max_examples=150, deadline=None)
    @given(small_cases())
    def test_matches_solver(self, case):
        r = solve(case)
        assert brute_force(case) == r.total
        for n, g in r.per_n.items():
            assert g == torsion_part(r.total, n)


class TestSchur:
    @pytest.mark.parametrize("n,m", [(4, 6), (2, 5), (3, 9)])
    def test_pair(self, n, m):
        from math import gcd

        assert schur_multiplier(GroupSpec("x", (n, m))) == G(gcd(n, m))

    def test_c2_fourth_power(self):
        assert schur_multiplier(GroupSpec("C2^4", (2, 2, 2, 2))) == G(*[2] * 6)

    def test_cyclic(self):
        assert schur_multiplier(GroupSpec("C7", (7,))).is_trivial()

    def test_basis_order(self):
        assert schur_basis(GroupSpec("x", (2, 4, 6))) == [(0, 1, 2), (0, 2, 2), (1, 2, 2)]

    def test_amitsur_quotients(self):
        assert brauer_from_amitsur(GroupSpec("C2xC4", (2, 4)), [[1]]).is_trivial()
        assert brauer_from_amitsur(GroupSpec("C2^3", (2, 2, 2)), []) == G(2, 2, 2)
        assert brauer_from_amitsur(GroupSpec("C3^2", (3, 3)), [[1]]).is_trivial()
        am = [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]]
        assert brauer_from_amitsur(GroupSpec("C2^4", (2, 2, 2, 2)), am) == G(2, 2, 2, 2)

    def test_amitsur_shape(self):
        from eqbrauer.abelian import InvalidInput

        with pytest.raises(InvalidInput):
            brauer_from_amitsur(GroupSpec("C2^3", (2, 2, 2)), [[1, 0]])
