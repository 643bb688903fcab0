import pytest

from pipedreams.diagrams import Kind, Tile, trace
from pipedreams.permutations import Perm, symmetric_group
from pipedreams.pipedream import (
    cross_cells,
    double_grothendieck,
    enumerate_all,
    grothendieck,
    max_cross_count,
    pd_from_crosses,
    pd_set,
    top_pd_set,
)
from pipedreams.polynomials import Poly, weight_factor_product

W2413 = Perm.from_one_line([2, 4, 1, 3])

# The three diagrams of 2413, identified by their cross cells.
CROSS_SETS_2413 = [
    {(1, 1), (2, 1), (2, 2)},
    {(1, 1), (2, 1), (1, 3)},
    {(1, 1), (2, 1), (2, 2), (1, 3)},
]


class TestEnumeration:
    def test_n2(self):
        idx = enumerate_all(2)
        assert idx.pds(Perm.identity(2)) == (pd_from_crosses(2, frozenset()),)
        assert idx.pds(Perm.from_one_line([2, 1])) == (
            pd_from_crosses(2, frozenset({(1, 1)})),
        )

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_filling_count(self, n):
        idx = enumerate_all(n)
        assert sum(len(v) for v in idx.by_perm.values()) == 2 ** (n * (n - 1) // 2)

    def test_2413_golden(self):
        ds = pd_set(W2413)
        assert len(ds) == 3
        assert {cross_cells(d) for d in ds} == {frozenset(s) for s in CROSS_SETS_2413}

    def test_singletons(self):
        assert len(pd_set(Perm.identity(4))) == 1
        w0 = Perm.from_one_line([4, 3, 2, 1])
        (d,) = pd_set(w0)
        assert all(t is Tile.CROSS for i, j, t in d.cells() if i + j <= 4)

    def test_bound(self):
        with pytest.raises(ValueError):
            enumerate_all(8)

    def test_cache_round_trip(self, tmp_path):
        import pipedreams.pipedream as pd_mod

        path = tmp_path / "pd3.jsonl"
        fresh = enumerate_all(3)
        pd_mod._INDEX_CACHE.pop(3)
        written = enumerate_all(3, cache_path=path)
        assert path.exists()
        pd_mod._INDEX_CACHE.pop(3)
        loaded = enumerate_all(3, cache_path=path)
        assert loaded.by_perm == written.by_perm == fresh.by_perm

    def test_membership_is_by_inverse_reading(self):
        for d in pd_set(W2413):
            assert Perm(trace(d).top_reading) == W2413.inverse

    def test_cross_cells_kind_check(self):
        from pipedreams.diagrams import Diagram

        m = Diagram(Kind.MVPD, 2, ((Tile.BLANK, Tile.BLANK),) * 2)
        with pytest.raises(ValueError):
            cross_cells(m)


class TestPolynomials:
    def test_2413(self):
        assert grothendieck(W2413).text() == "x1*x2^2 + x1^2*x2 - x1^2*x2^2"

    def test_identity(self):
        assert grothendieck(Perm.identity(3)) == Poly.one(3)
        assert double_grothendieck(Perm.identity(3)) == Poly.one(3)

    def test_321(self):
        assert grothendieck(Perm.from_one_line([3, 2, 1])).text() == "x1^2*x2"

    def test_double_21(self):
        assert double_grothendieck(Perm.from_one_line([2, 1])).text() == "x1 + y1 - x1*y1"

    def test_double_2413_matches_displayed_products(self):
        expected = (
            weight_factor_product(4, [(1, 1), (2, 1), (2, 2)])
            + weight_factor_product(4, [(1, 1), (2, 1), (1, 3)])
            - weight_factor_product(4, [(1, 1), (2, 1), (2, 2), (1, 3)])
        )
        assert double_grothendieck(W2413) == expected

    def test_sign_pattern(self):
        # Coefficient signs follow (-1)^(degree - inversions): no cancellation.
        for w in symmetric_group(4):
            ell = w.inversions()
            for m, c in grothendieck(w).items():
                assert c * (-1) ** (m.degree - ell) > 0

    def test_support_is_the_weight_multiset(self):
        for w in symmetric_group(4):
            weights = {
                tuple(
                    sum(1 for i, _ in cross_cells(d) if i == r) for r in range(1, 5)
                )
                for d in pd_set(w)
            }
            assert {m.x for m in grothendieck(w).support()} == weights

    def test_min_component_is_positive_of_degree_ell(self):
        for w in symmetric_group(4):
            low = grothendieck(w).min_degree_component()
            assert low.min_degree() == w.inversions()
            assert all(c > 0 for _, c in low.items())

    def test_double_specializes_to_single(self):
        for w in symmetric_group(4):
            assert double_grothendieck(w).substitute_y_zero() == grothendieck(w)


class TestDegreeStatistic:
    def test_2413(self):
        assert max_cross_count(W2413) == 4
        assert len(top_pd_set(W2413)) == 1

    def test_identity(self):
        assert max_cross_count(Perm.identity(4)) == 0

    def test_165234(self):
        w = Perm.from_one_line([1, 6, 5, 2, 3, 4])
        assert max_cross_count(w) == 9
        assert max_cross_count(w) == w.pipe_travel()

    def test_degree_of_the_polynomial(self):
        for w in symmetric_group(4):
            assert grothendieck(w).total_degree() == max_cross_count(w)
