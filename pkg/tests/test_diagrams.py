import pytest

from pipedreams.diagrams import (
    Diagram,
    DiagramError,
    Kind,
    Tile,
    allowed_tiles,
    column_to_row_code,
    enumerate_structures,
    is_valid,
    trace,
    validate,
)
from pipedreams.permutations import Perm, symmetric_group
from pipedreams.pipedream import pd_from_crosses, pd_set

# The n=5 diagram of one-line 24513 whose pipes 3 and 5 meet twice:
# really at (3,2) and then fake at (2,3).
EX_24513 = "+b+bJ\n+b+J.\n++J..\nbJ...\nJ...."


def parse(kind, n, text):
    return Diagram.parse_text(kind, n, text)


class TestTiles:
    def test_glyphs(self):
        assert "".join(t.value for t in Tile) == ".-+JrbR"

    def test_connections(self):
        assert Tile.BLANK.connects == frozenset()
        assert Tile.HORIZONTAL.connects == frozenset("WE")
        assert Tile.CROSS.connects == frozenset("WESN")
        assert Tile.ELBOW_WN.connects == frozenset("WN")
        assert Tile.ELBOW_SE.connects == frozenset("SE")
        assert Tile.BUMP.connects == frozenset("WESN")
        assert Tile.MARKED_SE.connects == Tile.ELBOW_SE.connects


class TestRenderParse:
    def test_identity_pd(self):
        d = pd_from_crosses(2, frozenset())
        assert d.render_text() == "bJ\nJ."

    def test_single_cross_pd(self):
        d = pd_from_crosses(2, frozenset({(1, 1)}))
        assert d.render_text() == "+J\nJ."

    def test_empty_bvpd(self):
        d = parse(Kind.BVPD, 2, ".\n.")
        assert d.render_text() == ".\n."
        assert d.entering_rows == frozenset()

    @pytest.mark.parametrize("text", ["bJ\nJ.", "+J\nJ."])
    def test_round_trip(self, text):
        assert parse(Kind.PD, 2, text).render_text() == text

    def test_round_trip_enumerated(self):
        from pipedreams.mvpd import mvpd_set

        for n in (3, 4):
            for w in symmetric_group(n):
                for d in pd_set(w):
                    assert parse(Kind.PD, n, d.render_text()) == d
                for m in mvpd_set(w):
                    assert parse(Kind.MVPD, n, m.render_text()) == m

    def test_bad_character(self):
        with pytest.raises(DiagramError):
            parse(Kind.PD, 2, "bX\nJ.")

    def test_bad_shape(self):
        with pytest.raises(DiagramError):
            parse(Kind.PD, 2, "bJJ\nJ..")

    def test_json_round_trip(self):
        d = parse(Kind.PD, 5, EX_24513)
        assert Diagram.from_json(d.to_json()) == d
        assert d.to_json() == {
            "kind": "PD",
            "n": 5,
            "rows": ["+b+bJ", "+b+J.", "++J..", "bJ...", "J...."],
        }


class TestValidate:
    def test_all_bump_pd_is_valid(self):
        assert is_valid(pd_from_crosses(4, frozenset()))

    def test_bvpd_rejects_bump(self):
        d = Diagram(
            Kind.BVPD,
            3,
            ((Tile.BUMP, Tile.ELBOW_WN), (Tile.ELBOW_WN, Tile.BLANK), (Tile.BLANK,) * 2),
        )
        assert any("not allowed" in v for v in validate(d))

    def test_pd_region_is_forced(self):
        grid = [list(row) for row in pd_from_crosses(3, frozenset()).tiles]
        grid[2][2] = Tile.BUMP  # beyond the anti-diagonal
        d = Diagram(Kind.PD, 3, tuple(tuple(r) for r in grid))
        assert not is_valid(d)

    def test_edge_mismatch_reported(self):
        # A lone horizontal feeding into a blank.
        d = Diagram(
            Kind.MVPD,
            2,
            ((Tile.HORIZONTAL, Tile.BLANK), (Tile.BLANK, Tile.BLANK)),
        )
        assert any("east/west" in v for v in validate(d))

    def test_markable_elbow_accepts_a_mark(self):
        good = parse(Kind.MVPD, 4, "-JrJ\n--J.\n....\n....")
        assert is_valid(good)
        # Pipe 2 owns horizontals at (2,1) and (2,2), below row 1.
        assert validate(good.with_tiles({(1, 3): Tile.MARKED_SE})) == []

    def test_marked_without_lower_horizontal(self):
        # Pipe 2 turns at (2,1), climbs, and leaves; no horizontal anywhere.
        d = parse(Kind.MVPD, 3, "rJ.\nJ..\n...")
        assert is_valid(d)
        bad = d.with_tiles({(1, 1): Tile.MARKED_SE})
        assert any("no lower horizontal" in v for v in validate(bad))


class TestTrace:
    def test_worked_example(self):
        d = parse(Kind.PD, 5, EX_24513)
        tr = trace(d)
        assert tr.top_reading == (4, 1, 5, 2, 3)
        assert Perm(tr.top_reading).inverse == Perm.from_one_line([2, 4, 5, 1, 3])
        c_real = tr.crossings[(3, 2)]
        c_fake = tr.crossings[(2, 3)]
        assert {c_real.west, c_real.south} == {3, 5} and c_real.real
        assert {c_fake.west, c_fake.south} == {3, 5} and not c_fake.real

    def test_all_bump(self):
        tr = trace(pd_from_crosses(3, frozenset()))
        assert tr.top_reading == (1, 2, 3)
        assert not tr.crossings

    def test_two_by_two_cross(self):
        tr = trace(pd_from_crosses(2, frozenset({(1, 1)})))
        assert tr.top_reading == (2, 1)
        assert tr.crossings[(1, 1)].real

    def test_code(self):
        d = parse(Kind.BVPD, 4, "JrJ\n-J.\n...\n...")
        assert column_to_row_code(d).entries == (1, 0, 2)
        empty = Diagram(Kind.MVPD, 3, ((Tile.BLANK,) * 3,) * 3)
        assert column_to_row_code(empty).entries == (0, 0, 0)

    def test_real_crossing_pairs_unique(self):
        for w in symmetric_group(4):
            for d in pd_set(w):
                tr = trace(d)
                real = [c for c in tr.crossings.values() if c.real]
                pairs = [frozenset((c.west, c.south)) for c in real]
                assert len(pairs) == len(set(pairs))

    def test_max_rule_consistency(self):
        # At every real crossing the south label beats the west label.
        for w in symmetric_group(4):
            for d in pd_set(w):
                for c in trace(d).crossings.values():
                    assert (c.south > c.west) == c.real

    def test_paths_monotone_and_exit_top(self):
        for w in symmetric_group(4):
            for d in pd_set(w):
                tr = trace(d)
                assert set(tr.paths) == {1, 2, 3, 4}
                for label, steps in tr.paths.items():
                    rows = [s.row for s in steps]
                    cols = [s.col for s in steps]
                    assert all(a >= b for a, b in zip(rows, rows[1:]))
                    assert all(a <= b for a, b in zip(cols, cols[1:]))
                    assert steps[-1].leaves == "N" and steps[-1].row == 1
                assert sorted(tr.top_reading) == [1, 2, 3, 4]

    def test_crossed_before_entering_a_row(self):
        # Pipes a, b, c entering a row left to right: if {a,b} have not
        # crossed below but {a,c} have, then {b,c} have crossed below.
        for w in symmetric_group(4):
            for d in pd_set(w):
                tr = trace(d)
                real_cells = {
                    frozenset((c.west, c.south)): cell
                    for cell, c in tr.crossings.items()
                    if c.real
                }

                def crossed_below(p, q, row):
                    cell = real_cells.get(frozenset((p, q)))
                    return cell is not None and cell[0] > row

                for row in range(1, 5):
                    entering = sorted(
                        (s.col, label)
                        for label, steps in tr.paths.items()
                        for s in steps
                        if s.row == row and s.enters == "S"
                    )
                    labels = [label for _, label in entering]
                    for ia in range(len(labels)):
                        for ib in range(ia + 1, len(labels)):
                            for ic in range(ib + 1, len(labels)):
                                a, b, c = labels[ia], labels[ib], labels[ic]
                                if not crossed_below(a, b, row) and crossed_below(a, c, row):
                                    assert crossed_below(b, c, row)


class TestEnumerateStructures:
    def test_identity_mvpd_unique(self):
        out = list(enumerate_structures(Kind.MVPD, 3, frozenset()))
        assert len(out) == 1
        assert out[0].render_text() == "...\n...\n..."

    def test_empty_bvpd_grid(self):
        out = list(enumerate_structures(Kind.BVPD, 1, frozenset()))
        assert len(out) == 1
        assert out[0].cols == 0

    def test_structures_are_valid(self):
        for d in enumerate_structures(Kind.MVPD, 4, frozenset({1, 2})):
            assert is_valid(d)

    def test_pd_not_supported(self):
        with pytest.raises(ValueError):
            list(enumerate_structures(Kind.PD, 3, frozenset({1, 2, 3})))

    def test_alphabet_regions(self):
        assert allowed_tiles(Kind.PD, 3, 1, 1) == (Tile.CROSS, Tile.BUMP)
        assert allowed_tiles(Kind.PD, 3, 1, 3) == (Tile.ELBOW_WN,)
        assert allowed_tiles(Kind.MVPD, 3, 3, 3) == (Tile.BLANK,)
        assert Tile.MARKED_SE not in allowed_tiles(Kind.BVPD, 4, 1, 1)
